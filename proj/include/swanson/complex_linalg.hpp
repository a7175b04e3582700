// complex_linalg.hpp — Dense complex matrices/vectors for small n, with the
// elimination-based rank and null-space routines the spectral analysis rests on.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "swanson/errors.hpp"

namespace swanson::linalg {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

bool is_finite(Complex z) noexcept;

// Square n x n complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0, 0.0}) {}
    ComplexMatrix(std::size_t n, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    const std::vector<Complex>& entries() const noexcept { return a_; }

    Complex trace() const;
    double inf_norm() const;  // max absolute row sum
    bool all_finite() const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix transpose(const ComplexMatrix& a);

// Euclidean norm, normalization, inner product for ComplexVector.
double norm2(const ComplexVector& v);
ComplexVector normalized(const ComplexVector& v);
Complex dot(const ComplexVector& a, const ComplexVector& b);  // conjugate-linear in a
ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v);

// Numerical rank via Gaussian elimination with partial (largest-modulus row) pivoting.
// A pivot counts iff its modulus exceeds tol * inf_norm(m); columns whose best pivot
// fails the threshold are skipped without elimination.
int rank(const ComplexMatrix& m, double tol);

// Orthonormal basis (modified Gram-Schmidt) of the numerical kernel; returns
// size() - rank(m, tol) vectors, each with ||m v|| <= 10 * tol * inf_norm(m).
std::vector<ComplexVector> null_space(const ComplexMatrix& m, double tol);

// Determinant via LU with partial pivoting (used by the Sylvester resultant).
Complex determinant(const ComplexMatrix& m);

// Minimal-total-distance perfect matching between two equal-length lists,
// exhaustive over permutations (lists are at most a handful of eigenvalues).
struct MatchResult {
    std::vector<int> perm;   // b[perm[i]] is matched to a[i]
    double total_cost = 0.0;
    double max_pair_dist = 0.0;
};
MatchResult best_assignment(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace swanson::linalg
