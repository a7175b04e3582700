// poly.hpp — Monic complex polynomials: characteristic polynomial via the
// Faddeev-LeVerrier trace recursion, Aberth-Ehrlich simultaneous root finding,
// and the quartic discriminant through the 7x7 Sylvester resultant.

#pragma once

#include <utility>
#include <vector>

#include "swanson/complex_linalg.hpp"

namespace swanson::linalg {

// Monic polynomial lambda^degree + c[degree-1] lambda^(degree-1) + ... + c[0].
// Coefficients are stored lowest order first; the leading 1 is implicit.
struct MonicPoly {
    std::vector<Complex> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()); }
    Complex eval(Complex z) const;
    // Value and first derivative in one Horner pass.
    std::pair<Complex, Complex> eval_with_derivative(Complex z) const;
};

// Expand prod (lambda - r_i) to a monic polynomial.
MonicPoly monic_from_roots(const std::vector<Complex>& roots);

// Cauchy root bound for a monic polynomial: 1 + max |c_k|.
double cauchy_bound(const MonicPoly& p);

// det(lambda I - m) by the Faddeev-LeVerrier trace recursion; no root finding.
// Requires m square with size() <= 16 and finite entries.
MonicPoly char_poly(const ComplexMatrix& m);

// All `degree` roots (with multiplicity) by Aberth-Ehrlich simultaneous iteration.
// Initial guesses sit on the circle of radius cauchy_bound(p) with a fixed 0.37 rad
// phase offset; well-separated roots get a final Newton polish. Each returned root
// satisfies |p(root)| <= tol * (1 + cauchy_bound(p))^degree, else NumericalFailure
// (carrying the best iterates and residuals) is thrown.
std::vector<Complex> poly_roots(const MonicPoly& p, double tol = 1e-12, int max_iter = 200);

// Discriminant of a monic quartic: the resultant of p and p' as the determinant of
// the 7x7 Sylvester matrix. Equals prod_{i<j} (r_i - r_j)^2.
Complex discriminant_quartic(const MonicPoly& p);

// Distance below which two computed roots cannot be told apart from a true
// multiple root at working precision.
double default_snap_radius(const MonicPoly& p);

// Collapse root groups that are indistinguishable at working precision: connected
// components of pairwise distance <= snap_radius are replaced by their arithmetic
// mean (first-order accurate for a true multiple root, and sum-preserving), and for
// real-coefficient polynomials the multiset is conjugate-symmetrized. Roots left
// unsnapped are returned untouched.
std::vector<Complex> snap_root_clusters(const MonicPoly& p, std::vector<Complex> roots,
                                        double snap_radius);

}  // namespace swanson::linalg
