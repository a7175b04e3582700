#include "swanson/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace swanson::linalg {

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace {

void require_finite(const ComplexMatrix& m, const char* where) {
    if (!m.all_finite()) {
        throw InputError(std::string(where) + ": non-finite matrix entry");
    }
}

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.size() != b.size()) {
        throw InputError(std::string(where) + ": dimension mismatch");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
    if (n_ == 0 || a_.size() != n_ * n_) {
        throw InputError("ComplexMatrix: entry count does not match dimension");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    n_ = rows.size();
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw InputError("ComplexMatrix: ragged initializer");
        }
        a_.insert(a_.end(), row.begin(), row.end());
    }
    if (n_ == 0) {
        throw InputError("ComplexMatrix: empty initializer");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](Complex z) { return is_finite(z); });
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_size(a, b, "operator+");
    require_finite(a, "operator+");
    require_finite(b, "operator+");
    ComplexMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_size(a, b, "operator-");
    require_finite(a, "operator-");
    require_finite(b, "operator-");
    ComplexMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    if (!is_finite(s)) throw InputError("scalar multiply: non-finite scalar");
    require_finite(a, "scalar multiply");
    ComplexMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = s * a(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_size(a, b, "operator*");
    require_finite(a, "operator*");
    require_finite(b, "operator*");
    const std::size_t n = a.size();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(j, i);
    return out;
}

double norm2(const ComplexVector& v) {
    double s = 0.0;
    for (Complex z : v) s += std::norm(z);
    return std::sqrt(s);
}

ComplexVector normalized(const ComplexVector& v) {
    const double n = norm2(v);
    if (n == 0.0) throw InputError("normalized: zero vector");
    ComplexVector out(v);
    for (Complex& z : out) z /= n;
    return out;
}

Complex dot(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v) {
    if (v.size() != m.size()) throw InputError("apply: dimension mismatch");
    ComplexVector out(m.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

namespace {

// Row echelon form with partial pivoting. Columns whose best remaining pivot is
// at or below `threshold` are recorded as free and skipped (never divided by).
struct Echelon {
    ComplexMatrix u;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
    int swap_parity = 0;
};

Echelon eliminate(const ComplexMatrix& m, double threshold) {
    Echelon e{m, {}, {}, 0};
    const std::size_t n = m.size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = row;
        double best_mag = row < n ? std::abs(e.u(row, col)) : 0.0;
        for (std::size_t i = row + 1; i < n; ++i) {
            const double mag = std::abs(e.u(i, col));
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (row >= n || best_mag <= threshold) {
            e.free_cols.push_back(col);
            continue;
        }
        if (best != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(e.u(row, j), e.u(best, j));
            e.swap_parity ^= 1;
        }
        const Complex pivot = e.u(row, col);
        for (std::size_t i = row + 1; i < n; ++i) {
            const Complex factor = e.u(i, col) / pivot;
            if (factor == Complex{0.0, 0.0}) continue;
            e.u(i, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) e.u(i, j) -= factor * e.u(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

int rank(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0)) throw InputError("rank: tol must be positive");
    require_finite(m, "rank");
    const Echelon e = eliminate(m, tol * m.inf_norm());
    return static_cast<int>(e.pivot_cols.size());
}

std::vector<ComplexVector> null_space(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0)) throw InputError("null_space: tol must be positive");
    require_finite(m, "null_space");
    const std::size_t n = m.size();
    const Echelon e = eliminate(m, tol * m.inf_norm());
    std::vector<ComplexVector> basis;
    basis.reserve(e.free_cols.size());
    for (std::size_t f : e.free_cols) {
        ComplexVector v(n, Complex{0.0, 0.0});
        v[f] = 1.0;
        // Back-substitute the pivot variables, bottom row first.
        for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_cols[r];
            Complex s = 0.0;
            for (std::size_t j = pc + 1; j < n; ++j) s += e.u(r, j) * v[j];
            v[pc] = -s / e.u(r, pc);
        }
        basis.push_back(std::move(v));
    }
    // Modified Gram-Schmidt.
    std::vector<ComplexVector> out;
    for (ComplexVector& v : basis) {
        for (const ComplexVector& q : out) {
            const Complex proj = dot(q, v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q[i];
        }
        const double len = norm2(v);
        if (len > 0.0) {
            for (Complex& z : v) z /= len;
            out.push_back(std::move(v));
        }
    }
    return out;
}

Complex determinant(const ComplexMatrix& m) {
    require_finite(m, "determinant");
    const Echelon e = eliminate(m, 0.0);
    if (!e.free_cols.empty()) return Complex{0.0, 0.0};
    Complex det = e.swap_parity ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) det *= e.u(r, e.pivot_cols[r]);
    return det;
}

MatchResult best_assignment(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw InputError("best_assignment: size mismatch");
    const std::size_t n = a.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    MatchResult best;
    best.total_cost = std::numeric_limits<double>::infinity();
    std::vector<int> perm = idx;
    do {
        double total = 0.0;
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::abs(a[i] - b[perm[i]]);
            total += d;
            worst = std::max(worst, d);
        }
        if (total < best.total_cost) {
            best.total_cost = total;
            best.max_pair_dist = worst;
            best.perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace swanson::linalg
