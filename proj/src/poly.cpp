#include "swanson/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace swanson::linalg {

namespace {

constexpr double kAberthPhaseOffset = 0.37;  // breaks root-configuration symmetry

void require_valid(const MonicPoly& p, const char* where) {
    if (p.degree() < 1) throw InputError(std::string(where) + ": degree must be >= 1");
    for (Complex c : p.coeffs) {
        if (!is_finite(c)) throw InputError(std::string(where) + ": non-finite coefficient");
    }
}

}  // namespace

Complex MonicPoly::eval(Complex z) const {
    Complex v = 1.0;
    for (int k = degree() - 1; k >= 0; --k) v = v * z + coeffs[static_cast<std::size_t>(k)];
    return v;
}

std::pair<Complex, Complex> MonicPoly::eval_with_derivative(Complex z) const {
    Complex v = 1.0;
    Complex d = 0.0;
    for (int k = degree() - 1; k >= 0; --k) {
        d = d * z + v;
        v = v * z + coeffs[static_cast<std::size_t>(k)];
    }
    return {v, d};
}

MonicPoly monic_from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};  // highest order first while building
    for (Complex r : roots) {
        c.push_back(Complex{0.0, 0.0});
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= r * c[k - 1];
    }
    std::reverse(c.begin(), c.end());
    c.pop_back();  // drop the leading 1
    return MonicPoly{std::move(c)};
}

double cauchy_bound(const MonicPoly& p) {
    double m = 0.0;
    for (Complex c : p.coeffs) m = std::max(m, std::abs(c));
    return 1.0 + m;
}

MonicPoly char_poly(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0 || n > 16) throw InputError("char_poly: dimension must be in [1, 16]");
    if (!m.all_finite()) throw InputError("char_poly: non-finite matrix entry");

    // Faddeev-LeVerrier: B_1 = M, c_{n-1} = -tr B_1;
    // B_k = M (B_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(B_k) / k.
    std::vector<Complex> c(n, Complex{0.0, 0.0});
    ComplexMatrix b = m;
    c[n - 1] = -b.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        ComplexMatrix shifted = b;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        b = m * shifted;
        c[n - k] = -b.trace() / static_cast<double>(k);
    }
    return MonicPoly{std::move(c)};
}

namespace {

struct AberthState {
    std::vector<Complex> z;
    std::vector<double> residual;
};

AberthState run_aberth(const MonicPoly& p, double tol, int max_iter) {
    const int n = p.degree();
    const double radius = cauchy_bound(p);
    AberthState st;
    st.z.resize(static_cast<std::size_t>(n));
    st.residual.assign(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
            kAberthPhaseOffset;
        st.z[static_cast<std::size_t>(k)] = radius * Complex{std::cos(angle), std::sin(angle)};
    }

    std::vector<bool> stalled(static_cast<std::size_t>(n), false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_stalled = true;
        for (int k = 0; k < n; ++k) {
            const std::size_t ku = static_cast<std::size_t>(k);
            if (stalled[ku]) continue;
            const Complex zk = st.z[ku];
            const auto [pv, dv] = p.eval_with_derivative(zk);
            if (pv == Complex{0.0, 0.0}) {
                stalled[ku] = true;
                continue;
            }
            Complex w;
            if (dv == Complex{0.0, 0.0}) {
                // Flat spot: nudge off it deterministically.
                w = Complex{tol + 1e-12, tol + 1e-12};
            } else {
                w = pv / dv;
            }
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                const Complex diff = zk - st.z[static_cast<std::size_t>(j)];
                if (diff != Complex{0.0, 0.0}) repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - w * repulsion;
            const Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
            st.z[ku] = zk - step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                     (1.0 + std::abs(st.z[ku]))) {
                stalled[ku] = true;
            } else {
                all_stalled = false;
            }
        }
        if (all_stalled) break;
    }
    for (int k = 0; k < n; ++k) {
        st.residual[static_cast<std::size_t>(k)] = std::abs(p.eval(st.z[static_cast<std::size_t>(k)]));
    }
    return st;
}

// Newton polish; only safe for roots whose nearest neighbour is well separated,
// otherwise distinct iterates can collapse onto one member of a tight cluster.
Complex newton_polish(const MonicPoly& p, Complex z) {
    double best_res = std::abs(p.eval(z));
    for (int i = 0; i < 8; ++i) {
        const auto [pv, dv] = p.eval_with_derivative(z);
        if (dv == Complex{0.0, 0.0}) break;
        const Complex next = z - pv / dv;
        const double res = std::abs(p.eval(next));
        if (!is_finite(next) || res >= best_res) break;
        z = next;
        best_res = res;
    }
    return z;
}

std::vector<std::vector<std::size_t>> connected_groups(const std::vector<Complex>& z,
                                                       double radius) {
    const std::size_t n = z.size();
    std::vector<int> group(n, -1);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        group[i] = static_cast<int>(groups.size());
        std::vector<std::size_t> members;
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (std::size_t b = 0; b < n; ++b) {
                if (group[b] < 0 && std::abs(z[a] - z[b]) <= radius) {
                    group[b] = group[i];
                    stack.push_back(b);
                }
            }
        }
        groups.push_back(std::move(members));
    }
    return groups;
}

bool has_real_coefficients(const MonicPoly& p) {
    double scale = 1.0;
    for (Complex c : p.coeffs) scale = std::max(scale, std::abs(c));
    for (Complex c : p.coeffs) {
        if (std::abs(c.imag()) > 64.0 * std::numeric_limits<double>::epsilon() * scale)
            return false;
    }
    return true;
}

}  // namespace

std::vector<Complex> poly_roots(const MonicPoly& p, double tol, int max_iter) {
    require_valid(p, "poly_roots");
    if (!(tol > 0.0)) throw InputError("poly_roots: tol must be positive");
    if (max_iter < 1) throw InputError("poly_roots: max_iter must be >= 1");

    if (p.degree() == 1) return {-p.coeffs[0]};

    AberthState st = run_aberth(p, tol, max_iter);

    // Polish only well-separated roots; tight clusters are handled by snapping.
    const double sep = default_snap_radius(p);
    for (std::size_t k = 0; k < st.z.size(); ++k) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < st.z.size(); ++j) {
            if (j != k) nearest = std::min(nearest, std::abs(st.z[k] - st.z[j]));
        }
        if (nearest > sep) {
            st.z[k] = newton_polish(p, st.z[k]);
            st.residual[k] = std::abs(p.eval(st.z[k]));
        }
    }

    const double budget = tol * std::pow(1.0 + cauchy_bound(p), p.degree());
    for (std::size_t k = 0; k < st.z.size(); ++k) {
        if (!(st.residual[k] <= budget)) {
            throw NumericalFailure("poly_roots: Aberth iteration did not meet the residual bound",
                                   st.z, st.residual);
        }
    }
    return st.z;
}

double default_snap_radius(const MonicPoly& p) {
    return 1e-6 * (1.0 + cauchy_bound(p));
}

std::vector<Complex> snap_root_clusters(const MonicPoly& p, std::vector<Complex> roots,
                                        double snap_radius) {
    for (const auto& group : connected_groups(roots, snap_radius)) {
        if (group.size() < 2) continue;
        Complex mean = 0.0;
        for (std::size_t i : group) mean += roots[i];
        mean /= static_cast<double>(group.size());
        for (std::size_t i : group) roots[i] = mean;
    }

    if (has_real_coefficients(p)) {
        // Roots of a real polynomial come in conjugate pairs; symmetrize.
        for (Complex& z : roots) {
            if (std::abs(z.imag()) <= snap_radius) z = Complex{z.real(), 0.0};
        }
        std::vector<bool> used(roots.size(), false);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i] || roots[i].imag() == 0.0) continue;
            std::size_t best = i;
            double best_dist = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j == i || used[j] || roots[j].imag() == 0.0) continue;
                const double d = std::abs(std::conj(roots[i]) - roots[j]);
                if (d < best_dist) {
                    best_dist = d;
                    best = j;
                }
            }
            if (best != i && best_dist <= snap_radius) {
                const Complex half = 0.5 * (roots[i] + std::conj(roots[best]));
                roots[i] = half;
                roots[best] = std::conj(half);
                used[i] = used[best] = true;
            }
        }
    }
    return roots;
}

Complex discriminant_quartic(const MonicPoly& p) {
    require_valid(p, "discriminant_quartic");
    if (p.degree() != 4) throw InputError("discriminant_quartic: degree must be 4");
    const Complex a = p.coeffs[3];
    const Complex b = p.coeffs[2];
    const Complex c = p.coeffs[1];
    const Complex d = p.coeffs[0];
    const Complex z = 0.0;
    // Sylvester matrix of p and p' (3 rows of p, 4 rows of p', high order first).
    const ComplexMatrix syl{
        {Complex{1.0}, a, b, c, d, z, z},
        {z, Complex{1.0}, a, b, c, d, z},
        {z, z, Complex{1.0}, a, b, c, d},
        {Complex{4.0}, 3.0 * a, 2.0 * b, c, z, z, z},
        {z, Complex{4.0}, 3.0 * a, 2.0 * b, c, z, z},
        {z, z, Complex{4.0}, 3.0 * a, 2.0 * b, c, z},
        {z, z, z, Complex{4.0}, 3.0 * a, 2.0 * b, c},
    };
    // disc = (-1)^(n(n-1)/2) Res(p, p') / lc(p) = +Res for a monic quartic.
    return determinant(syl);
}

}  // namespace swanson::linalg
