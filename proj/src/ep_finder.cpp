#include "swanson/ep_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swanson::ep {

using swanson::DomainError;
using swanson::InputError;
using swanson::NumericalFailure;
using linalg::EigCluster;
using linalg::EigOptions;
using linalg::MonicPoly;

const char* to_string(TransitionKind kind) noexcept {
    switch (kind) {
        case TransitionKind::RealComplexTransition: return "RealComplexTransition";
        case TransitionKind::Degeneracy: return "Degeneracy";
        case TransitionKind::ExceptionalPoint: return "ExceptionalPoint";
    }
    return "?";
}

CoalescenceMetrics coalescence_metrics(const Spectrum& spec) {
    if (spec.size() != 4) throw InputError("coalescence_metrics: expected 4 eigenvalues");
    CoalescenceMetrics m;
    std::size_t g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        m.max_abs_im = std::max(m.max_abs_im, std::abs(spec.eigenvalues[i].imag()));
        for (std::size_t j = i + 1; j < 4; ++j) {
            m.gaps[g++] = std::abs(spec.eigenvalues[i] - spec.eigenvalues[j]);
        }
    }
    std::sort(m.gaps.begin(), m.gaps.end());
    m.min_gap = m.gaps.front();
    return m;
}

int geometric_multiplicity(const ComplexMatrix& m, Complex lambda, double tol) {
    ComplexMatrix shifted = m;
    for (std::size_t i = 0; i < m.size(); ++i) shifted(i, i) -= lambda;
    return static_cast<int>(m.size()) - linalg::rank(shifted, tol);
}

int jordan_chain_length(const ComplexMatrix& m, Complex lambda, double tol) {
    if (!(tol > 0.0)) throw InputError("jordan_chain_length: tol must be positive");
    if (m.size() != 4) throw InputError("jordan_chain_length: expected a 4x4 matrix");

    const MonicPoly p = linalg::char_poly(m);
    const double radius = linalg::cluster_radius(p, 1e-12);
    for (Complex root : linalg::poly_roots(p)) {
        if (std::abs(root - lambda) > radius) {
            throw DomainError(
                "jordan_chain_length: lambda must carry full algebraic multiplicity");
        }
    }

    ComplexMatrix shifted = m;
    for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= lambda;
    const double norm = shifted.inf_norm();
    if (norm == 0.0) return 1;

    const ComplexMatrix nmat = Complex{1.0 / norm, 0.0} * shifted;
    ComplexMatrix power = nmat;
    for (int k = 1; k <= 4; ++k) {
        if (power.inf_norm() <= tol) return k;
        if (k < 4) power = power * nmat;
    }
    throw NumericalFailure("jordan_chain_length: ||N^4|| did not fall below tol");
}

namespace {

double max_abs_im_at(const MatrixFamily& family, double t, const EigOptions& opt) {
    return coalescence_metrics(linalg::eig(family.evaluate(t), opt)).max_abs_im;
}

double max_gap_at(const MatrixFamily& family, double t, const EigOptions& opt) {
    return coalescence_metrics(linalg::eig(family.evaluate(t), opt)).gaps.back();
}

// Bisection on f(t) = max|Im| - tol; assumes a sign change over [lo, hi].
double bisect_boundary(const MatrixFamily& family, double lo, double hi, double f_lo,
                       double tol, double width_target, const EigOptions& opt) {
    for (int it = 0; it < 100 && (hi - lo) > width_target; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = max_abs_im_at(family, mid, opt) - tol;
        if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization of the largest pairwise gap.
double golden_min(const MatrixFamily& family, double lo, double hi, double width_target,
                  const EigOptions& opt) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = max_gap_at(family, x1, opt);
    double f2 = max_gap_at(family, x2, opt);
    for (int it = 0; it < 200 && (b - a) > width_target; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = max_gap_at(family, x1, opt);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = max_gap_at(family, x2, opt);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

}  // namespace

std::vector<EpCandidate> find_transitions(const MatrixFamily& family, double t_lo,
                                          double t_hi, int steps, double tol) {
    if (!(t_lo < t_hi)) throw InputError("find_transitions: need t_lo < t_hi");
    if (steps < 3) throw InputError("find_transitions: need steps >= 3");
    if (!(tol > 0.0)) throw InputError("find_transitions: tol must be positive");
    if (t_lo < family.valid_lo || t_hi > family.valid_hi) {
        throw InputError("find_transitions: range leaves the family validity interval");
    }

    const EigOptions opt{};
    const std::size_t n = static_cast<std::size_t>(steps);
    std::vector<double> grid(n), im(n), gap(n);
    for (std::size_t k = 0; k < n; ++k) {
        grid[k] = t_lo + (t_hi - t_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
        const CoalescenceMetrics m =
            coalescence_metrics(linalg::eig(family.evaluate(grid[k]), opt));
        im[k] = m.max_abs_im;
        gap[k] = m.gaps.back();
    }

    struct Refined {
        double t;
        bool from_coalescence;
        bool from_boundary;
    };
    std::vector<Refined> refined;
    const double width_target = 1e-10 * (t_hi - t_lo);

    // (b) real <-> complex boundaries.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double f0 = im[k] - tol;
        const double f1 = im[k + 1] - tol;
        if ((f0 <= 0.0) != (f1 <= 0.0)) {
            refined.push_back(
                {bisect_boundary(family, grid[k], grid[k + 1], f0, tol, width_target, opt),
                 false, true});
        }
    }

    // (c) full coalescence: golden-section around grid minima of the largest
    // pairwise gap. Plateaus seed once; endpoint minima use a one-sided bracket.
    auto seed_coalescence = [&](std::size_t lo, std::size_t hi) {
        refined.push_back(
            {golden_min(family, grid[lo], grid[hi], width_target, opt), true, false});
    };
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const bool is_min = gap[k] <= gap[k - 1] && gap[k] <= gap[k + 1];
        const bool plateau = gap[k] == gap[k - 1] && gap[k] == gap[k + 1];
        if (is_min && !plateau) seed_coalescence(k - 1, k + 1);
    }
    if (gap[0] < gap[1]) seed_coalescence(0, 1);
    if (gap[n - 1] < gap[n - 2]) seed_coalescence(n - 2, n - 1);

    // Merge refinements that landed on the same transition; a coalescence-refined
    // location is the more precise one.
    std::sort(refined.begin(), refined.end(), [](const Refined& a, const Refined& b) {
        return a.t < b.t;
    });
    const double merge_radius = std::max(1e-5 * (t_hi - t_lo), 10.0 * width_target);
    std::vector<Refined> merged;
    for (const Refined& r : refined) {
        if (!merged.empty() && std::abs(r.t - merged.back().t) <= merge_radius) {
            Refined& back = merged.back();
            if (r.from_coalescence && !back.from_coalescence) back.t = r.t;
            back.from_coalescence = back.from_coalescence || r.from_coalescence;
            back.from_boundary = back.from_boundary || r.from_boundary;
            continue;
        }
        merged.push_back(r);
    }

    std::vector<EpCandidate> out;
    for (const Refined& r : merged) {
        const ComplexMatrix m = family.evaluate(r.t);
        const Spectrum spec = linalg::eig(m, opt);
        const CoalescenceMetrics metrics = coalescence_metrics(spec);

        const EigCluster* dominant = &spec.clusters.front();
        for (const EigCluster& cl : spec.clusters) {
            if (cl.algebraic > dominant->algebraic) dominant = &cl;
        }

        EpCandidate cand;
        cand.t_star = r.t;
        cand.cluster_value = dominant->mean;
        cand.algebraic_multiplicity = dominant->algebraic;
        cand.max_gap_at_t = metrics.gaps.back();

        const bool fully_coalesced =
            dominant->algebraic == 4 &&
            metrics.gaps.back() <= 1e-3 * (1.0 + std::abs(dominant->mean));
        if (fully_coalesced) {
            cand.geometric_multiplicity =
                std::clamp(geometric_multiplicity(m, dominant->mean, 1e-6), 1, 4);
            cand.jordan_chain_length = jordan_chain_length(m, dominant->mean, 1e-6);
            cand.kind = cand.geometric_multiplicity < 4 ? TransitionKind::ExceptionalPoint
                                                        : TransitionKind::Degeneracy;
        } else if (dominant->algebraic >= 2) {
            cand.geometric_multiplicity = dominant->geometric;
            cand.kind = TransitionKind::Degeneracy;
        } else if (r.from_boundary) {
            cand.geometric_multiplicity = 1;
            cand.kind = TransitionKind::RealComplexTransition;
        } else {
            continue;  // a gap-minimum seed that refined to nothing
        }
        out.push_back(cand);
    }

    std::sort(out.begin(), out.end(),
              [](const EpCandidate& a, const EpCandidate& b) { return a.t_star < b.t_star; });
    return out;
}

std::array<std::vector<Complex>, 4> track_branches(const std::vector<Spectrum>& spectra) {
    if (spectra.size() < 2) throw InputError("track_branches: need at least 2 spectra");
    for (const Spectrum& s : spectra) {
        if (s.size() != 4) throw InputError("track_branches: expected 4 eigenvalues per step");
    }

    std::array<std::vector<Complex>, 4> branches;
    for (auto& b : branches) b.reserve(spectra.size());

    std::vector<Complex> current = spectra.front().eigenvalues;
    for (std::size_t i = 0; i < 4; ++i) branches[i].push_back(current[i]);

    for (std::size_t k = 1; k < spectra.size(); ++k) {
        const linalg::MatchResult match =
            linalg::best_assignment(current, spectra[k].eigenvalues);
        for (std::size_t i = 0; i < 4; ++i) {
            current[i] = spectra[k].eigenvalues[static_cast<std::size_t>(match.perm[i])];
            branches[i].push_back(current[i]);
        }
    }
    return branches;
}

}  // namespace swanson::ep
