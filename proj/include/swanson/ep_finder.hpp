// ep_finder.hpp — Detection, refinement, and classification of spectral
// transitions (real<->complex boundaries, degeneracies, exceptional points)
// along one-parameter matrix families.

#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "swanson/eigen.hpp"

namespace swanson::ep {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::Spectrum;

// A one-parameter family t -> M(t), total on [valid_lo, valid_hi].
struct MatrixFamily {
    std::function<ComplexMatrix(double)> evaluate;
    std::string parameter_name = "t";
    double valid_lo = -std::numeric_limits<double>::infinity();
    double valid_hi = std::numeric_limits<double>::infinity();
};

enum class TransitionKind {
    RealComplexTransition,
    Degeneracy,        // eigenvalues coalesce, eigenvectors stay independent (or partial coalescence)
    ExceptionalPoint,  // geometric multiplicity < algebraic multiplicity
};

const char* to_string(TransitionKind kind) noexcept;

struct EpCandidate {
    double t_star = 0.0;
    Complex cluster_value;
    int algebraic_multiplicity = 0;
    int geometric_multiplicity = 0;
    std::optional<int> jordan_chain_length;  // nullopt = not probed
    double max_gap_at_t = 0.0;
    TransitionKind kind = TransitionKind::RealComplexTransition;
};

struct CoalescenceMetrics {
    double min_gap = 0.0;
    std::array<double, 6> gaps{};  // pairwise |E_i - E_j| sorted ascending
    double max_abs_im = 0.0;
};

// Pairwise eigenvalue gaps (sorted) and the largest |Im E|. Requires 4 eigenvalues.
CoalescenceMetrics coalescence_metrics(const Spectrum& spec);

// size() - rank(m - lambda I, tol).
int geometric_multiplicity(const ComplexMatrix& m, Complex lambda, double tol);

// With N = (m - lambda I) / ||m - lambda I||_inf, the smallest k <= 4 with
// ||N^k||_inf <= tol; 1 if m - lambda I vanishes. Only meaningful when lambda
// has full algebraic multiplicity (checked; DomainError otherwise): a single
// 4x4 Jordan block returns 4.
int jordan_chain_length(const ComplexMatrix& m, Complex lambda, double tol);

// Scan eigenvalues of the family on a grid over [t_lo, t_hi], then:
//  - refine real<->complex boundaries (sign changes of max|Im| - tol) by bisection,
//  - refine full coalescences by golden-section minimization of the largest
//    pairwise gap, seeded at grid minima (the discriminant cannot discriminate
//    here: it vanishes identically along the constrained branches),
//  - classify each refined candidate via multiplicities and a Jordan probe.
// Candidates are deduplicated and sorted by t_star. An empty result means no
// transitions; refinement non-convergence throws NumericalFailure.
std::vector<EpCandidate> find_transitions(const MatrixFamily& family, double t_lo,
                                          double t_hi, int steps, double tol);

// Assign eigenvalues of consecutive spectra to 4 continuous branches via
// minimal-total-distance perfect matching per step.
std::array<std::vector<Complex>, 4> track_branches(const std::vector<Spectrum>& spectra);

}  // namespace swanson::ep
