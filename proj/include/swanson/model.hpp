// model.hpp — The coupled two-mode oscillator matrix model: the 4x4 coupling
// matrix with balanced gain/loss, its closed-form quartic coefficients and
// eigenvalues, the two delta-constraint branches that pin an eigenvalue pair
// to omega, and spectral phase classification.

#pragma once

#include <array>
#include <utility>

#include "swanson/eigen.hpp"

namespace swanson::model {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::MonicPoly;
using linalg::Spectrum;

// The six real parameters of the coupling matrix. omega is the common mode
// frequency, gamma the gain/loss rate, rho the antisymmetric coupling, epsilon
// and eta the two symmetric couplings, delta the imaginary-coupling magnitude.
struct ModelParams {
    double omega = 0.0;
    double gamma = 0.0;
    double rho = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    double eta = 0.0;

    // gamma, rho, delta, eta all nonnegative. The library accepts general real
    // values (sweeps need epsilon < 0) but reports canonicity.
    bool paper_canonical() const noexcept {
        return gamma >= 0.0 && rho >= 0.0 && delta >= 0.0 && eta >= 0.0;
    }
};

// Coefficients of the monic indicial quartic lambda^4 + p lambda^3 + q lambda^2
// + r lambda + s. p = -4 omega is always real; q, r, s are real iff eta = -epsilon
// (the i-terms carry a factor (eta + epsilon)).
struct QuarticCoeffs {
    Complex p, q, r, s;

    MonicPoly to_monic_poly() const { return MonicPoly{{s, r, q, p}}; }
};

enum class PhaseLabel {
    AllRealSimple,
    RealWithDegeneracy,
    Broken,          // at least one conjugate pair with nonzero imaginary part
    FullyCoalesced,  // all four eigenvalues within the cluster radius of one value
};

const char* to_string(PhaseLabel label) noexcept;

// The 4x4 coupling matrix:
//   [ w-ig    rho   eps    id  ]
//   [ -rho   w-ig   -id    eta ]
//   [ eps     id    w+ig   rho ]
//   [ -id     eta   -rho   w+ig ]
ComplexMatrix build_matrix(const ModelParams& params);

// (M_S, M_A) = ((m + m^T)/2, (m - m^T)/2); plain transpose, no conjugation.
std::pair<ComplexMatrix, ComplexMatrix> split_sym_antisym(const ComplexMatrix& m);

// Closed-form quartic coefficients evaluated directly from the parameters.
// cross_sign scales the 4 i delta (eta + epsilon) rho cross term in r; anything
// other than +1 is a deliberately wrong variant used by the verification
// harness as a negative control.
QuarticCoeffs char_coeffs_closed(const ModelParams& params, double cross_sign);
inline QuarticCoeffs char_coeffs_closed(const ModelParams& params) {
    return char_coeffs_closed(params, 1.0);
}

// The four closed-form eigenvalues omega +/- sqrt(-g^2 + d^2 + e^2 - r^2 +/-
// 2 sqrt(g^2 r^2 - d^2 r^2)), principal complex square roots throughout.
// Valid only under the eta = -epsilon reduction (|eta + epsilon| <= 1e-12,
// else DomainError). The result is a multiset: callers must not rely on which
// element carries which inner sign.
std::array<Complex, 4> closed_form_eigenvalues(const ModelParams& params);

// delta_(-) = sqrt(gamma^2 - epsilon^2 - 2 epsilon rho - rho^2), the constraint
// pinning an eigenvalue pair to omega with the EP at epsilon = -rho.
// DomainError (reporting the deficit) if gamma^2 < (epsilon + rho)^2.
double delta_minus(double gamma, double epsilon, double rho);

// delta_(+) = sqrt(gamma^2 - epsilon^2 + 2 epsilon rho - rho^2), the
// complementary constraint with the EP at epsilon = +rho.
double delta_plus(double gamma, double epsilon, double rho);

// Spectrum multiset {w, w, w - 2 sqrt(-e r - r^2), w + 2 sqrt(-e r - r^2)} on
// the delta_(-) branch: real and split for epsilon < -rho, fully coalesced at
// epsilon = -rho, a conjugate pair for epsilon > -rho. gamma enters only
// through the existence condition for delta_(-).
std::array<Complex, 4> branch_spectrum_minus(double omega, double gamma, double rho,
                                             double epsilon);

// Spectrum multiset {w -/+ sqrt(2r(e-r) + 2r|e-r|), w -/+ sqrt(2r(e-r) - 2r|e-r|)}
// on the delta_(+) branch: for epsilon > rho this is {w, w, w +/- 2 sqrt(e r - r^2)},
// all four coalesce to w at epsilon = rho, and for epsilon < rho one pair is
// conjugate about w.
std::array<Complex, 4> branch_spectrum_plus(double omega, double gamma, double rho,
                                            double epsilon);

// FullyCoalesced if a single cluster holds all eigenvalues; otherwise Broken iff
// any |Im| > tol * (1 + |Re|); otherwise RealWithDegeneracy iff some cluster has
// multiplicity >= 2.
PhaseLabel classify_phase(const Spectrum& spec, double tol);

}  // namespace swanson::model
