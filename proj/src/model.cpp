#include "swanson/model.hpp"

#include <cmath>
#include <sstream>

namespace swanson::model {

namespace {

void require_finite(const ModelParams& p, const char* where) {
    for (double v : {p.omega, p.gamma, p.rho, p.epsilon, p.delta, p.eta}) {
        if (!std::isfinite(v)) {
            throw InputError(std::string(where) + ": non-finite model parameter");
        }
    }
}

using swanson::InputError;
using swanson::DomainError;

}  // namespace

const char* to_string(PhaseLabel label) noexcept {
    switch (label) {
        case PhaseLabel::AllRealSimple: return "AllRealSimple";
        case PhaseLabel::RealWithDegeneracy: return "RealWithDegeneracy";
        case PhaseLabel::Broken: return "Broken";
        case PhaseLabel::FullyCoalesced: return "FullyCoalesced";
    }
    return "?";
}

ComplexMatrix build_matrix(const ModelParams& p) {
    require_finite(p, "build_matrix");
    const Complex i{0.0, 1.0};
    const Complex w = p.omega;
    const Complex g = i * p.gamma;
    const Complex id = i * p.delta;
    return ComplexMatrix{
        {w - g, p.rho, p.epsilon, id},
        {-p.rho, w - g, -id, p.eta},
        {p.epsilon, id, w + g, p.rho},
        {-id, p.eta, -p.rho, w + g},
    };
}

std::pair<ComplexMatrix, ComplexMatrix> split_sym_antisym(const ComplexMatrix& m) {
    const ComplexMatrix mt = transpose(m);
    const Complex half{0.5, 0.0};
    return {half * (m + mt), half * (m - mt)};
}

QuarticCoeffs char_coeffs_closed(const ModelParams& p, double cross_sign) {
    require_finite(p, "char_coeffs_closed");
    const double w = p.omega, g = p.gamma, rho = p.rho, e = p.epsilon, d = p.delta,
                 eta = p.eta;
    const Complex i{0.0, 1.0};

    QuarticCoeffs c;
    c.p = -4.0 * w;
    c.q = 2.0 * g * g - 2.0 * d * d - e * e - eta * eta + 2.0 * rho * rho + 6.0 * w * w;
    c.r = cross_sign * 4.0 * i * d * (eta + e) * rho + 2.0 * w * (eta * eta + e * e) -
          4.0 * w * (rho * rho + g * g - d * d) - 4.0 * w * w * w;
    c.s = std::pow(rho, 4) + std::pow(w, 4) + std::pow(g, 4) + std::pow(d, 4) +
          e * e * eta * eta + 2.0 * e * eta * rho * rho -
          4.0 * i * (e + eta) * d * w * rho + 2.0 * rho * rho * w * w -
          w * w * (e * e + eta * eta) -
          g * g * (2.0 * d * d + eta * eta + e * e + 2.0 * rho * rho - 2.0 * w * w) -
          2.0 * d * d * (e * eta - rho * rho + w * w);
    return c;
}

std::array<Complex, 4> closed_form_eigenvalues(const ModelParams& p) {
    require_finite(p, "closed_form_eigenvalues");
    if (std::abs(p.eta + p.epsilon) > 1e-12) {
        throw DomainError(
            "closed_form_eigenvalues: valid only under the eta = -epsilon reduction");
    }
    const double g = p.gamma, rho = p.rho, e = p.epsilon, d = p.delta;
    const Complex inner = std::sqrt(Complex{g * g * rho * rho - d * d * rho * rho, 0.0});
    const Complex base{-g * g + d * d + e * e - rho * rho, 0.0};
    const Complex plus = std::sqrt(base + 2.0 * inner);
    const Complex minus = std::sqrt(base - 2.0 * inner);
    const Complex w = p.omega;
    return {w - plus, w + plus, w - minus, w + minus};
}

namespace {

double delta_branch(double gamma, double epsilon, double rho, double sign, const char* name) {
    for (double v : {gamma, epsilon, rho}) {
        if (!std::isfinite(v)) throw InputError(std::string(name) + ": non-finite argument");
    }
    const double radicand =
        gamma * gamma - epsilon * epsilon + sign * 2.0 * epsilon * rho - rho * rho;
    if (radicand < 0.0) {
        std::ostringstream msg;
        msg << name << ": radicand is negative by " << -radicand
            << " (requires gamma^2 >= (epsilon " << (sign > 0 ? '-' : '+') << " rho)^2)";
        throw DomainError(msg.str());
    }
    return std::sqrt(radicand);
}

}  // namespace

double delta_minus(double gamma, double epsilon, double rho) {
    return delta_branch(gamma, epsilon, rho, -1.0, "delta_minus");
}

double delta_plus(double gamma, double epsilon, double rho) {
    return delta_branch(gamma, epsilon, rho, +1.0, "delta_plus");
}

std::array<Complex, 4> branch_spectrum_minus(double omega, double gamma, double rho,
                                             double epsilon) {
    delta_minus(gamma, epsilon, rho);  // existence condition for this branch
    const Complex root = std::sqrt(Complex{-epsilon * rho - rho * rho, 0.0});
    const Complex w = omega;
    return {w, w, w - 2.0 * root, w + 2.0 * root};
}

std::array<Complex, 4> branch_spectrum_plus(double omega, double gamma, double rho,
                                            double epsilon) {
    delta_plus(gamma, epsilon, rho);
    const double a = 2.0 * rho * (epsilon - rho);
    const double b = 2.0 * rho * std::abs(epsilon - rho);
    const Complex plus = std::sqrt(Complex{a + b, 0.0});
    const Complex minus = std::sqrt(Complex{a - b, 0.0});
    const Complex w = omega;
    return {w - plus, w + plus, w - minus, w + minus};
}

PhaseLabel classify_phase(const Spectrum& spec, double tol) {
    if (!(tol > 0.0)) throw InputError("classify_phase: tol must be positive");
    if (spec.clusters.size() == 1 &&
        spec.clusters[0].algebraic == static_cast<int>(spec.size())) {
        return PhaseLabel::FullyCoalesced;
    }
    bool broken = false;
    for (Complex e : spec.eigenvalues) {
        if (std::abs(e.imag()) > tol * (1.0 + std::abs(e.real()))) broken = true;
    }
    if (broken) return PhaseLabel::Broken;
    for (const EigCluster& cl : spec.clusters) {
        if (cl.algebraic >= 2) return PhaseLabel::RealWithDegeneracy;
    }
    return PhaseLabel::AllRealSimple;
}

}  // namespace swanson::model
