// verify.cpp — Seeded oracle suite cross-checking every closed-form expression
// of the model against the matrix route (Faddeev-LeVerrier + Aberth).

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "swanson/sweep.hpp"

namespace swanson::sweep {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::MonicPoly;
using linalg::Spectrum;
using model::ModelParams;

namespace {

// Uniform doubles built from the top 53 bits of mt19937_64 output, so streams
// do not depend on the standard library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::mt19937_64 gen_;
};

struct CheckAccumulator {
    VerifyCheck check;

    CheckAccumulator(std::string name, double tolerance) {
        check.name = std::move(name);
        check.tolerance = tolerance;
        check.pass = true;
    }

    void observe(double deviation, const std::string& detail_if_worst) {
        if (deviation > check.max_deviation) {
            check.max_deviation = deviation;
            if (!detail_if_worst.empty()) check.detail = detail_if_worst;
        }
        if (!(deviation <= check.tolerance)) check.pass = false;
    }

    VerifyCheck finish(int samples) {
        check.samples = samples;
        return check;
    }
};

double mixed_rel_error(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// (1) Closed-form quartic coefficients vs. char_poly(build_matrix(.)),
// on canonical draws and on draws with signed epsilon/eta.
VerifyCheck check_coefficients(Rng& rng, int samples, double cross_sign) {
    CheckAccumulator acc("coefficient identity (closed quartic vs. char poly)", 1e-10);
    const char* names[4] = {"s", "r", "q", "p"};
    for (int i = 0; i < 2 * samples; ++i) {
        const bool signed_draw = i >= samples;
        ModelParams p;
        p.omega = rng.uniform(0.5, 3.0);
        p.gamma = rng.uniform(0.0, 2.0);
        p.rho = rng.uniform(0.0, 2.0);
        p.delta = rng.uniform(0.0, 2.0);
        p.epsilon = signed_draw ? rng.uniform(-2.0, 2.0) : rng.uniform(0.0, 2.0);
        p.eta = signed_draw ? rng.uniform(-2.0, 2.0) : rng.uniform(0.0, 2.0);

        const MonicPoly reference = linalg::char_poly(model::build_matrix(p));
        const model::QuarticCoeffs closed = model::char_coeffs_closed(p, cross_sign);
        const Complex closed_low_first[4] = {closed.s, closed.r, closed.q, closed.p};
        for (int k = 0; k < 4; ++k) {
            const double dev =
                mixed_rel_error(closed_low_first[k], reference.coeffs[static_cast<std::size_t>(k)]);
            acc.observe(dev, std::string("worst term: ") + names[k]);
        }
    }
    return acc.finish(2 * samples);
}

// (2) Closed-form eigenvalues vs. eig under eta = -epsilon: 1e-8 for eigenvalues
// separated by more than 1e-2, 1e-3 inside coalescence clusters.
VerifyCheck check_closed_spectrum(Rng& rng, int samples) {
    CheckAccumulator acc("closed-form spectrum vs. eig (eta = -epsilon)", 1e-8);
    double worst_clustered = 0.0;
    for (int i = 0; i < samples; ++i) {
        ModelParams p;
        p.omega = rng.uniform(0.5, 3.0);
        p.gamma = rng.uniform(0.0, 2.0);
        p.rho = rng.uniform(0.0, 2.0);
        p.delta = rng.uniform(0.0, 2.0);
        p.epsilon = rng.uniform(-2.0, 2.0);
        p.eta = -p.epsilon;

        const auto closed = model::closed_form_eigenvalues(p);
        const std::vector<Complex> expect(closed.begin(), closed.end());
        const Spectrum spec = linalg::eig(model::build_matrix(p));
        const linalg::MatchResult match = linalg::best_assignment(expect, spec.eigenvalues);

        for (std::size_t k = 0; k < 4; ++k) {
            double min_gap = 1e300;
            for (std::size_t j = 0; j < 4; ++j) {
                if (j != k) min_gap = std::min(min_gap, std::abs(expect[k] - expect[j]));
            }
            const double dev =
                std::abs(expect[k] - spec.eigenvalues[static_cast<std::size_t>(match.perm[k])]);
            if (min_gap > 1e-2) {
                acc.observe(dev, "");
            } else {
                worst_clustered = std::max(worst_clustered, dev);
                if (dev > 1e-3) acc.observe(dev, "inside a coalescence cluster");
            }
        }
    }
    std::ostringstream detail;
    detail << "worst clustered deviation " << worst_clustered << " (tol 1e-3)";
    VerifyCheck check = acc.finish(samples);
    if (check.detail.empty()) check.detail = detail.str();
    return check;
}

// Draw branch parameters with enough margin that the split pair is resolvable.
struct BranchDraw {
    ModelParams params;
    double split_term;  // -eps*rho - rho^2 (minus branch) or eps*rho - rho^2 (plus)
};

BranchDraw draw_minus(Rng& rng) {
    BranchDraw d;
    while (true) {
        d.params.omega = rng.uniform(0.5, 3.0);
        d.params.rho = rng.uniform(0.1, 2.0);
        d.params.epsilon = rng.uniform(-2.0, 2.0);
        if (std::abs(d.params.epsilon + d.params.rho) < 0.05) continue;
        const double margin = rng.uniform(0.1, 2.0);
        d.params.gamma = std::hypot(d.params.epsilon + d.params.rho, margin);
        d.params.delta = model::delta_minus(d.params.gamma, d.params.epsilon, d.params.rho);
        d.params.eta = -d.params.epsilon;
        d.split_term = -d.params.epsilon * d.params.rho - d.params.rho * d.params.rho;
        return d;
    }
}

BranchDraw draw_plus(Rng& rng) {
    BranchDraw d;
    while (true) {
        d.params.omega = rng.uniform(0.5, 3.0);
        d.params.rho = rng.uniform(0.1, 2.0);
        d.params.epsilon = rng.uniform(-2.0, 2.0);
        if (std::abs(d.params.epsilon - d.params.rho) < 0.05) continue;
        const double margin = rng.uniform(0.1, 2.0);
        d.params.gamma = std::hypot(d.params.epsilon - d.params.rho, margin);
        d.params.delta = model::delta_plus(d.params.gamma, d.params.epsilon, d.params.rho);
        d.params.eta = -d.params.epsilon;
        d.split_term = d.params.epsilon * d.params.rho - d.params.rho * d.params.rho;
        return d;
    }
}

// (3) delta_(-) branch: omega is an eigenvalue of multiplicity >= 2 and the
// remaining pair sits at omega +/- 2 sqrt(-eps rho - rho^2).
VerifyCheck check_branch_minus(Rng& rng, int samples) {
    CheckAccumulator acc("delta_(-) branch degeneracy and split pair", 1e-8);
    for (int i = 0; i < samples; ++i) {
        const BranchDraw d = draw_minus(rng);
        const Spectrum spec = linalg::eig(model::build_matrix(d.params));

        bool pinned = false;
        for (const linalg::EigCluster& cl : spec.clusters) {
            if (cl.algebraic >= 2 && std::abs(cl.mean - Complex{d.params.omega, 0.0}) <= 1e-8) {
                pinned = true;
            }
        }
        if (!pinned) acc.observe(1.0, "no multiplicity >= 2 cluster at omega");

        const auto expect = model::branch_spectrum_minus(d.params.omega, d.params.gamma,
                                                         d.params.rho, d.params.epsilon);
        const linalg::MatchResult match = linalg::best_assignment(
            std::vector<Complex>(expect.begin(), expect.end()), spec.eigenvalues);
        acc.observe(match.max_pair_dist, "spectrum vs. branch formula");
    }
    return acc.finish(samples);
}

// (4) delta_(+) branch: epsilon > rho gives {w, w, w +/- 2 sqrt(eps rho - rho^2)},
// epsilon < rho gives exactly one conjugate pair with real part omega.
VerifyCheck check_branch_plus(Rng& rng, int samples) {
    CheckAccumulator acc("delta_(+) branch spectra on both sides of epsilon = rho", 1e-8);
    for (int i = 0; i < samples; ++i) {
        const BranchDraw d = draw_plus(rng);
        const Spectrum spec = linalg::eig(model::build_matrix(d.params));

        const auto expect = model::branch_spectrum_plus(d.params.omega, d.params.gamma,
                                                        d.params.rho, d.params.epsilon);
        const linalg::MatchResult match = linalg::best_assignment(
            std::vector<Complex>(expect.begin(), expect.end()), spec.eigenvalues);
        acc.observe(match.max_pair_dist, "spectrum vs. branch formula");

        if (d.params.epsilon > d.params.rho) {
            double max_im = 0.0;
            for (Complex e : spec.eigenvalues) max_im = std::max(max_im, std::abs(e.imag()));
            acc.observe(max_im, "imaginary residue in the all-real regime");
        } else {
            std::vector<Complex> complex_pair;
            for (Complex e : spec.eigenvalues) {
                if (std::abs(e.imag()) > 1e-4) complex_pair.push_back(e);
            }
            if (complex_pair.size() != 2) {
                acc.observe(1.0, "expected exactly one conjugate pair");
            } else {
                acc.observe(std::abs(complex_pair[0] - std::conj(complex_pair[1])),
                            "conjugate-pair symmetry");
                acc.observe(std::abs(complex_pair[0].real() - d.params.omega),
                            "conjugate-pair real part vs. omega");
            }
        }
    }
    return acc.finish(samples);
}

// (5) At epsilon = -/+ rho with delta = gamma the four eigenvalues and
// eigenvectors collapse: rank(M - wI) = 3 and a length-4 Jordan chain.
VerifyCheck check_ep_collapse(Rng& rng, int samples) {
    CheckAccumulator acc("rank/Jordan collapse at the epsilon = -/+ rho points", 1e-8);
    for (int i = 0; i < samples; ++i) {
        const double omega = rng.uniform(0.5, 3.0);
        const double gamma = rng.uniform(0.2, 2.0);
        const double rho = rng.uniform(0.2, 2.0);
        for (const double sign : {-1.0, +1.0}) {
            ModelParams p;
            p.omega = omega;
            p.gamma = gamma;
            p.rho = rho;
            p.epsilon = sign * rho;
            p.delta = gamma;  // both radicands reduce to gamma^2 at epsilon = -/+ rho
            p.eta = -p.epsilon;

            const ComplexMatrix m = model::build_matrix(p);
            const int r = linalg::rank([&] {
                ComplexMatrix shifted = m;
                for (std::size_t k = 0; k < 4; ++k) shifted(k, k) -= omega;
                return shifted;
            }(), 1e-8);
            if (r != 3) acc.observe(1.0, "rank(M - omega I) != 3");
            if (ep::geometric_multiplicity(m, Complex{omega, 0.0}, 1e-8) != 1) {
                acc.observe(1.0, "geometric multiplicity != 1");
            }

            const Spectrum spec = linalg::eig(m);
            if (spec.clusters.size() != 1 || spec.clusters[0].algebraic != 4) {
                acc.observe(1.0, "algebraic multiplicity != 4");
            } else {
                acc.observe(std::abs(spec.clusters[0].mean - Complex{omega, 0.0}),
                            "cluster mean vs. omega");
            }
            if (ep::jordan_chain_length(m, Complex{omega, 0.0}, 1e-6) != 4) {
                acc.observe(1.0, "Jordan chain length != 4");
            }
        }
    }
    return acc.finish(2 * samples);
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const VerifyCheck& c = checks[i];
        out << "check " << (i + 1) << " [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
            << ": max deviation " << c.max_deviation << " (tol " << c.tolerance << ", "
            << c.samples << " samples)";
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    out << (all_pass() ? "verify: all checks passed\n" : "verify: MISMATCH FOUND\n");
    return out.str();
}

VerifyReport verify_suite(int samples, std::uint64_t seed, const VerifyFixture& fixture) {
    if (samples < 1) throw InputError("verify_suite: samples must be >= 1");
    Rng rng(seed);
    const double cross_sign = fixture.flip_r_cross_sign ? -1.0 : 1.0;
    const int branch_samples = std::min(samples, 200);
    const int ep_samples = std::min(samples, 50);

    VerifyReport report;
    report.checks.push_back(check_coefficients(rng, samples, cross_sign));
    report.checks.push_back(check_closed_spectrum(rng, samples));
    report.checks.push_back(check_branch_minus(rng, branch_samples));
    report.checks.push_back(check_branch_plus(rng, branch_samples));
    report.checks.push_back(check_ep_collapse(rng, ep_samples));
    return report;
}

}  // namespace swanson::sweep
