#include <doctest.h>

#include <cmath>

#include "swanson/eigen.hpp"
#include "swanson/model.hpp"
#include "test_helpers.hpp"

using namespace swanson;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::Spectrum;
using testing::Rng;

namespace {

const Complex I{0.0, 1.0};

ComplexMatrix diag(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

}  // namespace

TEST_CASE("eig: distinct diagonal eigenvalues, geometric multiplicity 1 each") {
    const Spectrum spec = linalg::eig(diag(1.0 + I, 1.0 - I, 2.0, 3.0));
    CHECK(testing::multiset_distance(spec.eigenvalues, {1.0 + I, 1.0 - I, 2.0, 3.0}) < 1e-10);
    REQUIRE(spec.clusters.size() == 4);
    for (const auto& cl : spec.clusters) {
        CHECK(cl.algebraic == 1);
        CHECK(cl.geometric == 1);
    }
    for (double r : spec.residuals) CHECK(r <= 1e-8 * 4.0);
}

TEST_CASE("eig: diabolic double pairs 2 -/+ i with geometric multiplicity 2") {
    const model::ModelParams p{.omega = 2, .gamma = 1, .rho = 0, .epsilon = 0, .delta = 0,
                               .eta = 0};
    const Spectrum spec = linalg::eig(model::build_matrix(p));
    CHECK(testing::multiset_distance(spec.eigenvalues, {2.0 - I, 2.0 - I, 2.0 + I, 2.0 + I}) <
          1e-9);
    REQUIRE(spec.clusters.size() == 2);
    for (const auto& cl : spec.clusters) {
        CHECK(cl.algebraic == 2);
        CHECK(cl.geometric == 2);
    }
}

TEST_CASE("eig: EP point has algebraic multiplicity 4, geometric 1") {
    const model::ModelParams p{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = -0.5,
                               .delta = 1, .eta = 0.5};
    const Spectrum spec = linalg::eig(model::build_matrix(p));
    REQUIRE(spec.clusters.size() == 1);
    CHECK(spec.clusters[0].algebraic == 4);
    CHECK(spec.clusters[0].geometric == 1);
    CHECK(std::abs(spec.clusters[0].mean - Complex{2.0, 0.0}) < 1e-6);
}

TEST_CASE("eig: trace and determinant identities over random matrices") {
    Rng rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix m = testing::random_matrix(rng, 4, 2.0);
        const Spectrum spec = linalg::eig(m);

        Complex sum = 0.0;
        Complex prod = 1.0;
        for (Complex e : spec.eigenvalues) {
            sum += e;
            prod *= e;
        }
        const Complex tr = m.trace();
        CHECK(std::abs(sum - tr) <= 1e-9 * (1.0 + std::abs(tr)));

        const Complex det = linalg::determinant(m);
        CHECK(std::abs(prod - det) <= 1e-8 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("eig: multiplicity sum is n and geometric within [1, algebraic]") {
    Rng rng(223);
    for (int trial = 0; trial < 50; ++trial) {
        const bool use_model = trial % 2 == 0;
        const ComplexMatrix m = use_model
                                    ? model::build_matrix(testing::random_params(rng, true))
                                    : testing::random_matrix(rng, 4, 2.0);
        const Spectrum spec = linalg::eig(m);
        int total = 0;
        for (const auto& cl : spec.clusters) {
            total += cl.algebraic;
            CHECK(cl.geometric >= 1);
            CHECK(cl.geometric <= cl.algebraic);
        }
        CHECK(total == 4);
    }
}

TEST_CASE("eig: snapped double roots stay exactly on the real axis") {
    // Pinned pair at omega on the delta_(-) branch; raw quartic roots would carry
    // O(sqrt(eps)) imaginary noise, the snap must remove it.
    Rng rng(227);
    for (int trial = 0; trial < 100; ++trial) {
        const double omega = rng.uniform(0.5, 3.0);
        const double rho = rng.uniform(0.1, 2.0);
        double eps = rng.uniform(-2.0, -rho - 0.05);  // real-and-split region
        if (eps + rho >= 0.0) continue;
        const double gamma = std::hypot(eps + rho, rng.uniform(0.1, 2.0));
        const model::ModelParams p{.omega = omega, .gamma = gamma, .rho = rho,
                                   .epsilon = eps,
                                   .delta = model::delta_minus(gamma, eps, rho),
                                   .eta = -eps};
        const Spectrum spec = linalg::eig(model::build_matrix(p));
        for (Complex e : spec.eigenvalues) CHECK(std::abs(e.imag()) <= 1e-8);

        bool pinned_cluster = false;
        for (const auto& cl : spec.clusters) {
            if (cl.algebraic >= 2 && std::abs(cl.mean - Complex{omega, 0.0}) <= 1e-8) {
                pinned_cluster = true;
            }
        }
        CHECK(pinned_cluster);
    }
}
