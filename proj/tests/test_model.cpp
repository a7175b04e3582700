#include <doctest.h>

#include <cmath>

#include "swanson/model.hpp"
#include "test_helpers.hpp"

using namespace swanson;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::MonicPoly;
using model::ModelParams;
using testing::Rng;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("build_matrix: decoupled case is diagonal") {
    const ComplexMatrix m =
        model::build_matrix({.omega = 2, .gamma = 1, .rho = 0, .epsilon = 0, .delta = 0, .eta = 0});
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j) CHECK(m(i, j) == Complex{0.0, 0.0});
        }
    }
    CHECK(m(0, 0) == 2.0 - I);
    CHECK(m(1, 1) == 2.0 - I);
    CHECK(m(2, 2) == 2.0 + I);
    CHECK(m(3, 3) == 2.0 + I);
}

TEST_CASE("build_matrix: entry placement and trace") {
    const ModelParams p{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1, .delta = 0.75,
                        .eta = -1};
    const ComplexMatrix m = model::build_matrix(p);
    CHECK(m(0, 3) == 0.75 * I);
    CHECK(m(1, 0) == Complex{-0.5, 0.0});
    CHECK(m(3, 1) == Complex{-1.0, 0.0});
    CHECK(m(2, 2) == 2.0 + I);
    CHECK(m.trace() == Complex{8.0, 0.0});

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const ModelParams q = testing::random_params(rng, true);
        CHECK(std::abs(model::build_matrix(q).trace() - Complex{4.0 * q.omega, 0.0}) < 1e-12);
    }

    CHECK_THROWS_AS(model::build_matrix({.omega = std::nan(""), .gamma = 0, .rho = 0,
                                         .epsilon = 0, .delta = 0, .eta = 0}),
                    InputError);
}

TEST_CASE("split_sym_antisym: explicit entries and exact reconstruction") {
    const ModelParams p{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1, .delta = 0.75,
                        .eta = -1};
    const ComplexMatrix m = model::build_matrix(p);
    const auto [ms, ma] = model::split_sym_antisym(m);

    CHECK(ms(0, 2) == Complex{1.0, 0.0});   // epsilon
    CHECK(ms(0, 1) == Complex{0.0, 0.0});
    CHECK(ma(0, 1) == Complex{0.5, 0.0});   // rho
    CHECK(ma(0, 3) == 0.75 * I);            // i delta

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(ms(i, j) + ma(i, j) == m(i, j));
            CHECK(ms(i, j) == ms(j, i));
            CHECK(ma(i, j) == -ma(j, i));
        }
    }

    // symmetric input -> (m, 0)
    ComplexMatrix sym(4);
    sym(0, 1) = sym(1, 0) = 3.0 + I;
    sym(2, 3) = sym(3, 2) = -1.0;
    const auto [s2, a2] = model::split_sym_antisym(sym);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(s2(i, j) == sym(i, j));
            CHECK(a2(i, j) == Complex{0.0, 0.0});
        }
    }
}

TEST_CASE("char_coeffs_closed: decoupled case gives ((lambda-2)^2+1)^2") {
    const auto c = model::char_coeffs_closed(
        {.omega = 2, .gamma = 1, .rho = 0, .epsilon = 0, .delta = 0, .eta = 0});
    CHECK(std::abs(c.p - Complex{-8.0}) < 1e-14);
    CHECK(std::abs(c.q - Complex{26.0}) < 1e-14);
    CHECK(std::abs(c.r - Complex{-40.0}) < 1e-14);
    CHECK(std::abs(c.s - Complex{25.0}) < 1e-14);
}

TEST_CASE("char_coeffs_closed: imaginary parts vanish under eta = -epsilon") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        ModelParams p = testing::random_params(rng, true);
        p.eta = -p.epsilon;
        const auto c = model::char_coeffs_closed(p);
        CHECK(std::abs(c.p.imag()) == 0.0);
        CHECK(std::abs(c.q.imag()) <= 1e-12);
        CHECK(std::abs(c.r.imag()) <= 1e-12);
        CHECK(std::abs(c.s.imag()) <= 1e-12);
    }
}

TEST_CASE("char_coeffs_closed matches char_poly(build_matrix) on 1000 draws") {
    Rng rng(41);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const ModelParams p = testing::random_params(rng, trial % 2 == 0);
        const MonicPoly reference = linalg::char_poly(model::build_matrix(p));
        const auto closed = model::char_coeffs_closed(p);
        const Complex low_first[4] = {closed.s, closed.r, closed.q, closed.p};
        for (int k = 0; k < 4; ++k) {
            const Complex ref = reference.coeffs[static_cast<std::size_t>(k)];
            worst = std::max(worst, std::abs(low_first[k] - ref) / std::max(1.0, std::abs(ref)));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("closed_form_eigenvalues: examples confirmed against eig") {
    const ModelParams a{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1,
                        .delta = std::sqrt(0.75), .eta = -1};
    const auto ea = model::closed_form_eigenvalues(a);
    CHECK(testing::multiset_distance({ea.begin(), ea.end()}, {1.0, 2.0, 2.0, 3.0}) < 1e-12);

    const ModelParams b{.omega = 2, .gamma = 1, .rho = 0, .epsilon = 0, .delta = 0, .eta = 0};
    const auto eb = model::closed_form_eigenvalues(b);
    CHECK(testing::multiset_distance({eb.begin(), eb.end()},
                                     {2.0 - I, 2.0 - I, 2.0 + I, 2.0 + I}) < 1e-12);

    const ModelParams c{.omega = 2, .gamma = 2, .rho = 1, .epsilon = -2,
                        .delta = std::sqrt(3.0), .eta = 2};
    const auto ec = model::closed_form_eigenvalues(c);
    CHECK(testing::multiset_distance({ec.begin(), ec.end()}, {0.0, 2.0, 2.0, 4.0}) < 1e-12);

    for (const ModelParams& p : {a, b, c}) {
        const auto closed = model::closed_form_eigenvalues(p);
        const auto spec = linalg::eig(model::build_matrix(p));
        CHECK(testing::multiset_distance({closed.begin(), closed.end()}, spec.eigenvalues) <
              1e-6);
    }
}

TEST_CASE("closed_form_eigenvalues: eta = -epsilon gate") {
    CHECK_THROWS_AS(model::closed_form_eigenvalues(
                        {.omega = 2, .gamma = 1, .rho = 1, .epsilon = 1, .delta = 1, .eta = 1}),
                    DomainError);
}

TEST_CASE("delta_minus: examples") {
    CHECK(model::delta_minus(2.0, -2.0, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(model::delta_minus(0.7, 0.0, 0.7) == doctest::Approx(0.0));
    CHECK_THROWS_AS(model::delta_minus(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("delta_plus: examples") {
    CHECK(model::delta_plus(1.0, 1.0, 0.5) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    CHECK(model::delta_plus(1.0, 0.5, 0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(model::delta_plus(0.1, 2.0, 0.5), DomainError);
}

TEST_CASE("branch_spectrum_minus: examples confirmed against eig") {
    const auto a = model::branch_spectrum_minus(2, 2, 1, -2);
    CHECK(testing::multiset_distance({a.begin(), a.end()}, {0.0, 2.0, 2.0, 4.0}) < 1e-12);

    const auto b = model::branch_spectrum_minus(2, 1, 1, -1);
    CHECK(testing::multiset_distance({b.begin(), b.end()}, {2.0, 2.0, 2.0, 2.0}) < 1e-12);

    const auto c = model::branch_spectrum_minus(2, 2, 1, 0);
    CHECK(testing::multiset_distance({c.begin(), c.end()},
                                     {2.0, 2.0, 2.0 - 2.0 * I, 2.0 + 2.0 * I}) < 1e-12);

    // oracle: delta = delta_minus, eta = -epsilon reproduces the multiset via eig
    const ModelParams p{.omega = 2, .gamma = 2, .rho = 1, .epsilon = -2,
                        .delta = model::delta_minus(2, -2, 1), .eta = 2};
    const auto spec = linalg::eig(model::build_matrix(p));
    CHECK(testing::multiset_distance({a.begin(), a.end()}, spec.eigenvalues) < 1e-8);

    CHECK_THROWS_AS(model::branch_spectrum_minus(2, 0.1, 1, 1), DomainError);
}

TEST_CASE("branch_spectrum_plus: examples confirmed against eig") {
    const auto a = model::branch_spectrum_plus(2, 1, 0.5, 1);
    CHECK(testing::multiset_distance({a.begin(), a.end()}, {1.0, 2.0, 2.0, 3.0}) < 1e-12);

    const auto b = model::branch_spectrum_plus(2, 1, 0.5, 0.5);
    CHECK(testing::multiset_distance({b.begin(), b.end()}, {2.0, 2.0, 2.0, 2.0}) < 1e-12);

    const auto c = model::branch_spectrum_plus(2, 1, 0.5, 0);
    CHECK(testing::multiset_distance({c.begin(), c.end()}, {2.0, 2.0, 2.0 - I, 2.0 + I}) <
          1e-12);

    const ModelParams p{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1,
                        .delta = std::sqrt(0.75), .eta = -1};
    const auto spec = linalg::eig(model::build_matrix(p));
    CHECK(testing::multiset_distance({a.begin(), a.end()}, spec.eigenvalues) < 1e-8);
}

TEST_CASE("conjugation closure under eta = -epsilon") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        ModelParams p = testing::random_params(rng, true);
        p.eta = -p.epsilon;
        const auto spec = linalg::eig(model::build_matrix(p));
        std::vector<Complex> conjugated;
        for (Complex e : spec.eigenvalues) conjugated.push_back(std::conj(e));
        CHECK(testing::multiset_distance(spec.eigenvalues, conjugated) < 1e-10);
    }
}

TEST_CASE("degeneracy guarantee: delta branches pin omega with multiplicity >= 2") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const double omega = rng.uniform(0.5, 3.0);
        const double rho = rng.uniform(0.1, 2.0);
        const double eps = rng.uniform(-2.0, 2.0);
        const double margin = rng.uniform(0.1, 2.0);
        const bool minus = trial % 2 == 0;
        const double gamma = std::hypot(minus ? eps + rho : eps - rho, margin);
        ModelParams p{.omega = omega, .gamma = gamma, .rho = rho, .epsilon = eps,
                      .delta = 0, .eta = -eps};
        p.delta = minus ? model::delta_minus(gamma, eps, rho)
                        : model::delta_plus(gamma, eps, rho);

        const auto spec = linalg::eig(model::build_matrix(p));
        bool pinned = false;
        for (const auto& cl : spec.clusters) {
            if (cl.algebraic >= 2 && std::abs(cl.mean - Complex{omega, 0.0}) <= 1e-7) {
                pinned = true;
            }
        }
        CHECK(pinned);
    }
}

TEST_CASE("EP eigenvector collapse at both branch EPs") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const double omega = rng.uniform(0.5, 3.0);
        const double gamma = rng.uniform(0.2, 2.0);
        const double rho = rng.uniform(0.2, 2.0);
        for (double sign : {-1.0, 1.0}) {
            const ModelParams p{.omega = omega, .gamma = gamma, .rho = rho,
                                .epsilon = sign * rho, .delta = gamma, .eta = -sign * rho};
            ComplexMatrix shifted = model::build_matrix(p);
            for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= omega;
            CHECK(linalg::rank(shifted, 1e-8) == 3);
        }
    }
}

TEST_CASE("classify_phase: examples") {
    auto spectrum_of = [](const ModelParams& p) { return linalg::eig(model::build_matrix(p)); };

    // {1, 2, 2, 3}
    const auto rd = spectrum_of({.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1,
                                 .delta = std::sqrt(0.75), .eta = -1});
    CHECK(model::classify_phase(rd, 1e-6) == model::PhaseLabel::RealWithDegeneracy);

    // {2, 2, 2-i, 2+i}
    const auto br = spectrum_of({.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 0,
                                 .delta = 1, .eta = 0});
    CHECK(model::classify_phase(br, 1e-6) == model::PhaseLabel::Broken);

    // {2, 2, 2, 2}
    const auto fc = spectrum_of({.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 0.5,
                                 .delta = 1, .eta = -0.5});
    CHECK(model::classify_phase(fc, 1e-6) == model::PhaseLabel::FullyCoalesced);

    // distinct real values
    linalg::Spectrum simple = spectrum_of({.omega = 2, .gamma = 0, .rho = 0, .epsilon = 1,
                                           .delta = 0, .eta = 0.5});
    CHECK(model::classify_phase(simple, 1e-6) == model::PhaseLabel::AllRealSimple);
}

TEST_CASE("paper canonicity flag") {
    CHECK(ModelParams{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = -1, .delta = 1, .eta = 0.5}
              .paper_canonical());
    CHECK_FALSE(
        ModelParams{.omega = 2, .gamma = 1, .rho = 0.5, .epsilon = 1, .delta = 1, .eta = -1}
            .paper_canonical());
}
