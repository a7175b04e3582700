// Shared generators and comparison helpers for the test suites.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "swanson/complex_linalg.hpp"
#include "swanson/model.hpp"

namespace swanson::testing {

using linalg::Complex;
using linalg::ComplexMatrix;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    Complex complex_in_disk(double radius) {
        while (true) {
            const double re = uniform(-radius, radius);
            const double im = uniform(-radius, radius);
            if (re * re + im * im <= radius * radius) return {re, im};
        }
    }

private:
    std::mt19937_64 gen_;
};

inline ComplexMatrix random_matrix(Rng& rng, std::size_t n, double scale = 1.0) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Complex{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
        }
    }
    return m;
}

inline model::ModelParams random_params(Rng& rng, bool signed_couplings) {
    model::ModelParams p;
    p.omega = rng.uniform(0.5, 3.0);
    p.gamma = rng.uniform(0.0, 2.0);
    p.rho = rng.uniform(0.0, 2.0);
    p.delta = rng.uniform(0.0, 2.0);
    p.epsilon = signed_couplings ? rng.uniform(-2.0, 2.0) : rng.uniform(0.0, 2.0);
    p.eta = signed_couplings ? rng.uniform(-2.0, 2.0) : rng.uniform(0.0, 2.0);
    return p;
}

// Largest matched distance between two complex multisets.
inline double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return linalg::best_assignment(a, b).max_pair_dist;
}

}  // namespace swanson::testing
