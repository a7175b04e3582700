// eigen.hpp — Eigen decomposition for small dense complex matrices by the
// characteristic-polynomial route, with cluster bookkeeping (algebraic vs.
// geometric multiplicity) tuned for degeneracy detection.

#pragma once

#include <vector>

#include "swanson/complex_linalg.hpp"
#include "swanson/poly.hpp"

namespace swanson::linalg {

struct EigOptions {
    double root_tol = 1e-12;      // Aberth residual tolerance
    int max_iter = 200;
    double rank_tol = 1e-8;       // pivot threshold for geometric multiplicity
    bool compute_vectors = true;
};

struct EigCluster {
    Complex mean;
    int algebraic = 0;
    int geometric = 0;
};

// Eigenvalues with residuals, cluster structure, and (optionally) kernel bases.
// eigenvalues are sorted by (Re, Im); cluster_of[i] indexes clusters for eigenvalue i.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    std::vector<double> residuals;
    std::vector<int> cluster_of;
    std::vector<EigCluster> clusters;
    std::vector<std::vector<ComplexVector>> cluster_vectors;  // empty if not requested

    std::size_t size() const noexcept { return eigenvalues.size(); }
};

// Two roots belong to one multiplicity cluster iff their distance is at most
// max(1e-6, tol^(1/4)) * (1 + cauchy_bound): a k-fold root is only resolvable
// to about tol^(1/k) from coefficients.
double cluster_radius(const MonicPoly& p, double root_tol);

// Eigenvalues of m as poly_roots(char_poly(m)), snapped and clustered; geometric
// multiplicity of each cluster is size() - rank(m - mean I) at the cluster mean.
// Simple eigenpairs must meet a residual of 1e-8 * inf_norm(m), else
// NumericalFailure.
Spectrum eig(const ComplexMatrix& m, const EigOptions& opt = {});

}  // namespace swanson::linalg
