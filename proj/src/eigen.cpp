#include "swanson/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swanson::linalg {

double cluster_radius(const MonicPoly& p, double root_tol) {
    return std::max(1e-6, std::pow(root_tol, 0.25)) * (1.0 + cauchy_bound(p));
}

namespace {

// Group sorted eigenvalues into clusters: connected components under the
// multiplicity-resolution radius.
std::vector<std::vector<std::size_t>> cluster_groups(const std::vector<Complex>& vals,
                                                     double radius) {
    const std::size_t n = vals.size();
    std::vector<int> assigned(n, -1);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        assigned[i] = static_cast<int>(groups.size());
        std::vector<std::size_t> members;
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (std::size_t b = 0; b < n; ++b) {
                if (assigned[b] < 0 && std::abs(vals[a] - vals[b]) <= radius) {
                    assigned[b] = assigned[i];
                    stack.push_back(b);
                }
            }
        }
        std::sort(members.begin(), members.end());
        groups.push_back(std::move(members));
    }
    return groups;
}

}  // namespace

Spectrum eig(const ComplexMatrix& m, const EigOptions& opt) {
    const std::size_t n = m.size();
    const MonicPoly p = char_poly(m);
    std::vector<Complex> roots = poly_roots(p, opt.root_tol, opt.max_iter);
    roots = snap_root_clusters(p, std::move(roots), default_snap_radius(p));

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    Spectrum spec;
    spec.eigenvalues = roots;
    spec.residuals.assign(n, 0.0);
    spec.cluster_of.assign(n, 0);

    const double norm = m.inf_norm();
    const double radius = cluster_radius(p, opt.root_tol);
    for (const auto& group : cluster_groups(roots, radius)) {
        EigCluster cl;
        cl.algebraic = static_cast<int>(group.size());
        Complex mean = 0.0;
        double spread = 0.0;
        for (std::size_t i : group) mean += roots[i];
        mean /= static_cast<double>(group.size());
        for (std::size_t i : group) spread = std::max(spread, std::abs(roots[i] - mean));
        cl.mean = mean;

        // Pivots at or below the cluster's own spread cannot certify independence,
        // so the rank threshold never resolves below it.
        double rank_tol = opt.rank_tol;
        if (norm > 0.0) rank_tol = std::max(rank_tol, 10.0 * spread / norm);

        ComplexMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mean;
        cl.geometric = static_cast<int>(n) - rank(shifted, rank_tol);
        cl.geometric = std::clamp(cl.geometric, 1, cl.algebraic);

        std::vector<ComplexVector> vectors;
        if (opt.compute_vectors) {
            double ns_tol = rank_tol;
            for (int attempt = 0; attempt < 4 && vectors.empty(); ++attempt) {
                vectors = null_space(shifted, ns_tol);
                ns_tol *= 10.0;
            }
        }

        const int cluster_index = static_cast<int>(spec.clusters.size());
        for (std::size_t i : group) {
            spec.cluster_of[i] = cluster_index;
            if (opt.compute_vectors && !vectors.empty()) {
                double best = std::numeric_limits<double>::infinity();
                for (const ComplexVector& v : vectors) {
                    ComplexVector mv = apply(m, v);
                    for (std::size_t j = 0; j < n; ++j) mv[j] -= roots[i] * v[j];
                    best = std::min(best, norm2(mv));
                }
                spec.residuals[i] = best;
            }
        }
        spec.clusters.push_back(cl);
        spec.cluster_vectors.push_back(opt.compute_vectors ? std::move(vectors)
                                                           : std::vector<ComplexVector>{});
    }

    if (opt.compute_vectors) {
        for (std::size_t i = 0; i < n; ++i) {
            const EigCluster& cl = spec.clusters[static_cast<std::size_t>(spec.cluster_of[i])];
            if (cl.algebraic == 1 && spec.residuals[i] > 1e-8 * std::max(norm, 1.0)) {
                throw NumericalFailure("eig: simple eigenpair residual exceeds bound",
                                       {spec.eigenvalues[i]}, {spec.residuals[i]});
            }
        }
    }
    return spec;
}

}  // namespace swanson::linalg
