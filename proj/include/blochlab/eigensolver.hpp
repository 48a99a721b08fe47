#pragma once

#include <Eigen/Sparse>
#include <optional>

#include "blochlab/representation.hpp"

namespace blochlab {

using SpMatC = Eigen::SparseMatrix<Complex>;

struct EigenOptions {
    int k = 6;                                        // wanted pairs (smallest)
    std::optional<std::pair<double, double>> window;  // or all pairs in [lo, hi]
    double tol = 1e-9;          // relative residual ||Ku - lambda Mu|| / scale
    std::uint64_t seed = 1234;  // start-vector seed (determinism)
    int dense_threshold = 2000;
    int max_subspace = 0;       // 0: automatic
};

struct EigenPair {
    double value = 0;
    VectorXc vector;   // M-normalized
    double residual = 0;
};

// Generalized Hermitian eigenproblem K u = lambda M u with K PSD, M PD.
// Dense solve below dense_threshold, otherwise shift-invert Lanczos with
// full reorthogonalization in the M inner product. Results ascending;
// degenerate pairs ordered by lexicographic comparison of rounded vectors.
std::vector<EigenPair> solve_eigenpairs(const SpMatC& K, const SpMatC& M,
                                        const EigenOptions& opts);

}  // namespace blochlab
