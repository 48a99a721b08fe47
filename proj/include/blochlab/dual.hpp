#pragma once

#include <vector>

#include "blochlab/representation.hpp"

namespace blochlab {

// One point of the unitary dual: an irreducible representation together
// with its parameter and Plancherel quadrature weight. A family returned
// by dual_frames forms a quadrature rule for the Plancherel measure.
struct BlochFrame {
    UnitaryRep rep;
    std::vector<double> parameter;  // theta in T^d, theta in (0,pi), or empty
    double weight = 0.0;
    int index = 0;
};

// Quadrature families for the unitary duals of the supported type I models.
//
//   Z^d  : characters on the uniform grid {k/resolution}^d, weight res^-d
//   Z_n  : the n characters, weight 1/n (resolution ignored)
//   Dinf : 2-dim irreps rho_theta(T) = diag(e^{i theta}, e^{-i theta}),
//          rho_theta(R) = antidiag(1,1) on a midpoint theta-grid over
//          (0,pi) with weights approximating d theta / (2 pi); the four
//          one-dimensional representations ride along with weight 0.
//
// The Dinf Plancherel normalization d theta/(2 pi) is fixed here after
// brute-force confirmation on delta functions (see the module tests).
std::vector<BlochFrame> dual_frames(const DeckGroup& group, int resolution);

// Finite-table groups: the caller supplies the irrep table (for instance
// from load_irreps); weights are d_rho/|Gamma|. Validates sum d^2 = |Gamma|
// and that each irrep passes check_representation.
std::vector<BlochFrame> dual_frames(const DeckGroup& group,
                                    const std::vector<UnitaryRep>& irreps);

}  // namespace blochlab
