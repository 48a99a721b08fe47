#pragma once

#include <array>

#include "blochlab/geometry.hpp"

namespace blochlab {

// Discretization of the base surface: a periodic grid on the torus, or a
// P1 triangulation of the hyperbolic polygon in disk coordinates with the
// conformal metric weight sampled at element centroids.
struct BaseMesh {
    enum class Model { TorusGrid, HyperbolicFem };
    Model model = Model::TorusGrid;

    // torus grid
    int dim = 1;
    int n = 0;  // nodes per axis
    std::vector<double> periods;

    // hyperbolic triangulation
    int rings = 0;
    std::vector<std::complex<double>> nodes;
    std::vector<std::array<int, 3>> tris;
    std::vector<double> tri_flat_area;
    std::vector<double> tri_metric_weight;         // lambda(centroid)^2
    std::vector<std::vector<int>> side_nodes;      // per side, rings+1 ids in order

    int n_nodes() const;
    double metric_area() const;                    // sum flat_area * weight
    std::complex<double> tri_centroid(int t) const;
    // position of a node as (x, y): grid coordinates on the torus
    // (node index decoded per axis), disk coordinates for the polygon
    std::array<double, 2> node_position(int i) const;
};

// refinement is the grid size N on the torus; on the polygon it selects
// 2^(refinement+1) concentric rings.
BaseMesh build_mesh(const FundamentalDomain& domain, int refinement);

}  // namespace blochlab
