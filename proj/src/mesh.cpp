#include "blochlab/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace blochlab {

using Cx = std::complex<double>;

int BaseMesh::n_nodes() const {
    if (model == Model::TorusGrid) {
        int total = 1;
        for (int a = 0; a < dim; ++a) total *= n;
        return total;
    }
    return static_cast<int>(nodes.size());
}

double BaseMesh::metric_area() const {
    if (model == Model::TorusGrid) {
        double v = 1;
        for (double p : periods) v *= p;
        return v;
    }
    double s = 0;
    for (std::size_t t = 0; t < tris.size(); ++t)
        s += tri_flat_area[t] * tri_metric_weight[t];
    return s;
}

Cx BaseMesh::tri_centroid(int t) const {
    const auto& tr = tris[t];
    return (nodes[tr[0]] + nodes[tr[1]] + nodes[tr[2]]) / 3.0;
}

std::array<double, 2> BaseMesh::node_position(int i) const {
    if (model == Model::TorusGrid) {
        const double h = periods[0] / n;
        if (dim == 1) return {i * h, 0.0};
        const double hy = periods[1] / n;
        return {(i % n) * h, (i / n) * hy};
    }
    return {nodes[i].real(), nodes[i].imag()};
}

namespace {

BaseMesh build_torus_grid(const FundamentalDomain& domain, int n) {
    if (domain.dim > 2)
        throw std::invalid_argument("build_mesh: torus grids support dim <= 2");
    BaseMesh m;
    m.model = BaseMesh::Model::TorusGrid;
    m.dim = domain.dim;
    m.n = n;
    m.periods = domain.periods;
    return m;
}

BaseMesh build_polygon_fem(const FundamentalDomain& domain, int refinement) {
    const int nsides = domain.n_sides();
    const int R = 1 << (refinement + 1);

    BaseMesh m;
    m.model = BaseMesh::Model::HyperbolicFem;
    m.rings = R;
    m.nodes.push_back(Cx(0, 0));

    // ring k holds nsides*k nodes: the boundary polygon (sampled on the
    // geodesic sides at equal hyperbolic arclength fractions) scaled by k/R
    std::vector<std::vector<int>> ring(R + 1);
    ring[0] = {0};
    for (int k = 1; k <= R; ++k) {
        const double t = static_cast<double>(k) / R;
        for (int s = 0; s < nsides; ++s)
            for (int i = 0; i < k; ++i) {
                const double f = static_cast<double>(i) / k;
                const Cx b = mobius::geodesic_point(domain.vertex(s), domain.vertex(s + 1), f);
                ring[k].push_back(static_cast<int>(m.nodes.size()));
                m.nodes.push_back(t * b);
            }
    }

    auto ring_node = [&](int k, int pos) {
        const int count = nsides * k;
        return ring[k][((pos % count) + count) % count];
    };
    for (int k = 1; k <= R; ++k) {
        for (int s = 0; s < nsides; ++s) {
            for (int i = 0; i < k; ++i) {
                const int o0 = ring_node(k, s * k + i);
                const int o1 = ring_node(k, s * k + i + 1);
                const int in = k == 1 ? 0 : ring_node(k - 1, s * (k - 1) + i);
                m.tris.push_back({in, o0, o1});
            }
            for (int i = 0; i + 1 < k; ++i) {
                const int i0 = ring_node(k - 1, s * (k - 1) + i);
                const int i1 = ring_node(k - 1, s * (k - 1) + i + 1);
                const int o = ring_node(k, s * k + i + 1);
                m.tris.push_back({i0, o, i1});
            }
        }
    }

    m.tri_flat_area.reserve(m.tris.size());
    m.tri_metric_weight.reserve(m.tris.size());
    for (std::size_t t = 0; t < m.tris.size(); ++t) {
        const Cx a = m.nodes[m.tris[t][0]], b = m.nodes[m.tris[t][1]], c = m.nodes[m.tris[t][2]];
        const double area = std::abs(
            0.5 * ((b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real()));
        if (area <= 1e-15)
            throw std::runtime_error("build_mesh: degenerate triangle, element " +
                                     std::to_string(t));
        m.tri_flat_area.push_back(area);
        const Cx cen = (a + b + c) / 3.0;
        const double lam = 2.0 / (1.0 - std::norm(cen));
        m.tri_metric_weight.push_back(lam * lam);
    }

    // ordered boundary nodes per side: (s, 0..R-1) then the next corner
    m.side_nodes.assign(nsides, {});
    for (int s = 0; s < nsides; ++s) {
        for (int i = 0; i < R; ++i) m.side_nodes[s].push_back(ring_node(R, s * R + i));
        m.side_nodes[s].push_back(ring_node(R, (s + 1) * R));
    }
    return m;
}

}  // namespace

BaseMesh build_mesh(const FundamentalDomain& domain, int refinement) {
    if (refinement < 1) throw std::invalid_argument("build_mesh: refinement must be >= 1");
    if (domain.model == FundamentalDomain::Model::Torus)
        return build_torus_grid(domain, refinement);
    return build_polygon_fem(domain, refinement);
}

}  // namespace blochlab
