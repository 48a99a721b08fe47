#include "blochlab/twisted_operator.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace blochlab {

namespace {

using Triplet = Eigen::Triplet<Complex>;
using Cx = std::complex<double>;

void add_block(std::vector<Triplet>& trip, int row_node, int col_node, int fd,
               const MatrixXc& block) {
    for (int a = 0; a < fd; ++a)
        for (int b = 0; b < fd; ++b) {
            const Complex v = block(a, b);
            if (v != Complex(0.0)) trip.emplace_back(row_node * fd + a, col_node * fd + b, v);
        }
}

// v times the fiber identity
void add_eye_block(std::vector<Triplet>& trip, int row_node, int col_node, int fd, Complex v) {
    for (int a = 0; a < fd; ++a) trip.emplace_back(row_node * fd + a, col_node * fd + a, v);
}

SpMatC from_triplets(int rows, int cols, std::vector<Triplet>& trip) {
    SpMatC m(rows, cols);
    m.setFromTriplets(trip.begin(), trip.end());
    m.makeCompressed();
    return m;
}

SpMatC hermitize(const SpMatC& m) {
    SpMatC out = 0.5 * (m + SpMatC(m.adjoint()));
    out.prune([](int, int, const Complex& v) { return std::abs(v) > 1e-300; });
    out.makeCompressed();
    return out;
}

// ---------------------------------------------------------------- torus --

TwistedOperator assemble_torus(const BaseMesh& mesh, const UnitaryRep& rep) {
    const int fd = rep.dimension;
    const int n = mesh.n;
    const int d = mesh.dim;
    if (n < 2) throw std::invalid_argument("assemble: torus grid needs n >= 2");

    double vol = 1.0;
    std::vector<double> h(d);
    for (int a = 0; a < d; ++a) {
        h[a] = mesh.periods[a] / n;
        vol *= h[a];
    }
    const int total = mesh.n_nodes();

    std::vector<Triplet> kt, mt;
    auto node_index = [&](int jx, int jy) { return d == 1 ? jx : jy * n + jx; };

    for (int node = 0; node < total; ++node) {
        add_eye_block(mt, node, node, fd, vol);
        const int jx = d == 1 ? node : node % n;
        const int jy = d == 1 ? 0 : node / n;
        for (int axis = 0; axis < d; ++axis) {
            const double c = vol / (h[axis] * h[axis]);
            const int j = axis == 0 ? jx : jy;
            const bool wrap = (j + 1 == n);
            const int nb = axis == 0 ? node_index(wrap ? 0 : jx + 1, jy)
                                     : node_index(jx, wrap ? 0 : jy + 1);
            add_eye_block(kt, node, node, fd, c);
            add_eye_block(kt, nb, nb, fd, c);
            if (wrap) {
                // u(x + L e_axis) = rho(T_axis) u(x): the wrap couples
                // node -> rho(T) nb
                const MatrixXc t = rep.generator_matrices[axis];
                add_block(kt, node, nb, fd, MatrixXc(-c * t));
                add_block(kt, nb, node, fd, MatrixXc(-c * t.adjoint()));
            } else {
                add_eye_block(kt, node, nb, fd, -c);
                add_eye_block(kt, nb, node, fd, -c);
            }
        }
    }

    TwistedOperator op;
    op.fiber_dim = fd;
    op.rep = rep;
    op.stiffness = hermitize(from_triplets(total * fd, total * fd, kt));
    op.mass = hermitize(from_triplets(total * fd, total * fd, mt));
    return op;
}

// ----------------------------------------------------------- hyperbolic --

struct Transported {
    int root;
    MatrixXc u;  // u_node = u * u_root
};

class GaugeUnionFind {
public:
    GaugeUnionFind(int n, int fd) : parent_(n), transport_(n, MatrixXc::Identity(fd, fd)) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    Transported find(int x) {
        if (parent_[x] == x) return {x, transport_[x]};
        Transported up = find(parent_[x]);
        parent_[x] = up.root;
        transport_[x] = transport_[x] * up.u;
        return {up.root, transport_[x]};
    }

    // impose u_x = w u_y; returns the closure residual when x and y were
    // already connected
    double relate(int x, int y, const MatrixXc& w) {
        Transported tx = find(x), ty = find(y);
        if (tx.root != ty.root) {
            // u_root_y = (w t_y)^-1 t_x u_root_x
            parent_[ty.root] = tx.root;
            transport_[ty.root] = ty.u.adjoint() * w.adjoint() * tx.u;
            return 0.0;
        }
        return (tx.u - w * ty.u).norm();
    }

private:
    std::vector<int> parent_;
    std::vector<MatrixXc> transport_;
};

TwistedOperator assemble_polygon(const BaseMesh& mesh, const UnitaryRep& rep,
                                 const FundamentalDomain& domain) {
    const int fd = rep.dimension;
    const int nn = mesh.n_nodes();
    const int R = mesh.rings;

    // flat P1 element matrices; the Dirichlet energy is conformally
    // invariant in 2d, so only the mass carries the metric weight
    std::vector<Triplet> kt, mt;
    for (std::size_t t = 0; t < mesh.tris.size(); ++t) {
        std::array<int, 3> v = mesh.tris[t];
        Cx p0 = mesh.nodes[v[0]], p1 = mesh.nodes[v[1]], p2 = mesh.nodes[v[2]];
        double signed_area =
            0.5 * ((p1 - p0).real() * (p2 - p0).imag() - (p1 - p0).imag() * (p2 - p0).real());
        if (signed_area < 0) {
            std::swap(v[1], v[2]);
            std::swap(p1, p2);
            signed_area = -signed_area;
        }
        const Cx e[3] = {p2 - p1, p0 - p2, p1 - p0};  // edge opposite vertex i
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double kij =
                    (e[i].real() * e[j].real() + e[i].imag() * e[j].imag()) / (4.0 * signed_area);
                add_eye_block(kt, v[i], v[j], fd, kij);
            }
        const double mw = mesh.tri_flat_area[t] * mesh.tri_metric_weight[t] / 12.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) add_eye_block(mt, v[i], v[j], fd, mw * (i == j ? 2.0 : 1.0));
    }
    SpMatC k_full = from_triplets(nn * fd, nn * fd, kt);
    SpMatC m_full = from_triplets(nn * fd, nn * fd, mt);

    // identify paired boundary nodes through the rho(gamma) blocks
    GaugeUnionFind uf(nn, fd);
    double worst_closure = 0.0;
    for (const auto& p : domain.pairings) {
        if (p.letter <= 0) continue;  // each pair once, via its positive letter
        const MatrixXc w = rep.generator_matrices[p.letter - 1];
        const auto& src = mesh.side_nodes[p.partner];  // crossing maps partner -> side
        const auto& dst = mesh.side_nodes[p.side];
        for (int j = 0; j <= R; ++j) {
            const int y = src[j], x = dst[R - j];
            // geometric sanity: the crossing must map node y onto node x
            const Cx img = mobius::act_disk(p.crossing_su11, mesh.nodes[y]);
            if (std::abs(img - mesh.nodes[x]) > 1e-8)
                throw std::runtime_error("assemble: unmatched boundary node on side " +
                                         std::to_string(p.side));
            worst_closure = std::max(worst_closure, uf.relate(x, y, w));
        }
    }
    if (worst_closure > 1e-6)
        throw std::runtime_error("assemble: inconsistent boundary identification (relator?)");

    // prolongation onto root nodes
    std::vector<int> roots;
    std::vector<int> reduced_index(nn, -1);
    for (int i = 0; i < nn; ++i)
        if (uf.find(i).root == i) {
            reduced_index[i] = static_cast<int>(roots.size());
            roots.push_back(i);
        }
    std::vector<Triplet> pt;
    for (int i = 0; i < nn; ++i) {
        const Transported tr = uf.find(i);
        add_block(pt, i, reduced_index[tr.root], fd, tr.u);
    }
    const int nr = static_cast<int>(roots.size());
    SpMatC prol = from_triplets(nn * fd, nr * fd, pt);

    TwistedOperator op;
    op.fiber_dim = fd;
    op.rep = rep;
    op.prolongation = prol;
    op.reduced_nodes = std::move(roots);
    op.identification_residual = worst_closure;
    op.stiffness = hermitize(SpMatC(prol.adjoint() * k_full * prol));
    op.mass = hermitize(SpMatC(prol.adjoint() * m_full * prol));
    return op;
}

}  // namespace

std::array<double, 2> TwistedOperator::reduced_node_position(int i) const {
    if (mesh->model == BaseMesh::Model::TorusGrid) return mesh->node_position(i);
    return mesh->node_position(reduced_nodes[i]);
}

SpMatC TwistedOperator::restricted_mass(const Region& region) const {
    const int fd = fiber_dim;
    bool any = false;
    if (mesh->model == BaseMesh::Model::TorusGrid) {
        const int n = mesh->n, d = mesh->dim;
        double vol = 1.0;
        std::vector<double> h(d);
        for (int a = 0; a < d; ++a) {
            h[a] = mesh->periods[a] / n;
            vol *= h[a];
        }
        std::vector<Triplet> mt;
        for (int node = 0; node < mesh->n_nodes(); ++node) {
            const auto pos = mesh->node_position(node);
            const double cx = pos[0] + h[0] / 2;
            const double cy = d == 1 ? 0.0 : pos[1] + h[1] / 2;
            if (region(cx, cy)) {
                add_eye_block(mt, node, node, fd, vol);
                any = true;
            }
        }
        if (!any) throw std::invalid_argument("restricted_mass: empty region");
        return from_triplets(n_dofs(), n_dofs(), mt);
    }
    std::vector<Triplet> mt;
    for (std::size_t t = 0; t < mesh->tris.size(); ++t) {
        const Cx c = mesh->tri_centroid(static_cast<int>(t));
        if (!region(c.real(), c.imag())) continue;
        any = true;
        const double mw = mesh->tri_flat_area[t] * mesh->tri_metric_weight[t] / 12.0;
        const auto& v = mesh->tris[t];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) add_eye_block(mt, v[i], v[j], fd, mw * (i == j ? 2.0 : 1.0));
    }
    if (!any) throw std::invalid_argument("restricted_mass: empty region");
    const int nn = mesh->n_nodes();
    SpMatC m_full = from_triplets(nn * fd, nn * fd, mt);
    return hermitize(SpMatC(prolongation.adjoint() * m_full * prolongation));
}

VectorXc TwistedOperator::apply_multiplier(const std::function<double(double, double)>& a,
                                           const VectorXc& u) const {
    VectorXc out(u.size());
    for (int i = 0; i < n_reduced_nodes(); ++i) {
        const auto pos = reduced_node_position(i);
        const double s = a(pos[0], pos[1]);
        for (int f = 0; f < fiber_dim; ++f) out(i * fiber_dim + f) = s * u(i * fiber_dim + f);
    }
    return out;
}

double TwistedOperator::mass_norm(const VectorXc& u) const {
    return std::sqrt(std::abs(u.dot(mass * u).real()));
}

TwistedOperator assemble(const BaseMesh& mesh, const UnitaryRep& rep,
                         const FundamentalDomain& domain) {
    if (rep.dimension > kMaxFiberDim)
        throw std::invalid_argument("assemble: fiber dimension exceeds the supported bound");
    DeckGroup shape = domain.model == FundamentalDomain::Model::Torus
                          ? DeckGroup::make_zd(domain.dim)
                          : DeckGroup::make_zd(2 * domain.genus);
    // only the generator count and unitarity matter here; surface-group
    // relator consistency is enforced by the identification closure below
    RelationReport rr;
    {
        UnitaryRep probe = rep;
        rr = check_representation(shape, probe);
    }
    if (rr.max_unitarity_residual > rep.tolerance)
        throw std::invalid_argument("assemble: representation is not unitary within tolerance");

    TwistedOperator op = mesh.model == BaseMesh::Model::TorusGrid
                             ? assemble_torus(mesh, rep)
                             : assemble_polygon(mesh, rep, domain);
    op.mesh = std::make_shared<BaseMesh>(mesh);
    return op;
}

std::vector<EigenSection> eigensections(const TwistedOperator& op, int count,
                                        std::optional<std::pair<double, double>> window,
                                        std::uint64_t seed) {
    if (count < 1 || count > op.n_dofs())
        throw std::invalid_argument("eigensections: invalid count");
    EigenOptions opts;
    opts.k = count;
    opts.window = window;
    opts.seed = seed;
    const auto pairs = solve_eigenpairs(op.stiffness, op.mass, opts);
    std::vector<EigenSection> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back({p.value, p.vector, p.residual});
    return out;
}

MatrixXc restrict_mass(const TwistedOperator& op, const std::vector<EigenSection>& sections,
                       const Region& region) {
    const SpMatC m = op.restricted_mass(region);
    const int k = static_cast<int>(sections.size());
    MatrixXc g(k, k);
    std::vector<VectorXc> mu(k);
    for (int j = 0; j < k; ++j) mu[j] = m * sections[j].coefficients;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = sections[i].coefficients.dot(mu[j]);
    return 0.5 * (g + g.adjoint().eval());
}

void export_spectrum(const TwistedOperator& op, const std::vector<EigenSection>& secs,
                     const std::string& descriptor, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_spectrum: cannot open " + path);
    out << "# " << descriptor << '\n';
    out << "# model "
        << (op.mesh->model == BaseMesh::Model::TorusGrid ? "torus-grid" : "hyperbolic-fem")
        << " size " << (op.mesh->model == BaseMesh::Model::TorusGrid ? op.mesh->n : op.mesh->rings)
        << " fiber " << op.fiber_dim << '\n';
    out.precision(15);
    for (std::size_t i = 0; i < secs.size(); ++i)
        out << i << ' ' << secs[i].eigenvalue << ' ' << secs[i].residual << '\n';
}

}  // namespace blochlab
