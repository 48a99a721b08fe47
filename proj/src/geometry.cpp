#include "blochlab/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace blochlab {

using std::complex;
using Cx = complex<double>;

Isometry Isometry::hyperbolic(const Eigen::Matrix2d& m) {
    Isometry iso;
    iso.model = Model::Hyperbolic;
    iso.mat = m;
    double det = m.determinant();
    if (std::abs(det - 1.0) > 1e-12) {
        if (det <= 0) throw std::invalid_argument("Isometry: determinant must be positive");
        iso.mat /= std::sqrt(det);
    }
    iso.canonicalize();
    return iso;
}

Isometry Isometry::translation(const std::vector<double>& v) {
    Isometry iso;
    iso.model = Model::Translation;
    iso.shift = v;
    return iso;
}

Isometry Isometry::compose(const Isometry& o) const {
    if (model != o.model) throw std::invalid_argument("Isometry: model mismatch");
    if (model == Model::Hyperbolic) return hyperbolic(mat * o.mat);
    Isometry iso = *this;
    for (std::size_t i = 0; i < shift.size(); ++i) iso.shift[i] += o.shift[i];
    return iso;
}

Isometry Isometry::inverse() const {
    if (model == Model::Hyperbolic) {
        Eigen::Matrix2d inv;
        inv << mat(1, 1), -mat(0, 1), -mat(1, 0), mat(0, 0);
        return hyperbolic(inv);
    }
    Isometry iso = *this;
    for (auto& x : iso.shift) x = -x;
    return iso;
}

void Isometry::canonicalize() {
    if (model != Model::Hyperbolic) return;
    for (int i = 0; i < 4; ++i) {
        double v = mat(i / 2, i % 2);
        if (std::abs(v) > 1e-14) {
            if (v < 0) mat = -mat;
            return;
        }
    }
}

namespace mobius {

Cx disk_from_halfplane(Cx z) { return (z - Cx(0, 1)) / (z + Cx(0, 1)); }
Cx halfplane_from_disk(Cx w) { return Cx(0, 1) * (Cx(1, 0) + w) / (Cx(1, 0) - w); }

Cx act_halfplane(const Eigen::Matrix2d& m, Cx z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

Cx act_disk(const Eigen::Matrix2cd& m, Cx w) {
    return (m(0, 0) * w + m(0, 1)) / (m(1, 0) * w + m(1, 1));
}

// Cayley matrix C with w = (z - i)/(z + i); normalized so det C = 1.
static Eigen::Matrix2cd cayley() {
    Eigen::Matrix2cd c;
    c << Cx(1, 0), Cx(0, -1), Cx(1, 0), Cx(0, 1);
    // det = 2i; divide by sqrt(2i) = (1 + i)
    return c / Cx(1, 1);
}

Eigen::Matrix2d sl2_from_su11(const Eigen::Matrix2cd& a) {
    const Eigen::Matrix2cd c = cayley();
    Eigen::Matrix2cd m = c.inverse() * a * c;
    Eigen::Matrix2d out;
    out << m(0, 0).real(), m(0, 1).real(), m(1, 0).real(), m(1, 1).real();
    return out;
}

Eigen::Matrix2cd su11_from_sl2(const Eigen::Matrix2d& m) {
    const Eigen::Matrix2cd c = cayley();
    return c * m.cast<Cx>() * c.inverse();
}

double hyperbolic_distance(Cx p, Cx q) {
    return 2.0 * std::atanh(std::abs((p - q) / (Cx(1, 0) - std::conj(p) * q)));
}

Cx geodesic_point(Cx p, Cx q, double f) {
    // translate p -> 0, walk along the straight ray, translate back
    const Cx w = (q - p) / (Cx(1, 0) - std::conj(p) * q);
    const double d = 2.0 * std::atanh(std::abs(w));
    if (d == 0.0) return p;
    const Cx dir = w / std::abs(w);
    const Cx w2 = std::tanh(0.5 * f * d) * dir;
    return (w2 + p) / (Cx(1, 0) + std::conj(p) * w2);
}

// SU(1,1) translate taking p to the origin
static Eigen::Matrix2cd disk_translate(Cx p) {
    const double s = 1.0 / std::sqrt(1.0 - std::norm(p));
    Eigen::Matrix2cd m;
    m << Cx(s, 0), -p * s, -std::conj(p) * s, Cx(s, 0);
    return m;
}

static Eigen::Matrix2cd disk_rotation(double phi) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, phi / 2);
    m(1, 1) = std::polar(1.0, -phi / 2);
    return m;
}

// unique orientation-preserving isometry with p0 -> q0, p1 -> q1
// (requires d(p0,p1) = d(q0,q1))
static Eigen::Matrix2cd disk_isometry(Cx p0, Cx p1, Cx q0, Cx q1) {
    auto canon = [](Cx a, Cx b) {
        Eigen::Matrix2cd t = disk_translate(a);
        const Cx w = act_disk(t, b);
        return Eigen::Matrix2cd(disk_rotation(-std::arg(w)) * t);
    };
    return canon(q0, q1).inverse() * canon(p0, p1);
}

}  // namespace mobius

int FundamentalDomain::n_sides() const {
    return model == Model::Torus ? 2 * dim : static_cast<int>(vertices.size());
}

int FundamentalDomain::n_generators() const {
    return model == Model::Torus ? dim : 2 * genus;
}

Cx FundamentalDomain::vertex(int k) const {
    const int n = static_cast<int>(vertices.size());
    return vertices[((k % n) + n) % n];
}

double FundamentalDomain::relator_residual() const {
    if (model != Model::HyperbolicPolygon)
        throw std::logic_error("relator_residual: hyperbolic model only");
    // product of crossings along the boundary word; the crossing of the
    // side carrying letter +g is the generator g itself
    std::vector<Eigen::Matrix2d> gen(n_generators());
    for (const auto& p : pairings)
        if (p.letter > 0) gen[p.letter - 1] = p.crossing.mat;
    Eigen::Matrix2d w = Eigen::Matrix2d::Identity();
    for (int s : boundary_word) {
        const int g = (s > 0 ? s : -s) - 1;
        Eigen::Matrix2d m = gen[g];
        if (s < 0) m = Isometry::hyperbolic(m).inverse().mat;
        w = w * m;
    }
    const Eigen::Matrix2d eye = Eigen::Matrix2d::Identity();
    return std::min((w - eye).cwiseAbs().maxCoeff(), (w + eye).cwiseAbs().maxCoeff());
}

double FundamentalDomain::pairing_endpoint_error() const {
    double worst = 0.0;
    for (const auto& p : pairings) {
        // crossing maps partner side (v_q, v_q+1) onto (v_s+1, v_s)
        const Cx a = mobius::act_disk(p.crossing_su11, vertex(p.partner));
        const Cx b = mobius::act_disk(p.crossing_su11, vertex(p.partner + 1));
        worst = std::max(worst, std::abs(a - vertex(p.side + 1)));
        worst = std::max(worst, std::abs(b - vertex(p.side)));
    }
    return worst;
}

double FundamentalDomain::vertex_angle(int k) const {
    // angle between geodesic tangents toward both neighbors
    const Cx p = vertex(k);
    auto dir = [&](Cx q) {
        const Cx w = (q - p) / (Cx(1, 0) - std::conj(p) * q);
        return std::arg(w);
    };
    double a = dir(vertex(k - 1)) - dir(vertex(k + 1));
    a = std::abs(std::remainder(a, 2 * std::numbers::pi));
    return a;
}

FundamentalDomain FundamentalDomain::torus(int dim, std::vector<double> periods) {
    if (dim < 1) throw std::invalid_argument("torus: dim must be >= 1");
    FundamentalDomain d;
    d.model = Model::Torus;
    d.dim = dim;
    d.periods = periods.empty() ? std::vector<double>(dim, 1.0) : std::move(periods);
    if (static_cast<int>(d.periods.size()) != dim)
        throw std::invalid_argument("torus: period count mismatch");
    return d;
}

FundamentalDomain regular_4g_gon(int genus) {
    if (genus < 2) throw std::invalid_argument("regular_4g_gon: genus must be >= 2");
    const int n = 4 * genus;
    const double target = 2.0 * std::numbers::pi / n;  // vertex angle

    // vertex angle as a function of circumradius, from the right triangle
    // (center, vertex, edge midpoint): cosh r = cot(pi/n) cot(angle/2)
    auto angle_of = [&](double r) {
        return 2.0 * std::atan(1.0 / (std::cosh(r) * std::tan(std::numbers::pi / n)));
    };
    double lo = 1e-6, hi = 10.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (angle_of(mid) > target)
            lo = mid;  // angle decreases with r
        else
            hi = mid;
    }
    const double r = 0.5 * (lo + hi);
    if (std::abs(angle_of(r) - target) > 1e-12)
        throw std::runtime_error("regular_4g_gon: angle bisection failed");

    FundamentalDomain d;
    d.model = FundamentalDomain::Model::HyperbolicPolygon;
    d.genus = genus;
    d.circumradius = r;
    const double re = std::tanh(r / 2);
    for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / n + std::numbers::pi / n;
        d.vertices.push_back(std::polar(re, phi));
    }

    // boundary word a1 b1 a1^-1 b1^-1 ... ; generators 1..2g signed
    d.boundary_word.resize(n);
    for (int i = 0; i < genus; ++i) {
        d.boundary_word[4 * i + 0] = +(2 * i + 1);
        d.boundary_word[4 * i + 1] = +(2 * i + 2);
        d.boundary_word[4 * i + 2] = -(2 * i + 1);
        d.boundary_word[4 * i + 3] = -(2 * i + 2);
    }

    // Side pairings. All crossings reverse endpoint order, so neighbor
    // tiles sit on the far side of each edge. The generator a_i crosses
    // its letter side 4i, b_i crosses the inverse-letter side 4i+3; this
    // is the unique assignment that makes the boundary-word relator the
    // identity with a single vertex cycle.
    auto V = [&](int k) { return d.vertex(k); };
    d.pairings.resize(n);
    for (int i = 0; i < genus; ++i) {
        const int la = 4 * i, lb = 4 * i + 1;
        const Eigen::Matrix2cd A =
            mobius::disk_isometry(V(la + 2), V(la + 3), V(la + 1), V(la));
        const Eigen::Matrix2cd B =
            mobius::disk_isometry(V(lb), V(lb + 1), V(lb + 3), V(lb + 2));
        auto fill = [&](int side, int partner, const Eigen::Matrix2cd& m, int letter) {
            SidePairing p;
            p.side = side;
            p.partner = partner;
            p.crossing_su11 = m;
            p.crossing = Isometry::hyperbolic(mobius::sl2_from_su11(m));
            p.letter = letter;
            d.pairings[side] = p;
        };
        fill(la, la + 2, A, +(2 * i + 1));
        fill(la + 2, la, A.inverse(), -(2 * i + 1));
        fill(lb + 3, lb, B, +(2 * i + 2));
        fill(lb, lb + 3, B.inverse(), -(2 * i + 2));
    }

    if (d.relator_residual() > 1e-8)
        throw std::runtime_error("regular_4g_gon: relator residual too large");
    if (d.pairing_endpoint_error() > 1e-8)
        throw std::runtime_error("regular_4g_gon: side pairing endpoint mismatch");
    return d;
}

bool CoverTiling::gluing_consistent() const {
    for (std::size_t s = 0; s < side_offset.size(); ++s) {
        const int t = side_partner[s];
        if (side_partner[t] != static_cast<int>(s)) return false;
        const GroupElement round =
            deck.compose(side_offset[s], side_offset[t]);
        if (!(round == deck.identity())) return false;
    }
    return true;
}

CoverTiling build_cover(const FundamentalDomain& base, const CoverSpec& spec) {
    CoverTiling cover;
    cover.base = base;
    const int ngen = base.n_generators();

    // phi(generator) for the cover homomorphism
    std::vector<GroupElement> phi;
    switch (spec.kind) {
        case CoverSpec::Kind::ZAlongGenerator: {
            if (spec.generator < 0 || spec.generator >= ngen)
                throw std::invalid_argument("build_cover: invalid generator index");
            cover.deck = DeckGroup::make_z();
            cover.kind = "Z";
            for (int g = 0; g < ngen; ++g)
                phi.push_back(g == spec.generator ? cover.deck.generator(0)
                                                  : cover.deck.identity());
            break;
        }
        case CoverSpec::Kind::FiniteQuotient: {
            if (spec.generator < 0 || spec.generator >= ngen)
                throw std::invalid_argument("build_cover: invalid generator index");
            if (spec.order < 1) throw std::invalid_argument("build_cover: invalid quotient order");
            cover.deck = DeckGroup::make_zn(spec.order);
            cover.kind = "Z" + std::to_string(spec.order);
            for (int g = 0; g < ngen; ++g)
                phi.push_back(g == spec.generator ? cover.deck.generator(0)
                                                  : cover.deck.identity());
            break;
        }
        case CoverSpec::Kind::MaxAbelian: {
            cover.deck = DeckGroup::make_zd(ngen);
            cover.kind = "max-abelian";
            for (int g = 0; g < ngen; ++g) phi.push_back(cover.deck.generator(g));
            break;
        }
        case CoverSpec::Kind::Dinf: {
            if (base.model != FundamentalDomain::Model::HyperbolicPolygon)
                throw std::invalid_argument("build_cover: Dinf cover needs a polygon base");
            const int jt = spec.generator;           // -> translation T
            const int jr = spec.involution_generator >= 0 ? spec.involution_generator
                                                          : 2;  // default a2
            if (jt < 0 || jt >= ngen || jr < 0 || jr >= ngen || jt == jr)
                throw std::invalid_argument("build_cover: invalid Dinf generator choice");
            cover.deck = DeckGroup::make_dinf();
            cover.kind = "Dinf";
            for (int g = 0; g < ngen; ++g) {
                if (g == jt)
                    phi.push_back(cover.deck.generator(0));
                else if (g == jr)
                    phi.push_back(cover.deck.generator(1));
                else
                    phi.push_back(cover.deck.identity());
            }
            break;
        }
    }

    // phi must kill the surface relator; for the torus the generators commute
    if (base.model == FundamentalDomain::Model::HyperbolicPolygon) {
        GroupElement w = cover.deck.identity();
        for (int s : base.boundary_word) {
            const int g = (s > 0 ? s : -s) - 1;
            GroupElement x = phi[g];
            if (s < 0) x = cover.deck.inverse(x);
            w = cover.deck.compose(w, x);
        }
        if (!(w == cover.deck.identity()))
            throw std::invalid_argument("build_cover: cover map does not kill the relator");
    } else {
        for (int i = 0; i < ngen; ++i)
            for (int j = 0; j < ngen; ++j) {
                const GroupElement ab = cover.deck.compose(phi[i], phi[j]);
                const GroupElement ba = cover.deck.compose(phi[j], phi[i]);
                if (!(ab == ba))
                    throw std::invalid_argument("build_cover: torus cover must be abelian");
            }
    }

    // crossing offsets per side
    if (base.model == FundamentalDomain::Model::Torus) {
        // sides 2a (positive axis a) and 2a+1 (negative)
        cover.side_offset.resize(2 * base.dim);
        cover.side_partner.resize(2 * base.dim);
        for (int a = 0; a < base.dim; ++a) {
            cover.side_offset[2 * a] = phi[a];
            cover.side_offset[2 * a + 1] = cover.deck.inverse(phi[a]);
            cover.side_partner[2 * a] = 2 * a + 1;
            cover.side_partner[2 * a + 1] = 2 * a;
        }
    } else {
        const int n = base.n_sides();
        cover.side_offset.resize(n);
        cover.side_partner.resize(n);
        for (int s = 0; s < n; ++s) {
            const auto& p = base.pairings[s];
            cover.side_partner[s] = p.partner;
            const int g = (p.letter > 0 ? p.letter : -p.letter) - 1;
            cover.side_offset[s] =
                p.letter > 0 ? phi[g] : cover.deck.inverse(phi[g]);
        }
    }
    return cover;
}

UnitaryRep pullback_rep(const CoverTiling& cover, const UnitaryRep& deck_rep) {
    UnitaryRep rep;
    rep.dimension = deck_rep.dimension;
    rep.tolerance = deck_rep.tolerance;
    const int ngen = cover.base.n_generators();
    rep.generator_matrices.resize(ngen);
    if (cover.base.model == FundamentalDomain::Model::Torus) {
        for (int a = 0; a < ngen; ++a)
            rep.generator_matrices[a] =
                deck_rep.evaluate(cover.deck, cover.side_offset[2 * a]);
        return rep;
    }
    for (int s = 0; s < cover.base.n_sides(); ++s) {
        const int letter = cover.base.pairings[s].letter;
        if (letter > 0)
            rep.generator_matrices[letter - 1] =
                deck_rep.evaluate(cover.deck, cover.side_offset[s]);
    }
    return rep;
}

void write_geometry(const FundamentalDomain& domain, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_geometry: cannot open " + path);
    if (domain.model == FundamentalDomain::Model::Torus) {
        out << "model torus\ndim " << domain.dim << "\nperiods";
        for (double p : domain.periods) out << ' ' << p;
        out << '\n';
        return;
    }
    out << "model hyperbolic-polygon\ngenus " << domain.genus << "\nvertices "
        << domain.vertices.size() << '\n';
    out.precision(17);
    for (const auto& v : domain.vertices) out << v.real() << ' ' << v.imag() << '\n';
    out << "pairings\n";
    for (const auto& p : domain.pairings) {
        out << p.side << ' ' << p.partner << ' ' << p.letter;
        for (int i = 0; i < 4; ++i) out << ' ' << p.crossing.mat(i / 2, i % 2);
        out << '\n';
    }
}

void write_geometry(const CoverTiling& cover, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_geometry: cannot open " + path);
    out << "cover " << cover.kind << "\nsides " << cover.side_offset.size() << '\n';
    for (std::size_t s = 0; s < cover.side_offset.size(); ++s)
        out << s << ' ' << cover.side_partner[s] << ' '
            << cover.deck.describe(cover.side_offset[s]) << '\n';
}

}  // namespace blochlab
