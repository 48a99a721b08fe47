#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "blochlab/deck_group.hpp"
#include "blochlab/representation.hpp"

namespace blochlab {

// Hyperbolic-plane isometry as a real 2x2 unit-determinant matrix acting on
// the upper half-plane (sign-quotiented), or a translation of R^d for the
// flat model.
struct Isometry {
    enum class Model { Hyperbolic, Translation };
    Model model = Model::Hyperbolic;
    Eigen::Matrix2d mat = Eigen::Matrix2d::Identity();
    std::vector<double> shift;

    static Isometry hyperbolic(const Eigen::Matrix2d& m);
    static Isometry translation(const std::vector<double>& v);

    Isometry compose(const Isometry& o) const;
    Isometry inverse() const;
    // canonical sign: first nonzero entry positive (PSL quotient)
    void canonicalize();
};

// Mobius action helpers. Polygon work happens in the unit disk; the flow
// model lives on the half-plane. Cayley transform bridges the two.
namespace mobius {
std::complex<double> disk_from_halfplane(std::complex<double> z);
std::complex<double> halfplane_from_disk(std::complex<double> w);
// half-plane action of a real matrix
std::complex<double> act_halfplane(const Eigen::Matrix2d& m, std::complex<double> z);
// disk action of an SU(1,1) matrix
std::complex<double> act_disk(const Eigen::Matrix2cd& m, std::complex<double> w);
// SU(1,1) <-> SL(2,R) through the Cayley transform
Eigen::Matrix2d sl2_from_su11(const Eigen::Matrix2cd& a);
Eigen::Matrix2cd su11_from_sl2(const Eigen::Matrix2d& m);
// point at hyperbolic-arclength fraction f on the geodesic from p to q (disk)
std::complex<double> geodesic_point(std::complex<double> p, std::complex<double> q, double f);
double hyperbolic_distance(std::complex<double> p, std::complex<double> q);
}  // namespace mobius

// One polygon side and its identification data.
struct SidePairing {
    int side = 0;          // this side s
    int partner = 0;       // the side glued to s
    // crossing(D) is the neighbor tile across side s; it maps the partner
    // side onto side s reversing endpoint order
    Isometry crossing;
    Eigen::Matrix2cd crossing_su11 = Eigen::Matrix2cd::Identity();
    int letter = 0;        // signed generator: +g means crossing = generator g
};

struct FundamentalDomain {
    enum class Model { Torus, HyperbolicPolygon };
    Model model = Model::Torus;

    // torus
    int dim = 1;
    std::vector<double> periods;  // default 1 per axis

    // hyperbolic 4g-gon in the unit disk
    int genus = 0;
    std::vector<std::complex<double>> vertices;
    std::vector<SidePairing> pairings;      // one per side
    std::vector<int> boundary_word;         // signed letter per side
    double circumradius = 0;                // hyperbolic

    int n_sides() const;
    int n_generators() const;               // 2g, or dim for the torus
    std::complex<double> vertex(int k) const;
    // product of pairings along the boundary word; distance to +-identity
    double relator_residual() const;
    // worst endpoint mismatch of a pairing, over all sides
    double pairing_endpoint_error() const;
    // interior angle of the polygon at vertex k, from side tangents
    double vertex_angle(int k) const;

    static FundamentalDomain torus(int dim, std::vector<double> periods = {});
};

// Regular hyperbolic 4g-gon centered at the origin of the disk with vertex
// angle 2 pi/(4g); side pairings realize the boundary word
// a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1. Throws for g < 2.
FundamentalDomain regular_4g_gon(int genus);

// A cover described by its deck group and the crossing offsets per side.
struct CoverTiling {
    FundamentalDomain base;
    DeckGroup deck;
    std::vector<GroupElement> side_offset;  // tile multiplier when crossing side s
    std::vector<int> side_partner;
    std::string kind;

    // traversing a gluing and back must be the identity
    bool gluing_consistent() const;
};

struct CoverSpec {
    enum class Kind { ZAlongGenerator, MaxAbelian, Dinf, FiniteQuotient };
    Kind kind = Kind::ZAlongGenerator;
    int generator = 0;    // unrolled generator (Z / finite quotient)
    int order = 0;        // finite quotient order n
    int involution_generator = -1;  // Dinf: generator mapped to the reflection
};

CoverTiling build_cover(const FundamentalDomain& base, const CoverSpec& spec);

// Push a deck-group representation through the cover homomorphism to get
// surface-group generator matrices (one per base generator), ready for the
// twisted assembly.
UnitaryRep pullback_rep(const CoverTiling& cover, const UnitaryRep& deck_rep);

// Plain-text export of vertices, pairings, and gluing offsets for plotting.
void write_geometry(const FundamentalDomain& domain, const std::string& path);
void write_geometry(const CoverTiling& cover, const std::string& path);

}  // namespace blochlab
