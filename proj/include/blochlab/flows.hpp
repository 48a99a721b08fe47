#pragma once

#include <functional>

#include "blochlab/geometry.hpp"

namespace blochlab {

// Point of the unit cotangent bundle of the hyperbolic plane, identified
// with a real unit-determinant 2x2 group coordinate. Flows act by right
// multiplication; deck transformations by left multiplication.
struct FlowPoint {
    Eigen::Matrix2d g = Eigen::Matrix2d::Identity();

    void renormalize();                      // rescale to det 1
    double det_drift() const;                // |det - 1| before renormalizing
    std::complex<double> base_halfplane() const;  // g . i
    std::complex<double> base_disk() const;
};

// right multiplication by diag(e^{t/2}, e^{-t/2})
FlowPoint geodesic_flow(const FlowPoint& p, double t);

// right multiplication by the upper (stable) or lower (unstable) unipotent
FlowPoint horocycle_flow(const FlowPoint& p, double s, bool stable);

struct SurfaceProjection {
    FlowPoint point;                 // representative with base point inside
    std::vector<int> word;           // crossed sides, in application order
    std::complex<double> base_disk;  // reduced base point
};

// Reduces the base point of p into the fundamental polygon by applying
// side crossings; re-applying the recorded word recovers the input.
// Throws if the step budget (default 10 (1+|t_hint|)) is exhausted, which
// typically means the trajectory passed too close to a polygon vertex.
SurfaceProjection project_to_surface(const FlowPoint& p, const FundamentalDomain& domain,
                                     double t_hint = 0.0);

// Observable on the unit cotangent bundle.
struct Symbol {
    std::function<double(const FlowPoint&)> eval;
    std::string support;

    double operator()(const FlowPoint& p) const { return eval(p); }
};

// Smooth window w(x): 1 for |x| <= inner, 0 for |x| >= outer, C^1 monotone
// in between.
double smooth_window(double x, double inner, double outer);

// Ready-made symbols for the propagation experiments.
namespace symbols {
// windowed quadratic in the (1,1) entry of the group coordinate; its
// unstable derivative is constant along geodesic orbits inside the window
Symbol windowed_quadratic(double inner = 40.0, double outer = 80.0);
// smooth bump in the half-plane base point around z0
Symbol base_bump(std::complex<double> z0_halfplane, double radius);
// pair a1, a2 with a1 + a2 = 1 built from a smooth threshold on the
// base point's hyperbolic distance to i
void partition_pair(Symbol& a1, Symbol& a2, double split_radius = 1.0);
}  // namespace symbols

}  // namespace blochlab
