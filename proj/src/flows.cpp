#include "blochlab/flows.hpp"

#include <cmath>
#include <stdexcept>

namespace blochlab {

using Cx = std::complex<double>;

void FlowPoint::renormalize() {
    const double det = g.determinant();
    if (det <= 0) throw std::runtime_error("FlowPoint: nonpositive determinant");
    g /= std::sqrt(det);
}

double FlowPoint::det_drift() const { return std::abs(g.determinant() - 1.0); }

Cx FlowPoint::base_halfplane() const { return mobius::act_halfplane(g, Cx(0, 1)); }

Cx FlowPoint::base_disk() const { return mobius::disk_from_halfplane(base_halfplane()); }

FlowPoint geodesic_flow(const FlowPoint& p, double t) {
    Eigen::Matrix2d d;
    d << std::exp(t / 2), 0, 0, std::exp(-t / 2);
    FlowPoint q{p.g * d};
    q.renormalize();
    return q;
}

FlowPoint horocycle_flow(const FlowPoint& p, double s, bool stable) {
    Eigen::Matrix2d u = Eigen::Matrix2d::Identity();
    if (stable)
        u(0, 1) = s;
    else
        u(1, 0) = s;
    FlowPoint q{p.g * u};
    q.renormalize();
    return q;
}

SurfaceProjection project_to_surface(const FlowPoint& p, const FundamentalDomain& domain,
                                     double t_hint) {
    if (domain.model != FundamentalDomain::Model::HyperbolicPolygon)
        throw std::invalid_argument("project_to_surface: hyperbolic domain required");
    const int n = domain.n_sides();

    // side geodesics as circles orthogonal to the unit circle
    struct Circle {
        Cx center;
        double radius;
    };
    std::vector<Circle> circles(n);
    for (int s = 0; s < n; ++s) {
        const Cx a = domain.vertex(s), b = domain.vertex(s + 1);
        // solve 2 Re(c conj(p)) = 1 + |p|^2 for p = a, b
        const double det = a.real() * b.imag() - a.imag() * b.real();
        if (std::abs(det) < 1e-14)
            throw std::runtime_error("project_to_surface: degenerate side geodesic");
        const double ra = 0.5 * (1.0 + std::norm(a)), rb = 0.5 * (1.0 + std::norm(b));
        const double cx = (ra * b.imag() - rb * a.imag()) / det;
        const double cy = (a.real() * rb - b.real() * ra) / det;
        circles[s] = {Cx(cx, cy), std::abs(Cx(cx, cy) - a)};
    }

    SurfaceProjection out;
    out.point = p;
    const int budget = static_cast<int>(10.0 * (1.0 + std::abs(t_hint)));
    for (int step = 0; step <= budget; ++step) {
        const Cx w = out.point.base_disk();
        // pick the most violated side; ties resolved by side index
        int worst = -1;
        double depth = 1e-12;
        for (int s = 0; s < n; ++s) {
            const double d = circles[s].radius - std::abs(w - circles[s].center);
            if (d > depth) {
                depth = d;
                worst = s;
            }
        }
        if (worst < 0) {
            out.base_disk = w;
            return out;
        }
        // beyond side `worst`: the point lies in the neighbor tile
        // crossing(D); pull back by the inverse crossing
        const Isometry inv = domain.pairings[worst].crossing.inverse();
        out.point.g = inv.mat * out.point.g;
        out.point.renormalize();
        out.word.push_back(worst);
    }
    throw std::runtime_error(
        "project_to_surface: step budget exhausted (point near a polygon vertex?)");
}

double smooth_window(double x, double inner, double outer) {
    const double a = std::abs(x);
    if (a <= inner) return 1.0;
    if (a >= outer) return 0.0;
    const double t = (a - inner) / (outer - inner);
    return 0.5 * (1.0 + std::cos(M_PI * t));
}

namespace symbols {

Symbol windowed_quadratic(double inner, double outer) {
    Symbol a;
    a.support = "window |g11| < " + std::to_string(outer);
    a.eval = [inner, outer](const FlowPoint& p) {
        const double x = p.g(0, 0);
        return smooth_window(x, inner, outer) * x * x;
    };
    return a;
}

Symbol base_bump(Cx z0, double radius) {
    Symbol a;
    a.support = "bump at base point";
    a.eval = [z0, radius](const FlowPoint& p) {
        const Cx z = p.base_halfplane();
        const double d = std::acosh(
            1.0 + (std::norm(z - z0)) / (2.0 * z.imag() * z0.imag()));
        return smooth_window(d, radius / 2, radius);
    };
    return a;
}

void partition_pair(Symbol& a1, Symbol& a2, double split_radius) {
    Symbol inner;
    inner.support = "hyperbolic disk around i";
    inner.eval = [split_radius](const FlowPoint& p) {
        const Cx z = p.base_halfplane();
        const Cx z0(0, 1);
        const double d = std::acosh(
            1.0 + (std::norm(z - z0)) / (2.0 * z.imag() * z0.imag()));
        return smooth_window(d, split_radius, 2 * split_radius);
    };
    a1 = inner;
    a2.support = "complement of " + inner.support;
    a2.eval = [inner](const FlowPoint& p) { return 1.0 - inner.eval(p); };
}

}  // namespace symbols

}  // namespace blochlab
