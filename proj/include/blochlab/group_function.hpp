#pragma once

#include <map>

#include "blochlab/dual.hpp"

namespace blochlab {

// Finitely supported complex function on a deck group.
struct GroupFunction {
    std::map<GroupElement, Complex> values;

    static GroupFunction delta(const GroupElement& a) { return {{{a, Complex(1.0)}}}; }

    GroupFunction& add(const GroupElement& a, Complex v) {
        values[a] += v;
        return *this;
    }

    double norm_sq() const {
        double s = 0;
        for (const auto& [k, v] : values) s += std::norm(v);
        return s;
    }
};

// Fourier transform at a dual point: sum_gamma f(gamma^-1) rho(gamma),
// evaluated over the finite support as sum_s f(s) rho(s^-1).
MatrixXc fourier_transform(const GroupFunction& f, const DeckGroup& group,
                           const BlochFrame& frame);

// |f|^2 against the quadrature sum of ||F f||_HS^2 over the frame family,
// as a relative error. Throws if f is identically zero.
double plancherel_error(const GroupFunction& f, const DeckGroup& group,
                        const std::vector<BlochFrame>& frames);

// Adjoint reconstruction: f(gamma) = sum_frames w <F f(rho), rho(gamma^-1)>_HS
// evaluated on the given support.
GroupFunction fourier_inverse(const std::vector<MatrixXc>& transforms,
                              const std::vector<BlochFrame>& frames,
                              const DeckGroup& group,
                              const std::vector<GroupElement>& support);

}  // namespace blochlab
