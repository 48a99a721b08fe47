#include "blochlab/group_function.hpp"

#include <stdexcept>

namespace blochlab {

MatrixXc fourier_transform(const GroupFunction& f, const DeckGroup& group,
                           const BlochFrame& frame) {
    const int d = frame.rep.dimension;
    MatrixXc acc = MatrixXc::Zero(d, d);
    for (const auto& [s, v] : f.values)
        acc += v * frame.rep.evaluate(group, group.inverse(s));
    return acc;
}

double plancherel_error(const GroupFunction& f, const DeckGroup& group,
                        const std::vector<BlochFrame>& frames) {
    const double lhs = f.norm_sq();
    if (lhs == 0.0) throw std::invalid_argument("plancherel_error: zero function");
    double rhs = 0.0;
    for (const auto& frame : frames) {
        if (frame.weight == 0.0) continue;
        rhs += frame.weight * fourier_transform(f, group, frame).squaredNorm();
    }
    return std::abs(lhs - rhs) / lhs;
}

GroupFunction fourier_inverse(const std::vector<MatrixXc>& transforms,
                              const std::vector<BlochFrame>& frames,
                              const DeckGroup& group,
                              const std::vector<GroupElement>& support) {
    if (transforms.size() != frames.size())
        throw std::invalid_argument("fourier_inverse: transform/frame count mismatch");
    GroupFunction out;
    for (const auto& s : support) {
        const GroupElement sinv = group.inverse(s);
        Complex acc = 0.0;
        for (std::size_t i = 0; i < frames.size(); ++i) {
            if (frames[i].weight == 0.0) continue;
            const MatrixXc rho = frames[i].rep.evaluate(group, sinv);
            // <A, B>_HS = tr(A B*)
            acc += frames[i].weight * (transforms[i] * rho.adjoint()).trace();
        }
        out.values[s] = acc;
    }
    return out;
}

}  // namespace blochlab
