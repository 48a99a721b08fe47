#include "blochlab/bloch.hpp"

#include <stdexcept>

namespace blochlab {

double CoverFunction::norm_sq(const std::vector<double>& dof_measure) const {
    double s = 0;
    for (const auto& [k, v] : values) {
        double w = dof_measure.empty() ? 1.0 : dof_measure.at(k.second);
        s += w * std::norm(v);
    }
    return s;
}

FiberVector bloch_nc(const CoverFunction& psi, const DeckGroup& group, int dof,
                     const std::optional<GroupElement>& at) {
    const GroupElement shift = at.value_or(group.identity());
    FiberVector out;
    for (const auto& [key, v] : psi.values) {
        if (key.second != dof || v == Complex(0.0)) continue;
        // entry at gamma with gamma * shift = tile  =>  gamma = tile * shift^-1
        out.entries[group.compose(key.first, group.inverse(shift))] = v;
    }
    return out;
}

FiberVector fiber_action(const FiberVector& v, const DeckGroup& group,
                         const GroupElement& eta) {
    FiberVector out;
    const GroupElement etainv = group.inverse(eta);
    for (const auto& [gamma, c] : v.entries)
        out.entries[group.compose(gamma, etainv)] = c;
    return out;
}

MatrixXc bloch_generalized(const CoverFunction& psi, const DeckGroup& group,
                           const BlochFrame& frame, int dof,
                           const std::optional<GroupElement>& at) {
    const GroupElement shift = at.value_or(group.identity());
    const int d = frame.rep.dimension;
    MatrixXc acc = MatrixXc::Zero(d, d);
    for (const auto& [key, v] : psi.values) {
        if (key.second != dof || v == Complex(0.0)) continue;
        // gamma^-1 * shift = tile  =>  gamma = shift * tile^-1
        const GroupElement gamma = group.compose(shift, group.inverse(key.first));
        acc += v * frame.rep.evaluate(group, gamma);
    }
    return acc;
}

BlochSection bloch_section(const CoverFunction& psi, const DeckGroup& group,
                           const BlochFrame& frame, int n_dofs) {
    BlochSection s;
    s.frame = &frame;
    s.values.reserve(n_dofs);
    for (int dof = 0; dof < n_dofs; ++dof)
        s.values.push_back(bloch_generalized(psi, group, frame, dof));
    return s;
}

double plancherel_check(const CoverFunction& psi, const DeckGroup& group,
                        const std::vector<BlochFrame>& frames, int n_dofs,
                        const std::vector<double>& dof_measure) {
    const double lhs = psi.norm_sq(dof_measure);
    if (lhs == 0.0) throw std::invalid_argument("plancherel_check: zero function");
    double rhs = 0.0;
    for (const auto& frame : frames) {
        if (frame.weight == 0.0) continue;
        double fsum = 0.0;
        for (int dof = 0; dof < n_dofs; ++dof) {
            double w = dof_measure.empty() ? 1.0 : dof_measure.at(dof);
            fsum += w * bloch_generalized(psi, group, frame, dof).squaredNorm();
        }
        rhs += frame.weight * fsum;
    }
    return std::abs(lhs - rhs) / lhs;
}

CoverFunction inverse_bloch(const std::vector<BlochSection>& sections,
                            const std::vector<BlochFrame>& frames,
                            const DeckGroup& group,
                            const std::vector<GroupElement>& tile_support) {
    if (sections.size() != frames.size())
        throw std::invalid_argument("inverse_bloch: section/frame count mismatch");
    std::size_t n_dofs = 0;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (sections[i].frame != nullptr && sections[i].frame->index != frames[i].index)
            throw std::invalid_argument("inverse_bloch: frame family mismatch");
        n_dofs = std::max(n_dofs, sections[i].values.size());
    }
    CoverFunction out;
    for (const auto& s : tile_support) {
        const GroupElement sinv = group.inverse(s);
        for (std::size_t dof = 0; dof < n_dofs; ++dof) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < frames.size(); ++i) {
                if (frames[i].weight == 0.0 || dof >= sections[i].values.size()) continue;
                const MatrixXc rho = frames[i].rep.evaluate(group, sinv);
                acc += frames[i].weight * (sections[i].values[dof] * rho.adjoint()).trace();
            }
            out.values[{s, static_cast<int>(dof)}] = acc;
        }
    }
    return out;
}

}  // namespace blochlab
