#pragma once

#include <map>
#include <optional>

#include "blochlab/group_function.hpp"

namespace blochlab {

// A finitely supported function on a tiled cover: values indexed by
// (deck group element in normal form, base degree of freedom).
struct CoverFunction {
    std::map<std::pair<GroupElement, int>, Complex> values;

    CoverFunction& set(const GroupElement& tile, int dof, Complex v) {
        values[{tile, dof}] = v;
        return *this;
    }
    Complex at(const GroupElement& tile, int dof) const {
        auto it = values.find({tile, dof});
        return it == values.end() ? Complex(0.0) : it->second;
    }
    int max_dof() const {
        int m = -1;
        for (const auto& [k, v] : values) m = std::max(m, k.second);
        return m;
    }
    double norm_sq(const std::vector<double>& dof_measure = {}) const;
};

// Fiber vector over one base point: entries indexed by deck elements.
struct FiberVector {
    std::map<GroupElement, Complex> entries;
};

// Matrix-valued Bloch section for one frame: one d x d matrix per base dof.
struct BlochSection {
    const BlochFrame* frame = nullptr;
    std::vector<MatrixXc> values;  // indexed by base dof
};

// Collects the tile values of psi over the base dof `dof`, shifted so that
// the entry at gamma is psi on tile gamma * at. The plain transform is
// at = identity.
FiberVector bloch_nc(const CoverFunction& psi, const DeckGroup& group, int dof,
                     const std::optional<GroupElement>& at = std::nullopt);

// Deck action on fiber vectors: delta_[gamma] -> delta_[gamma eta^-1],
// so the coefficient of the result at gamma' is v at gamma' * eta.
FiberVector fiber_action(const FiberVector& v, const DeckGroup& group,
                         const GroupElement& eta);

// Generalized Bloch transform at one base dof:
//   sum_gamma psi(gamma^-1 * at, dof) rho(gamma).
MatrixXc bloch_generalized(const CoverFunction& psi, const DeckGroup& group,
                           const BlochFrame& frame, int dof,
                           const std::optional<GroupElement>& at = std::nullopt);

// Full section over dofs 0 .. n_dofs-1 with at = identity.
BlochSection bloch_section(const CoverFunction& psi, const DeckGroup& group,
                           const BlochFrame& frame, int n_dofs);

// Relative defect of the Plancherel identity
//   |psi|^2 = sum_frames w sum_dof ||(B psi)(rho)(dof)||_HS^2 measure(dof).
// dof_measure empty means unit weight per dof. Throws on psi == 0.
double plancherel_check(const CoverFunction& psi, const DeckGroup& group,
                        const std::vector<BlochFrame>& frames, int n_dofs,
                        const std::vector<double>& dof_measure = {});

// Adjoint reconstruction of a cover function on the given tile support:
//   psi(s, dof) = sum_frames w <section(dof), rho(s^-1)>_HS.
CoverFunction inverse_bloch(const std::vector<BlochSection>& sections,
                            const std::vector<BlochFrame>& frames,
                            const DeckGroup& group,
                            const std::vector<GroupElement>& tile_support);

}  // namespace blochlab
