#include "blochlab/dual.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blochlab {

namespace {

BlochFrame dinf_2d_frame(double theta, double weight, int index) {
    BlochFrame f;
    f.parameter = {theta};
    f.weight = weight;
    f.index = index;
    f.rep.dimension = 2;
    MatrixXc t = MatrixXc::Zero(2, 2), r = MatrixXc::Zero(2, 2);
    t(0, 0) = std::polar(1.0, theta);
    t(1, 1) = std::polar(1.0, -theta);
    r(0, 1) = 1.0;
    r(1, 0) = 1.0;
    f.rep.generator_matrices = {t, r};
    return f;
}

BlochFrame dinf_1d_frame(double t_sign, double r_sign, int index) {
    BlochFrame f;
    f.parameter = {t_sign > 0 ? 0.0 : std::numbers::pi};
    f.weight = 0.0;  // measure-zero endpoints
    f.index = index;
    f.rep.dimension = 1;
    MatrixXc t(1, 1), r(1, 1);
    t(0, 0) = t_sign;
    r(0, 0) = r_sign;
    f.rep.generator_matrices = {t, r};
    return f;
}

}  // namespace

std::vector<BlochFrame> dual_frames(const DeckGroup& group, int resolution) {
    if (resolution < 1) throw std::invalid_argument("dual_frames: resolution must be >= 1");
    std::vector<BlochFrame> out;
    switch (group.kind()) {
        case GroupKind::FreeAbelian: {
            const int d = group.rank();
            std::int64_t total = 1;
            for (int i = 0; i < d; ++i) total *= resolution;
            const double w = 1.0 / static_cast<double>(total);
            std::vector<int> idx(d, 0);
            for (std::int64_t k = 0; k < total; ++k) {
                BlochFrame f;
                std::vector<double> theta(d);
                for (int i = 0; i < d; ++i)
                    theta[i] = static_cast<double>(idx[i]) / resolution;
                f.rep = UnitaryRep::character(theta);
                f.parameter = theta;
                f.weight = w;
                f.index = static_cast<int>(k);
                out.push_back(std::move(f));
                for (int i = d - 1; i >= 0; --i) {
                    if (++idx[i] < resolution) break;
                    idx[i] = 0;
                }
            }
            return out;
        }
        case GroupKind::Cyclic: {
            const auto n = group.order();
            for (std::int64_t k = 0; k < n; ++k) {
                BlochFrame f;
                double theta = static_cast<double>(k) / static_cast<double>(n);
                f.rep = UnitaryRep::character({theta});
                f.parameter = {theta};
                f.weight = 1.0 / static_cast<double>(n);
                f.index = static_cast<int>(k);
                out.push_back(std::move(f));
            }
            return out;
        }
        case GroupKind::InfiniteDihedral: {
            // midpoint rule on (0,pi), measure d theta/(2 pi)
            const double h = std::numbers::pi / resolution;
            for (int k = 0; k < resolution; ++k)
                out.push_back(dinf_2d_frame((k + 0.5) * h, h / (2.0 * std::numbers::pi), k));
            out.push_back(dinf_1d_frame(+1, +1, resolution + 0));
            out.push_back(dinf_1d_frame(+1, -1, resolution + 1));
            out.push_back(dinf_1d_frame(-1, +1, resolution + 2));
            out.push_back(dinf_1d_frame(-1, -1, resolution + 3));
            return out;
        }
        case GroupKind::FiniteTable:
            throw std::invalid_argument(
                "dual_frames: finite-table groups need a supplied irrep table");
    }
    throw std::logic_error("unreachable");
}

std::vector<BlochFrame> dual_frames(const DeckGroup& group,
                                    const std::vector<UnitaryRep>& irreps) {
    if (group.kind() != GroupKind::FiniteTable)
        throw std::invalid_argument("dual_frames: irrep-table overload needs a finite group");
    std::int64_t dim_sq_sum = 0;
    for (const auto& rep : irreps) {
        if (!check_representation(group, rep).pass)
            throw std::invalid_argument("dual_frames: supplied irrep fails group relations");
        dim_sq_sum += static_cast<std::int64_t>(rep.dimension) * rep.dimension;
    }
    if (dim_sq_sum != group.order())
        throw std::invalid_argument(
            "dual_frames: sum of squared irrep dimensions does not match group order");
    std::vector<BlochFrame> out;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        BlochFrame f;
        f.rep = irreps[i];
        f.weight = static_cast<double>(irreps[i].dimension) / static_cast<double>(group.order());
        f.index = static_cast<int>(i);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace blochlab
