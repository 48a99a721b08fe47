#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "blochlab/dual.hpp"
#include "blochlab/eigensolver.hpp"
#include "blochlab/mesh.hpp"

namespace blochlab {

// Membership test for a region of the base surface, evaluated at element
// centroids: torus coordinates (x, y) or disk coordinates (Re z, Im z).
using Region = std::function<bool(double, double)>;

// Discrete -Delta^rho as a Hermitian stiffness/mass pair. Interior
// couplings are the metric Laplacian tensored with the fiber identity;
// the twist enters only through the rho(gamma) blocks identifying paired
// boundary degrees of freedom (slave dofs eliminated against masters).
struct TwistedOperator {
    SpMatC stiffness;  // reduced, Hermitian PSD
    SpMatC mass;       // reduced, Hermitian PD
    int fiber_dim = 1;
    UnitaryRep rep;
    std::shared_ptr<const BaseMesh> mesh;

    // hyperbolic model bookkeeping (empty on the torus, where no dofs
    // are eliminated)
    SpMatC prolongation;             // full dofs x reduced dofs
    std::vector<int> reduced_nodes;  // reduced node -> representative mesh node
    double identification_residual = 0;  // worst closure defect of rho-transports

    int n_dofs() const { return static_cast<int>(stiffness.rows()); }
    int n_reduced_nodes() const { return n_dofs() / fiber_dim; }
    std::array<double, 2> reduced_node_position(int i) const;

    // mass matrix restricted to elements whose centroid lies in the region
    SpMatC restricted_mass(const Region& region) const;
    // pointwise multiplication by a function of the base point, sampled at
    // (representative) node positions
    VectorXc apply_multiplier(const std::function<double(double, double)>& a,
                              const VectorXc& u) const;
    double mass_norm(const VectorXc& u) const;
};

// Fiber dimensions above this are outside numerical scope.
inline constexpr int kMaxFiberDim = 16;

TwistedOperator assemble(const BaseMesh& mesh, const UnitaryRep& rep,
                         const FundamentalDomain& domain);

// Eigenvalue lambda >= 0 and mass-normalized coefficients of -Delta^rho u = lambda u.
struct EigenSection {
    double eigenvalue = 0;
    VectorXc coefficients;
    double residual = 0;
};

std::vector<EigenSection> eigensections(
    const TwistedOperator& op, int count,
    std::optional<std::pair<double, double>> window = std::nullopt,
    std::uint64_t seed = 1234);

// Gram matrix <1_Omega u_j, u_k> of the sections in the restricted mass
// inner product; entry (j, k) = u_j^H M_Omega u_k. Throws if the region
// selects no elements.
MatrixXc restrict_mass(const TwistedOperator& op,
                       const std::vector<EigenSection>& sections,
                       const Region& region);

void export_spectrum(const TwistedOperator& op, const std::vector<EigenSection>& secs,
                     const std::string& descriptor, const std::string& path);

}  // namespace blochlab
