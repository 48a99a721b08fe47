#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "blochlab/deck_group.hpp"

namespace blochlab {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

// A unitary representation given by one matrix per group generator.
struct UnitaryRep {
    int dimension = 1;
    std::vector<MatrixXc> generator_matrices;
    double tolerance = 1e-10;

    // rho(a) for an arbitrary element in normal form.
    MatrixXc evaluate(const DeckGroup& group, const GroupElement& a) const;
    MatrixXc evaluate_word(const std::vector<int>& word) const;

    static UnitaryRep trivial(int rank, int dimension = 1);
    // One-dimensional character of Z^d: t_j -> exp(2 pi i theta_j).
    static UnitaryRep character(const std::vector<double>& theta);
};

struct RelationReport {
    double max_unitarity_residual = 0.0;
    double max_relator_residual = 0.0;
    bool pass = false;
};

// Checks ||U*U - I|| on every generator and ||rho(relator) - I|| on every
// relator of the group, Frobenius norms. Throws on dimension mismatch.
RelationReport check_representation(const DeckGroup& group, const UnitaryRep& rep);

// Irrep tables for finite groups read from a structured text file.
// Format, one block per irrep:
//   irrep <dimension>
//   <generator matrix rows, row-major, "re im" pairs>; one matrix per
//   generator, dimension rows each, blank-line separated blocks.
std::vector<UnitaryRep> load_irreps(const std::string& path, int n_generators);

}  // namespace blochlab
