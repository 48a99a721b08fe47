#include "blochlab/representation.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace blochlab {

namespace {

// U^k by repeated squaring; k may be negative (unitary inverse = adjoint).
MatrixXc matrix_power(const MatrixXc& u, std::int64_t k) {
    const int n = static_cast<int>(u.rows());
    if (k == 0) return MatrixXc::Identity(n, n);
    MatrixXc base = k > 0 ? u : MatrixXc(u.adjoint());
    std::uint64_t e = static_cast<std::uint64_t>(k > 0 ? k : -k);
    MatrixXc acc = MatrixXc::Identity(n, n);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

MatrixXc UnitaryRep::evaluate(const DeckGroup& group, const GroupElement& a) const {
    if (static_cast<int>(generator_matrices.size()) != group.rank())
        throw std::invalid_argument("rep/group generator count mismatch");
    switch (group.kind()) {
        case GroupKind::FreeAbelian: {
            MatrixXc acc = MatrixXc::Identity(dimension, dimension);
            for (std::size_t i = 0; i < a.coords.size(); ++i)
                acc = acc * matrix_power(generator_matrices[i], a.coords[i]);
            return acc;
        }
        case GroupKind::Cyclic:
            return matrix_power(generator_matrices[0], a.coords[0]);
        case GroupKind::FiniteTable:
            return evaluate_word(group.word_of(a));
        case GroupKind::InfiniteDihedral: {
            MatrixXc acc = matrix_power(generator_matrices[0], a.coords[0]);
            if (a.coords[1]) acc = acc * generator_matrices[1];
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

MatrixXc UnitaryRep::evaluate_word(const std::vector<int>& word) const {
    MatrixXc acc = MatrixXc::Identity(dimension, dimension);
    for (int s : word) {
        if (s == 0) throw std::invalid_argument("evaluate_word: zero letter");
        int i = (s > 0 ? s : -s) - 1;
        if (i >= static_cast<int>(generator_matrices.size()))
            throw std::invalid_argument("evaluate_word: generator index out of range");
        if (s > 0)
            acc = acc * generator_matrices[i];
        else
            acc = acc * generator_matrices[i].adjoint();
    }
    return acc;
}

UnitaryRep UnitaryRep::trivial(int rank, int dimension) {
    UnitaryRep rep;
    rep.dimension = dimension;
    for (int i = 0; i < rank; ++i)
        rep.generator_matrices.push_back(MatrixXc::Identity(dimension, dimension));
    return rep;
}

UnitaryRep UnitaryRep::character(const std::vector<double>& theta) {
    UnitaryRep rep;
    rep.dimension = 1;
    for (double th : theta) {
        MatrixXc m(1, 1);
        m(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * th);
        rep.generator_matrices.push_back(m);
    }
    return rep;
}

RelationReport check_representation(const DeckGroup& group, const UnitaryRep& rep) {
    if (static_cast<int>(rep.generator_matrices.size()) != group.rank())
        throw std::invalid_argument("check_representation: generator count mismatch");
    for (const auto& m : rep.generator_matrices)
        if (m.rows() != rep.dimension || m.cols() != rep.dimension)
            throw std::invalid_argument("check_representation: matrix dimension mismatch");

    RelationReport report;
    const MatrixXc eye = MatrixXc::Identity(rep.dimension, rep.dimension);
    for (const auto& m : rep.generator_matrices) {
        double r = (m.adjoint() * m - eye).norm();
        report.max_unitarity_residual = std::max(report.max_unitarity_residual, r);
    }
    for (const auto& w : group.relators()) {
        double r = (rep.evaluate_word(w) - eye).norm();
        report.max_relator_residual = std::max(report.max_relator_residual, r);
    }
    report.pass = report.max_unitarity_residual <= rep.tolerance &&
                  report.max_relator_residual <= rep.tolerance;
    return report;
}

std::vector<UnitaryRep> load_irreps(const std::string& path, int n_generators) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_irreps: cannot open " + path);
    std::vector<UnitaryRep> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag != "irrep")
            throw std::runtime_error("load_irreps: expected 'irrep <dim>', got: " + line);
        int dim = 0;
        if (!(ls >> dim) || dim < 1)
            throw std::runtime_error("load_irreps: bad dimension in: " + line);
        UnitaryRep rep;
        rep.dimension = dim;
        for (int g = 0; g < n_generators; ++g) {
            MatrixXc m(dim, dim);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    double re, im;
                    if (!(in >> re >> im))
                        throw std::runtime_error("load_irreps: truncated matrix data");
                    m(r, c) = Complex(re, im);
                }
            rep.generator_matrices.push_back(m);
        }
        std::getline(in, line);  // consume end of last matrix line
        out.push_back(std::move(rep));
    }
    if (out.empty()) throw std::runtime_error("load_irreps: no irreps in " + path);
    return out;
}

}  // namespace blochlab
