#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blochlab {

// A group element in normal form. The meaning of `coords` depends on the
// owning group's kind:
//   FreeAbelian(d):    d integer exponents
//   Cyclic(n):         one exponent in [0, n)
//   FiniteTable:       one entry, the element index in the table
//   InfiniteDihedral:  (k, eps) for T^k R^eps, eps in {0,1}
struct GroupElement {
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

enum class GroupKind { FreeAbelian, Cyclic, FiniteTable, InfiniteDihedral };

// A finitely generated deck transformation group with an exact element
// model. Elements are normal forms, never enumerated sets, so infinite
// groups (Z^d, D_inf) are handled symbolically.
class DeckGroup {
public:
    static DeckGroup make_z();
    static DeckGroup make_zd(int d);
    static DeckGroup make_zn(std::int64_t n);
    // table[i][j] = index of g_i * g_j; generators = indices that generate.
    // Throws if the table is not associative or lacks inverses/identity,
    // or if the listed generators do not generate the whole group.
    static DeckGroup make_finite(const std::vector<std::vector<int>>& table,
                                 const std::vector<int>& generator_indices);
    static DeckGroup make_dinf();

    GroupKind kind() const { return kind_; }
    int rank() const { return static_cast<int>(generator_names_.size()); }
    std::int64_t order() const { return order_; }  // 0 means infinite
    const std::vector<std::string>& generator_names() const { return generator_names_; }

    GroupElement identity() const;
    GroupElement generator(int i) const;
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    // Evaluates a word given as signed generator indices: +k means
    // generator k-1, -k its inverse (k >= 1).
    GroupElement evaluate_word(const std::vector<int>& word) const;

    // Relators as words in the convention of evaluate_word.
    const std::vector<std::vector<int>>& relators() const { return relators_; }

    // All elements; only valid for finite groups.
    std::vector<GroupElement> elements() const;
    // Word expressing a finite-table element in the generators (from BFS).
    const std::vector<int>& word_of(const GroupElement& a) const;

    std::string describe(const GroupElement& a) const;

private:
    DeckGroup() = default;

    GroupKind kind_ = GroupKind::FreeAbelian;
    int dim_ = 1;               // FreeAbelian rank
    std::int64_t modulus_ = 0;  // Cyclic order
    std::int64_t order_ = 0;
    std::vector<std::string> generator_names_;
    std::vector<std::vector<int>> relators_;

    // finite table model
    std::vector<std::vector<int>> table_;
    std::vector<int> gen_indices_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> element_words_;
};

}  // namespace blochlab
