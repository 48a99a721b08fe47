#include "blochlab/deck_group.hpp"

#include <deque>
#include <stdexcept>

namespace blochlab {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

DeckGroup DeckGroup::make_z() { return make_zd(1); }

DeckGroup DeckGroup::make_zd(int d) {
    if (d < 1) throw std::invalid_argument("make_zd: rank must be >= 1");
    DeckGroup g;
    g.kind_ = GroupKind::FreeAbelian;
    g.dim_ = d;
    g.order_ = 0;
    for (int i = 0; i < d; ++i)
        g.generator_names_.push_back(d == 1 ? "t" : "t" + std::to_string(i + 1));
    // commutators [t_i, t_j] for i < j
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            g.relators_.push_back({i + 1, j + 1, -(i + 1), -(j + 1)});
    return g;
}

DeckGroup DeckGroup::make_zn(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("make_zn: order must be >= 1");
    DeckGroup g;
    g.kind_ = GroupKind::Cyclic;
    g.modulus_ = n;
    g.order_ = n;
    g.generator_names_ = {"t"};
    g.relators_.push_back(std::vector<int>(n, 1));  // t^n
    return g;
}

DeckGroup DeckGroup::make_dinf() {
    DeckGroup g;
    g.kind_ = GroupKind::InfiniteDihedral;
    g.order_ = 0;
    g.generator_names_ = {"T", "R"};
    g.relators_ = {{2, 2}, {2, 1, 2, 1}};  // R^2, RTRT
    return g;
}

DeckGroup DeckGroup::make_finite(const std::vector<std::vector<int>>& table,
                                 const std::vector<int>& generator_indices) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("make_finite: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("make_finite: table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("make_finite: table entry out of range");
    }
    // locate identity
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw std::invalid_argument("make_finite: no identity element");
    if (e != 0)
        throw std::invalid_argument("make_finite: identity must be element 0");
    // associativity and inverses
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("make_finite: table is not associative");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) inv[a] = b;
        if (inv[a] < 0) throw std::invalid_argument("make_finite: missing inverse");
    }
    // BFS words over the generators; verifies they generate
    std::vector<std::vector<int>> words(n);
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    seen[e] = 1;
    queue.push_back(e);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < generator_indices.size(); ++gi) {
            int b = table[a][generator_indices[gi]];
            if (!seen[b]) {
                seen[b] = 1;
                words[b] = words[a];
                words[b].push_back(static_cast<int>(gi) + 1);
                queue.push_back(b);
            }
        }
    }
    for (int a = 0; a < n; ++a)
        if (!seen[a])
            throw std::invalid_argument("make_finite: generators do not generate the group");

    DeckGroup g;
    g.kind_ = GroupKind::FiniteTable;
    g.order_ = n;
    g.table_ = table;
    g.gen_indices_ = generator_indices;
    g.inverse_ = inv;
    g.element_words_ = std::move(words);
    for (std::size_t i = 0; i < generator_indices.size(); ++i)
        g.generator_names_.push_back("g" + std::to_string(i + 1));
    return g;
}

GroupElement DeckGroup::identity() const {
    switch (kind_) {
        case GroupKind::FreeAbelian:
            return {std::vector<std::int64_t>(dim_, 0)};
        case GroupKind::Cyclic:
        case GroupKind::FiniteTable:
            return {{0}};
        case GroupKind::InfiniteDihedral:
            return {{0, 0}};
    }
    throw std::logic_error("unreachable");
}

GroupElement DeckGroup::generator(int i) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            GroupElement a = identity();
            a.coords[i] = 1;
            return a;
        }
        case GroupKind::Cyclic:
            return {{mod_pos(1, modulus_)}};
        case GroupKind::FiniteTable:
            return {{gen_indices_[i]}};
        case GroupKind::InfiniteDihedral:
            return i == 0 ? GroupElement{{1, 0}} : GroupElement{{0, 1}};
    }
    throw std::logic_error("unreachable");
}

GroupElement DeckGroup::compose(const GroupElement& a, const GroupElement& b) const {
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            GroupElement c = a;
            for (int i = 0; i < dim_; ++i) c.coords[i] += b.coords[i];
            return c;
        }
        case GroupKind::Cyclic:
            return {{mod_pos(a.coords[0] + b.coords[0], modulus_)}};
        case GroupKind::FiniteTable:
            return {{table_[a.coords[0]][b.coords[0]]}};
        case GroupKind::InfiniteDihedral: {
            // (T^k R^e)(T^m R^f) = T^{k + (-1)^e m} R^{e xor f}
            std::int64_t k = a.coords[0], m = b.coords[0];
            std::int64_t e = a.coords[1], f = b.coords[1];
            return {{k + (e ? -m : m), e ^ f}};
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement DeckGroup::inverse(const GroupElement& a) const {
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            GroupElement c = a;
            for (auto& x : c.coords) x = -x;
            return c;
        }
        case GroupKind::Cyclic:
            return {{mod_pos(-a.coords[0], modulus_)}};
        case GroupKind::FiniteTable:
            return {{inverse_[a.coords[0]]}};
        case GroupKind::InfiniteDihedral:
            return a.coords[1] ? a : GroupElement{{-a.coords[0], 0}};
    }
    throw std::logic_error("unreachable");
}

GroupElement DeckGroup::evaluate_word(const std::vector<int>& word) const {
    GroupElement acc = identity();
    for (int s : word) {
        if (s == 0) throw std::invalid_argument("evaluate_word: zero letter");
        int i = (s > 0 ? s : -s) - 1;
        GroupElement g = generator(i);
        if (s < 0) g = inverse(g);
        acc = compose(acc, g);
    }
    return acc;
}

std::vector<GroupElement> DeckGroup::elements() const {
    if (order_ == 0)
        throw std::logic_error("elements(): group is infinite");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back({{i}});
    return out;
}

const std::vector<int>& DeckGroup::word_of(const GroupElement& a) const {
    if (kind_ != GroupKind::FiniteTable)
        throw std::logic_error("word_of: only available for finite-table groups");
    return element_words_[a.coords[0]];
}

std::string DeckGroup::describe(const GroupElement& a) const {
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            std::string s = "(";
            for (int i = 0; i < dim_; ++i)
                s += (i ? "," : "") + std::to_string(a.coords[i]);
            return s + ")";
        }
        case GroupKind::Cyclic:
        case GroupKind::FiniteTable:
            return std::to_string(a.coords[0]);
        case GroupKind::InfiniteDihedral:
            return "T^" + std::to_string(a.coords[0]) + (a.coords[1] ? " R" : "");
    }
    return "?";
}

}  // namespace blochlab
