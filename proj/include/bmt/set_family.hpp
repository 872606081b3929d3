#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmt/ordinal.hpp"

namespace bmt {

using set_mask = uint32_t;

inline bool mask_subset(set_mask a, set_mask b) { return (a & ~b) == 0; }
inline bool mask_strict_subset(set_mask a, set_mask b) { return a != b && mask_subset(a, b); }

inline std::vector<int> mask_points(set_mask m) {
    std::vector<int> pts;
    for (int i = 0; i < 32; ++i)
        if (m & (set_mask(1) << i)) pts.push_back(i);
    return pts;
}

inline set_mask mask_of(const std::vector<int>& pts, unsigned universe) {
    set_mask m = 0;
    for (int p : pts) {
        if (p < 0 || unsigned(p) >= universe)
            throw std::invalid_argument("set element " + std::to_string(p) + " outside universe");
        m |= set_mask(1) << p;
    }
    return m;
}

// A finite explicit family of distinct nonempty subsets of {0..universe_size-1}.
// The list order is the family's canonical enumeration / well-order; all
// choice functions resolve to the lowest index.
class set_family {
public:
    static constexpr unsigned max_universe = 24;

    set_family(unsigned universe_size, std::vector<set_mask> sets)
        : universe_(universe_size), sets_(std::move(sets)) {
        if (universe_ > max_universe)
            throw std::invalid_argument("universe size exceeds " + std::to_string(max_universe));
        set_mask full = universe_ == 32 ? ~set_mask(0) : (set_mask(1) << universe_) - 1;
        for (size_t i = 0; i < sets_.size(); ++i) {
            if (sets_[i] == 0) throw std::invalid_argument("family contains the empty set");
            if ((sets_[i] & ~full) != 0)
                throw std::invalid_argument("set exceeds the universe");
            for (size_t j = 0; j < i; ++j)
                if (sets_[i] == sets_[j]) throw std::invalid_argument("duplicate set in family");
        }
        if (sets_.empty()) throw std::invalid_argument("empty family");
    }

    unsigned universe_size() const { return universe_; }
    size_t size() const { return sets_.size(); }
    set_mask at(size_t i) const { return sets_.at(i); }
    const std::vector<set_mask>& sets() const { return sets_; }

    std::optional<size_t> index_of(set_mask m) const {
        for (size_t i = 0; i < sets_.size(); ++i)
            if (sets_[i] == m) return i;
        return std::nullopt;
    }

private:
    unsigned universe_;
    std::vector<set_mask> sets_;
};

// Level partition of a family under iterated removal of subset-maximal
// elements.  Layer i holds member indices; level(A) = i iff A sits in layer i.
struct rank_decomposition {
    std::vector<std::vector<size_t>> layers;
    std::vector<size_t> level_of;  // member index -> layer index

    size_t rank() const { return layers.size(); }
    ordinal rank_ordinal() const { return ordinal::nat(layers.size()); }
    ordinal level_ordinal(size_t member) const { return ordinal::nat(level_of.at(member)); }
};

// Iterated maximal-element removal; terminates because the family is finite.
inline rank_decomposition rank_decompose(const set_family& fam) {
    rank_decomposition d;
    d.level_of.assign(fam.size(), SIZE_MAX);
    size_t remaining = fam.size();
    while (remaining > 0) {
        std::vector<size_t> layer;
        for (size_t i = 0; i < fam.size(); ++i) {
            if (d.level_of[i] != SIZE_MAX) continue;
            bool maximal = true;
            for (size_t j = 0; j < fam.size(); ++j) {
                if (j == i || d.level_of[j] != SIZE_MAX) continue;
                if (mask_strict_subset(fam.at(i), fam.at(j))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) layer.push_back(i);
        }
        for (size_t i : layer) d.level_of[i] = d.layers.size();
        remaining -= layer.size();
        d.layers.push_back(std::move(layer));
    }
    return d;
}

// Witness chain A = A_0 < A_1 < ... < A_n (strict supersets) whose levels hit
// the given strictly descending targets; existence is guaranteed whenever the
// targets descend from level(A), so a miss is a rank-decomposition bug.
inline std::vector<size_t> level_chain(const set_family& fam, const rank_decomposition& d,
                                       size_t member, const std::vector<size_t>& targets) {
    if (targets.empty() || targets.front() != d.level_of.at(member))
        throw std::invalid_argument("level_chain: targets must start at the member's level");
    for (size_t i = 1; i < targets.size(); ++i)
        if (targets[i] >= targets[i - 1])
            throw std::invalid_argument("level_chain: targets must strictly descend");

    std::vector<size_t> chain{member};
    size_t cur = member;
    for (size_t i = 1; i < targets.size(); ++i) {
        std::optional<size_t> next;
        for (size_t j = 0; j < fam.size(); ++j) {
            if (d.level_of[j] == targets[i] && mask_strict_subset(fam.at(cur), fam.at(j))) {
                next = j;
                break;  // lowest index wins
            }
        }
        if (!next)
            throw std::logic_error("level_chain: no superset at level " +
                                   std::to_string(targets[i]) + " (decomposition bug)");
        cur = *next;
        chain.push_back(cur);
    }
    return chain;
}

// A level-by-order table of a decomposed family: row i enumerates layer i,
// coordinates r (row) and o (position) per member.  beta is the least bound
// on row lengths, i.e. the longest row at finite scale.
struct noetherian_table {
    std::vector<std::vector<size_t>> rows;  // row i -> member indices in order
    std::vector<size_t> row_of;             // member -> r
    std::vector<size_t> order_of;           // member -> o

    size_t alpha() const { return rows.size(); }
    size_t beta() const {
        size_t b = 0;
        for (const auto& r : rows) b = std::max(b, r.size());
        return b;
    }
};

inline noetherian_table build_table(const set_family& fam, const rank_decomposition& d,
                                    const std::vector<std::vector<size_t>>* row_order = nullptr) {
    noetherian_table t;
    t.rows = row_order ? *row_order : d.layers;
    if (t.rows.size() != d.layers.size())
        throw std::invalid_argument("build_table: row_order must cover every layer");
    t.row_of.assign(fam.size(), SIZE_MAX);
    t.order_of.assign(fam.size(), SIZE_MAX);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].size() != d.layers[i].size())
            throw std::invalid_argument("build_table: row " + std::to_string(i) +
                                        " is not a permutation of its layer");
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            size_t m = t.rows[i][j];
            if (d.level_of.at(m) != i)
                throw std::invalid_argument("build_table: member outside its layer");
            if (t.row_of[m] != SIZE_MAX)
                throw std::invalid_argument("build_table: member listed twice");
            t.row_of[m] = i;
            t.order_of[m] = j;
        }
    }
    for (size_t m = 0; m < fam.size(); ++m)
        if (t.row_of[m] == SIZE_MAX)
            throw std::invalid_argument("build_table: member missing from rows");
    return t;
}

// Rank reduction through a level permutation f: visit layers in the order
// f(0), f(1), ..., keeping a member only when no earlier-kept member sits
// inside it.  The result refines the input family.
inline set_family reduce_rank(const set_family& fam, const std::vector<size_t>& f) {
    rank_decomposition d = rank_decompose(fam);
    if (f.size() != d.rank())
        throw std::invalid_argument("reduce_rank: permutation size must equal the rank");
    std::vector<bool> seen(f.size(), false);
    for (size_t v : f) {
        if (v >= f.size() || seen[v])
            throw std::invalid_argument("reduce_rank: not a permutation of the levels");
        seen[v] = true;
    }

    std::vector<set_mask> chosen;
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t m : d.layers[f[i]]) {
            bool blocked = false;
            for (set_mask w : chosen)
                if (mask_subset(w, fam.at(m))) {
                    blocked = true;
                    break;
                }
            if (!blocked) chosen.push_back(fam.at(m));
        }
    }
    return set_family(fam.universe_size(), std::move(chosen));
}

// Choosing procedure over the family's enumeration order: member i is
// rejected iff some earlier-chosen member is strictly inside it.
inline set_family extract_noetherian(const set_family& fam) {
    std::vector<set_mask> chosen;
    for (size_t i = 0; i < fam.size(); ++i) {
        bool rejected = false;
        for (set_mask c : chosen)
            if (mask_strict_subset(c, fam.at(i))) {
                rejected = true;
                break;
            }
        if (!rejected) chosen.push_back(fam.at(i));
    }
    return set_family(fam.universe_size(), std::move(chosen));
}

// every member of `whole` contains some member of `part`
inline bool refines(const set_family& part, const set_family& whole) {
    for (set_mask w : whole.sets()) {
        bool ok = false;
        for (set_mask p : part.sets())
            if (mask_subset(p, w)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

// The chain family a_i = {i..k-1} plus singletons b_i = {i}; at finite k the
// last singleton coincides with a_{k-1} and is kept once.
inline set_family gitti_family(unsigned k) {
    std::vector<set_mask> sets;
    for (unsigned i = 0; i < k; ++i) {
        set_mask a = 0;
        for (unsigned j = i; j < k; ++j) a |= set_mask(1) << j;
        sets.push_back(a);
    }
    for (unsigned i = 0; i + 1 < k; ++i) sets.push_back(set_mask(1) << i);
    return set_family(k, std::move(sets));
}

inline set_family gitti_singletons(unsigned k) {
    std::vector<set_mask> sets;
    for (unsigned i = 0; i < k; ++i) sets.push_back(set_mask(1) << i);
    return set_family(k, std::move(sets));
}

}  // namespace bmt
