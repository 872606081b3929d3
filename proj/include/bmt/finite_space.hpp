#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bmt/set_family.hpp"

namespace bmt {

// A finite topological space on {0..n-1}: the full lattice of opens, closed
// under union and intersection, with the empty set and the universe present.
// Nonempty opens are enumerated by (size, mask); that order is the canonical
// well-order every choice function uses.
class finite_space {
public:
    static constexpr unsigned max_universe = 20;

    finite_space(unsigned universe_size, std::vector<set_mask> opens)
        : universe_(universe_size) {
        if (universe_ == 0 || universe_ > max_universe)
            throw std::invalid_argument("finite_space: universe size must be 1.." +
                                        std::to_string(max_universe));
        full_ = (set_mask(1) << universe_) - 1;
        std::sort(opens.begin(), opens.end(), size_then_mask);
        opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
        for (set_mask o : opens)
            if ((o & ~full_) != 0) throw std::invalid_argument("finite_space: open outside universe");
        if (opens.empty() || opens.front() != 0 || opens.back() != full_)
            throw std::invalid_argument("finite_space: opens must contain the empty set and the universe");
        for (set_mask a : opens)
            for (set_mask b : opens) {
                if (!std::binary_search(opens.begin(), opens.end(), a | b, size_then_mask))
                    throw std::invalid_argument("finite_space: opens not closed under union");
                if (!std::binary_search(opens.begin(), opens.end(), a & b, size_then_mask))
                    throw std::invalid_argument("finite_space: opens not closed under intersection");
            }
        opens_ = std::move(opens);
        nonempty_.assign(opens_.begin() + 1, opens_.end());
    }

    unsigned universe_size() const { return universe_; }
    set_mask universe_mask() const { return full_; }
    const std::vector<set_mask>& opens() const { return opens_; }
    // tau*(X): the nonempty opens, canonical enumeration
    const std::vector<set_mask>& tau_star() const { return nonempty_; }

    bool is_open(set_mask m) const {
        return std::binary_search(opens_.begin(), opens_.end(), m, size_then_mask);
    }

    size_t tau_index(set_mask m) const {
        auto it = std::lower_bound(nonempty_.begin(), nonempty_.end(), m, size_then_mask);
        if (it == nonempty_.end() || *it != m)
            throw std::invalid_argument("finite_space: not a nonempty open");
        return size_t(it - nonempty_.begin());
    }

    // least nonempty open contained in m, if any
    std::optional<set_mask> least_open_inside(set_mask m) const {
        for (set_mask o : nonempty_)
            if (mask_subset(o, m)) return o;
        return std::nullopt;
    }

    // closure = points whose every open neighbourhood meets s
    set_mask closure(set_mask s) const {
        set_mask cl = 0;
        for (unsigned x = 0; x < universe_; ++x) {
            set_mask px = set_mask(1) << x;
            bool in = true;
            for (set_mask o : nonempty_)
                if ((o & px) && (o & s) == 0) {
                    in = false;
                    break;
                }
            if (in) cl |= px;
        }
        return cl;
    }

    static bool size_then_mask(set_mask a, set_mask b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    }

private:
    unsigned universe_;
    set_mask full_ = 0;
    std::vector<set_mask> opens_;
    std::vector<set_mask> nonempty_;
};

// Topology generated by a subbase: finite intersections, then unions.
inline finite_space generate_topology(unsigned universe_size, const std::vector<set_mask>& subbase) {
    if (universe_size == 0 || universe_size > finite_space::max_universe)
        throw std::invalid_argument("generate_topology: universe size must be 1.." +
                                    std::to_string(finite_space::max_universe));
    set_mask full = (set_mask(1) << universe_size) - 1;
    std::vector<set_mask> fam{0, full};
    for (set_mask s : subbase) {
        if ((s & ~full) != 0) throw std::invalid_argument("generate_topology: subbase set outside universe");
        fam.push_back(s);
    }
    auto add_closure = [&](auto op) {
        bool grew = true;
        while (grew) {
            grew = false;
            size_t n = fam.size();
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) {
                    set_mask c = op(fam[i], fam[j]);
                    if (std::find(fam.begin(), fam.end(), c) == fam.end()) {
                        fam.push_back(c);
                        grew = true;
                    }
                }
        }
    };
    add_closure([](set_mask a, set_mask b) { return a & b; });
    add_closure([](set_mask a, set_mask b) { return a | b; });
    return finite_space(universe_size, std::move(fam));
}

// Points of U isolated in the subspace U: some open V has V & U = {x}.
inline set_mask isolated_points(const finite_space& sp, set_mask u) {
    if (u == 0 || !sp.is_open(u)) throw std::invalid_argument("isolated_points: U must be a nonempty open");
    set_mask iso = 0;
    for (set_mask v : sp.tau_star()) {
        set_mask meet = v & u;
        if (meet != 0 && (meet & (meet - 1)) == 0) iso |= meet;
    }
    return iso;
}

// For an isolated point of U, the least open whose trace on U is exactly {x};
// the trace itself is an open set and is returned.
inline std::optional<set_mask> isolation_witness(const finite_space& sp, set_mask u) {
    if (u == 0 || !sp.is_open(u)) throw std::invalid_argument("isolation_witness: U must be a nonempty open");
    for (set_mask v : sp.tau_star()) {
        set_mask meet = v & u;
        if (meet != 0 && (meet & (meet - 1)) == 0) return meet;
    }
    return std::nullopt;
}

struct cellularity_result {
    unsigned max_size = 0;
    std::vector<set_mask> witness;             // disjoint family achieving max_size
    std::vector<set_mask> maximal_extension;   // subset-maximal cellular family containing it
};

namespace detail {

inline unsigned max_packing(const finite_space& sp, set_mask avail,
                            std::map<set_mask, unsigned>& memo) {
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    unsigned best = 0;
    for (set_mask o : sp.tau_star()) {
        if (!mask_subset(o, avail)) continue;
        best = std::max(best, 1 + max_packing(sp, avail & ~o, memo));
    }
    memo[avail] = best;
    return best;
}

inline bool build_packing(const finite_space& sp, set_mask avail, unsigned need,
                          std::map<set_mask, unsigned>& memo, std::vector<set_mask>& out) {
    if (need == 0) return true;
    for (set_mask o : sp.tau_star()) {
        if (!mask_subset(o, avail)) continue;
        if (1 + max_packing(sp, avail & ~o, memo) < need) continue;
        out.push_back(o);
        if (build_packing(sp, avail & ~o, need - 1, memo, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace detail

// Exact maximum size of a pairwise-disjoint family of nonempty opens inside U,
// a witness achieving it, and its greedy subset-maximal extension.
inline cellularity_result cellularity(const finite_space& sp, set_mask u) {
    if (u == 0 || !sp.is_open(u)) throw std::invalid_argument("cellularity: U must be a nonempty open");
    std::map<set_mask, unsigned> memo;
    cellularity_result r;
    r.max_size = detail::max_packing(sp, u, memo);
    detail::build_packing(sp, u, r.max_size, memo, r.witness);
    r.maximal_extension = r.witness;
    set_mask used = 0;
    for (set_mask w : r.witness) used |= w;
    for (set_mask o : sp.tau_star()) {
        if (!mask_subset(o, u) || (o & used)) continue;
        r.maximal_extension.push_back(o);
        used |= o;
    }
    std::sort(r.maximal_extension.begin(), r.maximal_extension.end(), finite_space::size_then_mask);
    return r;
}

// Maximal cellular family whose members have hereditarily constant
// cellularity: repeatedly take, inside the still-uncovered open region, the
// first open realizing the minimal cellularity over that region.
inline std::vector<set_mask> stabilized_cellular_partition(const finite_space& sp) {
    std::vector<set_mask> chosen;
    set_mask covered = 0;
    while (true) {
        set_mask region = sp.universe_mask() & ~sp.closure(covered);
        if (region == 0) break;
        unsigned best = UINT32_MAX;
        set_mask pick = 0;
        for (set_mask o : sp.tau_star()) {
            if (!mask_subset(o, region)) continue;
            unsigned c = cellularity(sp, o).max_size;
            if (c < best) {
                best = c;
                pick = o;
            }
        }
        if (pick == 0)
            throw std::logic_error("stabilized_cellular_partition: open region with no open subset");
        chosen.push_back(pick);
        covered |= pick;
    }
    std::sort(chosen.begin(), chosen.end(), finite_space::size_then_mask);
    return chosen;
}

// Purgation membership for a finite-space open: no isolated points, and an
// omega-size cellular family inside every nonempty open subset.  The exact
// bound is computed rather than assumed finite; it never exceeds the carrier
// size, so membership always fails and the purgation of tau* is empty.
inline bool finite_open_in_purgation(const finite_space& sp, set_mask u) {
    if (isolated_points(sp, u) != 0) return false;
    unsigned bound = cellularity(sp, u).max_size;
    return bound > sp.universe_size();  // bound <= |universe| < omega, always false
}

}  // namespace bmt
