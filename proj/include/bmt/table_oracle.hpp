#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmt/basic_set.hpp"
#include "bmt/ordinal.hpp"
#include "bmt/set_family.hpp"
#include "bmt/space.hpp"

namespace bmt {

// --- Cantor canonical table, closed forms -------------------------------------
//
// Row i of the canonical table is the words of length i ordered by numeric
// value, so rank([w]) = |w| and order([w]) = value(w).  The hat operator is
// the identity: appending digits never lowers a word's value, hence the
// order-minimal member below [w] is [w] itself (for all-zero words the value
// ties at 0 and the level minimum lands back on |w|).  Every C-enumeration
// is the single qualifying prefix, so M is constantly 1.

class cantor_oracle {
public:
    explicit cantor_oracle(unsigned arity) : arity_(arity) {}

    unsigned arity() const { return arity_; }

    uint64_t rank(const word& w) const { return w.size(); }
    static std::strong_ordering order_cmp(const word& a, const word& b) {
        return word::cmp_value(a, b);
    }
    // numeric order value for short words (unit tests and reports)
    uint64_t order_value(const word& w) const {
        uint64_t v = 0;
        for (uint8_t d : w.digits) {
            if (v > (UINT64_MAX - d) / arity_)
                throw resource_limit_error("order value of " + w.str() + " exceeds 64 bits");
            v = v * arity_ + d;
        }
        return v;
    }

    bool pg(const word&) const { return true; }

    word hat(const word& w) const { return w; }

    // C_{B,theta} = { prefix of B at length theta }; the value of a prefix
    // never exceeds the value of the word, so the order test always passes
    std::vector<word> c_enum(const word& b, uint64_t theta) const {
        if (theta > b.size())
            throw std::invalid_argument("c_enum: theta exceeds rank(" + b.str() + ")");
        return {b.prefix(size_t(theta))};
    }

    uint64_t m_value(const word&) const { return 1; }

private:
    unsigned arity_;
};

// --- Explicit finite tables (mock members or finite families) -----------------

struct mock_table_spec {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> strict_subsets;  // (sub, super)
    std::vector<std::string> pg_members;
};

// A finite Noetherian table given outright: named members with (rank, order)
// coordinates, an explicit containment order, and purgation flags.
class explicit_table {
public:
    static explicit_table from_mock(const mock_table_spec& spec) {
        explicit_table t;
        for (size_t i = 0; i < spec.rows.size(); ++i) {
            if (spec.rows[i].empty())
                throw std::invalid_argument("mock table: empty row " + std::to_string(i));
            std::vector<size_t> row;
            for (const auto& name : spec.rows[i]) {
                if (t.index_.count(name))
                    throw std::invalid_argument("mock table: duplicate member " + name);
                size_t id = t.names_.size();
                t.index_[name] = id;
                t.names_.push_back(name);
                t.row_of_.push_back(i);
                t.order_of_.push_back(row.size());
                row.push_back(id);
            }
            t.rows_.push_back(std::move(row));
        }
        size_t n = t.names_.size();
        t.subset_.assign(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) t.subset_[i][i] = true;
        for (const auto& [sub, sup] : spec.strict_subsets)
            t.subset_[t.id(sub)][t.id(sup)] = true;
        // transitive closure
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i)
                if (t.subset_[i][k])
                    for (size_t j = 0; j < n; ++j)
                        if (t.subset_[k][j]) t.subset_[i][j] = true;
        t.pg_.assign(n, false);
        for (const auto& name : spec.pg_members) t.pg_[t.id(name)] = true;
        t.validate();
        return t;
    }

    static explicit_table from_family(const set_family& fam, const rank_decomposition& d,
                                      const noetherian_table& table) {
        explicit_table t;
        size_t n = fam.size();
        for (size_t i = 0; i < n; ++i) {
            std::string name = "S" + std::to_string(i);
            t.index_[name] = i;
            t.names_.push_back(name);
        }
        t.rows_ = table.rows;
        t.row_of_ = table.row_of;
        t.order_of_ = table.order_of;
        t.subset_.assign(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) t.subset_[i][j] = mask_subset(fam.at(i), fam.at(j));
        t.pg_.assign(n, false);  // purgation of a finite family is empty
        (void)d;
        t.validate();
        return t;
    }

    size_t size() const { return names_.size(); }
    size_t id(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown table member " + name);
        return it->second;
    }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::vector<size_t>>& rows() const { return rows_; }

    uint64_t rank(size_t i) const { return row_of_.at(i); }
    uint64_t order(size_t i) const { return order_of_.at(i); }
    bool subset(size_t a, size_t b) const { return subset_.at(a).at(b); }
    bool strict_subset(size_t a, size_t b) const { return a != b && subset(a, b); }
    bool pg(size_t i) const { return pg_.at(i); }

    // h(B) = least order of a pg member below B; s = least row carrying such
    // a member of that order inside B; hat(B) is that member
    size_t hat(size_t b) const {
        if (!pg(b)) throw std::invalid_argument("hat: " + name(b) + " is not a purgation member");
        std::optional<uint64_t> h;
        for (size_t u = 0; u < size(); ++u)
            if (pg(u) && subset(u, b) && (!h || order(u) < *h)) h = order(u);
        for (size_t r = 0; r < rows_.size(); ++r)
            for (size_t u : rows_[r])
                if (pg(u) && subset(u, b) && order(u) == *h) return u;
        throw std::logic_error("hat: no witness (table inconsistency)");
    }

    // C_{B,theta} = members of row theta containing B with order <= order(B),
    // in row order
    std::vector<size_t> c_enum(size_t b, uint64_t theta) const {
        if (theta > rank(b))
            throw std::invalid_argument("c_enum: theta " + std::to_string(theta) +
                                        " exceeds rank of " + name(b));
        std::vector<size_t> out;
        for (size_t v : rows_.at(size_t(theta)))
            if (subset(b, v) && order(v) <= order(b)) out.push_back(v);
        return out;
    }

    uint64_t m_value(size_t b) const {
        uint64_t m = 0;
        for (uint64_t theta = 0; theta <= rank(b); ++theta)
            m = std::max(m, uint64_t(c_enum(b, theta).size()));
        return m;
    }

    uint64_t contain_count(size_t b) const {
        uint64_t c = 0;
        for (size_t v = 0; v < size(); ++v)
            if (subset(b, v)) ++c;
        return c;
    }

private:
    void validate() const {
        for (size_t a = 0; a < size(); ++a)
            for (size_t b = 0; b < size(); ++b)
                if (strict_subset(a, b) && rank(a) <= rank(b))
                    throw std::invalid_argument("table violates rank monotonicity: " + name(a) +
                                                " inside " + name(b));
    }

    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
    std::vector<std::vector<size_t>> rows_;
    std::vector<size_t> row_of_, order_of_;
    std::vector<std::vector<bool>> subset_;
    std::vector<bool> pg_;
};

// --- Curated "intervals" oracle ------------------------------------------------
//
// The closed-form family of rank w*2: a countable antichain at level 0, an
// outer interval chain through the finite levels, and an inner chain through
// the levels w+n, whose first member [1,4] sits at level w.  The refining
// subfamily (antichain plus inner chain) drops the rank to w.

class intervals_oracle {
public:
    enum class kind : uint8_t { outer, inner, antichain };
    struct member {
        kind k;
        uint64_t n;
        friend bool operator==(const member&, const member&) = default;
    };

    static member outer(uint64_t n) { return {kind::outer, n}; }
    static member inner(uint64_t n) { return {kind::inner, n}; }
    static member antichain(uint64_t n) { return {kind::antichain, n}; }

    static bool subset(const member& a, const member& b) {
        if (a.k == kind::antichain || b.k == kind::antichain)
            return a.k == b.k && a.n == b.n;
        if (a.k == kind::outer && b.k == kind::outer) return a.n >= b.n;
        if (a.k == kind::inner && b.k == kind::inner) return a.n >= b.n;
        if (a.k == kind::inner && b.k == kind::outer) return true;  // inner sits inside [1,4]
        return false;
    }
    static bool strict_subset(const member& a, const member& b) {
        return !(a == b) && subset(a, b);
    }

    static ordinal level(const member& m) {
        switch (m.k) {
            case kind::outer: return ordinal::nat(m.n);
            case kind::antichain: return ordinal();
            case kind::inner: return ordinal::omega().add_natural(m.n);
        }
        throw std::logic_error("unreachable");
    }

    static ordinal order(const member& m) {
        // row 0 = (outer_0, C_0, C_1, ...); every other row is a singleton
        if (m.k == kind::antichain) return ordinal::nat(m.n + 1);
        return ordinal();
    }

    static ordinal family_rank() { return ordinal::make({{1, 2}}); }  // w*2

    // levels within the refining subfamily {C_k} + {inner_n}
    static ordinal refined_level(const member& m) {
        switch (m.k) {
            case kind::antichain: return ordinal();
            case kind::inner: return ordinal::nat(m.n);
            case kind::outer:
                throw std::invalid_argument("outer members are not in the refined subfamily");
        }
        throw std::logic_error("unreachable");
    }
    static ordinal refined_rank() { return ordinal::omega(); }

    static bool refined_member(const member& m) { return m.k != kind::outer; }

    // every member of the family contains a member of the refined subfamily
    static member refining_witness(const member& m) {
        return m.k == kind::outer ? inner(0) : m;
    }

    // a finite window of members for property sampling
    static std::vector<member> sample(uint64_t up_to) {
        std::vector<member> out;
        for (uint64_t n = 0; n < up_to; ++n) {
            out.push_back(outer(n));
            out.push_back(inner(n));
            out.push_back(antichain(n));
        }
        return out;
    }

    static std::string name(const member& m) {
        switch (m.k) {
            case kind::outer: return "outer" + std::to_string(m.n);
            case kind::inner: return "inner" + std::to_string(m.n);
            case kind::antichain: return "C" + std::to_string(m.n);
        }
        throw std::logic_error("unreachable");
    }
};

// --- purgation membership for presets ------------------------------------------
//
// True iff the basic set has no isolated point and splits indefinitely; the
// split-capability flag is the preset's stipulated stand-in for "every
// nonempty open subset has a cellular family of cardinality omega" (cylinder
// and interval ladders realize it; finite carriers refute it exactly).

inline bool pg_membership(const space& sp, const basic_set& b) {
    if (sp.isolated(b)) return false;
    if (const auto* fin = dynamic_cast<const finite_presentation*>(&sp))
        return finite_open_in_purgation(fin->topology(), fin->mask_of_basic(b));
    if (const auto* sum = dynamic_cast<const sum_space*>(&sp))
        return pg_membership(sum->piece(b.piece), sum_space::strip(b));
    return sp.infinite_split_capable(b);
}

// --- condition verifier ----------------------------------------------------------

enum class table_scope { pg_table, full_table };

// nullopt witness = a split-capable member (at least any finite bound)
using star_witnesses = std::map<std::string, std::optional<uint64_t>>;

struct star_report_entry {
    std::string member;
    uint64_t r = 0, o = 0, m_value = 0, contain_count = 0;
    std::optional<uint64_t> witness;  // nullopt = infinite
    bool star = false;                // |A_B| >= max(|r|, M_B)
    bool dagger = false;              // |A_B| >= max(|r|, |o|)
    bool galvin = false;              // |A_B| >= |{V : B subset V}|
    bool galvin_implies_star = false; // |{V : B subset V}| >= max(|r|, M_B)
};

struct star_report {
    table_scope scope = table_scope::pg_table;
    bool vacuous = false;  // no purgation members
    std::vector<star_report_entry> entries;

    bool all_star() const {
        for (const auto& e : entries)
            if (!e.star) return false;
        return true;
    }
    bool all_dagger() const {
        for (const auto& e : entries)
            if (!e.dagger) return false;
        return true;
    }
};

inline star_report verify_star(const explicit_table& t, const star_witnesses& witnesses,
                               table_scope scope) {
    star_report rep;
    rep.scope = scope;
    bool any_pg = false;
    for (size_t b = 0; b < t.size(); ++b) {
        if (!t.pg(b)) continue;
        any_pg = true;
        auto wit = witnesses.find(t.name(b));
        if (wit == witnesses.end())
            throw std::invalid_argument("verify_star: missing witness for " + t.name(b));
        star_report_entry e;
        e.member = t.name(b);
        e.r = t.rank(b);
        e.o = t.order(b);
        e.m_value = t.m_value(b);
        e.contain_count = t.contain_count(b);
        e.witness = wit->second;
        auto at_least = [&](uint64_t bound) { return !e.witness || *e.witness >= bound; };
        e.star = at_least(std::max(e.r, e.m_value));
        e.dagger = at_least(std::max(e.r, e.o));
        e.galvin = at_least(e.contain_count);
        e.galvin_implies_star = e.contain_count >= std::max(e.r, e.m_value);
        rep.entries.push_back(std::move(e));
    }
    rep.vacuous = !any_pg;
    return rep;
}

}  // namespace bmt
