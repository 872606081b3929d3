#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "bmt/basic_set.hpp"
#include "bmt/finite_space.hpp"

namespace bmt {

// A lazily presented space: every query the referee and the compiler need,
// decidable on basic sets.  Moves are finite unions of basics; containment
// between normalized moves is componentwise and exact.
class space {
public:
    explicit space(std::string id) : id_(std::move(id)) {}
    virtual ~space() = default;

    const std::string& id() const { return id_; }

    virtual bool subset(const basic_set& a, const basic_set& b) const = 0;
    virtual bool disjoint(const basic_set& a, const basic_set& b) const = 0;
    virtual std::optional<basic_set> meet(const basic_set& a, const basic_set& b) const = 0;
    virtual bool infinite_split_capable(const basic_set& b) const = 0;
    virtual std::optional<std::string> isolated(const basic_set& b) const = 0;
    virtual std::vector<basic_set> split(const basic_set& b, uint32_t n) const = 0;
    // canonical well-order on the pi-base
    virtual bool precedes(const basic_set& a, const basic_set& b) const = 0;
    // index in the canonical well-order; bounded helper for tests
    virtual uint64_t position(const basic_set& b) const = 0;
    virtual std::string literal(const basic_set& b) const = 0;
    virtual basic_set parse_basic(std::string_view s) const = 0;

    // --- move layer -------------------------------------------------------

    game_move normalize(game_move mv) const {
        auto& p = mv.parts;
        if (p.empty()) throw std::invalid_argument("empty move");
        bool changed = true;
        while (changed) {
            changed = false;
            // drop duplicates and absorbed parts
            std::vector<basic_set> kept;
            for (size_t i = 0; i < p.size(); ++i) {
                bool dropped = false;
                for (size_t j = 0; j < p.size() && !dropped; ++j) {
                    if (i == j) continue;
                    if (p[i] == p[j]) {
                        if (j < i) dropped = true;
                    } else if (subset(p[i], p[j])) {
                        dropped = true;
                    }
                }
                if (!dropped) kept.push_back(p[i]);
            }
            if (kept.size() != p.size()) changed = true;
            p = std::move(kept);
            if (merge_pass(p)) changed = true;
        }
        std::sort(p.begin(), p.end(), [this](const basic_set& a, const basic_set& b) {
            return precedes(a, b);
        });
        return mv;
    }

    bool move_subset(const game_move& a, const game_move& b) const {
        for (const auto& pa : a.parts) {
            bool inside = false;
            for (const auto& pb : b.parts)
                if (subset(pa, pb)) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
        return true;
    }

    bool move_disjoint(const game_move& a, const game_move& b) const {
        for (const auto& pa : a.parts)
            for (const auto& pb : b.parts)
                if (!disjoint(pa, pb)) return false;
        return true;
    }

    // the least basic set contained in the move (the choice function U -> U')
    virtual basic_set min_basic(const game_move& mv) const = 0;

    // open set {x} witnessing an isolated point of the move, when one exists
    virtual std::optional<basic_set> isolation_witness(const game_move&) const {
        return std::nullopt;
    }

    // exact disjoint-family bound below min_basic(mv); nullopt = unbounded
    virtual std::optional<unsigned> cellularity_bound(const game_move&) const {
        return std::nullopt;
    }

    // verdict for a finite prefix of an omega-play (legal nested moves)
    virtual game_result certify_moves(const std::vector<game_move>& moves) const = 0;

    game_move parse_move(std::string_view s) const {
        std::vector<basic_set> parts;
        size_t start = 0;
        std::string str(s);
        while (start <= str.size()) {
            size_t comma = str.find(',', start);
            std::string tok = str.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
            parts.push_back(parse_basic(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return normalize(game_move(std::move(parts)));
    }

    std::string move_literal(const game_move& mv) const {
        std::string s;
        for (size_t i = 0; i < mv.parts.size(); ++i) {
            if (i) s += ",";
            s += literal(mv.parts[i]);
        }
        return s;
    }

protected:
    // one round of preset-specific merging (e.g. sibling cylinders); returns
    // true when anything changed
    virtual bool merge_pass(std::vector<basic_set>&) const { return false; }

private:
    std::string id_;
};

// --- Cantor space with arity >= 2: cylinders over finite words -------------

class cantor_space final : public space {
public:
    explicit cantor_space(unsigned arity)
        : space("cantor:" + std::to_string(arity)), arity_(arity) {
        if (arity < 2) throw std::invalid_argument("cantor arity must be >= 2");
        if (arity > 10) throw std::invalid_argument("cantor arity capped at 10 (digit literals)");
    }

    unsigned arity() const { return arity_; }

    bool subset(const basic_set& a, const basic_set& b) const override {
        return b.cyl_word().prefix_of(a.cyl_word());
    }
    bool disjoint(const basic_set& a, const basic_set& b) const override {
        return !a.cyl_word().prefix_of(b.cyl_word()) && !b.cyl_word().prefix_of(a.cyl_word());
    }
    std::optional<basic_set> meet(const basic_set& a, const basic_set& b) const override {
        if (a.cyl_word().prefix_of(b.cyl_word())) return b;
        if (b.cyl_word().prefix_of(a.cyl_word())) return a;
        return std::nullopt;
    }
    bool infinite_split_capable(const basic_set&) const override { return true; }
    std::optional<std::string> isolated(const basic_set&) const override { return std::nullopt; }

    // deterministic ladder: i-th element extends by (arity-1)^i then 0
    std::vector<basic_set> split(const basic_set& b, uint32_t n) const override {
        std::vector<basic_set> out;
        out.reserve(n);
        const word& w = b.cyl_word();
        for (uint32_t i = 0; i < n; ++i)
            out.push_back(basic_set::cyl(w.append_run(uint8_t(arity_ - 1), i).append(0)));
        return out;
    }

    bool precedes(const basic_set& a, const basic_set& b) const override {
        return word::cmp_len_value(a.cyl_word(), b.cyl_word()) < 0;
    }

    uint64_t position(const basic_set& b) const override {
        const word& w = b.cyl_word();
        uint64_t pos = 0, pw = 1;
        for (size_t l = 0; l < w.size(); ++l) {
            pos += pw;
            if (pw > UINT64_MAX / arity_)
                throw resource_limit_error("cylinder position exceeds 64 bits");
            pw *= arity_;
        }
        uint64_t val = 0;
        for (uint8_t d : w.digits) {
            if (val > (UINT64_MAX - d) / arity_)
                throw resource_limit_error("cylinder position exceeds 64 bits");
            val = val * arity_ + d;
        }
        return pos + val;
    }

    std::string literal(const basic_set& b) const override { return b.cyl_word().str(); }

    basic_set parse_basic(std::string_view s) const override {
        return basic_set::cyl(word::from_string(s, arity_));
    }

    basic_set min_basic(const game_move& mv) const override {
        const basic_set* best = &mv.parts.front();
        for (const auto& p : mv.parts)
            if (precedes(p, *best)) best = &p;
        return *best;
    }

    // nested cylinders have nonempty intersection; the certificate is the
    // deepest word continued by the all-zero tail
    game_result certify_moves(const std::vector<game_move>& moves) const override {
        game_result r;
        r.depth = unsigned(moves.size() / 2);
        const word& w = min_basic(moves.back()).cyl_word();
        r.kind = verdict_kind::certified_for_two;
        r.point = (w.empty() ? std::string() : w.str()) + "(0^w)";
        r.evidence = "compact nesting";
        return r;
    }

protected:
    bool merge_pass(std::vector<basic_set>& parts) const override {
        // replace a full sibling block [u0],...,[u(a-1)] by [u]
        for (size_t i = 0; i < parts.size(); ++i) {
            const word& w = parts[i].cyl_word();
            if (w.empty()) continue;
            word parent = w.prefix(w.size() - 1);
            unsigned found = 0;
            for (const auto& p : parts) {
                const word& v = p.cyl_word();
                if (v.size() == w.size() && parent.prefix_of(v)) ++found;
            }
            if (found == arity_) {
                std::vector<basic_set> next;
                for (const auto& p : parts) {
                    const word& v = p.cyl_word();
                    if (!(v.size() == w.size() && parent.prefix_of(v))) next.push_back(p);
                }
                next.push_back(basic_set::cyl(parent));
                parts = std::move(next);
                return true;
            }
        }
        return false;
    }

private:
    unsigned arity_;
};

// --- Dyadic-rational intervals: a countable, non-Baire model ----------------
//
// I(l,i) stands for the dyadic rationals in [i/2^l, (i+1)/2^l).  Two
// intervals are nested or disjoint; every interval splits indefinitely, and
// no basic set has an isolated point.  Player II provably lacks a winning
// strategy here, so the preset serves referee and negative tests only.

class dyadic_space final : public space {
public:
    dyadic_space() : space("dyadic") {}

    static bool nested(const dyadic_interval& a, const dyadic_interval& b) {
        // a inside b
        return a.level >= b.level && (a.index >> (a.level - b.level)) == b.index;
    }
    static const dyadic_interval& get(const basic_set& b) {
        if (const auto* d = std::get_if<dyadic_interval>(&b.v)) return *d;
        throw std::invalid_argument("basic set is not a dyadic interval");
    }

    bool subset(const basic_set& a, const basic_set& b) const override {
        return nested(get(a), get(b));
    }
    bool disjoint(const basic_set& a, const basic_set& b) const override {
        return !nested(get(a), get(b)) && !nested(get(b), get(a));
    }
    std::optional<basic_set> meet(const basic_set& a, const basic_set& b) const override {
        if (nested(get(a), get(b))) return a;
        if (nested(get(b), get(a))) return b;
        return std::nullopt;
    }
    bool infinite_split_capable(const basic_set&) const override { return true; }
    std::optional<std::string> isolated(const basic_set&) const override { return std::nullopt; }

    std::vector<basic_set> split(const basic_set& b, uint32_t n) const override {
        const auto& d = get(b);
        std::vector<basic_set> out;
        for (uint32_t i = 0; i < n; ++i) {
            if (d.level + i + 1 > 62) throw resource_limit_error("dyadic split too deep");
            // path: right i times, then left
            uint64_t idx = d.index;
            for (uint32_t k = 0; k < i; ++k) idx = idx * 2 + 1;
            idx = idx * 2;
            out.push_back(basic_set::dyadic(d.level + i + 1, idx));
        }
        return out;
    }

    bool precedes(const basic_set& a, const basic_set& b) const override {
        const auto &da = get(a), &db = get(b);
        return da.level != db.level ? da.level < db.level : da.index < db.index;
    }

    uint64_t position(const basic_set& b) const override {
        const auto& d = get(b);
        if (d.level > 62) throw resource_limit_error("dyadic position exceeds 64 bits");
        return (uint64_t(1) << d.level) - 1 + d.index;
    }

    std::string literal(const basic_set& b) const override {
        const auto& d = get(b);
        return "I(" + std::to_string(d.level) + "," + std::to_string(d.index) + ")";
    }

    basic_set parse_basic(std::string_view s) const override {
        unsigned long long l = 0, i = 0;
        char extra = 0;
        if (std::sscanf(std::string(s).c_str(), "I(%llu,%llu%c", &l, &i, &extra) != 3 || extra != ')')
            throw std::invalid_argument("bad interval literal: " + std::string(s));
        if (l > 62 || (l < 64 && i >= (1ull << l)))
            throw std::invalid_argument("interval index out of range: " + std::string(s));
        return basic_set::dyadic(uint32_t(l), i);
    }

    basic_set min_basic(const game_move& mv) const override {
        const basic_set* best = &mv.parts.front();
        for (const auto& p : mv.parts)
            if (precedes(p, *best)) best = &p;
        return *best;
    }

    // Only an eventually-constant tail certifies: the trace is then read as
    // the play that repeats that interval forever, whose intersection is the
    // interval itself.  A shrinking trace stays honestly undetermined.
    game_result certify_moves(const std::vector<game_move>& moves) const override {
        game_result r;
        r.depth = unsigned(moves.size() / 2);
        if (moves.size() >= 3 && moves[moves.size() - 1] == moves[moves.size() - 2] &&
            moves[moves.size() - 2] == moves[moves.size() - 3]) {
            const auto& d = get(moves.back().parts.front());
            r.kind = verdict_kind::certified_for_two;
            r.point = std::to_string(d.index) + "/2^" + std::to_string(d.level);
            r.evidence = "stabilized interval";
        } else {
            r.kind = verdict_kind::undetermined;
            r.evidence = "intervals still shrinking at depth " + std::to_string(r.depth);
        }
        return r;
    }

protected:
    bool merge_pass(std::vector<basic_set>& parts) const override {
        for (size_t i = 0; i < parts.size(); ++i) {
            const auto& d = get(parts[i]);
            if (d.level == 0) continue;
            dyadic_interval sib{d.level, d.index ^ 1};
            for (size_t j = 0; j < parts.size(); ++j) {
                if (j == i) continue;
                if (get(parts[j]) == sib) {
                    dyadic_interval parent{d.level - 1, d.index >> 1};
                    std::vector<basic_set> next;
                    for (size_t k = 0; k < parts.size(); ++k)
                        if (k != i && k != j) next.push_back(parts[k]);
                    next.push_back(basic_set::dyadic(parent.level, parent.index));
                    parts = std::move(next);
                    return true;
                }
            }
        }
        return false;
    }
};

// --- Finite-space adapter ---------------------------------------------------

class finite_presentation final : public space {
public:
    finite_presentation(finite_space sp, std::string name)
        : space("finite:" + name), sp_(std::move(sp)) {}

    const finite_space& topology() const { return sp_; }

    set_mask mask_of_basic(const basic_set& b) const {
        if (const auto* f = std::get_if<finite_open_ref>(&b.v))
            return sp_.tau_star().at(f->index);
        throw std::invalid_argument("basic set is not a finite open");
    }
    basic_set basic_of_mask(set_mask m) const {
        return basic_set::fin(uint32_t(sp_.tau_index(m)));
    }
    set_mask mask_of_move(const game_move& mv) const {
        set_mask m = 0;
        for (const auto& p : mv.parts) m |= mask_of_basic(p);
        return m;
    }

    bool subset(const basic_set& a, const basic_set& b) const override {
        return mask_subset(mask_of_basic(a), mask_of_basic(b));
    }
    bool disjoint(const basic_set& a, const basic_set& b) const override {
        return (mask_of_basic(a) & mask_of_basic(b)) == 0;
    }
    std::optional<basic_set> meet(const basic_set& a, const basic_set& b) const override {
        set_mask m = mask_of_basic(a) & mask_of_basic(b);
        if (m == 0) return std::nullopt;
        return basic_of_mask(m);  // opens are intersection-closed
    }
    bool infinite_split_capable(const basic_set&) const override { return false; }

    std::optional<std::string> isolated(const basic_set& b) const override {
        set_mask iso = isolated_points(sp_, mask_of_basic(b));
        if (iso == 0) return std::nullopt;
        return std::to_string(mask_points(iso).front());
    }

    std::vector<basic_set> split(const basic_set& b, uint32_t n) const override {
        auto cell = cellularity(sp_, mask_of_basic(b));
        if (n > cell.max_size)
            throw cellularity_exceeded("split of size " + std::to_string(n) +
                                       " exceeds exact cellularity " +
                                       std::to_string(cell.max_size));
        std::vector<basic_set> out;
        for (uint32_t i = 0; i < n; ++i) out.push_back(basic_of_mask(cell.witness[i]));
        return out;
    }

    bool precedes(const basic_set& a, const basic_set& b) const override {
        return position(a) < position(b);
    }
    uint64_t position(const basic_set& b) const override {
        return std::get<finite_open_ref>(b.v).index;
    }
    std::string literal(const basic_set& b) const override {
        return "#" + std::to_string(position(b));
    }
    basic_set parse_basic(std::string_view s) const override {
        if (s.empty() || s[0] != '#')
            throw std::invalid_argument("finite open literal must be #<index>");
        size_t idx = std::stoul(std::string(s.substr(1)));
        if (idx >= sp_.tau_star().size())
            throw std::invalid_argument("open index out of range: " + std::string(s));
        return basic_set::fin(uint32_t(idx));
    }

    basic_set min_basic(const game_move& mv) const override {
        auto least = sp_.least_open_inside(mask_of_move(mv));
        if (!least) throw std::logic_error("nonempty open with no open subset");
        return basic_of_mask(*least);
    }

    std::optional<basic_set> isolation_witness(const game_move& mv) const override {
        auto w = bmt::isolation_witness(sp_, mask_of_move(mv));
        if (!w) return std::nullopt;
        return basic_of_mask(*w);
    }

    std::optional<unsigned> cellularity_bound(const game_move& mv) const override {
        return cellularity(sp_, mask_of_basic(min_basic(mv))).max_size;
    }

    // a nested omega-play in a finite lattice stabilizes, so its intersection
    // is the final move; any legal trace certifies for II
    game_result certify_moves(const std::vector<game_move>& moves) const override {
        game_result r;
        r.depth = unsigned(moves.size() / 2);
        set_mask last = mask_of_move(moves.back());
        r.kind = verdict_kind::certified_for_two;
        r.point = std::to_string(mask_points(last).front());
        r.evidence = "stabilized intersection";
        return r;
    }

protected:
    bool merge_pass(std::vector<basic_set>& parts) const override {
        if (parts.size() <= 1) return false;
        set_mask m = 0;
        for (const auto& p : parts) m |= mask_of_basic(p);
        parts = {basic_of_mask(m)};  // unions of opens are opens
        return true;
    }

private:
    finite_space sp_;
};

// --- Disjoint sum of presentations ------------------------------------------

class sum_space final : public space {
public:
    explicit sum_space(std::vector<std::shared_ptr<const space>> pieces)
        : space(sum_id(pieces)), pieces_(std::move(pieces)) {
        if (pieces_.size() < 2) throw std::invalid_argument("sum needs at least two pieces");
    }

    size_t piece_count() const { return pieces_.size(); }
    const space& piece(size_t i) const { return *pieces_.at(i); }

    // the whole i-th piece as a basic set of the sum
    basic_set piece_root(uint32_t i) const {
        basic_set b = root_of(*pieces_.at(i));
        b.piece = i;
        return b;
    }

    bool subset(const basic_set& a, const basic_set& b) const override {
        if (a.piece != b.piece) return false;
        return pieces_[a.piece]->subset(strip(a), strip(b));
    }
    bool disjoint(const basic_set& a, const basic_set& b) const override {
        if (a.piece != b.piece) return true;
        return pieces_[a.piece]->disjoint(strip(a), strip(b));
    }
    std::optional<basic_set> meet(const basic_set& a, const basic_set& b) const override {
        if (a.piece != b.piece) return std::nullopt;
        auto m = pieces_[a.piece]->meet(strip(a), strip(b));
        if (!m) return std::nullopt;
        return tag(a.piece, *m);
    }
    bool infinite_split_capable(const basic_set& b) const override {
        return pieces_[b.piece]->infinite_split_capable(strip(b));
    }
    std::optional<std::string> isolated(const basic_set& b) const override {
        return pieces_[b.piece]->isolated(strip(b));
    }
    std::vector<basic_set> split(const basic_set& b, uint32_t n) const override {
        auto inner = pieces_[b.piece]->split(strip(b), n);
        std::vector<basic_set> out;
        for (auto& x : inner) out.push_back(tag(b.piece, x));
        return out;
    }
    bool precedes(const basic_set& a, const basic_set& b) const override {
        if (a.piece != b.piece) return a.piece < b.piece;
        return pieces_[a.piece]->precedes(strip(a), strip(b));
    }
    uint64_t position(const basic_set&) const override {
        throw resource_limit_error("sum well-order positions are transfinite beyond piece 0");
    }
    std::string literal(const basic_set& b) const override {
        return std::to_string(b.piece) + ":" + pieces_[b.piece]->literal(strip(b));
    }
    basic_set parse_basic(std::string_view s) const override {
        size_t colon = s.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("sum literal must be <piece>:<basic>");
        size_t p = std::stoul(std::string(s.substr(0, colon)));
        if (p >= pieces_.size()) throw std::invalid_argument("piece index out of range");
        return tag(uint32_t(p), pieces_[p]->parse_basic(s.substr(colon + 1)));
    }

    basic_set min_basic(const game_move& mv) const override {
        uint32_t best_piece = UINT32_MAX;
        for (const auto& p : mv.parts) best_piece = std::min(best_piece, p.piece);
        game_move inner;
        for (const auto& p : mv.parts)
            if (p.piece == best_piece) inner.parts.push_back(strip(p));
        return tag(best_piece, pieces_[best_piece]->min_basic(inner));
    }

    std::optional<basic_set> isolation_witness(const game_move& mv) const override {
        uint32_t pc = mv.parts.front().piece;
        for (const auto& p : mv.parts)
            if (p.piece != pc) return std::nullopt;  // spans pieces: no single witness
        auto w = pieces_[pc]->isolation_witness(strip_move(mv, pc));
        if (!w) return std::nullopt;
        return tag(pc, *w);
    }

    std::optional<unsigned> cellularity_bound(const game_move& mv) const override {
        basic_set mb = min_basic(mv);
        return pieces_[mb.piece]->cellularity_bound(game_move(strip(mb)));
    }

    game_result certify_moves(const std::vector<game_move>& moves) const override {
        // from round 1 on, all moves live inside a single piece
        uint32_t pc = moves.back().parts.front().piece;
        std::vector<game_move> inner;
        for (const auto& mv : moves) {
            game_move im = strip_move(mv, pc);
            if (im.parts.empty()) {
                if (&mv != &moves.front())
                    throw std::invalid_argument("sum trace leaves its piece after round 0");
                continue;  // round-0 move may span pieces; drop its foreign parts
            }
            inner.push_back(std::move(im));
        }
        game_result r = pieces_[pc]->certify_moves(inner);
        if (r.kind == verdict_kind::certified_for_two)
            r.point = std::to_string(pc) + ":" + r.point;
        r.depth = unsigned(moves.size() / 2);
        return r;
    }

    static basic_set strip(const basic_set& b) {
        basic_set x = b;
        x.piece = 0;
        return x;
    }
    static basic_set tag(uint32_t piece, const basic_set& b) {
        basic_set x = b;
        x.piece = piece;
        return x;
    }
    static game_move strip_move(const game_move& mv, uint32_t piece) {
        game_move out;
        for (const auto& p : mv.parts)
            if (p.piece == piece) out.parts.push_back(strip(p));
        return out;
    }

protected:
    bool merge_pass(std::vector<basic_set>& parts) const override {
        std::map<uint32_t, std::vector<basic_set>> by_piece;
        for (const auto& p : parts) by_piece[p.piece].push_back(strip(p));
        std::vector<basic_set> next;
        for (auto& [pc, inner] : by_piece) {
            game_move nm = pieces_[pc]->normalize(game_move(std::move(inner)));
            for (auto& b : nm.parts) next.push_back(tag(pc, b));
        }
        auto lt = [this](const basic_set& a, const basic_set& b) { return precedes(a, b); };
        std::sort(next.begin(), next.end(), lt);
        std::vector<basic_set> cur = parts;
        std::sort(cur.begin(), cur.end(), lt);
        if (next == cur) return false;
        parts = std::move(next);
        return true;
    }

private:
    static std::string sum_id(const std::vector<std::shared_ptr<const space>>& ps) {
        std::string s = "sum(";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ",";
            s += ps[i]->id();
        }
        return s + ")";
    }

    static basic_set root_of(const space& sp) {
        if (dynamic_cast<const cantor_space*>(&sp)) return basic_set::cyl(word{});
        if (dynamic_cast<const dyadic_space*>(&sp)) return basic_set::dyadic(0, 0);
        if (const auto* f = dynamic_cast<const finite_presentation*>(&sp))
            return f->basic_of_mask(f->topology().universe_mask());
        throw std::invalid_argument("sum piece has no whole-space basic");
    }

    std::vector<std::shared_ptr<const space>> pieces_;
};

inline std::shared_ptr<const space> make_cantor(unsigned arity) {
    return std::make_shared<cantor_space>(arity);
}
inline std::shared_ptr<const space> make_dyadic() { return std::make_shared<dyadic_space>(); }
inline std::shared_ptr<const space> make_finite(finite_space sp, std::string name) {
    return std::make_shared<finite_presentation>(std::move(sp), std::move(name));
}
inline std::shared_ptr<const space> make_sierpinski() {
    return make_finite(generate_topology(2, {1}), "sierpinski");
}
inline std::shared_ptr<const space> make_sum(std::vector<std::shared_ptr<const space>> pieces) {
    return std::make_shared<sum_space>(std::move(pieces));
}

// free function form of the choice function U -> U'
inline basic_set min_basic(const space& sp, const game_move& mv) { return sp.min_basic(mv); }

}  // namespace bmt
