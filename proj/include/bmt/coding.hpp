#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bmt/basic_set.hpp"

namespace bmt {

using bigint = boost::multiprecision::cpp_int;

// --- diagonal pairing pi(x,y) = (x+y)(x+y+1)/2 + y ---------------------------
// Fixed bit-exactly: decode correctness of the compiled tactics depends on it.

inline uint64_t pair64(uint64_t x, uint64_t y) {
    uint64_t s = x + y;
    if (s < x || s > 6074000998ull)  // (s)(s+1)/2 must fit in 64 bits
        throw resource_limit_error("pairing overflow: pi(" + std::to_string(x) + "," +
                                   std::to_string(y) + ")");
    uint64_t tri = (s % 2 == 0) ? (s / 2) * (s + 1) : s * ((s + 1) / 2);
    if (tri > UINT64_MAX - y) throw resource_limit_error("pairing overflow");
    return tri + y;
}

inline std::pair<uint64_t, uint64_t> unpair64(uint64_t n) {
    // s = floor((sqrt(8n+1)-1)/2), via integer sqrt with correction
    long double approx = (std::sqrt(8.0L * (long double)n + 1.0L) - 1.0L) / 2.0L;
    uint64_t s = (uint64_t)approx;
    auto tri = [](uint64_t v) { return (v % 2 == 0) ? (v / 2) * (v + 1) : v * ((v + 1) / 2); };
    while (tri(s) > n) --s;
    while (tri(s + 1) <= n) ++s;
    uint64_t y = n - tri(s);
    return {s - y, y};
}

inline bigint pair_big(const bigint& x, const bigint& y) {
    bigint s = x + y;
    return s * (s + 1) / 2 + y;
}

inline std::pair<bigint, bigint> unpair_big(const bigint& n) {
    bigint disc = 8 * n + 1;
    bigint s = (boost::multiprecision::sqrt(disc) - 1) / 2;
    while (s * (s + 1) / 2 > n) --s;
    while ((s + 1) * (s + 2) / 2 <= n) ++s;
    bigint y = n - s * (s + 1) / 2;
    return {s - y, y};
}

struct code_triple {
    uint64_t j = 0;  // round number, starting at 0
    uint64_t k = 0;  // rank of the previous hat
    uint64_t l = 0;  // index in the C-enumeration
    friend bool operator==(const code_triple&, const code_triple&) = default;
};

inline uint64_t triple_to_index(const code_triple& t) { return pair64(pair64(t.j, t.k), t.l); }

inline code_triple index_to_triple(uint64_t n) {
    auto [a, l] = unpair64(n);
    auto [j, k] = unpair64(a);
    return {j, k, l};
}

// --- split-index expansions ---------------------------------------------------
//
// A coding family below an owner cylinder [w] realizes index n as a distinct
// child [w . e(n)].  Two expansions are provided:
//   unary: e(n) = (a-1)^n 0, the plain split ladder.  Word growth is linear
//          in n, which compounds quartically across rounds; usable only for
//          shallow plays.
//   gamma: e(n) = 1^L 0 b_1..b_L where n+1 = 2^L + (b_1..b_L)_2, a prefix-free
//          binary code.  Word growth is logarithmic in n, which keeps deep
//          plays inside machine integers.
// Both families are pairwise disjoint (no expansion is a prefix of another).

enum class index_expansion { unary, gamma };

inline const char* expansion_name(index_expansion e) {
    return e == index_expansion::unary ? "unary" : "gamma";
}

inline constexpr uint64_t max_unary_index = 1ull << 22;

inline std::vector<uint8_t> expansion_digits(index_expansion e, uint64_t n, unsigned arity) {
    std::vector<uint8_t> d;
    if (e == index_expansion::unary) {
        if (n > max_unary_index)
            throw resource_limit_error("unary split index " + std::to_string(n) +
                                       " beyond the word-length ceiling");
        d.assign(size_t(n), uint8_t(arity - 1));
        d.push_back(0);
    } else {
        uint64_t m = n + 1;
        if (m == 0) throw resource_limit_error("gamma index overflow");
        int L = 63;
        while (!(m >> L)) --L;  // L = floor(log2 m)
        d.assign(size_t(L), uint8_t(1));
        d.push_back(0);
        for (int b = L - 1; b >= 0; --b) d.push_back(uint8_t((m >> b) & 1));
    }
    return d;
}

// Parse an expansion from `w` starting at `offset`; the word must reach past
// the full expansion (a move strictly inside some code).  nullopt = foreign.
inline std::optional<uint64_t> parse_expansion(index_expansion e, const word& w, size_t offset,
                                               unsigned arity) {
    const auto& d = w.digits;
    if (e == index_expansion::unary) {
        size_t i = offset;
        while (i < d.size() && d[i] == arity - 1) ++i;
        if (i >= d.size() || d[i] != 0) return std::nullopt;
        return uint64_t(i - offset);
    }
    size_t i = offset;
    while (i < d.size() && d[i] == 1) ++i;
    if (i >= d.size() || d[i] != 0) return std::nullopt;
    size_t L = i - offset;
    if (L > 62) return std::nullopt;
    ++i;
    if (i + L > d.size()) return std::nullopt;
    uint64_t m = uint64_t(1) << L;
    for (size_t b = 0; b < L; ++b) {
        if (d[i + b] > 1) return std::nullopt;
        m |= uint64_t(d[i + b]) << (L - 1 - b);
    }
    return m - 1;
}

inline size_t expansion_length(index_expansion e, uint64_t n) {
    if (e == index_expansion::unary) return size_t(n) + 1;
    uint64_t m = n + 1;
    int L = 63;
    while (!(m >> L)) --L;
    return size_t(2 * L + 1);
}

// --- per-owner coding scheme over cylinders -----------------------------------
//
// Owns the disjoint family below one hat anchor; encodes triples (j,k,l) via
// the diagonal pairing and decodes a move to the unique code containing it.

class coding_scheme {
public:
    coding_scheme(word owner, unsigned arity, index_expansion exp)
        : owner_(std::move(owner)), arity_(arity), exp_(exp) {}

    const word& owner() const { return owner_; }
    index_expansion expansion() const { return exp_; }

    word code_word(uint64_t n) const {
        word w = owner_;
        auto ext = expansion_digits(exp_, n, arity_);
        w.digits.insert(w.digits.end(), ext.begin(), ext.end());
        return w;
    }

    word encode(const code_triple& t) const { return code_word(triple_to_index(t)); }

    // the unique code whose cylinder contains every part of the move
    std::pair<code_triple, word> decode(const std::vector<word>& move_words) const {
        if (move_words.empty()) throw std::invalid_argument("decode: empty move");
        auto n0 = decode_word(move_words.front());
        if (!n0)
            throw decode_error("move " + move_words.front().str() +
                               " lies in no code below " + owner_.str());
        word code = code_word(*n0);
        for (const auto& mw : move_words)
            if (!code.prefix_of(mw))
                throw decode_error("move part " + mw.str() + " escapes code " + code.str());
        return {index_to_triple(*n0), code};
    }

    std::optional<uint64_t> decode_word(const word& w) const {
        if (!owner_.prefix_of(w) || w.size() == owner_.size()) return std::nullopt;
        return parse_expansion(exp_, w, owner_.size(), arity_);
    }

private:
    word owner_;
    unsigned arity_;
    index_expansion exp_;
};

// --- sequence-coded indices (pair-coordinate variant) --------------------------
//
// The code index is the full list of (rank, order) coordinates of the hat
// chain, length-prefixed and folded through the diagonal pairing:
//   flat((p_1..p_n)) = pi(n-1, F_n),  F_1 = pi(r_1,o_1),  F_k = pi(F_{k-1}, pi(r_k,o_k)).
// Orders on the Cantor table are word values, so these integers grow with
// word length; the bit ceiling turns runaway growth into a loud error.

inline constexpr size_t seqcode_bit_ceiling = size_t(1) << 22;

inline void check_seq_resource(const bigint& v, const char* what) {
    if (boost::multiprecision::msb(v == 0 ? bigint(1) : v) + 1 > seqcode_bit_ceiling)
        throw resource_limit_error(std::string("sequence-coded ") + what +
                                   " exceeds the bit ceiling (geometric growth)");
}

inline bigint flatten_pairs(const std::vector<std::pair<bigint, bigint>>& seq) {
    if (seq.empty()) throw std::invalid_argument("flatten_pairs: empty sequence");
    bigint fold = pair_big(seq[0].first, seq[0].second);
    check_seq_resource(fold, "fold");
    for (size_t i = 1; i < seq.size(); ++i) {
        fold = pair_big(fold, pair_big(seq[i].first, seq[i].second));
        check_seq_resource(fold, "fold");
    }
    return pair_big(bigint(seq.size() - 1), fold);
}

inline std::vector<std::pair<bigint, bigint>> unflatten_pairs(const bigint& flat) {
    auto [len_minus_1, fold] = unpair_big(flat);
    size_t n = size_t(len_minus_1) + 1;
    std::vector<std::pair<bigint, bigint>> seq(n);
    bigint cur = fold;
    for (size_t i = n; i-- > 1;) {
        auto [rest, pr] = unpair_big(cur);
        auto [r, o] = unpair_big(pr);
        seq[i] = {r, o};
        cur = rest;
    }
    auto [r0, o0] = unpair_big(cur);
    seq[0] = {r0, o0};
    return seq;
}

inline std::vector<uint8_t> expansion_digits_big(const bigint& n) {
    bigint m = n + 1;
    size_t L = boost::multiprecision::msb(m);  // floor(log2 m)
    if (2 * L + 1 > seqcode_bit_ceiling)
        throw resource_limit_error("sequence-coded expansion exceeds the bit ceiling");
    std::vector<uint8_t> d(L, uint8_t(1));
    d.push_back(0);
    for (size_t b = L; b-- > 0;) d.push_back(uint8_t(boost::multiprecision::bit_test(m, b)));
    return d;
}

inline std::optional<bigint> parse_expansion_big(const word& w, size_t offset) {
    const auto& d = w.digits;
    size_t i = offset;
    while (i < d.size() && d[i] == 1) ++i;
    if (i >= d.size() || d[i] != 0) return std::nullopt;
    size_t L = i - offset;
    ++i;
    if (i + L > d.size()) return std::nullopt;
    bigint m = 1;
    for (size_t b = 0; b < L; ++b) {
        if (d[i + b] > 1) return std::nullopt;
        m <<= 1;
        if (d[i + b]) m |= 1;
    }
    return m - 1;
}

}  // namespace bmt
