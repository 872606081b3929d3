#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bmt {

struct decode_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cellularity_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation would need integers or words beyond the
// configured resource ceiling; always a loud stop, never a wrong answer.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite word over the digits 0..arity-1; the cylinder [w] is the set of
// infinite sequences extending w.
struct word {
    std::vector<uint8_t> digits;

    word() = default;
    explicit word(std::vector<uint8_t> d) : digits(std::move(d)) {}

    static word from_string(std::string_view s, unsigned arity) {
        word w;
        if (s == "e") return w;
        for (char c : s) {
            if (c < '0' || c >= char('0' + int(arity)))
                throw std::invalid_argument("bad cylinder digit '" + std::string(1, c) + "'");
            w.digits.push_back(uint8_t(c - '0'));
        }
        return w;
    }

    size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }

    bool prefix_of(const word& other) const {
        if (digits.size() > other.digits.size()) return false;
        return std::equal(digits.begin(), digits.end(), other.digits.begin());
    }

    word append(uint8_t d) const {
        word w = *this;
        w.digits.push_back(d);
        return w;
    }

    word append_run(uint8_t d, size_t count) const {
        word w = *this;
        w.digits.insert(w.digits.end(), count, d);
        return w;
    }

    word prefix(size_t len) const {
        if (len > digits.size()) throw std::invalid_argument("word prefix longer than word");
        return word(std::vector<uint8_t>(digits.begin(), digits.begin() + len));
    }

    // canonical well-order: length, then digit-lexicographic (= numeric value)
    static std::strong_ordering cmp_len_value(const word& a, const word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a.digits[i] != b.digits[i]) return a.digits[i] <=> b.digits[i];
        return std::strong_ordering::equal;
    }

    // numeric value across lengths: strip leading zeros, then length, then lex
    static std::strong_ordering cmp_value(const word& a, const word& b) {
        size_t ia = 0, ib = 0;
        while (ia < a.size() && a.digits[ia] == 0) ++ia;
        while (ib < b.size() && b.digits[ib] == 0) ++ib;
        size_t la = a.size() - ia, lb = b.size() - ib;
        if (la != lb) return la <=> lb;
        for (size_t i = 0; i < la; ++i)
            if (a.digits[ia + i] != b.digits[ib + i]) return a.digits[ia + i] <=> b.digits[ib + i];
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (digits.empty()) return "e";
        std::string s;
        s.reserve(digits.size());
        for (uint8_t d : digits) s.push_back(char('0' + d));
        return s;
    }

    friend bool operator==(const word&, const word&) = default;
};

struct cylinder {
    word w;
    friend bool operator==(const cylinder&, const cylinder&) = default;
};

struct dyadic_interval {
    uint32_t level = 0;
    uint64_t index = 0;  // < 2^level
    friend bool operator==(const dyadic_interval&, const dyadic_interval&) = default;
};

struct finite_open_ref {
    uint32_t index = 0;  // position in tau*(X)
    friend bool operator==(const finite_open_ref&, const finite_open_ref&) = default;
};

// One basic open set of a space presentation; `piece` tags the component of
// a disjoint sum (0 for plain presets).
struct basic_set {
    uint32_t piece = 0;
    std::variant<cylinder, dyadic_interval, finite_open_ref> v;

    basic_set() = default;
    basic_set(std::variant<cylinder, dyadic_interval, finite_open_ref> val) : v(std::move(val)) {}
    basic_set(uint32_t p, std::variant<cylinder, dyadic_interval, finite_open_ref> val)
        : piece(p), v(std::move(val)) {}

    static basic_set cyl(word w) { return basic_set(cylinder{std::move(w)}); }
    static basic_set cyl(std::string_view s, unsigned arity = 2) {
        return basic_set(cylinder{word::from_string(s, arity)});
    }
    static basic_set dyadic(uint32_t level, uint64_t index) {
        return basic_set(dyadic_interval{level, index});
    }
    static basic_set fin(uint32_t index) { return basic_set(finite_open_ref{index}); }

    const word& cyl_word() const {
        if (const auto* c = std::get_if<cylinder>(&v)) return c->w;
        throw std::invalid_argument("basic set is not a cylinder");
    }

    friend bool operator==(const basic_set&, const basic_set&) = default;
};

// A player's move: a finite union of basic sets.  Always kept normalized by
// the owning space (no duplicates, no absorbed parts, siblings merged).
struct game_move {
    std::vector<basic_set> parts;

    game_move() = default;
    explicit game_move(basic_set b) : parts{std::move(b)} {}
    explicit game_move(std::vector<basic_set> p) : parts(std::move(p)) {}

    bool single() const { return parts.size() == 1; }
    const basic_set& only() const {
        if (parts.size() != 1) throw std::invalid_argument("move is a proper union");
        return parts.front();
    }

    friend bool operator==(const game_move&, const game_move&) = default;
};

enum class verdict_kind { certified_for_two, certified_for_one, undetermined };

struct game_result {
    verdict_kind kind = verdict_kind::undetermined;
    std::string point;       // certificate for II
    unsigned depth = 0;
    std::string evidence;
};

}  // namespace bmt
