#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmt {

// Exact ordinals below w^4 in Cantor normal form: a strictly descending
// list of (exponent, coefficient) terms, empty list = 0.  Only the
// operations rank computation needs: comparison, successor, finite sup,
// addition of a natural.
class ordinal {
public:
    struct term {
        uint8_t exp;     // < 4
        uint64_t coeff;  // >= 1
        friend bool operator==(const term&, const term&) = default;
    };

    static constexpr uint8_t max_exponent = 3;

    ordinal() = default;

    static ordinal make(std::vector<term> terms) {
        for (const auto& t : terms) {
            if (t.exp > max_exponent)
                throw std::domain_error("ordinal: exponent " + std::to_string(t.exp) +
                                        " is beyond the w^4 ceiling");
            if (t.coeff == 0)
                throw std::invalid_argument("ordinal: zero coefficient");
        }
        // merge equal exponents, then order descending
        std::vector<term> out;
        for (uint8_t e = max_exponent + 1; e-- > 0;) {
            uint64_t c = 0;
            for (const auto& t : terms)
                if (t.exp == e) {
                    if (c > UINT64_MAX - t.coeff)
                        throw std::overflow_error("ordinal: coefficient overflow");
                    c += t.coeff;
                }
            if (c > 0) out.push_back({e, c});
        }
        ordinal o;
        o.terms_ = std::move(out);
        return o;
    }

    static ordinal make(std::initializer_list<term> terms) {
        return make(std::vector<term>(terms));
    }

    static ordinal nat(uint64_t n) {
        ordinal o;
        if (n > 0) o.terms_.push_back({0, n});
        return o;
    }

    static ordinal omega() { return make({{1, 1}}); }

    const std::vector<term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_natural() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
    }

    // value when the ordinal is finite
    uint64_t as_natural() const {
        if (!is_natural()) throw std::domain_error("ordinal: " + text() + " is not a natural");
        return terms_.empty() ? 0 : terms_[0].coeff;
    }

    // lexicographic CNF comparison
    friend std::strong_ordering operator<=>(const ordinal& a, const ordinal& b) {
        size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            if (a.terms_[i].exp != b.terms_[i].exp)
                return a.terms_[i].exp <=> b.terms_[i].exp;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff <=> b.terms_[i].coeff;
        }
        return a.terms_.size() <=> b.terms_.size();
    }
    friend bool operator==(const ordinal& a, const ordinal& b) { return a.terms_ == b.terms_; }

    ordinal succ() const { return add_natural(1); }

    // ordinal + n (right addition of a finite ordinal)
    ordinal add_natural(uint64_t n) const {
        if (n == 0) return *this;
        std::vector<term> t = terms_;
        if (!t.empty() && t.back().exp == 0) {
            if (t.back().coeff > UINT64_MAX - n)
                throw std::overflow_error("ordinal: coefficient overflow");
            t.back().coeff += n;
        } else {
            t.push_back({0, n});
        }
        ordinal o;
        o.terms_ = std::move(t);
        return o;
    }

    // sup of a finite list = its maximum; sup {} = 0
    static ordinal sup(const std::vector<ordinal>& xs) {
        ordinal m;
        for (const auto& x : xs)
            if (x > m) m = x;
        return m;
    }

    // text form with "w" for the first infinite ordinal, e.g. "w*2", "w^2 + 3"
    std::string text() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i > 0) s += " + ";
            const term& t = terms_[i];
            if (t.exp == 0) {
                s += std::to_string(t.coeff);
            } else {
                s += (t.exp == 1) ? "w" : "w^" + std::to_string(t.exp);
                if (t.coeff > 1) s += "*" + std::to_string(t.coeff);
            }
        }
        return s;
    }

    static ordinal parse(std::string_view sv) {
        std::vector<term> terms;
        size_t i = 0;
        auto skip_ws = [&] { while (i < sv.size() && sv[i] == ' ') ++i; };
        auto read_nat = [&]() -> uint64_t {
            if (i >= sv.size() || sv[i] < '0' || sv[i] > '9')
                throw std::invalid_argument("ordinal: expected number in \"" + std::string(sv) + "\"");
            uint64_t v = 0;
            while (i < sv.size() && sv[i] >= '0' && sv[i] <= '9') {
                v = v * 10 + uint64_t(sv[i] - '0');
                ++i;
            }
            return v;
        };
        skip_ws();
        if (i < sv.size() && sv[i] == '0' && (i + 1 == sv.size() || sv.substr(i + 1).find_first_not_of(' ') == std::string_view::npos)) {
            return ordinal();
        }
        while (true) {
            skip_ws();
            term t{0, 1};
            if (i < sv.size() && sv[i] == 'w') {
                ++i;
                t.exp = 1;
                if (i < sv.size() && sv[i] == '^') {
                    ++i;
                    uint64_t e = read_nat();
                    if (e > max_exponent) throw std::domain_error("ordinal: exponent beyond ceiling");
                    t.exp = uint8_t(e);
                }
                if (i < sv.size() && sv[i] == '*') {
                    ++i;
                    t.coeff = read_nat();
                }
            } else {
                t.coeff = read_nat();
            }
            terms.push_back(t);
            skip_ws();
            if (i >= sv.size()) break;
            if (sv[i] != '+') throw std::invalid_argument("ordinal: unexpected char in \"" + std::string(sv) + "\"");
            ++i;
        }
        return make(std::move(terms));
    }

private:
    std::vector<term> terms_;
};

}  // namespace bmt
