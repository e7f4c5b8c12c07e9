#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace primspec {

// Exact Laurent polynomial in q with integer coefficients.
class Laurent {
public:
    using coeff_t = std::int64_t;

    Laurent() = default;
    Laurent(coeff_t c) { add_term(0, c); }  // NOLINT implicit constant

    static Laurent monomial(int e, coeff_t c = 1) {
        Laurent p;
        p.add_term(e, c);
        return p;
    }
    static Laurent q() { return monomial(1); }
    static Laurent qinv() { return monomial(-1); }

    void add_term(int e, coeff_t c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    coeff_t coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, coeff_t>& terms() const { return terms_; }

    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    // q -> q^{-1}
    Laurent bar() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }
    // q -> -q
    Laurent negate_q() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, (e % 2 == 0) ? c : -c);
        return r;
    }
    Laurent shift(int k) const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }
    // part with exponent > 0 (resp. < 0)
    Laurent positive_part() const {
        Laurent r;
        for (auto& [e, c] : terms_)
            if (e > 0) r.terms_.emplace(e, c);
        return r;
    }
    Laurent negative_part() const {
        Laurent r;
        for (auto& [e, c] : terms_)
            if (e < 0) r.terms_.emplace(e, c);
        return r;
    }
    coeff_t eval_at_one() const {
        coeff_t s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

    // "1 + q", "q^-1 - 2q^3", "0"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            coeff_t a = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << a;
                continue;
            }
            if (a != 1) os << a;
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    // (exponent, coefficient) pairs in increasing exponent
    std::vector<std::pair<int, coeff_t>> to_pairs() const { return {terms_.begin(), terms_.end()}; }
    static Laurent from_pairs(const std::vector<std::pair<int, coeff_t>>& v) {
        Laurent p;
        for (auto& [e, c] : v) p.add_term(e, c);
        return p;
    }

private:
    std::map<int, coeff_t> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

}  // namespace primspec
