#pragma once

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace primspec {

// Integral weight of gl(m|n) as its label tuple (a_1..a_m | b_1..b_n).
struct SuperWeight {
    std::vector<int> left;
    std::vector<int> right;

    SuperWeight() = default;
    SuperWeight(std::vector<int> l, std::vector<int> r) : left(std::move(l)), right(std::move(r)) {}

    int m() const { return static_cast<int>(left.size()); }
    int n() const { return static_cast<int>(right.size()); }
    int size() const { return m() + n(); }

    // 1-based position over the concatenation, as in the label numbering
    int label(int pos) const { return pos <= m() ? left[pos - 1] : right[pos - m() - 1]; }
    int& label(int pos) { return pos <= m() ? left[pos - 1] : right[pos - m() - 1]; }
    bool on_left(int pos) const { return pos <= m(); }

    int min_label() const;
    int max_label() const;

    std::string str() const;
    // compact form "(2312|2)" when every label is a single digit, else comma form
    std::string compact() const;

    SuperWeight shifted(int k) const {
        SuperWeight w = *this;
        for (int& x : w.left) x += k;
        for (int& x : w.right) x += k;
        return w;
    }

    friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
    friend auto operator<=>(const SuperWeight&, const SuperWeight&) = default;
};

inline int SuperWeight::min_label() const {
    int v = left.empty() ? (right.empty() ? 0 : right[0]) : left[0];
    for (int x : left) v = std::min(v, x);
    for (int x : right) v = std::min(v, x);
    return v;
}

inline int SuperWeight::max_label() const {
    int v = left.empty() ? (right.empty() ? 0 : right[0]) : left[0];
    for (int x : left) v = std::max(v, x);
    for (int x : right) v = std::max(v, x);
    return v;
}

inline std::string SuperWeight::str() const {
    std::string s;
    for (int i = 0; i < m(); ++i) {
        if (i) s += ',';
        s += std::to_string(left[i]);
    }
    s += '|';
    for (int j = 0; j < n(); ++j) {
        if (j) s += ',';
        s += std::to_string(right[j]);
    }
    return s;
}

inline std::string SuperWeight::compact() const {
    bool digits = true;
    for (int x : left) digits = digits && x >= 0 && x <= 9;
    for (int x : right) digits = digits && x >= 0 && x <= 9;
    if (!digits) return "(" + str() + ")";
    std::string s = "(";
    for (int x : left) s += char('0' + x);
    s += '|';
    for (int x : right) s += char('0' + x);
    return s + ")";
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view part, std::string_view whole) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&](bool final_tok) {
        std::string t;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) {
            if (final_tok && out.empty()) return;  // empty side
            throw ParseError("empty label in weight \"" + std::string(whole) + "\"");
        }
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception&) {
            throw ParseError("bad label \"" + t + "\" in weight \"" + std::string(whole) + "\"");
        }
        if (used != t.size())
            throw ParseError("bad label \"" + t + "\" in weight \"" + std::string(whole) + "\"");
        out.push_back(static_cast<int>(v));
        tok.clear();
    };
    for (char c : part) {
        if (c == ',')
            flush(false);
        else
            tok += c;
    }
    flush(true);
    return out;
}

}  // namespace detail

// "a1,...,am|b1,...,bn"; spaces allowed; '|' mandatory; optional surrounding parentheses
inline SuperWeight parse_weight(std::string_view text) {
    std::string_view s = text;
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
    auto bar = s.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' in weight \"" + std::string(text) + "\"");
    if (s.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("more than one '|' in weight \"" + std::string(text) + "\"");
    SuperWeight w;
    w.left = detail::parse_int_list(s.substr(0, bar), text);
    w.right = detail::parse_int_list(s.substr(bar + 1), text);
    if (w.left.empty()) throw ParseError("weight needs m >= 1: \"" + std::string(text) + "\"");
    return w;
}

using Rational = boost::rational<long long>;

// lambda given by its coefficients on eps_1..eps_m, delta_1..delta_n
inline SuperWeight from_rho_shifted(const std::vector<Rational>& coeffs, int m, int n) {
    if (m < 1 || n < 0 || static_cast<int>(coeffs.size()) != m + n)
        throw PreconditionError("from_rho_shifted: need m >= 1, n >= 0 and m+n coefficients");
    SuperWeight w;
    for (int i = 1; i <= m; ++i) {
        Rational v = coeffs[i - 1] + Rational(m - i);
        if (v.denominator() != 1) throw PreconditionError("from_rho_shifted: weight is not integral");
        w.left.push_back(static_cast<int>(v.numerator()));
    }
    for (int j = 1; j <= n; ++j) {
        // (delta_j, delta_j) = -1
        Rational v = -(coeffs[m + j - 1] + Rational(1 - j));
        if (v.denominator() != 1) throw PreconditionError("from_rho_shifted: weight is not integral");
        w.right.push_back(static_cast<int>(v.numerator()));
    }
    return w;
}

// inverse of from_rho_shifted
inline std::vector<Rational> to_coefficients(const SuperWeight& a) {
    std::vector<Rational> c;
    for (int i = 1; i <= a.m(); ++i) c.emplace_back(a.left[i - 1] - (a.m() - i));
    for (int j = 1; j <= a.n(); ++j) c.emplace_back(-a.right[j - 1] - (1 - j));
    return c;
}

// x -> alpha_0(x) - alpha_1(x), zero entries dropped
using CentralCharacter = std::map<int, int>;

inline CentralCharacter central_character(const SuperWeight& a) {
    CentralCharacter cc;
    for (int x : a.left) ++cc[x];
    for (int x : a.right) --cc[x];
    for (auto it = cc.begin(); it != cc.end();) {
        if (it->second == 0)
            it = cc.erase(it);
        else
            ++it;
    }
    return cc;
}

inline int atypicality_degree(const SuperWeight& a) {
    std::map<int, int> l, r;
    for (int x : a.left) ++l[x];
    for (int x : a.right) ++r[x];
    int d = 0;
    for (auto& [x, c] : l) {
        auto it = r.find(x);
        if (it != r.end()) d += std::min(c, it->second);
    }
    return d;
}

inline bool is_dominant(const SuperWeight& a) {
    return std::is_sorted(a.left.begin(), a.left.end(), std::greater<>()) &&
           std::is_sorted(a.right.begin(), a.right.end());
}

inline bool is_antidominant(const SuperWeight& a) {
    return std::is_sorted(a.left.begin(), a.left.end()) &&
           std::is_sorted(a.right.begin(), a.right.end(), std::greater<>());
}

inline bool is_regular(const SuperWeight& a) {
    auto distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return distinct(a.left) && distinct(a.right);
}

inline bool orbit_equal(const SuperWeight& a, const SuperWeight& b) {
    if (a.m() != b.m() || a.n() != b.n()) return false;
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted(a.left) == sorted(b.left) && sorted(a.right) == sorted(b.right);
}

inline SuperWeight dominant_representative(SuperWeight a) {
    std::sort(a.left.begin(), a.left.end(), std::greater<>());
    std::sort(a.right.begin(), a.right.end());
    return a;
}

inline SuperWeight antidominant_representative(SuperWeight a) {
    std::sort(a.left.begin(), a.left.end());
    std::sort(a.right.begin(), a.right.end(), std::greater<>());
    return a;
}

// all distinct rearrangements in the W-orbit, sorted
inline std::vector<SuperWeight> orbit(const SuperWeight& a) {
    std::vector<int> l = a.left, r = a.right;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    std::vector<SuperWeight> out;
    do {
        std::vector<int> rr = r;
        do {
            out.emplace_back(l, rr);
        } while (std::next_permutation(rr.begin(), rr.end()));
    } while (std::next_permutation(l.begin(), l.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primspec
