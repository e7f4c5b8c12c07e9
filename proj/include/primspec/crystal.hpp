#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weights.hpp"

namespace primspec {

enum class Sign : signed char { minus = -1, zero = 0, plus = 1 };

struct Signature {
    std::vector<Sign> symbols;  // length m+n
    int separator = 0;          // = m

    int count(Sign s) const {
        int c = 0;
        for (Sign x : symbols) c += (x == s);
        return c;
    }
    std::string str() const {
        std::string out = "(";
        for (int j = 0; j < static_cast<int>(symbols.size()); ++j) {
            if (j == separator)
                out += '|';
            else if (j)
                out += ',';
            out += symbols[j] == Sign::plus ? "+" : symbols[j] == Sign::minus ? "-" : "0";
        }
        if (separator == static_cast<int>(symbols.size())) out += '|';
        return out + ")";
    }
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature i_signature(const SuperWeight& a, int i) {
    Signature s;
    s.separator = a.m();
    for (int x : a.left) s.symbols.push_back(x == i ? Sign::plus : x == i + 1 ? Sign::minus : Sign::zero);
    for (int x : a.right) s.symbols.push_back(x == i + 1 ? Sign::plus : x == i ? Sign::minus : Sign::zero);
    return s;
}

// cancel each '-' against the nearest later uncancelled '+'
inline Signature reduce(const Signature& sig) {
    Signature r = sig;
    std::vector<int> open;
    for (int j = 0; j < static_cast<int>(r.symbols.size()); ++j) {
        if (r.symbols[j] == Sign::minus) {
            open.push_back(j);
        } else if (r.symbols[j] == Sign::plus && !open.empty()) {
            r.symbols[open.back()] = Sign::zero;
            r.symbols[j] = Sign::zero;
            open.pop_back();
        }
    }
    return r;
}

inline int epsilon(const SuperWeight& a, int i) { return reduce(i_signature(a, i)).count(Sign::minus); }
inline int phi(const SuperWeight& a, int i) { return reduce(i_signature(a, i)).count(Sign::plus); }

inline std::optional<SuperWeight> e_tilde(const SuperWeight& a, int i) {
    Signature r = reduce(i_signature(a, i));
    for (int j = 0; j < static_cast<int>(r.symbols.size()); ++j) {
        if (r.symbols[j] == Sign::minus) {
            SuperWeight b = a;
            b.label(j + 1) += (j < a.m()) ? -1 : 1;
            return b;
        }
    }
    return std::nullopt;
}

inline std::optional<SuperWeight> f_tilde(const SuperWeight& a, int i) {
    Signature r = reduce(i_signature(a, i));
    for (int j = static_cast<int>(r.symbols.size()) - 1; j >= 0; --j) {
        if (r.symbols[j] == Sign::plus) {
            SuperWeight b = a;
            b.label(j + 1) += (j < a.m()) ? 1 : -1;
            return b;
        }
    }
    return std::nullopt;
}

// repeated application; empty as soon as one step is empty
inline std::optional<SuperWeight> e_tilde_pow(const SuperWeight& a, int i, int r) {
    std::optional<SuperWeight> cur = a;
    for (int k = 0; k < r && cur; ++k) cur = e_tilde(*cur, i);
    return cur;
}

inline std::optional<SuperWeight> f_tilde_pow(const SuperWeight& a, int i, int r) {
    std::optional<SuperWeight> cur = a;
    for (int k = 0; k < r && cur; ++k) cur = f_tilde(*cur, i);
    return cur;
}

// colours that can carry a nonzero statistic
inline std::pair<int, int> crystal_colour_range(const SuperWeight& a) { return {a.min_label() - 1, a.max_label()}; }

}  // namespace primspec
