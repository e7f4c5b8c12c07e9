#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "errors.hpp"
#include "kl_classical.hpp"
#include "weights.hpp"

namespace primspec {

// ---------------------------------------------------------------------------
// singly atypical frame

struct AtypicalityFrame {
    int a = 0;
    std::vector<int> positions;  // I_alpha, 1-based
    int p = 0;
    std::map<int, int> q;  // position -> q_i

    bool contains(int pos) const { return q.count(pos) != 0; }
};

// the unique label occurring on both sides; requires atypicality 1
inline int atypical_label(const SuperWeight& a) {
    int deg = atypicality_degree(a);
    if (deg != 1)
        throw PreconditionError("weight " + a.str() + " is not singly atypical (degree " + std::to_string(deg) + ")");
    for (int x : a.left)
        if (std::find(a.right.begin(), a.right.end(), x) != a.right.end()) return x;
    throw PreconditionError("no atypical label in " + a.str());
}

// position of label x closest to the separator on the left (0 if absent)
inline int left_nearest(const SuperWeight& a, int x) {
    for (int pos = a.m(); pos >= 1; --pos)
        if (a.label(pos) == x) return pos;
    return 0;
}

// position of label x closest to the separator on the right (0 if absent)
inline int right_nearest(const SuperWeight& a, int x) {
    for (int pos = a.m() + 1; pos <= a.size(); ++pos)
        if (a.label(pos) == x) return pos;
    return 0;
}

inline AtypicalityFrame frame(const SuperWeight& a) {
    AtypicalityFrame f;
    f.a = atypical_label(a);
    int lpos = left_nearest(a, f.a), rpos = right_nearest(a, f.a);
    std::vector<int> chain;  // i_1, i_2, ...
    int lf = lpos, rf = rpos;
    for (int j = 1;; ++j) {
        int x = f.a + j, found = 0;
        for (int pos = lf - 1; pos >= 1 && !found; --pos)
            if (a.label(pos) == x) found = pos;
        if (found) {
            lf = found;
        } else {
            for (int pos = rf + 1; pos <= a.size() && !found; ++pos)
                if (a.label(pos) == x) found = pos;
            if (!found) break;
            rf = found;
        }
        chain.push_back(found);
    }
    f.p = static_cast<int>(chain.size());
    // i_0 opposite to i_1; without a chain the left occurrence comes first
    if (f.p > 0 && !a.on_left(chain[0]))
        f.positions = {rpos, lpos};
    else
        f.positions = {lpos, rpos};
    f.positions.insert(f.positions.end(), chain.begin(), chain.end());
    for (std::size_t k = 0; k < f.positions.size(); ++k) {
        int cnt = 0;
        if (k > 0) {
            bool side = a.on_left(f.positions[k]);
            for (std::size_t l = k + 1; l < f.positions.size() && a.on_left(f.positions[l]) != side; ++l) ++cnt;
        }
        f.q[f.positions[k]] = cnt;
    }
    return f;
}

// the weight of (Theta) for alpha and shift p
inline SuperWeight theta_representative(const SuperWeight& a, int p) {
    int x = atypical_label(a);
    SuperWeight b = a;
    b.label(left_nearest(a, x)) = x + p;
    b.label(right_nearest(a, x)) = x + p;
    return b;
}

// p with beta in Theta^p_alpha, absent when the central characters differ
inline std::optional<int> theta_membership(const SuperWeight& a, const SuperWeight& b) {
    if (a.m() != b.m() || a.n() != b.n()) return std::nullopt;
    if (central_character(a) != central_character(b)) return std::nullopt;
    int p = atypical_label(b) - atypical_label(a);
    if (!orbit_equal(theta_representative(a, p), b)) return std::nullopt;
    return p;
}

// gamma from alpha's frame, delta from beta with a_beta = a_alpha + p
inline std::pair<SuperWeight, SuperWeight> gamma_delta(const SuperWeight& a, const SuperWeight& b) {
    auto p = theta_membership(a, b);
    AtypicalityFrame f = frame(a);
    if (!p || *p < 0 || *p > f.p)
        throw PreconditionError("gamma_delta: " + b.str() + " is not in Theta^p of " + a.str() + " with 0 <= p <= " +
                                std::to_string(f.p));
    int top = f.a + *p;
    SuperWeight g = a, d = b;
    for (int j = 1; j <= a.size(); ++j) {
        int x = a.label(j);
        if (x > top) continue;
        g.label(j) = f.contains(j) ? std::min(x + f.q.at(j), top) : x - 1;
    }
    int keep_l = left_nearest(b, top), keep_r = right_nearest(b, top);
    for (int j = 1; j <= b.size(); ++j)
        if (b.label(j) <= top && j != keep_l && j != keep_r) d.label(j) -= 1;
    return {g, d};
}

// ---------------------------------------------------------------------------
// reduction pipeline

struct TraceStep {
    std::string op;  // "e_2", "f_3^2"
    char side = 'a';  // 'a' alpha chain, 'b' beta chain
    SuperWeight before, after;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    SuperWeight alpha_lowered, beta_lowered;  // alpha'', beta''
    std::vector<SuperWeight> alpha_stages;    // alpha^[0..k]
    std::vector<SuperWeight> beta_stages;
    SuperWeight final_gamma, final_delta;
    int p = 0;
};

namespace detail {

inline std::string op_name(bool raise, int i, int r) {
    std::string s = std::string(raise ? "e_" : "f_") + std::to_string(i);
    if (r != 1) s += "^" + std::to_string(r);
    return s;
}

inline SuperWeight apply_op(ReductionTrace& t, char side, const SuperWeight& w, bool raise, int i, int r) {
    if (r == 0) return w;
    auto res = raise ? e_tilde_pow(w, i, r) : f_tilde_pow(w, i, r);
    if (!res) throw PreconditionError("reduction: " + op_name(raise, i, r) + " undefined on " + w.str());
    t.steps.push_back({op_name(raise, i, r), side, w, *res});
    return *res;
}

inline int count_label(const SuperWeight& w, int x, bool left) {
    const auto& v = left ? w.left : w.right;
    return static_cast<int>(std::count(v.begin(), v.end(), x));
}

}  // namespace detail

inline ReductionTrace reduction_trace(const SuperWeight& a, const SuperWeight& b) {
    auto p = theta_membership(a, b);
    AtypicalityFrame f = frame(a);
    if (!p || *p < 0 || *p > f.p)
        throw PreconditionError("reduction_trace: " + b.str() + " is not in Theta^p of " + a.str() +
                                " with 0 <= p <= " + std::to_string(f.p));
    ReductionTrace t;
    t.p = *p;
    int x0 = f.a;
    SuperWeight A = a, B = b;

    // labels below a lowered by one, smallest first
    std::set<int> below;
    for (int pos = 1; pos <= a.size(); ++pos)
        if (a.label(pos) < x0) below.insert(a.label(pos));
    for (int x : below) {
        bool left = detail::count_label(A, x, true) > 0;
        int n = detail::count_label(A, x, left);
        A = detail::apply_op(t, 'a', A, left, x - 1, n);
        B = detail::apply_op(t, 'b', B, left, x - 1, n);
    }
    t.alpha_lowered = A;
    t.beta_lowered = B;

    // extra copies of a on one side
    int nl = detail::count_label(A, x0, true), nr = detail::count_label(A, x0, false);
    if (nl > 1) {
        A = detail::apply_op(t, 'a', A, true, x0 - 1, nl - 1);
        B = detail::apply_op(t, 'b', B, true, x0 - 1, nl - 1);
    } else if (nr > 1) {
        A = detail::apply_op(t, 'a', A, false, x0 - 1, nr - 1);
        B = detail::apply_op(t, 'b', B, false, x0 - 1, nr - 1);
    }
    t.alpha_stages.push_back(A);
    t.beta_stages.push_back(B);

    for (int s = 1; s <= *p; ++s) {
        int az = x0 + s - 1;
        int cl = detail::count_label(A, az + 1, true), cr = detail::count_label(A, az + 1, false);
        bool left = cl > 0;
        int n = left ? cl : cr;
        A = detail::apply_op(t, 'a', A, left, az, n);
        B = detail::apply_op(t, 'b', B, left, az, n);
        t.alpha_stages.push_back(A);
        t.beta_stages.push_back(B);
    }
    t.final_gamma = A;
    t.final_delta = B;
    return t;
}

// ---------------------------------------------------------------------------
// inclusion decision

enum class Decision { no, yes, unsupported };

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        default: return "unsupported";
    }
}

namespace detail {

inline bool all_equal_multisets_gl22(const SuperWeight& a) {
    return a.m() == 2 && a.n() == 2 && atypicality_degree(a) == 2;
}

inline const std::vector<SuperWeight>& gl22_lower_list() {
    static const std::vector<SuperWeight> v = {
        SuperWeight({1, 1}, {1, 1}), SuperWeight({2, 1}, {2, 1}), SuperWeight({1, 2}, {1, 2}),
        SuperWeight({1, 2}, {2, 1})};
    return v;
}

}  // namespace detail

// J(beta) contained in J(alpha)
inline Decision inclusion(const SuperWeight& a, const SuperWeight& b, const KLOptions& opt = {}) {
    if (a.m() != b.m() || a.n() != b.n())
        throw PreconditionError("inclusion: weights " + a.str() + " and " + b.str() + " have different shapes");
    if (a == b) return Decision::yes;
    if (central_character(a) != central_character(b)) return Decision::no;
    if (orbit_equal(a, b)) return classical_inclusion(b, a, opt) ? Decision::yes : Decision::no;
    int deg = atypicality_degree(a);
    if (deg == 0) return Decision::no;  // typical: the central character fixes the orbit
    if (deg == 1) {
        auto p = theta_membership(a, b);
        if (!p || *p < 0 || *p > frame(a).p) return Decision::no;
        auto [g, d] = gamma_delta(a, b);
        return classical_inclusion(d, g, opt) ? Decision::yes : Decision::no;
    }
    if (detail::all_equal_multisets_gl22(a)) {
        int k = a.min_label();
        if (a.shifted(-k) != SuperWeight({1, 0}, {0, 1})) return Decision::no;
        SuperWeight nb = b.shifted(-k);
        for (auto& w : detail::gl22_lower_list())
            if (nb == w) return Decision::yes;
        return Decision::no;
    }
    return Decision::unsupported;
}

inline bool equal_ideal(const SuperWeight& a, const SuperWeight& b) {
    return orbit_equal(a, b) && classical_equal(a, b);
}

// weights whose ideal can lie below J(alpha); empty optional outside the decidable regimes
inline std::optional<std::vector<SuperWeight>> lower_candidates(const SuperWeight& a) {
    std::vector<SuperWeight> out;
    int deg = atypicality_degree(a);
    if (deg == 0) {
        out = orbit(a);
    } else if (deg == 1) {
        int pa = frame(a).p;
        for (int p = 0; p <= pa; ++p) {
            auto o = orbit(theta_representative(a, p));
            out.insert(out.end(), o.begin(), o.end());
        }
    } else if (detail::all_equal_multisets_gl22(a)) {
        out = orbit(a);
        int k = a.min_label();
        if (a.shifted(-k) == SuperWeight({1, 0}, {0, 1}))
            for (auto& w : detail::gl22_lower_list()) {
                auto o = orbit(w.shifted(k));
                out.insert(out.end(), o.begin(), o.end());
            }
    } else {
        return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// covering: strict inclusion with nothing strictly in between
inline Decision covers(const SuperWeight& a, const SuperWeight& b, const KLOptions& opt = {}) {
    Decision inc = inclusion(a, b, opt);
    if (inc != Decision::yes) return inc;
    if (equal_ideal(a, b)) return Decision::no;
    auto cand = lower_candidates(a);
    if (!cand) return Decision::unsupported;
    for (auto& k : *cand) {
        if (equal_ideal(k, a) || equal_ideal(k, b)) continue;
        if (inclusion(a, k, opt) == Decision::yes && inclusion(k, b, opt) == Decision::yes) return Decision::no;
    }
    return Decision::yes;
}

// gl(m)+gl(n) covering inside one orbit
inline bool classical_covers(const SuperWeight& g, const SuperWeight& d, const KLOptions& opt = {}) {
    if (!classical_inclusion(d, g, opt) || classical_equal(d, g)) return false;
    for (auto& k : orbit(g)) {
        if (classical_equal(k, g) || classical_equal(k, d)) continue;
        if (classical_inclusion(k, g, opt) && classical_inclusion(d, k, opt)) return false;
    }
    return true;
}

}  // namespace primspec
