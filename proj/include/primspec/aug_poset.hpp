#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "errors.hpp"
#include "kl_classical.hpp"
#include "super_inclusion.hpp"
#include "tableaux.hpp"
#include "weights.hpp"

namespace primspec {

// label tuple of lambda_i: (m-1,...,i+1,i,i,i-1,...,1|i), and (m-1,...,0|0) for i = 0
inline SuperWeight lambda_label(int m, int i) {
    if (m < 1 || i < 0 || i > m - 1) throw PreconditionError("lambda_label: need 0 <= i <= m-1");
    std::vector<int> l;
    for (int k = 1; k <= m; ++k) l.push_back(m - k + (k >= m - i + 1 ? 1 : 0));
    return SuperWeight(l, {i});
}

// w_0 . lambda_i, the minimal element of X_i
inline SuperWeight q_label(int m, int i) {
    SuperWeight w = lambda_label(m, i);
    std::reverse(w.left.begin(), w.left.end());
    return w;
}

struct IdealClass {
    SuperWeight repr;                  // lexicographically largest member
    std::vector<SuperWeight> members;  // sorted descending
    int i = 0;
    int j = 0;
    int p = 0;
    std::vector<int> z;
};

struct IdealPoset {
    int m = 0;
    std::vector<IdealClass> classes;
    std::vector<std::vector<char>> below;  // below[a][b]: J(b) inside J(a)
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper)

    std::size_t size() const { return classes.size(); }
    bool leq(std::size_t b, std::size_t a) const { return below[a][b] != 0; }
    bool less(std::size_t b, std::size_t a) const { return a != b && below[a][b]; }

    std::vector<std::pair<std::size_t, std::size_t>> strict_relation() const {
        std::vector<std::pair<std::size_t, std::size_t>> r;
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                if (less(b, a)) r.emplace_back(b, a);
        return r;
    }
    std::optional<std::size_t> find(const SuperWeight& w) const {
        for (std::size_t c = 0; c < size(); ++c)
            for (auto& x : classes[c].members)
                if (x == w) return c;
        return std::nullopt;
    }
    std::size_t at(const SuperWeight& w) const {
        auto c = find(w);
        if (!c) throw PreconditionError("poset has no class containing " + w.str());
        return *c;
    }
};

namespace detail {

inline void finish_poset(IdealPoset& X, const KLOptions& opt) {
    std::size_t n = X.size();
    for (auto& c : X.classes) {
        std::sort(c.members.begin(), c.members.end(), std::greater<>());
        c.repr = c.members.front();
    }
    X.below.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Decision d = inclusion(X.classes[a].repr, X.classes[b].repr, opt);
            if (d == Decision::unsupported)
                throw PreconditionError("poset: inclusion undecided for " + X.classes[a].repr.str() + " and " +
                                        X.classes[b].repr.str());
            X.below[a][b] = d == Decision::yes;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && X.below[a][b] && X.below[b][a])
                throw InvariantError("poset: distinct classes " + X.classes[a].repr.str() + " and " +
                                     X.classes[b].repr.str() + " contain each other");
            if (!X.below[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (X.below[b][c] && !X.below[a][c]) throw InvariantError("poset: inclusion is not transitive");
        }
    X.hasse.clear();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!X.less(b, a)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (X.less(b, c) && X.less(c, a)) cover = false;
            if (cover) X.hasse.emplace_back(b, a);
        }
}

}  // namespace detail

// classes by equal_ideal, order by inclusion, Hasse edges by transitive reduction
inline IdealPoset build_poset(const std::vector<SuperWeight>& weights, const KLOptions& opt = {}) {
    IdealPoset X;
    X.m = weights.empty() ? 0 : weights.front().m();
    for (auto& w : weights) {
        bool placed = false;
        for (auto& c : X.classes)
            if (equal_ideal(c.members.front(), w)) {
                if (std::find(c.members.begin(), c.members.end(), w) == c.members.end()) c.members.push_back(w);
                placed = true;
                break;
            }
        if (!placed) {
            IdealClass c;
            c.repr = w;
            c.members = {w};
            X.classes.push_back(std::move(c));
        }
    }
    for (auto& c : X.classes) std::sort(c.members.begin(), c.members.end(), std::greater<>());
    std::sort(X.classes.begin(), X.classes.end(),
              [](const IdealClass& a, const IdealClass& b) { return a.members.front() > b.members.front(); });
    detail::finish_poset(X, opt);
    return X;
}

struct OddReflectionResult {
    std::vector<int> eps;  // coefficients of lambda^ad on eps_1..eps_m
    int delta = 0;         // coefficient on delta
    std::vector<int> unchanged_steps;      // I^0 as step numbers
    std::vector<int> unchanged_positions;  // eps-index m-s+1 of each unchanged step
    int d = 0;
    int j = 0;  // lambda^ad lies in the orbit of mu_j
    SuperWeight ad_labels;  // lambda^ad + partial, same integer shift as the distinguished labels
};

// walk b^(0) -> b^(m) through the isotropic roots eps_{m-s+1} - delta
inline OddReflectionResult odd_reflection_ad(const SuperWeight& a) {
    if (a.n() != 1) throw PreconditionError("odd_reflection_ad: needs a gl(m|1) weight, got " + a.str());
    if (atypicality_degree(a) == 0) throw PreconditionError("odd_reflection_ad: typical weight " + a.str());
    int m = a.m();
    OddReflectionResult r;
    for (int k = 1; k <= m; ++k) r.eps.push_back(a.left[k - 1] - (m - k));
    r.delta = -a.right[0];
    for (int s = 1; s <= m; ++s) {
        int pos = m - s + 1;
        // (lambda, eps_pos - delta) with (delta, delta) = -1
        if (r.eps[pos - 1] + r.delta == 0) {
            r.unchanged_steps.push_back(s);
            r.unchanged_positions.push_back(pos);
        } else {
            r.eps[pos - 1] -= 1;
            r.delta += 1;
            ++r.d;
        }
    }
    r.j = r.delta;
    std::vector<int> l;
    for (int k = 1; k <= m; ++k) l.push_back(r.eps[k - 1] + (m - k));
    r.ad_labels = SuperWeight(l, {-r.delta});
    return r;
}

// j = max{k < m-i : gamma_{m-k} in tau(w)}, max of the empty set = 0; gamma_{m-k} sits at position k
inline int j_from_tau(const SuperWeight& a, int i) {
    auto t = tau_of_weight(a.left);
    int j = 0;
    for (int k = 1; k < a.m() - i; ++k)
        if (t.count(k)) j = k;
    return j;
}

struct StratumAssignment {
    int i = 0;
    int j_tau = 0;
    int j_gap = 0;  // m - i - 1 - p
    int j_ad = 0;
    int p = 0;
    std::vector<int> z_upset;
    std::vector<int> z_formula;  // i <= k <= i + p
};

inline std::vector<std::size_t> q_classes(const IdealPoset& X) {
    std::vector<std::size_t> q;
    for (int k = 0; k < X.m; ++k) q.push_back(X.at(q_label(X.m, k)));
    return q;
}

// every way of computing the strata for every class; disagreement is an invariant breach
inline std::vector<StratumAssignment> strata(const IdealPoset& X) {
    int m = X.m;
    auto q = q_classes(X);
    std::vector<StratumAssignment> out;
    for (std::size_t c = 0; c < X.size(); ++c) {
        const IdealClass& cl = X.classes[c];
        StratumAssignment s;
        s.i = cl.repr.right[0];
        s.p = frame(cl.repr).p;
        s.j_tau = j_from_tau(cl.repr, s.i);
        s.j_gap = m - s.i - 1 - s.p;
        s.j_ad = odd_reflection_ad(cl.repr).j;
        for (auto& w : cl.members) {
            if (w.right[0] != s.i || frame(w).p != s.p || j_from_tau(w, s.i) != s.j_tau ||
                odd_reflection_ad(w).j != s.j_ad)
                throw InvariantError("strata: members of the class of " + cl.repr.str() + " disagree");
        }
        if (s.j_tau != s.j_gap || s.j_tau != s.j_ad)
            throw InvariantError("strata: j of " + cl.repr.str() + " is " + std::to_string(s.j_tau) + " by tau, " +
                                 std::to_string(s.j_gap) + " by m-i-1-p, " + std::to_string(s.j_ad) +
                                 " by odd reflections");
        for (int k = 0; k < m; ++k) {
            if (X.leq(q[k], c)) s.z_upset.push_back(k);
            if (s.i <= k && k <= s.i + s.p) s.z_formula.push_back(k);
        }
        if (s.z_upset != s.z_formula)
            throw InvariantError("strata: component membership of " + cl.repr.str() + " disagrees");
        out.push_back(s);
    }
    return out;
}

inline std::int64_t t_formula(int m) { return (m + 1) * involution_count(m) / 2; }

// X = {J subset of J_0} for gl(m|1), enumerated over the orbits of lambda_0..lambda_{m-1}
inline IdealPoset enumerate_X(int m, const KLOptions& opt = {}) {
    if (m < 1) throw PreconditionError("enumerate_X: need m >= 1");
    if (m > opt.max_rank)
        throw BoundError("enumerate_X: m=" + std::to_string(m) + " exceeds the KL bound " +
                         std::to_string(opt.max_rank));
    SuperWeight top = lambda_label(m, 0);
    std::map<std::pair<int, StandardTableau>, IdealClass> keyed;
    for (int i = 0; i < m; ++i)
        for (auto& w : orbit(lambda_label(m, i))) {
            if (inclusion(top, w, opt) != Decision::yes) continue;
            auto& c = keyed[{i, a_tableau(w.left)}];
            c.members.push_back(w);
        }
    IdealPoset X;
    X.m = m;
    for (auto& [k, c] : keyed) X.classes.push_back(c);
    for (auto& c : X.classes) std::sort(c.members.begin(), c.members.end(), std::greater<>());
    std::sort(X.classes.begin(), X.classes.end(), [](const IdealClass& a, const IdealClass& b) {
        if (a.members.front().right != b.members.front().right) return a.members.front().right < b.members.front().right;
        return a.members.front() > b.members.front();
    });
    detail::finish_poset(X, opt);
    if (static_cast<std::int64_t>(X.size()) != t_formula(m))
        throw InvariantError("enumerate_X: " + std::to_string(X.size()) + " classes, expected " +
                             std::to_string(t_formula(m)));
    auto st = strata(X);
    for (std::size_t c = 0; c < X.size(); ++c) {
        X.classes[c].i = st[c].i;
        X.classes[c].j = st[c].j_tau;
        X.classes[c].p = st[c].p;
        X.classes[c].z = st[c].z_upset;
    }
    return X;
}

inline std::vector<std::size_t> stratum_X(const IdealPoset& X, int i) {
    std::vector<std::size_t> r;
    for (std::size_t c = 0; c < X.size(); ++c)
        if (X.classes[c].i == i) r.push_back(c);
    return r;
}

inline std::vector<std::size_t> stratum_Y(const IdealPoset& X, int j) {
    std::vector<std::size_t> r;
    for (std::size_t c = 0; c < X.size(); ++c)
        if (X.classes[c].j == j) r.push_back(c);
    return r;
}

struct Component {
    int k = 0;
    std::size_t q = 0;                  // class of Q_k
    std::vector<std::size_t> members;   // up-set of Q_k
    std::map<std::size_t, std::size_t> to_x0;  // class in Z_k -> class in X_0
    bool iso = false;
    std::string detail;
};

// Z_k with the check that e_{k-1}...e_0 followed by (..|k) -> (..|0) is an order isomorphism onto X_0
inline std::vector<Component> irreducible_components(const IdealPoset& X) {
    int m = X.m;
    auto q = q_classes(X);
    auto x0 = stratum_X(X, 0);
    std::vector<Component> out;
    for (int k = 0; k < m; ++k) {
        Component z;
        z.k = k;
        z.q = q[k];
        for (std::size_t c = 0; c < X.size(); ++c)
            if (X.leq(q[k], c)) z.members.push_back(c);
        std::string err;
        for (std::size_t c : z.members) {
            std::optional<std::size_t> img;
            for (auto& w : X.classes[c].members) {
                std::optional<SuperWeight> v = w;
                for (int col = 0; col < k && v; ++col) v = e_tilde(*v, col);
                if (!v) {
                    err = "e-string undefined on " + w.str();
                    break;
                }
                std::vector<int> l = v->left;
                std::sort(l.begin(), l.end());
                bool regular = v->right[0] == k;
                for (int t = 0; t < m; ++t) regular = regular && l[t] == t;
                if (!regular) {
                    err = "image " + v->str() + " of " + w.str() + " is outside the orbit of (m-1,...,0|k)";
                    break;
                }
                auto target = X.find(SuperWeight(v->left, {0}));
                if (!target || X.classes[*target].i != 0) {
                    err = "no X_0 class for the image of " + w.str();
                    break;
                }
                if (img && *img != *target) {
                    err = "members of the class of " + X.classes[c].repr.str() + " map to different classes";
                    break;
                }
                img = *target;
            }
            if (!err.empty()) break;
            z.to_x0[c] = *img;
        }
        if (err.empty()) {
            std::set<std::size_t> image;
            for (auto& [a, b] : z.to_x0) image.insert(b);
            if (image.size() != z.members.size() || image != std::set<std::size_t>(x0.begin(), x0.end()))
                err = "map is not a bijection onto X_0";
        }
        if (err.empty())
            for (std::size_t a : z.members)
                for (std::size_t b : z.members)
                    if (X.leq(b, a) != X.leq(z.to_x0[b], z.to_x0[a])) err = "map does not preserve the order";
        z.iso = err.empty();
        z.detail = err.empty() ? "ok" : err;
        out.push_back(std::move(z));
    }
    return out;
}

inline std::vector<std::size_t> minimal_elements(const IdealPoset& X) {
    std::vector<std::size_t> r;
    for (std::size_t a = 0; a < X.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < X.size() && minimal; ++b)
            if (X.less(b, a)) minimal = false;
        if (minimal) r.push_back(a);
    }
    return r;
}

// Hasse edges where both i and j jump
inline std::vector<std::pair<std::size_t, std::size_t>> exceptional_coverings(const IdealPoset& X) {
    std::vector<std::pair<std::size_t, std::size_t>> r;
    for (auto [lo, up] : X.hasse)
        if (X.classes[lo].i != X.classes[up].i && X.classes[lo].j != X.classes[up].j) r.emplace_back(lo, up);
    return r;
}

struct Counts {
    int m = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;  // (m+1) s / 2
    std::size_t enumerated = 0;
    std::vector<std::size_t> x_sizes;
    std::vector<std::size_t> y_sizes;
};

inline Counts counts(const IdealPoset& X) {
    Counts c;
    c.m = X.m;
    c.s = involution_count(X.m);
    c.t = t_formula(X.m);
    c.enumerated = X.size();
    for (int i = 0; i < X.m; ++i) {
        c.x_sizes.push_back(stratum_X(X, i).size());
        c.y_sizes.push_back(stratum_Y(X, i).size());
    }
    return c;
}

// coefficients of exp(c1 x + c2 x^2) up to x^N, from (n+1) f_{n+1} = c1 f_n + 2 c2 f_{n-1}
inline std::vector<Rational> exp_quadratic_series(Rational c1, Rational c2, int N) {
    std::vector<Rational> f(N + 1, Rational(0));
    f[0] = 1;
    for (int n = 0; n < N; ++n) {
        Rational v = c1 * f[n];
        if (n >= 1) v += Rational(2) * c2 * f[n - 1];
        f[n + 1] = v / Rational(n + 1);
    }
    return f;
}

// (a0 + a1 x + a2 x^2) * f, truncated
inline std::vector<Rational> times_quadratic(const std::vector<Rational>& f, Rational a0, Rational a1, Rational a2) {
    std::vector<Rational> g(f.size(), Rational(0));
    for (std::size_t n = 0; n < f.size(); ++n) {
        g[n] += a0 * f[n];
        if (n >= 1) g[n] += a1 * f[n - 1];
        if (n >= 2) g[n] += a2 * f[n - 2];
    }
    return g;
}

inline std::vector<Rational> egf(const std::vector<Rational>& a) {
    std::vector<Rational> f;
    Rational fact = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n) fact *= Rational(static_cast<long long>(n));
        f.push_back(a[n] / fact);
    }
    return f;
}

inline std::vector<Rational> s_sequence(int N) {
    std::vector<Rational> s;
    for (int m = 0; m <= N; ++m) s.emplace_back(involution_count(m));
    return s;
}

// (m+1) s_m / 2 for every m, including t_0 = 1/2
inline std::vector<Rational> t_sequence(int N) {
    std::vector<Rational> t;
    for (int m = 0; m <= N; ++m) t.push_back(Rational(m + 1) * Rational(involution_count(m)) / Rational(2));
    return t;
}

enum class DotClusters { none, x, y };

inline std::string to_dot(const IdealPoset& X, DotClusters clusters = DotClusters::none, const std::string& name = "X") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    auto node = [&](std::size_t c) {
        std::string label;
        for (auto& w : X.classes[c].members) label += (label.empty() ? "" : " = ") + w.compact();
        os << "  c" << c << " [label=\"" << label << "\"];\n";
    };
    if (clusters == DotClusters::none) {
        for (std::size_t c = 0; c < X.size(); ++c) node(c);
    } else {
        std::map<int, std::vector<std::size_t>> groups;
        for (std::size_t c = 0; c < X.size(); ++c)
            groups[clusters == DotClusters::x ? X.classes[c].i : X.classes[c].j].push_back(c);
        const char* tag = clusters == DotClusters::x ? "X" : "Y";
        for (auto& [g, cs] : groups) {
            os << "  subgraph cluster_" << tag << g << " {\n  label=\"" << tag << "_" << g << "\";\n";
            for (std::size_t c : cs) node(c);
            os << "  }\n";
        }
    }
    auto edges = X.hasse;
    std::sort(edges.begin(), edges.end());
    for (auto [lo, up] : edges) os << "  c" << lo << " -> c" << up << ";\n";
    os << "}\n";
    return os.str();
}

// the drawn part of the gl(2|2) component through the augmentation ideal
inline std::vector<SuperWeight> gl22_diagram_weights() {
    std::vector<SuperWeight> w;
    for (const char* s : {"1,0|0,1", "2,1|1,2", "1,0|1,0", "0,1|0,1", "1,1|1,1", "2,1|2,1", "1,2|1,2", "2,2|2,2",
                          "0,1|1,0", "1,2|2,1"})
        w.push_back(parse_weight(s));
    return w;
}

// (k,k-1|k-1,k) contains (k+1,k|k+1,k), which lies in the orbit below (k+1,k|k,k+1)
inline bool gl22_chain_link(int k, const KLOptions& opt = {}) {
    SuperWeight top({k, k - 1}, {k - 1, k});
    SuperWeight next({k + 1, k}, {k, k + 1});
    SuperWeight link({k + 1, k}, {k + 1, k});
    return inclusion(top, link, opt) == Decision::yes && inclusion(next, link, opt) == Decision::yes &&
           !equal_ideal(top, next);
}

}  // namespace primspec
