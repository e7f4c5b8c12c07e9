#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "weights.hpp"

namespace primspec {

struct TensorBounds {
    int max_factors = 5;
    int max_interval = 8;
};

// V^{(x)m} (x) W^{(x)n} over the labels of a finite interval, quantum group U_q(gl_I).
//   K_i v_a = q^{[a=i]-[a=i+1]} v_a,   K_i w_a = q^{[a=i+1]-[a=i]} w_a
//   F_i v_i = v_{i+1},  E_i v_{i+1} = v_i,  F_i w_{i+1} = w_i,  E_i w_i = w_{i+1}
//   Delta(E) = E (x) 1 + K (x) E,   Delta(F) = F (x) K^{-1} + 1 (x) F
class TensorSpace {
public:
    using Key = std::uint64_t;  // 4 bits per tensor factor, label - lo
    using Vec = std::map<Key, Laurent>;

    TensorSpace(int m, int n, int lo, int hi, TensorBounds b = {}) : m_(m), n_(n), lo_(lo), hi_(hi) {
        if (m < 1 || n < 0) throw PreconditionError("TensorSpace: need m >= 1, n >= 0");
        if (hi < lo) throw PreconditionError("TensorSpace: empty interval");
        if (m + n > b.max_factors)
            throw BoundError("TensorSpace: m+n=" + std::to_string(m + n) + " exceeds the configured bound " +
                             std::to_string(b.max_factors));
        if (hi - lo + 1 > b.max_interval)
            throw BoundError("TensorSpace: interval length " + std::to_string(hi - lo + 1) +
                             " exceeds the configured bound " + std::to_string(b.max_interval));
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    static int get(Key k, int j) { return static_cast<int>((k >> (4 * j)) & 0xF); }
    static Key put(Key k, int j, int v) {
        return (k & ~(Key(0xF) << (4 * j))) | (Key(static_cast<unsigned>(v)) << (4 * j));
    }

    Key key(const SuperWeight& a) const {
        Key k = 0;
        for (int j = 0; j < a.size(); ++j) {
            int x = a.label(j + 1);
            if (x < lo_ || x > hi_) throw PreconditionError("label of " + a.str() + " outside the interval");
            k = put(k, j, x - lo_);
        }
        return k;
    }
    SuperWeight weight(Key k) const {
        SuperWeight a;
        for (int j = 0; j < m_; ++j) a.left.push_back(get(k, j) + lo_);
        for (int j = m_; j < m_ + n_; ++j) a.right.push_back(get(k, j) + lo_);
        return a;
    }

    // F_i on the first len factors
    Vec F(int i, const Vec& v, int len) const { return apply(i, v, len, false); }
    Vec E(int i, const Vec& v, int len) const { return apply(i, v, len, true); }

    // bar involution of a basis monomial on its first len factors
    const Vec& psi(Key k, int len) const {
        Key mask = len >= 16 ? ~Key(0) : ((Key(1) << (4 * len)) - 1);
        Key kk = k & mask;
        auto it = memo_.find({len, kk});
        if (it != memo_.end()) return it->second;
        Vec out;
        if (len == 1) {
            out[kk] = Laurent(1);
        } else {
            Key prefix = kk & ((Key(1) << (4 * (len - 1))) - 1);
            Vec y = psi(prefix, len - 1);
            int b = get(kk, len - 1) + lo_;
            auto attach = [&](const Vec& u, int label, const Laurent& c) {
                for (auto& [pk, pc] : u) {
                    Laurent t = pc * c;
                    if (t.is_zero()) continue;
                    out[put(pk, len - 1, label - lo_)] += t;
                }
            };
            attach(y, b, Laurent(1));
            Laurent qq = Laurent::qinv() - Laurent::q();
            if (len <= m_) {
                // sum over a < b of (q^-1 - q) F_{ab}(y) (x) v_a
                for (int a = lo_; a < b; ++a) attach(root_F(a, b, y, len - 1), a, qq);
            } else {
                // sum over c > b of Z_{cb}(y) (x) w_c
                for (int c = b + 1; c <= hi_; ++c) attach(root_Z(c, b, y, len - 1), c, Laurent(1));
            }
            for (auto it2 = out.begin(); it2 != out.end();) {
                if (it2->second.is_zero())
                    it2 = out.erase(it2);
                else
                    ++it2;
            }
        }
        return memo_.emplace(std::make_pair(len, kk), std::move(out)).first->second;
    }

    Vec psi(const SuperWeight& a) const { return psi(key(a), a.size()); }

    // antilinear extension
    Vec psi_vec(const Vec& v) const {
        Vec out;
        for (auto& [k, c] : v)
            for (auto& [k2, c2] : psi(k, m_ + n_)) out[k2] += c.bar() * c2;
        prune(out);
        return out;
    }

    static void prune(Vec& v) {
        for (auto it = v.begin(); it != v.end();) {
            if (it->second.is_zero())
                it = v.erase(it);
            else
                ++it;
        }
    }

private:
    int m_, n_, lo_, hi_;
    mutable std::map<std::pair<int, Key>, Vec> memo_;

    // exponent of K_i on factor j carrying label x
    int k_exp(int i, int j, int x) const {
        int e = (x == i) - (x == i + 1);
        return j < m_ ? e : -e;
    }

    Vec apply(int i, const Vec& v, int len, bool raise) const {
        Vec out;
        if (i < lo_ || i + 1 > hi_) return out;
        for (auto& [k, c] : v) {
            for (int j = 0; j < len; ++j) {
                int x = get(k, j) + lo_;
                int nx;
                if (j < m_)
                    nx = raise ? (x == i + 1 ? i : INT32_MIN) : (x == i ? i + 1 : INT32_MIN);
                else
                    nx = raise ? (x == i ? i + 1 : INT32_MIN) : (x == i + 1 ? i : INT32_MIN);
                if (nx == INT32_MIN) continue;
                int e = 0;
                if (raise) {
                    for (int l = 0; l < j; ++l) e += k_exp(i, l, get(k, l) + lo_);
                } else {
                    for (int l = j + 1; l < len; ++l) e -= k_exp(i, l, get(k, l) + lo_);
                }
                out[put(k, j, nx - lo_)] += c * Laurent::monomial(e);
            }
        }
        prune(out);
        return out;
    }

    static Vec scale(const Vec& v, const Laurent& c) {
        Vec out;
        for (auto& [k, x] : v) {
            Laurent t = x * c;
            if (!t.is_zero()) out[k] = t;
        }
        return out;
    }
    static Vec sub(const Vec& a, const Vec& b, const Laurent& cb) {
        Vec out = a;
        for (auto& [k, x] : b) out[k] -= x * cb;
        prune(out);
        return out;
    }

    // Z_{b+1,b} = (q^-1 - q) F_b,  Z_{c+1,b} = Z_{cb} F_c - q F_c Z_{cb}
    Vec root_Z(int c, int b, const Vec& y, int len) const {
        if (c == b + 1) return scale(F(b, y, len), Laurent::qinv() - Laurent::q());
        Vec t1 = root_Z(c - 1, b, F(c - 1, y, len), len);
        Vec t2 = F(c - 1, root_Z(c - 1, b, y, len), len);
        return sub(t1, t2, Laurent::q());
    }

    // F_{ab} = F_{a+1,b} F_a - q F_a F_{a+1,b},  F_{b-1,b} = F_{b-1}
    Vec root_F(int a, int b, const Vec& y, int len) const {
        if (a == b - 1) return F(a, y, len);
        Vec t1 = root_F(a + 1, b, F(a, y, len), len);
        Vec t2 = F(a, root_F(a + 1, b, y, len), len);
        return sub(t1, t2, Laurent::q());
    }
};

// Canonical basis b_beta = sum_alpha d_{alpha,beta} v_alpha of one weight space, d in qZ[q] off the diagonal.
class CanonicalBasisTable {
public:
    CanonicalBasisTable(const TensorSpace& space, const CentralCharacter& chi) : space_(&space) {
        int N = space.m() + space.n();
        int L = space.hi() - space.lo() + 1;
        std::int64_t total = 1;
        for (int k = 0; k < N; ++k) total *= L;
        for (std::int64_t r = 0; r < total; ++r) {
            TensorSpace::Key k = 0;
            std::int64_t x = r;
            for (int j = 0; j < N; ++j) {
                k = TensorSpace::put(k, j, static_cast<int>(x % L));
                x /= L;
            }
            SuperWeight w = space.weight(k);
            if (central_character(w) == chi) {
                index_.emplace(k, keys_.size());
                keys_.push_back(k);
                weights_.push_back(w);
            }
        }
        build();
    }

    std::size_t size() const { return keys_.size(); }
    const std::vector<SuperWeight>& weights() const { return weights_; }
    const TensorSpace& space() const { return *space_; }

    std::optional<std::size_t> find(const SuperWeight& w) const {
        if (w.m() != space_->m() || w.n() != space_->n()) return std::nullopt;
        for (int j = 1; j <= w.size(); ++j)
            if (w.label(j) < space_->lo() || w.label(j) > space_->hi()) return std::nullopt;
        auto it = index_.find(space_->key(w));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // coefficient of v_alpha in b_beta
    Laurent d(std::size_t alpha, std::size_t beta) const {
        auto it = d_[beta].find(alpha);
        return it == d_[beta].end() ? Laurent() : it->second;
    }
    Laurent d(const SuperWeight& a, const SuperWeight& b) const { return d(must(a), must(b)); }

    // v_alpha = sum_beta p_{alpha,beta}(-q) b_beta
    Laurent p(std::size_t alpha, std::size_t beta) const {
        auto it = inv_[alpha].find(beta);
        return it == inv_[alpha].end() ? Laurent() : it->second.negate_q();
    }

    const std::map<std::size_t, Laurent>& column(std::size_t beta) const { return d_[beta]; }

    // q-linear coefficients of d in both directions
    std::int64_t mu(std::size_t a, std::size_t b) const {
        if (a == b) return 0;
        return d(a, b).coeff(1) + d(b, a).coeff(1);
    }

private:
    const TensorSpace* space_;
    std::vector<TensorSpace::Key> keys_;
    std::vector<SuperWeight> weights_;
    std::map<TensorSpace::Key, std::size_t> index_;
    std::vector<std::map<std::size_t, Laurent>> d_;    // per column beta
    std::vector<std::map<std::size_t, Laurent>> inv_;  // row alpha of D^{-1} (in the variable q)

    std::size_t must(const SuperWeight& w) const {
        auto i = find(w);
        if (!i) throw PreconditionError("weight " + w.str() + " is not in the canonical-basis table");
        return *i;
    }

    void build() {
        std::size_t n = keys_.size();
        int N = space_->m() + space_->n();
        std::vector<std::map<std::size_t, Laurent>> psi(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (auto& [k, c] : space_->psi(keys_[a], N)) {
                auto it = index_.find(k);
                if (it == index_.end()) throw PreconditionError("bar involution left the weight space");
                psi[a][it->second] = c;
            }
            if (psi[a][a] != Laurent(1)) throw PreconditionError("bar involution is not unitriangular");
        }
        // order from the support of psi: a above everything it reaches
        std::vector<int> state(n, 0);
        std::vector<std::size_t> topo;
        std::function<void(std::size_t)> visit = [&](std::size_t a) {
            state[a] = 1;
            for (auto& [g, c] : psi[a]) {
                if (g == a) continue;
                if (state[g] == 1) throw PreconditionError("bar involution support has a cycle");
                if (state[g] == 0) visit(g);
            }
            state[a] = 2;
            topo.push_back(a);
        };
        for (std::size_t a = 0; a < n; ++a)
            if (state[a] == 0) visit(a);
        std::vector<std::size_t> rank(n);
        for (std::size_t i = 0; i < n; ++i) rank[topo[i]] = i;

        // columns in q^{-1}Z[q^{-1}] first
        std::vector<std::map<std::size_t, Laurent>> b(n);
        for (std::size_t a : topo) {
            std::map<std::size_t, Laurent> resid = psi[a];
            resid.erase(a);
            std::map<std::size_t, Laurent> col;
            col[a] = Laurent(1);
            auto by_rank = [&](std::size_t x, std::size_t y) { return rank[x] > rank[y]; };
            while (!resid.empty()) {
                std::size_t g = std::min_element(resid.begin(), resid.end(), [&](auto& x, auto& y) {
                                    return by_rank(x.first, y.first);
                                })->first;
                Laurent r = resid[g];
                Laurent c = r.negative_part();
                if (r != c - c.bar()) throw PreconditionError("canonical basis: residue is not of the form c - bar(c)");
                for (auto& [x, v] : b[g]) {
                    resid[x] -= r * v;
                    col[x] += c * v;
                }
                for (auto it = resid.begin(); it != resid.end();)
                    it = it->second.is_zero() ? resid.erase(it) : std::next(it);
            }
            for (auto it = col.begin(); it != col.end();)
                it = it->second.is_zero() ? col.erase(it) : std::next(it);
            b[a] = std::move(col);
        }
        d_.assign(n, {});
        for (std::size_t a = 0; a < n; ++a)
            for (auto& [x, v] : b[a]) d_[a][x] = v.bar();

        // inverse of the unitriangular D, rows indexed by alpha
        inv_.assign(n, {});
        std::vector<std::map<std::size_t, Laurent>> invcol(n);  // column a of D^{-1}
        for (std::size_t a : topo) {
            // D x = e_a with x supported below a
            std::map<std::size_t, Laurent> x, rhs;
            rhs[a] = Laurent(1);
            while (!rhs.empty()) {
                std::size_t g = std::min_element(rhs.begin(), rhs.end(), [&](auto& u, auto& v) {
                                    return rank[u.first] > rank[v.first];
                                })->first;
                Laurent c = rhs[g];
                x[g] += c;
                for (auto& [y, v] : d_[g]) rhs[y] -= c * v;
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            }
            for (auto& [g, c] : x)
                if (!c.is_zero()) inv_[g][a] = c;
        }
        // inv_[g][a] is (D^{-1})_{g a}; p_{alpha,beta}(-q) = (D^{-1})_{beta alpha}
        std::vector<std::map<std::size_t, Laurent>> rows(n);
        for (std::size_t g = 0; g < n; ++g)
            for (auto& [a, c] : inv_[g]) rows[a][g] = c;
        inv_ = std::move(rows);
    }
};

// default interval: one extra label on each side
inline std::pair<int, int> default_interval(const std::vector<SuperWeight>& block) {
    if (block.empty()) throw PreconditionError("default_interval: empty block");
    int lo = block[0].min_label(), hi = block[0].max_label();
    for (auto& w : block) {
        lo = std::min(lo, w.min_label());
        hi = std::max(hi, w.max_label());
    }
    return {lo - 1, hi + 1};
}

// all weights with labels in [lo, hi] sharing chi with the seed
inline std::vector<SuperWeight> block_window(const SuperWeight& seed, int lo, int hi) {
    std::vector<SuperWeight> out;
    int N = seed.size(), L = hi - lo + 1;
    std::vector<int> lab(N, lo);
    CentralCharacter chi = central_character(seed);
    while (true) {
        SuperWeight w(std::vector<int>(lab.begin(), lab.begin() + seed.m()),
                      std::vector<int>(lab.begin() + seed.m(), lab.end()));
        if (central_character(w) == chi) out.push_back(w);
        int j = 0;
        while (j < N && lab[j] == hi) lab[j++] = lo;
        if (j == N) break;
        ++lab[j];
    }
    (void)L;
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t mu_super(const SuperWeight& a, const SuperWeight& b, const CanonicalBasisTable& t) {
    auto ia = t.find(a), ib = t.find(b);
    if (!ia || !ib) throw PreconditionError("mu_super: weight outside the table");
    return t.mu(*ia, *ib);
}

// s alpha < alpha for the simple reflection at position p (left) or m+j (right)
inline bool reflection_lowers(const SuperWeight& a, int pos) {
    if (pos < a.m()) return a.label(pos) > a.label(pos + 1);
    return a.label(pos) < a.label(pos + 1);
}

// beta below alpha under the closure of (s alpha < alpha, s beta >= beta, Ext^1 != 0) inside the block
class SuperKLOrder {
public:
    SuperKLOrder(std::vector<SuperWeight> block, const CanonicalBasisTable& t) : block_(std::move(block)) {
        std::size_t n = block_.size();
        std::vector<std::size_t> tid(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto k = t.find(block_[i]);
            if (!k) throw PreconditionError("SuperKLOrder: " + block_[i].str() + " outside the table");
            tid[i] = *k;
        }
        std::vector<std::vector<std::size_t>> gen(n);
        int m = block_.empty() ? 0 : block_[0].m();
        int N = block_.empty() ? 0 : block_[0].size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || t.mu(tid[a], tid[b]) == 0) continue;
                for (int pos = 1; pos < N; ++pos) {
                    if (pos == m) continue;
                    if (reflection_lowers(block_[a], pos) && !reflection_lowers(block_[b], pos)) {
                        gen[a].push_back(b);
                        break;
                    }
                }
            }
        below_.assign(n, std::vector<char>(n, 0));
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::size_t> st{a};
            below_[a][a] = 1;
            while (!st.empty()) {
                std::size_t c = st.back();
                st.pop_back();
                for (std::size_t b : gen[c])
                    if (!below_[a][b]) {
                        below_[a][b] = 1;
                        st.push_back(b);
                    }
            }
        }
        for (std::size_t i = 0; i < n; ++i) pos_.emplace(block_[i], i);
    }

    const std::vector<SuperWeight>& block() const { return block_; }
    bool leq(std::size_t b, std::size_t a) const { return below_[a][b]; }
    // beta below alpha
    bool leq(const SuperWeight& b, const SuperWeight& a) const { return below_[pos_.at(a)][pos_.at(b)]; }

private:
    std::vector<SuperWeight> block_;
    std::vector<std::vector<char>> below_;
    std::map<SuperWeight, std::size_t> pos_;
};

inline SuperKLOrder kl_left_order(const std::vector<SuperWeight>& block, const CanonicalBasisTable& t) {
    return SuperKLOrder(block, t);
}

}  // namespace primspec
