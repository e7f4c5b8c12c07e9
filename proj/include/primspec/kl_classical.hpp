#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "tableaux.hpp"
#include "weights.hpp"

namespace primspec {

// ---------------------------------------------------------------------------
// permutation indexing (lexicographic rank)

inline std::int64_t factorial(int m) {
    std::int64_t f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

inline std::uint32_t perm_rank(const Permutation& w) {
    int m = w.size();
    std::uint32_t r = 0;
    for (int a = 0; a < m; ++a) {
        int smaller = 0;
        for (int b = a + 1; b < m; ++b) smaller += w.images[b] < w.images[a];
        r = r * static_cast<std::uint32_t>(m - a) + static_cast<std::uint32_t>(smaller);
    }
    return r;
}

inline Permutation perm_unrank(std::uint32_t r, int m) {
    std::vector<int> digits(m);
    for (int a = m - 1; a >= 0; --a) {
        digits[a] = static_cast<int>(r % static_cast<std::uint32_t>(m - a));
        r /= static_cast<std::uint32_t>(m - a);
    }
    std::vector<int> pool(m);
    for (int k = 0; k < m; ++k) pool[k] = k + 1;
    std::vector<int> out;
    for (int a = 0; a < m; ++a) {
        out.push_back(pool[digits[a]]);
        pool.erase(pool.begin() + digits[a]);
    }
    return Permutation(std::move(out));
}

// x <= y in Bruhat order: |{a<=i : x(a)>=k}| <= |{a<=i : y(a)>=k}| for all i, k
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
    int m = x.size();
    if (y.size() != m) throw PreconditionError("bruhat_leq: permutations of different size");
    for (int k = 1; k <= m; ++k) {
        int cx = 0, cy = 0;
        for (int i = 0; i < m; ++i) {
            cx += x.images[i] >= k;
            cy += y.images[i] >= k;
            if (cx > cy) return false;
        }
    }
    return true;
}

struct KLOptions {
    int max_rank = 7;
    std::optional<std::filesystem::path> cache_dir;
};

// PRIMSPEC_CACHE takes precedence over an explicit directory
inline std::optional<std::filesystem::path> resolve_cache_dir(std::optional<std::filesystem::path> flag) {
    if (const char* env = std::getenv("PRIMSPEC_CACHE"); env && *env) return std::filesystem::path(env);
    return flag;
}

// ---------------------------------------------------------------------------
// KL polynomials of S_m

class KLTable {
public:
    static constexpr int cache_version = 1;
    using Poly = std::vector<std::int64_t>;  // coefficients of q^0, q^1, ...

    int m() const { return m_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Permutation>& elements() const { return elems_; }
    const Permutation& element(std::size_t i) const { return elems_[i]; }
    std::size_t index(const Permutation& w) const { return perm_rank(w); }
    int length(std::size_t i) const { return len_[i]; }

    // x <= y in Bruhat order, read off the table
    bool leq(std::size_t x, std::size_t y) const { return cell(x, y) != 0; }

    Laurent P(std::size_t x, std::size_t y) const {
        const Poly& p = pool_[cell(x, y)];
        Laurent r;
        for (std::size_t e = 0; e < p.size(); ++e) r.add_term(static_cast<int>(e), p[e]);
        return r;
    }
    Laurent P(const Permutation& x, const Permutation& y) const { return P(index(x), index(y)); }

    // symmetric mu; 0 unless comparable with odd length difference
    std::int64_t mu(std::size_t x, std::size_t y) const {
        if (x == y) return 0;
        if (len_[x] > len_[y]) std::swap(x, y);
        int d = len_[y] - len_[x];
        if (d % 2 == 0 || !leq(x, y)) return 0;
        const Poly& p = pool_[cell(x, y)];
        std::size_t e = static_cast<std::size_t>((d - 1) / 2);
        return e < p.size() ? p[e] : 0;
    }
    std::int64_t mu(const Permutation& x, const Permutation& y) const { return mu(index(x), index(y)); }

    // all z with mu(w, z) != 0, either direction
    const std::vector<std::uint32_t>& mu_neighbours(std::size_t w) const { return nbrs_[w]; }

    std::size_t distinct_polynomials() const { return pool_.size(); }

    static KLTable compute(int m);
    void save(const std::filesystem::path& file) const;
    static KLTable load(const std::filesystem::path& file, int m);
    static std::filesystem::path cache_file(const std::filesystem::path& dir, int m) {
        return dir / ("kl_S" + std::to_string(m) + ".txt");
    }

private:
    int m_ = 0;
    std::vector<Permutation> elems_;
    std::vector<int> len_;
    std::vector<std::uint16_t> cells_;  // size()^2, row x, column y
    std::vector<Poly> pool_;            // 0 -> zero, 1 -> one
    std::map<Poly, std::uint16_t> ids_;
    std::vector<std::vector<std::uint32_t>> nbrs_;

    std::uint16_t cell(std::size_t x, std::size_t y) const { return cells_[x * elems_.size() + y]; }
    std::uint16_t& cell(std::size_t x, std::size_t y) { return cells_[x * elems_.size() + y]; }

    void init(int m) {
        m_ = m;
        std::size_t n = static_cast<std::size_t>(factorial(m));
        elems_.clear();
        for (std::size_t r = 0; r < n; ++r) elems_.push_back(perm_unrank(static_cast<std::uint32_t>(r), m));
        len_.resize(n);
        for (std::size_t r = 0; r < n; ++r) len_[r] = elems_[r].length();
        cells_.assign(n * n, 0);
        pool_.clear();
        ids_.clear();
        intern(Poly{});
        intern(Poly{1});
    }

    std::uint16_t intern(Poly p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        auto it = ids_.find(p);
        if (it != ids_.end()) return it->second;
        if (pool_.size() >= 0xFFFF) throw BoundError("KLTable: more than 65535 distinct polynomials");
        auto id = static_cast<std::uint16_t>(pool_.size());
        pool_.push_back(p);
        ids_.emplace(std::move(p), id);
        return id;
    }

    void build_neighbours() {
        std::size_t n = size();
        nbrs_.assign(n, {});
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x)
                if (len_[x] < len_[y] && mu(x, y) != 0) {
                    nbrs_[x].push_back(static_cast<std::uint32_t>(y));
                    nbrs_[y].push_back(static_cast<std::uint32_t>(x));
                }
        for (auto& v : nbrs_) std::sort(v.begin(), v.end());
    }
};

namespace detail {

// s_i x: swap the values i and i+1
inline Permutation left_mult(int i, const Permutation& x) {
    Permutation r = x;
    for (int& v : r.images) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return r;
}

// s_i x < x
inline bool left_descent(int i, const Permutation& x) {
    for (int v : x.images) {
        if (v == i) return false;
        if (v == i + 1) return true;
    }
    return false;
}

}  // namespace detail

inline KLTable KLTable::compute(int m) {
    if (m < 1) throw PreconditionError("kl_table: m must be >= 1");
    KLTable t;
    t.init(m);
    std::size_t n = t.size();

    std::vector<std::vector<std::uint32_t>> lmul(m, std::vector<std::uint32_t>(n));
    std::vector<std::vector<char>> ldes(m, std::vector<char>(n));
    for (int s = 1; s < m; ++s)
        for (std::size_t x = 0; x < n; ++x) {
            lmul[s][x] = perm_rank(detail::left_mult(s, t.elems_[x]));
            ldes[s][x] = detail::left_descent(s, t.elems_[x]);
        }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t.len_[a] < t.len_[b]; });

    // mu(z, v) for z < v, collected as each column is finished
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> below_mu(n);

    std::size_t e = order[0];
    t.cell(e, e) = 1;

    auto add_shifted = [](Poly& acc, const Poly& p, int shift, std::int64_t c) {
        if (p.empty() || c == 0) return;
        if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
        for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += c * p[k];
    };

    for (std::size_t oi = 1; oi < n; ++oi) {
        std::size_t w = order[oi];
        int s = 1;
        while (!ldes[s][w]) ++s;
        std::size_t v = lmul[s][w];
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t sx = lmul[s][x];
            std::uint16_t pv_x = t.cell(x, v), pv_sx = t.cell(sx, v);
            if (pv_x == 0 && pv_sx == 0) continue;
            bool c = ldes[s][x];
            Poly acc;
            add_shifted(acc, t.pool_[pv_sx], c ? 0 : 1, 1);
            add_shifted(acc, t.pool_[pv_x], c ? 1 : 0, 1);
            for (auto& [z, mz] : below_mu[v]) {
                if (!ldes[s][z]) continue;
                std::uint16_t pz = t.cell(x, z);
                if (pz == 0) continue;
                add_shifted(acc, t.pool_[pz], (t.len_[w] - t.len_[z]) / 2, -mz);
            }
            t.cell(x, w) = t.intern(std::move(acc));
        }
        for (std::size_t z = 0; z < n; ++z) {
            int d = t.len_[w] - t.len_[z];
            if (d <= 0 || d % 2 == 0) continue;
            std::uint16_t pz = t.cell(z, w);
            if (pz == 0) continue;
            const Poly& p = t.pool_[pz];
            std::size_t k = static_cast<std::size_t>((d - 1) / 2);
            if (k < p.size() && p[k] != 0) below_mu[w].emplace_back(static_cast<std::uint32_t>(z), p[k]);
        }
    }
    t.build_neighbours();
    return t;
}

// Text format. Pairs with P = 0 or P = 1 are implied by the Bruhat order and omitted.
//   primspec-kl-cache <version>
//   m <m>
//   entries <count>
//   <x> <y> <e>:<c>,<e>:<c>,...
inline void KLTable::save(const std::filesystem::path& file) const {
    std::vector<std::string> lines;
    std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::uint16_t id = cell(x, y);
            if (id <= 1) continue;
            std::string line = elems_[x].str() + " " + elems_[y].str() + " ";
            const Poly& p = pool_[id];
            bool first = true;
            for (std::size_t e = 0; e < p.size(); ++e) {
                if (p[e] == 0) continue;
                if (!first) line += ',';
                first = false;
                line += std::to_string(e) + ":" + std::to_string(p[e]);
            }
            lines.push_back(std::move(line));
        }
    std::filesystem::create_directories(file.parent_path());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw CacheError("cannot write KL cache " + tmp.string());
        os << "primspec-kl-cache " << cache_version << "\n";
        os << "m " << m_ << "\n";
        os << "entries " << lines.size() << "\n";
        for (auto& l : lines) os << l << "\n";
        if (!os) throw CacheError("short write on KL cache " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

inline KLTable KLTable::load(const std::filesystem::path& file, int m) {
    std::ifstream is(file);
    if (!is) throw CacheError("cannot open KL cache " + file.string());
    std::string tag;
    int version = 0, mm = 0;
    std::size_t count = 0;
    std::string kw1, kw2;
    if (!(is >> tag >> version) || tag != "primspec-kl-cache")
        throw CacheError("not a KL cache file: " + file.string());
    if (version != cache_version)
        throw CacheError("KL cache " + file.string() + " has version " + std::to_string(version) + ", expected " +
                         std::to_string(cache_version) + "; remove it to rebuild");
    if (!(is >> kw1 >> mm >> kw2 >> count) || kw1 != "m" || kw2 != "entries")
        throw CacheError("malformed KL cache header in " + file.string());
    if (mm != m) throw CacheError("KL cache " + file.string() + " is for m=" + std::to_string(mm));

    KLTable t;
    t.init(m);
    std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (bruhat_leq(t.elems_[x], t.elems_[y])) t.cell(x, y) = 1;

    auto parse_perm = [&](const std::string& s) {
        std::vector<int> v;
        for (char c : s) {
            if (c < '1' || c > '9') throw CacheError("bad permutation \"" + s + "\" in KL cache");
            v.push_back(c - '0');
        }
        Permutation p(std::move(v));
        if (p.size() != m || !p.is_bijection()) throw CacheError("bad permutation \"" + s + "\" in KL cache");
        return p;
    };
    for (std::size_t k = 0; k < count; ++k) {
        std::string xs, ys, ps;
        if (!(is >> xs >> ys >> ps)) throw CacheError("truncated KL cache " + file.string());
        std::size_t x = perm_rank(parse_perm(xs)), y = perm_rank(parse_perm(ys));
        Poly p;
        std::stringstream ss(ps);
        std::string term;
        while (std::getline(ss, term, ',')) {
            auto colon = term.find(':');
            if (colon == std::string::npos) throw CacheError("bad term \"" + term + "\" in KL cache");
            std::size_t e = std::stoul(term.substr(0, colon));
            std::int64_t c = std::stoll(term.substr(colon + 1));
            if (p.size() <= e) p.resize(e + 1, 0);
            p[e] = c;
        }
        if (t.cell(x, y) == 0) throw CacheError("KL cache entry for a non-Bruhat pair " + xs + " " + ys);
        t.cell(x, y) = t.intern(std::move(p));
    }
    t.build_neighbours();
    return t;
}

namespace detail {

struct KLRegistry {
    std::mutex mu;
    std::map<int, std::unique_ptr<KLTable>> tables;
};

inline KLRegistry& kl_registry() {
    static KLRegistry r;
    return r;
}

}  // namespace detail

// Shared table for S_m; built once per process, loaded from / stored to the cache directory if one is set.
inline const KLTable& kl_table(int m, const KLOptions& opt = {}) {
    if (m > opt.max_rank)
        throw BoundError("kl_table: rank m=" + std::to_string(m) + " exceeds the configured bound " +
                         std::to_string(opt.max_rank));
    auto& reg = detail::kl_registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.tables.find(m);
    if (it != reg.tables.end()) return *it->second;
    auto dir = resolve_cache_dir(opt.cache_dir);
    std::unique_ptr<KLTable> t;
    if (dir) {
        auto file = KLTable::cache_file(*dir, m);
        if (std::filesystem::exists(file)) t = std::make_unique<KLTable>(KLTable::load(file, m));
    }
    if (!t) {
        t = std::make_unique<KLTable>(KLTable::compute(m));
        if (dir) t->save(KLTable::cache_file(*dir, m));
    }
    return *reg.tables.emplace(m, std::move(t)).first->second;
}

inline std::int64_t mu(const Permutation& x, const Permutation& y, const KLTable& t) { return t.mu(x, y); }

// ---------------------------------------------------------------------------
// order on primitive ideals of gl(m) in the regular orbit of kappa = (m-1,...,0)

// Elements are indexed by the Weyl element w with weight w.kappa, i.e. label m - w^{-1}(p) at position p.
class ClassicalOrder {
public:
    explicit ClassicalOrder(const KLTable& t) : t_(&t) {
        std::size_t n = t.size();
        int m = t.m();
        words_ = (n + 63) / 64;
        below_.assign(n, std::vector<std::uint64_t>(words_, 0));
        // labels of each weight
        std::vector<std::vector<int>> lab(n, std::vector<int>(m));
        for (std::size_t w = 0; w < n; ++w) {
            Permutation wi = t.element(w).inverse();
            for (int p = 1; p <= m; ++p) lab[w][p - 1] = m - wi(p);
        }
        // generator edges a -> b meaning b below a
        std::vector<std::vector<std::uint32_t>> gen(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::uint32_t b : t.mu_neighbours(a)) {
                for (int p = 1; p < m; ++p)
                    if (lab[a][p - 1] > lab[a][p] && lab[b][p - 1] < lab[b][p]) {
                        gen[a].push_back(b);
                        break;
                    }
            }
        std::vector<std::uint32_t> stack;
        for (std::size_t a = 0; a < n; ++a) {
            auto& bits = below_[a];
            set(bits, a);
            stack.assign(1, static_cast<std::uint32_t>(a));
            while (!stack.empty()) {
                std::uint32_t c = stack.back();
                stack.pop_back();
                for (std::uint32_t b : gen[c])
                    if (!test(bits, b)) {
                        set(bits, b);
                        stack.push_back(b);
                    }
            }
        }
        generators_ = std::move(gen);
    }

    const KLTable& table() const { return *t_; }
    int m() const { return t_->m(); }
    std::size_t size() const { return t_->size(); }

    // I(b.kappa) contained in I(a.kappa)
    bool leq(std::size_t b, std::size_t a) const { return test(below_[a], b); }
    const std::vector<std::uint32_t>& generators(std::size_t a) const { return generators_[a]; }

private:
    const KLTable* t_;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> below_;
    std::vector<std::vector<std::uint32_t>> generators_;

    static void set(std::vector<std::uint64_t>& v, std::size_t i) { v[i / 64] |= std::uint64_t(1) << (i % 64); }
    static bool test(const std::vector<std::uint64_t>& v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1u; }
};

namespace detail {

struct OrderRegistry {
    std::mutex mu;
    std::map<int, std::unique_ptr<ClassicalOrder>> orders;
};

inline OrderRegistry& order_registry() {
    static OrderRegistry r;
    return r;
}

}  // namespace detail

inline const ClassicalOrder& left_preorder(int m, const KLOptions& opt = {}) {
    const KLTable& t = kl_table(m, opt);
    auto& reg = detail::order_registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.orders.find(m);
    if (it != reg.orders.end()) return *it->second;
    return *reg.orders.emplace(m, std::make_unique<ClassicalOrder>(t)).first->second;
}

inline bool same_multiset(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Ann L(delta) inside Ann L(gamma) for one gl factor; false across orbits
inline bool classical_inclusion(const std::vector<int>& delta, const std::vector<int>& gamma,
                                Orientation o = Orientation::left, const KLOptions& opt = {}) {
    if (!same_multiset(delta, gamma)) return false;
    int m = static_cast<int>(delta.size());
    if (m <= 1) return true;
    const ClassicalOrder& ord = left_preorder(m, opt);
    const KLTable& t = ord.table();
    std::size_t b = t.index(weyl_element(delta, o));
    std::size_t a = t.index(weyl_element(gamma, o));
    return ord.leq(b, a);
}

inline StandardTableau a_tableau(const std::vector<int>& gamma, Orientation o = Orientation::left) {
    return robinson_schensted(weyl_element(gamma, o)).A;
}

inline bool classical_equal(const std::vector<int>& delta, const std::vector<int>& gamma,
                            Orientation o = Orientation::left) {
    if (!same_multiset(delta, gamma)) return false;
    return a_tableau(delta, o) == a_tableau(gamma, o);
}

// gl(m) + gl(n): conjunction over the two factors, the right one read increasing
inline bool classical_inclusion(const SuperWeight& delta, const SuperWeight& gamma, const KLOptions& opt = {}) {
    if (delta.m() != gamma.m() || delta.n() != gamma.n()) return false;
    return classical_inclusion(delta.left, gamma.left, Orientation::left, opt) &&
           classical_inclusion(delta.right, gamma.right, Orientation::right, opt);
}

inline bool classical_equal(const SuperWeight& delta, const SuperWeight& gamma) {
    if (delta.m() != gamma.m() || delta.n() != gamma.n()) return false;
    return classical_equal(delta.left, gamma.left, Orientation::left) &&
           classical_equal(delta.right, gamma.right, Orientation::right);
}

}  // namespace primspec
