#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace primspec {

// One-line notation, images 1..m.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> v) : images(std::move(v)) {}
    static Permutation identity(int m) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation longest(int m) {
        std::vector<int> v(m);
        for (int k = 0; k < m; ++k) v[k] = m - k;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int k) const { return images[k - 1]; }

    bool is_bijection() const {
        std::vector<int> v = images;
        std::sort(v.begin(), v.end());
        for (int k = 0; k < size(); ++k)
            if (v[k] != k + 1) return false;
        return true;
    }
    Permutation inverse() const {
        std::vector<int> v(size());
        for (int k = 0; k < size(); ++k) v[images[k] - 1] = k + 1;
        return Permutation(std::move(v));
    }
    // (this * o)(k) = this(o(k))
    Permutation operator*(const Permutation& o) const {
        std::vector<int> v(size());
        for (int k = 0; k < size(); ++k) v[k] = images[o.images[k] - 1];
        return Permutation(std::move(v));
    }
    int length() const {
        int l = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b) l += images[a] > images[b];
        return l;
    }
    std::string str() const {
        std::string s;
        for (int x : images) s += std::to_string(x) + (size() > 9 ? " " : "");
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline std::vector<Permutation> all_permutations(int m) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(m);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const {
        std::vector<int> s;
        for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }
    int size() const {
        int c = 0;
        for (auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }
    // 0-based row index of entry v, -1 if absent
    int row_of(int v) const {
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (int x : rows[r])
                if (x == v) return r;
        return -1;
    }
    bool is_standard() const {
        int m = size();
        std::vector<int> seen;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) return false;
            if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
                if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
                seen.push_back(rows[r][c]);
            }
        }
        std::sort(seen.begin(), seen.end());
        for (int k = 0; k < m; ++k)
            if (seen[k] != k + 1) return false;
        return true;
    }
    std::string str() const {
        std::string s;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += '/';
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (c) s += ',';
                s += std::to_string(rows[r][c]);
            }
        }
        return s;
    }
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

struct RSPair {
    StandardTableau A;  // recording tableau
    StandardTableau B;  // insertion tableau
};

// Row insertion of v(1), v(2), ...; A records the growth, B holds the inserted values.
// With this labelling A(u) = A(v) classifies the ideals I_{u.mu}, and B(w) carries tau(w^{-1}).
inline RSPair robinson_schensted(const Permutation& v) {
    RSPair out;
    auto& P = out.B.rows;
    auto& Q = out.A.rows;
    for (int k = 1; k <= v.size(); ++k) {
        int x = v(k);
        std::size_t r = 0;
        while (true) {
            if (r == P.size()) {
                P.push_back({x});
                Q.push_back({k});
                break;
            }
            auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
            if (it == P[r].end()) {
                P[r].push_back(x);
                Q[r].push_back(k);
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    return out;
}

// descent positions {p : w(p) > w(p+1)}
inline std::set<int> tau(const Permutation& w) {
    std::set<int> s;
    for (int p = 1; p < w.size(); ++p)
        if (w(p) > w(p + 1)) s.insert(p);
    return s;
}

// gamma_i of the augmentation-poset chapter sits at position m - i
inline int gamma_position(int m, int i) { return m - i; }

// {p : p+1 lies in a strictly lower row than p}
inline std::set<int> tableau_descents(const StandardTableau& t) {
    std::set<int> s;
    for (int p = 1; p < t.size(); ++p)
        if (t.row_of(p + 1) > t.row_of(p)) s.insert(p);
    return s;
}

enum class Orientation { left, right };

// Longest w with w^{-1}.gamma dominant (gamma = w.kappa with kappa sorted dominant).
// Dominant means weakly decreasing for the left factor and weakly increasing for the right one.
inline Permutation weyl_element(const std::vector<int>& gamma, Orientation o = Orientation::left) {
    int m = static_cast<int>(gamma.size());
    std::vector<int> g = gamma;
    if (o == Orientation::right)
        for (int& x : g) x = -x;
    std::vector<int> pos(m);
    std::iota(pos.begin(), pos.end(), 1);
    // larger label first; among equal labels the later position first (maximises inversions)
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
        if (g[a - 1] != g[b - 1]) return g[a - 1] > g[b - 1];
        return a > b;
    });
    return Permutation(pos);  // w(k) = position of the k-th largest label
}

inline std::set<int> tau_of_weight(const std::vector<int>& gamma, Orientation o = Orientation::left) {
    return tau(weyl_element(gamma, o));
}

// regular label tuple with the same longest Weyl element, kappa = (m-1,...,0)
inline std::vector<int> regularize(const std::vector<int>& gamma, Orientation o = Orientation::left) {
    Permutation w = weyl_element(gamma, o);
    int m = w.size();
    std::vector<int> out(m);
    for (int k = 1; k <= m; ++k) out[w(k) - 1] = m - k;
    return out;
}

inline std::int64_t involution_count(int m) {
    if (m < 0) throw PreconditionError("involution_count: m must be >= 0");
    std::int64_t a = 1, b = 1;  // s_0, s_1
    if (m <= 1) return 1;
    for (int k = 2; k <= m; ++k) {
        std::int64_t c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

inline std::vector<StandardTableau> standard_tableaux(int m) {
    std::set<StandardTableau> s;
    for (auto& w : all_permutations(m)) s.insert(robinson_schensted(w).A);
    return {s.begin(), s.end()};
}

}  // namespace primspec
