#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "primspec/aug_poset.hpp"
#include "primspec/brundan_kl.hpp"
#include "primspec/crystal.hpp"
#include "primspec/kl_classical.hpp"
#include "primspec/super_inclusion.hpp"

using json = nlohmann::ordered_json;
using namespace primspec;

namespace {

constexpr int exit_decided = 0;
constexpr int exit_error = 1;
constexpr int exit_unsupported = 2;

struct Config {
    std::string cache_dir;
    int kl_bound = 7;
    int tensor_bound = 5;
    int interval_bound = 8;
    std::string format = "json";
};

KLOptions kl_options(const Config& c) {
    KLOptions o;
    o.max_rank = c.kl_bound;
    if (!c.cache_dir.empty()) o.cache_dir = c.cache_dir;
    o.cache_dir = resolve_cache_dir(o.cache_dir);
    return o;
}

json weight_json(const SuperWeight& w) { return w.str(); }

// "a..b" or a single integer
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("malformed range '" + s + "', expected a..b");
    }
}

// "lo,hi" or "lo..hi"
std::pair<int, int> parse_interval(const std::string& s) {
    std::string t = s;
    if (auto c = t.find(','); c != std::string::npos) t.replace(c, 1, "..");
    auto r = parse_range(t);
    if (r.second < r.first) throw ParseError("empty interval '" + s + "'");
    return r;
}

// side 'a' of a trace is the container
json trace_json(const ReductionTrace& t, bool container_is_beta) {
    json steps = json::array();
    for (auto& s : t.steps)
        steps.push_back({{"op", s.op},
                         {"side", (s.side == 'a') == container_is_beta ? "beta" : "alpha"},
                         {"before", s.before.str()},
                         {"after", s.after.str()}});
    return steps;
}

int cmd_inclusion(const std::vector<std::string>& ws, bool with_trace, const Config& cfg) {
    if (ws.size() != 2) throw ParseError("inclusion expects exactly two weights");
    SuperWeight a = parse_weight(ws[0]), b = parse_weight(ws[1]);
    if (a.m() != b.m() || a.n() != b.n()) throw ParseError("weights " + a.str() + " and " + b.str() + " differ in shape");
    KLOptions opt = kl_options(cfg);
    Decision a_in_b = inclusion(b, a, opt);
    Decision b_in_a = inclusion(a, b, opt);
    std::string rel;
    if (equal_ideal(a, b))
        rel = "equal";
    else if (a_in_b == Decision::yes)
        rel = "subset";
    else if (b_in_a == Decision::yes)
        rel = "superset";
    else if (a_in_b == Decision::unsupported || b_in_a == Decision::unsupported)
        rel = "unsupported";
    else
        rel = "incomparable";
    json out{{"alpha", weight_json(a)}, {"beta", weight_json(b)}, {"relation", rel},
             {"p", nullptr}, {"gamma", nullptr}, {"delta", nullptr}, {"trace", json::array()}};
    // gamma and delta from the container: beta when possible, otherwise alpha
    auto fill = [&](const SuperWeight& big, const SuperWeight& small, bool container_is_beta) {
        if (atypicality_degree(big) != 1) return false;
        auto p = theta_membership(big, small);
        if (!p || *p < 0 || *p > frame(big).p) return false;
        auto [g, d] = gamma_delta(big, small);
        out["p"] = *p;
        out["container"] = container_is_beta ? "beta" : "alpha";
        out["gamma"] = g.str();
        out["delta"] = d.str();
        if (with_trace) out["trace"] = trace_json(reduction_trace(big, small), container_is_beta);
        return true;
    };
    if (!fill(b, a, true)) fill(a, b, false);
    std::cout << out.dump(2) << "\n";
    return rel == "unsupported" ? exit_unsupported : exit_decided;
}

json poset_json(const IdealPoset& X) {
    json classes = json::array();
    for (auto& c : X.classes) {
        json mem = json::array();
        for (auto& w : c.members) mem.push_back(w.str());
        classes.push_back(
            {{"repr", c.repr.str()}, {"members", mem}, {"i", c.i}, {"j", c.j}, {"p", c.p}, {"z", c.z}});
    }
    json hasse = json::array();
    auto edges = X.hasse;
    std::sort(edges.begin(), edges.end());
    for (auto [lo, up] : edges) hasse.push_back({lo, up});
    return {{"m", X.m}, {"classes", classes}, {"hasse", hasse}};
}

json components_json(const IdealPoset& X) {
    json arr = json::array();
    for (auto& z : irreducible_components(X)) {
        json map = json::array();
        for (auto [a, b] : z.to_x0) map.push_back({a, b});
        arr.push_back({{"k", z.k}, {"q", z.q}, {"members", z.members}, {"iso_to_x0", z.iso}, {"detail", z.detail},
                       {"map", map}});
    }
    return arr;
}

int cmd_aug_poset(int m, const std::string& clusters, const Config& cfg) {
    IdealPoset X = enumerate_X(m, kl_options(cfg));
    if (cfg.format == "dot") {
        DotClusters c = clusters == "x" ? DotClusters::x : clusters == "y" ? DotClusters::y : DotClusters::none;
        std::cout << to_dot(X, c);
    } else if (cfg.format == "text") {
        for (std::size_t c = 0; c < X.size(); ++c) {
            auto& cl = X.classes[c];
            std::cout << c << " ";
            for (std::size_t k = 0; k < cl.members.size(); ++k) std::cout << (k ? " = " : "") << cl.members[k].compact();
            std::cout << "  i=" << cl.i << " j=" << cl.j << " p=" << cl.p << " z=";
            for (std::size_t k = 0; k < cl.z.size(); ++k) std::cout << (k ? "," : "") << cl.z[k];
            std::cout << "\n";
        }
        auto edges = X.hasse;
        std::sort(edges.begin(), edges.end());
        for (auto [lo, up] : edges) std::cout << lo << " < " << up << "\n";
    } else {
        json out = poset_json(X);
        out["minimal"] = minimal_elements(X);
        json exc = json::array();
        for (auto [lo, up] : exceptional_coverings(X)) exc.push_back({lo, up});
        out["exceptional"] = exc;
        out["components"] = components_json(X);
        std::cout << out.dump(2) << "\n";
    }
    return exit_decided;
}

int cmd_crystal(const std::string& wtext, const std::string& op, int i) {
    SuperWeight w = parse_weight(wtext);
    json out{{"weight", w.str()}, {"op", op}, {"i", i}};
    if (op == "e" || op == "f") {
        auto r = op == "e" ? e_tilde(w, i) : f_tilde(w, i);
        out["result"] = r ? json(r->str()) : json(nullptr);
    } else if (op == "eps") {
        out["result"] = epsilon(w, i);
    } else if (op == "phi") {
        out["result"] = phi(w, i);
    } else if (op == "sig") {
        out["result"] = i_signature(w, i).str();
        out["reduced"] = reduce(i_signature(w, i)).str();
    } else {
        throw ParseError("unknown crystal op '" + op + "', expected e, f, eps, phi or sig");
    }
    std::cout << out.dump(2) << "\n";
    return exit_decided;
}

Permutation parse_perm(const std::string& s, int m) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos)
        v = detail::parse_int_list(s, s);
    else
        for (char c : s) {
            if (c < '1' || c > '9') throw ParseError("malformed permutation '" + s + "'");
            v.push_back(c - '0');
        }
    Permutation p(v);
    if (p.size() != m || !p.is_bijection()) throw ParseError("'" + s + "' is not a permutation of 1.." + std::to_string(m));
    return p;
}

int cmd_kl(int m, const std::string& x, const std::string& y, const Config& cfg) {
    KLOptions opt = kl_options(cfg);
    const KLTable& t = kl_table(m, opt);
    json out{{"m", m}, {"size", t.size()}, {"distinct_polynomials", t.distinct_polynomials()}};
    if (opt.cache_dir) out["cache_file"] = KLTable::cache_file(*opt.cache_dir, m).string();
    if (!x.empty() || !y.empty()) {
        if (x.empty() || y.empty()) throw ParseError("kl: --x and --y go together");
        Permutation px = parse_perm(x, m), py = parse_perm(y, m);
        out["x"] = px.str();
        out["y"] = py.str();
        out["P"] = t.P(px, py).str();
        out["mu"] = t.mu(px, py);
    }
    std::cout << out.dump(2) << "\n";
    return exit_decided;
}

int cmd_super_kl(const std::string& seed_text, const std::string& labels, int pad, bool dump, const Config& cfg) {
    SuperWeight seed = parse_weight(seed_text);
    auto [lo, hi] = parse_interval(labels);
    TensorBounds bnd;
    bnd.max_factors = cfg.tensor_bound;
    bnd.max_interval = cfg.interval_bound;
    TensorSpace sp(seed.m(), seed.n(), lo - pad, hi + pad, bnd);
    CanonicalBasisTable t(sp, central_character(seed));
    auto block = block_window(seed, lo, hi);
    auto ord = kl_left_order(block, t);
    json wl = json::array();
    for (auto& w : block) wl.push_back(w.str());
    json order = json::array(), mus = json::array(), agree = json::array();
    KLOptions opt = kl_options(cfg);
    bool all_agree = true;
    for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t b = 0; b < block.size(); ++b) {
            if (a != b && ord.leq(b, a)) order.push_back({block[b].str(), block[a].str()});
            if (a < b) {
                auto m = mu_super(block[a], block[b], t);
                if (m) mus.push_back({{"alpha", block[a].str()}, {"beta", block[b].str()}, {"mu", m}});
            }
            Decision d = inclusion(block[a], block[b], opt);
            if (d == Decision::unsupported) continue;
            if ((d == Decision::yes) != ord.leq(b, a)) {
                all_agree = false;
                agree.push_back({block[b].str(), block[a].str()});
            }
        }
    json out{{"seed", seed.str()},
             {"labels", {lo, hi}},
             {"tensor_interval", {lo - pad, hi + pad}},
             {"block", wl},
             {"order", order},
             {"mu", mus},
             {"agrees_with_inclusion", all_agree},
             {"disagreements", agree}};
    if (dump) {
        json d = json::array();
        auto& ws = t.weights();
        for (std::size_t b = 0; b < t.size(); ++b)
            for (auto& [a, c] : t.column(b))
                if (a != b) d.push_back({{"alpha", ws[a].str()}, {"beta", ws[b].str()}, {"d", c.str()}});
        out["d"] = d;
    }
    std::cout << out.dump(2) << "\n";
    return exit_decided;
}

int cmd_counts(const std::string& range, const Config& cfg) {
    auto [a, b] = parse_range(range);
    if (a < 1 || b < a) throw ParseError("counts: need 1 <= a <= b in --m a..b");
    json rows = json::array();
    for (int m = a; m <= b; ++m) {
        Counts c = counts(enumerate_X(m, kl_options(cfg)));
        rows.push_back({{"m", m},
                        {"s", c.s},
                        {"t", c.t},
                        {"enumerated", c.enumerated},
                        {"x_sizes", c.x_sizes},
                        {"y_sizes", c.y_sizes}});
    }
    std::cout << rows.dump(2) << "\n";
    return exit_decided;
}

int cmd_components(int m, const Config& cfg) {
    IdealPoset X = enumerate_X(m, kl_options(cfg));
    json out{{"m", m}, {"components", components_json(X)}};
    std::cout << out.dump(2) << "\n";
    return exit_decided;
}

void diag(const std::string& kind, const std::string& msg) {
    json e{{"error", kind}, {"message", msg}};
    std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive ideal combinatorics for gl(m|n)"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--cache-dir", cfg.cache_dir, "KL cache directory (PRIMSPEC_CACHE overrides)");
    app.add_option("--kl-bound", cfg.kl_bound, "largest m for KL tables")->check(CLI::PositiveNumber);
    app.add_option("--tensor-bound", cfg.tensor_bound, "largest m+n for tensor spaces")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));

    auto* inc = app.add_subcommand("inclusion", "compare the ideals of two weights");
    std::vector<std::string> weights;
    bool trace = false;
    inc->add_option("--weights", weights, "two weights a1,..,am|b1,..,bn")->required()->expected(2);
    inc->add_flag("--trace", trace, "include the reduction trace");

    auto* aug = app.add_subcommand("aug-poset", "poset of ideals inside the augmentation ideal of gl(m|1)");
    int m = 0;
    std::string clusters = "none";
    aug->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    aug->add_option("--clusters", clusters, "DOT clusters: none, x or y")->check(CLI::IsMember({"none", "x", "y"}));

    auto* cry = app.add_subcommand("crystal", "crystal operators and statistics");
    std::string weight, op;
    int colour = 0;
    cry->add_option("--weight", weight)->required();
    cry->add_option("--op", op, "e, f, eps, phi, sig")->required();
    cry->add_option("--i", colour)->required();

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig table of S_m");
    int klm = 0;
    std::string x, y;
    kl->add_option("--m", klm)->required()->check(CLI::PositiveNumber);
    kl->add_option("--x", x, "permutation in one-line notation");
    kl->add_option("--y", y, "permutation in one-line notation");

    auto* skl = app.add_subcommand("super-kl", "canonical basis and left KL order on a block window");
    std::string seed, labels;
    int pad = 1;
    bool dump = false;
    skl->add_option("--weights", seed, "a weight of the block")->required();
    skl->add_option("--interval", labels, "label window lo,hi")->required();
    skl->add_option("--pad", pad, "extra tensor labels on each side")->check(CLI::NonNegativeNumber);
    skl->add_option("--interval-bound", cfg.interval_bound, "largest tensor interval")->check(CLI::PositiveNumber);
    skl->add_flag("--dump", dump, "include the d coefficients");

    auto* cnt = app.add_subcommand("counts", "class counts of the augmentation poset");
    std::string range;
    cnt->add_option("--m", range, "a..b")->required();

    auto* cmp = app.add_subcommand("components", "irreducible components of the augmentation poset");
    int cm = 0;
    cmp->add_option("--m", cm)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        diag("usage", e.what());
        return exit_error;
    }

    try {
        if (*inc) return cmd_inclusion(weights, trace, cfg);
        if (*aug) return cmd_aug_poset(m, clusters, cfg);
        if (*cry) return cmd_crystal(weight, op, colour);
        if (*kl) return cmd_kl(klm, x, y, cfg);
        if (*skl) return cmd_super_kl(seed, labels, pad, dump, cfg);
        if (*cnt) return cmd_counts(range, cfg);
        if (*cmp) return cmd_components(cm, cfg);
    } catch (const ParseError& e) {
        diag("parse", e.what());
        return exit_error;
    } catch (const BoundError& e) {
        diag("bound", e.what());
        return exit_error;
    } catch (const PreconditionError& e) {
        diag("precondition", e.what());
        return exit_error;
    } catch (const CacheError& e) {
        diag("cache", e.what());
        return exit_error;
    } catch (const std::exception& e) {
        diag("internal", e.what());
        return exit_error;
    }
    return exit_error;
}
