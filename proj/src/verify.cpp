#include "qpath/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qpath/exchange.hpp"
#include "qpath/minors.hpp"
#include "qpath/pathkit.hpp"
#include "qpath/rng.hpp"
#include "qpath/segraph.hpp"

namespace qpath {

namespace {

bool want(const VerifyConfig& cfg, const std::string& name) {
    return cfg.only.empty() || cfg.only == name;
}

std::vector<int> random_subset(Rng& rng, int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(all[i], all[rng.below(i + 1)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

std::optional<DoubleFlow> random_double_flow(const SEGraph& g, Rng& rng) {
    int m = g.num_sources(), n = g.num_sinks();
    if (m < 1 || n < 1) return std::nullopt;
    int kmax = std::min({m, n, 3});
    int k1 = rng.range(1, kmax), k2 = rng.range(1, kmax);
    MinorIndex a{random_subset(rng, m, k1), random_subset(rng, n, k1)};
    MinorIndex b{random_subset(rng, m, k2), random_subset(rng, n, k2)};
    auto fa = enumerate_flows(g, a);
    auto fb = enumerate_flows(g, b);
    if (fa.empty() || fb.empty()) return std::nullopt;
    DoubleFlow df;
    df.first = fa[rng.below(fa.size())];
    df.second = fb[rng.below(fb.size())];
    return df;
}

std::set<int> edge_set(const Flow& f) {
    std::set<int> s;
    for (const DPath& p : f.paths) s.insert(p.edges.begin(), p.edges.end());
    return s;
}

std::string couple_str(const Couple& c) {
    auto el = [](const YElem& y) {
        return (y.is_row ? "r" : "c") + std::to_string(y.index);
    };
    const char* kind = c.kind == CoupleKind::R ? "R" : c.kind == CoupleKind::C ? "C" : "RC";
    return std::string("{") + el(c.a) + "," + el(c.b) + ":" + kind + "}";
}

// ---------------------------------------------------------------- lindstrom

void run_lindstrom(const VerifyConfig& cfg, SuiteResult& res) {
    bool first = true;
    for (std::uint64_t seed : cfg.seeds) {
        std::vector<SEGraph> graphs;
        graphs.push_back(generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.7));
        graphs.push_back(generate_grid_subgraph(3, 3, seed ^ 0x5555, 0.85));
        if (first) {
            // the undamaged grids once; repeating them per seed adds nothing
            for (int mm = 1; mm <= cfg.max_m; ++mm)
                for (int nn = 1; nn <= cfg.max_n; ++nn) graphs.push_back(full_grid(mm, nn));
            first = false;
        }
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const SEGraph& g = graphs[gi];
            CommutationTable table = commutation_table(g);
            int m = g.num_sources(), n = g.num_sinks();
            for (int k = 0; k <= std::min({m, n, cfg.max_k}); ++k) {
                std::vector<int> I(k), J(k);
                std::function<void(int, int)> pick_J;
                std::function<void(int, int)> pick_I = [&](int d, int lo) {
                    if (d == k) {
                        pick_J(0, 1);
                        return;
                    }
                    for (int v = lo; v <= m; ++v) {
                        I[d] = v;
                        pick_I(d + 1, v + 1);
                    }
                };
                pick_J = [&](int d, int lo) {
                    if (d == k) {
                        LindstromReport rep = check_lindstrom(g, {I, J}, table);
                        ++res.checked;
                        if (!rep.equal) {
                            std::ostringstream os;
                            os << "lindstrom mismatch seed=" << seed << " graph=" << gi << " I={";
                            for (int x : I) os << x << " ";
                            os << "} J={";
                            for (int x : J) os << x << " ";
                            os << "}";
                            res.failures.push_back(os.str());
                        }
                        return;
                    }
                    for (int v = lo; v <= n; ++v) {
                        J[d] = v;
                        pick_J(d + 1, v + 1);
                    }
                };
                pick_I(0, 1);
            }
        }
    }
}

// -------------------------------------------------------------------- manin

void run_manin(const VerifyConfig& cfg, SuiteResult& res) {
    std::vector<SEGraph> graphs;
    for (std::uint64_t seed : cfg.seeds) {
        graphs.push_back(generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.7));
        graphs.push_back(generate_grid_subgraph(2, 3, seed ^ 0xabc, 0.8));
    }
    graphs.push_back(full_grid(3, 4));
    graphs.push_back(cauchon_graph({"#..", "...", "..#"}));
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        CommutationTable table = commutation_table(graphs[gi]);
        PathMatrix M = path_matrix(graphs[gi], table);
        ManinReport rep = check_manin(M, table);
        ++res.checked;
        if (!rep.ok)
            res.failures.push_back("manin failure on graph " + std::to_string(gi) + ": " +
                                   rep.counterexample);
    }
}

// ------------------------------------------------------------------ weights

void run_weights(const VerifyConfig& cfg, SuiteResult& res) {
    long done = 0;
    for (int round = 0; round < 64 && done < cfg.min_weight_paths; ++round) {
        for (std::uint64_t seed : cfg.seeds) {
            if (done >= cfg.min_weight_paths) break;
            SEGraph g = generate_grid_subgraph(cfg.max_m, cfg.max_n,
                                               seed + 1000ull * round, 0.85);
            CommutationTable table = commutation_table(g);
            for (int i = 1; i <= g.num_sources(); ++i) {
                for (int j = 1; j <= g.num_sinks(); ++j) {
                    for (const DPath& p : enumerate_paths(g, i, j)) {
                        QElement w = path_weight(p, g, table);
                        QElement t = telescoped_weight(p, g, table);
                        QElement e = essential_weight(essential_form(p, g), g, table);
                        ++res.checked;
                        ++done;
                        if (!(w == t) || !(w == e))
                            res.failures.push_back("weight form mismatch seed=" +
                                                   std::to_string(seed + 1000ull * round) +
                                                   " i=" + std::to_string(i) +
                                                   " j=" + std::to_string(j));
                    }
                }
            }
        }
    }
    res.notes.push_back("paths checked: " + std::to_string(done));
}

// -------------------------------------------------------------- commutation

struct CaseHit {
    std::string label;
    std::int64_t expected;
};

std::vector<CaseHit> classify_pair(const DPath& p, const DPath& q, const SEGraph& g) {
    std::vector<CaseHit> hits;
    auto has_h = [&](const DPath& d) {
        for (int e : d.edges)
            if (g.orient(e) == EdgeOrient::H) return true;
        return false;
    };
    bool ph = has_h(p), qh = has_h(q);
    if (!ph || !qh) {
        hits.push_back({"vertical", 0});
        return hits;
    }
    const auto& vs = g.vertices();
    std::int64_t asp = vs[p.s()].x, atp = vs[p.t()].x;
    std::int64_t asq = vs[q.s()].x, atq = vs[q.t()].x;
    std::int64_t bsp = vs[p.s()].y, btp = vs[p.t()].y;
    std::int64_t bsq = vs[q.s()].y;
    (void)bsp;
    std::set<std::int64_t> pa, qa;
    if (asp > 0) pa.insert(asp);
    if (atp > 0) pa.insert(atp);
    if (asq > 0) qa.insert(asq);
    if (atq > 0) qa.insert(atq);
    bool disjoint = true;
    for (std::int64_t a : pa) disjoint &= !qa.count(a);
    if (disjoint) hits.push_back({"disjoint-columns", 0});
    if (asp == asq && asp > 0 && atp != atq && is_lower(p, q, g))
        hits.push_back({"shared-start-column", 1});
    if (atp == atq && (asp != asq || (asp == 0 && asq == 0)) && is_lower(p, q, g))
        hits.push_back({"shared-end-column", 1});
    if (atp == asq && btp >= bsq) hits.push_back({"chained-end-above", 1});
    if (atp == asq && btp < bsq) hits.push_back({"chained-end-below", -1});
    return hits;
}

DPath random_walk(const SEGraph& g, Rng& rng, int start, bool vertical_only) {
    DPath p;
    p.verts.push_back(start);
    int v = start;
    for (;;) {
        std::vector<int> opts;
        for (int e : g.out_edges(v))
            if (!vertical_only || g.orient(e) == EdgeOrient::V) opts.push_back(e);
        if (opts.empty()) break;
        if (!p.edges.empty() && rng.chance(0.25)) break;
        int e = opts[rng.below(opts.size())];
        v = g.edges()[e].head;
        p.edges.push_back(e);
        p.verts.push_back(v);
    }
    return p;
}

void run_commutation(const VerifyConfig& cfg, SuiteResult& res) {
    std::map<std::string, long> counts{{"disjoint-columns", 0},  {"shared-start-column", 0},
                                       {"shared-end-column", 0}, {"chained-end-above", 0},
                                       {"chained-end-below", 0}, {"vertical", 0}};
    auto quota_met = [&] {
        for (const auto& [k, c] : counts)
            if (c < cfg.min_pairs_per_case) return false;
        return true;
    };
    for (int round = 0; round < 4000 && !quota_met(); ++round) {
        std::uint64_t seed = cfg.seeds[round % cfg.seeds.size()] + 7919ull * (round / cfg.seeds.size() + 1);
        SEGraph g = generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.85);
        CommutationTable table = commutation_table(g);
        Rng rng(seed ^ 0xfeedface);
        std::vector<int> starts;
        for (int v : g.sources()) starts.push_back(v);
        for (int v : g.inner()) starts.push_back(v);
        const auto& vs = g.vertices();
        for (int t = 0; t < 300; ++t) {
            DPath p = random_walk(g, rng, starts[rng.below(starts.size())], false);
            if (p.edges.empty()) continue;
            // steer the second path toward the configurations the cases need
            int mode = static_cast<int>(rng.below(4));
            std::vector<int> pool;
            if (mode == 0) {
                for (int v : starts)
                    if (vs[v].x == vs[p.s()].x) pool.push_back(v);
            } else if (mode == 1) {
                for (int v : starts)
                    if (vs[v].x == vs[p.t()].x) pool.push_back(v);
            } else {
                pool = starts;
            }
            if (pool.empty()) continue;
            DPath q = random_walk(g, rng, pool[rng.below(pool.size())], mode == 3 && rng.chance(0.5));
            if (q.edges.empty()) continue;
            for (auto [a, b] : {std::pair{&p, &q}, std::pair{&q, &p}}) {
                if (!weakly_intersecting(*a, *b, g)) continue;
                for (const CaseHit& hit : classify_pair(*a, *b, g)) {
                    if (counts[hit.label] >= cfg.min_pairs_per_case) continue;
                    ++counts[hit.label];
                    ++res.checked;
                    std::int64_t got = varphi(*a, *b, g, table);
                    if (got != hit.expected)
                        res.failures.push_back(
                            "case " + hit.label + " seed=" + std::to_string(seed) +
                            " expected q^" + std::to_string(hit.expected) + " got q^" +
                            std::to_string(got));
                }
            }
        }
    }
    for (const auto& [k, c] : counts) {
        res.notes.push_back("pairs for " + k + ": " + std::to_string(c));
        if (c < cfg.min_pairs_per_case)
            res.failures.push_back("sampling quota unmet for case " + k + " (" +
                                   std::to_string(c) + ")");
    }
}

// ----------------------------------------------------------------- exchange

void run_exchange(const VerifyConfig& cfg, SuiteResult& res) {
    long doubles = 0, degenerate = 0;
    std::map<std::string, long> per_kind{{"R", 0}, {"C", 0}, {"RC", 0}};
    for (int round = 0; round < 4000 && doubles < cfg.min_double_flows; ++round) {
        std::uint64_t seed = cfg.seeds[round % cfg.seeds.size()] + 104729ull * (round / cfg.seeds.size() + 1);
        SEGraph g = generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.8);
        CommutationTable table = commutation_table(g);
        Rng rng(seed ^ 0xd00d);
        auto dfo = random_double_flow(g, rng);
        if (!dfo) continue;
        ++doubles;
        Decomposition dec = decompose(*dfo, g);
        std::map<int, int> deg;
        for (const ExchangePath& p : dec.paths)
            for (int v : p.verts) ++deg[v];
        for (const CycleComp& c : dec.cycles)
            for (std::size_t i = 0; i + 1 < c.verts.size(); ++i) ++deg[c.verts[i]];
        bool has_deg4 = false;
        for (const auto& [v, d] : deg) has_deg4 |= d > 1;
        if (has_deg4) ++degenerate;
        for (const Couple& pi : dec.matching.couples) {
            ++res.checked;
            int predicted = predicted_exchange_exponent(pi, dec.cortege);
            std::int64_t measured = exchange_ratio(*dfo, pi, g, table);
            const char* kind = pi.kind == CoupleKind::R ? "R" : pi.kind == CoupleKind::C ? "C" : "RC";
            ++per_kind[kind];
            if (measured != predicted)
                res.failures.push_back("exchange ratio seed=" + std::to_string(seed) +
                                       " couple=" + couple_str(pi) + " predicted q^" +
                                       std::to_string(predicted) + " measured q^" +
                                       std::to_string(measured));
        }
    }
    res.notes.push_back("double flows: " + std::to_string(doubles));
    res.notes.push_back("with a degree-4 vertex: " + std::to_string(degenerate));
    for (const auto& [k, c] : per_kind) res.notes.push_back(k + "-couples: " + std::to_string(c));
    if (doubles < cfg.min_double_flows)
        res.failures.push_back("only " + std::to_string(doubles) + " double flows generated");
}

// ---------------------------------------------------------------- structure

void run_structure(const VerifyConfig& cfg, SuiteResult& res) {
    long doubles = 0;
    for (int round = 0; round < 2000 && doubles < cfg.min_double_flows / 2; ++round) {
        std::uint64_t seed = cfg.seeds[round % cfg.seeds.size()] + 31337ull * (round / cfg.seeds.size() + 1);
        SEGraph g = generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.8);
        Rng rng(seed ^ 0xbeef);
        auto dfo = random_double_flow(g, rng);
        if (!dfo) continue;
        ++doubles;
        Decomposition dec = decompose(*dfo, g);
        ++res.checked;
        if (static_cast<int>(dec.paths.size()) != dec.cortege.k())
            res.failures.push_back("path count != k, seed=" + std::to_string(seed));
        std::string why;
        if (!feasible(dec.matching, dec.cortege, &why))
            res.failures.push_back("infeasible matching seed=" + std::to_string(seed) + ": " + why);
        // endpoint set: exactly the refined cortege
        std::set<YElem> ends, expect;
        for (const ExchangePath& p : dec.paths) {
            ends.insert(p.end_a);
            ends.insert(p.end_b);
        }
        for (int f : dec.cortege.Iw) expect.insert({true, f});
        for (int f : dec.cortege.Ib) expect.insert({true, f});
        for (int f : dec.cortege.Jw) expect.insert({false, f});
        for (int f : dec.cortege.Jb) expect.insert({false, f});
        if (ends != expect) res.failures.push_back("endpoint set mismatch seed=" + std::to_string(seed));
        // alternation: along a component, first-flow edges run one way and
        // second-flow edges the other
        for (const ExchangePath& p : dec.paths) {
            std::set<std::pair<bool, bool>> dirs;  // (from_first, forward along traversal)
            for (std::size_t i = 0; i < p.edges.size(); ++i) {
                bool forward = g.edges()[p.edges[i]].tail == p.verts[i];
                dirs.insert({p.from_first[i] != 0, forward});
            }
            for (auto [f1, d1] : dirs)
                for (auto [f2, d2] : dirs)
                    if (f1 == f2 && d1 != d2)
                        res.failures.push_back("one flow runs both ways along an exchange path, seed=" +
                                               std::to_string(seed));
            for (auto [f1, d1] : dirs)
                for (auto [f2, d2] : dirs)
                    if (f1 != f2 && d1 == d2)
                        res.failures.push_back("the two flows run the same way along an exchange path, seed=" +
                                               std::to_string(seed));
        }
        std::set<int> u = edge_set(dfo->first);
        std::set<int> u2 = edge_set(dfo->second);
        std::set<int> udiff;
        std::set_symmetric_difference(u.begin(), u.end(), u2.begin(), u2.end(),
                                      std::inserter(udiff, udiff.begin()));
        for (const Couple& pi : dec.matching.couples) {
            DoubleFlow ex = exchange(*dfo, pi, g);
            // involution
            DoubleFlow back = exchange(ex, pi, g);
            if (edge_set(back.first) != u || edge_set(back.second) != u2 ||
                back.first.I != dfo->first.I || back.second.J != dfo->second.J)
                res.failures.push_back("exchange is not an involution, seed=" + std::to_string(seed));
            // set equalities after the exchange
            std::set<int> ps = edge_set(ex.first), ps2 = edge_set(ex.second);
            std::set<int> uni, uni2, sym;
            std::set_union(u.begin(), u.end(), u2.begin(), u2.end(), std::inserter(uni, uni.begin()));
            std::set_union(ps.begin(), ps.end(), ps2.begin(), ps2.end(),
                           std::inserter(uni2, uni2.begin()));
            std::set_symmetric_difference(ps.begin(), ps.end(), ps2.begin(), ps2.end(),
                                          std::inserter(sym, sym.begin()));
            if (uni != uni2)
                res.failures.push_back("edge union changed under exchange, seed=" + std::to_string(seed));
            if (sym != udiff)
                res.failures.push_back("symmetric difference changed under exchange, seed=" +
                                       std::to_string(seed));
            Decomposition dec2 = decompose(ex, g);
            auto couples_of = [](const Decomposition& d) {
                std::set<std::pair<YElem, YElem>> s;
                for (const Couple& c : d.matching.couples) s.insert({c.a, c.b});
                return s;
            };
            if (couples_of(dec) != couples_of(dec2))
                res.failures.push_back("matching changed under exchange, seed=" + std::to_string(seed));
        }
    }
    // eta involution on small grids
    for (const SEGraph& g : {full_grid(2, 2), generate_grid_subgraph(3, 3, 5, 0.9)}) {
        CommutationTable table = commutation_table(g);
        int m = g.num_sources(), n = g.num_sinks();
        if (m < 2 || n < 2) continue;
        MinorIndex idx{{1, 2}, {n - 1, n}};
        for (const PathSystem& ps : enumerate_path_systems(g, idx)) {
            if (is_flow(ps)) continue;
            ++res.checked;
            PathSystem im = eta_involution(ps, g);
            PathSystem back = eta_involution(im, g);
            if (back.sigma != ps.sigma || back.paths != ps.paths)
                res.failures.push_back("eta is not an involution");
            int d = inversions(im.sigma) - inversions(ps.sigma);
            if (d != 1 && d != -1) res.failures.push_back("eta changes length by " + std::to_string(d));
            QElement w1 = system_weight(ps, g, table);
            QElement w2 = system_weight(im, g, table);
            int l1 = inversions(ps.sigma), l2 = inversions(im.sigma);
            QElement s1 = scalar_q_pow(w1, l1), s2 = scalar_q_pow(w2, l2);
            if (l1 % 2 == 1) s1 = s1.negated();
            if (l2 % 2 == 1) s2 = s2.negated();
            if (!(s1 + s2).is_zero())
                res.failures.push_back("signed weights of an eta pair do not cancel");
        }
    }
}

// -------------------------------------------------------------------- gamma

void run_gamma(const VerifyConfig& cfg, SuiteResult& res) {
    long doubles = 0, cycles = 0, skipped_degenerate = 0;
    std::map<std::string, long> per_case;
    for (int round = 0; round < 4000 && doubles < cfg.min_double_flows; ++round) {
        std::uint64_t seed = cfg.seeds[round % cfg.seeds.size()] + 271828ull * (round / cfg.seeds.size() + 1);
        SEGraph g = generate_grid_subgraph(cfg.max_m, cfg.max_n, seed, 0.8);
        CommutationTable table = commutation_table(g);
        Rng rng(seed ^ 0xabba);
        auto dfo = random_double_flow(g, rng);
        if (!dfo) continue;
        ++doubles;
        Decomposition dec0 = decompose(*dfo, g);
        for (const CycleComp& comp : dec0.cycles) {
            ++cycles;
            ++res.checked;
            GammaCycleResult gc = gamma_cycle(cycle_from_component(comp, g));
            int expect = gc.orientation == Orientation::cw ? 2 : -2;
            if (gc.gamma != expect)
                res.failures.push_back("cycle gamma=" + std::to_string(gc.gamma) + " for " +
                                       (gc.orientation == Orientation::cw ? "cw" : "ccw") +
                                       " cycle, seed=" + std::to_string(seed));
        }
        for (const Couple& pi : dec0.matching.couples) {
            ExchangeCase kase = classify_case(pi, dec0.cortege);
            DoubleFlow work = *dfo;
            if (kase == ExchangeCase::C1 || kase == ExchangeCase::C3 ||
                kase == ExchangeCase::C5)
                std::swap(work.first, work.second);
            RefinedCortege rc = refine(work.first.I, work.first.J, work.second.I, work.second.J);
            ExchangeCase wcase = classify_case(pi, rc);
            SnakeLinkDecomposition dec = snakes_and_links(work, pi, g);
            ++per_case[case_name(wcase)];
            if (dec.degenerate) {
                ++skipped_degenerate;
                continue;
            }
            ++res.checked;
            int gz = gamma_Z(dec, g);
            int expect = wcase == ExchangeCase::C4 ? 0 : 1;
            if (gz != expect)
                res.failures.push_back("gamma_Z=" + std::to_string(gz) + " expected " +
                                       std::to_string(expect) + " in case " + case_name(wcase) +
                                       ", seed=" + std::to_string(seed) + " couple=" + couple_str(pi));
            StringProducts sp = string_products(dec, g, table);
            std::int64_t measured = exchange_ratio(work, pi, g, table);
            if (sp.total() != measured)
                res.failures.push_back("string product total q^" + std::to_string(sp.total()) +
                                       " != exchange ratio q^" + std::to_string(measured) +
                                       ", seed=" + std::to_string(seed));
            if (wcase == ExchangeCase::C &&
                (sp.phiI != 0 || sp.phiII != 1 || sp.phiIII != 0))
                res.failures.push_back("case C string products (" + std::to_string(sp.phiI) + "," +
                                       std::to_string(sp.phiII) + "," + std::to_string(sp.phiIII) +
                                       ") != (0,1,0), seed=" + std::to_string(seed));
        }
    }
    res.notes.push_back("double flows: " + std::to_string(doubles));
    res.notes.push_back("cycles harvested: " + std::to_string(cycles));
    res.notes.push_back("degenerate decompositions skipped: " + std::to_string(skipped_degenerate));
    for (const auto& [k, c] : per_case) res.notes.push_back("case " + k + ": " + std::to_string(c));
}

// ---------------------------------------------------------------- reference

// Reference graph for the cortege I={1,2,3},J={1,3,4} against I'={2,4},
// J'={2,3}. The two routes between a and b form an eye, so the double flow
// taking opposite routes splits off a cycle besides its three exchange paths.
// A full grid cannot exhibit this: every source and sink there has a single
// incident edge, which pins both r2-paths to the same prefix.
SEGraph reference_graph() {
    std::vector<Vertex> vs = {
        {"r1", 0, 2, VertexKind::source}, {"r2", 0, 4, VertexKind::source},
        {"r3", 0, 6, VertexKind::source}, {"r4", 0, 8, VertexKind::source},
        {"c1", 1, 0, VertexKind::sink},   {"c2", 4, 0, VertexKind::sink},
        {"c3", 6, 0, VertexKind::sink},   {"c4", 8, 0, VertexKind::sink},
        {"h", 1, 2, VertexKind::inner},   {"a", 2, 4, VertexKind::inner},
        {"p", 4, 4, VertexKind::inner},   {"q", 2, 1, VertexKind::inner},
        {"b", 4, 1, VertexKind::inner},   {"t", 6, 1, VertexKind::inner},
        {"x", 5, 6, VertexKind::inner},   {"g1", 7, 6, VertexKind::inner},
        {"g2", 7, 3, VertexKind::inner},  {"g3", 8, 3, VertexKind::inner},
        {"k1", 5, 8, VertexKind::inner},  {"k2", 5, 5, VertexKind::inner},
        {"k3", 6, 5, VertexKind::inner},
    };
    std::map<std::string, int> at;
    for (std::size_t i = 0; i < vs.size(); ++i) at[vs[i].id] = static_cast<int>(i);
    std::vector<Edge> es;
    auto E = [&](const char* u, const char* v) { es.push_back({at[u], at[v]}); };
    E("r1", "h"), E("h", "c1");
    E("r2", "a"), E("a", "p"), E("a", "q"), E("p", "b"), E("q", "b");
    E("b", "t"), E("b", "c2"), E("t", "c3");
    E("r3", "x"), E("x", "g1"), E("g1", "g2"), E("g2", "g3"), E("g3", "c4");
    E("r4", "k1"), E("k1", "x"), E("x", "k2"), E("k2", "k3"), E("k3", "t");
    return SEGraph(std::move(vs), std::move(es));
}

void run_reference(const VerifyConfig& cfg, SuiteResult& res) {
    (void)cfg;
    SEGraph g = reference_graph();
    ValidationReport rep = validate(g);
    if (!rep.ok()) {
        res.failures.push_back("reference graph invalid: " + rep.str());
        return;
    }
    MinorIndex a{{1, 2, 3}, {1, 3, 4}};
    MinorIndex b{{2, 4}, {2, 3}};
    auto fa = enumerate_flows(g, a);
    auto fb = enumerate_flows(g, b);
    bool found = false;
    for (const Flow& f1 : fa) {
        for (const Flow& f2 : fb) {
            DoubleFlow df{f1, f2};
            Decomposition dec = decompose(df, g);
            ++res.checked;
            if (static_cast<int>(dec.paths.size()) != 3 || dec.cortege.k() != 3)
                res.failures.push_back("double flow with path count " +
                                       std::to_string(dec.paths.size()) + " (k must be 3)");
            if (!feasible(dec.matching, dec.cortege))
                res.failures.push_back("infeasible matching on the reference graph");
            if (dec.paths.size() == 3 && dec.cycles.size() == 1) found = true;
        }
    }
    res.notes.push_back("flow pairs examined: " + std::to_string(fa.size() * fb.size()));
    if (!found)
        res.failures.push_back("no double flow decomposes into 3 exchange paths and 1 cycle");
    else
        res.notes.push_back("witness with 3 exchange paths and 1 cycle found");
}

}  // namespace

bool VerifySummary::ok() const {
    for (const SuiteResult& s : suites)
        if (!s.failures.empty()) return false;
    return true;
}

long VerifySummary::total_checked() const {
    long t = 0;
    for (const SuiteResult& s : suites) t += s.checked;
    return t;
}

std::string VerifySummary::to_json() const {
    nlohmann::ordered_json j;
    j["checked"] = nlohmann::ordered_json::object();
    j["notes"] = nlohmann::ordered_json::object();
    j["failures"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : suites) {
        j["checked"][s.name] = s.checked;
        j["notes"][s.name] = s.notes;
        for (const std::string& f : s.failures) j["failures"].push_back(s.name + ": " + f);
    }
    j["ok"] = ok();
    return j.dump(2) + "\n";
}

std::string VerifySummary::to_text() const {
    std::ostringstream os;
    for (const SuiteResult& s : suites) {
        os << s.name << ": " << (s.failures.empty() ? "ok" : "FAIL") << " (" << s.checked
           << " checks)\n";
        for (const std::string& n : s.notes) os << "  " << n << "\n";
        for (const std::string& f : s.failures) os << "  failure: " << f << "\n";
    }
    os << (ok() ? "all suites passed" : "there were failures") << "\n";
    return os.str();
}

VerifySummary run_verify(const VerifyConfig& cfg) {
    VerifySummary sum;
    struct Entry {
        const char* name;
        void (*fn)(const VerifyConfig&, SuiteResult&);
    };
    const Entry entries[] = {
        {"lindstrom", run_lindstrom},     {"manin", run_manin},       {"weights", run_weights},
        {"commutation", run_commutation}, {"exchange", run_exchange},
        {"structure", run_structure},     {"gamma", run_gamma},       {"reference", run_reference},
    };
    for (const Entry& e : entries) {
        if (!want(cfg, e.name)) continue;
        SuiteResult res;
        res.name = e.name;
        e.fn(cfg, res);
        sum.suites.push_back(std::move(res));
    }
    return sum;
}

}  // namespace qpath
