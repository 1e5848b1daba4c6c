#include "qpath/segraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qpath/rng.hpp"

namespace qpath {

namespace {

std::string kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::source: return "source";
        case VertexKind::sink: return "sink";
        case VertexKind::inner: return "inner";
    }
    return "?";
}

struct P {
    std::int64_t x, y;
    bool operator==(const P&) const = default;
};

std::int64_t cross(const P& o, const P& a, const P& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const P& a, const P& b, const P& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// true when segments ab and cd meet anywhere outside a common endpoint point
bool improper_intersection(const P& a, const P& b, const P& c, const P& d) {
    std::int64_t o1 = cross(a, b, c), o2 = cross(a, b, d);
    std::int64_t o3 = cross(c, d, a), o4 = cross(c, d, b);
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // collinear: any overlap longer than a point, or a one-point overlap
        // that is not endpoint-to-endpoint, is a violation
        auto within = [](const P& u, const P& v, const P& p) {
            return std::min(u.x, v.x) <= p.x && p.x <= std::max(u.x, v.x) &&
                   std::min(u.y, v.y) <= p.y && p.y <= std::max(u.y, v.y);
        };
        std::vector<P> hits;
        for (const P& p : {a, b})
            if (within(c, d, p)) hits.push_back(p);
        for (const P& p : {c, d})
            if (within(a, b, p)) hits.push_back(p);
        if (hits.empty()) return false;
        for (const P& p : hits)
            if (!(p == hits[0])) return true;  // overlap along a stretch
        const P& p = hits[0];
        bool end_ab = (p == a) || (p == b);
        bool end_cd = (p == c) || (p == d);
        return !(end_ab && end_cd);
    }
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
        o4 != 0)
        return true;  // proper interior crossing
    // an endpoint touching the other segment: allowed only endpoint-to-endpoint
    auto touch_bad = [](const P& u, const P& v, const P& p, const P& e1, const P& e2) {
        return on_segment(u, v, p) && !(p == e1) && !(p == e2);
    };
    if (touch_bad(c, d, a, c, d)) return true;
    if (touch_bad(c, d, b, c, d)) return true;
    if (touch_bad(a, b, c, a, b)) return true;
    if (touch_bad(a, b, d, a, b)) return true;
    return false;
}

void reach_over(const std::vector<std::vector<int>>& adj, int start, std::vector<char>& seen) {
    std::deque<int> bfs{start};
    seen[start] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                bfs.push_back(w);
            }
    }
}

}  // namespace

SEGraph::SEGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) {
        if (!id_index_.emplace(vertices_[i].id, i).second)
            throw std::invalid_argument("duplicate vertex id: " + vertices_[i].id);
    }
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.tail == e.head) throw std::invalid_argument("self-loop edge");
    }
    for (int i = 0; i < n; ++i) {
        switch (vertices_[i].kind) {
            case VertexKind::source: sources_.push_back(i); break;
            case VertexKind::sink: sinks_.push_back(i); break;
            case VertexKind::inner: inner_.push_back(i); break;
        }
    }
    auto& vs = vertices_;
    std::sort(sources_.begin(), sources_.end(),
              [&](int a, int b) { return vs[a].y < vs[b].y; });
    std::sort(sinks_.begin(), sinks_.end(), [&](int a, int b) { return vs[a].x < vs[b].x; });
    std::sort(inner_.begin(), inner_.end(), [&](int a, int b) {
        if (vs[a].x != vs[b].x) return vs[a].x < vs[b].x;
        if (vs[a].y != vs[b].y) return vs[a].y > vs[b].y;
        return vs[a].id < vs[b].id;
    });
    generator_of_.assign(n, -1);
    for (int g = 0; g < static_cast<int>(inner_.size()); ++g) generator_of_[inner_[g]] = g;
    out_edges_.assign(n, {});
    in_edges_.assign(n, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        out_edges_[edges_[e].tail].push_back(e);
        in_edges_[edges_[e].head].push_back(e);
    }
    auto by_head = [&](int a, int b) {
        const Vertex &u = vs[edges_[a].head], &w = vs[edges_[b].head];
        return std::tie(u.x, u.y, edges_[a].head) < std::tie(w.x, w.y, edges_[b].head);
    };
    auto by_tail = [&](int a, int b) {
        const Vertex &u = vs[edges_[a].tail], &w = vs[edges_[b].tail];
        return std::tie(u.x, u.y, edges_[a].tail) < std::tie(w.x, w.y, edges_[b].tail);
    };
    for (int v = 0; v < n; ++v) {
        std::sort(out_edges_[v].begin(), out_edges_[v].end(), by_head);
        std::sort(in_edges_[v].begin(), in_edges_[v].end(), by_tail);
    }
}

EdgeOrient SEGraph::orient(int e) const {
    const Vertex& t = vertices_[edges_[e].tail];
    const Vertex& h = vertices_[edges_[e].head];
    if (t.y == h.y && t.x < h.x) return EdgeOrient::H;
    if (t.x == h.x && t.y > h.y) return EdgeOrient::V;
    return EdgeOrient::invalid;
}

int SEGraph::index_of(const std::string& id) const {
    auto it = id_index_.find(id);
    return it == id_index_.end() ? -1 : it->second;
}

std::vector<std::string> SEGraph::generator_names() const {
    std::vector<std::string> names;
    names.reserve(inner_.size());
    for (int v : inner_) names.push_back(vertices_[v].id);
    return names;
}

std::string ValidationReport::str() const {
    if (ok()) return "pass";
    std::ostringstream os;
    for (const auto& v : violations) os << v << "\n";
    return os.str();
}

ValidationReport validate(const SEGraph& g, ValidationMode mode) {
    ValidationReport rep;
    const auto& vs = g.vertices();
    const auto& es = g.edges();

    for (const Vertex& v : vs) {
        bool ok = true;
        switch (v.kind) {
            case VertexKind::source: ok = (v.x == 0 && v.y > 0); break;
            case VertexKind::sink: ok = (v.y == 0 && v.x > 0); break;
            case VertexKind::inner: ok = (v.x > 0 && v.y > 0); break;
        }
        if (!ok)
            rep.violations.push_back("condition (iii): " + kind_name(v.kind) + " vertex " + v.id +
                                     " at (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                     ") off its line");
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i].x == vs[j].x && vs[i].y == vs[j].y)
                rep.violations.push_back("coincident vertices " + vs[i].id + " and " + vs[j].id);

    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        const Vertex& t = vs[es[e].tail];
        const Vertex& h = vs[es[e].head];
        if (mode == ValidationMode::strict) {
            if (g.orient(e) == EdgeOrient::invalid)
                rep.violations.push_back("condition (ii): edge " + t.id + "->" + h.id +
                                         " is neither east-horizontal nor south-vertical");
        } else {
            if (!(h.x >= t.x && h.y <= t.y) || (h.x == t.x && h.y == t.y))
                rep.violations.push_back("condition (ii,weak): edge " + t.id + "->" + h.id +
                                         " leaves the south-east sector");
        }
    }
    for (int v : g.sources())
        if (!g.in_edges(v).empty())
            rep.violations.push_back("condition (i): source " + vs[v].id + " has an entering edge");
    for (int v : g.sinks())
        if (!g.out_edges(v).empty())
            rep.violations.push_back("condition (i): sink " + vs[v].id + " has a leaving edge");

    // planarity: pairwise segment checks plus vertex-on-edge-interior
    for (std::size_t a = 0; a < es.size(); ++a) {
        P a1{vs[es[a].tail].x, vs[es[a].tail].y}, a2{vs[es[a].head].x, vs[es[a].head].y};
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            P b1{vs[es[b].tail].x, vs[es[b].tail].y}, b2{vs[es[b].head].x, vs[es[b].head].y};
            if (improper_intersection(a1, a2, b1, b2))
                rep.violations.push_back("planarity: edges " + vs[es[a].tail].id + "->" +
                                         vs[es[a].head].id + " and " + vs[es[b].tail].id + "->" +
                                         vs[es[b].head].id + " intersect");
        }
        for (const Vertex& v : vs) {
            P p{v.x, v.y};
            if (p == a1 || p == a2) continue;
            if (on_segment(a1, a2, p))
                rep.violations.push_back("planarity: vertex " + v.id + " lies inside edge " +
                                         vs[es[a].tail].id + "->" + vs[es[a].head].id);
        }
    }

    // condition (iv): every vertex and edge on some R->C directed path
    const int n = static_cast<int>(vs.size());
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (const Edge& e : es) {
        fwd[e.tail].push_back(e.head);
        bwd[e.head].push_back(e.tail);
    }
    std::vector<char> from_r(n, 0), to_c(n, 0);
    for (int s : g.sources()) reach_over(fwd, s, from_r);
    for (int c : g.sinks()) reach_over(bwd, c, to_c);
    for (int v = 0; v < n; ++v)
        if (!from_r[v] || !to_c[v])
            rep.violations.push_back("condition (iv): vertex " + vs[v].id +
                                     " is on no source-to-sink path");
    for (const Edge& e : es)
        if (!from_r[e.tail] || !to_c[e.head])
            rep.violations.push_back("condition (iv): edge " + vs[e.tail].id + "->" + vs[e.head].id +
                                     " is on no source-to-sink path");

    if (mode == ValidationMode::strict) {
        // coordinate convention: equal positive alpha forces a common vertical
        // path, equal positive beta a common horizontal path
        std::vector<std::vector<int>> hadj(n), vadj(n);
        for (int e = 0; e < static_cast<int>(es.size()); ++e) {
            if (g.orient(e) == EdgeOrient::H) hadj[es[e].tail].push_back(es[e].head);
            if (g.orient(e) == EdgeOrient::V) vadj[es[e].tail].push_back(es[e].head);
        }
        std::vector<std::vector<char>> hreach(n, std::vector<char>(n, 0)), vreach = hreach;
        for (int v = 0; v < n; ++v) {
            reach_over(hadj, v, hreach[v]);
            reach_over(vadj, v, vreach[v]);
        }
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (vs[u].x == vs[v].x && vs[u].x > 0 && !vreach[u][v] && !vreach[v][u])
                    rep.violations.push_back("coordinate convention: " + vs[u].id + " and " +
                                             vs[v].id +
                                             " share alpha without a common vertical path");
                if (vs[u].y == vs[v].y && vs[u].y > 0 && !hreach[u][v] && !hreach[v][u])
                    rep.violations.push_back("coordinate convention: " + vs[u].id + " and " +
                                             vs[v].id +
                                             " share beta without a common horizontal path");
            }
        }
    }
    return rep;
}

CommutationTable commutation_table(const SEGraph& g) {
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw std::invalid_argument("commutation_table: invalid graph:\n" + rep.str());
    const int n = static_cast<int>(g.vertices().size());
    std::vector<std::vector<int>> hadj(n), vadj(n);
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
        const Edge& ed = g.edges()[e];
        if (g.orient(e) == EdgeOrient::H) hadj[ed.tail].push_back(ed.head);
        if (g.orient(e) == EdgeOrient::V) vadj[ed.tail].push_back(ed.head);
    }
    const int ng = static_cast<int>(g.inner().size());
    CommutationTable table(ng);
    for (int gu = 0; gu < ng; ++gu) {
        int u = g.vertex_of_generator(gu);
        std::vector<char> hseen(n, 0), vseen(n, 0);
        reach_over(hadj, u, hseen);
        reach_over(vadj, u, vseen);
        for (int gv = 0; gv < ng; ++gv) {
            if (gu == gv) continue;
            int v = g.vertex_of_generator(gv);
            if (hseen[v]) table.set_lambda(gu, gv, +1);
            if (vseen[v]) table.set_lambda(gu, gv, -1);
        }
    }
    return table;
}

SEGraph full_grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    auto name = [](int j, int i) { return "w" + std::to_string(j) + "_" + std::to_string(i); };
    std::map<std::string, int> at;
    auto add = [&](const std::string& id, std::int64_t x, std::int64_t y, VertexKind k) {
        at[id] = static_cast<int>(vs.size());
        vs.push_back({id, x, y, k});
        return at[id];
    };
    for (int i = 1; i <= m; ++i) add("r" + std::to_string(i), 0, i, VertexKind::source);
    for (int j = 1; j <= n; ++j) add("c" + std::to_string(j), j, 0, VertexKind::sink);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) add(name(j, i), j, i, VertexKind::inner);
    for (int i = 1; i <= m; ++i) {
        es.push_back({at["r" + std::to_string(i)], at[name(1, i)]});
        for (int j = 1; j < n; ++j) es.push_back({at[name(j, i)], at[name(j + 1, i)]});
    }
    for (int j = 1; j <= n; ++j) {
        for (int i = m; i > 1; --i) es.push_back({at[name(j, i)], at[name(j, i - 1)]});
        es.push_back({at[name(j, 1)], at["c" + std::to_string(j)]});
    }
    return SEGraph(std::move(vs), std::move(es));
}

SEGraph relayout(const SEGraph& g) {
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::vector<int> vchain(n), hchain(n);
    std::iota(vchain.begin(), vchain.end(), 0);
    std::iota(hchain.begin(), hchain.end(), 0);
    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int v) {
        while (p[v] != v) v = p[v] = p[p[v]];
        return v;
    };
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
        const Edge& ed = g.edges()[e];
        if (g.orient(e) == EdgeOrient::V) vchain[find(vchain, ed.tail)] = find(vchain, ed.head);
        if (g.orient(e) == EdgeOrient::H) hchain[find(hchain, ed.tail)] = find(hchain, ed.head);
    }
    // one alpha per vertical chain, one beta per horizontal chain; source
    // chains pin alpha 0, sink chains pin beta 0
    auto assign = [&](std::vector<int>& chain, auto orig_coord, auto pinned) {
        std::map<int, std::pair<std::int64_t, int>> key;  // root -> (orig coord, min index)
        std::map<int, char> pin;
        for (int v = 0; v < n; ++v) {
            int r = find(chain, v);
            auto it = key.find(r);
            if (it == key.end())
                key[r] = {orig_coord(v), v};
            else
                it->second = std::min(it->second, std::make_pair(orig_coord(v), v));
            if (pinned(v)) pin[r] = 1;
        }
        std::vector<std::pair<std::pair<std::int64_t, int>, int>> order;
        for (const auto& [r, k] : key)
            if (!pin.count(r)) order.push_back({k, r});
        std::sort(order.begin(), order.end());
        std::map<int, std::int64_t> coord;
        for (const auto& [r, _] : pin) coord[r] = 0;
        std::int64_t next = 1;
        for (const auto& [k, r] : order) coord[r] = next++;
        std::vector<std::int64_t> out(n);
        for (int v = 0; v < n; ++v) out[v] = coord[find(chain, v)];
        return out;
    };
    std::vector<std::int64_t> nx = assign(
        vchain, [&](int v) { return vs[v].x; },
        [&](int v) { return vs[v].kind == VertexKind::source; });
    std::vector<std::int64_t> ny = assign(
        hchain, [&](int v) { return vs[v].y; },
        [&](int v) { return vs[v].kind == VertexKind::sink; });
    std::vector<Vertex> out = vs;
    for (int v = 0; v < n; ++v) {
        out[v].x = nx[v];
        out[v].y = ny[v];
    }
    return SEGraph(std::move(out), std::vector<Edge>(g.edges()));
}

SEGraph generate_grid_subgraph(int m, int n, std::uint64_t seed, double density) {
    SEGraph grid = full_grid(m, n);
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Edge> kept;
        for (const Edge& e : grid.edges())
            if (rng.chance(density)) kept.push_back(e);
        // prune to vertices reachable from R and co-reachable to C
        const int nv = static_cast<int>(grid.vertices().size());
        std::vector<std::vector<int>> fwd(nv), bwd(nv);
        for (const Edge& e : kept) {
            fwd[e.tail].push_back(e.head);
            bwd[e.head].push_back(e.tail);
        }
        std::vector<char> from_r(nv, 0), to_c(nv, 0);
        for (int s : grid.sources()) reach_over(fwd, s, from_r);
        for (int c : grid.sinks()) reach_over(bwd, c, to_c);
        std::vector<int> remap(nv, -1);
        std::vector<Vertex> vs;
        bool have_source = false, have_sink = false;
        for (int v = 0; v < nv; ++v) {
            if (from_r[v] && to_c[v]) {
                remap[v] = static_cast<int>(vs.size());
                vs.push_back(grid.vertices()[v]);
                have_source |= vs.back().kind == VertexKind::source;
                have_sink |= vs.back().kind == VertexKind::sink;
            }
        }
        if (!have_source || !have_sink) continue;
        std::vector<Edge> es;
        for (const Edge& e : kept)
            if (remap[e.tail] >= 0 && remap[e.head] >= 0 && from_r[e.tail] && to_c[e.head])
                es.push_back({remap[e.tail], remap[e.head]});
        SEGraph candidate = relayout(SEGraph(std::move(vs), std::move(es)));
        if (validate(candidate).ok()) return candidate;
    }
    return grid;
}

SEGraph cauchon_graph(const std::vector<std::string>& rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) throw std::invalid_argument("cauchon_graph: empty diagram");
    const int n = static_cast<int>(rows[0].size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("cauchon_graph: ragged diagram");
        for (char ch : row)
            if (ch != '.' && ch != '#')
                throw std::invalid_argument("cauchon_graph: cell must be '.' or '#'");
    }
    auto white = [&](int r, int c) { return rows[r][c] == '.'; };
    // admissibility: a black cell may not have a white cell above it in its
    // column and a white cell to its right in its row at the same time, else
    // the horizontal run over it crosses the vertical run through it
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            if (white(r, c)) continue;
            bool white_above = false, white_right = false;
            for (int rr = 0; rr < r; ++rr) white_above |= white(rr, c);
            for (int cc = c + 1; cc < n; ++cc) white_right |= white(r, cc);
            if (white_above && white_right)
                throw std::invalid_argument("cauchon_graph: inadmissible black cell at row " +
                                            std::to_string(r + 1) + ", column " +
                                            std::to_string(c + 1));
        }
    }
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    std::map<std::pair<int, int>, int> at;
    // row r (0 = top) sits at beta m-r; column c (0 = left) at alpha c+1
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (white(r, c)) {
                at[{r, c}] = static_cast<int>(vs.size());
                vs.push_back({"w" + std::to_string(c + 1) + "_" + std::to_string(m - r), c + 1,
                              m - r, VertexKind::inner});
            }
    for (int r = 0; r < m; ++r) {
        int prev = -1;
        for (int c = 0; c < n; ++c) {
            if (!white(r, c)) continue;
            if (prev < 0) {
                int src = static_cast<int>(vs.size());
                vs.push_back({"r" + std::to_string(m - r), 0, m - r, VertexKind::source});
                es.push_back({src, at[{r, c}]});
            } else {
                es.push_back({at[{r, prev}], at[{r, c}]});
            }
            prev = c;
        }
    }
    for (int c = 0; c < n; ++c) {
        int prev = -1;
        for (int r = 0; r < m; ++r) {
            if (!white(r, c)) continue;
            if (prev >= 0) es.push_back({at[{prev, c}], at[{r, c}]});
            prev = r;
        }
        if (prev >= 0) {
            int snk = static_cast<int>(vs.size());
            vs.push_back({"c" + std::to_string(c + 1), c + 1, 0, VertexKind::sink});
            es.push_back({at[{prev, c}], snk});
        }
    }
    if (vs.empty()) throw std::invalid_argument("cauchon_graph: all-black diagram has no paths");
    SEGraph g(std::move(vs), std::move(es));
    ValidationReport rep = validate(g);
    if (!rep.ok())
        throw std::invalid_argument("cauchon_graph: result fails validation:\n" + rep.str());
    return g;
}

std::string graph_to_json_text(const SEGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : g.vertices())
        j["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}, {"kind", kind_name(v.kind)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back(
            {{"tail", g.vertices()[e.tail].id}, {"head", g.vertices()[e.head].id}});
    return j.dump(2) + "\n";
}

SEGraph graph_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Vertex> vs;
    std::map<std::string, int> at;
    for (const auto& jv : j.at("vertices")) {
        Vertex v;
        v.id = jv.at("id").get<std::string>();
        v.x = jv.at("x").get<std::int64_t>();
        v.y = jv.at("y").get<std::int64_t>();
        std::string k = jv.at("kind").get<std::string>();
        if (k == "source")
            v.kind = VertexKind::source;
        else if (k == "sink")
            v.kind = VertexKind::sink;
        else if (k == "inner")
            v.kind = VertexKind::inner;
        else
            throw std::invalid_argument("unknown vertex kind: " + k);
        at[v.id] = static_cast<int>(vs.size());
        vs.push_back(v);
    }
    std::vector<Edge> es;
    for (const auto& je : j.at("edges")) {
        std::string t = je.at("tail").get<std::string>(), h = je.at("head").get<std::string>();
        if (!at.count(t) || !at.count(h))
            throw std::invalid_argument("edge references unknown vertex");
        es.push_back({at[t], at[h]});
    }
    return SEGraph(std::move(vs), std::move(es));
}

SEGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    SEGraph g = graph_from_json_text(buf.str());
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw std::runtime_error("loaded graph fails validation:\n" + rep.str());
    return g;
}

void save_graph(const SEGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << graph_to_json_text(g);
}

}  // namespace qpath
