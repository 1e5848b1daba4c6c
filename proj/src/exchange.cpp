#include "qpath/exchange.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qpath {

namespace {

std::vector<int> set_diff(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sym_diff(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

YElem yelem_of_vertex(const SEGraph& g, int v) {
    for (int i = 0; i < g.num_sources(); ++i)
        if (g.sources()[i] == v) return {true, i + 1};
    for (int j = 0; j < g.num_sinks(); ++j)
        if (g.sinks()[j] == v) return {false, j + 1};
    throw std::logic_error("exchange path endpoint is neither source nor sink");
}

std::pair<std::int64_t, std::int64_t> edge_dir(const SEGraph& g, int e) {
    const Vertex& t = g.vertices()[g.edges()[e].tail];
    const Vertex& h = g.vertices()[g.edges()[e].head];
    return {h.x - t.x, h.y - t.y};
}

}  // namespace

bool RefinedCortege::is_white_row(int f) const { return contains(Iw, f); }
bool RefinedCortege::is_white_col(int f) const { return contains(Jw, f); }

RefinedCortege refine(const std::vector<int>& I, const std::vector<int>& J,
                      const std::vector<int>& I2, const std::vector<int>& J2) {
    if (I.size() != J.size() || I2.size() != J2.size())
        throw std::invalid_argument("refine: index pairs must be balanced");
    RefinedCortege rc;
    rc.Iw = set_diff(I, I2);
    rc.Ib = set_diff(I2, I);
    rc.Jw = set_diff(J, J2);
    rc.Jb = set_diff(J2, J);
    if (static_cast<int>(rc.Iw.size()) - static_cast<int>(rc.Ib.size()) !=
        static_cast<int>(rc.Jw.size()) - static_cast<int>(rc.Jb.size()))
        throw std::logic_error("refine: balance relation violated");
    return rc;
}

bool feasible(const Matching& m, const RefinedCortege& rc, std::string* why) {
    auto explain = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    std::vector<int> rows = rc.Iw, cols = rc.Jw;
    rows.insert(rows.end(), rc.Ib.begin(), rc.Ib.end());
    cols.insert(cols.end(), rc.Jb.begin(), rc.Jb.end());
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    // circle positions: rows ascending, then columns descending
    std::map<YElem, int> pos;
    int p = 0;
    for (int r : rows) pos[{true, r}] = p++;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) pos[{false, *it}] = p++;
    std::map<YElem, int> hits;
    for (const Couple& c : m.couples) {
        if (!pos.count(c.a) || !pos.count(c.b)) return explain("couple element outside cortege");
        ++hits[c.a];
        ++hits[c.b];
        auto white = [&](const YElem& e) {
            return e.is_row ? rc.is_white_row(e.index) : rc.is_white_col(e.index);
        };
        if (c.a.is_row && c.b.is_row) {
            if (c.kind != CoupleKind::R) return explain("row pair not labelled R");
            if (white(c.a) == white(c.b)) return explain("R-couple colors agree");
        } else if (!c.a.is_row && !c.b.is_row) {
            if (c.kind != CoupleKind::C) return explain("column pair not labelled C");
            if (white(c.a) == white(c.b)) return explain("C-couple colors agree");
        } else {
            if (c.kind != CoupleKind::RC) return explain("mixed pair not labelled RC");
            if (white(c.a) != white(c.b)) return explain("RC-couple colors differ");
        }
    }
    if (hits.size() != pos.size() || m.couples.size() * 2 != pos.size())
        return explain("couples do not partition the cortege");
    for (const auto& [e, n] : hits)
        if (n != 1) return explain("element matched twice");
    for (std::size_t i = 0; i < m.couples.size(); ++i) {
        for (std::size_t j = i + 1; j < m.couples.size(); ++j) {
            int a = pos[m.couples[i].a], b = pos[m.couples[i].b];
            int c = pos[m.couples[j].a], d = pos[m.couples[j].b];
            if (a > b) std::swap(a, b);
            if (c > d) std::swap(c, d);
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) return explain("chords cross");
        }
    }
    return true;
}

Decomposition decompose(const DoubleFlow& df, const SEGraph& g) {
    std::set<int> e1, e2;
    for (const DPath& p : df.first.paths) e1.insert(p.edges.begin(), p.edges.end());
    for (const DPath& p : df.second.paths) e2.insert(p.edges.begin(), p.edges.end());
    std::vector<int> uedges;
    for (int e : e1)
        if (!e2.count(e)) uedges.push_back(e);
    for (int e : e2)
        if (!e1.count(e)) uedges.push_back(e);
    std::sort(uedges.begin(), uedges.end());

    const int nv = static_cast<int>(g.vertices().size());
    std::vector<int> udeg_in(nv, 0), udeg_out(nv, 0);
    for (int e : uedges) {
        ++udeg_out[g.edges()[e].tail];
        ++udeg_in[g.edges()[e].head];
    }
    // split a degree-4 vertex into an entering node (2v) and a leaving node
    // (2v+1); other vertices use a single node 2v
    auto split = [&](int v) { return udeg_in[v] == 2 && udeg_out[v] == 2; };
    auto tail_node = [&](int e) {
        int v = g.edges()[e].tail;
        return split(v) ? 2 * v + 1 : 2 * v;
    };
    auto head_node = [&](int e) {
        int v = g.edges()[e].head;
        return 2 * v;
    };
    std::map<int, std::vector<int>> incident;  // node -> U-edge list
    for (int e : uedges) {
        incident[tail_node(e)].push_back(e);
        incident[head_node(e)].push_back(e);
    }
    for (const auto& [node, es] : incident)
        if (es.size() > 2) throw std::logic_error("node of degree above two after splitting");

    Decomposition dec;
    dec.cortege = refine(df.first.I, df.first.J, df.second.I, df.second.J);
    std::set<int> used;
    auto other_node = [&](int e, int node) {
        return tail_node(e) == node ? head_node(e) : tail_node(e);
    };
    auto walk = [&](int start_node, std::vector<int>& edges, std::vector<int>& verts) {
        int node = start_node;
        verts.push_back(node / 2);
        for (;;) {
            int next_e = -1;
            for (int e : incident[node])
                if (!used.count(e)) {
                    next_e = e;
                    break;
                }
            if (next_e < 0) break;
            used.insert(next_e);
            edges.push_back(next_e);
            node = other_node(next_e, node);
            verts.push_back(node / 2);
        }
    };
    // open components start at degree-1 nodes
    for (const auto& [node, es] : incident) {
        if (es.size() != 1) continue;
        bool fresh = true;
        for (int e : es) fresh &= !used.count(e);
        if (!fresh) continue;
        ExchangePath path;
        walk(node, path.edges, path.verts);
        for (int e : path.edges) path.from_first.push_back(e1.count(e) ? 1 : 0);
        path.end_a = yelem_of_vertex(g, path.verts.front());
        path.end_b = yelem_of_vertex(g, path.verts.back());
        dec.paths.push_back(std::move(path));
    }
    for (const auto& [node, es] : incident) {
        bool fresh = false;
        for (int e : es) fresh |= !used.count(e);
        if (!fresh) continue;
        CycleComp cyc;
        walk(node, cyc.edges, cyc.verts);
        for (int e : cyc.edges) cyc.from_first.push_back(e1.count(e) ? 1 : 0);
        if (cyc.verts.front() != cyc.verts.back())
            throw std::logic_error("leftover component is not a cycle");
        dec.cycles.push_back(std::move(cyc));
    }
    for (const ExchangePath& p : dec.paths) {
        Couple c;
        c.a = std::min(p.end_a, p.end_b);
        c.b = std::max(p.end_a, p.end_b);
        if (c.a.is_row && c.b.is_row)
            c.kind = CoupleKind::R;
        else if (!c.a.is_row && !c.b.is_row)
            c.kind = CoupleKind::C;
        else
            c.kind = CoupleKind::RC;
        dec.matching.couples.push_back(c);
    }
    std::sort(dec.matching.couples.begin(), dec.matching.couples.end(),
              [](const Couple& x, const Couple& y) {
                  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
    return dec;
}

namespace {

Flow flow_from_edges(const std::set<int>& edges, const SEGraph& g) {
    std::map<int, int> out_edge;
    for (int e : edges) {
        int t = g.edges()[e].tail;
        if (out_edge.count(t)) throw std::logic_error("edge set is not a union of disjoint paths");
        out_edge[t] = e;
    }
    Flow f;
    std::set<int> visited;
    std::size_t consumed = 0;
    for (int i = 0; i < g.num_sources(); ++i) {
        int s = g.sources()[i];
        if (!out_edge.count(s)) continue;
        DPath p;
        p.verts.push_back(s);
        int v = s;
        while (out_edge.count(v)) {
            int e = out_edge[v];
            ++consumed;
            v = g.edges()[e].head;
            p.edges.push_back(e);
            p.verts.push_back(v);
        }
        if (g.vertices()[v].kind != VertexKind::sink)
            throw std::logic_error("path from source does not reach a sink");
        for (int w : p.verts)
            if (!visited.insert(w).second)
                throw std::logic_error("paths are not vertex-disjoint");
        f.I.push_back(i + 1);
        f.J.push_back(yelem_of_vertex(g, v).index);
        f.paths.push_back(std::move(p));
    }
    if (consumed != edges.size()) throw std::logic_error("edge set contains a stray cycle");
    if (!std::is_sorted(f.J.begin(), f.J.end()))
        throw std::logic_error("flow sink order does not follow source order");
    return f;
}

const ExchangePath& find_path(const Decomposition& dec, const Couple& pi) {
    for (const ExchangePath& p : dec.paths) {
        if ((p.end_a == pi.a && p.end_b == pi.b) || (p.end_a == pi.b && p.end_b == pi.a))
            return p;
    }
    throw std::invalid_argument("couple is not in the matching of this double flow");
}

}  // namespace

DoubleFlow exchange(const DoubleFlow& df, const Couple& pi, const SEGraph& g) {
    Decomposition dec = decompose(df, g);
    const ExchangePath& P = find_path(dec, pi);
    std::set<int> e1, e2, excl(P.edges.begin(), P.edges.end());
    for (const DPath& p : df.first.paths) e1.insert(p.edges.begin(), p.edges.end());
    for (const DPath& p : df.second.paths) e2.insert(p.edges.begin(), p.edges.end());
    auto symd = [&](std::set<int> s) {
        for (int e : excl) {
            if (s.count(e))
                s.erase(e);
            else
                s.insert(e);
        }
        return s;
    };
    DoubleFlow out;
    out.first = flow_from_edges(symd(e1), g);
    out.second = flow_from_edges(symd(e2), g);
    std::vector<int> prows, pcols;
    for (const YElem& y : {pi.a, pi.b})
        (y.is_row ? prows : pcols).push_back(y.index);
    if (out.first.I != sym_diff(df.first.I, prows) || out.first.J != sym_diff(df.first.J, pcols) ||
        out.second.I != sym_diff(df.second.I, prows) ||
        out.second.J != sym_diff(df.second.J, pcols))
        throw std::logic_error("exchanged flows carry unexpected index sets");
    return out;
}

std::int64_t exchange_ratio(const DoubleFlow& df, const Couple& pi, const SEGraph& g,
                            const CommutationTable& table) {
    DoubleFlow ex = exchange(df, pi, g);
    QElement lhs = mul(flow_weight(df.first, g, table), flow_weight(df.second, g, table), table);
    QElement rhs = mul(flow_weight(ex.first, g, table), flow_weight(ex.second, g, table), table);
    auto k = q_ratio(lhs, rhs);
    if (!k) throw std::logic_error("flow weight products are not q-power related");
    return *k;
}

int predicted_exchange_exponent(const Couple& pi, const RefinedCortege& rc) {
    if (pi.kind == CoupleKind::RC) return 0;
    int f = std::min(pi.a.index, pi.b.index);
    bool white = pi.kind == CoupleKind::R ? rc.is_white_row(f) : rc.is_white_col(f);
    return white ? +1 : -1;
}

ExchangeCase classify_case(const Couple& pi, const RefinedCortege& rc) {
    if (pi.kind == CoupleKind::RC) {
        const YElem& any = pi.a;
        bool white = any.is_row ? rc.is_white_row(any.index) : rc.is_white_col(any.index);
        return white ? ExchangeCase::C4 : ExchangeCase::C5;
    }
    int f = std::min(pi.a.index, pi.b.index);
    if (pi.kind == CoupleKind::C) return rc.is_white_col(f) ? ExchangeCase::C : ExchangeCase::C1;
    return rc.is_white_row(f) ? ExchangeCase::C2 : ExchangeCase::C3;
}

std::string case_name(ExchangeCase c) {
    switch (c) {
        case ExchangeCase::C: return "C";
        case ExchangeCase::C1: return "C1";
        case ExchangeCase::C2: return "C2";
        case ExchangeCase::C3: return "C3";
        case ExchangeCase::C4: return "C4";
        case ExchangeCase::C5: return "C5";
    }
    return "?";
}

namespace {

// natural-direction subpath from a run of edges listed in traversal order
DPath run_to_path(const std::vector<int>& run, const std::vector<int>& verts_along,
                  const SEGraph& g) {
    DPath p;
    bool forward = g.edges()[run.front()].tail == verts_along.front();
    std::vector<int> es = run, vs = verts_along;
    if (!forward) {
        std::reverse(es.begin(), es.end());
        std::reverse(vs.begin(), vs.end());
    }
    p.edges = es;
    p.verts = vs;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = g.edges()[p.edges[i]];
        if (e.tail != p.verts[i] || e.head != p.verts[i + 1])
            throw std::logic_error("segment edges are not consistently directed");
    }
    return p;
}

}  // namespace

SnakeLinkDecomposition snakes_and_links(const DoubleFlow& df, const Couple& pi,
                                        const SEGraph& g) {
    Decomposition dec0 = decompose(df, g);
    const ExchangePath& Z0 = find_path(dec0, pi);
    SnakeLinkDecomposition dec;
    dec.kase = classify_case(pi, dec0.cortege);

    auto endpoint_color_white = [&](const YElem& y) {
        return y.is_row ? dec0.cortege.is_white_row(y.index) : dec0.cortege.is_white_col(y.index);
    };
    // choose the traversal start of Z
    bool start_at_front;
    switch (dec.kase) {
        case ExchangeCase::C:
            // both endpoints are sinks; start at the white one
            start_at_front = endpoint_color_white(Z0.end_a);
            break;
        case ExchangeCase::C2:
            // both endpoints are sources; start at the black one
            start_at_front = !endpoint_color_white(Z0.end_a);
            break;
        case ExchangeCase::C4:
            // one source, one sink; start at the sink
            start_at_front = !Z0.end_a.is_row;
            break;
        default:
            throw std::invalid_argument(
                "snakes_and_links handles cases C, C2 and C4; for " + case_name(dec.kase) +
                " apply the exchange first and decompose the swapped double flow");
    }
    ExchangePath Z = Z0;
    if (!start_at_front) {
        std::reverse(Z.edges.begin(), Z.edges.end());
        std::reverse(Z.from_first.begin(), Z.from_first.end());
        std::reverse(Z.verts.begin(), Z.verts.end());
        std::swap(Z.end_a, Z.end_b);
    }

    // snakes: maximal same-flow runs along Z
    std::map<int, int> edge_segment;  // graph edge -> segment id
    std::vector<std::pair<int, int>> bend_spans;  // (snake id, junction vertex) boundaries
    std::size_t i = 0;
    while (i < Z.edges.size()) {
        std::size_t j = i;
        while (j < Z.edges.size() && Z.from_first[j] == Z.from_first[i]) ++j;
        std::vector<int> run(Z.edges.begin() + i, Z.edges.begin() + j);
        std::vector<int> vs(Z.verts.begin() + i, Z.verts.begin() + j + 1);
        Segment s;
        s.path = run_to_path(run, vs, g);
        s.white = Z.from_first[i] != 0;
        s.snake = true;
        s.id = static_cast<int>(dec.segments.size());
        for (int e : run) edge_segment[e] = s.id;
        dec.snake_order.push_back(s.id);
        dec.segments.push_back(std::move(s));
        if (j < Z.edges.size()) bend_spans.emplace_back(dec.snake_order.back(), Z.verts[j]);
        i = j;
    }
    // bends between consecutive snakes
    for (std::size_t b = 0; b + 1 < dec.snake_order.size(); ++b) {
        int sa = dec.snake_order[b], sb = dec.snake_order[b + 1];
        int v = bend_spans[b].second;
        Bend z;
        z.vertex = v;
        z.white_seg = dec.segments[sa].white ? sa : sb;
        z.black_seg = dec.segments[sa].white ? sb : sa;
        const DPath& pa = dec.segments[sa].path;
        const DPath& pb = dec.segments[sb].path;
        bool a_leaves = pa.verts.front() == v;
        bool b_leaves = pb.verts.front() == v;
        if (a_leaves && b_leaves)
            z.kind = BendKind::peak;
        else if (!a_leaves && !b_leaves && pa.verts.back() == v && pb.verts.back() == v)
            z.kind = BendKind::pit;
        else
            throw std::logic_error("bend is neither a peak nor a pit");
        dec.bends.push_back(z);
    }
    for (std::size_t a = 0; a < dec.bends.size(); ++a)
        for (std::size_t b = a + 1; b < dec.bends.size(); ++b)
            if (dec.bends[a].vertex == dec.bends[b].vertex) {
                dec.bends[a].twin = dec.bends[b].twin = true;
            }

    // links: leftover pieces of the flow paths, sliced at snake boundaries;
    // a zero-length gap between two snakes of one path is a trivial link.
    // The two flows may share edges outside the exchange path, and a shared
    // edge belongs to a white link of one flow and a black link of the other,
    // so links get a map per color; snake edges lie in the symmetric
    // difference and are unambiguous.
    std::map<int, int> link_segment[2];  // [white] graph edge -> link id
    std::map<std::pair<int, bool>, int> trivial_at;  // (vertex, white) -> segment id
    auto slice_flow = [&](const Flow& flow, bool white, std::vector<int>& string_out) {
        for (const DPath& p : flow.paths) {
            auto seg_of = [&](std::size_t t) {
                auto it = edge_segment.find(p.edges[t]);
                return it == edge_segment.end() ? -1 : it->second;
            };
            std::size_t a = 0;
            bool prev_was_snake = false;
            while (a < p.edges.size()) {
                int cur = seg_of(a);
                std::size_t b = a;
                while (b < p.edges.size() && seg_of(b) == cur) ++b;
                if (cur >= 0) {
                    // snake run; a snake directly after a snake pinches a
                    // trivial link at the shared vertex (a twin bend)
                    if (prev_was_snake) {
                        Segment tl;
                        tl.path = DPath{{p.verts[a]}, {}};
                        tl.white = white;
                        tl.trivial = true;
                        tl.id = static_cast<int>(dec.segments.size());
                        trivial_at[{p.verts[a], white}] = tl.id;
                        dec.segments.push_back(tl);
                        string_out.push_back(tl.id);
                    }
                    string_out.push_back(cur);
                    prev_was_snake = true;
                } else {
                    Segment link;
                    std::vector<int> run(p.edges.begin() + a, p.edges.begin() + b);
                    std::vector<int> vs(p.verts.begin() + a, p.verts.begin() + b + 1);
                    link.path = run_to_path(run, vs, g);
                    link.white = white;
                    link.id = static_cast<int>(dec.segments.size());
                    for (int e : run) link_segment[white][e] = link.id;
                    dec.segments.push_back(std::move(link));
                    string_out.push_back(dec.segments.back().id);
                    prev_was_snake = false;
                }
                a = b;
            }
        }
    };
    slice_flow(df.first, true, dec.string_n);
    slice_flow(df.second, false, dec.string_n);

    // the exchanged pair orders the same segments as w(psi)w(psi')
    DoubleFlow ex = exchange(df, pi, g);
    auto slice_exchanged = [&](const Flow& flow, bool white_links_here,
                               std::vector<int>& string_out) {
        auto lookup = [&](int e) {
            auto it = edge_segment.find(e);
            if (it != edge_segment.end()) return it->second;
            auto jt = link_segment[white_links_here].find(e);
            if (jt != link_segment[white_links_here].end()) return jt->second;
            return -1;
        };
        for (const DPath& p : flow.paths) {
            std::size_t a = 0;
            int prev_snake = -1;
            while (a < p.edges.size()) {
                int cur = lookup(p.edges[a]);
                if (cur < 0) throw std::logic_error("exchanged flow edge belongs to no segment");
                std::size_t b = a;
                while (b < p.edges.size() && lookup(p.edges[b]) == cur) ++b;
                if (b - a != dec.segments[cur].path.edges.size())
                    throw std::logic_error("exchanged flow splits a segment");
                if (dec.segments[cur].snake && prev_snake >= 0) {
                    auto tv = trivial_at.find({p.verts[a], white_links_here});
                    if (tv != trivial_at.end()) string_out.push_back(tv->second);
                }
                string_out.push_back(cur);
                prev_snake = dec.segments[cur].snake ? cur : -1;
                a = b;
            }
        }
    };
    slice_exchanged(ex.first, true, dec.string_nstar);
    slice_exchanged(ex.second, false, dec.string_nstar);

    // degeneracy: alphas of bend vertices and of the sinks touched by the two
    // flows must be pairwise distinct (twins share one vertex, counted once)
    std::set<int> marked;
    for (const Bend& z : dec.bends) marked.insert(z.vertex);
    for (const Flow* f : {&df.first, &df.second})
        for (const DPath& p : f->paths) marked.insert(p.t());
    std::set<std::int64_t> alphas;
    for (int v : marked)
        if (!alphas.insert(g.vertices()[v].x).second) dec.degenerate = true;
    return dec;
}

int gamma_of_bend(const Bend& z, const SnakeLinkDecomposition& dec, const SEGraph& g) {
    const DPath& w = dec.segments[z.white_seg].path;
    const DPath& b = dec.segments[z.black_seg].path;
    auto dir_at = [&](const DPath& p) -> std::pair<std::int64_t, std::int64_t> {
        if (z.kind == BendKind::peak) {
            if (p.verts.front() != z.vertex) throw std::logic_error("peak snake does not leave bend");
            return edge_dir(g, p.edges.front());
        }
        if (p.verts.back() != z.vertex) throw std::logic_error("pit snake does not enter bend");
        return edge_dir(g, p.edges.back());
    };
    auto [wx, wy] = dir_at(w);
    auto [bx, by] = dir_at(b);
    std::int64_t cr = wx * by - wy * bx;
    if (cr == 0) throw std::invalid_argument("degenerate bend: snake directions are collinear");
    bool white_lower = z.kind == BendKind::peak ? cr > 0 : cr < 0;
    return white_lower ? +1 : -1;
}

int gamma_Z(const SnakeLinkDecomposition& dec, const SEGraph& g) {
    // bends at one vertex must come in peak/pit twin pairs; any other
    // coincidence would make "lower" ambiguous
    std::map<int, std::vector<const Bend*>> by_vertex;
    for (const Bend& z : dec.bends) by_vertex[z.vertex].push_back(&z);
    for (const auto& [v, bs] : by_vertex) {
        if (bs.size() == 1) continue;
        if (bs.size() != 2 || bs[0]->kind == bs[1]->kind)
            throw std::invalid_argument("degenerate bends beyond a twin pair at one vertex");
    }
    int total = 0;
    for (const Bend& z : dec.bends) total += gamma_of_bend(z, dec, g);
    return total;
}

StringProducts string_products(const SnakeLinkDecomposition& dec, const SEGraph& g,
                               const CommutationTable& table) {
    if (dec.degenerate)
        throw std::invalid_argument(
            "string products need pairwise distinct bend and sink alphas; use exchange_ratio");
    auto position = [](const std::vector<int>& s, int id) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == id) return static_cast<int>(i);
        throw std::logic_error("segment missing from product string");
    };
    StringProducts out;
    for (std::size_t a = 0; a < dec.segments.size(); ++a) {
        for (std::size_t b = a + 1; b < dec.segments.size(); ++b) {
            bool before_n = position(dec.string_n, static_cast<int>(a)) <
                            position(dec.string_n, static_cast<int>(b));
            bool before_nstar = position(dec.string_nstar, static_cast<int>(a)) <
                                position(dec.string_nstar, static_cast<int>(b));
            if (before_n == before_nstar) continue;
            const Segment& A = before_n ? dec.segments[a] : dec.segments[b];
            const Segment& B = before_n ? dec.segments[b] : dec.segments[a];
            QElement wa = path_weight(A.path, g, table), wb = path_weight(B.path, g, table);
            auto k = q_ratio(mul(wa, wb, table), mul(wb, wa, table));
            if (!k) throw std::logic_error("segment weights are not q-power related");
            if (A.snake && B.snake)
                out.phiII += *k;
            else if (!A.snake && !B.snake)
                out.phiI += *k;
            else
                out.phiIII += *k;
        }
    }
    return out;
}

GammaCycleResult gamma_cycle(const ColoredCycle& d) {
    const int s = static_cast<int>(d.snakes.size());
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("colored cycle needs an even number of alternating snakes");
    for (const PolyLine& pl : d.snakes)
        if (pl.size() < 2) throw std::invalid_argument("snake with no edge");
    auto first = [&](int i) { return d.snakes[i].front(); };
    auto last = [&](int i) { return d.snakes[i].back(); };
    GammaCycleResult res;
    for (int i = 0; i < s; ++i) {
        int j = (i + 1) % s;
        bool peak = first(i) == first(j);
        bool pit = last(i) == last(j);
        if (peak && pit) {
            // a two-snake cycle shares both endpoints with its partner; the
            // first pass handles the peak and the second the pit
            if (s != 2) throw std::invalid_argument("snakes share both endpoints");
            peak = i == 0;
            pit = !peak;
        }
        if (peak == pit) throw std::invalid_argument("consecutive snakes do not share an endpoint");
        bool i_white = i % 2 == 0;
        const PolyLine& w = i_white ? d.snakes[i] : d.snakes[j];
        const PolyLine& b = i_white ? d.snakes[j] : d.snakes[i];
        std::int64_t wx, wy, bx, by;
        if (peak) {
            wx = w[1].first - w[0].first;
            wy = w[1].second - w[0].second;
            bx = b[1].first - b[0].first;
            by = b[1].second - b[0].second;
        } else {
            auto n = w.size();
            wx = w[n - 1].first - w[n - 2].first;
            wy = w[n - 1].second - w[n - 2].second;
            auto m = b.size();
            bx = b[m - 1].first - b[m - 2].first;
            by = b[m - 1].second - b[m - 2].second;
        }
        std::int64_t cr = wx * by - wy * bx;
        if (cr == 0) throw std::invalid_argument("degenerate junction: collinear snake directions");
        bool white_lower = peak ? cr > 0 : cr < 0;
        res.gamma += white_lower ? +1 : -1;
    }
    // canonical traversal: black snakes in their own direction, white reversed
    PolyLine walk;
    for (int i = 0; i < s; ++i) {
        PolyLine pl = d.snakes[i];
        if (i % 2 == 0) std::reverse(pl.begin(), pl.end());
        if (!walk.empty() && walk.back() != pl.front())
            throw std::invalid_argument("snakes do not chain into a closed walk");
        if (walk.empty())
            walk = pl;
        else
            walk.insert(walk.end(), pl.begin() + 1, pl.end());
    }
    if (walk.front() != walk.back())
        throw std::invalid_argument("snakes do not close up into a cycle");
    std::int64_t area2 = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        area2 += walk[i].first * walk[i + 1].second - walk[i + 1].first * walk[i].second;
    res.orientation = area2 < 0 ? Orientation::cw : Orientation::ccw;
    return res;
}

ColoredCycle cycle_from_component(const CycleComp& comp, const SEGraph& g) {
    if (comp.edges.empty()) throw std::invalid_argument("empty cycle component");
    const int n = static_cast<int>(comp.edges.size());
    // rotate so that a color boundary sits at position 0
    int start = 0;
    while (start < n && comp.from_first[(start + n - 1) % n] == comp.from_first[start]) ++start;
    if (start == n) throw std::invalid_argument("cycle uses a single flow only");
    std::vector<int> edges, verts;
    std::vector<char> colors;
    for (int t = 0; t < n; ++t) {
        int idx = (start + t) % n;
        edges.push_back(comp.edges[idx]);
        colors.push_back(comp.from_first[idx]);
        verts.push_back(comp.verts[idx]);
    }
    verts.push_back(verts.front());
    ColoredCycle d;
    std::vector<std::pair<bool, PolyLine>> runs;
    int i = 0;
    while (i < n) {
        int j = i;
        while (j < n && colors[j] == colors[i]) ++j;
        std::vector<int> run(edges.begin() + i, edges.begin() + j);
        std::vector<int> vs(verts.begin() + i, verts.begin() + j + 1);
        DPath p = run_to_path(run, vs, g);
        PolyLine pl;
        for (int v : p.verts) pl.emplace_back(g.vertices()[v].x, g.vertices()[v].y);
        runs.emplace_back(colors[i] != 0, pl);
        i = j;
    }
    // start from a white run so colors alternate as the type expects
    int w0 = 0;
    while (w0 < static_cast<int>(runs.size()) && !runs[w0].first) ++w0;
    if (w0 == static_cast<int>(runs.size()))
        throw std::invalid_argument("cycle has no white run");
    for (std::size_t t = 0; t < runs.size(); ++t) {
        const auto& [white, pl] = runs[(w0 + t) % runs.size()];
        if (white != (t % 2 == 0)) throw std::logic_error("cycle runs do not alternate colors");
        d.snakes.push_back(pl);
    }
    return d;
}

}  // namespace qpath
