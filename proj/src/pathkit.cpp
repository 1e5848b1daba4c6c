#include "qpath/pathkit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qpath {

namespace {

void check_path(const DPath& p, const SEGraph& g) {
    if (p.verts.empty()) throw std::invalid_argument("empty vertex sequence is not a path");
    if (p.edges.size() + 1 != p.verts.size())
        throw std::invalid_argument("path edge/vertex counts disagree");
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i] < 0 || p.edges[i] >= static_cast<int>(g.edges().size()))
            throw std::invalid_argument("path uses a foreign edge");
        const Edge& e = g.edges()[p.edges[i]];
        if (e.tail != p.verts[i] || e.head != p.verts[i + 1])
            throw std::invalid_argument("path edge does not join consecutive vertices");
    }
}

}  // namespace

QElement edge_weight(int edge_index, const SEGraph& g) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges().size()))
        throw std::invalid_argument("foreign edge");
    const Edge& e = g.edges()[edge_index];
    switch (g.orient(edge_index)) {
        case EdgeOrient::V: return QElement::one();
        case EdgeOrient::H: {
            GeneratorId gv = g.generator_of(e.head);
            if (gv < 0) throw std::invalid_argument("H-edge into a non-inner vertex");
            if (g.vertices()[e.tail].kind == VertexKind::source) return QElement::generator(gv);
            GeneratorId gu = g.generator_of(e.tail);
            QMonomial m;
            // tail is left of head, so its generator rank is smaller and the
            // exponent vector is already canonical
            m.exps = {{gu, -1}, {gv, +1}};
            return QElement::from_monomial(m);
        }
        case EdgeOrient::invalid: break;
    }
    throw std::invalid_argument("edge has no H/V orientation");
}

QElement path_weight(const DPath& p, const SEGraph& g, const CommutationTable& table) {
    check_path(p, g);
    QElement w = QElement::one();
    for (int e : p.edges) w = mul(w, edge_weight(e, g), table);
    return w;
}

QElement telescoped_weight(const DPath& p, const SEGraph& g, const CommutationTable& table) {
    check_path(p, g);
    if (g.vertices()[p.s()].kind != VertexKind::source ||
        g.vertices()[p.t()].kind != VertexKind::sink)
        throw std::invalid_argument("telescoped form needs a source-to-sink path");
    Word word;
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
        EdgeOrient a = g.orient(p.edges[i]), b = g.orient(p.edges[i + 1]);
        if (a == EdgeOrient::H && b == EdgeOrient::V)
            word.emplace_back(g.generator_of(p.verts[i + 1]), +1);
        if (a == EdgeOrient::V && b == EdgeOrient::H)
            word.emplace_back(g.generator_of(p.verts[i + 1]), -1);
    }
    return QElement::from_monomial(normalize_word(word, table));
}

EssentialForm essential_form(const DPath& p, const SEGraph& g) {
    check_path(p, g);
    bool has_h = false;
    for (int e : p.edges) has_h |= g.orient(e) == EdgeOrient::H;
    if (!has_h) throw std::invalid_argument("not standard: path has no H-edge");
    EssentialForm f;
    if (g.vertices()[p.s()].kind != VertexKind::source &&
        g.orient(p.edges.front()) == EdgeOrient::H) {
        f.verts.push_back(p.s());
        f.signs.push_back(-1);
    }
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
        EdgeOrient a = g.orient(p.edges[i]), b = g.orient(p.edges[i + 1]);
        if (a == EdgeOrient::H && b == EdgeOrient::V) {
            f.verts.push_back(p.verts[i + 1]);
            f.signs.push_back(+1);
        }
        if (a == EdgeOrient::V && b == EdgeOrient::H) {
            f.verts.push_back(p.verts[i + 1]);
            f.signs.push_back(-1);
        }
    }
    if (g.orient(p.edges.back()) == EdgeOrient::H) {
        f.verts.push_back(p.t());
        f.signs.push_back(+1);
    }
    return f;
}

QElement essential_weight(const EssentialForm& f, const SEGraph& g,
                          const CommutationTable& table) {
    Word word;
    for (std::size_t i = 0; i < f.verts.size(); ++i) {
        GeneratorId gen = g.generator_of(f.verts[i]);
        if (gen < 0) throw std::invalid_argument("essential vertex is not inner");
        word.emplace_back(gen, f.signs[i]);
    }
    return QElement::from_monomial(normalize_word(word, table));
}

std::vector<DPath> enumerate_paths_between(const SEGraph& g, int from_vertex, int to_vertex) {
    std::vector<DPath> out;
    DPath cur;
    cur.verts.push_back(from_vertex);
    // edges strictly advance (x, -y), so every walk is simple and finite
    std::function<void(int)> dfs = [&](int v) {
        if (v == to_vertex) {
            out.push_back(cur);
            return;
        }
        for (int e : g.out_edges(v)) {
            int w = g.edges()[e].head;
            cur.verts.push_back(w);
            cur.edges.push_back(e);
            dfs(w);
            cur.verts.pop_back();
            cur.edges.pop_back();
        }
    };
    dfs(from_vertex);
    return out;
}

std::vector<DPath> enumerate_paths(const SEGraph& g, int i, int j) {
    if (i < 1 || i > g.num_sources() || j < 1 || j > g.num_sinks())
        throw std::out_of_range("source or sink index out of range");
    return enumerate_paths_between(g, g.sources()[i - 1], g.sinks()[j - 1]);
}

namespace {

struct Seg {
    std::int64_t x1, y1, x2, y2;  // endpoints of an axis-aligned segment
};

// intersection of two axis-aligned segments: 0 = empty, 1 = single point
// (stored in px,py), 2 = a whole stretch
int seg_meet(const Seg& a, const Seg& b, std::int64_t& px, std::int64_t& py) {
    auto lox = [](const Seg& s) { return std::min(s.x1, s.x2); };
    auto hix = [](const Seg& s) { return std::max(s.x1, s.x2); };
    auto loy = [](const Seg& s) { return std::min(s.y1, s.y2); };
    auto hiy = [](const Seg& s) { return std::max(s.y1, s.y2); };
    std::int64_t xl = std::max(lox(a), lox(b)), xh = std::min(hix(a), hix(b));
    std::int64_t yl = std::max(loy(a), loy(b)), yh = std::min(hiy(a), hiy(b));
    bool ah = a.y1 == a.y2, bh = b.y1 == b.y2;
    bool av = a.x1 == a.x2, bv = b.x1 == b.x2;
    if (ah && bh) {
        if (a.y1 != b.y1 || xl > xh) return 0;
        if (xl == xh) {
            px = xl;
            py = a.y1;
            return 1;
        }
        return 2;
    }
    if (av && bv) {
        if (a.x1 != b.x1 || yl > yh) return 0;
        if (yl == yh) {
            px = a.x1;
            py = yl;
            return 1;
        }
        return 2;
    }
    // one horizontal, one vertical (a point segment counts as both)
    const Seg& h = ah ? a : b;
    const Seg& v = ah ? b : a;
    if (lox(h) <= v.x1 && v.x1 <= hix(h) && loy(v) <= h.y1 && h.y1 <= hiy(v)) {
        px = v.x1;
        py = h.y1;
        return 1;
    }
    return 0;
}

std::vector<Seg> segments_of(const DPath& p, const SEGraph& g) {
    std::vector<Seg> out;
    const auto& vs = g.vertices();
    if (p.edges.empty()) {
        const Vertex& v = vs[p.verts[0]];
        out.push_back({v.x, v.y, v.x, v.y});
        return out;
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Vertex& t = vs[p.verts[i]];
        const Vertex& h = vs[p.verts[i + 1]];
        out.push_back({t.x, t.y, h.x, h.y});
    }
    return out;
}

}  // namespace

bool weakly_intersecting(const DPath& p, const DPath& q, const SEGraph& g) {
    check_path(p, g);
    check_path(q, g);
    const auto& vs = g.vertices();
    std::vector<std::pair<std::int64_t, std::int64_t>> allowed;
    for (int a : {p.s(), p.t()})
        for (int b : {q.s(), q.t()})
            if (a == b) allowed.emplace_back(vs[a].x, vs[a].y);
    auto ok_point = [&](std::int64_t x, std::int64_t y) {
        for (const auto& [ax, ay] : allowed)
            if (ax == x && ay == y) return true;
        return false;
    };
    for (const Seg& sa : segments_of(p, g)) {
        for (const Seg& sb : segments_of(q, g)) {
            std::int64_t px, py;
            int kind = seg_meet(sa, sb, px, py);
            if (kind == 2) return false;
            if (kind == 1 && !ok_point(px, py)) return false;
        }
    }
    return true;
}

bool is_lower(const DPath& p, const DPath& q, const SEGraph& g) {
    check_path(p, g);
    check_path(q, g);
    const auto& vs = g.vertices();
    auto span = [&](const DPath& d) {
        std::int64_t lo = vs[d.verts[0]].x, hi = lo;
        for (int v : d.verts) {
            lo = std::min(lo, vs[v].x);
            hi = std::max(hi, vs[v].x);
        }
        return std::pair{lo, hi};
    };
    auto [plo, phi] = span(p);
    auto [qlo, qhi] = span(q);
    std::int64_t lo = std::max(plo, qlo), hi = std::min(phi, qhi);
    if (lo > hi) return false;
    // y-range of the polyline at a fixed alpha; paths are x-monotone so the
    // slice is an interval
    auto slice = [&](const DPath& d, std::int64_t a, std::int64_t& ymin, std::int64_t& ymax) {
        bool any = false;
        for (const Seg& s : segments_of(d, g)) {
            if (std::min(s.x1, s.x2) <= a && a <= std::max(s.x1, s.x2)) {
                std::int64_t yl = std::min(s.y1, s.y2), yh = std::max(s.y1, s.y2);
                if (!any) {
                    ymin = yl;
                    ymax = yh;
                    any = true;
                } else {
                    ymin = std::min(ymin, yl);
                    ymax = std::max(ymax, yh);
                }
            }
        }
        return any;
    };
    // candidate alphas: vertex alphas of both paths inside the overlap; between
    // consecutive candidates both paths run horizontally, so the comparison is
    // constant there
    std::vector<std::int64_t> cand;
    for (int v : p.verts) cand.push_back(vs[v].x);
    for (int v : q.verts) cand.push_back(vs[v].x);
    for (std::int64_t a : cand) {
        if (a < lo || a > hi) continue;
        std::int64_t pmin, pmax, qmin, qmax;
        if (slice(p, a, pmin, pmax) && slice(q, a, qmin, qmax) && pmin < qmax) return true;
    }
    return false;
}

std::int64_t varphi(const DPath& p, const DPath& q, const SEGraph& g,
                    const CommutationTable& table) {
    QElement wp = path_weight(p, g, table), wq = path_weight(q, g, table);
    auto k = q_ratio(mul(wp, wq, table), mul(wq, wp, table));
    if (!k) throw std::logic_error("path weight products are not q-power related");
    return *k;
}

}  // namespace qpath
