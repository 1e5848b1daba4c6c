#include "qpath/minors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qpath {

namespace {

void check_index(const PathMatrix& M, const MinorIndex& idx) {
    if (idx.I.size() != idx.J.size()) throw std::invalid_argument("|I| != |J|");
    for (std::size_t d = 0; d + 1 < idx.I.size(); ++d) {
        if (idx.I[d] >= idx.I[d + 1] || idx.J[d] >= idx.J[d + 1])
            throw std::invalid_argument("minor index sets must be strictly increasing");
    }
    for (int i : idx.I)
        if (i < 1 || i > M.m) throw std::invalid_argument("row index out of range");
    for (int j : idx.J)
        if (j < 1 || j > M.n) throw std::invalid_argument("column index out of range");
}

}  // namespace

PathMatrix path_matrix(const SEGraph& g, const CommutationTable& table) {
    PathMatrix M;
    M.m = g.num_sources();
    M.n = g.num_sinks();
    M.entries.assign(static_cast<std::size_t>(M.m) * M.n, QElement::zero());
    for (int i = 1; i <= M.m; ++i) {
        for (int j = 1; j <= M.n; ++j) {
            QElement sum = QElement::zero();
            for (const DPath& p : enumerate_paths(g, i, j)) sum += path_weight(p, g, table);
            M.entries[(i - 1) * M.n + (j - 1)] = sum;
        }
    }
    return M;
}

int inversions(const std::vector<int>& sigma) {
    int inv = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] > sigma[b]) ++inv;
    return inv;
}

QElement q_minor(const PathMatrix& M, const MinorIndex& idx, const CommutationTable& table) {
    check_index(M, idx);
    const int k = static_cast<int>(idx.I.size());
    std::vector<int> sigma(k);
    for (int d = 0; d < k; ++d) sigma[d] = d;
    QElement total = QElement::zero();
    do {
        QElement prod = QElement::one();
        for (int d = 0; d < k; ++d) prod = mul(prod, M.at(idx.I[d], idx.J[sigma[d]]), table);
        int ell = inversions(sigma);
        prod = scalar_q_pow(prod, ell);
        if (ell % 2 == 1) prod = prod.negated();
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

std::vector<Flow> enumerate_flows(const SEGraph& g, const MinorIndex& idx) {
    if (idx.I.size() != idx.J.size()) throw std::invalid_argument("|I| != |J|");
    const int k = static_cast<int>(idx.I.size());
    for (int i : idx.I)
        if (i < 1 || i > g.num_sources()) throw std::invalid_argument("row index out of range");
    for (int j : idx.J)
        if (j < 1 || j > g.num_sinks()) throw std::invalid_argument("column index out of range");
    std::vector<Flow> out;
    std::vector<char> used(g.vertices().size(), 0);
    std::vector<DPath> chosen;
    DPath cur;
    std::function<void(int)> next_path;
    std::function<void(int, int)> extend = [&](int d, int v) {
        if (v == g.sinks()[idx.J[d] - 1]) {
            chosen.push_back(cur);
            next_path(d + 1);
            chosen.pop_back();
            return;
        }
        for (int e : g.out_edges(v)) {
            int w = g.edges()[e].head;
            if (used[w]) continue;
            used[w] = 1;
            cur.verts.push_back(w);
            cur.edges.push_back(e);
            extend(d, w);
            cur.verts.pop_back();
            cur.edges.pop_back();
            used[w] = 0;
        }
    };
    next_path = [&](int d) {
        if (d == k) {
            out.push_back({idx.I, idx.J, chosen});
            return;
        }
        int s = g.sources()[idx.I[d] - 1];
        if (used[s]) return;
        used[s] = 1;
        DPath saved = cur;
        cur = DPath{{s}, {}};
        extend(d, s);
        cur = saved;
        used[s] = 0;
    };
    next_path(0);
    return out;
}

QElement flow_weight(const Flow& f, const SEGraph& g, const CommutationTable& table) {
    QElement w = QElement::one();
    for (const DPath& p : f.paths) w = mul(w, path_weight(p, g, table), table);
    return w;
}

std::vector<PathSystem> enumerate_path_systems(const SEGraph& g, const MinorIndex& idx) {
    if (idx.I.size() != idx.J.size()) throw std::invalid_argument("|I| != |J|");
    const int k = static_cast<int>(idx.I.size());
    std::vector<int> sigma(k);
    for (int d = 0; d < k; ++d) sigma[d] = d;
    std::vector<PathSystem> out;
    std::sort(sigma.begin(), sigma.end());
    do {
        std::vector<std::vector<DPath>> options(k);
        bool any_empty = false;
        for (int d = 0; d < k; ++d) {
            options[d] = enumerate_paths(g, idx.I[d], idx.J[sigma[d]]);
            any_empty |= options[d].empty();
        }
        if (any_empty) continue;
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
            PathSystem ps;
            ps.I = idx.I;
            ps.J = idx.J;
            ps.sigma = sigma;
            for (int d = 0; d < k; ++d) ps.paths.push_back(options[d][pick[d]]);
            out.push_back(std::move(ps));
            int d = k - 1;
            while (d >= 0 && ++pick[d] == options[d].size()) pick[d--] = 0;
            if (d < 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool is_flow(const PathSystem& ps) {
    for (std::size_t d = 0; d < ps.sigma.size(); ++d)
        if (ps.sigma[d] != static_cast<int>(d)) return false;
    std::vector<int> seen;
    for (const DPath& p : ps.paths)
        for (int v : p.verts) seen.push_back(v);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

QElement system_weight(const PathSystem& ps, const SEGraph& g, const CommutationTable& table) {
    QElement w = QElement::one();
    for (const DPath& p : ps.paths) w = mul(w, path_weight(p, g, table), table);
    return w;
}

PathSystem eta_involution(const PathSystem& ps, const SEGraph& g) {
    const int k = static_cast<int>(ps.paths.size());
    for (int d = 0; d + 1 < k; ++d) {
        const DPath& a = ps.paths[d];
        const DPath& b = ps.paths[d + 1];
        // position of the last common vertex along each path; common vertices
        // appear in the same order on both since coordinates advance strictly
        int pa = -1, pb = -1;
        for (int ia = 0; ia < static_cast<int>(a.verts.size()); ++ia)
            for (int ib = 0; ib < static_cast<int>(b.verts.size()); ++ib)
                if (a.verts[ia] == b.verts[ib] && ia > pa) {
                    pa = ia;
                    pb = ib;
                }
        if (pa < 0) continue;
        DPath na, nb;
        na.verts.assign(a.verts.begin(), a.verts.begin() + pa + 1);
        na.edges.assign(a.edges.begin(), a.edges.begin() + pa);
        na.verts.insert(na.verts.end(), b.verts.begin() + pb + 1, b.verts.end());
        na.edges.insert(na.edges.end(), b.edges.begin() + pb, b.edges.end());
        nb.verts.assign(b.verts.begin(), b.verts.begin() + pb + 1);
        nb.edges.assign(b.edges.begin(), b.edges.begin() + pb);
        nb.verts.insert(nb.verts.end(), a.verts.begin() + pa + 1, a.verts.end());
        nb.edges.insert(nb.edges.end(), a.edges.begin() + pa, a.edges.end());
        PathSystem out = ps;
        out.paths[d] = std::move(na);
        out.paths[d + 1] = std::move(nb);
        std::swap(out.sigma[d], out.sigma[d + 1]);
        (void)g;
        return out;
    }
    throw std::invalid_argument("eta is undefined on flows (no consecutive intersecting pair)");
}

LindstromReport check_lindstrom(const SEGraph& g, const MinorIndex& idx,
                                const CommutationTable& table) {
    LindstromReport rep;
    PathMatrix M = path_matrix(g, table);
    rep.minor = q_minor(M, idx, table);
    rep.flow_sum = QElement::zero();
    for (const Flow& f : enumerate_flows(g, idx)) rep.flow_sum += flow_weight(f, g, table);
    rep.equal = rep.minor == rep.flow_sum;
    return rep;
}

ManinReport check_manin(const PathMatrix& M, const CommutationTable& table) {
    ManinReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.counterexample = what;
        }
    };
    auto same = [&](const QElement& a, const QElement& b) { return a == b; };
    for (int i = 1; i <= M.m && rep.ok; ++i)
        for (int j = 1; j <= M.n && rep.ok; ++j)
            for (int k = j + 1; k <= M.n && rep.ok; ++k) {
                const QElement &a = M.at(i, j), &b = M.at(i, k);
                if (!same(mul(a, b, table), scalar_q_pow(mul(b, a, table), 1)))
                    fail("row relation fails at row " + std::to_string(i) + ", columns " +
                         std::to_string(j) + "," + std::to_string(k));
            }
    for (int j = 1; j <= M.n && rep.ok; ++j)
        for (int i = 1; i <= M.m && rep.ok; ++i)
            for (int l = i + 1; l <= M.m && rep.ok; ++l) {
                const QElement &a = M.at(i, j), &c = M.at(l, j);
                if (!same(mul(a, c, table), scalar_q_pow(mul(c, a, table), 1)))
                    fail("column relation fails at column " + std::to_string(j) + ", rows " +
                         std::to_string(i) + "," + std::to_string(l));
            }
    for (int i = 1; i <= M.m && rep.ok; ++i)
        for (int l = i + 1; l <= M.m && rep.ok; ++l)
            for (int j = 1; j <= M.n && rep.ok; ++j)
                for (int k = j + 1; k <= M.n && rep.ok; ++k) {
                    const QElement &a = M.at(i, j), &b = M.at(i, k);
                    const QElement &c = M.at(l, j), &d = M.at(l, k);
                    if (!same(mul(b, c, table), mul(c, b, table)))
                        fail("antidiagonal commutation fails at rows " + std::to_string(i) + "," +
                             std::to_string(l) + ", columns " + std::to_string(j) + "," +
                             std::to_string(k));
                    QElement lhs = mul(a, d, table) - mul(d, a, table);
                    QElement bc = mul(b, c, table);
                    QElement rhs = scalar_q_pow(bc, 1) - scalar_q_pow(bc, -1);
                    if (!same(lhs, rhs))
                        fail("diagonal commutator fails at rows " + std::to_string(i) + "," +
                             std::to_string(l) + ", columns " + std::to_string(j) + "," +
                             std::to_string(k));
                }
    return rep;
}

}  // namespace qpath
