#pragma once

#include <vector>

#include "qpath/qtorus.hpp"
#include "qpath/segraph.hpp"

namespace qpath {

// Directed simple path: verts has one more entry than edges and edge i runs
// verts[i] -> verts[i+1]. A single vertex is the empty path.
struct DPath {
    std::vector<int> verts;
    std::vector<int> edges;
    bool operator==(const DPath&) const = default;
    int s() const { return verts.front(); }
    int t() const { return verts.back(); }
};

struct EssentialForm {
    std::vector<int> verts;   // vertex indices, in path order
    std::vector<int> signs;   // +1 or -1
};

QElement edge_weight(int edge_index, const SEGraph& g);
QElement path_weight(const DPath& p, const SEGraph& g, const CommutationTable& table);

// weight of a source-to-sink path written through its turn vertices
// u_1 v_1^{-1} u_2 ... u_d
QElement telescoped_weight(const DPath& p, const SEGraph& g, const CommutationTable& table);

// turn vertices and qualifying endpoints with their +1/-1 exponents; the
// ordered product reproduces path_weight for every path with an H-edge
EssentialForm essential_form(const DPath& p, const SEGraph& g);
QElement essential_weight(const EssentialForm& f, const SEGraph& g, const CommutationTable& table);

// all simple directed paths r_i -> c_j (1-based indices), deterministic order
std::vector<DPath> enumerate_paths(const SEGraph& g, int i, int j);
std::vector<DPath> enumerate_paths_between(const SEGraph& g, int from_vertex, int to_vertex);

// geometric intersection of the two polylines is contained in the shared
// endpoint set {s_P,t_P} & {s_Q,t_Q}
bool weakly_intersecting(const DPath& p, const DPath& q, const SEGraph& g);

// some point of p lies strictly below a point of q at the same alpha
bool is_lower(const DPath& p, const DPath& q, const SEGraph& g);

// exponent k with w(P)w(Q) = q^k w(Q)w(P)
std::int64_t varphi(const DPath& p, const DPath& q, const SEGraph& g,
                    const CommutationTable& table);

}  // namespace qpath
