#pragma once

#include <string>
#include <vector>

#include "qpath/pathkit.hpp"
#include "qpath/qtorus.hpp"
#include "qpath/segraph.hpp"

namespace qpath {

struct PathMatrix {
    int m = 0, n = 0;
    std::vector<QElement> entries;  // row-major, m*n
    const QElement& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
};

PathMatrix path_matrix(const SEGraph& g, const CommutationTable& table);

struct MinorIndex {
    std::vector<int> I;  // sorted row indices, 1-based
    std::vector<int> J;  // sorted column indices, 1-based
};

// sum over permutations of (-q)^{inversions} times the row-ordered entry
// product; the empty minor is 1
QElement q_minor(const PathMatrix& M, const MinorIndex& idx, const CommutationTable& table);

// paths[d] runs from r_{I[d]} to c_{J[sigma[d]]}; sigma identity plus pairwise
// disjoint paths makes a flow
struct PathSystem {
    std::vector<int> I, J;
    std::vector<DPath> paths;
    std::vector<int> sigma;  // 0-based permutation of [0,k)
};

struct Flow {
    std::vector<int> I, J;
    std::vector<DPath> paths;  // pairwise vertex-disjoint, paths[d]: r_{I[d]} -> c_{J[d]}
};

std::vector<Flow> enumerate_flows(const SEGraph& g, const MinorIndex& idx);
QElement flow_weight(const Flow& f, const SEGraph& g, const CommutationTable& table);

std::vector<PathSystem> enumerate_path_systems(const SEGraph& g, const MinorIndex& idx);
bool is_flow(const PathSystem& ps);
int inversions(const std::vector<int>& sigma);
QElement system_weight(const PathSystem& ps, const SEGraph& g, const CommutationTable& table);

// swaps the tails of the first consecutive intersecting pair after their last
// common vertex; an involution that flips the permutation length by one
PathSystem eta_involution(const PathSystem& ps, const SEGraph& g);

struct LindstromReport {
    QElement minor;
    QElement flow_sum;
    bool equal = false;
};
LindstromReport check_lindstrom(const SEGraph& g, const MinorIndex& idx,
                                const CommutationTable& table);

struct ManinReport {
    bool ok = true;
    std::string counterexample;
};
ManinReport check_manin(const PathMatrix& M, const CommutationTable& table);

}  // namespace qpath
