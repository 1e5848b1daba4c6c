#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpath/qtorus.hpp"

namespace qpath {

enum class VertexKind { source, sink, inner };

struct Vertex {
    std::string id;
    std::int64_t x = 0;  // alpha coordinate
    std::int64_t y = 0;  // beta coordinate
    VertexKind kind = VertexKind::inner;
    bool operator==(const Vertex&) const = default;
};

// tail/head are indices into SEGraph::vertices()
struct Edge {
    int tail = -1;
    int head = -1;
    bool operator==(const Edge&) const = default;
};

enum class EdgeOrient { H, V, invalid };

// Directed planar graph with east/south edges, sources r_1..r_m on the left
// vertical line (ordered by y ascending, so r_1 is the lowest) and sinks
// c_1..c_n on the bottom horizontal line (ordered by x ascending).
class SEGraph {
public:
    SEGraph() = default;
    SEGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& sources() const { return sources_; }  // r_1..r_m
    const std::vector<int>& sinks() const { return sinks_; }      // c_1..c_n
    const std::vector<int>& inner() const { return inner_; }      // canonical generator order
    int num_sources() const { return static_cast<int>(sources_.size()); }
    int num_sinks() const { return static_cast<int>(sinks_.size()); }

    const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }

    EdgeOrient orient(int edge_index) const;
    // generator id of an inner vertex, -1 otherwise
    GeneratorId generator_of(int v) const { return generator_of_[v]; }
    int vertex_of_generator(GeneratorId g) const { return inner_[g]; }
    int index_of(const std::string& id) const;  // -1 if absent
    std::vector<std::string> generator_names() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> sources_, sinks_, inner_;
    std::vector<std::vector<int>> out_edges_, in_edges_;
    std::vector<GeneratorId> generator_of_;
    std::map<std::string, int> id_index_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

enum class ValidationMode { strict, weak };

// strict: full SE-graph conditions (edge orientation, planarity, every
// vertex/edge on an R->C path, the shared-coordinate convention).
// weak: edges may point anywhere in the open south-east sector; only
// planarity and the R->C cover are checked.
ValidationReport validate(const SEGraph& g, ValidationMode mode = ValidationMode::strict);

// lambda from reachability over H-edges only / V-edges only
CommutationTable commutation_table(const SEGraph& g);

SEGraph full_grid(int m, int n);
SEGraph generate_grid_subgraph(int m, int n, std::uint64_t seed, double density);

// rows of '.' (white) and '#' (black); rows[0] is the top row
SEGraph cauchon_graph(const std::vector<std::string>& rows);

// reassigns integer coordinates from the horizontal/vertical chain structure
SEGraph relayout(const SEGraph& g);

SEGraph load_graph(const std::string& path);
void save_graph(const SEGraph& g, const std::string& path);
SEGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const SEGraph& g);

}  // namespace qpath
