#pragma once

// Small labeled graphs: hosts for poset-antichain, rainbow-matching and
// multipartite Turan instances. Vertices are 0-based internally and 1-based
// in JSON I/O, matching the set-family convention.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "combip/setfam.hpp"

namespace combip {

class LabeledGraph {
public:
    LabeledGraph() = default;
    // Throws std::invalid_argument on loops, duplicate edges, bad partite
    // labels, or intra-class edges when labels are present.
    LabeledGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::optional<std::vector<int>> partite_labels = std::nullopt);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::optional<std::vector<int>>& partite_labels() const { return partite_labels_; }
    bool has_edge(int u, int v) const;
    std::uint64_t adjacency(int v) const { return adj_[v]; }

    static LabeledGraph path(int n);
    static LabeledGraph complete(int n);
    static LabeledGraph cycle(int n);
    static LabeledGraph complete_multipartite(const std::vector<int>& part_sizes);
    static LabeledGraph empty_graph(int n);

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;                // 0-based, u < v
    std::optional<std::vector<int>> partite_labels_;        // class id per vertex
    std::vector<std::uint64_t> adj_;
};

// All r-subsets of V(g) inducing no edge, as a family over ground |V(g)|.
// Requires |V(g)| <= 30 so the result fits the SetBits representation.
Family independent_set_layer(const LabeledGraph& g, int r);

// Pairwise vertex-disjoint transversal: one edge per graph. Edges are given
// as (u,v) pairs over a shared 1-based vertex universe.
bool has_rainbow_matching(const std::vector<std::vector<std::pair<int, int>>>& graphs);

// k vertex-disjoint triangles exist in g.
bool contains_disjoint_triangles(const LabeledGraph& g, int k);

// All triangles of g as vertex masks.
std::vector<std::uint64_t> triangle_masks(const LabeledGraph& g);

}  // namespace combip
