#include "combip/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace combip {

LabeledGraph::LabeledGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                           std::optional<std::vector<int>> partite_labels)
    : vertex_count_(vertex_count), partite_labels_(std::move(partite_labels)) {
    if (vertex_count < 0 || vertex_count > 63)
        throw std::invalid_argument("LabeledGraph: unsupported vertex count");
    adj_.assign(static_cast<std::size_t>(vertex_count), 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("LabeledGraph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("LabeledGraph: loop edge");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("LabeledGraph: duplicate edge");
        edges_.emplace_back(u, v);
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    std::sort(edges_.begin(), edges_.end());
    if (partite_labels_) {
        if (static_cast<int>(partite_labels_->size()) != vertex_count)
            throw std::invalid_argument("LabeledGraph: partite label count mismatch");
        for (auto [u, v] : edges_)
            if ((*partite_labels_)[u] == (*partite_labels_)[v])
                throw std::invalid_argument("LabeledGraph: intra-class edge");
    }
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
    return (adj_[u] >> v) & 1u;
}

LabeledGraph LabeledGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return LabeledGraph(n, std::move(e));
}

LabeledGraph LabeledGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return LabeledGraph(n, std::move(e));
}

LabeledGraph LabeledGraph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 2) e.emplace_back(0, n - 1);
    return LabeledGraph(n, std::move(e));
}

LabeledGraph LabeledGraph::complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) n += s;
    std::vector<int> labels(n);
    int v = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) labels[v++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[i] != labels[j]) e.emplace_back(i, j);
    return LabeledGraph(n, std::move(e), labels);
}

LabeledGraph LabeledGraph::empty_graph(int n) { return LabeledGraph(n, {}); }

Family independent_set_layer(const LabeledGraph& g, int r) {
    const int n = g.vertex_count();
    if (n > kMaxGround)
        throw std::invalid_argument("independent_set_layer: vertex count exceeds 30");
    if (r > n) throw std::invalid_argument("independent_set_layer: r exceeds vertex count");
    std::vector<SetBits> members;
    for_each_subset_of_size(n, r, [&](SetBits s) {
        SetBits rest = s;
        while (rest) {
            const int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (g.adjacency(v) & s) return;
        }
        members.push_back(s);
    });
    return Family(n, std::move(members));
}

namespace {

std::uint64_t edge_mask(std::pair<int, int> e) {
    // 1-based endpoints
    return (std::uint64_t{1} << (e.first - 1)) | (std::uint64_t{1} << (e.second - 1));
}

bool rainbow_search(const std::vector<std::vector<std::pair<int, int>>>& graphs,
                    std::size_t idx, std::uint64_t used) {
    if (idx == graphs.size()) return true;
    for (const auto& e : graphs[idx]) {
        const std::uint64_t m = edge_mask(e);
        if (m & used) continue;
        if (rainbow_search(graphs, idx + 1, used | m)) return true;
    }
    return false;
}

}  // namespace

bool has_rainbow_matching(const std::vector<std::vector<std::pair<int, int>>>& graphs) {
    for (const auto& g : graphs)
        for (const auto& e : g)
            if (e.first < 1 || e.second < 1 || e.first > 64 || e.second > 64 ||
                e.first == e.second)
                throw std::invalid_argument("has_rainbow_matching: bad edge");
    return rainbow_search(graphs, 0, 0);
}

std::vector<std::uint64_t> triangle_masks(const LabeledGraph& g) {
    std::vector<std::uint64_t> out;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            std::uint64_t common = g.adjacency(a) & g.adjacency(b);
            common &= ~((std::uint64_t{2} << b) - 1);  // c > b only
            while (common) {
                const int c = __builtin_ctzll(common);
                common &= common - 1;
                out.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                              (std::uint64_t{1} << c));
            }
        }
    return out;
}

namespace {

bool triangle_pack(const std::vector<std::uint64_t>& tris, std::size_t idx,
                   std::uint64_t used, int remaining) {
    if (remaining == 0) return true;
    if (idx >= tris.size()) return false;
    if (tris.size() - idx < static_cast<std::size_t>(remaining)) return false;
    for (std::size_t i = idx; i < tris.size(); ++i) {
        if (tris[i] & used) continue;
        if (triangle_pack(tris, i + 1, used | tris[i], remaining - 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_disjoint_triangles(const LabeledGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_disjoint_triangles: k must be >= 1");
    const auto tris = triangle_masks(g);
    return triangle_pack(tris, 0, 0, k);
}

}  // namespace combip
