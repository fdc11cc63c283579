#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "encoder_util.hpp"

namespace combip {

using detail::add_set_var;
using detail::pack_edge;
using detail::set_name;

EncodedModel enc_coloring(const LabeledGraph& g, int colors) {
    if (colors < 1) throw std::invalid_argument("enc_coloring: need colors >= 1");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = ColoringSpec{g, colors};
    const int n = g.vertex_count();
    em.symmetry_blocks.assign(colors, {});
    for (int c = 0; c < colors; ++c)
        for (int v = 0; v < n; ++v) {
            const int idx = em.model.add_binary_var(
                "x_v" + std::to_string(v + 1) + "_c" + std::to_string(c + 1));
            em.model.set_objective_coeff(idx, 1);
            em.var_group.push_back(c);
            em.var_code.push_back(static_cast<std::uint64_t>(v + 1));
            em.symmetry_blocks[c].push_back(idx);
        }
    auto var_of = [&](int c, int v) { return c * n + v; };
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, long long>> terms;
        for (int c = 0; c < colors; ++c) terms.emplace_back(var_of(c, v), 1);
        em.model.add_constraint(std::move(terms), Cmp::LE, 1);
    }
    for (auto [u, v] : g.edges())
        for (int c = 0; c < colors; ++c)
            em.model.add_constraint({{var_of(c, u), 1}, {var_of(c, v), 1}}, Cmp::LE, 1);
    return em;
}

EncodedModel enc_unionfree_cover(int n, int classes) {
    if (n < 1 || n > 7) throw std::invalid_argument("enc_unionfree_cover: need 1 <= n <= 7");
    if (classes < 1) throw std::invalid_argument("enc_unionfree_cover: need classes >= 1");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = UnionFreeCoverSpec{n, classes};
    const SetBits total = SetBits{1} << n;
    em.symmetry_blocks.assign(classes, {});
    for (int c = 0; c < classes; ++c)
        for (SetBits s = 0; s < total; ++s) {
            const int idx = em.model.add_binary_var(set_name(s) + "_c" + std::to_string(c + 1));
            em.model.set_objective_coeff(idx, 1);
            em.var_group.push_back(c);
            em.var_code.push_back(s);
            em.symmetry_blocks[c].push_back(idx);
        }
    auto var_of = [&](int c, SetBits s) { return static_cast<int>(c * total + s); };
    for (SetBits s = 0; s < total; ++s) {
        std::vector<std::pair<int, long long>> terms;
        for (int c = 0; c < classes; ++c) terms.emplace_back(var_of(c, s), 1);
        em.model.add_constraint(std::move(terms), Cmp::LE, 1);
    }
    for (SetBits a = 0; a < total; ++a)
        for (SetBits b = a + 1; b < total; ++b) {
            const SetBits u = a | b;
            if (u == a || u == b) continue;  // need three distinct sets
            for (int c = 0; c < classes; ++c)
                em.model.add_constraint(
                    {{var_of(c, a), 1}, {var_of(c, b), 1}, {var_of(c, u), 1}}, Cmp::LE, 2);
        }
    return em;
}

EncodedModel enc_box_partition(const std::vector<int>& dims, bool odd_only,
                               bool pair_constraints) {
    if (dims.empty() || dims.size() > 4)
        throw std::invalid_argument("enc_box_partition: 1..4 dimensions supported");
    long long cells = 1;
    for (int d : dims) {
        if (d < 2 || d > 16) throw std::invalid_argument("enc_box_partition: axis size 2..16");
        cells *= d;
    }
    // proper nonempty subsets per axis
    std::vector<std::vector<SetBits>> axis_subsets(dims.size());
    long long boxes = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const SetBits full = (SetBits{1} << dims[i]) - 1;
        for (SetBits s = 1; s < full; ++s)
            if (!odd_only || (popcount32(s) % 2 == 1)) axis_subsets[i].push_back(s);
        boxes *= static_cast<long long>(axis_subsets[i].size());
        if (axis_subsets[i].empty())
            throw std::invalid_argument("enc_box_partition: no admissible subsets on an axis");
    }
    if (boxes > 1000000) throw std::invalid_argument("enc_box_partition: too many sub-boxes");

    EncodedModel em;
    em.model = IlpModel(Sense::Minimize);
    em.provenance = BoxPartitionSpec{dims, odd_only, pair_constraints};

    // odometer over axis subsets; var_code packs one 16-bit mask per axis
    std::vector<std::size_t> pick(dims.size(), 0);
    std::vector<std::uint64_t> codes;
    while (true) {
        std::string name = "x";
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const SetBits mask = axis_subsets[i][pick[i]];
            name += "_d" + std::to_string(i + 1);
            for (int e : element_list(mask)) name += "_" + std::to_string(e);
            code |= static_cast<std::uint64_t>(mask) << (16 * i);
        }
        const int idx = em.model.add_binary_var(name);
        em.model.set_objective_coeff(idx, 1);
        em.var_group.push_back(0);
        em.var_code.push_back(code);
        codes.push_back(code);
        std::size_t axis = 0;
        while (axis < dims.size() && ++pick[axis] == axis_subsets[axis].size()) {
            pick[axis] = 0;
            ++axis;
        }
        if (axis == dims.size()) break;
    }

    auto box_mask = [&](std::uint64_t code, std::size_t axis) {
        return static_cast<SetBits>((code >> (16 * axis)) & 0xffffu);
    };

    // exact-cover equality per cell
    std::vector<std::vector<std::pair<int, long long>>> cell_terms(
        static_cast<std::size_t>(cells));
    auto cell_index = [&](const std::vector<int>& coord) {
        long long idx = 0;
        for (std::size_t i = dims.size(); i-- > 0;) idx = idx * dims[i] + coord[i];
        return static_cast<std::size_t>(idx);
    };
    for (std::size_t b = 0; b < codes.size(); ++b) {
        std::vector<std::vector<int>> axis_elems(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            for (int e : element_list(box_mask(codes[b], i))) axis_elems[i].push_back(e - 1);
        }
        std::vector<std::size_t> c(dims.size(), 0);
        while (true) {
            std::vector<int> coord(dims.size());
            for (std::size_t i = 0; i < dims.size(); ++i) coord[i] = axis_elems[i][c[i]];
            cell_terms[cell_index(coord)].emplace_back(static_cast<int>(b), 1);
            std::size_t axis = 0;
            while (axis < dims.size() && ++c[axis] == axis_elems[axis].size()) {
                c[axis] = 0;
                ++axis;
            }
            if (axis == dims.size()) break;
        }
    }
    for (auto& terms : cell_terms) em.model.add_constraint(std::move(terms), Cmp::EQ, 1);

    if (pair_constraints) {
        for (std::size_t a = 0; a < codes.size(); ++a)
            for (std::size_t b = a + 1; b < codes.size(); ++b) {
                bool meet = true;
                for (std::size_t i = 0; i < dims.size() && meet; ++i)
                    meet = (box_mask(codes[a], i) & box_mask(codes[b], i)) != 0;
                if (meet)
                    em.model.add_constraint(
                        {{static_cast<int>(a), 1}, {static_cast<int>(b), 1}}, Cmp::LE, 1);
            }
    }
    return em;
}

EncodedModel enc_geodesic_blocker(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enc_geodesic_blocker: need 1 <= n <= 7");
    EncodedModel em;
    em.model = IlpModel(Sense::Minimize);
    em.provenance = GeodesicBlockerSpec{n};
    const SetBits total = SetBits{1} << n;
    for (SetBits s = 0; s < total; ++s) add_set_var(em, s, 0, "x", 1);

    std::set<std::vector<SetBits>> seen;
    std::vector<int> perm(n);
    for (SetBits start = 0; start < total; ++start) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<SetBits> path{start};
            SetBits cur = start;
            for (int i = 0; i < n; ++i) {
                cur ^= SetBits{1} << perm[i];
                path.push_back(cur);
            }
            std::sort(path.begin(), path.end());
            if (seen.insert(path).second) {
                std::vector<std::pair<int, long long>> terms;
                for (SetBits v : path) terms.emplace_back(static_cast<int>(v), 1);
                em.model.add_constraint(std::move(terms), Cmp::GE, 1);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return em;
}

EncodedModel enc_rainbow(int n, int k, int d,
                         const std::vector<std::vector<int>>& left_sets) {
    if (n < 2 || n > 16) throw std::invalid_argument("enc_rainbow: need 2 <= n <= 16");
    if (k < 1 || d < 0) throw std::invalid_argument("enc_rainbow: bad k or d");
    if (static_cast<int>(left_sets.size()) != k)
        throw std::invalid_argument("enc_rainbow: need one left set per graph");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = RainbowSpec{n, k, d, left_sets};

    struct Edge {
        int a, b, var;
    };
    std::vector<std::vector<Edge>> edges(k);
    for (int i = 0; i < k; ++i) {
        std::vector<char> left(n + 1, 0);
        if (left_sets[i].empty() || static_cast<int>(left_sets[i].size()) >= n)
            throw std::invalid_argument("enc_rainbow: left set must be a proper nonempty subset");
        for (int v : left_sets[i]) {
            if (v < 1 || v > n) throw std::invalid_argument("enc_rainbow: vertex out of range");
            if (left[v]) throw std::invalid_argument("enc_rainbow: duplicate vertex in left set");
            left[v] = 1;
        }
        for (int a = 1; a <= n; ++a) {
            if (!left[a]) continue;
            for (int b = 1; b <= n; ++b) {
                if (left[b]) continue;
                const int idx = em.model.add_binary_var("x_" + std::to_string(a) + "_" +
                                                        std::to_string(b) + "_g" +
                                                        std::to_string(i + 1));
                em.model.set_objective_coeff(idx, i == 0 ? 1 : 0);
                em.var_group.push_back(i);
                em.var_code.push_back(pack_edge(a, b));
                edges[i].push_back({a, b, idx});
            }
        }
    }
    // degree caps per graph and vertex
    for (int i = 0; i < k; ++i)
        for (int v = 1; v <= n; ++v) {
            std::vector<std::pair<int, long long>> terms;
            for (const Edge& e : edges[i])
                if (e.a == v || e.b == v) terms.emplace_back(e.var, 1);
            if (!terms.empty()) em.model.add_constraint(std::move(terms), Cmp::LE, d);
        }
    // size floors for every graph but the first
    for (int i = 1; i < k; ++i) {
        std::vector<std::pair<int, long long>> terms;
        for (const Edge& e : edges[i]) terms.emplace_back(e.var, 1);
        em.model.add_constraint(std::move(terms), Cmp::GE,
                                static_cast<long long>(k - 1) * d + 1);
    }
    // no rainbow matching: every disjoint transversal is capped at k-1
    std::vector<int> chosen(k);
    auto rec = [&](auto&& self, int i, std::uint32_t used) -> void {
        if (i == k) {
            std::vector<std::pair<int, long long>> terms;
            for (int v : chosen) terms.emplace_back(v, 1);
            em.model.add_constraint(std::move(terms), Cmp::LE, k - 1);
            return;
        }
        for (const Edge& e : edges[i]) {
            const std::uint32_t mask =
                (std::uint32_t{1} << (e.a - 1)) | (std::uint32_t{1} << (e.b - 1));
            if (mask & used) continue;
            chosen[i] = e.var;
            self(self, i + 1, used | mask);
        }
    };
    rec(rec, 0, 0);
    return em;
}

EncodedModel enc_multipartite_turan(const std::vector<int>& parts, int k) {
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("enc_multipartite_turan: 3 or 4 parts supported");
    if (k < 1) throw std::invalid_argument("enc_multipartite_turan: need k >= 1");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("enc_multipartite_turan: bad part size");
        n += p;
    }
    if (n > 16) throw std::invalid_argument("enc_multipartite_turan: ground too large");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = MultipartiteTuranSpec{parts, k};

    const LabeledGraph g = LabeledGraph::complete_multipartite(parts);
    std::map<std::pair<int, int>, int> edge_var;
    for (auto [u, v] : g.edges()) {
        const int idx = em.model.add_binary_var("x_" + std::to_string(u + 1) + "_" +
                                                std::to_string(v + 1));
        em.model.set_objective_coeff(idx, 1);
        em.var_group.push_back(0);
        em.var_code.push_back(pack_edge(u + 1, v + 1));
        edge_var[{u, v}] = idx;
    }
    const auto tris = triangle_masks(g);
    std::vector<std::array<int, 3>> tri_edges;
    for (std::uint64_t t : tris) {
        std::array<int, 3> vs{};
        int pos = 0;
        for (int v = 0; v < n; ++v)
            if ((t >> v) & 1) vs[pos++] = v;
        tri_edges.push_back({edge_var[{vs[0], vs[1]}], edge_var[{vs[0], vs[2]}],
                             edge_var[{vs[1], vs[2]}]});
    }
    // one constraint per vertex-disjoint k-packing of triangles
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t used, int left) -> void {
        if (left == 0) {
            std::vector<std::pair<int, long long>> terms;
            for (int t : pick)
                for (int e : tri_edges[t]) terms.emplace_back(e, 1);
            em.model.add_constraint(std::move(terms), Cmp::LE, 3LL * k - 1);
            return;
        }
        for (std::size_t t = start; t < tris.size(); ++t) {
            if (tris[t] & used) continue;
            pick.push_back(static_cast<int>(t));
            self(self, t + 1, used | tris[t], left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, 0, k);
    return em;
}

std::vector<int> falgas_layers(int n) {
    std::vector<int> layers;
    for (int r = 0; r <= n; ++r)
        if (4 * r > n - 1 && 3 * r < n + 2) layers.push_back(r);
    return layers;
}

void add_symmetry_breaking(EncodedModel& em) {
    for (std::size_t b = 1; b < em.symmetry_blocks.size(); ++b) {
        const auto& prev = em.symmetry_blocks[b - 1];
        const auto& cur = em.symmetry_blocks[b];
        for (std::size_t j = 0; j < cur.size(); ++j) {
            std::vector<std::pair<int, long long>> terms{{cur[j], 1}};
            for (std::size_t p = 0; p < j; ++p) terms.emplace_back(prev[p], -1);
            em.model.add_constraint(std::move(terms), Cmp::LE, 0);
        }
    }
}

Family decode_family(const EncodedModel& em, const Assignment& a, int group, int ground) {
    std::vector<SetBits> members;
    for (int i = 0; i < em.model.var_count(); ++i)
        if (em.var_group[i] == group && a.values[i])
            members.push_back(static_cast<SetBits>(em.var_code[i]));
    return Family(ground, std::move(members));
}

std::vector<std::pair<int, int>> decode_edges(const EncodedModel& em, const Assignment& a,
                                              int group) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < em.model.var_count(); ++i)
        if (em.var_group[i] == group && a.values[i])
            edges.emplace_back(static_cast<int>(em.var_code[i] >> 8),
                               static_cast<int>(em.var_code[i] & 0xff));
    return edges;
}

std::string problem_tag(const ProblemSpec& spec) {
    struct Visitor {
        std::string operator()(const SpernerSpec&) const { return "sperner"; }
        std::string operator()(const PosetAntichainSpec&) const { return "poset_antichain"; }
        std::string operator()(const NeighborhoodSpec&) const { return "neighborhood"; }
        std::string operator()(const ColoringSpec&) const { return "coloring"; }
        std::string operator()(const UnionFreeCoverSpec&) const { return "unionfree_cover"; }
        std::string operator()(const BoxPartitionSpec&) const { return "box_partition"; }
        std::string operator()(const GeodesicBlockerSpec&) const { return "geodesic_blocker"; }
        std::string operator()(const DiameterAntichainSpec&) const {
            return "diameter_antichain";
        }
        std::string operator()(const DiversityUniformSpec&) const { return "diversity_uniform"; }
        std::string operator()(const DiversityFullSpec&) const { return "diversity_full"; }
        std::string operator()(const BipartiteEkrSpec&) const { return "bipartite_ekr"; }
        std::string operator()(const MultipartEkrSpec&) const { return "multipart_ekr"; }
        std::string operator()(const ForbSpec&) const { return "forb"; }
        std::string operator()(const DesignSpec&) const { return "design"; }
        std::string operator()(const KleitmanSpec&) const { return "kleitman"; }
        std::string operator()(const RainbowSpec&) const { return "rainbow"; }
        std::string operator()(const MultipartiteTuranSpec&) const {
            return "multipartite_turan";
        }
    };
    return std::visit(Visitor{}, spec);
}

EncodedModel encode(const ProblemSpec& spec) {
    struct Visitor {
        EncodedModel operator()(const SpernerSpec& s) const { return enc_sperner(s.n); }
        EncodedModel operator()(const PosetAntichainSpec& s) const {
            return enc_poset_antichain(s.graph, s.layers, s.chain_len);
        }
        EncodedModel operator()(const NeighborhoodSpec& s) const {
            return enc_neighborhood(s.n, s.r, s.k, s.d, s.m, s.maximize_neighborhood);
        }
        EncodedModel operator()(const ColoringSpec& s) const {
            return enc_coloring(s.graph, s.colors);
        }
        EncodedModel operator()(const UnionFreeCoverSpec& s) const {
            return enc_unionfree_cover(s.n, s.classes);
        }
        EncodedModel operator()(const BoxPartitionSpec& s) const {
            return enc_box_partition(s.dims, s.odd_only, s.pair_constraints);
        }
        EncodedModel operator()(const GeodesicBlockerSpec& s) const {
            return enc_geodesic_blocker(s.n);
        }
        EncodedModel operator()(const DiameterAntichainSpec& s) const {
            return enc_diameter_antichain(s.n, s.d, s.chain_len);
        }
        EncodedModel operator()(const DiversityUniformSpec& s) const {
            return enc_diversity_uniform(s.n, s.k);
        }
        EncodedModel operator()(const DiversityFullSpec& s) const {
            return enc_diversity_full(s.n);
        }
        EncodedModel operator()(const BipartiteEkrSpec& s) const {
            return enc_bipartite_ekr(s.n1, s.n2, s.k, s.l, s.mode);
        }
        EncodedModel operator()(const MultipartEkrSpec& s) const {
            return enc_multipart_ekr(s.parts, s.quotas, s.k);
        }
        EncodedModel operator()(const ForbSpec& s) const {
            return enc_forb(s.m, s.pattern.rows ? s.pattern : anstee_pattern(), s.sizes,
                            s.assumed_sizes);
        }
        EncodedModel operator()(const DesignSpec& s) const {
            std::vector<SetBits> blocks;
            for (const auto& b : s.required_blocks) {
                SetBits bits = 0;
                for (int e : b) bits |= SetBits{1} << (e - 1);
                blocks.push_back(bits);
            }
            return enc_design(s.m, s.block_size, s.lambda, Family(s.m, std::move(blocks)));
        }
        EncodedModel operator()(const KleitmanSpec& s) const {
            return enc_kleitman(s.n, s.s, s.sizes);
        }
        EncodedModel operator()(const RainbowSpec& s) const {
            return enc_rainbow(s.n, s.k, s.d, s.left_sets);
        }
        EncodedModel operator()(const MultipartiteTuranSpec& s) const {
            return enc_multipartite_turan(s.parts, s.k);
        }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace combip
