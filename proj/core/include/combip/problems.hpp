#pragma once

// One encoder per problem family: a parameter record goes in, a 0-1 model
// with a variable/object map comes out. Solving the model answers the
// corresponding extremal question at those parameters.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "combip/graph.hpp"
#include "combip/ilp.hpp"
#include "combip/relax.hpp"
#include "combip/setfam.hpp"

namespace combip {

struct SpernerSpec {
    int n;
};
struct PosetAntichainSpec {
    LabeledGraph graph;
    std::vector<int> layers;  // empty = all layers
    int chain_len = 2;
};
struct NeighborhoodSpec {
    int n, r, k, d;
    long long m;
    bool maximize_neighborhood = false;  // default: minimize |N_d(F) ∩ k-layer|
};
struct ColoringSpec {
    LabeledGraph graph;
    int colors;
};
struct UnionFreeCoverSpec {
    int n;
    int classes;
};
struct BoxPartitionSpec {
    std::vector<int> dims;
    bool odd_only = false;
    bool pair_constraints = true;
};
struct GeodesicBlockerSpec {
    int n;
};
struct DiameterAntichainSpec {
    int n, d, chain_len;
};
struct DiversityUniformSpec {
    int n, k;
};
struct DiversityFullSpec {
    int n;
};
enum class BipartiteEkrMode { Nontrivial, TwoSided };
struct BipartiteEkrSpec {
    int n1, n2, k, l;
    BipartiteEkrMode mode = BipartiteEkrMode::Nontrivial;
};
struct MultipartEkrSpec {
    std::vector<int> parts;
    std::vector<int> quotas;
    int k;
};
struct ForbSpec {
    int m;
    PatternMatrix pattern;           // defaults to the forbidden 3x4 trace
    std::vector<int> sizes;          // searched layer sizes
    std::vector<int> assumed_sizes;  // layers assumed present (vars pre-fixed to 1)
};
struct DesignSpec {
    int m;
    int block_size;
    int lambda;
    std::vector<std::vector<int>> required_blocks;  // 1-based element lists
};
struct KleitmanSpec {
    int n, s;
    std::vector<int> sizes;  // empty = all sizes 0..n
};
struct RainbowSpec {
    int n, k, d;
    std::vector<std::vector<int>> left_sets;  // L_i, 1-based
};
struct MultipartiteTuranSpec {
    std::vector<int> parts;  // 3 or 4 part sizes
    int k;
};

using ProblemSpec =
    std::variant<SpernerSpec, PosetAntichainSpec, NeighborhoodSpec, ColoringSpec,
                 UnionFreeCoverSpec, BoxPartitionSpec, GeodesicBlockerSpec,
                 DiameterAntichainSpec, DiversityUniformSpec, DiversityFullSpec,
                 BipartiteEkrSpec, MultipartEkrSpec, ForbSpec, DesignSpec, KleitmanSpec,
                 RainbowSpec, MultipartiteTuranSpec>;

std::string problem_tag(const ProblemSpec& spec);

struct EncodedModel {
    IlpModel model;
    ProblemSpec provenance;
    // var_group distinguishes families/graphs/classes within one model
    // (e.g. the class index for covering models, the graph index for rainbow
    // systems, 0/1 for x- vs y-variables). var_code carries the encoded
    // object: set bits, a packed edge (u<<8|v, 1-based), or packed box masks.
    std::vector<int> var_group;
    std::vector<std::uint64_t> var_code;
    // Interchangeable variable blocks (class symmetry), aligned per object;
    // consumed by add_symmetry_breaking.
    std::vector<std::vector<int>> symmetry_blocks;
    Fixings prefixed;                // heuristic pre-fixings (RESTRICTED mode)
    bool restricted_search = false;  // result is a bound, not the full optimum
};

// ---------------------------------------------------------------------------
// Encoders
// ---------------------------------------------------------------------------
EncodedModel enc_sperner(int n);
EncodedModel enc_poset_antichain(const LabeledGraph& g, const std::vector<int>& layers,
                                 int chain_len = 2);
EncodedModel enc_neighborhood(int n, int r, int k, int d, long long m,
                              bool maximize_neighborhood = false);
EncodedModel enc_coloring(const LabeledGraph& g, int colors);
EncodedModel enc_unionfree_cover(int n, int classes);
EncodedModel enc_box_partition(const std::vector<int>& dims, bool odd_only,
                               bool pair_constraints = true);
EncodedModel enc_geodesic_blocker(int n);
EncodedModel enc_diameter_antichain(int n, int d, int chain_len);
EncodedModel enc_diversity_uniform(int n, int k);
EncodedModel enc_diversity_full(int n);
EncodedModel enc_bipartite_ekr(int n1, int n2, int k, int l, BipartiteEkrMode mode);
EncodedModel enc_multipart_ekr(const std::vector<int>& parts, const std::vector<int>& quotas,
                               int k);
EncodedModel enc_forb(int m, const PatternMatrix& pattern, const std::vector<int>& sizes,
                      const std::vector<int>& assumed_sizes = {});
EncodedModel enc_design(int m, int block_size, int lambda, const Family& required_blocks);
EncodedModel enc_kleitman(int n, int s, const std::vector<int>& sizes);
EncodedModel enc_rainbow(int n, int k, int d, const std::vector<std::vector<int>>& left_sets);
EncodedModel enc_multipartite_turan(const std::vector<int>& parts, int k);

// Builds the model for a parsed ProblemSpec.
EncodedModel encode(const ProblemSpec& spec);

// ---------------------------------------------------------------------------
// Companions
// ---------------------------------------------------------------------------

// The set family H = {F in binom([n],k) : |F ∩ X_i| >= k_i}, parts laid out
// consecutively from element 1.
Family multipart_ground_family(const std::vector<int>& parts, const std::vector<int>& quotas,
                               int k);

// Size of the largest star (max element degree).
long long max_star(const Family& f);

// Layer range (n-1)/4 < r < (n+2)/3 that provably hosts a maximum antichain
// of the path poset.
std::vector<int> falgas_layers(int n);

// Lexicographic block-ordering constraints for models whose symmetry_blocks
// declare interchangeable classes. Off by default; never changes the optimum.
void add_symmetry_breaking(EncodedModel& em);

// Decode the variables of `group` that are set to 1 into a family over
// ground size n (var_code holds set bits).
Family decode_family(const EncodedModel& em, const Assignment& a, int group, int ground);

// Decode packed-edge variables of `group` into 1-based edges.
std::vector<std::pair<int, int>> decode_edges(const EncodedModel& em, const Assignment& a,
                                              int group);

}  // namespace combip
