#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "combip/graph.hpp"
#include "combip/setfam.hpp"
#include "test_util.hpp"

using namespace combip;

namespace {

Family family_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SetBits> members;
    for (auto s : sets) members.push_back(bits_of(s));
    return Family(n, std::move(members));
}

// The 3-chain-free diameter-5 family on [6]: full 2-layer, star on the
// 3-layer, plus the co-singleton 23456.
Family diam6_family() {
    std::vector<SetBits> members;
    for_each_subset_of_size(6, 2, [&](SetBits s) { members.push_back(s); });
    for_each_subset_of_size(6, 3, [&](SetBits s) {
        if (s & 1u) members.push_back(s);
    });
    members.push_back(bits_of({2, 3, 4, 5, 6}));
    return Family(6, std::move(members));
}

// A verified triple system of multiplicity two on [6] (every pair in
// exactly two blocks; checked in its own test below).
Family ts6_blocks() {
    return family_of(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                         {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

int naive_max_disjoint(const Family& f) {
    const auto& m = f.members();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask) {
        SetBits used = 0;
        bool ok = true;
        int count = 0;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            if (m[i] & used) ok = false;
            used |= m[i];
            ++count;
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

}  // namespace

TEST_CASE("enum_subsets sizes and counts") {
    CHECK(enum_subsets(4, {2}).size() == 6);
    CHECK(enum_subsets(3, {0, 1, 2, 3}).size() == 8);
    CHECK(enum_subsets(9, {2, 3}).size() == 120);  // 36 + 84
    CHECK_THROWS_AS(enum_subsets(31, {1}), std::invalid_argument);
    CHECK_THROWS_AS(enum_subsets(4, {5}), std::invalid_argument);
    const auto f = enum_subsets(5, {2});
    CHECK(std::is_sorted(f.members().begin(), f.members().end()));
}

TEST_CASE("antichain and chain length") {
    CHECK(is_antichain(family_of(3, {{}})));
    CHECK_FALSE(is_antichain(family_of(3, {{1}, {1, 2}})));
    CHECK(longest_chain(Family(4)) == 0);
    CHECK(longest_chain(family_of(3, {{1}, {1, 2}, {1, 2, 3}})) == 3);

    const Family f = diam6_family();
    CHECK(f.size() == 26);
    CHECK_FALSE(is_antichain(f));
    CHECK(longest_chain(f) == 2);
    CHECK(diameter(f) == 5);
}

TEST_CASE("diameter basics") {
    CHECK(diameter(family_of(4, {{1, 2}})) == 0);
    CHECK(diameter(family_of(4, {{1, 2}, {3, 4}})) == 4);
    CHECK_THROWS_AS(diameter(Family(4)), std::invalid_argument);
}

TEST_CASE("diameter is relabeling invariant") {
    std::mt19937 rng(20240211);
    for (int round = 0; round < 50; ++round) {
        const Family f = testutil::random_family(rng);
        if (f.empty()) continue;
        std::vector<int> perm(f.ground());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<SetBits> relabeled;
        for (SetBits s : f.members()) {
            SetBits t = 0;
            for (int e = 0; e < f.ground(); ++e)
                if ((s >> e) & 1) t |= SetBits{1} << perm[e];
            relabeled.push_back(t);
        }
        CHECK(diameter(Family(f.ground(), relabeled)) == diameter(f));
    }
}

TEST_CASE("symmetric difference splits") {
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        const SetBits a = rng() & 0xff, b = rng() & 0xff;
        CHECK(popcount32(a ^ b) == popcount32(a & ~b) + popcount32(b & ~a));
    }
}

TEST_CASE("antichain iff chains at most 1") {
    std::mt19937 rng(99);
    for (int round = 0; round < 100; ++round) {
        const Family f = testutil::random_family(rng);
        if (f.empty()) continue;
        CHECK(is_antichain(f) == (longest_chain(f) <= 1));
    }
}

TEST_CASE("intersecting families") {
    const Family paper = family_of(7, {{2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6},
                                       {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6}});
    CHECK(paper.size() == 10);
    CHECK(is_intersecting(paper));
    CHECK_FALSE(is_intersecting(family_of(3, {{1}, {2}})));
    CHECK(is_intersecting(family_of(3, {{}})));        // vacuous singleton
    CHECK_FALSE(is_intersecting(family_of(3, {{}, {1}})));
}

TEST_CASE("diversity values and tie break") {
    // Star: all 3-sets of [7] containing 1.
    std::vector<SetBits> star;
    for_each_subset_of_size(7, 3, [&](SetBits s) {
        if (s & 1u) star.push_back(s);
    });
    const auto ds = diversity(Family(7, star));
    CHECK(ds.diversity == 0);
    CHECK(ds.argmax_element == 1);

    const Family paper = family_of(7, {{2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6},
                                       {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6}});
    const auto dp = diversity(paper);
    CHECK(dp.diversity == 5);
    CHECK(dp.argmax_element == 1);

    CHECK(diversity(family_of(3, {{1}, {2}})).argmax_element == 1);
    CHECK_THROWS_AS(diversity(Family(3)), std::invalid_argument);
}

TEST_CASE("adding a set missing the argmax grows diversity by one") {
    std::vector<SetBits> star;
    for_each_subset_of_size(7, 3, [&](SetBits s) {
        if (s & 1u) star.push_back(s);
    });
    Family f(7, star);
    const auto before = diversity(f);
    f.insert(bits_of({2, 3, 4}));
    const auto after = diversity(f);
    REQUIRE(after.argmax_element == before.argmax_element);
    CHECK(after.diversity == before.diversity + 1);
}

TEST_CASE("s-subset regularity") {
    CHECK(is_s_subset_regular(enum_subsets(5, {3}), 1));
    CHECK_FALSE(is_s_subset_regular(family_of(3, {{1, 2}}), 1));
    CHECK(is_s_subset_regular(enum_subsets(6, {0, 1, 2, 3, 4, 5, 6}), 2));
}

TEST_CASE("union-free") {
    CHECK_FALSE(is_union_free(family_of(3, {{1}, {2}, {1, 2}})));
    CHECK(is_union_free(family_of(3, {{1}, {1, 2}})));
    // Any antichain is union-free.
    std::mt19937 rng(5150);
    int checked = 0;
    while (checked < 20) {
        const Family f = testutil::random_family(rng);
        if (!is_antichain(f)) continue;
        CHECK(is_union_free(f));
        ++checked;
    }
}

TEST_CASE("max pairwise disjoint basics") {
    CHECK(max_pairwise_disjoint(family_of(4, {{1}, {2}, {3}})) == 3);
    CHECK(max_pairwise_disjoint(enum_subsets(9, {3})) == 3);
    CHECK(max_pairwise_disjoint(Family(5)) == 0);
}

TEST_CASE("max pairwise disjoint matches exhaustive search") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 60; ++round) {
        const Family f = testutil::random_family(rng, 8, 14);
        CHECK(max_pairwise_disjoint(f) == naive_max_disjoint(f));
    }
}

TEST_CASE("kleitman certificate family has no four disjoint members") {
    std::vector<SetBits> members;
    for_each_subset_of_size(9, 3, [&](SetBits s) { members.push_back(s); });
    for_each_subset_of_size(9, 2, [&](SetBits s) {
        if (s & 0b11u) members.push_back(s);
    });
    for (int r = 4; r <= 9; ++r)
        for_each_subset_of_size(9, r, [&](SetBits s) { members.push_back(s); });
    const Family f(9, std::move(members));
    CHECK(f.size() == 481);
    CHECK(max_pairwise_disjoint(f) == 3);
}

TEST_CASE("triple system of multiplicity two on [6] is valid") {
    const Family ts = ts6_blocks();
    REQUIRE(ts.size() == 10);
    for_each_subset_of_size(6, 2, [&](SetBits pair) {
        int cover = 0;
        for (SetBits b : ts.members())
            if ((b & pair) == pair) ++cover;
        CHECK(cover == 2);
    });
}

TEST_CASE("configuration detection on the VC-dimension pattern") {
    const Family power3 = enum_subsets(3, {0, 1, 2, 3});
    CHECK(has_configuration(power3, vc3_pattern()));
    CHECK_FALSE(has_configuration(enum_subsets(3, {0, 1}), vc3_pattern()));
}

TEST_CASE("configuration detection on the forbidden-trace pattern") {
    const PatternMatrix p = anstee_pattern();
    const Family small = enum_subsets(6, {0, 1, 2});
    CHECK_FALSE(has_configuration(small, p));

    const Family ts = ts6_blocks();
    std::vector<SetBits> with_design(small.members());
    for (SetBits b : ts.members()) with_design.push_back(b);
    const Family natural(6, with_design);
    CHECK_FALSE(has_configuration(natural, p));

    std::vector<SetBits> plus_full(natural.members());
    plus_full.push_back((1u << 6) - 1);
    CHECK(has_configuration(Family(6, plus_full), p));
}

TEST_CASE("configuration fast path agrees with the naive oracle") {
    std::mt19937 rng(1234);
    const PatternMatrix p = anstee_pattern();
    for (int round = 0; round < 40; ++round) {
        const Family f = testutil::random_family(rng, 7, 10);
        CHECK(has_configuration(f, p) == has_configuration_naive(f, p));
    }
}

TEST_CASE("generic configuration backtracker agrees with the naive oracle") {
    std::mt19937 rng(4321);
    for (int round = 0; round < 40; ++round) {
        const Family f = testutil::random_family(rng, 6, 8);
        std::uniform_int_distribution<int> rc(1, 3);
        const int rows = rc(rng), cols = rc(rng);
        std::vector<std::uint8_t> e(static_cast<std::size_t>(rows) * cols);
        for (auto& v : e) v = rng() & 1;
        const PatternMatrix p(rows, cols, e);
        CHECK(has_configuration(f, p) == has_configuration_naive(f, p));
    }
}

TEST_CASE("independent set layers") {
    const auto p4 = independent_set_layer(LabeledGraph::path(4), 2);
    CHECK(p4.size() == 3);
    CHECK(p4.contains(bits_of({1, 3})));
    CHECK(p4.contains(bits_of({1, 4})));
    CHECK(p4.contains(bits_of({2, 4})));

    CHECK(independent_set_layer(LabeledGraph::empty_graph(5), 2).size() == 10);
    CHECK(independent_set_layer(LabeledGraph::path(11), 3).size() == 84);
    // Counts match binom(n - r + 1, r) for paths.
    for (int n = 2; n <= 12; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(static_cast<long long>(independent_set_layer(LabeledGraph::path(n), r).size()) ==
                  binomial(n - r + 1, r));
}

TEST_CASE("rainbow matchings") {
    CHECK_FALSE(has_rainbow_matching({{{1, 2}}, {{1, 2}}}));
    CHECK(has_rainbow_matching({{{1, 2}}, {{3, 4}}}));
    const std::vector<std::pair<int, int>> f1{{1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}};
    const std::vector<std::pair<int, int>> f2{{1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}};
    const std::vector<std::pair<int, int>> f3{{1, 3}, {2, 3}, {2, 5}, {4, 6}, {5, 6}};
    CHECK_FALSE(has_rainbow_matching({f1, f2, f3}));
    // Dropping the middle graph leaves a rainbow matching for the other two.
    CHECK(has_rainbow_matching({f1, f3}));
}

TEST_CASE("disjoint triangles") {
    CHECK(contains_disjoint_triangles(LabeledGraph::complete(4), 1));
    CHECK_FALSE(contains_disjoint_triangles(LabeledGraph::complete(4), 2));
    CHECK(contains_disjoint_triangles(LabeledGraph::complete(6), 2));
    CHECK_FALSE(contains_disjoint_triangles(LabeledGraph::cycle(5), 1));
}

TEST_CASE("labeled graph validation") {
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(2, {{0, 1}}, std::vector<int>{0, 0}), std::invalid_argument);
    const auto g = LabeledGraph::complete_multipartite({2, 2});
    CHECK(g.edges().size() == 4);
}

TEST_CASE("set code validation and formatting") {
    CHECK_THROWS_AS(SetCode(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(SetCode(0, 31), std::invalid_argument);
    CHECK(set_of({1, 3, 5}, 6).to_string() == "{1,3,5}");
    CHECK(set_of({1, 3, 5}, 6).size() == 3);
    CHECK(set_of({1, 3, 5}, 6).contains(3));
    CHECK_FALSE(set_of({1, 3, 5}, 6).contains(2));
    CHECK_THROWS_AS(Family(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Family(2, {5}), std::invalid_argument);
}
