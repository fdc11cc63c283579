#include <algorithm>
#include <set>
#include <stdexcept>

#include "encoder_util.hpp"

namespace combip {

using detail::add_set_var;
using detail::set_name;

namespace {

std::vector<int> normalized_sizes(int n, std::vector<int> sizes) {
    if (sizes.empty()) {
        sizes.resize(n + 1);
        for (int i = 0; i <= n; ++i) sizes[i] = i;
        return sizes;
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (int s : sizes)
        if (s < 0 || s > n) throw std::invalid_argument("size out of range");
    return sizes;
}

// Chains A1 c A2 c ... c A_len inside `sets` (indices into the var array);
// emits one all-ones <= len-1 constraint per chain.
void add_chain_constraints(IlpModel& model, const std::vector<SetBits>& sets, int len) {
    // Order by cardinality so chains extend forward only.
    std::vector<int> order(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = popcount32(sets[a]), pb = popcount32(sets[b]);
        return pa != pb ? pa < pb : sets[a] < sets[b];
    });
    std::vector<std::vector<int>> supersets(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const SetBits a = sets[order[i]], b = sets[order[j]];
            if (a != b && (a & b) == a) supersets[order[i]].push_back(order[j]);
        }
    std::vector<std::pair<int, long long>> chain;
    auto extend = [&](auto&& self, int var) -> void {
        chain.emplace_back(var, 1);
        if (static_cast<int>(chain.size()) == len) {
            model.add_constraint(chain, Cmp::LE, len - 1);
        } else {
            for (int next : supersets[var]) {
                // next must contain the chain's top element (it does by
                // construction: supersets of var).
                self(self, next);
            }
        }
        chain.pop_back();
    };
    for (int v : order) extend(extend, v);
}

}  // namespace

EncodedModel enc_sperner(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("enc_sperner: need 1 <= n <= 14");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = SpernerSpec{n};
    const SetBits total = SetBits{1} << n;
    for (SetBits s = 0; s < total; ++s) add_set_var(em, s, 0, "x", 1);
    for (SetBits b = 1; b < total; ++b) {
        // every proper subset of b, the empty set included
        SetBits a = (b - 1) & b;
        while (true) {
            em.model.add_constraint({{static_cast<int>(a), 1}, {static_cast<int>(b), 1}},
                                    Cmp::LE, 1);
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
    return em;
}

EncodedModel enc_poset_antichain(const LabeledGraph& g, const std::vector<int>& layers,
                                 int chain_len) {
    if (g.vertex_count() > 26)
        throw std::invalid_argument("enc_poset_antichain: vertex count exceeds 26");
    if (chain_len < 2) throw std::invalid_argument("enc_poset_antichain: chain_len >= 2");
    const std::vector<int> wanted = normalized_sizes(g.vertex_count(), layers);
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = PosetAntichainSpec{g, wanted, chain_len};
    std::vector<SetBits> sets;
    for (int r : wanted) {
        const Family layer = independent_set_layer(g, r);
        for (SetBits s : layer.members()) {
            add_set_var(em, s, 0, "x", 1);
            sets.push_back(s);
        }
    }
    add_chain_constraints(em.model, sets, chain_len);
    return em;
}

EncodedModel enc_neighborhood(int n, int r, int k, int d, long long m,
                              bool maximize_neighborhood) {
    if (n < 1 || n > 16) throw std::invalid_argument("enc_neighborhood: need 1 <= n <= 16");
    if (r < 0 || r > n || k < 0 || k > n || d < 0)
        throw std::invalid_argument("enc_neighborhood: bad layer parameters");
    if (m < 0 || m > binomial(n, r))
        throw std::invalid_argument("enc_neighborhood: family size m out of range");
    EncodedModel em;
    em.model = IlpModel(maximize_neighborhood ? Sense::Maximize : Sense::Minimize);
    em.provenance = NeighborhoodSpec{n, r, k, d, m, maximize_neighborhood};

    std::vector<int> xs, ys;
    std::vector<SetBits> xsets, ysets;
    for_each_subset_of_size(n, r, [&](SetBits s) {
        xs.push_back(add_set_var(em, s, 0, "x", 0));
        xsets.push_back(s);
    });
    for_each_subset_of_size(n, k, [&](SetBits s) {
        ys.push_back(add_set_var(em, s, 1, "y", 1));
        ysets.push_back(s);
    });

    std::vector<std::pair<int, long long>> size_terms;
    for (int x : xs) size_terms.emplace_back(x, 1);
    em.model.add_constraint(size_terms, Cmp::EQ, m);

    for (std::size_t bi = 0; bi < ysets.size(); ++bi) {
        if (maximize_neighborhood) {
            std::vector<std::pair<int, long long>> terms{{ys[bi], 1}};
            for (std::size_t ai = 0; ai < xsets.size(); ++ai)
                if (popcount32(xsets[ai] ^ ysets[bi]) == d) terms.emplace_back(xs[ai], -1);
            em.model.add_constraint(std::move(terms), Cmp::LE, 0);
        } else {
            for (std::size_t ai = 0; ai < xsets.size(); ++ai)
                if (popcount32(xsets[ai] ^ ysets[bi]) == d)
                    em.model.add_constraint({{ys[bi], 1}, {xs[ai], -1}}, Cmp::GE, 0);
        }
    }
    return em;
}

EncodedModel enc_diameter_antichain(int n, int d, int chain_len) {
    if (n < 1 || n > 10) throw std::invalid_argument("enc_diameter_antichain: need n <= 10");
    if (chain_len < 2 || chain_len > 4)
        throw std::invalid_argument("enc_diameter_antichain: chain_len in {2,3,4}");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = DiameterAntichainSpec{n, d, chain_len};
    const SetBits total = SetBits{1} << n;
    for (SetBits s = 0; s < total; ++s) add_set_var(em, s, 0, "x", 1);

    // chain constraints of exact length chain_len
    if (chain_len == 2) {
        for (SetBits b = 1; b < total; ++b) {
            SetBits a = (b - 1) & b;
            while (true) {
                em.model.add_constraint({{static_cast<int>(a), 1}, {static_cast<int>(b), 1}},
                                        Cmp::LE, 1);
                if (a == 0) break;
                a = (a - 1) & b;
            }
        }
    } else if (chain_len == 3) {
        for (SetBits b = 1; b < total; ++b) {
            const SetBits comp = ~b & (total - 1);
            SetBits a = (b - 1) & b;
            while (true) {
                // supersets c = b | t with t a nonempty subset of comp
                for (SetBits t = comp; t; t = (t - 1) & comp) {
                    const SetBits c = b | t;
                    em.model.add_constraint(
                        {{static_cast<int>(a), 1}, {static_cast<int>(b), 1},
                         {static_cast<int>(c), 1}},
                        Cmp::LE, 2);
                }
                if (a == 0) break;
                a = (a - 1) & b;
            }
        }
    } else {
        for (SetBits b = 1; b < total; ++b) {
            SetBits a = (b - 1) & b;
            while (true) {
                const SetBits comp_b = ~b & (total - 1);
                for (SetBits t = comp_b; t; t = (t - 1) & comp_b) {
                    const SetBits c = b | t;
                    const SetBits comp_c = ~c & (total - 1);
                    for (SetBits u = comp_c; u; u = (u - 1) & comp_c) {
                        const SetBits e = c | u;
                        em.model.add_constraint(
                            {{static_cast<int>(a), 1}, {static_cast<int>(b), 1},
                             {static_cast<int>(c), 1}, {static_cast<int>(e), 1}},
                            Cmp::LE, 3);
                    }
                }
                if (a == 0) break;
                a = (a - 1) & b;
            }
        }
    }

    for (SetBits a = 0; a < total; ++a)
        for (SetBits b = a + 1; b < total; ++b)
            if (popcount32(a ^ b) > d)
                em.model.add_constraint({{static_cast<int>(a), 1}, {static_cast<int>(b), 1}},
                                        Cmp::LE, 1);
    return em;
}

namespace {

// Shared core of the diversity encoders: intersecting pair constraints,
// anchoring of the maximum degree at element 1, objective = sets avoiding 1.
void build_diversity_model(EncodedModel& em, int n, const std::vector<SetBits>& sets) {
    for (SetBits s : sets) add_set_var(em, s, 0, "x", (s & 1u) ? 0 : 1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0)
                em.model.add_constraint(
                    {{static_cast<int>(i), 1}, {static_cast<int>(j), 1}}, Cmp::LE, 1);
    for (int e = 2; e <= n; ++e) {
        std::vector<std::pair<int, long long>> terms;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const bool has1 = sets[i] & 1u;
            const bool hase = (sets[i] >> (e - 1)) & 1u;
            if (!has1 && hase) terms.emplace_back(static_cast<int>(i), 1);
            else if (has1 && !hase) terms.emplace_back(static_cast<int>(i), -1);
        }
        if (!terms.empty()) em.model.add_constraint(std::move(terms), Cmp::LE, 0);
    }
}

}  // namespace

EncodedModel enc_diversity_uniform(int n, int k) {
    if (n < 1 || n > 12) throw std::invalid_argument("enc_diversity_uniform: need n <= 12");
    if (k < 1 || k > n) throw std::invalid_argument("enc_diversity_uniform: bad k");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = DiversityUniformSpec{n, k};
    std::vector<SetBits> sets;
    for_each_subset_of_size(n, k, [&](SetBits s) { sets.push_back(s); });
    build_diversity_model(em, n, sets);
    return em;
}

EncodedModel enc_diversity_full(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enc_diversity_full: need n <= 10");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = DiversityFullSpec{n};
    std::vector<SetBits> sets;
    for (SetBits s = 0; s < (SetBits{1} << n); ++s) sets.push_back(s);
    build_diversity_model(em, n, sets);
    return em;
}

EncodedModel enc_bipartite_ekr(int n1, int n2, int k, int l, BipartiteEkrMode mode) {
    if (n1 < 1 || n2 < 1 || n1 + n2 > kMaxGround)
        throw std::invalid_argument("enc_bipartite_ekr: ground too large");
    if (k < 1 || l < 1 || k > n1 || l > n2)
        throw std::invalid_argument("enc_bipartite_ekr: bad uniformities");
    if (2 * k > n1 || 2 * l > n2)
        throw std::invalid_argument("enc_bipartite_ekr: need 2k <= n1 and 2l <= n2");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = BipartiteEkrSpec{n1, n2, k, l, mode};

    std::vector<SetBits> sets;
    for_each_subset_of_size(n1, k, [&](SetBits a) {
        for_each_subset_of_size(n2, l, [&](SetBits b) {
            sets.push_back(a | (b << n1));
        });
    });
    std::sort(sets.begin(), sets.end());
    for (SetBits s : sets) add_set_var(em, s, 0, "x", 1);

    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0)
                em.model.add_constraint(
                    {{static_cast<int>(i), 1}, {static_cast<int>(j), 1}}, Cmp::LE, 1);

    const int n = n1 + n2;
    if (mode == BipartiteEkrMode::Nontrivial) {
        for (int e = 1; e <= n; ++e) {
            std::vector<std::pair<int, long long>> terms;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (!((sets[i] >> (e - 1)) & 1u)) terms.emplace_back(static_cast<int>(i), 1);
            em.model.add_constraint(std::move(terms), Cmp::GE, 1);
        }
    } else {
        const SetBits l1 = (SetBits{1} << k) - 1;
        const SetBits l2 = l1 << k;
        const SetBits r1 = ((SetBits{1} << l) - 1) << n1;
        const SetBits r2 = r1 << l;
        for (SetBits witness : {l1, l2, r1, r2}) {
            std::vector<std::pair<int, long long>> terms;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if ((sets[i] & witness) == witness) terms.emplace_back(static_cast<int>(i), 1);
            em.model.add_constraint(std::move(terms), Cmp::GE, 1);
        }
    }
    return em;
}

Family multipart_ground_family(const std::vector<int>& parts, const std::vector<int>& quotas,
                               int k) {
    if (parts.empty() || parts.size() != quotas.size())
        throw std::invalid_argument("multipart family: parts/quotas mismatch");
    int n = 0;
    long long quota_sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || quotas[i] < 0 || quotas[i] > parts[i])
            throw std::invalid_argument("multipart family: bad part/quota");
        n += parts[i];
        quota_sum += quotas[i];
    }
    if (n > kMaxGround) throw std::invalid_argument("multipart family: ground too large");
    if (k < quota_sum || k > n) throw std::invalid_argument("multipart family: bad k");

    std::vector<SetBits> part_mask(parts.size(), 0);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        part_mask[i] = ((SetBits{1} << parts[i]) - 1) << offset;
        offset += parts[i];
    }
    std::vector<SetBits> members;
    for_each_subset_of_size(n, k, [&](SetBits s) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (popcount32(s & part_mask[i]) < quotas[i]) return;
        members.push_back(s);
    });
    return Family(n, std::move(members));
}

long long max_star(const Family& f) {
    if (f.empty()) return 0;
    return static_cast<long long>(f.size()) - diversity(f).diversity;
}

EncodedModel enc_multipart_ekr(const std::vector<int>& parts, const std::vector<int>& quotas,
                               int k) {
    const Family h = multipart_ground_family(parts, quotas, k);
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = MultipartEkrSpec{parts, quotas, k};
    for (SetBits s : h.members()) add_set_var(em, s, 0, "x", 1);
    const auto& sets = h.members();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0)
                em.model.add_constraint(
                    {{static_cast<int>(i), 1}, {static_cast<int>(j), 1}}, Cmp::LE, 1);
    return em;
}

EncodedModel enc_forb(int m, const PatternMatrix& pattern, const std::vector<int>& sizes,
                      const std::vector<int>& assumed_sizes) {
    if (m < 1 || m > 9) throw std::invalid_argument("enc_forb: need 1 <= m <= 9");
    const std::vector<int> search = normalized_sizes(m, sizes);
    std::vector<int> assumed(assumed_sizes);
    std::sort(assumed.begin(), assumed.end());
    for (int s : assumed) {
        if (s < 0 || s > m) throw std::invalid_argument("enc_forb: assumed size out of range");
        if (std::binary_search(search.begin(), search.end(), s))
            throw std::invalid_argument("enc_forb: assumed size also searched");
    }

    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = ForbSpec{m, pattern, search, assumed};

    std::vector<SetBits> sets;
    std::vector<char> is_assumed;
    for (int s : search)
        for_each_subset_of_size(m, s, [&](SetBits b) {
            sets.push_back(b);
            is_assumed.push_back(0);
        });
    for (int s : assumed)
        for_each_subset_of_size(m, s, [&](SetBits b) {
            sets.push_back(b);
            is_assumed.push_back(1);
        });
    // keep bitmask order for naming/decoding stability
    std::vector<int> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sets[a] < sets[b]; });
    std::vector<SetBits> vsets(sets.size());
    std::vector<char> vassumed(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        vsets[i] = sets[order[i]];
        vassumed[i] = is_assumed[order[i]];
    }
    for (std::size_t i = 0; i < vsets.size(); ++i) {
        const int idx = add_set_var(em, vsets[i], 0, "x", 1);
        if (vassumed[i]) em.prefixed[idx] = 1;
    }
    em.restricted_search = !assumed.empty();

    const PatternMatrix anstee = anstee_pattern();
    const bool fast = pattern.rows == anstee.rows && pattern.cols == anstee.cols &&
                      pattern.entries == anstee.entries;
    if (fast) {
        // Bucket quadruples by a common pair; count each quadruple once, at
        // the two lowest elements of its full intersection.
        std::vector<int> bucket;
        for_each_subset_of_size(m, 2, [&](SetBits pair) {
            bucket.clear();
            for (std::size_t i = 0; i < vsets.size(); ++i)
                if ((vsets[i] & pair) == pair) bucket.push_back(static_cast<int>(i));
            const std::size_t bs = bucket.size();
            for (std::size_t a = 0; a < bs; ++a)
                for (std::size_t b = a + 1; b < bs; ++b) {
                    const SetBits iab = vsets[bucket[a]] & vsets[bucket[b]];
                    for (std::size_t c = b + 1; c < bs; ++c) {
                        const SetBits iabc = iab & vsets[bucket[c]];
                        if (popcount32(iabc) < 2) continue;
                        for (std::size_t dq = c + 1; dq < bs; ++dq) {
                            const SetBits common = iabc & vsets[bucket[dq]];
                            if (popcount32(common) < 2) continue;
                            // lowest two common elements must equal `pair`
                            SetBits low2 = common & (common - 1);
                            low2 = common ^ (low2 & (low2 - 1));
                            if (low2 != pair) continue;
                            const SetBits s1 = vsets[bucket[a]], s2 = vsets[bucket[b]],
                                          s3 = vsets[bucket[c]], s4 = vsets[bucket[dq]];
                            const SetBits two = (s1 & s2) | (s1 & s3) | (s1 & s4) |
                                                (s2 & s3) | (s2 & s4) | (s3 & s4);
                            if (((s1 | s2 | s3 | s4) & ~two) == 0) continue;
                            em.model.add_constraint({{bucket[a], 1},
                                                     {bucket[b], 1},
                                                     {bucket[c], 1},
                                                     {bucket[dq], 1}},
                                                    Cmp::LE, 3);
                        }
                    }
                }
        });
    } else {
        // Generic pattern: test every cols-tuple with the configuration
        // backtracker.
        const int cols = pattern.cols;
        if (cols > static_cast<int>(vsets.size()))
            return em;
        double tuples = 1;
        for (int i = 0; i < cols; ++i)
            tuples *= static_cast<double>(vsets.size() - i) / (i + 1);
        if (tuples > 5e6)
            throw std::invalid_argument("enc_forb: generic pattern tuple space too large");
        std::vector<int> pick(cols);
        auto rec = [&](auto&& self, int depth, int start) -> void {
            if (depth == cols) {
                std::vector<SetBits> tuple;
                for (int i : pick) tuple.push_back(vsets[i]);
                if (has_configuration(Family(m, tuple), pattern)) {
                    std::vector<std::pair<int, long long>> terms;
                    for (int i : pick) terms.emplace_back(i, 1);
                    em.model.add_constraint(std::move(terms), Cmp::LE, cols - 1);
                }
                return;
            }
            for (int i = start; i < static_cast<int>(vsets.size()); ++i) {
                pick[depth] = i;
                self(self, depth + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return em;
}

EncodedModel enc_design(int m, int block_size, int lambda, const Family& required_blocks) {
    if (m < 2 || m > 16) throw std::invalid_argument("enc_design: need 2 <= m <= 16");
    if (block_size < 2 || block_size > m)
        throw std::invalid_argument("enc_design: bad block size");
    if (lambda < 1) throw std::invalid_argument("enc_design: lambda >= 1");
    const long long pair_slots = static_cast<long long>(lambda) * binomial(m, 2);
    if (pair_slots % binomial(block_size, 2) != 0)
        throw std::invalid_argument("enc_design: divisibility condition fails");
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    std::vector<std::vector<int>> req_lists;
    for (SetBits b : required_blocks.members()) req_lists.push_back(element_list(b));
    em.provenance = DesignSpec{m, block_size, lambda, req_lists};

    std::vector<SetBits> blocks;
    for_each_subset_of_size(m, block_size, [&](SetBits b) {
        blocks.push_back(b);
        add_set_var(em, b, 0, "x", 0);
    });
    for_each_subset_of_size(m, 2, [&](SetBits pair) {
        std::vector<std::pair<int, long long>> terms;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if ((blocks[i] & pair) == pair) terms.emplace_back(static_cast<int>(i), 1);
        em.model.add_constraint(std::move(terms), Cmp::EQ, lambda);
    });
    for (SetBits b : required_blocks.members()) {
        if (required_blocks.ground() != m || popcount32(b) != block_size)
            throw std::invalid_argument("enc_design: required block has wrong shape");
        const auto it = std::lower_bound(blocks.begin(), blocks.end(), b);
        const int idx = static_cast<int>(it - blocks.begin());
        em.model.add_constraint({{idx, 1}}, Cmp::EQ, 1);
    }
    return em;
}

EncodedModel enc_kleitman(int n, int s, const std::vector<int>& sizes) {
    if (n < 1 || n > 10) throw std::invalid_argument("enc_kleitman: need n <= 10");
    if (s < 2) throw std::invalid_argument("enc_kleitman: need s >= 2");
    const std::vector<int> wanted = normalized_sizes(n, sizes);
    EncodedModel em;
    em.model = IlpModel(Sense::Maximize);
    em.provenance = KleitmanSpec{n, s, wanted};
    em.restricted_search = static_cast<int>(wanted.size()) != n + 1;

    std::vector<SetBits> sets;
    for (int r : wanted)
        for_each_subset_of_size(n, r, [&](SetBits b) { sets.push_back(b); });
    std::sort(sets.begin(), sets.end());
    for (SetBits b : sets) add_set_var(em, b, 0, "x", 1);

    // ascending-size order for capacity pruning during tuple enumeration
    std::vector<int> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = popcount32(sets[a]), pb = popcount32(sets[b]);
        return pa != pb ? pa < pb : sets[a] < sets[b];
    });
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t start, SetBits used, int left) -> void {
        if (left == 0) {
            std::vector<std::pair<int, long long>> terms;
            for (int v : chosen) terms.emplace_back(v, 1);
            em.model.add_constraint(std::move(terms), Cmp::LE, s - 1);
            return;
        }
        const int free = n - popcount32(used);
        for (std::size_t i = start; i < order.size(); ++i) {
            const SetBits b = sets[order[i]];
            if (popcount32(b) > free) break;  // ascending sizes
            if (b & used) continue;
            chosen.push_back(order[i]);
            self(self, i + 1, used | b, left - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0, s);
    return em;
}

}  // namespace combip
