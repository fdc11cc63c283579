#include "combip/bnb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstring>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace combip {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kIntTol = 1e-6;
constexpr double kPruneEps = 1e-6;

// ---------------------------------------------------------------------------
// Propagation over all-ones constraints:
//   LE rhs r : once r variables are 1, the rest go to 0
//   GE rhs r : once only r can still be 1, they all go to 1
//   EQ       : both rules
// ---------------------------------------------------------------------------
struct AllOnesCons {
    std::vector<int> vars;
    long long rhs;
    Cmp cmp;
};

struct Propagator {
    std::vector<AllOnesCons> cons;
    std::vector<std::vector<int>> var_cons;

    explicit Propagator(const IlpModel& model) {
        var_cons.resize(model.var_count());
        for (const auto& c : model.constraints()) {
            bool all_ones = true;
            for (auto [v, a] : c.terms)
                if (a != 1) { all_ones = false; break; }
            if (!all_ones) continue;
            AllOnesCons ac;
            ac.rhs = c.rhs;
            ac.cmp = c.cmp;
            for (auto [v, a] : c.terms) ac.vars.push_back(v);
            const int id = static_cast<int>(cons.size());
            for (int v : ac.vars) var_cons[v].push_back(id);
            cons.push_back(std::move(ac));
        }
    }

    // Returns false on detected infeasibility. `fix` is updated in place.
    bool run(std::vector<signed char>& fix) const {
        if (cons.empty()) return true;
        std::vector<int> ones(cons.size(), 0), zeros(cons.size(), 0);
        for (std::size_t c = 0; c < cons.size(); ++c)
            for (int v : cons[c].vars) {
                if (fix[v] == 1) ++ones[c];
                else if (fix[v] == 0) ++zeros[c];
            }
        std::vector<int> queue(cons.size());
        std::vector<char> queued(cons.size(), 1);
        for (std::size_t c = 0; c < cons.size(); ++c) queue[c] = static_cast<int>(c);

        auto fix_var = [&](int v, signed char val, std::vector<int>& q) -> bool {
            if (fix[v] == val) return true;
            if (fix[v] >= 0) return false;  // conflicting deduction
            fix[v] = val;
            for (int c2 : var_cons[v]) {
                if (val == 1) ++ones[c2];
                else ++zeros[c2];
                if (!queued[c2]) {
                    queued[c2] = 1;
                    q.push_back(c2);
                }
            }
            return true;
        };

        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            queued[c] = 0;
            const auto& ac = cons[c];
            const int total = static_cast<int>(ac.vars.size());
            const int free = total - ones[c] - zeros[c];
            if (ac.cmp != Cmp::GE) {  // upper side
                if (ones[c] > ac.rhs) return false;
                if (ones[c] == ac.rhs && free > 0) {
                    for (int v : ac.vars)
                        if (fix[v] < 0 && !fix_var(v, 0, queue)) return false;
                }
            }
            if (ac.cmp != Cmp::LE) {  // lower side
                const long long can = ones[c] + free;
                if (can < ac.rhs) return false;
                if (can == ac.rhs && free > 0) {
                    for (int v : ac.vars)
                        if (fix[v] < 0 && !fix_var(v, 1, queue)) return false;
                }
            }
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Conflict graph: pairs of variables that cannot both be 1, extracted from
// single constraints. Source of globally valid clique cuts.
// ---------------------------------------------------------------------------
struct ConflictGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // n rows of `words` words
    bool any_edges = false;

    bool edge(int u, int v) const {
        return (adj[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v) {
        if (u == v) return;
        adj[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        any_edges = true;
    }

    explicit ConflictGraph(const IlpModel& model) {
        n = model.var_count();
        if (n > 4096) return;  // cuts are skipped for very large models
        words = (n + 63) / 64;
        adj.assign(static_cast<std::size_t>(n) * words, 0);
        for (const auto& c : model.constraints()) {
            long long neg = 0, pos = 0;
            for (auto [v, a] : c.terms) {
                if (a < 0) neg += a;
                else pos += a;
            }
            if (c.cmp != Cmp::GE) {
                for (std::size_t i = 0; i < c.terms.size(); ++i)
                    for (std::size_t j = i + 1; j < c.terms.size(); ++j) {
                        const auto [u, au] = c.terms[i];
                        const auto [v, av] = c.terms[j];
                        if (au > 0 && av > 0 && au + av + neg > c.rhs) add_edge(u, v);
                    }
            }
            if (c.cmp != Cmp::LE) {
                for (std::size_t i = 0; i < c.terms.size(); ++i)
                    for (std::size_t j = i + 1; j < c.terms.size(); ++j) {
                        const auto [u, au] = c.terms[i];
                        const auto [v, av] = c.terms[j];
                        if (au < 0 && av < 0 && pos + au + av < c.rhs) add_edge(u, v);
                    }
            }
        }
    }

    // Greedily grow a clique through `order`, then extend maximally by index.
    std::vector<int> grow(int seed, const std::vector<int>& order) const {
        std::vector<std::uint64_t> mask(adj.begin() + static_cast<std::size_t>(seed) * words,
                                        adj.begin() + static_cast<std::size_t>(seed + 1) * words);
        std::vector<int> clique{seed};
        auto in_mask = [&](int v) { return (mask[v >> 6] >> (v & 63)) & 1u; };
        auto and_into = [&](int v) {
            const std::uint64_t* row = &adj[static_cast<std::size_t>(v) * words];
            for (int w = 0; w < words; ++w) mask[w] &= row[w];
        };
        for (int v : order) {
            if (v == seed || !in_mask(v)) continue;
            clique.push_back(v);
            and_into(v);
        }
        for (int v = 0; v < n; ++v) {
            if (in_mask(v)) {
                clique.push_back(v);
                and_into(v);
            }
        }
        std::sort(clique.begin(), clique.end());
        return clique;
    }
};

struct CutPool {
    std::vector<CutRow> cuts;
    std::unordered_set<std::size_t> seen;

    static std::size_t key(const std::vector<int>& vars, long long rhs) {
        std::size_t h = vars.size() * 37u + static_cast<std::size_t>(rhs);
        for (int v : vars) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
        return h;
    }

    bool add(std::vector<int> vars, long long rhs = 1) {
        if (!seen.insert(key(vars, rhs)).second) return false;
        cuts.push_back(CutRow{std::move(vars), rhs});
        return true;
    }
};

// All-ones constraints of arity rhs+1 behave like hyperedges of a
// (rhs+1)-uniform conflict hypergraph: any variable set whose (rhs+1)-subsets
// are all forbidden satisfies sum <= rhs. Greedy growth along the fractional
// point yields strong cuts for models with no pairwise conflicts at all.
struct HyperConflicts {
    struct TupleHash {
        std::size_t operator()(const std::vector<int>& t) const {
            std::size_t h = t.size();
            for (int v : t) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
            return h;
        }
    };
    struct Family {
        std::vector<std::vector<int>> tuples;
        std::unordered_set<std::vector<int>, TupleHash> lookup;
    };
    std::map<int, Family> families;  // keyed by arity (= rhs+1)

    explicit HyperConflicts(const IlpModel& model) {
        for (const auto& c : model.constraints()) {
            if (c.cmp != Cmp::LE) continue;
            const int arity = static_cast<int>(c.terms.size());
            if (arity < 3 || c.rhs != arity - 1) continue;
            bool all_ones = true;
            std::vector<int> tuple;
            for (auto [v, a] : c.terms) {
                if (a != 1) { all_ones = false; break; }
                tuple.push_back(v);
            }
            if (!all_ones) continue;
            auto& fam = families[arity];
            fam.tuples.push_back(tuple);  // terms are sorted already
            fam.lookup.insert(std::move(tuple));
        }
        // Only families large enough to host supersets are worth scanning.
        std::erase_if(families, [](const auto& kv) { return kv.second.tuples.size() < 8; });
    }

    bool any() const { return !families.empty(); }

    // Seeds are the most violated constraint tuples themselves (each one is a
    // clique by definition), grown greedily through the fractional support.
    int separate(const std::vector<double>& x, CutPool& pool, bool light) const {
        int added = 0;
        for (const auto& [arity, fam] : families) {
            std::vector<int> cand;
            for (std::size_t v = 0; v < x.size(); ++v)
                if (x[v] > 0.05) cand.push_back(static_cast<int>(v));
            std::sort(cand.begin(), cand.end(), [&](int a, int b) {
                return x[a] != x[b] ? x[a] > x[b] : a < b;
            });
            if (static_cast<int>(cand.size()) <= arity) continue;

            std::vector<std::pair<double, std::size_t>> seed_rank;
            for (std::size_t t = 0; t < fam.tuples.size(); ++t) {
                double w = 0;
                for (int v : fam.tuples[t]) w += x[v];
                if (w > static_cast<double>(arity - 1) - 0.75) seed_rank.emplace_back(w, t);
            }
            std::sort(seed_rank.begin(), seed_rank.end(), [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
            });
            const std::size_t seeds = std::min<std::size_t>(seed_rank.size(), light ? 4 : 16);
            const std::size_t grow_cap = light ? 16 : 28;

            std::vector<int> idx(arity - 1);
            for (std::size_t s = 0; s < seeds; ++s) {
                std::vector<int> grown = fam.tuples[seed_rank[s].second];
                std::vector<char> in_grown(x.size(), 0);
                for (int v : grown) in_grown[v] = 1;
                for (int v : cand) {
                    if (in_grown[v]) continue;
                    if (grown.size() >= grow_cap) break;
                    bool ok = true;
                    for (int i = 0; i < arity - 1; ++i) idx[i] = i;
                    while (true) {
                        std::vector<int> t;
                        t.reserve(arity);
                        for (int i : idx) t.push_back(grown[i]);
                        t.push_back(v);
                        std::sort(t.begin(), t.end());
                        if (!fam.lookup.count(t)) {
                            ok = false;
                            break;
                        }
                        int pos = arity - 2;
                        while (pos >= 0 &&
                               idx[pos] == static_cast<int>(grown.size()) - (arity - 1 - pos))
                            --pos;
                        if (pos < 0) break;
                        ++idx[pos];
                        for (int i = pos + 1; i < arity - 1; ++i) idx[i] = idx[i - 1] + 1;
                    }
                    if (ok) {
                        grown.push_back(v);
                        in_grown[v] = 1;
                    }
                }
                if (static_cast<int>(grown.size()) <= arity) continue;
                double w = 0;
                for (int v : grown) w += x[v];
                if (w > static_cast<double>(arity - 1) + 1e-4) {
                    std::sort(grown.begin(), grown.end());
                    if (pool.add(std::move(grown), arity - 1)) ++added;
                }
            }
        }
        return added;
    }
};

// Separate violated clique cuts at fractional point x. Returns #added.
int separate_pair_cliques(const ConflictGraph& cg, const std::vector<double>& x, CutPool& pool) {
    if (!cg.any_edges) return 0;
    std::vector<int> cand;
    for (int v = 0; v < cg.n; ++v)
        if (x[v] > 0.02) cand.push_back(v);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        return x[a] != x[b] ? x[a] > x[b] : a < b;
    });
    int added = 0;
    const int seeds = std::min<int>(static_cast<int>(cand.size()), 40);
    for (int s = 0; s < seeds; ++s) {
        auto clique = cg.grow(cand[s], cand);
        if (clique.size() < 3) continue;
        double w = 0;
        for (int v : clique) w += x[v];
        if (w > 1.0 + 1e-4 && pool.add(std::move(clique))) ++added;
    }
    return added;
}

// Greedy LP-guided rounding; final exact check is the gate.
std::optional<Assignment> round_greedy(const IlpModel& model,
                                       const std::vector<std::vector<int>>& var_rows,
                                       const std::vector<double>& x,
                                       const std::vector<signed char>& fix) {
    const int n = model.var_count();
    Assignment a;
    a.values.assign(n, 0);
    std::vector<long long> act(model.constraints().size(), 0);
    auto try_set = [&](int j) -> bool {
        for (int r : var_rows[j]) {
            const auto& c = model.constraints()[r];
            if (c.cmp == Cmp::GE) continue;
            long long coeff = 0;
            for (auto [v, av] : c.terms)
                if (v == j) { coeff = av; break; }
            if (coeff > 0 && act[r] + coeff > c.rhs) return false;
        }
        a.values[j] = 1;
        for (int r : var_rows[j]) {
            for (auto [v, av] : model.constraints()[r].terms)
                if (v == j) { act[r] += av; break; }
        }
        return true;
    };
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
        if (fix[j] != 0) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        const double xp = fix[p] == 1 ? 2.0 : x[p];
        const double xq = fix[q] == 1 ? 2.0 : x[q];
        return xp != xq ? xp > xq : p < q;
    });
    for (int j : order) {
        if (fix[j] == 1) {
            if (!try_set(j)) return std::nullopt;  // forced var conflicts
        } else if (x[j] > 0.001) {
            try_set(j);
        }
    }
    const auto check = check_assignment(model, a);
    if (!check.feasible) return std::nullopt;
    return a;
}

int separate_cuts(const ConflictGraph& cg, const HyperConflicts& hyper,
                  const std::vector<double>& x, CutPool& pool, bool light) {
    int added = separate_pair_cliques(cg, x, pool);
    added += hyper.separate(x, pool, light);
    return added;
}

struct Node {
    double bound;
    int depth;
    std::uint64_t seq;
    std::vector<signed char> fix;
    std::vector<int> act_rows, act_cuts;
};

// Integral objectives let the selection order work on floored bounds, so LP
// jitter cannot break the deepest-first tie rule that makes the search dive.
inline long long bound_key(double bound) {
    if (bound > 4e18) return std::numeric_limits<long long>::max();
    if (bound < -4e18) return std::numeric_limits<long long>::min();
    return static_cast<long long>(std::floor(bound + kPruneEps));
}

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        const long long ka = bound_key(a.bound), kb = bound_key(b.bound);
        if (ka != kb) return ka > kb;
        if (a.depth != b.depth) return a.depth > b.depth;
        return a.seq < b.seq;
    }
};

struct SearchState {
    const IlpModel& model;
    const Propagator prop;
    const ConflictGraph cg;
    const HyperConflicts hyper;
    CutPool pool;
    std::vector<std::vector<int>> var_rows;

    std::mutex mtx;
    std::condition_variable cv;
    std::multiset<Node, NodeOrder> open;
    int working = 0;
    bool stop = false;
    SolveStatus stop_status = SolveStatus::Optimal;

    bool have_incumbent = false;
    double incumbent_internal = 0;
    Assignment incumbent;

    std::atomic<long long> nodes{0};
    std::uint64_t seq_counter = 0;

    bool maximize;
    bool feasibility_mode = false;
    double target_internal = 0;

    Clock::time_point deadline{};
    bool has_deadline = false;
    long long node_limit = 0;

    explicit SearchState(const IlpModel& m)
        : model(m), prop(m), cg(m), hyper(m), maximize(m.sense() == Sense::Maximize) {
        var_rows.resize(m.var_count());
        const auto& cons = m.constraints();
        for (std::size_t r = 0; r < cons.size(); ++r)
            for (auto [v, a] : cons[r].terms) {
                (void)a;
                var_rows[v].push_back(static_cast<int>(r));
            }
    }

    double cutoff_unlocked() const {
        double c = -1e100;
        if (have_incumbent) c = incumbent_internal + 1.0 - kPruneEps;
        if (feasibility_mode) c = std::max(c, target_internal - kPruneEps);
        return c;
    }

    // Returns true if this assignment became the new incumbent.
    bool offer_incumbent(const Assignment& a, double internal_value) {
        std::unique_lock lk(mtx);
        if (have_incumbent && internal_value <= incumbent_internal) return false;
        have_incumbent = true;
        incumbent_internal = internal_value;
        incumbent = a;
        if (feasibility_mode && internal_value >= target_internal - kPruneEps) {
            stop = true;
            stop_status = SolveStatus::Feasible;
            cv.notify_all();
        }
        return true;
    }
};

double internal_objective(const IlpModel& model, const Assignment& a, bool maximize) {
    long long v = 0;
    for (int i = 0; i < model.var_count(); ++i) v += model.objective()[i] * a.values[i];
    return maximize ? static_cast<double>(v) : -static_cast<double>(v);
}

void worker_loop(SearchState& st, int thread_count) {
    RelaxationSolver relax(st.model);
    std::vector<double> x;

    std::unique_lock lk(st.mtx);
    while (true) {
        while (!st.stop && st.open.empty() && st.working > 0) st.cv.wait(lk);
        if (st.stop || (st.open.empty() && st.working == 0)) {
            st.cv.notify_all();
            return;
        }
        Node node = std::move(st.open.extract(st.open.begin()).value());
        if (node.bound < st.cutoff_unlocked()) continue;  // incumbent moved on
        ++st.working;
        lk.unlock();

        const long long processed = ++st.nodes;
        bool limit_hit = false;
        if (st.has_deadline && Clock::now() > st.deadline) {
            limit_hit = true;
            std::unique_lock g(st.mtx);
            st.stop = true;
            st.stop_status = SolveStatus::TimeLimit;
        } else if (st.node_limit > 0 && processed > st.node_limit) {
            limit_hit = true;
            std::unique_lock g(st.mtx);
            st.stop = true;
            st.stop_status = SolveStatus::NodeLimit;
        }

        double node_bound = node.bound;
        int branch_var = -1;
        bool push_children = false;
        Node child0, child1;

        if (limit_hit) {
            // Put the untouched node back so the dual bound stays sound.
            std::unique_lock g(st.mtx);
            node.seq = st.seq_counter++;
            st.open.insert(std::move(node));
        } else if (st.prop.run(node.fix)) {
            auto res = relax.solve(node.fix, st.pool.cuts, node.act_rows, node.act_cuts);
            bool pruned = res.status == LpStatus::Infeasible;
            if (res.status == LpStatus::Numerical) {
                // Keep the parent bound; branch blindly on the lowest free var.
                for (int j = 0; j < st.model.var_count() && branch_var < 0; ++j)
                    if (node.fix[j] < 0) branch_var = j;
                x.assign(st.model.var_count(), 0.5);
            } else if (res.status == LpStatus::Optimal) {
                node_bound = std::min(node_bound, res.objective_max);
                x = res.x;
                {
                    std::unique_lock g(st.mtx);
                    pruned = node_bound < st.cutoff_unlocked();
                }
                if (!pruned && thread_count == 1 && (st.cg.any_edges || st.hyper.any())) {
                    // One opportunistic separation round per node.
                    if (separate_cuts(st.cg, st.hyper, x, st.pool, true) > 0) {
                        auto res2 = relax.solve(node.fix, st.pool.cuts, res.active_rows,
                                                res.active_cuts);
                        if (res2.status == LpStatus::Infeasible) {
                            pruned = true;
                        } else if (res2.status == LpStatus::Optimal) {
                            node_bound = std::min(node_bound, res2.objective_max);
                            x = res2.x;
                            res = std::move(res2);
                        }
                        if (!pruned) {
                            std::unique_lock g(st.mtx);
                            pruned = node_bound < st.cutoff_unlocked();
                        }
                    }
                }
                if (!pruned) {
                    // Most-fractional branching, ties by lowest index.
                    double best_frac = kIntTol;
                    for (int j = 0; j < st.model.var_count(); ++j) {
                        if (node.fix[j] >= 0) continue;
                        const double frac = std::min(x[j], 1.0 - x[j]);
                        if (frac > best_frac + 1e-12) {
                            best_frac = frac;
                            branch_var = j;
                        }
                    }
                    if (branch_var < 0) {
                        // Integral LP point: round and check exactly.
                        Assignment a;
                        a.values.assign(st.model.var_count(), 0);
                        for (int j = 0; j < st.model.var_count(); ++j)
                            a.values[j] = node.fix[j] >= 0
                                              ? static_cast<std::uint8_t>(node.fix[j])
                                              : static_cast<std::uint8_t>(x[j] > 0.5);
                        const auto chk = check_assignment(st.model, a);
                        if (chk.feasible) {
                            st.offer_incumbent(a, internal_objective(st.model, a, st.maximize));
                        } else {
                            // Exact infeasibility of a tolerance-integral point:
                            // branch on the first free variable to make progress.
                            for (int j = 0; j < st.model.var_count() && branch_var < 0; ++j)
                                if (node.fix[j] < 0) branch_var = j;
                        }
                    } else {
                        // Primal heuristic for an incumbent.
                        if (auto a = round_greedy(st.model, st.var_rows, x, node.fix))
                            st.offer_incumbent(*a, internal_objective(st.model, *a, st.maximize));
                    }
                }
            }
            if (!pruned && branch_var >= 0) {
                if (res.status == LpStatus::Optimal) {
                    child0.act_rows = res.active_rows;
                    child0.act_cuts = res.active_cuts;
                }
                child0.bound = node_bound;
                child0.depth = node.depth + 1;
                child0.fix = node.fix;
                child1 = child0;
                const bool prefer_one = x.empty() ? true : x[branch_var] >= 0.5;
                child0.fix[branch_var] = prefer_one ? 1 : 0;
                child1.fix[branch_var] = prefer_one ? 0 : 1;
                push_children = true;
            }
        }

        lk.lock();
        --st.working;
        if (push_children) {
            const double cut = st.cutoff_unlocked();
            if (child0.bound >= cut) {
                child0.seq = st.seq_counter++;
                st.open.insert(std::move(child0));
            }
            if (child1.bound >= cut) {
                child1.seq = st.seq_counter++;
                st.open.insert(std::move(child1));
            }
        }
        st.cv.notify_all();
    }
}

IpOutcome run_search(const IlpModel& model, const SolveConfig& cfg, bool feasibility,
                     long long target) {
    if (cfg.threads < 1) throw std::invalid_argument("SolveConfig: threads must be >= 1");
    if (cfg.branching_rule != 0)
        throw std::invalid_argument("SolveConfig: unknown branching rule");
    if (cfg.time_limit_sec < 0 || cfg.node_limit < 0)
        throw std::invalid_argument("SolveConfig: limits must be positive");

    SearchState st(model);
    st.maximize = model.sense() == Sense::Maximize;
    st.feasibility_mode = feasibility;
    st.target_internal = st.maximize ? static_cast<double>(target) : -static_cast<double>(target);
    if (cfg.time_limit_sec > 0) {
        st.has_deadline = true;
        st.deadline = Clock::now() + std::chrono::microseconds(
                                         static_cast<long long>(cfg.time_limit_sec * 1e6));
    }
    st.node_limit = cfg.node_limit;

    if (cfg.warm_start) {
        const auto chk = check_assignment(model, *cfg.warm_start);
        if (!chk.feasible)
            throw std::invalid_argument("SolveConfig: warm start assignment is infeasible");
        st.offer_incumbent(*cfg.warm_start,
                           internal_objective(model, *cfg.warm_start, st.maximize));
    }

    Node root;
    root.bound = 1e100;
    root.depth = 0;
    root.seq = st.seq_counter++;
    root.fix.assign(model.var_count(), -1);
    for (auto [v, val] : cfg.pre_fixed) {
        if (v < 0 || v >= model.var_count() || (val != 0 && val != 1))
            throw std::invalid_argument("SolveConfig: bad pre-fixed variable");
        if (root.fix[v] >= 0 && root.fix[v] != val)
            throw std::invalid_argument("SolveConfig: conflicting pre-fixed variable");
        root.fix[v] = static_cast<signed char>(val);
    }

    // Root cut loop: solve, separate, repeat while the bound improves.
    bool root_infeasible = !st.prop.run(root.fix);
    if (!root_infeasible) {
        RelaxationSolver relax(model);
        std::vector<int> warm_rows, warm_cuts;
        double last = 1e100;
        for (int round = 0; round < 50; ++round) {
            auto res = relax.solve(root.fix, st.pool.cuts, warm_rows, warm_cuts);
            if (res.status == LpStatus::Infeasible) {
                root_infeasible = true;
                break;
            }
            if (res.status != LpStatus::Optimal) break;
            root.bound = res.objective_max;
            root.act_rows = res.active_rows;
            root.act_cuts = res.active_cuts;
            warm_rows = res.active_rows;
            warm_cuts = res.active_cuts;
            if (!st.cg.any_edges && !st.hyper.any()) break;
            if (separate_cuts(st.cg, st.hyper, res.x, st.pool, false) == 0) break;
            if (last - res.objective_max < 1e-9 && round > 2) break;
            last = res.objective_max;
        }
    }

    if (!root_infeasible) {
        st.open.insert(std::move(root));
        if (cfg.threads == 1) {
            worker_loop(st, 1);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(cfg.threads);
            for (int t = 0; t < cfg.threads; ++t)
                pool.emplace_back([&st, &cfg] { worker_loop(st, cfg.threads); });
            for (auto& th : pool) th.join();
        }
    }

    IpOutcome out;
    out.nodes = st.nodes.load();
    out.restricted = !cfg.pre_fixed.empty();

    double open_bound = -1e100;
    for (const auto& n : st.open) open_bound = std::max(open_bound, n.bound);

    if (st.stop) {
        out.status = st.stop_status;
        if (st.have_incumbent) {
            out.best = st.incumbent;
            out.objective = check_assignment(model, st.incumbent).objective;
        }
        const double dual_internal = std::max(
            open_bound, st.have_incumbent ? st.incumbent_internal : -1e100);
        out.dual_bound = st.maximize ? dual_internal : -dual_internal;
        if (out.status == SolveStatus::Feasible && st.have_incumbent) return out;
        return out;
    }

    if (!st.have_incumbent) {
        out.status = SolveStatus::Infeasible;
        out.dual_bound = st.maximize ? -1e100 : 1e100;
        return out;
    }
    out.status = SolveStatus::Optimal;
    out.best = st.incumbent;
    out.objective = check_assignment(model, st.incumbent).objective;
    out.dual_bound = static_cast<double>(out.objective);
    return out;
}

}  // namespace

IpOutcome solve_ip(const IlpModel& model, const SolveConfig& cfg) {
    return run_search(model, cfg, false, 0);
}

FeasibilityResult solve_feasibility(const IlpModel& model, long long target,
                                    const SolveConfig& cfg) {
    const auto out = run_search(model, cfg, true, target);
    FeasibilityResult res;
    res.outcome = out;
    if (out.best) {
        const long long obj = out.objective;
        const bool ok = model.sense() == Sense::Maximize ? obj >= target : obj <= target;
        if (ok) {
            res.achievable = true;
            res.witness = out.best;
        }
    }
    return res;
}

}  // namespace combip
