#pragma once

// Continuous relaxation of 0-1 models: bounded-variable revised simplex with
// dense LU refactorization, plus lazy row activation so models with very many
// constraints only ever factor the rows that matter.

#include <map>
#include <vector>

#include "combip/ilp.hpp"

namespace combip {

// Branching/restriction state: var index -> forced value.
using Fixings = std::map<int, int>;

enum class LpStatus { Optimal, Infeasible, Numerical };

struct LpOutcome {
    LpStatus status = LpStatus::Numerical;
    std::vector<double> primal;   // one value in [0,1] per variable
    double objective = 0.0;       // in the model's own sense
    double max_violation = 0.0;   // over all model constraints
};

// All-ones "clique" cut: sum of vars <= rhs. Globally valid rows supplied by
// the branch-and-bound layer.
struct CutRow {
    std::vector<int> vars;
    long long rhs = 1;
};

// One-shot interface used by tests and simple callers.
LpOutcome solve_relaxation(const IlpModel& model, const Fixings& fix);

// Reusable engine; one instance per thread, sharing the immutable model.
class RelaxationSolver {
public:
    explicit RelaxationSolver(const IlpModel& model);

    struct Result {
        LpStatus status = LpStatus::Numerical;
        std::vector<double> x;
        double objective_max = 0.0;  // internal maximize-form objective value
        double max_violation = 0.0;
        std::vector<int> active_rows;  // model constraint indices in the basis system
        std::vector<int> active_cuts;  // indices into `cuts`
    };

    // fix: -1 free / 0 / 1 per variable. `warm_*` seed the active row set.
    Result solve(const std::vector<signed char>& fix, const std::vector<CutRow>& cuts,
                 const std::vector<int>& warm_rows = {}, const std::vector<int>& warm_cuts = {});

    int var_count() const { return n_; }
    // Objective in maximize form (negated for MINIMIZE models).
    const std::vector<double>& objective_max() const { return obj_; }
    bool maximize() const { return maximize_; }

private:
    struct Row {
        std::vector<std::pair<int, double>> terms;
        double lo, hi;  // range form: lo <= a.x <= hi
    };

    double row_value(const Row& r, const std::vector<double>& x) const;

    int n_ = 0;
    bool maximize_ = true;
    std::vector<double> obj_;
    std::vector<Row> rows_;
};

}  // namespace combip
