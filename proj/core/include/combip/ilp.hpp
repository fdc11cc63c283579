#pragma once

// 0-1 integer linear programs: model container, exact assignment checking,
// and solver outcome bookkeeping. Only binary variables are supported, and
// every coefficient is an exact integer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace combip {

enum class Sense { Maximize, Minimize };
enum class Cmp { LE, GE, EQ };

struct LinConstraint {
    std::vector<std::pair<int, long long>> terms;  // (var index, coefficient)
    Cmp cmp = Cmp::LE;
    long long rhs = 0;
};

class IlpModel {
public:
    explicit IlpModel(Sense sense = Sense::Maximize) : sense_(sense) {}

    // Returns the fresh variable index; throws on duplicate or malformed name.
    int add_binary_var(const std::string& name, const std::string& meta = "");

    // Canonicalizes (sorted terms, merged duplicates, zero coefficients
    // dropped) and dedups exact repeats. Returns false if the constraint was
    // already present. Throws on empty term list or bad indices.
    bool add_constraint(std::vector<std::pair<int, long long>> terms, Cmp cmp, long long rhs);

    void set_objective_coeff(int var, long long coeff);
    long long objective_coeff(int var) const;

    Sense sense() const { return sense_; }
    int var_count() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int i) const { return names_[i]; }
    const std::string& var_meta(int i) const { return metas_[i]; }
    int var_index(const std::string& name) const;  // -1 if absent
    const std::vector<LinConstraint>& constraints() const { return constraints_; }
    const std::vector<long long>& objective() const { return objective_; }

    // Structural equality: sense, variable names, objective, constraints.
    // Metadata is presentation-only and ignored.
    bool equals(const IlpModel& other) const;

private:
    Sense sense_;
    std::vector<std::string> names_;
    std::vector<std::string> metas_;
    std::map<std::string, int> index_;
    std::vector<long long> objective_;
    std::vector<LinConstraint> constraints_;
    std::map<std::size_t, std::vector<int>> constraint_hash_;
};

struct Assignment {
    std::vector<std::uint8_t> values;  // one 0/1 per variable
};

struct CheckResult {
    bool feasible = false;
    long long objective = 0;
    std::vector<int> violated;  // constraint indices
};

// Exact integer arithmetic; throws on length mismatch.
CheckResult check_assignment(const IlpModel& model, const Assignment& a);

enum class SolveStatus { Optimal, Feasible, Infeasible, NodeLimit, TimeLimit };

struct IpOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Assignment> best;
    long long objective = 0;     // of `best` when present
    double dual_bound = 0.0;
    long long nodes = 0;
    bool restricted = false;     // solved with caller-imposed variable fixings
};

std::string to_string(SolveStatus s);

// Assignment JSON: {"status": str, "objective": int, "values": {name: 0|1}}
std::string assignment_to_json(const IlpModel& model, const IpOutcome& out);
Assignment assignment_from_json(const IlpModel& model, const std::string& text);

}  // namespace combip
