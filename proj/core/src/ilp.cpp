#include "combip/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace combip {

namespace {

bool valid_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::size_t hash_constraint(const LinConstraint& c) {
    std::size_t h = static_cast<std::size_t>(c.cmp) * 1000003u + static_cast<std::size_t>(c.rhs);
    for (auto [v, a] : c.terms) {
        h = h * 1000003u + static_cast<std::size_t>(v) * 31u +
            static_cast<std::size_t>(a * 2654435761LL);
    }
    return h;
}

}  // namespace

int IlpModel::add_binary_var(const std::string& name, const std::string& meta) {
    if (!valid_name(name)) throw std::invalid_argument("bad variable name: " + name);
    if (index_.count(name)) throw std::invalid_argument("duplicate variable name: " + name);
    const int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    metas_.push_back(meta);
    index_[name] = idx;
    objective_.push_back(0);
    return idx;
}

bool IlpModel::add_constraint(std::vector<std::pair<int, long long>> terms, Cmp cmp,
                              long long rhs) {
    if (terms.empty()) throw std::invalid_argument("constraint with no terms");
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<int, long long>> merged;
    for (auto [v, a] : terms) {
        if (v < 0 || v >= var_count())
            throw std::invalid_argument("constraint references unknown variable");
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += a;
        else
            merged.emplace_back(v, a);
    }
    std::erase_if(merged, [](const auto& t) { return t.second == 0; });
    if (merged.empty()) throw std::invalid_argument("constraint cancels to nothing");

    LinConstraint c{std::move(merged), cmp, rhs};
    const std::size_t h = hash_constraint(c);
    auto& bucket = constraint_hash_[h];
    for (int i : bucket) {
        const LinConstraint& e = constraints_[i];
        if (e.cmp == c.cmp && e.rhs == c.rhs && e.terms == c.terms) return false;
    }
    bucket.push_back(static_cast<int>(constraints_.size()));
    constraints_.push_back(std::move(c));
    return true;
}

void IlpModel::set_objective_coeff(int var, long long coeff) {
    if (var < 0 || var >= var_count()) throw std::invalid_argument("bad objective index");
    objective_[var] = coeff;
}

long long IlpModel::objective_coeff(int var) const { return objective_.at(var); }

int IlpModel::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool IlpModel::equals(const IlpModel& other) const {
    return sense_ == other.sense_ && names_ == other.names_ &&
           objective_ == other.objective_ && [&] {
               if (constraints_.size() != other.constraints_.size()) return false;
               for (std::size_t i = 0; i < constraints_.size(); ++i) {
                   const auto& a = constraints_[i];
                   const auto& b = other.constraints_[i];
                   if (a.cmp != b.cmp || a.rhs != b.rhs || a.terms != b.terms) return false;
               }
               return true;
           }();
}

CheckResult check_assignment(const IlpModel& model, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != model.var_count())
        throw std::invalid_argument("assignment length mismatch");
    for (auto v : a.values)
        if (v > 1) throw std::invalid_argument("assignment values must be 0/1");
    CheckResult result;
    for (int i = 0; i < model.var_count(); ++i)
        result.objective += model.objective()[i] * a.values[i];
    const auto& cons = model.constraints();
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
        long long lhs = 0;
        for (auto [v, coeff] : cons[ci].terms) lhs += coeff * a.values[v];
        const bool ok = cons[ci].cmp == Cmp::LE   ? lhs <= cons[ci].rhs
                        : cons[ci].cmp == Cmp::GE ? lhs >= cons[ci].rhs
                                                  : lhs == cons[ci].rhs;
        if (!ok) result.violated.push_back(static_cast<int>(ci));
    }
    result.feasible = result.violated.empty();
    return result;
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::Feasible: return "FEASIBLE";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::NodeLimit: return "NODE_LIMIT";
        case SolveStatus::TimeLimit: return "TIME_LIMIT";
    }
    return "UNKNOWN";
}

std::string assignment_to_json(const IlpModel& model, const IpOutcome& out) {
    nlohmann::json j;
    j["status"] = to_string(out.status);
    j["objective"] = out.objective;
    nlohmann::json values = nlohmann::json::object();
    if (out.best) {
        for (int i = 0; i < model.var_count(); ++i)
            values[model.var_name(i)] = static_cast<int>(out.best->values[i]);
    }
    j["values"] = values;
    return j.dump(2);
}

Assignment assignment_from_json(const IlpModel& model, const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Assignment a;
    a.values.assign(model.var_count(), 0);
    for (const auto& [name, value] : j.at("values").items()) {
        const int idx = model.var_index(name);
        if (idx < 0) throw std::invalid_argument("assignment references unknown variable " + name);
        const int v = value.get<int>();
        if (v != 0 && v != 1) throw std::invalid_argument("assignment value must be 0/1");
        a.values[idx] = static_cast<std::uint8_t>(v);
    }
    return a;
}

}  // namespace combip
