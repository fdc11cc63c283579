#pragma once

// Internal helpers shared by the encoder translation units.

#include <string>

#include "combip/problems.hpp"

namespace combip::detail {

inline std::string set_name(SetBits s, const char* prefix = "x") {
    std::string name = prefix;
    if (s == 0) return name + "_empty";
    for (int e : element_list(s)) name += "_" + std::to_string(e);
    return name;
}

inline int add_set_var(EncodedModel& em, SetBits s, int group, const char* prefix,
                       long long obj_coeff) {
    const int idx = em.model.add_binary_var(set_name(s, prefix));
    em.model.set_objective_coeff(idx, obj_coeff);
    em.var_group.push_back(group);
    em.var_code.push_back(s);
    return idx;
}

inline std::uint64_t pack_edge(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 8) | static_cast<std::uint64_t>(v);
}

}  // namespace combip::detail
