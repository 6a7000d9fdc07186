#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sumref/decomposition.hpp"

namespace sumref {

/// A module with two internal direct-sum decompositions sharing the
/// ambient space; each side has a distinguished summand.
template <FieldType F>
struct RefinementInstance {
    F field;
    std::size_t ambient;
    Decomposition<F> side1;
    Decomposition<F> side2;

    std::vector<std::string> problems() const {
        std::vector<std::string> out;
        if (!(side1.field() == field) || !(side2.field() == field)) out.push_back("sides over different fields");
        if (side1.ambient_dim() != ambient) out.push_back("side1 ambient dimension mismatch");
        if (side2.ambient_dim() != ambient) out.push_back("side2 ambient dimension mismatch");
        if (!side1.is_valid()) out.push_back("side1 is not a decomposition: " + side1.validation().describe());
        if (!side2.is_valid()) out.push_back("side2 is not a decomposition: " + side2.validation().describe());
        return out;
    }

    bool is_valid() const { return problems().empty(); }

    bool operator==(const RefinementInstance& o) const {
        return field == o.field && ambient == o.ambient && side1 == o.side1 && side2 == o.side2;
    }
};

using AnyInstance = std::variant<RefinementInstance<PrimeField>, RefinementInstance<RationalField>>;

} // namespace sumref
