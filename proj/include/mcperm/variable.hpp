#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mcperm {

// Variable namespaces in canonical order: row variables x_i, column
// variables y_j, generic z_j, auxiliary t, and the cycle-weight alpha.
enum class VarSpace : uint8_t { X = 0, Y = 1, Z = 2, T = 3, Alpha = 4 };

struct VariableId {
    VarSpace space = VarSpace::Z;
    uint32_t index = 0;

    friend constexpr auto operator<=>(const VariableId&, const VariableId&) = default;

    // "x1", "y2", "z3"; T and Alpha print bare ("t", "alpha") at index 0.
    std::string str() const;

    static std::optional<VariableId> parse(std::string_view s);
};

constexpr VariableId xvar(uint32_t i) { return {VarSpace::X, i}; }
constexpr VariableId yvar(uint32_t i) { return {VarSpace::Y, i}; }
constexpr VariableId zvar(uint32_t i) { return {VarSpace::Z, i}; }
constexpr VariableId tvar(uint32_t i = 0) { return {VarSpace::T, i}; }
constexpr VariableId alphavar() { return {VarSpace::Alpha, 0}; }

}  // namespace mcperm
