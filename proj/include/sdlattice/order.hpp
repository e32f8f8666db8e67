#pragma once

#include <optional>
#include <string_view>

namespace sdlattice {

// st: first order stochastic dominance; icv: increasing concave (second
// order); icx: increasing convex; cx: convex order.
enum class Order { st, icv, icx, cx };

enum class Direction { sup, inf };

/// Verdict of an order test. When the order fails, `witness` is a point s at
/// which the defining inequality is violated (evaluating the transforms at s
/// certifies the failure).
struct OrderWitness {
  bool holds = true;
  std::optional<double> witness;

  explicit operator bool() const { return holds; }
};

std::string_view to_string(Order order);
std::string_view to_string(Direction direction);
// Throws ContractError on unknown names.
Order parse_order(std::string_view name);
Direction parse_direction(std::string_view name);

}  // namespace sdlattice
