#include "sdlattice/order.hpp"

#include <string>

#include "sdlattice/error.hpp"

namespace sdlattice {

std::string_view to_string(Order order) {
  switch (order) {
    case Order::st: return "st";
    case Order::icv: return "icv";
    case Order::icx: return "icx";
    case Order::cx: return "cx";
  }
  return "?";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::sup ? "sup" : "inf";
}

Order parse_order(std::string_view name) {
  if (name == "st") return Order::st;
  if (name == "icv") return Order::icv;
  if (name == "icx") return Order::icx;
  if (name == "cx") return Order::cx;
  throw ContractError("unknown order '" + std::string(name) + "' (expected st|icv|icx|cx)");
}

Direction parse_direction(std::string_view name) {
  if (name == "sup") return Direction::sup;
  if (name == "inf") return Direction::inf;
  throw ContractError("unknown direction '" + std::string(name) + "' (expected sup|inf)");
}

}  // namespace sdlattice
