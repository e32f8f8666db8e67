#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace sdlattice {

/// A (possibly unbounded) family consumed one member at a time.
///
/// `next` yields the members y1, y2, ... and returns nullopt once the
/// enumeration is exhausted. `dominator`, when set, picks a member z above
/// (below, for infima) both arguments, or nullopt if the family has none; when
/// unset the lattice join (meet) of the two arguments is used.
template <class T>
struct DirectedFamily {
  std::function<std::optional<T>()> next;
  std::function<std::optional<T>(const T&, const T&)> dominator;
};

// Enumerates `members` in order; no dominator.
template <class T>
DirectedFamily<T> enumerate(std::vector<T> members) {
  auto items = std::make_shared<std::vector<T>>(std::move(members));
  auto pos = std::make_shared<std::size_t>(0);
  DirectedFamily<T> family;
  family.next = [items, pos]() -> std::optional<T> {
    if (*pos >= items->size()) return std::nullopt;
    return (*items)[(*pos)++];
  };
  return family;
}

// Members generate(1), generate(2), ...; never exhausted.
template <class T, class Gen>
DirectedFamily<T> generate_family(Gen generate) {
  auto n = std::make_shared<std::size_t>(0);
  DirectedFamily<T> family;
  family.next = [generate, n]() -> std::optional<T> { return generate(++*n); };
  return family;
}

}  // namespace sdlattice
