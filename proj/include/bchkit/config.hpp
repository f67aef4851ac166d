#ifndef BCHKIT_CONFIG_HPP
#define BCHKIT_CONFIG_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bchkit {

inline constexpr int default_max_order = 12;
/// LieWord packs letters into 64 bits.
inline constexpr int hard_max_order = 63;

/// Expansion order cap: BCHKIT_MAX_ORDER if set, otherwise 12.
inline int configured_max_order() {
  char const *env = std::getenv("BCHKIT_MAX_ORDER");
  if (env == nullptr || *env == '\0') return default_max_order;
  int value = 0;
  try {
    value = std::stoi(env);
  } catch (std::exception const &) {
    throw std::invalid_argument(std::string("BCHKIT_MAX_ORDER is not an integer: ") + env);
  }
  if (value < 1 || value > hard_max_order)
    throw std::invalid_argument("BCHKIT_MAX_ORDER must lie in [1, 63]");
  return value;
}

inline void require_order_in_range(int order, char const *who) {
  int cap = configured_max_order();
  if (order < 1 || order > cap)
    throw std::out_of_range(std::string(who) + ": order " + std::to_string(order) +
                            " outside [1, " + std::to_string(cap) + "]");
}

} // namespace bchkit

#endif
