#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourney {

/// Largest n for which divergences are computed by full enumeration.
inline constexpr std::size_t kMaxEnumerationSize = 6;

namespace detail {

inline void require_enumerable(std::size_t n, const char* what) {
  if (n > kMaxEnumerationSize)
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the enumeration limit of " +
                                std::to_string(kMaxEnumerationSize));
}

}  // namespace detail
}  // namespace tourney
