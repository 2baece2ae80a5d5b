#pragma once

#include <vector>

#include "modbetti/errors.hpp"

namespace modbetti {

using Composition = std::vector<long>;

namespace detail {

inline void compositions_rec(long rest, Composition& prefix, std::vector<Composition>& out) {
  if (rest == 0) {
    out.push_back(prefix);
    return;
  }
  for (long part = 1; part <= rest; ++part) {
    prefix.push_back(part);
    compositions_rec(rest - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All 2^{n-1} ordered compositions of n in lexicographic order.
inline std::vector<Composition> compositions(long n) {
  if (n < 1) throw InvalidArgument("compositions: n must be positive");
  if (n > 30) throw CapacityError("compositions: n > 30 would enumerate more than 2^29 compositions");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  Composition prefix;
  detail::compositions_rec(n, prefix, out);
  return out;
}

// sum_{i<j} n_i n_j
inline long pair_sum(const Composition& c) {
  long total = 0, acc = 0;
  for (long part : c) {
    total += acc * part;
    acc += part;
  }
  return total;
}

}  // namespace modbetti
