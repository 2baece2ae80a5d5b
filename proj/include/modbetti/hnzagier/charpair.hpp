#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "modbetti/algebra/rat.hpp"

namespace modbetti {

/// Chern character (rank, degree) of a bundle on a curve; rank >= 1.
struct CharPair {
  long rank = 1;
  long degree = 0;

  CharPair() = default;
  CharPair(long n, long d) : rank(n), degree(d) {
    if (n < 1) throw InvalidArgument("CharPair: rank must be at least 1, got " + std::to_string(n));
  }

  Rat slope() const { return make_rat(degree, rank); }

  long content() const { return std::gcd(rank, degree); }
  bool primitive() const { return content() == 1; }
  // alpha / gcd(n, d)
  CharPair reduced() const { return {rank / content(), degree / content()}; }

  CharPair operator*(long k) const { return {rank * k, degree * k}; }

  auto operator<=>(const CharPair&) const = default;
};

/// <a, b> = n d' - d n' + (1 - g) n n'
inline long euler_pairing(const CharPair& a, const CharPair& b, long genus) {
  return a.rank * b.degree - a.degree * b.rank + (1 - genus) * a.rank * b.rank;
}

inline std::string to_string(const CharPair& a) {
  return "(" + std::to_string(a.rank) + "," + std::to_string(a.degree) + ")";
}

}  // namespace modbetti
