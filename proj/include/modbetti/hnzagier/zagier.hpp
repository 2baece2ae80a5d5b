#pragma once

// Zagier's kernels Phi_{n*,d}(t) and Psi_{n*,d}(t) solving the HN recursion
// over compositions n* of the rank. Both are returned as elements of Q(t),
// using the RatFunc variable for t.

#include <utility>

#include "modbetti/algebra/ratfunc.hpp"
#include "modbetti/detail/memo.hpp"
#include "modbetti/hnzagier/compositions.hpp"

namespace modbetti {

inline Rat floor_rat(const Rat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rat(q);
}

// {x} = x - floor(x)
inline Rat fractional_part(const Rat& x) { return x - floor_rat(x); }

// {x}_+ = {x} for x not an integer, 1 for x an integer (equivalently 1 - {-x}).
inline Rat fractional_part_plus(const Rat& x) {
  Rat f = fractional_part(x);
  return f == 0 ? Rat(1) : f;
}

namespace detail {

inline long total_rank(const Composition& c) {
  if (c.empty()) throw InvalidArgument("composition must be nonempty");
  long n = 0;
  for (long part : c) {
    if (part < 1) throw InvalidArgument("composition parts must be positive");
    n += part;
  }
  return n;
}

// prod_{i<k} t^{(n_i + n_{i+1}) frac((n_1 + ... + n_i) d / n)} / (1 - t^{n_i + n_{i+1}})
// Individual exponents may be fractional; their sum telescopes to
// d (n_1 + ... + n_{k-1}) minus integers, so the product lives in Q(t).
template <class Frac>
RatFunc zagier_product(const Composition& c, long d, Frac frac) {
  const long n = total_rank(c);
  Rat exponent = 0;
  CyclotomicDenominator den;
  long partial = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    partial += c[i];
    const long width = c[i] + c[i + 1];
    exponent += Rat(width) * frac(make_rat(partial * d, n));
    ++den[static_cast<unsigned>(width)];
  }
  if (!is_integer(exponent))
    throw InvariantViolation("Zagier kernel exponent is not integral for this composition");
  return RatFunc::from_parts(PolyQ(1), std::move(den), exponent.get_num().get_si());
}

inline long positive_mod(long d, long n) { return ((d % n) + n) % n; }

}  // namespace detail

/// Psi_{n*,d}(t); depends on d only modulo n.
inline RatFunc psi_coeff(const Composition& c, long d) {
  static detail::Memo<std::pair<Composition, long>, RatFunc> memo;
  const long n = detail::total_rank(c);
  const long dr = detail::positive_mod(d, n);
  return memo.get({c, dr}, [&] { return detail::zagier_product(c, dr, fractional_part); });
}

/// Phi_{n*,d}(t) = (-1)^{k-1} prod t^{(n_i+n_{i+1}) {...}_+} / (1 - t^{n_i+n_{i+1}}).
inline RatFunc phi_coeff(const Composition& c, long d) {
  const long n = detail::total_rank(c);
  RatFunc r = detail::zagier_product(c, detail::positive_mod(d, n), fractional_part_plus);
  return c.size() % 2 == 0 ? -r : r;
}

}  // namespace modbetti
