#pragma once

// Lambda-ring operations on truncated series: Adams operations, plethystic
// Exp/Log/Pow and the Heine series.

#include <cstddef>
#include <vector>

#include "modbetti/algebra/series.hpp"

namespace modbetti {

inline int moebius(long n) {
  if (n < 1) throw InvalidArgument("moebius: argument must be positive");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// psi_m on a series: c_k x^k -> psi_m(c_k) x^{mk}, dropping degrees beyond K.
template <Coefficient C>
Series<C> adams(const Series<C>& f, unsigned m) {
  if (m == 0) throw InvalidArgument("adams: index must be positive");
  if (m == 1) return f;
  std::vector<C> out(f.order() + 1, f.zero());
  for (std::size_t k = 0; k * m <= f.order(); ++k) out[k * m] = coefficient_traits<C>::adams(f[k], m);
  return Series<C>(std::move(out));
}

/// Exp(f) = exp(sum_{k>=1} psi_k(f)/k), defined for f with zero constant term.
template <Coefficient C>
Series<C> plethystic_exp(const Series<C>& f) {
  if (!coefficient_traits<C>::is_zero(f[0])) throw InvalidArgument("plethystic_exp: constant term must vanish");
  Series<C> sum = Series<C>::constant(f.zero(), f.order());
  for (std::size_t k = 1; k <= f.order(); ++k)
    sum = sum + adams(f, static_cast<unsigned>(k)).scaled(make_rat(1, static_cast<long>(k)));
  return formal_exp(sum);
}

/// Log(f) = sum_{k>=1} mu(k)/k psi_k(log f), defined for f with constant term 1.
template <Coefficient C>
Series<C> plethystic_log(const Series<C>& f) {
  if (!is_one(f[0])) throw InvalidArgument("plethystic_log: constant term must be 1");
  const Series<C> l = formal_log(f);
  Series<C> out = Series<C>::constant(f.zero(), f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    const int mu = moebius(static_cast<long>(k));
    if (mu == 0) continue;
    out = out + adams(l, static_cast<unsigned>(k)).scaled(make_rat(mu, static_cast<long>(k)));
  }
  return out;
}

/// g_1..g_{m_max} with sum_{k | n} k g_k = psi_n(g). Returned 0-based: out[k-1] = g_k.
template <Coefficient C>
std::vector<C> gk_sequence(const C& g, std::size_t m_max) {
  using T = coefficient_traits<C>;
  std::vector<C> out;
  out.reserve(m_max);
  for (std::size_t n = 1; n <= m_max; ++n) {
    C acc = T::adams(g, static_cast<unsigned>(n));
    for (std::size_t k = 1; k < n; ++k)
      if (n % k == 0) acc = C(acc - T::scale(out[k - 1], Rat(static_cast<long>(k))));
    out.push_back(T::scale(acc, make_rat(1, static_cast<long>(n))));
  }
  return out;
}

/// Pow(f, g) = Exp(g Log f).
template <Coefficient C>
Series<C> plethystic_pow(const Series<C>& f, const C& g) {
  return plethystic_exp(plethystic_log(f).times(g));
}

/// Pow(f, g) through the product form prod_k psi_k(f)^{g_k}, where the
/// ordinary power is F^c = exp(c log F).
template <Coefficient C>
Series<C> plethystic_pow_product(const Series<C>& f, const C& g) {
  if (!is_one(f[0])) throw InvalidArgument("plethystic_pow: constant term must be 1");
  const auto gk = gk_sequence(g, f.order());
  Series<C> out = Series<C>::constant(f.one(), f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    if (coefficient_traits<C>::is_zero(gk[k - 1])) continue;
    out = out * formal_exp(formal_log(adams(f, static_cast<unsigned>(k))).times(gk[k - 1]));
  }
  return out;
}

/// sum_{m=0..K} x^m / prod_{i=1..m} (1 - v^i), the right-hand side of Heine's identity.
inline Series<RatFunc> heine_series(std::size_t order) {
  std::vector<RatFunc> c;
  c.reserve(order + 1);
  CyclotomicDenominator den;
  c.emplace_back(1);
  for (std::size_t m = 1; m <= order; ++m) {
    den[static_cast<unsigned>(m)] = 1;
    c.push_back(RatFunc::from_parts(PolyQ(1), den));
  }
  return Series<RatFunc>(std::move(c));
}

}  // namespace modbetti
