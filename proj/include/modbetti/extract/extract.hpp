#pragma once

// Stable invariants from semistable ones on a slope ray. With r the series
// 1 + sum_k r_{k gamma} x^k in the twisted ray ring, the stable series A is
// fixed by
//   r o Exp(A / D) = 1,
// where Exp is the plain plethystic exponential (dilation Adams operations)
// and D = 1 - T is the divisor (1 - v^2, 1 - uv, or 1 - q^j). Hence
//   A = D * Log(r^{o -1}).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modbetti/extract/twisted.hpp"
#include "modbetti/hnzagier/poincare.hpp"

namespace modbetti {

namespace detail {

template <Coefficient C>
C checked_inverse(const C& x, const char* what) {
  auto inv = coefficient_traits<C>::inverse(x);
  if (!inv) throw DivisionByZero(std::string(what) + ": divisor is not invertible");
  return *inv;
}

}  // namespace detail

/// A = D * Log(r^{o -1}), closed form.
template <Coefficient C>
Series<C> stable_from_semistable(const TwistedSeries<C>& r, const C& divisor) {
  return plethystic_log(twisted_inv(r).series()).times(divisor);
}

/// Same A, solved order by order from r o Exp(B) = 1 using only Exp and the
/// twisted product; B_n enters the x^n coefficient linearly with coefficient 1.
template <Coefficient C>
Series<C> stable_from_semistable_iterative(const TwistedSeries<C>& r, const C& divisor) {
  using T = coefficient_traits<C>;
  if (!is_one(r[0])) throw InvalidArgument("semistable series must have constant term 1");
  const std::size_t order = r.order();
  std::vector<C> b(order + 1, r.series().zero());
  for (std::size_t n = 1; n <= order; ++n) {
    const Series<C> trial = Series<C>(b).truncated(n);
    const auto product = twisted_mul(r.with(r.series().truncated(n)), r.with(plethystic_exp(trial)));
    b[n] = C(-product[n]);
  }
  std::vector<C> a;
  a.reserve(order + 1);
  for (const auto& x : b) a.push_back(T::is_zero(x) ? x : C(x * divisor));
  return Series<C>(std::move(a));
}

/// r o Exp(A / D); equals 1 exactly when A was extracted from r.
template <Coefficient C>
TwistedSeries<C> recompose(const TwistedSeries<C>& r, const Series<C>& a, const C& divisor) {
  const C inv = detail::checked_inverse(divisor, "recompose");
  return twisted_mul(r, r.with(plethystic_exp(a.times(inv))));
}

// ---- Poincare (T = v^2) and Hodge (T = uv) realizations ----

inline Twist<RatFunc> poincare_twist(const SlopeRay& ray) {
  return {ray.twist_exponent(), [](long m) { return RatFunc::v_power(2 * m); }};
}

inline Twist<RatFunc2> hodge_twist(const SlopeRay& ray) {
  return {ray.twist_exponent(), [](long m) { return RatFunc2::monomial(m, m); }};
}

/// 1 + sum_{k=1..K} P(r_{k gamma}, v) x^k.
inline TwistedSeries<RatFunc> build_r_series(const SlopeRay& ray, std::size_t order, unsigned threads = 1) {
  if (order < 1) throw InvalidArgument("build_r_series: order must be at least 1");
  std::vector<RatFunc> c{RatFunc(1)};
  for (std::size_t k = 1; k <= order; ++k) c.push_back(poincare_r(ray.at(static_cast<long>(k)), ray.genus, threads));
  return {Series<RatFunc>(std::move(c)), poincare_twist(ray)};
}

/// 1 + sum_{k=1..K} R_{k gamma}(u, v) x^k.
inline TwistedSeries<RatFunc2> build_hodge_r_series(const SlopeRay& ray, std::size_t order, unsigned threads = 1) {
  if (order < 1) throw InvalidArgument("build_hodge_r_series: order must be at least 1");
  std::vector<RatFunc2> c{RatFunc2(1)};
  for (std::size_t k = 1; k <= order; ++k) c.push_back(hodge_r(ray.at(static_cast<long>(k)), ray.genus, threads));
  return {Series<RatFunc2>(std::move(c)), hodge_twist(ray)};
}

inline RatFunc poincare_divisor() { return RatFunc(PolyQ::one_minus_power(2)); }
inline RatFunc2 hodge_divisor() { return RatFunc2(Poly2(1).mul_one_minus_monomial(1, 1)); }

/// A_1..A_K as rational functions; every entry is a polynomial in theory.
inline Series<RatFunc> stable_poincare_series(const SlopeRay& ray, std::size_t order, unsigned threads = 1) {
  return stable_from_semistable(build_r_series(ray, order, threads), poincare_divisor());
}

/// Virtual Poincare polynomial of the moduli of stable bundles of character k*gamma.
/// A non-polynomial result breaks a theorem and is an InvariantViolation.
inline PolyQ stable_poincare(const SlopeRay& ray, long k, unsigned threads = 1) {
  if (k < 1) throw InvalidArgument("stable_poincare: multiple k must be at least 1");
  static detail::Memo<std::tuple<long, long, long, long>, PolyQ> memo;
  return memo.get({ray.gamma.rank, ray.gamma.degree, ray.genus, k}, [&] {
    const auto a = stable_poincare_series(ray, static_cast<std::size_t>(k), threads);
    auto p = a[static_cast<std::size_t>(k)].as_polynomial();
    if (!p)
      throw InvariantViolation("stable Poincare function of " + to_string(ray.at(k)) + " at genus " +
                               std::to_string(ray.genus) + " is not a polynomial");
    return *p;
  });
}

inline PolyQ stable_poincare(const CharPair& alpha, long genus, unsigned threads = 1) {
  const auto [ray, k] = SlopeRay::through(alpha, genus);
  return stable_poincare(ray, k, threads);
}

struct HodgeResult {
  RatFunc2 value;
  std::optional<Poly2> polynomial;  // empty when the extracted function is not polynomial
  bool conjectural = true;
};

/// Conjectural virtual Hodge polynomial; a non-polynomial result is reported, not thrown.
inline HodgeResult stable_hodge(const SlopeRay& ray, long k, unsigned threads = 1) {
  if (k < 1) throw InvalidArgument("stable_hodge: multiple k must be at least 1");
  const auto a = stable_from_semistable(build_hodge_r_series(ray, static_cast<std::size_t>(k), threads),
                                        hodge_divisor());
  HodgeResult out{a[static_cast<std::size_t>(k)], std::nullopt, true};
  out.polynomial = out.value.as_polynomial();
  return out;
}

inline HodgeResult stable_hodge(const CharPair& alpha, long genus, unsigned threads = 1) {
  const auto [ray, k] = SlopeRay::through(alpha, genus);
  return stable_hodge(ray, k, threads);
}

/// x^k coefficient of Exp(sum_j P(M(j gamma), v) x^j): Poincare function of
/// the semistable moduli.
inline RatFunc semistable_poincare(const SlopeRay& ray, long k, unsigned threads = 1) {
  if (k < 1) throw InvalidArgument("semistable_poincare: multiple k must be at least 1");
  std::vector<RatFunc> c{RatFunc()};
  for (long j = 1; j <= k; ++j) c.emplace_back(stable_poincare(ray, j, threads));
  return plethystic_exp(Series<RatFunc>(std::move(c)))[static_cast<std::size_t>(k)];
}

}  // namespace modbetti
