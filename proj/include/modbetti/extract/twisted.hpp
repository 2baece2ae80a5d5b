#pragma once

// Series on a single slope ray k*gamma with the twisted product
//   x^k o x^l = T^{e k l} x^{k+l},   e = (g-1) n_gamma^2,
// where T is the twist unit of the coefficient ring. The ring is commutative
// and x d/dx is a derivation for o, so the formal exp/log recurrences of the
// plain case carry over with every product replaced by o.

#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "modbetti/hnzagier/charpair.hpp"
#include "modbetti/lambda/lambda.hpp"

namespace modbetti {

/// Primitive character gamma (gcd(n, d) = 1) together with the genus.
struct SlopeRay {
  CharPair gamma;
  long genus;

  SlopeRay(CharPair g_, long genus_) : gamma(g_), genus(genus_) {
    if (genus < 0) throw InvalidArgument("SlopeRay: genus must be nonnegative");
    if (gamma.content() != 1)
      throw InvalidArgument("SlopeRay: generator " + to_string(gamma) + " is not primitive");
  }

  /// The ray through alpha and the multiple k with alpha = k * gamma.
  static std::pair<SlopeRay, long> through(const CharPair& alpha, long genus) {
    const long k = alpha.content();
    return {SlopeRay(alpha.reduced(), genus), k};
  }

  /// e = (g-1) n_gamma^2 = -<gamma, gamma>.
  long twist_exponent() const { return (genus - 1) * gamma.rank * gamma.rank; }

  CharPair at(long k) const { return gamma * k; }
};

/// Twist datum: the exponent e and a map m -> T^m into the coefficient ring.
template <Coefficient C>
struct Twist {
  long exponent = 0;
  std::function<C(long)> unit_power;

  C factor(std::size_t k, std::size_t l) const {
    return unit_power(exponent * static_cast<long>(k) * static_cast<long>(l));
  }
};

template <Coefficient C>
class TwistedSeries {
 public:
  TwistedSeries(Series<C> s, Twist<C> twist) : s_(std::move(s)), tw_(std::move(twist)) {}

  const Series<C>& series() const { return s_; }
  const Twist<C>& twist() const { return tw_; }
  std::size_t order() const { return s_.order(); }
  const C& operator[](std::size_t k) const { return s_[k]; }

  TwistedSeries with(Series<C> s) const { return TwistedSeries(std::move(s), tw_); }

  friend TwistedSeries operator+(const TwistedSeries& a, const TwistedSeries& b) { return a.with(a.s_ + b.s_); }
  friend TwistedSeries operator-(const TwistedSeries& a, const TwistedSeries& b) { return a.with(a.s_ - b.s_); }

 private:
  Series<C> s_;
  Twist<C> tw_;
};

/// sum_{k+l=n} T^{e k l} a_k b_l.
template <Coefficient C>
TwistedSeries<C> twisted_mul(const TwistedSeries<C>& a, const TwistedSeries<C>& b) {
  using T = coefficient_traits<C>;
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<C> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    C acc = T::zero_like(a[n]);
    for (std::size_t k = 0; k <= n; ++k) {
      if (T::is_zero(a[k]) || T::is_zero(b[n - k])) continue;
      C term = C(a[k] * b[n - k]);
      if (k != 0 && k != n) term = C(term * a.twist().factor(k, n - k));
      acc = C(acc + term);
    }
    out.push_back(std::move(acc));
  }
  return a.with(Series<C>(std::move(out)));
}

/// Inverse for o; requires constant term 1.
template <Coefficient C>
TwistedSeries<C> twisted_inv(const TwistedSeries<C>& a) {
  using T = coefficient_traits<C>;
  if (!is_one(a[0])) throw InvalidArgument("twisted_inv: constant term must be 1");
  std::vector<C> b;
  b.reserve(a.order() + 1);
  b.push_back(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    C acc = T::zero_like(a[n]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (T::is_zero(a[k]) || T::is_zero(b[n - k])) continue;
      C term = C(a[k] * b[n - k]);
      if (k != n) term = C(term * a.twist().factor(k, n - k));
      acc = C(acc + term);
    }
    b.push_back(C(-acc));
  }
  return a.with(Series<C>(std::move(b)));
}

/// psi_m(c_k x^k) = psi_m(c_k) x^{mk}, truncated at the order.
template <Coefficient C>
TwistedSeries<C> twisted_adams(const TwistedSeries<C>& f, unsigned m) {
  return f.with(adams(f.series(), m));
}

/// exp for o: n E_n = sum_k k h_k E_{n-k} T^{e k (n-k)}.
template <Coefficient C>
TwistedSeries<C> twisted_formal_exp(const TwistedSeries<C>& h) {
  using T = coefficient_traits<C>;
  if (!T::is_zero(h[0])) throw InvalidArgument("twisted exp: constant term must vanish");
  std::vector<C> e;
  e.reserve(h.order() + 1);
  e.push_back(T::one_like(h[0]));
  for (std::size_t n = 1; n <= h.order(); ++n) {
    C acc = T::zero_like(h[n]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (T::is_zero(h[k])) continue;
      C term = C(h[k] * e[n - k]);
      if (k != n) term = C(term * h.twist().factor(k, n - k));
      acc = C(acc + T::scale(term, Rat(static_cast<long>(k))));
    }
    e.push_back(T::scale(acc, make_rat(1, static_cast<long>(n))));
  }
  return h.with(Series<C>(std::move(e)));
}

/// log for o: L_n = f_n - (1/n) sum_{k<n} k L_k f_{n-k} T^{e k (n-k)}.
template <Coefficient C>
TwistedSeries<C> twisted_formal_log(const TwistedSeries<C>& f) {
  using T = coefficient_traits<C>;
  if (!is_one(f[0])) throw InvalidArgument("twisted log: constant term must be 1");
  std::vector<C> l;
  l.reserve(f.order() + 1);
  l.push_back(T::zero_like(f[0]));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = T::zero_like(f[n]);
    for (std::size_t k = 1; k < n; ++k) {
      if (T::is_zero(l[k]) || T::is_zero(f[n - k])) continue;
      C term = C(C(l[k] * f[n - k]) * f.twist().factor(k, n - k));
      acc = C(acc + T::scale(term, Rat(static_cast<long>(k))));
    }
    l.push_back(C(f[n] - T::scale(acc, make_rat(1, static_cast<long>(n)))));
  }
  return f.with(Series<C>(std::move(l)));
}

/// exp_o(sum_k psi_k(f)/k).
template <Coefficient C>
TwistedSeries<C> twisted_exp(const TwistedSeries<C>& f) {
  if (!coefficient_traits<C>::is_zero(f[0])) throw InvalidArgument("twisted_exp: constant term must vanish");
  Series<C> sum = Series<C>::constant(f.series().zero(), f.order());
  for (std::size_t k = 1; k <= f.order(); ++k)
    sum = sum + adams(f.series(), static_cast<unsigned>(k)).scaled(make_rat(1, static_cast<long>(k)));
  return twisted_formal_exp(f.with(std::move(sum)));
}

/// sum_k mu(k)/k psi_k(log_o f).
template <Coefficient C>
TwistedSeries<C> twisted_log(const TwistedSeries<C>& f) {
  if (!is_one(f[0])) throw InvalidArgument("twisted_log: constant term must be 1");
  const Series<C> l = twisted_formal_log(f).series();
  Series<C> out = Series<C>::constant(f.series().zero(), f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    const int mu = moebius(static_cast<long>(k));
    if (mu != 0) out = out + adams(l, static_cast<unsigned>(k)).scaled(make_rat(mu, static_cast<long>(k)));
  }
  return f.with(std::move(out));
}

}  // namespace modbetti
