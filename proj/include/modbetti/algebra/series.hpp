#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "modbetti/algebra/ratfunc.hpp"
#include "modbetti/algebra/ratfunc2.hpp"

namespace modbetti {

/// Per-ring hooks needed by the series and lambda-ring code. Coefficient
/// rings are Q-algebras; "like" arguments carry shape (e.g. vector length for
/// extension-indexed sequences) and are otherwise ignored.
template <class C>
struct coefficient_traits;

template <class C>
concept Coefficient = requires(const C& a, const C& b, const Rat& r, unsigned m) {
  { C(a + b) };
  { C(a - b) };
  { C(a * b) };
  { coefficient_traits<C>::zero_like(a) } -> std::convertible_to<C>;
  { coefficient_traits<C>::one_like(a) } -> std::convertible_to<C>;
  { coefficient_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
  { coefficient_traits<C>::scale(a, r) } -> std::convertible_to<C>;
  { coefficient_traits<C>::adams(a, m) } -> std::convertible_to<C>;
  { coefficient_traits<C>::inverse(a) } -> std::convertible_to<std::optional<C>>;
};

template <>
struct coefficient_traits<Rat> {
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static Rat scale(const Rat& a, const Rat& r) { return a * r; }
  static Rat adams(const Rat& a, unsigned) { return a; }
  static std::optional<Rat> inverse(const Rat& a) {
    if (a == 0) return std::nullopt;
    return Rat(1 / a);
  }
};

template <>
struct coefficient_traits<RatFunc> {
  static RatFunc zero_like(const RatFunc&) { return RatFunc(); }
  static RatFunc one_like(const RatFunc&) { return RatFunc(1); }
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
  static RatFunc scale(const RatFunc& a, const Rat& r) { return a * r; }
  static RatFunc adams(const RatFunc& a, unsigned m) { return a.adams(m); }
  static std::optional<RatFunc> inverse(const RatFunc& a) { return a.inverse(); }
};

template <>
struct coefficient_traits<RatFunc2> {
  static RatFunc2 zero_like(const RatFunc2&) { return RatFunc2(); }
  static RatFunc2 one_like(const RatFunc2&) { return RatFunc2(1); }
  static bool is_zero(const RatFunc2& a) { return a.is_zero(); }
  static RatFunc2 scale(const RatFunc2& a, const Rat& r) { return a * r; }
  static RatFunc2 adams(const RatFunc2& a, unsigned m) { return a.adams(m); }
  static std::optional<RatFunc2> inverse(const RatFunc2& a) { return a.inverse(); }
};

template <Coefficient C>
bool is_one(const C& a) {
  using T = coefficient_traits<C>;
  return T::is_zero(C(a - T::one_like(a)));
}

/// Truncated power series c_0 + c_1 x + ... + c_K x^K.
///
/// The truncation order K is part of the value; binary operations truncate
/// to the smaller order and never touch coefficients beyond it.
template <Coefficient C>
class Series {
 public:
  using coefficient_type = C;

  explicit Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InvalidArgument("Series: at least the constant term is required");
  }

  static Series constant(const C& c0, std::size_t order) {
    std::vector<C> c(order + 1, coefficient_traits<C>::zero_like(c0));
    c[0] = c0;
    return Series(std::move(c));
  }

  // 0 + ... + c x^k + ... up to `order`, zeros shaped like `c`.
  static Series monomial(const C& c, std::size_t k, std::size_t order) {
    std::vector<C> out(order + 1, coefficient_traits<C>::zero_like(c));
    if (k <= order) out[k] = c;
    return Series(std::move(out));
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t k) const { return c_.at(k); }
  C& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<C>& coefficients() const { return c_; }

  C zero() const { return coefficient_traits<C>::zero_like(c_[0]); }
  C one() const { return coefficient_traits<C>::one_like(c_[0]); }

  Series truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return Series(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t k = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out.push_back(C(a.c_[i] + b.c_[i]));
    return Series(std::move(out));
  }

  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t k = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out.push_back(C(a.c_[i] - b.c_[i]));
    return Series(std::move(out));
  }

  // Cauchy product.
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t k = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(k + 1);
    for (std::size_t n = 0; n <= k; ++n) {
      C acc = C(a.c_[0] * b.c_[n]);
      for (std::size_t i = 1; i <= n; ++i) {
        if (coefficient_traits<C>::is_zero(a.c_[i]) || coefficient_traits<C>::is_zero(b.c_[n - i])) continue;
        acc = C(acc + C(a.c_[i] * b.c_[n - i]));
      }
      out.push_back(std::move(acc));
    }
    return Series(std::move(out));
  }

  // Coefficientwise product with a ring element.
  Series times(const C& g) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(C(c * g));
    return Series(std::move(out));
  }

  Series scaled(const Rat& r) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(coefficient_traits<C>::scale(c, r));
    return Series(std::move(out));
  }

 private:
  std::vector<C> c_;
};

template <Coefficient C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
  return a * b;
}

/// Multiplicative inverse, solved order by order; c_0 must be a unit of C.
template <Coefficient C>
Series<C> series_inv(const Series<C>& a) {
  auto inv0 = coefficient_traits<C>::inverse(a[0]);
  if (!inv0) throw DivisionByZero("series_inv: constant term is not invertible");
  std::vector<C> b;
  b.reserve(a.order() + 1);
  b.push_back(*inv0);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    C acc = coefficient_traits<C>::zero_like(a[n]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (coefficient_traits<C>::is_zero(a[k])) continue;
      acc = C(acc + C(a[k] * b[n - k]));
    }
    b.push_back(C(-C(acc * *inv0)));
  }
  return Series<C>(std::move(b));
}

/// exp(h) for h with zero constant term: E_n = (1/n) sum_k k h_k E_{n-k}.
template <Coefficient C>
Series<C> formal_exp(const Series<C>& h) {
  using T = coefficient_traits<C>;
  if (!T::is_zero(h[0])) throw InvalidArgument("formal_exp: constant term must vanish");
  std::vector<C> e;
  e.reserve(h.order() + 1);
  e.push_back(T::one_like(h[0]));
  for (std::size_t n = 1; n <= h.order(); ++n) {
    C acc = T::zero_like(h[n]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (T::is_zero(h[k])) continue;
      acc = C(acc + T::scale(C(h[k] * e[n - k]), Rat(static_cast<long>(k))));
    }
    e.push_back(T::scale(acc, make_rat(1, static_cast<long>(n))));
  }
  return Series<C>(std::move(e));
}

/// log(f) for f with constant term 1: L_n = f_n - (1/n) sum_{k<n} k L_k f_{n-k}.
template <Coefficient C>
Series<C> formal_log(const Series<C>& f) {
  using T = coefficient_traits<C>;
  if (!is_one(f[0])) throw InvalidArgument("formal_log: constant term must be 1");
  std::vector<C> l;
  l.reserve(f.order() + 1);
  l.push_back(T::zero_like(f[0]));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = T::zero_like(f[n]);
    for (std::size_t k = 1; k < n; ++k) {
      if (T::is_zero(l[k]) || T::is_zero(f[n - k])) continue;
      acc = C(acc + T::scale(C(l[k] * f[n - k]), Rat(static_cast<long>(k))));
    }
    l.push_back(C(f[n] - T::scale(acc, make_rat(1, static_cast<long>(n)))));
  }
  return Series<C>(std::move(l));
}

}  // namespace modbetti
