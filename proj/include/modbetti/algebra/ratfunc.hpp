#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "modbetti/algebra/poly.hpp"

namespace modbetti {

// Multiset {i -> m_i} standing for prod (1 - v^i)^{m_i}.
using CyclotomicDenominator = std::map<unsigned, unsigned>;

namespace detail {

// Writes a nonzero polynomial as c * prod (1 - v^i)^{m_i} if possible.
// The largest i with (1 - v^i) | p is always one of the factors, so greedy
// peeling from the top is complete.
inline std::optional<std::pair<Rat, CyclotomicDenominator>> factor_one_minus_powers(PolyQ p) {
  CyclotomicDenominator factors;
  while (p.degree() > 0) {
    bool found = false;
    for (auto i = static_cast<std::size_t>(p.degree()); i >= 1; --i) {
      if (p.divisible_by_one_minus_power(i)) {
        p = p.divide_one_minus_power(i);
        ++factors[static_cast<unsigned>(i)];
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (p.is_zero()) return std::nullopt;
  return std::make_pair(p.coeff(0), std::move(factors));
}

// Phi_d(v), from v^d - 1 = prod_{e | d} Phi_e(v).
inline PolyQ cyclotomic_polynomial(unsigned d) {
  PolyQ p = -PolyQ::one_minus_power(d);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) p = divmod(p, cyclotomic_polynomial(e)).first;
  return p;
}

// Writes p as c * v^s * prod Phi_d^{k_d} if possible, returning c, s and the
// exponents. Phi_d has degree phi(d) >= sqrt(d/2), so d <= 2 deg(p)^2.
struct CyclotomicFactorization {
  Rat constant;
  std::size_t shift;
  std::map<unsigned, unsigned> exponents;
};

inline std::optional<CyclotomicFactorization> factor_cyclotomic(const PolyQ& p0) {
  if (p0.is_zero()) return std::nullopt;
  CyclotomicFactorization out{Rat(0), p0.valuation(), {}};
  PolyQ p = p0.shift_down(out.shift);
  const auto bound = static_cast<unsigned>(2 * p.degree() * p.degree() + 2);
  for (unsigned d = 1; d <= bound && p.degree() > 0; ++d) {
    const PolyQ phi = cyclotomic_polynomial(d);
    if (phi.degree() > p.degree()) continue;
    while (p.degree() >= phi.degree()) {
      auto [q, r] = divmod(p, phi);
      if (!r.is_zero()) break;
      p = std::move(q);
      ++out.exponents[d];
    }
  }
  if (p.degree() != 0) return std::nullopt;
  out.constant = p.coeff(0);
  return out;
}

}  // namespace detail

/// Element of Q(v) kept as sign * v^shift * N(v) / prod (1 - v^i)^{m_i}.
///
/// N has a positive constant term and is not divisible by any (1 - v^i)
/// present in the denominator. The form is not unique (1/(1-v) equals
/// (1+v)/(1-v^2)), so equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rat& c) : RatFunc(from_parts(PolyQ(c), {}, 0)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}                              // NOLINT(google-explicit-constructor)
  RatFunc(const PolyQ& p) : RatFunc(from_parts(p, {}, 0)) {}        // NOLINT(google-explicit-constructor)

  /// Canonicalizes num * v^shift / prod (1 - v^i)^{m_i}, cancelling every
  /// denominator factor that divides the numerator.
  static RatFunc from_parts(PolyQ num, CyclotomicDenominator den, long shift = 0) {
    RatFunc r;
    if (num.is_zero()) return r;
    const std::size_t val = num.valuation();
    if (val > 0) {
      num = num.shift_down(val);
      shift += static_cast<long>(val);
    }
    if (num.constant_sign() < 0) {
      num = -num;
      r.sign_ = -1;
    }
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
      if (it->first == 0) throw DivisionByZero("RatFunc: factor (1 - v^0) is zero");
      while (it->second > 0 && num.divisible_by_one_minus_power(it->first)) {
        num = num.divide_one_minus_power(it->first);
        --it->second;
      }
    }
    for (auto it = den.begin(); it != den.end();) {
      if (it->second == 0)
        it = den.erase(it);
      else
        ++it;
    }
    r.shift_ = shift;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  static RatFunc v_power(long e) { return from_parts(PolyQ(1), {}, e); }

  // 1 / (1 - v^i)^m
  static RatFunc inverse_one_minus_power(unsigned i, unsigned m = 1) {
    return from_parts(PolyQ(1), {{i, m}}, 0);
  }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return is_zero() ? 0 : sign_; }
  long shift() const { return shift_; }
  const PolyQ& numerator() const { return num_; }
  const CyclotomicDenominator& denominator() const { return den_; }

  /// sign * v^shift * N as a polynomial over `common`, which must contain den_.
  /// Returns the integer shift separately since it may be negative.
  PolyQ numerator_over(const CyclotomicDenominator& common) const {
    PolyQ p = sign_ < 0 ? -num_ : num_;
    for (const auto& [i, m] : common) {
      const auto it = den_.find(i);
      const unsigned have = it == den_.end() ? 0 : it->second;
      for (unsigned r = have; r < m; ++r) p = p.mul_one_minus_power(i);
    }
    return p;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    if (!r.is_zero()) r.sign_ = -r.sign_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    CyclotomicDenominator den = a.den_;
    for (const auto& [i, m] : b.den_) den[i] += m;
    PolyQ num = a.num_ * b.num_;
    if (a.sign_ * b.sign_ < 0) num = -num;
    return from_parts(std::move(num), std::move(den), a.shift_ + b.shift_);
  }

  friend RatFunc operator*(const RatFunc& a, const Rat& c) {
    if (c == 0 || a.is_zero()) return RatFunc();
    RatFunc r = a;
    r.num_ = r.num_ * (c < 0 ? Rat(-c) : c);
    if (c < 0) r.sign_ = -r.sign_;
    return r;
  }

  /// Exact division. The divisor's numerator must itself be a product of
  /// (1 - v^i) factors times a constant; anything else has no factored form.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    auto inv = b.inverse();
    if (!inv) throw NotRepresentable("RatFunc: divisor numerator is not a product of (1 - v^i)");
    return a * *inv;
  }

  std::optional<RatFunc> inverse() const {
    if (is_zero()) return std::nullopt;
    auto factored = detail::factor_one_minus_powers(num_);
    if (!factored) return inverse_cyclotomic();
    auto& [c, num_factors] = *factored;
    PolyQ num(Rat(sign_) / c);
    for (const auto& [i, m] : den_) num = num * PolyQ::one_minus_power(i, m);
    return from_parts(std::move(num), std::move(num_factors), -shift_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

  /// The polynomial this function equals, if the denominator is trivial and
  /// the monomial shift nonnegative.
  std::optional<PolyQ> as_polynomial() const {
    if (is_zero()) return PolyQ();
    if (!den_.empty() || shift_ < 0) return std::nullopt;
    PolyQ p = num_.shift_up(static_cast<std::size_t>(shift_));
    return sign_ < 0 ? -p : p;
  }

  /// Laurent polynomial view: (coefficients, lowest exponent). Requires an
  /// empty denominator.
  std::optional<std::pair<PolyQ, long>> as_laurent() const {
    if (!den_.empty()) return std::nullopt;
    return std::make_pair(sign_ < 0 ? -num_ : num_, shift_);
  }

  // v -> v^m
  RatFunc adams(unsigned m) const {
    if (m == 1 || is_zero()) return *this;
    CyclotomicDenominator den;
    for (const auto& [i, k] : den_) den[i * m] += k;
    RatFunc r = from_parts(num_.adams(m), std::move(den), shift_ * static_cast<long>(m));
    if (sign_ < 0) r = -r;
    return r;
  }

  // v -> 1/v, using 1 - v^{-i} = -v^{-i} (1 - v^i).
  RatFunc invert_variable() const {
    if (is_zero()) return *this;
    long shift = -shift_ - num_.degree();
    long flips = 0;
    for (const auto& [i, m] : den_) {
      shift += static_cast<long>(i) * m;
      flips += m;
    }
    RatFunc r = from_parts(num_.reversed(), den_, shift);
    if ((sign_ < 0) != (flips % 2 != 0)) r = -r;
    return r;
  }

  Rat evaluate(const Rat& x) const {
    if (is_zero()) return Rat(0);
    Rat den = 1;
    for (const auto& [i, m] : den_) den *= pow_rat(1 - pow_rat(x, i), m);
    if (den == 0) throw DivisionByZero("RatFunc: evaluation at a pole");
    return Rat(sign_) * pow_rat(x, shift_) * num_.evaluate(x) / den;
  }

 private:
  // 1 / Phi_d = -prod_{e | d, e < d} Phi_e / (1 - v^d)
  std::optional<RatFunc> inverse_cyclotomic() const {
    auto f = detail::factor_cyclotomic(num_);
    if (!f) return std::nullopt;
    PolyQ num(Rat(sign_) / f->constant);
    CyclotomicDenominator den;
    for (const auto& [d, k] : f->exponents) {
      PolyQ cofactor = -PolyQ::one_minus_power(d);
      cofactor = divmod(cofactor, detail::cyclotomic_polynomial(d)).first;
      for (unsigned r = 0; r < k; ++r) num = num * -cofactor;
      den[d] += k;
    }
    for (const auto& [i, m] : den_) num = num * PolyQ::one_minus_power(i, m);
    return from_parts(std::move(num), std::move(den), -shift_ - static_cast<long>(f->shift));
  }

  int sign_ = 1;
  long shift_ = 0;
  PolyQ num_;
  CyclotomicDenominator den_;

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    CyclotomicDenominator common = a.den_;
    for (const auto& [i, m] : b.den_) common[i] = std::max(common[i], m);
    const long shift = std::min(a.shift_, b.shift_);
    PolyQ na = a.numerator_over(common).shift_up(static_cast<std::size_t>(a.shift_ - shift));
    PolyQ nb = b.numerator_over(common).shift_up(static_cast<std::size_t>(b.shift_ - shift));
    return from_parts(subtract ? na - nb : na + nb, std::move(common), shift);
  }
};

}  // namespace modbetti
