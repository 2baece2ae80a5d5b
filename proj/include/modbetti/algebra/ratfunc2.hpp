#pragma once

#include <map>
#include <optional>
#include <utility>

#include "modbetti/algebra/poly2.hpp"
#include "modbetti/algebra/ratfunc.hpp"

namespace modbetti {

// {(a, b) -> m} standing for prod (1 - u^a v^b)^m.
using MonomialDenominator = std::map<std::pair<unsigned, unsigned>, unsigned>;

/// Element of Q(u, v) kept as sign * u^eu v^ev * N(u, v) / prod (1 - u^a v^b)^m.
///
/// N is divisible by neither u nor v, its first term (by total degree, then
/// u-degree) is positive, and it is not divisible by any denominator factor.
class RatFunc2 {
 public:
  RatFunc2() = default;
  RatFunc2(const Rat& c) : RatFunc2(from_parts(Poly2(c), {}, 0, 0)) {}  // NOLINT(google-explicit-constructor)
  RatFunc2(long c) : RatFunc2(Rat(c)) {}                                 // NOLINT(google-explicit-constructor)
  RatFunc2(const Poly2& p) : RatFunc2(from_parts(p, {}, 0, 0)) {}        // NOLINT(google-explicit-constructor)

  static RatFunc2 from_parts(Poly2 num, MonomialDenominator den, long eu = 0, long ev = 0) {
    RatFunc2 r;
    if (num.is_zero()) return r;
    const auto [mu, mv] = num.min_exponents();
    if (mu > 0 || mv > 0) {
      num = num.shift(-static_cast<long>(mu), -static_cast<long>(mv));
      eu += static_cast<long>(mu);
      ev += static_cast<long>(mv);
    }
    if (num.leading_sign() < 0) {
      num = -num;
      r.sign_ = -1;
    }
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
      const auto [a, b] = it->first;
      while (it->second > 0) {
        auto q = num.try_divide_one_minus_monomial(a, b);
        if (!q) break;
        num = std::move(*q);
        --it->second;
      }
    }
    for (auto it = den.begin(); it != den.end();) {
      if (it->second == 0)
        it = den.erase(it);
      else
        ++it;
    }
    r.eu_ = eu;
    r.ev_ = ev;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  static RatFunc2 monomial(long eu, long ev) { return from_parts(Poly2(1), {}, eu, ev); }

  // f(t) with t = u v.
  static RatFunc2 from_diagonal(const RatFunc& f) {
    if (f.is_zero()) return RatFunc2();
    MonomialDenominator den;
    for (const auto& [i, m] : f.denominator()) den[{i, i}] += m;
    RatFunc2 r = from_parts(Poly2::from_diagonal(f.numerator()), std::move(den), f.shift(), f.shift());
    return f.sign() < 0 ? -r : r;
  }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return is_zero() ? 0 : sign_; }
  long u_shift() const { return eu_; }
  long v_shift() const { return ev_; }
  const Poly2& numerator() const { return num_; }
  const MonomialDenominator& denominator() const { return den_; }

  Poly2 numerator_over(const MonomialDenominator& common) const {
    Poly2 p = sign_ < 0 ? -num_ : num_;
    for (const auto& [ab, m] : common) {
      const auto it = den_.find(ab);
      const unsigned have = it == den_.end() ? 0 : it->second;
      for (unsigned r = have; r < m; ++r) p = p.mul_one_minus_monomial(ab.first, ab.second);
    }
    return p;
  }

  RatFunc2 operator-() const {
    RatFunc2 r = *this;
    if (!r.is_zero()) r.sign_ = -r.sign_;
    return r;
  }

  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) { return add(a, b, false); }
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return add(a, b, true); }

  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc2();
    MonomialDenominator den = a.den_;
    for (const auto& [ab, m] : b.den_) den[ab] += m;
    Poly2 num = a.num_ * b.num_;
    if (a.sign_ * b.sign_ < 0) num = -num;
    return from_parts(std::move(num), std::move(den), a.eu_ + b.eu_, a.ev_ + b.ev_);
  }

  friend RatFunc2 operator*(const RatFunc2& a, const Rat& c) {
    if (c == 0 || a.is_zero()) return RatFunc2();
    RatFunc2 r = a;
    r.num_ = r.num_ * (c < 0 ? Rat(-c) : c);
    if (c < 0) r.sign_ = -r.sign_;
    return r;
  }

  friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc2: division by zero");
    auto inv = b.inverse();
    if (!inv) throw NotRepresentable("RatFunc2: divisor numerator is not a product of (1 - u^a v^b)");
    return a * *inv;
  }

  /// Inverse when the numerator peels into (1 - u^a v^b) factors. Greedy by
  /// decreasing a + b; sufficient for the divisors used here (constants,
  /// monomials, products of (1 - (uv)^i)).
  std::optional<RatFunc2> inverse() const {
    if (is_zero()) return std::nullopt;
    Poly2 p = num_;
    MonomialDenominator num_factors;
    while (p.total_degree() > 0) {
      bool found = false;
      const auto deg = static_cast<std::size_t>(p.total_degree());
      for (std::size_t s = deg; s >= 1 && !found; --s) {
        for (std::size_t a = 0; a <= s && !found; ++a) {
          auto q = p.try_divide_one_minus_monomial(a, s - a);
          if (q) {
            p = std::move(*q);
            ++num_factors[{static_cast<unsigned>(a), static_cast<unsigned>(s - a)}];
            found = true;
          }
        }
      }
      if (!found) return std::nullopt;
    }
    const Rat c = p.coeff(0, 0);
    Poly2 num(Rat(sign_) / c);
    for (const auto& [ab, m] : den_)
      for (unsigned r = 0; r < m; ++r) num = num.mul_one_minus_monomial(ab.first, ab.second);
    return from_parts(std::move(num), std::move(num_factors), -eu_, -ev_);
  }

  RatFunc2& operator+=(const RatFunc2& o) { return *this = *this + o; }
  RatFunc2& operator-=(const RatFunc2& o) { return *this = *this - o; }
  RatFunc2& operator*=(const RatFunc2& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc2& a, const RatFunc2& b) { return (a - b).is_zero(); }

  std::optional<Poly2> as_polynomial() const {
    if (is_zero()) return Poly2();
    if (!den_.empty() || eu_ < 0 || ev_ < 0) return std::nullopt;
    Poly2 p = num_.shift(eu_, ev_);
    return sign_ < 0 ? -p : p;
  }

  RatFunc2 adams(unsigned m) const {
    if (m == 1 || is_zero()) return *this;
    MonomialDenominator den;
    for (const auto& [ab, k] : den_) den[{ab.first * m, ab.second * m}] += k;
    const long lm = static_cast<long>(m);
    RatFunc2 r = from_parts(num_.adams(m), std::move(den), eu_ * lm, ev_ * lm);
    return sign_ < 0 ? -r : r;
  }

  // u = v
  RatFunc diagonal_specialization() const {
    if (is_zero()) return RatFunc();
    CyclotomicDenominator den;
    for (const auto& [ab, m] : den_) den[ab.first + ab.second] += m;
    RatFunc r = RatFunc::from_parts(num_.diagonal_specialization(), std::move(den), eu_ + ev_);
    return sign_ < 0 ? -r : r;
  }

  Rat evaluate(const Rat& x, const Rat& y) const {
    if (is_zero()) return Rat(0);
    Rat den = 1;
    for (const auto& [ab, m] : den_) den *= pow_rat(1 - pow_rat(x, ab.first) * pow_rat(y, ab.second), m);
    if (den == 0) throw DivisionByZero("RatFunc2: evaluation at a pole");
    return Rat(sign_) * pow_rat(x, eu_) * pow_rat(y, ev_) * num_.evaluate(x, y) / den;
  }

 private:
  int sign_ = 1;
  long eu_ = 0;
  long ev_ = 0;
  Poly2 num_;
  MonomialDenominator den_;

  static RatFunc2 add(const RatFunc2& a, const RatFunc2& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    MonomialDenominator common = a.den_;
    for (const auto& [ab, m] : b.den_) common[ab] = std::max(common[ab], m);
    const long eu = std::min(a.eu_, b.eu_);
    const long ev = std::min(a.ev_, b.ev_);
    Poly2 na = a.numerator_over(common).shift(a.eu_ - eu, a.ev_ - ev);
    Poly2 nb = b.numerator_over(common).shift(b.eu_ - eu, b.ev_ - ev);
    return from_parts(subtract ? na - nb : na + nb, std::move(common), eu, ev);
  }
};

}  // namespace modbetti
