#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "modbetti/algebra/rat.hpp"

namespace modbetti {

namespace detail {

// Brings an integer vector with positive denominator `den` to lowest terms:
// gcd(content, den) == 1. A zero vector gets den == 1.
inline void reduce_content(std::span<BigInt> coeffs, BigInt& den) {
  BigInt g = den;
  for (const auto& c : coeffs) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
  if (all_zero) {
    den = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace detail

/// Dense univariate polynomial in v over the rationals.
///
/// Stored as integer coefficients over one positive common denominator so
/// that products run on integer multiply-adds. The zero polynomial has no
/// coefficients and degree -1.
class PolyQ {
 public:
  PolyQ() = default;

  PolyQ(const Rat& c) {  // NOLINT(google-explicit-constructor): constants embed naturally
    if (c != 0) {
      num_.push_back(c.get_num());
      den_ = c.get_den();
    }
  }
  PolyQ(long c) : PolyQ(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static PolyQ from_coefficients(const std::vector<Rat>& coeffs) {
    PolyQ p;
    BigInt den = 1;
    for (const auto& c : coeffs) den = detail::lcm(den, c.get_den());
    p.num_.reserve(coeffs.size());
    for (const auto& c : coeffs) p.num_.push_back(c.get_num() * (den / c.get_den()));
    p.den_ = den;
    p.normalize();
    return p;
  }

  static PolyQ from_integers(std::vector<BigInt> coeffs, BigInt den = 1) {
    if (den == 0) throw DivisionByZero("PolyQ: zero denominator");
    PolyQ p;
    p.num_ = std::move(coeffs);
    p.den_ = std::move(den);
    if (p.den_ < 0) {
      p.den_ = -p.den_;
      for (auto& c : p.num_) c = -c;
    }
    p.normalize();
    return p;
  }

  static PolyQ monomial(const Rat& c, std::size_t exponent) {
    PolyQ p;
    if (c == 0) return p;
    p.num_.assign(exponent + 1, 0);
    p.num_[exponent] = c.get_num();
    p.den_ = c.get_den();
    return p;
  }

  // (1 - v^i)^m
  static PolyQ one_minus_power(std::size_t i, unsigned m = 1) {
    PolyQ p(1);
    for (unsigned r = 0; r < m; ++r) p = p.mul_one_minus_power(i);
    return p;
  }

  bool is_zero() const { return num_.empty(); }
  long degree() const { return static_cast<long>(num_.size()) - 1; }
  std::size_t size() const { return num_.size(); }

  Rat coeff(std::size_t i) const {
    if (i >= num_.size()) return Rat(0);
    Rat r(num_[i], den_);
    r.canonicalize();
    return r;
  }

  std::vector<Rat> coefficients() const {
    std::vector<Rat> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
  }

  const std::vector<BigInt>& integer_coefficients() const { return num_; }
  const BigInt& denominator() const { return den_; }

  // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < num_.size(); ++i)
      if (num_[i] != 0) return i;
    return 0;
  }

  PolyQ shift_down(std::size_t k) const {
    PolyQ p;
    if (k >= num_.size()) return p;
    p.num_.assign(num_.begin() + static_cast<std::ptrdiff_t>(k), num_.end());
    p.den_ = den_;
    p.normalize();
    return p;
  }

  PolyQ shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    PolyQ p;
    p.num_.assign(k, 0);
    p.num_.insert(p.num_.end(), num_.begin(), num_.end());
    p.den_ = den_;
    return p;
  }

  PolyQ operator-() const {
    PolyQ p = *this;
    for (auto& c : p.num_) c = -c;
    return p;
  }

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b) { return combine(a, b, false); }
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return combine(a, b, true); }

  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ p;
    if (a.is_zero() || b.is_zero()) return p;
    p.num_.assign(a.num_.size() + b.num_.size() - 1, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j) {
        if (b.num_[j] == 0) continue;
        mpz_addmul(p.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    p.den_ = a.den_ * b.den_;
    p.normalize();
    return p;
  }

  friend PolyQ operator*(const PolyQ& a, const Rat& c) {
    if (c == 0 || a.is_zero()) return PolyQ();
    PolyQ p = a;
    for (auto& x : p.num_) x *= c.get_num();
    p.den_ *= c.get_den();
    p.normalize();
    return p;
  }
  friend PolyQ operator*(const Rat& c, const PolyQ& a) { return a * c; }

  PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
  PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Euclidean division: a = q * b + r with deg r < deg b.
  friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DivisionByZero("PolyQ: division by the zero polynomial");
    std::vector<Rat> r = a.coefficients();
    const std::vector<Rat> d = b.coefficients();
    const std::size_t db = d.size() - 1;
    if (r.size() <= db) return {PolyQ(), a};
    std::vector<Rat> q(r.size() - db, Rat(0));
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k] == 0) continue;
      const Rat f = r[k] / d[db];
      q[k - db] = f;
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * d[j];
    }
    return {from_coefficients(q), from_coefficients(r)};
  }

  PolyQ mul_one_minus_power(std::size_t i) const {
    if (is_zero()) return *this;
    PolyQ p;
    p.num_.assign(num_.size() + i, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) {
      p.num_[k] += num_[k];
      p.num_[k + i] -= num_[k];
    }
    p.den_ = den_;
    p.normalize();
    return p;
  }

  // (1 - v^i) divides p iff the coefficients in every residue class mod i sum to zero.
  bool divisible_by_one_minus_power(std::size_t i) const {
    if (is_zero()) return true;
    std::vector<BigInt> sums(std::min(i, num_.size()), 0);
    for (std::size_t k = 0; k < num_.size(); ++k) sums[k % i] += num_[k];
    return std::all_of(sums.begin(), sums.end(), [](const BigInt& s) { return s == 0; });
  }

  // Exact quotient by (1 - v^i); precondition: divisible_by_one_minus_power(i).
  PolyQ divide_one_minus_power(std::size_t i) const {
    if (!divisible_by_one_minus_power(i)) throw NotRepresentable("PolyQ: not divisible by (1 - v^i)");
    if (is_zero()) return *this;
    PolyQ q;
    q.num_.assign(num_.size() - i, 0);
    // q_k = sum of num_[k], num_[k - i], ... along the residue class.
    for (std::size_t k = 0; k < q.num_.size(); ++k) {
      q.num_[k] = num_[k];
      if (k >= i) q.num_[k] += q.num_[k - i];
    }
    q.den_ = den_;
    q.normalize();
    return q;
  }

  // v -> v^m
  PolyQ adams(unsigned m) const {
    if (m == 1 || is_zero()) return *this;
    PolyQ p;
    p.num_.assign((num_.size() - 1) * m + 1, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) p.num_[k * m] = num_[k];
    p.den_ = den_;
    return p;
  }

  // v^deg * p(1/v)
  PolyQ reversed() const {
    PolyQ p = *this;
    std::reverse(p.num_.begin(), p.num_.end());
    p.normalize();
    return p;
  }

  Rat evaluate(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t k = num_.size(); k-- > 0;) acc = acc * x + Rat(num_[k]);
    acc /= Rat(den_);
    return acc;
  }

  int constant_sign() const { return num_.empty() ? 0 : sgn(num_[0]); }

 private:
  std::vector<BigInt> num_;
  BigInt den_ = 1;

  void normalize() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    detail::reduce_content(num_, den_);
  }

  static PolyQ combine(const PolyQ& a, const PolyQ& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    PolyQ p;
    const BigInt den = detail::lcm(a.den_, b.den_);
    const BigInt fa = den / a.den_;
    const BigInt fb = den / b.den_;
    p.num_.assign(std::max(a.num_.size(), b.num_.size()), 0);
    for (std::size_t k = 0; k < a.num_.size(); ++k) p.num_[k] = a.num_[k] * fa;
    for (std::size_t k = 0; k < b.num_.size(); ++k) {
      if (subtract)
        mpz_submul(p.num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), fb.get_mpz_t());
      else
        mpz_addmul(p.num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), fb.get_mpz_t());
    }
    p.den_ = den;
    p.normalize();
    return p;
  }
};

}  // namespace modbetti
