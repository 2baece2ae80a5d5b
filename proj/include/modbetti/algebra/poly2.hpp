#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "modbetti/algebra/poly.hpp"

namespace modbetti {

/// Polynomial in (u, v) over the rationals.
///
/// Dense rectangular storage (rows = powers of u, columns = powers of v) of
/// integer coefficients over a common positive denominator. Supports are
/// banded around the diagonal for Hodge-type inputs; zero entries are skipped
/// in products.
class Poly2 {
 public:
  struct Term {
    std::size_t u;
    std::size_t v;
    Rat coeff;
  };

  Poly2() = default;
  Poly2(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) {
      rows_ = cols_ = 1;
      data_.push_back(c.get_num());
      den_ = c.get_den();
    }
  }
  Poly2(long c) : Poly2(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 monomial(const Rat& c, std::size_t eu, std::size_t ev) {
    Poly2 p;
    if (c == 0) return p;
    p.resize(eu + 1, ev + 1);
    p.at(eu, ev) = c.get_num();
    p.den_ = c.get_den();
    return p;
  }

  static Poly2 from_terms(const std::vector<Term>& terms) {
    Poly2 p;
    std::size_t ru = 0, cv = 0;
    BigInt den = 1;
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      ru = std::max(ru, t.u + 1);
      cv = std::max(cv, t.v + 1);
      den = detail::lcm(den, t.coeff.get_den());
    }
    if (ru == 0) return p;
    p.resize(ru, cv);
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      p.at(t.u, t.v) += t.coeff.get_num() * (den / t.coeff.get_den());
    }
    p.den_ = den;
    p.normalize();
    return p;
  }

  // Embeds p(t) with t = u*v.
  static Poly2 from_diagonal(const PolyQ& p) {
    Poly2 out;
    if (p.is_zero()) return out;
    const auto& c = p.integer_coefficients();
    out.resize(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.at(i, i) = c[i];
    out.den_ = p.denominator();
    return out;
  }

  bool is_zero() const { return data_.empty(); }
  std::size_t u_extent() const { return rows_; }
  std::size_t v_extent() const { return cols_; }

  Rat coeff(std::size_t eu, std::size_t ev) const {
    if (eu >= rows_ || ev >= cols_) return Rat(0);
    Rat r(at(eu, ev), den_);
    r.canonicalize();
    return r;
  }

  // Nonzero terms ordered by (total degree, u-degree).
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) out.push_back({i, j, coeff(i, j)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
      return std::tuple(a.u + a.v, a.u) < std::tuple(b.u + b.v, b.u);
    });
    return out;
  }

  long total_degree() const {
    long d = -1;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) d = std::max(d, static_cast<long>(i + j));
    return d;
  }

  // Smallest u-exponent and v-exponent over the support.
  std::pair<std::size_t, std::size_t> min_exponents() const {
    std::size_t mu = rows_, mv = cols_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) {
          mu = std::min(mu, i);
          mv = std::min(mv, j);
        }
    return {mu, mv};
  }

  // Sign of the first term in terms() order.
  int leading_sign() const {
    auto t = terms();
    return t.empty() ? 0 : sgn(t.front().coeff);
  }

  Poly2 shift(long du, long dv) const {
    if (is_zero() || (du == 0 && dv == 0)) return *this;
    const auto [mu, mv] = min_exponents();
    if (static_cast<long>(mu) + du < 0 || static_cast<long>(mv) + dv < 0)
      throw InvariantViolation("Poly2::shift produces a negative exponent");
    Poly2 p;
    p.resize(static_cast<std::size_t>(static_cast<long>(rows_) + du),
             static_cast<std::size_t>(static_cast<long>(cols_) + dv));
    for (std::size_t i = mu; i < rows_; ++i)
      for (std::size_t j = mv; j < cols_; ++j)
        if (at(i, j) != 0)
          p.at(static_cast<std::size_t>(static_cast<long>(i) + du),
               static_cast<std::size_t>(static_cast<long>(j) + dv)) = at(i, j);
    p.den_ = den_;
    p.normalize();
    return p;
  }

  Poly2 operator-() const {
    Poly2 p = *this;
    for (auto& c : p.data_) c = -c;
    return p;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) { return combine(a, b, false); }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) { return combine(a, b, true); }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 p;
    if (a.is_zero() || b.is_zero()) return p;
    p.resize(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
    std::vector<std::pair<std::size_t, std::size_t>> bnz;
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(i, j) != 0) bnz.emplace_back(i, j);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const BigInt& x = a.at(i, j);
        if (x == 0) continue;
        for (const auto& [k, l] : bnz)
          mpz_addmul(p.at(i + k, j + l).get_mpz_t(), x.get_mpz_t(), b.at(k, l).get_mpz_t());
      }
    p.den_ = a.den_ * b.den_;
    p.normalize();
    return p;
  }

  friend Poly2 operator*(const Poly2& a, const Rat& c) {
    if (c == 0 || a.is_zero()) return Poly2();
    Poly2 p = a;
    for (auto& x : p.data_) x *= c.get_num();
    p.den_ *= c.get_den();
    p.normalize();
    return p;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.den_ == b.den_;
  }

  Poly2 mul_one_minus_monomial(std::size_t a, std::size_t b) const {
    if (is_zero()) return *this;
    Poly2 p;
    p.resize(rows_ + a, cols_ + b);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const BigInt& x = at(i, j);
        if (x == 0) continue;
        p.at(i, j) += x;
        p.at(i + a, j + b) -= x;
      }
    p.den_ = den_;
    p.normalize();
    return p;
  }

  // Quotient by (1 - u^a v^b) if exact. Running sums along each line
  // m, m + (a,b), ... give the quotient; the line total must vanish.
  std::optional<Poly2> try_divide_one_minus_monomial(std::size_t a, std::size_t b) const {
    if (a == 0 && b == 0) throw DivisionByZero("Poly2: factor (1 - u^0 v^0) is zero");
    if (is_zero()) return *this;
    Poly2 q;
    q.resize(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        q.at(i, j) = at(i, j);
        if (i >= a && j >= b) q.at(i, j) += q.at(i - a, j - b);
      }
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((i + a >= rows_ || j + b >= cols_) && q.at(i, j) != 0) return std::nullopt;
    q.den_ = den_;
    q.normalize();
    return q;
  }

  // (u, v) -> (u^m, v^m)
  Poly2 adams(unsigned m) const {
    if (m == 1 || is_zero()) return *this;
    Poly2 p;
    p.resize((rows_ - 1) * m + 1, (cols_ - 1) * m + 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) p.at(i * m, j * m) = at(i, j);
    p.den_ = den_;
    return p;
  }

  // u = v
  PolyQ diagonal_specialization() const {
    if (is_zero()) return PolyQ();
    std::vector<BigInt> c(rows_ + cols_ - 1, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) c[i + j] += at(i, j);
    return PolyQ::from_integers(std::move(c), den_);
  }

  Rat evaluate(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (std::size_t i = rows_; i-- > 0;) {
      Rat row = 0;
      for (std::size_t j = cols_; j-- > 0;) row = row * y + Rat(at(i, j));
      acc = acc * x + row;
    }
    return acc / Rat(den_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
  BigInt den_ = 1;

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void resize(std::size_t r, std::size_t c) {
    rows_ = r;
    cols_ = c;
    data_.assign(r * c, 0);
  }

  void normalize() {
    std::size_t r = 0, c = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) {
          r = std::max(r, i + 1);
          c = std::max(c, j + 1);
        }
    if (r == 0) {
      rows_ = cols_ = 0;
      data_.clear();
      den_ = 1;
      return;
    }
    if (r != rows_ || c != cols_) {
      std::vector<BigInt> d(r * c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) d[i * c + j] = std::move(at(i, j));
      data_ = std::move(d);
      rows_ = r;
      cols_ = c;
    }
    detail::reduce_content(data_, den_);
  }

  static Poly2 combine(const Poly2& a, const Poly2& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    Poly2 p;
    p.resize(std::max(a.rows_, b.rows_), std::max(a.cols_, b.cols_));
    const BigInt den = detail::lcm(a.den_, b.den_);
    const BigInt fa = den / a.den_;
    const BigInt fb = den / b.den_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a.at(i, j) != 0) p.at(i, j) = a.at(i, j) * fa;
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const BigInt& x = b.at(i, j);
        if (x == 0) continue;
        if (subtract)
          mpz_submul(p.at(i, j).get_mpz_t(), x.get_mpz_t(), fb.get_mpz_t());
        else
          mpz_addmul(p.at(i, j).get_mpz_t(), x.get_mpz_t(), fb.get_mpz_t());
      }
    p.den_ = den;
    p.normalize();
    return p;
  }
};

}  // namespace modbetti
