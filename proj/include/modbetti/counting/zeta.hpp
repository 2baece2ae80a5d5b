#pragma once

// Zeta function of a smooth projective curve X of genus g over F_q:
//   Z_X(t) = P(t) / ((1 - t)(1 - q t)),   P(t) = 1 + a_1 t + ... + a_{2g} t^{2g} = prod (1 - w_i t).
// Everything is derived from the integer coefficients through Newton's
// identities; the roots w_i are never computed.

#include <cstddef>
#include <string>
#include <vector>

#include "modbetti/algebra/rat.hpp"

namespace modbetti {

namespace detail {

inline bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace detail

struct ZetaCheck {
  bool functional_equation = true;
  bool weil_bounds = true;
};

class ZetaData {
 public:
  /// Validated constructor from the numerator coefficients a_0..a_{2g}.
  ZetaData(long q, long genus, std::vector<BigInt> numerator, ZetaCheck checks = {})
      : q_(q), g_(genus), a_(std::move(numerator)) {
    validate(checks);
  }

  /// Numerator from N_1..N_g via p_k = q^k + 1 - N_k, Newton's identities for
  /// a_1..a_g and the functional equation a_{g+i} = q^i a_{g-i}.
  static ZetaData from_point_counts(long q, long genus, const std::vector<BigInt>& counts) {
    if (genus < 0) throw InvalidArgument("zeta: genus must be nonnegative");
    if (counts.size() < static_cast<std::size_t>(genus))
      throw InvalidArgument("zeta: need point counts N_1..N_g (" + std::to_string(genus) + " values), got " +
                            std::to_string(counts.size()));
    if (!detail::is_prime_power(q)) throw InvalidArgument("zeta: q = " + std::to_string(q) + " is not a prime power");
    const auto ug = static_cast<std::size_t>(genus);
    std::vector<BigInt> p(ug + 1, 0), a(2 * ug + 1, 0);
    a[0] = 1;
    for (std::size_t k = 1; k <= ug; ++k) p[k] = pow_int(BigInt(q), k) + 1 - counts[k - 1];
    for (std::size_t k = 1; k <= ug; ++k) {
      BigInt s = p[k];
      for (std::size_t i = 1; i < k; ++i) s += a[i] * p[k - i];
      if (s % static_cast<long>(k) != 0)
        throw InvalidArgument("zeta: point counts are inconsistent (non-integral numerator coefficient a_" +
                              std::to_string(k) + ")");
      a[k] = -s / static_cast<long>(k);
    }
    for (std::size_t i = 1; i <= ug; ++i) a[ug + i] = pow_int(BigInt(q), i) * a[ug - i];
    return ZetaData(q, genus, std::move(a));
  }

  long q() const { return q_; }
  long genus() const { return g_; }
  const std::vector<BigInt>& numerator() const { return a_; }

  /// Throws InvalidArgument naming the first failed condition.
  void validate(ZetaCheck checks = {}) const {
    if (g_ < 0) throw InvalidArgument("zeta: genus must be nonnegative");
    if (!detail::is_prime_power(q_)) throw InvalidArgument("zeta: q = " + std::to_string(q_) + " is not a prime power");
    const auto n = static_cast<std::size_t>(2 * g_ + 1);
    if (a_.size() != n)
      throw InvalidArgument("zeta: numerator must have 2g+1 = " + std::to_string(n) + " coefficients, got " +
                            std::to_string(a_.size()));
    if (a_[0] != 1) throw InvalidArgument("zeta: numerator constant term must be 1");
    if (checks.functional_equation) {
      for (long i = 0; i <= g_; ++i) {
        const BigInt expected = pow_int(BigInt(q_), static_cast<unsigned long>(g_ - i)) * a_[static_cast<std::size_t>(i)];
        if (a_[static_cast<std::size_t>(2 * g_ - i)] != expected)
          throw InvalidArgument("zeta: functional equation a_{2g-i} = q^{g-i} a_i fails at i = " + std::to_string(i));
      }
    }
    if (checks.weil_bounds) {
      for (std::size_t i = 1; i < n; ++i) {
        const BigInt c = detail::binomial(n - 1, i);
        if (a_[i] * a_[i] > c * c * pow_int(BigInt(q_), i))
          throw InvalidArgument("zeta: coefficient a_" + std::to_string(i) + " violates the Weil bound");
      }
    }
    if (numerator_at(Rat(1)) <= 0) throw InvalidArgument("zeta: P(1) must be positive");
  }

  /// p_k = sum_i w_i^k for k = 1..K: p_k = -sum_{i<k} a_i p_{k-i} - k a_k.
  std::vector<BigInt> power_sums(std::size_t count) const {
    std::vector<BigInt> p(count + 1, 0);
    for (std::size_t k = 1; k <= count; ++k) {
      BigInt s = k < a_.size() ? BigInt(-static_cast<long>(k) * a_[k]) : BigInt(0);
      for (std::size_t i = 1; i < k && i < a_.size(); ++i) s -= a_[i] * p[k - i];
      p[k] = s;
    }
    p.erase(p.begin());
    return p;
  }

  /// The same curve over F_{q^j}: power sums dilate p_k -> p_{jk}.
  ZetaData extension(unsigned j) const {
    if (j == 0) throw InvalidArgument("zeta: extension degree must be positive");
    if (j == 1) return *this;
    const std::size_t n = a_.size() - 1;
    const auto p = power_sums(n * j);
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt s = p[k * j - 1];
      for (std::size_t i = 1; i < k; ++i) s += a[i] * p[(k - i) * j - 1];
      if (s % static_cast<long>(k) != 0) throw InvariantViolation("zeta: extension numerator is not integral");
      a[k] = -s / static_cast<long>(k);
    }
    return ZetaData(pow_q(j), g_, std::move(a), ZetaCheck{true, true}, Unchecked{});
  }

  /// N_j = #X(F_{q^j}) = q^j + 1 - p_j for j = 1..T.
  std::vector<BigInt> point_counts(std::size_t count) const {
    const auto p = power_sums(count);
    std::vector<BigInt> n;
    n.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) n.push_back(pow_q(static_cast<unsigned>(j)) + 1 - p[j - 1]);
    return n;
  }

  Rat numerator_at(const Rat& t) const {
    Rat acc = 0;
    for (std::size_t i = a_.size(); i-- > 0;) acc = acc * t + Rat(a_[i]);
    return acc;
  }

  Rat zeta_at(const Rat& t) const {
    const Rat den = (1 - t) * (1 - Rat(q_) * t);
    if (den == 0) throw DivisionByZero("zeta: evaluation at a pole");
    return numerator_at(t) / den;
  }

  BigInt pow_q(unsigned j) const { return pow_int(BigInt(q_), j); }

  friend bool operator==(const ZetaData& x, const ZetaData& y) {
    return x.q_ == y.q_ && x.g_ == y.g_ && x.a_ == y.a_;
  }

 private:
  struct Unchecked {};
  // Extensions of a validated curve; q^j may exceed long for large j, which
  // is rejected here rather than overflowing.
  ZetaData(const BigInt& q, long genus, std::vector<BigInt> a, ZetaCheck, Unchecked) : g_(genus), a_(std::move(a)) {
    if (!q.fits_slong_p()) throw CapacityError("zeta: q^j does not fit in a machine integer");
    q_ = q.get_si();
  }

  long q_ = 0;
  long g_ = 0;
  std::vector<BigInt> a_;
};

}  // namespace modbetti
