#pragma once

// Exact counts over F_{q^j} for a concrete curve: m_n and r_alpha from the
// zeta function, then absolutely stable counts a_{k gamma}(F_{q^j}) by the
// same extraction as the symbolic pipeline with coefficients in CSeqVec
// (twist unit: the Lefschetz sequence (q^j)_j).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "modbetti/counting/cseq.hpp"
#include "modbetti/counting/zeta.hpp"
#include "modbetti/extract/extract.hpp"

namespace modbetti {

/// m_n(F_Q) for Q = q^j:
///   P_j(1)/(Q-1) * Q^{(n^2-1)(g-1)} * Z_j(Q^{-2}) ... Z_j(Q^{-n}).
inline Rat m_value(long n, const ZetaData& z, unsigned j = 1) {
  if (n < 1) throw InvalidArgument("m_value: rank must be positive");
  const ZetaData zj = z.extension(j);
  const Rat Q(zj.q());
  Rat out = zj.numerator_at(1) / (Q - 1) * pow_rat(Q, (n * n - 1) * (z.genus() - 1));
  for (long i = 2; i <= n; ++i) out *= zj.zeta_at(pow_rat(Q, -i));
  return out;
}

namespace detail {

// r_alpha(F_Q) from precomputed m_1..m_n at the same Q.
inline Rat r_value_from(const CharPair& alpha, long genus, const Rat& Q, const std::vector<Rat>& m) {
  Rat total = 0;
  for (const auto& c : compositions(alpha.rank)) {
    Rat term = pow_rat(Q, (genus - 1) * pair_sum(c)) * psi_coeff(c, alpha.degree).evaluate(Q);
    for (long part : c) term *= m[static_cast<std::size_t>(part - 1)];
    total += term;
  }
  return total;
}

inline std::vector<Rat> m_values(long n, const ZetaData& z, unsigned j) {
  std::vector<Rat> m;
  for (long i = 1; i <= n; ++i) m.push_back(m_value(i, z, j));
  return m;
}

}  // namespace detail

/// r_alpha(F_Q) = sum_{n*} Q^{(g-1) sum n_i n_j} Psi_{n*,d}(Q) m_{n_1} ... m_{n_k}, Q = q^j.
inline Rat r_value(const CharPair& alpha, const ZetaData& z, unsigned j = 1) {
  const Rat Q(z.extension(j).q());
  return detail::r_value_from(alpha, z.genus(), Q, detail::m_values(alpha.rank, z, j));
}

inline Twist<CSeqVec> lefschetz_twist(const SlopeRay& ray, const ZetaData& z, std::size_t length) {
  return {ray.twist_exponent(), [q = z.q(), length](long m) {
            return CSeqVec::generate(length, [&](std::size_t j) { return pow_rat(pow_rat(Rat(q), static_cast<long>(j)), m); });
          }};
}

/// 1 + sum_{k=1..K} (r_{k gamma}(F_{q^j}))_{j=1..T} x^k.
inline TwistedSeries<CSeqVec> build_count_series(const SlopeRay& ray, const ZetaData& z, std::size_t order,
                                                 std::size_t length) {
  if (z.genus() != ray.genus) throw InvalidArgument("count: ray genus does not match the curve genus");
  const long max_rank = ray.gamma.rank * static_cast<long>(order);
  std::vector<std::vector<Rat>> m(length);  // m[j-1][n-1]
  for (std::size_t j = 1; j <= length; ++j) m[j - 1] = detail::m_values(max_rank, z, static_cast<unsigned>(j));
  std::vector<CSeqVec> c{CSeqVec::constant(1, length)};
  for (std::size_t k = 1; k <= order; ++k) {
    const CharPair alpha = ray.at(static_cast<long>(k));
    c.push_back(CSeqVec::generate(length, [&](std::size_t j) {
      return detail::r_value_from(alpha, z.genus(), Rat(z.pow_q(static_cast<unsigned>(j))), m[j - 1]);
    }));
  }
  return {Series<CSeqVec>(std::move(c)), lefschetz_twist(ray, z, length)};
}

/// table[k-1][j-1] = a_{k gamma}(F_{q^j}) for k = 1..K, j = 1..j_max.
using CountTable = std::vector<std::vector<BigInt>>;

/// Requires length T >= K * j_max; Adams dilation would otherwise silently
/// drop the extensions the answer depends on.
inline CountTable stable_counts(const SlopeRay& ray, const ZetaData& z, std::size_t order, std::size_t length,
                                std::size_t j_max) {
  if (order < 1) throw InvalidArgument("stable_counts: order K must be at least 1");
  if (j_max < 1) throw InvalidArgument("stable_counts: at least one extension is required");
  if (length < order * j_max)
    throw CapacityError("stable_counts: sequence length T = " + std::to_string(length) + " is below K * j_max = " +
                        std::to_string(order * j_max));
  const auto r = build_count_series(ray, z, order, length);
  const CSeqVec divisor = CSeqVec::generate(length, [&](std::size_t j) { return Rat(1 - z.pow_q(static_cast<unsigned>(j))); });
  const auto a = stable_from_semistable(r, divisor);
  CountTable table(order);
  for (std::size_t k = 1; k <= order; ++k) {
    if (a[k].length() < j_max) throw InvariantViolation("stable_counts: coefficient shorter than the capacity rule promises");
    for (std::size_t j = 1; j <= j_max; ++j) {
      const Rat& x = a[k].at(j);
      if (x.get_den() != 1)
        throw InvariantViolation("stable count of " + to_string(ray.at(static_cast<long>(k))) + " over F_" +
                                 z.pow_q(static_cast<unsigned>(j)).get_str() + " is not an integer: " + to_string(x));
      table[k - 1].push_back(x.get_num());
    }
  }
  return table;
}

inline CountTable stable_counts(const SlopeRay& ray, const ZetaData& z, std::size_t order, std::size_t length) {
  return stable_counts(ray, z, order, length, length / order);
}

/// a_alpha(F_{q^j}) for j = 1..j_max.
inline std::vector<BigInt> stable_count(const CharPair& alpha, const ZetaData& z, std::size_t j_max) {
  const auto [ray, k] = SlopeRay::through(alpha, z.genus());
  const auto K = static_cast<std::size_t>(k);
  return stable_counts(ray, z, K, K * j_max, j_max)[K - 1];
}

/// s_{alpha, r}(F_q): stable bundles of character alpha whose endomorphism
/// field is F_{q^r}, via r s_{alpha,r} = sum_{e | r} mu(r/e) a_{alpha/r}(F_{q^e}).
inline BigInt s_count(const CharPair& alpha, long r, const ZetaData& z) {
  if (r < 1) throw InvalidArgument("s_count: endomorphism degree r must be positive");
  if (alpha.rank % r != 0 || alpha.degree % r != 0) return 0;
  const CharPair beta(alpha.rank / r, alpha.degree / r);
  const auto a = stable_count(beta, z, static_cast<std::size_t>(r));
  BigInt total = 0;
  for (long e : divisors(r)) total += moebius(r / e) * a[static_cast<std::size_t>(e - 1)];
  if (total % r != 0)
    throw InvariantViolation("s-count of " + to_string(alpha) + " with r = " + std::to_string(r) + " is not an integer");
  total /= r;
  if (total < 0) throw InvariantViolation("s-count of " + to_string(alpha) + " is negative");
  return total;
}

}  // namespace modbetti
