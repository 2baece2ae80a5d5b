#pragma once

// Closed-form Poincare functions of the c-sequences m_n (all bundles of rank
// n) and r_alpha (semistable bundles of character alpha), and their
// two-variable Hodge analogues.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <tuple>
#include <vector>

#include "modbetti/algebra/ratfunc2.hpp"
#include "modbetti/hnzagier/charpair.hpp"
#include "modbetti/hnzagier/zagier.hpp"

namespace modbetti {

namespace detail {

inline void check_genus(long g) {
  if (g < 0) throw InvalidArgument("genus must be nonnegative, got " + std::to_string(g));
}

// Sums term(c) over all compositions of n; with threads > 1 the compositions
// are split into contiguous blocks and the partial sums added in block order.
template <class Value, class Term>
Value composition_sum(long n, unsigned threads, Term term) {
  const auto comps = compositions(n);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, comps.size());
  std::vector<Value> partial(workers);
  auto run_block = [&](std::size_t w) {
    const std::size_t lo = comps.size() * w / workers;
    const std::size_t hi = comps.size() * (w + 1) / workers;
    Value acc;
    for (std::size_t i = lo; i < hi; ++i) acc += term(comps[i]);
    partial[w] = std::move(acc);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }
  Value total;
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace detail

/// P_n(v) = (v^{2n} - 1) prod_{i=1}^n (1 - v^{2i-1})^{2g} / (1 - v^{2i})^2
inline RatFunc poincare_mn(long n, long g) {
  if (n < 1) throw InvalidArgument("poincare_mn: rank must be positive");
  detail::check_genus(g);
  static detail::Memo<std::pair<long, long>, RatFunc> memo;
  return memo.get({n, g}, [&] {
    PolyQ num = -PolyQ::one_minus_power(static_cast<std::size_t>(2 * n));
    CyclotomicDenominator den;
    for (long i = 1; i <= n; ++i) {
      num = num * PolyQ::one_minus_power(static_cast<std::size_t>(2 * i - 1), static_cast<unsigned>(2 * g));
      den[static_cast<unsigned>(2 * i)] += 2;
    }
    return RatFunc::from_parts(std::move(num), std::move(den));
  });
}

/// P(r_alpha, v) = sum_{n*} v^{2(g-1) sum_{i<j} n_i n_j} Psi_{n*,d}(v^2) P_{n_1}(v) ... P_{n_k}(v)
inline RatFunc poincare_r(const CharPair& alpha, long g, unsigned threads = 1) {
  detail::check_genus(g);
  static detail::Memo<std::tuple<long, long, long>, RatFunc> memo;
  const long dr = detail::positive_mod(alpha.degree, alpha.rank);
  return memo.get({alpha.rank, dr, g}, [&] {
    return detail::composition_sum<RatFunc>(alpha.rank, threads, [&](const Composition& c) {
      RatFunc term = RatFunc::v_power(2 * (g - 1) * pair_sum(c)) * psi_coeff(c, dr).adams(2);
      for (long part : c) term = term * poincare_mn(part, g);
      return term;
    });
  });
}

/// P_n(u,v) = (u^n v^n - 1) prod_{i=1}^n (1 - u^i v^{i-1})^g (1 - u^{i-1} v^i)^g / (1 - u^i v^i)^2
inline RatFunc2 hodge_pn(long n, long g) {
  if (n < 1) throw InvalidArgument("hodge_pn: rank must be positive");
  detail::check_genus(g);
  static detail::Memo<std::pair<long, long>, RatFunc2> memo;
  return memo.get({n, g}, [&] {
    const auto un = static_cast<std::size_t>(n);
    Poly2 num = -Poly2(1).mul_one_minus_monomial(un, un);
    MonomialDenominator den;
    for (std::size_t i = 1; i <= un; ++i) {
      for (long r = 0; r < g; ++r) {
        num = num.mul_one_minus_monomial(i, i - 1);
        num = num.mul_one_minus_monomial(i - 1, i);
      }
      den[{static_cast<unsigned>(i), static_cast<unsigned>(i)}] += 2;
    }
    return RatFunc2::from_parts(std::move(num), std::move(den));
  });
}

/// R_alpha(u,v) = sum_{n*} (uv)^{(g-1) sum_{i<j} n_i n_j} Psi_{n*,d}(uv) P_{n_1}(u,v) ... P_{n_k}(u,v)
inline RatFunc2 hodge_r(const CharPair& alpha, long g, unsigned threads = 1) {
  detail::check_genus(g);
  static detail::Memo<std::tuple<long, long, long>, RatFunc2> memo;
  const long dr = detail::positive_mod(alpha.degree, alpha.rank);
  return memo.get({alpha.rank, dr, g}, [&] {
    return detail::composition_sum<RatFunc2>(alpha.rank, threads, [&](const Composition& c) {
      const long e = (g - 1) * pair_sum(c);
      RatFunc2 term = RatFunc2::monomial(e, e) * RatFunc2::from_diagonal(psi_coeff(c, dr));
      for (long part : c) term = term * hodge_pn(part, g);
      return term;
    });
  });
}

}  // namespace modbetti
