#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "modbetti/algebra/ratfunc2.hpp"
#include "modbetti/algebra/series.hpp"
#include "modbetti/io/format.hpp"

namespace testing_helpers {

using namespace modbetti;

inline PolyQ poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ::from_coefficients(v);
}

// (1 - v)^m
inline PolyQ one_minus_v_pow(unsigned m) { return PolyQ::one_minus_power(1, m); }

inline PolyQ pow(const PolyQ& p, unsigned m) {
  PolyQ out(1);
  for (unsigned i = 0; i < m; ++i) out = out * p;
  return out;
}

inline RatFunc rf(const PolyQ& num, CyclotomicDenominator den = {}, long shift = 0) {
  return RatFunc::from_parts(num, std::move(den), shift);
}

inline Rat random_rat(std::mt19937& rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 5);
  return make_rat(num(rng), den(rng));
}

inline PolyQ random_poly(std::mt19937& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rat> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng));
  return PolyQ::from_coefficients(c);
}

inline RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> idx(1, 4);
  std::uniform_int_distribution<unsigned> mult(0, 2);
  std::uniform_int_distribution<long> shift(-2, 2);
  CyclotomicDenominator den;
  for (int i = 0; i < 2; ++i) {
    const unsigned m = mult(rng);
    if (m) den[idx(rng)] += m;
  }
  PolyQ num = random_poly(rng);
  if (num.is_zero()) num = PolyQ(1);
  return RatFunc::from_parts(num, den, shift(rng));
}

inline Poly2 random_poly2(std::mt19937& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Poly2::Term> terms;
  const int du = deg(rng), dv = deg(rng);
  for (int i = 0; i <= du; ++i)
    for (int j = 0; j <= dv; ++j) terms.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), random_rat(rng, 4)});
  return Poly2::from_terms(terms);
}

template <class C>
Series<C> series_of(std::vector<C> c) {
  return Series<C>(std::move(c));
}

}  // namespace testing_helpers
