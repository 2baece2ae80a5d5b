#pragma once

// Harder-Narasimhan recursion on an abstract semigroup with a total preorder
// (min(a,b) <= a+b <= max(a,b)), for the case where every element has only
// finitely many decompositions:
//
//   b_alpha = sum over strictly increasing lambda, |lambda| = alpha, of a_{lambda_1} ... a_{lambda_k}
//   a_alpha = sum over stable lambda, |lambda| = alpha, of (-1)^{k-1} b_{lambda_1} ... b_{lambda_k}
//
// where lambda is stable when every proper prefix sum is strictly smaller
// than alpha. Products keep left-to-right order, so the ring may be
// noncommutative.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "modbetti/errors.hpp"

namespace modbetti {

template <class Element>
struct SlopeSemigroup {
  // Every beta != alpha such that alpha - beta is again in the semigroup.
  std::function<std::vector<Element>(const Element&)> proper_parts;
  std::function<Element(const Element&, const Element&)> minus;
  // Strict preorder: a < b iff a <= b and not b <= a.
  std::function<bool(const Element&, const Element&)> less;
  std::size_t enumeration_cap = 200000;
};

namespace detail {

template <class Element, class Accept>
void enumerate_sequences(const Element& rest, std::vector<Element>& prefix, const SlopeSemigroup<Element>& sg,
                         Accept& accept, std::vector<std::vector<Element>>& out, std::size_t& visited) {
  if (++visited > sg.enumeration_cap)
    throw CapacityError("HN solver: decomposition enumeration exceeded cap of " +
                        std::to_string(sg.enumeration_cap) + " (is the decomposition set finite?)");
  // Last element takes all of the rest.
  prefix.push_back(rest);
  if (accept(prefix, true)) out.push_back(prefix);
  prefix.pop_back();
  for (const Element& part : sg.proper_parts(rest)) {
    prefix.push_back(part);
    if (accept(prefix, false)) enumerate_sequences(sg.minus(rest, part), prefix, sg, accept, out, visited);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Strictly increasing sequences summing to alpha.
template <class Element>
std::vector<std::vector<Element>> increasing_sequences(const Element& alpha, const SlopeSemigroup<Element>& sg) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> prefix;
  std::size_t visited = 0;
  auto accept = [&](const std::vector<Element>& seq, bool) {
    const std::size_t k = seq.size();
    return k < 2 || sg.less(seq[k - 2], seq[k - 1]);
  };
  detail::enumerate_sequences(alpha, prefix, sg, accept, out, visited);
  return out;
}

/// Sequences summing to alpha all of whose proper prefix sums are < alpha.
template <class Element>
std::vector<std::vector<Element>> stable_sequences(const Element& alpha, const SlopeSemigroup<Element>& sg) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> prefix;
  std::size_t visited = 0;
  std::function<void(const Element&)> rec = [&](const Element& remaining) {
    if (++visited > sg.enumeration_cap)
      throw CapacityError("HN solver: decomposition enumeration exceeded cap of " +
                          std::to_string(sg.enumeration_cap) + " (is the decomposition set finite?)");
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    for (const Element& part : sg.proper_parts(remaining)) {
      const Element new_rest = sg.minus(remaining, part);
      // Prefix sum after placing `part` is alpha minus what is left.
      if (!sg.less(sg.minus(alpha, new_rest), alpha)) continue;
      prefix.push_back(part);
      rec(new_rest);
      prefix.pop_back();
    }
  };
  rec(alpha);
  return out;
}

/// b_alpha from a, summing over strictly increasing decompositions.
template <class Element, class Ring>
Ring hn_forward(const std::function<Ring(const Element&)>& a, const Element& alpha, const SlopeSemigroup<Element>& sg,
                const Ring& one) {
  Ring total = Ring(one - one);
  for (const auto& seq : increasing_sequences(alpha, sg)) {
    Ring term = one;
    for (const auto& x : seq) term = Ring(term * a(x));
    total = Ring(total + term);
  }
  return total;
}

/// a_alpha from b, summing (-1)^{k-1} over stable decompositions.
template <class Element, class Ring>
Ring solve_hn_finite(const std::function<Ring(const Element&)>& b, const Element& alpha,
                     const SlopeSemigroup<Element>& sg, const Ring& one) {
  Ring total = Ring(one - one);
  for (const auto& seq : stable_sequences(alpha, sg)) {
    Ring term = one;
    for (const auto& x : seq) term = Ring(term * b(x));
    if (seq.size() % 2 == 1)
      total = Ring(total + term);
    else
      total = Ring(total - term);
  }
  return total;
}

}  // namespace modbetti
