#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modbetti/algebra/series.hpp"

namespace modbetti {

/// Finite sequence (s_1, ..., s_L) of exact rationals, entry j read over
/// F_{q^j}. Ring operations are entrywise on the common prefix; the Adams
/// operation is index dilation psi_m(s)_j = s_{mj}, of length floor(L/m).
class CSeqVec {
 public:
  CSeqVec() = default;
  explicit CSeqVec(std::vector<Rat> entries) : s_(std::move(entries)) {}

  static CSeqVec constant(const Rat& c, std::size_t length) { return CSeqVec(std::vector<Rat>(length, c)); }

  template <class F>
  static CSeqVec generate(std::size_t length, F f) {
    std::vector<Rat> s;
    s.reserve(length);
    for (std::size_t j = 1; j <= length; ++j) s.push_back(f(j));
    return CSeqVec(std::move(s));
  }

  std::size_t length() const { return s_.size(); }
  // 1-based: entry over F_{q^j}.
  const Rat& at(std::size_t j) const { return s_.at(j - 1); }
  const std::vector<Rat>& entries() const { return s_; }

  bool is_zero() const {
    return std::all_of(s_.begin(), s_.end(), [](const Rat& x) { return x == 0; });
  }

  CSeqVec adams(unsigned m) const {
    std::vector<Rat> out;
    for (std::size_t j = m; j <= s_.size(); j += m) out.push_back(s_[j - 1]);
    return CSeqVec(std::move(out));
  }

  CSeqVec operator-() const {
    CSeqVec r = *this;
    for (auto& x : r.s_) x = -x;
    return r;
  }

  friend CSeqVec operator+(const CSeqVec& a, const CSeqVec& b) { return zip(a, b, [](const Rat& x, const Rat& y) { return Rat(x + y); }); }
  friend CSeqVec operator-(const CSeqVec& a, const CSeqVec& b) { return zip(a, b, [](const Rat& x, const Rat& y) { return Rat(x - y); }); }
  friend CSeqVec operator*(const CSeqVec& a, const CSeqVec& b) { return zip(a, b, [](const Rat& x, const Rat& y) { return Rat(x * y); }); }
  friend CSeqVec operator*(const CSeqVec& a, const Rat& c) {
    CSeqVec r = a;
    for (auto& x : r.s_) x *= c;
    return r;
  }

  // Equal on the common prefix.
  friend bool operator==(const CSeqVec& a, const CSeqVec& b) { return (a - b).is_zero(); }

  std::optional<CSeqVec> inverse() const {
    CSeqVec r = *this;
    for (auto& x : r.s_) {
      if (x == 0) return std::nullopt;
      x = 1 / x;
    }
    return r;
  }

 private:
  template <class Op>
  static CSeqVec zip(const CSeqVec& a, const CSeqVec& b, Op op) {
    const std::size_t n = std::min(a.s_.size(), b.s_.size());
    std::vector<Rat> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back(op(a.s_[j], b.s_[j]));
    return CSeqVec(std::move(out));
  }

  std::vector<Rat> s_;
};

template <>
struct coefficient_traits<CSeqVec> {
  static CSeqVec zero_like(const CSeqVec& a) { return CSeqVec::constant(0, a.length()); }
  static CSeqVec one_like(const CSeqVec& a) { return CSeqVec::constant(1, a.length()); }
  static bool is_zero(const CSeqVec& a) { return a.is_zero(); }
  static CSeqVec scale(const CSeqVec& a, const Rat& r) { return a * r; }
  static CSeqVec adams(const CSeqVec& a, unsigned m) { return a.adams(m); }
  static std::optional<CSeqVec> inverse(const CSeqVec& a) { return a.inverse(); }
};

}  // namespace modbetti
