#pragma once

// Text renderings of exact values. Plain form: ascending exponents with
// explicit signs ("1 - 6*v + 15*v^2"); rational functions keep their
// factored denominators. LaTeX form uses \frac with the same factorization.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modbetti/algebra/ratfunc2.hpp"

namespace modbetti {

namespace detail {

struct TermText {
  Rat coeff;
  std::string monomial;  // empty for the constant monomial
};

// Joins signed terms: "a - b + c"; coefficient 1 is elided before a monomial.
inline std::string join_terms(const std::vector<TermText>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const Rat mag = negative ? Rat(-t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string c;
    if (!(mag == 1 && !t.monomial.empty())) {
      if (latex && mag.get_den() != 1)
        c = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      else
        c = to_string(mag);
    }
    if (c.empty())
      out += t.monomial;
    else if (t.monomial.empty())
      out += c;
    else
      out += c + (latex ? " " : "*") + t.monomial;
  }
  return out;
}

inline std::string power_text(const std::string& var, long e, bool latex) {
  if (e == 1) return var;
  if (latex) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

inline std::string monomial_text(long e, bool latex, const std::string& var = "v") {
  return e == 0 ? std::string() : power_text(var, e, latex);
}

inline std::string monomial2_text(long eu, long ev, bool latex) {
  std::string u = monomial_text(eu, latex, "u");
  std::string v = monomial_text(ev, latex, "v");
  if (u.empty()) return v;
  if (v.empty()) return u;
  return u + (latex ? " " : "*") + v;
}

inline std::vector<TermText> terms_of(const PolyQ& p, long shift, bool latex) {
  std::vector<TermText> out;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.push_back({c[i], monomial_text(static_cast<long>(i) + shift, latex)});
  return out;
}

inline std::vector<TermText> terms_of(const Poly2& p, long su, long sv, bool latex) {
  std::vector<TermText> out;
  for (const auto& t : p.terms())
    out.push_back({t.coeff, monomial2_text(static_cast<long>(t.u) + su, static_cast<long>(t.v) + sv, latex)});
  return out;
}

inline std::string factor_text(const std::string& base, unsigned m, bool latex) {
  std::string f = "(" + base + ")";
  if (m == 1) return f;
  return latex ? f + "^{" + std::to_string(m) + "}" : f + "^" + std::to_string(m);
}

inline std::string one_minus_text(const std::string& mono) { return "1 - " + mono; }

inline std::string denominator_text(const CyclotomicDenominator& den, bool latex) {
  std::string out;
  for (const auto& [i, m] : den) {
    if (!out.empty()) out += latex ? " " : "*";
    out += factor_text(one_minus_text(power_text("v", i, latex)), m, latex);
  }
  return out;
}

inline std::string denominator_text(const MonomialDenominator& den, bool latex) {
  std::string out;
  for (const auto& [ab, m] : den) {
    if (!out.empty()) out += latex ? " " : "*";
    out += factor_text(one_minus_text(monomial2_text(ab.first, ab.second, latex)), m, latex);
  }
  return out;
}

template <class Num, class Den>
std::string fraction_text(const std::string& num, std::size_t num_terms, const Den& den, bool latex) {
  if (den.empty()) return num;
  const std::string d = denominator_text(den, latex);
  if (latex) return "\\frac{" + num + "}{" + d + "}";
  const std::string n = num_terms > 1 ? "(" + num + ")" : num;
  return n + "/(" + d + ")";
}

}  // namespace detail

inline std::string to_plain(const PolyQ& p) { return detail::join_terms(detail::terms_of(p, 0, false), false); }
inline std::string to_latex(const PolyQ& p) { return detail::join_terms(detail::terms_of(p, 0, true), true); }
inline std::string to_plain(const Poly2& p) { return detail::join_terms(detail::terms_of(p, 0, 0, false), false); }
inline std::string to_latex(const Poly2& p) { return detail::join_terms(detail::terms_of(p, 0, 0, true), true); }

// sign * v^shift * N / prod (1 - v^i)^m, with v^shift folded into N.
inline std::string render(const RatFunc& f, bool latex) {
  if (f.is_zero()) return "0";
  const PolyQ num = f.sign() < 0 ? -f.numerator() : f.numerator();
  auto terms = detail::terms_of(num, f.shift(), latex);
  return detail::fraction_text<PolyQ>(detail::join_terms(terms, latex), terms.size(), f.denominator(), latex);
}

inline std::string render(const RatFunc2& f, bool latex) {
  if (f.is_zero()) return "0";
  const Poly2 num = f.sign() < 0 ? -f.numerator() : f.numerator();
  auto terms = detail::terms_of(num, f.u_shift(), f.v_shift(), latex);
  return detail::fraction_text<Poly2>(detail::join_terms(terms, latex), terms.size(), f.denominator(), latex);
}

inline std::string to_plain(const RatFunc& f) { return render(f, false); }
inline std::string to_latex(const RatFunc& f) { return render(f, true); }
inline std::string to_plain(const RatFunc2& f) { return render(f, false); }
inline std::string to_latex(const RatFunc2& f) { return render(f, true); }

inline std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << to_plain(p); }
inline std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << to_plain(p); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_plain(f); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc2& f) { return os << to_plain(f); }

}  // namespace modbetti
