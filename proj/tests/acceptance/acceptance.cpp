// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons,
// wall-clock limits checked per criterion.
//
// Exit status is 0 iff the set of failing criteria equals the set given by
// --expect-fail (default: empty).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "modbetti/counting/counts.hpp"
#include "modbetti/extract/extract.hpp"
#include "modbetti/hnzagier/hn_solver.hpp"
#include "modbetti/io/format.hpp"
#include "modbetti/io/zeta_json.hpp"
#include "modbetti/lambda/lambda.hpp"

using namespace modbetti;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<void(Outcome&)> body;
};

unsigned g_threads = 1;
std::string g_data_dir = MODBETTI_DATA_DIR;

PolyQ one_minus_v(unsigned m) { return PolyQ::one_minus_power(1, m); }

// ---- 1 ----
void rank_one_oracle(Outcome& o) {
  for (long g = 0; g <= 5; ++g)
    for (long d : {0L, 1L, 7L})
      o.require(stable_poincare(CharPair(1, d), g, g_threads) == one_minus_v(static_cast<unsigned>(2 * g)),
                "(1," + std::to_string(d) + ") g=" + std::to_string(g));
}

// ---- 2 ----
RatFunc newstead_rhs(long g) {
  const auto m = static_cast<unsigned>(2 * g);
  const PolyQ num = PolyQ::one_minus_power(3, m) - PolyQ::monomial(1, m) * one_minus_v(m);
  return RatFunc::from_parts(num, {{2, 1}, {4, 1}});
}

void newstead_oracle(Outcome& o) {
  const RatFunc v2_minus_1(PolyQ::monomial(1, 2) - PolyQ(1));
  bool jacobian_identity = true;
  for (long g : {2L, 3L, 4L}) {
    const RatFunc lhs = v2_minus_1 * poincare_r(CharPair(2, 1), g, g_threads);
    const RatFunc rhs = newstead_rhs(g);
    o.require(lhs == rhs, "g=" + std::to_string(g) + ": lhs = " + to_plain(lhs) + " vs rhs = " + to_plain(rhs));
    jacobian_identity = jacobian_identity && lhs == rhs * RatFunc(one_minus_v(static_cast<unsigned>(2 * g)));
  }
  if (!o.pass)
    o.note(std::string("the stated right-hand side is the fixed-determinant polynomial; lhs = rhs * (1 - v)^{2g} ") +
           (jacobian_identity ? "holds" : "does NOT hold") + " for g = 2, 3, 4");
}

// ---- 3 ----
void degenerations(Outcome& o) {
  o.require(poincare_r(CharPair(2, 1), 0, g_threads).is_zero(), "poincare_r((2,1),0) = 0");
  o.require(stable_poincare(CharPair(2, 1), 1, g_threads) == one_minus_v(2), "stable_poincare((2,1),1) = (1-v)^2");
}

// ---- 4 ----
const std::vector<CharPair> kDimensionCases{{2, 0}, {2, 2}, {3, 0}, {3, 3}, {4, 2}};

void polynomiality(Outcome& o) {
  for (long g : {2L, 3L})
    for (const auto& alpha : kDimensionCases) {
      // stable_poincare throws InvariantViolation on a non-polynomial result.
      const PolyQ p = stable_poincare(alpha, g, g_threads);
      const long expected = 2 * (alpha.rank * alpha.rank * (g - 1) + 1);
      o.require(p.degree() == expected, to_string(alpha) + " g=" + std::to_string(g) + ": degree " +
                                            std::to_string(p.degree()) + ", expected " + std::to_string(expected));
    }
}

// ---- 5 ----
void hodge_bridge(Outcome& o) {
  auto stable_case = [&](const CharPair& alpha, long g) {
    const auto h = stable_hodge(alpha, g, g_threads);
    const std::string tag = to_string(alpha) + " g=" + std::to_string(g);
    o.require(h.polynomial.has_value(), tag + ": Hodge function is a polynomial");
    if (h.polynomial) o.require(h.polynomial->diagonal_specialization() == stable_poincare(alpha, g, g_threads), tag);
  };
  for (long g = 0; g <= 5; ++g)
    for (long d : {0L, 1L, 7L}) stable_case(CharPair(1, d), g);
  for (long g : {2L, 3L, 4L})
    o.require(hodge_r(CharPair(2, 1), g, g_threads).diagonal_specialization() == poincare_r(CharPair(2, 1), g, g_threads),
              "hodge_r((2,1)," + std::to_string(g) + ") at u = v");
  o.require(hodge_r(CharPair(2, 1), 0, g_threads).is_zero(), "hodge_r((2,1),0) = 0");
  stable_case(CharPair(2, 1), 1);
  for (long g : {2L, 3L})
    for (const auto& alpha : kDimensionCases) stable_case(alpha, g);
}

// ---- 6 ----
void zagier_reversal(Outcome& o) {
  std::size_t checked = 0;
  for (long n = 1; n <= 5; ++n)
    for (const auto& c : compositions(n))
      for (long d = 0; d < n; ++d) {
        const Composition rev(c.rbegin(), c.rend());
        o.require(phi_coeff(c, d).invert_variable() == psi_coeff(rev, d), "composition of " + std::to_string(n));
        ++checked;
      }
  o.note(std::to_string(checked) + " (composition, d) pairs");
}

// ---- 7 ----
Series<RatFunc> random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), idx(1, 4), shift(-2, 2);
  std::vector<RatFunc> c{unit ? RatFunc(1) : RatFunc()};
  for (std::size_t k = 1; k <= order; ++k) {
    std::vector<Rat> coeffs;
    for (int i = 0; i < 3; ++i) coeffs.push_back(make_rat(num(rng), den(rng)));
    PolyQ p = PolyQ::from_coefficients(coeffs);
    if (p.is_zero()) p = PolyQ(1);
    c.push_back(RatFunc::from_parts(p, {{static_cast<unsigned>(idx(rng)), 1}}, shift(rng)));
  }
  return Series<RatFunc>(c);
}

bool same(const Series<RatFunc>& a, const Series<RatFunc>& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t k = 0; k <= a.order(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

void lambda_suite(Outcome& o) {
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_series(rng, 6, false);
    o.require(same(plethystic_log(plethystic_exp(f)), f), "Log(Exp f) = f at order 6");
    const auto g = random_series(rng, 6, false);
    o.require(same(plethystic_exp(f + g), plethystic_exp(f) * plethystic_exp(g)), "Exp(f + g) = Exp f Exp g at order 6");
  }
  const auto heine_lhs = plethystic_exp(Series<RatFunc>::monomial(RatFunc::inverse_one_minus_power(1), 1, 10));
  o.require(same(heine_lhs, heine_series(10)), "Heine identity at order 10");
  for (int t = 0; t < 3; ++t) {
    const auto f = random_series(rng, 8, true);
    const RatFunc e = random_series(rng, 1, false)[1];
    o.require(same(plethystic_pow(f, e), plethystic_pow_product(f, e)), "Pow two-path agreement at order 8");
  }
}

// ---- 8 ----
using Elem = std::pair<long, long>;

SlopeSemigroup<Elem> toy_semigroup() {
  SlopeSemigroup<Elem> sg;
  sg.proper_parts = [](const Elem& e) {
    std::vector<Elem> out;
    for (long i = 0; i <= e.first; ++i)
      for (long j = 0; j <= e.second; ++j)
        if (!(i == 0 && j == 0) && !(i == e.first && j == e.second)) out.emplace_back(i, j);
    return out;
  };
  sg.minus = [](const Elem& a, const Elem& b) { return Elem{a.first - b.first, a.second - b.second}; };
  // slope(a, b) = a / (a + b)
  sg.less = [](const Elem& a, const Elem& b) { return a.first * (b.first + b.second) < b.first * (a.first + a.second); };
  return sg;
}

// Upper-triangular 2x2 matrices over Q.
struct Tri {
  Rat a, b, c;
  friend Tri operator+(const Tri& x, const Tri& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
  friend Tri operator-(const Tri& x, const Tri& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
  friend Tri operator*(const Tri& x, const Tri& y) { return {x.a * y.a, x.a * y.b + x.b * y.c, x.c * y.c}; }
  friend bool operator==(const Tri& x, const Tri& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

template <class Ring, class Gen>
bool hn_round_trip(const Ring& one, Gen gen, std::mt19937& rng) {
  const auto sg = toy_semigroup();
  std::uniform_int_distribution<long> coord(0, 3);
  Elem alpha{coord(rng), coord(rng)};
  if (alpha == Elem{0, 0}) alpha = {2, 1};
  std::map<Elem, Ring> a, b;
  for (long i = 0; i <= alpha.first; ++i)
    for (long j = 0; j <= alpha.second; ++j)
      if (i || j) a.emplace(Elem{i, j}, gen(rng));
  std::function<Ring(const Elem&)> a_of = [&](const Elem& e) { return a.at(e); };
  for (const auto& [e, _] : a) b.emplace(e, hn_forward(a_of, e, sg, one));
  std::function<Ring(const Elem&)> b_of = [&](const Elem& e) { return b.at(e); };
  return solve_hn_finite(b_of, alpha, sg, one) == a.at(alpha);
}

void hn_solver(Outcome& o) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto rat = [&](std::mt19937& r) { return make_rat(num(r), den(r)); };
  int ok_q = 0, ok_tri = 0;
  for (int t = 0; t < 50; ++t) ok_q += hn_round_trip(Rat(1), rat, rng);
  for (int t = 0; t < 50; ++t)
    ok_tri += hn_round_trip(Tri{1, 0, 1}, [&](std::mt19937& r) { return Tri{rat(r), rat(r), rat(r)}; }, rng);
  o.require(ok_q == 50, std::to_string(ok_q) + "/50 rational round trips");
  o.require(ok_tri == 50, std::to_string(ok_tri) + "/50 triangular round trips");
}

// ---- 9 ----
void counting_oracle(Outcome& o) {
  const ZetaData e = read_zeta_file(g_data_dir + "/e_f2.json");
  o.require(e.numerator() == std::vector<BigInt>{1, 0, 2}, "e_f2.json has numerator [1,0,2]");
  const auto n = e.point_counts(4);
  const auto a = stable_count(CharPair(1, 0), e, 4);
  for (std::size_t j = 0; j < 4; ++j)
    o.require(a[j] == n[j], "a_(1,0)(F_2^" + std::to_string(j + 1) + ") = " + a[j].get_str() + ", N = " + n[j].get_str());
  o.require(stable_count(CharPair(2, 1), e, 1)[0] == 3, "a_(2,1)(F_2) = 3");
  for (long r = 1; r <= 3; ++r)
    for (long d = 0; d <= 2 * r; ++d)
      if (std::gcd(r, d) > 1) {
        const auto v = stable_count(CharPair(r, d), e, 3);
        for (std::size_t j = 0; j < v.size(); ++j)
          o.require(v[j] == 0, "a_(" + std::to_string(r) + "," + std::to_string(d) + ")(F_2^" + std::to_string(j + 1) + ") = 0");
      }
  o.require(s_count(CharPair(2, 0), 2, e) == 3, "s_(2,0),2(F_2) = 3");
  std::size_t s_checked = 0;
  for (long rank = 1; rank <= 4; ++rank)
    for (long d = 0; d < rank; ++d)
      for (long r = 1; r <= rank; ++r) {
        // s_count throws on a non-integral or negative value.
        const BigInt s = s_count(CharPair(rank, d), r, e);
        o.require(s >= 0, "s-count nonnegative");
        ++s_checked;
      }
  o.note(std::to_string(s_checked) + " s-counts integral and nonnegative");
}

// ---- 10 ----
void integrality_stress(Outcome& o) {
  const ZetaData z = read_zeta_file(g_data_dir + "/g2_f2.json");
  o.require(z.genus() == 2 && z.q() == 2, "g2_f2.json is a genus-2 curve over F_2");
  std::size_t checked = 0;
  for (long n = 1; n <= 3; ++n)
    for (long d = 0; d < n; ++d) {
      // stable_counts throws InvariantViolation on a non-integer entry.
      const auto a = stable_count(CharPair(n, d), z, 3);
      for (std::size_t j = 0; j < a.size(); ++j) {
        o.require(a[j] >= 0, "a_(" + std::to_string(n) + "," + std::to_string(d) + ")(F_2^" + std::to_string(j + 1) + ") >= 0");
        ++checked;
      }
    }
  o.note(std::to_string(checked) + " counts");
}

// ---- 11 ----
void recomposition(Outcome& o) {
  for (const CharPair gamma : {CharPair(1, 0), CharPair(2, 1), CharPair(3, 1), CharPair(3, 2)})
    for (long g = 0; g <= 3; ++g) {
      const SlopeRay ray(gamma, g);
      const auto r = build_r_series(ray, 4, g_threads);
      const auto a = stable_from_semistable(r, poincare_divisor());
      const auto one = recompose(r, a, poincare_divisor());
      bool ok = one[0] == RatFunc(1);
      for (std::size_t k = 1; k <= 4; ++k) ok = ok && one[k].is_zero();
      o.require(ok, "ray " + to_string(gamma) + " g=" + std::to_string(g));
    }
}

std::vector<Criterion> criteria() {
  return {
      {1, "rank-one oracle", 1.0, rank_one_oracle},
      {2, "Newstead oracle (literal formula)", 1.0, newstead_oracle},
      {3, "genus-0/1 degenerations", std::nullopt, degenerations},
      {4, "polynomiality and dimension", 30.0, polynomiality},
      {5, "Hodge specializes to Poincare at u = v", std::nullopt, hodge_bridge},
      {6, "Zagier kernel reversal", std::nullopt, zagier_reversal},
      {7, "lambda-ring suite", std::nullopt, lambda_suite},
      {8, "finite HN solver round trip", std::nullopt, hn_solver},
      {9, "elliptic counting oracle", 10.0, counting_oracle},
      {10, "genus-2 integrality stress", 60.0, integrality_stress},
      {11, "recomposition to order 4", std::nullopt, recomposition},
  };
}

std::set<int> parse_ids(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures, only;
  g_threads = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << arg << " needs a value\n";
        std::exit(64);
      }
      return argv[++i];
    };
    if (arg == "--expect-fail") expected_failures = parse_ids(value());
    else if (arg == "--only") only = parse_ids(value());
    else if (arg == "--threads") g_threads = static_cast<unsigned>(std::stoul(value()));
    else if (arg == "--data") g_data_dir = value();
    else {
      std::cerr << "usage: modbetti_acceptance [--only 1,2] [--expect-fail 2] [--threads N] [--data DIR]\n";
      return 64;
    }
  }

  std::set<int> failed;
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && secs > *c.limit_seconds) {
      o.pass = false;
      o.note("time limit " + std::to_string(*c.limit_seconds) + " s exceeded");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << secs << " s";
    if (c.limit_seconds) line << ", limit " << *c.limit_seconds << " s";
    line << ")";
    if (!o.pass && expected_failures.count(c.id)) line << " [expected failure]";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    if (!o.pass) failed.insert(c.id);
  }

  for (int id : expected_failures)
    if ((only.empty() || only.count(id)) && !failed.count(id))
      std::cout << "NOTE criterion " << id << " was expected to fail but passed\n";
  std::set<int> considered = expected_failures;
  if (!only.empty()) {
    considered.clear();
    for (int id : expected_failures)
      if (only.count(id)) considered.insert(id);
  }
  return failed == considered ? 0 : 1;
}
