#pragma once

// Command execution for the modbetti tool: a validated Job is computed,
// rendered in the requested format, and optionally served from or stored in
// a content-addressed disk cache.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "modbetti/counting/counts.hpp"
#include "modbetti/extract/extract.hpp"
#include "modbetti/io/format.hpp"
#include "modbetti/io/zeta_json.hpp"
#include "modbetti/version.hpp"

namespace modbetti::cli {

enum class Command { poincare, hodge, semistable, zagier_r, count, s_count };
enum class Format { plain, json, latex, csv };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::poincare: return "poincare";
    case Command::hodge: return "hodge";
    case Command::semistable: return "semistable";
    case Command::zagier_r: return "zagier-r";
    case Command::count: return "count";
    case Command::s_count: return "s-count";
  }
  return "";
}

inline const char* format_name(Format f) {
  switch (f) {
    case Format::plain: return "plain";
    case Format::json: return "json";
    case Format::latex: return "latex";
    case Format::csv: return "csv";
  }
  return "";
}

inline Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "csv") return Format::csv;
  throw InvalidArgument("unknown format '" + s + "' (expected plain, json, latex or csv)");
}

struct Limits {
  long max_rank = 16;  // largest rank reached; compositions grow as 2^{n-1}
  long max_genus = 64;
  long max_ext = 12;
};

struct Job {
  Command command = Command::poincare;
  long rank = 1;
  long degree = 0;
  std::optional<long> genus;
  std::optional<long> order;     // K: series order on the ray (count)
  long ext = 1;                  // largest extension degree j (count)
  long endomorphism_degree = 1;  // r (s-count)
  std::string zeta_path;
  Format format = Format::plain;
  bool reduce_degree = false;
  unsigned threads = 1;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline bool uses_zeta(Command c) { return c == Command::count || c == Command::s_count; }

inline void validate(const Job& job, const Limits& limits = {}) {
  if (job.rank < 1) throw InvalidArgument("--rank must be at least 1");
  if (job.threads < 1) throw InvalidArgument("--threads must be at least 1");
  if (uses_zeta(job.command)) {
    if (job.zeta_path.empty()) throw InvalidArgument(std::string(command_name(job.command)) + " requires --zeta");
    if (job.ext < 1) throw InvalidArgument("--ext must be at least 1");
    if (job.ext > limits.max_ext) throw CapacityError("--ext exceeds the configured cap of " + std::to_string(limits.max_ext));
    if (job.endomorphism_degree < 1) throw InvalidArgument("--endomorphism-degree must be at least 1");
  } else {
    if (!job.genus) throw InvalidArgument(std::string(command_name(job.command)) + " requires --genus");
    if (*job.genus < 0) throw InvalidArgument("--genus must be nonnegative");
    if (*job.genus > limits.max_genus)
      throw CapacityError("--genus exceeds the configured cap of " + std::to_string(limits.max_genus));
  }
  if (job.order && *job.order < 1) throw InvalidArgument("--order must be at least 1");
  if (job.rank > limits.max_rank)
    throw CapacityError("--rank exceeds the configured cap of " + std::to_string(limits.max_rank));
}

// ---- structured values ----

namespace detail {

inline nlohmann::json rat_list(const std::vector<Rat>& xs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

inline nlohmann::json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline nlohmann::json poly_json(const PolyQ& p) {
  return {{"kind", "polynomial"}, {"variable", "v"}, {"coefficients", rat_list(p.coefficients())}, {"text", to_plain(p)}};
}

inline nlohmann::json terms_json(const Poly2& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) terms.push_back({{"u", t.u}, {"v", t.v}, {"c", to_string(t.coeff)}});
  return terms;
}

inline nlohmann::json poly2_json(const Poly2& p) {
  return {{"kind", "polynomial2"}, {"variables", {"u", "v"}}, {"terms", terms_json(p)}, {"text", to_plain(p)}};
}

inline nlohmann::json ratfunc_json(const RatFunc& f) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [i, m] : f.denominator()) den.push_back({{"power", i}, {"multiplicity", m}});
  return {{"kind", "rational_function"}, {"variable", "v"},       {"sign", f.sign()},
          {"shift", f.shift()},          {"numerator", rat_list(f.numerator().coefficients())},
          {"denominator", den},          {"text", to_plain(f)}};
}

inline nlohmann::json ratfunc2_json(const RatFunc2& f) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [ab, m] : f.denominator()) den.push_back({{"u", ab.first}, {"v", ab.second}, {"multiplicity", m}});
  return {{"kind", "rational_function2"},       {"variables", {"u", "v"}}, {"sign", f.sign()},
          {"shift", {f.u_shift(), f.v_shift()}}, {"numerator", terms_json(f.numerator())},
          {"denominator", den},                 {"text", to_plain(f)}};
}

inline std::string csv_poly(const PolyQ& p) {
  std::string s = "exponent,coefficient\n";
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += std::to_string(i) + "," + to_string(c[i]) + "\n";
  return s;
}

inline std::string csv_poly2(const Poly2& p) {
  std::string s = "u_exponent,v_exponent,coefficient\n";
  for (const auto& t : p.terms()) s += std::to_string(t.u) + "," + std::to_string(t.v) + "," + to_string(t.coeff) + "\n";
  return s;
}

// Rows: sign, shift, numerator coefficients, denominator factors (1 - v^i)^m.
inline std::string csv_ratfunc(const RatFunc& f) {
  std::string s = "part,index,value\nsign,0," + std::to_string(f.sign()) + "\nshift,0," + std::to_string(f.shift()) + "\n";
  const auto c = f.numerator().coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += "numerator," + std::to_string(i) + "," + to_string(c[i]) + "\n";
  for (const auto& [i, m] : f.denominator()) s += "denominator," + std::to_string(i) + "," + std::to_string(m) + "\n";
  return s;
}

inline std::string csv_ratfunc2(const RatFunc2& f) {
  std::string s = "part,u,v,value\nsign,0,0," + std::to_string(f.sign()) + "\nshift," + std::to_string(f.u_shift()) + "," +
                  std::to_string(f.v_shift()) + ",1\n";
  for (const auto& t : f.numerator().terms())
    s += "numerator," + std::to_string(t.u) + "," + std::to_string(t.v) + "," + to_string(t.coeff) + "\n";
  for (const auto& [ab, m] : f.denominator())
    s += "denominator," + std::to_string(ab.first) + "," + std::to_string(ab.second) + "," + std::to_string(m) + "\n";
  return s;
}

inline constexpr const char* kConjecturalNote =
    "conjectural: Hodge extraction relies on an unproven identity; the u = v specialization is a theorem";

}  // namespace detail

inline nlohmann::json parameters_json(const Job& job, long degree) {
  nlohmann::json p = {{"rank", job.rank}, {"degree", degree}};
  if (job.genus) p["genus"] = *job.genus;
  if (job.order) p["order"] = *job.order;
  if (uses_zeta(job.command)) p["zeta"] = job.zeta_path;
  if (job.command == Command::count) p["ext"] = job.ext;
  if (job.command == Command::s_count) p["endomorphism_degree"] = job.endomorphism_degree;
  return p;
}

/// Computes the job and renders it; throws the library exceptions.
inline std::string render_job(const Job& job, std::ostream& warnings) {
  const long degree = job.reduce_degree ? ((job.degree % job.rank) + job.rank) % job.rank : job.degree;
  const CharPair alpha(job.rank, degree);
  nlohmann::json doc = {{"command", command_name(job.command)},
                        {"version", kVersion},
                        {"parameters", parameters_json(job, degree)},
                        {"conjectural", job.command == Command::hodge}};
  std::string plain, latex, csv;

  switch (job.command) {
    case Command::poincare: {
      const PolyQ p = stable_poincare(alpha, *job.genus, job.threads);
      doc["result"] = detail::poly_json(p);
      plain = to_plain(p);
      latex = to_latex(p);
      csv = detail::csv_poly(p);
      break;
    }
    case Command::hodge: {
      const auto h = stable_hodge(alpha, *job.genus, job.threads);
      if (h.polynomial) {
        doc["result"] = detail::poly2_json(*h.polynomial);
        plain = to_plain(*h.polynomial);
        latex = to_latex(*h.polynomial);
        csv = detail::csv_poly2(*h.polynomial);
      } else {
        warnings << "warning: extracted Hodge function of " << to_string(alpha) << " is not a polynomial\n";
        doc["result"] = detail::ratfunc2_json(h.value);
        plain = to_plain(h.value);
        latex = to_latex(h.value);
        csv = detail::csv_ratfunc2(h.value);
      }
      plain += "\n# " + std::string(detail::kConjecturalNote);
      latex += "\n% " + std::string(detail::kConjecturalNote);
      break;
    }
    case Command::semistable: {
      const auto [ray, k] = SlopeRay::through(alpha, *job.genus);
      const RatFunc f = semistable_poincare(ray, k, job.threads);
      doc["result"] = detail::ratfunc_json(f);
      plain = to_plain(f);
      latex = to_latex(f);
      csv = detail::csv_ratfunc(f);
      break;
    }
    case Command::zagier_r: {
      const RatFunc f = poincare_r(alpha, *job.genus, job.threads);
      doc["result"] = detail::ratfunc_json(f);
      plain = to_plain(f);
      latex = to_latex(f);
      csv = detail::csv_ratfunc(f);
      break;
    }
    case Command::count: {
      const ZetaData z = read_zeta_file(job.zeta_path);
      const auto [ray, k] = SlopeRay::through(alpha, z.genus());
      const long order = job.order.value_or(k);
      if (order < k) throw InvalidArgument("--order must be at least " + std::to_string(k) + " to reach " + to_string(alpha));
      if (ray.gamma.rank * order > Limits{}.max_rank)
        throw CapacityError("rank along the ray up to order " + std::to_string(order) + " exceeds the configured cap of " +
                            std::to_string(Limits{}.max_rank));
      const auto K = static_cast<std::size_t>(order);
      const auto jmax = static_cast<std::size_t>(job.ext);
      const auto table = stable_counts(ray, z, K, K * jmax, jmax);
      doc["parameters"]["genus"] = z.genus();
      nlohmann::json counts = nlohmann::json::array();
      csv = "k,rank,degree,ext,a\n";
      for (std::size_t kk = 1; kk <= K; ++kk)
        for (std::size_t j = 1; j <= jmax; ++j) {
          const BigInt& a = table[kk - 1][j - 1];
          const CharPair at = ray.at(static_cast<long>(kk));
          counts.push_back({{"k", kk}, {"ext", j}, {"a", detail::big_json(a)}});
          const std::string field = "F_" + z.pow_q(static_cast<unsigned>(j)).get_str();
          plain += "a" + to_string(at) + "(" + field + ") = " + a.get_str() + "\n";
          latex += "a_{" + to_string(at) + "}(\\mathbb{F}_{" + z.pow_q(static_cast<unsigned>(j)).get_str() + "}) = " +
                   a.get_str() + " \\\\\n";
          csv += std::to_string(kk) + "," + std::to_string(at.rank) + "," + std::to_string(at.degree) + "," +
                 std::to_string(j) + "," + a.get_str() + "\n";
        }
      doc["result"] = {{"kind", "count_table"}, {"q", z.q()}, {"ray", {ray.gamma.rank, ray.gamma.degree}}, {"counts", counts}};
      if (!plain.empty()) plain.pop_back();
      if (!latex.empty()) latex.resize(latex.size() - 4);
      break;
    }
    case Command::s_count: {
      const ZetaData z = read_zeta_file(job.zeta_path);
      const long r = job.endomorphism_degree;
      if (r > Limits{}.max_ext) throw CapacityError("--endomorphism-degree exceeds the configured cap of " + std::to_string(Limits{}.max_ext));
      const BigInt s = s_count(alpha, r, z);
      doc["parameters"]["genus"] = z.genus();
      doc["result"] = {{"kind", "s_count"}, {"q", z.q()}, {"alpha", {alpha.rank, alpha.degree}}, {"r", r}, {"s", detail::big_json(s)}};
      plain = "s" + to_string(alpha) + ",r=" + std::to_string(r) + "(F_" + std::to_string(z.q()) + ") = " + s.get_str();
      latex = "s_{" + to_string(alpha) + "," + std::to_string(r) + "}(\\mathbb{F}_{" + std::to_string(z.q()) + "}) = " + s.get_str();
      csv = "rank,degree,r,q,s\n" + std::to_string(alpha.rank) + "," + std::to_string(alpha.degree) + "," +
            std::to_string(r) + "," + std::to_string(z.q()) + "," + s.get_str() + "\n";
      break;
    }
  }

  switch (job.format) {
    case Format::plain: return plain + "\n";
    case Format::latex: return latex + "\n";
    case Format::csv: return csv;
    case Format::json: return doc.dump(2) + "\n";
  }
  return plain;
}

// ---- disk cache ----

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Everything that determines the rendered output, including the version.
inline std::string cache_key(const Job& job, const std::string& version = kVersion) {
  std::ostringstream k;
  k << command_name(job.command) << "|n=" << job.rank << "|d=" << job.degree << "|g=" << (job.genus ? std::to_string(*job.genus) : "-")
    << "|K=" << (job.order ? std::to_string(*job.order) : "-") << "|T=" << job.ext << "|r=" << job.endomorphism_degree
    << "|reduce=" << job.reduce_degree << "|format=" << format_name(job.format) << "|version=" << version;
  if (uses_zeta(job.command)) {
    // Keyed on file content, so editing the zeta file invalidates the entry.
    std::ifstream in(job.zeta_path, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    k << "|zeta=" << std::hex << fnv1a(content.str());
  }
  return k.str();
}

class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::optional<DiskCache> from_environment() {
    const char* dir = std::getenv("MODBETTI_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return DiskCache(dir);
  }

  // Entry layout: "modbetti-cache <payload hash> <key>\n" then the payload.
  std::optional<std::string> load(const std::string& key, std::ostream& warnings) const {
    const auto path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    std::ostringstream body;
    body << in.rdbuf();
    if (header != header_for(key, body.str())) {
      warnings << "warning: cache entry " << path.string() << " is corrupt; recomputing\n";
      return std::nullopt;
    }
    return body.str();
  }

  void store(const std::string& key, const std::string& payload, std::ostream& warnings) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << header_for(key, payload) << "\n" << payload;
      if (!out) {
        warnings << "warning: could not write cache entry " << path.string() << "\n";
        return;
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) warnings << "warning: could not write cache entry " << path.string() << "\n";
  }

  std::filesystem::path path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".txt";
    return dir_ / name.str();
  }

 private:
  static std::string header_for(const std::string& key, const std::string& payload) {
    std::ostringstream h;
    h << "modbetti-cache " << std::hex << std::setw(16) << std::setfill('0') << fnv1a(payload) << " " << key;
    return h.str();
  }

  std::filesystem::path dir_;
};

enum ExitCode : int { kOk = 0, kInvalidArgument = 1, kCapacity = 2, kInvariant = 3 };

/// Runs a job end to end; returns the process exit code.
inline int run(const Job& job, Streams io, bool use_cache = true, const std::string& out_path = "") {
  try {
    validate(job);
    std::optional<DiskCache> cache = use_cache ? DiskCache::from_environment() : std::nullopt;
    std::string text;
    const std::string key = cache ? cache_key(job) : std::string();
    if (cache) {
      if (auto hit = cache->load(key, io.err)) text = std::move(*hit);
    }
    if (text.empty()) {
      text = render_job(job, io.err);
      if (cache) cache->store(key, text, io.err);
    }
    if (out_path.empty()) {
      io.out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
      if (!f) throw InvalidArgument("cannot write output file '" + out_path + "'");
      f << text;
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    io.err << "error: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const CapacityError& e) {
    io.err << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvariantViolation& e) {
    io.err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    io.err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace modbetti::cli
