#pragma once

// Zeta input files: {"q": int, "genus": int, "zeta_numerator": [a_0, ..., a_2g]}
// or {"q": int, "genus": int, "point_counts": [N_1, ..., N_g]}. Integers may
// be given as JSON numbers or decimal strings.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "modbetti/counting/zeta.hpp"

namespace modbetti {

namespace detail {

inline BigInt json_integer(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) return BigInt(v.get<long>());
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw InvalidArgument("zeta file: " + what + " must be an integer");
}

}  // namespace detail

inline ZetaData zeta_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("zeta file: top level must be an object");
  for (const char* key : {"q", "genus"})
    if (!j.contains(key)) throw InvalidArgument(std::string("zeta file: missing \"") + key + "\"");
  const BigInt q = detail::json_integer(j["q"], "q");
  const BigInt g = detail::json_integer(j["genus"], "genus");
  if (!q.fits_slong_p() || !g.fits_slong_p()) throw InvalidArgument("zeta file: q or genus out of range");
  const bool has_num = j.contains("zeta_numerator"), has_counts = j.contains("point_counts");
  if (has_num == has_counts)
    throw InvalidArgument("zeta file: exactly one of \"zeta_numerator\" and \"point_counts\" is required");
  const auto& arr = has_num ? j["zeta_numerator"] : j["point_counts"];
  if (!arr.is_array()) throw InvalidArgument("zeta file: coefficient list must be an array");
  std::vector<BigInt> values;
  for (const auto& x : arr) values.push_back(detail::json_integer(x, "every list entry"));
  if (has_num) return ZetaData(q.get_si(), g.get_si(), std::move(values));
  return ZetaData::from_point_counts(q.get_si(), g.get_si(), values);
}

inline ZetaData read_zeta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open zeta file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("zeta file '" + path + "' is not valid JSON: " + e.what());
  }
  return zeta_from_json(j);
}

inline nlohmann::json zeta_to_json(const ZetaData& z) {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& a : z.numerator()) {
    if (a.fits_slong_p())
      num.push_back(a.get_si());
    else
      num.push_back(a.get_str());
  }
  return {{"q", z.q()}, {"genus", z.genus()}, {"zeta_numerator", num}};
}

}  // namespace modbetti
