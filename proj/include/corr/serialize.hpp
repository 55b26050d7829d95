#pragma once

#include <nlohmann/json.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coideal.hpp"
#include "polylog.hpp"

namespace corr {

using Json = nlohmann::ordered_json;

inline Json json_complex(Cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json json_lincomb(const GroupSpec& G, const LinComb& l) {
  Json arr = Json::array();
  for (auto& [w, c] : l.terms)
    arr.push_back(Json{{"word", to_string(G, w)}, {"coef", rat_to_string(c)}});
  return arr;
}

// Reproducibility header embedded in every report.  The wall-clock field is
// the only part that varies between identical runs; its key ends in "_ms" so
// determinism checks can strip it.
inline Json run_manifest(const std::string& command, const std::vector<std::string>& args,
                         long long seed, const std::vector<std::string>& outputs = {}) {
  Json m;
  m["command"] = command;
  m["args"] = args;
  m["seed"] = seed;
  m["version"] = "1.0.0";
  m["wall_clock_ms"] = 0;  // patched just before emission
  m["outputs"] = outputs;
  return m;
}

// Parse "a", "bi", "a+bi", "a-bi" (scientific notation allowed in either
// part) into a complex number.
inline Cplx parse_complex(const std::string& in) {
  std::string s;
  for (char c : in)
    if (!isspace((unsigned char)c)) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  auto parse_real = [](const std::string& t) -> double {
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number: '" + t + "'");
    return v;
  };
  // split at the last '+' or '-' that is not a leading sign or exponent sign
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  if (s.back() == 'i' || s.back() == 'I') {
    std::string re = "0", im;
    if (split == std::string::npos) {
      im = s.substr(0, s.size() - 1);
    } else {
      re = s.substr(0, split);
      im = s.substr(split, s.size() - 1 - split);
    }
    if (im.empty() || im == "+" || im == "-") im += "1";
    return {parse_real(re), parse_real(im)};
  }
  if (split != std::string::npos && split != 0)
    throw std::invalid_argument("bad complex literal: '" + in + "'");
  return {parse_real(s), 0.0};
}

}  // namespace corr
