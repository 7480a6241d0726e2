#pragma once

#include <cstdint>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "pfg/text.hpp"

namespace pfg {

/// Header line of the CAS-portable generator format, e.g.
///   ring: QQ[x_(1,2)..x_(3,4), t_1..t_4], order: grevlex
struct CasHeader {
  std::uint32_t characteristic = 0;
  int f = 0;
  bool with_t = false;
  std::string order = "grevlex";
};

template <class K>
std::string cas_header(const PolyRing<K>& r) {
  const int f = r.f();
  std::string xs = "x_(1,2)";
  if (f > 2) xs += "..x_(" + std::to_string(f - 1) + "," + std::to_string(f) + ")";
  std::string ts;
  if (r.t_count() > 0) ts = ", t_1..t_" + std::to_string(f);
  return "ring: " + r.field().name() + "[" + xs + ts + "], order: grevlex";
}

inline CasHeader parse_cas_header(const std::string& line) {
  static const std::regex re(
      R"(^\s*ring:\s*(QQ|ZZ/(\d+))\[\s*x_\(1,2\)(?:\s*\.\.\s*x_\((\d+),(\d+)\))?\s*(,\s*t_1(?:\s*\.\.\s*t_(\d+))?)?\s*\]\s*,\s*order:\s*(\w+)\s*$)");
  std::smatch m;
  if (!std::regex_match(line, m, re)) throw ParseError("malformed ring header", 0);
  CasHeader h;
  h.characteristic = m[2].matched ? static_cast<std::uint32_t>(std::stoul(m[2].str())) : 0;
  h.f = 2;
  if (m[3].matched) {
    int a = std::stoi(m[3].str()), b = std::stoi(m[4].str());
    if (a != b - 1) throw ParseError("last variable must be x_(f-1,f)", 0);
    h.f = b;
  }
  h.with_t = m[5].matched;
  if (h.with_t && (!m[6].matched || std::stoi(m[6].str()) != h.f)) throw ParseError("t range does not match f", 0);
  h.order = m[7].str();
  if (h.order != "grevlex") throw ParseError("unsupported order '" + h.order + "'", 0);
  return h;
}

template <class K>
std::string render_cas(const std::vector<Polynomial<K>>& gens, const PolyRing<K>& r) {
  std::string out = cas_header(r) + "\n";
  for (const auto& g : gens) out += render(g) + "\n";
  return out;
}

/// Body lines after the header; blank lines and lines starting with '#' are skipped.
template <class K>
std::vector<Polynomial<K>> parse_cas_body(const typename PolyRing<K>::Ptr& ring, std::istream& in) {
  std::vector<Polynomial<K>> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gens.push_back(parse_polynomial<K>(ring, line));
  }
  return gens;
}

}  // namespace pfg
