#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfg/cas.hpp"
#include "pfg/groebner.hpp"
#include "pfg/homology.hpp"
#include "pfg/verify.hpp"

using namespace pfg;
using nlohmann::json;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<int> f{4, 5};
  std::vector<std::uint32_t> chars{0, 32003};
  std::uint64_t seed = 0;
  double budget_seconds = 900;
  std::string output_dir = ".";
  std::string format = "json";
  unsigned threads = 0;
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long r = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw UsageError(key + ": not an integer: '" + v + "'");
  }
}

int checked_f(long f) {
  if (f < 2 || f > 12) throw UsageError("f must lie in [2, 12], got " + std::to_string(f));
  return static_cast<int>(f);
}

std::uint32_t checked_char(long c) {
  if (c == 0) return 0;
  if (c < 2 || c >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(c)))
    throw UsageError("characteristic must be 0 or a prime below 2^31, got " + std::to_string(c));
  return static_cast<std::uint32_t>(c);
}

std::vector<int> parse_f_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) out.push_back(checked_f(parse_long("f", item)));
  if (out.empty()) throw UsageError("empty f list");
  return out;
}

std::vector<std::uint32_t> parse_char_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split_list(s)) out.push_back(checked_char(parse_long("char", item)));
  if (out.empty()) throw UsageError("empty characteristic list");
  return out;
}

void check_format(const std::string& fmt) {
  if (fmt != "json" && fmt != "text") throw UsageError("format must be json or text, got '" + fmt + "'");
}

void apply_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "f")
      c.f = parse_f_list(value);
    else if (key == "char")
      c.chars = parse_char_list(value);
    else if (key == "seed")
      c.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "budget_seconds")
      c.budget_seconds = static_cast<double>(parse_long(key, value));
    else if (key == "output_dir")
      c.output_dir = value;
    else if (key == "format") {
      check_format(value);
      c.format = value;
    } else if (key == "threads")
      c.threads = static_cast<unsigned>(parse_long(key, value));
    else
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

template <class Fn>
auto with_field(std::uint32_t ch, Fn&& fn) {
  if (ch == 0) return fn(Rationals{});
  return fn(PrimeField(ch));
}

bool ring_needs_t(IdealKind k) { return k == IdealKind::K || k == IdealKind::J; }

int check_lambda(IdealKind kind, int f, int lambda) {
  if (kind != IdealKind::Ilambda) return 0;
  if (lambda < 1 || lambda >= f) throw UsageError("--lambda must lie in [1, f-1] for Ilambda");
  return lambda;
}

// Generators with a positive leading printed term, sorted and without repeats.
template <class K>
std::vector<Polynomial<K>> normalized(std::vector<Polynomial<K>> gens) {
  std::map<std::string, Polynomial<K>> by_text;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (render(g)[0] == '-') g = -g;
    by_text.emplace(render(g), g);
  }
  std::vector<Polynomial<K>> out;
  for (auto& [text, g] : by_text) out.push_back(g);
  return out;
}

std::filesystem::path output_path(const Config& c, const std::string& name) {
  std::filesystem::path dir(c.output_dir);
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  out << text;
}

// ---------------------------------------------------------------- betti output

json betti_json(const BettiTable& b, bool bigraded) {
  json rows = json::array();
  if (bigraded) {
    for (const auto& [key, n] : b.entries)
      rows.push_back({{"i", key.first}, {"j", key.second.x + key.second.t}, {"jx", key.second.x}, {"jt", key.second.t},
                      {"count", n}});
  } else {
    for (const auto& [key, n] : b.singly_graded()) rows.push_back({{"i", key.first}, {"j", key.second}, {"count", n}});
  }
  return rows;
}

std::string betti_text(const BettiTable& b, bool bigraded) {
  std::ostringstream out;
  auto totals = b.totals();
  if (bigraded) {
    out << "i  (jx,jt)  count\n";
    for (const auto& [key, n] : b.entries)
      out << key.first << "  (" << key.second.x << "," << key.second.t << ")  " << n << "\n";
  }
  // degree rows j - i, one column per homological index
  auto sg = b.singly_graded();
  std::set<int> shifts;
  for (const auto& [key, n] : sg) shifts.insert(key.second - key.first);
  const int w = 6;
  out << std::setw(w) << "" << ":";
  for (std::size_t i = 0; i < totals.size(); ++i) out << std::setw(w) << i;
  out << "\n" << std::setw(w) << "total" << ":";
  for (long t : totals) out << std::setw(w) << t;
  out << "\n";
  for (int s : shifts) {
    out << std::setw(w) << s << ":";
    for (std::size_t i = 0; i < totals.size(); ++i) {
      auto it = sg.find({static_cast<int>(i), s + static_cast<int>(i)});
      out << std::setw(w) << (it == sg.end() ? std::string(".") : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- subcommands

struct GenArgs {
  std::string ideal;
  int f = 0;
  int lambda = 0;
  long ch = 0;
  std::string form = "native";
};

template <class K>
std::string gen_text(const K& k, IdealKind kind, int f, int lambda, const std::string& form) {
  auto r = PolyRing<K>::make(k, f, ring_needs_t(kind));
  auto gens = normalized(build_ideal<K>(r, kind, lambda).gens);
  if (form == "cas") return render_cas(gens, *r);
  std::string out;
  for (const auto& g : gens) out += render(g) + "\n";
  return out;
}

int run_gen(const GenArgs& a) {
  auto kind = ideal_kind_from_string(a.ideal);
  int f = checked_f(a.f);
  int lambda = check_lambda(kind, f, a.lambda);
  auto ch = checked_char(a.ch);
  if (a.form != "native" && a.form != "cas") throw UsageError("--form must be native or cas");
  std::cout << with_field(ch, [&](auto k) { return gen_text(k, kind, f, lambda, a.form); });
  return 0;
}

struct CodimArgs {
  std::string ideal;
  int f = 0;
  int lambda = 0;
  long ch = 0;
  std::string input;
};

template <class K>
json codim_json(const std::vector<Polynomial<K>>& gens) {
  auto h = dimension_codim(gens);
  return {{"dim", h.dim}, {"codim", h.codim}, {"hilbert_numerator", h.numerator}};
}

int run_codim(const CodimArgs& a) {
  json out;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot read '" + a.input + "'");
    std::string header;
    std::getline(in, header);
    auto h = parse_cas_header(header);
    checked_char(h.characteristic);
    out = with_field(h.characteristic, [&](auto k) {
      using K = decltype(k);
      auto r = PolyRing<K>::make(k, h.f, h.with_t);
      return codim_json(parse_cas_body<K>(r, in));
    });
  } else {
    if (a.ideal.empty() || a.f == 0) throw UsageError("codim needs --ideal and --f, or --input");
    auto kind = ideal_kind_from_string(a.ideal);
    int f = checked_f(a.f);
    int lambda = check_lambda(kind, f, a.lambda);
    out = with_field(checked_char(a.ch), [&](auto k) {
      using K = decltype(k);
      auto r = PolyRing<K>::make(k, f, ring_needs_t(kind));
      return codim_json(build_ideal<K>(r, kind, lambda).gens);
    });
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct ResolveArgs {
  std::string module;
  int f = 0;
  int lambda = 0;
  long ch = 0;
  bool bigraded = false;
  std::string format;
};

int run_resolve(const ResolveArgs& a, const Config& c) {
  auto name = module_name_from_string(a.module);
  int f = checked_f(a.f);
  if (name == ModuleName::Ilambda && (a.lambda < 1 || a.lambda >= f))
    throw UsageError("--lambda must lie in [1, f-1] for Ilambda");
  if (name == ModuleName::N && f < 3) throw UsageError("N needs f >= 3");
  auto ch = checked_char(a.ch);
  std::string fmt = a.format.empty() ? c.format : a.format;
  check_format(fmt);
  BettiTable b;
  bool truncated = false;
  with_field(ch, [&](auto k) {
    using K = decltype(k);
    auto mod = build_module<K>(k, f, name, a.lambda);
    auto res = free_resolution(mod.relations, default_max_len(f));
    b = res.betti();
    truncated = res.truncated;
    return 0;
  });
  if (fmt == "text") {
    std::cout << "module " << to_string(name) << ", f = " << f << ", char " << ch << (truncated ? ", truncated" : "")
              << "\n"
              << betti_text(b, a.bigraded);
  } else {
    json out = {{"module", to_string(name)}, {"f", f},           {"char", ch},
                {"length", b.length()},      {"totals", b.totals()}, {"truncated", truncated},
                {"betti", betti_json(b, a.bigraded)}};
    std::cout << out.dump() << "\n";
  }
  return truncated ? 1 : 0;
}

struct VerifyArgs {
  std::string suite;
  std::string f, chars, format, out;
  long seed = -1;
  double budget = -1;
  bool timings = false;
  unsigned threads = 0;
};

int run_verify(const VerifyArgs& a, Config c) {
  if (!a.f.empty()) c.f = parse_f_list(a.f);
  if (!a.chars.empty()) c.chars = parse_char_list(a.chars);
  if (a.seed >= 0) c.seed = static_cast<std::uint64_t>(a.seed);
  if (a.budget >= 0) c.budget_seconds = a.budget;
  if (!a.format.empty()) c.format = a.format;
  if (a.threads) c.threads = a.threads;
  check_format(c.format);
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) throw UsageError("unknown suite '" + a.suite + "'");
  Grid g{c.f, c.chars, c.seed};
  RunOptions opts;
  opts.budget_seconds = c.budget_seconds;
  opts.threads = c.threads;
  auto report = run_suite(a.suite, g, opts);
  std::string text = c.format == "json" ? to_json(report, a.timings).dump(2) + "\n" : to_text(report, a.timings);
  std::cout << text;
  if (!a.out.empty()) write_file(output_path(c, a.out), text);
  return report.exit_code();
}

struct ExportArgs {
  std::string ideal, map, report;
  int f = 0;
  int lambda = 0;
  long ch = 0;
  std::string format;
};

int run_export(const ExportArgs& a, const Config& c) {
  int chosen = !a.ideal.empty() + !a.map.empty() + !a.report.empty();
  if (chosen != 1) throw UsageError("export needs exactly one of --ideal, --map, --report");
  std::filesystem::path written;
  if (!a.report.empty()) {
    std::ifstream in(a.report);
    if (!in) throw UsageError("cannot read '" + a.report + "'");
    auto report = report_from_json(json::parse(in));
    std::string fmt = a.format.empty() ? "text" : a.format;
    check_format(fmt);
    auto stem = std::filesystem::path(a.report).stem().string();
    written = output_path(c, stem + (fmt == "json" ? ".json" : ".txt"));
    write_file(written, fmt == "json" ? to_json(report).dump(2) + "\n" : to_text(report));
  } else if (!a.ideal.empty()) {
    auto kind = ideal_kind_from_string(a.ideal);
    int f = checked_f(a.f);
    int lambda = check_lambda(kind, f, a.lambda);
    auto ch = checked_char(a.ch);
    auto text = with_field(ch, [&](auto k) { return gen_text(k, kind, f, lambda, "cas"); });
    written = output_path(c, a.ideal + "_f" + std::to_string(f) + "_char" + std::to_string(ch) + ".txt");
    write_file(written, text);
  } else {
    auto name = map_name_from_string(a.map);
    int f = checked_f(a.f);
    auto ch = checked_char(a.ch);
    auto text = with_field(ch, [&](auto k) {
      using K = decltype(k);
      bool with_t = name == MapName::D1 || name == MapName::D2 || name == MapName::tau_row || name == MapName::tXi_row;
      auto r = PolyRing<K>::make(k, f, with_t);
      auto m = map_matrix<K>(r, name);
      std::ostringstream out;
      out << cas_header(*r) << "\n# " << m.rows() << " x " << m.cols() << " matrix, one row per line, entries separated by ';'\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " ; " : "") << render(m.at(i, j));
        out << "\n";
      }
      return out.str();
    });
    written = output_path(c, a.map + "_f" + std::to_string(f) + "_char" + std::to_string(ch) + ".txt");
    write_file(written, text);
  }
  std::cout << written.string() << "\n";
  return 0;
}

std::string suites_help() {
  std::ostringstream s;
  s << "Suites:\n";
  for (const auto& n : suite_names()) s << "  " << std::left << std::setw(22) << n << suite_description(n) << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian and Gorenstein ideal toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file (f, char, seed, budget_seconds, output_dir, format, threads)");
  std::string output_dir;
  app.add_option("--output-dir", output_dir, "directory for written files (overrides PFG_OUTPUT_DIR)");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "print the generators of an ideal");
  g->add_option("--ideal", gen.ideal, "I, K, J, Ilambda or Iprime")->required();
  g->add_option("--f", gen.f, "rank f >= 2")->required();
  g->add_option("--lambda", gen.lambda, "lambda for Ilambda");
  g->add_option("--char", gen.ch, "0 or a prime");
  g->add_option("--form", gen.form, "native or cas");

  CodimArgs codim;
  auto* cd = app.add_subcommand("codim", "dimension, codimension and Hilbert numerator of an ideal (JSON)");
  cd->add_option("--ideal", codim.ideal, "I, K, J, Ilambda or Iprime");
  cd->add_option("--f", codim.f, "rank f >= 2");
  cd->add_option("--lambda", codim.lambda, "lambda for Ilambda");
  cd->add_option("--char", codim.ch, "0 or a prime");
  cd->add_option("--input", codim.input, "generator file in the CAS form written by gen --form cas");

  ResolveArgs res;
  auto* rs = app.add_subcommand("resolve", "minimal free resolution and Betti table of a module");
  rs->add_option("--module", res.module, "A, N, RJ or Ilambda")->required();
  rs->add_option("--f", res.f, "rank f >= 2")->required();
  rs->add_option("--lambda", res.lambda, "lambda for Ilambda");
  rs->add_option("--char", res.ch, "0 or a prime");
  rs->add_flag("--bigraded", res.bigraded, "report (x, t) bidegrees");
  rs->add_option("--format", res.format, "json or text");

  VerifyArgs ver;
  auto* vf = app.add_subcommand("verify", "run a verification suite; exit 0 pass, 1 fail, 2 incomplete");
  vf->footer(suites_help());
  vf->add_option("--suite", ver.suite, "suite name")->required();
  vf->add_option("--f", ver.f, "comma separated ranks, e.g. 4,5");
  vf->add_option("--char", ver.chars, "comma separated characteristics, e.g. 0,32003");
  vf->add_option("--seed", ver.seed, "seed for random trials");
  vf->add_option("--budget-seconds", ver.budget, "wall clock budget");
  vf->add_option("--format", ver.format, "json or text");
  vf->add_option("--threads", ver.threads, "worker threads (default: all cores)");
  vf->add_option("--out", ver.out, "also write the report to this file in the output directory");
  vf->add_flag("--timings", ver.timings, "include per-check timings");

  ExportArgs ex;
  auto* xp = app.add_subcommand("export", "write an ideal, a map or a converted report to the output directory");
  xp->add_option("--ideal", ex.ideal, "ideal to write in CAS form");
  xp->add_option("--map", ex.map, "map matrix to write (d0, d1, delta1, rho, d0prime, tau_row, tXi_row, D1, D2)");
  xp->add_option("--report", ex.report, "JSON report to convert");
  xp->add_option("--f", ex.f, "rank f >= 2");
  xp->add_option("--lambda", ex.lambda, "lambda for Ilambda");
  xp->add_option("--char", ex.ch, "0 or a prime");
  xp->add_option("--format", ex.format, "json or text (reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (const char* env = std::getenv("PFG_OUTPUT_DIR"); env && *env) cfg.output_dir = env;
    if (!output_dir.empty()) cfg.output_dir = output_dir;

    if (*g) return run_gen(gen);
    if (*cd) return run_codim(codim);
    if (*rs) return run_resolve(res, cfg);
    if (*vf) return run_verify(ver, cfg);
    if (*xp) return run_export(ex, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
