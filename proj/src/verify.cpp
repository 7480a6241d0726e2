#include "pfg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "pfg/budget.hpp"
#include "pfg/groebner.hpp"
#include "pfg/homology.hpp"
#include "pfg/identities.hpp"
#include "pfg/text.hpp"

namespace pfg {

using Outcome = std::pair<bool, std::string>;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped (budget)";
  }
  return "fail";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped (budget)") return Verdict::skipped;
  throw StructuralError("unknown verdict '" + s + "'");
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::pass; });
}

bool SuiteReport::incomplete() const {
  bool failed = false, skipped = false;
  for (const auto& c : checks) {
    failed = failed || c.verdict == Verdict::fail;
    skipped = skipped || c.verdict == Verdict::skipped;
  }
  return skipped && !failed;
}

std::string SuiteReport::status() const {
  if (passed()) return "pass";
  return incomplete() ? "incomplete" : "fail";
}

int SuiteReport::exit_code() const {
  if (passed()) return 0;
  return incomplete() ? 2 : 1;
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

namespace {

template <class Fn>
Outcome with_field(std::uint32_t ch, Fn&& fn) {
  if (ch == 0) return fn(Rationals{});
  return fn(PrimeField(ch));
}

std::string char_label(std::uint32_t ch) { return ch == 0 ? "0" : std::to_string(ch); }

std::string param_id(const std::string& suite, const std::string& name, int f, std::uint32_t ch) {
  return suite + "/" + name + "/f=" + std::to_string(f) + "/char=" + char_label(ch);
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

int expected_codim_j(int f) {
  if (f == 2) return 1;
  if (f == 3) return 2;
  return binom(f - 2, 2) + 2;
}

template <class K>
BettiTable resolve(const K& k, int f, ModuleName m) {
  auto mod = build_module<K>(k, f, m);
  auto res = free_resolution(mod.relations, default_max_len(f));
  if (res.truncated) throw StructuralError("resolution did not terminate within the length bound");
  return res.betti();
}

// ---------------------------------------------------------------- suites

template <class K>
using RingTrial = bool (*)(const RingOf<K>&, std::mt19937_64&);

struct Identity {
  const char* name;
  const char* anchor;
  RingTrial<Rationals> q;
  RingTrial<PrimeField> p;
  bool needs_odd_char;
  bool fixed_count;  // always 20 trials
};

const std::vector<Identity>& identities() {
  static const std::vector<Identity> list = {
      {"module-action", "contraction makes the exterior algebra a module over its dual", &trial_module_action<Rationals>,
       &trial_module_action<PrimeField>, false, false},
      {"divided-square", "contraction against a divided square", &trial_divided_square<Rationals>,
       &trial_divided_square<PrimeField>, false, false},
      {"three-forms", "a 2-form evaluated on a wedge of three 1-forms", &trial_three_forms<Rationals>,
       &trial_three_forms<PrimeField>, false, false},
      {"derivation", "tau acts as a derivation compatible with divided powers", &trial_derivation<Rationals>,
       &trial_derivation<PrimeField>, false, false},
      {"pairing", "symmetry of the evaluation pairing", &trial_pairing<Rationals>, &trial_pairing<PrimeField>, false,
       false},
      {"two-unit", "divided square of xi when two is a unit", &trial_two_unit<Rationals>, &trial_two_unit<PrimeField>,
       true, false},
      {"pfaffian-square", "Pfaffian squares to the determinant", &trial_pfaffian_square<Rationals>,
       &trial_pfaffian_square<PrimeField>, false, true},
  };
  return list;
}

void exterior_identity_checks(const Grid& g, const RunOptions& o, std::vector<CheckSpec>& out) {
  for (int f : g.f)
    for (auto ch : g.chars)
      for (const auto& id : identities()) {
        if (id.needs_odd_char && ch == 2) continue;
        const int trials = id.fixed_count ? 20 : (ch == 0 ? o.identity_trials_rational : o.identity_trials_prime);
        out.push_back({param_id("exterior-identities", id.name, f, ch), id.anchor,
                       [f, ch, trials, id](std::uint64_t seed) -> Outcome {
                         std::mt19937_64 rng(seed);
                         for (int t = 0; t < trials; ++t) {
                           bool ok = ch == 0 ? id.q(PolyRing<Rationals>::make(Rationals{}, f, true), rng)
                                             : id.p(PolyRing<PrimeField>::make(PrimeField(ch), f, true), rng);
                           if (!ok) return {false, "trial " + std::to_string(t) + " failed"};
                         }
                         return {true, std::to_string(trials) + " trials"};
                       }});
      }
}

void closure_checks(const Grid& g, std::vector<CheckSpec>& out) {
  const ComplexName names[] = {ComplexName::precplx, ComplexName::seq32, ComplexName::seq43, ComplexName::relcplx};
  for (int f : g.f)
    for (auto ch : g.chars) {
      for (auto name : names) {
        if (f < 3 && name != ComplexName::seq43) continue;
        out.push_back({param_id("complex-closure", to_string(name), f, ch),
                       "composites vanish modulo the designated relations", [f, ch, name](std::uint64_t) {
                         return with_field(ch, [&](auto k) -> Outcome {
                           using K = decltype(k);
                           auto c = build_complex<K>(k, f, name);
                           auto r = check_closure(c);
                           if (r.composites_ok && r.well_defined) return {true, "all composites vanish"};
                           return {false, "first failing map " + std::to_string(r.first_failure)};
                         });
                       }});
      }
      if (f >= 4)
        out.push_back({param_id("complex-closure", "D1-D2", f, ch), "D1 composed with D2 vanishes",
                       [f, ch](std::uint64_t) {
                         return with_field(ch, [&](auto k) -> Outcome {
                           using K = decltype(k);
                           auto r = PolyRing<K>::make(k, f, true);
                           auto p = map_matrix<K>(r, MapName::D1) * map_matrix<K>(r, MapName::D2);
                           return {p.is_zero(), p.is_zero() ? "D1 D2 = 0" : "D1 D2 != 0"};
                         });
                       }});
    }
}

Outcome codim_outcome(int got, int expected) {
  return {got == expected, "codim " + std::to_string(got) + ", expected " + std::to_string(expected)};
}

void grade_checks(const Grid& g, std::vector<CheckSpec>& out) {
  for (int f : g.f)
    for (auto ch : g.chars) {
      out.push_back({param_id("grades", "J", f, ch), "grade of J", [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) {
                         using K = decltype(k);
                         auto r = PolyRing<K>::make(k, f, true);
                         return codim_outcome(dimension_codim(build_ideal<K>(r, IdealKind::J).gens).codim,
                                              expected_codim_j(f));
                       });
                     }});
      if (f < 4) continue;
      out.push_back({param_id("grades", "I", f, ch), "grade of the 4x4 Pfaffian ideal", [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) {
                         using K = decltype(k);
                         auto r = PolyRing<K>::make(k, f, false);
                         return codim_outcome(dimension_codim(build_ideal<K>(r, IdealKind::I).gens).codim,
                                              binom(f - 2, 2));
                       });
                     }});
      for (int l = 1; l < f; ++l)
        out.push_back({param_id("grades", "Ilambda" + std::to_string(l), f, ch), "grade of I_lambda",
                       [f, ch, l](std::uint64_t) {
                         return with_field(ch, [&](auto k) {
                           using K = decltype(k);
                           auto r = PolyRing<K>::make(k, f, false);
                           return codim_outcome(dimension_codim(build_ideal<K>(r, IdealKind::Ilambda, l).gens).codim,
                                                binom(f - 2, 2) + l - 1);
                         });
                       }});
    }
}

void exactness_checks(const Grid& g, std::vector<CheckSpec>& out) {
  for (int f : g.f)
    for (auto ch : g.chars)
      for (auto name : {ComplexName::precplx, ComplexName::seq32, ComplexName::seq43}) {
        if (f < 3 && name != ComplexName::seq43) continue;
        out.push_back({param_id("exactness", to_string(name), f, ch), "exactness of " + to_string(name),
                       [f, ch, name](std::uint64_t) {
                         return with_field(ch, [&](auto k) -> Outcome {
                           using K = decltype(k);
                           auto c = build_complex<K>(k, f, name);
                           std::vector<int> positions = c.exact_positions;
                           if (name == ComplexName::seq43) {
                             positions.clear();
                             for (int p = 0; p < static_cast<int>(c.terms.size()); ++p) positions.push_back(p);
                           }
                           std::string good, bad;
                           for (int p : positions) {
                             std::string& into = homology_is_zero(c, p) ? good : bad;
                             into += (into.empty() ? "" : ",") + std::to_string(p);
                           }
                           if (!bad.empty()) return {false, "nonzero homology at positions " + bad};
                           return {true, "exact at positions " + good};
                         });
                       }});
      }
}

void resolution_checks(const Grid& g, std::vector<CheckSpec>& out) {
  for (int f : g.f) {
    if (f < 3) continue;
    for (auto ch : g.chars) {
      out.push_back({param_id("resolutions", "N", f, ch), "perfection of N", [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         auto b = resolve(k, f, ModuleName::N);
                         int pd = b.length(), want = binom(f - 2, 2);
                         return {pd == want, "pd " + std::to_string(pd) + ", expected " + std::to_string(want) +
                                                 ", totals " + join(b.totals())};
                       });
                     }});
      if (f >= 4)
        out.push_back({param_id("resolutions", "A", f, ch), "perfection of the Pfaffian quotient",
                       [f, ch](std::uint64_t) {
                         return with_field(ch, [&](auto k) -> Outcome {
                           auto b = resolve(k, f, ModuleName::A);
                           int pd = b.length(), want = binom(f - 2, 2);
                           return {pd == want, "pd " + std::to_string(pd) + ", expected " + std::to_string(want) +
                                                   ", totals " + join(b.totals())};
                         });
                       }});
    }
    if (g.chars.size() > 1) {
      auto chars = g.chars;
      out.push_back({"resolutions/N-length-across-characteristics/f=" + std::to_string(f),
                     "projective dimension of N does not depend on the field", [f, chars](std::uint64_t) -> Outcome {
                       std::string detail;
                       std::vector<int> pds;
                       for (auto ch : chars) {
                         with_field(ch, [&](auto k) -> Outcome {
                           pds.push_back(resolve(k, f, ModuleName::N).length());
                           return {true, ""};
                         });
                         detail += (detail.empty() ? "" : " ") + std::string("char ") + char_label(ch) + ": " +
                                   std::to_string(pds.back());
                       }
                       bool same = std::adjacent_find(pds.begin(), pds.end(), std::not_equal_to<>()) == pds.end();
                       return {same, detail};
                     }});
    }
  }
}

void gorenstein_checks(const Grid& g, std::vector<CheckSpec>& out) {
  for (int f : g.f)
    for (auto ch : g.chars) {
      out.push_back({param_id("gorenstein", "RJ", f, ch), "J is a perfect Gorenstein ideal", [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         auto b = resolve(k, f, ModuleName::RJ);
                         auto t = b.totals();
                         int want = expected_codim_j(f);
                         bool ok = b.length() == want && !t.empty() && t.back() == 1;
                         return {ok, "length " + std::to_string(b.length()) + ", expected " + std::to_string(want) +
                                         ", totals " + join(t)};
                       });
                     }});
      if (f < 3) continue;
      out.push_back({param_id("gorenstein", "N-palindrome", f, ch), "self-duality of N seen in its Betti table",
                     [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         auto b = resolve(k, f, ModuleName::N);
                         auto p = betti_palindrome_check(b, binom(f - 2, 2));
                         return {p.palindromic, std::string(p.palindromic ? "palindromic" : "not palindromic") +
                                                    ", sigma (" + std::to_string(p.sigma.x) + "," +
                                                    std::to_string(p.sigma.t) + ")"};
                       });
                     }});
      if (f < 4) continue;
      out.push_back({param_id("gorenstein", "mapping-cone", f, ch), "iterated mapping cone Betti formula",
                     [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         auto predicted =
                             mapping_cone_betti(resolve(k, f, ModuleName::A), resolve(k, f, ModuleName::N));
                         auto actual = resolve(k, f, ModuleName::RJ);
                         return {predicted == actual, "predicted totals " + join(predicted.totals()) + ", actual " +
                                                          join(actual.totals())};
                       });
                     }});
    }
}

template <class K>
bool same_ideal_gens(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
  return same_ideal(groebner_basis(a), groebner_basis(b));
}

template <class K>
Outcome regular_sequence(const RingOf<K>& r, IdealKind kind) {
  auto x12 = Polynomial<K>::variable(r, r->x(1, 2));
  auto x13 = Polynomial<K>::variable(r, r->x(1, 3));
  auto base = build_ideal<K>(r, kind).gens;
  if (!same_ideal(groebner_basis(base), ideal_quotient(base, x12))) return {false, "colon by x_(1,2) grows"};
  auto plus = base;
  plus.push_back(x12);
  if (!same_ideal(groebner_basis(plus), ideal_quotient(plus, x13))) return {false, "colon by x_(1,3) grows"};
  return {true, "x_(1,2), x_(1,3) regular on the quotient"};
}

void localization_checks(const Grid& g, std::vector<CheckSpec>& out) {
  for (int f : g.f)
    for (auto ch : g.chars) {
      if (f < 4) continue;
      out.push_back({param_id("localization", "S2-in-J", f, ch), "pivot polynomials lie in J", [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         using K = decltype(k);
                         auto r = PolyRing<K>::make(k, f, true);
                         auto gb = groebner_basis(build_ideal<K>(r, IdealKind::J).gens);
                         auto s2 = s1_s2_sets<K>(r).s2;
                         for (std::size_t i = 0; i < s2.size(); ++i)
                           if (!ideal_member(s2[i], gb)) return {false, "S2 element " + std::to_string(i) + " not in J"};
                         return {true, std::to_string(s2.size()) + " elements in J"};
                       });
                     }});
      out.push_back({param_id("localization", "J-near-S2", f, ch), "J agrees with (S2) after inverting x_(1,2)",
                     [f, ch](std::uint64_t) {
                       return with_field(ch, [&](auto k) -> Outcome {
                         using K = decltype(k);
                         auto r = PolyRing<K>::make(k, f, true);
                         auto x12 = Polynomial<K>::variable(r, r->x(1, 2));
                         auto s2 = s1_s2_sets<K>(r).s2;
                         int worst = 0;
                         for (const auto& gen : build_ideal<K>(r, IdealKind::J).gens) {
                           auto res = saturation_member(s2, x12, gen, 2);
                           if (!res.member) return {false, "x_(1,2)^2 g not in (S2) for g = " + render(gen)};
                           worst = std::max(worst, res.exponent);
                         }
                         return {true, "largest exponent " + std::to_string(worst)};
                       });
                     }});
      if (f == 4)
        out.push_back({param_id("localization", "J-near-I-tX", f, ch),
                       "J agrees with I + ((tX)_1, (tX)_2) after inverting x_(1,2)", [f, ch](std::uint64_t) {
                         return with_field(ch, [&](auto k) -> Outcome {
                           using K = decltype(k);
                           auto r = PolyRing<K>::make(k, f, true);
                           auto x12 = Polynomial<K>::variable(r, r->x(1, 2));
                           auto base = build_ideal<K>(r, IdealKind::I).gens;
                           auto tx = build_ideal<K>(r, IdealKind::K).gens;
                           base.push_back(tx[0]);
                           base.push_back(tx[1]);
                           int worst = 0;
                           for (const auto& gen : build_ideal<K>(r, IdealKind::J).gens) {
                             auto res = saturation_member(base, x12, gen, 4);
                             if (!res.member) return {false, "no exponent <= 4 for g = " + render(gen)};
                             worst = std::max(worst, res.exponent);
                           }
                           return {true, "largest exponent " + std::to_string(worst)};
                         });
                       }});
      for (auto kind : {IdealKind::I, IdealKind::J})
        out.push_back({param_id("localization", "regular-sequence-" + to_string(kind), f, ch),
                       "x_(1,2), x_(1,3) form a regular sequence modulo " + to_string(kind), [f, ch, kind](std::uint64_t) {
                         return with_field(ch, [&](auto k) {
                           using K = decltype(k);
                           return regular_sequence<K>(PolyRing<K>::make(k, f, true), kind);
                         });
                       }});
    }
}

void anomaly_checks(const Grid& g, std::vector<CheckSpec>& out) {
  if (std::find(g.f.begin(), g.f.end(), 5) == g.f.end()) return;
  out.push_back({"char-anomaly/N/f=5", "characteristic two anomaly", [](std::uint64_t) -> Outcome {
                   auto r = char2_anomaly_check(5);
                   bool ok = r.witness_outside_d1_char2 && r.witness_in_relations_char2 && r.certificate_holds_char0 &&
                             r.beta1_char2 != r.beta1_char0 && r.pd_char2 == 3 && r.pd_char0 == 3;
                   std::ostringstream d;
                   d << "witness outside im(d1) over F2: " << (r.witness_outside_d1_char2 ? "yes" : "no")
                     << ", certificate over QQ: " << (r.certificate_holds_char0 ? "holds" : "fails") << ", beta1 "
                     << r.beta1_char2 << " vs " << r.beta1_char0 << ", pd " << r.pd_char2 << " and " << r.pd_char0;
                   return {ok, d.str()};
                 }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"exterior-identities", "complex-closure", "grades",
                                                 "exactness",           "resolutions",     "gorenstein",
                                                 "localization",        "char-anomaly",    "all"};
  return names;
}

std::string suite_description(const std::string& name) {
  if (name == "exterior-identities") return "exterior algebra identities and Pf^2 = det on random trials";
  if (name == "complex-closure") return "composites of the named complexes vanish; D1 D2 = 0";
  if (name == "grades") return "grade of I, I_lambda and J";
  if (name == "exactness") return "homology of precplx, seq32 and seq43 vanishes";
  if (name == "resolutions") return "perfection of A and N; pd(N) independent of the field";
  if (name == "gorenstein") return "R/J Gorenstein, N self-dual shadow, mapping cone formula";
  if (name == "localization") return "J near (S2) and I + (tX) after inverting x_(1,2); regular sequences";
  if (name == "char-anomaly") return "d1 at f = 5 behaves differently over F2";
  if (name == "all") return "every suite above";
  throw StructuralError("unknown suite '" + name + "'");
}

std::vector<CheckSpec> suite_checks(const std::string& name, const Grid& requested, const RunOptions& opts) {
  suite_description(name);
  Grid grid = requested;
  for (int f : grid.f)
    if (f < 2) throw StructuralError("f must be at least 2");
  std::sort(grid.f.begin(), grid.f.end());
  grid.f.erase(std::unique(grid.f.begin(), grid.f.end()), grid.f.end());
  std::sort(grid.chars.begin(), grid.chars.end());
  grid.chars.erase(std::unique(grid.chars.begin(), grid.chars.end()), grid.chars.end());
  std::vector<CheckSpec> out;
  const bool all = name == "all";
  // registration order is execution order: cheap suites first
  if (all || name == "grades") grade_checks(grid, out);
  if (all || name == "complex-closure") closure_checks(grid, out);
  if (all || name == "localization") localization_checks(grid, out);
  if (all || name == "char-anomaly") anomaly_checks(grid, out);
  if (all || name == "exactness") exactness_checks(grid, out);
  if (all || name == "exterior-identities") exterior_identity_checks(grid, opts, out);
  if (all || name == "resolutions") resolution_checks(grid, out);
  if (all || name == "gorenstein") gorenstein_checks(grid, out);
  return out;
}

SuiteReport run_checks(const std::string& suite, const Grid& grid, std::vector<CheckSpec> checks,
                       const RunOptions& opts) {
  SuiteReport report;
  report.suite = suite;
  report.grid = grid;
  report.checks.resize(checks.size());
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opts.budget_seconds));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      auto& out = report.checks[i];
      out.id = checks[i].id;
      out.anchor = checks[i].anchor;
      auto start = Clock::now();
      if (start >= deadline) {
        out.verdict = Verdict::skipped;
        continue;
      }
      DeadlineScope scope(deadline);
      try {
        auto [ok, detail] = checks[i].run(check_seed(grid.seed, checks[i].id));
        out.verdict = ok ? Verdict::pass : Verdict::fail;
        out.detail = detail;
      } catch (const BudgetExceeded&) {
        out.verdict = Verdict::skipped;
      } catch (const std::exception& e) {
        out.verdict = Verdict::fail;
        out.detail = std::string("error: ") + e.what();
      }
      out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
  };
  unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

SuiteReport run_suite(const std::string& name, const Grid& grid, const RunOptions& opts) {
  return run_checks(name, grid, suite_checks(name, grid, opts), opts);
}

nlohmann::json to_json(const SuiteReport& r, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"id", c.id}, {"anchor", c.anchor}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite},
          {"grid", {{"f", r.grid.f}, {"char", r.grid.chars}, {"seed", r.grid.seed}}},
          {"status", r.status()},
          {"checks", checks}};
}

SuiteReport report_from_json(const nlohmann::json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.grid.f = j.at("grid").at("f").get<std::vector<int>>();
  r.grid.chars = j.at("grid").at("char").get<std::vector<std::uint32_t>>();
  r.grid.seed = j.at("grid").at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.id = c.at("id").get<std::string>();
    cr.anchor = c.at("anchor").get<std::string>();
    cr.verdict = verdict_from_string(c.at("verdict").get<std::string>());
    cr.detail = c.at("detail").get<std::string>();
    if (c.contains("seconds")) cr.seconds = c.at("seconds").get<double>();
    r.checks.push_back(std::move(cr));
  }
  return r;
}

std::string to_text(const SuiteReport& r, bool timings) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.status() << " (" << r.checks.size() << " checks)\n";
  for (const auto& c : r.checks) {
    std::string v = c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "SKIP";
    out << v << "  " << c.id << "  [" << c.anchor << "]";
    if (!c.detail.empty()) out << "  " << c.detail;
    if (timings) out << "  " << std::fixed << std::setprecision(3) << c.seconds << "s";
    out << "\n";
  }
  return out.str();
}

}  // namespace pfg
