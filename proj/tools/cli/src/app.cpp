#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "bench.hpp"
#include "dedekind/bd_sum.hpp"
#include "dedekind/bernoulli.hpp"
#include "dedekind/classical_sums.hpp"
#include "dedekind/petersson_knopp.hpp"
#include "dedekind/series.hpp"
#include "dedekind/sign_matrix.hpp"
#include "dedekind_cli/cli.hpp"

namespace dedekind::cli {

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  int degree = 6;
  unsigned parallel = 1;
  std::string out_path;
};

// Option storage for every subcommand. Lists and rationals stay strings
// until dispatch so that parse errors get one uniform diagnostic.
struct Args {
  std::string a, b, c, m, n, x, y, z, k, p, r, h;
  std::string method = "fast";
  std::string kind;
  std::string path = "p-vectors";
  std::string variant;
  std::string mult;
  std::string case_name;
  std::size_t trials = 100;
  long amax = 7;
  long xden = 13;
  std::string bits = "64,128,256,512";
  int samples = 21;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void report(const VerificationReport& r) {
    if (json_) {
      out_ << to_json(r).dump() << '\n';
    } else {
      out_ << to_text(r);
    }
  }

  /// A computed value: plain text, or a reported-only record.
  void value(const std::string& identity, const std::vector<std::pair<std::string, std::string>>& inputs,
             const ReportValue& v, const std::string& detail = {}) {
    if (!json_) {
      if (const auto* s = std::get_if<std::string>(&v)) out_ << *s << '\n';
      else out_ << render_terms(std::get<std::vector<Term>>(v)) << '\n';
      return;
    }
    VerificationReport r;
    r.identity = identity;
    r.inputs = inputs;
    r.status = Status::reported_only;
    r.lhs = v;
    r.detail = detail;
    report(r);
  }

  std::ostream& stream() { return out_; }
  bool json() const { return json_; }

 private:
  std::ostream& out_;
  bool json_;
};

int exit_for(const VerificationReport& r) {
  return r.status == Status::fail ? kExitIdentityFailure : kExitOk;
}

Integer parse_integer(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  Integer v;
  if (digits.empty() || v.set_str(digits, 10) != 0) throw UsageError("not an integer: '" + text + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int parse_index(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 1) throw UsageError("expected a single integer: '" + text + "'");
  return v.front();
}

long require(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("missing required option ") + name);
  return parse_long(text);
}

std::vector<Rational> shifts_or_zero(const std::string& text, std::size_t n) {
  if (text.empty()) return std::vector<Rational>(n);
  auto x = parse_rational_list(text);
  if (x.size() != n) throw UsageError("--x must have as many entries as --a");
  return x;
}

std::size_t one_based(const std::string& text, std::size_t n) {
  const long k = require(text, "--k");
  if (k < 1 || static_cast<std::size_t>(k) > n) throw UsageError("--k must be in 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

OmegaPath parse_path(const std::string& text) {
  if (text == "h-tuples") return OmegaPath::h_tuples;
  if (text == "p-vectors") return OmegaPath::p_vectors;
  throw UsageError("--path must be h-tuples or p-vectors");
}

// ---- compute ---------------------------------------------------------------

int compute_classical(const Args& o, Emitter& emit) {
  if (o.a.empty() || o.b.empty()) throw UsageError("compute classical needs --a and --b");
  const std::vector<std::pair<std::string, std::string>> inputs{{"a", o.a}, {"b", o.b}, {"method", o.method}};
  if (o.method == "fast") {
    const Rational s = dedekind_sum_fast(parse_integer(o.a), parse_integer(o.b));
    emit.value("classical", inputs, s.str());
  } else if (o.method == "brute") {
    emit.value("classical", inputs, dedekind_sum_bruteforce(parse_long(o.a), parse_long(o.b)).str());
  } else if (o.method == "cotangent") {
    const long a = parse_long(o.a);
    const long b = parse_long(o.b);
    if (a < 1 || b < 1) throw UsageError("--a and --b must be >= 1");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", dedekind_sum_cotangent(a, b));
    emit.value("classical", inputs, std::string(buf), "double precision");
  } else {
    throw UsageError("--method must be fast, brute or cotangent");
  }
  return kExitOk;
}

int compute_legacy(const Args& o, Emitter& emit) {
  const auto num = [](const std::string& s, long def) { return s.empty() ? def : parse_long(s); };
  const auto idx = [](const std::string& s) { return s.empty() ? 1 : parse_index(s); };
  const auto rat = [](const std::string& s) { return s.empty() ? Rational() : parse_rational(s); };
  const long a = num(o.a, 1), b = num(o.b, 1), c = num(o.c, 1);
  const int m = idx(o.m), n = idx(o.n);
  const Rational x = rat(o.x), y = rat(o.y), z = rat(o.z);
  LegacySumParams params;
  if (o.kind == "apostol") params = ApostolParams{a, b, n};
  else if (o.kind == "carlitz-mikolas") params = CarlitzMikolasParams{a, b, c, m, n};
  else if (o.kind == "dedekind-rademacher") params = DedekindRademacherParams{a, b, x, y};
  else if (o.kind == "takacs") params = TakacsParams{a, b, n, x, y};
  else if (o.kind == "hall-wilson-zagier") params = HallWilsonZagierParams{a, b, c, m, n, x, y, z};
  else throw UsageError("--kind must be apostol, carlitz-mikolas, dedekind-rademacher, takacs or hall-wilson-zagier");
  std::vector<std::pair<std::string, std::string>> inputs{{"kind", o.kind}};
  const std::pair<const char*, const std::string*> given[] = {
      {"a", &o.a}, {"b", &o.b}, {"c", &o.c}, {"m", &o.m},
      {"n", &o.n}, {"x", &o.x}, {"y", &o.y}, {"z", &o.z}};
  for (const auto& [name, v] : given) {
    if (!v->empty()) inputs.emplace_back(name, *v);
  }
  emit.value("legacy", inputs, legacy_sum(params).str());
  return kExitOk;
}

int compute_bd(const Args& o, Emitter& emit) {
  if (o.a.empty() || o.p.empty()) throw UsageError("compute bd needs --a, --k and --p");
  BDSumSpec spec;
  spec.a = parse_long_list(o.a);
  spec.x = shifts_or_zero(o.x, spec.a.size());
  spec.k = one_based(o.k, spec.a.size());
  spec.p = parse_int_list(o.p);
  emit.value("bd", {{"a", o.a}, {"x", join_values(spec.x)}, {"k", o.k}, {"p", o.p}}, bd_sum(spec).str());
  return kExitOk;
}

int compute_omega(const Args& o, const Globals& g, Emitter& emit) {
  if (o.a.empty()) throw UsageError("compute omega needs --a and --k");
  const auto a = parse_long_list(o.a);
  const auto x = shifts_or_zero(o.x, a.size());
  const std::size_t k = one_based(o.k, a.size());
  const auto poly = norm_omega(a, x, k, g.degree, parse_path(o.path));
  emit.value("omega",
             {{"a", o.a}, {"x", join_values(x)}, {"k", o.k}, {"degree", std::to_string(g.degree)}, {"path", o.path}},
             poly.to_terms(), "coefficients of (y1...yn) * Omega");
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct FourVarInstance {
  const char* a;
  const char* x;
};

const std::map<std::string, FourVarInstance>& four_var_cases() {
  static const std::map<std::string, FourVarInstance> cases{
      {"i", {"1,1,1,1", "0,0,0,0"}},
      {"ii", {"2,3,5,7", "2/7,3/7,5/7,1/2"}},
      {"iii", {"2,3,5,7", "2/7,3/7,1/3,1/4"}},
      {"iv", {"2,3,5,7", "1/11,2/11,3/11,4/11"}},
  };
  return cases;
}

int verify_sign_lemmas_cmd(const Args& o, Emitter& emit) {
  std::vector<Rational> r;
  if (!o.r.empty()) {
    r = parse_rational_list(o.r);
  } else {
    if (o.a.empty() || o.h.empty()) throw UsageError("verify sign-lemmas needs --r, or --a, --x and --h");
    const auto a = parse_long_list(o.a);
    const auto x = shifts_or_zero(o.x, a.size());
    const auto h = parse_long_list(o.h);
    if (h.size() != a.size()) throw UsageError("--h must have as many entries as --a");
    r = ResidueVector::from_shifts(a, x, h).values();
  }
  if (r.size() < 2) throw UsageError("need at least two residues");
  const ResidueVector residues(r);
  const auto lemmas = verify_sign_lemmas(residues);
  const auto bookkeeping = exponent_bookkeeping_check(residues);
  emit.report(lemmas);
  emit.report(bookkeeping);
  return lemmas.passed() && bookkeeping.passed() ? kExitOk : kExitIdentityFailure;
}

int verify_pk_general(const Args& o, Emitter& emit) {
  DedekindTypeSpec spec;
  spec.modulus = require(o.a, "--a");
  if (o.mult.empty() || o.p.empty()) throw UsageError("verify pk-general needs --a, --mult, --p and --m");
  spec.multipliers = parse_long_list(o.mult);
  spec.indices = parse_int_list(o.p);
  PkVariant variant = kPinnedPkVariant;
  if (o.variant == "theorem") variant = PkVariant::theorem;
  else if (o.variant == "corollary") variant = PkVariant::corollary;
  else if (!o.variant.empty()) throw UsageError("--variant must be theorem or corollary");
  const auto r = pk_general_check(spec, require(o.m, "--m"), variant);
  emit.report(r);
  return exit_for(r);
}

int verify(const std::string& identity, const Args& o, const Globals& g, Emitter& emit) {
  VerificationReport r;
  if (identity == "dedekind-reciprocity") {
    r = dedekind_reciprocity_check(require(o.a, "--a"), require(o.b, "--b"));
  } else if (identity == "raabe") {
    const long m = require(o.m, "--m");
    if (m < 0 || m > 10000) throw UsageError("--m must be in 0..10000");
    r = raabe_check(require(o.a, "--a"), static_cast<int>(m), o.x.empty() ? Rational() : parse_rational(o.x));
  } else if (identity == "reciprocity" || identity == "cross-path") {
    if (o.a.empty()) throw UsageError("verify " + identity + " needs --a and --x");
    const auto a = parse_long_list(o.a);
    const auto x = shifts_or_zero(o.x, a.size());
    r = identity == "reciprocity" ? reciprocity_check(a, x, g.degree, parse_path(o.path))
                                  : cross_path_check(a, x, g.degree);
  } else if (identity == "hwz") {
    const auto a = parse_long_list(o.a.empty() ? "1,1,1" : o.a);
    const auto x = shifts_or_zero(o.x, a.size());
    r = hwz_case_check(a, x, g.degree);
  } else if (identity == "four-var") {
    std::string a_text = o.a;
    std::string x_text = o.x;
    if (!o.case_name.empty()) {
      const auto it = four_var_cases().find(o.case_name);
      if (it == four_var_cases().end()) throw UsageError("--case must be i, ii, iii or iv");
      if (!a_text.empty() || !x_text.empty()) throw UsageError("--case excludes --a/--x");
      a_text = it->second.a;
      x_text = it->second.x;
    }
    if (a_text.empty()) throw UsageError("verify four-var needs --case or --a/--x");
    const auto a = parse_long_list(a_text);
    r = four_var_case_residual(a, shifts_or_zero(x_text, a.size()), g.degree);
  } else if (identity == "sign-lemmas") {
    return verify_sign_lemmas_cmd(o, emit);
  } else if (identity == "pk-classical") {
    r = pk_classical_check(require(o.a, "--a"), require(o.b, "--b"), require(o.m, "--m"));
  } else if (identity == "pk-general") {
    return verify_pk_general(o, emit);
  } else {
    throw UsageError("unknown identity " + identity);
  }
  emit.report(r);
  return exit_for(r);
}

// ---- sweep -----------------------------------------------------------------

int sweep(const Args& o, const Globals& g, Emitter& emit) {
  SweepConfig config;
  const long n = require(o.n.empty() ? "3" : o.n, "--n");
  if (n < 2) throw UsageError("--n must be >= 2");
  config.n = static_cast<std::size_t>(n);
  config.trials = o.trials;
  config.seed = g.seed;
  config.amax = o.amax;
  config.xden = o.xden;
  config.degree = g.degree;
  config.parallelism = g.parallel;
  config.validate();

  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_sweep(config);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed();
    if (emit.json()) {
      emit.report(r);
    } else {
      emit.stream() << "trial " << r.inputs.front().second << ": " << to_string(r.status)
                    << "  a=" << r.inputs[1].second << " x=" << r.inputs[2].second << '\n';
      for (const auto& w : r.witnesses) emit.stream() << "  witness: " << w << '\n';
    }
  }
  VerificationReport summary;
  summary.identity = "sweep";
  summary.add_input("n", std::to_string(config.n));
  summary.add_input("trials", std::to_string(config.trials));
  summary.add_input("seed", std::to_string(config.seed));
  summary.add_input("amax", std::to_string(config.amax));
  summary.add_input("xden", std::to_string(config.xden));
  summary.add_input("degree", std::to_string(config.degree));
  summary.detail = std::to_string(passed) + "/" + std::to_string(reports.size()) + " pass";
  for (const auto& r : reports) {
    if (!r.passed()) summary.fail("trial " + r.inputs.front().second);
  }
  summary.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (emit.json()) emit.report(summary);
  else emit.stream() << "sweep: " << summary.detail << '\n';
  return exit_for(summary);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation and verification of Dedekind-type sums", "dedekind"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  Args o;
  app.add_flag("--json", g.json, "One JSON record per line");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--degree", g.degree, "Truncation degree D")->check(CLI::Range(0, 64));
  app.add_option("--parallel", g.parallel, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_option("--out", g.out_path, "Write output to this file");

  auto* compute = app.add_subcommand("compute", "Evaluate a sum");
  compute->require_subcommand(1);
  auto* c_classical = compute->add_subcommand("classical", "Dedekind sum s(a,b)");
  c_classical->add_option("--a", o.a)->required();
  c_classical->add_option("--b", o.b)->required();
  c_classical->add_option("--method", o.method, "fast | brute | cotangent");
  auto* c_legacy = compute->add_subcommand("legacy", "A historical generalization");
  c_legacy->add_option("--kind", o.kind)->required();
  const std::pair<const char*, std::string*> legacy_opts[] = {
      {"--a", &o.a}, {"--b", &o.b}, {"--c", &o.c}, {"--m", &o.m},
      {"--n", &o.n}, {"--x", &o.x}, {"--y", &o.y}, {"--z", &o.z}};
  for (const auto& [flag, target] : legacy_opts) c_legacy->add_option(flag, *target);
  auto* c_bd = compute->add_subcommand("bd", "Bernoulli-Dedekind sum");
  c_bd->add_option("--a", o.a, "Moduli, comma-separated")->required();
  c_bd->add_option("--x", o.x, "Shifts p/q, comma-separated (default 0)");
  c_bd->add_option("--k", o.k, "Distinguished index, 1-based")->required();
  c_bd->add_option("--p", o.p, "Bernoulli indices for i != k")->required();
  auto* c_omega = compute->add_subcommand("omega", "Normalized generating function");
  c_omega->add_option("--a", o.a)->required();
  c_omega->add_option("--x", o.x);
  c_omega->add_option("--k", o.k, "1-based")->required();
  c_omega->add_option("--path", o.path, "h-tuples | p-vectors");

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity");
  verify_cmd->require_subcommand(1);
  const char* identities[] = {"dedekind-reciprocity", "raabe", "reciprocity", "hwz", "four-var",
                              "sign-lemmas", "pk-classical", "pk-general", "cross-path"};
  std::vector<CLI::App*> verify_subs;
  for (const char* id : identities) {
    auto* s = verify_cmd->add_subcommand(id);
    s->add_option("--a", o.a);
    verify_subs.push_back(s);
    const std::string name = id;
    if (name == "dedekind-reciprocity" || name == "pk-classical") s->add_option("--b", o.b);
    if (name == "raabe" || name == "pk-classical" || name == "pk-general") s->add_option("--m", o.m);
    if (name == "raabe" || name == "reciprocity" || name == "hwz" || name == "four-var" ||
        name == "sign-lemmas" || name == "cross-path") {
      s->add_option("--x", o.x);
    }
    if (name == "reciprocity") s->add_option("--path", o.path);
    if (name == "four-var") s->add_option("--case", o.case_name, "i | ii | iii | iv");
    if (name == "sign-lemmas") {
      s->add_option("--r", o.r, "Residues, comma-separated");
      s->set_help_flag("--help", "Print this help message and exit");
      s->add_option("--h", o.h, "Residue indices h_j");
    }
    if (name == "pk-general") {
      s->add_option("--mult", o.mult, "Multipliers a_1..a_n");
      s->add_option("--p", o.p, "Bernoulli indices p_1..p_n");
      s->add_option("--variant", o.variant, "theorem | corollary");
    }
  }

  auto* sweep_cmd = app.add_subcommand("sweep", "Seeded randomized reciprocity checks");
  sweep_cmd->add_option("--n", o.n, "Number of moduli");
  sweep_cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--amax", o.amax, "Largest modulus");
  sweep_cmd->add_option("--xden", o.xden, "Largest shift denominator");

  auto* bench_cmd = app.add_subcommand("bench", "Time the classical evaluators");
  bench_cmd->add_option("--bits", o.bits, "Bit sizes, comma-separated");
  bench_cmd->add_option("--samples", o.samples)->check(CLI::Range(1, 100000));

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dedekind: " << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!g.out_path.empty()) {
    file = std::make_unique<std::ofstream>(g.out_path);
    if (!*file) {
      err << "dedekind: cannot open " << g.out_path << '\n';
      return kExitUsage;
    }
  }
  Emitter emit(file ? *file : out, g.json);

  try {
    if (compute->parsed()) {
      if (c_classical->parsed()) return compute_classical(o, emit);
      if (c_legacy->parsed()) return compute_legacy(o, emit);
      if (c_bd->parsed()) return compute_bd(o, emit);
      return compute_omega(o, g, emit);
    }
    if (verify_cmd->parsed()) {
      for (auto* s : verify_subs) {
        if (s->parsed()) return verify(s->get_name(), o, g, emit);
      }
    }
    if (sweep_cmd->parsed()) return sweep(o, g, emit);
    if (bench_cmd->parsed()) {
      BenchConfig config;
      config.bits = parse_int_list(o.bits);
      config.samples = o.samples;
      config.seed = g.seed;
      config.json = g.json;
      return run_bench(config, emit.stream());
    }
  } catch (const UsageError& e) {
    err << "dedekind: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "dedekind: invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "dedekind: precondition not met: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "dedekind: no command\n";
  return kExitUsage;
}

}  // namespace dedekind::cli
