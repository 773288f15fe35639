#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hwcls/cls.hpp"
#include "hwcls/errors.hpp"
#include "hwcls/function_spec.hpp"
#include "hwcls/levels.hpp"
#include "hwcls/parse.hpp"
#include "hwcls/tableaux.hpp"

namespace hwcls::cli {

namespace detail {

inline std::string join_values(const std::vector<ScalarValue>& vals) {
  std::string r;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i)
      r += ", ";
    r += to_string(vals[i]);
  }
  return r;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

/* `@file` arguments are replaced by the file's contents (trailing
   whitespace stripped), so long inputs can live in files. */
inline std::string expand_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@')
    return arg;
  std::ifstream in(arg.substr(1));
  if (!in)
    throw Error("cannot read file: " + arg.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.pop_back();
  return text;
}

inline void run_classify(const std::string& arg, std::ostream& out) {
  const FunctionSpec f = parse_function(expand_arg(arg));
  const bool integral = is_integral(f);
  out << "integral: " << yesno(integral) << "\n";
  out << "almost_integral: " << yesno(is_almost_integral(f)) << "\n";
  out << "locally_constant: " << yesno(is_locally_constant(f)) << "\n";
  out << "dominant: " << (integral ? yesno(is_dominant(f)) : "n/a") << "\n";
  out << "verdict: " << (annihilator_nonzero(f) ? "nonzero" : "zero") << "\n";
}

inline void run_rs(const std::string& arg, bool steps, std::ostream& out) {
  const std::vector<ScalarValue> vals = parse_values(expand_arg(arg));
  if (steps) {
    const std::vector<ScalarValue> g = f_plus(vals);
    out << "f+: " << join_values(g) << "\n";
    const auto seqs = class_split(g);
    for (std::size_t i = 0; i < seqs.size(); ++i)
      out << "seq" << (i + 1) << ": " << join_values(seqs[i]) << "\n";
  }
  const Partition p = modified_rs(vals);
  out << to_string(p) << " corank=" << corank(p) << " rank=" << rank(p) << "\n";
}

inline void run_cls_of(const std::string& arg, std::ostream& out) {
  out << to_string(cls_of_dominant(parse_function(expand_arg(arg)))) << "\n";
}

inline void run_duflo(const std::string& cls_arg, const std::string& order_arg,
                      std::ostream& out) {
  const ClsCanonical q = parse_cls(expand_arg(cls_arg));
  const BorelOrder o = parse_order(expand_arg(order_arg));
  out << to_string(duflo_function(q, o)) << "\n";
}

inline void run_bound(const std::string& arg, std::ostream& out) {
  const FunctionSpec f = parse_function(expand_arg(arg));
  const BoundData bd = bound_data(f);
  out << "nint=" << bd.nint << " wid=" << bd.wid << " gamma=" << bd.gamma
      << " cls=" << to_string(bound_cls(f)) << "\n";
}

inline void run_mul(const std::string& a, const std::string& b, std::ostream& out) {
  out << to_string(cls_mul(parse_cls(expand_arg(a)), parse_cls(expand_arg(b)))) << "\n";
}

inline void run_level(const std::string& arg, int n, long long cap, std::ostream& out) {
  out << to_string(cls_level(parse_cls(expand_arg(arg)), n, cap)) << "\n";
}

inline void run_coherence(const std::string& arg, int n, long long cap, std::ostream& out) {
  const CoherenceReport rep = coherence_check(parse_cls(expand_arg(arg)), n, cap);
  out << "coherent: " << yesno(rep.coherent) << "\n";
  out << "levels: n=" << n << " size=" << rep.high_size << ", n=" << (n - 1)
      << " size=" << rep.low_size << ", closure size=" << rep.closure_size << "\n";
  if (rep.exact)
    out << "mode: exact\n";
  else
    out << "mode: capped, soundness degree " << rep.soundness_degree
        << ", completeness degree " << rep.completeness_degree << "\n";
  for (const auto& w : rep.not_in_low)
    out << "branched weight missing at n-1: " << to_string(w) << "\n";
  for (const auto& w : rep.not_in_closure)
    out << "weight at n-1 never reached: " << to_string(w) << "\n";
}

/* Quick randomized sweeps of the core identities; exercised further by the
   test suite. */
inline void run_selftest(std::ostream& out) {
  std::mt19937_64 rng(20240901);
  const char* labels[] = {"", "a", "b"};
  std::uniform_int_distribution<int> len_dist(1, 10), label_dist(0, 2), off_dist(-4, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<ScalarValue> f;
    const int n = len_dist(rng);
    for (int i = 0; i < n; ++i)
      f.emplace_back(labels[label_dist(rng)], Rational(off_dist(rng)));
    const Partition p = modified_rs(f);
    if (corank(p) != lds_oracle(f))
      throw Error("selftest: corank disagrees with the subsequence oracle");
    if (modified_rs(class_rearrange(f)) != p)
      throw Error("selftest: rearrangement changed the partition");
    if (p.size() != n)
      throw Error("selftest: partition size mismatch");
  }
  const BorelOrder ideal = parse_order("omega; omega*");
  for (long long i = 1; i <= 3; ++i) {
    const ClsCanonical q = ClsCanonical::make(0, {{i, 2}}, 1, 0, {{i, 1}});
    if (cls_of_dominant(duflo_function(q, ideal)) != q)
      throw Error("selftest: round trip failed for " + to_string(q));
  }
  out << "selftest ok\n";
}

} // namespace detail

/* Dispatches one invocation. Returns 0 on success, 1 on a computational
   refusal, 2 on a parse or usage error. */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorial invariants of highest weight modules"};
  app.require_subcommand(1);

  std::string fn_arg, values_arg, cls_arg, cls_arg2, order_arg;
  bool steps = false;
  int rank_n = 3;
  long long cap = 6;

  auto* c_classify = app.add_subcommand("classify", "test the nonvanishing criterion");
  c_classify->add_option("function", fn_arg, "function spec")->required();

  auto* c_rs = app.add_subcommand("rs", "modified Robinson-Schensted partition");
  c_rs->add_option("values", values_arg, "comma-separated values")->required();
  c_rs->add_flag("--steps", steps, "print the shifted sequence and class split");

  auto* c_cls_of = app.add_subcommand("cls-of", "canonical c.l.s. of a dominant function");
  c_cls_of->add_option("function", fn_arg, "function spec")->required();

  auto* c_duflo = app.add_subcommand("duflo", "dominant function realizing a finite-type c.l.s.");
  c_duflo->add_option("cls", cls_arg, "c.l.s. expression")->required();
  c_duflo->add_option("--order", order_arg, "ideal order")->required();

  auto* c_bound = app.add_subcommand("bound", "annihilator bound of a function");
  c_bound->add_option("function", fn_arg, "function spec")->required();

  auto* c_mul = app.add_subcommand("mul", "product of two c.l.s.");
  c_mul->add_option("a", cls_arg, "left factor")->required();
  c_mul->add_option("b", cls_arg2, "right factor")->required();

  auto* c_level = app.add_subcommand("level", "level-n weight set of a c.l.s.");
  c_level->add_option("cls", cls_arg, "c.l.s. expression")->required();
  c_level->add_option("-n,--rank", rank_n, "rank")->required();
  c_level->add_option("--cap", cap, "degree cap for infinite factors");

  auto* c_coh = app.add_subcommand("coherence", "branching coherence between ranks n and n-1");
  c_coh->add_option("cls", cls_arg, "c.l.s. expression")->required();
  c_coh->add_option("-n,--rank", rank_n, "rank")->required();
  c_coh->add_option("--cap", cap, "degree cap for infinite factors");

  auto* c_self = app.add_subcommand("selftest", "randomized internal checks");
  c_self->group(""); // hidden

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed())
      detail::run_classify(fn_arg, out);
    else if (c_rs->parsed())
      detail::run_rs(values_arg, steps, out);
    else if (c_cls_of->parsed())
      detail::run_cls_of(fn_arg, out);
    else if (c_duflo->parsed())
      detail::run_duflo(cls_arg, order_arg, out);
    else if (c_bound->parsed())
      detail::run_bound(fn_arg, out);
    else if (c_mul->parsed())
      detail::run_mul(cls_arg, cls_arg2, out);
    else if (c_level->parsed())
      detail::run_level(cls_arg, rank_n, cap, out);
    else if (c_coh->parsed())
      detail::run_coherence(cls_arg, rank_n, cap, out);
    else if (c_self->parsed())
      detail::run_selftest(out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace hwcls::cli
