#include "ccsched/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ccsched/bench.hpp"
#include "ccsched/cclp.hpp"
#include "ccsched/io.hpp"
#include "ccsched/verify.hpp"

namespace ccs {

namespace {

struct Options {
  std::string alg, in, out, family, suite, dump_lp;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  bool strict = false;
  bool float_mode = false;
};

Instance load(const Options& opt, std::ostream& err) {
  std::vector<std::string> warnings;
  Instance inst = read_instance(opt.in, &warnings, ParseOptions{opt.strict});
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return inst;
}

void print_certificate(std::ostream& out, const RatioCertificate& c) {
  out << "algorithm: " << c.algorithm << '\n'
      << "class: " << c.instance_class << '\n'
      << "objective: " << format_rational(c.objective) << '\n'
      << "lower_bound: " << format_rational(c.lower_bound) << " (" << c.lower_bound_source << ")\n"
      << "ratio: " << format_significant(c.observed) << '\n'
      << "guaranteed: " << (c.guaranteed ? format_significant(*c.guaranteed) : "none") << '\n'
      << "status: " << (c.passes() ? "pass" : "fail") << '\n';
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  Instance inst = load(opt, err);
  auto run = run_algorithm(inst, parse_algorithm(opt.alg), certified_lower_bound(inst));
  if (!inst.name.empty()) out << "instance: " << inst.name << '\n';
  print_certificate(out, run.certificate);
  if (!opt.out.empty()) {
    std::ostringstream csv;
    write_schedule_csv(csv, run.schedule);
    write_file(opt.out, csv.str());
  }
  return kOk;
}

int cmd_lp(const Options& opt, std::ostream& out, std::ostream& err) {
  Instance inst = load(opt, err);
  std::vector<Cut> cuts;
  if (opt.float_mode) {
    auto lp = solve_lp1<double>(inst);
    out << "value: " << format_significant(lp.objective) << '\n';
    cuts = lp.cuts;
    out << "cuts: " << lp.cuts.size() << "\nrounds: " << lp.rounds << '\n';
  } else {
    auto lp = solve_lp1<Rational>(inst);
    out << "value: " << format_rational(lp.objective) << '\n';
    cuts = lp.cuts;
    out << "cuts: " << lp.cuts.size() << "\nrounds: " << lp.rounds << '\n';
  }
  if (!opt.dump_lp.empty()) {
    std::ostringstream text;
    write_lp(text, inst, cuts);
    write_file(opt.dump_lp, text.str());
  }
  return kOk;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  std::map<std::string, std::string> params;
  for (const auto& kv : opt.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw BadParams("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const std::string text = emit(generate(opt.family, params, opt.seed));
  if (opt.out.empty()) out << text;
  else write_file(opt.out, text);
  return kOk;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const auto instances = load_suite(opt.suite);
  const auto records = run_bench(instances, opt.threads);
  std::ostringstream csv;
  write_bench_csv(csv, records);
  if (opt.out.empty()) out << csv.str();
  else write_file(opt.out, csv.str());

  // Summary per algorithm: runs, passes, mean ratio.
  std::map<std::string, std::tuple<std::size_t, std::size_t, double>> summary;
  bool broken = false;
  for (const auto& rec : records)
    for (const auto& o : rec.outcomes) {
      if (!o.certificate) continue;
      auto& [runs, passes, sum] = summary[o.certificate->algorithm];
      ++runs;
      passes += o.certificate->passes();
      sum += to_double(o.certificate->observed);
      broken = broken || !o.certificate->consistent();
    }
  if (!opt.out.empty()) {
    out << "instances: " << records.size() << '\n';
    for (const auto& [alg, s] : summary) {
      const auto& [runs, passes, sum] = s;
      out << alg << ": " << passes << "/" << runs << " pass, mean ratio "
          << format_significant(runs ? sum / static_cast<double>(runs) : 0.0, 6) << '\n';
    }
  }
  if (broken) throw InfeasibleSchedule("an observed ratio fell below 1; lower bound or schedule is broken");
  return kOk;
}

int cmd_certify(const Options& opt, std::ostream& out, std::ostream& err) {
  Instance inst = load(opt, err);
  auto cert = certify(inst, parse_algorithm(opt.alg));
  write_certificate_header(out);
  write_certificate_row(out, inst.name, cert);
  return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out, std::ostream& err) {
  auto res = read_document(opt.in, ParseOptions{opt.strict});
  for (const auto& w : res.warnings) err << "warning: " << w << '\n';
  const auto* li = std::get_if<LatenessInstance>(&res.document);
  if (!li) throw ParseError(opt.in + ": expected a lateness instance");
  const std::string text = emit(reduce_lateness(*li));
  if (opt.out.empty()) out << text;
  else write_file(opt.out, text);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrent cluster scheduling: solvers, bounds and benchmarks", "ccsched"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> algorithms{"cclp", "cctspt", "ccatspt", "swag"};

  auto* solve = app.add_subcommand("solve", "Schedule an instance and report objective and ratio");
  solve->add_option("--alg", opt.alg, "Algorithm")->required()->check(CLI::IsMember(algorithms));
  solve->add_option("--in", opt.in, "Instance file")->required();
  solve->add_option("--out", opt.out, "Schedule CSV output");
  solve->add_flag("--strict", opt.strict, "Reject unsorted input instead of normalizing");

  auto* lp = app.add_subcommand("lp", "Solve the LP relaxation");
  lp->add_option("--in", opt.in, "Instance file")->required();
  lp->add_flag("--float", opt.float_mode, "Solve in double precision");
  lp->add_option("--dump-lp", opt.dump_lp, "Write the final LP in CPLEX LP format");
  lp->add_flag("--strict", opt.strict, "Reject unsorted input instead of normalizing");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", opt.family, "random-cc, random-pd, fps, swag-adversarial or lateness")->required();
  gen->add_option("--param", opt.params, "key=value (repeatable), ranges as LO..HI");
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--out", opt.out, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Run every algorithm with certificates over a suite");
  bench->add_option("--suite", opt.suite, "Directory of instance files or family:count:seed[:k=v,...]")->required();
  bench->add_option("--out", opt.out, "CSV output (default stdout)");
  bench->add_option("--jobs", opt.threads, "Instances run concurrently")->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "Print a ratio certificate as CSV");
  cert->add_option("--alg", opt.alg, "Algorithm")->required()->check(CLI::IsMember(algorithms));
  cert->add_option("--in", opt.in, "Instance file")->required();
  cert->add_flag("--strict", opt.strict, "Reject unsorted input instead of normalizing");

  auto* reduce = app.add_subcommand("reduce", "Convert a lateness instance to a cc instance");
  reduce->add_option("--in", opt.in, "Lateness instance file")->required();
  reduce->add_option("--out", opt.out, "Output file (default stdout)");
  reduce->add_flag("--strict", opt.strict, "Reject invalid input instead of normalizing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt, out, err);
    if (lp->parsed()) return cmd_lp(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out);
    if (bench->parsed()) return cmd_bench(opt, out);
    if (cert->parsed()) return cmd_certify(opt, out, err);
    if (reduce->parsed()) return cmd_reduce(opt, out, err);
  } catch (const BadParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedInstance& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kUsage;
}

}  // namespace ccs
