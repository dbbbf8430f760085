#include "ccsched/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include "ccsched/cclp.hpp"
#include "ccsched/io.hpp"

namespace ccs {

namespace {

constexpr Algorithm kAlgorithms[] = {Algorithm::CcLp, Algorithm::CcTspt, Algorithm::CcAtspt, Algorithm::Swag};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Instance as_cc(Document doc) {
  if (auto* li = std::get_if<LatenessInstance>(&doc)) return reduce_lateness(*li);
  return std::get<Instance>(std::move(doc));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

}  // namespace

BenchRecord bench_instance(const Instance& instance) {
  BenchRecord rec;
  rec.instance = instance.name;
  rec.instance_class = to_string(classify(instance));
  auto start = std::chrono::steady_clock::now();
  LowerBound bound = certified_lower_bound(instance);
  rec.lp_seconds = seconds_since(start);
  rec.lp1 = bound.lp.objective;
  rec.lower_bound = bound.value;
  rec.lower_bound_source = bound.source;
  for (Algorithm alg : kAlgorithms) {
    AlgorithmOutcome outcome;
    outcome.algorithm = alg;
    start = std::chrono::steady_clock::now();
    try {
      outcome.certificate = run_algorithm(instance, alg, bound).certificate;
    } catch (const ReleaseTimesUnsupported&) {
      outcome.skipped = "releases";
    }
    outcome.seconds = seconds_since(start);
    rec.outcomes.push_back(std::move(outcome));
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances, std::size_t threads) {
  std::vector<BenchRecord> records(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      try {
        records[k] = bench_instance(instances[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(instances.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance,class,lp1,lower_bound,lower_bound_source,lp_seconds";
  for (Algorithm alg : kAlgorithms) {
    const std::string a = to_string(alg);
    out << ',' << a << "_objective," << a << "_ratio," << a << "_guaranteed," << a << "_status," << a << "_seconds";
  }
  out << '\n';
  for (const auto& rec : records) {
    out << csv_field(rec.instance) << ',' << csv_field(rec.instance_class) << ',' << format_significant(rec.lp1) << ','
        << format_significant(rec.lower_bound) << ',' << rec.lower_bound_source << ','
        << format_significant(rec.lp_seconds, 6);
    for (const auto& o : rec.outcomes) {
      if (!o.certificate) {
        out << ",,,," << "skipped:" << o.skipped << ',' << format_significant(o.seconds, 6);
        continue;
      }
      const auto& c = *o.certificate;
      out << ',' << format_significant(c.objective) << ',' << format_significant(c.observed) << ','
          << (c.guaranteed ? format_significant(*c.guaranteed) : "inf") << ',' << (c.passes() ? "pass" : "fail")
          << ',' << format_significant(o.seconds, 6);
    }
    out << '\n';
  }
}

std::vector<Instance> load_suite(const std::string& suite) {
  namespace fs = std::filesystem;
  std::vector<Instance> out;
  if (fs::is_directory(suite)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(suite))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Instance inst = as_cc(read_document(f.string()).document);
      if (inst.name.empty()) inst.name = f.stem().string();
      out.push_back(std::move(inst));
    }
    return out;
  }
  const auto parts = split(suite, ':');
  if (parts.size() < 3 || parts.size() > 4)
    throw BadParams("suite '" + suite + "' is neither a directory nor family:count:seed[:key=value,...]");
  std::size_t count = 0;
  std::uint64_t seed = 0;
  try {
    count = std::stoull(parts[1]);
    seed = std::stoull(parts[2]);
  } catch (const std::exception&) {
    throw BadParams("suite '" + suite + "': count and seed must be integers");
  }
  std::map<std::string, std::string> params;
  if (parts.size() == 4)
    for (const auto& kv : split(parts[3], ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw BadParams("suite parameter '" + kv + "' is not key=value");
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  for (std::size_t k = 0; k < count; ++k) out.push_back(as_cc(generate(parts[0], params, seed + k)));
  return out;
}

}  // namespace ccs
