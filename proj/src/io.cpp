#include "ccsched/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccs {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path.empty() ? message : path + ": " + message);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

Rational number(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return parse_rational(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number");
}

Rational number_or(const json& obj, const std::string& key, const Rational& fallback, const std::string& path) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : number(*it, path + "." + key);
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::vector<Rational> numbers(const json& v, const std::string& path) {
  std::vector<Rational> out;
  std::size_t k = 0;
  for (const auto& item : array(v, path)) out.push_back(number(item, path + "[" + std::to_string(k++) + "]"));
  return out;
}

std::string name_of(const json& doc) {
  auto it = doc.find("name");
  if (it == doc.end()) return "";
  if (!it->is_string()) fail("name", "expected a string");
  return it->get<std::string>();
}

[[noreturn]] void reject(const std::vector<Violation>& violations) {
  std::vector<std::string> text;
  for (const auto& v : violations) text.push_back(v.to_string());
  throw ValidationError(std::move(text));
}

Instance parse_cc(const json& doc, const ParseOptions& options, std::vector<std::string>& warnings) {
  Instance out;
  out.name = name_of(doc);
  std::size_t i = 0;
  for (const auto& c : array(member(doc, "clusters", ""), "clusters")) {
    out.clusters.push_back(Cluster{numbers(c, "clusters[" + std::to_string(i) + "]")});
    ++i;
  }
  std::size_t j = 0;
  for (const auto& jd : array(member(doc, "jobs", ""), "jobs")) {
    const std::string path = "jobs[" + std::to_string(j++) + "]";
    if (!jd.is_object()) fail(path, "expected an object");
    Job job;
    job.weight = number_or(jd, "weight", Rational(1), path);
    std::size_t k = 0;
    for (const auto& sd : array(member(jd, "subjobs", path), path + ".subjobs")) {
      const std::string spath = path + ".subjobs[" + std::to_string(k++) + "]";
      if (!sd.is_object()) fail(spath, "expected an object");
      Subjob s;
      if (auto it = sd.find("tasks"); it != sd.end()) s.tasks = numbers(*it, spath + ".tasks");
      s.release = number_or(sd, "release", Rational(0), spath);
      job.subjobs.push_back(std::move(s));
    }
    out.jobs.push_back(std::move(job));
  }

  if (!options.strict) {
    Instance sorted = normalize(out);
    if (!(sorted == out)) {
      warnings.push_back("input normalized: speeds and tasks sorted non-increasing, empty subjob releases cleared");
      out = std::move(sorted);
    }
  }
  if (auto violations = validate(out); !violations.empty()) reject(violations);
  return out;
}

LatenessInstance parse_lateness(const json& doc) {
  LatenessInstance out;
  out.name = name_of(doc);
  const json& m = member(doc, "machines", "");
  if (!m.is_number_unsigned() && !(m.is_number_integer() && m.get<std::int64_t>() >= 0))
    fail("machines", "expected a nonnegative integer");
  out.machines = m.get<std::size_t>();
  std::size_t j = 0;
  for (const auto& jd : array(member(doc, "jobs", ""), "jobs")) {
    const std::string path = "jobs[" + std::to_string(j++) + "]";
    if (!jd.is_object()) fail(path, "expected an object");
    out.processing.push_back(number(member(jd, "p", path), path + ".p"));
    out.deadline.push_back(number(member(jd, "d", path), path + ".d"));
    out.weight.push_back(number_or(jd, "w", Rational(1), path));
  }
  if (auto violations = validate(out); !violations.empty()) reject(violations);
  return out;
}

json text(const Rational& q) { return format_rational(q); }

json texts(const std::vector<Rational>& qs) {
  json out = json::array();
  for (const auto& q : qs) out.push_back(text(q));
  return out;
}

}  // namespace

ParseResult parse_document(std::string_view input, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "document must be a JSON object");
  if (auto v = doc.find("version"); v != doc.end() && !(v->is_number_integer() && v->get<int>() == 1))
    fail("version", "unsupported version (expected 1)");
  std::string kind = "cc";
  if (auto k = doc.find("kind"); k != doc.end()) {
    if (!k->is_string()) fail("kind", "expected a string");
    kind = k->get<std::string>();
  }
  ParseResult out;
  if (kind == "cc") out.document = parse_cc(doc, options, out.warnings);
  else if (kind == "lateness") out.document = parse_lateness(doc);
  else fail("kind", "unknown kind '" + kind + "' (expected cc or lateness)");
  return out;
}

ParseResult read_document(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), options);
}

Instance read_instance(const std::string& path, std::vector<std::string>* warnings, const ParseOptions& options) {
  auto res = read_document(path, options);
  if (!std::holds_alternative<Instance>(res.document))
    throw ParseError(path + ": expected a cc instance, found a lateness instance");
  if (warnings) warnings->insert(warnings->end(), res.warnings.begin(), res.warnings.end());
  return std::get<Instance>(std::move(res.document));
}

std::string emit(const Instance& instance) {
  json doc;
  doc["version"] = 1;
  doc["kind"] = "cc";
  doc["name"] = instance.name;
  doc["clusters"] = json::array();
  for (const auto& c : instance.clusters) doc["clusters"].push_back(texts(c.speeds));
  doc["jobs"] = json::array();
  for (const auto& job : instance.jobs) {
    json jd;
    jd["weight"] = text(job.weight);
    jd["subjobs"] = json::array();
    for (const auto& s : job.subjobs) jd["subjobs"].push_back({{"tasks", texts(s.tasks)}, {"release", text(s.release)}});
    doc["jobs"].push_back(std::move(jd));
  }
  return doc.dump(2) + "\n";
}

std::string emit(const LatenessInstance& instance) {
  json doc;
  doc["version"] = 1;
  doc["kind"] = "lateness";
  doc["name"] = instance.name;
  doc["machines"] = instance.machines;
  doc["jobs"] = json::array();
  for (std::size_t j = 0; j < instance.num_jobs(); ++j)
    doc["jobs"].push_back(
        {{"p", text(instance.processing[j])}, {"d", text(instance.deadline[j])}, {"w", text(instance.weight[j])}});
  return doc.dump(2) + "\n";
}

std::string emit(const Document& document) {
  return std::visit([](const auto& x) { return emit(x); }, document);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
  out << "job,cluster,machine,task,start,end\n";
  for (const auto& a : schedule.assignments)
    out << a.job << ',' << a.cluster << ',' << a.machine << ',' << a.task << ',' << format_rational(a.start) << ','
        << format_rational(a.end) << '\n';
}

void write_certificate_header(std::ostream& out) {
  out << "instance,algorithm,class,objective,lower_bound,lower_bound_source,guaranteed,observed,pass\n";
}

void write_certificate_row(std::ostream& out, const std::string& instance, const RatioCertificate& cert) {
  out << csv_field(instance) << ',' << cert.algorithm << ',' << csv_field(cert.instance_class) << ','
      << format_significant(cert.objective) << ',' << format_significant(cert.lower_bound) << ','
      << cert.lower_bound_source << ',' << (cert.guaranteed ? format_significant(*cert.guaranteed) : "inf") << ','
      << format_significant(cert.observed) << ',' << (cert.passes() ? "pass" : "fail") << '\n';
}

}  // namespace ccs
