#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccsched/bench.hpp"
#include "ccsched/cli.hpp"
#include "ccsched/io.hpp"
#include "ccsched/openshop.hpp"
#include "ccsched/swag.hpp"
#include "support.hpp"

using namespace ccs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "ccsched_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("minimal document") {
  auto r = parse_document(R"({"clusters": [[1]], "jobs": [{"subjobs": [{"tasks": [5]}]}]})");
  auto& in = std::get<Instance>(r.document);
  CHECK(in.num_jobs() == 1);
  CHECK(in.jobs[0].weight == 1);
  CHECK(in.subjob(0, 0).release == 0);
  CHECK(in.subjob(0, 0).tasks == std::vector<Rational>{5});
  CHECK(r.warnings.empty());
}

TEST_CASE("emit then parse is the identity") {
  Rng rng(127);
  for (int k = 0; k < 100; ++k) {
    auto in = support::random_small(rng, 6, 3, true, true);
    in.jobs[0].weight = Rational(7, 3);
    auto back = std::get<Instance>(parse_document(emit(in)).document);
    CHECK(back == in);
  }
  LatenessInstance li{"late", {2, 3}, {0, 4}, {1, Rational(1, 2)}, 2};
  CHECK(std::get<LatenessInstance>(parse_document(emit(li)).document) == li);
}

TEST_CASE("unsorted input is normalized or rejected") {
  const std::string text = R"({"clusters": [[1, 2]], "jobs": [{"subjobs": [{"tasks": ["1", "3"]}]}]})";
  auto loose = parse_document(text);
  CHECK(loose.warnings.size() >= 1);
  auto& in = std::get<Instance>(loose.document);
  CHECK(in.clusters[0].speeds == std::vector<Rational>{2, 1});
  CHECK(in.subjob(0, 0).tasks == std::vector<Rational>{3, 1});
  CHECK_THROWS_AS(parse_document(text, {true}), ValidationError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"clusters": [[1]], "jobs": [{"subjobs": [{"tasks": ["x"]}]}]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"kind": "other"})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"clusters": [[0]], "jobs": []})"), ValidationError);
  CHECK_THROWS_AS(read_instance("/nonexistent/file.json"), InputError);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("generators are deterministic") {
  std::map<std::string, std::string> params{{"n", "5"}};
  CHECK(emit(generate("random-cc", params, 9)) == emit(generate("random-cc", params, 9)));
  CHECK(emit(generate("random-cc", params, 9)) != emit(generate("random-cc", params, 10)));
  auto adv = std::get<Instance>(generate("swag-adversarial", {{"m", "4"}, {"L", "2"}, {"eps", "1/5"}}, 1));
  auto direct = gen_adversarial(4, 2, 1, Rational(1, 5));
  CHECK(adv.jobs == direct.jobs);
  CHECK(adv.clusters == direct.clusters);
  auto pd = std::get<Instance>(generate("random-pd", {{"n", "4"}, {"m", "3"}}, 2));
  CHECK(is_pd(pd));
  CHECK(pd.num_jobs() == 4);
  CHECK(pd.num_clusters() == 3);
  CHECK_THROWS_AS(generate("random-cc", {{"bogus", "1"}}, 1), BadParams);
  CHECK_THROWS_AS(generate("nope", {}, 1), BadParams);
}

TEST_CASE("cli lp and solve") {
  auto path = scratch("single.json");
  write_file(path.string(), R"({"clusters": [[1]], "jobs": [{"subjobs": [{"tasks": [5]}]}]})");
  auto r = cli({"lp", "--in", path.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.find("value: 5") != std::string::npos);

  auto pdpath = scratch("pd.json");
  auto pd = std::get<Instance>(generate("random-pd", {{"n", "6"}, {"m", "3"}}, 4));
  write_file(pdpath.string(), emit(pd));
  auto out = scratch("pd.csv");
  r = cli({"solve", "--alg", "cctspt", "--in", pdpath.string(), "--out", out.string()});
  CHECK(r.code == kOk);
  const auto expected = pd_objective(as_pd(pd), mussq(as_pd(pd)));
  CHECK(r.out.find("objective: " + format_rational(expected)) != std::string::npos);
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "job,cluster,machine,task,start,end");
}

TEST_CASE("cli bench") {
  auto out = scratch("bench.csv");
  auto r = cli({"bench", "--suite", "random-cc:20:3", "--out", out.string()});
  REQUIRE(r.code == kOk);
  std::ifstream csv(out);
  std::string line;
  std::getline(csv, line);
  CHECK(line.rfind("instance,class,lp1", 0) == 0);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.find("fail") == std::string::npos);
  }
  CHECK(rows == 20);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).code == kUsage);
  CHECK(cli({"solve", "--alg", "greedy", "--in", "x.json"}).code == kUsage);
  CHECK(cli({"solve", "--alg", "cclp", "--in", "/nonexistent.json"}).code == kInputError);
  CHECK(cli({"gen", "--family", "random-cc", "--param", "bogus=1"}).code == kUsage);
  auto bad = scratch("bad.json");
  write_file(bad.string(), "{not json");
  CHECK(cli({"lp", "--in", bad.string()}).code == kInputError);

  auto released = scratch("released.json");
  write_file(released.string(),
             R"({"clusters": [[1]], "jobs": [{"subjobs": [{"tasks": [1], "release": 2}]}]})");
  CHECK(cli({"solve", "--alg", "cctspt", "--in", released.string()}).code == kInputError);
  CHECK(cli({"solve", "--alg", "cclp", "--in", released.string()}).code == kOk);
}

TEST_CASE("cli reduce turns a lateness file into a cluster instance") {
  auto in = scratch("late.json");
  auto out = scratch("late_cc.json");
  write_file(in.string(), R"({"kind": "lateness", "machines": 1, "jobs": [{"p": 2, "d": 3, "w": 1}]})");
  CHECK(cli({"reduce", "--in", in.string(), "--out", out.string()}).code == kOk);
  auto cc = read_instance(out.string());
  CHECK(cc.num_clusters() == 2);
}
