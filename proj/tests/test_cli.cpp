#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "varseq/cli.hpp"

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"varseq"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      varseq::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / "varseq-cli-tests") {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

const std::string kExampleFile =
    "# the worked instance\n"
    "1\n2\n3\n4\n5\n6\n7\n8\n"
    "order: 1,6,2,3,4,8,7,5\n";

}  // namespace

TEST_CASE("evaluate prints the objective value") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"evaluate", path});
  CHECK(result.code == 0);
  CHECK(result.out.find("f = 131.5") != std::string::npos);
  CHECK(result.out.find("partial sums: 1 7 9 12 16 24 31 36") != std::string::npos);
  CHECK(result.out.find("exact: f = 8416/64") != std::string::npos);
}

TEST_CASE("evaluate --json carries the exact fraction") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"evaluate", path, "--json"});
  CHECK(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["command"] == "evaluate");
  CHECK(doc["variance"] == 131.5);
  CHECK(doc["exact"]["numerator"] == 8416);
  CHECK(doc["exact"]["denominator"] == 64);
  CHECK(doc["order"] == nlohmann::json::parse("[1,6,2,3,4,8,7,5]"));
}

TEST_CASE("evaluate honors a --seq override") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"evaluate", path, "--seq", "1,6,7,8,4,3,2,5"});
  CHECK(result.code == 0);
  CHECK(result.out.find("f = 132.4375") != std::string::npos);
}

TEST_CASE("transform reports the interchanges and the gain") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"transform", path, "--kind", "sum-n2"});
  CHECK(result.code == 0);
  CHECK(result.out.find("(3,7) (4,6)") != std::string::npos);
  CHECK(result.out.find("Δf = 0.9375") != std::string::npos);
  CHECK(result.out.find("result: 1 6 7 8 4 3 2 5") != std::string::npos);
}

TEST_CASE("transform dual keeps f and reports a no-gain trace") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"transform", path, "--kind", "dual", "--json"});
  CHECK(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["f_before"] == 131.5);
  CHECK(doc["f_after"] == 131.5);
  CHECK(doc["result"]["values"] == nlohmann::json::parse("[1.0,5.0,7.0,8.0,4.0,3.0,2.0,6.0]"));
}

TEST_CASE("optimal output round-trips through evaluate") {
  TempDir dir;
  const std::string path = dir.file("five.txt", "5\n4\n3\n2\n1\n");
  const CliResult optimal = run({"optimal", path, "--json"});
  CHECK(optimal.code == 0);
  const auto doc = nlohmann::json::parse(optimal.out);
  CHECK(doc["c_star"]["values"] == nlohmann::json::parse("[1.0,3.0,5.0,4.0,2.0]"));
  CHECK(doc["c_star_dual"]["values"] == nlohmann::json::parse("[1.0,2.0,4.0,5.0,3.0]"));

  // Feed the reported order back in as an order spec.
  std::string fed_back = "1\n2\n3\n4\n5\norder: ";
  for (std::size_t k = 0; k < doc["c_star"]["order"].size(); ++k) {
    if (k > 0) fed_back += ",";
    fed_back += std::to_string(doc["c_star"]["order"][k].get<int>());
  }
  fed_back += "\n";
  const std::string round_trip = dir.file("roundtrip.txt", fed_back);
  const CliResult evaluated = run({"evaluate", round_trip, "--json"});
  CHECK(evaluated.code == 0);
  const auto doc2 = nlohmann::json::parse(evaluated.out);
  CHECK(doc2["variance"] == doc["variance"]);
  CHECK(doc2["exact"] == doc["exact"]);
}

TEST_CASE("search from the worked instance starts with the sum-n2 step") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"search", path, "--strategy", "transforms"});
  CHECK(result.code == 0);
  CHECK(result.out.find("step 1: sum-n2 (3,7) (4,6)") != std::string::npos);
  CHECK(result.out.find("converged: yes") != std::string::npos);
}

TEST_CASE("seeded searches are reproducible") {
  TempDir dir;
  const std::string path = dir.file("plain.txt", "1\n2\n3\n4\n5\n6\n7\n");
  const CliResult first = run({"search", path, "--strategy", "best", "--seed", "42", "--json"});
  const CliResult second = run({"search", path, "--strategy", "best", "--seed", "42", "--json"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("oracle lists all optima deterministically") {
  TempDir dir;
  const std::string path = dir.file("five.txt", "1\n2\n3\n4\n5\n");
  const CliResult result = run({"oracle", path, "--objective", "max", "--json"});
  CHECK(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["explored"] == 120);
  CHECK(doc["optima"].size() == 2);
  CHECK(doc["optima"][0]["order"] == nlohmann::json::parse("[1,2,4,5,3]"));
  CHECK(doc["optima"][1]["order"] == nlohmann::json::parse("[1,3,5,4,2]"));
  CHECK(doc["best_exact"]["numerator"] == 696);

  const CliResult again = run({"oracle", path, "--objective", "max", "--json"});
  CHECK(again.out == result.out);

  const CliResult pinned =
      run({"oracle", path, "--objective", "max", "--pin-first", "--json"});
  const auto pinned_doc = nlohmann::json::parse(pinned.out);
  CHECK(pinned_doc["explored"] == 24);
  CHECK(pinned_doc["optima"] == doc["optima"]);
}

TEST_CASE("thread settings never change the report bytes") {
  TempDir dir;
  std::string content;
  for (int k = 1; k <= 9; ++k) content += std::to_string(k) + "\n";
  const std::string path = dir.file("nine.txt", content);
  const CliResult serial =
      run({"oracle", path, "--objective", "max", "--threads", "1", "--json"});
  const CliResult parallel =
      run({"oracle", path, "--objective", "max", "--threads", "4", "--json"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);

  setenv("VARSEQ_THREADS", "3", 1);
  const CliResult from_env = run({"oracle", path, "--objective", "max", "--json"});
  unsetenv("VARSEQ_THREADS");
  CHECK(from_env.out == serial.out);
}

TEST_CASE("oracle refuses oversized instances with exit code 2") {
  TempDir dir;
  std::string content;
  for (int k = 1; k <= 10; ++k) content += std::to_string(k) + "\n";
  const std::string path = dir.file("ten.txt", content);
  const CliResult result = run({"oracle", path, "--objective", "max"});
  CHECK(result.code == 2);
  CHECK(result.err.find("exceeds the limit") != std::string::npos);

  const CliResult raised =
      run({"oracle", path, "--objective", "max", "--pin-first", "--limit", "10"});
  CHECK(raised.code == 0);
}

TEST_CASE("ctv-screen keeps the smaller-variance worked candidate") {
  TempDir dir;
  const std::string path = dir.file("nine.txt", "1\n2\n3\n4\n5\n6\n7\n8\n9\n");
  const std::string candidates = dir.file("candidates.txt",
                                          "9,8,6,4,2,1,3,5,7\n"
                                          "order: 9,8,5,3,2,1,4,6,7\n");
  const CliResult result = run({"ctv-screen", path, "--candidates", candidates, "--json"});
  CHECK(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["candidates"].size() == 2);
  REQUIRE(doc["surviving"].size() == 1);
  CHECK(doc["surviving"][0]["order"] == nlohmann::json::parse("[9,8,5,3,2,1,4,6,7]"));
}

TEST_CASE("verify passes on the worked instance") {
  TempDir dir;
  const std::string path = dir.file("example1.txt", kExampleFile);
  const CliResult result = run({"verify", path});
  CHECK(result.code == 0);
  CHECK(result.out.find("all properties pass") != std::string::npos);
  CHECK(result.out.find("FAIL") == std::string::npos);
}

TEST_CASE("parse errors carry the offending line and exit 1") {
  TempDir dir;
  SUBCASE("missing file") {
    const CliResult result = run({"evaluate", "/nonexistent/nowhere.txt"});
    CHECK(result.code == 1);
    CHECK(result.err.find("cannot open") != std::string::npos);
  }
  SUBCASE("bad number") {
    const std::string path = dir.file("bad.txt", "1\ntwo\n3\n");
    const CliResult result = run({"evaluate", path});
    CHECK(result.code == 1);
    CHECK(result.err.find(":2: ") != std::string::npos);
    CHECK(result.err.find("'two' is not a number") != std::string::npos);
  }
  SUBCASE("non-positive value") {
    const std::string path = dir.file("neg.txt", "1\n-2\n3\n");
    const CliResult result = run({"evaluate", path});
    CHECK(result.code == 1);
    CHECK(result.err.find(":2: ") != std::string::npos);
    CHECK(result.err.find("positive") != std::string::npos);
  }
  SUBCASE("duplicate order line") {
    const std::string path = dir.file("dup.txt", "1\n2\norder: 1,2\norder: 2,1\n");
    const CliResult result = run({"evaluate", path});
    CHECK(result.code == 1);
    CHECK(result.err.find(":4: ") != std::string::npos);
  }
  SUBCASE("order spec of the wrong length") {
    const std::string path = dir.file("short.txt", "1\n2\n3\norder: 1,2\n");
    const CliResult result = run({"evaluate", path});
    CHECK(result.code == 1);
  }
  SUBCASE("missing subcommand") {
    const CliResult result = run({});
    CHECK(result.code == 1);
  }
}

TEST_SUITE_END();
