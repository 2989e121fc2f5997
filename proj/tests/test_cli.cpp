#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lsplacto/cli.h"

using namespace lsplacto;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lsplacto");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("crystal command") {
  auto r = run({"crystal", "--type", "A", "--rank", "2", "--shape", "1,1",
                "--format", "json"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["edges"].size() == 8);
  CHECK(j["vertices"][3]["breakpoints"][1] ==
        nlohmann::json::array({"1/2", "-1/1"}));

  auto dot = run({"crystal", "--type", "A", "--rank", "2", "--shape", "0,1",
                  "--format", "dot"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage and domain errors exit with 2") {
  auto bad_type = run({"crystal", "--type", "Z", "--rank", "2", "--shape", "1,1"});
  CHECK(bad_type.code == kExitUsage);
  CHECK_FALSE(bad_type.err.empty());
  CHECK(bad_type.out.empty());
  CHECK(run({"crystal", "--type", "A", "--rank", "2"}).code == kExitUsage);
  CHECK(run({"crystal", "--type", "A", "--rank", "2", "--shape", "-1,1"}).code ==
        kExitUsage);
  CHECK(run({"crystal", "--type", "A", "--rank", "2", "--shape", "1"}).code ==
        kExitUsage);
  CHECK(run({"info", "--type", "G2", "--rank", "3"}).code == kExitUsage);
  CHECK(run({"normalize", "--type", "A", "--rank", "2", "--word", "w7.0"})
            .code == kExitUsage);
  CHECK(run({"normalize", "--type", "A", "--rank", "2", "--word", "14"}).code ==
        kExitUsage);
  CHECK(run({"rules", "--type", "A", "--rank", "2", "--format", "dot"}).code ==
        kExitUsage);
  CHECK(run({"oracle-compare", "--type", "C", "--rank", "2"}).code ==
        kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("every subcommand succeeds on A2") {
  for (auto sub : {"info", "generators", "rules", "check", "verify-dims"}) {
    CAPTURE(sub);
    for (auto fmt : {"text", "json"}) {
      auto r = run({sub, "--type", "A", "--rank", "2", "--format", fmt});
      CHECK(r.code == kExitOk);
      CHECK(r.err.empty());
      if (std::string(fmt) == "json")
        CHECK(nlohmann::json::accept(r.out));
    }
  }
  auto o = run({"oracle-compare", "--type", "A", "--rank", "1", "--max-len",
                "3", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(nlohmann::json::parse(o.out)["words"] == 14);
}

TEST_CASE("normalize command") {
  auto boxes = run({"normalize", "--type", "A", "--rank", "2", "--word", "123"});
  CHECK(boxes.code == kExitOk);
  CHECK(boxes.out == "\n");
  auto ids = run({"normalize", "--type", "A", "--rank", "2", "--word",
                  "w1.1 w1.2 w1.0"});
  CHECK(ids.out == "w1.1 w2.1\n");
  CHECK(run({"normalize", "--type", "A", "--rank", "2", "--word", "231"}).out ==
        ids.out);
  auto j = run({"normalize", "--type", "A", "--rank", "2", "--word", "231",
                "--format", "json"});
  CHECK(j.code == kExitOk);
}

TEST_CASE("output files and determinism") {
  auto dir = std::filesystem::temp_directory_path() / "lsplacto_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "rules.json").string();
  auto r = run({"rules", "--type", "C", "--rank", "2", "--format", "json",
                "--output", path});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  auto direct = run({"rules", "--type", "C", "--rank", "2", "--format", "json"});
  CHECK(file.str() == direct.out);
  CHECK_FALSE(r.out.empty());
  std::filesystem::remove_all(dir);

  auto a = run({"check", "--type", "C", "--rank", "2", "--format", "json",
                "--threads", "1"});
  auto b = run({"check", "--type", "C", "--rank", "2", "--format", "json",
                "--threads", "4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("failed audits exit with 1") {
  auto r = run({"check", "--type", "D", "--rank", "4", "--threads", "4"});
  CHECK(r.code == kExitFailure);
}

TEST_CASE("data file override") {
  auto dir = std::filesystem::temp_directory_path() / "lsplacto_data_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "roots.json").string();
  std::ofstream(path) << R"({"root_systems": [{"label": "A", "rank": 1,
      "cartan": [[2]], "symmetrizer": [1], "positive_coroots": [[1]]}]})";
  ::setenv("LSPLACTO_DATA", path.c_str(), 1);
  CHECK(run({"info", "--type", "A", "--rank", "1"}).code == kExitOk);
  CHECK(run({"info", "--type", "A", "--rank", "2"}).code == kExitUsage);
  ::unsetenv("LSPLACTO_DATA");
  CHECK(run({"info", "--type", "A", "--rank", "2"}).code == kExitOk);
  std::filesystem::remove_all(dir);
}
