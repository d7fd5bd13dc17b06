// Copyright 2026 The stinespring authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "stinespring/dilation.hpp"
#include "stinespring/io.hpp"
#include "test_helpers.hpp"

using namespace stinespring;
using io::json;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stinespring");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("stinespring_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string write_channel(const TempDir& dir, const std::string& name, const KrausSet& k) {
  const auto path = dir.file(name);
  io::write_json_file(path, io::channel_to_json(k));
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> check_names(const json& report) {
  std::vector<std::string> names;
  for (const auto& c : report.at("checks")) names.push_back(c.at("check_name"));
  return names;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("cli random") {
  TEST_CASE("writes a spec that verifies") {
    TempDir dir;
    const auto spec = dir.file("spec.json");
    CHECK(run_cli({"random", "-n", "2", "--ell", "2", "--seed", "7", "-o", spec}).code == 0);
    const auto k = io::channel_from_json(io::read_json_file(spec));
    CHECK(k.size() == 2);
    CHECK(run_cli({"verify", "-i", spec, "-r", dir.file("r.json")}).code == 0);
  }

  TEST_CASE("one-dimensional channel is a single phase") {
    const auto r = run_cli({"random", "-n", "1", "-l", "1"});
    REQUIRE(r.code == 0);
    const auto k = io::channel_from_json(json::parse(r.out));
    REQUIRE(k.size() == 1);
    CHECK(std::abs(std::abs(k[0](0, 0)) - 1.0) <= 1e-15);
  }

  TEST_CASE("Kraus count above n^2 is a domain failure") {
    const auto r = run_cli({"random", "-n", "2", "-l", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ell") != std::string::npos);
  }
}

TEST_SUITE("cli dilate") {
  TEST_CASE("identity catalyst dilation") {
    TempDir dir;
    const auto spec = write_channel(dir, "id.json", testing::identity_channel(2));
    const auto out = dir.file("u.json");
    const auto rep = dir.file("rep.json");
    REQUIRE(run_cli({"dilate", "-i", spec, "--method", "sznagy", "-o", out, "-r", rep}).code == 0);
    const auto d = io::dilation_from_json(io::read_json_file(out));
    CHECK(d.layout == Layout::tensor);
    CHECK(d.unitary == ComplexMatrix::diagonal({1.0, -1.0, 1.0, -1.0}));

    REQUIRE(run_cli({"dilate", "-i", spec, "--method", "sznagy", "--layout", "paper_block", "-o",
                     out, "-r", rep})
                .code == 0);
    CHECK(io::dilation_from_json(io::read_json_file(out)).unitary ==
          ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));

    const auto report = io::read_json_file(rep);
    CHECK(report.at("passed") == true);
    CHECK(report.at("channel_digest") == io::content_digest(io::read_json_file(spec)));
    CHECK(report.at("dilation_summary").at(0).at("env_dim") == 2);
  }

  TEST_CASE("malformed JSON and non-trace-preserving input") {
    TempDir dir;
    const auto bad = dir.file("bad.json");
    std::ofstream(bad) << "{\"dim_in\": 2, \"kraus\": [";
    CHECK(run_cli({"dilate", "-i", bad, "--method", "finite", "-o", dir.file("u.json")}).code ==
          2);
    const auto half = write_channel(dir, "half.json", KrausSet({0.5 * ComplexMatrix::identity(2)}));
    const auto r = run_cli({"dilate", "-i", half, "--method", "hk", "-o", dir.file("u.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("trace") != std::string::npos);
  }

  TEST_CASE("bad flags") {
    CHECK(run_cli({"dilate", "-i", "x.json"}).code == 2);
    CHECK(run_cli({"dilate", "-i", "x.json", "--method", "magic", "-o", "y"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
  }
}

TEST_SUITE("cli verify") {
  TEST_CASE("amplitude damping passes every check") {
    TempDir dir;
    const auto spec = write_channel(dir, "ad.json", testing::amplitude_damping(0.3));
    const auto rep = dir.file("rep.json");
    const auto r = run_cli({"verify", "-i", spec, "-r", rep});
    CHECK(r.code == 0);
    const auto report = io::read_json_file(rep);
    CHECK(report.at("passed") == true);
    for (const auto& c : report.at("checks")) CHECK(c.at("residual").get<double>() <= 1e-9);
    const auto names = check_names(report);
    CHECK(contains(names, "involution"));
    CHECK(contains(names, "catalyst"));
    CHECK(contains(names, "compare_constructions"));
    CHECK(report.at("dilation_summary").size() == 3);
    CHECK(r.out.find("PASS") != std::string::npos);
  }

  TEST_CASE("method subset") {
    TempDir dir;
    const auto spec = write_channel(dir, "ad.json", testing::amplitude_damping(0.3));
    const auto r = run_cli({"verify", "-i", spec, "--methods", "sznagy"});
    REQUIRE(r.code == 0);
    const auto names = check_names(json::parse(r.out));
    CHECK(contains(names, "catalyst"));
    CHECK_FALSE(contains(names, "involution"));
    CHECK_FALSE(contains(names, "stinespring_identity/finite"));
  }

  TEST_CASE("non-trace-preserving spec fails") {
    TempDir dir;
    const auto half = write_channel(dir, "half.json", KrausSet({0.5 * ComplexMatrix::identity(2)}));
    CHECK(run_cli({"verify", "-i", half}).code == 1);
  }

  TEST_CASE("reports are reproducible byte for byte") {
    TempDir dir;
    const auto spec = dir.file("spec.json");
    REQUIRE(run_cli({"random", "-n", "3", "-l", "4", "-s", "11", "-o", spec}).code == 0);
    REQUIRE(run_cli({"verify", "-i", spec, "--seed", "5", "-r", dir.file("a.json")}).code == 0);
    REQUIRE(run_cli({"verify", "-i", spec, "--seed", "5", "-r", dir.file("b.json")}).code == 0);
    CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
  }

  TEST_CASE("j0 flag") {
    TempDir dir;
    const auto spec = dir.file("spec.json");
    REQUIRE(run_cli({"random", "-n", "2", "-l", "3", "-o", spec}).code == 0);
    CHECK(run_cli({"verify", "-i", spec, "--j0", "2", "--methods", "sznagy"}).code == 0);
    CHECK(run_cli({"verify", "-i", spec, "--j0", "3", "--methods", "sznagy"}).code == 1);
  }
}

TEST_SUITE("cli choi") {
  TEST_CASE("rank") {
    TempDir dir;
    const auto id = write_channel(dir, "id.json", testing::identity_channel(2));
    const auto dep = write_channel(dir, "dep.json", testing::depolarizing_qubit());
    CHECK(run_cli({"choi", "-i", id, "--mode", "rank"}).out == "1\n");
    CHECK(run_cli({"choi", "-i", dep, "--mode", "rank"}).out == "4\n");
  }

  TEST_CASE("to-choi, extract-kraus, verify") {
    TempDir dir;
    const auto spec = dir.file("spec.json");
    const auto c = dir.file("choi.json");
    const auto back = dir.file("back.json");
    REQUIRE(run_cli({"random", "-n", "3", "-l", "2", "-s", "3", "-o", spec}).code == 0);
    REQUIRE(run_cli({"choi", "-i", spec, "-o", c}).code == 0);
    REQUIRE(run_cli({"choi", "-i", c, "--mode", "extract-kraus", "-o", back}).code == 0);
    CHECK(io::channel_from_json(io::read_json_file(back)).size() == 2);
    CHECK(run_cli({"verify", "-i", back, "-r", dir.file("r.json")}).code == 0);
  }

  TEST_CASE("non-CP Choi matrix") {
    TempDir dir;
    const auto path = dir.file("choi.json");
    io::write_json_file(path, io::choi_to_json(ChoiMatrix{1, 2, ComplexMatrix::diagonal({1.0, -0.5})}));
    CHECK(run_cli({"choi", "-i", path, "--mode", "extract-kraus"}).code == 1);
  }
}

TEST_SUITE("cli limits") {
  TEST_CASE("TOOL_MAX_DIM caps the working dimension") {
    TempDir dir;
    const auto spec = write_channel(dir, "ad.json", testing::amplitude_damping(0.3));
    ::setenv("TOOL_MAX_DIM", "4", 1);
    CHECK(run_cli({"verify", "-i", spec, "--methods", "finite"}).code == 0);
    CHECK(run_cli({"verify", "-i", spec, "--methods", "hk"}).code == 1);
    ::setenv("TOOL_MAX_DIM", "lots", 1);
    CHECK(run_cli({"verify", "-i", spec}).code == 2);
    ::unsetenv("TOOL_MAX_DIM");
    CHECK(run_cli({"verify", "-i", spec}).code == 0);
  }
}

TEST_SUITE("cli executable") {
  TEST_CASE("exit statuses through the process boundary") {
    TempDir dir;
    const std::string tool = STINESPRING_CLI_PATH;
    const auto spec = dir.file("spec.json");
    const auto quiet = " >/dev/null 2>&1";
    auto status = [](const std::string& cmd) {
      const int raw = std::system(cmd.c_str());
      return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(tool + " random -n 2 -l 3 -s 1 -o " + spec + quiet) == 0);
    CHECK(status(tool + " verify -i " + spec + quiet) == 0);
    CHECK(status(tool + " verify -i " + dir.file("missing.json") + quiet) == 2);
    CHECK(status(tool + " --version" + quiet) == 0);
  }
}
