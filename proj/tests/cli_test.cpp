#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pointscheme/cli.hpp"

using namespace pointscheme::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::size_t data_rows(const std::string& out) {
  std::istringstream is(out);
  std::size_t rows = 0;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  return rows;
}

struct Argv {
  explicit Argv(std::vector<std::string> a) : args(std::move(a)) {
    for (auto& s : args) ptrs.push_back(s.data());
  }
  int argc() { return static_cast<int>(ptrs.size()); }
  char** argv() { return ptrs.data(); }
  std::vector<std::string> args;
  std::vector<char*> ptrs;
};

RunResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pointscheme");
  Argv a(std::move(args));
  RunConfig cfg;
  RunResult res;
  if (!parse_args(a.argc(), a.argv(), cfg, res)) return res;
  return run(cfg);
}

}  // namespace

TEST_CASE("gamma") {
  const auto res = invoke({"gamma", fixture("kxy_f3.alg"), "-n", "2"});
  CHECK(res.status == ok);
  CHECK(res.err.empty());
  CHECK(res.out.rfind("# gamma n=2 field=3 algebra=kxy_f3\n", 0) == 0);
  CHECK(data_rows(res.out) == 4);
  CHECK(res.out.find("v,v,v\t1:2\t1:2\n") != std::string::npos);

  const auto quiver = invoke({"gamma", fixture("cycle2_f2.alg"), "-n", "1"});
  CHECK(quiver.status == ok);
  CHECK(data_rows(quiver.out) == 2);
  CHECK(quiver.out.find("1,2\t1\n") != std::string::npos);
  CHECK(quiver.out.find("2,1\t1\n") != std::string::npos);

  const auto cubic = invoke({"gamma", fixture("cubic_f2.alg"), "-n", "2"});
  CHECK(data_rows(cubic.out) == 9);
}

TEST_CASE("sigma") {
  const auto res = invoke({"sigma", fixture("qplane_f5.alg"), "-d", "1"});
  CHECK(res.status == ok);
  std::istringstream is(res.out);
  std::size_t mappings = 0;
  for (std::string line; std::getline(is, line);) mappings += line.find("\t->\t") != std::string::npos;
  CHECK(mappings == 6);
  CHECK(res.out.find("v,v\t1:1\t->\tv,v\t1:2\n") != std::string::npos);
  CHECK(res.out.find("cycles\t1,1,4\n") != std::string::npos);
  CHECK(res.out.find("order\t4\n") != std::string::npos);

  const auto jordan = invoke({"sigma", fixture("jordan_f5.alg"), "-d", "1"});
  CHECK(jordan.out.find("cycles\t1,5\n") != std::string::npos);

  const auto free2 = invoke({"sigma", fixture("free2_f2.alg"), "-d", "1"});
  CHECK(free2.status == precondition_failure);
  CHECK(free2.err.find("has 3 points") != std::string::npos);
}

TEST_CASE("stabilize") {
  const auto res = invoke({"stabilize", fixture("kxy_f3.alg"), "--max", "3"});
  CHECK(res.status == ok);
  CHECK(res.out.find("stable_from\t1\t(point-level)\n") != std::string::npos);
  CHECK(res.out.find("1->0\t1\tfalse\ttrue\tfalse\t4x1\n") != std::string::npos);

  const auto capped = invoke({"stabilize", fixture("free2_f2.alg"), "--max", "8", "--cap", "100"});
  CHECK(capped.status == cap_exceeded);
  CHECK(capped.out.find("partial\t") != std::string::npos);
  CHECK(capped.out.find("4\t81\n") != std::string::npos);
}

TEST_CASE("verify and segre-check") {
  const auto res = invoke({"verify", fixture("qplane_f5.alg"), "--max", "2"});
  CHECK(res.status == ok);
  CHECK(res.out.find("FAIL") == std::string::npos);
  CHECK(res.out.find("PASS\tmode_equivalence\t") != std::string::npos);

  const auto segre = invoke({"segre-check", fixture("cycle2_f2.alg"), "-n", "4"});
  CHECK(segre.status == ok);
  CHECK(segre.out.find("PASS\tsegre_pentagon\tchecked=2\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).status == usage_error);
  CHECK(invoke({"gamma", fixture("kxy_f3.alg")}).status == usage_error);
  CHECK(invoke({"gamma", fixture("missing.alg"), "-n", "1"}).status == usage_error);
  CHECK(invoke({"frobnicate", fixture("kxy_f3.alg")}).status == usage_error);
  CHECK(invoke({"--help"}).status == ok);

  const auto parse = invoke({"gamma", fixture("bad_syntax.alg"), "-n", "1"});
  CHECK(parse.status == parse_failure);
  CHECK(parse.err.find("line 3") != std::string::npos);

  CHECK(invoke({"gamma", fixture("rational.alg"), "-n", "1"}).status == precondition_failure);
  CHECK(invoke({"gamma", fixture("free2_f2.alg"), "-n", "10", "--cap", "1000"}).status == cap_exceeded);

  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.n_max = 1;
  CHECK(run_on_text(cfg, "field 2\nvertices v\narrow x: v -> v\n", "tiny").status == ok);
}

TEST_CASE("output file and determinism") {
  const auto path = std::filesystem::temp_directory_path() / "pointscheme_cli_test.tsv";
  const auto written = invoke({"gamma", fixture("qplane_f5.alg"), "-n", "3", "-o", path.string()});
  CHECK(written.status == ok);
  CHECK(written.out.empty());
  std::ifstream is(path, std::ios::binary);
  std::stringstream buf;
  buf << is.rdbuf();
  std::filesystem::remove(path);

  const auto serial = invoke({"gamma", fixture("qplane_f5.alg"), "-n", "3"});
  const auto parallel = invoke({"gamma", fixture("qplane_f5.alg"), "-n", "3", "-j", "4"});
  CHECK(buf.str() == serial.out);
  CHECK(parallel.out == serial.out);
  CHECK(invoke({"gamma", fixture("qplane_f5.alg"), "-n", "3"}).out == serial.out);
}
