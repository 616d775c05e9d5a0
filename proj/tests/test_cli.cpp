#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "filtra/cli.hpp"
#include "filtra/error.hpp"

using namespace filtra;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = FILTRA_SOURCE_DIR;

json cusp_doc() {
  return json::parse(R"({
    "name": "cusp",
    "ring": {"vars": ["x", "y"], "relations": ["y^2 - x^3"]},
    "filtration": {"type": "adic", "ideal": ["x", "y"]},
    "reduction": {"type": "explicit", "gens": ["x"]}
  })");
}

ErrorKind config_error(const json& doc) {
  try {
    parse_config(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted " << doc.dump());
  return ErrorKind::PreconditionFailed;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("filtra-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

VerifyFlags stable() {
  VerifyFlags f;
  f.stable_output = true;
  return f;
}

}  // namespace

TEST_CASE("config defaults") {
  JobConfig c = parse_config(cusp_doc());
  CHECK(c.name == "cusp");
  CHECK(c.field.characteristic() == 32003);
  CHECK(c.horizon == 12);
  CHECK(c.power_bound == 2);
  CHECK(c.checks.empty());
  CHECK_FALSE(c.strict);
  json q = cusp_doc();
  q["ring"]["field"] = "q";
  CHECK(parse_config(q).field.is_rational());
  q["ring"]["field"] = {{"fp", 101}};
  CHECK(parse_config(q).field.characteristic() == 101);
  q = cusp_doc();
  q["reduction"] = {{"type", "search"}};
  JobConfig s = parse_config(q);
  CHECK(s.attempts == 20);
  CHECK(s.seed == 1);
}

TEST_CASE("config validation") {
  json d = cusp_doc();
  d["horizon"] = 5;
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["colour"] = "red";
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["ring"]["field"] = {{"fp", 91}};
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d["ring"]["field"] = "r";
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["checks"] = {"prop24", "nonsense"};
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["filtration"] = {{"type", "explicit"}, {"ideal", {"x"}}};
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["ring"]["vars"] = {"x", "x"};
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["ring"]["vars"] = {"2x"};
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d.erase("reduction");
  CHECK(config_error(d) == ErrorKind::ConfigError);
  d = cusp_doc();
  d["power_bound"] = 0;
  CHECK(config_error(d) == ErrorKind::ConfigError);
  CHECK(config_error(json::array()) == ErrorKind::ConfigError);
  try {
    d = cusp_doc();
    d["horizon"] = "twelve";
    parse_config(d);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("$.horizon") != std::string::npos);
  }
}

TEST_CASE("verify examples") {
  auto cusp = run_job(parse_config(cusp_doc()), stable());
  CHECK(cusp.exit_code == 0);
  CHECK(cusp.report["equality_holds"] == true);
  CHECK(cusp.report["status"] == "ok");
  CHECK(cusp.report["error"].is_null());

  auto tp = run_job(load_config(kSource / "corpus" / "two_planes.json"), stable());
  CHECK(tp.exit_code == 0);
  CHECK(tp.report["equality_holds"] == false);
  CHECK(tp.report["condition2"]["holds"] == false);
  CHECK(tp.report["equivalence"] == "pass");

  json bad = cusp_doc();
  bad["ring"]["relations"] = {"y^2 - x^^3"};
  auto b = run_job(parse_config(bad), stable());
  CHECK(b.exit_code == 1);
  CHECK(b.report["error"]["kind"] == "SyntaxError");
  CHECK(b.report["error"]["stage"] == "parse");
  CHECK(b.report["error"]["offset"] == 8);

  json unk = cusp_doc();
  unk["reduction"]["gens"] = {"z"};
  auto u = run_job(parse_config(unk), stable());
  CHECK(u.exit_code == 1);
  CHECK(u.report["error"]["kind"] == "UnknownVariable");

  json notred = cusp_doc();
  notred["reduction"]["gens"] = {"y"};
  auto n = run_job(parse_config(notred), stable());
  CHECK(n.exit_code == 1);
  CHECK(n.report["error"]["kind"] == "NotAdmissible");
  CHECK(n.report["error"]["stage"] == "admissibility");
}

TEST_CASE("horizon override and check selection") {
  VerifyFlags f = stable();
  f.horizon = 7;
  json d = cusp_doc();
  d["checks"] = {"prop24"};
  auto r = run_job(parse_config(d), f);
  CHECK(r.exit_code == 0);
  CHECK(r.report["filtration"]["horizon"] == 7);
  REQUIRE(r.report["checks"].size() == 1);
  CHECK(r.report["checks"][0]["name"] == "prop24");
  f.horizon = 5;
  CHECK(run_job(parse_config(cusp_doc()), f).exit_code == 1);
}

TEST_CASE("determinism and round trip") {
  JobConfig c = load_config(kSource / "corpus" / "two_planes_search.json");
  auto a = run_job(c, stable());
  auto b = run_job(c, stable());
  CHECK(a.report.dump() == b.report.dump());
  CHECK_FALSE(a.report.contains("timings"));
  CHECK(run_job(c, VerifyFlags{}).report.contains("timings"));
  json back = json::parse(a.report.dump(2));
  CHECK(back == a.report);
  CHECK(render_markdown(back) == render_markdown(a.report));
  CHECK(a.report["version"] == kReportVersion);
  CHECK(a.report["reduction"]["seed"] == 3);
}

TEST_CASE("run_verify writes reports") {
  fs::path out = scratch("verify");
  VerifyFlags f = stable();
  f.out_dir = out;
  f.format = ReportFormat::Both;
  CHECK(run_verify(kSource / "corpus" / "cusp.json", f) == 0);
  CHECK(fs::exists(out / "cusp.json"));
  CHECK(fs::exists(out / "cusp.md"));
  std::ifstream in(out / "cusp.md");
  std::string md((std::istreambuf_iterator<char>(in)), {});
  CHECK(md.find("**OK**") != std::string::npos);
  CHECK(run_verify(out / "missing.json", f) == 1);
}

TEST_CASE("corpus propagation") {
  fs::path empty = scratch("empty");
  CorpusFlags f;
  f.verify = stable();
  f.verify.out_dir = scratch("empty-out");
  CHECK_THROWS_AS(run_corpus(empty, f), Error);
  CHECK_THROWS_AS(run_corpus(empty / "nope", f), Error);

  fs::path dir = scratch("mixed");
  fs::copy_file(kSource / "corpus" / "cusp.json", dir / "a_cusp.json");
  fs::copy_file(kSource / "corpus" / "depth_zero.json", dir / "b_depth_zero.json");
  std::ofstream(dir / "c_broken.json") << "{\"ring\": 3}";
  f.jobs = 2;
  auto res = run_corpus(dir, f);
  CHECK(res.exit_code == 2);
  const auto& jobs = res.summary["jobs"];
  REQUIRE(jobs.size() == 3);
  CHECK(jobs[0]["exit_code"] == 0);
  CHECK(jobs[1]["name"] == "depth_zero");
  CHECK(jobs[1]["exit_code"] == 2);
  CHECK(jobs[2]["exit_code"] == 1);
  CHECK(jobs[2]["error"]["stage"] == "config");
  CHECK(res.summary["counts"]["error"] == 1);
  CHECK(fs::exists(*f.verify.out_dir / "summary.json"));
  CHECK(fs::exists(*f.verify.out_dir / "summary.md"));

  fs::remove(dir / "b_depth_zero.json");
  CHECK(run_corpus(dir, f).exit_code == 1);
}

TEST_CASE("bundled corpus matches golden summary") {
  CorpusFlags f;
  f.verify = stable();
  f.verify.out_dir = scratch("golden-out");
  auto res = run_corpus(kSource / "corpus", f);
  std::ifstream in(kSource / "golden" / "summary.json");
  REQUIRE(in);
  json golden = json::parse(in);
  CHECK(res.summary == golden);
  if (res.summary != golden) MESSAGE(res.summary.dump(2));
}

TEST_CASE("GB cache persistence") {
  fs::path dir = scratch("cache");
  setenv("FILTRA_CACHE_DIR", dir.c_str(), 1);
  clear_groebner_cache();
  auto r = run_job(parse_config(cusp_doc()), stable());
  unsetenv("FILTRA_CACHE_DIR");
  CHECK(r.exit_code == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().filename().string().rfind("gb-", 0) == 0);
    std::ifstream in(e.path());
    json doc = json::parse(in);
    CHECK(doc["version"] == 1);
    CHECK(doc["basis"].is_array());
  }
  CHECK(files >= 1);
  // a second run reads the persisted entries
  clear_groebner_cache();
  setenv("FILTRA_CACHE_DIR", dir.c_str(), 1);
  auto again = run_job(parse_config(cusp_doc()), stable());
  unsetenv("FILTRA_CACHE_DIR");
  CHECK(again.report.dump() == r.report.dump());
}
