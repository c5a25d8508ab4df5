#include <doctest.h>

#include "gnatfam/cli.hpp"
#include "gnatfam/io.hpp"
#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace gnatfam;
using namespace gnatfam::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gnatfam");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("gnatfam_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

const std::string a1 = fixture_path("a1_minimal.json");
const std::string a2 = fixture_path("a2_minimal.json");
const std::string triv = fixture_path("trivial.json");
const std::string singular = fixture_path("a1_singular.json");

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", a2});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["valid"] == true);
  CHECK(j["group_order"] == 3);
  CHECK(j["exceptional_rays"] == 2);
  CHECK(j["rays"][1]["vector"] == "1/3,2/3");
  CHECK(j["rays"][1]["kind"] == "exceptional");

  r = run({"validate", singular});
  CHECK(r.code == 2);
  j = r.json();
  CHECK(j["checks"]["smoothness"] == false);
  CHECK(j["failures"][0]["check"] == "smoothness");

  TempDir tmp;
  r = run({"validate", tmp.write("bad.json", "{\"dimension\": 2, \"group\": ")});
  CHECK(r.code == 1);
  CHECK(io::Json::parse(r.err)["error"].is_string());
  CHECK(run({"validate", (tmp.path() / "missing.json").string()}).code == 1);
  CHECK(run({"validate", tmp.write("neg.json", R"({"dimension": 2, "group": {"generators": [{"order": 2, "weights": [1]}]}, "fan": "minimal"})")}).code == 1);
}

TEST_CASE("families") {
  auto r = run({"families", "maxshift", a1});
  CHECK(r.code == 0);
  CHECK(r.json() == io::Json::parse(R"({"0,0": {}, "1,0": {"1": "1/2"}})"));

  r = run({"families", "canonical", triv});
  CHECK(r.json() == io::Json::parse(R"({"0,0": {}})"));

  r = run({"families", "canonical", a2});
  CHECK(r.json() == io::Json::parse(
                         R"({"0,0": {}, "1,0": {"1": "1/3", "2": "2/3"}, "2,0": {"1": "2/3", "2": "1/3"}})"));

  r = run({"families", "minshift", a1});
  CHECK(r.json() == io::Json::parse(R"({"0,0": {}, "1,0": {"1": "-1/2"}})"));

  CHECK(run({"families", "weird", a1}).code == 1);
  CHECK(run({"families", "canonical", singular}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--count-only", a1});
  CHECK(r.code == 0);
  CHECK(r.json()["total"] == 2);
  CHECK(r.json()["per_ray"] == io::Json::parse(R"({"0": 1, "1": 2, "2": 1})"));
  CHECK(run({"enumerate", "--count-only", a2}).json()["total"] == 9);
  CHECK(run({"enumerate", "--count-only", triv}).json()["total"] == 1);

  TempDir tmp;
  auto big = tmp.write("a11.json",
                       R"({"dimension": 2, "group": {"generators": [{"order": 12, "weights": [1, 11]}]}, "fan": "minimal"})");
  CHECK(run({"enumerate", "--count-only", big}).json()["total"] == "4311500661703860387840000");

  auto dir = (tmp.path() / "out").string();
  r = run({"enumerate", a2, "--materialize", dir, "--orbits"});
  CHECK(r.code == 0);
  CHECK(r.json()["materialized"] == 9);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == 9);
  CHECK(fs::exists(fs::path(dir) / "family_0.json"));
  std::size_t members = 0;
  const auto listed = r.json();
  for (const auto& o : listed["orbits"]) members += o.size();
  CHECK(members == 9);

  // Every materialized file passes check.
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(run({"check", a2, "--set", e.path().string()}).code == 0);

  ::setenv("GNATFAM_MAX_CATALOG", "5", 1);
  r = run({"enumerate", a2, "--materialize", (tmp.path() / "capped").string()});
  ::unsetenv("GNATFAM_MAX_CATALOG");
  CHECK(r.code == 1);
  CHECK(io::Json::parse(r.err)["error"] == "CatalogTooLarge");
}

TEST_CASE("enumerate output is identical across thread counts") {
  TempDir tmp;
  auto inst = tmp.write("a7.json",
                        R"({"dimension": 2, "group": {"generators": [{"order": 7, "weights": [1, 3]}]}, "fan": "minimal"})");
  auto one = run({"enumerate", inst, "--orbits", "--jobs", "1"});
  auto four = run({"enumerate", inst, "--orbits", "--jobs", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("check") {
  TempDir tmp;
  auto max = tmp.write("max.json", run({"families", "maxshift", a1}).out);
  auto r = run({"check", a1, "--set", max});
  CHECK(r.code == 0);
  CHECK(r.json()["pass"] == true);

  r = run({"check", a1, "--set", tmp.write("bad.json", R"({"1,0": {"1": "3/2"}})")});
  CHECK(r.code == 2);
  auto v = r.json()["violations"][0];
  CHECK(v["kind"] == "inequality");
  CHECK(v["ray"] == 1);
  CHECK(v["character"] == "0,0");
  CHECK(v["generator"] == 0);
  CHECK(v["value"] == "-1");

  r = run({"check", a1, "--set", tmp.write("weil.json", R"({"0,0": {}, "1,0": {"1": "1"}})")});
  CHECK(r.code == 2);
  bool gweil = false;
  const auto report = r.json();
  for (const auto& x : report["violations"])
    gweil |= x["kind"] == "g-weil" && x["expected_fract"] == "1/2";
  CHECK(gweil);

  // Labels are reduced to canonical representatives: y has the same weight as x.
  r = run({"check", a1, "--set", tmp.write("alias.json", R"({"0,1": {"1": "1/2"}})")});
  CHECK(r.code == 0);
  CHECK(run({"check", a1, "--set", tmp.write("dup.json", R"({"0,1": {}, "1,0": {}})")}).code == 1);
  CHECK(run({"check", a1, "--set", tmp.write("ray.json", R"({"1,0": {"7": "1/2"}})")}).code == 1);
}

TEST_CASE("equiv") {
  TempDir tmp;
  auto c = tmp.write("c.json", R"({"1,0": {"1": "1/2"}})");
  auto twisted = tmp.write("t.json", R"({"0,0": {"0": "1", "1": "1", "2": "1"}, "1,0": {"0": "1", "1": "3/2", "2": "1"}})");
  auto r = run({"equiv", a1, "--a", twisted, "--b", c});
  CHECK(r.code == 0);
  CHECK(r.json()["linearly_equivalent"] == true);
  CHECK(r.json()["witness"] == io::Json::parse("[1, 1]"));

  r = run({"equiv", a1, "--a", c, "--b", c});
  CHECK(r.json()["witness"] == io::Json::parse("[0, 0]"));

  auto m = tmp.write("m.json", R"({"1,0": {"1": "-1/2"}})");
  r = run({"equiv", a1, "--a", c, "--b", m});
  CHECK(r.json()["linearly_equivalent"] == false);
  CHECK(r.json()["witness"].is_null());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"enumerate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("instance and family files round-trip") {
  for (auto [r, a] : cyclic_sweep()) {
    GroupSpec spec = cyclic(r, {1, a});
    auto inst = make_instance(spec, std::nullopt);
    io::InstanceFile file{spec, {}, std::nullopt};
    auto again = io::parse_instance(io::Json::parse(io::to_json(file).dump()));
    CHECK(again.group.generators[0].weights == spec.generators[0].weights);
    CHECK_FALSE(again.fan.has_value());
    for (const auto& s : {canonical_set(inst), maxshift_set(inst), minshift_set(inst)}) {
      auto text = io::dump(io::family_to_json(inst, s));
      CHECK(io::family_from_json(inst, io::Json::parse(text)) == s);
    }
  }
  auto inst = star_3d();
  ExplicitFan fan;
  for (const auto& r : inst.fan.rays) fan.rays.push_back(r.vector);
  fan.cones = inst.fan.max_cones;
  io::InstanceFile file{cyclic(3, {1, 1, 1}), {}, fan};
  auto again = io::load_instance(io::parse_instance(io::Json::parse(io::to_json(file).dump())));
  CHECK(again.fan.rays.size() == inst.fan.rays.size());
  CHECK(again.fan.max_cones == inst.fan.max_cones);
}
