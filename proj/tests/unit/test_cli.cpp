#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "shgtool/cli.hpp"
#include "shgtool/commands.hpp"
#include "shgtool/io.hpp"
#include "corpus.hpp"

using namespace shgtool;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (shgtest::fixture_dir() / name).string(); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "shg_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

json structure_doc() {
  return json::parse(R"({"name": "Z2", "points": ["0", "1"], "convolution": {
    "0|0": [{"point": "0", "weight": "1"}], "0|1": [{"point": "1", "weight": 1}],
    "1|0": [{"point": "1", "weight": "2/2"}], "1|1": [{"point": "0", "weight": "1"}]}})");
}

}  // namespace

TEST(CliIO, ParsesStructure) {
  auto k = structure_from_json(structure_doc());
  EXPECT_EQ(k.size(), 2u);
  EXPECT_TRUE(shg::verify(k).passed());
  const auto canonical = structure_to_json(k);
  EXPECT_EQ(canonical["convolution"]["1|0"][0]["weight"], "1");
}

TEST(CliIO, RejectsBadStructures) {
  auto doc = structure_doc();
  doc["convolution"]["0|2"] = json::array();
  EXPECT_THROW(structure_from_json(doc), InputError);
  doc = structure_doc();
  doc["convolution"]["0|0"][0]["weight"] = "one";
  EXPECT_THROW(structure_from_json(doc), InputError);
  doc = structure_doc();
  doc["convolution"]["0|0"].push_back({{"point", "0"}, {"weight", "0"}});
  EXPECT_THROW(structure_from_json(doc), InputError);
  doc = structure_doc();
  doc.erase("points");
  EXPECT_THROW(structure_from_json(doc), InputError);
  doc = structure_doc();
  doc["points"] = {"0", "0"};
  EXPECT_THROW(structure_from_json(doc), InputError);
  doc = structure_doc();
  doc["convolution"]["01"] = json::array();
  EXPECT_THROW(structure_from_json(doc), InputError);
  EXPECT_THROW(read_json(fixture("malformed.json")), InputError);
  EXPECT_THROW(read_json(fixture("absent.json")), InputError);
}

TEST(CliIO, MissingCellIsZeroMeasure) {
  auto doc = structure_doc();
  doc["convolution"].erase("1|1");
  auto k = structure_from_json(doc);
  EXPECT_FALSE(shg::verify(k).probability.passed);
}

TEST(CliIO, CanonicalFormIsStableUnderReordering) {
  const auto k = structure_from_json(read_json(fixture("t3.json")));
  const std::string text = dump(structure_to_json(k));
  std::ifstream in(fixture("t3.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(text, ss.str());
  // a non-canonical rendering of the same structure reads back identically
  const auto reparsed = structure_from_json(json::parse(structure_to_json(k).dump()));
  EXPECT_EQ(dump(structure_to_json(reparsed)), text);
}

TEST(CliIO, ActionFiles) {
  const auto k = structure_from_json(read_json(fixture("z2.json")));
  auto a = action_from_json(read_json(fixture("z2-canonical-action.json")), k);
  EXPECT_EQ(a.maps.size(), 2u);
  EXPECT_THROW(action_from_json(read_json(fixture("mismatched-action.json")), k), InputError);
  auto doc = read_json(fixture("z2-canonical-action.json"));
  doc["maps"].erase("1");
  EXPECT_THROW(action_from_json(doc, k), InputError);
  doc = read_json(fixture("z2-canonical-action.json"));
  doc["dimension"] = 3;
  EXPECT_THROW(action_from_json(doc, k), InputError);
  doc = read_json(fixture("z2-canonical-action.json"));
  doc["carrier"] = "cube";
  EXPECT_THROW(action_from_json(doc, k), InputError);
}

TEST(CliIO, CanonicalActionFixturesMatchLibrary) {
  for (const std::string name : {"z2", "lz2", "lz3", "t3", "s3-cosets", "z4-orbits"}) {
    auto k = structure_from_json(read_json(fixture(name + ".json")));
    shg::verify(k);
    const auto act = shg::canonical_means_action(k);
    EXPECT_EQ(action_to_json(act), read_json(fixture(name + "-canonical-action.json"))) << name;
  }
}

TEST(CliIO, SplitLabels) {
  EXPECT_EQ(split_labels("e,(12)"), (std::vector<std::string>{"e", "(12)"}));
  EXPECT_EQ(split_labels("{1,2},{3}"), (std::vector<std::string>{"{1,2}", "{3}"}));
  EXPECT_EQ(split_labels("a"), (std::vector<std::string>{"a"}));
}

TEST(Cli, CommandOutcomes) {
  auto r = run({"check", fixture("t3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("identity: e"), std::string::npos);
  EXPECT_NE(r.out.find("commutative: true"), std::string::npos);
  r = run({"check", fixture("t3-corrupted.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("associativity: fail at (a, a, b)"), std::string::npos);
  EXPECT_EQ(run({"check", fixture("malformed.json")}).code, 2);

  r = run({"lim", fixture("z2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mean: 1/2, 1/2"), std::string::npos);
  EXPECT_EQ(run({"lim", fixture("lz2.json")}).code, 1);
  r = run({"lim", fixture("z2.json"), "--method", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("oracles agree: true"), std::string::npos);

  r = run({"fixpoint", fixture("z2.json"), fixture("z2-canonical-action.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("point: 1/2, 1/2"), std::string::npos);
  r = run({"fixpoint", fixture("lz2.json"), fixture("lz2-canonical-action.json"), "--exact"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("no common fixed point"), std::string::npos);
  r = run({"fixpoint", fixture("z2.json"), fixture("mismatched-action.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("unknown point label"), std::string::npos);
  r = run({"fixpoint", fixture("z2.json"), fixture("z2-not-action.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not an action"), std::string::npos);

  r = run({"construct", "triple", "1/2", "1/4", "1/4", "1/4", "1/4", "1/2", "1/2", "1/2", "--out",
           scratch("rejected.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("y1*x3 != z1*x1"), std::string::npos);
  EXPECT_FALSE(fs::exists(scratch("rejected.json")));

  r = run({"construct", "coset", "--group", fixture("s3-group.json"), "--subgroup", "e,(12)", "--out",
           scratch("cosets.json").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(structure_from_json(read_json(scratch("cosets.json"))).size(), 3u);
}

TEST(Cli, ConstructRoundTrip) {
  const auto out = scratch("roundtrip.json").string();
  for (const auto& fmt : {"text", "json"}) {
    const auto built = run({"construct", "orbit", "--group", fixture("z4-group.json"), "--acting",
                            fixture("z2-group.json"), "--act", fixture("inversion-z4.json"), "--out", out,
                            "--no-timing", "--format", fmt});
    ASSERT_EQ(built.code, 0);
    const auto checked = run({"check", out, "--no-timing", "--format", fmt});
    EXPECT_EQ(checked.code, 0);
    EXPECT_EQ(built.out, checked.out);
  }
}

TEST(Cli, DeterministicModuloTiming) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"lim", fixture("s3-cosets.json"), "--method", "both", "--format", "json"},
           {"fixpoint", fixture("t3.json"), fixture("t3-canonical-action.json"), "--format", "json"},
           {"check", fixture("t3-corrupted.json"), "--format", "json"}}) {
    auto a = json::parse(run(args).out), b = json::parse(run(args).out);
    ASSERT_TRUE(a.contains("timing"));
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a, b);
    auto no_timing = args;
    no_timing.push_back("--no-timing");
    EXPECT_EQ(json::parse(run(no_timing).out), a);
  }
  const auto text = run({"check", fixture("z2.json")}).out;
  EXPECT_NE(text.find("time: "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lim"}).code, 2);
  EXPECT_EQ(run({"check", fixture("z2.json"), "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"fixpoint", fixture("z2.json"), fixture("z2-canonical-action.json"), "--iterate", "x", "10"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
