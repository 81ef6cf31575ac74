#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssvep/csv.hpp"
#include "ssvep/error.hpp"
#include "ssvep/random.hpp"
#include "ssvep/recording.hpp"

#include <algorithm>
#include <filesystem>

using namespace ssvep;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ssvep::Error");
  return Errc::InvalidArgument;
}

Recording ramp(std::size_t n, std::vector<std::string> ids, double fs = 250.0) {
  std::vector<Channel> ch;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i) + 1000.0 * static_cast<double>(c);
    ch.push_back({ids[c], v});
  }
  return Recording(fs, std::move(ch));
}

}  // namespace

TEST_CASE("csv helpers") {
  CHECK(csv::lines("a\r\nb\n\n").size() == 2);
  CHECK(csv::split("1,,3").size() == 3);
  CHECK(csv::trim("  x ") == "x");
  CHECK(*csv::parse_double("+2.5") == 2.5);
  CHECK(*csv::parse_double(" -1e3 ") == -1000.0);
  CHECK_FALSE(csv::parse_double("abc"));
  CHECK_FALSE(csv::parse_double("nan"));
  CHECK_FALSE(csv::parse_double("1.0x"));
  CHECK(csv::fmt(0.0) == "0");
}

TEST_CASE("load_recording reads the three-channel example") {
  const Recording r = parse_recording("o1_uV,o2_uV,ear_uV\n1,2,3\n4,5,6\n7,8,9\n");
  CHECK(r.channels().size() == 3);
  CHECK(r.duration_samples() == 3);
  const auto o2 = r.channel("o2");
  CHECK(std::vector<double>(o2.begin(), o2.end()) == std::vector<double>{2, 5, 8});
  CHECK(r.channel("ear")[2] == 9);
}

TEST_CASE("header-only file is an empty recording") {
  const Recording r = parse_recording("o1_uV,o2_uV,ear_uV\n");
  CHECK(r.duration_samples() == 0);
  CHECK(r.channels().size() == 3);
}

TEST_CASE("parse errors carry codes and line numbers") {
  try {
    parse_recording("o1_uV,o2_uV,ear_uV\n1,2\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RaggedRow);
    CHECK(e.line() == 2);
  }
  try {
    parse_recording("o1_uV,o2_uV\n1,2\n3,x\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonNumericSample);
    CHECK(e.line() == 3);
  }
  CHECK(code_of([] { parse_recording("o1,o2\n1,2\n"); }) == Errc::MalformedHeader);
  CHECK(code_of([] { parse_recording("o1_uV,o1_uV\n1,2\n"); }) == Errc::MalformedHeader);
  CHECK(code_of([] { parse_recording(""); }) == Errc::MalformedHeader);
}

TEST_CASE("recording invariants") {
  CHECK(code_of([] { Recording(0.0, {{"a", {1.0}}}); }) == Errc::InvalidRecording);
  CHECK(code_of([] { Recording(250.0, {{"a", {1.0}}, {"b", {1.0, 2.0}}}); }) == Errc::InvalidRecording);
  CHECK(code_of([] { ramp(3, {"o1"}).channel("o9"); }) == Errc::UnknownChannel);
}

TEST_CASE("format/parse round trip at 9 significant digits") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Channel> ch;
    for (const char* id : {"o1", "o2", "ear"}) {
      std::vector<double> v(50);
      for (auto& s : v) s = rng.normal() * std::pow(10.0, rng.uniform(-3, 3));
      ch.push_back({id, v});
    }
    const Recording a(250.0, ch);
    const Recording b = parse_recording(format_recording(a));
    for (const auto& c : a.channels()) {
      const auto got = b.channel(c.id);
      for (std::size_t i = 0; i < c.samples_uV.size(); ++i) {
        CHECK(got[i] == doctest::Approx(c.samples_uV[i]).epsilon(5e-9));
      }
    }
    CHECK(format_recording(b) == format_recording(a));
  }
}

TEST_CASE("slice_trial") {
  const Recording r = ramp(60 * 250, {"o1", "o2", "ear"});
  CHECK(slice_trial(r, {"t", "P1", 7, "f", 0, 30}).duration_samples() == 7500);
  CHECK(slice_trial(r, {"t", "P1", 7, "f", 0, 0.004}).duration_samples() == 1);
  const Recording mid = slice_trial(r, {"t", "P1", 7, "f", 2, 1});
  CHECK(mid.channel("o1")[0] == 500.0);
  CHECK(code_of([&] { slice_trial(r, {"t", "P1", 7, "f", 50, 30}); }) == Errc::WindowOutOfRange);
  CHECK(code_of([&] { slice_trial(r, {"t", "P1", 7, "f", -1, 3}); }) == Errc::WindowOutOfRange);
}

TEST_CASE("average_channels") {
  const Recording r(250.0, {{"o1", {1, 1}}, {"o2", {3, 3}}, {"ear", {2, 8}}});
  CHECK(average_channels(r, {"o1", "o2"}) == std::vector<double>{2, 2});
  const auto single = average_channels(r, {"ear"});
  CHECK(single == std::vector<double>{2, 8});

  // brute-force element-wise mean oracle
  Rng rng(3);
  std::vector<Channel> ch;
  for (const char* id : {"o1", "o2", "ear"}) {
    std::vector<double> v(101);
    for (auto& s : v) s = rng.normal();
    ch.push_back({id, v});
  }
  const Recording big(250.0, ch);
  const auto got = average_channels(big, {"o1", "o2", "ear"});
  REQUIRE(got.size() == 101);
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double want = (ch[0].samples_uV[i] + ch[1].samples_uV[i] + ch[2].samples_uV[i]) / 3.0;
    CHECK(got[i] == doctest::Approx(want).epsilon(1e-14));
  }
  // permutation invariance is exact
  CHECK(average_channels(big, {"ear", "o2", "o1"}) == got);
  CHECK(code_of([&] { average_channels(big, {}); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { average_channels(big, {"x"}); }) == Errc::UnknownChannel);
}

TEST_CASE("manifest parse, format and resolve") {
  const std::string text =
      "trial_id,participant,stimulus_hz,file,start_s,duration_s\n"
      "A,P1,9,a.csv,0,30\n"
      "B,P2,7,sub/b.csv,1.5,10\n";
  const SessionManifest m = parse_manifest(text);
  REQUIRE(m.trials.size() == 2);
  CHECK(m.stimulus_set == std::vector<double>{7, 9});
  CHECK(m.trial("B").start_s == 1.5);
  CHECK(m.occipital_channels() == std::vector<std::string>{"o1", "o2"});
  CHECK(m.ear_channel() == "ear");
  CHECK(parse_manifest(format_manifest(m)).trials.size() == 2);
  CHECK(code_of([] { parse_manifest("trial_id,participant\nA,P1\n"); }) == Errc::MalformedHeader);
  CHECK(code_of([&] { (void)m.trial("Z"); }) == Errc::InvalidManifest);

  const auto dir = std::filesystem::temp_directory_path() / "ssvep_manifest_test";
  std::filesystem::create_directories(dir);
  write_manifest(dir / "manifest.csv", m);
  const SessionManifest loaded = load_manifest(dir / "manifest.csv");
  CHECK(loaded.resolve(loaded.trial("B")) == dir / "sub/b.csv");
  std::filesystem::remove_all(dir);
}

TEST_CASE("validate_manifest checks files and windows") {
  const auto dir = std::filesystem::temp_directory_path() / "ssvep_validate_test";
  std::filesystem::create_directories(dir);
  write_recording(dir / "a.csv", ramp(500, {"o1", "o2", "ear"}));
  write_manifest(dir / "manifest.csv", parse_manifest("trial_id,participant,stimulus_hz,file,start_s,duration_s\n"
                                                      "A,P1,9,a.csv,0,2\n"));
  CHECK_NOTHROW(validate_manifest(load_manifest(dir / "manifest.csv")));
  write_manifest(dir / "manifest.csv", parse_manifest("trial_id,participant,stimulus_hz,file,start_s,duration_s\n"
                                                      "A,P1,9,a.csv,1,2\n"));
  CHECK(code_of([&] { validate_manifest(load_manifest(dir / "manifest.csv")); }) == Errc::WindowOutOfRange);
  CHECK(code_of([&] { load_recording(dir / "missing.csv"); }) == Errc::IoFailure);
  std::filesystem::remove_all(dir);
}
