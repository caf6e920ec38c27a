#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "horo/errors.hpp"
#include "horo/harness/config.hpp"
#include "horo/harness/plots.hpp"
#include "horo/harness/report.hpp"
#include "horo/harness/suites.hpp"

using namespace horo;
using namespace horo::harness;

TEST_CASE("config keys mirror the CLI flags") {
  RunConfig c;
  c.set("seed", "17");
  c.set("grid-beta", "64");
  c.set("tol-slice", "2e-3");
  c.set("format", "csv");
  CHECK(c.seed == 17);
  CHECK(c.grids.n_beta == 64);
  CHECK(c.tolerance("slice", 1.0) == 2e-3);
  CHECK(c.tolerance("missing", 0.5) == 0.5);
  CHECK(c.format == Format::Csv);
  CHECK_THROWS_AS(c.set("no-such-key", "1"), ConfigError);
  CHECK_THROWS_AS(c.set("grid-tau", "12.5"), ConfigError);
  CHECK_THROWS_AS(c.set("format", "xml"), ConfigError);
  c.set("tol-kappa", "-1");
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("config file") {
  const std::string path = "horo_test_config.txt";
  {
    std::ofstream out(path);
    out << "# comment\nseed = 99\n\ngrid-lambda = 256  # trailing\n";
  }
  RunConfig c;
  load_config_file(c, path);
  CHECK(c.seed == 99);
  CHECK(c.grids.lambda.n == 256);
  {
    std::ofstream out(path);
    out << "seed 99\n";
  }
  CHECK_THROWS_AS(load_config_file(c, path), ConfigError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config_file(c, "does/not/exist"), ConfigError);
}

TEST_CASE("report records follow pass iff residual <= tolerance") {
  VerificationReport r;
  r.add("b", "udu", 1.0, 1.0, 1e-3, 1e-3);
  r.add("a", "udu", 1.0, 2.0, 2e-3, 1e-3);
  r.add_error("c", "udu", std::string(kTailErrorPrefix) + "edge", 1e-3);
  CHECK(r.find("b")->pass);
  CHECK_FALSE(r.find("a")->pass);
  CHECK_FALSE(r.find("c")->pass);
  CHECK_FALSE(r.find("c")->residual.has_value());
  CHECK(r.failures() == 2);
  CHECK(has_tail_error(r));
  r.normalize();
  CHECK(r.records.front().name == "a");
  const auto j = to_json(r);
  CHECK(j["schema_version"] == 1);
  CHECK(j["records"][2]["residual"].is_null());
}

TEST_CASE("every record anchor is registered") {
  RunConfig c;
  for (const std::string s : {"structure", "geometry", "spd"}) {
    const auto r = run_suite(s, c);
    for (const auto& rec : r.records) {
      INFO(rec.name);
      CHECK(is_known_anchor(rec.anchor));
    }
  }
  CHECK_FALSE(is_known_anchor("made-up"));
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  RunConfig c;
  auto a = run_suite("geometry", c), b = run_suite("geometry", c);
  a.timestamp = b.timestamp = "";
  CHECK(to_json_string(a) == to_json_string(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("halved truncation surfaces as a tail error") {
  RunConfig c;
  c.nbar.truncation *= 0.5;
  const auto r = run_calibrate(c);
  CHECK_FALSE(r.all_pass());
  CHECK(has_tail_error(r));
}

TEST_CASE("horocycle family plot keeps tangency") {
  RunConfig c;
  const auto p = make_plot("horocycle-family", c);
  REQUIRE(p.columns.back() == "tangency_defect");
  CHECK(p.rows.size() == 9);
  for (const auto& row : p.rows) CHECK(row.back() < 1e-12);
  CHECK(plot_to_csv(p).rfind("#", 0) == 0);
  CHECK_THROWS_AS(make_plot("nothing", c), ConfigError);
}
