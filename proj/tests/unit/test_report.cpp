#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "fixtures.hpp"
#include "semiperiodic/expansion.hpp"
#include "semiperiodic/report/catalog.hpp"
#include "semiperiodic/report/report.hpp"
#include "semiperiodic/report/verify.hpp"

using namespace semiperiodic;
using namespace semiperiodic::report;
using fixtures::pi;

TEST_CASE("catalog closed forms agree with quadrature up to m = 40") {
  for (const SpectralConfig& cfg : {fixtures::unit_config(), SpectralConfig(-1, 1, 3), SpectralConfig(0.2, 5.0, 0.5)}) {
    for (const std::string name : {"sawtooth", "mode:3:cos", "mode:7:sin", "offset-cosine"}) {
      const auto entry = make_catalog_entry(name, cfg);
      if (!entry.has_closed_form()) continue;
      const auto quad = classical_coeffs(entry.handle, 40, cfg);
      const auto closed = closed_form_coeffs(entry, cfg, 40);
      CHECK((quad.cos_coeffs() - closed.cos_coeffs()).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((quad.sin_coeffs() - closed.sin_coeffs()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("catalog entries") {
  const auto cfg = fixtures::unit_config();
  const auto saw = make_catalog_entry("sawtooth", cfg);
  CHECK(saw.known_ladder == 1);
  CHECK(std::real(saw.handle(0.25)) == doctest::Approx(0.25 - pi / 2));
  const auto oracle = fixtures::sawtooth_coeffs(cfg, 10);
  const auto closed = closed_form_coeffs(saw, cfg, 10);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(closed.cos_coeffs()(i) - oracle.cos_coeffs()(i)) <= 1e-15);

  const auto off = make_catalog_entry("offset-cosine", cfg);
  CHECK(off.known_ladder == 0);
  CHECK(std::real(off.handle(0.0)) == doctest::Approx(-pi / 2));

  const auto mode = make_catalog_entry("mode:4:sin", cfg);
  CHECK_FALSE(mode.known_ladder.has_value());
  CHECK(std::abs(mode.handle(0.3) - std::sqrt(2 / pi) * std::sin(7 * 0.3)) <= 1e-15);

  const auto syn = make_catalog_entry("synthetic:3.5", cfg);
  CHECK(syn.coefficient_defined);
  const auto c = closed_form_coeffs(syn, cfg, 8);
  for (int m = 1; m <= 8; ++m) CHECK(std::abs(c.cos_coeffs()(m - 1)) == doctest::Approx(std::pow(eigenvalue(cfg, m), -1.75)));

  for (const std::string bad : {"nope", "mode:0:cos", "mode:2:tan", "mode:x:cos", "synthetic:", "synthetic:abc"}) {
    CHECK_THROWS_AS(make_catalog_entry(bad, cfg), SpectralError);
  }
  CHECK(catalog_names().size() >= 4);
}

TEST_CASE("double formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  Report r;
  r.kind = "x";
  r.rows.push_back(Record().set("v", std::numeric_limits<double>::infinity()));
  CHECK(to_json(r).find("\"v\": \"inf\"") != std::string::npos);
  // round trip
  for (double v : {pi, 1e-300, -7.25e17, 5.7254490436147725}) CHECK(std::stod(format_double(v)) == v);
}

namespace {

Report sample() {
  Report r;
  r.kind = "coeffs";
  r.config = fixtures::unit_config();
  r.params.set("function", "sa\"w").set("N", 2);
  r.rows.push_back(Record().set("m", 1).set("a", Value(Complex(-1.5, 0.25))).set("ok", true));
  r.rows.push_back(Record().set("m", 2).set("extra", 0.5));
  r.pass = 1;
  return r;
}

}  // namespace

TEST_CASE("JSON layout") {
  const std::string json = to_json(sample());
  CHECK(json.find("\"kind\": \"coeffs\"") != std::string::npos);
  CHECK(json.find("\"config\": {\"a\": 0, \"b\": 3.1415926535897931, \"k\": 1}") != std::string::npos);
  CHECK(json.find("\"function\": \"sa\\\"w\"") != std::string::npos);
  CHECK(json.find("\"a\": {\"re\": -1.5, \"im\": 0.25}") != std::string::npos);
  CHECK(json.find("\"ok\": true") != std::string::npos);
  CHECK(json.find("\"summary\": {\"pass\": 1, \"fail\": 0}") != std::string::npos);
  CHECK(json.find("\"kind\"") < json.find("\"config\""));
  CHECK(json.find("\"config\"") < json.find("\"params\""));
  CHECK(json.find("\"params\"") < json.find("\"rows\""));
  CHECK(json.find("\"rows\"") < json.find("\"summary\""));
  CHECK(to_json(sample()) == json);
}

TEST_CASE("CSV layout") {
  const std::string csv = to_csv(sample());
  CHECK(csv == "m,a_re,a_im,ok,extra\n1,-1.5,0.25,true,\n2,,,,0.5\n");
}

TEST_CASE("verify suites pass on several configurations") {
  const auto names = suite_names();
  CHECK(names.size() >= 10);
  for (const SpectralConfig& cfg : {fixtures::unit_config(), SpectralConfig(0, 2 * pi, 0.5), SpectralConfig(-1, 1, 3)}) {
    const auto results = run_suite("all", cfg, VerifyOptions{});
    CHECK(results.size() >= names.size());
    for (const auto& r : results) {
      INFO(r.suite << " / " << r.check << " = " << r.value << " (tol " << r.tolerance << ")");
      CHECK(r.pass);
    }
  }
  VerifyOptions only2;
  only2.n = 2;
  only2.modes = 8;
  for (const auto& r : run_suite("fundamental-relation", fixtures::unit_config(), only2)) CHECK(r.pass);
  CHECK_THROWS_AS(run_suite("nope", fixtures::unit_config(), {}), SpectralError);
}
