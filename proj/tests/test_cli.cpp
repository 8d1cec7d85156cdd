#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "dwell/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dwell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"splitting", "--nope", "1"}).code == 2);
  CHECK(run({"splitting", "--family", "cubic"}).code == 2);
  CHECK(run({"sweep", "--m", "2", "--alpha-min", "0", "--alpha-max", "0", "--steps", "4"}).code == 2);
  CHECK(run({"sweep", "--m", "2", "--alpha-min", "0", "--alpha-max", "1", "--steps", "1"}).code == 2);
  CHECK(run({"spectrum", "--family", "asym", "--method", "spectral"}).code == 2);
  CHECK(run({"series", "--family", "quartic"}).code == 2);
  CHECK(run({"series", "--m", "2", "--order", "40", "--N", "32"}).code == 2);
  CHECK(run({"characterize", "--family", "sym", "--m", "-1"}).code == 2);
  const Result r = run({"sweep", "--alpha-min", "1", "--alpha-max", "0", "--steps", "3"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("numeric failures exit 3") {
  const Result r = run({"spectrum", "--family", "quartic", "--a", "-1", "--b", "0", "--L", "2", "--k", "3",
                        "--grid", "400"});
  CHECK(r.code == 3);
  CHECK(r.err.find("increase L") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("splitting with both methods reports the published deviation") {
  const Result r = run({"splitting", "--family", "sym", "--m", "2", "--alpha", "5", "--method", "both",
                        "--richardson"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"method", "t", "est_error", "converged", "reference_t", "deviation"});
  CHECK(rows[1][0] == "spectral");
  CHECK(rows[2][0] == "fdm");
  const double ts = std::stod(rows[1][1]);
  const double tf = std::stod(rows[2][1]);
  CHECK(std::abs(ts - tf) <= 1e-6 * ts);
  CHECK(std::abs(std::stod(rows[1][4]) - 11.01326187) <= 0.5e-8 + 1e-12);
  CHECK(std::stod(rows[1][5]) == doctest::Approx(ts - std::stod(rows[1][4])));
}

TEST_CASE("splitting without a published reference leaves the columns blank") {
  const Result r = run({"splitting", "--m", "3", "--alpha", "5"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][4].empty());
  CHECK(rows[1][5].empty());
}

TEST_CASE("series prints R0, R1, R2 with the R0 discrepancy note") {
  const Result r = run({"series", "--m", "2", "--order", "2"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "l");
  CHECK(rows[1][3] == "6");
  CHECK(rows[1][2] == "12");
  CHECK(rows[1][5] == "12");
  CHECK(rows[2][3] == "-0.190476190476");
  CHECK(rows[3][5] == "-0.001374287");
  CHECK(rows[1][6].find("= 6") != std::string::npos);
  CHECK(rows[1][6].find("E1(0) alone = 12") != std::string::npos);
}

TEST_CASE("characterize") {
  const Result single = run({"characterize", "--family", "sym", "--m", "2", "--alpha", "3"});
  REQUIRE(single.code == 0);
  auto rows = testcsv::parse(single.out);
  CHECK(rows[1][0] == "SingleWell");

  const Result dw = run({"characterize", "--family", "sym", "--m", "2", "--alpha", "5"});
  rows = testcsv::parse(dw.out);
  CHECK(rows[1][0] == "DoubleWell");
  CHECK(rows[1][6] == "3.5");
  CHECK(rows[1][8] == "0.75");

  const Result asym = run({"characterize", "--family", "asym", "--beta", "2.2360679775", "--m", "2", "--s", "0"});
  rows = testcsv::parse(asym.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][2] == "min");
  CHECK(rows[2][2] == "max");
}

TEST_CASE("sweep over the double-well regime") {
  const Result r = run({"sweep", "--m", "2", "--alpha-min", "4", "--alpha-max", "10", "--steps", "4",
                        "--method", "spectral"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "barrier", "t", "t_series_order2", "abs_diff"});
  double prev = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double b = std::stod(rows[i][1]);
    CHECK(b > prev);
    prev = b;
  }
  CHECK(rows[1][0] == "4");
  CHECK(rows[4][0] == "10");
}

TEST_CASE("sweep at small alpha: abs_diff is O(alpha^3)") {
  const Result r = run({"sweep", "--m", "2", "--alpha-min", "0.05", "--alpha-max", "0.4", "--steps", "4"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][1].empty());
    const double a = std::stod(rows[i][0]);
    const double d = std::stod(rows[i][4]);
    CHECK(d / (a * a * a) > 1e-5);
    CHECK(d / (a * a * a) < 5e-5);
  }
}

TEST_CASE("sweep caution beyond the series range") {
  const Result r = run({"sweep", "--m", "2", "--alpha-min", "1", "--alpha-max", "20", "--steps", "2", "--N", "32"});
  CHECK(r.code == 0);
  CHECK(r.err.find("caution") != std::string::npos);
}

TEST_CASE("spectrum rows") {
  const Result r = run({"spectrum", "--m", "2", "--alpha", "0", "--k", "3", "--method", "both", "--grid", "2000",
                        "--richardson"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[1][0] == "spectral");
  CHECK(rows[1][2] == "6");
  CHECK(rows[4][0] == "fdm");
  CHECK(std::abs(std::stod(rows[5][2]) - 12.0) <= 1e-5);
}

TEST_CASE("sample") {
  const Result r = run({"sample", "--family", "sym", "--m", "2", "--alpha", "5", "--points", "3"});
  REQUIRE(r.code == 0);
  const auto rows = testcsv::parse(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][1] == "4.75");
  CHECK(rows[2][1] == "3.5");
  CHECK(rows[3][1] == "4.75");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"sweep", "--m", "2", "--alpha-min", "1", "--alpha-max", "6", "--steps", "5",
                                      "--method", "fdm", "--grid", "400"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> json{"series", "--m", "2", "--format", "json"};
  CHECK(run(json).out == run(json).out);
}

TEST_CASE("JSON carries the same values as CSV") {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"sweep", "--m", "2", "--alpha-min", "0.5", "--alpha-max", "8", "--steps", "5"},
           {"series", "--m", "2", "--order", "4"},
           {"characterize", "--m", "2", "--alpha", "7"},
           {"splitting", "--m", "2", "--alpha", "10", "--method", "both", "--grid", "1000"}}) {
    const Result csv = run(base);
    auto args = base;
    args.insert(args.end(), {"--format", "json"});
    const Result js = run(args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto rows = testcsv::parse(csv.out);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.contains("params"));
    CHECK(doc.contains("method"));
    REQUIRE(doc["rows"].size() + 1 == rows.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto& obj = doc["rows"][r - 1];
      for (std::size_t c = 0; c < rows[0].size(); ++c) {
        const auto& cell = obj.at(rows[0][c]);
        const std::string& text = rows[r][c];
        if (cell.is_null()) {
          CHECK((text.empty() || text == "inf" || text == "-inf"));
        } else if (cell.is_number()) {
          CHECK(cell.get<double>() == std::stod(text));
        } else {
          CHECK(cell.get<std::string>() == text);
        }
      }
    }
  }
}

TEST_CASE("--out writes to a file") {
  const std::string path = "dwell_cli_out_test.csv";
  const Result r = run({"sample", "--m", "2", "--alpha", "5", "--points", "3", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"sample", "--m", "2", "--alpha", "5", "--points", "3"}).out);
  std::remove(path.c_str());
}
