#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "mber/errors.hpp"
#include "mber/io.hpp"
#include "mber/report.hpp"

using namespace mber;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "mber_io_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

const fs::path kAssets = MBER_ASSET_DIR;

}  // namespace

TEST_CASE("csv round trip") {
  const Dataset d{{"a", "b", "c"}, SampleMatrix(3, {0b101, 0b010, 0b111})};
  const fs::path p = scratch_dir() / "roundtrip.csv";
  write_csv(p, d);
  const Dataset back = read_csv(p);
  CHECK(back.columns == d.columns);
  REQUIRE(back.data.rows() == 3);
  for (std::size_t r = 0; r < 3; ++r) CHECK(back.data.row_bits(r) == d.data.row_bits(r));
}

TEST_CASE("csv accepts blanks and crlf, rejects bad cells") {
  const auto ok = read_csv(write_file("ok.csv", "x,y\r\n 0 ,1\r\n\r\n1,1\r\n"));
  CHECK(ok.columns == std::vector<std::string>{"x", "y"});
  CHECK(ok.data.rows() == 2);
  CHECK(ok.data.row_bits(0) == 0b01);

  CHECK_THROWS_AS(read_csv(scratch_dir() / "missing.csv"), IoError);
  CHECK_THROWS_AS(read_csv(write_file("empty.csv", "")), IoError);
  CHECK_THROWS_AS(read_csv(write_file("headeronly.csv", "x,y\n")), IoError);
  CHECK_THROWS_AS(read_csv(write_file("ragged.csv", "x,y\n0,1\n0\n")), IoError);
  try {
    read_csv(write_file("badcell.csv", "x,y\n0,2\n"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find("column 2") != std::string::npos);
  }
}

TEST_CASE("model files in cell form") {
  const ModelSpec model = load_model(kAssets / "models/pairwise_independent.json");
  CHECK(model.table.dim() == 3);
  CHECK(model.table.at(0) == 0.15);
  CHECK(model.params.at(0b111) == doctest::Approx(0.15).epsilon(1e-13));
  CHECK(model.columns == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("model files in layered form") {
  const ModelSpec model = load_model(kAssets / "models/layered_trivariate.json");
  CHECK(model.table.dim() == 3);
  CHECK(model.table.at(0b000) == 0.1);
  CHECK(model.table.at(0b011) == 0.2);
  CHECK(model.table.at(0b111) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(model.params.singleton(1) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("model file validation") {
  CHECK_THROWS_AS(load_model(scratch_dir() / "absent.json"), IoError);
  CHECK_THROWS_AS(load_model(write_file("syntax.json", "{ nope")), IoError);
  CHECK_THROWS_AS(load_model(write_file("no_n.json", R"({"p": [1.0]})")), ValidationError);
  CHECK_THROWS_AS(
      load_model(write_file("both.json", R"({"n":1, "p":[1.0], "layers":[]})")),
      ValidationError);
  CHECK_THROWS_AS(load_model(write_file("neither.json", R"({"n":1})")), ValidationError);
  CHECK_THROWS_AS(load_model(write_file("badsum.json", R"({"n":1, "p":[0.5,0.2]})")),
                  ValidationError);
  CHECK_THROWS_AS(
      load_model(write_file("badpat.json",
                            R"({"n":2, "layers":[{"ones":1, "p":{"012":0.1}}]})")),
      ValidationError);
  CHECK_THROWS_AS(
      load_model(write_file("dupw.json",
                            R"({"n":2, "layers":[{"ones":0,"p":{}},{"ones":0,"p":{}}]})")),
      ValidationError);
  CHECK_THROWS_AS(
      load_model(write_file("badcols.json", R"({"n":2, "p":[0.25,0.25,0.25,0.25],
                                                "columns":["only_one"]})")),
      ValidationError);
}

TEST_CASE("machine output round-trips doubles exactly") {
  const double awkward = 0.1 + 0.2;  // 0.30000000000000004
  const ProbabilityTable t(1, {awkward, 1.0 - awkward});
  const auto doc = nlohmann::json::parse(machine_probabilities(t, {"z"}));
  CHECK(doc["p"][0].get<double>() == awkward);
  CHECK(doc["p"][1].get<double>() == 1.0 - awkward);
  CHECK(doc["columns"][0] == "z");

  const auto params = dependence_params(t);
  const DependenceMeasures measures(params);
  const auto model = nlohmann::json::parse(machine_model(t, params, measures, {}));
  CHECK(model["dependence_params"][0]["subset"] == nlohmann::json::array({1}));
  CHECK(model["dependence_params"][0]["value"].get<double>() == awkward);
}

TEST_CASE("fixed-width formatting") {
  CHECK(fixed4(0.123456) == "0.1235");
  CHECK(fixed4(-0.3055555) == "-0.3056");
  CHECK(fixed4(-0.00004) == "0.0000");
  CHECK(trimmed4(0.12) == "0.12");
  CHECK(trimmed4(0.2800) == "0.28");
  CHECK(trimmed4(0.0) == "0");
  CHECK(trimmed4(1.0) == "1");
}
