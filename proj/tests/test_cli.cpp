#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphlie/basis.hpp"
#include "graphlie/cli.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/report.hpp"
#include "graphlie/serialize.hpp"

using namespace graphlie;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("graphlie_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kExampleEdges = R"({"m":3,"edges":[[1,2],[1,3]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("algebra build writes the grading") {
    const std::string path = temp_path("alg.json");
    const Run r = run({"algebra", "build", "--edges", kExampleEdges, "--k", "4", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const Json doc = Json::parse(slurp(path));
    CHECK(doc["grading"] == Json::array({3, 2, 5, 10}));
    CHECK(doc["n"] == 20);
    std::filesystem::remove(path);
  }

  TEST_CASE("algebra JSON round trip") {
    const auto a = structure_constants(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}), 3);
    const Json doc = algebra_to_json(a);
    const GradedLieAlgebra b = graded_algebra_from_json(Json::parse(doc.dump()));
    CHECK(b.algebra() == a.algebra());
    CHECK(b.grading() == a.grading());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(b.label_string(i) == a.label_string(i));
      CHECK(b.labels()[i].multidegree == a.labels()[i].multidegree);
    }
    CHECK(algebra_to_json(b) == doc);
  }

  TEST_CASE("malformed algebra JSON") {
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"n":2,"brackets":[{"i":1,"j":0,"terms":[]}]})")), DomainError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"n":2,"brackets":[{"i":0,"j":1,"terms":[{"l":5,"c":"1/1"}]}]})")),
                    DomainError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"n":2,"brackets":[{"i":0,"j":1,"terms":[{"l":1,"c":1}]}]})")),
                    DomainError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"brackets":[]})")), DomainError);
  }

  TEST_CASE("classify the square at k=2") {
    const std::string c4 = to_graph6(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    const Run r = run({"rigidity", "classify", "--graph6", c4, "--k", "2"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["verdict"] == "rigid");
    CHECK(doc["certificate"]["type"] == "h2_nil_zero");
    CHECK(doc["h2_nil"]["h2_dim"] == 0);
  }

  TEST_CASE("graphs enumerate") {
    const Run r = run({"graphs", "enumerate", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  }

  TEST_CASE("cohomology h2nil from a graph and from an algebra file") {
    const Run direct = run({"cohomology", "h2nil", "--graph6", "BW"});
    REQUIRE(direct.code == 0);
    const std::string path = temp_path("p3.json");
    REQUIRE(run({"algebra", "build", "--graph6", "BW", "--k", "2", "--out", path}).code == 0);
    const Run from_file = run({"cohomology", "h2nil", "--in", path});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == direct.out);
    CHECK(Json::parse(direct.out)["h2_dim"] == 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("deform emit") {
    const Run r = run({"deform", "emit", "--edges", kExampleEdges, "--k", "3", "--t", "2/3"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["t"] == "2/3");
    CHECK(doc["witness"]["type"] == "graded_witness");
    const auto parsed = algebra_from_json(doc["algebra"]);
    const LieAlgebra& mu_t = std::get<LieAlgebra>(parsed);
    CHECK(jacobi_report(mu_t).empty());
    CHECK(run({"deform", "emit", "--graph6", "C~", "--k", "3"}).code == 1);  // complete: no witness
  }

  TEST_CASE("exit codes for bad input") {
    CHECK(run({"algebra", "build", "--edges", "{", "--k", "2"}).code == 1);
    CHECK(run({"algebra", "build", "--graph6", "C~", "--k", "0"}).code == 1);
    CHECK(run({"algebra", "build", "--graph6", "C~", "--edges", kExampleEdges, "--k", "2"}).code == 1);
    CHECK(run({"algebra", "build", "--graph6", "C~", "--k", "2", "--bogus"}).code == 1);
    CHECK(run({"algebra", "build", "--in", temp_path("does_not_exist"), "--k", "2"}).code == 1);
    CHECK(run({"rigidity", "sweep", "--n-max", "6", "--k", "2"}).code == 1);
    CHECK(run({"rigidity", "classify", "--graph6", "@", "--k", "2"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("reports are deterministic") {
    CHECK(render_report({}, ReportFormat::Json) == "[]\n");
    const auto rows = sweep(4, 2);
    const std::string text = render_report(rows, ReportFormat::Text);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 17);
    const std::string a = temp_path("r1.json"), b = temp_path("r2.json");
    std::ostringstream unused;
    write_report(rows, a, ReportFormat::Json, unused);
    write_report(sweep(4, 2, 2), b, ReportFormat::Json, unused);
    CHECK(slurp(a) == slurp(b));
    CHECK(Json::parse(slurp(a)).size() == 17);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    CHECK_THROWS_AS(write_report(rows, "/nonexistent-dir/x.json", ReportFormat::Json, unused), DomainError);
  }
}
