#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "sepekr/json_io.hpp"
#include "sepekr/report.hpp"

using namespace sepekr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cmd(cli::RunConfig c) {
  std::ostringstream out, err;
  const int code = cli::run(c, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config(const std::string& cmd, int n, int r, int k) {
  cli::RunConfig c;
  c.command = cmd;
  c.n = n;
  c.r = r;
  c.k = k;
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("json round trips") {
    const SetFamily f = star_family(9, 3, 1, 2);
    CHECK(family_from_json(to_json(f)) == f);
    CHECK(to_json(f).dump() == R"({"n":9,"r":3,"k":1,"sets":[[2,4,6],[2,4,7],[2,4,8],[2,4,9],[2,5,7],[2,5,8],[2,5,9],[2,6,8],[2,6,9],[2,7,9]]})");
    const CircSet a(7, {1, 3, 5});
    CHECK(to_json(a).dump() == R"({"n":7,"elems":[1,3,5]})");
    CHECK(circset_from_json(to_json(a)) == a);
    CHECK(count_json(Count{1} << 70).is_string());
    CHECK(count_json(42).is_number_unsigned());
  }

  TEST_CASE("search result json omits diagnostics by default") {
    const SearchResult res = extremal_classes(6, 2, 1);
    const json j = to_json(res);
    CHECK_FALSE(j.contains("nodes"));
    CHECK(j["optimum"] == 3);
    CHECK(j["classes"].size() == 2);
    CHECK(to_json(res, true).contains("nodes"));
  }

  TEST_CASE("lemma report json") {
    const json j = to_json(verify_lemma_suite(star_family(7, 2, 1, 1)));
    CHECK(j["passed"] == true);
    CHECK(j["clauses"][0]["clause_id"] == "pre.intersecting");
    CHECK(j["clauses"][0].contains("witnesses"));
  }

  TEST_CASE("emit_table on an empty grid is header only") {
    std::ostringstream csv, text, js;
    emit_table({}, Format::csv, csv);
    CHECK(csv.str() == "section,n,r,k,quantity,value,expected,match,classes\n");
    emit_table({}, Format::text, text);
    CHECK(text.str() == "section  n  r  k  quantity  value  expected  match  classes\n");
    emit_table({}, Format::json, js);
    CHECK(json::parse(js.str()) == json::parse(R"({"rows":[]})"));
  }

  TEST_CASE("grid rows for (7,2,1) and (6,2,1)") {
    GridPlan plan;
    plan.ekr = {{7, 2, 1}, {6, 2, 1}};
    plan.classes = {{6, 2, 1}};
    const auto rows = run_grid(plan);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].value == "4");
    CHECK(rows[0].expected == "4");
    CHECK(rows[0].match);
    CHECK_FALSE(rows[0].classes.has_value());
    CHECK(rows[1].classes.value() >= 2);
    CHECK(rows[2].quantity == "class_count");
    CHECK(rows[2].match);
    CHECK(rows[3].quantity == "b_family_1");
    CHECK(rows[3].value == "present");
    std::ostringstream csv;
    emit_table(rows, Format::csv, csv);
    CHECK(csv.str().find("ekr,7,2,1,optimum,4,4,true,\n") != std::string::npos);
    CHECK(csv.str().find("classes,6,2,1,class_count,2,>1,true,2\n") != std::string::npos);
  }

  TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  }

  TEST_CASE("family seeds are distinct and stable") {
    CHECK(family_seed({7, 2, 1}, 0) == family_seed({7, 2, 1}, 0));
    CHECK(family_seed({7, 2, 1}, 0) != family_seed({7, 2, 1}, 1));
    CHECK(family_seed({7, 2, 1}, 0) != family_seed({8, 2, 1}, 0));
  }

  TEST_CASE("max-family prints the star") {
    const Run r = run_cmd(config("max-family", 7, 2, 1));
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "optimum 4\nformula 4\nwitness 7 2 1 : {1,3} {1,4} {1,5} {1,6}\n");
  }

  TEST_CASE("classes lists at least two at n = 2r+2") {
    auto c = config("classes", 6, 2, 1);
    c.format = Format::json;
    const Run r = run_cmd(c);
    CHECK(r.code == cli::kOk);
    CHECK(json::parse(r.out)["class_count"].get<int>() >= 2);
  }

  TEST_CASE("enumerate formats") {
    auto c = config("enumerate", 6, 2, 2);
    CHECK(run_cmd(c).out == "6 2 2 : {1,4} {2,5} {3,6}\n");
    c.format = Format::csv;
    CHECK(run_cmd(c).out == "index,elems\n0,1 4\n1,2 5\n2,3 6\n");
    c.format = Format::json;
    CHECK(json::parse(run_cmd(c).out)["sets"].size() == 3);
  }

  TEST_CASE("weighted, graph and lemmas succeed") {
    CHECK(run_cmd(config("weighted", 8, 2, 1)).code == cli::kOk);
    auto g = config("graph", 5, 2, 1);
    g.graph_kind = "kneser";
    const Run kg = run_cmd(g);
    CHECK(kg.code == cli::kOk);
    CHECK(kg.out.find("alpha 4\nchi 3\n") != std::string::npos);
    g.graph_kind = "schrijver";
    g.export_kind = "dimacs";
    CHECK(run_cmd(g).out.rfind("p edge 5 5\n", 0) == 0);
    g.export_kind = "adjacency";
    CHECK(json::parse(run_cmd(g).out)["edges"].size() == 5);
    auto l = config("lemmas", 8, 2, 1);
    l.samples = 10;
    const Run lr = run_cmd(l);
    CHECK(lr.code == cli::kOk);
    CHECK(lr.out == "passed 10 of 10\n");
  }

  TEST_CASE("lemmas on a family file") {
    const std::string path = "cli_test_family.json";
    {
      std::ofstream f(path);
      f << R"({"n":6,"r":2,"k":1,"sets":[[1,3],[2,4]]})";
    }
    auto c = config("lemmas", 6, 2, 1);
    c.family_path = path;
    c.format = Format::json;
    const Run bad = run_cmd(c);
    CHECK(bad.code == cli::kUsage);
    CHECK(json::parse(bad.out)["passed"] == false);
    {
      std::ofstream f(path);
      f << to_json(star_family(10, 3, 1, 1)).dump();
    }
    CHECK(run_cmd(c).code == cli::kOk);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run_cmd(c).code == cli::kUsage);
    std::remove(path.c_str());
    c.family_path = "does/not/exist.json";
    CHECK(run_cmd(c).code == cli::kUsage);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run_cmd(config("max-family", 3, 2, 1)).code == cli::kUsage);
    CHECK(run_cmd(config("max-family", 70, 2, 1)).code == cli::kUsage);
    CHECK(run_cmd(config("enumerate", 5, 0, 1)).code == cli::kUsage);
    CHECK(run_cmd(config("weighted", 7, 2, 1)).code == cli::kUsage);
    CHECK(run_cmd(config("nonsense", 7, 2, 1)).code == cli::kUsage);
    auto c = config("max-family", 7, 2, 1);
    c.limits.max_seconds = -1;
    CHECK(run_cmd(c).code == cli::kUsage);
  }

  TEST_CASE("resource aborts exit 3") {
    auto c = config("max-family", 20, 3, 1);
    c.limits.max_vertices = 50;
    c.vertices_set = true;
    const Run r = run_cmd(c);
    CHECK(r.code == cli::kResourceAbort);
    CHECK(r.out.empty());
    CHECK(r.err.find("resource limit") != std::string::npos);
    auto g = config("graph", 30, 10, 1);
    g.graph_kind = "kneser";
    CHECK(run_cmd(g).code == cli::kResourceAbort);
  }

  TEST_CASE("empty grid report") {
    auto c = config("report", 0, 0, 0);
    c.grid = "empty";
    c.format = Format::csv;
    const Run r = run_cmd(c);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "section,n,r,k,quantity,value,expected,match,classes\n");
  }

  TEST_CASE("output file") {
    auto c = config("enumerate", 4, 2, 1);
    c.output = "cli_test_out.txt";
    CHECK(run_cmd(c).out.empty());
    std::ifstream in(c.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "4 2 1 : {1,3} {2,4}");
    std::remove(c.output.c_str());
    c.output = "no/such/dir/out.txt";
    CHECK(run_cmd(c).code == cli::kUsage);
  }
}
