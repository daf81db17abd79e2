#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "mfaces/generators.hpp"
#include "mfaces/io.hpp"

using namespace mfaces;

namespace {

std::map<std::string, std::string> as_map(const Report& r) {
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : r) m[k] = v;
  return m;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("mfaces_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("facet files round trip byte for byte") {
  for (const auto& k : {gs8(), p042(), octahedron()}) {
    const std::string text = write_complex(k, {"sample"});
    CHECK(text.rfind("# sample\n", 0) == 0);
    const auto back = read_complex(text);
    CHECK(back == k);
    CHECK(write_complex(back, {"sample"}) == text);
  }
  CHECK(write_complex(SimplicialComplex::from_facets({{3, 2, 1}, {1, 2, 4}})) == "1 2 3\n1 2 4\n");
}

TEST_CASE("parse errors name the line") {
  CHECK_THROWS_WITH_AS(read_complex("1 2 3\n1 x 3\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(read_complex("1 2 2\n"), doctest::Contains("repeated"), ParseError);
  CHECK_THROWS_WITH_AS(read_complex("0 1 2\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(read_complex("# only comments\n"), ParseError);
  CHECK(read_complex("  # c\n\n 1 2 3 \n2 3 4\n").num_facets() == 2);
}

TEST_CASE("Lutz entries") {
  const auto e = parse_lutz("manifold_2_6_1=[[1,2,3],[1,2,4],\n [1,3,4],[2,3,4]]\nfoo = [[1, 2], [2, 3], [1, 3]]\n");
  REQUIRE(e.size() == 2);
  CHECK(e[0].name == "2_6_1");
  CHECK(e[0].complex == SimplicialComplex::simplex_boundary({1, 2, 3, 4}));
  CHECK(e[1].name == "foo");
  CHECK(e[1].complex.num_facets() == 3);
  CHECK_THROWS_AS(parse_lutz("x=[[1,2],[2"), ParseError);
  CHECK_THROWS_AS(parse_lutz("no equals sign"), ParseError);
  CHECK_THROWS_AS(parse_lutz(""), ParseError);
}

TEST_CASE("load_complexes detects the format") {
  const auto facets = load_complexes(temp_file("facets.txt", "# c\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"));
  REQUIRE(facets.size() == 1);
  CHECK(facets[0].name.empty());
  const auto lutz = load_complexes(temp_file("lutz.txt", "# c\nmanifold_a=[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]\n"));
  REQUIRE(lutz.size() == 1);
  CHECK(lutz[0].name == "a");
  CHECK_THROWS_AS(load_complexes(temp_file("bad.txt", "[[1,2]]\n")), ParseError);
  CHECK_THROWS(load_complexes("/nonexistent/mfaces/file"));
}

TEST_CASE("analyze report keys") {
  const auto r = as_map(analyze(octahedron(), AnalyzeOptions{true, true}));
  CHECK(r.at("n") == "6");
  CHECK(r.at("dim") == "2");
  CHECK(r.at("f") == "1,6,12,8");
  CHECK(r.at("m") == "3,0,0");
  CHECK(r.at("flag") == "true");
  CHECK(r.at("sphere_full") == "true");
  CHECK(r.at("certificate.verdict") == "INCONCLUSIVE");
  CHECK(r.count("bound.m1_upper.satisfied") == 1);
  CHECK(r.count("link.1.m") == 1);
  CHECK(r.count("link_check.pass") == 1);

  const auto g = as_map(analyze(gs8()));
  CHECK(g.at("certificate.verdict") == "NOT_POLYTOPAL");
  CHECK(g.at("certificate.witness_vertex") == "4");
  CHECK(g.count("sphere_full") == 0);

  const auto disk = as_map(analyze(SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}}), AnalyzeOptions{false, false}));
  CHECK(disk.at("sphere_quick") == "false");
  CHECK(disk.count("sphere_reason") == 1);
  CHECK(disk.count("certificate.verdict") == 0);

  const std::string kv = render_kv({{"a", "1"}, {"b", "x"}});
  CHECK(kv == "a=1\nb=x\n");
  CHECK(render_table({{"a", "1"}}).find("a") != std::string::npos);
}
