#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <vca/io.hpp>

#include "commands.hpp"

using nlohmann::json;
using vca::CoverPoint;
using vca::ExponentVector;

namespace {

const std::string kData = VCA_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result vca_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = vca::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Io, ComplexFromJson) {
  auto c = vca::io::complex_from_json(json::parse(R"({"n": 3, "facets": [[2, 3], [1, 2]], "weights": [2, 1]})"));
  EXPECT_EQ(c.facets(), (std::vector<vca::Facet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(c.weights(), (std::vector<vca::Int>{1, 2}));
  auto canonical = vca::io::complex_from_json(json::parse(R"({"n": 2, "facets": [[1, 2]]})"));
  EXPECT_TRUE(canonical.has_canonical_weights());
  EXPECT_EQ(vca::io::complex_from_json(vca::io::complex_to_json(c)), c);
}

TEST(Io, ComplexErrors) {
  EXPECT_THROW(vca::io::complex_from_json(json::parse(R"({"facets": [[1]]})")), vca::InvalidInput);
  EXPECT_THROW(vca::io::complex_from_json(json::parse(R"({"n": 2, "facets": [["a"]]})")), vca::InvalidInput);
  EXPECT_THROW(vca::io::complex_from_json(json::parse(R"({"n": 2, "facets": [[1], [1, 2]]})")), vca::InvalidComplex);
  EXPECT_THROW(vca::io::read_json_file(data("does_not_exist.json")), vca::InvalidInput);
}

TEST(Io, IdealRoundTrip) {
  auto i = vca::io::ideal_from_json(vca::io::read_json_file(data("triangle_cover_ideal.json")));
  EXPECT_EQ(i.size(), 3u);
  EXPECT_EQ(vca::io::ideal_from_json(vca::io::ideal_to_json(i)), i);
  EXPECT_THROW(vca::io::ideal_from_json(json::parse(R"({"n": 2, "gens": [[1]]})")), vca::InvalidInput);
  EXPECT_THROW(vca::io::ideal_from_json(json::parse(R"({"n": 2, "gens": [[1, -1]]})")), vca::InvalidInput);
}

TEST(Io, Rendering) {
  EXPECT_EQ(vca::io::render_monomial({1, 0, 2}), "x1*x3^2");
  EXPECT_EQ(vca::io::render_monomial({0, 0}), "1");
  EXPECT_EQ(vca::io::render_cover_point({{1, 1, 1}, 2}), "x1*x2*x3*t^2");
  EXPECT_EQ(vca::io::render_cover_point({{0, 0}, 1}), "t");
  EXPECT_EQ(vca::io::render_cover_point({{0, 1}, 0}), "x2");
  EXPECT_EQ(vca::io::render_ideal(vca::MonomialIdeal::zero(2)), "(0)");
  EXPECT_EQ(vca::io::render_ideal(vca::MonomialIdeal(2, {{1, 0}, {0, 1}})), "(x1, x2)");
}

TEST(Io, ParseCover) {
  EXPECT_EQ(vca::io::parse_cover("1,2,3;4"), (CoverPoint{{1, 2, 3}, 4}));
  EXPECT_THROW(vca::io::parse_cover("1,2,3"), vca::InvalidInput);
  EXPECT_THROW(vca::io::parse_cover("1,x;2"), vca::InvalidInput);
  EXPECT_THROW(vca::io::parse_cover("1,-1;2"), vca::InvalidInput);
  EXPECT_THROW(vca::io::parse_cover("1,1;-2"), vca::InvalidInput);
}

TEST(CliBasis, TriangleText) {
  auto r = vca_run({"basis", data("triangle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1*x2*t\nx1*x3*t\nx2*x3*t\nx1*x2*x3*t^2\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliBasis, SquareText) {
  auto r = vca_run({"basis", data("square.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1*x3*t\nx2*x4*t\n");
}

TEST(CliBasis, FamilyCountsAndUnits) {
  auto r = vca_run({"basis", "--family", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 45u);
  EXPECT_EQ(lines(r.out).back(), "x1^2*x2^2*x3*x4*x5*x6*x7*t^7");
  auto all = vca_run({"basis", "--family", "2", "2", "--all"});
  EXPECT_EQ(lines(all.out).size(), 52u);
}

TEST(CliBasis, JsonRoundTripVerifies) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"basis", data("triangle.json"), "--json"},
           {"basis", data("square.json"), "--json"},
           {"basis", data("weighted_edge.json"), "--json"},
           {"basis", "--family", "2", "2", "--json"}}) {
    auto r = vca_run(args);
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    vca::WeightedComplex c = args[1] == "--family" ? vca::counterexample_family(2, 2).complex
                                                   : vca::io::complex_from_json(vca::io::read_json_file(args[1]));
    EXPECT_EQ(j.at("n"), c.n());
    EXPECT_FALSE(j.at("truncated").get<bool>());
    for (const auto& item : j.at("basis")) {
      CoverPoint p = vca::io::cover_point_from_json(item);
      EXPECT_TRUE(vca::is_cover(c, p.a, p.k));
      if (p.k >= 2) {
        EXPECT_FALSE(vca::decompose(c, p.a, p.k).has_value());
      }
      for (std::size_t i = 0; i < p.a.size(); ++i) {
        if (p.a[i] == 0) continue;
        auto lower = p.a;
        --lower[i];
        EXPECT_FALSE(vca::is_cover(c, lower, p.k));
      }
    }
  }
}

TEST(CliBasis, Summary) {
  json tri = json::parse(vca_run({"basis", data("triangle.json"), "--json"}).out).at("summary");
  EXPECT_EQ(tri.at("max_degree"), 2);
  EXPECT_EQ(tri.at("standard_graded"), false);
  EXPECT_EQ(tri.at("gorenstein"), true);
  EXPECT_EQ(tri.at("bound_n"), "(n+1)^((n+3)/2)/2^n satisfied");
  json sq = json::parse(vca_run({"basis", data("square.json"), "--json"}).out).at("summary");
  EXPECT_EQ(sq.at("standard_graded"), true);
}

TEST(CliBasis, CapAndErrors) {
  auto capped = vca_run({"basis", data("triangle.json"), "--cap", "1"});
  EXPECT_EQ(capped.code, 3);
  EXPECT_EQ(lines(capped.out).size(), 3u);
  EXPECT_FALSE(capped.err.empty());
  EXPECT_EQ(vca_run({"basis", data("bad_comparable.json")}).code, 2);
  EXPECT_NE(vca_run({"basis", data("bad_comparable.json")}).err.find("comparable"), std::string::npos);
  EXPECT_EQ(vca_run({"basis", data("missing.json")}).code, 2);
  EXPECT_EQ(vca_run({"basis"}).code, 1);
  EXPECT_EQ(vca_run({"basis", data("triangle.json"), "--family", "2", "2"}).code, 1);
  EXPECT_EQ(vca_run({"frobnicate"}).code, 1);
  EXPECT_EQ(vca_run({}).code, 1);
  EXPECT_EQ(vca_run({"basis", data("triangle.json"), "--cap", "0"}).code, 1);
}

TEST(CliBasis, DeterministicAcrossRunsAndThreads) {
  auto a = vca_run({"basis", "--family", "2", "2", "--json"});
  auto b = vca_run({"basis", "--family", "2", "2", "--json", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, vca_run({"basis", "--family", "2", "2", "--json"}).out);
}

TEST(CliSymbolic, Examples) {
  auto two = vca_run({"symbolic", data("triangle_cover_ideal.json"), "-n", "2"});
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("x1*x2*x3"), std::string::npos);
  auto one = vca_run({"symbolic", data("triangle_cover_ideal.json"), "-n", "1"});
  EXPECT_EQ(one.out, "(x1*x2, x1*x3, x2*x3)\n");
  auto wrt = vca_run({"symbolic", data("triangle_cover_ideal.json"), "-n", "2", "--wrt", data("maximal_ideal.json")});
  EXPECT_EQ(wrt.code, 0);
  EXPECT_EQ(wrt.out, two.out);
  auto bad = vca_run({"symbolic", data("non_squarefree.json"), "-n", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("--wrt"), std::string::npos);
  EXPECT_EQ(vca_run({"symbolic", data("non_squarefree.json"), "-n", "2", "--wrt", data("maximal_ideal.json")}).code, 0);
}

TEST(CliPowerAndCompare, Examples) {
  auto p = vca_run({"power", data("triangle_cover_ideal.json"), "-n", "2", "--json"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(json::parse(p.out).at("gens").size(), 6u);
  auto c = vca_run({"compare", data("triangle_cover_ideal.json"), "-n", "2"});
  EXPECT_EQ(c.out, "proper, witness x1*x2*x3\n");
  EXPECT_EQ(vca_run({"compare", data("triangle_cover_ideal.json"), "-n", "1"}).out, "equal\n");
  EXPECT_EQ(vca_run({"compare", data("non_squarefree.json"), "-n", "2"}).code, 2);
}

TEST(CliCheck, Verdicts) {
  auto std_tri = vca_run({"check", "standard", data("triangle.json")});
  EXPECT_EQ(std_tri.out, "standard graded: false\nwitness: x1*x2*x3*t^2\n");
  json j = json::parse(vca_run({"check", "standard", data("triangle.json"), "--json"}).out);
  EXPECT_EQ(j.at("witness").at("a"), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(j.at("witness").at("k"), 2);
  EXPECT_EQ(vca_run({"check", "standard", data("square.json")}).out, "standard graded: true\n");
  EXPECT_EQ(vca_run({"check", "gorenstein", data("triangle.json")}).out, "gorenstein: true\n");
  auto mixed = json::parse(vca_run({"check", "gorenstein", data("mixed.json"), "--json"}).out);
  EXPECT_EQ(mixed.at("result"), true);
  EXPECT_EQ(mixed.at("stripped").at(0).at("vertex"), 1);
  auto bip = vca_run({"check", "bipartite", data("triangle.json")});
  EXPECT_EQ(bip.code, 0);
  EXPECT_NE(bip.out.find("odd cycle"), std::string::npos);
  EXPECT_EQ(vca_run({"check", "bipartite", data("square.json")}).out, "bipartite: true\nU: 1 3\nV: 2 4\n");
  EXPECT_EQ(vca_run({"check", "bipartite", data("simplex.json")}).code, 2);
  auto b = json::parse(vca_run({"check", "bound", "--family", "2", "2", "--json"}).out);
  EXPECT_EQ(b.at("max_degree"), 7);
  EXPECT_EQ(b.at("result"), true);
  EXPECT_EQ(vca_run({"check", "sideways", data("triangle.json")}).code, 1);
}

TEST(CliDecompose, Examples) {
  auto ind = vca_run({"decompose", data("triangle.json"), "--cover", "1,1,1;2"});
  EXPECT_EQ(ind.code, 0);
  EXPECT_EQ(ind.out, "indecomposable (exhaustive, budget=100000000)\n");

  auto dec = vca_run({"decompose", data("triangle.json"), "--cover", "2,2,2;2", "--json"});
  ASSERT_EQ(dec.code, 0);
  json j = json::parse(dec.out);
  ASSERT_FALSE(j.at("indecomposable").get<bool>());
  auto c = vca::io::complex_from_json(vca::io::read_json_file(data("triangle.json")));
  CoverPoint b = vca::io::cover_point_from_json(j.at("witness").at(0));
  CoverPoint rest = vca::io::cover_point_from_json(j.at("witness").at(1));
  EXPECT_TRUE(vca::is_cover(c, b.a, b.k));
  EXPECT_TRUE(vca::is_cover(c, rest.a, rest.k));
  EXPECT_EQ(b.k + rest.k, 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(b.a[i] + rest.a[i], 2);

  auto fam = vca_run({"decompose", "--family", "4", "2", "--json"});
  EXPECT_EQ(fam.code, 0);
  json f = json::parse(fam.out);
  EXPECT_TRUE(f.at("indecomposable").get<bool>());
  EXPECT_EQ(f.at("cover").at("k"), 11);
}

TEST(CliDecompose, ErrorsAndBudget) {
  EXPECT_EQ(vca_run({"decompose", data("triangle.json"), "--cover", "1,1,0;2"}).code, 2);
  EXPECT_EQ(vca_run({"decompose", data("triangle.json"), "--cover", "1,1;2"}).code, 2);
  EXPECT_EQ(vca_run({"decompose", data("triangle.json"), "--cover", "1,1,1;1"}).code, 2);
  EXPECT_EQ(vca_run({"decompose", data("triangle.json")}).code, 1);
  EXPECT_EQ(vca_run({"decompose", data("triangle.json"), "--cover", "2,2,2;2", "--budget", "5"}).code, 3);
  ::setenv("VCA_BUDGET", "5", 1);
  auto env = vca_run({"decompose", data("triangle.json"), "--cover", "2,2,2;2"});
  ::setenv("VCA_BUDGET", "junk", 1);
  auto junk = vca_run({"decompose", data("triangle.json"), "--cover", "2,2,2;2"});
  ::unsetenv("VCA_BUDGET");
  EXPECT_EQ(env.code, 3);
  EXPECT_EQ(junk.code, 2);
}

TEST(CliSplit, Examples) {
  auto bip = vca_run({"split", data("square.json"), "--cover", "2,2,2,2;2"});
  EXPECT_EQ(bip.code, 0);
  // both parts are 1-covers of the square and sum back to (2,2,2,2)
  EXPECT_EQ(bip.out, "x1*x2*x3*x4*t\nx1*x2*x3*x4*t\n");
  auto odd = vca_run({"split", data("triangle.json"), "--cover", "3,3,3;3", "--json"});
  EXPECT_EQ(odd.code, 0);
  json j = json::parse(odd.out);
  EXPECT_EQ(j.at("method"), "order2");
  EXPECT_EQ(j.at("parts").at(0).at("k"), 2);
  EXPECT_EQ(j.at("parts").at(1).at("k"), 1);
  EXPECT_EQ(vca_run({"split", data("triangle.json"), "--cover", "1,1,1;2"}).code, 2);
  EXPECT_EQ(vca_run({"split", data("simplex.json"), "--cover", "1,1,1;1"}).code, 2);
}

TEST(CliMisc, SkeletonFamilyBoundRepro) {
  EXPECT_EQ(vca_run({"skeleton", "3", "1"}).out, "x1*x2*t\nx1*x3*t\nx2*x3*t\nx1*x2*x3*t^2\n");
  EXPECT_EQ(vca_run({"skeleton", "3", "2"}).code, 2);

  auto fam = vca_run({"family", "2", "2", "--json"});
  ASSERT_EQ(fam.code, 0);
  json f = json::parse(fam.out);
  EXPECT_EQ(vca::io::complex_from_json(f), vca::counterexample_family(2, 2).complex);
  EXPECT_EQ(f.at("cover").at("k"), 7);
  EXPECT_EQ(vca_run({"family", "1", "2"}).code, 2);

  auto b = vca_run({"bound", "3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("largest admissible 7"), std::string::npos);
  EXPECT_NE(b.out.find("largest admissible 2"), std::string::npos);

  auto r = vca_run({"repro"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(lines(r.out).size(), 10u);
}

TEST(CliMisc, HelpAndVersion) {
  auto h = vca_run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("basis"), std::string::npos);
  EXPECT_EQ(vca_run({"--version"}).code, 0);
}
