#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "xcl/canonical.hpp"
#include "xcl/extremal.hpp"
#include "xcl/graph.hpp"
#include "xcl/graph6.hpp"

using namespace xcl;

TEST_CASE("complete and empty graphs", "[graph]") {
  CHECK(size(complete(4)) == 6);
  CHECK(complete(0).order() == 0);
  for (int v = 0; v < 8; ++v) CHECK(degree(complete(8), v) == 7);
  CHECK(size(empty(3)) == 0);
  CHECK(complement(empty(3)) == complete(3));
  CHECK(complement(complete(5)) == empty(5));
  CHECK(complete(64).order() == 64);
  CHECK(size(complete(64)) == 64 * 63 / 2);
  CHECK_THROWS_MATCHES(complete(65), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::kOrderOverflow; }));
  CHECK_THROWS_AS(empty(65), Error);
}

TEST_CASE("join and disjoint union", "[graph]") {
  const Graph split = join(complete(3), empty(4));
  CHECK(size(split) == 3 + 3 * 4);
  CHECK(join(complete(2), empty(3)).order() == 5);
  CHECK(size(join(complete(2), empty(3))) == 7);
  CHECK(are_isomorphic(join(complete(2), empty(3)), build_F(5, 4, 2)));

  const Graph two_triangles = disjoint_union(complete(3), complete(3));
  CHECK(two_triangles.order() == 6);
  CHECK(size(two_triangles) == 6);
  CHECK_FALSE(two_triangles.has_edge(0, 3));
  CHECK(disjoint_union(cycle(5), empty(0)) == cycle(5));
  CHECK_THROWS_AS(disjoint_union(complete(40), complete(25)), Error);
  CHECK_THROWS_AS(join(empty(32), empty(33)), Error);
}

TEST_CASE("edge deletion", "[graph]") {
  const Graph p3 = delete_edge(complete(3), 0, 1);
  CHECK(size(p3) == 2);
  CHECK(are_isomorphic(p3, path(3)));
  CHECK_THROWS_MATCHES(delete_edge(p3, 0, 1), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::kNotAnEdge; }));
}

TEST_CASE("degrees and size", "[graph]") {
  const Graph f = build_F(15, 14, 7);
  CHECK(min_degree(f) == 7);
  CHECK(size(f) == 77);
  CHECK_THROWS_AS(degree(f, 15), Error);
  CHECK_THROWS_AS(degree(f, -1), Error);
  CHECK_THROWS_MATCHES(min_degree(empty(0)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::kEmptyGraph; }));
}

TEST_CASE("graph6 known encodings", "[graph6]") {
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(encode_graph6(complete(3)) == "Bw");
  CHECK(encode_graph6(empty(1)) == "@");
  CHECK(parse_graph6("@") == empty(1));
  CHECK(encode_graph6(empty(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
  // Order 63 and 64 use the '~' plus three-byte prefix.
  CHECK(encode_graph6(empty(63)).substr(0, 4) == "~??~");
  CHECK(encode_graph6(complete(64)).substr(0, 4) == "~?@?");
  CHECK(parse_graph6(encode_graph6(complete(64))) == complete(64));
}

TEST_CASE("graph6 rejects malformed input", "[graph6]") {
  auto code_of = [](std::string_view text) {
    try {
      parse_graph6(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error for " << text);
    return ErrorCode::kParse;
  };
  CHECK(code_of("") == ErrorCode::kParse);
  CHECK(code_of("B") == ErrorCode::kParse);       // missing data byte
  CHECK(code_of("Bww") == ErrorCode::kParse);     // trailing garbage
  CHECK(code_of("B\x20") == ErrorCode::kParse);   // byte below 63
  CHECK(code_of("Bx") == ErrorCode::kParse);      // nonzero padding bit
  CHECK(code_of("~?@@") == ErrorCode::kOrderOverflow);  // order 65
}

TEST_CASE("constructors keep adjacency symmetric and irreflexive", "[graph][property]") {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = static_cast<int>(rng() % 9);
    const int b = static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, a, 0.4);
    const Graph h = oracle::random_graph(rng, b, 0.6);
    for (const Graph& x : {g, h, complement(g), join(g, h), disjoint_union(g, h)}) {
      REQUIRE(is_well_formed(x));
      int degree_sum = 0;
      for (int v = 0; v < x.order(); ++v) degree_sum += degree(x, v);
      CHECK(degree_sum == 2 * size(x));
    }
    CHECK(complement(complement(g)) == g);
    CHECK(size(join(g, h)) == size(g) + size(h) + a * b);
    CHECK(complement(join(g, h)) == disjoint_union(complement(g), complement(h)));
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round trip over an external corpus", "[graph6]") {
  for (int n = 4; n <= 7; ++n) {
    std::ifstream in(std::string(XCL_TEST_DATA_DIR) + "/atlas_n" + std::to_string(n) + ".g6");
    REQUIRE(in);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
      CHECK(encode_graph6(parse_graph6(line)) == line);
      ++lines;
    }
    CHECK(lines > 0);
  }
}
