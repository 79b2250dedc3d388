#include <catch2/catch_amalgamated.hpp>

#include "support/test_util.hpp"
#include "talex/tangle.hpp"

using namespace talex;

TEST_CASE("continued fractions") {
  CHECK(continued_fraction({2}) == mpq_class(2));
  CHECK(continued_fraction({3, 2}) == mpq_class(7, 3));
  CHECK(continued_fraction({2, 3}) == mpq_class(7, 2));
  CHECK(continued_fraction({2, 2}) == mpq_class(5, 2));
  CHECK(continued_fraction({2, 0}) == mpq_class(1, 2));
  CHECK_THROWS_AS(continued_fraction({1, -1, 5}), error);
}

TEST_CASE("fraction to twists") {
  CHECK(fraction_to_twists(mpq_class(5, 2)) == std::vector<long>{2, 2});
  CHECK(fraction_to_twists(mpq_class(7, 2)) == std::vector<long>{2, 3});
  CHECK(fraction_to_twists(mpq_class(7, 3)) == std::vector<long>{3, 2});
  CHECK(fraction_to_twists(mpq_class(-2)) == std::vector<long>{-2});
  CHECK(fraction_to_twists(mpq_class(5)) == std::vector<long>{5});
  CHECK(fraction_to_twists(mpq_class(1, 2)) == std::vector<long>{2, 0});
}

TEST_CASE("continued fraction round trip") {
  for (long p = -50; p <= 50; ++p) {
    for (long q = 1; q <= 50; ++q) {
      if (mpz_class(std::labs(p)) != 0 && mpz_class(p) % q == 0 && q > 1) continue;
      mpq_class v(p, q);
      v.canonicalize();
      CHECK(continued_fraction(fraction_to_twists(v)) == v);
    }
  }
}

TEST_CASE("trefoil diagram") {
  Diagram d = synthesize_diagram(parse_link_spec("N([3])"));
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 3);
  CHECK(d.num_components == 1);
  auto [pos, neg] = d.crossing_census();
  CHECK(pos + neg == 3);
}

TEST_CASE("pretzel component counts") {
  Diagram p222 = synthesize_diagram(parse_link_spec("P(2,2,2)"));
  CHECK(p222.crossing_count() == 6);
  CHECK(p222.num_components == 3);

  Diagram p333 = synthesize_diagram(parse_link_spec("P(3,3,3)"));
  CHECK(p333.crossing_count() == 9);
  CHECK(p333.num_components == 1);
}

TEST_CASE("seven-five diagram") {
  Diagram d = synthesize_diagram(parse_link_spec("N([2,2,3])"));
  CHECK(d.crossing_count() == 7);
  CHECK(d.num_components == 1);
  CHECK(d.tangles.size() == 1);
  CHECK(d.tangles[0].regions.size() == 3);
  CHECK(d.tangles[0].regions[0].horizontal);
  CHECK_FALSE(d.tangles[0].regions[1].horizontal);
  CHECK(d.tangles[0].regions[2].horizontal);
}

TEST_CASE("triple twist link components") {
  Diagram d = synthesize_diagram(parse_link_spec("N([2,2,2])"));
  CHECK(d.crossing_count() == 6);
  CHECK(d.num_components == 2);
}

TEST_CASE("unknot closure") {
  Diagram d = synthesize_diagram(parse_link_spec("N([1])"));
  CHECK(d.crossing_count() == 1);
  CHECK(d.num_components == 1);
  CHECK(d.arc_count() == 1);
}

TEST_CASE("montesinos chain diagram") {
  Diagram d = synthesize_diagram(parse_link_spec("M(7/3,2,7/2)"));
  CHECK(d.crossing_count() == 12);
  CHECK(d.num_components == 1);
  CHECK(d.tangles.size() == 3);
  CHECK(d.tangles[0].regions.size() == 2);
  CHECK(d.tangles[1].regions.size() == 1);
  CHECK(d.tangles[2].regions.size() == 2);
}

TEST_CASE("crossing count equals twist total") {
  test::rng_t rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<RationalTangleSpec> ts;
    long expect = 0;
    int s = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < s; ++i) {
      std::vector<long> ks;
      int r = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < r; ++j) {
        long k = static_cast<long>(rng() % 7) - 3;
        ks.push_back(k);
        expect += std::labs(k);
      }
      try {
        ts.push_back(RationalTangleSpec::from_twists(ks));
      } catch (const error&) {
        --i;  // degenerate continued fraction, resample
        expect -= std::accumulate(ks.begin(), ks.end(), 0L, [](long a, long b) { return a + std::labs(b); });
      }
    }
    if (expect == 0) continue;
    try {
      Diagram d = synthesize_diagram(MontesinosSpec::denominator_closure(ts));
      CHECK(d.crossing_count() == expect);
      CHECK(d.arc_count() == d.crossing_count());
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_diagram);  // crossing-free component
    }
  }
}

TEST_CASE("link spec parser") {
  CHECK(parse_link_spec("N(7/3)").tangles[0].twists == std::vector<long>{3, 2});
  CHECK(parse_link_spec("P(3,3,3)").tangles.size() == 3);
  CHECK(parse_link_spec("M(7/3, 2, 7/2)").tangles.size() == 3);
  CHECK(parse_link_spec("N([2,2,3])").numerator);
  CHECK_FALSE(parse_link_spec("P(2,2,2)").numerator);
  CHECK_THROWS_AS(parse_link_spec("M(2)"), error);
  CHECK_THROWS_AS(parse_link_spec("X(2,2)"), error);
  CHECK_THROWS_AS(parse_link_spec("N(1/0)"), error);
  CHECK_THROWS_AS(parse_link_spec("N([2,2,3]) junk"), error);
}

TEST_CASE("diagram dump format") {
  Diagram d = synthesize_diagram(parse_link_spec("N([3])"));
  std::string dump = d.dump();
  CHECK(dump.find("component 1:") != std::string::npos);
  CHECK(dump.find("seed T1.x0 = arc ") != std::string::npos);
  CHECK(dump.find("seed T1.se = arc ") != std::string::npos);
}

TEST_CASE("fraction input reaches the same diagram") {
  // [[2,2,3]] = 17/5
  Diagram a = synthesize_diagram(parse_link_spec("N(17/5)"));
  Diagram b = synthesize_diagram(parse_link_spec("N([2,2,3])"));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("crossing-free components rejected") {
  CHECK_THROWS_AS(synthesize_diagram(parse_link_spec("N([0])")), error);
  CHECK_THROWS_AS(synthesize_diagram(parse_link_spec("M(0,0)")), error);
  CHECK(component_count(synthesize_diagram(parse_link_spec("P(2,2,2)"))) == 3);
}

TEST_CASE("component partition stable") {
  Diagram a = synthesize_diagram(parse_link_spec("P(2,2,2)"));
  Diagram b = synthesize_diagram(parse_link_spec("P(2,2,2)"));
  CHECK(a.arc_component == b.arc_component);
  CHECK(a.dump() == b.dump());
}
