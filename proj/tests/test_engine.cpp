#include <catch2/catch_amalgamated.hpp>

#include "support/test_util.hpp"
#include "talex/engine.hpp"
#include "talex/oracle.hpp"
#include "talex/repfile.hpp"

using namespace talex;

namespace {

const std::string FIXTURES = std::string(TALEX_SOURCE_DIR) + "/fixtures/";

TapResult alexander(const std::string& link) { return alexander_polynomial(parse_link_spec(link)); }

Representation load_rep(const Diagram& d, const std::string& file) {
  RepresentationFile rf = load_representation_file(FIXTURES + file);
  Representation rep = propagate(d, rf.ring, rf.dim, rf.seeds);
  REQUIRE(verify_representation(rep, d).empty());
  return rep;
}

}  // namespace

TEST_CASE("unknot numerator quotient") {
  Diagram d = synthesize_diagram(parse_link_spec("N([1])"));
  TapResult tap = tap_numerator(d, trivial_representation(d));
  CHECK_FALSE(tap.value.polynomial);
  CHECK(tap.value.to_string() == "(1)/(t - 1)");
  CHECK(alexander("N([1])").value.to_string() == "1");
}

TEST_CASE("seven-five ordinary Alexander") {
  CHECK(alexander("N([2,2,3])").value.to_string() == "2*t^4 - 4*t^3 + 5*t^2 - 4*t + 2");
}

// Delta = ([h3+1]_{t^2} - t [h3]_{t^2})(h2 (t-1)^2 [h1]_{t^2} + t^{2 h1}) + (1-t)[h1]_{t^2}
TEST_CASE("triple twist knot family") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  for (long h1 = 1; h1 <= 3; ++h1)
    for (long h2 = 1; h2 <= 3; ++h2)
      for (long h3 = 1; h3 <= 3; ++h3) {
        std::string link = "N([" + std::to_string(2 * h1) + "," + std::to_string(2 * h2) + "," +
                           std::to_string(2 * h3 + 1) + "])";
        LaurentPoly t2 = sc.t(0, 2);
        LaurentPoly formula = (sc.bracket(h3 + 1, t2) - sc.t(0) * sc.bracket(h3, t2)) *
                                  (sc.c(h2) * (sc.t(0) - sc.c(1)) * (sc.t(0) - sc.c(1)) * sc.bracket(h1, t2) +
                                   sc.t(0, static_cast<int>(2 * h1))) +
                              (sc.c(1) - sc.t(0)) * sc.bracket(h1, t2);
        TapResult delta = alexander(link);
        REQUIRE(delta.value.polynomial);
        INFO(link << " -> " << delta.value.to_string());
        CHECK(equiv(delta.value.as_fraction(), FractionElem(formula)));
      }
}

// The same closed form at h1 = h2 = 0 covers the (2, 2h3+1) torus knots N([k]).
TEST_CASE("torus knot specialization") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  for (long h3 = 1; h3 <= 4; ++h3) {
    LaurentPoly t2 = sc.t(0, 2);
    LaurentPoly formula = sc.bracket(h3 + 1, t2) - sc.t(0) * sc.bracket(h3, t2);
    TapResult delta = alexander("N(" + std::to_string(2 * h3 + 1) + ")");
    CHECK(equiv(delta.value.as_fraction(), FractionElem(formula)));
  }
}

// Delta = 1 + (1 + k1 + k2 + k3 + k1 k2 + k2 k3 + k1 k3)(t + t^{-1} - 2)
TEST_CASE("odd pretzel family") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  for (long k1 = 0; k1 <= 2; ++k1)
    for (long k2 = 0; k2 <= 2; ++k2)
      for (long k3 = 0; k3 <= 2; ++k3) {
        std::string link = "P(" + std::to_string(2 * k1 + 1) + "," + std::to_string(2 * k2 + 1) + "," +
                           std::to_string(2 * k3 + 1) + ")";
        long c = 1 + k1 + k2 + k3 + k1 * k2 + k2 * k3 + k1 * k3;
        LaurentPoly formula = sc.c(1) + sc.c(c) * (sc.t(0) + sc.t(0, -1) - sc.c(2));
        TapResult delta = alexander(link);
        INFO(link << " -> " << delta.value.to_string());
        CHECK(equiv(delta.value.as_fraction(), FractionElem(formula)));
      }
}

// Delta = (t^3 - t^2 - 2t + 1)[2k+1]_{-t} + (t - 1)(t^2 - 3t + 1)
TEST_CASE("montesinos family M(-2, 5/2, 2k+1)") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  for (long k = 1; k <= 6; ++k) {
    std::string link = "M(-2,5/2," + std::to_string(2 * k + 1) + ")";
    LaurentPoly formula = (sc.t(0, 3) - sc.t(0, 2) - sc.c(2) * sc.t(0) + sc.c(1)) * sc.bracket(2 * k + 1, -sc.t(0)) +
                          (sc.t(0) - sc.c(1)) * (sc.t(0, 2) - sc.c(3) * sc.t(0) + sc.c(1));
    TapResult delta = alexander(link);
    INFO(link << " -> " << delta.value.to_string());
    CHECK(equiv(delta.value.as_fraction(), FractionElem(formula)));
  }
}

TEST_CASE("mirror of 12a_0423") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  LaurentPoly d75 = sc.c(2) * sc.t(0, 4) - sc.c(4) * sc.t(0, 3) + sc.c(5) * sc.t(0, 2) - sc.c(4) * sc.t(0) + sc.c(2);
  LaurentPoly factor = sc.c(2) * sc.t(0, 2) - sc.c(3) * sc.t(0) + sc.c(2);
  TapResult delta = alexander("M(7/3,2,7/2)");
  CHECK(equiv(delta.value.as_fraction(), FractionElem(factor * d75)));
}

// Multi-variable pretzel: sum_i t_{i-1}(t_i - 1)[k_{i+1}]_{t_{i-1} t_i^{-1}} [k_{i-1}]_{t_i t_{i+1}^{-1}}.
// Our component numbering realizes the reference labeling through the fixed
// cyclic relabeling (1,2,3) -> (3,1,2); orientation flips are absorbed by the
// inversion flags.
TEST_CASE("even pretzel multivariable family") {
  RingSpec Z = RingSpec::integers();
  VarContext ctx{3, 0};
  test::scalars sc{Z, ctx};
  const int perm[3] = {2, 0, 1};
  auto pt = [&](long i, int e = 1) {
    int idx = perm[((i - 1) % 3 + 3) % 3];
    return LaurentPoly::variable(Z, ctx, idx, e);
  };
  for (long k1 = 1; k1 <= 2; ++k1)
    for (long k2 = 1; k2 <= 2; ++k2)
      for (long k3 = 1; k3 <= 2; ++k3) {
        long ks[3] = {k1, k2, k3};
        std::string link = "P(" + std::to_string(2 * k1) + "," + std::to_string(2 * k2) + "," +
                           std::to_string(2 * k3) + ")";
        LaurentPoly formula = LaurentPoly::zero(Z, ctx);
        for (long i = 1; i <= 3; ++i) {
          long kp = ks[i % 3];                  // k_{i+1}
          long km = ks[((i - 2) % 3 + 3) % 3];  // k_{i-1}
          formula = formula + pt(i - 1) * (pt(i) - sc.c(1)) * sc.bracket(kp, pt(i - 1) * pt(i, -1)) *
                                  sc.bracket(km, pt(i) * pt(i + 1, -1));
        }
        Diagram d = synthesize_diagram(parse_link_spec(link));
        TapResult tap = compute_tap(d, trivial_representation(d));
        INFO(link << " -> " << tap.value.to_string());
        CHECK(equiv(tap.value.as_fraction(), FractionElem(formula), {true, true, true}));
      }
}

// Triple twist link. The closed form carries a stray trailing parenthesis in
// the source; the Fox-matrix oracle confirms the reading
//   [h1][h3](h2(t1-1)(t2-1) + t1 t2 - 1) + [h1] + [h3],  brackets over t1 t2.
TEST_CASE("triple twist link family") {
  RingSpec Z = RingSpec::integers();
  VarContext ctx{2, 0};
  test::scalars sc{Z, ctx};
  for (long h1 = 1; h1 <= 3; ++h1)
    for (long h2 = 1; h2 <= 3; ++h2)
      for (long h3 = 1; h3 <= 3; ++h3) {
        std::string link = "N([" + std::to_string(2 * h1) + "," + std::to_string(2 * h2) + "," +
                           std::to_string(2 * h3) + "])";
        LaurentPoly tt = sc.t(0) * sc.t(1);
        LaurentPoly b1 = sc.bracket(h1, tt), b3 = sc.bracket(h3, tt);
        LaurentPoly formula =
            b1 * b3 * (sc.c(h2) * (sc.t(0) - sc.c(1)) * (sc.t(1) - sc.c(1)) + tt - sc.c(1)) + b1 + b3;
        Diagram d = synthesize_diagram(parse_link_spec(link));
        TapResult tap = compute_tap(d, trivial_representation(d));
        INFO(link << " -> " << tap.value.to_string());
        CHECK(equiv(tap.value.as_fraction(), FractionElem(formula), {true, true}));
      }
}

TEST_CASE("metabelian representation of seven-five") {
  Diagram d = synthesize_diagram(parse_link_spec("N([2,2,3])"));
  for (const char* file : {"7_5_metabelian_eps_plus.json", "7_5_metabelian_eps_minus.json"}) {
    Representation rep = load_rep(d, file);
    TapResult tap = compute_tap(d, rep);
    REQUIRE(tap.value.polynomial);
    CHECK(tap.value.to_string() == "t^9 - 5*t^6 + 5*t^3 - 1");
  }
}

// The propagated meridians of the labeled arcs must equal t A^{-2 eps} B^{eps}
// and t A^{1+2 eps} B^{eps}.
TEST_CASE("metabelian intermediate meridians") {
  Diagram d = synthesize_diagram(parse_link_spec("N([2,2,3])"));
  RingSpec cyc = RingSpec::cyclotomic(7);
  VarContext ctx{1, 0};
  SquareMatrix A(3, cyc, ctx), B(3, cyc, ctx);
  for (int i = 0; i < 3; ++i)
    A.at(i, i) = FractionElem(LaurentPoly::constant(cyclotomic_embed(7, (1 << i) % 7), ctx));
  B.at(0, 1) = B.at(1, 2) = B.at(2, 0) = FractionElem::one(cyc, ctx);
  FractionElem t(LaurentPoly::variable(cyc, ctx, 0));

  struct Case {
    const char* file;
    long eps;
  } cases[] = {{"7_5_metabelian_eps_plus.json", 1}, {"7_5_metabelian_eps_minus.json", -1}};
  for (const auto& c : cases) {
    Representation rep = load_rep(d, c.file);
    const auto& t1 = d.tangles[0];
    SquareMatrix y1 = rep.meridian(t1.regions[0].ne.arc);
    SquareMatrix x2 = rep.meridian(t1.regions[1].se.arc);
    CHECK(y1 == (A.pow(-2 * c.eps) * B.pow(c.eps)).scaled(t));
    CHECK(x2 == (A.pow(1 + 2 * c.eps) * B.pow(c.eps)).scaled(t));
  }
}

// The published value for this example does not follow from its own closed
// formulas; the tangle engine and the Fox-matrix oracle agree on t^2 + 5t + 1,
// so that value is pinned here.
TEST_CASE("sl2 f11 pretzel representation") {
  Diagram d = synthesize_diagram(parse_link_spec("P(3,3,3)"));
  Representation rep = load_rep(d, "p333_sl2_f11.json");
  TapResult tap = compute_tap(d, rep);
  REQUIRE(tap.value.polynomial);
  CHECK(tap.value.to_string() == "t^2 + 5*t + 1");
  auto wada = wada_invariant(d, rep);
  CHECK(equiv(tap.value.as_fraction(), wada.value.as_fraction()));
}

TEST_CASE("tangle boundary single even region") {
  // One horizontal region [4]: b_ne = u_4(a, b) = [2]_{ab} a (1 - b), b_sw = 1,
  // b_se = u_3(a, b), with the region's argument meridians.
  Diagram d = synthesize_diagram(parse_link_spec("N([4])"));
  RingSpec f = RingSpec::prime_field(101);
  test::rng_t rng(47);
  SeedMatrices seeds;
  for (const char* name : {"T1.x0", "T1.y0"}) {
    SquareMatrix m = test::random_invertible(rng, f, VarContext{1, 0}, 2);
    std::vector<std::vector<RingElem>> rows(2, std::vector<RingElem>(2, RingElem::zero(f)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!m.at(i, j).is_zero()) rows[i][j] = m.at(i, j).num().leading().second;
    seeds.emplace(name, rows);
  }
  Representation rep = propagate(d, f, 2, seeds);
  TangleBoundary tb = tangle_boundary(d, 0, rep);

  const auto& r0 = d.tangles[0].regions[0];
  REQUIRE(r0.horizontal);
  SquareMatrix a = rep.meridian_signed(r0.nw.arc, r0.nw.into_region ? 1 : -1);
  SquareMatrix b = rep.meridian_signed(r0.sw.arc, r0.sw.into_region ? 1 : -1);
  SquareMatrix id = SquareMatrix::identity(2, f, rep.context());
  CHECK(tb.b_ne == bracket(2, a * b) * a * (id - b));
  CHECK(tb.b_sw == id);
  CHECK(tb.b_se == u_matrix(3, a, b));
  CHECK(tb.b_ne.all_polynomial());
}

TEST_CASE("pretzel strands have identity b_sw") {
  Diagram d = synthesize_diagram(parse_link_spec("P(3,3,3)"));
  Representation rep = trivial_representation(d);
  SquareMatrix id = SquareMatrix::identity(1, rep.ring(), rep.context());
  for (int k = 0; k < 3; ++k) CHECK(tangle_boundary(d, k, rep).b_sw == id);
}

TEST_CASE("degenerate path consistency") {
  for (const char* link : {"P(3,3,3)", "M(-2,5/2,3)", "M(7/3,2,7/2)", "P(2,2,2)", "M(2,2)"}) {
    Diagram d = synthesize_diagram(parse_link_spec(link));
    Representation rep = trivial_representation(d);
    TapResult normal = tap_denominator(d, rep);
    TapResult forced = tap_denominator(d, rep, true);
    CHECK_FALSE(normal.used_degenerate_path);
    CHECK(forced.used_degenerate_path);
    INFO(link);
    CHECK(equiv(normal.value.as_fraction(), forced.value.as_fraction()));
  }
}

TEST_CASE("automatic degenerate trigger") {
  // The [0] tangle has b^ne = u_0 = 0, so the epsilon path must engage.
  Diagram d = synthesize_diagram(parse_link_spec("M(2,0,2)"));
  Representation rep = trivial_representation(d);
  TapResult tap = tap_denominator(d, rep);
  CHECK(tap.used_degenerate_path);
  auto wada = wada_invariant(d, rep);
  CHECK(equiv(tap.value.as_fraction(), wada.value.as_fraction()));

  // same with a two-dimensional representation
  test::rng_t rng(53);
  Representation diag = test::diagonal_representation(rng, d, RingSpec::prime_field(11), 2);
  TapResult tap2 = tap_denominator(d, diag);
  CHECK(tap2.used_degenerate_path);
  CHECK(equiv(tap2.value.as_fraction(), wada_invariant(d, diag).value.as_fraction()));
}

TEST_CASE("metabelian degenerate path") {
  Diagram d = synthesize_diagram(parse_link_spec("M(7/3,2,7/2)"));
  Representation rep = load_rep(d, "m12a0423_zeta7_a1.json");
  TapResult normal = tap_denominator(d, rep);
  TapResult forced = tap_denominator(d, rep, true);
  CHECK(equiv(normal.value.as_fraction(), forced.value.as_fraction()));
}

TEST_CASE("three strand shortcut") {
  Diagram d = synthesize_diagram(parse_link_spec("M(-2,5/2,3)"));
  Representation rep = trivial_representation(d);
  TapResult full = tap_denominator(d, rep);
  for (int i : {1, 3}) {
    TapResult shortcut = tap_three_strand_simplified(d, rep, i);
    INFO("i = " << i);
    CHECK(equiv(full.value.as_fraction(), shortcut.value.as_fraction()));
  }

  // T1 of M(7/3,2,7/2) has b^sw != 1; only i = 2 qualifies.
  Diagram dm = synthesize_diagram(parse_link_spec("M(7/3,2,7/2)"));
  Representation repm = trivial_representation(dm);
  CHECK_THROWS_AS(tap_three_strand_simplified(dm, repm, 1), error);
  CHECK(equiv(tap_three_strand_simplified(dm, repm, 2).value.as_fraction(),
              tap_denominator(dm, repm).value.as_fraction()));

  Diagram dp = synthesize_diagram(parse_link_spec("P(3,3,3)"));
  Representation repp = load_rep(dp, "p333_sl2_f11.json");
  TapResult fullp = tap_denominator(dp, repp);
  for (int i : {1, 2, 3}) {
    CHECK(equiv(tap_three_strand_simplified(dp, repp, i).value.as_fraction(), fullp.value.as_fraction()));
  }
}

TEST_CASE("cyclic permutation invariance") {
  const char* rotations[3] = {"M(7/3,2,7/2)", "M(2,7/2,7/3)", "M(7/2,7/3,2)"};
  std::vector<TapResult> taps;
  for (const char* link : rotations) {
    Diagram d = synthesize_diagram(parse_link_spec(link));
    taps.push_back(compute_tap(d, trivial_representation(d)));
  }
  CHECK(equiv(taps[0].value.as_fraction(), taps[1].value.as_fraction()));
  CHECK(equiv(taps[0].value.as_fraction(), taps[2].value.as_fraction()));
}

TEST_CASE("divides") {
  RingSpec Z = RingSpec::integers();
  test::scalars sc{Z, VarContext{1, 0}};
  auto wrap = [&](const LaurentPoly& p) {
    TapResult r;
    r.value = canonical_form(FractionElem(p));
    r.context = p.context();
    return r;
  };
  CHECK(divides(wrap(sc.t(0) - sc.c(1)), wrap(sc.t(0, 2) - sc.c(1))));
  CHECK_FALSE(divides(wrap(sc.t(0, 2) + sc.c(1)), wrap(sc.t(0) - sc.c(1))));

  TapResult dm = alexander("M(7/3,2,7/2)");
  LaurentPoly factor = sc.c(2) * sc.t(0, 2) - sc.c(3) * sc.t(0) + sc.c(2);
  CHECK(divides(wrap(factor), dm));

  VarContext two{2, 0};
  TapResult mv;
  mv.value = canonical_form(FractionElem(LaurentPoly::variable(Z, two, 0)));
  mv.context = two;
  CHECK_THROWS_AS(divides(mv, mv), error);
}

TEST_CASE("twisted divisibility obstruction") {
  // Delta_{7_5, eps} does not divide Delta_K for the order-21 metabelian
  // representation of M(7/3,2,7/2).
  Diagram d75 = synthesize_diagram(parse_link_spec("N([2,2,3])"));
  Diagram dk = synthesize_diagram(parse_link_spec("M(7/3,2,7/2)"));
  TapResult f = compute_tap(d75, load_rep(d75, "7_5_metabelian_eps_plus.json"));
  TapResult g = compute_tap(dk, load_rep(dk, "m12a0423_zeta7_a1.json"));
  CHECK_FALSE(divides(f, g));
}

// Best-effort floating path: a diagonal U(1)^2 representation on the 3-chain
// link runs through the whole stack and still agrees with the oracle under
// the tolerance comparison.
TEST_CASE("complex float representation smoke") {
  Diagram d = synthesize_diagram(parse_link_spec("P(2,2,2)"));
  RingSpec C = RingSpec::complex_float();
  Representation rep(C, 2, d);
  VarContext ctx = rep.context();
  std::complex<double> vals[3] = {{0.6, 0.8}, {-0.28, 0.96}, {0.96, 0.28}};
  for (int a = 0; a < d.arc_count(); ++a) {
    int c = d.arc_component[static_cast<std::size_t>(a)];
    SquareMatrix m(2, C, ctx);
    m.at(0, 0) = FractionElem(LaurentPoly::constant(RingElem::from_complex(C, vals[c]), ctx));
    m.at(1, 1) = FractionElem(LaurentPoly::constant(RingElem::from_complex(C, std::conj(vals[c])), ctx));
    rep.assign(a, m.scaled(FractionElem(LaurentPoly::variable(C, ctx, c))), nullptr, "");
  }
  REQUIRE(verify_representation(rep, d).empty());
  TapResult tap = compute_tap(d, rep);
  auto wada = wada_invariant(d, rep);
  CHECK(equiv(tap.value.as_fraction(), wada.value.as_fraction()));
}

TEST_CASE("alexander on links is the raw quotient") {
  Diagram d = synthesize_diagram(parse_link_spec("N([2,2,2])"));
  Representation rep = trivial_representation(d);
  TapResult raw = compute_tap(d, rep);
  TapResult adjusted = alexander("N([2,2,2])");
  CHECK(equiv(raw.value.as_fraction(), adjusted.value.as_fraction()));
}
