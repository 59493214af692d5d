#include "doctest.h"
#include "shrinkcy/qsector.hpp"
#include "shrinkcy/shrink.hpp"

using namespace shrinkcy;

TEST_CASE("sector analysis: rational witness on a closed range") {
  // squares along P2 glued to F3: (t-3)^2 and 8t^2+2t-3 over [1/2, 3]
  QuadPoly q1{Int(9), Int(-6), Int(1)};
  QuadPoly q2{Int(-3), Int(2), Int(8)};
  SectorResult r = analyze_sector(q1, q2, Rational(1, 2),
                                  ExtRat::of(Rational(3)));
  REQUIRE(r.outcome == SectorOutcome::Witness);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == Rational(1, 2));
}

TEST_CASE("sector analysis: a witness pocket visible only between "
          "conjugate irrational roots") {
  // q1 = -t^2+4t-2 >= 0 on [2-sqrt2, 2+sqrt2]
  // q2 = 2t^2-10t+11 >= 0 outside ((5-sqrt3)/2, (5+sqrt3)/2)
  // joint region [(5+sqrt3)/2, 2+sqrt2] ~ [3.366, 3.414] contains no
  // endpoint, no vertex, no rational root: only an interior sample finds it.
  QuadPoly q1{Int(-2), Int(4), Int(-1)};
  QuadPoly q2{Int(11), Int(-10), Int(2)};
  SectorResult r = analyze_sector(q1, q2, Rational(0), ExtRat::inf());
  REQUIRE(r.outcome == SectorOutcome::Witness);
  const Rational& t = *r.witness;
  CHECK(eval(q1, t) >= 0);
  CHECK(eval(q2, t) >= 0);
  CHECK(eval(q1, t) + eval(q2, t) > 0);
}

TEST_CASE("sector analysis: degenerate, infeasible, vertical") {
  // both squares vanish only at the shared double root t=1
  QuadPoly touch{Int(-1), Int(2), Int(-1)};  // -(t-1)^2
  SectorResult deg = analyze_sector(touch, touch, Rational(0), ExtRat::inf());
  CHECK(deg.outcome == SectorOutcome::Degenerate);

  // -1-t^2 is negative on every finite ray and its leading coefficient kills
  // the vertical ray too: nothing in the cone works
  QuadPoly never{Int(-1), Int(0), Int(-1)};
  QuadPoly always{Int(1), Int(0), Int(0)};
  SectorResult inf_r = analyze_sector(never, always, Rational(0), ExtRat::inf());
  CHECK(inf_r.outcome == SectorOutcome::Infeasible);

  // constant -1 also fails every finite ray, but with an unbounded range the
  // vertical ray is still admissible with both leading values zero
  QuadPoly flat_neg{Int(-1), Int(0), Int(0)};
  SectorResult vdeg =
      analyze_sector(flat_neg, always, Rational(0), ExtRat::inf());
  CHECK(vdeg.outcome == SectorOutcome::Degenerate);

  // same pair on a finite range has no vertical ray to fall back on
  SectorResult finf =
      analyze_sector(flat_neg, always, Rational(0), ExtRat::of(Rational(5)));
  CHECK(finf.outcome == SectorOutcome::Infeasible);

  // every finite ray fails (q2 = -1-t < 0) but the vertical ray passes
  QuadPoly tsq{Int(0), Int(0), Int(1)};
  QuadPoly neg_line{Int(-1), Int(-1), Int(0)};
  SectorResult vert = analyze_sector(tsq, neg_line, Rational(0), ExtRat::inf());
  CHECK(vert.outcome == SectorOutcome::InfinityWitness);

  // zero polys everywhere: feasible but totally degenerate
  QuadPoly zero{Int(0), Int(0), Int(0)};
  CHECK(analyze_sector(zero, zero, Rational(0), ExtRat::inf()).outcome ==
        SectorOutcome::Degenerate);
}

static SncSurface p2_f3() {
  return parse_snc(
      "component 1 = P2\n"
      "component 2 = F3\n"
      "glue 1:l ~ 2:e\n");
}

TEST_CASE("full decision: P2 glued to F3 is pre-shrinkable with J = S1+S2") {
  ShrinkReport r = decide_rank2(p2_f3());
  CHECK(r.status == ShrinkStatus::PreShrinkable);
  REQUIRE(r.certificate.has_value());
  CHECK(*r.certificate == std::vector<Int>{Int(1), Int(1)});
  REQUIRE(r.ray_interval.has_value());
  CHECK(r.ray_interval->lo == ExtRat::of(Rational(1, 2)));
  CHECK(r.ray_interval->hi == ExtRat::of(Rational(3)));
  CHECK(!r.downgraded);
  CHECK(!r.rank_iii_degenerate);

  CertificateCheck chk = certificate_verify(p2_f3(), {Int(1), Int(1)});
  CHECK(chk.ok);
  CHECK(chk.cond_i);
  CHECK(chk.cond_ii);
  CHECK(chk.cond_iii);
}

TEST_CASE("full decision: F5 against F3 collapses to J = 0") {
  SncSurface s = parse_snc(
      "component 1 = F5\n"
      "component 2 = F3\n"
      "glue 1:e ~ 2:e+3f\n");
  REQUIRE(s.cy().ok);  // -5 + 3 = -2
  ShrinkReport r = decide_rank2(s);
  CHECK(r.status == ShrinkStatus::NotPreShrinkable);
  CHECK(!r.certificate.has_value());
  CHECK(!r.downgraded);
  REQUIRE(r.narrative.size() == 3);
  CHECK(r.narrative[0].find("e on component 2 (F3)") != std::string::npos);
  CHECK(r.narrative[0].find("forcing a2 = 0") != std::string::npos);
  CHECK(r.narrative[1].find("e on component 1 (F5)") != std::string::npos);
  CHECK(r.narrative[2].find("J = 0") != std::string::npos);
}

TEST_CASE("full decision: the pinched ray where both squares vanish") {
  SncSurface s = parse_snc(
      "component 1 = F0\n"
      "component 2 = F10\n"
      "glue 1:f1+4f2 ~ 2:e\n");
  REQUIRE(s.cy().ok);  // 8 - 10 = -2
  ShrinkReport r = decide_rank2(s);
  CHECK(r.status == ShrinkStatus::NotPreShrinkable);
  CHECK(r.rank_iii_degenerate);
  CHECK(!r.downgraded);
  // the unique admissible ray is t = 1/2, i.e. (a1, a2) = (2, 1)
  REQUIRE(r.ray_interval.has_value());
  CHECK(r.ray_interval->lo == ExtRat::of(Rational(1, 2)));
  CHECK(r.ray_interval->hi == ExtRat::of(Rational(1, 2)));
  // on that ray both squares vanish, so no tuple can verify
  CHECK(!certificate_verify(s, {Int(2), Int(1)}).ok);
  CHECK(certificate_verify(s, {Int(2), Int(1)}).cond_i);
  CHECK(certificate_verify(s, {Int(2), Int(1)}).cond_ii);
  CHECK(!certificate_verify(s, {Int(2), Int(1)}).cond_iii);
}

TEST_CASE("negative verdicts weaken to inconclusive on candidate catalogs") {
  SncSurface s = parse_snc(
      "component 1 = Bl1F5\n"
      "component 2 = F3\n"
      "glue 1:e ~ 2:e+3f\n");
  REQUIRE(s.cy().ok);
  ShrinkReport r = decide_rank2(s);
  CHECK(r.status == ShrinkStatus::Inconclusive);
  CHECK(r.downgraded);
  CHECK(!r.narrative.empty());
}

TEST_CASE("decision input validation") {
  SncSurface three = parse_snc(
      "component 1 = F2\n"
      "component 2 = F2\n"
      "component 3 = F2\n"
      "glue 1:f ~ 2:e\n"
      "glue 2:f ~ 3:e\n");
  CHECK_THROWS_AS(decide_rank2(three), ValidationError);

  SncSurface broken = parse_snc(
      "component 1 = P2\n"
      "component 2 = F3\n"
      "glue 1:l ~ 2:f\n");  // fails the anticanonical check
  CHECK_THROWS_AS(decide_rank2(broken), Error);
  CertificateCheck chk = certificate_verify(broken, {Int(1), Int(1)});
  CHECK(!chk.ok);
  CHECK(!chk.cy_ok);
  CHECK_THROWS_AS(certificate_verify(p2_f3(), {Int(1)}), ValidationError);
}

TEST_CASE("bounded search agrees with the exact decision where it can") {
  SncSurface s = p2_f3();
  ShrinkReport r = search_rank_n(s, Int(25));
  CHECK(r.status == ShrinkStatus::PreShrinkable);
  CHECK(*r.certificate == std::vector<Int>{Int(1), Int(1)});

  // a_max = 0 exhausts immediately
  CHECK(search_rank_n(s, Int(0)).status == ShrinkStatus::Inconclusive);

  // the rank-3 chain has no nonneg combination at all, but a bounded
  // search can only say "inconclusive"
  SncSurface three = parse_snc(
      "component 1 = F2\n"
      "component 2 = F2\n"
      "component 3 = F2\n"
      "glue 1:f ~ 2:e\n"
      "glue 2:f ~ 3:e\n");
  ShrinkReport r3 = search_rank_n(three, Int(4));
  CHECK(r3.status == ShrinkStatus::Inconclusive);
  CHECK(!r3.certificate.has_value());
}

TEST_CASE("certificates are scale invariant") {
  SncSurface s = p2_f3();
  for (int c = 1; c <= 4; ++c) {
    CertificateCheck chk = certificate_verify(s, {Int(c), Int(c)});
    CHECK(chk.ok);
  }
  CHECK(certificate_verify(s, {Int(0), Int(0)}).cond_i);
  CHECK(!certificate_verify(s, {Int(0), Int(0)}).ok);  // fails positivity
  CHECK(!certificate_verify(s, {Int(-1), Int(1)}).ok);
}

TEST_CASE("condition-(i) inequalities carry provenance") {
  auto forms = condition_i_inequalities(p2_f3());
  REQUIRE(forms.size() == 3);  // l on P2; e, f on F3
  CHECK(forms[0].curve_label == "l");
  CHECK(forms[0].host == 0);
  CHECK(forms[0].dot == std::vector<Int>{Int(-3), Int(1)});
  CHECK(forms[1].curve_label == "e");
  CHECK(forms[1].dot == std::vector<Int>{Int(-3), Int(1)});
  CHECK(forms[2].curve_label == "f");
  CHECK(forms[2].dot == std::vector<Int>{Int(1), Int(-2)});
}
