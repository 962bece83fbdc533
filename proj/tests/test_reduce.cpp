#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oclam/reduce.hpp"

using namespace oclam;
using namespace oclam::test;

TEST_CASE("redex enumeration is deterministic preorder") {
  // star-sum at the root, nothing else
  auto sites = redexes(pt("star(1) <+> star(2)"));
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].rule == Rule::StarSum);
  CHECK(sites[0].path.empty());

  CHECK(redexes(pt("\\x:I. x")).empty());

  // let1 beta at the root, star-sum in the continuation (preorder: root first)
  auto two = redexes(pt("let1(star(2), star(3) <+> star(4))"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].rule == Rule::LetOneBeta);
  CHECK(two[0].path.empty());
  CHECK(two[1].rule == Rule::StarSum);
  CHECK(two[1].path == std::vector<int>{1});
}

TEST_CASE("single steps match the rewrite rules") {
  // let1(star(2), t) ~> 2 <.> t
  TermPtr t0 = pt("let1(star(2), tens(x, y))");
  TermPtr t1 = step_at(t0, {{}, Rule::LetOneBeta});
  CHECK(alpha_eq(t1, pt("2 <.> tens(x, y)")));

  // pair(t,u) <+> pair(v,w) ~> pair(t<+>v, u<+>w)
  TermPtr p = pt("pair(a, b) <+> pair(c, d)");
  CHECK(alpha_eq(step_at(p, {{}, Rule::PairSum}),
                 pt("pair(a <+> c, b <+> d)")));

  // letbang(bang(t), x. u) ~> (t/x)u
  TermPtr b = pt("letbang(bang(star(2)), x:I. tens(x, x))");
  CHECK(alpha_eq(step_at(b, {{}, Rule::BangBeta}),
                 pt("tens(star(2), star(2))")));

  // stale site
  CHECK_THROWS_AS(step_at(pt("x y"), {{}, Rule::LetOneBeta}), InvalidSite);
}

TEST_CASE("scalar folding is exact and single-step") {
  auto r1 = normalize(pt("star(1) <+> star(2)"));
  CHECK(r1.steps == 1);
  CHECK(alpha_eq(r1.term, pt("star(3)")));

  auto r2 = normalize(pt("2 <.> star(3)"));
  CHECK(r2.steps == 1);
  CHECK(alpha_eq(r2.term, pt("star(6)")));

  auto r3 = normalize(pt("unit <+> unit"));
  CHECK(r3.steps == 1);
  CHECK(alpha_eq(r3.term, pt("unit")));
}

TEST_CASE("two-by-two matrix application reduces like the example") {
  // a=1,b=2,c=3,d=4 applied to (e,f)=(5,7):
  // expect (a*e + c*f, b*e + d*f) = (26, 38)
  TermPtr t = pt(
      "(\\x:I&I. fst(x, y:I. let1(y, pair(star(1), star(2)))) <+> "
      "snd(x, z:I. let1(z, pair(star(3), star(4))))) pair(star(5), star(7))");
  auto r = normalize(t);
  CHECK_FALSE(r.fuel_exhausted);
  CHECK(alpha_eq(r.term, pt("pair(star(26), star(38))")));
}

TEST_CASE("identity 1x1 compiled-matrix trace") {
  // (\x:I. let1(x, star(1))) star(7): app-beta, let1-beta, star-prod
  TermPtr t = pt("(\\x:I. let1(x, star(1))) star(7)");
  auto r = normalize(t, Strategy::leftmost_outermost(), 100000, false, true);
  CHECK(r.steps == 3);
  CHECK(alpha_eq(r.term, pt("star(7)")));
  REQUIRE(r.trace.size() == 4);
  CHECK(alpha_eq(r.trace[1], pt("let1(star(7), star(1))")));
  CHECK(alpha_eq(r.trace[2], pt("7 <.> star(1)")));
}

TEST_CASE("beta under binders uses capture-avoiding substitution") {
  // (\x:I -o I. \y:I. x y) y  ~>  \y':I. y y'
  TermPtr t = pt("(\\x:I -o I. \\y:I. x y) y");
  auto r = normalize(t);
  REQUIRE(r.term->tag == TermTag::Lam);
  CHECK(r.term->name != "y");
  CHECK(alpha_eq(r.term, pt("\\z:I. y z")));
}

TEST_CASE("fuel exhaustion reports the last term") {
  TermPtr t = pt("let1(star(2), star(3) <+> star(4))");
  auto r = normalize(t, Strategy::leftmost_outermost(), 1);
  CHECK(r.fuel_exhausted);
  CHECK(r.steps == 1);
  CHECK_FALSE(redexes(r.term).empty());
}

TEST_CASE("random strategy is deterministic per seed and confluent here") {
  TermPtr t = pt(
      "(\\x:I&I. fst(x, y:I. let1(y, pair(star(1), star(2)))) <+> "
      "snd(x, z:I. let1(z, pair(star(3), star(4))))) pair(star(5), star(7))");
  auto lo = normalize(t);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto r1 = normalize(t, Strategy::random(seed));
    auto r2 = normalize(t, Strategy::random(seed));
    CHECK(r1.steps == r2.steps);
    CHECK(alpha_eq(r1.term, r2.term));
    CHECK(alpha_eq(r1.term, lo.term));
  }
}

TEST_CASE("ultra-reduction rules") {
  auto sites = redexes(pt("x <+> y"), true);
  REQUIRE(sites.size() == 2);
  CHECK(sites[0].rule == Rule::UltraSumLeft);
  CHECK(sites[1].rule == Rule::UltraSumRight);
  CHECK(alpha_eq(step_at(pt("x <+> y"), sites[0]), pt("x")));
  CHECK(alpha_eq(step_at(pt("x <+> y"), sites[1]), pt("y")));
  CHECK(alpha_eq(step_at(pt("2 <.> x"), {{}, Rule::UltraProd}), pt("x")));
  // plain mode does not see them
  CHECK(redexes(pt("x <+> y"), false).empty());
}

TEST_CASE("classification of closed normal forms") {
  CHECK(classify_normal(pt("star(5)"), ty("I")) == Classification::ScalarStar);
  CHECK(classify_normal(pt("tens(star(1), star(2)) <+> tens(star(3), star(4))"),
                        ty("I * I")) == Classification::Sum);
  CHECK(classify_normal(pt("pair(star(1), star(2))"), ty("I & I")) ==
        Classification::Pair);
  CHECK(classify_normal(pt("\\x:I. x"), ty("I -o I")) ==
        Classification::Lambda);
  CHECK(classify_normal(pt("unit"), ty("Top")) == Classification::Unit);
  CHECK(classify_normal(pt("bang(star(1))"), ty("!I")) ==
        Classification::BangIntro);
  CHECK(classify_normal(pt("inr[I](star(1))"), ty("I (+) I")) ==
        Classification::Inr);
  // violations and preconditions
  CHECK(classify_normal(pt("pair(star(1), star(2))"), ty("I * I")) ==
        Classification::Violation);
  CHECK(classify_normal(pt("star(1) <+> star(2)"), ty("I")) ==
        Classification::NotNormal);
  CHECK(classify_normal(pt("x"), ty("I")) == Classification::NotClosed);
}

TEST_CASE("commutation rules rewrite scrutinees of eliminators") {
  TermPtr t = pt("lettens(a <+> b, x:I, y:I. tens(x, y))");
  CHECK(alpha_eq(step_at(t, {{}, Rule::TensElimSum}),
                 pt("lettens(a, x:I, y:I. tens(x, y)) <+> "
                    "lettens(b, x:I, y:I. tens(x, y))")));

  TermPtr u = pt("case(2 <.> s, x:I. x, y:I. y)");
  CHECK(alpha_eq(step_at(u, {{}, Rule::PlusElimProd}),
                 pt("2 <.> case(s, x:I. x, y:I. y)")));

  TermPtr v = pt("letbang(b1 <+> b2, x:I. star(1))");
  CHECK(alpha_eq(step_at(v, {{}, Rule::BangElimSum}),
                 pt("letbang(b1, x:I. star(1)) <+> letbang(b2, x:I. star(1))")));

  TermPtr w = pt("(\\x:I. x) <+> (\\y:I. 2 <.> y)");
  CHECK(alpha_eq(step_at(w, {{}, Rule::LamSum}),
                 pt("\\x:I. x <+> 2 <.> x")));

  TermPtr z = pt("3 <.> pair(a, b)");
  CHECK(alpha_eq(step_at(z, {{}, Rule::PairProd}),
                 pt("pair(3 <.> a, 3 <.> b)")));
}
