#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oclam/equiv.hpp"
#include "oclam/reduce.hpp"

using namespace oclam;
using namespace oclam::test;

namespace {
const Semiring& NAT = Semiring::nat();
}

TEST_CASE("context enumeration basics") {
  // at I with depth 0: just the hole
  auto hole_only = enum_contexts(ty("I"), 0, 6, 1, NAT);
  REQUIRE(hole_only.size() == 1);
  CHECK(hole_only[0].spine.empty());
  CHECK(alpha_eq(hole_only[0].plug(pt("star(7)")), pt("star(7)")));

  // nothing eliminates Top
  CHECK(enum_contexts(ty("Top"), 3, 6, 1, NAT).empty());

  // at I -o I: application frames
  auto app = enum_contexts(ty("I -o I"), 1, 6, 1, NAT);
  REQUIRE_FALSE(app.empty());
  for (const auto& k : app) {
    REQUIRE(k.spine.size() == 1);
    CHECK(k.spine[0].kind == ElimFrame::Kind::App);
    // contexts are well-typed proofs of I with the hole at A
    auto r = infer({}, {{"_", ty("I -o I")}}, k.as_term());
    REQUIRE(r.ok());
    CHECK(type_eq(r->type, ty("I")));
  }
}

TEST_CASE("enumerated contexts are well-typed across connectives") {
  for (const char* a :
       {"I&I", "I*I", "I (+) I", "!I", "(I -o I) -o I", "!(I&I)"}) {
    auto ctxs = enum_contexts(ty(a), 3, 8, 5, NAT, 64);
    CAPTURE(a);
    CHECK_FALSE(ctxs.empty());
    for (const auto& k : ctxs) {
      auto r = infer({}, {{"_", ty(a)}}, k.as_term());
      CAPTURE(print_term(k.as_term()));
      REQUIRE(r.ok());
      CHECK(type_eq(r->type, ty("I")));
    }
  }
}

TEST_CASE("the hole context distinguishes different scalars") {
  auto v = obs_equiv(pt("star(1)"), pt("star(2)"), ty("I"), 0, 6, 1000, 1, NAT);
  REQUIRE(v.tag == EquivVerdict::Tag::Distinguished);
  // replay the witness
  TermPtr lt = normalize(v.witness.plug(pt("star(1)"))).term;
  TermPtr rt = normalize(v.witness.plug(pt("star(2)"))).term;
  CHECK(alpha_eq(lt, v.left_result));
  CHECK(alpha_eq(rt, v.right_result));
  CHECK_FALSE(lt->scalar == rt->scalar);
}

TEST_CASE("reflexivity") {
  TermPtr t = pt("\\x:I. x <+> x");
  auto v = obs_equiv(t, t, ty("I -o I"), 2, 6, 10000, 3, NAT);
  CHECK(v.tag == EquivVerdict::Tag::EquivalentUpToBound);
}

TEST_CASE("the motivating pair: distinct normal forms, equivalent behaviour") {
  // t = \x:I. \y:I -o I. y x
  TermPtr t = pt("\\x:I. \\y:I -o I. y x");
  TermPtr lhs = mk_app(t, pt("star(1) <+> star(2)"));
  TermPtr rhs = mk_sum(mk_app(t, pt("star(1)")), mk_app(t, pt("star(2)")));

  // their normal forms differ syntactically
  TermPtr ln = normalize(lhs).term;
  TermPtr rn = normalize(rhs).term;
  CHECK(alpha_eq(ln, pt("\\y:I -o I. y star(3)")));
  CHECK(alpha_eq(rn, pt("\\y:I -o I. y star(1) <+> y star(2)")));
  CHECK_FALSE(alpha_eq(ln, rn));

  // but no depth-1 context tells them apart
  auto v = obs_equiv(lhs, rhs, ty("(I -o I) -o I"), 1, 6, 10000, 7, NAT);
  CHECK(v.tag == EquivVerdict::Tag::EquivalentUpToBound);
  CHECK(v.contexts_tried > 0);

  // the named witness context `_ (\z:I. z)` sends both to star(3)
  ElimFrame app{};
  app.kind = ElimFrame::Kind::App;
  app.arg = pt("\\z:I. z");
  app.result = ty("I");
  ElimContext k{ty("(I -o I) -o I"), {app}};
  TermPtr l3 = normalize(k.plug(lhs)).term;
  TermPtr r3 = normalize(k.plug(rhs)).term;
  CHECK(alpha_eq(l3, pt("star(3)")));
  CHECK(alpha_eq(r3, pt("star(3)")));
}

TEST_CASE("one-step reducts are never distinguished") {
  const char* samples[] = {
      "(\\x:I. x <+> x) star(2)",
      "let1(star(3), star(4))",
      "fst(pair(star(1), star(2)), x:I. x)",
      "letbang(bang(star(2)), x:I. star(1))",
  };
  for (const char* s : samples) {
    TermPtr t = pt(s);
    auto sites = redexes(t);
    REQUIRE_FALSE(sites.empty());
    TermPtr u = step_at(t, sites[0]);
    auto v = obs_equiv(t, u, ty("I"), 2, 6, 10000, 9, NAT);
    CAPTURE(s);
    CHECK(v.tag == EquivVerdict::Tag::EquivalentUpToBound);
  }
}

TEST_CASE("linearity check: vector route") {
  // H over nat-like entries is fine with rationals too; use a plain matrix
  TermPtr f = pt(
      "\\x:I&I. fst(x, y:I. let1(y, pair(star(1), star(2)))) <+> "
      "snd(x, z:I. let1(z, pair(star(3), star(4))))");
  auto rep = linearity_check(f, ty("I&I"), ty("I&I"), pt("pair(star(1), star(0))"),
                             pt("pair(star(0), star(1))"), NAT.from_int(5), NAT);
  CHECK(rep.vector_route);
  CHECK(rep.ok());
}

TEST_CASE("linearity check: identity with a scalar") {
  auto rep = linearity_check(pt("\\x:I. x"), ty("I"), ty("I"), pt("star(2)"),
                             pt("star(3)"), NAT.from_int(5), NAT);
  CHECK(rep.vector_route);
  CHECK(rep.ok());
}

TEST_CASE("linearity check: observational route at a function type") {
  TermPtr f = pt("\\x:I. \\y:I -o I. y x");
  auto rep = linearity_check(f, ty("I"), ty("(I -o I) -o I"), pt("star(1)"),
                             pt("star(2)"), NAT.from_int(2), NAT, 1);
  CHECK_FALSE(rep.vector_route);
  CHECK(rep.ok());
}

#include "oclam/gen.hpp"

TEST_CASE("measure is additive over elimination contexts") {
  std::map<std::string, TermPtr> samples = {
      {"I", pt("star(3) <+> star(4)")},
      {"I&I", pt("pair(star(1), 2 <.> star(2))")},
      {"I -o I", pt("\\w:I. w")},
      {"!I", pt("bang(star(2))")},
      {"I*I", pt("tens(star(1), star(5))")},
  };
  int checked = 0;
  for (const auto& [a, t] : samples) {
    for (const auto& k : enum_contexts(ty(a), 2, 6, 13, NAT, 32)) {
      // mu(K[t]) = mu(K) + mu(t): the hole variable itself measures 0
      REQUIRE(measure(k.plug(t)) == measure(k.as_term()) + measure(t));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("intuitionistic-hole observations via the bang wrapper") {
  // letbang frames move the hole's content into the intuitionistic context,
  // so contexts at !A observe duplicable uses; they can tell formal sums
  // with different scalars apart.
  auto v = obs_equiv(pt("bang(star(1))"), pt("bang(star(2))"), ty("!I"), 2, 6,
                     10000, 21, NAT);
  CHECK(v.tag == EquivVerdict::Tag::Distinguished);
  bool has_elim_bang = false;
  for (const auto& f : v.witness.spine)
    has_elim_bang |= f.kind == ElimFrame::Kind::ElimBang;
  CHECK(has_elim_bang);
}
