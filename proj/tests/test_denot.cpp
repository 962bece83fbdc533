#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oclam/denot.hpp"
#include "oclam/encode.hpp"

using namespace oclam;
using namespace oclam::test;

namespace {

const Semiring& NAT = Semiring::nat();

SemValuePtr sc(long v) { return sv_scalar(NAT.from_int(v)); }
SemValuePtr pr(long a, long b) { return sv_pair(sc(a), sc(b)); }

CanonValue canon_or_fail(const TypePtr& a, const SemValuePtr& v) {
  auto c = canonicalize(a, v, NAT);
  REQUIRE(c.has_value());
  return *c;
}

std::vector<Scalar> nats(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.push_back(NAT.from_int(x));
  return out;
}

} // namespace

TEST_CASE("interp_type descriptors") {
  auto ii = interp_type(ty("I&I"), NAT);
  CHECK(ii.enumerable);
  CHECK(ii.decidable);
  REQUIRE(ii.basis.size() == 2);
  CHECK(canon_or_fail(ty("I&I"), ii.basis[0]).vec == nats({1, 0}));
  CHECK(canon_or_fail(ty("I&I"), ii.basis[1]).vec == nats({0, 1}));

  auto bang = interp_type(ty("!(I&I)"), NAT);
  CHECK_FALSE(bang.enumerable);
  CHECK(bang.decidable);

  auto opaque = interp_type(ty("(I -o I) -o I"), NAT);
  CHECK_FALSE(opaque.enumerable);
  CHECK_FALSE(opaque.decidable);

  // zero-dimensional modules
  CHECK(interp_type(ty("Top"), NAT).enumerable);
  CHECK(interp_type(ty("Top"), NAT).basis.empty());
  CHECK(interp_type(ty("Top * I"), NAT).basis.empty());
}

TEST_CASE("semimodule operations") {
  CHECK(canon_or_fail(ty("I&I"), vadd(ty("I&I"), pr(2, 3), pr(4, 5), NAT)).vec ==
        nats({6, 8}));

  SemValuePtr b = sv_bang({{NAT.one(), sc(3)}});
  SemValuePtr scaled = vsmul(ty("!I"), NAT.from_int(2), b, NAT);
  CHECK(canon_or_fail(ty("!I"), scaled).str() == "{2*[3]}");

  // atom merging under addition
  SemValuePtr merged = vadd(ty("!I"), b, b, NAT);
  CHECK(canon_or_fail(ty("!I"), merged).str() == "{2*[3]}");

  // the universal zero is the additive identity everywhere
  CHECK(canon_or_fail(ty("I&I"), vadd(ty("I&I"), sv_zero(), pr(1, 2), NAT)).vec ==
        nats({1, 2}));
}

TEST_CASE("comonad maps, hand-computed") {
  // eps: 2*3 + 1*4 = 10
  SemValuePtr b = sv_bang({{NAT.from_int(2), sc(3)}, {NAT.one(), sc(4)}});
  CHECK(canon_or_fail(ty("I"), comonad_eps(ty("I"), b, NAT)).vec == nats({10}));

  // delta: 5*v becomes 5*(1*v)
  SemValuePtr d = comonad_delta(ty("I"), sv_bang({{NAT.from_int(5), sc(7)}}), NAT);
  CHECK(canon_or_fail(ty("!(!I)"), d).str() == "{5*{1*[7]}}");

  // erase: weight sum
  SemValuePtr e = comonad_erase(
      sv_bang({{NAT.from_int(2), sc(1)}, {NAT.from_int(3), sc(9)}}), NAT);
  CHECK(canon_or_fail(ty("I"), e).vec == nats({5}));

  // dup: atom-wise duplication as a tensor of singletons
  SemValuePtr dup = comonad_dup(ty("I"), sv_bang({{NAT.from_int(2), sc(3)}}), NAT);
  REQUIRE(dup->kind == SemValue::Kind::Tensor);
  REQUIRE(dup->tensor.size() == 1);
  CHECK(dup->tensor[0].weight == NAT.from_int(2));
  CHECK(canon_or_fail(ty("!I"), dup->tensor[0].left).str() == "{1*[3]}");

  // merge: pointwise products of weights over tensor atoms
  SemValuePtr m =
      comonad_merge(ty("I"), ty("I"), sv_bang({{NAT.from_int(2), sc(3)}}),
                    sv_bang({{NAT.from_int(3), sc(4)}}), NAT);
  CHECK(canon_or_fail(ty("!(I*I)"), m).str() == "{6*[12]}");
}

TEST_CASE("comonoid laws on sampled formal sums") {
  std::vector<SemValuePtr> samples = {
      sv_bang({{NAT.one(), sc(2)}}),
      sv_bang({{NAT.from_int(2), sc(3)}, {NAT.one(), sc(4)}}),
      sv_bang({{NAT.one(), sc(0)}, {NAT.from_int(3), sc(1)}}),
  };
  for (const auto& b : samples) {
    // (erase (x) id) . dup == id, after collapsing I (x) !I
    SemValuePtr dup = comonad_dup(ty("I"), b, NAT);
    SemValuePtr collapsed = sv_zero();
    for (const auto& at : dup->tensor) {
      SemValuePtr w = comonad_erase(at.left, NAT);
      SemValuePtr scaled =
          vsmul(ty("!I"), NAT.mul(at.weight, w->scalar), at.right, NAT);
      collapsed = vadd(ty("!I"), collapsed, scaled, NAT);
    }
    auto eq = sem_eq(ty("!I"), collapsed, b, NAT);
    REQUIRE(eq.has_value());
    CHECK(*eq);

    // coassociativity: both re-associations flatten to the same triples
    auto flatten = [&](bool left_nested) {
      std::vector<std::string> out;
      for (const auto& at : dup->tensor) {
        SemValuePtr inner = comonad_dup(ty("I"), left_nested ? at.left : at.right, NAT);
        for (const auto& in : inner->tensor) {
          Scalar w = NAT.mul(at.weight, in.weight);
          auto c1 = canon_or_fail(ty("!I"), left_nested ? in.left : at.left);
          auto c2 = canon_or_fail(ty("!I"), left_nested ? in.right : in.left);
          auto c3 = canon_or_fail(ty("!I"), left_nested ? at.right : in.right);
          out.push_back(w.str() + "|" + c1.str() + c2.str() + c3.str());
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(flatten(true) == flatten(false));
  }
}

TEST_CASE("pair of stars denotes n |-> (an, bn)") {
  // a=3, b=4
  SemValuePtr v = eval_closed(pt("pair(star(3), star(4))"), NAT);
  CHECK(canon_or_fail(ty("I&I"), v).vec == nats({3, 4}));
  for (long n : {0L, 1L, 2L, 5L}) {
    SemValuePtr at_n = vsmul(ty("I&I"), NAT.from_int(n), v, NAT);
    CHECK(canon_or_fail(ty("I&I"), at_n).vec == nats({3 * n, 4 * n}));
  }
}

TEST_CASE("scalar product coincides with iterated sum") {
  SemValuePtr twice = eval_closed(pt("2 <.> pair(star(3), star(4))"), NAT);
  SemValuePtr summed =
      eval_closed(pt("pair(star(3), star(4)) <+> pair(star(3), star(4))"), NAT);
  for (long n : {1L, 2L, 7L}) {
    auto eq = sem_eq(ty("I&I"), vsmul(ty("I&I"), NAT.from_int(n), twice, NAT),
                     vsmul(ty("I&I"), NAT.from_int(n), summed, NAT), NAT);
    REQUIRE(eq.has_value());
    CHECK(*eq);
  }
}

TEST_CASE("bang of a pair vs pair of bangs") {
  for (auto [a, b, n] : std::vector<std::array<long, 3>>{
           {1, 2, 1}, {2, 3, 2}, {0, 1, 5}}) {
    std::string pair_term = "pair(star(" + std::to_string(a) + "), star(" +
                            std::to_string(b) + "))";
    SemValuePtr whole = vsmul(ty("!(I&I)"), NAT.from_int(n),
                              eval_closed(pt("bang(" + pair_term + ")"), NAT),
                              NAT);
    // single atom (a,b) with weight n
    CanonValue cw = canon_or_fail(ty("!(I&I)"), whole);
    REQUIRE(cw.sum.size() == (n == 0 ? 0u : 1u));
    if (n != 0) {
      CHECK(cw.sum[0].second == NAT.from_int(n));
      CHECK(cw.sum[0].first.vec == nats({a, b}));
    }

    std::string bangs = "pair(bang(star(" + std::to_string(a) +
                        ")), bang(star(" + std::to_string(b) + ")))";
    SemValuePtr split = vsmul(ty("!I & !I"), NAT.from_int(n),
                              eval_closed(pt(bangs), NAT), NAT);
    REQUIRE(split->kind == SemValue::Kind::Pair);
    CanonValue cl = canon_or_fail(ty("!I"), split->fst);
    CanonValue cr = canon_or_fail(ty("!I"), split->snd);
    if (n != 0) {
      REQUIRE(cl.sum.size() == 1);
      CHECK(cl.sum[0].second == NAT.from_int(n));
      CHECK(cl.sum[0].first.vec == nats({a}));
      REQUIRE(cr.sum.size() == 1);
      CHECK(cr.sum[0].first.vec == nats({b}));
    }
    // the two shapes are different values at different types
    CHECK(whole->kind != split->kind);
  }
}

TEST_CASE("Hadamard denotes (y,z) |-> (y+z, y-z)") {
  const Semiring& crat = Semiring::crat();
  TermPtr h = parse_term(
      "\\x:I&I. fst(x, y:I. let1(y, pair(star(1), star(1)))) <+> "
      "snd(x, z:I. let1(z, pair(star(1), star((-1, 0)))))",
      crat);
  SemValuePtr f = eval_closed(h, crat);
  auto c = canonicalize(ty("(I&I) -o (I&I)"), f, crat);
  REQUIRE(c.has_value());
  REQUIRE(c->kind == CanonValue::Kind::Fn);
  REQUIRE(c->fn.size() == 2);
  // columns (1,1) and (1,-1)
  CHECK(c->fn[0].vec[0] == crat.one());
  CHECK(c->fn[0].vec[1] == crat.one());
  CHECK(c->fn[1].vec[0] == crat.one());
  CHECK(c->fn[1].vec[1] == Scalar::crat(-1, 0));

  // extensional check on a non-basis input (y,z) = (2,5)
  SemValuePtr out = sem_apply(ty("(I&I) -o (I&I)"), f,
                              sv_pair(sv_scalar(crat.from_int(2)),
                                      sv_scalar(crat.from_int(5))));
  auto co = canonicalize(ty("I&I"), out, crat);
  CHECK(co->vec[0] == crat.from_int(7));
  CHECK(co->vec[1] == Scalar::crat(-3, 0));
}

TEST_CASE("bilinear expansion of tensor values") {
  // atoms e1(x)e2 + e2(x)e1 at (I&I)*(I&I): coefficients [0,1,1,0]
  SemValuePtr e1 = pr(1, 0), e2 = pr(0, 1);
  SemValuePtr v = sv_tensor({{NAT.one(), e1, e2}, {NAT.one(), e2, e1}});
  CHECK(canon_or_fail(ty("(I&I)*(I&I)"), v).vec == nats({0, 1, 1, 0}));
}

TEST_CASE("let1 against scalar product, the soundness example") {
  SemValuePtr l = eval_closed(pt("let1(star(3), pair(star(1), star(2)))"), NAT);
  SemValuePtr r = eval_closed(pt("3 <.> pair(star(1), star(2))"), NAT);
  CHECK(canon_or_fail(ty("I&I"), l).vec == nats({3, 6}));
  CHECK(canon_or_fail(ty("I&I"), r).vec == nats({3, 6}));
}

TEST_CASE("open sum under an environment") {
  auto typed = annotate({}, {{"x", ty("I")}}, pt("x <+> x"));
  REQUIRE(typed.ok());
  SemEnv env;
  env.linear["x"] = sc(5);
  CHECK(canon_or_fail(ty("I"), eval(*typed, env, NAT)).vec == nats({10}));
}

TEST_CASE("sem_eq is unsupported exactly at opaque types") {
  SemValuePtr id_fun = eval_closed(pt("\\f:I -o I. f"), NAT);
  CHECK_FALSE(sem_eq(ty("(I -o I) -o I -o I"), id_fun, id_fun, NAT).has_value());

  SemValuePtr v = eval_closed(pt("\\x:I. x"), NAT);
  auto eq = sem_eq(ty("I -o I"), v, v, NAT);
  REQUIRE(eq.has_value());
  CHECK(*eq);
}

TEST_CASE("intuitionistic environment uses: eps, erase, and duplication") {
  // x in the intuitionistic context, used twice in a tensor
  auto typed = annotate({{"x", ty("I")}}, {}, pt("tens(x, x)"));
  REQUIRE(typed.ok());
  SemEnv env;
  env.intuit["x"] = sv_bang({{NAT.from_int(2), sc(3)}});
  // d yields weight 2 with singleton 3: tensor atom 2*(3 (x) 3)
  SemValuePtr v = eval(*typed, env, NAT);
  CHECK(canon_or_fail(ty("I*I"), v).vec == nats({18}));

  // discarding: star(4) under a nonempty intuitionistic env scales by the
  // erase weight
  auto star_t = annotate({{"x", ty("I")}}, {}, pt("star(4)"));
  REQUIRE(star_t.ok());
  CHECK(canon_or_fail(ty("I"), eval(*star_t, env, NAT)).vec == nats({8}));

  // a two-atom env decomposes into combinations
  SemEnv env2;
  env2.intuit["x"] = sv_bang({{NAT.one(), sc(1)}, {NAT.one(), sc(10)}});
  // tens(x,x) = 1*(1(x)1) + 1*(10(x)10) = 1 + 100 = 101 as a coefficient
  CHECK(canon_or_fail(ty("I*I"), eval(*typed, env2, NAT)).vec == nats({101}));
}

TEST_CASE("lazy and eager bang elimination agree") {
  const char* samples[] = {
      "letbang(bang(star(2)), x:I. tens(x, x))",
      "letbang(bang(star(3)) <+> bang(star(4)), x:I. tens(x, x))",
      "letbang(2 <.> bang(star(1) <+> star(2)), x:I. pair(x, x))",
      "letbang(bang(pair(star(1), star(2))), p:I&I. fst(p, a:I. a))",
  };
  const TypePtr types[] = {ty("I*I"), ty("I*I"), ty("I&I"), ty("I")};
  for (size_t i = 0; i < 4; ++i) {
    SemValuePtr lazy = eval_closed(pt(samples[i]), NAT, BangElimMode::Lazy);
    SemValuePtr eager = eval_closed(pt(samples[i]), NAT, BangElimMode::Eager);
    auto eq = sem_eq(types[i], lazy, eager, NAT);
    REQUIRE(eq.has_value());
    CHECK(*eq);
  }
  // sanity: the two-atom case computes 1*(3(x)3) + 1*(4(x)4) = 25
  CHECK(canon_or_fail(ty("I*I"),
                      eval_closed(pt(samples[1]), NAT)).vec == nats({25}));
}

TEST_CASE("model agrees with the vector encoding on samples") {
  const char* samples[] = {
      "pair(star(2), star(3)) <+> pair(star(4), star(5))",
      "2 <.> pair(star(1), pair(star(4), star(0)))",
      "(\\x:I&I. x) pair(star(3), star(1))",
      "fst(pair(pair(star(1), star(2)), pair(star(3), star(4))), "
      "p:I&I. p) <+> pair(star(5), star(6))",
  };
  const TypePtr types[] = {ty("I&I"), ty("I&(I&I)"), ty("I&I"), ty("I&I")};
  for (size_t i = 0; i < 4; ++i) {
    Vector v = term_to_vec(pt(samples[i]), types[i]);
    CanonValue c = canon_or_fail(types[i], eval_closed(pt(samples[i]), NAT));
    REQUIRE(c.vec.size() == v.entries.size());
    CHECK(c.vec == v.entries);
  }
}

TEST_CASE("soundness_check runs over sampled environments") {
  // closed: beta step
  TermPtr t = pt("(\\x:I. x <+> x) star(3)");
  auto sites = redexes(t);
  REQUIRE_FALSE(sites.empty());
  auto rep = soundness_check(t, {}, {}, sites[0], NAT, 11);
  CHECK(rep.passed);
  CHECK(rep.envs_checked > 0);

  // open with a linear variable
  TermPtr u = pt("let1(y, star(1) <+> star(2))");
  auto usites = redexes(u);
  REQUIRE_FALSE(usites.empty());
  for (const auto& site : usites) {
    auto urep = soundness_check(u, {}, {{"y", ty("I")}}, site, NAT, 12);
    CHECK(urep.passed);
    CHECK(urep.envs_checked > 0);
  }

  // open with an intuitionistic variable, rule letbang-sum
  TermPtr w = pt("letbang(bang(x) <+> bang(x), z:I. tens(z, z))");
  auto wsites = redexes(w);
  bool found = false;
  for (const auto& s : wsites)
    if (s.rule == Rule::BangElimSum) {
      auto wrep = soundness_check(w, {{"x", ty("I")}}, {}, s, NAT, 13);
      CHECK(wrep.passed);
      CHECK(wrep.envs_checked > 0);
      found = true;
    }
  CHECK(found);

  // undecidable result type on a closed term: context observations
  TermPtr v = pt("(\\f:I -o I. \\g:(I -o I) -o I. g f) (\\x:I. x <+> x)");
  auto vsites = redexes(v);
  REQUIRE_FALSE(vsites.empty());
  auto vrep = soundness_check(v, {}, {}, vsites[0], NAT, 14);
  CHECK(vrep.passed);
}

#include "oclam/gen.hpp"

TEST_CASE("every FunV produced by eval is a semimodule homomorphism") {
  GenConfig cfg;
  cfg.seed = 2718;
  cfg.max_size = 16;
  Generator g(cfg);
  int checked = 0;
  for (int it = 0; it < 400 && checked < 50; ++it) {
    TypePtr a = ty_lolli(g.gen_binder_type(), g.gen_type());
    if (!interp_type(a->a, NAT).enumerable) continue;
    if (!interp_type(a->b, NAT).decidable) continue;
    auto mt = g.gen_closed(a);
    if (!mt) continue;
    SemValuePtr f = eval_closed(*mt, NAT);
    auto basis = interp_type(a->a, NAT).basis;
    if (basis.empty()) continue;
    SemValuePtr u = basis[0];
    SemValuePtr v = basis[basis.size() - 1];
    // f(u + v) = f(u) + f(v)
    auto lhs = sem_apply(a, f, vadd(a->a, u, v, NAT));
    auto rhs = vadd(a->b, sem_apply(a, f, u), sem_apply(a, f, v), NAT);
    auto eq = sem_eq(a->b, lhs, rhs, NAT);
    REQUIRE(eq.has_value());
    CAPTURE(print_term(*mt));
    REQUIRE(*eq);
    // f(3u) = 3 f(u)
    Scalar three = NAT.from_int(3);
    auto hl = sem_apply(a, f, vsmul(a->a, three, u, NAT));
    auto hr = vsmul(a->b, three, sem_apply(a, f, u), NAT);
    auto heq = sem_eq(a->b, hl, hr, NAT);
    REQUIRE(heq.has_value());
    REQUIRE(*heq);
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("sem_eq is reflexive on generated values") {
  GenConfig cfg;
  cfg.seed = 1618;
  cfg.max_size = 14;
  Generator g(cfg);
  int checked = 0;
  for (int it = 0; it < 400 && checked < 100; ++it) {
    TypePtr a = g.gen_type();
    if (!interp_type(a, NAT).decidable) continue;
    auto t = g.gen_closed(a);
    if (!t) continue;
    SemValuePtr v = eval_closed(*t, NAT);
    auto eq = sem_eq(a, v, v, NAT);
    REQUIRE(eq.has_value());
    REQUIRE(*eq);
    ++checked;
  }
  CHECK(checked == 100);
}
