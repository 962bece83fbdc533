#include "oclam/props.hpp"

#include <stdexcept>

#include "oclam/denot.hpp"
#include "oclam/encode.hpp"
#include "oclam/equiv.hpp"
#include "oclam/parse.hpp"
#include "oclam/reduce.hpp"
#include "oclam/rng.hpp"
#include "oclam/syntax.hpp"
#include "oclam/typecheck.hpp"

namespace oclam {

std::string PropResult::summary() const {
  std::string out = name + ": " + (ok() ? "pass" : "FAIL") + " (" +
                    std::to_string(passes) + "/" + std::to_string(runs) +
                    " checked";
  if (giveups) out += ", " + std::to_string(giveups) + " give-ups";
  if (skipped) out += ", " + std::to_string(skipped) + " skipped";
  if (max_steps) out += ", max steps " + std::to_string(max_steps);
  out += ")";
  for (const auto& f : failure_notes) out += "\n  witness: " + f;
  return out;
}

namespace {

Generator make_gen(const PropConfig& cfg, uint64_t salt) {
  GenConfig g;
  g.seed = cfg.seed ^ (salt * 0x9e3779b97f4a7c15ULL + salt);
  g.max_size = cfg.size;
  g.type_depth = cfg.type_depth;
  g.semiring = cfg.semiring;
  return Generator(g);
}

void note_failure(PropResult& r, const std::string& what) {
  r.failures++;
  if (r.failure_notes.size() < 5) r.failure_notes.push_back(what);
}

// Shrinks a failing term while `fails` keeps holding; terms must stay
// well-typed and fully consuming in the same contexts.
TermPtr shrink_while(const TermPtr& t0, const Context& intuit,
                     const Context& linear,
                     const std::function<bool(const TermPtr&)>& fails) {
  TermPtr cur = t0;
  bool improved = true;
  int rounds = 0;
  while (improved && rounds++ < 64) {
    improved = false;
    for (const TermPtr& cand : shrink(cur)) {
      if (!infer_all_consumed(intuit, linear, cand).ok()) continue;
      if (fails(cand)) {
        cur = cand;
        improved = true;
        break;
      }
    }
  }
  return cur;
}

// A random vector type (with-tree) of dimension <= max_dim.
TypePtr random_vector_type(Rng& rng, int max_dim) {
  int d = 1 + static_cast<int>(rng.below(static_cast<size_t>(max_dim)));
  std::function<TypePtr(int)> build = [&](int n) -> TypePtr {
    if (n <= 1) return ty_one();
    int left = 1 + static_cast<int>(rng.below(static_cast<size_t>(n - 1)));
    return ty_with(build(left), build(n - left));
  };
  return build(d);
}

struct OpenCtx {
  Context intuit, linear;
};

// Mixed closed/open generation targets: some samples get a linear or an
// intuitionistic variable in scope.
OpenCtx sample_ctx(Generator& gen, Rng& rng) {
  OpenCtx ctx;
  switch (rng.below(4)) {
    case 0:
      ctx.linear.push_back({"lv", gen.gen_binder_type()});
      break;
    case 1:
      ctx.intuit.push_back({"iv", gen.gen_binder_type()});
      break;
    default:
      break;
  }
  return ctx;
}

} // namespace

std::vector<CorpusEntry> soundness_corpus() {
  const Semiring& nat = Semiring::nat();
  auto closed = [&](const char* s) {
    return CorpusEntry{parse_term(s, nat), {}, {}};
  };
  std::vector<CorpusEntry> out = {
      // one entry per beta rule
      closed("let1(star(2), pair(star(1), star(3)))"),
      closed("(\\x:I. x <+> x) star(2)"),
      closed("lettens(tens(star(1), star(2)), x:I, y:I. let1(x, y))"),
      closed("fst(pair(star(1), star(2)), x:I. x)"),
      closed("snd(pair(star(1), star(2)), x:I. x)"),
      closed("case(inl[I](star(1)), x:I. x, y:I. y)"),
      closed("case(inr[I](star(2)), x:I. x, y:I. y)"),
      closed("letbang(bang(star(2)), x:I. tens(x, x))"),
      // one per commutation rule
      closed("star(1) <+> star(2)"),
      closed("2 <.> star(3)"),
      closed("(\\x:I. x) <+> (\\x:I. 2 <.> x)"),
      closed("2 <.> (\\x:I. x)"),
      closed("lettens(tens(star(1), star(1)) <+> tens(star(2), star(2)), "
             "x:I, y:I. let1(x, y))"),
      closed("lettens(2 <.> tens(star(1), star(3)), x:I, y:I. let1(x, y))"),
      closed("unit <+> unit"),
      closed("2 <.> unit"),
      closed("pair(star(1), star(2)) <+> pair(star(3), star(4))"),
      closed("2 <.> pair(star(1), star(2))"),
      closed("case(inl[I](star(1)) <+> inr[I](star(2)), x:I. x, y:I. 2 <.> y)"),
      closed("case(3 <.> inl[I](star(1)), x:I. x, y:I. y)"),
      closed("letbang(bang(star(1)) <+> bang(star(2)), x:I. tens(x, x))"),
      closed("letbang(2 <.> bang(star(3)), x:I. pair(x, x))"),
      // composites
      closed("(\\p:I&I. fst(p, a:I. a) <+> snd(p, b:I. b)) "
             "(pair(star(1), star(2)) <+> pair(star(3), star(4)))"),
      closed("(\\f:I -o I. f star(2)) ((\\x:I. x) <+> (\\x:I. 2 <.> x))"),
      closed("lettens(tens(star(1) <+> star(2), star(3)), x:I, y:I. "
             "let1(x, let1(y, star(1))))"),
      closed("letbang(bang(pair(star(1), star(2))), p:I&I. "
             "fst(p, a:I. a) <+> snd(p, b:I. b))"),
      closed("case(inl[I&I](star(1) <+> star(2)), x:I. let1(x, "
             "pair(star(9), star(0))), p:I&I. p)"),
      closed("2 <.> (star(1) <+> star(3))"),
      closed("(\\x:I. \\y:I. let1(y, x)) star(5)"),
      closed("letbang(bang(star(1)), u:I. (\\x:I. x <+> x) (u <+> star(2)))"),
  };
  return out;
}

PropResult prop_subject_reduction(const PropConfig& cfg) {
  PropResult r{"sr"};
  Generator gen = make_gen(cfg, 1);
  Rng rng(cfg.seed ^ 0x51);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    OpenCtx ctx = sample_ctx(gen, rng);
    TypePtr a = gen.gen_type();
    auto t = gen.gen_term(ctx.intuit, ctx.linear, a);
    if (!t) {
      r.giveups++;
      continue;
    }
    auto before = infer(ctx.intuit, ctx.linear, *t);
    if (!before.ok()) {
      note_failure(r, "generator emitted ill-typed term " + print_term(*t));
      continue;
    }
    r.runs++;
    bool good = true;
    for (const RedexSite& site : redexes(*t)) {
      TermPtr u = step_at(*t, site);
      auto after = infer(ctx.intuit, ctx.linear, u);
      if (!after.ok() || !type_match(before->type, after->type) ||
          before->used != after->used) {
        good = false;
        TermPtr witness = shrink_while(
            *t, ctx.intuit, ctx.linear, [&](const TermPtr& cand) {
              for (const RedexSite& s : redexes(cand)) {
                auto b = infer(ctx.intuit, ctx.linear, cand);
                auto aft = infer(ctx.intuit, ctx.linear, step_at(cand, s));
                if (!b.ok()) return false;
                if (!aft.ok() || !type_match(b->type, aft->type) ||
                    b->used != aft->used)
                  return true;
              }
              return false;
            });
        note_failure(r, print_term(witness) + " via " +
                            std::string(rule_name(site.rule)));
        break;
      }
    }
    if (good) r.passes++;
  }
  return r;
}

PropResult prop_confluence(const PropConfig& cfg) {
  PropResult r{"confluence"};
  Generator gen = make_gen(cfg, 2);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = gen.gen_type();
    auto t = gen.gen_closed(a);
    if (!t) {
      r.giveups++;
      continue;
    }
    r.runs++;
    NormalizeResult lo = normalize(*t, Strategy::leftmost_outermost(), cfg.fuel);
    if (lo.fuel_exhausted) {
      note_failure(r, "fuel exhausted on " + print_term(*t));
      continue;
    }
    bool good = true;
    for (uint64_t s = 0; s < 10; ++s) {
      NormalizeResult rnd = normalize(*t, Strategy::random(cfg.seed + s), cfg.fuel);
      if (rnd.fuel_exhausted || !alpha_eq(rnd.term, lo.term)) {
        good = false;
        note_failure(r, print_term(*t) + " diverges under seed " +
                            std::to_string(cfg.seed + s));
        break;
      }
    }
    if (good) r.passes++;
  }
  return r;
}

PropResult prop_introduction(const PropConfig& cfg) {
  PropResult r{"intro"};
  Generator gen = make_gen(cfg, 3);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = gen.gen_type();
    auto t = gen.gen_closed(a);
    if (!t) {
      r.giveups++;
      continue;
    }
    r.runs++;
    NormalizeResult nf = normalize(*t, Strategy::leftmost_outermost(), cfg.fuel);
    if (nf.fuel_exhausted) {
      note_failure(r, "fuel exhausted on " + print_term(*t));
      continue;
    }
    Classification c = classify_normal(nf.term, a);
    if (c == Classification::Violation || c == Classification::NotNormal ||
        c == Classification::NotClosed) {
      note_failure(r, print_term(nf.term) + " at " + print_type(a) + " -> " +
                          std::string(classification_name(c)));
      continue;
    }
    r.passes++;
  }
  // No closed normal inhabitant of Zero may ever be produced.
  for (int it = 0; it < 50; ++it) {
    if (auto t = gen.gen_closed(ty_zero())) {
      note_failure(r, "generator produced an inhabitant of Zero: " +
                          print_term(*t));
    }
  }
  return r;
}

PropResult prop_termination(const PropConfig& cfg) {
  PropResult r{"termination"};
  Generator gen = make_gen(cfg, 4);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = gen.gen_type();
    auto t = gen.gen_closed(a);
    if (!t) {
      r.giveups++;
      continue;
    }
    r.runs++;
    NormalizeResult plain = normalize(*t, Strategy::leftmost_outermost(), cfg.fuel);
    NormalizeResult ultra = normalize(*t, Strategy::random(cfg.seed + it),
                                      cfg.fuel, /*ultra=*/true);
    r.max_steps = std::max({r.max_steps, plain.steps, ultra.steps});
    if (plain.fuel_exhausted || ultra.fuel_exhausted) {
      note_failure(r, "fuel exhausted on " + print_term(*t));
      continue;
    }
    r.passes++;
  }
  return r;
}

PropResult prop_linearity(const PropConfig& cfg) {
  PropResult r{"linearity"};
  Rng rng(cfg.seed ^ 0x11ce);
  const Semiring& rat = Semiring::rat();
  for (int it = 0; it < cfg.n; ++it) {
    r.runs++;
    size_t rows = 1 + rng.below(3), cols = 1 + rng.below(3);
    Matrix m{rows, cols, {}};
    for (size_t k = 0; k < rows * cols; ++k)
      m.entries.push_back(Scalar::rat(
          mpq_class(static_cast<long>(rng.below(13)) - 6,
                    1 + static_cast<long>(rng.below(3)))));
    Rng sub(rng.next());
    TypePtr a = random_vector_type(sub, 1), b = random_vector_type(sub, 1);
    // shapes must match the matrix
    std::function<TypePtr(size_t)> mk = [&](size_t d) -> TypePtr {
      TypePtr t = ty_one();
      for (size_t i = 1; i < d; ++i)
        t = sub.chance(1, 2) ? ty_with(t, ty_one()) : ty_with(ty_one(), t);
      return t;
    };
    a = mk(cols);
    b = mk(rows);
    TermPtr f = matrix_to_term(m, a, b);
    Vector u1, u2;
    for (size_t k = 0; k < cols; ++k) {
      u1.entries.push_back(rat.from_int(static_cast<long>(rng.below(7)) - 3));
      u2.entries.push_back(rat.from_int(static_cast<long>(rng.below(7)) - 3));
    }
    Scalar sc = rat.from_int(static_cast<long>(rng.below(9)) - 4);
    auto rep = linearity_check(f, a, b, vec_to_term(u1, a), vec_to_term(u2, a),
                               sc, rat, cfg.obs_depth, cfg.body_budget,
                               cfg.fuel, cfg.seed + it);
    if (!rep.ok()) {
      note_failure(r, "matrix " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " violates linearity");
      continue;
    }
    r.passes++;
  }

  // The motivating counterexample pair stays equivalent at depth 1 and the
  // identity context sends both sides to 3.star.
  const Semiring& nat = Semiring::nat();
  TermPtr t = parse_term("\\x:I. \\y:I -o I. y x", nat);
  TermPtr lhs = mk_app(t, parse_term("star(1) <+> star(2)", nat));
  TermPtr rhs = mk_sum(mk_app(t, parse_term("star(1)", nat)),
                       mk_app(t, parse_term("star(2)", nat)));
  TypePtr ty_obs = parse_type("(I -o I) -o I");
  r.runs++;
  auto verdict = obs_equiv(lhs, rhs, ty_obs, 1, cfg.body_budget, cfg.fuel,
                           cfg.seed, nat);
  ElimFrame app{};
  app.kind = ElimFrame::Kind::App;
  app.arg = parse_term("\\z:I. z", nat);
  app.result = ty_one();
  ElimContext ident{ty_obs, {app}};
  TermPtr l3 = normalize(ident.plug(lhs), Strategy::leftmost_outermost(),
                         cfg.fuel)
                   .term;
  TermPtr r3 = normalize(ident.plug(rhs), Strategy::leftmost_outermost(),
                         cfg.fuel)
                   .term;
  TermPtr three = parse_term("star(3)", nat);
  if (verdict.tag == EquivVerdict::Tag::EquivalentUpToBound &&
      alpha_eq(l3, three) && alpha_eq(r3, three)) {
    r.passes++;
  } else {
    note_failure(r, "counterexample pair misbehaved under `_ (\\z:I. z)`");
  }
  return r;
}

PropResult prop_soundness(const PropConfig& cfg) {
  PropResult r{"soundness"};
  // fixed corpus first: every site of every entry
  for (const CorpusEntry& e : soundness_corpus()) {
    r.runs++;
    bool good = true;
    for (const RedexSite& site : redexes(e.term)) {
      auto rep = soundness_check(e.term, e.intuit, e.linear, site,
                                 Semiring::nat(), cfg.seed);
      if (!rep.passed) {
        good = false;
        note_failure(r, print_term(e.term) + ": " + rep.failure);
        break;
      }
      // both bang-elimination readings must agree on the corpus
      auto eager = soundness_check(e.term, e.intuit, e.linear, site,
                                   Semiring::nat(), cfg.seed,
                                   BangElimMode::Eager);
      if (!eager.passed) {
        good = false;
        note_failure(r, print_term(e.term) + " (eager): " + eager.failure);
        break;
      }
    }
    if (good) r.passes++;
  }

  Generator gen = make_gen(cfg, 6);
  Rng rng(cfg.seed ^ 0x50d);
  const Semiring& ring = Semiring::of(cfg.semiring);
  for (int it = 0; r.runs < cfg.n + 30 && it < cfg.n * 20; ++it) {
    OpenCtx ctx = sample_ctx(gen, rng);
    TypePtr a = gen.gen_type();
    auto t = gen.gen_term(ctx.intuit, ctx.linear, a);
    if (!t) {
      r.giveups++;
      continue;
    }
    auto inferred = infer(ctx.intuit, ctx.linear, *t);
    if (!inferred.ok()) {
      note_failure(r, "ill-typed generator output");
      continue;
    }
    if (!interp_type(inferred->type, ring).decidable) {
      r.skipped++;
      continue;
    }
    r.runs++;
    bool good = true;
    for (const RedexSite& site : redexes(*t)) {
      auto rep = soundness_check(*t, ctx.intuit, ctx.linear, site, ring,
                                 cfg.seed + it);
      if (!rep.passed) {
        good = false;
        note_failure(r, print_term(*t) + " rule " +
                            std::string(rule_name(site.rule)) + ": " +
                            rep.failure);
        break;
      }
    }
    if (good) r.passes++;
  }
  return r;
}

PropResult prop_adequacy(const PropConfig& cfg) {
  PropResult r{"adequacy"};
  Generator gen = make_gen(cfg, 7);
  const Semiring& ring = Semiring::of(cfg.semiring);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = gen.gen_type();
    auto t = gen.gen_closed(a);
    if (!t) {
      r.giveups++;
      continue;
    }
    if (!interp_type(a, ring).decidable) {
      r.skipped++;
      continue;
    }
    NormalizeResult nf = normalize(*t, Strategy::leftmost_outermost(), cfg.fuel);
    if (nf.fuel_exhausted) {
      note_failure(r, "fuel exhausted on " + print_term(*t));
      continue;
    }
    r.runs++;
    auto eq = sem_eq(a, eval_closed(*t, ring), eval_closed(nf.term, ring), ring);
    if (!eq.has_value()) {
      r.skipped++;
      continue;
    }
    if (!*eq) {
      note_failure(r, "denotation changed by normalization: " + print_term(*t));
      continue;
    }
    auto verdict = obs_equiv(*t, nf.term, a, std::min(cfg.obs_depth, 3),
                             cfg.body_budget, cfg.fuel, cfg.seed + it, ring);
    if (verdict.tag == EquivVerdict::Tag::Distinguished) {
      note_failure(r, "equal denotations distinguished: " + print_term(*t) +
                          " under " + print_term(verdict.witness.as_term()));
      continue;
    }
    r.passes++;
  }
  return r;
}

PropResult prop_semimodule(const PropConfig& cfg) {
  PropResult r{"semimodule"};
  Generator gen = make_gen(cfg, 8);
  Rng rng(cfg.seed ^ 0x5e);
  const Semiring& ring = Semiring::of(cfg.semiring);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = random_vector_type(rng, 6);
    auto t1 = gen.gen_closed(a), t2 = gen.gen_closed(a), t3 = gen.gen_closed(a);
    if (!t1 || !t2 || !t3) {
      r.giveups++;
      continue;
    }
    r.runs++;
    Scalar sa = gen.pick_scalar(), sb = gen.pick_scalar();
    TermPtr zero = zero_term(a, ring);
    auto vec = [&](const TermPtr& t) { return term_to_vec(t, a, cfg.fuel); };
    bool good = true;
    auto check = [&](const TermPtr& l, const TermPtr& rterm, const char* law) {
      if (good && !(vec(l) == vec(rterm))) {
        good = false;
        note_failure(r, std::string("law ") + law + " fails at " +
                            print_type(a) + " on " + print_term(l));
      }
    };
    check(mk_sum(mk_sum(*t1, *t2), *t3), mk_sum(*t1, mk_sum(*t2, *t3)),
          "associativity");
    check(mk_sum(*t1, *t2), mk_sum(*t2, *t1), "commutativity");
    check(mk_sum(*t1, zero), *t1, "unit");
    check(mk_smul(sa, mk_smul(sb, *t1)), mk_smul(ring.mul(sa, sb), *t1),
          "product");
    check(mk_smul(ring.one(), *t1), *t1, "identity");
    check(mk_smul(sa, mk_sum(*t1, *t2)),
          mk_sum(mk_smul(sa, *t1), mk_smul(sa, *t2)), "left distributivity");
    check(mk_smul(ring.add(sa, sb), *t1),
          mk_sum(mk_smul(sa, *t1), mk_smul(sb, *t1)), "right distributivity");
    if (good) r.passes++;
  }
  return r;
}

PropResult prop_encoding_agreement(const PropConfig& cfg) {
  PropResult r{"encoding"};
  Generator gen = make_gen(cfg, 9);
  Rng rng(cfg.seed ^ 0xe5c);
  const Semiring& ring = Semiring::of(cfg.semiring);
  for (int it = 0; r.runs < cfg.n && it < cfg.n * 20; ++it) {
    TypePtr a = random_vector_type(rng, 6);
    auto t = gen.gen_closed(a);
    if (!t) {
      r.giveups++;
      continue;
    }
    r.runs++;
    Vector v = term_to_vec(*t, a, cfg.fuel);
    auto c = canonicalize(a, eval_closed(*t, ring), ring);
    if (!c.has_value()) {
      note_failure(r, "vector type unexpectedly unsupported");
      continue;
    }
    if (c->vec != v.entries) {
      note_failure(r, "model disagrees with readback on " + print_term(*t));
      continue;
    }
    r.passes++;
  }
  return r;
}

PropResult prop_matrix_application(const PropConfig& cfg) {
  PropResult r{"matrixapp"};
  Rng rng(cfg.seed ^ 0xa99);
  const Semiring& rat = Semiring::rat();
  TypePtr ii = ty_with(ty_one(), ty_one());
  for (int it = 0; it < cfg.n; ++it) {
    r.runs++;
    Matrix m{2, 2, {}};
    for (int k = 0; k < 4; ++k)
      m.entries.push_back(Scalar::rat(
          mpq_class(static_cast<long>(rng.below(19)) - 9,
                    1 + static_cast<long>(rng.below(4)))));
    Vector u{{Scalar::rat(mpq_class(static_cast<long>(rng.below(19)) - 9,
                                    1 + static_cast<long>(rng.below(4)))),
              Scalar::rat(mpq_class(static_cast<long>(rng.below(19)) - 9,
                                    1 + static_cast<long>(rng.below(4))))}};
    TermPtr app = mk_app(matrix_to_term(m, ii, ii), vec_to_term(u, ii));
    NormalizeResult nf = normalize(app, Strategy::leftmost_outermost(), cfg.fuel);
    if (nf.fuel_exhausted ||
        !alpha_eq(nf.term, vec_to_term(mat_vec_mul(m, u, rat), ii))) {
      note_failure(r, "matrix application mismatch");
      continue;
    }
    r.passes++;
  }
  // five concrete instantiations of the symbolic (a*e + c*f, b*e + d*f)
  long cases[5][6] = {{1, 2, 3, 4, 5, 7},
                      {0, 1, 1, 0, 2, 3},
                      {2, 0, 0, 2, 1, 1},
                      {3, 5, 7, 11, 13, 17},
                      {1, 1, 1, 1, 0, 9}};
  for (auto& cse : cases) {
    r.runs++;
    long a = cse[0], b = cse[1], c = cse[2], d = cse[3], e = cse[4], f = cse[5];
    Matrix m{2, 2, {rat.from_int(a), rat.from_int(c), rat.from_int(b),
                    rat.from_int(d)}};
    Vector u{{rat.from_int(e), rat.from_int(f)}};
    Vector expect{{rat.from_int(a * e + c * f), rat.from_int(b * e + d * f)}};
    TermPtr app = mk_app(matrix_to_term(m, ii, ii), vec_to_term(u, ii));
    if (term_to_vec(app, ii, cfg.fuel) == expect) {
      r.passes++;
    } else {
      note_failure(r, "concrete 2x2 instance mismatch");
    }
  }
  return r;
}

PropResult prop_matrix_roundtrip(const PropConfig& cfg) {
  PropResult r{"roundtrip"};
  Rng rng(cfg.seed ^ 0x707);
  const Semiring& rat = Semiring::rat();
  for (int it = 0; it < cfg.n; ++it) {
    r.runs++;
    size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    std::function<TypePtr(size_t)> mk = [&](size_t d) -> TypePtr {
      if (d == 1) return ty_one();
      size_t l = 1 + rng.below(d - 1);
      return ty_with(mk(l), mk(d - l));
    };
    TypePtr a = mk(cols), b = mk(rows);
    Matrix m{rows, cols, {}};
    for (size_t k = 0; k < rows * cols; ++k)
      m.entries.push_back(Scalar::rat(
          mpq_class(static_cast<long>(rng.below(19)) - 9,
                    1 + static_cast<long>(rng.below(4)))));
    Matrix back = term_to_matrix(matrix_to_term(m, a, b), a, b, rat, cfg.fuel);
    if (back == m) {
      r.passes++;
    } else {
      note_failure(r, "round-trip mismatch at " + print_type(a) + " -> " +
                          print_type(b));
    }
  }
  return r;
}

const std::vector<std::string>& prop_names() {
  static const std::vector<std::string> names = {
      "sr",         "confluence", "intro",     "termination",
      "linearity",  "soundness",  "adequacy",  "semimodule",
      "encoding",   "matrixapp",  "roundtrip"};
  return names;
}

PropResult run_prop(const std::string& name, const PropConfig& cfg) {
  if (name == "sr") return prop_subject_reduction(cfg);
  if (name == "confluence") return prop_confluence(cfg);
  if (name == "intro") return prop_introduction(cfg);
  if (name == "termination") return prop_termination(cfg);
  if (name == "linearity") return prop_linearity(cfg);
  if (name == "soundness") return prop_soundness(cfg);
  if (name == "adequacy") return prop_adequacy(cfg);
  if (name == "semimodule") return prop_semimodule(cfg);
  if (name == "encoding") return prop_encoding_agreement(cfg);
  if (name == "matrixapp") return prop_matrix_application(cfg);
  if (name == "roundtrip") return prop_matrix_roundtrip(cfg);
  throw std::invalid_argument("unknown property '" + name + "'");
}

} // namespace oclam
