#include "oclam/equiv.hpp"

#include "oclam/reduce.hpp"
#include "oclam/rng.hpp"
#include "oclam/syntax.hpp"

namespace oclam {

TermPtr ElimContext::plug(const TermPtr& t) const {
  TermPtr cur = t;
  for (const auto& f : spine) {
    switch (f.kind) {
      case ElimFrame::Kind::App:
        cur = mk_app(cur, f.arg);
        break;
      case ElimFrame::Kind::ElimOne:
        cur = mk_elim_one(cur, f.body);
        break;
      case ElimFrame::Kind::ElimZero:
        cur = mk_elim_zero(cur);
        break;
      case ElimFrame::Kind::ElimTens:
        cur = mk_elim_tens(cur, f.x, f.ann, f.y, f.ann2, f.body);
        break;
      case ElimFrame::Kind::ElimWith1:
        cur = mk_elim_with1(cur, f.x, f.ann, f.body);
        break;
      case ElimFrame::Kind::ElimWith2:
        cur = mk_elim_with2(cur, f.x, f.ann, f.body);
        break;
      case ElimFrame::Kind::ElimPlus:
        cur = mk_elim_plus(cur, f.x, f.ann, f.body, f.y, f.ann2, f.body2);
        break;
      case ElimFrame::Kind::ElimBang:
        cur = mk_elim_bang(cur, f.x, f.ann, f.body);
        break;
    }
  }
  return cur;
}

namespace {

struct ContextEnum {
  Generator gen;
  Rng rng;
  size_t cap;
  std::vector<ElimContext> out;
  TypePtr hole;

  ContextEnum(const TypePtr& a, int budget, uint64_t seed,
              const Semiring& ring, size_t cap)
      : gen(make_cfg(budget, seed, ring)), rng(seed ^ 0x9e37ULL), cap(cap),
        hole(a) {}

  static GenConfig make_cfg(int budget, uint64_t seed, const Semiring& ring) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_size = budget;
    cfg.semiring = ring.id();
    cfg.type_depth = 1;
    return cfg;
  }

  // Candidate continuation targets; I always included, the rest generated
  // under the size bound (strict for *, (+) and ! frames).
  std::vector<TypePtr> targets(int strict_below) {
    std::vector<TypePtr> out = {ty_one()};
    for (int i = 0; i < 2; ++i) {
      TypePtr t = gen.gen_type();
      if (type_size(t) < strict_below && !type_eq(t, ty_one()))
        out.push_back(t);
    }
    return out;
  }

  void emit(const std::vector<ElimFrame>& spine) {
    if (out.size() >= cap) return;
    out.push_back(ElimContext{hole, spine});
  }

  void expand(const TypePtr& t, int depth, std::vector<ElimFrame>& spine) {
    if (out.size() >= cap) return;
    if (t->tag == TypeTag::One) emit(spine);
    if (depth <= 0) return;

    auto push = [&](ElimFrame f, const TypePtr& next) {
      f.result = next;
      spine.push_back(std::move(f));
      expand(next, depth - 1, spine);
      spine.pop_back();
    };

    switch (t->tag) {
      case TypeTag::One: {
        // let1(_, u) frame: continuation is any closed generated term.
        for (const TypePtr& d : targets(type_size(t) + 3)) {
          auto u = gen.gen_closed(d);
          if (!u) continue;
          ElimFrame f{};
          f.kind = ElimFrame::Kind::ElimOne;
          f.body = *u;
          push(std::move(f), d);
        }
        return;
      }
      case TypeTag::Zero: {
        ElimFrame f{};
        f.kind = ElimFrame::Kind::ElimZero;
        push(std::move(f), ty_one());
        return;
      }
      case TypeTag::Lolli: {
        std::vector<TermPtr> args;
        // The identity is always a sharp observation when it exists.
        if (t->a->tag == TypeTag::Lolli && type_eq(t->a->a, t->a->b))
          args.push_back(mk_lam("z", t->a->a, mk_var("z")));
        for (int i = 0; i < 2; ++i)
          if (auto u = gen.gen_closed(t->a)) args.push_back(*u);
        for (auto& arg : args) {
          ElimFrame f{};
          f.kind = ElimFrame::Kind::App;
          f.arg = arg;
          push(std::move(f), t->b);
        }
        return;
      }
      case TypeTag::Tensor: {
        for (const TypePtr& d : targets(type_size(t))) {
          Context lin = {{"kx", t->a}, {"ky", t->b}};
          auto body = gen.gen_term({}, lin, d);
          if (!body) continue;
          ElimFrame f{};
          f.kind = ElimFrame::Kind::ElimTens;
          f.x = "kx";
          f.y = "ky";
          f.ann = t->a;
          f.ann2 = t->b;
          f.body = *body;
          push(std::move(f), d);
        }
        return;
      }
      case TypeTag::With: {
        for (bool first : {true, false}) {
          const TypePtr& comp = first ? t->a : t->b;
          for (const TypePtr& d : targets(type_size(t))) {
            std::vector<TermPtr> bodies;
            if (type_eq(comp, d)) bodies.push_back(mk_var("kx"));
            if (auto body = gen.gen_term({}, {{"kx", comp}}, d))
              bodies.push_back(*body);
            for (auto& body : bodies) {
              ElimFrame f{};
              f.kind = first ? ElimFrame::Kind::ElimWith1
                             : ElimFrame::Kind::ElimWith2;
              f.x = "kx";
              f.ann = comp;
              f.body = body;
              push(std::move(f), d);
            }
          }
        }
        return;
      }
      case TypeTag::Plus: {
        for (const TypePtr& d : targets(type_size(t))) {
          auto left = gen.gen_term({}, {{"kx", t->a}}, d);
          auto right = gen.gen_term({}, {{"ky", t->b}}, d);
          if (!left || !right) continue;
          ElimFrame f{};
          f.kind = ElimFrame::Kind::ElimPlus;
          f.x = "kx";
          f.y = "ky";
          f.ann = t->a;
          f.ann2 = t->b;
          f.body = *left;
          f.body2 = *right;
          push(std::move(f), d);
        }
        return;
      }
      case TypeTag::Bang: {
        for (const TypePtr& d : targets(type_size(t))) {
          std::vector<TermPtr> bodies;
          // the dereliction observation: use the duplicable payload directly
          if (type_eq(t->a, d)) bodies.push_back(mk_var("kx"));
          if (auto body = gen.gen_term({{"kx", t->a}}, {}, d))
            bodies.push_back(*body);
          for (auto& body : bodies) {
            ElimFrame f{};
            f.kind = ElimFrame::Kind::ElimBang;
            f.x = "kx";
            f.ann = t->a;
            f.body = body;
            push(std::move(f), d);
          }
        }
        return;
      }
      case TypeTag::Top:
      case TypeTag::Unknown:
        return;
    }
  }
};

} // namespace

std::vector<ElimContext> enum_contexts(const TypePtr& a, int depth,
                                       int body_budget, uint64_t seed,
                                       const Semiring& ring,
                                       size_t max_contexts) {
  ContextEnum e(a, body_budget, seed, ring, max_contexts);
  std::vector<ElimFrame> spine;
  e.expand(a, depth, spine);
  return std::move(e.out);
}

EquivVerdict obs_equiv(const TermPtr& t, const TermPtr& u, const TypePtr& a,
                       int depth, int body_budget, uint64_t fuel,
                       uint64_t seed, const Semiring& ring) {
  EquivVerdict v;
  v.depth = depth;
  for (ElimContext& k : enum_contexts(a, depth, body_budget, seed, ring)) {
    ++v.contexts_tried;
    NormalizeResult lt = normalize(k.plug(t), Strategy::leftmost_outermost(), fuel);
    NormalizeResult rt = normalize(k.plug(u), Strategy::leftmost_outermost(), fuel);
    if (lt.fuel_exhausted || rt.fuel_exhausted) {
      v.tag = EquivVerdict::Tag::Unknown;
      v.reason = "fuel exhausted under context " + print_term(k.as_term());
      return v;
    }
    if (lt.term->tag != TermTag::Star || rt.term->tag != TermTag::Star) {
      v.tag = EquivVerdict::Tag::Unknown;
      v.reason = "context did not produce a scalar star";
      v.witness = k;
      v.left_result = lt.term;
      v.right_result = rt.term;
      return v;
    }
    if (!(lt.term->scalar == rt.term->scalar)) {
      v.tag = EquivVerdict::Tag::Distinguished;
      v.witness = k;
      v.left_result = lt.term;
      v.right_result = rt.term;
      return v;
    }
  }
  v.tag = EquivVerdict::Tag::EquivalentUpToBound;
  return v;
}

LinearityReport linearity_check(const TermPtr& f, const TypePtr& a,
                                const TypePtr& b, const TermPtr& u1,
                                const TermPtr& u2, const Scalar& scalar,
                                const Semiring& ring, int depth,
                                int body_budget, uint64_t fuel, uint64_t seed) {
  LinearityReport rep;
  TermPtr add_l = mk_app(f, mk_sum(u1, u2));
  TermPtr add_r = mk_sum(mk_app(f, u1), mk_app(f, u2));
  TermPtr hom_l = mk_app(f, mk_smul(scalar, u1));
  TermPtr hom_r = mk_smul(scalar, mk_app(f, u1));
  if (is_vector_type(b)) {
    rep.vector_route = true;
    rep.additive_ok = term_to_vec(add_l, b, fuel) == term_to_vec(add_r, b, fuel);
    rep.homogeneous_ok =
        term_to_vec(hom_l, b, fuel) == term_to_vec(hom_r, b, fuel);
    return rep;
  }
  rep.additive_verdict =
      obs_equiv(add_l, add_r, b, depth, body_budget, fuel, seed, ring);
  rep.homogeneous_verdict =
      obs_equiv(hom_l, hom_r, b, depth, body_budget, fuel, seed + 1, ring);
  rep.additive_ok = rep.additive_verdict.equivalent();
  rep.homogeneous_ok = rep.homogeneous_verdict.equivalent();
  return rep;
}

} // namespace oclam
