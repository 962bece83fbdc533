#include "oclam/typecheck.hpp"

#include <algorithm>

#include "oclam/syntax.hpp"

namespace oclam {

std::string_view type_err_kind_name(TypeErrKind k) {
  switch (k) {
    case TypeErrKind::UnboundVar: return "UnboundVar";
    case TypeErrKind::LinearReuse: return "LinearReuse";
    case TypeErrKind::LinearUnused: return "LinearUnused";
    case TypeErrKind::BranchUsageMismatch: return "BranchUsageMismatch";
    case TypeErrKind::Mismatch: return "Mismatch";
    case TypeErrKind::BangUnderLinear: return "BangUnderLinear";
    case TypeErrKind::NotAFunction: return "NotAFunction";
    case TypeErrKind::NotATensor: return "NotATensor";
    case TypeErrKind::NotAWith: return "NotAWith";
    case TypeErrKind::NotAPlus: return "NotAPlus";
    case TypeErrKind::NotABang: return "NotABang";
    case TypeErrKind::NotOne: return "NotOne";
    case TypeErrKind::NotZero: return "NotZero";
  }
  return "?";
}

std::string TypeError::str() const {
  std::string out(type_err_kind_name(kind));
  out += " at [";
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(path[i]);
  }
  out += "]";
  if (kind == TypeErrKind::Mismatch && expected && found)
    out += ": expected " + print_type(expected) + ", found " + print_type(found);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

namespace {

struct Raise {
  TypeError err;
};

[[noreturn]] void raise(TypeErrKind kind, const std::vector<int>& path,
                        std::string detail = {}, TypePtr expected = nullptr,
                        TypePtr found = nullptr) {
  throw Raise{TypeError{kind, path, std::move(detail), std::move(expected),
                        std::move(found)}};
}

using Used = std::set<std::string>;

// Multiplicative combination: premises must consume disjoint variables.
Used merge_disjoint(const Used& a, const Used& b, const std::vector<int>& path) {
  for (const auto& x : a)
    if (b.count(x))
      raise(TypeErrKind::LinearReuse, path, "linear variable '" + x +
                                                "' used in both premises");
  Used out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// Additive combination: branches must consume exactly the same variables.
void require_same_usage(const Used& a, const Used& b,
                        const std::vector<int>& path) {
  if (a == b) return;
  std::string diff;
  for (const auto& x : a)
    if (!b.count(x)) diff = x;
  for (const auto& x : b)
    if (!a.count(x)) diff = x;
  raise(TypeErrKind::BranchUsageMismatch, path,
        "branches disagree on linear variable '" + diff + "'");
}

struct Checker {
  TypedPtr run(Context intuit, Context linear, const TermPtr& t) {
    std::vector<int> path;
    return check(intuit, linear, t, path);
  }

  std::set<std::string> names_of(const Context& a, const Context& b) {
    std::set<std::string> out;
    for (const auto& x : a) out.insert(x.name);
    for (const auto& x : b) out.insert(x.name);
    return out;
  }

  // Renames the binder when it collides with a name already in scope, so
  // that context names stay unique.
  std::pair<std::string, TermPtr> open_binder(const Context& intuit,
                                              const Context& linear,
                                              const std::string& name,
                                              const TermPtr& body) {
    if (!ctx_lookup(intuit, name) && !ctx_lookup(linear, name))
      return {name, body};
    std::set<std::string> avoid = names_of(intuit, linear);
    for (const auto& v : free_vars(body)) avoid.insert(v);
    std::string fresh = fresh_name(name, avoid);
    return {fresh, substitute(body, name, mk_var(fresh))};
  }

  TypedPtr make(TermPtr term, TypePtr type, Used used,
                std::vector<TypedPtr> kids) {
    auto node = std::make_shared<TypedNode>();
    node->term = std::move(term);
    node->type = std::move(type);
    node->used = std::move(used);
    node->kids = std::move(kids);
    return node;
  }

  TypedPtr check(const Context& intuit, const Context& linear,
                 const TermPtr& t, std::vector<int>& path) {
    auto kid = [&](int i, const Context& in, const Context& lin,
                   const TermPtr& sub) {
      path.push_back(i);
      TypedPtr r = check(in, lin, sub, path);
      path.pop_back();
      return r;
    };

    switch (t->tag) {
      case TermTag::Var: {
        if (const TypePtr* ty = ctx_lookup(linear, t->name))
          return make(t, *ty, {t->name}, {});
        if (const TypePtr* ty = ctx_lookup(intuit, t->name))
          return make(t, *ty, {}, {});
        raise(TypeErrKind::UnboundVar, path, "variable '" + t->name + "'");
      }

      case TermTag::Sum: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        TypedPtr b = kid(1, intuit, linear, t->kids[1]);
        TypePtr j = type_join(a->type, b->type);
        if (!j)
          raise(TypeErrKind::Mismatch, path, "summands have different types",
                a->type, b->type);
        require_same_usage(a->used, b->used, path);
        return make(mk_sum(a->term, b->term), j, a->used, {a, b});
      }

      case TermTag::Smul: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        return make(mk_smul(t->scalar, a->term), a->type, a->used, {a});
      }

      case TermTag::Star:
        return make(t, ty_one(), {}, {});

      case TermTag::ElimOne: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        if (a->type->tag != TypeTag::One && a->type->tag != TypeTag::Unknown)
          raise(TypeErrKind::NotOne, path, "let1 scrutinee has type " +
                                               print_type(a->type));
        TypedPtr b = kid(1, intuit, linear, t->kids[1]);
        Used used = merge_disjoint(a->used, b->used, path);
        return make(mk_elim_one(a->term, b->term), b->type, used, {a, b});
      }

      case TermTag::Lam: {
        auto [x, body] = open_binder(intuit, linear, t->name, t->kids[0]);
        TypedPtr b = kid(0, intuit, ctx_extend(linear, x, t->ann), body);
        Used used = b->used;
        if (!used.count(x))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + x + "' is never used");
        used.erase(x);
        return make(mk_lam(x, t->ann, b->term), ty_lolli(t->ann, b->type),
                    used, {b});
      }

      case TermTag::App: {
        TypedPtr f = kid(0, intuit, linear, t->kids[0]);
        TypedPtr a = kid(1, intuit, linear, t->kids[1]);
        TypePtr result;
        if (f->type->tag == TypeTag::Unknown) {
          result = ty_unknown();
        } else if (f->type->tag == TypeTag::Lolli) {
          if (!type_match(f->type->a, a->type))
            raise(TypeErrKind::Mismatch, path, "argument type", f->type->a,
                  a->type);
          result = f->type->b;
        } else {
          raise(TypeErrKind::NotAFunction, path,
                "applied term has type " + print_type(f->type));
        }
        Used used = merge_disjoint(f->used, a->used, path);
        return make(mk_app(f->term, a->term), result, used, {f, a});
      }

      case TermTag::Tens: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        TypedPtr b = kid(1, intuit, linear, t->kids[1]);
        Used used = merge_disjoint(a->used, b->used, path);
        return make(mk_tens(a->term, b->term), ty_tensor(a->type, b->type),
                    used, {a, b});
      }

      case TermTag::ElimTens: {
        TypedPtr s = kid(0, intuit, linear, t->kids[0]);
        TypePtr comp_a = t->ann, comp_b = t->ann2;
        if (s->type->tag == TypeTag::Tensor) {
          TypePtr ja = type_join(s->type->a, t->ann);
          TypePtr jb = type_join(s->type->b, t->ann2);
          if (!ja)
            raise(TypeErrKind::Mismatch, path, "lettens left binder", t->ann,
                  s->type->a);
          if (!jb)
            raise(TypeErrKind::Mismatch, path, "lettens right binder", t->ann2,
                  s->type->b);
          comp_a = ja;
          comp_b = jb;
        } else if (s->type->tag != TypeTag::Unknown) {
          raise(TypeErrKind::NotATensor, path,
                "lettens scrutinee has type " + print_type(s->type));
        }
        auto [x, mid] = open_binder(intuit, linear, t->name, t->kids[1]);
        Context lin1 = ctx_extend(linear, x, comp_a);
        auto [y, body] = open_binder(intuit, lin1, t->name2, mid);
        TypedPtr u = kid(1, intuit, ctx_extend(lin1, y, comp_b), body);
        Used used = u->used;
        if (!used.count(x))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + x + "' is never used");
        if (!used.count(y))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + y + "' is never used");
        used.erase(x);
        used.erase(y);
        used = merge_disjoint(s->used, used, path);
        return make(mk_elim_tens(s->term, x, t->ann, y, t->ann2, u->term),
                    u->type, used, {s, u});
      }

      case TermTag::TopIntro:
        // The paper's rule admits any linear context here; this checker
        // requires exact consumption, so unit consumes nothing.
        return make(t, ty_top(), {}, {});

      case TermTag::ElimZero: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        if (a->type->tag != TypeTag::Zero && a->type->tag != TypeTag::Unknown)
          raise(TypeErrKind::NotZero, path,
                "abort scrutinee has type " + print_type(a->type));
        return make(mk_elim_zero(a->term), ty_unknown(), a->used, {a});
      }

      case TermTag::Pair: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        TypedPtr b = kid(1, intuit, linear, t->kids[1]);
        require_same_usage(a->used, b->used, path);
        return make(mk_pair(a->term, b->term), ty_with(a->type, b->type),
                    a->used, {a, b});
      }

      case TermTag::ElimWith1:
      case TermTag::ElimWith2: {
        bool first = t->tag == TermTag::ElimWith1;
        TypedPtr s = kid(0, intuit, linear, t->kids[0]);
        TypePtr comp = t->ann;
        if (s->type->tag == TypeTag::With) {
          const TypePtr& got = first ? s->type->a : s->type->b;
          TypePtr j = type_join(got, t->ann);
          if (!j)
            raise(TypeErrKind::Mismatch, path,
                  first ? "fst binder" : "snd binder", t->ann, got);
          comp = j;
        } else if (s->type->tag != TypeTag::Unknown) {
          raise(TypeErrKind::NotAWith, path, "projection scrutinee has type " +
                                                 print_type(s->type));
        }
        auto [x, body] = open_binder(intuit, linear, t->name, t->kids[1]);
        TypedPtr u = kid(1, intuit, ctx_extend(linear, x, comp), body);
        Used used = u->used;
        if (!used.count(x))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + x + "' is never used");
        used.erase(x);
        used = merge_disjoint(s->used, used, path);
        TermPtr rebuilt = first ? mk_elim_with1(s->term, x, t->ann, u->term)
                                : mk_elim_with2(s->term, x, t->ann, u->term);
        return make(rebuilt, u->type, used, {s, u});
      }

      case TermTag::Inl:
      case TermTag::Inr: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        TypePtr ty = t->tag == TermTag::Inl ? ty_plus(a->type, t->ann)
                                            : ty_plus(t->ann, a->type);
        TermPtr rebuilt = t->tag == TermTag::Inl ? mk_inl(a->term, t->ann)
                                                 : mk_inr(a->term, t->ann);
        return make(rebuilt, ty, a->used, {a});
      }

      case TermTag::ElimPlus: {
        TypedPtr s = kid(0, intuit, linear, t->kids[0]);
        TypePtr comp_a = t->ann, comp_b = t->ann2;
        if (s->type->tag == TypeTag::Plus) {
          TypePtr ja = type_join(s->type->a, t->ann);
          TypePtr jb = type_join(s->type->b, t->ann2);
          if (!ja)
            raise(TypeErrKind::Mismatch, path, "case left binder", t->ann,
                  s->type->a);
          if (!jb)
            raise(TypeErrKind::Mismatch, path, "case right binder", t->ann2,
                  s->type->b);
          comp_a = ja;
          comp_b = jb;
        } else if (s->type->tag != TypeTag::Unknown) {
          raise(TypeErrKind::NotAPlus, path,
                "case scrutinee has type " + print_type(s->type));
        }
        auto [x, left] = open_binder(intuit, linear, t->name, t->kids[1]);
        TypedPtr u = kid(1, intuit, ctx_extend(linear, x, comp_a), left);
        auto [y, right] = open_binder(intuit, linear, t->name2, t->kids[2]);
        TypedPtr v = kid(2, intuit, ctx_extend(linear, y, comp_b), right);
        Used uu = u->used, vv = v->used;
        if (!uu.count(x))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + x + "' is never used");
        if (!vv.count(y))
          raise(TypeErrKind::LinearUnused, path,
                "linear binder '" + y + "' is never used");
        uu.erase(x);
        vv.erase(y);
        require_same_usage(uu, vv, path);
        TypePtr j = type_join(u->type, v->type);
        if (!j)
          raise(TypeErrKind::Mismatch, path, "case branches", u->type, v->type);
        Used used = merge_disjoint(s->used, uu, path);
        return make(mk_elim_plus(s->term, x, t->ann, u->term, y, t->ann2,
                                 v->term),
                    j, used, {s, u, v});
      }

      case TermTag::Bang: {
        TypedPtr a = kid(0, intuit, linear, t->kids[0]);
        if (!a->used.empty())
          raise(TypeErrKind::BangUnderLinear, path,
                "bang body uses linear variable '" + *a->used.begin() + "'");
        return make(mk_bang(a->term), ty_bang(a->type), {}, {a});
      }

      case TermTag::ElimBang: {
        TypedPtr s = kid(0, intuit, linear, t->kids[0]);
        TypePtr comp = t->ann;
        if (s->type->tag == TypeTag::Bang) {
          TypePtr j = type_join(s->type->a, t->ann);
          if (!j)
            raise(TypeErrKind::Mismatch, path, "letbang binder", t->ann,
                  s->type->a);
          comp = j;
        } else if (s->type->tag != TypeTag::Unknown) {
          raise(TypeErrKind::NotABang, path,
                "letbang scrutinee has type " + print_type(s->type));
        }
        auto [x, body] = open_binder(intuit, linear, t->name, t->kids[1]);
        TypedPtr u = kid(1, ctx_extend(intuit, x, comp), linear, body);
        Used used = merge_disjoint(s->used, u->used, path);
        return make(mk_elim_bang(s->term, x, t->ann, u->term), u->type, used,
                    {s, u});
      }
    }
    raise(TypeErrKind::Mismatch, path, "unhandled term");
  }
};

} // namespace

Checked<TypedPtr> annotate(const Context& intuit, const Context& linear,
                           const TermPtr& t) {
  try {
    return Checker{}.run(intuit, linear, t);
  } catch (const Raise& r) {
    return r.err;
  }
}

Checked<TypingOutcome> infer(const Context& intuit, const Context& linear,
                             const TermPtr& t) {
  auto r = annotate(intuit, linear, t);
  if (!r.ok()) return r.error();
  return TypingOutcome{(*r)->type, (*r)->used};
}

Checked<TypingOutcome> infer_all_consumed(const Context& intuit,
                                          const Context& linear,
                                          const TermPtr& t) {
  auto r = infer(intuit, linear, t);
  if (!r.ok()) return r;
  for (const auto& b : linear)
    if (!r->used.count(b.name))
      return TypeError{TypeErrKind::LinearUnused,
                       {},
                       "linear variable '" + b.name + "' is never used",
                       nullptr,
                       nullptr};
  return r;
}

Checked<bool> check_closed(const TermPtr& t, const TypePtr& a) {
  auto r = infer({}, {}, t);
  if (!r.ok()) return r.error();
  if (!type_match(r->type, a))
    return TypeError{TypeErrKind::Mismatch, {}, "top-level type", a, r->type};
  return true;
}

} // namespace oclam
