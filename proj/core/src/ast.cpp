#include "oclam/ast.hpp"

#include <algorithm>

namespace oclam {

namespace {

TypePtr leaf(TypeTag tag) {
  auto t = std::make_shared<TypeExpr>();
  t->tag = tag;
  return t;
}

TypePtr node(TypeTag tag, TypePtr a, TypePtr b = nullptr) {
  auto t = std::make_shared<TypeExpr>();
  t->tag = tag;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

} // namespace

TypePtr ty_one() {
  static const TypePtr t = leaf(TypeTag::One);
  return t;
}
TypePtr ty_top() {
  static const TypePtr t = leaf(TypeTag::Top);
  return t;
}
TypePtr ty_zero() {
  static const TypePtr t = leaf(TypeTag::Zero);
  return t;
}
TypePtr ty_unknown() {
  static const TypePtr t = leaf(TypeTag::Unknown);
  return t;
}
TypePtr ty_lolli(TypePtr a, TypePtr b) {
  return node(TypeTag::Lolli, std::move(a), std::move(b));
}
TypePtr ty_tensor(TypePtr a, TypePtr b) {
  return node(TypeTag::Tensor, std::move(a), std::move(b));
}
TypePtr ty_with(TypePtr a, TypePtr b) {
  return node(TypeTag::With, std::move(a), std::move(b));
}
TypePtr ty_plus(TypePtr a, TypePtr b) {
  return node(TypeTag::Plus, std::move(a), std::move(b));
}
TypePtr ty_bang(TypePtr a) { return node(TypeTag::Bang, std::move(a)); }

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case TypeTag::One:
    case TypeTag::Top:
    case TypeTag::Zero:
    case TypeTag::Unknown:
      return true;
    case TypeTag::Bang:
      return type_eq(a->a, b->a);
    default:
      return type_eq(a->a, b->a) && type_eq(a->b, b->b);
  }
}

bool type_match(const TypePtr& a, const TypePtr& b) {
  if (!a || !b) return false;
  if (a->tag == TypeTag::Unknown || b->tag == TypeTag::Unknown) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case TypeTag::One:
    case TypeTag::Top:
    case TypeTag::Zero:
      return true;
    case TypeTag::Bang:
      return type_match(a->a, b->a);
    default:
      return type_match(a->a, b->a) && type_match(a->b, b->b);
  }
}

TypePtr type_join(const TypePtr& a, const TypePtr& b) {
  if (!a || !b) return nullptr;
  if (a->tag == TypeTag::Unknown) return b;
  if (b->tag == TypeTag::Unknown) return a;
  if (a->tag != b->tag) return nullptr;
  switch (a->tag) {
    case TypeTag::One:
    case TypeTag::Top:
    case TypeTag::Zero:
      return a;
    case TypeTag::Bang: {
      TypePtr j = type_join(a->a, b->a);
      return j ? ty_bang(j) : nullptr;
    }
    default: {
      TypePtr ja = type_join(a->a, b->a);
      TypePtr jb = type_join(a->b, b->b);
      if (!ja || !jb) return nullptr;
      auto t = std::make_shared<TypeExpr>();
      t->tag = a->tag;
      t->a = std::move(ja);
      t->b = std::move(jb);
      return t;
    }
  }
}

bool type_contains_unknown(const TypePtr& a) {
  if (!a) return false;
  if (a->tag == TypeTag::Unknown) return true;
  return type_contains_unknown(a->a) || type_contains_unknown(a->b);
}

int type_size(const TypePtr& a) {
  switch (a->tag) {
    case TypeTag::One:
    case TypeTag::Top:
    case TypeTag::Zero:
    case TypeTag::Unknown:
      return 1;
    case TypeTag::Bang:
      return type_size(a->a) + 1;
    default:
      return type_size(a->a) + type_size(a->b);
  }
}

namespace {

// Precedence levels: ! (4) > * (3) > & (2) > (+) (1) > -o (0, right-assoc).
void print_type_rec(const TypePtr& t, int min_prec, std::string& out) {
  auto paren = [&](int prec, auto&& body) {
    bool need = prec < min_prec;
    if (need) out += "(";
    body();
    if (need) out += ")";
  };
  switch (t->tag) {
    case TypeTag::One: out += "I"; return;
    case TypeTag::Top: out += "Top"; return;
    case TypeTag::Zero: out += "Zero"; return;
    case TypeTag::Unknown: out += "_"; return;
    case TypeTag::Bang:
      out += "!";
      print_type_rec(t->a, 4, out);
      return;
    case TypeTag::Tensor:
      paren(3, [&] {
        print_type_rec(t->a, 3, out);
        out += " * ";
        print_type_rec(t->b, 4, out);
      });
      return;
    case TypeTag::With:
      paren(2, [&] {
        print_type_rec(t->a, 2, out);
        out += " & ";
        print_type_rec(t->b, 3, out);
      });
      return;
    case TypeTag::Plus:
      paren(1, [&] {
        print_type_rec(t->a, 1, out);
        out += " (+) ";
        print_type_rec(t->b, 2, out);
      });
      return;
    case TypeTag::Lolli:
      paren(0, [&] {
        print_type_rec(t->a, 1, out);
        out += " -o ";
        print_type_rec(t->b, 0, out);
      });
      return;
  }
}

} // namespace

std::string print_type(const TypePtr& a) {
  std::string out;
  print_type_rec(a, 0, out);
  return out;
}

namespace {

std::shared_ptr<Term> raw(TermTag tag) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  return t;
}

} // namespace

TermPtr mk_var(std::string name) {
  auto t = raw(TermTag::Var);
  t->name = std::move(name);
  return t;
}

TermPtr mk_sum(TermPtr a, TermPtr b) {
  auto t = raw(TermTag::Sum);
  t->kids = {std::move(a), std::move(b)};
  return t;
}

TermPtr mk_smul(Scalar s, TermPtr a) {
  auto t = raw(TermTag::Smul);
  t->scalar = std::move(s);
  t->kids = {std::move(a)};
  return t;
}

TermPtr mk_star(Scalar s) {
  auto t = raw(TermTag::Star);
  t->scalar = std::move(s);
  return t;
}

TermPtr mk_elim_one(TermPtr a, TermPtr b) {
  auto t = raw(TermTag::ElimOne);
  t->kids = {std::move(a), std::move(b)};
  return t;
}

TermPtr mk_lam(std::string x, TypePtr a, TermPtr body) {
  auto t = raw(TermTag::Lam);
  t->name = std::move(x);
  t->ann = std::move(a);
  t->kids = {std::move(body)};
  return t;
}

TermPtr mk_app(TermPtr f, TermPtr arg) {
  auto t = raw(TermTag::App);
  t->kids = {std::move(f), std::move(arg)};
  return t;
}

TermPtr mk_tens(TermPtr a, TermPtr b) {
  auto t = raw(TermTag::Tens);
  t->kids = {std::move(a), std::move(b)};
  return t;
}

TermPtr mk_elim_tens(TermPtr scrut, std::string x, TypePtr a, std::string y,
                     TypePtr b, TermPtr body) {
  auto t = raw(TermTag::ElimTens);
  t->name = std::move(x);
  t->ann = std::move(a);
  t->name2 = std::move(y);
  t->ann2 = std::move(b);
  t->kids = {std::move(scrut), std::move(body)};
  return t;
}

TermPtr mk_top() { return raw(TermTag::TopIntro); }

TermPtr mk_elim_zero(TermPtr a) {
  auto t = raw(TermTag::ElimZero);
  t->kids = {std::move(a)};
  return t;
}

TermPtr mk_pair(TermPtr a, TermPtr b) {
  auto t = raw(TermTag::Pair);
  t->kids = {std::move(a), std::move(b)};
  return t;
}

TermPtr mk_elim_with1(TermPtr scrut, std::string x, TypePtr a, TermPtr body) {
  auto t = raw(TermTag::ElimWith1);
  t->name = std::move(x);
  t->ann = std::move(a);
  t->kids = {std::move(scrut), std::move(body)};
  return t;
}

TermPtr mk_elim_with2(TermPtr scrut, std::string x, TypePtr b, TermPtr body) {
  auto t = raw(TermTag::ElimWith2);
  t->name = std::move(x);
  t->ann = std::move(b);
  t->kids = {std::move(scrut), std::move(body)};
  return t;
}

TermPtr mk_inl(TermPtr a, TypePtr other) {
  auto t = raw(TermTag::Inl);
  t->ann = std::move(other);
  t->kids = {std::move(a)};
  return t;
}

TermPtr mk_inr(TermPtr a, TypePtr other) {
  auto t = raw(TermTag::Inr);
  t->ann = std::move(other);
  t->kids = {std::move(a)};
  return t;
}

TermPtr mk_elim_plus(TermPtr scrut, std::string x, TypePtr a, TermPtr u,
                     std::string y, TypePtr b, TermPtr v) {
  auto t = raw(TermTag::ElimPlus);
  t->name = std::move(x);
  t->ann = std::move(a);
  t->name2 = std::move(y);
  t->ann2 = std::move(b);
  t->kids = {std::move(scrut), std::move(u), std::move(v)};
  return t;
}

TermPtr mk_bang(TermPtr a) {
  auto t = raw(TermTag::Bang);
  t->kids = {std::move(a)};
  return t;
}

TermPtr mk_elim_bang(TermPtr scrut, std::string x, TypePtr a, TermPtr body) {
  auto t = raw(TermTag::ElimBang);
  t->name = std::move(x);
  t->ann = std::move(a);
  t->kids = {std::move(scrut), std::move(body)};
  return t;
}

TermPtr with_kids(const TermPtr& t, std::vector<TermPtr> kids) {
  auto copy = std::make_shared<Term>(*t);
  copy->kids = std::move(kids);
  return copy;
}

const TypePtr* ctx_lookup(const Context& ctx, const std::string& name) {
  for (const auto& b : ctx)
    if (b.name == name) return &b.type;
  return nullptr;
}

Context ctx_extend(Context ctx, std::string name, TypePtr type) {
  ctx.push_back({std::move(name), std::move(type)});
  return ctx;
}

Context ctx_remove(Context ctx, const std::string& name) {
  ctx.erase(std::remove_if(ctx.begin(), ctx.end(),
                           [&](const Binding& b) { return b.name == name; }),
            ctx.end());
  return ctx;
}

} // namespace oclam
