#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oclam/semiring.hpp"

namespace oclam {

// ---------------------------------------------------------------------------
// Propositions

enum class TypeTag {
  One,    // I
  Top,    // Top
  Zero,   // Zero
  Lolli,  // A -o B
  Tensor, // A * B
  With,   // A & B
  Plus,   // A (+) B
  Bang,   // !A
  Unknown // checker-internal wildcard, the result type of abort(t)
};

struct TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

struct TypeExpr {
  TypeTag tag;
  TypePtr a, b; // subtypes for the binary connectives; a for Bang
};

TypePtr ty_one();
TypePtr ty_top();
TypePtr ty_zero();
TypePtr ty_unknown();
TypePtr ty_lolli(TypePtr a, TypePtr b);
TypePtr ty_tensor(TypePtr a, TypePtr b);
TypePtr ty_with(TypePtr a, TypePtr b);
TypePtr ty_plus(TypePtr a, TypePtr b);
TypePtr ty_bang(TypePtr a);

bool type_eq(const TypePtr& a, const TypePtr& b);
// Equality where Unknown matches anything.
bool type_match(const TypePtr& a, const TypePtr& b);
// Componentwise merge of two matching types, preferring known parts;
// nullptr when the types conflict.
TypePtr type_join(const TypePtr& a, const TypePtr& b);
bool type_contains_unknown(const TypePtr& a);

// |A|: 1 for the atoms, sum for the binary connectives, |A|+1 for !A.
int type_size(const TypePtr& a);

std::string print_type(const TypePtr& a);

// ---------------------------------------------------------------------------
// Proof-terms

enum class TermTag {
  Var,       // x
  Sum,       // t <+> u
  Smul,      // a <.> t
  Star,      // star(a)
  ElimOne,   // let1(t, u)
  Lam,       // \x:A. t
  App,       // t u
  Tens,      // tens(t, u)
  ElimTens,  // lettens(t, x:A, y:B. u)
  TopIntro,  // unit
  ElimZero,  // abort(t)
  Pair,      // pair(t, u)
  ElimWith1, // fst(t, x:A. u)
  ElimWith2, // snd(t, x:B. u)
  Inl,       // inl[B](t)
  Inr,       // inr[A](t)
  ElimPlus,  // case(t, x:A. u, y:B. v)
  Bang,      // bang(t)
  ElimBang   // letbang(t, x:A. u)
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermTag tag;
  std::string name;  // Var; first binder of Lam/ElimTens/ElimWith*/ElimPlus/ElimBang
  std::string name2; // second binder of ElimTens/ElimPlus
  TypePtr ann;       // first binder annotation; Inl/Inr: the absent summand
  TypePtr ann2;      // second binder annotation
  Scalar scalar;     // Star, Smul
  std::vector<TermPtr> kids;
};

TermPtr mk_var(std::string name);
TermPtr mk_sum(TermPtr t, TermPtr u);
TermPtr mk_smul(Scalar a, TermPtr t);
TermPtr mk_star(Scalar a);
TermPtr mk_elim_one(TermPtr t, TermPtr u);
TermPtr mk_lam(std::string x, TypePtr a, TermPtr body);
TermPtr mk_app(TermPtr f, TermPtr arg);
TermPtr mk_tens(TermPtr t, TermPtr u);
TermPtr mk_elim_tens(TermPtr t, std::string x, TypePtr a, std::string y,
                     TypePtr b, TermPtr body);
TermPtr mk_top();
TermPtr mk_elim_zero(TermPtr t);
TermPtr mk_pair(TermPtr t, TermPtr u);
TermPtr mk_elim_with1(TermPtr t, std::string x, TypePtr a, TermPtr body);
TermPtr mk_elim_with2(TermPtr t, std::string x, TypePtr b, TermPtr body);
TermPtr mk_inl(TermPtr t, TypePtr other);
TermPtr mk_inr(TermPtr t, TypePtr other);
TermPtr mk_elim_plus(TermPtr t, std::string x, TypePtr a, TermPtr u,
                     std::string y, TypePtr b, TermPtr v);
TermPtr mk_bang(TermPtr t);
TermPtr mk_elim_bang(TermPtr t, std::string x, TypePtr a, TermPtr body);

// Rebuilds a node with new children, keeping tag/names/annotations/scalar.
TermPtr with_kids(const TermPtr& t, std::vector<TermPtr> kids);

// ---------------------------------------------------------------------------
// Contexts

struct Binding {
  std::string name;
  TypePtr type;
};

// Ordered list of bindings; order is observable in the denotational
// semantics, so it is preserved everywhere.
using Context = std::vector<Binding>;

const TypePtr* ctx_lookup(const Context& ctx, const std::string& name);
Context ctx_extend(Context ctx, std::string name, TypePtr type);
Context ctx_remove(Context ctx, const std::string& name);

// Intuitionistic context (duplicable) and linear context (used exactly
// once); names are unique across the union of both.
struct DualContext {
  Context intuit;
  Context linear;
};

} // namespace oclam
