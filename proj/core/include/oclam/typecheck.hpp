#pragma once

#include <set>
#include <string>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/result.hpp"

namespace oclam {

enum class TypeErrKind {
  UnboundVar,
  LinearReuse,
  LinearUnused,
  BranchUsageMismatch,
  Mismatch,
  BangUnderLinear,
  NotAFunction,
  NotATensor,
  NotAWith,
  NotAPlus,
  NotABang,
  NotOne,
  NotZero
};

std::string_view type_err_kind_name(TypeErrKind k);

struct TypeError {
  TypeErrKind kind;
  std::vector<int> path; // child indices from the root to the offending node
  std::string detail;
  TypePtr expected; // Mismatch only
  TypePtr found;    // Mismatch only

  std::string str() const;
};

struct TypingOutcome {
  TypePtr type;
  std::set<std::string> used; // linear variables consumed by the derivation
};

// Typing derivation mirroring the term, with binders freshened against the
// ambient contexts. `term` at each node is the freshened subterm.
struct TypedNode;
using TypedPtr = std::shared_ptr<const TypedNode>;
struct TypedNode {
  TermPtr term;
  TypePtr type;
  std::set<std::string> used;
  std::vector<TypedPtr> kids;
};

template <typename T>
using Checked = Expected<T, TypeError>;

// Syntax-directed inference for the dual-context judgement. The linear
// context is split algorithmically: each node reports the linear variables
// it consumed, multiplicative parents require disjointness, additive
// branches require equal usage. abort(t) gets the wildcard type `_`.
Checked<TypedPtr> annotate(const Context& intuit, const Context& linear,
                           const TermPtr& t);
Checked<TypingOutcome> infer(const Context& intuit, const Context& linear,
                             const TermPtr& t);

// True when t is closed, typable, and its type matches `a` exactly (the
// wildcard `_` from abort matches anything).
Checked<bool> check_closed(const TermPtr& t, const TypePtr& a);

// Convenience: infer requiring that every variable of `linear` is consumed.
Checked<TypingOutcome> infer_all_consumed(const Context& intuit,
                                          const Context& linear,
                                          const TermPtr& t);

} // namespace oclam
