#pragma once

#include <string>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/encode.hpp"
#include "oclam/gen.hpp"

namespace oclam {

// One eliminator wrapped around the hole: the hole (or the partially built
// context) sits in scrutinee/function position.
struct ElimFrame {
  enum class Kind {
    App,      // _ arg
    ElimOne,  // let1(_, body)
    ElimZero, // abort(_)
    ElimTens, // lettens(_, x:A, y:B. body)
    ElimWith1,
    ElimWith2,
    ElimPlus, // case(_, x:A. body, y:B. body2)
    ElimBang  // letbang(_, x:A. body)
  };
  Kind kind;
  TermPtr arg;  // App
  std::string x, y;
  TypePtr ann, ann2;
  TermPtr body, body2;
  TypePtr result; // type after this frame
};

// Spine of eliminators with a single hole at the head, well-typed from hole
// type A down to I.
struct ElimContext {
  TypePtr hole_type;
  std::vector<ElimFrame> spine; // innermost (closest to the hole) first

  TermPtr plug(const TermPtr& t) const;
  // The context as a term over the distinguished variable `_`.
  TermPtr as_term() const { return plug(mk_var("_")); }
};

// Enumerates well-typed contexts `_ : A |- K : I` with spine length <=
// depth. Continuation bodies and arguments come from the generator with the
// given size budget, deterministically from the seed. Frames cover both
// published grammars: eliminator spines with size-decreasing side conditions
// on *, (+), ! plus the let1/abort frames.
std::vector<ElimContext> enum_contexts(const TypePtr& a, int depth,
                                       int body_budget, uint64_t seed,
                                       const Semiring& ring,
                                       size_t max_contexts = 256);

struct EquivVerdict {
  enum class Tag { EquivalentUpToBound, Distinguished, Unknown };
  Tag tag = Tag::EquivalentUpToBound;
  int depth = 0;
  int contexts_tried = 0;
  ElimContext witness;            // Distinguished
  TermPtr left_result;            // normal forms of witness[t], witness[u]
  TermPtr right_result;
  std::string reason;             // Unknown

  bool equivalent() const { return tag == Tag::EquivalentUpToBound; }
};

// Bounded observational equivalence at type A: normalizes K[t] and K[u] for
// every enumerated context and compares the resulting scalar stars.
EquivVerdict obs_equiv(const TermPtr& t, const TermPtr& u, const TypePtr& a,
                       int depth, int body_budget, uint64_t fuel,
                       uint64_t seed, const Semiring& ring);

struct LinearityReport {
  bool vector_route = false; // decidable readback at a vector type
  bool additive_ok = false;  // f (u1 <+> u2)  ~  f u1 <+> f u2
  bool homogeneous_ok = false; // f (a <.> u1)  ~  a <.> f u1
  EquivVerdict additive_verdict, homogeneous_verdict; // obs route only

  bool ok() const { return additive_ok && homogeneous_ok; }
};

// Checks both linearity identities for closed f : A -o B and closed u1, u2
// of A. Vector-typed B is decided exactly through term_to_vec; anything else
// goes through bounded observational equivalence.
LinearityReport linearity_check(const TermPtr& f, const TypePtr& a,
                                const TypePtr& b, const TermPtr& u1,
                                const TermPtr& u2, const Scalar& scalar,
                                const Semiring& ring, int depth = 2,
                                int body_budget = 8, uint64_t fuel = 100000,
                                uint64_t seed = 1);

} // namespace oclam
