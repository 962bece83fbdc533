#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/reduce.hpp"
#include "oclam/typecheck.hpp"

namespace oclam {

struct SemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the denotation of a type: semimodules over the scalar semiring,
// with ! as finite formal linear combinations.
//
// Zero is the universal additive identity: it is the sole element of the
// zero module (Top, Zero) and also stands for the zero of every other type,
// which lets abort(t) evaluate without knowing its target type.
struct SemValue;
using SemValuePtr = std::shared_ptr<const SemValue>;

struct BangAtom {
  Scalar weight;
  SemValuePtr atom;
};

struct TensorAtom {
  Scalar weight;
  SemValuePtr left, right;
};

struct SemValue {
  enum class Kind { Scalar, Pair, Zero, Tensor, Bang, Fun };
  Kind kind;
  Scalar scalar;                 // Scalar
  SemValuePtr fst, snd;          // Pair
  std::vector<TensorAtom> tensor;
  std::vector<BangAtom> bang;
  std::function<SemValuePtr(const SemValuePtr&)> fun;
};

SemValuePtr sv_scalar(Scalar a);
SemValuePtr sv_pair(SemValuePtr a, SemValuePtr b);
SemValuePtr sv_zero();
SemValuePtr sv_tensor(std::vector<TensorAtom> atoms);
SemValuePtr sv_bang(std::vector<BangAtom> atoms);
SemValuePtr sv_fun(std::function<SemValuePtr(const SemValuePtr&)> f);

// ---------------------------------------------------------------------------
// Type descriptors

struct SemTypeInfo {
  bool enumerable = false; // built from 1, Top, Zero, &, (+), * only
  bool decidable = false;  // enumerable, or !T / T1 -o T2 over decidables
  std::vector<SemValuePtr> basis; // when enumerable (dim == basis.size())
};

SemTypeInfo interp_type(const TypePtr& a, const Semiring& ring);

// ---------------------------------------------------------------------------
// Semimodule structure, type-directed

SemValuePtr vzero(const TypePtr& a);
SemValuePtr vadd(const TypePtr& a, const SemValuePtr& v, const SemValuePtr& w,
                 const Semiring& ring);
SemValuePtr vsmul(const TypePtr& a, const Scalar& s, const SemValuePtr& v,
                  const Semiring& ring);

// Application of an element of [[A -o B]] (Fun or Zero).
SemValuePtr sem_apply(const TypePtr& fn_type, const SemValuePtr& f,
                      const SemValuePtr& arg);

// ---------------------------------------------------------------------------
// The ! comonad, element level

// eps: sum of scaled atoms. t is the atom type.
SemValuePtr comonad_eps(const TypePtr& t, const SemValuePtr& b,
                        const Semiring& ring);
// delta: atom-wise promotion to singleton formal sums.
SemValuePtr comonad_delta(const TypePtr& t, const SemValuePtr& b,
                          const Semiring& ring);
// dup (contraction): atom-wise duplication into a tensor of singletons.
SemValuePtr comonad_dup(const TypePtr& t, const SemValuePtr& b,
                        const Semiring& ring);
// erase (weakening): total weight.
SemValuePtr comonad_erase(const SemValuePtr& b, const Semiring& ring);
// merge (monoidality): !A (x) !B -> !(A (x) B).
SemValuePtr comonad_merge(const TypePtr& ta, const TypePtr& tb,
                          const SemValuePtr& a, const SemValuePtr& b,
                          const Semiring& ring);

// ---------------------------------------------------------------------------
// Evaluation

// Interpretation of the ! elimination: the paper composes the whole formal
// sum into the continuation's intuitionistic slot (Lazy); decomposing into
// atoms at the elimination site (Eager) must agree by linearity, which the
// soundness suite verifies.
enum class BangElimMode { Lazy, Eager };

struct SemEnv {
  std::map<std::string, SemValuePtr> intuit; // Bang-shaped values
  std::map<std::string, SemValuePtr> linear;
};

SemValuePtr eval(const TypedPtr& node, const SemEnv& env, const Semiring& ring,
                 BangElimMode mode = BangElimMode::Lazy);

// Typechecks t under the given contexts and evaluates. Throws SemError on
// type errors or shape violations.
SemValuePtr eval(const TermPtr& t, const Context& intuit,
                 const Context& linear, const SemEnv& env,
                 const Semiring& ring, BangElimMode mode = BangElimMode::Lazy);
SemValuePtr eval_closed(const TermPtr& t, const Semiring& ring,
                        BangElimMode mode = BangElimMode::Lazy);

// ---------------------------------------------------------------------------
// Canonical forms and equality

struct CanonValue {
  enum class Kind { Vec, Sum, Fn };
  Kind kind = Kind::Vec;
  std::vector<Scalar> vec;
  std::vector<std::pair<CanonValue, Scalar>> sum; // sorted by atom
  std::vector<CanonValue> fn;                     // outputs on basis inputs

  int compare(const CanonValue& o) const;
  bool operator==(const CanonValue& o) const { return compare(o) == 0; }
  bool operator<(const CanonValue& o) const { return compare(o) < 0; }
  std::string str() const;
};

// Coefficient vector over the enumerated basis / sorted formal sum / output
// table; nullopt when the type's equality is undecidable.
std::optional<CanonValue> canonicalize(const TypePtr& a, const SemValuePtr& v,
                                       const Semiring& ring);

// Exact equality via canonical forms; nullopt = unsupported at this type.
std::optional<bool> sem_eq(const TypePtr& a, const SemValuePtr& v,
                           const SemValuePtr& w, const Semiring& ring);

// ---------------------------------------------------------------------------
// Soundness driver

struct SoundnessReport {
  int envs_checked = 0;
  int envs_skipped = 0;
  bool passed = true;
  std::string failure;
};

// Checks [[t]] = [[step_at(t, site)]] over sampled environments: basis
// elements for linear variables, small formal sums for intuitionistic ones.
// Result types without decidable equality are checked through elimination
// contexts into I when t is closed, and skipped otherwise.
SoundnessReport soundness_check(const TermPtr& t, const Context& intuit,
                                const Context& linear, const RedexSite& site,
                                const Semiring& ring, uint64_t seed,
                                BangElimMode mode = BangElimMode::Lazy);

} // namespace oclam
