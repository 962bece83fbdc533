#pragma once

#include <optional>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/rng.hpp"

namespace oclam {

// Deterministic generator configuration: identical configs produce
// identical sequences.
struct GenConfig {
  uint64_t seed = 1;
  int max_size = 24;       // node budget per generated term
  SemiringId semiring = SemiringId::Nat;
  std::vector<Scalar> scalar_pool; // defaults to {0,1,2,3} of the semiring
  int type_depth = 2;
  bool allow_bang = true;
};

class Generator {
public:
  explicit Generator(GenConfig cfg);

  const GenConfig& config() const { return cfg_; }
  const Semiring& ring() const { return *ring_; }

  TypePtr gen_type();
  // A type a linear binder can always be fully consumed at (no Top leaf in a
  // consumption-forcing position); used for binder annotations.
  TypePtr gen_binder_type();

  // A term t with infer(intuit, linear, t) = (A, dom linear): every linear
  // variable consumed. nullopt = GiveUp (caller may retry; the stream stays
  // deterministic either way).
  std::optional<TermPtr> gen_term(const Context& intuit, const Context& linear,
                                  const TypePtr& a);
  std::optional<TermPtr> gen_closed(const TypePtr& a) {
    return gen_term({}, {}, a);
  }

  Scalar pick_scalar();
  uint64_t fork_seed() { return rng_.fork(); }

private:
  friend struct GenImpl;
  GenConfig cfg_;
  const Semiring* ring_;
  Rng rng_;
  int fresh_counter_ = 0;
};

// Structural shrink candidates: immediate subterms (possibly open or
// ill-typed; callers re-filter), sum/scalar simplifications.
std::vector<TermPtr> shrink(const TermPtr& t);

} // namespace oclam
