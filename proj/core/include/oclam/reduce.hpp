#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oclam/ast.hpp"

namespace oclam {

// One rewrite rule of the calculus. The eight beta rules come first, then
// the fourteen commutation rules in source order, then the three
// ultra-reduction rules (enabled separately).
enum class Rule {
  // beta
  LetOneBeta,  // let1(star(a), t)        ~> a <.> t
  AppBeta,     // (\x:A. t) u             ~> (u/x)t
  TensBeta,    // lettens(tens(u,v),..)   ~> (u/x, v/y)w
  With1Beta,   // fst(pair(t,u), x. v)    ~> (t/x)v
  With2Beta,   // snd(pair(t,u), x. v)    ~> (u/x)v
  Plus1Beta,   // case(inl(t), x.v, y.w)  ~> (t/x)v
  Plus2Beta,   // case(inr(u), x.v, y.w)  ~> (u/y)w
  BangBeta,    // letbang(bang(t), x. u)  ~> (t/x)u
  // commutation
  StarSum,     // star(a) <+> star(b)     ~> star(a+b)
  StarProd,    // a <.> star(b)           ~> star(a*b)
  LamSum,      // (\x.t) <+> (\x.u)       ~> \x. t <+> u
  LamProd,     // a <.> \x.t              ~> \x. a <.> t
  TensElimSum, // lettens(t <+> u, ..)    ~> lettens(t,..) <+> lettens(u,..)
  TensElimProd,
  TopSum,      // unit <+> unit           ~> unit
  TopProd,     // a <.> unit              ~> unit
  PairSum,     // pair(t,u) <+> pair(v,w) ~> pair(t<+>v, u<+>w)
  PairProd,    // a <.> pair(t,u)         ~> pair(a<.>t, a<.>u)
  PlusElimSum,
  PlusElimProd,
  BangElimSum,
  BangElimProd,
  // ultra-reduction
  UltraSumLeft,  // t <+> u ~> t
  UltraSumRight, // t <+> u ~> u
  UltraProd      // a <.> t ~> t
};

std::string_view rule_name(Rule r);

struct RedexSite {
  std::vector<int> path; // child indices from the root
  Rule rule;
};

struct Strategy {
  enum class Kind { LeftmostOutermost, Random };
  Kind kind = Kind::LeftmostOutermost;
  uint64_t seed = 0;

  static Strategy leftmost_outermost() { return {}; }
  static Strategy random(uint64_t seed) { return {Kind::Random, seed}; }
};

// All redex sites in preorder; at a node, rules are listed in table order.
std::vector<RedexSite> redexes(const TermPtr& t, bool ultra = false);

struct InvalidSite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contracts the redex at `site`; throws InvalidSite when the rule does not
// match there.
TermPtr step_at(const TermPtr& t, const RedexSite& site);

struct NormalizeResult {
  TermPtr term;
  uint64_t steps = 0;
  bool fuel_exhausted = false;       // term then holds the last reduct
  std::vector<TermPtr> trace;        // with_trace only: t0 .. tn
};

NormalizeResult normalize(const TermPtr& t,
                          Strategy strategy = Strategy::leftmost_outermost(),
                          uint64_t fuel = 100000, bool ultra = false,
                          bool with_trace = false);

// Classification of a closed normal form by the outermost connective of its
// type, per the introduction property.
enum class Classification {
  ScalarStar, Lambda, TensorIntro, Sum, Smul, Unit, Pair, Inl, Inr, BangIntro,
  Violation, NotNormal, NotClosed
};

std::string_view classification_name(Classification c);

Classification classify_normal(const TermPtr& t, const TypePtr& a);

} // namespace oclam
