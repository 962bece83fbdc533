#include "oclam/reduce.hpp"

#include "oclam/syntax.hpp"

namespace oclam {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::LetOneBeta: return "let1-beta";
    case Rule::AppBeta: return "app-beta";
    case Rule::TensBeta: return "tens-beta";
    case Rule::With1Beta: return "with1-beta";
    case Rule::With2Beta: return "with2-beta";
    case Rule::Plus1Beta: return "plus1-beta";
    case Rule::Plus2Beta: return "plus2-beta";
    case Rule::BangBeta: return "bang-beta";
    case Rule::StarSum: return "star-sum";
    case Rule::StarProd: return "star-prod";
    case Rule::LamSum: return "lam-sum";
    case Rule::LamProd: return "lam-prod";
    case Rule::TensElimSum: return "lettens-sum";
    case Rule::TensElimProd: return "lettens-prod";
    case Rule::TopSum: return "unit-sum";
    case Rule::TopProd: return "unit-prod";
    case Rule::PairSum: return "pair-sum";
    case Rule::PairProd: return "pair-prod";
    case Rule::PlusElimSum: return "case-sum";
    case Rule::PlusElimProd: return "case-prod";
    case Rule::BangElimSum: return "letbang-sum";
    case Rule::BangElimProd: return "letbang-prod";
    case Rule::UltraSumLeft: return "ultra-sum-left";
    case Rule::UltraSumRight: return "ultra-sum-right";
    case Rule::UltraProd: return "ultra-prod";
  }
  return "?";
}

namespace {

bool is(const TermPtr& t, TermTag tag) { return t->tag == tag; }

bool rule_matches(Rule r, const TermPtr& t) {
  switch (r) {
    case Rule::LetOneBeta:
      return is(t, TermTag::ElimOne) && is(t->kids[0], TermTag::Star);
    case Rule::AppBeta:
      return is(t, TermTag::App) && is(t->kids[0], TermTag::Lam);
    case Rule::TensBeta:
      return is(t, TermTag::ElimTens) && is(t->kids[0], TermTag::Tens);
    case Rule::With1Beta:
      return is(t, TermTag::ElimWith1) && is(t->kids[0], TermTag::Pair);
    case Rule::With2Beta:
      return is(t, TermTag::ElimWith2) && is(t->kids[0], TermTag::Pair);
    case Rule::Plus1Beta:
      return is(t, TermTag::ElimPlus) && is(t->kids[0], TermTag::Inl);
    case Rule::Plus2Beta:
      return is(t, TermTag::ElimPlus) && is(t->kids[0], TermTag::Inr);
    case Rule::BangBeta:
      return is(t, TermTag::ElimBang) && is(t->kids[0], TermTag::Bang);
    case Rule::StarSum:
      return is(t, TermTag::Sum) && is(t->kids[0], TermTag::Star) &&
             is(t->kids[1], TermTag::Star);
    case Rule::StarProd:
      return is(t, TermTag::Smul) && is(t->kids[0], TermTag::Star);
    case Rule::LamSum:
      return is(t, TermTag::Sum) && is(t->kids[0], TermTag::Lam) &&
             is(t->kids[1], TermTag::Lam) &&
             type_eq(t->kids[0]->ann, t->kids[1]->ann);
    case Rule::LamProd:
      return is(t, TermTag::Smul) && is(t->kids[0], TermTag::Lam);
    case Rule::TensElimSum:
      return is(t, TermTag::ElimTens) && is(t->kids[0], TermTag::Sum);
    case Rule::TensElimProd:
      return is(t, TermTag::ElimTens) && is(t->kids[0], TermTag::Smul);
    case Rule::TopSum:
      return is(t, TermTag::Sum) && is(t->kids[0], TermTag::TopIntro) &&
             is(t->kids[1], TermTag::TopIntro);
    case Rule::TopProd:
      return is(t, TermTag::Smul) && is(t->kids[0], TermTag::TopIntro);
    case Rule::PairSum:
      return is(t, TermTag::Sum) && is(t->kids[0], TermTag::Pair) &&
             is(t->kids[1], TermTag::Pair);
    case Rule::PairProd:
      return is(t, TermTag::Smul) && is(t->kids[0], TermTag::Pair);
    case Rule::PlusElimSum:
      return is(t, TermTag::ElimPlus) && is(t->kids[0], TermTag::Sum);
    case Rule::PlusElimProd:
      return is(t, TermTag::ElimPlus) && is(t->kids[0], TermTag::Smul);
    case Rule::BangElimSum:
      return is(t, TermTag::ElimBang) && is(t->kids[0], TermTag::Sum);
    case Rule::BangElimProd:
      return is(t, TermTag::ElimBang) && is(t->kids[0], TermTag::Smul);
    case Rule::UltraSumLeft:
    case Rule::UltraSumRight:
      return is(t, TermTag::Sum);
    case Rule::UltraProd:
      return is(t, TermTag::Smul);
  }
  return false;
}

const Semiring& ring_of(const Scalar& s) { return Semiring::of(s.ring()); }

TermPtr contract(Rule r, const TermPtr& t) {
  switch (r) {
    case Rule::LetOneBeta:
      return mk_smul(t->kids[0]->scalar, t->kids[1]);
    case Rule::AppBeta: {
      const TermPtr& lam = t->kids[0];
      return substitute(lam->kids[0], lam->name, t->kids[1]);
    }
    case Rule::TensBeta: {
      const TermPtr& pair = t->kids[0];
      return substitute(t->kids[1], {{t->name, pair->kids[0]},
                                     {t->name2, pair->kids[1]}});
    }
    case Rule::With1Beta:
      return substitute(t->kids[1], t->name, t->kids[0]->kids[0]);
    case Rule::With2Beta:
      return substitute(t->kids[1], t->name, t->kids[0]->kids[1]);
    case Rule::Plus1Beta:
      return substitute(t->kids[1], t->name, t->kids[0]->kids[0]);
    case Rule::Plus2Beta:
      return substitute(t->kids[2], t->name2, t->kids[0]->kids[0]);
    case Rule::BangBeta:
      return substitute(t->kids[1], t->name, t->kids[0]->kids[0]);
    case Rule::StarSum: {
      const Scalar& a = t->kids[0]->scalar;
      const Scalar& b = t->kids[1]->scalar;
      return mk_star(ring_of(a).add(a, b));
    }
    case Rule::StarProd: {
      const Scalar& a = t->scalar;
      const Scalar& b = t->kids[0]->scalar;
      return mk_star(ring_of(a).mul(a, b));
    }
    case Rule::LamSum: {
      // Both bodies are aligned on one binder, fresh if either body has a
      // clashing free variable.
      const TermPtr& f = t->kids[0];
      const TermPtr& g = t->kids[1];
      std::string binder = f->name;
      if (f->name != g->name) {
        std::set<std::string> fv_g = free_vars(g->kids[0]);
        fv_g.erase(g->name);
        if (fv_g.count(binder)) {
          std::set<std::string> avoid = fv_g;
          for (const auto& v : free_vars(f->kids[0])) avoid.insert(v);
          binder = fresh_name(binder, avoid);
        }
      }
      TermPtr fbody = binder == f->name
                          ? f->kids[0]
                          : substitute(f->kids[0], f->name, mk_var(binder));
      TermPtr gbody = binder == g->name
                          ? g->kids[0]
                          : substitute(g->kids[0], g->name, mk_var(binder));
      return mk_lam(binder, f->ann, mk_sum(fbody, gbody));
    }
    case Rule::LamProd: {
      const TermPtr& f = t->kids[0];
      return mk_lam(f->name, f->ann, mk_smul(t->scalar, f->kids[0]));
    }
    case Rule::TensElimSum: {
      const TermPtr& s = t->kids[0];
      return mk_sum(
          mk_elim_tens(s->kids[0], t->name, t->ann, t->name2, t->ann2,
                       t->kids[1]),
          mk_elim_tens(s->kids[1], t->name, t->ann, t->name2, t->ann2,
                       t->kids[1]));
    }
    case Rule::TensElimProd: {
      const TermPtr& s = t->kids[0];
      return mk_smul(s->scalar,
                     mk_elim_tens(s->kids[0], t->name, t->ann, t->name2,
                                  t->ann2, t->kids[1]));
    }
    case Rule::TopSum:
    case Rule::TopProd:
      return mk_top();
    case Rule::PairSum: {
      const TermPtr& a = t->kids[0];
      const TermPtr& b = t->kids[1];
      return mk_pair(mk_sum(a->kids[0], b->kids[0]),
                     mk_sum(a->kids[1], b->kids[1]));
    }
    case Rule::PairProd: {
      const TermPtr& p = t->kids[0];
      return mk_pair(mk_smul(t->scalar, p->kids[0]),
                     mk_smul(t->scalar, p->kids[1]));
    }
    case Rule::PlusElimSum: {
      const TermPtr& s = t->kids[0];
      return mk_sum(mk_elim_plus(s->kids[0], t->name, t->ann, t->kids[1],
                                 t->name2, t->ann2, t->kids[2]),
                    mk_elim_plus(s->kids[1], t->name, t->ann, t->kids[1],
                                 t->name2, t->ann2, t->kids[2]));
    }
    case Rule::PlusElimProd: {
      const TermPtr& s = t->kids[0];
      return mk_smul(s->scalar,
                     mk_elim_plus(s->kids[0], t->name, t->ann, t->kids[1],
                                  t->name2, t->ann2, t->kids[2]));
    }
    case Rule::BangElimSum: {
      const TermPtr& s = t->kids[0];
      return mk_sum(mk_elim_bang(s->kids[0], t->name, t->ann, t->kids[1]),
                    mk_elim_bang(s->kids[1], t->name, t->ann, t->kids[1]));
    }
    case Rule::BangElimProd: {
      const TermPtr& s = t->kids[0];
      return mk_smul(s->scalar,
                     mk_elim_bang(s->kids[0], t->name, t->ann, t->kids[1]));
    }
    case Rule::UltraSumLeft:
      return t->kids[0];
    case Rule::UltraSumRight:
      return t->kids[1];
    case Rule::UltraProd:
      return t->kids[0];
  }
  throw InvalidSite("unhandled rule");
}

constexpr Rule kPlainRules[] = {
    Rule::LetOneBeta,   Rule::AppBeta,      Rule::TensBeta,
    Rule::With1Beta,    Rule::With2Beta,    Rule::Plus1Beta,
    Rule::Plus2Beta,    Rule::BangBeta,     Rule::StarSum,
    Rule::StarProd,     Rule::LamSum,       Rule::LamProd,
    Rule::TensElimSum,  Rule::TensElimProd, Rule::TopSum,
    Rule::TopProd,      Rule::PairSum,      Rule::PairProd,
    Rule::PlusElimSum,  Rule::PlusElimProd, Rule::BangElimSum,
    Rule::BangElimProd};

constexpr Rule kUltraRules[] = {Rule::UltraSumLeft, Rule::UltraSumRight,
                                Rule::UltraProd};

void redexes_rec(const TermPtr& t, bool ultra, std::vector<int>& path,
                 std::vector<RedexSite>& out) {
  for (Rule r : kPlainRules)
    if (rule_matches(r, t)) out.push_back({path, r});
  if (ultra)
    for (Rule r : kUltraRules)
      if (rule_matches(r, t)) out.push_back({path, r});
  for (size_t i = 0; i < t->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    redexes_rec(t->kids[i], ultra, path, out);
    path.pop_back();
  }
}

TermPtr rebuild_at(const TermPtr& t, const std::vector<int>& path, size_t i,
                   const RedexSite& site) {
  if (i == path.size()) {
    if (!rule_matches(site.rule, t))
      throw InvalidSite(std::string("rule ") + std::string(rule_name(site.rule)) +
                        " does not match at site");
    return contract(site.rule, t);
  }
  int k = path[i];
  if (k < 0 || static_cast<size_t>(k) >= t->kids.size())
    throw InvalidSite("path leaves the term");
  std::vector<TermPtr> kids = t->kids;
  kids[k] = rebuild_at(t->kids[k], path, i + 1, site);
  return with_kids(t, std::move(kids));
}

// SplitMix64; deterministic across platforms.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  size_t below(size_t n) { return static_cast<size_t>(next() % n); }
};

} // namespace

std::vector<RedexSite> redexes(const TermPtr& t, bool ultra) {
  std::vector<RedexSite> out;
  std::vector<int> path;
  redexes_rec(t, ultra, path, out);
  return out;
}

TermPtr step_at(const TermPtr& t, const RedexSite& site) {
  return rebuild_at(t, site.path, 0, site);
}

NormalizeResult normalize(const TermPtr& t, Strategy strategy, uint64_t fuel,
                          bool ultra, bool with_trace) {
  NormalizeResult res;
  res.term = t;
  Rng rng(strategy.seed);
  if (with_trace) res.trace.push_back(t);
  for (;;) {
    std::vector<RedexSite> sites = redexes(res.term, ultra);
    if (sites.empty()) return res;
    if (res.steps >= fuel) {
      res.fuel_exhausted = true;
      return res;
    }
    const RedexSite& chosen = strategy.kind == Strategy::Kind::Random
                                  ? sites[rng.below(sites.size())]
                                  : sites.front();
    res.term = step_at(res.term, chosen);
    res.steps++;
    if (with_trace) res.trace.push_back(res.term);
  }
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::ScalarStar: return "ScalarStar";
    case Classification::Lambda: return "Lambda";
    case Classification::TensorIntro: return "TensorIntro";
    case Classification::Sum: return "Sum";
    case Classification::Smul: return "Smul";
    case Classification::Unit: return "Unit";
    case Classification::Pair: return "Pair";
    case Classification::Inl: return "Inl";
    case Classification::Inr: return "Inr";
    case Classification::BangIntro: return "Bang";
    case Classification::Violation: return "Violation";
    case Classification::NotNormal: return "NotNormal";
    case Classification::NotClosed: return "NotClosed";
  }
  return "?";
}

Classification classify_normal(const TermPtr& t, const TypePtr& a) {
  if (!redexes(t).empty()) return Classification::NotNormal;
  if (!free_vars(t).empty()) return Classification::NotClosed;
  switch (a->tag) {
    case TypeTag::One:
      return t->tag == TermTag::Star ? Classification::ScalarStar
                                     : Classification::Violation;
    case TypeTag::Lolli:
      return t->tag == TermTag::Lam ? Classification::Lambda
                                    : Classification::Violation;
    case TypeTag::Tensor:
      switch (t->tag) {
        case TermTag::Tens: return Classification::TensorIntro;
        case TermTag::Sum: return Classification::Sum;
        case TermTag::Smul: return Classification::Smul;
        default: return Classification::Violation;
      }
    case TypeTag::Top:
      return t->tag == TermTag::TopIntro ? Classification::Unit
                                         : Classification::Violation;
    case TypeTag::With:
      return t->tag == TermTag::Pair ? Classification::Pair
                                     : Classification::Violation;
    case TypeTag::Plus:
      switch (t->tag) {
        case TermTag::Inl: return Classification::Inl;
        case TermTag::Inr: return Classification::Inr;
        case TermTag::Sum: return Classification::Sum;
        case TermTag::Smul: return Classification::Smul;
        default: return Classification::Violation;
      }
    case TypeTag::Bang:
      switch (t->tag) {
        case TermTag::Bang: return Classification::BangIntro;
        case TermTag::Sum: return Classification::Sum;
        case TermTag::Smul: return Classification::Smul;
        default: return Classification::Violation;
      }
    case TypeTag::Zero:
    case TypeTag::Unknown:
      // No closed normal inhabitants of Zero exist.
      return Classification::Violation;
  }
  return Classification::Violation;
}

} // namespace oclam
