#include "oclam/syntax.hpp"

#include <algorithm>

namespace oclam {

namespace {

void free_vars_rec(const TermPtr& t, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (t->tag) {
    case TermTag::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermTag::Lam:
    case TermTag::ElimWith1:
    case TermTag::ElimWith2:
    case TermTag::ElimBang: {
      size_t scrut = t->kids.size() - 1; // Lam has no scrutinee
      for (size_t i = 0; i + 1 < t->kids.size(); ++i)
        free_vars_rec(t->kids[i], bound, out);
      bool fresh = bound.insert(t->name).second;
      free_vars_rec(t->kids[scrut], bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case TermTag::ElimTens: {
      free_vars_rec(t->kids[0], bound, out);
      bool f1 = bound.insert(t->name).second;
      bool f2 = bound.insert(t->name2).second;
      free_vars_rec(t->kids[1], bound, out);
      if (f1) bound.erase(t->name);
      if (f2 && t->name2 != t->name) bound.erase(t->name2);
      return;
    }
    case TermTag::ElimPlus: {
      free_vars_rec(t->kids[0], bound, out);
      bool f1 = bound.insert(t->name).second;
      free_vars_rec(t->kids[1], bound, out);
      if (f1) bound.erase(t->name);
      bool f2 = bound.insert(t->name2).second;
      free_vars_rec(t->kids[2], bound, out);
      if (f2) bound.erase(t->name2);
      return;
    }
    default:
      for (const auto& k : t->kids) free_vars_rec(k, bound, out);
      return;
  }
}

} // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string name = base;
  while (avoid.count(name)) name += "'";
  return name;
}

namespace {

using Subst = std::map<std::string, TermPtr>;

// Names that must not be captured by any binder we pass under.
std::set<std::string> images_fv(const Subst& s) {
  std::set<std::string> out;
  for (const auto& [k, v] : s) {
    auto fv = free_vars(v);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

TermPtr subst_rec(const TermPtr& t, const Subst& s,
                  const std::set<std::string>& forbidden);

// Handles one binder: drops shadowed entries, freshens on capture risk.
// Returns the (possibly renamed) binder and the body after substitution.
std::pair<std::string, TermPtr> subst_binder(const std::string& name,
                                             const TermPtr& body, Subst s,
                                             std::set<std::string> forbidden) {
  s.erase(name);
  std::string binder = name;
  if (forbidden.count(name)) {
    std::set<std::string> avoid = forbidden;
    for (const auto& v : free_vars(body)) avoid.insert(v);
    for (const auto& [k, img] : s) avoid.insert(k);
    binder = fresh_name(name, avoid);
    s[name] = mk_var(binder);
  }
  if (s.empty()) return {binder, body};
  forbidden.insert(binder);
  return {binder, subst_rec(body, s, forbidden)};
}

TermPtr subst_rec(const TermPtr& t, const Subst& s,
                  const std::set<std::string>& forbidden) {
  if (s.empty()) return t;
  switch (t->tag) {
    case TermTag::Var: {
      auto it = s.find(t->name);
      return it != s.end() ? it->second : t;
    }
    case TermTag::Lam: {
      auto [x, body] = subst_binder(t->name, t->kids[0], s, forbidden);
      return mk_lam(x, t->ann, body);
    }
    case TermTag::ElimTens: {
      // Both binders scope over the same body, so they are handled in one
      // parallel pass.
      TermPtr scrut = subst_rec(t->kids[0], s, forbidden);
      Subst body_s = s;
      body_s.erase(t->name);
      body_s.erase(t->name2);
      std::string x = t->name, y = t->name2;
      if (forbidden.count(t->name) || forbidden.count(t->name2)) {
        std::set<std::string> avoid = forbidden;
        for (const auto& v : free_vars(t->kids[1])) avoid.insert(v);
        for (const auto& [k, img] : body_s) avoid.insert(k);
        if (forbidden.count(t->name)) {
          x = fresh_name(t->name, avoid);
          avoid.insert(x);
          body_s[t->name] = mk_var(x);
        }
        if (forbidden.count(t->name2)) {
          y = fresh_name(t->name2, avoid);
          body_s[t->name2] = mk_var(y);
        }
      }
      TermPtr body = t->kids[1];
      if (!body_s.empty()) {
        std::set<std::string> inner = forbidden;
        inner.insert(x);
        inner.insert(y);
        body = subst_rec(body, body_s, inner);
      }
      return mk_elim_tens(scrut, x, t->ann, y, t->ann2, body);
    }
    case TermTag::ElimWith1: {
      TermPtr scrut = subst_rec(t->kids[0], s, forbidden);
      auto [x, body] = subst_binder(t->name, t->kids[1], s, forbidden);
      return mk_elim_with1(scrut, x, t->ann, body);
    }
    case TermTag::ElimWith2: {
      TermPtr scrut = subst_rec(t->kids[0], s, forbidden);
      auto [x, body] = subst_binder(t->name, t->kids[1], s, forbidden);
      return mk_elim_with2(scrut, x, t->ann, body);
    }
    case TermTag::ElimPlus: {
      TermPtr scrut = subst_rec(t->kids[0], s, forbidden);
      auto [x, u] = subst_binder(t->name, t->kids[1], s, forbidden);
      auto [y, v] = subst_binder(t->name2, t->kids[2], s, forbidden);
      return mk_elim_plus(scrut, x, t->ann, u, y, t->ann2, v);
    }
    case TermTag::ElimBang: {
      TermPtr scrut = subst_rec(t->kids[0], s, forbidden);
      auto [x, body] = subst_binder(t->name, t->kids[1], s, forbidden);
      return mk_elim_bang(scrut, x, t->ann, body);
    }
    default: {
      std::vector<TermPtr> kids;
      kids.reserve(t->kids.size());
      bool changed = false;
      for (const auto& k : t->kids) {
        kids.push_back(subst_rec(k, s, forbidden));
        changed |= kids.back().get() != k.get();
      }
      return changed ? with_kids(t, std::move(kids)) : t;
    }
  }
}

} // namespace

TermPtr substitute(const TermPtr& t, const Subst& subst) {
  if (subst.empty()) return t;
  return subst_rec(t, subst, images_fv(subst));
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u) {
  return substitute(t, Subst{{x, u}});
}

namespace {

// Locally-nameless comparison: binders are looked up by the level at which
// they were introduced.
struct AlphaEnv {
  std::map<std::string, int> left, right;
  int next = 0;

  bool var_eq(const std::string& a, const std::string& b) const {
    auto la = left.find(a);
    auto rb = right.find(b);
    if (la == left.end() && rb == right.end()) return a == b; // both free
    if (la == left.end() || rb == right.end()) return false;
    return la->second == rb->second;
  }
};

bool alpha_rec(const TermPtr& a, const TermPtr& b, AlphaEnv env);

bool alpha_under(const TermPtr& a, const TermPtr& b, const std::string& na,
                 const std::string& nb, AlphaEnv env) {
  env.left[na] = env.next;
  env.right[nb] = env.next;
  env.next++;
  return alpha_rec(a, b, std::move(env));
}

bool alpha_rec(const TermPtr& a, const TermPtr& b, AlphaEnv env) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case TermTag::Var:
      return env.var_eq(a->name, b->name);
    case TermTag::Star:
      return a->scalar == b->scalar;
    case TermTag::Smul:
      return a->scalar == b->scalar && alpha_rec(a->kids[0], b->kids[0], env);
    case TermTag::TopIntro:
      return true;
    case TermTag::Lam:
      return type_eq(a->ann, b->ann) &&
             alpha_under(a->kids[0], b->kids[0], a->name, b->name, env);
    case TermTag::ElimTens: {
      if (!type_eq(a->ann, b->ann) || !type_eq(a->ann2, b->ann2)) return false;
      if (!alpha_rec(a->kids[0], b->kids[0], env)) return false;
      AlphaEnv inner = env;
      inner.left[a->name] = inner.next;
      inner.right[b->name] = inner.next;
      inner.next++;
      inner.left[a->name2] = inner.next;
      inner.right[b->name2] = inner.next;
      inner.next++;
      return alpha_rec(a->kids[1], b->kids[1], std::move(inner));
    }
    case TermTag::ElimWith1:
    case TermTag::ElimWith2:
    case TermTag::ElimBang:
      return type_eq(a->ann, b->ann) &&
             alpha_rec(a->kids[0], b->kids[0], env) &&
             alpha_under(a->kids[1], b->kids[1], a->name, b->name, env);
    case TermTag::ElimPlus:
      return type_eq(a->ann, b->ann) && type_eq(a->ann2, b->ann2) &&
             alpha_rec(a->kids[0], b->kids[0], env) &&
             alpha_under(a->kids[1], b->kids[1], a->name, b->name, env) &&
             alpha_under(a->kids[2], b->kids[2], a->name2, b->name2, env);
    case TermTag::Inl:
    case TermTag::Inr:
      return type_eq(a->ann, b->ann) && alpha_rec(a->kids[0], b->kids[0], env);
    default: {
      if (a->kids.size() != b->kids.size()) return false;
      for (size_t i = 0; i < a->kids.size(); ++i)
        if (!alpha_rec(a->kids[i], b->kids[i], env)) return false;
      return true;
    }
  }
}

} // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  return alpha_rec(a, b, AlphaEnv{});
}

long measure(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Var:
      return 0;
    case TermTag::Star:
    case TermTag::TopIntro:
      return 1;
    case TermTag::Sum:
    case TermTag::Pair:
      return 1 + std::max(measure(t->kids[0]), measure(t->kids[1]));
    case TermTag::ElimPlus:
      return 1 + measure(t->kids[0]) +
             std::max(measure(t->kids[1]), measure(t->kids[2]));
    default: {
      long m = 1;
      for (const auto& k : t->kids) m += measure(k);
      return m;
    }
  }
}

namespace {

// Printing precedence: sum (0) < smul (1) < application (2) < atom (3).
void print_rec(const TermPtr& t, int min_prec, std::string& out) {
  auto paren = [&](int prec, auto&& body) {
    bool need = prec < min_prec;
    if (need) out += "(";
    body();
    if (need) out += ")";
  };
  switch (t->tag) {
    case TermTag::Var:
      out += t->name;
      return;
    case TermTag::Sum:
      // <+> is parsed right-associatively, so the left operand is tightened.
      paren(0, [&] {
        print_rec(t->kids[0], 1, out);
        out += " <+> ";
        print_rec(t->kids[1], 0, out);
      });
      return;
    case TermTag::Smul:
      paren(1, [&] {
        out += t->scalar.str();
        out += " <.> ";
        print_rec(t->kids[0], 1, out);
      });
      return;
    case TermTag::Star:
      out += "star(" + t->scalar.str() + ")";
      return;
    case TermTag::ElimOne:
      out += "let1(";
      print_rec(t->kids[0], 0, out);
      out += ", ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
    case TermTag::Lam:
      // A lambda body extends as far right as possible, so bare lambdas are
      // only printed in rightmost-open positions.
      paren(0, [&] {
        out += "\\" + t->name + ":" + print_type(t->ann) + ". ";
        print_rec(t->kids[0], 0, out);
      });
      return;
    case TermTag::App:
      paren(2, [&] {
        print_rec(t->kids[0], 2, out);
        out += " ";
        print_rec(t->kids[1], 3, out);
      });
      return;
    case TermTag::Tens:
      out += "tens(";
      print_rec(t->kids[0], 0, out);
      out += ", ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
    case TermTag::ElimTens:
      out += "lettens(";
      print_rec(t->kids[0], 0, out);
      out += ", " + t->name + ":" + print_type(t->ann);
      out += ", " + t->name2 + ":" + print_type(t->ann2) + ". ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
    case TermTag::TopIntro:
      out += "unit";
      return;
    case TermTag::ElimZero:
      out += "abort(";
      print_rec(t->kids[0], 0, out);
      out += ")";
      return;
    case TermTag::Pair:
      out += "pair(";
      print_rec(t->kids[0], 0, out);
      out += ", ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
    case TermTag::ElimWith1:
    case TermTag::ElimWith2:
      out += t->tag == TermTag::ElimWith1 ? "fst(" : "snd(";
      print_rec(t->kids[0], 0, out);
      out += ", " + t->name + ":" + print_type(t->ann) + ". ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
    case TermTag::Inl:
    case TermTag::Inr:
      out += t->tag == TermTag::Inl ? "inl[" : "inr[";
      out += print_type(t->ann) + "](";
      print_rec(t->kids[0], 0, out);
      out += ")";
      return;
    case TermTag::ElimPlus:
      out += "case(";
      print_rec(t->kids[0], 0, out);
      out += ", " + t->name + ":" + print_type(t->ann) + ". ";
      print_rec(t->kids[1], 0, out);
      out += ", " + t->name2 + ":" + print_type(t->ann2) + ". ";
      print_rec(t->kids[2], 0, out);
      out += ")";
      return;
    case TermTag::Bang:
      out += "bang(";
      print_rec(t->kids[0], 0, out);
      out += ")";
      return;
    case TermTag::ElimBang:
      out += "letbang(";
      print_rec(t->kids[0], 0, out);
      out += ", " + t->name + ":" + print_type(t->ann) + ". ";
      print_rec(t->kids[1], 0, out);
      out += ")";
      return;
  }
}

} // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

} // namespace oclam
