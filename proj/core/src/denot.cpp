#include "oclam/denot.hpp"

#include <algorithm>

#include "oclam/equiv.hpp"
#include "oclam/rng.hpp"
#include "oclam/syntax.hpp"

namespace oclam {

namespace {

std::shared_ptr<SemValue> raw(SemValue::Kind k) {
  auto v = std::make_shared<SemValue>();
  v->kind = k;
  return v;
}

} // namespace

SemValuePtr sv_scalar(Scalar a) {
  auto v = raw(SemValue::Kind::Scalar);
  v->scalar = std::move(a);
  return v;
}

SemValuePtr sv_pair(SemValuePtr a, SemValuePtr b) {
  auto v = raw(SemValue::Kind::Pair);
  v->fst = std::move(a);
  v->snd = std::move(b);
  return v;
}

SemValuePtr sv_zero() {
  static const SemValuePtr z = raw(SemValue::Kind::Zero);
  return z;
}

SemValuePtr sv_tensor(std::vector<TensorAtom> atoms) {
  std::vector<TensorAtom> kept;
  for (auto& a : atoms)
    if (!a.weight.is_zero()) kept.push_back(std::move(a));
  if (kept.empty()) return sv_zero();
  auto v = raw(SemValue::Kind::Tensor);
  v->tensor = std::move(kept);
  return v;
}

SemValuePtr sv_bang(std::vector<BangAtom> atoms) {
  std::vector<BangAtom> kept;
  for (auto& a : atoms)
    if (!a.weight.is_zero()) kept.push_back(std::move(a));
  if (kept.empty()) return sv_zero();
  auto v = raw(SemValue::Kind::Bang);
  v->bang = std::move(kept);
  return v;
}

SemValuePtr sv_fun(std::function<SemValuePtr(const SemValuePtr&)> f) {
  auto v = raw(SemValue::Kind::Fun);
  v->fun = std::move(f);
  return v;
}

// ---------------------------------------------------------------------------
// Type descriptors

namespace {

bool is_enumerable(const TypePtr& a) {
  switch (a->tag) {
    case TypeTag::One:
    case TypeTag::Top:
    case TypeTag::Zero:
      return true;
    case TypeTag::With:
    case TypeTag::Plus:
    case TypeTag::Tensor:
      return is_enumerable(a->a) && is_enumerable(a->b);
    default:
      return false;
  }
}

bool is_decidable(const TypePtr& a) {
  if (is_enumerable(a)) return true;
  if (a->tag == TypeTag::Bang) return is_decidable(a->a);
  if (a->tag == TypeTag::Lolli)
    return is_enumerable(a->a) && is_decidable(a->b);
  return false;
}

void build_basis(const TypePtr& a, const Semiring& ring,
                 std::vector<SemValuePtr>& out) {
  switch (a->tag) {
    case TypeTag::One:
      out.push_back(sv_scalar(ring.one()));
      return;
    case TypeTag::Top:
    case TypeTag::Zero:
      return; // the zero module has an empty basis
    case TypeTag::With:
    case TypeTag::Plus: {
      std::vector<SemValuePtr> l, r;
      build_basis(a->a, ring, l);
      build_basis(a->b, ring, r);
      for (auto& e : l) out.push_back(sv_pair(e, sv_zero()));
      for (auto& e : r) out.push_back(sv_pair(sv_zero(), e));
      return;
    }
    case TypeTag::Tensor: {
      std::vector<SemValuePtr> l, r;
      build_basis(a->a, ring, l);
      build_basis(a->b, ring, r);
      for (auto& e : l)
        for (auto& f : r) out.push_back(sv_tensor({{ring.one(), e, f}}));
      return;
    }
    default:
      throw SemError("no basis for " + print_type(a));
  }
}

size_t enum_dim(const TypePtr& a) {
  switch (a->tag) {
    case TypeTag::One: return 1;
    case TypeTag::Top:
    case TypeTag::Zero: return 0;
    case TypeTag::With:
    case TypeTag::Plus: return enum_dim(a->a) + enum_dim(a->b);
    case TypeTag::Tensor: return enum_dim(a->a) * enum_dim(a->b);
    default: throw SemError("not enumerable: " + print_type(a));
  }
}

} // namespace

SemTypeInfo interp_type(const TypePtr& a, const Semiring& ring) {
  SemTypeInfo info;
  info.enumerable = is_enumerable(a);
  info.decidable = is_decidable(a);
  if (info.enumerable) build_basis(a, ring, info.basis);
  return info;
}

// ---------------------------------------------------------------------------
// Semimodule operations

namespace {

SemValuePtr normalize_bang(const TypePtr& atom_type, std::vector<BangAtom> atoms,
                           const Semiring& ring);

} // namespace

SemValuePtr vzero(const TypePtr&) { return sv_zero(); }

SemValuePtr vadd(const TypePtr& a, const SemValuePtr& v, const SemValuePtr& w,
                 const Semiring& ring) {
  if (v->kind == SemValue::Kind::Zero) return w;
  if (w->kind == SemValue::Kind::Zero) return v;
  if (v->kind != w->kind) throw SemError("vadd on mismatched shapes");
  switch (v->kind) {
    case SemValue::Kind::Scalar:
      return sv_scalar(ring.add(v->scalar, w->scalar));
    case SemValue::Kind::Pair:
      return sv_pair(vadd(a->a, v->fst, w->fst, ring),
                     vadd(a->b, v->snd, w->snd, ring));
    case SemValue::Kind::Tensor: {
      std::vector<TensorAtom> atoms = v->tensor;
      atoms.insert(atoms.end(), w->tensor.begin(), w->tensor.end());
      return sv_tensor(std::move(atoms));
    }
    case SemValue::Kind::Bang: {
      std::vector<BangAtom> atoms = v->bang;
      atoms.insert(atoms.end(), w->bang.begin(), w->bang.end());
      if (a->tag == TypeTag::Bang)
        return normalize_bang(a->a, std::move(atoms), ring);
      return sv_bang(std::move(atoms));
    }
    case SemValue::Kind::Fun: {
      auto f = v, g = w;
      TypePtr cod = a->tag == TypeTag::Lolli ? a->b : nullptr;
      const Semiring* r = &ring;
      return sv_fun([f, g, cod, r](const SemValuePtr& x) {
        return vadd(cod ? cod : ty_one(), f->fun(x), g->fun(x), *r);
      });
    }
    case SemValue::Kind::Zero:
      return v;
  }
  throw SemError("vadd fell through");
}

SemValuePtr vsmul(const TypePtr& a, const Scalar& s, const SemValuePtr& v,
                  const Semiring& ring) {
  if (s.is_zero() && s.ring() != SemiringId::Trivial) return sv_zero();
  if (v->kind == SemValue::Kind::Zero) return sv_zero();
  switch (v->kind) {
    case SemValue::Kind::Scalar:
      return sv_scalar(ring.mul(s, v->scalar));
    case SemValue::Kind::Pair:
      return sv_pair(vsmul(a->a, s, v->fst, ring), vsmul(a->b, s, v->snd, ring));
    case SemValue::Kind::Tensor: {
      std::vector<TensorAtom> atoms = v->tensor;
      for (auto& at : atoms) at.weight = ring.mul(s, at.weight);
      return sv_tensor(std::move(atoms));
    }
    case SemValue::Kind::Bang: {
      std::vector<BangAtom> atoms = v->bang;
      for (auto& at : atoms) at.weight = ring.mul(s, at.weight);
      return sv_bang(std::move(atoms));
    }
    case SemValue::Kind::Fun: {
      auto f = v;
      Scalar sc = s;
      TypePtr cod = a->tag == TypeTag::Lolli ? a->b : nullptr;
      const Semiring* r = &ring;
      return sv_fun([f, sc, cod, r](const SemValuePtr& x) {
        return vsmul(cod ? cod : ty_one(), sc, f->fun(x), *r);
      });
    }
    case SemValue::Kind::Zero:
      return sv_zero();
  }
  throw SemError("vsmul fell through");
}

SemValuePtr sem_apply(const TypePtr&, const SemValuePtr& f,
                      const SemValuePtr& arg) {
  if (f->kind == SemValue::Kind::Zero) return sv_zero();
  if (f->kind != SemValue::Kind::Fun)
    throw SemError("application of a non-function value");
  return f->fun(arg);
}

// ---------------------------------------------------------------------------
// Canonical forms

int CanonValue::compare(const CanonValue& o) const {
  if (kind != o.kind) return kind < o.kind ? -1 : 1;
  auto cmp_scalars = [](const std::vector<Scalar>& a,
                        const std::vector<Scalar>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
      if (int c = a[i].compare(b[i]); c != 0) return c;
    return 0;
  };
  switch (kind) {
    case Kind::Vec:
      return cmp_scalars(vec, o.vec);
    case Kind::Sum: {
      if (sum.size() != o.sum.size()) return sum.size() < o.sum.size() ? -1 : 1;
      for (size_t i = 0; i < sum.size(); ++i) {
        if (int c = sum[i].first.compare(o.sum[i].first); c != 0) return c;
        if (int c = sum[i].second.compare(o.sum[i].second); c != 0) return c;
      }
      return 0;
    }
    case Kind::Fn: {
      if (fn.size() != o.fn.size()) return fn.size() < o.fn.size() ? -1 : 1;
      for (size_t i = 0; i < fn.size(); ++i)
        if (int c = fn[i].compare(o.fn[i]); c != 0) return c;
      return 0;
    }
  }
  return 0;
}

std::string CanonValue::str() const {
  switch (kind) {
    case Kind::Vec: {
      std::string out = "[";
      for (size_t i = 0; i < vec.size(); ++i) {
        if (i) out += ", ";
        out += vec[i].str();
      }
      return out + "]";
    }
    case Kind::Sum: {
      std::string out = "{";
      for (size_t i = 0; i < sum.size(); ++i) {
        if (i) out += " + ";
        out += sum[i].second.str() + "*" + sum[i].first.str();
      }
      return out + "}";
    }
    case Kind::Fn: {
      std::string out = "fn(";
      for (size_t i = 0; i < fn.size(); ++i) {
        if (i) out += ", ";
        out += fn[i].str();
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

// Coefficients of v over the enumerated basis of a (enumerable types only).
void coeffs(const TypePtr& a, const SemValuePtr& v, const Semiring& ring,
            std::vector<Scalar>& out) {
  switch (a->tag) {
    case TypeTag::One:
      if (v->kind == SemValue::Kind::Zero) out.push_back(ring.zero());
      else if (v->kind == SemValue::Kind::Scalar) out.push_back(v->scalar);
      else throw SemError("value shape does not match I");
      return;
    case TypeTag::Top:
    case TypeTag::Zero:
      if (v->kind != SemValue::Kind::Zero)
        throw SemError("value shape does not match the zero module");
      return;
    case TypeTag::With:
    case TypeTag::Plus: {
      const SemValuePtr& l = v->kind == SemValue::Kind::Zero ? sv_zero() : v->fst;
      const SemValuePtr& r = v->kind == SemValue::Kind::Zero ? sv_zero() : v->snd;
      if (v->kind != SemValue::Kind::Zero && v->kind != SemValue::Kind::Pair)
        throw SemError("value shape does not match a biproduct");
      coeffs(a->a, l, ring, out);
      coeffs(a->b, r, ring, out);
      return;
    }
    case TypeTag::Tensor: {
      size_t d1 = enum_dim(a->a), d2 = enum_dim(a->b);
      size_t start = out.size();
      out.resize(start + d1 * d2, ring.zero());
      if (v->kind == SemValue::Kind::Zero) return;
      if (v->kind != SemValue::Kind::Tensor)
        throw SemError("value shape does not match a tensor");
      for (const auto& at : v->tensor) {
        std::vector<Scalar> cl, cr;
        coeffs(a->a, at.left, ring, cl);
        coeffs(a->b, at.right, ring, cr);
        for (size_t i = 0; i < d1; ++i)
          for (size_t j = 0; j < d2; ++j) {
            Scalar add = ring.mul(at.weight, ring.mul(cl[i], cr[j]));
            out[start + i * d2 + j] = ring.add(out[start + i * d2 + j], add);
          }
      }
      return;
    }
    default:
      throw SemError("not enumerable: " + print_type(a));
  }
}

std::vector<BangAtom> bang_atoms(const SemValuePtr& v) {
  if (v->kind == SemValue::Kind::Zero) return {};
  if (v->kind != SemValue::Kind::Bang)
    throw SemError("value shape does not match a bang");
  return v->bang;
}

std::vector<TensorAtom> tensor_atoms(const SemValuePtr& v) {
  if (v->kind == SemValue::Kind::Zero) return {};
  if (v->kind != SemValue::Kind::Tensor)
    throw SemError("value shape does not match a tensor");
  return v->tensor;
}

} // namespace

std::optional<CanonValue> canonicalize(const TypePtr& a, const SemValuePtr& v,
                                       const Semiring& ring) {
  if (is_enumerable(a)) {
    CanonValue c;
    c.kind = CanonValue::Kind::Vec;
    coeffs(a, v, ring, c.vec);
    return c;
  }
  if (a->tag == TypeTag::Bang && is_decidable(a->a)) {
    std::vector<std::pair<CanonValue, Scalar>> entries;
    for (const auto& at : bang_atoms(v)) {
      auto key = canonicalize(a->a, at.atom, ring);
      if (!key) return std::nullopt;
      entries.push_back({std::move(*key), at.weight});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    CanonValue c;
    c.kind = CanonValue::Kind::Sum;
    for (auto& e : entries) {
      if (!c.sum.empty() && c.sum.back().first == e.first)
        c.sum.back().second = ring.add(c.sum.back().second, e.second);
      else
        c.sum.push_back(std::move(e));
    }
    c.sum.erase(std::remove_if(c.sum.begin(), c.sum.end(),
                               [](const auto& e) { return e.second.is_zero(); }),
                c.sum.end());
    return c;
  }
  if (a->tag == TypeTag::Lolli && is_enumerable(a->a) && is_decidable(a->b)) {
    std::vector<SemValuePtr> basis;
    build_basis(a->a, ring, basis);
    CanonValue c;
    c.kind = CanonValue::Kind::Fn;
    for (const auto& e : basis) {
      auto out = canonicalize(a->b, sem_apply(a, v, e), ring);
      if (!out) return std::nullopt;
      c.fn.push_back(std::move(*out));
    }
    return c;
  }
  return std::nullopt;
}

std::optional<bool> sem_eq(const TypePtr& a, const SemValuePtr& v,
                           const SemValuePtr& w, const Semiring& ring) {
  auto cv = canonicalize(a, v, ring);
  auto cw = canonicalize(a, w, ring);
  if (!cv || !cw) return std::nullopt;
  return *cv == *cw;
}

// ---------------------------------------------------------------------------
// Comonad maps

namespace {

// Merges equal atoms when the atom type has decidable equality; the result
// is sorted by canonical key, giving formal sums a normal form.
SemValuePtr normalize_bang(const TypePtr& atom_type, std::vector<BangAtom> atoms,
                           const Semiring& ring) {
  std::vector<BangAtom> kept;
  for (auto& a : atoms)
    if (!a.weight.is_zero()) kept.push_back(std::move(a));
  if (kept.empty()) return sv_zero();
  if (!is_decidable(atom_type)) return sv_bang(std::move(kept));

  std::vector<std::pair<CanonValue, BangAtom>> keyed;
  keyed.reserve(kept.size());
  for (const auto& a : kept) {
    // decidable atom types always canonicalize
    auto key = canonicalize(atom_type, a.atom, ring);
    if (!key) return sv_bang(std::move(kept));
    keyed.push_back({std::move(*key), a});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<BangAtom> merged;
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i;
    Scalar w = ring.zero();
    while (j < keyed.size() && keyed[j].first == keyed[i].first) {
      w = ring.add(w, keyed[j].second.weight);
      ++j;
    }
    if (!w.is_zero()) merged.push_back({w, keyed[i].second.atom});
    i = j;
  }
  if (merged.empty()) return sv_zero();
  return sv_bang(std::move(merged));
}

} // namespace

SemValuePtr comonad_eps(const TypePtr& t, const SemValuePtr& b,
                        const Semiring& ring) {
  SemValuePtr acc = sv_zero();
  for (const auto& at : bang_atoms(b))
    acc = vadd(t, acc, vsmul(t, at.weight, at.atom, ring), ring);
  return acc;
}

SemValuePtr comonad_delta(const TypePtr& t, const SemValuePtr& b,
                          const Semiring& ring) {
  std::vector<BangAtom> atoms;
  for (const auto& at : bang_atoms(b))
    atoms.push_back({at.weight, sv_bang({{ring.one(), at.atom}})});
  return normalize_bang(ty_bang(t), std::move(atoms), ring);
}

SemValuePtr comonad_dup(const TypePtr& t, const SemValuePtr& b,
                        const Semiring& ring) {
  std::vector<TensorAtom> atoms;
  for (const auto& at : bang_atoms(b)) {
    SemValuePtr single = sv_bang({{ring.one(), at.atom}});
    atoms.push_back({at.weight, single, single});
  }
  (void)t;
  return sv_tensor(std::move(atoms));
}

SemValuePtr comonad_erase(const SemValuePtr& b, const Semiring& ring) {
  Scalar total = ring.zero();
  for (const auto& at : bang_atoms(b)) total = ring.add(total, at.weight);
  return sv_scalar(total);
}

SemValuePtr comonad_merge(const TypePtr& ta, const TypePtr& tb,
                          const SemValuePtr& a, const SemValuePtr& b,
                          const Semiring& ring) {
  std::vector<BangAtom> atoms;
  for (const auto& x : bang_atoms(a))
    for (const auto& y : bang_atoms(b))
      atoms.push_back({ring.mul(x.weight, y.weight),
                       sv_tensor({{ring.one(), x.atom, y.atom}})});
  return normalize_bang(ty_tensor(ta, tb), std::move(atoms), ring);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Combo {
  Scalar weight;
  std::map<std::string, SemValuePtr> bindings; // singleton bangs
};

constexpr size_t kComboCap = 1 << 16;

std::vector<Combo> atom_combos(const std::map<std::string, SemValuePtr>& intuit,
                               const Semiring& ring) {
  std::vector<Combo> out = {{ring.one(), {}}};
  for (const auto& [name, bval] : intuit) {
    std::vector<Combo> next;
    for (const auto& combo : out) {
      for (const auto& at : bang_atoms(bval)) {
        Combo c = combo;
        c.weight = ring.mul(c.weight, at.weight);
        c.bindings[name] = sv_bang({{ring.one(), at.atom}});
        next.push_back(std::move(c));
      }
      if (next.size() > kComboCap)
        throw SemError("formal-sum environment too large to decompose");
    }
    out = std::move(next);
  }
  return out;
}

// Product of the total weights of all intuitionistic bindings except `keep`.
Scalar erase_others(const std::map<std::string, SemValuePtr>& intuit,
                    const std::string& keep, const Semiring& ring) {
  Scalar acc = ring.one();
  for (const auto& [name, bval] : intuit) {
    if (name == keep) continue;
    Scalar total = ring.zero();
    for (const auto& at : bang_atoms(bval)) total = ring.add(total, at.weight);
    acc = ring.mul(acc, total);
  }
  return acc;
}

struct Evaluator {
  const Semiring& ring;
  BangElimMode mode;

  SemValuePtr run(const TypedPtr& n, const SemEnv& env) {
    const Term& t = *n->term;
    switch (t.tag) {
      case TermTag::Var: {
        if (auto it = env.linear.find(t.name); it != env.linear.end())
          return vsmul(n->type, erase_others(env.intuit, "", ring), it->second,
                       ring);
        auto it = env.intuit.find(t.name);
        if (it == env.intuit.end())
          throw SemError("unbound variable in evaluation: " + t.name);
        SemValuePtr v = comonad_eps(n->type, it->second, ring);
        return vsmul(n->type, erase_others(env.intuit, t.name, ring), v, ring);
      }
      case TermTag::Sum:
        return vadd(n->type, run(n->kids[0], env), run(n->kids[1], env), ring);
      case TermTag::Smul:
        return vsmul(n->type, t.scalar, run(n->kids[0], env), ring);
      case TermTag::Star:
        return sv_scalar(ring.mul(t.scalar, erase_others(env.intuit, "", ring)));
      case TermTag::TopIntro:
        return sv_zero();
      case TermTag::ElimZero:
        run(n->kids[0], env); // shape validation only; the zero map follows
        return sv_zero();
      case TermTag::Lam: {
        SemEnv captured = env;
        TypedPtr body = n->kids[0];
        std::string binder = t.name;
        const Semiring* r = &ring;
        BangElimMode m = mode;
        return sv_fun([captured, body, binder, r, m](const SemValuePtr& arg) {
          Evaluator ev{*r, m};
          SemEnv e = captured;
          e.linear[binder] = arg;
          return ev.run(body, e);
        });
      }
      case TermTag::App:
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr f = run(n->kids[0], e);
          SemValuePtr a = run(n->kids[1], e);
          return sem_apply(n->kids[0]->type, f, a);
        });
      case TermTag::ElimOne:
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr s = run(n->kids[0], e);
          SemValuePtr u = run(n->kids[1], e);
          if (s->kind == SemValue::Kind::Zero)
            return vzero(n->type);
          if (s->kind != SemValue::Kind::Scalar)
            throw SemError("let1 scrutinee did not evaluate to a scalar");
          return vsmul(n->type, s->scalar, u, ring);
        });
      case TermTag::Tens:
        return combine(n, env, [&](const SemEnv& e) {
          return sv_tensor({{ring.one(), run(n->kids[0], e),
                             run(n->kids[1], e)}});
        });
      case TermTag::ElimTens:
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr s = run(n->kids[0], e);
          SemValuePtr acc = sv_zero();
          for (const auto& at : tensor_atoms(s)) {
            SemEnv e2 = e;
            e2.linear[t.name] = at.left;
            e2.linear[t.name2] = at.right;
            acc = vadd(n->type, acc,
                       vsmul(n->type, at.weight, run(n->kids[1], e2), ring),
                       ring);
          }
          return acc;
        });
      case TermTag::Pair:
        return sv_pair(run(n->kids[0], env), run(n->kids[1], env));
      case TermTag::ElimWith1:
      case TermTag::ElimWith2: {
        bool first = t.tag == TermTag::ElimWith1;
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr s = run(n->kids[0], e);
          SemValuePtr comp;
          if (s->kind == SemValue::Kind::Zero) comp = sv_zero();
          else if (s->kind == SemValue::Kind::Pair) comp = first ? s->fst : s->snd;
          else throw SemError("projection scrutinee is not a pair");
          SemEnv e2 = e;
          e2.linear[t.name] = comp;
          return run(n->kids[1], e2);
        });
      }
      case TermTag::Inl:
        return sv_pair(run(n->kids[0], env), sv_zero());
      case TermTag::Inr:
        return sv_pair(sv_zero(), run(n->kids[0], env));
      case TermTag::ElimPlus:
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr s = run(n->kids[0], e);
          SemValuePtr z1 = sv_zero(), z2 = sv_zero();
          if (s->kind == SemValue::Kind::Pair) {
            z1 = s->fst;
            z2 = s->snd;
          } else if (s->kind != SemValue::Kind::Zero) {
            throw SemError("case scrutinee is not a biproduct element");
          }
          SemEnv e1 = e, e2 = e;
          e1.linear[t.name] = z1;
          e2.linear[t.name2] = z2;
          return vadd(n->type, run(n->kids[1], e1), run(n->kids[2], e2), ring);
        });
      case TermTag::Bang: {
        auto combos = atom_combos(env.intuit, ring);
        std::vector<BangAtom> atoms;
        for (const auto& c : combos) {
          SemEnv e{c.bindings, {}};
          atoms.push_back({c.weight, run(n->kids[0], e)});
        }
        return normalize_bang(n->kids[0]->type, std::move(atoms), ring);
      }
      case TermTag::ElimBang:
        return combine(n, env, [&](const SemEnv& e) {
          SemValuePtr s = run(n->kids[0], e);
          if (mode == BangElimMode::Lazy) {
            SemEnv e2 = e;
            e2.intuit[t.name] = s;
            return run(n->kids[1], e2);
          }
          SemValuePtr acc = sv_zero();
          for (const auto& at : bang_atoms(s)) {
            SemEnv e2 = e;
            e2.intuit[t.name] = sv_bang({{ring.one(), at.atom}});
            acc = vadd(n->type, acc,
                       vsmul(n->type, at.weight, run(n->kids[1], e2), ring),
                       ring);
          }
          return acc;
        });
    }
    throw SemError("evaluation fell through");
  }

  // The generalized duplication of the banged context: decompose every
  // intuitionistic binding into atoms, evaluate per combination with
  // singleton bindings, and sum with the product weights.
  template <typename F>
  SemValuePtr combine(const TypedPtr& n, const SemEnv& env, F&& per_combo) {
    auto combos = atom_combos(env.intuit, ring);
    if (combos.size() == 1 && combos[0].weight.is_one()) {
      SemEnv e{combos[0].bindings, env.linear};
      return per_combo(e);
    }
    SemValuePtr acc = sv_zero();
    for (const auto& c : combos) {
      SemEnv e{c.bindings, env.linear};
      acc = vadd(n->type, acc, vsmul(n->type, c.weight, per_combo(e), ring),
                 ring);
    }
    return acc;
  }
};

} // namespace

SemValuePtr eval(const TypedPtr& node, const SemEnv& env, const Semiring& ring,
                 BangElimMode mode) {
  Evaluator ev{ring, mode};
  return ev.run(node, env);
}

SemValuePtr eval(const TermPtr& t, const Context& intuit,
                 const Context& linear, const SemEnv& env,
                 const Semiring& ring, BangElimMode mode) {
  auto typed = annotate(intuit, linear, t);
  if (!typed.ok())
    throw SemError("evaluation of ill-typed term: " + typed.error().str());
  return eval(*typed, env, ring, mode);
}

SemValuePtr eval_closed(const TermPtr& t, const Semiring& ring,
                        BangElimMode mode) {
  return eval(t, {}, {}, SemEnv{}, ring, mode);
}

// ---------------------------------------------------------------------------
// Soundness driver

namespace {

std::vector<SemValuePtr> linear_candidates(const TypePtr& ty,
                                           const Semiring& ring) {
  if (!is_enumerable(ty)) return {};
  std::vector<SemValuePtr> basis;
  build_basis(ty, ring, basis);
  if (basis.empty()) return {sv_zero()};
  return basis;
}

std::vector<SemValuePtr> intuit_candidates(const TypePtr& ty,
                                           const Semiring& ring) {
  if (!is_enumerable(ty)) return {};
  std::vector<SemValuePtr> basis;
  build_basis(ty, ring, basis);
  basis.push_back(sv_zero()); // the zero element is a valid atom
  std::vector<SemValuePtr> out;
  for (const auto& b : basis) out.push_back(sv_bang({{ring.one(), b}}));
  out.push_back(sv_bang({{ring.from_int(2), basis[0]}}));
  if (basis.size() >= 2)
    out.push_back(
        sv_bang({{ring.one(), basis[0]}, {ring.one(), basis[1]}}));
  return out;
}

} // namespace

SoundnessReport soundness_check(const TermPtr& t, const Context& intuit,
                                const Context& linear, const RedexSite& site,
                                const Semiring& ring, uint64_t seed,
                                BangElimMode mode) {
  SoundnessReport rep;
  TermPtr reduct = step_at(t, site);
  auto tl = annotate(intuit, linear, t);
  auto tr = annotate(intuit, linear, reduct);
  if (!tl.ok()) throw SemError("soundness_check on ill-typed term");
  if (!tr.ok()) {
    rep.passed = false;
    rep.failure = "reduct does not typecheck: " + tr.error().str();
    return rep;
  }
  TypePtr ty = type_join((*tl)->type, (*tr)->type);
  if (!ty) {
    rep.passed = false;
    rep.failure = "reduct changes the type";
    return rep;
  }

  // Environment candidates per variable.
  std::vector<std::pair<std::string, std::vector<SemValuePtr>>> lin_c, int_c;
  for (const auto& b : linear) {
    auto c = linear_candidates(b.type, ring);
    if (c.empty()) {
      rep.envs_skipped++;
      return rep;
    }
    lin_c.push_back({b.name, std::move(c)});
  }
  for (const auto& b : intuit) {
    auto c = intuit_candidates(b.type, ring);
    if (c.empty()) {
      rep.envs_skipped++;
      return rep;
    }
    int_c.push_back({b.name, std::move(c)});
  }

  size_t total = 1;
  for (const auto& [_, c] : lin_c) total *= c.size();
  for (const auto& [_, c] : int_c) total *= c.size();
  constexpr size_t kMaxEnvs = 48;
  Rng rng(seed);

  bool use_contexts = !is_decidable(ty);
  std::vector<ElimContext> ctxs;
  if (use_contexts) {
    if (!linear.empty() || !intuit.empty()) {
      // Open term with an undecidable result type: out of scope.
      rep.envs_skipped++;
      return rep;
    }
    ctxs = enum_contexts(ty, 2, 6, seed, ring, 24);
  }

  for (size_t it = 0; it < std::min(total, kMaxEnvs); ++it) {
    size_t index = total <= kMaxEnvs ? it : rng.below(total);
    SemEnv env;
    size_t rem = index;
    for (const auto& [name, c] : lin_c) {
      env.linear[name] = c[rem % c.size()];
      rem /= c.size();
    }
    for (const auto& [name, c] : int_c) {
      env.intuit[name] = c[rem % c.size()];
      rem /= c.size();
    }
    if (use_contexts) {
      for (const ElimContext& k : ctxs) {
        SemValuePtr lv = eval_closed(k.plug(t), ring, mode);
        SemValuePtr rv = eval_closed(k.plug(reduct), ring, mode);
        auto eq = sem_eq(ty_one(), lv, rv, ring);
        if (!eq || !*eq) {
          rep.passed = false;
          rep.failure = "context observation differs under " +
                        print_term(k.as_term());
          return rep;
        }
      }
      rep.envs_checked++;
      continue;
    }
    SemValuePtr lv = eval(*tl, env, ring, mode);
    SemValuePtr rv = eval(*tr, env, ring, mode);
    auto eq = sem_eq(ty, lv, rv, ring);
    if (!eq) {
      rep.envs_skipped++;
      continue;
    }
    if (!*eq) {
      rep.passed = false;
      rep.failure = "denotations differ after rule " +
                    std::string(rule_name(site.rule));
      return rep;
    }
    rep.envs_checked++;
  }
  return rep;
}

} // namespace oclam
