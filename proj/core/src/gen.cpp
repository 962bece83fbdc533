#include "oclam/gen.hpp"

#include <utility>

#include "oclam/syntax.hpp"

namespace oclam {

namespace {

bool consumable(const TypePtr& t);

// A closed inhabitant of T can be generated.
bool inhabitable(const TypePtr& t) {
  switch (t->tag) {
    case TypeTag::One:
    case TypeTag::Top:
      return true;
    case TypeTag::Zero:
    case TypeTag::Unknown:
      return false;
    case TypeTag::Tensor:
    case TypeTag::With:
      return inhabitable(t->a) && inhabitable(t->b);
    case TypeTag::Plus:
      return inhabitable(t->a) || inhabitable(t->b);
    case TypeTag::Bang:
      return inhabitable(t->a);
    case TypeTag::Lolli:
      return consumable(t->a) && inhabitable(t->b);
  }
  return false;
}

// A linear variable of type T can be fully consumed. Top fails: the checker
// gives unit an empty usage, so a Top-typed linear variable is stuck.
bool consumable(const TypePtr& t) {
  switch (t->tag) {
    case TypeTag::One:
    case TypeTag::Zero:
    case TypeTag::Bang:
      return true;
    case TypeTag::Top:
    case TypeTag::Unknown:
      return false;
    case TypeTag::Tensor:
      return consumable(t->a) && consumable(t->b);
    case TypeTag::With:
      return consumable(t->a) || consumable(t->b);
    case TypeTag::Plus:
      return consumable(t->a) && consumable(t->b);
    case TypeTag::Lolli:
      return inhabitable(t->a) && consumable(t->b);
  }
  return false;
}

} // namespace

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  ring_ = &Semiring::of(cfg_.semiring);
  if (cfg_.scalar_pool.empty()) {
    for (long v : {0L, 1L, 2L, 3L})
      cfg_.scalar_pool.push_back(ring_->from_int(
          cfg_.semiring == SemiringId::Trivial ? 0 : v));
  }
}

Scalar Generator::pick_scalar() {
  return cfg_.scalar_pool[rng_.below(cfg_.scalar_pool.size())];
}

namespace {

TypePtr gen_type_rec(Rng& rng, int depth, bool allow_bang) {
  // Leaf weights: One 6, Top 1, Zero 1.
  auto leaf = [&]() -> TypePtr {
    size_t r = rng.below(8);
    if (r < 6) return ty_one();
    return r == 6 ? ty_top() : ty_zero();
  };
  if (depth <= 0) return leaf();
  // Connective weights: leaf 4, -o 2, * 2, & 3, (+) 2, ! 2 (when allowed).
  size_t total = allow_bang ? 15 : 13;
  size_t r = rng.below(total);
  if (r < 4) return leaf();
  if (r < 6)
    return ty_lolli(gen_type_rec(rng, depth - 1, allow_bang),
                    gen_type_rec(rng, depth - 1, allow_bang));
  if (r < 8)
    return ty_tensor(gen_type_rec(rng, depth - 1, allow_bang),
                     gen_type_rec(rng, depth - 1, allow_bang));
  if (r < 11)
    return ty_with(gen_type_rec(rng, depth - 1, allow_bang),
                   gen_type_rec(rng, depth - 1, allow_bang));
  if (r < 13)
    return ty_plus(gen_type_rec(rng, depth - 1, allow_bang),
                   gen_type_rec(rng, depth - 1, allow_bang));
  return ty_bang(gen_type_rec(rng, depth - 1, allow_bang));
}

} // namespace

TypePtr Generator::gen_type() {
  return gen_type_rec(rng_, cfg_.type_depth, cfg_.allow_bang);
}

TypePtr Generator::gen_binder_type() {
  for (int tries = 0; tries < 16; ++tries) {
    TypePtr t = gen_type();
    if (consumable(t)) return t;
  }
  return ty_one();
}

// ---------------------------------------------------------------------------

struct GenImpl {
  Generator& g;
  Rng& rng;
  int depth = 0;
  // Total draw budget per gen_term call; bounds the backtracking, which
  // otherwise goes exponential on unsatisfiable subgoals. When it runs out,
  // generation degrades to the deterministic closer.
  int fuel = 2000;
  static constexpr int kMaxDepth = 200;
  static constexpr int kAttempts = 32;

  struct Guard {
    GenImpl& self;
    bool ok;
    explicit Guard(GenImpl& s) : self(s), ok(++s.depth <= kMaxDepth) {}
    ~Guard() { --self.depth; }
  };

  std::string fresh() { return "v" + std::to_string(g.fresh_counter_++); }

  using Pending = std::vector<std::pair<TermPtr, TypePtr>>;

  // Splits the linear context uniformly.
  std::pair<Context, Context> split(const Context& l) {
    Context a, b;
    for (const auto& x : l) (rng.chance(1, 2) ? a : b).push_back(x);
    return {a, b};
  }

  // Small canonical inhabitant; scalars drawn from the pool.
  std::optional<TermPtr> minimal(const TypePtr& a) {
    Guard guard(*this);
    if (!guard.ok) return std::nullopt;
    switch (a->tag) {
      case TypeTag::One: return mk_star(g.pick_scalar());
      case TypeTag::Top: return mk_top();
      case TypeTag::Zero:
      case TypeTag::Unknown: return std::nullopt;
      case TypeTag::With: {
        auto l = minimal(a->a), r = minimal(a->b);
        if (!l || !r) return std::nullopt;
        return mk_pair(*l, *r);
      }
      case TypeTag::Tensor: {
        auto l = minimal(a->a), r = minimal(a->b);
        if (!l || !r) return std::nullopt;
        return mk_tens(*l, *r);
      }
      case TypeTag::Plus: {
        bool left = inhabitable(a->a) && (!inhabitable(a->b) || rng.chance(1, 2));
        if (left) {
          auto v = minimal(a->a);
          if (v) return mk_inl(*v, a->b);
        }
        auto v = minimal(a->b);
        if (v) return mk_inr(*v, a->a);
        return std::nullopt;
      }
      case TypeTag::Bang: {
        auto v = minimal(a->a);
        if (!v) return std::nullopt;
        return mk_bang(*v);
      }
      case TypeTag::Lolli: {
        std::string x = fresh();
        auto body = consume_all({{mk_var(x), a->a}}, a->b);
        if (!body) return std::nullopt;
        return mk_lam(x, a->a, *body);
      }
    }
    return std::nullopt;
  }

  // Fully consumes every pending scrutinee, ending in a minimal inhabitant
  // of `target` (or an abort when a Zero shows up).
  std::optional<TermPtr> consume_all(Pending pending, const TypePtr& target) {
    Guard guard(*this);
    if (!guard.ok) return std::nullopt;
    if (pending.empty()) return minimal(target);

    // Zeros go last: an abort replaces the tail continuation.
    for (size_t i = 0; i + 1 < pending.size(); ++i)
      if (pending[i].second->tag == TypeTag::Zero)
        std::swap(pending[i], pending.back());

    auto [scrut, ty] = pending.back();
    pending.pop_back();
    switch (ty->tag) {
      case TypeTag::One: {
        auto rest = consume_all(std::move(pending), target);
        if (!rest) return std::nullopt;
        return mk_elim_one(scrut, *rest);
      }
      case TypeTag::Zero: {
        TermPtr out = mk_elim_zero(scrut);
        // Remaining pendings can only be further Zeros; application of one
        // wildcard to another consumes them all.
        for (auto& [s, t] : pending) {
          if (t->tag != TypeTag::Zero) return std::nullopt;
          out = mk_app(out, mk_elim_zero(s));
        }
        return out;
      }
      case TypeTag::Tensor: {
        std::string x = fresh(), y = fresh();
        pending.push_back({mk_var(x), ty->a});
        pending.push_back({mk_var(y), ty->b});
        auto body = consume_all(std::move(pending), target);
        if (!body) return std::nullopt;
        return mk_elim_tens(scrut, x, ty->a, y, ty->b, *body);
      }
      case TypeTag::With: {
        bool left = consumable(ty->a) && (!consumable(ty->b) || rng.chance(1, 2));
        std::string x = fresh();
        Pending copy = pending;
        copy.push_back({mk_var(x), left ? ty->a : ty->b});
        auto body = consume_all(std::move(copy), target);
        if (!body) return std::nullopt;
        return left ? mk_elim_with1(scrut, x, ty->a, *body)
                    : mk_elim_with2(scrut, x, ty->b, *body);
      }
      case TypeTag::Plus: {
        std::string x = fresh(), y = fresh();
        Pending lp = pending, rp = pending;
        lp.push_back({mk_var(x), ty->a});
        rp.push_back({mk_var(y), ty->b});
        auto lb = consume_all(std::move(lp), target);
        auto rb = consume_all(std::move(rp), target);
        if (!lb || !rb) return std::nullopt;
        return mk_elim_plus(scrut, x, ty->a, *lb, y, ty->b, *rb);
      }
      case TypeTag::Bang: {
        std::string x = fresh();
        auto body = consume_all(std::move(pending), target);
        if (!body) return std::nullopt;
        return mk_elim_bang(scrut, x, ty->a, *body);
      }
      case TypeTag::Lolli: {
        auto arg = minimal(ty->a);
        if (!arg) return std::nullopt;
        pending.push_back({mk_app(scrut, *arg), ty->b});
        return consume_all(std::move(pending), target);
      }
      case TypeTag::Top:
      case TypeTag::Unknown:
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<TermPtr> gen(const Context& intuit, const Context& linear,
                             const TypePtr& a, int size) {
    Guard guard(*this);
    if (!guard.ok) return std::nullopt;

    if (size <= 1 || fuel <= 0) return close_out(intuit, linear, a);

    for (int attempt = 0; attempt < kAttempts && fuel > 0; ++attempt) {
      --fuel;
      auto r = try_move(intuit, linear, a, size);
      if (r) return r;
    }
    return close_out(intuit, linear, a);
  }

  // Deterministic finisher: consume the whole linear context into a minimal
  // inhabitant.
  std::optional<TermPtr> close_out(const Context& intuit, const Context& linear,
                                   const TypePtr& a) {
    if (linear.empty()) {
      // Prefer an intuitionistic variable of the right type.
      for (const auto& b : intuit)
        if (type_eq(b.type, a) && rng.chance(1, 3)) return mk_var(b.name);
      return minimal(a);
    }
    if (linear.size() == 1 && type_eq(linear[0].type, a))
      return mk_var(linear[0].name);
    Pending pending;
    for (const auto& b : linear) pending.push_back({mk_var(b.name), b.type});
    return consume_all(std::move(pending), a);
  }

  std::optional<TermPtr> try_move(const Context& intuit, const Context& linear,
                                  const TypePtr& a, int size) {
    // Weighted move table; inapplicable moves fall through to the next draw.
    switch (rng.below(16)) {
      case 0: // linear axiom
        if (linear.size() == 1 && type_eq(linear[0].type, a))
          return mk_var(linear[0].name);
        return std::nullopt;
      case 1: // intuitionistic axiom
        if (linear.empty())
          for (const auto& b : intuit)
            if (type_eq(b.type, a)) return mk_var(b.name);
        return std::nullopt;
      case 2: // scalar star / unit
        if (!linear.empty()) return std::nullopt;
        if (a->tag == TypeTag::One) return mk_star(g.pick_scalar());
        if (a->tag == TypeTag::Top) return mk_top();
        return std::nullopt;
      case 3: { // sum
        auto l = gen(intuit, linear, a, size / 2);
        if (!l) return std::nullopt;
        auto r = gen(intuit, linear, a, size / 2);
        if (!r) return std::nullopt;
        return mk_sum(*l, *r);
      }
      case 4: { // scalar product
        auto t = gen(intuit, linear, a, size - 1);
        if (!t) return std::nullopt;
        return mk_smul(g.pick_scalar(), *t);
      }
      case 5:
      case 6: { // introduction of the target connective
        switch (a->tag) {
          case TypeTag::Lolli: {
            std::string x = fresh();
            auto body = gen(intuit, ctx_extend(linear, x, a->a), a->b, size - 1);
            if (!body) return std::nullopt;
            return mk_lam(x, a->a, *body);
          }
          case TypeTag::Tensor: {
            auto [l1, l2] = split(linear);
            auto l = gen(intuit, l1, a->a, size / 2);
            if (!l) return std::nullopt;
            auto r = gen(intuit, l2, a->b, size / 2);
            if (!r) return std::nullopt;
            return mk_tens(*l, *r);
          }
          case TypeTag::With: {
            auto l = gen(intuit, linear, a->a, size / 2);
            if (!l) return std::nullopt;
            auto r = gen(intuit, linear, a->b, size / 2);
            if (!r) return std::nullopt;
            return mk_pair(*l, *r);
          }
          case TypeTag::Plus: {
            bool left = inhabitable(a->a) &&
                        (!inhabitable(a->b) || rng.chance(1, 2));
            if (left) {
              auto v = gen(intuit, linear, a->a, size - 1);
              if (!v) return std::nullopt;
              return mk_inl(*v, a->b);
            }
            auto v = gen(intuit, linear, a->b, size - 1);
            if (!v) return std::nullopt;
            return mk_inr(*v, a->a);
          }
          case TypeTag::Bang: {
            if (!linear.empty()) return std::nullopt;
            auto v = gen(intuit, {}, a->a, size - 1);
            if (!v) return std::nullopt;
            return mk_bang(*v);
          }
          default:
            return std::nullopt;
        }
      }
      case 7:
      case 8:
      case 9:
      case 10: { // eliminate a linear context variable
        if (linear.empty()) return std::nullopt;
        size_t i = rng.below(linear.size());
        Context rest = linear;
        rest.erase(rest.begin() + static_cast<long>(i));
        return gen_elim(mk_var(linear[i].name), linear[i].type, intuit, rest,
                        a, size - 1);
      }
      case 11: { // eliminate an intuitionistic variable
        if (intuit.empty()) return std::nullopt;
        size_t i = rng.below(intuit.size());
        return gen_elim(mk_var(intuit[i].name), intuit[i].type, intuit, linear,
                        a, size - 1);
      }
      case 12:
      case 13: { // fresh redex: introduce then eliminate
        TypePtr d = g.gen_binder_type();
        auto [l1, l2] = split(linear);
        auto scrut = gen(intuit, l1, d, size / 2);
        if (!scrut) return std::nullopt;
        return gen_elim(*scrut, d, intuit, l2, a, size / 2);
      }
      default: // finish early
        return close_out(intuit, linear, a);
    }
  }

  std::optional<TermPtr> gen_elim(TermPtr scrut, const TypePtr& b,
                                  const Context& intuit, const Context& linear,
                                  const TypePtr& a, int size) {
    Guard guard(*this);
    if (!guard.ok) return std::nullopt;
    if (type_eq(b, a) && linear.empty() && rng.chance(1, 3)) return scrut;
    switch (b->tag) {
      case TypeTag::One: {
        auto u = gen(intuit, linear, a, size - 1);
        if (!u) return std::nullopt;
        return mk_elim_one(scrut, *u);
      }
      case TypeTag::Zero: {
        if (linear.empty()) return mk_elim_zero(scrut);
        // Fold the rest of the context into a One first.
        auto u = gen(intuit, linear, ty_one(), size - 1);
        if (!u) return std::nullopt;
        return mk_elim_one(*u, mk_elim_zero(scrut));
      }
      case TypeTag::Tensor: {
        std::string x = fresh(), y = fresh();
        Context inner = ctx_extend(ctx_extend(linear, x, b->a), y, b->b);
        auto u = gen(intuit, inner, a, size - 1);
        if (!u) return std::nullopt;
        return mk_elim_tens(scrut, x, b->a, y, b->b, *u);
      }
      case TypeTag::With: {
        bool left = consumable(b->a) && (!consumable(b->b) || rng.chance(1, 2));
        std::string x = fresh();
        auto u = gen(intuit, ctx_extend(linear, x, left ? b->a : b->b), a,
                     size - 1);
        if (!u) return std::nullopt;
        return left ? mk_elim_with1(scrut, x, b->a, *u)
                    : mk_elim_with2(scrut, x, b->b, *u);
      }
      case TypeTag::Plus: {
        std::string x = fresh(), y = fresh();
        auto u = gen(intuit, ctx_extend(linear, x, b->a), a, size / 2);
        if (!u) return std::nullopt;
        auto v = gen(intuit, ctx_extend(linear, y, b->b), a, size / 2);
        if (!v) return std::nullopt;
        return mk_elim_plus(scrut, x, b->a, *u, y, b->b, *v);
      }
      case TypeTag::Bang: {
        std::string x = fresh();
        auto u = gen(ctx_extend(intuit, x, b->a), linear, a, size - 1);
        if (!u) return std::nullopt;
        return mk_elim_bang(scrut, x, b->a, *u);
      }
      case TypeTag::Lolli: {
        auto [l1, l2] = split(linear);
        auto arg = gen(intuit, l1, b->a, size / 2);
        if (!arg) return std::nullopt;
        return gen_elim(mk_app(scrut, *arg), b->b, intuit, l2, a, size / 2);
      }
      case TypeTag::Top:
      case TypeTag::Unknown:
        return std::nullopt;
    }
    return std::nullopt;
  }
};

std::optional<TermPtr> Generator::gen_term(const Context& intuit,
                                           const Context& linear,
                                           const TypePtr& a) {
  GenImpl impl{*this, rng_};
  return impl.gen(intuit, linear, a, cfg_.max_size);
}

std::vector<TermPtr> shrink(const TermPtr& t) {
  std::vector<TermPtr> out;
  for (const auto& k : t->kids) out.push_back(k);
  switch (t->tag) {
    case TermTag::Star: {
      // star(0) and star(1) are already minimal
      if (t->scalar.is_zero() || t->scalar.is_one()) break;
      const Semiring& ring = Semiring::of(t->scalar.ring());
      out.push_back(mk_star(ring.zero()));
      out.push_back(mk_star(ring.one()));
      break;
    }
    case TermTag::Smul: {
      const Semiring& ring = Semiring::of(t->scalar.ring());
      if (!t->scalar.is_one())
        out.push_back(mk_smul(ring.one(), t->kids[0]));
      break;
    }
    default:
      break;
  }
  return out;
}

} // namespace oclam
