#include "oclam/encode.hpp"

#include "oclam/syntax.hpp"

namespace oclam {

bool is_vector_type(const TypePtr& a) {
  switch (a->tag) {
    case TypeTag::One: return true;
    case TypeTag::With: return is_vector_type(a->a) && is_vector_type(a->b);
    default: return false;
  }
}

int dim(const TypePtr& a) {
  switch (a->tag) {
    case TypeTag::One: return 1;
    case TypeTag::With: return dim(a->a) + dim(a->b);
    default: throw EncodeError("not a vector type: " + print_type(a));
  }
}

TermPtr zero_term(const TypePtr& a, const Semiring& ring) {
  switch (a->tag) {
    case TypeTag::One: return mk_star(ring.zero());
    case TypeTag::With:
      return mk_pair(zero_term(a->a, ring), zero_term(a->b, ring));
    default: throw EncodeError("not a vector type: " + print_type(a));
  }
}

namespace {

TermPtr vec_to_term_rec(const std::vector<Scalar>& v, size_t lo, size_t hi,
                        const TypePtr& a) {
  if (a->tag == TypeTag::One) return mk_star(v[lo]);
  size_t d1 = static_cast<size_t>(dim(a->a));
  return mk_pair(vec_to_term_rec(v, lo, lo + d1, a->a),
                 vec_to_term_rec(v, lo + d1, hi, a->b));
}

void read_entries(const TermPtr& t, const TypePtr& a,
                  std::vector<Scalar>& out) {
  if (a->tag == TypeTag::One) {
    if (t->tag != TermTag::Star)
      throw EncodeError("normal form at I is not star(..): " + print_term(t));
    out.push_back(t->scalar);
    return;
  }
  if (t->tag != TermTag::Pair)
    throw EncodeError("normal form at " + print_type(a) +
                      " is not a pair: " + print_term(t));
  read_entries(t->kids[0], a->a, out);
  read_entries(t->kids[1], a->b, out);
}

} // namespace

TermPtr vec_to_term(const Vector& v, const TypePtr& a) {
  if (!is_vector_type(a))
    throw EncodeError("not a vector type: " + print_type(a));
  if (static_cast<size_t>(dim(a)) != v.entries.size())
    throw EncodeError("dimension mismatch: type " + print_type(a) + " has " +
                      std::to_string(dim(a)) + " slots, vector has " +
                      std::to_string(v.entries.size()));
  return vec_to_term_rec(v.entries, 0, v.entries.size(), a);
}

Vector term_to_vec(const TermPtr& t, const TypePtr& a, uint64_t fuel) {
  if (!is_vector_type(a))
    throw EncodeError("not a vector type: " + print_type(a));
  NormalizeResult nf = normalize(t, Strategy::leftmost_outermost(), fuel);
  if (nf.fuel_exhausted)
    throw EncodeError("fuel exhausted while normalizing vector term");
  Vector out;
  read_entries(nf.term, a, out.entries);
  return out;
}

namespace {

// Column paths: leaves of the with-tree of A in left-to-right order, each a
// sequence of projections (true = first component).
void column_paths(const TypePtr& a, std::vector<bool>& prefix,
                  std::vector<std::pair<std::vector<bool>, TypePtr>>& out) {
  if (a->tag == TypeTag::One) {
    out.push_back({prefix, a});
    return;
  }
  prefix.push_back(true);
  column_paths(a->a, prefix, out);
  prefix.back() = false;
  column_paths(a->b, prefix, out);
  prefix.pop_back();
}

// Navigates x along `path` with projections and at the I leaf scales the
// column literal: fst(x, y. snd(y, z. ... let1(w, col) ...)).
TermPtr projection_chain(const std::string& var, const TypePtr& a,
                         const std::vector<bool>& path, size_t i,
                         const TermPtr& column) {
  if (i == path.size())
    return mk_elim_one(mk_var(var), column);
  std::string next = var + "_" + std::to_string(i + 1);
  TermPtr body = projection_chain(next, path[i] ? a->a : a->b, path, i + 1,
                                  column);
  return path[i] ? mk_elim_with1(mk_var(var), next, a->a, body)
                 : mk_elim_with2(mk_var(var), next, a->b, body);
}

} // namespace

TermPtr matrix_to_term(const Matrix& m, const TypePtr& a, const TypePtr& b) {
  if (!is_vector_type(a) || !is_vector_type(b))
    throw EncodeError("matrix domain/codomain must be vector types");
  if (static_cast<size_t>(dim(a)) != m.cols ||
      static_cast<size_t>(dim(b)) != m.rows)
    throw EncodeError("matrix shape does not match dim(" + print_type(a) +
                      ") x dim(" + print_type(b) + ")");
  std::vector<std::pair<std::vector<bool>, TypePtr>> cols;
  std::vector<bool> prefix;
  column_paths(a, prefix, cols);

  const std::string x = "x";
  TermPtr body;
  for (size_t j = 0; j < m.cols; ++j) {
    Vector column;
    for (size_t i = 0; i < m.rows; ++i) column.entries.push_back(m.at(i, j));
    TermPtr summand =
        projection_chain(x, a, cols[j].first, 0, vec_to_term(column, b));
    body = body ? mk_sum(body, summand) : summand;
  }
  return mk_lam(x, a, body);
}

Matrix term_to_matrix(const TermPtr& t, const TypePtr& a, const TypePtr& b,
                      const Semiring& ring, uint64_t fuel) {
  size_t m = static_cast<size_t>(dim(a));
  size_t n = static_cast<size_t>(dim(b));
  Matrix out;
  out.rows = n;
  out.cols = m;
  out.entries.assign(n * m, ring.zero());
  for (size_t j = 0; j < m; ++j) {
    Vector basis;
    for (size_t k = 0; k < m; ++k)
      basis.entries.push_back(k == j ? ring.one() : ring.zero());
    Vector col = term_to_vec(mk_app(t, vec_to_term(basis, a)), b, fuel);
    for (size_t i = 0; i < n; ++i) out.at(i, j) = col.entries[i];
  }
  return out;
}

Vector mat_vec_mul(const Matrix& m, const Vector& v, const Semiring& ring) {
  if (v.entries.size() != m.cols) throw EncodeError("shape mismatch");
  Vector out;
  for (size_t i = 0; i < m.rows; ++i) {
    Scalar acc = ring.zero();
    for (size_t j = 0; j < m.cols; ++j)
      acc = ring.add(acc, ring.mul(m.at(i, j), v.entries[j]));
    out.entries.push_back(acc);
  }
  return out;
}

Matrix mat_mul(const Matrix& m, const Matrix& n, const Semiring& ring) {
  if (m.cols != n.rows) throw EncodeError("shape mismatch");
  Matrix out;
  out.rows = m.rows;
  out.cols = n.cols;
  out.entries.assign(out.rows * out.cols, ring.zero());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < n.cols; ++j) {
      Scalar acc = ring.zero();
      for (size_t k = 0; k < m.cols; ++k)
        acc = ring.add(acc, ring.mul(m.at(i, k), n.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

} // namespace oclam
