#pragma once

#include <stdexcept>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/reduce.hpp"

namespace oclam {

struct EncodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column vector over a semiring; entries in the order of the type's
// with-tree leaves.
struct Vector {
  std::vector<Scalar> entries;

  bool operator==(const Vector& o) const { return entries == o.entries; }
};

// Row-major n x m matrix.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Scalar> entries;

  const Scalar& at(size_t i, size_t j) const { return entries[i * cols + j]; }
  Scalar& at(size_t i, size_t j) { return entries[i * cols + j]; }
  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// Vector types are built from I and & only.
bool is_vector_type(const TypePtr& a);

// Number of I leaves; requires is_vector_type.
int dim(const TypePtr& a);

// The all-zero inhabitant: star(0) at I, pairs of zeros elsewhere.
TermPtr zero_term(const TypePtr& a, const Semiring& ring);

// Closed irreducible proof-term for a vector; the block split follows the
// with-structure of A.
TermPtr vec_to_term(const Vector& v, const TypePtr& a);

// Normalizes (leftmost-outermost) and reads the entries structurally.
// Throws EncodeError on fuel exhaustion or a shape violation.
Vector term_to_vec(const TermPtr& t, const TypePtr& a, uint64_t fuel = 100000);

// Closed proof-term of A -o B applying M; one projection chain per column,
// addressed by its path in the with-tree of A.
TermPtr matrix_to_term(const Matrix& m, const TypePtr& a, const TypePtr& b);

// Reads the matrix of a closed term of A -o B column by column by applying
// it to basis vectors.
Matrix term_to_matrix(const TermPtr& t, const TypePtr& a, const TypePtr& b,
                      const Semiring& ring, uint64_t fuel = 100000);

Vector mat_vec_mul(const Matrix& m, const Vector& v, const Semiring& ring);
Matrix mat_mul(const Matrix& m, const Matrix& n, const Semiring& ring);

} // namespace oclam
