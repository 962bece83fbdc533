#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace oclam {

// Scalars live in one of four commutative semirings, all with exact
// arithmetic: the one-point semiring, arbitrary-precision naturals,
// rationals, and Gaussian rationals (pairs of rationals re + i*im).
enum class SemiringId { Trivial, Nat, Rat, CRat };

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar {
public:
  Scalar() : id_(SemiringId::Trivial) {}

  static Scalar trivial();
  static Scalar nat(mpz_class n);
  static Scalar rat(mpq_class q);
  static Scalar crat(mpq_class re, mpq_class im);

  SemiringId ring() const { return id_; }

  const mpz_class& nat_value() const { return n_; }
  const mpq_class& rat_value() const { return re_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order used only to sort canonical forms; within one semiring it is
  // numeric (lexicographic on (re, im) for the Gaussian rationals).
  int compare(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return compare(o) < 0; }

  bool is_zero() const;
  bool is_one() const;

  // Literal in the semiring's codec: "@", "12", "-3/4", "(1/2, -1)".
  std::string str() const;

private:
  SemiringId id_;
  mpz_class n_;       // Nat
  mpq_class re_, im_; // Rat uses re_; CRat uses both
};

class Semiring {
public:
  explicit Semiring(SemiringId id) : id_(id) {}

  SemiringId id() const { return id_; }
  std::string_view name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;

  // Scalar from a small machine integer, e.g. for 0/1 basis vectors.
  // Negative values are rejected for Nat.
  Scalar from_int(long v) const;

  // Parses a literal in this semiring's codec. Throws ScalarError on
  // malformed input (including literals of a different semiring, such as a
  // negative natural).
  Scalar parse(std::string_view text) const;

  static const Semiring& of(SemiringId id);
  static const Semiring& trivial();
  static const Semiring& nat();
  static const Semiring& rat();
  static const Semiring& crat();
  // Lookup by CLI name; throws ScalarError for unknown names.
  static const Semiring& by_name(std::string_view name);

private:
  void require(const Scalar& a) const;
  SemiringId id_;
};

} // namespace oclam
