#include "oclam/semiring.hpp"

#include <cctype>

namespace oclam {

namespace {

mpq_class canon(mpq_class q) {
  q.canonicalize();
  return q;
}

} // namespace

Scalar Scalar::trivial() {
  Scalar s;
  s.id_ = SemiringId::Trivial;
  return s;
}

Scalar Scalar::nat(mpz_class n) {
  if (n < 0) throw ScalarError("natural scalar cannot be negative");
  Scalar s;
  s.id_ = SemiringId::Nat;
  s.n_ = std::move(n);
  return s;
}

Scalar Scalar::rat(mpq_class q) {
  Scalar s;
  s.id_ = SemiringId::Rat;
  s.re_ = canon(std::move(q));
  return s;
}

Scalar Scalar::crat(mpq_class re, mpq_class im) {
  Scalar s;
  s.id_ = SemiringId::CRat;
  s.re_ = canon(std::move(re));
  s.im_ = canon(std::move(im));
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (id_ != o.id_) return false;
  switch (id_) {
    case SemiringId::Trivial: return true;
    case SemiringId::Nat: return n_ == o.n_;
    case SemiringId::Rat: return re_ == o.re_;
    case SemiringId::CRat: return re_ == o.re_ && im_ == o.im_;
  }
  return false;
}

int Scalar::compare(const Scalar& o) const {
  if (id_ != o.id_) return id_ < o.id_ ? -1 : 1;
  switch (id_) {
    case SemiringId::Trivial: return 0;
    case SemiringId::Nat: return cmp(n_, o.n_);
    case SemiringId::Rat: return cmp(re_, o.re_);
    case SemiringId::CRat: {
      int c = cmp(re_, o.re_);
      return c != 0 ? c : cmp(im_, o.im_);
    }
  }
  return 0;
}

bool Scalar::is_zero() const {
  switch (id_) {
    case SemiringId::Trivial: return false; // single element acts as 0 and 1
    case SemiringId::Nat: return n_ == 0;
    case SemiringId::Rat: return re_ == 0;
    case SemiringId::CRat: return re_ == 0 && im_ == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (id_) {
    case SemiringId::Trivial: return true;
    case SemiringId::Nat: return n_ == 1;
    case SemiringId::Rat: return re_ == 1;
    case SemiringId::CRat: return re_ == 1 && im_ == 0;
  }
  return false;
}

std::string Scalar::str() const {
  switch (id_) {
    case SemiringId::Trivial: return "@";
    case SemiringId::Nat: return n_.get_str();
    case SemiringId::Rat: return re_.get_str();
    case SemiringId::CRat:
      return "(" + re_.get_str() + ", " + im_.get_str() + ")";
  }
  return "?";
}

std::string_view Semiring::name() const {
  switch (id_) {
    case SemiringId::Trivial: return "trivial";
    case SemiringId::Nat: return "nat";
    case SemiringId::Rat: return "rat";
    case SemiringId::CRat: return "crat";
  }
  return "?";
}

void Semiring::require(const Scalar& a) const {
  if (a.ring() != id_)
    throw ScalarError("scalar of semiring mismatch: expected " +
                      std::string(name()));
}

Scalar Semiring::zero() const {
  switch (id_) {
    case SemiringId::Trivial: return Scalar::trivial();
    case SemiringId::Nat: return Scalar::nat(0);
    case SemiringId::Rat: return Scalar::rat(0);
    case SemiringId::CRat: return Scalar::crat(0, 0);
  }
  return {};
}

Scalar Semiring::one() const {
  switch (id_) {
    case SemiringId::Trivial: return Scalar::trivial();
    case SemiringId::Nat: return Scalar::nat(1);
    case SemiringId::Rat: return Scalar::rat(1);
    case SemiringId::CRat: return Scalar::crat(1, 0);
  }
  return {};
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  switch (id_) {
    case SemiringId::Trivial: return Scalar::trivial();
    case SemiringId::Nat: return Scalar::nat(a.nat_value() + b.nat_value());
    case SemiringId::Rat: return Scalar::rat(a.rat_value() + b.rat_value());
    case SemiringId::CRat:
      return Scalar::crat(a.re() + b.re(), a.im() + b.im());
  }
  return {};
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  switch (id_) {
    case SemiringId::Trivial: return Scalar::trivial();
    case SemiringId::Nat: return Scalar::nat(a.nat_value() * b.nat_value());
    case SemiringId::Rat: return Scalar::rat(a.rat_value() * b.rat_value());
    case SemiringId::CRat:
      // (x + iy)(u + iv) = (xu - yv) + i(xv + yu)
      return Scalar::crat(a.re() * b.re() - a.im() * b.im(),
                          a.re() * b.im() + a.im() * b.re());
  }
  return {};
}

Scalar Semiring::from_int(long v) const {
  switch (id_) {
    case SemiringId::Trivial: return Scalar::trivial();
    case SemiringId::Nat:
      if (v < 0) throw ScalarError("negative natural");
      return Scalar::nat(v);
    case SemiringId::Rat: return Scalar::rat(v);
    case SemiringId::CRat: return Scalar::crat(v, 0);
  }
  return {};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [-] digits [/ digits], canonicalized with nonzero denominator.
mpq_class parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
    s = trim(s);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!is_digits(num) || !is_digits(den))
    throw ScalarError("malformed rational literal: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ScalarError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

} // namespace

Scalar Semiring::parse(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.empty()) throw ScalarError("empty scalar literal");
  switch (id_) {
    case SemiringId::Trivial:
      if (s == "@") return Scalar::trivial();
      throw ScalarError("trivial semiring literal must be '@', got '" +
                        std::string(s) + "'");
    case SemiringId::Nat:
      if (!is_digits(s))
        throw ScalarError("natural literal must be digits, got '" +
                          std::string(s) + "'");
      return Scalar::nat(mpz_class(std::string(s), 10));
    case SemiringId::Rat: return Scalar::rat(parse_rat(s));
    case SemiringId::CRat: {
      if (s.front() == '(') {
        if (s.back() != ')')
          throw ScalarError("unterminated complex literal '" + std::string(s) + "'");
        std::string_view body = s.substr(1, s.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string_view::npos)
          throw ScalarError("complex literal needs '(re, im)', got '" +
                            std::string(s) + "'");
        return Scalar::crat(parse_rat(body.substr(0, comma)),
                            parse_rat(body.substr(comma + 1)));
      }
      // Bare rational shorthand for a real value.
      return Scalar::crat(parse_rat(s), 0);
    }
  }
  throw ScalarError("unknown semiring");
}

const Semiring& Semiring::of(SemiringId id) {
  switch (id) {
    case SemiringId::Trivial: return trivial();
    case SemiringId::Nat: return nat();
    case SemiringId::Rat: return rat();
    case SemiringId::CRat: return crat();
  }
  return nat();
}

const Semiring& Semiring::trivial() {
  static const Semiring s(SemiringId::Trivial);
  return s;
}
const Semiring& Semiring::nat() {
  static const Semiring s(SemiringId::Nat);
  return s;
}
const Semiring& Semiring::rat() {
  static const Semiring s(SemiringId::Rat);
  return s;
}
const Semiring& Semiring::crat() {
  static const Semiring s(SemiringId::CRat);
  return s;
}

const Semiring& Semiring::by_name(std::string_view name) {
  if (name == "trivial") return trivial();
  if (name == "nat") return nat();
  if (name == "rat") return rat();
  if (name == "crat") return crat();
  throw ScalarError("unknown semiring '" + std::string(name) + "'");
}

} // namespace oclam
