#pragma once

#include <string>

#include "oclam/parse.hpp"
#include "oclam/syntax.hpp"
#include "oclam/typecheck.hpp"

namespace oclam::test {

inline TermPtr pt(const std::string& s, const Semiring& ring = Semiring::nat()) {
  return parse_term(s, ring);
}

inline TypePtr ty(const std::string& s) { return parse_type(s); }

inline Scalar n(long v) { return Semiring::nat().from_int(v); }
inline Scalar q(long num, long den = 1) {
  return Scalar::rat(mpq_class(num, den));
}

} // namespace oclam::test
