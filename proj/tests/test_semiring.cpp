#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oclam/semiring.hpp"

using namespace oclam;

namespace {

// Deterministic pool of scalars per instance for the law checks.
std::vector<Scalar> pool(const Semiring& s) {
  switch (s.id()) {
    case SemiringId::Trivial:
      return {Scalar::trivial()};
    case SemiringId::Nat: {
      std::vector<Scalar> out;
      for (long v : {0L, 1L, 2L, 3L, 5L, 7L, 12L, 100L}) out.push_back(s.from_int(v));
      return out;
    }
    case SemiringId::Rat: {
      std::vector<Scalar> out;
      long nums[] = {0, 1, -1, 2, 3, -5, 7};
      long dens[] = {1, 2, 3, 4};
      for (long n : nums)
        for (long d : dens) out.push_back(Scalar::rat(mpq_class(n, d)));
      return out;
    }
    case SemiringId::CRat: {
      std::vector<Scalar> out;
      long vals[] = {0, 1, -1, 2, -3};
      for (long re : vals)
        for (long im : vals)
          out.push_back(Scalar::crat(mpq_class(re, 2), mpq_class(im, 3)));
      return out;
    }
  }
  return {};
}

uint64_t splitmix(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

TEST_CASE("exact arithmetic basics") {
  const Semiring& nat = Semiring::nat();
  CHECK(nat.add(nat.from_int(2), nat.from_int(3)) == nat.from_int(5));
  CHECK(nat.mul(nat.from_int(4), nat.from_int(0)) == nat.zero());

  const Semiring& rat = Semiring::rat();
  CHECK(rat.add(rat.parse("1/2"), rat.parse("1/3")) == rat.parse("5/6"));
  CHECK(rat.mul(rat.parse("2/3"), rat.parse("3/2")) == rat.one());

  const Semiring& crat = Semiring::crat();
  Scalar i = Scalar::crat(0, 1);
  CHECK(crat.mul(i, i) == Scalar::crat(-1, 0)); // i^2 = -1

  const Semiring& triv = Semiring::trivial();
  CHECK(triv.add(Scalar::trivial(), Scalar::trivial()) == Scalar::trivial());
}

TEST_CASE("semiring laws on 1000 random triples per instance") {
  for (const Semiring* s :
       {&Semiring::trivial(), &Semiring::nat(), &Semiring::rat(),
        &Semiring::crat()}) {
    auto xs = pool(*s);
    uint64_t seed = 0x5eedULL + static_cast<uint64_t>(s->id());
    for (int it = 0; it < 1000; ++it) {
      const Scalar& a = xs[splitmix(seed) % xs.size()];
      const Scalar& b = xs[splitmix(seed) % xs.size()];
      const Scalar& c = xs[splitmix(seed) % xs.size()];
      REQUIRE(s->add(a, b) == s->add(b, a));
      REQUIRE(s->mul(a, b) == s->mul(b, a));
      REQUIRE(s->add(s->add(a, b), c) == s->add(a, s->add(b, c)));
      REQUIRE(s->mul(s->mul(a, b), c) == s->mul(a, s->mul(b, c)));
      REQUIRE(s->mul(a, s->add(b, c)) == s->add(s->mul(a, b), s->mul(a, c)));
      REQUIRE(s->add(a, s->zero()) == a);
      REQUIRE(s->mul(a, s->one()) == a);
      REQUIRE(s->mul(a, s->zero()) == s->zero());
    }
  }
}

TEST_CASE("literal codecs round-trip and reject junk") {
  const Semiring& nat = Semiring::nat();
  CHECK(nat.parse("12") == nat.from_int(12));
  CHECK_THROWS_AS(nat.parse("-3"), ScalarError);
  CHECK_THROWS_AS(nat.parse("1/2"), ScalarError);

  const Semiring& crat = Semiring::crat();
  CHECK(crat.parse("(1/2, -1)") == Scalar::crat(mpq_class(1, 2), -1));
  CHECK(crat.parse("3") == Scalar::crat(3, 0));

  CHECK(Semiring::trivial().parse("@") == Scalar::trivial());
  CHECK_THROWS_AS(Semiring::trivial().parse("1"), ScalarError);

  // parse(print(a)) == a on the pools
  for (const Semiring* s :
       {&Semiring::trivial(), &Semiring::nat(), &Semiring::rat(),
        &Semiring::crat()})
    for (const Scalar& a : pool(*s)) REQUIRE(s->parse(a.str()) == a);

  // canonical form: 2/4 parses equal to 1/2 and prints reduced
  CHECK(Semiring::rat().parse("2/4") == Semiring::rat().parse("1/2"));
  CHECK(Semiring::rat().parse("2/4").str() == "1/2");
}

TEST_CASE("semiring mismatch is an error") {
  CHECK_THROWS_AS(Semiring::nat().add(Semiring::nat().one(),
                                      Semiring::rat().one()),
                  ScalarError);
}
