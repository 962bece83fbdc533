#pragma once

#include <cstdint>

namespace oclam {

// SplitMix64: tiny, seedable, identical output on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  size_t below(size_t n) { return n ? static_cast<size_t>(next() % n) : 0; }

  bool chance(int num, int den) {
    return below(static_cast<size_t>(den)) < static_cast<size_t>(num);
  }

  // Independent stream for a concurrent or nested task.
  uint64_t fork() { return next() ^ 0xd1b54a32d192ed03ULL; }

private:
  uint64_t state_;
};

} // namespace oclam
