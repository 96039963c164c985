#pragma once

#include <cstdint>
#include <random>

namespace bowvar {

// Deterministic random source for the self-test corpus.  std::mt19937_64's raw
// output sequence is pinned by the standard, but std::uniform_int_distribution
// is not; mapping raw draws ourselves keeps runs byte-identical across
// platforms and standard libraries.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish draw in [0, bound); bound must be positive.  The tiny modulo
  // bias is irrelevant for test-corpus generation and keeps the mapping
  // platform-stable.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bowvar
