#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bindkit {

// Seeded deterministic source for the law checkers and samplers. All
// draws go through next()/below() so a seed fully determines a run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  bool chance(std::uint32_t num, std::uint32_t den) {
    return below(den) < num;
  }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 g_;
};

// Stable per-law sub-seed so adding a law does not shift its siblings.
std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag);

}  // namespace bindkit
