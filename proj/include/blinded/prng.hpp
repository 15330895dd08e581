#ifndef BLINDED_PRNG_HPP_
#define BLINDED_PRNG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "blinded/rational.hpp"

namespace blinded {

// splitmix64 output mix; also used as a cheap non-cryptographic keyed mixer.
uint64_t mix64(uint64_t x);

// Deterministic PRNG with explicit stream derivation. All randomness in the
// library flows through this so identical (seed, labels) replays exactly on
// any platform — std::random distributions are not portable.
class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Unbiased draw in [0, n) via rejection; n > 0.
  uint64_t below(uint64_t n);
  bool bit() { return next() & 1; }

  // Independent child stream; deterministic in (current seed, tag). Does not
  // advance this stream.
  Prng derive(uint64_t tag) const;
  Prng derive(const std::string& tag) const;

 private:
  uint64_t state_;
};

// Draw an index according to exact rational weights (non-negative, not all
// zero). Scales to a common denominator and draws a uniform integer.
std::size_t sample_weighted(const std::vector<Rat>& weights, Prng& rng);

// Uniform integer in [0, n) for arbitrary-precision n > 0.
Int int_below(const Int& n, Prng& rng);

// FNV-1a over a byte string; used for manifests and transcript digests.
uint64_t fnv1a64(const std::string& bytes);
std::string hex64(uint64_t v);

}  // namespace blinded

#endif  // BLINDED_PRNG_HPP_
