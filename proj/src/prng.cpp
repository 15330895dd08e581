#include "blinded/prng.hpp"

#include <stdexcept>

namespace blinded {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Prng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Prng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Prng::below(0)");
  if ((n & (n - 1)) == 0) return next() & (n - 1);
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    uint64_t x = next();
    if (x < limit) return x % n;
  }
}

Prng Prng::derive(uint64_t tag) const {
  return Prng(mix64(state_ ^ mix64(tag ^ 0xa076'1d64'78bd'642fULL)));
}

Prng Prng::derive(const std::string& tag) const {
  return derive(fnv1a64(tag));
}

std::size_t sample_weighted(const std::vector<Rat>& weights, Prng& rng) {
  if (weights.empty()) throw std::invalid_argument("empty weight vector");
  Int denom = 1;
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    Int d = w.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    denom = denom / g * d;
  }
  Int total = 0;
  std::vector<Int> scaled(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    scaled[i] = weights[i].get_num() * (denom / weights[i].get_den());
    total += scaled[i];
  }
  if (total == 0) throw std::invalid_argument("all weights zero");
  Int draw = int_below(total, rng);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (draw < scaled[i]) return i;
    draw -= scaled[i];
  }
  return weights.size() - 1;  // unreachable
}

Int int_below(const Int& n, Prng& rng) {
  if (n <= 0) throw std::invalid_argument("int_below(n <= 0)");
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    return Int(static_cast<unsigned long>(rng.below(n.get_ui())));
  }
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  for (;;) {
    Int x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t word = rng.next();
      x <<= 64;
      Int chunk;
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      x |= chunk;
    }
    x >>= words * 64 - bits;
    if (x < n) return x;
  }
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace blinded
