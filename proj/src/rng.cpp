#include "threedot/rng.hpp"

namespace threedot {

namespace {
constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ull;
}

uint64_t splitmix64(uint64_t x) {
  x += kGamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t derive_key(uint64_t seed, Stream domain, uint64_t a, uint64_t b) {
  uint64_t k = splitmix64(seed ^ splitmix64(static_cast<uint64_t>(domain)));
  k = splitmix64(k ^ splitmix64(a));
  k = splitmix64(k ^ splitmix64(b + 0x5851f42d4c957f2dull));
  return k;
}

uint64_t StreamRng::next() { return splitmix64(key_ + kGamma * ++ctr_); }

int StreamRng::ternary() {
  for (;;) {
    uint64_t v = next() & 3u;
    if (v < 3) return static_cast<int>(v);
  }
}

uint64_t StreamRng::below(uint64_t n) {
  if (n <= 1) return 0;
  uint64_t limit = n * (~0ull / n);
  for (;;) {
    uint64_t v = next();
    if (v < limit) return v % n;
  }
}

int keyed_coin(uint64_t key, int64_t tag, int64_t index) {
  uint64_t h = splitmix64(key ^ splitmix64(static_cast<uint64_t>(tag) * kGamma +
                                           static_cast<uint64_t>(index)));
  return static_cast<int>(h & 1u);
}

}  // namespace threedot
