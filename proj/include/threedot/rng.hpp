#pragma once

#include <cstdint>

namespace threedot {

// Counter-based randomness. Every random quantity in the project is a pure
// function of one user-supplied 64-bit seed plus a stream label, so serial
// and parallel runs agree and reruns are byte-identical.
//
// Stream derivation: key = mix(seed ^ mix(domain)), then value_i = mix(key + i)
// where mix is the splitmix64 finalizer. Domains are small integer tags kept
// in the Stream enum below; per-object streams fold extra indices with
// derive_key.

uint64_t splitmix64(uint64_t x);

enum class Stream : uint64_t {
  FieldSample = 1,
  BlockSample = 2,
  SkeletonDigits = 3,
  StationaryFill = 4,
  IidSample = 5,
  Rot3Sample = 6,
  Generic = 7,
};

uint64_t derive_key(uint64_t seed, Stream domain, uint64_t a = 0, uint64_t b = 0);

// Deterministic counter stream over a derived key.
class StreamRng {
 public:
  explicit StreamRng(uint64_t key) : key_(key) {}
  StreamRng(uint64_t seed, Stream domain, uint64_t a = 0, uint64_t b = 0)
      : key_(derive_key(seed, domain, a, b)) {}

  uint64_t next();
  int bit() { return static_cast<int>(next() & 1u); }
  // Unbiased value in {0,1,2} by rejection on two-bit draws.
  int ternary();
  // Unbiased value in [0, n), n >= 1, by rejection.
  uint64_t below(uint64_t n);

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
};

// Keyed coin for "one fresh coin toss per lattice cell" schemes: the coin at
// (tag, index) is the low bit of mix(key ^ mix(tag*GAMMA + index)). Order of
// evaluation never matters.
int keyed_coin(uint64_t key, int64_t tag, int64_t index);

}  // namespace threedot
