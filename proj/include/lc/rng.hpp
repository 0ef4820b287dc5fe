#pragma once

#include <cstdint>
#include <random>

namespace lc {

// Splittable random stream keyed by (master_seed, stream_index).
// Distinct key pairs give statistically independent sequences; equal
// pairs reproduce the same sequence. Streams are value types and may
// be copied or moved across threads freely.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  // Derives an independent child stream; children with different
  // indices are independent of each other and of the parent.
  RngStream substream(std::uint64_t index) const;

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); never returns 0 or 1.
  double next_uniform();

  // Standard normal via the inverse CDF, so draws depend only on the
  // uniform stream (no library-specific transforms).
  double next_normal();

  // Unbiased uniform integer in [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  std::uint64_t key() const { return key_; }

 private:
  explicit RngStream(std::uint64_t key);

  std::uint64_t key_;
  std::mt19937_64 gen_;
};

}  // namespace lc
