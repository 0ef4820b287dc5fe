#include "lc/rng.hpp"

#include "lc/errors.hpp"
#include "lc/normal.hpp"

namespace lc {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Murmur3 64-bit finalizer: full avalanche on the key space.
std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xFF51AFD7ED558CCDULL;
  k ^= k >> 33;
  k *= 0xC4CEB9FE1A85EC53ULL;
  k ^= k >> 33;
  return k;
}

std::uint64_t derive_key(std::uint64_t parent, std::uint64_t index) {
  return fmix64(parent ^ fmix64(index * kGolden + 0x2545F4914F6CDD1DULL));
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : RngStream(derive_key(fmix64(master_seed + kGolden), stream_index)) {}

RngStream::RngStream(std::uint64_t key) : key_(key), gen_(key) {}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(derive_key(key_, index));
}

std::uint64_t RngStream::next_u64() { return gen_(); }

double RngStream::next_uniform() {
  // 53-bit mantissa, offset by half an ulp so the result is in (0,1).
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() { return std_normal_quantile(next_uniform()); }

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("RngStream::next_below: bound must be >= 1");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t r;
  do {
    r = gen_();
  } while (r > limit);
  return r % bound;
}

}  // namespace lc
