#include "tspscale/rng.hpp"

namespace tspscale {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) noexcept {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline Philox4x32::Counter round(const Philox4x32::Counter& c,
                                 const Philox4x32::Key& k) noexcept {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

Philox4x32::Counter Philox4x32::apply(Counter ctr, Key key) noexcept {
  ctr = round(ctr, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kWeyl0;
    key[1] += kWeyl1;
    ctr = round(ctr, key);
  }
  return ctr;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t hash_tag(std::string_view tag) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001B3ull;
  }
  return mix64(h);
}

RandomStream::RandomStream(std::uint64_t master_seed, std::string_view domain_tag)
    : master_seed_(master_seed),
      domain_tag_(domain_tag),
      key_(mix64(mix64(master_seed) ^ hash_tag(domain_tag))) {}

RandomStream::RandomStream(std::uint64_t master_seed, std::string domain_tag,
                           std::uint64_t key, std::uint64_t substream)
    : master_seed_(master_seed),
      domain_tag_(std::move(domain_tag)),
      key_(key),
      substream_(substream) {}

RandomStream RandomStream::at(std::uint64_t index) const {
  const std::uint64_t child_key = mix64(key_ ^ mix64(substream_ ^ 0x5851F42D4C957F2Dull));
  return RandomStream(master_seed_, domain_tag_, child_key, index);
}

std::uint64_t RandomStream::next_u64() noexcept {
  const std::uint64_t slot = drawn_ & 1u;
  if (slot == 0) {
    const std::uint64_t block = drawn_ >> 1;
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(block),
                                  static_cast<std::uint32_t>(block >> 32),
                                  static_cast<std::uint32_t>(substream_),
                                  static_cast<std::uint32_t>(substream_ >> 32)};
    const Philox4x32::Key key{static_cast<std::uint32_t>(key_),
                              static_cast<std::uint32_t>(key_ >> 32)};
    const auto out = Philox4x32::apply(ctr, key);
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
  }
  ++drawn_;
  return buffer_[slot];
}

double RandomStream::unit() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::below(std::uint64_t bound) noexcept {
  // Lemire, "Fast random integer generation in an interval" (2019).
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace tspscale
