#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace tspscale {

/// Philox4x32 with 10 rounds (Salmon et al., "Parallel random numbers: as easy
/// as 1, 2, 3"). Maps a 128-bit counter and a 64-bit key to 128 random bits.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter ctr, Key key) noexcept;
};

/// 64-bit finalizer of SplitMix64. Bijective.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// FNV-1a over the bytes of a tag, then mixed.
std::uint64_t hash_tag(std::string_view tag) noexcept;

/// A keyed counter-based stream. Every draw is a pure function of
/// (master_seed, domain_tag, substream path, counter), so workers can draw
/// from their own streams in any order and still reproduce the same bits.
///
/// Satisfies std::uniform_random_bit_generator, but the helpers below
/// (unit(), below()) are preferred because the standard distributions are not
/// bit-identical across library implementations.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t master_seed, std::string_view domain_tag);

  /// Child stream for one index (an instance id, a descent index, ...).
  /// Deriving twice with the same index yields the same stream.
  [[nodiscard]] RandomStream at(std::uint64_t index) const;

  std::uint64_t next_u64() noexcept;
  result_type operator()() noexcept { return next_u64(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept;

  /// Uniform integer in [0, bound). Unbiased (Lemire's rejection method).
  std::uint64_t below(std::uint64_t bound) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  [[nodiscard]] std::uint64_t master_seed() const noexcept { return master_seed_; }
  [[nodiscard]] const std::string& domain_tag() const noexcept { return domain_tag_; }
  /// Number of 64-bit words drawn so far.
  [[nodiscard]] std::uint64_t counter() const noexcept { return drawn_; }

 private:
  RandomStream(std::uint64_t master_seed, std::string domain_tag, std::uint64_t key,
               std::uint64_t substream);

  std::uint64_t master_seed_;
  std::string domain_tag_;
  std::uint64_t key_;
  std::uint64_t substream_ = 0;
  std::uint64_t drawn_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
};

}  // namespace tspscale
