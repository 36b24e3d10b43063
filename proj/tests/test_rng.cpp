#include <doctest.h>

#include <set>

#include "tspscale/rng.hpp"

using namespace tspscale;

TEST_CASE("philox4x32-10 known answers") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::apply(C{0, 0, 0, 0}, {0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::apply(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::apply(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are pure functions of seed, tag and counter") {
  RandomStream a(7, "instances"), b(7, "instances");
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(a.counter() == 100);

  RandomStream c(7, "descent-starts"), d(8, "instances");
  RandomStream e(7, "instances");
  const auto first = e.next_u64();
  CHECK(c.next_u64() != first);
  CHECK(d.next_u64() != first);
}

TEST_CASE("child streams are independent of draw order") {
  const RandomStream root(42, "x");
  RandomStream s3 = root.at(3);
  RandomStream s5 = root.at(5);
  const auto v5 = s5.next_u64();
  const auto v3 = s3.next_u64();
  CHECK(root.at(3).next_u64() == v3);
  CHECK(root.at(5).next_u64() == v5);
  CHECK(v3 != v5);
  CHECK(root.at(3).at(1).next_u64() != root.at(1).at(3).next_u64());

  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(root.at(i).next_u64());
  CHECK(seen.size() == 1000);
}

TEST_CASE("unit and below ranges") {
  RandomStream s(1, "ranges");
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = s.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));

  std::array<int, 7> bins{};
  for (int i = 0; i < 70000; ++i) {
    const auto v = s.below(7);
    REQUIRE(v < 7);
    ++bins[v];
  }
  for (const int b : bins) CHECK(std::abs(b - 10000) < 500);
  CHECK(s.below(1) == 0);
}
