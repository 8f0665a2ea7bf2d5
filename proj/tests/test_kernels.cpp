#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "mixspec/kernels.hpp"

using namespace mixspec::kernels;

namespace {

std::vector<std::int64_t> random_values(std::size_t count, std::int64_t limit, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-limit, limit);
  std::vector<std::int64_t> out(count);
  for (auto& v : out) v = dist(rng);
  return out;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon})
    if (supported(isa)) out.push_back(isa);
  return out;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(supported(Isa::kScalar));
  CHECK(table(Isa::kScalar).isa == Isa::kScalar);
  CHECK(isa_name(Isa::kScalar) == "scalar");
  CHECK(supported(active().isa));
}

TEST_CASE("unsupported ISA is rejected") {
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!supported(isa)) CHECK_THROWS(table(isa));
  }
}

TEST_CASE("matmul variants agree with the scalar reference") {
  std::mt19937_64 rng(1);
  for (Isa isa : available()) {
    const KernelTable& t = table(isa);
    for (std::size_t n : {1UL, 2UL, 3UL, 4UL, 5UL, 7UL, 8UL, 9UL, 13UL}) {
      for (std::int64_t limit : {std::int64_t{1}, std::int64_t{1000}, std::int64_t{1} << 20}) {
        const auto a = random_values(n * n, limit, rng);
        const auto b = random_values(n * n, limit, rng);
        REQUIRE(fits_matmul(a, b, n));
        std::vector<std::int64_t> expected(n * n);
        std::vector<std::int64_t> got(n * n, 42);
        detail::matmul_scalar(a, b, expected, n);
        t.matmul(a, b, got, n);
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("row_combine variants agree with the scalar reference") {
  std::mt19937_64 rng(2);
  for (Isa isa : available()) {
    const KernelTable& t = table(isa);
    for (std::size_t len : {0UL, 1UL, 3UL, 4UL, 5UL, 11UL, 32UL}) {
      const auto src = random_values(len, (std::int64_t{1} << 30), rng);
      auto expected = random_values(len, (std::int64_t{1} << 30), rng);
      auto got = expected;
      detail::row_combine_scalar(expected, src, 12345, -67890);
      t.row_combine(got, src, 12345, -67890);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("range guards") {
  const std::vector<std::int64_t> small{1, -2, 3, 4};
  const std::vector<std::int64_t> wide{kLaneLimit, 0, 0, 0};
  CHECK(fits_lanes(small));
  CHECK_FALSE(fits_lanes(wide));
  CHECK(fits_matmul(small, small, 2));
  CHECK_FALSE(fits_matmul(wide, small, 2));
  const std::vector<std::int64_t> big(4, (std::int64_t{1} << 31) - 1);
  CHECK(fits_matmul(big, big, 2));
  const std::vector<std::int64_t> big3(9, (std::int64_t{1} << 31) - 1);
  CHECK_FALSE(fits_matmul(big3, big3, 3));
}

TEST_CASE("select switches the active table") {
  const Isa before = active().isa;
  select(Isa::kScalar);
  CHECK(active().isa == Isa::kScalar);
  select(before);
  CHECK(active().isa == before);
}
