#include <doctest.h>

#include <random>

#include "conedd/zeroset.hpp"

using namespace conedd;

namespace {

ZeroSet set_of(std::size_t dim, std::initializer_list<std::size_t> ks) {
  std::vector<std::size_t> v(ks);
  return ZeroSet::of_indices(dim, v);
}

}  // namespace

TEST_CASE("zeroset_of marks exactly the zero coordinates") {
  const std::vector<long> row3{0, -1, 1, 0, 1, 0, -1};
  CHECK(zeroset_of(std::span<const long>(row3)) == set_of(7, {0, 3, 5}));

  const std::vector<long> zero(4, 0);
  CHECK(zeroset_of(std::span<const long>(zero)) == set_of(4, {0, 1, 2, 3}));

  const std::vector<long> e2{0, 0, 1};
  CHECK(zeroset_of(std::span<const long>(e2)) == set_of(3, {0, 1}));
}

TEST_CASE("intersection") {
  CHECK(intersect(set_of(5, {0, 1, 2}), set_of(5, {1, 2, 3})) == set_of(5, {1, 2}));
  const auto a = set_of(70, {0, 5, 64, 69});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(set_of(3, {0}), set_of(3, {1})).count() == 0);
  CHECK_THROWS_AS(intersect(ZeroSet(3), ZeroSet(4)), std::invalid_argument);
}

TEST_CASE("superset test") {
  CHECK(is_superset(set_of(5, {1, 2, 3}), set_of(5, {1, 2})));
  CHECK(is_superset(set_of(5, {1, 2}), set_of(5, {1, 2})));
  CHECK_FALSE(is_superset(set_of(5, {1, 2}), set_of(5, {3})));
  CHECK(is_superset(set_of(130, {1, 100, 129}), set_of(130, {129})));
  CHECK_THROWS_AS(is_superset(ZeroSet(64), ZeroSet(65)), std::invalid_argument);
}

TEST_CASE("count and the cleared tail") {
  CHECK(ZeroSet(10).count() == 0);
  CHECK(set_of(7, {0, 3, 5}).count() == 3);
  const auto full = ZeroSet::full(63);
  CHECK(full.count() == 63);
  CHECK((full.words()[0] >> 63) == 0);
  CHECK(ZeroSet::full(64).count() == 64);
  CHECK(ZeroSet::full(129).count() == 129);
  CHECK(ZeroSet::full(129).words().size() == 3);

  const std::vector<ZeroSet::Word> bad{~ZeroSet::Word{0}};
  CHECK_THROWS_AS(ZeroSet::from_words(10, bad), std::invalid_argument);
}

TEST_CASE("group_satisfied allows at most one missing index per group") {
  const std::vector<ConstraintGroup> g{{{4, 5, 6}}};
  CHECK(group_satisfied(set_of(7, {4, 5}), g));
  CHECK_FALSE(group_satisfied(set_of(7, {4}), g));
  CHECK(group_satisfied(ZeroSet::full(7), g));

  // A group straddling a word boundary.
  const std::vector<ConstraintGroup> straddle{{{62, 63, 64}}};
  CHECK(group_satisfied(set_of(70, {62, 64}), straddle));
  CHECK_FALSE(group_satisfied(set_of(70, {63}), straddle));
}

TEST_CASE("validate_groups rejects malformed groups") {
  const std::vector<ConstraintGroup> out_of_range{{{1, 2, 7}}};
  CHECK_THROWS_AS(validate_groups(out_of_range, 7), std::invalid_argument);
  const std::vector<ConstraintGroup> unsorted{{{2, 1, 3}}};
  CHECK_THROWS_AS(validate_groups(unsorted, 7), std::invalid_argument);
  const std::vector<ConstraintGroup> overlap{{{0, 1, 2}}, {{2, 3, 4}}};
  CHECK_THROWS_AS(validate_groups(overlap, 7), std::invalid_argument);
  const std::vector<ConstraintGroup> ok{{{0, 1, 2}}, {{3, 4, 5}}};
  CHECK_NOTHROW(validate_groups(ok, 7));
}

TEST_CASE("properties on random non-negative vectors") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> entry(0, 2);  // plenty of zeros
  std::uniform_int_distribution<long> scale(1, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + rng() % 140;
    std::vector<mpz_class> u(d), w(d), sum(d);
    const long alpha = scale(rng), beta = scale(rng);
    for (std::size_t k = 0; k < d; ++k) {
      u[k] = entry(rng);
      w[k] = entry(rng);
      sum[k] = alpha * u[k] + beta * w[k];
    }
    const auto zu = zeroset_of(std::span<const mpz_class>(u));
    const auto zw = zeroset_of(std::span<const mpz_class>(w));
    const auto zi = intersect(zu, zw);
    CHECK(zeroset_of(std::span<const mpz_class>(sum)) == zi);
    CHECK(zi.count() <= std::min(zu.count(), zw.count()));
    CHECK(is_superset(zu, zi));

    // Groups of three from the front; compare with a coordinate-wise check.
    std::vector<ConstraintGroup> groups;
    for (std::size_t k = 0; k + 2 < d && groups.size() < 5; k += 4) groups.push_back({{k, k + 1, k + 2}});
    bool direct = true;
    for (const auto& g : groups) {
      int nonzero = 0;
      for (std::size_t k : g.indices) nonzero += u[k] != 0;
      direct = direct && nonzero <= 1;
    }
    CHECK(group_satisfied(zu, groups) == direct);
  }
}
