#include <doctest.h>

#include "oracles.hpp"
#include "splicecert/error.hpp"
#include "splicecert/semigroup.hpp"

#include <numeric>

using splicecert::ErrorCode;
using splicecert::Integer;
using splicecert::NumericalSemigroup;

namespace {

std::vector<long long> random_gens(std::mt19937_64& rng, std::size_t max_count, long long max_value) {
  std::uniform_int_distribution<std::size_t> count(1, max_count);
  std::uniform_int_distribution<long long> value(2, max_value);
  for (;;) {
    std::vector<long long> gens(count(rng));
    for (auto& g : gens) g = value(rng);
    if (oracle::gcd_all(gens) == 1) return gens;
  }
}

NumericalSemigroup make(const std::vector<long long>& gens) { return NumericalSemigroup(std::vector<Integer>(gens.begin(), gens.end())); }

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("two missing numbers in <3,4,5>") {
    NumericalSemigroup s{3, 4, 5};
    CHECK(s.genus() == 2);
    CHECK(s.frobenius() == 2);
    CHECK_FALSE(s.contains(1));
    CHECK_FALSE(s.contains(2));
    CHECK(s.contains(0));
    CHECK(s.contains(7));
  }

  TEST_CASE("examples") {
    CHECK_FALSE(NumericalSemigroup({3, 4}).contains(5));
    CHECK_FALSE(NumericalSemigroup({2, 3}).contains(1));
    CHECK(NumericalSemigroup({15, 10, 6}).frobenius() == 29);
    CHECK_FALSE(NumericalSemigroup({15, 10, 6}).contains(13));
    CHECK(NumericalSemigroup({1}).genus() == 0);
    CHECK(NumericalSemigroup({1}).frobenius() == -1);
  }

  TEST_CASE("generators are sorted and deduplicated") {
    NumericalSemigroup s{5, 3, 5, 4};
    CHECK(s.generators() == std::vector<Integer>{3, 4, 5});
    CHECK(s.with_generator(2).generators().front() == 2);
  }

  TEST_CASE("non-coprime generators have infinitely many gaps") {
    NumericalSemigroup s{4, 6};
    CHECK(s.gcd() == 2);
    CHECK(s.contains(10));
    CHECK_FALSE(s.contains(11));
    CHECK_THROWS_AS(s.genus(), splicecert::Error);
    try {
      (void)s.frobenius();
    } catch (const splicecert::Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteGaps);
    }
  }

  TEST_CASE("bad generators") {
    CHECK_THROWS_AS(NumericalSemigroup(std::vector<Integer>{}), splicecert::Error);
    CHECK_THROWS_AS(NumericalSemigroup({3, 0}), splicecert::Error);
    CHECK_THROWS_AS(NumericalSemigroup({3, -4}), splicecert::Error);
  }

  TEST_CASE("apery set of <3,5>") {
    NumericalSemigroup s{3, 5};
    CHECK(s.apery_set(3) == std::vector<Integer>{0, 10, 5});
    CHECK_THROWS_AS(s.apery_set(4), splicecert::Error);
  }

  TEST_CASE("apery entries are minimal in their residue class") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      auto gens = random_gens(rng, 5, 60);
      auto s = make(gens);
      const Integer m = s.generators().front();
      auto apery = s.apery_set(m);
      const long long mm = m.convert_to<long long>();
      for (long long i = 0; i < mm; ++i) {
        const long long w = apery[static_cast<std::size_t>(i)].convert_to<long long>();
        CHECK(w % mm == i);
        CHECK(oracle::naive_contains(gens, w));
        if (w >= mm) CHECK_FALSE(oracle::naive_contains(gens, w - mm));
      }
    }
  }

  TEST_CASE("genus and frobenius match a sieve") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      auto gens = random_gens(rng, 6, 120);
      auto s = make(gens);
      CHECK(s.genus() == oracle::naive_genus(gens));
      CHECK(s.frobenius() == oracle::naive_frobenius(gens));
    }
  }

  TEST_CASE("membership matches a sieve on both code paths") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      auto gens = random_gens(rng, 4, 50);
      auto s = make(gens);
      const long long limit = 2 * oracle::naive_frobenius(gens) + 10;
      auto member = oracle::sieve(gens, std::max(limit, 0LL));
      for (long long n = 0; n < static_cast<long long>(member.size()); ++n) {
        CHECK(s.contains(n) == member[static_cast<std::size_t>(n)]);
      }
      CHECK_FALSE(s.contains(-1));
    }
    // Large queries force the Apery path.
    NumericalSemigroup big{1000003, 1000033};
    CHECK(big.contains(Integer(1000003) * 1000033));
    CHECK_FALSE(big.contains(Integer(1000003) * 1000033 - 1000003 - 1000033));
  }

  TEST_CASE("closed forms for two generators") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> pick(2, 300);
    for (int trial = 0; trial < 100;) {
      long long p = pick(rng), q = pick(rng);
      if (std::gcd(p, q) != 1) continue;
      ++trial;
      NumericalSemigroup s{p, q};
      CHECK(s.frobenius() == p * q - p - q);
      CHECK(s.genus() == (p - 1) * (q - 1) / 2);
    }
  }

  TEST_CASE("adding a generator never increases the genus") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long long> extra(2, 80);
    for (int trial = 0; trial < 50; ++trial) {
      auto s = make(random_gens(rng, 4, 80));
      CHECK(s.with_generator(extra(rng)).genus() <= s.genus());
    }
  }

  TEST_CASE("copies share the cache safely") {
    NumericalSemigroup s{7, 11, 13};
    NumericalSemigroup copy = s;
    CHECK(copy.genus() == s.genus());
    CHECK(copy.frobenius() == oracle::naive_frobenius({7, 11, 13}));
  }

  TEST_CASE("compute_apery_set requires coprime generators") {
    std::vector<Integer> gens{4, 6};
    CHECK_THROWS_AS(splicecert::compute_apery_set(gens, 4), splicecert::Error);
  }
}
