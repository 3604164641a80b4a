#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "negabeta/admissibility.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/integer_sets.hpp"
#include "test_util.hpp"

using namespace negabeta;

TEST_CASE("window membership for negative-base words") {
  auto trib = mk(tribonacci_poly());

  // the reference word itself is the least admissible word
  CHECK(is_admissible_negbeta(trib, reference_l(trib)).admissible);
  // the ceiling word is excluded (half-open window)
  CHECK_FALSE(is_admissible_negbeta(trib, reference_r_star(trib)).admissible);

  // dropping below the reference fails, and the report pins the position
  auto plastic = mk(plastic_poly());
  AdmissibilityResult bad =
      is_admissible_negbeta(plastic, periodic_word({1}, {0}));
  CHECK_FALSE(bad.admissible);
  CHECK(bad.suffix_index == 0);
  CHECK(bad.position == 4);

  // digits above floor(beta) are rejected outright
  AdmissibilityResult range = is_admissible_negbeta(trib, finite_word({5}));
  CHECK_FALSE(range.admissible);
  CHECK(range.position == 1);
  CHECK_FALSE(is_admissible_negbeta(trib, std::vector<int>{-1}).admissible);
}

TEST_CASE("suffix condition in the positive base") {
  auto trib = mk(tribonacci_poly());
  // 110 0^w drops below (110)^w at the fourth digit: admissible
  CHECK(is_admissible_renyi(trib, std::vector<int>{1, 1, 0}).admissible);
  // the quasi-greedy word itself is a limit, not an expansion
  CHECK_FALSE(is_admissible_renyi(trib, renyi_one_star(trib)).admissible);
  AdmissibilityResult r =
      is_admissible_renyi(trib, std::vector<int>{1, 1, 1});
  CHECK_FALSE(r.admissible);
  CHECK(r.suffix_index == 0);
  CHECK(r.position == 3);
  // digit range
  CHECK_FALSE(is_admissible_renyi(trib, std::vector<int>{2}).admissible);

  auto golden = mk(golden_poly());
  CHECK(is_admissible_renyi(golden, std::vector<int>{1, 0, 1}).admissible);
  CHECK_FALSE(is_admissible_renyi(golden, std::vector<int>{1, 1}).admissible);
  CHECK_FALSE(
      is_admissible_renyi(golden, std::vector<int>{0, 1, 1}).admissible);
}

TEST_CASE("length-3 blocks of the finite-reference cubic") {
  auto ctx = mk(cubic_2470_poly());
  auto blocks = all_blocks(ctx, 3);

  std::set<std::vector<int>> got(blocks.begin(), blocks.end());
  std::set<std::vector<int>> want = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1},
      {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 1, 0}, {2, 2, 1}};
  CHECK(got == want);
  CHECK(blocks.size() == want.size());

  // returned in strictly increasing alternate order
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    CHECK(alt_compare_strings(blocks[i], blocks[i + 1]) == Cmp::LT);

  // every block really is admissible as a finite word, 211 is not
  for (const auto& b : blocks) CHECK(is_admissible_negbeta(ctx, b).admissible);
  CHECK_FALSE(is_admissible_negbeta(ctx, std::vector<int>{2, 1, 1}).admissible);
  CHECK_FALSE(is_admissible_negbeta(ctx, std::vector<int>{2, 2, 0}).admissible);
}

TEST_CASE("expansions are admissible by construction") {
  std::mt19937 rng(20260816);
  // Small denominators keep the orbit state space small enough that every
  // expansion settles into its cycle well inside the budget.
  const long dens[] = {7, 11, 13, 17, 19};
  BaseOptions roomy;
  roomy.orbit_budget = 500000;
  for (auto coeffs : {tribonacci_poly(), cubic_2470_poly(), silver_poly(),
                      golden_sq_poly()}) {
    auto ctx = mk(coeffs, roomy);
    FieldElement l = domain_left(ctx);
    FieldElement span = domain_right(ctx) - l;
    for (int trial = 0; trial < 25; ++trial) {
      // random rational point of [l, r)
      long q = dens[trial % 5];
      long num = static_cast<long>(rng() % static_cast<unsigned long>(q));
      FieldElement x = l + span * Rat(num, q);
      DigitWord w = expand_negbeta(ctx, x);
      REQUIRE_FALSE(w.truncated);
      CHECK(is_admissible_negbeta(ctx, w).admissible);
    }
    for (int trial = 0; trial < 25; ++trial) {
      long q = dens[trial % 5];
      long num = static_cast<long>(rng() % static_cast<unsigned long>(q));
      FieldElement x = FieldElement::from_rat(ctx, Rat(num, q));
      DigitWord w = expand_renyi(ctx, x);
      REQUIRE_FALSE(w.truncated);
      CHECK(is_admissible_renyi(ctx, w).admissible);
    }
  }
}

TEST_CASE("admissibility needs a decided reference word") {
  BaseOptions tiny;
  tiny.orbit_budget = 2;
  auto ctx = mk(tribonacci_poly(), tiny);
  CHECK_THROWS_AS(is_admissible_negbeta(ctx, finite_word({1})), Error);
}
