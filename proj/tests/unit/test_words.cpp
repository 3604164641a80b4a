#include "doctest.h"
#include "negabeta/words.hpp"

using namespace negabeta;

TEST_CASE("normalization produces the canonical form") {
  // all-zero period collapses to a finite word, trailing zeros stripped
  CHECK(periodic_word({1, 0, 0}, {0}) == finite_word({1}));
  CHECK(finite_word({1, 0, 2, 0, 0}) == DigitWord{{1, 0, 2}, {}, false});
  CHECK(finite_word({0, 0}) == DigitWord{{}, {}, false});

  // the period is primitive
  CHECK(periodic_word({}, {1, 0, 1, 0}) == periodic_word({}, {1, 0}));
  CHECK(periodic_word({2}, {1, 1, 1}) == periodic_word({2}, {1}));

  // the period is rotated as far left as it goes
  CHECK(periodic_word({1, 0}, {1, 0}) == periodic_word({}, {1, 0}));
  CHECK(periodic_word({2, 1}, {2, 1}) == periodic_word({}, {2, 1}));
  CHECK(periodic_word({1, 2}, {3, 2}) == periodic_word({1}, {2, 3}));

  // normalization is idempotent
  DigitWord w = periodic_word({0, 1, 2, 1}, {2, 1, 2, 1});
  CHECK(normalize(w) == w);
}

TEST_CASE("digit access reads through the period") {
  DigitWord w = periodic_word({1, 0}, {2, 1});
  CHECK(w.digit_at(0) == 1);
  CHECK(w.digit_at(1) == 0);
  CHECK(w.digit_at(2) == 2);
  CHECK(w.digit_at(3) == 1);
  CHECK(w.digit_at(4) == 2);
  CHECK(w.digit_at(100) == 2);

  DigitWord f = finite_word({3});
  CHECK(f.digit_at(0) == 3);
  CHECK(f.digit_at(17) == 0);
  CHECK(f.is_finite());
  CHECK_FALSE(w.is_finite());
}

TEST_CASE("shifting drops a prefix and stays canonical") {
  DigitWord w = periodic_word({1, 0}, {1});
  CHECK(shift_word(w, 1) == periodic_word({0}, {1}));
  CHECK(shift_word(w, 2) == periodic_word({}, {1}));
  CHECK(shift_word(w, 5) == periodic_word({}, {1}));
  CHECK(shift_word(finite_word({1, 2, 3}), 2) == finite_word({3}));
  CHECK(shift_word(finite_word({1}), 4) == finite_word({}));
  CHECK(shift_word(w, 0) == w);
}

TEST_CASE("lexicographic comparison with witness") {
  size_t at = 0;
  CHECK(lex_compare(finite_word({1, 0, 1}), finite_word({1, 1}), &at) ==
        Cmp::LT);
  CHECK(at == 2);
  CHECK(lex_compare(periodic_word({}, {1, 0}), periodic_word({}, {1, 0})) ==
        Cmp::EQ);
  // finite vs periodic: 110000... < 110110...
  CHECK(lex_compare(finite_word({1, 1}), periodic_word({}, {1, 1, 0}), &at) ==
        Cmp::LT);
  CHECK(at == 4);
  // different presentations of the same stream compare equal
  CHECK(lex_compare(periodic_word({2, 1}, {2, 1}),
                    periodic_word({}, {2, 1})) == Cmp::EQ);
}

TEST_CASE("alternate order flips with the parity of the witness") {
  size_t at = 0;
  // first difference at position 1 (odd): larger digit means smaller word
  CHECK(alt_compare(finite_word({2}), finite_word({1}), &at) == Cmp::LT);
  CHECK(at == 1);
  // first difference at position 2 (even): larger digit means larger word
  CHECK(alt_compare(finite_word({1, 2}), finite_word({1, 1}), &at) ==
        Cmp::GT);
  CHECK(at == 2);
  CHECK(alt_less(finite_word({2}), finite_word({1})));
  CHECK_FALSE(alt_less(finite_word({1}), finite_word({2})));

  // digit-level rule, 0-based offset
  CHECK(alt_less_at(0, 2, 1));
  CHECK_FALSE(alt_less_at(0, 1, 2));
  CHECK(alt_less_at(1, 1, 2));
  CHECK_FALSE(alt_less_at(1, 2, 1));

  // 0^w sits between the two: 1... < 0... < (nothing smaller at odd pos)
  CHECK(alt_compare(finite_word({1}), finite_word({}), &at) == Cmp::LT);
  CHECK(alt_compare(periodic_word({}, {0, 1}), finite_word({})) == Cmp::GT);
}

TEST_CASE("alternate order on equal-length blocks") {
  CHECK(alt_compare_strings({1, 0}, {1, 0}) == Cmp::EQ);
  CHECK(alt_compare_strings({2, 0}, {1, 0}) == Cmp::LT);
  CHECK(alt_compare_strings({1, 2}, {1, 0}) == Cmp::GT);
  CHECK(alt_compare_strings({0, 0, 1}, {0, 0, 0}) == Cmp::LT);
  CHECK(alt_compare_strings({}, {}) == Cmp::EQ);
}

TEST_CASE("truncated words carry their flag through equality") {
  DigitWord t{{1, 0}, {}, true};
  CHECK(t.truncated);
  CHECK_FALSE(t == finite_word({1, 0}));
}
