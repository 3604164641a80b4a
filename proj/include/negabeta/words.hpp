#pragma once

#include <cstddef>
#include <vector>

namespace negabeta {

// Digit string, finite or eventually periodic: pre followed by per repeated
// forever. An empty per means the word ends in 0^inf (a "finite" word).
// truncated marks a word cut off by an exhausted orbit budget; such words
// carry their digits but must not be used where a decided word is required.
struct DigitWord {
  std::vector<int> pre;
  std::vector<int> per;
  bool truncated = false;

  bool is_finite() const { return per.empty(); }

  int digit_at(size_t i) const {
    if (i < pre.size()) return pre[i];
    if (per.empty()) return 0;
    return per[(i - pre.size()) % per.size()];
  }

  bool operator==(const DigitWord& o) const {
    return pre == o.pre && per == o.per && truncated == o.truncated;
  }
};

// Canonical form: primitive period, period rotated as far left as possible
// (pre never ends with the digit the period ends with), all-zero period
// collapsed to a finite word, finite words stripped of trailing zeros.
DigitWord normalize(DigitWord w);

DigitWord finite_word(std::vector<int> digits);
DigitWord periodic_word(std::vector<int> pre, std::vector<int> per);

// Drops the first k digits (still canonical afterwards).
DigitWord shift_word(const DigitWord& w, size_t k);

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Comparison of infinite digit streams. The witness, when non-null, is set
// to the first differing position (1-based) for LT/GT and left alone on EQ.
// Words must be decided (not truncated); callers guard that.
Cmp lex_compare(const DigitWord& u, const DigitWord& v,
                size_t* witness = nullptr);

// Alternate order: at the first differing position i (1-based), the word
// with the larger digit is the smaller word when i is odd, the larger word
// when i is even.
Cmp alt_compare(const DigitWord& u, const DigitWord& v,
                size_t* witness = nullptr);

inline bool alt_less(const DigitWord& u, const DigitWord& v) {
  return alt_compare(u, v) == Cmp::LT;
}

// Digit-level form of the same rule: given the first difference at 0-based
// offset j with digits a (left word) and b (right word), true when the left
// word is alternate-smaller.
inline bool alt_less_at(size_t j, int a, int b) {
  return (j % 2 == 0) ? a > b : a < b;
}

// Alternate order on equal-length finite strings (compared as blocks, i.e.
// as the words they start; ties broken equal).
Cmp alt_compare_strings(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace negabeta
