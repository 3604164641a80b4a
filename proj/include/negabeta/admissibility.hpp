#pragma once

#include "negabeta/base.hpp"
#include "negabeta/expansion.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

struct AdmissibilityResult {
  bool admissible = true;
  // On failure: which suffix broke the window (0-based start within the
  // word) and the 1-based digit position inside that suffix where the
  // comparison was decided. Range violations report position 1.
  size_t suffix_index = 0;
  size_t position = 0;

  explicit operator bool() const { return admissible; }
};

// Validity in the negative base: every suffix s of w (as an infinite word)
// satisfies reference_l <=_alt s <_alt reference_r_star, and digits lie in
// [0, floor(beta)].
AdmissibilityResult is_admissible_negbeta(const BasePtr& ctx,
                                          const DigitWord& w);

// Validity in the positive base: every suffix is lex-smaller than the
// quasi-greedy expansion of 1, digits in [0, ceil(beta)-1].
AdmissibilityResult is_admissible_renyi(const BasePtr& ctx,
                                        const DigitWord& w);

// Finite strings are read as w 0^inf.
AdmissibilityResult is_admissible_negbeta(const BasePtr& ctx,
                                          const std::vector<int>& digits);
AdmissibilityResult is_admissible_renyi(const BasePtr& ctx,
                                        const std::vector<int>& digits);

}  // namespace negabeta
