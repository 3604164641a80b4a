#include "negabeta/admissibility.hpp"

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

// Number of distinct suffixes of an eventually periodic word.
size_t suffix_count(const DigitWord& w) {
  return w.pre.size() + (w.per.empty() ? 1 : w.per.size());
}

AdmissibilityResult fail_at(size_t suffix, size_t pos) {
  AdmissibilityResult r;
  r.admissible = false;
  r.suffix_index = suffix;
  r.position = pos;
  return r;
}

}  // namespace

AdmissibilityResult is_admissible_negbeta(const BasePtr& ctx,
                                          const DigitWord& w) {
  if (w.truncated)
    fail(ErrorKind::UndecidedReference, "cannot test a truncated word");
  const DigitWord& lo = reference_l(ctx);
  const DigitWord& hi = reference_r_star(ctx);
  if (lo.truncated)
    fail(ErrorKind::UndecidedReference,
         "reference word undecided within the budget");

  int maxd = negbeta_max_digit(ctx);
  for (size_t i = 0; i < w.pre.size(); ++i)
    if (w.pre[i] < 0 || w.pre[i] > maxd) return fail_at(i, 1);
  for (size_t i = 0; i < w.per.size(); ++i)
    if (w.per[i] < 0 || w.per[i] > maxd)
      return fail_at(w.pre.size() + i, 1);

  size_t n = suffix_count(w);
  for (size_t i = 0; i < n; ++i) {
    DigitWord s = shift_word(w, i);
    size_t witness = 0;
    if (alt_compare(s, lo, &witness) == Cmp::LT) return fail_at(i, witness);
    Cmp up = alt_compare(s, hi, &witness);
    if (up == Cmp::GT) return fail_at(i, witness);
    if (up == Cmp::EQ) return fail_at(i, 0);  // must stay strictly below
  }
  return {};
}

AdmissibilityResult is_admissible_renyi(const BasePtr& ctx,
                                        const DigitWord& w) {
  if (w.truncated)
    fail(ErrorKind::UndecidedReference, "cannot test a truncated word");
  const DigitWord& hi = renyi_one_star(ctx);

  int maxd = renyi_max_digit(ctx);
  for (size_t i = 0; i < w.pre.size(); ++i)
    if (w.pre[i] < 0 || w.pre[i] > maxd) return fail_at(i, 1);
  for (size_t i = 0; i < w.per.size(); ++i)
    if (w.per[i] < 0 || w.per[i] > maxd)
      return fail_at(w.pre.size() + i, 1);

  size_t n = suffix_count(w);
  for (size_t i = 0; i < n; ++i) {
    DigitWord s = shift_word(w, i);
    size_t witness = 0;
    Cmp c = lex_compare(s, hi, &witness);
    if (c == Cmp::GT) return fail_at(i, witness);
    if (c == Cmp::EQ) return fail_at(i, 0);
  }
  return {};
}

AdmissibilityResult is_admissible_negbeta(const BasePtr& ctx,
                                          const std::vector<int>& digits) {
  DigitWord w;
  w.pre = digits;
  return is_admissible_negbeta(ctx, normalize(std::move(w)));
}

AdmissibilityResult is_admissible_renyi(const BasePtr& ctx,
                                        const std::vector<int>& digits) {
  DigitWord w;
  w.pre = digits;
  return is_admissible_renyi(ctx, normalize(std::move(w)));
}

}  // namespace negabeta
