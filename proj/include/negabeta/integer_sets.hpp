#pragma once

#include <optional>
#include <vector>

#include "negabeta/admissibility.hpp"
#include "negabeta/base.hpp"
#include "negabeta/expansion.hpp"

namespace negabeta {

// Whether the set of negative-base integers collapses to {0}. Decided by
// the prefix shape 1 0^{2t} 1 of the reference word; cross-checked against
// the exact sign of beta^2 - beta - 1 (collapse happens exactly below the
// golden ratio).
bool negbeta_integers_trivial(const BasePtr& ctx);

// Alternate-minimal / maximal strings of length k among valid length-k
// digit blocks (leading zeros allowed). Computed greedily; see also the
// closed forms used for cross-checking in the tests.
std::vector<int> min_word(const BasePtr& ctx, size_t k);
std::vector<int> max_word(const BasePtr& ctx, size_t k);

// All valid length-k blocks, alternate-increasing.
std::vector<std::vector<int>> all_blocks(const BasePtr& ctx, size_t k);

// Valid length-k blocks s with lo <=_alt s <=_alt hi (block comparison),
// alternate-increasing. The bounds need not be valid blocks themselves.
std::vector<std::vector<int>> blocks_in_interval(const BasePtr& ctx, size_t k,
                                                 const std::vector<int>& lo,
                                                 const std::vector<int>& hi);

// Alternate-least (least=true) or -greatest valid block of length k among
// those with the given leading digit; empty when none starts with it.
std::vector<int> extremal_block_with_first(const BasePtr& ctx, size_t k,
                                           bool least, int first);

// Scale of the first difference between the blocks of two consecutive
// integers: position counted from the low-order end, after left-padding the
// shorter block with zeros.
size_t gap_letter(const std::vector<int>& a, const std::vector<int>& b);

enum class DeltaMethod {
  Auto,
  Definition,   // |(-beta)^k + value(min(k)) - value(max(k))|
  Series,       // digit-difference series (needs the infinite hypothesis)
  Orbit,        // |(-1)^k + T^{k-1}(l) - T^k(l)| (same hypothesis)
  FiniteTable,  // case table for finite reference words
};

// Distance between consecutive negative-base integers at scale k (the gap
// coded by letter k). Exact.
FieldElement delta_gap(const BasePtr& ctx, size_t k,
                       DeltaMethod method = DeltaMethod::Auto);

// Structured description of which gaps provably coincide, derived from the
// period parity of the reference word and verified exactly.
struct GapCoincidence {
  size_t k_from = 0;
  size_t k_to = 0;
  bool reflected = false;  // value is 2 - delta(k_to) instead of delta(k_to)
};

std::vector<GapCoincidence> gap_coincidences(const BasePtr& ctx, size_t kmax);

struct IntegerPoint {
  std::vector<int> digits;  // canonical block, no leading zeros ("0" for 0)
  FieldElement value;
};

struct IntegerWindow {
  std::vector<IntegerPoint> points;  // sorted by value
  std::vector<size_t> gap_letters;   // letter between points[i], points[i+1]
};

// Negative-base integers with |value| <= radius, sorted ascending, with the
// letter sequence of consecutive gaps. TrivialSet when the set is {0}.
IntegerWindow enumerate_negbeta_integers(const BasePtr& ctx, const Rat& radius);

// Positive-base integers in [0, radius]; symmetric adds their negatives
// (same digit blocks, mirrored values).
IntegerWindow enumerate_renyi_integers(const BasePtr& ctx, const Rat& radius,
                                       bool symmetric = false);

// Gap after a positive-base integer with letter k: the tail value
// sum_{j>=1} t_{k+j} beta^{-j} of the quasi-greedy expansion of 1.
FieldElement delta_gap_renyi(const BasePtr& ctx, size_t k);

// Smallest window holding at least `count` points.
IntegerWindow window_with_count(const BasePtr& ctx, size_t count, bool negative);

}  // namespace negabeta
