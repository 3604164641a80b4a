#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negabeta/base.hpp"
#include "negabeta/integer_sets.hpp"

namespace negabeta {

// Identifies gap letters whose exact distances coincide. rep(k) is the
// least letter with the same distance as k; the table grows on demand, so
// every comparison stays exact.
class GapProjection {
 public:
  explicit GapProjection(BasePtr ctx);
  int rep(size_t k);
  std::vector<int> apply(const std::vector<int>& word);
  const FieldElement& delta(size_t k);

 private:
  void extend(size_t k);
  BasePtr ctx_;
  std::vector<FieldElement> delta_;
  std::vector<int> rep_;
};

struct Morphism {
  std::vector<int> alphabet;  // sorted
  std::string kind;
  bool antimorphism = false;
  std::map<int, std::vector<int>> rules;

  const std::vector<int>& image(int letter) const;
  // Letterwise application; an antimorphism reverses the block order.
  std::vector<int> apply(const std::vector<int>& word) const;
};

// Image of gap letter k under multiplication by -beta: take one canonical
// adjacent pair of same-length blocks whose first difference sits at scale
// k (the boundary between the two leading-digit groups highest in
// alternate order), shift both by one digit, and read off the gaps of
// every valid block between them, in increasing value.
std::vector<int> gap_image_word(const BasePtr& ctx, size_t k);

// Antimorphism phi on distance representatives: phi(k) is the projected
// gap_image_word. The projected two-sided gap word is reversed by -beta,
// hence fixed by psi = phi^2, an ordinary morphism. NotSofic if new
// distance values keep appearing past the horizon; CommutationFailed if
// projecting the raw images is inconsistent on some class.
Morphism phi_morphism(const BasePtr& ctx, size_t horizon = 12);
Morphism psi_morphism(const BasePtr& ctx, size_t horizon = 12);

// Substitution of the positive base read off the expansion of 1
// (t_1 .. t_m finite: i -> 0^{t_{i+1}} (i+1), last -> 0^{t_m}; with a
// period of length p the last of m+p letters wraps to 0^{t_{m+p}} m).
Morphism canonical_substitution(const BasePtr& ctx);

// outer(inner(.)) for two ordinary morphisms.
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism canonical_substitution_squared(const BasePtr& ctx);

// Gap letters of the integer window around the origin, at least min_letters
// per side. left ends with the gap just below 0, right starts with the gap
// at 0; raw letters come from the enumerated blocks, the others are their
// projections.
struct GapBiword {
  std::vector<int> left_raw, right_raw;
  std::vector<int> left, right;
};

GapBiword fixed_biword(const BasePtr& ctx, size_t min_letters);

// Projected raw image of every letter k <= horizon equals the morphism rule
// of its representative.
bool check_commutation(const BasePtr& ctx, size_t horizon = 12);

// Does psi map the biword onto itself around the origin?
bool check_biword_fixed(const GapBiword& w, const Morphism& psi);

// Shortest w with w . m1(a) == m2(a) . w for every letter a, searched up to
// maxlen; nullopt when none exists in range.
std::optional<std::vector<int>> conjugacy_witness(const Morphism& m1,
                                                  const Morphism& m2,
                                                  size_t maxlen);

// M[i][j] = occurrences of alphabet[i] in the image of alphabet[j].
std::vector<std::vector<Int>> incidence_matrix(const Morphism& m);
// Some power of the incidence matrix is strictly positive.
bool is_primitive(const Morphism& m);
// Perron frequency vector of the letters (power iteration; approximate).
std::vector<double> letter_frequencies(const Morphism& m);

}  // namespace negabeta
