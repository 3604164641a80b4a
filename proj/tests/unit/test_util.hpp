#pragma once

#include <vector>

#include "negabeta/base.hpp"

// Coefficient lists (ascending degree) for the bases exercised across the
// test suite, named by the customary name of the root where one exists.

inline std::vector<negabeta::Int> tribonacci_poly() { return {-1, -1, -1, 1}; }
inline std::vector<negabeta::Int> plastic_poly() { return {-1, -1, 0, 1}; }
inline std::vector<negabeta::Int> golden_poly() { return {-1, -1, 1}; }
inline std::vector<negabeta::Int> silver_poly() { return {-1, -2, 1}; }
inline std::vector<negabeta::Int> base_two_poly() { return {-2, 1}; }
// x^3 - 2x^2 - x + 1, root ~2.2470
inline std::vector<negabeta::Int> cubic_2470_poly() { return {1, -1, -2, 1}; }
// x^2 - 3x - 1, root ~3.3028
inline std::vector<negabeta::Int> quad_3303_poly() { return {-1, -3, 1}; }
// x^2 - 3x + 1, root ~2.6180 (golden ratio squared)
inline std::vector<negabeta::Int> golden_sq_poly() { return {1, -3, 1}; }
// x^4 - 3x^3 + 2x^2 - 2x + 1, root ~2.4487 (even reference period)
inline std::vector<negabeta::Int> quartic_even_poly() {
  return {1, -2, 2, -3, 1};
}
// x^4 - 4x^3 + 2x^2 - x - 1, root ~3.5371 (odd reference period)
inline std::vector<negabeta::Int> quartic_odd_poly() {
  return {-1, -1, 2, -4, 1};
}
// x^3 - 3x^2 - 2x + 1, root ~3.4909 (finite reference word, small last digit)
inline std::vector<negabeta::Int> cubic_3491_poly() { return {1, -2, -3, 1}; }

inline negabeta::BasePtr mk(const std::vector<negabeta::Int>& coeffs,
                            negabeta::BaseOptions opt = {}) {
  return negabeta::make_base(coeffs, opt);
}
