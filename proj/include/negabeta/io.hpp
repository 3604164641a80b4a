#pragma once

#include <string>
#include <vector>

#include "negabeta/base.hpp"
#include "negabeta/expansion.hpp"

namespace negabeta {

// "x^3 - x^2 - x - 1" -> {-1, -1, -1, 1} (ascending). The variable may be
// any alphabetic name; coefficients are integers. Throws ParseError.
std::vector<Int> parse_poly_coeffs(const std::string& text);

// Display form with descending powers of x, e.g. "x^3-x^2-x-1".
std::string poly_text(const std::vector<Int>& coeffs);

// Digit words. Digits are concatenated when every digit is below ten,
// comma-separated otherwise; an eventually periodic tail sits in
// parentheses and a truncated word ends in "...": "10(1)", "0,12(3,1)".
std::string word_text(const DigitWord& w);
DigitWord parse_word(const std::string& text);

// Pointed form: integer-part digits, a bullet, then the fractional tail
// (omitted when zero): "110*", "11*0(1)" with * standing for the UTF-8
// bullet U+2022. Plain '.' is accepted on input where the bullet appears
// on output.
std::string pointed_text(const PointedWord& w);

// A value in the field: a rational ("-3/4") or a polynomial in the root
// symbol with rational coefficients ("b^2-b", "1+2*b", any variable name).
FieldElement parse_value(const BasePtr& ctx, const std::string& text);

// One flag set shared by every subcommand; config files and the
// environment fill the same fields. Precedence: defaults, then
// NEGABETA_PRECISION_BITS, then the config file, then explicit flags.
struct RunConfig {
  std::string base_poly;
  std::string root_selector;  // "" or "largest", else 0-based real-root index
  std::string sign = "neg";   // pos | neg
  unsigned precision_bits = 4096;
  size_t orbit_budget = 10000;
  unsigned embed_bits = 128;
  size_t horizon = 12;
  std::string out_path;
  std::string out_format;
  bool pretty = false;
};

// Flat key=value lines, '#' comments. Keys mirror the long flags (poly,
// root, sign, precision-bits, orbit-budget, embed-bits, horizon, out,
// format, pretty). Unknown keys and bad values throw ParseError naming
// the key; `base` supplies the values the file leaves unset.
RunConfig load_config(const std::string& path, RunConfig base = {});

// Applies recognized environment variables onto cfg.
void apply_env(RunConfig& cfg);

// Builds the algebraic base the config describes. ParseError on a bad
// polynomial or root selector.
BasePtr context_from(const RunConfig& cfg);

}  // namespace negabeta
