#include "negabeta/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

const char* kBullet = "\xe2\x80\xa2";

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string strip_space(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// One parser for polynomials (integer coefficients) and field values
// (rational coefficients): a sum of terms  [+|-] [num] [*] [var [^exp]].
std::vector<Rat> parse_terms(const std::string& raw, bool allow_fractions,
                             const std::string& what) {
  std::string s = strip_space(raw);
  if (s.empty()) fail(ErrorKind::ParseError, what + ": empty input");
  std::vector<Rat> coeffs;
  std::string var_seen;
  size_t i = 0;
  auto bump = [&](size_t e, const Rat& c) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, Rat(0));
    coeffs[e] += c;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    bool have_num = false;
    Rat coeff(1);
    if (i < s.size() && is_digit(s[i])) {
      size_t j = i;
      while (j < s.size() && is_digit(s[j])) ++j;
      std::string num = s.substr(i, j - i);
      i = j;
      if (i < s.size() && s[i] == '/') {
        if (!allow_fractions)
          fail(ErrorKind::ParseError,
               what + ": fractional coefficient '" + num + "/...'");
        ++i;
        size_t k = i;
        while (k < s.size() && is_digit(s[k])) ++k;
        if (k == i) fail(ErrorKind::ParseError, what + ": missing denominator");
        std::string den = s.substr(i, k - i);
        i = k;
        if (Int(den) == 0)
          fail(ErrorKind::ParseError, what + ": zero denominator");
        coeff = Rat(Int(num), Int(den));
      } else {
        coeff = Rat(Int(num));
      }
      have_num = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    size_t exp = 0;
    bool have_var = false;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() &&
             std::isalpha(static_cast<unsigned char>(s[j])))
        ++j;
      std::string name = s.substr(i, j - i);
      i = j;
      if (var_seen.empty())
        var_seen = name;
      else if (var_seen != name)
        fail(ErrorKind::ParseError,
             what + ": mixed variable names '" + var_seen + "' and '" +
                 name + "'");
      exp = 1;
      have_var = true;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        while (k < s.size() && is_digit(s[k])) ++k;
        if (k == i)
          fail(ErrorKind::ParseError, what + ": missing exponent after '^'");
        long e = std::stol(s.substr(i, k - i));
        if (e > 1024)
          fail(ErrorKind::ParseError, what + ": exponent too large");
        exp = static_cast<size_t>(e);
        i = k;
      }
    }
    if (!have_num && !have_var)
      fail(ErrorKind::ParseError,
           what + ": expected a term at '" + s.substr(i) + "'");
    bump(exp, sign * coeff);
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::vector<int> parse_digit_run(const std::string& s,
                                 const std::string& what) {
  std::vector<int> out;
  if (s.empty()) return out;
  if (s.find(',') != std::string::npos) {
    size_t i = 0;
    while (i <= s.size()) {
      size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      std::string tok = s.substr(i, j - i);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), is_digit))
        fail(ErrorKind::ParseError, what + ": bad digit token '" + tok + "'");
      out.push_back(std::stoi(tok));
      i = j + 1;
    }
  } else {
    for (char c : s) {
      if (!is_digit(c))
        fail(ErrorKind::ParseError,
             what + std::string(": unexpected character '") + c + "'");
      out.push_back(c - '0');
    }
  }
  return out;
}

std::string join_digits(const std::vector<int>& d, bool commas) {
  std::string out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

bool needs_commas(const DigitWord& w) {
  for (int d : w.pre)
    if (d > 9) return true;
  for (int d : w.per)
    if (d > 9) return true;
  return false;
}

unsigned parse_unsigned(const std::string& v, const std::string& key) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), is_digit))
    fail(ErrorKind::ParseError, "bad number for '" + key + "': '" + v + "'");
  return static_cast<unsigned>(std::stoul(v));
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::vector<Int> parse_poly_coeffs(const std::string& text) {
  std::vector<Rat> q = parse_terms(text, false, "polynomial");
  std::vector<Int> out;
  out.reserve(q.size());
  for (const Rat& c : q) out.push_back(numerator(c));
  return out;
}

std::string poly_text(const std::vector<Int>& coeffs) {
  std::string out;
  for (size_t idx = coeffs.size(); idx-- > 0;) {
    const Int& c = coeffs[idx];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (a != 1 || idx == 0) out += a.str();
    if (idx >= 1) out += "x";
    if (idx >= 2) out += "^" + std::to_string(idx);
  }
  if (out.empty()) out = "0";
  return out;
}

std::string word_text(const DigitWord& w) {
  bool commas = needs_commas(w);
  std::string out = join_digits(w.pre, commas);
  if (!w.per.empty()) {
    out += "(";
    out += join_digits(w.per, commas);
    out += ")";
  }
  if (out.empty()) out = "0";
  if (w.truncated) out += "...";
  return out;
}

DigitWord parse_word(const std::string& text) {
  std::string s = strip_space(text);
  DigitWord w;
  if (s.size() >= 3 && s.substr(s.size() - 3) == "...") {
    w.truncated = true;
    s = s.substr(0, s.size() - 3);
  }
  size_t open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')' || s.find(')') != s.size() - 1)
      fail(ErrorKind::ParseError, "word: unbalanced period parentheses");
    std::string per = s.substr(open + 1, s.size() - open - 2);
    if (per.empty()) fail(ErrorKind::ParseError, "word: empty period");
    w.per = parse_digit_run(per, "word");
    s = s.substr(0, open);
  } else if (s.find(')') != std::string::npos) {
    fail(ErrorKind::ParseError, "word: stray ')'");
  }
  w.pre = parse_digit_run(s, "word");
  return w;
}

std::string pointed_text(const PointedWord& pw) {
  DigitWord frac = shift_word(pw.word, pw.int_len);
  bool commas = needs_commas(pw.word);
  std::string out;
  if (pw.int_len == 0) {
    out = "0";
  } else {
    std::vector<int> head;
    for (size_t i = 0; i < pw.int_len; ++i) head.push_back(pw.word.digit_at(i));
    out = join_digits(head, commas);
  }
  out += kBullet;
  bool frac_empty = frac.pre.empty() && frac.per.empty();
  if (!frac_empty || frac.truncated) out += word_text(frac);
  return out;
}

FieldElement parse_value(const BasePtr& ctx, const std::string& text) {
  std::vector<Rat> coeffs = parse_terms(text, true, "value");
  FieldElement b = FieldElement::beta(ctx);
  FieldElement acc = FieldElement::zero(ctx);
  for (size_t idx = coeffs.size(); idx-- > 0;)
    acc = acc * b + FieldElement::from_rat(ctx, coeffs[idx]);
  return acc;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open config '" + path + "'");
  RunConfig cfg = base;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::ParseError, "config line without '=': '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "poly") {
      cfg.base_poly = val;
    } else if (key == "root") {
      cfg.root_selector = val;
    } else if (key == "sign") {
      if (val != "pos" && val != "neg")
        fail(ErrorKind::ParseError, "bad value for 'sign': '" + val + "'");
      cfg.sign = val;
    } else if (key == "precision-bits") {
      cfg.precision_bits = parse_unsigned(val, key);
    } else if (key == "orbit-budget") {
      cfg.orbit_budget = parse_unsigned(val, key);
    } else if (key == "embed-bits") {
      cfg.embed_bits = parse_unsigned(val, key);
    } else if (key == "horizon") {
      cfg.horizon = parse_unsigned(val, key);
    } else if (key == "out") {
      cfg.out_path = val;
    } else if (key == "format") {
      cfg.out_format = val;
    } else if (key == "pretty") {
      if (val == "true" || val == "1" || val == "on" || val == "yes")
        cfg.pretty = true;
      else if (val == "false" || val == "0" || val == "off" || val == "no")
        cfg.pretty = false;
      else
        fail(ErrorKind::ParseError, "bad value for 'pretty': '" + val + "'");
    } else {
      fail(ErrorKind::ParseError, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

void apply_env(RunConfig& cfg) {
  if (const char* bits = std::getenv("NEGABETA_PRECISION_BITS"))
    cfg.precision_bits = parse_unsigned(bits, "NEGABETA_PRECISION_BITS");
}

BasePtr context_from(const RunConfig& cfg) {
  if (cfg.base_poly.empty())
    fail(ErrorKind::ParseError, "no base polynomial given (use --poly)");
  std::vector<Int> coeffs = parse_poly_coeffs(cfg.base_poly);
  BaseOptions opt;
  opt.precision_bits = cfg.precision_bits;
  opt.orbit_budget = cfg.orbit_budget;
  opt.embed_bits = cfg.embed_bits;
  if (!cfg.root_selector.empty() && cfg.root_selector != "largest") {
    const std::string& r = cfg.root_selector;
    if (!std::all_of(r.begin(), r.end(), is_digit))
      fail(ErrorKind::ParseError, "bad root selector '" + r + "'");
    opt.root_index = std::stoi(r);
  }
  return make_base(coeffs, opt);
}

}  // namespace negabeta
