#include "negabeta/words.hpp"

#include <algorithm>
#include <numeric>

namespace negabeta {

namespace {
bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
}

// Smallest q dividing |per| such that per is q-periodic.
size_t primitive_period(const std::vector<int>& per) {
  size_t n = per.size();
  for (size_t q = 1; q <= n; ++q) {
    if (n % q != 0) continue;
    bool ok = true;
    for (size_t i = q; i < n && ok; ++i) ok = per[i] == per[i - q];
    if (ok) return q;
  }
  return n;
}
}  // namespace

DigitWord normalize(DigitWord w) {
  if (!w.per.empty()) {
    size_t q = primitive_period(w.per);
    w.per.resize(q);
    if (all_zero(w.per)) {
      w.per.clear();
    } else {
      // absorb matching tail of pre into the cycle
      while (!w.pre.empty() && w.pre.back() == w.per.back()) {
        w.pre.pop_back();
        std::rotate(w.per.begin(), w.per.end() - 1, w.per.end());
      }
    }
  }
  if (w.per.empty()) {
    while (!w.pre.empty() && w.pre.back() == 0) w.pre.pop_back();
  }
  return w;
}

DigitWord finite_word(std::vector<int> digits) {
  DigitWord w;
  w.pre = std::move(digits);
  return normalize(std::move(w));
}

DigitWord periodic_word(std::vector<int> pre, std::vector<int> per) {
  DigitWord w;
  w.pre = std::move(pre);
  w.per = std::move(per);
  return normalize(std::move(w));
}

DigitWord shift_word(const DigitWord& w, size_t k) {
  DigitWord r;
  r.truncated = w.truncated;
  if (k <= w.pre.size()) {
    r.pre.assign(w.pre.begin() + k, w.pre.end());
    r.per = w.per;
  } else if (!w.per.empty()) {
    size_t off = (k - w.pre.size()) % w.per.size();
    r.per.assign(w.per.begin() + off, w.per.end());
    r.per.insert(r.per.end(), w.per.begin(), w.per.begin() + off);
  }
  return normalize(std::move(r));
}

namespace {
size_t compare_horizon(const DigitWord& u, const DigitWord& v) {
  size_t pu = u.per.empty() ? 1 : u.per.size();
  size_t pv = v.per.empty() ? 1 : v.per.size();
  size_t l = std::lcm(pu, pv);
  return u.pre.size() + v.pre.size() + l + 1;
}
}  // namespace

Cmp lex_compare(const DigitWord& u, const DigitWord& v, size_t* witness) {
  size_t h = compare_horizon(u, v);
  for (size_t i = 0; i < h; ++i) {
    int a = u.digit_at(i), b = v.digit_at(i);
    if (a != b) {
      if (witness) *witness = i + 1;
      return a < b ? Cmp::LT : Cmp::GT;
    }
  }
  return Cmp::EQ;
}

Cmp alt_compare(const DigitWord& u, const DigitWord& v, size_t* witness) {
  size_t h = compare_horizon(u, v);
  for (size_t i = 0; i < h; ++i) {
    int a = u.digit_at(i), b = v.digit_at(i);
    if (a != b) {
      if (witness) *witness = i + 1;
      return alt_less_at(i, a, b) ? Cmp::LT : Cmp::GT;
    }
  }
  return Cmp::EQ;
}

Cmp alt_compare_strings(const std::vector<int>& u, const std::vector<int>& v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    if (u[i] != v[i])
      return alt_less_at(i, u[i], v[i]) ? Cmp::LT : Cmp::GT;
  }
  // equal on the overlap; compare the zero-padded remainders
  const std::vector<int>& rest = u.size() > v.size() ? u : v;
  bool rest_is_u = u.size() > v.size();
  for (size_t i = n; i < rest.size(); ++i) {
    if (rest[i] != 0) {
      bool rest_less = alt_less_at(i, rest[i], 0);
      if (rest_is_u) return rest_less ? Cmp::LT : Cmp::GT;
      return rest_less ? Cmp::GT : Cmp::LT;
    }
  }
  return Cmp::EQ;
}

}  // namespace negabeta
