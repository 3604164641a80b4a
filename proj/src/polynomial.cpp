#include "negabeta/polynomial.hpp"

#include <algorithm>

#include "negabeta/errors.hpp"

namespace negabeta {

Poly Poly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v = -v;
  return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(), *this};
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo(degree() - d.degree() + 1, Rat(0));
  const Rat dl = d.lead();
  for (int i = degree(); i >= d.degree(); --i) {
    Rat f = rem[i] / dl;
    if (f == 0) continue;
    quo[i - d.degree()] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= f * d.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lead());
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::eval_real(const Real& x) const {
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + to_real(*it);
  return acc;
}

CReal Poly::eval_creal(const CReal& x) const {
  CReal acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + CReal(*it);
  return acc;
}

std::pair<Rat, Rat> Poly::eval_interval(const Rat& lo, const Rat& hi) const {
  if (is_zero()) return {Rat(0), Rat(0)};
  Rat a = c_.back(), b = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    Rat p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
    a = mn + *it;
    b = mx + *it;
  }
  return {a, b};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();  // normalize to tame coefficient growth
  }
  return a.is_zero() ? a : a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return (p / g).monic();
}

Rat cauchy_root_bound(const Poly& p) {
  if (p.degree() <= 0) return Rat(1);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i)
    m = std::max(m, rat_abs(p.coeff(i) / p.lead()));
  return m + 1;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain[chain.size() - 1];
    Poly r = a % b;
    if (r.is_zero()) break;
    Poly next = -r;
    // positive scaling keeps every sign pattern intact and numbers small
    next = next * (Rat(1) / rat_abs(next.lead()));
    chain.push_back(std::move(next));
  }
  return chain;
}

namespace {
int sign_of(const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
  int variations = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}
}  // namespace

int sturm_count(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

namespace {
// Pick a sample point in (lo, hi) that is not a root of p; used so that all
// bisection endpoints keep nonzero polynomial values, where Sturm counting
// is unambiguous.
Rat nonroot_midpoint(const Poly& p, const Rat& lo, const Rat& hi, bool& hit,
                     Rat& root) {
  Rat mid = (lo + hi) / 2;
  Rat step = (hi - lo) / 1000003;
  for (int tries = 0; tries < 64; ++tries) {
    Rat v = p.eval(mid);
    if (v != 0) {
      hit = false;
      return mid;
    }
    hit = true;
    root = mid;
    mid += step;
    if (mid >= hi) mid = (root + hi) / 2;
  }
  fail(ErrorKind::DegenerateDegree, "could not find non-root sample point");
}
}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.degree() <= 0) return out;
  Poly sf = squarefree_part(p);
  if (sf.degree() == 1) {
    Rat r = -sf.coeff(0) / sf.coeff(1);
    out.emplace_back(r, r);
    return out;
  }
  std::vector<Poly> chain = sturm_chain(sf);
  Rat bound = cauchy_root_bound(sf) + 1;
  // Both endpoints exceed the root bound, so sf is nonzero there.
  struct Seg {
    Rat lo, hi;
    int count;
  };
  std::vector<Seg> stack;
  int total = sturm_count(chain, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 && sf.eval(s.lo) != 0 && sf.eval(s.hi) != 0 &&
        sign_of(sf.eval(s.lo)) != sign_of(sf.eval(s.hi))) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    bool hit = false;
    Rat root(0);
    Rat mid = nonroot_midpoint(sf, s.lo, s.hi, hit, root);
    if (hit) out.emplace_back(root, root);
    int left = sturm_count(chain, s.lo, mid);
    if (hit) left -= 1;  // the exact root found lies in (s.lo, mid)
    int right = s.count - left - (hit ? 1 : 0);
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (right > 0) stack.push_back({mid, s.hi, right});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rat, Rat> refine_root_interval(const Poly& p, Rat lo, Rat hi,
                                         const Rat& width) {
  if (lo == hi) return {lo, hi};
  int slo = sign_of(p.eval(lo));
  int shi = sign_of(p.eval(hi));
  if (slo == 0) return {lo, lo};
  if (shi == 0) return {hi, hi};
  while (hi - lo >= width) {
    Rat mid = (lo + hi) / 2;
    int sm = sign_of(p.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace negabeta
