#include "negabeta/morphisms.hpp"

#include <algorithm>
#include <sstream>

#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"

namespace negabeta {

GapProjection::GapProjection(BasePtr ctx) : ctx_(std::move(ctx)) {}

void GapProjection::extend(size_t k) {
  while (delta_.size() <= k) {
    size_t i = delta_.size();
    delta_.push_back(delta_gap(ctx_, i, DeltaMethod::Definition));
    int r = static_cast<int>(i);
    for (size_t j = 0; j < i; ++j) {
      if (delta_[j] == delta_[i]) {
        r = static_cast<int>(j);
        break;
      }
    }
    rep_.push_back(r);
  }
}

int GapProjection::rep(size_t k) {
  extend(k);
  return rep_[k];
}

const FieldElement& GapProjection::delta(size_t k) {
  extend(k);
  return delta_[k];
}

std::vector<int> GapProjection::apply(const std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int a : word) out.push_back(rep(static_cast<size_t>(a)));
  return out;
}

const std::vector<int>& Morphism::image(int letter) const {
  auto it = rules.find(letter);
  if (it == rules.end())
    fail(ErrorKind::OutOfDomain, "letter outside the morphism alphabet");
  return it->second;
}

std::vector<int> Morphism::apply(const std::vector<int>& word) const {
  std::vector<int> out;
  if (antimorphism) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto& img = image(*it);
      out.insert(out.end(), img.begin(), img.end());
    }
  } else {
    for (int a : word) {
      const auto& img = image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return out;
}

std::vector<int> gap_image_word(const BasePtr& ctx, size_t k) {
  size_t n = k + 1;
  std::vector<int> mn = min_word(ctx, n);
  int a = mn[0];
  std::vector<int> A = extremal_block_with_first(ctx, n, /*least=*/false, a);
  std::vector<int> B;
  for (int b = a - 1; b >= 0; --b) {
    B = extremal_block_with_first(ctx, n, /*least=*/true, b);
    if (!B.empty()) break;
  }
  if (A.empty() || B.empty())
    fail(ErrorKind::TrivialSet,
         "no adjacent block pair realizes this gap letter");

  A.push_back(0);
  B.push_back(0);
  std::vector<std::vector<int>> img = blocks_in_interval(ctx, n + 1, A, B);
  // Alternate order runs against the value order on odd-length blocks.
  if ((n + 1) % 2 == 1) std::reverse(img.begin(), img.end());

  std::vector<int> word;
  for (size_t i = 0; i + 1 < img.size(); ++i)
    word.push_back(static_cast<int>(gap_letter(img[i], img[i + 1])));
  return word;
}

Morphism phi_morphism(const BasePtr& ctx, size_t horizon) {
  if (negbeta_integers_trivial(ctx))
    fail(ErrorKind::TrivialSet,
         "the negative-base integers are {0}; no gap word exists");

  GapProjection proj(ctx);
  // The distance alphabet must close: past the horizon only previously
  // seen distances may occur.
  for (size_t k = horizon + 1; k <= 2 * horizon + 2; ++k) {
    if (proj.rep(k) > static_cast<int>(horizon)) {
      std::ostringstream os;
      os << "gap distance at scale " << k
         << " matches none of the first " << horizon + 1
         << "; raise the horizon or the word is not sofic";
      fail(ErrorKind::NotSofic, os.str());
    }
  }

  std::vector<int> reps;
  for (size_t k = 0; k <= horizon; ++k) reps.push_back(proj.rep(k));
  std::vector<int> alphabet = reps;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());

  Morphism phi;
  phi.kind = "phi";
  phi.antimorphism = true;
  phi.alphabet = alphabet;
  for (int r : alphabet)
    phi.rules[r] = proj.apply(gap_image_word(ctx, static_cast<size_t>(r)));

  // Well-definedness of the quotient: every letter's projected image must
  // agree with its representative's.
  for (size_t k = 0; k <= horizon; ++k) {
    int r = reps[k];
    if (static_cast<size_t>(r) == k) continue;
    if (proj.apply(gap_image_word(ctx, k)) != phi.rules[r]) {
      std::ostringstream os;
      os << "letters " << k << " and " << r
         << " share a distance but project to different images";
      fail(ErrorKind::CommutationFailed, os.str());
    }
  }
  return phi;
}

Morphism psi_morphism(const BasePtr& ctx, size_t horizon) {
  Morphism phi = phi_morphism(ctx, horizon);
  Morphism psi;
  psi.kind = "psi";
  psi.antimorphism = false;
  psi.alphabet = phi.alphabet;
  for (int a : phi.alphabet) psi.rules[a] = phi.apply(phi.image(a));
  return psi;
}

Morphism canonical_substitution(const BasePtr& ctx) {
  const DigitWord& d = renyi_one(ctx);
  if (d.truncated)
    fail(ErrorKind::UndecidedReference,
         "expansion of 1 undecided within the budget");
  size_t m = d.pre.size();
  size_t p = d.per.size();
  size_t letters = m + p;

  Morphism s;
  s.kind = "beta";
  s.antimorphism = false;
  for (size_t i = 0; i < letters; ++i) {
    std::vector<int> img(static_cast<size_t>(d.digit_at(i)), 0);
    if (i + 1 < letters)
      img.push_back(static_cast<int>(i) + 1);
    else if (p > 0)
      img.push_back(static_cast<int>(m));
    s.alphabet.push_back(static_cast<int>(i));
    s.rules[static_cast<int>(i)] = std::move(img);
  }
  return s;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism c;
  c.kind = inner.kind + "-squared";
  c.antimorphism = false;
  c.alphabet = inner.alphabet;
  for (int a : inner.alphabet) c.rules[a] = outer.apply(inner.image(a));
  return c;
}

Morphism canonical_substitution_squared(const BasePtr& ctx) {
  Morphism s = canonical_substitution(ctx);
  return compose(s, s);
}

GapBiword fixed_biword(const BasePtr& ctx, size_t min_letters) {
  // Windows need not split evenly around zero, so grow until both sides do.
  size_t want = 2 * min_letters + 4;
  IntegerWindow w;
  size_t origin = 0;
  for (int round = 0;; ++round) {
    if (round > 24) fail(ErrorKind::IoFailure, "origin-centered window stalled");
    w = window_with_count(ctx, want, true);
    origin = 0;  // index of the zero point
    while (origin < w.points.size() && w.points[origin].value.sign() < 0)
      ++origin;
    if (origin == w.points.size() || w.points[origin].value.sign() != 0)
      fail(ErrorKind::TrivialSet, "window does not straddle the origin");
    size_t right = w.gap_letters.size() - origin;
    if (origin >= min_letters && right >= min_letters) break;
    want += want / 2 + 4;
  }

  GapBiword bw;
  for (size_t i = 0; i < w.gap_letters.size(); ++i) {
    int letter = static_cast<int>(w.gap_letters[i]);
    if (i < origin)
      bw.left_raw.push_back(letter);
    else
      bw.right_raw.push_back(letter);
  }
  GapProjection proj(ctx);
  bw.left = proj.apply(bw.left_raw);
  bw.right = proj.apply(bw.right_raw);
  return bw;
}

bool check_commutation(const BasePtr& ctx, size_t horizon) {
  Morphism phi = phi_morphism(ctx, horizon);
  GapProjection proj(ctx);
  for (size_t k = 0; k <= horizon; ++k) {
    if (proj.apply(gap_image_word(ctx, k)) != phi.image(proj.rep(k)))
      return false;
  }
  return true;
}

bool check_biword_fixed(const GapBiword& w, const Morphism& psi) {
  if (w.right.empty() || w.left.empty()) return false;
  // Right of the origin: psi(u_0) psi(u_1) ... must reproduce the side.
  size_t pos = 0;
  for (size_t i = 0; pos < w.right.size(); ++i) {
    if (i >= w.right.size()) return false;
    for (int b : psi.image(w.right[i])) {
      if (pos == w.right.size()) break;
      if (w.right[pos] != b) return false;
      ++pos;
    }
  }
  // Left: ... psi(u_{-2}) psi(u_{-1}) aligned so the last block ends at the
  // origin; compare from the origin leftwards while data lasts.
  size_t done = 0;
  for (size_t i = w.left.size(); i-- > 0 && done < w.left.size();) {
    const auto& img = psi.image(w.left[i]);
    for (size_t j = img.size(); j-- > 0 && done < w.left.size();) {
      size_t idx = w.left.size() - 1 - done;
      if (w.left[idx] != img[j]) return false;
      ++done;
    }
  }
  return true;
}

std::optional<std::vector<int>> conjugacy_witness(const Morphism& m1,
                                                  const Morphism& m2,
                                                  size_t maxlen) {
  if (m1.antimorphism || m2.antimorphism)
    fail(ErrorKind::OutOfDomain,
         "conjugacy search expects ordinary morphisms");
  const std::vector<int>& sigma = m2.alphabet;
  std::vector<int> w;
  // Depth-first over words in lexicographic order, shortest first.
  for (size_t len = 0; len <= maxlen; ++len) {
    std::vector<size_t> idx(len, 0);
    while (true) {
      w.clear();
      for (size_t i = 0; i < len; ++i) w.push_back(sigma[idx[i]]);
      bool ok = true;
      for (int a : m1.alphabet) {
        std::vector<int> lhs = w;
        const auto& i1 = m1.image(a);
        lhs.insert(lhs.end(), i1.begin(), i1.end());
        std::vector<int> rhs = m2.image(a);
        rhs.insert(rhs.end(), w.begin(), w.end());
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) return w;
      // next index tuple
      size_t i = len;
      while (i > 0) {
        --i;
        if (++idx[i] < sigma.size()) break;
        idx[i] = 0;
        if (i == 0) goto next_len;
      }
      if (len == 0) break;
    }
  next_len:;
  }
  return std::nullopt;
}

std::vector<std::vector<Int>> incidence_matrix(const Morphism& m) {
  size_t s = m.alphabet.size();
  std::map<int, size_t> pos;
  for (size_t i = 0; i < s; ++i) pos[m.alphabet[i]] = i;
  std::vector<std::vector<Int>> M(s, std::vector<Int>(s, Int(0)));
  for (size_t j = 0; j < s; ++j)
    for (int b : m.image(m.alphabet[j])) M[pos.at(b)][j] += 1;
  return M;
}

bool is_primitive(const Morphism& m) {
  auto M = incidence_matrix(m);
  size_t s = M.size();
  if (s == 0) return false;
  if (s == 1) return M[0][0] > 0;
  // Wielandt: primitive iff M^((s-1)^2 + 1) is strictly positive.
  size_t e = (s - 1) * (s - 1) + 1;
  std::vector<std::vector<bool>> P(s, std::vector<bool>(s));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) P[i][j] = M[i][j] > 0;
  auto mul = [s](const std::vector<std::vector<bool>>& X,
                 const std::vector<std::vector<bool>>& Y) {
    std::vector<std::vector<bool>> Z(s, std::vector<bool>(s, false));
    for (size_t i = 0; i < s; ++i)
      for (size_t k = 0; k < s; ++k)
        if (X[i][k])
          for (size_t j = 0; j < s; ++j)
            if (Y[k][j]) Z[i][j] = true;
    return Z;
  };
  std::vector<std::vector<bool>> R(s, std::vector<bool>(s, false));
  for (size_t i = 0; i < s; ++i) R[i][i] = true;
  std::vector<std::vector<bool>> base = P;
  size_t exp = e;
  while (exp > 0) {
    if (exp & 1) R = mul(R, base);
    base = mul(base, base);
    exp >>= 1;
  }
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      if (!R[i][j]) return false;
  return true;
}

std::vector<double> letter_frequencies(const Morphism& m) {
  auto M = incidence_matrix(m);
  size_t s = M.size();
  PrecisionGuard guard(256);
  std::vector<Real> v(s, Real(1) / static_cast<int>(s));
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Real> nv(s, Real(0));
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j)
        if (M[i][j] != 0) nv[i] += Real(M[i][j].str()) * v[j];
    Real total(0);
    for (const Real& x : nv) total += x;
    for (Real& x : nv) x /= total;
    v = std::move(nv);
  }
  std::vector<double> out;
  out.reserve(s);
  for (const Real& x : v) out.push_back(x.convert_to<double>());
  return out;
}

}  // namespace negabeta
