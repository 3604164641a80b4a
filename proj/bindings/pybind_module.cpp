// Python face of the library: one Base class exposing the operations the
// CLI offers, with strings for words and exact values rendered as decimal
// or coordinate strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "negabeta/admissibility.hpp"
#include "negabeta/base.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"
#include "negabeta/fractal.hpp"
#include "negabeta/integer_sets.hpp"
#include "negabeta/io.hpp"
#include "negabeta/morphisms.hpp"

namespace py = pybind11;
using namespace negabeta;

namespace {

DeltaMethod method_from(const std::string& m) {
  if (m == "auto") return DeltaMethod::Auto;
  if (m == "definition") return DeltaMethod::Definition;
  if (m == "series") return DeltaMethod::Series;
  if (m == "orbit") return DeltaMethod::Orbit;
  if (m == "finite-table") return DeltaMethod::FiniteTable;
  fail(ErrorKind::ParseError, "unknown method '" + m + "'");
}

bool is_neg(const std::string& sign) {
  if (sign == "neg") return true;
  if (sign == "pos") return false;
  fail(ErrorKind::ParseError, "sign must be 'pos' or 'neg'");
}

py::dict morphism_dict(const Morphism& m) {
  py::dict rules;
  for (const auto& [a, img] : m.rules) {
    std::string s;
    for (size_t i = 0; i < img.size(); ++i) {
      if (i && (m.alphabet.back() > 9)) s += ',';
      s += std::to_string(img[i]);
    }
    rules[py::str(std::to_string(a))] = s;
  }
  py::dict out;
  out["alphabet"] = m.alphabet;
  out["kind"] = m.antimorphism ? "antimorphism" : "morphism";
  out["rules"] = rules;
  return out;
}

struct PyBase {
  BasePtr ctx;

  explicit PyBase(const std::string& poly, const std::string& root,
                  unsigned precision_bits, size_t orbit_budget,
                  unsigned embed_bits) {
    RunConfig cfg;
    cfg.base_poly = poly;
    cfg.root_selector = root;
    cfg.precision_bits = precision_bits;
    cfg.orbit_budget = orbit_budget;
    cfg.embed_bits = embed_bits;
    ctx = context_from(cfg);
  }

  std::string poly() const { return poly_text(ctx->modulus_int); }
  int degree() const { return ctx->degree; }
  double beta() const { return FieldElement::beta(ctx).approx_double(); }

  std::string reference_l_() const { return word_text(reference_l(ctx)); }
  std::string reference_r_star_() const {
    return word_text(reference_r_star(ctx));
  }
  std::string renyi_one_() const { return word_text(renyi_one(ctx)); }
  std::string renyi_one_star_() const {
    return word_text(renyi_one_star(ctx));
  }
  bool trivial_negbeta() const { return negbeta_integers_trivial(ctx); }

  py::dict expand(const std::string& value, const std::string& sign) const {
    FieldElement x = parse_value(ctx, value);
    PointedWord pw;
    if (is_neg(sign)) {
      pw = expand_real_negbeta(ctx, x);
    } else {
      if (x.sign() < 0)
        fail(ErrorKind::OutOfDomain,
             "positive-system expansions take nonnegative values");
      FieldElement b = FieldElement::beta(ctx);
      FieldElement y = x;
      size_t n = 0;
      while (!(y < FieldElement::one(ctx))) {
        y = y / b;
        ++n;
      }
      DigitWord w = expand_renyi(ctx, y);
      DigitWord full;
      for (size_t i = 0; i < n; ++i) full.pre.push_back(w.digit_at(i));
      DigitWord tail = shift_word(w, n);
      full.pre.insert(full.pre.end(), tail.pre.begin(), tail.pre.end());
      full.per = tail.per;
      full.truncated = w.truncated;
      pw = PointedWord{full, n};
    }
    py::dict out;
    out["pointed"] = pointed_text(pw);
    out["word"] = word_text(pw.word);
    out["int_len"] = pw.int_len;
    out["truncated"] = pw.word.truncated;
    return out;
  }

  bool admissible(const std::string& word, const std::string& sign) const {
    DigitWord w = parse_word(word);
    if (w.truncated)
      fail(ErrorKind::ParseError, "cannot decide a truncated word");
    return is_neg(sign) ? is_admissible_negbeta(ctx, w).admissible
                        : is_admissible_renyi(ctx, w).admissible;
  }

  py::dict integers(const std::string& radius, size_t count,
                    const std::string& sign, bool symmetric) const {
    bool neg = is_neg(sign);
    IntegerWindow w;
    if (!radius.empty() && count > 0)
      fail(ErrorKind::ParseError, "give either radius or count, not both");
    if (radius.empty() && count == 0)
      fail(ErrorKind::ParseError, "give radius or count");
    if (count > 0) {
      w = window_with_count(ctx, count, neg);
    } else {
      Rat r;
      try {
        r = Rat(radius);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad radius '" + radius + "'");
      }
      w = neg ? enumerate_negbeta_integers(ctx, r)
              : enumerate_renyi_integers(ctx, r, symmetric);
    }
    py::list words, values;
    for (const auto& p : w.points) {
      std::string s;
      for (size_t i = 0; i < p.digits.size(); ++i) {
        if (i && negbeta_max_digit(ctx) > 9) s += ',';
        s += std::to_string(p.digits[i]);
      }
      words.append(s);
      values.append(p.value.approx_double());
    }
    py::dict out;
    out["words"] = words;
    out["values"] = values;
    out["gap_letters"] = w.gap_letters;
    return out;
  }

  py::tuple delta(size_t k, const std::string& sign,
                  const std::string& method) const {
    FieldElement d = is_neg(sign) ? delta_gap(ctx, k, method_from(method))
                                  : delta_gap_renyi(ctx, k);
    std::vector<std::string> coords;
    for (const Rat& q : d.coords()) coords.push_back(q.str());
    return py::make_tuple(d.approx_double(), coords);
  }

  py::dict phi(size_t horizon) const {
    return morphism_dict(phi_morphism(ctx, horizon));
  }
  py::dict psi(size_t horizon) const {
    return morphism_dict(psi_morphism(ctx, horizon));
  }
  py::dict beta_substitution() const {
    return morphism_dict(canonical_substitution(ctx));
  }
  py::dict beta_substitution_squared() const {
    return morphism_dict(canonical_substitution_squared(ctx));
  }
  bool commutation(size_t horizon) const {
    return check_commutation(ctx, horizon);
  }
  std::optional<std::string> conjugacy(size_t maxlen, size_t horizon) const {
    Morphism psi_m = psi_morphism(ctx, horizon);
    Morphism b2 = canonical_substitution_squared(ctx);
    auto w = conjugacy_witness(psi_m, b2, maxlen);
    if (!w) return std::nullopt;
    std::string s;
    for (int a : *w) s += std::to_string(a);
    return s;
  }

  std::vector<std::pair<double, double>> cloud(size_t count,
                                               const std::string& sign) const {
    PointCloud c = point_cloud(
        ctx, is_neg(sign) ? CloudSource::neg_base : CloudSource::pos_base,
        count);
    std::vector<std::pair<double, double>> out;
    out.reserve(c.points.size());
    for (const auto& p : c.points)
      out.emplace_back(static_cast<double>(p.first),
                       static_cast<double>(p.second));
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(_negabeta, m) {
  m.doc() =
      "Exact positive- and negative-base numeration: expansions, "
      "admissibility, integer windows, gap distances, fixing morphisms, "
      "conjugate point clouds.";

  py::register_exception<Error>(m, "NumerationError");

  py::class_<PyBase>(m, "Base")
      .def(py::init<const std::string&, const std::string&, unsigned, size_t,
                    unsigned>(),
           py::arg("poly"), py::arg("root") = "",
           py::arg("precision_bits") = 4096, py::arg("orbit_budget") = 10000,
           py::arg("embed_bits") = 128)
      .def_property_readonly("poly", &PyBase::poly)
      .def_property_readonly("degree", &PyBase::degree)
      .def_property_readonly("beta", &PyBase::beta)
      .def("reference_l", &PyBase::reference_l_)
      .def("reference_r_star", &PyBase::reference_r_star_)
      .def("renyi_one", &PyBase::renyi_one_)
      .def("renyi_one_star", &PyBase::renyi_one_star_)
      .def("trivial_negbeta", &PyBase::trivial_negbeta)
      .def("expand", &PyBase::expand, py::arg("value"),
           py::arg("sign") = "neg")
      .def("admissible", &PyBase::admissible, py::arg("word"),
           py::arg("sign") = "neg")
      .def("integers", &PyBase::integers, py::arg("radius") = "",
           py::arg("count") = 0, py::arg("sign") = "neg",
           py::arg("symmetric") = false)
      .def("delta", &PyBase::delta, py::arg("k"), py::arg("sign") = "neg",
           py::arg("method") = "auto")
      .def("phi", &PyBase::phi, py::arg("horizon") = 12)
      .def("psi", &PyBase::psi, py::arg("horizon") = 12)
      .def("beta_substitution", &PyBase::beta_substitution)
      .def("beta_substitution_squared", &PyBase::beta_substitution_squared)
      .def("commutation", &PyBase::commutation, py::arg("horizon") = 12)
      .def("conjugacy", &PyBase::conjugacy, py::arg("maxlen") = 10,
           py::arg("horizon") = 12)
      .def("cloud", &PyBase::cloud, py::arg("count"), py::arg("sign") = "neg");
}
