// Command-line front end: every subcommand prints JSON on stdout (or a
// human table with --pretty) and reports failures as JSON on stderr.
// Exit codes: 0 ok (admissible: yes), 1 runtime failure (admissible: no),
// 2 usage, 3 undecided reference orbit, 4 trivial integer set.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "negabeta/admissibility.hpp"
#include "negabeta/base.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"
#include "negabeta/fractal.hpp"
#include "negabeta/integer_sets.hpp"
#include "negabeta/io.hpp"
#include "negabeta/morphisms.hpp"

using nlohmann::ordered_json;
using namespace negabeta;

namespace {

constexpr const char* kBullet = "\xe2\x80\xa2";

struct Flags {
  std::string poly, root, sign = "neg", config, out, format;
  unsigned precision_bits = 0;
  unsigned embed_bits = 0;
  unsigned long orbit_budget = 0;
  unsigned long horizon = 12;
  bool pretty = false;

  std::string x, word, radius, method = "auto", input;
  unsigned long kmax = 8;
  unsigned long count = 0;
  unsigned long witness_max = 10;
  long place_x = -1, place_y = -1;
  bool symmetric = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--poly", f.poly, "base polynomial, e.g. \"x^3-x^2-x-1\"");
  sub->add_option("--root", f.root,
                  "real-root selector: \"largest\" (default) or 0-based "
                  "index among ascending real roots > 1");
  sub->add_option("--sign", f.sign, "numeration system")
      ->check(CLI::IsMember({"pos", "neg"}));
  sub->add_option("--config", f.config, "key=value config file");
  sub->add_option("--precision-bits", f.precision_bits,
                  "refinement budget in bits");
  sub->add_option("--orbit-budget", f.orbit_budget,
                  "max transformation steps per expansion");
  sub->add_option("--embed-bits", f.embed_bits, "numeric embedding bits");
  sub->add_option("--horizon", f.horizon, "letter horizon for morphisms");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--format", f.format, "output format where applicable");
  sub->add_flag("--pretty", f.pretty, "human-readable tables instead of JSON");
}

RunConfig resolve_cfg(CLI::App* sub, const Flags& f) {
  RunConfig cfg;
  apply_env(cfg);
  if (sub->count("--config")) cfg = load_config(f.config, cfg);
  if (sub->count("--poly")) cfg.base_poly = f.poly;
  if (sub->count("--root")) cfg.root_selector = f.root;
  if (sub->count("--sign")) cfg.sign = f.sign;
  if (sub->count("--precision-bits")) cfg.precision_bits = f.precision_bits;
  if (sub->count("--orbit-budget")) cfg.orbit_budget = f.orbit_budget;
  if (sub->count("--embed-bits")) cfg.embed_bits = f.embed_bits;
  if (sub->count("--horizon")) cfg.horizon = f.horizon;
  if (sub->count("--out")) cfg.out_path = f.out;
  if (sub->count("--format")) cfg.out_format = f.format;
  if (sub->count("--pretty")) cfg.pretty = true;
  return cfg;
}

std::string dec(const Real& r, int digits = 25) {
  std::ostringstream os;
  os << std::setprecision(digits) << r;
  return os.str();
}

std::string dec(const FieldElement& v, int digits = 25) {
  return dec(v.approx(), digits);
}

std::vector<std::string> coord_strings(const FieldElement& v) {
  std::vector<std::string> out;
  for (const Rat& q : v.coords()) out.push_back(q.str());
  return out;
}

std::string block_text(const std::vector<int>& digits) {
  bool commas = false;
  for (int d : digits)
    if (d > 9) commas = true;
  std::string out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string pointed_block(const std::vector<int>& digits) {
  return block_text(digits) + kBullet;
}

void write_output(const std::string& body, const RunConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) fail(ErrorKind::IoFailure, "cannot open '" + cfg.out_path + "'");
  out << body;
}

void emit_json(const ordered_json& j, const RunConfig& cfg) {
  write_output(j.dump() + "\n", cfg);
}

std::string letters_text(const std::vector<int>& w, bool commas) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

bool morphism_commas(const Morphism& m) {
  for (int a : m.alphabet)
    if (a > 9) return true;
  for (const auto& [a, img] : m.rules) {
    (void)a;
    for (int b : img)
      if (b > 9) return true;
  }
  return false;
}

ordered_json morphism_json(const Morphism& m) {
  bool commas = morphism_commas(m);
  ordered_json j;
  j["alphabet"] = m.alphabet;
  j["kind"] = m.antimorphism ? "antimorphism" : "morphism";
  ordered_json rules = ordered_json::object();
  for (const auto& [a, img] : m.rules)
    rules[std::to_string(a)] = letters_text(img, commas);
  j["rules"] = rules;
  return j;
}

const char* class_name(RefClass c) {
  switch (c) {
    case RefClass::InfiniteHyp: return "infinite-hypothesis";
    case RefClass::Finite: return "finite";
    case RefClass::Neither: return "neither";
  }
  return "?";
}

// ---------------------------------------------------------------- base ----

int run_base(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  BasePtr ctx = context_from(cfg);
  const auto& roots = base_embeddings(ctx, ctx->opt.embed_bits);

  ordered_json j;
  j["poly"] = poly_text(ctx->modulus_int);
  j["degree"] = ctx->degree;
  j["beta"] = dec(FieldElement::beta(ctx));
  j["floor_beta"] = floor_beta(ctx).convert_to<long long>();
  j["integer_base"] = beta_is_integer(ctx);
  j["digit_max"] = {{"pos", renyi_max_digit(ctx)}, {"neg", negbeta_max_digit(ctx)}};
  j["domain"] = {{"left", dec(domain_left(ctx))}, {"right", dec(domain_right(ctx))}};
  ordered_json conj = ordered_json::array();
  for (size_t k = 1; k < roots.size(); ++k)
    conj.push_back({dec(roots[k].re, 20), dec(roots[k].im, 20)});
  j["conjugates"] = conj;
  j["negbeta_trivial"] = negbeta_integers_trivial(ctx);

  if (cfg.pretty) {
    std::ostringstream os;
    os << "poly:            " << j["poly"].get<std::string>() << "\n"
       << "degree:          " << ctx->degree << "\n"
       << "beta:            " << j["beta"].get<std::string>() << "\n"
       << "floor(beta):     " << j["floor_beta"].get<long long>() << "\n"
       << "integer base:    " << (beta_is_integer(ctx) ? "yes" : "no") << "\n"
       << "digits pos/neg:  0.." << renyi_max_digit(ctx) << " / 0.."
       << negbeta_max_digit(ctx) << "\n"
       << "domain [l, r):   [" << j["domain"]["left"].get<std::string>()
       << ", " << j["domain"]["right"].get<std::string>() << ")\n"
       << "trivial Z_-beta: " << (j["negbeta_trivial"].get<bool>() ? "yes" : "no")
       << "\n";
    write_output(os.str(), cfg);
  } else {
    emit_json(j, cfg);
  }
  return 0;
}

// -------------------------------------------------------------- expand ----

int run_expand(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  if (!sub->count("--x"))
    fail(ErrorKind::ParseError, "expand needs --x VALUE");
  BasePtr ctx = context_from(cfg);
  FieldElement x = parse_value(ctx, f.x);

  PointedWord pw;
  if (cfg.sign == "neg") {
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
    std::vector<int> head;
    for (size_t i = 0; i < n; ++i) head.push_back(w.digit_at(i));
    DigitWord tail = shift_word(w, n);
    DigitWord full;
    full.pre = head;
    full.pre.insert(full.pre.end(), tail.pre.begin(), tail.pre.end());
    full.per = tail.per;
    full.truncated = w.truncated;
    pw = PointedWord{full, n};
  }

  ordered_json j;
  j["value"] = f.x;
  j["sign"] = cfg.sign;
  j["pointed"] = pointed_text(pw);
  j["word"] = word_text(pw.word);
  j["int_len"] = pw.int_len;
  j["truncated"] = pw.word.truncated;
  if (cfg.pretty)
    write_output(pointed_text(pw) + "\n", cfg);
  else
    emit_json(j, cfg);
  return 0;
}

// ----------------------------------------------------------- reference ----

int run_reference(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  BasePtr ctx = context_from(cfg);
  bool only = sub->count("--sign") > 0;
  ordered_json j;
  std::ostringstream os;
  if (!only || cfg.sign == "neg") {
    RefInfo info = reference_info(ctx);
    ordered_json neg;
    neg["d_l"] = word_text(reference_l(ctx));
    neg["r_star"] = word_text(reference_r_star(ctx));
    neg["class"] = class_name(info.cls);
    neg["m"] = info.m;
    neg["p"] = info.p;
    j["neg"] = neg;
    os << "d_-beta(l):      " << neg["d_l"].get<std::string>() << "\n"
       << "d*_-beta(r):     " << neg["r_star"].get<std::string>() << "\n"
       << "class:           " << neg["class"].get<std::string>() << " (m="
       << info.m << ", p=" << info.p << ")\n";
  }
  if (!only || cfg.sign == "pos") {
    ordered_json pos;
    pos["d_1"] = word_text(renyi_one(ctx));
    pos["d_1_star"] = word_text(renyi_one_star(ctx));
    j["pos"] = pos;
    os << "d_beta(1):       " << pos["d_1"].get<std::string>() << "\n"
       << "d*_beta(1):      " << pos["d_1_star"].get<std::string>() << "\n";
  }
  if (cfg.pretty)
    write_output(os.str(), cfg);
  else
    emit_json(j, cfg);
  return 0;
}

// ---------------------------------------------------------- admissible ----

int run_admissible(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  if (!sub->count("--word"))
    fail(ErrorKind::ParseError, "admissible needs --word DIGITS");
  BasePtr ctx = context_from(cfg);
  DigitWord w = parse_word(f.word);
  if (w.truncated)
    fail(ErrorKind::ParseError, "cannot decide a truncated word");
  AdmissibilityResult res = cfg.sign == "neg" ? is_admissible_negbeta(ctx, w)
                                              : is_admissible_renyi(ctx, w);
  ordered_json j;
  j["word"] = word_text(w);
  j["sign"] = cfg.sign;
  j["admissible"] = res.admissible;
  if (!res.admissible) {
    j["suffix_index"] = res.suffix_index;
    j["position"] = res.position;
  }
  if (cfg.pretty) {
    std::ostringstream os;
    os << word_text(w) << ": "
       << (res.admissible ? "admissible" : "not admissible");
    if (!res.admissible)
      os << " (suffix " << res.suffix_index << ", position " << res.position
         << ")";
    os << "\n";
    write_output(os.str(), cfg);
  } else {
    emit_json(j, cfg);
  }
  return res.admissible ? 0 : 1;
}

// ------------------------------------------------------------ integers ----

int run_integers(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  bool have_radius = sub->count("--radius") > 0;
  bool have_count = sub->count("--count") > 0;
  if (have_radius == have_count)
    fail(ErrorKind::ParseError, "integers needs exactly one of --radius, --count");
  BasePtr ctx = context_from(cfg);
  bool neg = cfg.sign == "neg";

  IntegerWindow w;
  if (have_count) {
    w = window_with_count(ctx, f.count, neg);
  } else {
    Rat radius;
    try {
      radius = Rat(f.radius);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad radius '" + f.radius + "'");
    }
    if (radius <= 0) fail(ErrorKind::ParseError, "radius must be positive");
    w = neg ? enumerate_negbeta_integers(ctx, radius)
            : enumerate_renyi_integers(ctx, radius, f.symmetric);
  }

  ordered_json j;
  j["poly"] = poly_text(ctx->modulus_int);
  j["sign"] = cfg.sign;
  if (have_radius) j["radius"] = f.radius;
  if (have_count) j["count"] = f.count;
  ordered_json pts = ordered_json::array();
  for (const auto& p : w.points) {
    ordered_json e;
    e["word"] = block_text(p.digits);
    e["pointed"] = pointed_block(p.digits);
    e["value"] = dec(p.value);
    pts.push_back(e);
  }
  j["points"] = pts;
  j["gap_letters"] = w.gap_letters;

  std::vector<size_t> distinct;
  for (size_t g : w.gap_letters)
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end())
      distinct.push_back(g);
  std::sort(distinct.begin(), distinct.end());
  ordered_json gaps = ordered_json::array();
  for (size_t g : distinct) {
    FieldElement d = neg ? delta_gap(ctx, g) : delta_gap_renyi(ctx, g);
    gaps.push_back({{"letter", g}, {"delta", dec(d)}});
  }
  j["distinct_gaps"] = gaps;

  if (cfg.pretty) {
    std::ostringstream os;
    os << std::left;
    for (size_t i = 0; i < w.points.size(); ++i) {
      os << std::setw(16) << pointed_block(w.points[i].digits)
         << dec(w.points[i].value, 12);
      if (i < w.gap_letters.size()) os << "   gap " << w.gap_letters[i];
      os << "\n";
    }
    write_output(os.str(), cfg);
  } else {
    emit_json(j, cfg);
  }
  return 0;
}

// ----------------------------------------------------------- distances ----

DeltaMethod parse_method(const std::string& m) {
  if (m == "auto") return DeltaMethod::Auto;
  if (m == "definition") return DeltaMethod::Definition;
  if (m == "series") return DeltaMethod::Series;
  if (m == "orbit") return DeltaMethod::Orbit;
  if (m == "finite-table") return DeltaMethod::FiniteTable;
  fail(ErrorKind::ParseError, "unknown method '" + m + "'");
}

int run_distances(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  BasePtr ctx = context_from(cfg);
  size_t kmax = f.kmax;
  ordered_json j;
  j["poly"] = poly_text(ctx->modulus_int);
  j["sign"] = cfg.sign;

  std::ostringstream os;
  if (cfg.sign == "neg") {
    if (negbeta_integers_trivial(ctx))
      fail(ErrorKind::TrivialSet,
           "the negative-base integer set is {0}; no distances");
    DeltaMethod method = parse_method(f.method);
    RefInfo info = reference_info(ctx);
    j["class"] = class_name(info.cls);
    j["m"] = info.m;
    j["p"] = info.p;
    ordered_json ds = ordered_json::array();
    for (size_t k = 0; k <= kmax; ++k) {
      FieldElement d = delta_gap(ctx, k, method);
      ds.push_back({{"k", k},
                    {"delta", dec(d)},
                    {"coords", coord_strings(d)}});
      os << "Delta_" << k << " = " << dec(d, 12) << "\n";
    }
    j["deltas"] = ds;
    ordered_json cj = ordered_json::array();
    for (const auto& c : gap_coincidences(ctx, kmax)) {
      cj.push_back({{"from", c.k_from},
                    {"to", c.k_to},
                    {"reflected", c.reflected}});
      os << "Delta_" << c.k_from << " = "
         << (c.reflected ? "2 - " : "") << "Delta_" << c.k_to << "\n";
    }
    j["coincidences"] = cj;
  } else {
    ordered_json ds = ordered_json::array();
    std::vector<FieldElement> seen;
    ordered_json classes = ordered_json::array();
    for (size_t k = 0; k <= kmax; ++k) {
      FieldElement d = delta_gap_renyi(ctx, k);
      size_t rep = k;
      for (size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == d) {
          rep = i;
          break;
        }
      }
      seen.push_back(d);
      ds.push_back({{"k", k},
                    {"delta", dec(d)},
                    {"coords", coord_strings(d)}});
      classes.push_back(rep);
      os << "Delta_" << k << " = " << dec(d, 12) << "\n";
    }
    j["deltas"] = ds;
    j["classes"] = classes;
  }

  if (cfg.pretty)
    write_output(os.str(), cfg);
  else
    emit_json(j, cfg);
  return 0;
}

// ------------------------------------------------------------ morphism ----

int run_morphism(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  BasePtr ctx = context_from(cfg);
  size_t horizon = cfg.horizon;

  Morphism phi = phi_morphism(ctx, horizon);
  Morphism psi = psi_morphism(ctx, horizon);
  Morphism sub_beta = canonical_substitution(ctx);
  Morphism sub_beta2 = canonical_substitution_squared(ctx);

  GapProjection proj(ctx);
  ordered_json raw = ordered_json::object();
  ordered_json pi = ordered_json::array();
  bool raw_commas = false;
  for (size_t k = 0; k <= horizon; ++k) {
    for (int v : gap_image_word(ctx, k))
      if (v > 9) raw_commas = true;
    if (proj.rep(k) > 9) raw_commas = true;
  }
  for (size_t k = 0; k <= horizon; ++k) {
    raw[std::to_string(k)] = letters_text(gap_image_word(ctx, k), raw_commas);
    pi.push_back(proj.rep(k));
  }

  ordered_json j;
  j["poly"] = poly_text(ctx->modulus_int);
  j["horizon"] = horizon;
  j["Phi"] = raw;
  j["Pi"] = pi;
  j["phi"] = morphism_json(phi);
  j["psi"] = morphism_json(psi);
  j["beta_substitution"] = morphism_json(sub_beta);
  j["beta_substitution_squared"] = morphism_json(sub_beta2);
  j["commutation"] = check_commutation(ctx, horizon);
  j["primitive"] = {{"psi", is_primitive(psi)},
                    {"beta_substitution_squared", is_primitive(sub_beta2)}};
  auto witness = conjugacy_witness(psi, sub_beta2, f.witness_max);
  ordered_json cj;
  cj["found"] = witness.has_value();
  if (witness)
    cj["witness"] = letters_text(*witness, morphism_commas(sub_beta2));
  j["conjugacy"] = cj;

  if (cfg.pretty) {
    std::ostringstream os;
    auto dump_rules = [&](const char* name, const Morphism& m) {
      os << name << (m.antimorphism ? " (antimorphism)" : " (morphism)")
         << ":\n";
      bool commas = morphism_commas(m);
      for (const auto& [a, img] : m.rules)
        os << "  " << a << " -> " << letters_text(img, commas) << "\n";
    };
    dump_rules("phi", phi);
    dump_rules("psi = phi^2", psi);
    dump_rules("beta substitution", sub_beta);
    dump_rules("beta substitution squared", sub_beta2);
    os << "Pi: ";
    for (size_t k = 0; k <= horizon; ++k) os << proj.rep(k) << " ";
    os << "\ncommutation: " << (j["commutation"].get<bool>() ? "ok" : "FAILED")
       << "\nprimitive(psi): "
       << (j["primitive"]["psi"].get<bool>() ? "yes" : "no")
       << "\nconjugacy witness: "
       << (witness ? letters_text(*witness, false) : std::string("none"))
       << "\n";
    write_output(os.str(), cfg);
  } else {
    emit_json(j, cfg);
  }
  return 0;
}

// ------------------------------------------------------------- fractal ----

int run_fractal(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  BasePtr ctx = context_from(cfg);
  CloudSource which =
      cfg.sign == "neg" ? CloudSource::neg_base : CloudSource::pos_base;

  bool have_px = sub->count("--place-x") > 0;
  bool have_py = sub->count("--place-y") > 0;
  if (have_px != have_py)
    fail(ErrorKind::ParseError, "give both --place-x and --place-y or neither");
  std::optional<EmbeddingPlane> plane;
  if (have_px) {
    const auto& roots = base_embeddings(ctx, ctx->opt.embed_bits);
    if (f.place_x < 1 || f.place_y < 1 ||
        f.place_x >= static_cast<long>(roots.size()) ||
        f.place_y >= static_cast<long>(roots.size()))
      fail(ErrorKind::ParseError, "plane index out of range");
    EmbeddingPlane pl;
    pl.first = static_cast<unsigned>(f.place_x);
    pl.second = static_cast<unsigned>(f.place_y);
    pl.complex_pair =
        f.place_x == f.place_y && roots[pl.first].im != 0;
    plane = pl;
  }

  size_t count = sub->count("--count") ? f.count : 2000;
  std::string format = cfg.out_format.empty() ? "json" : cfg.out_format;
  PointCloud cloud = point_cloud(ctx, which, count, plane);

  if (!cfg.out_path.empty()) {
    export_cloud(cloud, format, cfg.out_path);
    ordered_json j;
    j["source"] = which == CloudSource::neg_base ? "neg_base" : "pos_base";
    j["count"] = cloud.count;
    j["format"] = format;
    j["out"] = cfg.out_path;
    j["bound"] = {dec(cloud.bound_x, 16), dec(cloud.bound_y, 16)};
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (cfg.pretty) {
    CloudStats st = cloud_stats(cloud);
    std::ostringstream os;
    os << "source:    " << (which == CloudSource::neg_base ? "neg" : "pos")
       << "\npoints:    " << cloud.count << "\ncentroid:  (" << st.cx << ", "
       << st.cy << ")\ndiameter:  " << st.diameter
       << "\nhull area: " << st.hull_area << "\nbound:     ["
       << dec(cloud.bound_x, 12) << ", " << dec(cloud.bound_y, 12) << "]\n";
    std::cout << os.str();
    return 0;
  }
  std::cout << render_cloud(cloud, format);
  return 0;
}

// -------------------------------------------------------------- verify ----

int run_verify(CLI::App* sub, const Flags& f) {
  RunConfig cfg = resolve_cfg(sub, f);
  if (!sub->count("--in"))
    fail(ErrorKind::ParseError, "verify needs --in FILE (the integers JSON)");

  ordered_json doc;
  try {
    if (f.input == "-") {
      doc = ordered_json::parse(std::cin);
    } else {
      std::ifstream in(f.input);
      if (!in) fail(ErrorKind::ParseError, "cannot open '" + f.input + "'");
      doc = ordered_json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad JSON: ") + e.what());
  }

  std::string fault;
  size_t n_points = 0, n_gaps = 0;
  try {
    std::string poly = doc.at("poly").get<std::string>();
    std::string sign = doc.at("sign").get<std::string>();
    bool neg = sign == "neg";
    RunConfig sub_cfg = cfg;
    sub_cfg.base_poly = poly;
    BasePtr ctx = context_from(sub_cfg);

    std::vector<std::vector<int>> blocks;
    std::vector<FieldElement> values;
    for (const auto& p : doc.at("points")) {
      DigitWord w = parse_word(p.at("word").get<std::string>());
      if (!w.per.empty())
        throw std::runtime_error("integer word with a periodic tail: " +
                                 word_text(w));
      AdmissibilityResult res = neg ? is_admissible_negbeta(ctx, w.pre)
                                    : is_admissible_renyi(ctx, w.pre);
      if (!res)
        throw std::runtime_error("inadmissible word " + word_text(w));
      blocks.push_back(w.pre);
      values.push_back(neg ? gamma_negbeta(ctx, w.pre)
                           : gamma_renyi(ctx, w.pre));
    }
    n_points = blocks.size();

    // A symmetric positive window stores mirrored blocks: identical words
    // on both sides of zero. Recover each point's sign from the stored
    // decimal value.
    if (!neg) {
      for (size_t i = 0; i < values.size(); ++i) {
        const auto& p = doc.at("points")[i];
        std::string v = p.at("value").get<std::string>();
        if (!v.empty() && v[0] == '-') values[i] = -values[i];
      }
    }

    for (size_t i = 0; i + 1 < values.size(); ++i)
      if (!(values[i] < values[i + 1]))
        throw std::runtime_error("values not strictly increasing at index " +
                                 std::to_string(i));

    std::vector<size_t> letters =
        doc.at("gap_letters").get<std::vector<size_t>>();
    if (letters.size() + 1 != blocks.size() && !(blocks.empty() && letters.empty()))
      throw std::runtime_error("gap letter count does not match point count");
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
      size_t expect = gap_letter(blocks[i], blocks[i + 1]);
      if (expect != letters[i])
        throw std::runtime_error("gap letter mismatch at index " +
                                 std::to_string(i));
      FieldElement d = values[i + 1] - values[i];
      FieldElement ref =
          neg ? delta_gap(ctx, letters[i]) : delta_gap_renyi(ctx, letters[i]);
      if (d != ref)
        throw std::runtime_error("gap value mismatch at index " +
                                 std::to_string(i));
    }
    n_gaps = letters.size();
  } catch (const nlohmann::json::exception& e) {
    fault = std::string("document shape: ") + e.what();
  } catch (const std::runtime_error& e) {
    fault = e.what();
  }

  ordered_json j;
  j["ok"] = fault.empty();
  if (!fault.empty()) j["fault"] = fault;
  j["points"] = n_points;
  j["gaps"] = n_gaps;
  if (cfg.pretty) {
    std::ostringstream os;
    if (fault.empty())
      os << "ok: " << n_points << " points, " << n_gaps << " gaps verified\n";
    else
      os << "FAILED: " << fault << "\n";
    write_output(os.str(), cfg);
  } else {
    emit_json(j, cfg);
  }
  return fault.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact arithmetic for positive- and negative-base numeration: "
      "expansions, admissibility, integer windows, gap distances, fixing "
      "morphisms, conjugate point clouds."};
  app.require_subcommand(1);
  Flags f;

  CLI::App* s_base = app.add_subcommand("base", "context facts for a base");
  CLI::App* s_expand =
      app.add_subcommand("expand", "pointed expansion of a value");
  s_expand->add_option("--x", f.x, "value: rational or polynomial in b");
  CLI::App* s_ref = app.add_subcommand(
      "reference", "endpoint words d(l), d*(r) and d(1), d*(1)");
  CLI::App* s_adm =
      app.add_subcommand("admissible", "test a digit word (exit 0/1)");
  s_adm->add_option("--word", f.word, "digit word, e.g. \"10(1)\"");
  CLI::App* s_int = app.add_subcommand("integers", "integer window");
  s_int->add_option("--radius", f.radius, "window radius (rational)");
  s_int->add_option("--count", f.count, "grow window to at least this many");
  s_int->add_flag("--symmetric", f.symmetric,
                  "positive system: include mirrored negatives");
  CLI::App* s_dist =
      app.add_subcommand("distances", "gap table and coincidences");
  s_dist->add_option("--k-max", f.kmax, "largest letter (default 8)");
  s_dist->add_option("--method", f.method,
                     "auto|definition|series|orbit|finite-table");
  CLI::App* s_mor = app.add_subcommand(
      "morphism", "gap images, projection, fixing morphisms, conjugacy");
  s_mor->add_option("--max-witness", f.witness_max,
                    "conjugacy search length bound");
  CLI::App* s_fra =
      app.add_subcommand("fractal", "conjugate point cloud (csv|json|svg)");
  s_fra->add_option("--count", f.count, "points to embed (default 2000)");
  s_fra->add_option("--place-x", f.place_x, "embedding index for x");
  s_fra->add_option("--place-y", f.place_y, "embedding index for y");
  CLI::App* s_ver =
      app.add_subcommand("verify", "revalidate an integers JSON document");
  s_ver->add_option("--in", f.input, "integers JSON file, or - for stdin");

  for (CLI::App* s : {s_base, s_expand, s_ref, s_adm, s_int, s_dist, s_mor,
                      s_fra, s_ver})
    add_common(s, f);

  int rc = 0;
  try {
    app.parse(argc, argv);
    if (s_base->parsed()) rc = run_base(s_base, f);
    else if (s_expand->parsed()) rc = run_expand(s_expand, f);
    else if (s_ref->parsed()) rc = run_reference(s_ref, f);
    else if (s_adm->parsed()) rc = run_admissible(s_adm, f);
    else if (s_int->parsed()) rc = run_integers(s_int, f);
    else if (s_dist->parsed()) rc = run_distances(s_dist, f);
    else if (s_mor->parsed()) rc = run_morphism(s_mor, f);
    else if (s_fra->parsed()) rc = run_fractal(s_fra, f);
    else if (s_ver->parsed()) rc = run_verify(s_ver, f);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    ordered_json err;
    err["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError: return 2;
      case ErrorKind::UndecidedReference: return 3;
      case ErrorKind::TrivialSet: return 4;
      default: return 1;
    }
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return rc;
}
