#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "negabeta/errors.hpp"
#include "negabeta/fractal.hpp"
#include "negabeta/io.hpp"
#include "test_util.hpp"

using namespace negabeta;

TEST_CASE("polynomial text round-trips") {
  auto c = parse_poly_coeffs("x^3 - x^2 - x - 1");
  CHECK(c == std::vector<Int>{-1, -1, -1, 1});
  CHECK(poly_text(c) == "x^3-x^2-x-1");
  CHECK(parse_poly_coeffs(poly_text(c)) == c);

  CHECK(parse_poly_coeffs("2x^2+3") == std::vector<Int>{3, 0, 2});
  CHECK(parse_poly_coeffs("t^2-2*t-1") == std::vector<Int>{-1, -2, 1});
  CHECK(parse_poly_coeffs("-x+5") == std::vector<Int>{5, -1});
  CHECK(poly_text({5, -1}) == "-x+5");
  CHECK(poly_text({0, 0, 1}) == "x^2");

  CHECK_THROWS_AS(parse_poly_coeffs("x^"), Error);
  CHECK_THROWS_AS(parse_poly_coeffs("x^2 - y^2"), Error);
  CHECK_THROWS_AS(parse_poly_coeffs(""), Error);
  CHECK_THROWS_AS(parse_poly_coeffs("x$2"), Error);
}

TEST_CASE("digit word text round-trips") {
  CHECK(word_text(periodic_word({1, 0}, {1})) == "10(1)");
  CHECK(word_text(finite_word({2, 1})) == "21");
  CHECK(word_text(periodic_word({}, {2, 1})) == "(21)");
  CHECK(word_text(finite_word({})) == "0");

  CHECK(parse_word("10(1)") == periodic_word({1, 0}, {1}));
  CHECK(parse_word("021") == finite_word({0, 2, 1}));
  CHECK(parse_word("(01)") == periodic_word({}, {0, 1}));
  // parsing is literal; canonical form is one normalize away
  CHECK(parse_word("0").digit_at(0) == 0);
  CHECK(normalize(parse_word("0")) == finite_word({}));
  CHECK(normalize(parse_word("1(0)")) == finite_word({1}));

  // digits past nine switch to the comma form
  DigitWord big = periodic_word({0, 12}, {3, 1});
  CHECK(word_text(big) == "0,12(3,1)");
  CHECK(parse_word("0,12(3,1)") == big);

  // truncation marker survives a round-trip
  DigitWord t{{1, 0}, {}, true};
  CHECK(word_text(t) == "10...");
  CHECK(parse_word("10...") == t);
  CHECK_THROWS_AS(parse_word("1(0"), Error);
  CHECK_THROWS_AS(parse_word("abc"), Error);
  CHECK_THROWS_AS(parse_word("1()"), Error);
}

TEST_CASE("pointed text places the radix mark") {
  PointedWord p{finite_word({1, 1, 0}), 3};
  CHECK(pointed_text(p) == "110\xe2\x80\xa2");
  PointedWord q{periodic_word({1, 1, 0}, {1}), 2};
  CHECK(pointed_text(q) == "11\xe2\x80\xa2"
                           "0(1)");
  PointedWord z{finite_word({}), 0};
  CHECK(pointed_text(z) == "0\xe2\x80\xa2");
}

TEST_CASE("field values parse from rationals and root polynomials") {
  auto golden = mk(golden_poly());
  FieldElement b = FieldElement::beta(golden);
  FieldElement one = FieldElement::one(golden);

  CHECK(parse_value(golden, "-3/4") ==
        FieldElement::from_rat(golden, Rat(-3, 4)));
  CHECK(parse_value(golden, "b^2-b-1") == FieldElement::zero(golden));
  CHECK(parse_value(golden, "2t+1") == b + b + one);
  FieldElement half = FieldElement::from_rat(golden, Rat(1, 2));
  CHECK(parse_value(golden, "1/2*x") == half * b);
  CHECK(parse_value(golden, "x^2") == b * b);

  CHECK_THROWS_AS(parse_value(golden, "b*b"), Error);
  CHECK_THROWS_AS(parse_value(golden, "a+b"), Error);
  CHECK_THROWS_AS(parse_value(golden, ""), Error);
}

TEST_CASE("config files fill unset fields only") {
  std::string path = "/tmp/negabeta_test_config.txt";
  {
    std::ofstream f(path);
    f << "# comment line\n"
      << "poly = x^2-2x-1\n"
      << "sign = pos\n"
      << "precision-bits = 512\n"
      << "horizon = 9\n"
      << "pretty = yes\n";
  }
  RunConfig cfg = load_config(path);
  CHECK(cfg.base_poly == "x^2-2x-1");
  CHECK(cfg.sign == "pos");
  CHECK(cfg.precision_bits == 512);
  CHECK(cfg.horizon == 9);
  CHECK(cfg.pretty);
  CHECK(cfg.orbit_budget == 10000);  // untouched default

  auto ctx = context_from(cfg);
  CHECK(floor_beta(ctx) == 2);

  {
    std::ofstream f(path);
    f << "unknown-key = 3\n";
  }
  CHECK_THROWS_AS(load_config(path), Error);
  {
    std::ofstream f(path);
    f << "precision-bits = banana\n";
  }
  CHECK_THROWS_AS(load_config(path), Error);
  CHECK_THROWS_AS(load_config("/tmp/no_such_negabeta_config"), Error);
  std::remove(path.c_str());
}

TEST_CASE("environment supplies the precision override") {
  RunConfig cfg;
  setenv("NEGABETA_PRECISION_BITS", "2048", 1);
  apply_env(cfg);
  CHECK(cfg.precision_bits == 2048);
  unsetenv("NEGABETA_PRECISION_BITS");
  cfg.precision_bits = 4096;
  apply_env(cfg);
  CHECK(cfg.precision_bits == 4096);
}

TEST_CASE("plane selection by field signature") {
  auto trib = mk(tribonacci_poly());
  EmbeddingPlane tp = default_plane(trib);
  CHECK(tp.complex_pair);
  CHECK(tp.first == 1);

  auto golden = mk(golden_poly());
  EmbeddingPlane gp = default_plane(golden);
  CHECK_FALSE(gp.complex_pair);
  CHECK(gp.first == 1);
  CHECK(gp.second == 1);  // degree two: single conjugate axis

  // totally real cubic: two distinct real conjugate places
  auto tr = mk({1, 0, -3, 1});  // x^3 - 3x^2 + 1, roots ~2.88, 0.65, -0.53
  EmbeddingPlane rp = default_plane(tr);
  CHECK_FALSE(rp.complex_pair);
  CHECK(rp.first == 1);
  CHECK(rp.second == 2);

  auto v = FieldElement::one(golden);
  auto pt = embed_point(golden, v, gp);
  CHECK(static_cast<double>(pt.first) == doctest::Approx(1.0));
  CHECK(pt.second == 0);
}

TEST_CASE("cloud bound dominates every projected point") {
  auto trib = mk(tribonacci_poly());
  PointCloud cloud = point_cloud(trib, CloudSource::neg_base, 200);
  CHECK(cloud.count == 200);
  CHECK(cloud.points.size() == 200);
  CHECK(cloud.values.size() == 200);
  // bound: digit_max / (1 - |conjugate|) with digit 1 and modulus ~0.7374
  double want = 1.0 / (1.0 - 0.7373527057543752);
  CHECK(static_cast<double>(cloud.bound_x) == doctest::Approx(want));
  for (auto& [x, y] : cloud.points) {
    CHECK(std::fabs(static_cast<double>(x)) <=
          static_cast<double>(cloud.bound_x) + 1e-9);
    CHECK(std::fabs(static_cast<double>(y)) <=
          static_cast<double>(cloud.bound_y) + 1e-9);
  }
  // ordered by absolute value, ties negative first
  for (size_t i = 0; i + 1 < cloud.values.size(); ++i) {
    FieldElement a = cloud.values[i].abs();
    FieldElement b = cloud.values[i + 1].abs();
    CHECK(a <= b);
  }
}

TEST_CASE("degree-two clouds collapse onto the real axis") {
  auto golden = mk(golden_poly());
  PointCloud cloud = point_cloud(golden, CloudSource::neg_base, 60);
  for (auto& [x, y] : cloud.points) CHECK(y == 0);
  CloudStats st = cloud_stats(cloud);
  CHECK(st.diameter > 0);
  CHECK(st.hull_area == doctest::Approx(0.0));
  CHECK(st.cy == doctest::Approx(0.0));
}

TEST_CASE("positive and negative clouds share machinery") {
  auto trib = mk(tribonacci_poly());
  PointCloud pos = point_cloud(trib, CloudSource::pos_base, 150);
  CHECK(pos.source == CloudSource::pos_base);
  CHECK(pos.points.size() == 150);
  // mirrored closure: values come in +/- pairs after zero
  CHECK(pos.values[0].is_zero());
  CHECK(pos.values[1] == -pos.values[2]);

  CHECK_THROWS_AS(point_cloud(mk(plastic_poly()), CloudSource::neg_base, 10),
                  Error);
}

TEST_CASE("projections with an expanding conjugate are refused") {
  // x^2 - x - 3 has roots ~2.30 and ~-1.30; no contracting place exists
  auto ctx = mk({-3, -1, 1});
  try {
    point_cloud(ctx, CloudSource::neg_base, 10);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundedEmbedding);
  }
}

TEST_CASE("cloud export formats") {
  auto trib = mk(tribonacci_poly());
  PointCloud cloud = point_cloud(trib, CloudSource::neg_base, 40);

  std::string csv = render_cloud(cloud, "csv");
  CHECK(csv.substr(0, 4) == "x,y\n");
  size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 41);  // header plus one line per point
  CHECK(render_cloud(cloud, "csv") == csv);  // deterministic

  std::string svg = render_cloud(cloud, "svg");
  CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);
  size_t circles = 0;
  for (size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1))
    ++circles;
  CHECK(circles == 40);
  CHECK(svg.find("r=\"0.5\"") != std::string::npos);

  std::string json = render_cloud(cloud, "json");
  CHECK(json.front() == '[');
  CHECK(json.back() == '\n');

  CHECK_THROWS_AS(render_cloud(cloud, "bmp"), Error);
  CHECK_THROWS_AS(export_cloud(cloud, "csv", "/no/such/dir/file.csv"), Error);

  std::string path = "/tmp/negabeta_test_cloud.csv";
  export_cloud(cloud, "csv", path);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == csv);
  std::remove(path.c_str());
}

TEST_CASE("nearest-neighbour distance is translation invariant") {
  auto trib = mk(tribonacci_poly());
  PointCloud a = point_cloud(trib, CloudSource::neg_base, 120);
  CHECK(mean_nearest_distance(a, a) == doctest::Approx(0.0));

  PointCloud b = a;
  for (auto& [x, y] : b.points) {
    x += Real(7);
    y -= Real(3);
  }
  CHECK(mean_nearest_distance(a, b) == doctest::Approx(0.0).epsilon(1e-9));

  // a genuinely different cloud keeps a positive distance
  PointCloud c = a;
  for (auto& [x, y] : c.points) x = x * Real(2);
  CHECK(mean_nearest_distance(a, c) > 0);
}

TEST_CASE("multiplication by the base maps the cloud into itself") {
  auto trib = mk(tribonacci_poly());
  PointCloud neg = point_cloud(trib, CloudSource::neg_base, 300);
  CHECK(self_similarity_check(trib, neg, 60) > 0);
  PointCloud pos = point_cloud(trib, CloudSource::pos_base, 300);
  CHECK(self_similarity_check(trib, pos, 60) > 0);
}
