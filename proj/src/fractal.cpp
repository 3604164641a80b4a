#include "negabeta/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"

namespace negabeta {

namespace {

Real place_modulus(const CReal& root) {
  return root.abs();
}

// Throws when a plotting place would make the digit series diverge.
void require_contracting(const Real& m, unsigned index) {
  if (!(m < Real(1)))
    fail(ErrorKind::UnboundedEmbedding,
         "conjugate at place " + std::to_string(index) +
             " has modulus >= 1; the digit series diverges there");
}

int source_digit_max(const BasePtr& ctx, CloudSource which) {
  return which == CloudSource::neg_base ? negbeta_max_digit(ctx)
                                        : renyi_max_digit(ctx);
}

}  // namespace

EmbeddingPlane default_plane(const BasePtr& ctx) {
  const auto& roots = base_embeddings(ctx, ctx->opt.embed_bits);
  if (roots.size() < 2)
    fail(ErrorKind::DegenerateDegree,
         "plane projection needs a conjugate place (degree >= 2)");
  EmbeddingPlane pl;
  for (unsigned k = 1; k < roots.size(); ++k) {
    if (roots[k].im != 0) {
      pl.first = pl.second = k;
      pl.complex_pair = true;
      return pl;
    }
  }
  pl.first = 1;
  pl.second = roots.size() > 2 ? 2 : 1;  // degree 2: pinned second axis
  pl.complex_pair = false;
  return pl;
}

std::pair<Real, Real> embed_point(const BasePtr& ctx, const FieldElement& v,
                                  const EmbeddingPlane& plane) {
  PrecisionGuard guard(ctx->opt.embed_bits + 32);
  if (plane.complex_pair) {
    CReal c = v.embed(plane.first);
    return {c.re, c.im};
  }
  Real x = v.embed(plane.first).re;
  if (plane.second == plane.first) return {x, Real(0)};
  Real y = v.embed(plane.second).re;
  return {x, y};
}

std::pair<Real, Real> cloud_bound(const BasePtr& ctx, CloudSource which,
                                  const EmbeddingPlane& plane) {
  PrecisionGuard guard(ctx->opt.embed_bits + 32);
  const auto& roots = base_embeddings(ctx, ctx->opt.embed_bits);
  if (plane.first >= roots.size() || plane.second >= roots.size())
    fail(ErrorKind::BadEmbeddingIndex, "plane index out of range");
  Real dmax(source_digit_max(ctx, which));
  Real mx = place_modulus(roots[plane.first]);
  require_contracting(mx, plane.first);
  Real bx = dmax / (Real(1) - mx);
  if (plane.complex_pair || plane.second == plane.first) return {bx, bx};
  Real my = place_modulus(roots[plane.second]);
  require_contracting(my, plane.second);
  return {bx, dmax / (Real(1) - my)};
}

PointCloud point_cloud(const BasePtr& ctx, CloudSource which, size_t count,
                       std::optional<EmbeddingPlane> plane) {
  PointCloud cloud;
  cloud.source = which;
  cloud.plane = plane ? *plane : default_plane(ctx);
  auto bounds = cloud_bound(ctx, which, cloud.plane);
  cloud.bound_x = bounds.first;
  cloud.bound_y = bounds.second;
  if (count == 0) return cloud;

  IntegerWindow w =
      window_with_count(ctx, count, which == CloudSource::neg_base);
  std::vector<size_t> order(w.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<FieldElement> mags;
  mags.reserve(w.points.size());
  for (const auto& p : w.points) mags.push_back(p.value.abs());
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (mags[a] < mags[b]) return true;
    if (mags[b] < mags[a]) return false;
    return w.points[a].value < w.points[b].value;  // tie: negative first
  });
  if (order.size() > count) order.resize(count);

  cloud.points.reserve(order.size());
  cloud.values.reserve(order.size());
  for (size_t idx : order) {
    cloud.points.push_back(embed_point(ctx, w.points[idx].value, cloud.plane));
    cloud.values.push_back(w.points[idx].value);
  }
  cloud.count = cloud.points.size();
  return cloud;
}

namespace {

std::string real_str(const Real& r) {
  std::ostringstream os;
  os << std::setprecision(24) << r;
  return os.str();
}

std::string render_csv(const PointCloud& cloud) {
  std::string out = "x,y\n";
  for (const auto& p : cloud.points)
    out += real_str(p.first) + "," + real_str(p.second) + "\n";
  return out;
}

std::string render_json(const PointCloud& cloud) {
  std::string out = "[";
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    if (i) out += ",";
    out += "[" + real_str(cloud.points[i].first) + "," +
           real_str(cloud.points[i].second) + "]";
  }
  out += "]\n";
  return out;
}

std::string render_svg(const PointCloud& cloud) {
  const double W = 800.0, H = 800.0;
  double bx = static_cast<double>(cloud.bound_x);
  double by = static_cast<double>(cloud.bound_y);
  if (!(bx > 0)) bx = 1.0;
  if (!(by > 0)) by = 1.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << std::setprecision(10);
  for (const auto& p : cloud.points) {
    double px = (static_cast<double>(p.first) + bx) / (2 * bx) * W;
    double py = (by - static_cast<double>(p.second)) / (2 * by) * H;
    os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_cloud(const PointCloud& cloud, const std::string& format) {
  if (format == "csv") return render_csv(cloud);
  if (format == "json") return render_json(cloud);
  if (format == "svg") return render_svg(cloud);
  fail(ErrorKind::IoFailure, "unknown export format '" + format + "'");
}

void export_cloud(const PointCloud& cloud, const std::string& format,
                  const std::string& path) {
  std::string body = render_cloud(cloud, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IoFailure, "cannot open '" + path + "'");
  out << body;
  out.flush();
  if (!out) fail(ErrorKind::IoFailure, "short write to '" + path + "'");
}

namespace {

struct DPoint {
  double x, y;
};

std::vector<DPoint> to_doubles(const PointCloud& cloud) {
  std::vector<DPoint> v;
  v.reserve(cloud.points.size());
  for (const auto& p : cloud.points)
    v.push_back({static_cast<double>(p.first), static_cast<double>(p.second)});
  return v;
}

double cross(const DPoint& o, const DPoint& a, const DPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain; returns the hull counter-clockwise without the closing
// point. Collinear inputs collapse to their extreme segment.
std::vector<DPoint> convex_hull(std::vector<DPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const DPoint& a, const DPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const DPoint& a, const DPoint& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<DPoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

CloudStats cloud_stats(const PointCloud& cloud) {
  CloudStats st;
  auto pts = to_doubles(cloud);
  if (pts.empty()) return st;
  for (const auto& p : pts) {
    st.cx += p.x;
    st.cy += p.y;
  }
  st.cx /= static_cast<double>(pts.size());
  st.cy /= static_cast<double>(pts.size());
  auto hull = convex_hull(pts);
  for (size_t i = 0; i < hull.size(); ++i)
    for (size_t j = i + 1; j < hull.size(); ++j)
      st.diameter = std::max(st.diameter, std::hypot(hull[i].x - hull[j].x,
                                                     hull[i].y - hull[j].y));
  double area2 = 0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const DPoint& a = hull[i];
    const DPoint& b = hull[(i + 1) % hull.size()];
    area2 += a.x * b.y - b.x * a.y;
  }
  st.hull_area = std::abs(area2) / 2.0;
  return st;
}

namespace {

struct CellKey {
  long ix, iy;
  bool operator==(const CellKey& o) const { return ix == o.ix && iy == o.iy; }
};

struct CellHash {
  size_t operator()(const CellKey& k) const {
    return std::hash<long>()(k.ix * 0x9e3779b9L) ^ std::hash<long>()(k.iy);
  }
};

}  // namespace

double mean_nearest_distance(const PointCloud& a, const PointCloud& b) {
  auto pa = to_doubles(a);
  auto pb = to_doubles(b);
  if (pa.empty()) return 0.0;
  if (pb.empty()) fail(ErrorKind::IoFailure, "reference cloud is empty");

  CloudStats sa = cloud_stats(a), sb = cloud_stats(b);
  double tx = sa.cx - sb.cx, ty = sa.cy - sb.cy;
  for (auto& p : pb) {
    p.x += tx;
    p.y += ty;
  }

  double lox = pb[0].x, hix = pb[0].x, loy = pb[0].y, hiy = pb[0].y;
  for (const auto& p : pb) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loy = std::min(loy, p.y);
    hiy = std::max(hiy, p.y);
  }
  double span = std::max(hix - lox, hiy - loy);
  double cell = span / (std::sqrt(static_cast<double>(pb.size())) + 1.0);
  if (!(cell > 0)) cell = 1.0;

  std::unordered_map<CellKey, std::vector<size_t>, CellHash> grid;
  auto key_of = [&](double x, double y) {
    return CellKey{static_cast<long>(std::floor(x / cell)),
                   static_cast<long>(std::floor(y / cell))};
  };
  for (size_t i = 0; i < pb.size(); ++i)
    grid[key_of(pb[i].x, pb[i].y)].push_back(i);

  double total = 0;
  for (const auto& q : pa) {
    CellKey c = key_of(q.x, q.y);
    double best = std::numeric_limits<double>::infinity();
    // Expand square rings; anything beyond ring r is at least (r-1) cells
    // away, so stop once that floor passes the best hit. The grid is
    // non-empty, so best always turns finite and the loop terminates.
    for (long ring = 0;; ++ring) {
      if (ring > 0 && best <= cell * static_cast<double>(ring - 1)) break;
      for (long dx = -ring; dx <= ring; ++dx) {
        for (long dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::labs(dx), std::labs(dy)) != ring) continue;
          auto it = grid.find(CellKey{c.ix + dx, c.iy + dy});
          if (it == grid.end()) continue;
          for (size_t i : it->second)
            best = std::min(best, std::hypot(pb[i].x - q.x, pb[i].y - q.y));
        }
      }
    }
    total += best;
  }
  return total / static_cast<double>(pa.size());
}

size_t self_similarity_check(const BasePtr& ctx, const PointCloud& cloud,
                             size_t sample) {
  if (cloud.values.empty()) return 0;
  FieldElement factor = FieldElement::beta(ctx);
  if (cloud.source == CloudSource::neg_base) factor = -factor;

  std::map<std::vector<Rat>, size_t> index;
  for (size_t i = 0; i < cloud.values.size(); ++i)
    index.emplace(cloud.values[i].coords(), i);
  FieldElement cutoff = cloud.values.back().abs();

  PrecisionGuard guard(ctx->opt.embed_bits + 32);
  CReal f1 = factor.embed(cloud.plane.first);
  CReal f2 = factor.embed(cloud.plane.second);
  Real eps(1);
  for (unsigned i = 0; i < ctx->opt.embed_bits / 2; ++i) eps /= 2;

  size_t checked = 0;
  for (size_t i = 0; i < cloud.values.size() && checked < sample; ++i) {
    FieldElement y = factor * cloud.values[i];
    if (!(y.abs() < cutoff)) continue;  // scaled out of the stored range
    auto it = index.find(y.coords());
    if (it == index.end())
      throw std::logic_error("scaled integer left the set: similarity broken");
    const auto& src = cloud.points[i];
    const auto& dst = cloud.points[it->second];
    Real ex, ey;
    if (cloud.plane.complex_pair) {
      CReal prod = CReal(src.first, src.second) * f1;
      ex = prod.re;
      ey = prod.im;
    } else {
      ex = src.first * f1.re;
      ey = src.second * f2.re;
    }
    using boost::multiprecision::abs;
    Real tol = eps * (Real(1) + abs(dst.first) + abs(dst.second));
    if (abs(ex - dst.first) > tol || abs(ey - dst.second) > tol)
      throw std::logic_error(
          "projection does not commute with scaling at the conjugate place");
    ++checked;
  }
  return checked;
}

}  // namespace negabeta
