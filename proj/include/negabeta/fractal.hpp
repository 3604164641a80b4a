#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negabeta/base.hpp"
#include "negabeta/integer_sets.hpp"

namespace negabeta {

enum class CloudSource { pos_base, neg_base };

// Which numeric places of the field serve as plot axes.
//
// With a complex place the two axes are its real and imaginary part
// (complex_pair = true; `second` is ignored). Otherwise two real places
// give the coordinates directly; `second` may equal `first` for degree-2
// fields, in which case the y coordinate is pinned to zero.
struct EmbeddingPlane {
  unsigned first = 1;
  unsigned second = 1;
  bool complex_pair = false;
};

struct PointCloud {
  std::vector<std::pair<Real, Real>> points;
  CloudSource source = CloudSource::neg_base;
  size_t count = 0;
  // Values behind the points, in the same order (ascending |value|), kept
  // for exact set-level checks; and the plane they were projected through.
  std::vector<FieldElement> values;
  EmbeddingPlane plane;
  // Exact geometric-series box: every point satisfies |x| <= bound_x,
  // |y| <= bound_y.
  Real bound_x, bound_y;
};

// The plane used when the caller does not pick one: the conjugate pair
// (re, im) when the modulus has a complex root, else the first two real
// conjugate places, else (degree 2) the lone conjugate over a zero second
// axis. Throws UnboundedEmbedding when a selected place has modulus >= 1
// and DegenerateDegree below degree 2.
EmbeddingPlane default_plane(const BasePtr& ctx);

// Coordinates of one value in the given plane.
std::pair<Real, Real> embed_point(const BasePtr& ctx, const FieldElement& v,
                                  const EmbeddingPlane& plane);

// Per-axis bound digit_max * sum |root|^i = digit_max / (1 - |root|) on the
// embedded integers, evaluated at the context's embedding precision.
std::pair<Real, Real> cloud_bound(const BasePtr& ctx, CloudSource which,
                                  const EmbeddingPlane& plane);

// Projections of the first `count` integers of the chosen set ordered by
// |value| (ties negative first). Throws TrivialSet when the negative-base
// set is {0}, UnboundedEmbedding when a selected place has modulus >= 1.
PointCloud point_cloud(const BasePtr& ctx, CloudSource which, size_t count,
                       std::optional<EmbeddingPlane> plane = std::nullopt);

// Writes csv ("x,y" header), json (array of [x, y] pairs), or svg (800x800,
// viewbox from the exact bound so same-base clouds share a scale, radius
// 0.5 dots). Unknown format or an unwritable path throws IoFailure.
void export_cloud(const PointCloud& cloud, const std::string& format,
                  const std::string& path);
std::string render_cloud(const PointCloud& cloud, const std::string& format);

// Scalar summaries used by the similarity checks, in double precision.
struct CloudStats {
  double cx = 0, cy = 0;    // centroid
  double diameter = 0;      // max pairwise distance (via the hull)
  double hull_area = 0;     // convex hull area
};
CloudStats cloud_stats(const PointCloud& cloud);

// Mean distance from each point of `a` to its nearest neighbour in `b`,
// after translating `b` so the centroids coincide. Grid-accelerated.
double mean_nearest_distance(const PointCloud& a, const PointCloud& b);

// Multiplication by the (signed) base maps the integer set into itself and
// acts on projections as multiplication by the conjugate. Checks both on
// the first `sample` values whose scaled magnitude stays strictly inside
// the cloud's value range: exact set membership (coordinate keys) and
// coordinate agreement of the two projection routes. Returns the number of
// values actually checked; throws on any violation.
size_t self_similarity_check(const BasePtr& ctx, const PointCloud& cloud,
                             size_t sample);

}  // namespace negabeta
