#pragma once

#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace lf {

// Piecewise path in the base disk: line segments and circular arcs, traversed
// in order. Each piece is parameterized on [0, 1].
struct path_segment {
    enum class kind { line, arc };
    kind k = kind::line;
    cplx a, b;                      // line endpoints
    cplx center;                    // arc data
    double radius = 0;
    double ang0 = 0, ang1 = 0;      // arc runs ang0 -> ang1 (sign gives orientation)

    static path_segment line(cplx a, cplx b);
    static path_segment arc(cplx center, double radius, double ang0, double ang1);

    cplx at(double t) const;
    cplx deriv(double t) const;
    double length() const;
};

class base_path {
  public:
    base_path() = default;
    explicit base_path(path_segment s) { append(s); }

    // consecutive segments must share endpoints (1e-12)
    void append(const path_segment& s);

    static base_path segment(cplx a, cplx b) { return base_path(path_segment::line(a, b)); }
    // half circle through the lower half plane from c - r to c + r (or back)
    static base_path lower_half_circle(cplx center, double radius, bool leftward = false);

    const std::vector<path_segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    cplx start() const;
    cplx end() const;
    double length() const;

    base_path reversed() const;
    base_path conjugated() const;

    // pairwise minimum distance between non-adjacent pieces stays above tol
    // (sampled); adjacent pieces may touch only at the shared endpoint
    bool embedded(double tol = 1e-9) const;

    // minimum distance from a point to the path (sampled)
    double distance_to(cplx p, int samples_per_segment = 256) const;

  private:
    std::vector<path_segment> segs_;
};

} // namespace lf
