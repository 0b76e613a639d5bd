#include "path.hpp"

#include <cmath>

namespace lf {

path_segment path_segment::line(cplx a, cplx b) {
    path_segment s;
    s.k = kind::line;
    s.a = a;
    s.b = b;
    return s;
}

path_segment path_segment::arc(cplx center, double radius, double ang0, double ang1) {
    if (radius <= 0) throw domain_error("arc radius must be positive");
    path_segment s;
    s.k = kind::arc;
    s.center = center;
    s.radius = radius;
    s.ang0 = ang0;
    s.ang1 = ang1;
    s.a = center + std::polar(radius, ang0);
    s.b = center + std::polar(radius, ang1);
    return s;
}

cplx path_segment::at(double t) const {
    if (k == kind::line) return a + t * (b - a);
    return center + std::polar(radius, ang0 + t * (ang1 - ang0));
}

cplx path_segment::deriv(double t) const {
    if (k == kind::line) return b - a;
    double ang = ang0 + t * (ang1 - ang0);
    return cplx(0, 1) * (ang1 - ang0) * std::polar(radius, ang);
}

double path_segment::length() const {
    if (k == kind::line) return std::abs(b - a);
    return radius * std::abs(ang1 - ang0);
}

void base_path::append(const path_segment& s) {
    if (!segs_.empty() && std::abs(segs_.back().b - s.a) > 1e-12)
        throw domain_error("path segments do not share endpoints");
    segs_.push_back(s);
}

base_path base_path::lower_half_circle(cplx center, double radius, bool leftward) {
    // rightward: c - r -> c + r through the lower half plane (angle -pi -> 0)
    double a0 = leftward ? 0.0 : -3.14159265358979323846;
    double a1 = leftward ? -3.14159265358979323846 : 0.0;
    return base_path(path_segment::arc(center, radius, a0, a1));
}

cplx base_path::start() const {
    if (segs_.empty()) throw domain_error("empty path");
    return segs_.front().a;
}

cplx base_path::end() const {
    if (segs_.empty()) throw domain_error("empty path");
    return segs_.back().b;
}

double base_path::length() const {
    double L = 0;
    for (const auto& s : segs_) L += s.length();
    return L;
}

base_path base_path::reversed() const {
    base_path r;
    for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
        path_segment s = *it;
        if (s.k == path_segment::kind::line) {
            std::swap(s.a, s.b);
        } else {
            std::swap(s.ang0, s.ang1);
            std::swap(s.a, s.b);
        }
        r.append(s);
    }
    return r;
}

base_path base_path::conjugated() const {
    base_path r;
    for (auto s : segs_) {
        if (s.k == path_segment::kind::line) {
            s.a = std::conj(s.a);
            s.b = std::conj(s.b);
        } else {
            s.center = std::conj(s.center);
            s.ang0 = -s.ang0;
            s.ang1 = -s.ang1;
            s.a = std::conj(s.a);
            s.b = std::conj(s.b);
        }
        r.append(s);
    }
    return r;
}

bool base_path::embedded(double tol) const {
    const int N = 128;
    for (size_t i = 0; i < segs_.size(); ++i) {
        // self-intersection inside one piece is impossible for lines and for
        // arcs spanning less than a full turn
        if (segs_[i].k == path_segment::kind::arc &&
            std::abs(segs_[i].ang1 - segs_[i].ang0) >= 2 * 3.14159265358979323846)
            return false;
        for (size_t j = i + 1; j < segs_.size(); ++j) {
            bool adjacent = (j == i + 1);
            double mind = 1e300;
            for (int p = 0; p <= N; ++p) {
                // adjacent pieces legitimately approach near the shared joint;
                // compare only their far halves
                if (adjacent && p > N / 2) continue;
                cplx zp = segs_[i].at(double(p) / N);
                for (int q = 0; q <= N; ++q) {
                    if (adjacent && q < N / 2) continue;
                    cplx zq = segs_[j].at(double(q) / N);
                    mind = std::min(mind, std::abs(zp - zq));
                }
            }
            if (mind < tol) return false;
        }
    }
    return true;
}

double base_path::distance_to(cplx p, int samples_per_segment) const {
    double mind = 1e300;
    for (const auto& s : segs_)
        for (int i = 0; i <= samples_per_segment; ++i)
            mind = std::min(mind, std::abs(s.at(double(i) / samples_per_segment) - p));
    return mind;
}

} // namespace lf
