#include "svg.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "report.hpp"

namespace lf {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct pt {
    double x = 0, y = 0;
};

std::string color_of(const std::string& curve_name) {
    if (curve_name.rfind("L0'", 0) == 0) return "#c62828";  // twisted red
    if (curve_name.rfind("L2'", 0) == 0) return "#1565c0";
    if (curve_name.rfind("L0", 0) == 0) return "#1565c0";   // blue
    if (curve_name.rfind("L1", 0) == 0) return "#2e7d32";   // green
    if (curve_name.rfind("L2", 0) == 0) return "#c62828";   // red
    return "#757575";
}

// plane positions of every polygon corner, in boundary order
std::vector<std::vector<pt>> layout_corners(const fiber2d& f) {
    const fiber_layout& lay = f.layout;
    int S = lay.sectors;
    double cx = 260, cy = 260, r_in = 110, r_out = 210;
    std::vector<std::vector<pt>> out(static_cast<size_t>(f.surface.face_count()));

    auto ring = [&](double radius, int s) {
        double a = 2 * kPi * s / S - kPi / 2;
        return pt{cx + radius * std::cos(a), cy + radius * std::sin(a)};
    };
    for (int s = 0; s < S; ++s) {
        out[static_cast<size_t>(lay.sector_poly[static_cast<size_t>(s)])] = {
            ring(r_in, s), ring(r_out, s), ring(r_out, s + 1), ring(r_in, s + 1)};
    }
    int idx = 0;
    for (size_t j = 0; j < lay.strip_poly.size(); ++j)
        for (int sig = 0; sig < 2; ++sig, ++idx) {
            double x0 = 40 + 130.0 * idx, y0 = 560, w = 100, h = 54;
            out[static_cast<size_t>(lay.strip_poly[j][static_cast<size_t>(sig)])] = {
                pt{x0, y0}, pt{x0 + w, y0}, pt{x0 + w, y0 + h}, pt{x0, y0 + h}};
        }
    return out;
}

pt on_edge(const std::vector<pt>& corners, int pos, double frac) {
    const pt& a = corners[static_cast<size_t>(pos)];
    const pt& b = corners[static_cast<size_t>((pos + 1) % static_cast<int>(corners.size()))];
    return pt{a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y)};
}

void draw_poly(std::ostringstream& os, const std::vector<pt>& corners, const std::string& label) {
    os << "<polygon points=\"";
    for (size_t i = 0; i < corners.size(); ++i)
        os << (i ? " " : "") << format_double(corners[i].x) << "," << format_double(corners[i].y);
    os << "\" fill=\"#f4f4f4\" stroke=\"#9e9e9e\" stroke-width=\"1\"/>\n";
    double lx = 0, ly = 0;
    for (const pt& p : corners) {
        lx += p.x;
        ly += p.y;
    }
    lx /= static_cast<double>(corners.size());
    ly /= static_cast<double>(corners.size());
    os << "<text x=\"" << format_double(lx) << "\" y=\"" << format_double(ly)
       << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#616161\">" << label << "</text>\n";
}

} // namespace

std::string render_fiber_svg(const fiber2d& fiber) {
    std::vector<std::vector<pt>> corners = layout_corners(fiber);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"660\" "
          "viewBox=\"0 0 680 660\">\n";
    os << "<rect width=\"680\" height=\"660\" fill=\"white\"/>\n";
    for (int p = 0; p < fiber.surface.face_count(); ++p)
        draw_poly(os, corners[static_cast<size_t>(p)], fiber.surface.polygon_name(p));

    auto draw_curve = [&](const routed_curve& c) {
        std::string col = color_of(c.name);
        for (const auto& comp : c.components)
            for (const chord& ch : comp) {
                pt a = on_edge(corners[static_cast<size_t>(ch.in.poly)], ch.in.pos, ch.in.frac);
                pt b = on_edge(corners[static_cast<size_t>(ch.out.poly)], ch.out.pos, ch.out.frac);
                os << "<line x1=\"" << format_double(a.x) << "\" y1=\"" << format_double(a.y)
                   << "\" x2=\"" << format_double(b.x) << "\" y2=\"" << format_double(b.y)
                   << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
            }
    };
    for (const auto& c : fiber.curves) draw_curve(c);

    double ly = 24;
    for (const auto& c : fiber.curves) {
        os << "<text x=\"16\" y=\"" << format_double(ly) << "\" font-size=\"12\" fill=\""
           << color_of(c.name) << "\">" << c.name << " (" << c.component_count()
           << " component" << (c.component_count() == 1 ? "" : "s") << ")</text>\n";
        ly += 16;
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_base_svg(const fibration_model& model) {
    double x0 = 60, x1 = 620, y = 140;
    double lo = model.critical_values.front() - 0.5, hi = model.critical_values.back() + 0.5;
    auto map = [&](cplx z) {
        return pt{x0 + (z.real() - lo) / (hi - lo) * (x1 - x0), y - z.imag() * 180};
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"280\" "
          "viewBox=\"0 0 680 280\">\n";
    os << "<rect width=\"680\" height=\"280\" fill=\"white\"/>\n";
    os << "<line x1=\"" << format_double(x0) << "\" y1=\"" << format_double(y) << "\" x2=\""
       << format_double(x1) << "\" y2=\"" << format_double(y)
       << "\" stroke=\"#9e9e9e\" stroke-width=\"1\"/>\n";

    const char* colors[] = {"#1565c0", "#2e7d32", "#c62828", "#6a1b9a"};
    for (size_t i = 0; i < model.paths.size(); ++i) {
        std::ostringstream pts;
        bool first = true;
        for (const auto& seg : model.paths[i].segments())
            for (int t = 0; t <= 64; ++t) {
                pt p = map(seg.at(t / 64.0));
                pts << (first ? "" : " ") << format_double(p.x) << "," << format_double(p.y);
                first = false;
            }
        os << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
           << colors[i % 4] << "\" stroke-width=\"1.5\"/>\n";
    }

    for (size_t i = 0; i < model.critical_values.size(); ++i) {
        pt p = map(cplx(model.critical_values[i], 0));
        os << "<circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y)
           << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << format_double(p.x) << "\" y=\"" << format_double(p.y + 22)
           << "\" font-size=\"11\" text-anchor=\"middle\">c" << i
           << " (x" << model.multiplicity[i] << ")</text>\n";
    }
    pt bp = map(cplx(model.basepoint, 0));
    os << "<circle cx=\"" << format_double(bp.x) << "\" cy=\"" << format_double(bp.y)
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<text x=\"" << format_double(bp.x) << "\" y=\"" << format_double(bp.y - 12)
       << "\" font-size=\"11\" text-anchor=\"middle\">b</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace lf
