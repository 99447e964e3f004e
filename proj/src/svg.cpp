#include "pcone/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pcone {

namespace {

double to_double(const Rational& q) {
    return numerator_of(q).convert_to<double>() / denominator_of(q).convert_to<double>();
}

Polyhedron box(const Rational& radius) {
    HRep h;
    h.dim = 2;
    h.halfspaces.push_back({{Rational(1), Rational(0)}, radius});
    h.halfspaces.push_back({{Rational(-1), Rational(0)}, radius});
    h.halfspaces.push_back({{Rational(0), Rational(1)}, radius});
    h.halfspaces.push_back({{Rational(0), Rational(-1)}, radius});
    return Polyhedron::from_hrep(h);
}

}  // namespace

std::string render_svg(const std::vector<PlotSet>& sets, const Rational& box_radius,
                       int pixels) {
    if (box_radius <= 0) throw std::invalid_argument("render_svg: box radius must be positive");
    const double r = to_double(box_radius);
    const double s = pixels / (2 * r);
    auto px = [&](double x) { return (x + r) * s; };
    auto py = [&](double y) { return (r - y) * s; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\""
        << pixels << "\" viewBox=\"0 0 " << pixels << " " << pixels << "\">\n";
    out << "  <rect width=\"" << pixels << "\" height=\"" << pixels
        << "\" fill=\"white\" stroke=\"#444\"/>\n";
    out << "  <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << pixels << "\" y2=\"" << py(0)
        << "\" stroke=\"#bbb\"/>\n";
    out << "  <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << pixels
        << "\" stroke=\"#bbb\"/>\n";

    const Polyhedron clip_box = box(box_radius);
    double label_y = 18;
    for (const auto& ps : sets) {
        if (ps.set.dim() != 2) throw std::invalid_argument("render_svg: sets must be planar");
        const Polyhedron clipped = intersect(ps.set, clip_box);
        if (!clipped.is_empty()) {
            // The clipped region is a bounded convex polygon: order its
            // vertices by angle around the centroid.
            std::vector<std::pair<double, double>> pts;
            for (const auto& v : clipped.vrep().vertices) {
                pts.emplace_back(to_double(v[0]), to_double(v[1]));
            }
            double cx = 0, cy = 0;
            for (auto& [x, y] : pts) {
                cx += x;
                cy += y;
            }
            cx /= static_cast<double>(pts.size());
            cy /= static_cast<double>(pts.size());
            std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
                return std::atan2(a.second - cy, a.first - cx) <
                       std::atan2(b.second - cy, b.first - cx);
            });
            if (pts.size() >= 2) {
                out << "  <polygon points=\"";
                for (const auto& [x, y] : pts) out << px(x) << "," << py(y) << " ";
                out << "\" fill=\"" << ps.fill << "\" fill-opacity=\"0.45\" stroke=\""
                    << ps.fill << "\"/>\n";
            } else if (pts.size() == 1) {
                out << "  <circle cx=\"" << px(pts[0].first) << "\" cy=\"" << py(pts[0].second)
                    << "\" r=\"3\" fill=\"" << ps.fill << "\"/>\n";
            }
        }
        if (!ps.label.empty()) {
            out << "  <text x=\"8\" y=\"" << label_y << "\" fill=\"" << ps.fill
                << "\" font-family=\"monospace\" font-size=\"14\">" << ps.label << "</text>\n";
            label_y += 18;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pcone
