#pragma once

#include "pcone/polyhedron.hpp"

#include <string>
#include <vector>

namespace pcone {

// Static figure emitter for two-dimensional sets. Sets are clipped to the
// box [-radius, radius]^2 exactly and only then projected to floating point
// for drawing; the geometry pipeline itself stays rational.
struct PlotSet {
    Polyhedron set;
    std::string fill;   // CSS color
    std::string label;
};

std::string render_svg(const std::vector<PlotSet>& sets, const Rational& box_radius,
                       int pixels = 480);

}  // namespace pcone
