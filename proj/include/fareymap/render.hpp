#pragma once

/**
 * SVG rendering of the universal Farey tessellation on the upper half-plane.
 *
 * Vertices are the reduced rationals a/c with c <= max_denominator inside the
 * viewport, plus the point at infinity. Edges join unimodular pairs
 * (|a*d - b*c| = 1) and are drawn as semicircles perpendicular to the real
 * axis; the edges to infinity are vertical segments at the integers, clipped
 * to the top of the image. Edge enumeration works by mediant subdivision of
 * integer intervals, which visits every unimodular pair with denominators up
 * to the bound exactly once.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "fareymap/errors.hpp"

namespace fareymap {

struct render_spec {
    std::int64_t max_denominator = 6;
    double x_min = 0.0;
    double x_max = 1.0;
    int width = 800;
    int height = 400;
};

namespace detail {

// positive-denominator rationals, compared exactly
struct rational {
    std::int64_t p, q;
    friend bool operator==(const rational& a, const rational& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const rational& a, const rational& b) {
        if (a.p * b.q != b.p * a.q) return a.p * b.q < b.p * a.q;
        return a.q < b.q;
    }
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

struct farey_arc {
    rational lo, hi;
    friend bool operator<(const farey_arc& a, const farey_arc& b) {
        if (a.lo == b.lo) return a.hi < b.hi;
        return a.lo < b.lo;
    }
};

inline std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

} // namespace detail

inline std::string render_universal_farey(const render_spec& spec) {
    if (spec.max_denominator < 1) throw precondition_error("max_denominator must be >= 1");
    if (!(spec.x_min < spec.x_max)) throw precondition_error("viewport must satisfy x_min < x_max");
    if (spec.width <= 0 || spec.height <= 0) throw precondition_error("image size must be positive");

    using detail::rational;
    std::vector<detail::farey_arc> arcs;

    // Mediant subdivision of [a/c, b/d]; every subtree lies inside that span,
    // so whole subtrees outside the viewport are skipped.
    const auto subdivide = [&](auto&& self, std::int64_t a, std::int64_t c, std::int64_t b,
                               std::int64_t d) -> void {
        const rational lo{a, c}, hi{b, d};
        if (hi.value() < spec.x_min || lo.value() > spec.x_max) return;
        arcs.push_back({lo, hi});
        if (c + d <= spec.max_denominator) {
            self(self, a, c, a + b, c + d);
            self(self, a + b, c + d, b, d);
        }
    };

    const std::int64_t k_lo = static_cast<std::int64_t>(std::floor(spec.x_min));
    const std::int64_t k_hi = static_cast<std::int64_t>(std::ceil(spec.x_max));
    for (std::int64_t k = k_lo; k < k_hi; ++k) subdivide(subdivide, k, 1, k + 1, 1);
    std::sort(arcs.begin(), arcs.end());

    std::vector<rational> labeled;
    for (const auto& arc : arcs) {
        for (const auto& r : {arc.lo, arc.hi})
            if (r.value() >= spec.x_min && r.value() <= spec.x_max) labeled.push_back(r);
    }
    std::sort(labeled.begin(), labeled.end());
    labeled.erase(std::unique(labeled.begin(), labeled.end()), labeled.end());

    const double units_per_px = (spec.x_max - spec.x_min) / spec.width;
    const double axis_y = spec.height - 24.0;
    const auto to_px = [&](double x) { return (x - spec.x_min) / units_per_px; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " + std::to_string(spec.height) +
           "\">\n";
    svg += "<rect width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" fill=\"white\"/>\n";
    svg += "<line x1=\"0\" y1=\"" + detail::fixed3(axis_y) + "\" x2=\"" +
           std::to_string(spec.width) + "\" y2=\"" + detail::fixed3(axis_y) +
           "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";

    // vertical edges to infinity at the integers
    for (std::int64_t k = static_cast<std::int64_t>(std::ceil(spec.x_min));
         k <= static_cast<std::int64_t>(std::floor(spec.x_max)); ++k) {
        const auto x = detail::fixed3(to_px(static_cast<double>(k)));
        svg += "<line x1=\"" + x + "\" y1=\"" + detail::fixed3(axis_y) + "\" x2=\"" + x +
               "\" y2=\"0.000\"/>\n";
    }

    for (const auto& arc : arcs) {
        const double x1 = to_px(arc.lo.value());
        const double x2 = to_px(arc.hi.value());
        const double r = (x2 - x1) / 2.0;
        svg += "<path d=\"M " + detail::fixed3(x1) + " " + detail::fixed3(axis_y) + " A " +
               detail::fixed3(r) + " " + detail::fixed3(r) + " 0 0 1 " + detail::fixed3(x2) + " " +
               detail::fixed3(axis_y) + "\"/>\n";
    }
    svg += "</g>\n";

    svg += "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" fill=\"black\">\n";
    for (const auto& r : labeled) {
        svg += "<text x=\"" + detail::fixed3(to_px(r.value())) + "\" y=\"" +
               detail::fixed3(axis_y + 14.0) + "\">" + std::to_string(r.p) + "/" +
               std::to_string(r.q) + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace fareymap
