#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quasitoric/document.hpp"

namespace quasitoric {

struct RenderSpec {
    enum class Target { Polytope, Fan, Configuration };

    std::optional<Target> target;                // first available part when unset
    std::optional<std::array<Rational, 4>> viewport; // xmin, ymin, xmax, ymax
    bool labels = true;
    double stroke = 0.01; // in world units
    int pixels = 400;
};

namespace svg {

/// Display value: 12 significant digits, never "-0".
inline std::string num(double x)
{
    if (std::abs(x) < 1e-15)
        x = 0;
    std::ostringstream ss;
    ss << std::setprecision(12) << x;
    return ss.str();
}

struct Point {
    double x = 0, y = 0;
};

inline Point point_of(const Vector& v) { return {v[0].to_double(), v[1].to_double()}; }

inline Point unit(Point p)
{
    const double r = std::hypot(p.x, p.y);
    return r > 0 ? Point{p.x / r, p.y / r} : p;
}

/// Collects elements in world coordinates and tracks their bounding box.
class Canvas {
public:
    void line(Point a, Point b, const std::string& cls)
    {
        grow(a);
        grow(b);
        body_ << "    <line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
              << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
    }

    void polygon(const std::vector<Point>& pts, const std::string& cls)
    {
        body_ << "    <polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            grow(pts[i]);
            body_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
        }
        body_ << "\"/>\n";
    }

    // Text is flipped back so that it reads upright inside the y-up group.
    void label(Point p, const std::string& text)
    {
        body_ << "    <text class=\"label\" x=\"" << num(p.x) << "\" y=\"" << num(-p.y)
              << "\" transform=\"scale(1,-1)\">" << text << "</text>\n";
    }

    bool empty() const { return !any_; }

    std::string finish(const RenderSpec& spec) const
    {
        double xmin = lo_.x, ymin = lo_.y, xmax = hi_.x, ymax = hi_.y;
        if (spec.viewport) {
            xmin = (*spec.viewport)[0].get_d();
            ymin = (*spec.viewport)[1].get_d();
            xmax = (*spec.viewport)[2].get_d();
            ymax = (*spec.viewport)[3].get_d();
        } else {
            const double pad = 0.15 * std::max({xmax - xmin, ymax - ymin, 1e-9});
            xmin -= pad;
            ymin -= pad;
            xmax += pad;
            ymax += pad;
        }
        const double w = xmax - xmin, h = ymax - ymin;
        const double font = 0.05 * std::max(w, h);
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.pixels << "\" height=\""
            << spec.pixels << "\" viewBox=\"" << num(xmin) << " " << num(-ymax) << " " << num(w) << " " << num(h)
            << "\">\n"
            << "  <defs>\n"
            << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
               "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker>\n"
            << "  </defs>\n"
            << "  <style>\n"
            << "    line, polygon { stroke: black; stroke-width: " << num(spec.stroke * std::max(w, h)) << "; }\n"
            << "    .polytope { fill: #dde8f4; }\n"
            << "    .sector { fill: #f4e3c8; fill-opacity: 0.6; stroke: none; }\n"
            << "    .normal, .vector { stroke: #b03030; marker-end: url(#arrow); }\n"
            << "    .ghost { stroke: #808080; stroke-dasharray: " << num(0.02 * std::max(w, h))
            << "; marker-end: url(#arrow); }\n"
            << "    .label { font-size: " << num(font) << "px; font-family: sans-serif; }\n"
            << "  </style>\n"
            << "  <g transform=\"scale(1,-1)\">\n"
            << body_.str() << "  </g>\n"
            << "</svg>\n";
        return out.str();
    }

private:
    void grow(Point p)
    {
        if (!any_) {
            lo_ = hi_ = p;
            any_ = true;
            return;
        }
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }

    std::ostringstream body_;
    Point lo_, hi_;
    bool any_ = false;
};

inline void draw_polytope(Canvas& c, const HalfspaceRep& h, const RenderSpec& spec)
{
    const VertexRep v = vertices_from_halfspaces(h);
    std::vector<Point> pts;
    Point centre;
    for (const auto& x : v.vertices) {
        pts.push_back(point_of(x));
        centre.x += pts.back().x / static_cast<double>(v.vertices.size());
        centre.y += pts.back().y / static_cast<double>(v.vertices.size());
    }
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto angle = [&](std::size_t i) { return std::atan2(pts[i].y - centre.y, pts[i].x - centre.x); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    std::vector<Point> ring;
    double diameter = 0;
    for (auto i : order) {
        ring.push_back(pts[i]);
        for (const auto& q : pts)
            diameter = std::max(diameter, std::hypot(q.x - pts[i].x, q.y - pts[i].y));
    }
    c.polygon(ring, "polytope");

    const double len = 0.2 * diameter;
    for (std::size_t j = 0; j < h.facets.size(); ++j) {
        std::vector<Point> on;
        for (std::size_t i = 0; i < v.vertices.size(); ++i)
            if (std::binary_search(v.vertex_facets[i].begin(), v.vertex_facets[i].end(), j))
                on.push_back(pts[i]);
        if (on.size() != 2)
            continue; // redundant facet
        const Point mid{(on[0].x + on[1].x) / 2, (on[0].y + on[1].y) / 2};
        const Point u = unit(point_of(h.facets[j].normal));
        const Point tip{mid.x + len * u.x, mid.y + len * u.y};
        c.line(mid, tip, "normal");
        if (spec.labels)
            c.label(tip, std::to_string(j + 1));
    }
}

inline void draw_fan(Canvas& c, const Fan& f, const RenderSpec& spec)
{
    const Point origin;
    for (const auto& cone : f.maximal_cones())
        if (cone.size() == 2)
            c.polygon({origin, unit(point_of(f.rays[cone[0]])), unit(point_of(f.rays[cone[1]]))}, "sector");
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const Point u = unit(point_of(f.rays[i]));
        c.line(origin, u, "ray");
        if (spec.labels)
            c.label({1.08 * u.x, 1.08 * u.y}, std::to_string(i + 1));
    }
}

inline void draw_configuration(Canvas& c, const VectorConfiguration& v, const RenderSpec& spec)
{
    const Point origin;
    for (std::size_t i = 0; i < v.p(); ++i) {
        const bool ghost = std::binary_search(v.ghosts.begin(), v.ghosts.end(), i);
        const Point p = point_of(v.vectors[i]);
        c.line(origin, p, ghost ? "ghost" : "vector");
        if (spec.labels)
            c.label({1.08 * p.x, 1.08 * p.y}, std::to_string(i + 1));
    }
}

} // namespace svg

/// Planar drawing of one part of a document. A document with nothing to
/// draw gives an empty, well-formed picture.
inline std::string render_svg(const Document& d, const RenderSpec& spec = {})
{
    using Target = RenderSpec::Target;
    std::optional<Target> target = spec.target;
    if (!target) {
        if (d.polytope)
            target = Target::Polytope;
        else if (d.fan)
            target = Target::Fan;
        else if (d.configuration)
            target = Target::Configuration;
    }
    svg::Canvas c;
    if (target) {
        if (d.n != 2)
            raise(ErrorKind::DimensionTooHigh, "only planar bodies are rendered, got n = " + std::to_string(d.n));
        switch (*target) {
        case Target::Polytope:
            if (!d.polytope)
                raise(ErrorKind::ParseError, "document has no polytope to render");
            svg::draw_polytope(c, *d.polytope, spec);
            break;
        case Target::Fan:
            if (d.fan)
                svg::draw_fan(c, *d.fan, spec);
            else if (d.polytope)
                svg::draw_fan(c, normal_fan(*d.polytope), spec);
            else
                raise(ErrorKind::ParseError, "document has no fan to render");
            break;
        case Target::Configuration:
            if (!d.configuration)
                raise(ErrorKind::ParseError, "document has no configuration to render");
            svg::draw_configuration(c, *d.configuration, spec);
            break;
        }
    }
    if (c.empty() && !spec.viewport) {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.pixels << "\" height=\""
            << spec.pixels << "\" viewBox=\"0 0 1 1\"/>\n";
        return out.str();
    }
    return c.finish(spec);
}

} // namespace quasitoric
