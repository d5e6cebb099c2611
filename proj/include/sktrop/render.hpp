/*
 * render.hpp
 * ----------
 * Deterministic SVG rendering of planar cell complexes. Every cell is
 * clipped to a rational bounding box, its vertices are enumerated exactly
 * (pairwise line intersections filtered by the constraints), and pixel
 * coordinates are produced by rational arithmetic with a fixed decimal
 * precision — no floating point anywhere, so identical inputs give
 * byte-identical documents. Two-dimensional cells are shaded, segments
 * stroked, isolated points dotted; the axes are always drawn.
 */
#pragma once

#include "complex.hpp"

namespace sktrop {

struct RenderBox {
    Rat xmin = -5, xmax = 5, ymin = -5, ymax = 5;
};

namespace detail {

// p and q relative to the center c, for counterclockwise angular order.
inline bool ccw_less(const RatVec& c, const RatVec& p, const RatVec& q) {
    Rat px = p[0] - c[0], py = p[1] - c[1];
    Rat qx = q[0] - c[0], qy = q[1] - c[1];
    int hp = (py < 0 || (py == 0 && px < 0)) ? 1 : 0;
    int hq = (qy < 0 || (qy == 0 && qx < 0)) ? 1 : 0;
    if (hp != hq) return hp < hq;
    Rat cross = px * qy - py * qx;
    if (cross != 0) return cross > 0;
    // collinear: nearer point first, for determinism
    return px * px + py * py < qx * qx + qy * qy;
}

// All vertices of the (bounded) cell: intersections of pairs of boundary
// lines that satisfy every constraint.
inline std::vector<RatVec> cell_vertices(const Cell& c) {
    std::vector<Aff> lines = c.eq;
    lines.insert(lines.end(), c.ge.begin(), c.ge.end());
    std::vector<RatVec> out;
    auto inside = [&](const RatVec& p) {
        for (const Aff& e : c.eq)
            if (e.at(p) != 0) return false;
        for (const Aff& g : c.ge)
            if (g.at(p) < 0) return false;
        return true;
    };
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const Aff &a = lines[i], &b = lines[j];
            Rat det = a.g[0] * b.g[1] - a.g[1] * b.g[0];
            if (det == 0) continue;
            RatVec p = {(-a.c * b.g[1] + b.c * a.g[1]) / det,
                        (-b.c * a.g[0] + a.c * b.g[0]) / det};
            if (!inside(p)) continue;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
    return out;
}

// Fixed-point decimal of a rational with three fraction digits, rounded
// half away from zero; exact integer arithmetic throughout.
inline std::string rat_decimal(const Rat& r) {
    using boost::multiprecision::mpz_int;
    mpz_int num = mpz_int(numerator(r)) * 2000 + (r < 0 ? -mpz_int(denominator(r))
                                                        : mpz_int(denominator(r)));
    mpz_int scaled = num / (2 * mpz_int(denominator(r)));
    bool neg = scaled < 0;
    mpz_int a = neg ? mpz_int(-scaled) : scaled;
    std::string frac = mpz_int(a % 1000).str();
    while (frac.size() < 3) frac = "0" + frac;
    return (neg ? "-" : "") + mpz_int(a / 1000).str() + "." + frac;
}

}  // namespace detail

// Deterministic SVG document of a planar complex clipped to the box.
inline std::string render_svg(const CellComplex& k, const RenderBox& box = {}) {
    if (k.n != 2) throw DomainError("render: only n = 2 complexes can be drawn");
    if (box.xmax <= box.xmin || box.ymax <= box.ymin)
        throw DomainError("render: empty bounding box");

    const int kSide = 400, kMargin = 20;
    auto px = [&](const Rat& x) {
        return detail::rat_decimal(Rat(kMargin) + (x - box.xmin) * kSide / (box.xmax - box.xmin));
    };
    auto py = [&](const Rat& y) {  // SVG y grows downward
        return detail::rat_decimal(Rat(kMargin) + (box.ymax - y) * kSide / (box.ymax - box.ymin));
    };
    auto point = [&](const RatVec& p) { return px(p[0]) + "," + py(p[1]); };

    // clip every cell to the box and bucket by dimension
    std::vector<std::pair<std::string, Cell>> clipped;
    for (const Cell& c : k.cells) {
        Cell raw = c;
        raw.ge.push_back(Aff{-box.xmin, {Rat(1), Rat(0)}});
        raw.ge.push_back(Aff{box.xmax, {Rat(-1), Rat(0)}});
        raw.ge.push_back(Aff{-box.ymin, {Rat(0), Rat(1)}});
        raw.ge.push_back(Aff{box.ymax, {Rat(0), Rat(-1)}});
        std::optional<Cell> canon = canonicalize_cell(2, raw);
        if (canon) clipped.push_back({cell_key(*canon), std::move(*canon)});
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" "
           "viewBox=\"0 0 440 440\">\n";
    svg += "<rect x=\"20\" y=\"20\" width=\"400\" height=\"400\" fill=\"white\" "
           "stroke=\"#cccccc\"/>\n";
    // axes, clipped to the box
    if (box.xmin <= 0 && 0 <= box.xmax)
        svg += "<line x1=\"" + px(0) + "\" y1=\"" + py(box.ymin) + "\" x2=\"" + px(0) +
               "\" y2=\"" + py(box.ymax) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    if (box.ymin <= 0 && 0 <= box.ymax)
        svg += "<line x1=\"" + px(box.xmin) + "\" y1=\"" + py(0) + "\" x2=\"" + px(box.xmax) +
               "\" y2=\"" + py(0) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    // dimension-2 cells first so strokes and dots stay visible
    for (int want = 2; want >= 0; --want)
        for (const auto& [key, c] : clipped) {
            if (canonical_cell_dimension(2, c) != want) continue;
            std::vector<RatVec> vs = detail::cell_vertices(c);
            if (vs.empty()) continue;
            if (want == 2) {
                RatVec center = {Rat(0), Rat(0)};
                for (const RatVec& v : vs) {
                    center[0] += v[0];
                    center[1] += v[1];
                }
                center[0] /= static_cast<int>(vs.size());
                center[1] /= static_cast<int>(vs.size());
                std::sort(vs.begin(), vs.end(), [&](const RatVec& a, const RatVec& b) {
                    return detail::ccw_less(center, a, b);
                });
                svg += "<polygon points=\"";
                for (size_t i = 0; i < vs.size(); ++i) svg += (i ? " " : "") + point(vs[i]);
                svg += "\" fill=\"#c8d8f0\" fill-opacity=\"0.7\" stroke=\"#1f4e8c\" "
                       "stroke-width=\"1\"/>\n";
            } else if (want == 1) {
                std::sort(vs.begin(), vs.end());
                svg += "<line x1=\"" + px(vs.front()[0]) + "\" y1=\"" + py(vs.front()[1]) +
                       "\" x2=\"" + px(vs.back()[0]) + "\" y2=\"" + py(vs.back()[1]) +
                       "\" stroke=\"#1f4e8c\" stroke-width=\"2\"/>\n";
            } else {
                svg += "<circle cx=\"" + px(vs.front()[0]) + "\" cy=\"" + py(vs.front()[1]) +
                       "\" r=\"3\" fill=\"#1f4e8c\"/>\n";
            }
        }
    svg += "</svg>\n";
    return svg;
}

}  // namespace sktrop
