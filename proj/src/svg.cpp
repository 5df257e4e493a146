#include "riderlab/svg.hpp"
#include "riderlab/errors.hpp"

#include <sstream>

namespace riderlab {

namespace {

long long cross_ll(const Point& v, const Move& m) {
    Rat c = v.x * Rat(m.d) - v.y * Rat(m.c);
    return c == 0 ? 0 : (c > 0 ? 1 : -1);
}

std::string int_str(const Rat& v) { return num(v).str(); }

} // namespace

std::string render_svg(const Piece& p, const Config& integral, const Int& delta) {
    if (delta < 1) throw ValidationError("render_svg: delta must be >= 1");
    for (const Point& pt : integral) {
        if (den(pt.x) != 1 || den(pt.y) != 1)
            throw ValidationError("render_svg: configuration must have integral coordinates");
        if (pt.x < 0 || pt.y < 0 || pt.x > Rat(delta) || pt.y > Rat(delta))
            throw ValidationError("render_svg: coordinates must lie in [0, delta]");
    }
    const long long cell = 40;
    const long long margin = 40;
    const Int side = delta * cell + 2 * margin;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
        << side << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    svg << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"#ffffff\"/>\n";

    auto px = [&](const Rat& x) { return Int(margin) + num(x) * cell; };
    auto py = [&](const Rat& y) { return Int(margin) + (delta - num(y)) * cell; };

    // Grid (border always; inner lines only while readable).
    const Int lo = margin, hi = margin + delta * cell;
    if (delta <= 64) {
        for (Int g = 0; g <= delta; ++g) {
            Int v = margin + g * cell;
            const char* col = (g == 0 || g == delta) ? "#555555" : "#cccccc";
            svg << "<line x1=\"" << v << "\" y1=\"" << lo << "\" x2=\"" << v << "\" y2=\""
                << hi << "\" stroke=\"" << col << "\" stroke-width=\"1\"/>\n";
            svg << "<line x1=\"" << lo << "\" y1=\"" << v << "\" x2=\"" << hi << "\" y2=\""
                << v << "\" stroke=\"" << col << "\" stroke-width=\"1\"/>\n";
        }
    } else {
        svg << "<rect x=\"" << lo << "\" y=\"" << lo << "\" width=\"" << delta * cell
            << "\" height=\"" << delta * cell
            << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    }

    // Attack segments.
    for (std::size_t i = 0; i < integral.size(); ++i)
        for (std::size_t j = i + 1; j < integral.size(); ++j) {
            Point d{integral[j].x - integral[i].x, integral[j].y - integral[i].y};
            bool attacking = false;
            for (const Move& m : p.moves)
                if (cross_ll(d, m) == 0) attacking = true;
            if (!attacking) continue;
            svg << "<line x1=\"" << px(integral[i].x) << "\" y1=\"" << py(integral[i].y)
                << "\" x2=\"" << px(integral[j].x) << "\" y2=\"" << py(integral[j].y)
                << "\" stroke=\"#cc3333\" stroke-width=\"2\" stroke-opacity=\"0.6\"/>\n";
        }

    // Pieces.
    for (std::size_t i = 0; i < integral.size(); ++i) {
        svg << "<circle cx=\"" << px(integral[i].x) << "\" cy=\"" << py(integral[i].y)
            << "\" r=\"14\" fill=\"#2b6cb0\"/>\n";
        svg << "<text x=\"" << px(integral[i].x) << "\" y=\""
            << py(integral[i].y) + Int(5)
            << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#ffffff\" "
               "text-anchor=\"middle\">"
            << (i + 1) << "</text>\n";
    }
    svg << "<text x=\"" << margin << "\" y=\"" << margin - 12
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#333333\">" << p.name
        << ", grid " << int_str(Rat(delta)) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace riderlab
