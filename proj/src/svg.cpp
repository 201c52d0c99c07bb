#include "obelisk/svg.hpp"

#include <algorithm>
#include <sstream>

namespace obelisk {

namespace {

// Layout grid. Everything lands on integers so output bytes are stable.
constexpr int kStep = 40;    // vertical distance between spine vertices
constexpr int kMargin = 40;
constexpr int kDot = 4;

const char *page_color(int page) {
    static const char *palette[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98",
                                    "#b9770e", "#148f77", "#884ea0", "#717d7e"};
    return palette[page % 8];
}

} // namespace

std::string render_svg(const OrientedGraph &g, const BookEmbedding &emb) {
    ValidityReport rep = verify(g, emb);
    if (!rep.valid)
        throw error(errc::invalid_embedding, "refusing to render an invalid embedding:\n" + rep.to_text());

    int n = static_cast<int>(emb.spine.size());
    // Widest semicircle on each side decides the canvas width.
    int left_reach = 0, right_reach = 0;
    for (const auto &[arc, pl] : emb.placement) {
        if (pl.on_spine()) continue;
        int span = std::abs(spine_position(emb, arc.head) - spine_position(emb, arc.tail));
        int reach = span * kStep / 2;
        if (pl.page % 2 == 0) right_reach = std::max(right_reach, reach);
        else left_reach = std::max(left_reach, reach);
    }
    int spine_x = kMargin + left_reach + 30; // room for labels on the left
    int width = spine_x + right_reach + kMargin;
    int height = 2 * kMargin + kStep * std::max(0, n - 1);
    auto y_of = [&](int pos) { return height - kMargin - pos * kStep; }; // bottom of spine = bottom of image

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";

    if (n > 0)
        out << "<line x1=\"" << spine_x << "\" y1=\"" << y_of(n - 1) << "\" x2=\"" << spine_x
            << "\" y2=\"" << y_of(0) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    // Arcs first so vertex dots draw on top of their endpoints.
    for (const auto &[arc, pl] : emb.placement) {
        int pt = spine_position(emb, arc.tail), ph = spine_position(emb, arc.head);
        int y1 = y_of(pt), y2 = y_of(ph);
        if (pl.on_spine()) {
            // Tight arc: along the spine, shortened so the arrowhead clears the dot.
            int dir = (y2 > y1) ? 1 : -1;
            out << "<line x1=\"" << spine_x << "\" y1=\"" << (y1 + dir * (kDot + 2))
                << "\" x2=\"" << spine_x << "\" y2=\"" << (y2 - dir * (kDot + 2))
                << "\" stroke=\"#000000\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        } else {
            // Semicircle whose radius follows the spine span; side alternates by page.
            int r = std::abs(y2 - y1) / 2;
            int sweep = (pl.page % 2 == 0) ? (y2 > y1 ? 0 : 1) : (y2 > y1 ? 1 : 0);
            out << "<path d=\"M " << spine_x << ' ' << y1 << " A " << r << ' ' << r
                << " 0 0 " << sweep << ' ' << spine_x << ' ' << y2
                << "\" fill=\"none\" stroke=\"" << page_color(pl.page)
                << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        }
    }

    for (int pos = 0; pos < n; ++pos) {
        int y = y_of(pos);
        out << "<circle cx=\"" << spine_x << "\" cy=\"" << y << "\" r=\"" << kDot
            << "\" fill=\"#000000\"/>\n";
        out << "<text x=\"" << (spine_x - kDot - 6) << "\" y=\"" << (y + 4)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
            << emb.spine[pos] << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace obelisk
