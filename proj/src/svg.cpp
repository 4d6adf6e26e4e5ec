#include "dichroma/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dichroma::svg {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

std::string render(const Digraph& d, const PlaneEmbedding& e, const Colouring* c) {
    const int n = e.n;
    const double cx = 300, cy = 300, r = 260;
    std::vector<double> x(n, cx), y(n, cy);
    std::vector<char> pinned(n, 0);

    const Face& outer = e.faces[e.outer_face];
    const int k = outer.size();
    for (int i = 0; i < k; ++i) {
        double ang = -M_PI / 2 + 2 * M_PI * i / k;
        VertexId v = outer.boundary[i];
        x[v] = cx + r * std::cos(ang);
        y[v] = cy + r * std::sin(ang);
        pinned[v] = 1;
    }
    for (int it = 0; it < 200; ++it) {
        for (VertexId v = 0; v < n; ++v) {
            if (pinned[v] || e.degree(v) == 0) continue;
            double sx = 0, sy = 0;
            for (Dart dt : e.rotation[v]) {
                sx += x[e.dart_head(dt)];
                sy += y[e.dart_head(dt)];
            }
            x[v] = sx / e.degree(v);
            y[v] = sy / e.degree(v);
        }
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
          "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
          "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/></marker></defs>\n";
    for (const Arc& a : d.arcs()) {
        // trim the line so the arrowhead stops at the target circle
        double dx = x[a.head] - x[a.tail], dy = y[a.head] - y[a.tail];
        double len = std::hypot(dx, dy);
        double t = len > 1e-9 ? (len - 13.0) / len : 0.0;
        double ex = x[a.tail] + dx * t, ey = y[a.tail] + dy * t;
        os << "<line x1=\"" << num(x[a.tail]) << "\" y1=\"" << num(y[a.tail]) << "\" x2=\""
           << num(ex) << "\" y2=\"" << num(ey)
           << "\" stroke=\"#555555\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (VertexId v = 0; v < n; ++v) {
        const char* fill = "#cccccc";
        if (c && c->assigned(v)) fill = c->get(v) == 1 ? "#d95f02" : "#7570b3";
        os << "<circle cx=\"" << num(x[v]) << "\" cy=\"" << num(y[v])
           << "\" r=\"11\" fill=\"" << fill << "\" stroke=\"#222222\"/>\n";
        os << "<text x=\"" << num(x[v]) << "\" y=\"" << num(y[v] + 4)
           << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#ffffff\">" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace dichroma::svg
