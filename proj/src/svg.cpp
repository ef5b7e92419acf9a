#include "alphagon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "alphagon/scene_io.hpp"

namespace alphagon {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_scene_svg(const Scene& s, const RenderOptions& opt) {
    const Collection& c = s.coll;
    double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
    bool first = true;
    std::vector<ConvexPolygon> polys;
    polys.reserve(c.shapes.size());
    for (size_t i = 0; i < c.shapes.size(); ++i) {
        polys.push_back(realize_shape(c, static_cast<int>(i)));
        for (Point p : polys.back().v) {
            if (first) {
                lo_x = hi_x = p.x;
                lo_y = hi_y = p.y;
                first = false;
            } else {
                lo_x = std::min(lo_x, p.x);
                hi_x = std::max(hi_x, p.x);
                lo_y = std::min(lo_y, p.y);
                hi_y = std::max(hi_y, p.y);
            }
        }
    }
    double span_x = std::max(hi_x - lo_x, 1e-9);
    double span_y = std::max(hi_y - lo_y, 1e-9);
    double pad = 0.03 * std::max(span_x, span_y);
    lo_x -= pad;
    lo_y -= pad;
    span_x += 2 * pad;
    span_y += 2 * pad;
    double w = opt.width;
    double h = w * span_y / span_x;
    double k = w / span_x;
    // SVG y axis points down; flip around the box.
    auto X = [&](double x) { return (x - lo_x) * k; };
    auto Y = [&](double y) { return h - (y - lo_y) * k; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (size_t i = 0; i < polys.size(); ++i) {
        out += "<polygon points=\"";
        for (size_t j = 0; j < polys[i].v.size(); ++j) {
            if (j) out += ' ';
            out += num(X(polys[i].v[j].x)) + "," + num(Y(polys[i].v[j].y));
        }
        out += "\" fill=\"#9ecae1\" fill-opacity=\"0.45\" stroke=\"#3182bd\" stroke-width=\"1\"/>\n";
    }

    if (opt.show_free_area) {
        // Mark the least free shape.
        FreenessReport rep = check_alpha_free(c);
        if (rep.worst >= 0) {
            const ConvexPolygon& p = polys[rep.worst];
            out += "<polygon points=\"";
            for (size_t j = 0; j < p.v.size(); ++j) {
                if (j) out += ' ';
                out += num(X(p.v[j].x)) + "," + num(Y(p.v[j].y));
            }
            out += "\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
            char label[160];
            std::snprintf(label, sizeof label,
                          "<text x=\"8\" y=\"16\" font-size=\"13\" fill=\"#e6550d\">min free %.6f "
                          "(%s)</text>\n",
                          rep.min_free, c.shapes[rep.worst].id.c_str());
            out += label;
        }
    }

    Drawing d = canonical_drawing(c);
    for (const auto& e : d.edges) {
        Point a = d.vertex[e.u], b = e.bend, cc = d.vertex[e.v];
        out += "<polyline points=\"" + num(X(a.x)) + "," + num(Y(a.y)) + " " + num(X(b.x)) + "," +
               num(Y(b.y)) + " " + num(X(cc.x)) + "," + num(Y(cc.y)) +
               "\" fill=\"none\" stroke=\"#636363\" stroke-width=\"1.2\"/>\n";
    }
    for (Point p : d.vertex) {
        out += "<circle cx=\"" + num(X(p.x)) + "\" cy=\"" + num(Y(p.y)) +
               "\" r=\"2.5\" fill=\"#252525\"/>\n";
    }

    if (opt.show_crossings) {
        for (const auto& r : enumerate_crossings(d)) {
            for (Point p : r.points) {
                out += "<circle cx=\"" + num(X(p.x)) + "\" cy=\"" + num(Y(p.y)) +
                       "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.6\"/>\n";
            }
        }
    }

    out += "</svg>\n";
    return out;
}

std::string threshold_csv(int n_min, int n_max) {
    if (n_min < 3 || n_max < n_min) {
        throw std::invalid_argument("threshold_csv: empty or invalid range");
    }
    std::string out = "n,s,m_star\n";
    for (int n = n_min; n <= n_max; ++n) {
        ThresholdInfo info = threshold_info(n);
        out += std::to_string(n);
        out += ',';
        out += format_double(info.value);
        out += ',';
        out += std::to_string(info.m_star);
        out += '\n';
    }
    return out;
}

std::string threshold_svg(int n_min, int n_max) {
    if (n_min < 3 || n_max < n_min) {
        throw std::invalid_argument("threshold_svg: empty or invalid range");
    }
    double w = 900, h = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    double plot_w = w - ml - mr, plot_h = h - mt - mb;
    double y_lo = 0.45, y_hi = 1.02;
    auto X = [&](double n) {
        return n_max == n_min ? ml + plot_w / 2
                              : ml + plot_w * (n - n_min) / double(n_max - n_min);
    };
    auto Y = [&](double s) { return mt + plot_h * (y_hi - s) / (y_hi - y_lo); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (double grid : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        out += "<line x1=\"" + num(ml) + "\" y1=\"" + num(Y(grid)) + "\" x2=\"" + num(w - mr) +
               "\" y2=\"" + num(Y(grid)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        char lab[160];
        std::snprintf(lab, sizeof lab,
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" fill=\"#555555\">%.2f</text>\n",
                      8.0, Y(grid) + 4, grid);
        out += lab;
    }
    out += "<polyline fill=\"none\" stroke=\"#3182bd\" stroke-width=\"1.6\" points=\"";
    for (int n = n_min; n <= n_max; ++n) {
        if (n > n_min) out += ' ';
        out += num(X(n)) + "," + num(Y(threshold_s(n)));
    }
    out += "\"/>\n";
    for (int n = n_min; n <= n_max; ++n) {
        out += "<circle cx=\"" + num(X(n)) + "\" cy=\"" + num(Y(threshold_s(n))) +
               "\" r=\"2\" fill=\"#3182bd\"/>\n";
    }
    char axis[256];
    std::snprintf(axis, sizeof axis,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" fill=\"#333333\">n from %d to "
                  "%d</text>\n",
                  ml, h - 12, n_min, n_max);
    out += axis;
    out += "</svg>\n";
    return out;
}

}  // namespace alphagon
