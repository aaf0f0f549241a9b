#include "petalkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace petalkit::render {

namespace {

// All layout constants live here.
struct Layout {
    // grid
    double cell = 36;        // lattice spacing
    double margin = 30;      // border around the diagram
    double gap = 5;          // half-width of the break in an under-stick
    double marker = 7;       // X / O marker radius
    double stick_w = 2.2;    // stroke width of sticks
    // petal rose
    double tip_radius = 150;     // how far lobes reach
    double rose_margin = 40;     // border around the rose
    double control_scale = 1.55; // Bezier control distance, in tip radii
    double label_offset = 18;    // label distance beyond the lobe tip
    double font_size = 13;
};
constexpr Layout L{};

// Fixed-format floats so output bytes never depend on stream state.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2) {
    out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
        << "\" y2=\"" << fmt(y2) << "\"/>\n";
}

}  // namespace

std::string grid_svg(const grid::GridDiagram& gd) {
    grid::require_valid(gd);
    int g = gd.size;
    std::vector<int> xcol(g + 1), ocol(g + 1);
    for (int j = 1; j <= g; ++j) {
        xcol[gd.x_rows[j - 1]] = j;
        ocol[gd.o_rows[j - 1]] = j;
    }
    auto px = [&](double col) { return L.margin + (col - 0.5) * L.cell; };
    auto py = [&](double row) { return L.margin + (row - 0.5) * L.cell; };
    double side = 2 * L.margin + g * L.cell;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(side) << "\" height=\""
        << fmt(side) << "\" viewBox=\"0 0 " << fmt(side) << " " << fmt(side) << "\">\n";
    out << "<g stroke=\"black\" stroke-width=\"" << fmt(L.stick_w)
        << "\" stroke-linecap=\"round\" fill=\"none\">\n";

    // Horizontal sticks, broken where a vertical stick crosses them.
    for (int i = 1; i <= g; ++i) {
        int c1 = std::min(xcol[i], ocol[i]), c2 = std::max(xcol[i], ocol[i]);
        double cur = px(c1);
        for (int j = c1 + 1; j < c2; ++j) {
            int r1 = std::min(gd.x_rows[j - 1], gd.o_rows[j - 1]);
            int r2 = std::max(gd.x_rows[j - 1], gd.o_rows[j - 1]);
            if (r1 < i && i < r2) {
                line(out, cur, py(i), px(j) - L.gap, py(i));
                cur = px(j) + L.gap;
            }
        }
        line(out, cur, py(i), px(c2), py(i));
    }
    // Vertical sticks, always unbroken.
    for (int j = 1; j <= g; ++j) {
        int r1 = std::min(gd.x_rows[j - 1], gd.o_rows[j - 1]);
        int r2 = std::max(gd.x_rows[j - 1], gd.o_rows[j - 1]);
        line(out, px(j), py(r1), px(j), py(r2));
    }
    out << "</g>\n";

    // Markers on top: O as a ring, X as a cross, both on a clearing disk.
    out << "<g stroke=\"black\" stroke-width=\"" << fmt(L.stick_w) << "\" fill=\"white\">\n";
    for (int j = 1; j <= g; ++j) {
        double cx = px(j), xo = py(gd.o_rows[j - 1]), xx = py(gd.x_rows[j - 1]);
        out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(xo) << "\" r=\""
            << fmt(L.marker) << "\"/>\n";
        out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(xx) << "\" r=\""
            << fmt(L.marker) << "\" stroke=\"none\"/>\n";
        double d = L.marker * 0.707;
        line(out, cx - d, xx - d, cx + d, xx + d);
        line(out, cx - d, xx + d, cx + d, xx - d);
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string petal_svg(const petal::PetalPermutation& pp) {
    petal::require_valid(pp);
    int p = static_cast<int>(pp.levels.size());
    double ext = L.tip_radius + L.label_offset + L.rose_margin;
    double side = 2 * ext, c = ext;
    double beta = M_PI / p;  // lobe half-width

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(side) << "\" height=\""
        << fmt(side) << "\" viewBox=\"0 0 " << fmt(side) << " " << fmt(side) << "\">\n";

    // One closed path: lobe j leaves the center toward its tip direction and
    // returns; consecutive tip directions are (p+1)/2 slots apart, which makes
    // the path tangent-continuous straight through the center, exactly the
    // strand the level labels describe.
    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(L.stick_w) << "\" d=\"M "
        << fmt(c) << " " << fmt(c);
    std::vector<double> psi(p);
    for (int j = 0; j < p; ++j) {
        int slot = static_cast<int>((static_cast<long long>(p + 1) / 2 * j) % p);
        psi[j] = -M_PI / 2 + 2 * M_PI * slot / p;
        double d = L.control_scale * L.tip_radius;
        out << " C " << fmt(c + d * std::cos(psi[j] - beta)) << " "
            << fmt(c + d * std::sin(psi[j] - beta)) << " " << fmt(c + d * std::cos(psi[j] + beta))
            << " " << fmt(c + d * std::sin(psi[j] + beta)) << " " << fmt(c) << " " << fmt(c);
    }
    out << " Z\"/>\n";
    out << "  <circle cx=\"" << fmt(c) << "\" cy=\"" << fmt(c) << "\" r=\"3\" fill=\"black\"/>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"" << fmt(L.font_size)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (int j = 0; j < p; ++j) {
        double r = L.tip_radius + L.label_offset;
        out << "  <text x=\"" << fmt(c + r * std::cos(psi[j])) << "\" y=\""
            << fmt(c + r * std::sin(psi[j])) << "\">" << pp.levels[j] << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace petalkit::render
