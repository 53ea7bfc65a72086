#include "pdm/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pdm::cli {

namespace {

constexpr double width = 720, height = 450;
constexpr double left = 80, right = 170, top = 50, bottom = 60;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Roughly five ticks at 1, 2 or 5 times a power of ten.
std::vector<double> ticks(double lo, double hi) {
    const double raw = (hi - lo) / 5;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
        out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    }
    return out;
}

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series, std::size_t max_points) {
    double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            x_lo = std::min(x_lo, double(s.x[i]));
            x_hi = std::max(x_hi, double(s.x[i]));
            y_lo = std::min(y_lo, double(s.y[i]));
            y_hi = std::max(y_hi, double(s.y[i]));
        }
    }
    if (!(x_lo < x_hi)) x_lo = 0, x_hi = 1;
    if (!(y_lo < y_hi)) y_lo -= 1, y_hi += 1;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const double pw = width - left - right, ph = height - top - bottom;
    auto sx = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto sy = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
      << "</text>\n";

    o << "<g stroke=\"#ccc\" stroke-width=\"0.5\">\n";
    for (double t : ticks(x_lo, x_hi)) {
        o << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(sx(t)) << "\" y2=\""
          << num(top + ph) << "\"/>\n";
    }
    for (double t : ticks(y_lo, y_hi)) {
        o << "<line x1=\"" << num(left) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(left + pw) << "\" y2=\""
          << num(sy(t)) << "\"/>\n";
    }
    o << "</g>\n";
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    o << "<g font-size=\"11\">\n";
    for (double t : ticks(x_lo, x_hi)) {
        o << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(top + ph + 16) << "\" text-anchor=\"middle\">" << num(t)
          << "</text>\n";
    }
    for (double t : ticks(y_lo, y_hi)) {
        o << "<text x=\"" << num(left - 6) << "\" y=\"" << num(sy(t) + 4) << "\" text-anchor=\"end\">" << num(t)
          << "</text>\n";
    }
    o << "</g>\n";
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 15) << "\" text-anchor=\"middle\" font-size=\"13\">"
      << escape(x_label) << "</text>\n";
    o << "<text x=\"20\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
      << num(top + ph / 2) << ")\">" << escape(y_label) << "</text>\n";

    for (const Series& s : series) {
        const std::size_t stride = std::max<std::size_t>(1, (s.x.size() + max_points - 1) / max_points);
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
          << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); i += stride) {
            o << num(sx(double(s.x[i]))) << ',' << num(sy(double(s.y[i]))) << ' ';
        }
        if (!s.x.empty() && (s.x.size() - 1) % stride != 0) {
            o << num(sx(double(s.x.back()))) << ',' << num(sy(double(s.y.back())));
        }
        o << "\"/>\n";
    }

    double ly = top + 10;
    for (const Series& s : series) {
        const double lx = left + pw + 15;
        o << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 25) << "\" y2=\"" << num(ly)
          << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
          << "/>\n";
        o << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\" font-size=\"12\">" << escape(s.label)
          << "</text>\n";
        ly += 18;
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace pdm::cli
