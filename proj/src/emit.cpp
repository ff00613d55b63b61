#include "nrlab/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

// Locale-independent decimal formatting with 17 significant digits, which
// is enough to reproduce any double bit-exactly on parse.
std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

}  // namespace

void emit_csv(const CurveSamples& curve, std::ostream& out) {
    out << "theta,re,im\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << format_double(curve.params[i]) << ',' << format_double(curve.points[i].real())
            << ',' << format_double(curve.points[i].imag()) << '\n';
    }
    out.flush();
    if (!out) throw IoError("emit_csv: write failed");
}

void emit_svg(const std::vector<CurveSamples>& curves, std::ostream& out) {
    if (curves.empty()) throw InvalidParameterError("emit_svg: need at least one curve");

    // Joint bounding box in flipped-y coordinates (so the upper half-plane
    // renders upward), padded by 5% per dimension.
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const CurveSamples& c : curves) {
        for (const Complex& p : c.points) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, -p.imag());
            ymax = std::max(ymax, -p.imag());
        }
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0.0) w = 1.0;
    if (h <= 0.0) h = 1.0;
    xmin -= 0.05 * w;
    xmax += 0.05 * w;
    ymin -= 0.05 * h;
    ymax += 0.05 * h;
    w = xmax - xmin;
    h = ymax - ymin;

    // Uniform scale: the longer side spans 1000 user units.
    const double scale = 1000.0 / std::max(w, h);
    const double width = w * scale, height = h * scale;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << format_fixed(width, 2) << "\" height=\"" << format_fixed(height, 2)
        << "\" viewBox=\"" << format_fixed(xmin * scale, 4) << ' '
        << format_fixed(ymin * scale, 4) << ' ' << format_fixed(width, 4) << ' '
        << format_fixed(height, 4) << "\">\n";
    for (const CurveSamples& c : curves) {
        out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i <= c.size(); ++i) {
            const Complex& p = c.points[i % c.size()];  // repeat the first point to close
            if (i > 0) out << ' ';
            out << format_fixed(p.real() * scale, 4) << ',' << format_fixed(-p.imag() * scale, 4);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    out.flush();
    if (!out) throw IoError("emit_svg: write failed");
}

}  // namespace nrlab
