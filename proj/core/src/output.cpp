#include "collspec/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace collspec {

std::string format_double(double v) {
    // Shortest representation that round-trips to the same bits.
    char buf[40];
    std::string best;
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            if (best.empty() || std::strlen(buf) < best.size()) best = buf;
        }
    }
    if (best.empty()) best = buf;
    return best;
}

std::string spectrum_csv(const Spectrum& spectrum) {
    std::string out;
    out.reserve(spectrum.size() * 64);
    if (spectrum.scalar) {
        out += "omega,re_chi,im_chi,abs2\n";
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            out += format_double(spectrum.omega[i]);
            out += ',';
            out += format_double(spectrum.chi_scalar[i].real());
            out += ',';
            out += format_double(spectrum.chi_scalar[i].imag());
            out += ',';
            out += format_double(spectrum.abs2[i]);
            out += '\n';
        }
    } else {
        out += "omega,re_chi_xx,im_chi_xx,re_chi_xy,im_chi_xy,re_chi_yx,im_chi_yx,re_chi_yy,im_chi_yy\n";
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            const Mat2c& m = spectrum.chi[i];
            out += format_double(spectrum.omega[i]);
            for (const Complex& z : {m.m00, m.m01, m.m10, m.m11}) {
                out += ',';
                out += format_double(z.real());
                out += ',';
                out += format_double(z.imag());
            }
            out += '\n';
        }
    }
    return out;
}

std::string trajectory_csv(const ModeTrajectory& trajectory) {
    std::string out;
    out += "t";
    for (std::size_t k = 0; k < trajectory.mode_count; ++k) {
        out += ",re_b_" + std::to_string(k) + ",im_b_" + std::to_string(k);
    }
    out += ",re_Px,im_Px,re_Py,im_Py\n";
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        out += format_double(trajectory.times[i]);
        for (std::size_t k = 0; k < trajectory.mode_count; ++k) {
            const Complex b = trajectory.amplitude(i, k);
            out += ',';
            out += format_double(b.real());
            out += ',';
            out += format_double(b.imag());
        }
        const Vec2c& p = trajectory.polarization[i];
        for (const Complex& z : {p.x, p.y}) {
            out += ',';
            out += format_double(z.real());
            out += ',';
            out += format_double(z.imag());
        }
        out += '\n';
    }
    return out;
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Tick spacing of the form {1,2,5}*10^k giving 4-8 ticks over the span.
double nice_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

std::string spectrum_svg(const std::vector<SvgCurve>& curves, const std::string& title) {
    const double width = 880.0, height = 560.0;
    const double ml = 70.0, mr = 24.0, mt = 42.0, mb = 54.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    // scalar spectra plot |chi|^2; tensor spectra fall back to the squared
    // Frobenius norm
    auto curve_value = [](const Spectrum& s, std::size_t i) {
        if (s.scalar) return s.abs2[i];
        const double f = s.chi[i].frobenius();
        return f * f;
    };

    double xmin = 0.0, xmax = 1.0, ymax = 0.0;
    bool first = true;
    for (const auto& c : curves) {
        if (c.spectrum->omega.empty()) continue;
        const double lo = c.spectrum->omega.front();
        const double hi = c.spectrum->omega.back();
        xmin = first ? lo : std::min(xmin, lo);
        xmax = first ? hi : std::max(xmax, hi);
        first = false;
        for (std::size_t i = 0; i < c.spectrum->size(); ++i)
            ymax = std::max(ymax, curve_value(*c.spectrum, i));
    }
    if (ymax <= 0.0) ymax = 1.0;
    ymax *= 1.05;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + (1.0 - y / ymax) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
        << "\" font-family=\"sans-serif\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";

    // axes and ticks
    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double xstep = nice_step(xmax - xmin);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
        svg << "<line x1=\"" << fmt2(sx(x)) << "\" y1=\"" << fmt2(mt + ph) << "\" x2=\""
            << fmt2(sx(x)) << "\" y2=\"" << fmt2(mt + ph + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt2(sx(x)) << "\" y=\"" << fmt2(mt + ph + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << format_double(x) << "</text>\n";
    }
    const double ystep = nice_step(ymax);
    for (double y = 0.0; y <= ymax + 1e-12; y += ystep) {
        svg << "<line x1=\"" << fmt2(ml - 5) << "\" y1=\"" << fmt2(sy(y)) << "\" x2=\"" << fmt2(ml)
            << "\" y2=\"" << fmt2(sy(y)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt2(ml - 9) << "\" y=\"" << fmt2(sy(y) + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << format_double(y) << "</text>\n";
    }
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">omega (gamma0 units)</text>\n";
    svg << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << mt + ph / 2
        << ")\">|chi/chi0|^2</text>\n";

    // curves
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const Spectrum& s = *curves[ci].spectrum;
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[ci % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) svg << ' ';
            svg << fmt2(sx(s.omega[i])) << ',' << fmt2(sy(curve_value(s, i)));
        }
        svg << "\"/>\n";
    }
    // legend
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const double ly = mt + 16.0 + 18.0 * static_cast<double>(ci);
        svg << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw - 120
            << "\" y2=\"" << ly << "\" stroke=\"" << kPalette[ci % 6] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << ml + pw - 112 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
            << curves[ci].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace collspec
