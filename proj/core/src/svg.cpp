#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "femvar/exact_solution.hpp"
#include "femvar/output.hpp"

namespace femvar::io {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;  // room for the legend
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr double kLogFloor = 1e-16;
constexpr int kExactSamples = 401;

constexpr std::array<const char*, 7> kMethodColors = {"#1f77b4", "#7f7f7f", "#2ca02c", "#d62728",
                                                      "#ff7f0e", "#9467bd", "#8c564b"};
constexpr std::array<const char*, 6> kDashes = {"", "8,4", "2,3", "10,3,2,3", "4,4", "1,6"};
constexpr std::array<const char*, 6> kExactColors = {"#000000", "#1f77b4", "#d62728",
                                                     "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fixed(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::string label(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

const char* method_color(MethodKind m) { return kMethodColors[static_cast<std::size_t>(m)]; }

struct Axis {
    double lo;
    double hi;
    bool log;

    double map(double v, double pixel_lo, double pixel_hi) const {
        const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                             : (v - lo) / (hi - lo);
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }
};

std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    double step = magnitude;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * magnitude;
        if (span / step <= 6.0) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) {
        ticks.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    }
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> ticks;
    const int first = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
    const int last = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
    const int stride = std::max(1, (last - first) / 10 + 1);
    for (int e = first; e <= last; e += stride) ticks.push_back(std::pow(10.0, e));
    return ticks;
}

class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label, Axis x, Axis y)
        : x_(x), y_(y) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
             << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
             << "<defs><clipPath id=\"plot\"><rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop)
             << "\" width=\"" << fixed(plot_right() - kLeft) << "\" height=\"" << fixed(plot_bottom() - kTop)
             << "\"/></clipPath></defs>\n"
             << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
             << title << "</text>\n";
        draw_axes(x_label, y_label);
    }

    void polyline(const std::vector<std::pair<double, double>>& points, const char* color, const char* dash,
                  double width = 1.6) {
        if (points.size() < 2) {
            if (points.size() == 1) marker(points[0], color);
            return;
        }
        out_ << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
             << fixed(width) << '"';
        if (dash[0] != '\0') out_ << " stroke-dasharray=\"" << dash << '"';
        out_ << " points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) out_ << ' ';
            out_ << fixed(px(points[i].first)) << ',' << fixed(py(points[i].second));
        }
        out_ << "\"/>\n";
    }

    void marker(std::pair<double, double> p, const char* color) {
        out_ << "<circle clip-path=\"url(#plot)\" cx=\"" << fixed(px(p.first)) << "\" cy=\"" << fixed(py(p.second))
             << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }

    void legend_entry(const std::string& text, const char* color, const char* dash) {
        const double x = plot_right() + 15.0;
        const double y = kTop + 10.0 + 18.0 * legend_rows_++;
        out_ << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x + 28) << "\" y2=\""
             << fixed(y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (dash[0] != '\0') out_ << " stroke-dasharray=\"" << dash << '"';
        out_ << "/>\n<text x=\"" << fixed(x + 34) << "\" y=\"" << fixed(y + 4) << "\" font-size=\"12\">" << text
             << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    static double plot_right() { return kWidth - kRight; }
    static double plot_bottom() { return kHeight - kBottom; }
    double px(double v) const { return x_.map(v, kLeft, plot_right()); }
    double py(double v) const { return y_.map(v, plot_bottom(), kTop); }

    void draw_axes(const std::string& x_label, const std::string& y_label) {
        out_ << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\""
             << fixed(plot_right() - kLeft) << "\" height=\"" << fixed(plot_bottom() - kTop)
             << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (double t : x_.log ? log_ticks(x_.lo, x_.hi) : linear_ticks(x_.lo, x_.hi)) {
            const double x = px(t);
            out_ << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(plot_bottom()) << "\" x2=\"" << fixed(x)
                 << "\" y2=\"" << fixed(plot_bottom() + 5) << "\" stroke=\"black\"/>\n"
                 << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(plot_bottom() + 20)
                 << "\" text-anchor=\"middle\" font-size=\"12\">" << label(t) << "</text>\n";
        }
        for (double t : y_.log ? log_ticks(y_.lo, y_.hi) : linear_ticks(y_.lo, y_.hi)) {
            const double y = py(t);
            out_ << "<line x1=\"" << fixed(kLeft - 5) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(kLeft)
                 << "\" y2=\"" << fixed(y) << "\" stroke=\"black\"/>\n"
                 << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(plot_right())
                 << "\" y2=\"" << fixed(y) << "\" stroke=\"#e0e0e0\"/>\n"
                 << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(y + 4)
                 << "\" text-anchor=\"end\" font-size=\"12\">" << label(t) << "</text>\n";
        }
        out_ << "<text x=\"" << fixed((kLeft + plot_right()) / 2) << "\" y=\"" << fixed(kHeight - 15)
             << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n"
             << "<text x=\"20\" y=\"" << fixed((kTop + plot_bottom()) / 2)
             << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
             << fixed((kTop + plot_bottom()) / 2) << ")\">" << y_label << "</text>\n";
    }

    Axis x_;
    Axis y_;
    int legend_rows_ = 0;
    std::ostringstream out_;
};

bool selected(const PlotSelection& s, MethodKind m) {
    return s.methods.empty() || std::find(s.methods.begin(), s.methods.end(), m) != s.methods.end();
}

std::vector<std::pair<double, double>> exact_curve(double pe, Domain domain) {
    const ExactParams params{pe, domain.a, domain.b};
    std::vector<std::pair<double, double>> pts;
    pts.reserve(kExactSamples);
    for (int k = 0; k < kExactSamples; ++k) {
        const double x =
            k == kExactSamples - 1 ? domain.b : domain.a + (domain.b - domain.a) * k / (kExactSamples - 1);
        pts.emplace_back(x, exact_T(x, params));
    }
    return pts;
}

std::string render_overlay(const SweepResult& result, const PlotSelection& s) {
    if (!s.pe || !s.n_elements) throw std::invalid_argument("render_svg: overlay needs pe and n_elements");
    std::vector<const CaseRecord*> cases;
    for (const CaseRecord& c : result.cases) {
        if (!c.singular && selected(s, c.method) && c.pe == *s.pe && c.n_elements == *s.n_elements) {
            cases.push_back(&c);
        }
    }
    if (cases.empty()) {
        throw std::invalid_argument("render_svg: no non-singular case at pe=" + label(*s.pe) +
                                    ", N=" + std::to_string(*s.n_elements));
    }
    const Domain domain{cases.front()->x.front(), cases.front()->x.back()};
    double lo = 0.0;
    double hi = 1.0;
    for (const CaseRecord* c : cases) {
        for (double v : c->solution) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    // Wildly oscillating variants would flatten everything else; they get clipped.
    lo = std::max(lo, -1.0) - 0.05;
    hi = std::min(hi, 2.0) + 0.05;

    SvgPlot plot("Exact vs numerical, Pe = " + label(*s.pe) + ", " + std::to_string(*s.n_elements) + " elements",
                 "x", "T(x)", Axis{domain.a, domain.b, false}, Axis{lo, hi, false});
    plot.polyline(exact_curve(*s.pe, domain), "#000000", "", 2.4);
    plot.legend_entry("Exact", "#000000", "");
    for (const CaseRecord* c : cases) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < c->x.size(); ++i) pts.emplace_back(c->x[i], c->solution[i]);
        plot.polyline(pts, method_color(c->method), "4,2");
        plot.legend_entry(std::string(to_string(c->method)), method_color(c->method), "4,2");
    }
    return plot.finish();
}

std::string render_loglog(const SweepResult& result, const PlotSelection& s) {
    struct Series {
        MethodKind method;
        double pe;
        std::vector<std::pair<double, double>> points;
    };
    std::vector<Series> series;
    std::vector<double> pes;
    for (const CaseRecord& c : result.cases) {
        if (c.singular || !c.errors || c.errors->error_empty || !selected(s, c.method)) continue;
        if (s.pe && c.pe != *s.pe) continue;
        if (series.empty() || series.back().method != c.method || series.back().pe != c.pe) {
            series.push_back({c.method, c.pe, {}});
        }
        series.back().points.emplace_back(static_cast<double>(c.n_elements),
                                          std::max(c.errors->max_abs_rel_error, kLogFloor));
        if (std::find(pes.begin(), pes.end(), c.pe) == pes.end()) pes.push_back(c.pe);
    }
    if (series.empty()) throw std::invalid_argument("render_svg: no non-singular case selected for error plot");
    std::sort(pes.begin(), pes.end());

    double x_lo = series.front().points.front().first, x_hi = x_lo;
    double y_lo = series.front().points.front().second, y_hi = y_lo;
    for (const Series& se : series) {
        for (auto [x, y] : se.points) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (x_hi == x_lo) {
        x_lo /= 1.5;
        x_hi *= 1.5;
    }
    y_lo = std::pow(10.0, std::floor(std::log10(y_lo)));
    y_hi = std::pow(10.0, std::ceil(std::log10(y_hi)));
    if (y_hi == y_lo) y_hi *= 10.0;

    SvgPlot plot("Maximum absolute relative error", "number of elements", "max |(exact - numerical) / exact|",
                 Axis{x_lo / 1.1, x_hi * 1.1, true}, Axis{y_lo, y_hi, true});
    auto dash_for = [&](double pe) {
        const auto idx = static_cast<std::size_t>(std::find(pes.begin(), pes.end(), pe) - pes.begin());
        return kDashes[idx % kDashes.size()];
    };
    for (const Series& se : series) {
        plot.polyline(se.points, method_color(se.method), dash_for(se.pe));
        for (const auto& p : se.points) plot.marker(p, method_color(se.method));
    }
    MethodKind last{};
    bool first = true;
    for (const Series& se : series) {
        if (!first && se.method == last) continue;
        plot.legend_entry(std::string(to_string(se.method)), method_color(se.method), "");
        last = se.method;
        first = false;
    }
    for (double pe : pes) plot.legend_entry("Pe = " + label(pe), "#000000", dash_for(pe));
    return plot.finish();
}

}  // namespace

std::string render_svg(const SweepResult& result, PlotKind kind, const PlotSelection& selection) {
    switch (kind) {
        case PlotKind::SolutionOverlay: return render_overlay(result, selection);
        case PlotKind::ErrorLogLog: return render_loglog(result, selection);
    }
    throw std::invalid_argument("render_svg: unknown plot kind");
}

std::string render_exact_family(std::span<const double> pe_values, Domain domain) {
    if (pe_values.empty()) throw std::invalid_argument("render_exact_family: no Peclet numbers given");
    SvgPlot plot("Exact solutions", "x", "T(x)", Axis{domain.a, domain.b, false}, Axis{-0.05, 1.05, false});
    for (std::size_t i = 0; i < pe_values.size(); ++i) {
        const char* color = kExactColors[i % kExactColors.size()];
        plot.polyline(exact_curve(pe_values[i], domain), color, "", 2.0);
        plot.legend_entry("Pe = " + label(pe_values[i]), color, "");
    }
    return plot.finish();
}

}  // namespace femvar::io
