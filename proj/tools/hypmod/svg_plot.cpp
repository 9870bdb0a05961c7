#include "svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "hypmod/polar.hpp"
#include "report_io.hpp"

namespace hypmod::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kWidth = 880;
constexpr int kHeight = 660;
constexpr double kMargin = 40.0;

// fixed 8-stop ramp for the log-scaled density raster
constexpr std::array<const char*, 8> kRamp = {
    "#0d0887", "#5302a3", "#8b0aa5", "#b83289",
    "#db5c68", "#f48849", "#febd2a", "#f0f921"};

struct Frame {
    double x0, y0, scale;

    double X(double x) const { return kMargin + (x - x0) * scale; }
    double Y(double y) const { return kHeight - kMargin - (y - y0) * scale; }
};

Frame fit(double x_lo, double x_hi, double y_lo, double y_hi) {
    const double pad_x = 0.05 * (x_hi - x_lo);
    const double pad_y = 0.05 * (y_hi - y_lo);
    x_lo -= pad_x;
    x_hi += pad_x;
    y_lo -= pad_y;
    y_hi += pad_y;
    const double sx = (kWidth - 2.0 * kMargin) / (x_hi - x_lo);
    const double sy = (kHeight - 2.0 * kMargin) / (y_hi - y_lo);
    return {x_lo, y_lo, std::min(sx, sy)};
}

std::string f4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void open_svg(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
}

void draw_polyline(std::ostream& out, const Frame& frame,
                   const std::vector<HPoint>& points, const char* stroke,
                   const char* width) {
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << width << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            out << " ";
        out << f4(frame.X(points[i].lambda)) << "," << f4(frame.Y(points[i].t));
    }
    out << "\"/>\n";
}

void draw_density(std::ostream& out, const Frame& frame, const DensityField& rho,
                  double x_lo, double x_hi, double y_lo, double y_hi,
                  int grid_n) {
    std::vector<double> values(static_cast<std::size_t>(grid_n) * grid_n, 0.0);
    double vmin = 0.0, vmax = 0.0;
    bool any = false;
    const double dx = (x_hi - x_lo) / grid_n;
    const double dy = (y_hi - y_lo) / grid_n;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const double x = x_lo + (i + 0.5) * dx;
            const double y = y_lo + (j + 0.5) * dy;
            if (x <= 0.0)
                continue;
            const double v = rho(HPoint(x, y));
            values[static_cast<std::size_t>(i) * grid_n + j] = v;
            if (v > 0.0) {
                if (!any) {
                    vmin = vmax = v;
                    any = true;
                } else {
                    vmin = std::min(vmin, v);
                    vmax = std::max(vmax, v);
                }
            }
        }
    }
    if (!any)
        return;
    const double log_lo = std::log(vmin);
    const double log_span = std::max(std::log(vmax) - log_lo, 1e-300);
    const double cell_w = dx * frame.scale;
    const double cell_h = dy * frame.scale;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const double v = values[static_cast<std::size_t>(i) * grid_n + j];
            if (v <= 0.0)
                continue;
            int idx = static_cast<int>(8.0 * (std::log(v) - log_lo) / log_span);
            idx = std::clamp(idx, 0, 7);
            const double x = x_lo + i * dx;
            const double y = y_lo + (j + 1) * dy;
            out << "<rect x=\"" << f4(frame.X(x)) << "\" y=\"" << f4(frame.Y(y))
                << "\" width=\"" << f4(cell_w) << "\" height=\"" << f4(cell_h)
                << "\" fill=\"" << kRamp[idx] << "\"/>\n";
        }
    }
}

void draw_curves(std::ostream& out, const Frame& frame,
                 const std::vector<Curve>& curves) {
    for (const Curve& c : curves) {
        // thin out the stored samples for drawing
        const auto& samples = c.samples();
        std::vector<HPoint> pts;
        const std::size_t step = std::max<std::size_t>(1, samples.size() / 128);
        for (std::size_t i = 0; i < samples.size(); i += step)
            pts.push_back(samples[i]);
        if (pts.back().lambda != samples.back().lambda ||
            pts.back().t != samples.back().t)
            pts.push_back(samples.back());
        draw_polyline(out, frame, pts, "#1f77b4", "1");
    }
}

std::vector<HPoint> arc_points(double radius, double t_lo, double t_hi, int n) {
    // the arc lambda^2 + t^2 = radius^2 between heights t_lo and t_hi
    std::vector<HPoint> pts;
    pts.reserve(n);
    const double a0 = std::asin(t_lo / radius);
    const double a1 = std::asin(t_hi / radius);
    for (int i = 0; i < n; ++i) {
        const double ang = a0 + (a1 - a0) * i / (n - 1);
        pts.emplace_back(radius * std::cos(ang), radius * std::sin(ang));
    }
    return pts;
}

} // namespace

void write_quad_plot(std::ostream& out, double a, const PlotOptions& options) {
    const NormalQuad quad(a);
    const double r_in = std::sqrt(2.0);
    const double r_out = std::sqrt(a * a + 1.0);
    const Frame frame = fit(1.0 - 0.1, r_out, -1.0, 1.0);

    open_svg(out);
    out << "<desc>domain=quad a=" << g9(a)
        << " b=1 inner_arc_radius=" << g9(r_in)
        << " outer_arc_radius=" << g9(r_out) << " segments_t=+-1 family="
        << family_name(options.family) << " curves=" << options.n_curves
        << " density=" << (options.density ? 1 : 0) << "</desc>\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"#ffffff\"/>\n";

    if (options.density && !quad.degenerate()) {
        const DensityField rho = extremal_density(options.family, a);
        draw_density(out, frame, rho, 0.9, r_out, -1.05, 1.05, options.grid_n);
    }
    if (!quad.degenerate())
        draw_curves(out, frame,
                    sample_subfamily(options.family, a, options.n_curves, 257));

    // boundary: inner arc, top segment, outer arc, bottom segment
    draw_polyline(out, frame, arc_points(r_in, -1.0, 1.0, 65), "#000000", "2");
    draw_polyline(out, frame, arc_points(r_out, -1.0, 1.0, 65), "#000000", "2");
    draw_polyline(out, frame, {HPoint(1.0, 1.0), HPoint(a, 1.0)}, "#000000", "2");
    draw_polyline(out, frame, {HPoint(1.0, -1.0), HPoint(a, -1.0)}, "#000000", "2");
    out << "</svg>\n";
}

void write_annulus_plot(std::ostream& out, const Annulus& annulus,
                        const PlotOptions& options) {
    const EuclideanCircle inner =
        to_euclidean(HyperbolicCircle(annulus.center, annulus.r_inner));
    const EuclideanCircle outer =
        to_euclidean(HyperbolicCircle(annulus.center, annulus.r_outer));
    const Frame frame = fit(outer.x - outer.radius, outer.x + outer.radius,
                            outer.t - outer.radius, outer.t + outer.radius);

    open_svg(out);
    out << "<desc>domain=annulus center=(" << g9(annulus.center.lambda) << ","
        << g9(annulus.center.t) << ") r_inner=" << g9(annulus.r_inner)
        << " r_outer=" << g9(annulus.r_outer) << " euclidean_inner=(("
        << g9(inner.x) << "," << g9(inner.t) << ")," << g9(inner.radius)
        << ") euclidean_outer=((" << g9(outer.x) << "," << g9(outer.t) << "),"
        << g9(outer.radius) << ") family=" << family_name(options.family)
        << " curves=" << options.n_curves
        << " density=" << (options.density ? 1 : 0) << "</desc>\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"#ffffff\"/>\n";

    if (options.density) {
        const DensityField rho = extremal_density(options.family, annulus);
        draw_density(out, frame, rho, outer.x - outer.radius,
                     outer.x + outer.radius, outer.t - outer.radius,
                     outer.t + outer.radius, options.grid_n);
    }
    draw_curves(out, frame,
                sample_subfamily(options.family, annulus, options.n_curves, 257));

    for (const EuclideanCircle& c : {inner, outer}) {
        out << "<circle cx=\"" << f4(frame.X(c.x)) << "\" cy=\""
            << f4(frame.Y(c.t)) << "\" r=\"" << f4(c.radius * frame.scale)
            << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace hypmod::cli
