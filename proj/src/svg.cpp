#include "radloc/svg.hpp"

#include <array>
#include <charconv>

namespace radloc {

double trial_error(const TrialResult& trial, double r_max, Method method) {
    if (trial.localized_count == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const SensorRecord& rec : trial.sensors) {
        if (rec.n_contacts == 0) {
            continue;
        }
        const Estimate& est = method == Method::CA ? *rec.ca : *rec.rla;
        sum += distance(rec.true_position, est.point);
    }
    return sum / static_cast<double>(trial.localized_count) / r_max;
}

namespace {

constexpr double kScale = 4.0;  // px per meter
constexpr double kMargin = 32.0;
constexpr double kPanelGap = 48.0;

std::string num(double v) {
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    return std::string(buf.data(), res.ptr);
}

struct Panel {
    double ox; // x origin in page coordinates
    double field_height;

    double px(double x) const { return ox + x * kScale; }
    double py(double y) const { return kMargin + (field_height - y) * kScale; }
};

void draw_cross(std::string& svg, const Panel& p, Point at, double arm) {
    svg += "<path d=\"M" + num(p.px(at.x) - arm) + " " + num(p.py(at.y) - arm);
    svg += " L" + num(p.px(at.x) + arm) + " " + num(p.py(at.y) + arm);
    svg += " M" + num(p.px(at.x) - arm) + " " + num(p.py(at.y) + arm);
    svg += " L" + num(p.px(at.x) + arm) + " " + num(p.py(at.y) - arm) + "\"/>\n";
}

void draw_panel(std::string& svg, const Panel& p, const Deployment& dep, const TrialResult& trial,
                const ScenarioConfig& cfg, Method method, const std::string& label) {
    const double w = cfg.field_width * kScale;
    const double h = cfg.field_height * kScale;
    const double err = trial_error(trial, cfg.r_max, method);
    const std::string id = method == Method::CA ? "ca" : "rla";

    svg += "<g id=\"" + id + "\">\n";
    svg += "<rect x=\"" + num(p.ox) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(p.ox) + "\" y=\"" + num(kMargin - 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\">" + label + " (error=" + num(err) +
           ")</text>\n";

    // Dashed truth-to-estimate segments; zero-length ones are omitted.
    svg += "<g stroke=\"#888\" stroke-dasharray=\"4 3\" stroke-width=\"1\">\n";
    for (const SensorRecord& rec : trial.sensors) {
        if (rec.n_contacts == 0) {
            continue;
        }
        const Estimate& est = method == Method::CA ? *rec.ca : *rec.rla;
        if (distance(rec.true_position, est.point) == 0.0) {
            continue;
        }
        svg += "<line x1=\"" + num(p.px(rec.true_position.x)) + "\" y1=\"" +
               num(p.py(rec.true_position.y)) + "\" x2=\"" + num(p.px(est.point.x)) + "\" y2=\"" +
               num(p.py(est.point.y)) + "\"/>\n";
    }
    svg += "</g>\n";

    // Anchors as triangles.
    svg += "<g fill=\"#2a6f2a\">\n";
    for (const Anchor& a : dep.anchors) {
        const double cx = p.px(a.position.x);
        const double cy = p.py(a.position.y);
        svg += "<polygon points=\"" + num(cx) + "," + num(cy - 5.0) + " " + num(cx - 4.5) + "," +
               num(cy + 4.0) + " " + num(cx + 4.5) + "," + num(cy + 4.0) + "\"/>\n";
    }
    svg += "</g>\n";

    // True positions as dots.
    svg += "<g fill=\"#335588\">\n";
    for (const SensorRecord& rec : trial.sensors) {
        svg += "<circle cx=\"" + num(p.px(rec.true_position.x)) + "\" cy=\"" +
               num(p.py(rec.true_position.y)) + "\" r=\"2.2\"/>\n";
    }
    svg += "</g>\n";

    // Estimates as crosses.
    svg += "<g stroke=\"#c03030\" stroke-width=\"1.4\" fill=\"none\">\n";
    for (const SensorRecord& rec : trial.sensors) {
        if (rec.n_contacts == 0) {
            continue;
        }
        const Estimate& est = method == Method::CA ? *rec.ca : *rec.rla;
        draw_cross(svg, p, est.point, 3.2);
    }
    svg += "</g>\n";
    svg += "</g>\n";
}

} // namespace

std::string snapshot_svg(const Deployment& deployment, const TrialResult& trial,
                         const ScenarioConfig& cfg) {
    const double panel_w = cfg.field_width * kScale;
    const double total_w = 2.0 * kMargin + 2.0 * panel_w + kPanelGap;
    const double total_h = 2.0 * kMargin + cfg.field_height * kScale + 14.0;

    const double e_rla = trial_error(trial, cfg.r_max, Method::RLA);
    const double e_ca = trial_error(trial, cfg.r_max, Method::CA);

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(total_w) +
           "\" height=\"" + num(total_h) + "\" viewBox=\"0 0 " + num(total_w) + " " + num(total_h) +
           "\">\n";
    svg += "<title>trial " + std::to_string(deployment.trial_index) + ": RLA error=" + num(e_rla) +
           ", CA error=" + num(e_ca) + "</title>\n";

    Panel left{kMargin, cfg.field_height};
    Panel right{kMargin + panel_w + kPanelGap, cfg.field_height};
    draw_panel(svg, left, deployment, trial, cfg, Method::RLA, "RLA");
    draw_panel(svg, right, deployment, trial, cfg, Method::CA, "CA");

    svg += "</svg>\n";
    return svg;
}

} // namespace radloc
