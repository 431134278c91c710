#include "misanneal/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "misanneal/errors.hpp"

namespace misanneal {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // Trim to the shortest form that still round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[32];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, x);
        double back = 0.0;
        std::sscanf(shorter, "%lf", &back);
        if (back == x) return shorter;
    }
    return buf;
}

std::string runs_csv(const std::vector<RunRecord>& runs) {
    std::string out = "n,m,generator,seed,alpha,mean_size,ratio,mis_probability,runtime_ms\n";
    for (const auto& rec : runs) {
        if (rec.skipped) continue;
        out += std::to_string(rec.n) + "," + std::to_string(rec.m) + "," + rec.generator +
               "," + std::to_string(rec.seed) + "," + std::to_string(rec.alpha) + "," +
               format_double(rec.mean_size) + "," + format_double(rec.ratio) + "," +
               format_double(rec.mis_probability) + ",";
        char rt[32];
        std::snprintf(rt, sizeof rt, "%.3f", rec.runtime_ms);
        out += rt;
        out += "\n";
    }
    return out;
}

Json run_record_json(const RunRecord& rec) {
    Json j;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["generator"] = rec.generator;
    j["seed"] = rec.seed;
    if (rec.skipped) {
        j["skipped"] = true;
        j["skip_reason"] = rec.skip_reason;
        return j;
    }
    j["alpha"] = rec.alpha;
    j["mean_size"] = rec.mean_size;
    j["ratio"] = rec.ratio;
    j["mis_probability"] = rec.mis_probability;
    j["runtime_ms"] = rec.runtime_ms;
    return j;
}

Json ensemble_summary_json(const EnsembleResult& result) {
    Json j;
    j["generator"] = result.generator.name();
    j["n"] = result.generator.n;
    if (result.generator.kind == GeneratorKind::kGnp) j["p"] = result.generator.p;
    if (result.generator.kind == GeneratorKind::kGnm) j["m"] = result.generator.m;
    j["count"] = result.count;
    j["master_seed"] = result.master_seed;
    j["gamma"] = result.schedule.gamma;
    if (result.schedule.total_time > 0) j["total_time"] = result.schedule.total_time;
    j["omega_phi"] = result.schedule.omega_phi;
    if (result.schedule.steps > 0) j["steps"] = result.schedule.steps;
    j["r_bar"] = result.r_bar;
    j["r_variance"] = result.r_variance;
    j["r_stderr"] = result.r_stderr;
    j["skip_count"] = result.skip_count;
    if (result.skip_count > 0) {
        Json skips = Json::array();
        for (const auto& rec : result.runs)
            if (rec.skipped)
                skips.push_back({{"seed", rec.seed}, {"reason", rec.skip_reason}});
        j["skips"] = skips;
    }
    return j;
}

std::string gap_curve_csv(const GapCurve& curve) {
    std::string out = "theta,lambda0,lambda1,gap\n";
    for (std::size_t k = 0; k < curve.thetas.size(); ++k)
        out += format_double(curve.thetas[k]) + "," + format_double(curve.lambda0[k]) +
               "," + format_double(curve.lambda1[k]) + "," + format_double(curve.gap[k]) +
               "\n";
    return out;
}

Json gap_summary_json(int n, std::size_t dimension, const GapCurve& curve) {
    Json j;
    j["n"] = n;
    j["dimension"] = dimension;
    j["min_gap"] = curve.min_gap;
    j["theta_at_min"] = curve.theta_at_min;
    return j;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory,
                           double prob_floor) {
    std::string out = "theta,index,prob\n";
    for (const auto& point : trajectory)
        for (Eigen::Index j = 0; j < point.psi.size(); ++j) {
            const double prob = std::norm(point.psi[j]);
            if (prob < prob_floor) continue;
            out += format_double(point.theta) + "," + std::to_string(j) + "," +
                   format_double(prob) + "\n";
        }
    return out;
}

std::string basis_csv(const IsBasis& basis) {
    std::string out = "index,mask_hex,size\n";
    char hex[32];
    for (std::size_t j = 0; j < basis.dimension(); ++j) {
        std::snprintf(hex, sizeof hex, "%llx",
                      static_cast<unsigned long long>(basis.state(j)));
        out += std::to_string(j) + "," + hex + "," + std::to_string(basis.size_of(j)) +
               "\n";
    }
    return out;
}

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series) {
    constexpr double kW = 720, kH = 460;
    constexpr double kL = 70, kR = 24, kT = 44, kB = 52;
    static const char* kColors[] = {"#1f6fb2", "#c0392b", "#27863b", "#8e44ad",
                                    "#c87f0a", "#16857b"};

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (x_max - x_min < 1e-12) x_max = x_min + 1;
    if (y_max - y_min < 1e-12) y_max = y_min + 1;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double x) { return kL + (x - x_min) / (x_max - x_min) * (kW - kL - kR); };
    auto sy = [&](double y) {
        return kH - kB - (y - y_min) / (y_max - y_min) * (kH - kT - kB);
    };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kW) +
                      "\" height=\"" + px(kH) + "\" viewBox=\"0 0 " + px(kW) + " " +
                      px(kH) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + px(kW / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" +
           xml_escape(title) + "</text>\n";

    // Frame and tick labels at the corners of the data range.
    svg += "<rect x=\"" + px(kL) + "\" y=\"" + px(kT) + "\" width=\"" +
           px(kW - kL - kR) + "\" height=\"" + px(kH - kT - kB) +
           "\" fill=\"none\" stroke=\"#555\"/>\n";
    const int kTicks = 5;
    for (int k = 0; k < kTicks; ++k) {
        const double fx = x_min + (x_max - x_min) * k / (kTicks - 1);
        const double fy = y_min + (y_max - y_min) * k / (kTicks - 1);
        svg += "<text x=\"" + px(sx(fx)) + "\" y=\"" + px(kH - kB + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(std::round(fx * 1e4) / 1e4) + "</text>\n";
        svg += "<text x=\"" + px(kL - 8) + "\" y=\"" + px(sy(fy) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(std::round(fy * 1e4) / 1e4) + "</text>\n";
        svg += "<line x1=\"" + px(kL) + "\" y1=\"" + px(sy(fy)) + "\" x2=\"" +
               px(kW - kR) + "\" y2=\"" + px(sy(fy)) +
               "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
    }
    svg += "<text x=\"" + px((kL + kW - kR) / 2) + "\" y=\"" + px(kH - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           xml_escape(x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + px((kT + kH - kB) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " +
           px((kT + kH - kB) / 2) + ")\">" + xml_escape(y_label) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % (sizeof kColors / sizeof kColors[0])];
        std::string pts;
        for (const auto& [x, y] : series[s].points)
            pts += px(sx(x)) + "," + px(sy(y)) + " ";
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.6\"/>\n";
        for (const auto& [x, y] : series[s].points)
            svg += "<circle cx=\"" + px(sx(x)) + "\" cy=\"" + px(sy(y)) +
                   "\" r=\"2.2\" fill=\"" + color + "\"/>\n";
        if (!series[s].label.empty()) {
            const double ly = kT + 18 + 16 * static_cast<double>(s);
            svg += "<rect x=\"" + px(kW - kR - 150) + "\" y=\"" + px(ly - 9) +
                   "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
            svg += "<text x=\"" + px(kW - kR - 135) + "\" y=\"" + px(ly) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" +
                   xml_escape(series[s].label) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write file: " + path);
    out << content;
    if (!out) throw Error("io", "write failed: " + path);
}

}  // namespace misanneal
