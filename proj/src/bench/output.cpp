// Copyright 2026 The cshadow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cshadow/bench/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "cshadow/error.hpp"

#ifndef CSHADOW_VERSION
#define CSHADOW_VERSION "unknown"
#endif

namespace cshadow::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string cell(double v) { return std::isnan(v) ? std::string() : format_number(v); }
std::string cell(int v) { return v < 0 ? std::string() : std::to_string(v); }
std::string cell(std::size_t v) { return v == 0 ? std::string() : std::to_string(v); }

std::string matrix_name(const char *stem, Ensemble e) { return std::string(stem) + "_" + to_string(e); }

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string svg_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v, bool log_axis) {
    std::ostringstream s;
    s << std::setprecision(3) << (log_axis ? std::pow(10.0, v) : v);
    return s.str();
}

} // namespace

const char *version() { return CSHADOW_VERSION; }

std::string format_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Report make_report(const std::vector<GhzReconstruction> &result) {
    Report rep{ExperimentId::GhzReconstruct, {}, {}, {}, {}};
    for (const auto &r : result) {
        const std::string e = to_string(r.ensemble);
        Table t{matrix_name("ghz_matrix", r.ensemble), {"row", "col", "ideal", "reconstructed_re", "reconstructed_im"}, {}};
        Plot p{matrix_name("ghz_matrix", r.ensemble), "Density matrix real parts, row-major (" + e + ")", "entry index",
               "real part", false, false, {{"ideal", {}, {}}, {"reconstructed", {}, {}}}};
        for (Eigen::Index i = 0; i < r.ideal.rows(); ++i) {
            for (Eigen::Index j = 0; j < r.ideal.cols(); ++j) {
                t.rows.push_back({std::to_string(i), std::to_string(j), format_number(r.ideal(i, j).real()),
                                  format_number(r.reconstructed(i, j).real()), format_number(r.reconstructed(i, j).imag())});
                const double index = static_cast<double>(i * r.ideal.cols() + j);
                p.series[0].x.push_back(index);
                p.series[0].y.push_back(r.ideal(i, j).real());
                p.series[1].x.push_back(index);
                p.series[1].y.push_back(r.reconstructed(i, j).real());
            }
        }
        rep.tables.push_back(std::move(t));
        rep.plots.push_back(std::move(p));
        const auto row = [&](const char *metric, double v) {
            rep.rows.push_back({"ghz-reconstruct", r.num_qubits, -1, kNaN, e, r.shots, metric, v, kNaN});
            rep.summary.push_back(e + " " + metric + ": " + format_number(v));
        };
        row("max_support_error", r.max_corner_error);
        row("max_off_support_error", r.max_off_support);
        row("trace_error", r.trace_error);
    }
    return rep;
}

Report make_report(const EntropyDiscrepancyResult &res) {
    Report rep{ExperimentId::EntropyDiscrepancy, {}, {}, {}, {}};
    auto index_of = [&](Ensemble e) -> int {
        const auto it = std::find(res.ensembles.begin(), res.ensembles.end(), e);
        return it == res.ensembles.end() ? -1 : static_cast<int>(it - res.ensembles.begin());
    };
    const int ip = index_of(Ensemble::Pauli), ic = index_of(Ensemble::Clifford);
    auto stat = [&](int e, std::size_t t, bool want_err) {
        if (e < 0) {
            return kNaN;
        }
        const auto &v = res.discrepancy[static_cast<std::size_t>(e)][t];
        return want_err ? (v.size() < 2 ? 0.0 : mean_standard_error(v)) : mean_of(v);
    };
    Table t{"entropy_discrepancy",
            {"theta", "S_A", "delta_pauli", "delta_clifford", "bound_pauli", "bound_clifford", "delta_pauli_stderr",
             "delta_clifford_stderr"},
            {}};
    Plot p{"entropy_discrepancy", "Discrepancy vs entanglement entropy (N=" + std::to_string(res.num_qubits) + ")",
           "S_A (bits)", "mean |o_hat - o|", false, false, {}};
    PlotSeries sp{"pauli", {}, {}}, sc{"clifford", {}, {}};
    for (std::size_t i = 0; i < res.thetas.size(); ++i) {
        t.rows.push_back({format_number(res.thetas[i]), format_number(res.entropy[i]), cell(stat(ip, i, false)),
                          cell(stat(ic, i, false)), format_number(res.bound_pauli), format_number(res.bound_clifford),
                          cell(stat(ip, i, true)), cell(stat(ic, i, true))});
        rep.rows.push_back({"entropy-discrepancy", res.num_qubits, -1, res.thetas[i], "", res.shots, "entropy_bits",
                            res.entropy[i], kNaN});
        for (std::size_t e = 0; e < res.ensembles.size(); ++e) {
            const int ei = static_cast<int>(e);
            rep.rows.push_back({"entropy-discrepancy", res.num_qubits, -1, res.thetas[i], to_string(res.ensembles[e]),
                                res.shots, "discrepancy", stat(ei, i, false), stat(ei, i, true)});
        }
        if (ip >= 0) {
            sp.x.push_back(res.entropy[i]);
            sp.y.push_back(stat(ip, i, false));
        }
        if (ic >= 0) {
            sc.x.push_back(res.entropy[i]);
            sc.y.push_back(stat(ic, i, false));
        }
    }
    for (auto *s : {&sp, &sc}) {
        if (!s->x.empty()) {
            p.series.push_back(*s);
        }
    }
    rep.tables.push_back(std::move(t));
    rep.plots.push_back(std::move(p));
    const auto trend = analyze_entropy_trend(res);
    if (!std::isnan(trend.pauli_pvalue)) {
        rep.rows.push_back({"entropy-discrepancy", res.num_qubits, -1, kNaN, "pauli", res.shots,
                            "paired_pvalue_last_vs_first", trend.pauli_pvalue, kNaN});
        rep.summary.push_back("pauli paired p-value (last theta > first): " + format_number(trend.pauli_pvalue));
    }
    if (!std::isnan(trend.clifford_slope)) {
        rep.rows.push_back({"entropy-discrepancy", res.num_qubits, -1, kNaN, "clifford", res.shots,
                            "slope_vs_entropy", trend.clifford_slope, trend.clifford_slope_stderr});
        rep.summary.push_back("clifford slope vs entropy: " + format_number(trend.clifford_slope) + " +/- " +
                              format_number(trend.clifford_slope_stderr));
    }
    return rep;
}

Report make_report(const ErrorVsShotsResult &res) {
    Report rep{ExperimentId::ErrorVsShots, {}, {}, {}, {}};
    Table points{"error_vs_shots",
                 {"N", "n", "theta", "ensemble", "shots", "true_value", "mean_error", "stderr"},
                 {}};
    for (const auto &p : res.points) {
        points.rows.push_back({std::to_string(p.total_qubits), std::to_string(p.block_size), format_number(p.theta),
                               to_string(p.ensemble), std::to_string(p.shots), format_number(p.true_value),
                               format_number(p.mean_error), format_number(p.error_stderr)});
        rep.rows.push_back({"error-vs-shots", p.total_qubits, p.block_size, p.theta, to_string(p.ensemble), p.shots,
                            "abs_error", p.mean_error, p.error_stderr});
    }
    Table fits{"error_vs_shots_fits", {"N", "n", "theta", "ensemble", "loglog_slope", "intercept", "slope_stderr"}, {}};
    for (const auto &c : res.curves) {
        fits.rows.push_back({std::to_string(c.total_qubits), std::to_string(c.block_size), format_number(c.theta),
                             to_string(c.ensemble), cell(c.loglog.slope), cell(c.loglog.intercept),
                             cell(c.loglog.slope_stderr)});
        rep.rows.push_back({"error-vs-shots", c.total_qubits, c.block_size, c.theta, to_string(c.ensemble), 0,
                            "loglog_slope", c.loglog.slope, c.loglog.slope_stderr});
    }
    rep.tables.push_back(std::move(points));
    rep.tables.push_back(std::move(fits));

    // One plot per N; each (n, ensemble) curve is averaged over the theta grid.
    std::map<int, std::map<std::pair<int, Ensemble>, std::map<std::size_t, std::vector<double>>>> grouped;
    for (const auto &p : res.points) {
        grouped[p.total_qubits][{p.block_size, p.ensemble}][p.shots].push_back(p.mean_error);
    }
    for (const auto &[n_total, curves] : grouped) {
        Plot plot{"error_vs_shots_N" + std::to_string(n_total),
                  "Witness estimation error, N=" + std::to_string(n_total) + " (mean over theta)",
                  "shots",
                  "|w_hat - w_true|",
                  true,
                  true,
                  {}};
        for (const auto &[key, by_shots] : curves) {
            PlotSeries s{to_string(key.second) + std::string(" n=") + std::to_string(key.first), {}, {}};
            for (const auto &[shots, errs] : by_shots) {
                s.x.push_back(static_cast<double>(shots));
                s.y.push_back(mean_of(errs));
            }
            plot.series.push_back(std::move(s));
        }
        rep.plots.push_back(std::move(plot));
    }
    double worst_low = 0.0, worst_high = -1.0;
    for (const auto &c : res.curves) {
        if (!std::isnan(c.loglog.slope)) {
            worst_low = std::min(worst_low, c.loglog.slope);
            worst_high = std::max(worst_high, c.loglog.slope);
        }
    }
    if (worst_high > -1.0) {
        rep.summary.push_back("log-log slope range: [" + format_number(worst_low) + ", " + format_number(worst_high) +
                              "]");
    }
    return rep;
}

Report make_report(const CrossoverResult &res) {
    Report rep{ExperimentId::Crossover, {}, {}, {}, {}};
    const double eps = res.points.empty() ? kDefaultEpsilon : res.points.front().report.epsilon;
    Table points{"crossover_points",
                 {"N", "n", "theta", "ensemble", "shots", "true_value", "mean", "variance", "variance_stderr", "S_req",
                  "bound"},
                 {}};
    for (const auto &p : res.points) {
        const auto &r = p.report;
        const double bound = r.ensemble == Ensemble::Pauli ? r.bound_pauli : r.bound_clifford;
        points.rows.push_back({std::to_string(r.total_qubits), std::to_string(r.block_size), format_number(r.theta),
                               to_string(r.ensemble), std::to_string(r.shots_used), format_number(p.true_value),
                               format_number(r.mean), format_number(r.single_shot_variance),
                               format_number(r.variance_stderr), format_number(r.s_req), format_number(bound)});
        const auto row = [&](const char *metric, double v, double se) {
            rep.rows.push_back(
                {"crossover", r.total_qubits, r.block_size, r.theta, to_string(r.ensemble), r.shots_used, metric, v, se});
        };
        row("variance", r.single_shot_variance, r.variance_stderr);
        row("s_req", r.s_req, r.variance_stderr / (eps * eps));
        row("mean_abs_error", std::abs(r.mean - p.true_value), std::sqrt(r.single_shot_variance / r.shots_used));
    }
    rep.tables.push_back(std::move(points));

    std::map<int, Table> per_n;
    std::map<int, Plot> plots;
    for (const auto &a : res.aggregates) {
        auto &t = per_n[a.total_qubits];
        if (t.name.empty()) {
            t = {"crossover_N" + std::to_string(a.total_qubits),
                 {"n", "ensemble", "S_req", "S_req_stderr", "theta_at_max", "bound", "bound_S_req"},
                 {}};
            plots[a.total_qubits] = {"crossover_N" + std::to_string(a.total_qubits),
                                     "Required shots at eps=" + format_number(eps) + ", N=" +
                                         std::to_string(a.total_qubits) + " (max over theta)",
                                     "block size n",
                                     "S_req",
                                     false,
                                     true,
                                     {}};
        }
        t.rows.push_back({std::to_string(a.block_size), to_string(a.ensemble), format_number(a.s_req),
                          format_number(a.s_req_stderr), format_number(a.theta_at_max), format_number(a.bound),
                          format_number(a.bound / (eps * eps))});
        auto &series = plots[a.total_qubits].series;
        for (const std::string &label : {std::string(to_string(a.ensemble)), std::string(to_string(a.ensemble)) + " bound"}) {
            auto it = std::find_if(series.begin(), series.end(), [&](const PlotSeries &s) { return s.label == label; });
            if (it == series.end()) {
                series.push_back({label, {}, {}});
                it = series.end() - 1;
            }
            it->x.push_back(a.block_size);
            it->y.push_back(label.ends_with("bound") ? a.bound / (eps * eps) : a.s_req);
        }
    }
    for (auto &[n, t] : per_n) {
        rep.tables.push_back(std::move(t));
        rep.plots.push_back(std::move(plots[n]));
    }
    Table summary{"crossover_summary",
                  {"N", "empirical_crossover", "last_pauli_favourable", "sign_changes", "pauli_non_decreasing",
                   "clifford_non_increasing", "bound_violations", "n_star_unit", "n_star_factor3"},
                  {}};
    for (const auto &s : res.summaries) {
        summary.rows.push_back({std::to_string(s.total_qubits), std::to_string(s.empirical_crossover),
                                std::to_string(s.last_pauli_favourable), std::to_string(s.sign_changes),
                                s.pauli_non_decreasing ? "true" : "false", s.clifford_non_increasing ? "true" : "false",
                                std::to_string(s.bound_violations), format_number(s.bound_crossover.unit_factor),
                                format_number(s.bound_crossover.with_clifford_factor)});
        const auto row = [&](const char *metric, double v) {
            rep.rows.push_back({"crossover", s.total_qubits, -1, kNaN, "", 0, metric, v, kNaN});
        };
        row("empirical_crossover", s.empirical_crossover);
        row("last_pauli_favourable", s.last_pauli_favourable);
        row("sign_changes", s.sign_changes);
        row("bound_violations", s.bound_violations);
        row("n_star_unit", s.bound_crossover.unit_factor);
        row("n_star_factor3", s.bound_crossover.with_clifford_factor);
        const std::string tag = "N=" + std::to_string(s.total_qubits) + " ";
        rep.summary.push_back(tag + "empirical crossover: " + std::to_string(s.empirical_crossover));
        rep.summary.push_back(tag + "last Pauli-favourable block: " + std::to_string(s.last_pauli_favourable));
        rep.summary.push_back(tag + "sign changes: " + std::to_string(s.sign_changes));
        rep.summary.push_back(tag + "Pauli non-decreasing: " + (s.pauli_non_decreasing ? "yes" : "no") +
                              ", Clifford non-increasing: " + (s.clifford_non_increasing ? "yes" : "no"));
        rep.summary.push_back(tag + "bound crossings: " + format_number(s.bound_crossover.unit_factor) + " (4^n = 2^(N-n)), " +
                              format_number(s.bound_crossover.with_clifford_factor) + " (4^n = 3*2^(N-n))");
        rep.summary.push_back(tag + "variance-bound violations: " + std::to_string(s.bound_violations));
    }
    rep.tables.push_back(std::move(summary));
    return rep;
}

Report run_experiment(const ExperimentConfig &cfg) {
    validate(cfg);
    switch (cfg.experiment) {
    case ExperimentId::GhzReconstruct:
        return make_report(run_ghz_reconstruct(cfg));
    case ExperimentId::EntropyDiscrepancy:
        return make_report(run_entropy_discrepancy(cfg));
    case ExperimentId::ErrorVsShots:
        return make_report(run_error_vs_shots(cfg));
    case ExperimentId::Crossover:
        return make_report(run_crossover(cfg));
    }
    throw ConfigError("unknown experiment");
}

std::string config_hash(const ExperimentConfig &cfg) {
    ExperimentConfig normalized = cfg;
    normalized.workers = 1;
    normalized.output_dir = "-";
    return sha256_hex(canonical_text(normalized));
}

void write_csv(const std::string &path, const Table &table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out += (i ? "," : "") + csv_escape(table.header[i]);
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + csv_escape(row[i]);
        }
        out += '\n';
    }
    write_file(path, out);
}

std::string render_svg(const Plot &plot) {
    constexpr double W = 720, H = 460, L = 80, R = 180, T = 40, B = 60;
    auto tx = [&](double v) { return plot.log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return plot.log_y ? std::log10(v) : v; };
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!plot.log_x || x > 0) && (!plot.log_y || y > 0);
    };
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto &s : plot.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (usable(s.x[i], s.y[i])) {
                x0 = std::min(x0, tx(s.x[i]));
                x1 = std::max(x1, tx(s.x[i]));
                y0 = std::min(y0, ty(s.y[i]));
                y1 = std::max(y1, ty(s.y[i]));
            }
        }
    }
    if (!std::isfinite(x0)) {
        x0 = y0 = 0.0;
        x1 = y1 = 1.0;
    }
    if (x1 - x0 < 1e-12) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 - y0 < 1e-12) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };
    std::ostringstream s;
    s << std::setprecision(6);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << svg_escape(plot.title) << "</text>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
        const double xp = L + (W - L - R) * k / 4, yp = H - B - (H - T - B) * k / 4;
        s << "<text x=\"" << xp << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << tick_label(xv, plot.log_x) << "</text>\n";
        s << "<text x=\"" << L - 6 << "\" y=\"" << yp + 4 << "\" text-anchor=\"end\">" << tick_label(yv, plot.log_y) << "</text>\n";
    }
    s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">" << svg_escape(plot.x_label) << "</text>\n";
    s << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (T + H - B) / 2 << ")\">" << svg_escape(plot.y_label) << "</text>\n";
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto &series = plot.series[k];
        const char *color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
        std::ostringstream pts;
        pts << std::setprecision(6);
        for (std::size_t i = 0; i < series.x.size(); ++i) {
            if (usable(series.x[i], series.y[i])) {
                pts << px(series.x[i]) << ',' << py(series.y[i]) << ' ';
                s << "<circle cx=\"" << px(series.x[i]) << "\" cy=\"" << py(series.y[i]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        }
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
        const double ly = T + 10 + 18.0 * static_cast<double>(k);
        s << "<line x1=\"" << W - R + 15 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 35 << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << W - R + 40 << "\" y=\"" << ly + 4 << "\">" << svg_escape(series.label) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

void write_report(const Report &report, const ExperimentConfig &cfg, double wall_time_seconds) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + cfg.output_dir + "': " + ec.message());
    }
    const std::string hash = config_hash(cfg);
    auto write_meta = [&](const std::string &name, const std::vector<std::string> &header, std::size_t rows) {
        nlohmann::json meta;
        meta["table"] = name;
        meta["experiment"] = to_string(report.experiment);
        meta["seed"] = cfg.seed;
        meta["version"] = version();
        meta["config_hash"] = hash;
        meta["columns"] = header;
        meta["rows"] = rows;
        write_file(dir / (name + ".meta.json"), meta.dump(2) + "\n");
    };
    for (const auto &t : report.tables) {
        write_csv((dir / (t.name + ".csv")).string(), t);
        write_meta(t.name, t.header, t.rows.size());
    }
    for (const auto &p : report.plots) {
        write_file(dir / (p.name + ".svg"), render_svg(p));
    }
    Table results{"results",
                  {"experiment", "N", "n", "theta", "ensemble", "shots", "metric", "value", "stderr", "seed", "version",
                   "wall_time_s"},
                  {}};
    const std::string wall = format_number(wall_time_seconds);
    for (const auto &r : report.rows) {
        results.rows.push_back({r.experiment, cell(r.total_qubits), cell(r.block_size), cell(r.theta), r.ensemble,
                                cell(r.shots), r.metric, cell(r.value), cell(r.stderr_value), std::to_string(cfg.seed),
                                version(), wall});
    }
    write_csv((dir / "results.csv").string(), results);
    write_meta("results", results.header, results.rows.size());
    write_file(dir / "config.ini", canonical_text(cfg));
}

} // namespace cshadow::bench
