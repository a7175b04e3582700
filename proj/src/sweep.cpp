#include "swanson/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

namespace swanson::sweep {

using swanson::DomainError;
using swanson::InputError;
using swanson::NumericalFailure;
using linalg::ComplexMatrix;
using linalg::MonicPoly;
using linalg::Spectrum;

const char* to_string(SweepParam p) noexcept {
    switch (p) {
        case SweepParam::Omega: return "omega";
        case SweepParam::Gamma: return "gamma";
        case SweepParam::Rho: return "rho";
        case SweepParam::Epsilon: return "epsilon";
        case SweepParam::Delta: return "delta";
        case SweepParam::Eta: return "eta";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from_string(const std::string& name) {
    if (name == "omega") return SweepParam::Omega;
    if (name == "gamma") return SweepParam::Gamma;
    if (name == "rho") return SweepParam::Rho;
    if (name == "epsilon") return SweepParam::Epsilon;
    if (name == "delta") return SweepParam::Delta;
    if (name == "eta") return SweepParam::Eta;
    return std::nullopt;
}

namespace {

void set_param(ModelParams& p, SweepParam which, double value) {
    switch (which) {
        case SweepParam::Omega: p.omega = value; break;
        case SweepParam::Gamma: p.gamma = value; break;
        case SweepParam::Rho: p.rho = value; break;
        case SweepParam::Epsilon: p.epsilon = value; break;
        case SweepParam::Delta: p.delta = value; break;
        case SweepParam::Eta: p.eta = value; break;
    }
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.steps < 2) throw InputError("sweep: steps must be >= 2");
    if (!(cfg.from < cfg.to)) throw InputError("sweep: need from < to");
    if (cfg.delta_mode == DeltaMode::Explicit && !std::isfinite(cfg.fixed.delta)) {
        throw InputError("sweep: explicit delta must be finite");
    }
    if (cfg.eta_mode == EtaMode::Explicit && !std::isfinite(cfg.fixed.eta)) {
        throw InputError("sweep: explicit eta must be finite");
    }
    if (cfg.param == SweepParam::Delta && cfg.delta_mode != DeltaMode::Explicit) {
        throw InputError("sweep: cannot sweep delta in an auto-delta mode");
    }
    if (cfg.param == SweepParam::Eta && cfg.eta_mode != EtaMode::Explicit) {
        throw InputError("sweep: cannot sweep eta in auto-eta mode");
    }
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
    std::vector<double> grid(static_cast<std::size_t>(cfg.steps));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = cfg.from + (cfg.to - cfg.from) * static_cast<double>(k) /
                                 static_cast<double>(cfg.steps - 1);
    }
    return grid;
}

void append_double(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

double parse_double(std::string_view field, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw InputError(std::string("parse_csv: bad ") + what);
    }
    return v;
}

}  // namespace

ModelParams params_at(const SweepConfig& cfg, double t) {
    ModelParams p = cfg.fixed;
    set_param(p, cfg.param, t);
    if (cfg.eta_mode == EtaMode::Auto) p.eta = -p.epsilon;
    if (cfg.delta_mode == DeltaMode::AutoMinus) {
        p.delta = model::delta_minus(p.gamma, p.epsilon, p.rho);
    } else if (cfg.delta_mode == DeltaMode::AutoPlus) {
        p.delta = model::delta_plus(p.gamma, p.epsilon, p.rho);
    }
    return p;
}

ep::MatrixFamily family_of(const SweepConfig& cfg) {
    ep::MatrixFamily family;
    family.parameter_name = to_string(cfg.param);
    family.evaluate = [cfg](double t) { return model::build_matrix(params_at(cfg, t)); };
    if (cfg.param == SweepParam::Epsilon && cfg.delta_mode != DeltaMode::Explicit) {
        // gamma^2 >= (epsilon +/- rho)^2 bounds the auto-delta radicand.
        const double center =
            cfg.delta_mode == DeltaMode::AutoMinus ? -cfg.fixed.rho : cfg.fixed.rho;
        const double halfwidth = std::abs(cfg.fixed.gamma);
        family.valid_lo = center - halfwidth;
        family.valid_hi = center + halfwidth;
    }
    return family;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    const std::vector<double> grid = sweep_grid(cfg);

    // Resolve every point's parameters up front so an invalid auto-delta radicand
    // is reported as a configuration error naming the violating point.
    std::vector<ModelParams> params(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        try {
            params[k] = params_at(cfg, grid[k]);
        } catch (const DomainError& e) {
            std::ostringstream msg;
            msg << "sweep: invalid configuration at " << to_string(cfg.param) << " = "
                << grid[k] << ": " << e.what();
            throw InputError(msg.str());
        }
    }

    std::vector<Spectrum> spectra(grid.size());
    std::vector<SweepRow> rows(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        try {
            const ComplexMatrix m = model::build_matrix(params[k]);
            spectra[k] = linalg::eig(m, cfg.eig_options);
            const ep::CoalescenceMetrics metrics = ep::coalescence_metrics(spectra[k]);
            rows[k].t = grid[k];
            rows[k].max_abs_im = metrics.max_abs_im;
            rows[k].min_gap = metrics.min_gap;
            rows[k].abs_disc = std::abs(linalg::discriminant_quartic(linalg::char_poly(m)));
            rows[k].phase = model::classify_phase(spectra[k], cfg.phase_tol);
        } catch (const NumericalFailure& e) {
            std::ostringstream msg;
            msg << "sweep: numerical failure at " << to_string(cfg.param) << " = " << grid[k]
                << ": " << e.what();
            throw NumericalFailure(msg.str(), e.iterates(), e.residuals());
        }
    }

    if (cfg.sorted_output || rows.size() < 2) {
        for (std::size_t k = 0; k < grid.size(); ++k) {
            for (std::size_t i = 0; i < 4; ++i) {
                rows[k].branches[i] = spectra[k].eigenvalues[i];  // already (Re, Im)-sorted
            }
        }
    } else {
        const auto branches = ep::track_branches(spectra);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            for (std::size_t i = 0; i < 4; ++i) rows[k].branches[i] = branches[i][k];
        }
    }
    return rows;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    if (rows.empty()) throw InputError("emit_csv: no rows");
    std::string out =
        "t,re_e1,im_e1,re_e2,im_e2,re_e3,im_e3,re_e4,im_e4,max_abs_im,min_gap,abs_disc,phase\n";
    for (const SweepRow& row : rows) {
        append_double(out, row.t);
        for (const Complex& e : row.branches) {
            out.push_back(',');
            append_double(out, e.real());
            out.push_back(',');
            append_double(out, e.imag());
        }
        out.push_back(',');
        append_double(out, row.max_abs_im);
        out.push_back(',');
        append_double(out, row.min_gap);
        out.push_back(',');
        append_double(out, row.abs_disc);
        out.push_back(',');
        out += model::to_string(row.phase);
        out.push_back('\n');
    }
    return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
    std::vector<SweepRow> rows;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("parse_csv: empty input");
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 13) throw InputError("parse_csv: expected 13 columns");
        SweepRow row;
        row.t = parse_double(fields[0], "t");
        for (std::size_t i = 0; i < 4; ++i) {
            row.branches[i] = Complex{parse_double(fields[1 + 2 * i], "re"),
                                      parse_double(fields[2 + 2 * i], "im")};
        }
        row.max_abs_im = parse_double(fields[9], "max_abs_im");
        row.min_gap = parse_double(fields[10], "min_gap");
        row.abs_disc = parse_double(fields[11], "abs_disc");
        bool found = false;
        for (PhaseLabel label :
             {PhaseLabel::AllRealSimple, PhaseLabel::RealWithDegeneracy, PhaseLabel::Broken,
              PhaseLabel::FullyCoalesced}) {
            if (fields[12] == model::to_string(label)) {
                row.phase = label;
                found = true;
            }
        }
        if (!found) throw InputError("parse_csv: unknown phase label");
        rows.push_back(row);
    }
    return rows;
}

std::string emit_plot_script(const std::vector<SweepRow>& rows, FigStyle style,
                             const std::string& csv_path, std::optional<double> ep_t) {
    if (rows.empty()) throw InputError("emit_plot_script: no rows");
    const char* fig = style == FigStyle::Fig1 ? "fig1" : "fig2";
    const char* ep_condition =
        style == FigStyle::Fig1 ? "epsilon = -rho" : "epsilon = rho";

    std::ostringstream out;
    out << "# Spectrum sweep (" << fig << " layout): real and imaginary parts of the\n"
        << "# four tracked eigenvalue branches vs. the sweep parameter.\n"
        << "# Pick an output with e.g.: gnuplot -e \"set term png; set output '" << fig
        << ".png'\" <script>\n"
        << "set datafile separator ','\n"
        << "set multiplot layout 2,1\n"
        << "set key outside right\n";
    if (ep_t) {
        out << "# detected exceptional point (" << ep_condition << ")\n";
        out << "set arrow 1 from " << *ep_t << ",graph 0 to " << *ep_t
            << ",graph 1 nohead dt 2\n";
    }
    out << "set xlabel 'epsilon'\n"
        << "set ylabel 'Re E'\n"
        << "plot '" << csv_path << "' every ::1 using 1:2 with lines title 'Re E1', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:4 with lines title 'Re E2', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:6 with lines title 'Re E3', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:8 with lines title 'Re E4'\n"
        << "set ylabel 'Im E'\n"
        << "plot '" << csv_path << "' every ::1 using 1:3 with lines title 'Im E1', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:5 with lines title 'Im E2', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:7 with lines title 'Im E3', \\\n"
        << "     '" << csv_path << "' every ::1 using 1:9 with lines title 'Im E4'\n"
        << "unset multiplot\n";
    return out.str();
}

}  // namespace swanson::sweep
