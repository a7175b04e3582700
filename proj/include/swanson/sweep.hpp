// sweep.hpp — Parameter-sweep orchestration: resolve the delta/eta modes per
// point, track eigenvalue branches, emit CSV and gnuplot scripts, and run the
// seeded oracle verification suite.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swanson/ep_finder.hpp"
#include "swanson/model.hpp"

namespace swanson::sweep {

using linalg::Complex;
using model::ModelParams;
using model::PhaseLabel;

enum class DeltaMode { Explicit, AutoMinus, AutoPlus };
enum class EtaMode { Explicit, Auto };  // Auto: eta = -epsilon
enum class SweepParam { Omega, Gamma, Rho, Epsilon, Delta, Eta };

const char* to_string(SweepParam p) noexcept;
std::optional<SweepParam> sweep_param_from_string(const std::string& name);

struct SweepConfig {
    ModelParams fixed;  // values for parameters not swept / not in auto mode
    DeltaMode delta_mode = DeltaMode::Explicit;
    EtaMode eta_mode = EtaMode::Explicit;
    SweepParam param = SweepParam::Epsilon;
    double from = 0.0;
    double to = 1.0;
    int steps = 2;
    double phase_tol = 1e-6;
    linalg::EigOptions eig_options{};
    bool sorted_output = false;  // sort eigenvalues per row instead of branch tracking
};

struct SweepRow {
    double t = 0.0;
    std::array<Complex, 4> branches{};
    double max_abs_im = 0.0;
    double min_gap = 0.0;
    double abs_disc = 0.0;
    PhaseLabel phase = PhaseLabel::AllRealSimple;
};

// Model parameters at sweep position t: sweep parameter substituted, then eta
// and delta modes resolved (in that order; auto delta reads gamma/epsilon/rho).
ModelParams params_at(const SweepConfig& cfg, double t);

// The sweep as a one-parameter matrix family, with the auto-delta validity
// interval left to the caller's range check.
ep::MatrixFamily family_of(const SweepConfig& cfg);

// Evaluate the sweep on the inclusive grid from..to with `steps` points.
// Auto-delta radicands are checked over the whole grid up front (InputError
// naming the violating point); numerical failures carry the offending t.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// CSV with header t,re_e1,im_e1,...,re_e4,im_e4,max_abs_im,min_gap,abs_disc,phase.
// Values are shortest round-trip decimals, LF line endings.
std::string emit_csv(const std::vector<SweepRow>& rows);

std::vector<SweepRow> parse_csv(const std::string& text);  // exact round-trip of emit_csv

enum class FigStyle { Fig1, Fig2 };

// Two-panel gnuplot script (Re and Im of the four tracked branches vs. t),
// reading the CSV at csv_path; a vertical arrow marks ep_t when present.
std::string emit_plot_script(const std::vector<SweepRow>& rows, FigStyle style,
                             const std::string& csv_path, std::optional<double> ep_t);

// Deliberately wrong formula variants for negative-control runs.
struct VerifyFixture {
    bool flip_r_cross_sign = false;  // flip the 4 i delta (eta+epsilon) rho term in r
};

struct VerifyCheck {
    std::string name;
    int samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
    std::string to_text() const;
};

// Seeded oracle suite: (1) closed-form quartic coefficients vs. the
// Faddeev-LeVerrier characteristic polynomial on general parameters,
// (2) closed-form eigenvalues vs. numerical eig under eta = -epsilon,
// (3) delta_(-) branch degeneracy guarantee and split-pair values,
// (4) delta_(+) branch spectra on both sides of epsilon = rho,
// (5) rank/Jordan collapse at the epsilon = -/+ rho exceptional points.
VerifyReport verify_suite(int samples, std::uint64_t seed, const VerifyFixture& fixture = {});

}  // namespace swanson::sweep
