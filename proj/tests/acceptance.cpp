// Acceptance suite: runs the project-level criteria end to end and prints one
// PASS/FAIL line per criterion.  Usage:
//   collspec_acceptance <path-to-collspec-cli> [criterion]
// With no criterion argument, all thirteen run; the exit status is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "collspec/analysis.hpp"
#include "collspec/config.hpp"
#include "collspec/distributions.hpp"
#include "collspec/dynamics.hpp"
#include "collspec/output.hpp"
#include "collspec/presets.hpp"
#include "collspec/response.hpp"

using namespace collspec;

namespace {

std::string g_cli_path;

struct Criterion {
    int number;
    const char* summary;
    std::function<bool(std::string&)> run;
};

const Vec2c kX{Complex{1.0, 0.0}, Complex{0.0, 0.0}};

EnsembleSpec single_line(double detuning = 0.0, double gamma = 1.0) {
    EnsembleSpec ens;
    ens.sub_ensembles.push_back({1.0, {Transition{detuning, gamma, kX}}});
    return ens;
}

EnsembleSpec doublet(double phi) {
    EnsembleSpec ens;
    ens.sub_ensembles.push_back({1.0, {Transition{phi, 1.0, kX}, Transition{-phi, 1.0, kX}}});
    return ens;
}

double rel_err(const Complex& got, const Complex& want) {
    const double s = std::abs(want);
    return s == 0.0 ? std::abs(got) : std::abs(got - want) / s;
}

DistributionSpec make_dist(DistributionSpec::Kind kind, double mean, double sigma,
                           int points = 64) {
    DistributionSpec d;
    d.kind = kind;
    d.mean = mean;
    d.sigma = sigma;
    d.points = points;
    return d;
}

Spectrum sweep_dist(DistributionSpec::Kind kind, double mean, double sigma, double j, double gb,
                    FrequencyGrid grid) {
    ScenarioConfig cfg;
    cfg.coupling = {j, gb};
    cfg.model = make_dist(kind, mean, sigma);
    cfg.grid = grid;
    return sweep(cfg);
}

// ---- criterion bodies ------------------------------------------------------

bool c1_oracle_equivalence(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const double sigma : {0.5, 3.5, 10.0, 14.0}) {
        for (const double mean : {0.0, 17.0}) {
            const auto iso = make_dist(DistributionSpec::Kind::gaussian_isomer, mean, sigma);
            const auto mag = make_dist(DistributionSpec::Kind::gaussian_magnetic, mean, sigma);
            for (int i = 0; i < 601; ++i) {
                const double w = -60.0 + 120.0 * i / 600.0;
                worst = std::max(worst, rel_err(gaussian_isomer_response(mean, sigma, w),
                                                quadrature_response_oracle(iso, w)));
                worst = std::max(worst, rel_err(gaussian_magnetic_response(mean, sigma, w),
                                                quadrature_response_oracle(mag, w)));
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max rel err %.2e, %.2f s", worst, secs);
    detail = buf;
    return worst <= 1e-8 && secs < 2.0;
}

bool c2_lorentzian_limit(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double w = -50.0 + 100.0 * i / 2000.0;
        const Complex voigt = gaussian_isomer_response(0.0, 1e-4, w);
        const Complex lorentz = 1.0 / Complex{w, 1.0};
        worst = std::max(worst, std::abs(voigt - lorentz));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max deviation %.2e", worst);
    detail = buf;
    return worst <= 1e-3;
}

bool c3_single_line_identity(std::string& detail) {
    std::srand(20240801);
    auto uni = [](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(std::rand()) / RAND_MAX);
    };
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double det = uni(-10.0, 10.0);
        const double gam = uni(0.2, 5.0);
        const CollectiveCoupling g{uni(-10.0, 10.0), uni(0.0, 10.0)};
        const double w = uni(-50.0, 50.0);
        const EnsembleSpec ens = single_line(det, gam);
        const Complex closed = 1.0 / (Complex{w + det, gam} + g.g());
        worst = std::max(worst, rel_err(collective_chi(layer_response(ens, w), g).m00, closed));
        worst = std::max(worst, rel_err(naive_lamb_chi(ens, g, w).m00, closed));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max rel err %.2e over 100 draws", worst);
    detail = buf;
    return worst <= 1e-12;
}

bool c4_pole_correctness(std::string& detail) {
    std::srand(77);
    auto uni = [](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(std::rand()) / RAND_MAX);
    };
    double worst_res = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double j = uni(0.0, 20.0), gb = uni(0.0, 20.0), phi = uni(0.0, 20.0);
        const PolePair p = doublet_poles(j, gb, phi);
        worst_res = std::max(worst_res, std::abs(doublet_denominator(p.omega_plus, j, gb, phi)));
        worst_res = std::max(worst_res, std::abs(doublet_denominator(p.omega_minus, j, gb, phi)));
    }
    const PolePair imag_case = doublet_poles(0.0, 5.0, 3.0);
    const double re_max =
        std::max(std::abs(imag_case.omega_plus.real()), std::abs(imag_case.omega_minus.real()));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max |denominator| %.2e, |Re w| %.2e", worst_res, re_max);
    detail = buf;
    return worst_res <= 1e-9 && re_max <= 1e-10;
}

bool c5_fig7_dip(std::string& detail) {
    const FrequencyGrid grid{-50.0, 50.0, 4001};
    const Spectrum narrow =
        sweep_dist(DistributionSpec::Kind::gaussian_magnetic, 17.0, 3.5, 0.0, 5.0, grid);
    const Spectrum wide =
        sweep_dist(DistributionSpec::Kind::gaussian_magnetic, 17.0, 14.0, 0.0, 5.0, grid);
    int central_narrow = 0;
    double loc = 0.0;
    for (const auto& [x, v] : peak_metrics(narrow).minima)
        if (std::abs(x) <= 0.5) {
            ++central_narrow;
            loc = x;
        }
    const PeakMetrics mw = peak_metrics(wide);
    int central_wide = 0;
    double wide_depth = 0.0;
    for (const auto& [x, v] : mw.minima)
        if (std::abs(x) <= 5.0) {
            ++central_wide;
            wide_depth = 1.0 - v / mw.peak_value;
        }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "sigma=3.5 dip at %.3f; sigma=14 central minima: %d (saddle depth %.0f%% of "
                  "its peak)",
                  loc, central_wide, 100.0 * wide_depth);
    detail = buf;
    return central_narrow == 1 && central_wide == 0;
}

bool c6_fig8_min_invariance(std::string& detail) {
    const FrequencyGrid grid{-50.0, 50.0, 4001};
    double lo = 1e300, hi = -1e300;
    for (const double j : {0.0, 2.0, 5.0, 10.0}) {
        const Spectrum s =
            sweep_dist(DistributionSpec::Kind::gaussian_magnetic, 17.0, 3.5, j, 5.0, grid);
        // the dip: deepest interior minimum between the doublet peaks
        double best_loc = 0.0, best_val = 1e300;
        for (const auto& [x, v] : peak_metrics(s).minima)
            if (std::abs(x) < 17.0 && v < best_val) {
                best_val = v;
                best_loc = x;
            }
        if (best_val == 1e300) {
            detail = "no interior minimum found";
            return false;
        }
        lo = std::min(lo, best_loc);
        hi = std::max(hi, best_loc);
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "minimum location spread %.3f gamma0", hi - lo);
    detail = buf;
    return hi - lo <= 0.5;
}

bool c7_fig6_narrowing(std::string& detail) {
    const FrequencyGrid grid{-100.0, 30.0, 5201};
    double prev = 1e300;
    double last = 0.0;
    bool decreasing = true;
    std::string widths;
    for (const double j : {0.0, 5.0, 10.0, 20.0, 50.0}) {
        const Spectrum s =
            sweep_dist(DistributionSpec::Kind::gaussian_isomer, 0.0, 10.0, j, 5.0, grid);
        const PeakMetrics m = peak_metrics(s);
        if (!m.fwhm) {
            detail = "half-max crossing left the grid";
            return false;
        }
        decreasing = decreasing && (*m.fwhm < prev);
        prev = *m.fwhm;
        last = *m.fwhm;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%s%.2f", widths.empty() ? "" : " > ", *m.fwhm);
        widths += buf;
    }
    const double target = 2.0 * (1.0 + 5.0);
    const bool close = std::abs(last - target) <= 0.2 * target;
    detail = "FWHM " + widths + " (target 12 within 20%)";
    return decreasing && close;
}

bool c8_fig5_shift_skew(std::string& detail) {
    // sigma = 0 baseline: a bare shifted line, symmetric about -J
    ScenarioConfig base;
    base.coupling = {5.0, 3.0};
    base.model = single_line();
    base.grid = {-25.0, 15.0, 2001};  // -5 is a grid point
    const PeakMetrics m0 = peak_metrics(sweep(base));
    if (!m0.asymmetry || std::abs(*m0.asymmetry) > 1e-6) {
        detail = "sigma=0 asymmetry not zero";
        return false;
    }

    const FrequencyGrid grid{-45.0, 25.0, 7001};
    double prev = -1.0;
    bool growing = true;
    double asym10 = 0.0;
    std::string shifts;
    for (const double sigma : {1.0, 5.0, 10.0}) {
        const Spectrum s =
            sweep_dist(DistributionSpec::Kind::gaussian_isomer, 0.0, sigma, 5.0, 3.0, grid);
        const PeakMetrics m = peak_metrics(s);
        const double displacement = std::abs(m.argmax + 5.0);
        growing = growing && (displacement > prev);
        prev = displacement;
        if (sigma == 10.0 && m.asymmetry) asym10 = *m.asymmetry;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%s%.3f", shifts.empty() ? "" : " < ", displacement);
        shifts += buf;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "displacement %s; asym(sigma=10) %.3f", shifts.c_str(),
                  asym10);
    detail = buf;
    return growing && std::abs(asym10) > 0.02;
}

double rel_l2(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

bool c9_time_frequency(std::string& detail) {
    const FrequencyGrid grid{-30.0, 30.0, 301};
    std::string cases;

    auto check_case = [&](const char* name, const EnsembleSpec& ens,
                          const CollectiveCoupling& g, double t_max, double dt) {
        const Spectrum td = impulse_response_spectrum(ens, g, grid, t_max, dt).spectrum;
        std::vector<Complex> want(grid.steps), got(grid.steps);
        for (int i = 0; i < grid.steps; ++i) {
            want[i] = collective_chi(layer_response(ens, grid.omega(i)), g).trace();
            got[i] = td.chi[i].trace();
        }
        const double mismatch = rel_l2(got, want);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s%s %.4f", cases.empty() ? "" : ", ", name, mismatch);
        cases += buf;
        return mismatch <= 0.01;
    };

    const bool ok1 = check_case("line", single_line(), {0.0, 0.0}, 40.0, 0.005);
    const bool ok2 = check_case("doublet", doublet(17.0), {0.0, 5.0}, 20.0, 4e-4);
    const EnsembleSpec gauss = discretize_distribution(
        make_dist(DistributionSpec::Kind::gaussian_isomer, 0.0, 3.5, 32));
    const bool ok3 =
        check_case("gaussian", gauss, {0.0, 5.0}, 60.0, suggest_dt(gauss, {0.0, 5.0}));

    detail = "rel L2: " + cases;
    return ok1 && ok2 && ok3;
}

bool c10_mode_selectivity(std::string& detail) {
    const double j = 50.0, gb = 5.0, phi = 1.0;
    const EnsembleSpec ens = doublet(phi);
    const double dt = 1e-4;
    DriveEnvelope kick;
    kick.amplitude = kX;
    const ModeTrajectory traj = integrate_eom(ens, {j, gb}, kick, 3.0 * dt, dt, 1);
    const ModePair modes = doublet_modes(j, gb, phi);
    const Mat2c basis{modes.e_plus.x, modes.e_minus.x, modes.e_plus.y, modes.e_minus.y};
    const Vec2c c = inverse(basis) * Vec2c{traj.amplitude(1, 0), traj.amplitude(1, 1)};
    const double ratio = std::norm(c.y) / std::norm(c.x);
    const double bound = 1.1 * (phi / (2.0 * j)) * (phi / (2.0 * j));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "population ratio %.3e (bound %.3e)", ratio, bound);
    detail = buf;
    return ratio <= bound;
}

bool c11_discretization(std::string& detail) {
    // NOTE: the 1e-6 target at P = 64 is reachable only for narrow widths; a
    // 64-term mixture of unit-width Lorentzians has a resolution floor of
    // roughly exp(-2 pi gamma / spacing), several orders above 1e-6 for
    // sigma in {3.5, 10, 14}.  Measured values are printed; the criterion is
    // asserted as stated.
    bool monotone = true;
    bool within = true;
    std::string report;
    for (const double sigma : {0.5, 3.5, 10.0, 14.0}) {
        double prev = 1e300, last = 0.0;
        for (const int points : {8, 16, 32, 64}) {
            const EnsembleSpec ens = discretize_distribution(
                make_dist(DistributionSpec::Kind::gaussian_isomer, 0.0, sigma, points));
            double worst = 0.0;
            for (int i = 0; i <= 400; ++i) {
                const double w = -100.0 + 200.0 * i / 400.0;
                worst = std::max(worst, rel_err(layer_response(ens, w).m00,
                                                gaussian_isomer_response(0.0, sigma, w)));
            }
            monotone = monotone && (worst < prev);
            prev = worst;
            last = worst;
        }
        within = within && (last <= 1e-6);
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%ssigma=%g: %.2e", report.empty() ? "" : ", ", sigma,
                      last);
        report += buf;
    }
    detail = "P=64 errors " + report + (monotone ? "; monotone" : "; NOT monotone");
    return monotone && within;
}

bool c12_sum_rule(std::string& detail) {
    double worst = 0.0;
    for (const auto& name : preset_names()) {
        for (const auto& member : paper_preset(name).members) {
            const ScenarioConfig& cfg = member.config;
            double dipole_weight = 0.0;
            std::function<Complex(double)> f;
            if (cfg.has_ensemble()) {
                dipole_weight = cfg.ensemble().total_dipole_weight();
                const EnsembleSpec& ens = cfg.ensemble();
                f = [&ens](double w) { return layer_response(ens, w).trace(); };
            } else {
                const DistributionSpec& d = cfg.distribution();
                const bool magnetic = d.kind == DistributionSpec::Kind::gaussian_magnetic;
                dipole_weight = magnetic ? 2.0 : 1.0;
                if (d.sigma == 0.0) {
                    f = [d, magnetic](double w) {
                        return magnetic ? magnetic_doublet_response(d.mean, w)
                                        : 1.0 / Complex{w - d.mean, 1.0};
                    };
                } else {
                    f = [d, magnetic](double w) {
                        return magnetic ? gaussian_magnetic_response(d.mean, d.sigma, w)
                                        : gaussian_isomer_response(d.mean, d.sigma, w);
                    };
                }
            }
            const double h = 0.05;
            const int n = static_cast<int>(std::lround(1000.0 / h)) + 1;
            double integral = 0.0;
            for (int i = 0; i < n; ++i) {
                const double w = -500.0 + h * i;
                const double im = f(w).imag();
                integral += (i == 0 || i == n - 1) ? 0.5 * im : im;
            }
            integral *= h;
            const double want = -M_PI * dipole_weight;
            worst = std::max(worst, std::abs(integral - want) / std::abs(want));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst deviation %.2e (limit 0.02)", worst);
    detail = buf;
    return worst <= 0.02;
}

bool run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool c13_cli_determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "CLI path not supplied";
        return false;
    }
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "collspec_acceptance";
    std::error_code ec;
    fs::remove_all(base, ec);
    const fs::path d1 = base / "run1", d2 = base / "run2", d3 = base / "run3";

    if (!run_cli("spectrum --preset fig7 --threads 1 --out " + d1.string()) ||
        !run_cli("spectrum --preset fig7 --threads 1 --out " + d2.string()) ||
        !run_cli("spectrum --preset fig7 --threads 4 --out " + d3.string())) {
        detail = "CLI invocation failed";
        return false;
    }

    int files = 0;
    for (const auto& entry : fs::directory_iterator(d1)) {
        if (entry.path().extension() != ".csv") continue;
        ++files;
        const std::string name = entry.path().filename().string();
        const std::string a = slurp(entry.path());
        if (a.empty() || a != slurp(d2 / name) || a != slurp(d3 / name)) {
            detail = "mismatch in " + name;
            return false;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d CSV files byte-identical across runs/threads", files);
    detail = buf;
    return files == 4;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2) g_cli_path = argv[1];
    int only = 0;
    if (argc >= 3) only = std::atoi(argv[2]);

    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence of Gaussian closed forms", c1_oracle_equivalence},
        {2, "Lorentzian limit of the narrow Gaussian", c2_lorentzian_limit},
        {3, "single-line identity (collective == naive == closed form)", c3_single_line_identity},
        {4, "doublet pole correctness", c4_pole_correctness},
        {5, "interference dip present at sigma=3.5, absent at sigma=14", c5_fig7_dip},
        {6, "dip location invariant under J", c6_fig8_min_invariance},
        {7, "linewidth narrows toward 2(gamma0+Gamma) with growing J", c7_fig6_narrowing},
        {8, "peak shift grows with width; skew appears", c8_fig5_shift_skew},
        {9, "time-domain impulse response matches the frequency domain", c9_time_frequency},
        {10, "symmetric kick selects the symmetric doublet mode", c10_mode_selectivity},
        {11, "Gauss-Hermite discretization convergence", c11_discretization},
        {12, "sum rule on every preset", c12_sum_rule},
        {13, "CLI emits byte-identical CSVs across runs and threads", c13_cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%2d] %s  %s (%s)\n", c.number, ok ? "PASS" : "FAIL", c.summary,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
