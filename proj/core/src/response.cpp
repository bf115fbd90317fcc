#include "collspec/response.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

namespace collspec {

namespace {

// Per-scenario evaluator resolved once before the sweep.  Distribution models
// run through their closed forms; explicit ensembles either reduce to the
// scalar path (all dipoles parallel) or use the full 2x2 assembly.
struct Evaluator {
    enum class Path { scalar_ensemble, matrix_ensemble, isomer, magnetic, lorentzian, doublet };
    Path path;
    const EnsembleSpec* ensemble = nullptr;
    Vec2c axis{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    double mean = 0.0;
    double sigma = 0.0;
    // scalar_ensemble: precomputed strength/position per transition
    std::vector<double> strength;
    std::vector<Complex> pole;  // detuning + i linewidth

    bool scalar() const { return path != Path::matrix_ensemble; }

    Complex scalar_response(double omega) const {
        switch (path) {
            case Path::isomer:
                return gaussian_isomer_response(mean, sigma, omega);
            case Path::magnetic:
                return gaussian_magnetic_response(mean, sigma, omega);
            case Path::lorentzian:
                return 1.0 / Complex{omega - mean, 1.0};
            case Path::doublet:
                return magnetic_doublet_response(mean, omega);
            default: {
                Complex f{0.0, 0.0};
                for (std::size_t k = 0; k < strength.size(); ++k)
                    f += strength[k] / (omega + pole[k]);
                return f;
            }
        }
    }
};

Evaluator make_evaluator(const ScenarioConfig& config) {
    Evaluator ev;
    if (config.has_ensemble()) {
        ev.ensemble = &config.ensemble();
        Vec2c axis;
        if (parallel_dipoles(*ev.ensemble, &axis)) {
            ev.path = Evaluator::Path::scalar_ensemble;
            ev.axis = axis;
            for (const auto& sub : ev.ensemble->sub_ensembles)
                for (const auto& tr : sub.transitions) {
                    ev.strength.push_back(sub.weight * norm2(tr.dipole));
                    ev.pole.push_back(Complex{tr.detuning, tr.linewidth});
                }
        } else {
            ev.path = Evaluator::Path::matrix_ensemble;
        }
        return ev;
    }
    const DistributionSpec& d = config.distribution();
    ev.mean = d.mean;
    ev.sigma = d.sigma;
    if (d.kind == DistributionSpec::Kind::discrete_list) {
        // Discrete histograms materialize as a small ensemble; only the
        // pole/strength tables are kept (dipoles are all on one axis).
        const EnsembleSpec ens = discretize_distribution(d);
        ev.path = Evaluator::Path::scalar_ensemble;
        for (const auto& sub : ens.sub_ensembles)
            for (const auto& tr : sub.transitions) {
                ev.strength.push_back(sub.weight * norm2(tr.dipole));
                ev.pole.push_back(Complex{tr.detuning, tr.linewidth});
            }
        return ev;
    }
    if (d.kind == DistributionSpec::Kind::gaussian_isomer)
        ev.path = (d.sigma > 0.0) ? Evaluator::Path::isomer : Evaluator::Path::lorentzian;
    else
        ev.path = (d.sigma > 0.0) ? Evaluator::Path::magnetic : Evaluator::Path::doublet;
    return ev;
}

}  // namespace

Mat2c layer_response(const EnsembleSpec& ensemble, double omega) {
    Mat2c f;
    for (const auto& sub : ensemble.sub_ensembles)
        for (const auto& tr : sub.transitions) {
            const Complex denom{omega + tr.detuning, tr.linewidth};
            f += (sub.weight / denom) * outer_conj(tr.dipole);
        }
    return f;
}

Complex collective_chi_scalar(Complex f, const CollectiveCoupling& g) {
    const Complex denom = 1.0 + g.g() * f;
    if (std::abs(denom) <= 1e-12 * std::max(1.0, std::abs(g.g() * f)))
        throw NumericError("collective_chi: pole on grid (1 + G F vanishes)");
    return f / denom;
}

Mat2c collective_chi(const Mat2c& f, const CollectiveCoupling& g) {
    Mat2c m = Mat2c::identity() + g.g() * f;
    Mat2c inv;
    try {
        inv = inverse(m, 1e-12);
    } catch (const NumericError&) {
        throw NumericError("collective_chi: pole on grid (I + G F singular)");
    }
    return inv * f;
}

Mat2c naive_lamb_chi(const EnsembleSpec& ensemble, const CollectiveCoupling& g, double omega) {
    Mat2c chi;
    for (const auto& sub : ensemble.sub_ensembles)
        for (const auto& tr : sub.transitions) {
            const Complex shift = g.g() * norm2(tr.dipole);
            const Complex denom = Complex{omega + tr.detuning, tr.linewidth} + shift;
            chi += (sub.weight / denom) * outer_conj(tr.dipole);
        }
    return chi;
}

bool parallel_dipoles(const EnsembleSpec& ensemble, Vec2c* axis) {
    Vec2c ref;
    bool have_ref = false;
    for (const auto& sub : ensemble.sub_ensembles)
        for (const auto& tr : sub.transitions) {
            if (!have_ref) {
                const double n = norm(tr.dipole);
                ref = {tr.dipole.x / n, tr.dipole.y / n};
                have_ref = true;
                continue;
            }
            // complex collinearity: cross component must vanish
            const Complex cross = tr.dipole.x * ref.y - tr.dipole.y * ref.x;
            if (std::abs(cross) > 1e-12 * norm(tr.dipole)) return false;
        }
    if (axis && have_ref) *axis = ref;
    return have_ref;
}

Spectrum sweep(const ScenarioConfig& config, int threads) {
    config.validate();
    const Evaluator ev = make_evaluator(config);
    const int n = config.grid.steps;

    Spectrum out;
    out.omega.resize(n);
    out.chi.resize(n);
    out.scalar = ev.scalar();
    if (out.scalar) {
        out.chi_scalar.resize(n);
        out.abs2.resize(n);
    }
    for (int i = 0; i < n; ++i) out.omega[i] = config.grid.omega(i);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, n);

    // Failures are collected per index and the smallest-index one is
    // reported, so the outcome does not depend on worker interleaving.
    std::mutex error_mutex;
    int error_index = -1;
    std::string error_message;

    const Mat2c projector = outer_conj(ev.axis);
    auto worker = [&](int begin, int end) {
        try {
            for (int i = begin; i < end; ++i) {
                const double w = out.omega[i];
                try {
                    if (ev.scalar()) {
                        const Complex f = ev.scalar_response(w);
                        const Complex chi = collective_chi_scalar(f, config.coupling);
                        out.chi_scalar[i] = chi;
                        out.abs2[i] = std::norm(chi);
                        out.chi[i] = chi * projector;
                    } else {
                        out.chi[i] = collective_chi(layer_response(*ev.ensemble, w), config.coupling);
                    }
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (error_index < 0 || i < error_index) {
                        error_index = i;
                        char buf[160];
                        std::snprintf(buf, sizeof(buf), "%s at omega=%.17g (grid index %d)",
                                      e.what(), w, i);
                        error_message = buf;
                    }
                    return;
                }
            }
        } catch (...) {
            // worker bodies must not leak exceptions across threads
        }
    };

    if (threads == 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    if (error_index >= 0) throw NumericError(error_message);
    return out;
}

}  // namespace collspec
