#include "collspec/distributions.hpp"

#include <algorithm>
#include <cmath>

#include "collspec/faddeeva.hpp"

namespace collspec {

namespace {

constexpr int kMaxPoints = 512;   // node computation is well conditioned up to here
constexpr double kPiQuarterInv = 0.751125544464942483;  // pi^(-1/4)

double gaussian_pdf(double x, double mean, double sigma) {
    const double t = (x - mean) / sigma;
    return std::exp(-0.5 * t * t) / (sigma * std::sqrt(2.0 * M_PI));
}

}  // namespace

void DistributionSpec::validate() const {
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw ConfigError("distribution: sigma must be finite and >= 0");
    if (!std::isfinite(mean)) throw ConfigError("distribution: mean must be finite");
    if (points < 1) throw ConfigError("distribution: points must be >= 1");
    if (points > kMaxPoints)
        throw ConfigError("distribution: points exceeding " + std::to_string(kMaxPoints) +
                          " refused (node computation stability)");
    if (kind == Kind::discrete_list) {
        if (values.empty() || values.size() != weights.size())
            throw ConfigError("distribution: discrete_list needs matching non-empty values/weights");
        double sum = 0.0;
        for (double w : weights) {
            if (!(w > 0.0)) throw ConfigError("distribution: discrete weights must be > 0");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ConfigError("distribution: discrete weights sum to " + std::to_string(sum));
        for (double v : values)
            if (!std::isfinite(v)) throw ConfigError("distribution: non-finite value entry");
    }
}

Complex gaussian_isomer_response(double mean, double sigma, double omega) {
    if (!(sigma > 0.0))
        throw NumericError("gaussian_isomer_response: sigma must be > 0 (use the Lorentzian form)");
    return gaussian_lorentzian_average(omega, mean, sigma, 1.0);
}

Complex magnetic_doublet_response(double phi, double omega) {
    const Complex u{omega, 1.0};
    return 2.0 * u / (u * u - phi * phi);
}

Complex gaussian_magnetic_response(double mean, double sigma, double omega) {
    if (!(sigma > 0.0))
        throw NumericError("gaussian_magnetic_response: sigma must be > 0 (use the doublet form)");
    return gaussian_lorentzian_average(omega, mean, sigma, 1.0) +
           gaussian_lorentzian_average(omega, -mean, sigma, 1.0);
}

GaussHermiteRule gauss_hermite(int n) {
    if (n < 1 || n > kMaxPoints) throw ConfigError("gauss_hermite: order out of [1, 512]");
    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const int m = (n + 1) / 2;
    const double bound = 2.0 * n + 1.0;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        // Initial guesses (largest root first), then Newton polishing on the
        // orthonormal three-term recurrence.  The edge roots follow the Airy
        // expansion; interior roots are marched inward using the WKB root
        // density sqrt(2n+1-x^2)/pi.
        if (i == 0) {
            z = std::sqrt(bound) - 1.85575 * std::pow(bound, -1.0 / 6.0);
        } else if (i == 1) {
            z = std::sqrt(bound) - 3.24461 * std::pow(bound, -1.0 / 6.0);
        } else {
            // March inward by one WKB spacing, evaluating the density at the
            // interval midpoint (the density changes quickly near the edge).
            const double s1 = M_PI / std::sqrt(std::max(1.0, bound - z * z));
            const double zm = z - 0.5 * s1;
            z -= M_PI / std::sqrt(std::max(1.0, bound - zm * zm));
        }

        double pp = 0.0;
        int rescales = 0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            // Orthonormal recurrence, rescaled on the fly: values grow like
            // exp(x^2/2) in the classically forbidden region and would
            // overflow near the extreme nodes of high orders.  The Newton
            // ratio p1/pp is scale invariant.
            double p1 = kPiQuarterInv;
            double p2 = 0.0;
            rescales = 0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
                if (std::abs(p1) > 1e250) {
                    p1 *= 1e-250;
                    p2 *= 1e-250;
                    ++rescales;
                }
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            // Clamp the Newton step to under half the local root spacing so a
            // steep first iterate cannot hop into a neighboring basin.
            const double spacing = M_PI / std::sqrt(std::max(1.0, bound - z1 * z1));
            double step = p1 / pp;
            if (std::abs(step) > 0.45 * spacing) step = std::copysign(0.45 * spacing, step);
            z = z1 - step;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericError("gauss_hermite: Newton iteration failed");
        if (i > 0 && z >= rule.nodes[n - i])
            throw NumericError("gauss_hermite: root ordering lost (duplicate root)");

        rule.nodes[n - 1 - i] = z;
        rule.nodes[i] = -z;
        // Rescaled pp means the true weight underflows double range; store 0
        // (such nodes carry no probability mass and are dropped downstream).
        rule.weights[n - 1 - i] = (rescales > 0) ? 0.0 : 2.0 / (pp * pp);
        rule.weights[i] = rule.weights[n - 1 - i];
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

EnsembleSpec discretize_distribution(const DistributionSpec& dist) {
    dist.validate();
    EnsembleSpec out;

    const Vec2c axis{Complex{1.0, 0.0}, Complex{0.0, 0.0}};

    if (dist.kind == DistributionSpec::Kind::discrete_list) {
        for (std::size_t i = 0; i < dist.values.size(); ++i) {
            SubEnsemble sub;
            sub.weight = dist.weights[i];
            sub.transitions.push_back({dist.values[i], 1.0, axis});
            out.sub_ensembles.push_back(std::move(sub));
        }
    } else {
        std::vector<double> centers;
        std::vector<double> weights;
        if (dist.sigma == 0.0 || dist.points == 1) {
            centers.push_back(dist.mean);
            weights.push_back(1.0);
        } else {
            const GaussHermiteRule rule = gauss_hermite(dist.points);
            const double scale = std::sqrt(2.0) * dist.sigma;
            for (int i = 0; i < dist.points; ++i) {
                // Extreme nodes of high orders carry weights that underflow
                // to zero; they hold no probability mass and are dropped.
                if (!(rule.weights[i] > 0.0)) continue;
                centers.push_back(dist.mean + scale * rule.nodes[i]);
                weights.push_back(rule.weights[i]);
            }
        }
        double wsum = 0.0;
        for (double w : weights) wsum += w;
        for (double& w : weights) w /= wsum;
        // absorb the rounding residual into the heaviest node until the
        // sequential sum is exactly one
        std::size_t heaviest = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] > weights[heaviest]) heaviest = i;
        for (int pass = 0; pass < 8; ++pass) {
            double resid = 1.0;
            for (double w : weights) resid -= w;
            if (resid == 0.0) break;
            weights[heaviest] += resid;
        }
        for (std::size_t i = 0; i < centers.size(); ++i) {
            SubEnsemble sub;
            sub.weight = weights[i];
            if (dist.kind == DistributionSpec::Kind::gaussian_isomer) {
                // Site shift delta puts the resonance at omega = delta, and the
                // denominator convention is omega + detuning + i gamma.
                sub.transitions.push_back({-centers[i], 1.0, axis});
            } else {
                sub.transitions.push_back({centers[i], 1.0, axis});
                sub.transitions.push_back({-centers[i], 1.0, axis});
            }
            out.sub_ensembles.push_back(std::move(sub));
        }
    }

    out.validate();
    return out;
}

Complex quadrature_response_oracle(const DistributionSpec& dist, double omega,
                                   const QuadratureOptions& opt) {
    dist.validate();
    if (dist.kind == DistributionSpec::Kind::discrete_list)
        throw ConfigError("quadrature_response_oracle: applies to continuous distributions only");
    if (!(dist.sigma > 0.0))
        throw ConfigError("quadrature_response_oracle: sigma must be > 0");

    const double a = dist.mean - 12.0 * dist.sigma;
    const double b = dist.mean + 12.0 * dist.sigma;
    if (dist.kind == DistributionSpec::Kind::gaussian_isomer) {
        return integrate_gk(
            [&](double delta) {
                return gaussian_pdf(delta, dist.mean, dist.sigma) / Complex{omega - delta, 1.0};
            },
            a, b, opt);
    }
    return integrate_gk(
        [&](double phi) {
            return gaussian_pdf(phi, dist.mean, dist.sigma) * magnetic_doublet_response(phi, omega);
        },
        a, b, opt);
}

}  // namespace collspec
