#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frontlab/model.hpp"

/// Traveling waves of the autonomous equation u_t = u_xx + g(u): profile
/// computation with normalized exponential tails, decay-rate algebra, and the
/// saturating ODE theta' = g(theta) used by spreading envelopes.
namespace frontlab {

/// An autonomous monostable reaction with its linearization slope at 0.
struct AutonomousReaction {
    std::function<double(double)> g;
    double mu0 = 1.0;  ///< g'(0) > 0
    std::string key;   ///< stable identifier for the profile cache
};

/// The limiting reactions of a heterogeneous nonlinearity.
AutonomousReaction past_reaction(const KppNonlinearity& f);
AutonomousReaction future_reaction(const KppNonlinearity& f);

/// Roots of lambda^2 - c lambda + mu0 = 0. Fronts of speed c decay like
/// e^{-lambda_small xi}; critical fronts (c = 2 sqrt(mu0)) have the double
/// root with a linear prefactor. Throws std::invalid_argument for
/// c < 2 sqrt(mu0): no traveling wave exists below the critical speed.
struct DecayRoots {
    double lambda_small = 0.0;
    double lambda_large = 0.0;
    bool critical = false;
};
DecayRoots decay_constants(double c, double mu0);

struct ProfileOptions {
    double xi_min = -60.0;
    double xi_max = 40.0;
    double dxi = 0.01;
    /// Distance from the saturated state at the integration seed.
    double seed_delta = 1e-9;
    /// Tail window (in phi) over which the normalization is fitted; brackets
    /// the nominal tail anchor amplitude 1e-8.
    double fit_lo = 1e-10;
    double fit_hi = 1e-6;
};

/// Monotone front profile phi'' + c phi' + g(phi) = 0, phi(-inf)=1,
/// phi(+inf)=0, sampled on a uniform grid and normalized so that
///   phi(xi) ~ e^{-lambda xi}          (supercritical), resp.
///   phi(xi) ~ (xi + a) e^{-lambda xi} (critical)
/// with leading coefficient 1. Outside the sampled range, value() and
/// derivative() continue with the fitted analytic tails.
struct WaveProfile {
    double speed = 0.0;
    double mu0 = 0.0;
    double lambda = 0.0;  ///< decay rate of the right tail
    bool critical = false;

    double xi_min = 0.0, xi_max = 0.0, dxi = 0.0;
    std::vector<double> phi;
    std::vector<double> dphi;

    double normalization_shift = 0.0;  ///< coordinate re-basing applied
    double residual = 0.0;             ///< max finite-difference ODE residual
    double critical_subleading = 0.0;  ///< a in (xi + a) e^{-lambda xi}
    double left_rate = 0.0;            ///< 1 - phi ~ left_amp e^{left_rate xi}
    double left_amp = 0.0;

    double value(double xi) const;
    double derivative(double xi) const;
    /// Inverse of the monotone profile: value(inverse(u)) = u for u in (0,1).
    double inverse(double u) const;
};

/// Integrates the profile ODE from the saturated side (the connection is the
/// unstable manifold of the saddle at phi = 1, the direction in which the
/// orbit is self-correcting), fits the tail over [fit_lo, fit_hi], and
/// re-bases coordinates so the normalized tail has leading coefficient 1.
/// Throws std::runtime_error when the requested range cannot hold the
/// profile (endpoints not within 1e-6 of the limits) or the finite-difference
/// residual of the samples exceeds 1e-6.
WaveProfile compute_profile(const AutonomousReaction& g, double c,
                            const ProfileOptions& opts = {});

/// Process-wide cache keyed by (reaction key, c, range, dxi).
const WaveProfile& cached_profile(const AutonomousReaction& g, double c,
                                  const ProfileOptions& opts = {});

/// Solution of theta' = g(theta) normalized by theta(t) ~ e^{mu0 t} as
/// t -> -infinity, tabulated on [t_min, t_max]. Below the tabulated range the
/// closed-form linearization is returned; above it evaluation throws.
class ThetaSolution {
public:
    ThetaSolution() = default;

    double operator()(double t) const;
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }

    friend ThetaSolution theta_ode(const AutonomousReaction&, double, double);

private:
    std::vector<double> grid_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    double t_min_ = 0.0, t_max_ = 0.0;
    double mu0_ = 1.0;
    double seed_time_ = 0.0;
};

ThetaSolution theta_ode(const AutonomousReaction& g, double t_min,
                        double t_max);

}  // namespace frontlab
