#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frontlab/numerics.hpp"

/// Reaction models for u_t = sigma(t) u_xx + f(t, u): monostable
/// nonlinearities whose per-capita rate f(t,u)/u is nonincreasing in u,
/// with limiting autonomous reactions f_minus / f_plus as t -> -/+ infinity,
/// plus diffusivity time profiles and the time-change that absorbs them.
namespace frontlab {

/// Constants of the small-u lower bound
///   f(t,u) >= d_u f(t,0) * u - C * u^(1+omega)   for 0 <= u <= delta.
struct KppConstants {
    double C = 1.0;
    double omega = 1.0;
    double delta = 1.0;
};

/// Closed-form metadata for separable reactions f(t,u) = ramp(t) * shape(u).
/// Lets mu_of_t and caches bypass finite differences.
struct SeparableForm {
    std::function<double(double)> ramp;   ///< ramp(t), positive
    std::function<double(double)> shape;  ///< shape(u), shape(0)=shape(1)=0
    double ramp_minus = 1.0;              ///< limit of ramp at t -> -inf
    double ramp_plus = 1.0;
    double shape_prime0 = 1.0;            ///< shape'(0)
};

/// A time-heterogeneous KPP reaction together with its limiting data.
struct KppNonlinearity {
    std::function<double(double, double)> eval;  ///< f(t, u)
    std::function<double(double)> f_minus;       ///< limiting reaction, past
    std::function<double(double)> f_plus;        ///< limiting reaction, future
    double mu_minus = 0.0;                       ///< d_u f_minus(0)
    double mu_plus = 0.0;                        ///< d_u f_plus(0)

    /// Optional convergence envelopes: |f(t,u)/f_minus(u) - 1| <= zeta_minus(t)
    /// for t < 0 (resp. plus side for t > 0). Null when not supplied.
    std::function<double(double)> zeta_minus;
    std::function<double(double)> zeta_plus;

    KppConstants kpp_constants;
    double lipschitz_bound = 1.0;  ///< sup over t, u in [0,1] of |d_u f|

    std::optional<SeparableForm> separable;
    std::string family_key;  ///< stable identifier for archives and caches

    /// Instantaneous linearization slope d_u f(t, 0). Closed form for
    /// separable reactions, else one-sided finite difference at h = 1e-7
    /// Richardson-extrapolated with the 2h difference.
    double mu_of_t(double t) const;
};

/// Base shapes for the built-in separable families.
struct ShapeSpec {
    enum class Kind { Logistic, Cubic } kind = Kind::Logistic;
    /// Cubic shape u(1-u)(1+b*u); KPP requires b in (-1, 0].
    double b = 0.0;
};

/// Time profiles for the built-in separable families.
struct RampSpec {
    enum class Kind { Constant, TanhRamp, PiecewiseFlat } kind = Kind::Constant;
    double level_minus = 1.0;  ///< limit as t -> -inf (equals level_plus for Constant)
    double level_plus = 1.0;
    double scale = 1.0;        ///< TanhRamp: level transitions like tanh(t/scale)
    double t0 = -1.0;          ///< PiecewiseFlat: join interval [t0, t1]
    double t1 = 1.0;
};

/// Builds f(t,u) = ramp(t) * shape(u) with all limits, envelopes, and
/// constants filled in. Throws std::invalid_argument on out-of-range
/// parameters (non-positive levels, cubic b outside (-1,0], t1 <= t0).
KppNonlinearity make_separable(const RampSpec& ramp, const ShapeSpec& shape);

/// Autonomous logistic reaction mu * u * (1 - u).
KppNonlinearity make_logistic(double mu);

/// Logistic shape with ramp level_minus -> level_plus along tanh(t/scale).
KppNonlinearity make_tanh_ramp(double level_minus, double level_plus,
                               double scale);

/// Logistic shape with the transient ramp mu * (1 + amplitude*e^(-rate*|t|)):
/// both limits equal mu and the convergence envelopes decay exponentially on
/// each side, which makes the limit-comparison machinery exact. Requires
/// mu > 0, amplitude > -1, rate > 0.
KppNonlinearity make_exp_bump(double mu, double amplitude, double rate = 1.0);

/// The autonomous medium of the far past: eval(t, u) = f_minus(u) for every
/// t, zero convergence envelopes, everything else carried over. This is the
/// homogeneous companion of f in limit-comparison experiments.
KppNonlinearity freeze_past(const KppNonlinearity& f);

/// One row of a validation report.
struct ValidationCheck {
    std::string name;
    bool pass = false;
    double worst_violation = 0.0;  ///< 0 when the check holds with margin
    double margin = 0.0;           ///< slack of the binding sample
    double worst_t = 0.0;
    double worst_u = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass = true;

    std::string summary() const;
};

struct ValidationOptions {
    double tol_zero = 1e-12;   ///< |f(t,0)|, |f(t,1)|
    double tol_mono = 1e-10;   ///< slack for ratio monotonicity in u
    double tol_limit = 1e-3;   ///< |f/f_pm - 1| at the extreme t samples
    double tol_lower = 1e-10;  ///< slack for the small-u lower bound
};

/// Checks the structural hypotheses on sampled (t, u) grids: endpoint zeros,
/// nonnegativity, per-capita monotonicity in u, convergence to the limits at
/// the extreme t samples, and the small-u lower bound below delta.
/// Rejects u_samples containing 0 (per-capita rates are undefined there).
ValidationReport validate_kpp(const KppNonlinearity& f,
                              const std::vector<double>& t_samples,
                              const std::vector<double>& u_samples,
                              const ValidationOptions& opts = {});

/// Time-dependent diffusivity sigma(t) with its antiderivative
/// tau(t) = integral_0^t sigma and the inverse map.
struct DiffusivityProfile {
    std::function<double(double)> sigma;
    double sigma_minus = 1.0;  ///< limit at t -> -inf
    double sigma_plus = 1.0;
    double eps0 = 1.0;         ///< uniform lower bound inf_t sigma(t) > 0
    double sup_bound = 1.0;    ///< uniform upper bound sup_t sigma(t)
    std::function<double(double)> tau;
    std::function<double(double)> tau_inverse;
    std::string family_key;
};

DiffusivityProfile make_constant_diffusivity(double s);

/// sigma(t) = mid + half * tanh(t/scale) with closed-form tau and a Newton
/// inverse. Requires 0 < s_minus and 0 < s_plus.
DiffusivityProfile make_tanh_diffusivity(double s_minus, double s_plus,
                                         double scale);

/// The profile realizing the inverse reparameterization: sigma'(s) =
/// 1/sigma(tau_inverse(s)), tau' = tau_inverse. Applying time_change twice
/// through this profile recovers the original reaction.
DiffusivityProfile inverse_diffusivity(const DiffusivityProfile& d);

/// Cumulative envelope mass Theta(t) = integral_{-infty}^t zeta, tabulated on
/// [t_min, t_max] with the tail below the truncation horizon estimated and
/// reported. Evaluation outside the tabulated range throws std::out_of_range.
class ThetaEnvelope {
public:
    struct Options {
        double t_trunc = -200.0;   ///< truncation horizon for the lower tail
        double quad_tol = 1e-9;    ///< adaptive quadrature tolerance
        double tail_tol = 1e-6;    ///< max admissible truncated-tail estimate
        double grid_step = 0.125;  ///< tabulation step on [t_min, t_max]
    };

    ThetaEnvelope() = default;

    double operator()(double t) const;

    double total_mass() const { return total_mass_; }
    double tail_estimate() const { return tail_estimate_; }
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }

    friend ThetaEnvelope theta_envelope(const std::function<double(double)>&,
                                        double, double,
                                        const ThetaEnvelope::Options&);

private:
    MonotoneCubic interp_;  ///< cumulative mass over [t_min, t_max]
    double t_min_ = 0.0, t_max_ = 0.0;
    double total_mass_ = 0.0;
    double tail_estimate_ = 0.0;
};

/// Tabulates Theta on [t_min, t_max]. The mass below t_trunc is estimated as
/// twice the mass of [2*t_trunc, t_trunc], which dominates the true tail
/// whenever doubling the horizon at least halves the remaining mass (true for
/// exponential and power decay of order >= 2; checked empirically by the
/// caller's samples). Throws std::runtime_error when the estimate exceeds
/// tail_tol: the envelope is then not integrable at this horizon.
ThetaEnvelope theta_envelope(const std::function<double(double)>& zeta,
                             double t_min, double t_max,
                             const ThetaEnvelope::Options& opts = {});

/// Result of absorbing a diffusivity into the clock: in the new time s =
/// tau(t) the field solves u_s = u_xx + transformed.eval(s, u).
struct TimeChanged {
    KppNonlinearity transformed;
    DiffusivityProfile profile;  ///< the profile that was absorbed
};

/// Transformed reaction f~(s,u) = f(tau_inverse(s), u) / sigma(tau_inverse(s)),
/// with slopes mu_pm / sigma_pm and envelopes widened by the sigma variation
/// term |sigma_pm / sigma - 1|. Requires eps0 > 0.
TimeChanged time_change(const KppNonlinearity& f, const DiffusivityProfile& d);

}  // namespace frontlab
