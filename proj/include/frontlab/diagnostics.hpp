#pragma once

#include <cstdint>
#include <utility>

#include "frontlab/grid.hpp"
#include "frontlab/model.hpp"
#include "frontlab/trajectory.hpp"
#include "frontlab/waves.hpp"

namespace frontlab {

enum class SpeedModel { Linear, LogCorrected };

struct SpeedEstimate {
    double value = 0.0;     ///< fitted speed
    double t_a = 0.0, t_b = 0.0;
    SpeedModel model = SpeedModel::Linear;
    double residual_rms = 0.0;
    double slope_ci = 0.0;  ///< bootstrap 95% half-width on the speed
    std::size_t n_points = 0;
};

struct DecayEstimate {
    double lambda_hat = 0.0;
    double x_lo = 0.0, x_hi = 0.0;  ///< absolute fit window
    double r_squared = 0.0;
    double u_min = 0.0, u_max = 0.0;  ///< value range actually used
    std::size_t n_points = 0;
};

struct GlobalMeanSpeed {
    double gamma_hat = 0.0;  ///< mean of (X(t+tau) - X(t)) / tau
    double sup_dev = 0.0;    ///< max positive deviation from gamma_hat
    double inf_dev = 0.0;    ///< max negative deviation (as a magnitude)
    double tau = 0.0;
    std::size_t n_pairs = 0;
};

struct ProfileDistance {
    double distance = 0.0;
    double best_shift = 0.0;
};

struct ExpLowerBound {
    double inf_value = 0.0;  ///< inf of e^{lambda (x - X)} u over x > X
    double at_x = 0.0;       ///< where the infimum is attained
    bool declining = false;  ///< infimum keeps dropping toward the right edge
};

/// Rightmost crossing of the level, linearly interpolated between the
/// bracketing grid points. Throws std::runtime_error when the field never
/// crosses the level.
double locate_front(const FieldState& s, double level);

/// Diameter of {x : a <= u(x) <= b}; zero when the set is empty.
/// Requires 0 < a <= b < 1.
double interface_width(const FieldState& s, double a, double b);

/// Least-squares front speed over positions with t in [t_a, t_b]. Linear
/// fits X = c t + b; LogCorrected fits X = c t + k ln|t| + b and requires
/// the window to exclude t = 0. At least 10 positions must fall in the
/// window. The confidence half-width comes from 200 residual-resampling
/// refits seeded by `seed`.
SpeedEstimate estimate_speed(const FrontTrajectory& traj, double t_a,
                             double t_b, SpeedModel model,
                             std::uint64_t seed = 12345);

/// Distribution of the finite-difference mean speeds (X(t+tau) - X(t))/tau
/// over the whole trajectory. Requires the recorded span to be >= 3 tau.
GlobalMeanSpeed global_mean_speed_profile(const FrontTrajectory& traj,
                                          double tau);

/// Least-squares slope of -ln u versus x on [X + d1, X + d2]. Every value
/// in the window must lie in [1e-10, 0.05] (the exponential tail regime);
/// otherwise throws std::invalid_argument.
DecayEstimate estimate_decay(const FieldState& s, double X, double d1,
                             double d2);

/// Offsets (d1, d2) relative to X of the tail region where u falls from
/// u_hi to u_lo, for feeding estimate_decay. Throws when the tail is not
/// resolved in the window.
std::pair<double, double> decay_window(const FieldState& s, double X,
                                       double u_hi = 1e-3, double u_lo = 1e-8);

/// Shift-minimized sup distance between the field and the profile over
/// [X - 30, X + 30]: min over s of sup_x |u(X + s + x) - phi(x)|. The
/// comparison window (for every probed shift) must stay inside the
/// snapshot. Unimodal in the shift for monotone data; minimized by a coarse
/// scan plus golden-section refinement.
ProfileDistance profile_distance(const FieldState& s, double X,
                                 const WaveProfile& p,
                                 double half_width = 30.0,
                                 double max_shift = 15.0);

/// Largest violation of the two-sided bound
///   u e^{-mu_minus Theta(t)} <= v <= u e^{+mu_minus Theta(t)}
/// over the shared snapshots of the two trajectories (0 when the bound
/// holds). Trajectories must carry snapshots at matching times on matching
/// grids.
double sandwich_check(const FrontTrajectory& u_traj,
                      const FrontTrajectory& v_traj, const ThetaEnvelope& env,
                      double mu_minus);

/// Infimum of e^{lambda (x - X)} u(x) over grid points right of X with
/// u >= 1e-12. `declining` is set when the infimum over the right half of
/// the admissible range is below half the infimum over the left half,
/// i.e. the product is still sliding toward 0 at the window edge.
ExpLowerBound exp_lower_bound_check(const FieldState& s, double X,
                                    double lambda);

/// Smallest C with |X(t) - X(s)| <= C (|t - s| + 1) over recorded pairs
/// (subsampled when the trajectory is long).
double local_oscillation_constant(const FrontTrajectory& traj);

}  // namespace frontlab
