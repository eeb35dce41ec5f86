#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "frontlab/model.hpp"
#include "frontlab/solver.hpp"
#include "frontlab/trajectory.hpp"
#include "frontlab/waves.hpp"

/// Front constructions run as finite-start Cauchy problems: the time -T
/// stands in for the infinite past, so every recipe should be re-run at 2T
/// when quantitative conclusions matter (the runner does this for the
/// acceptance scenarios).
namespace frontlab {

/// Shared run settings for the construction recipes.
struct ConstructionParams {
    SchemeParams scheme{0.05, 0.01, 1.0};
    double window = 600.0;          ///< spatial window width
    double recenter_margin = 100.0; ///< 0 keeps the window fixed
    double level = 0.5;
    int position_stride = 1;
    std::vector<double> snapshot_times;
    int startup_implicit_steps = 0;
    std::function<void(const FieldState&)> observer;
};

/// Exponential-tail front: datum min(e^{-kappa(x - x_T)}, 1) at time -T,
/// with x_T on the predicted interface path
///   X(t) = integral_0^t (kappa sigma(s) + mu(s)/kappa) ds
/// (sigma = 1 when no diffusivity is given). Requires
/// 0 < kappa < sqrt(min(mu-, mu+)), with the slopes divided by sigma_-+
/// when a diffusivity is present. The trajectory's predicted_positions
/// carry X(t).
FrontTrajectory supercritical_front(const KppNonlinearity& f, double kappa,
                                    double T, const ConstructionParams& params,
                                    const DiffusivityProfile* sigma = nullptr);

struct GluedFrontResult {
    FrontTrajectory front;  ///< the glued evolution on [-T, T]
    FrontTrajectory u1;     ///< symmetrized-reaction companion on [-T, 0]
    FrontTrajectory u2;     ///< plain companion on [-T, 0]
    /// Largest violations of max(u1,u2) <= u (lower) and
    /// u <= min(u1+u2, 1) (upper) over the shared snapshots on [-T, 0].
    double lower_violation = 0.0;
    double upper_violation = 0.0;
    double crossing_x = 0.0;  ///< where the two initial tails cross
};

/// Two-decay front glued from u1 (decay kappa_minus under the symmetrized
/// reaction f(-|t|, u)) and u2 (decay kappa_plus under f): evolves
/// max(u1, u2) from -T and checks the sandwich
///   max(u1, u2) <= u <= min(u1 + u2, 1)
/// against the independently evolved companions on [-T, 0], on a shared
/// fixed window. Requires 0 < kappa_plus <= kappa_minus <= sqrt(mu-) and
/// kappa_plus <= sqrt(mu+); equal decays degenerate to a single-tail run.
/// Throws when the fixed window cannot hold both fronts through t = 0.
GluedFrontResult glued_front(const KppNonlinearity& f, double kappa_minus,
                             double kappa_plus, double T,
                             const ConstructionParams& params);

/// Heaviside-initiated steepest front: indicator of (-infty, 0] with a
/// one-cell ramp, smoothed by a few backward-Euler startup steps. Runs on
/// [-T, t_end] (t_end defaults to +T). Expected speeds: past 2 sqrt(mu-);
/// future 2 sqrt(mu+) when mu- >= mu+, else sqrt(mu-) + mu+/sqrt(mu-).
FrontTrajectory critical_front(
    const KppNonlinearity& f, double T, const ConstructionParams& params,
    double t_end = std::numeric_limits<double>::quiet_NaN());

/// Extended-decay front for media that weaken (mu+ < mu-): the
/// supercritical recipe run at kappa_minus in [sqrt(mu+), sqrt(mu-)).
/// Expected speeds: past kappa_minus + mu-/kappa_minus; future 2 sqrt(mu+)
/// (the predicted path built from the past formula overestimates the
/// future part).
FrontTrajectory bc_front(const KppNonlinearity& f, double kappa_minus,
                         double T, const ConstructionParams& params);

/// Homogeneous-medium front switching between two speeds: datum
/// max(phi_c1(x + c1 T - a1), phi_c2(x + c2 T - a2)) at -T. With zero
/// offsets the switchover happens near t = 0. Requires
/// 2 sqrt(g.mu0) <= c1 < c2. Throws when the tail crossing of the two
/// components falls outside the window.
FrontTrajectory two_speed_homogeneous(const AutonomousReaction& g, double c1,
                                      double c2, double T,
                                      const ConstructionParams& params,
                                      double a1 = 0.0, double a2 = 0.0);

}  // namespace frontlab
