#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontlab/grid.hpp"

namespace frontlab {

/// Time history of an evolved front: interface positions X(t) in absolute
/// coordinates (continuous across window recentering), optional field
/// snapshots, and run metadata. When a construction predicts the interface
/// path in closed form, predicted_positions carries it on the same times.
struct FrontTrajectory {
    double level = 0.5;

    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> predicted_positions;  ///< empty unless a recipe fills it

    std::vector<FieldState> snapshots;

    int recenter_count = 0;
    double max_preclip_overshoot = 0.0;
    std::map<std::string, std::string> metadata;

    /// Position at time t by linear interpolation of the recorded samples.
    double position_at(double t) const;

    /// Snapshot with recorded time closest to t; throws if none were stored.
    const FieldState& snapshot_near(double t) const;

    /// Bound on the interface width oscillation: for the recorded snapshots,
    /// the largest diameter of {x : lo <= u <= hi}.
    double max_interface_width(double lo, double hi) const;
};

}  // namespace frontlab
