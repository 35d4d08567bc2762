#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "rodrigues/kinematics.hpp"
#include "rotkit/format.hpp"

namespace rotkit {

/// One `t wx wy wz` sample per line; blank lines and lines starting with
/// `#` are skipped. Throws ParseError naming the line. Time ordering is
/// left to the integrator.
std::vector<rodrigues::AngularVelocitySample> read_omega(std::istream& in);

/// `t qx qy qz` per sample, followed by the first two columns of R when
/// `matrix_columns` is set. Half-turn rows print nan for q.
void write_trajectory(std::ostream& out, const rodrigues::AttitudeTrajectory& traj, bool matrix_columns,
                      int precision = kDefaultPrecision);

}  // namespace rotkit
