#include "rotkit/trajectory_io.hpp"

#include <limits>
#include <sstream>
#include <string>

namespace rotkit {

using namespace rodrigues;

std::vector<AngularVelocitySample> read_omega(std::istream& in) {
    std::vector<AngularVelocitySample> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string tok;
        std::vector<double> v;
        try {
            while (fields >> tok) v.push_back(parse_number(tok));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (v.size() != 4) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 't wx wy wz', got " +
                             std::to_string(v.size()) + " fields");
        }
        out.push_back({v[0], AngularVelocity(v[1], v[2], v[3])});
    }
    return out;
}

void write_trajectory(std::ostream& out, const AttitudeTrajectory& traj, bool matrix_columns, int precision) {
    out << "# t qx qy qz";
    if (matrix_columns) out << " r11 r21 r31 r12 r22 r32";
    out << '\n';
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const AttitudeSample& s : traj.samples) {
        const Vec3 q = s.orientation.is_regular() ? s.orientation.rodrigues().vec() : Vec3{nan, nan, nan};
        out << format_number(s.t, precision) << ' ' << format_number(q.x, precision) << ' '
            << format_number(q.y, precision) << ' ' << format_number(q.z, precision);
        if (matrix_columns) {
            const Matrix3 r = matrix_of(s.orientation).matrix();
            for (int c = 0; c < 2; ++c) {
                for (int row = 0; row < 3; ++row) out << ' ' << format_number(r(row, c), precision);
            }
        }
        out << '\n';
    }
}

}  // namespace rotkit
