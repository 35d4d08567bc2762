#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rodrigues/rotation.hpp"

namespace rotkit {

/// Malformed command-line text or input file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPrecision = 12;

/// Shortest general form with `precision` significant digits, "C" locale,
/// negative zero printed as 0.
std::string format_number(double v, int precision = kDefaultPrecision);
std::string format_list(std::span<const double> values, int precision = kDefaultPrecision);
std::string format_vec(const rodrigues::Vec3& v, int precision = kDefaultPrecision);

/// Comma-separated decimals, optional exponent and sign.
std::vector<double> parse_numbers(std::string_view text);
double parse_number(std::string_view text);
rodrigues::Vec3 parse_vec3(std::string_view text);

/// Textual rotation: aa:nx,ny,nz,theta | rod:qx,qy,qz | mat:r11,...,r33 |
/// half:nx,ny,nz. The axis of aa and half need not be normalized. An aa
/// angle within 1e-12 of ±π becomes a half-turn.
rodrigues::RotationResult parse_rotation_spec(std::string_view text, bool degrees = false);

std::string format_rod(const rodrigues::RodriguesVector& q, int precision = kDefaultPrecision);
std::string format_half(const rodrigues::HalfTurn& h, int precision = kDefaultPrecision);
std::string format_aa(const rodrigues::AxisAngle& aa, bool degrees = false, int precision = kDefaultPrecision);
std::string format_mat(const rodrigues::Matrix3& m, int precision = kDefaultPrecision);
/// rod: for a regular rotation, half: otherwise.
std::string format_result(const rodrigues::RotationResult& r, int precision = kDefaultPrecision);

}  // namespace rotkit
