#include "rotkit/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "rodrigues/cayley.hpp"

namespace rotkit {

using namespace rodrigues;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

void expect_count(const std::vector<double>& v, std::size_t n, std::string_view what) {
    if (v.size() != n) {
        throw ParseError(std::string(what) + " expects " + std::to_string(n) + " numbers, got " +
                         std::to_string(v.size()));
    }
}

}  // namespace

std::string format_number(double v, int precision) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, precision);
    return std::string(buf.data(), res.ptr);
}

std::string format_list(std::span<const double> values, int precision) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_number(values[i], precision);
    }
    return out;
}

std::string format_vec(const Vec3& v, int precision) {
    const std::array<double, 3> a{v.x, v.y, v.z};
    return format_list(a, precision);
}

double parse_number(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    for (;;) {
        const std::size_t comma = text.find(',');
        out.push_back(parse_number(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Vec3 parse_vec3(std::string_view text) {
    const std::vector<double> v = parse_numbers(text);
    expect_count(v, 3, "vector");
    return {v[0], v[1], v[2]};
}

RotationResult parse_rotation_spec(std::string_view text, bool degrees) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("rotation spec needs a prefix (aa:, rod:, mat:, half:): '" + std::string(text) + "'");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::vector<double> v = parse_numbers(text.substr(colon + 1));
    try {
        if (kind == "rod") {
            expect_count(v, 3, "rod:");
            return RodriguesVector(v[0], v[1], v[2]);
        }
        if (kind == "half") {
            expect_count(v, 3, "half:");
            return HalfTurn(UnitVector::normalize({v[0], v[1], v[2]}));
        }
        if (kind == "aa") {
            expect_count(v, 4, "aa:");
            const double theta = degrees ? v[3] * std::numbers::pi / 180.0 : v[3];
            const AxisAngle aa(UnitVector::normalize({v[0], v[1], v[2]}), theta);
            if (std::fabs(std::numbers::pi - std::fabs(aa.angle())) <= 1e-12) return HalfTurn(aa.axis());
            return rodrigues_from_axis_angle(aa);
        }
        if (kind == "mat") {
            expect_count(v, 9, "mat:");
            std::array<double, 9> m{};
            std::copy(v.begin(), v.end(), m.begin());
            return rodrigues_from_matrix(RotationMatrix(Matrix3(m)));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::HalfTurnUndefined) throw;
        throw ParseError(std::string(text) + ": " + e.what());
    }
    throw ParseError("unknown rotation spec prefix '" + std::string(kind) + "'");
}

std::string format_rod(const RodriguesVector& q, int precision) { return "rod:" + format_vec(q.vec(), precision); }

std::string format_half(const HalfTurn& h, int precision) { return "half:" + format_vec(h.axis(), precision); }

std::string format_aa(const AxisAngle& aa, bool degrees, int precision) {
    const AxisAngle c = aa.canonical();
    const double theta = degrees ? c.angle() * 180.0 / std::numbers::pi : c.angle();
    return "aa:" + format_vec(c.axis(), precision) + "," + format_number(theta, precision);
}

std::string format_mat(const Matrix3& m, int precision) { return "mat:" + format_list(m.data(), precision); }

std::string format_result(const RotationResult& r, int precision) {
    return r.is_regular() ? format_rod(r.rodrigues(), precision) : format_half(r.half_turn(), precision);
}

}  // namespace rotkit
