#include "rodrigues/cayley.hpp"

#include <array>
#include <cmath>

namespace rodrigues {

namespace {

// The product (1 - Q×)⁻¹(1 + Q×) cancels terms of size ‖Q‖ down to O(1), so
// both factors are formed and multiplied in extended precision.
using Wide = long double;
using WideMatrix = std::array<Wide, 9>;

WideMatrix wide_inverse(const Vec3& q) {
    const Wide x = q.x, y = q.y, z = q.z;
    const Wide q2 = x * x + y * y + z * z;
    const Wide d = 1.0L + q2;
    // (Q×) + (Q×)² written out; (Q×)² = QQᵀ - (Q·Q)1.
    const WideMatrix s = {0.0L, -z, y, z, 0.0L, -x, -y, x, 0.0L};
    const WideMatrix qq = {x * x - q2, x * y, x * z, y * x, y * y - q2, y * z, z * x, z * y, z * z - q2};
    WideMatrix m{};
    for (int i = 0; i < 9; ++i) m[i] = (s[i] + qq[i]) / d;
    m[0] += 1.0L;
    m[4] += 1.0L;
    m[8] += 1.0L;
    return m;
}

Matrix3 narrow(const WideMatrix& w) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = static_cast<double>(w[i * 3 + j]);
    }
    return m;
}

}  // namespace

Matrix3 cayley_inverse_explicit(const RodriguesVector& q) { return narrow(wide_inverse(q.vec())); }

RotationMatrix cayley_rotation(const RodriguesVector& q) {
    const WideMatrix m = wide_inverse(q.vec());
    const Wide x = q.x(), y = q.y(), z = q.z();
    const WideMatrix p = {1.0L, -z, y, z, 1.0L, -x, -y, x, 1.0L};
    WideMatrix r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i * 3 + j] = m[i * 3] * p[j] + m[i * 3 + 1] * p[3 + j] + m[i * 3 + 2] * p[6 + j];
        }
    }
    return RotationMatrix(narrow(r));
}

Matrix3 cayley_skew_literal(const RotationMatrix& r) {
    const Matrix3 p = r.matrix() + Matrix3::identity();
    const double det = p.determinant();
    if (det == 0.0 || !std::isfinite(det)) {
        throw Error(ErrorCode::NotARotation, "R + 1 is singular: rotation has eigenvalue -1");
    }
    const Matrix3 adj = Matrix3::from_columns(cross(p.row(1), p.row(2)), cross(p.row(2), p.row(0)),
                                              cross(p.row(0), p.row(1)));
    return (r.matrix() - Matrix3::identity()) * (adj / det);
}

RotationResult rodrigues_from_matrix(const RotationMatrix& r) {
    const Matrix3& m = r.matrix();
    const double tr = m.trace();
    if (tr <= -1.0 + kHalfTurnTraceMargin) {
        // (R + 1)/2 = nnᵀ for a half-turn; its longest column is parallel to n.
        const Matrix3 sym = 0.5 * (m + Matrix3::identity());
        int best = 0;
        for (int c = 1; c < 3; ++c) {
            if (norm(sym.column(c)) > norm(sym.column(best))) best = c;
        }
        return HalfTurn(UnitVector::normalize(sym.column(best)));
    }
    // (R - 1)(R + 1)⁻¹ = tan(θ/2)(n×) and skew_part(R) = sinθ·n, so
    // Q = skew_part(R)/(1 + cosθ) = skew_part(R)(1 - cosθ)/sin²θ. The second
    // form avoids dividing by the small 1 + cosθ near θ = π.
    const Vec3 v = skew_part(m);
    const double cos_theta = 0.5 * (tr - 1.0);
    if (cos_theta >= 0.0) return RodriguesVector(v / (1.0 + cos_theta));
    const double s2 = norm_squared(v);
    return RodriguesVector(v * ((1.0 - cos_theta) / s2));
}

CayleyResiduals cayley_residuals(const RodriguesVector& q, const Vec3& x) {
    const RotationMatrix r = matrix_from_rodrigues(q);
    const Matrix3 one = Matrix3::identity();
    const Matrix3 s = skew(q.vec()).matrix();
    const Vec3 rx = r.matrix() * x;
    const Vec3 lhs = (one + s) * x;
    const Vec3 rhs = (one - s) * rx;
    const Vec3 fig3 = (s * (r.matrix() + one) - (r.matrix() - one)) * x;
    return {norm(lhs - rhs), norm(fig3)};
}

}  // namespace rodrigues
