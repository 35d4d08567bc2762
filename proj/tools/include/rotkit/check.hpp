#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rodrigues/cayley.hpp"
#include "rodrigues/composition.hpp"
#include "rodrigues/geometry.hpp"

namespace rotkit {

/// Library entry points exercised by the self-check. Tests swap one out
/// for a corrupted version to confirm the check notices.
struct CheckKernels {
    std::function<rodrigues::RotationMatrix(const rodrigues::UnitVector&, double)> euler_rodrigues =
        rodrigues::euler_rodrigues_matrix;
    std::function<rodrigues::RotationMatrix(const rodrigues::RodriguesVector&)> matrix_from_rodrigues =
        rodrigues::matrix_from_rodrigues;
    std::function<rodrigues::RotationMatrix(const rodrigues::RodriguesVector&)> cayley_rotation =
        rodrigues::cayley_rotation;
    std::function<rodrigues::Matrix3(const rodrigues::RodriguesVector&)> cayley_inverse =
        rodrigues::cayley_inverse_explicit;
    std::function<rodrigues::RotationResult(const rodrigues::RotationMatrix&)> rodrigues_from_matrix =
        rodrigues::rodrigues_from_matrix;
    std::function<rodrigues::RotationResult(const rodrigues::RodriguesVector&, const rodrigues::RodriguesVector&)>
        compose = rodrigues::compose;
    std::function<rodrigues::SphericalTriangle(const rodrigues::RodriguesVector&, const rodrigues::RodriguesVector&)>
        donkin_triangle = rodrigues::donkin_triangle;
    std::function<rodrigues::UnitVector(const rodrigues::RodriguesVector&, const rodrigues::UnitVector&)>
        half_angle_point = rodrigues::half_angle_point;
};

struct Diagnostic {
    std::string name;
    /// Worst residual over the run, already divided by its scale.
    double max_residual = 0.0;
    double tolerance = 0.0;
    /// Set when a kernel threw instead of returning.
    std::string failure;

    bool passed() const { return failure.empty() && max_residual <= tolerance; }
};

/// Runs every identity on `n` seeded random inputs. Deterministic for a
/// given seed.
std::vector<Diagnostic> run_checks(int n, std::uint64_t seed, const CheckKernels& kernels = {});

}  // namespace rotkit
