#pragma once

#include "rodrigues/cayley.hpp"
#include "rodrigues/composition.hpp"
#include "rodrigues/error.hpp"
#include "rodrigues/geometry.hpp"
#include "rodrigues/kinematics.hpp"
#include "rodrigues/matrix3.hpp"
#include "rodrigues/rotation.hpp"
#include "rodrigues/sampling.hpp"
#include "rodrigues/vec3.hpp"
