#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rodrigues/error.hpp"
#include "rotkit/check.hpp"

namespace rotkit {

enum class ExitCode : int {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    HalfTurnUndefined = 3,
    ParallelAxes = 4,
    NonMonotonicTime = 5,
    StepTooLarge = 6,
    Io = 7,
};

ExitCode exit_code_for(rodrigues::ErrorCode code);

/// Runs one rotkit invocation. `args` excludes the program name. All
/// output goes to the given streams, so the tool can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const CheckKernels& kernels = {});

}  // namespace rotkit
