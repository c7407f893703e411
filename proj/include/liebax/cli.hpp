#pragma once

#include <ostream>

namespace liebax {

/// Entry point of the liebax command. Returns 0 on success, 1 when the input
/// is rejected (failed check, non-bialgebra verdict, nonzero residual) and 2
/// on malformed input or usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liebax
