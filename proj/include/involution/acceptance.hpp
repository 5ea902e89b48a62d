#pragma once

#include <iosfwd>

namespace invo {

/// Runs the full verification suite, printing one pass/fail line per
/// criterion. Returns true iff every criterion passed.
bool run_acceptance(std::ostream& os);

}  // namespace invo
