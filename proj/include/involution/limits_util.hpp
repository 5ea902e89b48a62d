#pragma once

#include <functional>

namespace invo {

/// One-sided limit of g approaching `endpoint` (possibly +-inf) along a
/// geometric sequence starting from the interior anchor `inside`.
/// Divergence (or magnitude beyond 1e12) is reported as +-infinity.
double one_sided_limit(const std::function<double(double)>& g, double endpoint, double inside);

}  // namespace invo
