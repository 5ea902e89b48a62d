#pragma once

#include <string>
#include <vector>

#include "involution/involution.hpp"

namespace invo {

/// Named involutions with closed-form evaluation:
///   negation                 h(x) = -x on R
///   piecewise_linear(lambda) h(x) = -x/lambda (x<=0), -lambda x (x>0), lambda>0
///   log_exp                  h(x) = ln(2 - e^x) on (-inf, ln 2)
///   rational(a)              h(x) = -x/(1+ax)
///   cube_root(a)             h(x) = cbrt(a-(x+cbrt(a/2))^3) - cbrt(a/2) on R
///   parabolic                h(x) = x + 4 - 4 sqrt(1+x) on (-1, 3)
Involution catalog(const std::string& name, const std::vector<double>& params = {});

std::vector<std::string> catalog_names();

}  // namespace invo
