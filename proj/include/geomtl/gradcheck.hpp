#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace geomtl {

// A deterministic scalar loss of a flat parameter vector, returning the loss
// and its analytic gradient.
using LossFn = std::function<std::pair<double, std::vector<double>>(const std::vector<double>&)>;

// Compares the analytic gradient at `params` against central finite
// differences with step h. Returns
//   max_i |analytic_i - numeric_i| / max(1, |analytic_i|, |numeric_i|).
double grad_check(const LossFn& fn, std::vector<double> params, double h = 1e-5);

}  // namespace geomtl
