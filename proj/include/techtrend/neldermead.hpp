#pragma once

#include <functional>
#include <vector>

namespace techtrend {

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0;
    int iterations = 0;
};

/// Derivative-free simplex minimization (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5). Fully deterministic: no restarts, stable
/// ordering. Stops when the simplex's relative value spread drops below
/// `tolerance` or after `max_iterations`. Constraints are the caller's
/// business (project inside the objective).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             const std::vector<double>& x0, const std::vector<double>& step,
                             int max_iterations = 500, double tolerance = 1e-8);

}  // namespace techtrend
