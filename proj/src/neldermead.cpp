#include "techtrend/neldermead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace techtrend {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             const std::vector<double>& x0, const std::vector<double>& step,
                             int max_iterations, double tolerance) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];

    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = objective(pts[i]);

    std::vector<std::size_t> order(n + 1);
    auto sort_order = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        sort_order();
        std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        double spread = fv[worst] - fv[best];
        if (spread <= tolerance * (std::abs(fv[best]) + 1e-12)) break;

        // centroid of all but the worst point
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - pts[worst][j]);
        double fr = objective(xr);

        if (fr < fv[best]) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - pts[worst][j]);
            double fe = objective(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second_worst]) {
            pts[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        // contraction (outside when the reflection helped at least a bit)
        if (fr < fv[worst]) {
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
        } else {
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (pts[worst][j] - centroid[j]);
        }
        double fc = objective(xc);
        if (fc < std::min(fr, fv[worst])) {
            pts[worst] = xc;
            fv[worst] = fc;
            continue;
        }
        // shrink toward the best point
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j)
                pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
            fv[i] = objective(pts[i]);
        }
    }

    sort_order();
    return NelderMeadResult{pts[order[0]], fv[order[0]], iter};
}

}  // namespace techtrend
