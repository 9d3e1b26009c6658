#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "techtrend/period.hpp"

namespace techtrend {

enum class TrendType { none, additive, additive_damped };
enum class SeasonalType { none, additive };

/// Additive-error exponential smoothing model shape. The candidate family
/// is {N, A, Ad} trend x {N, A} seasonal.
struct ModelSpec {
    TrendType trend = TrendType::none;
    SeasonalType seasonal = SeasonalType::none;
    int season_length = 1;  // m: 12 for monthly series, 4 for quarterly

    bool has_trend() const { return trend != TrendType::none; }
    bool damped() const { return trend == TrendType::additive_damped; }
    bool has_seasonal() const { return seasonal == SeasonalType::additive; }

    /// Shortest series the model accepts: 3 level-only, 4 with trend,
    /// 2m+3 with a seasonal component.
    std::size_t min_points() const;

    /// Free smoothing parameters + free initial states.
    int param_count() const;

    std::string name() const;  // e.g. "ETS(A,Ad,N)"
};

/// Smoothing parameters and initial states, the quantities the optimizer
/// searches over.
struct SmoothingParams {
    double alpha = 0.5;
    double beta = 0.1;
    double gamma = 0.1;
    double phi = 1.0;       // 1 when not damped
    double level0 = 0.0;
    double trend0 = 0.0;
    std::vector<double> season0;  // season0[j] feeds observation j+1
};

/// One pass of the error-correction recursion over y[0..n):
///   e_t = y_t - (l + phi*b + s[j]);  l += phi*b + alpha*e;  b = phi*b + beta*e;
///   s[j] += gamma*e   with j = (t-1) mod m.
struct FilterResult {
    double sse = 0;
    double level = 0;
    double trend = 0;
    std::vector<double> season;        // state ring after the last update
    std::vector<double> predictions;   // one-step-ahead fitted values
};

FilterResult ets_filter(const std::vector<double>& values, const ModelSpec& spec,
                        const SmoothingParams& params);

struct FittedModel {
    ModelSpec spec;
    SmoothingParams params;       // optimized, includes initial states
    double level = 0;             // final states after filtering
    double trend = 0;
    std::vector<double> season;
    double sse = 0;
    std::size_t n = 0;
    int k = 0;
    double aicc = 0;
};

/// n * ln(sse/n) + 2k + 2k(k+1)/(n-k-1); +infinity when n <= k+1.
double aicc_value(double sse, std::size_t n, int k);

/// Minimizes SSE over parameters and initial states with a coarse grid
/// (alpha, beta, gamma in {0.1,0.3,0.5,0.7,0.9} where feasible, phi in
/// {0.8,0.9,0.98}) seeding a Nelder-Mead local search. Deterministic.
/// Boxes: alpha in [1e-4, 0.9999], beta <= alpha, gamma <= 1-alpha,
/// phi in [0.8, 0.98].
FittedModel fit(const std::vector<double>& values, const ModelSpec& spec);

std::vector<ModelSpec> candidate_specs(int season_length);

/// Fits every candidate the series is long enough for and returns the
/// lowest AICc; exact ties go to fewer parameters, then candidate order.
FittedModel select_model(const std::vector<double>& values,
                         const std::vector<ModelSpec>& candidates, int season_length);

struct Forecast {
    Period origin;               // last training period (when known)
    std::vector<double> points;  // h values
};

/// h-step-ahead point forecasts:
///   y_hat(n+h) = l_n + (sum_{j=1..h} phi^j) b_n + s_(n+h-m*ceil(h/m))
std::vector<double> forecast_fixed(const FittedModel& model, int horizon);

struct RollingPair {
    double actual = 0;
    double predicted = 0;
};

/// Re-fits on y[0..train_len+i) and predicts one step ahead for each test
/// point i; nothing after the predicted index ever influences it. A fixed
/// spec is used when given, otherwise AICc selection among the candidates
/// for season_length m.
std::vector<RollingPair> rolling_one_step(const std::vector<double>& values,
                                          std::size_t train_len, std::size_t test_len,
                                          int season_length,
                                          const std::optional<ModelSpec>& fixed_spec = std::nullopt);

}  // namespace techtrend
