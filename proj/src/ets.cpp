#include "techtrend/ets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "techtrend/errors.hpp"
#include "techtrend/neldermead.hpp"

namespace techtrend {

std::size_t ModelSpec::min_points() const {
    std::size_t need = has_trend() ? 4 : 3;
    if (has_seasonal()) need = std::max<std::size_t>(need, 2 * static_cast<std::size_t>(season_length) + 3);
    return need;
}

int ModelSpec::param_count() const {
    int k = 1 + 1;  // alpha + level0
    if (has_trend()) k += 2;  // beta + trend0
    if (damped()) k += 1;     // phi
    if (has_seasonal()) k += 1 + season_length;  // gamma + initial seasonals
    return k;
}

std::string ModelSpec::name() const {
    std::string t = trend == TrendType::none ? "N" : (damped() ? "Ad" : "A");
    std::string s = has_seasonal() ? "A" : "N";
    return "ETS(A," + t + "," + s + ")";
}

FilterResult ets_filter(const std::vector<double>& values, const ModelSpec& spec,
                        const SmoothingParams& params) {
    const bool trend = spec.has_trend();
    const bool seasonal = spec.has_seasonal();
    const double alpha = params.alpha;
    const double beta = params.beta;
    const double gamma = params.gamma;
    const double phi = spec.damped() ? params.phi : 1.0;
    const int m = spec.season_length;

    FilterResult r;
    r.level = params.level0;
    r.trend = trend ? params.trend0 : 0.0;
    if (seasonal) {
        r.season = params.season0;
        r.season.resize(static_cast<std::size_t>(m), 0.0);
    }
    r.predictions.reserve(values.size());

    for (std::size_t t = 0; t < values.size(); ++t) {
        const std::size_t j = seasonal ? t % static_cast<std::size_t>(m) : 0;
        const double base = r.level + (trend ? phi * r.trend : 0.0);
        const double yhat = base + (seasonal ? r.season[j] : 0.0);
        const double e = values[t] - yhat;
        r.predictions.push_back(yhat);
        r.sse += e * e;

        r.level = base + alpha * e;
        if (trend) r.trend = phi * r.trend + beta * e;
        if (seasonal) r.season[j] += gamma * e;
    }
    return r;
}

double aicc_value(double sse, std::size_t n, int k) {
    if (n <= static_cast<std::size_t>(k) + 1) return std::numeric_limits<double>::infinity();
    double nn = static_cast<double>(n);
    double kk = static_cast<double>(k);
    double safe_sse = std::max(sse, 1e-300);
    return nn * std::log(safe_sse / nn) + 2.0 * kk + 2.0 * kk * (kk + 1.0) / (nn - kk - 1.0);
}

namespace {

constexpr double kAlphaLo = 1e-4, kAlphaHi = 0.9999;
constexpr double kPhiLo = 0.8, kPhiHi = 0.98;

double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

struct Layout {
    // indices into the optimizer vector; -1 where the spec lacks the part
    int alpha = 0;
    int beta = -1;
    int phi = -1;
    int gamma = -1;
    int level = -1;
    int trend = -1;
    int season = -1;  // first of m entries
    std::size_t dim = 0;

    explicit Layout(const ModelSpec& spec) {
        std::size_t i = 1;
        if (spec.has_trend()) beta = static_cast<int>(i++);
        if (spec.damped()) phi = static_cast<int>(i++);
        if (spec.has_seasonal()) gamma = static_cast<int>(i++);
        level = static_cast<int>(i++);
        if (spec.has_trend()) trend = static_cast<int>(i++);
        if (spec.has_seasonal()) {
            season = static_cast<int>(i);
            i += static_cast<std::size_t>(spec.season_length);
        }
        dim = i;
    }

    SmoothingParams unpack(const ModelSpec& spec, const std::vector<double>& x) const {
        SmoothingParams p;
        p.alpha = clamp(x[static_cast<std::size_t>(alpha)], kAlphaLo, kAlphaHi);
        if (beta >= 0) p.beta = clamp(x[static_cast<std::size_t>(beta)], 1e-4, p.alpha);
        if (phi >= 0) p.phi = clamp(x[static_cast<std::size_t>(phi)], kPhiLo, kPhiHi);
        if (gamma >= 0) p.gamma = clamp(x[static_cast<std::size_t>(gamma)], 1e-4, 1.0 - p.alpha);
        p.level0 = x[static_cast<std::size_t>(level)];
        if (trend >= 0) p.trend0 = x[static_cast<std::size_t>(trend)];
        if (season >= 0)
            p.season0.assign(x.begin() + season, x.begin() + season + spec.season_length);
        return p;
    }
};

struct StateSeeds {
    double level = 0;
    double slope = 0;
    std::vector<double> season;
};

StateSeeds seed_states(const std::vector<double>& values, const ModelSpec& spec) {
    StateSeeds s;
    const std::size_t head = std::min<std::size_t>(10, values.size());
    double mean = 0;
    for (std::size_t i = 0; i < head; ++i) mean += values[i];
    mean /= static_cast<double>(head);
    s.level = mean;

    // least-squares slope over the first head points
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < head; ++i) {
        double x = static_cast<double>(i);
        sx += x;
        sy += values[i];
        sxx += x * x;
        sxy += x * values[i];
    }
    double denom = static_cast<double>(head) * sxx - sx * sx;
    s.slope = denom != 0 ? (static_cast<double>(head) * sxy - sx * sy) / denom : 0.0;

    if (spec.has_seasonal()) {
        const std::size_t m = static_cast<std::size_t>(spec.season_length);
        double total = 0;
        for (double v : values) total += v;
        total /= static_cast<double>(values.size());
        s.season.assign(m, 0.0);
        std::vector<std::size_t> cnt(m, 0);
        for (std::size_t t = 0; t < values.size(); ++t) {
            s.season[t % m] += values[t];
            ++cnt[t % m];
        }
        for (std::size_t j = 0; j < m; ++j)
            s.season[j] = cnt[j] ? s.season[j] / static_cast<double>(cnt[j]) - total : 0.0;
    }
    return s;
}

constexpr double kGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
constexpr double kPhiGrid[] = {0.8, 0.9, 0.98};

}  // namespace

std::vector<ModelSpec> candidate_specs(int season_length) {
    std::vector<ModelSpec> specs;
    for (TrendType t : {TrendType::none, TrendType::additive, TrendType::additive_damped}) {
        specs.push_back(ModelSpec{t, SeasonalType::none, 1});
        if (season_length >= 2)
            specs.push_back(ModelSpec{t, SeasonalType::additive, season_length});
    }
    return specs;
}

FittedModel fit(const std::vector<double>& values, const ModelSpec& spec) {
    const std::size_t n = values.size();
    if (n < spec.min_points()) throw InsufficientDataError(n, spec.min_points());
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("fit: series contains non-finite values");
    if (spec.has_seasonal() && spec.season_length < 2)
        throw std::invalid_argument("fit: seasonal spec requires season_length >= 2");

    const Layout layout(spec);
    const StateSeeds seeds = seed_states(values, spec);

    double scale = 0;
    for (double v : values) scale += std::abs(v);
    scale = std::max(1.0, scale / static_cast<double>(n));

    auto objective = [&](const std::vector<double>& x) {
        SmoothingParams p = layout.unpack(spec, x);
        double sse = ets_filter(values, spec, p).sse;
        return std::isfinite(sse) ? sse : 1e300;
    };

    // simplex steps: modest for the unit-box parameters, scale-aware for states
    std::vector<double> step(layout.dim, 0.05);
    step[static_cast<std::size_t>(layout.level)] = std::max(0.1 * std::abs(seeds.level), 0.01 * scale);
    if (layout.trend >= 0)
        step[static_cast<std::size_t>(layout.trend)] = std::max(0.1 * std::abs(seeds.slope), 0.01 * scale);
    if (layout.season >= 0)
        for (int j = 0; j < spec.season_length; ++j)
            step[static_cast<std::size_t>(layout.season + j)] =
                std::max(0.1 * std::abs(seeds.season[static_cast<std::size_t>(j)]), 0.01 * scale);

    std::vector<double> x0(layout.dim, 0.0);
    x0[static_cast<std::size_t>(layout.level)] = seeds.level;
    if (layout.trend >= 0) x0[static_cast<std::size_t>(layout.trend)] = seeds.slope;
    if (layout.season >= 0)
        for (int j = 0; j < spec.season_length; ++j)
            x0[static_cast<std::size_t>(layout.season + j)] = seeds.season[static_cast<std::size_t>(j)];

    bool have_best = false;
    NelderMeadResult best;
    auto consider = [&](std::vector<double> seed) {
        NelderMeadResult r = nelder_mead(objective, seed, step, 500, 1e-8);
        if (!have_best || r.fx < best.fx) {
            best = std::move(r);
            have_best = true;
        }
    };

    for (double a : kGrid) {
        x0[static_cast<std::size_t>(layout.alpha)] = a;
        if (layout.beta < 0) {
            if (layout.gamma < 0) {
                consider(x0);
            } else {
                for (double g : kGrid) {
                    if (g > 1.0 - a) continue;
                    x0[static_cast<std::size_t>(layout.gamma)] = g;
                    consider(x0);
                }
            }
            continue;
        }
        for (double b : kGrid) {
            if (b > a) continue;
            x0[static_cast<std::size_t>(layout.beta)] = b;
            auto with_phi = [&](double g, bool set_gamma) {
                if (set_gamma) x0[static_cast<std::size_t>(layout.gamma)] = g;
                if (layout.phi < 0) {
                    consider(x0);
                    return;
                }
                for (double ph : kPhiGrid) {
                    x0[static_cast<std::size_t>(layout.phi)] = ph;
                    consider(x0);
                }
            };
            if (layout.gamma < 0) {
                with_phi(0, false);
            } else {
                for (double g : kGrid) {
                    if (g > 1.0 - a) continue;
                    with_phi(g, true);
                }
            }
        }
    }

    FittedModel model;
    model.spec = spec;
    model.params = layout.unpack(spec, best.x);
    FilterResult fr = ets_filter(values, spec, model.params);
    model.level = fr.level;
    model.trend = fr.trend;
    model.season = fr.season;
    model.sse = fr.sse;
    model.n = n;
    model.k = spec.param_count();
    model.aicc = aicc_value(model.sse, n, model.k);
    return model;
}

FittedModel select_model(const std::vector<double>& values,
                         const std::vector<ModelSpec>& candidates, int season_length) {
    if (candidates.empty()) throw std::invalid_argument("select_model: no candidates");
    std::optional<FittedModel> best;
    for (const ModelSpec& raw : candidates) {
        ModelSpec spec = raw;
        if (spec.has_seasonal()) spec.season_length = season_length;
        if (values.size() < spec.min_points()) continue;  // silently excluded
        FittedModel m = fit(values, spec);
        if (!best || m.aicc < best->aicc || (m.aicc == best->aicc && m.k < best->k)) best = std::move(m);
    }
    if (!best) {
        std::size_t need = candidates.front().min_points();
        for (const ModelSpec& c : candidates) need = std::min(need, c.min_points());
        throw InsufficientDataError(values.size(), need);
    }
    return *best;
}

std::vector<double> forecast_fixed(const FittedModel& model, int horizon) {
    if (horizon < 1) throw std::invalid_argument("forecast_fixed: horizon must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(horizon));
    const bool trend = model.spec.has_trend();
    const bool seasonal = model.spec.has_seasonal();
    const double phi = model.spec.damped() ? model.params.phi : 1.0;
    const std::size_t m = static_cast<std::size_t>(model.spec.season_length);

    double phi_sum = 0;
    double phi_pow = 1;
    for (int h = 1; h <= horizon; ++h) {
        phi_pow *= phi;
        phi_sum += phi_pow;
        double y = model.level + (trend ? phi_sum * model.trend : 0.0);
        if (seasonal) y += model.season[(model.n + static_cast<std::size_t>(h) - 1) % m];
        out.push_back(y);
    }
    return out;
}

std::vector<RollingPair> rolling_one_step(const std::vector<double>& values,
                                          std::size_t train_len, std::size_t test_len,
                                          int season_length,
                                          const std::optional<ModelSpec>& fixed_spec) {
    if (train_len + test_len > values.size())
        throw std::invalid_argument("rolling_one_step: train_len + test_len exceeds series length");
    std::vector<ModelSpec> candidates =
        fixed_spec ? std::vector<ModelSpec>{} : candidate_specs(season_length);

    std::vector<RollingPair> out;
    out.reserve(test_len);
    for (std::size_t i = 0; i < test_len; ++i) {
        std::vector<double> prefix(values.begin(),
                                   values.begin() + static_cast<std::ptrdiff_t>(train_len + i));
        FittedModel model = fixed_spec ? fit(prefix, *fixed_spec)
                                       : select_model(prefix, candidates, season_length);
        double pred = forecast_fixed(model, 1)[0];
        out.push_back(RollingPair{values[train_len + i], pred});
    }
    return out;
}

}  // namespace techtrend
