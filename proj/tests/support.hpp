// support.hpp — generators and oracles shared by the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "satbound/satbound.hpp"

namespace satbound::testing {

inline std::vector<std::string> make_ids(std::size_t n, const std::string& prefix = "t") {
    std::vector<std::string> ids;
    for (std::size_t j = 0; j < n; ++j) ids.push_back(prefix + std::to_string(j + 1));
    return ids;
}

inline BitRow random_row(std::mt19937_64& rng, std::size_t n, double p_one = 0.5) {
    std::bernoulli_distribution bit(p_one);
    BitRow row(n);
    for (auto& v : row) v = bit(rng) ? 1 : 0;
    return row;
}

/// Spectrum with 1..max_targets targets and 0..max_rows rows. Column bias
/// is drawn per spectrum so all-ones and all-zeros columns show up often.
inline HitSpectrum random_spectrum(std::mt19937_64& rng, std::size_t max_targets, std::size_t max_rows,
                                   std::size_t min_rows = 0) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_targets);
    std::uniform_int_distribution<std::size_t> m_dist(min_rows, max_rows);
    std::uniform_real_distribution<double> bias(0.05, 0.95);
    const auto n = n_dist(rng);
    const auto m = m_dist(rng);
    std::vector<double> col_bias(n);
    for (auto& b : col_bias) b = bias(rng);
    std::vector<BitRow> rows;
    for (std::size_t i = 0; i < m; ++i) {
        BitRow row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = std::bernoulli_distribution(col_bias[j])(rng) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    return HitSpectrum(make_ids(n), std::move(rows));
}

/// Model with n in [1,max_targets], k in [1,max_profiles] distinct random profiles
/// and exponential weights normalized to one.
inline SutProfileModel random_model(std::mt19937_64& rng, std::size_t max_targets, std::size_t max_profiles) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_targets);
    const auto n = n_dist(rng);
    const std::size_t cap = n >= 6 ? max_profiles : std::min<std::size_t>(max_profiles, std::size_t{1} << n);
    std::uniform_int_distribution<std::size_t> k_dist(1, cap);
    const auto k = k_dist(rng);
    std::set<BitRow> seen;
    std::vector<BitRow> rows;
    while (rows.size() < k) {
        auto r = random_row(rng, n);
        if (seen.insert(r).second) rows.push_back(std::move(r));
    }
    std::exponential_distribution<double> w(1.0);
    std::vector<double> weights(k);
    double total = 0.0;
    for (auto& x : weights) total += (x = w(rng) + 1e-3);
    std::vector<CoverageProfile> profiles;
    for (std::size_t i = 0; i < k; ++i) profiles.push_back({rows[i], weights[i] / total});
    return SutProfileModel(make_ids(n), std::move(profiles));
}

/// Specification oracle for the learner: positive = all-ones columns,
/// negative = all-zeros columns (both = everything when there are no rows).
struct ColumnOracle {
    std::vector<std::string> positive;
    std::vector<std::string> negative;
};

inline ColumnOracle column_oracle(const std::vector<std::string>& targets, const std::vector<BitRow>& rows) {
    ColumnOracle o;
    for (std::size_t j = 0; j < targets.size(); ++j) {
        bool all_one = true;
        bool all_zero = true;
        for (const auto& r : rows) {
            all_one = all_one && r[j] == 1;
            all_zero = all_zero && r[j] == 0;
        }
        if (all_one) o.positive.push_back(targets[j]);
        if (all_zero) o.negative.push_back(targets[j]);
    }
    return o;
}

}  // namespace satbound::testing
