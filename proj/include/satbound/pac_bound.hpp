// pac_bound.hpp
//
// Sample-complexity arithmetic for finite hypothesis spaces. For conjunctions
// over n coverage targets |H_n| = 3^n, so the number of i.i.d. tests needed to
// reach generalization error <= epsilon with probability >= 1 - delta is
//
//     m >= (1/epsilon) * (n * ln 3 + ln(1/delta)).
//
// |H_n| is handled in log space throughout; 3^n overflows 64 bits past n = 40.
#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "satbound/errors.hpp"
#include "satbound/format.hpp"

namespace satbound {

/// Accuracy/confidence pair. Both values lie in the open interval (0,1).
class PacParams {
public:
    PacParams(double epsilon, double delta) : epsilon_(epsilon), delta_(delta) {
        check("epsilon", epsilon);
        check("delta", delta);
    }

    double epsilon() const noexcept { return epsilon_; }
    double delta() const noexcept { return delta_; }

    friend bool operator==(const PacParams&, const PacParams&) = default;

private:
    static void check(const char* name, double v) {
        // NaN fails both comparisons.
        if (!(v > 0.0 && v < 1.0)) {
            throw ParamError(std::string(name) + " must lie in (0,1), got " + fixed(v, 4));
        }
    }

    double epsilon_;
    double delta_;
};

struct SampleBound {
    double raw = 0.0;          // fractional right-hand side of the bound
    std::uint64_t tests = 0;   // ceil(raw)
    std::uint64_t n_targets = 0;
    PacParams params{0.5, 0.5};

    friend bool operator==(const SampleBound&, const SampleBound&) = default;
};

/// ln |H_n| = n ln 3.
inline double log_hypothesis_space(std::uint64_t n_targets) noexcept {
    return static_cast<double>(n_targets) * std::log(3.0);
}

inline SampleBound sample_complexity(std::uint64_t n_targets, const PacParams& params) {
    const double raw =
        (log_hypothesis_space(n_targets) + std::log(1.0 / params.delta())) / params.epsilon();
    return SampleBound{raw, static_cast<std::uint64_t>(std::ceil(raw)), n_targets, params};
}

/// Expected draws to collect all k equiprobable coupons, k * H_k.
///
/// Only a comparison baseline: it assumes k disjoint, equally likely
/// objectives, so for real coverage targets it is a lower bound at best.
inline double coupon_collector_expectation(std::uint64_t k_objectives) {
    if (k_objectives == 0) throw ParamError("coupon collector needs at least one objective");
    double harmonic = 0.0;
    // Summing small terms first keeps the rounding error down for large k.
    for (std::uint64_t i = k_objectives; i >= 1; --i) harmonic += 1.0 / static_cast<double>(i);
    return static_cast<double>(k_objectives) * harmonic;
}

struct SweepRecord {
    std::uint64_t n = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    double raw = 0.0;
    std::uint64_t tests = 0;
};

/// Cartesian product of the three lists, n outermost and delta innermost.
inline std::vector<SweepRecord> sweep_bounds(const std::vector<std::uint64_t>& n_list,
                                             const std::vector<double>& epsilon_list,
                                             const std::vector<double>& delta_list) {
    std::vector<SweepRecord> out;
    out.reserve(n_list.size() * epsilon_list.size() * delta_list.size());
    for (auto n : n_list) {
        for (double eps : epsilon_list) {
            for (double del : delta_list) {
                try {
                    const auto b = sample_complexity(n, PacParams(eps, del));
                    out.push_back({n, eps, del, b.raw, b.tests});
                } catch (const ParamError& e) {
                    throw ParamError("sweep entry (n=" + std::to_string(n) + ", epsilon=" +
                                     fixed(eps, 4) + ", delta=" + fixed(del, 4) + "): " + e.what());
                }
            }
        }
    }
    return out;
}

inline constexpr const char* kSweepHeader = "n,epsilon,delta,raw_bound,tests";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << kSweepHeader << '\n';
    for (const auto& r : records) {
        os << r.n << ',' << fixed(r.epsilon, 4) << ',' << fixed(r.delta, 4) << ','
           << fixed(r.raw, 4) << ',' << r.tests << '\n';
    }
}

}  // namespace satbound
