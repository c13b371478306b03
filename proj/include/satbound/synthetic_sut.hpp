// synthetic_sut.hpp
//
// A system under test reduced to what the learner sees: a categorical
// distribution over coverage profiles (distinct hit rows). Because the
// distribution is explicit, ground truth and generalization error are exact.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satbound/conjunction.hpp"
#include "satbound/errors.hpp"
#include "satbound/format.hpp"
#include "satbound/spectrum.hpp"

namespace satbound {

/// Portable generator for every sampled quantity: the standard mt19937_64,
/// whose output sequence is fixed by the C++ standard for a given seed.
using Rng = std::mt19937_64;

/// Uniform double in [0,1) from the top 53 bits of one draw. Spelled out
/// rather than std::uniform_real_distribution, whose output is not portable.
inline double unit_interval(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Seed of the per-trial stream.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
    return base_seed ^ index;
}

struct CoverageProfile {
    BitRow hits;
    double probability = 0.0;

    friend bool operator==(const CoverageProfile&, const CoverageProfile&) = default;
};

inline constexpr double kProbabilityTolerance = 1e-9;

class SutProfileModel {
public:
    SutProfileModel(std::vector<std::string> targets, std::vector<CoverageProfile> profiles)
        : targets_(std::move(targets)), profiles_(std::move(profiles)) {
        validate();
        double acc = 0.0;
        cumulative_.reserve(profiles_.size());
        for (const auto& p : profiles_) cumulative_.push_back(acc += p.probability);
    }

    const std::vector<std::string>& targets() const noexcept { return targets_; }
    const std::vector<CoverageProfile>& profiles() const noexcept { return profiles_; }
    std::size_t num_targets() const noexcept { return targets_.size(); }

    /// Index of one profile drawn by inverting the cumulative distribution in profile order.
    std::size_t draw(Rng& rng) const {
        const double u = unit_interval(rng) * cumulative_.back();
        for (std::size_t k = 0; k < cumulative_.size(); ++k)
            if (u < cumulative_[k]) return k;
        return cumulative_.size() - 1;
    }

    friend bool operator==(const SutProfileModel& a, const SutProfileModel& b) {
        return a.targets_ == b.targets_ && a.profiles_ == b.profiles_;
    }

private:
    void validate() const {
        try {
            detail::check_target_ids(targets_);
        } catch (const SchemaError& e) {
            throw ModelError(e.what());
        }
        if (profiles_.empty()) throw ModelError("model needs at least one profile");
        std::set<BitRow> distinct;
        double sum = 0.0;
        for (std::size_t k = 0; k < profiles_.size(); ++k) {
            const auto& p = profiles_[k];
            if (p.hits.size() != targets_.size()) {
                throw ModelError("profile " + std::to_string(k) + " has " + std::to_string(p.hits.size()) +
                                 " hits, expected " + std::to_string(targets_.size()));
            }
            for (auto v : p.hits)
                if (v > 1) throw ModelError("profile " + std::to_string(k) + " has a hit outside {0,1}");
            if (!(p.probability > 0.0 && p.probability <= 1.0)) {
                throw ModelError("profile " + std::to_string(k) + " probability " + fixed(p.probability, 6) +
                                 " outside (0,1]");
            }
            if (!distinct.insert(p.hits).second) {
                throw ModelError("profile " + std::to_string(k) + " duplicates an earlier profile");
            }
            sum += p.probability;
        }
        if (std::abs(sum - 1.0) > kProbabilityTolerance) {
            throw ModelError("profile probabilities sum to " + fixed(sum, 12) + ", expected 1");
        }
    }

    std::vector<std::string> targets_;
    std::vector<CoverageProfile> profiles_;
    std::vector<double> cumulative_;
};

inline SutProfileModel model_from_json(const nlohmann::ordered_json& doc) {
    std::vector<std::string> targets;
    std::vector<CoverageProfile> profiles;
    try {
        targets = doc.at("targets").get<std::vector<std::string>>();
        for (const auto& p : doc.at("profiles")) {
            CoverageProfile profile;
            for (const auto& v : p.at("hits")) {
                const int bit = v.get<int>();
                if (bit != 0 && bit != 1) throw ModelError("profile hit values must be 0 or 1");
                profile.hits.push_back(static_cast<std::uint8_t>(bit));
            }
            profile.probability = p.at("prob").get<double>();
            profiles.push_back(std::move(profile));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("malformed model document: ") + e.what());
    }
    return SutProfileModel(std::move(targets), std::move(profiles));
}

inline SutProfileModel load_model(std::istream& in) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model is not valid JSON: ") + e.what());
    }
    return model_from_json(doc);
}

inline SutProfileModel load_model(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model is not valid JSON: ") + e.what());
    }
    return model_from_json(doc);
}

inline nlohmann::ordered_json model_to_json(const SutProfileModel& model) {
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    for (const auto& p : model.profiles()) {
        std::vector<int> hits(p.hits.begin(), p.hits.end());
        profiles.push_back({{"hits", hits}, {"prob", p.probability}});
    }
    return {{"targets", model.targets()}, {"profiles", profiles}};
}

struct GroundTruth {
    ConjunctionHypothesis conjunction;
    CoveragePartition relevant;
};

/// Target concept over the full profile support; probabilities do not matter.
inline GroundTruth ground_truth(const SutProfileModel& model) {
    std::vector<BitRow> rows;
    for (const auto& p : model.profiles()) rows.push_back(p.hits);
    const HitSpectrum support(model.targets(), std::move(rows));
    return {infer(support), partition_targets(support)};
}

/// Appends `m` i.i.d. draws from `rng` to `rows`.
inline void draw_rows(const SutProfileModel& model, std::size_t m, Rng& rng, std::vector<BitRow>& rows) {
    rows.reserve(rows.size() + m);
    for (std::size_t i = 0; i < m; ++i) rows.push_back(model.profiles()[model.draw(rng)].hits);
}

inline HitSpectrum sample_executions(const SutProfileModel& model, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BitRow> rows;
    draw_rows(model, m, rng, rows);
    return HitSpectrum(model.targets(), std::move(rows));
}

/// Exact probability mass of the profiles the hypothesis rejects.
inline double true_generalization_error(const ConjunctionHypothesis& h, const SutProfileModel& model) {
    if (h.universe() != model.targets()) throw DimensionError("hypothesis universe differs from model targets");
    double err = 0.0;
    for (const auto& p : model.profiles())
        if (!h.accepts(p.hits)) err += p.probability;
    return err;
}

}  // namespace satbound
