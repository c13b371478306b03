// conjunction.hpp
//
// Elimination learner for Boolean conjunctions over coverage targets. The
// hypothesis starts with every literal x_j and !x_j; each observed execution
// deletes the literals it contradicts. Every execution drawn from the test
// generator is a positive example, so nothing is ever added back.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satbound/errors.hpp"
#include "satbound/spectrum.hpp"

namespace satbound {

class ConjunctionHypothesis {
public:
    ConjunctionHypothesis() = default;

    /// Zero-evidence hypothesis: both literals retained for every target.
    static ConjunctionHypothesis initial(std::vector<std::string> targets) {
        detail::check_target_ids(targets);
        ConjunctionHypothesis h;
        h.positive_.assign(targets.size(), 1);
        h.negative_.assign(targets.size(), 1);
        h.universe_ = std::move(targets);
        return h;
    }

    /// Builds a hypothesis from explicit literal sets. Ids outside the universe are rejected.
    static ConjunctionHypothesis from_literals(std::vector<std::string> universe,
                                               const std::vector<std::string>& positive,
                                               const std::vector<std::string>& negative) {
        detail::check_target_ids(universe);
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t j = 0; j < universe.size(); ++j) index.emplace(universe[j], j);
        ConjunctionHypothesis h;
        h.positive_.assign(universe.size(), 0);
        h.negative_.assign(universe.size(), 0);
        auto mark = [&](const std::vector<std::string>& ids, BitRow& mask) {
            for (const auto& id : ids) {
                auto it = index.find(id);
                if (it == index.end()) throw SchemaError("literal '" + id + "' is not in the universe");
                mask[it->second] = 1;
            }
        };
        mark(positive, h.positive_);
        mark(negative, h.negative_);
        h.universe_ = std::move(universe);
        return h;
    }

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }

    /// Per-target retention masks, aligned with universe().
    const BitRow& positive_mask() const noexcept { return positive_; }
    const BitRow& negative_mask() const noexcept { return negative_; }

    bool has_positive(std::size_t j) const { return positive_.at(j) != 0; }
    bool has_negative(std::size_t j) const { return negative_.at(j) != 0; }

    std::vector<std::string> positive() const { return select(positive_); }
    std::vector<std::string> negative() const { return select(negative_); }

    std::size_t literal_count() const noexcept {
        std::size_t c = 0;
        for (std::size_t j = 0; j < universe_.size(); ++j) c += positive_[j] + negative_[j];
        return c;
    }

    /// Deletes every literal the row contradicts, in place.
    void absorb(const BitRow& row) {
        check_width(row);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j]) {
                negative_[j] = 0;
            } else {
                positive_[j] = 0;
            }
        }
    }

    /// True iff the row satisfies every retained literal.
    bool accepts(const BitRow& row) const {
        check_width(row);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] ? negative_[j] : positive_[j]) return false;
        }
        return true;
    }

    friend bool operator==(const ConjunctionHypothesis&, const ConjunctionHypothesis&) = default;

private:
    void check_width(const BitRow& row) const {
        if (row.size() != universe_.size()) {
            throw DimensionError("row has " + std::to_string(row.size()) + " cells, hypothesis has " +
                                 std::to_string(universe_.size()) + " targets");
        }
    }

    std::vector<std::string> select(const BitRow& mask) const {
        std::vector<std::string> ids;
        for (std::size_t j = 0; j < universe_.size(); ++j)
            if (mask[j]) ids.push_back(universe_[j]);
        return ids;
    }

    std::vector<std::string> universe_;
    BitRow positive_;
    BitRow negative_;
};

inline ConjunctionHypothesis initial_hypothesis(std::vector<std::string> targets) {
    return ConjunctionHypothesis::initial(std::move(targets));
}

inline ConjunctionHypothesis update(ConjunctionHypothesis h, const BitRow& row) {
    h.absorb(row);
    return h;
}

inline ConjunctionHypothesis infer(const HitSpectrum& spectrum) {
    auto h = ConjunctionHypothesis::initial(spectrum.targets());
    for (const auto& row : spectrum.rows()) h.absorb(row);
    return h;
}

inline bool evaluate(const ConjunctionHypothesis& h, const BitRow& row) { return h.accepts(row); }

/// Share of rows the hypothesis rejects.
inline double empirical_error(const ConjunctionHypothesis& h, const HitSpectrum& spectrum) {
    if (spectrum.empty()) throw EmptySpectrumError("empirical error is undefined for a spectrum with no rows");
    std::size_t wrong = 0;
    for (const auto& row : spectrum.rows()) wrong += h.accepts(row) ? 0 : 1;
    return static_cast<double>(wrong) / static_cast<double>(spectrum.num_rows());
}

inline nlohmann::ordered_json hypothesis_to_json(const ConjunctionHypothesis& h) {
    return nlohmann::ordered_json{{"positive", h.positive()},
                                  {"negative", h.negative()},
                                  {"universe", h.universe()}};
}

inline ConjunctionHypothesis hypothesis_from_json(const nlohmann::ordered_json& doc) {
    try {
        return ConjunctionHypothesis::from_literals(doc.at("universe").get<std::vector<std::string>>(),
                                                    doc.at("positive").get<std::vector<std::string>>(),
                                                    doc.at("negative").get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed hypothesis document: ") + e.what());
    }
}

}  // namespace satbound
