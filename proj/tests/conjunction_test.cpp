#include <algorithm>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "satbound/conjunction.hpp"
#include "support.hpp"

namespace satbound {
namespace {

using Ids = std::vector<std::string>;

TEST(InitialHypothesis, AllLiterals) {
    const auto h = initial_hypothesis({"a", "b"});
    EXPECT_EQ(h.positive(), (Ids{"a", "b"}));
    EXPECT_EQ(h.negative(), (Ids{"a", "b"}));
    EXPECT_EQ(h.literal_count(), 4u);
}

TEST(InitialHypothesis, EmptyUniverse) {
    const auto h = initial_hypothesis({});
    EXPECT_TRUE(h.positive().empty());
    EXPECT_TRUE(h.negative().empty());
    EXPECT_TRUE(evaluate(h, {}));
}

TEST(InitialHypothesis, RejectsDuplicates) { EXPECT_THROW(initial_hypothesis({"a", "a"}), SchemaError); }

TEST(Update, DeletesContradictedLiterals) {
    auto h = update(initial_hypothesis({"a", "b", "c"}), {1, 0, 1});
    EXPECT_EQ(h.positive(), (Ids{"a", "c"}));
    EXPECT_EQ(h.negative(), (Ids{"b"}));
    h = update(h, {1, 1, 1});
    EXPECT_EQ(h.positive(), (Ids{"a", "c"}));
    EXPECT_TRUE(h.negative().empty());
}

TEST(Update, LengthMismatch) {
    EXPECT_THROW(update(initial_hypothesis({"a", "b"}), {1}), DimensionError);
    EXPECT_THROW(evaluate(initial_hypothesis({"a", "b"}), {1, 0, 0}), DimensionError);
}

TEST(Infer, NoEvidenceKeepsEverything) {
    const auto h = infer(HitSpectrum({"a"}));
    EXPECT_EQ(h.positive(), (Ids{"a"}));
    EXPECT_EQ(h.negative(), (Ids{"a"}));
}

TEST(Infer, TwoRows) {
    const auto h = infer(HitSpectrum({"t1", "t2", "t3"}, {{1, 0, 1}, {1, 1, 1}}));
    EXPECT_EQ(h.positive(), (Ids{"t1", "t3"}));
    EXPECT_TRUE(h.negative().empty());
}

TEST(Evaluate, Examples) {
    const auto h = ConjunctionHypothesis::from_literals({"a", "b"}, {"a"}, {"b"});
    EXPECT_TRUE(evaluate(h, {1, 0}));
    EXPECT_FALSE(evaluate(h, {1, 1}));
    EXPECT_FALSE(evaluate(h, {0, 0}));
}

TEST(Evaluate, SometimesTargetsUnconstrained) {
    const auto h = infer(HitSpectrum({"a", "b"}, {{1, 0}, {1, 1}}));
    EXPECT_TRUE(evaluate(h, {1, 0}));
    EXPECT_TRUE(evaluate(h, {1, 1}));
}

TEST(EmpiricalError, Examples) {
    const HitSpectrum s({"t1", "t2", "t3"}, {{1, 0, 1}, {1, 1, 1}});
    EXPECT_EQ(empirical_error(infer(s), s), 0.0);
    EXPECT_EQ(empirical_error(initial_hypothesis({"a"}), HitSpectrum({"a"}, {{1}})), 1.0);
    EXPECT_THROW(empirical_error(initial_hypothesis({"a"}), HitSpectrum({"a"})), EmptySpectrumError);
}

TEST(EmpiricalError, StaleNegativeLiteralCountsOneRow) {
    // 100 rows, exactly one has target "eq" set; a hypothesis still holding !eq
    // misclassifies only that row.
    std::vector<BitRow> rows(99, BitRow{1, 0});
    rows.insert(rows.begin() + 40, BitRow{1, 1});
    const HitSpectrum s({"always", "eq"}, rows);
    const auto stale = ConjunctionHypothesis::from_literals({"always", "eq"}, {"always"}, {"eq"});
    EXPECT_DOUBLE_EQ(empirical_error(stale, s), 0.01);
    EXPECT_EQ(empirical_error(infer(s), s), 0.0);
}

TEST(HypothesisJson, FieldsInUniverseOrder) {
    const auto h = infer(HitSpectrum({"b", "a", "c"}, {{1, 0, 1}}));
    EXPECT_EQ(hypothesis_to_json(h).dump(), R"({"positive":["b","c"],"negative":["a"],"universe":["b","a","c"]})");
    EXPECT_EQ(hypothesis_from_json(hypothesis_to_json(h)), h);
    EXPECT_THROW(hypothesis_from_json(nlohmann::ordered_json::parse(R"({"positive":["z"],"negative":[],"universe":["a"]})")),
                 SchemaError);
}

TEST(LearnerProperties, RandomSpectra) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const auto s = testing::random_spectrum(rng, 16, 12);
        const auto batch = infer(s);

        // Stream fold equals batch, and literal sets only shrink.
        auto h = initial_hypothesis(s.targets());
        for (const auto& row : s.rows()) {
            const auto next = update(h, row);
            for (std::size_t j = 0; j < h.size(); ++j) {
                ASSERT_LE(next.has_positive(j), h.has_positive(j));
                ASSERT_LE(next.has_negative(j), h.has_negative(j));
            }
            h = next;
        }
        ASSERT_EQ(h, batch);

        auto rows = s.rows();
        std::shuffle(rows.begin(), rows.end(), rng);
        ASSERT_EQ(infer(HitSpectrum(s.targets(), rows)), batch);

        if (!s.empty()) {
            ASSERT_EQ(empirical_error(batch, s), 0.0);
            for (std::size_t j = 0; j < batch.size(); ++j)
                ASSERT_FALSE(batch.has_positive(j) && batch.has_negative(j));
            const auto p = partition_targets(s);
            ASSERT_EQ(batch.positive(), p.always);
            ASSERT_EQ(batch.negative(), p.never);
        }
    }
}

TEST(LearnerProperties, ExhaustiveSmallSpectraMatchColumnOracle) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto ids = testing::make_ids(n);
        for (std::size_t m = 0; m <= 3; ++m) {
            const std::size_t bits = n * m;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
                std::vector<BitRow> rows(m, BitRow(n));
                for (std::size_t b = 0; b < bits; ++b) rows[b / n][b % n] = (code >> b) & 1U;
                const auto h = infer(HitSpectrum(ids, rows));
                const auto oracle = testing::column_oracle(ids, rows);
                ASSERT_EQ(h.positive(), oracle.positive);
                ASSERT_EQ(h.negative(), oracle.negative);
                ++checked;
            }
        }
    }
    // sum over n<=4, m<=3 of 2^(n*m)
    EXPECT_EQ(checked, 5058u);
}

}  // namespace
}  // namespace satbound
