// spectrum.hpp
//
// Hit spectra: one row per test execution, one column per coverage target,
// cell (i, j) is 1 iff execution i covered target j.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "satbound/errors.hpp"

namespace satbound {

/// One execution's coverage over the target list. Cells hold 0 or 1.
using BitRow = std::vector<std::uint8_t>;

namespace detail {

inline void check_target_ids(const std::vector<std::string>& targets) {
    std::unordered_set<std::string_view> seen;
    for (const auto& id : targets) {
        if (id.empty()) throw SchemaError("target identifiers must be non-empty");
        if (id.find_first_of(",\r\n") != std::string::npos)
            throw SchemaError("target identifier '" + id + "' contains a separator");
        if (id.front() == ' ' || id.front() == '\t' || id.back() == ' ' || id.back() == '\t')
            throw SchemaError("target identifier '" + id + "' has surrounding whitespace");
        if (!seen.insert(id).second) throw SchemaError("duplicate target identifier '" + id + "'");
    }
}

inline void check_row(const BitRow& row, std::size_t width) {
    if (row.size() != width) {
        throw DimensionError("row has " + std::to_string(row.size()) + " cells, expected " +
                             std::to_string(width));
    }
    for (auto v : row) {
        if (v > 1) throw DimensionError("row cell outside {0,1}");
    }
}

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace detail

class HitSpectrum {
public:
    HitSpectrum() = default;

    explicit HitSpectrum(std::vector<std::string> targets, std::vector<BitRow> rows = {})
        : targets_(std::move(targets)), rows_(std::move(rows)) {
        detail::check_target_ids(targets_);
        for (const auto& r : rows_) detail::check_row(r, targets_.size());
    }

    const std::vector<std::string>& targets() const noexcept { return targets_; }
    const std::vector<BitRow>& rows() const noexcept { return rows_; }
    std::size_t num_targets() const noexcept { return targets_.size(); }
    std::size_t num_rows() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    /// The first `k` rows (all of them if k exceeds the row count).
    HitSpectrum prefix(std::size_t k) const {
        HitSpectrum out;
        out.targets_ = targets_;
        out.rows_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(std::min(k, rows_.size())));
        return out;
    }

    friend bool operator==(const HitSpectrum&, const HitSpectrum&) = default;

private:
    std::vector<std::string> targets_;
    std::vector<BitRow> rows_;
};

/// Column classification: covered by every row, by none, or by some.
/// Each list is in target (file) order.
struct CoveragePartition {
    std::vector<std::string> always;
    std::vector<std::string> never;
    std::vector<std::string> sometimes;

    friend bool operator==(const CoveragePartition&, const CoveragePartition&) = default;
};

/// Parses comma-separated text: a header of target ids, then one 0/1 row per line.
/// CRLF is accepted, cells are trimmed, trailing blank lines are ignored.
inline HitSpectrum parse_spectrum(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, 0, "missing header line");

    std::vector<std::string> targets;
    for (auto cell : detail::split_cells(lines.front())) targets.emplace_back(cell);
    if (targets.size() == 1 && targets.front().empty()) throw ParseError(1, 0, "empty header line");
    detail::check_target_ids(targets);

    std::vector<BitRow> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto line_no = i + 1;
        const auto cells = detail::split_cells(lines[i]);
        if (cells.size() != targets.size()) {
            throw ParseError(line_no, 0, "expected " + std::to_string(targets.size()) + " cells, got " +
                                             std::to_string(cells.size()));
        }
        BitRow row(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j] == "1") {
                row[j] = 1;
            } else if (cells[j] != "0") {
                throw ParseError(line_no, j + 1, "cell '" + std::string(cells[j]) + "' is not 0 or 1");
            }
        }
        rows.push_back(std::move(row));
    }
    return HitSpectrum(std::move(targets), std::move(rows));
}

inline HitSpectrum parse_spectrum(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_spectrum(in);
}

inline void write_spectrum(std::ostream& os, const HitSpectrum& spectrum) {
    const auto& t = spectrum.targets();
    for (std::size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
    os << '\n';
    for (const auto& row : spectrum.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ",": "") << (row[j] ? '1' : '0');
        os << '\n';
    }
}

inline std::string write_spectrum(const HitSpectrum& spectrum) {
    std::ostringstream os;
    write_spectrum(os, spectrum);
    return os.str();
}

inline CoveragePartition partition_targets(const HitSpectrum& spectrum) {
    if (spectrum.empty()) throw EmptySpectrumError("coverage partition is undefined for a spectrum with no rows");
    const auto n = spectrum.num_targets();
    std::vector<std::size_t> hits(n, 0);
    for (const auto& row : spectrum.rows())
        for (std::size_t j = 0; j < n; ++j) hits[j] += row[j];

    CoveragePartition p;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& id = spectrum.targets()[j];
        if (hits[j] == spectrum.num_rows()) {
            p.always.push_back(id);
        } else if (hits[j] == 0) {
            p.never.push_back(id);
        } else {
            p.sometimes.push_back(id);
        }
    }
    return p;
}

struct SaturationPoint {
    std::size_t tests_executed = 0;
    std::size_t cumulative_covered = 0;

    friend bool operator==(const SaturationPoint&, const SaturationPoint&) = default;
};

/// Distinct targets covered after each prefix of rows.
inline std::vector<SaturationPoint> saturation_curve(const HitSpectrum& spectrum) {
    std::vector<std::uint8_t> seen(spectrum.num_targets(), 0);
    std::size_t covered = 0;
    std::vector<SaturationPoint> curve;
    curve.reserve(spectrum.num_rows());
    for (std::size_t i = 0; i < spectrum.num_rows(); ++i) {
        const auto& row = spectrum.rows()[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] && !seen[j]) {
                seen[j] = 1;
                ++covered;
            }
        }
        curve.push_back({i + 1, covered});
    }
    return curve;
}

inline void write_saturation_csv(std::ostream& os, const std::vector<SaturationPoint>& curve) {
    os << "tests,covered\n";
    for (const auto& p : curve) os << p.tests_executed << ',' << p.cumulative_covered << '\n';
}

struct MergedSpectrum {
    HitSpectrum spectrum;
    /// Merged id -> member ids (file order), one entry per merged target, in merged order.
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
};

/// Collapses targets whose columns are bit-identical over the observed rows.
/// A group takes the lexicographically smallest member id and sits at the
/// position of its first member.
inline MergedSpectrum merge_identical_columns(const HitSpectrum& spectrum) {
    if (spectrum.empty()) throw EmptySpectrumError("column identity is undefined for a spectrum with no rows");
    const auto n = spectrum.num_targets();
    const auto m = spectrum.num_rows();

    std::map<std::vector<std::uint8_t>, std::size_t> group_of_column;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::uint8_t> column(m);
        for (std::size_t i = 0; i < m; ++i) column[i] = spectrum.rows()[i][j];
        auto [it, inserted] = group_of_column.try_emplace(std::move(column), members.size());
        if (inserted) members.emplace_back();
        members[it->second].push_back(j);
    }

    MergedSpectrum out;
    std::vector<std::string> ids;
    for (const auto& group : members) {
        std::vector<std::string> names;
        for (auto j : group) names.push_back(spectrum.targets()[j]);
        ids.push_back(*std::min_element(names.begin(), names.end()));
        out.groups.emplace_back(ids.back(), std::move(names));
    }
    std::vector<BitRow> rows;
    rows.reserve(m);
    for (const auto& row : spectrum.rows()) {
        BitRow merged(members.size());
        for (std::size_t g = 0; g < members.size(); ++g) merged[g] = row[members[g].front()];
        rows.push_back(std::move(merged));
    }
    out.spectrum = HitSpectrum(std::move(ids), std::move(rows));
    return out;
}

}  // namespace satbound
