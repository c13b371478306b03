// triangle.hpp
//
// The classic triangle classifier as a synthetic SUT. Line numbers refer to
// this listing:
//
//   1  int tri_type(int a, int b, int c) {
//   2      int type = NOT_A_TRIANGLE;
//   3      if (a > b)
//   4          int t = a; a = b; b = t;
//   5      if (a > c)
//   6          int t = a; a = c; c = t;
//   7      if (b > c)
//   8          int t = b; b = c; c = t;
//   9      if (a + b > c)
//  10          type = checkType(a,b,c);
//  11      return type;
//  12  }
//  13
//  14  int checkType(int a, int b, int c) {
//  15      int type;
//  16      if (a + b <= c)
//  17          type = NOT_A_TRIANGLE;
//  18      else {
//  19          type = SCALENE;
//  20          if (a == b && b == c)
//  21              type = EQUILATERAL;
//  22          else if (a == b || b == c)
//  23              type = ISOSCELES;
//  24      }
//  25      return type;
//  26  }
//
// Line 17 is unreachable: checkType only runs once a + b > c holds.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satbound/spectrum.hpp"
#include "satbound/synthetic_sut.hpp"

namespace satbound::triangle {

inline constexpr int kMinSide = 1;
inline constexpr int kMaxSide = 10;

/// Executable lines of the listing, in order.
inline constexpr std::array<int, 22> kStatementLines = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                                        14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 25};

/// Blocks of lines that always execute together: (first line, last line).
inline constexpr std::array<std::pair<int, int>, 16> kBlocks = {{{1, 3},
                                                                 {4, 4},
                                                                 {5, 5},
                                                                 {6, 6},
                                                                 {7, 7},
                                                                 {8, 8},
                                                                 {9, 9},
                                                                 {10, 10},
                                                                 {11, 11},
                                                                 {14, 16},
                                                                 {17, 17},
                                                                 {18, 20},
                                                                 {21, 21},
                                                                 {22, 22},
                                                                 {23, 23},
                                                                 {25, 25}}};

inline std::string block_id(std::pair<int, int> block) {
    return block.first == block.second
               ? "x" + std::to_string(block.first)
               : "x" + std::to_string(block.first) + "-" + std::to_string(block.second);
}

inline std::vector<std::string> block_ids() {
    std::vector<std::string> ids;
    for (auto b : kBlocks) ids.push_back(block_id(b));
    return ids;
}

inline std::vector<std::string> statement_ids() {
    std::vector<std::string> ids;
    for (int line : kStatementLines) ids.push_back("L" + std::to_string(line));
    return ids;
}

/// Executed-line flags for one call, indexed by line number (0 and 26 unused).
using LineTrace = std::array<bool, 27>;

inline LineTrace trace(int a, int b, int c) {
    LineTrace hit{};
    hit[1] = hit[2] = hit[3] = true;
    if (a > b) {
        hit[4] = true;
        std::swap(a, b);
    }
    hit[5] = true;
    if (a > c) {
        hit[6] = true;
        std::swap(a, c);
    }
    hit[7] = true;
    if (b > c) {
        hit[8] = true;
        std::swap(b, c);
    }
    hit[9] = true;
    if (a + b > c) {
        hit[10] = true;
        hit[14] = hit[15] = hit[16] = true;
        if (a + b <= c) {
            hit[17] = true;
        } else {
            hit[18] = hit[19] = hit[20] = true;
            if (a == b && b == c) {
                hit[21] = true;
            } else {
                hit[22] = true;
                if (a == b || b == c) hit[23] = true;
            }
        }
        hit[25] = true;
    }
    hit[11] = true;
    return hit;
}

inline BitRow block_row(int a, int b, int c) {
    const auto hit = trace(a, b, c);
    BitRow row;
    for (auto [first, last] : kBlocks) row.push_back(hit[static_cast<std::size_t>(first)] ? 1 : 0);
    return row;
}

inline BitRow statement_row(int a, int b, int c) {
    const auto hit = trace(a, b, c);
    BitRow row;
    for (int line : kStatementLines) row.push_back(hit[static_cast<std::size_t>(line)] ? 1 : 0);
    return row;
}

/// Every input in [1,10]^3, a outermost, at statement granularity.
inline HitSpectrum enumerate_statements() {
    std::vector<BitRow> rows;
    for (int a = kMinSide; a <= kMaxSide; ++a)
        for (int b = kMinSide; b <= kMaxSide; ++b)
            for (int c = kMinSide; c <= kMaxSide; ++c) rows.push_back(statement_row(a, b, c));
    return HitSpectrum(statement_ids(), std::move(rows));
}

/// Uniform inputs over [1,10]^3 collapsed to block-level profiles, in order of first occurrence.
inline SutProfileModel build_triangle_model() {
    std::vector<BitRow> order;
    std::map<BitRow, std::size_t> counts;
    for (int a = kMinSide; a <= kMaxSide; ++a) {
        for (int b = kMinSide; b <= kMaxSide; ++b) {
            for (int c = kMinSide; c <= kMaxSide; ++c) {
                auto row = block_row(a, b, c);
                if (counts[row]++ == 0) order.push_back(std::move(row));
            }
        }
    }
    constexpr int kSide = kMaxSide - kMinSide + 1;
    constexpr double kTotal = kSide * kSide * kSide;
    std::vector<CoverageProfile> profiles;
    for (auto& row : order) {
        const double p = static_cast<double>(counts[row]) / kTotal;
        profiles.push_back({std::move(row), p});
    }
    return SutProfileModel(block_ids(), std::move(profiles));
}

}  // namespace satbound::triangle
