#pragma once

// Seifert matrices used throughout the tests, typed in independently of
// samples/knots.json.

#include <cstdint>
#include <vector>

namespace corpus {

using Raw = std::vector<std::vector<std::int64_t>>;

inline const Raw kTrefoil{{-1, 1}, {0, -1}};
inline const Raw kFigureEight{{1, 1}, {0, -1}};
inline const Raw k10_99{
    {-1, -1, 0, 0, 0, 0, -1, 0},   //
    {0, -1, 0, 0, 0, 0, 0, 0},     //
    {-1, -1, -1, 0, 0, 0, -1, 0},  //
    {-1, 0, -1, 1, 0, 1, 0, 0},    //
    {-1, -1, -1, 1, 1, 1, -1, 1},  //
    {0, 0, 0, 0, 0, 1, 0, 0},      //
    {0, -1, 0, 0, 0, 0, -1, 0},    //
    {-1, -1, -1, 1, 0, 1, -1, 1},
};
inline const Raw kUnknot{};

struct Named {
  const char* name;
  const Raw* seifert;
};

inline const std::vector<Named> kAll{{"3_1", &kTrefoil}, {"4_1", &kFigureEight}, {"10_99", &k10_99}};

}  // namespace corpus
