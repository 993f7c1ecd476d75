/*
 * Copyright 2026 The stabdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef STABDEC_TESTS_FIXTURES_HPP
#define STABDEC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "stabdec/io.hpp"

namespace fixtures {

using namespace stabdec;

/// Five-coalition simple ring component {12,23,34,45,15} beside {67}.
inline Game ring_simple()
{
    return parse_game_text(R"(
agents: 7
1: 12 | 123 | 15 | 1
2: 23 | 123 | 12 | 2
3: 34 | 123 | 23 | 3
4: 467 | 45 | 34 | 4
5: 15 | 45 | 5
6: 67 | 467 | 6
7: 467 | 67 | 7
)");
}

/// Non-simple ring component {145,12,23,356,46} and one stable structure.
inline Game ring_nonsimple()
{
    return parse_game_text(R"(
agents: 8
1: 12 | 145 | 1
2: 23 | 12 | 2
3: 356 | 23 | 3
4: 145 | 46 | 4
5: 356 | 145 | 5
6: 678 | 46 | 356 | 6
7: 78 | 678 | 7
8: 678 | 78 | 8
)");
}

/// Two triangles of pairs; no stable structure.
inline Game no_stable()
{
    return parse_game_text(R"(
agents: 6
1: 12 | 13 | 1
2: 23 | 12 | 2
3: 34 | 13 | 23 | 3
4: 45 | 46 | 34 | 4
5: 56 | 45 | 5
6: 46 | 56 | 6
)");
}

inline RoommateSpec roommate10_spec()
{
    return RoommateSpec{10,
                        {{2, 3, 4, 5, 6, 7, 8, 9},
                         {3, 1, 4, 5, 6, 7, 8, 9},
                         {1, 2, 4, 5, 6, 7, 8, 9},
                         {7, 8, 9, 5, 6, 1, 2, 3},
                         {8, 9, 7, 4, 6},
                         {9, 7, 8, 4},
                         {5, 6, 1, 4, 9, 8},
                         {6, 4, 5, 7, 9},
                         {4, 5, 6, 7, 8},
                         {}}};
}

inline Game roommate10() { return roommate_to_game(roommate10_spec()); }

/// Men 1..3, women 4..6.
inline MarriageSpec marriage3x3_spec()
{
    return MarriageSpec{6, {1, 2, 3}, {4, 5, 6}, {{4, 6}, {4, 5}, {6, 5, 4}, {3, 1, 2}, {2, 3}, {1, 3}}};
}

inline Game marriage3x3() { return marriage_to_game(marriage3x3_spec()); }

inline Coalition C(std::string_view label) { return Coalition::parse_label(label); }

inline CoalitionCollection Cs(std::string_view labels)
{
    CoalitionCollection out;
    std::size_t pos = 0;
    while (pos < labels.size()) {
        auto end = labels.find(' ', pos);
        if (end == std::string_view::npos)
            end = labels.size();
        if (end > pos)
            out.push_back(Coalition::parse_label(labels.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

/// Structure from compact labels, e.g. S(g, "12 34 5 67").
inline CoalitionStructure S(const Game& g, std::string_view labels) { return parse_structure(g, labels); }

inline std::vector<CoalitionStructure> Ss(const Game& g, std::initializer_list<std::string_view> items)
{
    std::vector<CoalitionStructure> out;
    for (auto s : items)
        out.push_back(S(g, s));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string data_file(std::string_view name)
{
    return std::string(STABDEC_TEST_DATA_DIR) + "/games/" + std::string(name);
}

} // namespace fixtures

#endif
