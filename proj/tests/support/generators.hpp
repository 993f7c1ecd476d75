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


#ifndef STABDEC_TESTS_GENERATORS_HPP
#define STABDEC_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stabdec/applications.hpp"

namespace gen {

using namespace stabdec;

/// Every included coalition is ranked above the singleton, so it is
/// permissible; these games have rings far more often than random_game.
inline Game ring_rich(int n, double density, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<Coalition>> rankings(n);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const Coalition c(m);
        if (c.is_singleton() || !keep(rng))
            continue;
        for (Agent i : c.members())
            rankings[i - 1].push_back(c);
    }
    for (Agent i = 1; i <= n; ++i) {
        std::shuffle(rankings[i - 1].begin(), rankings[i - 1].end(), rng);
        rankings[i - 1].push_back(Coalition::singleton(i));
    }
    return Game(n, std::move(rankings));
}

/// Only pairs, all acceptable: random roommate markets with many cycles.
inline Game pairs_only(int n, std::uint64_t seed)
{
    return roommate_to_game(random_roommate(n, 1.0, seed));
}

struct Sample {
    std::string name;
    Game game;
};

/// Mixed corpus: library random games, ring-rich games, roommate and
/// marriage markets, and complete roommate markets, the richest source of
/// ring components. Deterministic in `base_seed`.
inline std::vector<Sample> corpus(int count, int max_agents, std::uint64_t base_seed)
{
    std::vector<Sample> out;
    const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.9};
    for (int k = 0; k < count; ++k) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
        // Kind cycles fastest, then size, then density.
        const int round = k / 5;
        const int n = 2 + round % (max_agents - 1);
        const double d = densities[(round / (max_agents - 1)) % 5];
        std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " seed=" + std::to_string(seed);
        switch (k % 5) {
        case 0:
            out.push_back({"random " + tag, random_game(n, d, seed)});
            break;
        case 1:
            out.push_back({"ring-rich " + tag, ring_rich(n, d, seed)});
            break;
        case 2:
            out.push_back({"roommate " + tag, roommate_to_game(random_roommate(n, d, seed))});
            break;
        case 3:
            out.push_back({"marriage " + tag, marriage_to_game(random_marriage(n / 2, n - n / 2, d, seed))});
            break;
        default:
            out.push_back({"complete roommate n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                           pairs_only(n, seed)});
            break;
        }
    }
    return out;
}

} // namespace gen

#endif
