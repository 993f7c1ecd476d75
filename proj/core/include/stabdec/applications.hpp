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


#ifndef STABDEC_APPLICATIONS_HPP
#define STABDEC_APPLICATIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stabdec/decomposition.hpp"

namespace stabdec {

/// partners[i-1] lists agent i's acceptable partners, best first.
struct RoommateSpec {
    int agents = 0;
    std::vector<std::vector<Agent>> partners;
};

/// Like RoommateSpec, but partners must lie on the opposite side.
struct MarriageSpec {
    int agents = 0;
    std::vector<Agent> men;
    std::vector<Agent> women;
    std::vector<std::vector<Agent>> partners;
};

/// Pairs ranked positionally; a pair is permissible when both sides list each
/// other. Throws malformed_spec.
Game roommate_to_game(const RoommateSpec& spec);
Game marriage_to_game(const MarriageSpec& spec);

struct ConvergenceVerdict {
    bool converges = false;
    /// Least structure that reaches no stable structure.
    std::optional<CoalitionStructure> witness;
    bool has_stable = false;
    /// No decomposition has a ring component; only filled for stable games.
    std::optional<bool> decomposition_verdict;
};

/// Every non-stable structure transitively reaches a stable one. For stable
/// games the answer is cross-checked against the decompositions; a mismatch
/// throws verification_failed.
ConvergenceVerdict converges_to_stability(const Game& g, std::size_t limit = kDefaultLimit);
ConvergenceVerdict converges_to_stability(const Game& g, const AbsorbingAnalysis& analysis,
                                          std::size_t limit = kDefaultLimit);

/// Each non-single coalition is rankable with probability `density`; rankings
/// are uniform shuffles with the singleton at a uniform position.
Game random_game(int agents, double density, std::uint64_t seed);

/// Each pair mutually acceptable with probability `density`, random orders.
RoommateSpec random_roommate(int agents, double density, std::uint64_t seed);
/// Men are 1..men, women follow.
MarriageSpec random_marriage(int men, int women, double density, std::uint64_t seed);

} // namespace stabdec

#endif
