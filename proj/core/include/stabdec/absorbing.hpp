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

#ifndef STABDEC_ABSORBING_HPP
#define STABDEC_ABSORBING_HPP

#include <vector>

#include "stabdec/dynamics.hpp"

namespace stabdec {

/// A sink strongly connected component of the domination graph over all
/// coalition structures. Members are sorted canonically.
struct AbsorbingSet {
    std::vector<CoalitionStructure> members;

    bool trivial() const noexcept { return members.size() == 1; }
    std::size_t size() const noexcept { return members.size(); }
    bool contains(const CoalitionStructure& pi) const;

    bool operator==(const AbsorbingSet&) const = default;
};

/// Everything computed while looking for absorbing sets, kept so later stages
/// (rings, decompositions) can reuse the graph.
struct AbsorbingAnalysis {
    DominationGraph graph;
    SccDecomposition scc;
    std::vector<AbsorbingSet> sets;
    /// sets[k] is the SCC with index set_components[k].
    std::vector<std::size_t> set_components;
};

/// Grow the graph over every coalition structure, condense, keep the sinks.
/// Sets are ordered by their least member.
AbsorbingAnalysis analyze_absorbing(const Game& g, std::size_t limit = kDefaultLimit);

std::vector<AbsorbingSet> absorbing_sets(const Game& g, std::size_t limit = kDefaultLimit);

struct Absorption {
    AbsorbingSet set;
    /// Structures visited after the start, ending inside the set; empty when
    /// the start already belongs to it.
    std::vector<CoalitionStructure> path;
    std::vector<Coalition> vias;
};

/// Some absorbing set reachable from pi, with a shortest witness path.
Absorption reaches_absorbing(const Game& g, const CoalitionStructure& pi, std::size_t limit = kDefaultLimit);

} // namespace stabdec

#endif
