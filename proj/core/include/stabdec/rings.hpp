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

#ifndef STABDEC_RINGS_HPP
#define STABDEC_RINGS_HPP

#include <span>
#include <vector>

#include "stabdec/absorbing.hpp"

namespace stabdec {

/// Cyclically ordered coalitions, each unanimously preferred to its
/// predecessor. A ring is proper when consecutive coalitions intersect.
struct Ring {
    std::vector<Coalition> coalitions;
    bool proper = false;
};

/// Same sequence up to rotation.
bool cyclically_equal(std::span<const Coalition> a, std::span<const Coalition> b);

/// J >= 3 and every coalition is unanimously preferred to its predecessor
/// (vacuous links between disjoint coalitions allowed).
bool is_ring(const Game& g, std::span<const Coalition> sequence);
/// is_ring with non-empty consecutive intersections.
bool is_proper_ring(const Game& g, std::span<const Coalition> sequence);

/// Coalition formed at each step of a cycle: entry j is the coalition via
/// which cycle[j+1] dominates cycle[j] (indices modulo the length). Throws
/// not_a_cycle.
std::vector<Coalition> cycle_vias(const Game& g, std::span<const CoalitionStructure> cycle);

/**
 * Ring extraction from the coalitions formed along a cycle: starting at
 * `start`, repeatedly move to the nearest later (cyclically) coalition that
 * meets the current one; stop at the first repeated coalition and return the
 * segment after its first occurrence. Throws start_not_in_cycle.
 */
Ring extract_ring(std::span<const Coalition> vias, Coalition start);
Ring extract_ring(const Game& g, std::span<const CoalitionStructure> cycle, Coalition start);

/// |B| >= 3 non-single members, pairwise transitive preference within B, and
/// every maximal set of B broken by a member of B outside it.
bool is_ring_component(const Game& g, std::span<const Coalition> collection);

/**
 * A validated ring component with its maximal sets, simplicity, and compact
 * collection precomputed.
 */
class RingComponent {
public:
    /// Throws not_a_ring_component.
    RingComponent(const Game& g, CoalitionCollection coalitions);

    std::span<const Coalition> coalitions() const noexcept { return coalitions_; }
    Coalition agents() const noexcept { return agents_of(coalitions_); }
    bool simple() const noexcept { return simple_; }
    std::span<const CoalitionCollection> maximal() const noexcept { return maximal_; }
    /// Maximal sets when simple, singleton families otherwise.
    std::span<const CoalitionCollection> compact() const noexcept { return compact_; }

    bool operator==(const RingComponent& o) const { return coalitions_ == o.coalitions_; }

private:
    CoalitionCollection coalitions_;
    std::vector<CoalitionCollection> maximal_;
    std::vector<CoalitionCollection> compact_;
    bool simple_ = false;
};

/// Every breaker of every maximal set meets exactly one of its members.
/// Throws not_a_ring_component.
bool classify_simple(const Game& g, std::span<const Coalition> collection);

std::vector<CoalitionCollection> compact_collection(const Game& g, const RingComponent& rc);

/**
 * Ring components living in a non-trivial absorbing set: a cycle through each
 * internal edge (shortest return path), a ring extracted from each cycle,
 * rings sharing a coalition merged, and every merged family re-verified.
 * Families failing the re-verification are left out. Throws
 * trivial_absorbing_set.
 */
std::vector<RingComponent> ring_components_of(const Game& g, const AbsorbingSet& set, const DominationGraph& graph);

/// The rings extracted (before merging), deduplicated up to rotation.
std::vector<Ring> rings_of(const Game& g, const AbsorbingSet& set, const DominationGraph& graph);

} // namespace stabdec

#endif
