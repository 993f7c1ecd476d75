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

#ifndef STABDEC_DECOMPOSITION_HPP
#define STABDEC_DECOMPOSITION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabdec/rings.hpp"

namespace stabdec {

enum class PartyKind { singleton_pool, single_coalition, ring_component };

std::string_view to_string(PartyKind kind) noexcept;

/**
 * A party: a pool of single agents, one permissible coalition, or a ring
 * component. Coalitions are kept in canonical order; for a pool they are the
 * agents' singletons.
 */
class Party {
public:
    /// Throws malformed_party when `agents` is empty.
    static Party pool(Coalition agents);
    /// Throws malformed_party unless c is permissible.
    static Party single(const Game& g, Coalition c);
    /// Throws malformed_party unless the family is a ring component.
    static Party ring(const Game& g, CoalitionCollection family);
    /// Decide the kind from the members: all singletons, exactly one
    /// non-single coalition, or a ring component. Anything else is malformed.
    static Party classify(const Game& g, CoalitionCollection members);

    PartyKind kind() const noexcept { return kind_; }
    bool is_pool() const noexcept { return kind_ == PartyKind::singleton_pool; }
    std::span<const Coalition> coalitions() const noexcept { return coalitions_; }
    /// N(B): every agent in some member coalition.
    Coalition agents() const noexcept { return agents_; }
    bool has(Coalition c) const noexcept;
    /// Ring-component parties only.
    const RingComponent* component() const noexcept { return component_ ? &*component_ : nullptr; }

    /// "{12,23,13}" style, or "{1,2,3}" for a pool. Coalitions appear in the
    /// order they were given to the factory.
    std::string to_string() const;

    bool operator==(const Party& o) const { return kind_ == o.kind_ && coalitions_ == o.coalitions_; }
    /// Orders by least agent.
    bool operator<(const Party& o) const;

private:
    Party(PartyKind kind, CoalitionCollection coalitions);

    PartyKind kind_;
    CoalitionCollection coalitions_;
    CoalitionCollection display_;
    Coalition agents_;
    std::optional<RingComponent> component_;
};

/// A collection of parties sorted by least agent.
class StableDecomposition {
public:
    StableDecomposition() = default;
    explicit StableDecomposition(std::vector<Party> parties);

    std::span<const Party> parties() const noexcept { return parties_; }
    bool has_ring_component() const noexcept;
    const Party* pool() const noexcept;
    std::string to_string() const;

    bool operator==(const StableDecomposition&) const = default;

private:
    std::vector<Party> parties_;
};

/// Coalitions of K outside the party that break it, canonical order.
std::vector<Coalition> breakers(const Game& g, const Party& party);

/// Agents that dissent from c: one per compact set for ring components, a
/// single agent for one-coalition parties. Empty optional when the party does
/// not prevent c. Preconditions as for prevents().
std::optional<std::vector<Agent>> prevention_witness(const Game& g, const Party& party, Coalition c);

/// Party `party` impedes c from forming. Throws party_is_singleton_pool or
/// disjoint_party when the preconditions fail.
bool prevents(const Game& g, const Party& party, Coalition c);

/// Every breaker of `party` is prevented by some party of `parties`.
bool is_protected(const Game& g, const Party& party, std::span<const Party> parties);

struct ProtectionCertificate {
    Coalition breaker;
    std::size_t preventer; ///< index into the decomposition's parties
    std::vector<Agent> witnesses;
};

/// Certificates for one protected party, or nullopt if some breaker is
/// unprevented.
std::optional<std::vector<ProtectionCertificate>> protection_certificates(const Game& g, const Party& party,
                                                                          std::span<const Party> parties);

/// Ring components whose coalitions all lie within `agents`, canonical order.
/// Throws limit_exceeded when more than `limit` candidate families would need
/// to be examined.
std::vector<RingComponent> ring_components_within(const Game& g, Coalition agents, std::size_t limit = kDefaultLimit);

enum class DecompositionFailure {
    none,
    not_a_partition,
    several_pools,
    ring_component_not_maximal,
    unprotected_party,
    pool_supports_protected_party,
};

struct DecompositionCheck {
    DecompositionFailure failure = DecompositionFailure::none;
    std::string message;
    std::optional<std::size_t> party;     ///< offending party index
    std::optional<Coalition> breaker;     ///< unprevented breaker
    std::optional<Party> protected_party; ///< protected party inside the pool
    std::optional<Party> larger_component; ///< ring component strictly containing a party

    bool stable() const noexcept { return failure == DecompositionFailure::none; }
};

/// A ring component over the same agents that strictly contains `rc`, if
/// any. Only coalitions strongly linked to `rc` can join it. Throws
/// limit_exceeded past `limit` candidate families.
std::optional<RingComponent> larger_ring_component(const Game& g, const RingComponent& rc,
                                                   std::size_t limit = kDefaultLimit);

/// Full verification with a diagnostic. Parties must already be well formed
/// (build them with Party::classify).
DecompositionCheck check_stable_decomposition(const Game& g, std::span<const Party> parties,
                                              std::size_t limit = kDefaultLimit);
bool is_stable_decomposition(const Game& g, std::span<const Party> parties, std::size_t limit = kDefaultLimit);

/// The decomposition an absorbing set induces. Throws verification_failed if
/// the result does not verify.
StableDecomposition from_absorbing_set(const Game& g, const AbsorbingSet& set, const DominationGraph& graph,
                                       std::size_t limit = kDefaultLimit);

struct DStructure {
    CoalitionStructure structure;
    /// Compact-collection index chosen for each ring-component party, in
    /// party order.
    std::vector<std::size_t> choice;
};

std::vector<DStructure> d_structures(const Game& g, const StableDecomposition& d);

/// The structure plus every structure that transitively dominates it; throws
/// verification_failed when that set is not absorbing.
AbsorbingSet generated_set(const Game& g, const CoalitionStructure& seed, std::size_t limit = kDefaultLimit);

std::vector<StableDecomposition> all_stable_decompositions(const Game& g, std::size_t limit = kDefaultLimit);
std::vector<StableDecomposition> all_stable_decompositions(const Game& g, const AbsorbingAnalysis& analysis,
                                                           std::size_t limit = kDefaultLimit);

} // namespace stabdec

#endif
