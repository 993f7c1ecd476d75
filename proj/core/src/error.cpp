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

#include "stabdec/error.hpp"

namespace stabdec {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::malformed_input: return "MalformedInput";
    case Errc::inconsistent_ranking: return "InconsistentRanking";
    case Errc::agent_out_of_range: return "AgentIdOutOfRange";
    case Errc::agent_not_member: return "AgentNotMember";
    case Errc::empty_collection: return "EmptyCollection";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::not_blocking: return "NotBlocking";
    case Errc::node_not_in_graph: return "NodeNotInGraph";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::start_not_in_cycle: return "StartNotInCycle";
    case Errc::not_a_ring_component: return "NotARingComponent";
    case Errc::trivial_absorbing_set: return "TrivialAbsorbingSet";
    case Errc::party_is_singleton_pool: return "PartyIsSingletonPool";
    case Errc::disjoint_party: return "DisjointParty";
    case Errc::malformed_party: return "MalformedParty";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::malformed_spec: return "MalformedSpec";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

} // namespace stabdec
