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

#ifndef STABDEC_ERROR_HPP
#define STABDEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabdec {

enum class Errc {
    malformed_input,
    inconsistent_ranking,
    agent_out_of_range,
    agent_not_member,
    empty_collection,
    limit_exceeded,
    not_blocking,
    node_not_in_graph,
    not_a_cycle,
    start_not_in_cycle,
    not_a_ring_component,
    trivial_absorbing_set,
    party_is_singleton_pool,
    disjoint_party,
    malformed_party,
    verification_failed,
    malformed_spec,
};

std::string_view to_string(Errc code) noexcept;

/// The single exception type thrown by the library. The code identifies the
/// failed contract; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Default cap on enumerated structures / graph nodes.
inline constexpr std::size_t kDefaultLimit = 1'000'000;

} // namespace stabdec

#endif
