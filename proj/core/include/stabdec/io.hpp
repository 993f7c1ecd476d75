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


#ifndef STABDEC_IO_HPP
#define STABDEC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stabdec/applications.hpp"

namespace stabdec {

/**
 * JSON game input. "kind" selects the schema: "game" (default) takes
 * "agents" and "preferences" mapping agent ids to best-first arrays of
 * coalitions; "roommate" takes "partners" mapping ids to partner lists;
 * "marriage" adds "men" and "women".
 */
Game parse_game_json(std::string_view text);

/// "agents: n" then "i: 12 | 123 | 1" per agent; '#' starts a comment.
Game parse_game_text(std::string_view text);

/// JSON if the first non-blank character is '{', text otherwise.
Game parse_game(std::string_view text);
Game load_game_file(const std::filesystem::path& path);

std::string game_to_json(const Game& g);
std::string roommate_to_json(const RoommateSpec& spec);
std::string marriage_to_json(const MarriageSpec& spec);

/// "{1,2} {3}" or compact labels "12 3".
CoalitionStructure parse_structure(const Game& g, std::string_view text);

/// Brace notation "{{12,23,13},{45,46,56}}" with compact labels, or a JSON
/// array of parties, each an array of coalitions given as integer arrays or
/// label strings. Each party is classified with Party::classify.
std::vector<Party> parse_decomposition(const Game& g, std::string_view text);

} // namespace stabdec

#endif
