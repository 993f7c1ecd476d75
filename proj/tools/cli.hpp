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


#ifndef STABDEC_TOOLS_CLI_HPP
#define STABDEC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stabdec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLimit = 1;
inline constexpr int kExitInput = 2;

inline constexpr int kReportSchemaVersion = 1;

/// Entry point without the program name: run({"analyze", "g.json", "--all"}).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stabdec::cli

#endif
