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

#ifndef STABDEC_DETAIL_SHORTEST_PATH_HPP
#define STABDEC_DETAIL_SHORTEST_PATH_HPP

#include <algorithm>
#include <deque>
#include <limits>

namespace stabdec {

template <typename Target, typename Allowed>
std::optional<std::vector<std::size_t>> shortest_path(const DominationGraph& graph, std::size_t from, Target target,
                                                      Allowed allowed)
{
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(graph.size(), none);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& e : graph.out_edges(v)) {
            if (!allowed(e.to))
                continue;
            if (target(e.to)) {
                std::vector<std::size_t> path{e.to};
                for (std::size_t u = v;; u = parent[u]) {
                    path.push_back(u);
                    if (u == from)
                        break;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (parent[e.to] != none)
                continue;
            parent[e.to] = v;
            queue.push_back(e.to);
        }
    }
    return std::nullopt;
}

} // namespace stabdec

#endif
