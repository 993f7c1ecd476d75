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

#include "stabdec/applications.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace stabdec {

namespace {

void check_partners(int agents, const std::vector<std::vector<Agent>>& partners)
{
    if (agents < 1 || agents > kMaxAgents)
        throw Error(Errc::malformed_spec, "agent count " + std::to_string(agents) + " outside 1.." +
                                              std::to_string(kMaxAgents));
    if (partners.size() != static_cast<std::size_t>(agents))
        throw Error(Errc::malformed_spec, "expected " + std::to_string(agents) + " partner lists, got " +
                                              std::to_string(partners.size()));
    for (Agent i = 1; i <= agents; ++i) {
        Coalition seen;
        for (Agent j : partners[i - 1]) {
            if (j < 1 || j > agents)
                throw Error(Errc::malformed_spec, "agent " + std::to_string(i) + " lists unknown partner " +
                                                      std::to_string(j));
            if (j == i)
                throw Error(Errc::malformed_spec, "agent " + std::to_string(i) + " lists itself");
            if (seen.contains(j))
                throw Error(Errc::malformed_spec, "agent " + std::to_string(i) + " lists " + std::to_string(j) +
                                                      " twice");
            seen |= Coalition::singleton(j);
        }
    }
}

Game pairs_game(int agents, const std::vector<std::vector<Agent>>& partners)
{
    std::vector<std::vector<Coalition>> rankings(agents);
    for (Agent i = 1; i <= agents; ++i) {
        for (Agent j : partners[i - 1])
            rankings[i - 1].push_back(Coalition{i, j});
        rankings[i - 1].push_back(Coalition::singleton(i));
    }
    return Game(agents, std::move(rankings));
}

} // namespace

Game roommate_to_game(const RoommateSpec& spec)
{
    check_partners(spec.agents, spec.partners);
    return pairs_game(spec.agents, spec.partners);
}

Game marriage_to_game(const MarriageSpec& spec)
{
    check_partners(spec.agents, spec.partners);
    Coalition men;
    Coalition women;
    for (Agent m : spec.men) {
        if (m < 1 || m > spec.agents || men.contains(m))
            throw Error(Errc::malformed_spec, "bad man " + std::to_string(m));
        men |= Coalition::singleton(m);
    }
    for (Agent w : spec.women) {
        if (w < 1 || w > spec.agents || women.contains(w) || men.contains(w))
            throw Error(Errc::malformed_spec, "bad woman " + std::to_string(w));
        women |= Coalition::singleton(w);
    }
    if ((men | women) != Coalition::all(spec.agents))
        throw Error(Errc::malformed_spec, "men and women do not cover every agent");
    for (Agent i = 1; i <= spec.agents; ++i) {
        const Coalition other = men.contains(i) ? women : men;
        for (Agent j : spec.partners[i - 1])
            if (!other.contains(j))
                throw Error(Errc::malformed_spec, "agent " + std::to_string(i) + " lists same-side agent " +
                                                      std::to_string(j));
    }
    return pairs_game(spec.agents, spec.partners);
}

ConvergenceVerdict converges_to_stability(const Game& g, const AbsorbingAnalysis& analysis, std::size_t limit)
{
    const DominationGraph& graph = analysis.graph;
    const std::size_t n = graph.size();
    std::vector<std::vector<std::size_t>> incoming(n);
    std::vector<std::size_t> queue;
    std::vector<bool> reaches(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& e : graph.out_edges(v))
            incoming[e.to].push_back(v);
        if (graph.out_edges(v).empty()) {
            reaches[v] = true;
            queue.push_back(v);
        }
    }
    ConvergenceVerdict out;
    out.has_stable = !queue.empty();
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t u : incoming[queue[head]])
            if (!reaches[u]) {
                reaches[u] = true;
                queue.push_back(u);
            }
    for (std::size_t v = 0; v < n; ++v)
        if (!reaches[v] && (!out.witness || graph.node(v) < *out.witness))
            out.witness = graph.node(v);
    out.converges = !out.witness;

    if (out.has_stable) {
        bool any_ring = false;
        for (const auto& d : all_stable_decompositions(g, analysis, limit))
            any_ring = any_ring || d.has_ring_component();
        out.decomposition_verdict = !any_ring;
        if (*out.decomposition_verdict != out.converges)
            throw Error(Errc::verification_failed, "convergence verdicts disagree: direct " +
                                                       std::string(out.converges ? "true" : "false"));
    }
    return out;
}

ConvergenceVerdict converges_to_stability(const Game& g, std::size_t limit)
{
    return converges_to_stability(g, analyze_absorbing(g, limit), limit);
}

Game random_game(int agents, double density, std::uint64_t seed)
{
    if (agents < 1 || agents > 20)
        throw Error(Errc::malformed_input, "random games support 1..20 agents");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
    std::vector<std::vector<Coalition>> rankings(agents);
    const std::uint64_t end = std::uint64_t{1} << agents;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        const Coalition c(mask);
        if (c.is_singleton() || !keep(rng))
            continue;
        for (Agent i : c.members())
            rankings[i - 1].push_back(c);
    }
    for (Agent i = 1; i <= agents; ++i) {
        auto& r = rankings[i - 1];
        std::shuffle(r.begin(), r.end(), rng);
        std::uniform_int_distribution<std::size_t> slot(0, r.size());
        r.insert(r.begin() + static_cast<std::ptrdiff_t>(slot(rng)), Coalition::singleton(i));
    }
    return Game(agents, std::move(rankings));
}

namespace {

std::vector<std::vector<Agent>> random_partners(int agents, const std::vector<std::pair<Agent, Agent>>& candidates,
                                                double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
    std::vector<std::vector<Agent>> partners(agents);
    for (auto [i, j] : candidates)
        if (keep(rng)) {
            partners[i - 1].push_back(j);
            partners[j - 1].push_back(i);
        }
    for (auto& list : partners)
        std::shuffle(list.begin(), list.end(), rng);
    return partners;
}

} // namespace

RoommateSpec random_roommate(int agents, double density, std::uint64_t seed)
{
    if (agents < 1 || agents > kMaxAgents)
        throw Error(Errc::malformed_spec, "agent count " + std::to_string(agents));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Agent, Agent>> candidates;
    for (Agent i = 1; i <= agents; ++i)
        for (Agent j = i + 1; j <= agents; ++j)
            candidates.emplace_back(i, j);
    return RoommateSpec{agents, random_partners(agents, candidates, density, rng)};
}

MarriageSpec random_marriage(int men, int women, double density, std::uint64_t seed)
{
    if (men < 0 || women < 0 || men + women < 1 || men + women > kMaxAgents)
        throw Error(Errc::malformed_spec, "bad market size " + std::to_string(men) + "x" + std::to_string(women));
    std::mt19937_64 rng(seed);
    MarriageSpec spec;
    spec.agents = men + women;
    std::vector<std::pair<Agent, Agent>> candidates;
    for (Agent m = 1; m <= men; ++m) {
        spec.men.push_back(m);
        for (Agent w = men + 1; w <= men + women; ++w)
            candidates.emplace_back(m, w);
    }
    for (Agent w = men + 1; w <= men + women; ++w)
        spec.women.push_back(w);
    spec.partners = random_partners(spec.agents, candidates, density, rng);
    return spec;
}

} // namespace stabdec
