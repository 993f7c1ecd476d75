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

#include "stabdec/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace stabdec {

std::string_view to_string(PartyKind kind) noexcept
{
    switch (kind) {
    case PartyKind::singleton_pool: return "singleton_pool";
    case PartyKind::single_coalition: return "single_coalition";
    case PartyKind::ring_component: return "ring_component";
    }
    return "unknown";
}

Party::Party(PartyKind kind, CoalitionCollection coalitions)
    : kind_(kind), coalitions_(canonical(coalitions)), display_(std::move(coalitions)), agents_(agents_of(coalitions_))
{
}

Party Party::pool(Coalition agents)
{
    if (agents.empty())
        throw Error(Errc::malformed_party, "empty singleton pool");
    CoalitionCollection singles;
    for (Agent i : agents.members())
        singles.push_back(Coalition::singleton(i));
    return Party(PartyKind::singleton_pool, std::move(singles));
}

Party Party::single(const Game& g, Coalition c)
{
    if (c.is_singleton() || !g.is_permissible(c))
        throw Error(Errc::malformed_party, c.to_string() + " is not a permissible coalition");
    return Party(PartyKind::single_coalition, {c});
}

Party Party::ring(const Game& g, CoalitionCollection family)
{
    if (!is_ring_component(g, canonical(family)))
        throw Error(Errc::malformed_party, render_collection(family) + " is not a ring component");
    Party p(PartyKind::ring_component, std::move(family));
    p.component_.emplace(g, p.coalitions_);
    return p;
}

Party Party::classify(const Game& g, CoalitionCollection members)
{
    if (members.empty() || std::any_of(members.begin(), members.end(), [](Coalition c) { return c.empty(); }))
        throw Error(Errc::malformed_party, "empty party");
    if (canonical(members).size() != members.size())
        throw Error(Errc::malformed_party, render_collection(members) + " repeats a coalition");
    const auto singles = std::count_if(members.begin(), members.end(), [](Coalition c) { return c.is_singleton(); });
    const auto others = static_cast<std::ptrdiff_t>(members.size()) - singles;
    if (others == 0)
        return pool(agents_of(members));
    if (singles != 0)
        throw Error(Errc::malformed_party, render_collection(members) + " mixes singletons and coalitions");
    if (others == 1)
        return single(g, members.front());
    if (others == 2)
        throw Error(Errc::malformed_party, render_collection(members) + " has two coalitions");
    return ring(g, std::move(members));
}

bool Party::has(Coalition c) const noexcept
{
    return std::binary_search(coalitions_.begin(), coalitions_.end(), c);
}

std::string Party::to_string() const
{
    return render_collection(display_);
}

bool Party::operator<(const Party& o) const
{
    if (agents_.least() != o.agents_.least())
        return agents_.least() < o.agents_.least();
    return coalitions_ < o.coalitions_;
}

StableDecomposition::StableDecomposition(std::vector<Party> parties) : parties_(std::move(parties))
{
    std::sort(parties_.begin(), parties_.end());
}

bool StableDecomposition::has_ring_component() const noexcept
{
    return std::any_of(parties_.begin(), parties_.end(),
                       [](const Party& p) { return p.kind() == PartyKind::ring_component; });
}

const Party* StableDecomposition::pool() const noexcept
{
    for (const auto& p : parties_)
        if (p.is_pool())
            return &p;
    return nullptr;
}

std::string StableDecomposition::to_string() const
{
    std::string out = "{";
    for (std::size_t k = 0; k < parties_.size(); ++k) {
        if (k)
            out += ',';
        out += parties_[k].to_string();
    }
    out += '}';
    return out;
}

std::vector<Coalition> breakers(const Game& g, const Party& party)
{
    std::vector<Coalition> out;
    if (party.is_pool())
        return out;
    const Coalition members = party.agents();
    for (Coalition c : g.permissible()) {
        if (!c.intersects(members) || party.has(c))
            continue;
        bool broken = false;
        if (const RingComponent* rc = party.component()) {
            for (const auto& m : rc->maximal())
                if (breaks_disjoint(g, c, m)) {
                    broken = true;
                    break;
                }
        } else {
            broken = breaks_disjoint(g, c, party.coalitions());
        }
        if (broken)
            out.push_back(c);
    }
    return out;
}

namespace {

std::optional<Agent> dissenter(const Game& g, Coalition own, Coalition c)
{
    for (Agent i : (own & c).members())
        if (g.prefers(i, own, c))
            return i;
    return std::nullopt;
}

} // namespace

std::optional<std::vector<Agent>> prevention_witness(const Game& g, const Party& party, Coalition c)
{
    if (party.is_pool())
        throw Error(Errc::party_is_singleton_pool, party.to_string());
    if (!party.agents().intersects(c))
        throw Error(Errc::disjoint_party, party.to_string() + " and " + c.to_string());
    if (party.has(c))
        return std::nullopt;
    const RingComponent* rc = party.component();
    if (!rc) {
        auto who = dissenter(g, party.coalitions().front(), c);
        if (!who)
            return std::nullopt;
        return std::vector<Agent>{*who};
    }
    std::vector<Agent> witnesses;
    for (const auto& family : rc->compact()) {
        std::optional<Agent> who;
        for (Coalition own : family) {
            if (own.intersects(c) && (who = dissenter(g, own, c)))
                break;
        }
        if (!who)
            return std::nullopt;
        witnesses.push_back(*who);
    }
    return witnesses;
}

bool prevents(const Game& g, const Party& party, Coalition c)
{
    return prevention_witness(g, party, c).has_value();
}

std::optional<std::vector<ProtectionCertificate>> protection_certificates(const Game& g, const Party& party,
                                                                          std::span<const Party> parties)
{
    std::vector<ProtectionCertificate> out;
    for (Coalition c : breakers(g, party)) {
        bool prevented = false;
        for (std::size_t k = 0; k < parties.size() && !prevented; ++k) {
            const Party& other = parties[k];
            if (other.is_pool() || !other.agents().intersects(c))
                continue;
            if (auto w = prevention_witness(g, other, c)) {
                out.push_back(ProtectionCertificate{c, k, std::move(*w)});
                prevented = true;
            }
        }
        if (!prevented)
            return std::nullopt;
    }
    return out;
}

bool is_protected(const Game& g, const Party& party, std::span<const Party> parties)
{
    return protection_certificates(g, party, parties).has_value();
}

std::vector<RingComponent> ring_components_within(const Game& g, Coalition agents, std::size_t limit)
{
    CoalitionCollection inside;
    for (Coalition c : g.permissible())
        if (c.subset_of(agents))
            inside.push_back(c);
    const std::size_t m = inside.size();

    // A ring component is strongly connected under "preferred and
    // intersecting", so it sits inside one SCC of that digraph.
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            reach[a][b] = a != b && inside[a].intersects(inside[b]) && g.unanimously_prefers(inside[b], inside[a]);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < m; ++a)
            if (reach[a][k])
                for (std::size_t b = 0; b < m; ++b)
                    if (reach[k][b])
                        reach[a][b] = true;

    std::vector<bool> placed(m, false);
    std::vector<RingComponent> out;
    std::size_t examined = 0;
    for (std::size_t a = 0; a < m; ++a) {
        if (placed[a])
            continue;
        CoalitionCollection scc{inside[a]};
        placed[a] = true;
        for (std::size_t b = a + 1; b < m; ++b)
            if (!placed[b] && reach[a][b] && reach[b][a]) {
                scc.push_back(inside[b]);
                placed[b] = true;
            }
        if (scc.size() < 3)
            continue;
        if (scc.size() >= 63)
            throw Error(Errc::limit_exceeded, "ring-component search over " + std::to_string(scc.size()) +
                                                  " coalitions");
        const std::uint64_t subsets = std::uint64_t{1} << scc.size();
        for (std::uint64_t pick = 1; pick < subsets; ++pick) {
            if (std::popcount(pick) < 3)
                continue;
            if (++examined > limit)
                throw Error(Errc::limit_exceeded, "more than " + std::to_string(limit) +
                                                      " candidate ring components");
            CoalitionCollection family;
            for (std::size_t k = 0; k < scc.size(); ++k)
                if ((pick >> k) & 1U)
                    family.push_back(scc[k]);
            if (is_ring_component(g, family))
                out.emplace_back(g, std::move(family));
        }
    }
    std::sort(out.begin(), out.end(), [](const RingComponent& x, const RingComponent& y) {
        return std::lexicographical_compare(x.coalitions().begin(), x.coalitions().end(), y.coalitions().begin(),
                                            y.coalitions().end());
    });
    return out;
}

std::optional<RingComponent> larger_ring_component(const Game& g, const RingComponent& rc, std::size_t limit)
{
    Coalition agents;
    for (Coalition c : rc.coalitions())
        agents |= c;
    CoalitionCollection inside;
    for (Coalition c : g.permissible())
        if (c.subset_of(agents))
            inside.push_back(c);
    const std::size_t m = inside.size();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            reach[a][b] = a != b && inside[a].intersects(inside[b]) && g.unanimously_prefers(inside[b], inside[a]);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < m; ++a)
            if (reach[a][k])
                for (std::size_t b = 0; b < m; ++b)
                    if (reach[k][b])
                        reach[a][b] = true;

    const auto member = [&](Coalition c) {
        return std::binary_search(rc.coalitions().begin(), rc.coalitions().end(), c);
    };
    const std::size_t anchor = static_cast<std::size_t>(
        std::find(inside.begin(), inside.end(), rc.coalitions().front()) - inside.begin());
    CoalitionCollection extra;
    for (std::size_t b = 0; b < m; ++b)
        if (!member(inside[b]) && reach[anchor][b] && reach[b][anchor])
            extra.push_back(inside[b]);
    if (extra.size() >= 63)
        throw Error(Errc::limit_exceeded, "ring-component extension over " + std::to_string(extra.size()) +
                                              " coalitions");
    const std::uint64_t subsets = std::uint64_t{1} << extra.size();
    if (subsets - 1 > limit)
        throw Error(Errc::limit_exceeded, "more than " + std::to_string(limit) + " ring-component extensions");
    for (std::uint64_t pick = 1; pick < subsets; ++pick) {
        CoalitionCollection family(rc.coalitions().begin(), rc.coalitions().end());
        for (std::size_t k = 0; k < extra.size(); ++k)
            if ((pick >> k) & 1U)
                family.push_back(extra[k]);
        canonicalize(family);
        if (is_ring_component(g, family))
            return RingComponent(g, std::move(family));
    }
    return std::nullopt;
}

namespace {

// Smallest non-empty family of pairwise disjoint candidates in which every
// member is protected by the non-pool parties together with the family.
// A single protected candidate is a family of one.
std::vector<std::size_t> protected_family(const Game& g, const std::vector<Party>& candidates,
                                          std::span<const Party> parties, std::size_t limit)
{
    std::vector<std::vector<Coalition>> open(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k)
        for (Coalition c : breakers(g, candidates[k])) {
            const bool prevented = std::any_of(parties.begin(), parties.end(), [&](const Party& other) {
                return !other.is_pool() && other.agents().intersects(c) && prevents(g, other, c);
            });
            if (!prevented)
                open[k].push_back(c);
        }

    const auto settled = [&](const std::vector<std::size_t>& family) {
        return std::all_of(family.begin(), family.end(), [&](std::size_t k) {
            return std::all_of(open[k].begin(), open[k].end(), [&](Coalition c) {
                return std::any_of(family.begin(), family.end(), [&](std::size_t f) {
                    return f != k && candidates[f].agents().intersects(c) && prevents(g, candidates[f], c);
                });
            });
        });
    };

    std::size_t examined = 0;
    std::vector<std::size_t> family;
    std::function<bool(std::size_t, Coalition, std::size_t)> grow = [&](std::size_t from, Coalition used,
                                                                       std::size_t size) {
        if (family.size() == size)
            return settled(family);
        for (std::size_t k = from; k < candidates.size(); ++k) {
            if (used.intersects(candidates[k].agents()))
                continue;
            if (++examined > limit)
                throw Error(Errc::limit_exceeded,
                            "more than " + std::to_string(limit) + " party families over the pool");
            family.push_back(k);
            if (grow(k + 1, used | candidates[k].agents(), size))
                return true;
            family.pop_back();
        }
        return false;
    };
    Coalition reach;
    for (const Party& p : candidates)
        reach |= p.agents();
    // Every candidate holds at least two agents.
    for (std::size_t size = 1; size <= static_cast<std::size_t>(reach.size() / 2); ++size) {
        family.clear();
        if (grow(0, Coalition(), size))
            return family;
    }
    return {};
}

} // namespace

DecompositionCheck check_stable_decomposition(const Game& g, std::span<const Party> parties, std::size_t limit)
{
    DecompositionCheck out;
    Coalition covered;
    for (std::size_t k = 0; k < parties.size(); ++k) {
        if (covered.intersects(parties[k].agents())) {
            out.failure = DecompositionFailure::not_a_partition;
            out.party = k;
            out.message = "parties overlap at " + parties[k].to_string();
            return out;
        }
        covered |= parties[k].agents();
    }
    if (covered != g.everyone()) {
        out.failure = DecompositionFailure::not_a_partition;
        out.message = "parties do not cover agents " + (g.everyone() - covered).to_string();
        return out;
    }

    std::optional<std::size_t> pool;
    for (std::size_t k = 0; k < parties.size(); ++k) {
        if (!parties[k].is_pool())
            continue;
        if (pool) {
            out.failure = DecompositionFailure::several_pools;
            out.party = k;
            out.message = "more than one singleton pool";
            return out;
        }
        pool = k;
    }

    for (std::size_t k = 0; k < parties.size(); ++k) {
        const RingComponent* rc = parties[k].component();
        if (!rc)
            continue;
        if (auto larger = larger_ring_component(g, *rc, limit)) {
            out.failure = DecompositionFailure::ring_component_not_maximal;
            out.party = k;
            out.larger_component = Party::ring(g, CoalitionCollection(larger->coalitions().begin(), larger->coalitions().end()));
            out.message = parties[k].to_string() + " lies inside ring component " + out.larger_component->to_string();
            return out;
        }
    }

    for (std::size_t k = 0; k < parties.size(); ++k) {
        if (parties[k].is_pool())
            continue;
        for (Coalition c : breakers(g, parties[k])) {
            const bool prevented = std::any_of(parties.begin(), parties.end(), [&](const Party& other) {
                return !other.is_pool() && other.agents().intersects(c) && prevents(g, other, c);
            });
            if (!prevented) {
                out.failure = DecompositionFailure::unprotected_party;
                out.party = k;
                out.breaker = c;
                out.message = parties[k].to_string() + " unprotected against breaker " + c.label();
                return out;
            }
        }
    }

    if (pool) {
        const Coalition pool_agents = parties[*pool].agents();
        std::vector<Party> candidates;
        for (Coalition c : g.permissible())
            if (c.subset_of(pool_agents))
                candidates.push_back(Party::single(g, c));
        for (auto& rc : ring_components_within(g, pool_agents, limit))
            candidates.push_back(Party::ring(g, CoalitionCollection(rc.coalitions().begin(), rc.coalitions().end())));
        const auto family = protected_family(g, candidates, parties, limit);
        if (!family.empty()) {
            out.failure = DecompositionFailure::pool_supports_protected_party;
            out.party = *pool;
            out.message = "pool " + parties[*pool].to_string() + " supports protected part" +
                          (family.size() == 1 ? "y" : "ies");
            for (std::size_t k : family)
                out.message += " " + candidates[k].to_string();
            out.protected_party = candidates[family.front()];
            return out;
        }
    }
    return out;
}

bool is_stable_decomposition(const Game& g, std::span<const Party> parties, std::size_t limit)
{
    return check_stable_decomposition(g, parties, limit).stable();
}

StableDecomposition from_absorbing_set(const Game& g, const AbsorbingSet& set, const DominationGraph& graph,
                                       std::size_t limit)
{
    std::vector<Party> parties;
    Coalition used;
    if (set.trivial()) {
        for (Coalition c : set.members.front().non_single()) {
            parties.push_back(Party::single(g, c));
            used |= c;
        }
    } else {
        for (auto& rc : ring_components_of(g, set, graph)) {
            const bool everywhere = std::all_of(set.members.begin(), set.members.end(), [&](const auto& pi) {
                return std::any_of(rc.coalitions().begin(), rc.coalitions().end(),
                                   [&](Coalition r) { return pi.contains(r); });
            });
            if (!everywhere)
                continue;
            if (used.intersects(rc.agents()))
                throw Error(Errc::verification_failed, "ring components overlap at " + render_collection(rc.coalitions()));
            used |= rc.agents();
            parties.push_back(Party::ring(g, CoalitionCollection(rc.coalitions().begin(), rc.coalitions().end())));
        }
        CoalitionCollection persistent = set.members.front().non_single();
        for (const auto& pi : set.members)
            std::erase_if(persistent, [&](Coalition c) { return !pi.contains(c); });
        for (Coalition c : persistent) {
            if (used.intersects(c))
                throw Error(Errc::verification_failed, "persistent coalition " + c.to_string() +
                                                           " overlaps a ring component");
            used |= c;
            parties.push_back(Party::single(g, c));
        }
    }
    if (used != g.everyone())
        parties.push_back(Party::pool(g.everyone() - used));

    StableDecomposition d(std::move(parties));
    const auto check = check_stable_decomposition(g, d.parties(), limit);
    if (!check.stable())
        throw Error(Errc::verification_failed, d.to_string() + " is not a stable decomposition: " + check.message);
    return d;
}

std::vector<DStructure> d_structures(const Game& g, const StableDecomposition& d)
{
    std::vector<Coalition> fixed;
    std::vector<const RingComponent*> rings;
    for (const auto& p : d.parties()) {
        if (p.kind() == PartyKind::single_coalition)
            fixed.push_back(p.coalitions().front());
        else if (p.kind() == PartyKind::ring_component)
            rings.push_back(p.component());
    }

    std::vector<DStructure> out;
    std::vector<std::size_t> choice(rings.size(), 0);
    std::function<void(std::size_t)> assemble = [&](std::size_t depth) {
        if (depth == rings.size()) {
            std::vector<Coalition> parts = fixed;
            for (std::size_t r = 0; r < rings.size(); ++r) {
                const auto& e = rings[r]->compact()[choice[r]];
                parts.insert(parts.end(), e.begin(), e.end());
            }
            const Coalition covered = agents_of(parts);
            for (Agent i : (g.everyone() - covered).members())
                parts.push_back(Coalition::singleton(i));
            out.push_back(DStructure{make_structure(g, std::move(parts)), choice});
            return;
        }
        for (std::size_t k = 0; k < rings[depth]->compact().size(); ++k) {
            choice[depth] = k;
            assemble(depth + 1);
        }
    };
    assemble(0);
    std::sort(out.begin(), out.end(), [](const DStructure& a, const DStructure& b) { return a.structure < b.structure; });
    return out;
}

AbsorbingSet generated_set(const Game& g, const CoalitionStructure& seed, std::size_t limit)
{
    const DominationGraph graph = grow_graph(g, {seed}, limit);
    const SccDecomposition scc = strongly_connected_components(graph);
    if (scc.components.size() != 1)
        throw Error(Errc::verification_failed, "set generated by " + seed.to_string() + " is not absorbing (" +
                                                   std::to_string(scc.components.size()) + " components)");
    AbsorbingSet out{std::vector<CoalitionStructure>(graph.nodes().begin(), graph.nodes().end())};
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<StableDecomposition> all_stable_decompositions(const Game& g, const AbsorbingAnalysis& analysis,
                                                           std::size_t limit)
{
    std::vector<StableDecomposition> out;
    for (const auto& set : analysis.sets)
        out.push_back(from_absorbing_set(g, set, analysis.graph, limit));
    return out;
}

std::vector<StableDecomposition> all_stable_decompositions(const Game& g, std::size_t limit)
{
    return all_stable_decompositions(g, analyze_absorbing(g, limit), limit);
}

} // namespace stabdec
