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

#include "stabdec/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stabdec {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view what)
{
    const std::string t = trim(s);
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(Errc::malformed_input, "expected " + std::string(what) + ", got '" + t + "'");
    return std::stoi(t);
}

Agent agent_id(const json& v, int agents)
{
    if (!v.is_number_integer())
        throw Error(Errc::malformed_input, "agent id must be an integer, got " + v.dump());
    const auto id = v.get<long long>();
    if (id < 1 || id > agents)
        throw Error(Errc::agent_out_of_range, "agent " + std::to_string(id) + " outside 1.." + std::to_string(agents));
    return static_cast<Agent>(id);
}

Agent key_id(const std::string& key, int agents)
{
    const int id = parse_int(key, "agent id");
    if (id < 1 || id > agents)
        throw Error(Errc::agent_out_of_range, "agent " + key + " outside 1.." + std::to_string(agents));
    return id;
}

int agent_count(const json& doc)
{
    if (!doc.contains("agents") || !doc["agents"].is_number_integer())
        throw Error(Errc::malformed_input, "missing integer \"agents\"");
    const auto n = doc["agents"].get<long long>();
    if (n < 1 || n > kMaxAgents)
        throw Error(Errc::agent_out_of_range, "agent count " + std::to_string(n) + " outside 1.." +
                                                  std::to_string(kMaxAgents));
    return static_cast<int>(n);
}

/// Per-agent lists keyed by decimal id strings; missing agents get nothing.
template <typename Item>
std::vector<std::vector<Item>> per_agent(const json& doc, const char* field, int agents, Item (*item)(const json&, int))
{
    if (!doc.contains(field) || !doc[field].is_object())
        throw Error(Errc::malformed_input, std::string("missing object \"") + field + "\"");
    std::vector<std::vector<Item>> out(agents);
    for (const auto& [key, list] : doc[field].items()) {
        const Agent i = key_id(key, agents);
        if (!list.is_array())
            throw Error(Errc::malformed_input, std::string(field) + " of agent " + key + " must be an array");
        for (const auto& v : list)
            out[i - 1].push_back(item(v, agents));
    }
    return out;
}

Coalition coalition_item(const json& v, int agents)
{
    if (v.is_string())
        return Coalition::parse_label(v.get<std::string>());
    if (!v.is_array() || v.empty())
        throw Error(Errc::malformed_input, "coalition must be a non-empty array, got " + v.dump());
    Coalition c;
    for (const auto& a : v) {
        const Agent i = agent_id(a, agents);
        if (c.contains(i))
            throw Error(Errc::inconsistent_ranking, "repeated agent in coalition " + v.dump());
        c |= Coalition::singleton(i);
    }
    return c;
}

Agent partner_item(const json& v, int agents)
{
    return agent_id(v, agents);
}

std::vector<Agent> agent_list(const json& doc, const char* field, int agents)
{
    if (!doc.contains(field) || !doc[field].is_array())
        throw Error(Errc::malformed_input, std::string("missing array \"") + field + "\"");
    std::vector<Agent> out;
    for (const auto& v : doc[field])
        out.push_back(agent_id(v, agents));
    return out;
}

json coalition_json(Coalition c)
{
    return json(c.members());
}

json partners_json(const std::vector<std::vector<Agent>>& partners)
{
    json out = json::object();
    for (std::size_t i = 0; i < partners.size(); ++i)
        out[std::to_string(i + 1)] = partners[i];
    return out;
}

} // namespace

Game parse_game_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::malformed_input, e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::malformed_input, "game must be a JSON object");
    const std::string kind = doc.value("kind", std::string("game"));
    const int n = agent_count(doc);
    if (kind == "game") {
        auto rankings = per_agent<Coalition>(doc, "preferences", n, coalition_item);
        return Game(n, std::move(rankings));
    }
    if (kind == "roommate")
        return roommate_to_game(RoommateSpec{n, per_agent<Agent>(doc, "partners", n, partner_item)});
    if (kind == "marriage") {
        MarriageSpec spec{n, agent_list(doc, "men", n), agent_list(doc, "women", n),
                          per_agent<Agent>(doc, "partners", n, partner_item)};
        return marriage_to_game(spec);
    }
    throw Error(Errc::malformed_input, "unknown game kind \"" + kind + "\"");
}

Game parse_game_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = 0;
    std::vector<std::vector<Coalition>> rankings;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string body = trim(line);
        if (body.empty())
            continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::malformed_input, "line " + std::to_string(lineno) + ": expected ':'");
        const std::string head = trim(std::string_view(body).substr(0, colon));
        const std::string_view rest = std::string_view(body).substr(colon + 1);
        if (head == "agents") {
            if (n != 0)
                throw Error(Errc::malformed_input, "line " + std::to_string(lineno) + ": repeated header");
            n = parse_int(rest, "agent count");
            if (n < 1 || n > kMaxAgents)
                throw Error(Errc::agent_out_of_range, "agent count " + std::to_string(n));
            rankings.assign(n, {});
            continue;
        }
        if (n == 0)
            throw Error(Errc::malformed_input, "line " + std::to_string(lineno) + ": missing 'agents: n' header");
        const Agent i = parse_int(head, "agent id");
        if (i < 1 || i > n)
            throw Error(Errc::agent_out_of_range, "line " + std::to_string(lineno) + ": agent " + head);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto bar = rest.find('|', start);
            if (bar == std::string_view::npos)
                bar = rest.size();
            const std::string token = trim(rest.substr(start, bar - start));
            if (token.empty())
                throw Error(Errc::malformed_input, "line " + std::to_string(lineno) + ": empty coalition");
            const Coalition c = Coalition::parse_label(token);
            if (c.greatest() > n)
                throw Error(Errc::agent_out_of_range, "line " + std::to_string(lineno) + ": coalition " + token);
            rankings[i - 1].push_back(c);
            start = bar + 1;
        }
    }
    if (n == 0)
        throw Error(Errc::malformed_input, "missing 'agents: n' header");
    return Game(n, std::move(rankings));
}

Game parse_game(std::string_view text)
{
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{')
        return parse_game_json(t);
    return parse_game_text(t);
}

Game load_game_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::malformed_input, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

std::string game_to_json(const Game& g)
{
    json prefs = json::object();
    for (Agent i = 1; i <= g.agents(); ++i) {
        json list = json::array();
        for (Coalition c : g.ranking(i))
            list.push_back(coalition_json(c));
        prefs[std::to_string(i)] = std::move(list);
    }
    json doc = {{"kind", "game"}, {"agents", g.agents()}, {"preferences", std::move(prefs)}};
    return doc.dump(2);
}

std::string roommate_to_json(const RoommateSpec& spec)
{
    json doc = {{"kind", "roommate"}, {"agents", spec.agents}, {"partners", partners_json(spec.partners)}};
    return doc.dump(2);
}

std::string marriage_to_json(const MarriageSpec& spec)
{
    json doc = {{"kind", "marriage"},
                {"agents", spec.agents},
                {"men", spec.men},
                {"women", spec.women},
                {"partners", partners_json(spec.partners)}};
    return doc.dump(2);
}

CoalitionStructure parse_structure(const Game& g, std::string_view text)
{
    std::vector<Coalition> parts;
    const std::string t = trim(text);
    if (t.find('{') != std::string::npos) {
        std::size_t pos = 0;
        while ((pos = t.find('{', pos)) != std::string::npos) {
            const auto close = t.find('}', pos);
            if (close == std::string::npos)
                throw Error(Errc::malformed_input, "unbalanced braces in '" + t + "'");
            Coalition c;
            std::istringstream items(t.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(items, item, ','))
                c |= Coalition::singleton(parse_int(item, "agent id"));
            parts.push_back(c);
            pos = close + 1;
        }
    } else {
        std::istringstream items(t);
        std::string item;
        while (items >> item)
            parts.push_back(Coalition::parse_label(item));
    }
    for (Coalition c : parts)
        if (c.empty() || c.greatest() > g.agents())
            throw Error(Errc::agent_out_of_range, "structure '" + t + "' names an unknown agent");
    return make_structure(g, std::move(parts));
}

std::vector<Party> parse_decomposition(const Game& g, std::string_view text)
{
    const std::string t = trim(text);
    std::vector<CoalitionCollection> groups;
    if (!t.empty() && t.front() == '[') {
        json doc;
        try {
            doc = json::parse(t);
        } catch (const json::parse_error& e) {
            throw Error(Errc::malformed_input, e.what());
        }
        for (const auto& party : doc) {
            if (!party.is_array())
                throw Error(Errc::malformed_input, "party must be an array, got " + party.dump());
            CoalitionCollection members;
            for (const auto& c : party)
                members.push_back(coalition_item(c, g.agents()));
            groups.push_back(std::move(members));
        }
    } else {
        if (t.size() < 2 || t.front() != '{' || t.back() != '}')
            throw Error(Errc::malformed_input, "decomposition must look like {{12,23},{45}}");
        const std::string inner = t.substr(1, t.size() - 2);
        std::size_t pos = 0;
        while ((pos = inner.find('{', pos)) != std::string::npos) {
            const auto close = inner.find('}', pos);
            if (close == std::string::npos)
                throw Error(Errc::malformed_input, "unbalanced braces in '" + t + "'");
            CoalitionCollection members;
            std::istringstream items(inner.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(items, item, ','))
                members.push_back(Coalition::parse_label(trim(item)));
            groups.push_back(std::move(members));
            pos = close + 1;
        }
    }
    if (groups.empty())
        throw Error(Errc::malformed_input, "decomposition has no parties");
    std::vector<Party> parties;
    for (auto& members : groups) {
        for (Coalition c : members)
            if (c.greatest() > g.agents())
                throw Error(Errc::agent_out_of_range, "party " + render_collection(members) + " names an unknown agent");
        parties.push_back(Party::classify(g, std::move(members)));
    }
    return parties;
}

} // namespace stabdec
