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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabdec/io.hpp"

namespace stabdec::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string render(const CoalitionStructure& pi)
{
    return pi.to_string();
}

Json party_json(const Party& p)
{
    Json out = {{"kind", std::string(to_string(p.kind()))}, {"coalitions", Json::array()}};
    for (Coalition c : p.coalitions())
        out["coalitions"].push_back(c.label());
    return out;
}

Json collections_json(std::span<const CoalitionCollection> sets)
{
    Json out = Json::array();
    for (const auto& s : sets)
        out.push_back(render_collection(s));
    return out;
}

struct AnalyzeOptions {
    std::string file;
    bool absorbing = false;
    bool decompositions = false;
    bool rings = false;
    bool converge = false;
    bool all = false;
    bool json = false;
    bool timing = false;
    std::string dot;
    std::size_t limit = kDefaultLimit;
};

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void build_report(const Game& g, const AnalyzeOptions& opt, Json& r)
{
    const auto started = std::chrono::steady_clock::now();
    const AbsorbingAnalysis an = analyze_absorbing(g, opt.limit);
    r["structures"] = an.graph.size();
    r["edges"] = an.graph.edge_count();

    std::vector<CoalitionStructure> stable;
    for (const auto& set : an.sets)
        if (set.trivial())
            stable.push_back(set.members.front());
    std::sort(stable.begin(), stable.end());
    r["stable_structures"] = Json::array();
    for (const auto& pi : stable)
        r["stable_structures"].push_back(render(pi));

    if (opt.absorbing) {
        r["absorbing_sets"] = Json::array();
        for (const auto& set : an.sets) {
            Json s = {{"size", set.size()}, {"trivial", set.trivial()}, {"structures", Json::array()}};
            for (const auto& pi : set.members)
                s["structures"].push_back(render(pi));
            r["absorbing_sets"].push_back(std::move(s));
        }
    }

    if (opt.rings) {
        r["ring_components"] = Json::array();
        for (std::size_t k = 0; k < an.sets.size(); ++k) {
            if (an.sets[k].trivial())
                continue;
            for (const auto& rc : ring_components_of(g, an.sets[k], an.graph)) {
                r["ring_components"].push_back({{"absorbing_set", k},
                                                {"coalitions", render_collection(rc.coalitions())},
                                                {"simple", rc.simple()},
                                                {"maximal_sets", collections_json(rc.maximal())},
                                                {"compact_collection", collections_json(rc.compact())}});
            }
        }
    }

    if (opt.decompositions) {
        r["decompositions"] = Json::array();
        for (std::size_t k = 0; k < an.sets.size(); ++k) {
            const StableDecomposition d = from_absorbing_set(g, an.sets[k], an.graph, opt.limit);
            Json dj = {{"absorbing_set", k}, {"text", d.to_string()}, {"parties", Json::array()}};
            for (const auto& p : d.parties())
                dj["parties"].push_back(party_json(p));
            Json certs = Json::array();
            for (std::size_t p = 0; p < d.parties().size(); ++p) {
                if (d.parties()[p].is_pool())
                    continue;
                const auto found = protection_certificates(g, d.parties()[p], d.parties());
                if (!found)
                    throw Error(Errc::verification_failed, "party " + d.parties()[p].to_string() + " unprotected");
                for (const auto& c : *found)
                    certs.push_back({{"party", p},
                                     {"breaker", c.breaker.label()},
                                     {"preventer", c.preventer},
                                     {"witnesses", c.witnesses}});
            }
            dj["certificates"] = std::move(certs);
            dj["d_structures"] = Json::array();
            for (const auto& ds : d_structures(g, d))
                dj["d_structures"].push_back(render(ds.structure));
            dj["generated_set_size"] = an.sets[k].size();
            r["decompositions"].push_back(std::move(dj));
        }
    }

    if (opt.converge) {
        const ConvergenceVerdict v = converges_to_stability(g, an, opt.limit);
        Json cj = {{"converges", v.converges}, {"has_stable", v.has_stable}, {"witness", nullptr},
                   {"witness_absorbing_set_size", nullptr}, {"decomposition_verdict", nullptr}};
        if (v.witness) {
            cj["witness"] = render(*v.witness);
            cj["witness_absorbing_set_size"] = reaches_absorbing(g, *v.witness, opt.limit).set.size();
        }
        if (v.decomposition_verdict)
            cj["decomposition_verdict"] = *v.decomposition_verdict;
        r["convergence"] = std::move(cj);
    }

    if (!opt.dot.empty()) {
        std::vector<std::size_t> highlight;
        for (const auto& set : an.sets)
            for (const auto& pi : set.members)
                highlight.push_back(an.graph.index_of(pi));
        std::sort(highlight.begin(), highlight.end());
        std::ofstream dot(opt.dot, std::ios::binary);
        if (!dot)
            throw Error(Errc::malformed_input, "cannot write " + opt.dot);
        dot << to_dot(an.graph, highlight);
    }

    if (opt.timing)
        r["timing_ms"] = {{"analysis", ms_since(started)}};
}

void print_text(const Json& r, std::ostream& out)
{
    const Json& game = r["game"];
    out << "game: " << game["agents"].get<int>() << " agents, " << game["permissible"].size()
        << " permissible coalitions\n";
    out << "permissible: {";
    for (std::size_t k = 0; k < game["permissible"].size(); ++k)
        out << (k ? "," : "") << game["permissible"][k].get<std::string>();
    out << "}\n";
    if (r.contains("structures"))
        out << "structures: " << r["structures"].get<std::size_t>() << " (" << r["edges"].get<std::size_t>()
            << " domination edges)\n";
    if (r.contains("stable_structures")) {
        out << "stable structures (" << r["stable_structures"].size() << "):\n";
        for (const auto& s : r["stable_structures"])
            out << "  " << s.get<std::string>() << '\n';
    }
    if (r.contains("absorbing_sets")) {
        out << "absorbing sets (" << r["absorbing_sets"].size() << "):\n";
        std::size_t k = 0;
        for (const auto& s : r["absorbing_sets"]) {
            out << "  [" << k++ << "] ";
            if (s["trivial"].get<bool>()) {
                out << "trivial " << s["structures"][0].get<std::string>() << '\n';
                continue;
            }
            out << "size " << s["size"].get<std::size_t>() << '\n';
            for (const auto& pi : s["structures"])
                out << "      " << pi.get<std::string>() << '\n';
        }
    }
    if (r.contains("ring_components")) {
        out << "ring components (" << r["ring_components"].size() << "):\n";
        for (const auto& rc : r["ring_components"]) {
            out << "  " << rc["coalitions"].get<std::string>() << (rc["simple"].get<bool>() ? " simple" : " not simple")
                << " in absorbing set [" << rc["absorbing_set"].get<std::size_t>() << "]\n      maximal sets:";
            for (const auto& m : rc["maximal_sets"])
                out << ' ' << m.get<std::string>();
            out << '\n';
        }
    }
    if (r.contains("decompositions")) {
        out << "stable decompositions (" << r["decompositions"].size() << "):\n";
        for (const auto& d : r["decompositions"]) {
            out << "  [" << d["absorbing_set"].get<std::size_t>() << "] " << d["text"].get<std::string>() << '\n';
            for (const auto& c : d["certificates"]) {
                const auto& party = d["parties"][c["party"].get<std::size_t>()];
                const auto& prev = d["parties"][c["preventer"].get<std::size_t>()];
                out << "      breaker " << c["breaker"].get<std::string>() << " of {";
                for (std::size_t k = 0; k < party["coalitions"].size(); ++k)
                    out << (k ? "," : "") << party["coalitions"][k].get<std::string>();
                out << "} prevented by {";
                for (std::size_t k = 0; k < prev["coalitions"].size(); ++k)
                    out << (k ? "," : "") << prev["coalitions"][k].get<std::string>();
                out << "} via agents";
                for (const auto& a : c["witnesses"])
                    out << ' ' << agent_label(a.get<int>());
                out << '\n';
            }
            out << "      D-structures:\n";
            for (const auto& s : d["d_structures"])
                out << "        " << s.get<std::string>() << '\n';
            out << "      generated set size " << d["generated_set_size"].get<std::size_t>() << '\n';
        }
    }
    if (r.contains("convergence")) {
        const Json& c = r["convergence"];
        out << "convergence to stability: " << (c["converges"].get<bool>() ? "yes" : "no") << '\n';
        if (!c["witness"].is_null())
            out << "  witness " << c["witness"].get<std::string>() << " reaches a non-trivial absorbing set of size "
                << c["witness_absorbing_set_size"].get<std::size_t>() << '\n';
        if (!c["decomposition_verdict"].is_null())
            out << (c["decomposition_verdict"].get<bool>() ? "  no stable decomposition has a ring component\n"
                                                           : "  some stable decomposition has a ring component\n");
        if (!c["has_stable"].get<bool>())
            out << "  the game has no stable structure\n";
    }
    if (r.contains("timing_ms"))
        out << "analysis time: " << r["timing_ms"]["analysis"].get<double>() << " ms\n";
    if (r["partial"].get<bool>())
        out << "partial report: " << r["error"].get<std::string>() << '\n';
}

int analyze(const AnalyzeOptions& in, std::ostream& out, std::ostream& err)
{
    AnalyzeOptions opt = in;
    if (opt.all)
        opt.absorbing = opt.decompositions = opt.rings = opt.converge = true;
    if (!opt.absorbing && !opt.decompositions && !opt.rings && !opt.converge)
        opt.absorbing = true;

    std::optional<Game> g;
    try {
        g.emplace(load_game_file(opt.file));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    Json r;
    r["schema_version"] = kReportSchemaVersion;
    r["partial"] = false;
    r["game"] = {{"agents", g->agents()}, {"permissible", Json::array()}};
    for (Coalition c : g->permissible())
        r["game"]["permissible"].push_back(c.label());

    int code = kExitOk;
    try {
        build_report(*g, opt, r);
    } catch (const Error& e) {
        if (e.code() != Errc::limit_exceeded) {
            err << "error: " << e.what() << '\n';
            return kExitInput;
        }
        r["partial"] = true;
        r["error"] = e.what();
        err << "error: " << e.what() << '\n';
        code = kExitLimit;
    }

    if (opt.json)
        out << r.dump(2) << '\n';
    else
        print_text(r, out);
    return code;
}

int verify(const std::string& file, const std::string& text, std::size_t limit, bool json, std::ostream& out,
           std::ostream& err)
{
    try {
        const Game g = load_game_file(file);
        const std::vector<Party> parties = parse_decomposition(g, text);
        const StableDecomposition d(parties);
        const DecompositionCheck check = check_stable_decomposition(g, parties, limit);
        if (json) {
            Json r = {{"schema_version", kReportSchemaVersion},
                      {"decomposition", d.to_string()},
                      {"stable", check.stable()},
                      {"message", check.message}};
            if (check.breaker)
                r["breaker"] = check.breaker->label();
            out << r.dump(2) << '\n';
        } else if (check.stable()) {
            out << "stable decomposition: " << d.to_string() << '\n';
        } else {
            out << "not a stable decomposition: " << check.message << '\n';
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::limit_exceeded ? kExitLimit : kExitInput;
    }
}

struct GenerateOptions {
    int agents = 5;
    int men = 3;
    int women = 3;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string output;
};

int generate(const std::string& kind, const GenerateOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        std::string text;
        if (kind == "random")
            text = game_to_json(random_game(opt.agents, opt.density, opt.seed));
        else if (kind == "roommate")
            text = roommate_to_json(random_roommate(opt.agents, opt.density, opt.seed));
        else
            text = marriage_to_json(random_marriage(opt.men, opt.women, opt.density, opt.seed));
        if (opt.output.empty()) {
            out << text << '\n';
        } else {
            std::ofstream f(opt.output, std::ios::binary);
            if (!f)
                throw Error(Errc::malformed_input, "cannot write " + opt.output);
            f << text << '\n';
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coalition formation game solver: absorbing sets, ring components, stable decompositions",
                 "stabdec"};
    app.require_subcommand(1);

    AnalyzeOptions aopt;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a game file (JSON or text)");
    analyze_cmd->add_option("file", aopt.file, "Game file")->required();
    analyze_cmd->add_flag("--absorbing", aopt.absorbing, "List absorbing sets (default section)");
    analyze_cmd->add_flag("--decompositions", aopt.decompositions, "List stable decompositions");
    analyze_cmd->add_flag("--rings", aopt.rings, "List ring components");
    analyze_cmd->add_flag("--converge", aopt.converge, "Decide convergence to stability");
    analyze_cmd->add_flag("--all", aopt.all, "Every section");
    analyze_cmd->add_flag("--json", aopt.json, "JSON report");
    analyze_cmd->add_flag("--timing", aopt.timing, "Include wall-clock timing");
    analyze_cmd->add_option("--dot", aopt.dot, "Write the domination graph as Graphviz DOT");
    analyze_cmd->add_option("--limit", aopt.limit, "Maximum number of structures to explore")
        ->check(CLI::PositiveNumber);

    std::string vfile;
    std::string vtext;
    std::size_t vlimit = kDefaultLimit;
    bool vjson = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate stable decomposition");
    verify_cmd->add_option("file", vfile, "Game file")->required();
    verify_cmd->add_option("--decomposition", vtext, "Parties, e.g. '{{12,23,13},{45,46,56}}' or JSON")
        ->required();
    verify_cmd->add_option("--limit", vlimit, "Search limit for pool sub-parties")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", vjson, "JSON verdict");

    GenerateOptions gopt;
    std::string gkind;
    auto* generate_cmd = app.add_subcommand("generate", "Emit a random game as JSON");
    generate_cmd->add_option("kind", gkind, "random, roommate or marriage")
        ->required()
        ->check(CLI::IsMember({"random", "roommate", "marriage"}));
    generate_cmd->add_option("--agents", gopt.agents, "Agent count (random, roommate)")->check(CLI::Range(1, 64));
    generate_cmd->add_option("--men", gopt.men, "Men (marriage)")->check(CLI::Range(0, 64));
    generate_cmd->add_option("--women", gopt.women, "Women (marriage)")->check(CLI::Range(0, 64));
    generate_cmd->add_option("--density", gopt.density, "Inclusion probability")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--seed", gopt.seed, "Random seed");
    generate_cmd->add_option("--output,-o", gopt.output, "Write to a file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze_cmd)
            return analyze(aopt, out, err);
        if (*verify_cmd)
            return verify(vfile, vtext, vlimit, vjson, out, err);
        return generate(gkind, gopt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace stabdec::cli
