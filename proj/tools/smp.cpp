#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "smp/gale_shapley.hpp"
#include "smp/generate.hpp"
#include "smp/hardness.hpp"
#include "smp/io.hpp"
#include "smp/manipulation.hpp"
#include "smp/procedures.hpp"

namespace {

using nlohmann::json;
using namespace smp;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SignatureMode parse_mode(const std::string& name) {
    if (name == "peer-indifferent")
        return SignatureMode::peer_indifferent;
    if (name == "simple")
        return SignatureMode::simple;
    throw CLI::ValidationError("--signature-mode", "must be peer-indifferent or simple");
}

Agent parse_agent(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'm' && text[0] != 'w'))
        throw CLI::ValidationError("--agent", "expected m<i> or w<i>");
    const Gender g = text[0] == 'm' ? Gender::men : Gender::women;
    return Agent{g, std::stoi(text.substr(1)) - 1};
}

std::string person(Gender g, int index) {
    return (g == Gender::men ? "m" : "w") + std::to_string(index + 1);
}

void print_report(const ManipulationReport& rep, bool as_json) {
    const Gender partner_side = opposite(rep.agent.gender);
    const char* verdict = rep.verdict == Verdict::strictly_better ? "strictly-better"
                          : rep.verdict == Verdict::unchanged     ? "unchanged"
                                                                  : "strictly-worse";
    if (as_json) {
        json list = json::array();
        for (int x : rep.reported_list)
            list.push_back(x + 1);
        json doc{{"agent", person(rep.agent.gender, rep.agent.index)},
                 {"truthful_partner", person(partner_side, rep.truthful_partner)},
                 {"manipulated_partner", person(partner_side, rep.manipulated_partner)},
                 {"reported_list", list},
                 {"verdict", verdict}};
        std::cout << doc.dump() << "\n";
        return;
    }
    std::cout << "agent: " << person(rep.agent.gender, rep.agent.index)
              << "\ntruthful partner: " << person(partner_side, rep.truthful_partner)
              << "\nmanipulated partner: " << person(partner_side, rep.manipulated_partner)
              << "\nreported list:";
    for (int x : rep.reported_list)
        std::cout << ' ' << person(partner_side, x);
    std::cout << "\nverdict: " << verdict << "\n";
}

Verdict verdict_of(const Profile& p, Agent agent, int truthful, int manipulated) {
    const int t = p.rank(agent.gender, agent.index, truthful);
    const int g = p.rank(agent.gender, agent.index, manipulated);
    return g < t ? Verdict::strictly_better : g == t ? Verdict::unchanged : Verdict::strictly_worse;
}

int run(int argc, char** argv) {
    CLI::App app{"stable marriage procedures, signatures, and manipulation analysis"};
    app.require_subcommand(1);

    std::string input, graph_path, proc_name = "gs-male", rule_name = "stv";
    std::string format = "text", sig_mode = "peer-indifferent", mode, agent_text, target = "men";
    std::string what = "profile";
    int bound = 8, manip_bound = 6, n_value = 4, edge_percent = 50;
    unsigned seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", input, "profile file, or - for stdin")->required();
        cmd->add_option("--format", format, "text | json");
        cmd->add_option("--signature-mode", sig_mode, "peer-indifferent | simple");
    };

    auto* solve = app.add_subcommand("solve", "run one procedure and print the matching");
    add_common(solve, true);
    solve->add_option("--proc", proc_name, "gs-male | gs-female | gn:<proc> | score | lexmin:<rule> | ht");

    auto* signature = app.add_subcommand("signature", "print both signatures and the swap decision");
    add_common(signature, true);

    auto* gn = app.add_subcommand("gn", "apply the pre-round and print the oriented profile");
    add_common(gn, true);

    auto* enumerate = app.add_subcommand("enumerate", "list every stable matching");
    add_common(enumerate, true);
    enumerate->add_option("--bound", bound, "brute-force size bound (default 8)");

    auto* stv = app.add_subcommand("stv", "popularity order with per-round tallies");
    add_common(stv, true);
    stv->add_option("--target", target, "men | women");
    stv->add_option("--rule", rule_name, "stv | plurality");

    auto* manipulate = app.add_subcommand("manipulate", "search or apply manipulations");
    add_common(manipulate, true);
    manipulate->add_option("--mode", mode, "universal | brute | firstlast")->required();
    manipulate->add_option("--agent", agent_text, "m<i> or w<i>")->required();
    manipulate->add_option("--proc", proc_name, "procedure under attack");
    manipulate->add_option("--bound", manip_bound, "report-search size bound (default 6)");

    auto* reduce = app.add_subcommand("reduce", "emit the path-gate reduction profile for a graph");
    reduce->add_option("--graph", graph_path, "graph file, or - for stdin")->required();
    reduce->add_option("--format", format, "text | json");

    auto* gen = app.add_subcommand("gen", "seeded random profile or graph");
    gen->add_option("--what", what, "profile | graph");
    gen->add_option("--n", n_value, "people per side, or vertices");
    gen->add_option("--edge-percent", edge_percent, "edge probability for graphs");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--format", format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 1;
    }
    const bool as_json = format == "json";

    if (solve->parsed()) {
        const Profile p = parse_profile(slurp(input));
        if (proc_name == "ht" && p.size() < 3)
            throw std::invalid_argument("ht needs a profile with n+3 people per side (n >= 0)");
        const Matching mu = find_procedure(proc_name, parse_mode(sig_mode))(p);
        const bool stable = is_stable(p, mu);
        if (as_json)
            std::cout << json{{"procedure", proc_name},
                              {"matching", json::parse(matching_to_json(mu))},
                              {"stable", stable}}
                             .dump()
                      << "\n";
        else
            std::cout << format_matching(mu) << "\nstable: " << (stable ? "yes" : "no") << "\n";
        return 0;
    }

    if (signature->parsed() || gn->parsed()) {
        const Profile p = parse_profile(slurp(input));
        const SignatureMode m = parse_mode(sig_mode);
        const Signature ms = m == SignatureMode::simple ? simple_signature(p, Gender::men)
                                                        : gender_signature(p, Gender::men);
        const Signature ws = m == SignatureMode::simple ? simple_signature(p, Gender::women)
                                                        : gender_signature(p, Gender::women);
        const GnDecision decision = gn_rule(p, m);
        if (as_json) {
            json doc{{"men", ms.str()},
                     {"women", ws.str()},
                     {"decision", decision.swapped ? "swap" : "keep"}};
            if (gn->parsed())
                doc["profile"] = json::parse(profile_to_json(decision.profile));
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "men: " << ms.str() << "  women: " << ws.str()
                      << "  decision: " << (decision.swapped ? "swap" : "keep") << "\n";
            if (gn->parsed())
                std::cout << serialize_profile(decision.profile);
        }
        return 0;
    }

    if (enumerate->parsed()) {
        const Profile p = parse_profile(slurp(input));
        const auto all = all_stable_matchings(p, bound);
        if (as_json) {
            json list = json::array();
            for (const auto& mu : all)
                list.push_back(json::parse(matching_to_json(mu)));
            std::cout << json{{"count", all.size()}, {"stable_matchings", list}}.dump() << "\n";
        } else {
            for (const auto& mu : all)
                std::cout << format_matching(mu) << "\n";
            std::cout << "count: " << all.size() << "\n";
        }
        return 0;
    }

    if (stv->parsed()) {
        const Profile p = parse_profile(slurp(input));
        if (rule_name != "stv" && rule_name != "plurality")
            throw CLI::ValidationError("--rule", "must be stv or plurality");
        const bool over_men = target == "men";
        std::vector<std::string> names;
        for (int i = 1; i <= p.size(); ++i)
            names.push_back((over_men ? "m" : "w") + std::to_string(i));
        const Election e =
            make_election(names, over_men ? p.women_prefs() : p.men_prefs());
        std::vector<std::string> trace;
        std::vector<int> order;
        if (rule_name == "stv")
            order = stv_order(e, &trace);
        else
            order = plurality_order(e);
        for (const auto& line : trace)
            std::cout << line << "\n";
        std::cout << "order:";
        for (int c : order)
            std::cout << ' ' << names[c];
        std::cout << "\n";
        return 0;
    }

    if (manipulate->parsed()) {
        const Profile p = parse_profile(slurp(input));
        const Agent agent = parse_agent(agent_text);
        if (agent.index < 0 || agent.index >= p.size())
            throw std::invalid_argument("agent index out of range");
        const auto proc = find_procedure(proc_name, parse_mode(sig_mode));

        if (mode == "universal") {
            if (agent.gender != Gender::women)
                throw std::invalid_argument("universal manipulation is defined for women");
            const auto witness = universally_manipulable_by(p, agent.index);
            if (!witness) {
                std::cout << (as_json ? "{\"universally_manipulable\":false}"
                                      : "not universally manipulable")
                          << "\n";
                return 0;
            }
            const Profile manipulated = universal_manipulation(p, agent.index);
            const int truthful = proc(p).husband_of(agent.index);
            const int got = proc(manipulated).husband_of(agent.index);
            ManipulationReport rep{agent, truthful, got,
                                   manipulated.women_prefs()[agent.index],
                                   verdict_of(p, agent, truthful, got)};
            if (!as_json)
                std::cout << "witness: m=" << person(Gender::men, witness->male_optimal_partner)
                          << " n=" << person(Gender::men, witness->female_optimal_partner)
                          << " v=" << person(Gender::women, witness->linking_woman) << "\n";
            print_report(rep, as_json);
            return 0;
        }
        if (mode == "brute") {
            const auto rep = brute_force_manipulation(proc, p, agent, manip_bound);
            if (!rep) {
                std::cout << (as_json ? "{\"improvement\":false}" : "no strictly better report")
                          << "\n";
                return 0;
            }
            print_report(*rep, as_json);
            return 0;
        }
        if (mode == "firstlast") {
            if (agent.gender != Gender::men)
                throw std::invalid_argument("the first/last rewrite is defined for men");
            const Profile rewritten = firstlast_heuristic(p, agent.index);
            const int truthful = proc(p).wife_of(agent.index);
            const int got = proc(rewritten).wife_of(agent.index);
            ManipulationReport rep{agent, truthful, got, rewritten.men_prefs()[agent.index],
                                   verdict_of(p, agent, truthful, got)};
            print_report(rep, as_json);
            return 0;
        }
        throw CLI::ValidationError("--mode", "must be universal, brute, or firstlast");
    }

    if (reduce->parsed()) {
        const DiGraph g = parse_digraph(slurp(graph_path));
        const Profile p = build_reduction_profile(g);
        std::cout << (as_json ? profile_to_json(p) + "\n" : serialize_profile(p));
        return 0;
    }

    if (gen->parsed()) {
        SeededRng rng(seed);
        if (what == "profile") {
            const Profile p = random_profile(n_value, rng);
            if (as_json)
                std::cout << json{{"seed", seed},
                                  {"algorithm", SeededRng::algorithm},
                                  {"profile", json::parse(profile_to_json(p))}}
                                 .dump()
                          << "\n";
            else
                std::cout << "# seed=" << seed << " algorithm=" << SeededRng::algorithm << "\n"
                          << serialize_profile(p);
            return 0;
        }
        if (what == "graph") {
            const DiGraph g = random_digraph(n_value, edge_percent, rng);
            std::cout << "# seed=" << seed << " algorithm=" << SeededRng::algorithm << "\n"
                      << serialize_digraph(g);
            return 0;
        }
        throw CLI::ValidationError("--what", "must be profile or graph");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const smp::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const smp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
