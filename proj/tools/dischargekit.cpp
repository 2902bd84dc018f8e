// dischargekit: command-line front end.
//
//   dischargekit detect      --input graphs.g6
//   dischargekit choosable   --input graphs.g6 --k 4
//   dischargekit alon-tarsi  --input orientation.json
//   dischargekit reduce      [--input configs.json]
//   dischargekit discharge   --input embedding.json [--rules rules.json]
//   dischargekit repro-paper
//
// Exit status: 0 all checks passed, 1 a check found violations or
// witnesses, 2 bad input or an enumeration limit was hit.

#include <dischargekit/alon_tarsi.hpp>
#include <dischargekit/choosability.hpp>
#include <dischargekit/discharging.hpp>
#include <dischargekit/fixtures.hpp>
#include <dischargekit/graph6.hpp>
#include <dischargekit/json_io.hpp>
#include <dischargekit/repro.hpp>
#include <dischargekit/structures.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dk = dischargekit;
using dk::json::Json;

namespace {

enum class Format { graph6, embedding_json, orientation_json, config_json };

struct RunConfig {
    std::string command;
    std::string input;
    std::optional<Format> format;
    std::string rules;
    std::string output;
    bool summary = false;
    int k = 4;
    std::vector<int> sizes;
    int limit_arcs = dk::default_arc_limit;
    int limit_n = 10;
};

struct Outcome {
    Json report;
    bool clean = true;              // false: violations or witnesses found
    std::vector<std::string> table; // --summary lines
};

std::string read_input(const std::string& path)
{
    if (path.empty())
        throw dk::error(dk::errc::parse_error, "--input is required for this command");
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw dk::error(dk::errc::parse_error, "cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Format default_format(const RunConfig& cfg)
{
    if (cfg.format)
        return *cfg.format;
    if (cfg.command == "discharge")
        return Format::embedding_json;
    if (cfg.command == "alon-tarsi")
        return Format::orientation_json;
    if (cfg.command == "reduce")
        return Format::config_json;
    return cfg.input.ends_with(".json") ? Format::embedding_json : Format::graph6;
}

/// Graph inputs for detect/choosable/alon-tarsi: graph6 lines, or one
/// embedding (object) or several (array).
std::vector<dk::Graph> read_graphs(const RunConfig& cfg, Format fmt)
{
    auto text = read_input(cfg.input);
    std::vector<dk::Graph> out;
    if (fmt == Format::graph6) {
        std::istringstream in(text);
        out = dk::graph6::read_all(in);
    } else if (fmt == Format::embedding_json) {
        auto j = dk::json::parse_or_throw(text);
        if (j.is_array())
            for (const auto& e : j)
                out.push_back(dk::json::embedding_from_json(e).graph());
        else
            out.push_back(dk::json::embedding_from_json(j).graph());
    } else {
        throw dk::error(dk::errc::parse_error, "format not accepted by '" + cfg.command + "'");
    }
    return out;
}

dk::SearchLimits limits_of(const RunConfig& cfg) { return dk::SearchLimits{cfg.limit_n, 0}; }

Outcome run_detect(const RunConfig& cfg)
{
    Outcome o;
    Json graphs = Json::array();
    for (const auto& g : read_graphs(cfg, default_format(cfg))) {
        Json entry{{"graph6", dk::graph6::encode(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
        Json conds = Json::array();
        std::string line = dk::graph6::encode(g) + ":";
        for (auto c : {dk::Condition::thm1, dk::Condition::thm2, dk::Condition::corollary}) {
            auto r = dk::check_condition(g, c);
            o.clean = o.clean && r.holds;
            conds.push_back(dk::json::to_json(r));
            line += " " + std::string(dk::to_string(c)) + "=" + (r.holds ? "holds" : "violated");
        }
        entry["conditions"] = conds;

        Json trios = Json::array();
        for (const auto& t : dk::find_trios(g))
            trios.push_back(dk::json::to_json(t));
        entry["trios"] = trios;

        dk::RoleClassifier rc(g);
        Json roles = Json::array();
        for (const auto& t : dk::enumerate_triangles(g)) {
            Json per = Json::object();
            for (auto s : t)
                per[std::to_string(s)] = std::string(dk::to_string(rc.role(s, t)));
            const int count = rc.trio_count(t);
            roles.push_back(Json{{"triangle", t}, {"trio_count", count}, {"multi_trio", count > 1}, {"roles", per}});
        }
        entry["roles"] = roles;

        Json configs = Json::array();
        for (const auto& m : dk::find_fixed_configs(g))
            configs.push_back(dk::json::to_json(m));
        entry["fixed_configs"] = configs;
        entry["low_degree_vertices"] = dk::verify_min_degree(g);
        line += " trios=" + std::to_string(trios.size()) + " configs=" + std::to_string(configs.size());
        o.table.push_back(line);
        graphs.push_back(entry);
    }
    o.report = Json{{"command", "detect"}, {"graphs", graphs}};
    return o;
}

Outcome run_choosable(const RunConfig& cfg)
{
    Outcome o;
    Json results = Json::array();
    for (const auto& g : read_graphs(cfg, default_format(cfg))) {
        auto r = dk::is_k_choosable(g, cfg.k, limits_of(cfg));
        o.clean = o.clean && r.holds;
        Json entry{{"graph6", dk::graph6::encode(g)}, {"k", cfg.k}};
        entry.update(dk::json::to_json(r));
        results.push_back(entry);
        o.table.push_back(dk::graph6::encode(g) + ": " + std::to_string(cfg.k) + "-choosable=" +
                          (r.holds ? "yes" : "no"));
    }
    o.report = Json{{"command", "choosable"}, {"results", results}};
    return o;
}

Outcome run_alon_tarsi(const RunConfig& cfg)
{
    Outcome o;
    const Format fmt = default_format(cfg);
    if (fmt == Format::orientation_json) {
        auto j = dk::json::parse_or_throw(read_input(cfg.input));
        std::vector<Json> items;
        if (j.is_array())
            items.assign(j.begin(), j.end());
        else
            items.push_back(j);
        Json results = Json::array();
        for (const auto& item : items) {
            auto d = dk::json::orientation_from_json(item);
            auto counts = dk::count_eulerian(d, cfg.limit_arcs);
            Json entry{{"name", item.value("name", std::string())},
                       {"counts", dk::json::to_json(counts)},
                       {"outdegrees", d.outdegrees()}};
            bool ok = counts.even != counts.odd;
            std::vector<int> sizes = cfg.sizes;
            if (sizes.empty() && item.contains("sizes"))
                sizes = item["sizes"].get<std::vector<int>>();
            if (!sizes.empty()) {
                bool applicable = dk::verify_at_applicable(d, sizes, cfg.limit_arcs);
                entry["sizes"] = sizes;
                entry["applicable"] = applicable;
                ok = applicable;
            }
            o.clean = o.clean && ok;
            results.push_back(entry);
            o.table.push_back((entry["name"].get<std::string>().empty() ? std::string("orientation")
                                                                        : entry["name"].get<std::string>()) +
                              ": EE=" + std::to_string(counts.even) + " EO=" + std::to_string(counts.odd) +
                              (entry.contains("applicable") ? std::string(" applicable=") +
                                                                  (entry["applicable"].get<bool>() ? "yes" : "no")
                                                            : std::string()));
        }
        o.report = Json{{"command", "alon-tarsi"}, {"results", results}};
        return o;
    }
    Json results = Json::array();
    for (const auto& g : read_graphs(cfg, fmt)) {
        std::vector<int> sizes = cfg.sizes;
        if (sizes.empty())
            sizes.assign(static_cast<std::size_t>(g.vertex_count()), cfg.k);
        auto cert = dk::find_certificate(g, sizes, cfg.limit_arcs);
        o.clean = o.clean && cert.has_value();
        Json entry{{"graph6", dk::graph6::encode(g)}, {"sizes", sizes}};
        entry["certificate"] = cert ? dk::json::to_json(*cert) : Json(nullptr);
        results.push_back(entry);
        o.table.push_back(dk::graph6::encode(g) + ": certificate=" + (cert ? "found" : "none"));
    }
    o.report = Json{{"command", "alon-tarsi"}, {"results", results}};
    return o;
}

Outcome run_reduce(const RunConfig& cfg)
{
    Outcome o;
    std::vector<dk::ReducibleConfig> configs;
    if (cfg.input.empty()) {
        configs = {dk::fixtures::four_face_residual(), dk::fixtures::h_residual()};
        for (const auto& oc : dk::fixtures::oriented_configs())
            configs.push_back(dk::ReducibleConfig{oc.name, oc.orientation.base(), oc.sizes, {}, oc.labels});
    } else {
        if (default_format(cfg) != Format::config_json)
            throw dk::error(dk::errc::parse_error, "reduce reads config-json");
        auto j = dk::json::parse_or_throw(read_input(cfg.input));
        if (j.is_array())
            for (const auto& c : j)
                configs.push_back(dk::json::config_from_json(c));
        else
            configs.push_back(dk::json::config_from_json(j));
    }
    Json results = Json::array();
    for (const auto& c : configs) {
        auto plain = dk::check_extension_detailed(c, limits_of(cfg));
        Json entry{{"config", dk::json::to_json(c)}, {"extends", plain.holds}};
        entry["witness"] = plain.witness ? dk::json::to_json(*plain.witness) : Json(nullptr);
        bool verdict = plain.holds;
        if (!c.choice_set.empty()) {
            auto re = dk::check_extension_with_rechoice_detailed(c, limits_of(cfg));
            entry["extends_with_rechoice"] = re.holds;
            verdict = re.holds;
        }
        if (c.inner.edge_count() <= cfg.limit_arcs) {
            auto cert = dk::find_certificate(c.inner, c.residual_sizes, cfg.limit_arcs);
            entry["alon_tarsi_certificate"] = cert ? dk::json::to_json(*cert) : Json(nullptr);
        }
        o.clean = o.clean && verdict;
        o.table.push_back(c.name + ": " + (verdict ? "reducible" : "NOT reducible"));
        results.push_back(entry);
    }
    o.report = Json{{"command", "reduce"}, {"results", results}};
    return o;
}

Outcome run_discharge(const RunConfig& cfg)
{
    if (default_format(cfg) != Format::embedding_json)
        throw dk::error(dk::errc::parse_error, "discharge requires embedding-json input");
    auto emb = dk::json::embedding_from_json(dk::json::parse_or_throw(read_input(cfg.input)));
    dk::RuleSet rules;
    if (!cfg.rules.empty())
        rules = dk::json::rules_from_json(dk::json::parse_or_throw(read_input(cfg.rules)));
    auto ledger = dk::apply_rules(emb, rules);
    auto report = dk::final_report(ledger);
    Outcome o;
    o.clean = report.negatives.empty();
    o.report = Json{{"command", "discharge"},
                    {"rules", dk::json::to_json(rules)},
                    {"ledger", dk::json::to_json(ledger)},
                    {"report", dk::json::to_json(report)}};
    auto total = report.total;
    o.table.push_back("total charge: " + std::to_string(total.numerator()) +
                      (total.denominator() == 1 ? "" : "/" + std::to_string(total.denominator())));
    for (const auto& n : report.negatives)
        o.table.push_back(std::string(n.site.kind == dk::ChargeSite::Kind::vertex ? "vertex " : "face ") +
                          std::to_string(n.site.index) + " (degree " + std::to_string(n.degree) +
                          "): " + std::to_string(n.charge.numerator()) +
                          (n.charge.denominator() == 1 ? "" : "/" + std::to_string(n.charge.denominator())));
    return o;
}

Outcome run_repro(const RunConfig& cfg)
{
    Outcome o;
    Json rows = Json::array();
    for (const auto& c : dk::repro::run_all(limits_of(cfg), cfg.limit_arcs)) {
        o.clean = o.clean && c.passed;
        rows.push_back(Json{{"check", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.passed}});
        std::ostringstream line;
        line << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(48) << c.name << " expected " << c.expected
             << ", observed " << c.observed;
        o.table.push_back(line.str());
    }
    o.report = Json{{"command", "repro-paper"}, {"checks", rows}};
    return o;
}

int run(const RunConfig& cfg)
{
    Outcome o;
    if (cfg.command == "detect")
        o = run_detect(cfg);
    else if (cfg.command == "choosable")
        o = run_choosable(cfg);
    else if (cfg.command == "alon-tarsi")
        o = run_alon_tarsi(cfg);
    else if (cfg.command == "reduce")
        o = run_reduce(cfg);
    else if (cfg.command == "discharge")
        o = run_discharge(cfg);
    else
        o = run_repro(cfg);

    const std::string text = o.report.dump(2) + "\n";
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out)
            throw dk::error(dk::errc::parse_error, "cannot write " + cfg.output);
        out << text;
    }
    if (cfg.summary) {
        for (const auto& line : o.table)
            std::cout << line << "\n";
    } else if (cfg.output.empty()) {
        std::cout << text;
    }
    return o.clean ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks for discharging proofs of 4-choosability"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format;
    app.add_option("--input", cfg.input, "input file ('-' for stdin)");
    app.add_option("--format", format, "graph6 | embedding-json | orientation-json | config-json")
        ->check(CLI::IsMember({"graph6", "embedding-json", "orientation-json", "config-json"}));
    app.add_option("--rules", cfg.rules, "JSON rule-set overrides (discharge)");
    app.add_option("--limit-arcs", cfg.limit_arcs, "arc cap for Eulerian enumeration")->check(CLI::Range(0, 62));
    app.add_option("--limit-n", cfg.limit_n, "vertex cap for list-assignment enumeration")->check(CLI::Range(0, 64));
    app.add_option("--output", cfg.output, "write the JSON report here");
    app.add_flag("--summary", cfg.summary, "print a human-readable table");
    app.add_option("--k", cfg.k, "list size for choosable / alon-tarsi on graphs")->check(CLI::PositiveNumber);
    app.add_option("--sizes", cfg.sizes, "per-vertex list sizes (alon-tarsi)")->delimiter(',');

    const std::pair<const char*, const char*> commands[] = {
        {"detect", "report trios and the thm1 / thm2 / corollary conditions"},
        {"choosable", "decide k-choosability by list-assignment enumeration"},
        {"alon-tarsi", "count even/odd Eulerian subdigraphs or search for a certificate"},
        {"reduce", "check that reducible configurations extend"},
        {"discharge", "run the discharging rules on a plane embedding"},
        {"repro-paper", "re-run the built-in reference checks"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->callback([&cfg, name] { cfg.command = name; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (format == "graph6")
        cfg.format = Format::graph6;
    else if (format == "embedding-json")
        cfg.format = Format::embedding_json;
    else if (format == "orientation-json")
        cfg.format = Format::orientation_json;
    else if (format == "config-json")
        cfg.format = Format::config_json;

    try {
        return run(cfg);
    } catch (const dk::error& e) {
        std::cerr << "dischargekit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dischargekit: " << e.what() << "\n";
        return 2;
    }
}
