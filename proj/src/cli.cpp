#include "respdeg/cli.hpp"

#include "respdeg/generator.hpp"
#include "respdeg/model_io.hpp"
#include "respdeg/oracle.hpp"
#include "respdeg/parallel.hpp"
#include "respdeg/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace respdeg
{

namespace
{

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t default_report_agent_cap = 20;

struct options
{
    std::string model_path;
    std::string state;
    std::string affairs;
    std::string coalition;
    std::string semantics = "future";
    std::string format = "table";
    unsigned precision = 4;
    unsigned threads = default_thread_count();
    bool strict = false;
    bool timings = false;
    bool force = false;
    bool minimal_only = false;

    generator_params generator;
    double affairs_density = 0.25;
};

class usage_error : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct query
{
    loaded_model loaded;
    std::string hash;
    state_id state;
    state_set affairs;
    coalition members;
    preclusion_semantics semantics = preclusion_semantics::future_avoidance;
    report_format format = report_format::table;
};

void add_model(CLI::App& cmd, options& opt)
{
    cmd.add_option("--model", opt.model_path, "Model file (JSON)")->required();
}

void add_query(CLI::App& cmd, options& opt, bool with_coalition)
{
    add_model(cmd, opt);
    cmd.add_option("--state", opt.state, "State name")->required();
    cmd.add_option("--affairs", opt.affairs, "Comma separated states, or @label")->required();
    if (with_coalition)
        cmd.add_option("--coalition", opt.coalition, "Comma separated agents (empty for none)")->required();
    cmd.add_option("--semantics", opt.semantics, "future or include-initial")
        ->check(CLI::IsMember({ "future", "include-initial" }));
    cmd.add_option("--format", opt.format, "table, json or csv")->check(CLI::IsMember({ "table", "json", "csv" }));
    cmd.add_option("--precision", opt.precision, "Decimal places")->check(CLI::Range(0, 18));
    cmd.add_flag("--strict", opt.strict, "Exit 1 on undefined or empty outcomes");
    cmd.add_flag("--timings", opt.timings, "Print elapsed time to stderr");
    cmd.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 1024));
}

std::string read_file(const std::string& path)
{
    std::ifstream in{ path, std::ios::binary };
    if (!in)
        throw model_error(diagnostic{ error_kind::syntax_error, "cannot read model file " + path, {}, std::nullopt });
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

loaded_model load_file(const std::string& path) { return load_model(read_file(path)); }

query resolve(const options& opt, bool with_coalition)
{
    query q{ load_file(opt.model_path), {}, {}, {}, {}, {}, {} };
    const auto& model = q.loaded.model;
    q.hash = content_hash(serialize_model(model, q.loaded.affairs));
    try
    {
        auto s = model.find_state(opt.state);
        if (!s)
            throw model_error(diagnostic{ error_kind::unknown_name, "unknown state \"" + opt.state + "\"", {}, std::nullopt });
        q.state = *s;
        q.affairs = parse_affairs(opt.affairs, model, q.loaded.affairs);
        if (with_coalition)
            q.members = parse_coalition(opt.coalition, model);
    }
    catch (const model_error& e)
    {
        std::string message;
        for (const auto& d : e.diagnostics())
            message += (message.empty() ? "" : "\n") + d.to_string();
        throw usage_error(message);
    }
    q.semantics = opt.semantics == "include-initial" ? preclusion_semantics::include_initial
                                                     : preclusion_semantics::future_avoidance;
    q.format = *parse_report_format(opt.format);
    return q;
}

ordered_json names_json(const cgs& model, coalition c)
{
    auto out = ordered_json::array();
    for (auto a : c.members())
        out.push_back(model.agent_name(a));
    return out;
}

ordered_json degree_json(const degree_value& v, unsigned precision)
{
    return ordered_json{ { "fraction", v.fraction() }, { "decimal", v.decimal(precision) } };
}

std::string csv_coalition(const cgs& model, coalition c)
{
    const auto names = format_coalition(model, c);
    return "\"" + names.substr(1, names.size() - 2) + "\"";
}

int cmd_validate(const options& opt, std::ostream& out)
{
    const auto loaded = load_file(opt.model_path);
    const auto& m = loaded.model;
    out << "valid: " << m.num_agents() << " agents, " << m.num_states() << " states, " << m.num_actions()
        << " actions, " << m.num_transitions() << " transitions";
    if (!loaded.affairs.empty())
    {
        out << "; affairs:";
        for (const auto& [label, _] : loaded.affairs)
            out << " @" << label;
    }
    out << "\n";
    return exit_code::ok;
}

int cmd_responsible(const options& opt, std::ostream& out)
{
    const auto q = resolve(opt, false);
    const auto& model = q.loaded.model;
    const auto responsible = responsible_coalitions(model, q.state, q.affairs, q.semantics, opt.threads);
    const auto listed = opt.minimal_only ? minimal_responsible_coalitions(responsible) : responsible.coalitions;

    switch (q.format)
    {
    case report_format::json:
    {
        auto arr = ordered_json::array();
        for (auto c : listed)
            arr.push_back(names_json(model, c));
        out << arr.dump(2) << "\n";
        break;
    }
    case report_format::csv:
        out << "coalition\n";
        for (auto c : listed)
            out << csv_coalition(model, c) << "\n";
        break;
    case report_format::table:
        if (listed.empty())
            out << "none\n";
        for (auto c : listed)
            out << format_coalition(model, c) << "\n";
        break;
    }
    return opt.strict && responsible.empty() ? exit_code::empty_outcome : exit_code::ok;
}

int cmd_sdr(const options& opt, std::ostream& out)
{
    const auto q = resolve(opt, true);
    const auto& model = q.loaded.model;
    const auto result = sdr(model, q.state, q.affairs, q.members, q.semantics, opt.threads);

    switch (q.format)
    {
    case report_format::json:
    {
        ordered_json j;
        j["coalition"] = names_json(model, q.members);
        j["sdr"] = result.value ? degree_json(*result.value, opt.precision) : ordered_json("undefined");
        j["witness"] = result.witness ? names_json(model, *result.witness) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
        break;
    }
    case report_format::csv:
        out << "coalition,sdr\n"
            << csv_coalition(model, q.members) << "," << (result.value ? result.value->fraction() : "undefined")
            << "\n";
        break;
    case report_format::table:
        out << (result.value ? result.value->to_string(opt.precision) : "undefined") << "\n";
        break;
    }
    return opt.strict && !result.defined() ? exit_code::empty_outcome : exit_code::ok;
}

int cmd_fdr(const options& opt, std::ostream& out)
{
    const auto q = resolve(opt, true);
    const auto& model = q.loaded.model;
    const auto result = fdr(model, q.state, q.affairs, q.members, q.semantics);
    const auto distance = result.distance ? std::to_string(*result.distance) : std::string{ "inf" };

    switch (q.format)
    {
    case report_format::json:
    {
        ordered_json j;
        j["coalition"] = names_json(model, q.members);
        j["fdr"] = degree_json(result.value, opt.precision);
        j["distance"] = result.distance ? ordered_json(*result.distance) : ordered_json("inf");
        if (result.witness)
        {
            auto states = ordered_json::array();
            for (auto s : result.witness->states)
                states.push_back(model.state_name(s));
            auto profiles = ordered_json::array();
            for (const auto& p : result.witness->profiles)
            {
                ordered_json prof = ordered_json::object();
                for (std::size_t a = 0; a < p.choices.size(); ++a)
                    prof[model.agent_name(agent_id{ a })] = model.action_name(p.choices[a]);
                profiles.push_back(std::move(prof));
            }
            j["witness"] = ordered_json{ { "states", std::move(states) }, { "profiles", std::move(profiles) } };
        }
        else
        {
            j["witness"] = nullptr;
        }
        out << j.dump(2) << "\n";
        break;
    }
    case report_format::csv:
        out << "coalition,fdr,distance\n"
            << csv_coalition(model, q.members) << "," << result.value.fraction() << "," << distance << "\n";
        break;
    case report_format::table:
        out << result.value.to_string(opt.precision) << "\n";
        out << "distance: " << distance << "\n";
        if (result.witness)
            out << "witness: " << format_sequence(model, *result.witness) << "\n";
        break;
    }
    return opt.strict && !result.distance ? exit_code::empty_outcome : exit_code::ok;
}

int cmd_report(const options& opt, std::ostream& out)
{
    const auto q = resolve(opt, false);
    const auto& model = q.loaded.model;
    if (model.num_agents() > default_report_agent_cap && !opt.force)
        throw usage_error("report over " + std::to_string(model.num_agents()) + " agents has 2^" +
                          std::to_string(model.num_agents()) + "-1 rows; pass --force to run it anyway");
    const auto report =
        build_report(model, q.state, q.affairs, q.semantics, opt.threads, opt.model_path, q.hash);
    out << render_report(model, report, q.format, opt.precision);
    return opt.strict && report.minimal_responsible.empty() ? exit_code::empty_outcome : exit_code::ok;
}

int cmd_oracle(const options& opt, std::ostream& out)
{
    const auto q = resolve(opt, true);
    const auto& model = q.loaded.model;
    const bool verdict = oracle_can_preclude(model, q.members, q.state, q.affairs, q.semantics);
    const auto distance = oracle_distance(model, q.members, q.state, q.affairs, q.semantics);
    out << "can_preclude: " << (verdict ? "true" : "false") << "\n";
    out << "distance: " << (distance ? std::to_string(*distance) : std::string{ "inf" }) << "\n";
    return exit_code::ok;
}

int cmd_generate(const options& opt, std::ostream& out)
{
    const auto model = generate_model(opt.generator);
    named_affairs affairs;
    affairs.emplace("bad", generate_affairs(model.num_states(), opt.affairs_density, opt.generator.seed ^ 0x5eedULL));
    out << serialize_model(model, affairs);
    return exit_code::ok;
}

void print_diagnostics(const model_error& e, std::ostream& err)
{
    for (const auto& d : e.diagnostics())
        err << "error: " << d.to_string() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{ "Coalition responsibility analysis for concurrent game structures", "respdeg" };
    app.require_subcommand(0, 1);
    options opt;

    auto* validate = app.add_subcommand("validate", "Check a model file");
    add_model(*validate, opt);

    auto* responsible = app.add_subcommand("responsible", "List the responsible coalitions at a state");
    add_query(*responsible, opt, false);
    responsible->add_flag("--minimal-only", opt.minimal_only, "Only the subset-minimal coalitions");

    auto* sdr_cmd = app.add_subcommand("sdr", "Structural degree of responsibility of a coalition");
    add_query(*sdr_cmd, opt, true);

    auto* fdr_cmd = app.add_subcommand("fdr", "Functional degree of responsibility of a coalition");
    add_query(*fdr_cmd, opt, true);

    auto* report = app.add_subcommand("report", "Degrees of every non-empty coalition");
    add_query(*report, opt, false);
    report->add_flag("--force", opt.force, "Allow more than 20 agents");

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference verdict")->group("");
    add_query(*oracle, opt, true);

    auto* generate = app.add_subcommand("generate", "Print a seeded random model")->group("");
    generate->add_option("--agents", opt.generator.agents)->check(CLI::Range(1, 64));
    generate->add_option("--states", opt.generator.states)->check(CLI::Range(1, 1 << 20));
    generate->add_option("--actions", opt.generator.actions)->check(CLI::Range(1, 1 << 10));
    generate->add_option("--density", opt.generator.density)->check(CLI::Range(0.0, 1.0));
    generate->add_option("--max-available", opt.generator.max_available);
    generate->add_option("--affairs-density", opt.affairs_density)->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", opt.generator.seed);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_code::usage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = exit_code::ok;
    try
    {
        if (validate->parsed())
            code = cmd_validate(opt, out);
        else if (responsible->parsed())
            code = cmd_responsible(opt, out);
        else if (sdr_cmd->parsed())
            code = cmd_sdr(opt, out);
        else if (fdr_cmd->parsed())
            code = cmd_fdr(opt, out);
        else if (report->parsed())
            code = cmd_report(opt, out);
        else if (oracle->parsed())
            code = cmd_oracle(opt, out);
        else if (generate->parsed())
            code = cmd_generate(opt, out);
        else
        {
            err << app.help();
            return exit_code::usage;
        }
    }
    catch (const usage_error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    catch (const model_error& e)
    {
        print_diagnostics(e, err);
        return exit_code::model;
    }
    catch (const budget_exceeded& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    catch (const std::length_error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    if (opt.timings)
    {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        err << "elapsed: " << elapsed.count() << " ms\n";
    }
    return code;
}

} // namespace respdeg
