#include "respdeg/report.hpp"

#include "respdeg/model_io.hpp"
#include "respdeg/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace respdeg
{

using ordered_json = nlohmann::ordered_json;

std::optional<report_format> parse_report_format(std::string_view text)
{
    if (text == "table")
        return report_format::table;
    if (text == "json")
        return report_format::json;
    if (text == "csv")
        return report_format::csv;
    return std::nullopt;
}

responsibility_report build_report(const cgs& model, state_id state, const state_set& affairs,
                                   preclusion_semantics semantics, unsigned threads, std::string model_id,
                                   std::string model_hash)
{
    responsibility_report report;
    report.model_id = std::move(model_id);
    report.model_hash = std::move(model_hash);
    report.state = state;
    report.affairs = affairs;
    report.semantics = semantics;

    const auto responsible = responsible_coalitions(model, state, affairs, semantics, threads);
    report.minimal_responsible = minimal_responsible_coalitions(responsible);

    const preclusion_cache cache{ model, affairs, semantics };
    const auto coalitions = coalitions_by_size(model.num_agents(), false);
    report.rows.resize(coalitions.size());
    parallel_for(coalitions.size(), threads, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.members = coalitions[i];
        row.responsible = responsible.contains(row.members);
        row.sdr = sdr(responsible, row.members);
        row.fdr = fdr(cache, state, row.members);
    });
    return report;
}

namespace
{

ordered_json names_of(const cgs& model, coalition c)
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

ordered_json sequence_json(const cgs& model, const power_acquisition_sequence& seq)
{
    ordered_json out;
    auto states = ordered_json::array();
    for (auto q : seq.states)
        states.push_back(model.state_name(q));
    auto profiles = ordered_json::array();
    for (const auto& p : seq.profiles)
    {
        ordered_json prof = ordered_json::object();
        for (std::size_t a = 0; a < p.choices.size(); ++a)
            prof[model.agent_name(agent_id{ a })] = model.action_name(p.choices[a]);
        profiles.push_back(std::move(prof));
    }
    out["states"] = std::move(states);
    out["profiles"] = std::move(profiles);
    return out;
}

std::string render_json(const cgs& model, const responsibility_report& report, unsigned precision)
{
    ordered_json root;
    root["model"] = ordered_json{ { "id", report.model_id }, { "hash", report.model_hash } };
    root["state"] = model.state_name(report.state);
    auto affairs = ordered_json::array();
    for (auto q : report.affairs.elements())
        affairs.push_back(model.state_name(q));
    root["affairs"] = std::move(affairs);
    root["semantics"] = std::string{ to_string(report.semantics) };

    auto rows = ordered_json::array();
    for (const auto& row : report.rows)
    {
        ordered_json r;
        r["coalition"] = names_of(model, row.members);
        r["responsible"] = row.responsible;
        r["sdr"] = row.sdr.value ? degree_json(*row.sdr.value, precision) : ordered_json("undefined");
        r["sdr_witness"] = row.sdr.witness ? names_of(model, *row.sdr.witness) : ordered_json(nullptr);
        r["fdr"] = degree_json(row.fdr.value, precision);
        r["distance"] = row.fdr.distance ? ordered_json(*row.fdr.distance) : ordered_json("inf");
        r["fdr_witness"] = row.fdr.witness ? sequence_json(model, *row.fdr.witness) : ordered_json(nullptr);
        rows.push_back(std::move(r));
    }
    root["rows"] = std::move(rows);

    auto minimal = ordered_json::array();
    for (auto c : report.minimal_responsible)
        minimal.push_back(names_of(model, c));
    root["minimal_responsible"] = std::move(minimal);
    return root.dump(2) + "\n";
}

std::string render_csv(const cgs& model, const responsibility_report& report)
{
    std::string out = "coalition,responsible,sdr,fdr,distance\n";
    for (const auto& row : report.rows)
    {
        auto names = format_coalition(model, row.members);
        out += "\"" + names.substr(1, names.size() - 2) + "\",";
        out += row.responsible ? "true," : "false,";
        out += (row.sdr.value ? row.sdr.value->fraction() : std::string{ "undefined" }) + ",";
        out += row.fdr.value.fraction() + ",";
        out += (row.fdr.distance ? std::to_string(*row.fdr.distance) : std::string{ "inf" }) + "\n";
    }
    return out;
}

std::string render_table(const cgs& model, const responsibility_report& report, unsigned precision)
{
    std::ostringstream out;
    out << "model:     " << report.model_id;
    if (!report.model_hash.empty())
        out << " (" << report.model_hash << ")";
    out << "\nstate:     " << model.state_name(report.state) << "\naffairs:   " << format_states(model, report.affairs)
        << "\nsemantics: " << to_string(report.semantics) << "\n\n";

    std::vector<std::vector<std::string>> cells{
        { "coalition", "responsible", "sdr", "fdr", "distance", "sdr witness", "fdr witness" }
    };
    for (const auto& row : report.rows)
        cells.push_back({
            format_coalition(model, row.members),
            row.responsible ? "yes" : "no",
            row.sdr.value ? row.sdr.value->to_string(precision) : "undefined",
            row.fdr.value.to_string(precision),
            row.fdr.distance ? std::to_string(*row.fdr.distance) : "inf",
            row.sdr.witness ? format_coalition(model, *row.sdr.witness) : "-",
            row.fdr.witness ? format_sequence(model, *row.fdr.witness) : "-",
        });

    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells)
    {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c)
        {
            text += line[c];
            if (c + 1 < line.size())
                text += std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << text << "\n";
    }

    out << "\nminimal responsible:";
    if (report.minimal_responsible.empty())
        out << " none";
    for (auto c : report.minimal_responsible)
        out << " " << format_coalition(model, c);
    out << "\n";
    return out.str();
}

} // namespace

std::string render_report(const cgs& model, const responsibility_report& report, report_format format,
                          unsigned precision)
{
    switch (format)
    {
    case report_format::json: return render_json(model, report, precision);
    case report_format::csv: return render_csv(model, report);
    case report_format::table: break;
    }
    return render_table(model, report, precision);
}

} // namespace respdeg
