#pragma once

#include "respdeg/degrees.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace respdeg
{

enum class report_format
{
    table,
    json,
    csv,
};

std::optional<report_format> parse_report_format(std::string_view text);

struct report_row
{
    coalition members;
    bool responsible = false;
    sdr_result sdr;
    fdr_result fdr;
};

struct responsibility_report
{
    std::string model_id;
    std::string model_hash;
    state_id state;
    state_set affairs;
    preclusion_semantics semantics = preclusion_semantics::future_avoidance;
    /// One row per non-empty coalition, in (cardinality, bitset) order.
    std::vector<report_row> rows;
    std::vector<coalition> minimal_responsible;
};

responsibility_report build_report(const cgs& model, state_id state, const state_set& affairs,
                                   preclusion_semantics semantics, unsigned threads = 1, std::string model_id = {},
                                   std::string model_hash = {});

std::string render_report(const cgs& model, const responsibility_report& report, report_format format,
                          unsigned precision = 4);

} // namespace respdeg
