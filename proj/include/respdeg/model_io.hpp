#pragma once

#include "respdeg/cgs.hpp"
#include "respdeg/errors.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace respdeg
{

struct transition_record
{
    std::string from;
    std::map<std::string, std::string> profile;
    std::string to;
};

/// Schema-checked but not yet semantically validated model file contents.
struct model_document
{
    std::vector<std::string> agents;
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::map<std::string, std::map<std::string, std::vector<std::string>>> available;
    std::vector<transition_record> transitions;
    std::map<std::string, std::vector<std::string>> affairs;
};

using named_affairs = std::map<std::string, state_set>;

/// Decodes the JSON model format. Throws model_error carrying SyntaxError
/// (with line and column) or SchemaError diagnostics. Names are not
/// resolved here.
model_document parse_model(std::string_view text);

/// Resolves names and checks that availability is non-empty and that the
/// transition table is total and deterministic. Throws model_error listing
/// every problem found.
cgs validate_model(const model_document& doc);

/// Resolves the document's named affairs against a validated model.
named_affairs validate_affairs(const model_document& doc, const cgs& model);

struct loaded_model
{
    cgs model;
    named_affairs affairs;
};

loaded_model load_model(std::string_view text);

/// Canonical text: keys sorted, names in index order, transitions sorted by
/// (from, profile code), one transition per line.
std::string serialize_model(const cgs& model, const named_affairs& affairs = {});

/// Comma separated agent names; the empty string is the empty coalition.
coalition parse_coalition(std::string_view text, const cgs& model);

/// Comma separated state names, or `@label` for a named affair.
state_set parse_affairs(std::string_view text, const cgs& model, const named_affairs& affairs = {});

std::string format_coalition(const cgs& model, coalition c);
std::string format_states(const cgs& model, const state_set& states);

/// FNV-1a 64-bit digest rendered as 16 hex digits.
std::string content_hash(std::string_view text);

} // namespace respdeg
