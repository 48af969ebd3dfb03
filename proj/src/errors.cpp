#include "respdeg/errors.hpp"

namespace respdeg
{

std::string_view to_string(error_kind kind)
{
    switch (kind)
    {
    case error_kind::syntax_error: return "SyntaxError";
    case error_kind::schema_error: return "SchemaError";
    case error_kind::empty_available_set: return "EmptyAvailableSet";
    case error_kind::missing_transition: return "MissingTransition";
    case error_kind::duplicate_transition: return "DuplicateTransition";
    case error_kind::unknown_name: return "UnknownName";
    case error_kind::duplicate_name: return "DuplicateName";
    case error_kind::duplicate_member: return "DuplicateMember";
    case error_kind::unavailable_action: return "UnavailableAction";
    case error_kind::model_too_large: return "ModelTooLarge";
    }
    return "UnknownError";
}

std::string diagnostic::to_string() const
{
    std::string out{ respdeg::to_string(kind) };
    if (position)
        out += " at " + std::to_string(position->line) + ":" + std::to_string(position->column);
    if (!path.empty())
        out += " at " + path;
    out += ": " + message;
    return out;
}

namespace
{

std::string join_messages(const std::vector<diagnostic>& ds)
{
    if (ds.empty())
        return "model error";
    std::string out = ds.front().to_string();
    if (ds.size() > 1)
        out += " (+" + std::to_string(ds.size() - 1) + " more)";
    return out;
}

} // namespace

model_error::model_error(std::vector<diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_{ std::move(diagnostics) }
{
}

model_error::model_error(diagnostic d) : model_error(std::vector<diagnostic>{ std::move(d) }) {}

} // namespace respdeg
