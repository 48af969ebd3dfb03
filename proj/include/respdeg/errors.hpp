#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace respdeg
{

enum class error_kind
{
    syntax_error,
    schema_error,
    empty_available_set,
    missing_transition,
    duplicate_transition,
    unknown_name,
    duplicate_name,
    duplicate_member,
    unavailable_action,
    model_too_large,
};

std::string_view to_string(error_kind kind);

struct source_position
{
    std::size_t line = 1;
    std::size_t column = 1;
};

struct diagnostic
{
    error_kind kind;
    std::string message;
    /// JSON pointer into the document, when the error is tied to a location.
    std::string path;
    std::optional<source_position> position;

    [[nodiscard]] std::string to_string() const;
};

/// Raised by parsing, validation and name resolution. Carries every
/// diagnostic found, not only the first.
class model_error : public std::runtime_error
{
    std::vector<diagnostic> diagnostics_;

public:
    explicit model_error(std::vector<diagnostic> diagnostics);
    explicit model_error(diagnostic d);

    [[nodiscard]] const std::vector<diagnostic>& diagnostics() const { return diagnostics_; }
};

} // namespace respdeg
