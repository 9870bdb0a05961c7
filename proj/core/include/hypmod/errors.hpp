#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hypmod {

/// Base class of all toolkit errors. `name()` is the stable identifier that
/// diagnostics (and the CLI exit-1 messages) report.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define HYPMOD_ERROR_TYPE(NAME)                                              \
    struct NAME : Error {                                                    \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}       \
    }

HYPMOD_ERROR_TYPE(BadParameters);
HYPMOD_ERROR_TYPE(DuplicatePoints);
HYPMOD_ERROR_TYPE(NegativeArgument);
HYPMOD_ERROR_TYPE(DegenerateDomain);
HYPMOD_ERROR_TYPE(DegenerateQuad);
HYPMOD_ERROR_TYPE(DegenerateAnnulus);
HYPMOD_ERROR_TYPE(QuadratureFailure);
HYPMOD_ERROR_TYPE(NotNested);
HYPMOD_ERROR_TYPE(EmptyFamily);
HYPMOD_ERROR_TYPE(IoFailure);

#undef HYPMOD_ERROR_TYPE

} // namespace hypmod
