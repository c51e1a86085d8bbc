#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sltrust {

// Base of every domain error thrown by this library. `code()` returns a
// stable machine-readable identifier used by the CLI and in reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SLTRUST_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& message)                     \
            : Error(#Name, message) {}                                \
    }

SLTRUST_DEFINE_ERROR(ValidationError);
SLTRUST_DEFINE_ERROR(DegenerateBaseRate);
SLTRUST_DEFINE_ERROR(DogmaticOpinion);
SLTRUST_DEFINE_ERROR(BaseRateMismatch);
SLTRUST_DEFINE_ERROR(TotalConflict);
SLTRUST_DEFINE_ERROR(MissingWeight);
SLTRUST_DEFINE_ERROR(NoEvidence);
SLTRUST_DEFINE_ERROR(ParameterError);
SLTRUST_DEFINE_ERROR(FormatError);
SLTRUST_DEFINE_ERROR(EmptyDataset);
SLTRUST_DEFINE_ERROR(UnknownClass);
SLTRUST_DEFINE_ERROR(SchemaMismatch);
SLTRUST_DEFINE_ERROR(EmptyPart);
SLTRUST_DEFINE_ERROR(EtaOutOfRange);

#undef SLTRUST_DEFINE_ERROR

// Parse failure with a 1-based character position into the input text.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("ParseError",
                "at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Evaluation hit a variable with no bound opinion.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("UnboundVariable", "no opinion bound for '" + name + "'"),
          name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace sltrust
