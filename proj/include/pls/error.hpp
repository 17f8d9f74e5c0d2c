#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pls {

enum class ErrorKind {
    DimensionMismatch,
    RankDeficient,
    SingularGram,
    NoNullspace,
    ZeroChannel,
    InvalidGeometry,
    InvalidPower,
    InsufficientSamples,
    DegenerateVariance,
    EmptySamples,
    UnknownScenario,
    CellFailed,
    ConfigError,
    IoError,
    MissingScheme,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    bool is_numerical() const noexcept {
        return kind_ == ErrorKind::RankDeficient || kind_ == ErrorKind::SingularGram ||
               kind_ == ErrorKind::ZeroChannel || kind_ == ErrorKind::NoNullspace;
    }

private:
    ErrorKind kind_;
};

}  // namespace pls
