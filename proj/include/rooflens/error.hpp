#pragma once

#include <stdexcept>
#include <string>

namespace rooflens {

// Every failure mode the toolkit can report. The CLI maps these onto exit
// codes (usage vs. input error); library callers can switch on kind().
enum class ErrorKind {
    // hardware registry
    MissingPeak,
    ParseError,
    ValidationError,
    MissingField,
    UnknownHardware,
    // kernel models / bounds
    InvalidCount,
    InvalidIndexSize,
    ZeroIntensity,
    InvalidAlpha,
    ZeroBalance,
    InvalidRange,
    // matrix market ingestion
    BadBanner,
    UnsupportedFormat,
    MalformedEntry,
    IndexOutOfRange,
    TruncatedFile,
    // I/O
    IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace rooflens
