#include "rooflens/error.hpp"

namespace rooflens {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingPeak:       return "MissingPeak";
        case ErrorKind::ParseError:        return "ParseError";
        case ErrorKind::ValidationError:   return "ValidationError";
        case ErrorKind::MissingField:      return "MissingField";
        case ErrorKind::UnknownHardware:   return "UnknownHardware";
        case ErrorKind::InvalidCount:      return "InvalidCount";
        case ErrorKind::InvalidIndexSize:  return "InvalidIndexSize";
        case ErrorKind::ZeroIntensity:     return "ZeroIntensity";
        case ErrorKind::InvalidAlpha:      return "InvalidAlpha";
        case ErrorKind::ZeroBalance:       return "ZeroBalance";
        case ErrorKind::InvalidRange:      return "InvalidRange";
        case ErrorKind::BadBanner:         return "BadBanner";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::MalformedEntry:    return "MalformedEntry";
        case ErrorKind::IndexOutOfRange:   return "IndexOutOfRange";
        case ErrorKind::TruncatedFile:     return "TruncatedFile";
        case ErrorKind::IoError:           return "IoError";
    }
    return "Error";
}

} // namespace rooflens
