#pragma once

#include <stdexcept>
#include <string>

namespace stratumforge {

enum class Errc {
    NotTransitive,
    BadPermutation,
    RankDeficient,
    NotPrimitive,
    OddOrderZero,
    UnsupportedMarks,
    NotSingleCylinder,
    OverlappingSlits,
    UnmatchedSides,
    WidthTooSmall,
    NoSuchComponent,
    VerificationFailed,
    NotNormalized,
    WrongGenus,
    InconsistentGluing,
    SizeMismatch,
    SingularMatrix,
    NotInAbsoluteImage,
    BoundExceeded,
    CertificationFailed,
    PrecisionExhausted,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace stratumforge
