#include "stratumforge/errors.hpp"

namespace stratumforge {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::BadPermutation: return "BadPermutation";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::OddOrderZero: return "OddOrderZero";
        case Errc::UnsupportedMarks: return "UnsupportedMarks";
        case Errc::NotSingleCylinder: return "NotSingleCylinder";
        case Errc::OverlappingSlits: return "OverlappingSlits";
        case Errc::UnmatchedSides: return "UnmatchedSides";
        case Errc::WidthTooSmall: return "WidthTooSmall";
        case Errc::NoSuchComponent: return "NoSuchComponent";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::WrongGenus: return "WrongGenus";
        case Errc::InconsistentGluing: return "InconsistentGluing";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NotInAbsoluteImage: return "NotInAbsoluteImage";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::CertificationFailed: return "CertificationFailed";
        case Errc::PrecisionExhausted: return "PrecisionExhausted";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace stratumforge
