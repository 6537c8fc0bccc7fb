#include "grw/errors.hpp"

namespace grw {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DuplicateId: return "DuplicateId";
        case Errc::DanglingEndpoint: return "DanglingEndpoint";
        case Errc::NotTotal: return "NotTotal";
        case Errc::IncidenceViolation: return "IncidenceViolation";
        case Errc::FlavorMismatch: return "FlavorMismatch";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::NoMonoLeg: return "NoMonoLeg";
        case Errc::RootMismatch: return "RootMismatch";
        case Errc::NonInitialObjectCondition: return "NonInitialObjectCondition";
        case Errc::ProbeSetTooLarge: return "ProbeSetTooLarge";
        case Errc::InadmissibleMatch: return "InadmissibleMatch";
        case Errc::NoAdmissibleMatch: return "NoAdmissibleMatch";
        case Errc::NonComposableSteps: return "NonComposableSteps";
        case Errc::ConfigInvalid: return "ConfigInvalid";
        case Errc::ParseError: return "ParseError";
        case Errc::SchemaVersionMismatch: return "SchemaVersionMismatch";
        case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

} // namespace grw
