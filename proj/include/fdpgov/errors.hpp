#pragma once

#include <stdexcept>
#include <string>

namespace fdpgov {

enum class ErrorKind {
    IoError,
    ParseError,
    UnknownToken,
    UnknownRole,
    UnknownObject,
    NotAssigned,
    EmptyRequest,
    SchemaViolation,
    UnknownField,
    InvalidState,
    ProjectNotPublished,
    UnboundStep,
    UnhostedObject,
    DuplicateHosting,
    InvalidNode,
    MalformedPredicate,
    DuplicateStepId,
    DanglingDataRef,
    CycleDetected,
    UnknownKey,
    NoTemplateForRegion,
    Internal,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownToken: return "UnknownToken";
        case ErrorKind::UnknownRole: return "UnknownRole";
        case ErrorKind::UnknownObject: return "UnknownObject";
        case ErrorKind::NotAssigned: return "NotAssigned";
        case ErrorKind::EmptyRequest: return "EmptyRequest";
        case ErrorKind::SchemaViolation: return "SchemaViolation";
        case ErrorKind::UnknownField: return "UnknownField";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::ProjectNotPublished: return "ProjectNotPublished";
        case ErrorKind::UnboundStep: return "UnboundStep";
        case ErrorKind::UnhostedObject: return "UnhostedObject";
        case ErrorKind::DuplicateHosting: return "DuplicateHosting";
        case ErrorKind::InvalidNode: return "InvalidNode";
        case ErrorKind::MalformedPredicate: return "MalformedPredicate";
        case ErrorKind::DuplicateStepId: return "DuplicateStepId";
        case ErrorKind::DanglingDataRef: return "DanglingDataRef";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::NoTemplateForRegion: return "NoTemplateForRegion";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Exception carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fdpgov
