/*
   Copyright 2026 The toromon authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TOROMON_ERROR_HPP
#define TOROMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace toromon {

// Error kinds are part of the public contract: the CLI maps them to exit
// codes (mathematical negatives vs. bad input vs. internal breaches).
enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    SingularMatrix,
    RankDeficient,
    NotSaturated,
    NoPositiveGrading,
    NotInBaseField,
    NotAUnit,
    ModelMismatch,
    BadConstantTerm,
    NotMonomialTimesUnit,
    NotLogSmooth,
    ResidueFieldHypothesisViolated,
    RootExtractionFailed,
    Condition1Violated,
    SearchExhausted,
    ParseError,
    ValidationError,
    InternalError,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotSaturated: return "NotSaturated";
        case ErrorKind::NoPositiveGrading: return "NoPositiveGrading";
        case ErrorKind::NotInBaseField: return "NotInBaseField";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::ModelMismatch: return "ModelMismatch";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::NotMonomialTimesUnit: return "NotMonomialTimesUnit";
        case ErrorKind::NotLogSmooth: return "NotLogSmooth";
        case ErrorKind::ResidueFieldHypothesisViolated:
            return "ResidueFieldHypothesisViolated";
        case ErrorKind::RootExtractionFailed: return "RootExtractionFailed";
        case ErrorKind::Condition1Violated: return "Condition1Violated";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, std::string witness = "")
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          witness_(std::move(witness)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& witness() const { return witness_; }

  private:
    ErrorKind kind_;
    std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::string witness = "") {
    throw Error(kind, message, std::move(witness));
}

// Internal consistency checks; failures indicate a library bug, never bad
// user input.
inline void require_internal(bool ok, const std::string& message) {
    if (!ok) fail(ErrorKind::InternalError, message);
}

}  // namespace toromon

#endif
