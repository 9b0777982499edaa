// Copyright 2026 The nahm-dynkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nahm/error.hpp"

namespace nahm {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitLeading: return "NonUnitLeading";
    case ErrorCode::DivergentProduct: return "DivergentProduct";
    case ErrorCode::IndefiniteTheta: return "IndefiniteTheta";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::OffGrain: return "OffGrain";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::SectorParityMismatch: return "SectorParityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownRecord: return "UnknownRecord";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace nahm
