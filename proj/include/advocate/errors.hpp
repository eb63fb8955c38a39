// Copyright Advocate Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace advocate {

// Stable error codes. The CLI prints them verbatim as
// `error: <code>: <message>` so scripts can match on the code.
enum class ErrorCode {
  InvalidSeed,
  AlreadyBootstrapped,
  NotBootstrapped,
  InvalidConfig,
  DuplicateKey,
  AnchorUnavailable,
  StoreUnavailable,
  NotFound,
  IntegrityViolation,
  MalformedClaim,
  IdMismatch,
  MissingSelfRef,
  NonCanonicalNumber,
  EmptyBatch,
  AlreadyIssued,
  IndexOutOfRange,
  DuplicateSource,
  UnsupportedKind,
  InvalidSpec,
  SourceUnavailable,
  UnknownSource,
  ModeMismatch,
  MalformedManifest,
  SyntaxError,
  EmptyAggregate,
  PolicyRejected,
  SyncFailed,
  PeerIdentityChanged,
  IoError,
};

inline const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::AlreadyBootstrapped: return "AlreadyBootstrapped";
    case ErrorCode::NotBootstrapped: return "NotBootstrapped";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::AnchorUnavailable: return "AnchorUnavailable";
    case ErrorCode::StoreUnavailable: return "StoreUnavailable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::IntegrityViolation: return "IntegrityViolation";
    case ErrorCode::MalformedClaim: return "MalformedClaim";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::MissingSelfRef: return "MissingSelfRef";
    case ErrorCode::NonCanonicalNumber: return "NonCanonicalNumber";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::AlreadyIssued: return "AlreadyIssued";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateSource: return "DuplicateSource";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SourceUnavailable: return "SourceUnavailable";
    case ErrorCode::UnknownSource: return "UnknownSource";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::MalformedManifest: return "MalformedManifest";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyAggregate: return "EmptyAggregate";
    case ErrorCode::PolicyRejected: return "PolicyRejected";
    case ErrorCode::SyncFailed: return "SyncFailed";
    case ErrorCode::PeerIdentityChanged: return "PeerIdentityChanged";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace advocate
