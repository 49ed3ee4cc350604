// Copyright 2026 The vjpoly Authors
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

#include "vjpoly/errors.hpp"

namespace vjpoly {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonExactDivision: return "NonExactDivision";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kSelfContract: return "SelfContract";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kNotOuterplanar: return "NotOuterplanar";
    case ErrorCode::kNotBiconnected: return "NotBiconnected";
    case ErrorCode::kNoSpokes: return "NoSpokes";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace vjpoly
