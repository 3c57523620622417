// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffinit/error.h"

namespace cliffinit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kBadLength:
            return "BadLength";
        case ErrorCode::kBadChar:
            return "BadChar";
        case ErrorCode::kSizeMismatch:
            return "SizeMismatch";
        case ErrorCode::kSchemaError:
            return "SchemaError";
        case ErrorCode::kInconsistentQubitCount:
            return "InconsistentQubitCount";
        case ErrorCode::kNonFiniteCoefficient:
            return "NonFiniteCoefficient";
        case ErrorCode::kQubitOutOfRange:
            return "QubitOutOfRange";
        case ErrorCode::kInternalPhaseError:
            return "InternalPhaseError";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kIndexOutOfAlphabet:
            return "IndexOutOfAlphabet";
        case ErrorCode::kSpaceTooLarge:
            return "SpaceTooLarge";
        case ErrorCode::kSpaceExhausted:
            return "SpaceExhausted";
        case ErrorCode::kTooManyQubits:
            return "TooManyQubits";
        case ErrorCode::kNoFeasibleBitstring:
            return "NoFeasibleBitstring";
        case ErrorCode::kDegenerateDenominator:
            return "DegenerateDenominator";
        case ErrorCode::kImaginaryResidue:
            return "ImaginaryResidue";
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kIoError:
            return "IoError";
    }
    return "Unknown";
}

}  // namespace cliffinit
