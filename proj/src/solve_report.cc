// Copyright 2026 The LFG Authors.
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

#include "lfg/solve_report.h"

namespace lfg {

const char* ToString(ReportStatus status) {
  switch (status) {
    case ReportStatus::kOptimal: return "OPTIMAL";
    case ReportStatus::kIncomplete: return "INCOMPLETE";
    case ReportStatus::kNoPureNe: return "NO_PURE_NE";
  }
  return "UNKNOWN";
}

}  // namespace lfg
