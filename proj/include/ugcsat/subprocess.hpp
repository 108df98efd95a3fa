// Copyright 2026 The ugcsat Authors.
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

#include <string>

#include "ugcsat/plane.hpp"

namespace ugcsat {

struct SubprocessResult {
  int exit_code = -1;
  std::string output;  // combined stdout + stderr
};

// Runs a shell command, capturing combined output.
SubprocessResult run_command_capture(const std::string& command);

// Runs an external image filter: writes `in` as PNG to a private temporary
// workspace, substitutes {input}/{output} in the command template, runs it,
// and reads the produced PNG back. Throws with captured diagnostics on
// failure; rejects outputs whose dimensions differ from the input.
Plane run_external_image_filter(const Plane& in, const std::string& command_template,
                                const char* tag);

}  // namespace ugcsat
