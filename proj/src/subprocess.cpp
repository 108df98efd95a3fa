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

#include "ugcsat/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "ugcsat/image_io.hpp"

namespace ugcsat {

SubprocessResult run_command_capture(const std::string& command) {
  SubprocessResult result;
  // The subshell keeps the merge ahead of any redirections inside the
  // command itself, so its stderr still lands in the pipe.
  const std::string wrapped = "( " + command + " ) 2>&1";
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

namespace {

std::string substitute(std::string templ, const std::string& key,
                       const std::string& value) {
  std::size_t pos = 0;
  while ((pos = templ.find(key, pos)) != std::string::npos) {
    templ.replace(pos, key.size(), value);
    pos += value.size();
  }
  return templ;
}

std::filesystem::path make_private_workspace() {
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("ugcsat-ext-" + std::to_string(::getpid()) + "-" +
       std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(dir);
  return dir;
}

struct WorkspaceGuard {
  std::filesystem::path dir;
  ~WorkspaceGuard() {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

Plane run_external_image_filter(const Plane& in, const std::string& command_template,
                                const char* tag) {
  if (command_template.find("{input}") == std::string::npos ||
      command_template.find("{output}") == std::string::npos) {
    throw std::invalid_argument(std::string(tag) +
                                ": command template must contain {input} and {output}");
  }

  WorkspaceGuard ws{make_private_workspace()};
  const std::filesystem::path in_path = ws.dir / "input.png";
  const std::filesystem::path out_path = ws.dir / "output.png";
  write_png_gray(in_path, in);

  std::string cmd = substitute(command_template, "{input}", in_path.string());
  cmd = substitute(cmd, "{output}", out_path.string());

  const SubprocessResult res = run_command_capture(cmd);
  if (res.exit_code != 0) {
    throw std::runtime_error(std::string(tag) + ": command failed (exit " +
                             std::to_string(res.exit_code) + "): " + cmd +
                             "\n--- captured output ---\n" + res.output);
  }
  if (!std::filesystem::exists(out_path)) {
    throw std::runtime_error(std::string(tag) + ": command produced no output file: " +
                             cmd + "\n--- captured output ---\n" + res.output);
  }
  Plane out = read_image_luma(out_path);
  if (!out.same_size(in)) {
    throw std::runtime_error(std::string(tag) + ": output dimensions " +
                             std::to_string(out.width) + "x" +
                             std::to_string(out.height) + " do not match input " +
                             std::to_string(in.width) + "x" +
                             std::to_string(in.height));
  }
  return out;
}

}  // namespace ugcsat
