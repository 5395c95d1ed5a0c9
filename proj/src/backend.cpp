// Copyright 2026 The lores-ocr Authors
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

#include "lores/backend.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "lores/errors.hpp"
#include "lores/image_io.hpp"

namespace lores {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string substitute(std::string tmpl, const std::string& placeholder,
                       const std::string& value) {
  std::size_t pos = 0;
  while ((pos = tmpl.find(placeholder, pos)) != std::string::npos) {
    tmpl.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
  return tmpl;
}

struct ChildResult {
  int exit_code = -1;
  bool timed_out = false;
  bool signaled = false;
  int term_signal = 0;
};

// Runs `command` through /bin/sh with stdout+stderr redirected to
// capture_path; kills the child (process group) after `timeout`.
ChildResult run_with_timeout(const std::string& command,
                             const std::filesystem::path& capture_path,
                             std::chrono::seconds timeout) {
  pid_t pid = fork();
  if (pid < 0) {
    throw IoError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    setpgid(0, 0);
    int fd = open(capture_path.string().c_str(),
                  O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      dup2(fd, STDOUT_FILENO);
      dup2(fd, STDERR_FILENO);
      close(fd);
    }
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  ChildResult res;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  int status = 0;
  for (;;) {
    pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) {
      throw IoError(std::string("waitpid failed: ") + std::strerror(errno));
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      res.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  if (WIFEXITED(status)) {
    res.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    res.signaled = true;
    res.term_signal = WTERMSIG(status);
  }
  return res;
}

BackendRun run_replay(const ReplayBackend& replay, const std::string& tag) {
  const auto path = replay.dir / (tag + ".tsv");
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw BackendError(tag, "replay file missing: " + path.string());
  }
  BackendRun run;
  run.raw_tsv = read_file(path);
  run.log = "replayed from " + path.string();
  try {
    run.page = parse_tsv(run.raw_tsv);
  } catch (const TsvParseError& e) {
    throw BackendError(tag, std::string("unparseable replay output: ") + e.what());
  }
  return run;
}

BackendRun run_command(const GrayImage& img, const CommandBackend& cmd,
                       const std::string& tag,
                       const std::filesystem::path& scratch_dir) {
  std::filesystem::create_directories(scratch_dir);
  const auto input_path = scratch_dir / (tag + ".input.png");
  const auto output_base = scratch_dir / (tag + ".engine");
  const auto capture_path = scratch_dir / (tag + ".capture.txt");
  write_png(input_path, img);

  std::string command = substitute(cmd.command_template, "{input}",
                                   input_path.string());
  command = substitute(command, "{output_base}", output_base.string());

  const auto started = std::chrono::steady_clock::now();
  ChildResult res = run_with_timeout(command, capture_path, cmd.timeout);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  std::string captured;
  try {
    captured = read_file(capture_path);
  } catch (const IoError&) {
    // keep going; the capture is diagnostic only
  }

  BackendRun run;
  std::ostringstream log;
  log << "command: " << command << "\n"
      << "elapsed_ms: " << elapsed.count() << "\n";
  if (res.timed_out) {
    log << "result: timeout after " << cmd.timeout.count() << "s\n";
  } else if (res.signaled) {
    log << "result: killed by signal " << res.term_signal << "\n";
  } else {
    log << "result: exit " << res.exit_code << "\n";
  }
  log << "output:\n" << captured;
  run.log = log.str();

  if (res.timed_out) {
    throw BackendError(tag, "timeout after " +
                                std::to_string(cmd.timeout.count()) + "s");
  }
  if (res.signaled || res.exit_code != 0) {
    throw BackendError(
        tag, res.signaled
                 ? "killed by signal " + std::to_string(res.term_signal)
                 : "exit status " + std::to_string(res.exit_code) + "\n" +
                       captured);
  }
  const auto tsv_path = output_base.string() + ".tsv";
  try {
    run.raw_tsv = read_file(tsv_path);
  } catch (const IoError&) {
    throw BackendError(tag, "engine produced no output at " + tsv_path);
  }
  try {
    run.page = parse_tsv(run.raw_tsv);
  } catch (const TsvParseError& e) {
    throw BackendError(tag, std::string("unparseable engine output: ") + e.what());
  }
  return run;
}

}  // namespace

BackendRun run_backend(const GrayImage& img, const BackendSpec& backend,
                       const std::string& method_tag,
                       const std::filesystem::path& scratch_dir) {
  if (const auto* replay = std::get_if<ReplayBackend>(&backend)) {
    return run_replay(*replay, method_tag);
  }
  return run_command(img, std::get<CommandBackend>(backend), method_tag,
                     scratch_dir);
}

}  // namespace lores
