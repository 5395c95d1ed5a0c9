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

#ifndef LORES_BACKEND_HPP_
#define LORES_BACKEND_HPP_

#include <chrono>
#include <filesystem>
#include <string>
#include <variant>

#include "lores/gray_image.hpp"
#include "lores/tsv.hpp"

namespace lores {

/// External engine invocation.  The template is run through the shell with
/// {input} replaced by the image path and {output_base} by the output path
/// base; the engine is expected to write <output_base>.tsv.  Typical value:
///   tesseract {input} {output_base} --dpi 300 tsv
struct CommandBackend {
  std::string command_template;
  std::chrono::seconds timeout{120};
};

/// Replay of stored recognition outputs: <dir>/<method_tag>.tsv.  This is
/// the testing seam; the whole ensemble path runs without any engine.
struct ReplayBackend {
  std::filesystem::path dir;
};

using BackendSpec = std::variant<CommandBackend, ReplayBackend>;

struct BackendRun {
  PageRec page;
  std::string raw_tsv;  // exactly what the engine (or replay file) produced
  std::string log;      // invocation, exit status, captured output
};

/// Runs one recognition pass for the given method tag.  For command
/// backends the image is written to scratch_dir first.  Throws
/// BackendError (carrying the tag) on nonzero exit, timeout, missing
/// replay file, or unparseable output.
BackendRun run_backend(const GrayImage& img, const BackendSpec& backend,
                       const std::string& method_tag,
                       const std::filesystem::path& scratch_dir);

}  // namespace lores

#endif  // LORES_BACKEND_HPP_
