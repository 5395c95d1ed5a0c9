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
//
// Recognition output model and its interchange format: the engine's
// 12-column TSV (level, page_num, block_num, par_num, line_num, word_num,
// left, top, width, height, conf, text).  Level-5 rows are words; rows
// with conf -1 are structural (page/block/paragraph/line).

#ifndef LORES_TSV_HPP_
#define LORES_TSV_HPP_

#include <string>
#include <vector>

#include "lores/kernels.hpp"  // PixelRect

namespace lores {

/// Word bounding box in the 300-dpi upscaled frame.
using BBox = PixelRect;

/// Hierarchical position of a word: (block, paragraph, line, word), all
/// 1-based, establishing reading order.
struct WordIds {
  int block = 1;
  int paragraph = 1;
  int line = 1;
  int word = 1;

  auto operator<=>(const WordIds&) const = default;
};

struct WordRec {
  std::string text;  // nonempty after trimming
  BBox bbox;
  double conf = 0.0;  // [0, 100]; engines observed to stay <= 97
  WordIds ids;

  bool operator==(const WordRec&) const = default;
};

/// Words sharing one (block, paragraph, line) triple, in word-id order.
struct LineRec {
  int block = 1;
  int paragraph = 1;
  int line = 1;
  std::vector<WordRec> words;

  bool operator==(const LineRec&) const = default;
};

struct PageRec {
  int width = 0;   // page dims in the upscaled frame
  int height = 0;
  std::vector<LineRec> lines;  // ordered by (block, paragraph, line)

  bool operator==(const PageRec&) const = default;

  std::size_t word_count() const;
  std::vector<const WordRec*> flat_words() const;

  /// Reading-order text: words joined by single spaces, lines by newlines.
  std::string to_text() const;
};

/// Parses engine TSV.  Rows may arrive in any order; words are re-sorted
/// by their ids.  Throws TsvParseError (with a 1-based line number) on missing
/// columns, non-numeric fields, or out-of-range confidences.  Confidences
/// above 97 are accepted with a warning pushed to `warnings` when given.
PageRec parse_tsv(const std::string& text,
                  std::vector<std::string>* warnings = nullptr);

/// Emits the same 12-column format, structural rows included.
/// parse_tsv(serialize_tsv(p)) == p for every valid PageRec.
std::string serialize_tsv(const PageRec& page);

}  // namespace lores

#endif  // LORES_TSV_HPP_
