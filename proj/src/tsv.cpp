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

#include "lores/tsv.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "lores/errors.hpp"

namespace lores {

namespace {

const char kHeader[] =
    "level\tpage_num\tblock_num\tpar_num\tline_num\tword_num\t"
    "left\ttop\twidth\theight\tconf\ttext";

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& field, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw TsvParseError(line_no, std::string("non-numeric ") + what + " '" +
                                     field + "'");
  }
  return value;
}

double parse_conf(const std::string& field, int line_no) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw TsvParseError(line_no, "non-numeric conf '" + field + "'");
  }
  if (value < -1.0 || value > 100.0) {
    throw TsvParseError(line_no, "conf " + field + " outside [-1, 100]");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// First 11 fields are tab-split; everything after the 11th tab is the
// text column (engine words never contain tabs, but stay safe).
std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (fields.size() < 11) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  fields.push_back(line.substr(start));
  return fields;
}

}  // namespace

std::size_t PageRec::word_count() const {
  std::size_t n = 0;
  for (const auto& line : lines) n += line.words.size();
  return n;
}

std::vector<const WordRec*> PageRec::flat_words() const {
  std::vector<const WordRec*> out;
  out.reserve(word_count());
  for (const auto& line : lines) {
    for (const auto& w : line.words) out.push_back(&w);
  }
  return out;
}

std::string PageRec::to_text() const {
  std::string out;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (li > 0) out += '\n';
    const auto& words = lines[li].words;
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      if (wi > 0) out += ' ';
      out += words[wi].text;
    }
  }
  return out;
}

PageRec parse_tsv(const std::string& text,
                  std::vector<std::string>* warnings) {
  PageRec page;
  std::vector<WordRec> words;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line.rfind("level", 0) != 0) {
        throw TsvParseError(line_no, "expected header row starting with 'level'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split_row(line);
    if (fields.size() < 12) {
      throw TsvParseError(line_no, "expected 12 tab-separated columns, got " +
                                       std::to_string(fields.size()));
    }
    const int level = parse_int(fields[0], line_no, "level");
    parse_int(fields[1], line_no, "page_num");
    const int block = parse_int(fields[2], line_no, "block_num");
    const int par = parse_int(fields[3], line_no, "par_num");
    const int lnum = parse_int(fields[4], line_no, "line_num");
    const int wnum = parse_int(fields[5], line_no, "word_num");
    const int left = parse_int(fields[6], line_no, "left");
    const int top = parse_int(fields[7], line_no, "top");
    const int width = parse_int(fields[8], line_no, "width");
    const int height = parse_int(fields[9], line_no, "height");
    const double conf = parse_conf(fields[10], line_no);

    if (level == 1) {
      page.width = width;
      page.height = height;
      continue;
    }
    if (level != 5) continue;  // block/paragraph/line rows carry no payload

    WordRec w;
    w.text = fields[11];
    if (trim(w.text).empty()) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": skipping word row with empty text");
      }
      continue;
    }
    if (width < 1 || height < 1) {
      throw TsvParseError(line_no, "word bbox must have positive dims");
    }
    if (conf < 0.0) {
      throw TsvParseError(line_no, "word row with negative conf");
    }
    if (conf > 97.0 && warnings) {
      warnings->push_back("line " + std::to_string(line_no) + ": conf " +
                          fields[10] + " above the engine's observed max 97");
    }
    w.bbox = BBox{left, top, width, height};
    w.conf = conf;
    w.ids = WordIds{block, par, lnum, wnum};
    words.push_back(std::move(w));
  }
  if (!saw_header) {
    throw TsvParseError(1, "empty input, expected header row");
  }

  std::stable_sort(words.begin(), words.end(),
                   [](const WordRec& a, const WordRec& b) { return a.ids < b.ids; });
  for (auto& w : words) {
    if (page.lines.empty() || page.lines.back().block != w.ids.block ||
        page.lines.back().paragraph != w.ids.paragraph ||
        page.lines.back().line != w.ids.line) {
      page.lines.push_back(LineRec{w.ids.block, w.ids.paragraph, w.ids.line, {}});
    }
    page.lines.back().words.push_back(std::move(w));
  }
  return page;
}

std::string serialize_tsv(const PageRec& page) {
  std::string out = kHeader;
  out += '\n';

  auto row = [&out](int level, int block, int par, int line, int word,
                    const BBox& b, const std::string& conf,
                    const std::string& text) {
    out += std::to_string(level) + "\t1\t" + std::to_string(block) + '\t' +
           std::to_string(par) + '\t' + std::to_string(line) + '\t' +
           std::to_string(word) + '\t' + std::to_string(b.left) + '\t' +
           std::to_string(b.top) + '\t' + std::to_string(b.width) + '\t' +
           std::to_string(b.height) + '\t' + conf + '\t' + text + '\n';
  };

  if (page.width > 0 && page.height > 0) {
    row(1, 0, 0, 0, 0, BBox{0, 0, page.width, page.height}, "-1", "");
  }

  auto union_box = [](const std::vector<BBox>& boxes) {
    BBox u = boxes.front();
    for (const auto& b : boxes) {
      int right = std::max(u.right(), b.right());
      int bottom = std::max(u.bottom(), b.bottom());
      u.left = std::min(u.left, b.left);
      u.top = std::min(u.top, b.top);
      u.width = right - u.left;
      u.height = bottom - u.top;
    }
    return u;
  };

  // Structural rows are synthesized with union bounding boxes, mirroring
  // how the engine nests block > paragraph > line.
  int prev_block = -1, prev_par = -1;
  for (std::size_t li = 0; li < page.lines.size(); ++li) {
    const LineRec& line = page.lines[li];
    if (line.words.empty()) continue;
    std::vector<BBox> line_boxes;
    for (const auto& w : line.words) line_boxes.push_back(w.bbox);

    if (line.block != prev_block) {
      std::vector<BBox> block_boxes;
      for (const auto& l2 : page.lines) {
        if (l2.block != line.block) continue;
        for (const auto& w : l2.words) block_boxes.push_back(w.bbox);
      }
      row(2, line.block, 0, 0, 0, union_box(block_boxes), "-1", "");
      prev_block = line.block;
      prev_par = -1;
    }
    if (line.paragraph != prev_par) {
      std::vector<BBox> par_boxes;
      for (const auto& l2 : page.lines) {
        if (l2.block != line.block || l2.paragraph != line.paragraph) continue;
        for (const auto& w : l2.words) par_boxes.push_back(w.bbox);
      }
      row(3, line.block, line.paragraph, 0, 0, union_box(par_boxes), "-1", "");
      prev_par = line.paragraph;
    }
    row(4, line.block, line.paragraph, line.line, 0, union_box(line_boxes),
        "-1", "");
    for (const auto& w : line.words) {
      row(5, w.ids.block, w.ids.paragraph, w.ids.line, w.ids.word, w.bbox,
          format_double(w.conf), w.text);
    }
  }
  return out;
}

}  // namespace lores
