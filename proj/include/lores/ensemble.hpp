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
// Confidence-weighted ensembling of multiple recognition outputs.  One
// output is the master; each other output contributes at most one
// bounding-box-aligned candidate per master word; candidates vote with
// remapped confidences and a lexicon penalty, and the winner replaces the
// master word's text in place.

#ifndef LORES_ENSEMBLE_HPP_
#define LORES_ENSEMBLE_HPP_

#include <filesystem>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lores/tsv.hpp"

namespace lores {

/// Piecewise-linear confidence remap.  Defaults give
///   c_mod = 0.5 c + 30   for c < 80
///   c_mod = 1.7 c - 65   for c >= 80
/// which is deliberately discontinuous at the breakpoint (70 -> 71).
struct CmodParams {
  double breakpoint = 80.0;
  double low_slope = 0.5;
  double low_intercept = 30.0;
  double high_slope = 1.7;
  double high_intercept = -65.0;
};

/// Word list for the dictionary penalty.  Membership is checked on the
/// punctuation-stripped word; case-insensitive (ASCII fold) by default.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(const std::vector<std::string>& words,
                   bool case_insensitive = true);

  static Lexicon load(const std::filesystem::path& path,
                      bool case_insensitive = true);

  bool contains(const std::string& word) const;
  std::size_t size() const { return words_.size(); }
  bool case_insensitive() const { return case_insensitive_; }

 private:
  std::unordered_set<std::string> words_;
  bool case_insensitive_ = true;
};

struct EnsembleConfig {
  std::string master_tag = "auto";  // "auto" resolves via select_master
  int dpi_profile = 60;             // 60 or 75
  double iou_threshold = 0.5;
  double lexicon_penalty = 30.0;
  CmodParams cmod;
};

/// One vote: a word string with its (already remapped) confidence and the
/// method that produced it.
struct Candidate {
  std::string word;
  double c_mod = 0.0;
  std::string source_tag;
};

struct MethodOutput {
  std::string method_tag;
  PageRec page;
};

struct TallyEntry {
  std::string word;
  double score = 0.0;
  int count = 0;
};

struct VoteResult {
  std::string winner;
  double score = 0.0;
  std::vector<TallyEntry> tally;
};

/// Per-master-word audit record produced by merge().
struct WordReport {
  BBox bbox;
  std::string master_text;
  std::string winner;
  double winner_score = 0.0;
  bool unmatched = false;  // no candidate from any non-master output
  struct CandidateReport {
    std::string tag;
    std::string text;
    double conf = 0.0;
    double c_mod = 0.0;  // after the penalty, i.e. the value that voted
    bool penalized = false;
  };
  std::vector<CandidateReport> candidates;
  std::vector<TallyEntry> tally;
};

struct MergeReport {
  std::string master_tag;
  std::vector<WordReport> words;
};

struct MergeResult {
  PageRec merged;
  MergeReport report;
};

/// The confidence remap; rejects c outside [0, 100].
double modified_confidence(double c, const CmodParams& params = {});

/// Strips leading and trailing punctuation (interior punctuation stays).
std::string strip_punctuation(const std::string& word);

/// Intersection over union of two boxes; 0 for disjoint, 1 for identical.
double iou(const BBox& a, const BBox& b);

/// Greedy one-to-one matching of other-words to master-words: pairs with
/// iou >= threshold are taken in descending iou order (ties broken by
/// smaller master index, then smaller other index).  Returns (master
/// word index, other word index) pairs over flattened reading order.
std::vector<std::pair<int, int>> align_words(const PageRec& master,
                                             const PageRec& other,
                                             double iou_threshold);

/// Confidence-weighted vote over candidates.  Out-of-lexicon candidates
/// (punctuation-stripped) first lose `penalty` from their c_mod; grouping
/// uses the exact word string; score = sum(c_mod) / sqrt(count); ties go
/// to the larger count, then the lexicographically smaller word.
VoteResult vote(const std::vector<Candidate>& candidates,
                const Lexicon& lexicon, double penalty);

/// Master method per dpi profile: 60 -> nn-gauss-1.0, 75 -> bicubic;
/// `override_tag` (non-"auto") wins.  Throws std::invalid_argument when
/// the resolved tag is not in `available`.
std::string select_master(int dpi_profile,
                          const std::vector<std::string>& available,
                          const std::string& override_tag = "auto");

/// Full merge as described above.  Outputs are consumed in sorted-tag
/// order so scheduling never changes the result.
MergeResult merge(const std::vector<MethodOutput>& outputs,
                  const EnsembleConfig& config, const Lexicon& lexicon);

}  // namespace lores

#endif  // LORES_ENSEMBLE_HPP_
