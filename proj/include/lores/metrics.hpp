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
// Character/word-level accuracy: accuracy = (1 - d/L) * 100 with d the
// Levenshtein distance and L the ground-truth length.  Text is normalized
// first: quote marks within a class are equivalent (low-resolution glyphs
// are indistinguishable), likewise double quotes and dashes, and
// whitespace runs collapse to single spaces.

#ifndef LORES_METRICS_HPP_
#define LORES_METRICS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lores {

/// Equivalence classes applied before comparison.  The class members are
/// fixed (single quotes ` ´ ‘ ’ ' -> '; double quotes “ ” „ " -> ";
/// dashes - – — и minus -> -); the flags switch each mapping on or off.
struct NormalizationRules {
  bool map_quotes = true;
  bool map_dashes = true;
  bool collapse_whitespace = true;
};

struct EvalResult {
  double cla_pct = 0.0;
  double wla_pct = 0.0;
  std::size_t char_distance = 0;
  std::size_t word_distance = 0;
  std::size_t char_len = 0;  // ground-truth lengths (the L in 1 - d/L)
  std::size_t word_len = 0;
};

/// Canonicalizes quotes/dashes, collapses whitespace runs to single
/// spaces, trims.  Idempotent.
std::string normalize_text(const std::string& s,
                           const NormalizationRules& rules = {});

/// Whitespace tokenization of an already-normalized string.
std::vector<std::string> tokenize_words(const std::string& normalized);

/// Unit-cost edit distance via the two-row dynamic program.
std::size_t levenshtein(const std::u32string& a, const std::u32string& b);
std::size_t levenshtein(const std::vector<std::string>& a,
                        const std::vector<std::string>& b);

/// Scores one hypothesis against one ground truth.  Accuracy can go
/// negative when d > L; it is reported, not clamped.  Throws EvalError
/// when the normalized ground truth is empty.
EvalResult evaluate(const std::string& gt, const std::string& hyp,
                    const NormalizationRules& rules = {});

struct GroupStats {
  std::size_t pages = 0;
  double mean_cla = 0.0;
  double mean_wla = 0.0;
};

struct CorpusResult {
  std::map<std::string, GroupStats> groups;  // keyed by the grouping value
  GroupStats total;                          // over all pairs, ungrouped
};

/// Aggregates per-page results: mean CLA/WLA per group plus corpus totals
/// (totals are computed over all pairs, so they do not depend on the
/// grouping key).
CorpusResult evaluate_corpus(
    const std::vector<std::pair<std::string, EvalResult>>& keyed_results);

}  // namespace lores

#endif  // LORES_METRICS_HPP_
