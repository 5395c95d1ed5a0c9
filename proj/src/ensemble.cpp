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

#include "lores/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "lores/errors.hpp"
#include "lores/unicode.hpp"

namespace lores {

Lexicon::Lexicon(const std::vector<std::string>& words, bool case_insensitive)
    : case_insensitive_(case_insensitive) {
  for (const auto& w : words) {
    if (w.empty()) continue;
    words_.insert(case_insensitive_ ? fold_ascii(w) : w);
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path,
                      bool case_insensitive) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open lexicon " + path.string());
  }
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  return Lexicon(words, case_insensitive);
}

bool Lexicon::contains(const std::string& word) const {
  if (word.empty()) return false;
  return words_.count(case_insensitive_ ? fold_ascii(word) : word) > 0;
}

double modified_confidence(double c, const CmodParams& params) {
  if (c < 0.0 || c > 100.0) {
    throw std::invalid_argument("modified_confidence: c must be in [0, 100]");
  }
  if (c < params.breakpoint) {
    return params.low_slope * c + params.low_intercept;
  }
  return params.high_slope * c + params.high_intercept;
}

std::string strip_punctuation(const std::string& word) {
  std::u32string cps = utf8_decode(word);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_punct(cps[b])) ++b;
  while (e > b && is_punct(cps[e - 1])) --e;
  return utf8_encode(cps.substr(b, e - b));
}

double iou(const BBox& a, const BBox& b) {
  const int ix = std::max(0, std::min(a.right(), b.right()) -
                                 std::max(a.left, b.left));
  const int iy = std::max(0, std::min(a.bottom(), b.bottom()) -
                                 std::max(a.top, b.top));
  const double inter = static_cast<double>(ix) * iy;
  const double area_a = static_cast<double>(a.width) * a.height;
  const double area_b = static_cast<double>(b.width) * b.height;
  const double uni = area_a + area_b - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

std::vector<std::pair<int, int>> align_words(const PageRec& master,
                                             const PageRec& other,
                                             double iou_threshold) {
  const auto m_words = master.flat_words();
  const auto o_words = other.flat_words();

  struct Pair {
    double overlap;
    int m;
    int o;
  };
  std::vector<Pair> pairs;
  for (int m = 0; m < static_cast<int>(m_words.size()); ++m) {
    for (int o = 0; o < static_cast<int>(o_words.size()); ++o) {
      double v = iou(m_words[m]->bbox, o_words[o]->bbox);
      if (v >= iou_threshold) pairs.push_back({v, m, o});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    if (a.m != b.m) return a.m < b.m;
    return a.o < b.o;
  });

  std::vector<bool> m_used(m_words.size(), false);
  std::vector<bool> o_used(o_words.size(), false);
  std::vector<std::pair<int, int>> matches;
  for (const Pair& p : pairs) {
    if (m_used[p.m] || o_used[p.o]) continue;
    m_used[p.m] = true;
    o_used[p.o] = true;
    matches.emplace_back(p.m, p.o);
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

VoteResult vote(const std::vector<Candidate>& candidates,
                const Lexicon& lexicon, double penalty) {
  if (candidates.empty()) {
    throw std::invalid_argument("vote: candidate list is empty");
  }

  // Penalty first, then group by the exact word string (punctuation kept;
  // stripping affects only the lexicon lookup).
  struct Group {
    double sum = 0.0;
    int count = 0;
  };
  std::map<std::string, Group> groups;
  for (const Candidate& cand : candidates) {
    double c = cand.c_mod;
    if (penalty != 0.0 && !lexicon.contains(strip_punctuation(cand.word))) {
      c -= penalty;
    }
    Group& g = groups[cand.word];
    g.sum += c;
    g.count += 1;
  }

  VoteResult result;
  int best_count = -1;
  for (const auto& [word, g] : groups) {
    const double score = g.sum / std::sqrt(static_cast<double>(g.count));
    result.tally.push_back(TallyEntry{word, score, g.count});
    // The map iterates words ascending, so on a full (score, count) tie
    // the lexicographically smaller word is already in place.
    bool better;
    if (best_count < 0) {
      better = true;
    } else if (score != result.score) {
      better = score > result.score;
    } else {
      better = g.count > best_count;
    }
    if (better) {
      result.winner = word;
      result.score = score;
      best_count = g.count;
    }
  }
  return result;
}

std::string select_master(int dpi_profile,
                          const std::vector<std::string>& available,
                          const std::string& override_tag) {
  std::string tag;
  if (override_tag != "auto" && !override_tag.empty()) {
    tag = override_tag;
  } else if (dpi_profile == 60) {
    tag = "nn-gauss-1.0";
  } else if (dpi_profile == 75) {
    tag = "bicubic";
  } else {
    throw std::invalid_argument(
        "select_master: no default master for dpi profile " +
        std::to_string(dpi_profile) + " (use an explicit master tag)");
  }
  if (std::find(available.begin(), available.end(), tag) == available.end()) {
    throw std::invalid_argument("select_master: tag '" + tag +
                                "' not among the available outputs");
  }
  return tag;
}

MergeResult merge(const std::vector<MethodOutput>& outputs,
                  const EnsembleConfig& config, const Lexicon& lexicon) {
  if (outputs.empty()) {
    throw std::invalid_argument("merge: no outputs");
  }
  std::vector<const MethodOutput*> sorted;
  for (const auto& o : outputs) sorted.push_back(&o);
  std::sort(sorted.begin(), sorted.end(),
            [](const MethodOutput* a, const MethodOutput* b) {
              return a->method_tag < b->method_tag;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->method_tag == sorted[i - 1]->method_tag) {
      throw std::invalid_argument("merge: duplicate method tag '" +
                                  sorted[i]->method_tag + "'");
    }
  }

  std::vector<std::string> tags;
  for (const auto* o : sorted) tags.push_back(o->method_tag);
  const std::string master_tag =
      select_master(config.dpi_profile, tags, config.master_tag);

  const MethodOutput* master = nullptr;
  std::vector<const MethodOutput*> others;
  for (const auto* o : sorted) {
    if (o->method_tag == master_tag) {
      master = o;
    } else {
      others.push_back(o);
    }
  }

  const auto master_words = master->page.flat_words();
  const int n_words = static_cast<int>(master_words.size());

  // candidate_sets[m] holds the master's own reading plus at most one
  // aligned word per other output.
  std::vector<std::vector<WordReport::CandidateReport>> candidate_sets(n_words);
  for (int m = 0; m < n_words; ++m) {
    candidate_sets[m].push_back(WordReport::CandidateReport{
        master_tag, master_words[m]->text, master_words[m]->conf,
        modified_confidence(master_words[m]->conf, config.cmod), false});
  }
  for (const auto* other : others) {
    const auto other_words = other->page.flat_words();
    for (auto [m, o] : align_words(master->page, other->page,
                                   config.iou_threshold)) {
      candidate_sets[m].push_back(WordReport::CandidateReport{
          other->method_tag, other_words[o]->text, other_words[o]->conf,
          modified_confidence(other_words[o]->conf, config.cmod), false});
    }
  }

  MergeResult result;
  result.merged = master->page;
  result.report.master_tag = master_tag;
  result.report.words.resize(n_words);

  std::vector<WordRec*> merged_words;
  for (auto& line : result.merged.lines) {
    for (auto& w : line.words) merged_words.push_back(&w);
  }

  for (int m = 0; m < n_words; ++m) {
    auto& reports = candidate_sets[m];
    std::vector<Candidate> cands;
    for (auto& cr : reports) {
      cands.push_back(Candidate{cr.text, cr.c_mod, cr.tag});
      // Mirror vote()'s penalty in the report so the audit trail shows the
      // value that actually voted.
      cr.penalized = config.lexicon_penalty != 0.0 &&
                     !lexicon.contains(strip_punctuation(cr.text));
      if (cr.penalized) cr.c_mod -= config.lexicon_penalty;
    }
    VoteResult v = vote(cands, lexicon, config.lexicon_penalty);
    merged_words[m]->text = v.winner;

    WordReport& wr = result.report.words[m];
    wr.bbox = master_words[m]->bbox;
    wr.master_text = master_words[m]->text;
    wr.winner = v.winner;
    wr.winner_score = v.score;
    wr.unmatched = reports.size() == 1 && !others.empty();
    wr.candidates = reports;
    wr.tally = v.tally;
  }
  return result;
}

}  // namespace lores
