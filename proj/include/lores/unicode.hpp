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

#ifndef LORES_UNICODE_HPP_
#define LORES_UNICODE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace lores {

// Minimal UTF-8 utilities for the text handling this pipeline needs.
// Invalid byte sequences decode to U+FFFD rather than failing: OCR output
// is untrusted text and scoring must stay total.

std::u32string utf8_decode(const std::string& s);
std::string utf8_encode(const std::u32string& s);
std::string utf8_encode(char32_t cp);

// Punctuation class used for lexicon lookups ("after removing any
// punctuation").  Covers ASCII punctuation, the Latin-1 punctuation signs,
// and the General Punctuation block (quotes, dashes, ellipsis, daggers).
bool is_punct(char32_t cp);

// Whitespace class for collapse/tokenization: ASCII whitespace plus the
// common Unicode space separators.
bool is_space(char32_t cp);

// ASCII-only case folding (A-Z to a-z), applied code point by code point.
char32_t fold_ascii(char32_t cp);
std::string fold_ascii(const std::string& s);

}  // namespace lores

#endif  // LORES_UNICODE_HPP_
