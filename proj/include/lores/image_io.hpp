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

#ifndef LORES_IMAGE_IO_HPP_
#define LORES_IMAGE_IO_HPP_

#include <filesystem>
#include <optional>

#include "lores/gray_image.hpp"

namespace lores {

// 8-bit grayscale image files.  PGM is binary P5 with maxval 255 (no dpi
// metadata); PNG is 8-bit grayscale with the dpi carried in a pHYs chunk
// when available.  Color PNGs are converted to grayscale on read.
//
// `dpi_override` supplies the resolution when the container has none (PGM
// always; PNG without pHYs); in that case the fallback_dpi is used.
// Throws IoError on any failure.

GrayImage read_pgm(const std::filesystem::path& path, int fallback_dpi = 300);
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

GrayImage read_png(const std::filesystem::path& path, int fallback_dpi = 300);
void write_png(const std::filesystem::path& path, const GrayImage& img);

// Dispatch on the file extension (.pgm / .png, case-insensitive).
GrayImage read_image(const std::filesystem::path& path,
                     std::optional<int> dpi_override = std::nullopt,
                     int fallback_dpi = 300);
void write_image(const std::filesystem::path& path, const GrayImage& img);

}  // namespace lores

#endif  // LORES_IMAGE_IO_HPP_
