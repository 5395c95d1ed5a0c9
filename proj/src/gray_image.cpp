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

#include "lores/gray_image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lores {

namespace {

void check_dims(int width, int height, int dpi) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("GrayImage: dimensions must be positive, got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (dpi < 1) {
    throw std::invalid_argument("GrayImage: dpi must be positive, got " +
                                std::to_string(dpi));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, int dpi)
    : width_(width),
      height_(height),
      dpi_(dpi),
      samples_(static_cast<std::size_t>(width) * height, 1.0) {
  check_dims(width, height, dpi);
}

GrayImage::GrayImage(int width, int height, int dpi,
                     std::vector<double> samples)
    : width_(width), height_(height), dpi_(dpi), samples_(std::move(samples)) {
  check_dims(width, height, dpi);
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument(
        "GrayImage: sample count " + std::to_string(samples_.size()) +
        " does not match " + std::to_string(width) + "x" +
        std::to_string(height));
  }
}

double GrayImage::at_clamped(int x, int y) const {
  x = std::clamp(x, 0, width_ - 1);
  y = std::clamp(y, 0, height_ - 1);
  return samples_[idx(x, y)];
}

void GrayImage::set_dpi(int dpi) {
  if (dpi < 1) {
    throw std::invalid_argument("GrayImage: dpi must be positive");
  }
  dpi_ = dpi;
}

bool GrayImage::samples_in_range() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double v) { return v >= 0.0 && v <= 1.0; });
}

std::uint8_t quantize_sample(double v) {
  double scaled = std::floor(v * 255.0 + 0.5);
  if (scaled < 0.0) return 0;
  if (scaled > 255.0) return 255;
  return static_cast<std::uint8_t>(scaled);
}

double dequantize_sample(std::uint8_t q) { return q / 255.0; }

}  // namespace lores
