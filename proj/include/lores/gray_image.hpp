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

#ifndef LORES_GRAY_IMAGE_HPP_
#define LORES_GRAY_IMAGE_HPP_

#include <cstdint>
#include <vector>

namespace lores {

/// Single-channel raster image.  Samples are real-valued intensities in
/// [0, 1] (0 = black, 1 = white), stored row-major; quantization to 8 bits
/// happens only at file I/O.  The dpi field is metadata carried through the
/// pipeline so kernels can relate pixel sizes across resolutions.
class GrayImage {
 public:
  GrayImage() = default;

  // White image of the given size.
  GrayImage(int width, int height, int dpi);

  // Takes ownership of `samples`; samples.size() must equal width * height.
  GrayImage(int width, int height, int dpi, std::vector<double> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  int dpi() const { return dpi_; }
  std::int64_t sample_count() const {
    return static_cast<std::int64_t>(width_) * height_;
  }

  double at(int x, int y) const { return samples_[idx(x, y)]; }
  double& at(int x, int y) { return samples_[idx(x, y)]; }

  // Edge-replicated access: out-of-range coordinates clamp to the border.
  double at_clamped(int x, int y) const;

  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }

  void set_dpi(int dpi);

  // True when every sample lies in [0, 1].
  bool samples_in_range() const;

  bool operator==(const GrayImage& other) const = default;

 private:
  std::int64_t idx(int x, int y) const {
    return static_cast<std::int64_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  int dpi_ = 0;
  std::vector<double> samples_;
};

// Quantization used at every file boundary: round half away from zero,
// clamped to [0, 255].
std::uint8_t quantize_sample(double v);
double dequantize_sample(std::uint8_t q);

}  // namespace lores

#endif  // LORES_GRAY_IMAGE_HPP_
