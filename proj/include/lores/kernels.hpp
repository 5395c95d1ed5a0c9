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
// Resampling, blur and degradation kernels.  All functions are pure: they
// take immutable images and return new ones, so callers may fan out over
// images or rows freely.  Inner loops are OpenMP-parallel over output rows;
// every output pixel is computed independently, so results do not depend on
// the thread count.  Serial counterparts live in reference_kernels.hpp.
//
// Conventions shared by all interpolators:
//   - pixel-center alignment (output pixel x samples source at
//     (x + 0.5) / scale - 0.5), which makes scale 1 an identity;
//   - edge handling by replication;
//   - final samples clamped to [0, 1] (intermediate sums are not).

#ifndef LORES_KERNELS_HPP_
#define LORES_KERNELS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lores/gray_image.hpp"

namespace lores {

/// One of the seven canonical upscaling treatments: nearest-neighbour
/// followed by a Gaussian with sigma in {0, 0.5, 1, 1.5, 2} (sigma given in
/// target-resolution pixels), plain bilinear, or plain bicubic.  Arbitrary
/// nonnegative sigmas are accepted outside the canonical set.
struct UpscaleMethod {
  enum class Kind { kNearestGauss, kBilinear, kBicubic };

  Kind kind = Kind::kNearestGauss;
  double sigma = 0.0;  // meaningful for kNearestGauss only

  static UpscaleMethod nearest_gauss(double sigma);
  static UpscaleMethod bilinear();
  static UpscaleMethod bicubic();

  /// Stable identifier used for files, config and reports:
  /// nn-gauss-0, nn-gauss-0.5, ..., nn-gauss-2.0, bilinear, bicubic.
  std::string tag() const;

  /// Inverse of tag(); throws std::invalid_argument on unknown tags.
  static UpscaleMethod from_tag(const std::string& tag);

  /// The seven-method set in tag order.
  static std::vector<UpscaleMethod> canonical_set();

  bool operator==(const UpscaleMethod& other) const = default;
};

/// Parameters of the optional training-style rotation: the page is rotated
/// with probability `prob` by an angle drawn from N(mean_deg, std_deg^2).
struct RotateSpec {
  double mean_deg = 0.0;
  double std_deg = 0.5;
  double prob = 0.5;
};

/// Degradation recipe: optional small rotation, box downsample to
/// target_dpi, then additive Gaussian pixel noise.  Deterministic given
/// rng_seed; draw order is rotation coin, rotation angle (both drawn
/// whenever rotation is enabled, whether or not the coin applies it),
/// then one normal per pixel in row-major order.
struct DegradeSpec {
  int target_dpi = 60;
  double noise_sigma = 0.02;
  std::optional<RotateSpec> rotate = RotateSpec{};
  std::uint64_t rng_seed = 0;
};

/// Integer rectangle in pixel coordinates (used here for line regions;
/// also the word bounding-box type in the recognition model).
struct PixelRect {
  int left = 0;
  int top = 0;
  int width = 0;
  int height = 0;

  int right() const { return left + width; }
  int bottom() const { return top + height; }

  bool operator==(const PixelRect& other) const = default;
};

/// Average each factor x factor block; output dims are ceil(input / factor)
/// with remainder blocks filled by edge replication.  Output dpi is
/// input dpi / factor rounded to nearest.
GrayImage box_downsample(const GrayImage& img, int factor);

/// Nearest-neighbour (box) upscaling; output dims round(input * scale).
GrayImage upscale_nearest(const GrayImage& img, double scale);

/// Separable Gaussian, radius ceil(3 sigma), kernel renormalized to sum 1,
/// edge replication.  sigma 0 returns the input unchanged.
GrayImage gaussian_blur(const GrayImage& img, double sigma);

/// Pixel-center bilinear interpolation.
GrayImage upscale_bilinear(const GrayImage& img, double scale);

/// Cubic convolution with a = -0.5 (Catmull-Rom), separable.
GrayImage upscale_bicubic(const GrayImage& img, double scale);

/// Dispatch on method.  For nearest+Gaussian the blur sigma is defined in
/// the nominal 300-dpi frame, so at an actual scale s it is applied as
/// sigma * s * img.dpi() / 300 (identical to sigma when upscaling the whole
/// page to 300 dpi, proportionally reduced for line regions).
GrayImage apply_upscale(const GrayImage& img, const UpscaleMethod& method,
                        double scale);

/// The effective blur sigma used by apply_upscale (exposed for tests).
double effective_sigma(double sigma, double scale, int dpi);

/// Rotation about the image center with bilinear resampling; uncovered
/// regions are filled with white.  Dimensions are unchanged.  |angle_deg|
/// must be <= 5 (the pipeline only ever needs fractions of a degree).
GrayImage rotate_small(const GrayImage& img, double angle_deg);

/// Full degradation pipeline for making low-resolution pages out of
/// 300-dpi sources.  Throws std::invalid_argument when img.dpi() is not an
/// integer multiple of spec.target_dpi.
GrayImage degrade(const GrayImage& img300, const DegradeSpec& spec);

/// Crop a low-resolution region and upscale it with the given method so
/// its height becomes exactly target_height (the recognition network's
/// input height, 36 px).  bbox is in the low-resolution pixel frame and
/// must lie within the image.
GrayImage render_line_region(const GrayImage& orig, const PixelRect& bbox,
                             int target_height, const UpscaleMethod& method);

}  // namespace lores

#endif  // LORES_KERNELS_HPP_
