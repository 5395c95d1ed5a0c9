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
// Serial reference implementations of the raster kernels.  These are kept
// deliberately naive and single-threaded: the blur is a dense 2-D
// convolution and the interpolators evaluate the full 2-D kernel sum per
// output pixel (no separable passes).  Tests check the production kernels
// against them, and the benchmark target measures the gap.

#ifndef LORES_REFERENCE_KERNELS_HPP_
#define LORES_REFERENCE_KERNELS_HPP_

#include "lores/gray_image.hpp"
#include "lores/kernels.hpp"

namespace lores::reference {

// Dense 2-D Gaussian convolution (outer-product kernel, radius ceil(3
// sigma), normalized to total mass 1), edge replication.
GrayImage gaussian_blur_dense(const GrayImage& img, double sigma);

// Direct 2-D bilinear / cubic-convolution evaluation: one 2x2 or 4x4
// weighted sum per output pixel, indices edge-clamped.
GrayImage upscale_bilinear_direct(const GrayImage& img, double scale);
GrayImage upscale_bicubic_direct(const GrayImage& img, double scale);

// Serial twins of the remaining parallel kernels (same arithmetic, no
// OpenMP); expected to match the production kernels bit for bit.
GrayImage box_downsample_serial(const GrayImage& img, int factor);
GrayImage upscale_nearest_serial(const GrayImage& img, double scale);
GrayImage rotate_small_serial(const GrayImage& img, double angle_deg);

}  // namespace lores::reference

#endif  // LORES_REFERENCE_KERNELS_HPP_
