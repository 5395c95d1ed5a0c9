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

#include "lores/reference_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lores::reference {

namespace {

double cubic_weight(double x) {
  const double a = -0.5;
  x = std::abs(x);
  if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return (((x - 5.0) * x + 8.0) * x - 4.0) * a;
  return 0.0;
}

double linear_weight(double x) {
  x = std::abs(x);
  return x < 1.0 ? 1.0 - x : 0.0;
}

int round_dim(double v) {
  return std::max(1, static_cast<int>(std::llround(v)));
}

GrayImage upscale_direct(const GrayImage& img, double scale, bool cubic) {
  const int w_out = round_dim(img.width() * scale);
  const int h_out = round_dim(img.height() * scale);
  const int lo = cubic ? -1 : 0;
  const int hi = cubic ? 2 : 1;
  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
  for (int y = 0; y < h_out; ++y) {
    double sy = (y + 0.5) / scale - 0.5;
    int by = static_cast<int>(std::floor(sy));
    for (int x = 0; x < w_out; ++x) {
      double sx = (x + 0.5) / scale - 0.5;
      int bx = static_cast<int>(std::floor(sx));
      double acc = 0.0;
      for (int j = lo; j <= hi; ++j) {
        double wy = cubic ? cubic_weight(sy - (by + j))
                          : linear_weight(sy - (by + j));
        for (int i = lo; i <= hi; ++i) {
          double wx = cubic ? cubic_weight(sx - (bx + i))
                            : linear_weight(sx - (bx + i));
          acc += wy * wx * img.at_clamped(bx + i, by + j);
        }
      }
      out[static_cast<std::size_t>(y) * w_out + x] = std::clamp(acc, 0.0, 1.0);
    }
  }
  int dpi_out = std::max(1, static_cast<int>(std::llround(img.dpi() * scale)));
  return GrayImage(w_out, h_out, dpi_out, std::move(out));
}

}  // namespace

GrayImage gaussian_blur_dense(const GrayImage& img, double sigma) {
  if (sigma < 0.0) {
    throw std::invalid_argument("gaussian_blur_dense: sigma must be nonnegative");
  }
  if (sigma == 0.0) return img;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  const int size = 2 * radius + 1;

  // Full 2-D kernel as the outer product of the 1-D taps, renormalized so
  // the total mass is exactly the square of the 1-D mass (= 1).
  std::vector<double> k1(size);
  double sum1 = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k1[i + radius] =
        std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    sum1 += k1[i + radius];
  }
  for (double& w : k1) w /= sum1;
  std::vector<double> k2(static_cast<std::size_t>(size) * size);
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      k2[static_cast<std::size_t>(j) * size + i] = k1[j] * k1[i];
    }
  }

  const int w = img.width();
  const int h = img.height();
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int j = -radius; j <= radius; ++j) {
        for (int i = -radius; i <= radius; ++i) {
          acc += k2[static_cast<std::size_t>(j + radius) * size + (i + radius)] *
                 img.at_clamped(x + i, y + j);
        }
      }
      out[static_cast<std::size_t>(y) * w + x] = std::clamp(acc, 0.0, 1.0);
    }
  }
  return GrayImage(w, h, img.dpi(), std::move(out));
}

GrayImage upscale_bilinear_direct(const GrayImage& img, double scale) {
  return upscale_direct(img, scale, /*cubic=*/false);
}

GrayImage upscale_bicubic_direct(const GrayImage& img, double scale) {
  return upscale_direct(img, scale, /*cubic=*/true);
}

GrayImage box_downsample_serial(const GrayImage& img, int factor) {
  if (factor < 1) {
    throw std::invalid_argument("box_downsample_serial: factor must be >= 1");
  }
  if (factor == 1) return img;
  const int w_out = (img.width() + factor - 1) / factor;
  const int h_out = (img.height() + factor - 1) / factor;
  const double inv_area = 1.0 / (static_cast<double>(factor) * factor);
  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
  for (int y = 0; y < h_out; ++y) {
    for (int x = 0; x < w_out; ++x) {
      double acc = 0.0;
      for (int j = 0; j < factor; ++j) {
        for (int i = 0; i < factor; ++i) {
          acc += img.at_clamped(x * factor + i, y * factor + j);
        }
      }
      out[static_cast<std::size_t>(y) * w_out + x] = acc * inv_area;
    }
  }
  int dpi_out = std::max(
      1, static_cast<int>(std::llround(static_cast<double>(img.dpi()) / factor)));
  return GrayImage(w_out, h_out, dpi_out, std::move(out));
}

GrayImage upscale_nearest_serial(const GrayImage& img, double scale) {
  const int w_out = round_dim(img.width() * scale);
  const int h_out = round_dim(img.height() * scale);
  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
  for (int y = 0; y < h_out; ++y) {
    int sy = std::clamp(static_cast<int>(std::floor((y + 0.5) / scale)), 0,
                        img.height() - 1);
    for (int x = 0; x < w_out; ++x) {
      int sx = std::clamp(static_cast<int>(std::floor((x + 0.5) / scale)), 0,
                          img.width() - 1);
      out[static_cast<std::size_t>(y) * w_out + x] = img.at(sx, sy);
    }
  }
  int dpi_out = std::max(1, static_cast<int>(std::llround(img.dpi() * scale)));
  return GrayImage(w_out, h_out, dpi_out, std::move(out));
}

GrayImage rotate_small_serial(const GrayImage& img, double angle_deg) {
  if (std::abs(angle_deg) > 5.0) {
    throw std::invalid_argument("rotate_small_serial: |angle| must be <= 5");
  }
  if (angle_deg == 0.0) return img;
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  const int w = img.width();
  const int h = img.height();
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double dx = x - cx;
      double dy = y - cy;
      double sx = c * dx + s * dy + cx;
      double sy = -s * dx + c * dy + cy;
      int x0 = static_cast<int>(std::floor(sx));
      int y0 = static_cast<int>(std::floor(sy));
      double fx = sx - x0;
      double fy = sy - y0;
      auto tap = [&](int tx, int ty) {
        if (tx < 0 || ty < 0 || tx >= w || ty >= h) return 1.0;
        return img.at(tx, ty);
      };
      double top = tap(x0, y0) * (1.0 - fx) + tap(x0 + 1, y0) * fx;
      double bot = tap(x0, y0 + 1) * (1.0 - fx) + tap(x0 + 1, y0 + 1) * fx;
      out[static_cast<std::size_t>(y) * w + x] =
          std::clamp(top * (1.0 - fy) + bot * fy, 0.0, 1.0);
    }
  }
  return GrayImage(w, h, img.dpi(), std::move(out));
}

}  // namespace lores::reference
