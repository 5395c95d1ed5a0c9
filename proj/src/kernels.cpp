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

#include "lores/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "lores/rng.hpp"

namespace lores {

namespace {

const double kCubicA = -0.5;  // Catmull-Rom

// Cubic convolution weight, support [-2, 2].
double cubic_weight(double x) {
  x = std::abs(x);
  if (x < 1.0) {
    return ((kCubicA + 2.0) * x - (kCubicA + 3.0)) * x * x + 1.0;
  }
  if (x < 2.0) {
    return (((x - 5.0) * x + 8.0) * x - 4.0) * kCubicA;
  }
  return 0.0;
}

int round_dim(double v) {
  return std::max(1, static_cast<int>(std::llround(v)));
}

// Precomputed taps for one axis of a separable interpolation pass.
// Indices are already clamped to the source range (edge replication).
struct AxisTaps {
  int taps_per_out = 0;
  std::vector<int> index;     // out_size * taps_per_out
  std::vector<double> weight;  // same layout
};

AxisTaps make_axis_taps(int in_size, int out_size, double scale, bool cubic) {
  AxisTaps taps;
  taps.taps_per_out = cubic ? 4 : 2;
  taps.index.resize(static_cast<std::size_t>(out_size) * taps.taps_per_out);
  taps.weight.resize(taps.index.size());
  for (int o = 0; o < out_size; ++o) {
    double src = (o + 0.5) / scale - 0.5;
    int base = static_cast<int>(std::floor(src));
    int first = cubic ? base - 1 : base;
    for (int t = 0; t < taps.taps_per_out; ++t) {
      int i = first + t;
      double w;
      if (cubic) {
        w = cubic_weight(src - i);
      } else {
        double d = std::abs(src - i);
        w = d < 1.0 ? 1.0 - d : 0.0;
      }
      std::size_t slot = static_cast<std::size_t>(o) * taps.taps_per_out + t;
      taps.index[slot] = std::clamp(i, 0, in_size - 1);
      taps.weight[slot] = w;
    }
  }
  return taps;
}

// Two-pass separable resampling.  The intermediate buffer stays unclamped
// so overshoot (bicubic) is handled once at the end, keeping the result
// equal to a direct 2-D kernel sum up to rounding.
GrayImage resample_separable(const GrayImage& img, double scale, bool cubic) {
  const int w_in = img.width();
  const int h_in = img.height();
  const int w_out = round_dim(w_in * scale);
  const int h_out = round_dim(h_in * scale);
  const AxisTaps hx = make_axis_taps(w_in, w_out, scale, cubic);
  const AxisTaps vy = make_axis_taps(h_in, h_out, scale, cubic);
  const int nt = hx.taps_per_out;

  std::vector<double> tmp(static_cast<std::size_t>(w_out) * h_in);
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h_in; ++y) {
    for (int x = 0; x < w_out; ++x) {
      double acc = 0.0;
      for (int t = 0; t < nt; ++t) {
        std::size_t slot = static_cast<std::size_t>(x) * nt + t;
        acc += hx.weight[slot] * img.at(hx.index[slot], y);
      }
      tmp[static_cast<std::size_t>(y) * w_out + x] = acc;
    }
  }

  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h_out; ++y) {
    for (int x = 0; x < w_out; ++x) {
      double acc = 0.0;
      for (int t = 0; t < nt; ++t) {
        std::size_t slot = static_cast<std::size_t>(y) * nt + t;
        acc += vy.weight[slot] *
               tmp[static_cast<std::size_t>(vy.index[slot]) * w_out + x];
      }
      out[static_cast<std::size_t>(y) * w_out + x] =
          std::clamp(acc, 0.0, 1.0);
    }
  }

  int dpi_out = std::max(1, static_cast<int>(std::llround(img.dpi() * scale)));
  return GrayImage(w_out, h_out, dpi_out, std::move(out));
}

std::string format_sigma(double sigma) {
  if (sigma == 0.0) return "0";
  double tenths = sigma * 10.0;
  if (tenths == std::floor(tenths)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", sigma);
    return buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", sigma);
  return buf;
}

}  // namespace

UpscaleMethod UpscaleMethod::nearest_gauss(double sigma) {
  if (sigma < 0.0) {
    throw std::invalid_argument("UpscaleMethod: sigma must be nonnegative");
  }
  return UpscaleMethod{Kind::kNearestGauss, sigma};
}

UpscaleMethod UpscaleMethod::bilinear() {
  return UpscaleMethod{Kind::kBilinear, 0.0};
}

UpscaleMethod UpscaleMethod::bicubic() {
  return UpscaleMethod{Kind::kBicubic, 0.0};
}

std::string UpscaleMethod::tag() const {
  switch (kind) {
    case Kind::kBilinear:
      return "bilinear";
    case Kind::kBicubic:
      return "bicubic";
    case Kind::kNearestGauss:
      return "nn-gauss-" + format_sigma(sigma);
  }
  return "";
}

UpscaleMethod UpscaleMethod::from_tag(const std::string& tag) {
  if (tag == "bilinear") return bilinear();
  if (tag == "bicubic") return bicubic();
  const std::string prefix = "nn-gauss-";
  if (tag.rfind(prefix, 0) == 0) {
    std::size_t pos = 0;
    const std::string digits = tag.substr(prefix.size());
    double sigma = 0.0;
    try {
      sigma = std::stod(digits, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown method tag: " + tag);
    }
    if (pos != digits.size() || sigma < 0.0) {
      throw std::invalid_argument("unknown method tag: " + tag);
    }
    return nearest_gauss(sigma);
  }
  throw std::invalid_argument("unknown method tag: " + tag);
}

std::vector<UpscaleMethod> UpscaleMethod::canonical_set() {
  return {nearest_gauss(0.0), nearest_gauss(0.5), nearest_gauss(1.0),
          nearest_gauss(1.5), nearest_gauss(2.0), bilinear(), bicubic()};
}

GrayImage box_downsample(const GrayImage& img, int factor) {
  if (factor < 1) {
    throw std::invalid_argument("box_downsample: factor must be >= 1");
  }
  if (factor == 1) return img;
  const int w_out = (img.width() + factor - 1) / factor;
  const int h_out = (img.height() + factor - 1) / factor;
  const double inv_area = 1.0 / (static_cast<double>(factor) * factor);
  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
#ifdef _OPENMP
#pragma omp parallel for
#endif
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

GrayImage upscale_nearest(const GrayImage& img, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("upscale_nearest: scale must be positive");
  }
  const int w_out = round_dim(img.width() * scale);
  const int h_out = round_dim(img.height() * scale);
  std::vector<int> src_x(w_out);
  for (int x = 0; x < w_out; ++x) {
    src_x[x] = std::clamp(static_cast<int>(std::floor((x + 0.5) / scale)), 0,
                          img.width() - 1);
  }
  std::vector<double> out(static_cast<std::size_t>(w_out) * h_out);
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h_out; ++y) {
    int sy = std::clamp(static_cast<int>(std::floor((y + 0.5) / scale)), 0,
                        img.height() - 1);
    for (int x = 0; x < w_out; ++x) {
      out[static_cast<std::size_t>(y) * w_out + x] = img.at(src_x[x], sy);
    }
  }
  int dpi_out = std::max(1, static_cast<int>(std::llround(img.dpi() * scale)));
  return GrayImage(w_out, h_out, dpi_out, std::move(out));
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  if (sigma < 0.0) {
    throw std::invalid_argument("gaussian_blur: sigma must be nonnegative");
  }
  if (sigma == 0.0) return img;

  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    kernel[i + radius] = w;
    sum += w;
  }
  for (double& w : kernel) w /= sum;

  const int w_img = img.width();
  const int h_img = img.height();
  std::vector<double> tmp(static_cast<std::size_t>(w_img) * h_img);
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h_img; ++y) {
    for (int x = 0; x < w_img; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        acc += kernel[i + radius] * img.at_clamped(x + i, y);
      }
      tmp[static_cast<std::size_t>(y) * w_img + x] = acc;
    }
  }
  std::vector<double> out(tmp.size());
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h_img; ++y) {
    for (int x = 0; x < w_img; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        int sy = std::clamp(y + i, 0, h_img - 1);
        acc += kernel[i + radius] * tmp[static_cast<std::size_t>(sy) * w_img + x];
      }
      out[static_cast<std::size_t>(y) * w_img + x] = std::clamp(acc, 0.0, 1.0);
    }
  }
  return GrayImage(w_img, h_img, img.dpi(), std::move(out));
}

GrayImage upscale_bilinear(const GrayImage& img, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("upscale_bilinear: scale must be positive");
  }
  return resample_separable(img, scale, /*cubic=*/false);
}

GrayImage upscale_bicubic(const GrayImage& img, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("upscale_bicubic: scale must be positive");
  }
  return resample_separable(img, scale, /*cubic=*/true);
}

double effective_sigma(double sigma, double scale, int dpi) {
  return sigma * scale * dpi / 300.0;
}

GrayImage apply_upscale(const GrayImage& img, const UpscaleMethod& method,
                        double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("apply_upscale: scale must be positive");
  }
  switch (method.kind) {
    case UpscaleMethod::Kind::kBilinear:
      return upscale_bilinear(img, scale);
    case UpscaleMethod::Kind::kBicubic:
      return upscale_bicubic(img, scale);
    case UpscaleMethod::Kind::kNearestGauss: {
      GrayImage up = upscale_nearest(img, scale);
      double s = effective_sigma(method.sigma, scale, img.dpi());
      return s > 0.0 ? gaussian_blur(up, s) : up;
    }
  }
  throw std::logic_error("apply_upscale: unreachable");
}

GrayImage rotate_small(const GrayImage& img, double angle_deg) {
  if (std::abs(angle_deg) > 5.0) {
    throw std::invalid_argument("rotate_small: |angle| must be <= 5 degrees");
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
#ifdef _OPENMP
#pragma omp parallel for
#endif
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      // Inverse map: rotate the output pixel back into the source frame.
      double dx = x - cx;
      double dy = y - cy;
      double sx = c * dx + s * dy + cx;
      double sy = -s * dx + c * dy + cy;
      int x0 = static_cast<int>(std::floor(sx));
      int y0 = static_cast<int>(std::floor(sy));
      double fx = sx - x0;
      double fy = sy - y0;
      auto tap = [&](int tx, int ty) {
        if (tx < 0 || ty < 0 || tx >= w || ty >= h) return 1.0;  // white fill
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

GrayImage degrade(const GrayImage& img300, const DegradeSpec& spec) {
  if (spec.target_dpi < 1) {
    throw std::invalid_argument("degrade: target dpi must be positive");
  }
  if (img300.dpi() % spec.target_dpi != 0) {
    throw std::invalid_argument(
        "degrade: source dpi " + std::to_string(img300.dpi()) +
        " is not an integer multiple of target dpi " +
        std::to_string(spec.target_dpi));
  }
  if (spec.noise_sigma < 0.0) {
    throw std::invalid_argument("degrade: noise sigma must be nonnegative");
  }
  const int factor = img300.dpi() / spec.target_dpi;

  Prng rng(spec.rng_seed);
  GrayImage work = img300;
  if (spec.rotate) {
    // Coin and angle are always drawn so the noise stream does not depend
    // on the coin's outcome.
    const double coin = rng.next_uniform();
    double angle =
        spec.rotate->mean_deg + spec.rotate->std_deg * rng.next_normal();
    angle = std::clamp(angle, -5.0, 5.0);
    if (coin < spec.rotate->prob) {
      work = rotate_small(work, angle);
    }
  }
  GrayImage out = factor == 1 ? std::move(work) : box_downsample(work, factor);
  if (spec.noise_sigma > 0.0) {
    for (double& v : out.samples()) {
      v = std::clamp(v + spec.noise_sigma * rng.next_normal(), 0.0, 1.0);
    }
  }
  return out;
}

GrayImage render_line_region(const GrayImage& orig, const PixelRect& bbox,
                             int target_height, const UpscaleMethod& method) {
  if (target_height < 1) {
    throw std::invalid_argument("render_line_region: target height must be >= 1");
  }
  if (bbox.width < 1 || bbox.height < 1 || bbox.left < 0 || bbox.top < 0 ||
      bbox.right() > orig.width() || bbox.bottom() > orig.height()) {
    throw std::invalid_argument("render_line_region: bbox out of bounds");
  }
  std::vector<double> crop_samples(static_cast<std::size_t>(bbox.width) *
                                   bbox.height);
  for (int y = 0; y < bbox.height; ++y) {
    for (int x = 0; x < bbox.width; ++x) {
      crop_samples[static_cast<std::size_t>(y) * bbox.width + x] =
          orig.at(bbox.left + x, bbox.top + y);
    }
  }
  GrayImage crop(bbox.width, bbox.height, orig.dpi(), std::move(crop_samples));
  const double scale = static_cast<double>(target_height) / bbox.height;
  return apply_upscale(crop, method, scale);
}

}  // namespace lores
