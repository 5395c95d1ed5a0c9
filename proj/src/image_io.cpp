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

#include "lores/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "lores/errors.hpp"

namespace lores {

namespace {

// Skips PGM whitespace and '#' comments, then reads one unsigned integer.
int read_pnm_int(std::istream& in, const std::filesystem::path& path) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) {
    throw IoError(path.string() + ": malformed PGM header");
  }
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1 << 26) {
      throw IoError(path.string() + ": PGM header value out of range");
    }
    c = in.get();
  }
  return value;
}

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path, int fallback_dpi) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5') {
    throw IoError(path.string() + ": not a binary PGM (P5) file");
  }
  const int width = read_pnm_int(in, path);
  const int height = read_pnm_int(in, path);
  const int maxval = read_pnm_int(in, path);
  if (width < 1 || height < 1) {
    throw IoError(path.string() + ": invalid PGM dimensions");
  }
  if (maxval < 1 || maxval > 255) {
    throw IoError(path.string() + ": only 8-bit PGM supported (maxval " +
                  std::to_string(maxval) + ")");
  }
  // The header terminates with exactly one whitespace byte, already
  // consumed by read_pnm_int.
  std::vector<char> raw(static_cast<std::size_t>(width) * height);
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw IoError(path.string() + ": truncated PGM pixel data");
  }
  std::vector<double> samples(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    samples[i] =
        static_cast<double>(static_cast<unsigned char>(raw[i])) / maxval;
  }
  return GrayImage(width, height, fallback_dpi, std::move(samples));
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  std::vector<char> raw(static_cast<std::size_t>(img.width()) * img.height());
  const auto& samples = img.samples();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<char>(quantize_sample(samples[i]));
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

GrayImage read_png(const std::filesystem::path& path, int fallback_dpi) {
  PngReadCloser h;
  h.fp = std::fopen(path.string().c_str(), "rb");
  if (!h.fp) {
    throw IoError("cannot open " + path.string());
  }
  h.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                 nullptr);
  if (!h.png) throw IoError("libpng init failed");
  h.info = png_create_info_struct(h.png);
  if (!h.info) throw IoError("libpng init failed");
  if (setjmp(png_jmpbuf(h.png))) {
    throw IoError(path.string() + ": PNG decode failed");
  }
  png_init_io(h.png, h.fp);
  png_read_info(h.png, h.info);

  // Normalize everything to 8-bit grayscale.
  png_set_strip_16(h.png);
  png_set_strip_alpha(h.png);
  if (png_get_color_type(h.png, h.info) == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(h.png);
  }
  if (png_get_color_type(h.png, h.info) == PNG_COLOR_TYPE_GRAY &&
      png_get_bit_depth(h.png, h.info) < 8) {
    png_set_expand_gray_1_2_4_to_8(h.png);
  }
  if (png_get_color_type(h.png, h.info) & PNG_COLOR_MASK_COLOR) {
    png_set_rgb_to_gray(h.png, 1, -1, -1);
  }
  if (png_get_interlace_type(h.png, h.info) != PNG_INTERLACE_NONE) {
    png_set_interlace_handling(h.png);
  }
  png_read_update_info(h.png, h.info);

  const int width = static_cast<int>(png_get_image_width(h.png, h.info));
  const int height = static_cast<int>(png_get_image_height(h.png, h.info));
  if (width < 1 || height < 1) {
    throw IoError(path.string() + ": invalid PNG dimensions");
  }

  int dpi = fallback_dpi;
  png_uint_32 res_x = 0, res_y = 0;
  int unit = 0;
  if (png_get_pHYs(h.png, h.info, &res_x, &res_y, &unit) &&
      unit == PNG_RESOLUTION_METER && res_x > 0) {
    dpi = std::max(1, static_cast<int>(std::lround(res_x * 0.0254)));
  }

  std::vector<unsigned char> raw(static_cast<std::size_t>(width) * height);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = raw.data() + static_cast<std::size_t>(y) * width;
  }
  png_read_image(h.png, rows.data());
  png_read_end(h.png, nullptr);

  std::vector<double> samples(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    samples[i] = dequantize_sample(raw[i]);
  }
  return GrayImage(width, height, dpi, std::move(samples));
}

void write_png(const std::filesystem::path& path, const GrayImage& img) {
  PngWriteCloser h;
  h.fp = std::fopen(path.string().c_str(), "wb");
  if (!h.fp) {
    throw IoError("cannot write " + path.string());
  }
  h.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                  nullptr);
  if (!h.png) throw IoError("libpng init failed");
  h.info = png_create_info_struct(h.png);
  if (!h.info) throw IoError("libpng init failed");
  if (setjmp(png_jmpbuf(h.png))) {
    throw IoError(path.string() + ": PNG encode failed");
  }
  png_init_io(h.png, h.fp);
  png_set_IHDR(h.png, h.info, img.width(), img.height(), 8,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  const auto ppm = static_cast<png_uint_32>(
      std::lround(img.dpi() / 0.0254));  // pixels per meter
  png_set_pHYs(h.png, h.info, ppm, ppm, PNG_RESOLUTION_METER);
  png_write_info(h.png, h.info);

  std::vector<unsigned char> raw(static_cast<std::size_t>(img.width()) *
                                 img.height());
  const auto& samples = img.samples();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = quantize_sample(samples[i]);
  }
  std::vector<png_bytep> rows(img.height());
  for (int y = 0; y < img.height(); ++y) {
    rows[y] = raw.data() + static_cast<std::size_t>(y) * img.width();
  }
  png_write_image(h.png, rows.data());
  png_write_end(h.png, nullptr);
  if (std::fflush(h.fp) != 0) {
    throw IoError("write failed: " + path.string());
  }
}

GrayImage read_image(const std::filesystem::path& path,
                     std::optional<int> dpi_override, int fallback_dpi) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  GrayImage img;
  if (ext == ".pgm") {
    img = read_pgm(path, dpi_override.value_or(fallback_dpi));
  } else if (ext == ".png") {
    img = read_png(path, fallback_dpi);
    if (dpi_override) img.set_dpi(*dpi_override);
  } else {
    throw IoError(path.string() + ": unsupported image format (use .pgm or .png)");
  }
  return img;
}

void write_image(const std::filesystem::path& path, const GrayImage& img) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".pgm") {
    write_pgm(path, img);
  } else if (ext == ".png") {
    write_png(path, img);
  } else {
    throw IoError(path.string() + ": unsupported image format (use .pgm or .png)");
  }
}

}  // namespace lores
