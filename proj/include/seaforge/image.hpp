#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "seaforge/math.hpp"

namespace seaforge {

inline constexpr int kImageSize = 384;
inline constexpr std::size_t kPixelCount = static_cast<std::size_t>(kImageSize) * kImageSize;

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb8&) const = default;
};

/// 384x384 8-bit sRGB frame, row-major, interleaved RGB.
class ImageBuffer {
public:
  static constexpr int width = kImageSize;
  static constexpr int height = kImageSize;
  static constexpr int channels = 3;

  ImageBuffer() : data_(kPixelCount * channels, 0) {}

  std::uint8_t* row(int y) { return data_.data() + static_cast<std::size_t>(y) * width * channels; }
  const std::uint8_t* row(int y) const { return data_.data() + static_cast<std::size_t>(y) * width * channels; }

  Rgb8 at(int x, int y) const
  {
    const auto* p = row(y) + x * channels;
    return {p[0], p[1], p[2]};
  }
  void set(int x, int y, Rgb8 c)
  {
    auto* p = row(y) + x * channels;
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }

  std::span<std::uint8_t> bytes() { return data_; }
  std::span<const std::uint8_t> bytes() const { return data_; }

  bool operator==(const ImageBuffer&) const = default;

private:
  std::vector<std::uint8_t> data_;
};

/// Linear-light float working frame, same geometry as ImageBuffer.
class LinearFrame {
public:
  static constexpr int width = kImageSize;
  static constexpr int height = kImageSize;

  LinearFrame() : px_(kPixelCount) {}
  explicit LinearFrame(const Vec3& fill) : px_(kPixelCount, to_f(fill)) {}

  struct Px {
    float r = 0.f, g = 0.f, b = 0.f;
    bool operator==(const Px&) const = default;
  };

  Px& at(int x, int y) { return px_[static_cast<std::size_t>(y) * width + x]; }
  const Px& at(int x, int y) const { return px_[static_cast<std::size_t>(y) * width + x]; }

  Vec3 get(int x, int y) const
  {
    const auto& p = at(x, y);
    return {p.r, p.g, p.b};
  }
  void set(int x, int y, const Vec3& c) { at(x, y) = to_f(c); }

  std::span<Px> pixels() { return px_; }
  std::span<const Px> pixels() const { return px_; }

  bool operator==(const LinearFrame&) const = default;

private:
  static Px to_f(const Vec3& c) { return {static_cast<float>(c.x), static_cast<float>(c.y), static_cast<float>(c.z)}; }
  std::vector<Px> px_;
};

/// Per-pixel byte mask (vessel coverage, grit alpha, ...).
class Mask {
public:
  static constexpr int width = kImageSize;
  static constexpr int height = kImageSize;

  Mask() : v_(kPixelCount, 0) {}

  std::uint8_t& at(int x, int y) { return v_[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return v_[static_cast<std::size_t>(y) * width + x]; }
  std::span<const std::uint8_t> values() const { return v_; }

  std::size_t count() const { return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](auto v) { return v != 0; })); }
  bool operator==(const Mask&) const = default;

private:
  std::vector<std::uint8_t> v_;
};

constexpr double luminance(const Vec3& c) { return 0.2126 * c.x + 0.7152 * c.y + 0.0722 * c.z; }
inline float luminance(const LinearFrame::Px& p) { return 0.2126f * p.r + 0.7152f * p.g + 0.0722f * p.b; }

inline double srgb_to_linear(double v)
{
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

inline double linear_to_srgb(double v)
{
  v = std::clamp(v, 0.0, 1.0);
  return v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

namespace detail {

struct SrgbTables {
  std::array<float, 256> decode{};
  std::array<float, 257> lower{};        // lower[b] = smallest linear value that encodes to b
  std::array<std::uint8_t, 4097> coarse{}; // starting byte for linear k / 4096

  SrgbTables()
  {
    for (int b = 0; b < 256; ++b)
      decode[b] = static_cast<float>(srgb_to_linear(b / 255.0));
    lower[0] = -INFINITY;
    for (int b = 1; b < 256; ++b)
      lower[b] = static_cast<float>(srgb_to_linear((b - 0.5) / 255.0));
    lower[256] = INFINITY;
    int b = 0;
    for (int k = 0; k <= 4096; ++k) {
      const float lin = static_cast<float>(k) / 4096.0f;
      while (lin >= lower[b + 1])
        ++b;
      coarse[k] = static_cast<std::uint8_t>(b);
    }
  }
};

inline const SrgbTables& srgb_tables()
{
  static const SrgbTables t;
  return t;
}

} // namespace detail

/// Exact round-to-nearest sRGB encode of a linear value (clamped to [0,1]).
inline std::uint8_t encode_srgb8(float lin)
{
  const auto& t = detail::srgb_tables();
  if (!(lin > 0.0f))
    return 0;
  if (lin >= 1.0f)
    return 255;
  int b = t.coarse[static_cast<int>(lin * 4096.0f)];
  while (lin >= t.lower[b + 1])
    ++b;
  return static_cast<std::uint8_t>(b);
}

inline float decode_srgb8(std::uint8_t v) { return detail::srgb_tables().decode[v]; }

/// The single quantization step of the pipeline.
inline ImageBuffer encode(const LinearFrame& f)
{
  ImageBuffer out;
  auto dst = out.bytes();
  const auto src = f.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[3 * i + 0] = encode_srgb8(src[i].r);
    dst[3 * i + 1] = encode_srgb8(src[i].g);
    dst[3 * i + 2] = encode_srgb8(src[i].b);
  }
  return out;
}

inline LinearFrame decode(const ImageBuffer& img)
{
  LinearFrame out;
  auto dst = out.pixels();
  const auto src = img.bytes();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = {decode_srgb8(src[3 * i]), decode_srgb8(src[3 * i + 1]), decode_srgb8(src[3 * i + 2])};
  return out;
}

} // namespace seaforge
