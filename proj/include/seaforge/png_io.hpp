#pragma once

#include <csetjmp>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include <png.h>

#include "seaforge/error.hpp"
#include "seaforge/image.hpp"

namespace seaforge {

namespace detail {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

inline FilePtr open_file(const std::filesystem::path& path, const char* mode)
{
  return FilePtr(std::fopen(path.c_str(), mode));
}

} // namespace detail

/// Writes an 8-bit RGB PNG. Output bytes depend only on the pixels and the compression level.
inline void write_png(const std::filesystem::path& path, const ImageBuffer& img, int compression = 1)
{
  auto file = detail::open_file(path, "wb");
  if (!file)
    throw IoError("cannot open '" + path.string() + "' for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing PNG '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_compression_level(png, compression);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
  png_set_IHDR(png, info, ImageBuffer::width, ImageBuffer::height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < ImageBuffer::height; ++y)
    png_write_row(png, const_cast<png_bytep>(img.row(y)));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);

  if (std::fflush(file.get()) != 0 || std::ferror(file.get()))
    throw IoError("failed writing PNG '" + path.string() + "'");
}

struct PngInfo {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  int bit_depth = 0;
  int channels = 0;
};

namespace detail {

template <class Body>
auto with_png_reader(const std::filesystem::path& path, Body body)
{
  auto file = open_file(path, "rb");
  if (!file)
    throw IoError("cannot open '" + path.string() + "'");
  png_byte sig[8];
  if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
    throw IoError("'" + path.string() + "' is not a PNG file");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("corrupt PNG '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);
  auto result = body(png, info);
  png_destroy_read_struct(&png, &info, nullptr);
  return result;
}

} // namespace detail

/// Header fields only; does not decode pixel data.
inline PngInfo read_png_info(const std::filesystem::path& path)
{
  return detail::with_png_reader(path, [](png_structp png, png_infop info) {
    return PngInfo{png_get_image_width(png, info), png_get_image_height(png, info), png_get_bit_depth(png, info),
                   png_get_channels(png, info)};
  });
}

inline ImageBuffer read_png(const std::filesystem::path& path)
{
  ImageBuffer img;
  const bool ok = detail::with_png_reader(path, [&img](png_structp png, png_infop info) {
    if (png_get_image_width(png, info) != ImageBuffer::width || png_get_image_height(png, info) != ImageBuffer::height ||
        png_get_bit_depth(png, info) != 8 || png_get_color_type(png, info) != PNG_COLOR_TYPE_RGB)
      return false;
    for (int y = 0; y < ImageBuffer::height; ++y)
      png_read_row(png, img.row(y), nullptr);
    png_read_end(png, nullptr);
    return true;
  });
  if (!ok)
    throw IoError("'" + path.string() + "' is not a 384x384 8-bit RGB PNG");
  return img;
}

} // namespace seaforge
