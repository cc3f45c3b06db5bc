#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavepaint {

/// File or format problem while reading/writing rasters.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major grid of floating samples, channel-interleaved.
/// Nominal display range is [0,255]; intermediate values (wavelet
/// coefficients, diffusion state) may be signed and exceed that range.
/// Quantization happens only in save_raster.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> data;

  Raster() = default;
  Raster(int w, int h, int ch = 1, double fill = 0.0)
      : width(w), height(h), channels(ch),
        data(static_cast<std::size_t>(w) * h * ch, fill) {}

  double& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  bool same_shape(const Raster& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }
};

/// Binary target-region mask; true marks a pixel to be synthesized.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  Mask() = default;
  Mask(int w, int h, bool fill = false)
      : width(w), height(h),
        bits(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

  bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool v) {
    bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }
  std::size_t count() const;
  std::size_t size() const { return bits.size(); }
};

/// Clamp to [0,255] then round half away from zero.
std::uint8_t quantize_sample(double v);

/// Reads a PGM (P2/P5) or PPM (P3/P6) file with maxval 255.
/// Header comments (#) are permitted. Throws IoError on malformed input.
Raster load_raster(const std::filesystem::path& path);

/// Writes P5 (1 channel) or P6 (3 channels), maxval 255, samples quantized
/// via quantize_sample. Format: "P5\n<w> <h>\n255\n" + raw bytes.
void save_raster(const Raster& r, const std::filesystem::path& path);

/// Loads a 1-channel raster of exactly the expected dimensions and
/// thresholds it: sample > 127 becomes a target pixel.
Mask load_mask(const std::filesystem::path& path, int expected_width,
               int expected_height);

/// Writes a mask as a P5 file with 0/255 samples.
void save_mask(const Mask& m, const std::filesystem::path& path);

}  // namespace wavepaint
