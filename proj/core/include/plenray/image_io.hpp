#pragma once

#include <filesystem>
#include <stdexcept>

#include "plenray/image.hpp"

namespace plenray {

struct ImageIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a scanline EXR with R,G,B channels and an optional depth channel
// (named "Z" or "depth"). Half-float data is widened exactly; every pixel
// is marked valid (EXR files carry no mask). Throws ImageIoError for a
// missing file, an unsupported channel layout, or a decode failure.
PlenImage read_exr(const std::filesystem::path& path,
                   DepthInterpretation depth_interp = DepthInterpretation::Z);

// Stores RGB (+ depth when present) as 16-bit floats, ZIP compressed.
// Invalid pixels are stored as black with depth +infinity.
void write_exr(const PlenImage& img, const std::filesystem::path& path);

// Writes a display-referred image ([0,1] components) as 8-bit sRGB PNG.
// RGBA when the image has invalid pixels (alpha 0 there), plain RGB
// otherwise. Depth is never written.
void write_png(const PlenImage& img, const std::filesystem::path& path);

}  // namespace plenray
