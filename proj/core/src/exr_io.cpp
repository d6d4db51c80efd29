#include <ImfChannelList.h>
#include <ImfFrameBuffer.h>
#include <ImfHeader.h>
#include <ImfInputFile.h>
#include <ImfOutputFile.h>

#include <filesystem>
#include <limits>
#include <vector>

#include "plenray/image_io.hpp"

namespace plenray {

namespace {

const Imf::Channel* find_channel(const Imf::ChannelList& channels, const char* name) {
  return channels.findChannel(name);
}

void check_sampling(const Imf::Channel& ch, const char* name) {
  if (ch.xSampling != 1 || ch.ySampling != 1)
    throw ImageIoError(std::string("unsupported channel layout: subsampled channel ") + name);
}

}  // namespace

PlenImage read_exr(const std::filesystem::path& path, DepthInterpretation depth_interp) {
  if (!std::filesystem::exists(path))
    throw ImageIoError("no such file: " + path.string());

  try {
    Imf::InputFile file(path.string().c_str());
    const Imath::Box2i dw = file.header().dataWindow();
    const int width = dw.max.x - dw.min.x + 1;
    const int height = dw.max.y - dw.min.y + 1;
    if (width < 1 || height < 1)
      throw ImageIoError("empty data window in " + path.string());

    const Imf::ChannelList& channels = file.header().channels();
    for (const char* name : {"R", "G", "B"}) {
      const Imf::Channel* ch = find_channel(channels, name);
      if (!ch)
        throw ImageIoError("unsupported channel layout in " + path.string() +
                           ": missing channel " + name);
      check_sampling(*ch, name);
    }
    const char* depth_name = nullptr;
    for (const char* candidate : {"Z", "depth"}) {
      if (const Imf::Channel* ch = find_channel(channels, candidate)) {
        check_sampling(*ch, candidate);
        depth_name = candidate;
        break;
      }
    }

    PlenImage img(width, height, depth_name != nullptr);
    img.depth_interp = depth_interp;

    // Slice bases are offset so that (dw.min.x, dw.min.y) lands on the
    // first element of each plane.
    const std::size_t origin =
        static_cast<std::size_t>(dw.min.y) * width + dw.min.x;
    Imf::FrameBuffer fb;
    const std::size_t xs = 3 * sizeof(float);
    const std::size_t ys = xs * width;
    for (int c = 0; c < 3; ++c) {
      const char* names[3] = {"R", "G", "B"};
      fb.insert(names[c],
                Imf::Slice(Imf::FLOAT,
                           reinterpret_cast<char*>(img.rgb.data() + c) - origin * xs,
                           xs, ys));
    }
    if (depth_name) {
      fb.insert(depth_name,
                Imf::Slice(Imf::FLOAT,
                           reinterpret_cast<char*>(img.depth.data()) -
                               origin * sizeof(float),
                           sizeof(float), sizeof(float) * width));
    }
    file.setFrameBuffer(fb);
    file.readPixels(dw.min.y, dw.max.y);
    return img;
  } catch (const ImageIoError&) {
    throw;
  } catch (const std::exception& e) {
    throw ImageIoError("failed to read " + path.string() + ": " + e.what());
  }
}

void write_exr(const PlenImage& img, const std::filesystem::path& path) {
  validate_image(img);

  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  std::vector<float> rgb = img.rgb;
  std::vector<float> depth = img.depth;
  constexpr float kInf = std::numeric_limits<float>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (img.valid[i]) continue;
    rgb[i * 3 + 0] = rgb[i * 3 + 1] = rgb[i * 3 + 2] = 0.0f;
    if (!depth.empty()) depth[i] = kInf;
  }

  try {
    Imf::Header header(img.width, img.height);
    header.compression() = Imf::ZIP_COMPRESSION;
    header.channels().insert("R", Imf::Channel(Imf::HALF));
    header.channels().insert("G", Imf::Channel(Imf::HALF));
    header.channels().insert("B", Imf::Channel(Imf::HALF));
    if (!depth.empty()) header.channels().insert("Z", Imf::Channel(Imf::HALF));

    Imf::FrameBuffer fb;
    const std::size_t xs = 3 * sizeof(float);
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c)
      fb.insert(names[c], Imf::Slice(Imf::FLOAT, reinterpret_cast<char*>(rgb.data() + c),
                                     xs, xs * img.width));
    if (!depth.empty())
      fb.insert("Z", Imf::Slice(Imf::FLOAT, reinterpret_cast<char*>(depth.data()),
                                sizeof(float), sizeof(float) * img.width));

    Imf::OutputFile file(path.string().c_str(), header);
    file.setFrameBuffer(fb);
    file.writePixels(img.height);
  } catch (const std::exception& e) {
    throw ImageIoError("failed to write " + path.string() + ": " + e.what());
  }
}

}  // namespace plenray
