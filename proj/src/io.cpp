#include "vecpr/io.hpp"

#include <bit>
#include <fstream>

#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "array files are little-endian; byte swapping is not implemented");

namespace vecpr {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file_atomic(const fs::path& path, const char* bytes, size_t count) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(bytes, static_cast<std::streamsize>(count));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_sidecar(const fs::path& base, int n, int channels, const std::string& dtype) {
  json meta{{"n", n},
            {"channels", channels},
            {"dtype", dtype},
            {"layout", "row-major"},
            {"data", base.filename().string() + ".bin"}};
  const std::string text = meta.dump(2) + "\n";
  fs::path jpath = base;
  jpath += ".json";
  write_file_atomic(jpath, text.data(), text.size());
}

json read_sidecar(const fs::path& base) {
  fs::path jpath = base;
  jpath += ".json";
  std::ifstream in(jpath);
  if (!in) throw std::runtime_error("cannot open sidecar: " + jpath.string());
  json meta;
  in >> meta;
  return meta;
}

std::vector<double> read_payload(const fs::path& base, size_t expected_doubles) {
  fs::path bpath = base;
  bpath += ".bin";
  std::ifstream in(bpath, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open payload: " + bpath.string());
  std::vector<double> buf(expected_doubles);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(expected_doubles * sizeof(double)));
  if (static_cast<size_t>(in.gcount()) != expected_doubles * sizeof(double))
    throw std::runtime_error("payload truncated: " + bpath.string());
  return buf;
}

void check_meta(const json& meta, const char* dtype, int channels) {
  if (meta.at("dtype").get<std::string>() != dtype)
    throw std::runtime_error("array dtype mismatch, expected " + std::string(dtype));
  if (meta.at("channels").get<int>() != channels)
    throw std::runtime_error("array channel count mismatch");
  if (meta.at("layout").get<std::string>() != "row-major")
    throw std::runtime_error("unsupported array layout");
}

}  // namespace

void write_image(const fs::path& base, const ComplexImage& img) {
  write_sidecar(base, img.n(), 1, "c128");
  fs::path bpath = base;
  bpath += ".bin";
  write_file_atomic(bpath, reinterpret_cast<const char*>(img.data()), img.size() * sizeof(cplx));
}

void write_image(const fs::path& base, const RealImage& img) {
  write_sidecar(base, img.n(), 1, "f64");
  fs::path bpath = base;
  bpath += ".bin";
  write_file_atomic(bpath, reinterpret_cast<const char*>(img.data()), img.size() * sizeof(double));
}

void write_field(const fs::path& base, const SixChannelField& x) {
  write_sidecar(base, x.n(), 6, "c128");
  std::vector<cplx> buf;
  buf.reserve(6 * x.channel(0).size());
  for (size_t c = 0; c < 6; ++c)
    buf.insert(buf.end(), x.channel(c).begin(), x.channel(c).end());
  fs::path bpath = base;
  bpath += ".bin";
  write_file_atomic(bpath, reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(cplx));
}

ComplexImage read_complex_image(const fs::path& base) {
  const json meta = read_sidecar(base);
  check_meta(meta, "c128", 1);
  const int n = meta.at("n").get<int>();
  const auto buf = read_payload(base, 2 * static_cast<size_t>(n) * n);
  ComplexImage img(n);
  for (size_t i = 0; i < img.size(); ++i) img[i] = {buf[2 * i], buf[2 * i + 1]};
  return img;
}

RealImage read_real_image(const fs::path& base) {
  const json meta = read_sidecar(base);
  check_meta(meta, "f64", 1);
  const int n = meta.at("n").get<int>();
  const auto buf = read_payload(base, static_cast<size_t>(n) * n);
  RealImage img(n);
  for (size_t i = 0; i < img.size(); ++i) img[i] = buf[i];
  return img;
}

SixChannelField read_field(const fs::path& base) {
  const json meta = read_sidecar(base);
  check_meta(meta, "c128", 6);
  const int n = meta.at("n").get<int>();
  const size_t per = static_cast<size_t>(n) * n;
  const auto buf = read_payload(base, 12 * per);
  SixChannelField x(n);
  for (size_t c = 0; c < 6; ++c)
    for (size_t i = 0; i < per; ++i)
      x.channel(c)[i] = {buf[2 * (c * per + i)], buf[2 * (c * per + i) + 1]};
  return x;
}

}  // namespace vecpr
