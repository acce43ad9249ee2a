#ifndef SYNANT_CHECKSUM_HPP
#define SYNANT_CHECKSUM_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "synant/error.hpp"

namespace synant {

// FNV-1a 64-bit. Used only to fingerprint inputs in report headers.
class Fnv1a64 {
 public:
  void update(std::string_view data) {
    for (unsigned char c : data) {
      state_ ^= c;
      state_ *= 0x100000001b3ull;
    }
  }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(state_));
    return std::string(buf);
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

inline std::string checksum_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file for checksum: " + path.string());
  Fnv1a64 h;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h.update(std::string_view(buf, static_cast<size_t>(in.gcount())));
  }
  return h.hex();
}

// Checksum over a fixed list of files: each file name followed by its bytes.
inline std::string checksum_files(
    const std::vector<std::filesystem::path>& paths) {
  Fnv1a64 h;
  for (const auto& p : paths) {
    h.update(p.filename().string());
    h.update(std::string_view("\0", 1));
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DataError("cannot open file for checksum: " + p.string());
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
      h.update(std::string_view(buf, static_cast<size_t>(in.gcount())));
    }
  }
  return h.hex();
}

}  // namespace synant

#endif  // SYNANT_CHECKSUM_HPP
