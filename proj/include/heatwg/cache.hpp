// Optional on-disk memo for exact group algebra elements, enabled by the
// HEATWG_CACHE_DIR environment variable. Files carry a versioned header and
// are written atomically; a file that fails to parse is ignored.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "heatwg/group_algebra.hpp"

namespace heatwg::cache {

inline constexpr char kMagic[4] = {'H', 'W', 'G', 'C'};
inline constexpr std::uint32_t kVersion = 1;

inline std::optional<std::filesystem::path> directory() {
  const char* dir = std::getenv("HEATWG_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

namespace detail {

inline void write_string(std::ostream& out, const std::string& s) {
  const std::uint32_t len = static_cast<std::uint32_t>(s.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(s.data(), len);
}

inline bool read_string(std::istream& in, std::string& s) {
  std::uint32_t len = 0;
  if (!in.read(reinterpret_cast<char*>(&len), sizeof len) || len > (1u << 24)) return false;
  s.resize(len);
  return static_cast<bool>(in.read(s.data(), len));
}

}  // namespace detail

inline std::optional<GroupAlgebra> load(const std::string& key) {
  const auto dir = directory();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / (key + ".bin"), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint8_t degree = 0;
  std::uint64_t count = 0;
  if (!in.read(magic, 4) || std::string(magic, 4) != std::string(kMagic, 4)) return std::nullopt;
  if (!in.read(reinterpret_cast<char*>(&version), sizeof version) || version != kVersion) return std::nullopt;
  std::string stored_key;
  if (!detail::read_string(in, stored_key) || stored_key != key) return std::nullopt;
  if (!in.read(reinterpret_cast<char*>(&degree), 1) || degree > kMaxPoints) return std::nullopt;
  if (!in.read(reinterpret_cast<char*>(&count), sizeof count)) return std::nullopt;
  try {
    GroupAlgebra out(degree);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::vector<int> line(degree);
      for (int k = 0; k < degree; ++k) {
        std::uint8_t v = 0;
        if (!in.read(reinterpret_cast<char*>(&v), 1)) return std::nullopt;
        line[k] = v;
      }
      std::string coeff;
      if (!detail::read_string(in, coeff)) return std::nullopt;
      out.add_term(Permutation::from_one_line(line), parse_rational(coeff));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store(const std::string& key, const GroupAlgebra& value) {
  const auto dir = directory();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;
  const auto final_path = *dir / (key + ".bin");
  const auto tmp_path = *dir / (key + ".bin.tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&value)));
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
    detail::write_string(out, key);
    const std::uint8_t degree = static_cast<std::uint8_t>(value.degree());
    out.write(reinterpret_cast<const char*>(&degree), 1);
    const std::uint64_t count = value.size();
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    for (const auto& [p, c] : value.sorted_terms()) {
      for (int v : p.one_line()) {
        const std::uint8_t b = static_cast<std::uint8_t>(v);
        out.write(reinterpret_cast<const char*>(&b), 1);
      }
      detail::write_string(out, c.get_str());
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace heatwg::cache
