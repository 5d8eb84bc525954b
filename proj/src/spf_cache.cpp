#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "linnik/sieve.hpp"

namespace linnik::sieve {

namespace {

template <typename T>
void put_le(std::string& buf, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return static_cast<T>(v);
}

constexpr std::size_t kHeaderSize = 8 + 4 + 8 + 8;

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir, u64 lo, u64 hi) {
  return dir / ("spf_" + std::to_string(lo) + "_" + std::to_string(hi) + ".bin");
}

void write_cache(const std::filesystem::path& path, const FactorTable& table) {
  std::string buf;
  buf.reserve(kHeaderSize + 4 * table.entries().size());
  buf.append(kCacheMagic, sizeof kCacheMagic);
  put_le<std::uint32_t>(buf, kCacheVersion);
  put_le<std::uint64_t>(buf, table.lo());
  put_le<std::uint64_t>(buf, table.hi());
  for (const std::uint32_t s : table.entries()) put_le<std::uint32_t>(buf, s);

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open cache file for writing: " + tmp.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing cache file: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move cache file into place: " + path.string());
}

std::optional<FactorTable> read_cache(const std::filesystem::path& path, u64 lo, u64 hi) {
  if (hi <= lo) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::array<unsigned char, kHeaderSize> header{};
  if (!in.read(reinterpret_cast<char*>(header.data()), header.size())) return std::nullopt;
  if (std::memcmp(header.data(), kCacheMagic, sizeof kCacheMagic) != 0) return std::nullopt;
  if (get_le<std::uint32_t>(header.data() + 8) != kCacheVersion) return std::nullopt;
  if (get_le<std::uint64_t>(header.data() + 12) != lo) return std::nullopt;
  if (get_le<std::uint64_t>(header.data() + 20) != hi) return std::nullopt;

  const u64 count = hi - lo;
  std::vector<unsigned char> raw(4 * count);
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
    return std::nullopt;
  if (in.peek() != std::ifstream::traits_type::eof()) return std::nullopt;

  std::vector<std::uint32_t> spf(count);
  for (u64 i = 0; i < count; ++i) spf[i] = get_le<std::uint32_t>(raw.data() + 4 * i);
  return FactorTable(lo, hi, std::move(spf));
}

FactorTable factor_table_cached(u64 lo, u64 hi, const SieveConfig& config,
                                const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return factor_table(lo, hi, config);
  const auto path = cache_file(*cache_dir, lo, hi);
  if (auto cached = read_cache(path, lo, hi)) return std::move(*cached);
  auto table = factor_table(lo, hi, config);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  if (ec) throw IoError("cannot create cache directory: " + cache_dir->string());
  write_cache(path, table);
  return table;
}

}  // namespace linnik::sieve
