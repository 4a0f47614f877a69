#pragma once

#include <filesystem>

#include "mtl/arith.hpp"

namespace mtl {

// Cache file layout, little-endian:
//   magic "MTL1" | version u32 | variant tag u8 | k u8 | n_max u64 |
//   n_max binary64 values for n = 1..n_max | CRC32 of the payload (u32)
// The payload covered by the checksum is everything between the version
// field and the checksum itself.
inline constexpr char kTableMagic[4] = {'M', 'T', 'L', '1'};
inline constexpr std::uint32_t kTableFormatVersion = 1;

// Atomic: writes to a temp file in the same directory, then renames.
void save_table(const ArithTable& table, const std::filesystem::path& path);

// Throws FormatError on bad magic/version/length/checksum, ResourceError on I/O.
ArithTable load_table(const std::filesystem::path& path);

// Canonical cache file name for a table, e.g. "gen_k2_n1000000.mtl".
std::string cache_file_name(Variant v, std::uint64_t n_max);

// Load from cache if a valid file exists, else build and cache. `hit`
// reports whether the cache was used. Corrupt cache files are rebuilt.
ArithTable cached_table(Variant v, std::uint64_t n_max,
                        const std::filesystem::path& cache_dir, bool* hit = nullptr,
                        std::string* note = nullptr);

}  // namespace mtl
