#include "mtl/table_io.hpp"

#include <zlib.h>

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "cache format is little-endian; big-endian hosts are unsupported");

namespace mtl {

namespace {

std::uint32_t crc_update(std::uint32_t crc, const void* data, std::size_t len) {
    return static_cast<std::uint32_t>(
        ::crc32(crc, static_cast<const Bytef*>(data), static_cast<uInt>(len)));
}

void write_all(std::ofstream& out, const void* data, std::size_t len) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
}

}  // namespace

std::string cache_file_name(Variant v, std::uint64_t n_max) {
    return v.name() + "_n" + std::to_string(n_max) + ".mtl";
}

void save_table(const ArithTable& table, const std::filesystem::path& path) {
    if (table.variant.tag == VariantTag::Derived)
        throw ArgumentError("derived tables have no cache representation");
    if (table.values.size() != table.n_max + 1)
        throw ArgumentError("table value array does not match n_max");

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ResourceError("cannot open '" + tmp.string() + "' for writing");

        write_all(out, kTableMagic, 4);
        const std::uint32_t version = kTableFormatVersion;
        write_all(out, &version, 4);

        const std::uint8_t tag = static_cast<std::uint8_t>(table.variant.tag);
        const std::uint8_t k = static_cast<std::uint8_t>(table.variant.k);
        const std::uint64_t n_max = table.n_max;
        const double* vals = table.values.data() + 1;
        const std::size_t val_bytes = table.n_max * sizeof(double);

        std::uint32_t crc = crc_update(0, nullptr, 0);
        crc = crc_update(crc, &tag, 1);
        crc = crc_update(crc, &k, 1);
        crc = crc_update(crc, &n_max, 8);
        // crc32 takes a 32-bit length; feed large payloads in slices
        const char* p = reinterpret_cast<const char*>(vals);
        for (std::size_t off = 0; off < val_bytes; off += (std::size_t{1} << 30))
            crc = crc_update(crc, p + off, std::min(val_bytes - off, std::size_t{1} << 30));

        write_all(out, &tag, 1);
        write_all(out, &k, 1);
        write_all(out, &n_max, 8);
        write_all(out, vals, val_bytes);
        write_all(out, &crc, 4);
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw ResourceError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ResourceError("rename to '" + path.string() + "' failed: " + ec.message());
    }
}

ArithTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open '" + path.string() + "'");

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kTableMagic, 4) != 0)
        throw FormatError("'" + path.string() + "': bad magic");

    std::uint32_t version = 0;
    in.read(reinterpret_cast<char*>(&version), 4);
    if (!in || version != kTableFormatVersion)
        throw FormatError("'" + path.string() + "': unsupported format version " +
                          std::to_string(version));

    std::uint8_t tag = 0, k = 0;
    std::uint64_t n_max = 0;
    in.read(reinterpret_cast<char*>(&tag), 1);
    in.read(reinterpret_cast<char*>(&k), 1);
    in.read(reinterpret_cast<char*>(&n_max), 8);
    if (!in) throw FormatError("'" + path.string() + "': truncated header");
    if (tag > 4) throw FormatError("'" + path.string() + "': unknown variant tag");
    if (n_max < 1) throw FormatError("'" + path.string() + "': n_max of zero");

    ArithTable t;
    t.variant.tag = static_cast<VariantTag>(tag);
    t.variant.k = k;
    t.n_max = n_max;
    t.values.assign(n_max + 1, 0.0);
    in.read(reinterpret_cast<char*>(t.values.data() + 1),
            static_cast<std::streamsize>(n_max * sizeof(double)));
    if (!in || in.gcount() != static_cast<std::streamsize>(n_max * sizeof(double)))
        throw FormatError("'" + path.string() + "': truncated value block");

    std::uint32_t stored_crc = 0;
    in.read(reinterpret_cast<char*>(&stored_crc), 4);
    if (!in) throw FormatError("'" + path.string() + "': missing checksum");
    in.peek();
    if (!in.eof()) throw FormatError("'" + path.string() + "': trailing bytes");

    std::uint32_t crc = crc_update(0, nullptr, 0);
    crc = crc_update(crc, &tag, 1);
    crc = crc_update(crc, &k, 1);
    crc = crc_update(crc, &n_max, 8);
    const char* p = reinterpret_cast<const char*>(t.values.data() + 1);
    const std::size_t val_bytes = n_max * sizeof(double);
    for (std::size_t off = 0; off < val_bytes; off += (std::size_t{1} << 30))
        crc = crc_update(crc, p + off, std::min(val_bytes - off, std::size_t{1} << 30));
    if (crc != stored_crc)
        throw FormatError("'" + path.string() + "': checksum mismatch");
    return t;
}

ArithTable cached_table(Variant v, std::uint64_t n_max,
                        const std::filesystem::path& cache_dir, bool* hit,
                        std::string* note) {
    if (hit) *hit = false;
    const std::filesystem::path file = cache_dir / cache_file_name(v, n_max);
    if (std::filesystem::exists(file)) {
        try {
            ArithTable t = load_table(file);
            if (t.variant == v && t.n_max == n_max) {
                if (hit) *hit = true;
                return t;
            }
            if (note) *note = "cache file '" + file.string() + "' holds a different table; rebuilding";
        } catch (const FormatError& e) {
            if (note) *note = std::string("corrupt cache (") + e.what() + "); rebuilding";
        }
    }
    ArithTable t = build_table(v, n_max);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    save_table(t, file);
    return t;
}

}  // namespace mtl
