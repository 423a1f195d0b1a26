#include "rqe/library_io.hpp"

#include <fstream>
#include <sstream>

#include <zlib.h>

#include "rqe/errors.hpp"
#include "rqe/perm_group.hpp"

namespace rqe {

namespace {

constexpr char kMagic[3] = {'R', 'Q', 'E'};
constexpr char kVersion = '1';

void put_u8(std::string& buf, std::uint8_t v) { buf.push_back(char(v)); }

void put_u16(std::string& buf, std::uint16_t v) {
  for (int i = 0; i < 2; ++i)
    buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i)
    buf.push_back(char((v >> (8 * i)) & 0xff));
}

struct Reader {
  const std::string& data;
  std::size_t pos = 0;

  void need(std::size_t k) const {
    if (data.size() - pos < k)
      throw FormatError("library file is truncated");
  }

  std::uint8_t u8() {
    need(1);
    return std::uint8_t(data[pos++]);
  }

  std::uint16_t u16() {
    std::uint16_t v = 0;
    need(2);
    for (int i = 0; i < 2; ++i)
      v |= std::uint16_t(std::uint8_t(data[pos++])) << (8 * i);
    return v;
  }

  std::uint32_t u32() {
    std::uint32_t v = 0;
    need(4);
    for (int i = 0; i < 4; ++i)
      v |= std::uint32_t(std::uint8_t(data[pos++])) << (8 * i);
    return v;
  }

  std::uint64_t u64() {
    std::uint64_t v = 0;
    need(8);
    for (int i = 0; i < 8; ++i)
      v |= std::uint64_t(std::uint8_t(data[pos++])) << (8 * i);
    return v;
  }
};

std::uint32_t checksum(const std::string& payload) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()), uInt(payload.size()));
  return std::uint32_t(crc);
}

std::string serialize(const Library& lib) {
  std::string buf;
  buf.append(kMagic, 3);
  buf.push_back(kVersion);
  put_u8(buf, lib.kind == Kind::rack ? 0 : 1);
  if (lib.degree == 0 || lib.degree > kMaxDegree)
    throw ConfigError("library degree out of range");
  put_u8(buf, std::uint8_t(lib.degree));
  put_u16(buf, 0);
  put_u32(buf, std::uint32_t(lib.classes.size()));

  for (const LibraryClass& cls : lib.classes) {
    put_u32(buf, cls.class_id);
    if (cls.generators.size() > 255)
      throw ConfigError("too many generators to store");
    put_u8(buf, std::uint8_t(cls.generators.size()));
    for (const Perm& g : cls.generators) {
      if (g.degree() != lib.degree)
        throw ConfigError("generator degree does not match the library degree");
      for (Point p : g.images())
        put_u8(buf, std::uint8_t(p + 1));
    }
    if (cls.radices.size() > 255)
      throw ConfigError("too many orbit representatives to store");
    put_u8(buf, std::uint8_t(cls.radices.size()));
    for (std::uint32_t r : cls.radices)
      put_u32(buf, r);
    put_u64(buf, cls.space_size);
    if (cls.survivors.size() != cls.space_size)
      throw ConfigError("survivor vector length does not match the space size");
    put_u64(buf, cls.survivors.count());
    buf.append(reinterpret_cast<const char*>(cls.survivors.bytes().data()),
               cls.survivors.bytes().size());
  }

  put_u64(buf, lib.totals.total);
  put_u64(buf, lib.totals.medial);
  put_u64(buf, lib.totals.two_reductive);
  put_u64(buf, lib.totals.non_two_reductive);
  return buf;
}

Library parse(const std::string& data) {
  if (data.size() < 4)
    throw FormatError("library file is truncated");
  if (data.compare(0, 3, kMagic, 3) != 0)
    throw FormatError("bad magic, not a library file");
  if (data[3] != kVersion)
    throw FormatError("unsupported library version");
  if (data.size() < 4 + 4)
    throw FormatError("library file is truncated");

  const std::string payload = data.substr(0, data.size() - 4);
  std::uint32_t stored_crc = 0;
  for (int i = 0; i < 4; ++i)
    stored_crc |= std::uint32_t(std::uint8_t(data[data.size() - 4 + i])) << (8 * i);
  if (checksum(payload) != stored_crc)
    throw FormatError("library checksum mismatch");

  Reader in{payload, 4};
  Library lib;
  const std::uint8_t kind_byte = in.u8();
  if (kind_byte > 1)
    throw FormatError("bad kind byte");
  lib.kind = kind_byte == 0 ? Kind::rack : Kind::quandle;
  lib.degree = in.u8();
  if (lib.degree == 0)
    throw FormatError("bad degree byte");
  if (in.u16() != 0)
    throw FormatError("reserved bytes are not zero");

  const std::uint32_t class_count = in.u32();
  for (std::uint32_t c = 0; c < class_count; ++c) {
    LibraryClass cls;
    cls.class_id = in.u32();
    const std::uint8_t gen_count = in.u8();
    for (unsigned g = 0; g < gen_count; ++g) {
      std::vector<Point> images(lib.degree);
      for (unsigned i = 0; i < lib.degree; ++i) {
        const std::uint8_t b = in.u8();
        if (b == 0 || b > lib.degree)
          throw FormatError("stored generator image out of range");
        images[i] = Point(b - 1);
      }
      try {
        cls.generators.push_back(Perm::from_images(std::move(images)));
      } catch (const Error& e) {
        throw FormatError(std::string("stored generator is invalid: ") + e.what());
      }
    }
    const std::uint8_t rep_count = in.u8();
    for (unsigned r = 0; r < rep_count; ++r)
      cls.radices.push_back(in.u32());
    cls.space_size = in.u64();
    const std::uint64_t survivor_count = in.u64();

    const std::size_t nbytes = std::size_t((cls.space_size + 7) / 8);
    in.need(nbytes);
    std::vector<std::uint8_t> bytes(payload.begin() + std::ptrdiff_t(in.pos),
                                    payload.begin() + std::ptrdiff_t(in.pos + nbytes));
    in.pos += nbytes;
    cls.survivors = BitVec::from_bytes(cls.space_size, std::move(bytes));
    if (cls.survivors.count() != survivor_count)
      throw FormatError("survivor count disagrees with the bit vector");
    lib.classes.push_back(std::move(cls));
  }

  lib.totals.total = in.u64();
  lib.totals.medial = in.u64();
  lib.totals.two_reductive = in.u64();
  lib.totals.non_two_reductive = in.u64();
  if (in.pos != payload.size())
    throw FormatError("trailing bytes after the library trailer");
  return lib;
}

FolderSpace rebuild_space(const Library& lib, const LibraryClass& cls) {
  PermGroup group = [&] {
    try {
      return PermGroup(lib.degree, cls.generators);
    } catch (const Error& e) {
      throw FormatError(std::string("stored generators are invalid: ") + e.what());
    }
  }();
  FolderSpace space = folder_space(group, lib.kind);
  if (space.radices != cls.radices)
    throw FormatError("stored radices disagree with the rebuilt space");
  if (space.size != cls.space_size)
    throw FormatError("stored space size disagrees with the rebuilt space");
  if (cls.survivors.size() != space.size)
    throw FormatError("survivor vector length does not match the space size");
  return space;
}

} // namespace

void write_library(const Library& lib, std::ostream& out) {
  std::string payload = serialize(lib);
  put_u32(payload, checksum(payload));
  out.write(payload.data(), std::streamsize(payload.size()));
  if (!out)
    throw ConfigError("failed to write the library stream");
}

void write_library(const Library& lib, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open for writing: " + path);
  write_library(lib, out);
}

Library read_library(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Library read_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open for reading: " + path);
  return read_library(in);
}

Library library_from_enumeration(const EnumerationResult& result) {
  Library lib;
  lib.kind = result.kind;
  lib.degree = result.degree;
  lib.totals = LibraryTotals{result.total, result.medial, result.two_reductive,
                             result.non_two_reductive};
  for (const ClassEnumeration& ce : result.classes)
    lib.classes.push_back(LibraryClass{std::uint32_t(ce.class_id),
                                       ce.group.generators(), ce.radices,
                                       ce.space_size, ce.sweep.survivors});
  return lib;
}

void export_tables(const Library& lib, std::ostream& out) {
  bool first = true;
  for (const LibraryClass& cls : lib.classes) {
    const FolderSpace space = rebuild_space(lib, cls);
    for (std::uint64_t i = 0; i < space.size; ++i) {
      if (!cls.survivors.get(i))
        continue;
      if (!first)
        out << '\n';
      first = false;
      out << rack_from_envelope(space, element_at(space, i)).to_text();
    }
  }
}

void export_counts(const Library& lib, std::ostream& out) {
  out << "total medial two_reductive non_two_reductive\n";
  if (lib.classes.empty())
    return;
  out << lib.totals.total << ' ' << lib.totals.medial << ' '
      << lib.totals.two_reductive << ' ' << lib.totals.non_two_reductive << '\n';
}

VerifyStats verify_library(const Library& lib) {
  VerifyStats stats;
  LibraryTotals recount;
  for (const LibraryClass& cls : lib.classes) {
    const FolderSpace space = rebuild_space(lib, cls);
    for (std::uint64_t i = 0; i < space.size; ++i) {
      if (!cls.survivors.get(i))
        continue;
      const Folder folder = element_at(space, i);
      if (!is_envelope(space, folder))
        throw FormatError("stored survivor is not an envelope");
      const MulTable table = rack_from_envelope(space, folder);
      const Classification c = classify(table);
      if (!c.rack)
        throw InternalError("envelope reconstruction produced a non-rack");
      if (lib.kind == Kind::quandle && !c.quandle)
        throw FormatError("stored survivor is not a quandle");
      if (!(c.lmlt == space.group))
        throw InternalError("multiplication group disagrees with the stored group");
      ++recount.total;
      if (c.medial)
        ++recount.medial;
      if (c.two_reductive)
        ++recount.two_reductive;
      ++stats.envelopes_checked;
    }
    ++stats.classes_checked;
  }
  recount.non_two_reductive = recount.total - recount.two_reductive;
  if (!(recount == lib.totals))
    throw FormatError("trailer totals disagree with the recount");
  return stats;
}

} // namespace rqe
