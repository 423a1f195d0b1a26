#include "doctest.h"

#include <zlib.h>

#include <filesystem>
#include <sstream>

#include "rqe/library_io.hpp"
#include "rqe/subgroup_catalog.hpp"

using namespace rqe;

namespace {

Library quandle_library(unsigned n) {
  return library_from_enumeration(
      enumerate_order(n, Kind::quandle, subgroups_up_to_conjugacy(n)));
}

std::string bytes_of(const Library& lib) {
  std::ostringstream out;
  write_library(lib, out);
  return out.str();
}

Library read_back(const std::string& data) {
  std::istringstream in(data);
  return read_library(in);
}

// rewrites the checksum trailer so a deliberate payload edit survives the
// integrity check and reaches the field validation instead
void reseal(std::string& data) {
  const uLong crc =
      crc32(0L, reinterpret_cast<const Bytef*>(data.data()), uInt(data.size() - 4));
  for (int i = 0; i < 4; ++i)
    data[data.size() - 4 + std::size_t(i)] = char((crc >> (8 * i)) & 0xff);
}

} // namespace

TEST_SUITE("library_io") {

TEST_CASE("stream roundtrip preserves everything") {
  const Library lib = quandle_library(4);
  CHECK(lib.totals.total == 7);
  CHECK(lib.totals.medial == 6);
  CHECK(lib.totals.two_reductive == 5);
  CHECK(lib.totals.non_two_reductive == 2);

  const Library back = read_back(bytes_of(lib));
  CHECK(back.kind == lib.kind);
  CHECK(back.degree == lib.degree);
  CHECK(back.totals == lib.totals);
  REQUIRE(back.classes.size() == lib.classes.size());
  for (std::size_t i = 0; i < lib.classes.size(); ++i) {
    CHECK(back.classes[i].class_id == lib.classes[i].class_id);
    CHECK(back.classes[i].generators == lib.classes[i].generators);
    CHECK(back.classes[i].radices == lib.classes[i].radices);
    CHECK(back.classes[i].space_size == lib.classes[i].space_size);
    CHECK(back.classes[i].survivors == lib.classes[i].survivors);
  }

  const VerifyStats stats = verify_library(back);
  CHECK(stats.classes_checked == back.classes.size());
  CHECK(stats.envelopes_checked == 7);
}

TEST_CASE("corrupted bytes are rejected") {
  const std::string good = bytes_of(quandle_library(3));
  CHECK_NOTHROW(read_back(good));

  std::string magic = good;
  magic[0] = 'X';
  CHECK_THROWS_WITH_AS(read_back(magic), doctest::Contains("bad magic"), FormatError);

  std::string version = good;
  version[3] = '2';
  CHECK_THROWS_WITH_AS(read_back(version), doctest::Contains("version"), FormatError);

  std::string flipped = good;
  flipped[10] = char(flipped[10] ^ 0x40);
  CHECK_THROWS_WITH_AS(read_back(flipped), doctest::Contains("checksum"), FormatError);

  CHECK_THROWS_AS(read_back(good.substr(0, good.size() - 5)), FormatError);
  CHECK_THROWS_WITH_AS(read_back(std::string("RQ")), doctest::Contains("truncated"),
                       FormatError);
}

TEST_CASE("resealed field corruption is caught by validation") {
  const std::string good = bytes_of(quandle_library(3));

  std::string kind = good;
  kind[4] = 2;
  reseal(kind);
  CHECK_THROWS_WITH_AS(read_back(kind), doctest::Contains("kind"), FormatError);

  std::string degree = good;
  degree[5] = 0;
  reseal(degree);
  CHECK_THROWS_WITH_AS(read_back(degree), doctest::Contains("degree"), FormatError);

  std::string reserved = good;
  reserved[6] = 1;
  reseal(reserved);
  CHECK_THROWS_WITH_AS(read_back(reserved), doctest::Contains("reserved"), FormatError);

  std::string trailing = good;
  trailing.insert(trailing.size() - 4, 1, '\0');
  reseal(trailing);
  CHECK_THROWS_WITH_AS(read_back(trailing), doctest::Contains("trailing"), FormatError);
}

TEST_CASE("verification rejects a lying survivor bit") {
  Library lib = quandle_library(3);
  // the two-element class keeps only the folder with the transposition;
  // claiming index 0 as well plants a non-envelope
  bool planted = false;
  for (LibraryClass& cls : lib.classes)
    if (cls.space_size == 2 && !cls.survivors.get(0)) {
      cls.survivors.set(0, true);
      planted = true;
      break;
    }
  REQUIRE(planted);
  CHECK_THROWS_AS(verify_library(lib), FormatError);

  Library counts = quandle_library(3);
  counts.totals.total += 1;
  CHECK_THROWS_WITH_AS(verify_library(counts), doctest::Contains("totals"),
                       FormatError);
}

TEST_CASE("table and count exports") {
  const Library lib = quandle_library(3);
  std::ostringstream tables;
  export_tables(lib, tables);
  const std::string text = tables.str();
  CHECK(text.find("1 3 2\n1 2 3\n1 2 3\n") != std::string::npos);
  CHECK(text.find("1 3 2\n3 2 1\n2 1 3\n") != std::string::npos);

  std::ostringstream counts;
  export_counts(lib, counts);
  CHECK(counts.str() == "total medial two_reductive non_two_reductive\n3 3 2 1\n");

  std::ostringstream empty;
  export_counts(Library{Kind::rack, 3, {}, {}}, empty);
  CHECK(empty.str() == "total medial two_reductive non_two_reductive\n");
}

TEST_CASE("file path roundtrip") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "rqe_library_roundtrip.bin";
  const Library lib = quandle_library(3);
  write_library(lib, path.string());
  const Library back = read_library(path.string());
  CHECK(back.totals == lib.totals);
  CHECK(back.classes.size() == lib.classes.size());
  fs::remove(path);

  CHECK_THROWS_AS(read_library((fs::temp_directory_path() / "rqe_missing.bin").string()),
                  ConfigError);
}

} // TEST_SUITE
