#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "rqe/errors.hpp"

namespace rqe {

// Packed bit vector, least-significant bit first within each byte. The byte
// layout is exactly the on-disk layout of survivor vectors, so they can be
// serialized and re-read verbatim. Unused bits of the last byte are kept
// zero so that equality and checksums are well defined.
class BitVec {
public:
  BitVec() = default;

  BitVec(std::uint64_t size, bool value)
      : size_(size), bytes_((size + 7) / 8, value ? 0xffu : 0x00u) {
    clear_tail();
  }

  static BitVec from_bytes(std::uint64_t size, std::vector<std::uint8_t> bytes) {
    if (bytes.size() != (size + 7) / 8)
      throw FormatError("bit vector byte count does not match size");
    BitVec v;
    v.size_ = size;
    v.bytes_ = std::move(bytes);
    for (std::uint64_t i = size; i < 8 * v.bytes_.size(); ++i)
      if (v.get_raw(i))
        throw FormatError("bit vector has nonzero padding bits");
    return v;
  }

  std::uint64_t size() const { return size_; }

  bool get(std::uint64_t i) const {
    if (i >= size_)
      throw ConfigError("bit index out of range");
    return get_raw(i);
  }

  void set(std::uint64_t i, bool v) {
    if (i >= size_)
      throw ConfigError("bit index out of range");
    const std::uint8_t mask = std::uint8_t(1u << (i & 7));
    if (v)
      bytes_[i >> 3] |= mask;
    else
      bytes_[i >> 3] &= std::uint8_t(~mask);
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint8_t b : bytes_)
      c += std::popcount(unsigned(b));
    return c;
  }

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool operator==(const BitVec&) const = default;

private:
  bool get_raw(std::uint64_t i) const {
    return (bytes_[i >> 3] >> (i & 7)) & 1u;
  }

  void clear_tail() {
    if (size_ % 8 != 0 && !bytes_.empty())
      bytes_.back() &= std::uint8_t((1u << (size_ % 8)) - 1u);
  }

  std::uint64_t size_ = 0;
  std::vector<std::uint8_t> bytes_;
};

} // namespace rqe
