#ifndef BGP_BYTES_HPP
#define BGP_BYTES_HPP

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgp {

// Decode failure for any canonical byte stream (wire messages, fixtures).
class MalformedMessage : public std::runtime_error {
 public:
  explicit MalformedMessage(const std::string& reason)
      : std::runtime_error("malformed message: " + reason) {}
};

// Canonical encoding primitives shared by the wire codec and signature
// statements: fixed-width big-endian integers, u32 length prefixes.
class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }

  void u32(uint32_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 24));
    buf_.push_back(static_cast<uint8_t>(v >> 16));
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
  }

  void u64(uint64_t v) {
    u32(static_cast<uint32_t>(v >> 32));
    u32(static_cast<uint32_t>(v));
  }

  void bytes(const uint8_t* data, size_t n) {
    u32(static_cast<uint32_t>(n));
    buf_.insert(buf_.end(), data, data + n);
  }

  void bytes(const std::vector<uint8_t>& b) { bytes(b.data(), b.size()); }

  void str(const std::string& s) {
    bytes(reinterpret_cast<const uint8_t*>(s.data()), s.size());
  }

  void raw(const uint8_t* data, size_t n) { buf_.insert(buf_.end(), data, data + n); }

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t n) : data_(data), size_(n) {}
  explicit ByteReader(const std::vector<uint8_t>& b) : ByteReader(b.data(), b.size()) {}

  uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  uint32_t u32() {
    need(4);
    uint32_t v = (static_cast<uint32_t>(data_[pos_]) << 24) |
                 (static_cast<uint32_t>(data_[pos_ + 1]) << 16) |
                 (static_cast<uint32_t>(data_[pos_ + 2]) << 8) |
                 static_cast<uint32_t>(data_[pos_ + 3]);
    pos_ += 4;
    return v;
  }

  uint64_t u64() {
    uint64_t hi = u32();
    return (hi << 32) | u32();
  }

  std::vector<uint8_t> bytes() {
    uint32_t n = u32();
    need(n);
    std::vector<uint8_t> out(data_ + pos_, data_ + pos_ + n);
    pos_ += n;
    return out;
  }

  std::string str() {
    uint32_t n = u32();
    need(n);
    std::string out(reinterpret_cast<const char*>(data_ + pos_), n);
    pos_ += n;
    return out;
  }

  // Count prefix for repeated fields; rejects counts that cannot fit in the
  // remaining input (each element needs at least min_elem_bytes).
  uint32_t count(size_t min_elem_bytes) {
    uint32_t n = u32();
    if (min_elem_bytes > 0 && static_cast<uint64_t>(n) * min_elem_bytes > remaining()) {
      throw MalformedMessage("count exceeds remaining input");
    }
    return n;
  }

  size_t remaining() const { return size_ - pos_; }
  bool done() const { return pos_ == size_; }

  void expect_done() const {
    if (!done()) throw MalformedMessage("trailing bytes");
  }

 private:
  void need(size_t n) const {
    if (size_ - pos_ < n) throw MalformedMessage("truncated input");
  }

  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;
};

inline std::string to_hex(const uint8_t* data, size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xf]);
  }
  return out;
}

inline std::string to_hex(const std::vector<uint8_t>& b) { return to_hex(b.data(), b.size()); }

inline std::vector<uint8_t> from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw MalformedMessage("odd hex length");
  std::vector<uint8_t> out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw MalformedMessage("bad hex digit");
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace bgp

#endif  // BGP_BYTES_HPP
