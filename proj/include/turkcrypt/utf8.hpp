#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "turkcrypt/error.hpp"

namespace turkcrypt::utf8 {

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append(out, cp);
  return out;
}

namespace detail {

// Expected sequence length from a lead byte, 0 for an invalid lead.
constexpr std::size_t sequence_length(unsigned char lead) noexcept {
  if (lead < 0x80) return 1;
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 0;
}

[[noreturn]] inline void fail(std::size_t offset) {
  throw cipher_error(errc::invalid_utf8, "byte offset " + std::to_string(offset));
}

}  // namespace detail

/// Strict decoder: rejects overlong forms, surrogates and values past U+10FFFF.
inline std::u32string decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    const std::size_t len = detail::sequence_length(lead);
    if (len == 0 || i + len > bytes.size()) detail::fail(i);
    if (len == 1) {
      out.push_back(lead);
      ++i;
      continue;
    }
    char32_t cp = lead & (0xFF >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) detail::fail(i);
      cp = (cp << 6) | (cont & 0x3F);
    }
    const bool overlong = (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
    if (overlong || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) detail::fail(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

/// Length of the longest prefix of `bytes` that does not end inside a
/// multi-byte sequence. Used to split a byte stream at code point boundaries.
inline std::size_t complete_prefix(std::string_view bytes) noexcept {
  const std::size_t n = bytes.size();
  // A sequence is at most 4 bytes, so only the last 3 can be a partial one.
  for (std::size_t back = 1; back <= 3 && back <= n; ++back) {
    const auto byte = static_cast<unsigned char>(bytes[n - back]);
    if ((byte & 0xC0) == 0x80) continue;
    const std::size_t len = detail::sequence_length(byte);
    return len > back ? n - back : n;
  }
  return n;
}

}  // namespace turkcrypt::utf8
