#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/error.hpp"
#include "turkcrypt/text.hpp"

// Transposition ciphers work on letters only: passthrough characters are
// stripped and not restored on decryption. Letter case travels with the letter.

namespace turkcrypt::classical {

namespace detail {

inline std::u32string letter_chars(std::string_view text) {
  std::u32string out;
  for (const MessageUnit& unit : tokenize(text)) {
    if (unit.is_letter()) out.push_back(unit.raw);
  }
  return out;
}

// Rail of each position along the zigzag 0,1,..,r-1,r-2,..,1,0,1,...
inline std::vector<std::size_t> zigzag_rails(std::size_t n, std::size_t rails) {
  std::vector<std::size_t> out(n);
  if (rails == 1) return out;
  const std::size_t period = 2 * (rails - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t phase = i % period;
    out[i] = phase < rails ? phase : period - phase;
  }
  return out;
}

inline void check_rails(int rails) {
  if (rails < 1) throw cipher_error(errc::rails_out_of_range, std::to_string(rails) + " < 1");
}

inline void check_circumference(int circumference) {
  if (circumference < 1) {
    throw cipher_error(errc::circumference_out_of_range, std::to_string(circumference) + " < 1");
  }
}

}  // namespace detail

/// Letters per rail for an n-letter message. With two rails the first holds
/// ceil(n/2).
inline std::vector<std::size_t> rail_lengths(std::size_t n, int rails) {
  detail::check_rails(rails);
  std::vector<std::size_t> lengths(static_cast<std::size_t>(rails));
  for (std::size_t r : detail::zigzag_rails(n, lengths.size())) ++lengths[r];
  return lengths;
}

inline std::string rail_fence_encrypt(std::string_view text, int rails) {
  detail::check_rails(rails);
  const std::u32string letters = detail::letter_chars(text);
  const auto rail_of = detail::zigzag_rails(letters.size(), static_cast<std::size_t>(rails));
  std::u32string out;
  out.reserve(letters.size());
  for (std::size_t r = 0; r < static_cast<std::size_t>(rails); ++r) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (rail_of[i] == r) out.push_back(letters[i]);
    }
  }
  return utf8::encode(out);
}

/// Cuts the ciphertext into rails of the lengths the zigzag would produce,
/// then reads them back along the zigzag.
inline std::string rail_fence_decrypt(std::string_view text, int rails) {
  detail::check_rails(rails);
  const std::u32string letters = detail::letter_chars(text);
  const auto lengths = rail_lengths(letters.size(), rails);
  std::vector<std::size_t> cursor(lengths.size());
  for (std::size_t r = 1; r < lengths.size(); ++r) cursor[r] = cursor[r - 1] + lengths[r - 1];
  std::u32string out;
  out.reserve(letters.size());
  for (std::size_t r : detail::zigzag_rails(letters.size(), lengths.size())) {
    out.push_back(letters[cursor[r]++]);
  }
  return utf8::encode(out);
}

namespace detail {

// Row-major fill of `rows` rows of width ceil(n/rows); column-major read order
// skipping empty cells. Returns, for each output slot, the input index.
inline std::vector<std::size_t> scytale_order(std::size_t n, std::size_t rows) {
  std::vector<std::size_t> order;
  if (n == 0) return order;
  const std::size_t width = (n + rows - 1) / rows;
  order.reserve(n);
  for (std::size_t col = 0; col < width; ++col) {
    for (std::size_t row = 0; row < rows; ++row) {
      const std::size_t idx = row * width + col;
      if (idx < n) order.push_back(idx);
    }
  }
  return order;
}

}  // namespace detail

/// Strip wound `circumference` times around the rod: message written along
/// the rod one row per turn, read off down the turns.
inline std::string scytale_encrypt(std::string_view text, int circumference) {
  detail::check_circumference(circumference);
  const std::u32string letters = detail::letter_chars(text);
  std::u32string out;
  out.reserve(letters.size());
  for (std::size_t idx : detail::scytale_order(letters.size(), circumference)) {
    out.push_back(letters[idx]);
  }
  return utf8::encode(out);
}

inline std::string scytale_decrypt(std::string_view text, int circumference) {
  detail::check_circumference(circumference);
  const std::u32string letters = detail::letter_chars(text);
  std::u32string out(letters.size(), U'\0');
  const auto order = detail::scytale_order(letters.size(), circumference);
  for (std::size_t slot = 0; slot < order.size(); ++slot) out[order[slot]] = letters[slot];
  return utf8::encode(out);
}

}  // namespace turkcrypt::classical
