#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "turkcrypt/error.hpp"
#include "turkcrypt/text.hpp"

namespace turkcrypt::classical {

/// Checkerboard of `rows` x `cols` cells filled row-major from `grid`. The
/// last row may be short. Coordinates are single digits, so both dimensions
/// are limited to 1..9.
struct PolybiusSpec {
  std::size_t rows = 5;
  std::size_t cols = 6;
  std::string grid = "ABCÇDEFGĞHIİJKLMNOÖPRSŞTUÜVYZ";
};

class PolybiusGrid {
 public:
  explicit PolybiusGrid(const PolybiusSpec& spec) : rows_(spec.rows), cols_(spec.cols) {
    if (rows_ < 1 || rows_ > 9 || cols_ < 1 || cols_ > 9) {
      throw cipher_error(errc::bad_grid_dimensions,
                         std::to_string(rows_) + "x" + std::to_string(cols_) +
                             ", each side must be 1..9");
    }
    for (char32_t c : utf8::decode(spec.grid)) {
      if (c == U' ') continue;
      auto l = Letter::from_upper(to_upper(c));
      if (!l) {
        std::string symbol;
        utf8::append(symbol, c);
        throw cipher_error(errc::non_canonical_symbol, "grid entry '" + symbol + "'");
      }
      if (position_[l->index()]) {
        std::string symbol;
        utf8::append(symbol, l->upper());
        throw cipher_error(errc::duplicate_grid_letter, "'" + symbol + "'");
      }
      if (cells_.size() == rows_ * cols_) {
        throw cipher_error(errc::bad_grid_dimensions,
                           "more letters than " + std::to_string(rows_ * cols_) + " cells");
      }
      position_[l->index()] = cells_.size();
      cells_.push_back(*l);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// 1-based (row, col) of `l`, if present.
  std::optional<std::pair<std::size_t, std::size_t>> coordinates(Letter l) const noexcept {
    if (!position_[l.index()]) return std::nullopt;
    const std::size_t p = *position_[l.index()];
    return std::pair{p / cols_ + 1, p % cols_ + 1};
  }

  /// Letter at 1-based (row, col), if that cell is occupied.
  std::optional<Letter> at(std::size_t row, std::size_t col) const noexcept {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) return std::nullopt;
    const std::size_t p = (row - 1) * cols_ + (col - 1);
    if (p >= cells_.size()) return std::nullopt;
    return cells_[p];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Letter> cells_;
  std::array<std::optional<std::size_t>, alphabet_size> position_{};
};

namespace detail {

constexpr bool is_digit(char32_t c) noexcept { return c >= U'0' && c <= U'9'; }

}  // namespace detail

/// Each letter becomes "<row><col>"; pairs inside a word are joined by '-',
/// and every other character is copied as a group delimiter. Digits and '-'
/// in the plaintext would be ambiguous on decode and are rejected.
inline std::string polybius_encode(std::string_view text, const PolybiusSpec& spec) {
  const PolybiusGrid grid(spec);
  std::string out;
  bool in_word = false;
  for (const MessageUnit& unit : tokenize(text)) {
    if (!unit.is_letter()) {
      if (detail::is_digit(unit.raw) || unit.raw == U'-') {
        std::string symbol;
        utf8::append(symbol, unit.raw);
        throw cipher_error(errc::reserved_character, "'" + symbol + "' in Polybius plaintext");
      }
      utf8::append(out, unit.raw);
      in_word = false;
      continue;
    }
    auto rc = grid.coordinates(*unit.letter);
    if (!rc) {
      std::string symbol;
      utf8::append(symbol, unit.letter->upper());
      throw cipher_error(errc::letter_not_in_grid, "'" + symbol + "'");
    }
    if (in_word) out += '-';
    out += static_cast<char>('0' + rc->first);
    out += static_cast<char>('0' + rc->second);
    in_word = true;
  }
  return out;
}

/// Inverse of polybius_encode; letters come back uppercase.
inline std::string polybius_decode(std::string_view code, const PolybiusSpec& spec) {
  const PolybiusGrid grid(spec);
  const std::u32string cps = utf8::decode(code);
  std::string out;
  auto malformed = [&](std::size_t at, const std::string& why) {
    return cipher_error(errc::malformed_digit_pair,
                        why + " at character " + std::to_string(at));
  };
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!detail::is_digit(cps[i])) {
      if (cps[i] == U'-') throw malformed(i, "'-' outside a digit-pair group");
      utf8::append(out, cps[i]);
      ++i;
      continue;
    }
    // A group: pair ('-' pair)*
    while (true) {
      if (i + 1 >= cps.size() || !detail::is_digit(cps[i + 1])) {
        throw malformed(i, "single digit");
      }
      if (i + 2 < cps.size() && detail::is_digit(cps[i + 2])) {
        throw malformed(i, "more than two digits");
      }
      auto l = grid.at(cps[i] - U'0', cps[i + 1] - U'0');
      if (!l) throw malformed(i, "no letter at this coordinate");
      utf8::append(out, l->upper());
      i += 2;
      if (i < cps.size() && cps[i] == U'-') {
        if (i + 1 >= cps.size() || !detail::is_digit(cps[i + 1])) {
          throw malformed(i, "'-' not followed by a digit pair");
        }
        ++i;
        continue;
      }
      break;
    }
  }
  return out;
}

}  // namespace turkcrypt::classical
