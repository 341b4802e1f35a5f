#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/utf8.hpp"

namespace turkcrypt {

inline constexpr std::size_t alphabet_size = 29;

/// The canonical uppercase Turkish alphabet, in dictionary order.
inline constexpr std::array<char32_t, alphabet_size> canonical_letters = {
    U'A', U'B', U'C', U'Ç', U'D', U'E', U'F', U'G', U'Ğ', U'H',
    U'I', U'İ', U'J', U'K', U'L', U'M', U'N', U'O', U'Ö', U'P',
    U'R', U'S', U'Ş', U'T', U'U', U'Ü', U'V', U'Y', U'Z'};

/// Turkish case mapping for the letters this library knows about. Everything
/// else is returned unchanged.
constexpr char32_t to_upper(char32_t c) noexcept {
  switch (c) {
    case U'i': return U'İ';
    case U'ı': return U'I';
    case U'ç': return U'Ç';
    case U'ğ': return U'Ğ';
    case U'ö': return U'Ö';
    case U'ş': return U'Ş';
    case U'ü': return U'Ü';
    default: break;
  }
  if (c >= U'a' && c <= U'z') return c - (U'a' - U'A');
  return c;
}

constexpr char32_t to_lower(char32_t c) noexcept {
  switch (c) {
    case U'İ': return U'i';
    case U'I': return U'ı';
    case U'Ç': return U'ç';
    case U'Ğ': return U'ğ';
    case U'Ö': return U'ö';
    case U'Ş': return U'ş';
    case U'Ü': return U'ü';
    default: break;
  }
  if (c >= U'A' && c <= U'Z') return c + (U'a' - U'A');
  return c;
}

inline std::string to_upper(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  for (char32_t& c : cps) c = to_upper(c);
  return utf8::encode(cps);
}

inline std::string to_lower(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  for (char32_t& c : cps) c = to_lower(c);
  return utf8::encode(cps);
}

/// One of the 29 canonical letters, stored by alphabet position.
class Letter {
 public:
  /// 'A'.
  constexpr Letter() = default;

  /// Letter at position `index` (taken mod 29).
  static constexpr Letter at(std::size_t index) noexcept {
    return Letter(static_cast<std::uint8_t>(index % alphabet_size));
  }

  /// Exact match against the canonical uppercase letters only.
  static constexpr std::optional<Letter> from_upper(char32_t c) noexcept {
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      if (canonical_letters[i] == c) return at(i);
    }
    return std::nullopt;
  }

  constexpr std::size_t index() const noexcept { return index_; }
  constexpr char32_t upper() const noexcept { return canonical_letters[index_]; }
  constexpr char32_t lower() const noexcept { return turkcrypt::to_lower(upper()); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint8_t index) : index_(index) {}
  std::uint8_t index_ = 0;
};

constexpr std::size_t letter_index(Letter l) noexcept { return l.index(); }
constexpr Letter letter_at(std::size_t index) noexcept { return Letter::at(index); }

/// A tokenized input character: either a letter of the alphabet with its
/// original case, or a passthrough character copied verbatim.
struct MessageUnit {
  char32_t raw = 0;
  std::optional<Letter> letter;
  bool was_lowercase = false;

  bool is_letter() const noexcept { return letter.has_value(); }
};

constexpr MessageUnit to_canonical(char32_t c) noexcept {
  const char32_t up = to_upper(c);
  if (auto l = Letter::from_upper(up)) return MessageUnit{c, l, up != c};
  return MessageUnit{c, std::nullopt, false};
}

inline std::vector<MessageUnit> tokenize(std::u32string_view message) {
  std::vector<MessageUnit> units;
  units.reserve(message.size());
  for (char32_t c : message) units.push_back(to_canonical(c));
  return units;
}

/// Throws cipher_error(InvalidUtf8) on malformed input.
inline std::vector<MessageUnit> tokenize(std::string_view message) {
  return tokenize(utf8::decode(message));
}

constexpr char32_t render_letter(Letter l, bool lowercase) noexcept {
  return lowercase ? l.lower() : l.upper();
}

/// Letters are rendered from `letter` with the recorded case, so a unit whose
/// letter was replaced renders as the replacement.
inline std::string render(const std::vector<MessageUnit>& units) {
  std::string out;
  out.reserve(units.size());
  for (const auto& unit : units) {
    utf8::append(out, unit.is_letter() ? render_letter(*unit.letter, unit.was_lowercase)
                                       : unit.raw);
  }
  return out;
}

/// Canonical letters of `text` in order, passthrough dropped.
inline std::vector<Letter> letters_of(std::string_view text) {
  std::vector<Letter> out;
  for (const auto& unit : tokenize(text)) {
    if (unit.is_letter()) out.push_back(*unit.letter);
  }
  return out;
}

inline std::string spell(const std::vector<Letter>& letters) {
  std::string out;
  for (Letter l : letters) utf8::append(out, l.upper());
  return out;
}

enum class IndexMode { all_chars, letters_only };

enum class Group { first, second };

/// Group for a letter: odd 1-based index selects the first group.
/// Under all_chars the index is the raw character position; under
/// letters_only it is the count of letters seen before this one.
constexpr Group group_for_position(std::size_t position, IndexMode mode,
                                   std::size_t letter_ordinal) noexcept {
  const std::size_t index = mode == IndexMode::all_chars ? position : letter_ordinal;
  return (index + 1) % 2 != 0 ? Group::first : Group::second;
}

}  // namespace turkcrypt
