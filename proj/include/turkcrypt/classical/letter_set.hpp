#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"

namespace turkcrypt::classical {

/// Alphabets for the modular ciphers (shift, Vigenère).
///   turkish29 - the canonical alphabet, Turkish case rules.
///   turkish28 - the canonical alphabet without dotless I, as in the
///               28-column Caesar table; I/ı pass through.
///   english26 - ASCII A-Z with ASCII case rules; everything else passes through.
enum class AlphabetId { turkish29, turkish28, english26 };

class LetterSet {
 public:
  struct Position {
    std::size_t index;
    bool lowercase;
  };

  static const LetterSet& get(AlphabetId id) {
    static const LetterSet turkish29(AlphabetId::turkish29,
                                     std::u32string(canonical_letters.begin(),
                                                    canonical_letters.end()));
    static const LetterSet turkish28(AlphabetId::turkish28, [] {
      std::u32string letters;
      for (char32_t c : canonical_letters) {
        if (c != U'I') letters.push_back(c);
      }
      return letters;
    }());
    static const LetterSet english26(AlphabetId::english26,
                                     U"ABCDEFGHIJKLMNOPQRSTUVWXYZ");
    switch (id) {
      case AlphabetId::turkish28: return turkish28;
      case AlphabetId::english26: return english26;
      case AlphabetId::turkish29: break;
    }
    return turkish29;
  }

  AlphabetId id() const noexcept { return id_; }
  std::size_t size() const noexcept { return letters_.size(); }

  std::optional<Position> classify(char32_t c) const noexcept {
    const char32_t up = upper(c);
    const auto at = letters_.find(up);
    if (at == std::u32string::npos) return std::nullopt;
    return Position{at, up != c};
  }

  char32_t letter(std::size_t index, bool lowercase) const noexcept {
    const char32_t up = letters_[index % letters_.size()];
    if (!lowercase) return up;
    if (id_ == AlphabetId::english26) return up + (U'a' - U'A');
    return to_lower(up);
  }

 private:
  LetterSet(AlphabetId id, std::u32string letters) : id_(id), letters_(std::move(letters)) {}

  char32_t upper(char32_t c) const noexcept {
    if (id_ == AlphabetId::english26) {
      return (c >= U'a' && c <= U'z') ? c - (U'a' - U'A') : c;
    }
    return to_upper(c);
  }

  AlphabetId id_;
  std::u32string letters_;
};

inline std::optional<AlphabetId> parse_alphabet_id(std::string_view name) {
  if (name == "turkish29") return AlphabetId::turkish29;
  if (name == "turkish28") return AlphabetId::turkish28;
  if (name == "english26") return AlphabetId::english26;
  return std::nullopt;
}

/// Rewrites every letter of `text` that belongs to `set` through
/// `fn(index, ordinal) -> index`, where ordinal counts letters seen so far.
/// Passthrough characters and letter case are preserved.
template <typename Fn>
std::string map_letters(std::string_view text, const LetterSet& set, Fn&& fn) {
  const std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t ordinal = 0;
  for (char32_t c : cps) {
    if (auto pos = set.classify(c)) {
      utf8::append(out, set.letter(fn(pos->index, ordinal++), pos->lowercase));
    } else {
      utf8::append(out, c);
    }
  }
  return out;
}

}  // namespace turkcrypt::classical
