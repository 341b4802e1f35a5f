#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/classical/letter_set.hpp"
#include "turkcrypt/error.hpp"
#include "turkcrypt/random.hpp"
#include "turkcrypt/text.hpp"

namespace turkcrypt::classical {

namespace detail {

inline void check_shift(int k, const LetterSet& set) {
  if (k < 0 || static_cast<std::size_t>(k) >= set.size()) {
    throw cipher_error(errc::shift_out_of_range,
                       std::to_string(k) + " not in [0, " + std::to_string(set.size() - 1) + "]");
  }
}

// Key letters as indices into `set`. Whitespace between letters is ignored.
inline std::vector<std::size_t> key_indices(std::string_view key, const LetterSet& set) {
  std::vector<std::size_t> out;
  for (char32_t c : utf8::decode(key)) {
    if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') continue;
    auto pos = set.classify(c);
    if (!pos) {
      std::string symbol;
      utf8::append(symbol, c);
      throw cipher_error(errc::key_letter_outside_alphabet, "'" + symbol + "'");
    }
    out.push_back(pos->index);
  }
  return out;
}

}  // namespace detail

/// Caesar/Alberti shift: letter index j becomes (j + k) mod N.
inline std::string shift_encrypt(std::string_view text, int k,
                                 AlphabetId alphabet = AlphabetId::turkish29) {
  const LetterSet& set = LetterSet::get(alphabet);
  detail::check_shift(k, set);
  return map_letters(text, set, [&](std::size_t j, std::size_t) { return j + k; });
}

inline std::string shift_decrypt(std::string_view text, int k,
                                 AlphabetId alphabet = AlphabetId::turkish29) {
  const LetterSet& set = LetterSet::get(alphabet);
  detail::check_shift(k, set);
  return map_letters(text, set, [&](std::size_t j, std::size_t) { return j + set.size() - k; });
}

/// Index j becomes 28 - j. Self-inverse.
inline std::string atbash(std::string_view text) {
  const LetterSet& set = LetterSet::get(AlphabetId::turkish29);
  return map_letters(text, set, [&](std::size_t j, std::size_t) { return set.size() - 1 - j; });
}

namespace detail {

inline std::string vigenere(std::string_view text, std::string_view key, AlphabetId alphabet,
                            bool decrypt) {
  const LetterSet& set = LetterSet::get(alphabet);
  const std::vector<std::size_t> shifts = key_indices(key, set);
  if (shifts.empty()) throw cipher_error(errc::empty_key, "Vigenère key has no letters");
  return map_letters(text, set, [&](std::size_t j, std::size_t ordinal) {
    const std::size_t s = shifts[ordinal % shifts.size()];
    return decrypt ? j + set.size() - s : j + s;
  });
}

}  // namespace detail

/// c_i = (p_i + k_(i mod |key|)) mod N. The key advances on letters only.
inline std::string vigenere_encrypt(std::string_view text, std::string_view key,
                                    AlphabetId alphabet = AlphabetId::english26) {
  return detail::vigenere(text, key, alphabet, false);
}

inline std::string vigenere_decrypt(std::string_view text, std::string_view key,
                                    AlphabetId alphabet = AlphabetId::english26) {
  return detail::vigenere(text, key, alphabet, true);
}

namespace detail {

inline std::string vernam(std::string_view text, std::string_view key, bool decrypt) {
  const LetterSet& set = LetterSet::get(AlphabetId::turkish29);
  const std::vector<std::size_t> pad = key_indices(key, set);
  const std::size_t needed = letters_of(text).size();
  if (pad.size() < needed) {
    throw cipher_error(errc::key_too_short, std::to_string(pad.size()) + " key letters for " +
                                                std::to_string(needed) + " message letters");
  }
  return map_letters(text, set, [&](std::size_t j, std::size_t ordinal) {
    return decrypt ? j + set.size() - pad[ordinal] : j + pad[ordinal];
  });
}

}  // namespace detail

/// Additive stream cipher over letter values A=0 .. Z=28. One key letter is
/// consumed per message letter; the key must be at least as long.
inline std::string vernam_encrypt(std::string_view text, std::string_view key) {
  return detail::vernam(text, key, false);
}

inline std::string vernam_decrypt(std::string_view text, std::string_view key) {
  return detail::vernam(text, key, true);
}

/// Uniform random pad of `length` uppercase letters, deterministic per seed.
inline std::string otp_keygen(std::size_t length, Seed seed) {
  KeyRng rng(seed);
  std::string out;
  out.reserve(length * 2);
  for (std::size_t i = 0; i < length; ++i) {
    utf8::append(out, Letter::at(static_cast<std::size_t>(rng.below(alphabet_size))).upper());
  }
  return out;
}

}  // namespace turkcrypt::classical
