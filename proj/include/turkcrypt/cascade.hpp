#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/keyset.hpp"
#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"

namespace turkcrypt {

/// Dual-group cascade substitution.
///
/// A letter is routed to one of two groups by the parity of its index. Inside
/// the group it passes through three substitution stages (plain row to cipher
/// row). The stage-3 output is then located in the shared final alphabet and
/// replaced by the letter cyclically preceding it there. Decryption takes the
/// cyclic successor in the final alphabet and walks the stages backwards.
inline Letter encrypt_letter(Letter l, Group g, const CascadeKeySet& k) noexcept {
  for (const auto& stage : k.stages(g)) l = stage.image(l);
  const std::size_t p = k.final_alphabet.position_of(l);
  return k.final_alphabet.at(p + alphabet_size - 1);
}

inline Letter decrypt_letter(Letter c, Group g, const CascadeKeySet& k) noexcept {
  const std::size_t p = k.final_alphabet.position_of(c);
  Letter l = k.final_alphabet.at(p + 1);
  const auto& stages = k.stages(g);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) l = it->preimage(l);
  return l;
}

/// One group's whole pipeline collapsed to a single letter permutation.
class CompositePermutation {
 public:
  CompositePermutation(Group g, const CascadeKeySet& k) {
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      table_[i] = encrypt_letter(Letter::at(i), g, k);
    }
  }

  Letter operator[](Letter plain) const noexcept { return table_[plain.index()]; }
  const std::array<Letter, alphabet_size>& table() const noexcept { return table_; }

 private:
  std::array<Letter, alphabet_size> table_;
};

inline CompositePermutation composite_table(Group g, const CascadeKeySet& k) {
  return CompositePermutation(g, k);
}

enum class Direction { encrypt, decrypt };

/// Incremental cascade transform over a UTF-8 byte stream. Index counting is
/// global across feed() calls, so a stream is one message. Holds at most three
/// bytes of an unfinished code point between calls.
class CascadeStream {
 public:
  CascadeStream(const CascadeKeySet& keys, Direction direction, IndexMode mode)
      : keys_(keys), direction_(direction), mode_(mode) {}

  /// Transforms the complete code points in `bytes`. Throws InvalidUtf8.
  std::string feed(std::string_view bytes) {
    pending_.append(bytes);
    const std::size_t usable = utf8::complete_prefix(pending_);
    const std::u32string cps = utf8::decode(std::string_view(pending_).substr(0, usable));
    pending_.erase(0, usable);

    std::string out;
    out.reserve(cps.size());
    for (char32_t c : cps) {
      MessageUnit unit = to_canonical(c);
      if (unit.is_letter()) {
        const Group g = group_for_position(position_, mode_, letters_);
        unit.letter = direction_ == Direction::encrypt ? encrypt_letter(*unit.letter, g, keys_)
                                                       : decrypt_letter(*unit.letter, g, keys_);
        utf8::append(out, render_letter(*unit.letter, unit.was_lowercase));
        ++letters_;
      } else {
        utf8::append(out, c);
      }
      ++position_;
    }
    return out;
  }

  /// Throws InvalidUtf8 if the stream ended inside a code point.
  void finish() const {
    if (!pending_.empty()) utf8::decode(pending_);
  }

 private:
  const CascadeKeySet& keys_;
  Direction direction_;
  IndexMode mode_;
  std::string pending_;
  std::size_t position_ = 0;
  std::size_t letters_ = 0;
};

inline std::string encrypt_message(std::string_view message, const CascadeKeySet& k,
                                   IndexMode mode = IndexMode::all_chars) {
  CascadeStream stream(k, Direction::encrypt, mode);
  std::string out = stream.feed(message);
  stream.finish();
  return out;
}

inline std::string decrypt_message(std::string_view ciphertext, const CascadeKeySet& k,
                                   IndexMode mode = IndexMode::all_chars) {
  CascadeStream stream(k, Direction::decrypt, mode);
  std::string out = stream.feed(ciphertext);
  stream.finish();
  return out;
}

/// Number of distinct key sets, (29!)^7, as a decimal string.
inline std::string keyspace_size() {
  // Little-endian base-1e9 limbs.
  std::vector<std::uint64_t> limbs{1};
  auto multiply = [&](std::uint64_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      const std::uint64_t v = limb * factor + carry;
      limb = v % 1'000'000'000;
      carry = v / 1'000'000'000;
    }
    while (carry) {
      limbs.push_back(carry % 1'000'000'000);
      carry /= 1'000'000'000;
    }
  };
  for (int alphabet = 0; alphabet < 7; ++alphabet) {
    for (std::uint64_t f = 2; f <= alphabet_size; ++f) multiply(f);
  }
  std::string out = std::to_string(limbs.back());
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace turkcrypt
