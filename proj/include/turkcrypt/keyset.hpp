#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/error.hpp"
#include "turkcrypt/random.hpp"
#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"

namespace turkcrypt {

/// A permutation of the 29-letter alphabet. Position j holds the cipher image
/// of the canonical letter at index j.
class SubstitutionAlphabet {
 public:
  /// Identity permutation.
  SubstitutionAlphabet() {
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      image_[i] = Letter::at(i);
      preimage_[i] = Letter::at(i);
    }
  }

  /// Validates a candidate row. Checks, in order: every entry is a canonical
  /// uppercase letter (NonCanonicalSymbol), there are exactly 29 entries
  /// (WrongLength), no letter repeats (DuplicateLetter).
  static SubstitutionAlphabet validate(std::span<const char32_t> candidate) {
    std::vector<Letter> letters;
    letters.reserve(candidate.size());
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      auto l = Letter::from_upper(candidate[i]);
      if (!l) {
        std::string symbol;
        utf8::append(symbol, candidate[i]);
        throw cipher_error(errc::non_canonical_symbol,
                           "'" + symbol + "' at position " + std::to_string(i));
      }
      letters.push_back(*l);
    }
    return validate(letters);
  }

  static SubstitutionAlphabet validate(std::span<const Letter> candidate) {
    if (candidate.size() != alphabet_size) {
      throw cipher_error(errc::wrong_length, std::to_string(candidate.size()) +
                                                 " letters, expected 29");
    }
    SubstitutionAlphabet alphabet;
    std::array<bool, alphabet_size> seen{};
    for (std::size_t j = 0; j < alphabet_size; ++j) {
      const Letter l = candidate[j];
      if (seen[l.index()]) {
        std::string symbol;
        utf8::append(symbol, l.upper());
        throw cipher_error(errc::duplicate_letter,
                           "'" + symbol + "' repeated at position " + std::to_string(j));
      }
      seen[l.index()] = true;
      alphabet.image_[j] = l;
      alphabet.preimage_[l.index()] = Letter::at(j);
    }
    return alphabet;
  }

  /// Cipher-row letter paired with the plain letter `plain`.
  Letter image(Letter plain) const noexcept { return image_[plain.index()]; }
  /// Plain-row letter paired with the cipher letter `cipher`.
  Letter preimage(Letter cipher) const noexcept { return preimage_[cipher.index()]; }

  Letter at(std::size_t position) const noexcept { return image_[position % alphabet_size]; }
  /// Position of `l` within the cipher row.
  std::size_t position_of(Letter l) const noexcept { return preimage_[l.index()].index(); }

  const std::array<Letter, alphabet_size>& row() const noexcept { return image_; }

  std::string to_string() const {
    std::string out;
    for (Letter l : image_) utf8::append(out, l.upper());
    return out;
  }

  bool operator==(const SubstitutionAlphabet& other) const noexcept {
    return image_ == other.image_;
  }

 private:
  std::array<Letter, alphabet_size> image_;
  std::array<Letter, alphabet_size> preimage_;
};

inline SubstitutionAlphabet validate_alphabet(std::string_view row) {
  std::u32string cps = utf8::decode(row);
  return SubstitutionAlphabet::validate(std::span<const char32_t>(cps));
}

inline constexpr std::array<std::string_view, 7> keyset_row_names = {
    "G1S1", "G1S2", "G1S3", "G2S1", "G2S2", "G2S3", "FINAL"};

/// Two three-stage groups plus the final alphabet both groups share.
struct CascadeKeySet {
  std::array<SubstitutionAlphabet, 3> group1;
  std::array<SubstitutionAlphabet, 3> group2;
  SubstitutionAlphabet final_alphabet;

  const std::array<SubstitutionAlphabet, 3>& stages(Group g) const noexcept {
    return g == Group::first ? group1 : group2;
  }

  /// Rows in key-file order: G1S1..G1S3, G2S1..G2S3, FINAL.
  const SubstitutionAlphabet& row(std::size_t i) const noexcept {
    if (i < 3) return group1[i];
    if (i < 6) return group2[i - 3];
    return final_alphabet;
  }
  SubstitutionAlphabet& row(std::size_t i) noexcept {
    if (i < 3) return group1[i];
    if (i < 6) return group2[i - 3];
    return final_alphabet;
  }

  bool operator==(const CascadeKeySet&) const = default;
};

/// The seven example alphabets published with the cascade cipher.
inline const CascadeKeySet& published_keyset() {
  static const CascadeKeySet keys = [] {
    constexpr std::array<std::string_view, 7> rows = {
        "BSYKADMRŞÇOZENCGHIFİLĞÖVPTUÜJ",
        "AZCGHJNBÖÇLŞĞÜİPIKTYREVDFSUOM",
        "PIVKZCHNGSUDAFİREÜJĞŞLTYBÖÇOM",
        "SAŞZRÖÇEİJKTYONPBMHÜDVLUIGCFĞ",
        "ŞVHÖÇDAJLİREPIZCFNĞÜKTYBGSUOM",
        "ZŞNIDYSMHÇVRLĞCÜPKGBUÖJFATİOE",
        "DÖJASZBNÜLCRŞEÇYĞFITHGİOKVMPU",
    };
    CascadeKeySet k;
    for (std::size_t i = 0; i < rows.size(); ++i) k.row(i) = validate_alphabet(rows[i]);
    return k;
  }();
  return keys;
}

/// Every member the identity permutation.
inline CascadeKeySet identity_keyset() { return CascadeKeySet{}; }

/// Seven independent uniform permutations, drawn in key-file row order from
/// one KeyRng stream.
inline CascadeKeySet generate_keyset(Seed seed) {
  KeyRng rng(seed);
  CascadeKeySet k;
  for (std::size_t i = 0; i < keyset_row_names.size(); ++i) {
    std::array<Letter, alphabet_size> row;
    for (std::size_t j = 0; j < alphabet_size; ++j) row[j] = Letter::at(j);
    rng.shuffle(row);
    k.row(i) = SubstitutionAlphabet::validate(std::span<const Letter>(row));
  }
  return k;
}

inline constexpr std::string_view keyfile_header = "CASCADE-KEYS v1";

/// Key-file text: header, optional provenance comments, then one line per
/// row as "NAME: <29 letters>". Lines end in a single '\n'.
inline std::string serialize_keyset(const CascadeKeySet& k,
                                    std::optional<Seed> seed = std::nullopt) {
  std::string out(keyfile_header);
  out += '\n';
  if (seed) {
    out += "# rng: ";
    out += KeyRng::name;
    out += "\n# seed: " + std::to_string(seed->value) + '\n';
  }
  for (std::size_t i = 0; i < keyset_row_names.size(); ++i) {
    out += keyset_row_names[i];
    out += ": ";
    out += k.row(i).to_string();
    out += '\n';
  }
  return out;
}

namespace detail {

// Letters with optional single spaces between them.
inline std::u32string parse_row_letters(std::u32string_view body) {
  std::u32string letters;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == U' ' && i > 0 && i + 1 < body.size() && body[i - 1] != U' ' &&
        body[i + 1] != U' ') {
      continue;
    }
    letters.push_back(body[i]);
  }
  return letters;
}

}  // namespace detail

inline CascadeKeySet parse_keyset(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }

  std::size_t cursor = 0;
  auto next_content_line = [&]() -> std::optional<std::string_view> {
    while (cursor < lines.size()) {
      std::string_view line = lines[cursor++];
      const auto end = line.find_last_not_of(" \t");
      line = end == std::string_view::npos ? std::string_view{} : line.substr(0, end + 1);
      if (line.empty() || line.front() == '#') continue;
      return line;
    }
    return std::nullopt;
  };

  auto header = next_content_line();
  if (!header || *header != keyfile_header) {
    throw cipher_error(errc::bad_header,
                       "expected first line '" + std::string(keyfile_header) + "'");
  }

  CascadeKeySet k;
  for (std::size_t i = 0; i < keyset_row_names.size(); ++i) {
    const std::string row_name(keyset_row_names[i]);
    auto line = next_content_line();
    if (!line) throw cipher_error(errc::missing_row, row_name);
    const std::string prefix = row_name + ":";
    if (!line->starts_with(prefix)) {
      throw cipher_error(errc::missing_row,
                         row_name + " (line " + std::to_string(cursor) + " is '" +
                             std::string(*line) + "')");
    }
    std::string_view body = line->substr(prefix.size());
    if (body.starts_with(' ')) body.remove_prefix(1);
    try {
      const std::u32string letters = detail::parse_row_letters(utf8::decode(body));
      k.row(i) = SubstitutionAlphabet::validate(std::span<const char32_t>(letters));
    } catch (const cipher_error& e) {
      throw e.located(row_name);
    }
  }
  if (auto extra = next_content_line()) {
    throw cipher_error(errc::bad_header,
                       "unexpected content after FINAL: '" + std::string(*extra) + "'");
  }
  return k;
}

}  // namespace turkcrypt
