#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turkcrypt {

enum class errc {
  invalid_utf8,
  wrong_length,
  duplicate_letter,
  non_canonical_symbol,
  bad_header,
  missing_row,
  shift_out_of_range,
  empty_key,
  key_letter_outside_alphabet,
  empty_keyword,
  padding_in_same_cell_as_neighbor,
  odd_ciphertext_length,
  letter_not_in_grid,
  duplicate_grid_letter,
  malformed_digit_pair,
  reserved_character,
  bad_grid_dimensions,
  rails_out_of_range,
  circumference_out_of_range,
  key_too_short,
  empty_text,
  too_short,
};

constexpr std::string_view name(errc code) noexcept {
  switch (code) {
    case errc::invalid_utf8: return "InvalidUtf8";
    case errc::wrong_length: return "WrongLength";
    case errc::duplicate_letter: return "DuplicateLetter";
    case errc::non_canonical_symbol: return "NonCanonicalSymbol";
    case errc::bad_header: return "BadHeader";
    case errc::missing_row: return "MissingRow";
    case errc::shift_out_of_range: return "ShiftOutOfRange";
    case errc::empty_key: return "EmptyKey";
    case errc::key_letter_outside_alphabet: return "KeyLetterOutsideAlphabet";
    case errc::empty_keyword: return "EmptyKeyword";
    case errc::padding_in_same_cell_as_neighbor: return "PaddingInSameCellAsNeighbor";
    case errc::odd_ciphertext_length: return "OddCiphertextLength";
    case errc::letter_not_in_grid: return "LetterNotInGrid";
    case errc::duplicate_grid_letter: return "DuplicateGridLetter";
    case errc::malformed_digit_pair: return "MalformedDigitPair";
    case errc::reserved_character: return "ReservedCharacter";
    case errc::bad_grid_dimensions: return "BadGridDimensions";
    case errc::rails_out_of_range: return "RailsOutOfRange";
    case errc::circumference_out_of_range: return "CircumferenceOutOfRange";
    case errc::key_too_short: return "KeyTooShort";
    case errc::empty_text: return "EmptyText";
    case errc::too_short: return "TooShort";
  }
  return "Unknown";
}

/// Data error raised by every module. what() reads "<Name>[ in <where>]: <detail>".
class cipher_error : public std::runtime_error {
 public:
  cipher_error(errc code, const std::string& detail, const std::string& where = {})
      : std::runtime_error(format(code, detail, where)),
        code_(code),
        detail_(detail) {}

  errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, located (e.g. at a key-file row name).
  cipher_error located(const std::string& where) const { return {code_, detail_, where}; }

 private:
  static std::string format(errc code, const std::string& detail, const std::string& where) {
    std::string out(name(code));
    if (!where.empty()) out += " in " + where;
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  errc code_;
  std::string detail_;
};

}  // namespace turkcrypt
