#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turkcrypt/cascade.hpp"
#include "turkcrypt/classical/substitution.hpp"
#include "turkcrypt/error.hpp"
#include "turkcrypt/keyset.hpp"
#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"

namespace turkcrypt::analysis {

/// Letter counts over the canonical alphabet. Frequencies are count / total;
/// they are stored as exact counts so ratios and their decimal renderings are
/// exact.
class FrequencyTable {
 public:
  void add(Letter l, std::uint64_t n = 1) noexcept {
    counts_[l.index()] += n;
    total_ += n;
  }

  /// Counts the canonical letters of a decoded chunk; case-folded, everything
  /// else ignored.
  void add(std::u32string_view text) noexcept {
    for (char32_t c : text) {
      if (auto l = Letter::from_upper(to_upper(c))) add(*l);
    }
  }

  std::uint64_t count(Letter l) const noexcept { return counts_[l.index()]; }
  std::uint64_t total_letters() const noexcept { return total_; }

  double frequency(Letter l) const noexcept {
    return total_ == 0 ? 0.0 : static_cast<double>(counts_[l.index()]) / static_cast<double>(total_);
  }

  /// Letters by descending frequency; equal counts keep alphabet order.
  std::array<Letter, alphabet_size> ranking() const {
    std::array<Letter, alphabet_size> order;
    for (std::size_t i = 0; i < alphabet_size; ++i) order[i] = Letter::at(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](Letter a, Letter b) { return count(a) > count(b); });
    return order;
  }

  bool operator==(const FrequencyTable&) const = default;

 private:
  std::array<std::uint64_t, alphabet_size> counts_{};
  std::uint64_t total_ = 0;
};

inline FrequencyTable letter_frequencies(std::string_view text) {
  FrequencyTable table;
  table.add(utf8::decode(text));
  if (table.total_letters() == 0) throw cipher_error(errc::empty_text, "no letters in input");
  return table;
}

/// Same computation as letter_frequencies, read in fixed-size chunks.
inline FrequencyTable build_reference_table(std::istream& corpus) {
  FrequencyTable table;
  std::string pending;
  std::array<char, 1 << 16> buffer;
  while (corpus) {
    corpus.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    pending.append(buffer.data(), static_cast<std::size_t>(corpus.gcount()));
    const std::size_t usable = utf8::complete_prefix(pending);
    table.add(utf8::decode(std::string_view(pending).substr(0, usable)));
    pending.erase(0, usable);
  }
  if (!pending.empty()) utf8::decode(pending);
  if (table.total_letters() == 0) throw cipher_error(errc::empty_text, "no letters in corpus");
  return table;
}

/// Round-half-up decimal rendering of the exact ratio count/total.
inline std::string format_ratio(std::uint64_t count, std::uint64_t total, int decimals,
                                char point = '.') {
  if (total == 0) total = 1;
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // count <= total, so count * scale stays well inside 64 bits for any
  // realistic corpus at 6 decimals.
  const std::uint64_t scaled = (2 * count * scale + total) / (2 * total);
  std::string frac = std::to_string(scaled % scale);
  std::string out = std::to_string(scaled / scale);
  if (decimals > 0) {
    out += point;
    out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
  }
  return out;
}

/// Partial map from cipher letters to guessed plain letters.
struct SubstitutionGuess {
  std::array<std::optional<Letter>, alphabet_size> plain_for{};

  std::optional<Letter> operator[](Letter cipher) const noexcept {
    return plain_for[cipher.index()];
  }
};

/// Pairs the cipher letters that occur, by descending frequency, with the
/// reference letters by descending frequency. Ties go to alphabet order.
inline SubstitutionGuess rank_match_attack(const FrequencyTable& cipher,
                                           const FrequencyTable& reference) {
  if (cipher.total_letters() == 0) throw cipher_error(errc::empty_text, "no cipher letters");
  SubstitutionGuess guess;
  const auto cipher_rank = cipher.ranking();
  const auto reference_rank = reference.ranking();
  for (std::size_t r = 0; r < alphabet_size; ++r) {
    if (cipher.count(cipher_rank[r]) == 0) break;
    guess.plain_for[cipher_rank[r].index()] = reference_rank[r];
  }
  return guess;
}

inline SubstitutionGuess rank_match_attack(std::string_view ciphertext,
                                           const FrequencyTable& reference) {
  return rank_match_attack(letter_frequencies(ciphertext), reference);
}

/// Fraction of letter positions where the guess recovers the true plaintext
/// letter. Both texts must have the same letter sequence length.
inline double guess_accuracy(const SubstitutionGuess& guess, const std::vector<Letter>& cipher,
                             const std::vector<Letter>& plain) {
  if (cipher.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cipher.size() && i < plain.size(); ++i) {
    if (guess[cipher[i]] == plain[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(cipher.size());
}

inline constexpr double default_smoothing = 1e-6;

/// Sum over letters of (obs - exp)^2 / (exp + smoothing). Not symmetric.
inline double chi_squared_distance(const FrequencyTable& observed, const FrequencyTable& expected,
                                   double smoothing = default_smoothing) {
  double sum = 0.0;
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    const Letter l = Letter::at(i);
    const double diff = observed.frequency(l) - expected.frequency(l);
    sum += diff * diff / (expected.frequency(l) + smoothing);
  }
  return sum;
}

struct CrackResult {
  int shift = 0;
  bool low_confidence = false;
  std::array<double, alphabet_size> distances{};
};

inline constexpr std::size_t default_crack_floor = 100;

/// Tries all 29 shifts and keeps the one whose decryption is closest to the
/// reference distribution; the smallest shift wins ties. Inputs shorter than
/// `min_letters` are still cracked but flagged low-confidence.
inline CrackResult crack_shift(std::string_view ciphertext, const FrequencyTable& reference,
                               std::size_t min_letters = default_crack_floor,
                               double smoothing = default_smoothing) {
  const FrequencyTable observed = letter_frequencies(ciphertext);
  CrackResult result;
  result.low_confidence = observed.total_letters() < min_letters;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < alphabet_size; ++k) {
    // Decrypting by k moves the count of cipher letter (j + k) onto plain j.
    FrequencyTable shifted;
    for (std::size_t j = 0; j < alphabet_size; ++j) {
      shifted.add(Letter::at(j), observed.count(Letter::at(j + k)));
    }
    result.distances[k] = chi_squared_distance(shifted, reference, smoothing);
    if (result.distances[k] < best) {
      best = result.distances[k];
      result.shift = static_cast<int>(k);
    }
  }
  return result;
}

struct FlatnessReport {
  FrequencyTable plain;
  FrequencyTable shifted;
  FrequencyTable cascade;
  double shift_accuracy = 0.0;
  double cascade_accuracy = 0.0;
  double shift_distance = 0.0;
  double cascade_distance = 0.0;
};

inline constexpr std::size_t default_flatness_floor = 1000;
inline constexpr int flatness_shift = 3;

/// Runs the rank-match attack against a shift-by-3 ciphertext and a cascade
/// ciphertext of the same plaintext and reports how much of each it recovers.
inline FlatnessReport flatness_report(std::string_view plaintext, const CascadeKeySet& keys,
                                      const FrequencyTable& reference,
                                      IndexMode mode = IndexMode::all_chars,
                                      std::size_t min_letters = default_flatness_floor) {
  FlatnessReport report;
  report.plain = letter_frequencies(plaintext);
  if (report.plain.total_letters() < min_letters) {
    throw cipher_error(errc::too_short, std::to_string(report.plain.total_letters()) +
                                            " letters, need " + std::to_string(min_letters));
  }
  const std::vector<Letter> plain_letters = letters_of(plaintext);

  const std::string shifted = classical::shift_encrypt(plaintext, flatness_shift);
  const std::string cascaded = encrypt_message(plaintext, keys, mode);
  report.shifted = letter_frequencies(shifted);
  report.cascade = letter_frequencies(cascaded);

  report.shift_accuracy = guess_accuracy(rank_match_attack(report.shifted, reference),
                                         letters_of(shifted), plain_letters);
  report.cascade_accuracy = guess_accuracy(rank_match_attack(report.cascade, reference),
                                           letters_of(cascaded), plain_letters);
  report.shift_distance = chi_squared_distance(report.shifted, reference);
  report.cascade_distance = chi_squared_distance(report.cascade, reference);
  return report;
}

/// Human-readable table: letter, count, frequency to 6 places.
inline std::string render_text(const FrequencyTable& t) {
  std::string out = "letters: " + std::to_string(t.total_letters()) + "\n";
  for (Letter l : t.ranking()) {
    std::string row;
    utf8::append(row, l.upper());
    row += "  " + std::to_string(t.count(l));
    row += "  " + format_ratio(t.count(l), t.total_letters(), 6);
    out += row + "\n";
  }
  return out;
}

/// Machine-readable records in alphabet order: "letter,count,frequency".
inline std::string render_records(const FrequencyTable& t) {
  std::string out = "letter,count,frequency\n";
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    const Letter l = Letter::at(i);
    utf8::append(out, l.upper());
    out += "," + std::to_string(t.count(l)) + "," +
           format_ratio(t.count(l), t.total_letters(), 6) + "\n";
  }
  return out;
}

}  // namespace turkcrypt::analysis
