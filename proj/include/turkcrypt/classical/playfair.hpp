#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turkcrypt/error.hpp"
#include "turkcrypt/text.hpp"

namespace turkcrypt::classical {

/// 5x5 Playfair square over the Turkish alphabet. 29 letters fit 25 cells by
/// sharing three cells: {S,Ş}, {U,Ü} and {V,Y,Z}. A shared cell is rendered by
/// its first member, so decryption yields S, U or V for those cells.
class PlayfairTable {
 public:
  static constexpr std::size_t side = 5;

  struct Cell {
    std::size_t row;
    std::size_t col;
    bool operator==(const Cell&) const = default;
  };

  explicit PlayfairTable(std::string_view keyword) {
    const std::vector<Letter> key = letters_of(keyword);
    if (key.empty()) throw cipher_error(errc::empty_keyword, "Playfair keyword has no letters");

    std::array<bool, alphabet_size> placed{};
    std::size_t next = 0;
    auto place = [&](Letter l) {
      const std::size_t cls = class_of(l);
      if (placed[cls]) return;
      placed[cls] = true;
      cells_[next] = Letter::at(cls);
      for (std::size_t i = 0; i < alphabet_size; ++i) {
        if (class_of(Letter::at(i)) == cls) cell_of_[i] = Cell{next / side, next % side};
      }
      ++next;
    };
    for (Letter l : key) place(l);
    for (std::size_t i = 0; i < alphabet_size; ++i) place(Letter::at(i));
  }

  /// Representative (first member) of the class holding `l`.
  static Letter representative(Letter l) noexcept { return Letter::at(class_of(l)); }

  /// Members of the cell's merge class, in alphabet order.
  std::vector<Letter> members(Cell c) const {
    std::vector<Letter> out;
    const std::size_t rep = at(c).index();
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      if (class_of(Letter::at(i)) == rep) out.push_back(Letter::at(i));
    }
    return out;
  }

  Cell cell_of(Letter l) const noexcept { return cell_of_[l.index()]; }
  Letter at(Cell c) const noexcept { return cells_[c.row * side + c.col]; }
  Letter at(std::size_t row, std::size_t col) const noexcept { return at(Cell{row, col}); }

  bool operator==(const PlayfairTable& other) const noexcept { return cells_ == other.cells_; }

 private:
  // Index of the first letter of the merge class containing `l`.
  static std::size_t class_of(Letter l) noexcept {
    switch (l.upper()) {
      case U'Ş': return Letter::from_upper(U'S')->index();
      case U'Ü': return Letter::from_upper(U'U')->index();
      case U'Y':
      case U'Z': return Letter::from_upper(U'V')->index();
      default: return l.index();
    }
  }

  std::array<Letter, side * side> cells_;
  std::array<Cell, alphabet_size> cell_of_{};
};

inline PlayfairTable playfair_build(std::string_view keyword) { return PlayfairTable(keyword); }

struct PlayfairSpec {
  std::string keyword;
  Letter padding = *Letter::from_upper(U'M');
};

namespace detail {

inline std::string letter_text(Letter l) {
  std::string s;
  utf8::append(s, l.upper());
  return s;
}

// Splits letters into digrams, inserting the padding letter between two
// letters of the same cell and after an odd final letter.
inline std::vector<std::pair<Letter, Letter>> playfair_digrams(const std::vector<Letter>& letters,
                                                               const PlayfairTable& table,
                                                               Letter padding) {
  std::vector<std::pair<Letter, Letter>> out;
  auto collides = [&](Letter a) { return table.cell_of(a) == table.cell_of(padding); };
  std::size_t i = 0;
  while (i < letters.size()) {
    const Letter a = letters[i];
    if (i + 1 < letters.size() && table.cell_of(a) != table.cell_of(letters[i + 1])) {
      out.emplace_back(a, letters[i + 1]);
      i += 2;
      continue;
    }
    if (collides(a)) {
      throw cipher_error(errc::padding_in_same_cell_as_neighbor,
                         "padding '" + letter_text(padding) + "' cannot follow '" +
                             letter_text(a) + "'");
    }
    out.emplace_back(a, padding);
    i += 1;
  }
  return out;
}

inline std::string playfair_apply(const std::vector<std::pair<Letter, Letter>>& digrams,
                                  const PlayfairTable& table, bool decrypt) {
  constexpr std::size_t n = PlayfairTable::side;
  const std::size_t step = decrypt ? n - 1 : 1;
  std::string out;
  for (const auto& [a, b] : digrams) {
    const auto ca = table.cell_of(a);
    const auto cb = table.cell_of(b);
    Letter x, y;
    if (ca.row == cb.row) {
      x = table.at(ca.row, (ca.col + step) % n);
      y = table.at(cb.row, (cb.col + step) % n);
    } else if (ca.col == cb.col) {
      x = table.at((ca.row + step) % n, ca.col);
      y = table.at((cb.row + step) % n, cb.col);
    } else {
      x = table.at(ca.row, cb.col);
      y = table.at(cb.row, ca.col);
    }
    utf8::append(out, x.upper());
    utf8::append(out, y.upper());
  }
  return out;
}

}  // namespace detail

/// Passthrough characters are dropped; output is uppercase cell
/// representatives with no separators.
inline std::string playfair_encrypt(std::string_view text, const PlayfairSpec& spec) {
  const PlayfairTable table(spec.keyword);
  const auto digrams = detail::playfair_digrams(letters_of(text), table, spec.padding);
  return detail::playfair_apply(digrams, table, false);
}

/// Inverts the three rules. Ciphertext must hold an even number of letters
/// with no digram inside one cell.
inline std::string playfair_decrypt(std::string_view text, const PlayfairSpec& spec) {
  const PlayfairTable table(spec.keyword);
  const std::vector<Letter> letters = letters_of(text);
  if (letters.size() % 2 != 0) {
    throw cipher_error(errc::odd_ciphertext_length, std::to_string(letters.size()) + " letters");
  }
  std::vector<std::pair<Letter, Letter>> digrams;
  for (std::size_t i = 0; i < letters.size(); i += 2) {
    if (table.cell_of(letters[i]) == table.cell_of(letters[i + 1])) {
      throw cipher_error(errc::padding_in_same_cell_as_neighbor,
                         "ciphertext digram " + std::to_string(i / 2) + " lies in one cell");
    }
    digrams.emplace_back(letters[i], letters[i + 1]);
  }
  return detail::playfair_apply(digrams, table, true);
}

}  // namespace turkcrypt::classical
