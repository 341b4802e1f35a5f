#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "turkcrypt/classical.hpp"

using namespace turkcrypt;
using namespace turkcrypt::classical;

namespace {

errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const cipher_error& e) {
    return e.code();
  }
  FAIL("expected cipher_error");
  return errc::invalid_utf8;
}

std::string letters_only(const std::string& s) {
  std::string out;
  for (Letter l : letters_of(s)) utf8::append(out, l.upper());
  return out;
}

// Plain rule interpreter over a hand-written square, one string per row. The
// merged cells are listed by their first member.
struct SquareOracle {
  std::u32string rows[5];

  static char32_t fold(char32_t c) {
    if (c == U'Ş') return U'S';
    if (c == U'Ü') return U'U';
    if (c == U'Y' || c == U'Z') return U'V';
    return c;
  }

  std::pair<std::size_t, std::size_t> find(char32_t c) const {
    c = fold(c);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t col = 0; col < 5; ++col) {
        if (rows[r][col] == c) return {r, col};
      }
    }
    return {99, 99};
  }

  std::u32string pair(char32_t a, char32_t b) const {
    auto [ra, ca] = find(a);
    auto [rb, cb] = find(b);
    if (ra == rb) return {rows[ra][(ca + 1) % 5], rows[rb][(cb + 1) % 5]};
    if (ca == cb) return {rows[(ra + 1) % 5][ca], rows[(rb + 1) % 5][cb]};
    return {rows[ra][cb], rows[rb][ca]};
  }
};

const SquareOracle kriptografi{{U"KRİPT", U"OGAFB", U"CÇDEĞ", U"HIJLM", U"NÖSUV"}};

const std::string zigzag_plain = "Gazi Üniversitesi Teknik Eğitim Fakültesi";
const std::string zigzag_cipher = "GZÜİESTSTKİEİİFKLEİAİNVRİEİENKĞTMAÜTS";

}  // namespace

TEST_CASE("shift", "[classical]") {
  CHECK(shift_encrypt("Gazi", 3) == "Içcl");
  CHECK(shift_encrypt("Gazi", 3, AlphabetId::turkish28) == "İçcl");
  CHECK(to_upper(shift_encrypt("Gazi", 3, AlphabetId::turkish28)) == "İÇCL");
  CHECK(shift_encrypt("Z", 3) == "C");
  CHECK(shift_encrypt("Gazi Üniversitesi", 0) == "Gazi Üniversitesi");
  CHECK(shift_decrypt("Içcl", 3) == "Gazi");
  CHECK(error_of([] { shift_encrypt("A", 29); }) == errc::shift_out_of_range);
  CHECK(error_of([] { shift_encrypt("A", -1); }) == errc::shift_out_of_range);
  CHECK(error_of([] { shift_encrypt("A", 28, AlphabetId::turkish28); }) ==
        errc::shift_out_of_range);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_message(rng);
    const int k = static_cast<int>(rng() % 29);
    CHECK(shift_decrypt(shift_encrypt(m, k), k) == m);
    CHECK(shift_encrypt(shift_encrypt(m, k), (29 - k) % 29) == m);
  }
}

TEST_CASE("atbash", "[classical]") {
  CHECK(atbash("Bugün") == "Ydsçj");
  CHECK(to_lower(atbash("Bugün")) == "ydsçj");
  CHECK(atbash("A") == "Z");
  CHECK(atbash("3+5") == "3+5");

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_message(rng);
    CHECK(atbash(atbash(m)) == m);
  }
}

TEST_CASE("vigenere", "[classical]") {
  CHECK(vigenere_encrypt("Taarruz Dokuzda", "Kale") == "Dalvbuk Hykfdna");
  CHECK(to_upper(vigenere_encrypt("TaarruzDokuzda", "Kale")) == "DALVBUKHYKFDNA");
  CHECK(vigenere_encrypt("T", "K") == "D");
  CHECK(vigenere_decrypt("Dalvbuk Hykfdna", "Kale") == "Taarruz Dokuzda");
  CHECK(vigenere_encrypt("Taarruz Dokuzda", "A") == "Taarruz Dokuzda");
  CHECK(error_of([] { vigenere_encrypt("abc", ""); }) == errc::empty_key);
  CHECK(error_of([] { vigenere_encrypt("abc", " \t "); }) == errc::empty_key);
  CHECK(error_of([] { vigenere_encrypt("abc", "Kalş"); }) == errc::key_letter_outside_alphabet);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_message(rng);
    CHECK(vigenere_encrypt(m, "A", AlphabetId::turkish29) == m);
    const Letter key = Letter::at(rng() % 29);
    std::string key_text;
    utf8::append(key_text, key.upper());
    CHECK(vigenere_encrypt(m, key_text, AlphabetId::turkish29) ==
          shift_encrypt(m, static_cast<int>(key.index())));

    const std::string long_key = test_support::random_letters(rng, 1, 12);
    CHECK(vigenere_decrypt(vigenere_encrypt(m, long_key, AlphabetId::turkish29), long_key,
                           AlphabetId::turkish29) == m);
  }
}

TEST_CASE("playfair table", "[classical]") {
  const PlayfairTable t = playfair_build("kriptografi");
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK(t.at(r, c).upper() == kriptografi.rows[r][c]);
    }
  }
  CHECK(t == playfair_build("kriptografi"));
  CHECK(t.members(t.cell_of(*Letter::from_upper(U'Y'))).size() == 3);
  CHECK(error_of([] { playfair_build("123"); }) == errc::empty_keyword);
}

TEST_CASE("playfair vectors", "[classical]") {
  const PlayfairSpec spec{"kriptografi"};
  CHECK(playfair_encrypt("ODTÜ", spec) == "ACPV");
  CHECK(playfair_decrypt("AC", spec) == "OD");
  CHECK(playfair_encrypt("KR", spec) == "Rİ");
  CHECK(utf8::encode(kriptografi.pair(U'K', U'R')) == "Rİ");
  // Odd tail takes the padding letter, doubled letters are split by it.
  CHECK(playfair_encrypt("ODT", spec) == playfair_encrypt("ODTM", spec));
  CHECK(playfair_encrypt("OO", spec) == playfair_encrypt("OMOM", spec));
  CHECK(error_of([&] { playfair_encrypt("MM", spec); }) ==
        errc::padding_in_same_cell_as_neighbor);
  CHECK(error_of([&] { playfair_decrypt("ACP", spec); }) == errc::odd_ciphertext_length);
}

TEST_CASE("playfair agrees with the rule interpreter", "[classical][oracle]") {
  const PlayfairSpec spec{"kriptografi"};
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const std::u32string a = utf8::decode(test_support::random_letters(rng, 1, 1));
    const std::u32string b = utf8::decode(test_support::random_letters(rng, 1, 1));
    if (kriptografi.find(a[0]) == kriptografi.find(b[0])) continue;
    const std::u32string expect = kriptografi.pair(a[0], b[0]);
    CHECK(playfair_encrypt(utf8::encode(a + b), spec) == utf8::encode(expect));
    // Row and column rules always move both letters.
    const auto [ra, ca] = kriptografi.find(a[0]);
    const auto [rb, cb] = kriptografi.find(b[0]);
    if (ra == rb || ca == cb) {
      CHECK(expect[0] != SquareOracle::fold(a[0]));
      CHECK(expect[1] != SquareOracle::fold(b[0]));
    }
  }
}

TEST_CASE("playfair roundtrip up to merge classes", "[classical][property]") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const PlayfairSpec spec{test_support::random_letters(rng, 1, 10)};
    // Avoid padding collisions: drop letters sharing the padding cell.
    std::string m;
    for (char32_t c : utf8::decode(test_support::random_letters(rng, 0, 40))) {
      if (c != U'M') utf8::append(m, c);
    }
    const std::string c = playfair_encrypt(m, spec);
    const std::string back = playfair_decrypt(c, spec);
    // Decryption returns the padded plaintext with cells replaced by representatives.
    const PlayfairTable t(spec.keyword);
    std::string padded;
    const auto ls = letters_of(m);
    for (std::size_t i = 0; i < ls.size();) {
      utf8::append(padded, PlayfairTable::representative(ls[i]).upper());
      if (i + 1 < ls.size() && t.cell_of(ls[i]) != t.cell_of(ls[i + 1])) {
        utf8::append(padded, PlayfairTable::representative(ls[i + 1]).upper());
        i += 2;
      } else {
        padded += "M";
        i += 1;
      }
    }
    CHECK(back == padded);
  }
}

TEST_CASE("polybius", "[classical]") {
  const PolybiusSpec grid;
  CHECK(polybius_encode("Gazi", grid) == "22-11-55-26");
  CHECK(polybius_encode("A", grid) == "11");
  CHECK(polybius_encode("Gazi Üniversitesi", grid) ==
        "22-11-55-26 52-35-26-53-16-43-44-26-46-16-44-26");
  CHECK(polybius_decode("22-11-55-26", grid) == "GAZİ");
  CHECK(error_of([&] { polybius_encode("A1", grid); }) == errc::reserved_character);
  CHECK(error_of([&] { polybius_decode("2-11", grid); }) == errc::malformed_digit_pair);
  CHECK(error_of([&] { polybius_decode("56", grid); }) == errc::malformed_digit_pair);
  CHECK(error_of([&] { polybius_encode("Z", PolybiusSpec{2, 2, "ABCD"}); }) ==
        errc::letter_not_in_grid);
  CHECK(error_of([] { PolybiusGrid(PolybiusSpec{2, 2, "ABCA"}); }) ==
        errc::duplicate_grid_letter);
  CHECK(error_of([] { PolybiusGrid(PolybiusSpec{0, 2, "AB"}); }) == errc::bad_grid_dimensions);
  CHECK(error_of([] { PolybiusGrid(PolybiusSpec{1, 2, "ABC"}); }) == errc::bad_grid_dimensions);

  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    std::string m = test_support::random_letters(rng, 1, 8);
    m += " " + test_support::random_letters(rng, 1, 8);
    CHECK(polybius_decode(polybius_encode(m, grid), grid) == m);
  }
}

TEST_CASE("rail fence", "[classical]") {
  const std::string c = rail_fence_encrypt(zigzag_plain, 2);
  CHECK(to_upper(c) == zigzag_cipher);
  CHECK(rail_lengths(37, 2) == std::vector<std::size_t>{19, 18});
  CHECK(to_upper(rail_fence_decrypt(zigzag_cipher, 2)) == letters_only(zigzag_plain));
  CHECK(rail_fence_encrypt("ABCD", 2) == "ACBD");
  CHECK(rail_fence_encrypt("A B-C", 1) == "ABC");
  CHECK(rail_fence_encrypt("ABCDEFG", 3) == "AEBDFCG");
  CHECK(error_of([] { rail_fence_encrypt("AB", 0); }) == errc::rails_out_of_range);

  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_letters(rng, 0, 50);
    const int rails = 1 + static_cast<int>(rng() % 8);
    CHECK(rail_fence_decrypt(rail_fence_encrypt(m, rails), rails) == m);
  }
}

TEST_CASE("scytale", "[classical]") {
  CHECK(scytale_encrypt("ABCDEF", 2) == "ADBECF");
  CHECK(scytale_encrypt("AB CD", 1) == "ABCD");
  CHECK(scytale_encrypt("ABCDEFG", 3) == "ADGBECF");
  CHECK(error_of([] { scytale_encrypt("AB", 0); }) == errc::circumference_out_of_range);

  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_letters(rng, 0, 50);
    const int k = 1 + static_cast<int>(rng() % 7);
    CHECK(scytale_decrypt(scytale_encrypt(m, k), k) == m);
  }
}

TEST_CASE("vernam and one-time pad", "[classical]") {
  CHECK(vernam_encrypt("A", "A") == "A");
  CHECK(vernam_encrypt("Z", "B") == "A");
  CHECK(vernam_encrypt("T", "K") == "G");
  CHECK(vernam_decrypt("G", "K") == "T");
  CHECK(vernam_encrypt("a b", "BC") == "b ç");
  CHECK(error_of([] { vernam_encrypt("ABC", "AB"); }) == errc::key_too_short);

  CHECK(otp_keygen(0, Seed{1}).empty());
  CHECK(otp_keygen(1000, Seed{9}) == otp_keygen(1000, Seed{9}));
  CHECK(otp_keygen(1000, Seed{9}) != otp_keygen(1000, Seed{10}));
  CHECK(letters_of(otp_keygen(1000, Seed{9})).size() == 1000);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string m = test_support::random_message(rng);
    const std::string key = otp_keygen(letters_of(m).size(), Seed{rng()});
    CHECK(vernam_decrypt(vernam_encrypt(m, key), key) == m);
  }
}
