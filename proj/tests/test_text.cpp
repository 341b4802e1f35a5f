#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support.hpp"
#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"

using namespace turkcrypt;

TEST_CASE("letter_index follows the canonical order", "[text]") {
  CHECK(letter_index(*Letter::from_upper(U'A')) == 0);
  CHECK(letter_index(*Letter::from_upper(U'Z')) == 28);
  CHECK(letter_index(*Letter::from_upper(U'Ç')) == 3);
  CHECK(letter_index(*Letter::from_upper(U'İ')) == 11);
  CHECK(letter_index(*Letter::from_upper(U'I')) == 10);

  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    const Letter l = letter_at(i);
    CHECK(letter_index(l) == i);
    CHECK(Letter::from_upper(l.upper()) == l);
    seen.insert(letter_index(l));
  }
  CHECK(seen.size() == 29);
}

TEST_CASE("foreign letters are not part of the alphabet", "[text]") {
  for (char32_t c : std::u32string(U"QWXqwxé")) CHECK_FALSE(to_canonical(c).is_letter());
}

TEST_CASE("to_canonical applies Turkish case rules", "[text]") {
  auto i = to_canonical(U'i');
  REQUIRE(i.is_letter());
  CHECK(i.letter->upper() == U'İ');
  CHECK(i.was_lowercase);

  auto dotless = to_canonical(U'ı');
  REQUIRE(dotless.is_letter());
  CHECK(dotless.letter->upper() == U'I');
  CHECK(dotless.was_lowercase);

  auto g = to_canonical(U'G');
  REQUIRE(g.is_letter());
  CHECK(g.letter->upper() == U'G');
  CHECK_FALSE(g.was_lowercase);

  auto comma = to_canonical(U',');
  CHECK_FALSE(comma.is_letter());
  CHECK(comma.raw == U',');

  CHECK(to_upper("istanbul ılık") == "İSTANBUL ILIK");
  CHECK(to_lower("İSTANBUL ILIK") == "istanbul ılık");
}

TEST_CASE("tokenize", "[text]") {
  const auto units = tokenize(std::string_view("Gazi Üniversitesi"));
  REQUIRE(units.size() == 17);
  std::size_t letters = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].is_letter()) {
      ++letters;
    } else {
      CHECK(i == 4);
      CHECK(units[i].raw == U' ');
    }
  }
  CHECK(letters == 16);

  CHECK(tokenize(std::string_view("")).empty());

  const auto arith = tokenize(std::string_view("3+5"));
  REQUIRE(arith.size() == 3);
  for (const auto& u : arith) CHECK_FALSE(u.is_letter());
}

TEST_CASE("tokenize/render is lossless", "[text][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string m = test_support::random_message(rng);
    CHECK(render(tokenize(std::string_view(m))) == m);
  }
}

TEST_CASE("tokenize rejects invalid UTF-8", "[text]") {
  CHECK_THROWS_AS(tokenize(std::string_view("\xC3")), cipher_error);
  CHECK_THROWS_AS(tokenize(std::string_view("\xC0\xAF")), cipher_error);     // overlong
  CHECK_THROWS_AS(tokenize(std::string_view("\xED\xA0\x80")), cipher_error); // surrogate
  CHECK_THROWS_AS(tokenize(std::string_view("a\xFF")), cipher_error);
}

TEST_CASE("utf8::complete_prefix stops before a split code point", "[text]") {
  const std::string s = "aĞ😀";  // 1 + 2 + 4 bytes
  CHECK(utf8::complete_prefix(s) == s.size());
  CHECK(utf8::complete_prefix(s.substr(0, 2)) == 1);
  CHECK(utf8::complete_prefix(s.substr(0, 4)) == 3);
  CHECK(utf8::complete_prefix(s.substr(0, 6)) == 3);
}

TEST_CASE("group_for_position", "[text]") {
  CHECK(group_for_position(0, IndexMode::all_chars, 0) == Group::first);
  CHECK(group_for_position(1, IndexMode::all_chars, 0) == Group::second);
  CHECK(group_for_position(7, IndexMode::letters_only, 2) == Group::first);
  CHECK(group_for_position(2, IndexMode::letters_only, 1) == Group::second);

  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(group_for_position(i, IndexMode::all_chars, 0) !=
          group_for_position(i + 1, IndexMode::all_chars, 0));
    CHECK(group_for_position(0, IndexMode::letters_only, i) !=
          group_for_position(0, IndexMode::letters_only, i + 1));
  }
}
