#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "turkcrypt/keyset.hpp"
#include "turkcrypt/utf8.hpp"

namespace test_support {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string corpus() {
  static const std::string text = read_file(std::string(TURKCRYPT_TEST_DATA) + "/turkish_corpus.txt");
  return text;
}

// Alphabet letters in both cases, foreign letters, digits, punctuation,
// whitespace and a few multi-byte non-alphabet code points.
inline std::string random_message(std::mt19937_64& rng, std::size_t max_len = 60) {
  static const std::u32string pool =
      U"ABCÇDEFGĞHIİJKLMNOÖPRSŞTUÜVYZabcçdefgğhıijklmnoöprsştuüvyzQWXqwx0123456789 .,;!?-\n\téâ€日😀";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::u32string out;
  for (std::size_t n = len(rng); n > 0; --n) out.push_back(pool[pick(rng)]);
  return turkcrypt::utf8::encode(out);
}

// Uppercase canonical letters only.
inline std::string random_letters(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, 28);
  std::string out;
  for (std::size_t n = len(rng); n > 0; --n) {
    turkcrypt::utf8::append(out, turkcrypt::Letter::at(pick(rng)).upper());
  }
  return out;
}

inline turkcrypt::CascadeKeySet random_keyset(std::mt19937_64& rng) {
  return turkcrypt::generate_keyset(turkcrypt::Seed{rng()});
}

}  // namespace test_support
