// Walks one message through the cascade cipher under the published keys and
// a freshly seeded key set, then shows why a frequency attack struggles.

#include <iostream>

#include "turkcrypt/turkcrypt.hpp"

using namespace turkcrypt;

int main() {
  const std::string message = "Mikroişlemci tabanlı bir şifreleme uygulaması";
  const CascadeKeySet& published = published_keyset();

  const std::string c1 = encrypt_message(message, published, IndexMode::all_chars);
  const std::string c2 = encrypt_message(message, published, IndexMode::letters_only);
  std::cout << "plaintext:            " << message << "\n"
            << "cipher (all-chars):   " << c1 << "\n"
            << "cipher (letters-only): " << c2 << "\n"
            << "decrypted:            " << decrypt_message(c1, published) << "\n\n";

  // Each group is one fixed permutation, so the scheme alternates two
  // substitution alphabets.
  const auto g1 = composite_table(Group::first, published);
  const auto g2 = composite_table(Group::second, published);
  std::cout << "plain  ";
  for (std::size_t i = 0; i < alphabet_size; ++i) std::cout << utf8::encode(std::u32string(1, Letter::at(i).upper()));
  std::cout << "\ngroup1 ";
  for (std::size_t i = 0; i < alphabet_size; ++i) std::cout << utf8::encode(std::u32string(1, g1[Letter::at(i)].upper()));
  std::cout << "\ngroup2 ";
  for (std::size_t i = 0; i < alphabet_size; ++i) std::cout << utf8::encode(std::u32string(1, g2[Letter::at(i)].upper()));
  std::cout << "\n\n";

  const CascadeKeySet fresh = generate_keyset(Seed{2024});
  std::cout << "seeded key file:\n" << serialize_keyset(fresh, Seed{2024}) << "\n";
  std::cout << "with seeded keys:     " << encrypt_message(message, fresh) << "\n";
  std::cout << "key space:            (29!)^7 = " << keyspace_size() << "\n";
}
