#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turkcrypt/turkcrypt.hpp"

namespace turkcrypt::cli {
namespace {

// Exit-code 1 and 2 failures raised after parsing succeeded.
struct usage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct data_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t chunk_size = 1 << 16;

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw data_failure("cannot open '" + path + "'");
  return read_stream(file);
}

std::string read_input(const std::string& path, std::istream& in) {
  return path.empty() || path == "-" ? read_stream(in) : read_file(path);
}

/// Payload destination: the named file, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw data_failure("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

  void write(std::string_view data) { stream_->write(data.data(), static_cast<std::streamsize>(data.size())); }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

CascadeKeySet load_keys(const std::string& name) {
  if (name == "paper" || name == "published") return published_keyset();
  const std::string text = read_file(name);
  try {
    return parse_keyset(text);
  } catch (const cipher_error& e) {
    throw data_failure("key file '" + name + "': " + e.what());
  }
}

IndexMode parse_index_mode(const std::string& value) {
  return value == "letters-only" ? IndexMode::letters_only : IndexMode::all_chars;
}

analysis::FrequencyTable load_reference(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw data_failure("cannot open '" + path + "'");
  try {
    return analysis::build_reference_table(file);
  } catch (const cipher_error& e) {
    throw data_failure("reference corpus '" + path + "': " + e.what());
  }
}

struct Common {
  std::string in_path;
  std::string out_path;
};

void add_io(CLI::App* cmd, Common& io) {
  cmd->add_option("--in", io.in_path, "Input file (default: standard input)");
  cmd->add_option("--out", io.out_path, "Output file (default: standard output)");
}

// --- encrypt / decrypt -----------------------------------------------------

struct CascadeArgs {
  Common io;
  std::string key;
  std::string index_mode = "all-chars";
  bool verbose = false;
};

void add_cascade_command(CLI::App& app, const std::string& name, const std::string& about,
                         CascadeArgs& args) {
  CLI::App* cmd = app.add_subcommand(name, about);
  add_io(cmd, args.io);
  cmd->add_option("--key", args.key, "Key file, or 'paper' (alias 'published') for the built-in example keys")
      ->required();
  cmd->add_option("--index-mode", args.index_mode, "Parity index: all-chars or letters-only")
      ->check(CLI::IsMember({"all-chars", "letters-only"}));
  cmd->add_flag("--verbose", args.verbose, "Echo settings to the error stream");
}

void run_cascade(const CascadeArgs& args, Direction direction, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  const CascadeKeySet keys = load_keys(args.key);
  if (args.verbose) {
    err << (direction == Direction::encrypt ? "encrypt" : "decrypt") << " key: " << args.key
        << " index-mode: " << args.index_mode << '\n';
  }
  std::ifstream file;
  std::istream* source = &in;
  if (!args.io.in_path.empty() && args.io.in_path != "-") {
    file.open(args.io.in_path, std::ios::binary);
    if (!file) throw data_failure("cannot open '" + args.io.in_path + "'");
    source = &file;
  }
  Sink sink(args.io.out_path, out);
  CascadeStream stream(keys, direction, parse_index_mode(args.index_mode));
  std::array<char, chunk_size> buffer;
  while (*source) {
    source->read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const auto got = static_cast<std::size_t>(source->gcount());
    if (got == 0) break;
    sink.write(stream.feed(std::string_view(buffer.data(), got)));
  }
  stream.finish();
  sink.stream().flush();
}

// --- keygen / keycheck -----------------------------------------------------

struct KeygenArgs {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> otp_length;
  std::string out_path;
};

void run_keygen(const KeygenArgs& args, std::ostream& out, std::ostream& err) {
  Seed seed{args.seed ? *args.seed : std::random_device{}()};
  if (!args.seed) err << "seed: " << seed.value << '\n';
  Sink sink(args.out_path, out);
  if (args.otp_length) {
    sink.write(classical::otp_keygen(*args.otp_length, seed));
    sink.write("\n");
  } else {
    sink.write(serialize_keyset(generate_keyset(seed), seed));
  }
  sink.stream().flush();
}

void run_keycheck(const std::string& key, std::ostream& out) {
  const CascadeKeySet keys = load_keys(key);
  out << "ok: " << key << '\n';
  for (std::size_t i = 0; i < keyset_row_names.size(); ++i) {
    out << keyset_row_names[i] << ": " << keys.row(i).to_string() << '\n';
  }
}

// --- classical ---------------------------------------------------------------

struct ClassicalArgs {
  Common io;
  std::string cipher;
  bool encrypt = false;
  bool decrypt = false;
  std::optional<int> shift;
  std::string alphabet;
  std::string keyword;
  std::string padding;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  std::string grid;
  std::optional<int> rails;
  std::optional<int> circumference;
  std::string key;
  std::string key_file;
};

const std::map<std::string, std::set<std::string>>& cipher_options() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"shift", {"--k", "--alphabet"}},
      {"atbash", {}},
      {"vigenere", {"--keyword", "--alphabet"}},
      {"playfair", {"--keyword", "--padding"}},
      {"polybius", {"--rows", "--cols", "--grid"}},
      {"railfence", {"--rails"}},
      {"scytale", {"--circumference"}},
      {"vernam", {"--key", "--key-file"}},
  };
  return table;
}

void check_applicable(const CLI::App* cmd, const std::string& cipher) {
  static const std::set<std::string> always = {"--in", "--out", "--encrypt", "--decrypt",
                                               "--help", "cipher"};
  const auto& allowed = cipher_options().at(cipher);
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0) continue;
    const std::string name = opt->get_name();
    if (always.count(name) || allowed.count(name)) continue;
    throw usage_failure("option " + name + " does not apply to " + cipher);
  }
}

template <typename T>
T require(const std::optional<T>& value, const std::string& flag, const std::string& cipher) {
  if (!value) throw usage_failure(cipher + " requires " + flag);
  return *value;
}

classical::AlphabetId alphabet_or(const std::string& name, classical::AlphabetId fallback) {
  if (name.empty()) return fallback;
  return *classical::parse_alphabet_id(name);
}

Letter single_letter(const std::string& text, const std::string& flag) {
  const std::vector<Letter> letters = letters_of(text);
  if (letters.size() != 1 || utf8::decode(text).size() != 1) {
    throw usage_failure(flag + " must be exactly one letter");
  }
  return letters.front();
}

void run_classical(const CLI::App* cmd, const ClassicalArgs& a, std::istream& in,
                   std::ostream& out) {
  if (!cipher_options().count(a.cipher)) throw usage_failure("unknown cipher '" + a.cipher + "'");
  if (a.encrypt && a.decrypt) throw usage_failure("--encrypt and --decrypt are exclusive");
  check_applicable(cmd, a.cipher);
  const bool dec = a.decrypt;
  const std::string input = read_input(a.io.in_path, in);

  std::string result;
  bool letters_only = false;
  if (a.cipher == "shift") {
    const int k = require(a.shift, "--k", a.cipher);
    const auto id = alphabet_or(a.alphabet, classical::AlphabetId::turkish29);
    result = dec ? classical::shift_decrypt(input, k, id) : classical::shift_encrypt(input, k, id);
  } else if (a.cipher == "atbash") {
    result = classical::atbash(input);
  } else if (a.cipher == "vigenere") {
    if (a.keyword.empty()) throw usage_failure("vigenere requires --keyword");
    const auto id = alphabet_or(a.alphabet, classical::AlphabetId::english26);
    result = dec ? classical::vigenere_decrypt(input, a.keyword, id)
                 : classical::vigenere_encrypt(input, a.keyword, id);
  } else if (a.cipher == "playfair") {
    if (a.keyword.empty()) throw usage_failure("playfair requires --keyword");
    classical::PlayfairSpec spec{a.keyword};
    if (!a.padding.empty()) spec.padding = single_letter(a.padding, "--padding");
    result = dec ? classical::playfair_decrypt(input, spec) : classical::playfair_encrypt(input, spec);
    letters_only = true;
  } else if (a.cipher == "polybius") {
    classical::PolybiusSpec spec;
    if (a.rows) spec.rows = *a.rows;
    if (a.cols) spec.cols = *a.cols;
    if (!a.grid.empty()) spec.grid = a.grid;
    result = dec ? classical::polybius_decode(input, spec) : classical::polybius_encode(input, spec);
  } else if (a.cipher == "railfence") {
    const int rails = require(a.rails, "--rails", a.cipher);
    result = dec ? classical::rail_fence_decrypt(input, rails)
                 : classical::rail_fence_encrypt(input, rails);
    letters_only = true;
  } else if (a.cipher == "scytale") {
    const int c = require(a.circumference, "--circumference", a.cipher);
    result = dec ? classical::scytale_decrypt(input, c) : classical::scytale_encrypt(input, c);
    letters_only = true;
  } else if (a.cipher == "vernam") {
    if (a.key.empty() == a.key_file.empty()) {
      throw usage_failure("vernam requires exactly one of --key, --key-file");
    }
    const std::string key = a.key_file.empty() ? a.key : read_file(a.key_file);
    result = dec ? classical::vernam_decrypt(input, key) : classical::vernam_encrypt(input, key);
  }
  Sink sink(a.io.out_path, out);
  sink.write(result);
  // Letter-only ciphers drop the input's line break along with the other
  // passthrough characters; give the output one back.
  if (letters_only) sink.write("\n");
  sink.stream().flush();
}

// --- analyze / crack / flatness ---------------------------------------------

struct AnalysisArgs {
  Common io;
  std::string format = "text";
  std::string reference;
  std::string key;
  std::string index_mode = "all-chars";
  std::optional<std::size_t> min_letters;
};

void run_analyze(const AnalysisArgs& a, std::istream& in, std::ostream& out) {
  const auto table = analysis::letter_frequencies(read_input(a.io.in_path, in));
  Sink sink(a.io.out_path, out);
  sink.write(a.format == "records" ? analysis::render_records(table) : analysis::render_text(table));
}

void run_crack(const AnalysisArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto reference = load_reference(a.reference);
  const std::string ciphertext = read_input(a.io.in_path, in);
  const auto result = analysis::crack_shift(ciphertext, reference,
                                            a.min_letters.value_or(analysis::default_crack_floor));
  if (result.low_confidence) {
    err << "warning: TooShort: fewer than "
        << a.min_letters.value_or(analysis::default_crack_floor)
        << " letters, result is low-confidence\n";
  }
  Sink sink(a.io.out_path, out);
  if (a.format == "records") {
    sink.write("shift,distance\n");
    for (std::size_t k = 0; k < alphabet_size; ++k) {
      std::ostringstream row;
      row << k << ',' << std::setprecision(9) << result.distances[k] << '\n';
      sink.write(row.str());
    }
  } else {
    sink.write("shift: " + std::to_string(result.shift) + "\n");
  }
}

void run_flatness(const AnalysisArgs& a, std::istream& in, std::ostream& out) {
  const auto keys = load_keys(a.key.empty() ? "paper" : a.key);
  const auto reference = load_reference(a.reference);
  const std::string plaintext = read_input(a.io.in_path, in);
  const auto report = analysis::flatness_report(
      plaintext, keys, reference, parse_index_mode(a.index_mode),
      a.min_letters.value_or(analysis::default_flatness_floor));

  std::ostringstream text;
  text << std::fixed << std::setprecision(6);
  if (a.format == "records") {
    text << "letter,plain_count,plain_freq,shift_count,shift_freq,cascade_count,cascade_freq\n";
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      const Letter l = Letter::at(i);
      std::string letter;
      utf8::append(letter, l.upper());
      text << letter;
      for (const auto* t : {&report.plain, &report.shifted, &report.cascade}) {
        text << ',' << t->count(l) << ',' << analysis::format_ratio(t->count(l), t->total_letters(), 6);
      }
      text << '\n';
    }
    text << "metric,shift,cascade\n";
    text << "rank_match_accuracy," << report.shift_accuracy << ',' << report.cascade_accuracy << '\n';
    text << "chi_squared," << report.shift_distance << ',' << report.cascade_distance << '\n';
  } else {
    text << "letters: " << report.plain.total_letters() << '\n';
    text << "index-mode: " << a.index_mode << '\n';
    text << "letter  plain     shift-3   cascade\n";
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      const Letter l = Letter::at(i);
      std::string letter;
      utf8::append(letter, l.upper());
      text << letter << "       ";
      for (const auto* t : {&report.plain, &report.shifted, &report.cascade}) {
        text << analysis::format_ratio(t->count(l), t->total_letters(), 6) << "  ";
      }
      text << '\n';
    }
    text << "rank-match accuracy  shift-3: " << report.shift_accuracy
         << "  cascade: " << report.cascade_accuracy << '\n';
    text << "chi-squared to reference  shift-3: " << report.shift_distance
         << "  cascade: " << report.cascade_distance << '\n';
  }
  Sink sink(a.io.out_path, out);
  sink.write(text.str());
}

void add_analysis_options(CLI::App* cmd, AnalysisArgs& a) {
  add_io(cmd, a.io);
  cmd->add_option("--format", a.format, "Output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Classical cipher toolkit: dual-group cascade cipher, classical ciphers, "
               "frequency analysis",
               "turkcrypt"};
  app.require_subcommand(1);

  CascadeArgs enc_args, dec_args;
  add_cascade_command(app, "encrypt", "Encrypt with the dual-group cascade cipher", enc_args);
  add_cascade_command(app, "decrypt", "Decrypt with the dual-group cascade cipher", dec_args);

  KeygenArgs keygen_args;
  CLI::App* keygen = app.add_subcommand("keygen", "Generate a cascade key file (or a one-time pad)");
  keygen->add_option("--seed", keygen_args.seed, "64-bit seed (default: random, echoed to stderr)");
  keygen->add_option("--otp-length", keygen_args.otp_length,
                     "Emit a one-time-pad key of this many letters instead");
  keygen->add_option("--out", keygen_args.out_path, "Output file (default: standard output)");

  std::string keycheck_key;
  CLI::App* keycheck = app.add_subcommand("keycheck", "Validate a key file");
  keycheck->add_option("--key", keycheck_key, "Key file, or 'paper' for the built-in example keys")->required();

  ClassicalArgs cl;
  CLI::App* classical_cmd = app.add_subcommand("classical", "Run a classical cipher");
  classical_cmd->add_option("cipher", cl.cipher,
                            "shift, atbash, vigenere, playfair, polybius, railfence, scytale, vernam")
      ->required();
  add_io(classical_cmd, cl.io);
  classical_cmd->add_flag("--encrypt", cl.encrypt, "Encrypt (default)");
  classical_cmd->add_flag("--decrypt", cl.decrypt, "Decrypt");
  classical_cmd->add_option("--k", cl.shift, "Shift amount (shift)");
  classical_cmd->add_option("--alphabet", cl.alphabet,
                            "turkish29, turkish28 or english26 (shift, vigenere)")
      ->check(CLI::IsMember({"turkish29", "turkish28", "english26"}));
  classical_cmd->add_option("--keyword", cl.keyword, "Keyword (vigenere, playfair)");
  classical_cmd->add_option("--padding", cl.padding, "Padding letter (playfair, default M)");
  classical_cmd->add_option("--rows", cl.rows, "Grid rows (polybius, default 5)");
  classical_cmd->add_option("--cols", cl.cols, "Grid columns (polybius, default 6)");
  classical_cmd->add_option("--grid", cl.grid, "Grid letters, row-major (polybius)");
  classical_cmd->add_option("--rails", cl.rails, "Rail count (railfence)");
  classical_cmd->add_option("--circumference", cl.circumference, "Rod circumference (scytale)");
  classical_cmd->add_option("--key", cl.key, "Key letters (vernam)");
  classical_cmd->add_option("--key-file", cl.key_file, "File holding key letters (vernam)");

  AnalysisArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Letter frequency table");
  add_analysis_options(analyze, analyze_args);

  AnalysisArgs crack_args;
  CLI::App* crack = app.add_subcommand("crack", "Recover a shift amount by chi-squared search");
  add_analysis_options(crack, crack_args);
  crack->add_option("--reference", crack_args.reference, "Reference corpus file")->required();
  crack->add_option("--min-letters", crack_args.min_letters,
                    "Reliability floor (default 100)");

  AnalysisArgs flat_args;
  CLI::App* flatness = app.add_subcommand(
      "flatness", "Compare the rank-match attack on shift and cascade ciphertexts");
  add_analysis_options(flatness, flat_args);
  flatness->add_option("--reference", flat_args.reference, "Reference corpus file")->required();
  flatness->add_option("--key", flat_args.key, "Cascade key file, or 'paper' for the built-in example keys (default)");
  flatness->add_option("--index-mode", flat_args.index_mode, "all-chars or letters-only")
      ->check(CLI::IsMember({"all-chars", "letters-only"}));
  flatness->add_option("--min-letters", flat_args.min_letters, "Minimum plaintext letters (default 1000)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::usage_error;
  }

  try {
    if (app.got_subcommand("encrypt")) {
      run_cascade(enc_args, Direction::encrypt, in, out, err);
    } else if (app.got_subcommand("decrypt")) {
      run_cascade(dec_args, Direction::decrypt, in, out, err);
    } else if (app.got_subcommand("keygen")) {
      run_keygen(keygen_args, out, err);
    } else if (app.got_subcommand("keycheck")) {
      run_keycheck(keycheck_key, out);
    } else if (app.got_subcommand("classical")) {
      run_classical(classical_cmd, cl, in, out);
    } else if (app.got_subcommand("analyze")) {
      run_analyze(analyze_args, in, out);
    } else if (app.got_subcommand("crack")) {
      run_crack(crack_args, in, out, err);
    } else if (app.got_subcommand("flatness")) {
      run_flatness(flat_args, in, out);
    }
  } catch (const usage_failure& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage_error;
  } catch (const data_failure& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::data_error;
  } catch (const cipher_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::data_error;
  }
  return exit_code::ok;
}

}  // namespace turkcrypt::cli
