#pragma once

// Binary words, run-length encoded with an explicit infinite tail.
//
// Digits are indexed from 1 as xi_1, xi_2, ...; runs alternate symbols starting
// from `first_symbol`. A periodic tail keeps alternating; a constant tail that
// matches the last explicit run's symbol extends that run forever.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordperc {

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Tail {
  enum class Kind { none, zeros, ones, periodic };
  Kind kind = Kind::none;
  std::vector<std::int64_t> period;  // run lengths, periodic only

  friend bool operator==(const Tail&, const Tail&) = default;
};

struct Word {
  std::vector<std::int64_t> runs;
  int first_symbol = 0;
  Tail tail;

  // Throws WordError on non-positive runs or an empty periodic tail.
  void validate() const;

  bool ultimately_monochromatic() const {
    return tail.kind == Tail::Kind::zeros || tail.kind == Tail::Kind::ones;
  }
  // Digits available before the word runs out; -1 if infinite.
  std::int64_t finite_length() const;

  static Word from_bits(std::string_view bits, Tail tail = {});
  static Word constant(int symbol) {
    return Word{{}, symbol, Tail{symbol ? Tail::Kind::ones : Tail::Kind::zeros, {}}};
  }

  friend bool operator==(const Word&, const Word&) = default;
};

// First n digits. Throws WordError if a finite word is shorter than n.
std::vector<std::uint8_t> materialize(const Word& word, std::int64_t n);

struct RunInfo {
  std::vector<std::uint8_t> symbols;     // xi_1..xi_n
  std::vector<std::int64_t> boundaries;  // {i in [1,n) : xi_i != xi_{i+1}}, ascending
  std::vector<std::int64_t> lengths;     // r_j = i_{j+1} - i_j with i_0 = 0
};

RunInfo runs(const Word& word, std::int64_t n);

// One maximal block of equal digits inside a prefix.
struct PrefixRun {
  int symbol;
  std::int64_t length;
  bool truncated;  // the run continues past the prefix
  bool infinite;   // the run never ends (ultimately monochromatic tail)
};

std::vector<PrefixRun> prefix_runs(const Word& word, std::int64_t n);

// True iff every finite run, the first included, has length >= m.
bool is_m_stretched(const Word& word, std::int64_t m);

// `first=<0|1> runs=<ints> tail=<none|zeros|ones|periodic:ints>`
Word parse_word(std::string_view line);
std::string format_word(const Word& word);
Word read_word_file(const std::string& path);

}  // namespace wordperc
