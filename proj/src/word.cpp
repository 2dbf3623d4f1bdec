#include "wordperc/word.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace wordperc {

namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

struct RunCursor {
  int symbol;
  std::int64_t length;  // kInfinite for the terminal monochromatic run
};

// Walks the normalised run sequence of a word; returns false when exhausted.
class RunStream {
 public:
  explicit RunStream(const Word& w) : w_(w), symbol_(w.first_symbol) {
    const int tail_symbol = w.tail.kind == Tail::Kind::ones ? 1 : 0;
    merge_last_ = w.ultimately_monochromatic() && !w.runs.empty() &&
                  (w.first_symbol ^ static_cast<int>((w.runs.size() - 1) % 2)) == tail_symbol;
  }

  bool next(RunCursor& out) {
    if (explicit_ < w_.runs.size()) {
      const bool last = explicit_ + 1 == w_.runs.size();
      out = {symbol_, last && merge_last_ ? kInfinite : w_.runs[explicit_]};
      ++explicit_;
      symbol_ ^= 1;
      if (last && merge_last_) done_ = true;
      return true;
    }
    if (done_) return false;
    switch (w_.tail.kind) {
      case Tail::Kind::none:
        return false;
      case Tail::Kind::zeros:
      case Tail::Kind::ones:
        done_ = true;
        out = {w_.tail.kind == Tail::Kind::ones ? 1 : 0, kInfinite};
        return true;
      case Tail::Kind::periodic:
        out = {symbol_, w_.tail.period[period_pos_]};
        period_pos_ = (period_pos_ + 1) % w_.tail.period.size();
        symbol_ ^= 1;
        return true;
    }
    return false;
  }

 private:
  const Word& w_;
  int symbol_;
  std::size_t explicit_ = 0;
  std::size_t period_pos_ = 0;
  bool merge_last_ = false;
  bool done_ = false;
};

std::vector<std::int64_t> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    const auto item = s.substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw WordError("bad integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void Word::validate() const {
  if (first_symbol != 0 && first_symbol != 1) throw WordError("first symbol must be 0 or 1");
  for (auto r : runs) {
    if (r < 1) throw WordError("run lengths must be >= 1");
  }
  if (tail.kind == Tail::Kind::periodic) {
    if (tail.period.empty()) throw WordError("periodic tail needs at least one run");
    for (auto r : tail.period) {
      if (r < 1) throw WordError("periodic run lengths must be >= 1");
    }
  }
}

std::int64_t Word::finite_length() const {
  if (tail.kind != Tail::Kind::none) return -1;
  std::int64_t total = 0;
  for (auto r : runs) total += r;
  return total;
}

Word Word::from_bits(std::string_view bits, Tail tail) {
  Word w;
  w.tail = std::move(tail);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw WordError("bits must be 0/1");
    const int b = bits[i] - '0';
    if (i == 0) {
      w.first_symbol = b;
      w.runs.push_back(1);
    } else if (bits[i] == bits[i - 1]) {
      ++w.runs.back();
    } else {
      w.runs.push_back(1);
    }
  }
  return w;
}

std::vector<PrefixRun> prefix_runs(const Word& word, std::int64_t n) {
  word.validate();
  std::vector<PrefixRun> out;
  RunStream stream(word);
  RunCursor run{};
  std::int64_t covered = 0;
  while (covered < n) {
    if (!stream.next(run)) {
      throw WordError("word has only " + std::to_string(covered) + " digits, need " +
                      std::to_string(n));
    }
    const std::int64_t take = std::min(run.length, n - covered);
    out.push_back({run.symbol, take, take < run.length, run.length == kInfinite});
    covered += take;
  }
  return out;
}

std::vector<std::uint8_t> materialize(const Word& word, std::int64_t n) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const auto& r : prefix_runs(word, n)) {
    out.insert(out.end(), static_cast<std::size_t>(r.length), static_cast<std::uint8_t>(r.symbol));
  }
  return out;
}

RunInfo runs(const Word& word, std::int64_t n) {
  RunInfo info;
  info.symbols = materialize(word, n);
  std::int64_t prev = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    if (info.symbols[i - 1] != info.symbols[i]) {
      info.boundaries.push_back(i);
      info.lengths.push_back(i - prev);
      prev = i;
    }
  }
  return info;
}

bool is_m_stretched(const Word& word, std::int64_t m) {
  word.validate();
  RunStream stream(word);
  RunCursor run{};
  std::size_t seen = 0;
  const std::size_t limit = word.runs.size() + word.tail.period.size();
  while (seen < limit && stream.next(run)) {
    if (run.length != kInfinite && run.length < m) return false;
    ++seen;
  }
  return true;
}

Word parse_word(std::string_view line) {
  Word w;
  bool have_first = false, have_runs = false, have_tail = false;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw WordError("bad word token '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "first") {
      if (value != "0" && value != "1") throw WordError("first must be 0 or 1");
      w.first_symbol = value[0] - '0';
      have_first = true;
    } else if (key == "runs") {
      w.runs = parse_int_list(value, "runs");
      have_runs = true;
    } else if (key == "tail") {
      if (value == "none") {
        w.tail.kind = Tail::Kind::none;
      } else if (value == "zeros") {
        w.tail.kind = Tail::Kind::zeros;
      } else if (value == "ones") {
        w.tail.kind = Tail::Kind::ones;
      } else if (value.starts_with("periodic:")) {
        w.tail.kind = Tail::Kind::periodic;
        w.tail.period = parse_int_list(value.substr(9), "periodic tail");
      } else {
        throw WordError("unknown tail '" + std::string(value) + "'");
      }
      have_tail = true;
    } else {
      throw WordError("unknown word key '" + key + "'");
    }
  }
  if (!have_first || !have_runs || !have_tail) {
    throw WordError("word line needs first=, runs= and tail=");
  }
  w.validate();
  return w;
}

std::string format_word(const Word& word) {
  std::string tail;
  switch (word.tail.kind) {
    case Tail::Kind::none: tail = "none"; break;
    case Tail::Kind::zeros: tail = "zeros"; break;
    case Tail::Kind::ones: tail = "ones"; break;
    case Tail::Kind::periodic: tail = "periodic:" + join(word.tail.period); break;
  }
  return "first=" + std::to_string(word.first_symbol) + " runs=" + join(word.runs) +
         " tail=" + tail;
}

Word read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WordError("cannot open word file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    return parse_word(line);
  }
  throw WordError("word file '" + path + "' is empty");
}

}  // namespace wordperc
