#include "meansense/rle_text.hpp"

#include <charconv>

#include "meansense/error.hpp"

namespace meansense {

std::string to_rle_text(const Word& w) {
  std::string out = "alphabet=" + std::to_string(w.alphabet_size()) + ";";
  for (const Run& r : w.runs()) {
    out += ' ';
    out += std::to_string(r.symbol);
    out += ':';
    out += std::to_string(r.length);
  }
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view& s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) {
    throw ParseError("expected " + std::string(what) + " in RLE text");
  }
  // Leading zeros would not survive re-emission.
  if (ptr - s.data() > 1 && s.front() == '0') {
    throw ParseError("leading zero in " + std::string(what));
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

Word parse_rle_text(std::string_view line) {
  constexpr std::string_view kHead = "alphabet=";
  if (!line.starts_with(kHead)) throw ParseError("RLE text must start with 'alphabet='");
  line.remove_prefix(kHead.size());
  auto alphabet = parse_number<unsigned>(line, "alphabet size");
  if (line.empty() || line.front() != ';') throw ParseError("missing ';' after alphabet size");
  line.remove_prefix(1);
  Word w(alphabet);
  while (!line.empty()) {
    if (line.front() != ' ') throw ParseError("runs must be separated by single spaces");
    line.remove_prefix(1);
    auto symbol = parse_number<unsigned>(line, "symbol");
    if (line.empty() || line.front() != ':') throw ParseError("missing ':' in run");
    line.remove_prefix(1);
    auto count = parse_number<Length>(line, "run length");
    if (count == 0) throw ParseError("zero-length run");
    if (symbol >= alphabet) throw ParseError("symbol outside alphabet");
    if (!w.empty() && w.back() == symbol) throw ParseError("adjacent runs share a symbol");
    w.append(static_cast<Symbol>(symbol), count);
  }
  return w;
}

std::vector<Word> parse_rle_lines(std::string_view text) {
  std::vector<Word> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_rle_text(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace meansense
