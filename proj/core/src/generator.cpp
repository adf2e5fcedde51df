#include "meansense/generator.hpp"

#include <bit>
#include <charconv>

#include "meansense/checked.hpp"
#include "meansense/error.hpp"

namespace meansense {

GeneratorDescriptor GeneratorDescriptor::constant_zero() { return {Kind::constant_zero, {}}; }

GeneratorDescriptor GeneratorDescriptor::thue_morse() { return {Kind::thue_morse, {}}; }

GeneratorDescriptor GeneratorDescriptor::sturmian_golden(unsigned depth) {
  return sturmian(std::vector<unsigned>(depth, 1u));
}

GeneratorDescriptor GeneratorDescriptor::sturmian(std::vector<unsigned> partial_quotients) {
  if (partial_quotients.empty()) throw ParameterError("sturmian slope needs partial quotients");
  for (unsigned a : partial_quotients) {
    if (a == 0) throw ParameterError("partial quotients must be positive");
  }
  GeneratorDescriptor g{Kind::sturmian, std::move(partial_quotients)};
  // A single quotient of 1 gives alpha = 1, which is not inside (0, 1).
  Rational r = sturmian_slope(g);
  if (r.num == 0 || r.num >= r.den) throw ParameterError("sturmian slope must lie in (0, 1)");
  return g;
}

GeneratorDescriptor GeneratorDescriptor::parse(std::string_view text) {
  if (text == "zero" || text == "constant-zero") return constant_zero();
  if (text == "thue-morse") return thue_morse();
  if (text == "sturmian") return sturmian_golden();
  constexpr std::string_view kSturm = "sturmian:";
  if (text.starts_with(kSturm)) {
    text.remove_prefix(kSturm.size());
    std::vector<unsigned> values;
    while (!text.empty()) {
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{}) throw ParseError("bad sturmian parameter");
      values.push_back(v);
      text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
      if (!text.empty()) {
        if (text.front() != ',') throw ParseError("bad sturmian parameter");
        text.remove_prefix(1);
      }
    }
    if (values.size() == 1) return sturmian_golden(values.front());
    return sturmian(std::move(values));
  }
  throw ParseError("unknown base generator '" + std::string(text) + "'");
}

std::string GeneratorDescriptor::description() const {
  switch (kind) {
    case Kind::constant_zero: return "constant-zero";
    case Kind::thue_morse: return "thue-morse";
    case Kind::sturmian: {
      bool golden = true;
      for (unsigned a : partial_quotients) golden = golden && a == 1;
      if (golden) return "sturmian:" + std::to_string(partial_quotients.size());
      std::string s = "sturmian:";
      for (std::size_t i = 0; i < partial_quotients.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(partial_quotients[i]);
      }
      return s;
    }
  }
  return "constant-zero";
}

Rational sturmian_slope(const GeneratorDescriptor& g) {
  // Evaluate [0; a_1, ..., a_d] from the tail: x <- 1 / (a_i + x).
  std::uint64_t num = 0, den = 1;
  for (auto it = g.partial_quotients.rbegin(); it != g.partial_quotients.rend(); ++it) {
    auto scaled = checked_mul(*it, den);
    auto sum = scaled ? checked_add(*scaled, num) : std::nullopt;
    if (!sum) throw ParameterError("sturmian continued fraction too deep for 64-bit convergents");
    num = den;
    den = *sum;
  }
  return {num, den};
}

Word minimal_generator(const GeneratorDescriptor& g, Length horizon) {
  if (horizon == 0) throw ParameterError("generator horizon must be positive");
  Word y(2);
  switch (g.kind) {
    case GeneratorDescriptor::Kind::constant_zero:
      y.append(0, horizon);
      break;
    case GeneratorDescriptor::Kind::thue_morse:
      for (Length j = 0; j < horizon; ++j) y.append(static_cast<Symbol>(std::popcount(j) & 1), 1);
      break;
    case GeneratorDescriptor::Kind::sturmian: {
      Rational a = sturmian_slope(g);
      for (Length j = 1; j <= horizon; ++j) {
        u128 hi = (u128(j) + 1) * a.num / a.den;
        u128 lo = u128(j) * a.num / a.den;
        y.append(static_cast<Symbol>(hi - lo), 1);
      }
      break;
    }
  }
  return y;
}

}  // namespace meansense
