#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "meansense/word.hpp"

namespace meansense {

/// One of the fixed minimal subshifts used as the base system Y.
struct GeneratorDescriptor {
  enum class Kind { constant_zero, sturmian, thue_morse };

  Kind kind = Kind::constant_zero;
  /// Sturmian only: alpha = [0; a_1, a_2, ...], truncated. All ones is the
  /// golden-mean rotation.
  std::vector<unsigned> partial_quotients;

  static GeneratorDescriptor constant_zero();
  static GeneratorDescriptor thue_morse();
  static GeneratorDescriptor sturmian_golden(unsigned depth = 30);
  static GeneratorDescriptor sturmian(std::vector<unsigned> partial_quotients);

  /// Accepts "zero", "constant-zero", "thue-morse", "sturmian",
  /// "sturmian:<depth>" (golden) and "sturmian:a1,a2,...".
  static GeneratorDescriptor parse(std::string_view text);
  std::string description() const;

  friend bool operator==(const GeneratorDescriptor&, const GeneratorDescriptor&) = default;
};

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Convergent p/q of the continued fraction; strictly inside (0, 1).
Rational sturmian_slope(const GeneratorDescriptor& g);

/// First `horizon` symbols y_1 ... y_H of the generator's point.
///  - constant-zero: 0^H
///  - sturmian:      y_j = floor((j+1) a) - floor(j a), a = p/q
///  - thue-morse:    y_j = parity of the binary digit sum of j-1
Word minimal_generator(const GeneratorDescriptor& g, Length horizon);

}  // namespace meansense
