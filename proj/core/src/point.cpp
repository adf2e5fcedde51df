#include "meansense/point.hpp"

#include <algorithm>

#include "meansense/error.hpp"

namespace meansense {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::transitive_shift: return "transitive-shift";
    case Provenance::periodic: return "periodic";
    case Provenance::explicit_limit: return "explicit-limit";
    case Provenance::patched_system: return "patched-system";
    case Provenance::explicit_word: return "explicit-word";
  }
  return "explicit-word";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "transitive-shift") return Provenance::transitive_shift;
  if (s == "periodic") return Provenance::periodic;
  if (s == "explicit-limit") return Provenance::explicit_limit;
  if (s == "patched-system") return Provenance::patched_system;
  if (s == "explicit-word") return Provenance::explicit_word;
  throw ParseError("unknown provenance tag '" + std::string(s) + "'");
}

PointView PointView::shifted(Length k) const {
  if (k > horizon()) throw HorizonExhausted("cannot shift past the known horizon");
  PointView out;
  out.prefix = subword_at(prefix, k + 1, horizon() - k);
  out.provenance = provenance;
  out.offset = offset + k;
  out.truncation_note = truncation_note;
  return out;
}

PointView make_point(Word prefix, Provenance provenance, Length offset, std::string note) {
  PointView p;
  p.prefix = std::move(prefix);
  p.provenance = provenance;
  p.offset = offset;
  p.truncation_note = std::move(note);
  return p;
}

MetricValue point_metric(const PointView& x, const PointView& y) {
  if (x.prefix.alphabet_size() != y.prefix.alphabet_size()) {
    throw AlphabetMismatch("points over different alphabets");
  }
  MetricValue m;
  m.compared = std::min(x.horizon(), y.horizon());
  Length lcp = common_prefix_length(x.prefix, 0, y.prefix, 0, m.compared);
  if (lcp < m.compared) {
    m.first_difference = lcp + 1;
  } else {
    m.truncated = true;
  }
  return m;
}

}  // namespace meansense
