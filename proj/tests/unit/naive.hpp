#pragma once

// Expanded-string reference implementations used as oracles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace naive {

inline std::string random_word(std::mt19937_64& rng, std::size_t len, int alphabet = 2,
                               double run_bias = 0.5) {
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  std::bernoulli_distribution keep(run_bias);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    if (!s.empty() && keep(rng)) {
      s.push_back(s.back());
    } else {
      s.push_back(static_cast<char>('0' + sym(rng)));
    }
  }
  return s;
}

inline std::uint64_t count(const std::string& s, char c, std::size_t i, std::size_t j) {
  // 1-based inclusive
  std::uint64_t n = 0;
  for (std::size_t p = i; p <= j; ++p) n += s[p - 1] == c;
  return n;
}

struct Window {
  std::uint64_t max = 0;
  std::uint64_t first = 1;
};

inline Window max_window(const std::string& s, char c, std::size_t L) {
  Window w;
  bool any = false;
  for (std::size_t i = 1; i + L - 1 <= s.size(); ++i) {
    const auto v = count(s, c, i, i + L - 1);
    if (!any || v > w.max) {
      w.max = v;
      w.first = i;
      any = true;
    }
  }
  return w;
}

inline std::vector<std::size_t> occurrences(const std::string& text, const std::string& pat) {
  std::vector<std::size_t> out;
  if (pat.empty() || pat.size() > text.size()) return out;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
    if (text.compare(i, pat.size(), pat) == 0) out.push_back(i + 1);
  }
  return out;
}

/// First position p >= 1 with a[p] != b[p] within `limit`, 0 if none.
inline std::uint64_t first_difference(const std::string& a, std::size_t ao, const std::string& b,
                                      std::size_t bo, std::size_t limit) {
  for (std::size_t k = 0; k < limit; ++k) {
    if (ao + k >= a.size() || bo + k >= b.size()) return 0;
    if (a[ao + k] != b[bo + k]) return k + 1;
  }
  return 0;
}

inline double dist(const std::string& a, const std::string& b) {
  const auto g = first_difference(a, 0, b, 0, std::min(a.size(), b.size()));
  return g == 0 ? 0.0 : 1.0 / static_cast<double>(g);
}

/// Hausdorff distance between finite sets of equal-horizon words.
inline double hausdorff(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  double h = 0;
  for (const auto& x : a) {
    double m = 1e9;
    for (const auto& y : b) m = std::min(m, dist(x, y));
    h = std::max(h, m);
  }
  for (const auto& y : b) {
    double m = 1e9;
    for (const auto& x : a) m = std::min(m, dist(x, y));
    h = std::max(h, m);
  }
  return h;
}

inline std::set<std::string> subwords(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

}  // namespace naive
