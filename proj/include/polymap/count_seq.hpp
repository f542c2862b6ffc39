// Finite-support counting sequences over k >= 3: the p-, v-, q- and w-vectors.
// Canonical form: no zero counts stored, no keys below 3.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "polymap/error.hpp"

namespace polymap {

class CountSeq {
public:
  using Map = std::map<int, long long>;

  CountSeq() = default;

  // Bracket notation: [c1 x k1, c2 x k2, ...] given as (count, k) parts.
  static CountSeq bracket(std::initializer_list<std::pair<long long, int>> parts) {
    CountSeq s;
    for (const auto& [count, k] : parts) s.add_count(k, count);
    return s;
  }
  static CountSeq single(int k) { return bracket({{1, k}}); }

  void add_count(int k, long long count) {
    if (k < 3) throw BadIndexError("sequence index " + std::to_string(k) + " below 3");
    if (count < 0 && entries_[k] + count < 0)
      throw BadIndexError("negative count at k=" + std::to_string(k));
    entries_[k] += count;
    if (entries_[k] == 0) entries_.erase(k);
  }

  long long at(int k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
  }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t support_size() const { return entries_.size(); }

  long long total() const {  // sum of counts
    long long t = 0;
    for (auto& [k, c] : entries_) t += c;
    return t;
  }
  long long weighted_total() const {  // sum of k * count
    long long t = 0;
    for (auto& [k, c] : entries_) t += static_cast<long long>(k) * c;
    return t;
  }

  friend CountSeq operator+(CountSeq a, const CountSeq& b) {
    for (auto& [k, c] : b.entries_) a.add_count(k, c);
    return a;
  }
  friend CountSeq operator-(const CountSeq& a, const CountSeq& b) {
    CountSeq r = a;
    for (auto& [k, c] : b.entries_) r.add_count(k, -c);
    return r;
  }
  friend CountSeq operator*(long long c, const CountSeq& a) {
    CountSeq r;
    if (c == 0) return r;
    for (auto& [k, n] : a.entries_) r.add_count(k, c * n);
    return r;
  }

  bool operator==(const CountSeq& o) const { return entries_ == o.entries_; }
  bool operator!=(const CountSeq& o) const { return !(*this == o); }

  // Exact rational factor c with a = c * b over the full support, if one exists.
  struct Ratio {
    long long num = 0, den = 1;
    bool is_integer() const { return den == 1; }
  };
  static std::optional<Ratio> proportional(const CountSeq& a, const CountSeq& b) {
    if (b.empty()) {
      if (a.empty()) return Ratio{0, 1};
      return std::nullopt;
    }
    if (a.empty()) return Ratio{0, 1};
    if (a.entries_.size() != b.entries_.size()) return std::nullopt;
    std::optional<Ratio> ratio;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    for (; ia != a.entries_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return std::nullopt;
      long long num = ia->second, den = ib->second;
      long long g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
      if (g != 0) {
        num /= g;
        den /= g;
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      if (!ratio) {
        ratio = Ratio{num, den};
      } else if (ratio->num != num || ratio->den != den) {
        return std::nullopt;
      }
    }
    return ratio;
  }

  // "k:count,k:count" with ascending k; empty sequence prints as "".
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : entries_) {
      if (!first) out << ',';
      out << k << ':' << c;
      first = false;
    }
    return out.str();
  }

  static CountSeq parse(const std::string& text) {
    CountSeq s;
    if (text.empty()) return s;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw BadIndexError("expected k:count, got '" + item + "'");
      int k = std::stoi(item.substr(0, colon));
      long long c = std::stoll(item.substr(colon + 1));
      s.add_count(k, c);
    }
    return s;
  }

private:
  Map entries_;
};

}  // namespace polymap
