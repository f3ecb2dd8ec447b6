#ifndef ARTINSYS_DIHEDRAL_WORDS_HPP
#define ARTINSYS_DIHEDRAL_WORDS_HPP

// Word arithmetic in the two-generator Artin group
//   DA_n = < a, b | aba... = bab... (n letters each side) >
// and its positive monoid.
//
// Elements are kept in Garside form  Delta^k * t  where Delta = aba... (n
// letters) and t is a positive word that is not left-divisible by Delta.
// The tail is stored as its left-greedy word: a concatenation of maximal
// alternating runs, each of length < n, consecutive runs meeting in a
// repeated letter. That word is unique for the element, so (k, t) is a
// canonical key.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artinsys/errors.hpp"

namespace artinsys {

/// The label n of DA_n.
class DihedralIndex {
 public:
  explicit DihedralIndex(int n) : n_(n) {
    if (n < 2) {
      throw std::invalid_argument("dihedral index must be >= 2, got " + std::to_string(n));
    }
  }
  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }  // NOLINT: used as a plain count everywhere
  auto operator<=>(const DihedralIndex&) const = default;

 private:
  int n_;
};

enum class Generator : std::uint8_t { A, B };

inline Generator other(Generator g) { return g == Generator::A ? Generator::B : Generator::A; }

struct Letter {
  Generator generator = Generator::A;
  bool inverse = false;

  auto operator<=>(const Letter&) const = default;

  Letter inverted() const { return Letter{generator, !inverse}; }

  /// 'a', 'b' for positive letters, 'A', 'B' for inverses.
  char to_char() const {
    char c = generator == Generator::A ? 'a' : 'b';
    return inverse ? static_cast<char>(c - 'a' + 'A') : c;
  }

  static Letter from_char(char c) {
    switch (c) {
      case 'a': return {Generator::A, false};
      case 'b': return {Generator::B, false};
      case 'A': return {Generator::A, true};
      case 'B': return {Generator::B, true};
      default:
        throw std::invalid_argument(std::string("invalid letter '") + c +
                                    "', expected one of a, b, A, B");
    }
  }
};

/// A signed word over {a, b}; not necessarily reduced.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses the ASCII form where uppercase denotes an inverse ("abA").
  static GroupWord parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(Letter::from_char(c));
    return GroupWord(std::move(letters));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::string to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) out.push_back(l.to_char());
    return out;
  }

  GroupWord inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = l.inverted();
    return GroupWord(std::move(out));
  }

  GroupWord operator+(const GroupWord& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(std::move(out));
  }

  auto operator<=>(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Delta^delta_power * tail, tail a positive word over {a, b} in left-greedy
/// form and not left-divisible by Delta.
struct CanonicalForm {
  std::int64_t delta_power = 0;
  std::string tail;

  auto operator<=>(const CanonicalForm&) const = default;

  bool is_identity() const noexcept { return delta_power == 0 && tail.empty(); }

  /// Stable text key, e.g. "0:" for the identity or "-1:ab".
  std::string key() const { return std::to_string(delta_power) + ":" + tail; }
};

/// Alternating word of length `len` starting with `first`.
inline std::string alternating_word(Generator first, int len) {
  std::string out;
  out.reserve(static_cast<std::size_t>(std::max(len, 0)));
  Generator g = first;
  for (int k = 0; k < len; ++k) {
    out.push_back(g == Generator::A ? 'a' : 'b');
    g = other(g);
  }
  return out;
}

/// The two relator halves aba... and bab... of length n.
inline std::pair<std::string, std::string> relator_halves(DihedralIndex n) {
  return {alternating_word(Generator::A, n), alternating_word(Generator::B, n)};
}

/// Exact arithmetic in DA_n on canonical forms.
class DihedralGroup {
 public:
  explicit DihedralGroup(DihedralIndex n) : n_(n) {}

  DihedralIndex index() const noexcept { return n_; }
  int n() const noexcept { return n_.value(); }

  CanonicalForm identity() const { return {}; }

  /// Right-multiplies `f` by Delta^power.
  void apply_delta(CanonicalForm& f, std::int64_t power) const {
    f.delta_power += power;
    // t * Delta = Delta * tau(t); tau swaps a and b when n is odd
    if (n() % 2 == 1 && (power % 2 != 0)) swap_letters(f.tail);
  }

  /// Right-multiplies `f` by a single letter.
  void apply(CanonicalForm& f, Letter x) const {
    if (x.inverse) {
      // x^-1 = Delta^-1 * w  with  w x = Delta
      apply_delta(f, -1);
      Generator before = other(x.generator);
      Generator first = ((n() - 1) % 2 == 1) ? before : x.generator;
      for (char c : alternating_word(first, n() - 1)) append_positive(f, c);
    } else {
      append_positive(f, x.generator == Generator::A ? 'a' : 'b');
    }
  }

  CanonicalForm canonicalize(const GroupWord& w) const {
    CanonicalForm f;
    for (const auto& l : w.letters()) apply(f, l);
    return f;
  }

  CanonicalForm canonicalize_positive(std::string_view positive) const {
    CanonicalForm f;
    for (char c : positive) {
      if (c != 'a' && c != 'b') throw std::invalid_argument("positive words use only a and b");
      append_positive(f, c);
    }
    return f;
  }

  /// A word representing the form: Delta^k spelled aba..., then the tail.
  GroupWord to_word(const CanonicalForm& f) const {
    std::vector<Letter> letters;
    GroupWord delta = GroupWord::parse(alternating_word(Generator::A, n()));
    GroupWord delta_inv = delta.inverse();
    const GroupWord& block = f.delta_power >= 0 ? delta : delta_inv;
    for (std::int64_t k = 0; k < (f.delta_power >= 0 ? f.delta_power : -f.delta_power); ++k) {
      letters.insert(letters.end(), block.letters().begin(), block.letters().end());
    }
    for (char c : f.tail) letters.push_back(Letter::from_char(c));
    return GroupWord(std::move(letters));
  }

  CanonicalForm multiply(const CanonicalForm& lhs, const CanonicalForm& rhs) const {
    CanonicalForm out = lhs;
    apply_delta(out, rhs.delta_power);
    for (char c : rhs.tail) append_positive(out, c);
    return out;
  }

  CanonicalForm inverse(const CanonicalForm& f) const { return canonicalize(to_word(f).inverse()); }

  CanonicalForm element(std::string_view word) const { return canonicalize(GroupWord::parse(word)); }

 private:
  static void swap_letters(std::string& s) {
    for (char& c : s) c = (c == 'a') ? 'b' : 'a';
  }

  // Length of the final alternating run of the tail.
  static int last_run_length(const std::string& tail) {
    if (tail.empty()) return 0;
    int len = 1;
    for (std::size_t k = tail.size() - 1; k > 0 && tail[k - 1] != tail[k]; --k) ++len;
    return len;
  }

  void append_positive(CanonicalForm& f, char c) const {
    if (f.tail.empty() || f.tail.back() == c) {
      f.tail.push_back(c);
      // a single letter is already Delta only when n == 1, which is excluded
      return;
    }
    int run = last_run_length(f.tail);
    if (run + 1 < n()) {
      f.tail.push_back(c);
      return;
    }
    // the last factor completes to Delta; move it to the front
    f.tail.resize(f.tail.size() - static_cast<std::size_t>(run));
    apply_delta(f, 1);
  }

  DihedralIndex n_;
};

inline CanonicalForm canonicalize(const GroupWord& w, DihedralIndex n) {
  return DihedralGroup(n).canonicalize(w);
}

inline bool equal(const GroupWord& w1, const GroupWord& w2, DihedralIndex n) {
  DihedralGroup g(n);
  return g.canonicalize(w1) == g.canonicalize(w2);
}

/// All 2^length positive words over {a, b}, in lexicographic order.
inline std::vector<std::string> positive_words(int length) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  if (length > 30) throw BudgetExceeded("positive word enumeration", std::size_t{1} << 30, std::size_t{1} << 30);
  std::vector<std::string> out;
  std::size_t count = std::size_t{1} << length;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string w(static_cast<std::size_t>(length), 'a');
    for (int k = 0; k < length; ++k) {
      if (mask >> (length - 1 - k) & 1U) w[static_cast<std::size_t>(k)] = 'b';
    }
    out.push_back(std::move(w));
  }
  return out;
}

/// Partition of the positive words of the given length by equality in DA_n.
/// Classes are sorted internally and ordered by their least member.
inline std::vector<std::vector<std::string>> positive_equal_classes(int length, DihedralIndex n) {
  DihedralGroup group(n);
  std::map<CanonicalForm, std::vector<std::string>> by_form;
  for (auto& w : positive_words(length)) by_form[group.canonicalize_positive(w)].push_back(std::move(w));
  std::vector<std::vector<std::string>> classes;
  classes.reserve(by_form.size());
  for (auto& [form, words] : by_form) {
    std::sort(words.begin(), words.end());
    classes.push_back(std::move(words));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t positive_word_index(std::string_view w) {
  std::size_t idx = 0;
  for (char c : w) idx = (idx << 1) | (c == 'b' ? 1U : 0U);
  return idx;
}

}  // namespace detail

struct InjectivityReport {
  int max_length = 0;
  std::size_t words_checked = 0;
  /// Pairs of words equal under one relation but not the other.
  std::vector<std::pair<std::string, std::string>> discrepancies;
  /// Non-singleton classes of the positive rewriting closure.
  std::vector<std::vector<std::string>> merged_classes;

  bool ok() const noexcept { return discrepancies.empty(); }
};

/// Compares, for every positive word of length <= max_length, equality in the
/// group (via canonical forms) with equality in the monoid (connectivity under
/// substitution of one relator half for the other). Any discrepancy points at
/// a bug in the canonical form.
inline InjectivityReport monoid_injectivity_probe(int max_length, DihedralIndex n,
                                                  std::size_t word_budget = std::size_t{1} << 22) {
  if (max_length < 0) throw std::invalid_argument("length must be non-negative");
  std::size_t total = 0;
  for (int len = 0; len <= max_length; ++len) {
    if (len >= 63 || total + (std::size_t{1} << len) > word_budget) {
      throw BudgetExceeded("monoid injectivity probe", len >= 63 ? SIZE_MAX : total + (std::size_t{1} << len),
                           word_budget);
    }
    total += std::size_t{1} << len;
  }

  DihedralGroup group(n);
  auto [upper, lower] = relator_halves(n);
  InjectivityReport report;
  report.max_length = max_length;
  std::map<CanonicalForm, std::pair<int, std::string>> seen_forms;

  for (int len = 0; len <= max_length; ++len) {
    auto words = positive_words(len);
    detail::DisjointSets closure(words.size());
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
      const std::string& w = words[idx];
      const std::size_t width = upper.size();
      for (std::size_t pos = 0; pos + width <= w.size(); ++pos) {
        const std::string* replacement = nullptr;
        if (w.compare(pos, width, upper) == 0) replacement = &lower;
        if (w.compare(pos, width, lower) == 0) replacement = &upper;
        if (!replacement) continue;
        std::string moved = w;
        moved.replace(pos, width, *replacement);
        closure.unite(idx, detail::positive_word_index(moved));
      }
    }

    std::vector<CanonicalForm> forms;
    forms.reserve(words.size());
    for (const auto& w : words) forms.push_back(group.canonicalize_positive(w));

    // compare partitions through class representatives
    std::map<CanonicalForm, std::size_t> first_by_form;
    std::map<std::size_t, std::vector<std::string>> classes;
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
      std::size_t root = closure.find(idx);
      classes[root].push_back(words[idx]);
      if (root != idx && forms[root] != forms[idx]) {
        report.discrepancies.emplace_back(words[root], words[idx]);
      }
      auto [it, inserted] = first_by_form.emplace(forms[idx], idx);
      if (!inserted && closure.find(it->second) != root) {
        report.discrepancies.emplace_back(words[it->second], words[idx]);
      }
      auto [seen, fresh] = seen_forms.emplace(forms[idx], std::make_pair(len, words[idx]));
      if (!fresh && seen->second.first != len) {
        report.discrepancies.emplace_back(seen->second.second, words[idx]);
      }
    }
    for (auto& [root, members] : classes) {
      if (members.size() > 1) report.merged_classes.push_back(std::move(members));
    }
    report.words_checked += words.size();
  }
  return report;
}

}  // namespace artinsys

template <>
struct std::hash<artinsys::CanonicalForm> {
  std::size_t operator()(const artinsys::CanonicalForm& f) const noexcept {
    std::size_t h = std::hash<std::string>{}(f.tail);
    return h ^ (std::hash<std::int64_t>{}(f.delta_power) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif  // ARTINSYS_DIHEDRAL_WORDS_HPP
