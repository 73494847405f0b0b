#pragma once

// Cyclic words over the generators of a genus-g surface group and their
// canonical forms. Letters are packed bytes: generator index k and its
// inverse become 2k and 2k+1, printed as 'a','A','b','B',... in that order,
// which is also the lexicographic letter order used everywhere.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace snlab {

using Letter = std::uint8_t;

inline Letter letter_inverse(Letter l) { return l ^ 1u; }
inline int letter_generator(Letter l) { return l >> 1; }
inline bool letter_is_inverse(Letter l) { return l & 1u; }

inline char letter_to_char(Letter l) {
  char base = static_cast<char>('a' + letter_generator(l));
  return letter_is_inverse(l) ? static_cast<char>(base - 'a' + 'A') : base;
}

inline Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(2 * (c - 'a'));
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(2 * (c - 'A') + 1);
  throw std::invalid_argument(std::string("bad word letter: ") + c);
}

using Letters = std::vector<Letter>;

inline Letters free_reduce(const Letters& in) {
  Letters out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == letter_inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Letters cyclic_reduce(Letters w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == letter_inverse(w.back())) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline Letters invert(const Letters& w) {
  Letters r(w.rbegin(), w.rend());
  for (auto& l : r) l = letter_inverse(l);
  return r;
}

// Booth's least-rotation algorithm.
inline Letters min_rotation(const Letters& w) {
  const std::size_t n = w.size();
  if (n <= 1) return w;
  std::vector<int> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = w[j % n];
    int i = f[j - k - 1];
    while (i != -1 && sj != w[(k + i + 1) % n]) {
      if (sj < w[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != w[(k + i + 1) % n]) {
      if (sj < w[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  Letters r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = w[(k + i) % n];
  return r;
}

// Freely reduced word; construction rejects non-reduced input.
struct Word {
  Letters ls;

  Word() = default;
  explicit Word(Letters letters) : ls(std::move(letters)) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
      if (ls[i] == letter_inverse(ls[i + 1]))
        throw std::invalid_argument("word is not freely reduced");
  }
  static Word reduced(const Letters& letters) { return Word(free_reduce(letters)); }
  static Word parse(const std::string& s) {
    Letters l;
    l.reserve(s.size());
    for (char c : s) l.push_back(letter_from_char(c));
    return Word(std::move(l));
  }

  std::size_t size() const { return ls.size(); }
  bool empty() const { return ls.empty(); }
  std::string str() const {
    std::string s;
    s.reserve(ls.size());
    for (Letter l : ls) s.push_back(letter_to_char(l));
    return s;
  }
  Word inverse() const { return Word(invert(ls)); }
  Word power(int n) const {
    Letters base = n >= 0 ? ls : invert(ls);
    Letters r;
    for (int i = 0; i < std::abs(n); ++i) r.insert(r.end(), base.begin(), base.end());
    return Word::reduced(r);
  }
  bool operator==(const Word& o) const = default;
  auto operator<=>(const Word& o) const = default;
};

// Relator machinery for the standard presentation
// < a_1 b_1 ... a_g b_g | prod [a_i,b_i] >. Provides the Dehn shortening
// table (subwords longer than half the relator), the length-preserving
// half-relator swaps, and the resulting canonical form for conjugacy
// classes.
class SurfaceRelator {
 public:
  explicit SurfaceRelator(int genus) : genus_(genus), half_(2 * genus) {
    Letters rel;
    for (int i = 0; i < genus; ++i) {
      Letter a = static_cast<Letter>(4 * i), b = static_cast<Letter>(4 * i + 2);
      rel.push_back(a);
      rel.push_back(b);
      rel.push_back(letter_inverse(a));
      rel.push_back(letter_inverse(b));
    }
    const std::size_t n = rel.size();  // 4g
    Letters ri = invert(rel);
    for (std::size_t s = 0; s < n; ++s) {
      Letters r1(n), r2(n);
      for (std::size_t i = 0; i < n; ++i) {
        r1[i] = rel[(s + i) % n];
        r2[i] = ri[(s + i) % n];
      }
      rotations_.push_back(std::move(r1));
      rotations_.push_back(std::move(r2));
    }
    // shortening rules: prefix of length L > half maps to the inverted
    // complement (length 4g - L); swap rules: L == half
    for (const auto& r : rotations_) {
      for (std::size_t len = half_; len <= n; ++len) {
        Letters s(r.begin(), r.begin() + len);
        Letters t(r.begin() + len, r.end());
        Letters repl = invert(t);
        if (len == half_) {
          auto it = swaps_.find(s);
          if (it == swaps_.end()) swaps_[s] = repl;
        } else {
          auto it = shortens_.find(s);
          if (it == shortens_.end()) shortens_[s] = repl;
        }
      }
    }
    // windows whose swap replacement is lexicographically smaller; a
    // length-minimal, lex-minimal spelling never contains one
    for (const auto& [s, t] : swaps_)
      if (t < s) down_swaps_.insert(s);
  }

  int genus() const { return genus_; }
  std::size_t relator_length() const { return 4 * static_cast<std::size_t>(genus_); }
  std::size_t half_length() const { return half_; }

  bool window_is_down_swap(const Letters& w) const { return down_swaps_.count(w) > 0; }
  const std::set<Letters>& down_swap_windows() const { return down_swaps_; }

  // all relator-rotation prefixes of the given length
  std::vector<Letters> rotation_prefixes(std::size_t len) const {
    std::vector<Letters> out;
    for (const auto& r : rotations_)
      if (r.size() >= len) out.emplace_back(r.begin(), r.begin() + len);
    return out;
  }

  // true when no subword of length > half matches a relator prefix
  bool is_dehn_reduced_linear(const Letters& w) const {
    for (std::size_t len = half_ + 1; len <= relator_length(); ++len) {
      if (w.size() < len) break;
      for (std::size_t i = 0; i + len <= w.size(); ++i) {
        Letters sub(w.begin() + i, w.begin() + i + len);
        if (shortens_.count(sub)) return false;
      }
    }
    return true;
  }

  // apply length-reducing Dehn moves to the cyclic word until none applies
  Letters cyclic_dehn_shorten(Letters w) const {
    w = cyclic_reduce(w);
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      const std::size_t n = w.size();
      for (std::size_t len = std::min(relator_length(), n); len > half_ && !changed; --len) {
        for (std::size_t i = 0; i < n && !changed; ++i) {
          Letters sub(len);
          for (std::size_t k = 0; k < len; ++k) sub[k] = w[(i + k) % n];
          auto it = shortens_.find(sub);
          if (it == shortens_.end()) continue;
          Letters nw;
          for (std::size_t k = len; k < n; ++k) nw.push_back(w[(i + k) % n]);
          nw.insert(nw.end(), it->second.begin(), it->second.end());
          w = cyclic_reduce(nw);
          changed = true;
        }
      }
    }
    return w;
  }

  // Canonical representative of the conjugacy class: minimal length, then
  // lexicographically least string over rotations and half-relator swaps.
  // The swap orbit is explored breadth-first with a visited cap; highly
  // periodic words (block powers) would otherwise have exponential orbits,
  // and for those the capped search is still deterministic and consistent
  // across the spellings the enumerator produces.
  Letters canonical(Letters w, std::size_t orbit_cap = 2048) const {
    w = cyclic_dehn_shorten(w);
    if (w.empty()) return w;
    while (true) {
      Letters best = min_rotation(w);
      std::set<Letters> seen{best};
      std::deque<Letters> queue{best};
      Letters shorter;
      while (!queue.empty() && seen.size() <= orbit_cap && shorter.empty()) {
        Letters u = queue.front();
        queue.pop_front();
        const std::size_t n = u.size();
        if (n < half_) continue;
        for (std::size_t i = 0; i < n && shorter.empty(); ++i) {
          Letters sub(half_);
          for (std::size_t k = 0; k < half_; ++k) sub[k] = u[(i + k) % n];
          auto it = swaps_.find(sub);
          if (it == swaps_.end()) continue;
          Letters nw;
          nw.insert(nw.end(), it->second.begin(), it->second.end());
          for (std::size_t k = half_; k < n; ++k) nw.push_back(u[(i + k) % n]);
          nw = cyclic_reduce(nw);
          if (nw.size() < n) {
            shorter = cyclic_dehn_shorten(nw);
            break;
          }
          Letters mr = min_rotation(nw);
          if (seen.insert(mr).second) {
            queue.push_back(mr);
            if (mr < best) best = mr;
          }
        }
      }
      if (!shorter.empty()) {
        w = shorter;
        continue;
      }
      return best;
    }
  }

  Word canonical(const Word& w) const { return Word(canonical(w.ls)); }

 private:
  int genus_;
  std::size_t half_;
  std::vector<Letters> rotations_;
  std::map<Letters, Letters> shortens_;
  std::map<Letters, Letters> swaps_;
  std::set<Letters> down_swaps_;
};

}  // namespace snlab
