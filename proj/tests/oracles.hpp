#pragma once

// Brute-force reference implementations on plain strings. They share no code
// with the library and favour obviousness over speed.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline char Inv(char c) { return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c)); }

// Repeatedly deletes the leftmost cancelling pair until none is left.
inline std::string Reduce(std::string s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i + 1] == Inv(s[i])) {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

inline std::string Invert(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = Inv(c);
  return out;
}

inline bool IsReduced(const std::string& s) { return Reduce(s) == s; }

inline std::vector<std::string> Letters(int rank) {
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back(std::string(1, static_cast<char>('a' + i)));
    out.push_back(std::string(1, static_cast<char>('A' + i)));
  }
  return out;
}

// All reduced words of length <= n, by filtering every string.
inline std::vector<std::string> ReducedWords(int rank, int n) {
  std::vector<std::string> level = {""};
  std::vector<std::string> out = {""};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (const auto& x : Letters(rank)) {
        if (IsReduced(w + x)) next.push_back(w + x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline long long CountOverlapping(const std::string& p, const std::string& t) {
  long long n = 0;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) n += t.compare(i, p.size(), p) == 0 ? 1 : 0;
  return n;
}

// Maximum set of pairwise disjoint occurrences, by trying every subset.
inline long long CountDisjointExhaustive(const std::string& p, const std::string& t) {
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
    if (t.compare(i, p.size(), p) == 0) occ.push_back(i);
  }
  long long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << occ.size()); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < occ.size(); ++j) {
      if (mask & (1u << j)) chosen.push_back(occ[j]);
    }
    bool ok = true;
    for (std::size_t j = 1; j < chosen.size(); ++j) ok = ok && chosen[j] >= chosen[j - 1] + p.size();
    if (ok) best = std::max<long long>(best, static_cast<long long>(chosen.size()));
  }
  return best;
}

inline long long Phi(const std::string& w, const std::string& g) {
  const std::string r = Reduce(g);
  return CountOverlapping(w, r) - CountOverlapping(Invert(w), r);
}

// Overlap, read off the definition with explicit index ranges.
inline bool PostfixIsPrefix(const std::string& x, const std::string& y) {
  const std::size_t n = x.size(), m = y.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (n - i >= m) continue;
    bool all = true;
    for (std::size_t t = 0; t < n - i; ++t) all = all && x[t + i] == y[t];
    if (all) return true;
  }
  return false;
}

inline bool ProperSubword(const std::string& small, const std::string& big) {
  return small.size() < big.size() && big.find(small) != std::string::npos;
}

inline bool Overlap(const std::string& u, const std::string& v) {
  return PostfixIsPrefix(u, v) || PostfixIsPrefix(v, u) || ProperSubword(u, v) || ProperSubword(v, u);
}

inline bool Independent(const std::vector<std::string>& ws) {
  std::vector<std::string> all;
  for (const auto& w : ws) {
    all.push_back(w);
    all.push_back(Invert(w));
  }
  if (std::set<std::string>(all.begin(), all.end()).size() != all.size()) return false;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (Overlap(x, y)) return false;
    }
  }
  return true;
}

// Nielsen moves as substitutions on generator images.
inline std::string Substitute(const std::string& g, const std::map<char, std::string>& images) {
  std::string out;
  for (char c : g) {
    if (std::islower(static_cast<unsigned char>(c))) {
      auto it = images.find(c);
      out += it == images.end() ? std::string(1, c) : it->second;
    } else {
      auto it = images.find(Inv(c));
      out += it == images.end() ? std::string(1, c) : Invert(it->second);
    }
  }
  return Reduce(out);
}

// Exponent runs of generator x (lowercase), e.g. "abbaB" with 'b' gives the
// pieces between runs and the signed run lengths.
struct Runs {
  std::vector<std::string> pieces;  // size = exps.size() + 1
  std::vector<long long> exps;
};

inline Runs SplitRuns(const std::string& g, char x) {
  Runs r;
  r.pieces.push_back("");
  std::size_t i = 0;
  while (i < g.size()) {
    if (g[i] == x || g[i] == Inv(x)) {
      const char c = g[i];
      long long n = 0;
      while (i < g.size() && g[i] == c) {
        ++n;
        ++i;
      }
      r.exps.push_back(c == x ? n : -n);
      r.pieces.push_back("");
    } else {
      r.pieces.back() += g[i++];
    }
  }
  return r;
}

template <class Sigma>
std::string WobbleRuns(const std::string& g, char x, Sigma sigma) {
  const Runs r = SplitRuns(g, x);
  std::string out = r.pieces[0];
  for (std::size_t j = 0; j < r.exps.size(); ++j) {
    const long long e = r.exps[j];
    const long long v = e > 0 ? sigma(e) : sigma(-e);
    out += std::string(static_cast<std::size_t>(v), e > 0 ? x : Inv(x));
    out += r.pieces[j + 1];
  }
  return Reduce(out);
}

// Largest number of W-parts over all ways to cut g into pieces where the
// W-parts are members of W u W^-1, by dynamic programming over prefixes.
inline long long MaxFamilyParts(const std::vector<std::string>& family, const std::string& g) {
  std::vector<std::string> members;
  for (const auto& w : family) {
    members.push_back(w);
    members.push_back(Invert(w));
  }
  std::vector<long long> best(g.size() + 1, 0);
  for (std::size_t i = 1; i <= g.size(); ++i) {
    best[i] = best[i - 1];
    for (const auto& m : members) {
      if (m.size() <= i && g.compare(i - m.size(), m.size(), m) == 0) best[i] = std::max(best[i], best[i - m.size()] + 1);
    }
  }
  return best[g.size()];
}

}  // namespace oracle
