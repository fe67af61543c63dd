#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qmfree/rational.hpp"
#include "qmfree/word.hpp"

namespace qmfree {

/// Overlapping (#) or non-overlapping (#*) subword counts.
enum class CountKind { kOverlapping, kNonOverlapping };

struct QmTerm {
  CountKind kind;
  Word pattern;

  bool operator==(const QmTerm&) const = default;
};

/// Kind first (overlapping before non-overlapping), then shortlex pattern.
struct QmTermLess {
  bool operator()(const QmTerm& x, const QmTerm& y) const;
};

/// Number of start positions at which `pattern` occurs in `text`.
std::size_t CountOverlapping(const Word& pattern, const Word& text);

/// Maximum number of pairwise disjoint occurrences (leftmost greedy).
std::size_t CountNonOverlapping(const Word& pattern, const Word& text);

std::size_t Count(CountKind kind, const Word& pattern, const Word& text);

/// Occurrences of `pattern` in the bi-infinite periodic word ...ccc...,
/// counted per period. `core` must be cyclically reduced and non-empty.
std::size_t CyclicCount(const Word& pattern, const Word& core);

/// A formal rational combination of counting quasimorphisms phi_w (C[w]) and
/// phi*_w (N[w]).
///
/// Terms are stored under a canonical representative: since
/// phi_{w^{-1}} = -phi_w (and likewise for phi*), a term on w^{-1} is folded
/// into the shortlex-smaller of {w, w^{-1}} with its coefficient negated.
/// Zero coefficients are dropped, so equal expressions serialize equally.
class QmExpr {
 public:
  using TermMap = std::map<QmTerm, Rational, QmTermLess>;

  explicit QmExpr(int rank);

  static QmExpr Parse(int rank, std::string_view text);
  static QmExpr Term(CountKind kind, const Word& pattern, const Rational& coeff = 1);

  void Add(CountKind kind, const Word& pattern, const Rational& coeff);

  QmExpr& operator+=(const QmExpr& other);
  QmExpr& operator-=(const QmExpr& other);
  QmExpr& operator*=(const Rational& factor);
  friend QmExpr operator+(QmExpr a, const QmExpr& b) { return a += b; }
  friend QmExpr operator-(QmExpr a, const QmExpr& b) { return a -= b; }
  friend QmExpr operator*(const Rational& f, QmExpr a) { return a *= f; }

  int rank() const { return rank_; }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t max_pattern_length() const;
  bool HasKind(CountKind kind) const;

  /// Grammar: terms joined by + / -, each `[coef *] C[word]` or
  /// `[coef *] N[word]`; the zero expression prints as "0".
  std::string ToString() const;

  bool operator==(const QmExpr&) const = default;

 private:
  int rank_;
  TermMap terms_;
};

Rational Eval(const QmExpr& expr, const Word& g);

struct HomogenizationOptions {
  std::optional<std::size_t> horizon;  // default 4 (|g| + max pattern) + 8
  std::optional<std::size_t> window;   // default max pattern + 2
};

/// lim_m eval(expr, g^m) / m, read off from the successive differences
/// eval(g^{m+1}) - eval(g^m): once they are periodic through the end of the
/// horizon (over at least `window` steps and two periods), the answer is
/// their mean over one period. Throws Error(kNotStabilized) otherwise.
Rational HomogenizeEval(const QmExpr& expr, const Word& g, const HomogenizationOptions& options = {});

/// Homogenization of an expression made of overlapping terms only, computed
/// from cyclic occurrence counts on the cyclic core of g.
Rational HomogenizeOverlappingCyclic(const QmExpr& expr, const Word& g);

struct PairSampler {
  // Zero means exhaustive enumeration of every pair up to the length bound.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static PairSampler Exhaustive() { return {}; }
  static PairSampler Seeded(std::uint64_t n, std::uint64_t seed) { return {n, seed}; }
};

struct DefectScanResult {
  Rational observed_sup;
  Word u;
  Word v;
  int exhaustive_up_to = 0;  // L, meaningful when exhaustive
  bool exhaustive = true;
  std::uint64_t pairs = 0;
};

/// Lower bound for the defect sup |a(uv) - a(u) - a(v)| over the sampled
/// pairs. Ties go to the shortlex-least (u, v).
DefectScanResult DefectScan(const QmExpr& expr, int max_len, const PairSampler& sampler);

}  // namespace qmfree
