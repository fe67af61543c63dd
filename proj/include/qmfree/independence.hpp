#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmfree/word.hpp"

namespace qmfree {

/// A total order on the 2n letters of S u S^{-1}, written as the letters in
/// increasing order, e.g. "aAbB" (the default for rank 2).
class LetterOrder {
 public:
  static LetterOrder Default(int rank);
  static LetterOrder Parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  int position(Letter x) const { return position_[static_cast<std::size_t>(x.order_key())]; }
  bool Less(const Word& u, const Word& v) const;  // lexicographic, equal lengths compared letterwise
  std::string ToString() const;

 private:
  int rank_ = 0;
  std::vector<Letter> sequence_;
  std::vector<int> position_;  // indexed by Letter::order_key()
};

/// u and v overlap when a proper prefix of one is a proper postfix of the
/// other, or one is a proper subword of the other.
bool Overlaps(const Word& u, const Word& v);

/// Non-empty, unbordered: no proper prefix equals a proper postfix.
bool IsNonSelfOverlapping(const Word& w);

/// {w} is an independent set.
bool IsSelfIndependent(const Word& w);

/// The words are distinct, W u W^{-1} has 2k elements, and every ordered pair
/// from W u W^{-1} (including a word with itself) is non-overlapping.
bool IsIndependentSet(std::span<const Word> ws);

/// Least cyclic rotation of a cyclically reduced word under `order`.
Word ConjugacyMinimal(const Word& w, const LetterOrder& order);

struct GrigFamily {
  LetterOrder order;
  int max_len = 0;
  std::vector<Word> members;  // sorted by length, then by `order`

  std::string ToJson() const;
};

/// One representative w^dagger = min{w*, w^{-*}} per pair of mutually inverse
/// conjugacy classes of cyclically reduced, non-self-overlapping words of
/// length <= max_len.
GrigFamily GrigorchukEnumerate(int rank, const LetterOrder& order, int max_len);

}  // namespace qmfree
