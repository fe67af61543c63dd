#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmfree {

inline constexpr int kMaxRank = 26;

/// A signed generator a_i^{+1} or a_i^{-1}.
///
/// Textually generator i is the i-th lowercase Latin letter and its inverse
/// the matching uppercase letter.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign)
      : value_(static_cast<std::int8_t>(sign < 0 ? -generator : generator)) {}

  static constexpr Letter Positive(int generator) { return {generator, +1}; }
  static std::optional<Letter> FromChar(char c);

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : +1; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr Letter inverse() const { return Letter(generator(), -sign()); }
  char ToChar() const;

  // Position in the default order a < A < b < B < ...
  constexpr int order_key() const { return 2 * (generator() - 1) + (value_ < 0 ? 1 : 0); }

  constexpr bool operator==(const Letter&) const = default;

 private:
  std::int8_t value_ = 0;
};

/// A freely reduced word over a rank-n basis. Every constructor reduces, so a
/// Word never holds an adjacent pair x x^{-1}.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters)
      : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  /// Parses the textual word format; rejects characters beyond `rank`.
  static Word Parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  std::string ToString() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word Reduce(int rank, std::span<const Letter> raw);
  friend Word Subword(const Word& w, std::size_t pos, std::size_t len);

  struct Adopt {};
  Word(int rank, std::vector<Letter> reduced, Adopt) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word Reduce(int rank, std::span<const Letter> raw);

Word Concat(const Word& u, const Word& v);
Word Invert(const Word& w);
Word Subword(const Word& w, std::size_t pos, std::size_t len);
Word Power(const Word& w, long long m);

bool IsCyclicallyReduced(const Word& w);

struct CyclicReduction {
  Word conjugator;
  Word core;
};

/// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
CyclicReduction CyclicReduce(const Word& w);

/// Decomposition b^{n_0} s_1 b^{n_1} ... s_l b^{n_l} relative to a positive
/// generator letter b, with every s_j outside {b, b^{-1}}.
struct NormalForm {
  Letter distinguished;
  std::vector<long long> exponents;  // n_0 .. n_l, size l + 1
  std::vector<Letter> interleaved;   // s_1 .. s_l

  std::size_t length() const { return interleaved.size(); }
  Word Reassemble(int rank) const;
  bool operator==(const NormalForm&) const = default;
};

NormalForm ComputeNormalForm(const Word& w, Letter b);

/// Strips the leading and trailing powers of b; interior powers are kept.
Word Truncate(const Word& w, Letter b);

/// True when w is b^k for some k != 0 (or empty, for k = 0).
bool IsPowerOf(const Word& w, Letter b);

/// Shortlex order using the default letter order.
struct ShortLexLess {
  bool operator()(const Word& u, const Word& v) const;
};

/// 1 + sum_{j=1..L} 2n (2n-1)^{j-1}.
std::uint64_t CountReducedWords(int rank, int max_len);

/// Calls `visit` on every reduced word of length <= max_len, in shortlex
/// order. Stops early when `visit` returns false.
void ForEachReducedWord(int rank, int max_len, const std::function<bool(const Word&)>& visit);

std::vector<Word> AllReducedWords(int rank, int max_len);

/// Reduced words whose length is exactly `len`.
std::vector<Word> ReducedWordsOfLength(int rank, int len);

/// Letters of S u S^{-1} in default order.
std::vector<Letter> Alphabet(int rank);

}  // namespace qmfree

template <>
struct std::hash<qmfree::Word> {
  std::size_t operator()(const qmfree::Word& w) const noexcept;
};
