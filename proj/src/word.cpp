#include "qmfree/word.hpp"

#include <algorithm>

#include "qmfree/error.hpp"

namespace qmfree {

std::optional<Letter> Letter::FromChar(char c) {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 1, +1);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 1, -1);
  return std::nullopt;
}

char Letter::ToChar() const {
  const char base = positive() ? 'a' : 'A';
  return static_cast<char>(base + generator() - 1);
}

namespace {

void CheckRank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    Fail(ErrorKind::kRank, "rank " + std::to_string(rank) + " outside 1.." + std::to_string(kMaxRank));
  }
}

void RequireSameRank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    Fail(ErrorKind::kRank, "rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { CheckRank(rank); }

Word::Word(int rank, std::span<const Letter> letters) : Word(Reduce(rank, letters)) {}

Word Word::Parse(int rank, std::string_view text) {
  CheckRank(rank);
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    const auto letter = Letter::FromChar(c);
    if (!letter) Fail(ErrorKind::kParse, std::string("invalid character '") + c + "' in word");
    raw.push_back(*letter);
  }
  return Reduce(rank, raw);
}

std::string Word::ToString() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.ToChar());
  return out;
}

Word Reduce(int rank, std::span<const Letter> raw) {
  CheckRank(rank);
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter x : raw) {
    if (x.generator() < 1 || x.generator() > rank) {
      Fail(ErrorKind::kRank, std::string("letter '") + x.ToChar() + "' beyond rank " + std::to_string(rank));
    }
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(rank, std::move(stack), Word::Adopt{});
}

Word Concat(const Word& u, const Word& v) {
  RequireSameRank(u, v);
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Reduce(u.rank(), raw);
}

Word Invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return Reduce(w.rank(), raw);
}

Word Subword(const Word& w, std::size_t pos, std::size_t len) {
  if (pos + len > w.size()) Fail(ErrorKind::kDomain, "subword out of range");
  // A factor of a reduced word is reduced.
  std::vector<Letter> part(w.letters().begin() + pos, w.letters().begin() + pos + len);
  return Word(w.rank(), std::move(part), Word::Adopt{});
}

bool IsCyclicallyReduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicReduction CyclicReduce(const Word& w) {
  std::size_t peel = 0;
  while (2 * peel + 1 < w.size() && w[peel] == w[w.size() - 1 - peel].inverse()) ++peel;
  return {Subword(w, 0, peel), Subword(w, peel, w.size() - 2 * peel)};
}

Word Power(const Word& w, long long m) {
  if (m == 0) return Word(w.rank());
  if (m < 0) return Power(Invert(w), -m);
  const auto [conjugator, core] = CyclicReduce(w);
  std::vector<Letter> raw(conjugator.letters().begin(), conjugator.letters().end());
  raw.reserve(2 * conjugator.size() + static_cast<std::size_t>(m) * core.size());
  for (long long i = 0; i < m; ++i) raw.insert(raw.end(), core.letters().begin(), core.letters().end());
  const Word tail = Invert(conjugator);
  raw.insert(raw.end(), tail.letters().begin(), tail.letters().end());
  return Reduce(w.rank(), raw);
}

Word NormalForm::Reassemble(int rank) const {
  std::vector<Letter> raw;
  auto emit_power = [&](long long n) {
    const Letter x = n >= 0 ? distinguished : distinguished.inverse();
    for (long long i = 0; i < (n >= 0 ? n : -n); ++i) raw.push_back(x);
  };
  emit_power(exponents.at(0));
  for (std::size_t j = 0; j < interleaved.size(); ++j) {
    raw.push_back(interleaved[j]);
    emit_power(exponents.at(j + 1));
  }
  return Reduce(rank, raw);
}

NormalForm ComputeNormalForm(const Word& w, Letter b) {
  if (!b.positive() || b.generator() > w.rank()) {
    Fail(ErrorKind::kDomain, "normal form needs a positive generator letter within rank");
  }
  NormalForm nf{b, {0}, {}};
  for (Letter x : w.letters()) {
    if (x.generator() == b.generator()) {
      nf.exponents.back() += x.sign();
    } else {
      nf.interleaved.push_back(x);
      nf.exponents.push_back(0);
    }
  }
  return nf;
}

Word Truncate(const Word& w, Letter b) {
  std::size_t first = 0;
  std::size_t last = w.size();
  while (first < last && w[first].generator() == b.generator()) ++first;
  while (last > first && w[last - 1].generator() == b.generator()) --last;
  return Subword(w, first, last - first);
}

bool IsPowerOf(const Word& w, Letter b) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](Letter x) { return x.generator() == b.generator(); });
}

bool ShortLexLess::operator()(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i].order_key() < v[i].order_key();
  }
  return false;
}

std::uint64_t CountReducedWords(int rank, int max_len) {
  std::uint64_t total = 1;
  std::uint64_t layer = 2 * static_cast<std::uint64_t>(rank);
  for (int j = 1; j <= max_len; ++j) {
    total += layer;
    layer *= 2 * static_cast<std::uint64_t>(rank) - 1;
  }
  return total;
}

std::vector<Letter> Alphabet(int rank) {
  CheckRank(rank);
  std::vector<Letter> out;
  for (int g = 1; g <= rank; ++g) {
    out.emplace_back(g, +1);
    out.emplace_back(g, -1);
  }
  return out;
}

namespace {

// Depth-first extension of `prefix` to exactly `len` letters.
bool ExtendTo(int rank, std::size_t len, const std::vector<Letter>& alphabet, std::vector<Letter>& prefix,
              const std::function<bool(const Word&)>& visit) {
  if (prefix.size() == len) return visit(Word(rank, std::span<const Letter>(prefix)));
  for (Letter x : alphabet) {
    if (!prefix.empty() && prefix.back() == x.inverse()) continue;
    prefix.push_back(x);
    const bool go_on = ExtendTo(rank, len, alphabet, prefix, visit);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void ForEachReducedWord(int rank, int max_len, const std::function<bool(const Word&)>& visit) {
  const auto alphabet = Alphabet(rank);
  std::vector<Letter> prefix;
  for (int len = 0; len <= max_len; ++len) {
    if (!ExtendTo(rank, static_cast<std::size_t>(len), alphabet, prefix, visit)) return;
  }
}

std::vector<Word> AllReducedWords(int rank, int max_len) {
  std::vector<Word> out;
  out.reserve(CountReducedWords(rank, max_len));
  ForEachReducedWord(rank, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> ReducedWordsOfLength(int rank, int len) {
  std::vector<Word> out;
  const auto alphabet = Alphabet(rank);
  std::vector<Letter> prefix;
  ExtendTo(rank, static_cast<std::size_t>(len), alphabet, prefix, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace qmfree

std::size_t std::hash<qmfree::Word>::operator()(const qmfree::Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (qmfree::Letter x : w.letters()) h = (h ^ static_cast<std::size_t>(x.order_key() + 1)) * 0x100000001b3ULL;
  return h;
}
