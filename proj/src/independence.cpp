#include "qmfree/independence.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "qmfree/error.hpp"

namespace qmfree {

LetterOrder LetterOrder::Default(int rank) {
  LetterOrder order;
  order.rank_ = rank;
  order.sequence_ = Alphabet(rank);
  order.position_.resize(order.sequence_.size());
  for (std::size_t i = 0; i < order.sequence_.size(); ++i) {
    order.position_[static_cast<std::size_t>(order.sequence_[i].order_key())] = static_cast<int>(i);
  }
  return order;
}

LetterOrder LetterOrder::Parse(int rank, std::string_view text) {
  if (rank < 1 || rank > kMaxRank) Fail(ErrorKind::kRank, "letter order rank out of range");
  if (text.size() != 2 * static_cast<std::size_t>(rank)) {
    Fail(ErrorKind::kParse, "letter order must list all " + std::to_string(2 * rank) + " letters exactly once");
  }
  LetterOrder order;
  order.rank_ = rank;
  order.position_.assign(text.size(), -1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto x = Letter::FromChar(text[i]);
    if (!x) Fail(ErrorKind::kParse, std::string("invalid character '") + text[i] + "' in letter order");
    if (x->generator() > rank) Fail(ErrorKind::kRank, std::string("letter '") + text[i] + "' beyond rank in order");
    auto& slot = order.position_[static_cast<std::size_t>(x->order_key())];
    if (slot != -1) Fail(ErrorKind::kParse, std::string("letter '") + text[i] + "' repeated in order");
    slot = static_cast<int>(i);
    order.sequence_.push_back(*x);
  }
  return order;
}

bool LetterOrder::Less(const Word& u, const Word& v) const {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return position(u[i]) < position(v[i]);
  }
  return u.size() < v.size();
}

std::string LetterOrder::ToString() const {
  std::string out;
  for (Letter x : sequence_) out.push_back(x.ToChar());
  return out;
}

namespace {

// Some proper postfix of u of length k equals the prefix of v of length k,
// for 1 <= k < min(|u|, |v|).
bool PostfixIsPrefix(const Word& u, const Word& v) {
  const std::size_t limit = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < limit; ++k) {
    if (std::equal(u.letters().end() - static_cast<std::ptrdiff_t>(k), u.letters().end(), v.letters().begin())) {
      return true;
    }
  }
  return false;
}

bool IsProperSubword(const Word& small, const Word& big) {
  if (small.size() >= big.size()) return false;
  return std::search(big.letters().begin(), big.letters().end(), small.letters().begin(), small.letters().end()) !=
         big.letters().end();
}

}  // namespace

bool Overlaps(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) Fail(ErrorKind::kDomain, "overlap test needs non-empty words");
  return PostfixIsPrefix(u, v) || PostfixIsPrefix(v, u) || IsProperSubword(u, v) || IsProperSubword(v, u);
}

bool IsNonSelfOverlapping(const Word& w) { return !w.empty() && !Overlaps(w, w); }

bool IsSelfIndependent(const Word& w) {
  const Word single[] = {w};
  return IsIndependentSet(single);
}

bool IsIndependentSet(std::span<const Word> ws) {
  std::vector<Word> all;
  for (const Word& w : ws) {
    if (w.empty()) return false;
    all.push_back(w);
    all.push_back(Invert(w));
  }
  std::sort(all.begin(), all.end(), ShortLexLess{});
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (const Word& u : all) {
    for (const Word& v : all) {
      if (Overlaps(u, v)) return false;
    }
  }
  return true;
}

Word ConjugacyMinimal(const Word& w, const LetterOrder& order) {
  if (!IsCyclicallyReduced(w)) Fail(ErrorKind::kDomain, "conjugacy-minimal form needs a cyclically reduced word");
  Word best = w;
  std::vector<Letter> rotated(w.letters().begin(), w.letters().end());
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    Word candidate(w.rank(), rotated);
    if (order.Less(candidate, best)) best = std::move(candidate);
  }
  return best;
}

std::string GrigFamily::ToJson() const {
  nlohmann::json members_json = nlohmann::json::array();
  for (const Word& m : members) members_json.push_back(m.ToString());
  return nlohmann::json{{"order", order.ToString()}, {"max_len", max_len}, {"members", members_json}}.dump();
}

GrigFamily GrigorchukEnumerate(int rank, const LetterOrder& order, int max_len) {
  if (max_len < 1) Fail(ErrorKind::kDomain, "Grigorchuk enumeration needs max_len >= 1");
  if (order.rank() != rank) Fail(ErrorKind::kRank, "letter order rank differs from requested rank");
  auto less = [&](const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return order.Less(u, v);
  };
  std::set<Word, decltype(less)> found(less);
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& w : ReducedWordsOfLength(rank, len)) {
      if (!IsCyclicallyReduced(w) || !IsNonSelfOverlapping(w)) continue;
      const Word star = ConjugacyMinimal(w, order);
      const Word inverse_star = ConjugacyMinimal(Invert(w), order);
      // No non-trivial element of a free group is conjugate to its inverse.
      if (star == inverse_star) Fail(ErrorKind::kDomain, "word conjugate to its inverse: " + w.ToString());
      found.insert(order.Less(star, inverse_star) ? star : inverse_star);
    }
  }
  return GrigFamily{order, max_len, std::vector<Word>(found.begin(), found.end())};
}

}  // namespace qmfree
