#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qmfree/error.hpp"
#include "qmfree/independence.hpp"

using namespace qmfree;

namespace {

Word W(const std::string& s, int rank = 2) { return Word::Parse(rank, s); }

bool Unbordered(const std::string& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.compare(0, k, w, w.size() - k, k) == 0) return false;
  }
  return !w.empty();
}

bool CyclicallyReduced(const std::string& w) { return w.empty() || w.front() != oracle::Inv(w.back()); }

// Lexicographic minimum with respect to the position of each letter in `order`.
std::string MinRotation(const std::string& w, const std::string& order) {
  auto key = [&](const std::string& s) {
    std::vector<std::size_t> k;
    for (char c : s) k.push_back(order.find(c));
    return k;
  };
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::string r = w.substr(i) + w.substr(0, i);
    if (key(r) < key(best)) best = r;
  }
  return best;
}

std::set<std::string> OracleFamily(int rank, const std::string& order, int max_len) {
  auto key = [&](const std::string& s) {
    std::vector<std::size_t> k;
    for (char c : s) k.push_back(order.find(c));
    return k;
  };
  std::set<std::string> out;
  for (const auto& w : oracle::ReducedWords(rank, max_len)) {
    if (w.empty() || !CyclicallyReduced(w) || !Unbordered(w)) continue;
    const std::string x = MinRotation(w, order), y = MinRotation(oracle::Invert(w), order);
    out.insert(key(x) <= key(y) ? x : y);
  }
  return out;
}

}  // namespace

TEST_SUITE("independence") {

TEST_CASE("overlap agrees with the definition") {
  const auto words = oracle::ReducedWords(2, 4);
  for (const auto& u : words) {
    if (u.empty()) continue;
    for (const auto& v : words) {
      if (v.empty()) continue;
      CHECK(Overlaps(W(u), W(v)) == oracle::Overlap(u, v));
    }
  }
}

TEST_CASE("independent sets agree with the definition") {
  const auto words = oracle::ReducedWords(2, 3);
  for (const auto& u : words) {
    if (u.empty()) continue;
    CHECK(IsSelfIndependent(W(u)) == oracle::Independent({u}));
    for (const auto& v : words) {
      if (v.empty()) continue;
      const std::vector<Word> ws = {W(u), W(v)};
      CHECK(IsIndependentSet(ws) == oracle::Independent({u, v}));
    }
  }
}

TEST_CASE("named pairs") {
  std::vector<Word> bad = {W("aBAb"), W("ab")};
  std::vector<Word> good = {W("aBAb"), W("aabb")};
  CHECK(!IsIndependentSet(bad));
  CHECK(IsIndependentSet(good));
  CHECK(Overlaps(W("ab"), W("ba")));
  CHECK(IsNonSelfOverlapping(W("aab")));
  CHECK(!IsNonSelfOverlapping(W("aba")));
}

TEST_CASE("letter orders") {
  CHECK(LetterOrder::Default(2).ToString() == "aAbB");
  CHECK(LetterOrder::Parse(2, "bBaA").ToString() == "bBaA");
  CHECK_THROWS_AS(LetterOrder::Parse(2, "aAb"), Error);
  CHECK_THROWS_AS(LetterOrder::Parse(2, "aabB"), Error);
  const LetterOrder o = LetterOrder::Parse(2, "BbAa");
  CHECK(o.Less(W("B"), W("a")));
  CHECK(ConjugacyMinimal(W("ab"), o) == W("ba"));
}

TEST_CASE("Grigorchuk family matches the oracle") {
  for (const std::string order : {"aAbB", "bBaA", "AbaB"}) {
    for (int n = 1; n <= 6; ++n) {
      const GrigFamily fam = GrigorchukEnumerate(2, LetterOrder::Parse(2, order), n);
      std::set<std::string> got;
      for (const auto& w : fam.members) got.insert(w.ToString());
      CHECK(got.size() == fam.members.size());
      CHECK(got == OracleFamily(2, order, n));
    }
  }
  const GrigFamily f3 = GrigorchukEnumerate(3, LetterOrder::Default(3), 3);
  std::set<std::string> got;
  for (const auto& w : f3.members) got.insert(w.ToString());
  CHECK(got == OracleFamily(3, "aAbBcC", 3));
}

TEST_CASE("Grigorchuk family listing order") {
  const GrigFamily fam = GrigorchukEnumerate(2, LetterOrder::Default(2), 3);
  std::string joined;
  for (const auto& w : fam.members) joined += (joined.empty() ? "" : " ") + w.ToString();
  CHECK(joined == "a b ab aB aab aaB abb aBB");
}

TEST_CASE("members are pairwise distinct up to conjugacy and inversion") {
  const GrigFamily fam = GrigorchukEnumerate(2, LetterOrder::Default(2), 5);
  std::set<std::string> classes;
  for (const auto& w : fam.members) {
    const std::string s = w.ToString();
    CHECK(IsCyclicallyReduced(w));
    CHECK(classes.insert(MinRotation(s, "aAbB")).second);
    CHECK(classes.insert(MinRotation(oracle::Invert(s), "aAbB")).second);
  }
}

}
