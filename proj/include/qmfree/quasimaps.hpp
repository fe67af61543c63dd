#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmfree/counting.hpp"
#include "qmfree/nielsen.hpp"
#include "qmfree/word.hpp"

namespace qmfree {

/// A length-k local transformation f on reduced k-letter words, with
/// phi_f(w) = f(w_1..w_k) f(w_2..w_{k+1}) ... and phi_f(w) = e when |w| < k.
class LocalTransformation {
 public:
  using Table = std::map<Word, Word, ShortLexLess>;

  /// Checks totality on reduced k-words of dom_rank and f(u^-1) = f(u)^-1.
  LocalTransformation(int dom_rank, int cod_rank, int window, Table table);

  int dom_rank() const { return dom_rank_; }
  int cod_rank() const { return cod_rank_; }
  int window() const { return window_; }
  const Table& table() const { return table_; }
  std::size_t max_image_length() const;

  Word Apply(const Word& g) const;

  bool operator==(const LocalTransformation&) const = default;

 private:
  int dom_rank_;
  int cod_rank_;
  int window_;
  Table table_;
};

/// A map sigma: N_0 -> N_0 with sigma(0) = 0 and bounded displacement, stored
/// as an explicit table on [0, M] and sigma(k) = k + tail_shift beyond M.
class WobblingMap {
 public:
  static WobblingMap Identity() { return WobblingMap({0}, 0); }

  /// table[k] = sigma(k) for k in [0, table.size() - 1]; table[0] must be 0.
  WobblingMap(std::vector<long long> table, long long tail_shift);

  /// Unlisted k >= 1 default to k + tail_shift.
  static WobblingMap FromExceptions(const std::map<long long, long long>& exceptions, long long tail_shift);

  long long operator()(long long k) const;
  long long tail_shift() const { return tail_shift_; }
  long long prefix_end() const { return static_cast<long long>(table_.size()) - 1; }  // M
  long long max_displacement() const;

  /// Entries that differ from k + tail_shift, for k >= 1.
  std::map<long long, long long> Exceptions() const;

  /// Applies sigma to the exponent of every maximal run of a_n in g.
  Word Apply(const Word& g) const;

  bool operator==(const WobblingMap&) const = default;

 private:
  std::vector<long long> table_;  // trimmed: the last entry differs from M + tail_shift
  long long tail_shift_;
};

/// (sigma o tau)(k) = sigma(tau(k)).
WobblingMap Compose(const WobblingMap& sigma, const WobblingMap& tau);

/// sigma = iota p iota^-1 for a finitely supported permutation p of Z, with
/// iota(i) = 2i + 2 for i >= 0 and -2i - 1 for i < 0. `p` lists the moved
/// points; it must be a bijection of its support.
WobblingMap EmbedWobbling(const std::map<long long, long long>& p);

/// Two independent words with the same first letter and the same last letter.
struct ReplacementPair {
  Word w1;
  Word w2;

  ReplacementPair(Word a, Word b);
  bool operator==(const ReplacementPair&) const = default;
};

struct DecompositionPart {
  Word word;
  bool in_family;  // a member of W or W^-1, as opposed to a gap
};

/// The unique minimal W-maximal decomposition of g: every occurrence of a
/// member of W u W^-1 (they are pairwise disjoint for independent W) plus the
/// maximal gaps between them.
std::vector<DecompositionPart> Decompose(std::span<const Word> family, const Word& g);

Word ApplyReplacement(const ReplacementPair& pair, const Word& g);

/// The quasimorphism F_{n-1} -> F_n that hits every element: domain
/// generator j is sent to codomain generator j + 1, pairs a_2 a_3 and
/// a_3^-1 a_2^-1 are read as a_1 and a_1^-1, and a_n-run exponents are then
/// lowered by one.
struct Surjection {
  int n;
  bool operator==(const Surjection&) const = default;
};

Word ApplySurjection(int n, const Word& g);

/// A preimage of w under the surjection for F_n.
Word SurjectionPreimage(int n, const Word& w);

class QuasiMap;

struct Chain {
  std::vector<QuasiMap> stages;
  bool operator==(const Chain&) const;
};

class QuasiMap {
 public:
  using Body = std::variant<NielsenWord, LocalTransformation, WobblingMap, ReplacementPair, Surjection, Chain>;

  static QuasiMap Nielsen(NielsenWord nw);
  static QuasiMap Local(LocalTransformation f);
  static QuasiMap Wobble(int rank, WobblingMap sigma);
  static QuasiMap Replace(int rank, ReplacementPair pair);
  static QuasiMap SurjectionMap(int n);
  static QuasiMap MakeChain(std::vector<QuasiMap> stages);

  /// Map-spec JSON: {"dom_rank":..,"cod_rank":..,"body":{"kind":..}}.
  static QuasiMap FromJson(const std::string& text);
  std::string ToJson() const;

  int dom_rank() const { return dom_rank_; }
  int cod_rank() const { return cod_rank_; }
  const Body& body() const { return body_; }

  Word Apply(const Word& g) const;

  bool operator==(const QuasiMap&) const = default;

 private:
  QuasiMap(int dom_rank, int cod_rank, Body body);

  int dom_rank_;
  int cod_rank_;
  Body body_;
};

/// Applies q1 first, then q2.
QuasiMap Compose(const QuasiMap& q1, const QuasiMap& q2);

Rational PullbackEval(const QuasiMap& q, const QmExpr& e, const Word& g);

/// Radius r such that f(w1 w2) lies in f(w1) B_r f(w2) for every reduced
/// product w1 w2 (and f(w^-1) in f(w)^-1 B_r); nullopt for chains.
std::optional<long long> CertificateRadius(const QuasiMap& q);

}  // namespace qmfree
