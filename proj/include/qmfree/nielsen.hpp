#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmfree/counting.hpp"
#include "qmfree/rational.hpp"
#include "qmfree/word.hpp"

namespace qmfree {

/// Generators of Out(F_n) acting on the basis (a_1, ..., a_n):
///   P1: swaps a_1 and a_2          P2: a_i -> a_{i+1}, a_n -> a_1
///   I:  a_1 -> a_1^{-1}            T:  a_1 -> a_1 a_2
///   Tinv: a_1 -> a_1 a_2^{-1}
enum class NielsenMove { kP1, kP2, kI, kT, kTinv };

std::string_view MoveName(NielsenMove move);

class NielsenWord {
 public:
  NielsenWord(int rank, std::vector<NielsenMove> moves);

  /// Comma-separated, case-sensitive tags: "T,P1,I,Tinv". Empty text is the
  /// identity.
  static NielsenWord Parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  const std::vector<NielsenMove>& moves() const { return moves_; }
  std::string ToString() const;

  bool operator==(const NielsenWord&) const = default;

 private:
  int rank_;
  std::vector<NielsenMove> moves_;
};

Word ApplyMove(NielsenMove move, const Word& g);

/// Applies the moves left to right: the first move acts first.
Word ApplyWord(const NielsenWord& nw, const Word& g);

struct RewriteResult {
  QmExpr expr;
  // sup_g |original(image of g) - expr(g)| is at most this.
  Rational error_bound;
};

/// The pattern set W with #_w(T g) = sum_{u in W} #_u(g) up to the border
/// occurrences counted in `border_cases` (each worth at most one).
struct TRewritePlan {
  std::vector<Word> patterns;
  int border_cases = 0;
};

/// b = a_2, a = a_1. `w` must be non-empty and not a power of b.
TRewritePlan PlanTRewrite(const Word& w);

/// T^* phi_w as a sum of overlapping counting terms, for w not a power of b.
RewriteResult PullbackTCounting(const Word& w);

/// T^* phi_{b^k}, k >= 1, by the reduction-trick recursion on k.
RewriteResult PullbackTBPower(int rank, int k);

/// sum_{s' != s^{-1}} C[w s'] where s is the last letter of w; within
/// distance 1 of phi_w.
QmExpr ReductionTrick(const Word& w);

/// Pullback of an overlapping-only expression along a Nielsen word: P1, P2
/// and I relabel patterns exactly, T goes through the rewrites above and Tinv
/// is first replaced by its conjugate X T X' with X, X' products of P/I moves.
RewriteResult PullbackExpr(const NielsenWord& nw, const QmExpr& e);

/// The P/I-conjugation of T used for Tinv, found once per rank by search.
const std::vector<NielsenMove>& TinvExpansion(int rank);

}  // namespace qmfree
