// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmfree/counting.hpp"
#include "qmfree/independence.hpp"
#include "qmfree/nielsen.hpp"
#include "qmfree/quasimaps.hpp"
#include "qmfree/verify.hpp"
#include "qmfree/word.hpp"

using namespace qmfree;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Word W(const std::string& s, int rank = 2) { return Word::Parse(rank, s); }

Outcome Criterion1() {
  const Word ss = W("ss", 19), text = W("sssss", 19);
  const auto o = CountOverlapping(ss, text), n = CountNonOverlapping(ss, text);
  return {o == 4 && n == 2, "overlapping=" + std::to_string(o) + " non-overlapping=" + std::to_string(n)};
}

Outcome Criterion2() {
  std::string detail;
  bool ok = true;
  for (int k = 1; k <= 5; ++k) {
    const Word p = Power(W("a"), k);
    const Rational n = HomogenizeEval(QmExpr::Term(CountKind::kNonOverlapping, p), W("a"));
    const Rational c = HomogenizeEval(QmExpr::Term(CountKind::kOverlapping, p), W("a"));
    ok = ok && n == Rational(1, k) && c == 1;
    detail += "k=" + std::to_string(k) + ":" + FormatRational(n) + "," + FormatRational(c) + " ";
  }
  return {ok, detail};
}

Outcome Criterion3() {
  long long words = 0, bad = 0;
  for (const Word& w : AllReducedWords(2, 5)) {
    if (w.empty() || !IsCyclicallyReduced(w)) continue;
    ++words;
    if (HomogenizeEval(QmExpr::Term(CountKind::kNonOverlapping, w), w) != 1) ++bad;
  }
  return {bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " violations"};
}

Outcome Criterion4() {
  const auto gs = AllReducedWords(2, 8);
  Rational worst = 0;
  for (const Word& w : AllReducedWords(2, 3)) {
    if (w.empty()) continue;
    const QmExpr c = QmExpr::Term(CountKind::kOverlapping, w);
    const QmExpr rt = ReductionTrick(w);
    for (const Word& g : gs) {
      const Rational d = Abs(Eval(c, g) - Eval(rt, g));
      if (d > worst) worst = d;
    }
  }
  return {worst <= 1, "sup=" + FormatRational(worst) + " over |w|<=3, |g|<=8"};
}

Outcome Criterion5() {
  const auto gs = AllReducedWords(2, 8);
  std::vector<Word> tg;
  for (const Word& g : gs) tg.push_back(ApplyMove(NielsenMove::kT, g));
  bool ok = true;
  long long patterns = 0;
  Rational max_bound = 0;
  for (const Word& w : AllReducedWords(2, 4)) {
    if (w.empty() || IsPowerOf(w, Letter::Positive(2))) continue;
    ++patterns;
    const RewriteResult r = PullbackTCounting(w);
    if (r.error_bound > max_bound) max_bound = r.error_bound;
    const QmExpr c = QmExpr::Term(CountKind::kOverlapping, w);
    for (std::size_t i = 0; i < gs.size() && ok; ++i) ok = Abs(Eval(c, tg[i]) - Eval(r.expr, gs[i])) <= r.error_bound;
  }
  ok = ok && max_bound <= 4;
  const QmExpr phi_b = QmExpr::Parse(2, "C[b]");
  const RewriteResult rb = PullbackExpr(NielsenWord::Parse(2, "T"), phi_b);
  Rational sup_b = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Rational d = Abs(Eval(phi_b, tg[i]) - Eval(rb.expr, gs[i]));
    if (d > sup_b) sup_b = d;
  }
  const bool exact_b = rb.expr == QmExpr::Parse(2, "C[a] + C[b]");
  ok = ok && exact_b && sup_b <= 2;
  return {ok, std::to_string(patterns) + " patterns, max bound " + FormatRational(max_bound) + "; T*phi_b = " +
                  rb.expr.ToString() + " sup=" + FormatRational(sup_b)};
}

Outcome Criterion6() {
  bool ok = true;
  std::string detail;
  for (const char* id : {"Eq-SwapWords", "L5.12-replacement-formula", "WRQ-involution", "W-monoid-hom", "W-torsion-m"}) {
    CheckParams p;
    p.max_len = 8;
    const VerificationReport r = RunCheck(id, p);
    const bool exact = !r.bound_claimed.has_value() && r.observed_sup == 0 && r.space.find("exhaustive") != std::string::npos;
    ok = ok && r.pass && exact;
    detail += std::string(id) + "=" + FormatRational(r.observed_sup) + " ";
  }
  return {ok, detail};
}

// Rank of the evaluation matrix by exact elimination, adding test-word rows in
// shortlex order until the rank reaches the family size.
Outcome Criterion7() {
  const GrigFamily fam = GrigorchukEnumerate(2, LetterOrder::Default(2), 4);
  const std::size_t cols = fam.members.size();
  std::vector<QmExpr> terms;
  for (const Word& w : fam.members) terms.push_back(QmExpr::Term(CountKind::kOverlapping, w));
  std::vector<std::vector<Rational>> basis;  // echelon rows
  std::vector<std::size_t> pivots;
  long long rows = 0;
  ForEachReducedWord(2, 10, [&](const Word& g) {
    if (g.empty() || !IsCyclicallyReduced(g)) return true;
    ++rows;
    std::vector<Rational> row;
    for (const QmExpr& t : terms) row.push_back(HomogenizeOverlappingCyclic(t, g));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (row[pivots[i]] == 0) continue;
      const Rational f = row[pivots[i]] / basis[i][pivots[i]];
      for (std::size_t c = 0; c < cols; ++c) row[c] -= f * basis[i][c];
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] != 0) {
        basis.push_back(row);
        pivots.push_back(c);
        break;
      }
    }
    return basis.size() < cols;
  });
  return {basis.size() == cols, "family=" + std::to_string(cols) + " rank=" + std::to_string(basis.size()) +
                                     " after " + std::to_string(rows) + " test words"};
}

Outcome Criterion8() {
  long long words = 0, bad = 0;
  for (const Word& w : AllReducedWords(4, 4)) {
    ++words;
    if (ApplySurjection(4, SurjectionPreimage(4, w)) != w) ++bad;
  }
  return {bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " failures"};
}

Outcome Criterion9() {
  long long cases = 0, bad = 0;
  for (const char* gs : {"ab", "aBab", "abAB"}) {
    const Word g = W(gs);
    for (int k = static_cast<int>(g.size()) + 1; k <= 12; ++k) {
      const Word wk = Concat(Concat(W("a"), Power(W("b"), -k)), W("abAb"));
      ++cases;
      if (HomogenizeEval(QmExpr::Term(CountKind::kOverlapping, wk), g) != 0) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " non-zero"};
}

Outcome Criterion10() {
  long long reduce = 0, nf = 0, anti = 0, conj = 0, greedy = 0;
  // Free reduction idempotence on every string of length <= 6.
  std::vector<std::string> strings = {""}, level = {""};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::string> next;
    for (const auto& s : level) {
      for (const auto& x : oracle::Letters(2)) next.push_back(s + x);
    }
    strings.insert(strings.end(), next.begin(), next.end());
    level = std::move(next);
  }
  for (const auto& s : strings) {
    const Word w = W(s);
    if (Reduce(2, w.letters()) != w || w.ToString() != oracle::Reduce(s)) ++reduce;
  }
  for (const Word& w : AllReducedWords(2, 7)) {
    for (int b = 1; b <= 2; ++b) {
      if (ComputeNormalForm(w, Letter::Positive(b)).Reassemble(2) != w) ++nf;
    }
  }
  const std::vector<QmExpr> exprs = {QmExpr::Parse(2, "C[ab] - 1/2*N[aa]"), QmExpr::Parse(2, "N[aBA] + 2*C[b]"),
                                     QmExpr::Parse(2, "C[aabb]")};
  for (const QmExpr& e : exprs) {
    for (const Word& g : AllReducedWords(2, 6)) {
      if (Eval(e, Invert(g)) != -Eval(e, g)) ++anti;
    }
    for (const Word& g : AllReducedWords(2, 4)) {
      const Rational h = HomogenizeEval(e, g);
      for (const Word& x : AllReducedWords(2, 2)) {
        if (HomogenizeEval(e, Concat(Concat(x, g), Invert(x))) != h) ++conj;
      }
    }
  }
  const auto texts = AllReducedWords(2, 8);
  for (const Word& p : AllReducedWords(2, 3)) {
    if (p.empty()) continue;
    const std::string ps = p.ToString();
    for (const Word& t : texts) {
      if (CountNonOverlapping(p, t) != static_cast<std::size_t>(oracle::CountDisjointExhaustive(ps, t.ToString()))) ++greedy;
    }
  }
  const long long total = reduce + nf + anti + conj + greedy;
  return {total == 0, "violations: reduction=" + std::to_string(reduce) + " normal-form=" + std::to_string(nf) +
                          " antisymmetry=" + std::to_string(anti) + " conjugation=" + std::to_string(conj) +
                          " greedy=" + std::to_string(greedy)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria = {
      {"counting ground truth", Criterion1, 0},
      {"homogenized power values", Criterion2, 0},
      {"homogenized N[w] is 1 at w, |w| <= 5", Criterion3, 30},
      {"reduction trick within 1, |g| <= 8", Criterion4, 120},
      {"T-rewrite within tracked bound, |g| <= 8", Criterion5, 180},
      {"exact identities, |g| <= 8", Criterion6, 120},
      {"full rank of the family evaluation matrix", Criterion7, 120},
      {"surjection preimages in F4, |w| <= 4", Criterion8, 60},
      {"vanishing of homogenized C[w_k]", Criterion9, 0},
      {"property suites", Criterion10, 0},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run, limit] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(limit)) + "s limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s [%d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
