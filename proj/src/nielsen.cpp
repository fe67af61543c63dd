#include "qmfree/nielsen.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qmfree/error.hpp"

namespace qmfree {

namespace {

constexpr Letter kA = Letter(1, +1);
constexpr Letter kB = Letter(2, +1);

void RequireNielsenRank(int rank) {
  if (rank < 2) Fail(ErrorKind::kRank, "Nielsen moves need rank >= 2");
}

// Image of a positive generator under a move, as a letter sequence.
std::vector<Letter> GeneratorImage(NielsenMove move, int generator, int rank) {
  switch (move) {
    case NielsenMove::kP1:
      if (generator == 1) return {Letter(2, +1)};
      if (generator == 2) return {Letter(1, +1)};
      return {Letter(generator, +1)};
    case NielsenMove::kP2:
      return {Letter(generator == rank ? 1 : generator + 1, +1)};
    case NielsenMove::kI:
      return {Letter(generator, generator == 1 ? -1 : +1)};
    case NielsenMove::kT:
      if (generator == 1) return {kA, kB};
      return {Letter(generator, +1)};
    case NielsenMove::kTinv:
      if (generator == 1) return {kA, kB.inverse()};
      return {Letter(generator, +1)};
  }
  return {};
}

// Letterwise relabeling by the inverse of a permutation move (P1, P2, I).
Letter InverseRelabel(NielsenMove move, Letter x, int rank) {
  const int g = x.generator();
  switch (move) {
    case NielsenMove::kP1:
      return Letter(g == 1 ? 2 : g == 2 ? 1 : g, x.sign());
    case NielsenMove::kP2:
      return Letter(g == 1 ? rank : g - 1, x.sign());
    case NielsenMove::kI:
      return g == 1 ? x.inverse() : x;
    default:
      Fail(ErrorKind::kDomain, "relabeling applies to P1, P2 and I only");
  }
}

std::vector<Letter> PowerLetters(Letter x, long long n) {
  const Letter unit = n >= 0 ? x : x.inverse();
  return std::vector<Letter>(static_cast<std::size_t>(n >= 0 ? n : -n), unit);
}

void Append(std::vector<Letter>& out, const std::vector<Letter>& tail) { out.insert(out.end(), tail.begin(), tail.end()); }

}  // namespace

std::string_view MoveName(NielsenMove move) {
  switch (move) {
    case NielsenMove::kP1:
      return "P1";
    case NielsenMove::kP2:
      return "P2";
    case NielsenMove::kI:
      return "I";
    case NielsenMove::kT:
      return "T";
    case NielsenMove::kTinv:
      return "Tinv";
  }
  return "?";
}

NielsenWord::NielsenWord(int rank, std::vector<NielsenMove> moves) : rank_(rank), moves_(std::move(moves)) {
  RequireNielsenRank(rank);
}

NielsenWord NielsenWord::Parse(int rank, std::string_view text) {
  static const std::map<std::string, NielsenMove, std::less<>> kTags = {
      {"P1", NielsenMove::kP1}, {"P2", NielsenMove::kP2},     {"I", NielsenMove::kI},
      {"T", NielsenMove::kT},   {"Tinv", NielsenMove::kTinv},
  };
  std::vector<NielsenMove> moves;
  if (!text.empty()) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      const auto it = kTags.find(token);
      if (it == kTags.end()) Fail(ErrorKind::kParse, "unknown Nielsen move '" + token + "'");
      moves.push_back(it->second);
    }
    if (text.back() == ',') Fail(ErrorKind::kParse, "trailing ',' in Nielsen word");
  }
  return NielsenWord(rank, std::move(moves));
}

std::string NielsenWord::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) out += ",";
    out += MoveName(moves_[i]);
  }
  return out;
}

Word ApplyMove(NielsenMove move, const Word& g) {
  RequireNielsenRank(g.rank());
  std::vector<Letter> raw;
  raw.reserve(g.size() + 4);
  for (Letter x : g.letters()) {
    auto image = GeneratorImage(move, x.generator(), g.rank());
    if (!x.positive()) {
      std::reverse(image.begin(), image.end());
      for (auto& y : image) y = y.inverse();
    }
    Append(raw, image);
  }
  return Reduce(g.rank(), raw);
}

Word ApplyWord(const NielsenWord& nw, const Word& g) {
  if (nw.rank() != g.rank()) Fail(ErrorKind::kRank, "Nielsen word rank differs from word rank");
  Word out = g;
  for (NielsenMove m : nw.moves()) out = ApplyMove(m, out);
  return out;
}

// Write g = (n_0, s_1, ..., s_l, n_l) in the b-normal form. Then T g has the
// same letters s_j with b-exponents n_j + #_a(s_j) - #_{a^-1}(s_{j+1}). An
// occurrence of w = (m_0, r_1, ..., r_k, m_k) in Tg is an aligned occurrence
// of its b-truncated core whose left and right b-runs are long enough; pulled
// back to g this is an occurrence of the core with interior exponents
// m_i - #_a(r_i) + #_{a^-1}(r_{i+1}), framed by one of the context words
// below. The only miss is a g that starts (or ends) exactly at the frame
// boundary when m_0 < 0 (or m_k > 0): one border occurrence per side.
TRewritePlan PlanTRewrite(const Word& w) {
  RequireNielsenRank(w.rank());
  if (w.empty() || IsPowerOf(w, kB)) Fail(ErrorKind::kDomain, "T-rewrite needs a word that is not a power of b");
  const int rank = w.rank();
  const NormalForm nf = ComputeNormalForm(w, kB);
  const std::size_t k = nf.length();
  const long long m0 = nf.exponents.front();
  const long long mk = nf.exponents.back();
  const Letter r1 = nf.interleaved.front();
  const Letter rk = nf.interleaved.back();
  const long long c = r1 == kA.inverse() ? 1 : 0;
  const long long d = rk == kA ? 1 : 0;

  std::vector<Letter> core;
  for (std::size_t i = 0; i < k; ++i) {
    core.push_back(nf.interleaved[i]);
    if (i + 1 < k) {
      const long long shifted = nf.exponents[i + 1] - (nf.interleaved[i] == kA ? 1 : 0) +
                                (nf.interleaved[i + 1] == kA.inverse() ? 1 : 0);
      Append(core, PowerLetters(kB, shifted));
    }
  }

  std::vector<Letter> others;  // letters outside {b, b^-1}
  for (Letter x : Alphabet(rank)) {
    if (x.generator() != kB.generator()) others.push_back(x);
  }

  TRewritePlan plan;
  std::vector<std::vector<Letter>> left;
  if (m0 == 0) {
    left.push_back({});
  } else if (m0 > 0) {
    left.push_back(PowerLetters(kB, m0 + c));
    auto framed = std::vector<Letter>{kA};
    Append(framed, PowerLetters(kB, m0 + c - 1));
    left.push_back(framed);
  } else {
    left.push_back(PowerLetters(kB, m0 + c - 1));
    for (Letter s : others) {
      if (s == kA) continue;
      auto framed = std::vector<Letter>{s};
      Append(framed, PowerLetters(kB, m0 + c));
      left.push_back(framed);
    }
    ++plan.border_cases;
  }

  std::vector<std::vector<Letter>> right;
  if (mk == 0) {
    right.push_back({});
  } else if (mk < 0) {
    right.push_back(PowerLetters(kB, mk - d));
    auto framed = PowerLetters(kB, mk - d + 1);
    framed.push_back(kA.inverse());
    right.push_back(framed);
  } else {
    right.push_back(PowerLetters(kB, mk - d + 1));
    for (Letter s : others) {
      if (s == kA.inverse()) continue;
      auto framed = PowerLetters(kB, mk - d);
      framed.push_back(s);
      right.push_back(framed);
    }
    ++plan.border_cases;
  }

  for (const auto& l : left) {
    for (const auto& r : right) {
      std::vector<Letter> raw = l;
      Append(raw, core);
      Append(raw, r);
      Word u(rank, raw);
      if (u.size() != raw.size()) Fail(ErrorKind::kDomain, "internal: T-rewrite pattern not reduced");
      plan.patterns.push_back(std::move(u));
    }
  }
  return plan;
}

RewriteResult PullbackTCounting(const Word& w) {
  const TRewritePlan plan = PlanTRewrite(w);
  QmExpr expr(w.rank());
  for (const Word& u : plan.patterns) expr.Add(CountKind::kOverlapping, u, 1);
  // The plan for w^{-1} is the inverse of this one; its border misses add to
  // those of w.
  return {std::move(expr), Rational(2 * plan.border_cases)};
}

QmExpr ReductionTrick(const Word& w) {
  if (w.empty()) Fail(ErrorKind::kDomain, "reduction trick needs a non-empty word");
  QmExpr expr(w.rank());
  const Letter last = w.back();
  for (Letter s : Alphabet(w.rank())) {
    if (s == last.inverse()) continue;
    std::vector<Letter> raw(w.letters().begin(), w.letters().end());
    raw.push_back(s);
    expr.Add(CountKind::kOverlapping, Word(w.rank(), raw), 1);
  }
  return expr;
}

RewriteResult PullbackTBPower(int rank, int k) {
  RequireNielsenRank(rank);
  if (k < 1) Fail(ErrorKind::kDomain, "b-power rewrite needs k >= 1");
  if (k == 1) {
    QmExpr expr(rank);
    expr.Add(CountKind::kOverlapping, Word(rank, {kA}), 1);
    expr.Add(CountKind::kOverlapping, Word(rank, {kB}), 1);
    return {std::move(expr), 0};
  }
  // phi_{b^k} = phi_{b^{k-1}} - sum_{s not in {b, B}} phi_{b^{k-1} s} up to 1.
  RewriteResult result = PullbackTBPower(rank, k - 1);
  result.error_bound += 1;
  const auto prefix = PowerLetters(kB, k - 1);
  for (Letter s : Alphabet(rank)) {
    if (s.generator() == kB.generator()) continue;
    auto raw = prefix;
    raw.push_back(s);
    const RewriteResult part = PullbackTCounting(Word(rank, raw));
    result.expr -= part.expr;
    result.error_bound += part.error_bound;
  }
  return result;
}

namespace {

bool SameOnGenerators(const std::vector<NielsenMove>& moves, NielsenMove target, int rank) {
  const NielsenWord nw(rank, moves);
  for (int g = 1; g <= rank; ++g) {
    const Word x(rank, {Letter(g, +1)});
    if (ApplyWord(nw, x) != ApplyMove(target, x)) return false;
  }
  return true;
}

std::vector<NielsenMove> SearchTinvExpansion(int rank) {
  const NielsenMove kPerm[] = {NielsenMove::kP1, NielsenMove::kP2, NielsenMove::kI};
  constexpr std::size_t kMaxTotal = 6;
  // Enumerate prefix/suffix pairs by total length, shortest first.
  for (std::size_t total = 0; total <= kMaxTotal; ++total) {
    for (std::size_t left = 0; left <= total; ++left) {
      const std::size_t right = total - left;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < total; ++i) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<NielsenMove> moves;
        std::size_t rest = code;
        for (std::size_t i = 0; i < left; ++i, rest /= 3) moves.push_back(kPerm[rest % 3]);
        moves.push_back(NielsenMove::kT);
        for (std::size_t i = 0; i < right; ++i, rest /= 3) moves.push_back(kPerm[rest % 3]);
        if (SameOnGenerators(moves, NielsenMove::kTinv, rank)) return moves;
      }
    }
  }
  Fail(ErrorKind::kDomain, "no P/I conjugate of T equals Tinv within the search bound");
}

RewriteResult PullbackMove(NielsenMove move, const QmExpr& e) {
  const int rank = e.rank();
  if (move == NielsenMove::kT) {
    RewriteResult out{QmExpr(rank), 0};
    for (const auto& [term, coeff] : e.terms()) {
      const Word& w = term.pattern;
      RewriteResult part = [&] {
        if (!IsPowerOf(w, kB)) return PullbackTCounting(w);
        // Canonical patterns are never b^{-k}, but fold the sign if one is.
        RewriteResult r = PullbackTBPower(rank, static_cast<int>(w.size()));
        if (!w.front().positive()) r.expr *= -1;
        return r;
      }();
      out.expr += coeff * part.expr;
      out.error_bound += Abs(coeff) * part.error_bound;
    }
    return out;
  }
  QmExpr relabeled(rank);
  for (const auto& [term, coeff] : e.terms()) {
    std::vector<Letter> raw;
    for (Letter x : term.pattern.letters()) raw.push_back(InverseRelabel(move, x, rank));
    relabeled.Add(term.kind, Word(rank, raw), coeff);
  }
  return {std::move(relabeled), 0};
}

}  // namespace

const std::vector<NielsenMove>& TinvExpansion(int rank) {
  RequireNielsenRank(rank);
  static std::mutex mu;
  static std::map<int, std::vector<NielsenMove>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, SearchTinvExpansion(rank)).first;
  return it->second;
}

RewriteResult PullbackExpr(const NielsenWord& nw, const QmExpr& e) {
  if (nw.rank() != e.rank()) Fail(ErrorKind::kRank, "Nielsen word rank differs from expression rank");
  if (e.HasKind(CountKind::kNonOverlapping)) {
    Fail(ErrorKind::kDomain, "pullback rewriting supports overlapping (C) terms only");
  }
  std::vector<NielsenMove> moves;
  for (NielsenMove m : nw.moves()) {
    if (m == NielsenMove::kTinv) {
      const auto& expansion = TinvExpansion(nw.rank());
      moves.insert(moves.end(), expansion.begin(), expansion.end());
    } else {
      moves.push_back(m);
    }
  }
  // eval(e, m_k(...m_1(g))): pull back through m_k first.
  RewriteResult result{e, 0};
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    RewriteResult step = PullbackMove(*it, result.expr);
    result.expr = std::move(step.expr);
    result.error_bound += step.error_bound;
  }
  return result;
}

}  // namespace qmfree
