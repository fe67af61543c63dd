#include "qmfree/counting.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "qmfree/error.hpp"
#include "qmfree/parallel.hpp"
#include "qmfree/sampling.hpp"

namespace qmfree {

bool QmTermLess::operator()(const QmTerm& x, const QmTerm& y) const {
  if (x.kind != y.kind) return x.kind == CountKind::kOverlapping;
  return ShortLexLess{}(x.pattern, y.pattern);
}

namespace {

bool MatchesAt(const Word& pattern, const Word& text, std::size_t pos) {
  return std::equal(pattern.letters().begin(), pattern.letters().end(), text.letters().begin() + pos);
}

void RequireNonEmpty(const Word& pattern) {
  if (pattern.empty()) Fail(ErrorKind::kDomain, "counting pattern must be non-empty");
}

}  // namespace

std::size_t CountOverlapping(const Word& pattern, const Word& text) {
  RequireNonEmpty(pattern);
  if (pattern.size() > text.size()) return 0;
  std::size_t n = 0;
  for (std::size_t pos = 0; pos + pattern.size() <= text.size(); ++pos) n += MatchesAt(pattern, text, pos);
  return n;
}

// Occurrences all have the same length, so taking the leftmost one that
// starts after the previous pick is optimal (interval scheduling).
std::size_t CountNonOverlapping(const Word& pattern, const Word& text) {
  RequireNonEmpty(pattern);
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos + pattern.size() <= text.size()) {
    if (MatchesAt(pattern, text, pos)) {
      ++n;
      pos += pattern.size();
    } else {
      ++pos;
    }
  }
  return n;
}

std::size_t Count(CountKind kind, const Word& pattern, const Word& text) {
  return kind == CountKind::kOverlapping ? CountOverlapping(pattern, text) : CountNonOverlapping(pattern, text);
}

std::size_t CyclicCount(const Word& pattern, const Word& core) {
  RequireNonEmpty(pattern);
  if (core.empty() || !IsCyclicallyReduced(core)) {
    Fail(ErrorKind::kDomain, "cyclic count needs a non-empty cyclically reduced core");
  }
  const std::size_t period = core.size();
  std::size_t n = 0;
  for (std::size_t start = 0; start < period; ++start) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.size() && match; ++i) match = pattern[i] == core[(start + i) % period];
    n += match;
  }
  return n;
}

QmExpr::QmExpr(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) Fail(ErrorKind::kRank, "expression rank out of range");
}

QmExpr QmExpr::Term(CountKind kind, const Word& pattern, const Rational& coeff) {
  QmExpr e(pattern.rank());
  e.Add(kind, pattern, coeff);
  return e;
}

void QmExpr::Add(CountKind kind, const Word& pattern, const Rational& coeff) {
  RequireNonEmpty(pattern);
  if (pattern.rank() != rank_) Fail(ErrorKind::kRank, "term rank differs from expression rank");
  if (coeff == 0) return;
  Word inverse = Invert(pattern);
  const bool flip = ShortLexLess{}(inverse, pattern);
  QmTerm term{kind, flip ? std::move(inverse) : pattern};
  auto [it, inserted] = terms_.try_emplace(std::move(term), 0);
  it->second += flip ? Rational(-coeff) : coeff;
  if (it->second == 0) terms_.erase(it);
}

QmExpr& QmExpr::operator+=(const QmExpr& other) {
  if (other.rank_ != rank_) Fail(ErrorKind::kRank, "adding expressions of different rank");
  for (const auto& [term, coeff] : other.terms_) Add(term.kind, term.pattern, coeff);
  return *this;
}

QmExpr& QmExpr::operator-=(const QmExpr& other) {
  if (other.rank_ != rank_) Fail(ErrorKind::kRank, "subtracting expressions of different rank");
  for (const auto& [term, coeff] : other.terms_) Add(term.kind, term.pattern, -coeff);
  return *this;
}

QmExpr& QmExpr::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [term, coeff] : terms_) coeff *= factor;
  return *this;
}

std::size_t QmExpr::max_pattern_length() const {
  std::size_t m = 0;
  for (const auto& [term, coeff] : terms_) m = std::max(m, term.pattern.size());
  return m;
}

bool QmExpr::HasKind(CountKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.kind == kind; });
}

std::string QmExpr::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coeff] : terms_) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = Abs(coeff);
    if (magnitude != 1) out += FormatRational(magnitude) + "*";
    out += term.kind == CountKind::kOverlapping ? "C[" : "N[";
    out += term.pattern.ToString();
    out += "]";
    first = false;
  }
  return out;
}

QmExpr QmExpr::Parse(int rank, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  QmExpr expr(rank);
  if (s == "0") return expr;
  if (s.empty()) Fail(ErrorKind::kParse, "empty expression");

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    Fail(ErrorKind::kParse, "expression '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = +1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : +1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const std::size_t star = s.find('*', pos);
      if (star == std::string::npos) fail("coefficient without '*'");
      coeff = ParseRational(s.substr(pos, star - pos));
      pos = star + 1;
    }
    if (pos + 1 >= s.size() || (s[pos] != 'C' && s[pos] != 'N') || s[pos + 1] != '[') fail("expected C[ or N[");
    const CountKind kind = s[pos] == 'C' ? CountKind::kOverlapping : CountKind::kNonOverlapping;
    pos += 2;
    const std::size_t close = s.find(']', pos);
    if (close == std::string::npos) fail("missing ']'");
    const auto raw = s.substr(pos, close - pos);
    const Word pattern = Word::Parse(rank, raw);
    if (pattern.empty()) fail("empty pattern");
    if (pattern.size() != raw.size()) fail("pattern '" + std::string(raw) + "' is not reduced");
    pos = close + 1;
    expr.Add(kind, pattern, sign * coeff);
    first = false;
  }
  return expr;
}

Rational Eval(const QmExpr& expr, const Word& g) {
  if (expr.rank() != g.rank()) Fail(ErrorKind::kRank, "expression rank differs from word rank");
  Rational total = 0;
  for (const auto& [term, coeff] : expr.terms()) {
    const auto plus = static_cast<long long>(Count(term.kind, term.pattern, g));
    const auto minus = static_cast<long long>(Count(term.kind, Invert(term.pattern), g));
    if (plus != minus) total += coeff * (plus - minus);
  }
  return total;
}

Rational HomogenizeEval(const QmExpr& expr, const Word& g, const HomogenizationOptions& options) {
  if (expr.rank() != g.rank()) Fail(ErrorKind::kRank, "expression rank differs from word rank");
  if (expr.empty() || g.empty()) return 0;
  const std::size_t longest = expr.max_pattern_length();
  const std::size_t horizon = options.horizon.value_or(4 * (g.size() + longest) + 8);
  const std::size_t window = options.window.value_or(longest + 2);
  if (horizon < window + 1) Fail(ErrorKind::kDomain, "homogenization horizon shorter than its window");

  std::vector<Rational> diffs;
  diffs.reserve(horizon);
  Rational previous = 0;  // eval(g^0)
  for (std::size_t m = 1; m <= horizon; ++m) {
    const Rational current = Eval(expr, Power(g, static_cast<long long>(m)));
    diffs.push_back(current - previous);
    previous = current;
  }
  // diffs[m] = eval(g^{m+1}) - eval(g^m). Overlapping counts give a constant
  // tail; non-overlapping counts can cycle (N[aaa] at a: 0,0,1,0,0,1,...),
  // so take the shortest period p whose periodic tail spans both the window
  // and two full periods, and average over one period.
  const std::size_t max_period = std::min(g.size() + longest, horizon / 2);
  for (std::size_t p = 1; p <= max_period; ++p) {
    std::size_t start = diffs.size() - p;
    while (start > 0 && diffs[start - 1] == diffs[start - 1 + p]) --start;
    if (diffs.size() - start < std::max(window, 2 * p)) continue;
    Rational sum = 0;
    for (std::size_t i = diffs.size() - p; i < diffs.size(); ++i) sum += diffs[i];
    return sum / static_cast<long long>(p);
  }
  Fail(ErrorKind::kNotStabilized, "differences of eval(g^m) not eventually periodic within horizon " +
                                      std::to_string(horizon) + " for g=" + g.ToString());
}

Rational HomogenizeOverlappingCyclic(const QmExpr& expr, const Word& g) {
  if (expr.HasKind(CountKind::kNonOverlapping)) {
    Fail(ErrorKind::kDomain, "cyclic homogenization handles overlapping terms only");
  }
  if (expr.rank() != g.rank()) Fail(ErrorKind::kRank, "expression rank differs from word rank");
  const Word core = CyclicReduce(g).core;
  if (core.empty()) return 0;
  Rational total = 0;
  for (const auto& [term, coeff] : expr.terms()) {
    const auto plus = static_cast<long long>(CyclicCount(term.pattern, core));
    const auto minus = static_cast<long long>(CyclicCount(Invert(term.pattern), core));
    if (plus != minus) total += coeff * (plus - minus);
  }
  return total;
}

namespace {

struct DefectCandidate {
  Rational value = -1;
  const Word* u = nullptr;
  const Word* v = nullptr;
};

bool PairLess(const Word& u1, const Word& v1, const Word& u2, const Word& v2) {
  const ShortLexLess less;
  if (less(u1, u2)) return true;
  if (less(u2, u1)) return false;
  return less(v1, v2);
}

// Larger value wins; ties go to the shortlex-least pair.
void Offer(DefectCandidate& best, const Rational& value, const Word& u, const Word& v) {
  if (value > best.value || (value == best.value && best.u && PairLess(u, v, *best.u, *best.v))) {
    best = {value, &u, &v};
  }
}

}  // namespace

DefectScanResult DefectScan(const QmExpr& expr, int max_len, const PairSampler& sampler) {
  if (max_len < 1) Fail(ErrorKind::kDomain, "defect scan needs a length bound >= 1");
  const int rank = expr.rank();
  DefectScanResult result;
  result.exhaustive = sampler.samples == 0;
  result.exhaustive_up_to = max_len;

  std::vector<Word> left;
  std::vector<Word> right;
  if (result.exhaustive) {
    left = AllReducedWords(rank, max_len);
  } else {
    std::mt19937_64 rng(sampler.seed);
    for (std::uint64_t i = 0; i < sampler.samples; ++i) {
      left.push_back(RandomReducedWord(rank, max_len, rng));
      right.push_back(RandomReducedWord(rank, max_len, rng));
    }
  }
  std::vector<Rational> left_values(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) left_values[i] = Eval(expr, left[i]);
  std::vector<Rational> right_values(right.size());
  for (std::size_t i = 0; i < right.size(); ++i) right_values[i] = Eval(expr, right[i]);

  const std::size_t outer = left.size();
  const std::size_t chunks = WorkerCount();
  std::vector<DefectCandidate> best(std::max<std::size_t>(1, std::min(chunks, outer)));
  ParallelChunks(outer, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (result.exhaustive) {
        for (std::size_t j = 0; j < left.size(); ++j) {
          const Rational d = Abs(Eval(expr, Concat(left[i], left[j])) - left_values[i] - left_values[j]);
          Offer(best[c], d, left[i], left[j]);
        }
      } else {
        const Rational d = Abs(Eval(expr, Concat(left[i], right[i])) - left_values[i] - right_values[i]);
        Offer(best[c], d, left[i], right[i]);
      }
    }
  });
  DefectCandidate overall;
  for (const auto& b : best) {
    if (b.u) Offer(overall, b.value, *b.u, *b.v);
  }
  result.observed_sup = overall.value;
  result.u = *overall.u;
  result.v = *overall.v;
  result.pairs = result.exhaustive ? static_cast<std::uint64_t>(outer) * outer : outer;
  return result;
}

}  // namespace qmfree
