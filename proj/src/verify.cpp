#include "qmfree/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "json.hpp"
#include "qmfree/counting.hpp"
#include "qmfree/error.hpp"
#include "qmfree/independence.hpp"
#include "qmfree/nielsen.hpp"
#include "qmfree/parallel.hpp"
#include "qmfree/quasimaps.hpp"
#include "qmfree/sampling.hpp"

namespace qmfree {

using nlohmann::json;

namespace {

// --- input spaces

struct WordSpace {
  std::vector<Word> words;
  bool exhaustive = true;
  std::string description;
};

WordSpace MakeWordSpace(int rank, int max_len, std::uint64_t seed) {
  WordSpace space;
  const std::uint64_t total = CountReducedWords(rank, max_len);
  const std::string prefix = "rank=" + std::to_string(rank) + ",maxlen=" + std::to_string(max_len);
  if (total <= kExhaustiveBudget) {
    space.words = AllReducedWords(rank, max_len);
    if (space.words.size() != total) Fail(ErrorKind::kDomain, "internal: enumeration count differs from closed form");
    space.description = prefix + ",exhaustive";
  } else {
    std::mt19937_64 rng(seed);
    space.words.reserve(kSampleCount);
    for (std::uint64_t i = 0; i < kSampleCount; ++i) space.words.push_back(RandomReducedWord(rank, max_len, rng));
    space.exhaustive = false;
    space.description = prefix + ",sampled(n=" + std::to_string(kSampleCount) + ",seed=" + std::to_string(seed) + ")";
  }
  return space;
}

// --- worst-instance tracking

struct Worst {
  bool set = false;
  Rational observed;
  std::optional<Rational> claimed;
  std::vector<std::string> witness;

  Rational margin() const { return observed - claimed.value_or(0); }

  // Keeps the first instance with the largest margin. `wit` builds the
  // witness only when the instance is kept.
  template <class WitnessFn>
  void Offer(const Rational& obs, const std::optional<Rational>& bound, WitnessFn&& wit) {
    if (set && obs - bound.value_or(0) <= margin()) return;
    set = true;
    observed = obs;
    claimed = bound;
    witness = wit();
  }

  void Merge(const Worst& other) {
    if (other.set) Offer(other.observed, other.claimed, [&] { return other.witness; });
  }
};

// Runs body(i, worst) for i in [0, n) in parallel; chunk results merge in
// order, so ties resolve to the smallest index.
Worst ParallelWorst(std::size_t n, const std::function<void(std::size_t, Worst&)>& body) {
  const std::size_t chunks = std::clamp<std::size_t>(n / 256, 1, WorkerCount());
  std::vector<Worst> partial(chunks);
  ParallelChunks(n, partial.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i, partial[c]);
  });
  Worst out;
  for (const Worst& w : partial) out.Merge(w);
  return out;
}

VerificationReport Finish(const std::string& id, Worst worst, std::string space) {
  VerificationReport r;
  r.lemma_id = id;
  if (!worst.set) worst.Offer(0, worst.claimed, [] { return std::vector<std::string>{}; });
  r.bound_claimed = worst.claimed;
  r.observed_sup = worst.observed;
  r.witness = std::move(worst.witness);
  r.space = std::move(space);
  r.pass = r.observed_sup <= r.bound_claimed.value_or(0);
  return r;
}

Rational WordDistance(const Word& x, const Word& y) { return static_cast<long long>(Concat(Invert(x), y).size()); }

QmExpr C(const Word& w) { return QmExpr::Term(CountKind::kOverlapping, w); }
QmExpr N(const Word& w) { return QmExpr::Term(CountKind::kNonOverlapping, w); }

int MaxLen(const CheckParams& p, int fallback) {
  const int l = p.max_len.value_or(fallback);
  if (l < 0) Fail(ErrorKind::kDomain, "max_len must be >= 0");
  return l;
}

void RequireRankAtLeast(const CheckParams& p, int least) {
  if (p.rank < least || p.rank > kMaxRank) {
    Fail(ErrorKind::kRank, "this check needs rank in [" + std::to_string(least) + ", 26]");
  }
}

std::vector<Word> CyclicallyReducedNonTrivial(int rank, int max_len) {
  std::vector<Word> out;
  for (const Word& w : AllReducedWords(rank, max_len)) {
    if (!w.empty() && IsCyclicallyReduced(w)) out.push_back(w);
  }
  return out;
}

// Independent pairs with shared first and last letters over a and b: every
// such pair with both lengths <= 4 (this includes {aBAb, aabb}).
std::vector<ReplacementPair> ReplacementPool(int rank) {
  std::vector<ReplacementPair> pool;
  const auto words = AllReducedWords(2, 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const Word& u = words[i];
      const Word& v = words[j];
      if (u.empty() || u.front() != v.front() || u.back() != v.back()) continue;
      const Word pair[] = {u, v};
      if (IsIndependentSet(pair)) pool.emplace_back(Word::Parse(rank, u.ToString()), Word::Parse(rank, v.ToString()));
    }
  }
  return pool;
}

std::string PairName(const ReplacementPair& p) { return "{" + p.w1.ToString() + "," + p.w2.ToString() + "}"; }

// Wobbling maps with sigma(k) >= 1 for k >= 1, so no a_n-run disappears.
std::vector<WobblingMap> WobblePool() {
  return {
      WobblingMap::Identity(),
      WobblingMap::FromExceptions({{1, 2}, {2, 1}}, 0),
      WobblingMap::FromExceptions({{2, 3}, {3, 2}}, 0),
      WobblingMap::FromExceptions({{1, 2}, {2, 3}, {3, 1}}, 0),
      WobblingMap::FromExceptions({}, 1),
      WobblingMap::FromExceptions({{1, 1}, {2, 1}}, -1),
      EmbedWobbling({{0, 1}, {1, 0}}),
  };
}

std::string WobbleName(const WobblingMap& s) {
  json ex = json::object();
  for (const auto& [k, v] : s.Exceptions()) ex[std::to_string(k)] = v;
  return "sigma=" + ex.dump() + ",tail_shift=" + std::to_string(s.tail_shift());
}

// --- individual checks

VerificationReport SelfInverseNoOverlap(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const int l = MaxLen(p, 6);
  const auto words = CyclicallyReducedNonTrivial(p.rank, l);
  Rational violations = 0;
  Worst worst;
  worst.claimed = std::nullopt;
  std::vector<std::string> first;
  for (const Word& w : words) {
    const Word inv = Invert(w);
    if (w == inv || Overlaps(w, inv)) {
      violations += 1;
      if (first.empty()) first = {w.ToString()};
    }
  }
  worst.Offer(violations, std::nullopt, [&] { return first; });
  return Finish("L2.4-self-inverse-no-overlap", worst,
                "rank=" + std::to_string(p.rank) + ",maxlen=" + std::to_string(l) + ",cyclically reduced,exhaustive");
}

VerificationReport HocValueOne(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const int l = MaxLen(p, 5);
  const auto words = CyclicallyReducedNonTrivial(p.rank, l);
  Worst worst = ParallelWorst(words.size(), [&](std::size_t i, Worst& local) {
    const Word& w = words[i];
    local.Offer(Abs(HomogenizeEval(N(w), w) - 1), std::nullopt, [&] { return std::vector<std::string>{w.ToString()}; });
  });
  return Finish("C2.6-hoc-value-one", worst,
                "rank=" + std::to_string(p.rank) + ",maxlen=" + std::to_string(l) + ",cyclically reduced,exhaustive");
}

VerificationReport ReductionTrickCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  Worst worst;
  for (const Word& w : AllReducedWords(p.rank, 3)) {
    if (w.empty()) continue;
    const QmExpr diff = C(w) - ReductionTrick(w);
    worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) {
      local.Offer(Abs(Eval(diff, gs.words[i])), Rational(1), [&] { return std::vector<std::string>{w.ToString(), gs.words[i].ToString()}; });
    }));
  }
  return Finish("L2.9-reduction-trick", worst, gs.description + ",patterns maxlen=3");
}

VerificationReport TRewriteCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 2);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  std::vector<Word> images;
  images.reserve(gs.words.size());
  for (const Word& g : gs.words) images.push_back(ApplyMove(NielsenMove::kT, g));
  const Letter b(2, +1);
  Worst worst;
  for (const Word& w : AllReducedWords(p.rank, 4)) {
    if (w.empty() || IsPowerOf(w, b)) continue;
    const TRewritePlan plan = PlanTRewrite(w);
    worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) {
      long long diff = static_cast<long long>(CountOverlapping(w, images[i]));
      for (const Word& u : plan.patterns) diff -= static_cast<long long>(CountOverlapping(u, gs.words[i]));
      local.Offer(Rational(diff < 0 ? -diff : diff), Rational(2), [&] { return std::vector<std::string>{w.ToString(), gs.words[i].ToString()}; });
    }));
  }
  return Finish("L2.8-T-rewrite", worst, gs.description + ",patterns maxlen=4 not b-powers");
}

VerificationReport BPowerCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 2);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  const Word b(p.rank, {Letter(2, +1)});
  Worst worst;
  for (int k = 1; k <= 4; ++k) {
    const RewriteResult r = PullbackTBPower(p.rank, k);
    const QmExpr target = C(Power(b, k));
    worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) {
      const Word& g = gs.words[i];
      const Rational d = Abs(Eval(target, ApplyMove(NielsenMove::kT, g)) - Eval(r.expr, g));
      local.Offer(d, r.error_bound, [&] { return std::vector<std::string>{"k=" + std::to_string(k), g.ToString()}; });
    }));
  }
  return Finish("L2.10-bpower", worst, gs.description + ",k=1..4");
}

// `prepare(pair)` returns the per-input check for that pair.
template <class Prepare>
VerificationReport PoolIdentity(const std::string& id, const CheckParams& p, Prepare prepare) {
  RequireRankAtLeast(p, 2);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  const auto pool = ReplacementPool(p.rank);
  Worst worst;
  for (const ReplacementPair& pair : pool) {
    const auto body = prepare(pair);
    worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) { body(gs.words[i], local); }));
  }
  return Finish(id, worst, gs.description + ",pairs=" + std::to_string(pool.size()));
}

VerificationReport SwapWordsCheck(const CheckParams& p) {
  return PoolIdentity("Eq-SwapWords", p, [](const ReplacementPair& pair) {
    return [&pair, c1 = C(pair.w1), c2 = C(pair.w2)](const Word& g, Worst& local) {
      const Word h = ApplyReplacement(pair, g);
      const auto wit = [&](const char* dir) {
        return [&, dir] { return std::vector<std::string>{PairName(pair), g.ToString(), dir}; };
      };
      local.Offer(Abs(Eval(c1, h) - Eval(c2, g)), std::nullopt, wit("w1->w2"));
      local.Offer(Abs(Eval(c2, h) - Eval(c1, g)), std::nullopt, wit("w2->w1"));
    };
  });
}

VerificationReport ReplacementFormulaCheck(const CheckParams& p) {
  return PoolIdentity("L5.12-replacement-formula", p, [](const ReplacementPair& pair) {
    const QmExpr phi_a = C(Word(pair.w1.rank(), {Letter(1, +1)}));
    const QmExpr formula = phi_a + (Eval(phi_a, pair.w2) - Eval(phi_a, pair.w1)) * (C(pair.w1) - C(pair.w2));
    return [&pair, phi_a, formula](const Word& g, Worst& local) {
      local.Offer(Abs(Eval(phi_a, ApplyReplacement(pair, g)) - Eval(formula, g)), std::nullopt,
                  [&] { return std::vector<std::string>{PairName(pair), g.ToString()}; });
    };
  });
}

VerificationReport InvolutionCheck(const CheckParams& p) {
  return PoolIdentity("WRQ-involution", p, [](const ReplacementPair& pair) {
    return [&pair](const Word& g, Worst& local) {
      local.Offer(WordDistance(ApplyReplacement(pair, ApplyReplacement(pair, g)), g), std::nullopt,
                  [&] { return std::vector<std::string>{PairName(pair), g.ToString()}; });
    };
  });
}

VerificationReport MonoidHomCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  const auto pool = WobblePool();
  Worst worst;
  for (const WobblingMap& sigma : pool) {
    for (const WobblingMap& tau : pool) {
      const WobblingMap st = Compose(sigma, tau);
      worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) {
        const Word& g = gs.words[i];
        local.Offer(WordDistance(sigma.Apply(tau.Apply(g)), st.Apply(g)), std::nullopt,
                    [&] { return std::vector<std::string>{WobbleName(sigma), WobbleName(tau), g.ToString()}; });
      }));
    }
  }
  return Finish("W-monoid-hom", worst, gs.description + ",maps=" + std::to_string(pool.size()) + "^2");
}

VerificationReport TorsionCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const WordSpace gs = MakeWordSpace(p.rank, MaxLen(p, 8), p.seed);
  Worst worst;
  for (int m = 2; m <= 4; ++m) {
    // The cycle (0 1 ... m-1) of Z, which has order m.
    std::map<long long, long long> cycle;
    for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
    const WobblingMap sigma = EmbedWobbling(cycle);
    WobblingMap power = WobblingMap::Identity();
    for (int i = 0; i < m; ++i) power = Compose(sigma, power);
    if (!(power == WobblingMap::Identity())) {
      worst.Offer(1, std::nullopt, [&] { return std::vector<std::string>{"m=" + std::to_string(m), "sigma^m is not the identity"}; });
    }
    worst.Merge(ParallelWorst(gs.words.size(), [&](std::size_t i, Worst& local) {
      const Word& g = gs.words[i];
      Word x = g;
      for (int j = 0; j < m; ++j) x = sigma.Apply(x);
      local.Offer(WordDistance(x, g), std::nullopt, [&] { return std::vector<std::string>{"m=" + std::to_string(m), WobbleName(sigma), g.ToString()}; });
    }));
  }
  return Finish("W-torsion-m", worst, gs.description + ",m=2,3,4");
}

// Maps exercised by the product criterion, all with dom = cod = rank except
// the surjection.
std::vector<std::pair<std::string, QuasiMap>> CriterionMaps(int rank) {
  std::vector<std::pair<std::string, QuasiMap>> maps;
  for (const char* moves : {"T", "Tinv", "P1", "P2", "I", "T,P1,T"}) {
    maps.emplace_back(std::string("nielsen:") + moves, QuasiMap::Nielsen(NielsenWord::Parse(rank, moves)));
  }
  // Window 2: each canonical u = xy goes to x y x, inverses to inverses.
  LocalTransformation::Table table;
  for (const Word& u : ReducedWordsOfLength(rank, 2)) {
    const Word inv = Invert(u);
    if (ShortLexLess{}(inv, u)) continue;
    const Word image = Word(rank, {u[0], u[1], u[0]});
    table.emplace(u, image);
    table.emplace(inv, Invert(image));
  }
  maps.emplace_back("local:xy->xyx", QuasiMap::Local(LocalTransformation(rank, rank, 2, std::move(table))));
  for (const WobblingMap& s : WobblePool()) maps.emplace_back("wobble:" + WobbleName(s), QuasiMap::Wobble(rank, s));
  maps.emplace_back("wobble:sigma(k)=k-1", QuasiMap::Wobble(rank, WobblingMap({0}, -1)));
  const auto pool = ReplacementPool(rank);
  maps.emplace_back("replace:" + PairName(pool.front()), QuasiMap::Replace(rank, pool.front()));
  maps.emplace_back("replace:" + PairName(pool.back()), QuasiMap::Replace(rank, pool.back()));
  return maps;
}

void CriterionOn(const std::string& name, const QuasiMap& q, const std::vector<Word>& words, Worst& worst) {
  const Rational r = *CertificateRadius(q);
  worst.Merge(ParallelWorst(words.size(), [&](std::size_t i, Worst& local) {
    const Word& w = words[i];
    const Word hw = q.Apply(w);
    local.Offer(static_cast<long long>(Concat(hw, q.Apply(Invert(w))).size()), r, [&] { return std::vector<std::string>{name, w.ToString(), "inverse"}; });
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      const Word x = Subword(w, 0, cut);
      const Word y = Subword(w, cut, w.size() - cut);
      const Word middle = Concat(Concat(Invert(q.Apply(x)), hw), Invert(q.Apply(y)));
      local.Offer(static_cast<long long>(middle.size()), r, [&] { return std::vector<std::string>{name, x.ToString(), y.ToString()}; });
    }
  }));
}

VerificationReport CriterionCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 2);
  const int l = MaxLen(p, 8);
  const WordSpace gs = MakeWordSpace(p.rank, l, p.seed);
  Worst worst;
  for (const auto& [name, q] : CriterionMaps(p.rank)) CriterionOn(name, q, gs.words, worst);
  const int surj_len = std::min(l, 6);
  const WordSpace dom = MakeWordSpace(3, surj_len, p.seed);
  CriterionOn("surjection:n=4", QuasiMap::SurjectionMap(4), dom.words, worst);
  return Finish("P5.3-criterion", worst, gs.description + ";surjection " + dom.description);
}

VerificationReport SurjectivityCheck(const CheckParams& p) {
  const int n = std::max(p.rank, 4);
  if (n > kMaxRank) Fail(ErrorKind::kRank, "rank out of range");
  const WordSpace ws = MakeWordSpace(n, MaxLen(p, 4), p.seed);
  Worst worst = ParallelWorst(ws.words.size(), [&](std::size_t i, Worst& local) {
    const Word& w = ws.words[i];
    const Word pre = SurjectionPreimage(n, w);
    local.Offer(WordDistance(ApplySurjection(n, pre), w), std::nullopt, [&] { return std::vector<std::string>{w.ToString(), pre.ToString()}; });
  });
  return Finish("S5.4-surjectivity", worst, ws.description);
}

Word OrbitWord(int rank, int k) {
  // a b^-k a b a^-1 b
  std::string s = "a" + std::string(static_cast<std::size_t>(k), 'B') + "abAb";
  return Word::Parse(rank, s);
}

VerificationReport VanishingCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 2);
  const int l = MaxLen(p, 4);
  std::vector<Word> gs;
  for (const char* s : {"ab", "aBab", "abAB"}) gs.push_back(Word::Parse(p.rank, s));
  for (const Word& g : CyclicallyReducedNonTrivial(p.rank, l)) {
    if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
  }
  std::vector<std::pair<std::size_t, int>> cases;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (int k = static_cast<int>(gs[i].size()) + 1; k <= 12; ++k) cases.emplace_back(i, k);
  }
  Worst worst = ParallelWorst(cases.size(), [&](std::size_t c, Worst& local) {
    const auto [i, k] = cases[c];
    local.Offer(Abs(HomogenizeEval(C(OrbitWord(p.rank, k)), gs[i])), std::nullopt, [&] { return std::vector<std::string>{"k=" + std::to_string(k), gs[i].ToString()}; });
  });
  return Finish("C5.13-vanishing", worst,
                "g in {ab,aBab,abAB} and cyclically reduced rank=" + std::to_string(p.rank) + ",maxlen=" + std::to_string(l) +
                    ";|g|<k<=12");
}

// Incremental row echelon form over Q.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  // Adds v; returns true when it raised the rank.
  bool Add(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational f = v[pivot];
      for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
    }
    std::size_t pivot = 0;
    while (pivot < width_ && v[pivot] == 0) ++pivot;
    if (pivot == width_) return false;
    const Rational lead = v[pivot];
    for (auto& x : v) x /= lead;
    for (auto& [p, row] : rows_) {
      if (row[pivot] == 0) continue;
      const Rational f = row[pivot];
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

VerificationReport RankCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const int l = MaxLen(p, 4);
  constexpr int kTestLen = 10;
  const GrigFamily family = GrigorchukEnumerate(p.rank, LetterOrder::Default(p.rank), l);
  const std::size_t size = family.members.size();
  std::vector<QmExpr> terms;
  for (const Word& w : family.members) terms.push_back(C(w));
  Echelon echelon(size);
  std::uint64_t tested = 0;
  std::vector<std::string> columns;
  ForEachReducedWord(p.rank, kTestLen, [&](const Word& g) {
    if (g.empty() || !IsCyclicallyReduced(g)) return true;
    ++tested;
    std::vector<Rational> column;
    column.reserve(size);
    for (const QmExpr& t : terms) column.push_back(HomogenizeOverlappingCyclic(t, g));
    if (echelon.Add(std::move(column))) columns.push_back(g.ToString());
    return echelon.rank() < size;
  });
  Worst worst;
  std::vector<std::string> witness = {"family=" + std::to_string(size), "rank=" + std::to_string(echelon.rank())};
  witness.insert(witness.end(), columns.begin(), columns.end());
  worst.Offer(static_cast<long long>(size - echelon.rank()), std::nullopt, [&] { return witness; });
  return Finish("T2.7-rank", worst,
                "rank=" + std::to_string(p.rank) + ",family maxlen=" + std::to_string(l) + ",order=" + family.order.ToString() +
                    ",test words cyclically reduced maxlen=" + std::to_string(kTestLen) + ",scanned=" + std::to_string(tested));
}

VerificationReport PowerValuesCheck(const CheckParams& p) {
  RequireRankAtLeast(p, 1);
  const int l = MaxLen(p, 5);
  Worst worst;
  for (int j = 1; j <= p.rank; ++j) {
    const Word a(p.rank, {Letter(j, +1)});
    for (int k = 1; k <= l; ++k) {
      const Word ak = Power(a, k);
      const std::string tag = a.ToString() + "^" + std::to_string(k);
      worst.Offer(Abs(HomogenizeEval(N(ak), a) - Rational(1, k)), std::nullopt, [&] { return std::vector<std::string>{"N", tag, a.ToString()}; });
      worst.Offer(Abs(HomogenizeEval(C(ak), a) - 1), std::nullopt, [&] { return std::vector<std::string>{"C", tag, a.ToString()}; });
    }
  }
  return Finish("P5.1-power-values", worst, "rank=" + std::to_string(p.rank) + ",k=1.." + std::to_string(l));
}

struct Entry {
  CheckInfo info;
  VerificationReport (*run)(const CheckParams&);
};

const std::vector<Entry>& Registry() {
  static const std::vector<Entry> kRegistry = {
      {{"L2.4-self-inverse-no-overlap", "are distinct and do not overlap",
        "w and w^-1 are distinct and non-overlapping for cyclically reduced non-trivial w", 6},
       SelfInverseNoOverlap},
      {{"C2.6-hoc-value-one", "cyclically reduced and non-trivial",
        "homogenized N[w] takes the value 1 at w for cyclically reduced non-trivial w", 5},
       HocValueOne},
      {{"L2.9-reduction-trick", "bounded in absolute value by $1$",
        "|phi_w - sum_{s'} phi_{ws'}| <= 1 for all patterns |w| <= 3", 8},
       ReductionTrickCheck},
      {{"L2.8-T-rewrite", "| \\#_w(T(g)) - \\sum_{u \\in \\mathcal{W}} \\#_u(g) | \\leq 2",
        "count of w in T(g) against the rewritten pattern set, |w| <= 4 not a b-power", 8},
       TRewriteCheck},
      {{"L2.10-bpower", "T^*\\phi_{b^k} \\in \\mathcal H^*(F_n, S)",
        "T-pullback of phi_{b^k}, k <= 4, within the tracked error bound", 8},
       BPowerCheck},
      {{"Eq-SwapWords", "f^*_{w_1, w_2}(\\phi_{w_1}) = \\phi_{w_2}",
        "replacement pulls phi_{w1} back to phi_{w2} exactly", 8},
       SwapWordsCheck},
      {{"L5.12-replacement-formula", "(\\phi_a(w_2) -\\phi_a(w_1)) (\\phi_{w_1}- \\phi_{w_2})",
        "replacement pullback of phi_a, exactly", 8},
       ReplacementFormulaCheck},
      {{"WRQ-involution", "f_{w_1, w_2}^2 = {\\rm Id}", "word replacement is an involution", 8}, InvolutionCheck},
      {{"P5.3-criterion", "for which~$w_1w_2$ is a reduced word",
        "f(w1 w2) in f(w1) B_r f(w2) over reduced splittings, and f(w^-1) in f(w)^-1 B_r", 8},
       CriterionCheck},
      {{"W-monoid-hom", "is a monoid homomorphism",
        "wobbling maps compose like their run maps", 8},
       MonoidHomCheck},
      {{"W-torsion-m", "contains torsion elements of any given order", "pi_sigma^m = id for embedded cycles of order 2, 3, 4", 8},
       TorsionCheck},
      {{"S5.4-surjectivity", "surjective quasimorphism from~$F_{n-1}$ to~$F_n$",
        "the constructed preimage maps back to w", 4},
       SurjectivityCheck},
      {{"C5.13-vanishing", "w_k = ab^{-k}aba^{-1}b", "homogenized C[w_k] vanishes at g once k > |g|", 4},
       VanishingCheck},
      {{"T2.7-rank", "linearly independent and its span is dense",
        "homogenized C-terms of the Grigorchuk family have full rank on test words", 4},
       RankCheck},
      {{"P5.1-power-values", "\\widehat{\\phi^*_{a_j^k}}(a_j) = \\frac 1 k",
        "homogenized N[a^k] at a is 1/k and C[a^k] at a is 1", 5},
       PowerValuesCheck},
  };
  return kRegistry;
}

json ClaimedJson(const std::optional<Rational>& c) {
  if (!c) return "exact(0)";
  if (denominator(*c) == 1) return json::parse(FormatRational(*c));
  return FormatRational(*c);
}

}  // namespace

std::string VerificationReport::ToJson() const {
  json j = {
      {"lemma", lemma_id},
      {"claimed", ClaimedJson(bound_claimed)},
      {"observed", FormatRational(observed_sup)},
      {"witness", witness},
      {"space", space},
      {"pass", pass},
  };
  return j.dump();
}

const std::vector<CheckInfo>& ListChecks() {
  static const std::vector<CheckInfo> kInfos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : Registry()) out.push_back(e.info);
    return out;
  }();
  return kInfos;
}

std::string ListChecksJson() {
  json out = json::array();
  for (const CheckInfo& c : ListChecks()) {
    out.push_back({{"id", c.id}, {"anchor", c.anchor}, {"description", c.description}, {"default_max_len", c.default_max_len}});
  }
  return out.dump();
}

VerificationReport RunCheck(const std::string& id, const CheckParams& params) {
  for (const Entry& e : Registry()) {
    if (e.info.id == id) return e.run(params);
  }
  Fail(ErrorKind::kUnknownCheck, "unknown check '" + id + "'");
}

}  // namespace qmfree
