#include "qmfree/quasimaps.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "json.hpp"
#include "qmfree/error.hpp"
#include "qmfree/independence.hpp"

namespace qmfree {

using nlohmann::json;

namespace {

void RequireRank(const Word& g, int rank) {
  if (g.rank() != rank) {
    Fail(ErrorKind::kRank, "word has rank " + std::to_string(g.rank()) + ", map expects " + std::to_string(rank));
  }
}

void AppendPower(std::vector<Letter>& out, Letter x, long long n) {
  const Letter unit = n >= 0 ? x : x.inverse();
  for (long long i = 0; i < (n >= 0 ? n : -n); ++i) out.push_back(unit);
}

Word Relabel(const Word& w, int rank, int shift) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter x : w.letters()) raw.emplace_back(x.generator() + shift, x.sign());
  return Word(rank, raw);
}

}  // namespace

// --- local transformations

LocalTransformation::LocalTransformation(int dom_rank, int cod_rank, int window, Table table)
    : dom_rank_(dom_rank), cod_rank_(cod_rank), window_(window), table_(std::move(table)) {
  if (window < 1) Fail(ErrorKind::kDomain, "local window must be >= 1");
  std::size_t expected = 0;
  for (const Word& u : ReducedWordsOfLength(dom_rank, window)) {
    ++expected;
    const auto it = table_.find(u);
    if (it == table_.end()) Fail(ErrorKind::kDomain, "local table has no entry for '" + u.ToString() + "'");
    RequireRank(it->second, cod_rank);
    const auto inv = table_.find(Invert(u));
    if (inv == table_.end() || inv->second != Invert(it->second)) {
      Fail(ErrorKind::kDomain, "local table violates f(u^-1) = f(u)^-1 at '" + u.ToString() + "'");
    }
  }
  if (table_.size() != expected) Fail(ErrorKind::kDomain, "local table has keys that are not reduced words of the window length");
}

std::size_t LocalTransformation::max_image_length() const {
  std::size_t m = 0;
  for (const auto& [key, value] : table_) m = std::max(m, value.size());
  return m;
}

Word LocalTransformation::Apply(const Word& g) const {
  RequireRank(g, dom_rank_);
  const auto k = static_cast<std::size_t>(window_);
  if (g.size() < k) return Word(cod_rank_);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i + k <= g.size(); ++i) {
    const Word& image = table_.at(Subword(g, i, k));
    raw.insert(raw.end(), image.letters().begin(), image.letters().end());
  }
  return Word(cod_rank_, raw);
}

// --- wobbling maps

WobblingMap::WobblingMap(std::vector<long long> table, long long tail_shift)
    : table_(std::move(table)), tail_shift_(tail_shift) {
  if (table_.empty() || table_[0] != 0) Fail(ErrorKind::kDomain, "wobbling map must send 0 to 0");
  for (long long v : table_) {
    if (v < 0) Fail(ErrorKind::kDomain, "wobbling map outputs must be >= 0");
  }
  while (table_.size() > 1) {
    const auto last = static_cast<long long>(table_.size()) - 1;
    if (table_.back() != last + tail_shift_) break;
    table_.pop_back();
  }
  if (prefix_end() + 1 + tail_shift_ < 0) Fail(ErrorKind::kDomain, "wobbling tail k + d must stay >= 0");
}

WobblingMap WobblingMap::FromExceptions(const std::map<long long, long long>& exceptions, long long tail_shift) {
  long long m = 0;
  for (const auto& [k, v] : exceptions) {
    if (k < 0) Fail(ErrorKind::kDomain, "wobbling exception keys must be >= 0");
    m = std::max(m, k);
  }
  std::vector<long long> table(static_cast<std::size_t>(m) + 1);
  for (long long k = 1; k <= m; ++k) table[static_cast<std::size_t>(k)] = k + tail_shift;
  for (const auto& [k, v] : exceptions) table[static_cast<std::size_t>(k)] = v;
  return WobblingMap(std::move(table), tail_shift);
}

long long WobblingMap::operator()(long long k) const {
  if (k < 0) Fail(ErrorKind::kDomain, "wobbling map is defined on N_0");
  if (k <= prefix_end()) return table_[static_cast<std::size_t>(k)];
  return k + tail_shift_;
}

long long WobblingMap::max_displacement() const {
  long long d = tail_shift_ < 0 ? -tail_shift_ : tail_shift_;
  for (long long k = 0; k <= prefix_end(); ++k) d = std::max(d, std::abs((*this)(k) - k));
  return d;
}

std::map<long long, long long> WobblingMap::Exceptions() const {
  std::map<long long, long long> out;
  for (long long k = 1; k <= prefix_end(); ++k) {
    if ((*this)(k) != k + tail_shift_) out[k] = (*this)(k);
  }
  return out;
}

Word WobblingMap::Apply(const Word& g) const {
  const Letter an(g.rank(), +1);
  const NormalForm nf = ComputeNormalForm(g, an);
  std::vector<Letter> raw;
  for (std::size_t j = 0; j < nf.exponents.size(); ++j) {
    const long long t = nf.exponents[j];
    AppendPower(raw, an, t >= 0 ? (*this)(t) : -(*this)(-t));
    if (j < nf.interleaved.size()) raw.push_back(nf.interleaved[j]);
  }
  return Word(g.rank(), raw);
}

WobblingMap Compose(const WobblingMap& sigma, const WobblingMap& tau) {
  const long long m = std::max({tau.prefix_end(), sigma.prefix_end() - tau.tail_shift(), 0LL});
  std::vector<long long> table(static_cast<std::size_t>(m) + 1);
  for (long long k = 0; k <= m; ++k) table[static_cast<std::size_t>(k)] = sigma(tau(k));
  return WobblingMap(std::move(table), sigma.tail_shift() + tau.tail_shift());
}

WobblingMap EmbedWobbling(const std::map<long long, long long>& p) {
  std::set<long long> domain;
  std::set<long long> image;
  for (const auto& [i, j] : p) {
    domain.insert(i);
    image.insert(j);
  }
  if (domain != image) Fail(ErrorKind::kDomain, "permutation is not a bijection of its support");
  const auto iota = [](long long i) { return i >= 0 ? 2 * i + 2 : -2 * i - 1; };
  std::map<long long, long long> exceptions;
  for (const auto& [i, j] : p) exceptions[iota(i)] = iota(j);
  return WobblingMap::FromExceptions(exceptions, 0);
}

// --- word replacement

ReplacementPair::ReplacementPair(Word a, Word b) : w1(std::move(a)), w2(std::move(b)) {
  if (w1.rank() != w2.rank()) Fail(ErrorKind::kRank, "replacement words have different ranks");
  const Word pair[] = {w1, w2};
  if (!IsIndependentSet(pair)) Fail(ErrorKind::kDomain, "replacement words are not an independent set");
  if (w1.front() != w2.front() || w1.back() != w2.back()) {
    Fail(ErrorKind::kDomain, "replacement words must share first and last letters");
  }
}

std::vector<DecompositionPart> Decompose(std::span<const Word> family, const Word& g) {
  if (!IsIndependentSet(family)) Fail(ErrorKind::kDomain, "decomposition needs an independent set");
  std::vector<Word> members;
  for (const Word& w : family) {
    RequireRank(w, g.rank());
    members.push_back(w);
    members.push_back(Invert(w));
  }
  std::vector<DecompositionPart> parts;
  const auto letters = g.letters();
  std::size_t gap_begin = 0;
  std::size_t i = 0;
  while (i < g.size()) {
    const Word* hit = nullptr;
    for (const Word& m : members) {
      if (m.size() <= g.size() - i && std::equal(m.letters().begin(), m.letters().end(), letters.begin() + static_cast<std::ptrdiff_t>(i))) {
        hit = &m;
        break;
      }
    }
    if (!hit) {
      ++i;
      continue;
    }
    if (gap_begin < i) parts.push_back({Subword(g, gap_begin, i - gap_begin), false});
    parts.push_back({*hit, true});
    i += hit->size();
    gap_begin = i;
  }
  if (gap_begin < g.size()) parts.push_back({Subword(g, gap_begin, g.size() - gap_begin), false});
  return parts;
}

Word ApplyReplacement(const ReplacementPair& pair, const Word& g) {
  const Word family[] = {pair.w1, pair.w2};
  const Word inv1 = Invert(pair.w1);
  const Word inv2 = Invert(pair.w2);
  std::vector<Letter> raw;
  for (const auto& part : Decompose(family, g)) {
    const Word* out = &part.word;
    if (part.in_family) {
      if (part.word == pair.w1) out = &pair.w2;
      else if (part.word == pair.w2) out = &pair.w1;
      else if (part.word == inv1) out = &inv2;
      else out = &inv1;
    }
    raw.insert(raw.end(), out->letters().begin(), out->letters().end());
  }
  return Word(g.rank(), raw);
}

// --- surjection F_{n-1} -> F_n

namespace {

void RequireSurjectionRank(int n) {
  if (n < 4) Fail(ErrorKind::kDomain, "the surjection needs n >= 4");
}

}  // namespace

Word ApplySurjection(int n, const Word& g) {
  RequireSurjectionRank(n);
  RequireRank(g, n - 1);
  const Word s = Relabel(g, n, 1);
  const Letter a1(1, +1), a2(2, +1), a3(3, +1);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 == s.size()) {
      raw.push_back(s[i]);
    } else if (s[i] == a2 && s[i + 1] == a3) {
      raw.insert(raw.end(), {a1, a3.inverse()});
    } else if (s[i] == a3.inverse() && s[i + 1] == a2.inverse()) {
      raw.insert(raw.end(), {a1.inverse(), a2});
    } else {
      raw.push_back(s[i]);
    }
  }
  static const WobblingMap kLower({0}, -1);
  return kLower.Apply(Word(n, raw));
}

Word SurjectionPreimage(int n, const Word& w) {
  RequireSurjectionRank(n);
  RequireRank(w, n);
  const Letter an(n, +1), a1(1, +1), a2(2, +1), a3(3, +1);
  const NormalForm nf = ComputeNormalForm(w, an);
  // Every a_n-run, empty ones included, grows by one; the resulting a_n
  // separators keep the substituted blocks apart.
  std::vector<Letter> raw;
  const auto emit = [&](Letter x) {
    if (x == a1) {
      raw.insert(raw.end(), {a2, a3});
    } else if (x == a1.inverse()) {
      raw.insert(raw.end(), {a3.inverse(), a2.inverse()});
    } else {
      raw.push_back(x);
    }
  };
  for (std::size_t j = 0; j < nf.exponents.size(); ++j) {
    const long long t = nf.exponents[j];
    AppendPower(raw, an, t >= 0 ? t + 1 : t - 1);
    if (j < nf.interleaved.size()) emit(nf.interleaved[j]);
  }
  std::vector<Letter> shifted;
  for (Letter x : raw) shifted.emplace_back(x.generator() - 1, x.sign());
  Word out(n - 1, shifted);
  if (out.size() != shifted.size()) Fail(ErrorKind::kDomain, "internal: surjection preimage not reduced");
  return out;
}

// --- QuasiMap

bool Chain::operator==(const Chain& other) const { return stages == other.stages; }

QuasiMap::QuasiMap(int dom_rank, int cod_rank, Body body)
    : dom_rank_(dom_rank), cod_rank_(cod_rank), body_(std::move(body)) {}

QuasiMap QuasiMap::Nielsen(NielsenWord nw) {
  const int r = nw.rank();
  return QuasiMap(r, r, std::move(nw));
}

QuasiMap QuasiMap::Local(LocalTransformation f) {
  const int d = f.dom_rank(), c = f.cod_rank();
  return QuasiMap(d, c, std::move(f));
}

QuasiMap QuasiMap::Wobble(int rank, WobblingMap sigma) {
  if (rank < 1 || rank > kMaxRank) Fail(ErrorKind::kRank, "rank out of range");
  return QuasiMap(rank, rank, std::move(sigma));
}

QuasiMap QuasiMap::Replace(int rank, ReplacementPair pair) {
  if (pair.w1.rank() != rank) Fail(ErrorKind::kRank, "replacement words do not match the map rank");
  return QuasiMap(rank, rank, std::move(pair));
}

QuasiMap QuasiMap::SurjectionMap(int n) {
  RequireSurjectionRank(n);
  if (n > kMaxRank) Fail(ErrorKind::kRank, "rank out of range");
  return QuasiMap(n - 1, n, Surjection{n});
}

QuasiMap QuasiMap::MakeChain(std::vector<QuasiMap> stages) {
  if (stages.empty()) Fail(ErrorKind::kDomain, "a chain needs at least one stage");
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    if (stages[i].cod_rank() != stages[i + 1].dom_rank()) Fail(ErrorKind::kRank, "chain stage ranks do not compose");
  }
  const int d = stages.front().dom_rank(), c = stages.back().cod_rank();
  return QuasiMap(d, c, Chain{std::move(stages)});
}

Word QuasiMap::Apply(const Word& g) const {
  RequireRank(g, dom_rank_);
  return std::visit(
      [&](const auto& b) -> Word {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, NielsenWord>) {
          return ApplyWord(b, g);
        } else if constexpr (std::is_same_v<B, LocalTransformation>) {
          return b.Apply(g);
        } else if constexpr (std::is_same_v<B, WobblingMap>) {
          return b.Apply(g);
        } else if constexpr (std::is_same_v<B, ReplacementPair>) {
          return ApplyReplacement(b, g);
        } else if constexpr (std::is_same_v<B, Surjection>) {
          return ApplySurjection(b.n, g);
        } else {
          Word x = g;
          for (const QuasiMap& stage : b.stages) x = stage.Apply(x);
          return x;
        }
      },
      body_);
}

QuasiMap Compose(const QuasiMap& q1, const QuasiMap& q2) {
  if (q1.cod_rank() != q2.dom_rank()) Fail(ErrorKind::kRank, "cannot compose: codomain rank differs from domain rank");
  return QuasiMap::MakeChain({q1, q2});
}

Rational PullbackEval(const QuasiMap& q, const QmExpr& e, const Word& g) {
  if (e.rank() != q.cod_rank()) Fail(ErrorKind::kRank, "expression rank differs from map codomain rank");
  return Eval(e, q.Apply(g));
}

std::optional<long long> CertificateRadius(const QuasiMap& q) {
  return std::visit(
      [](const auto& b) -> std::optional<long long> {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, NielsenWord>) {
          return 0;
        } else if constexpr (std::is_same_v<B, LocalTransformation>) {
          return static_cast<long long>((b.window() - 1) * b.max_image_length());
        } else if constexpr (std::is_same_v<B, WobblingMap>) {
          // sigma(i + j) - sigma(i) - sigma(j) at the junction run.
          return 3 * b.max_displacement();
        } else if constexpr (std::is_same_v<B, ReplacementPair>) {
          return static_cast<long long>(b.w1.size() + b.w2.size());
        } else if constexpr (std::is_same_v<B, Surjection>) {
          return 3;
        } else {
          return std::nullopt;
        }
      },
      q.body());
}

// --- map-spec JSON

namespace {

json BodyToJson(const QuasiMap& q);

json MapToJson(const QuasiMap& q) {
  return json{{"dom_rank", q.dom_rank()}, {"cod_rank", q.cod_rank()}, {"body", BodyToJson(q)}};
}

json BodyToJson(const QuasiMap& q) {
  return std::visit(
      [](const auto& b) -> json {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, NielsenWord>) {
          return {{"kind", "nielsen"}, {"moves", b.ToString()}};
        } else if constexpr (std::is_same_v<B, LocalTransformation>) {
          json table = json::object();
          for (const auto& [k, v] : b.table()) table[k.ToString()] = v.ToString();
          return {{"kind", "local"}, {"window", b.window()}, {"table", table}};
        } else if constexpr (std::is_same_v<B, WobblingMap>) {
          json ex = json::object();
          for (const auto& [k, v] : b.Exceptions()) ex[std::to_string(k)] = v;
          return {{"kind", "wobble"}, {"exceptions", ex}, {"tail_shift", b.tail_shift()}};
        } else if constexpr (std::is_same_v<B, ReplacementPair>) {
          return {{"kind", "replace"}, {"w1", b.w1.ToString()}, {"w2", b.w2.ToString()}};
        } else if constexpr (std::is_same_v<B, Surjection>) {
          return {{"kind", "surjection"}, {"n", b.n}};
        } else {
          json stages = json::array();
          for (const QuasiMap& s : b.stages) stages.push_back(MapToJson(s));
          return {{"kind", "chain"}, {"stages", stages}};
        }
      },
      q.body());
}

template <class T>
T Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Fail(ErrorKind::kParse, std::string("map spec is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    Fail(ErrorKind::kParse, std::string("map spec field '") + key + "' has the wrong type");
  }
}

long long ParseKey(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) Fail(ErrorKind::kParse, "wobble exception key '" + s + "' is not an integer");
  return v;
}

QuasiMap MapFromJson(const json& j) {
  const int dom = Field<int>(j, "dom_rank");
  const int cod = Field<int>(j, "cod_rank");
  if (dom < 1 || dom > kMaxRank || cod < 1 || cod > kMaxRank) Fail(ErrorKind::kRank, "map rank out of range");
  const json body = Field<json>(j, "body");
  const auto kind = Field<std::string>(body, "kind");
  const auto same_rank = [&] {
    if (dom != cod) Fail(ErrorKind::kRank, "map kind '" + kind + "' needs dom_rank = cod_rank");
  };
  std::optional<QuasiMap> q;
  if (kind == "nielsen") {
    same_rank();
    q = QuasiMap::Nielsen(NielsenWord::Parse(dom, Field<std::string>(body, "moves")));
  } else if (kind == "local") {
    LocalTransformation::Table table;
    const json t = Field<json>(body, "table");
    if (!t.is_object()) Fail(ErrorKind::kParse, "local table must be an object");
    for (const auto& [k, v] : t.items()) {
      if (!v.is_string()) Fail(ErrorKind::kParse, "local table values must be words");
      table.emplace(Word::Parse(dom, k), Word::Parse(cod, v.get<std::string>()));
    }
    q = QuasiMap::Local(LocalTransformation(dom, cod, Field<int>(body, "window"), std::move(table)));
  } else if (kind == "wobble") {
    same_rank();
    std::map<long long, long long> exceptions;
    const json ex = body.contains("exceptions") ? body.at("exceptions") : json::object();
    if (!ex.is_object()) Fail(ErrorKind::kParse, "wobble exceptions must be an object");
    for (const auto& [k, v] : ex.items()) {
      if (!v.is_number_integer()) Fail(ErrorKind::kParse, "wobble exception values must be integers");
      exceptions[ParseKey(k)] = v.get<long long>();
    }
    const long long shift = body.contains("tail_shift") ? Field<long long>(body, "tail_shift") : 0;
    q = QuasiMap::Wobble(dom, WobblingMap::FromExceptions(exceptions, shift));
  } else if (kind == "replace") {
    same_rank();
    q = QuasiMap::Replace(dom, ReplacementPair(Word::Parse(dom, Field<std::string>(body, "w1")),
                                               Word::Parse(dom, Field<std::string>(body, "w2"))));
  } else if (kind == "surjection") {
    q = QuasiMap::SurjectionMap(Field<int>(body, "n"));
  } else if (kind == "chain") {
    const json stages = Field<json>(body, "stages");
    if (!stages.is_array()) Fail(ErrorKind::kParse, "chain stages must be an array");
    std::vector<QuasiMap> parsed;
    for (const json& s : stages) parsed.push_back(MapFromJson(s));
    q = QuasiMap::MakeChain(std::move(parsed));
  } else {
    Fail(ErrorKind::kParse, "unknown map kind '" + kind + "'");
  }
  if (q->dom_rank() != dom || q->cod_rank() != cod) Fail(ErrorKind::kRank, "declared ranks do not match the map body");
  return *q;
}

}  // namespace

QuasiMap QuasiMap::FromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorKind::kParse, std::string("map spec is not valid JSON: ") + e.what());
  }
  return MapFromJson(j);
}

std::string QuasiMap::ToJson() const { return MapToJson(*this).dump(); }

}  // namespace qmfree
