#include "qmfree/qmfree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "qmfree/counting.hpp"
#include "qmfree/error.hpp"
#include "qmfree/independence.hpp"
#include "qmfree/nielsen.hpp"
#include "qmfree/quasimaps.hpp"
#include "qmfree/verify.hpp"

struct qmf_word {
  qmfree::Word value;
};
struct qmf_expr {
  qmfree::QmExpr value;
};
struct qmf_map {
  qmfree::QuasiMap value;
};

namespace {

using namespace qmfree;

thread_local std::string last_error;

qmf_status StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return QMF_ERR_PARSE;
    case ErrorKind::kRank:
      return QMF_ERR_RANK;
    case ErrorKind::kDomain:
      return QMF_ERR_DOMAIN;
    case ErrorKind::kNotStabilized:
      return QMF_ERR_NOT_STABILIZED;
    case ErrorKind::kUnknownCheck:
      return QMF_ERR_UNKNOWN_CHECK;
  }
  return QMF_ERR_INTERNAL;
}

template <class F>
qmf_status Guard(F&& f) {
  last_error.clear();
  try {
    f();
    return QMF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return StatusOf(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return QMF_ERR_INTERNAL;
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kDomain, what);
}

#define QMF_REQUIRE_ARGS(cond)                      \
  do {                                              \
    if (!(cond)) {                                  \
      last_error = "null argument";                 \
      return QMF_ERR_INVALID_ARG;                   \
    }                                               \
  } while (0)

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qmf_word* NewWord(Word w) { return new qmf_word{std::move(w)}; }

Letter GeneratorLetter(const Word& w, int b) {
  if (b < 1 || b > w.rank()) throw Error(ErrorKind::kRank, "generator number out of range");
  return Letter(b, +1);
}

}  // namespace

extern "C" {

const char* qmf_version(void) { return "0.1.0"; }

const char* qmf_status_name(qmf_status status) {
  switch (status) {
    case QMF_OK:
      return "ok";
    case QMF_ERR_PARSE:
      return "parse";
    case QMF_ERR_RANK:
      return "rank";
    case QMF_ERR_DOMAIN:
      return "domain";
    case QMF_ERR_NOT_STABILIZED:
      return "not_stabilized";
    case QMF_ERR_UNKNOWN_CHECK:
      return "unknown_check";
    case QMF_ERR_INVALID_ARG:
      return "invalid_argument";
    case QMF_ERR_INTERNAL:
      return "internal";
  }
  return "internal";
}

const char* qmf_last_error(void) { return last_error.c_str(); }

void qmf_string_free(char* s) { std::free(s); }

qmf_status qmf_word_parse(int rank, const char* text, qmf_word** out) {
  QMF_REQUIRE_ARGS(text && out);
  return Guard([&] { *out = NewWord(Word::Parse(rank, text)); });
}

void qmf_word_free(qmf_word* w) { delete w; }

qmf_status qmf_word_to_string(const qmf_word* w, char** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] { *out = CopyString(w->value.ToString()); });
}

int qmf_word_rank(const qmf_word* w) { return w ? w->value.rank() : 0; }

size_t qmf_word_length(const qmf_word* w) { return w ? w->value.size() : 0; }

qmf_status qmf_word_concat(const qmf_word* u, const qmf_word* v, qmf_word** out) {
  QMF_REQUIRE_ARGS(u && v && out);
  return Guard([&] { *out = NewWord(Concat(u->value, v->value)); });
}

qmf_status qmf_word_invert(const qmf_word* w, qmf_word** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] { *out = NewWord(Invert(w->value)); });
}

qmf_status qmf_word_power(const qmf_word* w, long long m, qmf_word** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] { *out = NewWord(Power(w->value, m)); });
}

qmf_status qmf_word_cyclic_reduce(const qmf_word* w, qmf_word** conjugator, qmf_word** core) {
  QMF_REQUIRE_ARGS(w && conjugator && core);
  return Guard([&] {
    CyclicReduction r = CyclicReduce(w->value);
    *conjugator = NewWord(std::move(r.conjugator));
    *core = NewWord(std::move(r.core));
  });
}

qmf_status qmf_word_normal_form_json(const qmf_word* w, int b, char** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] {
    const NormalForm nf = ComputeNormalForm(w->value, GeneratorLetter(w->value, b));
    std::string letters;
    for (Letter x : nf.interleaved) letters.push_back(x.ToChar());
    const nlohmann::json j = {{"exponents", nf.exponents}, {"letters", letters}};
    *out = CopyString(j.dump());
  });
}

qmf_status qmf_word_truncate(const qmf_word* w, int b, qmf_word** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] { *out = NewWord(Truncate(w->value, GeneratorLetter(w->value, b))); });
}

qmf_status qmf_count(const qmf_word* pattern, const qmf_word* text, int non_overlapping, uint64_t* out) {
  QMF_REQUIRE_ARGS(pattern && text && out);
  return Guard([&] {
    const CountKind kind = non_overlapping ? CountKind::kNonOverlapping : CountKind::kOverlapping;
    *out = Count(kind, pattern->value, text->value);
  });
}

qmf_status qmf_expr_parse(int rank, const char* text, qmf_expr** out) {
  QMF_REQUIRE_ARGS(text && out);
  return Guard([&] { *out = new qmf_expr{QmExpr::Parse(rank, text)}; });
}

void qmf_expr_free(qmf_expr* e) { delete e; }

qmf_status qmf_expr_to_string(const qmf_expr* e, char** out) {
  QMF_REQUIRE_ARGS(e && out);
  return Guard([&] { *out = CopyString(e->value.ToString()); });
}

qmf_status qmf_eval(const qmf_expr* e, const qmf_word* g, char** out) {
  QMF_REQUIRE_ARGS(e && g && out);
  return Guard([&] { *out = CopyString(FormatRational(Eval(e->value, g->value))); });
}

qmf_status qmf_homogenize(const qmf_expr* e, const qmf_word* g, char** out) {
  QMF_REQUIRE_ARGS(e && g && out);
  return Guard([&] { *out = CopyString(FormatRational(HomogenizeEval(e->value, g->value))); });
}

qmf_status qmf_defect_scan_json(const qmf_expr* e, int max_len, uint64_t samples, uint64_t seed, char** out) {
  QMF_REQUIRE_ARGS(e && out);
  return Guard([&] {
    Require(max_len >= 1, "defect scan needs max_len >= 1");
    const PairSampler sampler = samples == 0 ? PairSampler::Exhaustive() : PairSampler::Seeded(samples, seed);
    const DefectScanResult r = DefectScan(e->value, max_len, sampler);
    const std::string space = r.exhaustive ? "exhaustive,maxlen=" + std::to_string(r.exhaustive_up_to)
                                           : "sampled(n=" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")";
    const nlohmann::json j = {
        {"observed_sup", FormatRational(r.observed_sup)},
        {"witness", {r.u.ToString(), r.v.ToString()}},
        {"space", space},
        {"pairs", r.pairs},
    };
    *out = CopyString(j.dump());
  });
}

qmf_status qmf_nielsen_apply(const char* moves, const qmf_word* g, qmf_word** out) {
  QMF_REQUIRE_ARGS(moves && g && out);
  return Guard([&] { *out = NewWord(ApplyWord(NielsenWord::Parse(g->value.rank(), moves), g->value)); });
}

qmf_status qmf_nielsen_pullback_json(const char* moves, const qmf_expr* e, char** out) {
  QMF_REQUIRE_ARGS(moves && e && out);
  return Guard([&] {
    const RewriteResult r = PullbackExpr(NielsenWord::Parse(e->value.rank(), moves), e->value);
    const nlohmann::json j = {{"expr", r.expr.ToString()}, {"error_bound", FormatRational(r.error_bound)}};
    *out = CopyString(j.dump());
  });
}

qmf_status qmf_overlaps(const qmf_word* u, const qmf_word* v, int* out) {
  QMF_REQUIRE_ARGS(u && v && out);
  return Guard([&] {
    if (u->value.rank() != v->value.rank()) throw Error(ErrorKind::kRank, "words have different ranks");
    *out = Overlaps(u->value, v->value) ? 1 : 0;
  });
}

qmf_status qmf_is_independent(const qmf_word* const* words, size_t count, int* out) {
  QMF_REQUIRE_ARGS((words || count == 0) && out);
  return Guard([&] {
    std::vector<Word> ws;
    for (size_t i = 0; i < count; ++i) {
      if (!words[i]) throw Error(ErrorKind::kDomain, "null word in set");
      if (!ws.empty() && words[i]->value.rank() != ws.front().rank()) throw Error(ErrorKind::kRank, "words have different ranks");
      ws.push_back(words[i]->value);
    }
    *out = IsIndependentSet(ws) ? 1 : 0;
  });
}

qmf_status qmf_grig_enumerate_json(int rank, const char* order, int max_len, char** out) {
  QMF_REQUIRE_ARGS(out);
  return Guard([&] {
    Require(max_len >= 0, "max_len must be >= 0");
    const LetterOrder o = order ? LetterOrder::Parse(rank, order) : LetterOrder::Default(rank);
    *out = CopyString(GrigorchukEnumerate(rank, o, max_len).ToJson());
  });
}

qmf_status qmf_map_from_json(const char* spec, qmf_map** out) {
  QMF_REQUIRE_ARGS(spec && out);
  return Guard([&] { *out = new qmf_map{QuasiMap::FromJson(spec)}; });
}

void qmf_map_free(qmf_map* m) { delete m; }

qmf_status qmf_map_to_json(const qmf_map* m, char** out) {
  QMF_REQUIRE_ARGS(m && out);
  return Guard([&] { *out = CopyString(m->value.ToJson()); });
}

int qmf_map_dom_rank(const qmf_map* m) { return m ? m->value.dom_rank() : 0; }

int qmf_map_cod_rank(const qmf_map* m) { return m ? m->value.cod_rank() : 0; }

qmf_status qmf_map_apply(const qmf_map* m, const qmf_word* g, qmf_word** out) {
  QMF_REQUIRE_ARGS(m && g && out);
  return Guard([&] { *out = NewWord(m->value.Apply(g->value)); });
}

qmf_status qmf_map_compose(const qmf_map* first, const qmf_map* second, qmf_map** out) {
  QMF_REQUIRE_ARGS(first && second && out);
  return Guard([&] { *out = new qmf_map{Compose(first->value, second->value)}; });
}

qmf_status qmf_surjection_preimage(int n, const qmf_word* w, qmf_word** out) {
  QMF_REQUIRE_ARGS(w && out);
  return Guard([&] { *out = NewWord(SurjectionPreimage(n, w->value)); });
}

qmf_status qmf_verify_json(const char* id, int rank, int max_len, uint64_t seed, char** out) {
  QMF_REQUIRE_ARGS(id && out);
  return Guard([&] {
    CheckParams params;
    params.rank = rank;
    if (max_len >= 0) params.max_len = max_len;
    params.seed = seed;
    *out = CopyString(RunCheck(id, params).ToJson());
  });
}

qmf_status qmf_list_checks_json(char** out) {
  QMF_REQUIRE_ARGS(out);
  return Guard([&] { *out = CopyString(ListChecksJson()); });
}

}  // extern "C"
