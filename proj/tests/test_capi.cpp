#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qmfree/qmfree.h"

namespace {

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  qmf_string_free(s);
  return out;
}

qmf_word* Parse(int rank, const char* text) {
  qmf_word* w = nullptr;
  REQUIRE(qmf_word_parse(rank, text, &w) == QMF_OK);
  return w;
}

std::string Str(const qmf_word* w) {
  char* s = nullptr;
  REQUIRE(qmf_word_to_string(w, &s) == QMF_OK);
  return Take(s);
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("words") {
  qmf_word* w = Parse(2, "abBa");
  CHECK(Str(w) == "aa");
  CHECK(qmf_word_rank(w) == 2);
  CHECK(qmf_word_length(w) == 2);
  qmf_word* inv = nullptr;
  REQUIRE(qmf_word_invert(w, &inv) == QMF_OK);
  CHECK(Str(inv) == "AA");
  qmf_word* cat = nullptr;
  REQUIRE(qmf_word_concat(w, inv, &cat) == QMF_OK);
  CHECK(Str(cat).empty());
  qmf_word* p = nullptr;
  REQUIRE(qmf_word_power(w, -2, &p) == QMF_OK);
  CHECK(Str(p) == "AAAA");

  qmf_word* g = Parse(2, "bab");
  qmf_word *conj = nullptr, *core = nullptr;
  qmf_word* bab = Parse(2, "baB");
  REQUIRE(qmf_word_cyclic_reduce(bab, &conj, &core) == QMF_OK);
  qmf_word_free(bab);
  CHECK(Str(conj) == "b");
  CHECK(Str(core) == "a");
  char* nf = nullptr;
  REQUIRE(qmf_word_normal_form_json(g, 2, &nf) == QMF_OK);
  const auto j = nlohmann::json::parse(Take(nf));
  CHECK(j.at("exponents") == nlohmann::json::array({1, 1}));
  qmf_word* t = nullptr;
  REQUIRE(qmf_word_truncate(g, 2, &t) == QMF_OK);
  CHECK(Str(t) == "a");
  for (qmf_word* x : {w, inv, cat, p, g, conj, core, t}) qmf_word_free(x);
}

TEST_CASE("errors set a status and a message") {
  qmf_word* w = nullptr;
  CHECK(qmf_word_parse(2, "abc", &w) == QMF_ERR_RANK);
  CHECK(w == nullptr);
  CHECK(std::string(qmf_last_error()).size() > 0);
  CHECK(qmf_word_parse(2, "a?", &w) == QMF_ERR_PARSE);
  CHECK(qmf_word_parse(2, nullptr, &w) == QMF_ERR_INVALID_ARG);
  CHECK(std::string(qmf_status_name(QMF_ERR_NOT_STABILIZED)).size() > 0);
  char* out = nullptr;
  CHECK(qmf_verify_json("nope", 2, 3, 0, &out) == QMF_ERR_UNKNOWN_CHECK);
  qmf_expr* e = nullptr;
  CHECK(qmf_expr_parse(2, "N[aBb]", &e) == QMF_ERR_PARSE);
  CHECK(std::string(qmf_version()).size() > 0);
}

TEST_CASE("counting and expressions") {
  qmf_word* ss = Parse(19, "ss");
  qmf_word* text = Parse(19, "sssss");
  uint64_t n = 0;
  REQUIRE(qmf_count(ss, text, 0, &n) == QMF_OK);
  CHECK(n == 4);
  REQUIRE(qmf_count(ss, text, 1, &n) == QMF_OK);
  CHECK(n == 2);

  qmf_expr* e = nullptr;
  REQUIRE(qmf_expr_parse(2, "N[aa]", &e) == QMF_OK);
  qmf_word* a = Parse(2, "a");
  char* s = nullptr;
  REQUIRE(qmf_homogenize(e, a, &s) == QMF_OK);
  CHECK(Take(s) == "1/2");
  qmf_word* aaa = Parse(2, "aaa");
  REQUIRE(qmf_eval(e, aaa, &s) == QMF_OK);
  CHECK(Take(s) == "1");
  REQUIRE(qmf_expr_to_string(e, &s) == QMF_OK);
  CHECK(Take(s) == "N[aa]");
  REQUIRE(qmf_defect_scan_json(e, 3, 0, 0, &s) == QMF_OK);
  CHECK(nlohmann::json::parse(Take(s)).contains("observed_sup"));
  for (qmf_word* x : {ss, text, a, aaa}) qmf_word_free(x);
  qmf_expr_free(e);
}

TEST_CASE("nielsen") {
  qmf_word* a = Parse(2, "a");
  qmf_word* out = nullptr;
  REQUIRE(qmf_nielsen_apply("T", a, &out) == QMF_OK);
  CHECK(Str(out) == "ab");
  qmf_word_free(out);
  CHECK(qmf_nielsen_apply("Q", a, &out) == QMF_ERR_PARSE);
  qmf_expr* e = nullptr;
  REQUIRE(qmf_expr_parse(2, "C[b]", &e) == QMF_OK);
  char* s = nullptr;
  REQUIRE(qmf_nielsen_pullback_json("T", e, &s) == QMF_OK);
  CHECK(Take(s) == R"({"error_bound":"0","expr":"C[a] + C[b]"})");
  qmf_expr_free(e);
  qmf_word_free(a);
}

TEST_CASE("independence") {
  qmf_word* u = Parse(2, "aBAb");
  qmf_word* v = Parse(2, "ab");
  qmf_word* x = Parse(2, "aabb");
  int flag = -1;
  qmf_word* ba = Parse(2, "ba");
  REQUIRE(qmf_overlaps(v, ba, &flag) == QMF_OK);
  CHECK(flag == 1);
  qmf_word_free(ba);
  const qmf_word* bad[] = {u, v};
  const qmf_word* good[] = {u, x};
  REQUIRE(qmf_is_independent(bad, 2, &flag) == QMF_OK);
  CHECK(flag == 0);
  REQUIRE(qmf_is_independent(good, 2, &flag) == QMF_OK);
  CHECK(flag == 1);
  char* s = nullptr;
  REQUIRE(qmf_grig_enumerate_json(2, nullptr, 3, &s) == QMF_OK);
  const auto j = nlohmann::json::parse(Take(s));
  CHECK(j.at("members").size() == 8);
  CHECK(qmf_grig_enumerate_json(2, "aAb", 3, &s) == QMF_ERR_PARSE);
  for (qmf_word* w : {u, v, x}) qmf_word_free(w);
}

TEST_CASE("maps") {
  qmf_map* m = nullptr;
  REQUIRE(qmf_map_from_json(R"({"dom_rank":2,"cod_rank":2,"body":{"kind":"replace","w1":"aBAb","w2":"aabb"}})", &m) ==
          QMF_OK);
  CHECK(qmf_map_dom_rank(m) == 2);
  qmf_word* g = Parse(2, "aBAbaabb");
  qmf_word* out = nullptr;
  REQUIRE(qmf_map_apply(m, g, &out) == QMF_OK);
  CHECK(Str(out) == "aabbaBAb");
  qmf_map* twice = nullptr;
  REQUIRE(qmf_map_compose(m, m, &twice) == QMF_OK);
  qmf_word* back = nullptr;
  REQUIRE(qmf_map_apply(twice, g, &back) == QMF_OK);
  CHECK(Str(back) == "aBAbaabb");
  char* s = nullptr;
  REQUIRE(qmf_map_to_json(m, &s) == QMF_OK);
  CHECK(nlohmann::json::parse(Take(s)).at("body").at("kind") == "replace");
  qmf_map* bad = nullptr;
  CHECK(qmf_map_from_json(R"({"dom_rank":2,"cod_rank":2,"body":{"kind":"replace","w1":"aBAb","w2":"ab"}})", &bad) ==
        QMF_ERR_DOMAIN);
  qmf_map* surj = nullptr;
  REQUIRE(qmf_map_from_json(R"({"dom_rank":3,"cod_rank":4,"body":{"kind":"surjection","n":4}})", &surj) == QMF_OK);
  qmf_word* target = Parse(4, "dA");
  qmf_word* pre = nullptr;
  REQUIRE(qmf_surjection_preimage(4, target, &pre) == QMF_OK);
  qmf_word* img = nullptr;
  REQUIRE(qmf_map_apply(surj, pre, &img) == QMF_OK);
  CHECK(Str(img) == "dA");
  qmf_word* none = nullptr;
  CHECK(qmf_map_apply(surj, target, &none) == QMF_ERR_RANK);
  CHECK(none == nullptr);
  for (qmf_word* w : {g, out, back, target, pre, img}) qmf_word_free(w);
  for (qmf_map* x : {m, twice, surj}) qmf_map_free(x);
}

TEST_CASE("verification") {
  char* s = nullptr;
  REQUIRE(qmf_list_checks_json(&s) == QMF_OK);
  CHECK(nlohmann::json::parse(Take(s)).size() == 15);
  REQUIRE(qmf_verify_json("P5.1-power-values", 2, -1, 0, &s) == QMF_OK);
  const auto j = nlohmann::json::parse(Take(s));
  CHECK(j.at("pass") == true);
  CHECK(j.at("lemma") == "P5.1-power-values");
}

}
