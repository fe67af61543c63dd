// qmfree: command-line front end over the C API.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmfree/qmfree.h"

namespace {

using nlohmann::json;

// A failed library call; carries the status for the exit code and JSON error.
struct CallError {
  qmf_status status;
  std::string message;
};

void Check(qmf_status s) {
  if (s != QMF_OK) throw CallError{s, qmf_last_error()};
}

struct WordDeleter {
  void operator()(qmf_word* w) const { qmf_word_free(w); }
};
struct ExprDeleter {
  void operator()(qmf_expr* e) const { qmf_expr_free(e); }
};
struct MapDeleter {
  void operator()(qmf_map* m) const { qmf_map_free(m); }
};
using WordPtr = std::unique_ptr<qmf_word, WordDeleter>;
using ExprPtr = std::unique_ptr<qmf_expr, ExprDeleter>;
using MapPtr = std::unique_ptr<qmf_map, MapDeleter>;

std::string Take(char* s) {
  std::string out(s);
  qmf_string_free(s);
  return out;
}

WordPtr ParseWord(int rank, const std::string& text) {
  qmf_word* w = nullptr;
  Check(qmf_word_parse(rank, text.c_str(), &w));
  return WordPtr(w);
}

ExprPtr ParseExpr(int rank, const std::string& text) {
  qmf_expr* e = nullptr;
  Check(qmf_expr_parse(rank, text.c_str(), &e));
  return ExprPtr(e);
}

std::string ToString(const qmf_word* w) {
  char* s = nullptr;
  Check(qmf_word_to_string(w, &s));
  return Take(s);
}

MapPtr LoadMap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CallError{QMF_ERR_INVALID_ARG, "cannot read map spec '" + path + "'"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  qmf_map* m = nullptr;
  Check(qmf_map_from_json(buffer.str().c_str(), &m));
  return MapPtr(m);
}

// Without --rank: the largest generator mentioned, and at least 2. In
// expressions only the bracketed patterns count.
int InferRank(std::optional<int> given, const std::vector<std::string>& words, const std::vector<std::string>& exprs) {
  if (given) return *given;
  int rank = 2;
  const auto see = [&](char c) {
    if (c >= 'a' && c <= 'z') rank = std::max(rank, c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') rank = std::max(rank, c - 'A' + 1);
  };
  for (const auto& w : words) {
    for (char c : w) see(c);
  }
  for (const auto& e : exprs) {
    bool inside = false;
    for (char c : e) {
      if (c == '[') inside = true;
      else if (c == ']') inside = false;
      else if (inside) see(c);
    }
  }
  return rank;
}

struct Output {
  bool as_json = false;

  // `text` is printed in plain mode, `value` inside the JSON envelope.
  void Emit(const std::string& text, const json& value) const {
    if (as_json) {
      std::cout << json{{"version", 1}, {"result", value}}.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting quasimorphisms and quasimorphisms of free groups"};
  app.require_subcommand(1);
  bool as_json = false;
  std::optional<int> rank_flag;
  app.add_flag("--json", as_json, "Emit a versioned JSON envelope");
  app.add_option("--rank", rank_flag, "Rank of the free group (default: inferred, at least 2)")->check(CLI::Range(1, 26));

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  std::string word;
  reduce->add_option("word", word, "Word over a..z / A..Z")->required();
  reduce->fallthrough();

  // count
  auto* count = app.add_subcommand("count", "Count occurrences of a pattern");
  std::string pattern;
  bool non_overlapping = false;
  count->add_option("--pattern", pattern, "Pattern word")->required();
  count->add_flag("--non-overlapping", non_overlapping, "Count disjoint occurrences");
  count->add_option("text", word, "Text word")->required();
  count->fallthrough();

  // eval / homogenize
  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression at a word");
  eval->add_option("--expr", expr, "Expression such as \"C[ab] - 2/3*N[aBb]\"")->required();
  eval->add_option("word", word)->required();
  eval->fallthrough();
  auto* homogenize = app.add_subcommand("homogenize", "Homogenized value of an expression at a word");
  homogenize->add_option("--expr", expr)->required();
  homogenize->add_option("word", word)->required();
  homogenize->fallthrough();

  // defect
  auto* defect = app.add_subcommand("defect", "Lower bound for the defect by scanning pairs");
  int defect_len = 4;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  defect->add_option("--expr", expr)->required();
  defect->add_option("--max-len", defect_len, "Length bound for u and v")->check(CLI::Range(1, 64));
  defect->add_option("--samples", samples, "Random pairs instead of all pairs (0: exhaustive)");
  defect->add_option("--seed", seed);
  defect->fallthrough();

  // nielsen apply | pullback
  auto* nielsen = app.add_subcommand("nielsen", "Nielsen transformations");
  nielsen->require_subcommand(1);
  std::string moves;
  auto* n_apply = nielsen->add_subcommand("apply", "Apply moves (first listed acts first)");
  n_apply->add_option("--moves", moves, "Comma-separated moves: P1,P2,I,T,Tinv")->required();
  n_apply->add_option("word", word)->required();
  n_apply->fallthrough();
  auto* n_pull = nielsen->add_subcommand("pullback", "Rewrite the pullback of an expression");
  n_pull->add_option("--moves", moves)->required();
  n_pull->add_option("--expr", expr)->required();
  n_pull->fallthrough();
  nielsen->fallthrough();

  // grig enum
  auto* grig = app.add_subcommand("grig", "Grigorchuk family");
  grig->require_subcommand(1);
  auto* grig_enum = grig->add_subcommand("enum", "Enumerate family members");
  int grig_len = 4;
  std::optional<std::string> order;
  grig_enum->add_option("--max-len", grig_len)->check(CLI::Range(0, 32));
  grig_enum->add_option("--order", order, "Letter order, e.g. aAbB");
  grig_enum->fallthrough();
  grig->fallthrough();

  // indep
  auto* indep = app.add_subcommand("indep", "Is the set of words independent?");
  std::vector<std::string> words;
  indep->add_option("words", words)->required();
  indep->fallthrough();

  // map apply | compose
  auto* map = app.add_subcommand("map", "Quasimorphisms given by map-spec files");
  map->require_subcommand(1);
  std::vector<std::string> specs;
  auto* m_apply = map->add_subcommand("apply", "Apply a map to a word");
  m_apply->add_option("--spec", specs, "Map-spec JSON file")->required()->expected(1);
  m_apply->add_option("word", word)->required();
  m_apply->fallthrough();
  auto* m_compose = map->add_subcommand("compose", "Compose maps; the first spec acts first");
  m_compose->add_option("--spec", specs)->required()->expected(2);
  m_compose->fallthrough();
  map->fallthrough();

  // preimage
  auto* preimage = app.add_subcommand("preimage", "Preimage under the surjection F_{n-1} -> F_n");
  int n = 4;
  preimage->add_option("--n", n)->required()->check(CLI::Range(1, 26));
  preimage->add_option("word", word)->required();
  preimage->fallthrough();

  // verify / list-checks
  auto* verify = app.add_subcommand("verify", "Run a registered check");
  std::string check_id;
  int check_len = -1;
  verify->add_option("id", check_id)->required();
  verify->add_option("--max-len", check_len, "Length bound (default: per check)");
  verify->add_option("--seed", seed);
  verify->fallthrough();
  auto* list_checks = app.add_subcommand("list-checks", "List registered checks");
  list_checks->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Output out{as_json};
  try {
    if (*reduce) {
      const auto w = ParseWord(InferRank(rank_flag, {word}, {}), word);
      const auto s = ToString(w.get());
      out.Emit(s, s);
    } else if (*count) {
      const int rank = InferRank(rank_flag, {pattern, word}, {});
      const auto p = ParseWord(rank, pattern);
      const auto t = ParseWord(rank, word);
      std::uint64_t c = 0;
      Check(qmf_count(p.get(), t.get(), non_overlapping ? 1 : 0, &c));
      out.Emit(std::to_string(c), c);
    } else if (*eval || *homogenize) {
      const int rank = InferRank(rank_flag, {word}, {expr});
      const auto e = ParseExpr(rank, expr);
      const auto w = ParseWord(rank, word);
      char* s = nullptr;
      Check(*eval ? qmf_eval(e.get(), w.get(), &s) : qmf_homogenize(e.get(), w.get(), &s));
      const auto value = Take(s);
      out.Emit(value, value);
    } else if (*defect) {
      const auto e = ParseExpr(InferRank(rank_flag, {}, {expr}), expr);
      char* s = nullptr;
      Check(qmf_defect_scan_json(e.get(), defect_len, samples, seed, &s));
      const json r = json::parse(Take(s));
      out.Emit(r["observed_sup"].get<std::string>() + " at (" + r["witness"][0].get<std::string>() + ", " +
                   r["witness"][1].get<std::string>() + ") " + r["space"].get<std::string>(),
               r);
    } else if (*n_apply) {
      const auto w = ParseWord(InferRank(rank_flag, {word}, {}), word);
      qmf_word* image = nullptr;
      Check(qmf_nielsen_apply(moves.c_str(), w.get(), &image));
      const auto s = ToString(WordPtr(image).get());
      out.Emit(s, s);
    } else if (*n_pull) {
      const auto e = ParseExpr(InferRank(rank_flag, {}, {expr}), expr);
      char* s = nullptr;
      Check(qmf_nielsen_pullback_json(moves.c_str(), e.get(), &s));
      const json r = json::parse(Take(s));
      out.Emit(r["expr"].get<std::string>() + "  (error bound " + r["error_bound"].get<std::string>() + ")", r);
    } else if (*grig_enum) {
      char* s = nullptr;
      Check(qmf_grig_enumerate_json(rank_flag.value_or(2), order ? order->c_str() : nullptr, grig_len, &s));
      const json r = json::parse(Take(s));
      std::string text;
      for (const auto& m : r["members"]) text += (text.empty() ? "" : " ") + m.get<std::string>();
      out.Emit(text, r);
    } else if (*indep) {
      const int rank = InferRank(rank_flag, words, {});
      std::vector<WordPtr> parsed;
      std::vector<const qmf_word*> raw;
      for (const auto& w : words) {
        parsed.push_back(ParseWord(rank, w));
        raw.push_back(parsed.back().get());
      }
      int result = 0;
      Check(qmf_is_independent(raw.data(), raw.size(), &result));
      out.Emit(result ? "true" : "false", json{{"independent", result != 0}, {"words", words}});
    } else if (*m_apply) {
      const auto m = LoadMap(specs.front());
      const auto w = ParseWord(qmf_map_dom_rank(m.get()), word);
      qmf_word* image = nullptr;
      Check(qmf_map_apply(m.get(), w.get(), &image));
      const auto s = ToString(WordPtr(image).get());
      out.Emit(s, s);
    } else if (*m_compose) {
      const auto first = LoadMap(specs[0]);
      const auto second = LoadMap(specs[1]);
      qmf_map* composed = nullptr;
      Check(qmf_map_compose(first.get(), second.get(), &composed));
      const MapPtr owner(composed);
      char* s = nullptr;
      Check(qmf_map_to_json(composed, &s));
      const auto spec = Take(s);
      out.Emit(spec, json::parse(spec));
    } else if (*preimage) {
      const auto w = ParseWord(n, word);
      qmf_word* pre = nullptr;
      Check(qmf_surjection_preimage(n, w.get(), &pre));
      const auto s = ToString(WordPtr(pre).get());
      out.Emit(s, s);
    } else if (*verify) {
      char* s = nullptr;
      Check(qmf_verify_json(check_id.c_str(), rank_flag.value_or(2), check_len, seed, &s));
      const json r = json::parse(Take(s));
      const std::string claimed = r["claimed"].is_string() ? r["claimed"].get<std::string>() : r["claimed"].dump();
      out.Emit(std::string(r["pass"].get<bool>() ? "PASS " : "FAIL ") + r["lemma"].get<std::string>() +
                   " observed=" + r["observed"].get<std::string>() + " claimed=" + claimed + " space=" +
                   r["space"].get<std::string>() + " witness=" + r["witness"].dump(),
               r);
      return r["pass"].get<bool>() ? 0 : 1;
    } else if (*list_checks) {
      char* s = nullptr;
      Check(qmf_list_checks_json(&s));
      const json r = json::parse(Take(s));
      std::string text;
      for (const auto& c : r) {
        if (!text.empty()) text += "\n";
        text += c["id"].get<std::string>() + "  " + c["description"].get<std::string>();
      }
      out.Emit(text, r);
    }
  } catch (const CallError& e) {
    if (as_json) {
      std::cout << json{{"version", 1}, {"error", {{"code", qmf_status_name(e.status)}, {"message", e.message}}}}.dump()
                << "\n";
    } else {
      std::cerr << "error (" << qmf_status_name(e.status) << "): " << e.message << "\n";
    }
    return e.status == QMF_ERR_INVALID_ARG ? 2 : 1;
  }
  return 0;
}
