#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "oind.h"

namespace {

struct ModelGuard {
  oind_model* m = nullptr;
  ~ModelGuard() { oind_model_close(m); }
};

struct ResultGuard {
  oind_result r{OIND_UNKNOWN, nullptr, nullptr, nullptr};
  ~ResultGuard() { oind_result_clear(&r); }
};

int open_model(const std::string& ref, ModelGuard& guard) {
  oind_status st;
  if (ref.rfind("zoo:", 0) == 0) {
    st = oind_model_open_zoo(ref.substr(4).c_str(), &guard.m);
  } else if (ref.rfind("file:", 0) == 0) {
    std::ifstream in(ref.substr(5));
    if (!in) {
      std::cerr << "error: cannot open " << ref.substr(5) << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    st = oind_model_open_json(ss.str().c_str(), &guard.m);
  } else {
    std::cerr << "error: --model expects zoo:<name> or file:<path>\n";
    return 2;
  }
  if (st != OIND_OK) {
    std::cerr << "error: " << oind_last_error() << "\n";
    return 2;
  }
  return 0;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

const char* verdict_name(oind_verdict v) {
  switch (v) {
    case OIND_HOLDS: return "holds";
    case OIND_HOLDS_BOUNDED: return "holds(bounded)";
    case OIND_FAILS: return "fails";
    case OIND_UNKNOWN: return "unknown";
  }
  return "?";
}

int emit_result(const oind_result& r, const std::string& format) {
  if (format == "json") {
    std::cout << "{\"verdict\":\"" << verdict_name(r.verdict) << "\",";
    std::cout << "\"witness\":"
              << (r.witness ? "\"" + json_escape(r.witness) + "\"" : std::string("null")) << ",";
    std::cout << "\"method\":"
              << (r.method ? "\"" + json_escape(r.method) + "\"" : std::string("null")) << ",";
    std::cout << "\"note\":" << (r.note ? "\"" + json_escape(r.note) + "\"" : std::string("null"))
              << "}\n";
  } else {
    std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.witness) std::cout << "witness: " << r.witness << "\n";
    if (r.method) std::cout << "method: " << r.method << "\n";
    if (r.note) std::cout << "note: " << r.note << "\n";
  }
  switch (r.verdict) {
    case OIND_HOLDS:
    case OIND_HOLDS_BOUNDED: return 0;
    case OIND_FAILS: return 1;
    case OIND_UNKNOWN: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks of induction schemes and arithmetic axioms over small models"};
  app.require_subcommand(1);

  std::string model_ref, axiom, sentence, scheme, format = "md", sig, catalog = "data/catalog.json";
  oind_options opt{0, 0};
  unsigned max_size = 6;

  auto add_common = [&](CLI::App* cmd, bool with_model) {
    if (with_model)
      cmd->add_option("--model", model_ref, "zoo:<name> or file:<path>")->required();
    cmd->add_option("--slice", opt.slice, "probe bound for infinite models");
    cmd->add_option("--format", format, "json or md");
  };

  auto* check = app.add_subcommand("check", "evaluate an axiom or sentence in a model");
  add_common(check, true);
  auto* ax_opt = check->add_option("--axiom", axiom, "axiom id, e.g. A1, B(1,2), C(2)");
  auto* sent_opt = check->add_option("--sentence", sentence, "prenex sentence text");
  ax_opt->excludes(sent_opt);

  auto* decide = app.add_subcommand("decide", "decide an induction scheme");
  add_common(decide, true);
  decide->add_option("--scheme", scheme, "iatom | iliteral | iclause | idclause")->required();
  decide->add_option("--max-term-size", max_size, "search bound on non-decidable models");

  auto* search = app.add_subcommand("search", "search for a failing induction instance");
  add_common(search, true);
  search->add_option("--scheme", scheme, "iatom | iliteral | iclause | idclause | iopen")
      ->required();
  search->add_option("--max-term-size", max_size, "total term size bound");
  search->add_option("--sig", sig, "restrict search terms to a sub-signature, e.g. 0s");

  auto* verify = app.add_subcommand("verify-paper", "re-run the full result catalog");
  add_common(verify, false);
  verify->add_option("--catalog", catalog, "catalog manifest path");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    if (axiom.empty() == sentence.empty()) {
      std::cerr << "error: check needs exactly one of --axiom / --sentence\n";
      return 2;
    }
    ModelGuard m;
    if (int rc = open_model(model_ref, m)) return rc;
    ResultGuard res;
    oind_status st = axiom.empty()
                         ? oind_check_sentence(m.m, sentence.c_str(), &opt, &res.r)
                         : oind_check_axiom(m.m, axiom.c_str(), &opt, &res.r);
    if (st != OIND_OK) {
      std::cerr << "error: " << oind_last_error() << "\n";
      return 2;
    }
    return emit_result(res.r, format);
  }

  if (decide->parsed() || search->parsed()) {
    ModelGuard m;
    if (int rc = open_model(model_ref, m)) return rc;
    ResultGuard res;
    oind_status st;
    if (decide->parsed()) {
      opt.max_term_size = max_size;
      st = oind_decide_scheme(m.m, scheme.c_str(), &opt, &res.r);
    } else {
      st = oind_witness_search(m.m, scheme.c_str(), max_size, sig.empty() ? nullptr : sig.c_str(),
                               &opt, &res.r);
    }
    if (st != OIND_OK) {
      std::cerr << "error: " << oind_last_error() << "\n";
      return 2;
    }
    return emit_result(res.r, format);
  }

  // verify-paper
  std::ifstream in(catalog);
  if (!in) {
    std::cerr << "error: cannot open catalog " << catalog << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  char* report = nullptr;
  int pass = 0;
  oind_status st = oind_run_catalog(ss.str().c_str(), format.c_str(), &opt, &report, &pass);
  if (st != OIND_OK) {
    std::cerr << "error: " << oind_last_error() << "\n";
    return 2;
  }
  std::cout << report;
  oind_string_free(report);
  return pass ? 0 : 1;
}
