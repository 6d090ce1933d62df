#include "oind.h"

#include <cstring>
#include <string>

#include "oind/catalog.hpp"

using namespace oind;

struct oind_model {
  StructurePtr structure;
  std::string name;
  std::string signature;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

oind_status fail(oind_status code, const std::string& msg) {
  g_error = msg;
  return code;
}

oind_status classify_error(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const AxiomParameterError*>(&e))
    return fail(OIND_ESYNTAX, e.what());
  if (dynamic_cast<const ModelFormatError*>(&e) || dynamic_cast<const CatalogFormatError*>(&e))
    return fail(OIND_EFORMAT, e.what());
  if (dynamic_cast<const EvalError*>(&e) || dynamic_cast<const SignatureError*>(&e))
    return fail(OIND_EEVAL, e.what());
  return fail(OIND_EINVAL, e.what());
}

CheckOptions to_options(const oind_options* opt) {
  CheckOptions o;
  if (opt) {
    if (opt->slice) o.slice = opt->slice;
    if (opt->max_term_size) o.max_term_size = opt->max_term_size;
  }
  return o;
}

void fill_result(const Verdict& v, oind_result* out) {
  switch (v.status) {
    case Status::Holds: out->verdict = v.bounded ? OIND_HOLDS_BOUNDED : OIND_HOLDS; break;
    case Status::Fails: out->verdict = OIND_FAILS; break;
    case Status::Unknown: out->verdict = OIND_UNKNOWN; break;
  }
  out->witness = v.witness.empty() ? nullptr : dup_string(v.witness);
  out->method = v.method.empty() ? nullptr : dup_string(v.method);
  out->note = v.note.empty() ? nullptr : dup_string(v.note);
}

template <typename F>
oind_status guarded(oind_result* out, F&& body) {
  if (out) *out = {OIND_UNKNOWN, nullptr, nullptr, nullptr};
  try {
    Verdict v = body();
    if (!out) return fail(OIND_EINVAL, "null result pointer");
    fill_result(v, out);
    return OIND_OK;
  } catch (const std::exception& e) {
    return classify_error(e);
  }
}

}  // namespace

extern "C" {

const char* oind_last_error(void) { return g_error.c_str(); }

const char* oind_version(void) { return "0.1.0"; }

void oind_string_free(char* s) { std::free(s); }

void oind_result_clear(oind_result* r) {
  if (!r) return;
  std::free(r->witness);
  std::free(r->method);
  std::free(r->note);
  r->witness = r->method = r->note = nullptr;
}

oind_status oind_model_open_zoo(const char* name, oind_model** out) {
  if (!name || !out) return fail(OIND_EINVAL, "null argument");
  try {
    auto s = zoo_lookup(name);
    *out = new oind_model{s, s->name(), s->signature().to_string()};
    return OIND_OK;
  } catch (const std::exception& e) {
    return classify_error(e);
  }
}

oind_status oind_model_open_json(const char* json_text, oind_model** out) {
  if (!json_text || !out) return fail(OIND_EINVAL, "null argument");
  try {
    auto s = FiniteStructure::from_json(json_text);
    *out = new oind_model{s, s->name(), s->signature().to_string()};
    return OIND_OK;
  } catch (const std::exception& e) {
    return classify_error(e);
  }
}

void oind_model_close(oind_model* m) { delete m; }

const char* oind_model_name(const oind_model* m) { return m ? m->name.c_str() : nullptr; }

const char* oind_model_signature(const oind_model* m) {
  return m ? m->signature.c_str() : nullptr;
}

oind_status oind_model_to_json(const oind_model* m, char** out) {
  if (!m || !out) return fail(OIND_EINVAL, "null argument");
  auto* f = dynamic_cast<const FiniteStructure*>(m->structure.get());
  if (!f) return fail(OIND_EINVAL, "model is not finite");
  *out = dup_string(f->to_json());
  return OIND_OK;
}

oind_status oind_check_axiom(const oind_model* m, const char* axiom_id, const oind_options* opt,
                             oind_result* out) {
  if (!m || !axiom_id) return fail(OIND_EINVAL, "null argument");
  return guarded(out, [&] {
    return eval_sentence(*m->structure, gen(AxiomId::parse(axiom_id)), to_options(opt));
  });
}

oind_status oind_check_sentence(const oind_model* m, const char* sentence,
                                const oind_options* opt, oind_result* out) {
  if (!m || !sentence) return fail(OIND_EINVAL, "null argument");
  return guarded(out, [&] {
    return eval_sentence(*m->structure, parse_sentence(sentence, m->structure->signature()),
                         to_options(opt));
  });
}

oind_status oind_decide_scheme(const oind_model* m, const char* scheme, const oind_options* opt,
                               oind_result* out) {
  if (!m || !scheme) return fail(OIND_EINVAL, "null argument");
  return guarded(out, [&] {
    return scheme_verdict(*m->structure, scheme_from_name(scheme), to_options(opt));
  });
}

oind_status oind_witness_search(const oind_model* m, const char* scheme, unsigned max_size,
                                const char* term_sig, const oind_options* opt,
                                oind_result* out) {
  if (!m || !scheme) return fail(OIND_EINVAL, "null argument");
  return guarded(out, [&] {
    Signature sig =
        term_sig ? Signature::from_string(term_sig) : m->structure->signature();
    return witness_search(*m->structure, scheme_from_name(scheme), max_size, sig,
                          to_options(opt));
  });
}

oind_status oind_check_instance(const oind_model* m, const char* formula,
                                const char* const* param_names, const char* const* param_values,
                                size_t n_params, const oind_options* opt, oind_result* out) {
  if (!m || !formula || (n_params && (!param_names || !param_values)))
    return fail(OIND_EINVAL, "null argument");
  return guarded(out, [&] {
    InductionInstance inst;
    inst.formula = parse_formula(formula, m->structure->signature());
    for (size_t i = 0; i < n_params; ++i)
      inst.params[param_names[i]] = element_from_string(*m->structure, param_values[i]);
    return check_instance(*m->structure, inst, to_options(opt));
  });
}

oind_status oind_run_catalog(const char* catalog_json, const char* format,
                             const oind_options* opt, char** report_out, int* pass_out) {
  if (!catalog_json || !report_out) return fail(OIND_EINVAL, "null argument");
  try {
    auto entries = load_catalog(catalog_json);
    Report report = run_catalog(entries, to_options(opt));
    std::string fmt = format ? format : "json";
    if (fmt == "json")
      *report_out = dup_string(report_to_json(report));
    else if (fmt == "md")
      *report_out = dup_string(report_to_markdown(report));
    else
      return fail(OIND_EINVAL, "unknown report format: " + fmt);
    if (pass_out) *pass_out = report.pass ? 1 : 0;
    return OIND_OK;
  } catch (const std::exception& e) {
    return classify_error(e);
  }
}

}  // extern "C"
