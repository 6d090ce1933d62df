#include "oind/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace oind {

using nlohmann::ordered_json;

std::vector<CatalogEntry> load_catalog(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogFormatError(std::string("invalid catalog JSON: ") + e.what());
  }
  std::vector<CatalogEntry> out;
  try {
    for (auto& je : j.at("entries")) {
      CatalogEntry e;
      e.id = je.at("id").get<std::string>();
      e.check = je.at("check").get<std::string>();
      e.expected = je.at("expected").get<std::string>();
      e.locus = je.value("paper", "");
      e.model = je.value("model", "");
      e.arg = je.value("arg", "");
      e.formula = je.value("formula", "");
      e.max_size = je.value("max_size", 6u);
      e.search_sig = je.value("sig", "");
      if (je.contains("params"))
        for (auto& [k, v] : je.at("params").items()) e.params[k] = v.get<std::string>();
      if (je.contains("models"))
        for (auto& m : je.at("models")) e.models.push_back(m.get<std::string>());
      if (je.contains("hypotheses"))
        for (auto& h : je.at("hypotheses")) e.hypotheses.push_back(h.get<std::string>());
      if (je.contains("conclusions"))
        for (auto& c : je.at("conclusions")) e.conclusions.push_back(c.get<std::string>());
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CatalogFormatError(std::string("malformed catalog entry: ") + e.what());
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogFormatError("cannot open catalog file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str());
}

StructurePtr resolve_model(const std::string& ref) {
  if (ref.rfind("zoo:", 0) == 0) return zoo_lookup(ref.substr(4));
  if (ref.rfind("file:", 0) == 0) {
    std::ifstream in(ref.substr(5));
    if (!in) throw ModelFormatError("cannot open model file: " + ref.substr(5));
    std::ostringstream ss;
    ss << in.rdbuf();
    return FiniteStructure::from_json(ss.str());
  }
  throw ModelFormatError("model reference must start with zoo: or file:");
}

namespace {

Hypothesis parse_hypothesis(const std::string& text) {
  try {
    return Hypothesis::of(scheme_from_name(text));
  } catch (const std::exception&) {
    return Hypothesis::of(AxiomId::parse(text));
  }
}

}  // namespace

Verdict run_entry(const CatalogEntry& entry, const CheckOptions& opt) {
  if (entry.check == "entailment") {
    std::vector<StructurePtr> models;
    for (auto& r : entry.models) models.push_back(resolve_model(r));
    std::vector<Hypothesis> hyps;
    for (auto& h : entry.hypotheses) hyps.push_back(parse_hypothesis(h));
    std::vector<AxiomId> concls;
    for (auto& c : entry.conclusions) concls.push_back(AxiomId::parse(c));
    CheckOptions eopt = opt;
    eopt.max_term_size = entry.max_size;
    EntailmentReport rep = semantic_entailment(models, hyps, concls, eopt);
    if (rep.ok) return Verdict::holds("entailment");
    for (auto& row : rep.rows)
      if (row.outcome == EntailmentRow::Outcome::Violation)
        return Verdict::fails(row.model + " /= " + row.conclusion + " (" + row.note + ")",
                              "entailment");
    return Verdict::unknown("inconsistent entailment report");
  }

  StructurePtr m = resolve_model(entry.model);
  if (entry.check == "axiom") return eval_sentence(*m, gen(AxiomId::parse(entry.arg)), opt);
  if (entry.check == "sentence")
    return eval_sentence(*m, parse_sentence(entry.arg, m->signature()), opt);
  if (entry.check == "scheme") return scheme_verdict(*m, scheme_from_name(entry.arg), opt);
  if (entry.check == "instance") {
    InductionInstance inst;
    inst.formula = parse_formula(entry.formula, m->signature());
    for (auto& [k, v] : entry.params) inst.params[k] = element_from_string(*m, v);
    return check_instance(*m, inst, opt);
  }
  if (entry.check == "search") {
    Signature sig = entry.search_sig.empty() ? m->signature()
                                             : Signature::from_string(entry.search_sig);
    return witness_search(*m, scheme_from_name(entry.arg), entry.max_size, sig, opt);
  }
  throw CatalogFormatError("unknown check kind: " + entry.check);
}

Report run_catalog(const std::vector<CatalogEntry>& entries, const CheckOptions& opt) {
  Report report;
  for (auto& e : entries) {
    ReportEntry re;
    re.id = e.id;
    re.expected = e.expected;
    re.locus = e.locus;
    try {
      Verdict v = run_entry(e, opt);
      re.actual = v.to_string();
      re.witness = v.witness;
    } catch (const std::exception& ex) {
      re.actual = std::string("error: ") + ex.what();
    }
    re.pass = re.actual == re.expected;
    report.pass = report.pass && re.pass;
    report.entries.push_back(std::move(re));
  }
  return report;
}

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["entries"] = ordered_json::array();
  for (auto& e : r.entries) {
    ordered_json je;
    je["id"] = e.id;
    je["expected"] = e.expected;
    je["actual"] = e.actual;
    je["witness"] = e.witness.empty() ? ordered_json(nullptr) : ordered_json(e.witness);
    je["paper"] = e.locus;
    j["entries"].push_back(std::move(je));
  }
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const Report& r) {
  std::ostringstream os;
  os << "| id | expected | actual | witness | paper |\n";
  os << "|---|---|---|---|---|\n";
  for (auto& e : r.entries)
    os << "| " << e.id << " | " << e.expected << " | " << e.actual << " | "
       << (e.witness.empty() ? "-" : e.witness) << " | " << e.locus << " |\n";
  os << "\n" << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace oind
