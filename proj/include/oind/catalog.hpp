#pragma once

#include "oind/checker.hpp"

namespace oind {

// One reproducible result: a model, a check, and the expected verdict.
struct CatalogEntry {
  std::string id;
  std::string model;  // "zoo:<name>" or "file:<path>"
  std::string check;  // axiom | sentence | scheme | instance | search | entailment
  std::string arg;
  std::string expected;
  std::string locus;  // source tag, emitted under the report key "paper"

  // instance checks
  std::string formula;
  std::map<std::string, std::string> params;
  // search and entailment checks
  unsigned max_size = 6;
  std::string search_sig;  // optional term-signature restriction
  std::vector<std::string> models;
  std::vector<std::string> hypotheses;
  std::vector<std::string> conclusions;
};

struct ReportEntry {
  std::string id, expected, actual, witness, locus;
  bool pass = false;
};

struct Report {
  std::vector<ReportEntry> entries;
  bool pass = true;
};

struct CatalogFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<CatalogEntry> load_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

StructurePtr resolve_model(const std::string& ref);

// Run one entry; returns the actual verdict plus witness text.
Verdict run_entry(const CatalogEntry& entry, const CheckOptions& opt);

Report run_catalog(const std::vector<CatalogEntry>& entries, const CheckOptions& opt);

std::string report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);

}  // namespace oind
