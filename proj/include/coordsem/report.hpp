#pragma once

// Query results and the claim-by-claim reproduction report, built as JSON
// documents. The text renderer walks the same documents, so both output
// formats always carry the same data.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coordsem/corpus.hpp"
#include "coordsem/formula.hpp"
#include "coordsem/implicature.hpp"
#include "coordsem/law.hpp"

namespace coordsem::report {

using Json = nlohmann::ordered_json;

enum class Status { match, mismatch };

std::string_view to_string(Status s);

struct ReportRecord {
  std::string claim;  // e.g. "appendix.options.5c"
  int criterion = 0;
  Json inputs;
  Json expected;
  Json computed;
  Status status = Status::mismatch;  // match iff expected == computed
  Json detail;  // witnesses and counts; shown but never compared
};

Json to_json(const ReportRecord& r);

/// A formula together with how the user named it: a corpus label, or
/// its own text when given inline.
struct NamedFormula {
  std::string name;
  Formula formula;
};

/// Corpus label if `text` is one, otherwise a parsed formula.
NamedFormula resolve(const Corpus& corpus, const std::string& text);

Json cmd_laws(ConnectiveMap map);
Json cmd_denote(const NamedFormula& f);
/// Per-formula judgments, then every unordered pair in argument order.
Json cmd_judge(const std::vector<NamedFormula>& items);
Json cmd_equiv(const NamedFormula& f, const NamedFormula& g);
Json cmd_implicatures(const NamedFormula& f, ProjectionMode mode,
                      const std::set<int>& opinionated = {});
Json cmd_prob(int denominator);

/// Every checkable claim against `corpus`, grouped by criterion 1-10.
std::vector<ReportRecord> reproduce(const Corpus& corpus);
bool all_match(const std::vector<ReportRecord>& records);
Json reproduce_document(const std::vector<ReportRecord>& records);

/// Indented key/value rendering of a JSON document; one line per scalar.
std::string render_text(const Json& doc);
/// Two-space indented JSON with a trailing newline.
std::string render_json(const Json& doc);

}  // namespace coordsem::report
