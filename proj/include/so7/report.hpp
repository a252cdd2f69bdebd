#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "so7/atlas.hpp"
#include "so7/clifford.hpp"
#include "so7/group.hpp"

namespace so7 {

// Everything the CLI states about one catalog group.  Building a report
// runs the full cross-validation; any disagreement between the counting
// methods comes out as an InternalError, never as doctored numbers.
struct GroupReport {
  std::string id;
  size_t order = 0;
  int case_no = 0;
  std::string split;  // "split" | "nonsplit" | "not-applicable"
  bool irreducible = false;
  bool transitive = false;
  bool traces_integral = false;
  CliffordCount clifford;  // degenerate for case 1: nfc = direct, fc = 0
  std::optional<Table1Claim> claim;
  bool match_nfc = true;
  bool match_fc = true;
  bool match_total = true;
};

GroupReport build_report(const std::string& id, const Group& g);

nlohmann::ordered_json report_json(const GroupReport& r);

// How the verification run gets hold of a group by id (a cache-backed or
// pure in-memory loader, depending on the caller).
using GroupSource = std::function<Group(const std::string&)>;

struct VerificationSummary {
  std::vector<GroupReport> reports;
  std::vector<std::pair<std::string, std::string>> internal_errors;
  bool invariant_codes_ok = false;
  bool quotient_lists_ok = false;
  bool order_1344_search_ok = false;
  bool exclude_64_14_ok = false;

  bool internal_consistent() const { return internal_errors.empty(); }
  bool table1_all_match() const;
  bool checks_ok() const {
    return invariant_codes_ok && quotient_lists_ok && order_1344_search_ok &&
           exclude_64_14_ok;
  }
};

// Reports for the whole catalog plus the four structural checks.
VerificationSummary run_verification(const GroupSource& load);

nlohmann::ordered_json summary_json(const VerificationSummary& s);

}  // namespace so7
