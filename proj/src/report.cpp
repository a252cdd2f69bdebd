#include "so7/report.hpp"

#include <algorithm>

#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/subgroups.hpp"

namespace so7 {

namespace {

std::vector<size_t> subgroup_orders(const Group& ambient,
                                    std::vector<Group> subs) {
  subs = merge_conjugate_subgroups(ambient, std::move(subs));
  std::vector<size_t> orders;
  for (const Group& h : subs) orders.push_back(h.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool check_invariant_codes() {
  std::vector<InvariantCode> codes = enumerate_invariant_codes();
  std::vector<int> dims;
  for (const InvariantCode& c : codes) {
    dims.push_back(c.code.dim());
    if (!c.seven_cycle_fpf) return false;
  }
  return dims == std::vector<int>{3, 3, 6};
}

bool check_quotient_lists() {
  Group s7 = s7_perm_group();
  std::vector<size_t> s7_orders =
      subgroup_orders(s7, subgroups_above(s7, Group::generate({alpha()})));
  if (s7_orders != std::vector<size_t>{7, 14, 21, 42, 168, 2520, 5040})
    return false;

  Group psl = gl32_perm_group();
  std::vector<size_t> psl_orders =
      subgroup_orders(psl, subgroups_above(psl, Group::generate({singer()})));
  return psl_orders == std::vector<size_t>{7, 21, 168};
}

}  // namespace

bool VerificationSummary::table1_all_match() const {
  for (const GroupReport& r : reports)
    if (r.claim && !(r.match_nfc && r.match_fc && r.match_total)) return false;
  return true;
}

GroupReport build_report(const std::string& id, const Group& g) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw Error("unknown group id: " + id);
  if (g.order() != entry->order)
    throw Error("group for " + id + " has order " +
                std::to_string(g.order()) + ", catalog says " +
                std::to_string(entry->order));

  GroupReport r;
  r.id = id;
  r.order = g.order();
  r.case_no = entry->case_no;
  r.irreducible = is_irreducible(g);
  r.transitive = is_transitive_on_axes(g);

  natural_character(g);  // throws InternalError on a broken partition
  r.traces_integral = true;

  Gf2Code code = code_for(id);
  if (code.dim() == 0) {
    r.split = "not-applicable";
    r.clifford.direct = g.classes().count();
    r.clifford.nfc = r.clifford.direct;
  } else {
    Group a = Group::from_elements(
        diag_group(code), [&] {
          std::vector<SignedPerm> gens;
          for (const Gf2Vec& b : code.basis())
            gens.push_back(SignedPerm::diag(b.bits));
          return gens;
        }());
    r.split = complement_search(g, a, nondiagonal_generators(g)) ? "split"
                                                                 : "nonsplit";
    r.clifford = clifford_count(g, code);
    if (r.clifford.direct != r.clifford.nfc + r.clifford.fc_orbit)
      throw InternalError(
          "class counts disagree for " + id + ": direct " +
          std::to_string(r.clifford.direct) + " vs nfc + fc_orbit " +
          std::to_string(r.clifford.nfc + r.clifford.fc_orbit));
  }

  r.claim = entry->table1;
  if (r.claim) {
    r.match_nfc = r.claim->nfc == r.clifford.nfc;
    r.match_fc = r.claim->fc == r.clifford.fc_paper;
    r.match_total = r.claim->total == r.clifford.direct;
  }
  return r;
}

nlohmann::ordered_json report_json(const GroupReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["case"] = r.case_no;
  j["split"] = r.split;
  j["irreducible"] = r.irreducible;
  j["transitive"] = r.transitive;
  j["traces_integral"] = r.traces_integral;
  nlohmann::ordered_json c;
  c["nfc"] = r.clifford.nfc;
  c["fc_paper"] = r.clifford.fc_paper;
  c["fc_orbit"] = r.clifford.fc_orbit;
  c["direct_classes"] = r.clifford.direct;
  c["orbits"] = nlohmann::ordered_json::array();
  for (const OrbitRecord& o : r.clifford.orbits) {
    nlohmann::ordered_json jo;
    jo["size"] = o.size;
    jo["inertia_index"] = o.inertia_index;
    jo["gamma"] = o.gamma;
    c["orbits"].push_back(jo);
  }
  j["clifford"] = c;
  if (r.claim) {
    nlohmann::ordered_json t;
    t["claimed_nfc"] = r.claim->nfc;
    t["claimed_fc"] = r.claim->fc;
    t["claimed_total"] = r.claim->total;
    t["match_nfc"] = r.match_nfc;
    t["match_fc"] = r.match_fc;
    t["match_total"] = r.match_total;
    j["table1"] = t;
  }
  return j;
}

VerificationSummary run_verification(const GroupSource& load) {
  VerificationSummary s;
  for (const CatalogEntry& entry : catalog()) {
    try {
      s.reports.push_back(build_report(entry.id, load(entry.id)));
    } catch (const InternalError& e) {
      s.internal_errors.emplace_back(entry.id, e.what());
    }
  }

  s.invariant_codes_ok = check_invariant_codes();
  s.quotient_lists_ok = check_quotient_lists();

  std::vector<Group> found = search_order_1344();
  if (found.size() == 2) {
    Group a8 = Group::generate([] {
      std::vector<SignedPerm> gens;
      for (const Gf2Vec& b : code_a8().basis())
        gens.push_back(SignedPerm::diag(b.bits));
      return gens;
    }());
    int split_count = 0;
    bool perfect = true;
    for (const Group& g : found) {
      if (derived_subgroup(g).order() != g.order()) perfect = false;
      if (complement_search(g, a8, nondiagonal_generators(g))) ++split_count;
    }
    s.order_1344_search_ok = perfect && split_count == 1;
  }

  s.exclude_64_14_ok = exclude_nonsplit_64_14();
  return s;
}

nlohmann::ordered_json summary_json(const VerificationSummary& s) {
  nlohmann::ordered_json j;
  j["groups"] = nlohmann::ordered_json::array();
  for (const GroupReport& r : s.reports) j["groups"].push_back(report_json(r));
  if (!s.internal_errors.empty()) {
    nlohmann::ordered_json errs = nlohmann::ordered_json::array();
    for (const auto& [id, what] : s.internal_errors) {
      nlohmann::ordered_json e;
      e["id"] = id;
      e["internal_error"] = what;
      errs.push_back(e);
    }
    j["internal_errors"] = errs;
  }
  nlohmann::ordered_json checks;
  checks["invariant_codes"] = s.invariant_codes_ok;
  checks["quotient_lists"] = s.quotient_lists_ok;
  checks["order_1344_search"] = s.order_1344_search_ok;
  checks["exclude_64_14"] = s.exclude_64_14_ok;
  j["checks"] = checks;
  j["internal_consistent"] = s.internal_consistent();
  j["table1_all_match"] = s.table1_all_match();
  return j;
}

}  // namespace so7
