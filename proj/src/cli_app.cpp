#include "so7/cli_app.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "so7/atlas.hpp"
#include "so7/cache.hpp"
#include "so7/error.hpp"
#include "so7/report.hpp"
#include "so7/subgroups.hpp"

namespace so7 {

namespace {

void write_matrix_block(std::ostream& out, const SignedPerm& e) {
  auto m = e.matrix();
  for (int r = 0; r < kDegree; ++r) {
    for (int c = 0; c < kDegree; ++c) out << (c ? " " : "") << m[r][c];
    out << '\n';
  }
}

void cmd_list(std::ostream& out, bool json) {
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CatalogEntry& e : catalog()) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["order"] = e.order;
      j["case"] = e.case_no;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
    return;
  }
  for (const CatalogEntry& e : catalog())
    out << e.id << '\t' << e.order << "\tcase " << e.case_no << '\n';
}

void print_report_text(std::ostream& out, const GroupReport& r) {
  out << r.id << ": order " << r.order << ", case " << r.case_no << ", "
      << r.split << '\n';
  out << "  irreducible " << (r.irreducible ? "yes" : "no") << ", transitive "
      << (r.transitive ? "yes" : "no") << ", integral traces "
      << (r.traces_integral ? "yes" : "no") << '\n';
  out << "  classes: direct " << r.clifford.direct << " = nfc "
      << r.clifford.nfc << " + fc " << r.clifford.fc_orbit << " (one-orbit rule "
      << r.clifford.fc_paper << ")\n";
  if (r.claim)
    out << "  table row " << r.claim->nfc << "+" << r.claim->fc << "="
        << r.claim->total << ": "
        << (r.match_nfc && r.match_fc && r.match_total ? "matches"
                                                       : "MISMATCH")
        << '\n';
}

int cmd_report(std::ostream& out, const std::string& cache_dir,
               const std::string& id, bool json) {
  GroupReport r = build_report(id, load_or_build(cache_dir, id));
  if (json)
    out << report_json(r).dump(2) << '\n';
  else
    print_report_text(out, r);
  return 0;
}

int cmd_verify(std::ostream& out, const std::string& cache_dir, bool json) {
  VerificationSummary s = run_verification(
      [&](const std::string& id) { return load_or_build(cache_dir, id); });
  if (json) {
    out << summary_json(s).dump(2) << '\n';
  } else {
    for (const GroupReport& r : s.reports) print_report_text(out, r);
    for (const auto& [id, what] : s.internal_errors)
      out << id << ": INTERNAL ERROR: " << what << '\n';
    out << "invariant codes: " << (s.invariant_codes_ok ? "ok" : "FAILED")
        << '\n';
    out << "quotient lists: " << (s.quotient_lists_ok ? "ok" : "FAILED")
        << '\n';
    out << "order-1344 search: " << (s.order_1344_search_ok ? "ok" : "FAILED")
        << '\n';
    out << "64*14 exclusion: " << (s.exclude_64_14_ok ? "ok" : "FAILED")
        << '\n';
    out << "internal consistency: "
        << (s.internal_consistent() ? "ok" : "FAILED") << '\n';
    out << "table matches: " << (s.table1_all_match() ? "all" : "NOT ALL")
        << '\n';
  }
  return s.internal_consistent() ? 0 : 1;
}

int cmd_export(const std::string& id, const std::string& path,
               bool with_elements) {
  Group g = named_group(id);  // recipe generators, not cache-derived ones
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  bool first = true;
  for (const SignedPerm& e : g.generators()) {
    if (!first) out << '\n';
    first = false;
    write_matrix_block(out, e);
  }
  if (with_elements)
    for (const SignedPerm& e : g.elements()) {
      out << '\n';
      write_matrix_block(out, e);
    }
  if (!out) throw Error("write failed for " + path);
  return 0;
}

int cmd_split_check(std::ostream& out, const std::string& cache_dir,
                    const std::string& id, bool json) {
  Group g = load_or_build(cache_dir, id);
  Gf2Code code = code_for(id);
  std::string verdict = "not-applicable";
  std::vector<std::string> comp_gens;
  if (code.dim() > 0) {
    std::vector<SignedPerm> agens;
    for (const Gf2Vec& b : code.basis())
      agens.push_back(SignedPerm::diag(b.bits));
    Group a = Group::from_elements(diag_group(code), std::move(agens));
    std::optional<Group> c =
        complement_search(g, a, nondiagonal_generators(g));
    verdict = c ? "split" : "nonsplit";
    if (c)
      for (const SignedPerm& e : c->generators()) comp_gens.push_back(e.str());
  }
  if (json) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["split"] = verdict;
    if (!comp_gens.empty()) j["complement_generators"] = comp_gens;
    out << j.dump(2) << '\n';
  } else {
    out << id << ": " << verdict << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"degree-7 signed-permutation group catalog with cross-checked class counts"};
  app.name("so7-atlas");

  std::string cache_dir = ".so7-cache";
  bool json = true;
  int threads = 0;
  app.add_option("--cache-dir", cache_dir,
                 "directory for group element caches")
      ->capture_default_str();
  auto* json_flag =
      app.add_flag("--json,!--no-json", json,
                   "JSON output (on by default for report and verify-table1)");
  app.add_option("--threads", threads, "worker thread count, 0 = default");

  auto* list_cmd = app.add_subcommand("list", "catalog ids with orders");
  std::string id, path;
  auto* report_cmd =
      app.add_subcommand("report", "cross-validated report for one group");
  report_cmd->add_option("id", id, "catalog group id")->required();
  auto* verify_cmd = app.add_subcommand(
      "verify-table1", "reports for the whole catalog plus structural checks");
  auto* export_cmd =
      app.add_subcommand("export", "write generator matrices to a file");
  export_cmd->add_option("id", id, "catalog group id")->required();
  export_cmd->add_option("path", path, "output file")->required();
  bool with_elements = false;
  export_cmd->add_flag("--elements", with_elements,
                       "append every element after the generators");
  auto* split_cmd = app.add_subcommand(
      "split-check", "search for a complement of the diagonal part");
  split_cmd->add_option("id", id, "catalog group id")->required();
  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("so7-atlas");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (list_cmd->parsed()) {
      cmd_list(out, json_flag->count() > 0 && json);
      return 0;
    }
    if (report_cmd->parsed()) return cmd_report(out, cache_dir, id, json);
    if (verify_cmd->parsed()) return cmd_verify(out, cache_dir, json);
    if (export_cmd->parsed()) return cmd_export(id, path, with_elements);
    if (split_cmd->parsed()) return cmd_split_check(out, cache_dir, id, json);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace so7
