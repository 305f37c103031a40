#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "depcat/instances.hpp"
#include "depcat/serialize.hpp"
#include "depcat/suites.hpp"

namespace {

// exit codes: 0 all pass, 1 law failure, 2 input error
constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;

std::size_t default_budget() {
  if (const char* env = std::getenv("DEPCAT_BUDGET")) {
    try {
      return std::stoul(env);
    } catch (...) {
      throw depcat::InvalidSpec("DEPCAT_BUDGET must be a number");
    }
  }
  return depcat::kDefaultBudget;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> parse_table(const std::string& s) {
  std::vector<std::vector<std::uint32_t>> table;
  for (const std::string& row : [&] {
         std::vector<std::string> rows;
         std::size_t start = 0;
         while (start <= s.size()) {
           const std::size_t semi = s.find(';', start);
           rows.push_back(s.substr(start, semi - start));
           if (semi == std::string::npos) break;
           start = semi + 1;
         }
         return rows;
       }()) {
    table.emplace_back();
    for (const std::string& cell : split_list(row))
      table.back().push_back(static_cast<std::uint32_t>(std::stoul(cell)));
  }
  return table;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_relation(const std::string& s) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const std::string& item : split_list(s)) {
    const std::size_t le = item.find("<=");
    if (le == std::string::npos)
      throw depcat::InvalidSpec("relation items look like 0<=1, got '" + item + "'");
    out.emplace_back(static_cast<std::uint32_t>(std::stoul(item.substr(0, le))),
                     static_cast<std::uint32_t>(std::stoul(item.substr(le + 2))));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "depcat — a finite-category engine for family-arrow, Sigma-object and\n"
      "dependent-arrow structures, with exhaustive law checking."};
  app.require_subcommand(1);

  depcat::InstanceSpec spec;
  std::string out_path, table_str, relation_str;
  std::size_t budget = 0;

  CLI::App* gen = app.add_subcommand("gen", "generate an instance document");
  gen->add_option("kind", spec.kind, "finset | ring | discrete | poset | monoid | file")
      ->required();
  gen->add_option("-o,--output", out_path, "output file (stdout when omitted)");
  gen->add_option("--path", spec.path, "file kind: document to load and re-emit");
  gen->add_option("--max", spec.max_object_size, "finset: largest object size (default 3)");
  gen->add_option("--cap", spec.fiber_cap,
                  "finset: requested fiber cap (default 2); the effective cap is clamped to the "
                  "largest value admitting a total sigma on the skeleton, i.e. 1 for max ≥ 1, "
                  "and is recorded in the document");
  gen->add_option("--fam", spec.fam, "fam layer: sets|constant|coslice|topos|ring|none");
  gen->add_option("--sigma", spec.sigma, "sigma layer: sets|product|ring|trivial|none");
  gen->add_option("--dep", spec.dep, "dep layer: sets|constant|sections|trivial|none");
  gen->add_option("--pr2", spec.pr2, "pr2 layer: sets|constant|canonical|trivial|absorbing|none");
  gen->add_option("--modulus", spec.modulus, "ring: modulus for Z/n (default 4)");
  gen->add_option("--objects", spec.objects, "discrete/poset: number of objects");
  gen->add_option("--chain", spec.chain, "poset: chain length (default 3)");
  gen->add_option("--relation", relation_str, "poset: comma list like 0<=1,1<=2");
  gen->add_option("--table", table_str,
                  "monoid: rows separated by ';', entries by ',' (e.g. \"0,1;1,1\"); "
                  "also ring --add/--mul style tables via two tables joined by '|'");
  gen->add_option("--budget", budget,
                  "enumeration bound for intensional (topos) families: objects b with |b| <= "
                  "budget (default 2; env DEPCAT_BUDGET)");
  gen->add_flag("--no-self-check", "skip the generate-time law self-check")->take_last();

  std::string doc_path, suites_str, mutate_law, format = "text";
  CLI::App* check = app.add_subcommand("check", "run law suites over a document");
  check->add_option("file", doc_path, "structure document")->required();
  check->add_option("--suites", suites_str, "comma list (default: all applicable)");
  check->add_option("--budget", budget, "enumeration bound (env DEPCAT_BUDGET)");
  check->add_option("--mutate", mutate_law,
                    "flip one table entry for this law and assert the suite fails");

  CLI::App* report = app.add_subcommand("report", "run all applicable suites and print a report");
  report->add_option("file", doc_path, "structure document")->required();
  report->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--budget", budget, "enumeration bound (env DEPCAT_BUDGET)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget == 0) budget = default_budget();
    spec.budget = budget;

    if (gen->parsed()) {
      if (!table_str.empty()) {
        const std::size_t bar = table_str.find('|');
        if (spec.kind == "ring" && bar != std::string::npos) {
          spec.add = parse_table(table_str.substr(0, bar));
          spec.mul = parse_table(table_str.substr(bar + 1));
        } else {
          spec.table = parse_table(table_str);
        }
      }
      if (!relation_str.empty()) spec.relation = parse_relation(relation_str);
      const bool self_check = gen->count("--no-self-check") == 0;
      const depcat::StructureDocument doc = depcat::generate(spec, self_check);
      if (out_path.empty())
        std::cout << depcat::serialize(doc);
      else
        depcat::save_document(doc, out_path);
      return kOk;
    }

    if (check->parsed()) {
      depcat::StructureDocument doc = depcat::load_document(doc_path);
      if (!mutate_law.empty()) {
        const depcat::MutationOutcome m = depcat::mutate_for_law(doc, mutate_law);
        const auto reports = depcat::run_suites(m.doc, {m.suite}, budget);
        bool detected = false;
        for (const auto& r : reports)
          if (const depcat::LawEntry* e = r.find(mutate_law); e && !e->passed) detected = true;
        std::cout << "mutation: " << m.description << "\n";
        std::cout << depcat::report_text(reports);
        std::cout << (detected ? "MUTATION DETECTED\n" : "MUTATION MISSED\n");
        return detected ? kOk : kLawFailure;
      }
      const auto reports = depcat::run_suites(doc, split_list(suites_str), budget);
      std::cout << depcat::report_text(reports);
      return depcat::all_passed(reports) ? kOk : kLawFailure;
    }

    if (report->parsed()) {
      depcat::StructureDocument doc = depcat::load_document(doc_path);
      const auto reports = depcat::run_suites(doc, {}, budget);
      std::cout << (format == "json" ? depcat::report_json(reports)
                                     : depcat::report_text(reports));
      return depcat::all_passed(reports) ? kOk : kLawFailure;
    }
  } catch (const depcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
