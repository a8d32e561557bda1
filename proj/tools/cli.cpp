// Copyright 2026 The sgpoly authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgpoly/catalog.hpp"
#include "sgpoly/invariants.hpp"
#include "sgpoly/poly_json.hpp"
#include "sgpoly/relations.hpp"
#include "sgpoly/surfaces.hpp"

namespace sgpoly::cli {

namespace {

using nlohmann::json;

json frac_node(const PhiFraction& f) { return json::parse(frac_to_json(f)); }
json poly_node(const LaurentPolynomial& p) { return json::parse(poly_to_json(p)); }

int cmd_invariants(const std::string& input, bool as_json, int max_crossings, std::ostream& out) {
  CatalogEntry entry = catalog::load(input);
  StateSumConfig cfg;
  // The twisted band boundaries of the catalog diagrams reach 26 crossings,
  // so the tool's default bracket budget is above the library default.
  cfg.bracket_crossing_cap = 28;
  if (max_crossings > 0) {
    cfg.bracket_crossing_cap = max_crossings;
    cfg.yamada_crossing_cap = max_crossings;
  }
  const Diagram& d = entry.diagram;
  json record;
  record["name"] = entry.name;
  record["kind"] = to_string(entry.kind);
  record["crossings"] = d.crossing_count();

  if (entry.kind == GraphKind::Link) {
    LinkDiagram link = to_link(d);
    LaurentPolynomial bracket = kauffman_bracket(link, cfg);
    record["bracket"] = poly_node(bracket);
    if (link.oriented || link.crossings == 0) {
      record["writhe"] = link.crossings == 0 ? 0 : link.writhe();
      record["jones"] = poly_node(jones(link, cfg));
    }
  } else {
    record["yamada"] = poly_node(yamada(d, cfg));
    record["jaeger"] = frac_node(jaeger(d, cfg));
    record["normalized_yamada"] = poly_node(normalized_yamada(d, cfg));
    record["normalized_jaeger"] = frac_node(normalized_jaeger(d, cfg));
    TwistData td = twist_parameters(d);
    record["edges"] = td.edge_names;
    record["twists"] = td.params;
    json w = json::array();
    for (const auto& row : td.w) w.push_back(row);
    record["crossing_matrix"] = w;
    AssociatedLink assoc = associated_link(d, cfg);
    record["associated_link_crossings"] = assoc.link.crossings;
    record["associated_link_components"] = assoc.link.components();
    record["jones_associated"] = poly_node(jones(assoc.link, cfg));
  }

  if (as_json) {
    out << record.dump(2) << "\n";
    return 0;
  }
  out << "name: " << entry.name << "\n";
  if (!entry.description.empty()) out << "description: " << entry.description << "\n";
  out << "kind: " << record["kind"].get<std::string>() << "\n";
  out << "crossings: " << record["crossings"].get<int>() << "\n";
  auto print_poly = [&](const char* label, const json& node) {
    if (!record.contains(label)) return;
    if (node.value("phi_power", 0) != 0)
      out << label << ": " << frac_from_json(node.dump()).to_string() << "\n";
    else
      out << label << ": " << poly_from_json(node.dump()).to_string() << "\n";
  };
  print_poly("bracket", record.value("bracket", json()));
  print_poly("jones", record.value("jones", json()));
  print_poly("yamada", record.value("yamada", json()));
  print_poly("jaeger", record.value("jaeger", json()));
  print_poly("normalized_yamada", record.value("normalized_yamada", json()));
  print_poly("normalized_jaeger", record.value("normalized_jaeger", json()));
  if (record.contains("twists")) {
    out << "twists:";
    for (size_t i = 0; i < record["twists"].size(); ++i)
      out << " " << record["edges"][i].get<std::string>() << "=" << record["twists"][i].get<int>();
    out << "\n";
    out << "jones_associated: " << poly_from_json(record["jones_associated"].dump()).to_string()
        << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& identity, bool as_json,
               int max_crossings, std::ostream& out) {
  CatalogEntry entry = catalog::load(input);
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = max_crossings > 0 ? max_crossings : 28;
  std::vector<VerificationReport> reports;
  auto want = [&](const char* name) { return identity == "all" || identity == name; };

  if (entry.kind == GraphKind::K4) {
    if (want("main")) reports.push_back(verify_main_theorem(entry.diagram, cfg));
    if (want("yamada")) reports.push_back(verify_yamada_corollary(entry.diagram, cfg));
    if (want("links")) reports.push_back(verify_links_corollary(entry.diagram, cfg));
    if (want("bar")) reports.push_back(verify_bar_expansion(entry.diagram, cfg));
    if (want("jones-k4")) reports.push_back(verify_k4_jones_formula(entry.diagram, cfg));
  } else if (entry.kind == GraphKind::Theta) {
    if (want("theta")) reports.push_back(verify_theta_theorem(entry.diagram, cfg));
    if (want("theta-jones"))
      reports.push_back(verify_theta_jones_formula(entry.diagram, {}, cfg));
  } else if (entry.kind == GraphKind::Knot) {
    if (want("knot")) reports.push_back(verify_knot_normalization(entry.diagram, cfg));
  }
  if (reports.empty())
    throw KindMismatchError("identity '" + identity + "' does not apply to a " +
                            to_string(entry.kind) + " diagram");

  bool all_equal = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& rep : reports) {
      arr.push_back(json::parse(rep.to_json()));
      all_equal = all_equal && rep.equal;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& rep : reports) {
      out << entry.name << " " << rep.identity << ": " << (rep.equal ? "equal" : "NOT EQUAL")
          << "\n";
      out << "  lhs = " << rep.lhs.to_string() << "\n";
      out << "  rhs = " << rep.rhs.to_string() << "\n";
      if (!rep.equal) {
        for (const auto& [name, value] : rep.terms)
          out << "  " << name << " = " << value.to_string() << "\n";
      }
      all_equal = all_equal && rep.equal;
    }
  }
  return all_equal ? 0 : 3;
}

int cmd_table(std::ostream& out) {
  StateSumConfig cfg;
  bool all_ok = true;
  out << "graph     match  shift  polynomial\n";
  for (const auto& name : catalog::list()) {
    if (name.rfind("omega", 0) != 0 || name.find('-') != std::string::npos) continue;
    CatalogEntry entry = catalog::load(name);
    if (!entry.expected_yamada) continue;
    LaurentPolynomial y = yamada(entry.diagram, cfg);
    auto shift = entry.expected_yamada->unit_shift_to(y);
    bool ok = shift.has_value() && (!entry.exact || *shift == 0);
    all_ok = all_ok && ok;
    out << name;
    for (size_t pad = name.size(); pad < 10; ++pad) out << ' ';
    out << (ok ? "pass " : "FAIL ") << "  ";
    out << (shift ? std::to_string(*shift) : std::string("-")) << "      " << y.to_string()
        << "\n";
  }
  return all_ok ? 0 : 3;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& name : catalog::list()) {
    CatalogEntry entry = catalog::load(name);
    out << name;
    for (size_t pad = name.size(); pad < 16; ++pad) out << ' ';
    out << to_string(entry.kind) << "  " << entry.description << "\n";
  }
  return 0;
}

int cmd_double(const std::string& input, const std::string& output_path, std::ostream& out) {
  CatalogEntry entry = catalog::load(input);
  LinkDiagram link = double_diagram(entry.diagram);
  if (!output_path.empty()) {
    CatalogEntry doubled;
    doubled.name = entry.name + "-doubled";
    doubled.diagram = link_to_diagram(link);
    catalog::save(doubled, output_path);
  }
  json j;
  j["source"] = entry.name;
  j["crossings"] = link.crossings;
  j["components"] = link.components();
  j["free_loops"] = link.free_loops;
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 28;
  j["bracket"] = poly_node(kauffman_bracket(link, cfg));
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_associated(const std::string& input, bool as_json, std::ostream& out) {
  CatalogEntry entry = catalog::load(input);
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 28;
  AssociatedLink assoc = associated_link(entry.diagram, cfg);
  json j;
  j["source"] = entry.name;
  j["edges"] = assoc.data.edge_names;
  j["twists"] = assoc.data.params;
  j["crossings"] = assoc.link.crossings;
  j["components"] = assoc.link.components();
  j["writhe"] = assoc.link.crossings > 0 ? assoc.link.writhe() : 0;
  j["jones"] = poly_node(jones(assoc.link, cfg));
  if (as_json) {
    out << j.dump(2) << "\n";
  } else {
    out << "source: " << entry.name << "\ntwists:";
    for (size_t i = 0; i < assoc.data.params.size(); ++i)
      out << " " << assoc.data.edge_names[i] << "=" << assoc.data.params[i];
    out << "\ncrossings: " << assoc.link.crossings << "\ncomponents: " << assoc.link.components()
        << "\nwrithe: " << j["writhe"].get<long>() << "\njones: "
        << poly_from_json(j["jones"].dump()).to_string() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial invariants of spatial graph diagrams"};
  app.require_subcommand(1);

  std::string input, identity = "all", output_path;
  bool as_json = false;
  int max_crossings = 0;

  auto* inv = app.add_subcommand("invariants", "Compute all invariants of a diagram");
  inv->add_option("input", input, "catalog name or diagram file")->required();
  inv->add_flag("--json", as_json, "machine-readable output");
  inv->add_option("--max-crossings", max_crossings, "override the crossing caps");

  auto* ver = app.add_subcommand("verify", "Check the polynomial identities on a diagram");
  ver->add_option("input", input, "catalog name or diagram file")->required();
  ver->add_option("--identity", identity,
                  "all|main|yamada|links|bar|jones-k4|theta|theta-jones|knot");
  ver->add_flag("--json", as_json, "machine-readable output");
  ver->add_option("--max-crossings", max_crossings, "override the bracket crossing cap");

  auto* tab = app.add_subcommand("table1", "Recompute the reference table of ten graphs");

  auto* cat = app.add_subcommand("catalog", "Catalog operations");
  auto* cat_list = cat->add_subcommand("list", "List built-in diagrams");

  auto* dbl = app.add_subcommand("double", "2-parallel of a diagram");
  dbl->add_option("input", input, "catalog name or diagram file")->required();
  dbl->add_option("-o,--output", output_path, "write the doubled diagram JSON here");

  auto* assoc = app.add_subcommand("associated-link", "Zero-linking-form band boundary");
  assoc->add_option("input", input, "catalog name or diagram file")->required();
  assoc->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (inv->parsed()) return cmd_invariants(input, as_json, max_crossings, out);
    if (ver->parsed()) return cmd_verify(input, identity, as_json, max_crossings, out);
    if (tab->parsed()) return cmd_table(out);
    if (cat->parsed() && cat_list->parsed()) return cmd_catalog_list(out);
    if (dbl->parsed()) return cmd_double(input, output_path, out);
    if (assoc->parsed()) return cmd_associated(input, as_json, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const KindMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sgpoly::cli
