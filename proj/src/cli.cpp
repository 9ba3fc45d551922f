#include "octa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "octa/bn.hpp"
#include "octa/classification.hpp"
#include "octa/gram.hpp"
#include "octa/induced.hpp"
#include "octa/lab.hpp"
#include "octa/thoma.hpp"

namespace octa::cli {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("file", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("file", "invalid JSON in '" + path + "': " + e.what());
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void emit_series(std::ostream& out, const std::vector<std::pair<int, Rational>>& series) {
  out << "m,value\n";
  for (const auto& [m, v] : series) out << m << "," << format_rational(v) << "\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact characters, induced states and classification for "
               "finite-support signed permutations"};
  app.require_subcommand(1);

  // char-eval
  auto* char_eval = app.add_subcommand("char-eval", "evaluate an indecomposable character");
  std::string ce_spec, ce_element;
  char_eval->add_option("--spec", ce_spec, "character spec JSON file")->required();
  char_eval->add_option("--element", ce_element, "group element, e.g. \"(1 2);signs=3\"")
      ->required();
  char_eval->callback([&] {
    ThomaSpec spec = thoma_from_json(load_json(ce_spec));
    emit(out, {{"value", format_rational(character_value(spec, parse_element(ce_element)))}});
  });

  // bn-table
  auto* bn_table = app.add_subcommand("bn-table", "character table of the rank-n group");
  int bt_n = 0;
  std::string bt_format = "json";
  bn_table->add_option("--n", bt_n, "rank (<= 6)")->required();
  bn_table->add_option("--format", bt_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bn_table->callback([&] {
    CharacterTable t = bn_character_table(bt_n);
    if (bt_format == "csv")
      out << table_to_csv(t);
    else
      emit(out, table_to_json(t));
  });

  // coset-rep
  auto* coset = app.add_subcommand("coset-rep", "canonical coset involution");
  std::string cr_element;
  int cr_k = 0;
  coset->add_option("--element", cr_element, "group element")->required();
  coset->add_option("--k", cr_k, "level of the Young subgroup")->required();
  coset->callback([&] {
    GroupElement g = parse_element(cr_element);
    CosetInvolution inv = canonical_coset_involution(g.perm, cr_k);
    json pairs = json::array();
    for (auto [p, r] : inv.pairs) pairs.push_back({p, r});
    emit(out, {{"pairs", pairs},
               {"involution", to_string(GroupElement{inv.as_permutation(), SignVector{}})}});
  });

  // state-eval
  auto* state_eval = app.add_subcommand("state-eval", "evaluate an induced GNS state");
  std::string se_spec, se_element;
  state_eval->add_option("--spec", se_spec, "rep spec JSON file")->required();
  state_eval->add_option("--element", se_element, "group element")->required();
  state_eval->callback([&] {
    RepSpec spec = rep_spec_from_json(load_json(se_spec));
    emit(out, {{"value", format_rational(induced_state(spec, parse_element(se_element)))}});
  });

  // classify
  auto* classify = app.add_subcommand("classify", "compare two representation specs");
  std::string cl_a, cl_b;
  classify->add_option("--a", cl_a, "first rep spec JSON file")->required();
  classify->add_option("--b", cl_b, "second rep spec JSON file")->required();
  classify->callback([&] {
    RepSpec a = rep_spec_from_json(load_json(cl_a));
    RepSpec b = rep_spec_from_json(load_json(cl_b));
    emit(out, classification_json(a, b));
  });

  // gram-check
  auto* gram = app.add_subcommand("gram-check", "positive-definiteness certificate");
  std::string gc_thoma, gc_rep, gc_file;
  std::vector<std::string> gc_elements;
  auto* opt_thoma = gram->add_option("--thoma-spec", gc_thoma, "character spec JSON file");
  auto* opt_rep = gram->add_option("--rep-spec", gc_rep, "rep spec JSON file");
  opt_thoma->excludes(opt_rep);
  gram->add_option("--element", gc_elements, "group element (repeatable)");
  gram->add_option("--elements", gc_file, "JSON file with an array of element strings");
  gram->callback([&] {
    if (gc_thoma.empty() == gc_rep.empty())
      throw DomainError("spec", "provide exactly one of --thoma-spec or --rep-spec");
    std::vector<GroupElement> elems;
    for (const auto& s : gc_elements) elems.push_back(parse_element(s));
    if (!gc_file.empty()) {
      json arr = load_json(gc_file);
      if (!arr.is_array()) throw DomainError("elements", "expected a JSON array of strings");
      for (const auto& s : arr) elems.push_back(parse_element(s.get<std::string>()));
    }
    if (elems.empty()) throw DomainError("elements", "no elements given");

    StateFunction phi;
    if (!gc_thoma.empty()) {
      ThomaSpec spec = thoma_from_json(load_json(gc_thoma));
      phi = [spec](const GroupElement& g) { return character_value(spec, g); };
    } else {
      RepSpec spec = rep_spec_from_json(load_json(gc_rep));
      phi = [spec](const GroupElement& g) { return induced_state(spec, g); };
    }
    GramCheck check = gram_psd_check(phi, elems);
    json doc{{"verdict", check.psd ? "psd" : "not_psd"}, {"exact", check.exact}};
    if (!check.psd) {
      doc["witness"] = {{"indices", check.witness_indices},
                        {"minor", format_rational(check.witness_minor)}};
    }
    emit(out, doc);
  });

  // lab
  auto* lab = app.add_subcommand("lab", "finite-truncation stability witnesses");
  int lab_example = 0, lab_f_index = 1, lab_n = 1, lab_max_m = 12;
  std::string lab_p = "1/2";
  lab->add_option("--example", lab_example, "1 or 3")->required()
      ->check(CLI::IsMember({1, 3}));
  lab->add_option("--f-index", lab_f_index, "basis index (example 1)");
  lab->add_option("--p", lab_p, "Bernoulli parameter as p/q (example 3)");
  lab->add_option("--n", lab_n, "coordinate index (example 3)");
  lab->add_option("--max-m", lab_max_m, "largest truncation");
  lab->callback([&] {
    if (lab_example == 1) {
      if (lab_max_m > 64) throw DomainError("max-m", "example 1 series guarded at m <= 64");
      emit_series(out, example1_series(lab_f_index, lab_max_m));
    } else {
      if (lab_max_m > 20) throw DomainError("max-m", "example 3 series guarded at m <= 20");
      BernoulliParam p(parse_rational(lab_p, "p"));
      emit_series(out, example3_defect_series(p, lab_n, lab_max_m));
    }
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    emit(out, json{{"error", {{"field", e.field()}, {"message", e.what()}}}});
    return 1;
  } catch (const nlohmann::json::exception& e) {
    emit(out, json{{"error", {{"field", "json"}, {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace octa::cli
