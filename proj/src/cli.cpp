//  Copyright 2026 the declat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "declat/cli.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "declat/corpus.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/dot.hpp"
#include "declat/errors.hpp"
#include "declat/instances.hpp"
#include "declat/irreducibles.hpp"
#include "declat/json_io.hpp"
#include "declat/lattice_props.hpp"
#include "declat/set_family.hpp"
#include "declat/theorems.hpp"
#include "declat/tolerance.hpp"

namespace declat {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "declat/1";

struct Options {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  std::string corpus;
  int cap_lattice = 0;
  int cap_n = 0;
  std::uint64_t seed = 7;
};

Caps caps_of(const Options& o) {
  Caps c;
  if (o.cap_lattice > 0) c.max_lattice = o.cap_lattice;
  if (o.cap_n > 0) {
    c.max_ground = o.cap_n;
    c.max_graph_brute = o.cap_n;
    c.max_tree_brute = o.cap_n;
  }
  return c;
}

ParsedInstance load_instance(const Options& o) {
  std::string text;
  if (!o.input_path.empty()) {
    std::ifstream in(o.input_path);
    if (!in) throw ParseError("cannot open input file", o.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!o.inline_json.empty()) {
    text = o.inline_json;
  } else {
    throw ParseError("one of --input or --inline is required", "$");
  }
  return parse_instance_text(text);
}

ojson set_json(Subset s) { return ojson(set_elements(s)); }

ojson pair_json(const std::pair<Subset, Subset>& p) {
  return ojson{{"a", set_json(p.first)}, {"b", set_json(p.second)}};
}

std::string emit(const ojson& doc) { return doc.dump(2) + "\n"; }

std::vector<std::string> element_labels(const DecompLattice& d) {
  std::vector<std::string> labels;
  labels.reserve(d.elements.size());
  for (const Partition& p : d.elements) labels.push_back(p.label());
  return labels;
}

ojson sorted_cover_json(const FiniteLattice& l) {
  std::vector<std::pair<int, int>> covers = l.cover_pairs();
  std::sort(covers.begin(), covers.end());
  ojson arr = ojson::array();
  for (auto [lo, hi] : covers) arr.push_back(ojson::array({lo, hi}));
  return arr;
}

RunResult cmd_validate(const Options& o) {
  const Caps caps = caps_of(o);
  SetFamily f = family_of(load_instance(o), caps);
  AxiomReport r = check_axioms(f);

  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "validate";
  doc["ground_size"] = f.ground_size();
  doc["family_size"] = f.size();
  doc["axioms"] = ojson{{"closure_top", r.closure_top},
                        {"closure_intersections", r.closure_intersections},
                        {"i0", r.i0},
                        {"i1", r.i1},
                        {"i2", r.i2}};
  doc["closure_system"] = r.closure_system();
  doc["interval_system"] = r.interval_system();

  ojson w = ojson::object();
  if (!r.closure_intersections)
    w["closure_intersections"] = pair_json(r.closure_witness);
  if (!r.i0) w["i0"] = set_json(r.i0_witness);
  if (!r.i1) w["i1"] = pair_json(r.i1_witness);
  if (!r.i2) w["i2"] = pair_json(r.i2_witness);
  if (!w.empty()) doc["witnesses"] = std::move(w);

  RunResult res;
  res.out = emit(doc);
  res.exit_code = r.interval_system() ? 0 : 1;
  return res;
}

RunResult cmd_lattice(const Options& o) {
  const Caps caps = caps_of(o);
  DecompLattice d = build_lattice(family_of(load_instance(o), caps), caps);
  std::vector<std::string> labels = element_labels(d);

  RunResult res;
  if (o.format == "dot") {
    res.out = hasse_dot(d.lattice, labels, "decomposition_lattice");
    return res;
  }
  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "lattice";
  doc["ground_size"] = d.ground_size();
  doc["interval_system"] = d.axioms.interval_system();
  doc["sublattice_of_partitions"] = d.sublattice_of_partitions;
  doc["size"] = d.lattice.size();
  doc["elements"] = ojson(labels);
  doc["covers"] = sorted_cover_json(d.lattice);
  res.out = emit(doc);
  return res;
}

RunResult cmd_irreducibles(const Options& o) {
  const Caps caps = caps_of(o);
  DecompLattice d = build_lattice(family_of(load_instance(o), caps), caps);
  std::vector<std::string> labels = element_labels(d);

  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "irreducibles";
  doc["ground_size"] = d.ground_size();
  doc["size"] = d.lattice.size();

  ojson ji = ojson::array();
  for (const Irreducible& j : join_irreducibles(d.lattice))
    ji.push_back(ojson{{"element", labels[j.elem]},
                       {"lower_cover", labels[j.star]}});
  doc["join_irreducibles"] = std::move(ji);

  ojson mi = ojson::array();
  for (const Irreducible& m : meet_irreducibles(d.lattice))
    mi.push_back(ojson{{"element", labels[m.elem]},
                       {"upper_cover", labels[m.star]}});
  doc["meet_irreducibles"] = std::move(mi);

  if (d.axioms.closure_system() && d.axioms.i0) {
    ojson ch = ojson::array();
    for (const CharacterizedIrreducible& c :
         characterize_join_irreducibles(d.family, caps)) {
      ojson blocks = ojson::array();
      for (Subset b : c.gpd_blocks) blocks.push_back(set_json(b));
      ch.push_back(ojson{{"member", set_json(c.member)},
                         {"gpd_blocks", std::move(blocks)}});
    }
    doc["characterized"] = std::move(ch);
  }

  RunResult res;
  res.out = emit(doc);
  return res;
}

ojson property_json(const PropertyCheck& c,
                    const std::vector<std::string>& labels) {
  ojson doc;
  doc["holds"] = c.holds;
  if (!c.holds) {
    ojson w = ojson::array();
    for (int x : c.witness) w.push_back(labels[x]);
    doc["witness"] = std::move(w);
  }
  return doc;
}

RunResult cmd_props(const Options& o) {
  const Caps caps = caps_of(o);
  DecompLattice d = build_lattice(family_of(load_instance(o), caps), caps);
  std::vector<std::string> labels = element_labels(d);
  PropertyReport r = check_properties(d.lattice, caps);

  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "props";
  doc["ground_size"] = d.ground_size();
  doc["size"] = d.lattice.size();
  doc["interval_system"] = d.axioms.interval_system();
  doc["properties"] =
      ojson{{"semimodular", property_json(r.semimodular, labels)},
            {"atomistic", property_json(r.atomistic, labels)},
            {"dually_atomistic", property_json(r.dually_atomistic, labels)},
            {"geometric", property_json(r.geometric, labels)},
            {"distributive", property_json(r.distributive, labels)},
            {"strong", property_json(r.strong, labels)},
            {"dually_strong", property_json(r.dually_strong, labels)},
            {"consistent", property_json(r.consistent, labels)},
            {"balanced", property_json(r.balanced, labels)},
            {"join_replacement", property_json(r.korp, labels)}};
  ojson std_elems = ojson::array();
  for (int x : r.standard) std_elems.push_back(labels[x]);
  doc["standard_elements"] = std::move(std_elems);

  const bool mandated = r.semimodular.holds && r.strong.holds &&
                        r.consistent.holds && r.balanced.holds && r.korp.holds;
  RunResult res;
  res.out = emit(doc);
  res.exit_code = (d.axioms.interval_system() && !mandated) ? 1 : 0;
  return res;
}

RunResult cmd_tolerance(const Options& o) {
  const Caps caps = caps_of(o);
  DecompLattice d = build_lattice(family_of(load_instance(o), caps), caps);
  std::vector<std::string> labels = element_labels(d);

  BitMatrix rel = skeleton_tolerance(d.lattice);
  std::vector<ToleranceBlock> blocks = tolerance_blocks(d.lattice, rel, caps);
  FiniteLattice factor = factor_lattice(d.lattice, blocks);

  std::vector<std::string> block_labels;
  for (const ToleranceBlock& b : blocks)
    block_labels.push_back("[" + labels[b.lo] + ", " + labels[b.hi] + "]");

  RunResult res;
  if (o.format == "dot") {
    res.out = hasse_dot(factor, block_labels, "skeleton_factor");
    return res;
  }

  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "tolerance";
  doc["ground_size"] = d.ground_size();
  doc["size"] = d.lattice.size();
  ojson barr = ojson::array();
  for (const ToleranceBlock& b : blocks) {
    ojson members = ojson::array();
    for (int x = 0; x < d.lattice.size(); ++x)
      if (d.lattice.leq(b.lo, x) && d.lattice.leq(x, b.hi))
        members.push_back(labels[x]);
    barr.push_back(ojson{{"lo", labels[b.lo]},
                         {"hi", labels[b.hi]},
                         {"members", std::move(members)}});
  }
  doc["skeleton_blocks"] = std::move(barr);
  doc["factor"] = ojson{{"size", factor.size()},
                        {"elements", ojson(block_labels)},
                        {"covers", sorted_cover_json(factor)}};
  doc["glued"] = is_glued_tolerance(d.lattice, rel);
  doc["glued_by_geometric"] = is_glued_by_geometric(d.lattice, caps);
  res.out = emit(doc);
  return res;
}

// --- verify-paper ---

struct CheckAgg {
  int applicable = 0;
  bool pass = true;
  std::string witness;
};

class CheckTable {
 public:
  explicit CheckTable(std::vector<std::string> ids) : ids_(std::move(ids)) {
    rows_.resize(ids_.size());
  }

  void record(const std::string& id, const std::string& entry,
              const TheoremCheck& c) {
    CheckAgg& agg = row(id);
    if (!c.applicable) return;
    ++agg.applicable;
    if (!c.pass && agg.pass) {
      agg.pass = false;
      agg.witness = "entry " + entry + ": " +
                    (c.detail.empty() ? "check failed" : c.detail);
    }
  }

  bool all_pass() const {
    for (const CheckAgg& a : rows_)
      if (!a.pass) return false;
    return true;
  }

  ojson to_json() const {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      ojson row{{"id", ids_[i]},
                {"applicable", rows_[i].applicable},
                {"pass", rows_[i].pass}};
      if (!rows_[i].pass) row["witness"] = rows_[i].witness;
      arr.push_back(std::move(row));
    }
    return arr;
  }

  std::string log_lines() const {
    std::string out;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      out += "check " + ids_[i] + ": ";
      if (rows_[i].applicable == 0)
        out += "not applicable\n";
      else if (rows_[i].pass)
        out += "pass (" + std::to_string(rows_[i].applicable) +
               " applicable)\n";
      else
        out += "FAIL " + rows_[i].witness + "\n";
    }
    return out;
  }

 private:
  CheckAgg& row(const std::string& id) {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return rows_[i];
    throw Error("unknown check id " + id);
  }

  std::vector<std::string> ids_;
  std::vector<CheckAgg> rows_;
};

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "builder-axioms",
      "lattice-bounds",
      "sublattice-flag",
      "join-generation",
      "single-merge-covers",
      "union-closed-semimodular",
      "irreducible-characterization",
      "gpd-blocks-strong",
      "lower-star-strong",
      "atomistic-equivalences",
      "strong-decompositions-standard",
      "standard-split-identity",
      "balanced-and-replacement",
      "nonfragile-strong",
      "strong-family-axioms",
      "restrictions-preserve-axioms",
      "glued-by-geometric",
      "tree-boolean-isomorphism",
      "semimodular-equivalences",
      "replacement-iff-consistent",
      "balanced-iff-strong-both-sides",
      "semimodular-implies-dually-strong",
      "glued-matches-semimodular-strong",
  };
  return ids;
}

TheoremCheck builder_axiom_check(const std::string& kind,
                                 const AxiomReport& r) {
  TheoremCheck c;
  if (kind == "family") {
    if (!r.closure_system()) {
      c.pass = false;
      c.detail = "named family is not a closure system";
    }
    return c;
  }
  if (!r.interval_system() && kind != "tree") {
    c.pass = false;
    c.detail = kind + " family fails the interval-system axioms";
  }
  if (kind == "tree" && !(r.closure_system() && r.i0)) {
    c.pass = false;
    c.detail = "subtree family misses closure or singleton axioms";
  }
  return c;
}

std::string elems_text(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? ", " : "") + std::to_string(xs[i]);
  return out;
}

// An injected bare lattice stands in for a decomposition lattice, so the
// properties every interval system forces are asserted on it directly.
void run_injected_property_checks(CheckTable& table, const std::string& name,
                                  const FiniteLattice& l, const Caps& caps) {
  auto as_check = [](const PropertyCheck& c, const std::string& what) {
    TheoremCheck t;
    if (!c.holds) {
      t.pass = false;
      t.detail = what + " fails at elements " + elems_text(c.witness);
    }
    return t;
  };

  table.record("union-closed-semimodular", name,
               as_check(is_semimodular(l), "semimodularity"));

  TheoremCheck bal;
  for (const auto& [check, what] :
       std::vector<std::pair<PropertyCheck, std::string>>{
           {is_balanced(l), "balancedness"},
           {has_join_korp(l, caps), "the join replacement property"},
           {is_strong_lattice(l), "strength"},
           {is_consistent(l), "consistency"}}) {
    if (!check.holds && bal.pass) {
      bal.pass = false;
      bal.detail = what + " fails at elements " + elems_text(check.witness);
    }
  }
  table.record("balanced-and-replacement", name, bal);

  TheoremCheck split;
  for (const Irreducible& j : join_irreducibles(l)) {
    for (int x = 0; x < l.size() && split.pass; ++x) {
      if (l.meet(j.elem, l.join(j.star, x)) != l.join(j.star, l.meet(j.elem, x))) {
        split.pass = false;
        split.detail = "the split identity fails at elements " +
                       elems_text({j.elem, x});
      }
    }
    if (!split.pass) break;
  }
  table.record("standard-split-identity", name, split);

  TheoremCheck glued;
  if (!is_glued_by_geometric(l, caps)) {
    glued.pass = false;
    glued.detail = "a skeleton block is not geometric";
  }
  table.record("glued-by-geometric", name, glued);
}

void run_lattice_checks(CheckTable& table, const std::string& name,
                        const FiniteLattice& l, const Caps& caps) {
  table.record("semimodular-equivalences", name,
               verify_semimodular_equivalences(l, caps));
  table.record("replacement-iff-consistent", name,
               verify_korp_consistent_agree(l, caps));
  table.record("balanced-iff-strong-both-sides", name,
               verify_balanced_strong_duality(l));
  table.record("semimodular-implies-dually-strong", name,
               verify_semimodular_dually_strong(l));
  table.record("glued-matches-semimodular-strong", name,
               verify_glued_matches_equivalences(l, caps));
}

void run_entry_checks(CheckTable& table, const CorpusEntry& entry,
                      const Caps& caps) {
  DecompLattice d = build_lattice(entry.family, caps);
  const std::string& name = entry.name;

  table.record("builder-axioms", name,
               builder_axiom_check(entry.kind, d.axioms));
  table.record("lattice-bounds", name, verify_lattice_bounds(d));
  table.record("sublattice-flag", name, verify_sublattice_flag(d));
  table.record("join-generation", name, verify_join_generation(d));
  table.record("single-merge-covers", name, verify_single_merge_covers(d));
  table.record("union-closed-semimodular", name,
               verify_union_closed_semimodular(d));
  table.record("irreducible-characterization", name,
               verify_irreducible_characterization(d, caps));
  table.record("gpd-blocks-strong", name, verify_gpd_blocks_strong(d, caps));
  table.record("lower-star-strong", name, verify_lower_star_strong(d));
  table.record("atomistic-equivalences", name,
               verify_atomistic_equivalences(d, caps));
  table.record("strong-decompositions-standard", name,
               verify_strong_decompositions_standard(d, caps));
  table.record("standard-split-identity", name,
               verify_standard_split_identity(d));
  table.record("balanced-and-replacement", name,
               verify_interval_balanced_korp(d, caps));
  table.record("nonfragile-strong", name, verify_nonfragile_strong(d));
  table.record("strong-family-axioms", name,
               verify_strong_family_axioms(d, caps));
  table.record("restrictions-preserve-axioms", name,
               verify_restrictions_preserve_axioms(d, caps));
  table.record("glued-by-geometric", name,
               verify_glued_by_geometric_interval(d, caps));

  if (entry.tree) {
    TheoremCheck c;
    if (!verify_tree_boolean_isomorphism(*entry.tree, caps)) {
      c.pass = false;
      c.detail =
          "decomposition lattice is not the Boolean lattice of edge subsets";
    }
    table.record("tree-boolean-isomorphism", name, c);
  }

  run_lattice_checks(table, name, d.lattice, caps);
}

RunResult cmd_verify_paper(const Options& o) {
  const Caps caps = caps_of(o);
  CheckTable table(check_ids());

  ojson doc;
  doc["schema"] = kSchema;
  doc["command"] = "verify-paper";

  RunResult res;
  int entries = 0;
  const bool has_input = !o.input_path.empty() || !o.inline_json.empty();
  if (has_input) {
    ParsedInstance inst = load_instance(o);
    doc["input_type"] = inst.type;
    if (inst.type == "lattice") {
      FiniteLattice l = lattice_of_explicit(inst);
      run_injected_property_checks(table, "input", l, caps);
      run_lattice_checks(table, "input", l, caps);
    } else {
      CorpusEntry entry{"input", inst.type, family_of(inst, caps),
                        std::nullopt};
      if (inst.type == "tree")
        entry.tree = TreeInstance(inst.n, inst.pairs);
      run_entry_checks(table, entry, caps);
    }
    entries = 1;
  } else {
    const std::string selector = o.corpus.empty() ? "all" : o.corpus;
    doc["corpus"] = selector;
    doc["seed"] = o.seed;
    std::vector<CorpusEntry> corpus = build_corpus(selector, o.seed, caps);
    entries = static_cast<int>(corpus.size());
    res.err += "corpus " + selector + ": " + std::to_string(entries) +
               " entries\n";
    for (const CorpusEntry& entry : corpus) run_entry_checks(table, entry, caps);
  }

  doc["entries"] = entries;
  doc["checks"] = table.to_json();
  doc["pass"] = table.all_pass();

  res.err += table.log_lines();
  res.out = emit(doc);
  res.exit_code = table.all_pass() ? 0 : 1;
  return res;
}

ojson error_json(const std::string& kind, const std::string& message,
                 const std::string& path = "") {
  ojson doc;
  doc["schema"] = kSchema;
  ojson e;
  e["kind"] = kind;
  e["message"] = message;
  if (!path.empty()) e["path"] = path;
  doc["error"] = std::move(e);
  return doc;
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"interval-system decomposition lattice toolkit"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    CLI::Option* in = sub->add_option("--input", o.input_path,
                                      "path to a JSON instance");
    sub->add_option("--inline", o.inline_json, "inline JSON instance")
        ->excludes(in);
    sub->add_option("--cap-lattice", o.cap_lattice,
                    "largest allowed lattice size");
    sub->add_option("--cap-n", o.cap_n, "largest allowed ground-set size");
    if (with_format)
      sub->add_option("--format", o.format, "output format")
          ->check(CLI::IsMember({"json", "dot"}));
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check the closure and interval axioms of an instance");
  add_common(validate, false);
  CLI::App* lattice = app.add_subcommand(
      "lattice", "enumerate the decomposition lattice");
  add_common(lattice, true);
  CLI::App* irred = app.add_subcommand(
      "irreducibles", "join- and meet-irreducible decompositions");
  add_common(irred, false);
  CLI::App* props = app.add_subcommand(
      "props", "structural properties of the decomposition lattice");
  add_common(props, false);
  CLI::App* tolerance = app.add_subcommand(
      "tolerance", "skeleton tolerance blocks and the factor lattice");
  add_common(tolerance, true);
  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run every structural check over a corpus or instance");
  add_common(verify, false);
  verify->add_option("--seed", o.seed, "seed for the randomized corpus part");
  verify->add_option("--corpus", o.corpus, "built-in corpus selector")
      ->check(CLI::IsMember({"small-graphs", "linear-orders", "trees", "all"}));

  std::vector<const char*> argv;
  argv.push_back("declat");
  for (const std::string& a : args) argv.push_back(a.c_str());

  RunResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.out = emit(error_json("usage", e.what()));
    res.exit_code = 2;
    return res;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (lattice->parsed()) return cmd_lattice(o);
    if (irred->parsed()) return cmd_irreducibles(o);
    if (props->parsed()) return cmd_props(o);
    if (tolerance->parsed()) return cmd_tolerance(o);
    return cmd_verify_paper(o);
  } catch (const ParseError& e) {
    res.out = emit(error_json("parse", e.what(), e.path));
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const DomainError& e) {
    res.out = emit(error_json("domain", e.what()));
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const ResourceError& e) {
    res.out = emit(error_json("resource", e.what()));
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 3;
  } catch (const StructureError& e) {
    res.out = emit(error_json("structure", e.what()));
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

}  // namespace declat
