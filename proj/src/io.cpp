#include "f2c/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace f2c {

namespace {

// Re-raise InvalidInput with a location prefix such as "pi: ".
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

void require_object(const json& j, const std::string& what, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!j.is_object()) fail_input(what + " must be a JSON object");
  for (const auto& key : required)
    if (!j.contains(key)) fail_input(what + " is missing \"" + key + "\"");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      fail_input(what + " has unknown key \"" + it.key() + "\"");
}

GroupRef group_with_cap(const json& spec, int max_order, const std::string& where) {
  GroupRef g = located(where, [&] { return build_group(spec); });
  if (g->order() > max_order)
    fail_budget(where + ": group order " + std::to_string(g->order()) + " exceeds --max-order " +
                std::to_string(max_order));
  return g;
}

std::vector<int> local_relabel(const Subgroup& s) {
  std::vector<int> rel(static_cast<std::size_t>(s.parent->order()), -1);
  for (int i = 0; i < s.order(); ++i) rel[s.elements[i]] = i;
  return rel;
}

std::string qz_text(const QZ& q) { return q.str(); }

json census_json(const Census& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"subgroup", e.b_in_g},
                       {"order", e.b.order()},
                       {"h2", e.h2.factors},
                       {"count", e.count},
                       {"exact", e.exact}});
  return {{"entries", entries},
          {"exact", c.exact()},
          {"xi_trivializable", c.xi_trivializable},
          {"total", c.total()}};
}

json component_json(const ComponentRecord& c) {
  return {{"name", c.name},
          {"representative", c.representative},
          {"grade", c.grade},
          {"support", c.support},
          {"stabilizer", c.stabilizer.elements},
          {"xi", cochain_to_json(c.xi, &c.stabilizer.elements)},
          {"xi_trivial", c.xi_trivial},
          {"census", census_json(c.census)},
          {"simples", c.census.total()}};
}

json components_array(const std::vector<ComponentRecord>& cs, int& total) {
  json arr = json::array();
  total = 0;
  for (const auto& c : cs) {
    arr.push_back(component_json(c));
    total += c.census.total();
  }
  return arr;
}

json fusion_rows(const FusionTable& t) {
  auto name_of = [&](int rep) {
    auto it = std::find(t.representatives.begin(), t.representatives.end(), rep);
    return t.names[static_cast<std::size_t>(it - t.representatives.begin())];
  };
  json rows = json::array();
  for (const auto& r : t.rows) {
    json summands = json::array();
    for (auto [rep, mult] : r.summands)
      summands.push_back({{"name", name_of(rep)}, {"representative", rep}, {"multiplicity", mult}});
    rows.push_back({{"left", name_of(r.left)},
                    {"right", name_of(r.right)},
                    {"left_representative", r.left},
                    {"right_representative", r.right},
                    {"summands", summands},
                    {"total", r.total()},
                    {"text", render_fusion(r, t.representatives, t.names)}});
  }
  return rows;
}

void add_notes(json& j, const Presentation& p) {
  if (!p.notes.empty()) j["notes"] = p.notes;
}

json presentation_head(const Presentation& p) {
  return {{"group", group_summary(p.g)},
          {"subgroup", p.h.elements},
          {"pi_trivial", p.pi.is_zero()},
          {"psi_trivial", p.psi.is_zero()}};
}

}  // namespace

// ---- input -------------------------------------------------------------------

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail_input(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Subgroup subgroup_from_json(const json& gens, const GroupRef& g, const std::string& what) {
  if (!gens.is_array()) fail_input(what + " must be an array of generator indices");
  std::vector<int> v;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& x = gens[i];
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= g->order())
      fail_input(what + "[" + std::to_string(i) + "]: not an element index of a group of order " +
                 std::to_string(g->order()));
    v.push_back(x.get<int>());
  }
  return generate(g, v);
}

Presentation presentation_from_json(const json& j, int max_order) {
  require_object(j, "presentation", {"group", "subgroup"}, {"pi", "psi", "notes", "name"});
  GroupRef g = group_with_cap(j["group"], max_order, "group");
  Subgroup h = subgroup_from_json(j["subgroup"], g, "subgroup");
  GroupRef hg = subgroup_group(h);
  Cochain pi = located("pi", [&] { return cochain_from_json(j.value("pi", json("trivial")), g, 4); });
  const auto rel = local_relabel(h);
  Cochain psi = located("psi", [&] { return cochain_from_json(j.value("psi", json("trivial")), hg, 3, &rel); });
  Presentation p = make_presentation(g, h, pi, psi);
  if (j.contains("notes")) {
    if (!j["notes"].is_array()) fail_input("notes must be an array of strings");
    for (std::size_t i = 0; i < j["notes"].size(); ++i) {
      if (!j["notes"][i].is_string()) fail_input("notes[" + std::to_string(i) + "] must be a string");
      p.notes.push_back(j["notes"][i].get<std::string>());
    }
  }
  return p;
}

json presentation_to_json(const Presentation& p) {
  if (p.g->provenance().is_null()) fail_input("presentation_to_json: group has no constructor record");
  json j = {{"group", p.g->provenance()},
            {"subgroup", generators_of(p.h)},
            {"pi", cochain_to_json(p.pi)},
            {"psi", cochain_to_json(p.psi, &p.h.elements)}};
  if (!p.notes.empty()) j["notes"] = p.notes;
  return j;
}

ModuleSide side_from_json(const json& j, const GroupRef& g) {
  require_object(j, "module side", {"subgroup"}, {"omega", "name"});
  ModuleSide s;
  s.k = subgroup_from_json(j["subgroup"], g, "subgroup");
  s.k_group = subgroup_group(s.k);
  const auto rel = local_relabel(s.k);
  s.omega = located("omega", [&] { return cochain_from_json(j.value("omega", json("trivial")), s.k_group, 3, &rel); });
  return s;
}

TwoGroupData two_group_from_json(const json& j, int max_order) {
  require_object(j, "2-group data", {"H", "A", "action"}, {"beta", "name", "notes"});
  TwoGroupData t;
  t.h = group_with_cap(j["H"], max_order, "H");
  t.a = group_with_cap(j["A"], max_order, "A");
  const int nh = t.h->order(), na = t.a->order();
  const auto& act = j["action"];
  if (!act.is_array() || static_cast<int>(act.size()) != nh)
    fail_input("action must list one automorphism per element of H");
  for (int h = 0; h < nh; ++h) {
    const auto& row = act[h];
    const std::string where = "action[" + std::to_string(h) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != na)
      fail_input(where + " must have one entry per element of A");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= na)
        fail_input(where + ": entry is not an element index of A");
      r.push_back(x.get<int>());
    }
    t.rho.push_back(std::move(r));
  }
  t.beta.assign(static_cast<std::size_t>(nh) * nh * nh, 0);
  if (j.contains("beta") && !(j["beta"].is_string() && j["beta"] == "trivial")) {
    const auto& b = j["beta"];
    require_object(b, "beta", {"entries"}, {});
    if (!b["entries"].is_array()) fail_input("beta entries must be an array");
    for (std::size_t i = 0; i < b["entries"].size(); ++i) {
      const auto& e = b["entries"][i];
      const std::string where = "beta entries[" + std::to_string(i) + "]";
      located(where, [&] { require_object(e, "entry", {"tuple", "value"}, {}); });
      const auto& tup = e["tuple"];
      if (!tup.is_array() || tup.size() != 3) fail_input(where + ": tuple must have 3 entries");
      int idx = 0;
      for (const auto& x : tup) {
        if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= nh)
          fail_input(where + ": tuple entry is not an element index of H");
        idx = idx * nh + x.get<int>();
      }
      const auto& v = e["value"];
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= na)
        fail_input(where + ": value is not an element index of A");
      t.beta[static_cast<std::size_t>(idx)] = v.get<int>();
    }
  }
  validate_two_group(t);
  return t;
}

GroupRef abelian_from_json(const json& j, int max_order) {
  const json& spec = (j.is_object() && j.contains("A")) ? j["A"] : j;
  GroupRef a = group_with_cap(spec, max_order, "A");
  if (!a->is_abelian()) fail_input("A: group must be abelian");
  return a;
}

TYInput ty_from_json(const json& j, int max_order) {
  require_object(j, "TY input", {"A"}, {"pi", "name", "notes"});
  TYInput in;
  in.a = abelian_from_json(j, max_order);
  if (2 * in.a->order() * in.a->order() > max_order)
    fail_budget("A wr Z/2 has order " + std::to_string(2 * in.a->order() * in.a->order()) +
                " which exceeds --max-order " + std::to_string(max_order));
  const auto w = wreath_of(in.a);
  in.pi = located("pi", [&] { return cochain_from_json(j.value("pi", json("trivial")), w.w, 4); });
  return in;
}

// ---- reports ---------------------------------------------------------------

json group_summary(const GroupRef& g) {
  json j = {{"order", g->order()}, {"labels", g->labels()}};
  if (!g->provenance().is_null()) j["spec"] = g->provenance();
  return j;
}

json elements_json(const GroupRef& g, const std::vector<int>& elems) {
  json arr = json::array();
  for (int x : elems) arr.push_back(g->label(x));
  return arr;
}

json validate_report(const Presentation& p, const ValidationReport& r) {
  json j = presentation_head(p);
  j["command"] = "validate";
  j["valid"] = r.valid();
  j["pi_closed"] = r.pi_closed;
  j["algebra_condition"] = r.algebra_condition;
  j["failing_tuples"] = r.failing_tuples;
  json issues = json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", i.kind}, {"tuple", i.tuple}, {"defect", qz_text(i.defect)}});
  j["issues"] = issues;
  add_notes(j, p);
  return j;
}

json components_report(const Presentation& p, const std::vector<ComponentRecord>& cs, const ModuleSide* other) {
  json j = presentation_head(p);
  j["command"] = "components";
  j["other"] = other ? json(other->k.elements) : json(nullptr);
  int total = 0;
  j["components"] = components_array(cs, total);
  j["total_simples"] = total;
  add_notes(j, p);
  return j;
}

json fusion_report(const Presentation& p, const FusionTable& t) {
  json j = presentation_head(p);
  j["command"] = "fusion";
  json objs = json::array();
  for (std::size_t i = 0; i < t.representatives.size(); ++i)
    objs.push_back({{"name", t.names[i]}, {"representative", t.representatives[i]}});
  j["objects"] = objs;
  j["rows"] = fusion_rows(t);
  add_notes(j, p);
  return j;
}

json grading_report(const Presentation& p, const Grading& gr) {
  json j = presentation_head(p);
  j["command"] = "grading";
  j["normal_closure"] = gr.normal_closure.elements;
  j["quotient_order"] = gr.quotient.group->order();
  j["coset_of"] = gr.quotient.coset_of;
  const auto names = component_names(p);
  json comps = json::array();
  for (std::size_t i = 0; i < gr.representatives.size(); ++i)
    comps.push_back({{"name", names[i]}, {"representative", gr.representatives[i]}, {"grade", gr.grade[i]}});
  j["components"] = comps;
  json pieces = json::array();
  for (int q = 0; q < gr.quotient.group->order(); ++q) {
    json reps = json::array();
    for (std::size_t i = 0; i < gr.representatives.size(); ++i)
      if (gr.grade[i] == q) reps.push_back(names[i]);
    pieces.push_back({{"grade", q}, {"components", reps}});
  }
  j["pieces"] = pieces;
  add_notes(j, p);
  return j;
}

json fiber_report(const Presentation& p, const std::vector<FiberFunctorDatum>& ds) {
  json arr = json::array();
  for (const auto& d : ds) {
    const auto cs = components(d.dual);
    int total = 0;
    for (const auto& c : cs) total += c.census.total();
    arr.push_back({{"complement", d.k.elements},
                   {"order", d.k.order()},
                   {"omega", cochain_to_json(d.omega, &d.k.elements)},
                   {"omega_class", d.omega_class},
                   {"dual", {{"subgroup", d.dual.h.elements},
                             {"components", cs.size()},
                             {"total_simples", total}}}});
  }
  (void)p;
  return arr;
}

json equivalence_report(const Presentation& a, const Presentation& b, const std::optional<EquivalenceWitness>& w) {
  json j;
  j["command"] = "equiv";
  j["first"] = presentation_head(a);
  j["second"] = presentation_head(b);
  j["equivalent"] = w.has_value();
  if (w) {
    j["witness"] = {{"f", w->f.image}, {"xi", cochain_to_json(w->xi)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json cohomology_report(const GroupRef& g, int degree, const CohomologyResult& h, bool with_generators) {
  json j;
  j["command"] = "cohom";
  j["group"] = group_summary(g);
  j["degree"] = degree;
  j["invariants"] = h.invariants.factors;
  j["order"] = h.invariants.order();
  if (with_generators) {
    json gens = json::array();
    for (const auto& c : h.generators) gens.push_back(cochain_to_json(c));
    j["generators"] = gens;
  }
  return j;
}

json ty_defect_json(const Presentation& p, const TYDefectReport& r) {
  json j = {{"graded", r.graded},
            {"minus_connected", r.minus_connected},
            {"exact_factorization", r.exact_factorization},
            {"has_defect", r.has_defect()},
            {"minus_representative", r.minus_representative}};
  if (r.defect_fusion) {
    const auto names = component_names(p);
    const auto reps = double_cosets(p.h, p.h).representatives;
    json summands = json::array();
    for (auto [rep, mult] : r.defect_fusion->summands) {
      auto it = std::find(reps.begin(), reps.end(), rep);
      summands.push_back({{"name", names[static_cast<std::size_t>(it - reps.begin())]},
                          {"representative", rep},
                          {"multiplicity", mult}});
    }
    j["defect_fusion"] = {{"summands", summands},
                          {"total", r.defect_fusion->total()},
                          {"text", render_fusion(*r.defect_fusion, reps, names)}};
  } else {
    j["defect_fusion"] = nullptr;
  }
  j["wreath_map"] = r.wreath_recognized ? json(r.wreath_recognized->image) : json(nullptr);
  return j;
}

json ty_build_report(const Presentation& p, const TYDefectReport& r, const std::vector<ComponentRecord>& cs,
                     const FusionTable& t) {
  json j = presentation_head(p);
  j["command"] = "ty build";
  j["defect"] = ty_defect_json(p, r);
  int total = 0;
  j["components"] = components_array(cs, total);
  j["total_simples"] = total;
  j["rows"] = fusion_rows(t);
  add_notes(j, p);
  return j;
}

json ty_classify_report(const GroupRef& a, const TYClassification& c) {
  json classes = json::array();
  for (const auto& k : c.classes)
    classes.push_back({{"coordinates", k.coordinates}, {"pi", cochain_to_json(k.pi)}});
  return {{"command", "ty classify"},
          {"A", group_summary(a)},
          {"h4", c.h4.factors},
          {"kernel_order", c.kernel_order},
          {"classes", classes},
          {"class_count", c.classes.size()}};
}

json two_group_pi_report(const TwoGroupData& t, const TwoGroupPi& tp) {
  const auto fi = footnote_iso(t, tp);
  return {{"command", "twogroup pi"},
          {"H", group_summary(t.h)},
          {"A", group_summary(t.a)},
          {"group", group_summary(tp.group)},
          {"dual", {{"order", tp.dual.group->order()}, {"exponent", tp.dual.exponent}, {"values", tp.dual.values}}},
          {"pi", cochain_to_json(tp.pi)},
          {"footnote_iso", fi.iso.image}};
}

json two_rep_report(const TwoGroupData& t, const TwoRepDecomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    auto stab_in_h = c.stabilizer.elements;
    comps.push_back({{"alpha", c.alpha},
                     {"orbit", c.orbit},
                     {"stabilizer", c.stabilizer.elements},
                     {"cocycle", cochain_to_json(c.cocycle, &stab_in_h)},
                     {"census", census_json(c.census)},
                     {"simples", c.census.total()}});
  }
  return {{"command", "twogroup tworep"},
          {"H", group_summary(t.h)},
          {"A", group_summary(t.a)},
          {"presentation", presentation_head(d.presentation)},
          {"components", comps},
          {"total_simples", d.total_simples()}};
}

// ---- markdown --------------------------------------------------------------

namespace {

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string label_of(const json& group, int x) { return group["labels"][x].get<std::string>(); }

std::string set_text(const json& group, const json& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + label_of(group, elems[i].get<int>());
  return s + "}";
}

std::string factors_text(const json& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " ⊕ " : "") + ("Z/" + std::to_string(f[i].get<u64>()));
  return s;
}

void notes_md(std::ostringstream& os, const json& p) {
  if (!p.contains("notes")) return;
  os << "\n";
  for (const auto& n : p["notes"]) os << "> **Note:** " << n.get<std::string>() << "\n";
}

void components_md(std::ostringstream& os, const json& p, const json& group) {
  os << "| Name | Representative | Grade | Stabilizer | ξ trivial | Simples | Exact |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& c : p["components"]) {
    os << "| " << c["name"].get<std::string>() << " | " << label_of(group, c["representative"]) << " | "
       << c["grade"].get<int>() << " | " << set_text(group, c["stabilizer"]) << " | " << yes_no(c["xi_trivial"])
       << " | " << c["simples"].get<int>() << " | " << yes_no(c["census"]["exact"]) << " |\n";
  }
  os << "\nTotal simples: " << p["total_simples"].get<int>() << "\n";
}

void rows_md(std::ostringstream& os, const json& rows) {
  os << "| Left | Product | Total |\n|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r["left"].get<std::string>() << " | " << r["text"].get<std::string>() << " | "
       << r["total"].get<int>() << " |\n";
}

}  // namespace

std::string render_markdown(const std::string& command, const json& p) {
  std::ostringstream os;
  if (command == "validate") {
    os << "# Validation\n\n| Check | Result |\n|---|---|\n";
    os << "| π closed | " << yes_no(p["pi_closed"]) << " |\n";
    os << "| dψ = π restricted to H | " << yes_no(p["algebra_condition"]) << " |\n";
    os << "| Failing tuples | " << p["failing_tuples"].get<std::size_t>() << " |\n";
    if (!p["issues"].empty()) {
      os << "\n| Kind | Tuple | Defect |\n|---|---|---|\n";
      for (const auto& i : p["issues"]) {
        std::string t;
        for (const auto& x : i["tuple"]) t += (t.empty() ? "" : ", ") + label_of(p["group"], x);
        os << "| " << i["kind"].get<std::string>() << " | (" << t << ") | " << i["defect"].get<std::string>()
           << " |\n";
      }
    }
    notes_md(os, p);
  } else if (command == "components") {
    os << "# Components\n\nG has order " << p["group"]["order"].get<int>() << ", H = "
       << set_text(p["group"], p["subgroup"]);
    if (!p["other"].is_null()) os << ", K = " << set_text(p["group"], p["other"]);
    os << ".\n\n";
    components_md(os, p, p["group"]);
    notes_md(os, p);
  } else if (command == "fusion") {
    os << "# Fusion of distinguished objects\n\n";
    rows_md(os, p["rows"]);
    notes_md(os, p);
  } else if (command == "grading") {
    os << "# Universal grading\n\nNormal closure of H: " << set_text(p["group"], p["normal_closure"])
       << "\n\nGrading group order: " << p["quotient_order"].get<int>() << "\n\n| Grade | Components |\n|---|---|\n";
    for (const auto& piece : p["pieces"]) {
      std::string names;
      for (const auto& n : piece["components"]) names += (names.empty() ? "" : ", ") + n.get<std::string>();
      os << "| " << piece["grade"].get<int>() << " | " << names << " |\n";
    }
    notes_md(os, p);
  } else if (command == "fiber") {
    os << "# Fiber 2-functors\n\n";
    if (p.empty()) {
      os << "None: no complement of H carries a trivializable restriction of π.\n";
    } else {
      os << "| # | Complement | Order | ω class | Dual components | Dual simples |\n|---|---|---|---|---|---|\n";
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& d = p[i];
        std::string cls;
        for (const auto& x : d["omega_class"]) cls += (cls.empty() ? "" : ",") + std::to_string(x.get<u64>());
        std::string comp;
        for (const auto& x : d["complement"]) comp += (comp.empty() ? "" : ", ") + std::to_string(x.get<int>());
        os << "| " << i << " | {" << comp << "} | " << d["order"].get<int>() << " | (" << cls << ") | "
           << d["dual"]["components"].get<int>() << " | " << d["dual"]["total_simples"].get<int>() << " |\n";
      }
    }
  } else if (command == "equiv") {
    os << "# Equivalence\n\nEquivalent: " << yes_no(p["equivalent"]) << "\n";
    if (!p["witness"].is_null()) {
      os << "\n| x | f(x) |\n|---|---|\n";
      const auto& f = p["witness"]["f"];
      for (std::size_t x = 0; x < f.size(); ++x)
        os << "| " << label_of(p["first"]["group"], static_cast<int>(x)) << " | "
           << label_of(p["second"]["group"], f[x].get<int>()) << " |\n";
    }
  } else if (command == "cohom") {
    os << "# Cohomology\n\nH^" << p["degree"].get<int>() << "(G; Q/Z) ≅ " << factors_text(p["invariants"])
       << " (order " << p["order"].get<u64>() << ")\n";
  } else if (command == "ty build") {
    const auto& d = p["defect"];
    os << "# Tambara-Yamagami build\n\n| Check | Result |\n|---|---|\n";
    os << "| Z/2-graded | " << yes_no(d["graded"]) << " |\n";
    os << "| Minus part connected | " << yes_no(d["minus_connected"]) << " |\n";
    os << "| Exact factorization | " << yes_no(d["exact_factorization"]) << " |\n";
    os << "| Defect | " << yes_no(d["has_defect"]) << " |\n\n";
    components_md(os, p, p["group"]);
    os << "\n";
    rows_md(os, p["rows"]);
    notes_md(os, p);
  } else if (command == "ty classify") {
    os << "# Tambara-Yamagami classification\n\nH^4 ≅ " << factors_text(p["h4"]) << "\n\nKernel of restriction: "
       << p["kernel_order"].get<std::size_t>() << "\n\nClasses: " << p["class_count"].get<std::size_t>()
       << "\n\n| # | Coordinates |\n|---|---|\n";
    for (std::size_t i = 0; i < p["classes"].size(); ++i) {
      std::string c;
      for (const auto& x : p["classes"][i]["coordinates"]) c += (c.empty() ? "" : ",") + std::to_string(x.get<u64>());
      os << "| " << i << " | (" << c << ") |\n";
    }
  } else if (command == "twogroup pi") {
    os << "# Gauged 4-cocycle\n\nGroup order: " << p["group"]["order"].get<int>()
       << "\n\nNonzero values of π: " << p["pi"]["entries"].size() << " (denominator "
       << p["pi"]["denominator"].get<u64>() << ")\n";
  } else if (command == "twogroup tworep") {
    os << "# 2-representations\n\n| Character | Orbit size | Stabilizer order | Simples |\n|---|---|---|---|\n";
    for (const auto& c : p["components"])
      os << "| " << c["alpha"].get<int>() << " | " << c["orbit"].size() << " | " << c["stabilizer"].size() << " | "
         << c["simples"].get<int>() << " |\n";
    os << "\nTotal simples: " << p["total_simples"].get<int>() << "\n";
  } else {
    fail_input("no markdown renderer for command " + command);
  }
  return os.str();
}

}  // namespace f2c
