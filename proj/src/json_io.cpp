#include "forge/json_io.hpp"

#include <algorithm>

#include "forge/error.hpp"

namespace forge {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::invalid_input, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// keyed maps arrive as {"<index>": value}; returns sorted (index, value) pairs
std::vector<std::pair<int, json>> indexed_object(const json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object keyed by index");
  std::vector<std::pair<int, json>> out;
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    int idx = 0;
    try {
      idx = std::stoi(key, &pos);
    } catch (...) {
      bad(std::string(what) + " has a non-integer key: " + key);
    }
    if (pos != key.size()) bad(std::string(what) + " has a non-integer key: " + key);
    out.emplace_back(idx, value);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

} // namespace

GroupPtr group_from_json(const json& j, const RunConfig& cfg) {
  if (j.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : need(j, "table")) table.push_back(int_array(row, "table row"));
    return FiniteGroup::from_table(table, cfg);
  }
  if (j.contains("points")) {
    const int points = need(j, "points").get<int>();
    std::vector<Perm> gens;
    if (j.contains("generators"))
      for (const auto& g : j.at("generators")) gens.push_back(int_array(g, "generator"));
    return FiniteGroup::from_perms(points, std::move(gens), cfg);
  }
  bad("group spec needs either \"table\" or \"points\"/\"generators\"");
}

json group_summary_json(const GroupPtr& g) {
  json out;
  out["order"] = g->order();
  std::vector<int> sizes;
  for (const auto& c : conjugacy_classes(*g)) sizes.push_back(static_cast<int>(c.size()));
  out["class_sizes"] = sizes;
  out["center_order"] = center(g).order();
  out["abelian"] = is_abelian(*g);
  out["cyclic"] = is_cyclic(*g);
  if (g->has_labels()) {
    std::vector<std::string> labels;
    for (int i = 0; i < g->order(); ++i) labels.push_back(g->label(i));
    out["labels"] = labels;
  }
  return out;
}

Subgroup subgroup_from_json(const GroupPtr& g, const json& j) {
  return make_subgroup(g, int_array(need(j, "elements"), "elements"));
}

json subgroup_to_json(const Subgroup& s) {
  json out;
  out["elements"] = s.elements;
  out["order"] = s.order();
  return out;
}

OuterAction outer_action_from_json(const json& j, const RunConfig& cfg) {
  GroupPtr gamma = group_from_json(need(j, "gamma"), cfg);
  GroupPtr target = group_from_json(need(j, "target"), cfg);
  std::vector<AutImages> reps(gamma->order());
  std::vector<bool> known(gamma->order(), false);
  reps[0] = perm_identity(target->order());
  known[0] = true;
  for (const auto& [idx, value] : indexed_object(need(j, "reps"), "reps")) {
    if (idx < 0 || idx >= gamma->order()) bad("reps index out of range");
    reps[idx] = int_array(value, "rep images");
    known[idx] = true;
  }
  // complete along breadth-first words where only a generating set was given
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < gamma->order(); ++x) {
      if (!known[x]) continue;
      for (int s = 1; s < gamma->order(); ++s) {
        if (!known[s]) continue;
        const int xs = gamma->mul(x, s);
        if (known[xs]) continue;
        AutImages comp(target->order());
        for (int e = 0; e < target->order(); ++e) comp[e] = reps[x][reps[s][e]];
        reps[xs] = std::move(comp);
        known[xs] = true;
        grew = true;
      }
    }
  }
  for (bool k : known)
    if (!k) bad("reps do not cover a generating set of gamma");
  return make_outer_action(std::move(gamma), std::move(target), std::move(reps));
}

json filtration_to_json(const Filtration& f) {
  json chain = json::array();
  for (const auto& s : f.chain) chain.push_back(s.elements);
  json out;
  out["chain"] = std::move(chain);
  out["class"] = f.class_n;
  return out;
}

GroupExtension extension_from_json(const json& j, const RunConfig& cfg) {
  GroupPtr total = group_from_json(need(j, "total"), cfg);
  if (j.contains("kernel_elements")) {
    auto n = make_subgroup(total, int_array(j.at("kernel_elements"), "kernel_elements"));
    return extension_from_normal(total, n);
  }
  if (j.contains("proj_images")) {
    auto proj = int_array(j.at("proj_images"), "proj_images");
    if (static_cast<int>(proj.size()) != total->order())
      bad("proj_images must cover the total group");
    std::vector<int> kernel;
    for (int x = 0; x < total->order(); ++x)
      if (proj[x] == 0) kernel.push_back(x);
    auto ext = extension_from_normal(total, make_subgroup(total, kernel));
    // the inferred quotient must agree with the supplied projection up to
    // relabeling; verify index-compatibility
    for (int x = 0; x < total->order(); ++x)
      for (int y = 0; y < total->order(); ++y)
        if ((ext.proj(x) == ext.proj(y)) != (proj[x] == proj[y]))
          bad("proj_images is not constant on kernel cosets");
    return ext;
  }
  bad("extension needs \"kernel_elements\" or \"proj_images\"");
}

json splitting_to_json(const Splitting& s) {
  json out;
  out["images"] = s.section.images;
  return out;
}

json cocycle_to_json(const Cocycle& c) {
  json values = json::object();
  for (std::size_t g = 0; g < c.values.size(); ++g)
    values[std::to_string(g)] = c.values[g];
  json out;
  out["values"] = std::move(values);
  return out;
}

std::vector<int> cocycle_values_from_json(const json& j, int gamma_order) {
  const json& v = j.contains("values") ? j.at("values") : j;
  std::vector<int> values(gamma_order, -1);
  if (v.is_array()) {
    auto arr = int_array(v, "cocycle values");
    if (static_cast<int>(arr.size()) != gamma_order)
      bad("cocycle values must cover gamma");
    return arr;
  }
  for (const auto& [idx, val] : indexed_object(v, "cocycle values")) {
    if (idx < 0 || idx >= gamma_order) bad("cocycle index out of range");
    values[idx] = val.get<int>();
  }
  for (int x : values)
    if (x < 0) bad("cocycle values must cover gamma");
  return values;
}

IntMat intmat_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) {
    std::vector<long> r;
    for (const auto& v : row) {
      if (v.is_number_integer())
        r.push_back(v.get<long>());
      else if (v.is_string())
        r.push_back(std::stol(v.get<std::string>()));
      else
        bad("matrix entries must be integers");
    }
    rows.push_back(std::move(r));
  }
  return IntMat::from_rows(rows);
}

json intmat_to_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int jx = 0; jx < m.cols; ++jx) {
      const Int& v = m.at(i, jx);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LatticePtr lattice_from_json(const json& j, const RunConfig& cfg) {
  const int ambient = need(j, "ambient_rank").get<int>();
  IntMat relations(ambient, 0);
  if (j.contains("relations") && !j.at("relations").empty()) {
    // stored as a list of relation columns
    const json& rel = j.at("relations");
    relations = IntMat(ambient, static_cast<int>(rel.size()));
    int c = 0;
    for (const auto& colj : rel) {
      auto col = int_array(colj, "relation column");
      if (static_cast<int>(col.size()) != ambient)
        bad("relation column has wrong length");
      for (int r = 0; r < ambient; ++r) relations.at(r, c) = col[r];
      ++c;
    }
  }
  GroupPtr group = group_from_json(need(j, "group"), cfg);
  std::map<int, IntMat> gen_action;
  if (j.contains("action"))
    for (const auto& [idx, mat] : indexed_object(j.at("action"), "action"))
      gen_action.emplace(idx, intmat_from_json(mat));
  return GaloisLattice::from_generator_action(ambient, std::move(relations),
                                              std::move(group), gen_action);
}

json lattice_to_json(const GaloisLattice& m) {
  json out;
  out["ambient_rank"] = m.ambient_rank();
  json rel = json::array();
  for (int c = 0; c < m.relations().cols; ++c) {
    json col = json::array();
    for (int r = 0; r < m.relations().rows; ++r) {
      const Int& v = m.relations().at(r, c);
      if (v.fits_slong_p())
        col.push_back(v.get_si());
      else
        col.push_back(v.get_str());
    }
    rel.push_back(std::move(col));
  }
  out["relations"] = std::move(rel);
  out["free_rank"] = m.free_rank();
  out["torsion_free"] = m.torsion_free();
  out["group_order"] = m.group()->order();
  out["permutation_basis"] = m.has_permutation_basis();
  return out;
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) != 0) bad("bad rational: " + j.get<std::string>());
    r.canonicalize();
    if (r.get_den() == 0) bad("rational with zero denominator");
    return r;
  }
  bad("rational must be an integer or a \"num/den\" string");
}

json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(r.get_str());
}

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array, constant first");
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  return PolyQ(std::move(coeffs));
}

json poly_to_json(const PolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(rat_to_json(c));
  return out;
}

Place place_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Place::inf();
  if (j.is_number_integer()) return Place::finite(j.get<long>());
  bad("place must be \"inf\" or a prime integer");
}

json place_to_json(const Place& v) {
  if (v.infinite) return json("inf");
  return json(v.prime);
}

ThetaSpec theta_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "product" || s == "norm") return ThetaSpec::product();
    if (s == "sum" || s == "trace") return ThetaSpec::sum();
    bad("unknown theta: " + s);
  }
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "product") return ThetaSpec::product();
  if (kind == "sum") return ThetaSpec::sum();
  if (kind == "power_sum") return ThetaSpec::power_sum(need(j, "k").get<int>());
  if (kind == "esym_poly") {
    ThetaSpec theta;
    theta.kind = ThetaSpec::Kind::esym_poly;
    for (const auto& term : need(j, "terms")) {
      Rat coeff = rat_from_json(need(term, "coeff"));
      auto exps = int_array(need(term, "exponents"), "exponents");
      theta.terms.emplace_back(std::move(coeff), std::move(exps));
    }
    return theta;
  }
  bad("unknown theta kind: " + kind);
}

json certificate_to_json(const NormCertificate& c) {
  json out;
  out["alpha"] = rat_to_json(c.alpha);
  out["d"] = c.d;
  json symbols = json::array();
  for (const auto& s : c.symbols) {
    json one;
    one["place"] = place_to_json(s.place);
    one["value"] = s.value;
    symbols.push_back(std::move(one));
  }
  out["symbols"] = std::move(symbols);
  if (c.witness) {
    out["witness"] = json::array({rat_to_json(c.witness->first),
                                  rat_to_json(c.witness->second)});
  }
  return out;
}

} // namespace forge
