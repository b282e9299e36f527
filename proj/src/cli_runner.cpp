#include "forge/cli_runner.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "forge/error.hpp"
#include "forge/json_io.hpp"
#include "forge/oracles.hpp"

namespace forge {

namespace {

struct Ctx {
  RunConfig cfg;
  bool verify = false;
  json input;
  bool has_input = false;
  std::map<std::string, std::string> opts;

  const json& in() const {
    if (!has_input) fail(Errc::invalid_input, "this subcommand needs --input or --json");
    return input;
  }
  std::string opt(const std::string& name) const {
    auto it = opts.find(name);
    if (it == opts.end())
      fail(Errc::invalid_input, "missing required option --" + name);
    return it->second;
  }
  bool flag(const std::string& name) const { return opts.count(name) > 0; }
  long opt_long(const std::string& name) const {
    try {
      return std::stol(opt(name));
    } catch (...) {
      fail(Errc::invalid_input, "option --" + name + " must be an integer");
    }
  }
  Rat opt_rat(const std::string& name) const { return rat_from_json(json(opt(name))); }
};

json reps_to_json(const std::vector<AutImages>& reps) {
  json out = json::object();
  for (std::size_t g = 0; g < reps.size(); ++g) out[std::to_string(g)] = reps[g];
  return out;
}

json lattice_full_json(const GaloisLattice& m) {
  json out = lattice_to_json(m);
  json action = json::object();
  for (int g = 0; g < m.group()->order(); ++g)
    action[std::to_string(g)] = intmat_to_json(m.action(g));
  out["action"] = std::move(action);
  return out;
}

std::pair<GroupPtr, Subgroup> group_and_subgroup(const Ctx& ctx) {
  GroupPtr g = group_from_json(ctx.in().at("group"), ctx.cfg);
  Subgroup s = subgroup_from_json(g, ctx.in().at("subgroup"));
  return {std::move(g), std::move(s)};
}

std::pair<OuterAction, Subgroup> action_and_subgroup(const Ctx& ctx) {
  OuterAction a = outer_action_from_json(ctx.in().at("action"), ctx.cfg);
  Subgroup s = subgroup_from_json(a.target, ctx.in().at("subgroup"));
  return {std::move(a), std::move(s)};
}

GroupAction group_action_from_json(const Ctx& ctx, const json& j) {
  GroupPtr gamma = group_from_json(j.at("gamma"), ctx.cfg);
  GroupPtr target = group_from_json(j.at("target"), ctx.cfg);
  std::vector<AutImages> images(gamma->order());
  for (const auto& [key, value] : j.at("action").items())
    images[std::stoi(key)] = value.get<std::vector<int>>();
  for (auto& img : images)
    if (img.empty() && target->order() > 0) img = perm_identity(target->order());
  return make_group_action(std::move(gamma), std::move(target), std::move(images));
}

json filtration_result(const OuterAction& a, const Ctx& ctx) {
  auto search = supersolvable_filtration(a);
  json out;
  out["supersolvable"] = search.filtration.has_value();
  if (search.filtration) {
    out["class"] = search.filtration->class_n;
    out["filtration"] = filtration_to_json(*search.filtration);
  } else {
    json frontier = json::array();
    for (const auto& s : search.frontier) frontier.push_back(s.elements);
    out["frontier"] = std::move(frontier);
  }
  if (ctx.verify) {
    auto oracle = oracles::supersolvable_class(a);
    if (oracle.has_value() != search.filtration.has_value() ||
        (oracle && *oracle != search.filtration->class_n))
      fail(Errc::mismatch, "verification failed: oracle disagrees on supersolvability");
    out["verified"] = true;
  }
  return out;
}

// ---- handler table ---------------------------------------------------------

using Handler = std::function<json(Ctx&)>;

const std::map<std::string, std::map<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::map<std::string, Handler>> table = {
      {"group",
       {
           {"build",
            [](Ctx& ctx) {
              GroupPtr g = group_from_json(ctx.in(), ctx.cfg);
              json out = group_summary_json(g);
              json table_rows = json::array();
              for (int a = 0; a < g->order(); ++a) {
                json row = json::array();
                for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
                table_rows.push_back(std::move(row));
              }
              out["table"] = std::move(table_rows);
              return out;
            }},
           {"info",
            [](Ctx& ctx) { return group_summary_json(group_from_json(ctx.in(), ctx.cfg)); }},
           {"classes",
            [](Ctx& ctx) {
              json out;
              out["classes"] = conjugacy_classes(*group_from_json(ctx.in(), ctx.cfg));
              return out;
            }},
           {"center",
            [](Ctx& ctx) {
              return subgroup_to_json(center(group_from_json(ctx.in(), ctx.cfg)));
            }},
           {"normal-subgroups",
            [](Ctx& ctx) {
              GroupPtr g = group_from_json(ctx.in(), ctx.cfg);
              auto normals = normal_subgroups(g);
              json list = json::array();
              for (const auto& s : normals) list.push_back(subgroup_to_json(s));
              json out;
              out["count"] = normals.size();
              out["normal_subgroups"] = std::move(list);
              if (ctx.verify) {
                if (g->order() > 24)
                  fail(Errc::unsupported,
                       "brute-force subgroup verification is limited to order <= 24");
                std::vector<std::vector<int>> expected;
                for (auto& elems : oracles::all_subgroups(*g)) {
                  Subgroup s{g, elems};
                  if (is_normal(s)) expected.push_back(elems);
                }
                std::sort(expected.begin(), expected.end(),
                          [](const auto& a, const auto& b) {
                            if (a.size() != b.size()) return a.size() < b.size();
                            return a < b;
                          });
                std::vector<std::vector<int>> got;
                for (const auto& s : normals) got.push_back(s.elements);
                if (got != expected)
                  fail(Errc::mismatch, "verification failed: subgroup scan disagrees");
                out["verified"] = true;
              }
              return out;
            }},
           {"quotient",
            [](Ctx& ctx) {
              auto [g, s] = group_and_subgroup(ctx);
              auto q = quotient(g, s);
              json out;
              out["order"] = q.group->order();
              out["projection"] = q.projection.images;
              json rows = json::array();
              for (int a = 0; a < q.group->order(); ++a) {
                json row = json::array();
                for (int b = 0; b < q.group->order(); ++b) row.push_back(q.group->mul(a, b));
                rows.push_back(std::move(row));
              }
              out["table"] = std::move(rows);
              return out;
            }},
           {"is-cyclic",
            [](Ctx& ctx) {
              json out;
              out["cyclic"] = is_cyclic(*group_from_json(ctx.in(), ctx.cfg));
              return out;
            }},
           {"aut",
            [](Ctx& ctx) {
              auto ag = automorphism_group(group_from_json(ctx.in(), ctx.cfg), ctx.cfg);
              json out;
              out["aut_order"] = ag.aut->order();
              out["inn_order"] = ag.inner.order();
              out["out_order"] = ag.out->order();
              out["out_representatives"] = ag.out_reps;
              return out;
            }},
           {"composition-factors",
            [](Ctx& ctx) {
              auto factors = composition_factors(group_from_json(ctx.in(), ctx.cfg));
              json orders = json::array();
              for (const auto& f : factors) orders.push_back(f->order());
              json out;
              out["factor_orders"] = std::move(orders);
              return out;
            }},
           {"core",
            [](Ctx& ctx) {
              auto [g, s] = group_and_subgroup(ctx);
              return subgroup_to_json(subgroup_core(g, s));
            }},
       }},
      {"action",
       {
           {"is-stable",
            [](Ctx& ctx) {
              auto [a, s] = action_and_subgroup(ctx);
              json out;
              out["stable"] = is_stable(s, a);
              return out;
            }},
           {"filtration",
            [](Ctx& ctx) {
              return filtration_result(outer_action_from_json(ctx.in(), ctx.cfg), ctx);
            }},
           {"induced-quotient",
            [](Ctx& ctx) {
              auto [a, s] = action_and_subgroup(ctx);
              auto induced = induced_quotient_action(a, s);
              json out;
              out["gamma_order"] = induced.action.gamma->order();
              out["quotient_order"] = induced.action.target->order();
              out["reps"] = reps_to_json(induced.action.reps);
              out["projection"] = induced.onto.projection.images;
              return out;
            }},
           {"lift",
            [](Ctx& ctx) {
              auto a = outer_action_from_json(ctx.in(), ctx.cfg);
              auto lift = lift_outer_action(a, ctx.cfg);
              json out;
              out["lift_exists"] = lift.has_value();
              if (lift) out["action"] = reps_to_json(lift->images);
              return out;
            }},
           {"verify-chain",
            [](Ctx& ctx) {
              auto a = outer_action_from_json(ctx.in().at("action"), ctx.cfg);
              std::vector<std::vector<int>> chain;
              for (const auto& c : ctx.in().at("chain"))
                chain.push_back(c.get<std::vector<int>>());
              auto f = verify_filtration(a, chain);
              json out;
              out["valid"] = true;
              out["class"] = f.class_n;
              return out;
            }},
       }},
      {"ext",
       {
           {"outer-action",
            [](Ctx& ctx) {
              auto e = extension_from_json(ctx.in(), ctx.cfg);
              auto outer = extension_outer_action(e);
              json out;
              out["gamma_order"] = outer.gamma->order();
              out["kernel_order"] = outer.target->order();
              out["reps"] = reps_to_json(outer.reps);
              return out;
            }},
           {"splittings",
            [](Ctx& ctx) {
              auto e = extension_from_json(ctx.in(), ctx.cfg);
              auto splits = enumerate_splittings(e, ctx.cfg);
              json list = json::array();
              for (const auto& s : splits) list.push_back(splitting_to_json(s));
              json out;
              out["count"] = splits.size();
              out["splittings"] = std::move(list);
              return out;
            }},
           {"splitting-classes",
            [](Ctx& ctx) {
              auto e = extension_from_json(ctx.in(), ctx.cfg);
              auto classes = splitting_classes(e, ctx.cfg);
              json list = json::array();
              for (const auto& cls : classes) {
                json inner = json::array();
                for (const auto& s : cls) inner.push_back(splitting_to_json(s));
                list.push_back(std::move(inner));
              }
              json out;
              out["class_count"] = classes.size();
              out["classes"] = std::move(list);
              return out;
            }},
           {"difference-cocycle",
            [](Ctx& ctx) {
              auto e = extension_from_json(ctx.in().at("extension"), ctx.cfg);
              Splitting s{make_hom(e.gamma, e.total,
                                   ctx.in().at("s").get<std::vector<int>>())};
              Splitting s2{make_hom(e.gamma, e.total,
                                    ctx.in().at("s2").get<std::vector<int>>())};
              auto c = difference_cocycle(e, s, s2);
              json out = cocycle_to_json(c);
              auto trivial = make_cocycle(c.action, std::vector<int>(e.gamma->order(), 0));
              out["trivial"] = is_trivial_cocycle(c);
              out["cohomologous_to_trivial"] = are_cohomologous(c, trivial);
              return out;
            }},
           {"twist",
            [](Ctx& ctx) {
              auto action = group_action_from_json(ctx, ctx.in());
              auto values = cocycle_values_from_json(ctx.in().at("cocycle"),
                                                     action.gamma->order());
              auto c = make_cocycle(action, values);
              auto twisted = twist_action(action, c);
              json out;
              out["action"] = reps_to_json(twisted.images);
              return out;
            }},
           {"h1",
            [](Ctx& ctx) {
              auto action = group_action_from_json(ctx, ctx.in());
              auto classes = h1_classes(action, ctx.cfg);
              json list = json::array();
              for (const auto& cls : classes) {
                json inner = json::array();
                for (const auto& c : cls) inner.push_back(cocycle_to_json(c));
                list.push_back(std::move(inner));
              }
              json out;
              out["class_count"] = classes.size();
              out["classes"] = std::move(list);
              if (ctx.verify) {
                if (oracles::h1_class_count_brute(action) !=
                    static_cast<int>(classes.size()))
                  fail(Errc::mismatch, "verification failed: brute-force H1 disagrees");
                out["verified"] = true;
              }
              return out;
            }},
           {"is-complete",
            [](Ctx& ctx) {
              json out;
              out["complete"] = is_complete(group_from_json(ctx.in(), ctx.cfg), ctx.cfg);
              return out;
            }},
           {"is-almost-complete",
            [](Ctx& ctx) {
              auto r = is_almost_complete(group_from_json(ctx.in(), ctx.cfg), ctx.cfg);
              json out;
              out["almost_complete"] = r.almost_complete;
              if (r.witness) {
                out["out_order"] = r.witness->aut.out->order();
                out["section"] = r.witness->section.images;
              }
              return out;
            }},
           {"split-complement",
            [](Ctx& ctx) {
              auto e = extension_from_json(ctx.in(), ctx.cfg);
              auto witness = is_almost_complete(e.kernel, ctx.cfg);
              if (!witness.almost_complete)
                fail(Errc::unsupported, "kernel is not almost complete");
              auto split = split_with_rigid_kernel(e, *witness.witness);
              json out;
              out["splitting"] = splitting_to_json(split.splitting);
              out["centralizing"] = split.centralizing;
              return out;
            }},
           {"factors-almost-complete",
            [](Ctx& ctx) {
              json out;
              out["almost_complete_via_factors"] =
                  almost_complete_via_factors(group_from_json(ctx.in(), ctx.cfg), ctx.cfg);
              return out;
            }},
       }},
      {"lattice",
       {
           {"cover",
            [](Ctx& ctx) {
              auto cov = permutation_cover(lattice_from_json(ctx.in(), ctx.cfg));
              json out;
              out["l"] = lattice_to_json(*cov.l);
              out["kernel"] = lattice_to_json(*cov.kernel);
              out["cover_matrix"] = intmat_to_json(cov.cover.matrix);
              out["inclusion_matrix"] = intmat_to_json(cov.inclusion.matrix);
              return out;
            }},
           {"dual",
            [](Ctx& ctx) {
              auto d = dualize(lattice_from_json(ctx.in(), ctx.cfg));
              json out;
              out["dual"] = lattice_full_json(*d.dual);
              out["to_basis"] = intmat_to_json(d.to_basis);
              return out;
            }},
           {"pushout",
            [](Ctx& ctx) {
              auto k = lattice_from_json(ctx.in().at("k"), ctx.cfg);
              auto l = lattice_from_json(ctx.in().at("l"), ctx.cfg);
              auto p = lattice_from_json(ctx.in().at("p"), ctx.cfg);
              auto into_l = make_module_map(k, l, intmat_from_json(ctx.in().at("map_l")));
              auto into_p = make_module_map(k, p, intmat_from_json(ctx.in().at("map_p")));
              auto push = pushout(into_l, into_p);
              json out;
              out["s"] = lattice_to_json(*push.s);
              out["legs_injective"] = push.legs_injective;
              out["from_l"] = intmat_to_json(push.from_l.matrix);
              out["from_p"] = intmat_to_json(push.from_p.matrix);
              return out;
            }},
           {"resolve",
            [](Ctx& ctx) {
              auto res = torus_resolution(lattice_from_json(ctx.in(), ctx.cfg));
              json out;
              out["l"] = lattice_to_json(*res.l);
              out["k"] = lattice_to_json(*res.k);
              out["p"] = lattice_to_json(*res.p);
              out["c"] = lattice_to_json(*res.c);
              out["s"] = lattice_to_json(*res.s);
              out["seq1_exact"] = true;
              out["seq2_exact"] = true;
              if (ctx.verify) {
                if (!verify_exact(res.seq1).exact || !verify_exact(res.seq2).exact)
                  fail(Errc::mismatch, "verification failed: exactness re-check");
                out["verified"] = true;
              }
              return out;
            }},
           {"verify",
            [](Ctx& ctx) {
              std::vector<LatticePtr> modules;
              for (const auto& mj : ctx.in().at("modules"))
                modules.push_back(lattice_from_json(mj, ctx.cfg));
              if (modules.size() < 2)
                fail(Errc::invalid_input, "need at least two modules");
              ExactSequence seq;
              const auto& maps = ctx.in().at("maps");
              if (maps.size() + 1 != modules.size())
                fail(Errc::invalid_input, "need one map per adjacent module pair");
              for (std::size_t i = 0; i < maps.size(); ++i)
                seq.maps.push_back(make_module_map(modules[i], modules[i + 1],
                                                   intmat_from_json(maps[i])));
              bool short_exact = !ctx.in().contains("short") ||
                                 ctx.in().at("short").get<bool>();
              auto report = verify_exact(seq, short_exact);
              json out;
              out["exact"] = report.exact;
              if (!report.exact) {
                out["failure_index"] = report.failure_index;
                out["detail"] = report.detail;
              }
              return out;
            }},
           {"norm-one",
            [](Ctx& ctx) {
              auto g = group_from_json(ctx.in(), ctx.cfg);
              return lattice_full_json(*norm_one_lattice(g));
            }},
           {"kummer",
            [](Ctx& ctx) {
              auto report = kummer_compare(ctx.opt_long("n"));
              json out;
              out["n"] = report.n;
              out["ok"] = report.ok;
              out["detail"] = report.detail;
              if (report.ok) {
                out["iso_p"] = intmat_to_json(report.iso_p);
                out["iso_s"] = intmat_to_json(report.iso_s);
                out["iso_m"] = intmat_to_json(report.iso_m);
              }
              return out;
            }},
       }},
      {"nf",
       {
           {"char-poly",
            [](Ctx& ctx) {
              auto field = NumberField::create(poly_from_json(ctx.in().at("modulus")));
              auto z = make_element(field, poly_from_json(ctx.in().at("element")));
              json out;
              out["char_poly"] = poly_to_json(char_poly(z));
              return out;
            }},
           {"n-theta",
            [](Ctx& ctx) {
              auto field = NumberField::create(poly_from_json(ctx.in().at("modulus")));
              auto z = make_element(field, poly_from_json(ctx.in().at("element")));
              auto theta = theta_from_json(ctx.in().at("theta"));
              json out;
              out["value"] = rat_to_json(n_theta_eval(z, theta));
              return out;
            }},
           {"hilbert",
            [](Ctx& ctx) {
              Rat a = ctx.opt_rat("a"), b = ctx.opt_rat("b");
              Place v = place_from_json(ctx.opt("place") == "inf"
                                            ? json("inf")
                                            : json(std::stol(ctx.opt("place"))));
              const int sym = hilbert_symbol(a, b, v);
              json out;
              out["symbol"] = sym;
              if (ctx.verify) {
                if (!a.get_num().fits_slong_p() || !a.get_den().fits_slong_p() ||
                    !b.get_num().fits_slong_p() || !b.get_den().fits_slong_p())
                  fail(Errc::unsupported, "arguments too large for the brute oracle");
                const int brute = oracles::hilbert_symbol_brute(
                    a.get_num().get_si(), a.get_den().get_si(), b.get_num().get_si(),
                    b.get_den().get_si(), v.infinite ? 0 : v.prime);
                if (brute != sym)
                  fail(Errc::mismatch, "verification failed: brute oracle disagrees");
                out["verified"] = true;
              }
              return out;
            }},
           {"product-formula",
            [](Ctx& ctx) {
              Rat a = ctx.opt_rat("a"), b = ctx.opt_rat("b");
              json symbols = json::array();
              for (const auto& v : relevant_places({a, b})) {
                json one;
                one["place"] = place_to_json(v);
                one["symbol"] = hilbert_symbol(a, b, v);
                symbols.push_back(std::move(one));
              }
              json out;
              out["holds"] = product_formula_check(a, b);
              out["symbols"] = std::move(symbols);
              return out;
            }},
           {"norm-field",
            [](Ctx& ctx) {
              std::vector<Rat> alphas;
              for (const auto& aj : ctx.in().at("alphas")) alphas.push_back(rat_from_json(aj));
              std::vector<Place> split;
              if (ctx.in().contains("split"))
                for (const auto& pj : ctx.in().at("split"))
                  split.push_back(place_from_json(pj));
              auto r = find_quadratic_norm_field(alphas, split, ctx.cfg);
              json certs = json::array();
              for (const auto& c : r.certificates) {
                if (!verify_certificate(c))
                  fail(Errc::mismatch, "certificate failed re-verification");
                certs.push_back(certificate_to_json(c));
              }
              json out;
              out["d"] = r.d;
              out["certificates"] = std::move(certs);
              return out;
            }},
           {"trace-square",
            [](Ctx& ctx) {
              auto r = cubic_trace_square(ctx.opt_rat("alpha"), ctx.flag("cyclic"),
                                          ctx.cfg);
              json out;
              out["f"] = poly_to_json(r.f);
              out["beta"] = poly_to_json(r.beta.repr);
              out["trace_of_beta_squared"] = rat_to_json(r.p2_check);
              out["discriminant"] = rat_to_json(cubic_discriminant(r.f));
              return out;
            }},
           {"faithful",
            [](Ctx& ctx) {
              auto [g, s] = group_and_subgroup(ctx);
              json out;
              out["faithful"] = faithfulness_check(g, s);
              return out;
            }},
       }},
      {"descent",
       {
           {"supersolvable",
            [](Ctx& ctx) {
              return filtration_result(outer_action_from_json(ctx.in(), ctx.cfg), ctx);
            }},
           {"check",
            [](Ctx& ctx) {
              auto [a, s] = action_and_subgroup(ctx);
              auto report = check_descent_hypotheses(a, s);
              json out;
              out["stable"] = report.stable;
              out["quotient_supersolvable"] = report.quotient_supersolvable;
              if (report.filtration)
                out["filtration"] = filtration_to_json(*report.filtration);
              return out;
            }},
           {"classify",
            [](Ctx& ctx) {
              auto [a, s] = action_and_subgroup(ctx);
              auto report = classify_kernel_cases(a, s, ctx.cfg);
              json out;
              out["stable"] = report.stable;
              out["quotient_supersolvable"] = report.quotient_supersolvable;
              out["kernel_almost_complete"] = report.kernel_almost_complete;
              out["kernel_complete"] = report.kernel_complete;
              return out;
            }},
       }},
  };
  return table;
}

long env_or(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stol(v);
  } catch (...) {
    return fallback;
  }
}

} // namespace

std::string cli_usage() {
  std::ostringstream os;
  os << "usage: descent-forge <verb> <subcommand> [options]\n\n"
     << "verbs and subcommands:\n";
  for (const auto& [verb, subs] : handlers()) {
    os << "  " << verb << ":";
    for (const auto& [name, fn] : subs) os << " " << name;
    os << "\n";
  }
  os << "\noptions:\n"
        "  --input FILE        read the JSON input document from FILE\n"
        "  --json INLINE       take the JSON input document from the command line\n"
        "  --pretty            indent the output\n"
        "  --verify            re-run the independent oracle and compare\n"
        "  --budget N          backtracking node limit\n"
        "  --d-bound N         |d| limit for the quadratic norm field search\n"
        "  --witness-bound N   witness numerator/denominator cap\n"
        "  --group-cap N       maximum group order\n"
        "  --n N, --alpha Q, --a Q, --b Q, --place P, --cyclic   per-subcommand\n"
        "environment: DESCENT_FORGE_BUDGET, DESCENT_FORGE_D_BOUND,\n"
        "             DESCENT_FORGE_WITNESS_BOUND, DESCENT_FORGE_GROUP_CAP\n"
        "exit codes: 0 ok, 1 usage/parse, 2 computation, 3 exhausted budget\n";
  return os.str();
}

CommandResult run_command(const std::vector<std::string>& args) {
  auto usage_error = [](const std::string& message) {
    json err;
    err["error"]["code"] = "usage";
    err["error"]["message"] = message;
    return CommandResult{1, err.dump() + "\n"};
  };

  if (args.size() < 2) return usage_error("expected: <verb> <subcommand> [options]");
  const auto verb_it = handlers().find(args[0]);
  if (verb_it == handlers().end()) return usage_error("unknown verb: " + args[0]);
  const auto sub_it = verb_it->second.find(args[1]);
  if (sub_it == verb_it->second.end())
    return usage_error("unknown subcommand: " + args[0] + " " + args[1]);

  Ctx ctx;
  ctx.cfg.search_budget = env_or("DESCENT_FORGE_BUDGET", ctx.cfg.search_budget);
  ctx.cfg.d_bound = env_or("DESCENT_FORGE_D_BOUND", ctx.cfg.d_bound);
  ctx.cfg.witness_bound = env_or("DESCENT_FORGE_WITNESS_BOUND", ctx.cfg.witness_bound);
  ctx.cfg.group_cap = static_cast<int>(env_or("DESCENT_FORGE_GROUP_CAP", ctx.cfg.group_cap));

  bool pretty = false;
  std::string input_file, inline_json;
  for (std::size_t i = 2; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&](const char* what) -> std::string {
      if (i + 1 >= args.size())
        fail(Errc::invalid_input, std::string("option ") + what + " needs a value");
      return args[++i];
    };
    try {
      if (a == "--input") input_file = value("--input");
      else if (a == "--json") inline_json = value("--json");
      else if (a == "--pretty") pretty = true;
      else if (a == "--verify") ctx.verify = true;
      else if (a == "--budget") ctx.cfg.search_budget = std::stol(value("--budget"));
      else if (a == "--d-bound") ctx.cfg.d_bound = std::stol(value("--d-bound"));
      else if (a == "--witness-bound")
        ctx.cfg.witness_bound = std::stol(value("--witness-bound"));
      else if (a == "--group-cap") ctx.cfg.group_cap = std::stoi(value("--group-cap"));
      else if (a == "--cyclic") ctx.opts["cyclic"] = "1";
      else if (a.rfind("--", 0) == 0) ctx.opts[a.substr(2)] = value(a.c_str());
      else return usage_error("unexpected argument: " + a);
    } catch (const Error& e) {
      return usage_error(e.what());
    } catch (const std::exception& e) {
      return usage_error(std::string("bad option value: ") + e.what());
    }
  }

  if (!input_file.empty() && !inline_json.empty())
    return usage_error("--input and --json are mutually exclusive");
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) return usage_error("cannot open input file: " + input_file);
    try {
      in >> ctx.input;
      ctx.has_input = true;
    } catch (const std::exception& e) {
      return usage_error(std::string("bad JSON in input file: ") + e.what());
    }
  } else if (!inline_json.empty()) {
    try {
      ctx.input = json::parse(inline_json);
      ctx.has_input = true;
    } catch (const std::exception& e) {
      return usage_error(std::string("bad inline JSON: ") + e.what());
    }
  }

  try {
    json result = sub_it->second(ctx);
    json out;
    out["op"] = args[0] + "." + args[1];
    out["result"] = std::move(result);
    return CommandResult{0, out.dump(pretty ? 2 : -1) + "\n"};
  } catch (const Error& e) {
    const int code = e.code() == Errc::budget_exceeded ||
                             e.code() == Errc::bound_exhausted ||
                             e.code() == Errc::cap_exceeded
                         ? 3
                         : 2;
    json err;
    err["error"]["code"] = errc_name(e.code());
    err["error"]["message"] = e.what();
    return CommandResult{code, err.dump(pretty ? 2 : -1) + "\n"};
  } catch (const json::exception& e) {
    json err;
    err["error"]["code"] = "invalid_input";
    err["error"]["message"] = e.what();
    return CommandResult{1, err.dump(pretty ? 2 : -1) + "\n"};
  } catch (const std::exception& e) {
    json err;
    err["error"]["code"] = "internal";
    err["error"]["message"] = e.what();
    return CommandResult{2, err.dump(pretty ? 2 : -1) + "\n"};
  }
}

} // namespace forge
