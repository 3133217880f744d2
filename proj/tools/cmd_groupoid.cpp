#include "cli.hpp"

#include "bsg/error.hpp"
#include "bsg/presented.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace bsg::cli {

namespace {

std::vector<std::vector<int>> parse_maps(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(io::parse_id_list(part));
  return out;
}

std::vector<Rational> parse_masses(const std::string& s, int n) {
  if (s.empty()) return uniform_masses(n);
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  if (static_cast<int>(out.size()) != n)
    throw Error(ErrorKind::InvalidParams, "expected " + std::to_string(n) + " masses");
  return out;
}

Json unit_values(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

void add_groupoid(CLI::App& app, Context& ctx) {
  CLI::App* gp = app.add_subcommand("groupoid", "finite measured groupoids (JSON schema 1)");
  gp->require_subcommand(1);
  struct Opts {
    std::string in, sub, over, units, maps, masses, phi;
  };
  auto o = std::make_shared<Opts>();
  auto load = [o] { return io::groupoid_from_json(io::read_json_file(o->in)); };
  auto with_in = [&](const char* name, const char* help) {
    CLI::App* sub = gp->add_subcommand(name, help);
    sub->add_option("--in", o->in, "groupoid JSON file")->required();
    return sub;
  };
  auto with_sub = [&](const char* name, const char* help) {
    CLI::App* sub = with_in(name, help);
    sub->add_option("--sub", o->sub, "subgroupoid generated by these arrow ids, e.g. 3,7")->capture_default_str();
    return sub;
  };

  on_run(with_in("validate", "check units, inverses, closure and associativity"), ctx, [&ctx, load] {
    Groupoid g;
    try {
      g = load();
      validate_axioms(g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AxiomViolation) throw;
      emit(ctx, {{"valid", false}, {"violation", e.what()}});
      return static_cast<int>(kVerificationFailed);
    }
    emit(ctx, {{"valid", true}, {"units", g.num_units()}, {"arrows", g.num_arrows()}});
    return static_cast<int>(kOk);
  });

  on_run(with_in("info", "sizes, components, measure preservation, type"), ctx, [&ctx, load] {
    Groupoid g = load();
    ErgodicDecomposition ed = ergodic_decomposition(g);
    Json comps = Json::array();
    for (const auto& c : ed.components) comps.push_back(c);
    emit(ctx, {{"units", g.num_units()},
               {"arrows", g.num_arrows()},
               {"measure_preserving", g.measure_preserving()},
               {"components", comps},
               {"type", io::type_to_json(classify_type(g))}});
    return kOk;
  });

  CLI::App* fa = gp->add_subcommand("from-action", "group action groupoid from generating permutations");
  fa->add_option("--perms", o->maps, "permutations as images, ';'-separated, e.g. \"1,0,2;0,2,1\"")->required();
  fa->add_option("--masses", o->masses, "comma-separated masses (default uniform)");
  on_run(fa, ctx, [&ctx, o] {
    auto gens = parse_maps(o->maps);
    int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
    emit(ctx, io::groupoid_to_json(from_group_action(gens, parse_masses(o->masses, n))));
    return kOk;
  });

  CLI::App* fp = gp->add_subcommand("from-partial-isos", "principal groupoid generated by partial bijections");
  fp->add_option("--maps", o->maps, "images with -1 off the domain, ';'-separated")->required();
  fp->add_option("--masses", o->masses, "comma-separated masses (default uniform)");
  on_run(fp, ctx, [&ctx, o] {
    std::vector<PartialBijection> seeds;
    for (auto& m : parse_maps(o->maps)) seeds.push_back({m});
    int n = seeds.empty() ? 0 : static_cast<int>(seeds[0].map.size());
    emit(ctx, io::groupoid_to_json(from_partial_isos(seeds, parse_masses(o->masses, n))));
    return kOk;
  });

  CLI::App* rs = with_in("restrict", "restriction to a unit subset");
  rs->add_option("--units", o->units, "comma-separated units")->required();
  on_run(rs, ctx, [&ctx, load, o] {
    Groupoid g = load();
    UnitSet A = io::parse_id_list(o->units);
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    Restriction r = restrict(g, A);
    emit(ctx, {{"units", r.units}, {"arrows", r.arrows}, {"groupoid", io::groupoid_to_json(r.groupoid)}});
    return kOk;
  });

  CLI::App* sat = with_sub("saturation", "saturation of a unit subset under the subgroupoid");
  sat->add_option("--units", o->units)->required();
  on_run(sat, ctx, [&ctx, load, o] {
    Groupoid g = load();
    UnitSet A = io::parse_id_list(o->units);
    std::sort(A.begin(), A.end());
    emit(ctx, {{"value", saturation(io::subgroupoid_from_ids(g, io::parse_id_list(o->sub)), A)}});
    return kOk;
  });

  CLI::App* ix = with_sub("index", "index and local index of the subgroupoid at every unit");
  ix->add_option("--over", o->over, "ambient subgroupoid by generating arrows (default: everything)");
  on_run(ix, ctx, [&ctx, load, o] {
    Groupoid g = load();
    Subgroupoid h = io::subgroupoid_from_ids(g, io::parse_id_list(o->sub));
    Subgroupoid k = o->over.empty() ? whole(g) : io::subgroupoid_from_ids(g, io::parse_id_list(o->over));
    if (!is_contained(h, k)) throw Error(ErrorKind::InvalidParams, "--sub is not inside --over");
    Json rows = Json::array();
    for (int x = 0; x < g.num_units(); ++x)
      rows.push_back({{"unit", x}, {"index", index(k, h, x)}, {"local_index", to_string(local_index(k, h, x))}});
    emit(ctx, {{"rows", rows}});
    return kOk;
  });

  on_run(with_sub("quasinormal", "quasi-normality and normality with a covering family"), ctx, [&ctx, load, o] {
    Groupoid g = load();
    QuasiNormalWitness w = is_quasinormal(io::subgroupoid_from_ids(g, io::parse_id_list(o->sub)));
    Json fam = Json::array();
    for (const auto& phi : w.family) fam.push_back(phi.at);
    emit(ctx, {{"quasinormal", w.quasinormal}, {"normal", w.normal}, {"family", fam}});
    return kOk;
  });

  CLI::App* qn = with_sub("qn", "classify a partial isomorphism against the subgroupoid");
  qn->add_option("--phi", o->phi, "arrow chosen at each unit, -1 off the domain")->required();
  on_run(qn, ctx, [&ctx, load, o] {
    Groupoid g = load();
    PartialIso phi{io::parse_id_list(o->phi)};
    if (static_cast<int>(phi.at.size()) != g.num_units())
      throw Error(ErrorKind::InvalidParams, "--phi needs one entry per unit");
    QNReport r = qn_membership(io::subgroupoid_from_ids(g, io::parse_id_list(o->sub)), phi);
    Json rows = Json::array();
    for (const auto& t : r.indices) rows.push_back({{"unit", t[0]}, {"minus", t[1]}, {"plus", t[2]}});
    emit(ctx, {{"class", qn_class_name(r.kind)}, {"rows", rows}});
    return kOk;
  });

  on_run(with_sub("quotient", "quotient by a normal subgroupoid"), ctx, [&ctx, load, o] {
    Groupoid g = load();
    Subgroupoid s = io::subgroupoid_from_ids(g, io::parse_id_list(o->sub));
    Quotient q = quotient(s);
    bool ker = kernel_is(q, s), lift = has_lifting_property(q, g);
    emit(ctx, {{"kernel_is_S", ker},
               {"lifting", lift},
               {"theta", q.theta},
               {"unit_map", q.unit_map},
               {"quotient", io::groupoid_to_json(q.groupoid)}});
    return ker && lift ? kOk : kVerificationFailed;
  });
}

void add_cocycle(CLI::App& app, Context& ctx) {
  CLI::App* cc = app.add_subcommand("cocycle", "cocycles, Mackey ranges and types");
  cc->require_subcommand(1);
  struct Opts {
    ParamOpts params;
    long long k = 1, l = 0;
    bool verify = false;
    std::string in, sub, c1, c2, cocycle;
  };
  auto o = std::make_shared<Opts>();
  auto load = [o] { return io::groupoid_from_json(io::read_json_file(o->in)); };

  CLI::App* lm = cc->add_subcommand("level-model", "finite BS(p,q) level model and D I along phi_t");
  add_params(lm, o->params);
  lm->add_option("--k", o->k)->capture_default_str();
  lm->add_option("--l", o->l)->capture_default_str();
  lm->add_flag("--verify-corollary", o->verify, "require D I = |q/p| on every t-arrow");
  on_run(lm, ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    auto m = bs_level_model(bp, o->k, o->l);
    auto fam = level_model_witnesses(*m);
    Cocycle D = modular_D(m->S, &fam), I = local_index_I(m->S, &fam);
    std::set<Rational> products, ds, is;
    for (int x : m->D) {
      int a = m->phi_t.at[x];
      products.insert(D.values[a] * I.values[a]);
      ds.insert(D.values[a]);
      is.insert(I.values[a]);
    }
    auto one = [](const std::set<Rational>& s) { return s.size() == 1 ? Json(to_string(*s.begin())) : Json("varies"); };
    bool ok = products.size() == 1 && *products.begin() == bp.ratio();
    emit(ctx, {{"params", bp.str()},
               {"k", o->k},
               {"l", o->l},
               {"N", m->N},
               {"N_prime", m->Nprime},
               {"units", m->groupoid.num_units()},
               {"arrows", m->groupoid.num_arrows()},
               {"D", one(ds)},
               {"I", one(is)},
               {"product", one(products)},
               {"modular", to_string(bp.ratio())},
               {"verified", ok}});
    return o->verify && !ok ? kVerificationFailed : kOk;
  });

  auto with_in = [&](const char* name, const char* help) {
    CLI::App* sub = cc->add_subcommand(name, help);
    sub->add_option("--in", o->in, "groupoid JSON file")->required();
    return sub;
  };

  on_run(with_in("radon-nikodym", "mu(r)/mu(s) on every arrow"), ctx, [&ctx, load] {
    emit(ctx, io::cocycle_to_json(radon_nikodym(load())));
    return kOk;
  });
  CLI::App* md = with_in("modular-d", "the modular cocycle D of a subgroupoid");
  md->add_option("--sub", o->sub, "subgroupoid generated by these arrow ids")->capture_default_str();
  on_run(md, ctx, [&ctx, load, o] {
    Groupoid g = load();
    emit(ctx, io::cocycle_to_json(modular_D(io::subgroupoid_from_ids(g, io::parse_id_list(o->sub)))));
    return kOk;
  });
  CLI::App* li = with_in("local-index-i", "the local-index cocycle I of a subgroupoid");
  li->add_option("--sub", o->sub, "subgroupoid generated by these arrow ids")->capture_default_str();
  on_run(li, ctx, [&ctx, load, o] {
    Groupoid g = load();
    emit(ctx, io::cocycle_to_json(local_index_I(io::subgroupoid_from_ids(g, io::parse_id_list(o->sub)))));
    return kOk;
  });

  CLI::App* co = with_in("cohomologous", "transfer map psi with c2 = psi(r) c1 psi(s)^-1");
  co->add_option("--c1", o->c1, "cocycle JSON file")->required();
  co->add_option("--c2", o->c2, "cocycle JSON file")->required();
  on_run(co, ctx, [&ctx, load, o] {
    Groupoid g = load();
    Cocycle a = io::cocycle_from_json(io::read_json_file(o->c1), g.num_arrows());
    Cocycle b = io::cocycle_from_json(io::read_json_file(o->c2), g.num_arrows());
    auto psi = cohomologous(g, a, b);
    emit(ctx, {{"cohomologous", psi.has_value()}, {"transfer", psi ? unit_values(*psi) : Json(nullptr)}});
    return kOk;
  });

  CLI::App* mk = with_in("mackey", "Mackey range of a Z or Z/n valued cocycle");
  mk->add_option("--cocycle", o->cocycle, "cocycle JSON file")->required();
  on_run(mk, ctx, [&ctx, load, o] {
    Groupoid g = load();
    Cocycle c = io::cocycle_from_json(io::read_json_file(o->cocycle), g.num_arrows());
    if (!is_cocycle(g, c)) throw Error(ErrorKind::NotACocycle, "values do not respect products");
    emit(ctx, io::mackey_to_json(mackey_range(g, c)));
    return kOk;
  });

  CLI::App* fl = with_in("flow", "flow type of a |q/p|-power valued cocycle");
  add_params(fl, o->params);
  fl->add_option("--cocycle", o->cocycle, "cocycle JSON file")->required();
  on_run(fl, ctx, [&ctx, load, o] {
    Groupoid g = load();
    Cocycle c = io::cocycle_from_json(io::read_json_file(o->cocycle), g.num_arrows());
    if (!is_cocycle(g, c)) throw Error(ErrorKind::NotACocycle, "values do not respect products");
    FlowType ft = flow_type(EdgeGraph::from_groupoid(g), c, make_params(o->params));
    Json j{{"cycle_lengths", ft.cycle_lengths}, {"description", ft.str()}};
    if (ft.n) {
      j["n"] = *ft.n;
      j["type"] = to_string(ft.value);
    }
    emit(ctx, j);
    return kOk;
  });

  on_run(with_in("type", "type from Radon-Nikodym values around cycles"), ctx, [&ctx, load] {
    emit(ctx, io::type_to_json(classify_type(load())));
    return kOk;
  });
}

}  // namespace bsg::cli
