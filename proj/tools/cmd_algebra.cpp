#include "cli.hpp"

#include "bsg/coupling.hpp"
#include "bsg/error.hpp"
#include "bsg/profinite.hpp"
#include "bsg/tree.hpp"

#include <memory>
#include <sstream>

namespace bsg::cli {

void add_params(CLI::App* sub, ParamOpts& o) {
  sub->add_option("--p", o.p, "p in t a^p t^-1 = a^q")->capture_default_str();
  sub->add_option("--q", o.q, "q in t a^p t^-1 = a^q")->capture_default_str();
}

BSParams make_params(const ParamOpts& o) { return BSParams::make(o.p, o.q); }

namespace {

Json word_json(const NormalForm& nf) { return nf.str(); }

}  // namespace

void add_bs(CLI::App& app, Context& ctx) {
  CLI::App* bs = app.add_subcommand("bs", "Baumslag-Solitar word algebra");
  bs->require_subcommand(1);

  struct Opts {
    ParamOpts params;
    std::string word, g, x;
    long long bound = 1000;
    long long r = 0, s = 0;
  };
  auto o = std::make_shared<Opts>();

  auto with_word = [&](const char* name, const char* help) {
    CLI::App* sub = bs->add_subcommand(name, help);
    add_params(sub, o->params);
    sub->add_option("--word", o->word, "word such as \"t a^2 T A\" (capitals are inverses)")->required();
    return sub;
  };

  on_run(with_word("normalize", "Britton normal form"), ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    NormalForm nf = normalize(Word::parse(o->word), bp);
    emit(ctx, {{"params", bp.str()}, {"word", o->word}, {"normal_form", word_json(nf)},
               {"pinch_free", is_pinch_free(nf, bp)}});
    return kOk;
  });
  on_run(with_word("identity", "word problem"), ctx, [&ctx, o] {
    emit(ctx, {{"value", is_identity(Word::parse(o->word), make_params(o->params))}});
    return kOk;
  });
  on_run(with_word("modular", "modular homomorphism |q/p|^(t-exponent sum)"), ctx, [&ctx, o] {
    emit(ctx, {{"value", to_string(modular_hom(Word::parse(o->word), make_params(o->params)))}});
    return kOk;
  });
  on_run(with_word("elliptic", "does the element fix a tree vertex"), ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    Word w = Word::parse(o->word);
    Json j{{"value", is_elliptic(w, bp)}};
    if (auto v = fixed_vertex(w, bp)) j["fixed_vertex"] = v->str();
    emit(ctx, j);
    return kOk;
  });

  CLI::App* conj = bs->add_subcommand("conjugation", "smallest n with g x^n g^-1 = x^m");
  add_params(conj, o->params);
  conj->add_option("--g", o->g, "conjugating word")->required();
  conj->add_option("--x", o->x, "elliptic word")->required();
  conj->add_option("--bound", o->bound, "largest n tried")->capture_default_str();
  on_run(conj, ctx, [&ctx, o] {
    auto e = conjugation_exponents(Word::parse(o->g), Word::parse(o->x), make_params(o->params), o->bound);
    emit(ctx, {{"n", e.n.str()}, {"m", e.m.str()}});
    return kOk;
  });

  CLI::App* iso = bs->add_subcommand("isomorphic", "is BS(p,q) isomorphic to BS(r,s)");
  iso->add_option("--p", o->params.p)->required();
  iso->add_option("--q", o->params.q)->required();
  iso->add_option("--r", o->r)->required();
  iso->add_option("--s", o->s)->required();
  on_run(iso, ctx, [&ctx, o] {
    if (o->params.p == 0 || o->params.q == 0 || o->r == 0 || o->s == 0)
      throw Error(ErrorKind::InvalidParams, "exponents must be nonzero");
    emit(ctx, {{"value", classify_isomorphism(o->params.p, o->params.q, o->r, o->s)}});
    return kOk;
  });

  CLI::App* am = bs->add_subcommand("amenable", "is BS(p,q) amenable");
  am->add_option("--p", o->params.p)->required();
  am->add_option("--q", o->params.q)->required();
  on_run(am, ctx, [&ctx, o] {
    if (o->params.p == 0 || o->params.q == 0) throw Error(ErrorKind::InvalidParams, "exponents must be nonzero");
    emit(ctx, {{"value", is_amenable(o->params.p, o->params.q)}});
    return kOk;
  });
}

void add_tree(CLI::App& app, Context& ctx) {
  CLI::App* tree = app.add_subcommand("tree", "Bass-Serre tree");
  tree->require_subcommand(1);
  struct Opts {
    ParamOpts params;
    std::string word, from, to;
    std::size_t radius = kDefaultRadius;
    long long oracle_bound = 0;
  };
  auto o = std::make_shared<Opts>();

  CLI::App* vertex = tree->add_subcommand("vertex", "canonical vertex w<a>");
  add_params(vertex, o->params);
  vertex->add_option("--word", o->word, "word such as \"t a^2 T A\"")->required();
  on_run(vertex, ctx, [&ctx, o] {
    emit(ctx, {{"vertex", canonical_vertex(Word::parse(o->word), make_params(o->params)).str()}});
    return kOk;
  });

  CLI::App* nb = tree->add_subcommand("neighbors", "edges at a vertex");
  add_params(nb, o->params);
  nb->add_option("--vertex", o->word, "vertex as a word")->required();
  on_run(nb, ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    Json rows = Json::array();
    for (const auto& [e, v] : neighbors(canonical_vertex(Word::parse(o->word), bp), bp))
      rows.push_back({{"edge", e.rep.str()}, {"sign", e.sign}, {"vertex", v.str()}});
    emit(ctx, {{"degree", rows.size()}, {"rows", rows}});
    return kOk;
  });

  CLI::App* geo = tree->add_subcommand("geodesic", "geodesic between two vertices");
  add_params(geo, o->params);
  geo->add_option("--from", o->from, "vertex as a word")->required();
  geo->add_option("--to", o->to, "vertex as a word")->required();
  geo->add_option("--radius", o->radius, "search radius")->capture_default_str();
  on_run(geo, ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    auto path = geodesic(canonical_vertex(Word::parse(o->from), bp), canonical_vertex(Word::parse(o->to), bp), bp,
                         o->radius);
    emit(ctx, {{"distance", path.size()}, {"rows", io::geodesic_to_json(path)}});
    return kOk;
  });

  CLI::App* stab = tree->add_subcommand("stabilizer", "index of the u-stabilizer meeting the v-stabilizer");
  add_params(stab, o->params);
  stab->add_option("--from", o->from, "vertex u as a word")->required();
  stab->add_option("--to", o->to, "vertex v as a word")->required();
  stab->add_option("--radius", o->radius, "search radius")->capture_default_str();
  stab->add_option("--oracle-bound", o->oracle_bound, "also run the smallest-power oracle up to this bound");
  on_run(stab, ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    TreeVertex u = canonical_vertex(Word::parse(o->from), bp), v = canonical_vertex(Word::parse(o->to), bp);
    Int idx = stabilizer_index(u, v, bp, o->radius);
    Json j{{"index", idx.str()}};
    int rc = kOk;
    if (o->oracle_bound > 0) {
      Int orc = stabilizer_index_oracle(u, v, bp, o->oracle_bound);
      j["oracle"] = orc.str();
      j["agree"] = orc == idx;
      if (orc != idx) rc = kVerificationFailed;
    }
    emit(ctx, j);
    return rc;
  });

  CLI::App* tau_cmd = tree->add_subcommand("tau", "t-exponent sum");
  add_params(tau_cmd, o->params);
  tau_cmd->add_option("--word", o->word, "word such as \"t a^2 T A\"")->required();
  on_run(tau_cmd, ctx, [&ctx, o] {
    emit(ctx, {{"value", tau(Word::parse(o->word), make_params(o->params)).str()}});
    return kOk;
  });
}

void add_profinite(CLI::App& app, Context& ctx) {
  CLI::App* pf = app.add_subcommand("profinite", "truncated profinite arithmetic; elements are residue@(K,L)");
  pf->require_subcommand(1);
  struct Opts {
    ParamOpts params;
    std::string x, y;
    unsigned k = 0, l = 0;
    long long m = 0;
  };
  auto o = std::make_shared<Opts>();
  auto X = [o] { return ProfiniteInt::parse(make_params(o->params), o->x); };
  auto Y = [o] { return ProfiniteInt::parse(make_params(o->params), o->y); };

  auto binary = [&](const char* name, const char* help, ProfiniteInt (*f)(const ProfiniteInt&, const ProfiniteInt&)) {
    CLI::App* sub = pf->add_subcommand(name, help);
    add_params(sub, o->params);
    sub->add_option("--x", o->x, "residue@(K,L)")->required();
    sub->add_option("--y", o->y, "residue@(K,L)")->required();
    on_run(sub, ctx, [&ctx, X, Y, f] {
      emit(ctx, {{"value", f(X(), Y()).str()}});
      return kOk;
    });
  };
  binary("add", "x + y at the lower level", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a + b; });
  binary("sub", "x - y at the lower level", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a - b; });
  binary("mul", "x y at the lower level", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a * b; });

  auto unary = [&](const char* name, const char* help) {
    CLI::App* sub = pf->add_subcommand(name, help);
    add_params(sub, o->params);
    sub->add_option("--x", o->x, "residue@(K,L)")->required();
    return sub;
  };
  on_run(unary("unit", "is x a unit"), ctx, [&ctx, X] {
    emit(ctx, {{"value", is_unit(X())}});
    return kOk;
  });
  on_run(unary("inverse", "inverse of a unit"), ctx, [&ctx, X] {
    emit(ctx, {{"value", unit_inverse(X()).str()}});
    return kOk;
  });
  on_run(unary("u0", "d0 (r - 1) = 0"), ctx, [&ctx, X] {
    emit(ctx, {{"value", u0_membership(X())}});
    return kOk;
  });

  auto leveled = [&](const char* name, const char* help) {
    CLI::App* sub = unary(name, help);
    sub->add_option("--k", o->k)->capture_default_str();
    sub->add_option("--l", o->l)->capture_default_str();
    return sub;
  };
  on_run(leveled("sigma", "multiply by p0^k q0^l"), ctx, [&ctx, X, o] {
    emit(ctx, {{"value", sigma_map(X(), o->k, o->l).str()}});
    return kOk;
  });
  on_run(leveled("sigma-inverse", "divide by p0^k q0^l"), ctx, [&ctx, X, o] {
    emit(ctx, {{"value", sigma_inverse(X(), o->k, o->l).str()}});
    return kOk;
  });
  on_run(leveled("fixes", "does the unit x fix the (k,l) level pointwise"), ctx, [&ctx, X, o] {
    emit(ctx, {{"value", check_unit_fixes_level(X(), o->k, o->l)}});
    return kOk;
  });
  on_run(leveled("in-level", "membership in the (k,l) level"), ctx, [&ctx, X, o] {
    emit(ctx, {{"value", X().in_level(o->k, o->l)}});
    return kOk;
  });

  CLI::App* tor = unary("torsion", "level at which m x = 0 forces x = 0");
  tor->add_option("--m", o->m)->required();
  on_run(tor, ctx, [&ctx, X, o] {
    auto [K, L] = torsion_free_level(X(), o->m);
    emit(ctx, {{"K", K}, {"L", L}});
    return kOk;
  });

  CLI::App* mod = pf->add_subcommand("modulus", "d0 |p0|^K |q0|^L");
  add_params(mod, o->params);
  mod->add_option("--K", o->k)->required();
  mod->add_option("--L", o->l)->required();
  on_run(mod, ctx, [&ctx, o] {
    emit(ctx, {{"value", ProfiniteInt::modulus(make_params(o->params), o->k, o->l).str()}});
    return kOk;
  });
}

namespace {

std::pair<Real, Real> parse_interval(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw Error(ErrorKind::ParseError, "expected lo,hi: " + s);
  return {parse_real(s.substr(0, c)), parse_real(s.substr(c + 1))};
}

Cylinder parse_cylinder(const std::string& s) {
  Cylinder c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "expected coordinate:bit, got " + tok);
    int bit = static_cast<int>(to_ll(parse_int(tok.substr(colon + 1))));
    if (bit != 0 && bit != 1) throw Error(ErrorKind::ParseError, "bits are 0 or 1");
    c.bits.push_back({to_ll(parse_int(tok.substr(0, colon))), bit});
  }
  return c;
}

}  // namespace

void add_dynamics(CLI::App& app, Context& ctx) {
  CLI::App* dyn = app.add_subcommand("dynamics", "the explicit coupling and its diagnostics");
  dyn->require_subcommand(1);
  struct Opts {
    ParamOpts params;
    std::string word, theta = "golden", x = "0", kappa = "0@(4,4)";
    long long n = 1, N = 1, steps = 1000, walk_limit = 10'000'000;
    std::string a1 = "0,1/2", a2 = "1/4,3/4", b1 = "0:1", b2 = "0:1";
    long long horizon = 1000, coordinates = 1 << 16;
    bool trivial_beta = false, series = false;
    long long c = 1, r = 2, s = 3, modulus = 12, d = 1, m = 2, nn = 3;
    int kmax = 3, lmax = 3;
  };
  auto o = std::make_shared<Opts>();

  CLI::App* lt = dyn->add_subcommand("ltheta", "L-coordinate of pi_theta(w) as a multiple of theta");
  add_params(lt, o->params);
  lt->add_option("--word", o->word, "word such as \"t a^2 T A\"")->required();
  on_run(lt, ctx, [&ctx, o] {
    LThetaValue v = l_theta(Word::parse(o->word), make_params(o->params));
    Json coeffs = Json::object();
    for (const auto& [t, k] : v.coefficients) coeffs[std::to_string(t)] = k.str();
    emit(ctx, {{"c", to_string(v.c)}, {"in_kernel", v.in_kernel}, {"coefficients", coeffs}});
    return kOk;
  });

  CLI::App* beta = dyn->add_subcommand("beta", "the unique m with x - n + theta m in [0, |theta|)");
  beta->add_option("--n", o->n)->required();
  beta->add_option("--x", o->x, "real number")->required();
  beta->add_option("--theta", o->theta, "p/q, [lo,hi], a+b*sqrt(n) or golden")->capture_default_str();
  on_run(beta, ctx, [&ctx, o] {
    Real th = parse_real(o->theta), x = parse_real(o->x);
    emit(ctx, {{"m", beta_cocycle(o->n, x, th).str()}, {"image", beta_shift(o->n, x, th).str()}});
    return kOk;
  });

  CLI::App* orb = dyn->add_subcommand("orbit", "rotation by theta - 1 on R / N Z");
  orb->add_option("--theta", o->theta, "p/q, [lo,hi], a+b*sqrt(n) or golden")->capture_default_str();
  orb->add_option("--N", o->N)->capture_default_str();
  orb->add_option("--steps", o->steps, "rotation steps")->capture_default_str();
  orb->add_option("--walk-limit", o->walk_limit, "give up on a period after this many steps")->capture_default_str();
  on_run(orb, ctx, [&ctx, o] {
    RotationOrbit r = rotation_model_orbit(parse_real(o->theta), o->N, o->steps, o->walk_limit);
    Json j{{"rotation", r.rotation.str()}, {"steps", r.steps}, {"degenerate", r.degenerate}};
    j["period"] = r.period ? Json(r.period->str()) : Json(nullptr);
    j["discrepancy"] = r.discrepancy ? Json(*r.discrepancy) : Json(nullptr);
    emit(ctx, j);
    return kOk;
  });

  CLI::App* act = dyn->add_subcommand("action", "act on a coupling point (x, kappa)");
  add_params(act, o->params);
  act->add_option("--word", o->word, "word such as \"t a^2 T A\"")->required();
  act->add_option("--x", o->x, "L-coordinate in [0,1)")->capture_default_str();
  act->add_option("--kappa", o->kappa, "residue@(K,L)")->capture_default_str();
  act->add_option("--theta", o->theta, "p/q, [lo,hi], a+b*sqrt(n) or golden")->capture_default_str();
  on_run(act, ctx, [&ctx, o] {
    BSParams bp = make_params(o->params);
    CouplingPoint pt{parse_real(o->x), ProfiniteInt::parse(bp, o->kappa)};
    CouplingPoint out = coupling_action(Word::parse(o->word), pt, parse_real(o->theta), bp);
    emit(ctx, {{"x", out.x.str()}, {"kappa", out.kappa.str()}, {"fixed", same_point(out, pt)}});
    return kOk;
  });

  CLI::App* ces = dyn->add_subcommand("cesaro", "Cesaro averages of b^k(A1 x B1) against A2 x B2");
  ces->add_option("--theta", o->theta, "p/q, [lo,hi], a+b*sqrt(n) or golden")->capture_default_str();
  ces->add_option("--a1", o->a1, "interval lo,hi as fractions of |theta|")->capture_default_str();
  ces->add_option("--a2", o->a2)->capture_default_str();
  ces->add_option("--b1", o->b1, "cylinder coord:bit,...")->capture_default_str();
  ces->add_option("--b2", o->b2)->capture_default_str();
  ces->add_option("--horizon", o->horizon, "largest k averaged")->capture_default_str();
  ces->add_option("--coordinates", o->coordinates, "modulus of the profinite coordinate")->capture_default_str();
  ces->add_flag("--trivial-beta", o->trivial_beta, "use a x id in place of the twisted shift");
  ces->add_flag("--series", o->series, "include the running averages");
  on_run(ces, ctx, [&ctx, o] {
    CesaroSetup cs;
    cs.theta = parse_real(o->theta);
    Real width = cs.theta.sign() < 0 ? -cs.theta : cs.theta;
    auto scale = [&](const std::string& s) {
      auto [lo, hi] = parse_interval(s);
      return std::make_pair(width * lo, width * hi);
    };
    cs.A1 = scale(o->a1);
    cs.A2 = scale(o->a2);
    cs.B1 = parse_cylinder(o->b1);
    cs.B2 = parse_cylinder(o->b2);
    cs.horizon = o->horizon;
    cs.coordinates = o->coordinates;
    cs.trivial_beta = o->trivial_beta;
    CesaroReport r = cesaro_mixing_test(cs);
    Json j{{"average", r.average.to_double()},     {"target", r.target.to_double()},
           {"gap", r.gap.to_double()},             {"rotation_gap", r.rotation_gap.to_double()},
           {"dependent_steps", r.dependent_steps}, {"error_bound", r.error_bound.to_double()}};
    if (o->series || ctx.format == "csv") {
      Json rows = Json::array();
      for (std::size_t k = 0; k < r.series.size(); ++k) rows.push_back({{"n", k + 1}, {"average", r.series[k]}});
      j["rows"] = rows;
    }
    emit(ctx, j);
    return kOk;
  });

  CLI::App* comp = dyn->add_subcommand("components", "orbit counts |W_{k,l}| of r^k s^l c Z on Z/n");
  comp->add_option("--c", o->c)->capture_default_str();
  comp->add_option("--n", o->modulus, "modulus")->capture_default_str();
  comp->add_option("--r", o->r)->capture_default_str();
  comp->add_option("--s", o->s)->capture_default_str();
  comp->add_option("--kmax", o->kmax)->capture_default_str();
  comp->add_option("--lmax", o->lmax)->capture_default_str();
  on_run(comp, ctx, [&ctx, o] {
    ComponentTable t = component_counts(o->c, o->modulus, o->r, o->s, o->kmax, o->lmax);
    Json rows = Json::array();
    for (std::size_t k = 0; k < t.counts.size(); ++k)
      for (std::size_t l = 0; l < t.counts[k].size(); ++l) rows.push_back({{"k", k}, {"l", l}, {"count", t.counts[k][l]}});
    emit(ctx, {{"divisibility_ok", t.divisibility_ok}, {"rows", rows}});
    return t.divisibility_ok ? kOk : kVerificationFailed;
  });

  CLI::App* per = dyn->add_subcommand("periodicity", "(d;m,n)-periodicity of the odometer on Z/M");
  per->add_option("--modulus", o->modulus, "odometer size M")->capture_default_str();
  per->add_option("--d", o->d)->capture_default_str();
  per->add_option("--m", o->m)->capture_default_str();
  per->add_option("--n", o->nn)->capture_default_str();
  per->add_option("--kmax", o->kmax)->capture_default_str();
  per->add_option("--lmax", o->lmax)->capture_default_str();
  on_run(per, ctx, [&ctx, o] {
    PeriodicityResult r = periodicity_check(odometer(o->modulus), o->d, o->m, o->nn, o->kmax, o->lmax);
    Json j{{"periodic", r.periodic}};
    if (r.failure) j["failure"] = {r.failure->first, r.failure->second};
    emit(ctx, j);
    return kOk;
  });
}

}  // namespace bsg::cli
