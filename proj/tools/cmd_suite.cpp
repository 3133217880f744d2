#include "cli.hpp"

#include "bsg/random.hpp"

#include <memory>

namespace bsg::cli {

namespace {

struct SuiteOpts {
  std::string name;
  std::size_t words = 2000;
  long long max_modulus = 2000;
  std::size_t instances = 100;
};

using Group = std::vector<CheckResult>;

Group law_checks(std::uint64_t seed, const SuiteOpts& o) {
  auto rng_for = [seed](std::uint64_t g) { return Rng(seed * 1000003ULL + g); };
  auto P = standard_params();
  Group out;
  auto add = [&out](const Group& g) { out.insert(out.end(), g.begin(), g.end()); };

  add(check_level_models(P, {1, 2}, {0, 1, 2}));
  {
    Rng rng = rng_for(1);
    GroupoidCheckSizes sizes;
    sizes.instances = o.instances;
    add(check_index_laws(rng, sizes));
  }
  {
    Rng rng = rng_for(2);
    add(check_local_index(rng, o.instances, std::max<std::size_t>(1, o.instances / 4)));
  }
  {
    Rng rng = rng_for(3);
    add(check_quotients(rng, o.instances));
  }
  {
    Rng rng = rng_for(4);
    add(check_cocycle_cohomology(rng, o.instances));
  }
  {
    Rng rng = rng_for(5);
    add(check_mackey(rng, P[0], {1, 2, 3, 5}, std::max<std::size_t>(1, o.instances / 2)));
  }
  {
    Rng rng = rng_for(6);
    add(check_types(rng));
  }
  out.push_back(check_stabilizer_indices(P[0], 4));
  out.push_back(check_stabilizer_indices(P[2], 4));
  add(check_profinite(P, Int(o.max_modulus)));
  {
    Rng rng = rng_for(7);
    for (const auto& p : P) out.push_back(check_normal_forms(rng, p, o.words));
  }
  out.push_back(check_isomorphism_classifier(6));
  return out;
}

Group dynamics_checks(std::uint64_t seed) {
  Rng rng(seed * 1000003ULL + 8);
  return check_dynamics(rng, {});
}

}  // namespace

void add_suite(CLI::App& app, Context& ctx) {
  CLI::App* su = app.add_subcommand("suite", "run the property suites and print a JSON summary");
  auto o = std::make_shared<SuiteOpts>();
  su->add_option("name", o->name, "lemmas, dynamics or all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "dynamics", "all"}));
  su->add_option("--words", o->words, "random words per parameter pair")->check(CLI::PositiveNumber)->capture_default_str();
  su->add_option("--max-modulus", o->max_modulus, "largest profinite modulus swept")->check(CLI::PositiveNumber)->capture_default_str();
  su->add_option("--instances", o->instances, "randomized groupoid instances per check")->check(CLI::PositiveNumber)->capture_default_str();
  on_run(su, ctx, [&ctx, o] {
    Group results;
    if (o->name != "dynamics") results = law_checks(ctx.seed, *o);
    if (o->name != "lemmas") {
      Group d = dynamics_checks(ctx.seed);
      results.insert(results.end(), d.begin(), d.end());
    }
    Json checks = Json::array(), rows = Json::array();
    bool all = true;
    std::size_t total = 0;
    for (const auto& r : results) {
      checks.push_back(io::check_to_json(r));
      rows.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}});
      all = all && r.passed();
      total += r.cases;
    }
    Json j{{"suite", o->name}, {"seed", ctx.seed}, {"checks", checks}, {"passed", all}, {"total_cases", total}};
    if (ctx.format == "csv") j["rows"] = rows;
    emit(ctx, j);
    return all ? kOk : kVerificationFailed;
  });
}

}  // namespace bsg::cli
