// One line per acceptance criterion; exit status 1 if any line fails.
#include "bsg/checks.hpp"
#include "bsg/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace bsg;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 for none
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  const auto P = standard_params();
  Rng rng(20260401);
  std::vector<Criterion> criteria = {
      {1, "D*I = |q/p| on level models", 5, [&] { return check_level_models(P, {1, 2}, {0, 1, 2}); }},
      {2, "index laws on 500 groupoids", 30, [&] { return check_index_laws(rng, {}); }},
      {3, "local index on 200 towers and 50 group actions", 0, [&] { return check_local_index(rng, 200, 50); }},
      {4, "quotients on 100 normal pairs", 0, [&] { return check_quotients(rng, 100); }},
      {5, "cocycle cohomology on 100 cases", 0, [&] { return check_cocycle_cohomology(rng, 100); }},
      {6, "Mackey/flow roundtrip, n in {1,2,3,5}, 50 cocycles", 0,
       [&] { return check_mackey(rng, P[0], {1, 2, 3, 5}, 50); }},
      {7, "type classification", 0, [&] { return check_types(rng); }},
      {8, "stabilizer index at radius 4 in BS(2,3), BS(4,6)", 60,
       [&] { return std::vector<CheckResult>{check_stabilizer_indices(P[0], 4), check_stabilizer_indices(P[2], 4)}; }},
      {9, "profinite identities for all M <= 10^4", 0, [&] { return check_profinite(P, Int(10000)); }},
      {10, "dynamics", 0, [&] { return check_dynamics(rng, {}); }},
      {11, "10^5 words and the classifier for |p|,|q|,|r|,|s| <= 6", 0,
       [&] {
         std::vector<CheckResult> v;
         for (const auto& p : P) v.push_back(check_normal_forms(rng, p, 20000));
         v.push_back(check_isomorphism_classifier(6));
         return v;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t cases = 0, failures = 0;
    std::string first;
    bool ok = error.empty() && !results.empty();
    for (const auto& r : results) {
      cases += r.cases;
      failures += r.failures;
      if (!r.passed()) {
        ok = false;
        if (first.empty()) first = r.name + (r.first_failure.empty() ? "" : ": " + r.first_failure);
      }
    }
    if (!error.empty()) first = "exception: " + error;
    bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    if (!in_time) first = "over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    ok = ok && in_time;
    if (!ok) ++failed;
    std::printf("%s criterion %2d: %s (%zu cases, %zu failures, %.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), cases, failures, secs, first.empty() ? "" : " -- ", first.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
