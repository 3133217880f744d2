#pragma once

#include "bsg/cocycle.hpp"
#include "bsg/random.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bsg {

// Outcome of one property checked over many instances.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  void record(bool ok, const std::string& what);
  void merge(const CheckResult& o);
};

std::vector<BSParams> standard_params();  // BS(2,3), BS(2,5), BS(4,6), BS(6,9), BS(2,-3)

// ---- words and tree ----
// Normal forms against pinch reduction: pinch-free, same element, idempotent, identity test.
CheckResult check_normal_forms(Rng& rng, const BSParams& params, std::size_t words);
// Classifier over all nonzero |p|,|q|,|r|,|s| <= bound: explicit isomorphisms when it says yes,
// a separating homomorphism count into a small finite group when it says no.
CheckResult check_isomorphism_classifier(int bound);
// Number of pairs (a, t) in the group with t a^p t^-1 = a^q.
long long count_bs_homs(const FiniteGroup& g, long long p, long long q);
CheckResult check_stabilizer_indices(const BSParams& params, std::size_t radius);

// ---- groupoids ----
struct GroupoidCheckSizes {
  std::size_t instances = 500;
  int max_units = 24;
  int max_arrows = 400;
};
std::vector<CheckResult> check_index_laws(Rng& rng, const GroupoidCheckSizes& sizes);
std::vector<CheckResult> check_local_index(Rng& rng, std::size_t towers, std::size_t group_instances);
std::vector<CheckResult> check_quotients(Rng& rng, std::size_t pairs);
// Mask of the subgroup generated by elems, and of the normal closure.
std::vector<char> subgroup_generated(const FiniteGroup& g, const std::vector<int>& elems);
std::vector<char> normal_closure(const FiniteGroup& g, const std::vector<int>& elems);

// ---- cocycles ----
std::vector<CheckResult> check_level_models(const std::vector<BSParams>& params, const std::vector<long long>& ks,
                                            const std::vector<long long>& ls);
std::vector<CheckResult> check_cocycle_cohomology(Rng& rng, std::size_t cases);
std::vector<CheckResult> check_mackey(Rng& rng, const BSParams& params, const std::vector<long long>& ns,
                                      std::size_t cocycles);
std::vector<CheckResult> check_types(Rng& rng);

// ---- profinite ----
std::vector<CheckResult> check_profinite(const std::vector<BSParams>& params, const Int& max_modulus);

// ---- dynamics ----
struct DynamicsCheckSizes {
  long long beta_range = 1000;
  std::size_t beta_points = 20;
  long long discrepancy_steps = 100000;
  double discrepancy_bound = 1e-3;
  long long cesaro_horizon = 10000;
  double cesaro_bound = 0.05;
  std::size_t table_instances = 50;
};
std::vector<CheckResult> check_dynamics(Rng& rng, const DynamicsCheckSizes& sizes);

}  // namespace bsg
