#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tars/bases.hpp"
#include "tars/canon.hpp"

namespace tars {

struct SearchOptions {
  Int kmax_root = 6;
  Int kmax_entry = 1;
  /// Refuse when C(candidates, l+1) exceeds this.
  std::uint64_t budget = 50'000'000;
};

struct FoundBase {
  Base base;
  Verdict verdict = Verdict::VerifiedAtCutoff;
  std::optional<CanonicalParams> params;
};

struct SearchResult {
  std::size_t candidates = 0;
  std::uint64_t subsets_visited = 0;
  std::vector<FoundBase> bases;
};

/// Every (l+1)-subset of roots with |delta coefficient| <= kmax_entry that
/// survives the pruning rules and verifies at kmax_root, each annotated with
/// its canonical parameterization. Candidates exclude Z delta and 2R; pairs
/// whose difference is a root are never combined; at most one extra-long root
/// of each kind for A(2m-1,2n-1)^(2); every symbol must be covered.
SearchResult search_bases(const SystemDescriptor& sys, const SearchOptions& opts = {});

struct PropertyResult {
  std::string id;
  std::string statement;
  std::string mode;  // exhaustive, sampled or not-applicable
  std::uint64_t samples = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::string> witness;
};

struct PropertyReport {
  SystemDescriptor sys;
  Int kmax = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool ok() const;
};

using StarForm = std::function<Int(const Vector&, const Vector&)>;

struct PropertyOptions {
  std::uint64_t samples = 2000;
  /// Replaces form_star inside the suite; used to test the harness itself.
  StarForm star;
};

PropertyReport run_property_suite(const SystemDescriptor& sys, Int kmax, std::uint64_t seed,
                                  const PropertyOptions& opts = {});

/// Seeded random valid params for a row.
/// k values are drawn from [-kspan, kspan] subject to the row's parity rule.
CanonicalParams random_params(const SystemDescriptor& sys, Form form, std::mt19937_64& rng, Int kspan = 2);

/// Searches the star-norm-2 roots of the window for vectors whose Gram matrix
/// under the given form is 2 I minus the adjacency of the named Dynkin graph
/// (one of "D4", "E6", "E7", "E8"). Returns one witness when found.
std::optional<std::vector<Vector>> find_simply_laced_configuration(const SystemDescriptor& sys, const std::string& type,
                                                                   const StarForm& star = {});

}  // namespace tars
