#pragma once

// Linear sum-rank codes over F_{q^m}: weights, brute-force minimum distance,
// the MSRD test via reduced-echelon block matrices, and a seeded
// Monte-Carlo harness.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "sumrank/combinatorics.hpp"
#include "sumrank/fields.hpp"
#include "sumrank/params.hpp"

namespace sumrank {

/// Raised when an exhaustive enumeration would exceed its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Code given by a k x n generator matrix; random codes are systematic [I_k | X].
struct LinearCode {
  CodeParams params;
  int k = 0;
  MatrixExt generator;
};

/// Per-block F_q-ranks of the m x eta expansions of x's blocks.
std::vector<int> weight_decomposition(const ExtField& field, std::span<const ExtElement> x, int ell, int eta);
int sum_rank_weight(const ExtField& field, std::span<const ExtElement> x, int ell, int eta);

/// ExtField matching the parameters' q and m.
ExtField make_ext_field(const CodeParams& params);

/// G = [I_k | X] with X uniform over F_{q^m}; 1 <= k < n.
LinearCode random_systematic_code(const ExtField& field, const CodeParams& params, int k, std::mt19937_64& rng);

/// Minimum sum-rank weight over all nonzero codewords. Throws
/// ResourceLimitError when q^{mk} exceeds the cap.
int min_distance_bruteforce(const ExtField& field, const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Block-diagonal matrix of full-rank reduced-row-echelon blocks U_i (t_i x eta).
struct EchelonBlockMatrix {
  std::vector<MatrixFq> blocks;
  int total = 0;

  /// The t x (ell eta) block-diagonal assembly.
  MatrixFq assemble(int eta) const;
};

/// Every full-rank reduced-row-echelon rows x cols matrix over the field.
std::vector<MatrixFq> full_rank_rref(const Field& field, int rows, int cols);
/// Every k x n reduced-row-echelon generator matrix over F_{q^m}, i.e. one
/// per k-dimensional subspace. Requires q^m < 2^64.
void for_each_rref_generator(const ExtField& field, int k, int n, const std::function<void(const MatrixExt&)>& visit);

/// |U_{ell,t}| = sum over partitions of prod_i [eta choose t_i]_q.
BigCount echelon_block_count(const CodeParams& params, int t);

/// Visits every element of U_{ell,t} exactly once. Return false from visit
/// to stop early.
void for_each_echelon_block_matrix(const Field& field, const CodeParams& params, int t,
                                   const std::function<bool(const EchelonBlockMatrix&)>& visit);

/// rk(U G^T) = k for all U in U_{ell,k}. Needs k <= ell mu and n-k+1 <= ell mu.
bool is_msrd(const ExtField& field, const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

struct TrialResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  std::uint64_t seed = 0;

  bool operator==(const TrialResult&) const = default;
};

/// Generator for trial `trial` of a run seeded with `seed`: mt19937_64
/// initialised from seed_seq{seed_lo, seed_hi, trial_lo, trial_hi}.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

using CodePredicate = std::function<bool(const LinearCode&)>;

CodePredicate msrd_predicate(const ExtField& field, std::uint64_t cap = kDefaultEnumerationCap);
CodePredicate min_distance_predicate(const ExtField& field, int d, std::uint64_t cap = kDefaultEnumerationCap);

/// Independent trials of random_systematic_code + predicate. Trials run in
/// parallel; the result does not depend on scheduling.
TrialResult monte_carlo(const ExtField& field, const CodeParams& params, int k, std::uint64_t trials, std::uint64_t seed,
                        const CodePredicate& predicate);

}  // namespace sumrank
