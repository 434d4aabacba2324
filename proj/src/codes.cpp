#include "sumrank/codes.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace sumrank {

namespace {

// Rank of the m x eta expansion of block `block` of a codeword stored as
// flat F_q coordinates (n entries of m coordinates each).
int block_rank(const Field& fq, std::span<const Field::Element> flat, int m, int eta, int block) {
  MatrixFq mat(m, eta);
  for (int j = 0; j < eta; ++j) {
    const std::size_t base = (static_cast<std::size_t>(block) * eta + j) * m;
    for (int r = 0; r < m; ++r) mat(r, j) = flat[base + r];
  }
  return rank_fq(fq, mat);
}

// Calls visit(matrix) for every full-rank reduced-row-echelon rows x cols
// matrix whose free entries range over `alphabet`.
template <class F, class Visit>
void enumerate_rref(const F& field, int rows, int cols, std::span<const typename F::Element> alphabet, Visit visit) {
  using Element = typename F::Element;
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative RREF dimension");
  if (rows > cols) return;
  std::vector<int> pivots(rows);
  for (int i = 0; i < rows; ++i) pivots[i] = i;
  while (true) {
    Matrix<Element> mat(rows, cols, field.zero());
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rows; ++r) {
      mat(r, pivots[r]) = field.one();
      is_pivot[pivots[r]] = true;
    }
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < rows; ++r)
      for (int c = pivots[r] + 1; c < cols; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
    std::vector<std::size_t> digit(free_cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_cells.size(); ++i) mat(free_cells[i].first, free_cells[i].second) = alphabet[digit[i]];
      visit(static_cast<const Matrix<Element>&>(mat));
      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == alphabet.size()) digit[pos++] = 0;
      if (pos == digit.size()) break;
    }
    // next pivot combination in lexicographic order
    int i = rows - 1;
    while (i >= 0 && pivots[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < rows; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

void check_msrd_inputs(const CodeParams& p, int k) {
  if (k < 1 || k > p.n()) throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, n]");
  if (k > p.max_weight()) throw std::invalid_argument("k exceeds ell * mu; MSRD is unattainable");
  if (p.n() - k + 1 > p.max_weight()) throw std::invalid_argument("n - k + 1 exceeds ell * mu; MSRD is unattainable");
}

}  // namespace

std::vector<int> weight_decomposition(const ExtField& field, std::span<const ExtElement> x, int ell, int eta) {
  if (ell < 1 || eta < 1 || static_cast<long>(x.size()) != static_cast<long>(ell) * eta)
    throw std::invalid_argument("vector length must equal ell * eta");
  const int m = field.degree();
  std::vector<int> ranks(ell);
  for (int i = 0; i < ell; ++i) {
    MatrixFq mat(m, eta);
    for (int j = 0; j < eta; ++j) {
      const auto& coords = field.expand(x[static_cast<std::size_t>(i) * eta + j]);
      if (static_cast<int>(coords.size()) != m) throw std::invalid_argument("element does not belong to the field");
      for (int r = 0; r < m; ++r) mat(r, j) = coords[r];
    }
    ranks[i] = rank_fq(field.base(), mat);
  }
  return ranks;
}

int sum_rank_weight(const ExtField& field, std::span<const ExtElement> x, int ell, int eta) {
  int total = 0;
  for (int r : weight_decomposition(field, x, ell, eta)) total += r;
  return total;
}

ExtField make_ext_field(const CodeParams& params) { return ExtField::make(Field::of_order(static_cast<std::uint64_t>(params.q)), params.m); }

LinearCode random_systematic_code(const ExtField& field, const CodeParams& params, int k, std::mt19937_64& rng) {
  const int n = params.n();
  if (k < 1 || k >= n) throw std::invalid_argument("systematic code needs 1 <= k < n");
  if (field.degree() != params.m || field.base().order() != static_cast<std::uint64_t>(params.q))
    throw std::invalid_argument("field does not match the code parameters");
  std::uniform_int_distribution<std::uint32_t> coord(0, static_cast<std::uint32_t>(params.q - 1));
  LinearCode code{params, k, MatrixExt(k, n, field.zero())};
  for (int i = 0; i < k; ++i) code.generator(i, i) = field.one();
  for (int i = 0; i < k; ++i) {
    for (int j = k; j < n; ++j) {
      auto& e = code.generator(i, j);
      for (auto& c : e.coords) c = coord(rng);
    }
  }
  return code;
}

int min_distance_bruteforce(const ExtField& field, const LinearCode& code, std::uint64_t cap) {
  const auto& p = code.params;
  const int n = p.n(), k = code.k, m = field.degree();
  if (code.generator.rows() != k || code.generator.cols() != n) throw std::invalid_argument("generator shape does not match k x n");
  const auto order = field.order();
  std::uint64_t messages = 1;
  for (int i = 0; i < k; ++i) {
    if (!order || messages > cap / *order) throw ResourceLimitError("q^{mk} exceeds the enumeration cap");
    messages *= *order;
  }
  if (messages > cap) throw ResourceLimitError("q^{mk} exceeds the enumeration cap");

  // Enumerate messages as F_p-combinations of the basis y^l a^j e_i, so each
  // odometer step adds one precomputed codeword.
  const Field& fq = field.base();
  const std::uint32_t prime = fq.characteristic();
  const int e = fq.degree();
  std::vector<std::vector<Field::Element>> basis;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) {
      Field::Element y_pow = 1;
      for (int l = 0; l < e; ++l) {
        auto scalar = field.zero();
        scalar.coords[j] = y_pow;
        std::vector<Field::Element> flat(static_cast<std::size_t>(n) * m);
        for (int c = 0; c < n; ++c) {
          const auto prod = field.mul(scalar, code.generator(i, c));
          std::copy(prod.coords.begin(), prod.coords.end(), flat.begin() + static_cast<std::ptrdiff_t>(c) * m);
        }
        basis.push_back(std::move(flat));
        y_pow *= prime;
      }
    }
  }
  std::vector<std::uint32_t> digit(basis.size(), 0);
  std::vector<Field::Element> word(static_cast<std::size_t>(n) * m, 0);
  int best = p.max_weight() + 1;
  for (std::uint64_t step = 1; step < messages; ++step) {
    std::size_t pos = 0;
    while (true) {
      const auto& b = basis[pos];
      for (std::size_t i = 0; i < word.size(); ++i) word[i] = fq.add(word[i], b[i]);
      if (++digit[pos] < prime) break;
      digit[pos++] = 0;
    }
    int w = 0;
    for (int blk = 0; blk < p.ell && w < best; ++blk) w += block_rank(fq, word, m, p.eta, blk);
    best = std::min(best, w);
  }
  return best;
}

MatrixFq EchelonBlockMatrix::assemble(int eta) const {
  MatrixFq out(total, static_cast<int>(blocks.size()) * eta, 0);
  int row = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < eta; ++c) out(row + r, static_cast<int>(i) * eta + c) = b(r, c);
    row += b.rows();
  }
  return out;
}

std::vector<MatrixFq> full_rank_rref(const Field& field, int rows, int cols) {
  std::vector<Field::Element> alphabet(field.order());
  for (std::uint32_t i = 0; i < field.order(); ++i) alphabet[i] = i;
  std::vector<MatrixFq> out;
  enumerate_rref(field, rows, cols, std::span<const Field::Element>(alphabet), [&](const MatrixFq& m) { out.push_back(m); });
  return out;
}

void for_each_rref_generator(const ExtField& field, int k, int n, const std::function<void(const MatrixExt&)>& visit) {
  const auto order = field.order();
  if (!order || *order > (std::uint64_t{1} << 24)) throw ResourceLimitError("extension field too large to enumerate");
  std::vector<ExtElement> alphabet;
  alphabet.reserve(*order);
  for (std::uint64_t i = 0; i < *order; ++i) alphabet.push_back(field.from_index(i));
  enumerate_rref(field, k, n, std::span<const ExtElement>(alphabet), visit);
}

BigCount echelon_block_count(const CodeParams& p, int t) {
  if (t < 0) throw std::invalid_argument("negative total rank");
  BigCount total = 0;
  if (static_cast<long>(t) > static_cast<long>(p.ell) * p.eta) return total;
  PartitionGenerator gen(t, p.ell, std::min(p.eta, t));
  while (auto parts = gen.next()) {
    BigCount prod = 1;
    for (int ti : *parts) prod *= q_binomial(p.eta, ti, p.q);
    total += prod;
  }
  return total;
}

void for_each_echelon_block_matrix(const Field& field, const CodeParams& p, int t,
                                   const std::function<bool(const EchelonBlockMatrix&)>& visit) {
  if (t < 0) throw std::invalid_argument("negative total rank");
  if (field.order() != static_cast<std::uint64_t>(p.q)) throw std::invalid_argument("field does not match q");
  if (static_cast<long>(t) > static_cast<long>(p.ell) * p.eta) return;
  const int cap = std::min(p.eta, t);
  std::vector<std::vector<MatrixFq>> by_rank(cap + 1);
  for (int r = 0; r <= cap; ++r) by_rank[r] = full_rank_rref(field, r, p.eta);

  PartitionGenerator gen(t, p.ell, cap);
  EchelonBlockMatrix current;
  current.total = t;
  current.blocks.resize(p.ell);
  while (auto parts = gen.next()) {
    std::vector<std::size_t> choice(p.ell, 0);
    while (true) {
      for (int i = 0; i < p.ell; ++i) current.blocks[i] = by_rank[(*parts)[i]][choice[i]];
      if (!visit(current)) return;
      int pos = 0;
      while (pos < p.ell && ++choice[pos] == by_rank[(*parts)[pos]].size()) choice[pos++] = 0;
      if (pos == p.ell) break;
    }
  }
}

bool is_msrd(const ExtField& field, const LinearCode& code, std::uint64_t cap) {
  const auto& p = code.params;
  const int k = code.k, n = p.n();
  check_msrd_inputs(p, k);
  if (code.generator.rows() != k || code.generator.cols() != n) throw std::invalid_argument("generator shape does not match k x n");
  if (echelon_block_count(p, k) > BigCount(static_cast<unsigned long>(cap)))
    throw ResourceLimitError("|U_{ell,k}| exceeds the enumeration cap");

  const auto& g = code.generator;
  bool msrd = true;
  for_each_echelon_block_matrix(field.base(), p, k, [&](const EchelonBlockMatrix& ebm) {
    const MatrixFq u = ebm.assemble(p.eta);
    MatrixExt prod(k, k, field.zero());
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < n; ++j) {
        const auto s = u(r, j);
        if (s == 0) continue;
        for (int c = 0; c < k; ++c) prod(r, c) = field.add(prod(r, c), field.scale(s, g(c, j)));
      }
    }
    if (rank_ext(field, prod) < k) {
      msrd = false;
      return false;
    }
    return true;
  });
  return msrd;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32U)};
  return std::mt19937_64(seq);
}

CodePredicate msrd_predicate(const ExtField& field, std::uint64_t cap) {
  return [&field, cap](const LinearCode& c) { return is_msrd(field, c, cap); };
}

CodePredicate min_distance_predicate(const ExtField& field, int d, std::uint64_t cap) {
  return [&field, d, cap](const LinearCode& c) { return min_distance_bruteforce(field, c, cap) >= d; };
}

TrialResult monte_carlo(const ExtField& field, const CodeParams& params, int k, std::uint64_t trials, std::uint64_t seed,
                        const CodePredicate& predicate) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::uint64_t successes = 0;
  std::exception_ptr failure;
  const long count = static_cast<long>(trials);
#pragma omp parallel for reduction(+ : successes) schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    try {
      auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
      if (predicate(random_systematic_code(field, params, k, rng))) ++successes;
    } catch (...) {
#pragma omp critical(monte_carlo_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return TrialResult{trials, successes, static_cast<double>(successes) / static_cast<double>(trials), seed};
}

}  // namespace sumrank
