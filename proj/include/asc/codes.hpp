#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asc/finite_field.hpp"
#include "asc/subspace.hpp"

namespace asc {

/// A finite list of subspaces of a common ambient space.
///
/// Codewords are stored in construction order and are not deduplicated
/// here (a CP code with a vacuous distance bound may repeat lines); the
/// constructors that promise distinctness enforce it themselves.
class SubspaceCode {
 public:
  SubspaceCode(Index ambient_dim, Field field, std::vector<Subspace> codewords = {});

  Index ambient_dim() const noexcept { return ambient_dim_; }
  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  bool empty() const noexcept { return codewords_.empty(); }
  const std::vector<Subspace>& codewords() const noexcept { return codewords_; }
  const Subspace& operator[](std::size_t i) const { return codewords_.at(i); }

  /// Largest codeword dimension (0 for an empty code).
  Index max_dim() const noexcept;
  bool constant_dimension() const noexcept;

  const std::optional<double>& cached_min_distance() const noexcept { return min_distance_; }
  void cache_min_distance(double d) { min_distance_ = d; }

 private:
  Index ambient_dim_;
  Field field_;
  std::vector<Subspace> codewords_;
  std::optional<double> min_distance_;
};

/// [n, l, M, d_min] plus the normalized quantities lambda = l/n,
/// R = ln(M)/n (nats) and delta = d_min/(2l).
struct CodeParameters {
  Index n = 0;
  Index l = 0;
  std::size_t size = 0;
  double min_distance = 0.0;
  double normalized_weight = 0.0;
  double rate = 0.0;
  double normalized_distance = 0.0;
};

struct MinDistanceResult {
  double distance = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};

inline constexpr std::size_t kDefaultPairwiseCap = 10'000;
inline constexpr std::uint64_t kDefaultConstructionCap = 1'000'000;

/// Exact minimum over all unordered codeword pairs; caches the value in the
/// code. Throws CapExceeded when the code has more than `cap` codewords.
MinDistanceResult min_distance_exhaustive(SubspaceCode& code, std::size_t cap = kDefaultPairwiseCap);

/// Uses the cached minimum distance when present, otherwise computes it.
CodeParameters code_parameters(SubspaceCode& code, std::size_t cap = kDefaultPairwiseCap);

// ----- character-polynomial codes ------------------------------------------

/// Parameters of a CP code over GF(q): polynomials of degree <= k whose
/// monomials have degrees not divisible by p, evaluated through the
/// additive character chi_j at the q - 1 nonzero field elements (ordered
/// by integer encoding). Ambient dimension is n = q - 1.
struct CPCodeSpec {
  FieldPtr field;
  std::uint32_t k = 1;
  FiniteField::Elem character_index = 1;

  CPCodeSpec(FieldPtr f, std::uint32_t max_degree, FiniteField::Elem chi = 1);

  Index n() const noexcept { return static_cast<Index>(field->order()) - 1; }
  /// Nonzero field elements in evaluation order.
  std::vector<FiniteField::Elem> evaluation_points() const;
};

/// Degrees i in [1, k] with p not dividing i, ascending.
std::vector<std::uint32_t> cp_monomial_set(const CPCodeSpec& spec);

/// q^{|monomial set|}; saturates at UINT64_MAX.
std::uint64_t cp_code_size(const CPCodeSpec& spec);

/// Unit generator (1/sqrt n)(chi(f(alpha_1)), ..., chi(f(alpha_n))) for
/// f = sum_j coeffs[j] x^{monomials[j]}.
Eigen::VectorXcd cp_codeword_vector(const CPCodeSpec& spec, std::span<const FiniteField::Elem> coeffs);

/// All q^{ceil(k(p-1)/p)} codewords, indexed by the base-q number whose
/// digit j is the coefficient of the j-th monomial. Throws SizeOverflow
/// above `cap` codewords.
SubspaceCode cp_construct(const CPCodeSpec& spec, std::uint64_t cap = kDefaultConstructionCap);

/// 1 - ((k-1) sqrt(q) + 1)^2 / n^2 with n = q - 1; may be negative.
double cp_distance_bound(const CPCodeSpec& spec);
double cp_distance_bound(std::uint32_t q, std::uint32_t k);

/// Prime-field approximation 1 - q R^2 / (ln q)^2.
double cp_simplified_bound(std::uint32_t q, double rate);

/// Largest k < q whose distance bound reaches `delta_target`; 0 if none.
std::uint32_t cp_max_k_for_delta(std::uint32_t q, double delta_target);

// ----- other constructions ---------------------------------------------------

/// Maps each binary word b to the real line spanned by ((-1)^{b_i})/sqrt(n).
/// A word and its complement give the same line and are collapsed; the
/// first occurrence wins. Words may only contain '0' and '1'.
SubspaceCode binary_to_lines(const std::vector<std::string>& codebook);

inline constexpr int kDefaultEnsembleRetries = 64;

/// M independent uniform m-dimensional subspaces of L^n. A draw within
/// kTolEqual of an earlier codeword is redrawn; RetryExhausted after
/// `max_retries` consecutive rejections.
SubspaceCode random_ensemble_code(Index n, Index m, std::size_t count, Field field, Rng& rng,
                                  int max_retries = kDefaultEnsembleRetries);

/// Codeword-wise orthogonal complements.
SubspaceCode dual_code(const SubspaceCode& code);

/// Maps each complex m x n basis B to [[Re B, Im B], [-Im B, Re B]],
/// yielding a real code in G_{2m, 2n}.
SubspaceCode complex_to_real_double(const SubspaceCode& code);

}  // namespace asc
