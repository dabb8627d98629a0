#include "asc/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "asc/parallel.hpp"

namespace asc {

SubspaceCode::SubspaceCode(Index ambient_dim, Field field, std::vector<Subspace> codewords)
    : ambient_dim_(ambient_dim), field_(field), codewords_(std::move(codewords)) {
  for (const auto& c : codewords_)
    if (c.ambient_dim() != ambient_dim_) throw DimensionMismatch("codeword ambient dimension differs from the code's");
}

Index SubspaceCode::max_dim() const noexcept {
  Index l = 0;
  for (const auto& c : codewords_) l = std::max(l, c.dim());
  return l;
}

bool SubspaceCode::constant_dimension() const noexcept {
  for (const auto& c : codewords_)
    if (c.dim() != codewords_.front().dim()) return false;
  return true;
}

MinDistanceResult min_distance_exhaustive(SubspaceCode& code, std::size_t cap) {
  const std::size_t m = code.size();
  if (m > cap) throw CapExceeded("code has " + std::to_string(m) + " codewords, pairwise cap is " + std::to_string(cap));
  if (m < 2) throw InvalidArgument("minimum distance needs at least two codewords");

  std::vector<Matrix> proj;
  proj.reserve(m);
  for (const auto& c : code.codewords()) proj.push_back(projection_of(c).matrix);

  MinDistanceResult best{std::numeric_limits<double>::infinity(), 0, 0};
  std::mutex guard;
  parallel_blocks(
      m,
      [&](std::size_t begin, std::size_t end) {
        MinDistanceResult local{std::numeric_limits<double>::infinity(), 0, 0};
        for (std::size_t i = begin; i < end; ++i)
          for (std::size_t j = i + 1; j < m; ++j) {
            const double d = (proj[i] - proj[j]).squaredNorm();
            if (d < local.distance) local = {d, i, j};
          }
        std::lock_guard lock(guard);
        // Exact min with lexicographic tie-break keeps the result
        // independent of the block split.
        if (local.distance < best.distance ||
            (local.distance == best.distance &&
             std::pair(local.first, local.second) < std::pair(best.first, best.second)))
          best = local;
      },
      16);
  code.cache_min_distance(best.distance);
  return best;
}

CodeParameters code_parameters(SubspaceCode& code, std::size_t cap) {
  if (code.empty()) throw EmptyCode("code has no codewords");
  double dmin = 0.0;
  if (code.cached_min_distance()) {
    dmin = *code.cached_min_distance();
  } else {
    dmin = min_distance_exhaustive(code, cap).distance;
  }
  CodeParameters p;
  p.n = code.ambient_dim();
  p.l = code.max_dim();
  p.size = code.size();
  p.min_distance = dmin;
  p.normalized_weight = p.n > 0 ? static_cast<double>(p.l) / static_cast<double>(p.n) : 0.0;
  p.rate = p.n > 0 ? std::log(static_cast<double>(p.size)) / static_cast<double>(p.n) : 0.0;
  p.normalized_distance = p.l > 0 ? dmin / (2.0 * static_cast<double>(p.l)) : 0.0;
  return p;
}

// ----- CP codes ---------------------------------------------------------------

CPCodeSpec::CPCodeSpec(FieldPtr f, std::uint32_t max_degree, FiniteField::Elem chi)
    : field(std::move(f)), k(max_degree), character_index(chi) {
  if (!field) throw InvalidArgument("CP code needs a field");
  if (k < 1 || k >= field->order()) throw InvalidArgument("CP code needs 1 <= k < q");
  if (character_index == 0) throw TrivialCharacter("CP code needs a nontrivial character");
  if (character_index >= field->order()) throw InvalidArgument("character index outside the field");
}

std::vector<FiniteField::Elem> CPCodeSpec::evaluation_points() const {
  std::vector<FiniteField::Elem> pts;
  pts.reserve(field->order() - 1);
  for (FiniteField::Elem a = 1; a < field->order(); ++a) pts.push_back(a);
  return pts;
}

std::vector<std::uint32_t> cp_monomial_set(const CPCodeSpec& spec) {
  std::vector<std::uint32_t> out;
  const std::uint32_t p = spec.field->characteristic();
  for (std::uint32_t i = 1; i <= spec.k; ++i)
    if (i % p != 0) out.push_back(i);
  return out;
}

std::uint64_t cp_code_size(const CPCodeSpec& spec) {
  const std::size_t digits = cp_monomial_set(spec).size();
  const std::uint64_t q = spec.field->order();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    size *= q;
  }
  return size;
}

namespace {

// powers[j][i] = alpha_i^{monomials[j]}
std::vector<std::vector<FiniteField::Elem>> monomial_table(const CPCodeSpec& spec,
                                                           const std::vector<std::uint32_t>& monomials) {
  const auto points = spec.evaluation_points();
  std::vector<std::vector<FiniteField::Elem>> table(monomials.size());
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    table[j].reserve(points.size());
    for (auto a : points) table[j].push_back(spec.field->pow(a, monomials[j]));
  }
  return table;
}

Eigen::VectorXcd evaluate(const CPCodeSpec& spec, const std::vector<std::vector<FiniteField::Elem>>& table,
                          std::span<const FiniteField::Elem> coeffs) {
  const FiniteField& f = *spec.field;
  const Index n = spec.n();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) {
    FiniteField::Elem acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j]) acc = f.add(acc, f.mul(coeffs[j], table[j][static_cast<std::size_t>(i)]));
    v(i) = scale * f.character(spec.character_index, acc);
  }
  return v;
}

}  // namespace

Eigen::VectorXcd cp_codeword_vector(const CPCodeSpec& spec, std::span<const FiniteField::Elem> coeffs) {
  const auto monomials = cp_monomial_set(spec);
  if (coeffs.size() != monomials.size()) throw InvalidArgument("one coefficient per admissible monomial expected");
  for (auto c : coeffs)
    if (c >= spec.field->order()) throw InvalidArgument("coefficient outside the field");
  return evaluate(spec, monomial_table(spec, monomials), coeffs);
}

SubspaceCode cp_construct(const CPCodeSpec& spec, std::uint64_t cap) {
  const std::uint64_t size = cp_code_size(spec);
  if (size > cap)
    throw SizeOverflow("CP code would have " + std::to_string(size) + " codewords, cap is " + std::to_string(cap));
  const auto monomials = cp_monomial_set(spec);
  const auto table = monomial_table(spec, monomials);
  const std::uint32_t q = spec.field->order();

  std::vector<Subspace> words;
  words.reserve(static_cast<std::size_t>(size));
  std::vector<FiniteField::Elem> coeffs(monomials.size(), 0);
  for (std::uint64_t index = 0; index < size; ++index) {
    words.push_back(unit_line(evaluate(spec, table, coeffs), Field::Complex));
    for (auto& digit : coeffs) {
      if (++digit < q) break;
      digit = 0;
    }
  }
  return SubspaceCode(spec.n(), Field::Complex, std::move(words));
}

double cp_distance_bound(std::uint32_t q, std::uint32_t k) {
  const double n = static_cast<double>(q) - 1.0;
  const double inner = (static_cast<double>(k) - 1.0) * std::sqrt(static_cast<double>(q)) + 1.0;
  return 1.0 - inner * inner / (n * n);
}

double cp_distance_bound(const CPCodeSpec& spec) { return cp_distance_bound(spec.field->order(), spec.k); }

double cp_simplified_bound(std::uint32_t q, double rate) {
  const double lq = std::log(static_cast<double>(q));
  return 1.0 - static_cast<double>(q) * rate * rate / (lq * lq);
}

std::uint32_t cp_max_k_for_delta(std::uint32_t q, double delta_target) {
  std::uint32_t best = 0;
  for (std::uint32_t k = 1; k < q; ++k)
    if (cp_distance_bound(q, k) >= delta_target) best = k;
  return best;
}

// ----- binary line packings -----------------------------------------------------

SubspaceCode binary_to_lines(const std::vector<std::string>& codebook) {
  if (codebook.empty()) return SubspaceCode(0, Field::Real);
  const std::size_t n = codebook.front().size();
  if (n == 0) throw InvalidArgument("binary words must be nonempty");
  std::vector<std::string> seen;
  std::vector<Subspace> lines;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (const auto& word : codebook) {
    if (word.size() != n) throw LengthMismatch("all binary words must have the same length");
    std::string canonical = word;
    for (char c : word)
      if (c != '0' && c != '1') throw InvalidArgument("binary words may only contain '0' and '1'");
    if (canonical.front() == '1')
      for (auto& c : canonical) c = (c == '0') ? '1' : '0';
    if (std::find(seen.begin(), seen.end(), canonical) != seen.end()) continue;
    seen.push_back(canonical);
    Eigen::VectorXcd v(static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Index>(i)) = word[i] == '0' ? scale : -scale;
    lines.push_back(unit_line(v, Field::Real));
  }
  return SubspaceCode(static_cast<Index>(n), Field::Real, std::move(lines));
}

// ----- random ensembles, duals, doubling ------------------------------------------

SubspaceCode random_ensemble_code(Index n, Index m, std::size_t count, Field field, Rng& rng, int max_retries) {
  if (count < 2) throw InvalidArgument("random ensemble needs at least two codewords");
  if (m < 0 || m > n) throw InvalidArgument("random ensemble needs 0 <= m <= n");
  std::vector<Subspace> words;
  words.reserve(count);
  while (words.size() < count) {
    int rejected = 0;
    for (;;) {
      Subspace s = random_subspace(n, m, field, rng);
      bool duplicate = false;
      for (const auto& w : words)
        if (distance(w, s) < kTolEqual) {
          duplicate = true;
          break;
        }
      if (!duplicate) {
        words.push_back(std::move(s));
        break;
      }
      if (++rejected >= max_retries) throw RetryExhausted("random ensemble kept drawing duplicate codewords");
    }
  }
  return SubspaceCode(n, field, std::move(words));
}

SubspaceCode dual_code(const SubspaceCode& code) {
  std::vector<Subspace> words;
  words.reserve(code.size());
  for (const auto& c : code.codewords()) words.push_back(complement(c));
  return SubspaceCode(code.ambient_dim(), code.field(), std::move(words));
}

SubspaceCode complex_to_real_double(const SubspaceCode& code) {
  if (!code.constant_dimension()) throw InvalidArgument("real doubling needs a constant-dimension code");
  const Index n = code.ambient_dim();
  std::vector<Subspace> words;
  words.reserve(code.size());
  for (const auto& c : code.codewords()) {
    const RealMatrix re = c.basis().real();
    const RealMatrix im = c.basis().imag();
    const Index m = c.dim();
    RealMatrix block(2 * m, 2 * n);
    block << re, im, -im, re;
    words.push_back(Subspace::from_orthonormal(block.cast<Complex>(), Field::Real));
  }
  return SubspaceCode(2 * n, Field::Real, std::move(words));
}

}  // namespace asc
