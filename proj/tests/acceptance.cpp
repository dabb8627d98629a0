// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "asc/bounds.hpp"
#include "asc/channel.hpp"
#include "asc/codes.hpp"
#include "asc/decoder.hpp"
#include "asc/finite_field.hpp"
#include "cli.hpp"

using namespace asc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Draw (rho, t) uniformly among pairs that satisfy the noiseless guarantee
// and fit the ambient space.
std::pair<Index, Index> admissible_pair(double dmin, Index m, Index n, Rng& rng) {
  std::vector<std::pair<Index, Index>> ok;
  for (Index rho = 0; rho <= m; ++rho)
    for (Index t = 0; m - rho + t <= n && t <= n; ++t)
      if (guarantee_noiseless(dmin, static_cast<double>(rho), static_cast<double>(t)) && rho + t <= m + n)
        ok.emplace_back(rho, t);
  return ok[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(ok.size()) - 1))];
}

}  // namespace

int main() {
  criterion(1, "CP code sizes equal q^ceil(k(p-1)/p)", 10.0, [] {
    Outcome o;
    int checked = 0, built = 0;
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
      const auto f = FiniteField::of_order(q);
      for (std::uint32_t k = 1; k < q; ++k) {
        const std::uint32_t e = (k * (q - 1) + q - 1) / q;
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i < e; ++i) expected *= q;
        const CPCodeSpec spec(f, k);
        ++checked;
        if (cp_code_size(spec) != expected) {
          o.ok = false;
          o.detail += "size formula mismatch q=" + std::to_string(q) + " k=" + std::to_string(k) + "; ";
        }
        if (expected <= kDefaultConstructionCap) {
          ++built;
          if (cp_construct(spec).size() != expected) {
            o.ok = false;
            o.detail += "construct count mismatch q=" + std::to_string(q) + " k=" + std::to_string(k) + "; ";
          }
        } else {
          try {
            cp_construct(spec);
            o.ok = false;
            o.detail += "cap not enforced q=" + std::to_string(q) + "; ";
          } catch (const SizeOverflow&) {
          }
        }
      }
    }
    const bool pinned = cp_construct(CPCodeSpec(FiniteField::of_order(5), 2)).size() == 25 &&
                        cp_construct(CPCodeSpec(FiniteField::of_order(7), 3)).size() == 343;
    o.ok = o.ok && pinned;
    o.detail += std::to_string(checked) + " (q,k) pairs, " + std::to_string(built) +
                " materialized, larger ones checked through the size formula and the cap";
    return o;
  });

  criterion(2, "CP exhaustive minimum distance meets the distance bound", 60.0, [] {
    Outcome o;
    for (auto [q, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {7, 2}, {7, 3}, {11, 2}, {13, 2}}) {
      const CPCodeSpec spec(FiniteField::of_order(q), k);
      auto code = cp_construct(spec);
      const double delta = code_parameters(code).normalized_distance;
      const double bound = cp_distance_bound(spec);
      o.detail += "(" + std::to_string(q) + "," + std::to_string(k) + ") delta=" + fmt("%.5f", delta) +
                  " bound=" + fmt("%.5f", bound) + "; ";
      if (delta < bound - 1e-9) o.ok = false;
    }
    return o;
  });

  criterion(3, "Weil bound over every monic f, d in {2,3,4}, q in {5,7,9,11,13}", 120.0, [] {
    Outcome o;
    std::uint64_t sums = 0;
    double worst = 0.0;
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
      const auto f = FiniteField::of_order(q);
      for (int d = 2; d <= 4; ++d) {
        if (std::gcd(static_cast<std::uint32_t>(d), q) != 1) continue;
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        std::vector<FiniteField::Elem> coeffs(static_cast<std::size_t>(d) + 1, 0);
        coeffs.back() = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          std::uint64_t v = idx;
          for (int i = 0; i < d; ++i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(v % q);
            v /= q;
          }
          const FieldPolynomial poly(f, coeffs);
          for (FiniteField::Elem j = 1; j < q; ++j) {
            const double mag = std::abs(weil_sum(poly, FieldElement(f, j)));
            const double bound = weil_bound(d, q);
            worst = std::max(worst, mag / bound);
            ++sums;
            if (mag > bound + 1e-9) o.ok = false;
          }
        }
      }
    }
    o.detail = std::to_string(sums) + " character sums, max |sum|/bound = " + fmt("%.6f", worst);
    return o;
  });

  criterion(4, "noiseless decoding succeeds whenever 2(rho+t) < d_min", 120.0, [] {
    Outcome o;
    Rng code_rng(20240601);
    std::vector<std::pair<std::string, SubspaceCode>> codes;
    codes.emplace_back("CP(7,2)", cp_construct(CPCodeSpec(FiniteField::of_order(7), 2)));
    codes.emplace_back("random(n=12,m=3,M=50)", random_ensemble_code(12, 3, 50, Field::Complex, code_rng));
    for (auto& [name, code] : codes) {
      const double dmin = min_distance_exhaustive(code).distance;
      const NearestDecoder dec(code);
      const Index m = code.max_dim();
      const Index n = code.ambient_dim();
      int success = 0, nontrivial = 0;
      constexpr int kTrials = 10'000;
      for (int trial = 0; trial < kTrials; ++trial) {
        Rng rng = Rng::for_trial(7, static_cast<std::uint64_t>(trial));
        const auto tx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(code.size()) - 1));
        const auto [rho, t] = admissible_pair(dmin, m, n, rng);
        nontrivial += (rho + t) > 0;
        const auto out = apply_operator_channel(code[tx], {m - rho, t}, rng);
        success += dec(out.received).codeword_index == tx;
      }
      o.detail += name + ": d_min=" + fmt("%.4f", dmin) + " success " + std::to_string(success) + "/" +
                  std::to_string(kTrials) + " (" + std::to_string(nontrivial) + " with rho+t>0); ";
      // CP(7,2) has d_min < 2, so only rho = t = 0 is covered by the guarantee.
      if (success != kTrials) o.ok = false;
    }
    return o;
  });

  criterion(5, "noisy decoding under the noisy guarantee + per-trial distance bound", 180.0, [] {
    Outcome o;
    int rd_total = 0, rot_total = 0;
    Rng code_rng(99);
    std::vector<std::pair<std::string, SubspaceCode>> codes;
    codes.emplace_back("random(n=12,m=3,M=50)", random_ensemble_code(12, 3, 50, Field::Complex, code_rng));
    codes.emplace_back("random(n=24,m=6,M=20)", random_ensemble_code(24, 6, 20, Field::Complex, code_rng));
    for (auto& [name, code] : codes) {
      const double dmin = min_distance_exhaustive(code).distance;
      const NearestDecoder dec(code);
      const Index m = code.max_dim();
      const Index n = code.ambient_dim();
      int success = 0, with_rd = 0, with_rot = 0, bound_ok = 0;
      constexpr int kTrials = 10'000;
      for (int trial = 0; trial < kTrials; ++trial) {
        Rng rng = Rng::for_trial(11, static_cast<std::uint64_t>(trial));
        const auto tx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(code.size()) - 1));
        Index rho = 0, t = 0, rd = 0;
        double delta = 0.0;
        for (;;) {
          rho = rng.uniform_int(0, m);
          t = rng.uniform_int(0, 2);
          rd = rng.uniform_int(0, 2);
          delta = rng.uniform() * dmin / 4.0;
          if (m - rho + t + rd <= n &&
              guarantee_noisy(dmin, static_cast<double>(rho), static_cast<double>(t), delta, static_cast<double>(rd)))
            break;
        }
        with_rd += rd > 0;
        with_rot += delta > 0.0;
        const auto out = apply_noisy_operator_channel(code[tx], {{m - rho, t}, delta, rd}, rng);
        success += dec(out.received).codeword_index == tx;
        const double s = std::sqrt(static_cast<double>(out.rho + out.t) + delta) + std::sqrt(static_cast<double>(rd));
        bound_ok += distance(code[tx], out.received) <= s * s + 1e-9;
      }
      o.detail += name + ": d_min=" + fmt("%.4f", dmin) + " success " + std::to_string(success) + "/" +
                  std::to_string(kTrials) + ", distance bound held " + std::to_string(bound_ok) + "/" +
                  std::to_string(kTrials) + ", r_d>0 in " + std::to_string(with_rd) + "; ";
      if (success != kTrials || bound_ok != kTrials) o.ok = false;
      rd_total += with_rd;
      rot_total += with_rot;
    }
    // r_d >= 1 needs d_min > 4, so only the wider code exercises it.
    if (rd_total == 0 || rot_total == 0) {
      o.ok = false;
      o.detail += "sampling never exercised r_d > 0 or a rotation";
    }
    return o;
  });

  criterion(6, "distance identity suite at n in {6,12}", 30.0, [] {
    Outcome o;
    int bad[6] = {0, 0, 0, 0, 0, 0};
    Rng rng(606);
    for (Index n : {6, 12}) {
      for (int trial = 0; trial < 1000; ++trial) {
        const Field f = trial % 2 ? Field::Real : Field::Complex;
        const Index m = rng.uniform_int(1, n - 1);
        const Subspace u = random_subspace(n, m, f, rng);
        const Subspace v = random_subspace(n, rng.uniform_int(0, n), f, rng);
        const Subspace w = random_subspace(n, rng.uniform_int(0, n), f, rng);
        const Matrix q = random_unitary(n, f, rng);
        bad[0] += std::abs(distance(transform(u, q), transform(v, q)) - distance(u, v)) > 1e-9;
        bad[1] += std::abs(distance(complement(u), complement(v)) - distance(u, v)) > 1e-9;
        const Subspace t = random_error_subspace(u, rng.uniform_int(0, n - m), rng);
        bad[2] += std::abs(distance(u, direct_sum(u, t)) - static_cast<double>(t.dim())) > 1e-9;
        bad[3] += distance(u, w) > 2.0 * (distance(u, v) + distance(v, w)) + 1e-9;
        const Subspace nested = erase(u, rng.uniform_int(0, m), rng);
        bad[4] += distance(u, w) > distance(u, nested) + distance(nested, w) + 1e-9;
        const Matrix b = gaussian_matrix(rng.uniform_int(1, n), rng.uniform_int(1, n), f, rng);
        bad[5] += (b.adjoint() * b).norm() > b.squaredNorm() + 1e-9;
      }
    }
    const char* names[6] = {"rotation", "duality", "direct-sum", "2-relaxed triangle", "nested triangle", "|B^H B|<=|B|^2"};
    for (int i = 0; i < 6; ++i) {
      o.detail += std::string(names[i]) + " violations " + std::to_string(bad[i]) + (i < 5 ? ", " : "");
      if (bad[i]) o.ok = false;
    }
    return o;
  });

  criterion(7, "Sphere embeddings |P-(m/n)I|^2 = m(n-m)/n and |P-I/2|^2 = n/4", 10.0, [] {
    Outcome o;
    Rng rng(707);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Index n = rng.uniform_int(2, 16);
      const Index m = rng.uniform_int(0, n);
      const Subspace v = random_subspace(n, m, trial % 2 ? Field::Real : Field::Complex, rng);
      const Matrix p = projection_of(v).matrix;
      const double nn = static_cast<double>(n), mm = static_cast<double>(m);
      const Matrix id = Matrix::Identity(n, n);
      worst = std::max(worst, std::abs((p - (mm / nn) * id).squaredNorm() - mm * (nn - mm) / nn));
      worst = std::max(worst, std::abs((p - 0.5 * id).squaredNorm() - nn / 4.0));
    }
    o.ok = worst <= 1e-9;
    o.detail = "max deviation " + fmt("%.3e", worst);
    return o;
  });

  criterion(8, "Perturbation bounds (full rank, rank deficient) and RQ reconstruction", 60.0, [] {
    Outcome o;
    Rng rng(808);
    int full = 0, full_bad = 0, def = 0, def_bad = 0, rq_bad = 0;
    double full_ratio = 0.0, def_ratio = 0.0;
    for (auto [l, n] : std::vector<std::pair<Index, Index>>{{3, 8}, {5, 10}}) {
      for (int trial = 0; trial < 1000;) {
        const Field f = trial % 2 ? Field::Real : Field::Complex;
        const Matrix a = gaussian_matrix(l, n, f, rng);
        const Matrix noise = std::pow(10.0, -4.0 + 3.5 * rng.uniform()) * gaussian_matrix(l, n, f, rng);
        PerturbationBound b;
        try {
          b = perturbation_bound(a, noise);
        } catch (const PreconditionViolated&) {
          continue;
        }
        ++trial;
        ++full;
        const double d = distance(orthonormalize(a, f), orthonormalize(a + noise, f));
        if (d > b.bound) ++full_bad;
        if (b.bound > 0) full_ratio = std::max(full_ratio, d / b.bound);
        const auto rq = rq_factorize(a);
        if ((a - rq.r * rq.q).norm() > 1e-9 * a.norm()) ++rq_bad;
      }
      for (int trial = 0; trial < 1000;) {
        const Field f = trial % 2 ? Field::Real : Field::Complex;
        const Index rank = rng.uniform_int(1, l - 1);
        const Matrix a = gaussian_matrix(l, rank, f, rng) * gaussian_matrix(rank, n, f, rng);
        const Matrix noise = std::pow(10.0, -5.0 + 3.0 * rng.uniform()) * gaussian_matrix(l, n, f, rng);
        GeneralPerturbationBound g;
        try {
          g = general_perturbation_bound(a, noise);
        } catch (const PreconditionViolated&) {
          continue;
        }
        ++trial;
        ++def;
        if (g.r_d != l - rank) ++def_bad;
        const double d = distance(orthonormalize(a, f), orthonormalize(a + noise, f));
        if (d > g.total) ++def_bad;
        def_ratio = std::max(def_ratio, d / g.total);
      }
    }
    o.ok = full_bad == 0 && def_bad == 0 && rq_bad == 0;
    o.detail = "full rank " + std::to_string(full - full_bad) + "/" + std::to_string(full) + " (max d/bound " +
               fmt("%.3f", full_ratio) + "), rank deficient " + std::to_string(def - def_bad) + "/" +
               std::to_string(def) + " (max d/bound " + fmt("%.3f", def_ratio) + "), RQ failures " +
               std::to_string(rq_bad);
    return o;
  });

  criterion(9, "Bound curves: Barg ordering, Zyablov vs grid oracle, Blokh-Zyablov above Zyablov", 30.0, [] {
    Outcome o;
    int barg_bad = 0;
    for (int m = 1; m <= 3; ++m)
      for (int b = 1; b <= 2; ++b)
        for (int i = 1; i <= 1000; ++i) {
          const double d = i / 1000.0;
          barg_bad += !(barg_lower(m, d, b) < barg_upper(m, d, b));
        }
    double worst_z = 0.0;
    for (int i = 1; i <= 19; ++i) {
      const double r = i / 20.0;
      double best = 0.0;
      constexpr int kGrid = 100'000;
      for (int j = 0; j <= kGrid; ++j) {
        const double x = r + (1.0 - r) * j / kGrid;
        best = std::max(best, gv_binary_delta(x) * (1.0 - r / x));
      }
      worst_z = std::max(worst_z, std::abs(zyablov_delta(r) - best));
    }
    int bz_bad = 0;
    for (int i = 1; i <= 49; ++i) {
      const double d = i / 100.0;
      bz_bad += !(blokh_zyablov_rate(d) > zyablov_rate(d));
    }
    o.ok = barg_bad == 0 && worst_z <= 1e-6 && bz_bad == 0;
    o.detail = "Barg order violations " + std::to_string(barg_bad) + ", max |zyablov - grid| " + fmt("%.2e", worst_z) +
               ", BZ <= Zyablov at " + std::to_string(bz_bad) + " of 49 grid points";
    return o;
  });

  criterion(10, "CP size table at normalized distance 1/2", 10.0, [] {
    Outcome o;
    const std::string csv = cli::figure3(cli::json::object());
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    double prev = -1.0;
    int rows = 0;
    while (std::getline(in, line)) {
      int e;
      unsigned long n, p, k;
      double ln_size;
      if (std::sscanf(line.c_str(), "%d,%lu,%lu,%lu,%lf", &e, &n, &p, &k, &ln_size) != 5) {
        o.ok = false;
        o.detail += "unparsable row; ";
        continue;
      }
      ++rows;
      std::uint64_t expect_p = (1ULL << (e - 1)) - 1;
      while (!trial_division_prime(expect_p)) --expect_p;
      const double bound = 1.0 - std::pow((static_cast<double>(k) - 1.0) * std::sqrt(static_cast<double>(p)) + 1.0, 2) /
                                     std::pow(static_cast<double>(p) - 1.0, 2);
      const double next = 1.0 - std::pow(static_cast<double>(k) * std::sqrt(static_cast<double>(p)) + 1.0, 2) /
                                    std::pow(static_cast<double>(p) - 1.0, 2);
      const bool row_ok = p == expect_p && n == 2 * p && k >= 1 && bound >= 0.5 && next < 0.5 &&
                          std::abs(ln_size - static_cast<double>(k) * std::log(static_cast<double>(p))) < 1e-9 &&
                          ln_size > prev;
      if (!row_ok) {
        o.ok = false;
        o.detail += "row for exponent " + std::to_string(e) + " fails; ";
      }
      o.detail += std::to_string(e) + ":(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ") ";
      prev = ln_size;
    }
    if (rows != 8) o.ok = false;
    return o;
  });

  criterion(11, "simulate output is byte-identical for a fixed config and seed", 60.0, [] {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    const std::vector<std::string> configs = {
        R"({"code":{"type":"cp","q":7,"k":2},"channel":{"mode":"operator","rho":1,"t":1},"trials":300})",
        R"({"code":{"type":"random","n":12,"m":3,"size":50},"channel":{"mode":"noisy","rho":1,"t":1,"delta":0.2,"r_d":1},"trials":300})",
        R"({"code":{"type":"random","n":8,"m":2,"size":10,"beta":1},"channel":{"mode":"matrix","l":3,"t":1,"sigma":0.01},"trials":300})",
    };
    int idx = 0;
    for (const auto& text : configs) {
      const auto cfg = dir / ("asc_accept_cfg_" + std::to_string(idx) + ".json");
      std::ofstream(cfg, std::ios::binary) << text;
      std::vector<std::string> outputs;
      for (int run = 0; run < 2; ++run) {
        const auto out = dir / ("asc_accept_out_" + std::to_string(idx) + "_" + std::to_string(run) + ".csv");
        const std::string cfg_s = cfg.string(), out_s = out.string();
        const char* argv[] = {"asc", "simulate", "--config", cfg_s.c_str(), "--seed", "424242", "--out", out_s.c_str()};
        std::ostringstream sink, err;
        if (cli::run(8, argv, sink, err) != 0) {
          o.ok = false;
          o.detail += "run failed: " + err.str();
        }
        std::ifstream in(out, std::ios::binary);
        outputs.emplace_back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::filesystem::remove(out);
      }
      std::filesystem::remove(cfg);
      const bool same = outputs[0] == outputs[1] && !outputs[0].empty();
      o.detail += "config " + std::to_string(idx) + (same ? " identical" : " DIFFERS") + " (" +
                  std::to_string(outputs[0].size()) + " bytes); ";
      o.ok = o.ok && same;
      ++idx;
    }
    return o;
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
