#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "asc/bounds.hpp"
#include "asc/channel.hpp"
#include "asc/code_io.hpp"
#include "asc/decoder.hpp"
#include "asc/parallel.hpp"

namespace asc::cli {

namespace {

// Random ensembles draw from this stream; trials use indices below it.
constexpr std::uint64_t kCodeStream = std::uint64_t{1} << 63;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<std::uint64_t> seed_of(const json& config) {
  if (!config.contains("seed") || config["seed"].is_null()) return std::nullopt;
  return config["seed"].get<std::uint64_t>();
}

std::uint64_t require_seed(const json& config, std::string_view who) {
  auto s = seed_of(config);
  if (!s) throw CommandError(kExitConfig, std::string(who) + " needs a master seed (config \"seed\" or --seed)");
  return *s;
}

json read_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kExitConfig, "cannot read config " + path);
  try {
    json cfg = json::parse(in);
    if (!cfg.is_object()) throw CommandError(kExitConfig, "config must be a JSON object");
    return cfg;
  } catch (const json::exception& e) {
    throw CommandError(kExitConfig, std::string("config is not valid JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError(kExitConfig, "cannot write " + path);
  out << text;
}

}  // namespace

json effective_config(json config, const Overrides& overrides) {
  if (overrides.seed) config["seed"] = *overrides.seed;
  if (overrides.trials) config["trials"] = *overrides.trials;
  if (overrides.out) config["out"] = *overrides.out;
  return config;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string csv_header(std::string_view command, const json& config) {
  // The output path does not change the results, so it stays out of the hash.
  json hashed = config;
  hashed.erase("out");
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(hashed.dump())));
  const auto seed = seed_of(config);
  return "# asc-csv v1 command=" + std::string(command) + " config_hash=" + hex +
         " seed=" + (seed ? std::to_string(*seed) : std::string("none")) + "\n";
}

SubspaceCode build_code(const json& spec, std::optional<std::uint64_t> seed) {
  if (!spec.is_object()) throw CommandError(kExitConfig, "\"code\" must be an object");
  const std::string type = spec.at("type").get<std::string>();
  std::optional<SubspaceCode> code;
  if (type == "cp") {
    const auto q = spec.at("q").get<std::uint32_t>();
    const auto k = spec.at("k").get<std::uint32_t>();
    const auto chi = spec.value("chi", 1u);
    const auto cap = spec.value("cap", kDefaultConstructionCap);
    code = cp_construct(CPCodeSpec(FiniteField::of_order(q), k, chi), cap);
  } else if (type == "binary") {
    code = binary_to_lines(spec.at("words").get<std::vector<std::string>>());
  } else if (type == "random") {
    if (!seed) throw CommandError(kExitConfig, "random ensemble needs a master seed");
    const int b = spec.value("beta", 2);
    if (b != 1 && b != 2) throw CommandError(kExitConfig, "beta must be 1 or 2");
    Rng rng = Rng::for_trial(*seed, kCodeStream);
    code = random_ensemble_code(spec.at("n").get<Index>(), spec.at("m").get<Index>(),
                                spec.at("size").get<std::size_t>(), static_cast<Field>(b), rng);
  } else if (type == "file") {
    code = load_code(spec.at("path").get<std::string>());
  } else {
    throw CommandError(kExitConfig, "unknown code type \"" + type + "\"");
  }
  if (spec.value("dual", false)) code = dual_code(*code);
  if (spec.value("real_double", false)) code = complex_to_real_double(*code);
  return std::move(*code);
}

// ----- construct ----------------------------------------------------------------

ConstructResult construct(const json& config) {
  const json& spec = config.at("code");
  SubspaceCode code = build_code(spec, seed_of(config));
  const auto cap = config.value("pairwise_cap", kDefaultPairwiseCap);

  std::ostringstream os;
  os << csv_header("construct", config);
  os << "n,l,M,lambda,rate,d_min,delta,delta_bound\n";
  const double n = static_cast<double>(code.ambient_dim());
  const Index l = code.max_dim();
  os << code.ambient_dim() << ',' << l << ',' << code.size() << ',' << num(n > 0 ? l / n : 0.0) << ','
     << num(code.empty() || n == 0 ? 0.0 : std::log(static_cast<double>(code.size())) / n) << ',';
  if (code.size() >= 2 && code.size() <= cap) {
    const double dmin = min_distance_exhaustive(code, cap).distance;
    os << num(dmin) << ',' << num(l > 0 ? dmin / (2.0 * l) : 0.0);
  } else {
    os << ',';
  }
  os << ',';
  if (spec.at("type") == "cp" && !spec.value("dual", false) && !spec.value("real_double", false))
    os << num(cp_distance_bound(spec.at("q").get<std::uint32_t>(), spec.at("k").get<std::uint32_t>()));
  os << '\n';
  return {os.str(), code_to_json(code)};
}

// ----- simulate -------------------------------------------------------------------

namespace {

struct TrialRecord {
  std::string row;
  bool correct = false;
  bool guaranteed = false;
};

}  // namespace

std::string simulate(const json& config) {
  const std::uint64_t seed = require_seed(config, "simulate");
  const std::int64_t trials = config.value("trials", std::int64_t{1000});
  if (trials < 1) throw CommandError(kExitConfig, "trials must be >= 1");
  SubspaceCode code = build_code(config.at("code"), seed);
  if (code.empty()) throw EmptyCode("simulate needs a nonempty code");
  const auto cap = config.value("pairwise_cap", kDefaultPairwiseCap);
  const double dmin =
      code.size() >= 2 ? min_distance_exhaustive(code, cap).distance : std::numeric_limits<double>::infinity();

  const json channel = config.value("channel", json::object());
  const std::string mode = channel.value("mode", std::string("operator"));
  if (mode != "operator" && mode != "noisy" && mode != "matrix")
    throw CommandError(kExitConfig, "channel mode must be operator, noisy or matrix");
  const std::optional<Index> fixed_k =
      channel.contains("k") ? std::optional<Index>(channel["k"].get<Index>()) : std::nullopt;
  const Index rho_param = channel.value("rho", Index{0});
  const Index t_param = channel.value("t", Index{0});
  const double delta_param = channel.value("delta", 0.0);
  const Index rd_param = channel.value("r_d", Index{0});
  const double sigma = channel.value("sigma", 0.0);
  if (rho_param < 0 || t_param < 0 || rd_param < 0 || delta_param < 0.0 || sigma < 0.0)
    throw CommandError(kExitConfig, "channel parameters must be nonnegative");
  std::optional<std::size_t> transmit;
  if (config.contains("transmit")) {
    transmit = config["transmit"].get<std::size_t>();
    if (*transmit >= code.size()) throw CommandError(kExitConfig, "transmit index outside the code");
  }

  const NearestDecoder decoder(code);
  std::vector<TrialRecord> records(static_cast<std::size_t>(trials));
  parallel_blocks(
      records.size(),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t trial = begin; trial < end; ++trial) {
          Rng rng = Rng::for_trial(seed, trial);
          const std::size_t tx =
              transmit ? *transmit : static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(code.size()) - 1));
          const Subspace& u = code[tx];
          const Index k = fixed_k ? *fixed_k : std::max<Index>(0, u.dim() - rho_param);

          Subspace received(u.ambient_dim(), u.field());
          Index rho = 0, t = 0, r_d = 0;
          double delta_rot = 0.0;
          bool guaranteed = false;
          if (mode == "operator") {
            ChannelOutput o = apply_operator_channel(u, {k, t_param}, rng);
            received = std::move(o.received);
            rho = o.rho;
            t = o.t;
            guaranteed = guarantee_noiseless(dmin, static_cast<double>(rho), static_cast<double>(t));
          } else if (mode == "noisy") {
            NoisyChannelOutput o = apply_noisy_operator_channel(u, {{k, t_param}, delta_param, rd_param}, rng);
            received = std::move(o.received);
            rho = o.rho;
            t = o.t;
            r_d = o.r_d;
            delta_rot = delta_param;
            guaranteed = guarantee_noisy(dmin, static_cast<double>(rho), static_cast<double>(t), delta_param,
                                         static_cast<double>(r_d));
          } else {
            MatrixChannelSpec spec;
            spec.m = u.dim();
            spec.l = channel.value("l", spec.m);
            spec.t = t_param;
            spec.noise_sigma = sigma;
            spec.field = u.field();
            spec.identity_transfer = channel.value("identity_transfer", false);
            const MatrixChannelOutput o = apply_matrix_channel(u.basis(), spec, rng);
            const Subspace signal = orthonormalize(o.signal, u.field());
            received = orthonormalize(o.received, u.field());
            // Canonical erasure/error split of <A> against U.
            const Index common = u.dim() + signal.dim() - subspace_sum(u, signal).dim();
            rho = u.dim() - common;
            t = signal.dim() - common;
            r_d = spec.l - signal.dim();
            delta_rot = distance(signal, received);
            // With noise there is no exact (rho, t, delta) description, so no claim is made.
            guaranteed = sigma == 0.0 && guarantee_noiseless(dmin, static_cast<double>(rho), static_cast<double>(t));
          }
          const DecodeResult r = decoder(received);
          TrialRecord& rec = records[trial];
          rec.correct = r.codeword_index == tx;
          rec.guaranteed = guaranteed;
          rec.row = std::to_string(trial) + ',' + std::to_string(rho) + ',' + std::to_string(t) + ',' +
                    num(delta_rot) + ',' + std::to_string(r_d) + ',' + std::to_string(tx) + ',' +
                    std::to_string(r.codeword_index) + ',' + (rec.correct ? "1" : "0") + ',' +
                    num(distance(u, received)) + ',' + (guaranteed ? "1" : "0") + '\n';
        }
      },
      16);

  std::size_t correct = 0, guaranteed = 0, guaranteed_correct = 0;
  std::string out = csv_header("simulate", config);
  out += "trial,rho,t,delta_rot,r_d,tx_index,rx_index,correct,d_tx_rx,guarantee_flag\n";
  for (const auto& rec : records) {
    out += rec.row;
    correct += rec.correct;
    guaranteed += rec.guaranteed;
    guaranteed_correct += rec.guaranteed && rec.correct;
  }
  out += "# summary trials=" + std::to_string(records.size()) + " correct=" + std::to_string(correct) +
         " success_rate=" + num(static_cast<double>(correct) / static_cast<double>(records.size())) +
         " guaranteed=" + std::to_string(guaranteed) + " guaranteed_correct=" + std::to_string(guaranteed_correct) +
         " d_min=" + num(dmin) + "\n";
  return out;
}

// ----- bounds ---------------------------------------------------------------------------

std::string bounds(const json& config) {
  const std::vector<std::string> labels = config.value(
      "labels", std::vector<std::string>{"barg_lower", "barg_upper", "shannon", "random_coding", "gv", "zyablov",
                                         "blokh_zyablov", "cp"});
  const json grid = config.value("delta", json::object());
  const double lo = grid.value("min", 0.01);
  const double hi = grid.value("max", 1.0);
  const int count = grid.value("count", 100);
  if (!(lo > 0.0) || !(hi <= 1.0) || !(lo <= hi) || count < 1)
    throw CommandError(kExitConfig, "delta grid needs 0 < min <= max <= 1 and count >= 1");
  const int m = config.value("m", 1);
  const int b = config.value("beta", 2);
  const double eps = config.value("eps", 0.01);
  const std::vector<long> cp_n = config.value("cp_n", std::vector<long>{100, 1000, 10000});
  const std::string binary_units = config.value("binary_units", std::string("bits"));
  if (m < 1 || (b != 1 && b != 2) || !(eps > 0.0)) throw CommandError(kExitConfig, "need m >= 1, beta in {1,2}, eps > 0");
  if (binary_units != "bits" && binary_units != "nats") throw CommandError(kExitConfig, "binary_units is bits or nats");
  const double binary_scale = binary_units == "nats" ? std::log(2.0) : 1.0;

  std::vector<double> deltas;
  for (int i = 0; i < count; ++i) deltas.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));

  std::string out = csv_header("bounds", config);
  out += "label,n,delta,rate,units\n";
  auto row = [&](const std::string& label, long n, double d, double r, const std::string& units) {
    out += label + ',' + std::to_string(n) + ',' + num(d) + ',' + num(r) + ',' + units + '\n';
  };
  for (const auto& label : labels) {
    if (label == "barg_lower") {
      for (double d : deltas) row(label, 0, d, barg_lower(m, d, b), "nats");
    } else if (label == "barg_upper") {
      for (double d : deltas) row(label, 0, d, barg_upper(m, d, b), "nats");
    } else if (label == "shannon") {
      for (double d : deltas) row(label, 0, d, shannon_lower(d), "nats");
    } else if (label == "random_coding") {
      for (double d : deltas) row(label, 0, d, random_coding_rate(m, d, b, eps), "nats");
    } else if (label == "gv") {
      for (double d : deltas)
        if (d < 0.5) row(label, 0, d, binary_scale * (1.0 - binary_entropy(d)), binary_units);
    } else if (label == "zyablov") {
      for (double d : deltas)
        if (d < 0.5) row(label, 0, d, binary_scale * zyablov_rate(d), binary_units);
    } else if (label == "blokh_zyablov") {
      for (double d : deltas)
        if (d < 0.5) row(label, 0, d, binary_scale * blokh_zyablov_rate(d), binary_units);
    } else if (label == "cp") {
      for (long n : cp_n) {
        if (n < 2) throw CommandError(kExitConfig, "cp_n entries must be >= 2");
        const auto q = smallest_prime_at_least(static_cast<std::uint64_t>(n) + 1);
        const double lq = std::log(static_cast<double>(q));
        for (double d : deltas) row(label, static_cast<long>(q) - 1, d, lq * std::sqrt((1.0 - d) / q), "nats");
      }
    } else {
      throw CommandError(kExitConfig, "unknown bound label \"" + label + "\"");
    }
  }
  return out;
}

// ----- figure3 ----------------------------------------------------------------------------

std::string figure3(const json& config) {
  std::vector<int> exponents;
  if (config.contains("exponents")) {
    exponents = config["exponents"].get<std::vector<int>>();
  } else {
    for (int e = config.value("min_exponent", 3); e <= config.value("max_exponent", 10); ++e) exponents.push_back(e);
  }
  const double target = config.value("delta_target", 0.5);
  std::string out = csv_header("figure3", config);
  out += "k_exponent,n,p,chosen_k,ln_code_size,delta_bound,real_dim,real_ambient,calderbank_ln_size,ashikhmin_ln_size\n";
  for (int e : exponents) {
    if (e < 3 || e > 17) throw CommandError(kExitConfig, "exponents must lie in [3, 17]");
    const auto p = static_cast<std::uint32_t>(largest_prime_below(std::uint64_t{1} << (e - 1)));
    const std::uint32_t k = cp_max_k_for_delta(p, target);
    double ln_size = 0.0;
    double bound = 1.0;
    if (k > 0) {
      const CPCodeSpec spec(FiniteField::of_order(p), k);
      ln_size = static_cast<double>(cp_monomial_set(spec).size()) * std::log(static_cast<double>(p));
      bound = cp_distance_bound(spec);
    }
    out += std::to_string(e) + ',' + std::to_string(2 * p) + ',' + std::to_string(p) + ',' + std::to_string(k) + ',' +
           num(ln_size) + ',' + num(bound) + ",2," + std::to_string(2 * (p - 1)) + ",,\n";
  }
  return out;
}

// ----- distance --------------------------------------------------------------------------

std::string distance(const json& config) {
  const SubspaceCode a = load_code(config.at("a").get<std::string>());
  const SubspaceCode b = load_code(config.at("b").get<std::string>());
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("code files have different ambient dimensions");
  const auto cap = config.value("pair_cap", std::uint64_t{1'000'000});
  if (static_cast<std::uint64_t>(a.size()) * b.size() > cap) throw CapExceeded("too many codeword pairs");
  std::string out = csv_header("distance", config);
  out += "i,j,distance\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out += std::to_string(i) + ',' + std::to_string(j) + ',' + num(asc::distance(a[i], b[j])) + '\n';
  return out;
}

// ----- entry point -------------------------------------------------------------------------

int exit_code_for(const std::exception& e) {
  if (auto* c = dynamic_cast<const CommandError*>(&e)) return c->exit_code();
  if (dynamic_cast<const json::exception*>(&e)) return kExitConfig;
  if (dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const SizeOverflow*>(&e) ||
      dynamic_cast<const DimensionOverflow*>(&e) || dynamic_cast<const RetryExhausted*>(&e) ||
      dynamic_cast<const EmptyCode*>(&e))
    return kExitInfeasible;
  if (dynamic_cast<const PreconditionViolated*>(&e) || dynamic_cast<const RankDeficient*>(&e) ||
      dynamic_cast<const NontrivialIntersection*>(&e) || dynamic_cast<const DivisionByZero*>(&e))
    return kExitNumerical;
  if (dynamic_cast<const Error*>(&e)) return kExitConfig;
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analog subspace codes: construction, channel simulation and bounds"};
  app.require_subcommand(1);
  std::string config_path;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::string out_path;

  struct Command {
    const char* name;
    const char* help;
    CLI::App* app = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* trials = nullptr;
    CLI::Option* out = nullptr;
  };
  std::vector<Command> commands = {
      {"construct", "Build a code, write it as JSON (--out) and report its parameters"},
      {"simulate", "Monte Carlo channel + decoder trials, one CSV row per trial"},
      {"bounds", "Rate/distance bound curves as CSV"},
      {"figure3", "CP code sizes at normalized distance 1/2 per exponent"},
      {"distance", "Pairwise distances between the codewords of two code files"},
  };
  for (auto& c : commands) {
    c.app = app.add_subcommand(c.name, c.help);
    c.app->add_option("--config", config_path, "JSON config file");
    c.seed = c.app->add_option("--seed", seed, "Master seed");
    c.trials = c.app->add_option("--trials", trials, "Number of trials");
    c.out = c.app->add_option("--out", out_path, "Output path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (auto& c : commands) {
      if (!c.app->parsed()) continue;
      Overrides ov;
      if (c.seed->count()) ov.seed = seed;
      if (c.trials->count()) ov.trials = trials;
      if (c.out->count()) ov.out = out_path;
      const json cfg = effective_config(read_config(config_path), ov);
      const std::string name = c.name;
      const std::optional<std::string> dest =
          cfg.contains("out") ? std::optional<std::string>(cfg["out"].get<std::string>()) : std::nullopt;
      if (name == "construct") {
        const ConstructResult r = construct(cfg);
        if (dest) write_text(*dest, r.code_json);
        out << r.report;
        return kExitOk;
      }
      std::string text;
      if (name == "simulate") text = simulate(cfg);
      else if (name == "bounds") text = bounds(cfg);
      else if (name == "figure3") text = figure3(cfg);
      else text = distance(cfg);
      if (dest) write_text(*dest, text);
      else out << text;
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitConfig;
}

}  // namespace asc::cli
