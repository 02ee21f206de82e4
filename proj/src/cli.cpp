#include "weylhull/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylhull/absorption.hpp"
#include "weylhull/arrangement.hpp"
#include "weylhull/asymptotics.hpp"
#include "weylhull/combinatorics.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/serialize.hpp"
#include "weylhull/simulator.hpp"
#include "weylhull/verify.hpp"

namespace weylhull {

namespace {

/// Bad input detected after parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, plain };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "plain") return Format::plain;
  throw UsageError("unknown format '" + s + "' (json, csv, plain)");
}

std::uint64_t resolve_seed(const std::string& s) {
  if (s == "random") return entropy_seed();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("--seed expects an integer or 'random', got '" + s + "'");
  return v;
}

std::vector<long> parse_long_list(const std::vector<std::string>& tokens, const std::string& flag) {
  std::vector<long> out;
  for (const auto& t : tokens) {
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      long v = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size()) {
        throw UsageError(flag + " expects integers, got '" + part + "'");
      }
      out.push_back(v);
    }
  }
  return out;
}

std::string join(const std::vector<long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

/// Resolved configuration, echoed as "# weylhull <command> k=v ..." or as a "config" object.
class Config {
 public:
  explicit Config(std::string command) : command_(std::move(command)) { json_["command"] = command_; }
  template <class T>
  void set(const std::string& key, const T& value) {
    json_[key] = value;
    std::ostringstream os;
    if constexpr (std::is_floating_point_v<T>) os << format_double(value);
    else os << value;
    text_ += " " + key + "=" + os.str();
  }
  std::string header() const { return "# weylhull " + command_ + text_ + "\n"; }
  const Json& json() const { return json_; }

 private:
  std::string command_;
  std::string text_;
  Json json_ = Json::object();
};

void emit_json(std::ostream& out, Json body, const Config& config) {
  Json doc = Json::object();
  doc["config"] = config.json();
  for (auto& [k, v] : body.items()) doc[k] = v;
  out << doc.dump(2) << "\n";
}

std::string rational_plain(const Rational& q) { return q.get_str() + " (" + format_double(to_double(q)) + ")"; }

Arrangement load_arrangement(const std::string& file, const std::string& type, long n) {
  if (!file.empty()) {
    if (!type.empty()) throw UsageError("give either --file or --type/--n, not both");
    if (file == "-") return parse_arrangement(std::cin);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open arrangement file '" + file + "'");
    return parse_arrangement(in);
  }
  if (type.empty()) throw UsageError("an arrangement needs --file or --type with --n");
  const auto t = parse_reflection_type(type);
  check_reflection_rank(t, n);
  return build_reflection_arrangement(t, n);
}

/// "dim n" then one basis vector per line (integers or p/q rationals); '#' comments.
Subspace load_subspace(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open subspace file '" + file + "'");
  Subspace L;
  std::string line;
  long lineno = 0;
  bool have_dim = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_dim) {
      if (tokens.size() != 2 || tokens[0] != "dim") throw UsageError("subspace line " + std::to_string(lineno) + ": expected 'dim n'");
      L.ambient = static_cast<std::size_t>(std::stoul(tokens[1]));
      have_dim = true;
      continue;
    }
    if (tokens.size() != L.ambient) throw UsageError("subspace line " + std::to_string(lineno) + ": wrong number of entries");
    RationalVector v;
    for (const auto& t : tokens) {
      Rational q;
      if (q.set_str(t, 10) != 0) throw UsageError("subspace line " + std::to_string(lineno) + ": bad number '" + t + "'");
      q.canonicalize();
      v.push_back(q);
    }
    L.basis.push_back(std::move(v));
  }
  if (!have_dim) throw UsageError("subspace file is empty");
  L.validate();
  return L;
}

Eigen::MatrixXd load_matrix(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open matrix file '" + file + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<double> r;
    for (double x; ls >> x;) r.push_back(x);
    if (!ls.eof()) throw UsageError("matrix file: non-numeric entry");
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw UsageError("matrix file is empty");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw UsageError("matrix file: ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

WalkFamily make_family(const std::string& name, const std::vector<long>& steps, long dim) {
  const auto kind = parse_walk_kind(name);
  WalkFamily f;
  f.kind = kind;
  f.dim = dim;
  if (kind == WalkKind::wendel) {
    if (steps.size() != 1) throw UsageError("wendel takes --steps r (the number of points)");
    f = WalkFamily::wendel(steps[0], dim);
  } else {
    f.steps = steps;
  }
  f.validate();
  return f;
}

// ---------------------------------------------------------------------------

struct ExactArgs {
  std::string family;
  std::vector<std::string> steps;
  long dim = 1;
  std::string mode = "exact";
  std::string format = "plain";
};

int run_exact(const ExactArgs& a, std::ostream& out) {
  const auto fam = make_family(a.family, parse_long_list(a.steps, "--steps"), a.dim);
  const auto format = parse_format(a.format);
  Config cfg("exact");
  cfg.set("family", a.family);
  cfg.set("steps", join(fam.steps));
  cfg.set("dim", a.dim);
  cfg.set("mode", a.mode);
  if (a.mode == "float") {
    const auto p = absorption_probabilities_float(fam);
    switch (format) {
      case Format::json:
        emit_json(out,
                  Json{{"family", to_string(fam.kind)}, {"n", fam.total_steps()}, {"d", fam.dim}, {"steps", fam.steps},
                       {"absorb", Json{{"float", p.absorb}}}, {"non_absorb", Json{{"float", p.non_absorb}}},
                       {"within_hypotheses", fam.within_hypotheses()}},
                  cfg);
        break;
      case Format::csv:
        out << cfg.header() << "family,n,d,absorb,non_absorb,within_hypotheses\n"
            << to_string(fam.kind) << "," << fam.total_steps() << "," << fam.dim << "," << format_double(p.absorb) << ","
            << format_double(p.non_absorb) << "," << (fam.within_hypotheses() ? "true" : "false") << "\n";
        break;
      case Format::plain:
        out << cfg.header() << "absorb: " << format_double(p.absorb) << "\nnon_absorb: " << format_double(p.non_absorb)
            << "\nwithin_hypotheses: " << (fam.within_hypotheses() ? "true" : "false") << "\n";
        break;
    }
    return kExitOk;
  }
  if (a.mode != "exact") throw UsageError("--mode must be exact or float");
  const auto r = absorption_probability(fam);
  switch (format) {
    case Format::json: emit_json(out, Json(r), cfg); break;
    case Format::csv:
      out << cfg.header() << "family,n,d,absorb_num,absorb_den,absorb,non_absorb_num,non_absorb_den,non_absorb,"
          << "within_hypotheses\n"
          << to_string(fam.kind) << "," << fam.total_steps() << "," << fam.dim << "," << r.absorb.get_num().get_str() << ","
          << r.absorb.get_den().get_str() << "," << format_double(to_double(r.absorb)) << ","
          << r.non_absorb.get_num().get_str() << "," << r.non_absorb.get_den().get_str() << ","
          << format_double(to_double(r.non_absorb)) << "," << (r.within_hypotheses ? "true" : "false") << "\n";
      break;
    case Format::plain:
      out << cfg.header() << "absorb: " << rational_plain(r.absorb) << "\nnon_absorb: " << rational_plain(r.non_absorb)
          << "\nwithin_hypotheses: " << (r.within_hypotheses ? "true" : "false") << "\n";
      break;
  }
  return kExitOk;
}

struct CoeffsArgs {
  std::string row;
  long n = 0;
  std::vector<std::string> steps;
  std::string format = "json";
};

int run_coeffs(const CoeffsArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  Config cfg("coeffs");
  cfg.set("row", a.row);
  std::vector<BigInt> coeffs;
  if (a.row == "product") {
    const auto ns = parse_long_list(a.steps, "--steps");
    if (ns.empty()) throw UsageError("--row product needs --steps n1,n2,...");
    for (long v : ns) {
      if (v < 1) throw UsageError("--steps entries must be positive");
    }
    cfg.set("steps", join(ns));
    coeffs = product_coefficients(ns).coeffs();
  } else {
    RowFamily fam;
    if (a.row == "stirling") fam = RowFamily::stirling;
    else if (a.row == "B" || a.row == "b") fam = RowFamily::b_analog;
    else if (a.row == "D" || a.row == "d") fam = RowFamily::d_analog;
    else throw UsageError("unknown row '" + a.row + "' (stirling, B, D, product)");
    if (a.n < 1 || (fam == RowFamily::d_analog && a.n < 2)) throw UsageError("--n is required (>= 1, >= 2 for D)");
    cfg.set("n", a.n);
    coeffs = coefficient_row(fam, a.n)->coeffs();
  }
  switch (format) {
    case Format::json: emit_json(out, Json{{"coefficients", bigints_to_json(coeffs)}}, cfg); break;
    case Format::csv:
      out << cfg.header() << "k,coefficient\n";
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << "," << coeffs[k].get_str() << "\n";
      break;
    case Format::plain:
      out << cfg.header();
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << ": " << coeffs[k].get_str() << "\n";
      break;
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string model = "gaussian";
  std::string family;
  std::vector<std::string> steps;
  long dim = 1;
  std::uint64_t samples = 100000;
  std::string seed = std::to_string(kDefaultSeed);
  double tol = kHullTolerance;
  std::optional<unsigned> threads;
  std::string matrix;
  std::string format = "csv";
};

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  if (format == Format::plain) throw UsageError("simulate supports --format json or csv");
  const auto fam = make_family(a.family, parse_long_list(a.steps, "--steps"), a.dim);
  const auto kind = parse_model_kind(a.model);
  IncrementModel model = IncrementModel::of(kind, a.dim);
  if (kind == ModelKind::user_matrix) {
    if (a.matrix.empty()) throw UsageError("--model user-matrix needs --matrix FILE");
    model = IncrementModel::user(load_matrix(a.matrix));
    if (model.dim != a.dim) throw UsageError("--matrix has " + std::to_string(model.dim) + " rows but --dim is " + std::to_string(a.dim));
  } else if (!a.matrix.empty()) {
    throw UsageError("--matrix only applies to --model user-matrix");
  }
  if (a.samples == 0) throw UsageError("--samples must be positive");
  if (!(a.tol > 0)) throw UsageError("--tol must be positive");
  const std::uint64_t seed = resolve_seed(a.seed);

  Config cfg("simulate");
  cfg.set("model", a.model);
  cfg.set("family", a.family);
  cfg.set("steps", join(fam.steps));
  cfg.set("dim", a.dim);
  cfg.set("samples", a.samples);
  cfg.set("seed", seed);
  cfg.set("tol", a.tol);
  if (!a.matrix.empty()) cfg.set("matrix", a.matrix);

  SimulationOptions so;
  so.tol = a.tol;
  so.threads = a.threads;
  const auto est = estimate_absorption(model, fam, a.samples, seed, so);
  const double exact = fam.total_steps() <= exact_row_cap() ? to_double(absorption_probability(fam).absorb)
                                                            : absorption_probability_float(fam);
  const auto& e = est.absorb;
  if (format == Format::json) {
    emit_json(out,
              Json{{"family", to_string(fam.kind)},
                   {"n", fam.total_steps()},
                   {"d", fam.dim},
                   {"model", to_string(kind)},
                   {"absorb", Json(e)},
                   {"interior", Json(est.interior)},
                   {"exact", exact},
                   {"z_score", e.z_score(exact)}},
              cfg);
    return kExitOk;
  }
  out << cfg.header() << "family,n,d,model,samples,seed,p_hat,stderr,ci_lo,ci_hi,exact,z_score,ambiguous_fraction\n"
      << to_string(fam.kind) << "," << fam.total_steps() << "," << fam.dim << "," << to_string(kind) << "," << e.samples
      << "," << e.seed << "," << format_double(e.p_hat) << "," << format_double(e.stderr_) << ","
      << format_double(e.ci_lo) << "," << format_double(e.ci_hi) << "," << format_double(exact) << ","
      << format_double(e.z_score(exact)) << "," << format_double(e.ambiguous_fraction) << "\n";
  return kExitOk;
}

struct ArrangementArgs {
  std::string action;
  std::string file;
  std::string type;
  long n = 0;
  std::string method = "whitney";
  bool enumerate = false;
  long codim = -1;
  std::string subspace;
  bool random = false;
  std::string mode = "open";
  std::string seed = std::to_string(kDefaultSeed);
  std::string format = "plain";
};

std::string bracket_list(const std::vector<BigInt>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get_str();
  return s + "]";
}

std::string sign_string(const SignVector& v) {
  std::string s;
  for (auto x : v) s += x > 0 ? '+' : '-';
  return s;
}

int run_arrangement(const ArrangementArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  const auto arr = load_arrangement(a.file, a.type, a.n);
  Config cfg("arrangement " + a.action);
  if (!a.file.empty()) cfg.set("file", a.file);
  if (!a.type.empty()) {
    cfg.set("type", a.type);
    cfg.set("n", a.n);
  }

  CharacteristicPolynomial chi;
  if (a.method == "closed") {
    if (a.type.empty()) throw UsageError("--method closed needs a reflection arrangement (--type, --n)");
    chi = reflection_characteristic_polynomial(parse_reflection_type(a.type), a.n);
  } else if (a.method == "whitney") {
    chi = whitney_characteristic_polynomial(arr);
  } else {
    throw UsageError("--method must be whitney or closed");
  }
  cfg.set("method", a.method);

  if (a.action == "charpoly") {
    switch (format) {
      case Format::json: emit_json(out, Json(chi), cfg); break;
      case Format::csv:
        out << cfg.header() << "k,a_k\n";
        for (std::size_t k = 0; k < chi.a.size(); ++k) out << k << "," << chi.a[k].get_str() << "\n";
        break;
      case Format::plain: out << cfg.header() << "a: " << bracket_list(chi.a) << "\n"; break;
    }
    return kExitOk;
  }

  if (a.action == "regions") {
    cfg.set("enumerate", a.enumerate);
    const BigInt count = zaslavsky_region_count(chi);
    std::vector<SignVector> regions;
    if (a.enumerate) regions = enumerate_regions(arr);
    switch (format) {
      case Format::json: {
        Json body{{"regions", count.get_str()}};
        if (a.enumerate) {
          Json list = Json::array();
          for (const auto& r : regions) list.push_back(sign_string(r));
          body["enumerated"] = regions.size();
          body["sign_vectors"] = std::move(list);
        }
        emit_json(out, std::move(body), cfg);
        break;
      }
      case Format::csv:
        out << cfg.header() << "regions" << (a.enumerate ? ",enumerated" : "") << "\n"
            << count.get_str();
        if (a.enumerate) out << "," << regions.size();
        out << "\n";
        break;
      case Format::plain:
        out << cfg.header() << "regions: " << count.get_str() << "\n";
        if (a.enumerate) {
          out << "enumerated: " << regions.size() << "\n";
          for (const auto& r : regions) out << sign_string(r) << "\n";
        }
        break;
    }
    return kExitOk;
  }

  // intersect
  const long n = static_cast<long>(arr.dim());
  std::optional<Subspace> L;
  if (!a.subspace.empty()) {
    if (a.random) throw UsageError("give either --subspace or --random");
    L = load_subspace(a.subspace);
    if (L->ambient != arr.dim()) throw UsageError("subspace ambient dimension differs from the arrangement's");
  }
  long codim = a.codim;
  if (L) {
    codim = static_cast<long>(L->codim());
    if (a.codim >= 0 && a.codim != codim) throw UsageError("--codim disagrees with the subspace file");
  }
  if (codim < 0 || codim > n - 1) throw UsageError("--codim must lie in [0, n-1]");
  cfg.set("codim", codim);
  Json body{{"codim", codim}, {"predicted", intersected_region_count(chi, codim).get_str()}};
  std::string plain = "predicted: " + intersected_region_count(chi, codim).get_str() + "\n";
  std::string csv_head = "codim,predicted", csv_row = std::to_string(codim) + "," + intersected_region_count(chi, codim).get_str();
  if (a.random) {
    const auto seed = resolve_seed(a.seed);
    cfg.set("seed", seed);
    PhiloxStream rng(seed, 0);
    L = Subspace::from_columns(random_grassmannian_basis(n, n - codim, rng));
  }
  if (L) {
    if (a.mode != "open" && a.mode != "closed") throw UsageError("--mode must be open or closed");
    cfg.set("mode", a.mode);
    const auto got = count_regions_meeting_subspace(
        arr, *L, a.mode == "open" ? IntersectionMode::open : IntersectionMode::closed);
    body["observed"] = got.count;
    body["general_position"] = got.general_position;
    plain += "observed: " + std::to_string(got.count) + " (" + a.mode + " mode)\ngeneral_position: " +
             (got.general_position ? "true" : "false") + "\n";
    csv_head += ",observed,mode,general_position";
    csv_row += "," + std::to_string(got.count) + "," + a.mode + "," + (got.general_position ? "true" : "false");
  }
  switch (format) {
    case Format::json: emit_json(out, std::move(body), cfg); break;
    case Format::csv: out << cfg.header() << csv_head << "\n" << csv_row << "\n"; break;
    case Format::plain: out << cfg.header() << "codim: " << codim << "\n" << plain; break;
  }
  return kExitOk;
}

struct ConeArgs {
  std::string action;
  std::string type;
  long n = 0;
  long codim = 1;
  std::uint64_t samples = 100000;
  std::string seed = std::to_string(kDefaultSeed);
  std::optional<unsigned> threads;
  std::string format = "plain";
};

int run_cone(const ConeArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  const auto t = parse_reflection_type(a.type);
  check_reflection_rank(t, a.n);
  const WeylChamber chamber(t, a.n);
  const auto v = weyl_intrinsic_volumes(t, a.n);
  Config cfg("cone " + a.action);
  cfg.set("type", a.type);
  cfg.set("n", a.n);

  if (a.action == "volumes") {
    switch (format) {
      case Format::json: {
        Json body = Json(v);
        Json tails = Json::array();
        for (long k = 0; k <= a.n; ++k) tails.push_back(rational_to_json(*half_tail(v, k).exact));
        body["half_tails"] = std::move(tails);
        emit_json(out, std::move(body), cfg);
        break;
      }
      case Format::csv:
        out << cfg.header() << "k,v_num,v_den,v,h_num,h_den,h\n";
        for (long k = 0; k <= a.n; ++k) {
          const auto& q = v.exact[static_cast<std::size_t>(k)];
          const auto h = *half_tail(v, k).exact;
          out << k << "," << q.get_num().get_str() << "," << q.get_den().get_str() << "," << format_double(to_double(q))
              << "," << h.get_num().get_str() << "," << h.get_den().get_str() << "," << format_double(to_double(h)) << "\n";
        }
        break;
      case Format::plain:
        out << cfg.header();
        for (long k = 0; k <= a.n; ++k) {
          out << "v_" << k << ": " << rational_plain(v.exact[static_cast<std::size_t>(k)]) << "   h_" << k << ": "
              << rational_plain(*half_tail(v, k).exact) << "\n";
        }
        break;
    }
    return kExitOk;
  }

  if (a.samples == 0) throw UsageError("--samples must be positive");
  const auto seed = resolve_seed(a.seed);
  const unsigned threads = resolve_threads(a.threads);

  if (a.action == "steiner") {
    cfg.set("samples", a.samples);
    cfg.set("seed", seed);
    const auto s = steiner_ks_check(chamber, a.samples, seed, threads);
    switch (format) {
      case Format::json: emit_json(out, Json{{"ks", s.ks}, {"samples", s.samples}, {"seed", s.seed}}, cfg); break;
      case Format::csv:
        out << cfg.header() << "ks,samples,seed\n" << format_double(s.ks) << "," << s.samples << "," << s.seed << "\n";
        break;
      case Format::plain: out << cfg.header() << "ks: " << format_double(s.ks) << "\n"; break;
    }
    return kExitOk;
  }

  // crofton
  if (a.codim < 0 || a.codim > a.n - 1) throw UsageError("--codim must lie in [0, n-1]");
  cfg.set("codim", a.codim);
  cfg.set("samples", a.samples);
  cfg.set("seed", seed);
  const auto e = crofton_mc_estimate(chamber, a.codim, a.samples, seed, threads);
  const auto h = half_tail(v, a.codim + 1);
  switch (format) {
    case Format::json:
      emit_json(out, Json{{"k", a.codim + 1}, {"estimate", Json(e)}, {"exact", rational_to_json(*h.exact)},
                          {"z_score", e.z_score(h.value)}},
                cfg);
      break;
    case Format::csv:
      out << cfg.header() << "k,estimate,stderr,samples,seed,exact,z_score\n"
          << a.codim + 1 << "," << format_double(e.p_hat) << "," << format_double(e.stderr_) << "," << e.samples << ","
          << e.seed << "," << format_double(h.value) << "," << format_double(e.z_score(h.value)) << "\n";
      break;
    case Format::plain:
      out << cfg.header() << "h_" << a.codim + 1 << " estimate: " << format_double(e.p_hat) << " +- "
          << format_double(e.stderr_) << "\nh_" << a.codim + 1 << " exact: " << rational_plain(*h.exact) << "\n";
      break;
  }
  return kExitOk;
}

struct AsymptArgs {
  std::string regime;
  std::string type = "B";
  std::vector<std::string> ns{"1000", "10000", "100000", "1000000"};
  double param = 0.0;
  std::string prefactor = "corrected";
  std::string format = "csv";
};

int run_asympt(const AsymptArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  const auto regime = parse_regime(a.regime);
  const auto t = parse_reflection_type(a.type);
  const auto ns = parse_long_list(a.ns, "--n");
  if (a.prefactor != "corrected" && a.prefactor != "published") throw UsageError("--prefactor must be corrected or published");
  const auto pf = a.prefactor == "corrected" ? LdPrefactor::corrected : LdPrefactor::published;
  Config cfg("asympt");
  cfg.set("regime", std::string(to_string(regime)));
  cfg.set("type", a.type);
  cfg.set("n", join(ns));
  cfg.set("param", a.param);
  if (regime == Regime::large_deviation) cfg.set("prefactor", a.prefactor);
  const auto rows = asymptotic_table(regime, t, ns, a.param, pf);
  switch (format) {
    case Format::json: emit_json(out, Json{{"rows", Json(rows)}}, cfg); break;
    case Format::csv:
      out << cfg.header() << "n,d,exact_float,asymptotic,ratio\n";
      for (const auto& r : rows) {
        out << r.n << "," << r.d << "," << format_double(r.exact_float) << "," << format_double(r.asymptotic) << ","
            << format_double(r.ratio) << "\n";
      }
      break;
    case Format::plain:
      out << cfg.header();
      for (const auto& r : rows) {
        out << "n=" << r.n << " d=" << r.d << " exact=" << format_double(r.exact_float)
            << " asymptotic=" << format_double(r.asymptotic) << " ratio=" << format_double(r.ratio) << "\n";
      }
      break;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t samples = 100000;
  std::string seed = std::to_string(kDefaultSeed);
  std::optional<unsigned> threads;
  bool timings = false;
  std::string format = "plain";
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  if (format == Format::csv) throw UsageError("verify supports --format plain or json");
  const auto suite = parse_suite(a.suite);
  if (a.samples == 0) throw UsageError("--samples must be positive");
  VerifyOptions o;
  o.samples = a.samples;
  o.seed = resolve_seed(a.seed);
  o.threads = a.threads;
  Config cfg("verify");
  cfg.set("suite", a.suite);
  cfg.set("samples", o.samples);
  cfg.set("seed", o.seed);
  if (format == Format::plain) out << cfg.header() << std::flush;
  const auto results = run_suite(suite, o, [&](const CheckResult& r) {
    if (format == Format::plain) out << format_check(r, a.timings) << std::endl;
  });
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  if (format == Format::json) {
    emit_json(out, report_to_json(results, a.timings), cfg);
  } else {
    out << (results.size() - static_cast<std::size_t>(failed)) << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

void add_format(CLI::App* sub, std::string& target, const std::string& allowed) {
  sub->add_option("--format", target, "Output format: " + allowed)->capture_default_str();
}

void add_threads(CLI::App* sub, std::optional<unsigned>& target) {
  sub->add_option("--threads", target, "Worker threads (default: WEYLHULL_THREADS, else all cores)");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absorption probabilities of random walk convex hulls, Weyl chamber counts and conic intrinsic volumes",
               "weylhull"};
  app.require_subcommand(1, 1);

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact absorption probability of a walk family");
  exact_cmd->add_option("--family", exact.family, "bridge-A, walk-B, walk-D, joint-B or wendel")->required();
  exact_cmd->add_option("--steps", exact.steps, "Step count; joint-B takes a list, wendel the number of points")->required();
  exact_cmd->add_option("--dim", exact.dim, "Dimension d")->required();
  exact_cmd->add_option("--mode", exact.mode, "exact (rational) or float (large n)")->capture_default_str();
  add_format(exact_cmd, exact.format, "json|csv|plain");

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient rows (Stirling, B, D, products)");
  coeffs_cmd->add_option("--row", coeffs.row, "stirling, B, D or product")->required();
  coeffs_cmd->add_option("--n", coeffs.n, "Row index");
  coeffs_cmd->add_option("--steps", coeffs.steps, "Walk lengths for --row product");
  add_format(coeffs_cmd, coeffs.format, "json|csv|plain");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the absorption probability");
  sim_cmd->add_option("--model", sim.model, "gaussian, uniform-sphere, heavy-tail, lattice-simple, user-matrix")
      ->capture_default_str();
  sim_cmd->add_option("--family", sim.family, "bridge-A, walk-B, walk-D, joint-B or wendel")->required();
  sim_cmd->add_option("--steps", sim.steps, "Step count(s)")->required();
  sim_cmd->add_option("--dim", sim.dim, "Dimension d")->required();
  sim_cmd->add_option("--samples", sim.samples, "Number of sampled walks")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Integer seed or 'random'")->capture_default_str();
  sim_cmd->add_option("--tol", sim.tol, "Hull membership tolerance")->capture_default_str();
  sim_cmd->add_option("--matrix", sim.matrix, "Columns of +-a_j for --model user-matrix (d rows)");
  add_threads(sim_cmd, sim.threads);
  add_format(sim_cmd, sim.format, "json|csv");

  ArrangementArgs arr;
  auto* arr_cmd = app.add_subcommand("arrangement", "Central hyperplane arrangements");
  arr_cmd->require_subcommand(1, 1);
  for (const char* action : {"charpoly", "regions", "intersect"}) {
    auto* sub = arr_cmd->add_subcommand(action, std::string(action) == "charpoly"   ? "Characteristic polynomial"
                                                : std::string(action) == "regions" ? "Number of regions"
                                                                                    : "Regions met by a subspace");
    sub->add_option("--file", arr.file, "Arrangement file ('dim n', integer normals; '-' for stdin)");
    sub->add_option("--type", arr.type, "Reflection arrangement A, B or D instead of a file");
    sub->add_option("--n", arr.n, "Rank for --type");
    sub->add_option("--method", arr.method, "whitney or closed (reflection arrangements)")->capture_default_str();
    if (std::string(action) == "regions") sub->add_flag("--enumerate", arr.enumerate, "Also list sign vectors");
    if (std::string(action) == "intersect") {
      sub->add_option("--codim", arr.codim, "Codimension d of the subspace");
      sub->add_option("--subspace", arr.subspace, "Subspace file ('dim n', then basis vectors)");
      sub->add_flag("--random", arr.random, "Count against a random Gaussian subspace");
      sub->add_option("--mode", arr.mode, "open or closed")->capture_default_str();
      sub->add_option("--seed", arr.seed, "Seed for --random")->capture_default_str();
    }
    add_format(sub, arr.format, "json|csv|plain");
    sub->callback([&arr, action] { arr.action = action; });
  }

  ConeArgs cone;
  auto* cone_cmd = app.add_subcommand("cone", "Weyl chamber intrinsic volumes and Monte Carlo checks");
  cone_cmd->require_subcommand(1, 1);
  for (const char* action : {"volumes", "steiner", "crofton"}) {
    auto* sub = cone_cmd->add_subcommand(action, std::string(action) == "volumes"   ? "Exact intrinsic volumes"
                                                 : std::string(action) == "steiner" ? "KS check of dist^2 law"
                                                                                     : "Crofton half-tail estimate");
    sub->add_option("--type", cone.type, "A, B or D")->required();
    sub->add_option("--n", cone.n, "Rank")->required();
    if (std::string(action) != "volumes") {
      sub->add_option("--samples", cone.samples, "Monte Carlo samples")->capture_default_str();
      sub->add_option("--seed", cone.seed, "Integer seed or 'random'")->capture_default_str();
      add_threads(sub, cone.threads);
    }
    if (std::string(action) == "crofton") sub->add_option("--codim", cone.codim, "Codimension d")->capture_default_str();
    add_format(sub, cone.format, "json|csv|plain");
    sub->callback([&cone, action] { cone.action = action; });
  }

  AsymptArgs asy;
  auto* asy_cmd = app.add_subcommand("asympt", "Exact vs asymptotic tables");
  asy_cmd->add_option("--regime", asy.regime, "fixed-d, clt or large-deviation")->required();
  asy_cmd->add_option("--type", asy.type, "A, B or D")->capture_default_str();
  asy_cmd->add_option("--n", asy.ns, "Grid of n values")->capture_default_str();
  asy_cmd->add_option("--param", asy.param, "d (fixed-d), a (clt) or x (large-deviation)")->required();
  asy_cmd->add_option("--prefactor", asy.prefactor, "corrected or published")->capture_default_str();
  add_format(asy_cmd, asy.format, "json|csv|plain");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run invariant checks and acceptance criteria");
  ver_cmd->add_option("suite", ver.suite, "combinatorics, arrangements, conic, simulation, asymptotics or all")
      ->capture_default_str();
  ver_cmd->add_option("--samples", ver.samples, "Monte Carlo samples per check")->capture_default_str();
  ver_cmd->add_option("--seed", ver.seed, "Integer seed or 'random'")->capture_default_str();
  ver_cmd->add_flag("--timings", ver.timings, "Print wall time per check");
  add_threads(ver_cmd, ver.threads);
  add_format(ver_cmd, ver.format, "json|plain");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* deepest = &app;
    for (auto subs = app.get_subcommands(); !subs.empty(); subs = subs.front()->get_subcommands()) deepest = subs.front();
    err << deepest->help();
    return kExitUsage;
  }

  try {
    if (exact_cmd->parsed()) return run_exact(exact, out);
    if (coeffs_cmd->parsed()) return run_coeffs(coeffs, out);
    if (sim_cmd->parsed()) return run_simulate(sim, out);
    if (arr_cmd->parsed()) return run_arrangement(arr, out);
    if (cone_cmd->parsed()) return run_cone(cone, out);
    if (asy_cmd->parsed()) return run_asympt(asy, out);
    if (ver_cmd->parsed()) return run_verify(ver, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace weylhull
