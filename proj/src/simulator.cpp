#include "weylhull/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "weylhull/arrangement.hpp"
#include "weylhull/cones.hpp"

namespace weylhull {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::gaussian: return "gaussian";
    case ModelKind::uniform_sphere: return "uniform-sphere";
    case ModelKind::heavy_tail: return "heavy-tail";
    case ModelKind::lattice_simple: return "lattice-simple";
    case ModelKind::user_matrix: return "user-matrix";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto k : {ModelKind::gaussian, ModelKind::uniform_sphere, ModelKind::heavy_tail, ModelKind::lattice_simple,
                 ModelKind::user_matrix}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown increment model '" + std::string(name) +
                              "' (expected gaussian, uniform-sphere, heavy-tail, lattice-simple or user-matrix)");
}

IncrementModel IncrementModel::user(Eigen::MatrixXd columns) {
  IncrementModel m{ModelKind::user_matrix, static_cast<long>(columns.rows()), std::move(columns)};
  m.validate();
  return m;
}

bool IncrementModel::continuous() const {
  return kind == ModelKind::gaussian || kind == ModelKind::uniform_sphere || kind == ModelKind::heavy_tail;
}

void IncrementModel::validate() const {
  if (dim < 1) throw std::invalid_argument("increment model: dimension must be >= 1");
  if (kind == ModelKind::user_matrix) {
    if (columns.cols() == 0 || columns.rows() != dim) {
      throw std::invalid_argument("increment model: user matrix must have `dim` rows and at least one column");
    }
    if (!columns.allFinite()) throw std::invalid_argument("increment model: user matrix has non-finite entries");
  }
}

Eigen::MatrixXd sample_increments(const IncrementModel& model, long n, PhiloxStream& rng) {
  model.validate();
  if (n < 1) throw std::invalid_argument("sample_increments: n must be >= 1");
  const long d = model.dim;
  Eigen::MatrixXd xi = Eigen::MatrixXd::Zero(d, n);
  for (long i = 0; i < n; ++i) {
    switch (model.kind) {
      case ModelKind::gaussian:
        for (long j = 0; j < d; ++j) xi(j, i) = rng.normal();
        break;
      case ModelKind::uniform_sphere:
        xi.col(i) = random_sphere_point(d, rng);
        break;
      case ModelKind::heavy_tail:
        for (long j = 0; j < d; ++j) {
          const double mag = std::pow(rng.uniform_open(), -2.0 / 3.0) - 1.0;
          xi(j, i) = (rng() & 1) ? mag : -mag;
        }
        break;
      case ModelKind::lattice_simple: {
        const auto j = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(d)));
        xi(j, i) = (rng() & 1) ? 1.0 : -1.0;
        break;
      }
      case ModelKind::user_matrix: {
        const auto c = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(model.columns.cols())));
        xi.col(i) = (rng() & 1) ? model.columns.col(c) : Eigen::VectorXd(-model.columns.col(c));
        break;
      }
    }
  }
  return xi;
}

Eigen::MatrixXd sample_increments(const IncrementModel& model, long n, std::uint64_t seed) {
  PhiloxStream rng(seed, 0);
  return sample_increments(model, n, rng);
}

Eigen::MatrixXd make_bridge(const Eigen::MatrixXd& increments) {
  const Eigen::Index n = increments.cols();
  if (n < 1) throw std::invalid_argument("make_bridge: no increments");
  Eigen::MatrixXd out = increments.colwise() - increments.rowwise().mean();
  Eigen::VectorXd partial = Eigen::VectorXd::Zero(out.rows());
  for (Eigen::Index i = 0; i + 1 < n; ++i) partial += out.col(i);
  out.col(n - 1) = -partial;
  return out;
}

Eigen::MatrixXd make_bridge(const IncrementModel& model, const Eigen::MatrixXd& increments) {
  if (!model.continuous()) {
    throw std::invalid_argument("make_bridge: model '" + std::string(to_string(model.kind)) +
                                "' is not closed under bridging");
  }
  return make_bridge(increments);
}

namespace {

Eigen::MatrixXd partial_sums(const Eigen::MatrixXd& xi) {
  Eigen::MatrixXd s(xi.rows(), xi.cols());
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(xi.rows());
  for (Eigen::Index i = 0; i < xi.cols(); ++i) {
    acc += xi.col(i);
    s.col(i) = acc;
  }
  return s;
}

}  // namespace

Eigen::MatrixXd hull_points(const WalkFamily& family, const std::vector<Eigen::MatrixXd>& increments) {
  family.validate();
  if (increments.size() != family.steps.size()) throw std::invalid_argument("hull_points: wrong number of walks");
  for (std::size_t w = 0; w < increments.size(); ++w) {
    if (increments[w].cols() != family.steps[w] || increments[w].rows() != family.dim) {
      throw std::invalid_argument("hull_points: increment block has the wrong shape");
    }
  }
  switch (family.kind) {
    case WalkKind::bridge_a: {
      const Eigen::MatrixXd s = partial_sums(increments[0]);
      return s.leftCols(s.cols() - 1);
    }
    case WalkKind::walk_b:
      return partial_sums(increments[0]);
    case WalkKind::walk_d: {
      const Eigen::MatrixXd s = partial_sums(increments[0]);
      const Eigen::Index n = s.cols();
      Eigen::MatrixXd out(s.rows(), n + 1);
      out.leftCols(n) = s;
      out.col(n) = s.col(n - 2) - increments[0].col(n - 1);
      return out;
    }
    case WalkKind::joint_b:
    case WalkKind::wendel: {
      Eigen::MatrixXd out(family.dim, family.total_steps());
      Eigen::Index pos = 0;
      for (const auto& xi : increments) {
        out.middleCols(pos, xi.cols()) = partial_sums(xi);
        pos += xi.cols();
      }
      return out;
    }
  }
  throw std::logic_error("hull_points: unknown walk kind");
}

std::vector<Eigen::MatrixXd> sample_family_increments(const IncrementModel& model, const WalkFamily& family,
                                                      PhiloxStream& rng) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(family.steps.size());
  for (long n : family.steps) blocks.push_back(sample_increments(model, n, rng));
  if (family.kind == WalkKind::bridge_a) blocks[0] = make_bridge(model, blocks[0]);
  return blocks;
}

namespace {

struct HullTally {
  std::uint64_t inside = 0;
  std::uint64_t interior = 0;
  std::uint64_t ambiguous = 0;
  HullTally& operator+=(const HullTally& o) {
    inside += o.inside;
    interior += o.interior;
    ambiguous += o.ambiguous;
    return *this;
  }
};

HullMembership test_sample(const Eigen::MatrixXd& points, double tol) {
  if (is_integral(points)) return origin_in_hull(points, tol);
  Eigen::MatrixXd unit = points;
  for (Eigen::Index i = 0; i < unit.cols(); ++i) {
    const double norm = unit.col(i).norm();
    if (norm == 0.0) {
      HullMembership hit;
      hit.inside = hit.interior = true;
      hit.lambda = Eigen::VectorXd::Unit(points.cols(), i);
      return hit;
    }
    unit.col(i) /= norm;
  }
  return min_norm_membership(unit, tol);
}

}  // namespace

AbsorptionEstimate estimate_absorption(const IncrementModel& model, const WalkFamily& family, std::uint64_t samples,
                                       std::uint64_t seed, const SimulationOptions& options) {
  model.validate();
  family.validate();
  if (model.dim != family.dim) {
    throw std::invalid_argument("estimate_absorption: model dimension " + std::to_string(model.dim) +
                                " != family dimension " + std::to_string(family.dim));
  }
  if (family.kind == WalkKind::bridge_a && !model.continuous()) {
    throw std::invalid_argument("estimate_absorption: model '" + std::string(to_string(model.kind)) +
                                "' cannot be bridged");
  }
  if (samples == 0) throw std::invalid_argument("estimate_absorption: samples must be >= 1");
  const unsigned threads = resolve_threads(options.threads);
  const bool continuous = model.continuous();
  const auto tally = run_streams<HullTally>(samples, seed, threads, [&](PhiloxStream& rng, std::uint64_t count) {
    HullTally t;
    for (std::uint64_t s = 0; s < count; ++s) {
      const auto blocks = sample_family_increments(model, family, rng);
      const HullMembership h = test_sample(hull_points(family, blocks), options.tol);
      if (h.inside) ++t.inside;
      if (continuous ? h.inside : h.interior) ++t.interior;
      if (h.boundary_ambiguous) ++t.ambiguous;
    }
    return t;
  });
  return {MCEstimate::from_counts(tally.inside, samples, seed, tally.ambiguous),
          MCEstimate::from_counts(tally.interior, samples, seed, tally.ambiguous)};
}

// ---------------------------------------------------------------------------
// Kernel-chamber count

namespace {

void check_chamber_shape(long n, ReflectionType group) {
  check_reflection_rank(group, n);
  if (n > kChamberCountCap) {
    throw std::out_of_range("chamber_intersection_count: n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kChamberCountCap));
  }
}

}  // namespace

long chamber_intersection_count(const Eigen::MatrixXd& increments, ReflectionType group) {
  const long n = increments.cols();
  check_chamber_shape(n, group);
  Eigen::MatrixXd m = increments;
  if (group == ReflectionType::A) {
    m.conservativeResize(m.rows() + 1, Eigen::NoChange);
    m.row(m.rows() - 1).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * sv(0)) ++r;
  }
  if (r < std::min<Eigen::Index>(m.rows(), n)) {
    throw std::runtime_error("chamber_intersection_count: increment matrix is rank deficient "
                             "(general position violated)");
  }
  if (r == n) return 0;
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(n - r);
  long count = 0;
  for (const auto& rows : chamber_orbit(WeylChamber(group, n))) {
    Eigen::MatrixXd g(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (long j = 0; j < n; ++j) g(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)].get_d();
    }
    if (cone_meets_subspace(g, kernel)) ++count;
  }
  return count;
}

long chamber_intersection_count(const RationalRows& increments, ReflectionType group) {
  if (increments.empty()) throw std::invalid_argument("chamber_intersection_count: empty matrix");
  const long n = static_cast<long>(increments[0].size());
  check_chamber_shape(n, group);
  RationalRows m = increments;
  if (group == ReflectionType::A) m.emplace_back(static_cast<std::size_t>(n), Rational(1));
  if (rank(m) < std::min<long>(static_cast<long>(m.size()), n)) {
    throw std::runtime_error("chamber_intersection_count: increment matrix is rank deficient "
                             "(general position violated)");
  }
  const RationalRows kernel = nullspace(m, static_cast<std::size_t>(n));
  if (kernel.empty()) return 0;
  long count = 0;
  for (const auto& rows : chamber_orbit(WeylChamber(group, n))) {
    RationalRows g;
    g.reserve(rows.size());
    for (const auto& r : rows) g.push_back(to_rational(r));
    if (cone_meets_subspace(g, kernel)) ++count;
  }
  return count;
}

long predicted_chamber_count(ReflectionType group, long n, long d) {
  const long codim = group == ReflectionType::A ? d + 1 : d;
  if (codim > n - 1) return 0;
  return intersected_region_count(reflection_characteristic_polynomial(group, n), codim).get_si();
}

DHullCheck d_hull_identity_check(const Eigen::MatrixXd& increments, long queries, PhiloxStream& rng, double tol) {
  const Eigen::Index n = increments.cols();
  if (n < 2) throw std::invalid_argument("d_hull_identity_check: need n >= 2");
  const WalkFamily family = WalkFamily::walk_d(n, increments.rows());
  const Eigen::MatrixXd all = hull_points(family, {increments});
  const Eigen::MatrixXd walk = all.leftCols(n);
  Eigen::MatrixXd star(all.rows(), n);
  star.leftCols(n - 1) = all.leftCols(n - 1);
  star.col(n - 1) = all.col(n);

  const Eigen::VectorXd lo = all.rowwise().minCoeff();
  const Eigen::VectorXd hi = all.rowwise().maxCoeff();
  const Eigen::VectorXd pad = 0.1 * (hi - lo) + Eigen::VectorXd::Constant(lo.size(), 1e-3);
  DHullCheck out;
  for (long q = 0; q < queries; ++q) {
    Eigen::VectorXd point(lo.size());
    for (Eigen::Index j = 0; j < lo.size(); ++j) point(j) = lo(j) - pad(j) + rng.uniform() * (hi(j) - lo(j) + 2 * pad(j));
    const auto whole = min_norm_membership(all.colwise() - point, tol);
    const auto left = min_norm_membership(walk.colwise() - point, tol);
    const auto right = min_norm_membership(star.colwise() - point, tol);
    if (whole.boundary_ambiguous || left.boundary_ambiguous || right.boundary_ambiguous) {
      ++out.ambiguous;
      continue;
    }
    ++out.checked;
    if (whole.inside != (left.inside || right.inside)) ++out.mismatches;
  }
  return out;
}

}  // namespace weylhull
