#include "qmono/roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qmono/rng.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

// Objective contribution of one sub-normalized member a = sqrt(p) * A with A
// the normalized amplitude matrix. Both measures absorb p, so the ensemble
// average is just the sum of member terms:
//   G:   p * g(A) = d * |det a|^(2/d)
//   C_2: p * C2(A) = sqrt(e_2 of the squared singular values of a)
enum class MemberMeasure { kGConcurrence, kC2 };

Complex small_det(const Eigen::MatrixXcd& a) {
  switch (a.rows()) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default:
      return Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant();
  }
}

double c2_member_term(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd gram = a.adjoint() * a;
  const double t1 = gram.trace().real();
  const double t2 = gram.squaredNorm();  // tr(gram^2) for Hermitian gram
  return std::sqrt(std::max(0.0, 0.5 * (t1 * t1 - t2)));
}

double member_term(const Eigen::MatrixXcd& a, int d, MemberMeasure measure) {
  if (measure == MemberMeasure::kGConcurrence)
    return d * std::pow(std::abs(small_det(a)), 2.0 / d);
  return c2_member_term(a);
}

struct Problem {
  int d = 0;
  int r = 0;
  int m = 0;
  std::vector<Eigen::MatrixXcd> canonical;  // sub-normalized eigen-members
};

Problem decompose_target(const DensityMatrix& rho, std::pair<int, int> dims,
                         const RoofConfig& config) {
  if (dims.first != dims.second)
    throw std::invalid_argument("roof: state space must be square (d x d)");
  const int d = dims.first;
  if (d < 1 || static_cast<long>(d) * d != rho.dim())
    throw std::invalid_argument("roof: rho dimension does not match d x d");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries());
  const Eigen::VectorXd& evals = solver.eigenvalues();  // ascending
  const double rank_cut = tol::kRankRel * rho.entries().trace().real();

  Problem prob;
  prob.d = d;
  for (int i = static_cast<int>(evals.size()) - 1; i >= 0; --i) {
    if (evals[i] <= rank_cut) break;
    const double scale = std::sqrt(evals[i]);
    Eigen::MatrixXcd slice(d, d);
    const Eigen::VectorXcd vec = solver.eigenvectors().col(i);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) slice(a, b) = scale * vec[a * d + b];
    prob.canonical.push_back(std::move(slice));
  }
  prob.r = static_cast<int>(prob.canonical.size());

  prob.m = config.ensemble_size == 0 ? prob.r : config.ensemble_size;
  if (prob.m < prob.r)
    throw std::invalid_argument("roof: ensemble size " + std::to_string(prob.m) +
                                " cannot realize a rank-" + std::to_string(prob.r) +
                                " state");
  if (prob.m > prob.r * prob.r)
    throw std::invalid_argument("roof: ensemble size above r^2 is not supported");
  return prob;
}

// Sub-normalized member matrices, one per row of the mixing matrix.
std::vector<Eigen::MatrixXcd> assemble_members(const Problem& prob,
                                               const Eigen::MatrixXcd& mixing) {
  std::vector<Eigen::MatrixXcd> members(prob.m);
  for (int h = 0; h < prob.m; ++h) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(prob.d, prob.d);
    for (int l = 0; l < prob.r; ++l) a += mixing(h, l) * prob.canonical[l];
    members[h] = std::move(a);
  }
  return members;
}

// Re-orthonormalizes a drifted mixing matrix. Phases of the R diagonal are
// folded back in so the result stays entrywise close to the input.
Eigen::MatrixXcd polish_columns(const Eigen::MatrixXcd& mixing) {
  const int m = static_cast<int>(mixing.rows());
  const int r = static_cast<int>(mixing.cols());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(mixing);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, r);
  for (int j = 0; j < r; ++j) {
    const Complex rjj = qr.matrixQR()(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

// Exact objective used both to pick the best restart and as the reported
// bound. For G the member terms go through singular values, matching the
// g_concurrence_pure route up to roundoff.
double exact_average(const Problem& prob, const std::vector<Eigen::MatrixXcd>& members,
                     MemberMeasure measure) {
  double total = 0.0;
  for (const auto& a : members) {
    if (measure == MemberMeasure::kGConcurrence) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
      double prod = 1.0;
      for (int i = 0; i < prob.d; ++i) {
        const double s = svd.singularValues()[i];
        prod *= s * s;
      }
      total += prob.d * std::pow(prod, 1.0 / prob.d);
    } else {
      total += c2_member_term(a);
    }
  }
  return total;
}

constexpr double kObjectiveFloor = 5e-15;  // cannot meaningfully improve below this
constexpr int kSweep = 200;
constexpr int kAnnihilateEvery = 3;

struct RestartOutcome {
  Eigen::MatrixXcd mixing;
  bool converged = false;
};

// Coefficients of p(z) = det(a - z * b), degree <= d, sampled at the
// (d+1)-th roots of unity and inverted by a DFT.
std::vector<Complex> pencil_coefficients(const Eigen::MatrixXcd& a,
                                         const Eigen::MatrixXcd& b, int d) {
  const int n = d + 1;
  std::vector<Complex> samples(n);
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / n;
    const Complex z(std::cos(angle), std::sin(angle));
    samples[j] = small_det(a - z * b);
  }
  std::vector<Complex> coeffs(n);
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * j * k / n;
      acc += samples[j] * Complex(std::cos(angle), std::sin(angle));
    }
    coeffs[k] = acc / static_cast<double>(n);
  }
  return coeffs;
}

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  double max_mag = 0.0;
  for (const Complex& c : coeffs) max_mag = std::max(max_mag, std::abs(c));
  if (max_mag == 0.0) return {};
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[deg]) < 1e-13 * max_mag) --deg;
  if (deg < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + deg);
  return roots;
}

// Rotation of the (h1, h2) member pair that zeroes det of the first member
// exactly: z = u tan(theta) runs over all of C, and the rotated determinant
// is cos^d(theta) * p(z). Returns the best improving rotation, if any.
struct AnnihilationMove {
  bool found = false;
  double ct = 1.0, st = 0.0;
  Complex u = 1.0;
  double v1 = 0.0, v2 = 0.0;
};

AnnihilationMove best_annihilation(const Eigen::MatrixXcd& a1,
                                   const Eigen::MatrixXcd& a2, int d,
                                   double current_pair_value) {
  AnnihilationMove best;
  double best_total = current_pair_value;
  for (const Complex& z : polynomial_roots(pencil_coefficients(a1, a2, d))) {
    const double t = std::abs(z);
    const double ct = 1.0 / std::sqrt(1.0 + t * t);
    const double st = t * ct;
    const Complex u = t > 0.0 ? z / t : Complex(1.0, 0.0);
    const Eigen::MatrixXcd cand1 = ct * a1 - (u * st) * a2;
    const Eigen::MatrixXcd cand2 = (std::conj(u) * st) * a1 + ct * a2;
    const double v1 = d * std::pow(std::abs(small_det(cand1)), 2.0 / d);
    const double v2 = d * std::pow(std::abs(small_det(cand2)), 2.0 / d);
    if (v1 + v2 < best_total) {
      best_total = v1 + v2;
      best = {true, ct, st, u, v1, v2};
    }
  }
  return best;
}

// adj(a)^T entries are the signed minors; d(det(a + eps b))/d(eps) = tr(adj(a) b).
Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      adj(j, i) = sign * small_det(minor);
    }
  return adj;
}

// One damped Gauss-Newton step toward det(member_h) = 0 for every member,
// over the unitary left-action on the mixing matrix. Solves the linearized
// system J xi = -F for the least-norm anti-Hermitian generator xi and
// retracts I + t*xi back onto the unitary group. Returns the accepted
// left-factor, or an empty matrix when no damping level improves.
Eigen::MatrixXcd newton_zero_step(const std::vector<Eigen::MatrixXcd>& members,
                                  int d, double current_objective,
                                  double& objective_out) {
  const int m = static_cast<int>(members.size());
  const int unknowns = m * m;  // dim of u(m): m(m-1) off-diagonal + m diagonal reals

  Eigen::MatrixXcd jac(m, m);
  Eigen::VectorXd rhs(2 * m);
  for (int h = 0; h < m; ++h) {
    const Eigen::MatrixXcd adj = adjugate(members[h]);
    for (int l = 0; l < m; ++l) jac(h, l) = (adj * members[l]).trace();
    const Complex f = small_det(members[h]);
    rhs[2 * h] = -f.real();
    rhs[2 * h + 1] = -f.imag();
  }

  // Real parameterization of xi: for p < q the pair (x, y) with
  // xi_pq = x + iy, xi_qp = -x + iy; then the diagonal xi_pp = iz.
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(2 * m, unknowns);
  int col = 0;
  const auto fill = [&](int p, int q, const Complex& gpq, const Complex& gqp) {
    const Complex row_p = jac(p, q) * gpq;
    const Complex row_q = jac(q, p) * gqp;
    system(2 * p, col) += row_p.real();
    system(2 * p + 1, col) += row_p.imag();
    system(2 * q, col) += row_q.real();
    system(2 * q + 1, col) += row_q.imag();
  };
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      fill(p, q, Complex(1, 0), Complex(-1, 0));
      ++col;
      fill(p, q, Complex(0, 1), Complex(0, 1));
      ++col;
    }
  for (int p = 0; p < m; ++p) {
    const Complex row = jac(p, p) * Complex(0, 1);
    system(2 * p, col) += row.real();
    system(2 * p + 1, col) += row.imag();
    ++col;
  }

  const Eigen::VectorXd x =
      system.completeOrthogonalDecomposition().solve(rhs);

  Eigen::MatrixXcd xi = Eigen::MatrixXcd::Zero(m, m);
  col = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      xi(p, q) += Complex(x[col], x[col + 1]);
      xi(q, p) += Complex(-x[col], x[col + 1]);
      col += 2;
    }
  for (int p = 0; p < m; ++p) xi(p, p) = Complex(0, x[col++]);

  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m, m);
  for (const double damp : {1.0, 0.5, 0.25}) {
    const Eigen::MatrixXcd q = polish_columns(eye + damp * xi);
    double objective = 0.0;
    for (int h = 0; h < m; ++h) {
      Eigen::MatrixXcd rotated = Eigen::MatrixXcd::Zero(d, d);
      for (int l = 0; l < m; ++l) rotated += q(h, l) * members[l];
      objective += d * std::pow(std::abs(small_det(rotated)), 2.0 / d);
    }
    if (objective < current_objective) {
      objective_out = objective;
      return q;
    }
  }
  return Eigen::MatrixXcd();
}

// Local search over the column-orthonormal manifold: random two-row complex
// Givens rotations with an adaptive step size, interleaved with deterministic
// determinant-annihilation rotations for the G measure. Left-rotations
// preserve column orthonormality exactly and touch only two members per move.
RestartOutcome run_restart(const Problem& prob, Eigen::MatrixXcd start,
                           SeededRng& rng, const RoofConfig& config,
                           MemberMeasure measure) {
  const int m = prob.m;
  Eigen::MatrixXcd mixing = std::move(start);
  std::vector<Eigen::MatrixXcd> members = assemble_members(prob, mixing);
  std::vector<double> value(m);
  double objective = 0.0;
  for (int h = 0; h < m; ++h) {
    value[h] = member_term(members[h], prob.d, measure);
    objective += value[h];
  }

  // The objective is non-increasing and bounded by zero, so once it falls
  // below the tolerance no sweep can ever improve it by the tolerance again.
  const double settled = std::max(config.tol, kObjectiveFloor);

  RestartOutcome out;
  if (m < 2 || config.max_iters < 1 || objective <= settled) {
    out.mixing = std::move(mixing);
    out.converged = true;
    return out;
  }

  const int sweep = std::min(kSweep, config.max_iters);
  double sweep_ref = objective;
  double step = 0.5;
  Eigen::MatrixXcd cand1(prob.d, prob.d), cand2(prob.d, prob.d);
  Eigen::RowVectorXcd row1(prob.r);
  int pair_cursor = 0;

  const auto apply_rotation = [&](int h1, int h2, double ct, double st,
                                  const Complex& u, double v1, double v2) {
    row1 = ct * mixing.row(h1) - (u * st) * mixing.row(h2);
    mixing.row(h2) = (std::conj(u) * st) * mixing.row(h1) + ct * mixing.row(h2);
    mixing.row(h1) = row1;
    objective += v1 + v2 - value[h1] - value[h2];
    value[h1] = v1;
    value[h2] = v2;
  };

  for (int it = 1; it <= config.max_iters; ++it) {
    int h1 = static_cast<int>(rng.next_u64() % m);
    int h2 = static_cast<int>(rng.next_u64() % (m - 1));
    if (h2 >= h1) ++h2;

    const double theta = step * rng.normal();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    const Complex u(std::cos(phase), std::sin(phase));

    // Probe the drawn direction at three angle scales and keep the best
    // improvement; the winning scale feeds back into the step size, so the
    // step tracks the local valley width (trust-region style).
    bool accepted = false;
    double best_gain = 0.0, best_ct = 1.0, best_st = 0.0, best_v1 = 0.0,
           best_v2 = 0.0, best_scale = 1.0;
    for (const double scale : {1.0, 0.2, 5.0}) {
      const double ct = std::cos(scale * theta);
      const double st = std::sin(scale * theta);
      // Members depend linearly on their mixing row, so the rotated members
      // are the same two-row combination as the rows themselves.
      cand1 = ct * members[h1] - (u * st) * members[h2];
      cand2 = (std::conj(u) * st) * members[h1] + ct * members[h2];
      const double v1 = member_term(cand1, prob.d, measure);
      const double v2 = member_term(cand2, prob.d, measure);
      const double gain = value[h1] + value[h2] - v1 - v2;
      if (gain > best_gain) {
        accepted = true;
        best_gain = gain;
        best_ct = ct;
        best_st = st;
        best_v1 = v1;
        best_v2 = v2;
        best_scale = scale;
      }
    }

    if (accepted) {
      cand1 = best_ct * members[h1] - (u * best_st) * members[h2];
      cand2 = (std::conj(u) * best_st) * members[h1] + best_ct * members[h2];
      members[h1].swap(cand1);
      members[h2].swap(cand2);
      apply_rotation(h1, h2, best_ct, best_st, u, best_v1, best_v2);
      step = std::clamp(step * best_scale * 1.3, 1e-12, 1.5);
    } else {
      step = std::max(step * 0.5, 1e-12);
    }

    if (measure == MemberMeasure::kGConcurrence && it % kAnnihilateEvery == 0) {
      const int a1 = pair_cursor % m;
      const int a2 = (a1 + 1 + pair_cursor / m % (m - 1)) % m;
      ++pair_cursor;
      const AnnihilationMove move =
          best_annihilation(members[a1], members[a2], prob.d, value[a1] + value[a2]);
      if (move.found) {
        cand1 = move.ct * members[a1] - (move.u * move.st) * members[a2];
        cand2 = (std::conj(move.u) * move.st) * members[a1] + move.ct * members[a2];
        members[a1].swap(cand1);
        members[a2].swap(cand2);
        apply_rotation(a1, a2, move.ct, move.st, move.u, move.v1, move.v2);
      }
    }

    if (it % sweep == 0 && measure == MemberMeasure::kGConcurrence &&
        objective > settled) {
      // Gauss-Newton burst toward a joint determinant zero; quadratic where
      // the random walk crawls, harmless when no zero is reachable.
      for (int burst = 0; burst < 10 && objective > settled; ++burst) {
        double improved = 0.0;
        const Eigen::MatrixXcd q =
            newton_zero_step(members, prob.d, objective, improved);
        if (q.size() == 0) break;
        mixing = q * mixing;
        std::vector<Eigen::MatrixXcd> rotated(m);
        for (int h = 0; h < m; ++h) {
          rotated[h] = Eigen::MatrixXcd::Zero(prob.d, prob.d);
          for (int l = 0; l < m; ++l) rotated[h] += q(h, l) * members[l];
        }
        members = std::move(rotated);
        objective = 0.0;
        for (int h = 0; h < m; ++h) {
          value[h] = member_term(members[h], prob.d, measure);
          objective += value[h];
        }
      }
    }

    if (objective <= settled) {
      out.converged = true;
      break;
    }
    if (it % sweep == 0) {
      if (sweep_ref - objective < config.tol) {
        out.converged = true;
        break;
      }
      sweep_ref = objective;
    }
  }
  out.mixing = std::move(mixing);
  return out;
}

struct RawRoof {
  double bound = 0.0;
  Eigen::MatrixXcd mixing;
  int restarts_used = 0;
  bool converged = false;
};

Eigen::MatrixXcd canonical_start(int m, int r) {
  Eigen::MatrixXcd start = Eigen::MatrixXcd::Zero(m, r);
  start.topRows(r) = Eigen::MatrixXcd::Identity(r, r);
  return start;
}

Eigen::MatrixXcd fourier_start(int m, int r) {
  Eigen::MatrixXcd start(m, r);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < r; ++k) {
      const double angle = 2.0 * std::numbers::pi * j * k / m;
      start(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  return start;
}

// Best restart wins by its exact recomputed average; ties keep the earlier
// restart, so the reported bound is non-increasing in the restart budget.
RawRoof minimize_roof(const Problem& prob, const RoofConfig& config,
                      MemberMeasure measure) {
  if (config.restarts < 1)
    throw std::invalid_argument("roof: need at least one restart");

  RawRoof best;
  best.bound = std::numeric_limits<double>::infinity();
  for (int rst = 0; rst < config.restarts; ++rst) {
    SeededRng rng(derive_seed(config.seed, static_cast<std::uint64_t>(rst)));
    Eigen::MatrixXcd start;
    if (rst == 0)
      start = canonical_start(prob.m, prob.r);
    else if (rst == 1 && prob.m >= 2)
      start = fourier_start(prob.m, prob.r);
    else
      start = haar_random_isometry(prob.m, prob.r, rng);

    RestartOutcome outcome = run_restart(prob, std::move(start), rng, config, measure);
    const Eigen::MatrixXcd polished = polish_columns(outcome.mixing);
    const double bound = exact_average(prob, assemble_members(prob, polished), measure);

    best.restarts_used = rst + 1;
    if (bound < best.bound) {
      best.bound = bound;
      best.mixing = polished;
      best.converged = outcome.converged;
    }
    // Further restarts cannot improve a bound already below the convergence
    // tolerance by more than that tolerance.
    if (best.bound <= std::max(config.tol, kObjectiveFloor)) {
      best.converged = true;
      break;
    }
  }
  return best;
}

}  // namespace

EnsembleDecomposition::EnsembleDecomposition(Eigen::VectorXd probabilities_in,
                                             std::vector<BipartitePureState> members_in,
                                             Eigen::MatrixXcd mixing_in)
    : probabilities(std::move(probabilities_in)),
      members(std::move(members_in)),
      mixing(std::move(mixing_in)) {
  if (static_cast<size_t>(probabilities.size()) != members.size())
    throw std::invalid_argument(
        "EnsembleDecomposition: probability/member count mismatch");
  if (probabilities.size() < 1)
    throw std::invalid_argument("EnsembleDecomposition: empty ensemble");
  double sum = 0.0;
  for (Eigen::Index h = 0; h < probabilities.size(); ++h) {
    if (probabilities[h] < 0.0)
      throw std::domain_error("EnsembleDecomposition: negative probability");
    sum += probabilities[h];
  }
  if (std::abs(sum - 1.0) > tol::kUnitNorm)
    throw std::domain_error("EnsembleDecomposition: probabilities do not sum to 1");
  const Eigen::MatrixXcd gram = mixing.adjoint() * mixing;
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(mixing.cols(), mixing.cols());
  if ((gram - eye).cwiseAbs().maxCoeff() > tol::kOrthonormal)
    throw std::domain_error("EnsembleDecomposition: mixing columns not orthonormal");
}

double average_g(const EnsembleDecomposition& decomposition) {
  double avg = 0.0;
  for (size_t h = 0; h < decomposition.members.size(); ++h)
    avg += decomposition.probabilities[static_cast<Eigen::Index>(h)] *
           g_concurrence_pure(decomposition.members[h]).g;
  return avg;
}

double reconstruction_error(const EnsembleDecomposition& decomposition,
                            const DensityMatrix& rho) {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (size_t h = 0; h < decomposition.members.size(); ++h) {
    const Eigen::VectorXcd v = decomposition.members[h].flattened();
    sum += decomposition.probabilities[static_cast<Eigen::Index>(h)] * v * v.adjoint();
  }
  const Eigen::VectorXd eigs =
      hermitian_eigenvalues(Eigen::MatrixXcd(sum - rho.entries()));
  return eigs.cwiseAbs().maxCoeff();
}

RoofResult roof_upper_bound(const DensityMatrix& rho, std::pair<int, int> dims,
                            const RoofConfig& config) {
  const Problem prob = decompose_target(rho, dims, config);
  const RawRoof raw = minimize_roof(prob, config, MemberMeasure::kGConcurrence);
  const int d = prob.d;

  std::vector<double> weights;
  std::vector<BipartitePureState> members;
  for (const Eigen::MatrixXcd& a : assemble_members(prob, raw.mixing)) {
    const double weight = a.squaredNorm();
    if (weight <= 1e-30) continue;  // zero rows appear only when m > r
    weights.push_back(weight);
    members.emplace_back(std::make_pair(d, d), a / a.norm());
  }

  Eigen::VectorXd p(static_cast<Eigen::Index>(weights.size()));
  for (size_t h = 0; h < weights.size(); ++h)
    p[static_cast<Eigen::Index>(h)] = weights[h];

  RoofResult result{GValue{},
                    EnsembleDecomposition(p, std::move(members), raw.mixing),
                    raw.restarts_used, raw.converged, 0};

  double bound = 0.0;
  for (size_t h = 0; h < result.best_decomposition.members.size(); ++h) {
    const double g = g_concurrence_pure(result.best_decomposition.members[h]).g;
    if (g <= 1e-9) ++result.zero_g_member_count;
    bound += p[static_cast<Eigen::Index>(h)] * g;
  }
  result.upper_bound.g = bound;
  result.upper_bound.g_pow_d = std::pow(bound, d);

  const double recon = reconstruction_error(result.best_decomposition, rho);
  if (recon > tol::kReconstruction)
    throw std::domain_error("roof: decomposition fails to reconstruct rho (error " +
                            std::to_string(recon) + ")");
  return result;
}

double c2_roof_upper_bound(const DensityMatrix& rho, std::pair<int, int> dims,
                           const RoofConfig& config) {
  const Problem prob = decompose_target(rho, dims, config);
  return minimize_roof(prob, config, MemberMeasure::kC2).bound;
}

int decomposition_profile(const RoofResult& result, double eps) {
  int count = 0;
  for (const auto& member : result.best_decomposition.members)
    if (g_concurrence_pure(member).g > eps) ++count;
  return count;
}

}  // namespace qmono
