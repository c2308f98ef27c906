#include "tomolab/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tomolab/gaussian.hpp"
#include "tomolab/tomography.hpp"

namespace tomolab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLnPiE = std::log(kPi) + 1.0;

// Two prefactored log-integral terms of the q-family: the alpha exponent
// acts on the "momentum-like" density, the beta exponent on the
// "position-like" one.
double q_form_lhs(double int_alpha, double int_beta, const QParameter& q) {
  const double qv = q.q();
  return (qv - 1.0) / qv * std::log(int_alpha) +
         (qv + 1.0) / qv * std::log(int_beta);
}

}  // namespace

QParameter::QParameter(double q) : q_(q) {
  if (!std::isfinite(q) || !(q > 0.0) || !(q < 1.0)) {
    throw InvalidParameterError("QParameter: q must lie in (0, 1)");
  }
}

InequalityReport make_report(std::string name,
                             std::vector<std::pair<std::string, double>> params,
                             double lhs, double rhs, double tolerance) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(tolerance)) {
    throw InvalidInputError("InequalityReport: non-finite field");
  }
  InequalityReport report;
  report.name = std::move(name);
  report.params = std::move(params);
  report.lhs = lhs;
  report.rhs = rhs;
  report.margin = lhs - rhs;
  report.tolerance = tolerance;
  report.satisfied = report.margin >= -tolerance;
  return report;
}

double renyi_rhs(const QParameter& q, int n_modes) {
  if (n_modes < 1) {
    throw InvalidInputError("renyi_rhs: n_modes must be >= 1");
  }
  const double qv = q.q();
  return 0.5 * n_modes *
         ((qv - 1.0) / qv * std::log(kPi * (1.0 - qv)) +
          (qv + 1.0) / qv * std::log(kPi * (1.0 + qv)));
}

InequalityReport check_shannon_position_momentum(const State& state,
                                                 int modes,
                                                 const CheckOptions& opts) {
  if (modes != n_modes(state)) {
    throw WrongArityError(
        "check_shannon_position_momentum: n_modes does not match the state");
  }
  MarginalEntropies me = std::visit(
      [&](const auto& s) -> MarginalEntropies {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSuperposition>) {
          return position_momentum_entropies(s, opts.grid);
        } else if constexpr (std::is_same_v<T, MultimodeProductState>) {
          return position_momentum_entropies(s, opts.multimode_axis);
        } else {
          return position_momentum_entropies(s);
        }
      },
      state);
  double tol = opts.tolerance_grid;
  if (std::holds_alternative<GaussianStateSpec>(state)) {
    tol = opts.tolerance_analytic;
  } else if (std::holds_alternative<MultimodeProductState>(state)) {
    tol = opts.tolerance_multimode;
  }
  return make_report("shannon_position_momentum",
                     {{"n_modes", double(modes)}},
                     me.position.nats + me.momentum.nats, modes * kLnPiE,
                     opts.pick(tol));
}

InequalityReport check_optical_shannon(const OneModeState& state,
                                       RotationAngle theta,
                                       const CheckOptions& opts) {
  const RotationAngle conj = theta.plus_quarter_turn();
  double lhs;
  double tol;
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    const auto g1 = projected_covariance(*gauss, SymplecticFrame::optical(theta));
    const auto g2 = projected_covariance(*gauss, SymplecticFrame::optical(conj));
    lhs = gaussian_shannon_entropy(g1).nats + gaussian_shannon_entropy(g2).nats;
    tol = opts.tolerance_analytic;
  } else {
    lhs = shannon_entropy(optical_tomogram(state, theta, opts.grid)).nats +
          shannon_entropy(optical_tomogram(state, conj, opts.grid)).nats;
    tol = opts.tolerance_grid;
  }
  return make_report("optical_shannon", {{"theta", theta.radians()}}, lhs,
                     kLnPiE, opts.pick(tol));
}

InequalityReport check_optical_shannon(const SampledDensity& w_theta,
                                       const SampledDensity& w_conjugate,
                                       double theta, double tolerance) {
  const double lhs =
      shannon_entropy(w_theta).nats + shannon_entropy(w_conjugate).nats;
  return make_report("optical_shannon", {{"theta", theta}}, lhs, kLnPiE,
                     tolerance);
}

InequalityReport check_renyi_position_momentum(const OneModeState& state,
                                               const QParameter& q,
                                               const CheckOptions& opts) {
  double int_alpha;
  double int_beta;
  double tol;
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    if (gauss->n_modes() != 1) {
      throw WrongArityError(
          "check_renyi_position_momentum: Gaussian state must be one-mode");
    }
    const auto gp = projected_covariance(*gauss, SymplecticFrame(0.0, 1.0));
    const auto gq = projected_covariance(*gauss, SymplecticFrame(1.0, 0.0));
    int_alpha = gaussian_renyi_integral(gp, q.alpha());
    int_beta = gaussian_renyi_integral(gq, q.beta());
    tol = opts.tolerance_analytic;
  } else {
    const GridWavefunction psi = std::visit(
        [&](const auto& s) -> GridWavefunction {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, FockSuperposition>) {
            return sample_wavefunction(s, opts.grid);
          } else if constexpr (std::is_same_v<T, GridWavefunction>) {
            return s;
          } else {
            throw InvalidInputError("unreachable: Gaussian handled above");
          }
        },
        state);
    const SampledDensity pos(psi.grid(), psi.probability());
    const SampledDensity mom(psi.grid(),
                             momentum_representation(psi).probability());
    int_alpha = renyi_integral(mom, q.alpha());
    int_beta = renyi_integral(pos, q.beta());
    tol = opts.tolerance_grid;
  }
  return make_report("renyi_position_momentum", {{"q", q.q()}},
                     q_form_lhs(int_alpha, int_beta, q), renyi_rhs(q, 1),
                     opts.pick(tol));
}

InequalityReport check_optical_renyi(const OneModeState& state,
                                     RotationAngle theta, const QParameter& q,
                                     const CheckOptions& opts) {
  const RotationAngle conj = theta.plus_quarter_turn();
  double int_alpha;
  double int_beta;
  double tol;
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    const auto ga = projected_covariance(*gauss, SymplecticFrame::optical(conj));
    const auto gb = projected_covariance(*gauss, SymplecticFrame::optical(theta));
    int_alpha = gaussian_renyi_integral(ga, q.alpha());
    int_beta = gaussian_renyi_integral(gb, q.beta());
    tol = opts.tolerance_analytic;
  } else {
    int_alpha =
        renyi_integral(optical_tomogram(state, conj, opts.grid), q.alpha());
    int_beta =
        renyi_integral(optical_tomogram(state, theta, opts.grid), q.beta());
    tol = opts.tolerance_grid;
  }
  return make_report("optical_renyi",
                     {{"theta", theta.radians()}, {"q", q.q()}},
                     q_form_lhs(int_alpha, int_beta, q), renyi_rhs(q, 1),
                     opts.pick(tol));
}

InequalityReport check_optical_renyi(const SampledDensity& w_theta,
                                     const SampledDensity& w_conjugate,
                                     double theta, const QParameter& q,
                                     double tolerance) {
  const double int_alpha = renyi_integral(w_conjugate, q.alpha());
  const double int_beta = renyi_integral(w_theta, q.beta());
  return make_report("optical_renyi", {{"theta", theta}, {"q", q.q()}},
                     q_form_lhs(int_alpha, int_beta, q), renyi_rhs(q, 1),
                     tolerance);
}

InequalityReport check_symplectic_renyi(const OneModeState& state, double r,
                                        RotationAngle theta,
                                        const QParameter& q,
                                        const CheckOptions& opts) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DegenerateFrameError("check_symplectic_renyi: requires r > 0");
  }
  const double th = theta.radians();
  const SymplecticFrame beta_frame(r * std::cos(th), r * std::sin(th));
  const SymplecticFrame alpha_frame = beta_frame.conjugate();

  double int_alpha;
  double int_beta;
  double tol;
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    int_alpha = gaussian_renyi_integral(projected_covariance(*gauss, alpha_frame),
                                        q.alpha());
    int_beta = gaussian_renyi_integral(projected_covariance(*gauss, beta_frame),
                                       q.beta());
    tol = opts.tolerance_analytic;
  } else {
    const SampledDensity wa =
        symplectic_tomogram(state, alpha_frame, opts.grid.scaled(1.0 / r));
    const SampledDensity wb =
        symplectic_tomogram(state, beta_frame, opts.grid.scaled(r));
    int_alpha = renyi_integral(wa, q.alpha());
    int_beta = renyi_integral(wb, q.beta());
    tol = opts.tolerance_grid;
  }
  return make_report(
      "symplectic_renyi",
      {{"theta", th}, {"q", q.q()}, {"r", r}},
      q_form_lhs(int_alpha, int_beta, q), renyi_rhs(q, 1), opts.pick(tol));
}

InequalityReport check_multimode_renyi(const State& state,
                                       std::span<const SymplecticFrame> frames,
                                       const QParameter& q,
                                       TomogramVariant variant,
                                       const CheckOptions& opts) {
  const int modes = n_modes(state);
  if (static_cast<int>(frames.size()) != modes) {
    throw WrongArityError("check_multimode_renyi: one frame per mode required");
  }

  std::vector<SymplecticFrame> beta_frames;
  beta_frames.reserve(frames.size());
  for (const auto& f : frames) {
    if (variant == TomogramVariant::optical) {
      beta_frames.push_back(SymplecticFrame(f.mu / f.radius(), f.nu / f.radius()));
    } else {
      beta_frames.push_back(f);
    }
  }
  std::vector<SymplecticFrame> alpha_frames;
  alpha_frames.reserve(frames.size());
  for (const auto& f : beta_frames) alpha_frames.push_back(f.conjugate());

  std::vector<std::pair<std::string, double>> params{{"n_modes", double(modes)},
                                                     {"q", q.q()}};
  for (size_t k = 0; k < beta_frames.size(); ++k) {
    params.emplace_back("theta_" + std::to_string(k + 1),
                        beta_frames[k].angle());
    params.emplace_back("r_" + std::to_string(k + 1), beta_frames[k].radius());
  }
  const std::string name = variant == TomogramVariant::optical
                               ? "multimode_renyi_optical"
                               : "multimode_renyi_symplectic";

  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    // Closed-form path: exact saturation checks for Gaussian states.
    const double int_alpha = gaussian_renyi_integral(
        projected_covariance(*gauss, alpha_frames), q.alpha());
    const double int_beta = gaussian_renyi_integral(
        projected_covariance(*gauss, beta_frames), q.beta());
    return make_report(name, std::move(params),
                       q_form_lhs(int_alpha, int_beta, q),
                       renyi_rhs(q, modes), opts.pick(opts.tolerance_analytic));
  }

  std::vector<ModeGrid> alpha_axes;
  std::vector<ModeGrid> beta_axes;
  for (size_t k = 0; k < beta_frames.size(); ++k) {
    alpha_axes.push_back(opts.multimode_axis.scaled(alpha_frames[k].radius()));
    beta_axes.push_back(opts.multimode_axis.scaled(beta_frames[k].radius()));
  }
  const MultimodeTomogram wa = multimode_tomogram(state, alpha_frames, alpha_axes);
  const MultimodeTomogram wb = multimode_tomogram(state, beta_frames, beta_axes);
  const double int_alpha = renyi_integral(wa.density, q.alpha());
  const double int_beta = renyi_integral(wb.density, q.beta());
  return make_report(name, std::move(params),
                     q_form_lhs(int_alpha, int_beta, q), renyi_rhs(q, modes),
                     opts.pick(opts.tolerance_multimode));
}

std::vector<InequalityReport> sweep_reports(const OneModeState& state,
                                            const std::vector<double>& thetas,
                                            const std::vector<double>& qs,
                                            const std::vector<CheckKind>& kinds,
                                            const CheckOptions& opts) {
  if (kinds.empty()) {
    throw InvalidInputError("sweep_reports: no checks requested");
  }
  if (thetas.empty()) {
    throw InvalidInputError("sweep_reports: empty theta grid");
  }
  if (qs.empty()) {
    throw InvalidInputError("sweep_reports: empty q grid");
  }
  const State full_state = std::visit(
      [](const auto& s) -> State { return s; }, state);

  std::vector<InequalityReport> reports;
  auto attach_context = [](const TomolabError& err, const std::string& name,
                           double theta, double q) -> std::string {
    std::ostringstream out;
    out << name << " (theta=" << theta << ", q=" << q << "): " << err.what();
    return out.str();
  };

  for (const CheckKind kind : kinds) {
    switch (kind) {
      case CheckKind::shannon_position_momentum:
        try {
          reports.push_back(check_shannon_position_momentum(full_state, 1, opts));
        } catch (const TomolabError& err) {
          throw InvalidInputError(
              attach_context(err, "shannon_position_momentum", 0.0, 0.0));
        }
        break;
      case CheckKind::optical_shannon:
        for (double theta : thetas) {
          try {
            reports.push_back(
                check_optical_shannon(state, RotationAngle(theta), opts));
          } catch (const TomolabError& err) {
            throw InvalidInputError(
                attach_context(err, "optical_shannon", theta, 0.0));
          }
        }
        break;
      case CheckKind::optical_renyi:
        for (double theta : thetas) {
          for (double q : qs) {
            try {
              reports.push_back(check_optical_renyi(state, RotationAngle(theta),
                                                    QParameter(q), opts));
            } catch (const TomolabError& err) {
              throw InvalidInputError(
                  attach_context(err, "optical_renyi", theta, q));
            }
          }
        }
        break;
      case CheckKind::symplectic_renyi:
        for (double theta : thetas) {
          for (double q : qs) {
            try {
              reports.push_back(check_symplectic_renyi(
                  state, opts.frame_radius, RotationAngle(theta), QParameter(q),
                  opts));
            } catch (const TomolabError& err) {
              throw InvalidInputError(
                  attach_context(err, "symplectic_renyi", theta, q));
            }
          }
        }
        break;
    }
  }
  return reports;
}

}  // namespace tomolab
