#include "splitnlc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "splitnlc/units.hpp"

namespace splitnlc::analytic {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this value the coherence factor is treated as exactly zero and the
// piecewise limit forms are used; the exponent 1/eps overflows long before.
constexpr double kEpsilonTiny = 1e-9;

// Empirical dB offsets of the two regime-boundary inequalities.
constexpr double kTrxRegimeOffsetDb = 6.5;
constexpr double kAseRegimeOffsetDb = 9.5;

double ipow_coherent(double base, double epsilon) {
  return base <= 0.0 ? 0.0 : std::pow(base, 1.0 + epsilon);
}

// sum_{i=1}^{k} i^(1+eps); empty when k < 1.
double power_sum(int k, double epsilon) {
  double s = 0.0;
  for (int i = 1; i <= k; ++i) s += std::pow(static_cast<double>(i), 1.0 + epsilon);
  return s;
}

void check_split_range(int num_spans, int x) {
  if (x < 0 || x > num_spans)
    throw std::domain_error("split X must lie in [0, num_spans]");
}

// log of (1-kr)^(-1/eps) + kr^(-1/eps), evaluated stably for small eps.
double log_sum_inverse_powers(double kappa_r, double epsilon) {
  const double la = -std::log1p(-kappa_r) / epsilon;  // log of (1-kr)^(-1/eps)
  const double lb = -std::log(kappa_r) / epsilon;
  const double m = std::max(la, lb);
  return m + std::log1p(std::exp(std::min(la, lb) - m));
}

}  // namespace

void LinkParams::validate() const {
  if (num_spans < 1) throw std::domain_error("num_spans must be >= 1");
  if (!(eta_1_w2 > 0.0)) throw std::domain_error("eta must be positive");
  if (!(p_ase_w > 0.0)) throw std::domain_error("p_ase must be positive");
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::domain_error("epsilon must lie in [0, 1)");
  if (!(span_length_km > 0.0)) throw std::domain_error("span length must be positive");
}

void TrxParams::validate() const {
  if (!(snr_trx > 0.0)) throw std::domain_error("snr_trx must be positive");
  if (!(kappa_r >= 0.0 && kappa_r <= 1.0))
    throw std::domain_error("kappa_r must lie in [0, 1]");
}

double TrxParams::snr_tx() const {
  return kappa_r >= 1.0 ? kInf : snr_trx / (1.0 - kappa_r);
}

double TrxParams::snr_rx() const {
  return kappa_r <= 0.0 ? kInf : snr_trx / kappa_r;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::TrxDominated: return "trx-dominated";
    case Regime::AseDominated: return "ase-dominated";
    case Regime::Mixed: return "mixed";
  }
  return "?";
}

double xi_trx(int num_spans, int x_tx_spans, double kappa_r, double epsilon) {
  check_split_range(num_spans, x_tx_spans);
  return (1.0 - kappa_r) * ipow_coherent(x_tx_spans, epsilon) +
         kappa_r * ipow_coherent(num_spans - x_tx_spans, epsilon);
}

double xi_ase(int num_spans, int x_tx_spans, double epsilon) {
  check_split_range(num_spans, x_tx_spans);
  return power_sum(x_tx_spans - 1, epsilon) +
         power_sum(num_spans - x_tx_spans, epsilon);
}

namespace {

double snr_denominator(double p, const LinkParams& link, const TrxParams& trx,
                       double xt, double xa, double extra_cubic) {
  const double kappa = std::isinf(trx.snr_trx) ? 0.0 : trx.kappa();
  return kappa * p + link.num_spans * link.p_ase_w +
         3.0 * link.eta_1_w2 * (kappa * xt * p + xa * link.p_ase_w) * p * p +
         extra_cubic * p * p * p;
}

}  // namespace

double snr_nlc(double power_w, const LinkParams& link, const TrxParams& trx,
               const NlcPlan& plan) {
  const double xt = xi_trx(link.num_spans, plan.x_tx_spans, trx.kappa_r, link.epsilon);
  const double xa = xi_ase(link.num_spans, plan.x_tx_spans, link.epsilon);
  return power_w / snr_denominator(power_w, link, trx, xt, xa, 0.0);
}

double snr_edc(double power_w, const LinkParams& link, const TrxParams& trx) {
  const double xt = xi_trx(link.num_spans, 0, trx.kappa_r, link.epsilon);
  const double xa = xi_ase(link.num_spans, 0, link.epsilon);
  const double ss = link.eta_1_w2 * ipow_coherent(link.num_spans, link.epsilon);
  return power_w / snr_denominator(power_w, link, trx, xt, xa, ss);
}

double snr_edc_ideal(const LinkParams& link) {
  const double n_coh = ipow_coherent(link.num_spans, link.epsilon) *
                       link.num_spans * link.num_spans;  // N^(3+eps)
  return 1.0 / std::cbrt(6.75 * link.p_ase_w * link.p_ase_w * link.eta_1_w2 * n_coh);
}

double maximize_over_power(const std::function<double(double)>& snr_of_power_w,
                           const PowerSearch& search) {
  const int n = static_cast<int>(
      std::round((search.max_dbm - search.min_dbm) / search.coarse_step_db));
  std::vector<double> vals(n + 1);
  int best = 0;
  for (int i = 0; i <= n; ++i) {
    vals[i] = snr_of_power_w(watt_from_dbm(search.min_dbm + i * search.coarse_step_db));
    if (vals[i] > vals[best]) best = i;
  }

  // The rational SNR profiles handled here are unimodal in log-power; a
  // second interior peak on the coarse grid indicates a malformed input.
  int peaks = 0;
  for (int i = 1; i < n; ++i) {
    if (vals[i] > vals[i - 1] * (1.0 + 1e-12) && vals[i] > vals[i + 1] * (1.0 + 1e-12))
      ++peaks;
  }
  if (peaks > 1)
    throw std::runtime_error("launch-power profile is not unimodal over the search grid");

  double lo = search.min_dbm + std::max(best - 1, 0) * search.coarse_step_db;
  double hi = search.min_dbm + std::min(best + 1, n) * search.coarse_step_db;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = snr_of_power_w(watt_from_dbm(c));
  double fd = snr_of_power_w(watt_from_dbm(d));
  while (hi - lo > search.tolerance_db * 0.2) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = snr_of_power_w(watt_from_dbm(d));
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = snr_of_power_w(watt_from_dbm(c));
    }
  }
  return watt_from_dbm(0.5 * (lo + hi));
}

std::string scheme_name(const Scheme& scheme) {
  switch (scheme.kind) {
    case Scheme::Kind::Edc: return "edc";
    case Scheme::Kind::Dbp: return "dbp";
    case Scheme::Kind::Dpc: return "dpc";
    case Scheme::Kind::HalfSplit: return "half";
    case Scheme::Kind::OptimalSplit: return "opt";
    case Scheme::Kind::FixedSplit: return "x" + std::to_string(scheme.x_fixed);
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "edc") return Scheme::edc();
  if (name == "dbp") return Scheme::dbp();
  if (name == "dpc") return Scheme::dpc();
  if (name == "half") return Scheme::half_split();
  if (name == "opt") return Scheme::optimal_split();
  if (name.size() > 1 && name[0] == 'x') {
    try {
      return Scheme::fixed_split(std::stoi(name.substr(1)));
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown scheme name: " + name);
}

int resolve_split(const Scheme& scheme, const LinkParams& link,
                  const TrxParams& trx) {
  switch (scheme.kind) {
    case Scheme::Kind::Edc:
    case Scheme::Kind::Dbp: return 0;
    case Scheme::Kind::Dpc: return link.num_spans;
    case Scheme::Kind::HalfSplit: return (link.num_spans + 1) / 2;
    case Scheme::Kind::OptimalSplit:
      return optimal_split_bruteforce(link, trx).x_tx_spans;
    case Scheme::Kind::FixedSplit: return scheme.x_fixed;
  }
  return 0;
}

namespace {

std::function<double(double)> scheme_snr(const LinkParams& link,
                                         const TrxParams& trx,
                                         const Scheme& scheme) {
  if (scheme.kind == Scheme::Kind::Edc)
    return [=](double p) { return snr_edc(p, link, trx); };
  const int x = resolve_split(scheme, link, trx);
  // Hoist the accumulation factors out of the power loop.
  const double xt = xi_trx(link.num_spans, x, trx.kappa_r, link.epsilon);
  const double xa = xi_ase(link.num_spans, x, link.epsilon);
  return [=](double p) { return p / snr_denominator(p, link, trx, xt, xa, 0.0); };
}

}  // namespace

double optimal_launch_power(const LinkParams& link, const TrxParams& trx,
                            const Scheme& scheme, const PowerSearch& search) {
  return maximize_over_power(scheme_snr(link, trx, scheme), search);
}

double snr_at_optimum(const LinkParams& link, const TrxParams& trx,
                      const Scheme& scheme, const PowerSearch& search) {
  const auto f = scheme_snr(link, trx, scheme);
  return f(maximize_over_power(f, search));
}

NlcPlan optimal_split_bruteforce(const LinkParams& link, const TrxParams& trx) {
  // Prefix sums make the accumulation factors O(1) per candidate split.
  const int n = link.num_spans;
  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 1; i <= n; ++i)
    prefix[i] = prefix[i - 1] + std::pow(static_cast<double>(i), 1.0 + link.epsilon);

  int best_x = 0;
  double best_snr = -kInf;
  for (int x = 0; x <= n; ++x) {
    const double xt = (1.0 - trx.kappa_r) * ipow_coherent(x, link.epsilon) +
                      trx.kappa_r * ipow_coherent(n - x, link.epsilon);
    const double xa = prefix[std::max(x - 1, 0)] + prefix[n - x];
    const auto f = [&](double p) {
      return p / snr_denominator(p, link, trx, xt, xa, 0.0);
    };
    const double s = f(maximize_over_power(f));
    if (s > best_snr) {  // strict: ties keep the smaller split
      best_snr = s;
      best_x = x;
    }
  }
  return {best_x};
}

NlcPlan optimal_split_trx_closed(int num_spans, double kappa_r, double epsilon) {
  if (kappa_r <= 0.0) return {num_spans};  // all noise at the transmitter
  if (kappa_r >= 1.0) return {0};          // all noise at the receiver
  if (epsilon < kEpsilonTiny) {
    if (kappa_r < 0.5) return {0};
    if (kappa_r > 0.5) return {num_spans};
    return {static_cast<int>(std::lround(num_spans / 2.0))};
  }
  const double log_ratio = (std::log1p(-kappa_r) - std::log(kappa_r)) / epsilon;
  if (log_ratio > 700.0) return {0};
  if (log_ratio < -700.0) return {num_spans};
  const double x = num_spans / (1.0 + std::exp(log_ratio));
  return {static_cast<int>(std::lround(x))};
}

double xi_trx_opt(int num_spans, double kappa_r, double epsilon) {
  const double n_coh = ipow_coherent(num_spans, epsilon);
  if (kappa_r <= 0.0 || kappa_r >= 1.0) return 0.0;  // one-sided noise is fully removable
  if (epsilon < kEpsilonTiny) {
    if (kappa_r == 0.5) return n_coh / std::pow(2.0, 1.0 + epsilon);
    return std::min(1.0 - kappa_r, kappa_r) * n_coh;
  }
  // (1-kr)^(-1/eps) + kr^(-1/eps), raised to -eps.
  return std::exp(-epsilon * log_sum_inverse_powers(kappa_r, epsilon)) * n_coh;
}

double reach_gain_trx(double kappa_r, double epsilon, bool small_eps_approx) {
  if (!(kappa_r > 0.0 && kappa_r < 1.0))
    throw std::domain_error("reach gain requires kappa_r in (0, 1)");
  if (small_eps_approx || epsilon < kEpsilonTiny) {
    if (kappa_r <= 0.5) return 1.0;
    return std::pow(kappa_r / (1.0 - kappa_r), 1.0 / (3.0 + epsilon));
  }
  const double lsum = log_sum_inverse_powers(kappa_r, epsilon);
  return std::exp((std::log(kappa_r) + epsilon * lsum) / (3.0 + epsilon));
}

double xi_ase_opt(int num_spans, double epsilon) {
  if (num_spans < 2) throw std::domain_error("needs at least two spans");
  if (num_spans % 2 == 0) {
    const int half = num_spans / 2;
    return ipow_coherent(half, epsilon) + 2.0 * power_sum(half - 1, epsilon);
  }
  return xi_ase(num_spans, (num_spans + 1) / 2, epsilon);
}

double reach_gain_ase(double epsilon) {
  if (epsilon < 0.0) throw std::domain_error("epsilon must be >= 0");
  return std::pow(2.0, (1.0 + epsilon) / (3.0 + epsilon));
}

namespace {

// Right-hand side of the transceiver-regime inequality, dB.
double trx_regime_rhs_db(const TrxParams& trx) {
  const double share = std::min(1.0 - trx.kappa_r, trx.kappa_r);
  return 2.0 / 3.0 * (db_from_linear(trx.snr_trx) - db_from_linear(share)) -
         kTrxRegimeOffsetDb;
}

// Right-hand side of the amplifier-noise-regime inequality, dB.
double ase_regime_rhs_db(const TrxParams& trx) {
  const double share = std::max(1.0 - trx.kappa_r, trx.kappa_r);
  return 2.0 / 3.0 * (db_from_linear(trx.snr_trx) - db_from_linear(share)) -
         kAseRegimeOffsetDb;
}

// Continuous span count at which the ideal dispersion-compensated SNR drops
// to `target_db`. The SNR falls monotonically as 10*(3+eps)/3 dB per decade.
double spans_at_edc_ideal_db(const LinkParams& link, double target_db) {
  const double c = 6.75 * link.p_ase_w * link.p_ase_w * link.eta_1_w2;
  // -10/3 * (log10 c + (3+eps) log10 N) = target
  const double log10_n =
      (-target_db * 0.3 - std::log10(c)) / (3.0 + link.epsilon);
  return std::pow(10.0, log10_n);
}

}  // namespace

RegimeReport classify_regime(const LinkParams& link, const TrxParams& trx,
                             double threshold_db) {
  RegimeReport rep;
  const double lhs_db = db_from_linear(snr_edc_ideal(link));

  if (trx.kappa_r <= 0.0 || trx.kappa_r >= 1.0 || std::isinf(trx.snr_trx)) {
    // One-sided (or absent) transceiver noise is fully removable by placing
    // the whole virtual link at the noisy end, so only amplifier-noise
    // beating remains.
    rep.regime = Regime::AseDominated;
    rep.trx_margin_db = -kInf;
    rep.ase_margin_db = kInf;
    rep.crossover_spans = 1;
    return rep;
  }

  rep.trx_margin_db = lhs_db - trx_regime_rhs_db(trx);
  rep.ase_margin_db = ase_regime_rhs_db(trx) - lhs_db;
  if (rep.trx_margin_db >= threshold_db)
    rep.regime = Regime::TrxDominated;
  else if (rep.ase_margin_db >= threshold_db)
    rep.regime = Regime::AseDominated;
  else
    rep.regime = Regime::Mixed;

  const double n_cross = spans_at_edc_ideal_db(link, trx_regime_rhs_db(trx));
  rep.crossover_spans = std::max(1, static_cast<int>(std::ceil(n_cross)));
  return rep;
}

int ase_dominance_spans(const LinkParams& link, const TrxParams& trx,
                        double margin_db) {
  const double n_cross = spans_at_edc_ideal_db(link, trx_regime_rhs_db(trx));
  // The beating ratio grows at ~10 dB per decade of distance for small
  // coherence factors, so a margin requirement scales the crossover count.
  return static_cast<int>(std::ceil(n_cross * std::pow(10.0, margin_db / 10.0)));
}

double required_snr_trx_db(const LinkParams& link, const TrxParams& trx,
                           double target_crossover_spans) {
  if (!(target_crossover_spans > 0.0))
    throw std::domain_error("target crossover must be positive");
  const double n_cross = spans_at_edc_ideal_db(link, trx_regime_rhs_db(trx));
  // Moving the crossover a decade closer raises the boundary by 10 dB, which
  // costs 15 dB of back-to-back SNR (the boundary scales with 2/3 of it).
  return db_from_linear(trx.snr_trx) +
         1.5 * 10.0 * std::log10(n_cross / target_crossover_spans);
}

ReachResult max_reach(const LinkParams& link_template, const TrxParams& trx,
                      const Scheme& scheme, double target_snr, int span_cap) {
  auto snr_at = [&](int n) {
    return snr_at_optimum(link_template.with_spans(n), trx, scheme);
  };
  if (snr_at(1) < target_snr) {
    throw std::runtime_error(
        "target SNR unreachable at a single span; achievable maximum is " +
        std::to_string(db_from_linear(snr_at(1))) + " dB");
  }
  // Optimum SNR decreases monotonically with span count: bisect.
  int lo = 1, hi = 2;
  while (hi <= span_cap && snr_at(hi) >= target_snr) {
    lo = hi;
    hi *= 2;
  }
  if (hi > span_cap) {
    if (snr_at(span_cap) >= target_snr) return {span_cap, true};
    hi = span_cap;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (snr_at(mid) >= target_snr ? lo : hi) = mid;
  }
  return {lo, false};
}

}  // namespace splitnlc::analytic
