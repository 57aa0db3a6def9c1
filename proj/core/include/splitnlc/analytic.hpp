#pragma once

#include <functional>
#include <optional>
#include <string>

// Closed-form SNR model for coherent links with full-field digital
// nonlinearity compensation split between transmitter and receiver.
//
// The model tracks three denominator contributions at launch power P:
//   * linear transceiver noise            kappa * P,
//   * accumulated amplifier noise         N * P_ase,
//   * residual signal-noise beating       3*eta*(kappa*xi_trx*P + xi_ase*P_ase)*P^2,
// where the accumulation factors xi_trx / xi_ase depend on how many spans are
// pre-compensated at the transmitter (X) versus back-propagated at the
// receiver (N - X). Electronic-dispersion-only operation adds the
// uncompensated signal-signal term eta * N^(1+eps) * P^3.

namespace splitnlc::analytic {

/// Physical description of a homogeneous multi-span link.
struct LinkParams {
  int num_spans = 1;          ///< N >= 1
  double span_length_km = 80.0;
  double eta_1_w2 = 0.0;      ///< nonlinear interference coefficient of one span, 1/W^2
  double epsilon = 0.0;       ///< coherence factor, >= 0
  double p_ase_w = 0.0;       ///< amplifier noise power per span in the reference bandwidth, W

  void validate() const;
  LinkParams with_spans(int n) const {
    LinkParams l = *this;
    l.num_spans = n;
    return l;
  }
};

/// Lumped transceiver noise: back-to-back SNR and its receiver share.
struct TrxParams {
  double snr_trx = 0.0;   ///< linear back-to-back SNR; infinity = noiseless transceiver
  double kappa_r = 0.5;   ///< fraction of transceiver noise injected at the receiver, in [0,1]

  void validate() const;
  double kappa() const { return 1.0 / snr_trx; }
  /// Maximum SNR imposed by the transmitter alone (infinite when kappa_r = 1).
  double snr_tx() const;
  /// Maximum SNR imposed by the receiver alone (infinite when kappa_r = 0).
  double snr_rx() const;
};

/// Number of spans compensated at the transmitter; the receiver handles the rest.
struct NlcPlan {
  int x_tx_spans = 0;

  static NlcPlan dbp() { return {0}; }
  static NlcPlan dpc(int num_spans) { return {num_spans}; }
};

enum class Regime { TrxDominated, AseDominated, Mixed };

/// Outcome of the beating-regime classification for one link/transceiver pair.
struct RegimeReport {
  Regime regime = Regime::Mixed;
  /// Slack of the transceiver-regime inequality, dB (positive = satisfied).
  double trx_margin_db = 0.0;
  /// Slack of the amplifier-noise-regime inequality, dB (positive = satisfied).
  double ase_margin_db = 0.0;
  /// Smallest span count at which amplifier-noise beating overtakes
  /// transceiver-noise beating at optimum launch power.
  int crossover_spans = 0;
};

const char* to_string(Regime r);

/// Compensation scheme selector. Split positions that depend on the span
/// count (receiver-only, transmitter-only, middle, optimal) are resolved
/// against the concrete link at evaluation time, so the same scheme value can
/// sweep over distances.
struct Scheme {
  enum class Kind { Edc, Dbp, Dpc, HalfSplit, OptimalSplit, FixedSplit };
  Kind kind = Kind::Dbp;
  int x_fixed = 0;  ///< only meaningful for Kind::FixedSplit

  static Scheme edc() { return {Kind::Edc}; }
  static Scheme dbp() { return {Kind::Dbp}; }
  static Scheme dpc() { return {Kind::Dpc}; }
  static Scheme half_split() { return {Kind::HalfSplit}; }
  static Scheme optimal_split() { return {Kind::OptimalSplit}; }
  static Scheme fixed_split(int x) { return {Kind::FixedSplit, x}; }
};

/// Short stable name used in result tables ("edc", "dbp", "dpc", "half",
/// "opt", "x<k>").
std::string scheme_name(const Scheme& scheme);

/// Parses the names accepted by scenario files and the CLI.
Scheme scheme_from_name(const std::string& name);

/// Number of transmitter-side spans the scheme uses on this link
/// (the optimal-split kind runs the exhaustive search).
int resolve_split(const Scheme& scheme, const LinkParams& link, const TrxParams& trx);

// --- accumulation factors ---------------------------------------------------

/// Transceiver-noise beating accumulation factor
/// (1-kr)*X^(1+eps) + kr*(N-X)^(1+eps). Throws std::domain_error if X is
/// outside [0, N].
double xi_trx(int num_spans, int x_tx_spans, double kappa_r, double epsilon);

/// Amplifier-noise beating accumulation factor
/// sum_{i=1}^{X-1} i^(1+eps) + sum_{i=1}^{N-X} i^(1+eps); empty sums are 0.
double xi_ase(int num_spans, int x_tx_spans, double epsilon);

// --- SNR evaluators ----------------------------------------------------------

/// SNR at launch power P per channel with full-field compensation split per `plan`.
double snr_nlc(double power_w, const LinkParams& link, const TrxParams& trx,
               const NlcPlan& plan);

/// SNR with electronic dispersion compensation only (no nonlinearity
/// compensation): the uncompensated plan plus the signal-signal nonlinear term.
double snr_edc(double power_w, const LinkParams& link, const TrxParams& trx);

/// Closed-form optimum SNR for dispersion-compensated-only operation with a
/// noiseless transceiver: 1 / cbrt(27/4 * P_ase^2 * eta * N^(3+eps)).
double snr_edc_ideal(const LinkParams& link);

// --- launch-power optimization ----------------------------------------------

struct PowerSearch {
  double min_dbm = -20.0;
  double max_dbm = 10.0;
  double coarse_step_db = 0.1;
  double tolerance_db = 0.01;
};

/// Maximizes an SNR(P) profile over the launch-power grid: coarse log-spaced
/// scan followed by golden-section refinement. Throws std::runtime_error with
/// a diagnostic if the coarse scan is not unimodal.
double maximize_over_power(const std::function<double(double)>& snr_of_power_w,
                           const PowerSearch& search = {});

/// Launch power (W) that maximizes the scheme's SNR.
double optimal_launch_power(const LinkParams& link, const TrxParams& trx,
                            const Scheme& scheme, const PowerSearch& search = {});

/// Scheme SNR evaluated at its optimum launch power.
double snr_at_optimum(const LinkParams& link, const TrxParams& trx,
                      const Scheme& scheme, const PowerSearch& search = {});

// --- split optimizers ---------------------------------------------------------

/// Exhaustive argmax of snr_at_optimum over X in [0, N]; ties break toward
/// smaller X (less pre-compensation hardware).
NlcPlan optimal_split_bruteforce(const LinkParams& link, const TrxParams& trx);

/// Closed-form optimum split for the transceiver-beating regime,
/// nearest-integer of N / (1 + ((1-kr)/kr)^(1/eps)); kappa_r in {0,1} and
/// eps -> 0 fall back to the appropriate limits.
NlcPlan optimal_split_trx_closed(int num_spans, double kappa_r, double epsilon);

/// Transceiver beating factor at if the split is chosen optimally
/// (continuous-X form; small-eps limits handled explicitly).
double xi_trx_opt(int num_spans, double kappa_r, double epsilon);

/// Reach increase of optimally split compensation over receiver-only
/// compensation in the transceiver-beating regime. With `small_eps_approx`
/// the piecewise small-coherence form is used instead of the exact one.
/// Pass 1-kappa_r to obtain the gain over transmitter-only compensation.
double reach_gain_trx(double kappa_r, double epsilon, bool small_eps_approx = false);

/// Amplifier-noise beating factor for the optimal (middle) split.
double xi_ase_opt(int num_spans, double epsilon);

/// Reach increase of split compensation over receiver-only compensation in
/// the amplifier-noise-beating regime: 2^((1+eps)/(3+eps)).
double reach_gain_ase(double epsilon);

// --- regime classification -----------------------------------------------------

/// Classifies which signal-noise beating term dominates, with a configurable
/// dominance threshold (default one order of magnitude).
RegimeReport classify_regime(const LinkParams& link, const TrxParams& trx,
                             double threshold_db = 10.0);

/// Smallest span count at which amplifier-noise beating exceeds
/// transceiver-noise beating by `margin_db`, using the small-coherence
/// distance scaling of the beating ratio (10 dB per decade).
int ase_dominance_spans(const LinkParams& link, const TrxParams& trx,
                        double margin_db = 10.0);

/// Back-to-back SNR (dB) required to move the beating crossover to
/// `target_crossover_spans`, extrapolated from the current operating point
/// with the small-coherence distance scaling.
double required_snr_trx_db(const LinkParams& link, const TrxParams& trx,
                           double target_crossover_spans);

// --- reach ---------------------------------------------------------------------

struct ReachResult {
  int spans = 0;
  bool saturated = false;  ///< true when the configured span cap was hit
};

/// Largest span count whose optimum-power SNR still meets `target_snr`
/// (linear). Throws std::runtime_error if the target is unreachable even at
/// one span; saturates at `span_cap`.
ReachResult max_reach(const LinkParams& link_template, const TrxParams& trx,
                      const Scheme& scheme, double target_snr, int span_cap = 4000);

}  // namespace splitnlc::analytic
