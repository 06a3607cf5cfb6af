//! Closed-form sample-complexity bounds and the hypothesis-testing game.
//!
//! All evaluators return exact reals with explicit constants; asymptotic
//! statements are demoted to scan-level trend checks in the tests. The
//! central quantity is `F_w(x) = (1+x)^{-n} sum_{u<=w} C(n,u)(3x)^u`,
//! evaluated in log-space so it stays usable for n in the thousands.

use rand::Rng;
use statrs::function::gamma::ln_gamma;

use crate::channel::{PauliChannel, Sign};
use crate::cover::{cn_upper_bound, covering_power_formula, weight_class_size, StabilizerGroup};
use crate::pauli::{PauliString, RealFunctionOnPaulis};
use crate::probe::{
    estimate_eigenvalue, plan_samples, sample_outcomes, AlphaProbe, ProbeSpec,
};
use crate::seed::stream_rng;
use crate::{Error, Result};

/// Parameters of a learning task bound query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
    pub w: usize,
    pub eps: f64,
    pub delta: f64,
}

impl BoundQuery {
    pub fn new(n: usize, k: usize, w: usize, eps: f64, delta: f64) -> Result<Self> {
        if k > n {
            return Err(Error::OutOfRange {
                what: "ancilla count",
                details: format!("k={k} > n={n}"),
            });
        }
        if w > n {
            return Err(Error::OutOfRange {
                what: "weight",
                details: format!("w={w} > n={n}"),
            });
        }
        if !eps.is_finite() || eps <= 0.0 {
            return Err(Error::OutOfRange {
                what: "eps",
                details: format!("{eps} must be positive"),
            });
        }
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::OutOfRange {
                what: "delta",
                details: format!("{delta} not in (0, 1/2)"),
            });
        }
        Ok(BoundQuery { n, k, w, eps, delta })
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::OutOfRange {
            what: "x",
            details: format!("{x} not in (0, 1]"),
        });
    }
    Ok(())
}

/// Referee distribution `Pr(e) = x^{|e|} / (1+3x)^n`.
pub fn pr_e(e: &PauliString, x: f64) -> Result<f64> {
    check_x(x)?;
    let n = e.n() as i32;
    Ok(x.powi(e.weight() as i32) / (1.0 + 3.0 * x).powi(n))
}

/// Probability that the referee draws a learnable label:
/// `Pr(|e| <= w) = (1+3x)^{-n} sum_{u<=w} C(n,u)(3x)^u`.
pub fn pr_learnable(n: usize, w: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    let sum: f64 = (0..=w.min(n))
        .map(|u| (ln_binomial(n, u) + u as f64 * (3.0 * x).ln()).exp())
        .sum();
    Ok(sum / (1.0 + 3.0 * x).powi(n as i32))
}

fn ln_binomial(n: usize, u: usize) -> f64 {
    ln_gamma(n as f64 + 1.0) - ln_gamma(u as f64 + 1.0) - ln_gamma((n - u) as f64 + 1.0)
}

/// `ln F_w(x)` by log-sum-exp; safe for n up to ~10^4.
pub fn ln_f_w(n: usize, w: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    if w > n {
        return Err(Error::OutOfRange {
            what: "weight",
            details: format!("w={w} > n={n}"),
        });
    }
    if w == n {
        // Binomial collapse: F_n(x) = ((1+3x)/(1+x))^n.
        return Ok(n as f64 * ((1.0 + 3.0 * x).ln() - (1.0 + x).ln()));
    }
    let ln3x = (3.0 * x).ln();
    let terms: Vec<f64> = (0..=w).map(|u| ln_binomial(n, u) + u as f64 * ln3x).collect();
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|t| (t - max).exp()).sum();
    Ok(max + sum.ln() - n as f64 * (1.0 + x).ln())
}

/// `F_w(x) = (1+x)^{-n} sum_{u<=w} C(n,u)(3x)^u`.
///
/// The full-weight case collapses by the binomial theorem and is
/// computed as `((1+3x)/(1+x))^n` directly, which is exact at `x = 1`.
pub fn f_w(n: usize, w: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    if w == n {
        return Ok(((1.0 + 3.0 * x) / (1.0 + x)).powi(n as i32));
    }
    Ok(ln_f_w(n, w, x)?.exp())
}

/// The bound-side optimizer `x = min{(w/n)/(1 - w/n), 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalX {
    pub x: f64,
    /// Set when `w = 0`, where the analysis degenerates and a floor of
    /// `1e-6` is returned instead of the `x -> 0+` limit.
    pub degenerate: bool,
}

pub fn optimal_x(n: usize, w: usize) -> Result<OptimalX> {
    if w > n {
        return Err(Error::OutOfRange {
            what: "weight",
            details: format!("w={w} > n={n}"),
        });
    }
    if w == 0 {
        return Ok(OptimalX {
            x: 1e-6,
            degenerate: true,
        });
    }
    let ratio = w as f64 / n as f64;
    let x = if 2 * w >= n { 1.0 } else { ratio / (1.0 - ratio) };
    Ok(OptimalX {
        x,
        degenerate: false,
    })
}

/// Exact constant-carrying lower bound on the sample complexity:
/// `N >= ((1-2delta)/(4 eps^2)) 2^{-k} F_w(optimal_x)`.
pub fn lower_bound_n(q: &BoundQuery) -> Result<f64> {
    let x = optimal_x(q.n, q.w)?.x;
    let f = f_w(q.n, q.w, x)?;
    let constant = (1.0 - 2.0 * q.delta) / (4.0 * q.eps * q.eps);
    Ok(constant * (-(q.k as f64)).exp2() * f)
}

/// Covering-based upper bound: `n * CN * 2 eps^{-2} ln(2/delta)`, with
/// `CN` the sum over weight classes `u <= w` of
/// `cn_upper_bound(|P(u)|, Sigma(u, k))`. A measured covering power, if
/// supplied, replaces the formula for the top class `u = w`.
pub fn upper_bound_n(q: &BoundQuery, measured_sigma: Option<u128>) -> Result<f64> {
    let mut cover_groups: u128 = 0;
    for u in 0..=q.w {
        let sigma = if u == q.w {
            measured_sigma.unwrap_or_else(|| covering_power_formula(q.n, q.k, u))
        } else {
            covering_power_formula(q.n, q.k, u)
        };
        if sigma == 0 {
            return Err(Error::Domain(format!(
                "covering power formula vanished at (n={}, k={}, u={u})",
                q.n, q.k
            )));
        }
        cover_groups += cn_upper_bound(weight_class_size(q.n, u), sigma) as u128;
    }
    Ok(q.n as f64 * cover_groups as f64 * 2.0 / (q.eps * q.eps) * (2.0 / q.delta).ln())
}

/// Stirling brackets on the binomial coefficient:
/// `exp(n H(u/n)) / sqrt(2n) <= C(n,u) <= exp(n H(u/n)) / sqrt(pi)`
/// with H in nats, valid for `n >= 2`; the boundary columns are exact.
pub fn stirling_brackets(n: usize, u: usize) -> Result<(f64, f64)> {
    if u > n {
        return Err(Error::OutOfRange {
            what: "u",
            details: format!("u={u} > n={n}"),
        });
    }
    if u == 0 || u == n {
        return Ok((1.0, 1.0));
    }
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            details: "brackets need n >= 2".into(),
        });
    }
    let p = u as f64 / n as f64;
    let h = -p * p.ln() - (1.0 - p) * (1.0 - p).ln();
    let core = (n as f64 * h).exp();
    Ok((
        core / (2.0 * n as f64).sqrt(),
        core / std::f64::consts::PI.sqrt(),
    ))
}

/// Largest eigenvalue of the weighted Pauli sum
/// `sum_e Pr(e) P_e x P_e`, in closed form: `((1+x)/(1+3x))^n`.
pub fn weighted_sum_max_eigenvalue(n: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(((1.0 + x) / (1.0 + 3.0 * x)).powi(n as i32))
}

/// Configuration of the referee/player hypothesis-testing game. Each
/// channel copy yields exactly one measurement outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameConfig {
    pub n: usize,
    pub w: usize,
    pub x: f64,
    pub eps: f64,
    pub delta: f64,
    pub trials: u64,
    pub seed: u64,
}

impl GameConfig {
    pub fn validate(&self) -> Result<()> {
        check_x(self.x)?;
        if self.w > self.n {
            return Err(Error::OutOfRange {
                what: "weight",
                details: format!("w={} > n={}", self.w, self.n),
            });
        }
        if self.trials == 0 {
            return Err(Error::OutOfRange {
                what: "trials",
                details: "need at least one trial".into(),
            });
        }
        if !(self.eps > 0.0 && self.eps <= 0.5) {
            return Err(Error::OutOfRange {
                what: "eps",
                details: format!("{} not in (0, 1/2]", self.eps),
            });
        }
        if !(self.delta > 0.0 && self.delta < 0.5) {
            return Err(Error::OutOfRange {
                what: "delta",
                details: format!("{} not in (0, 1/2)", self.delta),
            });
        }
        Ok(())
    }
}

/// The player's measurement strategy (non-adaptive).
#[derive(Debug, Clone)]
pub enum Strategy {
    /// Alpha-family probe with Bell measurements.
    AlphaProbe(f64),
    /// Fixed stabilizer group with syndrome measurements (no ancilla).
    Stabilizer(StabilizerGroup),
}

/// Result of a game run.
#[derive(Debug, Clone, Copy)]
pub struct GameResult {
    pub wins: u64,
    pub trials: u64,
    pub win_rate: f64,
    /// Wilson 95% confidence interval on the win rate.
    pub ci: (f64, f64),
    /// Single-copy measurements collected by the player per trial.
    pub planned_shots: u64,
}

impl GameResult {
    /// Half-width of the Wilson interval divided by z, a robust sigma
    /// proxy that stays positive at the boundary rates.
    pub fn sigma_wilson(&self) -> f64 {
        (self.ci.1 - self.ci.0) / (2.0 * 1.959_963_984_540_054)
    }
}

/// Wilson 95% score interval for `wins` successes in `trials`.
pub fn wilson_interval(wins: u64, trials: u64) -> (f64, f64) {
    let z = 1.959_963_984_540_054f64;
    let n = trials as f64;
    let p = wins as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Winning-probability floor implied by a working learner:
/// `Pr(|e| <= w)(1 - delta) + (1 - Pr(|e| <= w))/2`.
pub fn game_floor(cfg: &GameConfig) -> Result<f64> {
    let p = pr_learnable(cfg.n, cfg.w, cfg.x)?;
    Ok(p * (1.0 - cfg.delta) + (1.0 - p) * 0.5)
}

/// Runs the four-step hypothesis-testing game.
///
/// Per trial: the referee draws `e ~ Pr(e)` and a uniform sign, then a
/// fair coin picks the depolarizing channel or the spike channel
/// `lambda = delta_{b,0} + 2 s eps delta_{b,e}`; the player collects its
/// planned number of single-copy outcomes and, once `e` is revealed,
/// answers "spike" iff the estimate of `lambda(e)` sits more than `eps`
/// from the depolarizing prediction. Labels the player cannot resolve
/// (weight above `w`, or outside the stabilizer's system image) are
/// answered by a fair coin. An `e = 0` draw degenerates the spike
/// hypothesis to the depolarizing channel itself and is unwinnable
/// beyond chance.
pub fn run_game(cfg: &GameConfig, strategy: &Strategy) -> Result<GameResult> {
    cfg.validate()?;
    let n = cfg.n;
    let dep = PauliChannel::depolarizing(n)?;

    // Referee CDF over all 4^n labels.
    let weights = RealFunctionOnPaulis::tabulate(n, |e| {
        pr_e(&e, cfg.x).expect("x validated")
    })?;
    let mut cdf = Vec::with_capacity(weights.len());
    let mut acc = 0.0;
    for &p in weights.values() {
        acc += p;
        cdf.push(acc);
    }

    let planned_shots = match strategy {
        Strategy::AlphaProbe(alpha) => {
            let probe = ProbeSpec::Alpha(AlphaProbe::new(n, *alpha)?);
            plan_samples(&probe, cfg.eps, cfg.delta, cfg.w)?
        }
        Strategy::Stabilizer(group) => {
            if group.ancilla_count() != 0 || group.system_count() != n {
                return Err(Error::DimensionMismatch {
                    left: group.system_count(),
                    right: n,
                });
            }
            // Syndrome estimates are +-1 averages: Hoeffding range 2,
            // with the same union bound over the targeted labels.
            let m: u128 = (0..=cfg.w).map(|u| weight_class_size(n, u)).sum();
            (2.0 / (cfg.eps * cfg.eps) * (2.0 * m as f64 / cfg.delta).ln()).ceil() as u64
        }
    };

    let mut wins = 0u64;
    for trial in 0..cfg.trials {
        let mut rng = stream_rng(cfg.seed, trial);
        let u: f64 = rng.gen_range(0.0..1.0);
        let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        let e = PauliString::new(n, idx as u64)?;
        let s = if rng.gen::<bool>() { Sign::Plus } else { Sign::Minus };
        let referee_sends_spike = rng.gen::<bool>();
        let shot_seed: u64 = rng.gen();

        let channel = if referee_sends_spike && !e.is_identity() {
            PauliChannel::spike(n, &e, s, cfg.eps)?
        } else {
            dep.clone()
        };

        let dep_prediction = if e.is_identity() { 1.0 } else { 0.0 };
        let answer_spike = match strategy {
            Strategy::AlphaProbe(alpha) => {
                let probe = ProbeSpec::Alpha(AlphaProbe::new(n, *alpha)?);
                let rec = sample_outcomes(&channel, &probe, planned_shots as usize, shot_seed)?;
                if e.weight() <= cfg.w {
                    let est = estimate_eigenvalue(&rec, &e)?;
                    (est - dep_prediction).abs() > cfg.eps
                } else {
                    rng.gen::<bool>()
                }
            }
            Strategy::Stabilizer(group) => {
                let dist = crate::cover::syndrome_distribution(group, &channel)?;
                let samples =
                    crate::cover::sample_syndromes(&dist, planned_shots as usize, shot_seed);
                if e.weight() <= cfg.w && group.sys_contains(&e) {
                    let est = crate::cover::estimate_from_syndromes(&samples, group, &e)?;
                    (est - dep_prediction).abs() > cfg.eps
                } else {
                    rng.gen::<bool>()
                }
            }
        };

        if answer_spike == referee_sends_spike {
            wins += 1;
        }
    }

    let win_rate = wins as f64 / cfg.trials as f64;
    Ok(GameResult {
        wins,
        trials: cfg.trials,
        win_rate,
        ci: wilson_interval(wins, cfg.trials),
        planned_shots,
    })
}
