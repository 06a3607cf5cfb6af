//! Probe states for Bell-measurement channel learning.
//!
//! Two probe families are supported: the alpha family, interpolating
//! between a product state (alpha = 0) and the 2n-qubit Bell pair
//! (alpha = 1), and the Werner family. Each comes with a closed-form
//! overlap `E(b) = Tr[(P_b^T x P_b) rho_in]`, which is all the
//! estimator and the sample planner need.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::channel::PauliChannel;
use crate::pauli::{binomial, PauliString, RealFunctionOnPaulis, Transform};
use crate::seed::stream_rng;
use crate::{Error, Result};

/// The alpha-family probe state.
///
/// Coefficients satisfy
/// `|c_a|^2 = alpha delta_{a,0} + (1-alpha) (1/2)^{n-|a|} (1/6)^{|a|}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaProbe {
    n: usize,
    alpha: f64,
}

impl AlphaProbe {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 || n > crate::pauli::MAX_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                max: crate::pauli::MAX_QUBITS,
            });
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::OutOfRange {
                what: "alpha",
                details: format!("{alpha} not in [0, 1]"),
            });
        }
        Ok(AlphaProbe { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `|c_a(alpha)|^2` for one label.
    pub fn coefficient_sq(&self, a: &PauliString) -> f64 {
        let w = a.weight() as i32;
        let tail = 0.5f64.powi(self.n as i32 - w) * (1.0 / 6.0f64).powi(w);
        let head = if a.is_identity() { self.alpha } else { 0.0 };
        head + (1.0 - self.alpha) * tail
    }

    /// Probe overlap `E(b) = alpha + (1-alpha) 3^{-|b|}`.
    pub fn overlap_e(&self, b: &PauliString) -> f64 {
        self.alpha + (1.0 - self.alpha) * 3.0f64.powi(-(b.weight() as i32))
    }

    /// The two eigenvalue branches (q, Q) of the reduced density matrix:
    /// q has multiplicity `2^n - 1` and Q is simple.
    ///
    /// Computed from `A^2`, `B^2`, and `AB = sqrt(A^2 B^2)` directly so
    /// the endpoints alpha = 0 and alpha = 1 come out exact.
    pub fn rdm_eigenvalues(&self) -> (f64, f64) {
        let dim = (1u64 << self.n) as f64;
        let a2 = self.alpha + (1.0 - self.alpha) / dim;
        let b2 = (1.0 - self.alpha) / dim;
        let ab = (a2 * b2).sqrt();
        let q = (a2 - 2.0 * ab + b2) / dim;
        let big = (a2 + 2.0 * (dim - 1.0) * ab + (dim - 1.0) * (dim - 1.0) * b2) / dim;
        (q, big)
    }

    /// Entanglement entropy between ancilla and system, in bits.
    pub fn entanglement_entropy(&self) -> f64 {
        let dim = (1u64 << self.n) as f64;
        let (q, big) = self.rdm_eigenvalues();
        // Adding 0.0 normalizes the -0.0 produced at alpha = 0.
        -((dim - 1.0) * xlog2(q) + xlog2(big)) + 0.0
    }
}

fn xlog2(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        p * p.log2()
    }
}

/// The Werner probe state, an isotropic mixture of the maximally mixed
/// state and the Bell-pair projector with mixing parameter `lam_w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WernerProbe {
    n: usize,
    lam_w: f64,
}

impl WernerProbe {
    pub fn new(n: usize, lam_w: f64) -> Result<Self> {
        if n == 0 || n > crate::pauli::MAX_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                max: crate::pauli::MAX_QUBITS,
            });
        }
        if !(0.0..=1.0).contains(&lam_w) {
            return Err(Error::OutOfRange {
                what: "lam_w",
                details: format!("{lam_w} not in [0, 1]"),
            });
        }
        Ok(WernerProbe { n, lam_w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lam_w(&self) -> f64 {
        self.lam_w
    }

    pub fn overlap_e(&self, b: &PauliString) -> f64 {
        let full = 4.0f64.powi(self.n as i32);
        let offset = self.lam_w - (1.0 - self.lam_w) / (full - 1.0);
        if b.is_identity() {
            full / (full - 1.0) * (1.0 - self.lam_w) + offset
        } else {
            offset
        }
    }

    /// Entanglement of formation in bits, valid on
    /// `lam_w in [4(2^n - 1)/2^{2n}, 1]` and `n >= 2`.
    pub fn eof(&self) -> Result<f64> {
        if self.n < 2 {
            return Err(Error::Domain(format!(
                "EoF closed form needs n >= 2, got n = {}",
                self.n
            )));
        }
        let d = (1u64 << self.n) as f64;
        let window_low = 4.0 * (d - 1.0) / (d * d);
        if self.lam_w < window_low {
            return Err(Error::Domain(format!(
                "lam_w = {} below the validity window [{window_low}, 1]",
                self.lam_w
            )));
        }
        Ok(d * (d - 1.0).log2() / (d - 2.0) * (self.lam_w - 1.0) + self.n as f64)
    }
}

/// Either probe family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ProbeSpec {
    Alpha(AlphaProbe),
    Werner(WernerProbe),
}

impl ProbeSpec {
    pub fn n(&self) -> usize {
        match self {
            ProbeSpec::Alpha(p) => p.n(),
            ProbeSpec::Werner(p) => p.n(),
        }
    }

    /// Probe overlap `E(b)`.
    pub fn overlap_e(&self, b: &PauliString) -> Result<f64> {
        if b.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: b.n(),
            });
        }
        Ok(match self {
            ProbeSpec::Alpha(p) => p.overlap_e(b),
            ProbeSpec::Werner(p) => p.overlap_e(b),
        })
    }

    /// `E` tabulated over all `4^n` labels.
    pub fn overlap_table(&self) -> RealFunctionOnPaulis {
        let me = *self;
        RealFunctionOnPaulis::tabulate(self.n(), |b| match &me {
            ProbeSpec::Alpha(p) => p.overlap_e(&b),
            ProbeSpec::Werner(p) => p.overlap_e(&b),
        })
        .expect("probe qubit count already validated")
    }
}

impl From<AlphaProbe> for ProbeSpec {
    fn from(p: AlphaProbe) -> Self {
        ProbeSpec::Alpha(p)
    }
}

impl From<WernerProbe> for ProbeSpec {
    fn from(p: WernerProbe) -> Self {
        ProbeSpec::Werner(p)
    }
}

/// Exact Bell-measurement outcome distribution
/// `Pr(v) = 4^{-n} sum_b (-1)^{<b,v>} lambda(b) E(b)`.
///
/// Entries in `[-1e-12, 0)` are clipped to zero and the distribution is
/// renormalized; anything more negative indicates an invalid input pair.
pub fn bell_outcome_distribution(
    channel: &PauliChannel,
    probe: &ProbeSpec,
) -> Result<RealFunctionOnPaulis> {
    if channel.n() != probe.n() {
        return Err(Error::DimensionMismatch {
            left: channel.n(),
            right: probe.n(),
        });
    }
    let e = probe.overlap_table();
    let mut g = channel.eigenvalues().clone();
    for (gv, ev) in g.values_mut().iter_mut().zip(e.values()) {
        *gv *= ev;
    }
    let mut pr = g.walsh_hadamard(Transform::Inverse);
    let mut sum = 0.0;
    for v in pr.values_mut() {
        if *v < 0.0 {
            if *v < -1e-12 {
                return Err(Error::Domain(format!(
                    "outcome probability {v} below clipping tolerance"
                )));
            }
            *v = 0.0;
        }
        sum += *v;
    }
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "outcome probabilities sum to {sum}"
        )));
    }
    for v in pr.values_mut() {
        *v /= sum;
    }
    Ok(pr)
}

/// A sequence of Bell-measurement outcomes from repeated single-copy
/// preparation of the same probe and channel.
#[derive(Debug, Clone)]
pub struct OutcomeRecord {
    pub probe: ProbeSpec,
    /// Opaque tag identifying the channel that produced the outcomes.
    pub channel_id: String,
    pub seed: u64,
    pub outcomes: Vec<PauliString>,
}

impl OutcomeRecord {
    pub fn shots(&self) -> usize {
        self.outcomes.len()
    }

    pub fn to_json(&self) -> String {
        let (alpha, lam_w) = match &self.probe {
            ProbeSpec::Alpha(p) => (Some(p.alpha()), None),
            ProbeSpec::Werner(p) => (None, Some(p.lam_w())),
        };
        serde_json::to_string(&RecordJson {
            n: self.probe.n(),
            alpha,
            lam_w,
            seed: self.seed,
            shots: self.outcomes.len(),
            outcomes: self.outcomes.iter().map(|v| v.bits()).collect(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RecordJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let probe = match (raw.alpha, raw.lam_w) {
            (Some(a), None) => ProbeSpec::Alpha(AlphaProbe::new(raw.n, a)?),
            (None, Some(l)) => ProbeSpec::Werner(WernerProbe::new(raw.n, l)?),
            _ => {
                return Err(Error::Parse(
                    "record must carry exactly one of alpha | lam_w".into(),
                ))
            }
        };
        if raw.outcomes.len() != raw.shots {
            return Err(Error::Parse("shots does not match outcome count".into()));
        }
        let outcomes = raw
            .outcomes
            .into_iter()
            .map(|bits| PauliString::new(raw.n, bits))
            .collect::<Result<Vec<_>>>()?;
        Ok(OutcomeRecord {
            probe,
            channel_id: String::new(),
            seed: raw.seed,
            outcomes,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lam_w: Option<f64>,
    seed: u64,
    shots: usize,
    outcomes: Vec<u64>,
}

/// Draws i.i.d. outcomes from [`bell_outcome_distribution`] by inverse
/// CDF over the canonical label order; deterministic per seed.
pub fn sample_outcomes(
    channel: &PauliChannel,
    probe: &ProbeSpec,
    shots: usize,
    seed: u64,
) -> Result<OutcomeRecord> {
    if shots == 0 {
        return Err(Error::OutOfRange {
            what: "shots",
            details: "must be at least 1".into(),
        });
    }
    let pr = bell_outcome_distribution(channel, probe)?;
    let n = probe.n();
    let mut cdf = Vec::with_capacity(pr.len());
    let mut acc = 0.0;
    for &p in pr.values() {
        acc += p;
        cdf.push(acc);
    }
    let mut rng = stream_rng(seed, 0);
    let outcomes = (0..shots)
        .map(|_| {
            let u: f64 = rng.gen_range(0.0..1.0);
            let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
            PauliString::new(n, idx as u64).expect("index within 4^n")
        })
        .collect();
    Ok(OutcomeRecord {
        probe: *probe,
        channel_id: String::new(),
        seed,
        outcomes,
    })
}

/// Unbiased single-eigenvalue estimator
/// `(1/N) sum_l (-1)^{<b, v_l>} / E(b)`.
pub fn estimate_eigenvalue(rec: &OutcomeRecord, b: &PauliString) -> Result<f64> {
    let e = rec.probe.overlap_e(b)?;
    if e == 0.0 {
        return Err(Error::DegenerateProbe);
    }
    let mut acc = 0i64;
    for v in &rec.outcomes {
        if b.symplectic_inner(v)? == 1 {
            acc -= 1;
        } else {
            acc += 1;
        }
    }
    Ok(acc as f64 / rec.outcomes.len() as f64 / e)
}

/// All `4^n` eigenvalue estimates at once via the fast transform of the
/// outcome histogram; agrees with [`estimate_eigenvalue`] per entry.
pub fn estimate_all_eigenvalues(rec: &OutcomeRecord) -> Result<RealFunctionOnPaulis> {
    let n = rec.probe.n();
    let mut hist = RealFunctionOnPaulis::zeros(n)?;
    for v in &rec.outcomes {
        hist.values_mut()[v.index()] += 1.0;
    }
    let shots = rec.outcomes.len() as f64;
    for h in hist.values_mut() {
        *h /= shots;
    }
    let mut est = hist.walsh_hadamard(Transform::Forward);
    let e = rec.probe.overlap_table();
    for (x, &ev) in est.values_mut().iter_mut().zip(e.values()) {
        if ev == 0.0 {
            return Err(Error::DegenerateProbe);
        }
        *x /= ev;
    }
    Ok(est)
}

/// Hoeffding sample planner with an M-fold union bound:
/// `N = ceil(E_min^{-2} * 2 eps^{-2} * ln(2 M / delta))`, where `M`
/// counts the targeted labels of weight at most `max_weight` and
/// `E_min` is the smallest overlap magnitude among them.
pub fn plan_samples(
    probe: &ProbeSpec,
    eps: f64,
    delta: f64,
    max_weight: usize,
) -> Result<u64> {
    let n = probe.n();
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::OutOfRange {
            what: "eps",
            details: format!("{eps} must be positive"),
        });
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::OutOfRange {
            what: "delta",
            details: format!("{delta} not in (0, 1)"),
        });
    }
    if max_weight > n {
        return Err(Error::OutOfRange {
            what: "max_weight",
            details: format!("{max_weight} > n = {n}"),
        });
    }
    let e_min = min_overlap_magnitude(probe, max_weight)?;
    let m: u128 = (0..=max_weight)
        .map(|u| binomial(n, u) * 3u128.pow(u as u32))
        .sum();
    let bound = (1.0 / (e_min * e_min)) * 2.0 / (eps * eps) * (2.0 * m as f64 / delta).ln();
    Ok(bound.ceil() as u64)
}

fn min_overlap_magnitude(probe: &ProbeSpec, max_weight: usize) -> Result<f64> {
    let e_min = match probe {
        // E decreases with weight, so the minimum sits at max_weight.
        ProbeSpec::Alpha(p) => p.alpha() + (1.0 - p.alpha()) * 3.0f64.powi(-(max_weight as i32)),
        ProbeSpec::Werner(p) => {
            if max_weight == 0 {
                1.0
            } else {
                let probe_e =
                    p.overlap_e(&PauliString::single(p.n(), 0, crate::pauli::PauliLetter::X)?);
                // The estimator only needs E(b) != 0; a negative overlap
                // flips signs but keeps the Hoeffding range 2/|E|.
                probe_e.abs().min(1.0)
            }
        }
    };
    if e_min < 1e-15 {
        return Err(Error::DegenerateProbe);
    }
    Ok(e_min)
}
