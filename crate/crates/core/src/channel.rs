//! Pauli channels in the dual error-rate / eigenvalue representation.
//!
//! A channel stores both `p(a)` and `lambda(b)` eagerly; estimators
//! consume the eigenvalues while validation and the hypothesis game
//! consume the rates. The two tables are Walsh-Hadamard duals of each
//! other and are checked for CPTP validity on every construction path.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::pauli::{PauliString, RealFunctionOnPaulis, Transform};
use crate::seed::stream_rng;
use crate::{Error, Result};

/// Absolute tolerance on the error-rate sum.
pub const SUM_TOL: f64 = 1e-9;
/// Slack below zero tolerated in error rates (transform rounding dust).
pub const NEG_TOL: f64 = 1e-12;

/// Sign of the spike eigenvalue in the hypothesis channels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// An n-qubit Pauli channel.
#[derive(Debug, Clone)]
pub struct PauliChannel {
    n: usize,
    error_rates: RealFunctionOnPaulis,
    eigenvalues: RealFunctionOnPaulis,
}

impl PauliChannel {
    /// Builds a channel from its Pauli error rates.
    pub fn from_error_rates(p: RealFunctionOnPaulis) -> Result<Self> {
        validate_rates(&p)?;
        let eigenvalues = p.walsh_hadamard(Transform::Forward);
        Ok(PauliChannel {
            n: p.n(),
            error_rates: p,
            eigenvalues,
        })
    }

    /// Builds a channel from its Pauli eigenvalues.
    pub fn from_eigenvalues(lam: RealFunctionOnPaulis) -> Result<Self> {
        let p = lam.walsh_hadamard(Transform::Inverse);
        validate_rates(&p)?;
        Ok(PauliChannel {
            n: lam.n(),
            error_rates: p,
            eigenvalues: lam,
        })
    }

    /// The identity channel: `p = delta_{a,0}`, all eigenvalues one.
    pub fn identity(n: usize) -> Result<Self> {
        let mut p = RealFunctionOnPaulis::zeros(n)?;
        p.values_mut()[0] = 1.0;
        Self::from_error_rates(p)
    }

    /// The completely depolarizing channel: uniform rates,
    /// `lambda(b) = delta_{b,0}`.
    pub fn depolarizing(n: usize) -> Result<Self> {
        let mut lam = RealFunctionOnPaulis::zeros(n)?;
        lam.values_mut()[0] = 1.0;
        Self::from_eigenvalues(lam)
    }

    /// The single-spike hypothesis channel with
    /// `lambda(b) = delta_{b,0} + 2 s eps delta_{b,e}`.
    pub fn spike(n: usize, e: &PauliString, s: Sign, eps: f64) -> Result<Self> {
        if e.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: e.n(),
            });
        }
        if e.is_identity() {
            return Err(Error::OutOfRange {
                what: "spike label",
                details: "e must be non-identity (lambda(0) is pinned to 1)".into(),
            });
        }
        if !(eps > 0.0 && eps <= 0.5) {
            return Err(Error::OutOfRange {
                what: "spike eps",
                details: format!("eps={eps} outside (0, 1/2] makes p(a) negative"),
            });
        }
        let mut lam = RealFunctionOnPaulis::zeros(n)?;
        lam.values_mut()[0] = 1.0;
        lam.set(e, 2.0 * s.value() * eps);
        Self::from_eigenvalues(lam)
    }

    /// A random valid channel: rates are independent Exp(1) draws
    /// normalized to sum one (flat Dirichlet), deterministic per seed.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        let mut rng = stream_rng(seed, 0);
        let len = 1usize << (2 * n);
        let mut p = Vec::with_capacity(len);
        let mut total = 0.0;
        for _ in 0..len {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let draw = -u.ln();
            total += draw;
            p.push(draw);
        }
        for v in &mut p {
            *v /= total;
        }
        Self::from_error_rates(RealFunctionOnPaulis::from_values(p)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn error_rates(&self) -> &RealFunctionOnPaulis {
        &self.error_rates
    }

    pub fn eigenvalues(&self) -> &RealFunctionOnPaulis {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, b: &PauliString) -> f64 {
        self.eigenvalues.get(b)
    }

    pub fn error_rate(&self, a: &PauliString) -> f64 {
        self.error_rates.get(a)
    }

    /// Serializes as `{"n": .., "p": [..]}`; eigenvalues are recomputed
    /// on load.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ChannelJson {
            n: self.n,
            p: self.error_rates.values().to_vec(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ChannelJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let p = RealFunctionOnPaulis::from_values(raw.p)?;
        if p.n() != raw.n {
            return Err(Error::DimensionMismatch {
                left: raw.n,
                right: p.n(),
            });
        }
        Self::from_error_rates(p)
    }
}

#[derive(Serialize, Deserialize)]
struct ChannelJson {
    n: usize,
    p: Vec<f64>,
}

fn validate_rates(p: &RealFunctionOnPaulis) -> Result<()> {
    let mut sum = 0.0;
    let mut worst = f64::INFINITY;
    let mut worst_idx = 0usize;
    for (i, &v) in p.values().iter().enumerate() {
        sum += v;
        if v < worst {
            worst = v;
            worst_idx = i;
        }
    }
    if worst < -NEG_TOL {
        let label = PauliString::new(p.n(), worst_idx as u64)?;
        return Err(Error::InvalidChannel {
            reason: format!("p({label}) = {worst} is negative beyond tolerance"),
        });
    }
    if (sum - 1.0).abs() > SUM_TOL {
        return Err(Error::InvalidChannel {
            reason: format!("error rates sum to {sum}, expected 1"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::enumerate_paulis_of_weight;

    #[test]
    fn identity_channel_has_unit_eigenvalues() {
        let ch = PauliChannel::identity(2).unwrap();
        for &v in ch.eigenvalues().values() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn uniform_rates_give_depolarizing() {
        let n = 2;
        let len = 1usize << (2 * n);
        let p = RealFunctionOnPaulis::from_values(vec![1.0 / len as f64; len]).unwrap();
        let ch = PauliChannel::from_error_rates(p).unwrap();
        assert!((ch.eigenvalues().values()[0] - 1.0).abs() < 1e-12);
        for &v in &ch.eigenvalues().values()[1..] {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvalue_construction_roundtrips() {
        let ch = PauliChannel::random(2, 11).unwrap();
        let ch2 = PauliChannel::from_eigenvalues(ch.eigenvalues().clone()).unwrap();
        for (a, b) in ch
            .error_rates()
            .values()
            .iter()
            .zip(ch2.error_rates().values())
        {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn delta_eigenvalues_give_uniform_rates() {
        let ch = PauliChannel::depolarizing(2).unwrap();
        for &v in ch.error_rates().values() {
            assert!((v - 1.0 / 16.0).abs() < 1e-12);
        }
    }

    #[test]
    fn spike_channel_reads_back() {
        let e = PauliString::parse("XZ").unwrap();
        let ch = PauliChannel::spike(2, &e, Sign::Minus, 0.1).unwrap();
        assert!((ch.eigenvalue(&e) + 0.2).abs() < 1e-15);
        assert!((ch.eigenvalues().values()[0] - 1.0).abs() < 1e-15);

        // eps = 1/2 with s = +1 is still CPTP.
        let ch = PauliChannel::spike(2, &e, Sign::Plus, 0.5).unwrap();
        assert!((ch.eigenvalue(&e) - 1.0).abs() < 1e-15);

        let id = PauliString::identity(2).unwrap();
        assert!(PauliChannel::spike(2, &id, Sign::Plus, 0.1).is_err());
        assert!(PauliChannel::spike(2, &e, Sign::Plus, 0.6).is_err());
        assert!(PauliChannel::spike(2, &e, Sign::Plus, 0.0).is_err());
    }

    #[test]
    fn two_term_eigenvalues_are_valid() {
        // lambda = delta_{b,0} + 2 s eps delta_{b,e} built directly from
        // the eigenvalue table.
        for e in enumerate_paulis_of_weight(2, 1).unwrap() {
            let mut lam = RealFunctionOnPaulis::zeros(2).unwrap();
            lam.values_mut()[0] = 1.0;
            lam.set(&e, 0.2);
            let ch = PauliChannel::from_eigenvalues(lam).unwrap();
            for (a, p) in ch.error_rates().iter() {
                let sign = if a.symplectic_inner(&e).unwrap() == 1 {
                    -1.0
                } else {
                    1.0
                };
                let expect = (1.0 + 0.2 * sign) / 16.0;
                assert!((p - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn random_channel_is_deterministic_and_valid() {
        let a = PauliChannel::random(3, 42).unwrap();
        let b = PauliChannel::random(3, 42).unwrap();
        assert_eq!(a.error_rates().values(), b.error_rates().values());

        assert!((a.eigenvalues().values()[0] - 1.0).abs() < 1e-12);
        for &v in a.eigenvalues().values() {
            assert!(v.abs() <= 1.0 + 1e-12);
        }
        let c = PauliChannel::random(3, 43).unwrap();
        assert_ne!(a.error_rates().values(), c.error_rates().values());
    }

    #[test]
    fn invalid_rates_are_rejected() {
        let mut p = RealFunctionOnPaulis::zeros(1).unwrap();
        p.values_mut()[0] = 0.5;
        assert!(matches!(
            PauliChannel::from_error_rates(p),
            Err(Error::InvalidChannel { .. })
        ));

        let mut bad = RealFunctionOnPaulis::zeros(1).unwrap();
        bad.values_mut()[0] = 1.5;
        bad.values_mut()[1] = -0.5;
        let err = PauliChannel::from_error_rates(bad).unwrap_err();
        assert!(err.to_string().contains("negative"));
    }

    #[test]
    fn json_roundtrip() {
        let ch = PauliChannel::random(2, 5).unwrap();
        let back = PauliChannel::from_json(&ch.to_json()).unwrap();
        assert_eq!(ch.error_rates().values(), back.error_rates().values());
        assert!(!ch.to_json().contains("eigen"));
    }
}
