//! Stabilizer groups over GF(2), uniform covering families, the
//! density-based greedy cover, and syndrome-measurement estimation.
//!
//! A stabilizer group on `k + n` qubits (`k` ancilla, `n` system) is
//! held as its `k + n` independent mutually commuting generators plus a
//! row-reduced GF(2) basis of their labels for membership tests. The
//! ancilla qubits are the first `k` letters of every label; `Sys` takes
//! the last `n`.

use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::channel::PauliChannel;
use crate::gf2::Gf2Basis;
use crate::pauli::{binomial, Combinations, PauliLetter, PauliString};
use crate::seed::stream_rng;
use crate::{Error, Result};

/// System part of a label on `k + n` qubits: the last `n` letters.
pub fn sys_part(a: &PauliString, k: usize) -> Result<PauliString> {
    a.restrict(k, a.n() - k)
}

/// Ancilla part of a label on `k + n` qubits: the first `k` letters.
/// Empty ancillas are reported as an error since a zero-qubit label has
/// no representation; callers with `k = 0` use the label itself.
pub fn anc_part(a: &PauliString, k: usize) -> Result<PauliString> {
    a.restrict(0, k)
}

/// An abelian subgroup of the `k + n`-qubit Pauli group with a full set
/// of independent generators (phase-free labels).
#[derive(Debug, Clone)]
pub struct StabilizerGroup {
    n_total: usize,
    ancilla_count: usize,
    generators: Vec<PauliString>,
    basis: Gf2Basis,
    sys_basis: Gf2Basis,
}

impl StabilizerGroup {
    /// Validates pairwise commutation, GF(2) independence, and the
    /// generator count `k + n`.
    pub fn new(ancilla_count: usize, generators: Vec<PauliString>) -> Result<Self> {
        let n_total = match generators.first() {
            Some(g) => g.n(),
            None => return Err(Error::InvalidGenerators("no generators".into())),
        };
        if ancilla_count >= n_total {
            return Err(Error::InvalidGenerators(format!(
                "ancilla count {ancilla_count} leaves no system qubits out of {n_total}"
            )));
        }
        if generators.len() != n_total {
            return Err(Error::InvalidGenerators(format!(
                "expected {n_total} generators, got {}",
                generators.len()
            )));
        }
        let mut basis = Gf2Basis::new(2 * n_total);
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n_total {
                return Err(Error::DimensionMismatch {
                    left: n_total,
                    right: g.n(),
                });
            }
            for h in &generators[..i] {
                if g.symplectic_inner(h)? == 1 {
                    return Err(Error::InvalidGenerators(format!(
                        "generators {h} and {g} anticommute"
                    )));
                }
            }
            if !basis.insert(g.bits()) {
                return Err(Error::InvalidGenerators(format!(
                    "generator {g} is dependent on the others"
                )));
            }
        }
        debug_assert_eq!(basis.rank(), n_total);
        let mut sys_basis = Gf2Basis::new(2 * (n_total - ancilla_count));
        for g in &generators {
            sys_basis.insert(sys_part(g, ancilla_count)?.bits());
        }
        Ok(StabilizerGroup {
            n_total,
            ancilla_count,
            generators,
            basis,
            sys_basis,
        })
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn ancilla_count(&self) -> usize {
        self.ancilla_count
    }

    pub fn system_count(&self) -> usize {
        self.n_total - self.ancilla_count
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    /// Group order `2^{k+n}`.
    pub fn order(&self) -> u64 {
        1u64 << self.n_total
    }

    /// All `2^{k+n}` elements as phase-free labels, subset-mask order.
    pub fn enumerate(&self) -> Vec<PauliString> {
        let m = self.generators.len();
        let mut elements = Vec::with_capacity(1usize << m);
        elements.push(PauliString::identity(self.n_total).expect("n_total validated"));
        for mask in 1usize..(1 << m) {
            let low = mask.trailing_zeros() as usize;
            let prev = elements[mask & (mask - 1)];
            elements.push(
                prev.multiply(&self.generators[low])
                    .expect("same qubit count"),
            );
        }
        elements
    }

    /// GF(2) membership of a full-width label.
    pub fn contains(&self, a: &PauliString) -> bool {
        a.n() == self.n_total && self.basis.contains(a.bits())
    }

    /// Membership of a system label in `Sys(S)`.
    pub fn sys_contains(&self, b: &PauliString) -> bool {
        b.n() == self.system_count() && self.sys_basis.contains(b.bits())
    }

    /// All distinct system parts of group elements (the span of the
    /// system-restricted generator rows).
    pub fn sys_image(&self) -> Vec<PauliString> {
        let n = self.system_count();
        let mut span = vec![0u64];
        let mut seen = HashSet::from([0u64]);
        for g in &self.generators {
            let row = sys_part(g, self.ancilla_count).expect("k < n_total").bits();
            if seen.contains(&row) && row != 0 {
                continue;
            }
            let snapshot: Vec<u64> = span.clone();
            for v in snapshot {
                let w = v ^ row;
                if seen.insert(w) {
                    span.push(w);
                }
            }
        }
        span.into_iter()
            .map(|bits| PauliString::new(n, bits).expect("restricted width"))
            .collect()
    }

    /// Number of weight-`w` strings in the system image.
    pub fn sys_weight_count(&self, w: usize) -> usize {
        self.sys_image()
            .iter()
            .filter(|s| s.weight() == w)
            .count()
    }

    /// Deterministic coset representatives of `Z_2^{2(k+n)} / S`:
    /// subset sums of the standard basis vectors at the non-pivot
    /// columns of the reduced generator matrix, in subset-mask order.
    /// The first representative is always the trivial syndrome.
    pub fn syndrome_representatives(&self) -> Vec<PauliString> {
        let free = self.basis.complement_columns();
        debug_assert_eq!(free.len(), self.n_total);
        let count = 1usize << free.len();
        let mut reps = Vec::with_capacity(count);
        for mask in 0..count {
            let mut bits = 0u64;
            for (i, &col) in free.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    bits |= 1 << col;
                }
            }
            reps.push(PauliString::new(self.n_total, bits).expect("full width"));
        }
        reps
    }

    /// Minimum-label element of the group whose system part is `b`.
    pub fn preimage_of_sys(&self, b: &PauliString) -> Result<PauliString> {
        if !self.sys_contains(b) {
            return Err(Error::NotCovered);
        }
        self.enumerate()
            .into_iter()
            .filter(|a| sys_part(a, self.ancilla_count).expect("k < n_total") == *b)
            .min()
            .ok_or(Error::NotCovered)
    }
}

/// Exact syndrome-measurement outcome distribution for a stabilizer
/// input state sent through the channel:
/// `Pr(v) = 2^{-(k+n)} sum_{a in S} lambda(Sys(a)) (-1)^{<v,a>}`.
#[derive(Debug, Clone)]
pub struct SyndromeDistribution {
    reps: Vec<PauliString>,
    probs: Vec<f64>,
}

impl SyndromeDistribution {
    pub fn representatives(&self) -> &[PauliString] {
        &self.reps
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }
}

pub fn syndrome_distribution(
    group: &StabilizerGroup,
    channel: &PauliChannel,
) -> Result<SyndromeDistribution> {
    if channel.n() != group.system_count() {
        return Err(Error::DimensionMismatch {
            left: channel.n(),
            right: group.system_count(),
        });
    }
    let elements = group.enumerate();
    let lambdas: Vec<f64> = elements
        .iter()
        .map(|a| Ok(channel.eigenvalue(&sys_part(a, group.ancilla_count())?)))
        .collect::<Result<Vec<_>>>()?;
    let reps = group.syndrome_representatives();
    let scale = 1.0 / group.order() as f64;
    let mut probs = Vec::with_capacity(reps.len());
    let mut sum = 0.0;
    for v in &reps {
        let mut acc = 0.0;
        for (a, lam) in elements.iter().zip(&lambdas) {
            if v.symplectic_inner(a)? == 1 {
                acc -= lam;
            } else {
                acc += lam;
            }
        }
        let mut p = acc * scale;
        if p < 0.0 {
            if p < -1e-12 {
                return Err(Error::Domain(format!(
                    "syndrome probability {p} below clipping tolerance"
                )));
            }
            p = 0.0;
        }
        sum += p;
        probs.push(p);
    }
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!("syndrome probabilities sum to {sum}")));
    }
    for p in &mut probs {
        *p /= sum;
    }
    Ok(SyndromeDistribution { reps, probs })
}

/// Draws i.i.d. syndromes by inverse CDF, deterministic per seed.
pub fn sample_syndromes(
    dist: &SyndromeDistribution,
    shots: usize,
    seed: u64,
) -> Vec<PauliString> {
    let mut cdf = Vec::with_capacity(dist.probs.len());
    let mut acc = 0.0;
    for &p in &dist.probs {
        acc += p;
        cdf.push(acc);
    }
    let mut rng = stream_rng(seed, 0);
    (0..shots)
        .map(|_| {
            let u: f64 = rng.gen_range(0.0..1.0);
            let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
            dist.reps[idx]
        })
        .collect()
}

/// Unbiased syndrome estimator of `lambda(b)` for `b` in `Sys(S)`: the
/// empirical mean of `(-1)^{<v, a*>}` with `a*` the minimum-label
/// preimage of `b`.
pub fn estimate_from_syndromes(
    samples: &[PauliString],
    group: &StabilizerGroup,
    b: &PauliString,
) -> Result<f64> {
    let a_star = group.preimage_of_sys(b)?;
    if samples.is_empty() {
        return Err(Error::OutOfRange {
            what: "samples",
            details: "need at least one syndrome".into(),
        });
    }
    let mut acc = 0i64;
    for v in samples {
        if v.symplectic_inner(&a_star)? == 1 {
            acc -= 1;
        } else {
            acc += 1;
        }
    }
    Ok(acc as f64 / samples.len() as f64)
}

fn check_letters_nonidentity(letters: &[PauliLetter]) -> Result<()> {
    if letters.contains(&PauliLetter::I) {
        return Err(Error::InvalidGenerators(
            "tuple letters must be non-identity".into(),
        ));
    }
    Ok(())
}

/// The single-site family member for `k = 0`: generators `G_j` on qubit
/// `j`. Over all `3^n` tuples these groups form the uniform covering of
/// weight-w strings (w <= n/2) with covering power `C(n, w)`.
pub fn build_uniform_low(n: usize, letters: &[PauliLetter]) -> Result<StabilizerGroup> {
    if letters.len() != n {
        return Err(Error::InvalidGenerators(format!(
            "expected {n} letters, got {}",
            letters.len()
        )));
    }
    check_letters_nonidentity(letters)?;
    let generators = letters
        .iter()
        .enumerate()
        .map(|(j, &letter)| PauliString::single(n, j, letter))
        .collect::<Result<Vec<_>>>()?;
    StabilizerGroup::new(0, generators)
}

/// The `k = 0`, `w > n/2` family member built from a weight-n string
/// `g`, single-site erasure generators on the partition block `A`
/// (size `2(n-w)`), and cycled adjacent-pair generators on `B`
/// (size `2w-n`).
pub fn build_uniform_high(
    n: usize,
    w: usize,
    g: &PauliString,
    part_a: &[usize],
    part_b: &[usize],
) -> Result<StabilizerGroup> {
    if g.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: g.n(),
        });
    }
    if !(2 * w > n && w <= n) {
        return Err(Error::OutOfRange {
            what: "weight",
            details: format!("w={w} not in (n/2, n] for n={n}"),
        });
    }
    if g.weight() != n {
        return Err(Error::InvalidGenerators(format!(
            "g must have full weight {n}, got {}",
            g.weight()
        )));
    }
    check_partition(n, &[part_a, part_b])?;
    if part_a.len() != 2 * (n - w) || part_b.len() != 2 * w - n {
        return Err(Error::InvalidGenerators(format!(
            "partition sizes ({}, {}) do not match (2(n-w), 2w-n) = ({}, {})",
            part_a.len(),
            part_b.len(),
            2 * (n - w),
            2 * w - n
        )));
    }
    let mut generators = vec![*g];
    for &q in part_a {
        generators.push(PauliString::single(n, q, g.letter(q))?);
    }
    for pair in part_b.windows(2) {
        let mut b = PauliString::identity(n)?;
        b.set_letter(pair[0], g.letter(pair[0]).cycled());
        b.set_letter(pair[1], g.letter(pair[1]).cycled());
        generators.push(b);
    }
    StabilizerGroup::new(0, generators)
}

/// The `2k` Bell-pair generators pairing ancilla qubit `j` with system
/// qubit `s_subset[j]` through matching X..X and Z..Z patterns, as
/// labels over `k + n` qubits.
pub fn build_bell_generators(
    k: usize,
    n: usize,
    s_subset: &[usize],
) -> Result<Vec<PauliString>> {
    if k > n {
        return Err(Error::OutOfRange {
            what: "ancilla count",
            details: format!("k={k} > n={n}"),
        });
    }
    if s_subset.len() != k {
        return Err(Error::InvalidGenerators(format!(
            "expected {k} system indices, got {}",
            s_subset.len()
        )));
    }
    let mut seen = HashSet::new();
    for &q in s_subset {
        if q >= n || !seen.insert(q) {
            return Err(Error::InvalidGenerators(format!(
                "system index {q} out of range or duplicated"
            )));
        }
    }
    let total = k + n;
    let mut gens = Vec::with_capacity(2 * k);
    for (j, &sq) in s_subset.iter().enumerate() {
        for letter in [PauliLetter::X, PauliLetter::Z] {
            let mut g = PauliString::identity(total)?;
            g.set_letter(j, letter);
            g.set_letter(k + sq, letter);
            gens.push(g);
        }
    }
    Ok(gens)
}

/// The `2w <= k+n` family member: Bell pairs on the system subset `S`
/// plus single-site generators with the given letters on the remaining
/// system qubits.
pub fn build_uniform_ancilla_low(
    n: usize,
    k: usize,
    s_subset: &[usize],
    letters: &[PauliLetter],
) -> Result<StabilizerGroup> {
    if letters.len() != n - k {
        return Err(Error::InvalidGenerators(format!(
            "expected {} letters for the complement, got {}",
            n - k,
            letters.len()
        )));
    }
    check_letters_nonidentity(letters)?;
    let mut generators = build_bell_generators(k, n, s_subset)?;
    let t: Vec<usize> = (0..n).filter(|q| !s_subset.contains(q)).collect();
    let total = k + n;
    for (&q, &letter) in t.iter().zip(letters) {
        generators.push(PauliString::single(total, k + q, letter)?);
    }
    StabilizerGroup::new(k, generators)
}

/// The `2w > k+n` family member: Bell pairs on `S`, a weight-(n-k)
/// system string `g` supported on `A` and `B`, single-site erasure
/// generators on `A`, and cycled adjacent-pair generators on `B`.
pub fn build_uniform_ancilla_high(
    n: usize,
    k: usize,
    s_subset: &[usize],
    g_sys: &PauliString,
    part_a: &[usize],
    part_b: &[usize],
) -> Result<StabilizerGroup> {
    if g_sys.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: g_sys.n(),
        });
    }
    check_partition(n, &[s_subset, part_a, part_b])?;
    if part_b.is_empty() {
        return Err(Error::InvalidGenerators(
            "pair block B is empty; the 2w <= k+n construction applies".into(),
        ));
    }
    for &q in s_subset {
        if g_sys.letter(q) != PauliLetter::I {
            return Err(Error::InvalidGenerators(format!(
                "g must act as identity on the Bell subset (qubit {q})"
            )));
        }
    }
    for &q in part_a.iter().chain(part_b) {
        if g_sys.letter(q) == PauliLetter::I {
            return Err(Error::InvalidGenerators(format!(
                "g must act non-trivially on A and B (qubit {q})"
            )));
        }
    }
    let total = k + n;
    let mut generators = build_bell_generators(k, n, s_subset)?;
    let mut g_full = PauliString::identity(total)?;
    for q in 0..n {
        g_full.set_letter(k + q, g_sys.letter(q));
    }
    generators.push(g_full);
    for &q in part_a {
        generators.push(PauliString::single(total, k + q, g_sys.letter(q))?);
    }
    for pair in part_b.windows(2) {
        let mut b = PauliString::identity(total)?;
        b.set_letter(k + pair[0], g_sys.letter(pair[0]).cycled());
        b.set_letter(k + pair[1], g_sys.letter(pair[1]).cycled());
        generators.push(b);
    }
    StabilizerGroup::new(k, generators)
}

fn check_partition(n: usize, blocks: &[&[usize]]) -> Result<()> {
    let mut seen = vec![false; n];
    let mut count = 0usize;
    for block in blocks {
        for &q in *block {
            if q >= n || seen[q] {
                return Err(Error::InvalidGenerators(format!(
                    "index {q} out of range or duplicated in partition"
                )));
            }
            seen[q] = true;
            count += 1;
        }
    }
    if count != n {
        return Err(Error::InvalidGenerators(format!(
            "partition covers {count} of {n} qubits"
        )));
    }
    Ok(())
}

/// Closed-form covering power `Sigma(w, k)` of the uniform family for
/// the given regime; an exact count for `2w <= k+n` and a lower bound
/// for `2w > k+n`.
pub fn covering_power_formula(n: usize, k: usize, w: usize) -> u128 {
    if 2 * w <= k + n {
        (0..=k.min(w))
            .map(|m| binomial(k, m) * 3u128.pow(m as u32) * binomial(n - k, w - m))
            .sum()
    } else {
        let pair_factor = 1u128 << (2 * w - n - k - 1);
        (0..=k)
            .filter(|&m| w - m <= n - k && (n - k) - (w - m) <= 2 * (n - w))
            .map(|m| {
                binomial(k, m)
                    * 3u128.pow(m as u32)
                    * binomial(2 * (n - w), (n - k) - (w - m))
                    * pair_factor
            })
            .sum()
    }
}

/// Size of the weight-w target set `|P(w)| = C(n,w) 3^w`.
pub fn weight_class_size(n: usize, w: usize) -> u128 {
    binomial(n, w) * 3u128.pow(w as u32)
}

/// `CN(P) <= ceil(|P| ln|P| / Sigma)`, clamped to at least one group
/// for a nonempty target set. Natural logarithm, matching the
/// `exp(-Sigma N / |P|)` step that produces the bound.
pub fn cn_upper_bound(p_size: u128, sigma: u128) -> u64 {
    assert!(p_size >= 1 && sigma >= 1);
    let raw = (p_size as f64) * (p_size as f64).ln() / sigma as f64;
    (raw.ceil() as u64).max(1)
}

/// A lazily-enumerable uniform covering family for the task `(n, k, w)`.
#[derive(Debug, Clone, Copy)]
pub struct UniformFamily {
    n: usize,
    k: usize,
    w: usize,
}

impl UniformFamily {
    pub fn for_task(n: usize, k: usize, w: usize) -> Result<Self> {
        if n == 0 || n > crate::pauli::MAX_QUBITS - k {
            return Err(Error::TooManyQubits {
                n: n + k,
                max: crate::pauli::MAX_QUBITS,
            });
        }
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
        Ok(UniformFamily { n, k, w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn w(&self) -> usize {
        self.w
    }

    fn is_low(&self) -> bool {
        2 * self.w <= self.k + self.n
    }

    /// Family size `|U|`.
    pub fn len(&self) -> u128 {
        let (n, k) = (self.n, self.k);
        let tuples = 3u128.pow((n - k) as u32);
        if self.is_low() {
            binomial(n, k) * tuples
        } else {
            binomial(n, k) * binomial(n - k, 2 * (n - self.w)) * tuples
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Covering power formula for this family (lower bound in the high
    /// regime).
    pub fn sigma(&self) -> u128 {
        covering_power_formula(self.n, self.k, self.w)
    }

    /// Streams the family in deterministic constructor order.
    pub fn groups(&self) -> impl Iterator<Item = StabilizerGroup> + '_ {
        let me = *self;
        let free = self.n - self.k;
        let tuple_count = 3usize.pow(free as u32);
        Combinations::new(self.n, self.k).flat_map(move |s_subset| {
            let a_subsets: Vec<Vec<usize>> = if me.is_low() {
                vec![Vec::new()]
            } else {
                let t: Vec<usize> = (0..me.n).filter(|q| !s_subset.contains(q)).collect();
                Combinations::new(t.len(), 2 * (me.n - me.w))
                    .map(|picks| picks.into_iter().map(|i| t[i]).collect())
                    .collect()
            };
            let s_for_move = s_subset.clone();
            a_subsets.into_iter().flat_map(move |a_subset| {
                let s_subset = s_for_move.clone();
                (0..tuple_count).map(move |code| {
                    let letters = base3_letters(code, free);
                    me.instantiate(&s_subset, &a_subset, &letters)
                        .expect("family construction is valid by enumeration")
                })
            })
        })
    }

    fn instantiate(
        &self,
        s_subset: &[usize],
        a_subset: &[usize],
        letters: &[PauliLetter],
    ) -> Result<StabilizerGroup> {
        if self.is_low() {
            if self.k == 0 {
                build_uniform_low(self.n, letters)
            } else {
                build_uniform_ancilla_low(self.n, self.k, s_subset, letters)
            }
        } else {
            let t: Vec<usize> = (0..self.n).filter(|q| !s_subset.contains(q)).collect();
            let mut g = PauliString::identity(self.n)?;
            for (&q, &letter) in t.iter().zip(letters) {
                g.set_letter(q, letter);
            }
            let part_b: Vec<usize> = t.iter().copied().filter(|q| !a_subset.contains(q)).collect();
            if self.k == 0 {
                build_uniform_high(self.n, self.w, &g, a_subset, &part_b)
            } else {
                build_uniform_ancilla_high(self.n, self.k, s_subset, &g, a_subset, &part_b)
            }
        }
    }
}

fn base3_letters(mut code: usize, len: usize) -> Vec<PauliLetter> {
    (0..len)
        .map(|_| {
            let letter = PauliLetter::NON_IDENTITY[code % 3];
            code /= 3;
            letter
        })
        .collect()
}

/// A finite set of stabilizer groups covering (or claiming to cover)
/// the weight-w system Pauli strings.
#[derive(Debug, Clone)]
pub struct Covering {
    pub n: usize,
    pub ancilla_count: usize,
    pub target_weight: usize,
    pub groups: Vec<StabilizerGroup>,
}

/// Outcome of an exhaustive coverage check.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub total: usize,
    pub covered: usize,
    pub covered_fraction: f64,
    pub worst_uncovered: Option<PauliString>,
}

/// Greedy selection mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyMode {
    /// Deterministic scan; pick the first group meeting the averaging
    /// guarantee `ceil(|P_j| Sigma / |P|)`.
    FirstFit,
    /// Scan the whole family per round and pick the best group.
    ArgMax,
}

/// Density-based greedy cover over the uniform family: each round picks
/// a group covering at least `ceil(|P_j| Sigma / |P|)` uncovered
/// strings (averaging guarantees one exists), so full coverage arrives
/// within `ceil(|P| ln|P| / Sigma)` rounds.
pub fn greedy_cover(family: &UniformFamily, seed: u64, mode: GreedyMode) -> Result<Covering> {
    let (n, k, w) = (family.n(), family.k(), family.w());
    let targets: Vec<PauliString> = crate::pauli::enumerate_paulis_of_weight(n, w)?.collect();
    let mut uncovered: HashSet<PauliString> = targets.iter().copied().collect();
    let p_size = targets.len() as u128;
    let sigma = family.sigma();
    let family_len = family.len();
    let offset = if mode == GreedyMode::FirstFit {
        (crate::seed::derive_stream(seed, 0) as u128 % family_len) as usize
    } else {
        0
    };

    let mut chosen: Vec<StabilizerGroup> = Vec::new();
    let budget = cn_upper_bound(p_size, sigma.max(1)) as usize + 1;
    while !uncovered.is_empty() {
        let threshold = (uncovered.len() as u128 * sigma).div_ceil(p_size);
        let mut best: Option<(usize, StabilizerGroup)> = None;
        let scan = family
            .groups()
            .skip(offset)
            .chain(family.groups().take(offset));
        for group in scan {
            let gain = group
                .sys_image()
                .iter()
                .filter(|s| s.weight() == w && uncovered.contains(s))
                .count();
            if mode == GreedyMode::FirstFit && gain as u128 >= threshold {
                best = Some((gain, group));
                break;
            }
            if gain > best.as_ref().map_or(0, |(g, _)| *g) {
                best = Some((gain, group));
            }
        }
        let (gain, group) = best.ok_or_else(|| {
            Error::Domain("no group covers any uncovered string; family is not a covering".into())
        })?;
        debug_assert!(gain as u128 >= threshold);
        for s in group.sys_image() {
            uncovered.remove(&s);
        }
        chosen.push(group);
        if chosen.len() > budget.max(targets.len()) {
            return Err(Error::Domain(
                "greedy cover exceeded its termination budget".into(),
            ));
        }
    }
    Ok(Covering {
        n,
        ancilla_count: k,
        target_weight: w,
        groups: chosen,
    })
}

/// Exhaustively checks every weight-w system string against the
/// coverings' system images.
pub fn verify_covering(covering: &Covering) -> Result<CoverReport> {
    let images: Vec<HashSet<PauliString>> = covering
        .groups
        .iter()
        .map(|g| g.sys_image().into_iter().collect())
        .collect();
    let mut total = 0usize;
    let mut covered = 0usize;
    let mut worst = None;
    for s in crate::pauli::enumerate_paulis_of_weight(covering.n, covering.target_weight)? {
        total += 1;
        if images.iter().any(|img| img.contains(&s)) {
            covered += 1;
        } else if worst.is_none() {
            worst = Some(s);
        }
    }
    Ok(CoverReport {
        total,
        covered,
        covered_fraction: if total == 0 {
            1.0
        } else {
            covered as f64 / total as f64
        },
        worst_uncovered: worst,
    })
}

#[derive(Serialize, Deserialize)]
struct CoveringJson {
    n: usize,
    k: usize,
    w: usize,
    groups: Vec<Vec<String>>,
}

pub fn covering_to_json(covering: &Covering) -> String {
    serde_json::to_string_pretty(&CoveringJson {
        n: covering.n,
        k: covering.ancilla_count,
        w: covering.target_weight,
        groups: covering
            .groups
            .iter()
            .map(|g| g.generators().iter().map(|p| p.to_text()).collect())
            .collect(),
    })
    .expect("plain struct serializes")
}

pub fn covering_from_json(text: &str) -> Result<Covering> {
    let raw: CoveringJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let groups = raw
        .groups
        .into_iter()
        .map(|gens| {
            let parsed = gens
                .iter()
                .map(|t| PauliString::parse(t))
                .collect::<Result<Vec<_>>>()?;
            StabilizerGroup::new(raw.k, parsed)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Covering {
        n: raw.n,
        ancilla_count: raw.k,
        target_weight: raw.w,
        groups,
    })
}
