//! Bit-string representation of Pauli strings and the Walsh-Hadamard
//! transform over `Z_2^{2n}`.
//!
//! An n-qubit Pauli operator is labeled by a 2n-bit string, two bits per
//! qubit: qubit `j` owns the x-bit at position `2j` and the z-bit at
//! position `2j+1` of the packed word. The packed integer value of the
//! label is the canonical array index used by [`RealFunctionOnPaulis`],
//! so per qubit the 2-bit code reads I=0, X=1, Z=2, Y=3, with qubit 0
//! (the first letter of the text form) in the lowest bits.
//!
//! Phases are never tracked: every quantity in this crate (weights,
//! membership, transforms, spectra) is insensitive to them.

use crate::{Error, Result};

/// Largest supported qubit count for a single Pauli string label.
///
/// Two bits per qubit must fit in a `u64`. Dense `4^n` tables bound the
/// practical working range well below this.
pub const MAX_QUBITS: usize = 32;

/// A single-qubit Pauli operator, encoded as `x + 2z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum PauliLetter {
    I = 0,
    X = 1,
    Z = 2,
    Y = 3,
}

impl PauliLetter {
    pub fn from_code(code: u8) -> Self {
        match code & 3 {
            0 => PauliLetter::I,
            1 => PauliLetter::X,
            2 => PauliLetter::Z,
            _ => PauliLetter::Y,
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn to_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Z => 'Z',
            PauliLetter::Y => 'Y',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(PauliLetter::I),
            'X' => Ok(PauliLetter::X),
            'Y' => Ok(PauliLetter::Y),
            'Z' => Ok(PauliLetter::Z),
            other => Err(Error::Parse(format!("invalid Pauli letter '{other}'"))),
        }
    }

    /// The cyclic map X -> Y -> Z -> X used by the pair-generator
    /// constructions; identity maps to itself.
    pub fn cycled(self) -> Self {
        match self {
            PauliLetter::I => PauliLetter::I,
            PauliLetter::X => PauliLetter::Y,
            PauliLetter::Y => PauliLetter::Z,
            PauliLetter::Z => PauliLetter::X,
        }
    }

    /// The three non-identity letters in deterministic order.
    pub const NON_IDENTITY: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
}

/// An n-qubit Pauli string as a packed 2n-bit label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    bits: u64,
    n: usize,
}

impl PauliString {
    /// Builds a string from its packed 2n-bit label.
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        if n < MAX_QUBITS && bits >> (2 * n) != 0 {
            return Err(Error::OutOfRange {
                what: "label bits",
                details: format!("bits above position {} are set", 2 * n),
            });
        }
        Ok(PauliString { bits, n })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// Builds a weight-<=1 string with `letter` at `qubit`.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Result<Self> {
        let mut s = Self::identity(n)?;
        s.set_letter(qubit, letter);
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The packed label; also the canonical array index.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }

    pub fn x_bit(&self, qubit: usize) -> bool {
        (self.bits >> (2 * qubit)) & 1 == 1
    }

    pub fn z_bit(&self, qubit: usize) -> bool {
        (self.bits >> (2 * qubit + 1)) & 1 == 1
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        PauliLetter::from_code(((self.bits >> (2 * qubit)) & 3) as u8)
    }

    pub fn set_letter(&mut self, qubit: usize, letter: PauliLetter) {
        debug_assert!(qubit < self.n);
        self.bits = (self.bits & !(3 << (2 * qubit))) | ((letter.code() as u64) << (2 * qubit));
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        let x = self.bits & X_MASK;
        let z = self.bits >> 1 & X_MASK;
        (x | z).count_ones() as usize
    }

    /// Symplectic inner product; 1 iff the two operators anticommute.
    pub fn symplectic_inner(&self, other: &PauliString) -> Result<u8> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(symplectic_inner_raw(self.bits, other.bits))
    }

    pub fn commutes_with(&self, other: &PauliString) -> Result<bool> {
        Ok(self.symplectic_inner(other)? == 0)
    }

    /// Label of the product `P_a P_b` up to a scalar phase.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(PauliString {
            bits: self.bits ^ other.bits,
            n: self.n,
        })
    }

    /// Parses a length-n token over {I, X, Y, Z}; qubit 0 is the first
    /// character.
    pub fn parse(text: &str) -> Result<Self> {
        let n = text.chars().count();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Parse(format!(
                "text form must have 1..={MAX_QUBITS} letters, got {n}"
            )));
        }
        let mut s = Self::identity(n)?;
        for (j, c) in text.chars().enumerate() {
            s.set_letter(j, PauliLetter::from_char(c)?);
        }
        Ok(s)
    }

    /// Exact inverse of [`PauliString::parse`].
    pub fn to_text(&self) -> String {
        (0..self.n).map(|j| self.letter(j).to_char()).collect()
    }

    /// Restriction to qubits `start..start + count`.
    pub fn restrict(&self, start: usize, count: usize) -> Result<PauliString> {
        if start + count > self.n {
            return Err(Error::OutOfRange {
                what: "qubit range",
                details: format!("{start}..{} on {} qubits", start + count, self.n),
            });
        }
        let mask = if count == MAX_QUBITS {
            u64::MAX
        } else {
            (1u64 << (2 * count)) - 1
        };
        PauliString::new(count, (self.bits >> (2 * start)) & mask)
    }

    /// Concatenates `self` (low qubits) with `tail` (high qubits).
    pub fn concat(&self, tail: &PauliString) -> Result<PauliString> {
        let n = self.n + tail.n;
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        PauliString::new(n, self.bits | (tail.bits << (2 * self.n)))
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

const X_MASK: u64 = 0x5555_5555_5555_5555;

#[inline]
pub(crate) fn symplectic_inner_raw(a: u64, b: u64) -> u8 {
    // x-bits of one argument pair with z-bits of the other.
    let cross = (a & (b >> 1)) ^ ((a >> 1) & b);
    ((cross & X_MASK).count_ones() & 1) as u8
}

/// Transform direction for [`walsh_hadamard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Forward,
    Inverse,
}

/// A real-valued function on all `4^n` Pauli labels, stored densely in
/// canonical index order.
#[derive(Debug, Clone, PartialEq)]
pub struct RealFunctionOnPaulis {
    n: usize,
    values: Vec<f64>,
}

impl RealFunctionOnPaulis {
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        let n = qubits_for_len(values.len())?;
        Ok(RealFunctionOnPaulis { n, values })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        check_dense_qubits(n)?;
        Ok(RealFunctionOnPaulis {
            n,
            values: vec![0.0; 1 << (2 * n)],
        })
    }

    /// Tabulates `f` over all labels in canonical order.
    pub fn tabulate(n: usize, mut f: impl FnMut(PauliString) -> f64) -> Result<Self> {
        check_dense_qubits(n)?;
        let len = 1usize << (2 * n);
        let values = (0..len)
            .map(|i| f(PauliString { bits: i as u64, n }))
            .collect();
        Ok(RealFunctionOnPaulis { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, a: &PauliString) -> f64 {
        debug_assert_eq!(a.n, self.n);
        self.values[a.index()]
    }

    pub fn set(&mut self, a: &PauliString, v: f64) {
        debug_assert_eq!(a.n, self.n);
        self.values[a.index()] = v;
    }

    /// Iterates `(label, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (PauliString, f64)> + '_ {
        let n = self.n;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (PauliString { bits: i as u64, n }, v))
    }

    /// Applies the Walsh-Hadamard transform, returning a new table.
    pub fn walsh_hadamard(&self, direction: Transform) -> RealFunctionOnPaulis {
        let mut out = self.clone();
        walsh_hadamard_in_place(&mut out.values, direction).expect("length validated at construction");
        out
    }
}

/// Number of qubits for a dense table of length `4^n`.
pub fn qubits_for_len(len: usize) -> Result<usize> {
    let mut n = 0usize;
    let mut size = 1usize;
    while size < len {
        size *= 4;
        n += 1;
        if n > MAX_QUBITS {
            break;
        }
    }
    if size != len || n == 0 || n > MAX_QUBITS {
        return Err(Error::BadArrayLength { len });
    }
    Ok(n)
}

fn check_dense_qubits(n: usize) -> Result<()> {
    // 4^n table must be addressable; anything past ~16 qubits is already
    // far beyond what fits in memory.
    if n == 0 || n > 16 {
        return Err(Error::TooManyQubits { n, max: 16 });
    }
    Ok(())
}

/// In-place fast Walsh-Hadamard transform with the symplectic kernel
/// `(-1)^{<a,b>}`.
///
/// One radix-4 pass per qubit; the 4-point butterfly pairs the x-bit of
/// a qubit with the z-bit of the same qubit, so the cost is `O(4^n n)`.
/// The inverse applies the same passes and scales by `4^{-n}`.
pub fn walsh_hadamard_in_place(values: &mut [f64], direction: Transform) -> Result<()> {
    let n = qubits_for_len(values.len())?;
    let len = values.len();
    for j in 0..n {
        let dx = 1usize << (2 * j);
        let dz = dx << 1;
        let block = dx << 2;
        let mut base = 0;
        while base < len {
            for off in base..base + dx {
                let (t0, t1, t2, t3) = (
                    values[off],
                    values[off + dx],
                    values[off + dz],
                    values[off + dx + dz],
                );
                values[off] = t0 + t1 + t2 + t3;
                values[off + dx] = t0 + t1 - t2 - t3;
                values[off + dz] = t0 - t1 + t2 - t3;
                values[off + dx + dz] = t0 - t1 - t2 + t3;
            }
            base += block;
        }
    }
    if direction == Transform::Inverse {
        let scale = 0.25f64.powi(n as i32);
        for v in values.iter_mut() {
            *v *= scale;
        }
    }
    Ok(())
}

/// Lexicographic k-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        if k == 0 {
            self.done = true;
            return Some(out);
        }
        // Advance to the next lexicographic combination.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - (k - i) {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Streams all weight-`w` Pauli strings on `n` qubits in deterministic
/// order: support sets lexicographic, letters counted in base 3 over
/// [X, Y, Z] with the lowest-index qubit fastest.
pub fn enumerate_paulis_of_weight(
    n: usize,
    w: usize,
) -> Result<impl Iterator<Item = PauliString>> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
    }
    if w > n {
        return Err(Error::OutOfRange {
            what: "weight",
            details: format!("w={w} > n={n}"),
        });
    }
    let letter_count = 3usize.pow(w as u32);
    Ok(Combinations::new(n, w).flat_map(move |support| {
        (0..letter_count).map(move |mut code| {
            let mut s = PauliString::identity(n).expect("n validated");
            for &q in &support {
                s.set_letter(q, PauliLetter::NON_IDENTITY[code % 3]);
                code /= 3;
            }
            s
        })
    }))
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}
