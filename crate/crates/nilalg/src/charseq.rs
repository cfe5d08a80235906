//! Characteristic sequences.
//!
//! For x outside A^2, C(x) is the non-increasing list of Jordan block sizes
//! of the left multiplication operator L_x (nilpotent whenever the algebra
//! is). C(A) is the lexicographic maximum of C(x) over all x outside A^2.
//!
//! The maximum ranges over an infinite set, so it is approximated by generic
//! sampling: the lex-max is attained on a Zariski-open dense subset, so
//! random small-integer vectors attain it with probability 1. Every basis
//! vector outside A^2 is always tested as well. The result is an exact lower
//! bound for C(A) and, for any fixed seed, a deterministic one.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// A weakly decreasing sequence of positive block sizes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharacteristicSequence {
    parts: Vec<usize>,
}

impl CharacteristicSequence {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidFamily("sequence parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidFamily("sequence parts must be non-increasing".into()));
        }
        Ok(CharacteristicSequence { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The sequence (n-p, 1, ..., 1) with p trailing ones; `None` when it
    /// would not be a valid sequence (p >= n).
    pub fn p_filiform_shape(n: usize, p: usize) -> Option<Self> {
        if p >= n {
            return None;
        }
        let mut parts = vec![n - p];
        parts.extend(std::iter::repeat_n(1, p));
        CharacteristicSequence::new(parts).ok()
    }
}

impl fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lexicographic comparison; the shorter sequence is padded with zeros,
/// which for positive parts coincides with prefix comparison.
pub fn lex_compare(a: &CharacteristicSequence, b: &CharacteristicSequence) -> Ordering {
    let len = a.parts.len().max(b.parts.len());
    for i in 0..len {
        let x = a.parts.get(i).copied().unwrap_or(0);
        let y = b.parts.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl PartialOrd for CharacteristicSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CharacteristicSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

/// Matrix of L_x; column j holds the coordinates of x * e_j.
pub fn left_mult_matrix(a: &Algebra, x: &[Scalar]) -> Result<Matrix> {
    a.left_mult_matrix(x)
}

/// Jordan block sizes of a nilpotent operator.
///
/// The number of blocks of size >= k is rank(M^{k-1}) - rank(M^k). Ranks of
/// powers are computed through the image chain V_{k+1} = M(V_k), which keeps
/// the eliminations small. Errors with `NotNilpotent` when the rank chain
/// stabilizes at a nonzero value.
pub fn nilpotent_jordan_profile(m: &Matrix) -> Result<CharacteristicSequence> {
    assert_eq!(m.rows(), m.cols(), "operator matrix must be square");
    let n = m.rows();
    let mut ranks = vec![n];
    let mut image = Subspace::from_vectors(n, (0..n).map(|c| m.column(c)).collect());
    loop {
        let r = image.dim();
        if r == *ranks.last().expect("nonempty") && r != 0 {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
        if r == 0 {
            break;
        }
        let next: Vec<Vector> = image.basis().iter().map(|v| m.apply(v)).collect();
        image = Subspace::from_vectors(n, next);
    }
    // blocks of size exactly k: (r_{k-1} - r_k) - (r_k - r_{k+1})
    let kmax = ranks.len() - 1;
    let mut parts = Vec::new();
    for k in (1..=kmax).rev() {
        let ge_k = ranks[k - 1] - ranks[k];
        let ge_k1 = if k < kmax { ranks[k] - ranks[k + 1] } else { 0 };
        for _ in 0..(ge_k - ge_k1) {
            parts.push(k);
        }
    }
    CharacteristicSequence::new(parts)
}

/// C(x) for a single element; requires x outside A^2.
pub fn char_seq_element(a: &Algebra, x: &[Scalar]) -> Result<CharacteristicSequence> {
    if x.len() != a.dim() {
        return Err(Error::LengthMismatch {
            expected: a.dim(),
            got: x.len(),
        });
    }
    if a.square().contains(x) {
        return Err(Error::ElementInSquare);
    }
    nilpotent_jordan_profile(&a.left_mult_matrix(x)?)
}

/// Samples the characteristic sequence C(A) = max C(x) over x outside A^2.
///
/// Candidates: every basis vector outside A^2, plus `trials` pseudo-random
/// vectors with integer entries in [-9, 9] (deterministic from `seed`,
/// redrawn if they land inside A^2). Returns the lexicographic maximum seen.
pub fn char_seq_algebra(a: &Algebra, trials: usize, seed: u64) -> Result<CharacteristicSequence> {
    let series = a.power_series();
    if !series.stabilized() {
        return Err(Error::NotNilpotent);
    }
    let square = series.power(2);
    if square.dim() == a.dim() {
        return Err(Error::NoGeneratorOutsideSquare);
    }
    let mut best: Option<CharacteristicSequence> = None;
    let mut consider = |x: &[Scalar]| -> Result<()> {
        let profile = nilpotent_jordan_profile(&a.left_mult_matrix(x)?)?;
        debug_assert_eq!(profile.sum(), a.dim());
        if best.as_ref().is_none_or(|b| lex_compare(&profile, b) == Ordering::Greater) {
            best = Some(profile);
        }
        Ok(())
    };

    for i in 1..=a.dim() {
        let e = a.basis_vector(i);
        if !square.contains(&e) {
            consider(&e)?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0;
    let mut attempts = 0usize;
    while accepted < trials {
        attempts += 1;
        if attempts > 64 * trials + 1024 {
            return Err(Error::SamplingFailed);
        }
        let x: Vector = (0..a.dim())
            .map(|_| Scalar::from_int(rng.gen_range(-9..=9)))
            .collect();
        if square.contains(&x) {
            continue;
        }
        consider(&x)?;
        accepted += 1;
    }
    best.ok_or(Error::NoGeneratorOutsideSquare)
}

/// True iff the sampled C(A) equals (n-p, 1, ..., 1) with p ones.
pub fn is_p_filiform(a: &Algebra, p: usize, trials: usize, seed: u64) -> Result<bool> {
    let c = char_seq_algebra(a, trials, seed)?;
    Ok(match CharacteristicSequence::p_filiform_shape(a.dim(), p) {
        Some(shape) => c == shape,
        None => false,
    })
}
