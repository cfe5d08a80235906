//! Structure-constant algebras.
//!
//! An `Algebra` is a finite-dimensional algebra given by its multiplication
//! table e_i * e_j = sum_k c * e_k over exact rationals. The table is stored
//! sparsely (absent pairs multiply to zero) with 1-based basis indices. The
//! two-sided power series
//!
//!   A^1 = A,  A^{i+1} = sum_{k=1..i} A^k * A^{i+1-k}
//!
//! drives nilpotency, the nilindex and the natural gradation. Values are
//! immutable after construction and every operation is a pure function, so
//! algebras can be shared freely across threads.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Sparse multiplication table: `(i, j) -> [(k, c), ...]` meaning
/// e_i * e_j = sum c * e_k, indices 1-based, coefficients nonzero,
/// result lists sorted by index.
pub type ProductTable = BTreeMap<(usize, usize), Vec<(usize, Scalar)>>;

/// A finite-dimensional algebra presented by structure constants.
#[derive(Clone)]
pub struct Algebra {
    dim: usize,
    products: ProductTable,
    labels: Option<Vec<String>>,
}

/// Equality is structural: same dimension and same canonical table.
/// Basis labels are presentation metadata and do not take part.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.products == other.products
    }
}

impl Eq for Algebra {}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {}, {} products)", self.dim, self.products.len())
    }
}

impl Algebra {
    /// Validates and builds an algebra from a sparse table.
    ///
    /// Rejects out-of-range indices, explicit zero coefficients and duplicate
    /// result indices; the stored table is canonical.
    pub fn new<I>(dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Scalar)>)>,
    {
        let mut table = ProductTable::new();
        for ((i, j), result) in products {
            for &idx in &[i, j] {
                if idx < 1 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            let mut entry: Vec<(usize, Scalar)> = Vec::with_capacity(result.len());
            for (k, c) in result {
                if k < 1 || k > dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                if c.is_zero() {
                    return Err(Error::ZeroCoefficient {
                        left: i,
                        right: j,
                        result: k,
                    });
                }
                if entry.iter().any(|(k2, _)| *k2 == k) {
                    return Err(Error::DuplicateResultIndex {
                        left: i,
                        right: j,
                        result: k,
                    });
                }
                entry.push((k, c));
            }
            entry.sort_by_key(|(k, _)| *k);
            if !entry.is_empty() {
                table.insert((i, j), entry);
            }
        }
        Ok(Algebra {
            dim,
            products: table,
            labels: None,
        })
    }

    /// Attaches basis labels (must match the dimension).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of basis vector `i` (1-based), defaulting to `e{i}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i - 1].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn products(&self) -> &ProductTable {
        &self.products
    }

    /// Table entry for e_i * e_j; empty slice means the product is zero.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    /// Bilinear extension of the table to arbitrary vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::LengthMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                if let Some(entry) = self.products.get(&(i + 1, j + 1)) {
                    let f = xi * yj;
                    for (k, c) in entry {
                        out[k - 1] += &(&f * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of two basis vectors as a sparse accumulation.
    fn basis_product(&self, i: usize, j: usize) -> BTreeMap<usize, Scalar> {
        self.product(i, j)
            .iter()
            .map(|(k, c)| (*k, c.clone()))
            .collect()
    }

    /// All basis triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
    ///
    /// By bilinearity the algebra is associative iff this list is empty.
    pub fn associativity_defects(&self) -> Vec<(usize, usize, usize)> {
        let mut defects = Vec::new();
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let ij = self.basis_product(i, j);
                for k in 1..=self.dim {
                    let mut lhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in &ij {
                        for (m, d) in self.product(*l, k) {
                            let v = lhs.entry(*m).or_insert_with(Scalar::zero);
                            *v += &(c * d);
                        }
                    }
                    let mut rhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in self.product(j, k) {
                        for (m, d) in self.product(i, *l) {
                            let v = rhs.entry(*m).or_insert_with(Scalar::zero);
                            *v += &(c * d);
                        }
                    }
                    lhs.retain(|_, v| !v.is_zero());
                    rhs.retain(|_, v| !v.is_zero());
                    if lhs != rhs {
                        defects.push((i, j, k));
                    }
                }
            }
        }
        defects
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_defects().is_empty()
    }

    /// Span of all products u*v with u in `a`, v in `b`.
    pub(crate) fn product_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                let w = self.multiply(u, v).expect("subspace vectors have the right length");
                if !is_zero_vector(&w) {
                    gens.push(w);
                }
            }
        }
        Subspace::from_vectors(self.dim, gens)
    }

    /// The two-sided power series A^1 >= A^2 >= ...
    ///
    /// Computation stops at the first zero term (`stabilized` true) or at the
    /// first repeated term, which is included so the stabilization is visible.
    pub fn power_series(&self) -> PowerSeries {
        let mut terms = vec![Subspace::full(self.dim)];
        if terms[0].is_zero() {
            return PowerSeries {
                terms,
                stabilized: true,
            };
        }
        loop {
            let i = terms.len(); // computing A^{i+1}
            let mut next = Subspace::zero(self.dim);
            for k in 1..=i {
                let span = self.product_span(&terms[k - 1], &terms[i - k]);
                next = next.join(&span).expect("equal ambient dimensions");
            }
            let stabilized_zero = next.is_zero();
            let repeated = next.dim() == terms[i - 1].dim();
            terms.push(next);
            if stabilized_zero {
                return PowerSeries {
                    terms,
                    stabilized: true,
                };
            }
            if repeated {
                return PowerSeries {
                    terms,
                    stabilized: false,
                };
            }
        }
    }

    /// A^2 as a subspace.
    pub fn square(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.product_span(&full, &full)
    }

    /// Smallest k with A^k = 0, or `None` when the series stabilizes at a
    /// nonzero subspace.
    pub fn nilindex(&self) -> Option<usize> {
        let series = self.power_series();
        series.stabilized.then_some(series.terms.len())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilindex().is_some()
    }

    /// Matrix of the left multiplication z -> x*z; column j is x*e_j.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let cols = (1..=self.dim)
            .map(|j| self.multiply(x, &self.basis_vector(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(cols))
    }

    /// Matrix of the right multiplication z -> z*x; column i is e_i*x.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let cols = (1..=self.dim)
            .map(|i| self.multiply(&self.basis_vector(i), x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(cols))
    }

    /// Annihilator and commutator dimensions, computed exactly via kernels of
    /// stacked multiplication matrices.
    pub fn annihilator_invariants(&self) -> AnnihilatorInvariants {
        if self.dim == 0 {
            return AnnihilatorInvariants {
                left: 0,
                right: 0,
                two_sided: 0,
                commutator: 0,
            };
        }
        // x is a left annihilator iff x*e_j = 0 for all j: stack the
        // right-multiplication matrices by each basis vector.
        let right_mults: Vec<Matrix> = (1..=self.dim)
            .map(|j| {
                self.right_mult_matrix(&self.basis_vector(j))
                    .expect("basis vector has the right length")
            })
            .collect();
        let left_mults: Vec<Matrix> = (1..=self.dim)
            .map(|i| {
                self.left_mult_matrix(&self.basis_vector(i))
                    .expect("basis vector has the right length")
            })
            .collect();
        let left = Matrix::stack(&right_mults).kernel().dim();
        let right = Matrix::stack(&left_mults).kernel().dim();
        let mut all = right_mults;
        all.extend(left_mults);
        let two_sided = Matrix::stack(&all).kernel().dim();

        let mut comms = Vec::new();
        for i in 1..=self.dim {
            for j in (i + 1)..=self.dim {
                let a = self
                    .multiply(&self.basis_vector(i), &self.basis_vector(j))
                    .expect("basis vectors");
                let b = self
                    .multiply(&self.basis_vector(j), &self.basis_vector(i))
                    .expect("basis vectors");
                comms.push(crate::linalg::vec_sub(&a, &b));
            }
        }
        let commutator = Subspace::from_vectors(self.dim, comms).dim();

        AnnihilatorInvariants {
            left,
            right,
            two_sided,
            commutator,
        }
    }
}

/// The descending power series of an algebra; `terms[i]` is A^{i+1}.
#[derive(Clone, Debug)]
pub struct PowerSeries {
    terms: Vec<Subspace>,
    stabilized: bool,
}

impl PowerSeries {
    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    /// True iff a zero term was reached (i.e. the algebra is nilpotent).
    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// dim A^k for any k >= 1, extending past the computed terms.
    pub fn dim_of_power(&self, k: usize) -> usize {
        assert!(k >= 1);
        if k <= self.terms.len() {
            self.terms[k - 1].dim()
        } else if self.stabilized {
            0
        } else {
            self.terms.last().expect("nonempty").dim()
        }
    }

    /// A^k as a subspace, with the same extension rule as `dim_of_power`.
    pub fn power(&self, k: usize) -> Subspace {
        assert!(k >= 1);
        if k <= self.terms.len() {
            self.terms[k - 1].clone()
        } else if self.stabilized {
            Subspace::zero(self.terms[0].ambient_dim())
        } else {
            self.terms.last().expect("nonempty").clone()
        }
    }
}

/// Dimensions of the one-sided and two-sided annihilators and of the
/// commutator space span{xy - yx}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorInvariants {
    pub left: usize,
    pub right: usize,
    pub two_sided: usize,
    pub commutator: usize,
}

impl AnnihilatorInvariants {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.left, self.right, self.two_sided, self.commutator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{filiform_variant, null_filiform, zero_algebra};
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn construction_validates() {
        // dim 3 null-filiform table builds fine
        assert!(null_filiform(3).is_ok());
        // zero coefficient rejected
        let r = Algebra::new(1, vec![((1, 1), vec![(1, Scalar::zero())])]);
        assert!(matches!(r, Err(Error::ZeroCoefficient { .. })));
        // out-of-range index rejected
        let r = Algebra::new(2, vec![((1, 3), vec![(1, s(1))])]);
        assert!(matches!(r, Err(Error::IndexOutOfRange { .. })));
        let r = Algebra::new(2, vec![((1, 1), vec![(5, s(1))])]);
        assert!(matches!(r, Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn multiply_basis_and_bilinear() {
        let a = null_filiform(3).unwrap();
        let e = |i| a.basis_vector(i);
        assert_eq!(a.multiply(&e(1), &e(2)).unwrap(), e(3));
        // zero argument
        assert!(is_zero_vector(
            &a.multiply(&zero_vector(3), &e(1)).unwrap()
        ));
        // (e1+e2)*e1 = e2 + e3, expanded by hand
        let x = crate::linalg::vec_add(&e(1), &e(2));
        let expect = crate::linalg::vec_add(&e(2), &e(3));
        assert_eq!(a.multiply(&x, &e(1)).unwrap(), expect);
        // length mismatch is an error
        assert!(a.multiply(&zero_vector(2), &e(1)).is_err());
    }

    #[test]
    fn defects_of_null_filiform_empty() {
        for n in 3..=8 {
            assert!(null_filiform(n).unwrap().associativity_defects().is_empty());
        }
        assert!(zero_algebra(4).associativity_defects().is_empty());
    }

    #[test]
    fn defects_detect_broken_table() {
        // e1e1=e2, e2e1=e3: (e1e1)e1 = e3 but e1(e1e1) = e1e2 = 0
        let a = Algebra::new(
            3,
            vec![((1, 1), vec![(2, s(1))]), ((2, 1), vec![(3, s(1))])],
        )
        .unwrap();
        let d = a.associativity_defects();
        assert!(d.contains(&(1, 1, 1)));
    }

    #[test]
    fn power_series_dims() {
        assert_eq!(null_filiform(4).unwrap().power_series().dims(), vec![4, 3, 2, 1, 0]);
        assert_eq!(zero_algebra(5).power_series().dims(), vec![5, 0]);
        // filiform: dim A^i = n - i for i >= 2
        assert_eq!(
            filiform_variant(6, 1).unwrap().power_series().dims(),
            vec![6, 4, 3, 2, 1, 0]
        );
    }

    #[test]
    fn nilindex_conventions() {
        for n in 1..=8 {
            assert_eq!(null_filiform(n).unwrap().nilindex(), Some(n + 1));
        }
        assert_eq!(zero_algebra(3).nilindex(), Some(2));
        // idempotent element: not nilpotent
        let a = Algebra::new(1, vec![((1, 1), vec![(1, s(1))])]).unwrap();
        assert_eq!(a.nilindex(), None);
        let series = a.power_series();
        assert!(!series.stabilized());
        assert_eq!(series.dims(), vec![1, 1]);
    }

    #[test]
    fn nilindex_counts_nonzero_terms() {
        for a in [null_filiform(5).unwrap(), filiform_variant(6, 3).unwrap()] {
            let series = a.power_series();
            let nonzero = series.terms().iter().filter(|t| !t.is_zero()).count();
            assert_eq!(a.nilindex(), Some(nonzero + 1));
        }
    }

    #[test]
    fn series_strictly_decreasing_until_zero() {
        for a in [
            null_filiform(6).unwrap(),
            filiform_variant(7, 2).unwrap(),
            zero_algebra(4),
        ] {
            let series = a.power_series();
            let dims = series.dims();
            for w in dims.windows(2) {
                assert!(w[1] < w[0] || w[0] == 0);
            }
            assert_eq!(*dims.last().unwrap(), 0);
            // terms are nested: A^{i+1} inside A^i
            for w in series.terms().windows(2) {
                assert!(w[1].is_subspace_of(&w[0]));
            }
        }
    }

    #[test]
    fn annihilators_of_zero_algebra() {
        let inv = zero_algebra(4).annihilator_invariants();
        assert_eq!(inv.as_tuple(), (4, 4, 4, 0));
    }

    #[test]
    fn annihilators_of_filiform6() {
        // frozen from the exact elimination oracle
        let inv = filiform_variant(6, 1).unwrap().annihilator_invariants();
        assert_eq!(inv.two_sided, 2);
        assert_eq!(inv.commutator, 0);
        let inv3 = filiform_variant(6, 3).unwrap().annihilator_invariants();
        assert!(inv3.commutator >= 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiply_distributes(
            xs in proptest::collection::vec(-5i64..6, 6),
            ys in proptest::collection::vec(-5i64..6, 6),
            zs in proptest::collection::vec(-5i64..6, 6),
        ) {
            let a = filiform_variant(6, 4).unwrap();
            let x: Vector = xs.into_iter().map(s).collect();
            let x2: Vector = zs.into_iter().map(s).collect();
            let y: Vector = ys.into_iter().map(s).collect();
            let lhs = a.multiply(&crate::linalg::vec_add(&x, &x2), &y).unwrap();
            let rhs = crate::linalg::vec_add(
                &a.multiply(&x, &y).unwrap(),
                &a.multiply(&x2, &y).unwrap(),
            );
            prop_assert_eq!(lhs, rhs);
        }
    }
}
