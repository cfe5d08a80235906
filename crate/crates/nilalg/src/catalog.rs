//! Constructors for the classified families of nilpotent associative
//! algebras, with full parameter validation.
//!
//! Families, in an adapted basis (e_1, ..., e_{n-p}, f_1, ..., f_p) where
//! applicable:
//!
//! * null-filiform: e_i e_j = e_{i+j} for 2 <= i+j <= n (one-generated,
//!   maximal nilindex n+1);
//! * filiform variants 1..4: the chain up to i+j <= n-1 plus the variant's
//!   extra products among e_1 and e_n;
//! * quasi-filiform variants 1..4 (variant 2 carries a parameter alpha):
//!   the chain up to i+j <= n-2 plus the variant's products into e_n;
//! * degree-p filiform: null-filiform of dimension n-p plus a zero-product
//!   complement;
//! * the naturally graded p-filiform family, parameterized by an s-profile
//!   (s_1 >= s_2 >= ... >= s_{n-p} >= 0, sum = p, s_1 >= 1) and optional
//!   b-coefficients for the surviving top-degree f*f products.
//!
//! The f-chain products extend down to the first gradation level (the k = 0
//! case with the empty-sum convention); without them the f-part of the
//! gradation would never be generated from degree one and the component
//! dimensions would contradict the s-profile.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Zero-product algebra of the given dimension.
pub fn zero_algebra(n: usize) -> Algebra {
    Algebra::new(n, Vec::new()).expect("empty table is valid")
}

fn e_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn adapted_labels(m: usize, p: usize) -> Vec<String> {
    let mut l = e_labels(m);
    l.extend((1..=p).map(|i| format!("f{i}")));
    l
}

/// The unique n-dimensional null-filiform algebra: e_i e_j = e_{i+j}.
pub fn null_filiform(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::InvalidFamily("null-filiform needs n >= 1".into()));
    }
    let mut products = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if (2..=n).contains(&(i + j)) {
                products.push(((i, j), vec![(i + j, Scalar::one())]));
            }
        }
    }
    Algebra::new(n, products)?.with_labels(e_labels(n))
}

/// Filiform algebras: chain products for 2 <= i+j <= n-1 plus the variant's
/// extra products.
pub fn filiform_variant(n: usize, variant: usize) -> Result<Algebra> {
    if n <= 3 {
        return Err(Error::InvalidFamily("filiform needs n > 3".into()));
    }
    if !(1..=4).contains(&variant) {
        return Err(Error::InvalidFamily(format!("unknown filiform variant {variant}")));
    }
    let mut products = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if (2..=n - 1).contains(&(i + j)) {
                products.push(((i, j), vec![(i + j, Scalar::one())]));
            }
        }
    }
    match variant {
        1 => {}
        2 => products.push(((n, n), vec![(n - 1, Scalar::one())])),
        3 => products.push(((1, n), vec![(n - 1, Scalar::one())])),
        4 => {
            products.push(((1, n), vec![(n - 1, Scalar::one())]));
            products.push(((n, n), vec![(n - 1, Scalar::one())]));
        }
        _ => unreachable!(),
    }
    Algebra::new(n, products)?.with_labels(e_labels(n))
}

/// Naturally graded non-split quasi-filiform algebras: chain products for
/// 2 <= i+j <= n-2 plus the variant's products into e_n. `alpha` must be
/// supplied exactly for variant 2.
pub fn quasi_filiform_variant(n: usize, variant: usize, alpha: Option<&Scalar>) -> Result<Algebra> {
    if n <= 5 {
        return Err(Error::InvalidFamily("quasi-filiform needs n > 5".into()));
    }
    if !(1..=4).contains(&variant) {
        return Err(Error::InvalidFamily(format!(
            "unknown quasi-filiform variant {variant}"
        )));
    }
    if (variant == 2) != alpha.is_some() {
        return Err(Error::InvalidFamily(
            "alpha is required for variant 2 and only there".into(),
        ));
    }
    let mut products = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if (2..=n - 2).contains(&(i + j)) {
                products.push(((i, j), vec![(i + j, Scalar::one())]));
            }
        }
    }
    match variant {
        1 => products.push(((n - 1, 1), vec![(n, Scalar::one())])),
        2 => {
            products.push(((1, n - 1), vec![(n, Scalar::one())]));
            let alpha = alpha.expect("checked above");
            if !alpha.is_zero() {
                products.push(((n - 1, 1), vec![(n, alpha.clone())]));
            }
        }
        3 => {
            products.push(((1, n - 1), vec![(n, Scalar::one())]));
            products.push(((n - 1, 1), vec![(n, Scalar::one())]));
            products.push(((n - 1, n - 1), vec![(n, Scalar::one())]));
        }
        4 => {
            products.push(((1, n - 1), vec![(n, Scalar::one())]));
            products.push(((n - 1, n - 1), vec![(n, Scalar::one())]));
        }
        _ => unreachable!(),
    }
    Algebra::new(n, products)?.with_labels(e_labels(n))
}

/// Block-diagonal direct sum; cross products are zero.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let dim = a.dim() + b.dim();
    let mut products = Vec::new();
    for (&(i, j), entry) in a.products() {
        products.push(((i, j), entry.clone()));
    }
    let off = a.dim();
    for (&(i, j), entry) in b.products() {
        let shifted = entry.iter().map(|(k, c)| (k + off, c.clone())).collect();
        products.push(((i + off, j + off), shifted));
    }
    let sum = Algebra::new(dim, products).expect("shifted tables stay valid");
    match (a.labels(), b.labels()) {
        (Some(la), Some(lb)) => {
            let mut labels = la.to_vec();
            labels.extend(lb.iter().cloned());
            sum.with_labels(labels).expect("lengths add up")
        }
        _ => sum,
    }
}

/// Degree-p filiform algebra: null-filiform of dimension n-p plus a
/// p-dimensional zero-product complement.
pub fn degree_p_filiform(n: usize, p: usize) -> Result<Algebra> {
    if n <= p + 2 {
        return Err(Error::InvalidFamily("degree-p filiform needs n > p + 2".into()));
    }
    let sum = direct_sum(&null_filiform(n - p)?, &zero_algebra(p));
    sum.with_labels(adapted_labels(n - p, p))
}

/// Key of a b-coefficient: the product f_{S_k + i} * f_{S_t + j} where
/// S_k = s_1 + ... + s_k. Valid keys satisfy k + t = n - p - 2 with
/// k, t >= 1 and pick chain-end indices i, j of their levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BKey {
    pub k: usize,
    pub t: usize,
    pub i: usize,
    pub j: usize,
}

/// Coefficients of one surviving f*f product: the e_{n-p} part and the
/// coefficients of the top-level f vectors (length s_{n-p}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BValue {
    pub e_coeff: Scalar,
    pub f_coeffs: Vec<Scalar>,
}

/// Sparse assignment of b-coefficients keyed by `BKey`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BCoefficients {
    map: BTreeMap<BKey, BValue>,
}

impl BCoefficients {
    pub fn empty() -> Self {
        BCoefficients::default()
    }

    pub fn insert(&mut self, key: BKey, value: BValue) {
        self.map.insert(key, value);
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BKey, &BValue)> {
        self.map.iter()
    }
}

/// All representable b-keys for the given parameters, sorted.
pub fn b_keys(n: usize, p: usize, s: &[usize]) -> Vec<BKey> {
    let m = n - p;
    let sv = |idx: usize| if (1..=m).contains(&idx) { s[idx - 1] } else { 0 };
    let mut keys = Vec::new();
    if m < 4 {
        return keys;
    }
    for k in 1..=m - 3 {
        let t = m - 2 - k;
        if t < 1 {
            continue;
        }
        for i in sv(k + 2) + 1..=sv(k + 1) {
            for j in sv(t + 2) + 1..=sv(t + 1) {
                keys.push(BKey { k, t, i, j });
            }
        }
    }
    keys.sort();
    keys
}

/// Validated parameters of the naturally graded p-filiform family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFiliformSpec {
    n: usize,
    p: usize,
    s: Vec<usize>,
    b: BCoefficients,
}

impl PFiliformSpec {
    /// Checks the s-profile: length n-p, weakly decreasing, s_1 >= 1,
    /// sum equal to p.
    pub fn new(n: usize, p: usize, s: Vec<usize>) -> Result<Self> {
        if p < 1 || n < p + 2 {
            return Err(Error::InvalidFamily(
                "family needs p >= 1 and n >= p + 2".into(),
            ));
        }
        let m = n - p;
        if s.len() != m {
            return Err(Error::InvalidFamily(format!(
                "s-profile must have length n - p = {m}, got {}",
                s.len()
            )));
        }
        if s.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidFamily("s-profile must be weakly decreasing".into()));
        }
        if s[0] < 1 {
            return Err(Error::InvalidFamily("s_1 must be at least 1".into()));
        }
        if s.iter().sum::<usize>() != p {
            return Err(Error::InvalidFamily("s-profile must sum to p".into()));
        }
        Ok(PFiliformSpec {
            n,
            p,
            s,
            b: BCoefficients::empty(),
        })
    }

    /// Attaches b-coefficients; every key must be representable and every
    /// f-part must have length s_{n-p}.
    pub fn with_b(mut self, b: BCoefficients) -> Result<Self> {
        let valid = b_keys(self.n, self.p, &self.s);
        let top = *self.s.last().expect("nonempty profile");
        for (key, value) in b.iter() {
            if !valid.contains(key) {
                return Err(Error::InvalidFamily(format!(
                    "b-key {key:?} is not representable for this profile"
                )));
            }
            if value.f_coeffs.len() != top {
                return Err(Error::InvalidFamily(format!(
                    "b-value for {key:?} must carry {top} f-coefficients"
                )));
            }
        }
        self.b = b;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn b(&self) -> &BCoefficients {
        &self.b
    }

    /// Partial sums S_k = s_1 + ... + s_k, with S_0 = 0.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut sums = vec![0];
        for &x in &self.s {
            sums.push(sums.last().unwrap() + x);
        }
        sums
    }
}

/// Builds the main family instance on the basis (e_1..e_{n-p}, f_1..f_p).
///
/// Products: the e-chain e_i e_j = e_{i+j} for 2 <= i+j <= n-p; the f-chain
/// f_{S_k + i} e_j = f_{S_{k+j} + i} for k >= 0, k + j + 1 <= n-p and
/// 1 <= i <= s_{k+j+1}; the b-products f_{S_k+i} f_{S_t+j} into e_{n-p} and
/// the top f-level for the representable keys. Everything else is zero.
pub fn p_filiform_family(spec: &PFiliformSpec) -> Result<Algebra> {
    let m = spec.n - spec.p;
    let sums = spec.partial_sums();
    let sv = |idx: usize| if (1..=m).contains(&idx) { spec.s[idx - 1] } else { 0 };
    let e = |i: usize| i;
    let f = |u: usize| m + u;

    let mut products = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if (2..=m).contains(&(i + j)) {
                products.push(((e(i), e(j)), vec![(e(i + j), Scalar::one())]));
            }
        }
    }
    for k in 0..m {
        for j in 1..=m - k {
            if k + j + 1 > m {
                continue;
            }
            for i in 1..=sv(k + j + 1) {
                products.push(((f(sums[k] + i), e(j)), vec![(f(sums[k + j] + i), Scalar::one())]));
            }
        }
    }
    for (key, value) in spec.b.iter() {
        let mut entry = Vec::new();
        if !value.e_coeff.is_zero() {
            entry.push((e(m), value.e_coeff.clone()));
        }
        for (l, c) in value.f_coeffs.iter().enumerate() {
            if !c.is_zero() {
                entry.push((f(sums[m - 1] + l + 1), c.clone()));
            }
        }
        if !entry.is_empty() {
            products.push(((f(sums[key.k] + key.i), f(sums[key.t] + key.j)), entry));
        }
    }
    Algebra::new(spec.n, products)?.with_labels(adapted_labels(m, spec.p))
}

/// A catalog selector bundling every family and its parameters.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    NullFiliform { n: usize },
    Filiform { n: usize, variant: usize },
    QuasiFiliform { n: usize, variant: usize, alpha: Option<Scalar> },
    DegreeP { n: usize, p: usize },
    PFiliformGraded(PFiliformSpec),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Algebra> {
        match self {
            FamilySpec::NullFiliform { n } => null_filiform(*n),
            FamilySpec::Filiform { n, variant } => filiform_variant(*n, *variant),
            FamilySpec::QuasiFiliform { n, variant, alpha } => {
                quasi_filiform_variant(*n, *variant, alpha.as_ref())
            }
            FamilySpec::DegreeP { n, p } => degree_p_filiform(*n, *p),
            FamilySpec::PFiliformGraded(spec) => p_filiform_family(spec),
        }
    }

    /// Metadata describing the instance, embedded in emitted documents.
    pub fn metadata(&self) -> Vec<(String, String)> {
        let kv = |k: &str, v: String| (k.to_string(), v);
        match self {
            FamilySpec::NullFiliform { n } => {
                vec![kv("family", "null".into()), kv("n", n.to_string())]
            }
            FamilySpec::Filiform { n, variant } => vec![
                kv("family", "filiform".into()),
                kv("n", n.to_string()),
                kv("variant", variant.to_string()),
            ],
            FamilySpec::QuasiFiliform { n, variant, alpha } => {
                let mut md = vec![
                    kv("family", "quasi".into()),
                    kv("n", n.to_string()),
                    kv("variant", variant.to_string()),
                ];
                if let Some(a) = alpha {
                    md.push(kv("alpha", a.to_string()));
                }
                md
            }
            FamilySpec::DegreeP { n, p } => vec![
                kv("family", "degree-p".into()),
                kv("n", n.to_string()),
                kv("p", p.to_string()),
            ],
            FamilySpec::PFiliformGraded(spec) => {
                let s = spec
                    .s()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                vec![
                    kv("family", "p-filiform".into()),
                    kv("n", spec.n().to_string()),
                    kv("p", spec.p().to_string()),
                    kv("s", s),
                ]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charseq::char_seq_algebra;
    use crate::scalar::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn null_filiform_tables() {
        let a = null_filiform(3).unwrap();
        assert_eq!(a.product(1, 1), &[(2, Scalar::one())]);
        assert_eq!(a.product(1, 2), &[(3, Scalar::one())]);
        assert_eq!(a.product(2, 1), &[(3, Scalar::one())]);
        assert!(a.product(2, 2).is_empty());
        // n = 1 degenerates to the zero product
        assert_eq!(null_filiform(1).unwrap(), zero_algebra(1));
        assert!(null_filiform(0).is_err());
        // frozen: nilindex and characteristic sequence at n = 6
        let a6 = null_filiform(6).unwrap();
        assert_eq!(a6.nilindex(), Some(7));
        assert_eq!(char_seq_algebra(&a6, 30, 2).unwrap().parts(), &[6]);
    }

    #[test]
    fn filiform_tables() {
        let a = filiform_variant(5, 1).unwrap();
        assert!(a.product(5, 5).is_empty());
        assert_eq!(a.product(1, 3), &[(4, Scalar::one())]);
        let b = filiform_variant(5, 2).unwrap();
        assert_eq!(b.product(5, 5), &[(4, Scalar::one())]);
        let d = filiform_variant(6, 4).unwrap();
        assert_eq!(d.product(1, 6), &[(5, Scalar::one())]);
        assert_eq!(d.product(6, 6), &[(5, Scalar::one())]);
        assert!(d.associativity_defects().is_empty());
        assert!(filiform_variant(3, 1).is_err());
        assert!(filiform_variant(5, 5).is_err());
    }

    #[test]
    fn quasi_tables() {
        let a = quasi_filiform_variant(7, 1, None).unwrap();
        assert_eq!(a.product(6, 1), &[(7, Scalar::one())]);
        assert!(a.product(1, 6).is_empty());
        let zero = Scalar::zero();
        let b = quasi_filiform_variant(7, 2, Some(&zero)).unwrap();
        assert_eq!(b.product(1, 6), &[(7, Scalar::one())]);
        assert!(b.product(6, 1).is_empty()); // alpha = 0 drops the entry
        let c = quasi_filiform_variant(8, 3, None).unwrap();
        assert!(c.associativity_defects().is_empty());
        assert!(quasi_filiform_variant(5, 1, None).is_err());
        assert!(quasi_filiform_variant(7, 1, Some(&zero)).is_err());
        assert!(quasi_filiform_variant(7, 2, None).is_err());
    }

    #[test]
    fn degree_p_cases() {
        let a = degree_p_filiform(5, 2).unwrap();
        assert_eq!(a.power_series().dims(), vec![5, 2, 1, 0]);
        assert_eq!(a.label(4), "f1");
        // boundary n = p + 3
        for p in 1..=4 {
            let b = degree_p_filiform(p + 3, p).unwrap();
            assert!(b.is_associative());
            assert_eq!(b.nilindex(), Some(4));
        }
        assert!(degree_p_filiform(5, 3).is_err());
    }

    #[test]
    fn direct_sum_cases() {
        let a = filiform_variant(4, 2).unwrap();
        assert_eq!(direct_sum(&a, &zero_algebra(0)), a);
        let two_chains = direct_sum(&null_filiform(2).unwrap(), &null_filiform(2).unwrap());
        assert_eq!(two_chains.dim(), 4);
        assert_eq!(two_chains.product(1, 1), &[(2, Scalar::one())]);
        assert_eq!(two_chains.product(3, 3), &[(4, Scalar::one())]);
        assert!(two_chains.product(1, 3).is_empty());
        // nilindex of a direct sum is the max of the nilindexes
        for (x, y) in [(2usize, 3usize), (4, 2), (3, 5)] {
            let sum = direct_sum(&null_filiform(x).unwrap(), &null_filiform(y).unwrap());
            assert_eq!(sum.nilindex(), Some(x.max(y) + 1));
        }
    }

    #[test]
    fn family_products_and_validation() {
        // s = (2,1,0): f1*e1 = f3 (the k = 0 chain products), e-chain intact
        let spec = PFiliformSpec::new(6, 3, vec![2, 1, 0]).unwrap();
        let fam = p_filiform_family(&spec).unwrap();
        assert_eq!(fam.product(1, 1), &[(2, Scalar::one())]);
        assert_eq!(fam.product(1, 2), &[(3, Scalar::one())]);
        assert_eq!(fam.product(4, 1), &[(6, Scalar::one())]); // f1*e1 = f3
        assert!(fam.product(5, 1).is_empty()); // f2 is chain-end
        assert!(fam.is_associative());
        // profile validation
        assert!(PFiliformSpec::new(6, 3, vec![1, 2, 0]).is_err()); // not decreasing
        assert!(PFiliformSpec::new(6, 3, vec![2, 1]).is_err()); // wrong length
        assert!(PFiliformSpec::new(6, 3, vec![2, 0, 1]).is_err());
        assert!(PFiliformSpec::new(6, 4, vec![2, 1, 0]).is_err()); // sum != p
        assert!(PFiliformSpec::new(4, 2, vec![0, 2]).is_err()); // s1 < 1
    }

    #[test]
    fn family_reduces_to_filiform_at_p1() {
        let spec = PFiliformSpec::new(5, 1, vec![1, 0, 0, 0]).unwrap();
        let fam = p_filiform_family(&spec).unwrap();
        assert_eq!(fam, filiform_variant(5, 1).unwrap());
    }

    #[test]
    fn family_b_keys_and_values() {
        // frozen from the key enumeration oracle
        assert_eq!(
            b_keys(8, 4, &[2, 2, 0, 0]),
            vec![
                BKey { k: 1, t: 1, i: 1, j: 1 },
                BKey { k: 1, t: 1, i: 1, j: 2 },
                BKey { k: 1, t: 1, i: 2, j: 1 },
                BKey { k: 1, t: 1, i: 2, j: 2 },
            ]
        );
        assert_eq!(b_keys(8, 4, &[2, 1, 1, 0]), vec![]);
        assert_eq!(
            b_keys(9, 3, &[1, 1, 1, 0, 0, 0]),
            vec![BKey { k: 2, t: 2, i: 1, j: 1 }]
        );
        // a b-value lands in the e_{n-p} slot
        let spec = PFiliformSpec::new(6, 2, vec![1, 1, 0, 0]).unwrap();
        let mut b = BCoefficients::empty();
        b.insert(
            BKey { k: 1, t: 1, i: 1, j: 1 },
            BValue { e_coeff: s(1), f_coeffs: vec![] },
        );
        let spec_b = spec.clone().with_b(b).unwrap();
        let fam = p_filiform_family(&spec_b).unwrap();
        // f2 * f2 = e4
        assert_eq!(fam.product(6, 6), &[(4, Scalar::one())]);
        // rejected: key not representable
        let mut bad = BCoefficients::empty();
        bad.insert(
            BKey { k: 1, t: 2, i: 1, j: 1 },
            BValue { e_coeff: s(1), f_coeffs: vec![] },
        );
        assert!(spec.with_b(bad).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn family_proof_step_regressions() {
        // f_i f_j = 0 for i, j <= s_1, and chain-end products vanish exactly
        // when the profile says so
        for (n, p, s_profile) in [(6usize, 3usize, vec![2, 1, 0]), (7, 3, vec![2, 1, 0, 0]), (8, 4, vec![2, 2, 0, 0])] {
            let spec = PFiliformSpec::new(n, p, s_profile.clone()).unwrap();
            let fam = p_filiform_family(&spec).unwrap();
            let m = n - p;
            for i in 1..=s_profile[0] {
                for j in 1..=s_profile[0] {
                    let prod = fam
                        .multiply(&fam.basis_vector(m + i), &fam.basis_vector(m + j))
                        .unwrap();
                    assert!(crate::linalg::is_zero_vector(&prod));
                }
            }
            // lemma ranges: f_{S_k+i} e_j = 0 exactly when s_{k+j+1} < i <= s_{k+j}
            let sums = spec.partial_sums();
            let sv = |idx: usize| if (1..=m).contains(&idx) { s_profile[idx - 1] } else { 0 };
            for k in 0..m {
                for j in 1..=m - k {
                    for i in 1..=sv(k + 1) {
                        let prod = fam
                            .multiply(&fam.basis_vector(m + sums[k] + i), &fam.basis_vector(j))
                            .unwrap();
                        let alive = i <= sv(k + j + 1);
                        assert_eq!(!crate::linalg::is_zero_vector(&prod), alive);
                    }
                }
            }
        }
    }

    #[test]
    fn family_spec_build_dispatch() {
        let specs = vec![
            FamilySpec::NullFiliform { n: 4 },
            FamilySpec::Filiform { n: 5, variant: 3 },
            FamilySpec::QuasiFiliform { n: 6, variant: 2, alpha: Some(Scalar::new(1, 2).unwrap()) },
            FamilySpec::DegreeP { n: 6, p: 2 },
            FamilySpec::PFiliformGraded(PFiliformSpec::new(6, 2, vec![1, 1, 0, 0]).unwrap()),
        ];
        for spec in specs {
            let a = spec.build().unwrap();
            assert!(a.is_nilpotent());
            assert!(!spec.metadata().is_empty());
        }
    }
}
