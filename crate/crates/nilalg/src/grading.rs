//! Natural gradations.
//!
//! For a nilpotent algebra the quotients A_i = A^i/A^{i+1} assemble into the
//! associated graded algebra gr A with A_i * A_j inside A_{i+j}. Each A_i is
//! represented here by a chosen complement of A^{i+1} inside A^i: the
//! lexicographically first subset of the presented basis that completes
//! A^{i+1}, falling back to echelon rows when basis vectors do not suffice.
//! For tables presented in an adapted basis this reproduces the usual
//! components spanned by basis vectors.
//!
//! Natural gradedness (A isomorphic to gr A) is certified only through a
//! degree-assignment witness on the presented basis; no general isomorphism
//! search is attempted.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, solve_columns, unit_vector, Subspace, Vector};

/// Chosen complements representing the quotients A_i, with their dimensions.
#[derive(Clone, Debug)]
pub struct Gradation {
    components: Vec<Subspace>,
    dims: Vec<usize>,
}

impl Gradation {
    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// Gradation degrees r_1 <= r_2 <= ... of the f-part of a basis split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradationPositions {
    r: Vec<usize>,
}

impl GradationPositions {
    pub fn positions(&self) -> &[usize] {
        &self.r
    }
}

/// Partition of the (1-based) basis indices into an e-chain and an f-list.
#[derive(Clone, Debug)]
pub struct BasisSplit {
    pub e_chain: Vec<usize>,
    pub f_list: Vec<usize>,
}

impl BasisSplit {
    /// Splits by label: indices whose label starts with `f` form the f-list.
    pub fn from_labels(a: &Algebra) -> BasisSplit {
        let mut e_chain = Vec::new();
        let mut f_list = Vec::new();
        for i in 1..=a.dim() {
            if a.label(i).starts_with('f') {
                f_list.push(i);
            } else {
                e_chain.push(i);
            }
        }
        BasisSplit { e_chain, f_list }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        let mut seen = vec![false; dim];
        for &i in self.e_chain.iter().chain(&self.f_list) {
            if i < 1 || i > dim {
                return Err(Error::InvalidSplit(format!(
                    "index {i} out of range 1..={dim}"
                )));
            }
            if seen[i - 1] {
                return Err(Error::InvalidSplit(format!("index {i} listed twice")));
            }
            seen[i - 1] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidSplit("indices do not cover the basis".into()));
        }
        Ok(())
    }
}

/// Computes the natural gradation of a nilpotent algebra.
pub fn natural_gradation(a: &Algebra) -> Result<Gradation> {
    let series = a.power_series();
    if !series.stabilized() {
        return Err(Error::NotNilpotent);
    }
    let terms = series.terms();
    let mut components = Vec::new();
    let mut dims = Vec::new();
    // terms[L] is the zero term; components run over A^1 .. A^L
    for i in 0..terms.len().saturating_sub(1) {
        let big = &terms[i];
        let small = &terms[i + 1];
        let target = big.dim();
        let mut spanned = small.clone();
        let mut chosen: Vec<Vector> = Vec::new();
        for j in 1..=a.dim() {
            if spanned.dim() == target {
                break;
            }
            let e = unit_vector(a.dim(), j);
            if big.contains(&e) && !spanned.contains(&e) {
                spanned = spanned
                    .join(&Subspace::from_vectors(a.dim(), vec![e.clone()]))
                    .expect("equal ambient dimensions");
                chosen.push(e);
            }
        }
        // echelon fallback when presented basis vectors do not complete A^{i+1}
        if spanned.dim() < target {
            for row in big.basis() {
                if spanned.dim() == target {
                    break;
                }
                if !spanned.contains(row) {
                    spanned = spanned
                        .join(&Subspace::from_vectors(a.dim(), vec![row.clone()]))
                        .expect("equal ambient dimensions");
                    chosen.push(row.clone());
                }
            }
        }
        debug_assert_eq!(spanned.dim(), target);
        let comp = Subspace::from_vectors(a.dim(), chosen);
        dims.push(comp.dim());
        components.push(comp);
    }
    Ok(Gradation { components, dims })
}

/// The associated graded algebra on the union of the component bases.
///
/// The product of a degree-i vector and a degree-j vector is the projection
/// of their product onto the degree-(i+j) component; components beyond the
/// gradation length are truncated to zero.
pub fn graded_structure(a: &Algebra, g: &Gradation) -> Result<Algebra> {
    let series = a.power_series();
    if !series.stabilized() {
        return Err(Error::NotNilpotent);
    }
    let terms = series.terms();
    let levels = terms.len() - 1;
    if g.components.len() != levels {
        return Err(Error::InconsistentGradation(format!(
            "expected {levels} components, got {}",
            g.components.len()
        )));
    }
    let mut total = 0;
    for (i, comp) in g.components.iter().enumerate() {
        if comp.ambient_dim() != a.dim() {
            return Err(Error::InconsistentGradation("ambient dimension mismatch".into()));
        }
        let big = &terms[i];
        let small = &terms[i + 1];
        if !comp.is_subspace_of(big) {
            return Err(Error::InconsistentGradation(format!(
                "component {} is not inside the corresponding power",
                i + 1
            )));
        }
        let joined = comp.join(small).expect("equal ambient dimensions");
        if joined.dim() != comp.dim() + small.dim() || joined.dim() != big.dim() {
            return Err(Error::InconsistentGradation(format!(
                "component {} is not a complement of the next power",
                i + 1
            )));
        }
        total += comp.dim();
    }
    if total != a.dim() {
        return Err(Error::InconsistentGradation("component dimensions do not sum to dim".into()));
    }

    // Flatten component bases into the new basis; remember degrees.
    let mut new_basis: Vec<(usize, Vector)> = Vec::new(); // (degree, vector)
    for (i, comp) in g.components.iter().enumerate() {
        for row in comp.basis() {
            new_basis.push((i + 1, row.clone()));
        }
    }
    let mut labels = Vec::new();
    for (deg, vec) in &new_basis {
        let unit = (0..a.dim()).find(|&k| {
            vec[k].is_one() && vec.iter().enumerate().all(|(l, x)| l == k || x.is_zero())
        });
        match unit {
            Some(k) => labels.push(a.label(k + 1)),
            None => labels.push(format!("g{}_{}", deg, labels.len() + 1)),
        }
    }

    let mut products = Vec::new();
    for (bi, (di, u)) in new_basis.iter().enumerate() {
        for (bj, (dj, v)) in new_basis.iter().enumerate() {
            let w = a.multiply(u, v)?;
            if is_zero_vector(&w) {
                continue;
            }
            let d = di + dj;
            if d > levels {
                // product of graded pieces beyond the top degree must vanish
                return Err(Error::InconsistentGradation(
                    "nonzero product above the top degree".into(),
                ));
            }
            // express w in (component_d basis) + (A^{d+1} basis); keep the
            // component part, truncate the rest
            let comp = &g.components[d - 1];
            let mut cols: Vec<Vector> = comp.basis().to_vec();
            cols.extend(terms[d].basis().iter().cloned());
            let coeffs = solve_columns(&cols, &w).ok_or_else(|| {
                Error::InconsistentGradation("product escapes its filtration level".into())
            })?;
            let offset: usize = g.components[..d - 1].iter().map(Subspace::dim).sum();
            let mut entry = Vec::new();
            for (t, c) in coeffs.iter().take(comp.dim()).enumerate() {
                if !c.is_zero() {
                    entry.push((offset + t + 1, c.clone()));
                }
            }
            if !entry.is_empty() {
                products.push(((bi + 1, bj + 1), entry));
            }
        }
    }
    Algebra::new(a.dim(), products)?.with_labels(labels)
}

/// True iff every table product lands in the span of basis vectors whose
/// degree is the sum of the factors' degrees.
pub fn check_homogeneous(a: &Algebra, degrees: &[usize]) -> bool {
    assert_eq!(degrees.len(), a.dim(), "one degree per basis vector");
    assert!(degrees.iter().all(|&d| d >= 1), "degrees start at 1");
    for (&(i, j), entry) in a.products() {
        let want = degrees[i - 1] + degrees[j - 1];
        if entry.iter().any(|(k, _)| degrees[k - 1] != want) {
            return false;
        }
    }
    true
}

/// Witness check for natural gradedness of the presented table.
///
/// True iff the table is homogeneous for `degrees` and, for every degree d,
/// the number of basis vectors of degree d equals dim A^d - dim A^{d+1}.
/// This certifies that the identity map on the presented basis realizes an
/// isomorphism with gr A.
pub fn natural_graded_witness(a: &Algebra, degrees: &[usize]) -> Result<bool> {
    let series = a.power_series();
    if !series.stabilized() {
        return Err(Error::NotNilpotent);
    }
    if !check_homogeneous(a, degrees) {
        return Ok(false);
    }
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let levels = series.terms().len() - 1;
    if max_deg > levels {
        return Ok(false);
    }
    for d in 1..=levels {
        let count = degrees.iter().filter(|&&x| x == d).count();
        let quotient = series.dim_of_power(d) - series.dim_of_power(d + 1);
        if count != quotient {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degrees r_s of the f-part of an adapted basis in the natural gradation.
///
/// The degree of a basis vector is its filtration level (the largest d with
/// the vector inside A^d); the assignment must pass `natural_graded_witness`,
/// otherwise the algebra is not naturally graded in the presented basis.
pub fn gradation_positions(a: &Algebra, split: &BasisSplit) -> Result<GradationPositions> {
    split.validate(a.dim())?;
    let series = a.power_series();
    if !series.stabilized() {
        return Err(Error::NotNilpotent);
    }
    let terms = series.terms();
    let mut degrees = vec![0usize; a.dim()];
    for i in 1..=a.dim() {
        let e = unit_vector(a.dim(), i);
        let mut d = 0;
        for (t, term) in terms.iter().enumerate() {
            if term.contains(&e) {
                d = t + 1;
            } else {
                break;
            }
        }
        if d == 0 {
            return Err(Error::NotNaturallyGraded);
        }
        degrees[i - 1] = d;
    }
    if !natural_graded_witness(a, &degrees)? {
        return Err(Error::NotNaturallyGraded);
    }
    let chain_len = split.e_chain.len();
    let mut r: Vec<usize> = split.f_list.iter().map(|&i| degrees[i - 1]).collect();
    r.sort_unstable();
    if r.iter().any(|&d| d > chain_len) {
        return Err(Error::InvalidSplit(
            "an f vector sits deeper than the e-chain length".into(),
        ));
    }
    Ok(GradationPositions { r })
}
