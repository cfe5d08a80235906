//! Symbolic associator constraints on the b-coefficients of the main family.
//!
//! The surviving f*f products of the naturally graded p-filiform family carry
//! free coefficients. Leaving them symbolic and expanding (xy)z - x(yz) over
//! all basis triples yields a system of polynomial equations (degree at most
//! two) whose exact solutions are the associative members of the family.
//! Solving is deliberately modest: linear single-variable elimination
//! followed by exhaustive grid enumeration, verified against the original
//! equations.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::Algebra;
use crate::catalog::{b_keys, p_filiform_family, BCoefficients, BKey, BValue, PFiliformSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A monomial in the unknowns: sorted variable ids with multiplicity.
/// Ordered by total degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: usize) -> Self {
        Monomial(vec![id])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        v.sort_unstable();
        Monomial(v)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate polynomial with exact rational coefficients in canonical
/// form: no zero terms, monomials in graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(), c);
        }
        p
    }

    pub fn var(id: usize) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Monomial::var(id), Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_scaled(&mut self, other: &Poly, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *entry += &(c * factor);
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = out.terms.entry(m).or_insert_with(Scalar::zero);
                *entry += &(c1 * c2);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, factor: &Scalar) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Divides by the coefficient of the least monomial, fixing a canonical
    /// representative of the equation up to scaling.
    pub fn normalized(&self) -> Poly {
        match self.terms.iter().next() {
            None => Poly::zero(),
            Some((_, lead)) => {
                let inv = lead.recip().expect("nonzero term");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, assignment: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &id in m.vars() {
                v = v * &assignment[id];
            }
            total += &v;
        }
        total
    }

    pub fn substitute(&self, id: usize, value: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.vars().iter().filter(|&&v| v == id).count();
            let rest: Vec<usize> = m.vars().iter().copied().filter(|&v| v != id).collect();
            let mut coeff = c.clone();
            for _ in 0..count {
                coeff = coeff * value;
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = out.terms.entry(Monomial(rest)).or_insert_with(Scalar::zero);
            *entry += &coeff;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// When the polynomial pins exactly one variable linearly (c*x or
    /// c*x + d), returns (variable, forced value).
    fn solve_single_linear(&self) -> Option<(usize, Scalar)> {
        let mut var: Option<(usize, Scalar)> = None;
        let mut constant = Scalar::zero();
        for (m, c) in &self.terms {
            match m.degree() {
                0 => constant = c.clone(),
                1 => {
                    if var.is_some() {
                        return None;
                    }
                    var = Some((m.vars()[0], c.clone()));
                }
                _ => return None,
            }
        }
        let (id, coeff) = var?;
        let value = &(-constant) / &coeff;
        Some((id, value))
    }

    /// Renders the polynomial with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            if m.degree() == 0 || !(c.is_one() || (-c).is_one()) {
                factors.push(c.to_string());
            } else if (-c).is_one() {
                factors.push("-".to_string());
            }
            let mut run = 0;
            let vars = m.vars();
            for (idx, &v) in vars.iter().enumerate() {
                run += 1;
                if idx + 1 == vars.len() || vars[idx + 1] != v {
                    if run == 1 {
                        factors.push(names[v].clone());
                    } else {
                        factors.push(format!("{}^{}", names[v], run));
                    }
                    run = 0;
                }
            }
            let piece = if factors.first().map(String::as_str) == Some("-") {
                format!("-{}", factors[1..].join("*"))
            } else {
                factors.join("*")
            };
            pieces.push(piece);
        }
        pieces.join(" + ")
    }
}

/// An algebra whose structure constants are polynomials in formal unknowns.
#[derive(Clone, Debug)]
pub struct SymbolicAlgebra {
    dim: usize,
    products: BTreeMap<(usize, usize), Vec<(usize, Poly)>>,
}

impl SymbolicAlgebra {
    pub fn new(dim: usize) -> Self {
        SymbolicAlgebra {
            dim,
            products: BTreeMap::new(),
        }
    }

    /// Lifts a numeric algebra into constant polynomials.
    pub fn from_algebra(a: &Algebra) -> Self {
        let mut s = SymbolicAlgebra::new(a.dim());
        for (&(i, j), entry) in a.products() {
            let lifted = entry
                .iter()
                .map(|(k, c)| (*k, Poly::constant(c.clone())))
                .collect();
            s.products.insert((i, j), lifted);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set_product(&mut self, i: usize, j: usize, entry: Vec<(usize, Poly)>) {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        let entry: Vec<(usize, Poly)> = entry.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        if entry.is_empty() {
            self.products.remove(&(i, j));
        } else {
            self.products.insert((i, j), entry);
        }
    }

    fn product(&self, i: usize, j: usize) -> &[(usize, Poly)] {
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Expands (e_i e_j) e_k - e_i (e_j e_k) over all basis triples and
    /// collects the nonzero coefficient polynomials, normalized and
    /// deduplicated in a canonical order.
    pub fn associator_system(&self, unknowns: Vec<String>) -> ConstraintSystem {
        let mut set: BTreeSet<Poly> = BTreeSet::new();
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let ij = self.product(i, j);
                for k in 1..=self.dim {
                    let mut defect: BTreeMap<usize, Poly> = BTreeMap::new();
                    for (l, p) in ij {
                        for (m, q) in self.product(*l, k) {
                            let contribution = p.mul(q);
                            defect
                                .entry(*m)
                                .or_insert_with(Poly::zero)
                                .add_scaled(&contribution, &Scalar::one());
                        }
                    }
                    for (l, p) in self.product(j, k) {
                        for (m, q) in self.product(i, *l) {
                            let contribution = p.mul(q);
                            defect
                                .entry(*m)
                                .or_insert_with(Poly::zero)
                                .add_scaled(&contribution, &Scalar::from_int(-1));
                        }
                    }
                    for poly in defect.into_values() {
                        if !poly.is_zero() {
                            set.insert(poly.normalized());
                        }
                    }
                }
            }
        }
        ConstraintSystem {
            unknowns,
            equations: set.into_iter().collect(),
        }
    }
}

/// Which slot of a b-value an unknown stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownPart {
    /// Coefficient of e_{n-p}.
    E,
    /// Coefficient of the l-th top-level f vector (1-based).
    F(usize),
}

/// One unknown of the family system.
#[derive(Clone, Debug)]
pub struct UnknownInfo {
    pub key: BKey,
    pub part: UnknownPart,
    pub name: String,
}

/// Deterministic unknown ordering for a family spec: keys sorted, e-part
/// first, then the f-parts.
pub fn unknown_layout(spec: &PFiliformSpec) -> Vec<UnknownInfo> {
    let top = *spec.s().last().expect("nonempty profile");
    let mut layout = Vec::new();
    for key in b_keys(spec.n(), spec.p(), spec.s()) {
        layout.push(UnknownInfo {
            key,
            part: UnknownPart::E,
            name: format!("b_{{{},{}}}^{{{},{}}}", key.i, key.j, key.k, key.t),
        });
        for l in 1..=top {
            layout.push(UnknownInfo {
                key,
                part: UnknownPart::F(l),
                name: format!("b_{{{},{},{}}}^{{{},{}}}", key.i, key.j, l, key.k, key.t),
            });
        }
    }
    layout
}

/// Polynomial equations over declared unknowns; every equation must vanish.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub unknowns: Vec<String>,
    pub equations: Vec<Poly>,
}

impl ConstraintSystem {
    pub fn is_satisfied_by(&self, assignment: &[Scalar]) -> Result<bool> {
        if assignment.len() != self.unknowns.len() {
            return Err(Error::AssignmentMismatch {
                expected: self.unknowns.len(),
                got: assignment.len(),
            });
        }
        Ok(self.equations.iter().all(|eq| eq.eval(assignment).is_zero()))
    }
}

/// Extracts the associator system of a family with the b-coefficients left
/// symbolic (concrete b values carried by `spec` are ignored).
pub fn associator_constraints(spec: &PFiliformSpec) -> Result<ConstraintSystem> {
    let base = PFiliformSpec::new(spec.n(), spec.p(), spec.s().to_vec())?;
    let numeric = p_filiform_family(&base)?;
    let mut sym = SymbolicAlgebra::from_algebra(&numeric);

    let layout = unknown_layout(spec);
    let m = spec.n() - spec.p();
    let sums = base.partial_sums();
    let f = |u: usize| m + u;

    // group unknown ids by key: (key, e-part id, f-part ids)
    let mut by_key: BTreeMap<BKey, Vec<(UnknownPart, usize)>> = BTreeMap::new();
    for (id, info) in layout.iter().enumerate() {
        by_key.entry(info.key).or_default().push((info.part, id));
    }
    for (key, parts) in by_key {
        let mut entry = Vec::new();
        for (part, id) in parts {
            match part {
                UnknownPart::E => entry.push((m, Poly::var(id))),
                UnknownPart::F(l) => entry.push((f(sums[m - 1] + l), Poly::var(id))),
            }
        }
        sym.set_product(f(sums[key.k] + key.i), f(sums[key.t] + key.j), entry);
    }
    Ok(sym.associator_system(layout.into_iter().map(|u| u.name).collect()))
}

/// All grid assignments satisfying the system exactly.
///
/// Single-variable linear equations are eliminated first; the remaining
/// unknowns are enumerated over the grid and every candidate is re-checked
/// against the original equations.
pub fn enumerate_solutions(
    cs: &ConstraintSystem,
    values: &[Scalar],
    budget: u128,
) -> Result<Vec<Vec<Scalar>>> {
    let n = cs.unknowns.len();
    let combinations = (values.len() as u128)
        .checked_pow(n as u32)
        .ok_or(Error::BudgetExceeded {
            combinations: u128::MAX,
            budget,
        })?;
    if combinations > budget {
        return Err(Error::BudgetExceeded {
            combinations,
            budget,
        });
    }
    if n == 0 {
        return Ok(if cs.equations.iter().all(Poly::is_zero) {
            vec![Vec::new()]
        } else {
            Vec::new()
        });
    }

    // linear elimination pass
    let mut eqs: Vec<Poly> = cs.equations.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut forced: BTreeMap<usize, Scalar> = BTreeMap::new();
    'elim: loop {
        for eq in &eqs {
            if eq.degree() == 0 {
                return Ok(Vec::new()); // nonzero constant: unsatisfiable
            }
            if let Some((id, value)) = eq.solve_single_linear() {
                forced.insert(id, value.clone());
                eqs = eqs
                    .iter()
                    .map(|e| e.substitute(id, &value))
                    .filter(|e| !e.is_zero())
                    .collect();
                continue 'elim;
            }
        }
        break;
    }
    // a forced value outside the grid rules out every grid assignment
    for value in forced.values() {
        if !values.contains(value) {
            return Ok(Vec::new());
        }
    }

    let free: Vec<usize> = (0..n).filter(|id| !forced.contains_key(id)).collect();
    let mut solutions = Vec::new();
    let mut counters = vec![0usize; free.len()];
    loop {
        let mut assignment: Vec<Scalar> = (0..n)
            .map(|id| forced.get(&id).cloned().unwrap_or_else(Scalar::zero))
            .collect();
        for (slot, &id) in free.iter().enumerate() {
            assignment[id] = values[counters[slot]].clone();
        }
        let reduced_ok = eqs.iter().all(|e| {
            e.eval(&assignment).is_zero()
        });
        if reduced_ok && cs.is_satisfied_by(&assignment)? {
            solutions.push(assignment);
        }
        // odometer over the free slots, last slot fastest
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return Ok(solutions);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < values.len() {
                break;
            }
            counters[pos] = 0;
        }
    }
}

/// Instantiates the family at the assignment and checks associativity
/// directly; the independent closing check for `enumerate_solutions`.
pub fn verify_solution(spec: &PFiliformSpec, assignment: &[Scalar]) -> Result<bool> {
    let layout = unknown_layout(spec);
    if assignment.len() != layout.len() {
        return Err(Error::AssignmentMismatch {
            expected: layout.len(),
            got: assignment.len(),
        });
    }
    let top = *spec.s().last().expect("nonempty profile");
    let mut values: BTreeMap<BKey, BValue> = BTreeMap::new();
    for (info, value) in layout.iter().zip(assignment) {
        let entry = values.entry(info.key).or_insert_with(|| BValue {
            e_coeff: Scalar::zero(),
            f_coeffs: vec![Scalar::zero(); top],
        });
        match info.part {
            UnknownPart::E => entry.e_coeff = value.clone(),
            UnknownPart::F(l) => entry.f_coeffs[l - 1] = value.clone(),
        }
    }
    let mut b = BCoefficients::empty();
    for (key, value) in values {
        b.insert(key, value);
    }
    let concrete = PFiliformSpec::new(spec.n(), spec.p(), spec.s().to_vec())?.with_b(b)?;
    Ok(p_filiform_family(&concrete)?.is_associative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn grid() -> Vec<Scalar> {
        vec![sc(-1), sc(0), sc(1)]
    }

    #[test]
    fn poly_arithmetic() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let p = x.mul(&y).add(&Poly::constant(sc(2)));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&[sc(3), sc(4)]), sc(14));
        assert_eq!(p.substitute(0, &sc(0)), Poly::constant(sc(2)));
        assert!(p.sub(&p).is_zero());
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(p.render(&names), "2 + x*y");
        assert_eq!(x.mul(&x).render(&names), "x^2");
    }

    #[test]
    fn empty_profile_gives_empty_system() {
        // no (k,t) with both chain ends nonempty
        let spec = PFiliformSpec::new(8, 4, vec![2, 1, 1, 0]).unwrap();
        let cs = associator_constraints(&spec).unwrap();
        assert!(cs.unknowns.is_empty());
        assert!(cs.equations.is_empty());
        // with no unknowns the empty assignment is the unique solution
        let sols = enumerate_solutions(&cs, &grid(), 1 << 20).unwrap();
        assert_eq!(sols, vec![Vec::<Scalar>::new()]);
    }

    #[test]
    fn single_unknown_system_forces_zero() {
        let spec = PFiliformSpec::new(6, 2, vec![1, 1, 0, 0]).unwrap();
        let cs = associator_constraints(&spec).unwrap();
        assert_eq!(cs.unknowns, vec!["b_{1,1}^{1,1}".to_string()]);
        assert!(!cs.equations.is_empty());
        assert!(cs.equations.iter().all(|e| e.degree() <= 2));
        let sols = enumerate_solutions(&cs, &grid(), 1 << 20).unwrap();
        assert_eq!(sols, vec![vec![sc(0)]]);
        assert!(verify_solution(&spec, &[sc(0)]).unwrap());
        assert!(!verify_solution(&spec, &[sc(1)]).unwrap());
    }

    #[test]
    fn zero_assignment_always_satisfies() {
        for (n, p, s) in [(6usize, 2usize, vec![1, 1, 0, 0]), (8, 4, vec![2, 2, 0, 0]), (9, 5, vec![2, 2, 1, 0])] {
            let spec = PFiliformSpec::new(n, p, s).unwrap();
            let cs = associator_constraints(&spec).unwrap();
            let zeros = vec![sc(0); cs.unknowns.len()];
            assert!(cs.is_satisfied_by(&zeros).unwrap());
            assert!(verify_solution(&spec, &zeros).unwrap());
        }
    }

    #[test]
    fn soundness_and_completeness_on_grid() {
        let spec = PFiliformSpec::new(8, 4, vec![2, 2, 0, 0]).unwrap();
        let cs = associator_constraints(&spec).unwrap();
        assert_eq!(cs.unknowns.len(), 4);
        let sols = enumerate_solutions(&cs, &grid(), 1 << 20).unwrap();
        // soundness: every returned assignment instantiates associatively
        for sol in &sols {
            assert!(verify_solution(&spec, sol).unwrap());
        }
        // completeness: brute force over the full grid agrees
        let mut brute = Vec::new();
        let g = grid();
        for a in 0..3usize {
            for b in 0..3usize {
                for c in 0..3usize {
                    for d in 0..3usize {
                        let asg = vec![g[a].clone(), g[b].clone(), g[c].clone(), g[d].clone()];
                        if verify_solution(&spec, &asg).unwrap() {
                            brute.push(asg);
                        }
                    }
                }
            }
        }
        assert_eq!(sols, brute);
        // frozen from the brute-force oracle: only b = 0 survives here
        assert_eq!(sols, vec![vec![sc(0), sc(0), sc(0), sc(0)]]);
    }

    #[test]
    fn budget_is_enforced() {
        let spec = PFiliformSpec::new(8, 4, vec![2, 2, 0, 0]).unwrap();
        let cs = associator_constraints(&spec).unwrap();
        assert!(matches!(
            enumerate_solutions(&cs, &grid(), 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hand_made_product_system() {
        // {x*y = 0} over {0,1}: three of four assignments survive
        let cs = ConstraintSystem {
            unknowns: vec!["x".into(), "y".into()],
            equations: vec![Poly::var(0).mul(&Poly::var(1))],
        };
        let sols = enumerate_solutions(&cs, &[sc(0), sc(1)], 100).unwrap();
        assert_eq!(sols.len(), 3);
        assert!(!sols.contains(&vec![sc(1), sc(1)]));
        // empty system over two unknowns: all four assignments
        let cs = ConstraintSystem {
            unknowns: vec!["x".into(), "y".into()],
            equations: vec![],
        };
        let sols = enumerate_solutions(&cs, &[sc(0), sc(1)], 100).unwrap();
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn linear_elimination_respects_grid() {
        // {2x - 1 = 0} forces x = 1/2, outside the integer grid
        let eq = Poly::var(0).scale(&sc(2)).add(&Poly::constant(sc(-1)));
        let cs = ConstraintSystem {
            unknowns: vec!["x".into()],
            equations: vec![eq],
        };
        assert!(enumerate_solutions(&cs, &grid(), 100).unwrap().is_empty());
        let half = Scalar::new(1, 2).unwrap();
        let wide = vec![sc(0), half.clone(), sc(1)];
        let sols = enumerate_solutions(&cs, &wide, 100).unwrap();
        assert_eq!(sols, vec![vec![half]]);
    }

    #[test]
    fn cancellation_step_on_intermediate_products() {
        // Pre-theorem stage at (n,p,s) = (8,3,(2,1,0,0,0)): the only
        // intermediate f*f product is f_3 f_3 = B e_4 with k = t = 1, and
        // e_1 (f_3 f_3) = B e_5 while (e_1 f_3) f_3 = 0, so the system must
        // force B = 0 -- the e_{k+t+3} cancellation.
        let base = PFiliformSpec::new(8, 3, vec![2, 1, 0, 0, 0]).unwrap();
        let numeric = p_filiform_family(&base).unwrap();
        let mut sym = SymbolicAlgebra::from_algebra(&numeric);
        let m = 5;
        let f3 = m + 3;
        sym.set_product(f3, f3, vec![(4, Poly::var(0))]);
        let cs = sym.associator_system(vec!["B".to_string()]);
        assert!(cs.equations.contains(&Poly::var(0)));
        let sols = enumerate_solutions(&cs, &grid(), 100).unwrap();
        assert_eq!(sols, vec![vec![sc(0)]]);
    }
}
