//! Batched verification suites over the whole catalog.
//!
//! Each suite sweeps a family range, checks one documented property with
//! exact arithmetic (zero tolerance everywhere) and reports PASS/FAIL with
//! the offending instances. The `verify-theorems` subcommand prints one line
//! per suite; the acceptance tests assert each suite individually.

use crate::algebra::Algebra;
use crate::catalog::{
    degree_p_filiform, filiform_variant, null_filiform, p_filiform_family,
    quasi_filiform_variant, PFiliformSpec,
};
use crate::charseq::{char_seq_algebra, CharacteristicSequence};
use crate::constraints::{associator_constraints, enumerate_solutions, verify_solution};
use crate::grading::{gradation_positions, natural_gradation, natural_graded_witness, BasisSplit};
use crate::io::{emit_algebra, parse_algebra};
use crate::scalar::Scalar;

/// Sampling parameters shared by every characteristic-sequence check.
pub const TRIALS: usize = 100;
pub const SEED_A: u64 = 17;
pub const SEED_B: u64 = 9001;

/// Result of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn from_failures(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        SuiteOutcome {
            name,
            passed: failures.is_empty(),
            summary,
            failures,
        }
    }

    /// One-line report: `PASS name (summary)` or `FAIL name: ...`.
    pub fn line(&self) -> String {
        if self.passed {
            format!("PASS {} ({})", self.name, self.summary)
        } else {
            format!(
                "FAIL {} ({}; {} failing): {}",
                self.name,
                self.summary,
                self.failures.len(),
                self.failures.first().map(String::as_str).unwrap_or("")
            )
        }
    }
}

/// A catalog instance together with its expected characteristic sequence.
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Algebra,
    pub expected_charseq: Vec<usize>,
}

fn alpha_values() -> Vec<Scalar> {
    vec![
        Scalar::zero(),
        Scalar::one(),
        Scalar::from_int(-1),
        Scalar::new(1, 2).expect("nonzero denominator"),
    ]
}

/// Null-filiform, filiform and quasi-filiform instances over the verified
/// ranges (capped by `n_max`), with the documented expected sequences.
pub fn mu_instances(n_max: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(10) {
        out.push(CatalogEntry {
            name: format!("null n={n}"),
            algebra: null_filiform(n).expect("valid parameters"),
            expected_charseq: vec![n],
        });
    }
    for n in 4..=n_max.min(10) {
        for v in 1..=4 {
            out.push(CatalogEntry {
                name: format!("filiform n={n} v={v}"),
                algebra: filiform_variant(n, v).expect("valid parameters"),
                expected_charseq: vec![n - 1, 1],
            });
        }
    }
    for n in 6..=n_max.min(10) {
        for v in 1..=4usize {
            if v == 2 {
                for alpha in alpha_values() {
                    out.push(CatalogEntry {
                        name: format!("quasi n={n} v=2 alpha={alpha}"),
                        algebra: quasi_filiform_variant(n, 2, Some(&alpha))
                            .expect("valid parameters"),
                        expected_charseq: vec![n - 2, 1, 1],
                    });
                }
            } else {
                out.push(CatalogEntry {
                    name: format!("quasi n={n} v={v}"),
                    algebra: quasi_filiform_variant(n, v, None).expect("valid parameters"),
                    expected_charseq: vec![n - 2, 1, 1],
                });
            }
        }
    }
    out
}

/// All weakly decreasing profiles of `p` into `m` parts with s_1 >= 1.
pub fn family_profiles(p: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(acc: &mut Vec<usize>, remaining: usize, max: usize, m: usize, out: &mut Vec<Vec<usize>>) {
        if acc.len() == m {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let cap = max.min(remaining);
        for v in (0..=cap).rev() {
            acc.push(v);
            rec(acc, remaining - v, v, m, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), p, p, m, &mut out);
    out.retain(|s| s[0] >= 1);
    out
}

/// Every constructor-valid main-family spec with n <= min(n_max, 9), b = 0.
pub fn family_specs(n_max: usize) -> Vec<PFiliformSpec> {
    let mut out = Vec::new();
    for n in 3..=n_max.min(9) {
        for p in 1..=n.saturating_sub(2) {
            let m = n - p;
            for s in family_profiles(p, m) {
                out.push(PFiliformSpec::new(n, p, s).expect("enumerated profiles are valid"));
            }
        }
    }
    out
}

fn family_name(spec: &PFiliformSpec) -> String {
    format!("family n={} p={} s={:?}", spec.n(), spec.p(), spec.s())
}

/// Catalog associativity: every instance of every family over the verified
/// ranges has an empty defect list.
pub fn catalog_associativity(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for entry in mu_instances(n_max) {
        count += 1;
        let defects = entry.algebra.associativity_defects();
        if !defects.is_empty() {
            failures.push(format!("{}: {} defects, first {:?}", entry.name, defects.len(), defects[0]));
        }
    }
    for spec in family_specs(n_max) {
        count += 1;
        let algebra = p_filiform_family(&spec).expect("valid spec");
        let defects = algebra.associativity_defects();
        if !defects.is_empty() {
            failures.push(format!(
                "{}: {} defects, first {:?}",
                family_name(&spec),
                defects.len(),
                defects[0]
            ));
        }
    }
    SuiteOutcome::from_failures("catalog-associativity", format!("{count} instances"), failures)
}

/// Null-filiform invariants: nilindex n+1 and power dims (n+1)-i.
pub fn null_filiform_invariants(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 1..=n_max.min(8) {
        count += 1;
        let a = null_filiform(n).expect("valid parameters");
        if a.nilindex() != Some(n + 1) {
            failures.push(format!("null n={n}: nilindex {:?} != {}", a.nilindex(), n + 1));
        }
        let dims = a.power_series().dims();
        let expected: Vec<usize> = (1..=n + 1).map(|i| (n + 1) - i).collect();
        if dims != expected {
            failures.push(format!("null n={n}: dims {dims:?} != {expected:?}"));
        }
    }
    SuiteOutcome::from_failures(
        "null-filiform-invariants",
        format!("{count} instances"),
        failures,
    )
}

fn check_charseq(name: &str, algebra: &Algebra, expected: &[usize], failures: &mut Vec<String>) {
    let c1 = char_seq_algebra(algebra, TRIALS, SEED_A);
    let c2 = char_seq_algebra(algebra, TRIALS, SEED_B);
    match (c1, c2) {
        (Ok(c1), Ok(c2)) => {
            if c1 != c2 {
                failures.push(format!("{name}: seeds disagree, {c1} vs {c2}"));
            } else if c1.parts() != expected {
                let shape = CharacteristicSequence::new(expected.to_vec())
                    .map(|s| s.to_string())
                    .unwrap_or_else(|_| format!("{expected:?}"));
                failures.push(format!("{name}: computed {c1}, expected {shape}"));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("{name}: {e}")),
    }
}

/// Characteristic sequences across the catalog at the documented values,
/// sampled with two disjoint seeds.
pub fn characteristic_sequences(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for entry in mu_instances(n_max) {
        count += 1;
        check_charseq(&entry.name, &entry.algebra, &entry.expected_charseq, &mut failures);
    }
    for spec in family_specs(n_max) {
        count += 1;
        let algebra = p_filiform_family(&spec).expect("valid spec");
        let mut expected = vec![spec.n() - spec.p()];
        expected.extend(std::iter::repeat_n(1, spec.p()));
        check_charseq(&family_name(&spec), &algebra, &expected, &mut failures);
    }
    SuiteOutcome::from_failures(
        "characteristic-sequences",
        format!("{count} instances, trials={TRIALS}, seeds {SEED_A}/{SEED_B}"),
        failures,
    )
}

/// Natural grading of the main family: the s-profile degree assignment is a
/// witness and the computed component dims are s_i + 1.
pub fn natural_grading(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for spec in family_specs(n_max) {
        count += 1;
        let name = family_name(&spec);
        let algebra = p_filiform_family(&spec).expect("valid spec");
        let m = spec.n() - spec.p();
        let mut degrees: Vec<usize> = (1..=m).collect();
        for (level, &s) in spec.s().iter().enumerate() {
            degrees.extend(std::iter::repeat_n(level + 1, s));
        }
        match natural_graded_witness(&algebra, &degrees) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{name}: witness rejected")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        match natural_gradation(&algebra) {
            Ok(g) => {
                let expected: Vec<usize> = spec.s().iter().map(|s| s + 1).collect();
                if g.dims() != expected.as_slice() {
                    failures.push(format!("{name}: dims {:?} != {expected:?}", g.dims()));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    SuiteOutcome::from_failures("natural-grading", format!("{count} instances"), failures)
}

/// Graded theorem regressions: r_s <= s on every instance, the s-profile
/// chain 0 <= s_{n-p} <= ... <= s_1 (with s_1 < p on the profiles where not
/// every f sits in degree one), and f_i f_j = 0 for i, j <= s_1.
pub fn theorem_regressions(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for spec in family_specs(n_max) {
        count += 1;
        let name = family_name(&spec);
        let algebra = p_filiform_family(&spec).expect("valid spec");
        let split = BasisSplit::from_labels(&algebra);
        match gradation_positions(&algebra, &split) {
            Ok(positions) => {
                for (idx, &r) in positions.positions().iter().enumerate() {
                    let s = idx + 1;
                    if r > s {
                        failures.push(format!("{name}: r_{s} = {r} > {s}"));
                    }
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        // s-profile chain, read off the computed gradation
        match natural_gradation(&algebra) {
            Ok(g) => {
                let computed: Vec<usize> = g.dims().iter().map(|d| d - 1).collect();
                if computed.windows(2).any(|w| w[0] < w[1]) {
                    failures.push(format!("{name}: computed profile {computed:?} not decreasing"));
                }
                // strict bound holds away from the degree-p boundary s_1 = p
                if spec.s()[0] < spec.p() && computed[0] >= spec.p() {
                    failures.push(format!(
                        "{name}: computed s_1 = {} not < p = {}",
                        computed[0],
                        spec.p()
                    ));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        // proof-step regression: degree-one f's multiply to zero
        let m = spec.n() - spec.p();
        for i in 1..=spec.s()[0] {
            for j in 1..=spec.s()[0] {
                let prod = algebra
                    .multiply(&algebra.basis_vector(m + i), &algebra.basis_vector(m + j))
                    .expect("basis vectors");
                if !crate::linalg::is_zero_vector(&prod) {
                    failures.push(format!("{name}: f{i}*f{j} != 0"));
                }
            }
        }
    }
    SuiteOutcome::from_failures("graded-theorem-regressions", format!("{count} instances"), failures)
}

/// The rejected Jordan arrangement: a one-block-later chain with
/// e_1 e_{n-p} = f_1 forces f_1 = 0 under associativity, i.e. the table has
/// a defect at (1, 1, n-p-1).
pub fn excluded_jordan_form(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 4..=n_max.min(9) {
        for p in 1..=n.saturating_sub(3) {
            let m = n - p;
            if m < 3 {
                continue;
            }
            count += 1;
            let mut products = Vec::new();
            for i in 2..m {
                products.push(((1, i), vec![(i + 1, Scalar::one())]));
            }
            products.push(((1, m), vec![(m + 1, Scalar::one())]));
            let table = Algebra::new(n, products).expect("valid table");
            let defects = table.associativity_defects();
            if !defects.contains(&(1, 1, m - 1)) {
                failures.push(format!(
                    "n={n} p={p}: defect (1,1,{}) not detected; defects {:?}",
                    m - 1,
                    defects
                ));
            }
        }
    }
    SuiteOutcome::from_failures("excluded-jordan-form", format!("{count} tables"), failures)
}

/// Constraint solving closes the loop: grid enumeration returns exactly the
/// assignments whose instantiation is associative, and b = 0 is among them.
pub fn constraint_enumeration() -> SuiteOutcome {
    let mut failures = Vec::new();
    let grid = vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()];
    let cases: Vec<(usize, usize, Vec<usize>)> = vec![
        (6, 2, vec![1, 1, 0, 0]),
        (8, 4, vec![2, 2, 0, 0]),
    ];
    let mut summary = Vec::new();
    for (n, p, s) in cases {
        let spec = match PFiliformSpec::new(n, p, s.clone()) {
            Ok(spec) => spec,
            Err(e) => {
                failures.push(format!("spec n={n} p={p}: {e}"));
                continue;
            }
        };
        let name = family_name(&spec);
        let cs = match associator_constraints(&spec) {
            Ok(cs) => cs,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        if cs.unknowns.is_empty() {
            failures.push(format!("{name}: expected a nonempty unknown set"));
            continue;
        }
        summary.push(format!("{name}: {} unknowns", cs.unknowns.len()));
        let sols = match enumerate_solutions(&cs, &grid, 1 << 24) {
            Ok(sols) => sols,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let zero = vec![Scalar::zero(); cs.unknowns.len()];
        if !sols.contains(&zero) {
            failures.push(format!("{name}: b = 0 missing from the solution set"));
        }
        // soundness and completeness against direct instantiation
        let mut brute = Vec::new();
        let mut counters = vec![0usize; cs.unknowns.len()];
        loop {
            let assignment: Vec<Scalar> =
                counters.iter().map(|&c| grid[c].clone()).collect();
            match verify_solution(&spec, &assignment) {
                Ok(true) => brute.push(assignment),
                Ok(false) => {}
                Err(e) => {
                    failures.push(format!("{name}: {e}"));
                    break;
                }
            }
            let mut pos = counters.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                counters[pos] += 1;
                if counters[pos] < grid.len() {
                    break;
                }
                counters[pos] = 0;
            }
            if counters.iter().all(|&c| c == 0) {
                break;
            }
        }
        if sols != brute {
            failures.push(format!(
                "{name}: enumeration returned {} assignments, direct check {}",
                sols.len(),
                brute.len()
            ));
        }
    }
    SuiteOutcome::from_failures("constraint-enumeration", summary.join("; "), failures)
}

/// Frozen annihilator/commutator fixtures separate the four filiform classes
/// at n = 6; computed before the build with an independent exact-elimination
/// oracle.
pub const FILIFORM6_INVARIANT_FIXTURES: [(usize, (usize, usize, usize, usize)); 4] = [
    (1, (2, 2, 2, 0)),
    (2, (1, 1, 1, 0)),
    (3, (2, 2, 1, 1)),
    (4, (1, 1, 1, 1)),
];

/// Invariant discrimination of the filiform variants at n = 6.
pub fn invariant_discrimination() -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (variant, expected) in FILIFORM6_INVARIANT_FIXTURES {
        let a = filiform_variant(6, variant).expect("valid parameters");
        let inv = a.annihilator_invariants().as_tuple();
        if inv != expected {
            failures.push(format!(
                "filiform n=6 v={variant}: invariants {inv:?} != fixture {expected:?}"
            ));
        }
        if seen.contains(&inv) {
            failures.push(format!("filiform n=6 v={variant}: invariant vector {inv:?} repeated"));
        }
        seen.push(inv);
    }
    SuiteOutcome::from_failures(
        "invariant-discrimination",
        "filiform variants at n=6".to_string(),
        failures,
    )
}

/// Round-trips the full catalog through the JSON document format and checks
/// bit-reproducibility of emission and of seeded sampling.
pub fn roundtrip_determinism(n_max: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut algebras: Vec<(String, Algebra)> = mu_instances(n_max)
        .into_iter()
        .map(|e| (e.name, e.algebra))
        .collect();
    for spec in family_specs(n_max) {
        algebras.push((
            family_name(&spec),
            p_filiform_family(&spec).expect("valid spec"),
        ));
    }
    for n in 4..=n_max.min(9) {
        for p in 1..n.saturating_sub(2) {
            algebras.push((
                format!("degree-p n={n} p={p}"),
                degree_p_filiform(n, p).expect("valid parameters"),
            ));
        }
    }
    for (name, a) in &algebras {
        count += 1;
        let text = emit_algebra(a);
        if text != emit_algebra(a) {
            failures.push(format!("{name}: emission is not reproducible"));
        }
        match parse_algebra(&text) {
            Ok((parsed, warnings)) => {
                if !warnings.is_empty() {
                    failures.push(format!("{name}: unexpected warnings {warnings:?}"));
                }
                if parsed != *a {
                    failures.push(format!("{name}: parse(emit) changed the table"));
                }
                if parsed.labels() != a.labels() {
                    failures.push(format!("{name}: labels not preserved"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    // seeded sampling is reproducible
    let probe = filiform_variant(7, 3).expect("valid parameters");
    let c1 = char_seq_algebra(&probe, TRIALS, SEED_A);
    let c2 = char_seq_algebra(&probe, TRIALS, SEED_A);
    match (c1, c2) {
        (Ok(c1), Ok(c2)) => {
            if c1 != c2 {
                failures.push(format!("sampling not reproducible: {c1} vs {c2}"));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("sampling probe: {e}")),
    }
    SuiteOutcome::from_failures(
        "roundtrip-determinism",
        format!("{count} documents"),
        failures,
    )
}

/// Runs every suite in order.
pub fn all_suites(n_max: usize) -> Vec<SuiteOutcome> {
    vec![
        catalog_associativity(n_max),
        null_filiform_invariants(n_max),
        characteristic_sequences(n_max),
        natural_grading(n_max),
        theorem_regressions(n_max),
        excluded_jordan_form(n_max),
        constraint_enumeration(),
        invariant_discrimination(),
        roundtrip_determinism(n_max),
    ]
}
