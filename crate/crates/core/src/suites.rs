//! Named verification suites, each a list of claim reports for one parameter.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::Bounds;
use crate::diagram::{binomial, enumerate_planar, PlanarRookDiagram, RookDiagram, Subset};
use crate::error::{Error, Result};
use crate::report::{ClaimReport, VerificationReport};
use crate::scalar::format_rational;
use crate::{gl11, hecke, rook_algebra, uq, Rational};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    RookModules,
    MatrixUnits,
    Gl,
    Quantum,
    Centralizer,
    QCentralizer,
    Hecke,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::RookModules,
        Suite::MatrixUnits,
        Suite::Gl,
        Suite::Quantum,
        Suite::Centralizer,
        Suite::QCentralizer,
        Suite::Hecke,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RookModules => "rook-modules",
            Suite::MatrixUnits => "matrix-units",
            Suite::Gl => "gl",
            Suite::Quantum => "quantum",
            Suite::Centralizer => "centralizer",
            Suite::QCentralizer => "q-centralizer",
            Suite::Hecke => "hecke",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// `"n"` for the rook algebra suites, `"k"` otherwise.
    pub fn parameter_name(self) -> &'static str {
        match self {
            Suite::RookModules | Suite::MatrixUnits => "n",
            _ => "k",
        }
    }

    pub fn uses_q0(self) -> bool {
        matches!(self, Suite::Quantum | Suite::QCentralizer)
    }

    pub fn min_size(self) -> usize {
        match self {
            Suite::RookModules | Suite::MatrixUnits => 0,
            _ => 1,
        }
    }

    pub fn bound(self, bounds: &Bounds) -> usize {
        match self {
            Suite::RookModules | Suite::MatrixUnits => bounds.rook_n,
            Suite::Gl => bounds.highest_weight_k,
            Suite::Quantum => bounds.quantum_k,
            Suite::Centralizer | Suite::QCentralizer => bounds.commutant_k,
            Suite::Hecke => bounds.hecke_k,
        }
    }

    /// Size used by `verify all`.
    pub fn default_size(self, bounds: &Bounds) -> usize {
        self.bound(bounds)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub q0: Rational,
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { q0: Rational::from_integer(2.into()), seed: DEFAULT_SEED, bounds: Bounds::default() }
    }
}

/// Checks the size against the suite's bounds.
pub fn check_size(suite: Suite, size: usize, bounds: &Bounds) -> Result<()> {
    let bound = suite.bound(bounds);
    if size > bound {
        return Err(Error::BoundExceeded { what: suite.parameter_name(), value: size, bound });
    }
    if size < suite.min_size() {
        return Err(Error::InvalidSpecialization {
            point: size.to_string(),
            reason: format!("{} must be at least {}", suite.parameter_name(), suite.min_size()),
        });
    }
    Ok(())
}

pub fn run_suite(suite: Suite, size: usize, opts: &SuiteOptions) -> Result<VerificationReport> {
    check_size(suite, size, &opts.bounds)?;
    if suite.uses_q0() {
        uq::validate_specialization(&opts.q0)?;
    }
    let claims = match suite {
        Suite::RookModules => rook_modules(size),
        Suite::MatrixUnits => matrix_units(size, opts.seed),
        Suite::Gl => gl(size, opts.seed),
        Suite::Quantum => quantum(size, &opts.q0, &opts.bounds),
        Suite::Centralizer => vec![
            gl11::verify_faithful_action(size),
            gl11::verify_centralizer(size, opts.bounds.commutant_k),
        ],
        Suite::QCentralizer => vec![uq::verify_quantum_centralizer(size, &opts.q0, opts.bounds.commutant_k)],
        Suite::Hecke => vec![
            hecke::verify_displayed_instance(),
            hecke::verify_bijection(size),
            hecke::verify_product_correspondence(size),
        ],
    };
    let mut params = BTreeMap::new();
    params.insert(suite.parameter_name().to_string(), json!(size));
    if suite.uses_q0() {
        params.insert("q0".into(), json!(format_rational(&opts.q0)));
    }
    if matches!(suite, Suite::MatrixUnits | Suite::Gl) {
        params.insert("seed".into(), json!(opts.seed));
    }
    Ok(VerificationReport::new(suite.name(), params, claims))
}

/// Every suite at its bound, summarized as one report whose claims are the
/// individual suite reports flattened in order.
pub fn run_all(opts: &SuiteOptions) -> Result<(VerificationReport, Vec<VerificationReport>)> {
    let reports = Suite::ALL
        .iter()
        .map(|s| run_suite(*s, s.default_size(&opts.bounds), opts))
        .collect::<Result<Vec<_>>>()?;
    let mut params = BTreeMap::new();
    for (s, r) in Suite::ALL.iter().zip(&reports) {
        params.insert(s.name().to_string(), Value::Object(r.parameters.clone().into_iter().collect()));
    }
    let claims = reports
        .iter()
        .flat_map(|r| {
            r.claims.iter().cloned().map(move |mut c| {
                c.parameters.insert("suite".into(), json!(r.suite));
                c
            })
        })
        .collect();
    Ok((VerificationReport::new("all", params, claims), reports))
}

fn rook_modules(n: usize) -> Vec<ClaimReport> {
    let mut claims = vec![verify_counting(n), verify_worked_examples()];
    claims.push(verify_subset_functoriality(n.min(4)));
    claims.push(rook_algebra::verify_module_multiplicativity(n));
    claims.extend((0..=n).map(|l| rook_algebra::verify_irreducibility(n, l)));
    claims.push(rook_algebra::verify_semisimplicity(n));
    claims
}

fn matrix_units(n: usize, seed: u64) -> Vec<ClaimReport> {
    let rule = if n <= 4 {
        rook_algebra::verify_matrix_unit_rule(n)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rook_algebra::verify_matrix_unit_rule_sampled(n, 1000, &mut rng)
    };
    vec![rule, rook_algebra::verify_mobius_inversion(n)]
}

fn gl(k: usize, seed: u64) -> Vec<ClaimReport> {
    vec![
        gl11::verify_superalgebra_relations(k),
        gl11::verify_highest_weight_pairs(k),
        gl11::verify_direct_sum(k),
        gl11::verify_decomposition(k),
        gl11::verify_commuting_actions(k, seed),
    ]
}

fn quantum(k: usize, q0: &Rational, bounds: &Bounds) -> Vec<ClaimReport> {
    let mut claims = vec![
        uq::verify_quantum_relations(k),
        uq::verify_coproduct_iteration(k),
        uq::verify_quantum_highest_weight_pairs(k, q0),
        uq::verify_stated_sigma_signs(k),
    ];
    if k <= 6 {
        claims.push(uq::verify_classical_limit(k));
    }
    if k <= bounds.commutant_k {
        claims.push(uq::verify_quantum_diagram_action(k, q0));
    }
    claims
}

/// `|P_m| = C(2m, m)` and `|P_m with ℓ edges| = C(m, ℓ)^2` for all `m ≤ n`.
pub fn verify_counting(n: usize) -> ClaimReport {
    let mut report = ClaimReport::new("planar-count").param("n", n);
    for m in 0..=n {
        let all = enumerate_planar(m, None);
        let expected = binomial(2 * m as u64, m as u64) as usize;
        let distinct = all.windows(2).all(|w| w[0] < w[1]);
        let planar = all.iter().all(|d| d.as_rook().is_planar());
        report.check(all.len() == expected && distinct && planar, || {
            json!({ "n": m, "count": all.len(), "expected": expected, "strictly_ordered": distinct })
        });
        for l in 0..=m {
            let count = enumerate_planar(m, Some(l)).len();
            let expected = binomial(m as u64, l as u64).pow(2) as usize;
            report.check(count == expected, || json!({ "n": m, "edges": l, "count": count, "expected": expected }));
        }
    }
    report
}

/// The worked product and module action on five vertices.
pub fn verify_worked_examples() -> ClaimReport {
    let mut report = ClaimReport::new("worked-examples");
    let d1 = RookDiagram::new(5, [(1, 2), (2, 5), (5, 3)]).expect("valid");
    let d2 = RookDiagram::new(5, [(2, 1), (4, 2)]).expect("valid");
    let expected = RookDiagram::new(5, [(2, 2), (4, 5)]).expect("valid");
    let product = d1.compose(&d2).expect("same size");
    report.check(product == expected, || {
        json!({ "example": "product", "got": serde_json::to_value(&product).unwrap() })
    });

    let s = |m: &[usize]| Subset::new(5, m.iter().copied()).expect("valid");
    let d = PlanarRookDiagram::canonical(&s(&[1, 2, 5]), &s(&[2, 3, 4])).expect("valid");
    let image = d.apply_to_subset(&s(&[2, 5])).expect("sized");
    report.check(image == Some(s(&[3, 4])), || json!({ "example": "d m_{2,5}", "got": image.map(|x| x.to_string()) }));
    let zero = d.apply_to_subset(&s(&[4, 5])).expect("sized");
    report.check(zero.is_none(), || json!({ "example": "d m_{4,5}", "got": zero.map(|x| x.to_string()) }));
    let empty = d.apply_to_subset(&Subset::empty(5)).expect("sized");
    report.check(empty == Some(Subset::empty(5)), || json!({ "example": "d m_{}" }));
    report
}

/// `(d1 d2)(s) = d1(d2(s))` for all pairs and subsets.
pub fn verify_subset_functoriality(n: usize) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let subsets = Subset::all(n);
    let pairs: Vec<(usize, usize)> =
        (0..diagrams.len()).flat_map(|i| (0..diagrams.len()).map(move |j| (i, j))).collect();
    let mut report = ClaimReport::new("subset-functoriality").param("n", n);
    report.check_all(&pairs, |&(i, j)| {
        let (a, b) = (&diagrams[i], &diagrams[j]);
        let ab = a.compose(b).expect("same size");
        subsets.iter().find_map(|s| {
            let direct = ab.apply_to_subset(s).expect("sized");
            let stepwise = match b.apply_to_subset(s).expect("sized") {
                Some(t) => a.apply_to_subset(&t).expect("sized"),
                None => None,
            };
            (direct != stepwise).then(|| {
                json!({ "d1": serde_json::to_value(a).unwrap(), "d2": serde_json::to_value(b).unwrap(), "s": s.to_string() })
            })
        })
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn bounds_are_enforced() {
        let opts = SuiteOptions::default();
        assert!(matches!(run_suite(Suite::Centralizer, 6, &opts), Err(Error::BoundExceeded { .. })));
        assert!(run_suite(Suite::Hecke, 0, &opts).is_err());
        let bad = SuiteOptions { q0: Rational::from_integer((-1).into()), ..SuiteOptions::default() };
        assert!(run_suite(Suite::QCentralizer, 2, &bad).is_err());
    }

    #[test]
    fn small_suites() {
        let opts = SuiteOptions::default();
        assert!(run_suite(Suite::RookModules, 3, &opts).unwrap().passed());
        assert!(run_suite(Suite::MatrixUnits, 3, &opts).unwrap().passed());
        assert!(run_suite(Suite::Gl, 3, &opts).unwrap().passed());
        assert!(run_suite(Suite::Hecke, 3, &opts).unwrap().passed());
        let q = run_suite(Suite::Quantum, 3, &opts).unwrap();
        assert!(!q.passed());
        let failing: Vec<&str> = q.claims.iter().filter(|c| !c.passed()).map(|c| c.claim.as_str()).collect();
        assert_eq!(failing, vec!["sigma-signs-as-stated"]);
    }
}
