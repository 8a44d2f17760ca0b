//! Exhaustive enumeration of Foulkes and q-Foulkes configurations.
//!
//! A quadruple `<[alpha,beta]:[gamma,delta]>` with `|alpha||beta| =
//! |gamma||delta| = n` and no partition equal to `[1]` is a Foulkes
//! configuration when the pair is distinct and `s_gamma[s_delta] -
//! s_alpha[s_beta]` is Schur-positive. Distinct pairs with identically
//! equal plethysms do occur (four at n = 8, e.g. `s_{11}[s_{31}] =
//! s_{211}[s_2]`) and count as configurations; that convention is what
//! reproduces the published counts. The q-Foulkes test is strict: the
//! divided difference `(S_gamma[S_delta] - S_alpha[S_beta])/(1-q)` must be
//! Schur-positive and nonzero. Candidates range over all factorizations
//! `n = u v` with `u, v >= 2` (mixed splits between the two sides are
//! allowed).
//!
//! Plethysms are computed once per candidate and cached; the expensive
//! q-plethysms are computed only for pairs that already pass the classical
//! test and the `q = 1` equality prefilter (`e_condition`).

use std::collections::HashMap;
use std::sync::Mutex;

use num::Signed;
use rayon::prelude::*;

use crate::hall_littlewood::{q_schur, validate_q_schur_bridge};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::QPoly;
use crate::symfunc::{SchurExpansion, SymFunc};
use crate::{Error, Result};

/// Number of Foulkes configurations for `n = 1..=16`.
pub const TABLE1: [u64; 16] = [0, 0, 0, 0, 0, 4, 0, 14, 0, 8, 0, 110, 0, 24, 17, 221];

/// Number of q-Foulkes configurations for `n = 1..=20`.
pub const TABLE2: [u64; 20] = [
    0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 5, 0, 1, 1, 3, 0, 6, 0, 5,
];

/// One candidate side `[alpha, beta]` of a configuration.
pub type Candidate = (Partition, Partition);

/// A verified configuration with its certificates.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub delta: Partition,
    pub n: u32,
    pub is_foulkes: bool,
    pub passed_e_condition: bool,
    pub is_q_foulkes: bool,
    /// The strictly positive classical difference.
    pub classical_difference: SchurExpansion,
    /// The divided q-difference, when the q test ran.
    pub q_difference: Option<SchurExpansion>,
}

impl Configuration {
    pub fn bracket(&self) -> String {
        format!(
            "<{},{}:{},{}>",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

impl std::fmt::Display for Configuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.bracket())
    }
}

/// All candidate sides `[alpha, beta]` for degree `n`: `alpha |- u`,
/// `beta |- v` over every factorization `n = u v` with `u, v >= 2`, in a
/// fixed deterministic order.
pub fn candidates(n: u32) -> Vec<Candidate> {
    let mut out = Vec::new();
    for u in 2..=n / 2 {
        if n % u != 0 {
            continue;
        }
        let v = n / u;
        if v < 2 {
            continue;
        }
        for alpha in partitions_of(u) {
            for beta in partitions_of(v) {
                out.push((alpha.clone(), beta.clone()));
            }
        }
    }
    out
}

fn check_quadruple(alpha: &Partition, beta: &Partition, gamma: &Partition, delta: &Partition) -> Result<u32> {
    let one = Partition::new(vec![1]);
    for p in [alpha, beta, gamma, delta] {
        if *p == one || p.is_empty() {
            return Err(Error::Precondition(format!(
                "configuration parts must differ from [1] and []: got {p}"
            )));
        }
    }
    let n = alpha.weight() * beta.weight();
    if gamma.weight() * delta.weight() != n {
        return Err(Error::Precondition(format!(
            "degree mismatch: |{alpha}||{beta}| != |{gamma}||{delta}|"
        )));
    }
    Ok(n)
}

/// The plethysm `s_alpha[s_beta]` in the Schur basis.
pub fn schur_plethysm(alpha: &Partition, beta: &Partition) -> SchurExpansion {
    SymFunc::schur(alpha)
        .plethysm(&SymFunc::schur(beta))
        .to_schur()
}

/// The plethysm `e_(alpha')[e_(beta')]` in the power-sum basis (the common
/// `q = 1` value of the corresponding q-Schur plethysm).
pub fn elementary_plethysm(alpha: &Partition, beta: &Partition) -> SymFunc {
    let e_of = |p: &Partition| {
        let mut acc = SymFunc::one();
        for &part in p.conjugate().parts() {
            acc = acc.mul(&SymFunc::elementary(part));
        }
        acc
    };
    e_of(alpha).plethysm(&e_of(beta))
}

/// The plethysm `S_alpha[S_beta]` of q-Schur functions, in the power-sum
/// basis.
pub fn q_schur_plethysm(alpha: &Partition, beta: &Partition) -> SymFunc {
    q_schur(alpha)
        .to_symfunc()
        .plethysm(&q_schur(beta).to_symfunc())
}

/// Classical configuration test: is the pair distinct with
/// `s_gamma[s_delta] - s_alpha[s_beta]` Schur-positive (an identically
/// zero difference counts)? Returns the verdict and the difference. The
/// trivial case `(alpha,beta) = (gamma,delta)` yields `false`.
pub fn is_foulkes_config(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    delta: &Partition,
) -> Result<(bool, SchurExpansion)> {
    check_quadruple(alpha, beta, gamma, delta)?;
    if alpha == gamma && beta == delta {
        return Ok((false, SchurExpansion::zero()));
    }
    let diff = schur_plethysm(gamma, delta).sub(&schur_plethysm(alpha, beta));
    Ok((diff.is_schur_positive(), diff))
}

/// The `q = 1` equality prefilter: `e_(alpha')[e_(beta')] =
/// e_(gamma')[e_(delta')]`.
pub fn e_condition(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    delta: &Partition,
) -> Result<bool> {
    check_quadruple(alpha, beta, gamma, delta)?;
    Ok(elementary_plethysm(alpha, beta) == elementary_plethysm(gamma, delta))
}

/// q-configuration test: prefilters by [`e_condition`] (the divided
/// difference cannot exist otherwise), then checks strict Schur positivity
/// of `(S_gamma[S_delta] - S_alpha[S_beta])/(1-q)`. Returns the verdict
/// and the divided difference when it was computed.
pub fn is_q_foulkes_config(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    delta: &Partition,
) -> Result<(bool, Option<SchurExpansion>)> {
    check_quadruple(alpha, beta, gamma, delta)?;
    if alpha == gamma && beta == delta {
        return Ok((false, None));
    }
    if !e_condition(alpha, beta, gamma, delta)? {
        return Ok((false, None));
    }
    validate_q_schur_bridge()?;
    let diff = q_schur_plethysm(gamma, delta)
        .sub(&q_schur_plethysm(alpha, beta))
        .divide_by_one_minus_q()?
        .to_schur();
    let strict = !diff.is_zero() && diff.is_schur_positive();
    Ok((strict, Some(diff)))
}

struct SearchContext {
    cands: Vec<Candidate>,
    schur_pleth: Vec<SchurExpansion>,
    elem_pleth: Vec<SymFunc>,
    q_pleth: Mutex<HashMap<usize, SymFunc>>,
}

impl SearchContext {
    fn new(n: u32) -> Self {
        let cands = candidates(n);
        let schur_pleth: Vec<SchurExpansion> = cands
            .par_iter()
            .map(|(a, b)| schur_plethysm(a, b))
            .collect();
        let elem_pleth: Vec<SymFunc> = cands
            .par_iter()
            .map(|(a, b)| elementary_plethysm(a, b))
            .collect();
        SearchContext {
            cands,
            schur_pleth,
            elem_pleth,
            q_pleth: Mutex::new(HashMap::new()),
        }
    }

    fn q_plethysm(&self, idx: usize) -> SymFunc {
        if let Some(f) = self.q_pleth.lock().unwrap().get(&idx) {
            return f.clone();
        }
        let (a, b) = &self.cands[idx];
        let f = q_schur_plethysm(a, b);
        self.q_pleth
            .lock()
            .unwrap()
            .entry(idx)
            .or_insert(f)
            .clone()
    }

    fn q_divided_difference(&self, small: usize, big: usize) -> Result<SchurExpansion> {
        Ok(self
            .q_plethysm(big)
            .sub(&self.q_plethysm(small))
            .divide_by_one_minus_q()?
            .to_schur())
    }
}

/// All Foulkes configurations for `n`, with the e-condition and (for
/// candidates passing it) the q verdict filled in. Deterministic order.
pub fn enumerate_foulkes_configs(n: u32) -> Result<Vec<Configuration>> {
    let ctx = SearchContext::new(n);
    let k = ctx.cands.len();
    let hits: Vec<(usize, usize, SchurExpansion)> = (0..k)
        .into_par_iter()
        .flat_map_iter(|i| {
            let ctx = &ctx;
            (0..k).filter_map(move |j| {
                if i == j {
                    return None;
                }
                let diff = ctx.schur_pleth[j].sub(&ctx.schur_pleth[i]);
                diff.is_schur_positive().then_some((i, j, diff))
            })
        })
        .collect();
    let mut sorted = hits;
    sorted.sort_by_key(|(i, j, _)| (*i, *j));
    let mut out = Vec::with_capacity(sorted.len());
    for (i, j, diff) in sorted {
        let e_cond = ctx.elem_pleth[i] == ctx.elem_pleth[j];
        let (is_q, q_diff) = if e_cond {
            validate_q_schur_bridge()?;
            let qd = ctx.q_divided_difference(i, j)?;
            (!qd.is_zero() && qd.is_schur_positive(), Some(qd))
        } else {
            (false, None)
        };
        let (alpha, beta) = ctx.cands[i].clone();
        let (gamma, delta) = ctx.cands[j].clone();
        out.push(Configuration {
            alpha,
            beta,
            gamma,
            delta,
            n,
            is_foulkes: true,
            passed_e_condition: e_cond,
            is_q_foulkes: is_q,
            classical_difference: diff,
            q_difference: q_diff,
        });
    }
    Ok(out)
}

/// All q-Foulkes configurations for `n`, using the classical test and the
/// e-condition as prefilters.
pub fn enumerate_q_configs(n: u32) -> Result<Vec<Configuration>> {
    Ok(enumerate_foulkes_configs(n)?
        .into_iter()
        .filter(|c| c.is_q_foulkes)
        .collect())
}

/// One direction-disagreement found by [`check_conjecture4`].
#[derive(Clone, Debug)]
pub struct OneSided {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub delta: Partition,
    pub classical_strict: bool,
    pub q_strict: bool,
}

#[derive(Clone, Debug)]
pub struct Conjecture4Report {
    pub n: u32,
    pub e_classes: usize,
    pub pairs_checked: usize,
    pub one_sided: Vec<OneSided>,
}

impl Conjecture4Report {
    pub fn holds(&self) -> bool {
        self.one_sided.is_empty()
    }
}

/// Verifies the biconditional "classical strict positivity iff strict
/// positivity of the q divided difference" over every ordered pair of
/// candidates sharing the same `q = 1` plethysm value, reporting any
/// one-sided pair.
pub fn check_conjecture4(n: u32) -> Result<Conjecture4Report> {
    validate_q_schur_bridge()?;
    let ctx = SearchContext::new(n);
    let k = ctx.cands.len();
    let mut classes: HashMap<String, Vec<usize>> = HashMap::new();
    for i in 0..k {
        classes.entry(ctx.elem_pleth[i].to_string()).or_default().push(i);
    }
    let mut class_list: Vec<Vec<usize>> = classes
        .into_values()
        .filter(|members| members.len() >= 2)
        .collect();
    class_list.sort();
    let mut pairs = Vec::new();
    for members in &class_list {
        for &i in members {
            for &j in members {
                if i != j {
                    pairs.push((i, j));
                }
            }
        }
    }
    let results: Vec<Option<OneSided>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let diff = ctx.schur_pleth[j].sub(&ctx.schur_pleth[i]);
            let classical_strict = !diff.is_zero() && diff.is_schur_positive();
            let qd = ctx.q_divided_difference(i, j).expect("e-class divisibility");
            let q_strict = !qd.is_zero() && qd.is_schur_positive();
            (classical_strict != q_strict).then(|| {
                let (alpha, beta) = ctx.cands[i].clone();
                let (gamma, delta) = ctx.cands[j].clone();
                OneSided {
                    alpha,
                    beta,
                    gamma,
                    delta,
                    classical_strict,
                    q_strict,
                }
            })
        })
        .collect();
    Ok(Conjecture4Report {
        n,
        e_classes: class_list.len(),
        pairs_checked: pairs.len(),
        one_sided: results.into_iter().flatten().collect(),
    })
}

/// Verdict of a targeted strict-positivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanVerdict {
    /// Difference is identically zero.
    Zero,
    /// Strictly Schur-positive (every coefficient checked).
    StrictlyPositive,
    /// A negative Schur coefficient, with its witness.
    NegativeAt(Partition, QPoly),
}

/// Decides strict Schur positivity of `s_gamma[s_delta] - s_alpha[s_beta]`
/// without building a full character table: Schur coefficients are scanned
/// one row at a time (in parallel chunks, earliest witness wins), which
/// keeps degrees like 24 and 30 tractable. Used for the published
/// near-miss quadruples that are not configurations.
pub fn classical_scan(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    delta: &Partition,
) -> Result<ScanVerdict> {
    let n = check_quadruple(alpha, beta, gamma, delta)?;
    let diff = SymFunc::schur(gamma)
        .plethysm(&SymFunc::schur(delta))
        .sub(&SymFunc::schur(alpha).plethysm(&SymFunc::schur(beta)));
    if diff.is_zero() {
        return Ok(ScanVerdict::Zero);
    }
    let shapes = partitions_of(n);
    for chunk in shapes.chunks(128) {
        let found: Vec<Option<(Partition, QPoly)>> = chunk
            .par_iter()
            .map(|lambda| {
                let c = diff.schur_coefficient(lambda);
                let bad = c
                    .coeffs()
                    .iter()
                    .any(|v| v.is_negative() || !v.is_integer());
                bad.then(|| (lambda.clone(), c))
            })
            .collect();
        if let Some((lambda, c)) = found.into_iter().flatten().next() {
            return Ok(ScanVerdict::NegativeAt(lambda, c));
        }
    }
    Ok(ScanVerdict::StrictlyPositive)
}

/// Report for the rectangular-family guesses: the configuration
/// `<[a, b^k] : [c, d^k]>_q` together with the two companion positivity
/// statements `h_c[s_(d^k)] <= h_b[s_(a^k)]` and `h_a[h_b^k] <= h_c[h_d^k]`.
#[derive(Clone, Debug)]
pub struct GuessReport {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub k: u32,
    pub q_config: bool,
    pub outer_swap_positive: bool,
    pub power_form_positive: bool,
}

pub fn check_guess_patterns(a: u32, b: u32, c: u32, d: u32, k: u32) -> Result<GuessReport> {
    if a * b != c * d || !(2 <= a && a < c && c <= b) || k == 0 {
        return Err(Error::Precondition(format!(
            "need ab = cd with 2 <= a < c <= b and k >= 1, got ({a},{b},{c},{d},{k})"
        )));
    }
    let rect = |part: u32| Partition::new(vec![part; k as usize]);
    let (q_config, _) =
        is_q_foulkes_config(&Partition::new(vec![a]), &rect(b), &Partition::new(vec![c]), &rect(d))?;
    let lhs62 = SymFunc::complete(c).plethysm(&SymFunc::schur(&rect(d)));
    let rhs62 = SymFunc::complete(b).plethysm(&SymFunc::schur(&rect(a)));
    let outer_swap_positive = lhs62.to_schur().schur_leq(&rhs62.to_schur());
    let lhs63 = SymFunc::complete(a).plethysm(&SymFunc::complete(b).pow(k));
    let rhs63 = SymFunc::complete(c).plethysm(&SymFunc::complete(d).pow(k));
    let power_form_positive = lhs63.to_schur().schur_leq(&rhs63.to_schur());
    Ok(GuessReport {
        a,
        b,
        c,
        d,
        k,
        q_config,
        outer_swap_positive,
        power_form_positive,
    })
}

/// The published near-miss quadruples that fail to be configurations.
pub fn negative_controls() -> Vec<(Partition, Partition, Partition, Partition)> {
    use crate::partition::ptn;
    vec![
        (ptn(&[2]), ptn(&[6, 3, 3]), ptn(&[3]), ptn(&[4, 2, 2])),
        (ptn(&[2]), ptn(&[9, 3, 3]), ptn(&[3]), ptn(&[6, 2, 2])),
        (ptn(&[2]), ptn(&[6, 3, 3, 3]), ptn(&[3]), ptn(&[4, 2, 2, 2])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;

    #[test]
    fn candidate_domain() {
        assert_eq!(candidates(7).len(), 0);
        // n = 6: (u,v) in {(2,3),(3,2)} -> 2*3 + 3*2 = 12 candidates.
        assert_eq!(candidates(6).len(), 12);
    }

    #[test]
    fn pairwise_checks() {
        let (ok, diff) = is_foulkes_config(&ptn(&[2]), &ptn(&[3]), &ptn(&[3]), &ptn(&[2])).unwrap();
        assert!(ok);
        assert_eq!(
            diff,
            SchurExpansion::from_terms([(ptn(&[2, 2, 2]), QPoly::one())])
        );
        let (ok, _) =
            is_foulkes_config(&ptn(&[1, 1]), &ptn(&[1, 1, 1]), &ptn(&[3]), &ptn(&[1, 1])).unwrap();
        assert!(ok);
        let (trivial, _) =
            is_foulkes_config(&ptn(&[2]), &ptn(&[3]), &ptn(&[2]), &ptn(&[3])).unwrap();
        assert!(!trivial);
        assert!(is_foulkes_config(&ptn(&[1]), &ptn(&[6]), &ptn(&[3]), &ptn(&[2])).is_err());
        assert!(is_foulkes_config(&ptn(&[2]), &ptn(&[3]), &ptn(&[2, 2]), &ptn(&[2])).is_err());
    }

    #[test]
    fn e_condition_examples() {
        assert!(e_condition(&ptn(&[2]), &ptn(&[3]), &ptn(&[3]), &ptn(&[2])).unwrap());
        assert!(!e_condition(&ptn(&[1, 1]), &ptn(&[1, 1, 1]), &ptn(&[3]), &ptn(&[1, 1])).unwrap());
        // The rectangular pattern (a, b^k) vs (c, d^k) with ab = cd.
        assert!(e_condition(&ptn(&[2]), &ptn(&[4, 4]), &ptn(&[4]), &ptn(&[2, 2])).unwrap());
    }

    #[test]
    fn q_configuration_examples() {
        let (ok, diff) =
            is_q_foulkes_config(&ptn(&[2]), &ptn(&[3]), &ptn(&[3]), &ptn(&[2])).unwrap();
        assert!(ok);
        assert!(diff.unwrap().is_schur_positive());
        let (ok, diff) =
            is_q_foulkes_config(&ptn(&[1, 1]), &ptn(&[1, 1, 1]), &ptn(&[3]), &ptn(&[1, 1])).unwrap();
        assert!(!ok);
        assert!(diff.is_none());
    }

    #[test]
    fn six_is_the_smallest_interesting_degree() {
        let configs = enumerate_foulkes_configs(6).unwrap();
        let brackets: Vec<String> = configs.iter().map(|c| c.bracket()).collect();
        assert_eq!(
            brackets,
            vec![
                "<[2],[3]:[3],[2]>",
                "<[1,1],[1,1,1]:[3],[1,1]>",
                "<[1,1,1],[2]:[1,1],[2,1]>",
                "<[1,1,1],[1,1]:[2],[2,1]>",
            ]
        );
        let q: Vec<_> = configs.iter().filter(|c| c.is_q_foulkes).collect();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].bracket(), "<[2],[3]:[3],[2]>");
        for c in &configs {
            assert!(c.is_foulkes);
            if c.is_q_foulkes {
                assert!(c.passed_e_condition);
            }
        }
    }

    #[test]
    fn no_configurations_for_primes_and_small_squares() {
        for n in [2u32, 3, 4, 5, 7, 9] {
            assert!(enumerate_foulkes_configs(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn conjecture4_holds_at_six_and_eight() {
        for n in [6u32, 8] {
            let report = check_conjecture4(n).unwrap();
            assert!(report.holds(), "n={n}: {:?}", report.one_sided);
            assert!(report.pairs_checked > 0);
        }
    }

    #[test]
    fn guess_pattern_collapses_at_k1() {
        let g = check_guess_patterns(2, 6, 3, 4, 1).unwrap();
        assert!(g.q_config);
        assert!(g.power_form_positive);
        assert!(check_guess_patterns(3, 4, 2, 6, 1).is_err());
        assert!(check_guess_patterns(2, 6, 5, 3, 1).is_err());
    }
}
