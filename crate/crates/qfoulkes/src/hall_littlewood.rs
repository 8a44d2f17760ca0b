//! Hall-Littlewood polynomials `H_n(x;q)`, the charge statistic,
//! Kostka-Foulkes polynomials and the q-Schur functions `S_mu(x;q)`.
//!
//! Charge conventions are a notorious swamp; the ones used here are pinned
//! by oracles rather than prose:
//! - `charge` on words follows Lascoux-Schutzenberger: standard subwords are
//!   extracted scanning right to left (continuing leftwards cyclically for
//!   each next letter), and the index of a standard word increments when
//!   `r+1` sits strictly right of `r`.
//! - [`kostka_foulkes`] feeds `charge` with the bottom-to-top reading word of
//!   each tableau; this normalization satisfies `K_{lambda,lambda} = 1` and
//!   reproduces all golden Kostka-Foulkes values.
//! - [`syt_charge_gen`] reads standard tableaux right-to-left from the top
//!   row; that generating polynomial equals the coefficient of `s_lambda` in
//!   `H_n(x;q)`, i.e. [`qhook_coeff`]. The two readings are exchanged by
//!   conjugating the shape.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigRational, One};

use crate::partition::{partitions_of, Partition};
use crate::qpoly::{q_factorial, q_int, QPoly};
use crate::symfunc::{SchurExpansion, SymFunc};
use crate::{Error, Result};

/// A word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(letters.iter().all(|&l| l > 0), "letters must be positive");
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Multiplicity vector: entry `i` counts the letter `i+1`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.letters.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        counts
    }
}

/// The Lascoux-Schutzenberger charge of a word with partition content.
///
/// Standard subwords are extracted repeatedly: scan right to left for a 1,
/// then continue leftwards (wrapping cyclically) for a 2, 3, ... up to the
/// largest letter still present; the charge of each extracted standard word
/// is summed. Errors when the content is not weakly decreasing.
pub fn charge(w: &Word) -> Result<u64> {
    let content = w.content();
    if content.windows(2).any(|c| c[0] < c[1]) || content.contains(&0) {
        if !w.letters.is_empty() {
            return Err(Error::NotPartitionContent(content));
        }
    }
    let mut letters = w.letters.clone();
    let mut total = 0u64;
    while !letters.is_empty() {
        let max_letter = *letters.iter().max().unwrap();
        let n = letters.len();
        let mut selected = Vec::with_capacity(max_letter as usize);
        let mut pos = letters
            .iter()
            .rposition(|&l| l == 1)
            .expect("partition content contains a 1");
        selected.push(pos);
        for r in 2..=max_letter {
            let mut found = None;
            for step in 1..n {
                let i = (pos + n - step) % n;
                if letters[i] == r {
                    found = Some(i);
                    break;
                }
            }
            pos = found.expect("partition content is letter-closed downwards");
            selected.push(pos);
        }
        selected.sort_unstable();
        let sub: Vec<u32> = selected.iter().map(|&i| letters[i]).collect();
        total += standard_charge(&sub);
        for &i in selected.iter().rev() {
            letters.remove(i);
        }
    }
    Ok(total)
}

/// Charge of a word in which every letter `1..=L` occurs exactly once:
/// index(1) = 0, index(r+1) = index(r) + 1 exactly when `r+1` lies strictly
/// to the right of `r`; the charge is the sum of indices.
fn standard_charge(word: &[u32]) -> u64 {
    let l = word.len();
    let mut position = vec![0usize; l + 1];
    for (i, &r) in word.iter().enumerate() {
        position[r as usize] = i;
    }
    let mut index = 0u64;
    let mut total = 0u64;
    for r in 2..=l {
        if position[r] > position[r - 1] {
            index += 1;
        }
        total += index;
    }
    total
}

/// A semistandard tableau: rows weakly increase left to right, columns
/// strictly increase downwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn content(&self) -> Partition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &entry in self.rows.iter().flatten() {
            counts[entry as usize - 1] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// Reading word: rows left to right, bottom row first.
    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Reading word: rows right to left, top row first (the reverse of
    /// [`Tableau::reading_word`]).
    pub fn reverse_reading_word(&self) -> Word {
        Word::new(
            self.rows
                .iter()
                .flat_map(|r| r.iter().rev())
                .copied()
                .collect(),
        )
    }
}

/// All semistandard tableaux of the given shape and content, in a
/// deterministic (row-major backtracking) order.
pub fn ssyt(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    assert_eq!(shape.weight(), content.weight(), "|shape| must equal |content|");
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&r| Vec::with_capacity(r as usize))
        .collect();
    let mut out = Vec::new();
    fill(shape, &mut remaining, &mut rows, 0, 0, &mut out);
    out
}

fn fill(
    shape: &Partition,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    row: usize,
    col: usize,
    out: &mut Vec<Tableau>,
) {
    if row == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (next_row, next_col) = if col + 1 < shape.part(row) as usize {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_letter = {
        let left = if col > 0 { rows[row][col - 1] } else { 1 };
        let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
        left.max(above)
    };
    for letter in min_letter..=remaining.len() as u32 {
        let idx = letter as usize - 1;
        if remaining[idx] == 0 {
            continue;
        }
        remaining[idx] -= 1;
        rows[row].push(letter);
        fill(shape, remaining, rows, next_row, next_col, out);
        rows[row].pop();
        remaining[idx] += 1;
    }
}

fn kf_memo() -> &'static RwLock<HashMap<(Partition, Partition), QPoly>> {
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), QPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Kostka-Foulkes polynomial `K_{lambda,mu}(q)`: charge generating
/// function over semistandard tableaux of shape `lambda` and content `mu`
/// (a partition). Memoized; `K_{lambda,mu}(1)` is the Kostka number.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.to_string(), mu.to_string()));
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = kf_memo().read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut acc = QPoly::zero();
    for t in ssyt(lambda, mu) {
        let c = charge(&t.reading_word())? as usize;
        acc = &acc + &QPoly::monomial(c, BigRational::one());
    }
    kf_memo().write().unwrap().insert(key, acc.clone());
    Ok(acc)
}

/// Charge generating polynomial over the standard tableaux of `shape`, with
/// words read right-to-left from the top row. Equals the coefficient of
/// `s_shape` in `H_n(x;q)` (see [`qhook_coeff`]).
pub fn syt_charge_gen(shape: &Partition) -> QPoly {
    let n = shape.weight();
    let column = Partition::new(vec![1; n as usize]);
    let mut acc = QPoly::zero();
    for t in ssyt(shape, &column) {
        let c = charge(&t.reverse_reading_word()).expect("standard content") as usize;
        acc = &acc + &QPoly::monomial(c, BigRational::one());
    }
    acc
}

fn one_minus_q() -> QPoly {
    QPoly::from_ints(&[1, -1])
}

fn hl_memo() -> &'static RwLock<HashMap<u32, Arc<SymFunc>>> {
    static MEMO: OnceLock<RwLock<HashMap<u32, Arc<SymFunc>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Hall-Littlewood polynomial `H_n(x;q)` in the power-sum basis:
///
/// ```text
/// H_n = sum_{mu |- n}  [n]_q! (1-q)^(n - len(mu)) / (z_mu [mu_1]_q ... [mu_l]_q)  p_mu
/// ```
///
/// so `H_n(x;0) = h_n` and `H_n(x;1) = p_1^n`.
pub fn hall_littlewood_h(n: u32) -> SymFunc {
    assert!(n >= 1);
    if let Some(f) = hl_memo().read().unwrap().get(&n) {
        return (**f).clone();
    }
    let qfact = q_factorial(n);
    let mut acc = SymFunc::zero();
    for mu in partitions_of(n) {
        let numer = &qfact * &one_minus_q().pow(n - mu.len() as u32);
        let mut denom = QPoly::one();
        for &p in mu.parts() {
            denom = &denom * &q_int(p);
        }
        let coeff = numer
            .div_exact(&denom)
            .expect("q-factorial divisible by part q-integers")
            .scale(&BigRational::from(mu.z()).recip());
        acc = acc.add(&SymFunc::from_term(mu, coeff));
    }
    hl_memo()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::new(acc.clone()));
    acc
}

/// The q-hook coefficient `q^(n(mu)) [n]_q! / prod_cells [hook]_q`: the
/// coefficient of `s_mu` in `H_n(x;q)`. An inexact division here is an
/// engine bug, reported as an internal error.
pub fn qhook_coeff(mu: &Partition) -> Result<QPoly> {
    let n = mu.weight();
    let numer = q_factorial(n);
    let mut denom = QPoly::one();
    for &h in mu.hook_lengths().values() {
        denom = &denom * &q_int(h);
    }
    let quotient = numer
        .div_exact(&denom)
        .map_err(|e| Error::Internal(format!("q-hook division failed for {mu}: {e}")))?;
    Ok(&quotient * &QPoly::monomial(mu.n_stat() as usize, BigRational::one()))
}

/// The q-Schur function `S_mu(x;q)`, expanded in the Schur basis through
/// Kostka-Foulkes polynomials:
///
/// ```text
/// S_mu(x;q) = sum_lambda K_{lambda,mu'}(q) s_{lambda'}
/// ```
///
/// One has `S_mu(x;0) = s_mu`, `S_mu(x;1) = e_{mu'}` and
/// `S_(a)(x;q) = H_a(x;q)`; [`validate_q_schur_bridge`] checks these.
pub fn q_schur(mu: &Partition) -> SchurExpansion {
    let conj = mu.conjugate();
    let n = mu.weight();
    let mut terms = Vec::new();
    for lambda in partitions_of(n) {
        if !conj.dominance_leq(&lambda).unwrap() {
            continue;
        }
        let k = kostka_foulkes(&lambda, &conj).expect("equal weights");
        if !k.is_zero() {
            terms.push((lambda.conjugate(), k));
        }
    }
    SchurExpansion::from_terms(terms)
}

/// One-time self-check of the q-Schur construction against its defining
/// specializations; run before any search that depends on `S_mu`.
pub fn validate_q_schur_bridge() -> Result<()> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            use crate::partition::ptn;
            use crate::qpoly::rat;
            // Displayed S_32 expansion.
            let s32 = q_schur(&ptn(&[3, 2]));
            let want = SchurExpansion::from_terms([
                (ptn(&[3, 2]), QPoly::one()),
                (ptn(&[3, 1, 1]), QPoly::from_ints(&[0, 1])),
                (ptn(&[2, 2, 1]), QPoly::from_ints(&[0, 1, 1])),
                (ptn(&[2, 1, 1, 1]), QPoly::from_ints(&[0, 0, 1, 1])),
                (ptn(&[1, 1, 1, 1, 1]), QPoly::from_ints(&[0, 0, 0, 0, 1])),
            ]);
            if s32 != want {
                return Err(format!("S_32 mismatch: {s32}"));
            }
            for a in 1..=5u32 {
                if q_schur(&ptn(&[a])) != hall_littlewood_h(a).to_schur() {
                    return Err(format!("S_({a}) != H_{a}"));
                }
            }
            for n in 1..=5u32 {
                for mu in partitions_of(n) {
                    let s = q_schur(&mu);
                    let at0 = s.eval_q(&rat(0));
                    if at0 != SchurExpansion::from_terms([(mu.clone(), QPoly::one())]) {
                        return Err(format!("S_{mu}(0) != s_{mu}"));
                    }
                    let mut elem = SymFunc::one();
                    for &p in mu.conjugate().parts() {
                        elem = elem.mul(&SymFunc::elementary(p));
                    }
                    if s.eval_q(&rat(1)) != elem.to_schur() {
                        return Err(format!("S_{mu}(1) != e_(mu')"));
                    }
                }
            }
            Ok(())
        })
        .clone()
        .map_err(Error::Internal)
}

pub(crate) fn kf_memo_snapshot() -> Vec<(Partition, Partition, QPoly)> {
    let memo = kf_memo().read().unwrap();
    let mut out: Vec<_> = memo
        .iter()
        .map(|((l, m), v)| (l.clone(), m.clone(), v.clone()))
        .collect();
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    out
}

pub(crate) fn kf_memo_seed(records: impl IntoIterator<Item = (Partition, Partition, QPoly)>) {
    let mut memo = kf_memo().write().unwrap();
    for (l, m, v) in records {
        memo.entry((l, m)).or_insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;
    use crate::qpoly::{rat, rat_frac};

    #[test]
    fn charge_of_standard_words() {
        assert_eq!(charge(&Word::new(vec![3, 2, 1])).unwrap(), 0);
        assert_eq!(charge(&Word::new(vec![1, 2, 3])).unwrap(), 3);
        assert_eq!(charge(&Word::new(vec![2, 1, 3])).unwrap(), 1);
        assert_eq!(charge(&Word::new(vec![3, 1, 2])).unwrap(), 2);
    }

    #[test]
    fn charge_rejects_bad_content() {
        assert!(charge(&Word::new(vec![2, 2, 1])).is_err());
        assert!(charge(&Word::new(vec![1, 3])).is_err());
    }

    #[test]
    fn syt_charges_of_small_shapes() {
        // Shape [2,1]: the two standard tableaux carry charges {1, 2}.
        assert_eq!(syt_charge_gen(&ptn(&[2, 1])), QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(syt_charge_gen(&ptn(&[3])), QPoly::one());
        assert_eq!(
            syt_charge_gen(&ptn(&[1, 1, 1])),
            QPoly::from_ints(&[0, 0, 0, 1])
        );
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(ssyt(&ptn(&[2, 1]), &ptn(&[1, 1, 1])).len(), 2);
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                assert_eq!(ssyt(&lambda, &lambda).len(), 1, "shape {lambda}");
            }
        }
        assert_eq!(ssyt(&ptn(&[1, 1]), &ptn(&[2])).len(), 0);
    }

    #[test]
    fn kostka_foulkes_golden_values() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    kostka_foulkes(&lambda, &lambda).unwrap(),
                    QPoly::one(),
                    "K_(lambda,lambda) at {lambda}"
                );
            }
        }
        assert_eq!(
            kostka_foulkes(&ptn(&[3, 1, 1]), &ptn(&[2, 2, 1])).unwrap(),
            QPoly::from_ints(&[0, 1])
        );
        assert_eq!(
            kostka_foulkes(&ptn(&[5]), &ptn(&[2, 2, 1])).unwrap(),
            QPoly::from_ints(&[0, 0, 0, 0, 1])
        );
        assert_eq!(
            kostka_foulkes(&ptn(&[3, 2]), &ptn(&[2, 2, 1])).unwrap(),
            QPoly::from_ints(&[0, 1, 1])
        );
    }

    /// K_{(n),mu}(q) = q^(n(mu)).
    #[test]
    fn single_row_kostka_is_n_stat_power() {
        for n in 1..=7u32 {
            for mu in partitions_of(n) {
                let k = kostka_foulkes(&ptn(&[n]), &mu).unwrap();
                assert_eq!(
                    k,
                    QPoly::monomial(mu.n_stat() as usize, num::BigRational::one()),
                    "mu={mu}"
                );
            }
        }
    }

    #[test]
    fn kostka_support_is_dominance() {
        for n in 1..=7u32 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let k = kostka_foulkes(&lambda, &mu).unwrap();
                    assert_eq!(
                        !k.is_zero(),
                        mu.dominance_leq(&lambda).unwrap(),
                        "K_({lambda},{mu})"
                    );
                }
            }
        }
    }

    #[test]
    fn hall_littlewood_h3_both_forms() {
        let h3 = hall_littlewood_h(3);
        // Power-sum form: [2][3]/6 p_111 + [3]/2 (1-q) p_21 + [2]/3 (1-q)^2 p_3.
        assert_eq!(
            h3.coeff(&ptn(&[1, 1, 1])),
            (&q_int(2) * &q_int(3)).scale(&rat_frac(1, 6))
        );
        assert_eq!(
            h3.coeff(&ptn(&[2, 1])),
            (&q_int(3) * &one_minus_q()).scale(&rat_frac(1, 2))
        );
        assert_eq!(
            h3.coeff(&ptn(&[3])),
            (&q_int(2) * &one_minus_q().pow(2)).scale(&rat_frac(1, 3))
        );
        // Schur form: s_3 + (q + q^2) s_21 + q^3 s_111.
        let s = h3.to_schur();
        assert_eq!(s.coeff(&ptn(&[3])), QPoly::one());
        assert_eq!(s.coeff(&ptn(&[2, 1])), QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(s.coeff(&ptn(&[1, 1, 1])), QPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(s.num_terms(), 3);
    }

    #[test]
    fn hall_littlewood_specializations() {
        assert_eq!(hall_littlewood_h(1), SymFunc::power_sum(1));
        for n in 1..=8 {
            let h = hall_littlewood_h(n);
            assert_eq!(h.eval_q(&rat(0)), SymFunc::complete(n), "H_{n}(x;0)");
            assert_eq!(
                h.eval_q(&rat(1)),
                SymFunc::power_sum(1).pow(n),
                "H_{n}(x;1)"
            );
            assert_eq!(h.dimension().unwrap(), q_factorial(n), "dim H_{n}");
            let p1n = SymFunc::power_sum(1).pow(n);
            assert_eq!(p1n.scalar(&h), q_factorial(n), "<p_1^n, H_{n}>");
        }
    }

    #[test]
    fn qhook_examples() {
        assert_eq!(
            qhook_coeff(&ptn(&[1, 1, 1])).unwrap(),
            QPoly::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(qhook_coeff(&ptn(&[2, 1])).unwrap(), QPoly::from_ints(&[0, 1, 1]));
        for n in 1..=8 {
            assert_eq!(qhook_coeff(&ptn(&[n])).unwrap(), QPoly::one());
        }
    }

    /// The charge convention oracle: for every shape of weight <= 7 the SYT
    /// charge polynomial equals the q-hook coefficient of `s_shape` in `H_n`,
    /// and the Kostka-Foulkes route recovers the same through conjugation.
    #[test]
    fn charge_and_qhook_agree() {
        for n in 1..=7u32 {
            let h = hall_littlewood_h(n).to_schur();
            let column = Partition::new(vec![1; n as usize]);
            for lambda in partitions_of(n) {
                let coeff = h.coeff(&lambda);
                assert_eq!(syt_charge_gen(&lambda), coeff, "SYT charge at {lambda}");
                assert_eq!(qhook_coeff(&lambda).unwrap(), coeff, "q-hook at {lambda}");
                assert_eq!(
                    kostka_foulkes(&lambda.conjugate(), &column).unwrap(),
                    coeff,
                    "conjugate Kostka-Foulkes at {lambda}"
                );
            }
        }
    }

    #[test]
    fn q_schur_golden_s32() {
        validate_q_schur_bridge().unwrap();
    }

    #[test]
    fn q_schur_specializations() {
        for n in 1..=6u32 {
            for mu in partitions_of(n) {
                let s = q_schur(&mu);
                // Support dominated by mu.
                for (lambda, _) in s.terms() {
                    assert!(lambda.dominance_leq(&mu).unwrap(), "{lambda} in S_{mu}");
                }
                assert_eq!(
                    s.eval_q(&rat(0)),
                    SchurExpansion::from_terms([(mu.clone(), QPoly::one())])
                );
                let mut elem = SymFunc::one();
                for &p in mu.conjugate().parts() {
                    elem = elem.mul(&SymFunc::elementary(p));
                }
                assert_eq!(s.eval_q(&rat(1)), elem.to_schur(), "S_{mu}(1)");
            }
        }
    }

    /// The displayed Macdonald specializations at t = 0 for n = 3 pin the
    /// defining twist S_mu = omega q^(n(mu')) H_mu(x;1/q,0).
    #[test]
    fn q_schur_matches_t0_macdonald_at_n3() {
        let golden_h_t0: Vec<(Partition, Vec<(Partition, QPoly)>)> = vec![
            (
                ptn(&[3]),
                vec![
                    (ptn(&[3]), QPoly::one()),
                    (ptn(&[2, 1]), QPoly::from_ints(&[0, 1, 1])),
                    (ptn(&[1, 1, 1]), QPoly::from_ints(&[0, 0, 0, 1])),
                ],
            ),
            (
                ptn(&[2, 1]),
                vec![
                    (ptn(&[3]), QPoly::one()),
                    (ptn(&[2, 1]), QPoly::from_ints(&[0, 1])),
                ],
            ),
            (ptn(&[1, 1, 1]), vec![(ptn(&[3]), QPoly::one())]),
        ];
        for (mu, h_t0) in golden_h_t0 {
            // omega q^(n(mu')) H_mu(x; 1/q, 0): reverse each coefficient in
            // degree n(mu') and conjugate the indexing shape.
            let twist = mu.conjugate().n_stat() as usize;
            let expected: Vec<(Partition, QPoly)> = h_t0
                .into_iter()
                .map(|(lambda, c)| {
                    let reversed =
                        QPoly::from_coeffs((0..=twist).map(|k| c.coeff(twist - k)).collect());
                    (lambda.conjugate(), reversed)
                })
                .collect();
            assert_eq!(q_schur(&mu), SchurExpansion::from_terms(expected), "S_{mu}");
        }
    }
}
