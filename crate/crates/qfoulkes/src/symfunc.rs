//! The symmetric-function kernel.
//!
//! A [`SymFunc`] is stored in the power-sum basis as a sparse map from
//! partitions to [`QPoly`] coefficients: products and plethysm are
//! structurally trivial there, and conversion to the Schur basis (via
//! symmetric-group characters) happens only at reporting and positivity
//! boundaries. A [`SchurExpansion`] is the Schur-side counterpart and may
//! mix degrees (the bar operator produces inhomogeneous values).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigRational, One, Signed, Zero};
use rayon::prelude::*;

use crate::character::{char_table, char_values_for};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::{factorial, QPoly};
use crate::{Error, Result};

/// Symmetric function in the power-sum basis: `sum_mu c_mu(q) p_mu`.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    /// The constant 1 (empty power-sum product).
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), QPoly::one());
        SymFunc { terms }
    }

    /// The power sum `p_k`.
    pub fn power_sum(k: u32) -> Self {
        assert!(k >= 1);
        SymFunc::from_term(Partition::new(vec![k]), QPoly::one())
    }

    /// `p_mu`, the product of power sums over the parts of `mu`.
    pub fn power_sum_product(mu: &Partition) -> Self {
        SymFunc::from_term(mu.clone(), QPoly::one())
    }

    /// The complete homogeneous generator `h_n = sum_{mu |- n} p_mu / z_mu`.
    pub fn complete(n: u32) -> Self {
        let mut terms = BTreeMap::new();
        for mu in partitions_of(n) {
            let z = BigRational::from(mu.z());
            terms.insert(mu, QPoly::constant(z.recip()));
        }
        SymFunc { terms }
    }

    /// The elementary generator `e_n = omega(h_n)`.
    pub fn elementary(n: u32) -> Self {
        SymFunc::complete(n).omega()
    }

    /// The Schur function `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`.
    pub fn schur(lambda: &Partition) -> Self {
        let n = lambda.weight();
        if n == 0 {
            return SymFunc::one();
        }
        let table = char_table(n);
        let l = table.index_of(lambda).expect("partition of its own weight");
        let mut terms = BTreeMap::new();
        for (m, mu) in table.partitions().iter().enumerate() {
            let chi = table.value(l, m);
            if chi == 0 {
                continue;
            }
            let c = BigRational::from(num::BigInt::from(chi)) / BigRational::from(mu.z());
            terms.insert(mu.clone(), QPoly::constant(c));
        }
        SymFunc { terms }
    }

    pub fn from_term(mu: Partition, coeff: QPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mu, coeff);
        }
        SymFunc { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mu: &Partition) -> QPoly {
        self.terms.get(mu).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Degree when homogeneous (0 for the zero function), `None` otherwise.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for mu in self.terms.keys() {
            match deg {
                None => deg = Some(mu.weight()),
                Some(d) if d != mu.weight() => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    fn add_assign_term(terms: &mut BTreeMap<Partition, QPoly>, mu: &Partition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(mu) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    terms.remove(mu);
                } else {
                    *existing = sum;
                }
            }
            None => {
                terms.insert(mu.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut terms = self.terms.clone();
        for (mu, c) in &other.terms {
            Self::add_assign_term(&mut terms, mu, c);
        }
        SymFunc { terms }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QPoly) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &BigRational) -> SymFunc {
        self.scale(&QPoly::constant(c.clone()))
    }

    /// Ring product; `p_mu * p_nu = p_{sort(mu ++ nu)}`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut terms = BTreeMap::new();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let key = merge_parts(mu, nu);
                let prod = a * b;
                Self::add_assign_term(&mut terms, &key, &prod);
            }
        }
        SymFunc { terms }
    }

    pub fn pow(&self, mut e: u32) -> SymFunc {
        let mut base = self.clone();
        let mut acc = SymFunc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `p_k` applied plethystically: parts of every key are multiplied by
    /// `k` and `q` is sent to `q^k` inside the coefficients.
    fn apply_power_sum(&self, k: u32) -> SymFunc {
        if k == 1 {
            return self.clone();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let scaled = Partition::new(mu.parts().iter().map(|&p| p * k).collect());
                    (scaled, c.stretch(k as usize))
                })
                .collect(),
        }
    }

    /// Plethysm `self[g]`: expand `self` in the power-sum basis, substitute
    /// `p_j -> p_{jk}` and `q -> q^k` inside `g` for each `p_k`, and pass the
    /// outer coefficients through unchanged.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        let mut part_images: HashMap<u32, SymFunc> = HashMap::new();
        for mu in self.terms.keys() {
            for &k in mu.parts() {
                part_images
                    .entry(k)
                    .or_insert_with(|| g.apply_power_sum(k));
            }
        }
        let contributions: Vec<SymFunc> = self
            .terms
            .par_iter()
            .map(|(mu, c)| {
                let mut prod = SymFunc::one();
                for (part, mult) in mu.multiplicities() {
                    prod = prod.mul(&part_images[&part].pow(mult));
                }
                prod.scale(c)
            })
            .collect();
        let mut terms = BTreeMap::new();
        for piece in contributions {
            for (mu, c) in piece.terms {
                Self::add_assign_term(&mut terms, &mu, &c);
            }
        }
        SymFunc { terms }
    }

    /// Scalar product `sum_mu f_mu(q) g_mu(q) z_mu`.
    pub fn scalar(&self, other: &SymFunc) -> QPoly {
        let mut acc = QPoly::zero();
        for (mu, a) in &self.terms {
            if let Some(b) = other.terms.get(mu) {
                let z = BigRational::from(mu.z());
                acc = &acc + &(a * b).scale(&z);
            }
        }
        acc
    }

    /// The involution `omega`: multiplies the coefficient of `p_mu` by
    /// `(-1)^(|mu| - len(mu))`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let flip = (mu.weight() as usize - mu.len()) % 2 == 1;
                    (mu.clone(), if flip { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// `self^perp` applied to `g`: the adjoint of multiplication by `self`,
    /// with `p_k^perp` acting as `k * d/dp_k`.
    pub fn perp(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, c) in &self.terms {
            let mut cur = g.clone();
            for &k in mu.parts() {
                cur = power_sum_perp(k, &cur);
                if cur.is_zero() {
                    break;
                }
            }
            out = out.add(&cur.scale(c));
        }
        out
    }

    /// `dim(f) = <p_1^n, f>` for homogeneous `f` of degree `n`, i.e.
    /// `n!` times the coefficient of `p_{1^n}`.
    pub fn dimension(&self) -> Result<QPoly> {
        let n = self.degree().ok_or(Error::Inhomogeneous)?;
        let ones = Partition::new(vec![1; n as usize]);
        Ok(self.coeff(&ones).scale(&factorial(n)))
    }

    /// Substitutes a value for `q` in every coefficient.
    pub fn eval_q(&self, v: &BigRational) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter_map(|(mu, c)| {
                    let e = c.eval(v);
                    (!e.is_zero()).then(|| (mu.clone(), QPoly::constant(e)))
                })
                .collect(),
        }
    }

    /// Exact evaluation at `x_1..x_N = point` (all other variables zero) and
    /// `q` = `qv`, by substituting numeric power sums.
    pub fn eval_in_vars(&self, point: &[BigRational], qv: &BigRational) -> BigRational {
        let mut psums: HashMap<u32, BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for (mu, c) in &self.terms {
            let mut term = c.eval(qv);
            if term.is_zero() {
                continue;
            }
            for &k in mu.parts() {
                let ps = psums.entry(k).or_insert_with(|| {
                    point
                        .iter()
                        .map(|x| num::pow::pow(x.clone(), k as usize))
                        .sum()
                });
                term *= &*ps;
            }
            acc += term;
        }
        acc
    }

    /// Expands into the Schur basis: the coefficient of `s_lambda` is
    /// `sum_mu c_mu(q) chi^lambda(mu)`, computed degree by degree.
    pub fn to_schur(&self) -> SchurExpansion {
        let mut by_weight: BTreeMap<u32, Vec<(&Partition, &QPoly)>> = BTreeMap::new();
        for (mu, c) in &self.terms {
            by_weight.entry(mu.weight()).or_default().push((mu, c));
        }
        let mut out = BTreeMap::new();
        for (n, terms) in by_weight {
            if n == 0 {
                out.insert(Partition::empty(), terms[0].1.clone());
                continue;
            }
            let table = char_table(n);
            let indexed: Vec<(usize, &QPoly)> = terms
                .iter()
                .map(|(mu, c)| (table.index_of(mu).expect("indexed partition"), *c))
                .collect();
            let rows: Vec<(Partition, QPoly)> = (0..table.partitions().len())
                .into_par_iter()
                .filter_map(|l| {
                    let mut acc = QPoly::zero();
                    for &(m, c) in &indexed {
                        let chi = table.value(l, m);
                        if chi != 0 {
                            acc = &acc + &c.scale(&BigRational::from(num::BigInt::from(chi)));
                        }
                    }
                    (!acc.is_zero()).then(|| (table.partitions()[l].clone(), acc))
                })
                .collect();
            out.extend(rows);
        }
        SchurExpansion { terms: out }
    }

    /// Coefficient of `s_lambda` in `self` without building a full character
    /// table: uses one memoized character row over the support of `self`.
    pub fn schur_coefficient(&self, lambda: &Partition) -> QPoly {
        let classes: Vec<Partition> = self
            .terms
            .keys()
            .filter(|mu| mu.weight() == lambda.weight())
            .cloned()
            .collect();
        if classes.is_empty() {
            return QPoly::zero();
        }
        let row = char_values_for(lambda, &classes);
        let mut acc = QPoly::zero();
        for (mu, chi) in classes.iter().zip(row) {
            if chi != 0 {
                acc = &acc
                    + &self.terms[mu].scale(&BigRational::from(num::BigInt::from(chi)));
            }
        }
        acc
    }

    /// Divides every coefficient exactly by `1 - q`; errors if any
    /// coefficient fails to vanish at `q = 1`.
    pub fn divide_by_one_minus_q(&self) -> Result<SymFunc> {
        let mut terms = BTreeMap::new();
        for (mu, c) in &self.terms {
            let d = c.divide_by_one_minus_q()?;
            if !d.is_zero() {
                terms.insert(mu.clone(), d);
            }
        }
        Ok(SymFunc { terms })
    }
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let (xs, ys) = (a.parts(), b.parts());
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        if xs[i] >= ys[j] {
            out.push(xs[i]);
            i += 1;
        } else {
            out.push(ys[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&xs[i..]);
    out.extend_from_slice(&ys[j..]);
    Partition::new(out)
}

/// `p_k^perp` on a power-sum expansion: sends `c p_nu` with `k` of
/// multiplicity `m` in `nu` to `c k m p_{nu minus one k}`.
fn power_sum_perp(k: u32, g: &SymFunc) -> SymFunc {
    let mut terms = BTreeMap::new();
    for (nu, c) in &g.terms {
        let mult = nu.parts().iter().filter(|&&p| p == k).count() as u32;
        if mult == 0 {
            continue;
        }
        let mut parts = nu.parts().to_vec();
        let pos = parts.iter().position(|&p| p == k).unwrap();
        parts.remove(pos);
        let key = Partition::new(parts);
        let scaled = c.scale(&BigRational::from(num::BigInt::from(k as u64 * mult as u64)));
        SymFunc::add_assign_term(&mut terms, &key, &scaled);
    }
    SymFunc { terms }
}

/// Schur-basis expansion `sum_lambda a_lambda(q) s_lambda`; may be
/// inhomogeneous (bar operator output). No zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, QPoly>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QPoly)>) -> Self {
        SchurExpansion {
            terms: terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Degree when homogeneous (0 for zero), `None` when degrees mix.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for mu in self.terms.keys() {
            match deg {
                None => deg = Some(mu.weight()),
                Some(d) if d != mu.weight() => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut terms = self.terms.clone();
        for (mu, c) in &other.terms {
            SymFunc::add_assign_term(&mut terms, mu, c);
        }
        SchurExpansion { terms }
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QPoly) -> SchurExpansion {
        if c.is_zero() {
            return SchurExpansion::zero();
        }
        SchurExpansion {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// The bar operator: linear extension of
    /// `s_mu -> s_(mu with its largest part removed)`.
    pub fn bar(&self) -> SchurExpansion {
        let mut terms = BTreeMap::new();
        for (mu, c) in &self.terms {
            let barred = mu.remove_largest_part();
            SymFunc::add_assign_term(&mut terms, &barred, c);
        }
        SchurExpansion { terms }
    }

    pub fn eval_q(&self, v: &BigRational) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter_map(|(mu, c)| {
                    let e = c.eval(v);
                    (!e.is_zero()).then(|| (mu.clone(), QPoly::constant(e)))
                })
                .collect(),
        }
    }

    /// Schur positivity: every coefficient lies in `N[q]`.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(QPoly::is_natural)
    }

    /// `self <= other` in the Schur-positivity order.
    pub fn schur_leq(&self, other: &SchurExpansion) -> bool {
        other.sub(self).is_schur_positive()
    }

    /// Strict order: `other - self` Schur-positive and nonzero.
    pub fn schur_lt(&self, other: &SchurExpansion) -> bool {
        let diff = other.sub(self);
        !diff.is_zero() && diff.is_schur_positive()
    }

    /// The witness of non-positivity: the term carrying the most negative
    /// single coefficient, or the first non-integral one. `None` when
    /// Schur-positive.
    pub fn negativity_witness(&self) -> Option<(Partition, QPoly)> {
        let mut worst: Option<(BigRational, Partition, QPoly)> = None;
        let mut non_integral: Option<(Partition, QPoly)> = None;
        for (mu, c) in &self.terms {
            if c.is_natural() {
                continue;
            }
            if let Some(min) = c.coeffs().iter().filter(|v| v.is_negative()).min() {
                if worst.as_ref().is_none_or(|(w, _, _)| min < w) {
                    worst = Some((min.clone(), mu.clone(), c.clone()));
                }
            } else if non_integral.is_none() {
                non_integral = Some((mu.clone(), c.clone()));
            }
        }
        worst.map(|(_, m, c)| (m, c)).or(non_integral)
    }

    /// Converts back to the power-sum basis through the character expansion
    /// of each Schur function.
    pub fn to_symfunc(&self) -> SymFunc {
        let mut by_weight: BTreeMap<u32, Vec<(&Partition, &QPoly)>> = BTreeMap::new();
        for (la, c) in &self.terms {
            by_weight.entry(la.weight()).or_default().push((la, c));
        }
        let mut out = SymFunc::zero();
        for (n, group) in by_weight {
            if n == 0 {
                out = out.add(&SymFunc::one().scale(group[0].1));
                continue;
            }
            let table = char_table(n);
            let mut terms = BTreeMap::new();
            for (la, c) in group {
                let l = table.index_of(la).expect("indexed partition");
                for (m, mu) in table.partitions().iter().enumerate() {
                    let chi = table.value(l, m);
                    if chi == 0 {
                        continue;
                    }
                    let factor =
                        BigRational::from(num::BigInt::from(chi)) / BigRational::from(mu.z());
                    let piece = c.scale(&factor);
                    SymFunc::add_assign_term(&mut terms, mu, &piece);
                }
            }
            out = out.add(&SymFunc { terms });
        }
        out
    }
}

fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    basis: &str,
    terms: &BTreeMap<Partition, QPoly>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (mu, c)) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        let text = c.to_string();
        if text == "1" {
            write!(f, "{basis}{mu}")?;
        } else if text.contains(' ') || text.contains('/') {
            write!(f, "({text})*{basis}{mu}")?;
        } else {
            write!(f, "{text}*{basis}{mu}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, "p", &self.terms)
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, "s", &self.terms)
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;
    use crate::qpoly::{q_factorial, rat, rat_frac};

    fn half() -> QPoly {
        QPoly::constant(rat_frac(1, 2))
    }

    #[test]
    fn generator_expansions() {
        let h2 = SymFunc::complete(2);
        assert_eq!(h2.coeff(&ptn(&[1, 1])), half());
        assert_eq!(h2.coeff(&ptn(&[2])), half());
        assert_eq!(h2.num_terms(), 2);

        let h3 = SymFunc::complete(3);
        assert_eq!(h3.coeff(&ptn(&[1, 1, 1])), QPoly::constant(rat_frac(1, 6)));
        assert_eq!(h3.coeff(&ptn(&[2, 1])), half());
        assert_eq!(h3.coeff(&ptn(&[3])), QPoly::constant(rat_frac(1, 3)));

        let e2 = SymFunc::elementary(2);
        assert_eq!(e2.coeff(&ptn(&[1, 1])), half());
        assert_eq!(e2.coeff(&ptn(&[2])), QPoly::constant(rat_frac(-1, 2)));

        assert_eq!(SymFunc::complete(0), SymFunc::one());
        assert_eq!(SymFunc::elementary(0), SymFunc::one());
    }

    #[test]
    fn products_merge_power_sums() {
        let p2 = SymFunc::power_sum(2);
        let p31 = SymFunc::power_sum_product(&ptn(&[3, 1]));
        assert_eq!(p2.mul(&p31), SymFunc::power_sum_product(&ptn(&[3, 2, 1])));

        let h1 = SymFunc::complete(1);
        assert_eq!(h1.mul(&h1), SymFunc::power_sum_product(&ptn(&[1, 1])));

        let schur = h1.mul(&h1).to_schur();
        assert_eq!(schur.coeff(&ptn(&[2])), QPoly::one());
        assert_eq!(schur.coeff(&ptn(&[1, 1])), QPoly::one());
        assert_eq!(schur.num_terms(), 2);
    }

    #[test]
    fn plethysm_basics() {
        let p2 = SymFunc::power_sum(2);
        let p3 = SymFunc::power_sum(3);
        assert_eq!(p2.plethysm(&p3), SymFunc::power_sum(6));

        // p_2 acting on q*p_1 turns q into q^2.
        let qp1 = SymFunc::from_term(ptn(&[1]), QPoly::q());
        let got = p2.plethysm(&qp1);
        assert_eq!(got,
            SymFunc::from_term(ptn(&[2]), QPoly::monomial(2, num::BigRational::one())));
    }

    #[test]
    fn classic_foulkes_difference() {
        let h2 = SymFunc::complete(2);
        let h3 = SymFunc::complete(3);
        let diff = h3.plethysm(&h2).sub(&h2.plethysm(&h3));
        let schur = diff.to_schur();
        assert_eq!(schur.coeff(&ptn(&[2, 2, 2])), QPoly::one());
        assert_eq!(schur.num_terms(), 1);
    }

    #[test]
    fn scalar_product_examples() {
        let p21 = SymFunc::power_sum_product(&ptn(&[2, 1]));
        let p3 = SymFunc::power_sum(3);
        assert_eq!(p21.scalar(&p21), QPoly::from_ints(&[2]));
        assert_eq!(p3.scalar(&p21), QPoly::zero());
    }

    #[test]
    fn schur_functions_are_orthonormal() {
        for n in [4u32, 5] {
            let ps = partitions_of(n);
            let schurs: Vec<SymFunc> = ps.iter().map(SymFunc::schur).collect();
            for (i, si) in schurs.iter().enumerate() {
                for (j, sj) in schurs.iter().enumerate() {
                    let want = if i == j { QPoly::one() } else { QPoly::zero() };
                    assert_eq!(si.scalar(sj), want, "{} vs {}", ps[i], ps[j]);
                }
            }
        }
    }

    #[test]
    fn schur_generator_examples() {
        for n in 1..=8 {
            assert_eq!(SymFunc::schur(&ptn(&[n])), SymFunc::complete(n));
        }
        let s11 = SymFunc::schur(&ptn(&[1, 1]));
        assert_eq!(s11, SymFunc::elementary(2));
        let s21 = SymFunc::schur(&ptn(&[2, 1]));
        assert_eq!(s21.coeff(&ptn(&[1, 1, 1])), QPoly::constant(rat_frac(1, 3)));
        assert_eq!(s21.coeff(&ptn(&[3])), QPoly::constant(rat_frac(-1, 3)));
        assert_eq!(s21.coeff(&ptn(&[2, 1])), QPoly::zero());
    }

    #[test]
    fn to_schur_of_regular_representation() {
        let p111 = SymFunc::power_sum_product(&ptn(&[1, 1, 1]));
        let s = p111.to_schur();
        assert_eq!(s.coeff(&ptn(&[3])), QPoly::one());
        assert_eq!(s.coeff(&ptn(&[2, 1])), QPoly::from_ints(&[2]));
        assert_eq!(s.coeff(&ptn(&[1, 1, 1])), QPoly::one());
    }

    #[test]
    fn complete_generators_are_single_row_schur() {
        for n in 1..=10 {
            let s = SymFunc::complete(n).to_schur();
            assert_eq!(s.num_terms(), 1);
            assert_eq!(s.coeff(&ptn(&[n])), QPoly::one());
        }
    }

    #[test]
    fn schur_round_trip() {
        let f = SymFunc::complete(3)
            .mul(&SymFunc::elementary(2))
            .add(&SymFunc::power_sum(5).scale(&QPoly::from_ints(&[0, 2])));
        let back = f.to_schur().to_symfunc();
        assert_eq!(back, f);
    }

    #[test]
    fn omega_examples() {
        for n in 1..=10 {
            assert_eq!(SymFunc::complete(n).omega(), SymFunc::elementary(n));
        }
        let f = SymFunc::schur(&ptn(&[3, 2]));
        assert_eq!(f.omega().omega(), f);
        let conj = f.omega().to_schur();
        assert_eq!(conj.coeff(&ptn(&[2, 2, 1])), QPoly::one());
        assert_eq!(conj.num_terms(), 1);
    }

    #[test]
    fn perp_examples() {
        let p1 = SymFunc::power_sum(1);
        let p11 = SymFunc::power_sum_product(&ptn(&[1, 1]));
        assert_eq!(p1.perp(&p11), SymFunc::power_sum(1).scale(&QPoly::from_ints(&[2])));

        let h1 = SymFunc::complete(1);
        let s21 = SymFunc::schur(&ptn(&[2, 1]));
        let got = h1.perp(&s21).to_schur();
        assert_eq!(got.coeff(&ptn(&[2])), QPoly::one());
        assert_eq!(got.coeff(&ptn(&[1, 1])), QPoly::one());
        assert_eq!(got.num_terms(), 2);

        let f = SymFunc::complete(4);
        assert!(f.perp(&SymFunc::one()).is_zero());
    }

    #[test]
    fn perp_is_adjoint_to_multiplication() {
        let f = SymFunc::complete(2);
        let g = SymFunc::schur(&ptn(&[2, 1, 1]));
        let h = SymFunc::schur(&ptn(&[2]));
        assert_eq!(f.perp(&g).scalar(&h), g.scalar(&f.mul(&h)));
    }

    #[test]
    fn dimension_examples() {
        let h2h3 = SymFunc::complete(2).plethysm(&SymFunc::complete(3));
        assert_eq!(h2h3.dimension().unwrap(), QPoly::from_ints(&[10]));
        let s21 = SymFunc::schur(&ptn(&[2, 1]));
        assert_eq!(s21.dimension().unwrap(), QPoly::from_ints(&[2]));
        let mixed = SymFunc::complete(2).add(&SymFunc::complete(3));
        assert!(mixed.dimension().is_err());
    }

    #[test]
    fn bar_examples() {
        let e = SchurExpansion::from_terms([
            (ptn(&[6, 2, 2]), QPoly::one()),
            (ptn(&[4, 4, 2]), QPoly::one()),
            (ptn(&[4, 2, 2, 2]), QPoly::one()),
            (ptn(&[2, 2, 2, 2, 2]), QPoly::one()),
        ]);
        let want = SchurExpansion::from_terms([
            (ptn(&[2, 2]), QPoly::one()),
            (ptn(&[4, 2]), QPoly::one()),
            (ptn(&[2, 2, 2]), QPoly::one()),
            (ptn(&[2, 2, 2, 2]), QPoly::one()),
        ]);
        assert_eq!(e.bar(), want);
        assert_eq!(
            SchurExpansion::from_terms([(ptn(&[7]), QPoly::one())]).bar(),
            SchurExpansion::from_terms([(Partition::empty(), QPoly::one())])
        );
        assert!(SchurExpansion::zero().bar().is_zero());
    }

    #[test]
    fn positivity_order() {
        let pos = SchurExpansion::from_terms([(ptn(&[2]), QPoly::from_ints(&[1, 1]))]);
        assert!(pos.is_schur_positive());
        assert!(!pos.schur_lt(&pos));
        let mixed = SchurExpansion::from_terms([
            (ptn(&[2]), QPoly::one()),
            (ptn(&[1, 1]), QPoly::from_ints(&[-1])),
        ]);
        assert!(!mixed.is_schur_positive());
        let witness = mixed.negativity_witness().unwrap();
        assert_eq!(witness.0, ptn(&[1, 1]));
    }

    #[test]
    fn eval_in_vars_examples() {
        let h2 = SymFunc::complete(2);
        assert_eq!(h2.eval_in_vars(&[rat(1), rat(1)], &rat(0)), rat(3));
        let p3 = SymFunc::power_sum(3);
        assert_eq!(p3.eval_in_vars(&[rat(2), rat(1)], &rat(0)), rat(9));
        let s11 = SymFunc::schur(&ptn(&[1, 1]));
        assert_eq!(s11.eval_in_vars(&[rat(5)], &rat(0)), rat(0));
    }

    #[test]
    fn dimension_of_symmetric_group_order() {
        // <p_1^n, p_1^n> = n!.
        let n = 6;
        let p1n = SymFunc::power_sum(1).pow(n);
        assert_eq!(p1n.scalar(&p1n), q_factorial(0).scale(&factorial(n)));
    }
}
