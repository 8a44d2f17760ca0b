//! The subring of symmetric functions generated by `h1`, `h2`, `e2`.
//!
//! Since `h1^2 = h2 + e2`, the monomials `h1^i h2^j e2^k` with `i <= 1` are
//! linearly independent and span the subring, which makes expansions unique;
//! positivity of a value in `N[h1,h2,e2]` is then coefficient inspection in
//! this canonical basis. Equivalently the subring is `Q[p1, p2]`, with
//! `h2 = (p1^2 + p2)/2` and `e2 = (p1^2 - p2)/2`, which is how conversions
//! to and from [`SymFunc`] are done.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::partition::Partition;
use crate::symfunc::SymFunc;
use crate::{Error, Result};

/// Exponents `(i, j, k)` of a canonical monomial `h1^i h2^j e2^k`, `i <= 1`.
type Monomial = (u8, u32, u32);

/// Polynomial in `h1, h2, e2`, kept in the canonical basis with the
/// `h1`-exponent reduced below 2.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HePoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl HePoly {
    pub fn zero() -> Self {
        HePoly::default()
    }

    pub fn one() -> Self {
        HePoly::monomial(0, 0, 0, BigRational::one())
    }

    pub fn h1() -> Self {
        HePoly::monomial(1, 0, 0, BigRational::one())
    }

    pub fn h2() -> Self {
        HePoly::monomial(0, 1, 0, BigRational::one())
    }

    pub fn e2() -> Self {
        HePoly::monomial(0, 0, 1, BigRational::one())
    }

    /// `c * h1^i h2^j e2^k` for arbitrary `i`, reduced into the basis.
    pub fn monomial(i: u32, j: u32, k: u32, c: BigRational) -> Self {
        let mut out = HePoly::zero();
        if c.is_zero() {
            return out;
        }
        // h1^(2m) = (h2 + e2)^m: binomial expansion.
        let m = i / 2;
        let parity = (i % 2) as u8;
        let mut binom = BigRational::one();
        for t in 0..=m {
            out.add_term((parity, j + m - t, k + t), &(&c * &binom));
            // next binomial coefficient C(m, t+1)
            binom = binom * BigRational::from(num::BigInt::from(m - t))
                / BigRational::from(num::BigInt::from(t + 1));
        }
        out
    }

    fn add_term(&mut self, key: Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u8, j: u32, k: u32) -> BigRational {
        self.terms
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &HePoly) -> HePoly {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(*key, c);
        }
        out
    }

    pub fn sub(&self, other: &HePoly) -> HePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HePoly {
        HePoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> HePoly {
        if c.is_zero() {
            return HePoly::zero();
        }
        HePoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HePoly) -> HePoly {
        let mut out = HePoly::zero();
        for ((i1, j1, k1), a) in &self.terms {
            for ((i2, j2, k2), b) in &other.terms {
                let piece = HePoly::monomial(
                    (*i1 + *i2) as u32,
                    j1 + j2,
                    k1 + k2,
                    a * b,
                );
                out = out.add(&piece);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> HePoly {
        let mut base = self.clone();
        let mut acc = HePoly::one();
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

    /// True iff every canonical-basis coefficient is a nonnegative integer.
    pub fn is_natural(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Expansion into the power-sum basis.
    pub fn to_symfunc(&self) -> SymFunc {
        let mut acc = SymFunc::zero();
        for ((i, j, k), c) in &self.terms {
            // h1^i h2^j e2^k -> p-monomials: expand (p11+p2)^j (p11-p2)^k / 2^(j+k).
            let mut piece = SymFunc::zero();
            let halves = pow_rat(&BigRational::from(num::BigInt::from(2u32)), j + k);
            for (s, t) in binomial_cross(*j, *k) {
                // s copies of p2 from the h2 factor, t copies from the e2 factor.
                let ones = 2 * (*j - s.0) + 2 * (*k - t.0) + *i as u32;
                let mut parts = vec![2u32; (s.0 + t.0) as usize];
                parts.extend(std::iter::repeat(1).take(ones as usize));
                let sign = if t.0 % 2 == 1 { -1 } else { 1 };
                let coeff =
                    c * &s.1 * &t.1 * BigRational::from(num::BigInt::from(sign)) / &halves;
                let key = Partition::from_unsorted(parts);
                piece = piece.add(&SymFunc::from_term(
                    key,
                    crate::qpoly::QPoly::constant(coeff),
                ));
            }
            acc = acc.add(&piece);
        }
        acc
    }

    /// Reads a symmetric function supported on power sums with parts in
    /// `{1, 2}` back into the canonical basis. Errors when the support
    /// leaves the subring.
    pub fn from_symfunc(f: &SymFunc) -> Result<HePoly> {
        let mut out = HePoly::zero();
        for (mu, c) in f.terms() {
            if mu.parts().iter().any(|&p| p > 2) {
                return Err(Error::NoSolution(format!(
                    "support term p{mu} lies outside Q[p1,p2]"
                )));
            }
            if c.degree().unwrap_or(0) > 0 {
                return Err(Error::NoSolution(format!(
                    "coefficient of p{mu} depends on q: {c}"
                )));
            }
            let twos = mu.parts().iter().filter(|&&p| p == 2).count() as u32;
            let ones = mu.parts().iter().filter(|&&p| p == 1).count() as u32;
            // p1^ones p2^twos = h1^(ones mod 2) (h2+e2)^(ones/2) (h2-e2)^twos.
            let half = HePoly::monomial(ones, 0, 0, c.coeff(0));
            let mut p2_part = HePoly::h2().sub(&HePoly::e2()).pow(twos);
            p2_part = p2_part.mul(&half);
            out = out.add(&p2_part);
        }
        Ok(out)
    }
}

fn pow_rat(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Pairs of binomial expansions for `(h2+e2)^j` against `(h2-e2)^k`:
/// yields `((s, C(j,s)), (t, C(k,t)))` over all `s <= j`, `t <= k`, meaning
/// `s + t` copies of `p2` get chosen.
fn binomial_cross(
    j: u32,
    k: u32,
) -> impl Iterator<Item = ((u32, BigRational), (u32, BigRational))> {
    let binoms = |n: u32| -> Vec<(u32, BigRational)> {
        let mut row = Vec::with_capacity(n as usize + 1);
        let mut c = BigRational::one();
        for t in 0..=n {
            row.push((t, c.clone()));
            if t < n {
                c = c * BigRational::from(num::BigInt::from(n - t))
                    / BigRational::from(num::BigInt::from(t + 1));
            }
        }
        row
    };
    let js = binoms(j);
    let ks = binoms(k);
    js.into_iter()
        .flat_map(move |s| ks.clone().into_iter().map(move |t| (s.clone(), t)))
}

impl fmt::Display for HePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((i, j, k), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !c.is_one() || (*i, *j, *k) == (0, 0, 0) {
                factors.push(c.to_string());
            }
            for (name, e) in [("h1", *i as u32), ("h2", *j), ("e2", *k)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
