//! Monomials as exponent vectors, ordered by graded lexicographic order with
//! `x0 > x1 > ...`. This order is fixed once and used everywhere: printing,
//! coefficient vectors, JSON, and projective normalization.

use smallvec::SmallVec;
use std::cmp::Ordering;

type Exps = SmallVec<[u16; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        Monomial { exps: exps.into_iter().collect() }
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        Monomial { exps: exps.iter().copied().collect() }
    }

    /// The monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: std::iter::repeat(0).take(nvars).collect() }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact monomial quotient, `None` if some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exps::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    /// Lowers the exponent of `x_i` by one; `None` if it is already zero.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // lex with x0 > x1 > ...: earlier variable with larger exponent wins
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// canonical order, so index 0 is `x0^d` and the last is `x_{n-1}^d`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u16>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining as u16;
        out.push(Monomial::from_slice(current));
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e as u16;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// `dim Sym^d` of an `nvars`-dimensional space: `C(d + nvars - 1, nvars - 1)`.
pub fn sym_dim(nvars: usize, d: u32) -> usize {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..(nvars as u128 - 1) {
        num *= d as u128 + i + 1;
        den *= i + 1;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x0 = Monomial::var(2, 0);
        let x1 = Monomial::var(2, 1);
        assert!(x0 > x1);
        assert!(x0.mul(&x1) > x0); // degree dominates
        let m1 = Monomial::from_slice(&[2, 0]);
        let m2 = Monomial::from_slice(&[1, 1]);
        assert!(m1 > m2);
    }

    #[test]
    fn degree_basis_enumeration() {
        let ms = monomials_of_degree(2, 4);
        assert_eq!(ms.len(), 5);
        assert_eq!(ms[0], Monomial::from_slice(&[4, 0]));
        assert_eq!(ms[1], Monomial::from_slice(&[3, 1]));
        assert_eq!(ms[4], Monomial::from_slice(&[0, 4]));
        for w in ms.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(sym_dim(3, 3), 10);
        assert_eq!(sym_dim(5, 3), 35);
        assert_eq!(sym_dim(2, 6), 7);
    }

    #[test]
    fn ternary_cubic_order_matches_lex_coefficient_convention() {
        // descending order of ternary cubic monomials is the classical
        // lexicographic coefficient order a300, a210, a201, ...
        let ms = monomials_of_degree(3, 3);
        assert_eq!(ms[0].exps(), &[3, 0, 0]);
        assert_eq!(ms[1].exps(), &[2, 1, 0]);
        assert_eq!(ms[2].exps(), &[2, 0, 1]);
        assert_eq!(ms[4].exps(), &[1, 1, 1]);
        assert_eq!(ms[9].exps(), &[0, 0, 3]);
    }
}
