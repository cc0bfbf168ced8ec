//! Sparse multivariate polynomials over an exact field.
//!
//! Terms live in a `BTreeMap` keyed by the fixed graded-lex order, so every
//! polynomial is canonical by construction and results never depend on the
//! order terms were inserted.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Q};
use crate::matrix::FieldMatrix;
use crate::monomial::{monomials_of_degree, Monomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::IndexOutOfRange { index: i, bound: nvars });
        }
        let one = field.one();
        Ok(Self::monomial_term(field, nvars, Monomial::var(nvars, i), one))
    }

    pub fn monomial_term(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        field: F,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    /// Terms in descending canonical order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    /// Leading term in the canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.field.add(e.get(), &c);
                if self.field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.field.mul(v, c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m1, c1) in self.terms.iter() {
            out.terms.insert(m1.mul(m), c1.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.field.clone(), self.nvars, self.field.one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, bound: self.nvars });
        }
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, c) in self.terms.iter() {
            if let Some(lowered) = m.lower(i) {
                let k = self.field.from_i64(m.exp(i) as i64);
                out.add_term(lowered, self.field.mul(c, &k));
            }
        }
        Ok(out)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// `Some(d)` when nonzero and every term has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        if it.all(|m| m.total_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Substitution `x_i -> sum_j M[i][j] y_j` for a square matrix `M`.
    pub fn linear_substitute(&self, m: &FieldMatrix<F>) -> Result<Self> {
        if m.nrows() != self.nvars || m.ncols() != self.nvars {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "substitution matrix is {}x{}, polynomial has {} variables",
                    m.nrows(),
                    m.ncols(),
                    self.nvars
                ),
            });
        }
        if m.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let images: Vec<Self> = (0..self.nvars)
            .map(|i| {
                let mut row = Self::zero(self.field.clone(), self.nvars);
                for j in 0..self.nvars {
                    let c = m.at(i, j).clone();
                    if !self.field.is_zero(&c) {
                        row.add_term(Monomial::var(self.nvars, j), c);
                    }
                }
                row
            })
            .collect();
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (mono, c) in self.terms.iter() {
            let mut term = Self::constant(self.field.clone(), self.nvars, c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..mono.exp(i) {
                    term = term.mul(img)?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: point.len() });
        }
        let mut acc = self.field.zero();
        for (m, c) in self.terms.iter() {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v = self.field.mul(&v, &point[i]);
                }
            }
            acc = self.field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Coefficients over the degree-`d` monomial basis in descending canonical
    /// order. Errors unless the polynomial is zero or homogeneous of degree `d`.
    pub fn coefficient_vector(&self, d: u32) -> Result<Vec<F::Elem>> {
        if !self.is_zero() && self.homogeneous_degree() != Some(d) {
            return Err(Error::NonHomogeneous);
        }
        Ok(monomials_of_degree(self.nvars, d)
            .iter()
            .map(|m| self.coefficient(m))
            .collect())
    }

    pub fn from_coefficient_vector(field: F, nvars: usize, d: u32, coeffs: &[F::Elem]) -> Self {
        let basis = monomials_of_degree(nvars, d);
        debug_assert_eq!(basis.len(), coeffs.len());
        Self::from_terms(field, nvars, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    /// Minimal total exponent over the variables in `subset`, i.e. the order of
    /// vanishing along the linear subspace where those variables vanish.
    pub fn order_along_subspace(&self, subset: &[usize]) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for &i in subset {
            if i >= self.nvars {
                return Err(Error::IndexOutOfRange { index: i, bound: self.nvars });
            }
        }
        Ok(self
            .terms
            .keys()
            .map(|m| subset.iter().map(|&i| m.exp(i) as u32).sum())
            .min()
            .unwrap())
    }

    /// Exact quotient `self / g`; `None` when `g` does not divide exactly.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo = Self::zero(self.field.clone(), self.nvars);
        let (gm, gc) = {
            let (m, c) = g.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&gm)?;
            let qc = self.field.div(&rc, &gc)?;
            let t = Self::monomial_term(self.field.clone(), self.nvars, qm, qc);
            rem = rem.sub(&t.mul(g).ok()?).ok()?;
            quo = quo.add(&t).ok()?;
        }
        Some(quo)
    }

    /// Scales so the leading coefficient in the canonical order is 1.
    pub fn projective_normalize(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Substitutes a polynomial for each variable (all in the target ring).
    pub fn compose(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: images.len() });
        }
        let tgt_vars = images[0].nvars;
        let field = images[0].field.clone();
        let mut out = Self::zero(field.clone(), tgt_vars);
        for (mono, c) in self.terms.iter() {
            let mut term = Self::constant(field.clone(), tgt_vars, c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..mono.exp(i) {
                    term = term.mul(img)?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

/// `Some(lambda)` with `f = lambda * g`, `None` when no such nonzero scalar
/// exists. Both zero gives `lambda = 1` by convention.
pub fn is_proportional<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Option<F::Elem> {
    let field = f.field().clone();
    if f.is_zero() && g.is_zero() {
        return Some(field.one());
    }
    if f.is_zero() || g.is_zero() {
        return None;
    }
    if f.nvars() != g.nvars() || f.field() != g.field() {
        return None;
    }
    if f.num_terms() != g.num_terms() {
        return None;
    }
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    if fm != gm {
        return None;
    }
    let lambda = field.div(fc, gc)?;
    if *f == g.scale(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// Cross-product test for pointwise projective equality of two polynomial
/// vectors: `p_i q_j = p_j q_i` for all `i < j`, with matching support.
pub fn projectively_equal_vectors<F: Field>(p: &[MultiPoly<F>], q: &[MultiPoly<F>]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let some_p = p.iter().any(|x| !x.is_zero());
    let some_q = q.iter().any(|x| !x.is_zero());
    if !some_p || !some_q {
        return some_p == some_q;
    }
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            let left = p[i].mul(&q[j]).expect("compatible");
            let right = p[j].mul(&q[i]).expect("compatible");
            if left != right {
                return false;
            }
        }
    }
    true
}

/// GCD of two binary homogeneous forms, normalized so the leading coefficient
/// in the canonical order is 1. Powers of `x0` and `x1` dividing the inputs are
/// tracked separately before dehomogenizing to `Q[t]`, `t = x1/x0`.
pub fn gcd_binary_form<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    if f.nvars() != 2 || g.nvars() != 2 {
        return Err(Error::VarCountMismatch { left: f.nvars(), right: 2 });
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() || !g.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if f.is_zero() {
        return Ok(g.projective_normalize());
    }
    if g.is_zero() {
        return Ok(f.projective_normalize());
    }
    let field = f.field().clone();

    // strip x0^a * x1^b
    let strip = |p: &MultiPoly<F>| -> (u32, u32, Vec<F::Elem>) {
        let a = p.order_along_subspace(&[0]).unwrap();
        let b = p.order_along_subspace(&[1]).unwrap();
        let d = p.homogeneous_degree().unwrap();
        // coefficients of the cofactor as univariate in t = x1/x0, degree d-a-b
        let deg = (d - a - b) as usize;
        let mut coeffs = vec![p.field().zero(); deg + 1];
        for (m, c) in p.terms() {
            let e1 = m.exp(1) as u32 - b;
            coeffs[e1 as usize] = c.clone();
        }
        (a, b, coeffs)
    };
    let (fa, fb, fc) = strip(f);
    let (ga, gb, gc) = strip(g);

    // univariate gcd over the field
    let mut a = fc;
    let mut b = gc;
    let deg = |v: &Vec<F::Elem>| -> Option<usize> {
        v.iter().rposition(|c| !field.is_zero(c))
    };
    while deg(&b).is_some() {
        let db = deg(&b).unwrap();
        let lead_b = b[db].clone();
        // a mod b
        while let Some(da) = deg(&a) {
            if da < db {
                break;
            }
            let q = field.div(&a[da], &lead_b).unwrap();
            for i in 0..=db {
                let delta = field.mul(&q, &b[i]);
                a[da - db + i] = field.sub(&a[da - db + i], &delta);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let da = deg(&a).unwrap_or(0);
    // rehomogenize to degree da and restore common x0/x1 powers
    let x0_pow = fa.min(ga);
    let x1_pow = fb.min(gb);
    let mut out = MultiPoly::zero(field.clone(), 2);
    for (i, c) in a.iter().enumerate().take(da + 1) {
        if !field.is_zero(c) {
            let m = Monomial::new([(da - i) as u16 + x0_pow as u16, i as u16 + x1_pow as u16]);
            out = out.add(&MultiPoly::monomial_term(field.clone(), 2, m, c.clone()))?;
        }
    }
    Ok(out.projective_normalize())
}

/// Reduces a rational polynomial mod `p`; denominators must be invertible,
/// which they are for any denominator not divisible by `p`.
pub fn reduce_mod_p(f: &MultiPoly<Q>, fp: PrimeField) -> Result<MultiPoly<PrimeField>> {
    let mut out = MultiPoly::zero(fp, f.nvars());
    for (m, c) in f.terms() {
        let (num, den) = Q.to_num_den(c);
        let c2 = fp.from_num_den(&num, &den)?;
        out.add_term(m.clone(), c2);
    }
    Ok(out)
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(w, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let (neg, mag) = self.field.display_parts(c);
            if first {
                if neg {
                    write!(w, "-")?;
                }
                first = false;
            } else if neg {
                write!(w, " - ")?;
            } else {
                write!(w, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.is_one() {
                factors.push(mag);
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    _ => factors.push(format!("x{i}^{e}")),
                }
            }
            write!(w, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat_i, Q};

    fn qpoly(nvars: usize, terms: &[(i64, &[u16])]) -> MultiPoly<Q> {
        MultiPoly::from_terms(
            Q,
            nvars,
            terms.iter().map(|(c, e)| (Monomial::from_slice(e), rat_i(*c))),
        )
    }

    #[test]
    fn product_difference_of_squares() {
        let sum = qpoly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let diff = qpoly(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let expect = qpoly(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(sum.mul(&diff).unwrap(), expect);
    }

    #[test]
    fn absorbing_and_cancellation() {
        let f = qpoly(2, &[(3, &[2, 1]), (1, &[0, 3])]);
        let z = MultiPoly::zero(Q, 2);
        assert!(f.mul(&z).unwrap().is_zero());
        let g = qpoly(2, &[(1, &[3, 0]), (1, &[0, 3])]);
        let h = qpoly(2, &[(-1, &[3, 0])]);
        assert_eq!(g.add(&h).unwrap(), qpoly(2, &[(1, &[0, 3])]));
    }

    #[test]
    fn arithmetic_rejects_mismatched_inputs() {
        let f = qpoly(2, &[(1, &[1, 0])]);
        let g = qpoly(3, &[(1, &[1, 0, 0])]);
        assert!(matches!(f.add(&g), Err(Error::VarCountMismatch { .. })));
    }

    #[test]
    fn derivative_power_rule_and_absent_variable() {
        let f = qpoly(1, &[(1, &[3])]);
        assert_eq!(f.partial_derivative(0).unwrap(), qpoly(1, &[(3, &[2])]));
        let g = qpoly(3, &[(1, &[1, 1, 0])]);
        assert!(g.partial_derivative(2).unwrap().is_zero());
        let h = qpoly(3, &[(1, &[1, 1, 1])]);
        assert_eq!(h.partial_derivative(1).unwrap(), qpoly(3, &[(1, &[1, 0, 1])]));
        assert!(matches!(g.partial_derivative(5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn substitution_identity_swap_shear() {
        let f = qpoly(2, &[(1, &[2, 0])]);
        let id = FieldMatrix::identity(Q, 2);
        assert_eq!(f.linear_substitute(&id).unwrap(), f);

        let swap = FieldMatrix::from_rows(Q, vec![vec![rat_i(0), rat_i(1)], vec![rat_i(1), rat_i(0)]]).unwrap();
        assert_eq!(f.linear_substitute(&swap).unwrap(), qpoly(2, &[(1, &[0, 2])]));

        // x0 -> x0 + x1, x1 -> x1 applied to x0*x1
        let g = qpoly(2, &[(1, &[1, 1])]);
        let shear = FieldMatrix::from_rows(Q, vec![vec![rat_i(1), rat_i(1)], vec![rat_i(0), rat_i(1)]]).unwrap();
        assert_eq!(
            g.linear_substitute(&shear).unwrap(),
            qpoly(2, &[(1, &[1, 1]), (1, &[0, 2])])
        );
    }

    #[test]
    fn proportionality_cases() {
        let f = qpoly(1, &[(2, &[2])]);
        let g = qpoly(1, &[(1, &[2])]);
        assert_eq!(is_proportional(&f, &g), Some(rat_i(2)));
        let h = qpoly(2, &[(1, &[0, 2])]);
        let k = qpoly(2, &[(1, &[2, 0])]);
        assert_eq!(is_proportional(&h, &k), None);
        let z = MultiPoly::zero(Q, 1);
        assert_eq!(is_proportional(&z, &g), None);
        assert_eq!(is_proportional(&z, &z), Some(rat_i(1)));
    }

    #[test]
    fn proportionality_symmetric_up_to_inversion() {
        let f = qpoly(2, &[(6, &[1, 1]), (-9, &[0, 2])]);
        let g = qpoly(2, &[(2, &[1, 1]), (-3, &[0, 2])]);
        let l1 = is_proportional(&f, &g).unwrap();
        let l2 = is_proportional(&g, &f).unwrap();
        assert_eq!(l1 * l2, rat_i(1));
    }

    #[test]
    fn order_along_subspace_cases() {
        let f = qpoly(2, &[(1, &[2, 1]), (1, &[1, 3])]);
        assert_eq!(f.order_along_subspace(&[0]).unwrap(), 1);
        let g = qpoly(3, &[(1, &[0, 0, 3])]);
        assert_eq!(g.order_along_subspace(&[0, 1]).unwrap(), 0);
        let z = MultiPoly::zero(Q, 2);
        assert!(matches!(z.order_along_subspace(&[0]), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn gcd_binary_forms() {
        let f = qpoly(2, &[(1, &[2, 1])]); // x0^2 x1
        let g = qpoly(2, &[(1, &[1, 2])]); // x0 x1^2
        assert_eq!(gcd_binary_form(&f, &g).unwrap(), qpoly(2, &[(1, &[1, 1])]));

        let f = qpoly(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let g = qpoly(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(gcd_binary_form(&f, &g).unwrap(), g);

        // double root detection: f = x0^2 x1^2, gcd(f, df/dx0) = x0 x1^2 -> nontrivial
        let f = qpoly(2, &[(1, &[2, 2])]);
        let d0 = f.partial_derivative(0).unwrap();
        let g = gcd_binary_form(&f, &d0).unwrap();
        assert_eq!(g, qpoly(2, &[(1, &[1, 2])]));

        let z = MultiPoly::zero(Q, 2);
        assert!(matches!(gcd_binary_form(&z, &z), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn division_and_normalization() {
        let f = qpoly(2, &[(2, &[2, 0]), (2, &[1, 1])]);
        let g = qpoly(2, &[(1, &[1, 0])]);
        let q = f.div_exact(&g).unwrap();
        assert_eq!(q, qpoly(2, &[(2, &[1, 0]), (2, &[0, 1])]));
        let h = qpoly(2, &[(1, &[2, 0]), (1, &[0, 2])]);
        assert!(h.div_exact(&g).is_none());

        let p = qpoly(2, &[(-2, &[2, 0]), (4, &[0, 2])]);
        let n = p.projective_normalize();
        assert_eq!(n, qpoly(2, &[(1, &[2, 0]), (-2, &[0, 2])]));
    }

    #[test]
    fn display_formats() {
        assert_eq!(qpoly(3, &[(2, &[1, 1, 1])]).to_string(), "2*x0*x1*x2");
        assert_eq!(MultiPoly::zero(Q, 2).to_string(), "0");
        assert_eq!(
            qpoly(2, &[(1, &[2, 0]), (-1, &[0, 2])]).to_string(),
            "x0^2 - x1^2"
        );
        let half = MultiPoly::monomial_term(Q, 1, Monomial::from_slice(&[2]), crate::field::rat(1, 2));
        assert_eq!(half.to_string(), "1/2*x0^2");
    }
}
