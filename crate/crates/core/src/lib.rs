//! Exact-arithmetic toolkit for the Hessian of homogeneous forms.
//!
//! Everything runs over exact coefficient fields (arbitrary-precision
//! rationals or a prime field `F_p`): Hessian determinants and their
//! differentials, the classical invariant theory of binary quartics and plane
//! cubics, power-sum (Waring) machinery with coefficient recovery, and
//! brute-force fiber statistics of the coefficient maps over small prime
//! fields.

pub mod binary;
pub mod error;
pub mod fflab;
pub mod field;
pub mod hessian;
pub mod json;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod projparam;
pub mod ternary;
pub mod waring;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Q, Rat};
pub use monomial::Monomial;
pub use poly::MultiPoly;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::field::{rat_i, Q};
    use crate::matrix::FieldMatrix;
    use crate::monomial::{monomials_of_degree, Monomial};
    use crate::poly::MultiPoly;
    use rand::Rng;

    pub fn random_form(rng: &mut rand_chacha::ChaCha8Rng, nvars: usize, d: u32) -> MultiPoly<Q> {
        loop {
            let f = MultiPoly::from_terms(
                Q,
                nvars,
                monomials_of_degree(nvars, d)
                    .into_iter()
                    .map(|m| (m, rat_i(rng.gen_range(-9..10)))),
            );
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// A disguised cone: a degree-d form in the first k < n variables pushed
    /// through a random unimodular change of coordinates.
    pub fn random_cone(
        rng: &mut rand_chacha::ChaCha8Rng,
        nvars: usize,
        d: u32,
        k: usize,
    ) -> MultiPoly<Q> {
        let inner = random_form(rng, k, d);
        let embedded = MultiPoly::from_terms(
            Q,
            nvars,
            inner.terms().map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e.resize(nvars, 0);
                (Monomial::new(e), c.clone())
            }),
        );
        let a = random_unimodular(rng, nvars);
        embedded.linear_substitute(&a).unwrap()
    }

    /// Product of random elementary shears: always determinant 1.
    pub fn random_unimodular(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> FieldMatrix<Q> {
        let mut m = FieldMatrix::identity(Q, n);
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let lam: i64 = rng.gen_range(-2..3);
            let mut shear = FieldMatrix::identity(Q, n);
            shear.set(i, j, rat_i(lam));
            m = m.mul_mat(&shear).unwrap();
        }
        m
    }
}
