//! The Hessian of a homogeneous form and everything built directly on it:
//! simultaneous Hessians, the differential of the coefficient map, the polar
//! rank test for cones, second polars, and limits of Hessians along pencils.
//!
//! No normalization constants are dropped anywhere: `hessian` returns the raw
//! determinant of the matrix of second partials, and statements that hold "up
//! to a factor" are checked through [`crate::poly::is_proportional`].

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{FieldMatrix, PolyMatrix};
use crate::monomial::{monomials_of_degree, sym_dim, Monomial};
use crate::poly::MultiPoly;

#[derive(Clone, Debug)]
pub struct HessianResult<F: Field> {
    /// Raw determinant of the second-partials matrix, degree `(r+1)(d-2)`.
    pub hessian: MultiPoly<F>,
    pub vanished: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeTest {
    pub is_cone: bool,
    /// Rank of the polar map, i.e. of the matrix of first partials.
    pub polar_rank: usize,
}

/// Matrix of second partial derivatives with respect to the first `nx`
/// variables (further variables act as symbolic parameters).
pub fn hessian_matrix_wrt<F: Field>(f: &MultiPoly<F>, nx: usize) -> Result<PolyMatrix<F>> {
    let partials: Vec<MultiPoly<F>> =
        (0..nx).map(|i| f.partial_derivative(i)).collect::<Result<_>>()?;
    let rows: Vec<Vec<MultiPoly<F>>> = (0..nx)
        .map(|i| (0..nx).map(|j| partials[i].partial_derivative(j)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    PolyMatrix::from_rows(rows)
}

pub fn hessian_matrix<F: Field>(f: &MultiPoly<F>) -> Result<PolyMatrix<F>> {
    hessian_matrix_wrt(f, f.nvars())
}

/// Hessian determinant of a homogeneous form of degree `d >= 2`.
pub fn hessian<F: Field>(f: &MultiPoly<F>) -> Result<HessianResult<F>> {
    let d = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall { degree: d as usize, min: 2 });
    }
    let h = hessian_matrix(f)?.det()?;
    let vanished = h.is_zero();
    if !vanished {
        let expect = (f.nvars() as u32) * (d - 2);
        assert_eq!(h.homogeneous_degree(), Some(expect), "hessian degree invariant");
    }
    Ok(HessianResult { hessian: h, vanished })
}

/// First-order term in `t` of `hess(f + t g)`: the sum over `k` of the Hessian
/// matrix of `f` with row `k` replaced by the corresponding row for `g`.
pub fn simultaneous_hessian<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    let df = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    let dg = g.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    if df != dg {
        return Err(Error::DegreeMismatch { left: df as usize, right: dg as usize });
    }
    simultaneous_hessian_unchecked(f, g)
}

fn simultaneous_hessian_unchecked<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
) -> Result<MultiPoly<F>> {
    let n = f.nvars();
    let mf = hessian_matrix(f)?;
    let mg = hessian_matrix(g)?;
    let mut acc = MultiPoly::zero(f.field().clone(), n);
    for k in 0..n {
        let mut m = mf.clone();
        for j in 0..n {
            m.set(k, j, mg.at(k, j).clone());
        }
        acc = acc.add(&m.det()?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct DifferentialMatrix<F: Field> {
    /// Shape `dim Sym^{(r+1)(d-2)}` rows by `dim Sym^d` columns; the column
    /// for a degree-`d` monomial `m` is the coefficient vector of the
    /// simultaneous Hessian of the base form and `m`.
    pub matrix: FieldMatrix<F>,
    pub base: MultiPoly<F>,
    pub domain_degree: u32,
    pub target_degree: u32,
}

pub fn differential_matrix<F: Field>(f: &MultiPoly<F>) -> Result<DifferentialMatrix<F>> {
    let d = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall { degree: d as usize, min: 2 });
    }
    let n = f.nvars();
    let target_degree = (n as u32) * (d - 2);
    let domain = monomials_of_degree(n, d);
    let columns: Vec<Vec<F::Elem>> = domain
        .par_iter()
        .map(|m| {
            let g = MultiPoly::monomial_term(f.field().clone(), n, m.clone(), f.field().one());
            simultaneous_hessian_unchecked(f, &g)
                .and_then(|h| h.coefficient_vector(target_degree))
        })
        .collect::<Result<_>>()?;
    let rows = sym_dim(n, target_degree);
    let matrix = FieldMatrix::from_fn(f.field().clone(), rows, domain.len(), |i, j| {
        columns[j][i].clone()
    });
    Ok(DifferentialMatrix { matrix, base: f.clone(), domain_degree: d, target_degree })
}

/// Exact rank of the differential of the Hessian coefficient map at `f`.
/// Injectivity certificate: rank equals `dim Sym^d = C(d+r, r)`.
pub fn differential_rank<F: Field>(f: &MultiPoly<F>) -> Result<usize> {
    Ok(differential_matrix(f)?.matrix.rank())
}

/// Polar-map rank test: `f` defines a cone iff its first partials are
/// linearly dependent, i.e. the rank of their coefficient matrix is at most
/// `r` (one less than the variable count).
pub fn cone_test<F: Field>(f: &MultiPoly<F>) -> Result<ConeTest> {
    let d = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    if d < 1 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    let n = f.nvars();
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| f.partial_derivative(i)?.coefficient_vector(d - 1))
        .collect::<Result<_>>()?;
    let m = FieldMatrix::from_rows(f.field().clone(), rows)?;
    let polar_rank = m.rank();
    Ok(ConeTest { is_cone: polar_rank < n, polar_rank })
}

/// Second polar of `f` at the point `u`: `sum_{i,j} u_i u_j f_ij`, a form of
/// degree `d - 2`.
pub fn second_polar<F: Field>(f: &MultiPoly<F>, u: &[F::Elem]) -> Result<MultiPoly<F>> {
    let n = f.nvars();
    if u.len() != n {
        return Err(Error::VarCountMismatch { left: n, right: u.len() });
    }
    let field = f.field().clone();
    if u.iter().all(|c| field.is_zero(c)) {
        return Err(Error::ZeroVector);
    }
    let m = hessian_matrix(f)?;
    let mut acc = MultiPoly::zero(field.clone(), n);
    for i in 0..n {
        for j in 0..n {
            let c = field.mul(&u[i], &u[j]);
            acc = acc.add(&m.at(i, j).scale(&c))?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct PencilLimit<F: Field> {
    /// Least `k` with a nonzero `t^k` coefficient in `hess(alpha + t f)`.
    pub order: u32,
    pub leading: MultiPoly<F>,
}

/// Expands `hess(alpha + t f)` symbolically in the pencil parameter `t` and
/// returns the lowest-order nonzero coefficient, i.e. the limit of the
/// Hessian divisor as `t -> 0`.
pub fn pencil_limit_hessian<F: Field>(
    alpha: &MultiPoly<F>,
    f: &MultiPoly<F>,
) -> Result<PencilLimit<F>> {
    let da = alpha.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    let df = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    if da != df {
        return Err(Error::DegreeMismatch { left: da as usize, right: df as usize });
    }
    let n = alpha.nvars();
    let field = alpha.field().clone();
    // adjoin t as variable index n
    let widen = |p: &MultiPoly<F>, with_t: bool| -> MultiPoly<F> {
        MultiPoly::from_terms(
            field.clone(),
            n + 1,
            p.terms().map(|(m, c)| {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps.push(u16::from(with_t));
                (Monomial::new(exps), c.clone())
            }),
        )
    };
    let pencil = widen(alpha, false).add(&widen(f, true))?;
    let h = hessian_matrix_wrt(&pencil, n)?.det()?;
    if h.is_zero() {
        return Err(Error::PencilHessianZero);
    }
    let t_order = h.terms().map(|(m, _)| m.exp(n)).min().unwrap();
    let leading = MultiPoly::from_terms(
        field,
        n,
        h.terms().filter(|(m, _)| m.exp(n) == t_order).map(|(m, c)| {
            (Monomial::from_slice(&m.exps()[..n]), c.clone())
        }),
    );
    Ok(PencilLimit { order: t_order as u32, leading })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat_i, Q};
    use crate::parse::parse_poly;
    use crate::poly::is_proportional;
    use crate::testutil::{random_cone, random_form, random_unimodular};
    use rand::{Rng, SeedableRng};

    fn p(s: &str, n: usize) -> MultiPoly<Q> {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn hessian_frozen_examples() {
        // 3x3 cofactor oracle gives hess(x0 x1 x2) = 2 x0 x1 x2
        let f = p("x0*x1*x2", 3);
        let h = hessian(&f).unwrap();
        assert!(!h.vanished);
        assert_eq!(h.hessian, p("2*x0*x1*x2", 3));

        // 2x2 determinant 12 x0^2 * 12 x1^2
        let f = p("x0^4 + x1^4", 2);
        assert_eq!(hessian(&f).unwrap().hessian, p("144*x0^2*x1^2", 2));
    }

    #[test]
    fn perazzo_cubic_vanishing_but_not_cone() {
        let f = p("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5);
        let h = hessian(&f).unwrap();
        assert!(h.vanished);
        assert!(h.hessian.is_zero());
        let c = cone_test(&f).unwrap();
        assert!(!c.is_cone);
        assert_eq!(c.polar_rank, 5);
    }

    #[test]
    fn hessian_rejects_bad_input() {
        let f = p("x0^2 + x1", 2);
        assert!(matches!(hessian(&f), Err(Error::NonHomogeneous)));
        let g = p("x0", 2);
        assert!(matches!(hessian(&g), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn cone_detection() {
        let f = p("x0^3 + x1^3", 3);
        let c = cone_test(&f).unwrap();
        assert!(c.is_cone);
        assert_eq!(c.polar_rank, 2);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = random_form(&mut rng, 3, 3);
            let c = cone_test(&f).unwrap();
            // random ternary cubics are essentially never cones
            assert!(!c.is_cone);
            assert_eq!(c.polar_rank, 3);
        }
    }

    #[test]
    fn simultaneous_hessian_identities() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let f = random_form(&mut rng, 3, 3);
            let g = random_form(&mut rng, 3, 3);

            // hess(f, f) = (r+1) hess(f)
            let sh = simultaneous_hessian(&f, &f).unwrap();
            assert_eq!(sh, hessian(&f).unwrap().hessian.scale(&rat_i(3)));

            // equals the degree-1 coefficient in t of hess(f + t g)
            let lim = pencil_limit_hessian(&f, &g).unwrap();
            assert_eq!(lim.order, 0);
            assert_eq!(lim.leading, hessian(&f).unwrap().hessian);
            let sh = simultaneous_hessian(&f, &g).unwrap();
            let t1 = t_coefficient(&f, &g, 1);
            assert_eq!(sh, t1);

            // linear in g
            let g2 = random_form(&mut rng, 3, 3);
            let sum = simultaneous_hessian(&f, &g.add(&g2).unwrap()).unwrap();
            let parts = simultaneous_hessian(&f, &g)
                .unwrap()
                .add(&simultaneous_hessian(&f, &g2).unwrap())
                .unwrap();
            assert_eq!(sum, parts);
        }

        // binary case with g = x0^d: hess(f, g) = d(d-1) x0^{d-2} f_11
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for d in [4u32, 5, 6] {
            let f = random_form(&mut rng, 2, d);
            let g = p(&format!("x0^{d}"), 2);
            let sh = simultaneous_hessian(&f, &g).unwrap();
            let f11 = f.partial_derivative(1).unwrap().partial_derivative(1).unwrap();
            let expect = p(&format!("{}*x0^{}", d * (d - 1), d - 2), 2).mul(&f11).unwrap();
            assert_eq!(sh, expect);
        }
    }

    /// Coefficient of t^k in hess(f + t g), via a full symbolic expansion --
    /// an oracle independent of the row-replacement implementation.
    fn t_coefficient(f: &MultiPoly<Q>, g: &MultiPoly<Q>, k: u16) -> MultiPoly<Q> {
        let n = f.nvars();
        let widen = |p: &MultiPoly<Q>, with_t: bool| {
            MultiPoly::from_terms(
                Q,
                n + 1,
                p.terms().map(|(m, c)| {
                    let mut e = m.exps().to_vec();
                    e.push(u16::from(with_t));
                    (Monomial::new(e), c.clone())
                }),
            )
        };
        let pencil = widen(f, false).add(&widen(g, true)).unwrap();
        let h = hessian_matrix_wrt(&pencil, n).unwrap().det().unwrap();
        MultiPoly::from_terms(
            Q,
            n,
            h.terms().filter(|(m, _)| m.exp(n) == k).map(|(m, c)| {
                (Monomial::from_slice(&m.exps()[..n]), c.clone())
            }),
        )
    }

    #[test]
    fn covariance_under_unimodular_substitution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for (n, d) in [(3usize, 3u32), (3, 4), (4, 3), (5, 3)] {
            let f = random_form(&mut rng, n, d);
            let a = random_unimodular(&mut rng, n);
            let lhs = hessian(&f.linear_substitute(&a).unwrap()).unwrap().hessian;
            let rhs = hessian(&f).unwrap().hessian.linear_substitute(&a).unwrap();
            assert_eq!(lhs, rhs);
        }

        // hess(lambda f) = lambda^{r+1} hess(f)
        let f = random_form(&mut rng, 3, 3);
        let lam = rat_i(7);
        let lhs = hessian(&f.scale(&lam)).unwrap().hessian;
        let rhs = hessian(&f).unwrap().hessian.scale(&rat_i(343));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hesse_theorem_desk_scale() {
        // cones have vanishing hessian; non-cones in at most 4 variables do not
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for trial in 0..200 {
            let n = 2 + trial % 3; // 2..4 variables
            let d = 3 + trial % 2;
            let k = 1 + rng.gen_range(0..n - 1);
            let f = random_cone(&mut rng, n, d as u32, k);
            assert!(hessian(&f).unwrap().vanished, "cone must vanish: {f}");
        }
        for trial in 0..200 {
            let n = 2 + trial % 3;
            let d = 3 + trial % 2;
            let f = random_form(&mut rng, n, d as u32);
            if cone_test(&f).unwrap().is_cone {
                continue; // vanishingly rare; skip rather than assert
            }
            assert!(!hessian(&f).unwrap().vanished, "non-cone must not vanish: {f}");
        }
    }

    #[test]
    fn second_polar_cases() {
        let f = p("x0^5", 2);
        let sp = second_polar(&f, &[rat_i(0), rat_i(1)]).unwrap();
        assert!(sp.is_zero());
        assert!(matches!(
            second_polar(&f, &[rat_i(0), rat_i(0)]),
            Err(Error::ZeroVector)
        ));

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let f = random_form(&mut rng, 2, 5);
        let u = [rat_i(2), rat_i(-3)];
        let sp = second_polar(&f, &u).unwrap();
        let f00 = f.partial_derivative(0).unwrap().partial_derivative(0).unwrap();
        let f01 = f.partial_derivative(0).unwrap().partial_derivative(1).unwrap();
        let f11 = f.partial_derivative(1).unwrap().partial_derivative(1).unwrap();
        let expect = f00
            .scale(&rat_i(4))
            .add(&f01.scale(&rat_i(-12)))
            .unwrap()
            .add(&f11.scale(&rat_i(9)))
            .unwrap();
        assert_eq!(sp, expect);
    }

    #[test]
    fn pencil_limit_binary_is_second_polar() {
        // alpha = (u0 x0 + u1 x1)^d, pencil alpha + t f: the limit is
        // d(d-1) alpha^{d-2} times the second polar of f at (u1, -u0)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for d in [4u32, 5] {
            let f = random_form(&mut rng, 2, d);
            let (u0, u1) = (rat_i(2), rat_i(1));
            let alpha = p("2*x0 + x1", 2).pow(d);
            let lim = pencil_limit_hessian(&alpha, &f).unwrap();
            assert_eq!(lim.order, 1);
            let alph = p("2*x0 + x1", 2);
            let polar = second_polar(&f, &[u1.clone(), -u0.clone()]).unwrap();
            let expect = alph.pow(d - 2).mul(&polar).unwrap().scale(&rat_i((d * (d - 1)) as i64));
            assert_eq!(lim.leading, expect);
        }
    }

    #[test]
    fn pencil_limit_ternary_cone_cases() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        // alpha = x0 x1 (x0 + x1): concurrent lines, a cone point; the limit
        // along alpha + t f is f_22 times a fixed conic. The direct 2x2
        // determinant of the upper block gives x0^2 + x0 x1 + x1^2.
        let alpha = p("x0^2*x1 + x0*x1^2", 3);
        for _ in 0..3 {
            let f = random_form(&mut rng, 3, 3);
            let lim = pencil_limit_hessian(&alpha, &f).unwrap();
            assert_eq!(lim.order, 1);
            let f22 = f.partial_derivative(2).unwrap().partial_derivative(2).unwrap();
            let expect = f22.mul(&p("-4*x0^2 - 4*x0*x1 - 4*x1^2", 3)).unwrap();
            assert_eq!(lim.leading, expect);
        }

        // alpha = x0^3, f = x1^3 + x2^3 + 36 x0 x1 x2: conic plus secant line
        let alpha = p("x0^3", 3);
        let f = p("x1^3 + x2^3 + 36*x0*x1*x2", 3);
        let lim = pencil_limit_hessian(&alpha, &f).unwrap();
        assert_eq!(lim.order, 2);
        let expect = p("x0*x1*x2 - 36*x0^3", 3);
        assert!(is_proportional(&lim.leading, &expect).is_some());

        // identically vanishing pencil hessian is reported, not a crash
        let z = p("x0^3", 3);
        let w = p("x1^3", 3); // x0^3 + t x1^3 is a cone for every t
        assert!(matches!(pencil_limit_hessian(&z, &w), Err(Error::PencilHessianZero)));
    }

    #[test]
    fn differential_matrix_and_rank() {
        // differential at the cone point x0^3 + x1^3 (3 variables): the
        // simultaneous hessian is 36 x0 x1 v_22, so the rank is 3 and the
        // kernel has codimension 3, matching the tangent-space computation
        let f = p("x0^3 + x1^3", 3);
        let dm = differential_matrix(&f).unwrap();
        assert_eq!(dm.matrix.nrows(), 10);
        assert_eq!(dm.matrix.ncols(), 10);
        assert_eq!(dm.matrix.rank(), 3);

        // construction-vs-definition cross-check on a generic cubic
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let g = random_form(&mut rng, 3, 3);
        let dm = differential_matrix(&g).unwrap();
        let basis = monomials_of_degree(3, 3);
        for (j, m) in basis.iter().enumerate() {
            let mono = MultiPoly::monomial_term(Q, 3, m.clone(), rat_i(1));
            let col = simultaneous_hessian(&g, &mono).unwrap().coefficient_vector(3).unwrap();
            for (i, c) in col.iter().enumerate() {
                assert_eq!(dm.matrix.at(i, j), c);
            }
        }
    }

}
