//! Binary forms in the `a`-coordinate convention
//! `f = sum_i a_i C(d,i) x0^{d-i} x1^i`: the Hankel cone test, the closed-form
//! coefficients `Q_p` of the Hessian and their Jacobian, chord and tangent
//! images, the complete degree-4 apparatus (Hankel minors, the quadric in P^5,
//! the invariants i and j, syzygetic series), fiber eliminations, and quadric
//! dimension counts.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{binom, rat_i, Field, Q, Rat};
use crate::hessian::hessian;
use crate::matrix::{vec_proportional, FieldMatrix, PolyMatrix};
use crate::monomial::Monomial;
use crate::poly::{gcd_binary_form, is_proportional, MultiPoly};
use crate::projparam::ProjParam;

fn rb(n: num_bigint::BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Coefficient vector `(a_0, ..., a_d)` of a binary degree-`d` form with the
/// binomial convention `f = sum a_i C(d,i) x0^{d-i} x1^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryACoords {
    d: usize,
    a: Vec<Rat>,
}

impl BinaryACoords {
    pub fn new(d: usize, a: Vec<Rat>) -> Result<Self> {
        if a.len() != d + 1 {
            return Err(Error::InvalidInput(format!(
                "degree {d} needs {} coefficients, got {}",
                d + 1,
                a.len()
            )));
        }
        Ok(BinaryACoords { d, a })
    }

    pub fn from_i64(d: usize, a: &[i64]) -> Result<Self> {
        Self::new(d, a.iter().map(|&x| rat_i(x)).collect())
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Rat::is_zero)
    }

    pub fn to_poly(&self) -> MultiPoly<Q> {
        MultiPoly::from_terms(
            Q,
            2,
            self.a.iter().enumerate().map(|(i, c)| {
                let m = Monomial::new([(self.d - i) as u16, i as u16]);
                (m, c * rb(binom(self.d as i64, i as i64)))
            }),
        )
    }

    /// Inverse of [`Self::to_poly`]; exact bijection with the `a`-coordinates.
    pub fn from_poly(f: &MultiPoly<Q>) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::VarCountMismatch { left: f.nvars(), right: 2 });
        }
        let d = f.homogeneous_degree().ok_or(Error::NonHomogeneous)? as usize;
        let a = (0..=d)
            .map(|i| {
                let m = Monomial::new([(d - i) as u16, i as u16]);
                f.coefficient(&m) / rb(binom(d as i64, i as i64))
            })
            .collect();
        Ok(BinaryACoords { d, a })
    }

    /// The 2 x d matrix of shifted coefficient windows; its rank is 1 exactly
    /// on the locus of d-th powers of linear forms.
    pub fn hankel_matrix(&self) -> FieldMatrix<Q> {
        FieldMatrix::from_fn(Q, 2, self.d, |i, j| self.a[i + j].clone())
    }

    pub fn is_cone_point(&self) -> bool {
        self.hankel_matrix().rank() < 2
    }

    /// Closed-form Hessian coefficients: `hess(f) = d^2 (d-1)^2 *
    /// sum_p Q_p x0^{2d-4-p} x1^p`, exactly.
    pub fn qp_coefficients(&self) -> Result<Vec<Rat>> {
        if self.d < 3 {
            return Err(Error::DegreeTooSmall { degree: self.d, min: 3 });
        }
        let d = self.d as i64;
        let get = |i: i64| -> Rat {
            if i < 0 || i > d {
                Rat::zero()
            } else {
                self.a[i as usize].clone()
            }
        };
        Ok((0..=(2 * d - 4))
            .map(|p| {
                let mut acc = Rat::zero();
                for i in 0..=p {
                    let c = rb(binom(d - 2, i) * binom(d - 2, p - i));
                    if c.is_zero() {
                        continue;
                    }
                    acc += c * (get(i) * get(p - i + 2) - get(i + 1) * get(p - i + 1));
                }
                acc
            })
            .collect())
    }
}

/// The `Q_p` as symbolic quadrics in the variables `a_0, ..., a_d`.
pub fn qp_symbolic(d: usize) -> Result<Vec<MultiPoly<Q>>> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    let n = d + 1;
    let di = d as i64;
    let pair = |i: i64, j: i64| -> Option<Monomial> {
        if i < 0 || j < 0 || i > di || j > di {
            return None;
        }
        let mut exps = vec![0u16; n];
        exps[i as usize] += 1;
        exps[j as usize] += 1;
        Some(Monomial::new(exps))
    };
    Ok((0..=(2 * di - 4))
        .map(|p| {
            let mut q = MultiPoly::zero(Q, n);
            for i in 0..=p {
                let c = rb(binom(di - 2, i) * binom(di - 2, p - i));
                if c.is_zero() {
                    continue;
                }
                if let Some(m) = pair(i, p - i + 2) {
                    q = q.add(&MultiPoly::monomial_term(Q, n, m, c.clone())).unwrap();
                }
                if let Some(m) = pair(i + 1, p - i + 1) {
                    q = q.add(&MultiPoly::monomial_term(Q, n, m, -c)).unwrap();
                }
            }
            q
        })
        .collect())
}

/// Closed-form entry `(p, q)` of the Jacobian of the `Q` map:
/// `[C(d-2,q)C(d-2,p-q) + C(d-2,q-2)C(d-2,p-q+2) - 2C(d-2,q-1)C(d-2,p-q+1)] * a_{p-q+2}`.
pub fn jacobian_entry(p: usize, q: usize, d: usize, a: &BinaryACoords) -> Result<Rat> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    if p > 2 * d - 4 {
        return Err(Error::IndexOutOfRange { index: p, bound: 2 * d - 3 });
    }
    if q > d {
        return Err(Error::IndexOutOfRange { index: q, bound: d + 1 });
    }
    let (di, pi, qi) = (d as i64, p as i64, q as i64);
    let idx = pi - qi + 2;
    if idx < 0 || idx > di {
        return Ok(Rat::zero());
    }
    let bracket = binom(di - 2, qi) * binom(di - 2, pi - qi)
        + binom(di - 2, qi - 2) * binom(di - 2, pi - qi + 2)
        - 2 * binom(di - 2, qi - 1) * binom(di - 2, pi - qi + 1);
    Ok(rb(bracket) * &a.a[idx as usize])
}

pub fn jacobian_matrix(a: &BinaryACoords) -> Result<FieldMatrix<Q>> {
    let d = a.d;
    let rows: Vec<Vec<Rat>> = (0..=(2 * d - 4))
        .map(|p| (0..=d).map(|q| jacobian_entry(p, q, d, a)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    FieldMatrix::from_rows(Q, rows)
}

/// The linear form vanishing at the point `[u : v]` of the line: `v x0 - u x1`.
pub fn linear_form_at(x: &ProjParam) -> MultiPoly<Q> {
    MultiPoly::from_terms(
        Q,
        2,
        [
            (Monomial::new([1, 0]), x.v().clone()),
            (Monomial::new([0, 1]), -x.u().clone()),
        ],
    )
}

/// Image of the whole chord through `dx` and `dy`: the divisor
/// `(d-2)(x + y)` with equation `(alpha beta)^{d-2}`, normalized.
pub fn chord_image(x: &ProjParam, y: &ProjParam, d: usize) -> Result<MultiPoly<Q>> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    let alpha = linear_form_at(x);
    let beta = linear_form_at(y);
    Ok(alpha.mul(&beta)?.pow(d as u32 - 2).projective_normalize())
}

/// Image of the tangent line at `dx`: `alpha^{2(d-2)}`, normalized.
pub fn tangent_image(x: &ProjParam, d: usize) -> Result<MultiPoly<Q>> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    Ok(linear_form_at(x).pow(2 * (d as u32 - 2)).projective_normalize())
}

// ---------------------------------------------------------------------------
// special fibers of the coefficient map
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct FiberElimination {
    pub d: usize,
    /// The form whose fiber is verified, printed.
    pub base_point: String,
    pub unique: bool,
    /// Human-readable replay of the elimination, one entry per certified step.
    pub trace: Vec<String>,
}

/// Substitutes `a_i = 0` for `i` in `zeros` into a symbolic quadric.
fn kill_vars(q: &MultiPoly<Q>, zeros: &[usize]) -> MultiPoly<Q> {
    MultiPoly::from_terms(
        Q,
        q.nvars(),
        q.terms().filter_map(|(m, c)| {
            if zeros.iter().any(|&z| m.exp(z) > 0) {
                None
            } else {
                Some((m.clone(), c.clone()))
            }
        }),
    )
}

/// The two variable indices of a quadratic monomial in the `a`-ring.
fn quad_indices(m: &Monomial) -> (usize, usize) {
    let mut found = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            found.push(i);
        }
    }
    assert_eq!(found.len(), 2, "Q_p terms are quadratic");
    (found[0], found[1])
}

/// Asserts `poly == c * a_k^2` with `c != 0` and returns `c`.
fn expect_square(poly: &MultiPoly<Q>, k: usize) -> Result<Rat> {
    let mut expect = vec![0u16; poly.nvars()];
    expect[k] = 2;
    let m = Monomial::new(expect);
    let c = poly.coefficient(&m);
    let rebuilt = MultiPoly::monomial_term(Q, poly.nvars(), m, c.clone());
    if c.is_zero() || &rebuilt != poly {
        return Err(Error::InvalidInput(format!(
            "elimination step expected a multiple of a{k}^2, found {poly}"
        )));
    }
    Ok(c)
}

/// Asserts `poly == c * a_i a_j` with `c != 0` and returns `c`.
fn expect_product(poly: &MultiPoly<Q>, i: usize, j: usize) -> Result<Rat> {
    let mut expect = vec![0u16; poly.nvars()];
    expect[i] += 1;
    expect[j] += 1;
    let m = Monomial::new(expect);
    let c = poly.coefficient(&m);
    let rebuilt = MultiPoly::monomial_term(Q, poly.nvars(), m, c.clone());
    if c.is_zero() || &rebuilt != poly {
        return Err(Error::InvalidInput(format!(
            "elimination step expected a multiple of a{i}*a{j}, found {poly}"
        )));
    }
    Ok(c)
}

/// Branch with `a_0 = 1`: the equations `Q_0 = ... = Q_{d-2} = 0` determine
/// `a_2, ..., a_d` uniquely as polynomials in `t = a_1`, and the solution is
/// `a_i = t^i`, a point of the rational normal curve where the map is
/// undefined. Every step is certified symbolically over `Q[t]`.
fn branch_a0_nonzero(d: usize, qps: &[MultiPoly<Q>], excluded: usize, trace: &mut Vec<String>) -> Result<()> {
    let t = MultiPoly::var(Q, 1, 0)?;
    let one = MultiPoly::constant(Q, 1, rat_i(1));
    let mut subst: Vec<MultiPoly<Q>> = vec![one, t.clone()];
    for p in 0..=(d - 2) {
        assert_ne!(p, excluded, "elimination may not use the free coefficient");
        let unknown = p + 2;
        let mut lin = MultiPoly::zero(Q, 1);
        let mut rest = MultiPoly::zero(Q, 1);
        for (m, c) in qps[p].terms() {
            let (i, j) = quad_indices(m);
            let hi = i.max(j);
            let lo = i.min(j);
            if hi < unknown {
                rest = rest.add(&subst[lo].mul(&subst[hi])?.scale(c))?;
            } else if hi == unknown && lo < unknown {
                lin = lin.add(&subst[lo].scale(c))?;
            } else {
                return Err(Error::InvalidInput(format!(
                    "Q_{p} involves a{hi}, beyond the next unknown a{unknown}"
                )));
            }
        }
        // the coefficient of the unknown must be the nonzero constant C(d-2, p)
        let expect = rb(binom(d as i64 - 2, p as i64));
        if lin != MultiPoly::constant(Q, 1, expect.clone()) || expect.is_zero() {
            return Err(Error::InvalidInput(format!(
                "Q_{p} is not linear in a{unknown} with constant coefficient"
            )));
        }
        let solved = rest.neg().scale(&expect.recip());
        subst.push(solved);
    }
    for (i, s) in subst.iter().enumerate() {
        let ti = t.pow(i as u32);
        if *s != ti {
            return Err(Error::InvalidInput(format!(
                "branch a0=1 solved a{i} = {s}, expected t^{i}"
            )));
        }
    }
    // certify the solution lies on the curve of powers: every Q_p vanishes there
    for (p, qp) in qps.iter().enumerate() {
        let on_curve = qp.compose(&subst.iter().map(|s| widen_to(s, 1)).collect::<Vec<_>>())?;
        assert!(on_curve.is_zero(), "Q_{p} must vanish on the power curve");
    }
    trace.push(format!(
        "a0 = 1: Q_0..Q_{} force a_i = t^i (t = a_1), a point of the rational \
         normal curve, where the map is undefined; no fiber point here",
        d - 2
    ));
    Ok(())
}

fn widen_to(p: &MultiPoly<Q>, nvars: usize) -> MultiPoly<Q> {
    MultiPoly::from_terms(
        Q,
        nvars,
        p.terms().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e.resize(nvars, 0);
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Certified zero-cascade step: `Q_p`, with the variables in `zeros` set to
/// zero, must reduce to `c * a_k^2`; concludes `a_k = 0`.
fn cascade_square(
    qps: &[MultiPoly<Q>],
    p: usize,
    zeros: &mut Vec<usize>,
    k: usize,
    excluded: usize,
    trace: &mut Vec<String>,
) -> Result<()> {
    assert_ne!(p, excluded);
    let reduced = kill_vars(&qps[p], zeros);
    let c = expect_square(&reduced, k)?;
    trace.push(format!(
        "Q_{p} = {c}*a{k}^2 once a_i = 0 for i in {zeros:?}; forces a{k} = 0"
    ));
    zeros.push(k);
    Ok(())
}

/// Fiber uniqueness of the Hessian coefficient map at `x0^2 x1^{d-2}` for
/// `d >= 5, d != 8`, and at `x0^3 x1^5` for `d = 8`, by replaying the exact
/// coefficient elimination. Each step is verified symbolically; the returned
/// trace records the chain of conclusions.
pub fn special_fiber_verify(d: usize) -> Result<FiberElimination> {
    if d <= 4 {
        // h_{3,1} has one-dimensional fibers and h_{4,1} has degree 2
        return Err(Error::DegreeTooSmall { degree: d, min: 5 });
    }
    let qps = qp_symbolic(d)?;
    let mut trace = Vec::new();
    if d != 8 {
        let excluded = 2 * d - 6;
        trace.push(format!(
            "fiber over hess(x0^2*x1^{}) is cut by Q_p = 0 for p != {excluded}",
            d - 2
        ));
        branch_a0_nonzero(d, &qps, excluded, &mut trace)?;

        let mut zeros = vec![0];
        trace.push("a0 = 0 branch:".to_string());
        cascade_square(&qps, 0, &mut zeros, 1, excluded, &mut trace)?;
        for k in 1..=(d - 4) {
            cascade_square(&qps, 2 * k, &mut zeros, k + 1, excluded, &mut trace)?;
        }
        // zeros is now {0, 1, ..., d-3}; the last two equations finish it
        let q_odd = kill_vars(&qps[2 * d - 5], &zeros);
        let c = expect_product(&q_odd, d - 2, d - 1)?;
        trace.push(format!(
            "Q_{} = {c}*a{}*a{}; forces a{} = 0 or a{} = 0",
            2 * d - 5,
            d - 2,
            d - 1,
            d - 2,
            d - 1
        ));
        // case a_{d-2} = 0
        {
            let mut z = zeros.clone();
            z.push(d - 2);
            let q_last = kill_vars(&qps[2 * d - 4], &z);
            let c = expect_square(&q_last, d - 1)?;
            trace.push(format!(
                "case a{} = 0: Q_{} = {c}*a{}^2 forces a{} = 0, leaving x1^{d}: \
                 a power of a linear form, where the map is undefined",
                d - 2,
                2 * d - 4,
                d - 1,
                d - 1
            ));
        }
        // case a_{d-1} = 0, a_{d-2} != 0
        {
            let mut z = zeros.clone();
            z.push(d - 1);
            let q_last = kill_vars(&qps[2 * d - 4], &z);
            let c = expect_product(&q_last, d - 2, d)?;
            trace.push(format!(
                "case a{} = 0, a{} != 0: Q_{} = {c}*a{}*a{} forces a{} = 0, \
                 leaving exactly x0^2*x1^{}",
                d - 1,
                d - 2,
                2 * d - 4,
                d - 2,
                d,
                d,
                d - 2
            ));
        }
        Ok(FiberElimination {
            d,
            base_point: format!("x0^2*x1^{}", d - 2),
            unique: true,
            trace,
        })
    } else {
        // d = 8, base point x0^3 x1^5, image proportional to x0^4 x1^8 (p = 8)
        let excluded = 8;
        trace.push("fiber over hess(x0^3*x1^5) is cut by Q_p = 0 for p != 8".to_string());
        branch_a0_nonzero(d, &qps, excluded, &mut trace)?;

        let mut zeros = vec![0];
        trace.push("a0 = 0 branch:".to_string());
        cascade_square(&qps, 0, &mut zeros, 1, excluded, &mut trace)?;
        for k in 1..=3 {
            cascade_square(&qps, 2 * k, &mut zeros, k + 1, excluded, &mut trace)?;
        }
        // zeros = {0..4}; Q_8 is excluded, so work with Q_9..Q_12
        let q9 = kill_vars(&qps[9], &zeros);
        let c = expect_product(&q9, 5, 6)?;
        trace.push(format!("Q_9 = {c}*a5*a6; forces a5 = 0 or a6 = 0"));
        // case a5 = 0
        {
            let mut z = zeros.clone();
            z.push(5);
            let c6 = expect_square(&kill_vars(&qps[10], &z), 6)?;
            z.push(6);
            let c7 = expect_square(&kill_vars(&qps[12], &z), 7)?;
            trace.push(format!(
                "case a5 = 0: Q_10 = {c6}*a6^2 and Q_12 = {c7}*a7^2 force a6 = a7 = 0, \
                 leaving x1^8: a power of a linear form, where the map is undefined"
            ));
        }
        // case a6 = 0, a5 != 0
        {
            let mut z = zeros.clone();
            z.push(6);
            let c7 = expect_product(&kill_vars(&qps[10], &z), 5, 7)?;
            z.push(7);
            let c8 = expect_product(&kill_vars(&qps[11], &z), 5, 8)?;
            trace.push(format!(
                "case a6 = 0, a5 != 0: Q_10 = {c7}*a5*a7 forces a7 = 0, then \
                 Q_11 = {c8}*a5*a8 forces a8 = 0, leaving exactly x0^3*x1^5"
            ));
        }
        Ok(FiberElimination { d, base_point: "x0^3*x1^5".to_string(), unique: true, trace })
    }
}

// ---------------------------------------------------------------------------
// the degree-4 apparatus
// ---------------------------------------------------------------------------

/// The six 2x2 minors of the 2x4 Hankel matrix of a binary quartic, ordered
/// `(Q12, Q13, Q14, Q23, Q24, Q34)` by column pairs.
pub fn quartic_qij(a: &BinaryACoords) -> Result<[Rat; 6]> {
    require_quartic(a)?;
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let h = a.hankel_matrix();
    let minor = |i: usize, j: usize| -> Rat { h.at(0, i) * h.at(1, j) - h.at(0, j) * h.at(1, i) };
    Ok([minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)])
}

fn require_quartic(a: &BinaryACoords) -> Result<()> {
    if a.d != 4 {
        return Err(Error::InvalidInput(format!("degree 4 required, got {}", a.d)));
    }
    Ok(())
}

/// The quadro-Veronese map to P^5 given by the Hankel minors, coordinates
/// `x_ij` in lexicographic order.
pub fn mu_map(a: &BinaryACoords) -> Result<[Rat; 6]> {
    quartic_qij(a)
}

/// Checks the displayed expansion `hess(f) = 144 * (Q12 x0^4 + 2 Q13 x0^3 x1 +
/// (Q14 + 3 Q23) x0^2 x1^2 + 2 Q24 x0 x1^3 + Q34 x1^4)` exactly.
pub fn quartic_hessian_identity(a: &BinaryACoords) -> Result<bool> {
    require_quartic(a)?;
    let q = quartic_qij(a)?;
    let coeffs = [
        q[0].clone(),
        rat_i(2) * &q[1],
        &q[2] + rat_i(3) * &q[3],
        rat_i(2) * &q[4],
        q[5].clone(),
    ];
    let expansion = MultiPoly::from_terms(
        Q,
        2,
        coeffs.iter().enumerate().map(|(p, c)| {
            (Monomial::new([(4 - p) as u16, p as u16]), c * rat_i(144))
        }),
    );
    Ok(hessian(&a.to_poly())?.hessian == expansion)
}

/// Image quartic of the Hessian map in `a`-coordinates (exact, including the
/// global constant 144).
pub fn h41_image(a: &BinaryACoords) -> Result<BinaryACoords> {
    require_quartic(a)?;
    BinaryACoords::from_poly(&hessian(&a.to_poly())?.hessian)
}

#[derive(Clone, Debug)]
pub struct QuarticInvariants {
    /// `i = a0 a4 - 4 a1 a3 + 3 a2^2`.
    pub i: Rat,
    /// `j = det` of the 3x3 Hankel matrix.
    pub j: Rat,
    /// The J-invariant as `[3^6 4^3 j^2 : i^3]`, value `i^3 / (3^6 4^3 j^2)`;
    /// `[0:1]` (infinity) is harmonic, `[1:0]` (zero) is anharmonic.
    pub j_invariant: ProjParam,
}

pub fn quartic_invariants(a: &BinaryACoords) -> Result<QuarticInvariants> {
    require_quartic(a)?;
    let v = &a.a;
    let i = &v[0] * &v[4] - rat_i(4) * &v[1] * &v[3] + rat_i(3) * &v[2] * &v[2];
    let j = FieldMatrix::from_rows(
        Q,
        vec![
            vec![v[0].clone(), v[1].clone(), v[2].clone()],
            vec![v[1].clone(), v[2].clone(), v[3].clone()],
            vec![v[2].clone(), v[3].clone(), v[4].clone()],
        ],
    )?
    .det()?;
    let scale = rat_i(3).pow(6) * rat_i(4).pow(3);
    let j_invariant = ProjParam::new(scale * &j * &j, i.pow(3))?;
    Ok(QuarticInvariants { i, j, j_invariant })
}

/// The five polar identities `dj/da_0 = Q34, dj/da_1 = -2 Q24,
/// dj/da_2 = Q14 + 3 Q23, dj/da_3 = -2 Q13, dj/da_4 = Q12`, as exact
/// polynomial identities in the symbolic `a`-ring.
pub fn quartic_polar_identities() -> Result<bool> {
    let (j, q) = symbolic_j_and_minors()?;
    let grad: Vec<MultiPoly<Q>> = (0..5).map(|i| j.partial_derivative(i)).collect::<Result<_>>()?;
    let expect = [
        q[5].clone(),
        q[4].scale(&rat_i(-2)),
        q[2].add(&q[3].scale(&rat_i(3)))?,
        q[1].scale(&rat_i(-2)),
        q[0].clone(),
    ];
    Ok(grad.iter().zip(expect.iter()).all(|(g, e)| g == e))
}

/// Symbolic `j` (3x3 Hankel determinant) and the six symbolic minors, all in
/// the 5-variable ring of `a`-coordinates.
pub fn symbolic_j_and_minors() -> Result<(MultiPoly<Q>, [MultiPoly<Q>; 6])> {
    let a: Vec<MultiPoly<Q>> = (0..5).map(|i| MultiPoly::var(Q, 5, i)).collect::<Result<_>>()?;
    let j = PolyMatrix::from_rows(vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone()],
        vec![a[1].clone(), a[2].clone(), a[3].clone()],
        vec![a[2].clone(), a[3].clone(), a[4].clone()],
    ])?
    .det()?;
    let minor = |i: usize, jj: usize| -> Result<MultiPoly<Q>> {
        a[i].mul(&a[jj + 1])?.sub(&a[jj].mul(&a[i + 1])?)
    };
    let q = [
        minor(0, 1)?,
        minor(0, 2)?,
        minor(0, 3)?,
        minor(1, 2)?,
        minor(1, 3)?,
        minor(2, 3)?,
    ];
    Ok((j, q))
}

/// The linear change of coordinates on P^5 taking the Hankel quadric to the
/// quadric `Q'`: `y12 = x34, y34 = x12, y13 = -2 x24, y24 = -2 x13,
/// y14 = x14 + 3 x23, y23 = x14 - 3 x23` (coordinates ordered
/// `12, 13, 14, 23, 24, 34`).
pub fn omega_point(x: &[Rat; 6]) -> [Rat; 6] {
    [
        x[5].clone(),
        rat_i(-2) * &x[4],
        &x[2] + rat_i(3) * &x[3],
        &x[2] - rat_i(3) * &x[3],
        rat_i(-2) * &x[1],
        x[0].clone(),
    ]
}

/// `omega . mu` followed by the projection from `p = [0,0,0,1,0,0]` onto
/// `y23 = 0`: drops the fourth coordinate. Undefined exactly on the cone
/// locus, where every Hankel minor vanishes.
pub fn omega_and_projection(a: &BinaryACoords) -> Result<[Rat; 5]> {
    let m = mu_map(a)?;
    if m.iter().all(Rat::is_zero) {
        return Err(Error::ZeroVector);
    }
    let y = omega_point(&m);
    Ok([y[0].clone(), y[1].clone(), y[2].clone(), y[4].clone(), y[5].clone()])
}

/// Identifies the projection target with the space of quartics: the pairing
/// that sends the projected point `(y12, y13, y14, y24, y34)` to the quartic
/// with `a`-coordinates `(y34, -y24/4, y14/6, -y13/4, y12)`.
pub fn projection_to_quartic(y: &[Rat; 5]) -> BinaryACoords {
    BinaryACoords {
        d: 4,
        a: vec![
            y[4].clone(),
            -&y[3] / rat_i(4),
            &y[2] / rat_i(6),
            -&y[1] / rat_i(4),
            y[0].clone(),
        ],
    }
}

/// Evaluates the quadric `Q': 12 y12 y34 - 3 y13 y24 + y14^2 - y23^2`.
pub fn q_prime(y: &[Rat; 6]) -> Rat {
    rat_i(12) * &y[0] * &y[5] - rat_i(3) * &y[1] * &y[4] + &y[2] * &y[2] - &y[3] * &y[3]
}

#[derive(Clone, Debug)]
pub struct H41Structure {
    pub samples: usize,
    pub composite_matches_hessian: bool,
    pub mu_image_on_hankel_quadric: bool,
    pub omega_image_is_q_prime: bool,
    pub projection_center_off_q_prime: bool,
    pub polar_identities: bool,
    pub hess_j_is_j_times_branch_quadric: bool,
    pub branch_quadric_merges_fibers: bool,
}

impl H41Structure {
    pub fn all_pass(&self) -> bool {
        self.composite_matches_hessian
            && self.mu_image_on_hankel_quadric
            && self.omega_image_is_q_prime
            && self.projection_center_off_q_prime
            && self.polar_identities
            && self.hess_j_is_j_times_branch_quadric
            && self.branch_quadric_merges_fibers
    }
}

/// Degree-2 structure of the quartic Hessian map: checks, symbolically and on
/// random samples, that the map factors as `projection . omega . mu`, that
/// the `mu` image lies on the Hankel quadric, that `omega` carries it to `Q'`
/// missing the projection center, the five polar identities, and that the
/// branch quadric `i = 0` is where fibers merge.
pub fn h41_structure_check(samples: usize, seed: u64) -> Result<H41Structure> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    // symbolic layer, in the 5-variable a-ring and the 6-variable x_ij-ring
    let (j_sym, q_sym) = symbolic_j_and_minors()?;
    // Hankel quadric relation x12 x34 - x13 x24 + x14 x23 = 0 on the minors
    let hankel_rel = q_sym[0]
        .mul(&q_sym[5])?
        .sub(&q_sym[1].mul(&q_sym[4])?)?
        .add(&q_sym[2].mul(&q_sym[3])?)?;
    let mu_image_on_hankel_quadric = hankel_rel.is_zero();

    // Q'(omega(x)) = 12 (x12 x34 - x13 x24 + x14 x23) identically
    let x: Vec<MultiPoly<Q>> = (0..6).map(|i| MultiPoly::var(Q, 6, i)).collect::<Result<_>>()?;
    let y = [
        x[5].clone(),
        x[4].scale(&rat_i(-2)),
        x[2].add(&x[3].scale(&rat_i(3)))?,
        x[2].sub(&x[3].scale(&rat_i(3)))?,
        x[1].scale(&rat_i(-2)),
        x[0].clone(),
    ];
    let qp_of_omega = y[0]
        .mul(&y[5])?
        .scale(&rat_i(12))
        .sub(&y[1].mul(&y[4])?.scale(&rat_i(3)))?
        .add(&y[2].mul(&y[2])?)?
        .sub(&y[3].mul(&y[3])?)?;
    let hankel_sym = x[0]
        .mul(&x[5])?
        .sub(&x[1].mul(&x[4])?)?
        .add(&x[2].mul(&x[3])?)?;
    let omega_image_is_q_prime = qp_of_omega == hankel_sym.scale(&rat_i(12));

    let center = [rat_i(0), rat_i(0), rat_i(0), rat_i(1), rat_i(0), rat_i(0)];
    let projection_center_off_q_prime = !q_prime(&center).is_zero();

    let polar_identities = quartic_polar_identities()?;

    // hess(j) = c * j * i: the branch quadric divides out of the Hessian of j
    let hess_j = hessian(&j_sym)?.hessian;
    let a: Vec<MultiPoly<Q>> = (0..5).map(|i| MultiPoly::var(Q, 5, i)).collect::<Result<_>>()?;
    let i_sym = a[0]
        .mul(&a[4])?
        .sub(&a[1].mul(&a[3])?.scale(&rat_i(4)))?
        .add(&a[2].mul(&a[2])?.scale(&rat_i(3)))?;
    let hess_j_is_j_times_branch_quadric =
        is_proportional(&hess_j, &j_sym.mul(&i_sym)?).is_some();

    // random-sample layer
    let mut composite_matches_hessian = true;
    let mut branch_quadric_merges_fibers = true;
    let mut done = 0;
    while done < samples {
        let a = BinaryACoords::from_i64(
            4,
            &(0..5).map(|_| rng.gen_range(-9..10)).collect::<Vec<_>>(),
        )?;
        if a.is_cone_point() {
            continue;
        }
        done += 1;
        let composite = projection_to_quartic(&omega_and_projection(&a)?);
        let image = h41_image(&a)?;
        if vec_proportional(&Q, &composite.a, &image.a).is_none() {
            composite_matches_hessian = false;
        }
        // full-rank differential away from the branch quadric
        let inv = quartic_invariants(&a)?;
        let jac = jacobian_matrix(&a)?;
        if !inv.i.is_zero() && jac.rank() != 5 {
            branch_quadric_merges_fibers = false;
        }
    }
    // on the branch quadric i = 0 the differential drops rank and the image
    // lands on the branch quadric again
    let mut on_branch = 0;
    while on_branch < samples.min(25) {
        let (a1, a2, a3) = (rng.gen_range(-6..7), rng.gen_range(-6..7), rng.gen_range(-6..7));
        // solve i = a0 a4 - 4 a1 a3 + 3 a2^2 = 0 with a0 = 1
        let a4 = rat_i(4) * rat_i(a1) * rat_i(a3) - rat_i(3) * rat_i(a2) * rat_i(a2);
        let a = BinaryACoords::new(4, vec![rat_i(1), rat_i(a1), rat_i(a2), rat_i(a3), a4])?;
        if a.is_cone_point() {
            continue;
        }
        on_branch += 1;
        debug_assert!(quartic_invariants(&a)?.i.is_zero());
        if jacobian_matrix(&a)?.rank() > 4 {
            branch_quadric_merges_fibers = false;
        }
        let image = h41_image(&a)?;
        if !quartic_invariants(&image)?.i.is_zero() {
            branch_quadric_merges_fibers = false;
        }
    }

    Ok(H41Structure {
        samples,
        composite_matches_hessian,
        mu_image_on_hankel_quadric,
        omega_image_is_q_prime,
        projection_center_off_q_prime,
        polar_identities,
        hess_j_is_j_times_branch_quadric,
        branch_quadric_merges_fibers,
    })
}

// ---------------------------------------------------------------------------
// syzygetic series
// ---------------------------------------------------------------------------

/// Member of the syzygetic series: `mu x0^4 + 6 lambda x0^2 x1^2 + mu x1^4`.
pub fn syzygetic_member(t: &ProjParam) -> MultiPoly<Q> {
    let (lam, mu) = (t.u().clone(), t.v().clone());
    MultiPoly::from_terms(
        Q,
        2,
        [
            (Monomial::new([4, 0]), mu.clone()),
            (Monomial::new([2, 2]), rat_i(6) * &lam),
            (Monomial::new([0, 4]), mu),
        ],
    )
}

/// Hessian action on the syzygetic series: `[lambda, mu] -> [mu^2 - 3 lambda^2, 6 lambda mu]`.
pub fn syzygetic_map(t: &ProjParam) -> ProjParam {
    let (lam, mu) = (t.u(), t.v());
    ProjParam::new(mu * mu - rat_i(3) * lam * lam, rat_i(6) * lam * mu)
        .expect("image never [0:0] off the base locus")
}

/// J-invariant along the syzygetic series:
/// `J = (3 lambda^2 + mu^2)^3 / (3^6 4^3 lambda^2 (mu^2 - lambda^2)^2)`.
pub fn syzygetic_j_invariant(t: &ProjParam) -> Result<ProjParam> {
    let (lam, mu) = (t.u(), t.v());
    let num = (rat_i(3) * lam * lam + mu * mu).pow(3);
    let den = rat_i(3).pow(6) * rat_i(4).pow(3) * lam * lam * (mu * mu - lam * lam).pow(2);
    ProjParam::new(den, num)
}

/// The three fixed points `mu = 0` and `mu = +-3 lambda`: the bi-double points
/// of the series.
pub fn syzygetic_fixed_points() -> Vec<ProjParam> {
    vec![ProjParam::from_i64(1, 0), ProjParam::from_i64(1, 3), ProjParam::from_i64(1, -3)]
}

// ---------------------------------------------------------------------------
// dimension counts for quadrics through the power curve
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricDims {
    pub through_curve: usize,
    pub through_tangent: usize,
    pub difference: usize,
}

/// Dimensions of the spaces of quadrics on P^d vanishing on the curve of
/// d-th powers and on its tangent surface, by exact interpolation at more
/// than `2d` parameter values, which certifies identical vanishing.
pub fn quadric_space_dims(d: usize) -> Result<QuadricDims> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    let n = d + 1;
    let basis: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let nsamples = 2 * d + 2;
    let ts: Vec<Rat> = sample_parameters(nsamples);

    let point_row = |a: &[Rat]| -> Vec<Rat> {
        basis.iter().map(|&(i, j)| &a[i] * &a[j]).collect()
    };
    let polar_row = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        basis
            .iter()
            .map(|&(i, j)| if i == j { rat_i(2) * &a[i] * &b[i] } else { &a[i] * &b[j] + &a[j] * &b[i] })
            .collect()
    };

    let mut curve_rows = Vec::new();
    let mut tangent_rows = Vec::new();
    for t in &ts {
        let a: Vec<Rat> = (0..n).map(|i| t.pow(i as i32)).collect();
        let da: Vec<Rat> = (0..n)
            .map(|i| if i == 0 { Rat::zero() } else { rat_i(i as i64) * t.pow(i as i32 - 1) })
            .collect();
        curve_rows.push(point_row(&a));
        tangent_rows.push(point_row(&a));
        tangent_rows.push(polar_row(&a, &da));
        tangent_rows.push(point_row(&da));
    }
    let through_curve = FieldMatrix::from_rows(Q, curve_rows)?.kernel().len();
    let through_tangent = FieldMatrix::from_rows(Q, tangent_rows)?.kernel().len();
    Ok(QuadricDims { through_curve, through_tangent, difference: through_curve - through_tangent })
}

fn sample_parameters(count: usize) -> Vec<Rat> {
    let mut ts = vec![Rat::zero()];
    let mut k = 1i64;
    while ts.len() < count {
        ts.push(rat_i(k));
        if ts.len() < count {
            ts.push(rat_i(-k));
        }
        k += 1;
    }
    ts
}

/// Squarefree test for the Hessian of a binary form, with explicit handling
/// of `x0`/`x1` power factors before taking the affine gcd.
pub fn hessian_squarefree(a: &BinaryACoords) -> Result<bool> {
    let h = hessian(&a.to_poly())?.hessian;
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    binary_squarefree(&h)
}

/// Squarefree test for any nonzero binary homogeneous form.
pub fn binary_squarefree<F: Field>(h: &MultiPoly<F>) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.nvars() != 2 {
        return Err(Error::VarCountMismatch { left: h.nvars(), right: 2 });
    }
    let b0 = h.order_along_subspace(&[0])?;
    let b1 = h.order_along_subspace(&[1])?;
    if b0 >= 2 || b1 >= 2 {
        return Ok(false);
    }
    let field = h.field().clone();
    let mono = Monomial::new([b0 as u16, b1 as u16]);
    let stripped = h
        .div_exact(&MultiPoly::monomial_term(field.clone(), 2, mono, field.one()))
        .expect("stripping tracked powers is exact");
    if stripped.total_degree() == Some(0) {
        return Ok(true);
    }
    let d0 = stripped.partial_derivative(0)?;
    let g = if d0.is_zero() {
        let d1 = stripped.partial_derivative(1)?;
        if d1.is_zero() {
            // both partials vanish only in small characteristic, for a p-th power
            return Ok(false);
        }
        gcd_binary_form(&stripped, &d1)?
    } else {
        gcd_binary_form(&stripped, &d0)?
    };
    Ok(g.total_degree() == Some(0))
}
