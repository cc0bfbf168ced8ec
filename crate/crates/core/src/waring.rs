//! Forms that are sums of `r+2` powers of linear forms: the closed-form
//! Hessian, recovery of the coefficients from the Hessian, multiplicity
//! profiles along the coordinate subspaces of the configuration, and the
//! closed-form differential with its full-rank certificates.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{rat_i, Q, Rat};
use crate::hessian::{hessian, simultaneous_hessian};
use crate::matrix::{vec_proportional, FieldMatrix};
use crate::monomial::{monomials_of_degree, sym_dim, Monomial};
use crate::poly::{is_proportional, MultiPoly};

/// A form `sum_i c_i l_i^d` built from `r+2` linear forms in `r+1` variables.
#[derive(Clone, Debug)]
pub struct WaringForm {
    r: usize,
    d: usize,
    lin_forms: Vec<Vec<Rat>>,
    coeffs: Vec<Rat>,
}

impl WaringForm {
    pub fn new(r: usize, d: usize, lin_forms: Vec<Vec<Rat>>, coeffs: Vec<Rat>) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidInput("need at least two variables".into()));
        }
        if d < 3 {
            return Err(Error::DegreeTooSmall { degree: d, min: 3 });
        }
        if lin_forms.len() != r + 2 || coeffs.len() != r + 2 {
            return Err(Error::InvalidInput(format!(
                "need {} linear forms and coefficients",
                r + 2
            )));
        }
        for l in &lin_forms {
            if l.len() != r + 1 {
                return Err(Error::InvalidInput(format!("linear forms need {} entries", r + 1)));
            }
            if l.iter().all(Rat::is_zero) {
                return Err(Error::ZeroVector);
            }
        }
        Ok(WaringForm { r, d, lin_forms, coeffs })
    }

    /// The standard configuration `l_i = x_i`, `l_{r+1} = x_0 + ... + x_r`
    /// with all coefficients 1.
    pub fn standard(r: usize, d: usize) -> Result<Self> {
        let mut lin_forms: Vec<Vec<Rat>> = (0..=r)
            .map(|i| (0..=r).map(|j| if i == j { rat_i(1) } else { rat_i(0) }).collect())
            .collect();
        lin_forms.push(vec![rat_i(1); r + 1]);
        Self::new(r, d, lin_forms, vec![rat_i(1); r + 2])
    }

    pub fn with_coeffs(&self, coeffs: Vec<Rat>) -> Result<Self> {
        Self::new(self.r, self.d, self.lin_forms.clone(), coeffs)
    }

    pub fn r(&self) -> usize {
        self.r
    }
    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
    pub fn lin_forms(&self) -> &[Vec<Rat>] {
        &self.lin_forms
    }

    /// Every `r+1`-subset of the linear forms must be linearly independent.
    pub fn general_position(&self) -> bool {
        general_position(&self.lin_forms, self.r)
    }

    pub fn linear_form_poly(&self, i: usize) -> MultiPoly<Q> {
        linear_poly(&self.lin_forms[i])
    }

    /// The form itself, `sum_i c_i l_i^d`.
    pub fn form(&self) -> MultiPoly<Q> {
        let mut acc = MultiPoly::zero(Q, self.r + 1);
        for (l, c) in self.lin_forms.iter().zip(self.coeffs.iter()) {
            acc = acc.add(&linear_poly(l).pow(self.d as u32).scale(c)).unwrap();
        }
        acc
    }
}

fn linear_poly(l: &[Rat]) -> MultiPoly<Q> {
    MultiPoly::from_terms(
        Q,
        l.len(),
        l.iter().enumerate().map(|(j, c)| (Monomial::var(l.len(), j), c.clone())),
    )
}

fn general_position(lin_forms: &[Vec<Rat>], r: usize) -> bool {
    // r+2 subsets of size r+1: drop each form in turn
    (0..lin_forms.len()).all(|skip| {
        let rows: Vec<Vec<Rat>> = lin_forms
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, l)| l.clone())
            .collect();
        FieldMatrix::from_rows(Q, rows).map(|m| m.rank() == r + 1).unwrap_or(false)
    })
}

/// Square of the determinant of all linear forms except the `i`-th.
fn complementary_minor_sq(lin_forms: &[Vec<Rat>], i: usize) -> Result<Rat> {
    let rows: Vec<Vec<Rat>> = lin_forms
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, l)| l.clone())
        .collect();
    let det = FieldMatrix::from_rows(Q, rows)?.det()?;
    Ok(&det * &det)
}

/// The closed-form Hessian `sum_i w_i prod_{j != i} c_j l_j^{d-2}`, where
/// `w_i` is the squared determinant of the complementary forms. When the
/// representatives are scaled so the forms sum to zero all `w_i` coincide
/// and the bare sum of products results; for the standard configuration the
/// weights are already 1.
pub fn closed_form_hessian(w: &WaringForm) -> Result<MultiPoly<Q>> {
    if !w.general_position() {
        return Err(Error::GeneralPositionViolation);
    }
    let n = w.r + 1;
    let mut acc = MultiPoly::zero(Q, n);
    for i in 0..w.lin_forms.len() {
        let mut term = MultiPoly::constant(Q, n, complementary_minor_sq(&w.lin_forms, i)?);
        for j in 0..w.lin_forms.len() {
            if j == i {
                continue;
            }
            term = term.mul(&w.linear_form_poly(j).pow(w.d as u32 - 2).scale(&w.coeffs[j]))?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The scalar `lambda` with `hess(form) = lambda * closed_form_hessian`,
/// which depends only on `(r, d, L)`, never on the coefficients; verified by
/// comparing two deterministic pseudo-random coefficient vectors.
pub fn verify_prop_hessian(w: &WaringForm) -> Result<Rat> {
    let closed = closed_form_hessian(w)?;
    let det = hessian(&w.form())?.hessian;
    let lambda = is_proportional(&det, &closed).ok_or(Error::NotProportional)?;
    // coefficient independence
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x57_4152);
    for _ in 0..2 {
        let c: Vec<Rat> = (0..w.lin_forms.len()).map(|_| rat_i(rng.gen_range(1..20))).collect();
        let w2 = w.with_coeffs(c)?;
        let l2 = is_proportional(&hessian(&w2.form())?.hessian, &closed_form_hessian(&w2)?)
            .ok_or(Error::NotProportional)?;
        if l2 != lambda {
            return Err(Error::NotProportional);
        }
    }
    Ok(lambda)
}

/// `G_i(c) = (1/c_i) prod_j c_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GVector(pub Vec<Rat>);

pub fn g_transform(c: &[Rat]) -> Result<GVector> {
    if c.iter().any(Rat::is_zero) {
        return Err(Error::ZeroEntry);
    }
    let prod: Rat = c.iter().product();
    Ok(GVector(c.iter().map(|ci| &prod / ci).collect()))
}

/// Inverse transform: `(1/G_0, ..., 1/G_{r+1})`, normalized so the first
/// nonzero entry is 1; recovers the coefficients projectively.
pub fn g_inverse(g: &GVector) -> Result<Vec<Rat>> {
    if g.0.iter().any(Rat::is_zero) {
        return Err(Error::ZeroEntry);
    }
    let inv: Vec<Rat> = g.0.iter().map(|x| x.recip()).collect();
    let first = inv[0].clone();
    Ok(inv.iter().map(|x| x / &first).collect())
}

/// Recovers the coefficients of a rank-`r+2` form from its Hessian and the
/// linear forms: solves `H = sum_i G_i prod_{j != i} l_j^{d-2}` exactly and
/// inverts the `G` transform. The result is projective (first entry 1).
pub fn recover_coefficients(
    h: &MultiPoly<Q>,
    lin_forms: &[Vec<Rat>],
    d: usize,
) -> Result<Vec<Rat>> {
    let n = lin_forms[0].len();
    let r = n - 1;
    if lin_forms.len() != r + 2 {
        return Err(Error::InvalidInput(format!("need {} linear forms", r + 2)));
    }
    let target_degree = ((r + 1) * (d - 2)) as u32;
    let products: Vec<MultiPoly<Q>> = (0..lin_forms.len())
        .map(|i| {
            let mut term = MultiPoly::constant(Q, n, rat_i(1));
            for (j, l) in lin_forms.iter().enumerate() {
                if j != i {
                    term = term.mul(&linear_poly(l).pow(d as u32 - 2)).unwrap();
                }
            }
            term
        })
        .collect();
    let columns: Vec<Vec<Rat>> = products
        .iter()
        .map(|p| p.coefficient_vector(target_degree))
        .collect::<Result<_>>()?;
    let rows = sym_dim(n, target_degree);
    let m = FieldMatrix::from_fn(Q, rows, r + 2, |i, j| columns[j][i].clone());
    if m.rank() != r + 2 {
        return Err(Error::GeneralPositionViolation);
    }
    let rhs = h.coefficient_vector(target_degree)?;

    // pick an invertible square subsystem, solve it, then check the full
    // system; a nonzero residue means the Hessian is not in the span
    let mut chosen: Vec<usize> = Vec::new();
    let mut rank_so_far = 0;
    for row in 0..rows {
        if chosen.len() == r + 2 {
            break;
        }
        let mut candidate = chosen.clone();
        candidate.push(row);
        let sub = FieldMatrix::from_fn(Q, candidate.len(), r + 2, |i, j| {
            m.at(candidate[i], j).clone()
        });
        if sub.rank() > rank_so_far {
            rank_so_far = sub.rank();
            chosen = candidate;
        }
    }
    let sub = FieldMatrix::from_fn(Q, chosen.len(), r + 2, |i, j| m.at(chosen[i], j).clone());
    let sub_rhs: Vec<Rat> = chosen.iter().map(|&i| rhs[i].clone()).collect();
    let g = sub.solve(&sub_rhs)?;
    let predicted = m.mul_vec(&g)?;
    if predicted != rhs {
        let mut residual = h.clone();
        for (gi, p) in g.iter().zip(products.iter()) {
            residual = residual.sub(&p.scale(gi))?;
        }
        return Err(Error::NotInSpan { residual: residual.to_string() });
    }
    // strip the per-product minor weights before inverting the G transform
    let unweighted: Vec<Rat> = g
        .iter()
        .enumerate()
        .map(|(i, gi)| Ok(gi / complementary_minor_sq(lin_forms, i)?))
        .collect::<Result<_>>()?;
    g_inverse(&GVector(unweighted))
}

#[derive(Clone, Debug)]
pub struct MultiplicityProfile {
    pub expected_pair: u32,
    pub expected_triple: u32,
    pub pairs: Vec<(usize, usize, u32)>,
    pub triples: Vec<(usize, usize, usize, u32)>,
}

impl MultiplicityProfile {
    pub fn all_match(&self) -> bool {
        self.pairs.iter().all(|&(_, _, o)| o == self.expected_pair)
            && self.triples.iter().all(|&(_, _, _, o)| o == self.expected_triple)
    }
}

/// Orders of vanishing of the Hessian along all codimension-2 subspaces
/// `l_i = l_j = 0` (expected `d-2`) and, for `r >= 3`, along the
/// codimension-3 subspaces `l_i = l_j = l_k = 0` (expected `2(d-2)`),
/// computed after an exact change of coordinates putting the chosen forms
/// first. In the plane (`r = 2`) the triple subspaces are empty, so the
/// triple list is too.
pub fn multiplicity_profile(w: &WaringForm) -> Result<MultiplicityProfile> {
    if !w.general_position() {
        return Err(Error::GeneralPositionViolation);
    }
    let h = hessian(&w.form())?.hessian;
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = w.r + 1;
    let order_along = |subset: &[usize]| -> Result<u32> {
        let mut rows: Vec<Vec<Rat>> = subset.iter().map(|&i| w.lin_forms[i].clone()).collect();
        for e in 0..n {
            if rows.len() == n {
                break;
            }
            let mut unit = vec![rat_i(0); n];
            unit[e] = rat_i(1);
            let mut candidate = rows.clone();
            candidate.push(unit);
            if FieldMatrix::from_rows(Q, candidate.clone())?.rank() == candidate.len() {
                rows = candidate;
            }
        }
        let m = FieldMatrix::from_rows(Q, rows)?;
        let transformed = h.linear_substitute(&m.inverse()?)?;
        transformed.order_along_subspace(&(0..subset.len()).collect::<Vec<_>>())
    };
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for i in 0..(w.r + 2) {
        for j in (i + 1)..(w.r + 2) {
            pairs.push((i, j, order_along(&[i, j])?));
            if w.r < 3 {
                continue;
            }
            for k in (j + 1)..(w.r + 2) {
                triples.push((i, j, k, order_along(&[i, j, k])?));
            }
        }
    }
    Ok(MultiplicityProfile {
        expected_pair: w.d as u32 - 2,
        expected_triple: 2 * (w.d as u32 - 2),
        pairs,
        triples,
    })
}

/// Closed form of the differential of the Hessian coefficient map at the
/// standard configuration with unit coefficients:
/// `dH(g) = sum_i [prod_{j <= r, j != i} l_j^{d-2}] d_i^2 g
///        + sum_{i < j <= r} [prod_{k <= r+1, k not in {i,j}} l_k^{d-2}] (d_i - d_j)^2 g`.
pub fn dh_closed_form(g: &MultiPoly<Q>, r: usize, d: usize) -> Result<MultiPoly<Q>> {
    if g.nvars() != r + 1 {
        return Err(Error::VarCountMismatch { left: g.nvars(), right: r + 1 });
    }
    if !g.is_zero() && g.homogeneous_degree() != Some(d as u32) {
        return Err(Error::NonHomogeneous);
    }
    let w = WaringForm::standard(r, d)?;
    let n = r + 1;
    let power = |i: usize| w.linear_form_poly(i).pow(d as u32 - 2);
    let mut acc = MultiPoly::zero(Q, n);
    for i in 0..=r {
        let mut prod = MultiPoly::constant(Q, n, rat_i(1));
        for j in 0..=r {
            if j != i {
                prod = prod.mul(&power(j))?;
            }
        }
        let gii = g.partial_derivative(i)?.partial_derivative(i)?;
        acc = acc.add(&prod.mul(&gii)?)?;
    }
    for i in 0..=r {
        for j in (i + 1)..=r {
            let mut prod = MultiPoly::constant(Q, n, rat_i(1));
            for k in 0..=(r + 1) {
                if k != i && k != j {
                    prod = prod.mul(&power(k))?;
                }
            }
            let gi = g.partial_derivative(i)?;
            let gj = g.partial_derivative(j)?;
            let second = gi
                .partial_derivative(i)?
                .sub(&gi.partial_derivative(j)?.scale(&rat_i(2)))?
                .add(&gj.partial_derivative(j)?)?;
            acc = acc.add(&prod.mul(&second)?)?;
        }
    }
    Ok(acc)
}

/// Rank of the closed-form differential at the standard rank-`r+2` form,
/// paired with the full dimension `C(d+r, r)`; equality certifies that the
/// differential is injective there.
pub fn injectivity_certificate(r: usize, d: usize) -> Result<(usize, usize)> {
    let n = r + 1;
    let target = (n * (d - 2)) as u32;
    let basis = monomials_of_degree(n, d as u32);
    let columns: Vec<Vec<Rat>> = basis
        .par_iter()
        .map(|m| {
            let g = MultiPoly::monomial_term(Q, n, m.clone(), rat_i(1));
            dh_closed_form(&g, r, d).and_then(|h| h.coefficient_vector(target))
        })
        .collect::<Result<_>>()?;
    let rows = sym_dim(n, target);
    let m = FieldMatrix::from_fn(Q, rows, basis.len(), |i, j| columns[j][i].clone());
    Ok((m.rank(), basis.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use rand::{Rng, SeedableRng};

    fn random_coeffs(rng: &mut rand_chacha::ChaCha8Rng, len: usize) -> Vec<Rat> {
        (0..len).map(|_| rat_i(rng.gen_range(1..15))).collect()
    }

    #[test]
    fn standard_closed_form_r2_d3() {
        let w = WaringForm::standard(2, 3).unwrap();
        assert!(w.general_position());
        let closed = closed_form_hessian(&w).unwrap();
        let l3 = parse_poly("x0 + x1 + x2", 3).unwrap();
        let expect = parse_poly("x1*x2", 3)
            .unwrap()
            .mul(&l3)
            .unwrap()
            .add(&parse_poly("x0*x2", 3).unwrap().mul(&l3).unwrap())
            .unwrap()
            .add(&parse_poly("x0*x1", 3).unwrap().mul(&l3).unwrap())
            .unwrap()
            .add(&parse_poly("x0*x1*x2", 3).unwrap())
            .unwrap();
        assert_eq!(closed, expect);

        // the determinant Hessian is lambda times the closed form, with
        // lambda = (d(d-1))^{r+1} for the standard configuration
        let lambda = verify_prop_hessian(&w).unwrap();
        assert_eq!(lambda, rat_i(216));
    }

    #[test]
    fn lambda_depends_only_on_configuration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
        for (r, d) in [(2usize, 3usize), (2, 4), (3, 3)] {
            let base = WaringForm::standard(r, d).unwrap();
            let lambda = verify_prop_hessian(&base).unwrap();
            assert_eq!(lambda, rat_i((d * (d - 1)) as i64).pow((r + 1) as i32));
            for _ in 0..10 {
                let w = base.with_coeffs(random_coeffs(&mut rng, r + 2)).unwrap();
                let det = hessian(&w.form()).unwrap().hessian;
                let closed = closed_form_hessian(&w).unwrap();
                assert_eq!(is_proportional(&det, &closed), Some(lambda.clone()));
            }
        }
    }

    #[test]
    fn degenerate_last_coefficient() {
        // c_{r+1} = 0: the closed form collapses to the coordinate product,
        // independently of the other coefficients
        let w = WaringForm::standard(2, 4)
            .unwrap()
            .with_coeffs(vec![rat_i(2), rat_i(5), rat_i(7), rat_i(0)])
            .unwrap();
        let closed = closed_form_hessian(&w).unwrap();
        let expect = parse_poly("x0^2*x1^2*x2^2", 3).unwrap();
        assert!(is_proportional(&closed, &expect).is_some());
        let det = hessian(&w.form()).unwrap().hessian;
        assert!(is_proportional(&det, &expect).is_some());
    }

    #[test]
    fn g_round_trips() {
        let c = vec![rat_i(1), rat_i(2), rat_i(3), rat_i(6)];
        let g = g_transform(&c).unwrap();
        assert_eq!(g.0, vec![rat_i(36), rat_i(18), rat_i(12), rat_i(6)]);
        let back = g_inverse(&g).unwrap();
        assert_eq!(back, vec![rat_i(1), rat_i(2), rat_i(3), rat_i(6)]);

        let all_ones = g_transform(&vec![rat_i(5); 5]).unwrap();
        assert!(all_ones.0.iter().all(|x| x == &all_ones.0[0]));

        assert!(matches!(g_transform(&[rat_i(1), rat_i(0)]), Err(Error::ZeroEntry)));

        // rank-1 criterion: G(b) proportional to G(c) iff b proportional to c
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(107);
        for _ in 0..20 {
            let b = random_coeffs(&mut rng, 5);
            let c = random_coeffs(&mut rng, 5);
            let gb = g_transform(&b).unwrap();
            let gc = g_transform(&c).unwrap();
            let prop_g = vec_proportional(&Q, &gb.0, &gc.0).is_some();
            let prop_c = vec_proportional(&Q, &b, &c).is_some();
            assert_eq!(prop_g, prop_c);
        }
    }

    #[test]
    fn recovery_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(109);
        for (r, d) in [(2usize, 3usize), (2, 4), (3, 3)] {
            let base = WaringForm::standard(r, d).unwrap();
            for _ in 0..5 {
                let c = random_coeffs(&mut rng, r + 2);
                let w = base.with_coeffs(c.clone()).unwrap();
                let h = hessian(&w.form()).unwrap().hessian;
                let rec = recover_coefficients(&h, w.lin_forms(), d).unwrap();
                assert!(vec_proportional(&Q, &rec, &c).is_some(), "r={r} d={d}");
            }
        }

        // random general-position configurations, not just the standard one
        for _ in 0..5 {
            let lin_forms: Vec<Vec<Rat>> = loop {
                let cand: Vec<Vec<Rat>> = (0..4)
                    .map(|_| (0..3).map(|_| rat_i(rng.gen_range(-4..5))).collect())
                    .collect();
                if general_position(&cand, 2) {
                    break cand;
                }
            };
            let c = random_coeffs(&mut rng, 4);
            let w = WaringForm::new(2, 3, lin_forms.clone(), c.clone()).unwrap();
            let h = hessian(&w.form()).unwrap().hessian;
            let rec = recover_coefficients(&h, &lin_forms, 3).unwrap();
            assert!(vec_proportional(&Q, &rec, &c).is_some());
        }
    }

    #[test]
    fn recovery_rejects_off_span_input() {
        let w = WaringForm::standard(2, 3).unwrap();
        let h = hessian(&w.form()).unwrap().hessian;
        let spoiled = h.add(&parse_poly("x0^3", 3).unwrap()).unwrap();
        match recover_coefficients(&spoiled, w.lin_forms(), 3) {
            Err(Error::NotInSpan { residual }) => assert!(!residual.is_empty()),
            other => panic!("expected NotInSpan, got {other:?}"),
        }

        // a repeated form makes two of the products coincide: dependent
        let bad_forms = vec![
            vec![rat_i(1), rat_i(0), rat_i(0)],
            vec![rat_i(1), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(1)],
        ];
        assert!(matches!(
            recover_coefficients(&h, &bad_forms, 3),
            Err(Error::GeneralPositionViolation)
        ));
    }

    #[test]
    fn multiplicity_profiles() {
        // in the plane the codimension-3 subspaces are empty: pairs only
        let w = WaringForm::standard(2, 3).unwrap();
        let prof = multiplicity_profile(&w).unwrap();
        assert_eq!(prof.expected_pair, 1);
        assert!(prof.all_match());
        assert_eq!(prof.pairs.len(), 6);
        assert!(prof.triples.is_empty());

        let w = WaringForm::standard(3, 4).unwrap();
        let prof = multiplicity_profile(&w).unwrap();
        assert_eq!(prof.expected_pair, 2);
        assert_eq!(prof.expected_triple, 4);
        assert!(prof.all_match());
        assert_eq!(prof.pairs.len(), 10);
        assert_eq!(prof.triples.len(), 10);

        let w = WaringForm::standard(3, 3).unwrap();
        let prof = multiplicity_profile(&w).unwrap();
        assert_eq!(prof.expected_pair, 1);
        assert_eq!(prof.expected_triple, 2);
        assert!(prof.all_match());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(113);
        let w = WaringForm::standard(2, 5)
            .unwrap()
            .with_coeffs(random_coeffs(&mut rng, 4))
            .unwrap();
        let prof = multiplicity_profile(&w).unwrap();
        assert_eq!(prof.expected_pair, 3);
        assert!(prof.all_match());
    }

    #[test]
    fn order_along_aligned_subspace_matches() {
        // hess of the standard (r=2, d=3) form along {x0 = x1 = 0}
        let w = WaringForm::standard(2, 3).unwrap();
        let h = hessian(&w.form()).unwrap().hessian;
        assert_eq!(h.order_along_subspace(&[0, 1]).unwrap(), 1);
    }

    #[test]
    fn dh_closed_form_matches_simultaneous_hessian() {
        for (r, d) in [(2usize, 3usize), (2, 4), (3, 3)] {
            let w = WaringForm::standard(r, d).unwrap();
            let f = w.form();
            let lambda = verify_prop_hessian(&w).unwrap();
            let dd = rat_i((d * (d - 1)) as i64);
            let mu = &lambda / &dd; // simhess = (d(d-1))^r dh
            let basis = monomials_of_degree(r + 1, d as u32);
            for m in &basis {
                let g = MultiPoly::monomial_term(Q, r + 1, m.clone(), rat_i(1));
                let sh = simultaneous_hessian(&f, &g).unwrap();
                let dh = dh_closed_form(&g, r, d).unwrap();
                assert_eq!(sh, dh.scale(&mu), "r={r} d={d} m={g}");
            }
        }
    }

    #[test]
    fn dh_on_pure_powers() {
        // dH(x_q^d) carries exactly the products that skip q, each with the
        // second-derivative factor d(d-1) x_q^{d-2}
        let (r, d) = (2usize, 3usize);
        let g = parse_poly("x1^3", 3).unwrap();
        let dh = dh_closed_form(&g, r, d).unwrap();
        let w = WaringForm::standard(r, d).unwrap();
        let p = |i: usize| w.linear_form_poly(i).pow(d as u32 - 2);
        // i = 1 diagonal term: prod_{j != 1, j <= 2} = x0 x2; cross terms
        // (0,1) and (1,2) contribute prod skipping those pairs
        let expect = p(0)
            .mul(&p(2))
            .unwrap()
            .add(&p(2).mul(&p(3)).unwrap())
            .unwrap()
            .add(&p(0).mul(&p(3)).unwrap())
            .unwrap()
            .mul(&parse_poly("6*x1", 3).unwrap())
            .unwrap();
        assert_eq!(dh, expect);
    }

    #[test]
    fn injectivity_small_grid() {
        assert_eq!(injectivity_certificate(2, 3).unwrap(), (10, 10));
        assert_eq!(injectivity_certificate(2, 4).unwrap(), (15, 15));
    }
}
