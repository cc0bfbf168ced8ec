//! Plane cubics: Hesse pencil dynamics, Hessians of singular cubics, the
//! degree-4 Aronhold invariant recovered by interpolation against random
//! determinant-1 substitutions, the polar (Aronhold) map, and tangent-space
//! computations on the locus of vanishing Hessians.
//!
//! Cube roots of unity are never constructed: every statement involving them
//! is recast as an exact divisibility or proportionality of binary forms over
//! the rationals.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::field::{rat_i, Q, Rat};
use crate::hessian::{differential_rank, hessian, hessian_matrix_wrt};
use crate::matrix::FieldMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{is_proportional, projectively_equal_vectors, MultiPoly};
use crate::projparam::ProjParam;

// ---------------------------------------------------------------------------
// Hesse pencil
// ---------------------------------------------------------------------------

/// Member of the Hesse pencil at `[u:v]` (so `t = v/u`):
/// `u (x0^3 + x1^3 + x2^3) - 3 v x0 x1 x2`.
pub fn hesse_member(t: &ProjParam) -> MultiPoly<Q> {
    let cubes = [(Monomial::new([3, 0, 0]), t.u().clone()),
        (Monomial::new([0, 3, 0]), t.u().clone()),
        (Monomial::new([0, 0, 3]), t.u().clone()),
        (Monomial::new([1, 1, 1]), rat_i(-3) * t.v())];
    MultiPoly::from_terms(Q, 3, cubes)
}

/// The pencil member with the parameter left symbolic: a polynomial in
/// `(x0, x1, x2, u, v)`, linear in `(u, v)`.
pub fn hesse_member_symbolic() -> MultiPoly<Q> {
    MultiPoly::from_terms(
        Q,
        5,
        [
            (Monomial::new([3, 0, 0, 1, 0]), rat_i(1)),
            (Monomial::new([0, 3, 0, 1, 0]), rat_i(1)),
            (Monomial::new([0, 0, 3, 1, 0]), rat_i(1)),
            (Monomial::new([1, 1, 1, 0, 1]), rat_i(-3)),
        ],
    )
}

/// Hessian action on the pencil parameter: `[u:v] -> [3uv^2 : 4u^3 - v^3]`,
/// the projective form of `s = (4 - t^3) / (3 t^2)`.
pub fn pencil_hessian_param(t: &ProjParam) -> ProjParam {
    let (u, v) = (t.u(), t.v());
    ProjParam::new(rat_i(3) * u * v * v, rat_i(4) * u * u * u - v * v * v)
        .expect("never [0:0]")
        .normalize()
}

/// The two components of the parameter map as binary forms in `(u, v)`.
fn pencil_map_components() -> (MultiPoly<Q>, MultiPoly<Q>) {
    let big_u = MultiPoly::from_terms(Q, 2, [(Monomial::new([1, 2]), rat_i(3))]);
    let big_v = MultiPoly::from_terms(
        Q,
        2,
        [(Monomial::new([3, 0]), rat_i(4)), (Monomial::new([0, 3]), rat_i(-1))],
    );
    (big_u, big_v)
}

/// Exact identity `hess(member(t)) = lambda * member(s(t))` over the rational
/// function field in `t`, by clearing denominators: both sides live in
/// `(x0, x1, x2, u, v)`. Returns the constant `lambda`.
pub fn pencil_hessian_identity() -> Result<Rat> {
    let member = hesse_member_symbolic();
    let h = hessian_matrix_wrt(&member, 3)?.det()?;
    // member at [3uv^2 : 4u^3 - v^3], coefficients in the 5-variable ring
    let u3v2 = MultiPoly::from_terms(Q, 5, [(Monomial::new([0, 0, 0, 1, 2]), rat_i(3))]);
    let v_img = MultiPoly::from_terms(
        Q,
        5,
        [
            (Monomial::new([0, 0, 0, 3, 0]), rat_i(4)),
            (Monomial::new([0, 0, 0, 0, 3]), rat_i(-1)),
        ],
    );
    let cube = |i: usize| -> MultiPoly<Q> {
        let mut e = [0u16; 5];
        e[i] = 3;
        MultiPoly::from_terms(Q, 5, [(Monomial::new(e), rat_i(1))])
    };
    let xyz = MultiPoly::from_terms(Q, 5, [(Monomial::new([1, 1, 1, 0, 0]), rat_i(1))]);
    let image = cube(0)
        .add(&cube(1))?
        .add(&cube(2))?
        .mul(&u3v2)?
        .add(&xyz.scale(&rat_i(-3)).mul(&v_img)?)?;
    is_proportional(&h, &image).ok_or(Error::NotProportional)
}

/// Fixed points of the parameter map, as the binary form
/// `v U(u,v) - u V(u,v)`, proportional to `4u(u^3 - v^3)`.
pub fn pencil_fixed_point_form() -> MultiPoly<Q> {
    let (big_u, big_v) = pencil_map_components();
    let u = MultiPoly::var(Q, 2, 0).unwrap();
    let v = MultiPoly::var(Q, 2, 1).unwrap();
    v.mul(&big_u).unwrap().sub(&u.mul(&big_v).unwrap()).unwrap()
}

/// Preimage divisor of the parameter `s = [sigma : tau]` under the pencil map:
/// the binary cubic `tau U(u,v) - sigma V(u,v)`.
pub fn trilateral_preimages(s: &ProjParam) -> MultiPoly<Q> {
    let (big_u, big_v) = pencil_map_components();
    big_u.scale(s.v()).sub(&big_v.scale(s.u())).unwrap()
}

/// Fixed points of the squared parameter map factor as
/// `u (u^3 - v^3) (v^6 - 20 u^3 v^3 - 8 u^6)` up to a scalar: the four
/// self-Hessian members and the six members that are Hessians of their
/// Hessians.
pub fn harmonic_sextic_identity() -> bool {
    let (big_u, big_v) = pencil_map_components();
    let u2 = big_u.compose(&[big_u.clone(), big_v.clone()]).unwrap();
    let v2 = big_v.compose(&[big_u.clone(), big_v.clone()]).unwrap();
    let u = MultiPoly::var(Q, 2, 0).unwrap();
    let v = MultiPoly::var(Q, 2, 1).unwrap();
    let fixed = v.mul(&u2).unwrap().sub(&u.mul(&v2).unwrap()).unwrap();
    let cubic = u.pow(3).sub(&v.pow(3)).unwrap();
    let sextic = MultiPoly::from_terms(
        Q,
        2,
        [
            (Monomial::new([0, 6]), rat_i(1)),
            (Monomial::new([3, 3]), rat_i(-20)),
            (Monomial::new([6, 0]), rat_i(-8)),
        ],
    );
    let expect = u.mul(&cubic).unwrap().mul(&sextic).unwrap();
    is_proportional(&fixed, &expect).is_some()
}

/// `Some(lambda)` with `hess(hess(f)) = lambda f` when the double Hessian is
/// proportional to `f`; `None` otherwise (including a vanishing first
/// Hessian).
pub fn double_hessian_check(f: &MultiPoly<Q>) -> Result<Option<Rat>> {
    let h = hessian(f)?;
    if h.vanished {
        return Ok(None);
    }
    let hh = hessian(&h.hessian)?;
    if hh.vanished {
        return Ok(None);
    }
    Ok(is_proportional(&hh.hessian, f))
}

// ---------------------------------------------------------------------------
// Hessians of singular cubics
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ClassificationCase {
    pub name: &'static str,
    pub input: String,
    pub hessian: String,
    pub verified: bool,
    pub note: String,
}

/// Multiplicity of a ternary form at `[0,0,1]` and its tangent cone there
/// (a binary form in `x0, x1`).
fn mult_and_cone_at_e2(f: &MultiPoly<Q>) -> (u32, MultiPoly<Q>) {
    let mult = f.order_along_subspace(&[0, 1]).expect("nonzero");
    let cone = MultiPoly::from_terms(
        Q,
        2,
        f.terms().filter(|(m, _)| m.exp(0) as u32 + m.exp(1) as u32 == mult).map(
            |(m, c)| (Monomial::new([m.exp(0), m.exp(1)]), c.clone()),
        ),
    );
    (mult, cone)
}

/// Canonical-form checks for the Hessians of singular plane cubics: nodal,
/// cuspidal, conic plus chord, conic plus tangent, and trilateral.
pub fn singular_hessian_classification_suite() -> Result<Vec<ClassificationCase>> {
    let p = |s: &str| crate::parse::parse_poly(s, 3).unwrap();
    let mut out = Vec::new();

    // nodal: same node, same tangent cone x1^2 - x0^2
    {
        let f = p("x1^2*x2 - x0^3 - x0^2*x2");
        let h = hessian(&f)?.hessian;
        let (mf, cf) = mult_and_cone_at_e2(&f);
        let (mh, ch) = mult_and_cone_at_e2(&h);
        let expect_cone = crate::parse::parse_poly("x1^2 - x0^2", 2).unwrap();
        let verified = mf == 2
            && mh == 2
            && is_proportional(&cf, &expect_cone).is_some()
            && is_proportional(&ch, &expect_cone).is_some();
        out.push(ClassificationCase {
            name: "nodal",
            input: f.to_string(),
            hessian: h.to_string(),
            verified,
            note: "hessian has the same node with the same tangent cone".into(),
        });
    }

    // cuspidal: hess = 24 x0 x1^2, the cuspidal tangent doubled plus the
    // line joining the cusp to the flex
    {
        let f = p("x1^2*x2 - x0^3");
        let h = hessian(&f)?.hessian;
        let verified = h == p("24*x0*x1^2");
        out.push(ClassificationCase {
            name: "cuspidal",
            input: f.to_string(),
            hessian: h.to_string(),
            verified,
            note: "cuspidal tangent with multiplicity 2 plus the cusp-flex line".into(),
        });
    }

    // conic plus a non-tangent line: hess = line * (conic tangent to the
    // original conic at the two points where the line meets it)
    {
        let f = p("x0*x1*x2 - x2^3");
        let h = hessian(&f)?.hessian;
        let line = p("x2");
        let conic = h.div_exact(&line.scale(&h.coefficient(&Monomial::new([1, 1, 1]))));
        let verified = match conic {
            None => false,
            Some(c) => {
                let orig = p("x0*x1 - x2^2");
                // meets of the line with the original conic
                let pts = [[rat_i(1), rat_i(0), rat_i(0)], [rat_i(0), rat_i(1), rat_i(0)]];
                pts.iter().all(|pt| {
                    let on_both = c.eval(pt).unwrap().is_zero() && orig.eval(pt).unwrap().is_zero();
                    let grad_c: Vec<Rat> =
                        (0..3).map(|i| c.partial_derivative(i).unwrap().eval(pt).unwrap()).collect();
                    let grad_o: Vec<Rat> =
                        (0..3).map(|i| orig.partial_derivative(i).unwrap().eval(pt).unwrap()).collect();
                    let parallel = (0..3).all(|i| {
                        (0..3).all(|j| &grad_c[i] * &grad_o[j] == &grad_c[j] * &grad_o[i])
                    });
                    on_both && parallel
                })
            }
        };
        out.push(ClassificationCase {
            name: "conic plus chord",
            input: f.to_string(),
            hessian: h.to_string(),
            verified,
            note: "line plus a conic tangent to the original at the two meeting points".into(),
        });
    }

    // conic plus a tangent line: the line with multiplicity 3
    {
        let f = p("x0*x1^2 - x0^2*x2");
        let h = hessian(&f)?.hessian;
        let verified = is_proportional(&h, &p("x0^3")).is_some();
        out.push(ClassificationCase {
            name: "conic plus tangent",
            input: f.to_string(),
            hessian: h.to_string(),
            verified,
            note: "the tangent line counted with multiplicity 3".into(),
        });
    }

    // trilateral: self-Hessian
    {
        let f = p("x0*x1*x2");
        let h = hessian(&f)?.hessian;
        let verified = h == p("2*x0*x1*x2");
        out.push(ClassificationCase {
            name: "trilateral",
            input: f.to_string(),
            hessian: h.to_string(),
            verified,
            note: "the same trilateral".into(),
        });
    }

    Ok(out)
}

// ---------------------------------------------------------------------------
// invariants by interpolation
// ---------------------------------------------------------------------------

/// A polynomial in the 10 coefficients of a ternary cubic (lexicographic
/// coefficient order), invariant under determinant-1 substitutions.
#[derive(Clone, Debug)]
pub struct TernaryInvariant {
    pub degree: usize,
    pub poly: MultiPoly<Q>,
}

#[derive(Clone, Debug)]
pub struct Interpolation {
    pub basis: Vec<TernaryInvariant>,
    pub dimension: usize,
    pub seed: u64,
    pub witnesses: usize,
}

/// Coefficient vector of a ternary cubic in the canonical (lexicographic)
/// order.
pub fn cubic_coefficients(g: &MultiPoly<Q>) -> Result<Vec<Rat>> {
    if g.nvars() != 3 {
        return Err(Error::VarCountMismatch { left: g.nvars(), right: 3 });
    }
    g.coefficient_vector(3)
}

/// The 10x10 action of the substitution `x -> A x` on cubic coefficients.
fn cubic_coeff_action(a: &FieldMatrix<Q>) -> Result<FieldMatrix<Q>> {
    let basis = monomials_of_degree(3, 3);
    let mut cols = Vec::with_capacity(10);
    for m in &basis {
        let g = MultiPoly::monomial_term(Q, 3, m.clone(), rat_i(1));
        cols.push(g.linear_substitute(a)?.coefficient_vector(3)?);
    }
    Ok(FieldMatrix::from_fn(Q, 10, 10, |i, j| cols[j][i].clone()))
}

fn pack_exps(e: &[u16]) -> u64 {
    e.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | ((x as u64) << (3 * i)))
}

/// Expands `prod_alpha (L_alpha)^{m_alpha}` over `i64`, where `L_alpha` is the
/// `alpha`-th row of the coefficient action (a linear form in the 10
/// coefficient variables).
fn expand_monomial(linforms: &[[i64; 10]; 10], m: &Monomial) -> HashMap<u64, i64> {
    let mut acc: HashMap<u64, i64> = HashMap::new();
    acc.insert(0, 1);
    for (alpha, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            let mut next: HashMap<u64, i64> = HashMap::with_capacity(acc.len() * 4);
            for (&key, &coeff) in &acc {
                for (j, &lj) in linforms[alpha].iter().enumerate() {
                    if lj == 0 {
                        continue;
                    }
                    let nk = key + (1u64 << (3 * j));
                    *next.entry(nk).or_insert(0) += coeff * lj;
                }
            }
            next.retain(|_, v| *v != 0);
            acc = next;
        }
    }
    acc
}

const ROW_SELECT_PRIME: u64 = 2_147_483_647;

/// Interpolates the space of degree-`k` polynomials in the 10 cubic
/// coefficients invariant under determinant-1 substitutions, from seeded
/// random witnesses: two random diagonal matrices `diag(p, q, 1/(pq))` with
/// distinct primes (their conditions kill every non-isobaric monomial
/// exactly) and four random integer shear products. The expected dimension is
/// 1 for `k = 4` (the degree-4 invariant) and 1 for `k = 6`.
pub fn invariant_interpolation(k: usize, seed: u64) -> Result<Interpolation> {
    if k != 4 && k != 6 {
        return Err(Error::InvalidInput("interpolation degree must be 4 or 6".into()));
    }
    let expected = 1;
    let mut last_err = None;
    for attempt in 0..3 {
        let s = seed.wrapping_add(attempt);
        match interpolate_once(k, s) {
            Ok(res) if res.dimension == expected => return Ok(res),
            Ok(res) => {
                last_err = Some(Error::InterpolationDimension {
                    expected,
                    found: res.dimension,
                })
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap())
}

fn interpolate_once(k: usize, seed: u64) -> Result<Interpolation> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let cubic_basis = monomials_of_degree(3, 3);
    let space = monomials_of_degree(10, k as u32);

    // diagonal witnesses diag(p, q, 1/(pq)): the condition from each is that
    // every monomial scales by p^(W0-W2) q^(W1-W2) = 1, where W_i is the
    // total weight of x_i in the monomial
    let primes = [2i64, 3, 5, 7, 11, 13];
    let mut survivors: Vec<usize> = (0..space.len()).collect();
    let mut witnesses = 0;
    for _ in 0..2 {
        let p = primes[rng.gen_range(0..primes.len())];
        let mut q = primes[rng.gen_range(0..primes.len())];
        while q == p {
            q = primes[rng.gen_range(0..primes.len())];
        }
        let (pp, qq) = (Rat::from_integer(p.into()), Rat::from_integer(q.into()));
        survivors.retain(|&idx| {
            let m = &space[idx];
            let mut w = [0i64; 3];
            for (alpha, &e) in m.exps().iter().enumerate() {
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi += e as i64 * cubic_basis[alpha].exp(i) as i64;
                }
            }
            let chi = pp.pow((w[0] - w[2]) as i32) * qq.pow((w[1] - w[2]) as i32);
            chi.is_one()
        });
        witnesses += 1;
    }

    // dense witnesses: random integer products of elementary shears
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
    for _ in 0..4 {
        let a = random_integer_unimodular(&mut rng, 3, 3);
        let action = cubic_coeff_action(&a)?;
        let mut linforms = [[0i64; 10]; 10];
        for (i, row) in linforms.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let v = action.at(i, j);
                debug_assert!(v.denom().is_one());
                *e = i64::try_from(v.numer().clone()).expect("small integer entry");
            }
        }
        let mut row_index: HashMap<u64, usize> = HashMap::new();
        let base = rows.len();
        for (col, &idx) in survivors.iter().enumerate() {
            let m = &space[idx];
            let mut e = expand_monomial(&linforms, m);
            *e.entry(pack_exps(m.exps())).or_insert(0) -= 1;
            for (key, val) in e {
                if val == 0 {
                    continue;
                }
                let next = base + row_index.len();
                let r = *row_index.entry(key).or_insert(next);
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push((col, val));
            }
        }
        witnesses += 1;
    }

    let kernel = sparse_integer_kernel(&rows, survivors.len())?;
    let basis = kernel
        .iter()
        .map(|vec| {
            let poly = MultiPoly::from_terms(
                Q,
                10,
                survivors.iter().zip(vec.iter()).map(|(&idx, c)| (space[idx].clone(), c.clone())),
            )
            .projective_normalize();
            TernaryInvariant { degree: k, poly }
        })
        .collect::<Vec<_>>();
    Ok(Interpolation { dimension: basis.len(), basis, seed, witnesses })
}

/// Exact kernel of a sparse integer matrix: a fast modular elimination picks
/// candidate pivot rows, an exact rational elimination of just those rows
/// produces the kernel, and every dropped row is then verified to annihilate
/// the kernel exactly. Falls back to a full exact elimination if the modular
/// selection missed anything.
fn sparse_integer_kernel(rows: &[Vec<(usize, i64)>], ncols: usize) -> Result<Vec<Vec<Rat>>> {
    let selected = select_independent_rows_mod_p(rows, ncols);
    let dense = |idx: &[usize]| -> FieldMatrix<Q> {
        FieldMatrix::from_fn(Q, idx.len(), ncols, |i, j| {
            rows[idx[i]]
                .iter()
                .find(|(c, _)| *c == j)
                .map(|(_, v)| rat_i(*v))
                .unwrap_or_else(|| Rat::zero())
        })
    };
    let kernel = dense(&selected).kernel();
    let verified = rows.iter().all(|row| {
        kernel.iter().all(|vec| {
            let dot: Rat = row.iter().map(|(c, v)| rat_i(*v) * &vec[*c]).sum();
            dot.is_zero()
        })
    });
    if verified {
        return Ok(kernel);
    }
    // modular selection missed a relation; do the full exact elimination
    let all: Vec<usize> = (0..rows.len()).collect();
    Ok(dense(&all).kernel())
}

fn select_independent_rows_mod_p(rows: &[Vec<(usize, i64)>], ncols: usize) -> Vec<usize> {
    let p = ROW_SELECT_PRIME;
    let modp = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut echelon: Vec<(usize, Vec<u64>, usize)> = Vec::new(); // (pivot col, row, original idx)
    let mut selected = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        let mut dense = vec![0u64; ncols];
        for &(c, v) in row {
            dense[c] = (dense[c] + modp(v)) % p;
        }
        for (pc, prow, _) in &echelon {
            if dense[*pc] != 0 {
                let factor = dense[*pc];
                for j in 0..ncols {
                    if prow[j] != 0 {
                        dense[j] = (dense[j] + p - factor * prow[j] % p) % p;
                    }
                }
            }
        }
        if let Some(pc) = dense.iter().position(|&x| x != 0) {
            let inv = mod_inv(dense[pc], p);
            for x in dense.iter_mut() {
                *x = *x * inv % p;
            }
            echelon.push((pc, dense, ri));
            selected.push(ri);
            if selected.len() == ncols {
                break;
            }
        }
    }
    selected
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Random product of elementary integer shears, determinant 1 by
/// construction.
fn random_integer_unimodular(
    rng: &mut rand_chacha::ChaCha8Rng,
    n: usize,
    shears: usize,
) -> FieldMatrix<Q> {
    let mut m = FieldMatrix::identity(Q, n);
    for _ in 0..shears {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let lam: i64 = *[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
        let mut shear = FieldMatrix::identity(Q, n);
        shear.set(i, j, rat_i(lam));
        m = m.mul_mat(&shear).unwrap();
    }
    m
}

const ARONHOLD_SEED: u64 = 0x4145_5331;

/// The degree-4 invariant, interpolated once with a fixed recorded seed and
/// cached.
pub fn aronhold_s() -> &'static TernaryInvariant {
    static CACHE: OnceLock<TernaryInvariant> = OnceLock::new();
    CACHE.get_or_init(|| {
        invariant_interpolation(4, ARONHOLD_SEED)
            .expect("degree-4 interpolation is reproducible")
            .basis
            .remove(0)
    })
}

// ---------------------------------------------------------------------------
// the Aronhold (polar) map
// ---------------------------------------------------------------------------

/// Multinomial coefficient `3! / alpha!` of a cubic monomial: the
/// differentiation pairing identifies the dual of the coefficient space with
/// cubics by weighting each coordinate with it.
fn multinomial3(m: &Monomial) -> i64 {
    let fact = |k: u16| -> i64 { (1..=k as i64).product::<i64>().max(1) };
    6 / m.exps().iter().map(|&e| fact(e)).product::<i64>()
}

/// Polar map of the degree-4 invariant: the gradient at the coefficients of
/// `g`, identified with a ternary cubic through the differentiation pairing.
pub fn aronhold_map(g: &MultiPoly<Q>) -> Result<MultiPoly<Q>> {
    let c = cubic_coefficients(g)?;
    let s = aronhold_s();
    let basis = monomials_of_degree(3, 3);
    let grad: Vec<Rat> = (0..10)
        .map(|i| {
            Ok(s.poly.partial_derivative(i)?.eval(&c)? * rat_i(multinomial3(&basis[i])))
        })
        .collect::<Result<_>>()?;
    if grad.iter().all(Rat::is_zero) {
        return Err(Error::ZeroGradient);
    }
    Ok(MultiPoly::from_coefficient_vector(Q, 3, 3, &grad))
}

/// Action of the polar map on the Hesse pencil parameter:
/// `[u:v] -> [3u^2 v : 2u^3 + v^3]`, the projective form of `(2 + t^3)/(3t)`.
pub fn aronhold_pencil_action(t: &ProjParam) -> ProjParam {
    let (u, v) = (t.u(), t.v());
    ProjParam::new(rat_i(3) * u * u * v, rat_i(2) * u * u * u + v * v * v)
        .expect("never [0:0]")
        .normalize()
}

/// Exact identity `aronhold_map(member(t)) ~ member((2 + t^3)/(3t))`, checked
/// with the parameter symbolic: both sides are vectors of binary cubics in
/// `(u, v)` compared by cross products.
pub fn aronhold_pencil_identity() -> Result<bool> {
    let s = aronhold_s();
    // member coefficient vector as polynomials in (u, v)
    let u = MultiPoly::var(Q, 2, 0)?;
    let v = MultiPoly::var(Q, 2, 1)?;
    let zero = MultiPoly::zero(Q, 2);
    let mut member: Vec<MultiPoly<Q>> = vec![zero.clone(); 10];
    member[0] = u.clone();
    member[6] = u.clone();
    member[9] = u.clone();
    member[4] = v.scale(&rat_i(-3));
    let basis = monomials_of_degree(3, 3);
    let image: Vec<MultiPoly<Q>> = (0..10)
        .map(|i| {
            Ok(s.poly
                .partial_derivative(i)?
                .compose(&member)?
                .scale(&rat_i(multinomial3(&basis[i]))))
        })
        .collect::<Result<_>>()?;
    // member at [3u^2 v : 2u^3 + v^3]
    let u_img = u.pow(2).mul(&v)?.scale(&rat_i(3));
    let v_img = u.pow(3).scale(&rat_i(2)).add(&v.pow(3))?;
    let mut expect: Vec<MultiPoly<Q>> = vec![zero; 10];
    expect[0] = u_img.clone();
    expect[6] = u_img.clone();
    expect[9] = u_img;
    expect[4] = v_img.scale(&rat_i(-3));
    Ok(projectively_equal_vectors(&image, &expect))
}

/// The 10x10 matrix of second partials of the degree-4 invariant, evaluated
/// at the coefficients of `g`.
pub fn aronhold_hessian_at(g: &MultiPoly<Q>) -> Result<FieldMatrix<Q>> {
    let c = cubic_coefficients(g)?;
    let s = aronhold_s();
    let mut m = FieldMatrix::zero(Q, 10, 10);
    for i in 0..10 {
        let di = s.poly.partial_derivative(i)?;
        for j in 0..10 {
            m.set(i, j, di.partial_derivative(j)?.eval(&c)?);
        }
    }
    Ok(m)
}

/// Codimension of the tangent space to the vanishing-Hessian scheme at a
/// cubic `g` with identically vanishing Hessian: the rank of the
/// differential of the Hessian coefficient map at `g`.
pub fn gn_tangent_codim(g: &MultiPoly<Q>) -> Result<usize> {
    if !hessian(g)?.vanished {
        return Err(Error::HessianNonzero);
    }
    differential_rank(g)
}
