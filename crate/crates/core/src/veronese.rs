//! Projections of the Veronese surface of rank-one symmetric matrices:
//! hyperplane-section conics, the quartic tangency curve and its dual
//! sextic, hull classification by the signature of the projection center,
//! and exact sum-of-squares certificates.
//!
//! P^5 is coordinatized by the entries (m00, m01, m02, m11, m12, m22) of a
//! symmetric 3x3 matrix, so the second Veronese map sends t to t t^T and a
//! linear form L on P^5 corresponds under the trace pairing to the symmetric
//! matrix B with L(M) = trace(B M).

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::elimination::{common_projective_zeros, ElimError};
use crate::matrix::{Mat, Signature, SymMatrix};
use crate::poly::RationalPoly;
use crate::rational::{rat, rat_i, Rational};
use crate::resultant::{bareiss_det, discriminant_in};

pub const T_VARS: [&str; 3] = ["t0", "t1", "t2"];
pub const X_VARS: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];
pub const W_VARS: [&str; 2] = ["w0", "w1"];

#[derive(Debug, Error)]
pub enum VeroneseError {
    #[error("projection center must have rank 3 (smoothness requires full rank), got rank {0}")]
    CenterNotFullRank(usize),
    #[error("chart basis must be 5 independent linear forms annihilating the center")]
    BadChartBasis,
    #[error("surface forms are degenerate: {0}")]
    DegenerateSurface(String),
    #[error("curve parametrization has an identically zero discriminant")]
    DegenerateCurve,
    #[error("center is not positive definite")]
    NotPositiveDefinite,
    #[error(transparent)]
    Elimination(#[from] ElimError),
}

/// The entry coordinates (m00, m01, m02, m11, m12, m22) of a symmetric 3x3
/// matrix, i.e. its image in P^5.
pub fn vec6(m: &SymMatrix) -> [Rational; 6] {
    assert_eq!(m.dim(), 3);
    [
        m.get(0, 0).clone(),
        m.get(0, 1).clone(),
        m.get(0, 2).clone(),
        m.get(1, 1).clone(),
        m.get(1, 2).clone(),
        m.get(2, 2).clone(),
    ]
}

fn sym_from_vec6(v: &[Rational]) -> SymMatrix {
    let mut m = SymMatrix::zeros(3);
    m.set(0, 0, v[0].clone());
    m.set(0, 1, v[1].clone());
    m.set(0, 2, v[2].clone());
    m.set(1, 1, v[3].clone());
    m.set(1, 2, v[4].clone());
    m.set(2, 2, v[5].clone());
    m
}

/// Gram matrix of the pullback of the linear form with coefficient vector
/// `c` (on the entry coordinates): trace pairing halves the off-diagonals.
fn gram_of_linear_form(c: &[Rational]) -> SymMatrix {
    let mut b = SymMatrix::zeros(3);
    let half = rat(1, 2);
    b.set(0, 0, c[0].clone());
    b.set(0, 1, &c[1] * &half);
    b.set(0, 2, &c[2] * &half);
    b.set(1, 1, c[3].clone());
    b.set(1, 2, &c[4] * &half);
    b.set(2, 2, c[5].clone());
    b
}

/// A full-rank projection center together with a basis of the linear forms
/// vanishing at it (the chart onto P^4).
#[derive(Clone, Debug)]
pub struct ProjectionCenter {
    matrix: SymMatrix,
    chart_basis: Vec<Vec<Rational>>, // five 6-vectors
}

impl ProjectionCenter {
    pub fn new(
        matrix: SymMatrix,
        chart_basis: Option<Vec<Vec<Rational>>>,
    ) -> Result<Self, VeroneseError> {
        assert_eq!(matrix.dim(), 3);
        let rank = matrix.rank();
        if rank != 3 {
            return Err(VeroneseError::CenterNotFullRank(rank));
        }
        let a6 = vec6(&matrix);
        let basis = match chart_basis {
            Some(basis) => {
                if basis.len() != 5 || basis.iter().any(|r| r.len() != 6) {
                    return Err(VeroneseError::BadChartBasis);
                }
                let annihilates = basis.iter().all(|row| {
                    row.iter()
                        .zip(&a6)
                        .map(|(c, a)| c * a)
                        .sum::<Rational>()
                        .is_zero()
                });
                let independent = Mat::from_rows(basis.clone()).rank() == 5;
                if !annihilates || !independent {
                    return Err(VeroneseError::BadChartBasis);
                }
                basis
            }
            None => {
                let row = Mat::from_rows(vec![a6.to_vec()]);
                row.kernel_basis()
                    .into_iter()
                    .map(|v| crate::matrix::primitive_vector(&v))
                    .collect()
            }
        };
        Ok(ProjectionCenter {
            matrix,
            chart_basis: basis,
        })
    }

    /// Center from its six entry coordinates.
    pub fn from_p5_coords(
        coords: &[Rational],
        chart_basis: Option<Vec<Vec<Rational>>>,
    ) -> Result<Self, VeroneseError> {
        assert_eq!(coords.len(), 6);
        Self::new(sym_from_vec6(coords), chart_basis)
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn chart_basis(&self) -> &[Vec<Rational>] {
        &self.chart_basis
    }

    /// Gram matrices of the five chart forms in the dual space; the matrix
    /// pencil `B(u) = sum u_i B_i` cuts out the tangency curve by rank.
    pub fn dual_gram_basis(&self) -> Vec<SymMatrix> {
        self.chart_basis
            .iter()
            .map(|c| gram_of_linear_form(c))
            .collect()
    }
}

/// A rational surface in P^4 given by five homogeneous forms in t0, t1, t2.
#[derive(Clone, Debug)]
pub struct ParametrizedSurface {
    pub forms: Vec<RationalPoly>,
    pub source: String,
}

impl ParametrizedSurface {
    /// Validates: five forms of one common degree, no common zero (checked
    /// by the elimination certificate at desk scale).
    pub fn new(forms: Vec<RationalPoly>, source: &str) -> Result<Self, VeroneseError> {
        if forms.len() != 5 {
            return Err(VeroneseError::DegenerateSurface(
                "expected five forms".into(),
            ));
        }
        let deg = forms[0].total_degree();
        if forms
            .iter()
            .any(|f| !f.is_form() || f.total_degree() != deg || f.is_zero())
        {
            return Err(VeroneseError::DegenerateSurface(
                "forms must be nonzero and homogeneous of one degree".into(),
            ));
        }
        let zeros = common_projective_zeros(&forms)?;
        if !zeros.is_empty() {
            return Err(VeroneseError::DegenerateSurface(format!(
                "forms share {} base point(s)",
                zeros.len()
            )));
        }
        Ok(ParametrizedSurface {
            forms,
            source: source.to_string(),
        })
    }

    pub fn eval(&self, t: &[Rational]) -> Vec<Rational> {
        self.forms.iter().map(|f| f.eval(t)).collect()
    }
}

/// Image of the Veronese surface under the projection from the center:
/// the five chart forms pulled back through t t^T.
pub fn project_veronese(center: &ProjectionCenter) -> Result<ParametrizedSurface, VeroneseError> {
    let monomials = ["t0^2", "t0 t1", "t0 t2", "t1^2", "t1 t2", "t2^2"];
    let forms: Vec<RationalPoly> = center
        .chart_basis
        .iter()
        .map(|row| {
            let mut f = RationalPoly::zero(&T_VARS);
            for (c, mono) in row.iter().zip(monomials) {
                if !c.is_zero() {
                    f = f.add(&RationalPoly::parse(mono, &T_VARS).unwrap().scale(c));
                }
            }
            f
        })
        .collect();
    ParametrizedSurface::new(forms, "projected Veronese surface")
}

/// True iff every generator (in x0..x4) pulls back to zero along the
/// parametrization.
pub fn verify_ideal(surface: &ParametrizedSurface, generators: &[RationalPoly]) -> bool {
    let mut bindings = BTreeMap::new();
    for (i, f) in surface.forms.iter().enumerate() {
        bindings.insert(format!("x{i}"), f.clone());
    }
    generators
        .iter()
        .all(|g| g.substitute(&bindings).map(|p| p.is_zero()).unwrap_or(false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    SmoothConic,
    TwoLines,
    DoubleLine,
}

/// Classify the plane conic t^T B t by the exact rank of B.
pub fn conic_of(b: &SymMatrix) -> (ConicClass, RationalPoly) {
    assert_eq!(b.dim(), 3);
    assert!(!b.is_zero(), "zero matrix is not a conic");
    let class = match b.rank() {
        3 => ConicClass::SmoothConic,
        2 => ConicClass::TwoLines,
        _ => ConicClass::DoubleLine,
    };
    (class, quadratic_form_poly(b, &T_VARS))
}

/// The polynomial x^T M x in the given variables.
pub fn quadratic_form_poly(m: &SymMatrix, vars: &[&str]) -> RationalPoly {
    let n = m.dim();
    assert_eq!(vars.len(), n);
    let mut f = RationalPoly::zero(vars);
    for i in 0..n {
        for j in i..n {
            let c = if i == j {
                m.get(i, i).clone()
            } else {
                m.get(i, j) * rat_i(2)
            };
            if c.is_zero() {
                continue;
            }
            let mut exp = vec![0u32; n];
            exp[i] += 1;
            exp[j] += 1;
            f.add_term(exp, c);
        }
    }
    f
}

/// Gram matrix of a quadratic form in `vars`.
pub fn gram_of_quadratic(f: &RationalPoly, vars: &[&str]) -> SymMatrix {
    let n = vars.len();
    let mut m = SymMatrix::zeros(n);
    let half = rat(1, 2);
    for (e, c) in f.terms() {
        let idx: Vec<usize> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize))
            .collect();
        assert_eq!(idx.len(), 2, "not a quadratic form");
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m.set(i, i, c.clone());
        } else {
            m.set(i, j, c * &half);
        }
    }
    m
}

/// A rational curve in projective space given by binary forms of one degree.
#[derive(Clone, Debug)]
pub struct ParametrizedCurve {
    pub forms: Vec<RationalPoly>, // in w0, w1
}

impl ParametrizedCurve {
    pub fn new(forms: Vec<RationalPoly>) -> Self {
        assert!(forms.iter().all(|f| f.is_form()));
        ParametrizedCurve { forms }
    }

    pub fn eval(&self, w: &[Rational]) -> Vec<Rational> {
        self.forms.iter().map(|f| f.eval(w)).collect()
    }

    /// Coordinatewise partials with respect to the two parameters.
    pub fn tangent_at(&self, w: &[Rational; 2]) -> Vec<Vec<Rational>> {
        let d0: Vec<Rational> = self
            .forms
            .iter()
            .map(|f| f.derivative("w0").unwrap().eval(w))
            .collect();
        let d1: Vec<Rational> = self
            .forms
            .iter()
            .map(|f| f.derivative("w1").unwrap().eval(w))
            .collect();
        vec![d0, d1]
    }
}

/// The tangency curve of the projected Veronese surface: the rank-one locus
/// of `B(u)` in the dual space, isomorphic to the conic `s^T A s = 0`.
#[derive(Clone, Debug)]
pub struct X2Curve {
    /// The conic in the dual plane (the center matrix itself).
    pub conic: SymMatrix,
    /// A small-height rational point of the conic, when one was found.
    pub rational_point: Option<Vec<Rational>>,
    /// Quartic rational-normal-curve parametrization, when a point exists.
    pub parametrization: Option<ParametrizedCurve>,
    /// The six quadrics (2x2 minors of B(u)) cutting out the curve.
    pub quadric_generators: Vec<RationalPoly>,
    /// Exact verdict: the real locus is empty iff the center is definite.
    pub real_locus_empty: bool,
}

/// Search primitive integer triples with coordinates bounded by `bound` for
/// a point of the conic. Deterministic order, smallest height first.
pub fn small_conic_point(m: &SymMatrix, bound: i64) -> Option<Vec<Rational>> {
    for h in 1..=bound {
        for a in -h..=h {
            for b in -h..=h {
                for c in -h..=h {
                    if a.abs().max(b.abs()).max(c.abs()) != h {
                        continue;
                    }
                    if num_integer::gcd(num_integer::gcd(a, b), c) != 1 {
                        continue;
                    }
                    let p = vec![rat_i(a), rat_i(b), rat_i(c)];
                    if m.quad_form(&p).is_zero() {
                        return Some(crate::matrix::primitive_vector(&p));
                    }
                }
            }
        }
    }
    None
}

/// Parametrize a smooth conic from one of its rational points: the second
/// intersection of the line through `p` with direction `w0 v1 + w1 v2`.
pub fn conic_parametrization(m: &SymMatrix, p: &[Rational]) -> Vec<RationalPoly> {
    assert!(m.quad_form(p).is_zero(), "point not on conic");
    // complement basis: two standard vectors keeping {p, v1, v2} independent
    let mut best = None;
    'search: for i in 0..3 {
        for j in i + 1..3 {
            let mut cand = Mat::zeros(3, 3);
            for k in 0..3 {
                cand[(k, 0)] = p[k].clone();
            }
            cand[(i, 1)] = Rational::one();
            cand[(j, 2)] = Rational::one();
            if !cand.det().is_zero() {
                best = Some((i, j));
                break 'search;
            }
        }
    }
    let (i, j) = best.expect("p is nonzero");
    // v(w) = w0 e_i + w1 e_j as symbolic vector
    let w0 = RationalPoly::var(&W_VARS, "w0").unwrap();
    let w1 = RationalPoly::var(&W_VARS, "w1").unwrap();
    let zero = RationalPoly::zero(&W_VARS);
    let mut v = vec![zero.clone(), zero.clone(), zero];
    v[i] = w0;
    v[j] = w1;
    // alpha = v^T M v, beta = 2 p^T M v; s(w) = alpha p - beta v
    let mm = m.to_mat();
    let mut alpha = RationalPoly::zero(&W_VARS);
    let mut beta = RationalPoly::zero(&W_VARS);
    for r in 0..3 {
        for c in 0..3 {
            alpha = alpha.add(&v[r].mul(&v[c]).scale(&mm[(r, c)]));
            beta = beta.add(&v[c].scale(&(&mm[(r, c)] * &p[r] * rat_i(2))));
        }
    }
    (0..3)
        .map(|k| alpha.scale(&p[k]).sub(&beta.mul(&v[k])))
        .collect()
}

/// Compute the tangency curve for a projection center.
pub fn x2_curve(center: &ProjectionCenter, point_bound: i64) -> Result<X2Curve, VeroneseError> {
    let a = center.matrix();
    let basis = center.dual_gram_basis();
    // B(u) with symbolic entries
    let u_polys: Vec<RationalPoly> = (0..5)
        .map(|i| RationalPoly::var(&X_VARS, X_VARS[i]).unwrap())
        .collect();
    let entry = |r: usize, c: usize| -> RationalPoly {
        let mut e = RationalPoly::zero(&X_VARS);
        for (b, u) in basis.iter().zip(&u_polys) {
            e = e.add(&u.scale(b.get(r, c)));
        }
        e
    };
    // six essentially distinct 2x2 minors of the symmetric 3x3 B(u)
    let mut minors = Vec::new();
    for r1 in 0..3 {
        for r2 in r1 + 1..3 {
            for c1 in 0..3 {
                for c2 in c1 + 1..3 {
                    if (r1, r2) > (c1, c2) {
                        continue;
                    }
                    let m = entry(r1, c1)
                        .mul(&entry(r2, c2))
                        .sub(&entry(r1, c2).mul(&entry(r2, c1)));
                    minors.push(m.primitive_part());
                }
            }
        }
    }
    let real_locus_empty = a.signature().normalized() == Signature::new(3, 0, 0);
    let rational_point = small_conic_point(a, point_bound);
    let parametrization = rational_point.as_ref().map(|p| {
        let s = conic_parametrization(a, p);
        // solve sum u_i B_i = s s^T for the u_i as binary quartics
        let cols: Vec<[Rational; 6]> = basis.iter().map(vec6).collect();
        let mat = Mat::from_fn(6, 5, |i, j| cols[j][i].clone());
        let rhs: Vec<RationalPoly> = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
            .iter()
            .map(|&(r, c)| s[r].mul(&s[c]))
            .collect();
        let (rref, e, pivots) = mat.rref_with_transform();
        assert_eq!(pivots.len(), 5, "chart basis is independent");
        let zero = RationalPoly::zero(&W_VARS);
        let trhs: Vec<RationalPoly> = (0..6)
            .map(|i| {
                let mut acc = zero.clone();
                for k in 0..6 {
                    acc = acc.add(&rhs[k].scale(&e[(i, k)]));
                }
                acc
            })
            .collect();
        // consistency row: s s^T lies in the span of the chart matrices
        let row_zero = (0..5).all(|j| rref[(5, j)].is_zero());
        assert!(row_zero && trhs[5].is_zero(), "tangency pairing violated");
        ParametrizedCurve::new(trhs[..5].to_vec())
    });
    Ok(X2Curve {
        conic: a.clone(),
        rational_point,
        parametrization,
        quadric_generators: minors,
        real_locus_empty,
    })
}

/// Dual hypersurface of a parametrized rational curve: the discriminant of
/// `sum x_i form_i(w)` with respect to the curve parameter (primitive part;
/// reduced for the non-degenerate curves in scope).
pub fn dual_of_parametrized_curve(
    curve: &ParametrizedCurve,
) -> Result<RationalPoly, VeroneseError> {
    let m = curve.forms.len();
    let xs: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
    let mut vars: Vec<&str> = xs.iter().map(|s| s.as_str()).collect();
    vars.push("w1");
    // dehomogenize at w0 = 1
    let mut g = RationalPoly::zero(&vars);
    for (i, f) in curve.forms.iter().enumerate() {
        let mut bindings = BTreeMap::new();
        bindings.insert("w0".to_string(), RationalPoly::one(&vars));
        bindings.insert("w1".to_string(), RationalPoly::var(&vars, "w1").unwrap());
        let fu = f.substitute(&bindings).expect("bound");
        g = g.add(&fu.mul(&RationalPoly::var(&vars, &xs[i]).unwrap()));
    }
    let disc = discriminant_in(&g, "w1").map_err(|_| VeroneseError::DegenerateCurve)?;
    if disc.is_zero() {
        return Err(VeroneseError::DegenerateCurve);
    }
    Ok(disc.primitive_part().remove_unused_var("w1"))
}

/// Dual sextic of the tangency curve, computed without any parametrization.
///
/// A point x of P^4 lifts along the projection to the pencil of symmetric
/// matrices Z(x) + l*A, where Z(x) is any matrix whose chart coordinates are
/// x. The dual hyperplane of x is tangent to the tangency curve iff the
/// conic of Z(x) is tangent to the conic of the center, i.e. iff the binary
/// cubic det(l*A + Z(x)) has a repeated root. This works over Q for every
/// full-rank center, including those whose conic has no rational point.
pub fn dual_sextic(center: &ProjectionCenter) -> RationalPoly {
    let a = center.matrix();
    // right inverse of the 5x6 chart matrix: a linear section x -> Z(x)
    let chart = Mat::from_rows(center.chart_basis.to_vec());
    let (rref, e, pivots) = chart.rref_with_transform();
    assert_eq!(pivots.len(), 5);
    let _ = rref;
    let mut vars: Vec<&str> = vec!["l"];
    vars.extend(X_VARS);
    let l = RationalPoly::var(&vars, "l").unwrap();
    // z(x): entry coordinates of Z(x), with the free coordinate set to zero
    let zero = RationalPoly::zero(&vars);
    let mut z = vec![zero.clone(); 6];
    for (r, &p) in pivots.iter().enumerate() {
        let mut acc = zero.clone();
        for k in 0..5 {
            acc = acc.add(&RationalPoly::var(&vars, X_VARS[k]).unwrap().scale(&e[(r, k)]));
        }
        z[p] = acc;
    }
    let entry_index = |r: usize, c: usize| -> usize {
        match (r.min(c), r.max(c)) {
            (0, 0) => 0,
            (0, 1) => 1,
            (0, 2) => 2,
            (1, 1) => 3,
            (1, 2) => 4,
            (2, 2) => 5,
            _ => unreachable!(),
        }
    };
    let entries: Vec<Vec<RationalPoly>> = (0..3)
        .map(|r| {
            (0..3)
                .map(|c| l.scale(a.get(r, c)).add(&z[entry_index(r, c)]))
                .collect()
        })
        .collect();
    let det = bareiss_det(entries);
    let disc = discriminant_in(&det, "l").expect("cubic in l with constant leading coefficient");
    disc.primitive_part().remove_unused_var("l")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullClass {
    /// Definite center: the hull is all of R^4.
    FullSpaceHull,
    /// Indefinite center: the hull is a convex body with a sextic boundary.
    BoundedHull,
}

pub fn classify_center(center: &ProjectionCenter) -> HullClass {
    let sig = center.matrix().signature().normalized();
    if sig == Signature::new(3, 0, 0) {
        HullClass::FullSpaceHull
    } else {
        debug_assert_eq!(sig, Signature::new(2, 1, 0));
        HullClass::BoundedHull
    }
}

/// Witness for the full-space hull: an exact rational `lambda` with
/// `M + lambda A` positive definite (checked by signature), plus a
/// floating-point rank-one decomposition `(1/3) sum v_i v_i^T` with its
/// residual.
pub struct FullHullWitness {
    pub lambda: Rational,
    pub vectors: Vec<[f64; 3]>,
    pub residual: f64,
}

pub fn full_hull_witness(a: &SymMatrix, m: &SymMatrix) -> Result<FullHullWitness, VeroneseError> {
    if a.signature() != Signature::new(3, 0, 0) {
        return Err(VeroneseError::NotPositiveDefinite);
    }
    let mut lambda = rat_i(1);
    loop {
        let shifted = m.add(&a.scale(&lambda));
        if shifted.signature() == Signature::new(3, 0, 0) {
            break;
        }
        lambda *= rat_i(2);
        assert!(lambda < rat_i(1 << 60), "shift search runaway");
    }
    let shifted = m.add(&a.scale(&lambda));
    let dm =
        nalgebra::DMatrix::from_fn(3, 3, |i, j| crate::rational::rat_to_f64(shifted.get(i, j)));
    let eig = nalgebra::SymmetricEigen::new(dm.clone());
    let mut vectors = Vec::new();
    for k in 0..3 {
        let scale = (3.0 * eig.eigenvalues[k].max(0.0)).sqrt();
        let col = eig.eigenvectors.column(k);
        vectors.push([col[0] * scale, col[1] * scale, col[2] * scale]);
    }
    let mut recon = nalgebra::DMatrix::zeros(3, 3);
    for v in &vectors {
        let vv = nalgebra::DVector::from_row_slice(v);
        recon += &vv * vv.transpose() / 3.0;
    }
    let residual = (dm - recon).norm();
    Ok(FullHullWitness {
        lambda,
        vectors,
        residual,
    })
}

/// One summand `coeff * poly^2` of a sum-of-squares certificate.
#[derive(Clone, Debug)]
pub struct SosTerm {
    pub coeff: Rational,
    pub poly: RationalPoly,
}

/// Exact check of `f = sum coeff_i * poly_i^2` with nonnegative coefficients.
pub fn sos_verify(f: &RationalPoly, terms: &[SosTerm]) -> bool {
    if terms.iter().any(|t| t.coeff.is_negative()) {
        return false;
    }
    let mut acc = RationalPoly::zero_owned(f.vars().to_vec());
    for t in terms {
        acc = acc.add(&t.poly.mul(&t.poly).scale(&t.coeff));
    }
    acc == *f
}

/// Exact compactness certificate for an affine chart: the chart form pulled
/// back to the parameter plane, written as a positive-definite sum of
/// squares when possible. `None` when the pullback is not definite.
pub fn chart_sos_certificate(
    surface: &ParametrizedSurface,
    chart: &[Rational],
) -> Option<(RationalPoly, Vec<SosTerm>)> {
    assert_eq!(chart.len(), 5);
    let mut g = RationalPoly::zero(&T_VARS);
    for (c, f) in chart.iter().zip(&surface.forms) {
        g = g.add(&f.scale(c));
    }
    if g.total_degree() != Some(2) {
        return None;
    }
    let gram = gram_of_quadratic(&g, &T_VARS);
    if gram.signature() != Signature::new(3, 0, 0) {
        return None;
    }
    let (t, diag) = gram.congruence_diagonalize();
    let tinv = t.inverse().expect("congruence transform invertible");
    let terms: Vec<SosTerm> = (0..3)
        .map(|i| {
            let mut lin = RationalPoly::zero(&T_VARS);
            for (j, var) in T_VARS.iter().enumerate() {
                lin = lin.add(&RationalPoly::var(&T_VARS, var).unwrap().scale(&tinv[(i, j)]));
            }
            SosTerm {
                coeff: diag[i].clone(),
                poly: lin,
            }
        })
        .collect();
    debug_assert!(sos_verify(&g, &terms));
    Some((g, terms))
}

/// A basis of the space of points x in P^4 whose dual hyperplane is tangent
/// to the curve at parameter (1, w): solutions of x.c(w) = x.c'(w) = 0.
pub fn tangent_hyperplane_space(curve: &ParametrizedCurve, w: &Rational) -> Vec<Vec<Rational>> {
    let at = [Rational::one(), w.clone()];
    let point = curve.eval(&at);
    let tangents = curve.tangent_at(&at);
    let rows = vec![point, tangents[1].clone()];
    Mat::from_rows(rows).kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn center_21() -> ProjectionCenter {
        // signature (2,1) center with entry coordinates (0,0,-1,2,0,0)
        let coords: Vec<Rational> = [0, 0, -1, 2, 0, 0].iter().map(|&v| rat_i(v)).collect();
        let basis = vec![
            vec![rat_i(1), rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(-2), rat_i(0), rat_i(0), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(2), rat_i(1), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(-2), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
        ];
        ProjectionCenter::from_p5_coords(&coords, Some(basis)).unwrap()
    }

    #[test]
    fn projection_reproduces_declared_basis() {
        let surface = project_veronese(&center_21()).unwrap();
        let expected = ["t0^2", "-2 t0 t1", "2 t0 t2 + t1^2", "-2 t1 t2", "t2^2"];
        for (f, e) in surface.forms.iter().zip(expected) {
            assert_eq!(f, &RationalPoly::parse(e, &T_VARS).unwrap());
        }
    }

    #[test]
    fn forms_annihilate_center_under_trace_pairing() {
        let center = center_21();
        let surface = project_veronese(&center).unwrap();
        for f in &surface.forms {
            let gram = gram_of_quadratic(f, &T_VARS);
            let prod = center.matrix().to_mat().mul(&gram.to_mat());
            let trace: Rational = (0..3).map(|i| prod[(i, i)].clone()).sum();
            assert!(trace.is_zero());
        }
    }

    #[test]
    fn rank_two_center_rejected() {
        let m = SymMatrix::diagonal_i64(&[1, 1, 0]);
        assert!(matches!(
            ProjectionCenter::new(m, None),
            Err(VeroneseError::CenterNotFullRank(2))
        ));
    }

    #[test]
    fn conic_classification() {
        let (c, _) = conic_of(&SymMatrix::identity(3));
        assert_eq!(c, ConicClass::SmoothConic);
        let (c, _) = conic_of(&SymMatrix::diagonal_i64(&[1, -1, 0]));
        assert_eq!(c, ConicClass::TwoLines);
        let (c, poly) = conic_of(&SymMatrix::diagonal_i64(&[1, 0, 0]));
        assert_eq!(c, ConicClass::DoubleLine);
        assert_eq!(poly, RationalPoly::parse("t0^2", &T_VARS).unwrap());
    }

    #[test]
    fn x2_curve_is_rational_normal_quartic() {
        let curve = x2_curve(&center_21(), 10).unwrap();
        assert!(!curve.real_locus_empty);
        let param = curve.parametrization.as_ref().unwrap();
        assert_eq!(param.forms.len(), 5);
        for f in &param.forms {
            assert_eq!(f.total_degree(), Some(4));
        }
        // the quadric generators vanish along the parametrization
        let mut bindings = BTreeMap::new();
        for (i, f) in param.forms.iter().enumerate() {
            bindings.insert(format!("x{i}"), f.clone());
        }
        for q in &curve.quadric_generators {
            assert!(q.substitute(&bindings).unwrap().is_zero());
        }
        // forms are linearly independent (a genuine rational normal curve)
        let rows: Vec<Vec<Rational>> = param
            .forms
            .iter()
            .map(|f| {
                (0..=4u32)
                    .map(|k| {
                        let exp = vec![4 - k, k];
                        f.terms()
                            .find(|(e, _)| **e == exp)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(Rational::zero)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(Mat::from_rows(rows).rank(), 5);
    }

    #[test]
    fn definite_center_has_empty_real_curve() {
        let center = ProjectionCenter::new(SymMatrix::identity(3), None).unwrap();
        let curve = x2_curve(&center, 6).unwrap();
        assert!(curve.real_locus_empty);
        assert!(curve.rational_point.is_none());
        assert_eq!(curve.quadric_generators.len(), 6);
    }

    #[test]
    fn classify_center_cases() {
        let id = ProjectionCenter::new(SymMatrix::identity(3), None).unwrap();
        assert_eq!(classify_center(&id), HullClass::FullSpaceHull);
        let neg = ProjectionCenter::new(SymMatrix::identity(3).neg(), None).unwrap();
        assert_eq!(classify_center(&neg), HullClass::FullSpaceHull);
        assert_eq!(classify_center(&center_21()), HullClass::BoundedHull);
    }

    #[test]
    fn classify_center_congruence_invariant() {
        let a = center_21().matrix().clone();
        let t = Mat::from_rows(vec![
            vec![rat_i(1), rat_i(2), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(-1)],
            vec![rat_i(3), rat_i(0), rat_i(1)],
        ]);
        assert!(!t.det().is_zero());
        let a2 = a.congruence(&t).unwrap();
        let c2 = ProjectionCenter::new(a2, None).unwrap();
        assert_eq!(classify_center(&c2), HullClass::BoundedHull);
        let scaled = ProjectionCenter::new(a.scale(&rat_i(-7)), None).unwrap();
        assert_eq!(classify_center(&scaled), HullClass::BoundedHull);
    }

    #[test]
    fn full_hull_witness_works() {
        let a = SymMatrix::identity(3);
        let w = full_hull_witness(&a, &SymMatrix::zeros(3)).unwrap();
        assert_eq!(w.lambda, rat_i(1));
        let m = SymMatrix::diagonal_i64(&[-5, 0, 0]);
        let w = full_hull_witness(&a, &m).unwrap();
        assert!(m.add(&a.scale(&w.lambda)).signature() == Signature::new(3, 0, 0));
        assert!(w.residual < 1e-8);
    }

    #[test]
    fn sos_verify_basics() {
        let f = RationalPoly::parse("x^2", &["x"]).unwrap();
        let terms = vec![SosTerm {
            coeff: rat_i(1),
            poly: RationalPoly::parse("x", &["x"]).unwrap(),
        }];
        assert!(sos_verify(&f, &terms));
        let g = RationalPoly::parse("2 x^2", &["x"]).unwrap();
        assert!(!sos_verify(&g, &terms));
    }

    #[test]
    fn dual_routes_agree_for_rational_center() {
        // tangency-discriminant route vs parametrized-discriminant route
        let center = center_21();
        let tact = dual_sextic(&center);
        let curve = x2_curve(&center, 10).unwrap();
        let via_param =
            dual_of_parametrized_curve(curve.parametrization.as_ref().unwrap()).unwrap();
        assert!(tact.equal_up_to_scalar(&via_param));
    }

    #[test]
    fn twisted_cubic_dual_is_cubic_discriminant() {
        let forms = vec![
            RationalPoly::parse("w0^3", &W_VARS).unwrap(),
            RationalPoly::parse("w0^2 w1", &W_VARS).unwrap(),
            RationalPoly::parse("w0 w1^2", &W_VARS).unwrap(),
            RationalPoly::parse("w1^3", &W_VARS).unwrap(),
        ];
        let dual = dual_of_parametrized_curve(&ParametrizedCurve::new(forms)).unwrap();
        let vars = ["x0", "x1", "x2", "x3"];
        let classical = RationalPoly::parse(
            "18 x0 x1 x2 x3 - 4 x1^3 x3 + x1^2 x2^2 - 4 x0 x2^3 - 27 x0^2 x3^2",
            &vars,
        )
        .unwrap();
        assert!(dual.equal_up_to_scalar(&classical));
    }

    #[test]
    fn tangent_hyperplanes_satisfy_dual_sextic() {
        let center = center_21();
        let sextic = dual_sextic(&center);
        let curve = x2_curve(&center, 10).unwrap();
        let param = curve.parametrization.unwrap();
        for k in 0..20i64 {
            let w = rat(k - 10, 3);
            let space = tangent_hyperplane_space(&param, &w);
            assert_eq!(space.len(), 3);
            let x: Vec<Rational> = (0..5)
                .map(|i| {
                    &space[0][i] * rat_i(1 + k) + &space[1][i] * rat_i(2)
                        - &space[2][i] * rat_i(k + 3)
                })
                .collect();
            assert!(sextic.eval(&x).is_zero());
        }
    }

    #[test]
    fn surface_contained_in_dual_sextic() {
        let center = center_21();
        let surface = project_veronese(&center).unwrap();
        let sextic = dual_sextic(&center);
        let mut bindings = BTreeMap::new();
        for (i, f) in surface.forms.iter().enumerate() {
            bindings.insert(format!("x{i}"), f.clone());
        }
        assert!(sextic.substitute(&bindings).unwrap().is_zero());
    }
}
