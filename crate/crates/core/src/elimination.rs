//! Certified computation of the common projective zeros of a family of
//! ternary forms, by pairwise resultants plus exact line-by-line lifting.
//!
//! The procedure is sound in any coordinate frame: the roots of the gcd of
//! the pairwise resultants dominate the projections of all common zeros once
//! the frame puts every form in "monic" position (nonzero coefficient of the
//! top power of the eliminated variable). Frames are only retried when a gcd
//! or a lift fails to split into rational factors; exhausting the frame
//! budget returns `Undecided` rather than an unproven answer.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::matrix::{primitive_vector, Mat};
use crate::poly::RationalPoly;
use crate::rational::{rat_i, Rational};
use crate::roots::to_univariate;
use crate::unipoly::UniPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElimError {
    #[error("two of the forms share a common component")]
    CommonComponent,
    #[error("could not certify the zero set within the frame budget")]
    Undecided,
    #[error("need at least two ternary forms in the same three variables")]
    BadInput,
}

/// A point of P^2 with coprime integer coordinates.
pub type ProjPoint = Vec<Rational>;

fn shear_frames() -> Vec<Mat> {
    let mut frames = vec![Mat::identity(3)];
    for (a, b) in [
        (1i64, 0i64),
        (0, 1),
        (1, 1),
        (-1, 1),
        (1, -2),
        (2, 1),
        (-2, -3),
        (3, -1),
    ] {
        let mut t = Mat::identity(3);
        t[(0, 2)] = rat_i(a);
        t[(1, 2)] = rat_i(b);
        frames.push(t.clone());
        // also mix the two projection coordinates
        let mut s = t;
        s[(0, 1)] = rat_i(1);
        frames.push(s);
    }
    frames
}

fn transform(f: &RationalPoly, t: &Mat, xs: &[String], ys: &[&str]) -> RationalPoly {
    let mut bindings = BTreeMap::new();
    for (i, x) in xs.iter().enumerate() {
        let mut sub = RationalPoly::zero(ys);
        for (j, y) in ys.iter().enumerate() {
            sub = sub.add(&RationalPoly::var(ys, y).unwrap().scale(&t[(i, j)]));
        }
        bindings.insert(x.clone(), sub);
    }
    f.substitute(&bindings).expect("all variables bound")
}

/// Restrict `f` to the line `[a : b : z]`, as a univariate polynomial in z.
fn restrict_to_line(f: &RationalPoly, a: &Rational, b: &Rational) -> UniPoly {
    let vars = f.vars().to_vec();
    let mut bindings = BTreeMap::new();
    bindings.insert(
        vars[0].clone(),
        RationalPoly::constant(&["z"], a.clone()),
    );
    bindings.insert(
        vars[1].clone(),
        RationalPoly::constant(&["z"], b.clone()),
    );
    bindings.insert(vars[2].clone(), RationalPoly::var(&["z"], "z").unwrap());
    let restricted = f.substitute(&bindings).expect("bound");
    if restricted.is_zero() {
        return UniPoly::zero();
    }
    to_univariate(&restricted).expect("univariate in z")
}

/// All rational roots `[y0 : y1]` of a binary form, as projective pairs;
/// `None` when an irrational factor of positive degree remains.
fn binary_form_rational_roots(g: &RationalPoly) -> Option<Vec<(Rational, Rational)>> {
    let vars = g.vars().to_vec();
    assert_eq!(vars.len(), 2);
    let total = g.total_degree().unwrap_or(0) as usize;
    let mut bindings = BTreeMap::new();
    bindings.insert(
        vars[0].clone(),
        RationalPoly::one(&["t"]),
    );
    bindings.insert(vars[1].clone(), RationalPoly::var(&["t"], "t").unwrap());
    let dehom = g.substitute(&bindings).expect("bound");
    let uni = to_univariate(&dehom).expect("univariate");
    let deg_drop = total - uni.degree().unwrap_or(0);
    let mut out = Vec::new();
    if deg_drop > 0 {
        out.push((Rational::zero(), Rational::from_integer(1.into()))); // [0 : 1]
    }
    let (roots, rest) = uni.extract_rational_roots();
    if rest.degree().unwrap_or(0) > 0 {
        return None;
    }
    for (r, _) in roots {
        out.push((Rational::from_integer(1.into()), r)); // [1 : t]
    }
    Some(out)
}

/// Certified common projective zeros of `forms` (all in the same three
/// variables). Returns the exact finite zero set, with points normalized to
/// coprime integer coordinates and sorted.
pub fn common_projective_zeros(forms: &[RationalPoly]) -> Result<Vec<ProjPoint>, ElimError> {
    if forms.len() < 2 || forms.iter().any(|f| f.vars().len() != 3 || f.is_zero()) {
        return Err(ElimError::BadInput);
    }
    let xs = forms[0].vars().to_vec();
    if forms.iter().any(|f| f.vars() != xs.as_slice()) {
        return Err(ElimError::BadInput);
    }
    let ys = ["y0", "y1", "y2"];
    let mut every_pair_degenerate = true;
    'frames: for t in shear_frames() {
        let tf: Vec<RationalPoly> = forms.iter().map(|f| transform(f, &t, &xs, &ys)).collect();
        // monic position: a form is usable for resultants when it is nonzero
        // at (0,0,1), so its top power of y2 has a constant coefficient
        let e3 = [Rational::zero(), Rational::zero(), rat_i(1)];
        let usable: Vec<usize> = (0..tf.len())
            .filter(|&i| !tf[i].eval(&e3).is_zero())
            .collect();
        if usable.len() < 2 {
            continue 'frames;
        }
        // gcd over all nonzero pairwise resultants; a vanishing resultant
        // means that pair shares a factor, which other pairs may still
        // resolve
        let mut g: Option<RationalPoly> = None;
        for (a, &i) in usable.iter().enumerate() {
            for &j in &usable[a + 1..] {
                let r = crate::resultant::resultant(&tf[i], &tf[j], "y2")
                    .map_err(|_| ElimError::BadInput)?;
                if r.is_zero() {
                    continue;
                }
                g = Some(match g {
                    None => r,
                    Some(prev) => binary_gcd(&prev, &r),
                });
            }
        }
        let Some(g) = g else {
            continue 'frames; // every usable pair shares a factor
        };
        every_pair_degenerate = false;
        let g2 = drop_unused_var(&g, "y2");
        if g2.total_degree().unwrap_or(0) == 0 {
            return Ok(Vec::new()); // no candidate lines, empty intersection
        }
        let Some(lines) = binary_form_rational_roots(&g2) else {
            continue 'frames;
        };
        let mut points: Vec<ProjPoint> = Vec::new();
        for (a, b) in lines {
            let restrictions: Vec<UniPoly> = tf
                .iter()
                .map(|f| restrict_to_line(f, &a, &b))
                .collect();
            if restrictions.iter().any(|r| r.is_zero()) {
                // a whole line inside one form but candidates still finite:
                // take the gcd over the nonzero ones
            }
            let nonzero: Vec<&UniPoly> = restrictions.iter().filter(|r| !r.is_zero()).collect();
            if nonzero.is_empty() {
                continue 'frames; // line contained in every form
            }
            let mut common = nonzero[0].clone();
            for r in &nonzero[1..] {
                common = common.gcd(r);
                if common.degree() == Some(0) {
                    break;
                }
            }
            if common.degree() == Some(0) {
                continue; // no common zero over this line
            }
            let (zs, rest) = common.extract_rational_roots();
            if rest.degree().unwrap_or(0) > 0 {
                continue 'frames;
            }
            for (z, _) in zs {
                let y = vec![a.clone(), b.clone(), z];
                let x = t.mul_vec(&y);
                points.push(primitive_vector(&x));
            }
        }
        points.sort();
        points.dedup();
        return Ok(points);
    }
    if every_pair_degenerate {
        Err(ElimError::CommonComponent)
    } else {
        Err(ElimError::Undecided)
    }
}

/// gcd of two binary forms via the dehomogenization plus the power of the
/// second variable dividing both.
fn binary_gcd(f: &RationalPoly, g: &RationalPoly) -> RationalPoly {
    // Interpret both as polynomials in (y0, y1) only.
    let f2 = drop_unused_var(f, "y2");
    let g2 = drop_unused_var(g, "y2");
    let vars = f2.vars().to_vec();
    let vrefs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let df = f2.total_degree().unwrap_or(0);
    let dg = g2.total_degree().unwrap_or(0);
    let mut bindings = BTreeMap::new();
    bindings.insert(vars[0].clone(), RationalPoly::one(&["t"]));
    bindings.insert(vars[1].clone(), RationalPoly::var(&["t"], "t").unwrap());
    let fu = to_univariate(&f2.substitute(&bindings).expect("bound")).expect("univariate");
    let gu = to_univariate(&g2.substitute(&bindings).expect("bound")).expect("univariate");
    let h = fu.gcd(&gu);
    // power of y0 dividing both = degree drop under y0 = 1
    let k = (df as usize - fu.degree().unwrap_or(0)).min(dg as usize - gu.degree().unwrap_or(0));
    // rehomogenize h and restore the common y0^k factor
    let mut out = RationalPoly::zero(&vrefs);
    let dh = h.degree().unwrap_or(0);
    for (i, c) in h.0.iter().enumerate() {
        let mut exp = vec![0u32; vars.len()];
        exp[0] = (dh - i + k) as u32;
        exp[1] = i as u32;
        out.add_term(exp, c.clone());
    }
    out
}

fn drop_unused_var(f: &RationalPoly, var: &str) -> RationalPoly {
    f.remove_unused_var(var)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> RationalPoly {
        RationalPoly::parse(text, &["x0", "x1", "x2"]).unwrap()
    }

    #[test]
    fn two_conics_four_points() {
        // x0^2 - x1^2 and x0^2 - x2^2 meet at [1,±1,±1]
        let f = p("x0^2 - x1^2");
        let g = p("x0^2 - x2^2");
        let pts = common_projective_zeros(&[f, g]).unwrap();
        assert_eq!(pts.len(), 4);
        for pt in &pts {
            assert_eq!(&pt[0] * &pt[0], &pt[1] * &pt[1]);
            assert_eq!(&pt[0] * &pt[0], &pt[2] * &pt[2]);
        }
    }

    #[test]
    fn three_conics_two_points() {
        // all three vanish exactly at [1,-1,0] and [1,0,-1]
        let c1 = p("2 x0^2 + x0 x1 + 2 x0 x2 - x1^2");
        let c2 = p("x0^2 - x1^2 - x2^2");
        let c3 = p("x0^2 - 2 x0 x2 - x1^2 - x1 x2 - 3 x2^2");
        let pts = common_projective_zeros(&[c1, c2, c3]).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&vec![rat_i(1), rat_i(-1), rat_i(0)]));
        assert!(pts.contains(&vec![rat_i(1), rat_i(0), rat_i(-1)]));
    }

    #[test]
    fn common_component_detected() {
        let f = p("x0^2 - x1^2");
        let g = p("x0^2 + x0 x1 - x0 x2 - x1 x2"); // shares (x0 + x1)? check: (x0+x1)(x0-x2)
        let r = common_projective_zeros(&[f, g]);
        assert_eq!(r, Err(ElimError::CommonComponent));
    }

    #[test]
    fn empty_intersection() {
        // x0^2 + x1^2 + x2^2 and x0 x1 share no projective zero over Q...
        // over C they do; use forms with genuinely empty common zero set:
        // x0^2, x1^2, x2^2 have none.
        let f = p("x0^2");
        let g = p("x1^2");
        let h = p("x2^2");
        let pts = common_projective_zeros(&[f, g, h]).unwrap();
        assert!(pts.is_empty());
    }
}
