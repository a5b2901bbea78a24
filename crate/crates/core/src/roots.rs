//! Exact real-root counting and isolation for univariate polynomials over Q,
//! by Sturm's theorem. The public entry point takes the crate's multivariate
//! type and requires it to be (effectively) univariate.

use num_traits::Zero;
use thiserror::Error;

use crate::interval::RatInterval;
use crate::poly::RationalPoly;
use crate::rational::{rat, rat_i, sign, Rational};
use crate::unipoly::UniPoly;

#[derive(Debug, Error)]
pub enum RootsError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate (variables {0:?} all occur)")]
    NotUnivariate(Vec<String>),
}

/// One isolated real root: a rational isolating interval, the exact value
/// when rational, and the multiplicity in the original (non-squarefree)
/// input.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub interval: RatInterval,
    pub exact: Option<Rational>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct RealRoots {
    /// Number of distinct real roots.
    pub count: usize,
    /// Disjoint isolating intervals in increasing order.
    pub roots: Vec<IsolatedRoot>,
}

/// Sign variations in the Sturm chain at `x`.
fn variations_at(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| sign(&p.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Count distinct real roots of a squarefree `f` in the half-open interval
/// `(a, b]`.
fn count_in(chain: &[UniPoly], a: &Rational, b: &Rational) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

/// Count and isolate the distinct real roots of `f` (squarefree part taken
/// internally; multiplicities recovered from the squarefree decomposition).
/// With `interval = Some((a, b))` only roots in `(a, b]` are reported.
pub fn sturm_real_roots(
    f: &RationalPoly,
    interval: Option<(Rational, Rational)>,
) -> Result<RealRoots, RootsError> {
    let uni = to_univariate(f)?;
    sturm_real_roots_uni(&uni, interval)
}

pub fn sturm_real_roots_uni(
    f: &UniPoly,
    interval: Option<(Rational, Rational)>,
) -> Result<RealRoots, RootsError> {
    if f.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(RealRoots {
            count: 0,
            roots: Vec::new(),
        });
    }
    let decomposition = f.squarefree_decomposition();
    let sf = f.squarefree_part();
    // Rational roots first, made exact (each is simple in sf).
    let (rational_roots, rest) = sf.extract_rational_roots();
    let in_range = |x: &Rational| match &interval {
        Some((a, b)) => a < x && x <= b,
        None => true,
    };
    let mult_of = |probe: &dyn Fn(&UniPoly) -> bool| -> usize {
        decomposition
            .iter()
            .find(|(_, g)| probe(g))
            .map(|(m, _)| *m)
            .unwrap_or(1)
    };
    let mut roots: Vec<IsolatedRoot> = rational_roots
        .iter()
        .filter(|(x, _)| in_range(x))
        .map(|(x, _)| IsolatedRoot {
            interval: RatInterval::point(x.clone()),
            exact: Some(x.clone()),
            multiplicity: mult_of(&|g: &UniPoly| g.eval(x).is_zero()),
        })
        .collect();

    if rest.degree().unwrap_or(0) > 0 {
        let chain = rest.sturm_chain();
        let bound = rest.root_bound();
        let (lo, hi) = match &interval {
            Some((a, b)) => (a.clone(), b.clone()),
            None => (-bound.clone(), bound.clone()),
        };
        if lo < hi {
            let total = count_in(&chain, &lo, &hi);
            let mut stack = vec![(lo, hi, total)];
            let mut isolated: Vec<RatInterval> = Vec::new();
            while let Some((a, b, k)) = stack.pop() {
                if k == 0 {
                    continue;
                }
                // Keep an interval only once it holds a single root of
                // `rest` and none of the extracted rational roots.
                if k == 1 && !rational_roots.iter().any(|(x, _)| a < *x && *x <= b) {
                    isolated.push(RatInterval::new(a, b));
                    continue;
                }
                let mid = (&a + &b) / rat_i(2);
                let left = count_in(&chain, &a, &mid);
                stack.push((a, mid.clone(), left));
                stack.push((mid, b, k - left));
            }
            for iv in isolated {
                let multiplicity = mult_of(&|g: &UniPoly| {
                    if g.degree().unwrap_or(0) == 0 {
                        return false;
                    }
                    let c = g.sturm_chain();
                    count_in(&c, &iv.lo, &iv.hi) == 1
                });
                let iv = refine_root(&rest, &iv, &rat(1, 8));
                roots.push(IsolatedRoot {
                    interval: iv,
                    exact: None,
                    multiplicity,
                });
            }
        }
    }
    roots.sort_by(|p, q| p.interval.lo.cmp(&q.interval.lo));
    // Tighten any interval that still touches its neighbor.
    for i in 1..roots.len() {
        while roots[i - 1].interval.hi > roots[i].interval.lo {
            if roots[i].exact.is_none() {
                let iv = roots[i].interval.clone();
                roots[i].interval = refine_root(&rest, &iv, &(iv.width() / rat_i(4)));
            }
            if roots[i - 1].interval.hi > roots[i].interval.lo && roots[i - 1].exact.is_none() {
                let prev = roots[i - 1].interval.clone();
                roots[i - 1].interval = refine_root(&rest, &prev, &(prev.width() / rat_i(4)));
            }
        }
    }
    Ok(RealRoots {
        count: roots.len(),
        roots,
    })
}

/// Shrink an isolating interval of a squarefree `f` below `width`.
pub fn refine_root(f: &UniPoly, iv: &RatInterval, width: &Rational) -> RatInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if f.eval(&hi).is_zero() {
        return RatInterval::point(hi);
    }
    if f.eval(&lo).is_zero() {
        return RatInterval::point(lo);
    }
    let slo = sign(&f.eval(&lo));
    debug_assert_ne!(slo, sign(&f.eval(&hi)), "not a bracketing interval");
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rat_i(2);
        let fm = f.eval(&mid);
        if fm.is_zero() {
            return RatInterval::point(mid);
        }
        if sign(&fm) == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Interpret `f` as univariate: at most one variable with positive degree.
pub fn to_univariate(f: &RationalPoly) -> Result<UniPoly, RootsError> {
    if f.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let active: Vec<String> = f
        .vars()
        .iter()
        .filter(|v| f.degree_in(v).unwrap_or(0) > 0)
        .cloned()
        .collect();
    if active.len() > 1 {
        return Err(RootsError::NotUnivariate(active));
    }
    match active.first() {
        None => Ok(UniPoly::constant(f.constant_value().unwrap())),
        Some(v) => {
            let coeffs = f.coefficients_in(v).expect("variable exists");
            Ok(UniPoly::new(
                coeffs
                    .into_iter()
                    .map(|c| c.constant_value().expect("univariate"))
                    .collect(),
            ))
        }
    }
}

/// Count sign changes of `f` over a fine rational grid on `[-b, b]`; a naive
/// oracle used by tests to cross-check the Sturm counts.
pub fn grid_sign_change_count(f: &UniPoly, steps: usize) -> usize {
    let b = f.root_bound();
    let mut last = 0i32;
    let mut changes = 0usize;
    for i in 0..=steps {
        let x = -&b + (&b + &b) * rat_i(i as i64) / rat_i(steps as i64);
        let s = sign(&f.eval(&x));
        if s == 0 {
            changes += 1; // exact grid hit
            last = 0;
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn uni(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn two_real_roots() {
        let f = RationalPoly::parse("t^2 - 2", &["t"]).unwrap();
        let r = sturm_real_roots(&f, None).unwrap();
        assert_eq!(r.count, 2);
        for root in &r.roots {
            assert!(root.exact.is_none());
            // interval brackets ±√2
            let lo = crate::rational::rat_to_f64(&root.interval.lo);
            let hi = crate::rational::rat_to_f64(&root.interval.hi);
            assert!((lo.abs() - 1.4142).abs() < 0.6 && (hi.abs() - 1.4142).abs() < 0.6);
        }
    }

    #[test]
    fn no_real_roots() {
        let f = RationalPoly::parse("t^2 + 1", &["t"]).unwrap();
        assert_eq!(sturm_real_roots(&f, None).unwrap().count, 0);
    }

    #[test]
    fn zero_poly_rejected() {
        let f = RationalPoly::zero(&["t"]);
        assert!(matches!(
            sturm_real_roots(&f, None),
            Err(RootsError::ZeroPolynomial)
        ));
    }

    #[test]
    fn multiplicities_reported() {
        // (t-1)^2 (t+2)
        let f = uni(&[2, -3, 0, 1]);
        let r = sturm_real_roots_uni(&f, None).unwrap();
        assert_eq!(r.count, 2);
        let mults: Vec<(Option<Rational>, usize)> = r
            .roots
            .iter()
            .map(|x| (x.exact.clone(), x.multiplicity))
            .collect();
        assert!(mults.contains(&(Some(rat(-2, 1)), 1)));
        assert!(mults.contains(&(Some(rat(1, 1)), 2)));
    }

    #[test]
    fn interval_restriction() {
        let f = uni(&[-2, 0, 1]); // roots ±√2
        let r = sturm_real_roots_uni(&f, Some((rat(0, 1), rat(2, 1)))).unwrap();
        assert_eq!(r.count, 1);
    }

    #[test]
    fn disjoint_isolating_intervals() {
        // roots at 0, 1, 2, 3 (close together)
        let f = uni(&[0, 1]).mul(&uni(&[-1, 1])).mul(&uni(&[-2, 1])).mul(&uni(&[-3, 1]));
        let r = sturm_real_roots_uni(&f, None).unwrap();
        assert_eq!(r.count, 4);
        for w in r.roots.windows(2) {
            assert!(w[0].interval.hi <= w[1].interval.lo);
        }
    }

    #[test]
    fn refine_shrinks() {
        let f = uni(&[-2, 0, 1]);
        let r = sturm_real_roots_uni(&f, Some((rat(0, 1), rat(2, 1)))).unwrap();
        let iv = refine_root(&f, &r.roots[0].interval, &rat(1, 1024));
        assert!(iv.width() <= rat(1, 1024));
        assert!(iv.lo <= rat(1448, 1024) && rat(1448, 1024) <= iv.hi || iv.width() < rat(1, 500));
    }
}
