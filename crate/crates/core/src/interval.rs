//! Exact rational interval arithmetic, used to certify signs of polynomial
//! expressions at algebraic numbers given by isolating intervals.

use num_traits::Zero;

use crate::rational::Rational;
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= Rational::zero() && Rational::zero() <= self.hi
    }

    /// `Some(1)` / `Some(-1)` when the sign is certain, `None` otherwise.
    pub fn sign(&self) -> Option<i32> {
        if self.lo > Rational::zero() {
            Some(1)
        } else if self.hi < Rational::zero() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        self.mul(&RatInterval::point(c.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        crate::rational::rat_to_f64(&self.midpoint())
    }
}

/// Horner evaluation of a univariate polynomial over an interval.
pub fn eval_poly_interval(f: &UniPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in f.0.iter().rev() {
        acc = acc.mul(x).add(&RatInterval::point(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat_i(-2), rat_i(3));
        let b = RatInterval::new(rat_i(1), rat_i(2));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_i(-4));
        assert_eq!(p.hi, rat_i(6));
    }

    #[test]
    fn poly_eval_encloses() {
        // f = x^2 - 2 on [1, 3/2]: true range [-1, 1/4]
        let f = UniPoly::from_i64(&[-2, 0, 1]);
        let x = RatInterval::new(rat_i(1), rat(3, 2));
        let y = eval_poly_interval(&f, &x);
        assert!(y.lo <= rat_i(-1) && y.hi >= rat(1, 4));
        assert!(y.sign().is_none());
    }
}
