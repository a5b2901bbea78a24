//! Dense univariate polynomials over Q: Euclidean arithmetic, gcd,
//! squarefree decomposition and the Sturm-chain plumbing used by the
//! real-root isolation in [`crate::roots`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_i, Rational};

/// Coefficients in ascending order; no trailing zeros; `vec![]` is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly(pub Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.0.iter().rev() {
            acc = acc * x + crate::rational::rat_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_i(i as i64))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly(self.0.iter().map(|k| k * c).collect())
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let d = divisor.0.len() - 1;
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        let lead = divisor.leading().unwrap().clone();
        for k in (d..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.0.iter().enumerate() {
                let idx = k - d + j;
                let delta = dc * &c;
                rem[idx] -= delta;
            }
            quot[k - d] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Rescale so the coefficients are coprime integers with positive leading
    /// coefficient. Keeps Sturm-chain entries small; the sign pattern of the
    /// chain is unchanged only when callers preserve signs, so this flips by
    /// a positive factor only.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.0 {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.0 {
            num_gcd = num_gcd.gcd((c * Rational::from(denom_lcm.clone())).numer());
        }
        let factor = Rational::new(denom_lcm, num_gcd);
        // factor is positive by construction
        self.scale(&factor)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&(Rational::one() / lead))
    }

    /// Squarefree part (`self / gcd(self, self')`).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun squarefree decomposition: returns `(m, f_m)` pairs with
    /// `self = lc * prod f_m^m`, each `f_m` monic squarefree.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, UniPoly)> {
        assert!(!self.is_zero());
        if self.degree() == Some(0) {
            return Vec::new();
        }
        let f = {
            let lead = self.leading().unwrap().clone();
            self.scale(&(Rational::one() / lead))
        };
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let (mut b, r) = f.div_rem(&a);
        debug_assert!(r.is_zero());
        let (c0, r) = fp.div_rem(&a);
        debug_assert!(r.is_zero());
        let mut c = c0.sub(&b.derivative());
        let mut out = Vec::new();
        let mut m = 1usize;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&c);
            if a.degree().unwrap_or(0) > 0 {
                out.push((m, a.clone()));
            }
            let (nb, r) = b.div_rem(&a);
            debug_assert!(r.is_zero());
            b = nb;
            let (q, r) = c.div_rem(&a);
            debug_assert!(r.is_zero());
            c = q.sub(&b.derivative());
            m += 1;
        }
        out
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().expect("nonzero polynomial");
        let mut max = Rational::zero();
        for c in &self.0[..self.0.len() - 1] {
            let a = (c / lead).abs();
            if a > max {
                max = a;
            }
        }
        max + rat_i(1)
    }

    /// Sturm chain of the squarefree-normalized input (caller supplies
    /// whatever polynomial it wants the chain of).
    pub fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.primitive()];
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d.primitive());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        chain
    }

    /// Extract all rational roots together with multiplicities, returning the
    /// deflated polynomial. Uses the rational root theorem on the primitive
    /// integer form, enumerating divisors by trial division; callers get the
    /// remaining (rational-root-free) factor back.
    pub fn extract_rational_roots(&self) -> (Vec<(Rational, usize)>, UniPoly) {
        let mut f = self.clone();
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return (roots, f);
        }
        // root at 0
        let mut zero_mult = 0usize;
        while f.0.first().is_some_and(|c| c.is_zero()) && f.0.len() > 1 {
            f = UniPoly::new(f.0[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        let prim = f.primitive();
        if prim.degree().unwrap_or(0) == 0 {
            return (roots, f);
        }
        let a0 = prim.0[0].numer().clone();
        let an = prim.leading().unwrap().numer().clone();
        let ps = small_divisors(&a0);
        let qs = small_divisors(&an);
        let (mut ps, mut qs) = match (ps, qs) {
            (Some(p), Some(q)) => (p, q),
            _ => return (roots, f), // coefficients too large to enumerate
        };
        ps.sort();
        ps.dedup();
        qs.sort();
        qs.dedup();
        let mut g = f.clone();
        for p in &ps {
            for q in &qs {
                for s in [1i64, -1] {
                    let cand = Rational::new(p * BigInt::from(s), q.clone());
                    let mut mult = 0usize;
                    while g.degree().unwrap_or(0) >= 1 && g.eval(&cand).is_zero() {
                        let lin = UniPoly::new(vec![-cand.clone(), Rational::one()]);
                        let (quot, r) = g.div_rem(&lin);
                        debug_assert!(r.is_zero());
                        g = quot;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
        }
        (roots, g)
    }
}

/// All positive divisors of `n` when `|n|` factors by trial division below
/// 2^20; `None` when the cofactor is too large to enumerate reliably.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    if m.is_zero() {
        return Some(vec![BigInt::one()]);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1u64 << 20);
    while &d * &d <= m && d <= limit {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if !m.is_one() {
        if m > BigInt::from(u64::MAX) {
            return None;
        }
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > 4096 {
            return None;
        }
    }
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn div_rem_exact() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let g = UniPoly::from_i64(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, UniPoly::from_i64(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        // f = (x-1)^2 (x+2)
        let f = UniPoly::from_i64(&[2, -3, 0, 1]);
        let sf = f.squarefree_part();
        assert_eq!(sf.primitive(), UniPoly::from_i64(&[-2, 1, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0].0, 1);
        assert_eq!(dec[1].0, 2);
    }

    #[test]
    fn rational_roots() {
        // 2(x - 1/2)(x + 3)^2 x = 2x^4 + 11x^3 + 12x^2 - 9x ... build directly
        let lin = UniPoly::new(vec![rat(-1, 2), rat_i(1)]);
        let sq = UniPoly::from_i64(&[3, 1]);
        let f = lin
            .mul(&sq)
            .mul(&sq)
            .mul(&UniPoly::from_i64(&[0, 1]))
            .scale(&rat_i(2));
        let (roots, rest) = f.extract_rational_roots();
        assert_eq!(rest.degree(), Some(0));
        let mut got: Vec<(Rational, usize)> = roots;
        got.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            got,
            vec![(rat_i(-3), 2), (rat_i(0), 1), (rat(1, 2), 1)]
        );
    }

    #[test]
    fn root_bound_contains_roots() {
        let f = UniPoly::from_i64(&[-6, 1, 1]); // (x+3)(x-2)
        let b = f.root_bound();
        assert!(b >= rat_i(3));
    }
}
