//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! `RationalPoly` is the universal carrier for ideals, forms, resultants and
//! discriminants throughout the crate. Invariants: no zero coefficients are
//! stored and every exponent vector has length equal to the number of
//! variables. The text format is `coeff * x0^a0 x1^a1 ...` with terms joined
//! by ` + `; the JSON format is `{"vars": [...], "terms": [{"exp": [...],
//! "coeff": "p/q"}]}` with rationals as strings.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::{parse_rational, rat_i, rational_to_string, Rational};

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("variable `{0}` is not bound by the substitution")]
    UnboundVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error in polynomial text: {0}")]
    Parse(String),
}

/// Sparse multivariate polynomial over Q.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RationalPoly {
    pub fn zero(vars: &[&str]) -> Self {
        RationalPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_owned(vars: Vec<String>) -> Self {
        RationalPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, rat_i(1))
    }

    /// The monomial `x_i` in the given variable list.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero(vars);
        let i = p
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exp = vec![0; p.vars.len()];
        exp[i] = 1;
        p.terms.insert(exp, rat_i(1));
        Ok(p)
    }

    /// Add `coeff * prod x_i^exp_i` to the polynomial.
    pub fn add_term(&mut self, exp: Vec<u32>, coeff: Rational) {
        assert_eq!(exp.len(), self.vars.len(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let new = match self.terms.get(&exp) {
            Some(old) => old + &coeff,
            None => coeff,
        };
        if new.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, new);
        }
    }

    pub fn from_terms(vars: &[&str], terms: &[(Vec<u32>, Rational)]) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.var_index(var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// True iff all terms have the same total degree (zero counts as a form).
    pub fn is_form(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn neg(&self) -> Self {
        RationalPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_owned(self.vars.clone());
        }
        RationalPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Bring two polynomials onto a common variable list (the sorted union),
    /// only reindexing when the lists differ.
    pub fn align(a: &RationalPoly, b: &RationalPoly) -> (RationalPoly, RationalPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut union: Vec<String> = a.vars.clone();
        for v in &b.vars {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        union.sort();
        (a.reindex(&union), b.reindex(&union))
    }

    fn reindex(&self, new_vars: &[String]) -> RationalPoly {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| new_vars.iter().position(|w| w == v).expect("var in union"))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; new_vars.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] = k;
            }
            terms.insert(ne, c.clone());
        }
        RationalPoly {
            vars: new_vars.to_vec(),
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::align(self, other);
        for (e, c) in b.terms {
            let entry = a.terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::align(self, other);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        RationalPoly {
            vars: a.vars,
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn derivative(&self, var: &str) -> Result<Self, PolyError> {
        let i = self
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero_owned(self.vars.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * rat_i(e[i] as i64));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut t = crate::rational::rat_to_f64(c);
            for (i, &k) in e.iter().enumerate() {
                t *= point[i].powi(k as i32);
            }
            acc += t;
        }
        acc
    }

    /// Compose with `bindings`: every variable of `self` must be bound.
    /// The result lives on the (aligned) variable list of the bindings.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, RationalPoly>,
    ) -> Result<RationalPoly, PolyError> {
        for v in &self.vars {
            if self.degree_in(v).unwrap_or(0) > 0 && !bindings.contains_key(v) {
                return Err(PolyError::UnboundVariable(v.clone()));
            }
        }
        // Align all binding targets onto one variable list.
        let mut target_vars: Vec<String> = Vec::new();
        for b in bindings.values() {
            for v in b.vars() {
                if !target_vars.contains(v) {
                    target_vars.push(v.clone());
                }
            }
        }
        target_vars.sort();
        if target_vars.is_empty() {
            target_vars.push("_".to_string());
        }
        let aligned: BTreeMap<&String, RationalPoly> = bindings
            .iter()
            .map(|(k, v)| (k, v.reindex(&target_vars)))
            .collect();
        let one = RationalPoly {
            vars: target_vars.clone(),
            terms: BTreeMap::from([(vec![0; target_vars.len()], rat_i(1))]),
        };
        // Cache powers of each binding.
        let mut powers: BTreeMap<&String, Vec<RationalPoly>> = BTreeMap::new();
        let mut out = RationalPoly::zero_owned(target_vars.clone());
        for (e, c) in &self.terms {
            let mut term = one.scale(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = &self.vars[i];
                let b = aligned.get(name).expect("bound");
                let cache = powers.entry(name).or_insert_with(|| vec![one.clone()]);
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap().mul(b);
                    cache.push(next);
                }
                term = term.mul(&cache[k as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Coefficients of `var^0, var^1, ..., var^d` as polynomials in the same
    /// variable list (with the `var` exponent zeroed).
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<RationalPoly>, PolyError> {
        let i = self
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero_owned(self.vars.clone()); d + 1];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut ne = e.clone();
            ne[i] = 0;
            out[k].add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Leading coefficient with respect to `var`.
    pub fn leading_coefficient_in(&self, var: &str) -> Result<RationalPoly, PolyError> {
        let coeffs = self.coefficients_in(var)?;
        Ok(coeffs.into_iter().last().unwrap_or_else(|| Self::zero_owned(self.vars.clone())))
    }

    /// Graded-lex leading term (used by exact division).
    fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            da.cmp(&db).then_with(|| ea.cmp(eb))
        })
    }

    /// Exact division: returns `None` unless `other` divides `self` exactly.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (mut rem, div) = Self::align(self, other);
        let vars = rem.vars.clone();
        let mut quot = Self::zero_owned(vars);
        let (lt_e, lt_c) = {
            let (e, c) = div.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            let mut qe = Vec::with_capacity(re.len());
            for (a, b) in re.iter().zip(&lt_e) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = rc / &lt_c;
            let mut mono = Self::zero_owned(rem.vars.clone());
            mono.add_term(qe, qc);
            quot = quot.add(&mono);
            rem = rem.sub(&mono.mul(&div));
        }
        Some(quot)
    }

    /// Divide by the gcd of the coefficient numerators over the lcm of the
    /// denominators so that the coefficients become coprime integers; the
    /// leading (graded-lex) coefficient is made positive.
    pub fn primitive_part(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::from(1);
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::from(0);
        for c in self.terms.values() {
            let scaled = c * Rational::from(denom_lcm.clone());
            num_gcd = num_gcd.gcd(scaled.numer());
        }
        let mut factor = Rational::new(denom_lcm, num_gcd);
        if let Some((_, lc)) = self.leading_term() {
            if (lc * &factor).is_negative() {
                factor = -factor;
            }
        }
        self.scale(&factor)
    }

    /// `self == c * other` for some nonzero rational `c` (variable lists are
    /// aligned first, so unused variables do not matter).
    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (a, b) = Self::align(self, other);
        let (pa, pb) = (a.primitive_part(), b.primitive_part());
        pa == pb || pa == pb.neg()
    }

    /// Drop `var` from the variable list when it no longer occurs.
    pub fn remove_unused_var(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        if self.degree_in(var).unwrap_or(0) > 0 {
            return self.clone();
        }
        let keep: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = Self::zero_owned(keep);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(i);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Parse the crate text format; see module docs.
    pub fn parse(text: &str, vars: &[&str]) -> Result<Self, PolyError> {
        let mut p = Self::zero(vars);
        // Split on '+' and on '-' (keeping the sign with the term).
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in text.chars() {
            match ch {
                '+' => {
                    if !cur.trim().is_empty() {
                        terms.push(cur.clone());
                    }
                    cur.clear();
                }
                '-' if !matches!(prev, Some('^') | Some('/')) && !cur.trim().is_empty() => {
                    terms.push(cur.clone());
                    cur = "-".to_string();
                }
                _ => cur.push(ch),
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        if !cur.trim().is_empty() {
            terms.push(cur);
        }
        for t in terms {
            let (exp, coeff) = Self::parse_term(&t, vars)?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }

    fn parse_term(term: &str, vars: &[&str]) -> Result<(Vec<u32>, Rational), PolyError> {
        let cleaned = term.replace('*', " ");
        let mut coeff = rat_i(1);
        let mut negate = false;
        let mut exp = vec![0u32; vars.len()];
        let mut seen_anything = false;
        for tok in cleaned.split_whitespace() {
            let mut tok = tok;
            if tok == "-" {
                negate = !negate;
                continue;
            }
            if let Some(rest) = tok.strip_prefix('-') {
                if !seen_anything {
                    negate = !negate;
                    tok = rest;
                } else {
                    return Err(PolyError::Parse(format!("unexpected `-` in `{term}`")));
                }
            }
            seen_anything = true;
            if tok.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let c = parse_rational(tok)
                    .map_err(|e| PolyError::Parse(format!("bad coefficient `{tok}`: {e}")))?;
                coeff *= c;
                continue;
            }
            let (name, power) = match tok.split_once('^') {
                Some((n, p)) => {
                    let k: u32 = p
                        .parse()
                        .map_err(|_| PolyError::Parse(format!("bad exponent in `{tok}`")))?;
                    (n, k)
                }
                None => (tok, 1),
            };
            let i = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            exp[i] += power;
        }
        if !seen_anything {
            return Err(PolyError::Parse(format!("empty term in `{term}`")));
        }
        if negate {
            coeff = -coeff;
        }
        Ok((exp, coeff))
    }

    /// Terms in graded-lex order (highest first), the order used for the
    /// canonical text form.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut s = String::new();
                let is_const = e.iter().all(|&k| k == 0);
                if is_const || !c.is_one() {
                    s.push_str(&rational_to_string(c));
                    if !is_const {
                        s.push_str(" * ");
                    }
                }
                let mut first = true;
                for (i, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    if !first {
                        s.push(' ');
                    }
                    first = false;
                    s.push_str(&self.vars[i]);
                    if k > 1 {
                        s.push_str(&format!("^{k}"));
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                exp: e.clone(),
                coeff: rational_to_string(c),
            })
            .collect();
        PolyJson {
            vars: self.vars.clone(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut p = RationalPoly::zero_owned(raw.vars);
        for t in raw.terms {
            if t.exp.len() != p.vars.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(text: &str, vars: &[&str]) -> RationalPoly {
        RationalPoly::parse(text, vars).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let vars = ["x", "y"];
        let a = p("x + y", &vars);
        let b = p("x - y", &vars);
        assert_eq!(a.mul(&b), p("x^2 - y^2", &vars));
    }

    #[test]
    fn additive_identity() {
        let vars = ["x", "y"];
        let f = p("3/2 x^2 y - x + 7", &vars);
        assert_eq!(f.add(&RationalPoly::zero(&vars)), f);
    }

    #[test]
    fn monomial_product() {
        let vars = ["t0", "t1", "t2"];
        let a = p("t0^2", &vars);
        let b = p("t2^2", &vars);
        assert_eq!(a.mul(&b), p("t0^2 t2^2", &vars));
    }

    #[test]
    fn mul_degree_adds() {
        let vars = ["x", "y"];
        let a = p("x^2 y + 1", &vars);
        let b = p("x y^3 - y", &vars);
        assert_eq!(
            a.mul(&b).total_degree(),
            Some(a.total_degree().unwrap() + b.total_degree().unwrap())
        );
    }

    #[test]
    fn substitute_identity_and_collapse() {
        let vars = ["x", "y"];
        let f = p("x^2 + y^2", &vars);
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), p("t", &["t"]));
        b.insert("y".to_string(), p("t", &["t"]));
        assert_eq!(f.substitute(&b).unwrap(), p("2 t^2", &["t"]));

        let x = p("x0", &["x0"]);
        let mut ident = BTreeMap::new();
        ident.insert("x0".to_string(), x.clone());
        assert_eq!(x.substitute(&ident).unwrap(), x);
    }

    #[test]
    fn substitute_requires_bindings() {
        let f = p("x + y", &["x", "y"]);
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), p("t", &["t"]));
        assert!(matches!(
            f.substitute(&b),
            Err(PolyError::UnboundVariable(_))
        ));
    }

    #[test]
    fn exact_division() {
        let vars = ["x", "y"];
        let a = p("x^2 - y^2", &vars);
        let b = p("x - y", &vars);
        assert_eq!(a.div_exact(&b).unwrap(), p("x + y", &vars));
        assert!(p("x^2 + y", &vars).div_exact(&b).is_none());
    }

    #[test]
    fn primitive_part_and_scalar_equality() {
        let vars = ["x"];
        let a = p("2/3 x^2 + 4/3 x", &vars);
        assert_eq!(a.primitive_part(), p("x^2 + 2 x", &vars));
        assert!(a.equal_up_to_scalar(&p("-3 x^2 - 6 x", &vars)));
        assert!(!a.equal_up_to_scalar(&p("x^2 + x", &vars)));
    }

    #[test]
    fn display_parse_roundtrip() {
        let vars = ["x0", "x1", "x2"];
        let f = p("-4 x0 x2^3 + 1/2 x1^2 - x2 + 5", &vars);
        let back = RationalPoly::parse(&f.to_string(), &vars).unwrap();
        assert_eq!(f, back);
        assert_eq!(f.eval(&[rat(1, 1), rat(2, 1), rat(-1, 2)]), {
            // -4*1*(-1/8) + 1/2*4 + 1/2 + 5 = 1/2 + 2 + 1/2 + 5
            rat(8, 1)
        });
    }

    #[test]
    fn json_roundtrip() {
        let vars = ["x", "y"];
        let f = p("x^2 y - 7/3", &vars);
        let s = serde_json::to_string(&f).unwrap();
        let back: RationalPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn form_predicate() {
        let vars = ["x", "y"];
        assert!(p("x^2 + x y", &vars).is_form());
        assert!(!p("x^2 + x", &vars).is_form());
        assert!(RationalPoly::zero(&vars).is_form());
    }
}
