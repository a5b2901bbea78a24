//! Classical resultants via the Sylvester matrix, evaluated with
//! fraction-free Bareiss elimination over the polynomial coefficient ring,
//! and the normalized discriminant built on top.

use thiserror::Error;

use crate::poly::RationalPoly;
use crate::rational::rat_i;

#[derive(Debug, Error)]
pub enum ResultantError {
    #[error("zero polynomial input")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("discriminant requires degree >= 2 in `{0}`")]
    DegreeTooLow(String),
}

/// Sylvester matrix of `f` and `g` with respect to `var`; entries are
/// polynomials in the remaining variables.
pub fn sylvester_matrix(
    f: &RationalPoly,
    g: &RationalPoly,
    var: &str,
) -> Result<Vec<Vec<RationalPoly>>, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroPolynomial);
    }
    let fc = f
        .coefficients_in(var)
        .map_err(|_| ResultantError::UnknownVariable(var.to_string()))?;
    let gc = g
        .coefficients_in(var)
        .map_err(|_| ResultantError::UnknownVariable(var.to_string()))?;
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let zero = RationalPoly::zero_owned(f.vars().to_vec());
    let mut rows = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(rows)
}

/// Fraction-free Bareiss determinant of a square matrix of polynomials.
/// Every division performed is exact.
pub fn bareiss_det(mut m: Vec<Vec<RationalPoly>>) -> RationalPoly {
    let n = m.len();
    if n == 0 {
        panic!("empty matrix");
    }
    let vars: Vec<String> = m[0][0].vars().to_vec();
    let one = RationalPoly::constant(
        &vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        rat_i(1),
    );
    let mut sign = 1i64;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return RationalPoly::zero_owned(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        for i in k + 1..n {
            m[i][k] = RationalPoly::zero_owned(vars.clone());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Classical resultant of `f` and `g` with respect to `var`. Degenerate
/// convention: when `deg_var f = 0`, returns `f^{deg_var g}` (and
/// symmetrically); when both degrees are zero the result is 1.
pub fn resultant(
    f: &RationalPoly,
    g: &RationalPoly,
    var: &str,
) -> Result<RationalPoly, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroPolynomial);
    }
    let (f, g) = RationalPoly::align(f, g);
    let df = f.degree_in(var).unwrap_or(0);
    let dg = g.degree_in(var).unwrap_or(0);
    if df == 0 && dg == 0 {
        let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
        return Ok(RationalPoly::one(&vars));
    }
    if df == 0 {
        return Ok(f.pow(dg));
    }
    if dg == 0 {
        return Ok(g.pow(df));
    }
    let m = sylvester_matrix(&f, &g, var)?;
    Ok(bareiss_det(m))
}

/// Discriminant with the classical normalization
/// `disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f)`.
pub fn discriminant_in(f: &RationalPoly, var: &str) -> Result<RationalPoly, ResultantError> {
    if f.is_zero() {
        return Err(ResultantError::ZeroPolynomial);
    }
    let n = f
        .degree_in(var)
        .ok_or_else(|| ResultantError::UnknownVariable(var.to_string()))?;
    if n < 2 {
        return Err(ResultantError::DegreeTooLow(var.to_string()));
    }
    let fp = f.derivative(var).expect("variable exists");
    let res = resultant(f, &fp, var)?;
    let lc = f.leading_coefficient_in(var).expect("variable exists");
    let quot = res
        .div_exact(&lc)
        .expect("leading coefficient divides res(f, f')");
    let sign = if (n as u64 * (n as u64 - 1) / 2) % 2 == 1 {
        -1
    } else {
        1
    };
    Ok(if sign < 0 { quot.neg() } else { quot })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i;

    fn p(text: &str, vars: &[&str]) -> RationalPoly {
        RationalPoly::parse(text, vars).unwrap()
    }

    #[test]
    fn resultant_monic_at_root() {
        let vars = ["t"];
        let f = p("t^2 - 1", &vars);
        let g = p("t - 2", &vars);
        let r = resultant(&f, &g, "t").unwrap();
        assert_eq!(r.constant_value().unwrap(), rat_i(3));
    }

    #[test]
    fn resultant_two_by_two() {
        let vars = ["a", "b", "c", "d", "t"];
        let f = p("a t + b", &vars);
        let g = p("c t + d", &vars);
        let r = resultant(&f, &g, "t").unwrap();
        assert_eq!(r, p("a d - b c", &vars));
    }

    #[test]
    fn resultant_sign_symmetry_and_multiplicativity() {
        let vars = ["t"];
        let f = p("t^3 - 2 t + 5", &vars);
        let g = p("t^2 + 3 t - 1", &vars);
        let h = p("2 t - 7", &vars);
        let rfg = resultant(&f, &g, "t").unwrap();
        let rgf = resultant(&g, &f, "t").unwrap();
        // res(f,g) = (-1)^{deg f deg g} res(g,f)
        assert_eq!(rfg, rgf); // 3*2 even
        let fg = f.mul(&g);
        let lhs = resultant(&h, &fg, "t").unwrap();
        let rhs = resultant(&h, &f, "t")
            .unwrap()
            .mul(&resultant(&h, &g, "t").unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_degree_zero_convention() {
        let vars = ["t"];
        let c = p("3", &vars);
        let g = p("t^2 + 1", &vars);
        assert_eq!(
            resultant(&c, &g, "t").unwrap().constant_value().unwrap(),
            rat_i(9)
        );
    }

    #[test]
    fn discriminant_quadratic() {
        let vars = ["a", "b", "c", "t"];
        let f = p("a t^2 + b t + c", &vars);
        let d = discriminant_in(&f, "t").unwrap();
        assert_eq!(d, p("b^2 - 4 a c", &vars));
    }

    #[test]
    fn discriminant_double_root_vanishes() {
        let vars = ["t"];
        let f = p("t^3 - 3 t + 2", &vars); // (t-1)^2 (t+2)
        let d = discriminant_in(&f, "t").unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn discriminant_binary_cubic_is_classical() {
        // disc(a t^3 + b t^2 + c t + d) = 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
        let vars = ["a", "b", "c", "d", "t"];
        let f = p("a t^3 + b t^2 + c t + d", &vars);
        let disc = discriminant_in(&f, "t").unwrap();
        let classical = p(
            "18 a b c d - 4 b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2",
            &vars,
        );
        assert_eq!(disc, classical);
    }

    #[test]
    fn bareiss_matches_naive_on_rationals() {
        // 3x3 integer determinant
        let vars: [&str; 1] = ["t"];
        let e = |v: i64| RationalPoly::constant(&vars, rat_i(v));
        let m = vec![
            vec![e(2), e(-1), e(3)],
            vec![e(0), e(4), e(1)],
            vec![e(5), e(2), e(-2)],
        ];
        let det = bareiss_det(m);
        // 2*(4*-2 - 1*2) - (-1)*(0*-2 - 1*5) + 3*(0*2 - 4*5) = -20 - 5 - 60
        assert_eq!(det.constant_value().unwrap(), rat_i(-85));
    }
}
