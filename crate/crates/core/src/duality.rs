//! Plücker formulas for plane curves with nodes and cusps, the genus–degree
//! formula, and the tangent-developable degree of a space curve (which
//! equals the degree of its dual hypersurface).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DualityError {
    #[error("invariants violate the genus-degree relation: g != (d-1)(d-2)/2 - delta - kappa")]
    GenusMismatch,
    #[error("dual invariants are not nonnegative integers (input not realizable)")]
    InvalidDual,
    #[error("negative tangent-developable degree: inconsistent curve data")]
    NegativeDegree,
}

/// (degree, geometric genus, nodes, cusps) of a plane curve whose only
/// singularities are nodes and cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCurveInvariants {
    pub degree: i64,
    pub genus: i64,
    pub nodes: i64,
    pub cusps: i64,
}

impl PlaneCurveInvariants {
    /// Checks the genus-degree relation on construction.
    pub fn new(degree: i64, genus: i64, nodes: i64, cusps: i64) -> Result<Self, DualityError> {
        if genus != genus_degree(degree, nodes, cusps) {
            return Err(DualityError::GenusMismatch);
        }
        Ok(PlaneCurveInvariants {
            degree,
            genus,
            nodes,
            cusps,
        })
    }
}

/// Geometric genus of a degree-d plane curve with `delta` nodes and `kappa`
/// cusps: (d-1)(d-2)/2 - delta - kappa.
pub fn genus_degree(d: i64, delta: i64, kappa: i64) -> i64 {
    (d - 1) * (d - 2) / 2 - delta - kappa
}

/// Invariants of the dual curve:
/// d* = d(d-1) - 2 delta - 3 kappa, g* = g, and (delta*, kappa*) solved from
/// the same formulas read backwards. An involution on valid inputs.
pub fn plucker_dual(inv: &PlaneCurveInvariants) -> Result<PlaneCurveInvariants, DualityError> {
    let d = inv.degree;
    let g = inv.genus;
    let d_star = d * (d - 1) - 2 * inv.nodes - 3 * inv.cusps;
    if d_star <= 0 {
        return Err(DualityError::InvalidDual);
    }
    // 2 delta* + 3 kappa* = d*(d*-1) - d ;  delta* + kappa* = (d*-1)(d*-2)/2 - g
    let pair_sum = (d_star - 1) * (d_star - 2) / 2 - g;
    let weighted = d_star * (d_star - 1) - d;
    let kappa_star = weighted - 2 * pair_sum;
    let delta_star = pair_sum - kappa_star;
    if kappa_star < 0 || delta_star < 0 {
        return Err(DualityError::InvalidDual);
    }
    PlaneCurveInvariants::new(d_star, g, delta_star, kappa_star)
        .map_err(|_| DualityError::InvalidDual)
}

/// Degree, geometric genus and cusp count of an irreducible space curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceCurveData {
    pub degree: i64,
    pub geometric_genus: i64,
    pub cusp_count: i64,
}

impl SpaceCurveData {
    pub fn new(degree: i64, geometric_genus: i64, cusp_count: i64) -> Self {
        assert!(degree >= 0 && geometric_genus >= 0 && cusp_count >= 0);
        SpaceCurveData {
            degree,
            geometric_genus,
            cusp_count,
        }
    }
}

/// Degree of the tangent developable of the curve (equal to the degree of
/// its dual hypersurface), by Riemann-Hurwitz applied to a generic plane
/// projection: 2g - 2 + 2d - kappa.
pub fn tangent_developable_degree(c: &SpaceCurveData) -> Result<i64, DualityError> {
    let t = 2 * c.geometric_genus - 2 + 2 * c.degree - c.cusp_count;
    if t < 0 {
        return Err(DualityError::NegativeDegree);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_curve_dual() {
        let b = PlaneCurveInvariants::new(8, 9, 0, 12).unwrap();
        let dual = plucker_dual(&b).unwrap();
        assert_eq!(dual, PlaneCurveInvariants::new(20, 9, 114, 48).unwrap());
        // involution
        assert_eq!(plucker_dual(&dual).unwrap(), b);
    }

    #[test]
    fn smooth_conic_self_dual() {
        let c = PlaneCurveInvariants::new(2, 0, 0, 0).unwrap();
        assert_eq!(plucker_dual(&c).unwrap(), c);
    }

    #[test]
    fn nodal_cubic() {
        // by hand: d* = 6 - 2 = 4; 2 delta* + 3 kappa* = 12 - 3 = 9;
        // delta* + kappa* = 3 - 0 = 3 => kappa* = 3, delta* = 0
        let c = PlaneCurveInvariants::new(3, 0, 1, 0).unwrap();
        assert_eq!(
            plucker_dual(&c).unwrap(),
            PlaneCurveInvariants::new(4, 0, 0, 3).unwrap()
        );
    }

    #[test]
    fn genus_degree_values() {
        assert_eq!(genus_degree(4, 3, 0), 0); // rational quartics
        assert_eq!(genus_degree(4, 0, 0), 3); // smooth quartic
        assert_eq!(genus_degree(1, 0, 0), 0);
        assert_eq!(genus_degree(8, 0, 12), 9); // the branch curve
        assert_eq!(genus_degree(20, 114, 48), 9); // its dual
    }

    #[test]
    fn construction_checks_genus() {
        assert!(PlaneCurveInvariants::new(4, 1, 0, 0).is_err());
    }

    #[test]
    fn developable_degrees() {
        assert_eq!(
            tangent_developable_degree(&SpaceCurveData::new(620, 725, 2304)).unwrap(),
            384
        );
        assert_eq!(
            tangent_developable_degree(&SpaceCurveData::new(4, 0, 0)).unwrap(),
            6
        );
        assert_eq!(
            tangent_developable_degree(&SpaceCurveData::new(2, 0, 0)).unwrap(),
            2
        );
    }

    #[test]
    fn rational_curve_dual_is_2d_minus_2() {
        for d in 2..=5 {
            assert_eq!(
                tangent_developable_degree(&SpaceCurveData::new(d, 0, 0)).unwrap(),
                2 * d - 2
            );
        }
    }

    #[test]
    fn involution_on_valid_tuples() {
        // all small valid (d, delta, kappa) with valid dual
        let mut tested = 0;
        for d in 2..=9i64 {
            for delta in 0..=6i64 {
                for kappa in 0..=6i64 {
                    let g = genus_degree(d, delta, kappa);
                    if g < 0 {
                        continue;
                    }
                    let inv = PlaneCurveInvariants::new(d, g, delta, kappa).unwrap();
                    if let Ok(dual) = plucker_dual(&inv) {
                        assert_eq!(plucker_dual(&dual).unwrap(), inv);
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested >= 100, "only {tested} valid tuples exercised");
    }
}
