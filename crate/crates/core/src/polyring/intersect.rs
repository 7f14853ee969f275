//! Local intersection multiplicities of plane curves, computed by the
//! axiomatic reduction algorithm (Euclidean steps on the restriction to
//! one axis, splitting off the other axis when it is a component).

use std::sync::Arc;

use crate::polyring::curve::{PlaneCurve, ProjPoint};
use crate::polyring::poly::{gcd_few_vars, Poly, PolyError};

/// Local coordinates used by [`local_equation_at`]: `(s, t)`.
pub fn local_vars() -> Arc<Vec<String>> {
    Poly::vars_from(&["s", "t"])
}

/// Dehomogenize the curve at the pivot coordinate of `p` (its first
/// nonzero coordinate) and translate `p` to the origin.  The two
/// remaining coordinates, in their natural order, become `(s, t)`.
pub fn local_equation_at(curve: &PlaneCurve, p: &ProjPoint) -> Poly {
    let desc = curve.descriptor().clone();
    let st = local_vars();
    let pivot = p
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("projective point");
    let one = Poly::constant(&desc, &st, desc.one());
    let s = Poly::var(&desc, &st, 0);
    let t = Poly::var(&desc, &st, 1);
    let mut images = Vec::with_capacity(3);
    let mut rest = [s, t].into_iter();
    for (i, c) in p.coords().iter().enumerate() {
        if i == pivot {
            images.push(one.clone());
        } else {
            let affine = rest
                .next()
                .unwrap()
                .add(&Poly::constant(&desc, &st, c.clone()));
            images.push(affine);
        }
    }
    curve.equation().substitute(&images)
}

/// Multiplicity of the curve at a point of the plane.
pub fn multiplicity_at(curve: &PlaneCurve, p: &ProjPoint) -> u32 {
    local_equation_at(curve, p).min_degree().unwrap_or(0)
}

/// Local intersection number of two curves at a point.  Fails with
/// [`PolyError::CommonComponent`] when the curves share a component
/// through the point.
pub fn intersection_multiplicity(
    c1: &PlaneCurve,
    c2: &PlaneCurve,
    p: &ProjPoint,
) -> Result<u32, PolyError> {
    let f = local_equation_at(c1, p);
    let g = local_equation_at(c2, p);
    local_intersection(&f, &g)
}

/// Intersection number at the origin of two local equations in `(s, t)`.
pub fn local_intersection(f: &Poly, g: &Poly) -> Result<u32, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let d = gcd_few_vars(f, g);
    if d.degree().unwrap_or(0) > 0 && d.min_degree() != Some(0) {
        // positive-degree common factor vanishing at the origin
        return Err(PolyError::CommonComponent);
    }
    Ok(fulton(f.clone(), g.clone()))
}

fn fulton(f: Poly, g: Poly) -> u32 {
    let desc = f.descriptor().clone();
    let vars = f.vars().clone();
    let origin = [desc.zero(), desc.zero()];
    if !f.eval(&origin).is_zero() || !g.eval(&origin).is_zero() {
        return 0;
    }
    let f0 = f.eval_var(1, &desc.zero());
    let g0 = g.eval_var(1, &desc.zero());
    assert!(
        !(f0.is_zero() && g0.is_zero()),
        "common component slipped past the gcd check"
    );
    if f0.is_zero() {
        return fulton(g, f);
    }
    if g0.is_zero() {
        // g = t * h: I(f, g) = ord_0 f(s, 0) + I(f, h)
        let h = g.div_var_pow(1, 1);
        return f0.var_order(0) + fulton(f, h);
    }
    let r = f0.degree_in(0).unwrap_or(0);
    let s = g0.degree_in(0).unwrap_or(0);
    if r > s {
        return fulton(g, f);
    }
    let a = f0.coeffs_in(0)[r as usize].coeff(&[0]);
    let b = g0.coeffs_in(0)[s as usize].coeff(&[0]);
    let ratio = b.div(&a).expect("nonzero leading coefficient");
    let shift = Poly::monomial(
        &desc,
        &vars,
        vec![s - r, 0],
        ratio,
    );
    let g2 = g.sub(&shift.mul(&f));
    fulton(f, g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    #[test]
    fn transversal_lines_meet_once() {
        let c1 = PlaneCurve::parse(&q(), "x").unwrap();
        let c2 = PlaneCurve::parse(&q(), "y").unwrap();
        let p = ProjPoint::from_ints(&q(), 0, 0, 1).unwrap();
        assert_eq!(intersection_multiplicity(&c1, &c2, &p).unwrap(), 1);
    }

    #[test]
    fn tangent_line_to_conic() {
        let conic = PlaneCurve::parse(&q(), "y*z - x^2").unwrap();
        let line = PlaneCurve::parse(&q(), "y").unwrap();
        let p = ProjPoint::from_ints(&q(), 0, 0, 1).unwrap();
        assert_eq!(intersection_multiplicity(&conic, &line, &p).unwrap(), 2);
    }

    #[test]
    fn cusp_and_tangent() {
        // y^2 z = x^3 with its cuspidal tangent y = 0 at the origin: I = 3
        let cusp = PlaneCurve::parse(&q(), "y^2*z - x^3").unwrap();
        let line = PlaneCurve::parse(&q(), "y").unwrap();
        let p = ProjPoint::from_ints(&q(), 0, 0, 1).unwrap();
        assert_eq!(intersection_multiplicity(&cusp, &line, &p).unwrap(), 3);
    }

    #[test]
    fn node_times_node() {
        // two nodal cubics meeting at a common node: 2 * 2 = 4 when the
        // branches are pairwise transversal
        let c1 = PlaneCurve::parse(&q(), "y^2*z - x^2*z - x^3").unwrap();
        let c2 = PlaneCurve::parse(&q(), "y^2*z - 4*x^2*z - x^3").unwrap();
        let p = ProjPoint::from_ints(&q(), 0, 0, 1).unwrap();
        assert_eq!(multiplicity_at(&c1, &p), 2);
        assert_eq!(intersection_multiplicity(&c1, &c2, &p).unwrap(), 4);
    }

    #[test]
    fn common_component_detected() {
        let c1 = PlaneCurve::parse(&q(), "x*y").unwrap();
        let c2 = PlaneCurve::parse(&q(), "x*z").unwrap();
        let p = ProjPoint::from_ints(&q(), 0, 0, 1).unwrap();
        assert_eq!(
            intersection_multiplicity(&c1, &c2, &p),
            Err(PolyError::CommonComponent)
        );
    }

    #[test]
    fn away_from_intersection_is_zero() {
        let c1 = PlaneCurve::parse(&q(), "x").unwrap();
        let c2 = PlaneCurve::parse(&q(), "y").unwrap();
        let p = ProjPoint::from_ints(&q(), 1, 1, 1).unwrap();
        assert_eq!(intersection_multiplicity(&c1, &c2, &p).unwrap(), 0);
    }

    #[test]
    fn finite_field_tangency() {
        let f2 = FieldDescriptor::prime_field(2).unwrap();
        let conic = PlaneCurve::parse(&f2, "y*z + x^2").unwrap();
        let line = PlaneCurve::parse(&f2, "y").unwrap();
        let p = ProjPoint::from_ints(&f2, 0, 0, 1).unwrap();
        assert_eq!(intersection_multiplicity(&conic, &line, &p).unwrap(), 2);
    }
}
