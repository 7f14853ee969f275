//! Affine charts, coordinate blow-ups, strict transforms, and
//! infinitely-near-point bookkeeping.
//!
//! A [`ChartMap`] is an affine chart of a blown-up surface given by the
//! images of the plane coordinates (x, y, z) as polynomials in the chart
//! coordinates (s, t), together with the history of blow-ups that built
//! it.  Blowing up a center (c₁, c₂) composes the parent chart with
//! (s, t) ↦ (st + c₁, t + c₂) in the first branch, or
//! (s, t) ↦ (s + c₁, st + c₂) in the second.

use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::{FieldDescriptor, FieldValue};
use crate::polyring::{
    base_field_roots, gcd_few_vars, local_equation_at, PlaneCurve, Poly, ProjPoint,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InfNearError {
    #[error("blow-up center does not lie in the given chart")]
    CenterNotInChart,
    #[error("the curve vanishes identically on the chart image")]
    CurveContainsChartImage,
    #[error("the curves share a common component")]
    CommonComponent,
    #[error("tangency at a point with non-rational coordinates")]
    ConjugateTangency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpRecord {
    pub center: (FieldValue, FieldValue),
    pub branch: Branch,
}

/// An affine chart of an iterated blow-up of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartMap {
    desc: FieldDescriptor,
    base: [Poly; 3],
    components: [Poly; 3],
    history: Vec<BlowUpRecord>,
}

/// Chart coordinates `(s, t)` used by every [`ChartMap`].
pub fn chart_vars() -> Arc<Vec<String>> {
    Poly::vars_from(&["s", "t"])
}

impl ChartMap {
    /// A base chart of the plane itself (empty history).
    pub fn base(desc: &FieldDescriptor, components: [Poly; 3]) -> Self {
        ChartMap {
            desc: desc.clone(),
            base: components.clone(),
            components,
            history: Vec::new(),
        }
    }

    /// Base chart from textual (s, t) expressions.
    pub fn base_parse(desc: &FieldDescriptor, x: &str, y: &str, z: &str) -> Self {
        let st = chart_vars();
        ChartMap::base(
            desc,
            [
                Poly::parse(desc, &st, x).expect("chart expression"),
                Poly::parse(desc, &st, y).expect("chart expression"),
                Poly::parse(desc, &st, z).expect("chart expression"),
            ],
        )
    }

    pub fn components(&self) -> &[Poly; 3] {
        &self.components
    }

    pub fn history(&self) -> &[BlowUpRecord] {
        &self.history
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.desc
    }

    fn branch_images(&self, center: &(FieldValue, FieldValue), branch: Branch) -> [Poly; 2] {
        let st = chart_vars();
        let s = Poly::var(&self.desc, &st, 0);
        let t = Poly::var(&self.desc, &st, 1);
        let c1 = Poly::constant(&self.desc, &st, center.0.clone());
        let c2 = Poly::constant(&self.desc, &st, center.1.clone());
        match branch {
            Branch::First => [s.mul(&t).add(&c1), t.add(&c2)],
            Branch::Second => [s.add(&c1), s.mul(&t).add(&c2)],
        }
    }

    /// Blow up the given center of this chart.
    pub fn blow_up(&self, center: &ChartPoint, branch: Branch) -> Result<ChartMap, InfNearError> {
        if center.chart != *self {
            return Err(InfNearError::CenterNotInChart);
        }
        Ok(self.blow_up_at(center.coords.clone(), branch))
    }

    /// Blow up a center given directly by its chart coordinates.
    pub fn blow_up_at(&self, center: (FieldValue, FieldValue), branch: Branch) -> ChartMap {
        let images = self.branch_images(&center, branch);
        let images = [images[0].clone(), images[1].clone()];
        let components = [
            self.components[0].substitute(&images),
            self.components[1].substitute(&images),
            self.components[2].substitute(&images),
        ];
        let mut history = self.history.clone();
        history.push(BlowUpRecord { center, branch });
        ChartMap {
            desc: self.desc.clone(),
            base: self.base.clone(),
            components,
            history,
        }
    }

    /// Replay the recorded history from the base chart; must reproduce
    /// `components` exactly.
    pub fn rebuild(&self) -> ChartMap {
        let mut chart = ChartMap::base(&self.desc, self.base.clone());
        for rec in &self.history {
            chart = chart.blow_up_at(rec.center.clone(), rec.branch);
        }
        chart
    }

    /// A point of this chart.
    pub fn point(&self, s: FieldValue, t: FieldValue) -> ChartPoint {
        ChartPoint {
            chart: self.clone(),
            coords: (s, t),
        }
    }

    pub fn point_ints(&self, s: i64, t: i64) -> ChartPoint {
        self.point(self.desc.from_int(s), self.desc.from_int(t))
    }
}

/// A point in an iterated blow-up chart: a (possibly infinitely near)
/// point of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartPoint {
    chart: ChartMap,
    coords: (FieldValue, FieldValue),
}

impl ChartPoint {
    pub fn chart(&self) -> &ChartMap {
        &self.chart
    }

    pub fn coords(&self) -> &(FieldValue, FieldValue) {
        &self.coords
    }
}

/// A strict-transform equation in a chart, with the exceptional orders
/// divided out at each blow-up of the chart history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalEquation {
    pub poly: Poly,
    pub exceptional_orders: Vec<u32>,
}

/// Pull a plane curve back through the chart and divide out every
/// exceptional factor, recording the divided orders.
pub fn strict_transform(curve: &PlaneCurve, chart: &ChartMap) -> Result<LocalEquation, InfNearError> {
    let mut f = curve.equation().substitute(&[
        chart.base[0].clone(),
        chart.base[1].clone(),
        chart.base[2].clone(),
    ]);
    if f.is_zero() {
        return Err(InfNearError::CurveContainsChartImage);
    }
    let mut orders = Vec::with_capacity(chart.history.len());
    for rec in &chart.history {
        let images = chart.branch_images(&rec.center, rec.branch);
        f = f.substitute(&[images[0].clone(), images[1].clone()]);
        if f.is_zero() {
            return Err(InfNearError::CurveContainsChartImage);
        }
        // the exceptional curve is {t = 0} in the first branch and
        // {s = 0} in the second
        let exc_var = match rec.branch {
            Branch::First => 1,
            Branch::Second => 0,
        };
        let m = f.var_order(exc_var);
        f = f.div_var_pow(exc_var, m);
        orders.push(m);
    }
    Ok(LocalEquation {
        poly: f,
        exceptional_orders: orders,
    })
}

/// Whether the strict transform of the curve vanishes at the chart point.
pub fn passes_through(curve: &PlaneCurve, p: &ChartPoint) -> Result<bool, InfNearError> {
    let local = strict_transform(curve, &p.chart)?;
    let value = local
        .poly
        .eval(&[p.coords.0.clone(), p.coords.1.clone()]);
    Ok(value.is_zero())
}

/// Local intersection number by the classical blow-up recursion:
/// I_p(F, G) = m_p(F)·m_p(G) + Σ over common points in the first
/// neighbourhood.  Serves as an independent oracle for the Euclidean
/// reduction in `polyring`.
pub fn intersection_multiplicity_by_blowup(
    c1: &PlaneCurve,
    c2: &PlaneCurve,
    p: &ProjPoint,
) -> Result<u32, InfNearError> {
    let f = local_equation_at(c1, p);
    let g = local_equation_at(c2, p);
    let d = gcd_few_vars(&f, &g);
    if d.degree().unwrap_or(0) > 0 && d.min_degree() != Some(0) {
        return Err(InfNearError::CommonComponent);
    }
    blowup_recursion(&f, &g)
}

fn blowup_recursion(f: &Poly, g: &Poly) -> Result<u32, InfNearError> {
    let desc = f.descriptor().clone();
    let origin = [desc.zero(), desc.zero()];
    if !f.eval(&origin).is_zero() || !g.eval(&origin).is_zero() {
        return Ok(0);
    }
    let mf = f.min_degree().expect("nonzero");
    let mg = g.min_degree().expect("nonzero");
    let mut total = mf
        .checked_mul(mg)
        .expect("multiplicity product fits in u32");

    // first branch: (s, t) -> (st, t), exceptional {t = 0}, direction
    // parameter s
    let st = chart_vars();
    let s = Poly::var(&desc, &st, 0);
    let t = Poly::var(&desc, &st, 1);
    let first = [s.mul(&t), t.clone()];
    let f1 = {
        let h = f.substitute(&first);
        h.div_var_pow(1, mf)
    };
    let g1 = {
        let h = g.substitute(&first);
        h.div_var_pow(1, mg)
    };
    let f1_axis = f1.eval_var(1, &desc.zero());
    let g1_axis = g1.eval_var(1, &desc.zero());
    let h = gcd_few_vars(&f1_axis, &g1_axis);
    if h.degree().unwrap_or(0) > 0 || h.is_zero() {
        if h.is_zero() {
            // both strict transforms contain the exceptional axis, which
            // cannot happen for curves with no common component
            return Err(InfNearError::CommonComponent);
        }
        let (roots, residual) = base_field_roots(&h, 0);
        for (root, _) in roots {
            let shifted_f = f1.shift_var(0, &root);
            let shifted_g = g1.shift_var(0, &root);
            total += blowup_recursion(&shifted_f, &shifted_g)?;
        }
        if residual.degree_in(0).unwrap_or(0) > 0 {
            total += conjugate_contribution(&f1, &g1, &residual)?;
        }
    }

    // second branch origin: the direction missed by the first chart
    let second = [s.clone(), s.mul(&t)];
    let f2 = f.substitute(&second).div_var_pow(0, mf);
    let g2 = g.substitute(&second).div_var_pow(0, mg);
    if f2.eval(&origin).is_zero() && g2.eval(&origin).is_zero() {
        total += blowup_recursion(&f2, &g2)?;
    }
    Ok(total)
}

/// Contribution of conjugate (non-rational) common points on the
/// exceptional axis: when the two strict transforms meet transversally at
/// every root of the residual factor, each distinct root contributes 1.
fn conjugate_contribution(f1: &Poly, g1: &Poly, residual: &Poly) -> Result<u32, InfNearError> {
    let jac = f1
        .derivative(0)
        .mul(&g1.derivative(1))
        .sub(&f1.derivative(1).mul(&g1.derivative(0)));
    let jac_axis = jac.eval_var(1, &f1.descriptor().zero());
    let sqf = squarefree_part(residual);
    let common = gcd_few_vars(&sqf, &jac_axis);
    if common.degree().unwrap_or(0) > 0 {
        return Err(InfNearError::ConjugateTangency);
    }
    Ok(sqf.degree_in(0).unwrap_or(0))
}

/// Squarefree part of a polynomial in one effective variable, valid over
/// perfect fields (handles the inseparable case in characteristic p).
fn squarefree_part(h: &Poly) -> Poly {
    let var = match h.effective_vars().first() {
        Some(&v) => v,
        None => return h.normalize_leading(),
    };
    let dh = h.derivative(var);
    if dh.is_zero() {
        // h(x) = r(x^p) = (p-th root of r)(x)^p over a perfect field
        let p = h.descriptor().characteristic() as u32;
        assert!(p > 0, "zero derivative in characteristic zero");
        let desc = h.descriptor().clone();
        let size = desc.size().expect("finite field");
        // a^(1/p) = a^(q/p) in GF(q)
        let root_exp = (size / p as u64) as i64;
        let mut r = Poly::zero(&desc, h.vars());
        for (exps, c) in h.terms() {
            assert!(exps[var] % p == 0, "inseparable polynomial malformed");
            let mut e = exps.clone();
            e[var] /= p;
            let cr = c.pow(root_exp).expect("nonnegative power");
            r = r.add(&Poly::monomial(&desc, h.vars(), e, cr));
        }
        return squarefree_part(&r);
    }
    let d = gcd_few_vars(h, &dh);
    h.div_exact(&d).expect("gcd divides").normalize_leading()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::intersection_multiplicity;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn z_chart(desc: &FieldDescriptor) -> ChartMap {
        ChartMap::base_parse(desc, "s", "t", "1")
    }

    #[test]
    fn four_step_chain_gives_quartic_contact_chart() {
        // blowing up the origin of the (s, 1, t) chart four times along
        // the t-axis yields the map (s, t) -> (s t^4 : 1 : t)
        let desc = q();
        let chart = ChartMap::base_parse(&desc, "s", "1", "t");
        let mut c = chart;
        for _ in 0..4 {
            c = c.blow_up_at((desc.zero(), desc.zero()), Branch::First);
        }
        let st = chart_vars();
        assert_eq!(c.components()[0], Poly::parse(&desc, &st, "s*t^4").unwrap());
        assert_eq!(c.components()[1], Poly::parse(&desc, &st, "1").unwrap());
        assert_eq!(c.components()[2], Poly::parse(&desc, &st, "t").unwrap());
        assert_eq!(c.rebuild(), c);
    }

    #[test]
    fn translated_center_matches_affine_form() {
        // blowing up (λ, 0) in the first branch is (s, t) -> (st + λ, t)
        let desc = q();
        let lambda = desc.from_int(5);
        let chart = z_chart(&desc).blow_up_at((lambda, desc.zero()), Branch::First);
        let st = chart_vars();
        assert_eq!(
            chart.components()[0],
            Poly::parse(&desc, &st, "s*t + 5").unwrap()
        );
        assert_eq!(chart.components()[1], Poly::parse(&desc, &st, "t").unwrap());
    }

    #[test]
    fn line_slope_visible_after_blow_up() {
        // strict transform of y = 2x meets the exceptional axis at its
        // slope parameter: in the chart (x, y) = (st, t) the direction
        // parameter is s = x/y, so the line appears at s = 1/2
        let desc = q();
        let line = PlaneCurve::parse(&desc, "y - 2*x").unwrap();
        let chart = z_chart(&desc).blow_up_at((desc.zero(), desc.zero()), Branch::First);
        let local = strict_transform(&line, &chart).unwrap();
        assert_eq!(local.exceptional_orders, vec![1]);
        let half = desc.from_ratio(1, 2).unwrap();
        assert!(local.poly.eval(&[half, desc.zero()]).is_zero());
        assert!(!local.poly.eval(&[desc.one(), desc.zero()]).is_zero());
    }

    #[test]
    fn center_not_in_chart_rejected() {
        let desc = q();
        let chart = z_chart(&desc);
        let other = chart.blow_up_at((desc.zero(), desc.zero()), Branch::First);
        let p = other.point_ints(0, 0);
        assert_eq!(
            chart.blow_up(&p, Branch::First),
            Err(InfNearError::CenterNotInChart)
        );
        assert!(other.blow_up(&p, Branch::First).is_ok());
    }

    #[test]
    fn strict_transform_orders_equal_center_multiplicities() {
        // cusp y^2 = x^3: multiplicity 2 at origin, then 1 at the next
        // center on the exceptional curve
        let desc = q();
        let cusp = PlaneCurve::parse(&desc, "y^2*z - x^3").unwrap();
        // chart (x, y) = (s, t); the cusp tangent is y = 0, so the strict
        // transform meets the exceptional curve of the first blow-up in
        // the second branch chart (x, y) = (s, st) at the origin
        let c1 = z_chart(&desc).blow_up_at((desc.zero(), desc.zero()), Branch::Second);
        let local = strict_transform(&cusp, &c1).unwrap();
        assert_eq!(local.exceptional_orders, vec![2]);
        let c2 = c1.blow_up_at((desc.zero(), desc.zero()), Branch::Second);
        let local2 = strict_transform(&cusp, &c2).unwrap();
        assert_eq!(local2.exceptional_orders, vec![2, 1]);
    }

    #[test]
    fn oracle_agrees_with_reduction_on_samples() {
        let desc = q();
        let p = ProjPoint::from_ints(&desc, 0, 0, 1).unwrap();
        let pairs = [
            ("x", "y"),
            ("y*z - x^2", "y"),
            ("y^2*z - x^3", "y"),
            ("y^2*z - x^2*z - x^3", "y^2*z - 4*x^2*z - x^3"),
            ("y^2*z - x^3", "y^2*z + x^3"),
            ("y*z^2 - x^3", "x^2 - y*z"),
        ];
        for (a, b) in pairs {
            let ca = PlaneCurve::parse(&desc, a).unwrap();
            let cb = PlaneCurve::parse(&desc, b).unwrap();
            let fulton = intersection_multiplicity(&ca, &cb, &p).unwrap();
            let blowup = intersection_multiplicity_by_blowup(&ca, &cb, &p).unwrap();
            assert_eq!(fulton, blowup, "disagreement on ({a}, {b})");
        }
    }

    #[test]
    fn conjugate_transversal_points_counted() {
        // both cubics have tangent cone x^2 + y^2, so their strict
        // transforms share the conjugate directions s = ±i on the
        // exceptional curve; each contributes 1 (transversal), total
        // 2·2 + 2 = 6
        let desc = q();
        let c1 = PlaneCurve::parse(&desc, "x^2*z + y^2*z + x^3").unwrap();
        let c2 = PlaneCurve::parse(&desc, "x^2*z + y^2*z + y^3").unwrap();
        let p = ProjPoint::from_ints(&desc, 0, 0, 1).unwrap();
        let fulton = intersection_multiplicity(&c1, &c2, &p).unwrap();
        let blowup = intersection_multiplicity_by_blowup(&c1, &c2, &p).unwrap();
        assert_eq!(fulton, blowup);
        assert_eq!(blowup, 6);
    }

    #[test]
    fn char2_inseparable_residual() {
        let f4 = FieldDescriptor::extension_field(2, 2, None).unwrap();
        let c1 = PlaneCurve::parse(&f4, "x^2 + x*y + y^2").unwrap();
        let c2 = PlaneCurve::parse(&f4, "x*y*z + x^3 + y^3").unwrap();
        let p = ProjPoint::from_ints(&f4, 0, 0, 1).unwrap();
        let fulton = intersection_multiplicity(&c1, &c2, &p).unwrap();
        let blowup = intersection_multiplicity_by_blowup(&c1, &c2, &p).unwrap();
        assert_eq!(fulton, blowup);
    }
}
