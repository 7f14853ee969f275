//! End-to-end pipeline: builds the two quartics from exact parameters,
//! verifies their membership in the prescribed linear systems, checks the
//! blown-up curve configurations against the embedded golden tables, runs
//! both contractions, and renders the three verdicts (projective
//! equivalence, isomorphism, type I).

use serde::Serialize;
use thiserror::Error;

use crate::binaryforms::{
    attach_f, build_parametrization, equivalent_fixing_point, identified_points_divisor,
    modular_nonequivalence_certificate, pullback_form, BinaryForm, BinaryFormError, P1Point,
    Parametrization,
};
use crate::exactfield::{FieldDescriptor, FieldValue};
use crate::infnear::{passes_through, strict_transform, Branch, ChartMap, InfNearError};
use crate::picard;
use crate::polyring::{
    intersection_multiplicity, multiplicity_at, ChartFrame, LinearCondition, LocalProbe,
    PlaneCurve, Poly, PolyError, ProjPoint,
};
use crate::infnear::intersection_multiplicity_by_blowup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("the linear system does not determine a unique curve (kernel dimension {0})")]
    NotUnique(usize),
    #[error("the quartic is reducible over the base field")]
    Reducible,
    #[error("closed form and independent search disagree: {0}")]
    CriterionMismatch(String),
    #[error("internal computation failed: {0}")]
    Internal(String),
}

impl From<PolyError> for ConstructionError {
    fn from(e: PolyError) -> Self {
        ConstructionError::Internal(e.to_string())
    }
}

impl From<InfNearError> for ConstructionError {
    fn from(e: InfNearError) -> Self {
        ConstructionError::Internal(e.to_string())
    }
}

impl From<BinaryFormError> for ConstructionError {
    fn from(e: BinaryFormError) -> Self {
        ConstructionError::DegenerateParameters(e.to_string())
    }
}

/// Validated parameters (field; α, β, λ nonzero with α ≠ β; μ free).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterSet {
    field: FieldDescriptor,
    alpha: FieldValue,
    beta: FieldValue,
    lambda: FieldValue,
    mu: FieldValue,
}

impl ParameterSet {
    pub fn new(
        field: FieldDescriptor,
        alpha: FieldValue,
        beta: FieldValue,
        lambda: FieldValue,
        mu: FieldValue,
    ) -> Result<Self, ConstructionError> {
        if let Some(size) = field.size() {
            if size <= 2 {
                return Err(ConstructionError::DegenerateParameters(
                    "the field must have more than two elements".into(),
                ));
            }
        }
        if alpha.is_zero() || beta.is_zero() || lambda.is_zero() {
            return Err(ConstructionError::DegenerateParameters(
                "alpha, beta and lambda must be nonzero".into(),
            ));
        }
        if alpha == beta {
            return Err(ConstructionError::DegenerateParameters(
                "alpha and beta must be distinct".into(),
            ));
        }
        Ok(ParameterSet {
            field,
            alpha,
            beta,
            lambda,
            mu,
        })
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }
    pub fn alpha(&self) -> &FieldValue {
        &self.alpha
    }
    pub fn beta(&self) -> &FieldValue {
        &self.beta
    }
    pub fn lambda(&self) -> &FieldValue {
        &self.lambda
    }
    pub fn mu(&self) -> &FieldValue {
        &self.mu
    }

    fn theta(&self, which: usize) -> &FieldValue {
        if which == 1 {
            &self.alpha
        } else {
            &self.beta
        }
    }
}

/// One named pass/fail entry of a report section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, details: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            details,
        }
    }
}

// ---------------------------------------------------------------------------
// curve construction
// ---------------------------------------------------------------------------

/// The quartic with parameters (θ, λ, μ):
/// λ²z(θz−x)³ + θ²xy²(μ(θz−x) − θλy).
pub fn quartic_equation(theta: &FieldValue, lambda: &FieldValue, mu: &FieldValue) -> Poly {
    let desc = theta.descriptor().clone();
    let xyz = PlaneCurve::xyz();
    let x = Poly::var(&desc, &xyz, 0);
    let y = Poly::var(&desc, &xyz, 1);
    let z = Poly::var(&desc, &xyz, 2);
    let lin = z.scale(theta).sub(&x);
    z.scale(&lambda.mul(lambda)).mul(&lin.pow(3)).add(
        &x.mul(&y.pow(2)).mul(
            &lin.scale(mu)
                .sub(&y.scale(&theta.mul(lambda)))
                .scale(&theta.mul(theta)),
        ),
    )
}

/// The fourteen linear conditions on quartics defining the system with
/// triple point p(θ), tangency to L_ab at a, the four-fold contact with
/// L_bc at b, and passage through q(λ) and r(λ,μ).
pub fn omega_conditions(
    desc: &FieldDescriptor,
    theta: &FieldValue,
    lambda: &FieldValue,
    mu: &FieldValue,
) -> Vec<LinearCondition> {
    let mut conditions = Vec::with_capacity(14);

    // triple point at p(θ) = (θ:0:1): chart z = 1, local (s, t) = (x, y)
    let chart_z = ChartFrame::parse(desc, "s", "t", "1").expect("chart");
    let mut probe = LocalProbe::new(desc, 4, &chart_z);
    probe.translate(theta, &desc.zero());
    conditions.extend(probe.vanishing_rows(3)); // 6 rows

    // through a = (1:0:0) and tangent to L_ab = {z = 0} there:
    // chart x = 1 with (s, t) = (z, y), so L_ab is {s = 0}; tangency
    // means the t-linear Taylor coefficient dies
    let chart_a = ChartFrame::parse(desc, "1", "t", "s").expect("chart");
    let probe_a = LocalProbe::new(desc, 4, &chart_a);
    conditions.push(probe_a.coefficient_row(0, 0));
    conditions.push(probe_a.coefficient_row(0, 1));

    // chain b, b₁, b₂, b₃ along L_bc: chart y = 1 with (s, t) = (x, z),
    // blowing up the origin four times in the first branch gives the
    // contact chart (s, t) ↦ (s t⁴ : 1 : t)
    let chart_b = ChartFrame::parse(desc, "s", "1", "t").expect("chart");
    let mut probe_b = LocalProbe::new(desc, 4, &chart_b);
    for _ in 0..4 {
        conditions.extend(probe_b.vanishing_rows(1));
        probe_b.impose_vanishing(1);
        probe_b.blow_up(1);
    }

    // through q(λ) = (λ, 0) in the contact chart
    probe_b.translate(lambda, &desc.zero());
    conditions.extend(probe_b.vanishing_rows(1));
    probe_b.impose_vanishing(1);
    probe_b.blow_up(1);

    // through r(λ, μ) = (μ, 0) after blowing up q(λ)
    probe_b.translate(mu, &desc.zero());
    conditions.extend(probe_b.vanishing_rows(1));

    assert_eq!(conditions.len(), 14);
    conditions
}

/// Candidate linear factors all pass through b (the quartic meets
/// {x = 0} only there), so reducibility over the base field is decided
/// by a finite root search.
fn irreducible_quartic(curve: &PlaneCurve) -> Result<bool, ConstructionError> {
    let desc = curve.descriptor().clone();
    let xyz = PlaneCurve::xyz();
    // z is never a factor here, but test it for robustness
    let z = Poly::var(&desc, &xyz, 2);
    if curve.equation().div_exact(&z).is_some() {
        return Ok(false);
    }
    if curve
        .equation()
        .div_exact(&Poly::var(&desc, &xyz, 0))
        .is_some()
    {
        return Ok(false);
    }
    // factors x − c·z: substitute x = w·z and intersect the root sets of
    // the coefficient polynomials in w
    let wyz = Poly::vars_from(&["w", "y", "z"]);
    let w = Poly::var(&desc, &wyz, 0);
    let yv = Poly::var(&desc, &wyz, 1);
    let zv = Poly::var(&desc, &wyz, 2);
    let sub = curve.equation().substitute(&[w.mul(&zv), yv, zv]);
    let mut gcd = Poly::zero(&desc, &wyz);
    // group by (y, z) exponents: each group is a polynomial in w alone
    let mut groups: std::collections::BTreeMap<(u32, u32), Poly> = std::collections::BTreeMap::new();
    for (e, c) in sub.terms() {
        let entry = groups
            .entry((e[1], e[2]))
            .or_insert_with(|| Poly::zero(&desc, &wyz));
        *entry = entry.add(&Poly::monomial(&desc, &wyz, vec![e[0], 0, 0], c.clone()));
    }
    for g in groups.values() {
        gcd = crate::polyring::gcd_few_vars(&gcd, g);
    }
    if gcd.degree_in(0).unwrap_or(0) == 0 {
        return Ok(true);
    }
    let (roots, _) = crate::polyring::base_field_roots(&gcd, 0);
    for (c, _) in roots {
        let line = Poly::var(&desc, &xyz, 0).sub(&Poly::var(&desc, &xyz, 2).scale(&c));
        if curve.equation().div_exact(&line).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build Γ₁ and Γ₂ from the closed form, cross-check each against the
/// unique solution of its fourteen-condition linear system, and check
/// irreducibility over the base field.
pub fn build_gammas(p: &ParameterSet) -> Result<(PlaneCurve, PlaneCurve), ConstructionError> {
    let mut out = Vec::with_capacity(2);
    for which in [1usize, 2] {
        let theta = p.theta(which);
        let eq = quartic_equation(theta, &p.lambda, &p.mu);
        let curve = PlaneCurve::new(eq).map_err(|_| {
            ConstructionError::DegenerateParameters("closed-form quartic vanishes".into())
        })?;
        if curve.degree() != 4 {
            return Err(ConstructionError::DegenerateParameters(
                "closed-form equation does not have degree 4".into(),
            ));
        }
        let conditions = omega_conditions(&p.field, theta, &p.lambda, &p.mu);
        let basis = crate::polyring::solve_curve_conditions(&p.field, 4, &conditions);
        if basis.len() != 1 {
            return Err(ConstructionError::NotUnique(basis.len()));
        }
        if basis[0] != curve {
            return Err(ConstructionError::CriterionMismatch(
                "linear-system solution differs from the closed form".into(),
            ));
        }
        if !irreducible_quartic(&curve)? {
            return Err(ConstructionError::Reducible);
        }
        out.push(curve);
    }
    Ok((out.remove(0), out.remove(0)))
}

// ---------------------------------------------------------------------------
// fixed points and lines of the configuration
// ---------------------------------------------------------------------------

pub fn point_a(desc: &FieldDescriptor) -> ProjPoint {
    ProjPoint::from_ints(desc, 1, 0, 0).expect("point")
}
pub fn point_b(desc: &FieldDescriptor) -> ProjPoint {
    ProjPoint::from_ints(desc, 0, 1, 0).expect("point")
}
pub fn point_p(theta: &FieldValue) -> ProjPoint {
    let desc = theta.descriptor().clone();
    ProjPoint::new(theta.clone(), desc.zero(), desc.one()).expect("point")
}
pub fn line_ab(desc: &FieldDescriptor) -> PlaneCurve {
    PlaneCurve::parse(desc, "z").expect("line")
}
pub fn line_ac(desc: &FieldDescriptor) -> PlaneCurve {
    PlaneCurve::parse(desc, "y").expect("line")
}
pub fn line_bc(desc: &FieldDescriptor) -> PlaneCurve {
    PlaneCurve::parse(desc, "x").expect("line")
}

/// The contact chart at b after the four-fold chain: (s, t) ↦ (s t⁴ : 1 : t).
fn contact_chart(desc: &FieldDescriptor) -> ChartMap {
    let mut chart = ChartMap::base_parse(desc, "s", "1", "t");
    for _ in 0..4 {
        chart = chart.blow_up_at((desc.zero(), desc.zero()), Branch::First);
    }
    chart
}

/// Chart exposing the exceptional curve of r(λ,μ).
fn r_chart(desc: &FieldDescriptor, lambda: &FieldValue) -> ChartMap {
    contact_chart(desc).blow_up_at((lambda.clone(), desc.zero()), Branch::First)
}

/// The a-side chart: base (1 : t : s) so L_ab = {s = 0}; one blow-up at
/// the origin exposes a₁ (the tangency direction of L_ab).
fn a_chart(desc: &FieldDescriptor) -> ChartMap {
    ChartMap::base_parse(desc, "1", "t", "s")
}

// ---------------------------------------------------------------------------
// Ω-membership
// ---------------------------------------------------------------------------

pub fn verify_omega(
    p: &ParameterSet,
    which: usize,
    curve: &PlaneCurve,
) -> Result<Vec<CheckResult>, ConstructionError> {
    let desc = p.field.clone();
    let theta = p.theta(which);
    let mut checks = Vec::new();

    let m = multiplicity_at(curve, &point_p(theta));
    checks.push(CheckResult::new(
        "triple_point",
        m == 3,
        format!("multiplicity at p = {m}, expected 3"),
    ));

    let through_a = curve.passes_through(&point_a(&desc));
    checks.push(CheckResult::new(
        "through_a",
        through_a,
        format!("passes through a: {through_a}"),
    ));

    let ia = intersection_multiplicity(curve, &line_ab(&desc), &point_a(&desc))?;
    checks.push(CheckResult::new(
        "tangent_L_ab",
        ia >= 2,
        format!("I_a(curve, L_ab) = {ia}, expected at least 2"),
    ));

    let ib = intersection_multiplicity(curve, &line_bc(&desc), &point_b(&desc))?;
    checks.push(CheckResult::new(
        "contact_L_bc",
        ib == 4,
        format!("I_b(curve, L_bc) = {ib}, expected 4"),
    ));

    // full contact: the restriction to L_bc is a pure power of z, so the
    // curve meets L_bc nowhere else (over any extension)
    let restricted = curve.equation().eval_var(0, &desc.zero());
    let pure = restricted.var_order(1) == 4;
    checks.push(CheckResult::new(
        "L_bc_only_at_b",
        pure,
        "restriction to L_bc is a scalar times z^4".into(),
    ));

    // chain passages via strict transforms: orders [1,1,1,1] at
    // b, b₁, b₂, b₃ and passage through q(λ) and r(λ,μ)
    let chart = contact_chart(&desc);
    let local = strict_transform(curve, &chart)?;
    checks.push(CheckResult::new(
        "b_chain_orders",
        local.exceptional_orders == vec![1, 1, 1, 1],
        format!("orders along the b-chain: {:?}", local.exceptional_orders),
    ));
    let q_pt = chart.point(p.lambda.clone(), desc.zero());
    let through_q = passes_through(curve, &q_pt)?;
    checks.push(CheckResult::new(
        "through_q",
        through_q,
        format!("passes through q(lambda): {through_q}"),
    ));
    let rc = r_chart(&desc, &p.lambda);
    let r_pt = rc.point(p.mu.clone(), desc.zero());
    let through_r = passes_through(curve, &r_pt)?;
    checks.push(CheckResult::new(
        "through_r",
        through_r,
        format!("passes through r(lambda, mu): {through_r}"),
    ));

    Ok(checks)
}

// ---------------------------------------------------------------------------
// figure configuration checks
// ---------------------------------------------------------------------------

/// The ten multiplicities of a curve at the blown-up centers, computed
/// from strict transforms in local charts.
pub fn center_multiplicities(
    p: &ParameterSet,
    curve: &PlaneCurve,
) -> Result<[u32; 10], ConstructionError> {
    let desc = p.field.clone();
    let mut m = [0u32; 10];
    // a and a₁: one blow-up of the origin of the a-side chart
    m[0] = multiplicity_at(curve, &point_a(&desc));
    let a1_chart = a_chart(&desc).blow_up_at((desc.zero(), desc.zero()), Branch::First);
    m[1] = local_mult_at_origin(&strict_transform(curve, &a1_chart)?.poly);
    // b-chain
    let mut chart = ChartMap::base_parse(&desc, "s", "1", "t");
    for k in 0..4 {
        chart = chart.blow_up_at((desc.zero(), desc.zero()), Branch::First);
        m[2 + k] = *strict_transform(curve, &chart)?
            .exceptional_orders
            .last()
            .unwrap();
    }
    // p(α), p(β)
    m[6] = multiplicity_at(curve, &point_p(&p.alpha));
    m[7] = multiplicity_at(curve, &point_p(&p.beta));
    // q and r
    let qc = contact_chart(&desc).blow_up_at((p.lambda.clone(), desc.zero()), Branch::First);
    m[8] = *strict_transform(curve, &qc)?.exceptional_orders.last().unwrap();
    let rc = r_chart(&desc, &p.lambda).blow_up_at((p.mu.clone(), desc.zero()), Branch::First);
    m[9] = *strict_transform(curve, &rc)?.exceptional_orders.last().unwrap();
    Ok(m)
}

fn local_mult_at_origin(f: &Poly) -> u32 {
    let desc = f.descriptor().clone();
    if !f.eval(&[desc.zero(), desc.zero()]).is_zero() {
        return 0;
    }
    // smallest total degree after discarding terms not vanishing at 0
    f.min_degree().unwrap_or(0)
}

pub fn verify_figures(
    p: &ParameterSet,
    g1: &PlaneCurve,
    g2: &PlaneCurve,
) -> Result<Vec<CheckResult>, ConstructionError> {
    use num_bigint::BigInt;
    let mut checks = Vec::new();

    // derive the quartic classes from chart data and compare with the
    // embedded tables
    for (which, curve) in [(1usize, g1), (2usize, g2)] {
        let mults = center_multiplicities(p, curve)?;
        let expected = picard::configuration_class(if which == 1 { "gamma~1" } else { "gamma~2" });
        let mut as_i64 = [0i64; 10];
        for (i, v) in mults.iter().enumerate() {
            as_i64[i] = *v as i64;
        }
        let derived = picard::DivisorClass::from_plane_curve(4, as_i64);
        checks.push(CheckResult::new(
            &format!("class_gamma{which}_from_charts"),
            derived == expected,
            format!("center multiplicities {mults:?}"),
        ));
    }

    // golden table checks on X'
    let mut xprime_ok = true;
    let mut detail = String::new();
    for (gamma, p3) in [("gamma'1", "E_p_alpha"), ("gamma'2", "E_p_beta")] {
        let g = picard::xprime_configuration_class(gamma);
        if picard::self_intersection(&g) != BigInt::from(1) {
            xprime_ok = false;
            detail.push_str(&format!("{gamma}^2 != 1; "));
        }
        for (name, v) in [(p3, 3i64), ("E_a1", 1), ("E_b3", 1), ("L~ab", 1)] {
            if picard::pair(&g, &picard::xprime_configuration_class(name)) != BigInt::from(v) {
                xprime_ok = false;
                detail.push_str(&format!("{gamma}.{name} != {v}; "));
            }
        }
    }
    checks.push(CheckResult::new(
        "xprime_brackets",
        xprime_ok,
        if detail.is_empty() {
            "X' quartic rows match".into()
        } else {
            detail
        },
    ));

    // golden table checks on X
    let eq_self = |name: &str, v: i64| {
        picard::self_intersection(&picard::configuration_class(name)) == BigInt::from(v)
    };
    checks.push(CheckResult::new(
        "x_self_intersections",
        eq_self("E~q", -2) && eq_self("E_r", -1) && eq_self("L~bc", -3),
        "E~q = -2, E_r = -1, L~bc = -3".into(),
    ));

    let negatives = picard::negative_configuration_names();
    let mut squares: Vec<i64> = negatives
        .iter()
        .map(|n| {
            let s = picard::self_intersection(&picard::configuration_class(n));
            i64::try_from(&s).expect("small")
        })
        .collect();
    squares.sort_unstable();
    checks.push(CheckResult::new(
        "r_profile",
        negatives.len() == 9 && squares == vec![-3, -2, -2, -2, -2, -2, -2, -2, -2],
        format!("R self-intersections {squares:?}"),
    ));

    let g1c = picard::configuration_class("gamma~1");
    let brackets: Vec<(&str, i64)> = vec![
        ("E_a1", 1),
        ("E_p_alpha", 3),
        ("E_p_beta", 0),
        ("E_r", 1),
        ("L~ab", 1),
    ];
    let bracket_ok = brackets.iter().all(|(n, v)| {
        picard::pair(&g1c, &picard::configuration_class(n)) == BigInt::from(*v)
    });
    checks.push(CheckResult::new(
        "x_brackets_gamma1",
        bracket_ok,
        "brackets (1, 3, 0, 1, 1)".into(),
    ));

    Ok(checks)
}

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

/// A diagonal projectivity (x : y : z) ↦ (x : ξ·y : θ·z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMap {
    pub xi: FieldValue,
    pub theta: FieldValue,
}

impl DiagonalMap {
    pub fn describe(&self) -> String {
        format!("(x:y:z) -> (x:{}*y:{}*z)", self.xi, self.theta)
    }
}

fn diagonal_image(curve: &PlaneCurve, map: &DiagonalMap) -> PlaneCurve {
    let desc = curve.descriptor().clone();
    let xyz = PlaneCurve::xyz();
    let image = curve.equation().substitute(&[
        Poly::var(&desc, &xyz, 0),
        Poly::var(&desc, &xyz, 1).scale(&map.xi),
        Poly::var(&desc, &xyz, 2).scale(&map.theta),
    ]);
    PlaneCurve::new(image).expect("invertible substitution")
}

/// Search for a diagonal projectivity sending Γ₁ to Γ₂ (as normalized
/// equations).  Exhaustive over finite fields; over ℚ the triple point
/// pins θ = α/β and ξ is solved from coefficient ratios.
fn diagonal_search(
    p: &ParameterSet,
    g1: &PlaneCurve,
    g2: &PlaneCurve,
) -> Result<Option<DiagonalMap>, ConstructionError> {
    let desc = p.field.clone();
    if desc.is_finite() {
        let elements: Vec<FieldValue> = desc
            .enumerate()
            .map_err(|e| ConstructionError::Internal(e.to_string()))?
            .collect();
        for xi in elements.iter().filter(|v| !v.is_zero()) {
            for theta in elements.iter().filter(|v| !v.is_zero()) {
                let map = DiagonalMap {
                    xi: xi.clone(),
                    theta: theta.clone(),
                };
                if diagonal_image(g1, &map) == *g2 {
                    return Ok(Some(map));
                }
            }
        }
        return Ok(None);
    }
    // the triple point of Γ₁ must go to the triple point of Γ₂
    let theta = p
        .alpha
        .div(&p.beta)
        .map_err(|e| ConstructionError::Internal(e.to_string()))?;
    // candidate ξ from coefficient ratios of the xy³ monomial (always
    // present): Γᵢ's xy³ coefficient is −θᵢ³λ, and the z⁴ coefficients
    // fix the proportionality scalar
    let coeff = |c: &PlaneCurve, e: [u32; 3]| c.equation().coeff(&e);
    let k_num = coeff(g2, [0, 0, 4]);
    let k_den = {
        // z⁴ coefficient of Γ₁ after x ↦ x, z ↦ θz
        let th4 = theta.pow(4).map_err(|e| ConstructionError::Internal(e.to_string()))?;
        coeff(g1, [0, 0, 4]).mul(&th4)
    };
    if k_den.is_zero() || k_num.is_zero() {
        return Ok(None);
    }
    let k = k_num
        .div(&k_den)
        .map_err(|e| ConstructionError::Internal(e.to_string()))?;
    // ξ³ from the xy³ monomial
    let c1 = coeff(g1, [1, 3, 0]);
    let c2 = coeff(g2, [1, 3, 0]);
    if c1.is_zero() || c2.is_zero() {
        return Ok(None);
    }
    let xi3 = c2
        .mul(&k.inv().map_err(|e| ConstructionError::Internal(e.to_string()))?)
        .div(&c1)
        .map_err(|e| ConstructionError::Internal(e.to_string()))?;
    // exact rational cube root
    let Some(xi) = rational_nth_root(&xi3, 3) else {
        return Ok(None);
    };
    let map = DiagonalMap { xi, theta };
    if diagonal_image(g1, &map) == *g2 {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn rational_nth_root(x: &FieldValue, n: u32) -> Option<FieldValue> {
    use num_bigint::BigInt;
    use num_traits::Signed;
    let r = x.as_rational()?;
    let root_of = |v: &BigInt| -> Option<BigInt> {
        let mag = v.abs();
        let root = mag.nth_root(n);
        if num_traits::pow(root.clone(), n as usize) == mag {
            Some(root)
        } else {
            None
        }
    };
    let rn = root_of(r.numer())?;
    let rd = root_of(r.denom())?;
    let mut val = num_rational::BigRational::new(rn, rd);
    if r.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        val = -val;
    }
    FieldValue::from_big_rational(x.descriptor(), &val).ok()
}

/// Decide projective equivalence: the closed-form criterion
/// (μ = 0 and α + β = 0) cross-checked against the diagonal-map search.
pub fn decide_projective_equivalence(
    p: &ParameterSet,
    g1: &PlaneCurve,
    g2: &PlaneCurve,
) -> Result<(bool, Option<DiagonalMap>), ConstructionError> {
    let closed = p.mu.is_zero() && p.alpha.add(&p.beta).is_zero();
    let search = diagonal_search(p, g1, g2)?;
    if closed != search.is_some() {
        return Err(ConstructionError::CriterionMismatch(format!(
            "closed-form criterion says {closed}, diagonal search says {}",
            search.is_some()
        )));
    }
    Ok((closed, search))
}

/// The two degree-8 ramification forms F₁ and F₂.
pub fn build_forms(
    p: &ParameterSet,
    g1: &PlaneCurve,
    g2: &PlaneCurve,
) -> Result<((Parametrization, BinaryForm), (Parametrization, BinaryForm)), ConstructionError> {
    let par1 = build_parametrization(&p.alpha, &p.lambda, &p.mu)?;
    let par2 = build_parametrization(&p.beta, &p.lambda, &p.mu)?;
    if !par1.lies_on(g1) || !par2.lies_on(g2) {
        return Err(ConstructionError::Internal(
            "parametrization does not lie on its curve".into(),
        ));
    }
    let (_, q1) = pullback_form(&par1, g2, &p.alpha, &p.beta, &p.lambda, &p.mu)?;
    let (_, q2) = pullback_form(&par2, g1, &p.beta, &p.alpha, &p.lambda, &p.mu)?;
    Ok(((par1, attach_f(&q1)), (par2, attach_f(&q2))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoEvidence {
    Witness {
        a: FieldValue,
        c: FieldValue,
        d: FieldValue,
    },
    Certificate {
        primes: Vec<u64>,
    },
    ExhaustedSearch,
}

/// Decide isomorphism of the two complements via equivalence of F₁, F₂
/// under substitutions fixing (0:1).
pub fn decide_isomorphic(
    f1: &BinaryForm,
    f2: &BinaryForm,
) -> Result<(bool, IsoEvidence), ConstructionError> {
    match equivalent_fixing_point(f1, f2) {
        Some((a, c, d)) => Ok((true, IsoEvidence::Witness { a, c, d })),
        None => {
            if f1.descriptor().is_finite() {
                Ok((false, IsoEvidence::ExhaustedSearch))
            } else {
                match modular_nonequivalence_certificate(f1, f2) {
                    Some(primes) => Ok((false, IsoEvidence::Certificate { primes })),
                    None => Ok((false, IsoEvidence::ExhaustedSearch)),
                }
            }
        }
    }
}

/// Whether the image curve on the Γ̃ᵢ side is of type I: false whenever
/// the ramified form together with the Γ̃ᵢ ∩ L̃_ab point has support at
/// two or more distinct points.
pub fn type_i_verdict(f: &BinaryForm) -> bool {
    let desc = f.descriptor().clone();
    let extra = P1Point::new(desc.zero(), desc.one());
    let div = identified_points_divisor(f, &[extra]);
    div.support_size() < 2
}

// ---------------------------------------------------------------------------
// the aggregate report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionAudit {
    pub i_a: u32,
    pub i_b: u32,
    pub chain_total: u32,
    pub form_degree: u32,
    /// vanishing order of the pullback form at the parameter over a,
    /// beyond the two divided out by construction
    pub residual_a: u32,
    /// vanishing order at the parameter over b beyond the divided seven
    pub residual_b: u32,
    /// intersections away from a and b
    pub free: u32,
    pub bezout_total: u32,
    pub oracle_agrees: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub field: String,
    pub alpha: String,
    pub beta: String,
    pub lambda: String,
    pub mu: String,
    pub gamma1: String,
    pub gamma2: String,
    pub omega_membership: Vec<Vec<CheckResult>>,
    pub figure_checks: Vec<CheckResult>,
    pub contraction_checks: Vec<CheckResult>,
    pub degrees: [u64; 2],
    pub intersection_audit: IntersectionAudit,
    pub f1: Vec<String>,
    pub f2: Vec<String>,
    pub projectively_equivalent: bool,
    pub projective_witness: Option<String>,
    pub isomorphic: bool,
    pub isomorphism_witness: Option<String>,
    pub nonequivalence_certificate: Option<Vec<u64>>,
    pub type_i: [bool; 2],
    pub elapsed_ms: u128,
}

impl VerdictReport {
    pub fn all_checks_passed(&self) -> bool {
        self.omega_membership
            .iter()
            .flatten()
            .chain(self.figure_checks.iter())
            .chain(self.contraction_checks.iter())
            .all(|c| c.passed)
            && self.degrees == [39, 39]
            && self.intersection_audit.passed
            && !self.type_i[0]
            && !self.type_i[1]
            && (!self.projectively_equivalent || self.isomorphic)
    }
}

/// Vanishing order of a binary form at a point of P¹: the number of
/// times the dual linear form divides it.
fn form_order_at(form: &BinaryForm, pt_u: &FieldValue, pt_v: &FieldValue) -> u32 {
    let desc = form.descriptor().clone();
    let uv = Poly::vars_from(&["u", "v"]);
    let d = form.degree();
    let mut poly = Poly::zero(&desc, &uv);
    for (i, c) in form.coeffs().iter().enumerate() {
        poly = poly.add(&Poly::monomial(
            &desc,
            &uv,
            vec![i as u32, d - i as u32],
            c.clone(),
        ));
    }
    let line = Poly::var(&desc, &uv, 0)
        .scale(pt_v)
        .sub(&Poly::var(&desc, &uv, 1).scale(pt_u));
    let mut order = 0;
    while let Some(q) = poly.div_exact(&line) {
        poly = q;
        order += 1;
        if poly.is_zero() {
            break;
        }
    }
    order
}

/// Bézout audit of Γ₁ ∩ Γ₂.  The pullback of Γ₂ along Γ₁'s
/// parametrization divides out exactly two intersections over a and
/// seven over b, so the local numbers must satisfy
/// I_a = 2 + residual_a and I_b = 7 + residual_b, with the remaining
/// roots making up the Bézout total 16 = 4·4.
pub fn intersection_audit(
    p: &ParameterSet,
    g1: &PlaneCurve,
    g2: &PlaneCurve,
    f1: &BinaryForm,
) -> Result<IntersectionAudit, ConstructionError> {
    let desc = p.field.clone();
    let a = point_a(&desc);
    let b = point_b(&desc);
    let i_a = intersection_multiplicity(g1, g2, &a)?;
    let i_b = intersection_multiplicity(g1, g2, &b)?;
    let oracle_a = intersection_multiplicity_by_blowup(g1, g2, &a)?;
    let oracle_b = intersection_multiplicity_by_blowup(g1, g2, &b)?;
    let oracle_agrees = i_a == oracle_a && i_b == oracle_b;
    // chain total: product of the strict-transform orders of both curves
    // at the six centers over b
    let m1 = center_multiplicities(p, g1)?;
    let m2 = center_multiplicities(p, g2)?;
    let chain_total: u32 = (2..=5)
        .chain([8usize, 9])
        .map(|i| m1[i] * m2[i])
        .sum();
    let form_degree = f1.degree();
    // F₁ carries one attached root at the parameter (1:0) over b; the
    // parameter over a is (μ:−1)
    let minus_one = desc.zero().sub(&desc.one());
    let residual_a = form_order_at(f1, &p.mu, &minus_one);
    let residual_b = form_order_at(f1, &desc.one(), &desc.zero()) - 1;
    let free = form_degree - 1 - residual_a - residual_b;
    let bezout_total = i_a + i_b + free;
    let passed = oracle_agrees
        && form_degree == 8
        && chain_total == 6
        && i_a == 2 + residual_a
        && i_b == 7 + residual_b
        && bezout_total == 16;
    Ok(IntersectionAudit {
        i_a,
        i_b,
        chain_total,
        form_degree,
        residual_a,
        residual_b,
        free,
        bezout_total,
        oracle_agrees,
        passed,
    })
}

pub fn full_report(p: &ParameterSet) -> Result<VerdictReport, ConstructionError> {
    let started = std::time::Instant::now();
    let (g1, g2) = build_gammas(p)?;
    let omega = vec![verify_omega(p, 1, &g1)?, verify_omega(p, 2, &g2)?];
    let figures = verify_figures(p, &g1, &g2)?;

    let mut contraction_checks = Vec::new();
    let mut degrees = [0u64; 2];
    for i in [1usize, 2] {
        match picard::contract_sequence(i) {
            Ok(steps) => contraction_checks.push(CheckResult::new(
                &format!("contraction_eta{i}"),
                steps.len() == 10,
                format!("{} steps, all (-1)", steps.len()),
            )),
            Err(e) => contraction_checks.push(CheckResult::new(
                &format!("contraction_eta{i}"),
                false,
                e.to_string(),
            )),
        }
        let deg = picard::image_degree(i)
            .map_err(|e| ConstructionError::Internal(e.to_string()))?;
        degrees[i - 1] = u64::try_from(&deg).map_err(|_| {
            ConstructionError::Internal("image degree out of range".into())
        })?;
        contraction_checks.push(CheckResult::new(
            &format!("tower_resolution_eta{i}"),
            picard::tower_resolution_check(i),
            "tower-resolution structure".into(),
        ));
    }

    let ((_, f1), (_, f2)) = build_forms(p, &g1, &g2)?;
    let audit = intersection_audit(p, &g1, &g2, &f1)?;

    let (proj, proj_witness) = decide_projective_equivalence(p, &g1, &g2)?;
    let (iso, evidence) = decide_isomorphic(&f1, &f2)?;
    if proj && !iso {
        return Err(ConstructionError::CriterionMismatch(
            "projectively equivalent but not isomorphic".into(),
        ));
    }
    let type_i = [type_i_verdict(&f1), type_i_verdict(&f2)];

    let (iso_witness, certificate) = match &evidence {
        IsoEvidence::Witness { a, c, d } => (
            Some(format!("(u:v) -> ({a}*u : {c}*u + {d}*v)")),
            None,
        ),
        IsoEvidence::Certificate { primes } => (None, Some(primes.clone())),
        IsoEvidence::ExhaustedSearch => (None, None),
    };

    Ok(VerdictReport {
        field: p.field.to_string(),
        alpha: p.alpha.to_string(),
        beta: p.beta.to_string(),
        lambda: p.lambda.to_string(),
        mu: p.mu.to_string(),
        gamma1: g1.equation().to_string(),
        gamma2: g2.equation().to_string(),
        omega_membership: omega,
        figure_checks: figures,
        contraction_checks,
        degrees,
        intersection_audit: audit,
        f1: f1.coeffs().iter().map(|c| c.to_string()).collect(),
        f2: f2.coeffs().iter().map(|c| c.to_string()).collect(),
        projectively_equivalent: proj,
        projective_witness: proj_witness.map(|w| w.describe()),
        isomorphic: iso,
        isomorphism_witness: iso_witness,
        nonequivalence_certificate: certificate,
        type_i,
        elapsed_ms: started.elapsed().as_millis(),
    })
}
