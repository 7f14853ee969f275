//! Linear conditions on the coefficient space of degree-d plane forms,
//! and kernel computation for systems of such conditions.
//!
//! Conditions at infinitely near points are produced by a [`LocalProbe`]:
//! a generic curve with unknown coefficients pushed into an affine chart,
//! translated, and blown up, emitting one linear functional per required
//! Taylor coefficient.

use std::sync::Arc;

use crate::exactfield::{FieldDescriptor, FieldValue};
use crate::polyring::curve::{PlaneCurve, ProjPoint};
use crate::polyring::poly::{Poly, PolyError};

/// Degree-d monomials in (x, y, z), in a fixed order shared by all
/// condition rows: descending lexicographic in the exponent triple.
pub fn monomials_of_degree(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// One linear functional on the coefficient space of degree-d forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCondition {
    row: Vec<FieldValue>,
}

impl LinearCondition {
    pub fn from_row(row: Vec<FieldValue>) -> Self {
        LinearCondition { row }
    }

    pub fn row(&self) -> &[FieldValue] {
        &self.row
    }

    /// The condition "the curve passes through p".
    pub fn through_point(desc: &FieldDescriptor, degree: u32, p: &ProjPoint) -> Self {
        let row = monomials_of_degree(degree)
            .iter()
            .map(|m| {
                let mut v = desc.one();
                for (c, &e) in p.coords().iter().zip(m.iter()) {
                    if e > 0 {
                        v = v.mul(&c.pow(e as i64).expect("nonnegative"));
                    }
                }
                v
            })
            .collect();
        LinearCondition { row }
    }
}

/// An affine chart of the plane: the images of (x, y, z) as polynomials
/// in the local coordinates (s, t).
#[derive(Debug, Clone)]
pub struct ChartFrame {
    images: [Poly; 3],
}

impl ChartFrame {
    pub fn new(images: [Poly; 3]) -> Self {
        ChartFrame { images }
    }

    /// Chart from textual (s, t) expressions for the three coordinates.
    pub fn parse(desc: &FieldDescriptor, x: &str, y: &str, z: &str) -> Result<Self, PolyError> {
        let st = Poly::vars_from(&["s", "t"]);
        Ok(ChartFrame {
            images: [
                Poly::parse(desc, &st, x)?,
                Poly::parse(desc, &st, y)?,
                Poly::parse(desc, &st, z)?,
            ],
        })
    }
}

/// A generic degree-d curve written in an affine chart, with one unknown
/// coefficient per degree-d monomial.  Variables: (s, t, u0, ..., uN).
#[derive(Debug, Clone)]
pub struct LocalProbe {
    desc: FieldDescriptor,
    degree: u32,
    vars: Arc<Vec<String>>,
    generic: Poly,
}

impl LocalProbe {
    pub fn new(desc: &FieldDescriptor, degree: u32, chart: &ChartFrame) -> Self {
        let monos = monomials_of_degree(degree);
        let n = monos.len();
        let mut names = vec!["s".to_string(), "t".to_string()];
        for i in 0..n {
            names.push(format!("u{i}"));
        }
        let vars = Arc::new(names);
        // lift the chart images into the extended ring
        let images: Vec<Poly> = chart
            .images
            .iter()
            .map(|p| {
                let mut lifted = Poly::zero(desc, &vars);
                for (e, c) in p.terms() {
                    let mut exps = vec![0u32; vars.len()];
                    exps[0] = e[0];
                    exps[1] = e[1];
                    lifted = lifted.add(&Poly::monomial(desc, &vars, exps, c.clone()));
                }
                lifted
            })
            .collect();
        let mut generic = Poly::zero(desc, &vars);
        for (i, m) in monos.iter().enumerate() {
            let mut term = Poly::var(desc, &vars, 2 + i);
            for (img, &e) in images.iter().zip(m.iter()) {
                if e > 0 {
                    term = term.mul(&img.pow(e));
                }
            }
            generic = generic.add(&term);
        }
        LocalProbe {
            desc: desc.clone(),
            degree,
            vars,
            generic,
        }
    }

    /// Shift local coordinates so the point (c1, c2) moves to the origin.
    pub fn translate(&mut self, c1: &FieldValue, c2: &FieldValue) {
        self.generic = self.generic.shift_var(0, c1).shift_var(1, c2);
    }

    /// Rows forcing all Taylor coefficients of total (s, t)-degree below
    /// `order` to vanish: multiplicity >= order at the origin.
    pub fn vanishing_rows(&self, order: u32) -> Vec<LinearCondition> {
        let mut rows = Vec::new();
        for i in 0..order {
            for j in 0..order - i {
                rows.push(self.coefficient_row(i, j));
            }
        }
        rows
    }

    /// The linear functional "coefficient of s^i t^j vanishes".
    pub fn coefficient_row(&self, i: u32, j: u32) -> LinearCondition {
        let n = self.vars.len() - 2;
        let mut row = vec![self.desc.zero(); n];
        for (exps, c) in self.generic.terms() {
            if exps[0] != i || exps[1] != j {
                continue;
            }
            let uidx = (2..self.vars.len()).find(|&k| exps[k] > 0);
            match uidx {
                Some(k) if exps[k] == 1 && exps[k + 1..].iter().all(|&e| e == 0) => {
                    row[k - 2] = row[k - 2].add(c);
                }
                _ => panic!("generic curve is not linear in the unknowns"),
            }
        }
        LinearCondition { row }
    }

    /// Delete all terms of total (s, t)-degree below `order`.  Valid only
    /// modulo previously emitted vanishing rows for the same order.
    pub fn impose_vanishing(&mut self, order: u32) {
        let mut out = Poly::zero(&self.desc, &self.vars);
        for (exps, c) in self.generic.terms() {
            if exps[0] + exps[1] >= order {
                out = out.add(&Poly::monomial(
                    &self.desc,
                    &self.vars,
                    exps.clone(),
                    c.clone(),
                ));
            }
        }
        self.generic = out;
    }

    /// Blow up the origin in the first chart: (s, t) -> (s t, t), then
    /// divide by t^mult.  Requires `impose_vanishing(mult)` first.
    pub fn blow_up(&mut self, mult: u32) {
        let images: Vec<Poly> = (0..self.vars.len())
            .map(|k| {
                if k == 0 {
                    Poly::var(&self.desc, &self.vars, 0).mul(&Poly::var(&self.desc, &self.vars, 1))
                } else {
                    Poly::var(&self.desc, &self.vars, k)
                }
            })
            .collect();
        let substituted = self.generic.substitute(&images);
        assert!(
            substituted.is_zero() || substituted.var_order(1) >= mult,
            "exceptional order below the imposed multiplicity"
        );
        self.generic = substituted.div_var_pow(1, mult);
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// Basis of the space of degree-d forms annihilated by all conditions.
pub fn solve_curve_conditions(
    desc: &FieldDescriptor,
    degree: u32,
    conditions: &[LinearCondition],
) -> Vec<PlaneCurve> {
    let monos = monomials_of_degree(degree);
    let n = monos.len();
    let kernel = kernel_basis(desc, conditions, n);
    let xyz = PlaneCurve::xyz();
    kernel
        .into_iter()
        .map(|vec| {
            let mut p = Poly::zero(desc, &xyz);
            for (m, c) in monos.iter().zip(vec.into_iter()) {
                p = p.add(&Poly::monomial(desc, &xyz, m.to_vec(), c));
            }
            PlaneCurve::new(p).expect("kernel vectors are nonzero")
        })
        .collect()
}

/// Kernel of the matrix whose rows are the given conditions.
pub fn kernel_basis(
    desc: &FieldDescriptor,
    conditions: &[LinearCondition],
    n: usize,
) -> Vec<Vec<FieldValue>> {
    let mut mat: Vec<Vec<FieldValue>> = conditions
        .iter()
        .map(|c| {
            assert_eq!(c.row.len(), n, "condition width mismatch");
            c.row.clone()
        })
        .collect();
    // reduced row echelon form
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let pivot_row = (rank..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        mat.swap(rank, pr);
        let inv = mat[rank][col].inv().expect("nonzero pivot");
        for v in mat[rank].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..n {
                    let delta = factor.mul(&mat[rank][c]);
                    mat[r][c] = mat[r][c].sub(&delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![desc.zero(); n];
        v[f] = desc.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = mat[r][f].neg();
        }
        basis.push(v);
    }
    basis
}
