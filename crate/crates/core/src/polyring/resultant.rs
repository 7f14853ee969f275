//! Resultants of polynomials via the Sylvester matrix, with a
//! fraction-free (Bareiss) determinant over the coefficient ring.

use crate::polyring::poly::{Poly, PolyError};

/// Resultant of `f` and `g` with respect to variable `var`.  The result
/// is a polynomial in the remaining variables (with `var`-degree zero).
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Result<Poly, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let desc = f.descriptor().clone();
    let vars = f.vars().clone();
    let m = f.degree_in(var).unwrap() as usize;
    let n = g.degree_in(var).unwrap() as usize;
    if m == 0 && n == 0 {
        return Ok(Poly::constant(&desc, &vars, desc.one()));
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let size = m + n;
    let zero = Poly::zero(&desc, &vars);
    let mut mat = vec![vec![zero.clone(); size]; size];
    // n rows of f coefficients, highest degree first
    for row in 0..n {
        for (j, c) in fc.iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    // m rows of g coefficients
    for row in 0..m {
        for (j, c) in gc.iter().rev().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    bareiss_det(mat, &desc, &vars)
}

fn bareiss_det(
    mut mat: Vec<Vec<Poly>>,
    desc: &crate::exactfield::FieldDescriptor,
    vars: &std::sync::Arc<Vec<String>>,
) -> Result<Poly, PolyError> {
    let n = mat.len();
    if n == 0 {
        return Ok(Poly::constant(desc, vars, desc.one()));
    }
    let mut sign = false;
    let mut prev = Poly::constant(desc, vars, desc.one());
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(Poly::zero(desc, vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k]
                    .mul(&mat[i][j])
                    .sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num.div_exact(&prev).ok_or(PolyError::InexactDivision)?;
            }
            mat[i][k] = Poly::zero(desc, vars);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}
