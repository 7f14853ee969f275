//! Projective plane curves and points.

use std::fmt;
use std::sync::Arc;

use crate::exactfield::{FieldDescriptor, FieldValue};
use crate::polyring::poly::{Poly, PolyError};

/// A point of the projective plane, stored with its first nonzero
/// coordinate normalized to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: [FieldValue; 3],
}

impl ProjPoint {
    pub fn new(x: FieldValue, y: FieldValue, z: FieldValue) -> Result<Self, PolyError> {
        let coords = [x, y, z];
        let pivot = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(PolyError::ZeroPoint)?;
        let inv = pivot.inv().expect("nonzero pivot");
        Ok(ProjPoint {
            coords: [
                coords[0].mul(&inv),
                coords[1].mul(&inv),
                coords[2].mul(&inv),
            ],
        })
    }

    pub fn from_ints(desc: &FieldDescriptor, x: i64, y: i64, z: i64) -> Result<Self, PolyError> {
        Self::new(desc.from_int(x), desc.from_int(y), desc.from_int(z))
    }

    pub fn coords(&self) -> &[FieldValue; 3] {
        &self.coords
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        self.coords[0].descriptor()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A plane curve cut out by a homogeneous form in (x, y, z), stored with
/// the graded-lex leading coefficient normalized to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    equation: Poly,
    degree: u32,
}

impl PlaneCurve {
    /// Standard homogeneous coordinate ring variables.
    pub fn xyz() -> Arc<Vec<String>> {
        Poly::vars_from(&["x", "y", "z"])
    }

    pub fn new(equation: Poly) -> Result<Self, PolyError> {
        if equation.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if equation.vars().len() != 3 || !equation.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let degree = equation.degree().expect("nonzero");
        Ok(PlaneCurve {
            equation: equation.normalize_leading(),
            degree,
        })
    }

    pub fn parse(desc: &FieldDescriptor, text: &str) -> Result<Self, PolyError> {
        Self::new(Poly::parse(desc, &Self::xyz(), text)?)
    }

    pub fn equation(&self) -> &Poly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        self.equation.descriptor()
    }

    pub fn evaluate(&self, p: &ProjPoint) -> FieldValue {
        self.equation.eval(p.coords())
    }

    pub fn passes_through(&self, p: &ProjPoint) -> bool {
        self.evaluate(p).is_zero()
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.equation)
    }
}
