//! Rank-11 Picard-lattice arithmetic for the blown-up surface X:
//! divisor classes over the basis (H, E_a, E_a1, E_b, E_b1, E_b2, E_b3,
//! E_p_alpha, E_p_beta, E_q, E_r) with the diagonal form (1, -1, ..., -1),
//! contraction sequences, and image-degree computation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub const RANK: usize = 11;

/// Labels of the lattice basis, in coefficient order.
pub const BASIS: [&str; RANK] = [
    "H", "E_a", "E_a1", "E_b", "E_b1", "E_b2", "E_b3", "E_p_alpha", "E_p_beta", "E_q", "E_r",
];

/// Indices of the ten blow-up centers in the basis (everything but H).
pub mod center {
    pub const A: usize = 1;
    pub const A1: usize = 2;
    pub const B: usize = 3;
    pub const B1: usize = 4;
    pub const B2: usize = 5;
    pub const B3: usize = 6;
    pub const P_ALPHA: usize = 7;
    pub const P_BETA: usize = 8;
    pub const Q: usize = 9;
    pub const R: usize = 10;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("class at stage {stage} has self-intersection {square}, not -1")]
    NotContractible { stage: usize, square: BigInt },
    #[error("final canonical class square is {0}, expected 9")]
    BadCanonical(BigInt),
    #[error("pushed-forward class pairs negatively with a tracked class at stage {0}")]
    NegativePairing(usize),
}

/// An integer divisor class on X in the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    coeffs: [BigInt; RANK],
}

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass {
            coeffs: std::array::from_fn(|_| BigInt::zero()),
        }
    }

    pub fn from_i64(v: [i64; RANK]) -> Self {
        DivisorClass {
            coeffs: std::array::from_fn(|i| BigInt::from(v[i])),
        }
    }

    /// Class of a plane curve of the given degree with the given
    /// multiplicities at the ten centers: deg·H − Σ mᵢ·Eᵢ.
    pub fn from_plane_curve(degree: i64, mults: [i64; RANK - 1]) -> Self {
        let mut v = [0i64; RANK];
        v[0] = degree;
        for (i, m) in mults.iter().enumerate() {
            v[i + 1] = -m;
        }
        Self::from_i64(v)
    }

    /// Strict transform of the exceptional curve over center `idx`:
    /// E_idx minus the later centers lying on it.
    pub fn from_exceptional(idx: usize, later_centers_on_it: &[usize]) -> Self {
        let mut c = Self::zero();
        c.coeffs[idx] = BigInt::one();
        for &j in later_centers_on_it {
            c.coeffs[j] = -BigInt::one();
        }
        c
    }

    pub fn coeffs(&self) -> &[BigInt; RANK] {
        &self.coeffs
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    pub fn scale(&self, k: &BigInt) -> DivisorClass {
        DivisorClass {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
        }
    }

    /// Push forward under the contraction of the (−1)-class E:
    /// C ↦ C + (C·E)·E.  Applies verbatim to the canonical class.
    pub fn pushforward(&self, contracted: &DivisorClass) -> DivisorClass {
        self.add(&contracted.scale(&pair(self, contracted)))
    }
}

/// Intersection pairing under the diagonal form (1, −1, …, −1).
pub fn pair(a: &DivisorClass, b: &DivisorClass) -> BigInt {
    let mut acc = &a.coeffs[0] * &b.coeffs[0];
    for i in 1..RANK {
        acc -= &a.coeffs[i] * &b.coeffs[i];
    }
    acc
}

pub fn self_intersection(a: &DivisorClass) -> BigInt {
    pair(a, a)
}

/// Canonical class of X: −3H + Σ Eᵢ.
pub fn canonical_class() -> DivisorClass {
    DivisorClass::from_i64([-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])
}

/// Names of the configuration curves, in a fixed order: the two quartic
/// strict transforms, the three triangle lines, and the ten curves lying
/// over the blown-up centers.
pub const CONFIGURATION_NAMES: [&str; 15] = [
    "gamma~1", "gamma~2", "L~ab", "L~ac", "L~bc", "E~a", "E_a1", "E~b", "E~b1", "E~b2", "E~b3",
    "E_p_alpha", "E_p_beta", "E~q", "E_r",
];

/// Classes of the configuration curves on X, derived from the blow-up
/// data: plane degree and center multiplicities for the plane curves,
/// later centers for the exceptional curves.
pub fn configuration_classes() -> Vec<(&'static str, DivisorClass)> {
    use center::*;
    vec![
        (
            "gamma~1",
            DivisorClass::from_plane_curve(4, [1, 1, 1, 1, 1, 1, 3, 0, 1, 1]),
        ),
        (
            "gamma~2",
            DivisorClass::from_plane_curve(4, [1, 1, 1, 1, 1, 1, 0, 3, 1, 1]),
        ),
        (
            "L~ab",
            DivisorClass::from_plane_curve(1, [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
        ),
        (
            "L~ac",
            DivisorClass::from_plane_curve(1, [1, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
        ),
        (
            "L~bc",
            DivisorClass::from_plane_curve(1, [0, 0, 1, 1, 1, 1, 0, 0, 0, 0]),
        ),
        ("E~a", DivisorClass::from_exceptional(A, &[A1])),
        ("E_a1", DivisorClass::from_exceptional(A1, &[])),
        ("E~b", DivisorClass::from_exceptional(B, &[B1])),
        ("E~b1", DivisorClass::from_exceptional(B1, &[B2])),
        ("E~b2", DivisorClass::from_exceptional(B2, &[B3])),
        ("E~b3", DivisorClass::from_exceptional(B3, &[Q])),
        ("E_p_alpha", DivisorClass::from_exceptional(P_ALPHA, &[])),
        ("E_p_beta", DivisorClass::from_exceptional(P_BETA, &[])),
        ("E~q", DivisorClass::from_exceptional(Q, &[R])),
        ("E_r", DivisorClass::from_exceptional(R, &[])),
    ]
}

/// Classes of the configuration curves on X′ (before the q and r
/// blow-ups), embedded in the same rank-11 lattice with zero E_q and E_r
/// coordinates.  Here the quartic strict transforms have
/// self-intersection 1 and E_b3 is still a (−1)-curve.
pub fn xprime_configuration_classes() -> Vec<(&'static str, DivisorClass)> {
    use center::*;
    vec![
        (
            "gamma'1",
            DivisorClass::from_plane_curve(4, [1, 1, 1, 1, 1, 1, 3, 0, 0, 0]),
        ),
        (
            "gamma'2",
            DivisorClass::from_plane_curve(4, [1, 1, 1, 1, 1, 1, 0, 3, 0, 0]),
        ),
        (
            "L~ab",
            DivisorClass::from_plane_curve(1, [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
        ),
        (
            "L~ac",
            DivisorClass::from_plane_curve(1, [1, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
        ),
        (
            "L~bc",
            DivisorClass::from_plane_curve(1, [0, 0, 1, 1, 1, 1, 0, 0, 0, 0]),
        ),
        ("E~a", DivisorClass::from_exceptional(A, &[A1])),
        ("E_a1", DivisorClass::from_exceptional(A1, &[])),
        ("E~b", DivisorClass::from_exceptional(B, &[B1])),
        ("E~b1", DivisorClass::from_exceptional(B1, &[B2])),
        ("E~b2", DivisorClass::from_exceptional(B2, &[B3])),
        ("E_b3", DivisorClass::from_exceptional(B3, &[])),
        ("E_p_alpha", DivisorClass::from_exceptional(P_ALPHA, &[])),
        ("E_p_beta", DivisorClass::from_exceptional(P_BETA, &[])),
    ]
}

pub fn xprime_configuration_class(name: &str) -> DivisorClass {
    xprime_configuration_classes()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
        .unwrap_or_else(|| panic!("unknown X' configuration curve {name}"))
}

pub fn configuration_class(name: &str) -> DivisorClass {
    configuration_classes()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
        .unwrap_or_else(|| panic!("unknown configuration curve {name}"))
}

/// The nine negative curves whose complement is studied: everything of
/// self-intersection ≤ −2.
pub fn negative_configuration_names() -> Vec<&'static str> {
    vec![
        "L~ab", "L~ac", "L~bc", "E~a", "E~b", "E~b1", "E~b2", "E~b3", "E~q",
    ]
}

/// Contraction order for η_i: the quartic first, then the chain.
pub fn contraction_order(i: usize) -> Vec<&'static str> {
    let gamma = if i == 1 { "gamma~1" } else { "gamma~2" };
    vec![
        gamma, "L~ab", "E~b", "E~b1", "E~b2", "E~b3", "E~q", "L~bc", "L~ac", "E~a",
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    /// Image of the contracted curve at its stage (a (−1)-class there).
    pub contracted: DivisorClass,
    /// 1-based stage index.
    pub stage: usize,
    pub name: &'static str,
}

/// Run the 10-step contraction η_i, checking the (−1) condition at every
/// stage and K² = 9 at the end.
pub fn contract_sequence(i: usize) -> Result<Vec<ContractionStep>, PicardError> {
    let order = contraction_order(i);
    contract_named_sequence(&order)
}

/// Contract an explicit list of configuration curves in order.
pub fn contract_named_sequence(order: &[&'static str]) -> Result<Vec<ContractionStep>, PicardError> {
    let mut tracked: Vec<(&str, DivisorClass)> = configuration_classes();
    let mut k = canonical_class();
    let mut steps = Vec::with_capacity(order.len());
    for (idx, name) in order.iter().enumerate() {
        let stage = idx + 1;
        let class = tracked
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| panic!("unknown configuration curve {name}"));
        let square = self_intersection(&class);
        if square != BigInt::from(-1) {
            return Err(PicardError::NotContractible { stage, square });
        }
        // every curve not yet contracted must pair ≥ 0 with the center
        for (n, c) in &tracked {
            if order[idx..].contains(n) && *n != *name && pair(c, &class).is_negative() {
                return Err(PicardError::NegativePairing(stage));
            }
        }
        for (_, c) in tracked.iter_mut() {
            *c = c.pushforward(&class);
        }
        k = k.pushforward(&class);
        steps.push(ContractionStep {
            contracted: class,
            stage,
            name,
        });
    }
    if order.len() == 10 {
        let ksq = self_intersection(&k);
        if ksq != BigInt::from(9) {
            return Err(PicardError::BadCanonical(ksq));
        }
    }
    Ok(steps)
}

/// Degree of η_i(Γ̃_{3−i}): pairing of the fully pushed-forward class
/// of the other quartic with the line class of the final plane,
/// recovered as (−1/3)·K.
pub fn image_degree(i: usize) -> Result<BigInt, PicardError> {
    let steps = contract_sequence(i)?;
    let other = if i == 1 { "gamma~2" } else { "gamma~1" };
    let mut class = configuration_class(other);
    let mut k = canonical_class();
    for step in &steps {
        class = class.pushforward(&step.contracted);
        k = k.pushforward(&step.contracted);
    }
    let minus_deg3 = pair(&class, &k);
    let three = BigInt::from(3);
    assert!(
        (&minus_deg3 % &three).is_zero(),
        "pairing with K not divisible by 3"
    );
    Ok(-minus_deg3 / three)
}

/// Self-intersection of the image curve after all contractions.
pub fn image_self_intersection(i: usize) -> Result<BigInt, PicardError> {
    let steps = contract_sequence(i)?;
    let other = if i == 1 { "gamma~2" } else { "gamma~1" };
    let mut class = configuration_class(other);
    for step in &steps {
        class = class.pushforward(&step.contracted);
    }
    Ok(self_intersection(&class))
}

/// Check that η_i is a tower resolution: exactly one (−1)-curve is
/// collapsed at the start (all later ones start at ≤ −2 on X), each
/// subsequent center lies over the previous one (consecutive images pair
/// to 1), and the final canonical square is 9.
pub fn tower_resolution_check(i: usize) -> bool {
    let order = contraction_order(i);
    let steps = match contract_sequence(i) {
        Ok(s) => s,
        Err(_) => return false,
    };
    // only the first collapsed curve is a (−1)-curve on X itself
    for (idx, name) in order.iter().enumerate() {
        let sq = self_intersection(&configuration_class(name));
        let expected_neg_one = idx == 0;
        if expected_neg_one != (sq == BigInt::from(-1)) {
            return false;
        }
    }
    // chain condition: each contracted image meets the previous center
    for w in steps.windows(2) {
        // the later image was already pushed through the earlier stages;
        // recompute the pairing at the earlier stage
        let mut later = configuration_class(w[1].name);
        for step in &steps {
            if step.stage >= w[1].stage {
                break;
            }
            if step.stage < w[0].stage {
                later = later.pushforward(&step.contracted);
            }
        }
        if pair(&later, &w[0].contracted) != BigInt::one() {
            return false;
        }
    }
    // the other quartic must start as a (−1)-curve as well
    let other = if i == 1 { "gamma~2" } else { "gamma~1" };
    self_intersection(&configuration_class(other)) == BigInt::from(-1)
}
