//! Exact arithmetic over the supported base fields: arbitrary-precision
//! rationals and small finite fields GF(p^k) with an explicit modulus.
//!
//! Field elements are immutable values with structural equality; every
//! other module is parameterized over a [`FieldDescriptor`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Fields of size above this bound are rejected at construction.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("cannot enumerate an infinite field")]
    InfiniteField,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("unsupported field: {0}")]
    Unsupported(String),
    #[error("cannot parse field element `{0}`")]
    BadElement(String),
    #[error("cannot parse field descriptor `{0}`")]
    BadDescriptor(String),
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum DescriptorRepr {
    Rationals,
    /// GF(p^k) as GF(p)[g]/(modulus).  `modulus_tail` holds the
    /// coefficients c_0..c_{k-1} of the monic modulus g^k + sum c_i g^i.
    Finite {
        p: u64,
        k: usize,
        modulus_tail: Vec<u64>,
    },
}

/// Identifies a supported base field.  Cheap to clone; equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor(Arc<DescriptorRepr>);

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor(Arc::new(DescriptorRepr::Rationals))
    }

    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        check_prime(p)?;
        Ok(FieldDescriptor(Arc::new(DescriptorRepr::Finite {
            p,
            k: 1,
            modulus_tail: vec![0],
        })))
    }

    /// GF(p^k) with the given monic modulus (coefficients in ascending
    /// degree, length k+1).  When `modulus` is `None` the lexicographically
    /// smallest irreducible monic polynomial of degree k is chosen.
    pub fn extension_field(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<Self, FieldError> {
        check_prime(p)?;
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(FieldError::Unsupported(format!(
                "extension degree {k} out of range 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        let size = (p as u128).checked_pow(k as u32);
        match size {
            Some(s) if s <= MAX_FIELD_SIZE as u128 => {}
            _ => {
                return Err(FieldError::Unsupported(format!(
                    "field size {p}^{k} exceeds {MAX_FIELD_SIZE}"
                )))
            }
        }
        if k == 1 {
            return Self::prime_field(p);
        }
        let tail = match modulus {
            Some(coeffs) => {
                if coeffs.len() != k + 1 {
                    return Err(FieldError::Unsupported(format!(
                        "modulus must have degree exactly {k}"
                    )));
                }
                let lead = coeffs[k] % p;
                if lead == 0 {
                    return Err(FieldError::Unsupported("modulus is not monic".into()));
                }
                // normalize to monic
                let lead_inv = prime_inv(lead, p);
                let tail: Vec<u64> = coeffs[..k].iter().map(|&c| c % p * lead_inv % p).collect();
                if !is_irreducible(&tail, p) {
                    return Err(FieldError::ReducibleModulus { p });
                }
                tail
            }
            None => smallest_irreducible_tail(p, k),
        };
        Ok(FieldDescriptor(Arc::new(DescriptorRepr::Finite {
            p,
            k,
            modulus_tail: tail,
        })))
    }

    /// 0 for the rationals, p for GF(p^k).
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            DescriptorRepr::Rationals => 0,
            DescriptorRepr::Finite { p, .. } => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(&*self.0, DescriptorRepr::Finite { .. })
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match &*self.0 {
            DescriptorRepr::Rationals => None,
            DescriptorRepr::Finite { p, k, .. } => Some(p.pow(*k as u32)),
        }
    }

    pub fn extension_degree(&self) -> usize {
        match &*self.0 {
            DescriptorRepr::Rationals => 1,
            DescriptorRepr::Finite { k, .. } => *k,
        }
    }

    pub fn zero(&self) -> FieldValue {
        match &*self.0 {
            DescriptorRepr::Rationals => FieldValue {
                desc: self.clone(),
                repr: ValueRepr::Rat(BigRational::zero()),
            },
            DescriptorRepr::Finite { k, .. } => FieldValue {
                desc: self.clone(),
                repr: ValueRepr::Mod(vec![0; *k]),
            },
        }
    }

    pub fn one(&self) -> FieldValue {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldValue {
        match &*self.0 {
            DescriptorRepr::Rationals => FieldValue {
                desc: self.clone(),
                repr: ValueRepr::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            DescriptorRepr::Finite { p, k, .. } => {
                let mut v = vec![0; *k];
                v[0] = n.rem_euclid(*p as i64) as u64;
                FieldValue {
                    desc: self.clone(),
                    repr: ValueRepr::Mod(v),
                }
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldValue, FieldError> {
        self.from_int(num).div(&self.from_int(den))
    }

    /// The residue class of the generator symbol g, for extension fields.
    pub fn generator(&self) -> Option<FieldValue> {
        match &*self.0 {
            DescriptorRepr::Finite { k, .. } if *k >= 2 => {
                let mut v = vec![0; *k];
                v[1] = 1;
                Some(FieldValue {
                    desc: self.clone(),
                    repr: ValueRepr::Mod(v),
                })
            }
            _ => None,
        }
    }

    /// Yields each element of a finite field exactly once.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = FieldValue> + '_, FieldError> {
        match &*self.0 {
            DescriptorRepr::Rationals => Err(FieldError::InfiniteField),
            DescriptorRepr::Finite { p, k, .. } => {
                let (p, k) = (*p, *k);
                let total = p.pow(k as u32);
                Ok((0..total).map(move |mut n| {
                    let mut v = vec![0; k];
                    for digit in v.iter_mut() {
                        *digit = n % p;
                        n /= p;
                    }
                    FieldValue {
                        desc: self.clone(),
                        repr: ValueRepr::Mod(v),
                    }
                }))
            }
        }
    }

    /// Parse "q", "gf(p)" or "gf(p^k)", with an optional
    /// ";modulus=c0,c1,...,ck" suffix (ascending coefficients).
    pub fn parse(spec: &str) -> Result<Self, FieldError> {
        let spec = spec.trim();
        let bad = || FieldError::BadDescriptor(spec.to_string());
        let (head, modulus) = match spec.split_once(';') {
            Some((h, tail)) => {
                let coeffs = tail
                    .trim()
                    .strip_prefix("modulus=")
                    .ok_or_else(bad)?
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (h.trim(), Some(coeffs))
            }
            None => (spec, None),
        };
        let lower = head.to_ascii_lowercase();
        if lower == "q" {
            if modulus.is_some() {
                return Err(bad());
            }
            return Ok(Self::rationals());
        }
        let inner = lower
            .strip_prefix("gf(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, k) = match inner.split_once('^') {
            Some((p, k)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                k.trim().parse::<usize>().map_err(|_| bad())?,
            ),
            None => (inner.trim().parse::<u64>().map_err(|_| bad())?, 1),
        };
        Self::extension_field(p, k, modulus.as_deref())
    }

    /// Parse an element literal: for the rationals "n" or "n/d"; for finite
    /// fields an integer or a polynomial expression in the generator g,
    /// e.g. "g+1" or "2*g^2+g".
    pub fn parse_element(&self, s: &str) -> Result<FieldValue, FieldError> {
        let s = s.trim();
        let bad = || FieldError::BadElement(s.to_string());
        match &*self.0 {
            DescriptorRepr::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(FieldValue {
                    desc: self.clone(),
                    repr: ValueRepr::Rat(BigRational::new(num, den)),
                })
            }
            DescriptorRepr::Finite { .. } => self.parse_generator_expr(s).ok_or_else(bad),
        }
    }

    fn parse_generator_expr(&self, s: &str) -> Option<FieldValue> {
        // sum of terms [+-] [coeff *] [g [^exp]]
        let mut acc = self.zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return None;
        }
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let split = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..split];
            if term.is_empty() {
                return None;
            }
            let (coeff_str, g_part) = match term.find('g') {
                Some(i) => (&term[..i], &term[i..]),
                None => (term, ""),
            };
            let coeff: i64 = match coeff_str.strip_suffix('*').unwrap_or(coeff_str) {
                "" => 1,
                c => c.parse().ok()?,
            };
            let exp: u32 = match g_part {
                "" => 0,
                "g" => 1,
                other => other.strip_prefix("g^")?.parse().ok()?,
            };
            let mut t = self.from_int(sign * coeff);
            if exp > 0 {
                let g = self.generator()?;
                t = t.mul(&g.pow(exp as i64).ok()?);
            }
            acc = acc.add(&t);
            if split == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[split] == b'-' { -1 } else { 1 };
            rest = &rest[split + 1..];
        }
        Some(acc)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            DescriptorRepr::Rationals => write!(f, "q"),
            DescriptorRepr::Finite {
                p,
                k: 1,
                ..
            } => write!(f, "gf({p})"),
            DescriptorRepr::Finite { p, k, modulus_tail } => {
                write!(f, "gf({p}^{k});modulus=")?;
                for c in modulus_tail {
                    write!(f, "{c},")?;
                }
                write!(f, "1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum ValueRepr {
    Rat(BigRational),
    /// Coefficient vector of length k, reduced mod p and mod the modulus.
    Mod(Vec<u64>),
}

/// An element of an exactly-represented base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    desc: FieldDescriptor,
    repr: ValueRepr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic entry point; the inherent methods panic on
/// descriptor mismatch instead.
pub fn field_arith(a: &FieldValue, b: &FieldValue, op: ArithOp) -> Result<FieldValue, FieldError> {
    if a.desc != b.desc {
        return Err(FieldError::DescriptorMismatch);
    }
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

impl FieldValue {
    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.desc
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            ValueRepr::Rat(r) => r.is_zero(),
            ValueRepr::Mod(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &self.desc.one()
    }

    fn binop(
        &self,
        other: &FieldValue,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        modular: impl FnOnce(&[u64], &[u64], u64) -> Vec<u64>,
    ) -> FieldValue {
        assert_eq!(self.desc, other.desc, "field descriptor mismatch");
        let repr = match (&self.repr, &other.repr) {
            (ValueRepr::Rat(a), ValueRepr::Rat(b)) => ValueRepr::Rat(rat(a, b)),
            (ValueRepr::Mod(a), ValueRepr::Mod(b)) => {
                ValueRepr::Mod(modular(a, b, self.desc.characteristic()))
            }
            _ => unreachable!(),
        };
        FieldValue {
            desc: self.desc.clone(),
            repr,
        }
    }

    pub fn add(&self, other: &FieldValue) -> FieldValue {
        self.binop(other, |a, b| a + b, |a, b, p| {
            a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
        })
    }

    pub fn sub(&self, other: &FieldValue) -> FieldValue {
        self.binop(other, |a, b| a - b, |a, b, p| {
            a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
        })
    }

    pub fn mul(&self, other: &FieldValue) -> FieldValue {
        assert_eq!(self.desc, other.desc, "field descriptor mismatch");
        match (&self.repr, &other.repr) {
            (ValueRepr::Rat(a), ValueRepr::Rat(b)) => FieldValue {
                desc: self.desc.clone(),
                repr: ValueRepr::Rat(a * b),
            },
            (ValueRepr::Mod(a), ValueRepr::Mod(b)) => {
                let DescriptorRepr::Finite { p, k, modulus_tail } = &*self.desc.0 else {
                    unreachable!()
                };
                let prod = poly_mul_mod(a, b, *p);
                let red = reduce_by_modulus(prod, modulus_tail, *p, *k);
                FieldValue {
                    desc: self.desc.clone(),
                    repr: ValueRepr::Mod(red),
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldValue {
        self.desc.zero().sub(self)
    }

    pub fn inv(&self) -> Result<FieldValue, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.repr {
            ValueRepr::Rat(r) => Ok(FieldValue {
                desc: self.desc.clone(),
                repr: ValueRepr::Rat(r.recip()),
            }),
            ValueRepr::Mod(v) => {
                let DescriptorRepr::Finite { p, k, modulus_tail } = &*self.desc.0 else {
                    unreachable!()
                };
                let inv = if *k == 1 {
                    vec![prime_inv(v[0], *p)]
                } else {
                    ext_field_inv(v, modulus_tail, *p, *k)
                };
                Ok(FieldValue {
                    desc: self.desc.clone(),
                    repr: ValueRepr::Mod(inv),
                })
            }
        }
    }

    pub fn div(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldValue, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut result = self.desc.one();
        let mut acc = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&acc);
            }
            acc = acc.mul(&acc);
            n >>= 1;
        }
        Ok(result)
    }

    /// For rationals only: the value as a reduced fraction.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            ValueRepr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn from_bigint(desc: &FieldDescriptor, n: &BigInt) -> FieldValue {
        match &*desc.0 {
            DescriptorRepr::Rationals => FieldValue {
                desc: desc.clone(),
                repr: ValueRepr::Rat(BigRational::from_integer(n.clone())),
            },
            DescriptorRepr::Finite { p, k, .. } => {
                let r = n
                    .mod_floor_u64(*p);
                let mut v = vec![0; *k];
                v[0] = r;
                FieldValue {
                    desc: desc.clone(),
                    repr: ValueRepr::Mod(v),
                }
            }
        }
    }

    pub fn from_big_rational(desc: &FieldDescriptor, r: &BigRational) -> Result<FieldValue, FieldError> {
        let num = FieldValue::from_bigint(desc, r.numer());
        let den = FieldValue::from_bigint(desc, r.denom());
        num.div(&den)
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = self % BigInt::from(p);
        let m = if m.is_negative() { m + BigInt::from(p) } else { m };
        m.to_u64().expect("residue fits in u64")
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            ValueRepr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ValueRepr::Mod(v) => {
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match (i, c) {
                        (0, c) => format!("{c}"),
                        (1, 1) => "g".to_string(),
                        (1, c) => format!("{c}*g"),
                        (i, 1) => format!("g^{i}"),
                        (i, c) => format!("{c}*g^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

fn check_prime(p: u64) -> Result<(), FieldError> {
    if p > 1 << 16 {
        return Err(FieldError::Unsupported(format!("characteristic {p} too large")));
    }
    if p < 2 {
        return Err(FieldError::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(FieldError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn prime_inv(a: u64, p: u64) -> u64 {
    // extended euclid on (a, p)
    let (mut r0, mut r1) = (a as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "element not invertible");
    s0.rem_euclid(p as i64) as u64
}

fn poly_mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Reduce modulo the monic polynomial g^k + tail, returning k coefficients.
fn reduce_by_modulus(mut v: Vec<u64>, tail: &[u64], p: u64, k: usize) -> Vec<u64> {
    while v.len() > k {
        let top = v.pop().unwrap();
        if top != 0 {
            let d = v.len() - k;
            for (i, &t) in tail.iter().enumerate() {
                v[d + i] = (v[d + i] + (p - t % p) * top) % p;
            }
        }
    }
    v.resize(k, 0);
    v
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// Remainder of a by b (b nonzero), coefficients mod p.
fn poly_rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = prime_inv(b[db], p);
    while let Some(da) = poly_deg(&a) {
        if da < db {
            break;
        }
        let factor = a[da] * lead_inv % p;
        for i in 0..=db {
            a[da - db + i] = (a[da - db + i] + (p - b[i] * factor % p)) % p;
        }
    }
    a
}

/// Inverse in GF(p)[g]/(modulus) by the extended euclidean algorithm.
fn ext_field_inv(v: &[u64], tail: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut modulus: Vec<u64> = tail.to_vec();
    modulus.push(1);
    let (mut r0, mut r1) = (modulus.clone(), v.to_vec());
    let (mut s0, mut s1) = (vec![0u64], vec![1u64]);
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divmod_mod(&r0, &r1, p);
        let qs1 = poly_mul_mod(&q, &s1, p);
        let new_s = poly_sub_mod(&s0, &qs1, p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, new_s);
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible
    let c = r0[poly_deg(&r0).expect("gcd is zero")];
    let c_inv = prime_inv(c, p);
    let mut out: Vec<u64> = s0.iter().map(|&x| x * c_inv % p).collect();
    out = poly_rem_mod(out, &modulus, p);
    out.resize(k, 0);
    out
}

fn poly_sub_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

fn poly_divmod_mod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = prime_inv(b[db], p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len().saturating_sub(db) + 1];
    while let Some(da) = poly_deg(&rem) {
        if da < db {
            break;
        }
        let factor = rem[da] * lead_inv % p;
        quot[da - db] = factor;
        for i in 0..=db {
            rem[da - db + i] = (rem[da - db + i] + (p - b[i] * factor % p)) % p;
        }
    }
    (quot, rem)
}

/// Irreducibility over GF(p) for degree <= 4, by exhaustive root and
/// quadratic-factor search.
fn is_irreducible(tail: &[u64], p: u64) -> bool {
    let k = tail.len();
    let mut poly: Vec<u64> = tail.to_vec();
    poly.push(1);
    // root search rules out linear factors
    for x in 0..p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = (acc * x + c) % p;
        }
        if acc == 0 {
            return false;
        }
    }
    if k <= 3 {
        return true;
    }
    // degree 4: also rule out irreducible quadratic factors
    for b in 0..p {
        for c in 0..p {
            let quad = [c, b, 1];
            let rem = poly_rem_mod(poly.clone(), &quad, p);
            if poly_deg(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest irreducible monic polynomial of degree k,
/// comparing coefficient tuples from the highest degree downwards.
fn smallest_irreducible_tail(p: u64, k: usize) -> Vec<u64> {
    let total = p.pow(k as u32);
    for mut n in 0..total {
        // digits read as (c_{k-1}, ..., c_0) ascending in n
        let mut tail = vec![0u64; k];
        for i in (0..k).rev() {
            tail[i] = n % p;
            n /= p;
        }
        if is_irreducible(&tail, p) {
            return tail;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}
