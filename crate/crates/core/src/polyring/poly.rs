//! Sparse multivariate polynomials over an exact base field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::{FieldDescriptor, FieldValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("the curves share a common component")]
    CommonComponent,
    #[error("local intersection number is infinite")]
    InfiniteMultiplicity,
    #[error("polynomial is zero where a nonzero one is required")]
    ZeroPolynomial,
    #[error("exact division failed")]
    InexactDivision,
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
    #[error("equation is not homogeneous of the stated degree")]
    NotHomogeneous,
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
}

/// A polynomial in an ordered list of variables, stored as a map from
/// exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    desc: FieldDescriptor,
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, FieldValue>,
}

impl Poly {
    pub fn zero(desc: &FieldDescriptor, vars: &Arc<Vec<String>>) -> Self {
        Poly {
            desc: desc.clone(),
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn vars_from(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn constant(desc: &FieldDescriptor, vars: &Arc<Vec<String>>, c: FieldValue) -> Self {
        let mut p = Self::zero(desc, vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(desc: &FieldDescriptor, vars: &Arc<Vec<String>>, index: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        Self::monomial(desc, vars, exps, desc.one())
    }

    pub fn monomial(
        desc: &FieldDescriptor,
        vars: &Arc<Vec<String>>,
        exps: Vec<u32>,
        c: FieldValue,
    ) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(desc, vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.desc
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &FieldValue)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> FieldValue {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.desc.zero())
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: FieldValue) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable sets differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &FieldValue) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.desc, &self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable sets differ");
        let mut out = Poly::zero(&self.desc, &self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.insert_add(exps, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(&self.desc, &self.vars, self.desc.one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Lowest total degree of any term; the multiplicity at the origin.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    fn grlex_key(exps: &[u32]) -> (u32, Vec<u32>) {
        (exps.iter().sum(), exps.to_vec())
    }

    /// Exponents and coefficient of the graded-lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &FieldValue)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| Self::grlex_key(e))
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn normalize_leading(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[FieldValue]) -> FieldValue {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = self.desc.zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                if e > 0 {
                    term = term.mul(&x.pow(e as i64).expect("nonnegative power"));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitute each variable by a polynomial (all over the same target ring).
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len());
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| Arc::new(Vec::new()));
        let mut out = Poly::zero(&self.desc, &target_vars);
        // cache powers of each image
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::constant(&self.desc, &target_vars, self.desc.one()), p.clone()])
            .collect();
        for (exps, c) in &self.terms {
            let mut term = Poly::constant(&self.desc, &target_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitute one variable by a constant and drop it from the ring.
    pub fn eval_var(&self, var: usize, value: &FieldValue) -> Poly {
        let new_vars: Arc<Vec<String>> = Arc::new(
            self.vars
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, v)| v.clone())
                .collect(),
        );
        let mut out = Poly::zero(&self.desc, &new_vars);
        for (exps, c) in &self.terms {
            let factor = value.pow(exps[var] as i64).expect("nonnegative power");
            let coeff = c.mul(&factor);
            let reduced: Vec<u32> = exps
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, &e)| e)
                .collect();
            out.insert_add(reduced, coeff);
        }
        out
    }

    /// Shift `var` by a constant: substitute var -> var + c without
    /// touching the other variables.
    pub fn shift_var(&self, var: usize, c: &FieldValue) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let images: Vec<Poly> = (0..self.vars.len())
            .map(|i| {
                let v = Poly::var(&self.desc, &self.vars, i);
                if i == var {
                    v.add(&Poly::constant(&self.desc, &self.vars, c.clone()))
                } else {
                    v
                }
            })
            .collect();
        self.substitute(&images)
    }

    /// Dense coefficient list of `self` viewed as univariate in `var`,
    /// coefficients living in the same ring (with `var`-degree zero).
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let deg = match self.degree_in(var) {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut out = vec![Poly::zero(&self.desc, &self.vars); deg as usize + 1];
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            let d = e[var] as usize;
            e[var] = 0;
            out[d].insert_add(e, c.clone());
        }
        out
    }

    /// Rebuild from a dense univariate coefficient list produced by
    /// [`Poly::coeffs_in`].
    pub fn from_coeffs_in(
        desc: &FieldDescriptor,
        vars: &Arc<Vec<String>>,
        var: usize,
        coeffs: &[Poly],
    ) -> Poly {
        let mut out = Poly::zero(desc, vars);
        for (d, c) in coeffs.iter().enumerate() {
            for (exps, v) in &c.terms {
                let mut e = exps.clone();
                e[var] += d as u32;
                out.insert_add(e, v.clone());
            }
        }
        out
    }

    /// Multiply by `var^e`.
    pub fn mul_var_pow(&self, var: usize, e: u32) -> Poly {
        let mut out = Poly::zero(&self.desc, &self.vars);
        for (exps, c) in &self.terms {
            let mut ne = exps.clone();
            ne[var] += e;
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Largest e with var^e dividing self; 0 for the zero polynomial.
    pub fn var_order(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    /// Divide by var^e; panics if not exactly divisible.
    pub fn div_var_pow(&self, var: usize, e: u32) -> Poly {
        let mut out = Poly::zero(&self.desc, &self.vars);
        for (exps, c) in &self.terms {
            assert!(exps[var] >= e, "not divisible by variable power");
            let mut ne = exps.clone();
            ne[var] -= e;
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Exact division; returns `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        assert_eq!(self.vars, other.vars, "variable sets differ");
        let (lead_e, lead_c) = other.leading_term()?;
        let lead_e = lead_e.clone();
        let lead_inv = lead_c.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.desc, &self.vars);
        while let Some((re, rc)) = rem.leading_term() {
            let qe: Vec<u32> = re
                .iter()
                .zip(lead_e.iter())
                .map(|(a, b)| a.checked_sub(*b))
                .collect::<Option<Vec<u32>>>()?;
            let qc = rc.mul(&lead_inv);
            let qterm = Poly::monomial(&self.desc, &self.vars, qe, qc);
            rem = rem.sub(&qterm.mul(other));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.desc, &self.vars);
        for (exps, c) in &self.terms {
            if exps[var] == 0 {
                continue;
            }
            let factor = self.desc.from_int(exps[var] as i64);
            let mut e = exps.clone();
            e[var] -= 1;
            out.insert_add(e, c.mul(&factor));
        }
        out
    }

    /// The number of variables actually appearing.
    pub fn effective_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Parse the textual syntax: identifiers, integer constants, `+ - * / ^`
    /// and parentheses.  Division is only allowed by constants.
    pub fn parse(
        desc: &FieldDescriptor,
        vars: &Arc<Vec<String>>,
        text: &str,
    ) -> Result<Poly, PolyError> {
        let mut parser = Parser {
            desc,
            vars,
            tokens: tokenize(text).ok_or_else(|| PolyError::Parse(text.to_string()))?,
            pos: 0,
        };
        let p = parser.expr().map_err(|_| PolyError::Parse(text.to_string()))?;
        if parser.pos != parser.tokens.len() {
            return Err(PolyError::Parse(text.to_string()));
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Vec<u32>, &FieldValue)> = self.terms.iter().collect();
        entries.sort_by_key(|(e, _)| std::cmp::Reverse(Poly::grlex_key(e)));
        for (idx, (exps, c)) in entries.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) if !cs.contains('+') => (true, m.to_string()),
                _ => (false, cs),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars_part: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let coeff_needed = vars_part.is_empty() || mag != "1";
            if coeff_needed {
                if mag.contains('+') || mag.contains('-') {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
                if !vars_part.is_empty() {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", vars_part.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Option<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(n.parse().ok()?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            _ => return None,
        }
    }
    Some(out)
}

struct Parser<'a> {
    desc: &'a FieldDescriptor,
    vars: &'a Arc<Vec<String>>,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<Poly, ()> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ()> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.factor()?;
                    if divisor.degree() != Some(0) && !divisor.is_zero() {
                        return Err(());
                    }
                    let c = divisor.coeff(&vec![0; self.vars.len()]);
                    let inv = c.inv().map_err(|_| ())?;
                    acc = acc.scale(&inv);
                }
                // implicit multiplication by juxtaposition is not supported
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ()> {
        let base = match self.peek().cloned() {
            Some(Token::Minus) => {
                self.pos += 1;
                return Ok(self.factor()?.neg());
            }
            Some(Token::Int(n)) => {
                self.pos += 1;
                Poly::constant(self.desc, self.vars, self.desc.from_int(n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let idx = self.vars.iter().position(|v| *v == name).ok_or(())?;
                Poly::var(self.desc, self.vars, idx)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => self.pos += 1,
                    _ => return Err(()),
                }
                inner
            }
            _ => return Err(()),
        };
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Int(e)) if e >= 0 => {
                    self.pos += 1;
                    return Ok(base.pow(e as u32));
                }
                _ => return Err(()),
            }
        }
        Ok(base)
    }
}

// ---------------------------------------------------------------------------
// gcd machinery (at most two effective variables)
// ---------------------------------------------------------------------------

/// Monic gcd of two polynomials with a single effective variable.
pub fn gcd_univariate(f: &Poly, g: &Poly, var: usize) -> Poly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = rem_univariate(&a, &b, var);
        a = b;
        b = r;
    }
    a.normalize_leading()
}

fn rem_univariate(f: &Poly, g: &Poly, var: usize) -> Poly {
    let dg = g.degree_in(var).expect("division by zero polynomial");
    let gc = g.coeffs_in(var);
    let lead_inv = gc[dg as usize]
        .coeff(&vec![0; f.vars().len()])
        .inv()
        .expect("leading coefficient invertible");
    let mut rem = f.clone();
    while let Some(dr) = rem.degree_in(var) {
        if dr < dg || rem.is_zero() {
            break;
        }
        let rc = rem.coeffs_in(var);
        let top = &rc[dr as usize];
        if top.is_zero() {
            break;
        }
        let factor = top.scale(&lead_inv);
        let shifted = factor.mul(&g.coeffs_to_poly_shift(var, dr - dg));
        rem = rem.sub(&shifted);
        if rem.degree_in(var) == Some(dr) {
            unreachable!("remainder degree did not drop");
        }
    }
    rem
}

impl Poly {
    fn coeffs_to_poly_shift(&self, var: usize, shift: u32) -> Poly {
        self.mul_var_pow(var, shift)
    }
}

/// Content of `f` with respect to `main`: the gcd of its coefficients,
/// which must involve at most one other variable.
pub fn content_in(f: &Poly, main: usize) -> Poly {
    let coeffs = f.coeffs_in(main);
    let mut acc = Poly::zero(f.descriptor(), f.vars());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = gcd_few_vars(&acc, c);
    }
    acc
}

/// gcd of polynomials with at most two effective variables.
pub fn gcd_few_vars(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.normalize_leading();
    }
    if g.is_zero() {
        return f.normalize_leading();
    }
    let mut eff: Vec<usize> = f.effective_vars();
    for v in g.effective_vars() {
        if !eff.contains(&v) {
            eff.push(v);
        }
    }
    match eff.len() {
        0 => Poly::constant(f.descriptor(), f.vars(), f.descriptor().one()),
        1 => gcd_univariate(f, g, eff[0]),
        2 => {
            let main = eff[1];
            let cont_f = content_in(f, main);
            let cont_g = content_in(g, main);
            let cont = gcd_few_vars(&cont_f, &cont_g);
            let pf = f.div_exact(&cont_f).expect("content divides");
            let pg = g.div_exact(&cont_g).expect("content divides");
            let pp = gcd_primitive(pf, pg, main);
            cont.mul(&pp).normalize_leading()
        }
        _ => panic!("gcd supported for at most two effective variables"),
    }
}

/// Primitive-PRS gcd of two primitive polynomials in `main`.
fn gcd_primitive(mut a: Poly, mut b: Poly, main: usize) -> Poly {
    loop {
        let da = a.degree_in(main).unwrap_or(0);
        let db = b.degree_in(main).unwrap_or(0);
        if da < db {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        if b.is_zero() {
            return a;
        }
        if b.degree_in(main).unwrap_or(0) == 0 {
            // primitive and constant in main: gcd of contents only
            return gcd_few_vars(&content_in(&a, main), &b);
        }
        let r = pseudo_rem(&a, &b, main);
        if r.is_zero() {
            let cont = content_in(&b, main);
            return b.div_exact(&cont).expect("content divides");
        }
        let cont = content_in(&r, main);
        a = b;
        b = r.div_exact(&cont).expect("content divides");
    }
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
pub fn pseudo_rem(f: &Poly, g: &Poly, main: usize) -> Poly {
    let df = f.degree_in(main).expect("nonzero");
    let dg = g.degree_in(main).expect("nonzero");
    assert!(df >= dg);
    let gc = g.coeffs_in(main);
    let lead = &gc[dg as usize];
    let mut rem = f.scale_by_poly(&lead.pow(df - dg + 1));
    while let Some(dr) = rem.degree_in(main) {
        if dr < dg || rem.is_zero() {
            break;
        }
        let rc = rem.coeffs_in(main);
        let top = &rc[dr as usize];
        if top.is_zero() {
            break;
        }
        let q = top.div_exact(lead).unwrap_or_else(|| {
            // multiply through once more if the leading term does not divide
            rem = rem.scale_by_poly(lead);
            rem.coeffs_in(main)[dr as usize]
                .div_exact(lead)
                .expect("divisible after scaling")
        });
        rem = rem.sub(&q.mul(&g.mul_var_pow(main, dr - dg)));
    }
    rem
}

impl Poly {
    fn scale_by_poly(&self, c: &Poly) -> Poly {
        self.mul(c)
    }
}

/// Roots of a polynomial with a single effective variable, with
/// multiplicities, over the base field.  Returns the root list and the
/// root-free cofactor.
pub fn base_field_roots(f: &Poly, var: usize) -> (Vec<(FieldValue, u32)>, Poly) {
    let desc = f.descriptor().clone();
    assert!(!f.is_zero(), "root finding on the zero polynomial");
    let mut rem = f.clone();
    let mut roots = Vec::new();
    let candidates: Vec<FieldValue> = if desc.is_finite() {
        desc.enumerate().expect("finite").collect()
    } else {
        rational_root_candidates(f, var)
    };
    for cand in candidates {
        let mut mult = 0;
        loop {
            if rem.degree_in(var).unwrap_or(0) == 0 {
                break;
            }
            let mut point = vec![desc.zero(); f.vars().len()];
            point[var] = cand.clone();
            if !rem.eval(&point).is_zero() {
                break;
            }
            // divide by (x - cand)
            let linear = Poly::var(&desc, f.vars(), var).sub(&Poly::constant(
                &desc,
                f.vars(),
                cand.clone(),
            ));
            rem = rem.div_exact(&linear).expect("root divides");
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    (roots, rem)
}

/// Candidate rational roots by the rational root theorem.
fn rational_root_candidates(f: &Poly, var: usize) -> Vec<FieldValue> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};

    let desc = f.descriptor().clone();
    // clear denominators to integer coefficients
    let coeffs = f.coeffs_in(var);
    let mut lcm = BigInt::one();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let r = c
            .coeff(&vec![0; f.vars().len()])
            .as_rational()
            .expect("rational field")
            .clone();
        lcm = num_integer::lcm(lcm, r.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| {
            let r = c.coeff(&vec![0; f.vars().len()]);
            let r = r.as_rational().expect("rational field");
            (r * num_rational::BigRational::from_integer(lcm.clone()))
                .to_integer()
        })
        .collect();
    let lead = ints.last().cloned().unwrap_or_else(BigInt::zero);
    let trailing = ints
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::one);
    let mut candidates = vec![desc.zero()];
    for p in divisors(&trailing.abs()) {
        for q in divisors(&lead.abs()) {
            for sign in [1i64, -1] {
                let num = &p * BigInt::from(sign);
                let val = FieldValue::from_bigint(&desc, &num)
                    .div(&FieldValue::from_bigint(&desc, &q))
                    .expect("nonzero divisor");
                if !candidates.contains(&val) {
                    candidates.push(val);
                }
            }
        }
    }
    candidates
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if n.is_zero() {
        return vec![BigInt::from(1)];
    }
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out
}
