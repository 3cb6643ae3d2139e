//! Polynomial rings with an `m x n` matrix of variables, and exact
//! multivariate polynomial arithmetic.

use crate::field::{is_prime_u64, Coeff};
use crate::monomial::{Monomial, MonomialOrder};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::Signed;
use std::collections::BTreeMap;
use std::fmt;

/// Shape of a polynomial ring `K[x_ij : i in 1..=m, j in 1..=n]`, possibly
/// extended by `aux` auxiliary variables (used internally for elimination).
///
/// Matrix variables are indexed row-major: `x[i][j]` has index
/// `(i-1)*n + (j-1)`; auxiliary variables follow after index `m*n - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingSpec {
    pub m: u32,
    pub n: u32,
    pub characteristic: u64,
    pub aux: u32,
}

impl RingSpec {
    pub fn new(m: u32, n: u32, characteristic: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput(format!("m must be at least 2, got {m}")));
        }
        if n < 1 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if characteristic != 0 && !is_prime_u64(characteristic) {
            return Err(Error::InvalidInput(format!(
                "characteristic must be 0 or a prime, got {characteristic}"
            )));
        }
        if (m as u64) * (n as u64) > 4096 {
            return Err(Error::InvalidInput(format!(
                "ring with {m} x {n} matrix variables is too large"
            )));
        }
        Ok(RingSpec {
            m,
            n,
            characteristic,
            aux: 0,
        })
    }

    pub fn with_aux(mut self, aux: u32) -> Self {
        self.aux = aux;
        self
    }

    pub fn varcount(&self) -> usize {
        (self.m * self.n + self.aux) as usize
    }

    /// Index of `x[i][j]`, 1-based in both coordinates.
    pub fn var(&self, i: u32, j: u32) -> Result<usize> {
        if i < 1 || i > self.m || j < 1 || j > self.n {
            return Err(Error::InvalidInput(format!(
                "variable x[{i}][{j}] out of range for a {} x {} matrix",
                self.m, self.n
            )));
        }
        Ok(((i - 1) * self.n + (j - 1)) as usize)
    }

    /// Index of the `k`-th auxiliary variable, 0-based.
    pub fn aux_var(&self, k: u32) -> Result<usize> {
        if k >= self.aux {
            return Err(Error::InvalidInput(format!(
                "auxiliary variable {k} out of range (aux = {})",
                self.aux
            )));
        }
        Ok((self.m * self.n + k) as usize)
    }

    pub fn var_name(&self, index: usize) -> String {
        let mn = (self.m * self.n) as usize;
        if index < mn {
            let i = index / self.n as usize + 1;
            let j = index % self.n as usize + 1;
            format!("x[{i}][{j}]")
        } else {
            format!("y[{}]", index - mn)
        }
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::degrevlex(self.varcount())
    }
}

/// A polynomial with exact coefficients.
///
/// Terms are stored keyed by the monomial storage order, so equality and
/// iteration are deterministic and independent of the active term order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    spec: RingSpec,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(spec: RingSpec) -> Self {
        Polynomial {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: RingSpec, c: Coeff) -> Self {
        let mut p = Polynomial::zero(spec);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(spec.varcount()), c);
        }
        p
    }

    pub fn one(spec: RingSpec) -> Self {
        Polynomial::constant(spec, Coeff::one(spec.characteristic))
    }

    pub fn monomial_term(spec: RingSpec, mono: Monomial, c: Coeff) -> Self {
        let mut p = Polynomial::zero(spec);
        if !c.is_zero() {
            assert_eq!(mono.nvars(), spec.varcount());
            p.terms.insert(mono, c);
        }
        p
    }

    /// The matrix variable `x[i][j]`, 1-based.
    pub fn var(spec: RingSpec, i: u32, j: u32) -> Result<Self> {
        let idx = spec.var(i, j)?;
        Ok(Self::monomial_term(
            spec,
            Monomial::var(spec.varcount(), idx),
            Coeff::one(spec.characteristic),
        ))
    }

    /// The `k`-th auxiliary variable, 0-based.
    pub fn aux(spec: RingSpec, k: u32) -> Result<Self> {
        let idx = spec.aux_var(k)?;
        Ok(Self::monomial_term(
            spec,
            Monomial::var(spec.varcount(), idx),
            Coeff::one(spec.characteristic),
        ))
    }

    /// The 2-minor `[k,l|i,j] = x[k][i]*x[l][j] - x[k][j]*x[l][i]` on rows
    /// `k < l` and columns `i < j`.
    pub fn minor(spec: RingSpec, k: u32, l: u32, i: u32, j: u32) -> Result<Self> {
        if k >= l {
            return Err(Error::InvalidInput(format!(
                "minor rows must satisfy k < l, got {k}, {l}"
            )));
        }
        if i >= j {
            return Err(Error::InvalidInput(format!(
                "minor columns must satisfy i < j, got {i}, {j}"
            )));
        }
        let a = Polynomial::var(spec, k, i)?.mul(&Polynomial::var(spec, l, j)?);
        let b = Polynomial::var(spec, k, j)?.mul(&Polynomial::var(spec, l, i)?);
        Ok(a.sub(&b))
    }

    /// The top-rows minor `f[i,j] = [1,2|i,j]`.
    pub fn fij(spec: RingSpec, i: u32, j: u32) -> Result<Self> {
        Self::minor(spec, 1, 2, i, j)
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(self.spec, other.spec, "polynomial ring mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_ring(other);
        let mut terms = self.terms.clone();
        for (mono, c) in &other.terms {
            match terms.get_mut(mono) {
                Some(acc) => {
                    let s = acc.add(c);
                    if s.is_zero() {
                        terms.remove(mono);
                    } else {
                        *acc = s;
                    }
                }
                None => {
                    terms.insert(mono.clone(), c.clone());
                }
            }
        }
        Polynomial {
            spec: self.spec,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.spec);
        }
        Polynomial {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_ring(other);
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match terms.get_mut(&m) {
                    Some(acc) => {
                        let s = acc.add(&c);
                        if s.is_zero() {
                            terms.remove(&m);
                        } else {
                            *acc = s;
                        }
                    }
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            spec: self.spec,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.spec);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.scale(&lc.inv().expect("nonzero leading coefficient"))
                }
            }
        }
    }

    /// Reinterpret in a ring with more auxiliary variables.
    pub fn embed(&self, target: RingSpec) -> Result<Self> {
        if target.m != self.spec.m
            || target.n != self.spec.n
            || target.characteristic != self.spec.characteristic
            || target.aux < self.spec.aux
        {
            return Err(Error::Internal("invalid ring embedding".into()));
        }
        let pad = target.varcount() - self.spec.varcount();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps.extend(std::iter::repeat(0).take(pad));
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial {
            spec: target,
            terms,
        })
    }

    /// Reinterpret in a ring with fewer auxiliary variables; fails if any
    /// dropped variable occurs.
    pub fn project(&self, target: RingSpec) -> Result<Self> {
        if target.m != self.spec.m
            || target.n != self.spec.n
            || target.characteristic != self.spec.characteristic
            || target.aux > self.spec.aux
        {
            return Err(Error::Internal("invalid ring projection".into()));
        }
        let keep = target.varcount();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exps()[keep..].iter().any(|e| *e > 0) {
                return Err(Error::Internal(
                    "projection would drop an occurring variable".into(),
                ));
            }
            terms.insert(Monomial::new(m.exps()[..keep].to_vec()), c.clone());
        }
        Ok(Polynomial {
            spec: target,
            terms,
        })
    }

    /// Canonical text form: terms sorted descending under `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<(&Monomial, &Coeff)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (idx, (mono, coeff)) in sorted.iter().enumerate() {
            let (sign, mag) = coeff_sign_magnitude(coeff);
            if idx == 0 {
                if sign < 0 {
                    out.push('-');
                }
            } else if sign < 0 {
                out.push('-');
            } else {
                out.push('+');
            }
            out.push_str(&term_string(&self.spec, mono, &mag));
        }
        out
    }

    /// Parse the grammar accepted by the CLI: signed sums of `*`-separated
    /// factors, where a factor is an integer, a rational `a/b`, a variable
    /// `x[i][j]` with optional `^e`, or a shorthand `f[i,j]` /
    /// `minor[k,l|i,j]` for a 2-minor. Whitespace is ignored.
    pub fn parse(spec: RingSpec, text: &str) -> Result<Self> {
        Parser::new(spec, text).parse_poly()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&self.spec.default_order()))
    }
}

/// Split a coefficient into a sign and a printable magnitude.
fn coeff_sign_magnitude(c: &Coeff) -> (i32, Coeff) {
    match c {
        Coeff::Rat(r) if r.is_negative() => (-1, Coeff::Rat(-r)),
        // Residues print as 0..p with no sign.
        _ => (1, c.clone()),
    }
}

fn term_string(spec: &RingSpec, mono: &Monomial, mag: &Coeff) -> String {
    let mut factors: Vec<String> = Vec::new();
    if mono.is_one() || !mag.is_one() {
        factors.push(mag.to_string());
    }
    for (idx, e) in mono.exps().iter().enumerate() {
        if *e == 0 {
            continue;
        }
        if *e == 1 {
            factors.push(spec.var_name(idx));
        } else {
            factors.push(format!("{}^{}", spec.var_name(idx), e));
        }
    }
    factors.join("*")
}

struct Parser<'a> {
    spec: RingSpec,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(spec: RingSpec, text: &'a str) -> Self {
        Parser {
            spec,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.bump() {
            Some(got) if got == b => Ok(()),
            _ => Err(self.err(&format!("expected '{}'", b as char))),
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.spec);
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                negate = true;
            }
            Some(b'+') => {
                self.bump();
            }
            Some(_) => {}
            None => return Err(self.err("empty polynomial")),
        }
        loop {
            let term = self.parse_term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    negate = false;
                }
                Some(b'-') => {
                    self.bump();
                    negate = true;
                }
                Some(_) => return Err(self.err("expected '+' or '-'")),
                None => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.parse_integer()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let den = self.parse_integer()?;
                    let c = Coeff::from_ratio(&num, &den, self.spec.characteristic)
                        .ok_or_else(|| self.err("division by zero in coefficient"))?;
                    Ok(Polynomial::constant(self.spec, c))
                } else {
                    Ok(Polynomial::constant(
                        self.spec,
                        Coeff::from_bigint(&num, self.spec.characteristic),
                    ))
                }
            }
            Some(b'x') => {
                self.bump();
                self.expect(b'[')?;
                let i = self.parse_small_int()?;
                self.expect(b']')?;
                self.expect(b'[')?;
                let j = self.parse_small_int()?;
                self.expect(b']')?;
                let base = Polynomial::var(self.spec, i, j).map_err(|e| match e {
                    Error::InvalidInput(msg) => Error::Parse(msg),
                    other => other,
                })?;
                self.parse_optional_power(base)
            }
            Some(b'f') => {
                self.bump();
                self.expect(b'[')?;
                let i = self.parse_small_int()?;
                self.expect(b',')?;
                let j = self.parse_small_int()?;
                self.expect(b']')?;
                let base = Polynomial::fij(self.spec, i, j).map_err(|e| match e {
                    Error::InvalidInput(msg) => Error::Parse(msg),
                    other => other,
                })?;
                self.parse_optional_power(base)
            }
            Some(b'm') => {
                for expected in b"minor" {
                    match self.bump() {
                        Some(got) if got == *expected => {}
                        _ => return Err(self.err("expected 'minor'")),
                    }
                }
                self.expect(b'[')?;
                let k = self.parse_small_int()?;
                self.expect(b',')?;
                let l = self.parse_small_int()?;
                self.expect(b'|')?;
                let i = self.parse_small_int()?;
                self.expect(b',')?;
                let j = self.parse_small_int()?;
                self.expect(b']')?;
                let base = Polynomial::minor(self.spec, k, l, i, j).map_err(|e| match e {
                    Error::InvalidInput(msg) => Error::Parse(msg),
                    other => other,
                })?;
                self.parse_optional_power(base)
            }
            _ => Err(self.err("expected a coefficient, variable, or minor")),
        }
    }

    fn parse_optional_power(&mut self, base: Polynomial) -> Result<Polynomial> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.parse_small_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigInt>()
            .map_err(|_| self.err("invalid integer"))
    }

    fn parse_small_int(&mut self) -> Result<u32> {
        let v = self.parse_integer()?;
        u32::try_from(v).map_err(|_| self.err("index out of range"))
    }
}
