//! Exact Laurent polynomials in `A` over arbitrary-precision integers, and
//! the field of rational functions built from them.
//!
//! Every [`RationalFn`] is kept in a canonical form, so two values are equal
//! exactly when their representations are structurally equal:
//!
//! * numerator and denominator share no non-unit common factor,
//! * the denominator has minimal exponent 0 and a positive leading coefficient,
//! * the coefficients of numerator and denominator together have content 1,
//! * zero is `0/1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::LaurentError;

/// Order of a rational function at `0` or at infinity.
///
/// The zero function has order `-∞` at infinity and `+∞` at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::NegInfinity => write!(f, "-inf"),
            Order::Finite(v) => write!(f, "{v}"),
            Order::PosInfinity => write!(f, "inf"),
        }
    }
}

/// A Laurent polynomial `Σ c_k A^k` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

fn checked_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow in Laurent polynomial")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · A^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The Kauffman loop value `δ = -A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order; no coefficient is zero.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn ord_inf(&self) -> Order {
        self.max_exp().map_or(Order::NegInfinity, Order::Finite)
    }

    pub fn ord_zero(&self) -> Order {
        self.min_exp().map_or(Order::PosInfinity, Order::Finite)
    }

    /// Max degree minus min degree; 0 for the zero polynomial.
    pub fn breadth(&self) -> i64 {
        match (self.max_exp(), self.min_exp()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (checked_exp(*e, k), c.clone())).collect() }
    }

    /// The substitution `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Approximate value at a real `A`, for cross-checks only.
    pub fn eval_f64(&self, a: f64) -> f64 {
        self.terms.iter().map(|(e, c)| c.to_string().parse::<f64>().unwrap_or(f64::NAN) * a.powi(*e as i32)).sum()
    }

    // Dense ascending coefficient vector of `self · A^-min_exp`.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(lo: i64, v: &[BigInt]) -> Self {
        LaurentPoly::from_terms(
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (lo + i as i64, c.clone())),
        )
    }

    /// True when every exponent is congruent to `residue` mod `modulus`.
    pub fn exponents_congruent(&self, residue: i64, modulus: i64) -> bool {
        self.terms.keys().all(|e| (e - residue).rem_euclid(modulus) == 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let power = if *e == 1 { "A".to_string() } else { format!("A^{e}") };
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the rendering produced by `Display`, e.g. `-A^-2 - A^2` or
    /// `3*A^4 + 1`. Whitespace is insignificant.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff =
                if i > start { compact[start..i].parse::<BigInt>().map_err(|_| bad())? } else { BigInt::one() };
            let mut exp = 0i64;
            let has_digits = i > start;
            if i < bytes.len() && bytes[i] == b'*' {
                if !has_digits {
                    return Err(bad());
                }
                i += 1;
                if i >= bytes.len() || bytes[i] != b'A' {
                    return Err(bad());
                }
            }
            if i < bytes.len() && bytes[i] == b'A' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse::<i64>().map_err(|_| bad())?;
                }
            } else if !has_digits {
                return Err(bad());
            }
            coeff *= sign;
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(checked_exp(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The colored unknot `○_n = (-1)^n [n+1]`, with
/// `[n+1] = (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})`.
pub fn circ(n: u32) -> LaurentPoly {
    let n = n as i64;
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    LaurentPoly::from_terms((0..=n).map(|k| (2 * n - 4 * k, sign)))
}

/// [`circ`] for a signed color; negative colors are rejected.
pub fn try_circ(n: i64) -> Result<LaurentPoly, LaurentError> {
    let n = u32::try_from(n).map_err(|_| LaurentError::NegativeColor(n))?;
    Ok(circ(n))
}

// ---- dense integer polynomial helpers (ascending coefficients) ----

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd of two integer polynomials, positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}

/// Exact quotient `a / b`; the caller guarantees divisibility in `Z[A]`.
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "nonzero remainder in exact division");
    q
}

/// An element of `Q(A)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Canonical representative of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (den_lo, den_d) = den.to_dense();
        let (num_lo, num_d) = num.to_dense();
        let g = dense_gcd(&num_d, &den_d);
        let mut n = dense_div_exact(&num_d, &g);
        let mut d = dense_div_exact(&den_d, &g);
        let c = dense_content(&n).gcd(&dense_content(&d));
        if !c.is_one() {
            n.iter_mut().for_each(|x| *x /= &c);
            d.iter_mut().for_each(|x| *x /= &c);
        }
        if d.last().unwrap().is_negative() {
            n.iter_mut().for_each(|x| *x = -&*x);
            d.iter_mut().for_each(|x| *x = -&*x);
        }
        // the gcd has a nonzero constant term, so `d` keeps one as well
        Ok(RationalFn {
            num: LaurentPoly::from_dense(checked_exp(num_lo, -den_lo), &n),
            den: LaurentPoly::from_dense(0, &d),
        })
    }

    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// A Laurent polynomial viewed as a rational function.
    pub fn from_poly(p: LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn ord_inf(&self) -> Order {
        if self.is_zero() {
            return Order::NegInfinity;
        }
        Order::Finite(self.num.max_exp().unwrap() - self.den.max_exp().unwrap())
    }

    pub fn ord_zero(&self) -> Order {
        if self.is_zero() {
            return Order::PosInfinity;
        }
        Order::Finite(self.num.min_exp().unwrap() - self.den.min_exp().unwrap())
    }

    /// `ord_∞ - ord_0`, and 0 for the zero function.
    pub fn breadth(&self) -> i64 {
        self.num.breadth() - self.den.breadth()
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn mirror(&self) -> Self {
        RationalFn::new(self.num.mirror(), self.den.mirror()).expect("nonzero denominator")
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RationalFn::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, k: i32) -> Result<Self, LaurentError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(RationalFn::new(base.num.pow(k.unsigned_abs()), base.den.pow(k.unsigned_abs()))
            .expect("nonzero denominator"))
    }

    pub fn eval_f64(&self, a: f64) -> f64 {
        self.num.eval_f64(a) / self.den.eval_f64(a)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RationalFn {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let close = rest.find(')').ok_or_else(|| LaurentError::Parse(s.to_string()))?;
            let num: LaurentPoly = rest[..close].parse()?;
            let tail = rest[close + 1..].trim();
            let den_s = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|d| d.strip_prefix('('))
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(|| LaurentError::Parse(s.to_string()))?;
            let den: LaurentPoly = den_s.parse()?;
            RationalFn::new(num, den)
        } else {
            Ok(RationalFn::from_poly(t.parse()?))
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalFn::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RationalFn, Add add, Sub sub, Mul mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}
