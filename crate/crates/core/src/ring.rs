//! The warped coefficient ring.
//!
//! Elements are finite ℚ-linear combinations of monomials
//! `y1^a1 ⋯ yN^aN · exp(k·yN)` over the coordinates `y1..yN` of an
//! `N`-dimensional frame. Exponentials only ever appear in the last
//! coordinate, which is the warping direction of the frames this crate
//! realizes. The ring is closed under the coordinate partials and under
//! multiplication by `exp(±yN)`, hence under every frame derivation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `y^exps · exp(exp_weight · yN)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<u32>,
    pub exp_weight: i64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            exp_weight: 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exp_weight == 0 && self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            exp_weight: self.exp_weight + other.exp_weight,
        }
    }

    /// `self / other` if the polynomial part divides; exponential weights
    /// always divide.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            exps,
            exp_weight: self.exp_weight - other.exp_weight,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    nvars: usize,
    // invariant: no zero coefficients, every key has `nvars` exponents
    terms: BTreeMap<Monomial, Rational>,
}

impl RingElement {
    pub fn zero(nvars: usize) -> Self {
        RingElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, c, Monomial::one(nvars))
    }

    /// A single term. Panics if the monomial has the wrong number of
    /// exponents.
    pub fn term(nvars: usize, c: Rational, m: Monomial) -> Self {
        assert_eq!(m.exps.len(), nvars, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RingElement { nvars, terms }
    }

    /// The coordinate function `y_{index+1}`.
    pub fn coordinate(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        Self::term(nvars, Rational::one(), m)
    }

    /// `exp(k · yN)`.
    pub fn exp(nvars: usize, k: i64) -> Self {
        let mut m = Monomial::one(nvars);
        m.exp_weight = k;
        Self::term(nvars, Rational::one(), m)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().is_one(),
            _ => false,
        }
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let mut out = RingElement::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(self.nvars);
        }
        RingElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `exp(k · yN)`.
    pub fn mul_exp(&self, k: i64) -> RingElement {
        RingElement {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exp_weight += k;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// `∂/∂y_{var+1}`. The exponential factor depends on the last
    /// coordinate only.
    pub fn partial(&self, var: usize) -> Result<RingElement> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var + 1,
                dim: self.nvars,
            });
        }
        let last = var + 1 == self.nvars;
        let mut out = RingElement::zero(self.nvars);
        for (m, c) in &self.terms {
            let a = m.exps[var];
            if a > 0 {
                let mut dm = m.clone();
                dm.exps[var] -= 1;
                out.accumulate(dm, c * &Rational::from_int(a as i64));
            }
            if last && m.exp_weight != 0 {
                out.accumulate(m.clone(), c * &Rational::from_int(m.exp_weight));
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor` when it exists in the ring.
    ///
    /// Both operands are shifted by a power of `exp(yN)` so that all
    /// weights are non-negative; the weight then behaves as one more
    /// polynomial variable and lexicographic division is exact. The shifted
    /// divisor is not divisible by `exp(yN)`, so a ring quotient exists iff
    /// the shifted polynomial quotient does.
    pub fn exact_div(&self, divisor: &RingElement) -> Option<RingElement> {
        if self.nvars != divisor.nvars || divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(RingElement::zero(self.nvars));
        }
        let min_w = |r: &RingElement| r.terms.keys().map(|m| m.exp_weight).min().unwrap();
        let (sa, sb) = (min_w(self), min_w(divisor));
        let mut rem = self.mul_exp(-sa);
        let b = divisor.mul_exp(-sb);
        let (lm_b, lc_b) = b
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot = RingElement::zero(self.nvars);
        while let Some((lm_r, lc_r)) = rem.terms.iter().next_back() {
            let m = lm_r.div(&lm_b)?;
            if m.exp_weight < 0 {
                return None;
            }
            let c = lc_r / &lc_b;
            let t = RingElement::term(self.nvars, c, m);
            rem = &rem - &(&t * &b);
            quot = &quot + &t;
        }
        Some(quot.mul_exp(sa - sb))
    }

    /// Parses the textual form produced by `Display`, e.g.
    /// `2 * y1^2 * exp(-y5) - 1/3`.
    pub fn parse(nvars: usize, input: &str) -> Result<RingElement> {
        Parser::new(nvars, input).parse()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = if neg { -c } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(alloc::format!("y{}", i + 1)),
                    _ => factors.push(alloc::format!("y{}^{}", i + 1, e)),
                }
            }
            match m.exp_weight {
                0 => {}
                1 => factors.push(alloc::format!("exp(y{})", self.nvars)),
                -1 => factors.push(alloc::format!("exp(-y{})", self.nvars)),
                k => factors.push(alloc::format!("exp({}*y{})", k, self.nvars)),
            }
            f.write_str(&factors.join(" * "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

// Operator forms panic on coordinate-count mismatch; use the `checked_*`
// methods where operands come from untrusted input.

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.checked_add(rhs).expect("ring elements over different coordinates")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.checked_sub(rhs).expect("ring elements over different coordinates")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.checked_mul(rhs).expect("ring elements over different coordinates")
    }
}

impl Mul<&Rational> for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &Rational) -> RingElement {
        self.scale(rhs)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&-Rational::one())
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        &self + &rhs
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

struct Parser<'a> {
    nvars: usize,
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(nvars: usize, input: &'a str) -> Self {
        Parser {
            nvars,
            input,
            chars: input
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| if c == '\u{2212}' { '-' } else { c })
                .collect(),
            pos: 0,
        }
    }

    fn fail<T>(&self, reason: &str) -> Result<T> {
        Err(Error::ParseRing {
            input: self.input.to_string(),
            reason: alloc::format!("{reason} at offset {}", self.pos),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<Rational> {
        let Some(mut text) = self.digits() else {
            return self.fail("expected number");
        };
        if self.eat('/') {
            let Some(den) = self.digits() else {
                return self.fail("expected denominator");
            };
            text.push('/');
            text.push_str(&den);
        }
        text.parse()
    }

    fn variable(&mut self) -> Result<usize> {
        let Some(d) = self.digits() else {
            return self.fail("expected coordinate index");
        };
        match d.parse::<usize>() {
            Ok(i) if (1..=self.nvars).contains(&i) => Ok(i - 1),
            _ => self.fail("coordinate index out of range"),
        }
    }

    fn parse(mut self) -> Result<RingElement> {
        let mut out = RingElement::zero(self.nvars);
        if self.chars.is_empty() {
            return self.fail("empty expression");
        }
        let mut first = true;
        while self.pos < self.chars.len() {
            let neg = if self.eat('-') {
                true
            } else {
                if !self.eat('+') && !first {
                    return self.fail("expected '+' or '-'");
                }
                false
            };
            first = false;
            let mut coeff = Rational::one();
            let mut mono = Monomial::one(self.nvars);
            loop {
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => coeff = &coeff * &self.number()?,
                    Some('y') => {
                        self.pos += 1;
                        let v = self.variable()?;
                        let e = if self.eat('^') {
                            match self.digits().and_then(|d| d.parse::<u32>().ok()) {
                                Some(e) => e,
                                None => return self.fail("expected exponent"),
                            }
                        } else {
                            1
                        };
                        mono.exps[v] += e;
                    }
                    Some('e') => {
                        if !self.eat_str("exp(") {
                            return self.fail("expected exp(");
                        }
                        let sign = if self.eat('-') { -1 } else { 1 };
                        let k = match self.peek() {
                            Some(c) if c.is_ascii_digit() => {
                                let k = self.digits().unwrap().parse::<i64>();
                                if !self.eat('*') {
                                    return self.fail("expected '*'");
                                }
                                match k {
                                    Ok(k) => k,
                                    Err(_) => return self.fail("weight too large"),
                                }
                            }
                            _ => 1,
                        };
                        if !self.eat('y') || self.variable()? + 1 != self.nvars {
                            return self.fail("exponentials must be in the last coordinate");
                        }
                        if !self.eat(')') {
                            return self.fail("expected ')'");
                        }
                        mono.exp_weight += sign * k;
                    }
                    _ => return self.fail("expected factor"),
                }
                if !self.eat('*') {
                    break;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.accumulate(mono, coeff);
        }
        Ok(out)
    }
}
