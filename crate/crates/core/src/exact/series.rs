use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{PrecFloat, Rational};
use crate::error::{Error, Result};

/// Order given to exact constants and polynomials that have no truncation.
const EXACT: i64 = 1 << 40;

/// Truncated Laurent series in `t` with exact rational coefficients.
///
/// Coefficients are stored densely from `t^valuation` up to the last nonzero
/// term; anything between that and `order` is zero, and everything from
/// `t^(order+1)` on is unknown. A zero series keeps `valuation == order + 1`
/// and no coefficients. Exact polynomials carry a very large order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SeriesJson", try_from = "SeriesJson")]
pub struct TSeries {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

/// The four binary operations exposed through [`series_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic. Fails on division by zero and when the result
/// would carry no reliable non-negative coefficient.
pub fn series_arith(kind: ArithKind, a: &TSeries, b: &TSeries) -> Result<TSeries> {
    let r = match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
        ArithKind::Div => a.div(b)?,
    };
    if r.order < 0 {
        return Err(Error::OrderUnderflow(r.order));
    }
    Ok(r)
}

impl TSeries {
    /// Builds a series from coefficients of `t^valuation, t^(valuation+1), ...`,
    /// dropping anything past `order` and stripping leading zeros.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<Rational>, order: i64) -> Self {
        let mut coeffs = coeffs;
        let keep = (order - valuation + 1).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(order),
            Some(skip) => {
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
                coeffs.drain(..skip);
                Self {
                    valuation: valuation + skip as i64,
                    coeffs,
                    order,
                }
            }
        }
    }

    pub fn from_ints(valuation: i64, coeffs: &[i64], order: i64) -> Self {
        let c = coeffs
            .iter()
            .map(|&x| Rational::from_integer(BigInt::from(x)))
            .collect();
        Self::from_coeffs(valuation, c, order)
    }

    /// Polynomial `c0 + c1 t + ...` known to `order`.
    pub fn poly(coeffs: &[i64], order: i64) -> Self {
        Self::from_ints(0, coeffs, order)
    }

    pub fn zero(order: i64) -> Self {
        Self {
            valuation: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    /// Order used for exact constants and polynomials.
    pub const EXACT: i64 = EXACT;

    /// Whether the series is an exact polynomial rather than a truncation.
    pub fn is_exact(&self) -> bool {
        self.order >= EXACT / 2
    }

    pub fn one(order: i64) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        Self::from_coeffs(0, vec![c], order)
    }

    pub fn monomial(c: Rational, exp: i64, order: i64) -> Self {
        Self::from_coeffs(exp, vec![c], order)
    }

    /// The variable `t` itself.
    pub fn t(order: i64) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the first nonzero term (`order + 1` for the zero series).
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Coefficient of `t^k`.
    ///
    /// Panics when `k` lies beyond the known order.
    pub fn coeff(&self, k: i64) -> Rational {
        assert!(
            k <= self.order,
            "coefficient t^{k} requested beyond order {}",
            self.order
        );
        if k < self.valuation {
            return Rational::zero();
        }
        self.coeffs
            .get((k - self.valuation) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `t^k` as an integer, if it is one.
    pub fn int_coeff(&self, k: i64) -> Option<BigInt> {
        let c = self.coeff(k);
        c.is_integer().then(|| c.to_integer())
    }

    /// `(exponent, coefficient)` pairs for the stored nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Dense coefficients for exponents `from..=to`.
    pub fn dense(&self, from: i64, to: i64) -> Vec<Rational> {
        (from..=to).map(|k| self.coeff(k)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::from_coeffs(self.valuation, self.coeffs.clone(), order)
    }

    /// Multiplies by `t^k`; exact, so the order moves with the valuation.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            order: if self.is_exact() {
                Self::EXACT
            } else {
                self.order + k
            },
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    pub fn add_constant(&self, c: &Rational) -> Self {
        self + &Self::constant(c.clone(), EXACT)
    }

    /// Multiplicative inverse. The unit part keeps its relative precision, so
    /// the order becomes `order - 2 * valuation`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let v = self.valuation;
        if self.coeffs.len() == 1 {
            return Ok(Self::from_coeffs(
                -v,
                vec![self.coeffs[0].recip()],
                self.order - 2 * v,
            ));
        }
        self.require_truncated("inverse")?;
        let order = self.order - 2 * v;
        let len = (self.order - v + 1) as usize;
        Ok(Self::from_coeffs(-v, inverse_unit(&self.coeffs, len), order))
    }

    fn require_truncated(&self, what: &str) -> Result<()> {
        if self.is_exact() {
            return Err(Error::Unsupported(format!(
                "{what} of an untruncated polynomial; truncate it first"
            )));
        }
        Ok(())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(EXACT);
        }
        let mut result = Self::one(EXACT);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    /// Square root with positive leading coefficient, by Newton iteration on
    /// the unit part with precision doubling.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.order / 2));
        }
        let v = self.valuation;
        if v % 2 != 0 {
            return Err(Error::OddValuation(v));
        }
        let lead = &self.coeffs[0];
        let root = rational_sqrt(lead).ok_or_else(|| Error::NonSquareLeading(lead.to_string()))?;
        if self.coeffs.len() == 1 {
            return Ok(Self::from_coeffs(v / 2, vec![root], self.order - v / 2));
        }
        self.require_truncated("square root")?;
        let len = (self.order - v + 1) as usize;
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c / lead).collect();

        let mut s = vec![Rational::one()];
        let mut prec = 1usize;
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        while prec < len {
            prec = (2 * prec).min(len);
            let inv = inverse_unit(&s, prec);
            let q = convolve(&unit[..prec.min(unit.len())], &inv, prec);
            let mut next = vec![Rational::zero(); prec];
            for (k, slot) in next.iter_mut().enumerate() {
                let sk = s.get(k).cloned().unwrap_or_else(Rational::zero);
                *slot = (sk + &q[k]) * &half;
            }
            s = next;
        }
        let coeffs = s.into_iter().map(|c| c * &root).collect();
        Ok(Self::from_coeffs(v / 2, coeffs, self.order - v / 2))
    }

    /// Exact value of the stored finite sum at a rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x.is_zero() {
            if self.valuation < 0 && !self.is_zero() {
                return Err(Error::PoleAtZero(self.valuation));
            }
            return Ok(if self.valuation == 0 {
                self.coeffs[0].clone()
            } else {
                Rational::zero()
            });
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let xv = if self.valuation >= 0 {
            num_traits::pow(x.clone(), self.valuation as usize)
        } else {
            num_traits::pow(x.recip(), (-self.valuation) as usize)
        };
        Ok(acc * xv)
    }

    /// Floating evaluation at the point's working precision.
    pub fn eval_float(&self, x: &PrecFloat) -> Result<PrecFloat> {
        let digits = x.digits();
        if self.is_zero() {
            return Ok(PrecFloat::zero(digits));
        }
        if x.is_zero() {
            if self.valuation < 0 && !self.is_zero() {
                return Err(Error::PoleAtZero(self.valuation));
            }
            let c = if self.valuation == 0 {
                self.coeffs[0].clone()
            } else {
                Rational::zero()
            };
            return Ok(PrecFloat::from_rational(&c, digits));
        }
        let mut acc = PrecFloat::zero(digits);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &PrecFloat::from_rational(c, digits);
        }
        Ok(&acc * &x.powi(self.valuation))
    }

    /// Composition `self(s)` for `s` of positive valuation.
    pub fn compose(&self, s: &Self) -> Result<Self> {
        if s.is_zero() || s.valuation < 1 {
            return Err(Error::Composition(format!(
                "inner series must have positive valuation, got {}",
                s.valuation
            )));
        }
        if self.is_zero() {
            let order = (self.order + 1).saturating_mul(s.valuation).saturating_sub(1);
            return Ok(Self::zero(order.min(EXACT)));
        }
        let vs = s.valuation;
        let m = self.order - self.valuation;
        let cap = (m + 1).saturating_mul(vs).saturating_sub(1).min(EXACT);
        let mut acc = Self::zero(cap);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * s) + &Self::constant(c.clone(), cap);
        }
        let r = &acc * &s.powi(self.valuation)?;
        if r.order < 0 {
            return Err(Error::Composition(format!(
                "result only known to order {}",
                r.order
            )));
        }
        Ok(r)
    }

    /// `p(s)` for an exact polynomial `p` given by its coefficients; any `s`.
    pub fn substitute_polynomial(poly: &[Rational], s: &Self) -> Self {
        let mut acc = Self::zero(EXACT);
        for c in poly.iter().rev() {
            acc = &(&acc * s) + &Self::constant(c.clone(), EXACT);
        }
        acc
    }

    /// First exponent `<= upto` where the two series differ, `None` if they
    /// agree through `upto`. Both must be known through `upto`.
    pub fn first_difference(&self, other: &Self, upto: i64) -> Result<Option<i64>> {
        let known = self.order.min(other.order);
        if known < upto {
            return Err(Error::OrderUnderflow(known));
        }
        let from = self.valuation.min(other.valuation);
        Ok((from..=upto).find(|&k| self.coeff(k) != other.coeff(k)))
    }
}

fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_integer())
}

/// First `len` coefficients of the product of two dense coefficient slices.
fn convolve(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    if is_integral(a) && is_integral(b) {
        let ai: Vec<BigInt> = a.iter().map(|c| c.to_integer()).collect();
        let bi: Vec<BigInt> = b.iter().map(|c| c.to_integer()).collect();
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in ai.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bi.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        return out.into_iter().map(Rational::from_integer).collect();
    }
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// First `len` coefficients of `1 / a` for `a[0] != 0`.
fn inverse_unit(a: &[Rational], len: usize) -> Vec<Rational> {
    let a0 = &a[0];
    if is_integral(a) && a0.abs().is_one() {
        let ai: Vec<BigInt> = a.iter().map(|c| c.to_integer()).collect();
        let sign = ai[0].clone();
        let mut r: Vec<BigInt> = Vec::with_capacity(len);
        r.push(sign.clone());
        for k in 1..len {
            let mut s = BigInt::zero();
            for j in 1..=k.min(ai.len() - 1) {
                if !ai[j].is_zero() {
                    s += &ai[j] * &r[k - j];
                }
            }
            r.push(-(s * &sign));
        }
        return r.into_iter().map(Rational::from_integer).collect();
    }
    let inv0 = a0.recip();
    let mut r: Vec<Rational> = Vec::with_capacity(len);
    r.push(inv0.clone());
    for k in 1..len {
        let mut s = Rational::zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() {
                s += &a[j] * &r[k - j];
            }
        }
        r.push(-(s * &inv0));
    }
    r
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        combine(self, rhs, false)
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        combine(self, rhs, true)
    }
}

fn combine(a: &TSeries, b: &TSeries, negate: bool) -> TSeries {
    let order = a.order.min(b.order);
    let lo = a.valuation.min(b.valuation);
    if lo > order {
        return TSeries::zero(order);
    }
    let extent = |s: &TSeries| {
        if s.is_zero() {
            lo
        } else {
            s.valuation + s.coeffs.len() as i64
        }
    };
    let len = ((order - lo + 1).min(extent(a).max(extent(b)) - lo)).max(0) as usize;
    let mut out = vec![Rational::zero(); len];
    for (i, c) in a.coeffs.iter().enumerate() {
        let k = a.valuation + i as i64 - lo;
        if (k as usize) < len {
            out[k as usize] += c;
        }
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let k = b.valuation + i as i64 - lo;
        if (k as usize) < len {
            if negate {
                out[k as usize] -= c;
            } else {
                out[k as usize] += c;
            }
        }
    }
    TSeries::from_coeffs(lo, out, order)
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        let order = (self.order + rhs.valuation).min(rhs.order + self.valuation);
        if self.is_zero() || rhs.is_zero() {
            return TSeries::zero(order);
        }
        let v = self.valuation + rhs.valuation;
        if order < v {
            return TSeries::zero(order);
        }
        let full = (self.coeffs.len() + rhs.coeffs.len() - 1) as i64;
        let len = (order - v + 1).min(full) as usize;
        TSeries::from_coeffs(v, convolve(&self.coeffs, &rhs.coeffs, len), order)
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TSeries {
            type Output = TSeries;
            fn $m(self, rhs: TSeries) -> TSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TSeries> for TSeries {
            type Output = TSeries;
            fn $m(self, rhs: &TSeries) -> TSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<TSeries> for &TSeries {
            type Output = TSeries;
            fn $m(self, rhs: TSeries) -> TSeries {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        -&self
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.is_exact() {
            return Ok(());
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

/// Wire form: `{valuation, order, coeffs: [[num, den], ...]}` with decimal
/// strings for the big integers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeriesJson {
    pub valuation: i64,
    pub order: i64,
    pub coeffs: Vec<[String; 2]>,
}

impl From<TSeries> for SeriesJson {
    fn from(s: TSeries) -> Self {
        SeriesJson {
            valuation: s.valuation,
            order: s.order,
            coeffs: s
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TSeries {
    type Error = Error;
    fn try_from(j: SeriesJson) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for [n, d] in &j.coeffs {
            let n: BigInt = n
                .parse()
                .map_err(|_| Error::Invalid(format!("bad numerator {n:?}")))?;
            let d: BigInt = d
                .parse()
                .map_err(|_| Error::Invalid(format!("bad denominator {d:?}")))?;
            if d.is_zero() {
                return Err(Error::Invalid("zero denominator".into()));
            }
            coeffs.push(Rational::new(n, d));
        }
        if j.valuation + coeffs.len() as i64 > j.order + 1 {
            return Err(Error::Invalid("more coefficients than the order allows".into()));
        }
        Ok(TSeries::from_coeffs(j.valuation, coeffs, j.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ints(s: &TSeries, from: i64, to: i64) -> Vec<i64> {
        (from..=to)
            .map(|k| {
                let c = s.coeff(k);
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = TSeries::poly(&[1, 1], 10);
        let b = TSeries::poly(&[1, -1], 10);
        assert_eq!(&a * &b, TSeries::poly(&[1, 0, -1], 10));
    }

    #[test]
    fn free_walk_quotient() {
        let r = series_arith(
            ArithKind::Div,
            &TSeries::poly(&[1, 1], 4),
            &TSeries::poly(&[1, -2, -1], 4),
        )
        .unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(ints(&r, 0, 4), vec![1, 3, 7, 17, 41]);
        assert_eq!(r.to_string(), "1 + 3t + 7t^2 + 17t^3 + 41t^4 + O(t^5)");
    }

    #[test]
    fn valuation_aware_division() {
        let a = TSeries::poly(&[0, 0, 2, 0, 2], 4);
        let b = TSeries::poly(&[0, 1, 0, 1], 4);
        let q = a.div(&b).unwrap();
        assert_eq!(q.valuation(), 1);
        assert_eq!(q.order(), 3);
        assert_eq!(ints(&q, 0, 3), vec![0, 2, 0, 0]);
        assert_eq!(q.to_string(), "2t + O(t^4)");
        assert_eq!((&q * &b).truncate(4), a.truncate(4));
    }

    #[test]
    fn division_by_zero_and_underflow() {
        let a = TSeries::one(5);
        assert_eq!(a.div(&TSeries::zero(5)), Err(Error::DivisionByZero));
        let tiny = TSeries::monomial(rat(1, 1), 4, 5);
        assert!(matches!(
            series_arith(ArithKind::Div, &a, &tiny),
            Err(Error::OrderUnderflow(_))
        ));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(TSeries::one(6).sqrt().unwrap(), TSeries::one(6));
        let r = TSeries::poly(&[1, 0, -6, 0, 5], 7).sqrt().unwrap();
        assert_eq!(ints(&r, 0, 7), vec![1, 0, -3, 0, -2, 0, -6, 0]);
        assert_eq!(r.order(), 7);
        let rad = &TSeries::poly(&[1, 0, 0, 0, -1], 6) * &TSeries::poly(&[1, -2, -1], 6);
        let r = rad.sqrt().unwrap();
        assert_eq!(ints(&r, 0, 6), vec![1, -1, -1, -1, -2, -2, -4]);
    }

    #[test]
    fn zero_series_evaluates_to_zero() {
        let z = TSeries::zero(TSeries::EXACT);
        assert_eq!(z.eval(&rat(1, 2)).unwrap(), rat(0, 1));
        assert!(z.eval_float(&PrecFloat::from_i64(3, 20)).unwrap().is_zero());
    }

    #[test]
    fn sqrt_errors() {
        let odd = TSeries::monomial(rat(1, 1), 3, 8);
        assert_eq!(odd.sqrt(), Err(Error::OddValuation(3)));
        let nonsq = TSeries::poly(&[2, 1], 8);
        assert!(matches!(nonsq.sqrt(), Err(Error::NonSquareLeading(_))));
        let shifted = TSeries::from_ints(2, &[4, 4, 1], 10).sqrt().unwrap();
        assert_eq!(shifted.valuation(), 1);
        assert_eq!(shifted.coeff(1), rat(2, 1));
        assert_eq!(shifted.coeff(2), rat(1, 1));
        assert_eq!(shifted.coeff(3), rat(0, 1));
    }

    #[test]
    fn evaluation() {
        assert_eq!(TSeries::poly(&[1, 1, 1], 5).eval(&rat(0, 1)).unwrap(), rat(1, 1));
        assert_eq!(TSeries::poly(&[1, 2], 5).eval(&rat(1, 2)).unwrap(), rat(2, 1));
        let laurent = TSeries::from_ints(-1, &[1, 1], 3);
        assert_eq!(laurent.eval(&rat(0, 1)), Err(Error::PoleAtZero(-1)));
        assert_eq!(laurent.eval(&rat(2, 1)).unwrap(), rat(3, 2));
    }

    #[test]
    fn composition() {
        let sq = TSeries::poly(&[0, 0, 1], 10);
        let two_t = TSeries::poly(&[0, 2], 10);
        let r = sq.compose(&two_t).unwrap();
        assert_eq!(r.coeff(2), rat(4, 1));
        assert!(r.terms().all(|(k, _)| k == 2));

        let geom = TSeries::poly(&[1, -1], 4).inv().unwrap();
        let r = geom.compose(&TSeries::poly(&[0, 0, 1], 4)).unwrap();
        assert_eq!(r.order(), 4);
        let r = geom.compose(&TSeries::poly(&[0, 0, 1], TSeries::EXACT)).unwrap();
        assert_eq!(r.order(), 9);
        assert_eq!(ints(&r.truncate(4), 0, 4), vec![1, 0, 1, 0, 1]);
        assert!(geom.compose(&TSeries::poly(&[1, 1], 4)).is_err());
    }

    #[test]
    fn polynomial_substitution_allows_units() {
        let p = vec![rat(1, 1), rat(0, 1), rat(1, 1)];
        let s = TSeries::poly(&[1, 1], 6);
        let r = TSeries::substitute_polynomial(&p, &s);
        assert_eq!(ints(&r, 0, 3), vec![2, 2, 1, 0]);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let big = Rational::new("123456789012345678901234567890".parse().unwrap(), BigInt::from(7));
        let numer = big.numer().to_string();
        assert!(numer.len() >= 29);
        let s = TSeries::from_coeffs(-1, vec![big, rat(-3, 4)], 6);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains(&format!("\"{numer}\"")));
        let back: TSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
