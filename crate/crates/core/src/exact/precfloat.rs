use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use super::Rational;

/// Working precision used when nothing else is requested.
pub const DEFAULT_DIGITS: usize = 30;

const RM: RoundingMode = RoundingMode::ToEven;

/// Guard bits carried beyond the declared decimal precision.
const GUARD_BITS: usize = 64;

static CONSTS: Mutex<Option<Consts>> = Mutex::new(None);

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    let mut guard = CONSTS.lock().unwrap_or_else(|e| e.into_inner());
    let cc = guard.get_or_insert_with(|| Consts::new().expect("constants cache"));
    f(cc)
}

fn bits_for(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

/// Arbitrary-precision binary float tagged with a decimal working precision.
///
/// Binary operations run at the smaller of the two operands' precisions.
#[derive(Clone, Debug)]
pub struct PrecFloat {
    value: BigFloat,
    digits: usize,
}

impl PrecFloat {
    fn wrap(value: BigFloat, digits: usize) -> Self {
        Self { value, digits }
    }

    fn bits(&self) -> usize {
        bits_for(self.digits)
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// Same value re-tagged (and rounded) at a new precision.
    pub fn with_digits(&self, digits: usize) -> Self {
        let mut v = self.value.clone();
        let _ = v.set_precision(bits_for(digits), RM);
        Self::wrap(v, digits)
    }

    pub fn zero(digits: usize) -> Self {
        Self::wrap(BigFloat::from_u64(0, bits_for(digits)), digits)
    }

    pub fn from_i64(x: i64, digits: usize) -> Self {
        Self::wrap(BigFloat::from_i64(x, bits_for(digits)), digits)
    }

    pub fn from_f64(x: f64, digits: usize) -> Self {
        Self::wrap(BigFloat::from_f64(x, bits_for(digits)), digits)
    }

    pub fn from_bigint(x: &BigInt, digits: usize) -> Self {
        Self::parse(&x.to_string(), digits).expect("integers always parse")
    }

    pub fn from_rational(x: &Rational, digits: usize) -> Self {
        let n = Self::from_bigint(x.numer(), digits);
        let d = Self::from_bigint(x.denom(), digits);
        &n / &d
    }

    /// Parses a decimal literal such as `"0.27730985348603118827"`.
    pub fn parse(s: &str, digits: usize) -> Option<Self> {
        let p = bits_for(digits);
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
        (!v.is_nan()).then(|| Self::wrap(v, digits))
    }

    pub fn pi(digits: usize) -> Self {
        let p = bits_for(digits);
        Self::wrap(with_consts(|cc| cc.pi(p, RM)), digits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.bits(), RM), self.digits)
    }

    pub fn ln(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.ln(p, RM, cc)), self.digits)
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.exp(p, RM, cc)), self.digits)
    }

    /// Real power `self^y` for positive `self`.
    pub fn powf(&self, y: &Self) -> Self {
        y.ln_times(self).exp()
    }

    fn ln_times(&self, base: &Self) -> Self {
        self * &base.ln()
    }

    /// Integer power, negative exponents allowed.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.bits();
        let m = self.value.powi(n.unsigned_abs() as usize, p, RM);
        let v = if n < 0 {
            BigFloat::from_u64(1, p).div(&m, p, RM)
        } else {
            m
        };
        Self::wrap(v, self.digits)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.digits)
    }

    pub fn recip(&self) -> Self {
        let p = self.bits();
        Self::wrap(BigFloat::from_u64(1, p).div(&self.value, p, RM), self.digits)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn to_f64(&self) -> f64 {
        self.to_sci_string(20).parse().unwrap_or(f64::NAN)
    }

    /// `|self - other| <= tol`.
    pub fn approx_eq(&self, other: &Self, tol: &Self) -> bool {
        (self - other).abs() <= *tol
    }

    /// `|self - other| <= tol * |other|`.
    pub fn rel_eq(&self, other: &Self, tol: f64) -> bool {
        let t = PrecFloat::from_f64(tol, self.digits.min(other.digits));
        (self - other).abs() <= &t * &other.abs()
    }

    /// Number of leading significant decimal digits on which `self` and
    /// `reference` agree, measured as `-log10(|self/reference - 1|)`.
    pub fn agreeing_digits(&self, reference: &Self) -> f64 {
        let rel = (&(self - reference) / reference).abs();
        if rel.is_zero() {
            return self.digits as f64;
        }
        -rel.to_f64().log10()
    }

    /// Mantissa digits and decimal exponent: value = 0.d1d2d3... * 10^exp.
    fn decimal_parts(&self) -> (bool, String, i64) {
        let text = with_consts(|cc| self.value.format(Radix::Dec, RM, cc)).unwrap_or_default();
        let neg = text.starts_with('-');
        let body = text.trim_start_matches('-');
        let (mant, exp) = match body.split_once('e') {
            Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
            None => (body, 0),
        };
        let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
        let digits: String = format!("{int_part}{frac_part}");
        let lead_zeros = digits.chars().take_while(|&c| c == '0').count();
        let trimmed = digits[lead_zeros..].to_string();
        if trimmed.is_empty() {
            return (false, "0".into(), 1);
        }
        let exp10 = exp + int_part.len() as i64 - lead_zeros as i64;
        (neg, trimmed, exp10)
    }

    /// Rounds to `sig` significant digits and returns (sign, digits, exp) with
    /// value = 0.digits * 10^exp.
    fn rounded(&self, sig: usize) -> (bool, String, i64) {
        let (neg, digits, mut exp) = self.decimal_parts();
        if digits == "0" {
            return (false, "0".repeat(sig.max(1)), 1);
        }
        let mut d: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
        d.resize(d.len().max(sig + 1), 0);
        let round_up = d[sig] >= 5;
        d.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    d.insert(0, 1);
                    d.truncate(sig);
                    exp += 1;
                    break;
                }
                i -= 1;
                if d[i] == 9 {
                    d[i] = 0;
                } else {
                    d[i] += 1;
                    break;
                }
            }
        }
        let s: String = d.iter().map(|x| (x + b'0') as char).collect();
        (neg, s, exp)
    }

    /// Plain decimal notation with `sig` significant digits.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        let (neg, d, exp) = self.rounded(sig);
        let sign = if neg { "-" } else { "" };
        if exp <= 0 {
            format!("{sign}0.{}{}", "0".repeat((-exp) as usize), d)
        } else if exp as usize >= d.len() {
            format!("{sign}{}{}", d, "0".repeat(exp as usize - d.len()))
        } else {
            let (a, b) = d.split_at(exp as usize);
            format!("{sign}{a}.{b}")
        }
    }

    /// Scientific notation `d.ddd…e±x` with `sig` significant digits.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let (neg, d, exp) = self.rounded(sig.max(1));
        let sign = if neg { "-" } else { "" };
        let (a, b) = d.split_at(1);
        if b.is_empty() {
            format!("{sign}{a}e{}", exp - 1)
        } else {
            format!("{sign}{a}.{b}e{}", exp - 1)
        }
    }
}

fn binop(a: &PrecFloat, b: &PrecFloat, f: impl FnOnce(&BigFloat, &BigFloat, usize) -> BigFloat) -> PrecFloat {
    let digits = a.digits.min(b.digits);
    PrecFloat::wrap(f(&a.value, &b.value, bits_for(digits)), digits)
}

impl Add for &PrecFloat {
    type Output = PrecFloat;
    fn add(self, rhs: &PrecFloat) -> PrecFloat {
        binop(self, rhs, |a, b, p| a.add(b, p, RM))
    }
}

impl Sub for &PrecFloat {
    type Output = PrecFloat;
    fn sub(self, rhs: &PrecFloat) -> PrecFloat {
        binop(self, rhs, |a, b, p| a.sub(b, p, RM))
    }
}

impl Mul for &PrecFloat {
    type Output = PrecFloat;
    fn mul(self, rhs: &PrecFloat) -> PrecFloat {
        binop(self, rhs, |a, b, p| a.mul(b, p, RM))
    }
}

impl Div for &PrecFloat {
    type Output = PrecFloat;
    fn div(self, rhs: &PrecFloat) -> PrecFloat {
        binop(self, rhs, |a, b, p| a.div(b, p, RM))
    }
}

impl Neg for &PrecFloat {
    type Output = PrecFloat;
    fn neg(self) -> PrecFloat {
        PrecFloat::wrap(-self.value.clone(), self.digits)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for PrecFloat {
            type Output = PrecFloat;
            fn $m(self, rhs: PrecFloat) -> PrecFloat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PrecFloat> for PrecFloat {
            type Output = PrecFloat;
            fn $m(self, rhs: &PrecFloat) -> PrecFloat {
                (&self).$m(rhs)
            }
        }
        impl $tr<PrecFloat> for &PrecFloat {
            type Output = PrecFloat;
            fn $m(self, rhs: PrecFloat) -> PrecFloat {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for PrecFloat {
    type Output = PrecFloat;
    fn neg(self) -> PrecFloat {
        -&self
    }
}

impl PartialEq for PrecFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for PrecFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for PrecFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(self.digits))
    }
}

/// Serialises as a decimal string carrying every declared digit.
impl serde::Serialize for PrecFloat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal_string(self.digits))
    }
}

impl From<&PrecFloat> for f64 {
    fn from(x: &PrecFloat) -> f64 {
        x.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn sqrt_two_digits() {
        let s = PrecFloat::from_i64(2, 40).sqrt();
        assert_eq!(s.to_decimal_string(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn rational_conversion_and_printing() {
        let x = PrecFloat::from_rational(&rat(-1, 8), 30);
        assert_eq!(x.to_decimal_string(3), "-0.125");
        assert_eq!(PrecFloat::from_i64(12345, 30).to_decimal_string(3), "12300");
        assert_eq!(
            PrecFloat::from_rational(&rat(2, 3), 30).to_sci_string(4),
            "6.667e-1"
        );
        assert_eq!(
            PrecFloat::from_rational(&rat(1, 1000), 30).to_decimal_string(2),
            "0.0010"
        );
        assert_eq!(
            PrecFloat::from_rational(&rat(999, 1000), 30).to_decimal_string(2),
            "1.0"
        );
    }

    #[test]
    fn pi_and_powers() {
        let pi = PrecFloat::pi(35);
        assert_eq!(pi.to_decimal_string(30), "3.14159265358979323846264338328");
        let x = PrecFloat::from_rational(&rat(3, 2), 30);
        assert_eq!(x.powi(-2).to_decimal_string(10), "0.4444444444");
        let y = PrecFloat::from_i64(2, 30).powf(&PrecFloat::from_rational(&rat(1, 2), 30));
        assert!(y.approx_eq(
            &PrecFloat::from_i64(2, 30).sqrt(),
            &PrecFloat::parse("1e-28", 30).unwrap()
        ));
    }

    #[test]
    fn precision_propagates_as_minimum() {
        let a = PrecFloat::from_i64(1, 50);
        let b = PrecFloat::from_i64(3, 20);
        assert_eq!((&a / &b).digits(), 20);
    }
}
