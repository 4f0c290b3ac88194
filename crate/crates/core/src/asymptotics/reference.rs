//! Printed constants, kept as decimal literals exactly as they appear.

use crate::exact::PrecFloat;

pub const A0: &str = "0.27730985348603118827";
pub const A1: &str = "3.71410486533662324953";
pub const A2: &str = "0.20697997020804157910";
pub const THETA: &str = "0.31096381899209832";
/// Coefficient of `mu^n / sqrt(n)` in `[t^n] h_1(1,1)`.
pub const H_CONST: &str = "0.090584741026764287";
/// Coefficient of `mu^n / sqrt(n)` in `[t^n] k_1(1,1)`.
pub const B0: &str = "0.218693916694303177";
pub const HALFPLANE: &str = "1.496489";

/// Number of significant digits in a decimal literal.
pub fn printed_digits(s: &str) -> usize {
    let d: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
    d.trim_start_matches('0').len()
}

pub fn lit(s: &str, digits: usize) -> PrecFloat {
    PrecFloat::parse(s, digits).expect("reference literals parse")
}

/// `1 + sqrt 2`.
pub fn mu(digits: usize) -> PrecFloat {
    &PrecFloat::from_i64(1, digits) + &PrecFloat::from_i64(2, digits).sqrt()
}

/// `sqrt 2 - 1`, the dominant singularity of every wedge series.
pub fn t_c(digits: usize) -> PrecFloat {
    &PrecFloat::from_i64(2, digits).sqrt() - &PrecFloat::from_i64(1, digits)
}

/// `10^-k` at `digits`.
pub fn ten_pow(k: i64, digits: usize) -> PrecFloat {
    PrecFloat::from_i64(10, digits).powi(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_counts() {
        assert_eq!(printed_digits(A0), 20);
        assert_eq!(printed_digits(THETA), 17);
        assert_eq!(printed_digits(HALFPLANE), 7);
    }
}
