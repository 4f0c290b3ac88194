use std::fmt;

use serde::Serialize;

use crate::exact::PrecFloat;

/// How a constant was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Evaluated from a closed expression or a local expansion.
    Analytic,
    /// Extrapolated from exact coefficients.
    Fit,
    /// A raw ratio of exact coefficients at one length, no extrapolation.
    Empirical,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Analytic => "analytic",
            Method::Fit => "fit",
            Method::Empirical => "empirical",
        })
    }
}

/// A named side value attached to a report.
#[derive(Clone, Debug, Serialize)]
pub struct Diagnostic {
    pub name: String,
    pub value: String,
}

/// One asymptotic constant together with how it was found and how far it is
/// from the printed value.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticReport {
    pub constant_name: String,
    pub method: Method,
    pub value: PrecFloat,
    pub reference: Option<PrecFloat>,
    pub abs_error: Option<PrecFloat>,
    /// `-log10` of the relative error against `reference`.
    pub agreeing_digits: Option<f64>,
    /// Lengths used by a fit.
    pub n_range: Option<(usize, usize)>,
    /// Number of extrapolation steps in `1/n` applied by a fit.
    pub extrapolation_order: Option<usize>,
    pub diagnostics: Vec<Diagnostic>,
}

impl AsymptoticReport {
    pub fn new(name: impl Into<String>, method: Method, value: PrecFloat) -> Self {
        Self {
            constant_name: name.into(),
            method,
            value,
            reference: None,
            abs_error: None,
            agreeing_digits: None,
            n_range: None,
            extrapolation_order: None,
            diagnostics: Vec::new(),
        }
    }

    /// Attaches a printed reference value given as a decimal literal.
    pub fn against(mut self, reference: &str) -> Self {
        let r = PrecFloat::parse(reference, self.value.digits()).expect("reference literals parse");
        self.abs_error = Some((&self.value - &r).abs());
        self.agreeing_digits = Some(self.value.agreeing_digits(&r));
        self.reference = Some(r);
        self
    }

    pub fn fitted(mut self, n_range: (usize, usize), order: usize) -> Self {
        self.n_range = Some(n_range);
        self.extrapolation_order = Some(order);
        self
    }

    pub fn note(mut self, name: impl Into<String>, value: impl fmt::Display) -> Self {
        self.diagnostics.push(Diagnostic {
            name: name.into(),
            value: value.to_string(),
        });
        self
    }

    /// Relative error against the reference, if any.
    pub fn rel_error(&self) -> Option<f64> {
        let r = self.reference.as_ref()?;
        Some((&(&self.value - r) / r).abs().to_f64())
    }

    /// True when the value agrees with the reference to `digits` significant
    /// digits.
    pub fn agrees_to(&self, digits: f64) -> bool {
        self.agreeing_digits.is_some_and(|d| d >= digits)
    }

    pub fn diagnostic(&self, name: &str) -> Option<&str> {
        self.diagnostics
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.value.as_str())
    }
}

impl fmt::Display for AsymptoticReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] = {}", self.constant_name, self.method, self.value)?;
        if let (Some(r), Some(d)) = (&self.reference, self.agreeing_digits) {
            write!(f, " (printed {r}, {d:.1} digits)")?;
        }
        Ok(())
    }
}

/// Evaluates `f` at `digits` and at twice that, and returns the number of
/// leading digits on which the two agree.
pub fn doubling_agreement(digits: usize, f: impl Fn(usize) -> PrecFloat) -> f64 {
    let lo = f(digits);
    let hi = f(2 * digits);
    lo.with_digits(2 * digits)
        .agreeing_digits(&hi)
        .min(2.0 * digits as f64)
}
