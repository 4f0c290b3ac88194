use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

/// Argument of the asymmetric theta-like sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaArg {
    /// `Q_asym(1)`.
    Q,
    /// `P(1)`.
    P,
}

/// Every explicit generating function the crate can expand. Serialises as
/// its command-line name, e.g. `"theta_sym:1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GfKind {
    Free,
    Dyck,
    Bargraph(u32),
    SymF1,
    SymG1,
    AsymH1,
    AsymK1,
    Halfplane,
    ThetaSym(Rational),
    ThetaAsym(ThetaArg),
    FAya(Rational),
    HAyaRaw(Rational),
    HAyaSimplified(Rational),
}

impl GfKind {
    /// Names accepted by [`FromStr`]; parametrised kinds take `name:arg`.
    pub const NAMES: [&'static str; 13] = [
        "free",
        "dyck",
        "bargraph:P",
        "sym_f1",
        "sym_g1",
        "asym_h1",
        "asym_k1",
        "halfplane",
        "theta_sym:A",
        "theta_asym:q|p",
        "f_aya:A",
        "h_aya_raw:A",
        "h_aya_simplified:A",
    ];
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfKind::Free => f.write_str("free"),
            GfKind::Dyck => f.write_str("dyck"),
            GfKind::Bargraph(p) => write!(f, "bargraph:{p}"),
            GfKind::SymF1 => f.write_str("sym_f1"),
            GfKind::SymG1 => f.write_str("sym_g1"),
            GfKind::AsymH1 => f.write_str("asym_h1"),
            GfKind::AsymK1 => f.write_str("asym_k1"),
            GfKind::Halfplane => f.write_str("halfplane"),
            GfKind::ThetaSym(a) => write!(f, "theta_sym:{a}"),
            GfKind::ThetaAsym(ThetaArg::Q) => f.write_str("theta_asym:q"),
            GfKind::ThetaAsym(ThetaArg::P) => f.write_str("theta_asym:p"),
            GfKind::FAya(a) => write!(f, "f_aya:{a}"),
            GfKind::HAyaRaw(a) => write!(f, "h_aya_raw:{a}"),
            GfKind::HAyaSimplified(a) => write!(f, "h_aya_simplified:{a}"),
        }
    }
}

impl From<GfKind> for String {
    fn from(k: GfKind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for GfKind {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for GfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let need = || arg.ok_or_else(|| Error::Invalid(format!("{name} needs an argument, e.g. {name}:1")));
        let rational = || -> Result<Rational> {
            let r = parse_rational(need()?)?;
            if r == Rational::from_integer(0.into()) {
                return Err(Error::Invalid("argument must be nonzero".into()));
            }
            Ok(r)
        };
        let kind = match name {
            "free" => GfKind::Free,
            "dyck" => GfKind::Dyck,
            "bargraph" => {
                let p: u32 = need()?
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad p in {s:?}")))?;
                if p == 0 {
                    return Err(Error::Invalid("p must be positive".into()));
                }
                GfKind::Bargraph(p)
            }
            "sym_f1" => GfKind::SymF1,
            "sym_g1" => GfKind::SymG1,
            "asym_h1" => GfKind::AsymH1,
            "asym_k1" => GfKind::AsymK1,
            "halfplane" => GfKind::Halfplane,
            "theta_sym" => GfKind::ThetaSym(rational()?),
            "theta_asym" => match need()? {
                "q" | "Q" => GfKind::ThetaAsym(ThetaArg::Q),
                "p" | "P" => GfKind::ThetaAsym(ThetaArg::P),
                other => return Err(Error::Invalid(format!("theta_asym takes q or p, not {other:?}"))),
            },
            "f_aya" => GfKind::FAya(rational()?),
            "h_aya_raw" => GfKind::HAyaRaw(rational()?),
            "h_aya_simplified" => GfKind::HAyaSimplified(rational()?),
            _ => {
                return Err(Error::Invalid(format!(
                    "unknown series {s:?}; expected one of {}",
                    GfKind::NAMES.join(", ")
                )))
            }
        };
        Ok(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn round_trip() {
        for k in [
            GfKind::Free,
            GfKind::Bargraph(3),
            GfKind::ThetaSym(rat(1, 2)),
            GfKind::ThetaAsym(ThetaArg::P),
            GfKind::HAyaRaw(rat(2, 3)),
        ] {
            assert_eq!(k.to_string().parse::<GfKind>().unwrap(), k);
        }
        assert!("bargraph".parse::<GfKind>().is_err());
        assert!("f_aya:0".parse::<GfKind>().is_err());
        assert!("nope".parse::<GfKind>().is_err());
    }
}
