//! Known disagreements between printed formulas or constants and what exact
//! enumeration gives. Each entry names the formula, what was observed and
//! which side is trusted; `explain` recomputes the evidence.

use std::fmt::Write as _;

use serde::Serialize;

use crate::asymptotics::{accuracy_table, b0_consistency, p2_second_piece_sum, reference, root_audit};
use crate::closedform::{compare_with_counts, interpretation_comparators, solution_identities, GfKind};
use crate::enumerate::WedgeModel;
use crate::error::{Error, Result};
use crate::exact::{rat, PrecFloat};

/// One documented discrepancy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub id: &'static str,
    pub title: &'static str,
    /// Which printed formula or constant is affected.
    pub location: &'static str,
    pub observed: &'static str,
    /// The side taken as correct.
    pub trusted: &'static str,
}

pub const ENTRIES: [LedgerEntry; 7] = [
    LedgerEntry {
        id: "halfplane",
        title: "halfplane Lemma formula: valuation -2 as printed",
        location: "closed form of the half-plane generating function in the upper-bound lemma",
        observed: "the numerator -1+z+3z^2+z^3-sqrt((1-z^4)(1-2z-z^2)) has constant term -2, so the quotient starts at z^-2 instead of 1, 2, 4, 9, 20, ...",
        trusted: "DP counts of half-plane walks; the asymptotic constant sqrt((7+5 sqrt2)/(2 pi)) is checked separately and holds",
    },
    LedgerEntry {
        id: "interpretations",
        title: "boundary-walk interpretations of Q_asym(1) and P(1) do not match at low order",
        location: "identities Q(1) = x y^2 (B_-(x,y) - 1) and P(1) = x y^2 (B_/(x,y) - 1)",
        observed: "expanding both sides with x = y = t gives different coefficients from the first terms on",
        trusted: "neither side is asserted; both expansions are reported",
    },
    LedgerEntry {
        id: "p2k_sum",
        title: "summed second pieces of p_2,k do not give the h_1 constant",
        location: "per-summand asymptotic form of p_2,k and the mu^n/sqrt(n) constant 0.090584741026764287",
        observed: "sum_k sqrt(2/pi) times the printed bracket is 0.0248456..., not 0.0905847...",
        trusted: "the exact coefficients of h_1(1,1); the empirical constant is reported by the B0 fit",
    },
    LedgerEntry {
        id: "h_aya_product_formula",
        title: "product formula for H(a,ya) does not reproduce the simplified sum",
        location: "raw product form of H(a,ya) obtained by inspecting the iterated terms",
        observed: "transcribed term by term it has a -1/(a t) leading term and differs from the simplified form from t^-1 on",
        trusted: "the simplified sum, which matches enumeration of h_1(a,ta)",
    },
    LedgerEntry {
        id: "accuracy_table",
        title: "three-constant formula misses its stated accuracy at n = 10, 20, 30, 40",
        location: "accuracy claim 7%, 1%, 0.2%, 0.06% for v_10, v_20, v_30, v_40",
        observed: "the printed A0, A1, A2 give 7.74%, 1.11%, 0.237%, 0.0614%; with A1 - (-1)^n A2 the errors would be 6.0%, 0.78%, 0.15%, 0.035%",
        trusted: "exact v_n and the constants themselves, which are confirmed analytically",
    },
    LedgerEntry {
        id: "b0_constants",
        title: "0.0905847... times (1+sqrt2) is not 0.2186939...",
        location: "mu^n/sqrt(n) constants of h_1(1,1) and k_1(1,1)",
        observed: "0.090584741026764287 (1+sqrt2) = 0.2186909103...; the printed k_1 constant agrees to 5 digits only. Extrapolating exact w_n to n = 400 gives 0.21869391685..., matching the k_1 constant to 9 digits, so the h_1 constant should be 0.0905859...",
        trusted: "exact w_n, which support the printed k_1 constant 0.218693916694...",
    },
    LedgerEntry {
        id: "other_branch_root",
        title: "the other-branch root of the P-family at k = 0 is 1 - sqrt2",
        location: "note on 1 + (1-3t^2) t^(k-1) + t^(2k+2) = 0 at k = 0",
        observed: "the polynomial is t^-1 (t-1)(t^2-2t-1); its root in |t| < 1/2 is 1 - sqrt2 = -0.41421..., and sqrt2 - 1 is not a root",
        trusted: "the computed roots; the audit flags the root by its modulus",
    },
];

pub fn find(id: &str) -> Result<&'static LedgerEntry> {
    ENTRIES.iter().find(|e| e.id == id).ok_or_else(|| {
        let ids: Vec<&str> = ENTRIES.iter().map(|e| e.id).collect();
        Error::Invalid(format!(
            "unknown ledger entry {id:?}; expected one of {}",
            ids.join(", ")
        ))
    })
}

/// One line per entry, or `no entries`.
pub fn render_list(entries: &[LedgerEntry]) -> String {
    if entries.is_empty() {
        return "no entries\n".into();
    }
    let mut out = String::new();
    for e in entries {
        let _ = writeln!(out, "{:<22} {}", e.id, e.title);
    }
    out
}

pub fn list() -> String {
    render_list(&ENTRIES)
}

fn header(e: &LedgerEntry) -> String {
    format!(
        "{}\n  formula:  {}\n  observed: {}\n  trusted:  {}\n",
        e.title, e.location, e.observed, e.trusted
    )
}

/// The entry with freshly computed evidence.
pub fn explain(id: &str) -> Result<String> {
    let e = find(id)?;
    let mut out = header(e);
    match e.id {
        "halfplane" => {
            let r = compare_with_counts(&GfKind::Halfplane, WedgeModel::halfplane(), 5)?;
            let _ = writeln!(out, "  n  printed  DP");
            for d in &r.diffs {
                let _ = writeln!(out, "  {:<2} {:<8} {}", d.n, d.closed, d.reference);
            }
        }
        "interpretations" => {
            for r in interpretation_comparators(8)? {
                let at = r.first_mismatch.map_or("none".to_string(), |n| format!("t^{n}"));
                let _ = writeln!(out, "  {} vs {}: first mismatch at {at}", r.name, r.reference);
                for d in r.diffs.iter().take(6) {
                    let _ = writeln!(out, "    t^{}: {} vs {}", d.n, d.closed, d.reference);
                }
            }
        }
        "p2k_sum" => {
            let s = p2_second_piece_sum(30);
            let _ = writeln!(out, "  summed second pieces: {}", s.with_digits(15));
            let _ = writeln!(out, "  printed h_1 constant: {}", reference::H_CONST);
        }
        "h_aya_product_formula" => {
            for a in [rat(1, 1), rat(1, 2)] {
                let r = &solution_identities(&a, 8)?[2];
                let at = r.first_mismatch.map_or("none".to_string(), |n| format!("t^{n}"));
                let _ = writeln!(out, "  a = {a}: first mismatch at {at}");
                for d in r.diffs.iter().take(5) {
                    let _ = writeln!(out, "    t^{}: product {} vs sum {}", d.n, d.closed, d.reference);
                }
            }
        }
        "accuracy_table" => {
            for row in accuracy_table()?.rows {
                let _ = writeln!(
                    out,
                    "  n = {:<2} error {:.4}% (bound {}%), opposite parity {:.4}%",
                    row.n,
                    100.0 * row.rel_error,
                    100.0 * row.bound,
                    100.0 * row.rel_error_opposite_parity
                );
            }
        }
        "b0_constants" => {
            let r = b0_consistency(20);
            let _ = writeln!(out, "  product {} vs printed {}", r.value, reference::B0);
            let _ = writeln!(out, "  agreeing digits {:.2}", r.agreeing_digits.unwrap_or(0.0));
        }
        "other_branch_root" => {
            let audit = root_audit(0, 30)?;
            for r in &audit.in_disk {
                let _ = writeln!(
                    out,
                    "  {} k = {}: root {} (modulus {})",
                    r.family,
                    r.k,
                    r.root.re.with_digits(20),
                    r.root.modulus.with_digits(20)
                );
            }
            let s = PrecFloat::from_i64(2, 30).sqrt();
            let _ = writeln!(
                out,
                "  sqrt2 - 1 = {}",
                (&s - &PrecFloat::from_i64(1, 30)).with_digits(20)
            );
        }
        _ => unreachable!("every entry has an explanation"),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing() {
        assert!(list().contains("halfplane Lemma formula: valuation -2 as printed"));
        assert_eq!(render_list(&[]), "no entries\n");
        assert!(find("nope").is_err());
    }

    #[test]
    fn halfplane_explanation_shows_low_coefficients() {
        let text = explain("halfplane").unwrap();
        assert!(text.contains("-2"), "{text}");
    }
}
