//! The user-facing pipeline: combines the invariants into genus reports,
//! runs pairwise concordance queries, and serializes deterministic reports.

use num_bigint::BigInt;
use serde::Serialize;

use crate::covers::{character_search, cover_homology, cover_order, quartic_galois, QuarticGaloisClass};
use crate::error::{CkError, Result};
use crate::isometric::{alg_concordant, component_trivial, decompose, TriState, Verdict};
use crate::poly::{factor_rational, min_concordant_degree, norm_np, IntPoly};
use crate::seifert::{
    alexander, invertible_representative, isometric_structure, signature, signature_profile,
    KnotRecord,
};

fn poly_coeffs(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionReason {
    SignatureJump,
    WittBoundary,
    OddExponent,
    GaloisCyclotomic,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionEntry {
    pub delta: Vec<String>,
    pub reason: ObstructionReason,
    pub witness: String,
    #[serde(skip)]
    pub delta_poly: IntPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub coeffs: Vec<String>,
    pub exponent: u32,
    pub symmetric: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenusReport {
    pub name: String,
    pub alexander: Vec<String>,
    pub factorization: Vec<FactorEntry>,
    pub signature: i64,
    pub max_abs_lt_signature: i64,
    pub g3_lower: u32,
    pub g3: Option<u32>,
    pub g4_lower: u32,
    pub g4_upper: Option<u32>,
    pub gc_lower: u32,
    pub gc_upper: Option<u32>,
    pub obstructed_factors: Vec<ObstructionEntry>,
    pub notes: Vec<String>,
}

impl GenusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("knot {}\n", self.name));
        s.push_str(&format!("  alexander: {:?}\n", self.alexander_poly()));
        for f in &self.factorization {
            s.push_str(&format!(
                "    factor {:?} exp {}{}\n",
                IntPoly::new(f.coeffs.iter().map(|c| c.parse().unwrap()).collect()),
                f.exponent,
                if f.symmetric { " (symmetric)" } else { "" }
            ));
        }
        s.push_str(&format!(
            "  signature {}  max |LT signature| {}\n",
            self.signature, self.max_abs_lt_signature
        ));
        s.push_str(&format!(
            "  g3 >= {}{}  g4 >= {}{}\n",
            self.g3_lower,
            self.g3.map_or(String::new(), |g| format!(" (table {g})")),
            self.g4_lower,
            self.g4_upper
                .map_or(String::new(), |g| format!(" (table upper {g})")),
        ));
        s.push_str(&format!(
            "  concordance genus >= {}{}\n",
            self.gc_lower,
            self.gc_upper
                .map_or(String::new(), |g| format!(" (<= {g})"))
        ));
        for o in &self.obstructed_factors {
            s.push_str(&format!(
                "  obstructed {:?}: {:?} ({})\n",
                o.delta_poly, o.reason, o.witness
            ));
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        s
    }

    fn alexander_poly(&self) -> IntPoly {
        IntPoly::new(self.alexander.iter().map(|c| c.parse().unwrap()).collect())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Run the order-two character chain (norm polynomial + Galois group)
    /// for knots whose Alexander polynomial carries an odd-exponent
    /// symmetric quartic factor.
    pub galois: bool,
}

/// Full invariant pipeline for one knot record.
pub fn analyze(k: &KnotRecord, options: AnalyzeOptions) -> Result<GenusReport> {
    let delta = alexander(&k.seifert);
    let fac = factor_rational(&delta)?;
    let profile = signature_profile(&k.seifert)?;
    let sigma = signature(&k.seifert);
    let mut obstructed: Vec<ObstructionEntry> = Vec::new();
    let mut notes = Vec::new();
    let push_obstruction = |list: &mut Vec<ObstructionEntry>, delta: &IntPoly, reason, witness: String| {
        if list.iter().any(|o| &o.delta_poly == delta && o.reason == reason) {
            return;
        }
        list.push(ObstructionEntry {
            delta: poly_coeffs(delta),
            reason,
            witness,
            delta_poly: delta.clone(),
        });
    };
    for (f, j) in &profile.jump_roots {
        if *j != 0 {
            push_obstruction(
                &mut obstructed,
                f,
                ObstructionReason::SignatureJump,
                format!("signature jumps by {j} at a unit root"),
            );
        }
    }
    // Witt analysis of the delta-primary components
    let rep = invertible_representative(&k.seifert);
    if rep.size() > 0 {
        let s = isometric_structure(&rep)?;
        let dec = decompose(&s)?;
        for c in &dec.components {
            let v = component_trivial(c);
            match v.value {
                Verdict::Nontrivial => {
                    let reason = if v.witness.contains("odd exponent") {
                        ObstructionReason::OddExponent
                    } else if v.witness.contains("real place") {
                        ObstructionReason::SignatureJump
                    } else {
                        ObstructionReason::WittBoundary
                    };
                    push_obstruction(&mut obstructed, &c.delta, reason, v.witness);
                }
                Verdict::Undetermined => {
                    notes.push(format!(
                        "bound not improved; undetermined at {:?}: {}",
                        c.delta, v.witness
                    ));
                }
                Verdict::Trivial => {}
            }
        }
    }
    let obstructed_polys: Vec<IntPoly> =
        obstructed.iter().map(|o| o.delta_poly.clone()).collect();
    let min_deg = min_concordant_degree(&delta, &obstructed_polys)?;
    let mut gc_lower = (min_deg as u32).div_ceil(2);
    // the order-two character chain
    if options.galois {
        match galois_escalation(k, &fac) {
            GaloisOutcome::Fires { factor, witness } => {
                gc_lower = gc_lower.max((delta.degree() as u32).div_ceil(2));
                push_obstruction(
                    &mut obstructed,
                    &factor,
                    ObstructionReason::GaloisCyclotomic,
                    witness,
                );
            }
            GaloisOutcome::NotApplicable(reason) => notes.push(reason),
        }
    }
    let g3_lower = (delta.degree() as u32).div_ceil(2);
    let g4_lower = (profile.max_abs() as u32).div_ceil(2);
    let report = GenusReport {
        name: k.name.clone(),
        alexander: poly_coeffs(&delta),
        factorization: fac
            .factors
            .iter()
            .map(|(f, e, s)| FactorEntry {
                coeffs: poly_coeffs(f),
                exponent: *e,
                symmetric: *s,
            })
            .collect(),
        signature: sigma,
        max_abs_lt_signature: profile.max_abs(),
        g3_lower,
        g3: k.genus3,
        g4_lower,
        g4_upper: k.g4_upper,
        gc_lower,
        gc_upper: k.genus3,
        obstructed_factors: obstructed,
        notes,
    };
    validate_report(&report)?;
    Ok(report)
}

enum GaloisOutcome {
    Fires { factor: IntPoly, witness: String },
    NotApplicable(String),
}

/// The escalation encodes the verified pattern only: an odd-exponent
/// symmetric quartic factor whose cube-norm is an irreducible quartic with
/// nonabelian Galois group, together with 3-cover 2-torsion of shape
/// Z/8 + Z/8 and the exhaustive order-16 character search. Anything else is
/// refused with a note.
fn galois_escalation(
    k: &KnotRecord,
    fac: &crate::poly::SymmetricFactorization,
) -> GaloisOutcome {
    let quartics: Vec<&(IntPoly, u32, bool)> = fac
        .factors
        .iter()
        .filter(|(f, e, s)| *s && f.degree() == 4 && e % 2 == 1)
        .collect();
    if quartics.len() != 1 {
        return GaloisOutcome::NotApplicable(format!(
            "order-two character chain needs exactly one odd-exponent symmetric quartic factor, found {}",
            quartics.len()
        ));
    }
    if fac
        .factors
        .iter()
        .any(|(f, e, s)| *s && f.degree() != 4 && e % 2 == 1)
    {
        return GaloisOutcome::NotApplicable(
            "order-two character chain not validated: another symmetric factor has odd exponent"
                .into(),
        );
    }
    let q = &quartics[0].0;
    let h = match cover_homology(&k.seifert, 3) {
        Ok(h) => h,
        Err(e) => return GaloisOutcome::NotApplicable(format!("3-cover homology failed: {e}")),
    };
    let shape = h.two_torsion_shape();
    if shape != vec![BigInt::from(8), BigInt::from(8)] {
        return GaloisOutcome::NotApplicable(format!(
            "order-two character chain not validated for 2-torsion shape {shape:?}"
        ));
    }
    let search = character_search();
    if !search.all_admit_character || search.order16_count != search.order16_independent_count {
        return GaloisOutcome::NotApplicable(
            "order-16 character search failed to certify".into(),
        );
    }
    let n3 = match norm_np(q, 3) {
        Ok(n) => n,
        Err(e) => return GaloisOutcome::NotApplicable(format!("norm polynomial failed: {e}")),
    };
    match quartic_galois(&n3) {
        Ok(class) if !class.is_abelian() => GaloisOutcome::Fires {
            factor: q.clone(),
            witness: format!(
                "cube-norm {n3:?} has Galois group {class:?} (order {}), which embeds in no 2-power cyclotomic field",
                class.order()
            ),
        },
        Ok(class) => GaloisOutcome::NotApplicable(format!(
            "cube-norm Galois group {class:?} is abelian: no obstruction from this test"
        )),
        Err(e) => GaloisOutcome::NotApplicable(format!("Galois classification failed: {e}")),
    }
}

fn validate_report(r: &GenusReport) -> Result<()> {
    let checks = [
        (r.gc_lower <= r.g3_lower, "gc_lower <= g3_lower"),
        (r.g4_lower <= r.gc_lower, "g4_lower <= gc_lower"),
        (
            r.g3.map_or(true, |g3| r.g3_lower <= g3),
            "g3_lower <= table g3",
        ),
        (
            r.g4_upper.map_or(true, |g4| r.g4_lower <= g4),
            "g4_lower <= table g4 upper bound",
        ),
        (
            r.gc_upper.map_or(true, |gu| r.gc_lower <= gu),
            "gc_lower <= gc_upper",
        ),
    ];
    for (ok, what) in checks {
        if !ok {
            return Err(CkError::Internal(format!(
                "report for {} violates {what}",
                r.name
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub a: String,
    pub b: String,
    pub verdict: String,
    pub witness: String,
}

impl CompareReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let head = match self.verdict.as_str() {
            "trivial" => "algebraically concordant",
            "nontrivial" => "not algebraically concordant",
            _ => "undetermined",
        };
        format!(
            "{} vs {}: {head}\n  {}\n",
            self.a, self.b, self.witness
        )
    }

    pub fn is_concordant(&self) -> bool {
        self.verdict == "trivial"
    }
}

/// Pairwise algebraic-concordance verdict with its witness ledger.
pub fn compare(k1: &KnotRecord, k2: &KnotRecord) -> CompareReport {
    let v: TriState = alg_concordant(&k1.seifert, &k2.seifert);
    CompareReport {
        a: k1.name.clone(),
        b: k2.name.clone(),
        verdict: match v.value {
            Verdict::Trivial => "trivial",
            Verdict::Nontrivial => "nontrivial",
            Verdict::Undetermined => "undetermined",
        }
        .into(),
        witness: v.witness,
    }
}

/// Resolves a knot-name expression over the loaded records: `A#B` is the
/// connected sum (block sum of Seifert matrices) and a leading `-` is
/// mirror-reverse (negated transpose).
pub fn resolve_name(records: &[KnotRecord], expr: &str) -> Result<KnotRecord> {
    let expr = expr.trim();
    if let Some(parts) = split_sum(expr) {
        let a = resolve_name(records, parts.0)?;
        let b = resolve_name(records, parts.1)?;
        return Ok(KnotRecord {
            name: format!("{}#{}", a.name, b.name),
            seifert: a.seifert.block_sum(&b.seifert),
            genus3: a.genus3.zip(b.genus3).map(|(x, y)| x + y),
            g4_upper: a.g4_upper.zip(b.g4_upper).map(|(x, y)| x + y),
            notes: String::new(),
        });
    }
    if let Some(rest) = expr.strip_prefix('-') {
        let k = resolve_name(records, rest)?;
        return Ok(KnotRecord {
            name: format!("-{}", k.name),
            seifert: k.seifert.mirror_reverse(),
            genus3: k.genus3,
            g4_upper: k.g4_upper,
            notes: String::new(),
        });
    }
    records
        .iter()
        .find(|r| r.name == expr)
        .cloned()
        .ok_or_else(|| {
            let mut names: Vec<&str> = records.iter().map(|r| r.name.as_str()).collect();
            names.sort();
            CkError::UnknownKnot(expr.into(), names.join(", "))
        })
}

fn split_sum(expr: &str) -> Option<(&str, &str)> {
    expr.find('#').map(|i| (&expr[..i], &expr[i + 1..]))
}

/// Report for the covers subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct CoversReport {
    pub name: String,
    pub p: u32,
    pub order: String,
    pub invariant_factors: Vec<String>,
    pub plans_doubled: bool,
}

pub fn covers_report(k: &KnotRecord, p: u32) -> Result<CoversReport> {
    let d = alexander(&k.seifert);
    let order = cover_order(&d, p)?;
    let h = cover_homology(&k.seifert, p)?;
    if h.order() != order {
        return Err(CkError::Internal(format!(
            "cover order mismatch: resultant {order} vs presentation {}",
            h.order()
        )));
    }
    Ok(CoversReport {
        name: k.name.clone(),
        p,
        order: order.to_string(),
        invariant_factors: h.invariant_factors.iter().map(|d| d.to_string()).collect(),
        plans_doubled: h.is_doubled(),
    })
}

/// Report for the galois subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    pub name: String,
    pub quartic_factor: Option<Vec<String>>,
    pub norm_cubed: Option<Vec<String>>,
    pub galois_class: Option<String>,
    pub obstructed: Option<bool>,
    pub note: String,
}

pub fn galois_report(k: &KnotRecord) -> Result<GaloisReport> {
    let d = alexander(&k.seifert);
    let fac = factor_rational(&d)?;
    let q = fac
        .factors
        .iter()
        .find(|(f, e, s)| *s && f.degree() == 4 && e % 2 == 1)
        .map(|(f, _, _)| f.clone());
    let Some(q) = q else {
        return Ok(GaloisReport {
            name: k.name.clone(),
            quartic_factor: None,
            norm_cubed: None,
            galois_class: None,
            obstructed: None,
            note: "no odd-exponent symmetric quartic factor".into(),
        });
    };
    let n3 = norm_np(&q, 3)?;
    let class: QuarticGaloisClass = quartic_galois(&n3)?;
    Ok(GaloisReport {
        name: k.name.clone(),
        quartic_factor: Some(poly_coeffs(&q)),
        norm_cubed: Some(poly_coeffs(&n3)),
        galois_class: Some(format!("{class:?}")),
        obstructed: Some(!class.is_abelian()),
        note: if class.is_abelian() {
            "no obstruction from this test".into()
        } else {
            "splitting field embeds in no 2-power cyclotomic field".into()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::ingest;

    fn fixtures() -> Vec<KnotRecord> {
        let text = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../fixtures/knots.json"
        ))
        .expect("fixtures/knots.json present");
        ingest(&text).unwrap()
    }

    #[test]
    fn resolve_expressions() {
        let recs = fixtures();
        let k = resolve_name(&recs, "6_2#6_2").unwrap();
        assert_eq!(k.seifert.size(), 8);
        let m = resolve_name(&recs, "-9_42").unwrap();
        assert_eq!(m.seifert.size(), 6);
        assert!(resolve_name(&recs, "3_1").is_err());
    }

    #[test]
    fn analyze_6_2() {
        let recs = fixtures();
        let k = resolve_name(&recs, "6_2").unwrap();
        let r = analyze(&k, AnalyzeOptions::default()).unwrap();
        assert_eq!(r.gc_lower, 2);
        assert_eq!(r.g3_lower, 2);
        assert_eq!(r.signature.abs(), 2);
        assert_eq!(r.g4_lower, 1);
    }

    #[test]
    fn analyze_sum_6_2() {
        let recs = fixtures();
        let k = resolve_name(&recs, "6_2#6_2").unwrap();
        let r = analyze(&k, AnalyzeOptions::default()).unwrap();
        assert_eq!(r.gc_lower, 4);
        assert_eq!(r.signature.abs(), 4);
        assert_eq!(r.g4_lower, 2);
    }

    #[test]
    fn deterministic_json() {
        let recs = fixtures();
        let k = resolve_name(&recs, "8_18").unwrap();
        let a = analyze(&k, AnalyzeOptions::default()).unwrap().to_json();
        let b = analyze(&k, AnalyzeOptions::default()).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn compare_self_trivial() {
        let recs = fixtures();
        let k = resolve_name(&recs, "10_82_quartic_rep").unwrap();
        let r = compare(&k, &k);
        assert!(r.is_concordant(), "{}", r.witness);
    }

    #[test]
    fn unknot_vs_8_18() {
        let recs = fixtures();
        let a = resolve_name(&recs, "8_18").unwrap();
        let b = resolve_name(&recs, "unknot").unwrap();
        let r = compare(&a, &b);
        assert_eq!(r.verdict, "nontrivial");
    }
}

