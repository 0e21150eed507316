//! JSON report documents. See docs/report-schema.md.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tkh_core::homology::HomologyEntry;
use tkh_core::{
    AnnulusVerdict, CurveClass, DetectionReport, HomologyResult, KnotVerdict, SkeinDegree,
    TorusDiagram, ValidationReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    /// Hex SHA-256 of the canonical serialization of the input diagram(s).
    pub input_digest: String,
    pub command: CommandEcho,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Validation(ValidationDoc),
    Homology(HomologyDoc),
    Detection(DetectionDoc),
    Comparison(ComparisonDoc),
    Diagram(DiagramDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingDoc {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub valid: bool,
    pub errors: Vec<FindingDoc>,
    pub warnings: Vec<FindingDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub p: i64,
    pub q: i64,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hom_degree: Option<u32>,
    /// Rendered skein degree, e.g. `1[1,0]` or `0`.
    pub degree: String,
    pub terms: Vec<TermDoc>,
    pub betti: usize,
    /// Invariant factors > 1 as decimal strings (ℤ only).
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CRankDoc {
    pub grading: i64,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CGradedDoc {
    pub c: [i64; 2],
    pub ranks: Vec<CRankDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDoc {
    /// `Z` or `Z/2`.
    pub ring: String,
    pub crossings: usize,
    pub rows: Vec<RowDoc>,
    pub total_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_graded: Option<CGradedDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectionDoc {
    pub support_classes: Vec<[i64; 2]>,
    /// `supported_on`, `supported_at_zero_only` or `not_supported`.
    pub annulus_verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub annulus_class: Option<[i64; 2]>,
    /// `rank_is_2_embedded_knot_criterion_met`, `rank_exceeds_2` or `empty_link`.
    pub knot_verdict: String,
    pub total_rank_mod2: usize,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceDoc {
    pub degree: String,
    pub left_betti: usize,
    pub right_betti: usize,
    pub left_torsion: Vec<String>,
    pub right_torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonDoc {
    pub ring: String,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_difference: Option<DifferenceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub crossings: usize,
    pub text: String,
}

pub fn digest(diagrams: &[&TorusDiagram]) -> String {
    let mut h = Sha256::new();
    for (i, d) in diagrams.iter().enumerate() {
        if i > 0 {
            h.update(b"\0");
        }
        h.update(d.serialize().as_bytes());
    }
    hex::encode(h.finalize())
}

fn class_pair(c: CurveClass) -> [i64; 2] {
    [c.p(), c.q()]
}

fn terms(s: &SkeinDegree) -> Vec<TermDoc> {
    s.terms()
        .map(|(c, k)| TermDoc {
            p: c.p(),
            q: c.q(),
            coefficient: k,
        })
        .collect()
}

fn torsion(e: &HomologyEntry) -> Vec<String> {
    e.torsion.iter().map(|t| t.to_string()).collect()
}

impl ValidationDoc {
    pub fn new(r: &ValidationReport) -> Self {
        let doc = |f: &tkh_core::diagram::Finding| FindingDoc {
            code: f.code.to_string(),
            message: f.message.clone(),
        };
        ValidationDoc {
            valid: r.is_valid(),
            errors: r.errors.iter().map(doc).collect(),
            warnings: r.warnings.iter().map(doc).collect(),
        }
    }
}

/// Rows per skein degree, or per (hom, skein) with `by_hom`.
pub fn homology_rows(r: &HomologyResult, by_hom: bool) -> Vec<RowDoc> {
    if by_hom {
        return r
            .table
            .iter()
            .map(|((h, s), e)| RowDoc {
                hom_degree: Some(*h),
                degree: s.to_string(),
                terms: terms(s),
                betti: e.betti,
                torsion: torsion(e),
            })
            .collect();
    }
    let mut merged: BTreeMap<&SkeinDegree, HomologyEntry> = BTreeMap::new();
    for ((_, s), e) in &r.table {
        let m = merged.entry(s).or_default();
        m.betti += e.betti;
        m.torsion.extend(e.torsion.iter().cloned());
        m.torsion.sort();
    }
    merged
        .into_iter()
        .map(|(s, e)| RowDoc {
            hom_degree: None,
            degree: s.to_string(),
            terms: terms(s),
            betti: e.betti,
            torsion: torsion(&e),
        })
        .collect()
}

impl DetectionDoc {
    pub fn new(d: &DetectionReport) -> Self {
        let (annulus_verdict, annulus_class) = match &d.annulus {
            AnnulusVerdict::SupportedOn(c) => ("supported_on", Some(class_pair(*c))),
            AnnulusVerdict::SupportedAtZeroOnly => ("supported_at_zero_only", None),
            AnnulusVerdict::NotSupported => ("not_supported", None),
        };
        let knot_verdict = match d.knot {
            KnotVerdict::RankTwoCriterionMet => "rank_is_2_embedded_knot_criterion_met",
            KnotVerdict::RankExceedsTwo => "rank_exceeds_2",
            KnotVerdict::EmptyLink => "empty_link",
        };
        DetectionDoc {
            support_classes: d.support_classes.iter().map(|c| class_pair(*c)).collect(),
            annulus_verdict: annulus_verdict.into(),
            annulus_class,
            knot_verdict: knot_verdict.into(),
            total_rank_mod2: d.total_rank,
            summary: d.to_string(),
        }
    }
}

/// Compares skein-graded rank tables, homological degree ignored.
pub fn compare(a: &HomologyResult, b: &HomologyResult) -> ComparisonDoc {
    let left = homology_rows(a, false);
    let right = homology_rows(b, false);
    let mut degrees: Vec<(&Vec<TermDoc>, &str)> = left
        .iter()
        .chain(&right)
        .map(|r| (&r.terms, r.degree.as_str()))
        .collect();
    // Order by the terms so the first difference follows the table order.
    degrees.sort_by(|x, y| {
        let key = |t: &Vec<TermDoc>| {
            t.iter()
                .map(|t| (t.p, t.q, t.coefficient))
                .collect::<Vec<_>>()
        };
        key(x.0).cmp(&key(y.0))
    });
    degrees.dedup_by(|x, y| x.1 == y.1);
    let find = |rows: &[RowDoc], d: &str| {
        rows.iter()
            .find(|r| r.degree == d)
            .map_or((0, Vec::new()), |r| (r.betti, r.torsion.clone()))
    };
    let first_difference = degrees.into_iter().find_map(|(_, d)| {
        let (lb, lt) = find(&left, d);
        let (rb, rt) = find(&right, d);
        (lb != rb || lt != rt).then(|| DifferenceDoc {
            degree: d.to_string(),
            left_betti: lb,
            right_betti: rb,
            left_torsion: lt,
            right_torsion: rt,
        })
    });
    ComparisonDoc {
        ring: a.ring.to_string(),
        equal: first_difference.is_none(),
        first_difference,
    }
}

fn torsion_text(t: &[String]) -> String {
    t.iter()
        .map(|f| format!("Z/{f}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Plain-text rendering with the same fields as the JSON payload.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Validation(v) => {
            out += if v.valid { "valid\n" } else { "invalid\n" };
            for f in &v.errors {
                out += &format!("error [{}]: {}\n", f.code, f.message);
            }
            for f in &v.warnings {
                out += &format!("warning [{}]: {}\n", f.code, f.message);
            }
        }
        Payload::Homology(h) => {
            out += &format!("ring: {}\ncrossings: {}\n", h.ring, h.crossings);
            let by_hom = h.rows.iter().any(|r| r.hom_degree.is_some());
            let with_torsion = h.ring == "Z";
            let mut header = Vec::new();
            if by_hom {
                header.push("hom".to_string());
            }
            header.extend(["degree".to_string(), "betti".to_string()]);
            if with_torsion {
                header.push("torsion".to_string());
            }
            out += &header.join("\t");
            out += "\n";
            for r in &h.rows {
                let mut cells = Vec::new();
                if let Some(k) = r.hom_degree {
                    cells.push(k.to_string());
                }
                cells.push(r.degree.clone());
                cells.push(r.betti.to_string());
                if with_torsion {
                    cells.push(torsion_text(&r.torsion));
                }
                out += cells.join("\t").trim_end();
                out += "\n";
            }
            out += &format!("total rank: {}\n", h.total_rank);
            if let Some(c) = &h.c_graded {
                out += &format!("c-graded ranks for c = ({},{}):\n", c.c[0], c.c[1]);
                for r in &c.ranks {
                    out += &format!("{}\t{}\n", r.grading, r.rank);
                }
            }
        }
        Payload::Detection(d) => {
            out += &d.summary;
            out += "\n";
        }
        Payload::Comparison(c) => match &c.first_difference {
            None => out += &format!("equal over {}\n", c.ring),
            Some(f) => {
                out += &format!(
                    "differ over {} at degree {}: betti {} vs {}",
                    c.ring, f.degree, f.left_betti, f.right_betti
                );
                if f.left_torsion != f.right_torsion {
                    out += &format!(
                        ", torsion [{}] vs [{}]",
                        torsion_text(&f.left_torsion),
                        torsion_text(&f.right_torsion)
                    );
                }
                out += "\n";
            }
        },
        Payload::Diagram(d) => out += &d.text,
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use tkh_core::Ring;

    fn result(betti: usize, torsion: &[u32]) -> HomologyResult {
        let entry = HomologyEntry {
            betti,
            torsion: torsion.iter().map(|t| BigInt::from(*t)).collect(),
        };
        HomologyResult {
            ring: Ring::Z,
            table: BTreeMap::from([((1, SkeinDegree::zero()), entry)]),
            refined: BTreeMap::new(),
            link_is_empty: false,
        }
    }

    #[test]
    fn compare_sees_torsion() {
        let c = compare(&result(2, &[2]), &result(2, &[]));
        assert!(!c.equal);
        let f = c.first_difference.unwrap();
        assert_eq!((f.left_betti, f.right_betti), (2, 2));
        assert_eq!(f.left_torsion, vec!["2".to_string()]);
        assert!(compare(&result(2, &[2]), &result(2, &[2])).equal);
    }

    #[test]
    fn rows_merge_homological_degrees() {
        let mut r = result(1, &[3]);
        r.table.insert(
            (2, SkeinDegree::zero()),
            HomologyEntry {
                betti: 2,
                torsion: vec![BigInt::from(2)],
            },
        );
        let rows = homology_rows(&r, false);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].betti, 3);
        assert_eq!(rows[0].torsion, vec!["2", "3"]);
        assert_eq!(homology_rows(&r, true).len(), 2);
    }
}
