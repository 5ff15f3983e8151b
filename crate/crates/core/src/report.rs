//! JSON classification reports and DOT renderings of the normal subgroup lattice.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::ClassificationReport;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::semitop::min_steps;
use crate::subgroup::{all_normal_subgroups, Subgroup};
use crate::topology::make_topology;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Flags {
    pub perfect: bool,
    pub taimanov: bool,
    pub totally_taimanov: bool,
    pub arnautov: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NormalSubgroupJson {
    pub index: usize,
    pub order: usize,
    pub a_complete: bool,
    #[serde(rename = "commutator_with_G_order")]
    pub commutator_with_g_order: usize,
    /// Smallest strictly larger normal `N'` with `[G, N'] ⊆ N`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

/// Serialized form of a [`ClassificationReport`]; field order is the key order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportJson {
    pub spec: Option<String>,
    pub order: usize,
    pub flags: Flags,
    pub center_order: usize,
    pub normal_subgroups: Vec<NormalSubgroupJson>,
    pub tool_version: String,
    pub seed: u64,
}

impl ReportJson {
    pub fn new(report: &ClassificationReport, seed: u64) -> Self {
        ReportJson {
            spec: report.spec.as_ref().map(ToString::to_string),
            order: report.order,
            flags: Flags {
                perfect: report.is_perfect,
                taimanov: report.is_taimanov,
                totally_taimanov: report.is_totally_taimanov,
                arnautov: report.is_arnautov,
            },
            center_order: report.center_order,
            normal_subgroups: report
                .normal_subgroups
                .iter()
                .map(|e| NormalSubgroupJson {
                    index: e.index,
                    order: e.subgroup.order(),
                    a_complete: e.a_complete,
                    commutator_with_g_order: e.commutator_with_g_order,
                    witness: e.a_complete_witness,
                })
                .collect(),
            tool_version: TOOL_VERSION.to_string(),
            seed,
        }
    }
}

pub fn emit_report_json(report: &ClassificationReport, seed: u64) -> String {
    serde_json::to_string_pretty(&ReportJson::new(report, seed)).expect("report serializes")
}

/// Pretty JSON array of reports in the given order.
pub fn emit_reports_json(reports: &[ClassificationReport], seed: u64) -> String {
    let rows: Vec<ReportJson> = reports.iter().map(|r| ReportJson::new(r, seed)).collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}

/// Edge of the lattice diagram between indices into the normal subgroup list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeEdge {
    /// `from` is a maximal proper subgroup of `to`.
    Cover { from: usize, to: usize },
    /// `ζ_from → ζ_to` is `steps`-step semitopological and no fewer.
    Semi {
        from: usize,
        to: usize,
        steps: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub normals: Vec<Subgroup>,
    pub edges: Vec<LatticeEdge>,
}

pub fn lattice(group: &FiniteGroup) -> Result<Lattice> {
    let normals = all_normal_subgroups(group)?;
    let below = |a: usize, b: usize| a != b && normals[a].is_subset_of(&normals[b]);
    let mut edges = Vec::new();
    for a in 0..normals.len() {
        for b in 0..normals.len() {
            if !below(a, b) {
                continue;
            }
            if !(0..normals.len()).any(|c| below(a, c) && below(c, b)) {
                edges.push(LatticeEdge::Cover { from: a, to: b });
            }
        }
    }
    for a in 0..normals.len() {
        for b in 0..normals.len() {
            if !below(a, b) {
                continue;
            }
            let fine = make_topology(group, &normals[a])?;
            let coarse = make_topology(group, &normals[b])?;
            if let Some(steps) = min_steps(&fine, &coarse)?.steps {
                edges.push(LatticeEdge::Semi {
                    from: a,
                    to: b,
                    steps,
                });
            }
        }
    }
    Ok(Lattice { normals, edges })
}

pub fn emit_lattice_dot(group: &FiniteGroup) -> Result<String> {
    Ok(render_dot(group, &lattice(group)?))
}

pub fn render_dot(group: &FiniteGroup, lattice: &Lattice) -> String {
    let title = group
        .spec()
        .map(ToString::to_string)
        .unwrap_or_else(|| "group".into());
    let mut out = String::new();
    writeln!(out, "digraph normal_subgroups {{").unwrap();
    writeln!(out, "  label = {};", quote(&title)).unwrap();
    writeln!(out, "  rankdir = BT;").unwrap();
    writeln!(out, "  node [shape = box];").unwrap();
    for (k, n) in lattice.normals.iter().enumerate() {
        writeln!(
            out,
            "  n{k} [label = {}];",
            quote(&format!("N#{k} (order {})", n.order()))
        )
        .unwrap();
    }
    for edge in &lattice.edges {
        match *edge {
            LatticeEdge::Cover { from, to } => writeln!(out, "  n{from} -> n{to};").unwrap(),
            LatticeEdge::Semi { from, to, steps } => writeln!(
                out,
                "  n{from} -> n{to} [style = dashed, label = \"semi:{steps}\", constraint = false];"
            )
            .unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::group::build_group;
    use crate::parser::parse_group_spec;

    fn build(text: &str) -> FiniteGroup {
        build_group(&parse_group_spec(text).unwrap()).unwrap()
    }

    fn semi_edges(l: &Lattice) -> Vec<(usize, usize, usize)> {
        l.edges
            .iter()
            .filter_map(|e| match *e {
                LatticeEdge::Semi { from, to, steps } => Some((from, to, steps)),
                LatticeEdge::Cover { .. } => None,
            })
            .collect()
    }

    #[test]
    fn a5_json() {
        let r = classify(&build("A5")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&emit_report_json(&r, 0)).unwrap();
        assert_eq!(v["spec"], "A5");
        assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 2);
        for flag in ["perfect", "taimanov", "totally_taimanov", "arnautov"] {
            assert_eq!(v["flags"][flag], true);
        }
        assert_eq!(v["seed"], 0);
    }

    #[test]
    fn c6_json_key_order() {
        let r = classify(&build("C6")).unwrap();
        let text = emit_report_json(&r, 3);
        let keys = [
            "\"spec\"",
            "\"order\"",
            "\"flags\"",
            "\"center_order\"",
            "\"normal_subgroups\"",
            "\"tool_version\"",
            "\"seed\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let rows = v["normal_subgroups"].as_array().unwrap();
        assert_eq!(rows.len(), 4);
        let complete: Vec<bool> = rows
            .iter()
            .map(|r| r["a_complete"].as_bool().unwrap())
            .collect();
        assert_eq!(complete, vec![false, false, false, true]);
        assert!(rows[3].get("witness").is_none());
        assert!(rows[0].get("witness").is_some());
        assert_eq!(rows[0]["commutator_with_G_order"], 1);
    }

    #[test]
    fn trivial_group_json() {
        let r = classify(&build("C1")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&emit_report_json(&r, 0)).unwrap();
        assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn a5_lattice() {
        let l = lattice(&build("A5")).unwrap();
        assert_eq!(l.normals.len(), 2);
        assert_eq!(l.edges, vec![LatticeEdge::Cover { from: 0, to: 1 }]);
    }

    #[test]
    fn c4_lattice() {
        let l = lattice(&build("C4")).unwrap();
        assert_eq!(l.normals.len(), 3);
        assert_eq!(semi_edges(&l), vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
        let dot = render_dot(&build("C4"), &l);
        assert_eq!(dot.matches("semi:1").count(), 3);
        assert!(dot.contains("\"N#2 (order 4)\""));
    }

    #[test]
    fn heisenberg_lattice() {
        let g = build("Heis(3)");
        let l = lattice(&g).unwrap();
        let last = l.normals.len() - 1;
        assert!(semi_edges(&l).contains(&(0, last, 2)));
        let dot = render_dot(&g, &l);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains(&format!(
            "n0 -> n{last} [style = dashed, label = \"semi:2\""
        )));
    }
}
