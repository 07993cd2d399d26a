//! Text and JSON renderings of catalog listings and audits.

use std::fmt::Write;

use minuscule::homomesy::{OrbitReport, StatisticKind};
use minuscule::{CatalogEntry, EntryData};
use serde::Serialize;

fn poset_note(entry: &CatalogEntry) -> String {
    match (entry.poset_name(), entry.simply_laced_twin()) {
        (Some(name), _) => name,
        (None, Some(twin)) => format!("same poset as {twin}"),
        _ => String::new(),
    }
}

pub fn catalog_table(entries: &[EntryData]) -> String {
    let mut s = String::new();
    writeln!(s, "{:<10} {:>8} {:>5}  poset", "entry", "lattice", "heap").unwrap();
    for d in entries {
        writeln!(
            s,
            "{:<10} {:>8} {:>5}  {}",
            d.entry.to_string(),
            d.lattice.len(),
            d.heap.len(),
            poset_note(&d.entry)
        )
        .unwrap();
    }
    s
}

#[derive(Serialize)]
pub struct CatalogRow {
    #[serde(flatten)]
    entry: CatalogEntry,
    lattice: usize,
    heap: usize,
    poset: Option<String>,
}

pub fn catalog_json(entries: &[EntryData]) -> Vec<CatalogRow> {
    entries
        .iter()
        .map(|d| CatalogRow {
            entry: d.entry,
            lattice: d.lattice.len(),
            heap: d.heap.len(),
            poset: d.entry.poset_name(),
        })
        .collect()
}

pub struct EntryAudit {
    pub entry: CatalogEntry,
    pub lattice: usize,
    pub heap: usize,
    pub order_of_action: u64,
    pub reports: Vec<OrbitReport>,
}

impl EntryAudit {
    pub fn run(entry: CatalogEntry) -> anyhow::Result<Self> {
        let data = EntryData::build(entry)?;
        let reports = data.audit()?;
        Ok(EntryAudit {
            entry,
            lattice: data.lattice.len(),
            heap: data.heap.len(),
            order_of_action: data.decomposition.order_of_action(),
            reports,
        })
    }

    pub fn passes(&self) -> bool {
        self.reports.iter().all(OrbitReport::passes)
    }

    /// One line per failed verdict, with both rationals.
    pub fn failures(&self) -> Vec<String> {
        self.reports
            .iter()
            .flat_map(|r| {
                r.stats.iter().filter(|s| s.pass == Some(false)).map(move |s| {
                    let predicted = s.predicted.map(|p| p.to_string()).unwrap_or_default();
                    format!(
                        "{} orbit {} {}: average {} predicted {}",
                        self.entry, r.orbit_id, s.kind, s.average, predicted
                    )
                })
            })
            .collect()
    }
}

fn verdict(pass: Option<bool>) -> &'static str {
    match pass {
        Some(true) => "ok",
        Some(false) => "FAIL",
        None => "-",
    }
}

pub fn audit_text(audits: &[EntryAudit]) -> String {
    let mut s = String::new();
    for a in audits {
        writeln!(
            s,
            "{}  {}  lattice {}  heap {}  orbits {}  order {}  {}",
            a.entry,
            poset_note(&a.entry),
            a.lattice,
            a.heap,
            a.reports.len(),
            a.order_of_action,
            if a.passes() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        for r in &a.reports {
            write!(s, "  orbit {:>3}  size {:>3} ", r.orbit_id, r.size).unwrap();
            let per_label: Vec<String> = r
                .stats
                .iter()
                .filter(|st| matches!(st.kind, StatisticKind::PerLabel(_)))
                .map(|st| format!("{}[{}]", st.average.0, verdict(st.pass)))
                .collect();
            write!(s, " f^i {}", per_label.join(" ")).unwrap();
            for kind in [StatisticKind::TotalCardinality, StatisticKind::AntichainCardinality] {
                let st = r.stat(kind).expect("audit reports every statistic");
                let name = if kind == StatisticKind::TotalCardinality { "|I|" } else { "g" };
                write!(s, "  {name} {}[{}]", st.average.0, verdict(st.pass)).unwrap();
            }
            let anti: Vec<String> = r
                .stats
                .iter()
                .filter(|st| matches!(st.kind, StatisticKind::AntichainPerLabel(_)))
                .map(|st| st.average.0.to_string())
                .collect();
            writeln!(s, "  g^i {}", anti.join(" ")).unwrap();
        }
    }
    s
}

pub fn audit_json(audits: &[EntryAudit]) -> Vec<&OrbitReport> {
    audits.iter().flat_map(|a| a.reports.iter()).collect()
}

#[derive(Serialize)]
pub struct OrbitsFile {
    entry: CatalogEntry,
    order_of_action: u64,
    orbits: Vec<minuscule::dynamics::OrbitExport>,
}

pub fn orbits_json(data: &EntryData) -> OrbitsFile {
    OrbitsFile {
        entry: data.entry,
        order_of_action: data.decomposition.order_of_action(),
        orbits: data.decomposition.to_export(),
    }
}
