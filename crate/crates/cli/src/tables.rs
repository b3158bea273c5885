//! Table emission: fiber tables, parity tables, commutation maps and the
//! homotopy cycle, as CSV, JSON or Markdown.

use hfold_blueprint::HOMOTOPY_CYCLE;
use hfold_chevalley::{abcd_ring, check_reference_formulas};
use hfold_rings::Ring;
use hfold_roots::data::{H3_PARITY, H4_PARITY};
use hfold_roots::Kind;
use serde::Serialize;

use crate::suites::source_of;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Fibers,
    Parity,
    Commaps,
    Homotopy,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Md,
}

/// A rectangular table of strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
#[error("table `{table}` is not available for system {system}")]
pub struct Unsupported {
    pub table: String,
    pub system: String,
}

/// Builds a table for the H system `h`.
pub fn build(kind: TableKind, h: Kind) -> Result<Table, Unsupported> {
    let unsupported = || Unsupported { table: format!("{kind:?}").to_lowercase(), system: h.to_string().to_lowercase() };
    let src = source_of(h).ok_or_else(unsupported)?;
    match kind {
        TableKind::Fibers => fibers(src),
        TableKind::Parity if h != Kind::H2 => parity(h),
        TableKind::Commaps if h != Kind::H2 => commaps(h),
        TableKind::Homotopy if h == Kind::H3 => homotopy(),
        _ => return Err(unsupported()),
    }
    .map_err(|_| unsupported())
}

fn model(h: Kind) -> &'static hfold_chevalley::ChevalleyModel {
    hfold_chevalley::standard_model(source_of(h).expect("H kind")).expect("standard model builds")
}

fn fibers(src: Kind) -> Result<Table, ()> {
    let f = hfold_roots::FoldingMap::new(src).map_err(|_| ())?;
    let rows = f.fiber_table().into_iter().map(|(b, s, l)| vec![b, s, l]).collect();
    Ok(Table { name: format!("fibers-{}", src.to_string().to_lowercase()), columns: cols(&["root", "short", "long"]), rows })
}

fn parity(h: Kind) -> Result<Table, ()> {
    let m = model(h);
    let hs = m.h();
    let computed = m.parity_rows().map_err(|_| ())?;
    let order: Vec<&str> = match h {
        Kind::H3 => H3_PARITY.iter().map(|r| r.0).collect(),
        _ => H4_PARITY.iter().map(|r| r.0).collect(),
    };
    let mut columns = cols(&["root"]);
    columns.extend(hs.base_labels().iter().map(|l| format!("rho{l}")));
    let rows = order
        .into_iter()
        .map(|label| {
            let b = hs.parse_label(label).expect("reference row is a root");
            let mut row = vec![hs.label(b)];
            row.extend(computed[b].iter().map(|v| v.to_string()));
            row
        })
        .collect();
    Ok(Table { name: format!("parity-{}", h.to_string().to_lowercase()), columns, rows })
}

fn commaps(h: Kind) -> Result<Table, ()> {
    let ring = abcd_ring();
    let rows = check_reference_formulas(model(h))
        .into_iter()
        .map(|fc| {
            let (l, r) = match &fc.computed {
                Some(p) => (ring.render(&p.left), ring.render(&p.right)),
                None => ("failed".into(), "failed".into()),
            };
            vec![fc.spec.zeta.to_string(), fc.spec.xi.to_string(), fc.spec.rho.unwrap_or("").to_string(), l, r]
        })
        .collect();
    Ok(Table { name: format!("commaps-{}", h.to_string().to_lowercase()), columns: cols(&["zeta", "xi", "rho", "left", "right"]), rows })
}

fn homotopy() -> Result<Table, ()> {
    let rows = HOMOTOPY_CYCLE.iter().enumerate().map(|(i, w)| vec![format!("f{}", i + 1), w.to_string()]).collect();
    Ok(Table { name: "homotopy-h3".into(), columns: cols(&["step", "word"]), rows })
}

fn cols(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
            }
            Format::Json => serde_json::to_string_pretty(self).expect("serialisable") + "\n",
            Format::Md => {
                let line = |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| c.replace('|', "\\|")).collect::<Vec<_>>().join(" | "));
                let mut out = line(&self.columns);
                out.push_str(&line(&vec!["---".to_string(); self.columns.len()]));
                for r in &self.rows {
                    out.push_str(&line(r));
                }
                out
            }
        }
    }
}
