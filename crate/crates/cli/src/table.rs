//! The on-disk form of an Eisenstein table, in JSON and CSV.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use geis_core::bun::SplitBundle;
use geis_core::curve::UnramifiedCharacter;
use geis_core::eis::{component_of, degrees_of, EisComponentTable, EisEngine, EisKind};
use geis_core::ringtools::Scalar;
use geis_core::rootdata::{BasedRootDatum, Coweight};
use serde::{Deserialize, Serialize};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TableEntry {
    pub bundle: String,
    pub component: String,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TableFile {
    pub q: u64,
    pub group: String,
    pub chi: Vec<String>,
    pub kind: String,
    pub entries: Vec<TableEntry>,
}

/// One CSV line: the table header repeated on every row.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    q: u64,
    group: String,
    chi: String,
    kind: String,
    bundle: String,
    component: String,
    value: String,
}

impl TableFile {
    pub fn from_table(group: &str, t: &EisComponentTable) -> Self {
        TableFile {
            q: t.q,
            group: group.to_string(),
            chi: t.chi.values().iter().map(|s| s.to_string()).collect(),
            kind: t.kind.to_string(),
            entries: t
                .entries
                .iter()
                .map(|((m, d), v)| TableEntry {
                    bundle: m.to_string(),
                    component: component_of(d).to_string(),
                    value: v.to_string(),
                })
                .collect(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for e in &self.entries {
                    w.serialize(CsvRow {
                        q: self.q,
                        group: self.group.clone(),
                        chi: self.chi.join(","),
                        kind: self.kind.clone(),
                        bundle: e.bundle.clone(),
                        component: e.component.clone(),
                        value: e.value.clone(),
                    })?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Json => Ok(serde_json::from_str(text).context("not a table in JSON form")?),
            Format::Csv => {
                let mut r = csv::Reader::from_reader(text.as_bytes());
                let rows: Vec<CsvRow> = r.deserialize().collect::<std::result::Result<_, _>>().context("not a table in CSV form")?;
                let Some(first) = rows.first() else { bail!("empty CSV table") };
                let mut out = TableFile {
                    q: first.q,
                    group: first.group.clone(),
                    chi: first.chi.split(',').map(str::to_string).collect(),
                    kind: first.kind.clone(),
                    entries: Vec::new(),
                };
                for row in &rows {
                    if (row.q, &row.group, &row.chi, &row.kind) != (first.q, &first.group, &first.chi, &first.kind) {
                        bail!("CSV rows disagree on q, group, chi or kind");
                    }
                    out.entries.push(TableEntry {
                        bundle: row.bundle.clone(),
                        component: row.component.clone(),
                        value: row.value.clone(),
                    });
                }
                Ok(out)
            }
        }
    }

    /// An engine, character and kind matching the header.
    pub fn engine(&self) -> Result<(EisEngine, UnramifiedCharacter, EisKind)> {
        let d = BasedRootDatum::by_name(&self.group)?;
        let engine = EisEngine::new(d.rank(), self.q)?;
        let chi = UnramifiedCharacter::parse(self.q, &self.chi.join(","))?;
        Ok((engine, chi, self.kind.parse()?))
    }

    pub fn decode(&self, e: &TableEntry) -> Result<(SplitBundle, Vec<i64>, Scalar)> {
        let m: SplitBundle = e.bundle.parse()?;
        let mu: Coweight = e.component.parse()?;
        Ok((m, degrees_of(&mu), Scalar::parse(self.q, &e.value)?))
    }
}

/// Two-column CSV with a header.
pub fn csv_rows(header: &[&str; 2], rows: &[(String, String)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for (a, b) in rows {
        w.write_record([a, b])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
