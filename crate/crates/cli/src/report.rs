//! One row of invariants per input file, with the inequalities between them
//! re-evaluated on every row.

use std::path::PathBuf;

use anyhow::{Context, Result};
use num_rational::BigRational;
use radon_lab::hypergraph::{associated_space, star_family, Hypergraph};
use radon_lab::invariants::{colorful_helly_number, helly_number, radon_number, transversal, tverberg_number, Pool};
use radon_lab::lp::format_rational;
use radon_lab::{Bound, Budget, ConvexitySpace};

use crate::args::Format;
use crate::io::{is_hypergraph_text, read_text};
use crate::output::{table, Facts};

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub id: String,
    pub radon: Bound,
    pub tverberg3: Bound,
    pub helly: Bound,
    pub colorful: Bound,
    /// Piercing numbers of the star family, for hypergraph inputs.
    pub tau: Option<usize>,
    pub tau_star: Option<BigRational>,
}

/// Outcome of one inequality on a row; `None` when an operand is capped.
pub type Check = Option<bool>;

impl ReportRow {
    /// `h ≤ r − 1`.
    pub fn helly_below_radon(&self) -> Check {
        Some(self.helly.exact()? < self.radon.exact()?)
    }

    /// `h ≤ h_c`.
    pub fn helly_below_colorful(&self) -> Check {
        Some(self.helly.exact()? <= self.colorful.exact()?)
    }

    /// `τ* ≤ τ`.
    pub fn fractional_below_tau(&self) -> Check {
        Some(*self.tau_star.as_ref()? <= BigRational::from_integer(self.tau?.into()))
    }

    pub fn inequalities_hold(&self) -> bool {
        [self.helly_below_radon(), self.helly_below_colorful(), self.fractional_below_tau()]
            .iter()
            .all(|c| *c != Some(false))
    }
}

/// Computes a row for `space`; radon and Tverberg use multiset mode.
pub fn space_row(id: &str, space: &ConvexitySpace, star_taus: Option<(usize, BigRational)>, limit: u64) -> Result<ReportRow> {
    let (tau, tau_star) = star_taus.map_or((None, None), |(t, s)| (Some(t), Some(s)));
    Ok(ReportRow {
        id: id.to_string(),
        radon: radon_number(space, true, &Budget::new(limit)).value,
        tverberg3: tverberg_number(space, 3, true, &Budget::new(limit))?.value,
        helly: helly_number(space, &Budget::new(limit)).value,
        colorful: colorful_helly_number(space, Pool::Generators, &Budget::new(limit)).value,
        tau,
        tau_star,
    })
}

/// Row for the associated space of `h`, with τ and τ* of its star family.
pub fn hypergraph_row(id: &str, h: &Hypergraph, limit: u64) -> Result<ReportRow> {
    let assoc = associated_space(h)?;
    let t = transversal(&star_family(&assoc.mis, h.vertex_count()))?;
    space_row(id, &assoc.space, Some((t.tau, t.tau_star)), limit)
}

pub fn report_table(inputs: &[PathBuf], limit: u64) -> Result<Vec<ReportRow>> {
    inputs
        .iter()
        .map(|path| {
            let id = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
            let text = read_text(path)?;
            let ctx = || format!("invalid input {}", path.display());
            if is_hypergraph_text(&text) {
                let h = Hypergraph::from_text(&text).with_context(ctx)?;
                hypergraph_row(&id, &h, limit)
            } else {
                let s = ConvexitySpace::from_text(&text).with_context(ctx)?;
                space_row(&id, &s, None, limit)
            }
        })
        .collect()
}

fn cell(b: Bound) -> String {
    match b {
        Bound::Exact(v) => v.to_string(),
        Bound::AtLeast(v) => format!("CAPPED(>={v})"),
    }
}

fn check(c: Check) -> &'static str {
    match c {
        Some(true) => "ok",
        Some(false) => "VIOLATED",
        None => "CAPPED",
    }
}

pub fn render(rows: &[ReportRow], format: Format) -> String {
    let tau = |r: &ReportRow| r.tau.map_or("-".to_string(), |t| t.to_string());
    let tau_star = |r: &ReportRow| r.tau_star.as_ref().map_or("-".to_string(), format_rational);
    match format {
        Format::Machine => {
            let mut f = Facts::new();
            f.push("rows", rows.len());
            for (i, r) in rows.iter().enumerate() {
                let p = format!("row.{}", i + 1);
                f.push(format!("{p}.id"), &r.id);
                f.push(format!("{p}.r"), cell(r.radon));
                f.push(format!("{p}.t3"), cell(r.tverberg3));
                f.push(format!("{p}.h"), cell(r.helly));
                f.push(format!("{p}.h_c"), cell(r.colorful));
                f.push(format!("{p}.tau"), tau(r));
                f.push(format!("{p}.tau_star"), tau_star(r));
                f.push(format!("{p}.h_lt_r"), check(r.helly_below_radon()));
                f.push(format!("{p}.h_le_hc"), check(r.helly_below_colorful()));
                f.push(format!("{p}.tau_star_le_tau"), check(r.fractional_below_tau()));
            }
            f.push("status", if rows.iter().all(ReportRow::inequalities_hold) { "pass" } else { "fail" });
            f.render(format)
        }
        Format::Human => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        cell(r.radon),
                        cell(r.tverberg3),
                        cell(r.helly),
                        cell(r.colorful),
                        tau(r),
                        tau_star(r),
                        check(r.helly_below_radon()).into(),
                        check(r.helly_below_colorful()).into(),
                    ]
                })
                .collect();
            table(&["id", "r", "t3", "h", "h_c", "tau", "tau*", "h<r", "h<=h_c"], &body)
        }
    }
}
