//! Tab-separated sweep reports.

use std::io::{self, Write};

use crate::SweepSummary;

pub const TSV_HEADER: &str = "r1\tr2\tgamma\tdelta\tregime\toracle_m\tclosed_m\tformula";

/// Header plus one row per disagreeing (pair, closed form).
pub fn write_tsv(summary: &SweepSummary, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{TSV_HEADER}")?;
    for report in &summary.disagreements {
        let (first, second) = (report.pair.first, report.pair.second);
        for check in report.disagreements(&summary.formulas) {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                first.radius(),
                second.radius(),
                second.center().x(),
                second.center().y(),
                report.classification,
                report.oracle_m,
                check.closed,
                check.form,
            )?;
        }
    }
    Ok(())
}

/// One line, `#`-prefixed so it can trail the TSV rows.
pub fn summary_line(summary: &SweepSummary) -> String {
    let formulas: Vec<&str> = summary.formulas.iter().map(|f| f.id()).collect();
    format!(
        "# formulas={} max_radius={} max_offset={} pairs_swept={} pairs_checked={} evaluations={} disagreements={}",
        formulas.join(","),
        summary.bounds.max_radius,
        summary.bounds.max_offset,
        summary.pairs_swept,
        summary.pairs_checked,
        summary.evaluations(),
        summary.disagreement_count(),
    )
}
