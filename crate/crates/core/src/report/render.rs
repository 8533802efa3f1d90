//! Report artifacts: JSON, score CSV, summary table, text and SVG histograms.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::analyze::{BatchReport, CorpusReport};
use crate::error::{Error, Result};
use crate::stats::Histogram;

/// Column headers of the summary table.
pub const SUMMARY_COLUMNS: [&str; 8] = [
    "experiment",
    "sample_size",
    "shapiro_statistic",
    "shapiro_p_value",
    "shapiro_normal",
    "ad_statistic",
    "ad_critical_value_5",
    "ad_normal",
];

/// p-values below this print in scientific notation.
const SCI_THRESHOLD: f64 = 1e-4;
const BAR_WIDTH: usize = 50;

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

/// Six decimals, or `2.47e-24` style for very small values.
pub fn format_p(p: f64) -> String {
    if p != 0.0 && p.abs() < SCI_THRESHOLD {
        format!("{p:.2e}")
    } else {
        format!("{p:.6}")
    }
}

/// Cells of one summary row, in [`SUMMARY_COLUMNS`] order.
pub fn summary_row(r: &CorpusReport) -> [String; 8] {
    let n = &r.normality;
    [
        r.corpus_id.clone(),
        r.sample_size.to_string(),
        format!("{:.6}", n.sw_stat),
        format_p(n.sw_p),
        yes_no(n.sw_normal).to_string(),
        format!("{:.6}", n.ad_stat),
        format!("{:.3}", n.ad_crit_5),
        yes_no(n.ad_normal).to_string(),
    ]
}

pub fn report_json(report: &CorpusReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

pub fn parse_report_json(text: &str) -> Result<CorpusReport> {
    Ok(serde_json::from_str(text)?)
}

pub fn scores_csv(report: &CorpusReport) -> String {
    let mut out = String::from("sentence_index,length,score\n");
    for (i, (len, score)) in report.sentence_lengths.iter().zip(&report.scores).enumerate() {
        let _ = writeln!(out, "{i},{len},{score}");
    }
    out
}

pub fn summary_csv<'a>(reports: impl IntoIterator<Item = &'a CorpusReport>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Config(format!("csv: {e}"));
    w.write_record(SUMMARY_COLUMNS).map_err(io)?;
    for r in reports {
        w.write_record(summary_row(r)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Fixed-width table for terminals.
pub fn summary_table<'a>(reports: impl IntoIterator<Item = &'a CorpusReport>) -> String {
    let headers = [
        "Experiment",
        "Sample Size",
        "Shapiro Statistic",
        "Shapiro P-Value",
        "Shapiro Normal",
        "A-D Statistic",
        "AD Critical Value (5%)",
        "A-D Normal",
    ];
    let rows: Vec<[String; 8]> = reports.into_iter().map(summary_row).collect();
    let mut widths = headers.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[&str], out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&headers, &mut out);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells, &mut out);
    }
    out
}

/// One bar per bin, labelled with its range.
pub fn text_histogram(hist: &Histogram<f64>, title: &str) -> String {
    let max = hist.counts.iter().copied().max().unwrap_or(0).max(1);
    let bins = hist.bins();
    let labels: Vec<String> = hist
        .iter_bins()
        .enumerate()
        .map(|(i, (lo, hi, _))| {
            let close = if i + 1 == bins { ']' } else { ')' };
            format!("[{lo:.4}, {hi:.4}{close}")
        })
        .collect();
    let label_w = labels.iter().map(String::len).max().unwrap_or(0);
    let count_w = max.to_string().len();
    let mut out = format!("{title}\n");
    for (label, &count) in labels.iter().zip(&hist.counts) {
        let len = (count as usize * BAR_WIDTH).div_ceil(max as usize);
        let _ = writeln!(
            out,
            "{label:<label_w$} {count:>count_w$} {}",
            "#".repeat(len)
        );
    }
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Standalone SVG bar chart of a histogram.
pub fn svg_histogram(hist: &Histogram<f64>, title: &str, x_label: &str) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const LEFT: f64 = 60.0;
    const RIGHT: f64 = 20.0;
    const TOP: f64 = 40.0;
    const BOTTOM: f64 = 60.0;
    let plot_w = W - LEFT - RIGHT;
    let plot_h = H - TOP - BOTTOM;
    let max = hist.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
    let bar_w = plot_w / hist.bins().max(1) as f64;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        W / 2.0,
        xml_escape(title)
    );
    for (i, (lo, hi, count)) in hist.iter_bins().enumerate() {
        let h = count as f64 / max * plot_h;
        let x = LEFT + i as f64 * bar_w;
        let y = TOP + plot_h - h;
        let _ = writeln!(
            svg,
            r##"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{h:.2}" fill="#4a78b5" stroke="white" stroke-width="0.5"><title>[{lo:.4}, {hi:.4}]: {count}</title></rect>"##,
            bar_w
        );
    }
    let base = TOP + plot_h;
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        LEFT + plot_w
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{base}" stroke="black"/>"#
    );
    let (lo, hi) = (hist.edges[0], hist.edges[hist.edges.len() - 1]);
    let _ = writeln!(
        svg,
        r#"<text x="{LEFT}" y="{}" text-anchor="start">{lo:.4}</text>"#,
        base + 16.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">{hi:.4}</text>"#,
        LEFT + plot_w,
        base + 16.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        H - 16.0,
        xml_escape(x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
        LEFT - 6.0,
        TOP + 4.0,
        max as u64
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">0</text>"#,
        LEFT - 6.0,
        base
    );
    svg.push_str("</svg>\n");
    svg
}

/// File-name-safe form of a corpus label.
pub fn file_stem(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' })
        .collect()
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(|source| Error::Write {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Write {
        path: dir.to_path_buf(),
        source,
    })
}

/// Writes every per-corpus artifact into `dir` and returns their paths.
pub fn write_report(report: &CorpusReport, dir: &Path) -> Result<Vec<PathBuf>> {
    ensure_dir(dir)?;
    let stem = file_stem(&report.corpus_id);
    let dots_title = format!("Dot products: {}", report.corpus_id);
    let lengths_title = format!("Sentence lengths: {}", report.corpus_id);
    Ok(vec![
        write(dir.join(format!("{stem}.report.json")), &report_json(report)?)?,
        write(dir.join(format!("{stem}.scores.csv")), &scores_csv(report))?,
        write(
            dir.join(format!("{stem}.dots.svg")),
            &svg_histogram(&report.dot_histogram, &dots_title, "alignment score"),
        )?,
        write(
            dir.join(format!("{stem}.lengths.svg")),
            &svg_histogram(&report.length_histogram, &lengths_title, "sentence length (characters)"),
        )?,
        write(
            dir.join(format!("{stem}.dots.txt")),
            &text_histogram(&report.dot_histogram, &dots_title),
        )?,
        write(
            dir.join(format!("{stem}.lengths.txt")),
            &text_histogram(&report.length_histogram, &lengths_title),
        )?,
    ])
}

/// Writes all per-corpus artifacts plus `summary.csv`.
pub fn write_batch(batch: &BatchReport, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for r in batch.reports() {
        paths.extend(write_report(r, dir)?);
    }
    ensure_dir(dir)?;
    paths.push(write(dir.join("summary.csv"), &summary_csv(batch.reports())?)?);
    Ok(paths)
}
