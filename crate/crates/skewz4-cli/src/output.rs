//! Report rendering: aligned text for terminals, JSON and CSV for
//! scripts. Every renderer returns the full output as one string so
//! the binary owns all writing and ordering.

use serde::Serialize;

use crate::commands::{
    AnalyzeReport, CenterReport, IdealsReport, ParamsOut, SearchReport, VerifyReport,
};

pub fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.len());
            if i + 1 < cells.len() {
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let headers: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    emit(&mut out, &headers);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(headers).expect("write to memory");
    for row in rows {
        writer.write_record(row).expect("write to memory");
    }
    let bytes = writer.into_inner().expect("flush to memory");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn opt_params(p: &Option<ParamsOut>) -> String {
    p.map(|p| p.to_string()).unwrap_or_else(|| "-".to_string())
}

fn opt_text(o: &Option<String>) -> String {
    o.clone().unwrap_or_else(|| "-".to_string())
}

// ---------------------------------------------------------------------
// verify

fn verify_rows(report: &VerifyReport) -> Vec<Vec<String>> {
    report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.selector.clone(),
                c.expected.to_string(),
                opt_params(&c.computed),
                c.status.to_string(),
                opt_text(&c.message),
            ]
        })
        .collect()
}

const VERIFY_HEADERS: [&str; 6] = ["label", "selector", "expected", "computed", "status", "message"];

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = table(&VERIFY_HEADERS, &verify_rows(report));
    out.push_str(&format!(
        "{} checks: {} passed, {} failed, {} errors\n",
        report.total, report.passed, report.failed, report.errors
    ));
    out
}

pub fn verify_csv(report: &VerifyReport) -> String {
    csv_table(&VERIFY_HEADERS, &verify_rows(report))
}

// ---------------------------------------------------------------------
// search

const SEARCH_HEADERS: [&str; 10] = [
    "generator",
    "derivation",
    "selector",
    "block_length",
    "k",
    "n",
    "k1",
    "k2",
    "d_lee",
    "codewords",
];

fn search_rows(report: &SearchReport) -> Vec<Vec<String>> {
    report
        .records
        .iter()
        .map(|r| {
            vec![
                r.generator.clone(),
                r.derivation.clone(),
                r.selector.clone(),
                r.block_length.to_string(),
                r.k.clone(),
                r.n.to_string(),
                r.k1.to_string(),
                r.k2.to_string(),
                r.d_lee.to_string(),
                r.codewords.to_string(),
            ]
        })
        .collect()
}

pub fn search_text(report: &SearchReport) -> String {
    let mut out = String::new();
    if report.records.is_empty() {
        out.push_str("no records\n");
    } else {
        out.push_str(&table(&SEARCH_HEADERS, &search_rows(report)));
    }
    out.push_str(&format!(
        "visited {} candidates, skipped {}, {} errors; front holds {} records\n",
        report.visited,
        report.skipped,
        report.errors,
        report.records.len()
    ));
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

pub fn search_csv(report: &SearchReport) -> String {
    csv_table(&SEARCH_HEADERS, &search_rows(report))
}

// ---------------------------------------------------------------------
// analyze

pub fn analyze_text(report: &AnalyzeReport) -> String {
    let mut out = String::new();
    let mut line = |name: &str, value: String| {
        out.push_str(&format!("{name:<22}{value}\n"));
    };
    line("generator:", report.generator.clone());
    line("derivation:", report.derivation.clone());
    line("n:", report.n.to_string());
    line("k:", report.k.clone());
    line(
        "right divisor:",
        if report.is_right_divisor { "yes" } else { "no" }.to_string(),
    );
    if let Some(h) = &report.check_polynomial {
        line("check polynomial:", h.clone());
        let central = report.check_polynomial_central.unwrap_or(false);
        line(
            "check poly central:",
            if central { "yes" } else { "no" }.to_string(),
        );
    }
    if let Some(rank) = report.free_rank {
        line("free rank:", rank.to_string());
    }
    line("span tuples:", report.span_tuples.to_string());
    if let Some(size) = report.span_size {
        line("span size:", size.to_string());
    }
    if let Some(c) = &report.closure {
        let flag = |b: bool| if b { "yes" } else { "no" };
        line(
            "closure:",
            format!(
                "twisted-shift {}, cyclic {}, quasicyclic-2 {}",
                flag(c.twisted_shift_closed),
                flag(c.cyclic),
                flag(c.quasicyclic_2)
            ),
        );
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    let rows: Vec<Vec<String>> = report
        .derived
        .iter()
        .map(|d| {
            vec![
                d.selector.clone(),
                opt_params(&d.params),
                d.codewords.map(|c| c.to_string()).unwrap_or_default(),
                opt_text(&d.error),
            ]
        })
        .collect();
    if !rows.is_empty() {
        out.push('\n');
        out.push_str(&table(&["selector", "params", "codewords", "error"], &rows));
    }
    out
}

// ---------------------------------------------------------------------
// ideals

const IDEAL_HEADERS: [&str; 4] = ["generator", "cardinality", "maximal", "elements"];

fn ideal_rows(report: &IdealsReport) -> Vec<Vec<String>> {
    report
        .ideals
        .iter()
        .map(|i| {
            vec![
                i.generator.clone(),
                i.cardinality.to_string(),
                if i.maximal { "yes" } else { "no" }.to_string(),
                i.elements.join(", "),
            ]
        })
        .collect()
}

pub fn ideals_text(report: &IdealsReport) -> String {
    table(&IDEAL_HEADERS, &ideal_rows(report))
}

pub fn ideals_csv(report: &IdealsReport) -> String {
    csv_table(&IDEAL_HEADERS, &ideal_rows(report))
}

// ---------------------------------------------------------------------
// center check

pub fn center_text(report: &CenterReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("polynomial: {}\n", report.polynomial));
    out.push_str(&format!("derivation: {}\n", report.derivation));
    out.push_str(&format!(
        "central:    {}\n",
        if report.central { "yes" } else { "no" }
    ));
    if let Some(w) = &report.witness {
        out.push_str(&format!(
            "witness:    commutator with {} is {}\n",
            w.element, w.commutator
        ));
    }
    out
}
