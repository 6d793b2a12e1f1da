//! Report types: JSON serialization (schema 1) and text rendering.
//!
//! Words serialize as 0/1 strings with the leftmost digit at coordinate 1;
//! word lists are ascending under the configured order. Serialization is
//! deterministic: a fixed field order and sorted listings.

use std::fmt::Write as _;

use cosetforge_core::leader_codewords::LeaderCodewordSet;
use cosetforge_core::{CosetTable, LinearCode, Word};
use serde::Serialize;

/// Version stamp carried by every JSON report.
pub const SCHEMA: u32 = 1;

/// One coset of the `coset-leaders` listing.
#[derive(Serialize, Debug)]
pub struct CosetEntry {
    pub syndrome: String,
    pub weight: u32,
    pub representative: String,
    pub leaders: Vec<String>,
}

/// `coset-leaders` report.
#[derive(Serialize, Debug)]
pub struct CosetLeadersReport {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub order: String,
    pub cosets: Vec<CosetEntry>,
    pub wdcl: Vec<u64>,
    pub covering_radius: u32,
    pub newton_radius: u32,
    pub iterations: u64,
}

/// Leader-codeword counts; `L1` is always a subset of `L`.
#[derive(Serialize, Debug)]
pub struct Counts {
    #[serde(rename = "L")]
    pub l: u64,
    #[serde(rename = "L1")]
    pub l1: u64,
}

/// The certifying decomposition `word = n1 + e_i + n2`.
#[derive(Serialize, Debug)]
pub struct WitnessEntry {
    pub n1: String,
    pub n2: String,
    pub i: u32,
}

/// One entry of the `leader-codewords` listing.
#[derive(Serialize, Debug)]
pub struct LeaderCodewordEntry {
    pub word: String,
    pub weight: u32,
    pub in_l1: bool,
    pub witness: WitnessEntry,
}

/// `leader-codewords` report.
#[derive(Serialize, Debug)]
pub struct LeaderCodewordsReport {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub order: String,
    pub codewords: Vec<LeaderCodewordEntry>,
    pub counts: Counts,
}

/// `decode` report.
#[derive(Serialize, Debug)]
pub struct DecodeReport {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub order: String,
    pub mode: String,
    pub received: String,
    pub codeword: String,
    pub error: String,
    pub distance: u32,
    pub unique: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_nearest: Option<Vec<String>>,
}

/// One row of the leaders-per-coset histogram: cosets of this weight, and
/// how many leaders they carry in total.
#[derive(Serialize, Debug)]
pub struct HistogramRow {
    pub weight: u32,
    pub cosets: u64,
    pub leaders: u64,
}

/// `stats` report.
#[derive(Serialize, Debug)]
pub struct StatsReport {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    /// Minimum distance; `null` when the dimension exceeds the enumeration
    /// guard.
    pub d: Option<u32>,
    /// Error-correcting capacity `(d - 1) / 2`; `null` alongside `d`.
    pub t: Option<u32>,
    pub order: String,
    pub cosets: u64,
    pub coset_leaders: u64,
    pub wdcl: Vec<u64>,
    pub covering_radius: u32,
    pub newton_radius: u32,
    pub unique_leader_cosets: u64,
    pub iterations: u64,
    pub histogram: Vec<HistogramRow>,
    pub counts: Counts,
    /// Whether the covering radius equals the error capacity (perfect code);
    /// `null` when `t` is unknown.
    pub perfect: Option<bool>,
}

/// Outcome of one `oracle-check` suite.
#[derive(Serialize, Debug)]
pub struct SuiteOutcome {
    pub name: String,
    /// `pass`, `fail`, or `skip`.
    pub status: String,
    /// What was checked, the first counterexample, or the reason skipped.
    pub detail: String,
}

/// `oracle-check` report.
#[derive(Serialize, Debug)]
pub struct OracleCheckReport {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub order: String,
    pub suites: Vec<SuiteOutcome>,
}

/// Renders any report as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

fn bits(w: &Word) -> String {
    w.to_bit_string()
}

/// Builds the `coset-leaders` report from a finished table.
pub fn coset_leaders_report(table: &CosetTable, order_label: &str) -> CosetLeadersReport {
    let code = table.code();
    CosetLeadersReport {
        schema: SCHEMA,
        n: code.n(),
        k: code.k(),
        order: order_label.to_string(),
        cosets: table
            .records()
            .iter()
            .map(|rec| CosetEntry {
                syndrome: bits(&rec.syndrome),
                weight: rec.weight,
                representative: bits(&rec.representative),
                leaders: rec.leaders.iter().map(bits).collect(),
            })
            .collect(),
        wdcl: table.wdcl(),
        covering_radius: table.covering_radius(),
        newton_radius: table.newton_radius(),
        iterations: table.iteration_count(),
    }
}

/// Builds the `leader-codewords` report; `l1_only` filters the listing (the
/// counts always describe both sets).
pub fn leader_codewords_report(
    code: &LinearCode,
    lead: &LeaderCodewordSet,
    order_label: &str,
    l1_only: bool,
) -> LeaderCodewordsReport {
    LeaderCodewordsReport {
        schema: SCHEMA,
        n: code.n(),
        k: code.k(),
        order: order_label.to_string(),
        codewords: lead
            .iter()
            .filter(|entry| entry.in_l1 || !l1_only)
            .map(|entry| LeaderCodewordEntry {
                word: bits(&entry.word),
                weight: entry.word.weight(),
                in_l1: entry.in_l1,
                witness: WitnessEntry {
                    n1: bits(&entry.witness.n1),
                    n2: bits(&entry.witness.n2),
                    i: entry.witness.coord,
                },
            })
            .collect(),
        counts: Counts { l: lead.len() as u64, l1: lead.l1_len() as u64 },
    }
}

/// Builds the `stats` report from a finished table and leader-codeword set.
pub fn stats_report(
    table: &CosetTable,
    lead: &LeaderCodewordSet,
    order_label: &str,
) -> StatsReport {
    let code = table.code();
    let d = code.min_distance().ok();
    let t = code.error_capacity().ok();
    StatsReport {
        schema: SCHEMA,
        n: code.n(),
        k: code.k(),
        d,
        t,
        order: order_label.to_string(),
        cosets: table.coset_count(),
        coset_leaders: table.leader_count(),
        wdcl: table.wdcl(),
        covering_radius: table.covering_radius(),
        newton_radius: table.newton_radius(),
        unique_leader_cosets: table.unique_leader_coset_count(),
        iterations: table.iteration_count(),
        histogram: table
            .leader_count_histogram()
            .into_iter()
            .map(|(weight, cosets, leaders)| HistogramRow { weight, cosets, leaders })
            .collect(),
        counts: Counts { l: lead.len() as u64, l1: lead.l1_len() as u64 },
        perfect: t.map(|t| table.covering_radius() == t),
    }
}

/// Text listing for `coset-leaders`: cosets grouped by weight, each line
/// `syndrome  N(representative)  CL{leaders}`.
pub fn render_coset_leaders(report: &CosetLeadersReport, stats: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "[{},{}] code, order {}, {} cosets, {} coset leaders",
        report.n,
        report.k,
        report.order,
        report.cosets.len(),
        report.cosets.iter().map(|c| c.leaders.len() as u64).sum::<u64>(),
    );
    let mut current_weight = None;
    for entry in &report.cosets {
        if current_weight != Some(entry.weight) {
            current_weight = Some(entry.weight);
            let count = report.cosets.iter().filter(|c| c.weight == entry.weight).count();
            let _ = writeln!(out, "\nweight {} ({} cosets):", entry.weight, count);
        }
        let _ = writeln!(
            out,
            "  s={}  N={}  CL={{{}}}",
            entry.syndrome,
            entry.representative,
            entry.leaders.join(", "),
        );
    }
    if stats {
        let _ = writeln!(out);
        let _ = writeln!(out, "wdcl            {:?}", report.wdcl);
        let _ = writeln!(out, "covering radius {}", report.covering_radius);
        let _ = writeln!(out, "newton radius   {}", report.newton_radius);
        let _ = writeln!(out, "iterations      {}", report.iterations);
    }
    out
}

/// Text listing for `leader-codewords`.
pub fn render_leader_codewords(report: &LeaderCodewordsReport, l1_only: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "[{},{}] code, order {}: |L(C)| = {}, |L1(C)| = {}{}",
        report.n,
        report.k,
        report.order,
        report.counts.l,
        report.counts.l1,
        if l1_only { " (listing L1 only)" } else { "" },
    );
    for entry in &report.codewords {
        let _ = writeln!(
            out,
            "  {}  weight={}  {}  = {} + e_{} + {}",
            entry.word,
            entry.weight,
            if entry.in_l1 { "L1" } else { "L " },
            entry.witness.n1,
            entry.witness.i,
            entry.witness.n2,
        );
    }
    out
}

/// Text rendering for `decode`.
pub fn render_decode(report: &DecodeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "received  {}", report.received);
    let _ = writeln!(out, "codeword  {}", report.codeword);
    let _ = writeln!(out, "error     {}", report.error);
    let _ = writeln!(out, "distance  {}", report.distance);
    let _ = writeln!(out, "unique    {}", report.unique);
    if let Some(nearest) = &report.all_nearest {
        let _ = writeln!(out, "all nearest error patterns ({}):", nearest.len());
        for w in nearest {
            let _ = writeln!(out, "  {w}");
        }
    }
    out
}

/// Text rendering for `stats`.
pub fn render_stats(report: &StatsReport) -> String {
    let mut out = String::new();
    let dim = match (report.d, report.t) {
        (Some(d), Some(t)) => format!("[{},{},{}] code, t = {}", report.n, report.k, d, t),
        _ => format!("[{},{}] code, minimum distance above enumeration guard", report.n, report.k),
    };
    let _ = writeln!(out, "{} (order {})", dim, report.order);
    let _ = writeln!(out, "cosets               {}", report.cosets);
    let _ = writeln!(out, "coset leaders        {}", report.coset_leaders);
    let _ = writeln!(out, "wdcl                 {:?}", report.wdcl);
    let _ = writeln!(out, "covering radius      {}", report.covering_radius);
    let _ = writeln!(out, "newton radius        {}", report.newton_radius);
    let _ = writeln!(out, "unique-leader cosets {}", report.unique_leader_cosets);
    let _ = writeln!(out, "iterations           {}", report.iterations);
    let _ = writeln!(out, "|L(C)|               {}", report.counts.l);
    let _ = writeln!(out, "|L1(C)|              {}", report.counts.l1);
    if let Some(perfect) = report.perfect {
        let _ = writeln!(out, "perfect              {perfect}");
    }
    let _ = writeln!(out, "\nleaders per coset by weight:");
    for row in &report.histogram {
        let _ = writeln!(
            out,
            "  weight {:>2}: {:>6} cosets, {:>7} leaders",
            row.weight, row.cosets, row.leaders
        );
    }
    out
}

/// Text rendering for `oracle-check`.
pub fn render_oracle_check(report: &OracleCheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "[{},{}] code, order {}: oracle cross-check",
        report.n, report.k, report.order
    );
    for suite in &report.suites {
        let _ = writeln!(
            out,
            "  {:<16} {:<4}  {}",
            suite.name,
            suite.status.to_uppercase(),
            suite.detail
        );
    }
    out
}
