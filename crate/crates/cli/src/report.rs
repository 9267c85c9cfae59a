use std::collections::BTreeMap;
use std::fmt::Write as _;

use hypertri_core::{Census, Family, IngestReport, PatternCounts, PatternId, PatternTable, Phase, Stats};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportStats {
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub rank: usize,
    pub max_degree: usize,
    pub kappa: usize,
    pub avg_arity: f64,
}

/// `c(1..=26)`, serialized as an object keyed `"1"` to `"26"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts(pub [u64; 26]);

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(26))?;
        for (i, c) in self.0.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Counts {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        if raw.len() != 26 {
            return Err(D::Error::custom(format!("expected 26 counts, found {}", raw.len())));
        }
        let mut c = [0u64; 26];
        for (k, v) in raw {
            let id: usize = k.parse().map_err(|_| D::Error::custom(format!("bad pattern id {k:?}")))?;
            if !(1..=26).contains(&id) {
                return Err(D::Error::custom(format!("pattern id {id} out of range")));
            }
            c[id - 1] = v;
        }
        Ok(Counts(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub closed: u64,
    pub open: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Shares {
    /// `c9 / closed`, 0 when there are no closed patterns.
    pub p9_closed: f64,
    /// `c26 / open`, 0 when there are no open patterns.
    pub p26_open: f64,
}

/// Per-phase values in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PerPhase<T> {
    pub degeneracy: T,
    pub edge_degrees: T,
    pub triangle: T,
    pub containment: T,
    pub stars: T,
    pub extended_stars: T,
    pub open_patterns: T,
}

impl<T: Copy> PerPhase<T> {
    fn from_fn(f: impl Fn(Phase) -> T) -> Self {
        PerPhase {
            degeneracy: f(Phase::Degeneracy),
            edge_degrees: f(Phase::EdgeDegrees),
            triangle: f(Phase::Triangle),
            containment: f(Phase::Containment),
            stars: f(Phase::Stars),
            extended_stars: f(Phase::ExtendedStars),
            open_patterns: f(Phase::OpenPatterns),
        }
    }

    pub fn get(&self, phase: Phase) -> T {
        match phase {
            Phase::Degeneracy => self.degeneracy,
            Phase::EdgeDegrees => self.edge_degrees,
            Phase::Triangle => self.triangle,
            Phase::Containment => self.containment,
            Phase::Stars => self.stars,
            Phase::ExtendedStars => self.extended_stars,
            Phase::OpenPatterns => self.open_patterns,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestSummary {
    pub duplicates_removed: usize,
    pub singletons_removed: usize,
    pub empty_lines_skipped: usize,
    pub comment_lines_skipped: usize,
    pub vertex_remap_size: usize,
}

impl From<IngestReport> for IngestSummary {
    fn from(r: IngestReport) -> Self {
        IngestSummary {
            duplicates_removed: r.duplicates_removed,
            singletons_removed: r.singletons_removed,
            empty_lines_skipped: r.empty_lines_skipped,
            comment_lines_skipped: r.comment_lines_skipped,
            vertex_remap_size: r.vertex_remap_size,
        }
    }
}

/// Result of one census run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub stats: ReportStats,
    pub counts: Counts,
    pub totals: Totals,
    pub shares: Shares,
    /// Wall time per phase in milliseconds.
    pub timings: PerPhase<f64>,
    /// Inner-loop iterations per phase.
    pub work: PerPhase<u64>,
    pub ingest: IngestSummary,
}

impl CensusReport {
    pub fn new(stats: Stats, census: &Census, ingest: IngestReport) -> Self {
        let counts = &census.counts;
        let (closed, open) = (counts.closed_total(), counts.open_total());
        let share = |x: u64, total: u64| if total == 0 { 0.0 } else { x as f64 / total as f64 };
        CensusReport {
            stats: ReportStats {
                n: stats.n,
                m: stats.m,
                h: stats.h,
                rank: stats.rank,
                max_degree: stats.max_degree,
                kappa: census.kappa,
                avg_arity: stats.avg_arity,
            },
            counts: Counts(*counts.as_array()),
            totals: Totals { closed, open },
            shares: Shares {
                p9_closed: share(counts.c(9), closed),
                p26_open: share(counts.c(26), open),
            },
            timings: PerPhase::from_fn(|p| census.timings.get(p).elapsed.as_secs_f64() * 1e3),
            work: PerPhase::from_fn(|p| census.timings.get(p).iterations),
            ingest: ingest.into(),
        }
    }

    pub fn pattern_counts(&self) -> PatternCounts {
        PatternCounts::from_array(self.counts.0)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let table = PatternTable::global();
        let mut out = String::from("pattern,family,kind,count\n");
        for id in PatternId::all() {
            let family = table.family(id);
            let _ = writeln!(
                out,
                "{},{},{},{}",
                id.get(),
                csv_field(family.label()),
                kind(family),
                self.counts.0[id.index()]
            );
        }
        out
    }

    fn render_text(&self) -> String {
        let table = PatternTable::global();
        let s = &self.stats;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n = {}  m = {}  h = {}  rank = {}  max degree = {}  kappa = {}  avg arity = {:.2}",
            s.n, s.m, s.h, s.rank, s.max_degree, s.kappa, s.avg_arity
        );
        let _ = writeln!(out);
        let _ = writeln!(out, "{:>3}  {:<32} {:>6}  {:>20}", "id", "family", "kind", "count");
        for id in PatternId::all() {
            let family = table.family(id);
            let _ = writeln!(
                out,
                "{:>3}  {:<32} {:>6}  {:>20}",
                id.get(),
                family.label(),
                kind(family),
                self.counts.0[id.index()]
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "closed = {}  open = {}  pattern 9 = {:.1}% of closed  pattern 26 = {:.1}% of open",
            self.totals.closed,
            self.totals.open,
            100.0 * self.shares.p9_closed,
            100.0 * self.shares.p26_open
        );
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<16} {:>12} {:>16}", "phase", "ms", "iterations");
        for p in Phase::ALL {
            let _ = writeln!(out, "{:<16} {:>12.3} {:>16}", p.name(), self.timings.get(p), self.work.get(p));
        }
        out
    }

    /// JSON with the timings block removed; identical across runs on the
    /// same input.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("report is an object").remove("timings");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

fn kind(family: Family) -> &'static str {
    if family.is_closed() {
        "closed"
    } else {
        "open"
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The pattern table as CSV: id, family, kind, canonical signature and the
/// number of signatures in the class.
pub fn render_pattern_table() -> String {
    let mut out = String::from("pattern,family,kind,canonical_signature,members\n");
    for class in PatternTable::global().classes() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            class.id.get(),
            csv_field(class.family.label()),
            kind(class.family),
            class.canonical,
            class.members.len()
        );
    }
    out
}
