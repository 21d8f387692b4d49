//! Report documents. Everything here is plain data; JSON goes through serde
//! and CSV rows are flattened per (group, class).

use serde::Serialize;

use crate::ExitStatus;

/// Bumped whenever `schemas/report.schema.json` changes shape.
pub const SCHEMA_VERSION: &str = "1.0.0";

pub const COVERAGE_NOTE: &str = "Groups are drawn from a constructible catalog \
(cyclic, dihedral, symmetric, alternating, and pairwise direct products of these) \
plus any user-supplied group files. This is a strict subset of all groups of each \
order: most groups of orders such as 16, 24, 32, 48 or 64 are not in scope, so a \
clean survey does not certify every group up to the order cap.";

#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub report: serde_json::Value,
}

impl Envelope {
    pub fn new<T: Serialize>(command: &'static str, report: &T) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            tool: "conjq",
            version: env!("CARGO_PKG_VERSION"),
            command,
            report: serde_json::to_value(report).expect("reports serialize"),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

/// What a finished command hands back to `main`.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub envelope: Envelope,
    pub status: ExitStatus,
    pub rows: Vec<CsvRow>,
    /// Short human-readable summary for stdout.
    pub summary: String,
}

impl Outcome {
    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            writer.serialize(row)?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// One CSV line; columns a command does not compute stay empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CsvRow {
    pub group: String,
    pub group_order: usize,
    pub class_index: usize,
    pub representative: String,
    pub class_size: usize,
    pub element_order: u64,
    pub generated_order: Option<usize>,
    pub connected_direct: Option<bool>,
    pub connected_criterion: Option<bool>,
    pub hayashi: Option<bool>,
    pub goodness: Option<&'static str>,
    pub method: Option<&'static str>,
    pub audit_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub source: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub index: usize,
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesReport {
    pub group: GroupInfo,
    pub class_count: usize,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub c: String,
    pub z: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoodnessEntry {
    pub verdict: &'static str,
    pub method: &'static str,
    pub witnesses: Vec<WitnessPair>,
    pub failing: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCount {
    pub structure: String,
    pub regular: bool,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Corollary6Entry {
    pub agreement: bool,
    pub some_translation_regular: Option<bool>,
    pub some_pair_criterion: Option<bool>,
    pub every_member_criterion: Option<bool>,
    pub hayashi: Option<bool>,
    pub lemma3_consistent: Option<bool>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma4Entry {
    pub lmlt_order: usize,
    pub generated_order: usize,
    pub center_order: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    /// Triples `(a, b, c)` tested for self-distributivity.
    pub triples: usize,
    pub exhaustive: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub corollary6: Corollary6Entry,
    /// Skipped (null) when `|⟨C⟩|` is beyond the cardinality-check limit.
    pub lemma4: Option<Lemma4Entry>,
    pub axioms: AxiomEntry,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub group: GroupInfo,
    pub element: String,
    pub element_order: u64,
    pub class_size: usize,
    pub class: Vec<String>,
    pub generated_order: usize,
    pub generates_group: bool,
    pub connected_direct: bool,
    pub connected_criterion: bool,
    /// Orbit sizes of the class under conjugation by `⟨C⟩`.
    pub blocks: Vec<usize>,
    pub hayashi: bool,
    pub translation_cycle_structures: Vec<StructureCount>,
    pub goodness: GoodnessEntry,
    pub audit: Option<AuditEntry>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptEntry {
    pub k: u64,
    /// 1-based point where `z e^k` and `e^k z` differ.
    pub point: usize,
    pub z_ek: usize,
    pub ek_z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceEntry {
    pub found: bool,
    pub z: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub group: GroupInfo,
    pub degree: usize,
    pub element: String,
    pub element_order: u64,
    pub z: String,
    pub sigma: String,
    pub sigma_parity: &'static str,
    pub case: &'static str,
    pub transcript: Vec<TranscriptEntry>,
    pub passed: bool,
    pub bruteforce: Option<BruteForceEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorEntry {
    pub spec: String,
    pub group: String,
    pub element: String,
    pub size: usize,
    pub hayashi: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductEntry {
    pub size: usize,
    pub hayashi: bool,
    /// Each pair point's cycle length equals the lcm of its components'.
    pub cycle_lcm: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub left: FactorEntry,
    pub right: FactorEntry,
    pub product: ProductEntry,
    /// Hayashi factors give a Hayashi product.
    pub implication_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub index: usize,
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
    pub generated_order: usize,
    pub connected_direct: bool,
    pub connected_criterion: bool,
    pub hayashi: bool,
    pub goodness: &'static str,
    pub method: &'static str,
    /// Witness for the representative.
    pub witness: Option<String>,
    pub audit: Option<AuditEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub source: String,
    pub order: usize,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceError {
    pub source: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub sources: Vec<String>,
    pub max_order: usize,
    pub bound: usize,
    pub audit: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub groups: usize,
    pub classes: usize,
    pub good: usize,
    pub not_good: usize,
    pub undecided: usize,
    pub hayashi_failures: usize,
    pub connected: usize,
    pub connectivity_disagreements: usize,
    pub audit_failures: usize,
    pub source_errors: usize,
    pub skipped_sources: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyReport {
    pub coverage_note: &'static str,
    pub config: ConfigEcho,
    pub groups: Vec<GroupRecord>,
    pub errors: Vec<SourceError>,
    /// Sources that expanded to no group within the order cap.
    pub skipped: Vec<String>,
    pub summary: SurveySummary,
}
