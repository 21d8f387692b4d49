//! Catalog surveys: every class of every group in scope, checked for
//! goodness and the Hayashi property, optionally with all cross-checks.
//!
//! Work is spread over a rayon pool at the (group, class) level; results are
//! collected in source order, so output does not depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use conjq_core::checks::classify_class;
use conjq_core::group::split_orbits;
use conjq_core::{ConjClass, ConjugationQuandle, FiniteGroup};

use crate::commands::{audit_class, generated_order};
use crate::report::{
    ClassRecord, ConfigEcho, CsvRow, Envelope, GroupRecord, Outcome, SourceError, SurveyReport,
    SurveySummary, COVERAGE_NOTE,
};
use crate::source::{GroupSource, SurveySource};
use crate::{CliError, ExitStatus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyConfig {
    pub sources: Vec<SurveySource>,
    /// Original spellings, echoed in the report.
    pub source_names: Vec<String>,
    pub max_order: usize,
    pub bound: usize,
    pub audit: bool,
    pub seed: u64,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
}

impl SurveyConfig {
    pub fn new(names: &[String], max_order: usize, bound: usize) -> Result<Self, CliError> {
        let sources = names
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<SurveySource>, _>>()?;
        Ok(SurveyConfig {
            sources,
            source_names: names.to_vec(),
            max_order,
            bound,
            audit: false,
            seed: 0,
            jobs: None,
        })
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.sources.is_empty() {
            return Err(CliError::Usage("survey needs at least one source".into()));
        }
        if self.max_order == 0 {
            return Err(CliError::Usage("--max-order must be positive".into()));
        }
        if self.max_order > self.bound {
            return Err(CliError::Usage(format!(
                "--max-order {} exceeds the enumeration bound {}",
                self.max_order, self.bound
            )));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        Ok(())
    }
}

/// Stream id for a class: groups and classes are numbered in report order.
fn class_rng(seed: u64, group: usize, class: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((group as u64) << 32) | class as u64);
    rng
}

fn survey_class(
    g: &FiniteGroup,
    class: &ConjClass,
    index: usize,
    group_index: usize,
    config: &SurveyConfig,
) -> Result<ClassRecord, CliError> {
    let rep = class.representative();
    let q = ConjugationQuandle::build(g, class.members())?;
    let h_order = generated_order(g, class)?;
    let connected_direct = q.is_connected_direct();
    let connected_criterion = split_orbits(q.elements(), q.generated_group()).len() == 1;
    let hayashi = q.has_hayashi_property();
    let goodness = classify_class(g, class)?;
    let witness = goodness
        .witnesses
        .iter()
        .find(|(c, _)| c == rep)
        .map(|(_, z)| g.format(z));
    let audit = if config.audit {
        let mut rng = class_rng(config.seed, group_index, index);
        Some(audit_class(g, rep, &q, h_order, &mut rng)?)
    } else {
        None
    };
    Ok(ClassRecord {
        index,
        representative: g.format(rep),
        size: class.len(),
        element_order: g.element_order(rep),
        generated_order: h_order,
        connected_direct,
        connected_criterion,
        hayashi,
        goodness: goodness.verdict.as_str(),
        method: goodness.method.as_str(),
        witness,
        audit,
    })
}

fn survey_group(
    source: &GroupSource,
    group_index: usize,
    config: &SurveyConfig,
) -> Result<GroupRecord, CliError> {
    let g = source.load(config.bound)?;
    let order = g.order()?;
    if order > config.max_order {
        return Err(CliError::Input(format!(
            "order {order} exceeds --max-order {}",
            config.max_order
        )));
    }
    let classes = g.conjugacy_classes()?;
    let records = classes
        .par_iter()
        .enumerate()
        .map(|(i, class)| survey_class(&g, class, i, group_index, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupRecord {
        name: g.name().to_string(),
        source: source.to_string(),
        order,
        classes: records,
    })
}

fn summarize(groups: &[GroupRecord], errors: usize, skipped: usize) -> SurveySummary {
    let mut s = SurveySummary {
        groups: groups.len(),
        source_errors: errors,
        skipped_sources: skipped,
        ..SurveySummary::default()
    };
    for c in groups.iter().flat_map(|g| &g.classes) {
        s.classes += 1;
        match c.goodness {
            "good" => s.good += 1,
            "not_good" => s.not_good += 1,
            _ => s.undecided += 1,
        }
        s.hayashi_failures += usize::from(!c.hayashi);
        s.connected += usize::from(c.connected_direct);
        s.connectivity_disagreements += usize::from(c.connected_direct != c.connected_criterion);
        s.audit_failures += usize::from(c.audit.as_ref().is_some_and(|a| !a.ok));
    }
    s
}

fn rows(groups: &[GroupRecord]) -> Vec<CsvRow> {
    groups
        .iter()
        .flat_map(|g| {
            g.classes.iter().map(move |c| CsvRow {
                group: g.name.clone(),
                group_order: g.order,
                class_index: c.index,
                representative: c.representative.clone(),
                class_size: c.size,
                element_order: c.element_order,
                generated_order: Some(c.generated_order),
                connected_direct: Some(c.connected_direct),
                connected_criterion: Some(c.connected_criterion),
                hayashi: Some(c.hayashi),
                goodness: Some(c.goodness),
                method: Some(c.method),
                audit_ok: c.audit.as_ref().map(|a| a.ok),
            })
        })
        .collect()
}

pub fn cmd_survey(config: &SurveyConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let mut targets: Vec<GroupSource> = Vec::new();
    let mut skipped = Vec::new();
    for (source, name) in config.sources.iter().zip(&config.source_names) {
        let expanded = source.expand(config.max_order);
        if expanded.is_empty() {
            skipped.push(name.clone());
        }
        for t in expanded {
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
    }

    let run = || -> Vec<Result<GroupRecord, CliError>> {
        targets
            .par_iter()
            .enumerate()
            .map(|(i, source)| survey_group(source, i, config))
            .collect()
    };
    let results = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?
            .install(run),
        None => run(),
    };

    let mut groups = Vec::new();
    let mut errors = Vec::new();
    let mut first_error = None;
    for (source, result) in targets.iter().zip(results) {
        match result {
            Ok(record) => groups.push(record),
            Err(e) => {
                errors.push(SourceError {
                    source: source.to_string(),
                    message: e.to_string(),
                });
                first_error.get_or_insert(e);
            }
        }
    }
    if groups.is_empty() {
        return Err(match first_error {
            Some(e) => e,
            None => CliError::Usage("no group within --max-order in any source".into()),
        });
    }

    let summary = summarize(&groups, errors.len(), skipped.len());
    let clean = summary.not_good == 0
        && summary.undecided == 0
        && summary.hayashi_failures == 0
        && summary.connectivity_disagreements == 0
        && summary.audit_failures == 0
        && summary.source_errors == 0;
    let text = format!(
        "{} groups, {} classes: {} good, {} not good, {} undecided; {} Hayashi failures; {} connectivity disagreements; {} audit failures; {} source errors\n",
        summary.groups,
        summary.classes,
        summary.good,
        summary.not_good,
        summary.undecided,
        summary.hayashi_failures,
        summary.connectivity_disagreements,
        summary.audit_failures,
        summary.source_errors
    );
    let csv_rows = rows(&groups);
    let report = SurveyReport {
        coverage_note: COVERAGE_NOTE,
        config: ConfigEcho {
            sources: config.source_names.clone(),
            max_order: config.max_order,
            bound: config.bound,
            audit: config.audit,
            seed: config.seed,
        },
        groups,
        errors,
        skipped,
        summary,
    };
    Ok(Outcome {
        envelope: Envelope::new("survey", &report),
        status: if clean {
            ExitStatus::Ok
        } else {
            ExitStatus::Negative
        },
        rows: csv_rows,
        summary: text,
    })
}
