//! `classes`, `check`, `witness` and `product-check`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conjq_core::checks::{
    classify_class, commutation_transcript, corollary6_audit, lemma4_cardinality,
    product_cycle_lcm, witness_bruteforce, witness_sym, GoodnessReport, Verdict, WitnessCase,
};
use conjq_core::group::{split_orbits, Family};
use conjq_core::{ConjClass, ConjugationQuandle, Element, FiniteGroup, Parity};

use crate::report::{
    AuditEntry, AxiomEntry, BruteForceEntry, CheckReport, ClassEntry, ClassesReport,
    Corollary6Entry, CsvRow, Envelope, FactorEntry, GoodnessEntry, GroupInfo, Lemma4Entry, Outcome,
    ProductEntry, ProductReport, StructureCount, TranscriptEntry, WitnessPair, WitnessReport,
};
use crate::source::{GroupSource, QuandleSpec};
use crate::{CliError, ExitStatus};

/// `|⟨C⟩|` above which the translation-group cardinality check is skipped.
pub const LEMMA4_LIMIT: usize = 2000;

/// Quandles up to this size get every triple checked for self-distributivity;
/// larger ones get [`AXIOM_SAMPLES`] seeded random triples.
pub const AXIOM_EXHAUSTIVE_LIMIT: usize = 30;
pub const AXIOM_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub bound: usize,
    pub audit: bool,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            bound: conjq_core::group::DEFAULT_BOUND,
            audit: false,
            seed: 0,
        }
    }
}

pub(crate) fn group_info(g: &FiniteGroup, source: &GroupSource) -> Result<GroupInfo, CliError> {
    Ok(GroupInfo {
        name: g.name().to_string(),
        source: source.to_string(),
        order: g.order()?,
    })
}

fn parse_member(g: &FiniteGroup, text: &str) -> Result<Element, CliError> {
    let e = g.parse_element(text)?;
    if !g.contains(&e)? {
        return Err(CliError::Input(format!(
            "{text} is not an element of {}",
            g.name()
        )));
    }
    Ok(e)
}

pub fn cmd_classes(source: &GroupSource, bound: usize) -> Result<Outcome, CliError> {
    let g = source.load(bound)?;
    let info = group_info(&g, source)?;
    let classes: Vec<ClassEntry> = g
        .conjugacy_classes()?
        .iter()
        .enumerate()
        .map(|(index, class)| ClassEntry {
            index,
            representative: g.format(class.representative()),
            size: class.len(),
            element_order: g.element_order(class.representative()),
        })
        .collect();
    let rows = classes
        .iter()
        .map(|c| CsvRow {
            group: info.name.clone(),
            group_order: info.order,
            class_index: c.index,
            representative: c.representative.clone(),
            class_size: c.size,
            element_order: c.element_order,
            ..CsvRow::default()
        })
        .collect();
    let mut summary = format!(
        "{}: order {}, {} classes\n",
        info.name,
        info.order,
        classes.len()
    );
    for c in &classes {
        summary.push_str(&format!(
            "  {:>3}  size {:>6}  order {:>4}  {}\n",
            c.index, c.size, c.element_order, c.representative
        ));
    }
    let report = ClassesReport {
        group: info,
        class_count: classes.len(),
        classes,
    };
    Ok(Outcome {
        envelope: Envelope::new("classes", &report),
        status: ExitStatus::Ok,
        rows,
        summary,
    })
}

pub(crate) fn goodness_entry(g: &FiniteGroup, report: &GoodnessReport) -> GoodnessEntry {
    GoodnessEntry {
        verdict: report.verdict.as_str(),
        method: report.method.as_str(),
        witnesses: report
            .witnesses
            .iter()
            .map(|(c, z)| WitnessPair {
                c: g.format(c),
                z: g.format(z),
            })
            .collect(),
        failing: report.failing.as_ref().map(|x| g.format(x)),
    }
}

/// Self-distributivity `a⋆(b⋆c) = (a⋆b)⋆(a⋆c)` over all triples, or over a
/// seeded sample for large quandles. Idempotence and bijectivity hold by
/// construction of the translation table and are checked alongside.
pub(crate) fn check_axioms(q: &ConjugationQuandle, rng: &mut ChaCha8Rng) -> AxiomEntry {
    let n = q.len();
    let sd = |a: usize, b: usize, c: usize| {
        q.operate(a, q.operate(b, c)) == q.operate(q.operate(a, b), q.operate(a, c))
    };
    let idempotent = (0..n).all(|a| q.operate(a, a) == a);
    if n <= AXIOM_EXHAUSTIVE_LIMIT {
        let holds = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| sd(a, b, c))));
        AxiomEntry {
            triples: n * n * n,
            exhaustive: true,
            holds: holds && idempotent,
        }
    } else {
        let holds = (0..AXIOM_SAMPLES).all(|_| {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            sd(a, b, c)
        });
        AxiomEntry {
            triples: AXIOM_SAMPLES,
            exhaustive: false,
            holds: holds && idempotent,
        }
    }
}

/// All audit-mode cross-checks for one class quandle.
pub(crate) fn audit_class(
    g: &FiniteGroup,
    e: &Element,
    q: &ConjugationQuandle,
    generated_order: usize,
    rng: &mut ChaCha8Rng,
) -> Result<AuditEntry, CliError> {
    let corollary6 = match corollary6_audit(g, e) {
        Ok(a) => Corollary6Entry {
            agreement: a.agreement,
            some_translation_regular: Some(a.some_translation_regular),
            some_pair_criterion: Some(a.some_pair_criterion),
            every_member_criterion: Some(a.every_member_criterion),
            hayashi: Some(a.hayashi),
            lemma3_consistent: Some(a.lemma3_consistent),
            detail: None,
        },
        Err(conjq_core::Error::EquivalenceViolation { detail }) => Corollary6Entry {
            agreement: false,
            some_translation_regular: None,
            some_pair_criterion: None,
            every_member_criterion: None,
            hayashi: None,
            lemma3_consistent: None,
            detail: Some(detail),
        },
        Err(other) => return Err(other.into()),
    };
    let lemma4 = if generated_order <= LEMMA4_LIMIT {
        let card = lemma4_cardinality(q)?;
        Some(Lemma4Entry {
            lmlt_order: card.lmlt_order,
            generated_order: card.generated_order,
            center_order: card.center_order,
            holds: card.holds(),
        })
    } else {
        None
    };
    let axioms = check_axioms(q, rng);
    let ok = corollary6.agreement && lemma4.is_none_or(|l| l.holds) && axioms.holds;
    Ok(AuditEntry {
        corollary6,
        lemma4,
        axioms,
        ok,
    })
}

/// `|⟨C⟩|`, without enumerating when `C` is a single (central) element.
pub(crate) fn generated_order(g: &FiniteGroup, class: &ConjClass) -> Result<usize, CliError> {
    if class.len() == 1 {
        return Ok(g.element_order(class.representative()) as usize);
    }
    Ok(g.generated_subgroup(class.members()).order()?)
}

pub fn cmd_check(
    source: &GroupSource,
    element: &str,
    opts: CheckOptions,
) -> Result<Outcome, CliError> {
    let g = source.load(opts.bound)?;
    let info = group_info(&g, source)?;
    let e = parse_member(&g, element)?;
    let class = g.conjugacy_class(&e)?;
    let q = ConjugationQuandle::build(&g, class.members())?;
    let h = q.generated_group();
    let h_order = h.order()?;
    let blocks: Vec<usize> = split_orbits(q.elements(), h).iter().map(Vec::len).collect();
    let connected_direct = q.is_connected_direct();
    let connected_criterion = blocks.len() == 1;

    let mut structures: BTreeMap<(Vec<usize>, String), (bool, usize)> = BTreeMap::new();
    for (_, cs) in q.translation_cycle_structures() {
        let entry = structures
            .entry((cs.lengths().collect(), cs.to_string()))
            .or_insert((cs.has_regular_cycle(), 0));
        entry.1 += 1;
    }
    let translation_cycle_structures: Vec<StructureCount> = structures
        .into_iter()
        .map(|((_, structure), (regular, count))| StructureCount {
            structure,
            regular,
            count,
        })
        .collect();
    let hayashi = q.has_hayashi_property();
    let goodness = classify_class(&g, &class)?;

    let audit = if opts.audit {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        Some(audit_class(&g, &e, &q, h_order, &mut rng)?)
    } else {
        None
    };

    let ok = hayashi
        && goodness.verdict == Verdict::Good
        && connected_direct == connected_criterion
        && audit.as_ref().is_none_or(|a| a.ok);
    let row = CsvRow {
        group: info.name.clone(),
        group_order: info.order,
        class_index: 0,
        representative: g.format(&e),
        class_size: class.len(),
        element_order: g.element_order(&e),
        generated_order: Some(h_order),
        connected_direct: Some(connected_direct),
        connected_criterion: Some(connected_criterion),
        hayashi: Some(hayashi),
        goodness: Some(goodness.verdict.as_str()),
        method: Some(goodness.method.as_str()),
        audit_ok: audit.as_ref().map(|a| a.ok),
    };
    let summary = format!(
        "{} in {}: class size {}, |<C>| = {}, connected = {} (criterion {}), blocks {:?}, hayashi = {}, {} via {}{}\n",
        g.format(&e),
        info.name,
        class.len(),
        h_order,
        connected_direct,
        connected_criterion,
        blocks,
        hayashi,
        goodness.verdict.as_str(),
        goodness.method.as_str(),
        match &audit {
            Some(a) => format!(", audit {}", if a.ok { "clean" } else { "FAILED" }),
            None => String::new(),
        }
    );
    let report = CheckReport {
        element: g.format(&e),
        element_order: g.element_order(&e),
        class_size: class.len(),
        class: class.members().iter().map(|x| g.format(x)).collect(),
        generated_order: h_order,
        generates_group: h_order == info.order,
        group: info,
        connected_direct,
        connected_criterion,
        blocks,
        hayashi,
        translation_cycle_structures,
        goodness: goodness_entry(&g, &goodness),
        audit,
        ok,
    };
    Ok(Outcome {
        envelope: Envelope::new("check", &report),
        status: if ok {
            ExitStatus::Ok
        } else {
            ExitStatus::Negative
        },
        rows: vec![row],
        summary,
    })
}

fn case_name(case: WitnessCase) -> &'static str {
    match case {
        WitnessCase::MixedLengths => "mixed_lengths",
        WitnessCase::Identity => "identity",
        WitnessCase::Involution => "involution",
        WitnessCase::ThreeCycles => "three_cycles",
        WitnessCase::LongCycles => "long_cycles",
    }
}

pub fn cmd_witness(
    source: &GroupSource,
    element: &str,
    opts: CheckOptions,
) -> Result<Outcome, CliError> {
    let g = source.load(opts.bound)?;
    let n = match (source, g.family()) {
        (GroupSource::Catalog(_), Family::Symmetric(n) | Family::Alternating(n)) => *n,
        _ => {
            return Err(CliError::Usage(
                "witness needs a symmetric or alternating catalog group".into(),
            ))
        }
    };
    let e_elem = g.parse_element(element)?;
    let Element::Perm(e) = &e_elem else {
        unreachable!("symmetric and alternating groups are permutation groups")
    };
    let w = witness_sym(e, n)?;
    if !g.contains(&e_elem)? {
        return Err(CliError::Input(format!(
            "{element} is not an element of {}",
            g.name()
        )));
    }
    // Independent re-run of the oracle on the returned z.
    let passed = commutation_transcript(e, &w.z).is_ok() && w.sigma.parity() == Parity::Even;
    let transcript: Vec<TranscriptEntry> = w
        .transcript
        .iter()
        .map(|c| TranscriptEntry {
            k: c.k,
            point: c.point + 1,
            z_ek: c.left + 1,
            ek_z: c.right + 1,
        })
        .collect();
    let bruteforce = if opts.audit {
        let class = g.conjugacy_class(&e_elem)?;
        let h = g.generated_subgroup(class.members());
        let z = witness_bruteforce(&e_elem, &class, &g, &h);
        Some(BruteForceEntry {
            found: z.is_some(),
            z: z.map(|z| g.format(&z)),
        })
    } else {
        None
    };
    let ok = passed && bruteforce.as_ref().is_none_or(|b| b.found);
    let info = GroupInfo {
        name: g.name().to_string(),
        source: source.to_string(),
        order: g.order()?,
    };
    let mut summary = format!(
        "e = {e} in {}\nz = {}\nsigma = {} ({})\n{} commutation checks, {}\n",
        info.name,
        w.z,
        w.sigma,
        if w.sigma.parity() == Parity::Even {
            "even"
        } else {
            "odd"
        },
        transcript.len(),
        if passed { "all passed" } else { "FAILED" }
    );
    for t in &transcript {
        summary.push_str(&format!(
            "  k = {}: z e^k sends {} to {}, e^k z sends it to {}\n",
            t.k, t.point, t.z_ek, t.ek_z
        ));
    }
    if let Some(b) = &bruteforce {
        summary.push_str(&format!(
            "brute force: {}\n",
            b.z.as_deref().unwrap_or("no witness")
        ));
    }
    let report = WitnessReport {
        group: info,
        degree: n,
        element: e.to_string(),
        element_order: e.order(),
        z: w.z.to_string(),
        sigma: w.sigma.to_string(),
        sigma_parity: if w.sigma.parity() == Parity::Even {
            "even"
        } else {
            "odd"
        },
        case: case_name(w.case),
        transcript,
        passed,
        bruteforce,
    };
    Ok(Outcome {
        envelope: Envelope::new("witness", &report),
        status: if ok {
            ExitStatus::Ok
        } else {
            ExitStatus::Negative
        },
        rows: Vec::new(),
        summary,
    })
}

fn load_factor(
    spec: &QuandleSpec,
    bound: usize,
) -> Result<(FiniteGroup, ConjugationQuandle, FactorEntry), CliError> {
    let g = spec.source.load(bound)?;
    let e = parse_member(&g, &spec.element)?;
    let q = ConjugationQuandle::of_class(&g, &e)?;
    let entry = FactorEntry {
        spec: format!("{}@{}", spec.source, spec.element),
        group: g.name().to_string(),
        element: g.format(&e),
        size: q.len(),
        hayashi: q.has_hayashi_property(),
    };
    Ok((g, q, entry))
}

pub fn cmd_product_check(
    left: &QuandleSpec,
    right: &QuandleSpec,
    opts: CheckOptions,
) -> Result<Outcome, CliError> {
    let (_, q1, left_entry) = load_factor(left, opts.bound)?;
    let (_, q2, right_entry) = load_factor(right, opts.bound)?;
    if q1.len().saturating_mul(q2.len()) > opts.bound {
        return Err(CliError::ProductTooLarge {
            left: q1.len(),
            right: q2.len(),
            bound: opts.bound,
        });
    }
    let product = q1.product(&q2)?;
    let hayashi = product.has_hayashi_property();
    let cycle_lcm = product_cycle_lcm(&q1, &q2, &product)?;
    let implication_holds = !(left_entry.hayashi && right_entry.hayashi) || hayashi;
    let summary = format!(
        "{} (size {}, hayashi {}) x {} (size {}, hayashi {}): product size {}, hayashi {}, cycle lengths are lcms: {}\n",
        left_entry.spec,
        left_entry.size,
        left_entry.hayashi,
        right_entry.spec,
        right_entry.size,
        right_entry.hayashi,
        product.len(),
        hayashi,
        cycle_lcm
    );
    let ok = implication_holds && cycle_lcm && hayashi;
    let report = ProductReport {
        left: left_entry,
        right: right_entry,
        product: ProductEntry {
            size: product.len(),
            hayashi,
            cycle_lcm,
        },
        implication_holds,
    };
    Ok(Outcome {
        envelope: Envelope::new("product-check", &report),
        status: if ok {
            ExitStatus::Ok
        } else {
            ExitStatus::Negative
        },
        rows: Vec::new(),
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog(text: &str) -> GroupSource {
        GroupSource::Catalog(text.parse().unwrap())
    }

    #[test]
    fn classes_of_s4_and_c5() {
        let out = cmd_classes(&catalog("symmetric:4"), 20_000).unwrap();
        let mut sizes: Vec<usize> = out.rows.iter().map(|r| r.class_size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 3, 6, 6, 8]);
        let out = cmd_classes(&catalog("cyclic:5"), 20_000).unwrap();
        assert_eq!(out.rows.len(), 5);
        assert!(out.rows.iter().all(|r| r.class_size == 1));
    }

    #[test]
    fn check_examples() {
        let opts = CheckOptions {
            audit: true,
            ..CheckOptions::default()
        };
        let out = cmd_check(&catalog("symmetric:5"), "(1 2 3)", opts).unwrap();
        let r = &out.envelope.report;
        assert_eq!(r["connected_direct"], true);
        assert_eq!(r["generated_order"], 60);
        assert_eq!(r["goodness"]["verdict"], "good");
        assert_eq!(out.status, ExitStatus::Ok);

        let out = cmd_check(&catalog("symmetric:4"), "(1 2 3)", opts).unwrap();
        let r = &out.envelope.report;
        assert_eq!(r["connected_direct"], false);
        assert_eq!(r["connected_criterion"], false);
        assert_eq!(r["blocks"], serde_json::json!([4, 4]));
        assert_eq!(r["hayashi"], true);

        let out = cmd_check(&catalog("cyclic:6"), "(1 2 3 4 5 6)", opts).unwrap();
        assert_eq!(out.envelope.report["class_size"], 1);
        assert_eq!(out.status, ExitStatus::Ok);
    }

    #[test]
    fn check_rejects_non_members() {
        let err =
            cmd_check(&catalog("alternating:4"), "(1 2)", CheckOptions::default()).unwrap_err();
        assert_eq!(err.exit_status(), ExitStatus::Usage);
    }

    #[test]
    fn witness_examples() {
        let out = cmd_witness(
            &catalog("symmetric:6"),
            "(1 2)(3 4 5)",
            CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(
            out.envelope.report["transcript"].as_array().unwrap().len(),
            5
        );
        assert_eq!(out.envelope.report["sigma_parity"], "even");
        let err =
            cmd_witness(&catalog("symmetric:4"), "(1 2 3)", CheckOptions::default()).unwrap_err();
        assert!(matches!(
            err,
            CliError::Core(conjq_core::Error::DegreeTooSmall { .. })
        ));
        assert_eq!(err.exit_status(), ExitStatus::Usage);
        let err = cmd_witness(
            &catalog("dihedral:10"),
            "(1 2 3 4 5)",
            CheckOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
    }

    #[test]
    fn product_examples() {
        let spec = |s: &str| s.parse::<QuandleSpec>().unwrap();
        let opts = CheckOptions::default();
        let out = cmd_product_check(
            &spec("symmetric:3@(1 2)"),
            &spec("symmetric:3@(1 2 3)"),
            opts,
        )
        .unwrap();
        assert_eq!(out.envelope.report["product"]["hayashi"], true);
        assert_eq!(out.envelope.report["product"]["size"], 6);

        let out =
            cmd_product_check(&spec("symmetric:4@(1 2)"), &spec("cyclic:3@()"), opts).unwrap();
        assert_eq!(
            out.envelope.report["product"]["hayashi"],
            out.envelope.report["left"]["hayashi"]
        );

        let small = CheckOptions { bound: 30, ..opts };
        let err = cmd_product_check(
            &spec("symmetric:4@(1 2)"),
            &spec("symmetric:4@(1 2 3)"),
            small,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            CliError::ProductTooLarge {
                left: 6,
                right: 8,
                bound: 30
            }
        ));
        assert_eq!(err.exit_status(), ExitStatus::Bound);
    }
}
