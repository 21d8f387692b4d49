//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs under `cargo test --workspace`; select it alone with
//! `cargo test -p conjq-cli --test acceptance`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use conjq_cli::{cmd_check, cmd_survey, CheckOptions, ExitStatus, GroupSource, SurveyConfig};
use conjq_core::checks::{
    commutation_transcript, conjecture2_check, corollary6_audit, dihedral_goodness, good_class,
    is_prime_power, lemma3_crosscheck, lemma4_cardinality, product_cycle_lcm, witness_bruteforce,
    witness_sym, Verdict,
};
use conjq_core::group::{survey_catalog, CatalogSpec, DEFAULT_BOUND};
use conjq_core::{ConjugationQuandle, Element, FiniteGroup, Parity, Permutation};

type Check = Result<String, String>;

/// (number, name, time limit in seconds, check)
type Criterion = (u8, &'static str, Option<u64>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn catalog_groups(max_order: usize) -> Vec<(CatalogSpec, FiniteGroup)> {
    survey_catalog(max_order)
        .into_iter()
        .map(|s| {
            let g = s.build(DEFAULT_BOUND).expect("catalog groups build");
            (s, g)
        })
        .collect()
}

fn c1_example_one() -> Check {
    let opts = CheckOptions::default();
    let source = |s: &str| GroupSource::Catalog(s.parse().unwrap());
    let s5 = cmd_check(&source("symmetric:5"), "(1 2 3)", opts).map_err(err)?;
    let r = &s5.envelope.report;
    ensure(
        r["connected_direct"] == true && r["connected_criterion"] == true,
        || format!("S5: connected = {}", r["connected_direct"]),
    )?;
    ensure(r["generated_order"] == 60, || {
        format!("S5: |<C>| = {}", r["generated_order"])
    })?;
    let s4 = cmd_check(&source("symmetric:4"), "(1 2 3)", opts).map_err(err)?;
    let r = &s4.envelope.report;
    ensure(
        r["connected_direct"] == false && r["connected_criterion"] == false,
        || format!("S4: connected = {}", r["connected_direct"]),
    )?;
    ensure(r["blocks"] == serde_json::json!([4, 4]), || {
        format!("S4 blocks {}", r["blocks"])
    })?;
    ensure(r["generated_order"] == 12, || {
        format!("S4: |<C>| = {}", r["generated_order"])
    })?;
    Ok("S5: connected, |<C>| = 60; S4: not connected, blocks [4, 4] under A4".into())
}

fn c2_connectedness_criterion() -> Check {
    let (mut quandles, mut disagreements) = (0, 0);
    let groups = catalog_groups(360);
    for (_, g) in &groups {
        for class in g.conjugacy_classes().map_err(err)? {
            let q = ConjugationQuandle::build(g, class.members()).map_err(err)?;
            quandles += 1;
            disagreements += usize::from(q.is_connected_direct() != q.is_connected_criterion());
        }
    }
    ensure(disagreements == 0, || {
        format!("{disagreements} disagreements")
    })?;
    Ok(format!(
        "{} groups, {quandles} class quandles, 0 disagreements",
        groups.len()
    ))
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn c3_corollary6() -> Check {
    let groups = catalog_groups(360);
    let mut classes = 0;
    for (spec, g) in &groups {
        for class in g.conjugacy_classes().map_err(err)? {
            corollary6_audit(g, class.representative()).map_err(|e| format!("{spec}: {e}"))?;
            classes += 1;
        }
    }
    let mut perms = 0;
    for n in 1..=7 {
        for images in all_perms(n) {
            let p = Permutation::from_images(images).map_err(err)?;
            lemma3_crosscheck(&p).map_err(err)?;
            perms += 1;
        }
    }
    Ok(format!("{classes} classes in {} groups agree; regular cycle = trivial-stabilizer point on {perms} permutations", groups.len()))
}

fn c4_goodness_survey() -> Check {
    let names = vec!["standard".to_string()];
    let config = SurveyConfig::new(&names, 500, DEFAULT_BOUND).map_err(err)?;
    let required = [
        "symmetric:3",
        "symmetric:4",
        "symmetric:5",
        "alternating:4",
        "alternating:5",
        "dihedral:500",
        "cyclic:500",
    ];
    let specs: Vec<String> = survey_catalog(500).iter().map(|s| s.to_string()).collect();
    for name in required {
        ensure(specs.iter().any(|s| s == name), || {
            format!("{name} missing from the catalog")
        })?;
    }
    let out = cmd_survey(&config).map_err(err)?;
    let s = &out.envelope.report["summary"];
    ensure(out.status == ExitStatus::Ok, || {
        format!("survey summary {s}")
    })?;
    ensure(s["good"] == s["classes"], || format!("survey summary {s}"))?;
    Ok(format!(
        "{} groups, {} classes, all good",
        s["groups"], s["classes"]
    ))
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn with_cycle_type(parts: &[usize]) -> Permutation {
    let n = parts.iter().sum();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).unwrap()
}

fn c5_sym_witness() -> Check {
    let (mut constructed, mut brute) = (0, 0);
    for n in 5..=9 {
        let sym = (n <= 7).then(|| CatalogSpec::Symmetric(n).build(DEFAULT_BOUND).unwrap());
        for parts in partitions(n, n) {
            let e = with_cycle_type(&parts);
            let w = witness_sym(&e, n).map_err(err)?;
            ensure(w.sigma.parity() == Parity::Even, || {
                format!("{e}: odd sigma")
            })?;
            // independent oracle: every 0 < k < ord(e)
            let mut ek = e.clone();
            for k in 1..e.order() {
                ensure(&ek * &w.z != &w.z * &ek, || {
                    format!("{e}: z commutes with e^{k}")
                })?;
                ek = &ek * &e;
            }
            ensure(commutation_transcript(&e, &w.z).is_ok(), || {
                format!("{e}: transcript")
            })?;
            constructed += 1;
            if let Some(g) = &sym {
                let x = Element::Perm(e.clone());
                let class = g.conjugacy_class(&x).map_err(err)?;
                let h = g.generated_subgroup(class.members());
                ensure(witness_bruteforce(&x, &class, g, &h).is_some(), || {
                    format!("{e}: no brute-force witness in S{n}")
                })?;
                brute += 1;
            }
        }
    }
    Ok(format!(
        "{constructed} cycle types for n = 5..9; brute force confirmed {brute} (n <= 7)"
    ))
}

fn c6_dihedral() -> Check {
    let mut classes = 0;
    for n in 3..=64 {
        let reports = dihedral_goodness(n).map_err(|e| format!("D{}: {e}", 2 * n))?;
        for r in &reports {
            ensure(r.verdict == Verdict::Good, || {
                format!("D{}: a class is not good", 2 * n)
            })?;
        }
        classes += reports.len();
    }
    Ok(format!(
        "D6..D128: {classes} classes good, shortcut = brute force"
    ))
}

fn c7_prime_power() -> Check {
    let (mut checked, mut exceptions) = (0, 0);
    for (spec, g) in catalog_groups(500) {
        for class in g.conjugacy_classes().map_err(err)? {
            if class.len() > 500 || !is_prime_power(g.element_order(class.representative())) {
                continue;
            }
            let q = ConjugationQuandle::build(&g, class.members()).map_err(err)?;
            let t = q.left_translation(class.representative()).map_err(err)?;
            checked += 1;
            if !t.action.cycle_structure().has_regular_cycle() {
                exceptions += 1;
                eprintln!(
                    "  exception: {} in {spec}",
                    g.format(class.representative())
                );
            }
        }
    }
    ensure(exceptions == 0, || format!("{exceptions} exceptions"))?;
    Ok(format!("{checked} prime-power classes, 0 exceptions"))
}

fn c8_products() -> Check {
    let mut pool = Vec::new();
    for (_, g) in catalog_groups(60) {
        for class in g.conjugacy_classes().map_err(err)? {
            let q = ConjugationQuandle::build(&g, class.members()).map_err(err)?;
            // singletons make the product check trivial
            if q.len() > 1 && q.has_hayashi_property() {
                pool.push(q);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tested = 0;
    while tested < 50 {
        let a = pool.choose(&mut rng).unwrap();
        let b = pool.choose(&mut rng).unwrap();
        if a.len() * b.len() > 400 {
            continue;
        }
        let p = a.product(b).map_err(err)?;
        ensure(p.has_hayashi_property(), || {
            format!("product of sizes {} and {} fails", a.len(), b.len())
        })?;
        ensure(product_cycle_lcm(a, b, &p).map_err(err)?, || {
            "cycle length is not the lcm".into()
        })?;
        tested += 1;
    }
    Ok(format!(
        "50 seeded pairs from {} nontrivial Hayashi quandles, products of size <= 400",
        pool.len()
    ))
}

fn c9_lemma4() -> Check {
    let mut specs = survey_catalog(500);
    specs.extend(
        [
            "symmetric:6",
            "dihedral:1000",
            "alternating:5*cyclic:20",
            "symmetric:4*symmetric:4*cyclic:3",
        ]
        .map(|s| s.parse().unwrap()),
    );
    let (mut checked, mut skipped) = (0, 0);
    for spec in &specs {
        let g = spec.build(DEFAULT_BOUND).map_err(err)?;
        for class in g.conjugacy_classes().map_err(err)? {
            let q = ConjugationQuandle::build(&g, class.members()).map_err(err)?;
            if q.generated_group().order().map_err(err)? > 2000 {
                skipped += 1;
                continue;
            }
            let card = lemma4_cardinality(&q).map_err(err)?;
            ensure(card.holds(), || {
                format!(
                    "{spec}, class of {}: {card:?}",
                    g.format(class.representative())
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} class quandles in {} groups ({skipped} with |<C>| > 2000 skipped)",
        specs.len()
    ))
}

fn c10_simple_groups() -> Check {
    let mut classes = 0;
    for n in [5, 6] {
        let g = CatalogSpec::Alternating(n)
            .build(DEFAULT_BOUND)
            .map_err(err)?;
        for class in g.conjugacy_classes().map_err(err)? {
            if class.len() == 1 {
                continue;
            }
            let rep = g.format(class.representative());
            let q = ConjugationQuandle::build(&g, class.members()).map_err(err)?;
            ensure(q.is_connected_direct(), || {
                format!("A{n}, {rep}: not connected")
            })?;
            ensure(q.has_hayashi_property(), || {
                format!("A{n}, {rep}: not Hayashi")
            })?;
            ensure(good_class(&g, &class).verdict == Verdict::Good, || {
                format!("A{n}, {rep}: not good")
            })?;
            ensure(conjecture2_check(&g, &class).map_err(err)?, || {
                format!("A{n}, {rep}: conjecture check")
            })?;
            classes += 1;
        }
    }
    Ok(format!(
        "{classes} nontrivial classes of A5 and A6: connected, good, Hayashi"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "three-cycle classes of S5 and S4",
            Some(1),
            c1_example_one,
        ),
        (
            2,
            "connectedness criterion cross-check",
            Some(60),
            c2_connectedness_criterion,
        ),
        (
            3,
            "four-condition audit, regular-cycle equivalence",
            Some(120),
            c3_corollary6,
        ),
        (
            4,
            "goodness survey, order <= 500",
            Some(300),
            c4_goodness_survey,
        ),
        (5, "Sn/An constructive witness", Some(120), c5_sym_witness),
        (6, "dihedral goodness", Some(60), c6_dihedral),
        (7, "prime-power regular cycles", None, c7_prime_power),
        (8, "product preservation", None, c8_products),
        (9, "translation-group cardinality", None, c9_lemma4),
        (10, "simple-group spot check", Some(60), c10_simple_groups),
    ];
    let mut failed = 0;
    for (number, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {}s limit", limit.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(status == "FAIL");
        let limit = limit.map_or("none".to_string(), |s| format!("{s}s"));
        println!(
            "{status} [{number:>2}] {name}: {detail} ({:.2}s, limit {limit})",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
