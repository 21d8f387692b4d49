//! Cross-checks between equivalent characterizations.

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::perm::{lcm, Permutation};
use crate::quandle::ConjugationQuandle;

use super::goodness::{centralizer_criterion, good_class, Verdict};

/// Whether no nontrivial power of `pi` below its order fixes the 1-based
/// point `z`.
pub fn stabilizer_trivial_at(pi: &Permutation, z: usize) -> Result<bool> {
    if z == 0 || z > pi.degree() {
        return Err(Error::PointOutOfRange {
            point: z,
            degree: pi.degree(),
        });
    }
    let start = z - 1;
    let mut x = start;
    for _ in 1..pi.order() {
        x = pi.apply(x);
        if x == start {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regular cycle from the cycle structure, checked against the existence of
/// a point with trivial stabilizer in `⟨pi⟩`.
pub fn lemma3_crosscheck(pi: &Permutation) -> Result<bool> {
    let structural = pi.cycle_structure().has_regular_cycle();
    let mut pointwise = false;
    for z in 1..=pi.degree() {
        if stabilizer_trivial_at(pi, z)? {
            pointwise = true;
            break;
        }
    }
    if structural != pointwise {
        return Err(Error::EquivalenceViolation {
            detail: format!(
                "{pi}: regular cycle = {structural}, trivial stabilizer point = {pointwise}"
            ),
        });
    }
    Ok(structural)
}

/// The four equivalent conditions on `Cl_G(e)`, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceAudit {
    pub representative: Element,
    pub class_size: usize,
    /// Some left translation has a regular cycle.
    pub some_translation_regular: bool,
    /// Some pair `(c, z)` satisfies the centralizer criterion in `⟨C⟩`.
    pub some_pair_criterion: bool,
    /// Every `c` has a witness `z`.
    pub every_member_criterion: bool,
    /// Every left translation has a regular cycle.
    pub hayashi: bool,
    /// Each translation passed [`lemma3_crosscheck`].
    pub lemma3_consistent: bool,
    pub agreement: bool,
}

pub fn corollary6_audit(g: &FiniteGroup, e: &Element) -> Result<EquivalenceAudit> {
    let class = g.conjugacy_class(e)?;
    let quandle = ConjugationQuandle::build(g, class.members())?;
    let h = quandle.generated_group();

    let mut lemma3_consistent = true;
    let mut regular = Vec::with_capacity(quandle.len());
    for action in quandle.actions() {
        match lemma3_crosscheck(action) {
            Ok(r) => regular.push(r),
            Err(_) => {
                lemma3_consistent = false;
                regular.push(action.cycle_structure().has_regular_cycle());
            }
        }
    }
    let some_translation_regular = regular.iter().any(|&r| r);
    let hayashi = quandle.has_hayashi_property();

    let some_pair_criterion = class.members().iter().any(|c| {
        class
            .members()
            .iter()
            .any(|z| centralizer_criterion(c, z, h))
    });
    let every_member_criterion = good_class(g, &class).verdict == Verdict::Good;

    let values = [
        some_translation_regular,
        some_pair_criterion,
        every_member_criterion,
        hayashi,
    ];
    let agreement = lemma3_consistent && values.iter().all(|&v| v == values[0]);
    let audit = EquivalenceAudit {
        representative: e.clone(),
        class_size: class.len(),
        some_translation_regular,
        some_pair_criterion,
        every_member_criterion,
        hayashi,
        lemma3_consistent,
        agreement,
    };
    if !agreement {
        return Err(Error::EquivalenceViolation {
            detail: format!("class of {} in {}: {audit:?}", g.format(e), g.name()),
        });
    }
    Ok(audit)
}

/// `|LMlt(C)|` against `|H| / |Z(H)|` for `H = ⟨C⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerCardinality {
    pub lmlt_order: usize,
    pub generated_order: usize,
    pub center_order: usize,
}

impl InnerCardinality {
    pub fn holds(&self) -> bool {
        self.center_order * self.lmlt_order == self.generated_order
    }
}

pub fn lemma4_cardinality(quandle: &ConjugationQuandle) -> Result<InnerCardinality> {
    let h = quandle.generated_group();
    let generated_order = h.order()?;
    let center_order = h.center()?.len();
    let lmlt_order = quandle.lmlt_order(h.bound())?;
    Ok(InnerCardinality {
        lmlt_order,
        generated_order,
        center_order,
    })
}

/// For every pair `(a, b)` and point `(x, y)` of `product = left × right`,
/// the cycle of `(x, y)` under `L_(a,b)` has length `lcm` of the cycles of
/// `x` under `L_a` and `y` under `L_b`.
pub fn product_cycle_lcm(
    left: &ConjugationQuandle,
    right: &ConjugationQuandle,
    product: &ConjugationQuandle,
) -> Result<bool> {
    let index = |x: &Element| {
        product.index_of(x).ok_or_else(|| Error::NotAMember {
            element: product.group().format(x),
            context: "the product quandle".into(),
        })
    };
    for (i, a) in left.elements().iter().enumerate() {
        for (j, b) in right.elements().iter().enumerate() {
            let pair = index(&Element::pair(a.clone(), b.clone()))?;
            let action = product.action(pair);
            for (x, xe) in left.elements().iter().enumerate() {
                let lx = left.action(i).cycle_length_of(x);
                for (y, ye) in right.elements().iter().enumerate() {
                    let ly = right.action(j).cycle_length_of(y);
                    let point = index(&Element::pair(xe.clone(), ye.clone()))?;
                    if action.cycle_length_of(point) != lcm(lx as u64, ly as u64) as usize {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
