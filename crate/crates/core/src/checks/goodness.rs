//! The good-class criterion.
//!
//! A class `C` is good when every `c ∈ C` has a witness `z ∈ C` such that each
//! power of `c` commuting with `z` is central in `H = ⟨C⟩`. Since `⟨c⟩ ⊆ H`,
//! it makes no difference whether the centralizer of `z` is taken in `H` or
//! in the ambient group.

use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::group::{ConjClass, Element, Family, FiniteGroup};
use crate::perm::Permutation;

use super::witness::witness_sym;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Good,
    NotGood,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Exhaustive witness search for every class member.
    BruteForce,
    /// Representative of prime-power order; witness from a longest cycle of
    /// its left translation, transported to the rest of the class.
    PrimePowerShortcut,
    /// Explicit `Sₙ`/`Aₙ` construction for the representative, transported.
    SymConstruction,
    /// Class of at most two elements, whose translations are trivial.
    SmallClass,
    /// Exhaustive search for the representative only, transported.
    Transported,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::PrimePowerShortcut => "prime_power_shortcut",
            Method::SymConstruction => "sym_construction",
            Method::SmallClass => "small_class",
            Method::Transported => "transported",
        }
    }
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Good => "good",
            Verdict::NotGood => "not_good",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodnessReport {
    pub representative: Element,
    pub class_size: usize,
    pub verdict: Verdict,
    pub method: Method,
    /// `(c, z)` for every class member when the verdict is good.
    pub witnesses: Vec<(Element, Element)>,
    /// A member with no witness when the verdict is not good.
    pub failing: Option<Element>,
}

impl GoodnessReport {
    pub fn undecided(representative: Element, method: Method) -> Self {
        GoodnessReport {
            representative,
            class_size: 0,
            verdict: Verdict::Undecided,
            method,
            witnesses: Vec::new(),
            failing: None,
        }
    }
}

/// Powers of `c` with lazily computed centrality in `H`.
struct PowerTable<'a> {
    h: &'a FiniteGroup,
    powers: Vec<Element>,
    central: Vec<OnceCell<bool>>,
    // Centrality of `c` itself makes every power central.
    all_central: bool,
}

impl<'a> PowerTable<'a> {
    fn new(h: &'a FiniteGroup, c: &Element) -> Self {
        let all_central = h.is_central(c);
        let powers = if all_central {
            Vec::new()
        } else {
            h.cyclic_subgroup(c)
        };
        let central = (0..powers.len()).map(|_| OnceCell::new()).collect();
        PowerTable {
            h,
            powers,
            central,
            all_central,
        }
    }

    fn accepts(&self, z: &Element) -> bool {
        if self.all_central {
            return true;
        }
        self.powers.iter().enumerate().skip(1).all(|(k, ck)| {
            !self.h.centralizer_contains(z, ck)
                || *self.central[k].get_or_init(|| self.h.is_central(ck))
        })
    }
}

/// `⟨c⟩ ∩ Cent(z) ≤ Z(H)`: every power of `c` commuting with `z` is central
/// in `h`.
pub fn centralizer_criterion(c: &Element, z: &Element, h: &FiniteGroup) -> bool {
    PowerTable::new(h, c).accepts(z)
}

/// First `z ∈ C`, in canonical order, that witnesses the criterion for `e`.
///
/// `g` supplies the centralizer and `h` the center.
pub fn witness_bruteforce(
    e: &Element,
    class: &ConjClass,
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Option<Element> {
    debug_assert!(g.presentation().contains(e));
    let table = PowerTable::new(h, e);
    class.members().iter().find(|z| table.accepts(z)).cloned()
}

/// Exhaustive check of every class member.
pub fn good_class(g: &FiniteGroup, class: &ConjClass) -> GoodnessReport {
    let h = g.generated_subgroup(class.members());
    let mut witnesses = Vec::with_capacity(class.len());
    for c in class.members() {
        match witness_bruteforce(c, class, g, &h) {
            Some(z) => witnesses.push((c.clone(), z)),
            None => {
                return GoodnessReport {
                    representative: class.representative().clone(),
                    class_size: class.len(),
                    verdict: Verdict::NotGood,
                    method: Method::BruteForce,
                    witnesses: Vec::new(),
                    failing: Some(c.clone()),
                }
            }
        }
    }
    GoodnessReport {
        representative: class.representative().clone(),
        class_size: class.len(),
        verdict: Verdict::Good,
        method: Method::BruteForce,
        witnesses,
        failing: None,
    }
}

/// One exhaustive search for the representative, then `z' = g z g⁻¹` for
/// `c' = g c g⁻¹`, each transported witness re-validated.
pub fn good_class_fast(g: &FiniteGroup, class: &ConjClass) -> Result<GoodnessReport> {
    let h = g.generated_subgroup(class.members());
    let rep = class.representative();
    match witness_bruteforce(rep, class, g, &h) {
        Some(z) => transport(g, class, &h, z, Method::Transported),
        None => Ok(GoodnessReport {
            representative: rep.clone(),
            class_size: class.len(),
            verdict: Verdict::NotGood,
            method: Method::Transported,
            witnesses: Vec::new(),
            failing: Some(rep.clone()),
        }),
    }
}

fn transport(
    g: &FiniteGroup,
    class: &ConjClass,
    h: &FiniteGroup,
    z: Element,
    method: Method,
) -> Result<GoodnessReport> {
    let rep = class.representative();
    let transporters = g.class_with_transporters(rep)?;
    let mut witnesses = Vec::with_capacity(class.len());
    for c in class.members() {
        let t = &transporters[c];
        let zc = g.conjugate(t, &z);
        if !class.contains(&zc) || !centralizer_criterion(c, &zc, h) {
            return Err(Error::EquivalenceViolation {
                detail: format!(
                    "transported witness {} for {} in {} fails the centralizer criterion",
                    g.format(&zc),
                    g.format(c),
                    g.name()
                ),
            });
        }
        witnesses.push((c.clone(), zc));
    }
    Ok(GoodnessReport {
        representative: rep.clone(),
        class_size: class.len(),
        verdict: Verdict::Good,
        method,
        witnesses,
        failing: None,
    })
}

pub fn is_prime_power(n: u64) -> bool {
    if n <= 1 {
        return n == 1;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Order of `c` is `1` or a prime power; then every left translation by `c`
/// has a regular cycle.
pub fn prime_power_shortcut(g: &FiniteGroup, c: &Element) -> bool {
    is_prime_power(g.element_order(c))
}

/// Translation of the class by `c`, as a permutation of class indices.
fn class_translation(g: &FiniteGroup, class: &ConjClass, c: &Element) -> Permutation {
    let images = class
        .members()
        .iter()
        .map(|x| {
            class
                .members()
                .binary_search(&g.conjugate(c, x))
                .expect("class is closed under conjugation by its members")
        })
        .collect();
    Permutation::from_images(images).expect("conjugation is injective")
}

/// A point on a longest cycle of `L_c` has trivial stabilizer in `⟨L_c⟩`
/// whenever `L_c` has a regular cycle.
fn longest_cycle_point(g: &FiniteGroup, class: &ConjClass, c: &Element) -> Element {
    let action = class_translation(g, class, c);
    let longest = action
        .cycles()
        .max_by_key(|cycle| (cycle.len(), std::cmp::Reverse(cycle[0])))
        .expect("class is nonempty");
    class.members()[longest[0]].clone()
}

/// Goodness by the cheapest applicable route: prime-power shortcut, then the
/// `Sₙ`/`Aₙ` construction, then a transported exhaustive search.
pub fn classify_class(g: &FiniteGroup, class: &ConjClass) -> Result<GoodnessReport> {
    let rep = class.representative();
    let h = g.generated_subgroup(class.members());
    if prime_power_shortcut(g, rep) {
        let z = longest_cycle_point(g, class, rep);
        return transport(g, class, &h, z, Method::PrimePowerShortcut);
    }
    if let (Family::Symmetric(n) | Family::Alternating(n), Element::Perm(e)) = (g.family(), rep) {
        if *n >= 5 {
            let z = Element::Perm(witness_sym(e, *n)?.z);
            return transport(g, class, &h, z, Method::SymConstruction);
        }
    }
    good_class_fast(g, class)
}

/// Reports for every class of the dihedral group of order `2n`.
///
/// Classes of elements of order at most two go through the prime-power
/// shortcut, the remaining rotation classes `{oᵏ, o⁻ᵏ}` through the
/// two-element argument. Each verdict is compared with [`good_class`].
pub fn dihedral_goodness(n: usize) -> Result<Vec<GoodnessReport>> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange {
            family: "dihedral".into(),
            detail: format!("n must be at least 3, got {n}"),
        });
    }
    let g = crate::group::CatalogSpec::Dihedral(2 * n).build(crate::group::DEFAULT_BOUND)?;
    let mut reports = Vec::new();
    for class in g.conjugacy_classes()? {
        let rep = class.representative();
        let h = g.generated_subgroup(class.members());
        let report = if g.element_order(rep) <= 2 {
            let z = longest_cycle_point(&g, &class, rep);
            transport(&g, &class, &h, z, Method::PrimePowerShortcut)?
        } else if class.len() <= 2 {
            transport(&g, &class, &h, rep.clone(), Method::SmallClass)?
        } else {
            return Err(Error::EquivalenceViolation {
                detail: format!(
                    "class of {} in {} has {} elements and order {}",
                    g.format(rep),
                    g.name(),
                    class.len(),
                    g.element_order(rep)
                ),
            });
        };
        let brute = good_class(&g, &class);
        if brute.verdict != report.verdict {
            return Err(Error::EquivalenceViolation {
                detail: format!(
                    "shortcut and exhaustive verdicts differ for {} in {}",
                    g.format(rep),
                    g.name()
                ),
            });
        }
        reports.push(report);
    }
    Ok(reports)
}

/// The conjectured instance: for a class generating `g`, the class is good.
pub fn conjecture2_check(g: &FiniteGroup, class: &ConjClass) -> Result<bool> {
    let h = g.generated_subgroup(class.members());
    let (h_order, g_order) = (h.order()?, g.order()?);
    if h_order != g_order {
        return Err(Error::PreconditionFailed {
            detail: format!(
                "the class of {} generates a subgroup of order {h_order}, not all {g_order} elements of {}",
                g.format(class.representative()),
                g.name()
            ),
        });
    }
    Ok(good_class(g, class).verdict == Verdict::Good)
}
