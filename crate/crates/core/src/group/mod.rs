//! Finite groups given by generators over a concrete presentation.
//!
//! Class and subgroup questions are answered by breadth-first orbit and
//! closure searches keyed on structural element equality. Full enumeration
//! happens only where an operation needs the whole element list, and is
//! capped by the group's enumeration bound.

mod catalog;
mod element;
mod file;
mod table;

use std::collections::VecDeque;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use std::sync::{Arc, OnceLock};

pub use catalog::{survey_catalog, CatalogSpec};
pub use element::{Element, Presentation};
pub use file::parse_group_file;
pub use table::CayleyTable;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_BOUND: usize = 20_000;

/// Where a group came from. Used to pick specialised decision procedures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of order `2n`, stored as `n`.
    Dihedral(usize),
    Cyclic(usize),
    Product,
    Subgroup,
    File,
    Custom,
}

#[derive(Debug)]
struct ElementSet {
    sorted: Vec<Element>,
    members: HashSet<Element>,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    family: Family,
    presentation: Presentation,
    generators: Vec<Element>,
    bound: usize,
    // Shared between clones; `None` records that enumeration hit the bound.
    elements: Arc<OnceLock<Option<Arc<ElementSet>>>>,
}

/// A conjugacy class: the orbit of `representative` under conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    representative: Element,
    members: Vec<Element>,
}

impl ConjClass {
    pub fn representative(&self) -> &Element {
        &self.representative
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.members.binary_search(x).is_ok()
    }
}

impl FiniteGroup {
    pub fn new(
        name: impl Into<String>,
        family: Family,
        presentation: Presentation,
        generators: Vec<Element>,
        bound: usize,
    ) -> Result<Self> {
        let name = name.into();
        for g in &generators {
            if !presentation.contains(g) {
                return Err(Error::NotAMember {
                    element: format!("{g:?}"),
                    context: name,
                });
            }
        }
        Ok(FiniteGroup {
            name,
            family,
            presentation,
            generators,
            bound,
            elements: Arc::default(),
        })
    }

    /// A permutation group of the given degree.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        bound: usize,
    ) -> Result<Self> {
        FiniteGroup::new(
            name,
            Family::Custom,
            Presentation::Perm { degree },
            generators.into_iter().map(Element::Perm).collect(),
            bound,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Same group with a different enumeration bound and a fresh cache.
    pub fn with_bound(&self, bound: usize) -> Self {
        FiniteGroup {
            bound,
            elements: Arc::default(),
            ..self.clone()
        }
    }

    pub(crate) fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn identity(&self) -> Element {
        self.presentation.identity()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.presentation.mul(a, b)
    }

    pub fn inverse(&self, a: &Element) -> Element {
        self.presentation.inverse(a)
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: &Element, x: &Element) -> Element {
        self.presentation.conjugate(g, x)
    }

    pub fn element_order(&self, a: &Element) -> u64 {
        self.presentation.order(a)
    }

    pub fn power(&self, a: &Element, k: i64) -> Element {
        self.presentation.power(a, k)
    }

    pub fn format(&self, a: &Element) -> String {
        self.presentation.format(a)
    }

    /// Parses element notation; does not check membership in the subgroup.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.presentation.parse(text)
    }

    fn enumerated(&self) -> Result<&Arc<ElementSet>> {
        self.elements
            .get_or_init(|| self.close().map(Arc::new))
            .as_ref()
            .ok_or(Error::BoundExceeded { bound: self.bound })
    }

    fn close(&self) -> Option<ElementSet> {
        let identity = self.identity();
        let mut members: HashSet<Element> = std::iter::once(identity.clone()).collect();
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = self.mul(&x, g);
                if !members.contains(&y) {
                    if members.len() >= self.bound {
                        return None;
                    }
                    members.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut sorted: Vec<Element> = members.iter().cloned().collect();
        sorted.sort_unstable();
        Some(ElementSet { sorted, members })
    }

    /// All elements in canonical order; memoized.
    pub fn elements(&self) -> Result<&[Element]> {
        Ok(&self.enumerated()?.sorted)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.enumerated()?.sorted.len())
    }

    /// Membership in the generated subgroup; requires enumeration.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        if !self.presentation.contains(x) {
            return Ok(false);
        }
        Ok(self.enumerated()?.members.contains(x))
    }

    /// Orbit of `e` under conjugation by the generators.
    pub fn conjugacy_class(&self, e: &Element) -> Result<ConjClass> {
        let mut members: Vec<Element> = self.class_with_transporters(e)?.into_keys().collect();
        members.sort_unstable();
        Ok(ConjClass {
            representative: e.clone(),
            members,
        })
    }

    /// Every class member `c` mapped to some `g` with `g e g⁻¹ = c`.
    pub fn class_with_transporters(&self, e: &Element) -> Result<HashMap<Element, Element>> {
        self.check_member(e)?;
        let mut found: HashMap<Element, Element> =
            std::iter::once((e.clone(), self.identity())).collect();
        let mut queue = VecDeque::from([e.clone()]);
        while let Some(x) = queue.pop_front() {
            let gx = found[&x].clone();
            for g in &self.generators {
                let y = self.conjugate(g, &x);
                if !found.contains_key(&y) {
                    if found.len() >= self.bound {
                        return Err(Error::BoundExceeded { bound: self.bound });
                    }
                    found.insert(y.clone(), self.mul(g, &gx));
                    queue.push_back(y);
                }
            }
        }
        Ok(found)
    }

    /// All conjugacy classes, each represented by its canonically least
    /// member, ordered by representative.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClass>> {
        let elements = self.elements()?;
        let mut assigned: HashSet<Element> = HashSet::default();
        let mut classes = Vec::new();
        for e in elements {
            if assigned.contains(e) {
                continue;
            }
            let class = self.conjugacy_class(e)?;
            assigned.extend(class.members.iter().cloned());
            classes.push(class);
        }
        Ok(classes)
    }

    /// `⟨S⟩` with `S` as its generator list; nothing is enumerated yet.
    pub fn generated_subgroup(&self, subset: &[Element]) -> FiniteGroup {
        FiniteGroup {
            name: format!("<{} elements of {}>", subset.len(), self.name),
            family: Family::Subgroup,
            presentation: self.presentation.clone(),
            generators: subset.to_vec(),
            bound: self.bound,
            elements: Arc::default(),
        }
    }

    /// Whether `x` lies in the centralizer of `z`.
    pub fn centralizer_contains(&self, z: &Element, x: &Element) -> bool {
        self.presentation.commute(z, x)
    }

    /// Whether `x` commutes with every generator, hence with the whole group.
    pub fn is_central(&self, x: &Element) -> bool {
        self.generators
            .iter()
            .all(|g| self.presentation.commute(g, x))
    }

    pub fn center(&self) -> Result<Vec<Element>> {
        Ok(self
            .elements()?
            .iter()
            .filter(|x| self.is_central(x))
            .cloned()
            .collect())
    }

    /// `(c⁰, c¹, …, c^{ord(c)-1})`.
    pub fn cyclic_subgroup(&self, c: &Element) -> Vec<Element> {
        let mut powers = vec![self.identity()];
        let mut x = c.clone();
        while !self.presentation.is_identity(&x) {
            let next = self.mul(&x, c);
            powers.push(x);
            x = next;
        }
        powers
    }

    /// Componentwise product with generators `(g, 1)` and `(1, h)`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (e1, e2) = (self.identity(), other.identity());
        let generators = self
            .generators
            .iter()
            .map(|g| Element::pair(g.clone(), e2.clone()))
            .chain(
                other
                    .generators
                    .iter()
                    .map(|h| Element::pair(e1.clone(), h.clone())),
            )
            .collect();
        FiniteGroup {
            name: format!("{} x {}", self.name, other.name),
            family: Family::Product,
            presentation: Presentation::product(
                self.presentation.clone(),
                other.presentation.clone(),
            ),
            generators,
            bound: self.bound.max(other.bound),
            elements: Arc::default(),
        }
    }

    fn check_member(&self, e: &Element) -> Result<()> {
        if self.presentation.contains(e) {
            Ok(())
        } else {
            Err(Error::NotAMember {
                element: format!("{e:?}"),
                context: self.name.clone(),
            })
        }
    }
}

/// Splits a class into orbits under conjugation by the generators of `h`.
///
/// Blocks are listed by their least member; members within a block are in
/// canonical order.
pub fn split_class_in_subgroup(class: &ConjClass, h: &FiniteGroup) -> Vec<Vec<Element>> {
    split_orbits(class.members(), h)
}

/// Orbits of a sorted, conjugation-closed set under the generators of `h`.
///
/// Panics if conjugation by a generator leaves the set.
pub fn split_orbits(members: &[Element], h: &FiniteGroup) -> Vec<Vec<Element>> {
    let mut block_of: Vec<Option<usize>> = vec![None; members.len()];
    let mut blocks: Vec<Vec<Element>> = Vec::new();
    for start in 0..members.len() {
        if block_of[start].is_some() {
            continue;
        }
        let id = blocks.len();
        block_of[start] = Some(id);
        let mut block = vec![start];
        let mut cursor = 0;
        while cursor < block.len() {
            let x = &members[block[cursor]];
            cursor += 1;
            for g in h.generators() {
                let y = h.conjugate(g, x);
                let Ok(i) = members.binary_search(&y) else {
                    panic!("set is not closed under conjugation by the subgroup");
                };
                if block_of[i].is_none() {
                    block_of[i] = Some(id);
                    block.push(i);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block.into_iter().map(|i| members[i].clone()).collect());
    }
    blocks
}
