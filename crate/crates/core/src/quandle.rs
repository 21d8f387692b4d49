//! Conjugation quandles `(C, ⋆)` with `a ⋆ b = a b a⁻¹`.

use std::collections::VecDeque;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{split_orbits, Element, FiniteGroup};
use crate::perm::{CycleStructure, Permutation};

/// A conjugation-closed subset of a group.
///
/// The ground set is stored in canonical element order; quandle points are
/// indices into it, and left translations are permutations of those indices.
#[derive(Debug, Clone)]
pub struct ConjugationQuandle {
    group: FiniteGroup,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    actions: Vec<Permutation>,
    generated: OnceLock<FiniteGroup>,
}

/// `L_c`: conjugation by `c` restricted to the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftTranslation {
    pub source: Element,
    pub action: Permutation,
}

impl ConjugationQuandle {
    /// Validates closure under conjugation by every member and every
    /// member's inverse.
    pub fn build(group: &FiniteGroup, subset: &[Element]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptyGround);
        }
        let pres = group.presentation();
        if let Some(bad) = subset.iter().find(|x| !pres.contains(x)) {
            return Err(Error::NotAMember {
                element: format!("{bad:?}"),
                context: group.name().to_string(),
            });
        }
        let mut elements = subset.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let index: HashMap<Element, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();

        let not_closed = |a: &Element, b: &Element| Error::NotClosed {
            a: group.format(a),
            b: group.format(b),
        };
        let mut actions = Vec::with_capacity(elements.len());
        for a in &elements {
            let a_inv = group.inverse(a);
            let mut images = Vec::with_capacity(elements.len());
            for b in &elements {
                let image = index
                    .get(&group.conjugate(a, b))
                    .ok_or_else(|| not_closed(a, b))?;
                if !index.contains_key(&group.conjugate(&a_inv, b)) {
                    return Err(not_closed(a, b));
                }
                images.push(*image);
            }
            actions.push(Permutation::from_images(images).map_err(|_| not_closed(a, a))?);
        }
        Ok(ConjugationQuandle {
            group: group.clone(),
            elements,
            index,
            actions,
            generated: OnceLock::new(),
        })
    }

    /// `Cl_G(e)`: the quandle on the conjugacy class of `e`.
    pub fn of_class(group: &FiniteGroup, e: &Element) -> Result<Self> {
        let class = group.conjugacy_class(e)?;
        Self::build(group, class.members())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `a ⋆ b` on indices.
    pub fn operate(&self, a: usize, b: usize) -> usize {
        self.actions[a].apply(b)
    }

    /// Action of `L_{C[i]}` on indices.
    pub fn action(&self, i: usize) -> &Permutation {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Permutation] {
        &self.actions
    }

    fn require_index(&self, x: &Element) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::NotAMember {
            element: self.group.format(x),
            context: "the quandle".to_string(),
        })
    }

    pub fn left_translation(&self, c: &Element) -> Result<LeftTranslation> {
        let i = self.require_index(c)?;
        Ok(LeftTranslation {
            source: c.clone(),
            action: self.actions[i].clone(),
        })
    }

    /// `H = ⟨C⟩`, generated by the ground set.
    pub fn generated_group(&self) -> &FiniteGroup {
        self.generated
            .get_or_init(|| self.group.generated_subgroup(&self.elements))
    }

    /// Orbit of `start` under all left translations and their inverses.
    pub fn lmlt_orbit(&self, start: &Element) -> Result<Vec<Element>> {
        let start = self.require_index(start)?;
        let inverses: Vec<Permutation> = self.actions.iter().map(Permutation::inverse).collect();
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for perm in self.actions.iter().chain(&inverses) {
                let y = perm.apply(x);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push_back(y);
                }
            }
        }
        Ok(self
            .elements
            .iter()
            .zip(seen)
            .filter(|(_, s)| *s)
            .map(|(x, _)| x.clone())
            .collect())
    }

    /// Transitivity of the left multiplication group.
    pub fn is_connected_direct(&self) -> bool {
        self.lmlt_orbit(&self.elements[0])
            .map(|orbit| orbit.len() == self.len())
            .unwrap_or(false)
    }

    /// Whether the ground set is a single conjugacy class of `⟨C⟩`.
    pub fn is_connected_criterion(&self) -> bool {
        split_orbits(&self.elements, self.generated_group()).len() == 1
    }

    pub fn translation_cycle_structures(&self) -> Vec<(Element, CycleStructure)> {
        self.elements
            .iter()
            .zip(&self.actions)
            .map(|(c, a)| (c.clone(), a.cycle_structure()))
            .collect()
    }

    /// Every left translation has a regular cycle.
    pub fn has_hayashi_property(&self) -> bool {
        self.actions
            .iter()
            .all(|a| a.cycle_structure().has_regular_cycle())
    }

    /// Order of the group generated by the translation actions inside the
    /// symmetric group on the ground set.
    pub fn lmlt_order(&self, bound: usize) -> Result<usize> {
        let identity = Permutation::identity(self.len());
        let mut seen: HashSet<Permutation> = std::iter::once(identity.clone()).collect();
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for a in &self.actions {
                let y = a * &x;
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.len())
    }

    /// `C₁ × C₂` over `G₁ × G₂` with the componentwise operation.
    ///
    /// Products larger than the enumeration bound of the product group are
    /// rejected.
    pub fn product(&self, other: &ConjugationQuandle) -> Result<ConjugationQuandle> {
        let group = self.group.direct_product(&other.group);
        let size = self.len().saturating_mul(other.len());
        if size > group.bound() {
            return Err(Error::BoundExceeded {
                bound: group.bound(),
            });
        }
        let elements: Vec<Element> = self
            .elements
            .iter()
            .flat_map(|a| {
                other
                    .elements
                    .iter()
                    .map(move |b| Element::pair(a.clone(), b.clone()))
            })
            .collect();
        ConjugationQuandle::build(&group, &elements)
    }
}
