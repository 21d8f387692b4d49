use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{lcm, Permutation};

use super::table::CayleyTable;

/// An element of a concrete group presentation.
///
/// Equality, hashing and ordering are structural. The derived order is the
/// canonical element order used everywhere a deterministic listing is needed:
/// image sequences compare lexicographically, table cells by index, pairs
/// componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Perm(Permutation),
    Cell(u32),
    Pair(Box<(Element, Element)>),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new((a, b)))
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl From<Permutation> for Element {
    fn from(p: Permutation) -> Self {
        Element::Perm(p)
    }
}

/// The multiplication oracle behind a group.
///
/// Methods taking elements panic if handed an element of a different
/// presentation; [`Presentation::contains`] is the checked entry point.
#[derive(Debug, Clone)]
pub enum Presentation {
    Perm { degree: usize },
    Table(Arc<CayleyTable>),
    Product(Arc<(Presentation, Presentation)>),
}

impl Presentation {
    pub fn product(left: Presentation, right: Presentation) -> Self {
        Presentation::Product(Arc::new((left, right)))
    }

    pub fn identity(&self) -> Element {
        match self {
            Presentation::Perm { degree } => Element::Perm(Permutation::identity(*degree)),
            Presentation::Table(_) => Element::Cell(0),
            Presentation::Product(parts) => Element::pair(parts.0.identity(), parts.1.identity()),
        }
    }

    /// Structural membership: right kind, right degree, index in range.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (Presentation::Perm { degree }, Element::Perm(p)) => p.degree() == *degree,
            (Presentation::Table(t), Element::Cell(i)) => (*i as usize) < t.len(),
            (Presentation::Product(parts), Element::Pair(xs)) => {
                parts.0.contains(&xs.0) && parts.1.contains(&xs.1)
            }
            _ => false,
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Presentation::Perm { .. }, Element::Perm(p), Element::Perm(q)) => Element::Perm(p * q),
            (Presentation::Table(t), Element::Cell(i), Element::Cell(j)) => {
                Element::Cell(t.mul(*i, *j))
            }
            (Presentation::Product(parts), Element::Pair(x), Element::Pair(y)) => {
                Element::pair(parts.0.mul(&x.0, &y.0), parts.1.mul(&x.1, &y.1))
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    pub fn inverse(&self, a: &Element) -> Element {
        match (self, a) {
            (Presentation::Perm { .. }, Element::Perm(p)) => Element::Perm(p.inverse()),
            (Presentation::Table(t), Element::Cell(i)) => Element::Cell(t.inverse(*i)),
            (Presentation::Product(parts), Element::Pair(x)) => {
                Element::pair(parts.0.inverse(&x.0), parts.1.inverse(&x.1))
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: &Element, x: &Element) -> Element {
        match (self, g, x) {
            (Presentation::Perm { .. }, Element::Perm(g), Element::Perm(x)) => {
                Element::Perm(g.conjugate_unchecked(x))
            }
            (Presentation::Table(t), Element::Cell(g), Element::Cell(x)) => {
                Element::Cell(t.mul(t.mul(*g, *x), t.inverse(*g)))
            }
            (Presentation::Product(parts), Element::Pair(g), Element::Pair(x)) => {
                Element::pair(parts.0.conjugate(&g.0, &x.0), parts.1.conjugate(&g.1, &x.1))
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    pub fn commute(&self, a: &Element, b: &Element) -> bool {
        match (self, a, b) {
            (Presentation::Perm { .. }, Element::Perm(p), Element::Perm(q)) => p.commutes_with(q),
            (Presentation::Table(t), Element::Cell(i), Element::Cell(j)) => {
                t.mul(*i, *j) == t.mul(*j, *i)
            }
            (Presentation::Product(parts), Element::Pair(x), Element::Pair(y)) => {
                parts.0.commute(&x.0, &y.0) && parts.1.commute(&x.1, &y.1)
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    pub fn is_identity(&self, a: &Element) -> bool {
        match a {
            Element::Perm(p) => p.is_identity(),
            Element::Cell(i) => *i == 0,
            Element::Pair(x) => {
                let Presentation::Product(parts) = self else {
                    panic!("element does not belong to this presentation");
                };
                parts.0.is_identity(&x.0) && parts.1.is_identity(&x.1)
            }
        }
    }

    pub fn order(&self, a: &Element) -> u64 {
        match (self, a) {
            (_, Element::Perm(p)) => p.order(),
            (Presentation::Table(t), Element::Cell(i)) => t.order(*i),
            (Presentation::Product(parts), Element::Pair(x)) => {
                lcm(parts.0.order(&x.0), parts.1.order(&x.1))
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    /// `a^k` for any integer `k`.
    pub fn power(&self, a: &Element, k: i64) -> Element {
        match (self, a) {
            (_, Element::Perm(p)) => Element::Perm(p.power(k)),
            (Presentation::Table(t), Element::Cell(i)) => Element::Cell(t.power(*i, k)),
            (Presentation::Product(parts), Element::Pair(x)) => {
                Element::pair(parts.0.power(&x.0, k), parts.1.power(&x.1, k))
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    /// Number of `|`-separated components in element notation.
    pub fn components(&self) -> usize {
        match self {
            Presentation::Product(parts) => parts.0.components() + parts.1.components(),
            _ => 1,
        }
    }

    /// Cycle notation for permutations, 1-based index for table cells,
    /// components joined by ` | ` for products.
    pub fn format(&self, a: &Element) -> String {
        let mut out = String::new();
        self.write_element(&mut out, a);
        out
    }

    fn write_element(&self, out: &mut String, a: &Element) {
        match (self, a) {
            (Presentation::Product(parts), Element::Pair(x)) => {
                parts.0.write_element(out, &x.0);
                out.push_str(" | ");
                parts.1.write_element(out, &x.1);
            }
            (_, Element::Perm(p)) => {
                let _ = write!(out, "{p}");
            }
            (_, Element::Cell(i)) => {
                let _ = write!(out, "{}", i + 1);
            }
            _ => panic!("element does not belong to this presentation"),
        }
    }

    /// Inverse of [`Presentation::format`].
    pub fn parse(&self, text: &str) -> Result<Element> {
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() != self.components() {
            return Err(Error::ElementSyntax {
                text: text.to_string(),
                message: format!(
                    "expected {} `|`-separated component(s), found {}",
                    self.components(),
                    parts.len()
                ),
            });
        }
        self.parse_parts(&parts)
    }

    fn parse_parts(&self, parts: &[&str]) -> Result<Element> {
        match self {
            Presentation::Perm { degree } => {
                Ok(Element::Perm(Permutation::parse(parts[0], *degree)?))
            }
            Presentation::Table(t) => {
                let text = parts[0].trim();
                let index: usize = text.parse().map_err(|_| Error::ElementSyntax {
                    text: text.to_string(),
                    message: "expected a 1-based table index".to_string(),
                })?;
                if index == 0 || index > t.len() {
                    return Err(Error::PointOutOfRange {
                        point: index,
                        degree: t.len(),
                    });
                }
                Ok(Element::Cell(index as u32 - 1))
            }
            Presentation::Product(pair) => {
                let split = pair.0.components();
                Ok(Element::pair(
                    pair.0.parse_parts(&parts[..split])?,
                    pair.1.parse_parts(&parts[split..])?,
                ))
            }
        }
    }
}
