//! Permutations of `{1..n}` and their cycle structures.
//!
//! Points are 0-based in the API that takes `usize` indices (`apply`,
//! `from_images`) and 1-based in cycle notation and in error messages.
//!
//! Composition applies the right operand first: `compose(p, q)` maps `x` to
//! `p(q(x))`, and so does `&p * &q`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection on `{1..degree}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::PointOutOfRange {
                    point: img + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::NotABijection);
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation from 1-based cycles over `{1..degree}`.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &point in cycle {
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if std::mem::replace(&mut used[point - 1], true) {
                    return Err(Error::RepeatedPoint { point });
                }
            }
            for (i, &point) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[point - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// The transposition swapping two 0-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        images.swap(a, b);
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `g x g⁻¹`, with `self` as `g`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        self.check_degree(x)?;
        Ok(self.conjugate_unchecked(x))
    }

    /// `g x g⁻¹` computed as the relabeling `g(i) ↦ g(x(i))`.
    pub(crate) fn conjugate_unchecked(&self, x: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), x.degree());
        let mut images = vec![0u32; self.degree()];
        for (i, &xi) in x.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[xi as usize];
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `self^k` for any integer `k`, computed cycle by cycle.
    pub fn power(&self, k: i64) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (i, &point) in cycle.iter().enumerate() {
                images[point] = cycle[(i + shift) % cycle.len()] as u32;
            }
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Least common multiple of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u64`.
    pub fn order(&self) -> u64 {
        self.cycle_structure()
            .lengths()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.cycles().count();
        if (self.degree() - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// All cycles including fixed points, 0-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Cycles<'_> {
        Cycles {
            perm: self,
            seen: vec![false; self.degree()],
            next: 0,
        }
    }

    /// Length of the cycle through a 0-based point.
    pub fn cycle_length_of(&self, point: usize) -> usize {
        let mut len = 1;
        let mut x = self.apply(point);
        while x != point {
            x = self.apply(x);
            len += 1;
        }
        len
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        CycleStructure::from_lengths(self.cycles().map(|c| c.len()))
    }

    /// Points moved by the permutation, 0-based.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|i| self.apply(other.apply(i)) == other.apply(self.apply(i)))
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

pub struct Cycles<'a> {
    perm: &'a Permutation,
    seen: Vec<bool>,
    next: usize,
}

impl Iterator for Cycles<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while self.next < self.seen.len() && self.seen[self.next] {
            self.next += 1;
        }
        if self.next >= self.seen.len() {
            return None;
        }
        let start = self.next;
        let mut cycle = vec![start];
        self.seen[start] = true;
        let mut x = self.perm.apply(start);
        while x != start {
            self.seen[x] = true;
            cycle.push(x);
            x = self.perm.apply(x);
        }
        Some(cycle)
    }
}

/// Canonical cycle notation: cycles ordered by smallest point, each rotated
/// to start there, fixed points omitted, identity as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// Splits cycle notation into 1-based cycles without range checks.
fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let malformed = |position: usize, message: &str| Error::MalformedCycle {
        position,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let mut saw_any = false;
    let mut saw_empty = false;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b != b'(' {
            return Err(malformed(i, "expected `(`"));
        }
        saw_any = true;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(malformed(i, "unterminated cycle"));
            }
            match bytes[i] {
                b')' => {
                    i += 1;
                    break;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let point: usize = text[start..i]
                        .parse()
                        .map_err(|_| malformed(start, "point does not fit in an integer"))?;
                    if point == 0 {
                        return Err(Error::PointOutOfRange { point, degree: 0 });
                    }
                    cycle.push(point);
                }
                _ => return Err(malformed(i, "expected a point or `)`")),
            }
        }
        if cycle.is_empty() {
            saw_empty = true;
        } else {
            cycles.push(cycle);
        }
    }
    if !saw_any {
        return Err(malformed(0, "empty input; write `()` for the identity"));
    }
    if saw_empty && !cycles.is_empty() {
        return Err(malformed(0, "`()` may only stand alone"));
    }
    Ok(cycles)
}

/// The multiset of cycle lengths of a permutation, fixed points included.
///
/// Entries are `(length, multiplicity)` pairs with strictly increasing lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStructure {
    entries: Vec<(usize, usize)>,
}

impl CycleStructure {
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut lengths: Vec<usize> = lengths.into_iter().collect();
        lengths.sort_unstable();
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for len in lengths {
            match entries.last_mut() {
                Some((l, m)) if *l == len => *m += 1,
                _ => entries.push((len, 1)),
            }
        }
        CycleStructure { entries }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Distinct cycle lengths in increasing order.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(l, _)| l)
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&(l, m)| l * m).sum()
    }

    pub fn max_length(&self) -> usize {
        self.entries.last().map_or(1, |&(l, _)| l)
    }

    /// Whether some cycle's length is divisible by every other cycle length,
    /// i.e. every length divides the longest one.
    pub fn has_regular_cycle(&self) -> bool {
        let max = self.max_length();
        self.lengths().all(|l| max.is_multiple_of(l))
    }
}

/// `1^2 3^1` style rendering.
impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}^{m}")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .expect("permutation order overflows u64")
}
