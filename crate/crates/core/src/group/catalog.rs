use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::{Element, Family, FiniteGroup, Presentation};

const MAX_SYMMETRIC_DEGREE: usize = 64;
const MAX_CYCLIC_ORDER: usize = 100_000;

/// A constructible group: `symmetric:n`, `alternating:n`, `dihedral:2n`,
/// `cyclic:n`, or a `*`-separated direct product of those.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CatalogSpec {
    Symmetric(usize),
    Alternating(usize),
    /// Parameter is the group order `2n`.
    Dihedral(usize),
    Cyclic(usize),
    Product(Vec<CatalogSpec>),
}

impl CatalogSpec {
    /// Group order, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        match *self {
            CatalogSpec::Symmetric(n) => factorial(n),
            CatalogSpec::Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            CatalogSpec::Dihedral(order) | CatalogSpec::Cyclic(order) => Some(order as u128),
            CatalogSpec::Product(ref factors) => factors
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let out_of_range = |family: &str, detail: String| {
            Err(Error::ParameterOutOfRange {
                family: family.to_string(),
                detail,
            })
        };
        match *self {
            CatalogSpec::Symmetric(n) | CatalogSpec::Alternating(n)
                if n == 0 || n > MAX_SYMMETRIC_DEGREE =>
            {
                out_of_range(
                    self.family_name(),
                    format!("degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"),
                )
            }
            CatalogSpec::Dihedral(order)
                if order < 6 || order % 2 != 0 || order > 2 * MAX_CYCLIC_ORDER =>
            {
                out_of_range(
                    "dihedral",
                    format!(
                        "order must be even and in 6..={}, got {order}",
                        2 * MAX_CYCLIC_ORDER
                    ),
                )
            }
            CatalogSpec::Cyclic(n) if n == 0 || n > MAX_CYCLIC_ORDER => out_of_range(
                "cyclic",
                format!("order must be in 1..={MAX_CYCLIC_ORDER}, got {n}"),
            ),
            CatalogSpec::Product(ref factors) => {
                if factors.len() < 2 {
                    return out_of_range("product", "needs at least two factors".into());
                }
                factors.iter().try_for_each(CatalogSpec::validate)
            }
            _ => Ok(()),
        }
    }

    fn family_name(&self) -> &'static str {
        match self {
            CatalogSpec::Symmetric(_) => "symmetric",
            CatalogSpec::Alternating(_) => "alternating",
            CatalogSpec::Dihedral(_) => "dihedral",
            CatalogSpec::Cyclic(_) => "cyclic",
            CatalogSpec::Product(_) => "product",
        }
    }

    pub fn build(&self, bound: usize) -> Result<FiniteGroup> {
        self.validate()?;
        let name = self.to_string();
        let perm_group = |degree: usize, gens: Vec<Permutation>, family: Family| {
            FiniteGroup::new(
                name.clone(),
                family,
                Presentation::Perm { degree },
                gens.into_iter().map(Element::Perm).collect(),
                bound,
            )
        };
        match *self {
            CatalogSpec::Symmetric(n) => {
                let mut gens = Vec::new();
                if n >= 2 {
                    gens.push(Permutation::transposition(n, 0, 1));
                }
                if n >= 3 {
                    gens.push(long_cycle(n));
                }
                perm_group(n, gens, Family::Symmetric(n))
            }
            CatalogSpec::Alternating(n) => {
                let gens = (3..=n)
                    .map(|k| Permutation::from_cycles(n, &[[1, 2, k]]).expect("valid 3-cycle"))
                    .collect();
                perm_group(n, gens, Family::Alternating(n))
            }
            CatalogSpec::Dihedral(order) => {
                let n = order / 2;
                let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                let gens = vec![
                    long_cycle(n),
                    Permutation::from_images(reflection).expect("reflection is a bijection"),
                ];
                perm_group(n, gens, Family::Dihedral(n))
            }
            CatalogSpec::Cyclic(n) => {
                let gens = if n >= 2 { vec![long_cycle(n)] } else { vec![] };
                perm_group(n, gens, Family::Cyclic(n))
            }
            CatalogSpec::Product(ref factors) => {
                let mut group = factors[0].build(bound)?;
                for factor in &factors[1..] {
                    group = group.direct_product(&factor.build(bound)?);
                }
                Ok(FiniteGroup { name, ..group }.with_family(Family::Product))
            }
        }
    }
}

fn long_cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("n-cycle is a bijection")
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            CatalogSpec::Alternating(n) => write!(f, "alternating:{n}"),
            CatalogSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            CatalogSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            CatalogSpec::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors: Vec<&str> = s.split('*').map(str::trim).collect();
        if factors.len() > 1 {
            let spec = CatalogSpec::Product(
                factors
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<CatalogSpec>>>()?,
            );
            spec.validate()?;
            return Ok(spec);
        }
        let (family, param) = s
            .split_once(':')
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let param: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::ParameterOutOfRange {
                family: family.to_string(),
                detail: format!("`{param}` is not a non-negative integer"),
            })?;
        let spec = match family.trim() {
            "symmetric" | "sym" => CatalogSpec::Symmetric(param),
            "alternating" | "alt" => CatalogSpec::Alternating(param),
            "dihedral" | "dih" => CatalogSpec::Dihedral(param),
            "cyclic" | "cyc" => CatalogSpec::Cyclic(param),
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// The constructible catalog used by surveys: cyclic groups, dihedral groups,
/// symmetric groups from degree 3, alternating groups from degree 4, and all
/// pairwise direct products of their nontrivial members, each of order at
/// most `max_order`.
pub fn survey_catalog(max_order: usize) -> Vec<CatalogSpec> {
    let max = max_order as u128;
    let fits = |spec: &CatalogSpec| spec.order().is_some_and(|o| o <= max);
    let mut base: Vec<CatalogSpec> = Vec::new();
    base.extend((1..=max_order).map(CatalogSpec::Cyclic));
    base.extend((3..).map(|n| CatalogSpec::Dihedral(2 * n)).take_while(fits));
    base.extend((3..).map(CatalogSpec::Symmetric).take_while(fits));
    base.extend((4..).map(CatalogSpec::Alternating).take_while(fits));

    let factors: Vec<&CatalogSpec> = base
        .iter()
        .filter(|s| s.order().is_some_and(|o| o >= 2))
        .collect();
    let mut products = Vec::new();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            let spec = CatalogSpec::Product(vec![(*a).clone(), (*b).clone()]);
            if fits(&spec) {
                products.push(spec);
            }
        }
    }
    base.extend(products);
    base
}
