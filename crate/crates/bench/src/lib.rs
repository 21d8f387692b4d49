//! Fixtures shared by the benchmarks under `benches/`.

use conjq_core::group::{CatalogSpec, DEFAULT_BOUND};
use conjq_core::{ConjClass, FiniteGroup};

/// A catalog group; panics on a bad spec.
pub fn group(spec: &str) -> FiniteGroup {
    spec.parse::<CatalogSpec>()
        .expect("valid catalog spec")
        .build(DEFAULT_BOUND)
        .expect("group within the default bound")
}

pub fn class_of(g: &FiniteGroup, element: &str) -> ConjClass {
    let e = g.parse_element(element).expect("element parses");
    g.conjugacy_class(&e).expect("class within the bound")
}
