//! Regular cycles versus points with trivial stabilizer, checked against a
//! pointwise oracle that never looks at cycle lengths.

use conjq_core::checks::{lemma3_crosscheck, stabilizer_trivial_at};
use conjq_core::Permutation;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Some point `z` with `π^k(z) ≠ z` for every `0 < k < ord(π)`, using explicit
/// powers built by composition.
fn pointwise_oracle(p: &Permutation) -> bool {
    let n = p.degree();
    let mut powers = vec![];
    let mut x = p.clone();
    while !x.is_identity() {
        powers.push(x.clone());
        x = &x * p;
    }
    (0..n).any(|z| powers.iter().all(|pk| pk.apply(z) != z))
}

/// Every permutation of `0..n` in lexicographic order.
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

#[test]
fn exhaustive_up_to_degree_seven() {
    let mut checked = 0;
    for n in 1..=7 {
        for images in all_perms(n) {
            let p = Permutation::from_images(images).unwrap();
            let structural = p.cycle_structure().has_regular_cycle();
            assert_eq!(structural, pointwise_oracle(&p), "{p} in degree {n}");
            assert_eq!(lemma3_crosscheck(&p), Ok(structural), "{p}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 6 + 24 + 120 + 720 + 5040);
}

#[test]
fn seeded_random_up_to_degree_fifty() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut irregular = 0;
    for i in 0..10_000 {
        let n = 1 + i % 50;
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut rng);
        let p = Permutation::from_images(images).unwrap();
        let structural = p.cycle_structure().has_regular_cycle();
        assert_eq!(lemma3_crosscheck(&p), Ok(structural), "{p}");
        if p.order() <= 5_000 {
            assert_eq!(structural, pointwise_oracle(&p), "{p}");
        }
        irregular += usize::from(!structural);
    }
    // both outcomes occur in the sample
    assert!(irregular > 0 && irregular < 10_000);
}

#[test]
fn trivial_stabilizer_points_lie_on_longest_cycles() {
    let p = Permutation::parse("(1 2 3 4 5 6)(7 8)(9 10 11)", 12).unwrap();
    let trivial: Vec<usize> = (1..=12)
        .filter(|&z| stabilizer_trivial_at(&p, z).unwrap())
        .collect();
    assert_eq!(trivial, [1, 2, 3, 4, 5, 6]);
}
