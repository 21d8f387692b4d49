//! Explicit witnesses in symmetric and alternating groups.
//!
//! For `n ≥ 5` and any `e ∈ Sₙ`, [`witness_sym`] builds an even `σ` such that
//! `z = σ e σ⁻¹` commutes with no nontrivial power of `e`. The construction
//! picks one point `p_i` in a cycle of each distinct length `λ_i` (the cycle
//! of that length with the smallest point, entered at that point) and works
//! with those points in place of the labels `1..t`.

use crate::error::{Error, Result};
use crate::perm::{Parity, Permutation};

/// Which branch of the construction produced the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    /// Several distinct cycle lengths.
    MixedLengths,
    /// All cycles of length 1.
    Identity,
    /// All cycles of length 2.
    Involution,
    /// All cycles of length 3.
    ThreeCycles,
    /// All cycles of one length at least 4.
    LongCycles,
}

/// One line of the commutation transcript: `z e^k` and `e^k z` disagree at
/// `point` (0-based), sending it to `left` and `right` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutationCheck {
    pub k: u64,
    pub point: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymWitness {
    pub z: Permutation,
    pub sigma: Permutation,
    pub case: WitnessCase,
    pub transcript: Vec<CommutationCheck>,
}

pub fn witness_sym(e: &Permutation, n: usize) -> Result<SymWitness> {
    if n < 5 {
        return Err(Error::DegreeTooSmall {
            degree: n,
            minimum: 5,
        });
    }
    if e.degree() != n {
        return Err(Error::DegreeMismatch {
            left: e.degree(),
            right: n,
        });
    }
    let (sigma, case) = construct_sigma(e)?;
    let z = sigma.conjugate_unchecked(e);
    let failed = |detail: String| Error::ConstructionPostconditionFailed {
        element: e.to_string(),
        detail,
    };
    if sigma.parity() != Parity::Even {
        return Err(failed(format!("σ = {sigma} is odd")));
    }
    let transcript = commutation_transcript(e, &z)
        .map_err(|k| failed(format!("z = {z} commutes with e^{k}")))?;
    Ok(SymWitness {
        z,
        sigma,
        case,
        transcript,
    })
}

/// For each `1 ≤ k < ord(e)`, a point where `z e^k ≠ e^k z`; `Err(k)` for the
/// first power that commutes with `z`.
pub fn commutation_transcript(
    e: &Permutation,
    z: &Permutation,
) -> std::result::Result<Vec<CommutationCheck>, u64> {
    let order = e.order();
    let mut transcript = Vec::new();
    let mut ek = e.clone();
    for k in 1..order {
        let hit = (0..e.degree()).find_map(|x| {
            let left = z.apply(ek.apply(x));
            let right = ek.apply(z.apply(x));
            (left != right).then_some(CommutationCheck {
                k,
                point: x,
                left,
                right,
            })
        });
        transcript.push(hit.ok_or(k)?);
        ek = &ek * e;
    }
    Ok(transcript)
}

fn iterate(e: &Permutation, start: usize, k: usize) -> usize {
    (0..k).fold(start, |x, _| e.apply(x))
}

/// Product of transpositions on pairwise disjoint supports.
fn disjoint_transpositions(n: usize, pairs: &[(usize, usize)]) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    for &(a, b) in pairs {
        if a == b || std::mem::replace(&mut used[a], true) || std::mem::replace(&mut used[b], true)
        {
            return Err(Error::ConstructionPostconditionFailed {
                element: format!("{pairs:?}"),
                detail: "transpositions are not disjoint".into(),
            });
        }
        images.swap(a, b);
    }
    Permutation::from_images(images)
}

fn construct_sigma(e: &Permutation) -> Result<(Permutation, WitnessCase)> {
    let n = e.degree();
    let cycles: Vec<Vec<usize>> = e.cycles().collect();
    let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
    lengths.sort_unstable();
    lengths.dedup();
    // `cycles` is ordered by smallest point and each starts there, so the
    // first cycle of a given length is the one with the smallest point.
    let anchors: Vec<usize> = lengths
        .iter()
        .map(|&len| {
            cycles
                .iter()
                .find(|c| c.len() == len)
                .expect("length occurs")[0]
        })
        .collect();
    let t = lengths.len();

    if t > 1 {
        let (lam1, lamt) = (lengths[0], lengths[t - 1]);
        let (p1, pt) = (anchors[0], anchors[t - 1]);
        // u[i] = e^i(p1), x[j] = e^j(pt); index 0 unused.
        let u: Vec<usize> = (0..lam1).map(|i| iterate(e, p1, i)).collect();
        let x: Vec<usize> = (0..lamt).map(|j| iterate(e, pt, j)).collect();
        let mut pairs: Vec<(usize, usize)> =
            (1..lam1).step_by(2).map(|i| (x[t - 1 + i], u[i])).collect();
        pairs.extend((1..t).map(|j| (x[j], anchors[t - j - 1])));
        let rho_pi = disjoint_transpositions(n, &pairs)?;
        if rho_pi.parity() == Parity::Even {
            return Ok((rho_pi, WitnessCase::MixedLengths));
        }
        let fix = if lamt >= 3 {
            (x[1], x[2])
        } else {
            let excluded: Vec<usize> = anchors.iter().chain(&u[1..]).copied().collect();
            let mut free = (0..n).filter(|p| !excluded.contains(p));
            let y1 = free.next().expect("n ≥ 5 leaves free points");
            let y2 = free.next().expect("n ≥ 5 leaves free points");
            (y1, y2)
        };
        let sigma = &Permutation::transposition(n, fix.0, fix.1) * &rho_pi;
        return Ok((sigma, WitnessCase::MixedLengths));
    }

    let lam = lengths[0];
    let point_after = |start: usize, k: usize| iterate(e, start, k);
    match lam {
        1 => Ok((Permutation::identity(n), WitnessCase::Identity)),
        2 => {
            // e = (p u1)(u2 u3)(u4 u5)…, σ = (u1 u2)(u3 u4)
            let (a, b, c) = (&cycles[0], &cycles[1], &cycles[2]);
            let (u1, u2, u3, u4) = (a[1], b[0], b[1], c[0]);
            let sigma = disjoint_transpositions(n, &[(u1, u2), (u3, u4)])?;
            Ok((sigma, WitnessCase::Involution))
        }
        3 => {
            // e = (p u1 u2)(u3 u4 u5)…, σ = (u2 u3 u4)
            let (a, b) = (&cycles[0], &cycles[1]);
            let (u2, u3, u4) = (a[2], b[0], b[1]);
            let sigma = Permutation::from_cycles(n, &[[u2 + 1, u3 + 1, u4 + 1]])?;
            Ok((sigma, WitnessCase::ThreeCycles))
        }
        _ => {
            // σ = (u0 u1 u2) along the cycle through the smallest point
            let p = cycles[0][0];
            let (u0, u1, u2) = (p, point_after(p, 1), point_after(p, 2));
            let sigma = Permutation::from_cycles(n, &[[u0 + 1, u1 + 1, u2 + 1]])?;
            Ok((sigma, WitnessCase::LongCycles))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    /// Independent check: no nontrivial power of e commutes with z.
    fn trivial_intersection(e: &Permutation, z: &Permutation) -> bool {
        (1..e.order() as i64).all(|k| !e.power(k).commutes_with(z))
    }

    #[test]
    fn identity_gives_identity() {
        let w = witness_sym(&Permutation::identity(5), 5).unwrap();
        assert!(w.z.is_identity());
        assert_eq!(w.case, WitnessCase::Identity);
        assert!(w.transcript.is_empty());
    }

    #[test]
    fn three_cycle_in_degree_five() {
        let e = p("(1 2 3)", 5);
        let w = witness_sym(&e, 5).unwrap();
        assert_eq!(w.z.cycle_structure(), e.cycle_structure());
        assert_eq!(w.sigma.parity(), Parity::Even);
        assert!(trivial_intersection(&e, &w.z));
        assert_eq!(w.transcript.len(), 2);
    }

    #[test]
    fn fixed_point_free_involution_in_degree_seven() {
        let e = p("(1 2)(3 4)(5 6)", 7);
        let w = witness_sym(&e, 7).unwrap();
        assert!(!w.z.commutes_with(&e));
        assert_eq!(w.sigma.parity(), Parity::Even);
    }

    #[test]
    fn pure_involution_and_three_cycle_cases() {
        let e = p("(1 2)(3 4)(5 6)", 6);
        let w = witness_sym(&e, 6).unwrap();
        assert_eq!(w.case, WitnessCase::Involution);
        assert!(trivial_intersection(&e, &w.z));

        let e = p("(1 2 3)(4 5 6)", 6);
        let w = witness_sym(&e, 6).unwrap();
        assert_eq!(w.case, WitnessCase::ThreeCycles);
        assert!(trivial_intersection(&e, &w.z));

        for text in ["(1 2 3 4 5)", "(1 2 3 4)(5 6 7 8)", "(1 2 3 4 5 6 7 8 9)"] {
            let n = if text.contains('9') {
                9
            } else if text.contains('8') {
                8
            } else {
                5
            };
            let e = p(text, n);
            let w = witness_sym(&e, n).unwrap();
            assert_eq!(w.case, WitnessCase::LongCycles);
            assert!(trivial_intersection(&e, &w.z), "{text}");
        }
    }

    #[test]
    fn transposition_with_fixed_points_uses_free_points() {
        // t = 2, λ = (1, 2): the parity fix-up with y1, y2.
        let e = p("(1 2)", 5);
        let w = witness_sym(&e, 5).unwrap();
        assert_eq!(w.case, WitnessCase::MixedLengths);
        assert_eq!(w.sigma.parity(), Parity::Even);
        assert!(trivial_intersection(&e, &w.z));
    }

    #[test]
    fn mixed_order_six() {
        let e = p("(1 2)(3 4 5)", 6);
        let w = witness_sym(&e, 6).unwrap();
        assert_eq!(w.transcript.len(), 5);
        assert!(trivial_intersection(&e, &w.z));
    }

    #[test]
    fn rejects_small_degree() {
        assert_eq!(
            witness_sym(&p("(1 2 3)", 4), 4),
            Err(Error::DegreeTooSmall {
                degree: 4,
                minimum: 5
            })
        );
    }
}
