//! Decision procedures for regular cycles and the good-class criterion,
//! with the brute-force oracles they are checked against.

mod audit;
mod goodness;
mod witness;

pub use audit::{
    corollary6_audit, lemma3_crosscheck, lemma4_cardinality, product_cycle_lcm,
    stabilizer_trivial_at, EquivalenceAudit, InnerCardinality,
};
pub use goodness::{
    centralizer_criterion, classify_class, conjecture2_check, dihedral_goodness, good_class,
    good_class_fast, is_prime_power, prime_power_shortcut, witness_bruteforce, GoodnessReport,
    Method, Verdict,
};
pub use witness::{commutation_transcript, witness_sym, CommutationCheck, SymWitness, WitnessCase};
