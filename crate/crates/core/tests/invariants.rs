//! Property tests for the structural invariants of the module model and the
//! enumerator, over randomly generated admissible Kupisch series.

use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::BTreeSet;
use tautilt_core::{algebra::Shape, oracle, AlgebraSpec, CountEngine, Indec, ModuleSet};

/// Any seed vector maps onto a valid linear Kupisch series by clamping each
/// entry to the invariant `c_j <= c_{j+1} + 1` from the right.
fn kupisch_from_seed(seed: &[u32]) -> Vec<u32> {
    let n = seed.len();
    let mut c = vec![1u32; n];
    for j in (0..n.saturating_sub(1)).rev() {
        c[j] = seed[j].clamp(1, c[j + 1] + 1);
    }
    c
}

fn seed_strategy(max_n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=8, 0..=max_n)
}

proptest! {
    #[test]
    fn seeded_series_are_admissible(seed in seed_strategy(12)) {
        let c = kupisch_from_seed(&seed);
        prop_assert!(AlgebraSpec::linear(c).is_ok());
    }

    #[test]
    fn indecomposable_count_is_kupisch_sum(seed in seed_strategy(12)) {
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        let total: u32 = a.kupisch().iter().sum();
        prop_assert_eq!(a.indecomposables().len(), total as usize);
    }

    #[test]
    fn tau_stays_valid_and_linear_indecs_are_rigid(seed in seed_strategy(12)) {
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        for m in a.indecomposables() {
            match a.tau(m) {
                None => prop_assert!(a.is_projective(m)),
                Some(t) => {
                    prop_assert!(a.is_valid_indec(t));
                    // every indecomposable over a linear Nakayama algebra is tau-rigid
                    prop_assert!(!a.hom_nonzero(m, t));
                }
            }
        }
    }

    #[test]
    fn killing_nothing_returns_the_algebra(seed in seed_strategy(10)) {
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        let q = a.quotient_kill(&BTreeSet::new());
        if a.n() == 0 {
            prop_assert!(q.components.is_empty());
        } else {
            prop_assert_eq!(q.components.len(), 1);
            prop_assert_eq!(&q.components[0].algebra, &a);
            let identity: Vec<u32> = (1..=a.n() as u32).collect();
            prop_assert_eq!(&q.components[0].vertex_map, &identity);
        }
    }

    #[test]
    fn sequential_kills_compose(
        seed in seed_strategy(9),
        mask1 in 0u64..512,
        mask2 in 0u64..512,
    ) {
        for shape in [Shape::Linear, Shape::Cyclic] {
            let a = match shape {
                Shape::Linear => AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap(),
                Shape::Cyclic => AlgebraSpec::uniform(Shape::Cyclic, seed.len(), 3).unwrap(),
            };
            let n = a.n() as u32;
            let t1: BTreeSet<u32> = (1..=n).filter(|v| mask1 >> (v - 1) & 1 == 1).collect();
            let t2: BTreeSet<u32> = (1..=n).filter(|v| mask2 >> (v - 1) & 1 == 1).collect();
            let union: BTreeSet<u32> = t1.union(&t2).cloned().collect();

            // kill t1, then kill (the preimage of) t2 inside each component,
            // composing the vertex maps
            let mut two_step: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
            for comp in a.quotient_kill(&t1).components {
                let local_kill: BTreeSet<u32> = comp
                    .vertex_map
                    .iter()
                    .enumerate()
                    .filter(|(_, parent)| t2.contains(parent))
                    .map(|(j, _)| j as u32 + 1)
                    .collect();
                for sub in comp.algebra.quotient_kill(&local_kill).components {
                    let composed: Vec<u32> = sub
                        .vertex_map
                        .iter()
                        .map(|&v| comp.vertex_map[(v - 1) as usize])
                        .collect();
                    two_step.push((composed, sub.algebra.kupisch().to_vec()));
                }
            }
            let mut one_step: Vec<(Vec<u32>, Vec<u32>)> = a
                .quotient_kill(&union)
                .components
                .into_iter()
                .map(|c| (c.vertex_map, c.algebra.kupisch().to_vec()))
                .collect();
            two_step.sort();
            one_step.sort();
            prop_assert_eq!(two_step, one_step);
        }
    }

    #[test]
    fn enumeration_invariants_on_small_algebras(seed in seed_strategy(5)) {
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        let tau = oracle::enumerate_tau_tilting(&a);
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let (proper, proper_np) = oracle::filter_proper_np(&a, &pairs);

        prop_assert_eq!(pairs.len(), tau.len() + proper.len());
        if a.n() >= 1 {
            prop_assert_eq!(proper_np.len(), tau.len());
        }

        let n = a.n() as u32;
        let everything: BTreeSet<u32> = (1..=n).collect();
        if n >= 1 {
            let p1 = Indec::new(1, a.loewy_length(1));
            for module in &tau {
                prop_assert!(module.contains(p1));
                prop_assert_eq!(oracle::module_support(&a, module), everything.clone());
            }
        }
        // sincere support modules have empty killed set, and conversely
        for pair in &pairs {
            let sincere = oracle::module_support(&a, &pair.module) == everything;
            prop_assert_eq!(sincere, pair.killed.is_empty());
        }

        // the avoidance classes partition the proper support modules
        let total: usize = (1..=n).map(|i| oracle::filter_w(&a, i).len()).sum();
        prop_assert_eq!(total, proper.len());
    }

    #[test]
    fn avoidance_classes_factor_through_quotients(seed in seed_strategy(5)) {
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        let n = a.n() as u32;
        for i in 1..=n {
            let before: BTreeSet<u32> = (i..=n).collect();
            let after: BTreeSet<u32> = (1..=i).collect();
            let left = single_component(&a, &before);
            let right = single_component(&a, &after);
            let expected = oracle::enumerate_tau_tilting(&left).len()
                * oracle::enumerate_support_tau_tilting(&right).len();
            prop_assert_eq!(oracle::filter_w(&a, i).len(), expected);
        }
    }

    #[test]
    fn engine_matches_oracle_on_random_series(seed in seed_strategy(5)) {
        let e = CountEngine::new();
        let a = AlgebraSpec::linear(kupisch_from_seed(&seed)).unwrap();
        let tau = oracle::enumerate_tau_tilting(&a).len();
        let pairs = oracle::enumerate_support_tau_tilting(&a).len();
        prop_assert_eq!(e.tau_count_general(&a).unwrap(), BigUint::from(tau));
        prop_assert_eq!(e.stau_count_general(&a).unwrap(), BigUint::from(pairs));
        for ell in 1..=a.n() {
            let filtered = oracle::filter_v(&a, ell as u32).len();
            prop_assert_eq!(e.v_count(&a, ell).unwrap(), BigUint::from(filtered));
        }
    }
}

/// The quotient by a contiguous kill set has at most one component; the
/// empty one is the zero algebra.
fn single_component(a: &AlgebraSpec, killed: &BTreeSet<u32>) -> AlgebraSpec {
    let mut components = a.quotient_kill(killed).components;
    assert!(components.len() <= 1);
    components
        .pop()
        .map(|c| c.algebra)
        .unwrap_or_else(|| AlgebraSpec::uniform(Shape::Linear, 0, 1).unwrap())
}

#[test]
fn cyclic_self_incompatibility_of_simples() {
    // over the loop algebra the simple is its own translate
    for r in 2..=5 {
        let a = AlgebraSpec::uniform(Shape::Cyclic, 1, r).unwrap();
        let s = Indec::new(1, 1);
        assert_eq!(a.tau(s), Some(s));
        assert!(a.hom_nonzero(s, s));
    }
}

#[test]
fn support_listing_is_stable() {
    let a = AlgebraSpec::uniform(Shape::Cyclic, 5, 3).unwrap();
    let lines: Vec<String> = oracle::enumerate_support_tau_tilting(&a)
        .iter()
        .map(|p| p.module.to_string())
        .collect();
    let again: Vec<String> = oracle::enumerate_support_tau_tilting(&a)
        .iter()
        .map(|p| p.module.to_string())
        .collect();
    assert_eq!(lines, again);
    let distinct: BTreeSet<&String> = lines.iter().collect();
    assert_eq!(distinct.len(), lines.len(), "duplicate support modules");
}

#[test]
fn zero_module_everywhere() {
    let zero = ModuleSet::zero();
    assert!(zero.is_zero());
    for n in 0..=3usize {
        let a = AlgebraSpec::uniform(Shape::Linear, n, 2).unwrap();
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let full: BTreeSet<u32> = (1..=n as u32).collect();
        assert!(pairs.iter().any(|p| p.module.is_zero() && p.killed == full));
    }
}
