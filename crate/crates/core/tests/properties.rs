use f2lie_core::autgroup::{automorphism_group, MatGroup};
use f2lie_core::catalog::l31;
use f2lie_core::f2linalg::{prefix_mask, Mat64, Subspace};
use f2lie_core::grading::{
    check_super_axioms, find_idempotents, grading_from_idempotent, is_idempotent, superize,
};
use f2lie_core::lie::LieAlgebra;
use f2lie_core::subalg::{all_subalgebras, brute_force_subalgebras, SubalgConfig};
use f2lie_core::{Budget, Error};
use proptest::prelude::*;

fn invertible(n: usize) -> impl Strategy<Value = Mat64> {
    prop::collection::vec(any::<u64>(), n)
        .prop_map(move |cols| {
            Mat64::from_cols(cols.into_iter().map(|c| c & prefix_mask(n)).collect())
        })
        .prop_filter("invertible", |m| m.inverse().is_some())
}

/// Small algebras with a mix of simple and abelian parts.
fn small_algebra() -> impl Strategy<Value = LieAlgebra> {
    prop_oneof![
        Just(l31()),
        Just(l31().direct_sum(&LieAlgebra::abelian(1)).unwrap()),
        Just(l31().direct_sum(&LieAlgebra::abelian(2)).unwrap()),
        Just(l31().direct_sum(&l31()).unwrap()),
        Just(LieAlgebra::abelian(3)),
    ]
}

fn transported() -> impl Strategy<Value = LieAlgebra> {
    small_algebra().prop_flat_map(|l| {
        let n = l.dim();
        invertible(n).prop_map(move |g| l.transport(&g).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn subspace_is_canonical(words in prop::collection::vec(any::<u64>(), 0..8), n in 1usize..12) {
        let words: Vec<u64> = words.into_iter().map(|w| w & prefix_mask(n)).collect();
        let s = Subspace::from_words64(n, &words);
        let mut rev = words.clone();
        rev.reverse();
        rev.extend(words.iter().take(2));
        prop_assert_eq!(&Subspace::from_words64(n, &rev), &s);
        prop_assert!(s.dim() <= n.min(words.len()));
        for &w in &words {
            prop_assert!(s.contains_word(w));
        }
    }

    #[test]
    fn transport_preserves_axioms_and_lattice(l in transported()) {
        prop_assert!(l.validate_axioms().is_valid());
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        let lat = all_subalgebras(&l, &a, &SubalgConfig::default(), &Budget::default()).unwrap();
        let brute = brute_force_subalgebras(&l, 1 << l.dim()).unwrap();
        prop_assert_eq!(lat.weighted_counts_by_dim(), brute.counts_by_dim(l.dim()));
    }

    #[test]
    fn orbit_times_stabilizer_is_group_order(
        gens in prop::collection::vec(invertible(4), 1..3),
        x in 1u64..16,
    ) {
        let g = MatGroup::new(4, gens).unwrap();
        let x = x << 60;
        let (orbit, stab) = g.orbit_and_stabilizer(x, &Budget::default()).unwrap();
        prop_assert_eq!(orbit.size as u128 * stab.order().unwrap(), g.order().unwrap());
    }

    #[test]
    fn gradings_and_superizations(l in transported()) {
        for e in find_idempotents(&l).unwrap().iter().filter(|e| !e.central) {
            let g = grading_from_idempotent(&l, e).unwrap();
            prop_assert!(g.is_grading_of(&l));
            if l.center().is_zero() {
                prop_assert!(check_super_axioms(&superize(&l, &g).unwrap()).is_ok());
            } else {
                prop_assert!(matches!(superize(&l, &g), Err(Error::NontrivialCenter)));
            }
        }
    }

    #[test]
    fn idempotents_lift(k in 2u32..4, g in invertible(3)) {
        let l = l31().transport(&g).unwrap();
        let t = l.tensor_extend(k).unwrap();
        for e in find_idempotents(&l).unwrap() {
            prop_assert!(is_idempotent(&t, l.tensor_lift(e.element, k)));
        }
    }

    #[test]
    fn representatives_ignore_generator_order(seed in any::<u64>()) {
        let l = l31().tensor_extend(2).unwrap();
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        let cfg = SubalgConfig::default();
        let reference = all_subalgebras(&l, &a, &cfg, &Budget::default()).unwrap();
        let mut gens = a.generators().to_vec();
        let m = gens.len();
        gens.rotate_left((seed as usize) % m);
        if seed & 1 == 1 {
            gens.reverse();
        }
        // a redundant product does not change the group
        gens.push(gens[0].compose(&gens[m - 1]));
        let b = MatGroup::new(l.dim(), gens).unwrap();
        let lat = all_subalgebras(&l, &b, &cfg, &Budget::default()).unwrap();
        prop_assert_eq!(lat.reps(), reference.reps());
    }
}
