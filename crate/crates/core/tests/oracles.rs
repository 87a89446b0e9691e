//! Library results against deliberately naive reimplementations.

use std::collections::HashSet;

use f2lie_core::autgroup::{automorphism_group, MatGroup};
use f2lie_core::catalog::l31;
use f2lie_core::f2linalg::{coord_bit, prefix_mask, BitMatrix, Mat64};
use f2lie_core::grading::find_idempotents;
use f2lie_core::lie::LieAlgebra;
use f2lie_core::Budget;
use proptest::prelude::*;

fn naive_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] == 1 {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Closure of `gens` under multiplication, by breadth-first search.
fn naive_group(n: usize, gens: &[Mat64]) -> HashSet<Vec<u64>> {
    let id = Mat64::identity(n);
    let mut seen: HashSet<Vec<u64>> = HashSet::from([id.cols().to_vec()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = g.compose(h);
            if seen.insert(gh.cols().to_vec()) {
                frontier.push(gh);
            }
        }
    }
    seen
}

/// `[x, y]` from the structure constants, one basis pair at a time.
fn naive_bracket(l: &LieAlgebra, x: u64, y: u64) -> u64 {
    let n = l.dim();
    let mut acc = 0;
    for i in 0..n {
        for j in 0..n {
            if x & coord_bit(i) != 0 && y & coord_bit(j) != 0 {
                acc ^= l.basis_bracket(i, j);
            }
        }
    }
    acc
}

fn all_vectors(n: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).map(move |v| v << (64 - n))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn rank_matches_naive_elimination(bits in prop::collection::vec(prop::collection::vec(0u8..2, 9), 1..9)) {
        let m = BitMatrix::from_fn(bits.len(), 9, |i, j| bits[i][j] == 1);
        prop_assert_eq!(m.rank(), naive_rank(bits));
    }

    #[test]
    fn group_order_matches_closure(cols in prop::collection::vec(prop::collection::vec(any::<u64>(), 4), 1..3)) {
        let gens: Vec<Mat64> = cols
            .into_iter()
            .map(|c| Mat64::from_cols(c.into_iter().map(|w| w & prefix_mask(4)).collect()))
            .filter(|m| m.inverse().is_some())
            .collect();
        let g = MatGroup::new(4, gens.clone()).unwrap();
        prop_assert_eq!(g.order().unwrap(), naive_group(4, &gens).len() as u128);
    }
}

#[test]
fn automorphisms_of_l31_and_its_double_by_exhaustion() {
    for l in [l31(), l31().direct_sum(&LieAlgebra::abelian(1)).unwrap()] {
        let n = l.dim();
        // every invertible matrix, checked on basis pairs
        let mut count = 0u128;
        let total = 1u64 << (n * n);
        for code in 0..total {
            let cols: Vec<u64> = (0..n)
                .map(|j| ((code >> (j * n)) & ((1 << n) - 1)) << (64 - n))
                .collect();
            let g = Mat64::from_cols(cols);
            if g.inverse().is_none() {
                continue;
            }
            let ok = (0..n).all(|i| {
                (0..n).all(|j| {
                    g.apply(l.basis_bracket(i, j)) == naive_bracket(&l, g.col(i), g.col(j))
                })
            });
            count += ok as u128;
        }
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        assert_eq!(a.order().unwrap(), count, "dim {n}");
    }
}

#[test]
fn idempotents_match_exhaustive_check() {
    for l in [
        l31(),
        l31().tensor_extend(2).unwrap(),
        l31().direct_sum(&l31()).unwrap(),
    ] {
        let n = l.dim();
        let naive: Vec<u64> = all_vectors(n)
            .filter(|&x| {
                all_vectors(n).all(|h| {
                    let once = naive_bracket(&l, x, h);
                    naive_bracket(&l, x, once) == once
                })
            })
            .collect();
        let mut ours: Vec<u64> = find_idempotents(&l)
            .unwrap()
            .iter()
            .map(|e| e.element)
            .collect();
        ours.sort_unstable();
        let mut naive = naive;
        naive.sort_unstable();
        assert_eq!(ours, naive, "dim {n}");
    }
}
