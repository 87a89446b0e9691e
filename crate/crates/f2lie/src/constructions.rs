//! Explicit constructions of the small simple algebras shipped as data files.

use f2lie_core::autgroup::isomorphism;
use f2lie_core::f2linalg::{prefix_mask, BitMatrix, Mat64, Subspace};
use f2lie_core::lie::{matrix_lie_closure, LieAlgebra};
use f2lie_core::{meataxe, Budget, Result};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// `C(n, k)` mod 2 by Lucas.
fn binom2(n: usize, k: usize) -> bool {
    k <= n && k & !n == 0
}

/// The Zassenhaus algebra `W(n)`: the derived algebra of the divided-power
/// Witt algebra `W(1; n)`, spanned by `x^(a) d` for `0 <= a <= 2^n - 2`.
pub fn zassenhaus(n: u32) -> Result<LieAlgebra> {
    let top = (1usize << n) - 1;
    let mut brackets = Vec::new();
    for a in 0..top {
        for b in a + 1..top {
            // x^(a) d(x^(b)) - x^(b) d(x^(a)) in divided powers
            if a + b == 0 || a + b > top {
                continue;
            }
            let c = a + b - 1;
            if binom2(c, a) != binom2(c, b) {
                brackets.push((a, b, vec![c]));
            }
        }
    }
    LieAlgebra::from_brackets(top, &brackets)
}

fn elementary(n: usize, i: usize, j: usize) -> BitMatrix {
    BitMatrix::from_fn(n, n, |r, c| r == i && c == j)
}

/// `sl_n` as the matrix Lie closure of the simple root vectors.
pub fn special_linear(n: usize) -> Result<LieAlgebra> {
    let gens: Vec<BitMatrix> = (0..n - 1)
        .flat_map(|i| [elementary(n, i, i + 1), elementary(n, i + 1, i)])
        .collect();
    Ok(matrix_lie_closure(&gens)?.algebra)
}

/// `sl_n` modulo its center.
pub fn projective_special_linear(n: usize) -> Result<LieAlgebra> {
    let sl = special_linear(n)?;
    let z = sl.center();
    sl.section(&Subspace::full(sl.dim()), &z)
}

/// The special unitary algebra `su_3` over `GF(2)`: traceless skew-Hermitian
/// `3 x 3` matrices over `GF(4)`, realized as `6 x 6` matrices over `GF(2)`.
pub fn special_unitary3() -> Result<LieAlgebra> {
    // a + b w acting on GF(4) = GF(2)[w]/(w^2 + w + 1) in the basis (1, w)
    let f4 = |a: bool, b: bool| -> [[bool; 2]; 2] { [[a, b], [b, a ^ b]] };
    let block = |entries: &[(usize, usize, [[bool; 2]; 2])]| {
        BitMatrix::from_fn(6, 6, |r, c| {
            entries
                .iter()
                .filter(|(i, j, _)| r / 2 == *i && c / 2 == *j)
                .fold(false, |acc, (_, _, m)| acc ^ m[r % 2][c % 2])
        })
    };
    let one = f4(true, false);
    let w = f4(false, true);
    let wbar = f4(true, true);
    let mut gens = vec![
        block(&[(0, 0, one), (1, 1, one)]),
        block(&[(1, 1, one), (2, 2, one)]),
    ];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        gens.push(block(&[(i, j, one), (j, i, one)]));
        gens.push(block(&[(i, j, w), (j, i, wbar)]));
    }
    Ok(matrix_lie_closure(&gens)?.algebra)
}

/// Simple quotients `V/I` by maximal ideals, for `V` and the terms of its
/// derived series.
fn simple_quotients(v: &LieAlgebra, out: &mut Vec<LieAlgebra>) -> Result<()> {
    let mut v = v.clone();
    while v.dim() > 0 {
        let d = v.dim();
        let gens: Vec<Mat64> = (0..d).map(|i| v.ad_basis(i)).collect();
        let ideals = match meataxe::all_submodules(&gens, d, 1 << 12) {
            Ok(subs) => meataxe::maximal_proper(&subs),
            Err(f2lie_core::Error::TooManySubmodules { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        for i in ideals {
            let q = v.section(&Subspace::full(d), &i)?;
            if q.is_simple() {
                out.push(q);
            }
        }
        let p = v.derived_algebra();
        if p.dim() == d {
            break;
        }
        v = v.restrict(&p)?;
    }
    Ok(())
}

/// Searches proper subalgebras generated by two random elements for a simple
/// subquotient of dimension `dim` isomorphic to none of `avoid`.
pub fn find_simple_subquotient(
    l: &LieAlgebra,
    dim: usize,
    avoid: &[&LieAlgebra],
    seed: u64,
    tries: usize,
) -> Result<Option<LieAlgebra>> {
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = Budget::default();
    for _ in 0..tries {
        let gens = [
            rng.next_u64() & prefix_mask(n),
            rng.next_u64() & prefix_mask(n),
        ];
        let v = l.closure_words(&gens);
        if v.dim() == n || v.dim() < dim {
            continue;
        }
        let mut found = Vec::new();
        simple_quotients(&l.restrict(&v)?, &mut found)?;
        for q in found.into_iter().filter(|q| q.dim() == dim) {
            let mut new = true;
            for a in avoid {
                if isomorphism(&q, a, &budget)?.is_isomorphic() {
                    new = false;
                    break;
                }
            }
            if new {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_simplicity() {
        let w2 = zassenhaus(2).unwrap();
        assert_eq!(w2.dim(), 3);
        assert!(w2.is_simple());
        for (l, d) in [
            (zassenhaus(3).unwrap(), 7),
            (special_linear(3).unwrap(), 8),
            (special_unitary3().unwrap(), 8),
            (projective_special_linear(4).unwrap(), 14),
        ] {
            assert_eq!(l.dim(), d);
            assert!(l.is_simple(), "dim {d}");
        }
    }

    #[test]
    fn sl3_and_su3_are_distinct() {
        let b = Budget::default();
        let sl = special_linear(3).unwrap();
        let su = special_unitary3().unwrap();
        assert!(!isomorphism(&sl, &su, &b).unwrap().is_isomorphic());
        assert!(isomorphism(&sl, &sl.tensor_extend(1).unwrap(), &b)
            .unwrap()
            .is_isomorphic());
    }

    #[test]
    fn random_search_finds_l31_in_w3() {
        let w3 = zassenhaus(3).unwrap();
        let q = find_simple_subquotient(&w3, 3, &[], 1, 200)
            .unwrap()
            .unwrap();
        let b = Budget::default();
        assert!(isomorphism(&q, &zassenhaus(2).unwrap(), &b)
            .unwrap()
            .is_isomorphic());
        assert!(find_simple_subquotient(&w3, 3, &[&q], 1, 50)
            .unwrap()
            .is_none());
    }
}
