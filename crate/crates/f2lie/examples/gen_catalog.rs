//! Regenerates `data/catalog`: structure constants for the simple algebras that
//! are not built in, each checked for simplicity and against its expected
//! idempotent signatures and superization dimensions.
//!
//! ```text
//! cargo run --release -p f2lie --example gen_catalog [OUT_DIR]
//! ```

use std::collections::BTreeSet;
use std::path::PathBuf;

use f2lie::catalog_dir::{default_catalog_dir, write_catalog_dir};
use f2lie::constructions::{
    find_simple_subquotient, projective_special_linear, special_linear, special_unitary3,
    zassenhaus,
};
use f2lie::tables::grading_profile;
use f2lie_core::autgroup::isomorphism;
use f2lie_core::catalog::{builtin, CatalogEntry, Provenance};
use f2lie_core::lie::LieAlgebra;
use f2lie_core::Budget;

const SEARCH_SEED: u64 = 0x15_10;
const SEARCH_TRIES: usize = 5000;

struct Expected {
    id: &'static str,
    names: &'static [&'static str],
    signatures: &'static [[usize; 2]],
    superizations: &'static [usize],
}

fn check(l: &LieAlgebra, want: &Expected) {
    let p = grading_profile(l).expect("grading profile");
    let sigs: BTreeSet<[usize; 2]> = want.signatures.iter().copied().collect();
    let dims: BTreeSet<usize> = want.superizations.iter().copied().collect();
    let got: BTreeSet<usize> = p.superization_dims.keys().copied().collect();
    assert_eq!(p.signatures, sigs, "{}: signatures", want.id);
    assert_eq!(got, dims, "{}: superization dimensions", want.id);
    eprintln!(
        "{}: dim {}, {} idempotents, signatures {:?}, superizations {:?}",
        want.id,
        l.dim(),
        p.idempotents,
        p.signatures,
        p.superization_dims
    );
}

fn entry(l: LieAlgebra, want: &Expected, provenance: Provenance) -> CatalogEntry {
    check(&l, want);
    let names = want.names.iter().map(|s| s.to_string()).collect();
    CatalogEntry::new(want.id, names, l, provenance).expect("simple")
}

fn main() {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(default_catalog_dir);
    let budget = Budget::default();
    let mut entries = Vec::new();

    let w3 = zassenhaus(3).unwrap();
    let want = Expected {
        id: "L_7_1",
        names: &["W(3)"],
        signatures: &[[3, 4]],
        superizations: &[9],
    };
    entries.push((
        entry(w3.clone(), &want, Provenance::UserFile),
        "derived algebra of the divided-power Witt algebra W(1;3), basis x^(a)d for a = 0..6"
            .to_string(),
    ));

    let l15 = builtin("L_15_10").unwrap().algebra;
    let v7 = find_simple_subquotient(&l15, 7, &[&w3], SEARCH_SEED, SEARCH_TRIES)
        .unwrap()
        .expect("7-dimensional subquotient other than W(3)");
    let want = Expected {
        id: "L_7_2",
        names: &["V_7", "P(1,2)"],
        signatures: &[[3, 4]],
        superizations: &[10],
    };
    entries.push((
        entry(v7.clone(), &want, Provenance::AppendixMatrices),
        format!(
            "simple subquotient of L_15_10 not isomorphic to W(3), found by seeded random search (seed {SEARCH_SEED:#x})"
        ),
    ));

    let sl3 = special_linear(3).unwrap();
    let want = Expected {
        id: "L_8_1",
        names: &["A_2", "W(1,1)", "Q(1,1,1)"],
        signatures: &[[4, 4]],
        superizations: &[8],
    };
    entries.push((
        entry(sl3.clone(), &want, Provenance::UserFile),
        "sl_3 as the matrix Lie closure of the elementary matrices E12, E21, E23, E32".to_string(),
    ));

    let su3 = special_unitary3().unwrap();
    assert!(!isomorphism(&su3, &sl3, &budget).unwrap().is_isomorphic());
    let want = Expected {
        id: "L_8_2",
        names: &["V_8"],
        signatures: &[[4, 4]],
        superizations: &[8],
    };
    entries.push((
        entry(su3, &want, Provenance::UserFile),
        "su_3: traceless skew-Hermitian 3x3 matrices over GF(4), as 6x6 matrices over GF(2); not isomorphic to sl_3".to_string(),
    ));

    let k10 = find_simple_subquotient(&l15, 10, &[], SEARCH_SEED, SEARCH_TRIES)
        .unwrap()
        .expect("10-dimensional simple subquotient");
    let want = Expected {
        id: "L_10_1",
        names: &["Kap_3(5)"],
        signatures: &[[4, 6], [6, 4]],
        superizations: &[12, 14],
    };
    entries.push((
        entry(k10.clone(), &want, Provenance::AppendixMatrices),
        format!("simple subquotient of L_15_10 of dimension 10, found by seeded random search (seed {SEARCH_SEED:#x})"),
    ));

    let tensors: [(&LieAlgebra, Expected, &str); 4] = [
        (
            &w3,
            Expected {
                id: "L_14_1",
                names: &["W(3) ⊗ F4"],
                signatures: &[[6, 8]],
                superizations: &[18],
            },
            "L_7_1",
        ),
        (
            &v7,
            Expected {
                id: "L_14_2",
                names: &["V_7 ⊗ F4"],
                signatures: &[[6, 8]],
                superizations: &[20],
            },
            "L_7_2",
        ),
        (
            &sl3,
            Expected {
                id: "L_16_1",
                names: &["W(1,1) ⊗ F4", "A_2 ⊗ F4", "V_8 ⊗ F4"],
                signatures: &[[8, 8]],
                superizations: &[16],
            },
            "L_8_1",
        ),
        (
            &k10,
            Expected {
                id: "L_20_1",
                names: &["Kap_3(5) ⊗ F4"],
                signatures: &[[8, 12], [12, 8]],
                superizations: &[24, 28],
            },
            "L_10_1",
        ),
    ];
    for (base, want, from) in tensors {
        let l = base.tensor_extend(2).unwrap();
        entries.push((
            entry(l, &want, Provenance::TensorConstruction),
            format!("{from} tensored with GF(4)"),
        ));
    }

    let psl4 = projective_special_linear(4).unwrap();
    let want = Expected {
        id: "L_14_5",
        names: &["A_3", "B_3", "C_3", "G_2", "S(1,1,1)", "H(1,1,1,1)"],
        signatures: &[[6, 8]],
        superizations: &[14],
    };
    entries.push((
        entry(psl4, &want, Provenance::UserFile),
        "psl_4: sl_4 (matrix Lie closure of simple root vectors) modulo its center".to_string(),
    ));

    write_catalog_dir(&out, &entries).unwrap();
    eprintln!("wrote {} entries to {}", entries.len(), out.display());
}
