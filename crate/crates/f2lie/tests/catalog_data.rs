use f2lie::catalog_dir::{default_catalog_dir, load_entries, read_index};
use f2lie::constructions::{
    projective_special_linear, special_linear, special_unitary3, zassenhaus,
};
use f2lie::format::{algebra_to_string, parse_algebra};
use f2lie_core::autgroup::isomorphism;
use f2lie_core::catalog::Catalog;
use f2lie_core::lie::LieAlgebra;
use f2lie_core::Budget;

fn shipped() -> Vec<(
    f2lie_core::catalog::CatalogEntry,
    f2lie::catalog_dir::IndexEntry,
)> {
    load_entries(&default_catalog_dir()).unwrap()
}

#[test]
fn every_file_documents_its_source() {
    let index = read_index(&default_catalog_dir()).unwrap();
    assert!(index.entries.len() >= 9);
    for e in &index.entries {
        assert!(!e.source.is_empty(), "{}", e.id);
        assert_eq!(e.file, format!("{}.json", e.id));
    }
}

#[test]
fn files_round_trip_byte_for_byte() {
    let dir = default_catalog_dir();
    for (entry, ie) in shipped() {
        let text = std::fs::read_to_string(dir.join(&ie.file)).unwrap();
        assert_eq!(algebra_to_string(&entry.algebra), text, "{}", entry.id);
        let back = parse_algebra(&text, &dir.join(&ie.file)).unwrap();
        assert_eq!(back.table(), entry.algebra.table());
    }
}

#[test]
fn deterministic_constructions_reproduce_the_files() {
    let entries = shipped();
    let table = |id: &str| {
        entries
            .iter()
            .find(|(e, _)| e.id == id)
            .unwrap()
            .0
            .algebra
            .table()
            .to_vec()
    };
    let sl3 = special_linear(3).unwrap();
    let cases: [(&str, LieAlgebra); 6] = [
        ("L_7_1", zassenhaus(3).unwrap()),
        ("L_8_1", sl3.clone()),
        ("L_8_2", special_unitary3().unwrap()),
        ("L_14_5", projective_special_linear(4).unwrap()),
        ("L_14_1", zassenhaus(3).unwrap().tensor_extend(2).unwrap()),
        ("L_16_1", sl3.tensor_extend(2).unwrap()),
    ];
    for (id, l) in cases {
        assert_eq!(l.table(), &table(id)[..], "{id}");
    }
}

#[test]
fn entries_up_to_dim_ten_identify_as_themselves_and_are_distinct() {
    let mut cat = Catalog::new();
    for (e, _) in shipped().into_iter().filter(|(e, _)| e.dim() <= 10) {
        cat.insert(e).unwrap();
    }
    let b = Budget::default();
    for e in cat.entries() {
        assert_eq!(
            cat.identify(&e.algebra, &b).unwrap().as_deref(),
            Some(e.id.as_str())
        );
    }
    let l71 = &cat.get("L_7_1").unwrap().algebra;
    let l72 = &cat.get("L_7_2").unwrap().algebra;
    assert!(!isomorphism(l71, l72, &b).unwrap().is_isomorphic());
}
