//! Acceptance gate: one PASS/FAIL line per criterion, gating on 1-7.
//!
//! Run with `cargo test -p f2lie --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use f2lie::catalog_dir::{default_catalog_dir, open_catalog};
use f2lie::tables::{format_orbit_summary, grading_profile};
use f2lie_core::autgroup::{automorphism_group, MatGroup};
use f2lie_core::catalog::{Catalog, CatalogEntry};
use f2lie_core::f2linalg::{coord_bit, Mat64, Subspace};
use f2lie_core::grading::{
    check_super_axioms, find_idempotents, grading_from_idempotent, idempotent_orbit_summary,
    idempotent_orbits, is_idempotent, is_simple_super, superize,
};
use f2lie_core::lie::LieAlgebra;
use f2lie_core::subalg::{
    all_subalgebras, all_subalgebras_partial, brute_force_subalgebras, simple_subquotients,
    SubalgConfig, SubalgebraLattice,
};
use f2lie_core::Budget;

const LIMIT_WORKED_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_GRADINGS_WITH_AUT: Duration = Duration::from_secs(10 * 60);
const LIMIT_GRADINGS_WITHOUT_AUT: Duration = Duration::from_secs(30 * 60);
const LIMIT_SUBALGEBRAS: Duration = Duration::from_secs(60 * 60);
const LIMIT_ORACLE: Duration = Duration::from_secs(5 * 60);

/// `(id, orbit summary, superization dimensions)`.
type GradingRow = (
    &'static str,
    &'static [(usize, [usize; 2])],
    &'static [usize],
);

const GRADING_ROWS: &[GradingRow] = &[
    ("L_3_1", &[(1, [1, 2])], &[5]),
    ("L_6_1", &[(1, [2, 4])], &[10]),
    ("L_7_1", &[(2, [3, 4])], &[9, 9]),
    ("L_7_2", &[(1, [3, 4])], &[10]),
    ("L_8_1", &[(1, [4, 4])], &[8]),
    ("L_8_2", &[(1, [4, 4])], &[8]),
    ("L_9_1", &[(1, [3, 6])], &[15]),
    ("L_10_1", &[(1, [4, 6]), (1, [6, 4])], &[12, 14]),
    ("L_12_1", &[(1, [4, 8])], &[20]),
    ("L_14_1", &[(2, [6, 8])], &[18, 18]),
    ("L_14_2", &[(1, [6, 8])], &[20]),
    ("L_14_3", &[(3, [6, 8])], &[16, 17, 17]),
    ("L_14_4", &[(2, [6, 8])], &[16, 17]),
    ("L_14_5", &[(1, [6, 8])], &[14]),
    ("L_14_6", &[(1, [6, 8])], &[16]),
    ("L_15_1", &[(1, [5, 10])], &[25]),
    ("L_15_2", &[(4, [7, 8])], &[17, 17, 17, 17]),
    ("L_15_3", &[(2, [7, 8])], &[17, 19]),
    // six orbits but only five dimensions are listed: checked by containment
    ("L_15_4", &[(6, [7, 8])], &[18, 19, 19, 19, 19]),
    ("L_15_5", &[(3, [7, 8])], &[18, 18, 18]),
    ("L_15_6", &[(5, [7, 8])], &[18, 19, 19, 19, 19]),
    ("L_15_7", &[(6, [7, 8])], &[18, 18, 19, 19, 19, 19]),
    ("L_15_8", &[(6, [7, 8])], &[17, 17, 18, 18, 19, 19]),
    ("L_15_9", &[(3, [7, 8])], &[17, 17, 19]),
    ("L_15_10", &[(8, [7, 8])], &[17, 17, 18, 18, 19, 19, 19, 19]),
    ("L_15_11", &[(3, [7, 8])], &[17, 17, 19]),
    ("L_15_12", &[(4, [7, 8])], &[18, 19, 19, 19]),
    ("L_16_1", &[(1, [8, 8])], &[16]),
    ("L_16_2", &[(4, [8, 8])], &[16, 17, 17, 17]),
    ("L_16_3", &[(4, [8, 8])], &[16, 17, 17, 17]),
    (
        "L_16_4",
        &[(10, [8, 8])],
        &[16, 16, 17, 17, 17, 17, 17, 17, 17, 17],
    ),
    ("L_16_5", &[(6, [8, 8])], &[17, 17, 17, 17, 17, 17]),
    ("L_16_6", &[(4, [8, 8])], &[16, 17, 17, 17]),
    ("L_18_1", &[(1, [6, 12])], &[30]),
    ("L_20_1", &[(1, [8, 12]), (1, [12, 8])], &[24, 28]),
];

/// `(id, orbit counts by dim 1.., maximal orbit counts by dim 1..)`.
type SubalgebraRow = (&'static str, &'static [usize], &'static [usize]);

const SUBALGEBRA_ROWS: &[SubalgebraRow] = &[
    ("L_3_1", &[3, 1], &[0, 1]),
    ("L_6_1", &[5, 5, 3, 1, 0], &[0, 0, 1, 1, 0]),
    ("L_7_1", &[39, 85, 79, 48, 9, 1], &[0, 0, 1, 1, 0, 1]),
    ("L_7_2", &[43, 43, 26, 9, 2, 0], &[0, 0, 4, 5, 2, 0]),
    ("L_8_1", &[6, 10, 10, 7, 4, 1, 0], &[0, 0, 0, 0, 1, 1, 0]),
    ("L_8_2", &[6, 8, 6, 4, 2, 0, 0], &[0, 0, 0, 1, 2, 0, 0]),
    (
        "L_9_1",
        &[7, 9, 6, 3, 3, 1, 0, 0],
        &[0, 0, 1, 0, 0, 1, 0, 0],
    ),
    (
        "L_10_1",
        &[16, 31, 41, 26, 12, 6, 2, 0, 0],
        &[0, 0, 0, 0, 0, 2, 2, 0, 0],
    ),
];
const SUBALGEBRA_GATING: &[&str] = &["L_3_1", "L_6_1", "L_7_1", "L_7_2", "L_8_1", "L_8_2"];

const SUBQUOTIENT_ROWS: &[(&str, &[&str])] = &[
    ("L_3_1", &[]),
    ("L_6_1", &["L_3_1"]),
    ("L_7_1", &["L_3_1"]),
    ("L_7_2", &["L_3_1"]),
    ("L_8_1", &["L_3_1"]),
    ("L_8_2", &["L_3_1"]),
    ("L_9_1", &["L_3_1"]),
    ("L_10_1", &["L_3_1"]),
];
const SUBQUOTIENT_GATING: &[&str] = &["L_3_1", "L_7_1", "L_7_2", "L_8_1", "L_8_2"];

struct Outcome {
    pass: bool,
    gating: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn new(gating: bool) -> Self {
        Self {
            pass: true,
            gating,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl Into<String>) {
        let msg = msg.into();
        self.pass &= ok;
        self.lines
            .push(format!("{} {msg}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.lines.push(format!("note {}", msg.into()));
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.check(
            t < limit,
            format!("runtime {:.2?} (limit {:.0?})", t, limit),
        );
    }
}

fn catalog() -> Catalog {
    open_catalog(Some(&default_catalog_dir())).expect("shipped catalog loads")
}

fn aut(l: &LieAlgebra) -> MatGroup {
    automorphism_group(l, &Budget::default()).expect("automorphism group")
}

fn lattice(l: &LieAlgebra, a: &MatGroup) -> SubalgebraLattice {
    all_subalgebras(l, a, &SubalgConfig::default(), &Budget::default()).expect("subalgebra lattice")
}

fn bits(v: &[u8]) -> u64 {
    v.iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0, |acc, (i, _)| acc | coord_bit(i))
}

fn worked_example(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(true);
    let start = Instant::now();
    let l = &cat.get("L_3_1").unwrap().algebra;
    let a = aut(l);
    o.check(
        a.order().unwrap() == 6,
        format!("|Aut| = {}", a.order().unwrap()),
    );
    let expected: BTreeSet<(Vec<u64>, u64)> = [
        (vec![bits(&[1, 0, 1])], bits(&[1, 0, 1])),
        (
            vec![bits(&[0, 0, 1]), bits(&[1, 1, 0]), bits(&[0, 1, 0])],
            bits(&[0, 0, 1]),
        ),
        (
            vec![bits(&[0, 1, 1]), bits(&[1, 1, 1]), bits(&[1, 0, 0])],
            bits(&[0, 1, 1]),
        ),
    ]
    .into_iter()
    .map(|(mut m, r)| {
        m.sort();
        (m, r)
    })
    .collect();
    let got: BTreeSet<(Vec<u64>, u64)> = a
        .orbits_on_lines(&Budget::default())
        .unwrap()
        .iter()
        .map(|rec| {
            let mut m: Vec<u64> = rec.members().iter().map(|s| s.rows64()[0]).collect();
            m.sort();
            (m, rec.representative.rows64()[0])
        })
        .collect();
    o.check(got == expected, "line orbits and representatives");
    let lat = lattice(l, &a);
    let (all, max) = (lat.counts_by_dim(), lat.maximal_counts_by_dim());
    o.check(all[1..3] == [3, 1], format!("all {:?}", &all[1..3]));
    o.check(max[1..3] == [0, 1], format!("max {:?}", &max[1..3]));
    o.check(
        lat.total_subalgebras() == 12,
        format!("{} subalgebras", lat.total_subalgebras()),
    );
    o.within(start, LIMIT_WORKED_EXAMPLE);
    o
}

fn grading_row(id: &str) -> Option<&'static GradingRow> {
    GRADING_ROWS.iter().find(|r| r.0 == id)
}

fn gradings_with_aut(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(true);
    let start = Instant::now();
    for id in ["L_3_1", "L_6_1", "L_7_1", "L_7_2", "L_8_1", "L_8_2"] {
        let Some(entry) = cat.get(id) else {
            o.note(format!("{id}: no data file, skipped"));
            continue;
        };
        let (_, summary, dims) = grading_row(id).unwrap();
        let l = &entry.algebra;
        let a = aut(l);
        let b = Budget::default();
        let got = idempotent_orbit_summary(l, &a, &b).unwrap();
        let mut sdims = Vec::new();
        for orb in idempotent_orbits(l, &a, &b).unwrap() {
            let e = find_idempotents(l)
                .unwrap()
                .into_iter()
                .find(|e| e.element == orb.representative)
                .unwrap();
            sdims.push(
                superize(l, &grading_from_idempotent(l, &e).unwrap())
                    .unwrap()
                    .dim(),
            );
        }
        sdims.sort_unstable();
        o.check(
            got == *summary && sdims == *dims,
            format!("{id}: {}; {:?}", format_orbit_summary(&got), sdims),
        );
    }
    o.within(start, LIMIT_GRADINGS_WITH_AUT);
    o
}

fn entries_up_to(cat: &Catalog, dim: usize) -> Vec<&CatalogEntry> {
    cat.entries().iter().filter(|e| e.dim() <= dim).collect()
}

fn gradings_without_aut(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(true);
    let start = Instant::now();
    for e in entries_up_to(cat, 20) {
        let Some((_, summary, dims)) = grading_row(&e.id) else {
            o.check(false, format!("{}: no expected row", e.id));
            continue;
        };
        let p = grading_profile(&e.algebra).unwrap();
        let sigs: BTreeSet<[usize; 2]> = summary.iter().map(|(_, s)| *s).collect();
        let expected: BTreeSet<usize> = dims.iter().copied().collect();
        let got: BTreeSet<usize> = p.superization_dims.keys().copied().collect();
        let dims_ok = if e.id == "L_15_4" {
            expected.is_subset(&got)
        } else {
            expected == got
        };
        o.check(
            p.signatures == sigs && dims_ok,
            format!(
                "{}: {} idempotents, signatures {:?}, superizations {:?}",
                e.id, p.idempotents, p.signatures, got
            ),
        );
    }
    let missing: Vec<&str> = GRADING_ROWS
        .iter()
        .map(|r| r.0)
        .filter(|id| cat.get(id).is_none())
        .collect();
    o.note(format!("no data for {}", missing.join(", ")));
    o.within(start, LIMIT_GRADINGS_WITHOUT_AUT);
    o
}

fn subalgebra_rows(cat: &Catalog) -> (Outcome, Outcome) {
    let mut gate = Outcome::new(true);
    let mut stretch = Outcome::new(false);
    let start = Instant::now();
    for (id, all, max) in SUBALGEBRA_ROWS {
        let o = if SUBALGEBRA_GATING.contains(id) {
            &mut gate
        } else {
            &mut stretch
        };
        let Some(e) = cat.get(id) else {
            o.note(format!("{id}: no data file, skipped"));
            continue;
        };
        let l = &e.algebra;
        let lat = lattice(l, &aut(l));
        let n = l.dim();
        let got_all = lat.counts_by_dim()[1..n].to_vec();
        let got_max = lat.maximal_counts_by_dim()[1..n].to_vec();
        o.check(
            got_all == all[..n - 1] && got_max == max[..n - 1],
            format!("{id}: all {got_all:?} max {got_max:?}"),
        );
    }
    gate.within(start, LIMIT_SUBALGEBRAS);
    (gate, stretch)
}

fn oracle(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(true);
    let start = Instant::now();
    for e in entries_up_to(cat, 6) {
        let l = &e.algebra;
        let n = l.dim();
        let brute = brute_force_subalgebras(l, 1 << n).unwrap().counts_by_dim(n);
        let weighted = lattice(l, &aut(l)).weighted_counts_by_dim();
        o.check(
            weighted == brute,
            format!("{}: weighted {weighted:?} brute force {brute:?}", e.id),
        );
        let trivial = lattice(l, &MatGroup::trivial(n)).counts_by_dim();
        o.check(
            trivial == brute,
            format!("{}: trivial group reps {trivial:?}", e.id),
        );
    }
    o.within(start, LIMIT_ORACLE);
    o
}

fn subquotient_rows(cat: &Catalog) -> (Outcome, Outcome) {
    let mut gate = Outcome::new(true);
    let mut stretch = Outcome::new(false);
    for (id, expected) in SUBQUOTIENT_ROWS {
        let o = if SUBQUOTIENT_GATING.contains(id) {
            &mut gate
        } else {
            &mut stretch
        };
        let Some(e) = cat.get(id) else {
            o.note(format!("{id}: no data file, skipped"));
            continue;
        };
        let l = &e.algebra;
        let r = simple_subquotients(&lattice(l, &aut(l)), cat, &Budget::default()).unwrap();
        o.check(
            r.identified == *expected && r.unknown.is_empty(),
            format!("{id}: {:?}, {} unknown", r.identified, r.unknown.len()),
        );
    }
    (gate, stretch)
}

/// Checks every computed grading and superization of `l`.
fn grading_properties(l: &LieAlgebra, o: &mut Outcome, id: &str) {
    let idems = find_idempotents(l).unwrap();
    let noncentral: Vec<_> = idems.iter().filter(|e| !e.central).collect();
    o.check(
        !noncentral.is_empty(),
        format!("{id}: non-central idempotent exists"),
    );
    let (mut graded, mut axioms, mut simple) = (true, true, true);
    for e in &noncentral {
        let g = grading_from_idempotent(l, e).unwrap();
        graded &= g.is_grading_of(l);
        let s = superize(l, &g).unwrap();
        axioms &= check_super_axioms(&s).is_ok();
        simple &= is_simple_super(&s).unwrap();
    }
    o.check(
        graded && axioms && simple,
        format!(
            "{id}: {} gradings multiplicative {graded}, squaring axioms {axioms}, super-simple {simple}",
            noncentral.len()
        ),
    );
}

fn properties(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(true);
    for e in cat.entries() {
        let report = e.algebra.validate_axioms();
        o.check(
            report.is_valid() && e.algebra.is_simple(),
            format!("{}: Lie axioms, simple", e.id),
        );
        grading_properties(&e.algebra, &mut o, &e.id);
    }
    for id in ["L_3_1", "L_7_1", "L_7_2", "L_8_1", "L_8_2"] {
        let Some(e) = cat.get(id) else { continue };
        let l = &e.algebra;
        for k in [2, 3] {
            let t = l.tensor_extend(k).unwrap();
            let ok = find_idempotents(l)
                .unwrap()
                .iter()
                .all(|x| is_idempotent(&t, l.tensor_lift(x.element, k)));
            o.check(
                ok,
                format!("{id}: idempotents lift to the GF(2^{k}) extension"),
            );
        }
    }
    for id in ["L_3_1", "L_6_1", "L_7_2"] {
        let Some(e) = cat.get(id) else { continue };
        let l = &e.algebra;
        let a = aut(l);
        let reference: Vec<Subspace> = lattice(l, &a)
            .reps()
            .iter()
            .map(|r| r.space.clone())
            .collect();
        let mut gens: Vec<Mat64> = a.generators().to_vec();
        let mut same = true;
        for _ in 0..gens.len().max(2) {
            gens.rotate_left(1);
            gens.reverse();
            let b = MatGroup::new(l.dim(), gens.clone()).unwrap();
            let reps: Vec<Subspace> = lattice(l, &b)
                .reps()
                .iter()
                .map(|r| r.space.clone())
                .collect();
            same &= reps == reference;
        }
        o.check(
            same,
            format!("{id}: canonical representatives independent of generator order"),
        );
    }
    o
}

fn desk_scale_report(cat: &Catalog) -> Outcome {
    let mut o = Outcome::new(false);
    let budget = Budget::default().with_nodes(200_000);
    for id in ["L_12_1", "L_15_1"] {
        let Some(e) = cat.get(id) else { continue };
        match automorphism_group(&e.algebra, &budget) {
            Ok(a) => {
                let s = idempotent_orbit_summary(&e.algebra, &a, &budget);
                o.note(format!(
                    "{id}: idempotent orbits {:?}",
                    s.map(|s| format_orbit_summary(&s))
                ));
            }
            Err(err) => o.note(format!("{id}: automorphism search stopped: {err}")),
        }
    }
    for id in ["L_14_1", "L_15_9", "L_16_1"] {
        let Some(e) = cat.get(id) else { continue };
        let l = &e.algebra;
        let a = match automorphism_group(l, &budget) {
            Ok(a) => a,
            Err(err) => {
                o.note(format!("{id}: automorphism search stopped: {err}"));
                continue;
            }
        };
        match all_subalgebras_partial(l, &a, &SubalgConfig::default(), &budget) {
            Ok(lat) => o.note(format!(
                "{id}: {} orbits so far, complete {}, stopped by {:?}",
                lat.reps().len(),
                lat.is_complete(),
                lat.stopped_by().map(|e| e.to_string())
            )),
            Err(err) => o.note(format!("{id}: {err}")),
        }
    }
    o
}

#[test]
fn acceptance() {
    let cat = catalog();
    let criteria: Vec<(String, Outcome)> = {
        let (c4, c4s) = subalgebra_rows(&cat);
        let (c6, c6s) = subquotient_rows(&cat);
        vec![
            ("1 worked example L_3_1".into(), worked_example(&cat)),
            (
                "2 gradings and superizations with Aut, dim <= 8".into(),
                gradings_with_aut(&cat),
            ),
            (
                "3 signatures without Aut, dim <= 20".into(),
                gradings_without_aut(&cat),
            ),
            ("4 subalgebra orbit counts, dim <= 8".into(), c4),
            (
                "4 stretch: subalgebra orbit counts L_9_1, L_10_1".into(),
                c4s,
            ),
            (
                "5 orbit method against brute force, dim <= 6".into(),
                oracle(&cat),
            ),
            ("6 simple subquotients, dim <= 8".into(), c6),
            (
                "6 stretch: simple subquotients L_6_1, L_9_1, L_10_1".into(),
                c6s,
            ),
            ("7 property suites".into(), properties(&cat)),
            (
                "8 desk-scale limits (reported only)".into(),
                desk_scale_report(&cat),
            ),
        ]
    };
    let mut failed = Vec::new();
    println!();
    for (name, o) in &criteria {
        let status = match (o.pass, o.gating) {
            (true, true) => "PASS",
            (false, true) => "FAIL",
            (true, false) => "PASS (non-gating)",
            (false, false) => "FAIL (non-gating)",
        };
        println!("criterion {name}: {status}");
        for line in &o.lines {
            println!("    {line}");
        }
        if o.gating && !o.pass {
            failed.push(name.clone());
        }
    }
    let summary: BTreeMap<&str, usize> = [
        ("gating", criteria.iter().filter(|c| c.1.gating).count()),
        ("failed", failed.len()),
    ]
    .into_iter()
    .collect();
    println!("summary: {summary:?}");
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
