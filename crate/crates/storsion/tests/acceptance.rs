//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p storsion --test acceptance -- --nocapture` to see
//! the per-criterion lines.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use storsion::{
    dataset, enumerate_stors, gen_typea, heart_of, interval_modules, is_storsion, pair_from_succ,
    succ_interval_iso, verify_heart_lemma, verify_main_theorem_in, FiniteExtCat, LintFamily,
    NegExtMode, Orientation,
};

fn criterion(name: &str, passed: bool, detail: &str) {
    println!("[{}] {}", if passed { "PASS" } else { "FAIL" }, name);
    assert!(passed, "{name}: {detail}");
}

fn paper_orientation() -> Orientation {
    "1>2<3<4".parse().unwrap()
}

/// Every dataset plus every generated type-A category up to `n`.
fn sweep_categories(max_n: usize) -> Vec<FiniteExtCat> {
    let mut cats: Vec<FiniteExtCat> = storsion::DATASET_NAMES
        .iter()
        .map(|name| dataset(name).unwrap())
        .collect();
    for n in 1..=max_n {
        for orient in Orientation::all(n) {
            for mode in [NegExtMode::Zero, NegExtMode::Ext1] {
                cats.push(gen_typea(&orient, mode));
            }
        }
    }
    cats
}

#[test]
fn acceptance_01_golden_succ_lattice() {
    let start = Instant::now();
    let quiver = paper_orientation().quiver();
    let lattice = quiver.enumerate_succ().unwrap();
    let names: Vec<Vec<&str>> = lattice
        .sets
        .iter()
        .map(|&m| quiver.member_names(m))
        .collect();
    let expected = vec![
        vec![],
        vec!["2"],
        vec!["1", "2"],
        vec!["2", "3"],
        vec!["1", "2", "3"],
        vec!["2", "3", "4"],
        vec!["1", "2", "3", "4"],
    ];
    // the known Hasse quiver of this lattice: A->B, A->C, B->D, B->E, C->E, D->F, E->F, F->G
    // with A..G = indices 6,4,5,2,3,1,0 in our ordering
    let expected_edges = vec![
        (1, 0),
        (2, 1),
        (3, 1),
        (4, 2),
        (4, 3),
        (5, 3),
        (6, 4),
        (6, 5),
    ];
    let elapsed = start.elapsed();
    criterion(
        "golden succ lattice of 1>2<3<4",
        names == expected && lattice.hasse_edges == expected_edges && elapsed.as_secs() < 1,
        &format!(
            "got {:?} with edges {:?} in {:?}",
            names, lattice.hasse_edges, elapsed
        ),
    );
}

#[test]
fn acceptance_02_golden_stors_poset() {
    let start = Instant::now();
    let orient = paper_orientation();
    let cat = gen_typea(&orient, NegExtMode::Ext1);
    let poset = enumerate_stors(&cat).unwrap();
    let lattice = orient.quiver().enumerate_succ().unwrap();

    let mut ok = poset.len() == 7 && lattice.len() == 7;
    let mut detail = format!("{} pairs", poset.len());
    for &mask in &lattice.sets {
        let pair = pair_from_succ(&cat, &orient, mask).unwrap();
        let found = poset
            .position_by_torsion(&pair.torsion)
            .map(|k| poset.pairs[k].free == pair.free && poset.pairs[k].flags.all())
            .unwrap_or(false);
        ok &= found && pair.flags.all();
    }

    let b = pair_from_succ(&cat, &orient, 0b0111).unwrap();
    ok &= b.torsion.len() == 6 && cat.member_names(&b.free) == ["[4,4]"];
    let f = pair_from_succ(&cat, &orient, 0b0010).unwrap();
    ok &= cat.member_names(&f.torsion) == ["[2,2]"];
    // the corresponding torsion-free class: every interval supported in {1,3,4}
    let f_free = cat.member_names(&f.free);
    ok &= f_free == ["[1,1]", "[3,3]", "[3,4]", "[4,4]"];
    if !ok {
        detail = format!("{detail}; I={{2}} gave F = {:?}", f_free);
    }
    let elapsed = start.elapsed();
    criterion(
        "golden stors poset of 1>2<3<4 (ext1)",
        ok && elapsed.as_secs() < 5,
        &detail,
    );
}

#[test]
fn acceptance_03_golden_interval_heart() {
    let orient = paper_orientation();
    let cat = gen_typea(&orient, NegExtMode::Ext1);
    let t1 = pair_from_succ(&cat, &orient, 0b0010).unwrap(); // I1 = {2}
    let t2 = pair_from_succ(&cat, &orient, 0b1110).unwrap(); // I2 = {2,3,4}
    let interval = heart_of(&cat, &t1, &t2).unwrap();

    let mut ok = cat.member_names(&interval.heart) == ["[3,3]", "[3,4]", "[4,4]"];
    let heart_poset = enumerate_stors(&interval.heart_cat).unwrap();
    ok &= heart_poset.len() == 3;

    // phi follows I -> I \ I1 on torsion classes, psi follows J -> I1 union J
    let expected: Vec<(u64, Vec<&str>)> = vec![
        (0b0010, vec![]),
        (0b0110, vec!["[3,3]"]),
        (0b1110, vec!["[3,3]", "[3,4]", "[4,4]"]),
    ];
    for (mask, heart_torsion) in &expected {
        let t = pair_from_succ(&cat, &orient, *mask).unwrap();
        let image = interval.phi(&t).unwrap();
        ok &=
            image.flags.all() && interval.heart_cat.member_names(&image.torsion) == *heart_torsion;
        let back = interval.psi(&cat, &image).unwrap();
        ok &= back.torsion == t.torsion && back.free == t.free;
    }
    criterion(
        "golden interval heart for [t_{2}, t_{2,3,4}]",
        ok,
        &format!("heart = {:?}", cat.member_names(&interval.heart)),
    );
}

#[test]
fn acceptance_04_nakayama_negative_test() {
    let e2 = dataset("nakayama_A_e2").unwrap();
    let pair = is_storsion(
        &e2,
        e2.subcat(["2/1", "2"]).unwrap(),
        e2.subcat(["1"]).unwrap(),
    );
    let ok_e2 = pair.flags.stp1 && pair.flags.stp2 && !pair.flags.stp3;

    let e1 = dataset("nakayama_A_e1").unwrap();
    let pair = is_storsion(
        &e1,
        e1.subcat(["2/1", "2"]).unwrap(),
        e1.subcat(["1"]).unwrap(),
    );
    let ok_e1 = pair.flags.all();
    criterion(
        "negative test on the Nakayama pair ({2/1,2},{1})",
        ok_e2 && ok_e1,
        &format!("e2 flags ok: {ok_e2}, e1 flags ok: {ok_e1}"),
    );
}

#[test]
fn acceptance_05_main_theorem_suite() {
    let start = Instant::now();
    let mut intervals = 0usize;
    let mut failures = Vec::new();
    for cat in sweep_categories(4) {
        let poset = enumerate_stors(&cat).unwrap();
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if !poset.leq(i, j) {
                    continue;
                }
                intervals += 1;
                let report = verify_main_theorem_in(&cat, &poset, i, j).unwrap();
                if !report.passed {
                    failures.push(format!(
                        "{}: [{}, {}]: {:?}",
                        cat.label(),
                        poset.label(&cat, i),
                        poset.label(&cat, j),
                        report.counterexamples
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    criterion(
        "main theorem on every interval (type A n<=4, both modes, datasets)",
        failures.is_empty() && elapsed.as_secs() < 120,
        &format!(
            "{} intervals in {:?}, failures: {:?}",
            intervals, elapsed, failures
        ),
    );
    println!("  checked {intervals} intervals in {elapsed:?}");
}

#[test]
fn acceptance_06_heart_lemma_suite() {
    let mut checked = 0usize;
    let mut ok = true;
    for cat in sweep_categories(4) {
        let poset = enumerate_stors(&cat).unwrap();
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if poset.leq(i, j) {
                    checked += 1;
                    ok &= verify_heart_lemma(&cat, &poset.pairs[j], &poset.pairs[i]).unwrap();
                }
            }
        }
    }
    criterion(
        "heart lemma on every comparable pair in the sweep",
        ok,
        &format!("{checked} comparable pairs"),
    );
}

#[test]
fn acceptance_07_oracle_equivalence() {
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=4 {
        for orient in Orientation::all(n) {
            let cat = gen_typea(&orient, NegExtMode::Ext1);
            let modules = interval_modules(n);
            for (i, x) in modules.iter().enumerate() {
                for (j, y) in modules.iter().enumerate() {
                    let hom = common::hom_dim_f2(&orient, (x.a, x.b), (y.a, y.b));
                    let ext = common::ext_dim_f2(&orient, (x.a, x.b), (y.a, y.b));
                    if cat.hom_dim(i, j) != hom || cat.ext_dim(i, j) != Some(ext) {
                        ok = false;
                        detail = format!(
                            "{}: hom/ext({},{}) = {}/{:?} but oracle says {}/{}",
                            orient.compact(),
                            x.name(),
                            y.name(),
                            cat.hom_dim(i, j),
                            cat.ext_dim(i, j),
                            hom,
                            ext
                        );
                    }
                }
            }
        }
    }
    criterion(
        "hom/ext agree with the F2 representation oracle",
        ok,
        &detail,
    );
}

#[test]
fn acceptance_08_derived_counts_for_a2() {
    let orient: Orientation = "1>2".parse().unwrap();
    let zero = gen_typea(&orient, NegExtMode::Zero);
    let ext1 = gen_typea(&orient, NegExtMode::Ext1);
    let zero_poset = enumerate_stors(&zero).unwrap();
    let ext1_poset = enumerate_stors(&ext1).unwrap();

    let brute_zero = common::stors_brute_force(&zero);
    let brute_ext1 = common::stors_brute_force(&ext1);
    let enumerated_zero: BTreeSet<(u64, u64)> = zero_poset
        .pairs
        .iter()
        .map(|p| (p.torsion.mask(), p.free.mask()))
        .collect();
    let enumerated_ext1: BTreeSet<(u64, u64)> = ext1_poset
        .pairs
        .iter()
        .map(|p| (p.torsion.mask(), p.free.mask()))
        .collect();

    let ok = zero_poset.len() == 5
        && ext1_poset.len() == 3
        && brute_zero.iter().copied().collect::<BTreeSet<_>>() == enumerated_zero
        && brute_ext1.iter().copied().collect::<BTreeSet<_>>() == enumerated_ext1;
    criterion(
        "derived counts: 1>2 has 5 torsion pairs and 3 s-torsion pairs",
        ok,
        &format!(
            "zero: {} vs brute {}, ext1: {} vs brute {}",
            zero_poset.len(),
            brute_zero.len(),
            ext1_poset.len(),
            brute_ext1.len()
        ),
    );
}

#[test]
fn acceptance_09_combinatorial_iso_suite() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x51cc);
    let mut ran = 0usize;
    let mut ok = true;
    let mut detail = String::new();
    while ran < 200 {
        let n = rng.gen_range(1..=8usize);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.35) {
                    arrows.push((vertices[perm[i]].clone(), vertices[perm[j]].clone()));
                }
            }
        }
        let quiver = storsion::Quiver::new(vertices, &arrows).unwrap();

        // independent successor-closed scan
        let succ_sets: Vec<u64> = (0..1u64 << n)
            .filter(|&mask| {
                quiver
                    .arrows()
                    .iter()
                    .all(|&(s, t)| mask >> s & 1 == 0 || mask >> t & 1 == 1)
            })
            .collect();
        let i2 = succ_sets[rng.gen_range(0..succ_sets.len())];
        let nested: Vec<u64> = succ_sets
            .iter()
            .copied()
            .filter(|&m| m & !i2 == 0)
            .collect();
        let i1 = nested[rng.gen_range(0..nested.len())];

        let iso = succ_interval_iso(&quiver, i1, i2).unwrap();
        let expected_interval: Vec<u64> = succ_sets
            .iter()
            .copied()
            .filter(|&m| i1 & !m == 0 && m & !i2 == 0)
            .collect();
        let mut sorted_iso = iso.interval.clone();
        sorted_iso.sort_unstable();
        let mut sorted_expected = expected_interval;
        sorted_expected.sort_unstable();
        if !(iso.verified && sorted_iso == sorted_expected) {
            ok = false;
            detail = format!("quiver {:?} with I1={i1:b}, I2={i2:b}", quiver.to_json());
        }
        ran += 1;
    }
    let elapsed = start.elapsed();
    criterion(
        "interval isomorphism on 200 random acyclic quivers",
        ok && elapsed.as_secs() < 30,
        &format!("{ran} quivers in {elapsed:?}; {detail}"),
    );
}

#[test]
fn acceptance_10_lint_cleanliness() {
    let mut ok = true;
    let mut detail = String::new();
    for cat in sweep_categories(5) {
        let violations = cat.validate_lints();
        if !violations.is_empty() {
            ok = false;
            detail = format!("{}: {}", cat.label(), violations[0]);
        }
    }

    let broken = FiniteExtCat::from_spec_str(include_str!("fixtures/broken_lint.json")).unwrap();
    let violations = broken.validate_lints();
    let fires = !violations.is_empty()
        && violations.iter().any(|v| {
            v.family == LintFamily::NegExtContravariant && v.middle == "P" && v.witness == "S1"
        });
    if !fires {
        ok = false;
        detail = format!("broken fixture produced {violations:?}");
    }
    criterion(
        "lints: clean on generated and bundled, firing on the broken fixture",
        ok,
        &detail,
    );

    // round-trip: generator output reloads as an accepted, lint-clean category
    let cat = gen_typea(&paper_orientation(), NegExtMode::Ext1);
    let reloaded = FiniteExtCat::from_spec_str(&cat.to_spec_string()).unwrap();
    criterion(
        "round-trip: generated spec reloads lint-clean",
        reloaded.validate_lints().is_empty() && reloaded.to_spec_string() == cat.to_spec_string(),
        "round-trip mismatch",
    );
}

#[test]
fn acceptance_empty_interval_star_examples() {
    // star with a zero side and perp computations recorded as golden values
    let orient: Orientation = "1>2".parse().unwrap();
    let cat = gen_typea(&orient, NegExtMode::Ext1);
    let x = cat.subcat(["[2,2]"]).unwrap();
    let y = cat.subcat(["[1,1]"]).unwrap();
    let star = cat.star_subcat(&x, &y);
    let ok = cat.member_names(&star) == ["[1,1]", "[1,2]", "[2,2]"]
        && cat.member_names(&cat.right_perp(&cat.subcat(["[1,2]"]).unwrap())) == ["[2,2]"]
        && cat.obj_in_star(&cat.obj(["[1,2]"]).unwrap(), &x, &y)
        && !cat.is_extension_closed(&cat.subcat(["[1,1]", "[2,2]"]).unwrap());
    criterion("golden star and perp values in the A2 category", ok, "");
}

#[test]
fn acceptance_succ_count_smoke() {
    // `succ --count` semantics: the empty-arrow three-vertex quiver has 8 subsets
    let quiver = storsion::Quiver::new(vec!["a".into(), "b".into(), "c".into()], &[]).unwrap();
    criterion(
        "three isolated vertices give 8 successor-closed subsets",
        quiver.enumerate_succ().unwrap().len() == 8,
        "",
    );
}
