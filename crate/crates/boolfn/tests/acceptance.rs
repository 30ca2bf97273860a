//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with its elapsed time and asserting its time budget.
//!
//! Run with `cargo test -p boolfn --test acceptance -- --nocapture` to
//! see the lines as they complete.

use std::collections::HashSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boolfn::constructions::{affine_shift_triple, random_mm_bent, rothaus_all_variants};
use boolfn::iteration::run_iteration;
use boolfn::spectral::{
    composition_wht, is_bent, weight_from_spectrum, wht_fast, wht_naive,
};
use boolfn::theorems::{
    first_level_sum, hodzic_level_sum, verify_second_level, verify_theorem1, verify_theorem2,
    EnumerationMode,
};
use boolfn::BooleanFunction;

fn criterion(name: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => {
            if elapsed <= budget {
                println!("[PASS] {name} ({elapsed:.2?}, budget {budget:?})");
            } else {
                println!("[FAIL] {name}: took {elapsed:.2?}, budget {budget:?}");
                panic!("{name} exceeded its time budget");
            }
        }
        Err(cause) => {
            println!("[FAIL] {name} ({elapsed:.2?})");
            resume_unwind(cause);
        }
    }
}

fn coordinates(n: usize) -> Vec<BooleanFunction> {
    (0..n)
        .map(|i| BooleanFunction::coordinate(n, i).unwrap())
        .collect()
}

#[test]
fn c01_paper_spectra_exact() {
    // built outside the timed body; the criterion times the transforms
    let x5 = coordinates(5);
    let pair = |i: usize, j: usize| x5[i].and(&x5[j]).unwrap();
    let h5 = pair(0, 1)
        .xor(&pair(0, 2))
        .unwrap()
        .xor(&pair(1, 2))
        .unwrap()
        .xor(&pair(3, 4))
        .unwrap()
        .xor(&x5[0].xor(&x5[1]).unwrap().and(&x5[3]).unwrap())
        .unwrap()
        .xor(&x5[0].xor(&x5[2]).unwrap().and(&x5[4]).unwrap())
        .unwrap();
    let x3 = coordinates(3);
    let h3 = x3[0]
        .and(&x3[1])
        .unwrap()
        .xor(&x3[0].and(&x3[2]).unwrap())
        .unwrap()
        .xor(&x3[1].and(&x3[2]).unwrap())
        .unwrap()
        .xor(&x3[0])
        .unwrap()
        .xor(&x3[1])
        .unwrap()
        .xor(&x3[2])
        .unwrap();
    criterion(
        "criterion 1: paper spectra, exact",
        Duration::from_millis(1),
        || {
            let s5 = wht_naive(&h5).unwrap();
            for u in 0..32usize {
                let expect = match u {
                    1 | 18 | 12 => 16, // (1,0,0,0,0), (0,1,0,0,1), (0,0,1,1,0)
                    31 => -16,         // (1,1,1,1,1)
                    _ => 0,
                };
                assert_eq!(s5.value(u), expect, "5-variable h at u = {u}");
            }
            let s3 = wht_fast(&h3);
            for u in 0..8usize {
                let expect = match u {
                    0 => -4,
                    6 | 5 | 3 => 4, // (0,1,1), (1,0,1), (1,1,0)
                    _ => 0,
                };
                assert_eq!(s3.value(u), expect, "3-variable h at u = {u}");
            }
            assert_eq!(wht_fast(&h5).values(), s5.values());
        },
    );
}

#[test]
fn c02_transform_oracle() {
    criterion(
        "criterion 2: wht_fast = wht_naive, 500 functions per n in 1..=12",
        Duration::from_secs(10),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c2);
            for n in 1..=12usize {
                for _ in 0..500 {
                    let f = BooleanFunction::random(n, &mut rng).unwrap();
                    let fast = wht_fast(&f);
                    let naive = wht_naive(&f).unwrap();
                    assert_eq!(fast.values(), naive.values(), "n = {n}");
                }
            }
        },
    );
}

#[test]
fn c03_parseval_on_every_spectrum() {
    criterion(
        "criterion 3: Parseval on every criterion-2 spectrum",
        Duration::from_secs(10),
        || {
            // same seed as criterion 2, so the same spectra are covered
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c2);
            for n in 1..=12usize {
                for _ in 0..500 {
                    let f = BooleanFunction::random(n, &mut rng).unwrap();
                    assert!(wht_fast(&f).parseval_holds(), "fast, n = {n}");
                    assert!(wht_naive(&f).unwrap().parseval_holds(), "naive, n = {n}");
                }
            }
        },
    );
}

#[test]
fn c04_bent_census_on_four_variables() {
    criterion(
        "criterion 4: 896 bent functions among all 2^16 on 4 variables",
        Duration::from_secs(30),
        || {
            let count = (0..(1u64 << 16))
                .filter(|&t| is_bent(&BooleanFunction::from_table_bits(4, t).unwrap()))
                .count();
            assert_eq!(count, 896);
        },
    );
}

#[test]
fn c05_theorem1_exhaustive_n2() {
    criterion(
        "criterion 5: two-variable extension biconditional + spectral cases, all 4096 triples",
        Duration::from_secs(60),
        || {
            let report = verify_theorem1(2, EnumerationMode::Exhaustive).unwrap();
            assert_eq!(report.cases_checked, 4096);
            assert!(report.success(), "{:#?}", report.counterexamples);
        },
    );
}

#[test]
fn c06_theorem2_exhaustive_n_1_2_3() {
    criterion(
        "criterion 6: identity forces the diagonal at n = 1, 2, 3",
        Duration::from_secs(600),
        || {
            for (n, cases, satisfying) in
                [(1usize, 64u64, 4u64), (2, 4096, 16), (3, 16_777_216, 256)]
            {
                let report = verify_theorem2(n, EnumerationMode::Exhaustive).unwrap();
                assert_eq!(report.cases_checked, cases, "n = {n}");
                assert_eq!(report.satisfying_count, Some(satisfying), "n = {n}");
                assert!(report.success(), "n = {n}: {:#?}", report.counterexamples);
            }
        },
    );
}

#[test]
fn c07_composition_formula() {
    criterion(
        "criterion 7: composition transform formula on 100 random (h, F) pairs",
        Duration::from_secs(30),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c7);
            for case in 0..100 {
                let k = rng.gen_range(1..=4usize);
                let n = rng.gen_range(1..=8usize);
                let h = BooleanFunction::random(k, &mut rng).unwrap();
                let fs: Vec<BooleanFunction> = (0..k)
                    .map(|_| BooleanFunction::random(n, &mut rng).unwrap())
                    .collect();
                // direct composition, then the reference transform
                let composed = BooleanFunction::from_fn(n, |x| {
                    let z = fs
                        .iter()
                        .enumerate()
                        .fold(0usize, |acc, (i, f)| acc | ((f.get(x) as usize) << i));
                    h.get(z)
                })
                .unwrap();
                let oracle = wht_naive(&composed).unwrap();
                for u_idx in 0..(1usize << n) {
                    let u: Vec<bool> = (0..n).map(|i| (u_idx >> i) & 1 == 1).collect();
                    let via_formula = composition_wht(&h, &fs, &u).unwrap();
                    assert_eq!(
                        via_formula,
                        oracle.value(u_idx),
                        "case {case}: k = {k}, n = {n}, u = {u_idx}"
                    );
                }
            }
        },
    );
}

#[test]
fn c08_first_level_identity() {
    criterion(
        "criterion 8: f+f'+f'' = (AB+AC+BC) + x_(n+1)x_(n+2), exhaustive n=2 and sampled n=4,6",
        Duration::from_secs(60),
        || {
            let and2 = BooleanFunction::parse("0001").unwrap();
            let check = |a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction| {
                // the operation asserts the identity internally; re-derive
                // both sides here independently
                let total = first_level_sum(a, b, c).unwrap();
                let [f, fp, fpp] = rothaus_all_variants(a, b, c).unwrap();
                let by_tables = f.xor(&fp).unwrap().xor(&fpp).unwrap();
                let d = a
                    .and(b)
                    .unwrap()
                    .xor(&a.and(c).unwrap())
                    .unwrap()
                    .xor(&b.and(c).unwrap())
                    .unwrap();
                let closed_form = d.direct_sum(&and2).unwrap();
                assert_eq!(total, by_tables);
                assert_eq!(total, closed_form);
            };
            for t in 0..(1u64 << 12) {
                let a = BooleanFunction::from_table_bits(2, t & 15).unwrap();
                let b = BooleanFunction::from_table_bits(2, (t >> 4) & 15).unwrap();
                let c = BooleanFunction::from_table_bits(2, t >> 8).unwrap();
                check(&a, &b, &c);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c8);
            for n in [4usize, 6] {
                for _ in 0..200 {
                    let a = BooleanFunction::random(n, &mut rng).unwrap();
                    let b = BooleanFunction::random(n, &mut rng).unwrap();
                    let c = BooleanFunction::random(n, &mut rng).unwrap();
                    check(&a, &b, &c);
                }
            }
        },
    );
}

#[test]
fn c09_second_level_obstruction() {
    criterion(
        "criterion 9: majority-of-variants decomposition and bentness obstruction, all 4096 triples",
        Duration::from_secs(60),
        || {
            let report = verify_second_level(2, EnumerationMode::Exhaustive).unwrap();
            assert_eq!(report.cases_checked, 4096);
            assert!(report.success(), "{:#?}", report.counterexamples);
        },
    );
}

#[test]
fn c10_weight_identity_exhaustive() {
    criterion(
        "criterion 10: W(0) + 2 wt = 2^n for every function on n <= 4",
        Duration::from_secs(60),
        || {
            for n in 1..=4usize {
                for t in 0..(1u64 << (1 << n)) {
                    let f = BooleanFunction::from_table_bits(n, t).unwrap();
                    let s = wht_fast(&f);
                    assert_eq!(
                        weight_from_spectrum(&s).unwrap(),
                        f.hamming_weight(),
                        "n = {n}, table = {t:b}"
                    );
                }
            }
        },
    );
}

#[test]
fn c11_iteration_to_twenty_variables() {
    criterion(
        "criterion 11: verified iteration from 4 variables through 8, 12, 16, 20",
        Duration::from_secs(120),
        || {
            let base = BooleanFunction::parse("0001000100011110").unwrap();
            let seed = affine_shift_triple(
                &base,
                &[true, false, false, false],
                &[false, false, true, false],
            )
            .unwrap();
            let levels = run_iteration(seed, 4, true).unwrap();
            let expected_n = [8usize, 12, 16, 20];
            assert_eq!(levels.len(), 4);
            for (state, &n) in levels.iter().zip(&expected_n) {
                assert_eq!(state.triple().n(), n);
                // run_iteration already verified; re-check through the
                // transform to keep this criterion self-contained
                assert!(is_bent(state.triple().a()), "a at n = {n}");
                assert!(is_bent(state.triple().b()), "b at n = {n}");
                assert!(is_bent(state.triple().c()), "c at n = {n}");
                assert!(is_bent(&state.triple().sum()), "sum at n = {n}");
            }
            assert_eq!(levels[3].verified_through(), 4);
        },
    );
}

#[test]
fn c12_extracted_block_is_fixed() {
    criterion(
        "criterion 12: the 4-variable block of g+g'+g'' is one fixed bent function",
        Duration::from_secs(60),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c12);
            let mut seen = HashSet::new();
            let mut reference: Option<BooleanFunction> = None;
            let mut distinct = 0;
            while distinct < 50 {
                let base = random_mm_bent(2, rng.gen()).unwrap();
                let l1: Vec<bool> = (0..4).map(|_| rng.gen()).collect();
                let l2: Vec<bool> = (0..4).map(|_| rng.gen()).collect();
                let t = affine_shift_triple(&base, &l1, &l2).unwrap();
                let key = (
                    t.a().to_binary_string(),
                    t.b().to_binary_string(),
                    t.c().to_binary_string(),
                );
                if !seen.insert(key) {
                    continue;
                }
                distinct += 1;
                let r = hodzic_level_sum(t.a(), t.b(), t.c()).unwrap();
                assert!(r.is_bent_given_quadruple);
                assert!(is_bent(&r.q));
                match &reference {
                    None => reference = Some(r.q),
                    Some(q) => assert_eq!(&r.q, q, "block differs at seed {distinct}"),
                }
            }
        },
    );
}
