//! Cross-cutting invariants: serialization round trips, transform
//! algebra, construction sufficiency, and the iterated generator.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boolfn::constructions::{affine_shift_triple, hodzic, mm_bent, random_mm_bent, rothaus};
use boolfn::iteration::run_iteration;
use boolfn::spectral::{is_bent, weight_from_spectrum, wht_fast, wht_naive};
use boolfn::{BentTriple, BooleanFunction, HodzicVariant, RothausVariant};

fn arb_function(ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BooleanFunction> {
    ns.prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1usize << n)
            .prop_map(move |bits| BooleanFunction::from_fn(n, |i| bits[i]).unwrap())
    })
}

fn arb_pair(
    ns: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (BooleanFunction, BooleanFunction)> {
    ns.prop_flat_map(|n| {
        let len = 1usize << n;
        (
            proptest::collection::vec(any::<bool>(), len),
            proptest::collection::vec(any::<bool>(), len),
        )
            .prop_map(move |(xs, ys)| {
                (
                    BooleanFunction::from_fn(n, |i| xs[i]).unwrap(),
                    BooleanFunction::from_fn(n, |i| ys[i]).unwrap(),
                )
            })
    })
}

#[test]
fn serialization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e71a1);
    for i in 0..1200u32 {
        let n = 1 + (i as usize % 12);
        let f = BooleanFunction::random(n, &mut rng).unwrap();
        let binary = f.to_binary_string();
        assert_eq!(BooleanFunction::parse(&binary).unwrap(), f);
        if n >= 2 {
            let hex = f.to_hex_string().unwrap();
            assert_eq!(BooleanFunction::parse(&hex).unwrap(), f, "hex {hex}");
        }
    }
}

proptest! {
    #[test]
    fn moebius_is_self_inverse(f in arb_function(1..=10)) {
        let anf = f.moebius();
        prop_assert_eq!(&anf.as_table().moebius().as_table().clone(), &f);
    }

    #[test]
    fn xor_weight_is_hamming_distance(pair in arb_pair(1..=10)) {
        let (f, g) = pair;
        let direct = (0..f.table_len())
            .filter(|&i| f.get(i) != g.get(i))
            .count() as u64;
        prop_assert_eq!(f.xor(&g).unwrap().hamming_weight(), direct);
    }

    #[test]
    fn decompose_recompose_is_identity(f in arb_function(3..=10)) {
        let parts = f.decompose_top2().unwrap();
        prop_assert_eq!(BooleanFunction::concat(&parts).unwrap(), f);
    }

    #[test]
    fn direct_sum_is_associative(
        f in arb_function(1..=4),
        g in arb_function(1..=4),
        h in arb_function(1..=4),
    ) {
        let left = f.direct_sum(&g).unwrap().direct_sum(&h).unwrap();
        let right = f.direct_sum(&g.direct_sum(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn fast_transform_matches_reference(f in arb_function(1..=8)) {
        let fast = wht_fast(&f);
        let naive = wht_naive(&f).unwrap();
        prop_assert_eq!(fast.values(), naive.values());
        prop_assert!(fast.parseval_holds());
    }

    #[test]
    fn weight_recovered_from_spectrum(f in arb_function(5..=12)) {
        let s = wht_fast(&f);
        prop_assert_eq!(weight_from_spectrum(&s).unwrap(), f.hamming_weight());
    }
}

fn random_masks(n: usize, rng: &mut ChaCha8Rng) -> (Vec<bool>, Vec<bool>) {
    let l1: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let l2: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    (l1, l2)
}

#[test]
fn shifted_triples_feed_both_constructions() {
    // 200 affine-shift triples per n: every variant of both extensions
    // must come out bent
    let mut rng = ChaCha8Rng::seed_from_u64(0xfac7);
    for n in [2usize, 4, 6] {
        for i in 0..200u64 {
            let base = random_mm_bent(n / 2, (n as u64) << 32 | i).unwrap();
            let (l1, l2) = random_masks(n, &mut rng);
            let t = affine_shift_triple(&base, &l1, &l2).unwrap();
            assert!(t.all_bent());
            for v in [
                RothausVariant::F,
                RothausVariant::FPrime,
                RothausVariant::FDoublePrime,
            ] {
                assert!(is_bent(&rothaus(&t, v).unwrap()), "n={n} i={i} {v:?}");
            }
            for v in [
                HodzicVariant::G,
                HodzicVariant::GPrime,
                HodzicVariant::GDoublePrime,
            ] {
                let g = hodzic(&t, v).unwrap();
                assert_eq!(g.n(), n + 4);
                assert!(is_bent(&g), "n={n} i={i} {v:?}");
            }
        }
    }
}

#[test]
fn mm_exhaustive_for_m2() {
    // all 24 permutations of four points, all 16 rho tables
    let mut perms = Vec::new();
    let mut items = [0usize, 1, 2, 3];
    permute(&mut items, 0, &mut perms);
    assert_eq!(perms.len(), 24);
    for pi in &perms {
        for rho_bits in 0..16u64 {
            let rho = BooleanFunction::from_table_bits(2, rho_bits).unwrap();
            let f = mm_bent(pi, &rho).unwrap();
            assert!(is_bent(&f), "pi={pi:?} rho={rho_bits:04b}");
        }
    }
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.to_vec());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[test]
fn degenerate_triple_collapses_to_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let and2 = BooleanFunction::parse("0001").unwrap();
    for i in 0..20u64 {
        let a = random_mm_bent(2, i).unwrap();
        let t = BentTriple::new(a.clone(), a.clone(), a.clone()).unwrap();
        let expected = a.direct_sum(&and2).unwrap();
        for v in [
            RothausVariant::F,
            RothausVariant::FPrime,
            RothausVariant::FDoublePrime,
        ] {
            assert_eq!(rothaus(&t, v).unwrap(), expected);
        }
        // direct sums of bent functions stay bent
        let other = random_mm_bent(2, rng.gen()).unwrap();
        assert!(is_bent(&a.direct_sum(&other).unwrap()));
    }
}

#[test]
fn iteration_battery_full_depth() {
    // 50+ seeds over n in {2, 4}, each driven to the last level the
    // capacity cap admits: every member and the triple sum must verify
    let mut rng = ChaCha8Rng::seed_from_u64(0x17e2a7e);
    let mut count = 0;
    for n in [2usize, 4] {
        let depth = (boolfn::MAX_VARIABLES - n) / 4;
        for i in 0..26u64 {
            let base = random_mm_bent(n / 2, 0x5eed_0000 + i).unwrap();
            let (l1, l2) = random_masks(n, &mut rng);
            let seed = affine_shift_triple(&base, &l1, &l2).unwrap();
            let levels = run_iteration(seed, depth, true).unwrap();
            assert_eq!(levels.len(), depth);
            for (k, state) in levels.iter().enumerate() {
                assert_eq!(state.triple().n(), n + 4 * (k + 1));
                assert!(state.triple().all_bent());
            }
            assert_eq!(levels[depth - 1].verified_through(), depth);
            assert_eq!(levels[depth - 1].provenance().len(), depth);
            count += 1;
        }
    }
    assert!(count >= 50);
}

#[test]
fn iteration_caps_at_24_variables() {
    let and2 = BooleanFunction::parse("0001").unwrap();
    let seed2 = BentTriple::new(and2.clone(), and2.clone(), and2).unwrap();
    let levels = run_iteration(seed2.clone(), 5, true).unwrap();
    assert_eq!(levels.last().unwrap().triple().n(), 22);
    assert!(levels.last().unwrap().next_level().is_err());
    assert!(run_iteration(seed2, 6, true).is_err());
}

#[test]
fn iteration_is_deterministic() {
    let base = random_mm_bent(2, 11).unwrap();
    let seed = || {
        affine_shift_triple(
            &base,
            &[true, true, false, false],
            &[false, false, true, false],
        )
        .unwrap()
    };
    let first = run_iteration(seed(), 3, false).unwrap();
    let second = run_iteration(seed(), 3, false).unwrap();
    for (x, y) in first.iter().zip(&second) {
        assert_eq!(x.triple().a(), y.triple().a());
        assert_eq!(x.triple().b(), y.triple().b());
        assert_eq!(x.triple().c(), y.triple().c());
        assert_eq!(x.provenance(), y.provenance());
    }
}
