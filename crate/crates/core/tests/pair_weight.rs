//! Pair-weight properties against a direct count of nonzero adjacent pairs.

use pairmds::gf::{Elem, Field};
use pairmds::search::{cyclic_runs, hamming_weight, pair_weight, pair_weight_of_support};
use pairmds::sympair::{pair_distance, pair_read};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 13];

fn direct_pair_weight(u: &[Elem]) -> usize {
    pair_read(u).unwrap().iter().filter(|&&p| p != (0, 0)).count()
}

fn support(u: &[Elem]) -> Vec<usize> {
    (0..u.len()).filter(|&i| u[i] != 0).collect()
}

fn word() -> impl Strategy<Value = (u32, Vec<Elem>)> {
    (prop::sample::select(ORDERS.to_vec()), 2usize..30)
        .prop_flat_map(|(q, n)| (Just(q), prop::collection::vec(0..q as Elem, n)))
}

proptest! {
    #[test]
    fn pair_weight_bounds((_q, u) in word()) {
        let n = u.len();
        let (w, sp) = (hamming_weight(&u), pair_weight(&u));
        prop_assert_eq!(sp, direct_pair_weight(&u));
        prop_assert_eq!(sp, pair_weight_of_support(&support(&u), n));
        prop_assert_eq!(sp, if w == n { n } else { w + cyclic_runs(&support(&u), n) });
        if 0 < w && w < n {
            prop_assert!(w < sp && sp <= (2 * w).min(n));
        }
        if w == 0 {
            prop_assert_eq!(sp, 0);
        }
    }

    #[test]
    fn pair_distance_is_weight_of_difference((q, u) in word(), seed in any::<u64>()) {
        let f = Field::with_order(q).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let v: Vec<Elem> = (0..u.len()).map(|_| rng.gen_range(0..q) as Elem).collect();
        let diff: Vec<Elem> = u.iter().zip(&v).map(|(&a, &b)| f.sub(a, b)).collect();
        prop_assert_eq!(pair_distance(&u, &v).unwrap(), pair_weight(&diff));
    }
}

/// Scalar multiples and cyclic shifts keep the pair weight, on 10^3 random
/// vectors per field.
#[test]
fn scalar_and_shift_invariance() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for q in ORDERS {
        let f = Field::with_order(q).unwrap();
        for _ in 0..1000 {
            let n = rng.gen_range(2..40);
            let density = rng.gen_range(0.0..1.0);
            let u: Vec<Elem> = (0..n)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(1..q) as Elem } else { 0 })
                .collect();
            let w = pair_weight(&u);
            let c = rng.gen_range(1..q) as Elem;
            let scaled: Vec<Elem> = u.iter().map(|&x| f.mul(c, x)).collect();
            assert_eq!(pair_weight(&scaled), w);
            let mut shifted = u.clone();
            shifted.rotate_left(rng.gen_range(0..n));
            assert_eq!(pair_weight(&shifted), w);
        }
    }
}
