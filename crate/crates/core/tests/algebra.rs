//! Field and linear-algebra oracles and properties.

use pairmds::gf::{prime_power, Elem, Field};
use pairmds::linalg::FMatrix;
use pairmds::perm::Permutation;
use proptest::prelude::*;

const ORDERS: [u32; 12] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 125];

/// Schoolbook polynomial product reduced by the field's monic modulus.
fn poly_mul(f: &Field, a: Elem, b: Elem) -> Vec<u32> {
    let (p, m) = (f.p(), f.m() as usize);
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0u32; 2 * m - 1];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
    }
    let modulus = f.modulus();
    for top in (m..prod.len()).rev() {
        let c = prod[top];
        if c != 0 {
            for (t, &mc) in modulus.iter().enumerate() {
                let idx = top - m + t;
                prod[idx] = (prod[idx] + p * p - c * mc % p) % p;
            }
        }
    }
    prod.truncate(m);
    prod
}

#[test]
fn multiplication_matches_polynomial_oracle() {
    for q in ORDERS {
        let f = Field::with_order(q).unwrap();
        for a in 0..q {
            for b in 0..q {
                let (a, b) = (a as Elem, b as Elem);
                assert_eq!(f.coeffs(f.mul(a, b)), poly_mul(&f, a, b), "GF({q}) {a}*{b}");
                let sum: Vec<u32> = f.coeffs(a).iter().zip(f.coeffs(b)).map(|(x, y)| (x + y) % f.p()).collect();
                assert_eq!(f.coeffs(f.add(a, b)), sum);
            }
        }
    }
}

#[test]
fn inverses_by_exhaustion() {
    for q in ORDERS {
        let f = Field::with_order(q).unwrap();
        assert_eq!(f.inv(0), None);
        for a in 1..q {
            let a = a as Elem;
            let brute = (1..q).map(|b| b as Elem).find(|&b| f.mul(a, b) == 1).unwrap();
            assert_eq!(f.inv(a), Some(brute));
        }
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for q in ORDERS {
        let f = Field::with_order(q).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.order(g), Some(q - 1));
        for r in [3, 4] {
            if (q - 1) % r == 0 {
                let w = f.root_of_unity(r).unwrap();
                assert_eq!(f.order(w), Some(r), "GF({q}) r={r}");
            } else {
                assert!(f.root_of_unity(r).is_err());
            }
        }
    }
}

#[test]
fn prime_power_detection() {
    let by_hand: Vec<u64> = (2..=128u64)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .collect();
    let detected: Vec<u64> = (2..=128u64).filter(|&q| prime_power(q).is_some()).collect();
    assert_eq!(detected, by_hand);
    assert!(Field::with_order(6).is_err());
    assert!(Field::with_order(256).is_err());
}

fn field_and_elems(count: usize) -> impl Strategy<Value = (Field, Vec<Elem>)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(move |q| {
        (Just(Field::with_order(q).unwrap()), prop::collection::vec(0..q as Elem, count))
    })
}

fn field_and_matrix() -> impl Strategy<Value = (Field, usize, usize, Vec<Elem>)> {
    (prop::sample::select(vec![2u32, 3, 4, 5, 7, 9]), 1usize..6, 1usize..8).prop_flat_map(|(q, r, c)| {
        (Just(Field::with_order(q).unwrap()), Just(r), Just(c), prop::collection::vec(0..q as Elem, r * c))
    })
}

fn to_matrix(f: &Field, r: usize, c: usize, data: &[Elem]) -> FMatrix {
    FMatrix::from_fn(f, r, c, |i, j| data[i * c + j])
}

proptest! {
    #[test]
    fn field_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.mul(a, 1), a);
        if b != 0 {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
        prop_assert_eq!(f.pow(a, f.q() as u64), a);
    }

    #[test]
    fn rref_and_kernel((f, r, c, data) in field_and_matrix()) {
        let m = to_matrix(&f, r, c, &data);
        let (e, pivots) = m.rref();
        prop_assert_eq!(e.rref().0, e.clone());
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel();
        prop_assert_eq!(k.rows() + m.rank(), c);
        prop_assert_eq!(k.rank(), k.rows());
        for row in k.to_rows() {
            prop_assert!(m.apply(&row).unwrap().iter().all(|&s| s == 0));
        }
        let nonzero_rows: Vec<usize> = (0..pivots.len()).collect();
        let all_cols: Vec<usize> = (0..c).collect();
        if m.rank() > 0 {
            prop_assert!(m.same_row_space(&e.submatrix(&nonzero_rows, &all_cols).unwrap()));
        }
    }

    #[test]
    fn inverse_when_square((f, r, _c, data) in field_and_matrix()) {
        let square: Vec<Elem> = data.iter().copied().chain(std::iter::repeat(1)).take(r * r).collect();
        let m = to_matrix(&f, r, r, &square);
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(m.mat_mul(&inv).unwrap(), FMatrix::identity(&f, r)),
            Err(_) => prop_assert!(m.rank() < r),
        }
    }

    #[test]
    fn permutation_round_trips(dest in (1usize..40).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
        let p = Permutation::from_destinations(dest.clone()).unwrap();
        let n = p.len();
        prop_assert_eq!(p.inverse().after(&p).unwrap(), Permutation::identity(n));
        prop_assert_eq!(p.after(&p.inverse()).unwrap(), Permutation::identity(n));
        prop_assert_eq!(Permutation::from_listing(&p.listing()).unwrap(), p.clone());
        let word: Vec<Elem> = (0..n).map(|i| (i % 7) as Elem).collect();
        let moved = p.apply_word(&word).unwrap();
        for (l, &d) in dest.iter().enumerate() {
            prop_assert_eq!(moved[d], word[l]);
        }
        prop_assert_eq!(p.inverse().apply_word(&moved).unwrap(), word);
    }
}
