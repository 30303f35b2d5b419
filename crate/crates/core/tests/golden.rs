//! Golden vectors transcribed from the worked examples: permutation
//! listings and parity-check / generator matrices.

use pairmds::construct::{self, fourier_matrix, Family};
use pairmds::examples::INSTANCES;
use pairmds::gf::{Elem, Field};
use pairmds::linalg::FMatrix;
use pairmds::mp::{mp_generator, mp_parity, MpSpec};
use pairmds::perm::{four_block_shifted, interleave, three_block_shifted, Permutation};
use pairmds::LinearCode;

fn matrix(field: &Field, rows: &[&[Elem]]) -> FMatrix {
    let rows: Vec<Vec<Elem>> = rows.iter().map(|r| r.to_vec()).collect();
    FMatrix::from_rows(field, &rows, rows[0].len()).unwrap()
}

/// Reorders the columns of `m` so that position t holds source column listing[t] - 1.
fn permute_listing(m: &FMatrix, listing: &[usize]) -> FMatrix {
    let cols: Vec<usize> = listing.iter().map(|&s| s - 1).collect();
    m.select_columns(&cols).unwrap()
}

#[test]
fn block_interleaver_listings() {
    assert_eq!(interleave(3, 4).listing(), vec![1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8, 12]);
    assert_eq!(
        interleave(4, 5).listing(),
        vec![1, 6, 11, 16, 2, 7, 12, 17, 3, 8, 13, 18, 4, 9, 14, 19, 5, 10, 15, 20]
    );
    assert_eq!(
        interleave(4, 6).listing(),
        vec![1, 7, 13, 19, 2, 8, 14, 20, 3, 9, 15, 21, 4, 10, 16, 22, 5, 11, 17, 23, 6, 12, 18, 24]
    );
}

#[test]
fn composed_listings() {
    assert_eq!(three_block_shifted(4).listing(), vec![1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12]);
    assert_eq!(
        four_block_shifted(5).listing(),
        vec![3, 6, 12, 16, 4, 7, 13, 17, 5, 8, 14, 18, 1, 9, 15, 19, 2, 10, 11, 20]
    );
    for inst in &INSTANCES {
        assert_eq!(inst.family.permutation(inst.n).listing(), inst.listing.to_vec(), "instance {}", inst.id);
    }
}

#[test]
fn listing_matches_reordered_parity_columns() {
    for inst in &INSTANCES {
        let c = construct::construct(inst.family, inst.q, inst.n, inst.modulus).unwrap();
        let by_listing = permute_listing(&c.mp_code.parity(), inst.listing);
        assert!(by_listing.same_row_space(&c.code.parity()), "instance {}", inst.id);
    }
}

/// GF(4) with x^2+x+1: index 2 is the primitive element ξ, index 3 is ξ^2.
#[test]
fn gf4_example_matrices() {
    let f = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
    let (o, e, x, x2) = (0, 1, 2, 3);
    assert_eq!(f.mul(x, x), x2);
    assert_eq!(f.mul(x, x2), e);

    // The example evaluates at (0, ξ, ξ^2, 1).
    let points = [o, x, x2, e];
    let constituents: Vec<LinearCode> = (1..=3).map(|i| LinearCode::grs(&f, &points, i).unwrap()).collect();
    let spec = MpSpec::new(constituents, fourier_matrix(&f, x, 3)).unwrap();
    let h = matrix(
        &f,
        &[
            &[e, e, e, e, e, e, e, e, e, e, e, e],
            &[e, e, e, e, x2, x2, x2, x2, x, x, x, x],
            &[o, x, x2, e, o, e, x, x2, o, x2, e, x],
            &[e, e, e, e, x, x, x, x, x2, x2, x2, x2],
            &[o, x, x2, e, o, x2, e, x, o, e, x, x2],
            &[o, x2, x, e, o, e, x2, x, o, x, e, x2],
        ],
    );
    assert_eq!(mp_parity(&spec).unwrap(), h);

    let listing = [1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12];
    let permuted_h = matrix(
        &f,
        &[
            &[e, e, e, e, e, e, e, e, e, e, e, e],
            &[e, x2, x, e, x2, x, e, x2, x, e, x2, x],
            &[o, e, o, x, x, x2, x2, x2, e, e, o, x],
            &[e, x, x2, e, x, x2, e, x, x2, e, x, x2],
            &[o, x2, o, x, e, e, x2, x, x, e, o, x2],
            &[o, e, o, x2, x2, x, x, x, e, e, o, x2],
        ],
    );
    assert_eq!(permute_listing(&h, &listing), permuted_h);

    let mp_code = mp_generator(&spec).unwrap();
    let code = Permutation::from_listing(&listing).unwrap().apply(&mp_code).unwrap();
    let g = matrix(
        &f,
        &[
            &[e, o, o, o, o, o, e, x2, x, o, x2, x],
            &[o, e, o, o, o, o, e, o, e, e, e, e],
            &[o, o, e, o, o, o, e, x, x, e, x, x2],
            &[o, o, o, e, o, o, o, x2, x, e, x2, x],
            &[o, o, o, o, e, o, e, e, e, e, o, e],
            &[o, o, o, o, o, e, e, x, x2, e, x, x],
        ],
    );
    assert_eq!(code.generator().rref().0, g);
    assert!(code.parity().same_row_space(&permuted_h));
}

#[test]
fn gf7_example_matrices() {
    let c = construct::construct(Family::R113, 7, 4, None).unwrap();
    let f = &c.field;
    // Displayed with a common factor 1/3, which the stored matrix drops.
    let h = matrix(
        f,
        &[
            &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 4, 4, 4, 4, 2, 2, 2, 2],
            &[1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4],
            &[0, 1, 2, 3, 0, 2, 4, 6, 0, 4, 1, 5],
            &[0, 1, 4, 2, 0, 2, 1, 4, 0, 4, 2, 1],
        ],
    );
    assert_eq!(mp_parity(&c.spec).unwrap(), h);

    let permuted_h = matrix(
        f,
        &[
            &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[1, 4, 2, 1, 4, 2, 1, 4, 2, 1, 4, 2],
            &[1, 2, 4, 1, 2, 4, 1, 2, 4, 1, 2, 4],
            &[0, 2, 0, 1, 4, 4, 2, 6, 1, 3, 0, 5],
            &[0, 2, 0, 1, 1, 4, 4, 4, 2, 2, 0, 1],
        ],
    );
    assert_eq!(permute_listing(&h, &c.permutation.listing()), permuted_h);
    assert!(c.code.parity().same_row_space(&permuted_h));

    let g = matrix(
        f,
        &[
            &[1, 0, 0, 0, 0, 0, 0, 4, 0, 6, 3, 0],
            &[0, 1, 0, 0, 0, 0, 0, 4, 3, 0, 2, 4],
            &[0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 5, 6],
            &[0, 0, 0, 1, 0, 0, 0, 6, 5, 6, 1, 2],
            &[0, 0, 0, 0, 1, 0, 0, 6, 3, 0, 0, 4],
            &[0, 0, 0, 0, 0, 1, 0, 3, 6, 0, 4, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0, 5, 6, 0, 2],
        ],
    );
    assert!(c.code.generator().same_row_space(&g));
}

#[test]
fn gf5_example_matrices() {
    let c = construct::construct(Family::R0013, 5, 5, None).unwrap();
    let f = &c.field;
    // Displayed with a common scalar prefactor; compared up to row scaling.
    let h = matrix(
        f,
        &[
            &[1, 1, 1, 1, 1, 4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 4, 4, 4, 4, 4],
            &[1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3],
            &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 4, 3, 2, 1, 0, 3, 1, 4, 2],
            &[0, 1, 4, 4, 1, 0, 2, 3, 3, 2, 0, 4, 1, 1, 4, 0, 3, 2, 2, 3],
        ],
    );
    assert!(mp_parity(&c.spec).unwrap().same_row_space(&h));

    let permuted_h = matrix(
        f,
        &[
            &[1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4],
            &[1, 2, 4, 3, 1, 2, 4, 3, 1, 2, 4, 3, 1, 2, 4, 3, 1, 2, 4, 3],
            &[2, 0, 4, 0, 3, 2, 3, 3, 4, 4, 2, 1, 0, 1, 1, 4, 1, 3, 0, 2],
            &[4, 0, 4, 0, 4, 2, 1, 3, 1, 3, 1, 2, 0, 3, 4, 2, 1, 2, 0, 3],
        ],
    );
    assert_eq!(permute_listing(&h, &c.permutation.listing()), permuted_h);
    assert!(c.code.parity().same_row_space(&permuted_h));
}
