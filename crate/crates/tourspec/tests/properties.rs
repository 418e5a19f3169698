//! Property tests for the structural and algebraic invariants that must
//! hold for arbitrary tournaments, subsets, and polynomials.

use num_bigint::BigInt;
use proptest::prelude::*;

use tourspec::exact::{char_poly, det_exact, IntMatrix, IntPoly};
use tourspec::skew::skew_matrix;
use tourspec::spectra::{spectral_monomorphy, SpectrumMode};
use tourspec::tournament::{k_subsets, Tournament, VertexSet};

/// A labeled tournament on 1..=8 vertices with random arc orientations.
fn arb_tournament() -> impl Strategy<Value = Tournament> {
    (1usize..=8)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut idx = vec![vec![0usize; n]; n];
            let mut b = 0;
            for j in 0..n {
                for i in 0..j {
                    idx[i][j] = b;
                    b += 1;
                }
            }
            Tournament::from_dominance(n, |i, j| {
                if i < j {
                    bits[idx[i][j]]
                } else {
                    !bits[idx[j][i]]
                }
            })
            .expect("random orientation forms a tournament")
        })
}

fn arb_subset(n: usize) -> impl Strategy<Value = VertexSet> {
    (0u64..(1u64 << n)).prop_map(VertexSet::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructed_tournaments_satisfy_the_pair_invariants(t in arb_tournament()) {
        let n = t.n();
        for i in 0..n {
            prop_assert!(!t.dominates(i, i));
            for j in 0..n {
                if i != j {
                    prop_assert!(t.dominates(i, j) ^ t.dominates(j, i));
                }
            }
        }
    }

    #[test]
    fn text_round_trip_is_identity(t in arb_tournament()) {
        let text = t.to_text();
        let back = Tournament::parse(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn switching_is_an_involution_and_complement_invariant(t in arb_tournament()) {
        let n = t.n();
        proptest::prop_assume!(n >= 2);
        let runner = |x: VertexSet| {
            let once = t.switch(x).unwrap();
            assert_eq!(once.switch(x).unwrap(), t);
            assert_eq!(once, t.switch(x.complement_within(n)).unwrap());
        };
        runner(VertexSet::singleton(0));
        runner(VertexSet::full(n).without(n - 1));
    }

    #[test]
    fn switch_by_random_set_preserves_skew_spectrum(
        t in arb_tournament(),
        bits in any::<u64>(),
    ) {
        let x = VertexSet::from_bits(bits & (VertexSet::full(t.n()).bits()));
        let s = t.switch(x).unwrap();
        prop_assert_eq!(char_poly(&skew_matrix(&t)), char_poly(&skew_matrix(&s)));
    }

    #[test]
    fn pair_profiles_partition_the_other_vertices(t in arb_tournament()) {
        let n = t.n();
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    let p = t.pair_profile(x, y).unwrap();
                    prop_assert_eq!(p.out_out + p.in_in + p.out_in + p.in_out, n - 2);
                }
            }
        }
    }

    #[test]
    fn char_poly_has_zero_trace_terms_and_counts_three_cycles(t in arb_tournament()) {
        let n = t.n();
        proptest::prop_assume!(n >= 3);
        let p = char_poly(&t.adjacency_matrix());
        prop_assert_eq!(p.coeff(n - 1), BigInt::from(0));
        prop_assert_eq!(p.coeff(n - 2), BigInt::from(0));
        prop_assert_eq!(-p.coeff(n - 3), BigInt::from(t.three_cycle_count()));
    }

    #[test]
    fn determinant_agrees_with_char_poly_at_zero(t in arb_tournament()) {
        let a = t.adjacency_matrix();
        let p0 = char_poly(&a).coeff(0);
        let det = det_exact(&a);
        let expected = if t.n() % 2 == 0 { det } else { -det };
        prop_assert_eq!(p0, expected);
    }

    #[test]
    fn coefficient_minor_identity_on_small_integer_matrices(
        n in 1usize..=4,
        entries in proptest::collection::vec(-6i64..=6, 16),
    ) {
        let m = IntMatrix::from_fn(n, |i, j| BigInt::from(entries[i * 4 + j]));
        let p = char_poly(&m);
        for k in 1..=n {
            let mut sum = BigInt::from(0);
            for alpha in k_subsets(n, k) {
                sum += det_exact(&m.principal_submatrix(&alpha.to_indices()));
            }
            if k % 2 == 1 {
                sum = -sum;
            }
            prop_assert_eq!(p.coeff(n - k), sum);
        }
    }

    #[test]
    fn reflect_shift_is_an_involution(coeffs in proptest::collection::vec(-50i64..=50, 0..=8)) {
        let p = IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        prop_assert_eq!(p.reflect_shift().reflect_shift(), p);
    }

    #[test]
    fn polynomial_ring_laws(
        a in proptest::collection::vec(-9i64..=9, 0..=5),
        b in proptest::collection::vec(-9i64..=9, 0..=5),
        c in proptest::collection::vec(-9i64..=9, 0..=5),
    ) {
        let ip = |v: &[i64]| IntPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect());
        let (p, q, r) = (ip(&a), ip(&b), ip(&c));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).mul(&r), p.mul(&r).add(&q.mul(&r)));
        let x = tourspec::RatScalar::new(BigInt::from(3), BigInt::from(7));
        prop_assert_eq!(
            p.mul(&q).eval_rational(&x),
            p.eval_rational(&x) * q.eval_rational(&x)
        );
    }

    #[test]
    fn colex_subsets_are_increasing_and_complete(n in 1usize..=10, k in 0usize..=10) {
        proptest::prop_assume!(k <= n);
        let masks: Vec<u64> = k_subsets(n, k).map(|s| s.bits()).collect();
        prop_assert!(masks.windows(2).all(|w| w[0] < w[1]));
        let binom: u64 = {
            let mut acc = 1u64;
            for i in 0..k {
                acc = acc * (n as u64 - i as u64) / (i as u64 + 1);
            }
            acc
        };
        prop_assert_eq!(masks.len() as u64, binom);
        prop_assert!(masks.iter().all(|m| m.count_ones() as usize == k));
    }

    #[test]
    fn monomorphy_witnesses_reverify(t in arb_tournament()) {
        let n = t.n();
        proptest::prop_assume!(n >= 4);
        let verdict = spectral_monomorphy(&t, n - 1, SpectrumMode::Adjacency).unwrap();
        if let Some(w) = verdict.witness() {
            let a = t.adjacency_matrix();
            let p1 = char_poly(&a.principal_submatrix(&w.first.to_indices()));
            let p2 = char_poly(&a.principal_submatrix(&w.second.to_indices()));
            prop_assert_eq!(&p1, &w.first_poly);
            prop_assert_eq!(&p2, &w.second_poly);
            prop_assert_ne!(p1, p2);
        }
    }

    #[test]
    fn subset_parse_display_round_trip(bits in 0u64..(1 << 12)) {
        let s = VertexSet::from_bits(bits);
        prop_assert_eq!(VertexSet::parse(&s.to_string()).unwrap(), s);
    }
}

#[test]
fn regular_pair_profile_is_balanced_on_residue_tournaments() {
    // Doubly regular instances: profile (t,t,t,t+1) on every arc.
    for (p, t) in [(3u64, 0usize), (7, 1), (11, 2), (19, 4)] {
        let tour = Tournament::paley(p).unwrap();
        assert_eq!(tour.structure_report().t, Some(t));
        for x in 0..tour.n() {
            for y in 0..tour.n() {
                if x != y && tour.dominates(x, y) {
                    let profile = tour.pair_profile(x, y).unwrap();
                    assert_eq!(profile.as_tuple(), (t, t, t, t + 1));
                }
            }
        }
    }
}

#[test]
fn regular_tournaments_have_balanced_degrees() {
    for n in [3usize, 5, 7, 9, 11] {
        let mut symbols = VertexSet::empty();
        for s in 1..=n / 2 {
            symbols = symbols.with(s);
        }
        let t = Tournament::circulant(n, symbols).unwrap();
        assert!(t.is_regular());
        for v in 0..n {
            assert_eq!(t.out_degree(v), (n - 1) / 2);
            assert_eq!(t.in_degree(v), (n - 1) / 2);
        }
    }
}
