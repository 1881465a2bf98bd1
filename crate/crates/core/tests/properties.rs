mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use redrep::linalg::{enumerate_lines, line_count};
use redrep::uea::{straighten, straighten_with};
use redrep::{
    baby_verma, composition_series, AlgebraElement, Matrix, PChar, Permutation, RootDatum, Weight,
};

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (Vec<Vec<u32>>, u32)> {
    (1..=max_rows, 1..=max_cols, prop::sample::select(vec![2u32, 3, 5, 7])).prop_flat_map(|(r, c, p)| {
        (prop::collection::vec(prop::collection::vec(0..p, c), r), Just(p))
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(Permutation::from_images)
}

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..n, 0..n), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rref_is_idempotent((rows, p) in matrix_strategy(6, 7)) {
        let a = Matrix::from_rows(&rows, p);
        let r = a.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
    }

    #[test]
    fn rank_plus_nullity((rows, p) in matrix_strategy(6, 7)) {
        let a = Matrix::from_rows(&rows, p);
        let null = a.nullspace();
        prop_assert_eq!(a.rank() + null.len(), a.cols());
        for v in &null {
            prop_assert!(a.mul_vec(v).iter().all(|&x| x == 0));
        }
        let span = Matrix::from_vectors(&null, a.cols(), p);
        prop_assert_eq!(if null.is_empty() { 0 } else { span.rank() }, null.len());
    }

    #[test]
    fn lines_are_normalized_and_counted(dim in 1usize..5, p in prop::sample::select(vec![2u32, 3, 5])) {
        let lines: Vec<Vec<u8>> = enumerate_lines(dim, p, 1 << 16).unwrap().collect();
        prop_assert_eq!(lines.len() as u128, line_count(dim, p));
        for v in &lines {
            let lead = v.iter().position(|&x| x != 0).unwrap();
            prop_assert_eq!(v[lead], 1);
        }
        let mut sorted = lines.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), lines.len());
    }

    #[test]
    fn dot_action_is_a_group_action(
        (w1, w2) in (perm_strategy(4), perm_strategy(4)),
        coords in prop::collection::vec(0i64..5, 4),
    ) {
        let d = RootDatum::gl(4, 5).unwrap();
        let lambda = Weight::eps(&coords, 5);
        let lhs = d.dot(&w1, &d.dot(&w2, &lambda));
        prop_assert_eq!(lhs, d.dot(&w1.compose(&w2), &lambda));
        prop_assert_eq!(d.dot(&Permutation::identity(4), &lambda), lambda);
    }

    #[test]
    fn w_dot_zero_matches_brute_force_at_larger_rank(
        (n, p) in prop::sample::select(vec![(6usize, 3u32), (6, 2), (4, 2)]),
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for d in [RootDatum::gl(n, p).unwrap(), RootDatum::sl(n, p).unwrap()] {
            let brute = common::brute_w_dot_zero(&d);
            let len = d.all_weights()[0].coords().len();
            for _ in 0..8 {
                let c: Vec<i64> = (0..len).map(|_| rng.gen_range(0..p as i64)).collect();
                let lambda = Weight::new(c.iter().map(|&x| x as u32).collect(), d.coords(), p);
                prop_assert_eq!(d.in_w_dot_zero(&lambda).unwrap(), brute.contains(&lambda));
            }
            for mu in &brute {
                prop_assert!(d.in_w_dot_zero(mu).unwrap());
            }
        }
    }

    #[test]
    fn alcove_representative_invariants(
        (n, p) in prop::sample::select(vec![(3usize, 3u32), (4, 3), (3, 5), (4, 2), (2, 7)]),
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = RootDatum::sl(n, p).unwrap();
        let c: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(0..p as i64)).collect();
        let lambda = Weight::cartan(&c, p);
        let (l0, w) = d.alcove_representative(&lambda).unwrap();
        prop_assert_eq!(d.dot(&w, &l0), lambda.clone());
        let r = d.r_coefficients(&l0).unwrap();
        prop_assert_eq!(r.len(), n);
        prop_assert_eq!(r.iter().sum::<u32>(), p);
        prop_assert_eq!(d.alcove_representative(&l0).unwrap().0, l0);
    }

    #[test]
    fn straightening_is_confluent(word in word_strategy(3, 6), seed in any::<u64>()) {
        use rand::Rng;
        let chi = PChar::subregular(3, 3).unwrap();
        let elem = AlgebraElement::word(word);
        let canonical = straighten(&elem, &chi);
        prop_assert!(redrep::uea::is_normal(&canonical, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let other = straighten_with(&elem, &chi, &mut |k| rng.gen_range(0..k));
        prop_assert_eq!(other, canonical);
    }

    #[test]
    fn engine_respects_straightening(word in word_strategy(3, 5), c in prop::collection::vec(0i64..3, 3)) {
        let d = RootDatum::gl(3, 3).unwrap();
        let chi = PChar::subregular(3, 3).unwrap();
        let z = baby_verma(&d, &chi, &Weight::eps(&c, 3)).unwrap();
        let elem = AlgebraElement::word(word);
        let direct = z.element_action(&elem).unwrap();
        let normal = z.element_action(&straighten(&elem, &chi)).unwrap();
        prop_assert_eq!(direct, normal);
    }

    #[test]
    fn rank_one_baby_verma_matches_closed_form(
        p in prop::sample::select(vec![2u32, 3, 5, 7]),
        lam in 0u32..7,
        chi_f in 0u32..7,
    ) {
        let lam = lam % p;
        let chi_f = chi_f % p;
        let d = RootDatum::sl(2, p).unwrap();
        let chi = PChar::from_simple_values(2, p, &[chi_f]).unwrap();
        let z = baby_verma(&d, &chi, &Weight::cartan(&[lam as i64], p)).unwrap();
        let pu = p as usize;
        let chi_p = redrep::linalg::pow_mod(chi_f, p as u64, p);
        // f (f^j ⊗ 1) = f^{j+1} ⊗ 1 and e (f^j ⊗ 1) = j (λ − j + 1) f^{j−1} ⊗ 1.
        let f = Matrix::from_fn(pu, pu, p, |r, c| {
            if r == c + 1 { 1 } else if c == pu - 1 && r == 0 { chi_p } else { 0 }
        });
        let e = Matrix::from_fn(pu, pu, p, |r, c| {
            if c >= 1 && r == c - 1 {
                let j = c as i64;
                redrep::linalg::reduce_i64(j * (lam as i64 - j + 1), p)
            } else {
                0
            }
        });
        prop_assert_eq!(z.f(1), &f);
        prop_assert_eq!(z.e(1), &e);
        let h: Vec<u32> = (0..pu).map(|j| redrep::linalg::reduce_i64(lam as i64 - 2 * j as i64, p)).collect();
        prop_assert_eq!(&z.cartan()[0], &Matrix::diagonal_matrix(&h, p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn composition_multiset_is_basis_independent(
        case in 0usize..4,
        lam in prop::collection::vec(0i64..3, 3),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = match case {
            0 => baby_verma(&RootDatum::sl(2, 3).unwrap(), &PChar::regular(2, 3).unwrap(), &Weight::cartan(&lam[..1], 3)),
            1 => baby_verma(&RootDatum::sl(2, 3).unwrap(), &PChar::zero(2, 3).unwrap(), &Weight::cartan(&lam[..1], 3)),
            2 => baby_verma(&RootDatum::gl(2, 3).unwrap(), &PChar::zero(2, 3).unwrap(), &Weight::eps(&lam[..2], 3)),
            _ => baby_verma(
                &RootDatum::sl(3, 2).unwrap(),
                &PChar::zero(3, 2).unwrap(),
                &Weight::cartan(&lam[..2].iter().map(|x| x % 2).collect::<Vec<_>>(), 2),
            ),
        }
        .unwrap();
        let q = common::random_invertible(z.dim(), z.p(), &mut rng);
        let moved = z.conjugated(&q).unwrap();
        prop_assert!(moved.check_structure().all_pass());
        prop_assert_eq!(moved.character(), z.character());
        let a = composition_series(&z).unwrap();
        let b = composition_series(&moved).unwrap();
        prop_assert_eq!(a.multiset(), b.multiset());
        let mut da = a.dims();
        let mut db = b.dims();
        da.sort_unstable();
        db.sort_unstable();
        prop_assert_eq!(da, db);
    }

    #[test]
    fn series_matches_lattice_oracle(
        case in 0usize..3,
        lam in prop::collection::vec(0i64..3, 2),
    ) {
        let z = match case {
            0 => baby_verma(&RootDatum::sl(2, 3).unwrap(), &PChar::zero(2, 3).unwrap(), &Weight::cartan(&lam[..1], 3)),
            1 => baby_verma(&RootDatum::sl(2, 3).unwrap(), &PChar::regular(2, 3).unwrap(), &Weight::cartan(&lam[..1], 3)),
            _ => baby_verma(
                &RootDatum::gl(2, 2).unwrap(),
                &PChar::zero(2, 2).unwrap(),
                &Weight::eps(&lam.iter().map(|x| x % 2).collect::<Vec<_>>(), 2),
            ),
        }
        .unwrap();
        let mut measured: Vec<_> = composition_series(&z).unwrap().factors.iter().map(|f| f.module.character()).collect();
        measured.sort();
        prop_assert_eq!(measured, common::lattice_factor_characters(&z, 1 << 12));
    }
}
