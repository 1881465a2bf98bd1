use redrep::uea::{straighten, LieElement};
use redrep::{baby_verma, parabolic_verma, AlgebraElement, Error, Limits, PChar, Root, RootDatum, Weight};

#[test]
fn non_simple_root_vectors_are_commutators() {
    let d = RootDatum::sl(3, 3).unwrap();
    let z = baby_verma(&d, &PChar::regular(3, 3).unwrap(), &Weight::cartan(&[0, 0], 3)).unwrap();
    let e31 = z.root_vector_action(Root::new(2, 0));
    assert_eq!(e31, &z.f(2).commutator(z.f(1)));
    assert_eq!(z.root_vector_action(Root::simple(1)), z.e(1));
    assert_eq!(z.root_vector_action(Root::new(0, 2)), &z.e(1).commutator(z.e(2)));
}

#[test]
fn highest_negative_root_in_the_next_rank() {
    // X_{-θ_1} = E_{n+1,1} with θ_1 = α_1 + … + α_n.
    let n = 3;
    let d = RootDatum::sl(n + 1, 3).unwrap();
    let chi = PChar::regular(3, 3).unwrap().extend(n + 1).unwrap();
    let z = baby_verma(&d, &chi, &Weight::cartan(&[1, 0, 2], 3)).unwrap();
    let mut nested = z.f(1).clone();
    for k in 2..=n {
        nested = z.f(k).commutator(&nested);
    }
    assert_eq!(z.root_vector_action(Root::new(n, 0)), &nested);
    let via_lie = z.lie_action(&LieElement::basis((n, 0))).unwrap();
    assert_eq!(&via_lie, &nested);
}

#[test]
fn straightened_words_act_like_the_words() {
    let d = RootDatum::gl(3, 3).unwrap();
    let chi = PChar::subregular(3, 3).unwrap();
    let z = baby_verma(&d, &chi, &Weight::eps(&[2, 0, 1], 3)).unwrap();
    let ef = AlgebraElement::word(vec![(0, 1), (1, 0)]);
    let normal = straighten(&ef, &chi);
    let want = AlgebraElement::word(vec![(1, 0), (0, 1)]);
    let mut want = want;
    want.add_term(vec![(0, 0)], 1, 3);
    want.add_term(vec![(1, 1)], 2, 3);
    assert_eq!(normal, want);
    assert_eq!(z.element_action(&ef).unwrap(), z.element_action(&normal).unwrap());

    let f_cubed = AlgebraElement::word(vec![(1, 0); 3]);
    assert_eq!(straighten(&f_cubed, &chi), AlgebraElement::scalar(1, 3));
    let theta_cubed = AlgebraElement::word(vec![(2, 0); 3]);
    assert!(straighten(&theta_cubed, &chi).is_zero());
}

#[test]
fn every_construction_passes_all_relations() {
    let g = RootDatum::gl(4, 3).unwrap();
    let sub = PChar::subregular(4, 3).unwrap();
    let z = parabolic_verma(&g, &sub, &Weight::eps(&[0, 0, 0, 0], 3), 3).unwrap();
    assert_eq!(z.dim(), 243);
    assert!(z.check_structure().all_pass());

    let d = RootDatum::sl(3, 5).unwrap();
    let z = baby_verma(&d, &PChar::regular(3, 5).unwrap(), &Weight::cartan(&[3, 1], 5)).unwrap();
    let rep = z.check_all_relations();
    assert!(rep.all_pass(), "{:?}", rep.failures);
    assert_eq!(rep.regular_divisibility, Some(true));
}

#[test]
fn guards_and_input_errors() {
    let d = RootDatum::sl(3, 3).unwrap();
    let wrong = PChar::regular(2, 3).unwrap();
    assert!(matches!(baby_verma(&d, &wrong, &Weight::cartan(&[0, 0], 3)), Err(Error::InvalidInput(_))));
    let limits = Limits { max_dim: 26, ..Limits::default() };
    let chi = PChar::regular(3, 3).unwrap();
    assert_eq!(
        redrep::uea::baby_verma_limited(&d, &chi, &Weight::cartan(&[0, 0], 3), &limits).unwrap_err(),
        Error::DimensionGuard { dim: 27, cap: 26 }
    );
    assert!(RootDatum::sl(3, 4).is_err());
}
