use chromhilb::analysis::{octahedron_boundary, uniform_matroid_complex};
use chromhilb::auxiliary::{
    check_property_i, check_target_invariant, hilbert_polynomial_window, lift_with_apex,
    search_alpha, search_window_instance, verify_main_theorem, AlphaAssignment, AlphaPair,
    PropertyIMode,
};
use chromhilb::chromatic::chromatic_polynomial;
use chromhilb::complex::{bits, card};
use chromhilb::cyclotomic::{check_cyclcheck, CyclotomicSpec, Labeling};
use chromhilb::hilbert::top_h_identity;
use chromhilb::random::{pairwise_intersecting_complex, random_complex};
use chromhilb::{IntPolynomial, SimplicialComplex};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn nf(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
    let g: Vec<Vec<&str>> = gens.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_minimal_nonfaces(labels, &g).unwrap()
}

fn k1_in_k23() -> (SimplicialComplex, AlphaAssignment) {
    let s = nf(
        &["a", "b", "c", "d", "e"],
        &[
            &["a", "b"],
            &["c", "d"],
            &["c", "e"],
            &["d", "e"],
            &["a", "e"],
        ],
    );
    let pairs = [
        ("ab", "b"),
        ("cd", "c"),
        ("ce", "d"),
        ("de", "e"),
        ("ae", "a"),
    ]
    .iter()
    .map(|(s, a)| AlphaPair {
        sigma: s.chars().map(String::from).collect(),
        alpha: a.chars().map(String::from).collect(),
    })
    .collect();
    (s, AlphaAssignment::new(pairs).unwrap())
}

#[test]
fn published_assignment_on_k1_fails_the_invariant() {
    let (s, a) = k1_in_k23();
    let r = check_target_invariant(&a).unwrap();
    assert!(!r.passed());
    assert_eq!(r.details["witness_i"], serde_json::json!([2, 3, 4]));
    let strict = check_property_i(&a, PropertyIMode::Strict).unwrap();
    assert!(!strict.passed());
    assert_eq!(strict.details["witness_i"], serde_json::json!([2, 3]));
    assert_eq!(strict.details["witness_p"], 4);
    assert!(!check_property_i(&a, PropertyIMode::Literal)
        .unwrap()
        .passed());
    assert!(!verify_main_theorem(&s, &a).unwrap().passed());
    assert_eq!(search_alpha(&s).unwrap(), None);
}

#[test]
fn uniform_matroid_lift_satisfies_the_identity() {
    let (s, a) = lift_with_apex(&uniform_matroid_complex(6, 3).unwrap()).unwrap();
    assert_eq!(s.minimal_nonfaces().len(), 15);
    assert!(verify_main_theorem(&s, &a).unwrap().passed());
}

#[test]
fn translate_matches_direct_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let t = random_complex(&mut rng, 5, 3);
        let (s, _) = lift_with_apex(&t).unwrap();
        let n = s.vertex_count();
        let alphas = t.minimal_nonfaces().generators();
        let shift = IntPolynomial::from_i64s(&[-1, 1]);
        let mut direct = IntPolynomial::zero();
        for members in 0u64..1 << alphas.len() {
            let union = bits(members).fold(0, |acc, i| acc | alphas[i]);
            let sign = if card(members).is_multiple_of(2) {
                1
            } else {
                -1
            };
            direct = &direct
                + &shift
                    .pow((n - card(union)) as u32)
                    .scale(&BigInt::from(sign));
        }
        assert_eq!(chromatic_polynomial(&s).unwrap().translate(-1), direct);
    }
}

#[test]
fn window_search_finds_nothing_because_the_window_sums_to_minus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = 3 + (rand::Rng::gen_range(&mut rng, 0..4));
        let s = pairwise_intersecting_complex(&mut rng, n, 4);
        let (w, _) = hilbert_polynomial_window(&s, 1).unwrap();
        assert_eq!(w.evaluate_i64(1), BigInt::from(-1));
    }
    let found = search_window_instance(&mut ChaCha8Rng::seed_from_u64(6), 300, 7);
    if let Some(s) = &found {
        let path = std::env::temp_dir().join("chromhilb-window-instance.json");
        std::fs::write(&path, chromhilb::io::complex_to_json(s, None).to_string()).unwrap();
    }
    assert!(found.is_none());
}

#[test]
fn cyclcheck_identity_and_direct_route_on_two_three() {
    let spec = CyclotomicSpec::new(vec![2, 3]).unwrap();
    for j in 0..=spec.phi() {
        let r = check_cyclcheck(&spec, j, &Labeling::ALL).unwrap();
        for sub in &r.sub_reports {
            assert_eq!(sub.details["direct_enumeration_agrees"], true);
            assert!(sub.sub_reports[0].passed());
        }
    }
}

#[test]
fn built_k_a_satisfy_the_top_h_identity() {
    for primes in [vec![2, 3], vec![2, 5], vec![3, 5], vec![2, 3, 5]] {
        let spec = CyclotomicSpec::new(primes).unwrap();
        for lab in Labeling::ALL {
            for j in 0..=spec.phi() {
                let k = spec.build_k_a(&BTreeSet::from([j]), lab).unwrap();
                assert!(top_h_identity(&k).passed());
                assert_eq!(k.dimension() as usize, spec.d() - 1);
            }
        }
    }
}

#[test]
fn octahedron_apex_lift_identity() {
    let (s, a) = lift_with_apex(&octahedron_boundary()).unwrap();
    let r = verify_main_theorem(&s, &a).unwrap();
    assert!(r.passed());
    assert_eq!(r.details["chi_c"], "t^7 - 3*t^5 + 3*t^3 - t");
}
