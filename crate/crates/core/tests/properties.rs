//! Property tests for the algebraic, automaton and cycle-structure invariants.

use num_bigint::BigUint;
use oca_core::algebra::{
    checked_field_size, is_irreducible, is_primitive, poly_factor, poly_gcd, poly_order, Field, Poly,
};
use oca_core::ca::{are_orthogonal, latin_square, pairwise_balanced, Anf, LinearRule, LocalRule};
use oca_core::dynamics::{OcaSystem, SystemState};
use oca_core::linalg::{
    char_poly_hessenberg, gl_order, mat_order, min_char_poly, min_poly_krylov, rcf, sylvester_matrix, Matrix,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field(q: u32) -> Field {
    Field::new(q).unwrap()
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop_oneof![Just(2u32), Just(3u32)]
        .prop_flat_map(move |q| prop::collection::vec(0..q, 1..=max_deg + 1).prop_map(move |c| Poly::new(field(q), c)))
}

fn pair_strategy(max_deg: usize) -> impl Strategy<Value = (Poly, Poly)> {
    prop_oneof![Just(2u32), Just(3u32)].prop_flat_map(move |q| {
        let v = prop::collection::vec(0..q, 1..=max_deg + 1);
        (v.clone(), v).prop_map(move |(a, b)| (Poly::new(field(q), a), Poly::new(field(q), b)))
    })
}

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (prop_oneof![Just(2u32), Just(3u32)], 1..=max_dim).prop_flat_map(|(q, n)| {
        prop::collection::vec(0..q, n * n).prop_map(move |data| Matrix::new(field(q), n, n, data).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_is_monic_common_divisor((a, b) in pair_strategy(12)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
    }

    #[test]
    fn factorization_roundtrip(p in poly_strategy(20)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let fac = poly_factor(&p).unwrap();
        prop_assert_eq!(fac.expand(p.field()).monic(), p.monic());
        for (f, m) in &fac.factors {
            prop_assert!(*m >= 1);
            prop_assert!(f.is_monic());
            prop_assert!(is_irreducible(f));
        }
    }

    #[test]
    fn irreducible_order_divides_field_unit_group(p in poly_strategy(10)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1 && p.constant_term() != 0 && is_irreducible(&p));
        let e = p.degree().unwrap();
        let units = checked_field_size(p.q(), e).unwrap() - 1;
        prop_assert_eq!(units % poly_order(&p.monic()).unwrap(), 0);
    }

    #[test]
    fn primitive_implies_irreducible(p in poly_strategy(12)) {
        if is_primitive(&p) {
            prop_assert!(is_irreducible(&p));
        }
    }

    #[test]
    fn normal_form_chain(a in matrix_strategy(12)) {
        let r = min_char_poly(&a).unwrap();
        let product = r.invariant_factors.iter().fold(Poly::one(a.field()), |acc, p| &acc * p);
        prop_assert_eq!(&product, &r.char_poly);
        prop_assert!(r.min_poly.divides(&r.char_poly));
        for w in r.invariant_factors.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        let elementary = r.elementary_divisor_polys().iter().fold(Poly::one(a.field()), |acc, p| &acc * p);
        prop_assert_eq!(&elementary, &r.char_poly);
        prop_assert_eq!(r.char_poly.degree(), Some(a.rows()));
    }

    #[test]
    fn independent_char_and_min_poly_routes(a in matrix_strategy(10)) {
        let r = min_char_poly(&a).unwrap();
        prop_assert_eq!(char_poly_hessenberg(&a).unwrap(), r.char_poly);
        prop_assert_eq!(min_poly_krylov(&a).unwrap(), r.min_poly);
    }

    #[test]
    fn rcf_preserves_char_and_min(a in matrix_strategy(8)) {
        let r = min_char_poly(&a).unwrap();
        let c = min_char_poly(&rcf(&a).unwrap()).unwrap();
        prop_assert_eq!(c.char_poly, r.char_poly);
        prop_assert_eq!(c.min_poly, r.min_poly);
    }

    #[test]
    fn matrix_order_divides_group_order(a in matrix_strategy(6)) {
        prop_assume!(a.is_invertible());
        let order = mat_order(&a).unwrap() as u128;
        prop_assert_eq!(gl_order(a.rows(), a.field().q()).unwrap() % order, 0);
        prop_assert!(a.pow(order as u64).unwrap().is_identity());
    }

    #[test]
    fn linear_rule_poly_roundtrip(q in prop_oneof![Just(2u32), Just(3u32)], d in 2usize..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let mut coeffs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..q)).collect();
        coeffs[0] = rng.gen_range(1..q);
        coeffs[d - 1] = rng.gen_range(1..q);
        let lin = LinearRule::new(field(q), coeffs).unwrap();
        prop_assert_eq!(LinearRule::from_poly(&lin.to_poly()).unwrap(), lin.clone());
        let table = lin.to_local_rule().unwrap();
        prop_assert!(table.is_bipermutive());
        prop_assert_eq!(LinearRule::from_local_rule(&table), Some(lin));
    }

    #[test]
    fn random_bipermutive_rules_give_latin_squares(q in prop_oneof![Just(2u32), Just(3u32)], d in 2usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rule = LocalRule::random_bipermutive(field(q), d, &mut rng).unwrap();
        prop_assert!(rule.is_bipermutive());
        prop_assert!(latin_square(&rule).unwrap().is_latin());
    }
}

#[test]
fn sylvester_resultant_detects_common_factors() {
    let f2 = Field::binary();
    for n in 1..=5usize {
        let polys: Vec<Poly> = (0..1u32 << n)
            .map(|low| Poly::new(f2, (0..=n).map(|i| if i == n { 1 } else { (low >> i) & 1 })))
            .filter(|p| p.constant_term() != 0)
            .collect();
        for a in &polys {
            for b in &polys {
                let det = sylvester_matrix(a, b, n).unwrap().det().unwrap();
                assert_eq!(det != 0, poly_gcd(a, b).unwrap().is_one(), "{a} / {b}");
            }
        }
    }
}

#[test]
fn wolfram_code_roundtrip_d3() {
    for code in 0u32..256 {
        let r = LocalRule::from_code(&BigUint::from(code), 3).unwrap();
        assert_eq!(r.wolfram_code().unwrap(), BigUint::from(code));
    }
}

#[test]
fn anf_roundtrip_all_rules_up_to_d4() {
    for d in 2..=4usize {
        for bits in 0..1u64 << (1 << d) {
            let r = LocalRule::from_bits(d, bits).unwrap();
            assert_eq!(Anf::from_rule(&r).unwrap().to_rule(), r);
        }
    }
}

fn bipermutive_rules(d: usize) -> Vec<LocalRule> {
    (0..1u64 << (1 << (d - 2)))
        .map(|g| LocalRule::from_bits(d, oca_core::search::bipermutive_table(d, g)).unwrap())
        .collect()
}

#[test]
fn orthogonal_pairs_are_balanced_and_bijective() {
    for d in 2..=4 {
        let rules = bipermutive_rules(d);
        for f in &rules {
            for g in &rules {
                if are_orthogonal(f, g).unwrap() {
                    assert!(pairwise_balanced(f, g).unwrap());
                    let sys = OcaSystem::new(f.clone(), g.clone()).unwrap();
                    let sum = sys.cycle_decomposition().unwrap();
                    assert_eq!(sum.weight(), 1u128 << (2 * (d - 1)));
                }
            }
        }
    }
}

#[test]
fn linear_step_matches_sylvester_product() {
    let f2 = Field::binary();
    for d in 2..=4usize {
        let n = d - 1;
        let lins: Vec<LinearRule> =
            (0..1u32 << d).filter_map(|m| LinearRule::new(f2, (0..d).map(|i| (m >> i) & 1).collect()).ok()).collect();
        for a in &lins {
            for b in &lins {
                let (f, g) = (a.to_local_rule().unwrap(), b.to_local_rule().unwrap());
                let Ok(sys) = OcaSystem::new(f, g) else { continue };
                let m = sylvester_matrix(&a.to_poly(), &b.to_poly(), n).unwrap();
                for k in 0..1u32 << (2 * n) {
                    let s: Vec<u32> = (0..2 * n).map(|i| (k >> i) & 1).collect();
                    assert_eq!(sys.step(&SystemState(s.clone())).unwrap().0, m.apply(&s).unwrap());
                }
            }
        }
    }
}
