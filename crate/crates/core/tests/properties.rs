use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sedenion_core::boxkite::{assemble_box_kites, strut_product};
use sedenion_core::cdalgebra::triple_count;
use sedenion_core::pathion::hyper_box_kite;
use sedenion_core::{Assessor, CdAlgebra, DenseElement, Orientation, Sedenions, Sign};

fn unit_element(rng: &mut ChaCha8Rng, dim: usize) -> DenseElement {
    let mut x = DenseElement::zero(dim);
    for c in x.coeffs.iter_mut() {
        *c = rng.gen_range(-1.0..1.0);
    }
    let n = x.norm();
    for c in x.coeffs.iter_mut() {
        *c /= n;
    }
    x
}

fn diagonal() -> impl Strategy<Value = sedenion_core::Diagonal> {
    (0usize..42, any::<bool>()).prop_map(|(i, up)| {
        let a = Assessor::all()[i];
        if up {
            a.up()
        } else {
            a.down()
        }
    })
}

proptest! {
    #[test]
    fn table_laws(n in 1u32..=6, i in 0usize..64, j in 0usize..64) {
        let alg = CdAlgebra::new(n).unwrap();
        let (i, j) = (i % alg.dim(), j % alg.dim());
        let (s, k) = alg.mul_basis(i, j).unwrap();
        prop_assert_eq!(k, i ^ j);
        if i == 0 || j == 0 {
            prop_assert_eq!(s, Sign::Plus);
        } else if i == j {
            prop_assert_eq!(s, Sign::Minus);
        } else {
            prop_assert_eq!(alg.mul_basis(j, i).unwrap(), (-s, k));
        }
    }

    #[test]
    fn triple_cyclicity(n in 2u32..=5, pick in 0usize..155) {
        let alg = CdAlgebra::new(n).unwrap();
        let trips = alg.triples();
        let t = trips[pick % trips.len()];
        let [a, b, c] = t.as_array();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            prop_assert_eq!(alg.mul_basis(x, y).unwrap(), (Sign::Plus, z));
            prop_assert_eq!(alg.mul_basis(y, x).unwrap(), (Sign::Minus, z));
        }
    }

    #[test]
    fn xor_criterion_matches_product(x in diagonal(), y in diagonal()) {
        let sed = Sedenions::new();
        prop_assert_eq!(sed.xor_criterion(x, y), sed.is_zero_coupling(x, y));
    }

    #[test]
    fn zero_products_commute_in_reverse(x in diagonal(), y in diagonal()) {
        // a zero coupling xy = 0 forces yx = 0 up to a diagonal flip on both sides
        let sed = Sedenions::new();
        if sed.is_zero_coupling(x, y) {
            prop_assert!(sed.is_zero_coupling(y.flipped(), x.flipped())
                || sed.is_zero_coupling(y, x));
        }
    }

    #[test]
    fn flexible_powers(seed in any::<u64>(), n in 4u32..=5, p in 1u32..=7, q in 1u32..=7) {
        prop_assume!(p + q <= 8);
        let alg = CdAlgebra::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = unit_element(&mut rng, alg.dim());
        let lhs = alg.mul_dense(&alg.pow_element(&x, p).unwrap(), &alg.pow_element(&x, q).unwrap()).unwrap();
        let rhs = alg.pow_element(&x, p + q).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);
    }

    #[test]
    fn zip_on_random_angles(i in 0usize..168, x in -10.0f64..10.0, y in -10.0f64..10.0) {
        let sed = Sedenions::new();
        let c = sed.enumerate_couplings()[i];
        prop_assert!(sed.zip_check(c, x, y).unwrap() < 1e-12);
    }
}

#[test]
fn triple_counts_and_coverage() {
    for (n, want) in [(2, 1), (3, 7), (4, 35), (5, 155)] {
        let alg = CdAlgebra::new(n).unwrap();
        assert_eq!(alg.triples().len(), want);
        assert_eq!(triple_count(n), want);
        let dim = alg.dim();
        for i in 1..dim {
            for j in 1..dim {
                if i != j {
                    let hits = alg
                        .triples()
                        .iter()
                        .filter(|t| t.contains(i) && t.contains(j))
                        .count();
                    assert_eq!(hits, 1, "pair ({i}, {j}) at N={n}");
                }
            }
        }
    }
}

#[test]
fn flexible_law_hundred_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4, 5] {
        let alg = CdAlgebra::new(n).unwrap();
        for _ in 0..100 {
            let x = unit_element(&mut rng, alg.dim());
            for p in 1..8 {
                for q in 1..=(8 - p) {
                    let lhs = alg
                        .mul_dense(
                            &alg.pow_element(&x, p).unwrap(),
                            &alg.pow_element(&x, q).unwrap(),
                        )
                        .unwrap();
                    let rhs = alg.pow_element(&x, p + q).unwrap();
                    assert!(lhs.max_abs_diff(&rhs) < 1e-9);
                }
            }
        }
    }
}

#[test]
fn rule_one_idempotent() {
    let sed = Sedenions::new();
    for (a, b) in sed.edges() {
        let t = sed.rule1_complete(a, b).unwrap();
        let third = *t.members.iter().find(|m| **m != a && **m != b).unwrap();
        assert_eq!(sed.rule1_complete(a, third).unwrap(), t);
        assert_eq!(sed.rule1_complete(b, third).unwrap(), t);
        assert_eq!(sed.rule1_complete(b, a).unwrap(), t);
    }
}

#[test]
fn rule_two_involution() {
    let sed = Sedenions::new();
    for c in sed.enumerate_couplings() {
        let tw = sed.rule2_twist(c).unwrap();
        let twice = |p| {
            sed.twist_pairing(sed.twist_pairing(p).unwrap().0)
                .unwrap()
                .0
        };
        let back = twice(c.as_pairing());
        // twice flips both diagonals: same assessor pair, opposite signs
        assert_eq!(back.to_coupling().assessors(), c.assessors());
        assert_eq!(back.flipped().to_coupling(), c);
        assert_eq!(twice(back).to_coupling(), c);
        assert!(!tw.failed.is_zero());
        assert!(tw.failed.support().all(|i| i == tw.g));
        assert_ne!(tw.result.left().assessor.kite(), c.left().assessor.kite());
    }
}

#[test]
fn strut_products_stay_in_quaternion_copy() {
    let sed = Sedenions::new();
    for k in assemble_box_kites(&sed) {
        let s = k.signature as usize;
        let copy = [0, s, 8, 8 + s];
        for (p, q) in k.struts() {
            for sp in [Sign::Plus, Sign::Minus] {
                for sq in [Sign::Plus, Sign::Minus] {
                    let e = strut_product(&sed, p, q, sp, sq).unwrap();
                    assert!(e.single_term().is_some());
                    assert!(e.support().all(|i| copy.contains(&i)));
                }
            }
        }
        for v in k.vertices {
            for (x, y) in [
                (Orientation::U, Orientation::D),
                (Orientation::U, Orientation::U),
            ] {
                let e = sed.product(v.diagonal(x), v.diagonal(y));
                assert!(e.support().all(|i| copy.contains(&i)));
            }
        }
    }
}

#[test]
fn pathion_matches_sedenion_kites() {
    let sed = Sedenions::new();
    for k in assemble_box_kites(&sed) {
        let h = hyper_box_kite(4, k.signature as usize).unwrap();
        let mut want: Vec<(usize, usize)> = k.vertices.iter().map(|a| (a.o(), a.s())).collect();
        want.sort_unstable();
        let got: Vec<(usize, usize)> = h.vertices.iter().map(|v| (v.o, v.s)).collect();
        assert_eq!(got, want);
        for (x, y) in &h.struts {
            let a = Assessor::new(x.o, x.s).unwrap();
            assert_eq!(k.strut_partner(a).map(|b| (b.o(), b.s())), Some((y.o, y.s)));
        }
    }
}

#[test]
fn kites_partition_assessors() {
    let sed = Sedenions::new();
    let mut seen: Vec<Assessor> = assemble_box_kites(&sed)
        .iter()
        .flat_map(|k| k.vertices)
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen, Assessor::all());
}
