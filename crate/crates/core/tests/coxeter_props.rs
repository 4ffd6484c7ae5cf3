use std::sync::Arc;

use proptest::prelude::*;
use wdigraph::coxeter::{CoxeterSystem, GroupElement, Side};
use wdigraph::families::{affine_a2, type_a3, type_b3, type_h3};

fn dihedral(n: u32) -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::dihedral(Some(n)).unwrap())
}

fn finite_systems() -> Vec<(String, Arc<CoxeterSystem>)> {
    let mut out = vec![("A3".to_string(), type_a3()), ("B3".to_string(), type_b3())];
    for n in 2..=8 {
        out.push((format!("I2({n})"), dihedral(n)));
    }
    out
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0..1u32 << k)
        .map(|mask| (0..k).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn canonicalization_is_idempotent() {
    for (name, w) in finite_systems() {
        for x in w.enumerate(None).unwrap().elements {
            let again = w.element(x.word()).unwrap();
            assert_eq!(again, x, "{name}");
            assert_eq!(w.parse_element(&w.format(&x)).unwrap(), x, "{name}");
        }
    }
}

#[test]
fn length_is_subadditive_and_inverse_invariant() {
    for w in [dihedral(5), type_a3()] {
        let all = w.enumerate(None).unwrap().elements;
        for x in &all {
            assert_eq!(w.inverse(x).unwrap().length(), x.length());
            for y in &all {
                assert!(w.mul(x, y).unwrap().length() <= x.length() + y.length());
            }
        }
    }
}

#[test]
fn unique_longest_element_and_unit_length_steps() {
    for (name, w) in finite_systems() {
        let all = w.enumerate(None).unwrap().elements;
        let max = all.iter().map(GroupElement::length).max().unwrap();
        assert_eq!(all.iter().filter(|x| x.length() == max).count(), 1, "{name}");
        assert_eq!(w.longest_element().unwrap().length(), max, "{name}");
        for x in &all {
            for s in 0..w.rank() {
                for side in [Side::Left, Side::Right] {
                    let (y, up) = w.mul_gen(x, s, side).unwrap();
                    let expected = if up { x.length() + 1 } else { x.length() - 1 };
                    assert_eq!(y.length(), expected, "{name}");
                }
            }
        }
    }
}

#[test]
fn coset_representatives_factor_the_order() {
    for w in [type_a3(), type_b3()] {
        let order = w.order().unwrap();
        for j in subsets(w.rank()) {
            let p = w.parabolic_data(&j, None).unwrap();
            assert_eq!(p.x_j.len() * p.w_j.len(), order, "J = {j:?}");
            if j.is_empty() {
                assert_eq!(p.x_j.len(), order);
            }
            if j.len() == w.rank() {
                assert_eq!(p.x_j, vec![GroupElement::identity()]);
            }
        }
    }
    let a3 = type_a3();
    let p = a3.parabolic_data(&[1, 2], None).unwrap();
    assert_eq!(p.x_j.len(), 4);
}

#[test]
fn bruhat_order_is_a_partial_order_with_extremes() {
    for w in [dihedral(5), type_a3()] {
        let all = w.enumerate(None).unwrap().elements;
        let w0 = w.longest_element().unwrap();
        let e = GroupElement::identity();
        for x in &all {
            assert!(w.bruhat_leq(&e, x).unwrap());
            assert!(w.bruhat_leq(x, &w0).unwrap());
            for y in &all {
                if x != y && w.bruhat_leq(x, y).unwrap() {
                    assert!(!w.bruhat_leq(y, x).unwrap());
                }
            }
        }
    }
    let a3 = type_a3();
    let sr = a3.parse_element("sr").unwrap();
    let rsr = a3.parse_element("rsr").unwrap();
    assert!(a3.bruhat_leq(&sr, &rsr).unwrap());
}

#[test]
fn finiteness_classification() {
    assert!(dihedral(7).is_finite());
    assert!(type_b3().is_finite());
    assert!(type_h3().is_finite());
    assert!(!affine_a2().is_finite());
    assert!(!CoxeterSystem::dihedral(None).unwrap().is_finite());
    assert_eq!(type_h3().order().unwrap(), 120);
}

#[test]
fn support_and_braids() {
    let a3 = type_a3();
    assert!(a3.support(&GroupElement::identity()).is_empty());
    assert_eq!(a3.support(&a3.parse_element("rsr").unwrap()).len(), 2);
    assert_eq!(a3.support(&a3.longest_element().unwrap()).len(), 3);
    let i3 = dihedral(3);
    assert_eq!(i3.parse_element("sts").unwrap(), i3.parse_element("tst").unwrap());
}

fn word_strategy(rank: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn words_multiply_letter_by_letter(word in word_strategy(3, 14)) {
        for w in [type_b3(), affine_a2()] {
            let x = w.element(&word).unwrap();
            let mut y = GroupElement::identity();
            for &s in &word {
                y = w.mul_gen(&y, s, Side::Right).unwrap().0;
            }
            prop_assert_eq!(&x, &y);
            prop_assert!(x.length() <= word.len());
            prop_assert_eq!(x.length() % 2, word.len() % 2);
        }
    }

    #[test]
    fn multiplication_is_associative(a in word_strategy(3, 8), b in word_strategy(3, 8), c in word_strategy(3, 8)) {
        let w = affine_a2();
        let (x, y, z) = (w.element(&a).unwrap(), w.element(&b).unwrap(), w.element(&c).unwrap());
        let left = w.mul(&w.mul(&x, &y).unwrap(), &z).unwrap();
        let right = w.mul(&x, &w.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let xinv = w.inverse(&x).unwrap();
        prop_assert!(w.mul(&x, &xinv).unwrap().is_identity());
    }

    #[test]
    fn generators_are_involutions(word in word_strategy(3, 10), s in 0usize..3) {
        let w = type_h3();
        let x = w.element(&word).unwrap();
        let (y, _) = w.mul_gen(&x, s, Side::Left).unwrap();
        let (z, _) = w.mul_gen(&y, s, Side::Left).unwrap();
        prop_assert_eq!(z, x);
    }
}
