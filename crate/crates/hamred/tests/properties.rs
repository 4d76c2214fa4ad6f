//! Property-based invariants for the algebra core and the exact linear
//! algebra, driven by proptest.

use num_traits::{One, Zero};
use proptest::prelude::*;

use hamred::linalg::{complement_reps, express, rref_span, Subspace};
use hamred::superblade::{
    format_element, parse_element, Blade, Element, Parity, Signature,
};
use hamred::{ratio, Rat};

fn small_sig() -> impl Strategy<Value = Signature> {
    prop::collection::vec(prop_oneof![Just(-1i8), Just(0), Just(1)], 1..=4)
        .prop_map(|v| Signature::new(v).unwrap())
}

fn element_in(sig: Signature) -> impl Strategy<Value = Element> {
    let dim = sig.dim() as u64;
    prop::collection::vec((0..dim, -5i64..=5, 1i64..=3), 0..=4).prop_map(move |terms| {
        let mut e = Element::zero(sig.clone());
        for (mask, n, d) in terms {
            e = e.add(&Element::from_blade(sig.clone(), Blade(mask), ratio(n, d)));
        }
        e
    })
}

fn sig_and_elements(k: usize) -> impl Strategy<Value = (Signature, Vec<Element>)> {
    small_sig().prop_flat_map(move |sig| {
        let elems = prop::collection::vec(element_in(sig.clone()), k);
        (Just(sig), elems)
    })
}

fn homogeneous(e: &Element, odd: bool) -> Element {
    let (ev, od) = e.parity_decompose();
    if odd {
        od
    } else {
        ev
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_is_associative((_, es) in sig_and_elements(3)) {
        let (f, g, h) = (&es[0], &es[1], &es[2]);
        prop_assert_eq!(f.mul(g).mul(h), f.mul(&g.mul(h)));
    }

    #[test]
    fn supercommutator_is_super_antisymmetric(
        (_, es) in sig_and_elements(2),
        of in any::<bool>(),
        og in any::<bool>(),
    ) {
        let f = homogeneous(&es[0], of);
        let g = homogeneous(&es[1], og);
        let sign = i64::from(Parity::from_count(of as usize).sign_factor(Parity::from_count(og as usize)));
        prop_assert_eq!(
            f.supercommutator(&g),
            g.supercommutator(&f).scale(&ratio(-sign, 1))
        );
    }

    #[test]
    fn supercommutator_satisfies_super_jacobi(
        (_, es) in sig_and_elements(3),
        par in prop::collection::vec(any::<bool>(), 3),
    ) {
        let f = homogeneous(&es[0], par[0]);
        let g = homogeneous(&es[1], par[1]);
        let h = homogeneous(&es[2], par[2]);
        let sign = i64::from(
            Parity::from_count(par[0] as usize).sign_factor(Parity::from_count(par[1] as usize)),
        );
        let lhs = f.supercommutator(&g.supercommutator(&h));
        let rhs = f
            .supercommutator(&g)
            .supercommutator(&h)
            .add(&g.supercommutator(&f.supercommutator(&h)).scale(&ratio(sign, 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parity_is_multiplicative(
        (_, es) in sig_and_elements(2),
        of in any::<bool>(),
        og in any::<bool>(),
    ) {
        let f = homogeneous(&es[0], of);
        let g = homogeneous(&es[1], og);
        let p = f.mul(&g);
        if !p.is_zero() {
            let expected = Parity::from_count(of as usize).add(Parity::from_count(og as usize));
            prop_assert_eq!(p.parity(), Some(expected));
        }
    }

    #[test]
    fn supercommutator_is_a_super_derivation(
        (_, es) in sig_and_elements(3),
        of in any::<bool>(),
        og in any::<bool>(),
    ) {
        // [f, gh] = [f,g] h + (-1)^{|f||g|} g [f,h] for homogeneous f, g
        let f = homogeneous(&es[0], of);
        let g = homogeneous(&es[1], og);
        let h = &es[2];
        let sign = i64::from(
            Parity::from_count(of as usize).sign_factor(Parity::from_count(og as usize)),
        );
        let lhs = f.supercommutator(&g.mul(h));
        let rhs = f
            .supercommutator(&g)
            .mul(h)
            .add(&g.mul(&f.supercommutator(h)).scale(&ratio(sign, 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn format_parse_round_trip((sig, es) in sig_and_elements(1)) {
        let e = &es[0];
        let text = format_element(e);
        prop_assert_eq!(&parse_element(&text, &sig).unwrap(), e);
    }

    #[test]
    fn rref_is_canonical_under_row_scaling_and_order(
        rows in prop::collection::vec(
            prop::collection::vec(-4i64..=4, 5),
            1..=5,
        ),
        scales in prop::collection::vec(1i64..=3, 5),
        rotate in 0usize..5,
    ) {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect();
        let span_a = rref_span(&rows, 5).unwrap();
        let mut shuffled: Vec<Vec<Rat>> = rows
            .iter()
            .zip(scales.iter().cycle())
            .map(|(r, &s)| r.iter().map(|x| x * ratio(s, 1)).collect())
            .collect();
        let pivot = rotate.min(shuffled.len().saturating_sub(1));
        shuffled.rotate_left(pivot);
        let span_b = rref_span(&shuffled, 5).unwrap();
        prop_assert_eq!(span_a.basis_rows(), span_b.basis_rows());
    }

    #[test]
    fn complement_reps_count_the_quotient(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4),
        sub_rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..=2),
    ) {
        let to_rat = |rs: &Vec<Vec<i64>>| -> Vec<Vec<Rat>> {
            rs.iter().map(|r| r.iter().map(|&x| ratio(x, 1)).collect()).collect()
        };
        let mut all = to_rat(&rows);
        let small = to_rat(&sub_rows);
        all.extend(small.iter().cloned());
        let s = rref_span(&all, 4).unwrap();
        let t = rref_span(&small, 4).unwrap();
        let reps = complement_reps(&s, &t).unwrap();
        prop_assert_eq!(reps.len(), s.dim() - t.dim());
        // each representative lies in S but not in T + span(previous reps)
        let mut seen = t.clone();
        for r in &reps {
            prop_assert!(s.contains(r).unwrap());
            prop_assert!(!seen.contains(r).unwrap());
            seen.insert(r.clone()).unwrap();
        }
    }

    #[test]
    fn express_reproduces_members(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4),
        coeffs in prop::collection::vec(-3i64..=3, 4),
    ) {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect();
        let mut v = vec![Rat::zero(); 4];
        for (row, &c) in rows.iter().zip(&coeffs) {
            for (slot, x) in v.iter_mut().zip(row) {
                *slot += x * ratio(c, 1);
            }
        }
        let solved = express(&rows, &v).expect("member of the span");
        let mut rebuilt = vec![Rat::zero(); 4];
        for (row, c) in rows.iter().zip(&solved) {
            for (slot, x) in rebuilt.iter_mut().zip(row) {
                *slot += x * c;
            }
        }
        prop_assert_eq!(rebuilt, v);
    }

    #[test]
    fn subspace_insert_is_idempotent_on_members(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4),
    ) {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect();
        let span = rref_span(&rows, 4).unwrap();
        let mut again = Subspace::empty(4);
        for r in span.basis_rows() {
            again.insert(r.clone()).unwrap();
        }
        for r in &rows {
            prop_assert!(!again.insert(r.clone()).unwrap());
        }
        prop_assert_eq!(span.basis_rows(), again.basis_rows());
    }

    #[test]
    fn unit_blade_is_neutral((sig, es) in sig_and_elements(1)) {
        let e = &es[0];
        let one = Element::one(sig);
        prop_assert_eq!(&one.mul(e), e);
        prop_assert_eq!(&e.mul(&one), e);
    }

    #[test]
    fn generator_squares_follow_the_signature(sig in small_sig()) {
        for i in 1..=sig.len() {
            let x = Element::generator(sig.clone(), i).unwrap();
            let sq = x.mul(&x);
            let expected = Element::one(sig.clone()).scale(&ratio(i64::from(sig.square(i)), 1));
            prop_assert_eq!(sq, expected);
        }
    }
}

#[test]
fn parity_from_count_matches_grade() {
    for mask in 0u64..16 {
        let b = Blade(mask);
        assert_eq!(b.parity(), Parity::from_count(b.grade()));
    }
    assert!(Rat::one() > Rat::zero());
}
