//! Randomized algebra laws for coefficients, monomial orders, and
//! polynomial arithmetic, in characteristic 0 and a small prime.

use gbei_core::{Coeff, Monomial, MonomialOrder, Polynomial, RingSpec};
use proptest::prelude::*;
use std::cmp::Ordering;

fn spec(characteristic: u64) -> RingSpec {
    RingSpec::new(2, 3, characteristic).unwrap()
}

fn arb_coeff(characteristic: u64) -> impl Strategy<Value = Coeff> {
    (-40i64..=40).prop_map(move |v| Coeff::from_i64(v, characteristic))
}

fn arb_monomial(varcount: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=3, varcount).prop_map(Monomial::new)
}

fn arb_poly(characteristic: u64) -> impl Strategy<Value = Polynomial> {
    let s = spec(characteristic);
    proptest::collection::vec(
        (arb_monomial(s.varcount()), arb_coeff(characteristic)),
        0..5,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(s);
        for (mono, c) in terms {
            p = p.add(&Polynomial::monomial_term(s, mono, c));
        }
        p
    })
}

fn orders() -> Vec<MonomialOrder> {
    let nvars = spec(0).varcount();
    vec![MonomialOrder::degrevlex(nvars), MonomialOrder::lex(nvars)]
}

proptest! {
    #[test]
    fn coeff_field_laws_char_zero(a in arb_coeff(0), b in arb_coeff(0), c in arb_coeff(0)) {
        coeff_laws(0, a, b, c);
    }

    #[test]
    fn coeff_field_laws_char_seven(a in arb_coeff(7), b in arb_coeff(7), c in arb_coeff(7)) {
        coeff_laws(7, a, b, c);
    }

    #[test]
    fn poly_ring_laws_char_zero(f in arb_poly(0), g in arb_poly(0), h in arb_poly(0)) {
        ring_laws(0, f, g, h);
    }

    #[test]
    fn poly_ring_laws_char_five(f in arb_poly(5), g in arb_poly(5), h in arb_poly(5)) {
        ring_laws(5, f, g, h);
    }

    #[test]
    fn print_parse_roundtrip_char_zero(f in arb_poly(0)) {
        let back = Polynomial::parse(spec(0), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn print_parse_roundtrip_char_five(f in arb_poly(5)) {
        let back = Polynomial::parse(spec(5), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        a in arb_monomial(6),
        b in arb_monomial(6),
        c in arb_monomial(6),
    ) {
        for order in orders() {
            // Antisymmetry and totality.
            match order.cmp(&a, &b) {
                Ordering::Equal => prop_assert_eq!(&a, &b),
                Ordering::Less => prop_assert_eq!(order.cmp(&b, &a), Ordering::Greater),
                Ordering::Greater => prop_assert_eq!(order.cmp(&b, &a), Ordering::Less),
            }
            // Translation invariance: comparisons survive multiplication.
            let ac = a.mul(&c);
            let bc = b.mul(&c);
            prop_assert_eq!(order.cmp(&ac, &bc), order.cmp(&a, &b));
            // The unit monomial is the global minimum.
            let one = Monomial::new(vec![0; 6]);
            if a != one {
                prop_assert_eq!(order.cmp(&a, &one), Ordering::Greater);
            }
        }
    }

    #[test]
    fn default_order_is_degree_compatible(a in arb_monomial(6), b in arb_monomial(6)) {
        let order = MonomialOrder::degrevlex(6);
        if a.degree() != b.degree() {
            let expect = a.degree().cmp(&b.degree());
            prop_assert_eq!(order.cmp(&a, &b), expect);
        }
    }
}

fn coeff_laws(characteristic: u64, a: Coeff, b: Coeff, c: Coeff) {
    let zero = Coeff::zero(characteristic);
    let one = Coeff::one(characteristic);

    assert_eq!(a.add(&b), b.add(&a));
    assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    assert_eq!(a.add(&zero), a);
    assert_eq!(a.add(&a.neg()), zero);

    assert_eq!(a.mul(&b), b.mul(&a));
    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    assert_eq!(a.mul(&one), a);
    assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));

    match a.inv() {
        Some(ai) => assert_eq!(a.mul(&ai), one),
        None => assert_eq!(a, zero),
    }
}

fn ring_laws(characteristic: u64, f: Polynomial, g: Polynomial, h: Polynomial) {
    let s = spec(characteristic);
    let zero = Polynomial::zero(s);
    let one = Polynomial::one(s);

    assert_eq!(f.add(&g), g.add(&f));
    assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
    assert_eq!(f.add(&zero), f);
    assert!(f.sub(&f).is_zero());
    assert_eq!(f.neg().neg(), f);
    assert_eq!(f.sub(&g), f.add(&g.neg()));

    assert_eq!(f.mul(&g), g.mul(&f));
    assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    assert_eq!(f.mul(&one), f);
    assert!(f.mul(&zero).is_zero());

    assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
}
