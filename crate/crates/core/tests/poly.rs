mod common;

use std::cmp::Ordering;
use std::sync::Arc;

use common::*;
use cycle_rees::poly::{
    leading_term, monomial_cmp, Monomial, OrderSpec, Polynomial, Rational, RingSpec,
};
use cycle_rees::Error;
use proptest::prelude::*;

fn cycle(n: usize) -> Arc<RingSpec> {
    Arc::new(RingSpec::cycle(n, false).unwrap())
}

#[test]
fn paper_order_examples() {
    let r = cycle(5);
    let o = r.ambient();
    let m = |s| Monomial::parse(&r, s).unwrap();
    assert_eq!(
        monomial_cmp(o, &m("y1"), &m("y2")).unwrap(),
        Ordering::Greater
    );
    assert_eq!(
        monomial_cmp(o, &m("x3*y1"), &m("x1*y2")).unwrap(),
        Ordering::Greater
    );
    assert_eq!(
        monomial_cmp(o, &m("x1*x2*y3"), &m("x1*x2*y3")).unwrap(),
        Ordering::Equal
    );
    let r4 = cycle(4);
    let m4 = |s| Monomial::parse(&r4, s).unwrap();
    assert_eq!(
        monomial_cmp(r4.ambient(), &m4("y1*y3"), &m4("y0*y2")).unwrap(),
        Ordering::Greater
    );
}

#[test]
fn order_dimension_mismatch() {
    let r = cycle(4);
    let a = Monomial::one(8);
    let b = Monomial::one(5);
    assert!(matches!(
        monomial_cmp(r.ambient(), &a, &b),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn arithmetic_examples() {
    let r = cycle(4);
    assert_eq!((&parse(&r, "x1 - y1") + &parse(&r, "y1")).to_string(), "x1");
    assert_eq!(
        (&parse(&r, "y1 - y2") * &parse(&r, "y1 + y2")).to_string(),
        "y1^2 - y2^2"
    );
    assert!((&Polynomial::zero(&r) * &parse(&r, "x1*y2 + 3")).is_zero());
    let other = cycle(5);
    assert_eq!(
        parse(&r, "x1").try_add(&parse(&other, "x1")),
        Err(Error::RingMismatch)
    );
}

#[test]
fn leading_term_examples() {
    let r = cycle(6);
    let o = r.ambient();
    let f1 = parse(&r, "x5*y1 - x1*y2");
    assert_eq!(
        leading_term(o, &f1).unwrap().mono,
        Monomial::parse(&r, "x5*y1").unwrap()
    );
    let h1 = parse(&r, "y0*y3 - y1*y4");
    assert_eq!(
        leading_term(o, &h1).unwrap().mono,
        Monomial::parse(&r, "y1*y4").unwrap()
    );
    let c = Polynomial::constant(&r, Rational::new(3, 2));
    let lt = leading_term(o, &c).unwrap();
    assert_eq!(
        (lt.coeff.clone(), lt.mono.is_one()),
        (Rational::new(3, 2), true)
    );
    assert_eq!(
        leading_term(o, &Polynomial::zero(&r)).err(),
        Some(Error::ZeroPolynomial)
    );
}

#[test]
fn canonical_text_roundtrip() {
    let r = cycle(6);
    let p = parse(&r, "  - x1*y2 +x5 * y1 ");
    assert_eq!(p.to_string(), "x5*y1 - x1*y2");
    assert_eq!(parse(&r, &p.to_string()), p);
    assert_eq!(parse(&r, "0").to_string(), "0");
    assert!(Polynomial::parse(&r, "x6").is_err());
}

proptest! {
    #[test]
    fn order_is_total_and_multiplicative(o in order(5), a in monomial(3, 5), b in monomial(3, 5), c in monomial(3, 5)) {
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_ne!(o.cmp(&Monomial::one(5), &a), Ordering::Greater);
    }

    #[test]
    fn order_is_transitive(o in order(4), a in monomial(2, 4), b in monomial(2, 4), c in monomial(2, 4)) {
        if o.cmp(&a, &b) != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
            prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
        }
    }

    #[test]
    fn y_block_dominates(a in monomial(2, 8), b in monomial(2, 8)) {
        // cycle ring n = 4: Y block is variables 0..4
        let o = OrderSpec::cycle_product(8, 4, 0, 4);
        let ya: Vec<u16> = a.exponents()[..4].to_vec();
        let yb: Vec<u16> = b.exponents()[..4].to_vec();
        if ya != yb {
            let pad = |y: &[u16]| { let mut e = y.to_vec(); e.extend([0; 4]); Monomial::from_exponents(&e).unwrap() };
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&pad(&ya), &pad(&yb)));
        }
    }

    #[test]
    fn ring_axioms(p in polynomial(small_ring(3), 4, 2), q in polynomial(small_ring(3), 4, 2), s in polynomial(small_ring(3), 4, 2)) {
        prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(-(-p.clone()), p.clone());
    }

    #[test]
    fn normalize_is_idempotent(p in polynomial(small_ring(3), 6, 2)) {
        let once = p.normalize();
        prop_assert_eq!(once.normalize(), once.clone());
        prop_assert_eq!(once, p);
    }

    #[test]
    fn text_roundtrip(p in polynomial(small_ring(4), 5, 3)) {
        let r = small_ring(4);
        prop_assert_eq!(Polynomial::parse(&r, &p.to_string()).unwrap(), p);
    }
}
