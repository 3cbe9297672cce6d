mod common;

use std::sync::Arc;

use common::*;
use cycle_rees::groebner::{
    buchberger, eliminate, ideal_equal, ideal_membership, is_groebner_basis, normal_form, Budget,
    GbCheck, Ideal,
};
use cycle_rees::poly::{Polynomial, Rational, RingSpec};
use cycle_rees::rees::{
    cycle_ring, family_half, family_n_minus_2, fiber_ideal, fiber_ideal_of, graph_ideal,
    rees_ideal, rees_ring, sym_relations, x_elimination_order, PathIdealSpec,
};
use proptest::prelude::*;

fn spec(n: usize, t: usize) -> PathIdealSpec {
    PathIdealSpec::new(n, t).unwrap()
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

#[test]
fn g2_reduces_to_zero_modulo_first_generators() {
    let fam = family_n_minus_2(6).unwrap();
    let ring = fam.ring.clone();
    let mut g = fam.prefixed("f");
    g.push(fam.get("g1").unwrap().clone());
    let g2 = fam.get("g2").unwrap();
    assert_eq!(g2.to_string(), "x2*y1*y3 - x4*y0*y2");
    // the leading monomial x2*y1*y3 is divisible by no leading monomial of
    // {f1..f5, g1}, so the reduction runs modulo a basis of that ideal
    assert_eq!(normal_form(g2, &g, ring.ambient()).unwrap(), *g2);
    let gb = buchberger(&ring, &g, ring.ambient()).unwrap();
    assert!(normal_form(g2, gb.elements(), ring.ambient())
        .unwrap()
        .is_zero());
    assert!(normal_form(&g[2], &g, ring.ambient()).unwrap().is_zero());
    let y0 = Polynomial::var(&ring, ring.y(0));
    let all = fam.polys();
    assert_eq!(normal_form(&y0, &all, ring.ambient()).unwrap(), y0);
}

#[test]
fn small_bases() {
    let r = cycle_ring(4).unwrap();
    let y1 = parse(&r, "y1");
    let gb = buchberger(&r, std::slice::from_ref(&y1), r.ambient()).unwrap();
    assert_eq!(gb.elements(), std::slice::from_ref(&y1));
    assert!(
        is_groebner_basis(&parse_all(&r, &["y1", "y2"]), r.ambient())
            .unwrap()
            .is_basis()
    );
    let fam = family_n_minus_2(4).unwrap();
    let gb = buchberger(&r, &fam.polys(), r.ambient()).unwrap();
    let mut lms: Vec<String> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.display(&r).to_string())
        .collect();
    lms.sort();
    assert_eq!(lms, ["x0*y1", "x0*y2", "x1*y3", "x3*y1", "y1*y3"]);
    // L alone misses y1*y3, the leading monomial of h
    let sym = sym_relations(spec(4, 2)).unwrap();
    let lms = sym.groebner_basis(r.ambient()).unwrap().leading_monomials();
    assert!(!lms.contains(&cycle_rees::poly::Monomial::parse(&r, "y1*y3").unwrap()));
}

#[test]
fn half_family_is_already_reduced_basis() {
    let fam = family_half(6).unwrap();
    let ring = fam.ring.clone();
    let gb = buchberger(&ring, &fam.polys(), ring.ambient()).unwrap();
    let mut input = texts(&fam.polys());
    let mut output = texts(gb.elements());
    input.sort();
    output.sort();
    assert_eq!(input, output);
}

#[test]
fn dropping_a_ladder_member_breaks_the_basis() {
    let fam = family_n_minus_2(8).unwrap();
    let ring = fam.ring.clone();
    assert!(is_groebner_basis(&fam.polys(), ring.ambient())
        .unwrap()
        .is_basis());
    let gaps = fam.without("g3").polys();
    match is_groebner_basis(&gaps, ring.ambient()).unwrap() {
        GbCheck::NotBasis(c) => {
            assert!(!c.remainder.is_zero());
            assert!(c.i < gaps.len() && c.j < gaps.len() && c.i != c.j);
            // the remainder lies in the ideal but is irreducible by the gapped set
            assert_eq!(
                normal_form(&c.remainder, &gaps, ring.ambient()).unwrap(),
                c.remainder
            );
        }
        GbCheck::Basis => panic!("expected a certificate"),
    }
}

#[test]
fn membership_examples() {
    let j6 = rees_ideal(spec(6, 4), &unlimited()).unwrap();
    let r6 = j6.ring().clone();
    let h = parse(&r6, "y1*y3*y5 - y0*y2*y4");
    assert!(ideal_membership(&h, &j6, r6.ambient()).unwrap());
    assert!(ideal_membership(&Polynomial::zero(&r6), &j6, r6.ambient()).unwrap());
    let j5 = rees_ideal(spec(5, 3), &unlimited()).unwrap();
    let r5 = j5.ring().clone();
    assert!(!ideal_membership(&parse(&r5, "y1*y3 - y0*y2"), &j5, r5.ambient()).unwrap());
    let l6 = sym_relations(spec(6, 4)).unwrap();
    let g2 = family_n_minus_2(6).unwrap().get("g2").unwrap().clone();
    assert!(ideal_membership(&g2, &l6, r6.ambient()).unwrap());
}

#[test]
fn equality_examples() {
    let b = unlimited();
    let j = rees_ideal(spec(7, 4), &b).unwrap();
    let l = sym_relations(spec(7, 4)).unwrap();
    let o = j.ring().ambient().clone();
    assert!(!ideal_equal(&l, &j, &o).unwrap());
    assert!(ideal_equal(&j, &j, &o).unwrap());

    let j = rees_ideal(spec(6, 4), &b).unwrap();
    let fam = family_n_minus_2(6).unwrap();
    let o = j.ring().ambient().clone();
    let lht = Ideal::new(j.ring(), fam.polys()).unwrap();
    assert!(ideal_equal(&lht, &j, &o).unwrap());
    let l = sym_relations(spec(6, 4)).unwrap();
    assert!(!ideal_equal(&l, &j, &o).unwrap());
}

#[test]
fn elimination_examples() {
    let b = unlimited();
    let g = graph_ideal(spec(4, 2)).unwrap();
    let j = rees_ideal(spec(4, 2), &b).unwrap();
    assert_eq!(**j.ring(), *cycle_ring(4).unwrap());
    let h = fiber_ideal_of(&j, &b).unwrap();
    assert_eq!(texts(h.generators()), vec!["y1*y3 - y0*y2"]);
    assert!(fiber_ideal(spec(5, 2), &b).unwrap().is_zero());

    // eliminating nothing changes nothing
    let ring = g.ring().clone();
    let same = eliminate(&g, &[], ring.ambient(), &b).unwrap();
    assert!(ideal_equal(&same, &g, ring.ambient()).unwrap());
    let _ = rees_ring(4).unwrap();
    assert!(x_elimination_order(4).is_ok());
}

#[test]
fn budget_is_enforced() {
    let j = graph_ideal(spec(9, 4)).unwrap();
    let order = j.ring().ambient().clone();
    let err = j
        .groebner_basis_with_budget(&order, &Budget::with_steps(3))
        .unwrap_err();
    assert_eq!(err, cycle_rees::Error::BudgetExceeded);
}

fn ring3() -> Arc<RingSpec> {
    small_ring(3)
}

fn shuffled<T: Clone>(v: &[T], key: &[u32]) -> Vec<T> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by_key(|&i| key[i % key.len()].wrapping_mul(i as u32 + 7));
    idx.into_iter().map(|i| v[i].clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduced_basis_ignores_generator_order(
        gens in prop::collection::vec(binomial(ring3(), 2), 1..=4),
        key in prop::collection::vec(any::<u32>(), 4),
        o in order(3),
    ) {
        let r = ring3();
        let a = buchberger(&r, &gens, &o).unwrap();
        let b = buchberger(&r, &shuffled(&gens, &key), &o).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
        prop_assert!(is_groebner_basis(a.elements(), &o).unwrap().is_basis());
    }

    #[test]
    fn constructed_combinations_are_members(
        gens in prop::collection::vec(binomial(ring3(), 2), 1..=3),
        cofs in prop::collection::vec(polynomial(ring3(), 3, 1), 3),
        o in order(3),
    ) {
        let r = ring3();
        let mut f = Polynomial::zero(&r);
        for (g, c) in gens.iter().zip(&cofs) {
            f = &f + &(c * g);
        }
        let ideal = Ideal::new(&r, gens).unwrap();
        prop_assert!(ideal_membership(&f, &ideal, &o).unwrap());
    }

    #[test]
    fn normal_form_is_reduced_and_congruent(
        // multilinear generators keep dense lex bases small
        gens in prop::collection::vec(polynomial(ring3(), 3, 1), 1..=3),
        f in polynomial(ring3(), 4, 3),
        o in order(3),
    ) {
        let r = ring3();
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let ideal = Ideal::new(&r, gens).unwrap();
        let gb = ideal.groebner_basis(&o).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        let lms = gb.leading_monomials();
        prop_assert!(nf.terms().iter().all(|t| !lms.iter().any(|l| l.divides(&t.mono))));
        prop_assert!(ideal.contains(&(&f - &nf), &o, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn binomial_bases_stay_binomial(gens in prop::collection::vec(binomial(ring3(), 2), 1..=4)) {
        let r = ring3();
        let gb = buchberger(&r, &gens, r.ambient()).unwrap();
        for g in gb.elements() {
            prop_assert!(g.terms().len() <= 2);
            prop_assert!(g.terms().iter().all(|t| t.coeff == Rational::ONE || t.coeff == -Rational::ONE));
        }
    }
}
