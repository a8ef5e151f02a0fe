use std::collections::HashMap;

use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::algebra::monomial::{monomials_of_degree, ExponentVector};
use crate::algebra::rational::int;
use crate::algebra::{parse_ideal, parse_polynomial, Ideal, Polynomial, Rational, TermOrder};

fn ideal(s: &str) -> Ideal {
    parse_ideal(s).unwrap()
}

fn poly(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, n).unwrap()
}

/// Echelon form over the rationals, keyed by pivot monomial.
#[derive(Default)]
struct Echelon {
    rows: Vec<(ExponentVector, HashMap<ExponentVector, Rational>)>,
}

impl Echelon {
    fn reduce(
        &self,
        mut v: HashMap<ExponentVector, Rational>,
    ) -> HashMap<ExponentVector, Rational> {
        for (piv, row) in &self.rows {
            if let Some(c) = v.get(piv).cloned() {
                for (m, d) in row {
                    let e = v.entry(m.clone()).or_insert_with(Rational::zero);
                    *e -= &c * d;
                }
                v.retain(|_, c| !c.is_zero());
            }
        }
        v
    }

    fn insert(&mut self, v: HashMap<ExponentVector, Rational>) {
        let v = self.reduce(v);
        if let Some(piv) = v.keys().max().cloned() {
            let inv = v[&piv].recip();
            let row: HashMap<_, _> = v.into_iter().map(|(m, c)| (m, c * &inv)).collect();
            // keep earlier rows reduced against the new pivot
            for (_, r) in self.rows.iter_mut() {
                if let Some(c) = r.get(&piv).cloned() {
                    for (m, d) in &row {
                        let e = r.entry(m.clone()).or_insert_with(Rational::zero);
                        *e -= &c * d;
                    }
                    r.retain(|_, c| !c.is_zero());
                }
            }
            self.rows.push((piv, row));
        }
    }
}

fn as_map(f: &Polynomial) -> HashMap<ExponentVector, Rational> {
    f.terms().iter().cloned().collect()
}

/// Degree-bounded membership: is `f` a Q-combination of `m·g` with
/// `deg(m·g) <= bound`? Independent of Buchberger.
fn macaulay_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    let n = f.nvars();
    let mut ech = Echelon::default();
    for g in gens {
        let dg = g.total_degree().unwrap();
        for d in 0..=bound.saturating_sub(dg) {
            for m in monomials_of_degree(n, d) {
                ech.insert(as_map(&g.mul_monomial(&m)));
            }
        }
    }
    ech.reduce(as_map(f)).is_empty()
}

#[test]
fn normal_form_examples() {
    let b = groebner_basis(&ideal("vars x0..x1; x0")).unwrap();
    assert!(normal_form(&poly("x0^2", 2), &b).unwrap().is_zero());
    assert_eq!(normal_form(&poly("x1", 2), &b).unwrap(), poly("x1", 2));

    let i = ideal("vars x0..x1; x0^2, x0*x1 + x1^2");
    let b = groebner_basis(&i).unwrap();
    let f = poly("x0*x1^2", 2);
    let r = normal_form(&f, &b).unwrap();
    assert!(r.is_zero());
    // the remainder does not depend on the order divisors are tried in
    let order = TermOrder::grevlex();
    let sorted: Vec<Terms> = b.elements().iter().map(|g| to_terms(g, &order)).collect();
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for p in perms {
        let refs: Vec<&Terms> = p.iter().map(|&k| &sorted[k]).collect();
        for g in ["x0*x1^2", "x1^4 + x0*x1", "x0^3*x1 - 7*x1^2"] {
            let out = reduce(to_terms(&poly(g, 2), &order), &refs, &order);
            let expect = normal_form(&poly(g, 2), &b).unwrap();
            assert_eq!(Polynomial::from_terms(2, out), expect);
        }
    }
}

#[test]
fn buchberger_examples() {
    let b = groebner_basis(&ideal("vars x0..x2; x0*x1, x1*x2")).unwrap();
    assert_eq!(b.elements(), &[poly("x1*x2", 3), poly("x0*x1", 3)]);

    let b = groebner_basis(&ideal("vars x0..x1; x0^2, x0*x1 + x1^2")).unwrap();
    let mut got: Vec<String> = b.elements().iter().map(|g| g.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x0*x1 + x1^2", "x0^2", "x1^3"]);

    let b = buchberger(&ideal("vars x0..x2; x0 - x1, x1 - x2"), &TermOrder::lex()).unwrap();
    assert_eq!(b.elements(), &[poly("x1 - x2", 3), poly("x0 - x2", 3)]);
    assert!(b.self_check());
}

#[test]
fn membership_examples() {
    assert!(ideal_membership(&poly("x0^2*x1", 2), &ideal("vars x0..x1; x0^2")).unwrap());
    assert!(!ideal_membership(&poly("x0", 2), &ideal("vars x0..x1; x0^2")).unwrap());
    let i = ideal("vars x0..x1; x0^2, x0*x1 + x1^2");
    assert!(ideal_membership(&poly("x1^3", 2), &i).unwrap());
    assert!(macaulay_member(&poly("x1^3", 2), i.generators(), 3));
}

#[test]
fn equality_examples() {
    assert!(ideal_equal(&ideal("vars x0..x1; x0, x1"), &ideal("vars x0..x1; x1, x0")).unwrap());
    let sq = power(&ideal("vars x0..x1; x0, x1"), 2).unwrap();
    assert!(ideal_equal(&ideal("vars x0..x1; x0^2, x0*x1, x1^2"), &sq).unwrap());
    assert!(!ideal_equal(&ideal("vars x0..x1; x0"), &ideal("vars x0..x1; x0^2")).unwrap());
    // non-monomial presentation of a monomial ideal
    assert!(ideal_equal(
        &ideal("vars x0..x1; x0 + x1, x0 - x1"),
        &ideal("vars x0..x1; x0, x1")
    )
    .unwrap());
}

#[test]
fn elimination_examples() {
    // t is x1 here: (t*x0 - 1, x0^2) is the unit ideal
    let i = ideal("vars x0..x1; x1*x0 - 1, x0^2");
    assert!(macaulay_member(&Polynomial::one(2), i.generators(), 4));
    let e = eliminate(&i, &[1]).unwrap();
    assert!(is_unit(&e).unwrap());

    // t is x2
    let i = ideal("vars x0..x2; x0 - x2, x1 - x2");
    let e = eliminate(&i, &[2]).unwrap();
    assert!(ideal_equal(&e, &ideal("vars x0..x2; x0 - x1")).unwrap());

    let i = ideal("vars x0..x2; x0^2 - x1, x2");
    assert!(ideal_equal(&eliminate(&i, &[]).unwrap(), &i).unwrap());
}

#[test]
fn quotient_examples() {
    let x0 = poly("x0", 3);
    let q = quotient(&ideal("vars x0..x2; x0^2"), &x0).unwrap();
    assert!(ideal_equal(&q, &ideal("vars x0..x2; x0")).unwrap());
    let q = quotient(&ideal("vars x0..x2; x0*x1"), &poly("x2", 3)).unwrap();
    assert!(ideal_equal(&q, &ideal("vars x0..x2; x0*x1")).unwrap());
    let q = quotient(&ideal("vars x0..x2; x0^2, x0*x1"), &x0).unwrap();
    assert!(ideal_equal(&q, &ideal("vars x0..x2; x0, x1")).unwrap());
    // same ideal through the general (non-monomial) path
    let q = quotient(&ideal("vars x0..x2; x0^2, x0*x1 + x0^2"), &x0).unwrap();
    assert!(ideal_equal(&q, &ideal("vars x0..x2; x0, x1")).unwrap());
    assert!(quotient(&ideal("vars x0..x2; x0"), &Polynomial::zero(3)).is_err());
}

#[test]
fn saturation_examples() {
    let x0 = poly("x0", 3);
    assert!(is_unit(&saturate(&ideal("vars x0..x2; x0^2"), &x0).unwrap()).unwrap());
    let s = saturate(&ideal("vars x0..x2; x0^2*x1"), &x0).unwrap();
    assert!(ideal_equal(&s, &ideal("vars x0..x2; x1")).unwrap());
    // chain (x0^2, x0x1) -> (x0, x1) -> (1)
    let i = ideal("vars x0..x2; x0^2, x0*x1");
    let c1 = quotient(&i, &x0).unwrap();
    assert!(ideal_equal(&c1, &ideal("vars x0..x2; x0, x1")).unwrap());
    let c2 = quotient(&c1, &x0).unwrap();
    assert!(is_unit(&c2).unwrap());
    assert!(is_unit(&saturate(&i, &x0).unwrap()).unwrap());
}

#[test]
fn irrelevant_saturation_examples() {
    let m = ideal("vars x0..x2; x0, x1, x2");
    assert!(is_unit(&saturate_irrelevant(&m).unwrap()).unwrap());
    let i = ideal("vars x0..x2; x0^2, x0*x1, x0*x2");
    assert!(ideal_equal(&saturate_irrelevant(&i).unwrap(), &ideal("vars x0..x2; x0")).unwrap());
    // x0*(x0, x1 + x2, x2) is not monomial
    let i = ideal("vars x0..x2; x0^2, x0*x1 + x0*x2, x0*x2");
    assert!(ideal_equal(&saturate_irrelevant(&i).unwrap(), &ideal("vars x0..x2; x0")).unwrap());
    let ex = ideal("vars x0..x4; x0^2-x4^2, x1^2-x4^2, x0*x3^3-x2^3*x4");
    assert!(ideal_equal(&saturate_irrelevant(&ex).unwrap(), &ex).unwrap());
    assert!(saturate_irrelevant(&ideal("vars x0..x1; x0 + 1")).is_err());
}

#[test]
fn intersection_examples() {
    let i = intersect(&ideal("vars x0..x1; x0"), &ideal("vars x0..x1; x1")).unwrap();
    assert!(ideal_equal(&i, &ideal("vars x0..x1; x0*x1")).unwrap());
    let a = ideal("vars x0..x1; x0^2 + x1^2, x0*x1");
    assert!(ideal_equal(&intersect(&a, &a).unwrap(), &a).unwrap());
    let i = intersect(&ideal("vars x0..x1; x0^2"), &ideal("vars x0..x1; x0*x1")).unwrap();
    assert!(ideal_equal(&i, &ideal("vars x0..x1; x0^2*x1")).unwrap());
    // general path on principal ideals: the lcm
    let i = intersect(
        &ideal("vars x0..x1; x0 + x1"),
        &ideal("vars x0..x1; x0 - x1"),
    )
    .unwrap();
    assert!(ideal_equal(&i, &ideal("vars x0..x1; x0^2 - x1^2")).unwrap());
}

#[test]
fn radical_examples() {
    assert!(radical_membership(&poly("x0", 2), &ideal("vars x0..x1; x0^2")).unwrap());
    assert!(!radical_membership(&poly("x1", 2), &ideal("vars x0..x1; x0^2")).unwrap());
    let ex = ideal("vars x0..x4; x0^2-x4^2, x1^2-x4^2, x0*x3^3-x2^3*x4");
    let f = poly("x0*x2^3 - x3^3*x4", 5);
    assert!(radical_membership(&f, &ex).unwrap());
    assert!(!ideal_membership(&f, &ex).unwrap());
    assert!(!radical_membership(&poly("x0 - x4", 5), &ex).unwrap());
}

#[test]
fn unit_and_constant_generators() {
    let i = ideal("vars x0..x1; x0 + 1, x0");
    assert!(groebner_basis(&i).unwrap().is_unit());
    assert!(groebner_basis(&Ideal::zero(2)).unwrap().is_zero());
}

fn homogeneous_poly(n: usize, deg: u32, coeffs: Vec<i64>) -> Polynomial {
    let mons = monomials_of_degree(n, deg);
    Polynomial::from_terms(n, mons.into_iter().zip(coeffs).map(|(m, c)| (m, int(c))))
}

fn small_homogeneous_ideal() -> impl Strategy<Value = Ideal> {
    let gen = (1u32..=3, prop::collection::vec(-2i64..=2, 10));
    prop::collection::vec(gen, 1..=3).prop_map(|gs| {
        let polys = gs
            .into_iter()
            .map(|(d, c)| homogeneous_poly(3, d, c))
            .collect();
        Ideal::from_generators(3, polys)
    })
}

fn small_ideal() -> impl Strategy<Value = Ideal> {
    let term = (prop::collection::vec(0u32..=2, 3), -3i64..=3);
    let gen = prop::collection::vec(term, 1..=3);
    prop::collection::vec(gen, 1..=3).prop_map(|gs| {
        let polys = gs
            .into_iter()
            .map(|ts| {
                Polynomial::from_terms(
                    3,
                    ts.into_iter()
                        .map(|(e, c)| (ExponentVector::new(e), int(c))),
                )
            })
            .collect();
        Ideal::from_generators(3, polys)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_self_checks(i in small_ideal()) {
        for order in [TermOrder::grevlex(), TermOrder::lex()] {
            let b = buchberger(&i, &order).unwrap();
            prop_assert!(b.self_check());
            for g in i.generators() {
                prop_assert!(b.contains(g).unwrap());
            }
            // recomputation from scratch is bit-identical
            let fresh = Ideal::from_generators(3, i.generators().to_vec());
            let b2 = buchberger(&fresh, &order).unwrap();
            prop_assert_eq!(b.elements(), b2.elements());
        }
    }

    #[test]
    fn basis_elements_lie_in_ideal(i in small_homogeneous_ideal()) {
        let b = groebner_basis(&i).unwrap();
        prop_assert!(b.self_check());
        for g in b.elements() {
            let d = g.total_degree().unwrap();
            prop_assert!(macaulay_member(g, i.generators(), d));
        }
    }

    #[test]
    fn quotient_and_intersection_consistency(i in small_homogeneous_ideal(), j in small_homogeneous_ideal()) {
        let meet = intersect(&i, &j).unwrap();
        prop_assert!(is_subset(&meet, &i).unwrap());
        prop_assert!(is_subset(&meet, &j).unwrap());
        let f = j.generators()[0].clone();
        let q = quotient(&i, &f).unwrap();
        let back = q.product(&Ideal::from_generators(3, vec![f])).unwrap();
        prop_assert!(is_subset(&back, &i).unwrap());
        prop_assert!(is_subset(&i, &q).unwrap());
    }

    #[test]
    fn irrelevant_saturation_idempotent(i in small_homogeneous_ideal()) {
        let s = saturate_irrelevant(&i).unwrap();
        let s2 = saturate_irrelevant(&s).unwrap();
        prop_assert!(ideal_equal(&s, &s2).unwrap());
        prop_assert!(is_subset(&i, &s).unwrap());
    }

    #[test]
    fn monomial_fast_paths_agree(a in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=3),
                                 b in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=3),
                                 f in prop::collection::vec(0u32..=2, 3)) {
        let mk = |v: &Vec<Vec<u32>>| Ideal::from_generators(3, v.iter().map(|e| Polynomial::monomial(ExponentVector::new(e.clone()))).collect());
        let (i, j) = (mk(&a), mk(&b));
        // perturb into a non-monomial presentation of the same ideals
        let disguise = |x: &Ideal| {
            let g = x.generators();
            let mut out = g.to_vec();
            if g.len() >= 2 { out[0] = g[0].try_add(&g[1]).unwrap(); }
            Ideal::from_generators(3, out)
        };
        let fast = intersect(&i, &j).unwrap();
        let slow = intersect(&disguise(&i), &disguise(&j)).unwrap();
        prop_assert!(ideal_equal(&fast, &slow).unwrap());
        let fm = Polynomial::monomial(ExponentVector::new(f));
        let qf = quotient(&i, &fm).unwrap();
        let qs = quotient(&disguise(&i), &fm).unwrap();
        prop_assert!(ideal_equal(&qf, &qs).unwrap());
    }
}
