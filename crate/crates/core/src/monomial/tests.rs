use num_traits::{One, Zero};
use proptest::prelude::*;

use super::newton::NewtonPolyhedron;
use super::*;
use crate::algebra::rational::{int, ratio};
use crate::algebra::{parse_ideal, Rational};
use crate::resolution::{regularity, RegularityMode};

fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

fn maximal(n: usize) -> MonomialIdeal {
    MonomialIdeal::new(n, (0..n).map(|v| ExponentVector::variable(n, v)).collect()).unwrap()
}

fn product_of_variables(n: usize) -> MonomialIdeal {
    mono(n, &[&vec![1; n]])
}

fn sheaf_reg(i: &MonomialIdeal) -> i64 {
    regularity(&i.to_ideal(), RegularityMode::Sheaf)
        .unwrap()
        .reg
}

#[test]
fn membership_examples() {
    let p = NewtonPolyhedron::new(&mono(2, &[&[2, 0], &[0, 2]]));
    let r = newton_membership(&[int(1), int(1)], &p, false).unwrap();
    assert!(r.member);
    assert_eq!(r.slack, int(0));
    assert!(
        !newton_membership(&[int(1), int(1)], &p, true)
            .unwrap()
            .member
    );
    assert!(
        newton_membership(&[int(2), int(0)], &p, false)
            .unwrap()
            .member
    );
    assert!(
        !newton_membership(&[int(0), int(0)], &p, false)
            .unwrap()
            .member
    );
    assert!(newton_membership(&[int(1)], &p, false).is_err());
    assert!(newton_membership(&[int(-1), int(3)], &p, false).is_err());
}

#[test]
fn lct_examples() {
    let cases: Vec<(MonomialIdeal, Rational)> = vec![
        (mono(1, &[&[1]]), int(1)),
        (mono(2, &[&[1, 0]]), int(1)),
        (mono(3, &[&[2, 0, 0], &[0, 1, 2]]), int(1)),
        (mono(3, &[&[2, 0, 0]]), ratio(1, 2)),
    ];
    for (i, expect) in cases {
        let r = lct_monomial(&i).unwrap();
        assert!(r.verify());
        assert_eq!(r.lct, expect, "{i}");
    }
    for n in 1..=5 {
        let r = lct_monomial(&maximal(n)).unwrap();
        assert!(r.verify());
        assert_eq!(r.lct, int(n as i64));
    }
    assert_eq!(
        lct_monomial(&MonomialIdeal::unit(2)).unwrap_err(),
        Error::UnitIdeal
    );
}

#[test]
fn multiplier_examples() {
    for n in 2..=5 {
        let i = product_of_variables(n);
        let j = multiplier_ideal_monomial(&i, &int(1)).unwrap();
        assert_eq!(j, i);
        assert_eq!(sheaf_reg(&j), n as i64);
    }
    let i = mono(3, &[&[2, 0, 0], &[0, 1, 2]]);
    let j = multiplier_ideal_monomial(&i, &int(1)).unwrap();
    assert_eq!(j, mono(3, &[&[1, 0, 0], &[0, 0, 1]]));
    assert_eq!(sheaf_reg(&j), 1);
    assert_eq!(codim_monomial(&i).unwrap(), 2);
    assert!(multiplier_ideal_monomial(&i, &ratio(99, 100))
        .unwrap()
        .is_unit());
    assert!(multiplier_ideal_monomial(&i, &int(0)).is_err());
}

#[test]
fn closure_examples() {
    assert_eq!(
        integral_closure_monomial(&mono(2, &[&[2, 0], &[0, 2]])).unwrap(),
        mono(2, &[&[2, 0], &[1, 1], &[0, 2]])
    );
    let p = mono(2, &[&[1, 1]]);
    assert_eq!(integral_closure_monomial(&p).unwrap(), p);
    assert_eq!(
        integral_closure_monomial(&mono(2, &[&[3, 0], &[0, 3]])).unwrap(),
        mono(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
    );
}

#[test]
fn radical_codim_and_minimal_generators() {
    assert_eq!(monomial_radical(&mono(1, &[&[2]])), mono(1, &[&[1]]));
    let i = mono(3, &[&[2, 0, 0], &[0, 1, 2]]);
    let r = monomial_radical(&i);
    assert_eq!(r, mono(3, &[&[1, 0, 0], &[0, 1, 1]]));
    assert_eq!(monomial_radical(&r), r);
    for n in 1..=4 {
        assert_eq!(codim_monomial(&product_of_variables(n)).unwrap(), 1);
        assert_eq!(codim_monomial(&maximal(n)).unwrap(), n);
    }
    assert_eq!(
        minimal_generators(vec![ev(&[2, 0]), ev(&[3, 0])]),
        vec![ev(&[2, 0])]
    );
    let anti = vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])];
    assert_eq!(minimal_generators(anti.clone()), anti);
    assert_eq!(
        minimal_generators(vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2]), ev(&[2, 2])]),
        anti
    );
}

#[test]
fn conversion_from_ideals() {
    let i = parse_ideal("vars x0..x1; x0 + x1, x0 - x1").unwrap();
    assert_eq!(MonomialIdeal::from_ideal(&i).unwrap(), maximal(2));
    let i = parse_ideal("vars x0..x1; x0^2 + x1^2").unwrap();
    assert_eq!(
        MonomialIdeal::from_ideal(&i).unwrap_err(),
        Error::NotMonomial
    );
    assert_eq!(MonomialIdeal::new(2, vec![]).unwrap_err(), Error::ZeroIdeal);
}

/// Slack `max_{t ∈ [0,1]} min_i (p_i - (t a_i + (1-t) b_i))` over every
/// pair of generators, evaluated at the breakpoints of the concave
/// piecewise-linear objective. Valid in at most two variables.
fn brute_slack(p: &[Rational], gens: &[ExponentVector]) -> Rational {
    let mut best: Option<Rational> = None;
    for a in gens {
        for b in gens {
            let lines: Vec<(Rational, Rational)> = (0..p.len())
                .map(|i| {
                    let ai = int(a.get(i) as i64);
                    let bi = int(b.get(i) as i64);
                    (&p[i] - &bi, bi - ai) // value at t is c0 + t*c1
                })
                .collect();
            let mut ts = vec![Rational::zero(), Rational::one()];
            for (x, l1) in lines.iter().enumerate() {
                for l2 in &lines[x + 1..] {
                    if l1.1 != l2.1 {
                        let t = (&l2.0 - &l1.0) / (&l1.1 - &l2.1);
                        if t > Rational::zero() && t < Rational::one() {
                            ts.push(t);
                        }
                    }
                }
            }
            for t in ts {
                let v = lines.iter().map(|(c0, c1)| c0 + &t * c1).min().unwrap();
                if best.as_ref().is_none_or(|b| v > *b) {
                    best = Some(v);
                }
            }
        }
    }
    best.unwrap()
}

fn brute_minimal(
    gens: &[ExponentVector],
    c: &Rational,
    strict: bool,
    offset: u32,
    bound: u32,
) -> Vec<ExponentVector> {
    let mut pts = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound {
            let p = [int((x + offset) as i64) / c, int((y + offset) as i64) / c];
            let s = brute_slack(&p, gens);
            let ok = if strict {
                s > Rational::zero()
            } else {
                s >= Rational::zero()
            };
            if ok {
                pts.push(ev(&[x, y]));
            }
        }
    }
    minimal_generators(pts)
}

fn monomial_ideal(n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=max_exp, n), 1..=4).prop_filter_map(
        "unit ideal",
        move |g| {
            let i = MonomialIdeal::from_exponents(n, &g).unwrap();
            (!i.is_unit()).then_some(i)
        },
    )
}

fn weight() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_variable_membership_matches_brute_force(i in monomial_ideal(2, 4), x in 0u32..=9, y in 0u32..=9,
                                                   c in weight()) {
        let poly = NewtonPolyhedron::new(&i);
        let p = [int(x as i64), int(y as i64)];
        let m = newton_membership(&p, &poly, false).unwrap();
        prop_assert_eq!(&m.slack, &brute_slack(&p, i.generators()));
        // multiplier ideals and closures agree with grid enumeration
        let j = multiplier_ideal_monomial(&i, &c).unwrap();
        let big = i.max_exponents().iter().max().copied().unwrap();
        let bound = crate::algebra::rational::ceil_to_i64(&(&c * int(big as i64))) as u32 + 2;
        prop_assert_eq!(j.generators().to_vec(), brute_minimal(i.generators(), &c, true, 1, bound));
        let cl = integral_closure_monomial(&i).unwrap();
        prop_assert_eq!(cl.generators().to_vec(), brute_minimal(i.generators(), &Rational::one(), false, 0, big + 2));
    }

    #[test]
    fn search_boxes_are_wide_enough(i in (1usize..=3).prop_flat_map(|n| monomial_ideal(n, 4)), c in weight()) {
        let poly = NewtonPolyhedron::new(&i);
        let m = i.max_exponents();
        let j = multiplier_ideal_monomial(&i, &c).unwrap();
        let wide: Vec<u32> = m.iter().map(|&mi| crate::algebra::rational::ceil_to_i64(&(&c * int(mi as i64))) as u32 + 2).collect();
        prop_assert_eq!(poly.minimal_points(&c, true, 1, &wide).unwrap(), j.generators().to_vec());
        let cl = integral_closure_monomial(&i).unwrap();
        let wide: Vec<u32> = m.iter().map(|&mi| mi + 2).collect();
        prop_assert_eq!(poly.minimal_points(&Rational::one(), false, 0, &wide).unwrap(), cl.generators().to_vec());
    }

    #[test]
    fn multiplier_ideals_shrink_as_weight_grows(i in (1usize..=3).prop_flat_map(|n| monomial_ideal(n, 4)),
                                                 c in weight(), d in weight()) {
        let (lo, hi) = if c <= d { (c, d) } else { (d, c) };
        let a = multiplier_ideal_monomial(&i, &lo).unwrap();
        let b = multiplier_ideal_monomial(&i, &hi).unwrap();
        prop_assert!(b.is_subset(&a));
    }

    #[test]
    fn threshold_is_where_multiplier_ideal_becomes_proper(i in (1usize..=4).prop_flat_map(|n| monomial_ideal(n, 4))) {
        let lct = lct_monomial(&i).unwrap();
        prop_assert!(lct.verify());
        prop_assert!(!multiplier_ideal_monomial(&i, &lct.lct).unwrap().is_unit());
        let below = &lct.lct * ratio(99, 100);
        prop_assert!(multiplier_ideal_monomial(&i, &below).unwrap().is_unit());
    }

    #[test]
    fn closure_properties(i in (1usize..=3).prop_flat_map(|n| monomial_ideal(n, 4)), c in weight()) {
        let cl = integral_closure_monomial(&i).unwrap();
        prop_assert!(i.is_subset(&cl));
        prop_assert_eq!(&integral_closure_monomial(&cl).unwrap(), &cl);
        let j = multiplier_ideal_monomial(&i, &Rational::one()).unwrap();
        prop_assert!(cl.is_subset(&j));
        prop_assert_eq!(multiplier_ideal_monomial(&cl, &c).unwrap(), multiplier_ideal_monomial(&i, &c).unwrap());
    }

    #[test]
    fn lct_of_powers(i in (1usize..=3).prop_flat_map(|n| monomial_ideal(n, 3)), k in 1u32..=4) {
        let base = lct_monomial(&i).unwrap().lct;
        let pow = lct_monomial(&i.power(k).unwrap()).unwrap();
        prop_assert!(pow.verify());
        prop_assert_eq!(pow.lct, base / int(k as i64));
    }

    #[test]
    fn radical_is_idempotent_and_contains(i in (1usize..=4).prop_flat_map(|n| monomial_ideal(n, 4))) {
        let r = monomial_radical(&i);
        prop_assert!(i.is_subset(&r));
        prop_assert_eq!(monomial_radical(&r), r);
    }
}
