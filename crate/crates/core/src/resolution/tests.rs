use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::algebra::monomial::ExponentVector;
use crate::algebra::rational::int;
use crate::algebra::{parse_ideal, Ideal, Polynomial};
use crate::error::Error;

fn ideal(s: &str) -> Ideal {
    parse_ideal(s).unwrap()
}

fn table(entries: &[(usize, u32, u64)]) -> BettiTable {
    BettiTable::from_counts(entries.iter().map(|&(i, j, v)| ((i, j), v)).collect())
}

fn fixture(name: &str) -> Ideal {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    let body: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    parse_ideal(&body).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn resolution_examples() {
    let r = free_resolution(&ideal("vars x0..x1; x0")).unwrap();
    assert_eq!(r.length(), 1);
    assert_eq!(r.twists(1), &[1]);

    let r = free_resolution(&ideal("vars x0..x1; x0^3, x1^3")).unwrap();
    assert_eq!(r.length(), 2);
    assert_eq!(r.twists(1), &[3, 3]);
    assert_eq!(r.twists(2), &[6]);

    let r = free_resolution(&ideal("vars x0..x2; x0^2, x1*x2^2")).unwrap();
    assert_eq!(r.length(), 2);
    let mut t1 = r.twists(1).to_vec();
    t1.sort();
    assert_eq!(t1, vec![2, 3]);
    assert_eq!(r.twists(2), &[5]);
    assert!(r.is_complex().unwrap());
    assert!(r.is_minimal());
}

#[test]
fn resolution_errors() {
    assert_eq!(
        free_resolution(&Ideal::zero(2)).unwrap_err(),
        Error::ZeroIdeal
    );
    assert_eq!(
        free_resolution(&ideal("vars x0..x1; x0^2 + x1")).unwrap_err(),
        Error::NotHomogeneous
    );
}

#[test]
fn betti_examples() {
    let b = betti_table(&ideal("vars x0..x2; x0^2, x1*x2^2")).unwrap();
    assert_eq!(b, table(&[(0, 2, 1), (0, 3, 1), (1, 5, 1)]));
    for n in 1..=4usize {
        let gens: Vec<Polynomial> = (0..=n).map(|v| Polynomial::variable(n + 1, v)).collect();
        let b = betti_table(&Ideal::new(n + 1, gens).unwrap()).unwrap();
        let expect: Vec<(usize, u32, u64)> = (0..=n)
            .map(|i| (i, i as u32 + 1, binomial(n as u64 + 1, i as u64 + 1)))
            .collect();
        assert_eq!(b, table(&expect));
    }
    // x1^3 is in the Gröbner basis but is not a minimal generator
    let b = betti_table(&ideal("vars x0..x1; x0^2, x0*x1 + x1^2")).unwrap();
    assert_eq!(b, table(&[(0, 2, 2), (1, 4, 1)]));
}

#[test]
fn complete_intersection_example() {
    let ex = ideal("vars x0..x4; x0^2-x4^2, x1^2-x4^2, x0*x3^3-x2^3*x4");
    let r = free_resolution(&ex).unwrap();
    assert!(r.is_complex().unwrap());
    assert!(r.is_minimal());
    let b = r.betti();
    assert_eq!(
        b,
        table(&[(0, 2, 2), (0, 4, 1), (1, 4, 1), (1, 6, 2), (2, 8, 1)])
    );
    assert_eq!(b.regularity(), Some(6));
    for mode in [RegularityMode::Sheaf, RegularityMode::Module] {
        let rep = regularity(&ex, mode).unwrap();
        assert_eq!(rep.reg, 6);
        assert_eq!(rep.dhat, 4);
    }
}

#[test]
fn fixture_tables_match_reference() {
    // reference tables are for S/J; shift homological index by one
    let radical = fixture("example_radical.txt");
    let b = betti_table(&radical).unwrap();
    let expect = table(&[
        (0, 2, 2),
        (0, 4, 2),
        (0, 7, 1),
        (1, 4, 1),
        (1, 5, 2),
        (1, 6, 2),
        (1, 8, 3),
        (2, 7, 2),
        (2, 9, 3),
        (3, 10, 1),
    ]);
    assert_eq!(b, expect);
    assert_eq!(regularity(&radical, RegularityMode::Sheaf).unwrap().reg, 7);

    let closure = fixture("example_closure.txt");
    let b = betti_table(&closure).unwrap();
    let expect = table(&[
        (0, 2, 2),
        (0, 4, 1),
        (0, 5, 1),
        (1, 4, 1),
        (1, 6, 5),
        (2, 7, 3),
    ]);
    assert_eq!(b, expect);
    assert_eq!(regularity(&closure, RegularityMode::Sheaf).unwrap().reg, 5);
}

#[test]
fn regularity_examples() {
    let r = regularity(&ideal("vars x0..x1; x0"), RegularityMode::Sheaf).unwrap();
    assert_eq!((r.reg, r.dhat), (1, 1));
    let r = regularity(&ideal("vars x0..x2; x0*x1*x2"), RegularityMode::Sheaf).unwrap();
    assert_eq!(r.reg, 3);

    // the irrelevant ideal saturates to the unit ideal
    let m = ideal("vars x0..x2; x0, x1, x2");
    let r = regularity(&m, RegularityMode::Sheaf).unwrap();
    assert_eq!((r.reg, r.dhat), (0, 0));
    assert!(r.is_unit());
    let r = regularity(&m, RegularityMode::Module).unwrap();
    assert_eq!((r.reg, r.dhat), (1, 0));
    assert!(!r.saturated);

    // x0*(x0, x1, x2) has the same sheaf as (x0)
    let i = ideal("vars x0..x2; x0^2, x0*x1, x0*x2");
    assert_eq!(regularity(&i, RegularityMode::Sheaf).unwrap().reg, 1);
    assert_eq!(regularity(&i, RegularityMode::Module).unwrap().reg, 2);
    assert_eq!(
        regularity(&Ideal::zero(2), RegularityMode::Sheaf).unwrap_err(),
        Error::ZeroIdeal
    );
}

#[test]
fn hilbert_examples() {
    let h = hilbert_series(&ideal("vars x0..x1; x0")).unwrap();
    assert_eq!(h.numerator, vec![1, -1]);
    assert_eq!(h.to_string(), "(1 - t)/(1 - t)^2");
    assert!((0..6).all(|d| h.value(d) == 1));

    let h = hilbert_series(&ideal("vars x0..x2; x0^2, x1*x2^2")).unwrap();
    assert_eq!(h.numerator, vec![1, 0, -1, -1, 0, 1]);
    assert_eq!(h.to_string(), "(1 - t^2 - t^3 + t^5)/(1 - t)^3");

    let h = hilbert_series(&Ideal::unit(3)).unwrap();
    assert!(h.numerator.is_empty());
    assert_eq!(h.to_string(), "0");
    assert_eq!(hilbert_series(&Ideal::zero(2)).unwrap().numerator, vec![1]);
}

#[test]
fn koszul_examples() {
    let b = betti_via_koszul(&ideal("vars x0..x2; x0^2"), 5).unwrap();
    assert_eq!(b, table(&[(0, 2, 1)]));
    let b = betti_via_koszul(&ideal("vars x0..x2; x0^2, x1*x2^2"), 8).unwrap();
    assert_eq!(b, table(&[(0, 2, 1), (0, 3, 1), (1, 5, 1)]));
    let b = betti_via_koszul(&ideal("vars x0..x1; x0, x1"), 4).unwrap();
    assert_eq!(b, table(&[(0, 1, 2), (1, 2, 1)]));
    assert_eq!(
        betti_via_koszul(&ideal("vars x0..x2; x0^2"), 4).unwrap_err(),
        Error::CutoffTooSmall {
            cutoff: 4,
            minimum: 5
        }
    );
    // graded path on a non-monomial ideal
    let i = ideal("vars x0..x1; x0^2, x0*x1 + x1^2");
    assert_eq!(betti_via_koszul(&i, 6).unwrap(), betti_table(&i).unwrap());
}

#[test]
fn koszul_matches_on_complete_intersection() {
    let ex = ideal("vars x0..x4; x0^2-x4^2, x1^2-x4^2, x0*x3^3-x2^3*x4");
    let b = betti_via_koszul(&ex, 9).unwrap();
    assert_eq!(b, betti_table(&ex).unwrap().truncated(9));
}

#[test]
fn betti_display() {
    let b = betti_table(&ideal("vars x0..x2; x0^2, x1*x2^2")).unwrap();
    let expect = "       0 1\ntotal: 2 1\n    2: 1 .\n    3: 1 .\n    4: . 1\n";
    assert_eq!(b.to_string(), expect);
}

#[test]
fn betti_records_round_trip() {
    let b = betti_table(&ideal("vars x0..x2; x0^2, x1*x2^2")).unwrap();
    let json = serde_json::to_string(&b).unwrap();
    let back: BettiTable = serde_json::from_str(&json).unwrap();
    assert_eq!(b, back);
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=4).prop_filter_map(
        "zero ideal",
        move |gens| {
            let polys: Vec<Polynomial> = gens
                .into_iter()
                .filter(|e| e.iter().any(|&x| x > 0))
                .map(|e| Polynomial::monomial(ExponentVector::new(e)))
                .collect();
            (!polys.is_empty()).then(|| Ideal::new(n, polys).unwrap())
        },
    )
}

fn homogeneous_ideal() -> impl Strategy<Value = Ideal> {
    let gen = (1u32..=2, prop::collection::vec(-2i64..=2, 6));
    prop::collection::vec(gen, 1..=3).prop_filter_map("zero ideal", |gs| {
        let polys: Vec<Polynomial> = gs
            .into_iter()
            .map(|(d, c)| {
                let mons = crate::algebra::monomial::monomials_of_degree(3, d);
                Polynomial::from_terms(3, mons.into_iter().zip(c).map(|(m, c)| (m, int(c))))
            })
            .filter(|p| !p.is_zero())
            .collect();
        (!polys.is_empty()).then(|| Ideal::new(3, polys).unwrap())
    })
}

fn check_resolution(i: &Ideal) -> Result<(), TestCaseError> {
    let r = free_resolution(i).unwrap();
    prop_assert!(r.is_complex().unwrap());
    prop_assert!(r.is_minimal());
    prop_assert!(r.length() <= i.nvars());
    let b = r.betti();
    let h = hilbert_series(i).unwrap();
    prop_assert_eq!(&h.numerator, &b.hilbert_numerator());
    let cutoff =
        (b.regularity().unwrap().max(0) as u32 + i.nvars() as u32).max(minimum_koszul_cutoff(i));
    prop_assert_eq!(betti_via_koszul(i, cutoff).unwrap(), b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn monomial_resolutions_agree_with_oracles(i in (1usize..=4).prop_flat_map(monomial_ideal)) {
        check_resolution(&i)?;
    }

    #[test]
    fn homogeneous_resolutions_agree_with_oracles(i in homogeneous_ideal()) {
        check_resolution(&i)?;
    }

    #[test]
    fn sheaf_regularity_ignores_irrelevant_components(i in monomial_ideal(3), k in 1u32..=2) {
        let m = Ideal::new(3, (0..3).map(|v| Polynomial::variable(3, v)).collect()).unwrap();
        let j = i.product(&crate::groebner::power(&m, k).unwrap()).unwrap();
        let a = regularity(&i, RegularityMode::Sheaf).unwrap();
        let b = regularity(&j, RegularityMode::Sheaf).unwrap();
        prop_assert_eq!(a.reg, b.reg);
        prop_assert_eq!(a.dhat, b.dhat);
    }

    #[test]
    fn complete_intersection_regularity(degs in prop::collection::vec(1u32..=3, 1..=3), seed in 0u64..1000) {
        // x_i^{d_i} - (monomial of degree d_i in later variables): a lex
        // Gröbner basis with pairwise coprime leads
        let n = degs.len() + 1;
        let gens: Vec<Polynomial> = degs.iter().enumerate().map(|(i, &d)| {
            let mut tail = vec![0u32; n];
            let later = n - i - 1;
            let mut s = seed as usize + i;
            for _ in 0..d {
                tail[i + 1 + s % later] += 1;
                s /= 2;
            }
            let head = ExponentVector::variable(n, i).pow(d);
            Polynomial::from_terms(n, [(head, int(1)), (ExponentVector::new(tail), int(-1))])
        }).collect();
        let i = Ideal::new(n, gens).unwrap();
        let expect = degs.iter().map(|&d| d as i64 - 1).sum::<i64>() + 1;
        prop_assert_eq!(betti_table(&i).unwrap().regularity(), Some(expect));
    }
}

#[test]
fn unit_ideal_conventions() {
    let u = Ideal::unit(2);
    let r = free_resolution(&u).unwrap();
    assert_eq!(r.betti(), table(&[(0, 0, 1)]));
    assert_eq!(r.betti().hilbert_numerator(), Vec::<i64>::new());
    assert_eq!(betti_via_koszul(&u, 2).unwrap(), table(&[(0, 0, 1)]));
    let _ = BTreeMap::<u8, u8>::new();
}
