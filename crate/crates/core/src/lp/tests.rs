use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::algebra::rational::{int, ratio};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn solve_verified(lp: &LinearProgram) -> LpResult {
    let r = simplex_solve(lp).unwrap();
    assert!(r.verify(lp), "certificate failed for {lp:?}: {r:?}");
    r
}

#[test]
fn two_segment_minimax() {
    // variables (λ, t)
    let mut lp = LinearProgram::minimize(ints(&[1, 0]));
    lp.constrain(ints(&[1, -2]), Relation::Ge, int(0))
        .constrain(ints(&[1, 1]), Relation::Ge, int(1))
        .constrain(ints(&[1, 2]), Relation::Ge, int(2))
        .constrain(ints(&[0, 1]), Relation::Le, int(1));
    let r = solve_verified(&lp);
    assert_eq!(r.status, LpStatus::Optimal);
    assert_eq!(r.optimum, Some(int(1)));
    assert_eq!(r.primal, vec![int(1), ratio(1, 2)]);
}

#[test]
fn simplex_lct_program() {
    // min λ with Σ t_j e_j <= λ·1, Σ t_j = 1; variables (t_0..t_n, λ)
    for n in 0..=4usize {
        let k = n + 1;
        let mut obj = vec![int(0); k + 1];
        obj[k] = int(1);
        let mut lp = LinearProgram::minimize(obj);
        for i in 0..k {
            let mut row = vec![int(0); k + 1];
            row[i] = int(1);
            row[k] = int(-1);
            lp.constrain(row, Relation::Le, int(0));
        }
        let mut sum = vec![int(1); k + 1];
        sum[k] = int(0);
        lp.constrain(sum, Relation::Eq, int(1));
        let r = solve_verified(&lp);
        assert_eq!(r.optimum, Some(ratio(1, k as i64)));
    }
}

#[test]
fn infeasible_with_certificate() {
    let mut lp = LinearProgram::minimize(ints(&[1]));
    lp.constrain(ints(&[1]), Relation::Ge, int(1))
        .constrain(ints(&[1]), Relation::Le, int(0));
    let r = solve_verified(&lp);
    assert_eq!(r.status, LpStatus::Infeasible);
    assert!(r.optimum.is_none());
}

#[test]
fn unbounded_with_ray() {
    let mut lp = LinearProgram::minimize(ints(&[-1, 0]));
    lp.constrain(ints(&[1, -1]), Relation::Le, int(2));
    let r = solve_verified(&lp);
    assert_eq!(r.status, LpStatus::Unbounded);

    // a free variable with no constraints
    let mut lp = LinearProgram::minimize(ints(&[1]));
    lp.set_free(0);
    assert_eq!(solve_verified(&lp).status, LpStatus::Unbounded);
}

#[test]
fn free_variables_and_equalities() {
    // min x subject to x = -3 (x free)
    let mut lp = LinearProgram::minimize(ints(&[1]));
    lp.set_free(0).constrain(ints(&[1]), Relation::Eq, int(-3));
    let r = solve_verified(&lp);
    assert_eq!(r.optimum, Some(int(-3)));
    // duplicated equality row leaves an artificial at level zero
    let mut lp = LinearProgram::minimize(ints(&[1, 1]));
    lp.constrain(ints(&[1, 1]), Relation::Eq, int(2))
        .constrain(ints(&[2, 2]), Relation::Eq, int(4))
        .constrain(ints(&[1, 0]), Relation::Ge, int(1));
    assert_eq!(solve_verified(&lp).optimum, Some(int(2)));
}

#[test]
fn dimension_mismatch() {
    let mut lp = LinearProgram::minimize(ints(&[1, 1]));
    lp.constrain(ints(&[1]), Relation::Le, int(0));
    assert!(matches!(simplex_solve(&lp), Err(Error::LpDimension(_))));
}

/// Solves a square system exactly; `None` when singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                let pivot = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Optimum over vertices of a pointed polyhedron: every choice of `n`
/// tight inequalities among constraints and sign bounds.
fn brute_force(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.nvars();
    let mut planes: Vec<(Vec<Rational>, Rational)> = lp
        .constraints()
        .iter()
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    for j in 0..n {
        let mut e = vec![int(0); n];
        e[j] = int(1);
        planes.push((e, int(0)));
    }
    let mut best: Option<Rational> = None;
    let total = planes.len();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let a: Vec<Vec<Rational>> = idx.iter().map(|&k| planes[k].0.clone()).collect();
        let b: Vec<Rational> = idx.iter().map(|&k| planes[k].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if lp.primal_feasible(&x) {
                let v = dot(lp.objective(), &x);
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        // next combination
        let mut k = n;
        loop {
            if k == 0 {
                return best;
            }
            k -= 1;
            if idx[k] < total - n + k {
                idx[k] += 1;
                for l in k + 1..n {
                    idx[l] = idx[l - 1] + 1;
                }
                break;
            }
        }
    }
}

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![Just(Relation::Le), Just(Relation::Eq), Just(Relation::Ge)]
}

fn random_lp(boxed: bool) -> impl Strategy<Value = LinearProgram> {
    (1usize..=3).prop_flat_map(move |n| {
        let row = (prop::collection::vec(-3i64..=3, n), relation(), -4i64..=4);
        (
            prop::collection::vec(-3i64..=3, n),
            prop::collection::vec(row, 0..=(if boxed { 6 - n } else { 6 })),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(obj, rows, free)| {
                let mut lp = LinearProgram::minimize(ints(&obj));
                for (a, rel, b) in rows {
                    lp.constrain(ints(&a), rel, int(b));
                }
                if boxed {
                    for j in 0..n {
                        let mut e = vec![0; n];
                        e[j] = 1;
                        lp.constrain(ints(&e), Relation::Le, int(5));
                    }
                } else {
                    for (j, f) in free.into_iter().enumerate() {
                        if f {
                            lp.set_free(j);
                        }
                    }
                }
                lp
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_vertex_enumeration(lp in random_lp(true)) {
        let r = simplex_solve(&lp).unwrap();
        prop_assert!(r.verify(&lp));
        match brute_force(&lp) {
            Some(v) => {
                prop_assert_eq!(r.status, LpStatus::Optimal);
                prop_assert_eq!(r.optimum, Some(v));
            }
            None => prop_assert_eq!(r.status, LpStatus::Infeasible),
        }
    }

    #[test]
    fn certificates_always_verify(lp in random_lp(false)) {
        let r = simplex_solve(&lp).unwrap();
        prop_assert!(r.verify(&lp));
        // deterministic
        prop_assert_eq!(simplex_solve(&lp).unwrap(), r);
    }

    #[test]
    fn row_scaling_preserves_optimum(lp in random_lp(true), scales in prop::collection::vec(1i64..=5, 12)) {
        let mut scaled = LinearProgram::minimize(lp.objective().to_vec());
        for (c, s) in lp.constraints().iter().zip(scales.iter().cycle()) {
            let f = ratio(*s, 2);
            scaled.constrain(c.coeffs.iter().map(|a| a * &f).collect(), c.relation, &c.rhs * &f);
        }
        let a = simplex_solve(&lp).unwrap();
        let b = simplex_solve(&scaled).unwrap();
        prop_assert!(b.verify(&scaled));
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.optimum, b.optimum);
    }
}
