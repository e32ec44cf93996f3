use num_traits::{One, Zero};
use parallo::exact::{is_positive_definite, nullspace, solve_linear};
use parallo::{Error, RatMatrix, RatVector, Rational};
use proptest::prelude::*;

mod common;

fn m(rows: &[&[i64]]) -> RatMatrix {
    RatMatrix::from_i64(rows).unwrap()
}

fn v(entries: &[i64]) -> RatVector {
    RatVector::from_i64(entries)
}

#[test]
fn solve_identity() {
    let s = solve_linear(&RatMatrix::identity(2), &v(&[3, 4])).unwrap().unwrap();
    assert_eq!(s.particular, v(&[3, 4]));
    assert!(s.kernel.is_empty());
}

#[test]
fn solve_rank_one() {
    let s = solve_linear(&m(&[&[1, 1], &[2, 2]]), &v(&[1, 2])).unwrap().unwrap();
    assert_eq!(s.particular, v(&[1, 0]));
    assert_eq!(s.kernel, vec![v(&[1, -1])]);
}

#[test]
fn solve_overdetermined() {
    let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
    let s = solve_linear(&a, &v(&[1, 2, 3])).unwrap().unwrap();
    assert_eq!(s.particular, v(&[1, 2]));
    assert!(solve_linear(&a, &v(&[1, 2, 4])).unwrap().is_none());
}

#[test]
fn solve_rejects_mismatched_sizes() {
    assert!(matches!(
        solve_linear(&RatMatrix::identity(2), &v(&[1, 2, 3])),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn nullspace_examples() {
    // hexagon normals as columns
    assert_eq!(nullspace(&m(&[&[1, 0, -1], &[0, 1, -1]])), vec![v(&[1, 1, 1])]);
    let cols = m(&[&[1, 1, 0], &[1, 1, 0], &[1, -1, 1]]);
    assert_eq!(nullspace(&cols), vec![v(&[1, -1, -2])]);
    assert!(nullspace(&RatMatrix::identity(3)).is_empty());
}

#[test]
fn positive_definite_examples() {
    assert!(is_positive_definite(&RatMatrix::identity(3)).unwrap());
    assert!(!is_positive_definite(&m(&[&[1, 2], &[2, 1]])).unwrap());
    assert!(is_positive_definite(&m(&[&[2, 1], &[1, 2]])).unwrap());
    assert!(matches!(is_positive_definite(&m(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric)));
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |e| {
        let rows: Vec<Vec<Rational>> = e.chunks(cols).map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        RatMatrix::from_rows(&rows).unwrap()
    })
}

fn small_vector(n: usize) -> impl Strategy<Value = RatVector> {
    proptest::collection::vec((-5i64..=5, 1i64..=4), n)
        .prop_map(|e| RatVector::new(e.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect()))
}

proptest! {
    #![proptest_config(common::proptest_config(64))]

    #[test]
    fn solutions_are_exact(a in small_matrix(3, 4), x in small_vector(4)) {
        let b = a.mul_vec(&x).unwrap();
        let s = solve_linear(&a, &b).unwrap().expect("b is in the column space");
        prop_assert_eq!(a.mul_vec(&s.particular).unwrap(), b);
        for k in &s.kernel {
            prop_assert!(a.mul_vec(k).unwrap().is_zero());
        }
    }

    #[test]
    fn kernel_vectors_are_independent_and_normalized(a in small_matrix(2, 5)) {
        let ker = nullspace(&a);
        prop_assert_eq!(parallo::exact::rank_of(&ker), ker.len());
        prop_assert_eq!(ker.len() + parallo::exact::rank(&a), 5);
        for k in &ker {
            prop_assert!(a.mul_vec(k).unwrap().is_zero());
            prop_assert!(k.iter().all(|x| x.is_integer()));
            let lead = k.iter().find(|x| !x.is_zero()).unwrap();
            prop_assert!(*lead > Rational::zero());
            prop_assert_eq!(k.primitive(), k.clone());
        }
    }

    #[test]
    fn positive_definite_forms_are_positive_on_samples(
        l in small_matrix(3, 3),
        samples in proptest::collection::vec(small_vector(3), 1000),
    ) {
        // L Lᵀ + I is always positive definite
        let s = l.mul(&l.transpose()).unwrap();
        let g = RatMatrix::new(3, 3, s.entries().iter().enumerate().map(|(i, x)| {
            if i % 4 == 0 { x.clone() + Rational::one() } else { x.clone() }
        }).collect()).unwrap();
        prop_assert!(is_positive_definite(&g).unwrap());
        for x in samples.iter().filter(|x| !x.is_zero()) {
            prop_assert!(g.bilinear(x, x) > Rational::zero());
        }
        // an arbitrary symmetric form that passes must be positive on every sample
        let sym = RatMatrix::new(3, 3, vec![
            l.get(0, 0).clone(), l.get(0, 1).clone(), l.get(0, 2).clone(),
            l.get(0, 1).clone(), l.get(1, 1).clone(), l.get(1, 2).clone(),
            l.get(0, 2).clone(), l.get(1, 2).clone(), l.get(2, 2).clone(),
        ]).unwrap();
        if is_positive_definite(&sym).unwrap() {
            for x in samples.iter().filter(|x| !x.is_zero()) {
                prop_assert!(sym.bilinear(x, x) > Rational::zero());
            }
        }
    }
}
