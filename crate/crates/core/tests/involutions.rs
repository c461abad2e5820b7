//! Exhaustive checks of the involutions on every tableau up to a fixed size.

use qdeg_core::involutions::{deg_concat, deg_sst, deg_syt, queer_concat, queer_sst};
use qdeg_core::shapes::{partitions_of, strict_partitions_of, strict_partitions_with_empty};
use qdeg_core::tableaux::{generate_concat, generate_sst, generate_syt};
use qdeg_core::{DescentSet, SignedShiftedTableau};

const MAX: usize = 7;

/// Letters whose cell or mark differs between `a` and `b`.
fn moved(a: &SignedShiftedTableau, b: &SignedShiftedTableau) -> Vec<u32> {
    a.letters().into_iter().filter(|&x| a.cell_of(x) != b.cell_of(x)).collect()
}

fn flips(a: &DescentSet, b: &DescentSet) -> Vec<usize> {
    (1..a.degree()).filter(|&j| a.contains(j) != b.contains(j)).collect()
}

#[test]
fn shifted_d_i_is_a_local_involution() {
    for n in 3..=MAX {
        for shape in strict_partitions_of(n).unwrap() {
            for s in generate_sst(&shape) {
                for i in 2..n {
                    let t = deg_sst(&s, i).unwrap();
                    assert_eq!(deg_sst(&t, i).unwrap(), s, "d_{i} twice on {s}");
                    assert_eq!(t.shape(), shape);
                    let m = moved(&s, &t);
                    assert!(m.iter().all(|&x| (i as u32 - 1..=i as u32 + 1).contains(&x)), "d_{i} on {s} moves {m:?}");
                    if t != s {
                        let f = flips(&s.descents().unwrap(), &t.descents().unwrap());
                        assert!(f.iter().any(|&j| j == i - 1 || j == i), "d_{i} on {s} flips {f:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn queer_involution_moves_only_the_mark_on_two() {
    for n in 2..=MAX {
        for shape in strict_partitions_of(n).unwrap() {
            for s in generate_sst(&shape) {
                let t = queer_sst(&s).unwrap();
                assert_ne!(t, s);
                assert_eq!(queer_sst(&t).unwrap(), s);
                assert_eq!(moved(&s, &t), vec![2]);
                let f = flips(&s.descents().unwrap(), &t.descents().unwrap());
                assert!(f.first() == Some(&1) && f.iter().all(|&j| j <= 2), "{s} flips {f:?}");
            }
        }
    }
}

#[test]
fn d_i_commutes_with_restriction() {
    for n in 3..=MAX {
        for shape in strict_partitions_of(n).unwrap() {
            for s in generate_sst(&shape) {
                for k in 3..n as u32 {
                    let r = s.restrict_to(k);
                    for i in 2..k as usize {
                        assert_eq!(deg_sst(&s, i).unwrap().restrict_to(k), deg_sst(&r, i).unwrap(), "{s} k={k} i={i}");
                    }
                }
            }
        }
    }
}

#[test]
fn young_d_i_is_an_involution() {
    for n in 3..=MAX {
        for shape in partitions_of(n) {
            for t in generate_syt(&shape) {
                for i in 2..n {
                    let u = deg_syt(&t, i).unwrap();
                    assert_eq!(deg_syt(&u, i).unwrap(), t);
                    assert_eq!(u.shape(), shape);
                }
            }
        }
    }
}

#[test]
fn concatenated_involutions() {
    for n in 2..=6 {
        for left in strict_partitions_with_empty(n) {
            for right in strict_partitions_with_empty(n - left.size()) {
                if left.size() + right.size() != n {
                    continue;
                }
                for t in generate_concat(&left, &right) {
                    let q = queer_concat(&t).unwrap();
                    assert_ne!(q, t);
                    assert_eq!(queer_concat(&q).unwrap(), t);
                    for i in 2..n {
                        let u = deg_concat(&t, i).unwrap();
                        assert_eq!(deg_concat(&u, i).unwrap(), t);
                        assert_eq!(u.shapes(), (left.clone(), right.clone()));
                    }
                }
            }
        }
    }
}
