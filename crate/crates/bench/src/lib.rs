//! Fixtures shared by the benchmarks.

use qspec_core::CompleteIntersection;

/// Index-one, even-dimensional instances of growing size.
pub fn index_one_even() -> Vec<CompleteIntersection> {
    [(4, vec![5]), (6, vec![3, 5]), (8, vec![2, 2, 3, 5]), (10, vec![2, 2, 2, 3, 6])]
        .into_iter()
        .map(|(n, d)| CompleteIntersection::new(n, d).expect("fixture is Fano"))
        .collect()
}

/// A mix of indices and codimensions.
pub fn mixed() -> Vec<CompleteIntersection> {
    [(3, vec![2]), (5, vec![2, 2]), (7, vec![3, 3]), (9, vec![2, 4, 4]), (10, vec![11])]
        .into_iter()
        .map(|(n, d)| CompleteIntersection::new(n, d).expect("fixture is Fano"))
        .collect()
}
