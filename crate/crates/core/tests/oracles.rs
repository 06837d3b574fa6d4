//! Cross-checks against naively coded reference computations that share no
//! code with the library's series and matrix routines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use qspec_core::exactmath::{characteristic_polynomial, IntPoly};
use qspec_core::gw::{mirror_coefficients, AmbientInvariants};
use qspec_core::spectrum::{companion_matrix, predicted_characteristic_polynomial};
use qspec_core::variety::{chern_coefficients, euler_characteristic, fano_index};
use qspec_core::{enumerate_fano_cis, CompleteIntersection};

fn ci(dim: u32, degrees: &[u32]) -> CompleteIntersection {
    CompleteIntersection::new(dim, degrees.to_vec()).unwrap()
}

fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    num / den
}

/// Polynomial product truncated at degree `order`, on plain vectors.
fn naive_mul<T>(a: &[T], b: &[T], order: usize) -> Vec<T>
where
    T: Clone + Zero + for<'x> std::ops::Mul<&'x T, Output = T>,
{
    let mut out = vec![T::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= order {
                out[i + j] = out[i + j].clone() + x.clone() * y;
            }
        }
    }
    out
}

/// `Σ_k (-d)^k x^k`, i.e. `1/(1+dx)` written out term by term.
fn geometric(d: i64, order: usize) -> Vec<BigInt> {
    (0..=order).map(|k| num_traits::pow(BigInt::from(-d), k)).collect()
}

fn naive_euler(dim: u32, degrees: &[u32]) -> BigInt {
    let order = dim as usize;
    let r = degrees.len() as i64;
    let total = i64::from(dim) + r + 1;
    let mut series: Vec<BigInt> = (0..=order as i64).map(|k| choose(total, k)).collect();
    for &d in degrees {
        series = naive_mul(&series, &geometric(i64::from(d), order), order);
    }
    let prod: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    prod * &series[order]
}

#[test]
fn known_fourfold_euler_characteristics() {
    assert_eq!(naive_euler(4, &[3]), BigInt::from(27));
    assert_eq!(naive_euler(4, &[5]), BigInt::from(825));
    assert_eq!(euler_characteristic(&ci(4, &[3])).unwrap(), BigInt::from(27));
    assert_eq!(euler_characteristic(&ci(4, &[5])).unwrap(), BigInt::from(825));
}

#[test]
fn euler_matches_naive_expansion_everywhere() {
    for x in enumerate_fano_cis(10, 10) {
        assert_eq!(
            euler_characteristic(&x).unwrap(),
            naive_euler(x.dim(), x.degrees()),
            "{x}"
        );
    }
}

#[test]
fn chern_coefficients_are_integers_up_to_twelve() {
    for x in enumerate_fano_cis(12, 12) {
        for c in chern_coefficients(&x).unwrap() {
            assert!(c.denom().is_one(), "{x}: {c}");
        }
    }
}

fn naive_mirror(dim: u32, degrees: &[u32]) -> Vec<BigRational> {
    let order = dim as usize;
    let r = degrees.len() as i64;
    let n = i64::from(dim) + r + 1;
    // (1+x)^{-n} = Σ (-1)^k C(n+k-1, k) x^k
    let inverse_power: Vec<BigRational> = (0..=order as i64)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            BigRational::from_integer(choose(n + k - 1, k) * sign)
        })
        .collect();
    let mut numerator = vec![BigRational::one()];
    for &d in degrees {
        for m in 1..=d {
            let factor = vec![
                BigRational::one(),
                BigRational::new(BigInt::from(d), BigInt::from(m)),
            ];
            numerator = naive_mul(&numerator, &factor, order);
        }
    }
    numerator.resize(order + 1, BigRational::zero());
    let mut out = naive_mul(&numerator, &inverse_power, order);
    out[0] -= BigRational::one();
    let scale: BigInt = degrees
        .iter()
        .map(|&d| BigInt::from(d) * (1..=d).map(BigInt::from).product::<BigInt>())
        .product();
    out.into_iter()
        .map(|c| c * BigRational::from_integer(scale.clone()))
        .collect()
}

#[test]
fn mirror_coefficients_match_independent_expansion() {
    for x in enumerate_fano_cis(9, 9) {
        let ours = mirror_coefficients(&x).unwrap();
        assert_eq!(ours.values(), naive_mirror(x.dim(), x.degrees()).as_slice(), "{x}");
    }
    assert_eq!(
        naive_mirror(4, &[5])[1],
        BigRational::from_integer(BigInt::from(3250))
    );
}

#[test]
fn enumeration_matches_brute_force_count() {
    // nested loops over every degree tuple, deduplicated by sorting
    let mut brute = std::collections::BTreeSet::new();
    for dim in 3u32..=6 {
        for r in 1u32..=6 {
            let max_degree = dim + r;
            let mut tuple = vec![2u32; r as usize];
            loop {
                let sum: u32 = tuple.iter().sum();
                if (dim + r + 1) as i64 - sum as i64 >= 1 {
                    let mut sorted = tuple.clone();
                    sorted.sort_unstable();
                    brute.insert((dim, r, sorted));
                }
                // odometer increment
                let mut pos = 0;
                loop {
                    if pos == tuple.len() {
                        break;
                    }
                    tuple[pos] += 1;
                    if tuple[pos] <= max_degree {
                        break;
                    }
                    tuple[pos] = 2;
                    pos += 1;
                }
                if pos == tuple.len() {
                    break;
                }
            }
        }
    }
    let ours: Vec<_> = enumerate_fano_cis(6, 6)
        .map(|c| (c.dim(), c.codim(), c.degrees().to_vec()))
        .collect();
    assert_eq!(ours.len(), brute.len());
    assert_eq!(ours, brute.into_iter().collect::<Vec<_>>());
}

#[test]
fn enumeration_includes_exactly_the_expected_threefolds() {
    let got: Vec<_> = enumerate_fano_cis(3, 1).map(|c| c.degrees().to_vec()).collect();
    assert_eq!(got, vec![vec![2], vec![3], vec![4]]);
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// `det(μI - M)` by Laplace expansion along the first row, with polynomial
/// entries.
fn cofactor_charpoly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let entries: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![-m[i][j].clone(), BigInt::one()]
                    } else {
                        vec![-m[i][j].clone()]
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries)
}

fn laplace(e: &[Vec<Vec<BigInt>>]) -> Vec<BigInt> {
    let n = e.len();
    if n == 1 {
        return e[0][0].clone();
    }
    let mut total = vec![BigInt::zero()];
    for col in 0..n {
        if e[0][col].iter().all(Zero::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Vec<BigInt>>> = e[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = poly_mul(&e[0][col], &laplace(&minor));
        if col % 2 == 1 {
            term.iter_mut().for_each(|c| *c = -c.clone());
        }
        total = poly_add(&total, &term);
    }
    total
}

#[test]
fn companion_char_poly_matches_cofactor_expansion() {
    for x in enumerate_fano_cis(6, 6) {
        let m = companion_matrix(&x);
        let cofactor = IntPoly::new(cofactor_charpoly(&m));
        assert_eq!(characteristic_polynomial(&m), cofactor, "{x}");
        assert_eq!(cofactor, predicted_characteristic_polynomial(&x), "{x}");
    }
}

#[test]
fn cubic_fourfold_char_poly_by_cofactors() {
    // μ^2 (μ^3 - 3^3 * 27)
    let m = companion_matrix(&ci(4, &[3]));
    let expected: Vec<BigInt> = [0, 0, -729, 0, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(cofactor_charpoly(&m), expected);
    assert_eq!(fano_index(&ci(4, &[3])), 3);
}

#[test]
fn two_point_by_applying_divisor_recursion_twice() {
    // <τ0(H^2) τ0(H^{N-2})> -> <τ0(H) τ0(H^{N-1})> + <τ0(H) τ1(H^{N-2})>
    //                       -> (I_0 + I_1) + (I_1 + I_2)
    let inv = AmbientInvariants::new(&ci(4, &[5])).unwrap();
    let i = inv.mirror().values();
    let recursed = (&i[0] + &i[1]) + (&i[1] + &i[2]);
    assert_eq!(inv.two_point_pure(2, 0).unwrap(), recursed);
}
