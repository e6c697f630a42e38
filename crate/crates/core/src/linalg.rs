//! Small exact linear-algebra helpers over `i64` and big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Rank of an integer matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for j in c..cols {
                    let t = &f * &a[rank][j];
                    a[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Primitive generator of the kernel of a full-rank `(n-1) × n` integer
/// matrix, computed from signed maximal minors. Returns `None` when the rows
/// are dependent.
pub fn primitive_normal(rows: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(rows.len() + 1, n);
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let d = det_i64(&minor);
        normal.push(if skip % 2 == 0 { d } else { -d });
    }
    let g = normal.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return None;
    }
    Some(normal.into_iter().map(|x| x / g).collect())
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &piv;
            inv[col][j] /= &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Converts an exact rational to `i64` when it is an integer in range.
pub fn to_i64(x: &BigRational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    let n: BigInt = x.to_integer();
    i64::try_from(n).ok()
}

/// Lcm of denominators of a rational vector.
pub fn common_denominator(xs: &[BigRational]) -> BigInt {
    xs.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det_i64(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_i64(&[vec![1, 2], vec![2, 4]]), 0);
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det_i64(&a3), 4);
    }

    #[test]
    fn normals() {
        let n = primitive_normal(&[vec![1, 0, 0], vec![0, 1, 0]], 3).unwrap();
        assert_eq!(n, vec![0, 0, 1]);
        let n = primitive_normal(&[vec![2, 1]], 2).unwrap();
        assert_eq!(n.iter().zip([2, 1]).map(|(a, b)| a * b).sum::<i64>(), 0);
        assert!(primitive_normal(&[vec![1, 1, 0], vec![2, 2, 0]], 3).is_none());
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        let m: Vec<Vec<BigRational>> = vec![
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(1.into())],
            vec![BigRational::from_integer(1.into()), BigRational::from_integer(1.into())],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(to_i64(&inv[0][0]), Some(1));
        assert_eq!(to_i64(&inv[0][1]), Some(-1));
        assert_eq!(to_i64(&inv[1][1]), Some(2));
    }
}
