//! Classical root systems with exact integer lattices.
//!
//! Roots are stored in simple-root coordinates, weights in fundamental-weight
//! coordinates and coweights in fundamental-coweight coordinates. The Cartan
//! matrix follows the convention `cartan[i][j] = <α_i^∨, α_j>`, so the
//! fundamental-weight coordinates of a root `β = Σ c_j α_j` are
//! `Σ_j cartan[i][j] c_j` and the pairing of a coweight with a root is a dot
//! product.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rank accepted for a simple factor.
pub const MAX_RANK: usize = 8;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            other => Err(Error::Invalid(format!(
                "unknown series '{other}' (expected one of A, B, C, D)"
            ))),
        }
    }
}

/// A simple factor of a (possibly reducible) root datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub series: Series,
    pub rank: usize,
    /// Index of the first simple root of this factor inside the product.
    pub offset: usize,
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(pub Vec<i64>);

/// An integral coweight in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Coweight(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut v = vec![0; rank];
        v[k] = 1;
        Coweight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Divides out the gcd of the coordinates.
    pub fn primitive(&self) -> Coweight {
        let g = self.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if g == 0 {
            return self.clone();
        }
        Coweight(self.0.iter().map(|c| c / g).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A classical root system, possibly a product of simple factors.
#[derive(Debug, Clone)]
pub struct RootDatum {
    factors: Vec<Factor>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
    coroots: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootDatum {}

fn check_series_rank(series: Series, rank: usize) -> Result<()> {
    let min = match series {
        Series::A => 1,
        Series::B | Series::C => 2,
        Series::D => 3,
    };
    if rank < min {
        return Err(Error::UnsupportedType {
            series: series.letter(),
            rank,
            reason: format!("rank must be at least {min}"),
        });
    }
    if rank > MAX_RANK {
        return Err(Error::UnsupportedType {
            series: series.letter(),
            rank,
            reason: format!("rank cap is {MAX_RANK}"),
        });
    }
    Ok(())
}

fn simple_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        Series::B | Series::C => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            // B: α_n short, so <α_n^∨, α_{n-1}> = -2. C is the transpose.
            let (p, q) = if series == Series::B { (-1, -2) } else { (-2, -1) };
            a[n - 2][n - 1] = p;
            a[n - 1][n - 2] = q;
        }
        Series::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
    }
    a
}

/// Order of the Weyl group of a simple factor.
pub fn weyl_order_of(series: Series, n: usize) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    match series {
        Series::A => fact(n + 1),
        Series::B | Series::C => (1u128 << n) * fact(n),
        Series::D => (1u128 << (n - 1)) * fact(n),
    }
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

impl RootDatum {
    /// Builds the root datum of a simple classical type.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        check_series_rank(series, rank)?;
        Ok(Self::from_factors(vec![Factor {
            series,
            rank,
            offset: 0,
        }]))
    }

    /// Product root datum; the Cartan matrix is block diagonal.
    pub fn product(a: &RootDatum, b: &RootDatum) -> RootDatum {
        let mut factors = a.factors.clone();
        for f in &b.factors {
            factors.push(Factor {
                offset: f.offset + a.rank,
                ..*f
            });
        }
        Self::from_factors(factors)
    }

    /// Product of several simple types, e.g. `[(A, 2), (A, 2)]`.
    pub fn product_of(types: &[(Series, usize)]) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for &(series, rank) in types {
            check_series_rank(series, rank)?;
            factors.push(Factor {
                series,
                rank,
                offset,
            });
            offset += rank;
        }
        if factors.is_empty() {
            return Err(Error::Invalid("empty list of factors".into()));
        }
        Ok(Self::from_factors(factors))
    }

    fn from_factors(factors: Vec<Factor>) -> Self {
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for f in &factors {
            let block = simple_cartan(f.series, f.rank);
            for i in 0..f.rank {
                for j in 0..f.rank {
                    cartan[f.offset + i][f.offset + j] = block[i][j];
                }
            }
        }
        let symmetrizer = symmetrize(&cartan);
        let positive_roots = close_roots(&cartan);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();
        let coroots = positive_roots
            .iter()
            .map(|r| coroot_coords(&cartan, &symmetrizer, &r.0))
            .collect();
        let inverse_cartan = invert_rational(&cartan);
        RootDatum {
            factors,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            root_index,
            coroots,
            inverse_cartan,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Series of a simple datum; `None` for products.
    pub fn series(&self) -> Option<Series> {
        if self.is_simple() {
            Some(self.factors[0].series)
        } else {
            None
        }
    }

    /// Human-readable type such as `A2` or `A2xA2`.
    pub fn label(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("{}{}", f.series, f.rank))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, k: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[k] = 1;
        Root(v)
    }

    /// Index of a positive root, if `coords` is one.
    pub fn positive_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Whether `coords` is a root (of either sign).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.root_index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.root_index.contains_key(&neg)
    }

    /// Simple-coroot coordinates of the coroot of the `i`-th positive root.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| weyl_order_of(f.series, f.rank))
            .product()
    }

    /// Which factor a simple root index belongs to.
    pub fn factor_of(&self, k: usize) -> usize {
        self.factors
            .iter()
            .position(|f| k >= f.offset && k < f.offset + f.rank)
            .expect("index within rank")
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: len,
            });
        }
        Ok(())
    }

    /// `<α_k^∨, β>` for a root in simple-root coordinates.
    pub fn coroot_pairing(&self, k: usize, root: &[i64]) -> i64 {
        self.cartan[k]
            .iter()
            .zip(root)
            .map(|(a, c)| a * c)
            .sum()
    }

    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| self.coroot_pairing(i, &root.0))
                .collect(),
        )
    }

    /// Expresses a weight in simple-root coordinates (rational in general).
    pub fn weight_to_root_coords(&self, weight: &Weight) -> Vec<Rational> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.inverse_cartan[i][j] * weight.0[j])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Pairing of a coweight with a root; always an integer.
    pub fn pair_root(&self, lambda: &Coweight, root: &Root) -> Result<i64> {
        self.check_rank(lambda.0.len())?;
        self.check_rank(root.0.len())?;
        Ok(lambda.0.iter().zip(&root.0).map(|(a, b)| a * b).sum())
    }

    /// Pairing of a coweight with a weight: `λ^T A^{-1} μ`.
    pub fn pair(&self, lambda: &Coweight, weight: &Weight) -> Result<Rational> {
        self.check_rank(lambda.0.len())?;
        self.check_rank(weight.0.len())?;
        let coords = self.weight_to_root_coords(weight);
        Ok(lambda
            .0
            .iter()
            .zip(coords)
            .map(|(&l, c)| c * l)
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// `Σ β` over positive roots not listed in `exclude` (indices into
    /// [`positive_roots`](Self::positive_roots)).
    pub fn sum_positive_roots(&self, exclude: &[usize]) -> Weight {
        let mut sum = vec![0i64; self.rank];
        for (i, r) in self.positive_roots.iter().enumerate() {
            if exclude.contains(&i) {
                continue;
            }
            for (s, c) in sum.iter_mut().zip(&r.0) {
                *s += c;
            }
        }
        self.root_to_weight(&Root(sum))
    }

    /// Simple reflection on a root in simple-root coordinates.
    pub fn reflect_root(&self, k: usize, root: &[i64]) -> Vec<i64> {
        let p = self.coroot_pairing(k, root);
        let mut out = root.to_vec();
        out[k] -= p;
        out
    }

    /// Simple reflection on a weight in fundamental-weight coordinates.
    pub fn reflect_weight(&self, k: usize, weight: &[i64]) -> Vec<i64> {
        let mk = weight[k];
        (0..self.rank)
            .map(|i| weight[i] - mk * self.cartan[i][k])
            .collect()
    }

    /// Simple reflection on a coweight in fundamental-coweight coordinates.
    pub fn reflect_coweight(&self, k: usize, coweight: &[i64]) -> Vec<i64> {
        let lk = coweight[k];
        (0..self.rank)
            .map(|j| coweight[j] - lk * self.cartan[k][j])
            .collect()
    }

    /// The unique dominant coweight in the Weyl orbit of `lambda`.
    pub fn dominant_coweight(&self, lambda: &Coweight) -> Coweight {
        let mut v = lambda.0.clone();
        while let Some(k) = v.iter().position(|&c| c < 0) {
            v = self.reflect_coweight(k, &v);
        }
        Coweight(v)
    }

    /// The unique dominant weight in the Weyl orbit of `mu`.
    pub fn dominant_weight(&self, mu: &Weight) -> Weight {
        let mut v = mu.0.clone();
        while let Some(k) = v.iter().position(|&c| c < 0) {
            v = self.reflect_weight(k, &v);
        }
        Weight(v)
    }

    /// `det(A) · A^{-1}`, an integer matrix.
    pub fn adjugate_cartan(&self) -> (i64, Vec<Vec<i64>>) {
        let det = self.cartan_determinant();
        let adj = self
            .inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let y = *x * det;
                        debug_assert!(y.is_integer());
                        y.to_integer()
                    })
                    .collect()
            })
            .collect();
        (det, adj)
    }

    pub fn cartan_determinant(&self) -> i64 {
        crate::linalg::det_i64(&self.cartan)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "series": self.label(),
            "rank": self.rank,
            "cartan": self.cartan,
            "positive_roots": self.positive_roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        })
    }
}

fn symmetrize(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].expect("set");
                    d[j] = Some(di * cartan[i][j] / cartan[j][i]);
                    component.push(j);
                    queue.push_back(j);
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &j| acc.lcm(d[j].expect("set").denom()));
        for &j in &component {
            d[j] = Some(d[j].expect("set") * lcm);
        }
    }
    d.into_iter()
        .map(|x| x.expect("set").to_integer())
        .collect()
}

fn coroot_coords(cartan: &[Vec<i64>], sym: &[i64], root: &[i64]) -> Vec<i64> {
    let n = root.len();
    // (β, β) = Σ c_i c_j d_i A_ij ; β^∨ = Σ (c_j d_j / d_β) α_j^∨ with d_β = (β,β)/2.
    let mut norm2 = 0i64;
    for i in 0..n {
        for j in 0..n {
            norm2 += root[i] * root[j] * sym[i] * cartan[i][j];
        }
    }
    let d_beta = norm2 / 2;
    (0..n)
        .map(|j| {
            let num = root[j] * sym[j];
            debug_assert_eq!(num % d_beta, 0);
            num / d_beta
        })
        .collect()
}

fn close_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for k in 0..n {
        let mut v = vec![0; n];
        v[k] = 1;
        seen.insert(v.clone(), ());
        queue.push_back(v);
    }
    while let Some(r) = queue.pop_front() {
        for k in 0..n {
            let p: i64 = cartan[k].iter().zip(&r).map(|(a, c)| a * c).sum();
            let mut s = r.clone();
            s[k] -= p;
            if !seen.contains_key(&s) {
                seen.insert(s.clone(), ());
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Root> = seen
        .into_keys()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(Root)
        .collect();
    pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_a() {
        let d = RootDatum::new(Series::A, 1).unwrap();
        assert_eq!(d.cartan(), &[vec![2]]);
        assert_eq!(d.positive_roots().len(), 1);
    }

    #[test]
    fn a2_roots() {
        let d = RootDatum::new(Series::A, 2).unwrap();
        let roots: Vec<_> = d.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=8 {
            let a = RootDatum::new(Series::A, n).unwrap();
            assert_eq!(a.positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(RootDatum::new(Series::B, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(RootDatum::new(Series::C, n).unwrap().positive_roots().len(), n * n);
        }
        for n in 3..=8 {
            assert_eq!(
                RootDatum::new(Series::D, n).unwrap().positive_roots().len(),
                n * (n - 1)
            );
        }
        assert_eq!(RootDatum::new(Series::B, 4).unwrap().positive_roots().len(), 16);
    }

    #[test]
    fn unsupported_combinations() {
        assert!(RootDatum::new(Series::B, 1).is_err());
        assert!(RootDatum::new(Series::D, 2).is_err());
        assert!(RootDatum::new(Series::A, 9).is_err());
        assert!(RootDatum::new(Series::A, 0).is_err());
    }

    #[test]
    fn pairings_a2() {
        let d = RootDatum::new(Series::A, 2).unwrap();
        let w1 = Coweight::fundamental(2, 0);
        let w2 = Coweight::fundamental(2, 1);
        assert_eq!(d.pair_root(&w1, &Root(vec![1, 0])).unwrap(), 1);
        assert_eq!(d.pair_root(&w1, &Root(vec![1, 1])).unwrap(), 1);
        let two_rho = d.sum_positive_roots(&[]);
        assert_eq!(two_rho, Weight(vec![2, 2]));
        assert_eq!(d.pair(&w2, &two_rho).unwrap(), Rational::from_integer(2));
        assert!(d.pair(&Coweight(vec![1]), &two_rho).is_err());
    }

    #[test]
    fn sum_with_exclusions() {
        let a1 = RootDatum::new(Series::A, 1).unwrap();
        assert_eq!(a1.sum_positive_roots(&[0]), Weight(vec![0]));
        let a2 = RootDatum::new(Series::A, 2).unwrap();
        // α2 + (α1+α2) = α1 + 2α2 -> weight coords (2·1 - 2, -1 + 4) = (0, 3)
        assert_eq!(a2.sum_positive_roots(&[0]), a2.root_to_weight(&Root(vec![1, 2])));
        assert_eq!(a2.sum_positive_roots(&[0]), Weight(vec![0, 3]));
    }

    #[test]
    fn reflections_permute_roots() {
        for (s, n) in [(Series::A, 4), (Series::B, 3), (Series::C, 4), (Series::D, 5)] {
            let d = RootDatum::new(s, n).unwrap();
            for k in 0..n {
                let mut images: Vec<Vec<i64>> = d
                    .positive_roots()
                    .iter()
                    .filter(|r| r.0 != d.simple_root(k).0)
                    .map(|r| d.reflect_root(k, &r.0))
                    .collect();
                images.sort();
                let mut expected: Vec<Vec<i64>> = d
                    .positive_roots()
                    .iter()
                    .filter(|r| r.0 != d.simple_root(k).0)
                    .map(|r| r.0.clone())
                    .collect();
                expected.sort();
                assert_eq!(images, expected);
                assert_eq!(d.reflect_root(k, &d.simple_root(k).0), d.simple_root(k).neg().0);
            }
        }
    }

    #[test]
    fn root_weight_round_trip() {
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::C, 3), (Series::D, 4)] {
            let d = RootDatum::new(s, n).unwrap();
            for r in d.positive_roots() {
                let w = d.root_to_weight(r);
                let back = d.weight_to_root_coords(&w);
                let back: Vec<i64> = back.iter().map(|x| x.to_integer()).collect();
                assert_eq!(back, r.0);
                for k in 0..n {
                    let fk = Coweight::fundamental(n, k);
                    assert_eq!(d.pair(&fk, &w).unwrap(), Rational::from_integer(r.0[k]));
                }
            }
        }
    }

    #[test]
    fn product_datum() {
        let a2 = RootDatum::new(Series::A, 2).unwrap();
        let p = RootDatum::product(&a2, &a2);
        assert_eq!(p.rank(), 4);
        assert_eq!(p.positive_roots().len(), 6);
        assert_eq!(p.weyl_order(), 36);
        assert_eq!(p.label(), "A2xA2");
        assert_eq!(p.factor_of(3), 1);
    }

    #[test]
    fn coroots_of_b2() {
        let d = RootDatum::new(Series::B, 2).unwrap();
        // α1 long, α2 short. Coroot of α2 (short) is 2α2^∨/... in coroot coords (0,1);
        // coroot of α1 + 2α2 (long) is α1^∨ + α2^∨.
        let i = d.positive_root_index(&[1, 2]).unwrap();
        assert_eq!(d.coroot(i), &[1, 1]);
        let j = d.positive_root_index(&[1, 1]).unwrap();
        assert_eq!(d.coroot(j), &[2, 1]);
    }
}
