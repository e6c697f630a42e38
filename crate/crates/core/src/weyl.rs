//! Weyl group elements, minimal coset representatives and the duality
//! `w ↦ w₀ w w_P`.
//!
//! An element is stored as its integer action matrix on simple-root
//! coordinates (column `j` is `w(α_j)`). Equality and hashing use the matrix
//! only, so two reduced words for the same element compare equal.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, RootDatum, Series, Weight};

/// Largest group (or coset space) the library will enumerate.
pub const WEYL_ORDER_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().any(|&c| c > 0)
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            matrix,
            length: 0,
        }
    }

    /// Builds an element from an action matrix, validating that it permutes
    /// the roots and computing its length.
    pub fn from_matrix(datum: &RootDatum, matrix: Vec<i64>) -> Result<Self> {
        let rank = datum.rank();
        if matrix.len() != rank * rank {
            return Err(Error::RankMismatch {
                expected: rank * rank,
                got: matrix.len(),
            });
        }
        let mut w = WeylElement {
            rank,
            matrix,
            length: 0,
        };
        let mut length = 0;
        for r in datum.positive_roots() {
            let img = w.apply(&r.0);
            if !datum.is_root(&img) {
                return Err(Error::Invalid(
                    "matrix does not permute the root system".into(),
                ));
            }
            if !is_positive(&img) {
                length += 1;
            }
        }
        w.length = length;
        Ok(w)
    }

    pub fn simple(datum: &RootDatum, k: usize) -> Result<Self> {
        let rank = datum.rank();
        if k >= rank {
            return Err(Error::IndexOutOfRange { index: k, rank });
        }
        let mut w = Self::identity(rank);
        for j in 0..rank {
            w.matrix[k * rank + j] -= datum.cartan()[k][j];
        }
        w.length = 1;
        Ok(w)
    }

    /// `s_{i_1} ⋯ s_{i_l}` for a word of 0-based simple indices.
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(datum.rank());
        for &k in word {
            if k >= datum.rank() {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    rank: datum.rank(),
                });
            }
            w = w.right_multiply_simple(datum, k);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of a root (simple-root coordinates).
    pub fn apply(&self, root: &[i64]) -> Vec<i64> {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| self.matrix[i * r + j] * root[j]).sum())
            .collect()
    }

    /// Whether `w(β)` is a positive root.
    pub fn sends_positive(&self, root: &[i64]) -> bool {
        is_positive(&self.apply(root))
    }

    /// `w(α_k)`, the k-th column.
    pub fn image_of_simple(&self, k: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|i| self.matrix[i * self.rank + k])
            .collect()
    }

    /// `w s_k`; only column `k` changes.
    pub fn right_multiply_simple(&self, datum: &RootDatum, k: usize) -> Self {
        let r = self.rank;
        let ascent = is_positive(&self.image_of_simple(k));
        let mut m = self.matrix.clone();
        for l in 0..r {
            let a = datum.cartan()[k][l];
            if a != 0 {
                for i in 0..r {
                    m[i * r + l] -= a * self.matrix[i * r + k];
                }
            }
        }
        WeylElement {
            rank: r,
            matrix: m,
            length: if ascent {
                self.length + 1
            } else {
                self.length - 1
            },
        }
    }

    /// `s_k w` with the length left to the caller; only row `k` changes.
    fn left_multiply_simple_raw(&self, datum: &RootDatum, k: usize) -> Vec<i64> {
        let r = self.rank;
        let mut m = self.matrix.clone();
        for l in 0..r {
            let mut acc = 0;
            for j in 0..r {
                acc += datum.cartan()[k][j] * self.matrix[j * r + l];
            }
            m[k * r + l] -= acc;
        }
        m
    }

    /// Action matrix of `self · other`, without computing the length.
    pub fn product_matrix(&self, other: &WeylElement) -> Vec<i64> {
        let r = self.rank;
        let mut m = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.matrix[i * r + k];
                if a != 0 {
                    for j in 0..r {
                        m[i * r + j] += a * other.matrix[k * r + j];
                    }
                }
            }
        }
        m
    }

    /// Reflection `s_β` in the `i`-th positive root.
    pub fn reflection(datum: &RootDatum, i: usize) -> Self {
        let r = datum.rank();
        let beta = &datum.positive_roots()[i].0;
        let cor = datum.coroot(i);
        let mut m = vec![0; r * r];
        for j in 0..r {
            let pairing: i64 = (0..r).map(|a| cor[a] * datum.cartan()[a][j]).sum();
            m[j * r + j] += 1;
            for a in 0..r {
                m[a * r + j] -= pairing * beta[a];
            }
        }
        Self::from_matrix(datum, m).expect("root reflection")
    }

    /// Group product `self · other`.
    pub fn compose(&self, datum: &RootDatum, other: &WeylElement) -> Self {
        Self::from_matrix(datum, self.product_matrix(other)).expect("product of Weyl elements")
    }

    /// A reduced word (0-based indices), computed from right descents.
    pub fn reduced_word(&self, datum: &RootDatum) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut w = self.clone();
        while w.length > 0 {
            let k = (0..self.rank)
                .find(|&k| !is_positive(&w.image_of_simple(k)))
                .expect("nontrivial element has a right descent");
            word.push(k);
            w = w.right_multiply_simple(datum, k);
        }
        word.reverse();
        word
    }

    pub fn inverse(&self, datum: &RootDatum) -> Self {
        let mut word = self.reduced_word(datum);
        word.reverse();
        Self::from_word(datum, &word).expect("valid word")
    }

    /// Action on a weight in fundamental-weight coordinates.
    pub fn act_weight(&self, datum: &RootDatum, mu: &Weight) -> Result<Weight> {
        datum.check_rank(mu.0.len())?;
        let mut v = mu.0.clone();
        for &k in self.reduced_word(datum).iter().rev() {
            v = datum.reflect_weight(k, &v);
        }
        Ok(Weight(v))
    }

    /// Action on a coweight in fundamental-coweight coordinates.
    pub fn act_coweight(&self, datum: &RootDatum, lambda: &Coweight) -> Result<Coweight> {
        datum.check_rank(lambda.0.len())?;
        let mut v = lambda.0.clone();
        for &k in self.reduced_word(datum).iter().rev() {
            v = datum.reflect_coweight(k, &v);
        }
        Ok(Coweight(v))
    }

    /// Reduced word rendered as `s1s2…` (1-based), or `e`.
    pub fn word_string(&self, datum: &RootDatum) -> String {
        let word = self.reduced_word(datum);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|k| format!("s{}", k + 1)).collect()
    }

    /// One-line notation (1-based) for a simple type A datum.
    pub fn one_line_type_a(&self, datum: &RootDatum) -> Result<Vec<usize>> {
        if datum.series() != Some(Series::A) {
            return Err(Error::Unsupported(
                "one-line notation needs a simple type A datum".into(),
            ));
        }
        let n = datum.rank() + 1;
        let word = self.reduced_word(datum);
        Ok((1..=n)
            .map(|i| {
                let mut j = i;
                for &k in word.iter().rev() {
                    if j == k + 1 {
                        j = k + 2;
                    } else if j == k + 2 {
                        j = k + 1;
                    }
                }
                j
            })
            .collect())
    }

    /// Type A element from one-line notation `w(1) … w(n+1)` (1-based).
    pub fn from_one_line_type_a(datum: &RootDatum, perm: &[usize]) -> Result<Self> {
        if datum.series() != Some(Series::A) {
            return Err(Error::Unsupported(
                "one-line notation needs a simple type A datum".into(),
            ));
        }
        let n = datum.rank() + 1;
        check_permutation(perm, n)?;
        let mut m = vec![0i64; datum.rank() * datum.rank()];
        for k in 0..datum.rank() {
            let mut eps = vec![0i64; n];
            eps[perm[k] - 1] += 1;
            eps[perm[k + 1] - 1] -= 1;
            let col = eps_to_simple(&eps, datum.rank());
            for (i, c) in col.into_iter().enumerate() {
                m[i * datum.rank() + k] = c;
            }
        }
        Self::from_matrix(datum, m)
    }

    /// Type B_n element from a permutation of `1..=2n+1` satisfying
    /// `a_i + a_{2n+2-i} = 2n+2`; position `i ≤ n` carries `ε_i`, position
    /// `2n+2-i` carries `-ε_i` and the middle position is fixed.
    pub fn from_one_line_type_b(datum: &RootDatum, perm: &[usize]) -> Result<Self> {
        if datum.series() != Some(Series::B) {
            return Err(Error::Unsupported(
                "symmetric one-line notation needs a simple type B datum".into(),
            ));
        }
        let n = datum.rank();
        let big = 2 * n + 1;
        check_permutation(perm, big)?;
        for i in 1..=big {
            if perm[i - 1] + perm[big - i] != big + 1 {
                return Err(Error::Invalid(format!(
                    "permutation {:?} violates a_i + a_{{{}-i}} = {} at i = {i}",
                    perm,
                    big + 1,
                    big + 1
                )));
            }
        }
        // signed image of ε_i for i = 1..n
        let image = |i: usize| -> (usize, i64) {
            let a = perm[i - 1];
            if a <= n {
                (a, 1)
            } else {
                (big + 1 - a, -1)
            }
        };
        let mut m = vec![0i64; n * n];
        for k in 0..n {
            let mut eps = vec![0i64; n];
            let (a, s) = image(k + 1);
            eps[a - 1] += s;
            if k + 1 < n {
                let (b, t) = image(k + 2);
                eps[b - 1] -= t;
            }
            let col = eps_to_simple(&eps, n);
            for (i, c) in col.into_iter().enumerate() {
                m[i * n + k] = c;
            }
        }
        Self::from_matrix(datum, m)
    }

    /// Restriction of a block-diagonal element to one simple factor.
    pub fn restrict(&self, factor: &RootDatum, offset: usize) -> Self {
        let fr = factor.rank();
        let mut m = vec![0; fr * fr];
        for i in 0..fr {
            for j in 0..fr {
                m[i * fr + j] = self.matrix[(offset + i) * self.rank + offset + j];
            }
        }
        Self::from_matrix(factor, m).expect("block of a product element")
    }

    /// Block-diagonal assembly of factor elements.
    pub fn block_diagonal(datum: &RootDatum, parts: &[&WeylElement]) -> Self {
        let r = datum.rank();
        let mut m = vec![0; r * r];
        let mut offset = 0;
        let mut length = 0;
        for p in parts {
            for i in 0..p.rank {
                for j in 0..p.rank {
                    m[(offset + i) * r + offset + j] = p.matrix[i * p.rank + j];
                }
            }
            offset += p.rank;
            length += p.length;
        }
        assert_eq!(offset, r, "factor ranks must add up");
        WeylElement {
            rank: r,
            matrix: m,
            length,
        }
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Invalid(format!(
            "expected a permutation of 1..={n}, got {} entries",
            perm.len()
        )));
    }
    let set: HashSet<usize> = perm.iter().copied().collect();
    if set.len() != n || perm.iter().any(|&a| a == 0 || a > n) {
        return Err(Error::Invalid(format!(
            "{perm:?} is not a permutation of 1..={n}"
        )));
    }
    Ok(())
}

/// ε-coordinates to simple-root coordinates for types A and B:
/// `c_k = Σ_{i ≤ k} v_i`.
fn eps_to_simple(eps: &[i64], rank: usize) -> Vec<i64> {
    let mut acc = 0;
    (0..rank)
        .map(|k| {
            acc += eps[k];
            acc
        })
        .collect()
}

/// Parses an element: `e`, a word such as `s1s2s1` (1-based), or one-line
/// notation `(468579123)` / `(4,6,8,5,7,9,1,2,3)` for simple types A and B.
pub fn parse_element(datum: &RootDatum, text: &str) -> Result<WeylElement> {
    let t = text.trim();
    if t.is_empty() || t == "e" || t == "id" {
        return Ok(WeylElement::identity(datum.rank()));
    }
    if t.starts_with('(') || t.starts_with('[') {
        let inner = t.trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']');
        let perm: Vec<usize> = if inner.contains(',') {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Invalid(format!("bad one-line permutation '{text}'")))?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Invalid(format!("bad one-line permutation '{text}'")))?
        };
        return match datum.series() {
            Some(Series::A) => WeylElement::from_one_line_type_a(datum, &perm),
            Some(Series::B) => WeylElement::from_one_line_type_b(datum, &perm),
            _ => Err(Error::Unsupported(format!(
                "one-line notation '{text}' is only available for simple types A and B"
            ))),
        };
    }
    let mut word = Vec::new();
    for tok in t.split(|c: char| c == 's' || c.is_whitespace() || c == '_') {
        if tok.is_empty() {
            continue;
        }
        let k: usize = tok.parse().map_err(|_| {
            Error::Invalid(format!(
                "cannot parse '{tok}' in element '{text}' (expected e.g. s1s2s1 or (213))"
            ))
        })?;
        if k == 0 || k > datum.rank() {
            return Err(Error::IndexOutOfRange {
                index: k,
                rank: datum.rank(),
            });
        }
        word.push(k - 1);
    }
    WeylElement::from_word(datum, &word)
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[len {}; {:?}]", self.length, self.matrix)
    }
}

/// Level-by-level generation of `{w : w(α) > 0 for α ∈ levi}` by left
/// multiplication. The set is closed under removing left descents, so each
/// new element has length one more than its parent.
fn generate_minimal(datum: &RootDatum, levi: &[usize]) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(datum.rank());
    let mut seen: HashSet<Vec<i64>> = HashSet::from([id.matrix.clone()]);
    let mut all = vec![id];
    let mut start = 0;
    while start < all.len() {
        let end = all.len();
        for idx in start..end {
            for k in 0..datum.rank() {
                let m = all[idx].left_multiply_simple_raw(datum, k);
                if seen.contains(&m) {
                    continue;
                }
                let r = datum.rank();
                let ok = levi
                    .iter()
                    .all(|&a| (0..r).any(|i| m[i * r + a] > 0));
                if !ok {
                    continue;
                }
                seen.insert(m.clone());
                let length = all[idx].length + 1;
                all.push(WeylElement {
                    rank: r,
                    matrix: m,
                    length,
                });
                if all.len() > WEYL_ORDER_CAP {
                    return Err(Error::WeylOrderCap {
                        order: all.len() as u128,
                        cap: WEYL_ORDER_CAP,
                    });
                }
            }
        }
        start = end;
    }
    Ok(all)
}

/// All elements of `W`, identity first, sorted by length.
pub fn enumerate_weyl(datum: &RootDatum) -> Result<Vec<WeylElement>> {
    let order = datum.weyl_order();
    if order > WEYL_ORDER_CAP as u128 {
        return Err(Error::WeylOrderCap {
            order,
            cap: WEYL_ORDER_CAP,
        });
    }
    generate_minimal(datum, &[])
}

/// Longest element of the parabolic subgroup generated by `gens`.
pub fn longest_element(datum: &RootDatum, gens: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(datum.rank());
    while let Some(&k) = gens
        .iter()
        .find(|&&k| is_positive(&w.image_of_simple(k)))
    {
        w = w.right_multiply_simple(datum, k);
    }
    w
}

/// A parabolic subgroup `P(λ̇)` together with its Schubert indexing set `W^P`.
#[derive(Debug)]
pub struct ParabolicDatum {
    datum: Arc<RootDatum>,
    lambda: Coweight,
    delta_p: Vec<usize>,
    levi_roots: Vec<usize>,
    nonlevi_roots: Vec<usize>,
    minimal_reps: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    duals: Vec<usize>,
    w0: WeylElement,
    w_p: WeylElement,
}

impl ParabolicDatum {
    /// Parabolic of a dominant integral coweight: `Δ(P) = {k : <λ̇, α_k> = 0}`.
    pub fn new(datum: Arc<RootDatum>, lambda: Coweight) -> Result<Self> {
        datum.check_rank(lambda.0.len())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let delta_p: Vec<usize> = (0..datum.rank()).filter(|&k| lambda.0[k] == 0).collect();
        let (levi_roots, nonlevi_roots): (Vec<usize>, Vec<usize>) = (0..datum
            .positive_roots()
            .len())
            .partition(|&i| {
                datum.positive_roots()[i]
                    .0
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || delta_p.contains(&k))
            });
        let minimal_reps = generate_minimal(&datum, &delta_p)?;
        let index: HashMap<WeylElement, usize> = minimal_reps
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let w0 = longest_element(&datum, &(0..datum.rank()).collect::<Vec<_>>());
        let w_p = longest_element(&datum, &delta_p);
        let mut p = ParabolicDatum {
            datum,
            lambda,
            delta_p,
            levi_roots,
            nonlevi_roots,
            minimal_reps,
            index,
            duals: Vec::new(),
            w0,
            w_p,
        };
        p.duals = (0..p.minimal_reps.len())
            .map(|i| {
                let d = p
                    .w0
                    .compose(&p.datum, &p.minimal_reps[i])
                    .compose(&p.datum, &p.w_p);
                p.index[&d]
            })
            .collect();
        Ok(p)
    }

    /// Parabolic with prescribed `Δ \ Δ(P)` (0-based indices); `λ̇` is the
    /// sum of the corresponding fundamental coweights.
    pub fn from_complement(datum: Arc<RootDatum>, non_levi: &[usize]) -> Result<Self> {
        let mut lambda = vec![0; datum.rank()];
        for &k in non_levi {
            if k >= datum.rank() {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    rank: datum.rank(),
                });
            }
            lambda[k] = 1;
        }
        Self::new(datum, Coweight(lambda))
    }

    /// The Borel subgroup (`λ̇ = ρ^∨`).
    pub fn borel(datum: Arc<RootDatum>) -> Result<Self> {
        let r = datum.rank();
        Self::new(datum, Coweight(vec![1; r]))
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    pub fn delta_p(&self) -> &[usize] {
        &self.delta_p
    }

    /// Indices (into the positive roots) of `R_P^+`.
    pub fn levi_roots(&self) -> &[usize] {
        &self.levi_roots
    }

    /// Indices of `R^+ \ R_P^+`.
    pub fn nonlevi_roots(&self) -> &[usize] {
        &self.nonlevi_roots
    }

    pub fn minimal_reps(&self) -> &[WeylElement] {
        &self.minimal_reps
    }

    pub fn len(&self) -> usize {
        self.minimal_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minimal_reps.is_empty()
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.minimal_reps[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn require_index(&self, w: &WeylElement) -> Result<usize> {
        self.index_of(w).ok_or_else(|| {
            Error::NotMinimalRepresentative(w.word_string(&self.datum))
        })
    }

    /// Whether `w(α) ∈ R^+` for all `α ∈ Δ(P)`.
    pub fn is_minimal(&self, w: &WeylElement) -> bool {
        self.delta_p
            .iter()
            .all(|&a| is_positive(&w.image_of_simple(a)))
    }

    /// `dim G/P = |R^+ \ R_P^+|`.
    pub fn dim(&self) -> usize {
        self.nonlevi_roots.len()
    }

    /// Codimension of the shifted Schubert variety `Λ_w`: `dim G/P − ℓ(w)`.
    pub fn codim(&self, i: usize) -> usize {
        self.dim() - self.minimal_reps[i].length()
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    pub fn w_p(&self) -> &WeylElement {
        &self.w_p
    }

    /// Index of `w₀ w_P`, the unit class `[Λ_{w₀w_P}]`.
    pub fn unit_index(&self) -> usize {
        self.duals[0]
    }

    /// Index of `e`, the point class `[Λ_e]`.
    pub fn point_index(&self) -> usize {
        0
    }

    /// `w^∨ = w₀ w w_P`.
    pub fn dual(&self, w: &WeylElement) -> Result<WeylElement> {
        let i = self.require_index(w)?;
        Ok(self.minimal_reps[self.duals[i]].clone())
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// Index of the divisor class `[Λ_{s_k^∨}]` for `k ∉ Δ(P)`.
    pub fn divisor_index(&self, k: usize) -> Result<usize> {
        if k >= self.datum.rank() {
            return Err(Error::IndexOutOfRange {
                index: k,
                rank: self.datum.rank(),
            });
        }
        if self.delta_p.contains(&k) {
            return Err(Error::LeviIndex { index: k });
        }
        let s = WeylElement::simple(&self.datum, k)?;
        Ok(self.duals[self.index[&s]])
    }

    /// `|W| / |W_P|` computed from the enumeration of `W_P`.
    pub fn expected_count(&self) -> Result<u128> {
        let w_p_order = generate_parabolic_subgroup(&self.datum, &self.delta_p)?.len() as u128;
        Ok(self.datum.weyl_order() / w_p_order)
    }
}

/// Elements of the parabolic subgroup `W_P` generated by `gens`.
pub fn generate_parabolic_subgroup(
    datum: &RootDatum,
    gens: &[usize],
) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(datum.rank());
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut all = vec![id];
    let mut i = 0;
    while i < all.len() {
        for &k in gens {
            let v = all[i].right_multiply_simple(datum, k);
            if seen.insert(v.clone()) {
                all.push(v);
                if all.len() > WEYL_ORDER_CAP {
                    return Err(Error::WeylOrderCap {
                        order: all.len() as u128,
                        cap: WEYL_ORDER_CAP,
                    });
                }
            }
        }
        i += 1;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Series;

    fn datum(s: Series, n: usize) -> Arc<RootDatum> {
        Arc::new(RootDatum::new(s, n).unwrap())
    }

    #[test]
    fn group_orders() {
        let a1 = enumerate_weyl(&datum(Series::A, 1)).unwrap();
        assert_eq!(a1.len(), 2);
        let a2 = enumerate_weyl(&datum(Series::A, 2)).unwrap();
        let mut lens: Vec<_> = a2.iter().map(|w| w.length()).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert!(a2[0].is_identity());
        assert_eq!(enumerate_weyl(&datum(Series::B, 2)).unwrap().len(), 8);
        assert_eq!(enumerate_weyl(&datum(Series::D, 4)).unwrap().len(), 192);
        assert_eq!(enumerate_weyl(&datum(Series::C, 3)).unwrap().len(), 48);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_weyl(&datum(Series::B, 8)).unwrap_err();
        assert!(matches!(err, Error::WeylOrderCap { cap: WEYL_ORDER_CAP, .. }));
        assert!(err.to_string().contains(&WEYL_ORDER_CAP.to_string()));
    }

    #[test]
    fn lengths_match_inversion_counts() {
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::D, 4)] {
            let d = datum(s, n);
            for w in enumerate_weyl(&d).unwrap() {
                let recomputed = WeylElement::from_matrix(&d, w.matrix().to_vec()).unwrap();
                assert_eq!(recomputed.length(), w.length());
                assert_eq!(w.reduced_word(&d).len(), w.length());
                assert_eq!(WeylElement::from_word(&d, &w.reduced_word(&d)).unwrap(), w);
                for k in 0..n {
                    let ws = w.right_multiply_simple(&d, k);
                    assert_eq!((ws.length() as i64 - w.length() as i64).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn longest_element_properties() {
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::C, 2), (Series::D, 4)] {
            let d = datum(s, n);
            let w0 = longest_element(&d, &(0..n).collect::<Vec<_>>());
            assert_eq!(w0.length(), d.positive_roots().len());
            assert!(w0.compose(&d, &w0).is_identity());
            for r in d.positive_roots() {
                assert!(!w0.sends_positive(&r.0));
            }
        }
    }

    #[test]
    fn minimal_representatives() {
        let a2 = datum(Series::A, 2);
        let p = ParabolicDatum::new(a2.clone(), Coweight(vec![1, 0])).unwrap();
        assert_eq!(p.delta_p(), &[1]);
        let lens: Vec<_> = p.minimal_reps().iter().map(|w| w.length()).collect();
        assert_eq!(lens, vec![0, 1, 2]);

        let a3 = datum(Series::A, 3);
        let gr24 = ParabolicDatum::from_complement(a3.clone(), &[1]).unwrap();
        assert_eq!(gr24.delta_p(), &[0, 2]);
        assert_eq!(gr24.len(), 6);
        assert_eq!(gr24.expected_count().unwrap(), 6);

        let full = ParabolicDatum::borel(a3.clone()).unwrap();
        assert_eq!(full.len(), 24);
    }

    #[test]
    fn w_p_coset_lengths_add() {
        let b3 = datum(Series::B, 3);
        for mask in 0..8u32 {
            let non_levi: Vec<usize> = (0..3).filter(|k| mask & (1 << k) != 0).collect();
            let p = ParabolicDatum::from_complement(b3.clone(), &non_levi).unwrap();
            assert_eq!(p.len() as u128, p.expected_count().unwrap());
            let wp = generate_parabolic_subgroup(&b3, p.delta_p()).unwrap();
            for w in p.minimal_reps() {
                assert!(p.is_minimal(w));
                for u in &wp {
                    assert_eq!(w.compose(&b3, u).length(), w.length() + u.length());
                }
            }
        }
    }

    #[test]
    fn duality() {
        let a2 = datum(Series::A, 2);
        let p = ParabolicDatum::borel(a2.clone()).unwrap();
        let e = WeylElement::identity(2);
        assert_eq!(p.dual(&e).unwrap(), p.w0().compose(&a2, p.w_p()));
        let s1 = WeylElement::simple(&a2, 0).unwrap();
        let d = p.dual(&s1).unwrap();
        assert_eq!(d, p.w0().compose(&a2, &s1));
        assert_eq!(d.length(), 2);
        let top = p.dual(&e).unwrap();
        assert!(p.dual(&top).unwrap().is_identity());
        let non_min = ParabolicDatum::from_complement(a2.clone(), &[0]).unwrap();
        assert!(matches!(
            non_min.dual(&WeylElement::simple(&a2, 1).unwrap()),
            Err(Error::NotMinimalRepresentative(_))
        ));
        let d4 = datum(Series::D, 4);
        let q = ParabolicDatum::from_complement(d4, &[0, 3]).unwrap();
        for i in 0..q.len() {
            let j = q.dual_index(i);
            assert_eq!(q.dual_index(j), i);
            assert_eq!(q.codim(i) + q.codim(j), q.dim());
        }
    }

    #[test]
    fn action_on_coweights_and_weights() {
        let a1 = datum(Series::A, 1);
        let s = WeylElement::simple(&a1, 0).unwrap();
        assert_eq!(
            s.act_coweight(&a1, &Coweight(vec![1])).unwrap(),
            Coweight(vec![-1])
        );
        let a2 = datum(Series::A, 2);
        let w = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        let rho = Weight(vec![1, 1]);
        let lam = Coweight(vec![2, 5]);
        let lhs = a2
            .pair(&w.act_coweight(&a2, &lam).unwrap(), &w.act_weight(&a2, &rho).unwrap())
            .unwrap();
        assert_eq!(lhs, a2.pair(&lam, &rho).unwrap());
        assert_eq!(
            WeylElement::identity(2).act_weight(&a2, &rho).unwrap(),
            rho
        );
    }

    #[test]
    fn one_line_round_trip() {
        let a3 = datum(Series::A, 3);
        for w in enumerate_weyl(&a3).unwrap() {
            let perm = w.one_line_type_a(&a3).unwrap();
            assert_eq!(WeylElement::from_one_line_type_a(&a3, &perm).unwrap(), w);
        }
        let s1 = WeylElement::simple(&a3, 0).unwrap();
        assert_eq!(s1.one_line_type_a(&a3).unwrap(), vec![2, 1, 3, 4]);
        let a8 = datum(Series::A, 8);
        let w = parse_element(&a8, "(468579123)").unwrap();
        assert_eq!(w.length(), 21);
        assert!(parse_element(&a8, "(468579122)").is_err());
    }

    #[test]
    fn type_b_one_line() {
        let b4 = datum(Series::B, 4);
        let w = parse_element(&b4, "(348159267)").unwrap();
        assert!(w.length() > 0);
        assert!(parse_element(&b4, "(123456798)").is_err());
        let id = parse_element(&b4, "(123456789)").unwrap();
        assert!(id.is_identity());
        // s_4 = ε4 -> -ε4 swaps positions 4 and 6
        let s4 = parse_element(&b4, "(123654789)").unwrap();
        assert_eq!(s4, WeylElement::simple(&b4, 3).unwrap());
        let s1 = parse_element(&b4, "(213456798)").unwrap();
        assert_eq!(s1, WeylElement::simple(&b4, 0).unwrap());
    }

    #[test]
    fn parse_words() {
        let a3 = datum(Series::A, 3);
        let w = parse_element(&a3, "s1s2s1").unwrap();
        assert_eq!(w, parse_element(&a3, "s2 s1 s2").unwrap());
        assert_eq!(w.length(), 3);
        assert!(parse_element(&a3, "e").unwrap().is_identity());
        assert!(parse_element(&a3, "s5").is_err());
        assert!(parse_element(&a3, "sx").is_err());
        assert_eq!(w.word_string(&a3).len(), 6);
    }
}
