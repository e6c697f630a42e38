//! Embeddings `G̃ ⊂ G` at the level of weight and coweight lattices, and
//! the comorphisms `φ*`, `φ•`, `φ⊙` on Schubert classes where they are
//! computable: fully for diagonal embeddings, on `H²` for any embedding,
//! and from hard-coded data for the odd orthogonal example.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::bkcalc::{bk_product, bk_structure_constants, chi_value, TauClass};
use crate::error::{Error, Result};
use crate::rootdata::{Coweight, Root, RootDatum, Series, Weight};
use crate::schubert::{cup_product, CohomologyClass};
use crate::weyl::{parse_element, ParabolicDatum, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingKind {
    Diagonal,
    PrincipalSl2 { n: usize },
    Tensor { n: usize, k: usize, l: usize },
    OddOrthogonal { m: usize },
}

impl EmbeddingKind {
    pub fn name(&self) -> &'static str {
        match self {
            EmbeddingKind::Diagonal => "diagonal",
            EmbeddingKind::PrincipalSl2 { .. } => "principal_sl2",
            EmbeddingKind::Tensor { .. } => "tensor",
            EmbeddingKind::OddOrthogonal { .. } => "odd_orthogonal",
        }
    }

    fn params(&self) -> Value {
        match *self {
            EmbeddingKind::Diagonal => json!({}),
            EmbeddingKind::PrincipalSl2 { n } => json!({"n": n}),
            EmbeddingKind::Tensor { n, k, l } => json!({"n": n, "k": k, "l": l}),
            EmbeddingKind::OddOrthogonal { m } => json!({"m": m}),
        }
    }
}

/// Lattice data of `G̃ ⊂ G`.
///
/// `i_star` (sub rank × ambient rank) restricts weights: column `k` is
/// `i*(π_k)` in the fundamental weights of `H̃`. `i_coweight` (ambient rank
/// × sub rank) includes coweights: column `j` is `i(x̃_j)` in the
/// fundamental coweights of `H`.
#[derive(Debug, Clone)]
pub struct Embedding {
    kind: EmbeddingKind,
    ambient: Arc<RootDatum>,
    sub: Arc<RootDatum>,
    i_star: Vec<Vec<i64>>,
    i_coweight: Vec<Vec<i64>>,
}

/// Fundamental-weight coordinates of an `ε`-vector of `SL_n` (or `B_m`
/// when `half_last` is set, where the last simple coroot is `2ε_m`).
fn eps_to_fundamental(v: &[i64], rank: usize, half_last: bool) -> Vec<i64> {
    (0..rank)
        .map(|a| {
            if half_last && a == rank - 1 {
                2 * v[a]
            } else {
                v[a] - v[a + 1]
            }
        })
        .collect()
}

/// Fundamental-coweight coordinates from a diagonal exponent vector of
/// `SL_n`: `<λ, α_k> = e_k − e_{k+1}`.
fn exponents_to_coweight(e: &[i64]) -> Vec<i64> {
    e.windows(2).map(|w| w[0] - w[1]).collect()
}

fn transpose(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if cols.is_empty() {
        return Vec::new();
    }
    (0..cols[0].len())
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

impl Embedding {
    /// `G̃ ⊂ G̃ × G̃`, `i*(μ₁, μ₂) = μ₁ + μ₂`, `i(λ̃) = (λ̃, λ̃)`.
    pub fn diagonal(datum: &RootDatum) -> Self {
        let r = datum.rank();
        let ambient = RootDatum::product(datum, datum);
        let i_star = (0..r)
            .map(|i| (0..2 * r).map(|k| i64::from(k % r == i)).collect())
            .collect();
        let i_coweight = (0..2 * r)
            .map(|k| (0..r).map(|j| i64::from(k % r == j)).collect())
            .collect();
        Embedding {
            kind: EmbeddingKind::Diagonal,
            ambient: Arc::new(ambient),
            sub: Arc::new(datum.clone()),
            i_star,
            i_coweight,
        }
    }

    /// `SL₂ → SL(V_n)` with torus exponents `(n, n−2, …, −n)`.
    pub fn principal_sl2(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("principal_sl2 needs n ≥ 1".into()));
        }
        let ambient = RootDatum::new(Series::A, n)?;
        let sub = RootDatum::new(Series::A, 1)?;
        let exps: Vec<i64> = (0..=n).map(|i| n as i64 - 2 * i as i64).collect();
        // π_k = ε_1 + … + ε_k restricts to (Σ_{i≤k} e_i)·ω̃
        let i_star = vec![(1..=n).map(|k| exps[..k].iter().sum()).collect()];
        // x̃ = α̃^∨/2 acts through half the exponents
        let i_coweight = exponents_to_coweight(&exps)
            .into_iter()
            .map(|d| vec![d / 2])
            .collect();
        Ok(Embedding {
            kind: EmbeddingKind::PrincipalSl2 { n },
            ambient: Arc::new(ambient),
            sub: Arc::new(sub),
            i_star,
            i_coweight,
        })
    }

    /// Basis of `ℂⁿ ⊗ ℂⁿ` ordered by decreasing `λ`-exponent (ties
    /// lexicographic), 0-based pairs.
    pub fn tensor_basis(n: usize, k: usize, l: usize) -> Vec<(usize, usize)> {
        let p = |i: usize, c: usize| if i < c { (n - c) as i64 } else { -(c as i64) };
        let mut pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        pairs.sort_by(|a, b| {
            (p(b.0, k) + p(b.1, l))
                .cmp(&(p(a.0, k) + p(a.1, l)))
                .then(a.cmp(b))
        });
        pairs
    }

    /// `SL_n × SL_n → SL(ℂⁿ ⊗ ℂⁿ)`, adapted to `λ` with parameters `k, l`.
    pub fn tensor(n: usize, k: usize, l: usize) -> Result<Self> {
        if n < 2 || k == 0 || l == 0 || k >= n || l >= n {
            return Err(Error::Invalid(format!(
                "tensor embedding needs n ≥ 2 and 1 ≤ k, l < n (got n={n}, k={k}, l={l})"
            )));
        }
        let big = n * n;
        if big - 1 > crate::rootdata::MAX_RANK {
            return Err(Error::UnsupportedType {
                series: 'A',
                rank: big - 1,
                reason: format!("rank exceeds the cap of {}", crate::rootdata::MAX_RANK),
            });
        }
        let ambient = RootDatum::new(Series::A, big - 1)?;
        let sub = RootDatum::product_of(&[(Series::A, n - 1), (Series::A, n - 1)])?;
        let basis = Self::tensor_basis(n, k, l);
        let mut star_cols = Vec::new();
        for m in 1..big {
            let mut v1 = vec![0i64; n];
            let mut v2 = vec![0i64; n];
            for &(i, j) in &basis[..m] {
                v1[i] += 1;
                v2[j] += 1;
            }
            let mut col = eps_to_fundamental(&v1, n - 1, false);
            col.extend(eps_to_fundamental(&v2, n - 1, false));
            star_cols.push(col);
        }
        let mut cow_cols = Vec::new();
        for a in 0..2 * (n - 1) {
            let (first, idx) = if a < n - 1 { (true, a) } else { (false, a - (n - 1)) };
            let f = |i: usize| i64::from(i <= idx);
            let exps: Vec<i64> = basis
                .iter()
                .map(|&(i, j)| if first { f(i) } else { f(j) })
                .collect();
            cow_cols.push(exponents_to_coweight(&exps));
        }
        Ok(Embedding {
            kind: EmbeddingKind::Tensor { n, k, l },
            ambient: Arc::new(ambient),
            sub: Arc::new(sub),
            i_star: transpose(&star_cols),
            i_coweight: transpose(&cow_cols),
        })
    }

    /// `SO(2m+1) → SL(2m+1)` for the form pairing `e_i` with `e_{2m+2−i}`:
    /// `ε_p ↦ ε̃_p` (`p ≤ m`), `0` (`p = m+1`), `−ε̃_{2m+2−p}` (`p > m+1`).
    pub fn odd_orthogonal(m: usize) -> Result<Self> {
        let big = 2 * m + 1;
        let ambient = RootDatum::new(Series::A, big - 1)?;
        let sub = RootDatum::new(Series::B, m)?;
        let restrict_eps = |p: usize| -> Vec<i64> {
            let mut v = vec![0i64; m + 1];
            if p <= m {
                v[p - 1] = 1;
            } else if p > m + 1 {
                v[big - p] = -1;
            }
            v
        };
        let mut star_cols = Vec::new();
        for k in 1..big {
            let mut v = vec![0i64; m + 1];
            for p in 1..=k {
                for (a, b) in v.iter_mut().zip(restrict_eps(p)) {
                    *a += b;
                }
            }
            star_cols.push(eps_to_fundamental(&v, m, true));
        }
        let mut cow_cols = Vec::new();
        for j in 1..=m {
            // x̃_j = ε̃_1^* + … + ε̃_j^*
            let exps: Vec<i64> = (1..=big)
                .map(|p| {
                    if p <= j {
                        1
                    } else if p >= big + 1 - j {
                        -1
                    } else {
                        0
                    }
                })
                .collect();
            cow_cols.push(exponents_to_coweight(&exps));
        }
        Ok(Embedding {
            kind: EmbeddingKind::OddOrthogonal { m },
            ambient: Arc::new(ambient),
            sub: Arc::new(sub),
            i_star: transpose(&star_cols),
            i_coweight: transpose(&cow_cols),
        })
    }

    pub fn kind(&self) -> &EmbeddingKind {
        &self.kind
    }

    pub fn ambient(&self) -> &Arc<RootDatum> {
        &self.ambient
    }

    pub fn sub(&self) -> &Arc<RootDatum> {
        &self.sub
    }

    pub fn i_star(&self) -> &[Vec<i64>] {
        &self.i_star
    }

    pub fn i_coweight(&self) -> &[Vec<i64>] {
        &self.i_coweight
    }

    /// `i*(μ)` for a weight of `H`.
    pub fn restrict_weight(&self, mu: &Weight) -> Result<Weight> {
        self.ambient.check_rank(mu.0.len())?;
        Ok(Weight(
            self.i_star
                .iter()
                .map(|row| row.iter().zip(&mu.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn restrict_root(&self, root: &Root) -> Result<Weight> {
        self.restrict_weight(&self.ambient.root_to_weight(root))
    }

    /// `i(λ̃)` for a coweight of `H̃`.
    pub fn include_coweight(&self, lambda: &Coweight) -> Result<Coweight> {
        self.sub.check_rank(lambda.0.len())?;
        Ok(Coweight(
            self.i_coweight
                .iter()
                .map(|row| row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `<i(λ̃), μ> = <λ̃, i*(μ)>` for all basis vectors.
    pub fn check_adjoint(&self) -> bool {
        (0..self.sub.rank()).all(|j| {
            let lt = Coweight::fundamental(self.sub.rank(), j);
            let il = self.include_coweight(&lt).expect("rank");
            (0..self.ambient.rank()).all(|k| {
                let mu = Weight((0..self.ambient.rank()).map(|a| i64::from(a == k)).collect());
                let lhs = self.ambient.pair(&il, &mu).expect("rank");
                let rhs = self
                    .sub
                    .pair(&lt, &self.restrict_weight(&mu).expect("rank"))
                    .expect("rank");
                lhs == rhs
            })
        })
    }

    /// Whether each root of `g̃` is the restriction of a root of `g`.
    pub fn sub_roots_covered(&self) -> bool {
        let restricted: Vec<Weight> = self
            .ambient
            .positive_roots()
            .iter()
            .map(|r| self.restrict_root(r).expect("rank"))
            .collect();
        self.sub.positive_roots().iter().all(|r| {
            let w = self.sub.root_to_weight(r);
            let neg = Weight(w.0.iter().map(|c| -c).collect());
            restricted.contains(&w) || restricted.contains(&neg)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "params": self.kind.params(),
            "ambient": self.ambient.label(),
            "sub": self.sub.label(),
            "i_star": self.i_star,
        })
    }
}

/// Known branching numbers `d_w^{w̃}` keyed by `(w, w̃)` indices.
pub type BranchingCoefficients = BTreeMap<(usize, usize), i64>;

/// An embedding together with a one-parameter subgroup `λ̇` of `H̃`, its
/// parabolics `P̃(λ̇)` and `P(i(λ̇))`, and any externally supplied branching
/// coefficients.
pub struct Branching {
    embedding: Arc<Embedding>,
    lambda: Coweight,
    sub: Arc<ParabolicDatum>,
    ambient: Arc<ParabolicDatum>,
    known: BranchingCoefficients,
}

impl Branching {
    pub fn new(embedding: Arc<Embedding>, lambda: Coweight) -> Result<Self> {
        let sub = Arc::new(ParabolicDatum::new(embedding.sub.clone(), lambda.clone())?);
        let il = embedding.include_coweight(&lambda)?;
        let ambient = Arc::new(ParabolicDatum::new(embedding.ambient.clone(), il)?);
        Ok(Branching {
            embedding,
            lambda,
            sub,
            ambient,
            known: BTreeMap::new(),
        })
    }

    /// Supplies coefficients `d_w^{w̃}` for some ambient classes. Each listed
    /// `w` is taken to be fully described by its entries.
    pub fn with_coefficients(mut self, coeffs: BranchingCoefficients) -> Result<Self> {
        for (&(w, wt), &d) in &coeffs {
            if w >= self.ambient.len() || wt >= self.sub.len() {
                return Err(Error::Invalid("branching coefficient index out of range".into()));
            }
            if d < 0 {
                return Err(Error::Invalid("negative branching coefficient".into()));
            }
            if d != 0 && self.ambient.codim(w) != self.sub.codim(wt) {
                return Err(Error::Invalid(
                    "branching coefficient between classes of different degree".into(),
                ));
            }
        }
        self.known = coeffs;
        Ok(self)
    }

    pub fn embedding(&self) -> &Arc<Embedding> {
        &self.embedding
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    pub fn sub(&self) -> &Arc<ParabolicDatum> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<ParabolicDatum> {
        &self.ambient
    }

    /// `χ̃_{w̃}(λ̇) − χ_w(i(λ̇))`; nonnegative whenever `d_w^{w̃} ≠ 0`.
    pub fn char_gap(&self, w: usize, w_tilde: usize) -> i64 {
        chi_value(&self.sub, w_tilde) - chi_value(&self.ambient, w)
    }

    /// Ambient index of `(u, v)` for a diagonal embedding.
    pub fn pair_index(&self, u: usize, v: usize) -> Result<usize> {
        self.require_diagonal()?;
        let w = WeylElement::block_diagonal(
            &self.embedding.ambient,
            &[self.sub.element(u), self.sub.element(v)],
        );
        self.ambient.require_index(&w)
    }

    /// Inverse of [`pair_index`](Self::pair_index).
    pub fn split_index(&self, w: usize) -> Result<(usize, usize)> {
        self.require_diagonal()?;
        let sd = &self.embedding.sub;
        let x = self.ambient.element(w);
        let u = x.restrict(sd, 0);
        let v = x.restrict(sd, sd.rank());
        Ok((self.sub.require_index(&u)?, self.sub.require_index(&v)?))
    }

    fn require_diagonal(&self) -> Result<()> {
        if self.embedding.kind != EmbeddingKind::Diagonal {
            return Err(Error::Unsupported(format!(
                "operation needs a diagonal embedding, not {}",
                self.embedding.kind.name()
            )));
        }
        Ok(())
    }

    /// `φ*([Λ_u × Λ_v]) = [Λ_u]·[Λ_v]` for the diagonal embedding.
    pub fn phi_star_diagonal(&self, u: usize, v: usize) -> Result<CohomologyClass> {
        self.require_diagonal()?;
        cup_product(
            &CohomologyClass::basis(&self.sub, u)?,
            &CohomologyClass::basis(&self.sub, v)?,
        )
    }

    /// `φ*([Λ_{s_k^∨}])` from the expansion of `i*(π_k)` in the fundamental
    /// weights of `H̃`.
    pub fn phi_star_h2(&self, k: usize) -> Result<CohomologyClass> {
        self.ambient.divisor_index(k)?;
        let rank = self.embedding.ambient.rank();
        let pi_k = Weight((0..rank).map(|a| i64::from(a == k)).collect());
        let restricted = self.embedding.restrict_weight(&pi_k)?;
        let mut out = CohomologyClass::zero(&self.sub);
        for (j, &c) in restricted.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                return Err(Error::Inconsistent(format!(
                    "i*(π_{}) = {restricted} has a negative coefficient",
                    k + 1
                )));
            }
            if self.sub.delta_p().contains(&j) {
                return Err(Error::Inconsistent(format!(
                    "i*(π_{}) = {restricted} is not a character of the parabolic",
                    k + 1
                )));
            }
            out.add_term(self.sub.divisor_index(j)?, c);
        }
        Ok(out)
    }

    /// `φ*([Λ_w])` where the coefficients are known.
    pub fn phi_star(&self, w: usize) -> Result<CohomologyClass> {
        if w >= self.ambient.len() {
            return Err(Error::IndexOutOfRange {
                index: w,
                rank: self.ambient.len(),
            });
        }
        if self.known.keys().any(|&(a, _)| a == w) {
            return Ok(CohomologyClass::from_terms(
                &self.sub,
                self.known
                    .iter()
                    .filter(|((a, _), _)| *a == w)
                    .map(|(&(_, b), &d)| (b, d)),
            ));
        }
        if self.embedding.kind == EmbeddingKind::Diagonal {
            let (u, v) = self.split_index(w)?;
            return self.phi_star_diagonal(u, v);
        }
        if w == self.ambient.unit_index() {
            return Ok(CohomologyClass::unit(&self.sub));
        }
        if self.ambient.codim(w) == 1 {
            let k = (0..self.embedding.ambient.rank())
                .find(|&k| self.ambient.divisor_index(k).ok() == Some(w))
                .expect("codimension-one classes are divisors");
            return self.phi_star_h2(k);
        }
        if self.ambient.codim(w) > self.sub.dim() {
            return Ok(CohomologyClass::zero(&self.sub));
        }
        Err(Error::Unsupported(format!(
            "branching coefficients of {} for the {} embedding are not available",
            self.ambient.element(w).word_string(&self.embedding.ambient),
            self.embedding.kind.name()
        )))
    }

    /// `φ•([Λ_w]) = Σ τ^{χ̃_{w̃}(λ̇) − χ_w(i(λ̇))} d_w^{w̃} [Λ̃_{w̃}]`.
    pub fn phi_bullet(&self, w: usize) -> Result<TauClass> {
        let star = self.phi_star(w)?;
        let mut out = TauClass::zero(&self.sub);
        for (wt, d) in star.terms() {
            let gap = self.char_gap(w, wt);
            if gap < 0 {
                return Err(Error::Inconsistent(format!(
                    "negative character gap {gap} with nonzero branching coefficient"
                )));
            }
            out.add_term(wt, gap as u32, d);
        }
        Ok(out)
    }

    /// `φ⊙([Λ_w])`: the terms of `φ*` with vanishing character gap.
    pub fn phi_odot(&self, w: usize) -> Result<CohomologyClass> {
        Ok(self.phi_bullet(w)?.at_zero())
    }

    /// Extends `φ⊙` linearly.
    pub fn phi_odot_class(&self, c: &CohomologyClass) -> Result<CohomologyClass> {
        let mut out = CohomologyClass::zero(&self.sub);
        for (w, a) in c.terms() {
            for (wt, d) in self.phi_odot(w)?.terms() {
                out.add_term(wt, a * d);
            }
        }
        Ok(out)
    }
}

/// Result of [`hom_check_diagonal`].
#[derive(Debug, Clone, Default)]
pub struct HomReport {
    pub pairs_checked: usize,
    pub classes_checked: usize,
    pub violations: Vec<String>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies on a diagonal embedding that `φ⊙` is a graded ring
/// homomorphism for `⊙₀`, that each coefficient of `φ⊙` equals the
/// corresponding coefficient of `φ*` or vanishes, and that
/// `φ⊙([Λ_u × Λ_v]) = [Λ_u] ⊙₀ [Λ_v]`. With `sample = Some((n, seed))` only
/// `n` random basis pairs are tested.
pub fn hom_check_diagonal(branching: &Branching, sample: Option<(usize, u64)>) -> Result<HomReport> {
    branching.require_diagonal()?;
    let amb = branching.ambient();
    let sub = branching.sub();
    let mut report = HomReport::default();
    let word = |w: usize| amb.element(w).word_string(amb.datum());

    let mut odot = Vec::with_capacity(amb.len());
    for w in 0..amb.len() {
        let star = branching.phi_star(w)?;
        let od = branching.phi_odot(w)?;
        for (wt, c) in od.terms() {
            if c != star.coefficient(wt) {
                report
                    .violations
                    .push(format!("c ≠ d for w = {}, w̃ index {wt}", word(w)));
            }
        }
        for (wt, _) in star.terms() {
            if sub.codim(wt) != amb.codim(w) {
                report
                    .violations
                    .push(format!("φ* of {} is not homogeneous of the right degree", word(w)));
            }
        }
        let (u, v) = branching.split_index(w)?;
        let expected = bk_product(
            &CohomologyClass::basis(sub, u)?,
            &CohomologyClass::basis(sub, v)?,
        )?;
        if expected != od {
            report
                .violations
                .push(format!("φ⊙ of {} differs from the ⊙₀ product", word(w)));
        }
        odot.push(od);
        report.classes_checked += 1;
    }

    let n = amb.len();
    let pairs: Vec<(usize, usize)> = match sample {
        None => (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect(),
        Some((count, seed)) => {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..count)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        }
    };
    for (x, y) in pairs {
        let mut lhs = CohomologyClass::zero(sub);
        for (w, c) in bk_structure_constants(amb, x, y)? {
            for (wt, d) in odot[w].terms() {
                lhs.add_term(wt, c * d);
            }
        }
        let rhs = bk_product(&odot[x], &odot[y])?;
        if lhs != rhs {
            report.violations.push(format!(
                "φ⊙([Λ_{}] ⊙₀ [Λ_{}]) = {} but φ⊙·φ⊙ = {}",
                word(x),
                word(y),
                lhs.render(),
                rhs.render()
            ));
        }
        if !lhs.is_zero() && lhs.codim() != Some(amb.codim(x) + amb.codim(y)) {
            report
                .violations
                .push(format!("grading broken for ({}, {})", word(x), word(y)));
        }
        report.pairs_checked += 1;
    }
    Ok(report)
}

/// The odd orthogonal example `SO(9) ⊂ SL(9)` with `λ̇ = x̃₃`.
pub struct OddOrthogonalFixture {
    pub branching: Branching,
    /// `w = (468579123)` in the ambient `W^P`.
    pub w: usize,
    /// `w′ = (468123579)` and the Grassmannian `Gr(3, 9)` it lives on.
    pub w_prime: WeylElement,
    pub grassmannian: Arc<ParabolicDatum>,
    /// `w̃₁, w̃₂, w̃₃` in the sub `W̃^P̃`.
    pub w_tilde: [usize; 3],
    /// `(4, 2, 2)`.
    pub d: [i64; 3],
}

/// Data of the odd orthogonal example: Coskun's branching rule gives
/// `ψ₁*([Λ_{w′}]) = 4[Λ_{w̃₁}] + 2[Λ_{w̃₂}] + 2[Λ_{w̃₃}]` for the inclusion
/// `OG(3, 9) ⊂ Gr(3, 9)`, and `[Λ_w]` is the pullback of `[Λ_{w′}]` along
/// `Fl(3, 6; 9) → Gr(3, 9)`. These numbers are not recomputed here.
pub fn oddorth_fixture() -> Result<OddOrthogonalFixture> {
    let emb = Arc::new(Embedding::odd_orthogonal(4)?);
    let lambda = Coweight(vec![0, 0, 1, 0]);
    let b = Branching::new(emb.clone(), lambda)?;
    let amb_d = emb.ambient().clone();
    let sub_d = emb.sub().clone();
    let w = b.ambient().require_index(&parse_element(&amb_d, "(468579123)")?)?;
    let names = ["(348159267)", "(168357249)", "(267159348)"];
    let mut w_tilde = [0usize; 3];
    for (slot, name) in w_tilde.iter_mut().zip(names) {
        *slot = b.sub().require_index(&parse_element(&sub_d, name)?)?;
    }
    let d = [4, 2, 2];
    let coeffs: BranchingCoefficients = w_tilde.iter().zip(d).map(|(&wt, c)| ((w, wt), c)).collect();
    let b = b.with_coefficients(coeffs)?;
    let grassmannian = Arc::new(ParabolicDatum::from_complement(amb_d.clone(), &[2])?);
    let w_prime = parse_element(&amb_d, "(468123579)")?;
    grassmannian.require_index(&w_prime)?;
    Ok(OddOrthogonalFixture {
        branching: b,
        w,
        w_prime,
        grassmannian,
        w_tilde,
        d,
    })
}

/// Dynkin index of the `(n+1)`-dimensional representation of `sl₂`,
/// `Σ_j (n − 2j)² / 2`, computed from its weights.
pub fn sl2_dynkin_index(n: usize) -> Ratio<i64> {
    (0..=n as i64)
        .map(|j| {
            let m = n as i64 - 2 * j;
            Ratio::new(m * m, 2)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjointness_of_builtin_embeddings() {
        let mut embs = vec![
            Embedding::diagonal(&RootDatum::new(Series::A, 2).unwrap()),
            Embedding::diagonal(&RootDatum::new(Series::B, 2).unwrap()),
            Embedding::odd_orthogonal(4).unwrap(),
            Embedding::odd_orthogonal(2).unwrap(),
        ];
        for n in 1..=6 {
            embs.push(Embedding::principal_sl2(n).unwrap());
        }
        for (n, k, l) in [(2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 2)] {
            embs.push(Embedding::tensor(n, k, l).unwrap());
        }
        for e in &embs {
            assert!(e.check_adjoint(), "{:?}", e.kind());
            assert!(e.sub_roots_covered(), "{:?}", e.kind());
        }
    }

    #[test]
    fn diagonal_a1() {
        let e = Embedding::diagonal(&RootDatum::new(Series::A, 1).unwrap());
        assert_eq!(e.ambient().label(), "A1xA1");
        assert_eq!(e.restrict_weight(&Weight(vec![2, 3])).unwrap(), Weight(vec![5]));
        assert_eq!(
            e.include_coweight(&Coweight(vec![1])).unwrap(),
            Coweight(vec![1, 1])
        );
    }

    #[test]
    fn principal_weights() {
        let e = Embedding::principal_sl2(3).unwrap();
        assert_eq!(e.i_star(), &[vec![3, 4, 3]]);
        let e = Embedding::principal_sl2(2).unwrap();
        assert_eq!(e.i_star(), &[vec![2, 2]]);
        assert_eq!(sl2_dynkin_index(3), Ratio::from_integer(10));
    }

    #[test]
    fn tensor_inclusion_of_lambda() {
        let (n, k, l) = (3, 1, 2);
        let e = Embedding::tensor(n, k, l).unwrap();
        let mut lam = vec![0; 4];
        lam[k - 1] = n as i64;
        lam[n - 1 + l - 1] = n as i64;
        let il = e.include_coweight(&Coweight(lam)).unwrap();
        let mut expected = vec![0; 8];
        expected[k * l - 1] = 3;
        expected[n * n - (n - k) * (n - l) - 1] = 3;
        assert_eq!(il, Coweight(expected));
    }

    #[test]
    fn odd_orthogonal_inclusion() {
        let e = Embedding::odd_orthogonal(4).unwrap();
        assert_eq!(
            e.include_coweight(&Coweight(vec![0, 0, 1, 0])).unwrap(),
            Coweight(vec![0, 0, 1, 0, 0, 1, 0, 0])
        );
    }

    #[test]
    fn diagonal_indices_round_trip() {
        let d = RootDatum::new(Series::A, 2).unwrap();
        let b = Branching::new(Arc::new(Embedding::diagonal(&d)), Coweight(vec![1, 1])).unwrap();
        assert_eq!(b.ambient().len(), 36);
        for w in 0..b.ambient().len() {
            let (u, v) = b.split_index(w).unwrap();
            assert_eq!(b.pair_index(u, v).unwrap(), w);
        }
    }

    #[test]
    fn unsupported_requests() {
        let b = Branching::new(Arc::new(Embedding::principal_sl2(3).unwrap()), Coweight(vec![2]))
            .unwrap();
        let w = (0..b.ambient().len())
            .find(|&w| b.ambient().codim(w) == 2)
            .unwrap();
        // codim 2 exceeds dim P¹, so the pullback vanishes
        assert!(b.phi_star(w).unwrap().is_zero());
        assert!(matches!(b.split_index(0), Err(Error::Unsupported(_))));
        let t = Branching::new(
            Arc::new(Embedding::tensor(2, 1, 1).unwrap()),
            Coweight(vec![2, 2]),
        )
        .unwrap();
        let w2 = (0..t.ambient().len())
            .find(|&w| t.ambient().codim(w) == 2)
            .unwrap();
        assert!(matches!(t.phi_star(w2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn odd_orthogonal_fixture_values() {
        let f = oddorth_fixture().unwrap();
        let b = &f.branching;
        assert_eq!(b.sub().dim(), 12);
        assert_eq!(b.ambient().dim(), 27);
        assert_eq!(b.ambient().codim(f.w), 6);
        assert_eq!(chi_value(b.ambient(), f.w), 6);
        // hand count over the B₄ roots ε_i ± ε_j, ε_i with signed images
        let expected = [7, 8, 8];
        for (&wt, e) in f.w_tilde.iter().zip(expected) {
            assert_eq!(b.sub().codim(wt), 6);
            assert_eq!(chi_value(b.sub(), wt), e);
            assert_eq!(b.char_gap(f.w, wt), e - 6);
        }
        assert!(b.phi_odot(f.w).unwrap().is_zero());
        assert_eq!(b.phi_star(f.w).unwrap().terms().count(), 3);
    }

    #[test]
    fn tensor_h2_pairs() {
        for (n, k, l) in [(2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 2)] {
            let e = Arc::new(Embedding::tensor(n, k, l).unwrap());
            let mut lam = vec![0; 2 * (n - 1)];
            lam[k - 1] = n as i64;
            lam[n - 1 + l - 1] = n as i64;
            let b = Branching::new(e, Coweight(lam)).unwrap();
            let d1 = b.sub().divisor_index(k - 1).unwrap();
            let d2 = b.sub().divisor_index(n - 1 + l - 1).unwrap();
            assert_eq!(chi_value(b.sub(), d1), n as i64);
            assert_eq!(chi_value(b.sub(), d2), n as i64);
            for (m, (c1, c2)) in [(k * l, (l, k)), (n * n - (n - k) * (n - l), (n - l, n - k))] {
                let a = b.ambient().divisor_index(m - 1).unwrap();
                assert_eq!(chi_value(b.ambient(), a), n as i64);
                let h2 = b.phi_star_h2(m - 1).unwrap();
                assert_eq!(h2.coefficient(d1), c1 as i64);
                assert_eq!(h2.coefficient(d2), c2 as i64);
            }
        }
    }

    #[test]
    fn principal_h2() {
        for n in 1..=6usize {
            let b = Branching::new(
                Arc::new(Embedding::principal_sl2(n).unwrap()),
                Coweight(vec![2]),
            )
            .unwrap();
            let pt = b.sub().point_index();
            let m: Vec<i64> = (0..n)
                .map(|k| b.phi_star_h2(k).unwrap().coefficient(pt))
                .collect();
            assert_eq!(m[0], n as i64);
            assert_eq!(m.iter().sum::<i64>(), sl2_dynkin_index(n).to_integer());
            for k in 0..n {
                let a = b.ambient().divisor_index(k).unwrap();
                assert_eq!(chi_value(b.ambient(), a), 2);
                assert_eq!(b.phi_odot(a).unwrap(), b.phi_star(a).unwrap());
            }
        }
    }
}
