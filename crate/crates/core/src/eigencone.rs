//! Inequalities for the eigencone `LR(G̃, G)` of a diagonal embedding,
//! certified by `⊙₀` products, together with a Littlewood–Richardson
//! membership oracle for type A and an exact irredundancy check.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bkcalc::bk_structure_constants;
use crate::branching::{Embedding, EmbeddingKind};
use crate::error::{Error, Result};
use crate::linalg::primitive_normal;
use crate::rootdata::{Coweight, RootDatum, Series, Weight};
use crate::weyl::{ParabolicDatum, WeylElement};

/// Global sign of the inequalities, fixed so that the diagonal `A1` output
/// is the triangle cone `|b − c| ≤ a ≤ b + c`.
pub const ORIENTATION: i64 = -1;

/// Largest sub rank for which hyperplanes are enumerated.
pub const LAMBDA_RANK_CAP: usize = 6;

/// Largest sub rank accepted by [`irredundancy_check`].
pub const IRREDUNDANCY_RANK_CAP: usize = 3;

/// `{i*(α) : α a root of g, i*(α) ≠ 0}`, sorted.
pub fn restricted_weights(embedding: &Embedding) -> Result<Vec<Weight>> {
    let mut out = BTreeSet::new();
    for r in embedding.ambient().positive_roots() {
        let w = embedding.restrict_root(r)?;
        if w.0.iter().any(|&c| c != 0) {
            out.insert(Weight(w.0.iter().map(|c| -c).collect()));
            out.insert(w);
        }
    }
    Ok(out.into_iter().collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dominant indivisible coweights orthogonal to hyperplanes spanned by
/// restricted weights, in lexicographic order.
pub fn enumerate_dominant_lambdas(embedding: &Embedding) -> Result<Vec<Coweight>> {
    let sub = embedding.sub();
    let r = sub.rank();
    if r == 1 {
        return Ok(vec![Coweight(vec![1])]);
    }
    if r > LAMBDA_RANK_CAP {
        return Err(Error::UnsupportedType {
            series: sub.series().map(|s| s.letter()).unwrap_or('?'),
            rank: r,
            reason: format!("hyperplane enumeration is capped at rank {LAMBDA_RANK_CAP}"),
        });
    }
    // one representative per line ±μ
    let weights: Vec<Weight> = restricted_weights(embedding)?
        .into_iter()
        .filter(|w| w.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect();
    let (_, adj) = sub.adjugate_cartan();
    // <λ, μ> = λ^T A^{-1} μ, so the constraint row is adj·μ
    let rows: Vec<Vec<i64>> = weights
        .iter()
        .map(|w| {
            adj.iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for subset in subsets(rows.len(), r - 1) {
        let m: Vec<Vec<i64>> = subset.iter().map(|&i| rows[i].clone()).collect();
        if let Some(normal) = primitive_normal(&m, r) {
            let neg: Vec<i64> = normal.iter().map(|c| -c).collect();
            out.insert(sub.dominant_coweight(&Coweight(normal)));
            out.insert(sub.dominant_coweight(&Coweight(neg)));
        }
    }
    Ok(out.into_iter().collect())
}

/// One inequality `<w̃λ, ν̃> + <wλ, ν> ≥ 0` (up to [`ORIENTATION`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub lambda: Coweight,
    pub w_tilde: WeylElement,
    /// Ambient element `(u, v)` of the product Weyl group.
    pub w: WeylElement,
    /// Factors of `w`; the certificate is `[Λ_u] ⊙₀ [Λ_v] ⊙₀ [Λ̃_{w̃}] = [Λ̃_e]`.
    pub u: WeylElement,
    pub v: WeylElement,
    /// Coefficients on `(ν̃, ν)` in fundamental-weight coordinates.
    pub functional: Vec<Ratio<i64>>,
}

impl Inequality {
    /// Value of the linear form; the inequality holds iff it is `≥ 0`.
    pub fn evaluate(&self, point: &[Ratio<i64>]) -> Ratio<i64> {
        self.functional
            .iter()
            .zip(point)
            .fold(Ratio::zero(), |acc, (a, b)| acc + a * b)
    }

    /// The functional scaled to a primitive integer vector.
    pub fn normal(&self) -> Vec<i64> {
        let den = self
            .functional
            .iter()
            .fold(1i64, |acc, c| acc.lcm(c.denom()));
        let ints: Vec<i64> = self
            .functional
            .iter()
            .map(|c| (c * den).to_integer())
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x)).max(1);
        ints.into_iter().map(|x| x / g).collect()
    }

    fn to_json(&self, sub: &RootDatum, amb: &RootDatum) -> Value {
        let wt = self.w_tilde.word_string(sub);
        let w = self.w.word_string(amb);
        json!({
            "lambda": self.lambda.0,
            "w_tilde_word": wt,
            "w_word": w,
            "normal": self.normal(),
            "certificate": {
                "w": w,
                "w_tilde": wt,
                "u": self.u.word_string(sub),
                "v": self.v.word_string(sub),
            },
        })
    }
}

/// The generated inequality list of `LR(G̃, G)`.
#[derive(Debug, Clone)]
pub struct ConeDescription {
    pub embedding: Arc<Embedding>,
    pub inequalities: Vec<Inequality>,
}

/// Coefficient of the point class in `[Λ_u] ⊙₀ [Λ_v] ⊙₀ [Λ_w]`.
pub fn triple_point_coefficient(p: &ParabolicDatum, u: usize, v: usize, w: usize) -> Result<i64> {
    let mut total = 0;
    for (x, c) in bk_structure_constants(p, u, v)? {
        for (y, d) in bk_structure_constants(p, x, w)? {
            if y == p.point_index() {
                total += c * d;
            }
        }
    }
    Ok(total)
}

fn pairing_row(datum: &RootDatum, lambda: &Coweight) -> Vec<Ratio<i64>> {
    (0..datum.rank())
        .map(|j| {
            datum
                .pair(lambda, &Weight((0..datum.rank()).map(|a| i64::from(a == j)).collect()))
                .expect("same datum")
        })
        .collect()
}

fn inequalities_for(embedding: &Embedding, lambda: &Coweight) -> Result<Vec<Inequality>> {
    let sub = embedding.sub();
    let amb = embedding.ambient();
    let p = ParabolicDatum::new(sub.clone(), lambda.clone())?;
    let dim = p.dim();
    let n = p.len();
    let sign = Ratio::from_integer(ORIENTATION);
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            for wt in 0..n {
                if p.codim(u) + p.codim(v) + p.codim(wt) != dim {
                    continue;
                }
                if triple_point_coefficient(&p, u, v, wt)? != 1 {
                    continue;
                }
                let eu = p.element(u).clone();
                let ev = p.element(v).clone();
                let ewt = p.element(wt).clone();
                let mut functional: Vec<Ratio<i64>> =
                    pairing_row(sub, &ewt.act_coweight(sub, lambda)?);
                functional.extend(pairing_row(sub, &eu.act_coweight(sub, lambda)?));
                functional.extend(pairing_row(sub, &ev.act_coweight(sub, lambda)?));
                let functional = functional.into_iter().map(|c| c * sign).collect();
                out.push(Inequality {
                    lambda: lambda.clone(),
                    w: WeylElement::block_diagonal(amb, &[&eu, &ev]),
                    w_tilde: ewt,
                    u: eu,
                    v: ev,
                    functional,
                });
            }
        }
    }
    Ok(out)
}

fn sort_key(sub: &RootDatum, amb: &RootDatum, q: &Inequality) -> (Vec<i64>, String, String) {
    (q.lambda.0.clone(), q.w_tilde.word_string(sub), q.w.word_string(amb))
}

/// Generates the inequalities for a diagonal embedding.
pub fn enumerate_inequalities(embedding: Arc<Embedding>) -> Result<ConeDescription> {
    if *embedding.kind() != EmbeddingKind::Diagonal {
        return Err(Error::Unsupported(format!(
            "eigencone inequalities need φ⊙, which is available for diagonal embeddings only (got {})",
            embedding.kind().name()
        )));
    }
    let lambdas = enumerate_dominant_lambdas(&embedding)?;
    let parts: Vec<Vec<Inequality>> = lambdas
        .par_iter()
        .map(|l| inequalities_for(&embedding, l))
        .collect::<Result<_>>()?;
    let mut inequalities: Vec<Inequality> = parts.into_iter().flatten().collect();
    let (sub, amb) = (embedding.sub().clone(), embedding.ambient().clone());
    inequalities.sort_by_key(|q| sort_key(&sub, &amb, q));
    Ok(ConeDescription {
        embedding,
        inequalities,
    })
}

/// Outcome of [`cone_contains`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub inside: bool,
    pub violated: Vec<usize>,
    pub tight: Vec<usize>,
}

impl ConeDescription {
    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    /// Recomputes each certificate; returns the indices that fail.
    pub fn verify_certificates(&self) -> Result<Vec<usize>> {
        let sub = self.embedding.sub();
        let mut bad = Vec::new();
        for (i, q) in self.inequalities.iter().enumerate() {
            let p = ParabolicDatum::new(sub.clone(), q.lambda.clone())?;
            let idx = |w: &WeylElement| p.require_index(w);
            let c = triple_point_coefficient(&p, idx(&q.u)?, idx(&q.v)?, idx(&q.w_tilde)?)?;
            let expected = WeylElement::block_diagonal(self.embedding.ambient(), &[&q.u, &q.v]);
            if c != 1 || expected != q.w {
                bad.push(i);
            }
        }
        Ok(bad)
    }

    pub fn to_json(&self) -> Value {
        let sub = self.embedding.sub();
        let amb = self.embedding.ambient();
        json!({
            "embedding": self.embedding.to_json(),
            "orientation": ORIENTATION,
            "inequalities": self
                .inequalities
                .iter()
                .map(|q| q.to_json(sub, amb))
                .collect::<Vec<_>>(),
        })
    }
}

fn check_dominant(datum: &RootDatum, point: &[Ratio<i64>], what: &str) -> Result<()> {
    datum.check_rank(point.len())?;
    if point.iter().any(|c| c.is_negative()) {
        let shown: Vec<String> = point.iter().map(|c| c.to_string()).collect();
        return Err(Error::NonDominantWeight(format!("{what} = ({})", shown.join(", "))));
    }
    Ok(())
}

/// Exact membership test for dominant `ν̃` (sub weight) and `ν` (ambient
/// weight), both in fundamental-weight coordinates.
pub fn cone_contains(cone: &ConeDescription, nu_tilde: &[Ratio<i64>], nu: &[Ratio<i64>]) -> Result<Membership> {
    check_dominant(cone.embedding.sub(), nu_tilde, "ν̃")?;
    check_dominant(cone.embedding.ambient(), nu, "ν")?;
    let point: Vec<Ratio<i64>> = nu_tilde.iter().chain(nu).copied().collect();
    let mut violated = Vec::new();
    let mut tight = Vec::new();
    for (i, q) in cone.inequalities.iter().enumerate() {
        let v = q.evaluate(&point);
        if v.is_negative() {
            violated.push(i);
        } else if v.is_zero() {
            tight.push(i);
        }
    }
    Ok(Membership {
        inside: violated.is_empty(),
        violated,
        tight,
    })
}

/// Littlewood–Richardson coefficient `c_{λμ}^ν`, counting LR tableaux of
/// shape `ν/λ` and content `μ` row by row.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    lr_count(lambda, mu, nu, false)
}

fn lr_count(lambda: &[usize], mu: &[usize], nu: &[usize], stop_at_one: bool) -> u64 {
    let size = |p: &[usize]| p.iter().sum::<usize>();
    let lambda: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
    let mu: Vec<usize> = mu.iter().copied().filter(|&x| x > 0).collect();
    let nu: Vec<usize> = nu.iter().copied().filter(|&x| x > 0).collect();
    if size(&lambda) + size(&mu) != size(&nu) || lambda.len() > nu.len() {
        return 0;
    }
    if lambda.iter().zip(&nu).any(|(a, b)| a > b) {
        return 0;
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return 0;
    }
    let rows = nu.len();
    let lam: Vec<usize> = (0..rows).map(|r| lambda.get(r).copied().unwrap_or(0)).collect();
    let k = mu.len();
    let mut search = LrSearch {
        lam,
        nu,
        mu,
        k,
        fill: vec![vec![0usize; k]; rows],
        stop_at_one,
        found: 0,
    };
    search.row(0);
    search.found
}

struct LrSearch {
    lam: Vec<usize>,
    nu: Vec<usize>,
    mu: Vec<usize>,
    k: usize,
    /// `fill[r][j]` = number of entries `j + 1` in row `r`.
    fill: Vec<Vec<usize>>,
    stop_at_one: bool,
    found: u64,
}

impl LrSearch {
    fn done(&self) -> bool {
        self.stop_at_one && self.found > 0
    }

    fn row(&mut self, r: usize) {
        if self.done() {
            return;
        }
        if r == self.nu.len() {
            let complete = (0..self.k).all(|j| self.fill.iter().map(|row| row[j]).sum::<usize>() == self.mu[j]);
            if complete {
                self.found += 1;
            }
            return;
        }
        let len = self.nu[r] - self.lam[r];
        self.entry(r, 0, len);
    }

    /// Chooses how many `j + 1` go into row `r`, with `left` cells left.
    fn entry(&mut self, r: usize, j: usize, left: usize) {
        if self.done() {
            return;
        }
        if j == self.k || j > r {
            if left == 0 {
                self.row(r + 1);
            }
            return;
        }
        let used: usize = (0..r).map(|s| self.fill[s][j]).sum();
        let mut max = left.min(self.mu[j] - used);
        if r > 0 {
            // cells ≤ j+1 in row r sit strictly below cells < j+1 in row r−1
            let filled_here: usize = self.fill[r][..j].iter().sum();
            let above: usize = self.lam[r - 1] + self.fill[r - 1][..j].iter().sum::<usize>();
            let start = self.lam[r] + filled_here;
            if above < start {
                max = 0;
            } else {
                max = max.min(above - start);
            }
        }
        if j > 0 {
            // lattice condition for the letter j+1 against j
            let prev: usize = (0..r).map(|s| self.fill[s][j - 1]).sum();
            max = max.min(prev.saturating_sub(used));
        }
        for c in (0..=max).rev() {
            self.fill[r][j] = c;
            self.entry(r, j + 1, left - c);
            if self.done() {
                break;
            }
        }
        self.fill[r][j] = 0;
    }
}

/// `p_i = Σ_{j ≥ i} a_j`: the partition of an `SL_N` weight.
pub fn weight_to_partition(a: &[i64]) -> Vec<usize> {
    let mut out = vec![0usize; a.len()];
    let mut acc = 0i64;
    for i in (0..a.len()).rev() {
        acc += a[i];
        out[i] = acc as usize;
    }
    out
}

/// Whether `V_a ⊗ V_b ⊗ V_c` has a nonzero `SL_N`-invariant.
pub fn sl_invariant_exists(a: &[i64], b: &[i64], c: &[i64]) -> bool {
    let n = a.len() + 1;
    let pa = weight_to_partition(a);
    let pb = weight_to_partition(b);
    let dual: Vec<i64> = c.iter().rev().copied().collect();
    let pc = weight_to_partition(&dual);
    let total = pa.iter().sum::<usize>() + pb.iter().sum::<usize>();
    let base = pc.iter().sum::<usize>();
    if total < base || (total - base) % n != 0 {
        return false;
    }
    let shift = (total - base) / n;
    let mut target: Vec<usize> = pc.iter().map(|x| x + shift).collect();
    target.push(shift);
    lr_count(&pa, &pb, &target, true) > 0
}

/// Membership oracle for the diagonal `SL_N ⊂ SL_N × SL_N`: whether
/// `V_{nν̃} ⊗ V_{nν₁} ⊗ V_{nν₂}` has an invariant for some `n ≥ 1`. By
/// saturation only the least `n` satisfying the degree condition
/// `n·(|ν̃| + |ν₁| + |ν₂|) ≡ 0 (mod N)` needs testing.
pub fn diag_membership_oracle(nu_tilde: &[i64], nu1: &[i64], nu2: &[i64]) -> bool {
    let big_n = nu_tilde.len() + 1;
    let size = |a: &[i64]| weight_to_partition(a).iter().sum::<usize>();
    let total = size(nu_tilde) + size(nu1) + size(nu2);
    let n = (1..=big_n).find(|n| (n * total) % big_n == 0).unwrap_or(big_n) as i64;
    let scale = |a: &[i64]| a.iter().map(|x| x * n).collect::<Vec<_>>();
    sl_invariant_exists(&scale(nu_tilde), &scale(nu1), &scale(nu2))
}

/// Verdict of [`irredundancy_check`] for one inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Essential {
    /// A dominant point violating only this inequality.
    Yes(Vec<BigRational>),
    No,
    Undetermined,
}

/// For each inequality, searches for a dominant point satisfying all others
/// but violating it.
pub fn irredundancy_check(cone: &ConeDescription) -> Vec<Essential> {
    if cone.embedding.sub().rank() > IRREDUNDANCY_RANK_CAP {
        return vec![Essential::Undetermined; cone.len()];
    }
    let forms: Vec<Vec<BigRational>> = cone
        .inequalities
        .iter()
        .map(|q| {
            q.functional
                .iter()
                .map(|c| BigRational::new(BigInt::from(*c.numer()), BigInt::from(*c.denom())))
                .collect()
        })
        .collect();
    (0..forms.len())
        .into_par_iter()
        .map(|t| {
            // f_i·x ≥ 0 for i ≠ t, −f_t·x ≥ 1, x ≥ 0
            let rows: Vec<(Vec<BigRational>, BigRational)> = forms
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    if i == t {
                        (f.iter().map(|c| -c).collect(), BigRational::one())
                    } else {
                        (f.clone(), BigRational::zero())
                    }
                })
                .collect();
            match feasible_point(&rows) {
                Some(x) => {
                    let dot = |f: &[BigRational]| -> BigRational {
                        f.iter().zip(&x).fold(BigRational::zero(), |a, (p, q)| a + p * q)
                    };
                    let ok = x.iter().all(|c| !c.is_negative())
                        && forms.iter().enumerate().all(|(i, f)| {
                            let v = dot(f);
                            if i == t {
                                v.is_negative()
                            } else {
                                !v.is_negative()
                            }
                        });
                    if ok {
                        Essential::Yes(x)
                    } else {
                        Essential::Undetermined
                    }
                }
                None => Essential::No,
            }
        })
        .collect()
}

/// Phase one of the simplex method with Bland's rule: a point `x ≥ 0` with
/// `a·x ≥ b` for every row, or `None` if there is none.
fn feasible_point(rows: &[(Vec<BigRational>, BigRational)]) -> Option<Vec<BigRational>> {
    let m = rows.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = rows[0].0.len();
    // columns: x (n), surplus (m), artificial (m); rhs last
    let cols = n + 2 * m;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    let mut basis = Vec::with_capacity(m);
    for (i, (a, b)) in rows.iter().enumerate() {
        // a·x − s = b with b ≥ 0 after flipping
        let flip = b.is_negative();
        let mut row = vec![BigRational::zero(); cols + 1];
        for j in 0..n {
            row[j] = if flip { -&a[j] } else { a[j].clone() };
        }
        row[n + i] = if flip { BigRational::one() } else { -BigRational::one() };
        row[n + m + i] = BigRational::one();
        row[cols] = if flip { -b } else { b.clone() };
        tab.push(row);
        basis.push(n + m + i);
    }
    // objective: minimise Σ artificials, stored as reduced costs
    let mut obj = vec![BigRational::zero(); cols + 1];
    for row in &tab {
        for j in 0..=cols {
            if j < n + m || j == cols {
                obj[j] -= &row[j];
            }
        }
    }
    tab.push(obj);
    loop {
        let Some(enter) = (0..cols).find(|&j| tab[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][cols] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave?;
        let piv = tab[pr][enter].clone();
        for x in tab[pr].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = tab[pr].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        basis[pr] = enter;
    }
    if !tab[m][cols].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = tab[i][cols].clone();
        }
    }
    Some(x)
}

/// Diagonal embedding of a simple type-A datum of rank `r`.
pub fn diagonal_a(r: usize) -> Result<Arc<Embedding>> {
    Ok(Arc::new(Embedding::diagonal(&RootDatum::new(Series::A, r)?)))
}

/// Groups inequality indices by `λ`.
pub fn by_lambda(cone: &ConeDescription) -> BTreeMap<Vec<i64>, Vec<usize>> {
    let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, q) in cone.inequalities.iter().enumerate() {
        out.entry(q.lambda.0.clone()).or_default().push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Ratio<i64> {
        Ratio::from_integer(x)
    }

    #[test]
    fn restricted_weights_examples() {
        let e = diagonal_a(1).unwrap();
        assert_eq!(restricted_weights(&e).unwrap(), vec![Weight(vec![-2]), Weight(vec![2])]);
        let e = diagonal_a(2).unwrap();
        assert_eq!(restricted_weights(&e).unwrap().len(), 6);
        let p = Embedding::principal_sl2(2).unwrap();
        let ws: Vec<i64> = restricted_weights(&p).unwrap().iter().map(|w| w.0[0]).collect();
        assert_eq!(ws, vec![-4, -2, 2, 4]);
    }

    #[test]
    fn lambdas() {
        assert_eq!(
            enumerate_dominant_lambdas(&diagonal_a(1).unwrap()).unwrap(),
            vec![Coweight(vec![1])]
        );
        assert_eq!(
            enumerate_dominant_lambdas(&diagonal_a(2).unwrap()).unwrap(),
            vec![Coweight(vec![0, 1]), Coweight(vec![1, 0])]
        );
        let t = Embedding::tensor(2, 1, 1).unwrap();
        let ls = enumerate_dominant_lambdas(&t).unwrap();
        assert!(!ls.is_empty());
        for l in &ls {
            assert!(l.is_dominant());
            assert_eq!(l.0.iter().fold(0i64, |a, &b| a.gcd(&b)), 1);
        }
    }

    #[test]
    fn a1_triangle() {
        let cone = enumerate_inequalities(diagonal_a(1).unwrap()).unwrap();
        assert_eq!(cone.len(), 3);
        let mut normals: Vec<Vec<i64>> = cone.inequalities.iter().map(|q| q.normal()).collect();
        normals.sort();
        assert_eq!(normals, vec![vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]]);
        assert!(cone_contains(&cone, &[r(2)], &[r(1), r(1)]).unwrap().inside);
        assert!(!cone_contains(&cone, &[r(3)], &[r(1), r(1)]).unwrap().inside);
        let zero = cone_contains(&cone, &[r(0)], &[r(0), r(0)]).unwrap();
        assert!(zero.inside && zero.tight.len() == 3);
        assert!(matches!(
            cone_contains(&cone, &[r(-1)], &[r(0), r(0)]),
            Err(Error::NonDominantWeight(_))
        ));
        assert!(cone.verify_certificates().unwrap().is_empty());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[4, 2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
    }

    #[test]
    fn sl2_oracle() {
        assert!(sl_invariant_exists(&[2], &[1], &[1]));
        assert!(!sl_invariant_exists(&[3], &[1], &[1]));
        assert!(!sl_invariant_exists(&[1], &[1], &[1]));
        assert!(diag_membership_oracle(&[1], &[1], &[1]));
    }

    #[test]
    fn simplex_basics() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        // x ≥ 0, x ≥ 2
        assert!(feasible_point(&[(vec![q(1)], q(2))]).is_some());
        // −x ≥ 1 has no solution with x ≥ 0
        assert!(feasible_point(&[(vec![q(-1)], q(1))]).is_none());
        assert!(irredundancy_check(&ConeDescription {
            embedding: diagonal_a(1).unwrap(),
            inequalities: Vec::new(),
        })
        .is_empty());
    }
}
