//! The deformed product `⊙•`, its `τ = 0` specialisation `⊙₀`, the
//! characters `χ_w`, tangent-space dimension vectors, the two
//! Levi-movability tests and the Azad–Barry–Seitz partition.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::branching::Branching;
use crate::error::{Error, Result};
use crate::rootdata::{Coweight, Root, RootDatum, Weight};
use crate::schubert::{same_space, structure_constants, CohomologyClass};
use crate::weyl::{ParabolicDatum, WeylElement};

/// `χ_w = Σ β` over `β ∈ R⁺ \ R_P⁺` with `w(β) ∈ R⁺`, in simple-root
/// coordinates, for the `i`-th element of `W^P`.
pub fn chi_root(parabolic: &ParabolicDatum, i: usize) -> Root {
    let d = parabolic.datum();
    let w = parabolic.element(i);
    let mut sum = vec![0i64; d.rank()];
    for &b in parabolic.nonlevi_roots() {
        let beta = &d.positive_roots()[b].0;
        if w.sends_positive(beta) {
            for (s, c) in sum.iter_mut().zip(beta) {
                *s += c;
            }
        }
    }
    Root(sum)
}

/// `χ_w` as a weight (fundamental-weight coordinates).
pub fn chi(parabolic: &ParabolicDatum, w: &WeylElement) -> Result<Weight> {
    let i = parabolic.require_index(w)?;
    Ok(parabolic.datum().root_to_weight(&chi_root(parabolic, i)))
}

/// `χ_w(λ)` for an arbitrary coweight.
pub fn chi_at(parabolic: &ParabolicDatum, i: usize, lambda: &Coweight) -> Result<i64> {
    parabolic.datum().pair_root(lambda, &chi_root(parabolic, i))
}

/// `χ_w(λ̇)` for the coweight defining the parabolic.
pub fn chi_value(parabolic: &ParabolicDatum, i: usize) -> i64 {
    chi_at(parabolic, i, parabolic.lambda()).expect("same datum")
}

/// `(χ_w − χ_u − χ_v)(λ̇)`; a negative value is an internal inconsistency.
pub fn tau_exponent_product(parabolic: &ParabolicDatum, u: usize, v: usize, w: usize) -> Result<u32> {
    let e = chi_value(parabolic, w) - chi_value(parabolic, u) - chi_value(parabolic, v);
    if e < 0 {
        let d = parabolic.datum();
        return Err(Error::Inconsistent(format!(
            "negative τ-exponent {e} for u = {}, v = {}, w = {}",
            parabolic.element(u).word_string(d),
            parabolic.element(v).word_string(d),
            parabolic.element(w).word_string(d)
        )));
    }
    Ok(e as u32)
}

/// An element of `H*(G/P) ⊗ ℤ[τ]`: coefficients keyed by `(w, exponent)`.
#[derive(Clone)]
pub struct TauClass {
    parabolic: Arc<ParabolicDatum>,
    coeffs: BTreeMap<(usize, u32), i64>,
}

impl PartialEq for TauClass {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.parabolic, &other.parabolic) && self.coeffs == other.coeffs
    }
}

impl Eq for TauClass {}

impl fmt::Debug for TauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauClass({})", self.render())
    }
}

impl TauClass {
    pub fn zero(parabolic: &Arc<ParabolicDatum>) -> Self {
        TauClass {
            parabolic: parabolic.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// Embeds an ordinary class with exponent 0.
    pub fn from_class(c: &CohomologyClass) -> Self {
        let mut t = Self::zero(c.parabolic());
        for (i, d) in c.terms() {
            t.add_term(i, 0, d);
        }
        t
    }

    pub fn basis(parabolic: &Arc<ParabolicDatum>, i: usize) -> Result<Self> {
        Ok(Self::from_class(&CohomologyClass::basis(parabolic, i)?))
    }

    pub fn parabolic(&self) -> &Arc<ParabolicDatum> {
        &self.parabolic
    }

    pub fn add_term(&mut self, i: usize, exponent: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry((i, exponent)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&(i, exponent));
        }
    }

    pub fn coefficient(&self, i: usize, exponent: u32) -> i64 {
        self.coeffs.get(&(i, exponent)).copied().unwrap_or(0)
    }

    /// `((w, exponent), coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, u32), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Specialisation `τ = 0`.
    pub fn at_zero(&self) -> CohomologyClass {
        CohomologyClass::from_terms(
            &self.parabolic,
            self.terms().filter(|((_, e), _)| *e == 0).map(|((i, _), c)| (i, c)),
        )
    }

    /// Specialisation `τ = 1`.
    pub fn at_one(&self) -> CohomologyClass {
        CohomologyClass::from_terms(&self.parabolic, self.terms().map(|((i, _), c)| (i, c)))
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let d = self.parabolic.datum();
        self.coeffs
            .iter()
            .map(|(&(i, e), &c)| {
                let word = self.parabolic.element(i).word_string(d);
                let tau = match e {
                    0 => String::new(),
                    1 => "τ·".into(),
                    _ => format!("τ^{e}·"),
                };
                let coeff = if c == 1 { String::new() } else { format!("{c}·") };
                format!("{coeff}{tau}[Λ_{word}]")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let d = self.parabolic.datum();
        Value::Array(
            self.coeffs
                .iter()
                .map(|(&(i, e), &c)| {
                    json!({"w": self.parabolic.element(i).word_string(d), "tau": e, "coeff": c})
                })
                .collect(),
        )
    }
}

/// `⊙•`, extended `ℤ[τ]`-linearly.
pub fn deformed_product(a: &TauClass, b: &TauClass) -> Result<TauClass> {
    if !same_space(&a.parabolic, &b.parabolic) {
        return Err(Error::SpaceMismatch);
    }
    let p = &a.parabolic;
    let mut out = TauClass::zero(p);
    for ((u, eu), cu) in a.terms() {
        for ((v, ev), cv) in b.terms() {
            for &(w, d) in structure_constants(p, u, v)?.iter() {
                let e = tau_exponent_product(p, u, v, w)?;
                out.add_term(w, eu + ev + e, cu * cv * d);
            }
        }
    }
    Ok(out)
}

/// Structure constants of `⊙₀`: the cup-product terms with zero exponent.
pub fn bk_structure_constants(parabolic: &ParabolicDatum, u: usize, v: usize) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for &(w, d) in structure_constants(parabolic, u, v)?.iter() {
        if tau_exponent_product(parabolic, u, v, w)? == 0 {
            out.push((w, d));
        }
    }
    Ok(out)
}

/// The Belkale–Kumar product `⊙₀`.
pub fn bk_product(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    if !same_space(a.parabolic(), b.parabolic()) {
        return Err(Error::SpaceMismatch);
    }
    let p = a.parabolic();
    let mut out = CohomologyClass::zero(p);
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            for (w, d) in bk_structure_constants(p, u, v)? {
                out.add_term(w, cu * cv * d);
            }
        }
    }
    Ok(out)
}

/// Eigenvalue statistics of the tangent space `T = 𝔤/𝔭` under `λ̇`.
///
/// `d[i] = #{β ∈ R⁻ \ R_P⁻ : <λ̇, β> = i}` and `delta[i] = d[i] − dim T_w^i`
/// where `T_w` is spanned by the root spaces of `β ∈ R⁻ \ R_P⁻` with
/// `w(β) ∈ R⁺`. Keys are negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimVectors {
    pub d: BTreeMap<i64, u32>,
    pub delta: BTreeMap<i64, u32>,
}

impl DimVectors {
    pub fn total(&self) -> u32 {
        self.d.values().sum()
    }

    pub fn codim(&self) -> u32 {
        self.delta.values().sum()
    }

    /// `Σ i·δ^i`.
    pub fn weighted_codim(&self) -> i64 {
        self.delta.iter().map(|(&i, &c)| i * c as i64).sum()
    }

    /// `{"-1": [d, delta], …}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (&i, &d) in &self.d {
            m.insert(i.to_string(), json!([d, self.delta.get(&i).copied().unwrap_or(0)]));
        }
        Value::Object(m)
    }
}

pub fn dim_vectors(parabolic: &ParabolicDatum, i: usize) -> DimVectors {
    let d = parabolic.datum();
    let w = parabolic.element(i);
    let lambda = parabolic.lambda();
    let mut dv = BTreeMap::new();
    let mut delta = BTreeMap::new();
    for &b in parabolic.nonlevi_roots() {
        let beta = &d.positive_roots()[b];
        let level = -d.pair_root(lambda, beta).expect("same datum");
        *dv.entry(level).or_insert(0) += 1;
        let e = delta.entry(level).or_insert(0);
        // -β lies in T_w iff w(β) < 0; it contributes to delta otherwise
        if w.sends_positive(&beta.0) {
            *e += 1;
        }
    }
    DimVectors { d: dv, delta }
}

/// Levi-movability through characters: true iff
/// `χ̃_{w̃}(λ̇) = χ_w(i(λ̇))`. The caller guarantees `d_w^{w̃} ≠ 0`; a
/// negative gap then contradicts the general inequality and is reported.
pub fn levi_movable_char(branching: &Branching, w: usize, w_tilde: usize) -> Result<bool> {
    let gap = branching.char_gap(w, w_tilde);
    if gap < 0 {
        return Err(Error::Inconsistent(format!(
            "character gap {gap} < 0 for a pair with nonzero branching coefficient"
        )));
    }
    Ok(gap == 0)
}

/// Levi-movability through eigenvalue dimension vectors:
/// `Dim(T̃) = CoDim(T̃_{w̃^∨}) + CoDim(T_w)` componentwise. Must agree with
/// [`levi_movable_char`]; disagreement is reported as an inconsistency.
pub fn levi_movable_dim(branching: &Branching, w: usize, w_tilde: usize) -> Result<bool> {
    let sub = branching.sub();
    let dt = dim_vectors(sub, sub.dual_index(w_tilde));
    let dw = dim_vectors(branching.ambient(), w);
    let mut levels: Vec<i64> = dt.d.keys().chain(dw.d.keys()).copied().collect();
    levels.sort_unstable();
    levels.dedup();
    let get = |m: &BTreeMap<i64, u32>, i: i64| m.get(&i).copied().unwrap_or(0);
    let holds = levels
        .iter()
        .all(|&i| get(&dt.d, i) == get(&dt.delta, i) + get(&dw.delta, i));
    let by_char = levi_movable_char(branching, w, w_tilde)?;
    if holds != by_char {
        return Err(Error::Inconsistent(format!(
            "dimension test gives {holds} but character test gives {by_char}"
        )));
    }
    Ok(holds)
}

/// One class of the Azad–Barry–Seitz partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsClass {
    /// Coefficients on `Δ \ Δ(P)`, in increasing node order.
    pub key: Vec<i64>,
    /// Indices into the positive roots.
    pub roots: Vec<usize>,
}

/// Groups `R⁺ \ R_P⁺` by the coefficient vector on `Δ \ Δ(P)`.
pub fn abs_partition(parabolic: &ParabolicDatum) -> Vec<AbsClass> {
    let d = parabolic.datum();
    let nodes: Vec<usize> = (0..d.rank())
        .filter(|k| !parabolic.delta_p().contains(k))
        .collect();
    let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for &b in parabolic.nonlevi_roots() {
        let key = nodes.iter().map(|&k| d.positive_roots()[b].0[k]).collect();
        classes.entry(key).or_default().push(b);
    }
    classes
        .into_iter()
        .map(|(key, roots)| AbsClass { key, roots })
        .collect()
}

/// Comparison of the ABS classes with the `λ̇`-level sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsReport {
    pub classes: Vec<AbsClass>,
    /// `<λ̇, β>` ↦ roots at that level.
    pub levels: BTreeMap<i64, Vec<usize>>,
    /// Every class lies inside one level set.
    pub refines: bool,
    /// Classes and level sets coincide.
    pub equal: bool,
}

pub fn abs_levels_check(parabolic: &ParabolicDatum) -> AbsReport {
    let d = parabolic.datum();
    let classes = abs_partition(parabolic);
    let mut levels: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &b in parabolic.nonlevi_roots() {
        let l = d
            .pair_root(parabolic.lambda(), &d.positive_roots()[b])
            .expect("same datum");
        levels.entry(l).or_default().push(b);
    }
    let level_of = |b: usize| {
        d.pair_root(parabolic.lambda(), &d.positive_roots()[b])
            .expect("same datum")
    };
    let refines = classes
        .iter()
        .all(|c| c.roots.iter().all(|&b| level_of(b) == level_of(c.roots[0])));
    let equal = refines && classes.len() == levels.len();
    AbsReport {
        classes,
        levels,
        refines,
        equal,
    }
}

/// A coweight with the given non-Levi nodes whose pairing separates all
/// coefficient vectors of roots (base-3 weights; root coefficients are at
/// most 2 in classical types).
pub fn generic_lambda(datum: &RootDatum, non_levi: &[usize]) -> Coweight {
    let mut v = vec![0i64; datum.rank()];
    for (j, &k) in non_levi.iter().enumerate() {
        v[k] = 3i64.pow(j as u32);
    }
    Coweight(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Series;

    fn par(series: Series, rank: usize, lambda: Vec<i64>) -> Arc<ParabolicDatum> {
        let d = Arc::new(RootDatum::new(series, rank).unwrap());
        Arc::new(ParabolicDatum::new(d, Coweight(lambda)).unwrap())
    }

    #[test]
    fn chi_examples() {
        let p = par(Series::A, 2, vec![2, 2]);
        let w0 = p.w0().clone();
        assert_eq!(chi(&p, &w0).unwrap(), Weight(vec![0, 0]));
        for k in 0..2 {
            let s = WeylElement::simple(p.datum(), k).unwrap();
            let w = w0.compose(p.datum(), &s);
            let i = p.require_index(&w).unwrap();
            assert_eq!(chi_root(&p, i), p.datum().simple_root(k));
            assert_eq!(chi_value(&p, i), 2);
        }
        let q = par(Series::B, 3, vec![0, 1, 0]);
        assert_eq!(chi_value(&q, q.unit_index()), 0);
        for i in 0..q.len() {
            assert!(chi_value(&q, i) >= 0);
        }
    }

    #[test]
    fn a2_flag_has_positive_exponents() {
        let p = par(Series::A, 2, vec![1, 1]);
        let s1 = WeylElement::simple(p.datum(), 0).unwrap();
        let u = p.require_index(&p.w0().compose(p.datum(), &s1)).unwrap();
        let prod = deformed_product(&TauClass::basis(&p, u).unwrap(), &TauClass::basis(&p, u).unwrap())
            .unwrap();
        assert!(prod.terms().any(|((_, e), _)| e > 0));
        let cup = crate::schubert::cup_product(
            &CohomologyClass::basis(&p, u).unwrap(),
            &CohomologyClass::basis(&p, u).unwrap(),
        )
        .unwrap();
        assert_eq!(prod.at_one(), cup);
    }

    #[test]
    fn dim_vector_invariants() {
        let p = par(Series::B, 3, vec![1, 1, 1]);
        for i in 0..p.len() {
            let dv = dim_vectors(&p, i);
            assert_eq!(dv.total() as usize, p.dim());
            assert_eq!(dv.codim() as usize, p.codim(i));
            for (k, &x) in &dv.delta {
                assert!(x <= dv.d[k]);
            }
            assert_eq!(dv.weighted_codim(), -chi_value(&p, i));
        }
        let e = dim_vectors(&p, p.point_index());
        assert_eq!(e.d, e.delta);
        assert!(dim_vectors(&p, p.unit_index()).delta.values().all(|&x| x == 0));
        let heights: i64 = p.datum().positive_roots().iter().map(|r| r.height()).max().unwrap();
        assert_eq!(*e.d.keys().next().unwrap(), -heights);
    }

    #[test]
    fn abs_examples() {
        let g = par(Series::A, 3, vec![0, 1, 0]);
        let parts = abs_partition(&g);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].roots.len(), 4);
        let p2 = par(Series::A, 2, vec![1, 0]);
        assert_eq!(abs_partition(&p2).len(), 1);
        assert!(abs_levels_check(&p2).equal);
        let b = par(Series::A, 3, vec![1, 1, 1]);
        assert!(abs_partition(&b).iter().all(|c| c.roots.len() == 1));
        let nongeneric = abs_levels_check(&par(Series::A, 3, vec![1, 0, 1]));
        assert!(nongeneric.refines && !nongeneric.equal);
        let generic = abs_levels_check(&par(Series::A, 3, vec![1, 0, 5]));
        assert!(generic.equal);
    }

    #[test]
    fn json_shapes() {
        let p = par(Series::A, 1, vec![1]);
        let t = TauClass::basis(&p, 0).unwrap();
        assert_eq!(t.to_json(), json!([{"w": "e", "tau": 0, "coeff": 1}]));
        assert_eq!(dim_vectors(&p, 0).to_json(), json!({"-1": [1, 1]}));
    }
}
