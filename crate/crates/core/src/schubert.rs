//! Cup-product structure constants of `H*(G/P)` in the shifted Schubert
//! basis `[Λ_w]`, `w ∈ W^P`.
//!
//! Internally everything is computed in the opposite-Schubert basis
//! `σ^x = [closure of B⁻xP/P]` (codimension `ℓ(x)`), where the Chevalley
//! formula has its textbook form. The two bases are related by
//! `[Λ_w] = σ^{w^∨}`; see [`sigma_index`].
//!
//! Products on `G/B` are computed by writing each `σ^y` as a rational
//! combination of `σ^{s_k}·σ^{y'}` with `ℓ(y') = ℓ(y) − 1` (the rational
//! cohomology of `G/B` is generated in degree two) and recursing. Constants
//! for `G/P` are read off inside `G/B`: the pullback sends `σ_P^x` to
//! `σ_B^x` for `x ∈ W^P`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Series};
use crate::weyl::{enumerate_weyl, ParabolicDatum, WeylElement};

/// Largest Weyl group handled by the multiplication engine.
pub const ENGINE_CAP: usize = 10_000;

/// An integer combination of Schubert classes `[Λ_w]` on one `G/P`.
#[derive(Clone)]
pub struct CohomologyClass {
    parabolic: Arc<ParabolicDatum>,
    coeffs: BTreeMap<usize, i64>,
}

impl fmt::Debug for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohomologyClass({})", self.render())
    }
}

impl PartialEq for CohomologyClass {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.parabolic, &other.parabolic) && self.coeffs == other.coeffs
    }
}

impl Eq for CohomologyClass {}

/// Whether two parabolics describe the same flag variety.
pub fn same_space(a: &ParabolicDatum, b: &ParabolicDatum) -> bool {
    std::ptr::eq(a, b) || (a.datum() == b.datum() && a.delta_p() == b.delta_p())
}

impl CohomologyClass {
    pub fn zero(parabolic: &Arc<ParabolicDatum>) -> Self {
        CohomologyClass {
            parabolic: parabolic.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis class `[Λ_w]` for the `i`-th element of `W^P`.
    pub fn basis(parabolic: &Arc<ParabolicDatum>, i: usize) -> Result<Self> {
        if i >= parabolic.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: parabolic.len(),
            });
        }
        let mut c = Self::zero(parabolic);
        c.coeffs.insert(i, 1);
        Ok(c)
    }

    pub fn of_element(parabolic: &Arc<ParabolicDatum>, w: &WeylElement) -> Result<Self> {
        Self::basis(parabolic, parabolic.require_index(w)?)
    }

    /// `[Λ_{w₀w_P}]`.
    pub fn unit(parabolic: &Arc<ParabolicDatum>) -> Self {
        Self::basis(parabolic, parabolic.unit_index()).expect("unit index")
    }

    /// `[Λ_e]`.
    pub fn point(parabolic: &Arc<ParabolicDatum>) -> Self {
        Self::basis(parabolic, parabolic.point_index()).expect("point index")
    }

    pub fn from_terms(
        parabolic: &Arc<ParabolicDatum>,
        terms: impl IntoIterator<Item = (usize, i64)>,
    ) -> Self {
        let mut c = Self::zero(parabolic);
        for (i, d) in terms {
            c.add_term(i, d);
        }
        c
    }

    pub fn parabolic(&self) -> &Arc<ParabolicDatum> {
        &self.parabolic
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_space(&self.parabolic, &other.parabolic) {
            return Err(Error::SpaceMismatch);
        }
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(&self.parabolic, self.terms().map(|(i, c)| (i, c * k)))
    }

    /// Codimensions occurring in the support.
    pub fn codims(&self) -> BTreeSet<usize> {
        self.coeffs.keys().map(|&i| self.parabolic.codim(i)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.codims().len() <= 1
    }

    /// Common codimension of a nonzero homogeneous class.
    pub fn codim(&self) -> Option<usize> {
        let c = self.codims();
        if c.len() == 1 {
            c.into_iter().next()
        } else {
            None
        }
    }

    /// Text form such as `2·[Λ_s1s2] + [Λ_e]`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let d = self.parabolic.datum();
        self.coeffs
            .iter()
            .map(|(&i, &c)| {
                let word = self.parabolic.element(i).word_string(d);
                if c == 1 {
                    format!("[Λ_{word}]")
                } else {
                    format!("{c}·[Λ_{word}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let d = self.parabolic.datum();
        Value::Array(
            self.coeffs
                .iter()
                .map(|(&i, &c)| {
                    json!({"w": self.parabolic.element(i).word_string(d), "coeff": c})
                })
                .collect(),
        )
    }
}

/// The basis dictionary: `[Λ_w]` equals `σ^{w^∨}`, so the `W^P` index of
/// the σ-label of the `i`-th Λ-class is the index of `w^∨`. The map is an
/// involution, so it also converts σ-labels back to Λ-labels.
pub fn sigma_index(parabolic: &ParabolicDatum, i: usize) -> usize {
    parabolic.dual_index(i)
}

/// Multiplication by the divisor class `[Λ_{s_k^∨}] = σ^{s_k}` via the
/// Chevalley formula `σ^{s_k}·σ^x = Σ <ω_k, β^∨> σ^{x s_β}` over positive
/// roots `β` with `ℓ(x s_β) = ℓ(x) + 1` and `x s_β ∈ W^P`.
pub fn chevalley_multiply(
    parabolic: &Arc<ParabolicDatum>,
    k: usize,
    c: &CohomologyClass,
) -> Result<CohomologyClass> {
    if !same_space(parabolic, &c.parabolic) {
        return Err(Error::SpaceMismatch);
    }
    parabolic.divisor_index(k)?;
    let d = parabolic.datum();
    let reflections: Vec<(WeylElement, i64)> = (0..d.positive_roots().len())
        .filter(|&b| d.coroot(b)[k] != 0)
        .map(|b| (WeylElement::reflection(d, b), d.coroot(b)[k]))
        .collect();
    let mut out = CohomologyClass::zero(parabolic);
    for (i, coeff) in c.terms() {
        let xi = sigma_index(parabolic, i);
        let x = parabolic.element(xi);
        for (s, m) in &reflections {
            let z = x.compose(d, s);
            if z.length() != x.length() + 1 {
                continue;
            }
            if let Some(j) = parabolic.index_of(&z) {
                out.add_term(sigma_index(parabolic, j), coeff * m);
            }
        }
    }
    Ok(out)
}

/// Representation of `σ^y` as `Σ num·σ^{s_k}σ^{y'} / den`.
struct Rep {
    terms: Vec<(usize, u32, i128)>,
    den: i128,
}

/// Product engine for `H*(G/B)` of one simple root system.
struct Engine {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, u32>,
    chevalley: Vec<Vec<Vec<(u32, i64)>>>,
    reps: Vec<Rep>,
    top: usize,
    memo: Mutex<HashMap<(u32, u32), Arc<Vec<(u32, i64)>>>>,
}

type Sparse = HashMap<u32, i128>;

impl Engine {
    fn new(datum: &RootDatum) -> Result<Self> {
        let order = datum.weyl_order();
        if order > ENGINE_CAP as u128 {
            return Err(Error::WeylOrderCap {
                order,
                cap: ENGINE_CAP,
            });
        }
        let elements = enumerate_weyl(datum)?;
        let index: HashMap<Vec<i64>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.matrix().to_vec(), i as u32))
            .collect();
        let rank = datum.rank();
        let nroots = datum.positive_roots().len();
        let reflections: Vec<WeylElement> = (0..nroots)
            .map(|b| WeylElement::reflection(datum, b))
            .collect();

        // chevalley[k][x]: expansion of σ^{s_k}·σ^x
        let mut chevalley = vec![vec![Vec::new(); elements.len()]; rank];
        for (xi, x) in elements.iter().enumerate() {
            for (b, s) in reflections.iter().enumerate() {
                let zi = index[&x.product_matrix(s)];
                if elements[zi as usize].length() != x.length() + 1 {
                    continue;
                }
                for (k, row) in chevalley.iter_mut().enumerate() {
                    let m = datum.coroot(b)[k];
                    if m != 0 {
                        row[xi].push((zi, m));
                    }
                }
            }
        }

        let top = nroots;
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        for (i, w) in elements.iter().enumerate() {
            levels[w.length()].push(i);
        }
        let mut reps: Vec<Option<Rep>> = (0..elements.len()).map(|_| None).collect();
        reps[0] = Some(Rep {
            terms: Vec::new(),
            den: 1,
        });
        for c in 1..=top {
            let level = &levels[c];
            let pos: HashMap<usize, usize> =
                level.iter().enumerate().map(|(p, &i)| (i, p)).collect();
            let m = level.len();
            // candidate columns, ascent-type (y' s_k ∈ level) first
            let mut candidates: Vec<(usize, u32)> = Vec::new();
            for &yp in &levels[c - 1] {
                for k in 0..rank {
                    let up = elements[yp].right_multiply_simple(datum, k);
                    if up.length() > elements[yp].length() {
                        candidates.push((k, yp as u32));
                    }
                }
            }
            for &yp in &levels[c - 1] {
                for k in 0..rank {
                    let up = elements[yp].right_multiply_simple(datum, k);
                    if up.length() < elements[yp].length() && !chevalley[k][yp].is_empty() {
                        candidates.push((k, yp as u32));
                    }
                }
            }
            let column = |&(k, yp): &(usize, u32)| -> Vec<BigRational> {
                let mut v = vec![BigRational::zero(); m];
                for &(z, coef) in &chevalley[k][yp as usize] {
                    v[pos[&(z as usize)]] += BigRational::from_integer(BigInt::from(coef));
                }
                v
            };
            // greedy choice of an independent set of columns
            let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
            let mut chosen: Vec<(usize, u32)> = Vec::new();
            for cand in &candidates {
                if chosen.len() == m {
                    break;
                }
                let mut v = column(cand);
                for (p, row) in &echelon {
                    if !v[*p].is_zero() {
                        let f = &v[*p] / &row[*p];
                        for j in 0..m {
                            let t = &f * &row[j];
                            v[j] -= t;
                        }
                    }
                }
                if let Some(p) = (0..m).find(|&j| !v[j].is_zero()) {
                    echelon.push((p, v));
                    chosen.push(*cand);
                }
            }
            if chosen.len() != m {
                return Err(Error::Inconsistent(format!(
                    "degree-two classes do not span level {c} of {}",
                    datum.label()
                )));
            }
            let mut mat = vec![vec![BigRational::zero(); m]; m];
            for (j, cand) in chosen.iter().enumerate() {
                for (row, val) in column(cand).into_iter().enumerate() {
                    mat[row][j] = val;
                }
            }
            let inv = crate::linalg::invert(&mat).ok_or_else(|| {
                Error::Inconsistent("singular Chevalley matrix".into())
            })?;
            for (p, &y) in level.iter().enumerate() {
                let coeffs: Vec<BigRational> = (0..m).map(|j| inv[j][p].clone()).collect();
                let den = coeffs
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let mut terms = Vec::new();
                for (j, x) in coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let num = (x * BigRational::from_integer(den.clone())).to_integer();
                    let num = num.to_i128().ok_or_else(|| {
                        Error::Inconsistent("coefficient overflow in Chevalley inverse".into())
                    })?;
                    terms.push((chosen[j].0, chosen[j].1, num));
                }
                let den = den.to_i128().ok_or_else(|| {
                    Error::Inconsistent("denominator overflow in Chevalley inverse".into())
                })?;
                reps[y] = Some(Rep { terms, den });
            }
        }
        Ok(Engine {
            elements,
            index,
            chevalley,
            reps: reps.into_iter().map(|r| r.expect("every level solved")).collect(),
            top,
            memo: Mutex::new(HashMap::new()),
        })
    }

    fn apply_chevalley(&self, k: usize, v: &[(u32, i64)], scale: i128, acc: &mut Sparse) -> Result<()> {
        for &(x, c) in v {
            for &(z, m) in &self.chevalley[k][x as usize] {
                let add = scale
                    .checked_mul(c as i128 * m as i128)
                    .ok_or_else(|| Error::Inconsistent("overflow in product recursion".into()))?;
                *acc.entry(z).or_insert(0) += add;
            }
        }
        Ok(())
    }

    /// `σ^x · σ^y` as a sparse list sorted by index.
    fn product(&self, x: u32, y: u32) -> Result<Arc<Vec<(u32, i64)>>> {
        let (x, y) = if self.elements[x as usize].length() >= self.elements[y as usize].length() {
            (x, y)
        } else {
            (y, x)
        };
        if let Some(r) = self.memo.lock().expect("memo lock").get(&(x, y)) {
            return Ok(r.clone());
        }
        let lx = self.elements[x as usize].length();
        let ly = self.elements[y as usize].length();
        let result: Vec<(u32, i64)> = if ly == 0 {
            vec![(x, 1)]
        } else if lx + ly > self.top {
            Vec::new()
        } else {
            let rep = &self.reps[y as usize];
            let mut acc: Sparse = HashMap::new();
            for &(k, yp, num) in &rep.terms {
                let inner = self.product(x, yp)?;
                self.apply_chevalley(k, &inner, num, &mut acc)?;
            }
            let mut out = Vec::new();
            for (z, v) in acc {
                if v == 0 {
                    continue;
                }
                if v % rep.den != 0 {
                    return Err(Error::NonIntegral(format!("{v}/{}", rep.den)));
                }
                let q = i64::try_from(v / rep.den)
                    .map_err(|_| Error::Inconsistent("structure constant overflow".into()))?;
                out.push((z, q));
            }
            out.sort_unstable();
            out
        };
        let result = Arc::new(result);
        self.memo
            .lock()
            .expect("memo lock")
            .insert((x, y), result.clone());
        Ok(result)
    }

    fn index_of(&self, w: &WeylElement) -> Result<u32> {
        self.index
            .get(w.matrix())
            .copied()
            .ok_or_else(|| Error::Invalid("element does not belong to this Weyl group".into()))
    }
}

fn engines() -> &'static Mutex<HashMap<(Series, usize), Arc<Engine>>> {
    static ENGINES: OnceLock<Mutex<HashMap<(Series, usize), Arc<Engine>>>> = OnceLock::new();
    ENGINES.get_or_init(|| Mutex::new(HashMap::new()))
}

fn engine(series: Series, rank: usize) -> Result<(Arc<Engine>, RootDatum)> {
    let datum = RootDatum::new(series, rank)?;
    let mut map = engines().lock().expect("engine registry lock");
    if let Some(e) = map.get(&(series, rank)) {
        return Ok((e.clone(), datum));
    }
    let e = Arc::new(Engine::new(&datum)?);
    map.insert((series, rank), e.clone());
    Ok((e, datum))
}

/// `σ^x · σ^y` in `H*(G/B)` as `(z, c_{x,y}^z)` pairs; product data are
/// handled factor by factor.
pub fn sigma_product(
    datum: &RootDatum,
    x: &WeylElement,
    y: &WeylElement,
) -> Result<Vec<(WeylElement, i64)>> {
    if x.rank() != datum.rank() || y.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            got: x.rank().min(y.rank()),
        });
    }
    let mut partial: Vec<(Vec<WeylElement>, i64)> = vec![(Vec::new(), 1)];
    for f in datum.factors() {
        let (eng, fd) = engine(f.series, f.rank)?;
        let xf = if datum.is_simple() {
            x.clone()
        } else {
            x.restrict(&fd, f.offset)
        };
        let yf = if datum.is_simple() {
            y.clone()
        } else {
            y.restrict(&fd, f.offset)
        };
        let prod = eng.product(eng.index_of(&xf)?, eng.index_of(&yf)?)?;
        let mut next = Vec::new();
        for (parts, c) in &partial {
            for &(z, d) in prod.iter() {
                let mut p = parts.clone();
                p.push(eng.elements[z as usize].clone());
                next.push((p, c * d));
            }
        }
        partial = next;
    }
    let mut out: Vec<(WeylElement, i64)> = partial
        .into_iter()
        .map(|(parts, c)| {
            if parts.len() == 1 {
                (parts.into_iter().next().expect("one factor"), c)
            } else {
                let refs: Vec<&WeylElement> = parts.iter().collect();
                (WeylElement::block_diagonal(datum, &refs), c)
            }
        })
        .collect();
    out.sort();
    Ok(out)
}

type RingMemo = Mutex<HashMap<(usize, usize), Arc<Vec<(usize, i64)>>>>;

fn ring_memo(parabolic: &ParabolicDatum) -> Arc<RingMemo> {
    static RINGS: OnceLock<Mutex<HashMap<(String, Vec<usize>), Arc<RingMemo>>>> = OnceLock::new();
    let key = (parabolic.datum().label(), parabolic.delta_p().to_vec());
    RINGS
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("ring registry lock")
        .entry(key)
        .or_insert_with(|| Arc::new(Mutex::new(HashMap::new())))
        .clone()
}

/// Seeds the in-memory product table of a parabolic (used by the cache).
pub(crate) fn install_products(
    parabolic: &ParabolicDatum,
    table: impl IntoIterator<Item = ((usize, usize), Vec<(usize, i64)>)>,
) {
    let memo = ring_memo(parabolic);
    let mut m = memo.lock().expect("ring memo lock");
    for (k, v) in table {
        m.insert(k, Arc::new(v));
    }
}

/// `d_{u,v}^w` for all `w`, where `[Λ_u]·[Λ_v] = Σ d_{u,v}^w [Λ_w]`; indices
/// refer to `parabolic.minimal_reps()`.
pub fn structure_constants(
    parabolic: &ParabolicDatum,
    u: usize,
    v: usize,
) -> Result<Arc<Vec<(usize, i64)>>> {
    for i in [u, v] {
        if i >= parabolic.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: parabolic.len(),
            });
        }
    }
    let key = (u.min(v), u.max(v));
    let memo = ring_memo(parabolic);
    if let Some(r) = memo.lock().expect("ring memo lock").get(&key) {
        return Ok(r.clone());
    }
    let x = parabolic.element(sigma_index(parabolic, u));
    let y = parabolic.element(sigma_index(parabolic, v));
    let mut out = Vec::new();
    for (z, c) in sigma_product(parabolic.datum(), x, y)? {
        let j = parabolic.index_of(&z).ok_or_else(|| {
            Error::Inconsistent("product of W^P classes left the W^P span".into())
        })?;
        out.push((sigma_index(parabolic, j), c));
    }
    out.sort_unstable();
    let out = Arc::new(out);
    memo.lock().expect("ring memo lock").insert(key, out.clone());
    Ok(out)
}

/// Structure constants keyed by Weyl elements rather than indices.
pub fn structure_constants_of(
    parabolic: &ParabolicDatum,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<Vec<(WeylElement, i64)>> {
    let ui = parabolic.require_index(u)?;
    let vi = parabolic.require_index(v)?;
    Ok(structure_constants(parabolic, ui, vi)?
        .iter()
        .map(|&(w, d)| (parabolic.element(w).clone(), d))
        .collect())
}

/// The cup product of two classes.
pub fn cup_product(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    if !same_space(&a.parabolic, &b.parabolic) {
        return Err(Error::SpaceMismatch);
    }
    let p = &a.parabolic;
    let mut out = CohomologyClass::zero(p);
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            for &(w, d) in structure_constants(p, u, v)?.iter() {
                out.add_term(w, cu * cv * d);
            }
        }
    }
    Ok(out)
}

/// All products of a parabolic as `((u, v), [(w, d)])` with `u ≤ v`.
pub fn product_table(parabolic: &ParabolicDatum) -> Result<Vec<((usize, usize), Vec<(usize, i64)>)>> {
    let n = parabolic.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u..n {
            if parabolic.codim(u) + parabolic.codim(v) > parabolic.dim() {
                continue;
            }
            out.push(((u, v), structure_constants(parabolic, u, v)?.to_vec()));
        }
    }
    Ok(out)
}

/// Polynomials in `x_1, …, x_n` with integer coefficients.
type Poly = HashMap<Vec<u8>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Divided difference `∂_i f = (f − s_i f)/(x_i − x_{i+1})`, 0-based `i`.
fn divided_difference(f: &Poly, i: usize) -> Poly {
    let mut out: Poly = HashMap::new();
    for (e, &c) in f {
        let (p, q) = (e[i], e[i + 1]);
        if p == q {
            continue;
        }
        let (lo, hi, sign) = if p > q { (q, p, 1) } else { (p, q, -1) };
        for j in 0..hi - lo {
            let mut m = e.clone();
            m[i] = hi - 1 - j;
            m[i + 1] = lo + j;
            if sign < 0 {
                m.swap(i, i + 1);
            }
            *out.entry(m).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn perm_length(w: &[usize]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// Letters `i` (0-based) such that applying `∂_{i}` in the listed order to
/// `S_w` reaches `S_e`.
fn descent_sequence(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut seq = Vec::new();
    while let Some(i) = (0..w.len() - 1).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        seq.push(i);
    }
    seq
}

fn schubert_polynomials(n: usize) -> Arc<HashMap<Vec<usize>, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HashMap<Vec<usize>, Poly>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("oracle lock").get(&n) {
        return p.clone();
    }
    let w0: Vec<usize> = (1..=n).rev().collect();
    let top: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
    let mut polys: HashMap<Vec<usize>, Poly> = HashMap::new();
    polys.insert(w0.clone(), HashMap::from([(top, 1)]));
    let mut stack = vec![w0];
    while let Some(w) = stack.pop() {
        for i in 0..n - 1 {
            if w[i] > w[i + 1] {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if !polys.contains_key(&v) {
                    let p = divided_difference(&polys[&w], i);
                    polys.insert(v.clone(), p);
                    stack.push(v);
                }
            }
        }
    }
    let polys = Arc::new(polys);
    cache.lock().expect("oracle lock").insert(n, polys.clone());
    polys
}

/// Schubert-polynomial oracle for type A flag varieties: the coefficient of
/// `S_w` in `S_u·S_v`, read off as the constant term of `∂_w(S_u S_v)`.
/// Permutations are one-line and 1-based.
pub fn schubert_polynomial_constants_perm(u: &[usize], v: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let n = u.len();
    let polys = schubert_polynomials(n);
    let f = poly_mul(&polys[u], &polys[v]);
    let target = perm_length(u) + perm_length(v);
    let mut out = Vec::new();
    let mut keys: Vec<&Vec<usize>> = polys.keys().filter(|w| perm_length(w) == target).collect();
    keys.sort();
    for w in keys {
        let mut g = f.clone();
        for i in descent_sequence(w) {
            g = divided_difference(&g, i);
            if g.is_empty() {
                break;
            }
        }
        let c = g.get(&vec![0u8; n]).copied().unwrap_or(0);
        if c != 0 {
            out.push((w.clone(), c));
        }
    }
    out
}

/// The oracle on Weyl elements of a simple type A datum, in the σ-basis:
/// the result is `c_{u,v}^w` with `σ^u·σ^v = Σ c_{u,v}^w σ^w`.
pub fn schubert_polynomial_constants(
    datum: &RootDatum,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<Vec<(WeylElement, i64)>> {
    if datum.series() != Some(Series::A) {
        return Err(Error::Unsupported(
            "the Schubert polynomial oracle needs a simple type A datum".into(),
        ));
    }
    let pu = u.one_line_type_a(datum)?;
    let pv = v.one_line_type_a(datum)?;
    let mut out = Vec::new();
    for (w, c) in schubert_polynomial_constants_perm(&pu, &pv) {
        out.push((WeylElement::from_one_line_type_a(datum, &w)?, c));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Coweight;

    fn par(series: Series, rank: usize, non_levi: &[usize]) -> Arc<ParabolicDatum> {
        let d = Arc::new(RootDatum::new(series, rank).unwrap());
        Arc::new(ParabolicDatum::from_complement(d, non_levi).unwrap())
    }

    #[test]
    fn divided_differences() {
        let x1: Poly = HashMap::from([(vec![1, 0, 0], 1)]);
        let d = divided_difference(&x1, 0);
        assert_eq!(d, HashMap::from([(vec![0, 0, 0], 1)]));
        let x2sq: Poly = HashMap::from([(vec![0, 2, 0], 1)]);
        let d = divided_difference(&x2sq, 0);
        assert_eq!(d, HashMap::from([(vec![1, 0, 0], -1), (vec![0, 1, 0], -1)]));
        let polys = schubert_polynomials(3);
        assert_eq!(polys[&vec![1, 3, 2]], HashMap::from([(vec![1, 0, 0], 1), (vec![0, 1, 0], 1)]));
        assert_eq!(polys[&vec![1, 2, 3]], HashMap::from([(vec![0, 0, 0], 1)]));
    }

    #[test]
    fn monk_square_in_s3() {
        let c = schubert_polynomial_constants_perm(&[2, 1, 3], &[2, 1, 3]);
        assert_eq!(c, vec![(vec![3, 1, 2], 1)]);
        let c = schubert_polynomial_constants_perm(&[2, 1, 3], &[1, 3, 2]);
        assert_eq!(c, vec![(vec![2, 3, 1], 1), (vec![3, 1, 2], 1)]);
    }

    #[test]
    fn unit_and_point() {
        let p = par(Series::A, 2, &[0, 1]);
        let unit = CohomologyClass::unit(&p);
        for i in 0..p.len() {
            let b = CohomologyClass::basis(&p, i).unwrap();
            assert_eq!(cup_product(&unit, &b).unwrap(), b);
        }
        assert_eq!(p.codim(p.point_index()), p.dim());
        assert_eq!(p.codim(p.unit_index()), 0);
    }

    #[test]
    fn grassmannian_gr24() {
        let p = par(Series::A, 3, &[1]);
        let sigma1 = CohomologyClass::basis(&p, p.divisor_index(1).unwrap()).unwrap();
        let sq = cup_product(&sigma1, &sigma1).unwrap();
        assert_eq!(sq.len(), 2);
        assert!(sq.terms().all(|(i, c)| c == 1 && p.codim(i) == 2));
        let via_chevalley = chevalley_multiply(&p, 1, &sigma1).unwrap();
        assert_eq!(via_chevalley, sq);
        assert!(chevalley_multiply(&p, 0, &sigma1).is_err());
    }

    #[test]
    fn poincare_duality() {
        for (s, r, nl) in [
            (Series::A, 3, vec![0, 1, 2]),
            (Series::B, 2, vec![0, 1]),
            (Series::C, 3, vec![2]),
            (Series::D, 4, vec![0]),
        ] {
            let p = par(s, r, &nl);
            for u in 0..p.len() {
                for v in 0..p.len() {
                    let d: i64 = structure_constants(&p, u, v)
                        .unwrap()
                        .iter()
                        .filter(|(w, _)| *w == p.point_index())
                        .map(|(_, d)| *d)
                        .sum();
                    let expected = if v == p.dual_index(u) { 1 } else { 0 };
                    assert_eq!(d, expected, "{s}{r} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn chevalley_matches_products_in_b3() {
        let p = par(Series::B, 3, &[0, 1, 2]);
        for k in 0..3 {
            let div = p.divisor_index(k).unwrap();
            for v in 0..p.len() {
                let c = CohomologyClass::basis(&p, v).unwrap();
                let lhs = chevalley_multiply(&p, k, &c).unwrap();
                let rhs = cup_product(&CohomologyClass::basis(&p, div).unwrap(), &c).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn product_datum_factorises() {
        let d = Arc::new(RootDatum::product_of(&[(Series::A, 1), (Series::A, 2)]).unwrap());
        let p = Arc::new(ParabolicDatum::new(d, Coweight(vec![1, 1, 0])).unwrap());
        assert_eq!(p.len(), 6);
        let unit = CohomologyClass::unit(&p);
        for i in 0..p.len() {
            let b = CohomologyClass::basis(&p, i).unwrap();
            assert_eq!(cup_product(&b, &unit).unwrap(), b);
        }
        let total: i64 = (0..p.len())
            .flat_map(|u| {
                let p = p.clone();
                (0..p.len()).map(move |v| (u, v, p.clone()))
            })
            .map(|(u, v, p)| {
                structure_constants(&p, u, v)
                    .unwrap()
                    .iter()
                    .filter(|(w, _)| *w == p.point_index())
                    .count() as i64
            })
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn oracle_matches_engine_on_s4() {
        let d = RootDatum::new(Series::A, 3).unwrap();
        let all = enumerate_weyl(&d).unwrap();
        for u in &all {
            for v in &all {
                assert_eq!(
                    sigma_product(&d, u, v).unwrap(),
                    schubert_polynomial_constants(&d, u, v).unwrap()
                );
            }
        }
    }

    #[test]
    fn rendering() {
        let p = par(Series::A, 1, &[0]);
        assert_eq!(CohomologyClass::point(&p).render(), "[Λ_e]");
        assert_eq!(CohomologyClass::unit(&p).scale(2).render(), "2·[Λ_s1]");
        assert_eq!(CohomologyClass::zero(&p).render(), "0");
    }
}
