//! Acceptance checks for `bkschubert`: the worked examples for principal,
//! tensor and odd orthogonal embeddings, the homomorphism property of `φ⊙`
//! on diagonal embeddings, agreement with independent oracles, and the
//! eigencone and ABS suites. Each criterion collects individual checks and
//! reports every mismatch.

use std::fmt::Debug;
use std::sync::Arc;
use std::time::Instant;

use bkschubert::bkcalc::{
    abs_levels_check, bk_structure_constants, chi_value, dim_vectors, generic_lambda,
    levi_movable_dim,
};
use bkschubert::branching::{
    hom_check_diagonal, oddorth_fixture, sl2_dynkin_index, Branching, Embedding,
};
use bkschubert::eigencone::{
    cone_contains, diag_membership_oracle, diagonal_a, enumerate_inequalities,
    irredundancy_check, Essential,
};
use bkschubert::error::Result;
use bkschubert::rootdata::{Coweight, RootDatum, Series};
use bkschubert::schubert::{
    cup_product, schubert_polynomial_constants, sigma_product, structure_constants,
    CohomologyClass,
};
use bkschubert::weyl::{enumerate_weyl, ParabolicDatum};
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// One compared quantity.
#[derive(Debug, Clone)]
pub struct Check {
    pub group: String,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

fn check<T: PartialEq + Debug>(group: &str, name: impl Into<String>, expected: T, got: T) -> Check {
    Check {
        group: group.to_string(),
        name: name.into(),
        pass: expected == got,
        expected: show(&expected),
        got: show(&got),
    }
}

/// Debug form without the quotes around strings.
fn show<T: Debug>(x: &T) -> String {
    let s = format!("{x:?}");
    match s.strip_prefix('"').and_then(|t| t.strip_suffix('"')) {
        Some(t) => t.to_string(),
        None => s,
    }
}

fn error_check(group: &str, name: impl Into<String>, err: impl std::fmt::Display) -> Check {
    Check {
        group: group.to_string(),
        name: name.into(),
        expected: "no error".into(),
        got: err.to_string(),
        pass: false,
    }
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub note: String,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            checks: 0,
            failures: Vec::new(),
            note: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, checks: &[Check]) {
        for c in checks {
            self.record(c.pass, || {
                format!("{} {}: expected {}, got {}", c.group, c.name, c.expected, c.got)
            });
        }
    }

    fn fail_on(&mut self, r: Result<()>) {
        if let Err(e) = r {
            self.record(false, || format!("error: {e}"));
        }
    }

    /// `criterion N: PASS (…)` or `criterion N: FAIL (…)`.
    pub fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {}: {verdict} [{}] {} checks",
            self.id, self.title, self.checks
        );
        if !self.note.is_empty() {
            s.push_str(&format!("; {}", self.note));
        }
        if !self.failures.is_empty() {
            s.push_str(&format!("; {} failed: {}", self.failures.len(), self.failures.join(" | ")));
        }
        s
    }
}

/// Identities for the principal `SL₂ → SL_{n+1}`, `1 ≤ n ≤ 6`.
pub fn principal_checks() -> Vec<Check> {
    let g = "principal";
    let mut out = Vec::new();
    for n in 1..=6usize {
        let built = Embedding::principal_sl2(n)
            .and_then(|e| Branching::new(Arc::new(e), Coweight(vec![2])));
        let b = match built {
            Ok(b) => b,
            Err(e) => {
                out.push(error_check(g, format!("n={n}"), e));
                continue;
            }
        };
        let pt = b.sub().point_index();
        let mut m = Vec::new();
        for k in 0..n {
            match b.phi_star_h2(k) {
                Ok(c) => {
                    out.push(check(g, format!("n={n} φ* of divisor {} is a multiple of the point", k + 1), 1, c.len()));
                    m.push(c.coefficient(pt));
                }
                Err(e) => out.push(error_check(g, format!("n={n} k={}", k + 1), e)),
            }
        }
        if m.len() != n {
            continue;
        }
        out.push(check(g, format!("n={n} m_1"), n as i64, m[0]));
        out.push(check(g, format!("n={n} m_n"), n as i64, m[n - 1]));
        let rev: Vec<i64> = m.iter().rev().copied().collect();
        out.push(check(g, format!("n={n} m_k = m_(n+1-k)"), rev, m.clone()));
        let dynkin = sl2_dynkin_index(n);
        out.push(check(g, format!("n={n} Σ m_k = Dynkin index"), dynkin.to_string(), Ratio::from_integer(m.iter().sum::<i64>()).to_string()));
        out.push(check(
            g,
            format!("n={n} χ̃ of the point at λ̇"),
            2,
            chi_value(b.sub(), pt),
        ));
        for k in 0..n {
            let Ok(a) = b.ambient().divisor_index(k) else {
                out.push(error_check(g, format!("n={n} divisor {}", k + 1), "missing"));
                continue;
            };
            out.push(check(g, format!("n={n} χ of divisor {} at i(λ̇)", k + 1), 2, chi_value(b.ambient(), a)));
            out.push(check(g, format!("n={n} gap at divisor {}", k + 1), 0, b.char_gap(a, pt)));
            match (b.phi_odot(a), b.phi_star(a)) {
                (Ok(x), Ok(y)) => out.push(check(g, format!("n={n} φ⊙ = φ* on divisor {}", k + 1), y.render(), x.render())),
                (Err(e), _) | (_, Err(e)) => out.push(error_check(g, format!("n={n} φ⊙ divisor {}", k + 1), e)),
            }
        }
        let unit = b.ambient().unit_index();
        match (b.phi_odot(unit), b.phi_star(unit)) {
            (Ok(x), Ok(y)) => {
                out.push(check(g, format!("n={n} φ⊙ = φ* on the unit"), y.render(), x.render()));
                out.push(check(g, format!("n={n} φ* of the unit"), CohomologyClass::unit(b.sub()).render(), y.render()));
            }
            (Err(e), _) | (_, Err(e)) => out.push(error_check(g, format!("n={n} unit"), e)),
        }
    }
    out
}

/// Character and `H²` identities for `SL_n × SL_n → SL_{n²}`.
pub fn tensor_checks() -> Vec<Check> {
    let g = "tensor";
    let mut out = Vec::new();
    for (n, k, l) in [(2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 2)] {
        let tag = format!("({n},{k},{l})");
        let mut lam = vec![0; 2 * (n - 1)];
        lam[k - 1] = n as i64;
        lam[n - 1 + l - 1] = n as i64;
        let built = Embedding::tensor(n, k, l).and_then(|e| Branching::new(Arc::new(e), Coweight(lam)));
        let b = match built {
            Ok(b) => b,
            Err(e) => {
                out.push(error_check(g, tag, e));
                continue;
            }
        };
        let (Ok(d1), Ok(d2)) = (b.sub().divisor_index(k - 1), b.sub().divisor_index(n - 1 + l - 1)) else {
            out.push(error_check(g, tag, "sub divisors missing"));
            continue;
        };
        let nn = n as i64;
        out.push(check(g, format!("{tag} χ̃ of the first divisor"), nn, chi_value(b.sub(), d1)));
        out.push(check(g, format!("{tag} χ̃ of the second divisor"), nn, chi_value(b.sub(), d2)));
        let (kb, lb) = (n - k, n - l);
        for (m, pair) in [(k * l, (l, k)), (n * n - kb * lb, (lb, kb))] {
            let Ok(a) = b.ambient().divisor_index(m - 1) else {
                out.push(error_check(g, format!("{tag} divisor {m}"), "not a divisor"));
                continue;
            };
            out.push(check(g, format!("{tag} χ of divisor {m} at i(λ̇)"), nn, chi_value(b.ambient(), a)));
            match b.phi_star_h2(m - 1) {
                Ok(c) => out.push(check(
                    g,
                    format!("{tag} φ* of divisor {m}"),
                    (pair.0 as i64, pair.1 as i64, 2),
                    (c.coefficient(d1), c.coefficient(d2), c.len()),
                )),
                Err(e) => out.push(error_check(g, format!("{tag} φ* of divisor {m}"), e)),
            }
        }
    }
    out
}

/// The odd orthogonal example `OG(3, 9) → Fl(3, 6; 9)`.
pub fn oddorth_checks() -> Vec<Check> {
    let g = "odd orthogonal";
    let mut out = Vec::new();
    let f = match oddorth_fixture() {
        Ok(f) => f,
        Err(e) => return vec![error_check(g, "fixture", e)],
    };
    let b = &f.branching;
    out.push(check(g, "i(λ̇)", vec![0, 0, 1, 0, 0, 1, 0, 0], b.ambient().lambda().0.clone()));
    out.push(check(g, "codim of w", 6, b.ambient().codim(f.w)));
    match f.grassmannian.dual(&f.w_prime) {
        Ok(dual) => out.push(check(
            g,
            "[Λ_w] is the pullback of [Λ_w′]",
            dual.word_string(b.ambient().datum()),
            b.ambient().element(b.ambient().dual_index(f.w)).word_string(b.ambient().datum()),
        )),
        Err(e) => out.push(error_check(g, "pullback", e)),
    }
    out.push(check(g, "i*(χ_w)(λ̇)", 6, chi_value(b.ambient(), f.w)));
    for (i, &wt) in f.w_tilde.iter().enumerate() {
        out.push(check(g, format!("codim of w̃{}", i + 1), 6, b.sub().codim(wt)));
        out.push(check(g, format!("χ̃ of w̃{} at λ̇", i + 1), 9, chi_value(b.sub(), wt)));
    }
    match b.phi_star(f.w) {
        Ok(c) => out.push(check(g, "φ*([Λ_w]) ≠ 0", true, !c.is_zero())),
        Err(e) => out.push(error_check(g, "φ*", e)),
    }
    match b.phi_odot(f.w) {
        Ok(c) => out.push(check(g, "φ⊙([Λ_w]) = 0", true, c.is_zero())),
        Err(e) => out.push(error_check(g, "φ⊙", e)),
    }
    out
}

/// All worked-example checks, in order.
pub fn example_checks() -> Vec<Check> {
    let mut v = principal_checks();
    v.extend(tensor_checks());
    v.extend(oddorth_checks());
    v
}

fn diagonal_branching(series: Series, rank: usize, lambda: Vec<i64>) -> Result<Branching> {
    let d = RootDatum::new(series, rank)?;
    Branching::new(Arc::new(Embedding::diagonal(&d)), Coweight(lambda))
}

/// The diagonal instances of the homomorphism suite.
pub fn homomorphism_instances() -> Vec<(&'static str, Series, usize, Vec<i64>)> {
    vec![
        ("A1", Series::A, 1, vec![1]),
        ("A2 G/B", Series::A, 2, vec![1, 1]),
        ("A3 Δ(P)={α1,α3}", Series::A, 3, vec![0, 1, 0]),
        ("A3 Δ(P)={α2}", Series::A, 3, vec![1, 0, 1]),
        ("B2 G/B", Series::B, 2, vec![1, 1]),
    ]
}

/// Grassmannians `Gr(k, n)` of the cominuscule suite.
pub fn grassmannian_instances() -> Vec<(usize, usize)> {
    vec![(1, 3), (2, 4), (2, 5)]
}

fn grassmannian_lambda(k: usize, n: usize) -> Vec<i64> {
    (0..n - 1).map(|i| i64::from(i == k - 1)).collect()
}

pub fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "principal SL2 embeddings, n = 1..6");
    c.absorb(&principal_checks());
    c
}

pub fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "tensor product embeddings");
    c.absorb(&tensor_checks());
    c
}

pub fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "odd orthogonal example SO(9) in SL(9)");
    c.absorb(&oddorth_checks());
    if let Ok(f) = oddorth_fixture() {
        let vals: Vec<i64> = f
            .w_tilde
            .iter()
            .map(|&wt| chi_value(f.branching.sub(), wt))
            .collect();
        c.note = format!("χ̃ of w̃1, w̃2, w̃3 from B4 roots = {vals:?}");
    }
    c
}

pub fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "φ⊙ is a graded ⊙₀-homomorphism on diagonal embeddings");
    let mut pairs = 0;
    for (label, s, r, lam) in homomorphism_instances() {
        let report = diagonal_branching(s, r, lam).and_then(|b| hom_check_diagonal(&b, None));
        match report {
            Ok(rep) => {
                pairs += rep.pairs_checked;
                c.record(rep.passed(), || format!("{label}: {}", rep.violations.join("; ")));
            }
            Err(e) => c.record(false, || format!("{label}: {e}")),
        }
    }
    c.note = format!("{pairs} basis pairs");
    c
}

pub fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "⊙₀ equals the cup product on Grassmannians");
    for (k, n) in grassmannian_instances() {
        let label = format!("Gr({k},{n})");
        let run = || -> Result<Vec<(String, bool)>> {
            let b = diagonal_branching(Series::A, n - 1, grassmannian_lambda(k, n))?;
            let p = b.sub();
            let mut out = Vec::new();
            for u in 0..p.len() {
                for v in 0..p.len() {
                    let cup = structure_constants(p, u, v)?;
                    let bk = bk_structure_constants(p, u, v)?;
                    out.push((format!("{label} pair ({u}, {v})"), *cup == bk));
                }
            }
            for w in 0..b.ambient().len() {
                out.push((format!("{label} φ⊙ = φ* at {w}"), b.phi_odot(w)? == b.phi_star(w)?));
            }
            Ok(out)
        };
        match run() {
            Ok(results) => {
                for (name, ok) in results {
                    c.record(ok, || name);
                }
            }
            Err(e) => c.record(false, || format!("{label}: {e}")),
        }
    }
    c
}

pub fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "dimension and character Levi-movability tests agree");
    let mut instances: Vec<(String, Series, usize, Vec<i64>)> = homomorphism_instances()
        .into_iter()
        .map(|(l, s, r, lam)| (l.to_string(), s, r, lam))
        .collect();
    for (k, n) in grassmannian_instances() {
        instances.push((format!("Gr({k},{n})"), Series::A, n - 1, grassmannian_lambda(k, n)));
    }
    let mut eligible = 0;
    let mut movable = 0;
    for (label, s, r, lam) in instances {
        let run = || -> Result<Vec<(String, bool)>> {
            let b = diagonal_branching(s, r, lam)?;
            let mut out = Vec::new();
            for p in [b.sub(), b.ambient()] {
                for i in 0..p.len() {
                    let dv = dim_vectors(p, i);
                    out.push((
                        format!("{label} Σ i·δ^i at {i}"),
                        dv.weighted_codim() == -chi_value(p, i),
                    ));
                }
            }
            for w in 0..b.ambient().len() {
                for (wt, d) in b.phi_star(w)?.terms() {
                    if d == 0 {
                        continue;
                    }
                    eligible += 1;
                    let by_dim = levi_movable_dim(&b, w, wt)?;
                    let by_char = b.char_gap(w, wt) == 0;
                    if by_dim {
                        movable += 1;
                    }
                    out.push((format!("{label} pair ({w}, {wt})"), by_dim == by_char));
                }
            }
            Ok(out)
        };
        match run() {
            Ok(results) => {
                for (name, ok) in results {
                    c.record(ok, || name);
                }
            }
            Err(e) => c.record(false, || format!("{label}: {e}")),
        }
    }
    c.note = format!("{eligible} pairs with d ≠ 0, {movable} Levi-movable");
    c
}

pub fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "structure constants agree with the Schubert polynomial oracle; associativity");
    let mut oracle_pairs = 0;
    for rank in 2..=4usize {
        let run = || -> Result<Vec<(String, bool)>> {
            let d = RootDatum::new(Series::A, rank)?;
            let all = enumerate_weyl(&d)?;
            let pairs: Vec<(usize, usize)> = if rank < 4 {
                (0..all.len()).flat_map(|x| (0..all.len()).map(move |y| (x, y))).collect()
            } else {
                let mut rng = StdRng::seed_from_u64(2024);
                (0..200)
                    .map(|_| (rng.gen_range(0..all.len()), rng.gen_range(0..all.len())))
                    .collect()
            };
            let mut out = Vec::new();
            for (x, y) in pairs {
                let mut a = sigma_product(&d, &all[x], &all[y])?;
                a.sort();
                let b = schubert_polynomial_constants(&d, &all[x], &all[y])?;
                out.push((
                    format!("S{} {} · {}", rank + 1, all[x].word_string(&d), all[y].word_string(&d)),
                    a == b,
                ));
            }
            Ok(out)
        };
        match run() {
            Ok(results) => {
                oracle_pairs += results.len();
                for (name, ok) in results {
                    c.record(ok, || name);
                }
            }
            Err(e) => c.record(false, || format!("S{}: {e}", rank + 1)),
        }
    }
    let mut spaces = 0;
    for p in small_parabolics(30) {
        spaces += 1;
        let label = format!("{} Δ(P)={:?}", p.datum().label(), p.delta_p());
        let run = || -> Result<bool> {
            let basis: Vec<CohomologyClass> = (0..p.len())
                .map(|i| CohomologyClass::basis(&p, i))
                .collect::<Result<_>>()?;
            let mut products = vec![Vec::with_capacity(p.len()); p.len()];
            for (i, a) in basis.iter().enumerate() {
                for b in &basis {
                    products[i].push(cup_product(a, b)?);
                }
            }
            for i in 0..p.len() {
                for j in 0..p.len() {
                    for (k, ck) in basis.iter().enumerate() {
                        let left = cup_product(&products[i][j], ck)?;
                        let right = cup_product(&basis[i], &products[j][k])?;
                        if left != right {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        };
        match run() {
            Ok(ok) => c.record(ok, || format!("associativity fails on {label}")),
            Err(e) => c.record(false, || format!("{label}: {e}")),
        }
    }
    c.note = format!("{oracle_pairs} oracle pairs, associativity on {spaces} flag varieties");
    c
}

/// All `G/P` with `|W^P| ≤ cap` over `A1–A4, B2–B4, C2–C4, D4`, with a
/// nonempty set of non-Levi nodes.
pub fn small_parabolics(cap: usize) -> Vec<Arc<ParabolicDatum>> {
    let types = [
        (Series::A, 1),
        (Series::A, 2),
        (Series::A, 3),
        (Series::A, 4),
        (Series::B, 2),
        (Series::B, 3),
        (Series::B, 4),
        (Series::C, 2),
        (Series::C, 3),
        (Series::C, 4),
        (Series::D, 4),
    ];
    let mut out = Vec::new();
    for (s, r) in types {
        let Ok(d) = RootDatum::new(s, r) else { continue };
        let d = Arc::new(d);
        for mask in 1u32..(1 << r) {
            let non_levi: Vec<usize> = (0..r).filter(|k| mask & (1 << k) != 0).collect();
            let Ok(p) = ParabolicDatum::from_complement(d.clone(), &non_levi) else {
                continue;
            };
            if p.len() <= cap {
                out.push(Arc::new(p));
            }
        }
    }
    out
}

pub fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "eigencone inequalities for diagonal A1 and A2");
    let q = |v: &[i64]| v.iter().map(|&x| Ratio::from_integer(x)).collect::<Vec<_>>();
    let mut grid_time = 0.0;
    let mut run = |c: &mut Criterion| -> Result<()> {
        let a1 = enumerate_inequalities(diagonal_a(1)?)?;
        let mut normals: Vec<Vec<i64>> = a1.inequalities.iter().map(|x| x.normal()).collect();
        normals.sort();
        let triangle = vec![vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]];
        c.record(normals == triangle, || format!("A1 normals {normals:?}"));
        for a in 0..=8 {
            for b in 0..=8 {
                for d in 0..=8 {
                    let inside = cone_contains(&a1, &q(&[a]), &q(&[b, d]))?.inside;
                    let oracle = diag_membership_oracle(&[a], &[b], &[d]);
                    c.record(inside == oracle, || format!("A1 ({a}; {b}, {d})"));
                }
            }
        }
        let a2 = enumerate_inequalities(diagonal_a(2)?)?;
        let start = Instant::now();
        let mut mismatches = 0usize;
        let mut first = None;
        for code in 0..7usize.pow(6) {
            let mut x = [0i64; 6];
            let mut r = code;
            for slot in x.iter_mut() {
                *slot = (r % 7) as i64;
                r /= 7;
            }
            let inside = cone_contains(&a2, &q(&x[..2]), &q(&x[2..]))?.inside;
            if inside != diag_membership_oracle(&x[..2], &x[2..4], &x[4..]) {
                mismatches += 1;
                first.get_or_insert(x);
            }
        }
        grid_time = start.elapsed().as_secs_f64();
        c.record(mismatches == 0, || format!("A2 grid: {mismatches} mismatches, first {first:?}"));
        for (label, cone) in [("A1", &a1), ("A2", &a2)] {
            let bad = cone.verify_certificates()?;
            c.record(bad.is_empty(), || format!("{label} certificates fail at {bad:?}"));
            let zero = vec![Ratio::from_integer(0); cone.embedding.sub().rank()];
            let zero2 = vec![Ratio::from_integer(0); cone.embedding.ambient().rank()];
            let m = cone_contains(cone, &zero, &zero2)?;
            c.record(m.inside && m.tight.len() == cone.len(), || format!("{label} origin not tight"));
            let verdicts = irredundancy_check(cone);
            let essential = verdicts.iter().filter(|v| matches!(v, Essential::Yes(_))).count();
            c.record(essential == cone.len(), || {
                format!("{label}: {essential} of {} essential", cone.len())
            });
        }
        c.note = format!("{} + {} inequalities", a1.len(), a2.len());
        Ok(())
    };
    let r = run(&mut c);
    c.fail_on(r);
    c.note.push_str(&format!(", A2 grid {grid_time:.1} s"));
    c
}

pub fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "ABS classes versus λ̇-level sets");
    for (s, r) in [(Series::A, 2), (Series::A, 3), (Series::B, 2)] {
        let d = match RootDatum::new(s, r) {
            Ok(d) => Arc::new(d),
            Err(e) => {
                c.record(false, || e.to_string());
                continue;
            }
        };
        for mask in 1u32..(1 << r) {
            let nodes: Vec<usize> = (0..r).filter(|k| mask & (1 << k) != 0).collect();
            let label = format!("{} non-Levi {:?}", d.label(), nodes);
            let generic = ParabolicDatum::new(d.clone(), generic_lambda(&d, &nodes));
            match generic {
                Ok(p) => {
                    let rep = abs_levels_check(&p);
                    c.record(rep.equal, || format!("{label}: generic λ̇ does not give equality"));
                }
                Err(e) => c.record(false, || format!("{label}: {e}")),
            }
            if nodes.len() >= 2 {
                let mut ones = vec![0; r];
                for &k in &nodes {
                    ones[k] = 1;
                }
                match ParabolicDatum::new(d.clone(), Coweight(ones)) {
                    Ok(p) => {
                        let rep = abs_levels_check(&p);
                        c.record(rep.refines && !rep.equal, || {
                            format!("{label}: λ̇ = 1 on non-Levi nodes should strictly refine")
                        });
                    }
                    Err(e) => c.record(false, || format!("{label}: {e}")),
                }
            }
        }
    }
    c
}

/// Runs every criterion in order.
pub fn all_criteria() -> Vec<Criterion> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}
