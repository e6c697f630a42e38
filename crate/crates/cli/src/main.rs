use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use bkschubert::bkcalc::{
    abs_levels_check, bk_product, chi, chi_value, deformed_product, dim_vectors,
    levi_movable_char, levi_movable_dim, TauClass,
};
use bkschubert::branching::{oddorth_fixture, Branching, Embedding};
use bkschubert::cache;
use bkschubert::eigencone::{
    cone_contains, enumerate_inequalities, irredundancy_check, ConeDescription, Essential,
};
use bkschubert::error::Error;
use bkschubert::rootdata::{Coweight, RootDatum, Series};
use bkschubert::schubert::{cup_product, CohomologyClass};
use bkschubert::weyl::{parse_element, ParabolicDatum};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bkschubert",
    version,
    about = "Exact Schubert calculus: cup, deformed and Belkale-Kumar products, branching and eigencones"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for product tables.
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Cup,
    Tau,
    Bk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Shifted Schubert classes `[Λ_w]`.
    Lambda,
    /// Classes `σ^w = [Λ_{w^∨}]`.
    Sigma,
}

/// A simple root datum and a parabolic of it.
#[derive(Args, Clone)]
struct Space {
    /// Series: A, B, C or D.
    #[arg(value_parser = parse_series)]
    series: Series,
    /// Rank.
    rank: usize,
    /// Nodes outside the Levi, 1-based (e.g. `--dp 2` or `--dp 1,3`).
    #[arg(long, conflicts_with = "lambda")]
    dp: Option<String>,
    /// Dominant coweight in fundamental coordinates (e.g. `--lambda 1,0,2`).
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and Weyl group order.
    Roots {
        #[arg(value_parser = parse_series)]
        series: Series,
        rank: usize,
    },
    /// Minimal coset representatives W^P.
    Weyl {
        #[command(flatten)]
        space: Space,
        /// List every element.
        #[arg(long)]
        list: bool,
    },
    /// Product of two Schubert classes.
    Product {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value_t = Mode::Cup)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Basis::Lambda)]
        basis: Basis,
        /// Skip reading and writing the table cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// The character χ_w and its value at λ̇.
    Chi {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        w: String,
    },
    /// Eigenvalue dimension vectors of the tangent space and of T_w.
    Dims {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        w: String,
    },
    /// Both Levi-movability tests for a diagonal pair ((u, v), w̃).
    Levi {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w_tilde: String,
    },
    /// Azad-Barry-Seitz classes against λ̇-level sets.
    Abs {
        #[command(flatten)]
        space: Space,
    },
    /// Branching comorphisms for the built-in embeddings.
    Branch {
        #[command(subcommand)]
        embedding: BranchCommand,
    },
    /// Eigencone inequalities for diagonal embeddings.
    Eigencone {
        #[command(subcommand)]
        action: EigenconeCommand,
    },
    /// Re-runs the worked examples for principal, tensor and odd orthogonal
    /// embeddings; exits 1 on any mismatch.
    Examples,
    /// Product table cache.
    Cache {
        #[command(subcommand)]
        action: CacheCommand,
    },
}

#[derive(Subcommand)]
enum BranchCommand {
    /// G̃ ⊂ G̃ × G̃: φ*, φ• and φ⊙ of [Λ_u × Λ_v].
    Diagonal {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Principal SL2 in SL(n+1): H² coefficients and character gaps.
    Principal {
        #[arg(long)]
        n: usize,
    },
    /// SL(n) × SL(n) in SL(n²) adapted to (k, l).
    Tensor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// SO(9) in SL(9) with λ̇ = x̃3 and the known coefficients (4, 2, 2).
    Oddorth,
}

#[derive(Subcommand)]
enum EigenconeCommand {
    /// Lists the inequalities.
    Generate {
        /// Series and rank of G̃ (e.g. `--diagonal A 2`).
        #[arg(long, num_args = 2, value_names = ["SERIES", "RANK"], required = true)]
        diagonal: Vec<String>,
        /// Also search for points showing each inequality is needed.
        #[arg(long)]
        irredundancy: bool,
    },
    /// Tests a point (ν̃, ν) against the inequalities.
    Check {
        #[arg(long, num_args = 2, value_names = ["SERIES", "RANK"], required = true)]
        diagonal: Vec<String>,
        /// Coordinates of ν̃ then ν, comma separated; fractions allowed
        /// (e.g. `--point 2,1,1`).
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Lists table files.
    Info,
    /// Deletes all table files.
    Clear,
    /// Computes and stores the table of one flag variety.
    Build {
        #[command(flatten)]
        space: Space,
    },
}

/// Malformed command-line input.
#[derive(Debug)]
struct ParseError(String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn parse_series(s: &str) -> Result<Series, String> {
    s.parse::<Series>()
        .map_err(|_| format!("unknown series '{s}' (expected one of A, B, C, D, e.g. `A 3`)"))
}

fn parse_list(text: &str, what: &str, example: &str) -> anyhow::Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| {
                anyhow!(ParseError(format!(
                    "cannot parse '{}' in {what} '{text}' (expected e.g. {example})",
                    t.trim()
                )))
            })
        })
        .collect()
}

fn parse_rational(t: &str, text: &str) -> anyhow::Result<Ratio<i64>> {
    let bad = || {
        anyhow!(ParseError(format!(
            "cannot parse '{t}' in point '{text}' (expected e.g. 2,1,1 or 1/2,0,1/2)"
        )))
    };
    match t.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(a, b))
        }
        None => Ok(Ratio::from_integer(t.trim().parse().map_err(|_| bad())?)),
    }
}

fn datum_of(series: Series, rank: usize) -> anyhow::Result<Arc<RootDatum>> {
    Ok(Arc::new(RootDatum::new(series, rank)?))
}

fn parabolic_of(space: &Space) -> anyhow::Result<Arc<ParabolicDatum>> {
    let d = datum_of(space.series, space.rank)?;
    let p = if let Some(dp) = &space.dp {
        let nodes = parse_list(dp, "--dp", "--dp 2 or --dp 1,3")?;
        let mut non_levi = Vec::new();
        for k in nodes {
            if k < 1 || k as usize > space.rank {
                return Err(anyhow!(ParseError(format!(
                    "node '{k}' in --dp '{dp}' is outside 1..={} (expected e.g. --dp 2)",
                    space.rank
                ))));
            }
            non_levi.push(k as usize - 1);
        }
        ParabolicDatum::from_complement(d, &non_levi)?
    } else if let Some(l) = &space.lambda {
        let v = parse_list(l, "--lambda", "--lambda 1,0,2")?;
        ParabolicDatum::new(d, Coweight(v))?
    } else {
        ParabolicDatum::borel(d)?
    };
    Ok(Arc::new(p))
}

/// Index in W^P of an element given in the chosen basis.
fn element_index(p: &ParabolicDatum, text: &str, basis: Basis) -> anyhow::Result<usize> {
    let w = parse_element(p.datum(), text).with_context(|| format!("element '{text}'"))?;
    let i = p
        .require_index(&w)
        .with_context(|| format!("element '{text}' (W^P elements look like s2s3 or e)"))?;
    Ok(match basis {
        Basis::Lambda => i,
        Basis::Sigma => p.dual_index(i),
    })
}

fn non_levi(p: &ParabolicDatum) -> Vec<usize> {
    (0..p.datum().rank())
        .filter(|k| !p.delta_p().contains(k))
        .map(|k| k + 1)
        .collect()
}

fn parabolic_json(p: &ParabolicDatum) -> Value {
    json!({
        "datum": p.datum().label(),
        "lambda": p.lambda().0,
        "non_levi": non_levi(p),
    })
}

fn word(p: &ParabolicDatum, i: usize) -> String {
    p.element(i).word_string(p.datum())
}

/// Label of a Λ-index in the chosen basis.
fn label(p: &ParabolicDatum, i: usize, basis: Basis) -> String {
    match basis {
        Basis::Lambda => format!("[Λ_{}]", word(p, i)),
        Basis::Sigma => format!("σ^{}", word(p, p.dual_index(i))),
    }
}

fn basis_word(p: &ParabolicDatum, i: usize, basis: Basis) -> String {
    match basis {
        Basis::Lambda => word(p, i),
        Basis::Sigma => word(p, p.dual_index(i)),
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn render_class(c: &CohomologyClass, basis: Basis) -> (String, Value) {
    let p = c.parabolic();
    let mut terms: Vec<(String, i64, usize)> = c
        .terms()
        .map(|(i, k)| (basis_word(p, i, basis), k, i))
        .collect();
    terms.sort();
    let text = join_terms(
        terms
            .iter()
            .map(|(_, k, i)| {
                let l = label(p, *i, basis);
                if *k == 1 { l } else { format!("{k}·{l}") }
            })
            .collect(),
    );
    let js = terms
        .iter()
        .map(|(w, k, _)| json!({"w": w, "coeff": k}))
        .collect::<Vec<_>>();
    (text, Value::Array(js))
}

fn render_tau(c: &TauClass, basis: Basis) -> (String, Value) {
    let p = c.parabolic();
    let mut terms: Vec<(String, u32, i64, usize)> = c
        .terms()
        .map(|((i, e), k)| (basis_word(p, i, basis), e, k, i))
        .collect();
    terms.sort();
    let text = join_terms(
        terms
            .iter()
            .map(|(_, e, k, i)| {
                let coeff = if *k == 1 { String::new() } else { format!("{k}·") };
                let tau = match e {
                    0 => String::new(),
                    1 => "τ·".into(),
                    _ => format!("τ^{e}·"),
                };
                format!("{coeff}{tau}{}", label(p, *i, basis))
            })
            .collect(),
    );
    let js = terms
        .iter()
        .map(|(w, e, k, _)| json!({"w": w, "tau": e, "coeff": k}))
        .collect::<Vec<_>>();
    (text, Value::Array(js))
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

fn cache_dir(cli: &Cli) -> PathBuf {
    cli.cache_dir.clone().unwrap_or_else(cache::default_dir)
}

fn cmd_roots(series: Series, rank: usize) -> anyhow::Result<Output> {
    let d = datum_of(series, rank)?;
    let mut text = format!(
        "{}: rank {}, |W| = {}, {} positive roots\nCartan matrix:\n",
        d.label(),
        d.rank(),
        d.weyl_order(),
        d.positive_roots().len()
    );
    for row in d.cartan() {
        let _ = writeln!(text, "  {row:?}");
    }
    text.push_str("positive roots (simple-root coordinates):\n");
    for r in d.positive_roots() {
        let _ = writeln!(text, "  {:?}", r.0);
    }
    let mut js = d.json();
    js["weyl_order"] = json!(d.weyl_order().to_string());
    Ok(Output::ok(text, js))
}

fn cmd_weyl(space: &Space, list: bool) -> anyhow::Result<Output> {
    let p = parabolic_of(space)?;
    let mut text = format!(
        "{}, non-Levi nodes {:?}: |W^P| = {}, dim G/P = {}\n",
        p.datum().label(),
        non_levi(&p),
        p.len(),
        p.dim()
    );
    let mut elements = Vec::new();
    for i in 0..p.len() {
        let e = p.element(i);
        if list {
            let _ = writeln!(text, "  {:<24} length {:>2}  codim {:>2}", word(&p, i), e.length(), p.codim(i));
        }
        elements.push(json!({"w": word(&p, i), "length": e.length(), "codim": p.codim(i)}));
    }
    let mut js = parabolic_json(&p);
    js["count"] = json!(p.len());
    js["dim"] = json!(p.dim());
    if list {
        js["elements"] = Value::Array(elements);
    }
    Ok(Output::ok(text, js))
}

#[allow(clippy::too_many_arguments)]
fn cmd_product(
    cli: &Cli,
    space: &Space,
    u: &str,
    v: &str,
    mode: Mode,
    basis: Basis,
    no_cache: bool,
) -> anyhow::Result<Output> {
    let p = parabolic_of(space)?;
    let ui = element_index(&p, u, basis)?;
    let vi = element_index(&p, v, basis)?;
    if !no_cache {
        cache::load_or_build(&cache_dir(cli), &p)?;
    }
    let a = CohomologyClass::basis(&p, ui)?;
    let b = CohomologyClass::basis(&p, vi)?;
    let (lhs_u, lhs_v) = (label(&p, ui, basis), label(&p, vi, basis));
    let (op, (text, result)) = match mode {
        Mode::Cup => ("·", render_class(&cup_product(&a, &b)?, basis)),
        Mode::Bk => ("⊙₀", render_class(&bk_product(&a, &b)?, basis)),
        Mode::Tau => (
            "⊙•",
            render_tau(
                &deformed_product(&TauClass::from_class(&a), &TauClass::from_class(&b))?,
                basis,
            ),
        ),
    };
    let mode_name = match mode {
        Mode::Cup => "cup",
        Mode::Tau => "tau",
        Mode::Bk => "bk",
    };
    let js = json!({
        "space": parabolic_json(&p),
        "mode": mode_name,
        "basis": if basis == Basis::Lambda { "lambda" } else { "sigma" },
        "u": basis_word(&p, ui, basis),
        "v": basis_word(&p, vi, basis),
        "result": result,
    });
    Ok(Output::ok(format!("{lhs_u} {op} {lhs_v} = {text}\n"), js))
}

fn cmd_chi(space: &Space, w: &str) -> anyhow::Result<Output> {
    let p = parabolic_of(space)?;
    let i = element_index(&p, w, Basis::Lambda)?;
    let weight = chi(&p, p.element(i))?;
    let value = chi_value(&p, i);
    let text = format!(
        "χ_{} = {} (fundamental weights), χ_w(λ̇) = {value}\n",
        word(&p, i),
        weight
    );
    let js = json!({
        "space": parabolic_json(&p),
        "w": word(&p, i),
        "chi": weight.0,
        "value": value,
    });
    Ok(Output::ok(text, js))
}

fn cmd_dims(space: &Space, w: &str) -> anyhow::Result<Output> {
    let p = parabolic_of(space)?;
    let i = element_index(&p, w, Basis::Lambda)?;
    let dv = dim_vectors(&p, i);
    let mut text = format!("w = {}: eigenvalue, dim T, codim T_w\n", word(&p, i));
    for (k, d) in &dv.d {
        let _ = writeln!(text, "  {k:>3}  {d:>3}  {:>3}", dv.delta.get(k).copied().unwrap_or(0));
    }
    let _ = writeln!(text, "Σ i·δ^i = {} and χ_w(λ̇) = {}", dv.weighted_codim(), chi_value(&p, i));
    let js = json!({
        "space": parabolic_json(&p),
        "w": word(&p, i),
        "levels": dv.to_json(),
        "weighted_codim": dv.weighted_codim(),
        "chi": chi_value(&p, i),
    });
    Ok(Output::ok(text, js))
}

fn diagonal_branching(space: &Space) -> anyhow::Result<Branching> {
    let p = parabolic_of(space)?;
    let e = Arc::new(Embedding::diagonal(p.datum()));
    Ok(Branching::new(e, p.lambda().clone())?)
}

fn cmd_levi(space: &Space, u: &str, v: &str, wt: &str) -> anyhow::Result<Output> {
    let b = diagonal_branching(space)?;
    let sub = b.sub();
    let ui = element_index(sub, u, Basis::Lambda)?;
    let vi = element_index(sub, v, Basis::Lambda)?;
    let ti = element_index(sub, wt, Basis::Lambda)?;
    let w = b.pair_index(ui, vi)?;
    let d = b.phi_star(w)?.coefficient(ti);
    let gap = b.char_gap(w, ti);
    let header = format!(
        "w = ({}, {}), w̃ = {}: d = {d}, χ̃_w̃(λ̇) − χ_w(i(λ̇)) = {gap}",
        word(sub, ui),
        word(sub, vi),
        word(sub, ti)
    );
    let mut js = json!({
        "space": parabolic_json(sub),
        "u": word(sub, ui),
        "v": word(sub, vi),
        "w_tilde": word(sub, ti),
        "d": d,
        "gap": gap,
    });
    if d == 0 {
        js["eligible"] = json!(false);
        return Ok(Output::ok(format!("{header}\nd = 0, so neither test applies\n"), js));
    }
    let by_char = levi_movable_char(&b, w, ti)?;
    let by_dim = levi_movable_dim(&b, w, ti)?;
    js["eligible"] = json!(true);
    js["char"] = json!(by_char);
    js["dim"] = json!(by_dim);
    Ok(Output::ok(
        format!("{header}\ncharacter test: {by_char}\ndimension test: {by_dim}\n"),
        js,
    ))
}

fn cmd_abs(space: &Space) -> anyhow::Result<Output> {
    let p = parabolic_of(space)?;
    let d = p.datum();
    let rep = abs_levels_check(&p);
    let roots = |ids: &[usize]| ids.iter().map(|&b| d.positive_roots()[b].0.clone()).collect::<Vec<_>>();
    let mut text = format!("{} ABS classes, {} level sets\n", rep.classes.len(), rep.levels.len());
    for c in &rep.classes {
        let _ = writeln!(text, "  class {:?}: {:?}", c.key, roots(&c.roots));
    }
    for (l, ids) in &rep.levels {
        let _ = writeln!(text, "  level {l}: {:?}", roots(ids));
    }
    let _ = writeln!(text, "refines: {}, equal: {}", rep.refines, rep.equal);
    let js = json!({
        "space": parabolic_json(&p),
        "classes": rep.classes.iter().map(|c| json!({"key": c.key, "roots": roots(&c.roots)})).collect::<Vec<_>>(),
        "levels": rep.levels.iter().map(|(l, ids)| json!({"level": l, "roots": roots(ids)})).collect::<Vec<_>>(),
        "refines": rep.refines,
        "equal": rep.equal,
    });
    Ok(Output::ok(text, js))
}

fn cmd_branch(cmd: &BranchCommand) -> anyhow::Result<Output> {
    match cmd {
        BranchCommand::Diagonal { space, u, v } => {
            let b = diagonal_branching(space)?;
            let sub = b.sub();
            let ui = element_index(sub, u, Basis::Lambda)?;
            let vi = element_index(sub, v, Basis::Lambda)?;
            let w = b.pair_index(ui, vi)?;
            let (star, star_js) = render_class(&b.phi_star(w)?, Basis::Lambda);
            let (bullet, bullet_js) = render_tau(&b.phi_bullet(w)?, Basis::Lambda);
            let (odot, odot_js) = render_class(&b.phi_odot(w)?, Basis::Lambda);
            let text = format!(
                "w = ({}, {})\nφ*  = {star}\nφ•  = {bullet}\nφ⊙  = {odot}\n",
                word(sub, ui),
                word(sub, vi)
            );
            let js = json!({
                "embedding": b.embedding().to_json(),
                "space": parabolic_json(sub),
                "u": word(sub, ui),
                "v": word(sub, vi),
                "phi_star": star_js,
                "phi_bullet": bullet_js,
                "phi_odot": odot_js,
            });
            Ok(Output::ok(text, js))
        }
        BranchCommand::Principal { n } => {
            let b = Branching::new(Arc::new(Embedding::principal_sl2(*n)?), Coweight(vec![2]))?;
            let pt = b.sub().point_index();
            let mut text = format!("principal SL2 in SL{}: i(λ̇) = {}\n  k  m_k  gap\n", n + 1, b.ambient().lambda());
            let mut rows = Vec::new();
            for k in 0..*n {
                let m = b.phi_star_h2(k)?.coefficient(pt);
                let gap = b.char_gap(b.ambient().divisor_index(k)?, pt);
                let _ = writeln!(text, "  {:<2} {m:>4} {gap:>4}", k + 1);
                rows.push(json!({"k": k + 1, "m": m, "gap": gap}));
            }
            let total: i64 = rows.iter().map(|r| r["m"].as_i64().unwrap_or(0)).sum();
            let _ = writeln!(text, "Σ m_k = {total}");
            let js = json!({"embedding": b.embedding().to_json(), "rows": rows, "sum": total});
            Ok(Output::ok(text, js))
        }
        BranchCommand::Tensor { n, k, l } => {
            let e = Arc::new(Embedding::tensor(*n, *k, *l)?);
            let mut lam = vec![0; 2 * (n - 1)];
            lam[k - 1] = *n as i64;
            lam[n - 1 + l - 1] = *n as i64;
            let b = Branching::new(e, Coweight(lam))?;
            let d1 = b.sub().divisor_index(k - 1)?;
            let d2 = b.sub().divisor_index(n - 1 + l - 1)?;
            let mut text = format!(
                "tensor ({n}, {k}, {l}): λ̇ = {}, i(λ̇) = {}\nχ̃ of the sub divisors at λ̇: {}, {}\n",
                b.lambda(),
                b.ambient().lambda(),
                chi_value(b.sub(), d1),
                chi_value(b.sub(), d2)
            );
            let mut rows = Vec::new();
            for m in [k * l, n * n - (n - k) * (n - l)] {
                let a = b.ambient().divisor_index(m - 1)?;
                let h2 = b.phi_star_h2(m - 1)?;
                let (c1, c2) = (h2.coefficient(d1), h2.coefficient(d2));
                let chi_a = chi_value(b.ambient(), a);
                let _ = writeln!(text, "divisor {m}: χ(i(λ̇)) = {chi_a}, φ* = ({c1}, {c2})");
                rows.push(json!({"divisor": m, "chi": chi_a, "phi_star": [c1, c2]}));
            }
            let js = json!({
                "embedding": b.embedding().to_json(),
                "chi_sub": [chi_value(b.sub(), d1), chi_value(b.sub(), d2)],
                "divisors": rows,
            });
            Ok(Output::ok(text, js))
        }
        BranchCommand::Oddorth => {
            let f = oddorth_fixture()?;
            let b = &f.branching;
            let (star, star_js) = render_class(&b.phi_star(f.w)?, Basis::Lambda);
            let (bullet, bullet_js) = render_tau(&b.phi_bullet(f.w)?, Basis::Lambda);
            let (odot, odot_js) = render_class(&b.phi_odot(f.w)?, Basis::Lambda);
            let chis: Vec<i64> = f.w_tilde.iter().map(|&t| chi_value(b.sub(), t)).collect();
            let text = format!(
                "w = (468579123), i(λ̇) = {}\nχ_w(i(λ̇)) = {}\nχ̃ of w̃1, w̃2, w̃3 at λ̇ = {:?}\nφ*  = {star}\nφ•  = {bullet}\nφ⊙  = {odot}\n",
                b.ambient().lambda(),
                chi_value(b.ambient(), f.w),
                chis
            );
            let js = json!({
                "embedding": b.embedding().to_json(),
                "chi_w": chi_value(b.ambient(), f.w),
                "chi_w_tilde": chis,
                "phi_star": star_js,
                "phi_bullet": bullet_js,
                "phi_odot": odot_js,
            });
            Ok(Output::ok(text, js))
        }
    }
}

fn diagonal_cone(args: &[String]) -> anyhow::Result<ConeDescription> {
    let series = parse_series(&args[0]).map_err(|e| anyhow!(ParseError(e)))?;
    let rank: usize = args[1].parse().map_err(|_| {
        anyhow!(ParseError(format!(
            "cannot parse rank '{}' (expected e.g. --diagonal A 2)",
            args[1]
        )))
    })?;
    let d = datum_of(series, rank)?;
    Ok(enumerate_inequalities(Arc::new(Embedding::diagonal(&d)))?)
}

fn inequality_text(cone: &ConeDescription, i: usize) -> String {
    let q = &cone.inequalities[i];
    let sub = cone.embedding.sub();
    format!(
        "λ = {}, w̃ = {}, w = ({}, {}): {:?} · (ν̃; ν) ≥ 0",
        q.lambda,
        q.w_tilde.word_string(sub),
        q.u.word_string(sub),
        q.v.word_string(sub),
        q.normal()
    )
}

fn cmd_eigencone(cmd: &EigenconeCommand) -> anyhow::Result<Output> {
    match cmd {
        EigenconeCommand::Generate { diagonal, irredundancy } => {
            let cone = diagonal_cone(diagonal)?;
            let mut text = format!("{} inequalities\n", cone.len());
            let mut js = cone.to_json();
            let verdicts = irredundancy.then(|| irredundancy_check(&cone));
            for i in 0..cone.len() {
                text.push_str(&inequality_text(&cone, i));
                if let Some(v) = &verdicts {
                    let flag = match &v[i] {
                        Essential::Yes(_) => "essential",
                        Essential::No => "redundant",
                        Essential::Undetermined => "undetermined",
                    };
                    let _ = write!(text, "  [{flag}]");
                    js["inequalities"][i]["essential"] = json!(flag);
                }
                text.push('\n');
            }
            Ok(Output::ok(text, js))
        }
        EigenconeCommand::Check { diagonal, point } => {
            let cone = diagonal_cone(diagonal)?;
            let coords = point
                .split(',')
                .map(|t| parse_rational(t, point))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let rs = cone.embedding.sub().rank();
            let ra = cone.embedding.ambient().rank();
            if coords.len() != rs + ra {
                return Err(anyhow!(ParseError(format!(
                    "point '{point}' has {} coordinates, expected {} (ν̃ then ν, e.g. --point {})",
                    coords.len(),
                    rs + ra,
                    vec!["1"; rs + ra].join(",")
                ))));
            }
            let m = cone_contains(&cone, &coords[..rs], &coords[rs..])?;
            let verdict = if !m.inside {
                format!("outside (violates {} inequalities)", m.violated.len())
            } else if m.tight.len() == cone.len() {
                "inside (all tight)".to_string()
            } else {
                format!("inside ({} tight)", m.tight.len())
            };
            let mut text = format!("{verdict}\n");
            for &i in &m.violated {
                let _ = writeln!(text, "  violated: {}", inequality_text(&cone, i));
            }
            let js = json!({
                "inside": m.inside,
                "violated": m.violated,
                "tight": m.tight,
                "verdict": verdict,
            });
            Ok(Output::ok(text, js))
        }
    }
}

fn cmd_examples() -> Output {
    let checks = bkschubert_suite::example_checks();
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if !c.pass {
            failed += 1;
        }
        let _ = writeln!(
            text,
            "{status}  {:<15} {:<48} expected {:<10} got {}",
            c.group, c.name, c.expected, c.got
        );
        rows.push(json!({
            "group": c.group,
            "check": c.name,
            "expected": c.expected,
            "got": c.got,
            "pass": c.pass,
        }));
    }
    let _ = writeln!(text, "{} of {} checks passed", checks.len() - failed, checks.len());
    Output {
        text,
        json: json!({"checks": rows, "failed": failed}),
        code: u8::from(failed > 0),
    }
}

fn cmd_cache(cli: &Cli, action: &CacheCommand) -> anyhow::Result<Output> {
    let dir = cache_dir(cli);
    match action {
        CacheCommand::Info => {
            let entries = cache::info(&dir)?;
            let mut text = format!("{}: {} table(s)\n", dir.display(), entries.len());
            for e in &entries {
                let _ = writeln!(text, "  {}  {} bytes  {}", e.file, e.bytes, if e.valid { "ok" } else { "corrupt" });
            }
            let js = json!({
                "dir": dir.display().to_string(),
                "entries": entries.iter().map(|e| json!({"file": e.file, "bytes": e.bytes, "valid": e.valid})).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, js))
        }
        CacheCommand::Clear => {
            let n = cache::clear(&dir)?;
            Ok(Output::ok(format!("removed {n} table(s)\n"), json!({"removed": n})))
        }
        CacheCommand::Build { space } => {
            let p = parabolic_of(space)?;
            let hit = cache::load_or_build(&dir, &p)?;
            let file = cache::file_name(&p);
            let text = format!("{file}: {}\n", if hit { "already cached" } else { "written" });
            Ok(Output::ok(text, json!({"file": file, "hit": hit})))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Roots { series, rank } => cmd_roots(*series, *rank),
        Command::Weyl { space, list } => cmd_weyl(space, *list),
        Command::Product { space, u, v, mode, basis, no_cache } => {
            cmd_product(cli, space, u, v, *mode, *basis, *no_cache)
        }
        Command::Chi { space, w } => cmd_chi(space, w),
        Command::Dims { space, w } => cmd_dims(space, w),
        Command::Levi { space, u, v, w_tilde } => cmd_levi(space, u, v, w_tilde),
        Command::Abs { space } => cmd_abs(space),
        Command::Branch { embedding } => cmd_branch(embedding),
        Command::Eigencone { action } => cmd_eigencone(action),
        Command::Examples => Ok(cmd_examples()),
        Command::Cache { action } => cmd_cache(cli, action),
    }
}

/// 2 for malformed input, 3 for unsupported computations, 1 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<ParseError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Unsupported(_) | Error::UnsupportedType { .. } | Error::WeylOrderCap { .. }) => 3,
        Some(
            Error::Invalid(_)
            | Error::NotMinimalRepresentative(_)
            | Error::IndexOutOfRange { .. }
            | Error::LeviIndex { .. }
            | Error::NotDominant(_)
            | Error::NonDominantWeight(_)
            | Error::RankMismatch { .. },
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                ),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
