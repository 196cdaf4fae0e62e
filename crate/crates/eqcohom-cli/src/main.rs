use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use eqcohom::bgu1::{self, admissible_basis, f_eg_matrix, BClass, Engine};
use eqcohom::burnside_mackey::{ext, Catalog};
use eqcohom::gradings::{GradingROPi, PrimeConfig};
use eqcohom::grid::{emit_default, emit_window};
use eqcohom::parse::{parse_b, parse_point, parse_rog, parse_ropi};
use eqcohom::point_rings::{group_at, les_exact, les_exactness, point_relations, CoeffSystem, PointClass, Ring};
use eqcohom::suites::SuiteReport;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eqcohom",
    version,
    about = "RO(Z/p)-graded cohomology of the point, EG, the cofiber of EG and B_GU(1)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args)]
struct Opts {
    /// The prime p.
    #[arg(long, global = true, default_value_t = 2)]
    p: i64,
    #[arg(long, global = true, value_enum)]
    ring: Option<RingArg>,
    #[arg(long, global = true, value_enum, default_value = "A")]
    coeff: CoeffArg,
    /// An RO(G) grading (point rings, grid cosets) or RO(Π) grading (B).
    #[arg(long, global = true)]
    grading: Option<String>,
    /// Window half-width, basis length or grid bound, depending on the verb.
    #[arg(long, global = true)]
    window: Option<i64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingArg {
    #[value(name = "S0")]
    S0,
    #[value(name = "EG")]
    Eg,
    #[value(name = "TEG")]
    Teg,
    #[value(name = "B")]
    B,
    #[value(name = "BG")]
    Bg,
    #[value(name = "BEG")]
    Beg,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    #[value(name = "A")]
    A,
    #[value(name = "RZ")]
    Rz,
    #[value(name = "concZ")]
    ConcZ,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// The Mackey functor and canonical basis in one grading.
    Group,
    /// Multiply two classes and normalize the product.
    Mul { x: String, y: String },
    /// Print the normal form of an expression.
    Normalize { x: String },
    /// The fixed-point restriction of a B_GU(1) class.
    Eta { x: String },
    /// Emit a grid figure.
    Grid,
    /// Check exactness of EG → S0 → TEG.
    LesCheck,
    /// Classify extensions 0 → K → ? → Q → 0.
    ExtClassify {
        #[arg(default_value = "RZ")]
        quotient: String,
        #[arg(default_value = "<Z>")]
        kernel: String,
    },
    /// Check the relation ledger.
    VerifyRelations,
    /// List a canonical basis.
    Basis,
    /// Run a named verification suite.
    RunSuite {
        #[arg(value_enum)]
        name: Suite,
        /// Trial count for randomized suites.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Suite {
    LesExactness,
    Relations,
    Ext,
    EtaOracle,
    Admissible,
    Triangularity,
    Lewis,
    Conc,
    Rz,
    All,
}

/// A command-line mistake; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Turns a parse error into a usage error that points at the offending span.
fn spanned<T>(input: &str, r: eqcohom::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        eqcohom::Error::Parse { pos, msg } => {
            let caret = " ".repeat(input[..pos.min(input.len())].chars().count());
            usage(format!("{msg}\n  {input}\n  {caret}^"))
        }
        eqcohom::Error::BadPrime(_) | eqcohom::Error::InvalidParam(_) | eqcohom::Error::MalformedGrading(_) => {
            usage(format!("{e} (in `{input}`)"))
        }
        e => anyhow::Error::from(e).context(format!("evaluating `{input}`")),
    })
}

struct Out {
    text: String,
    json: Value,
    svg: Option<String>,
    ok: bool,
}

impl Out {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, svg: None, ok: true }
    }
}

struct Ctx<'a> {
    o: &'a Opts,
    pc: PrimeConfig,
}

impl Ctx<'_> {
    fn point_ring(&self, default: RingArg) -> anyhow::Result<Option<Ring>> {
        let r = self.o.ring.unwrap_or(default);
        let sys = self.coeff();
        Ok(match (r, sys) {
            (RingArg::S0, s) => Some(s.point_ring()),
            (RingArg::Eg, CoeffSystem::A) => Some(Ring::EG),
            (RingArg::Teg, CoeffSystem::A) => Some(Ring::TEG),
            (RingArg::Eg | RingArg::Teg, _) => bail!(usage("EG and TEG are only available with A coefficients")),
            _ => None,
        })
    }

    fn coeff(&self) -> CoeffSystem {
        match self.o.coeff {
            CoeffArg::A => CoeffSystem::A,
            CoeffArg::Rz => CoeffSystem::RZ,
            CoeffArg::ConcZ => CoeffSystem::ConcZ,
        }
    }

    fn engine(&self) -> anyhow::Result<Engine> {
        Engine::new(self.pc, self.coeff()).map_err(|e| usage(e.to_string()))
    }

    fn grading(&self) -> anyhow::Result<&str> {
        self.o.grading.as_deref().ok_or_else(|| usage("this verb needs --grading"))
    }

    fn ropi(&self) -> anyhow::Result<GradingROPi> {
        let g = self.grading()?;
        spanned(g, parse_ropi(self.pc, g))
    }
}

fn point_json(x: &PointClass) -> Value {
    json!({ "grading": x.grading().to_string(), "class": x.to_string(), "terms": x.terms() })
}

fn b_json(x: &BClass) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn cmd_group(c: &Ctx) -> anyhow::Result<Out> {
    match c.point_ring(RingArg::S0)? {
        Some(ring) => {
            let g = c.grading()?;
            let x = spanned(g, parse_rog(c.pc, g))?;
            let info = group_at(ring, x);
            let text = format!(
                "H^{{{x}}}({ring}) = {}\n  G/G: {}\n  G/e: {}\n",
                info.functor,
                list(&info.gg_basis),
                list(&info.ge_basis)
            );
            Ok(Out::ok(text, serde_json::to_value(&info)?))
        }
        None => cmd_basis(c),
    }
}

fn list(v: &[String]) -> String {
    if v.is_empty() {
        "0".into()
    } else {
        v.join(", ")
    }
}

fn cmd_basis(c: &Ctx) -> anyhow::Result<Out> {
    let ring = c.o.ring.unwrap_or(RingArg::B);
    if let Some(r) = c.point_ring(ring)? {
        let g = c.grading()?;
        let x = spanned(g, parse_rog(c.pc, g))?;
        let info = group_at(r, x);
        let text = format!("G/G: {}\nG/e: {}\n", list(&info.gg_basis), list(&info.ge_basis));
        return Ok(Out::ok(text, json!({ "grading": x.to_string(), "gg": info.gg_basis, "ge": info.ge_basis })));
    }
    let alpha = c.ropi()?;
    let n = c.o.window.unwrap_or(6).max(1) as usize;
    let e = c.engine()?;
    match ring {
        RingArg::Beg => {
            let m = f_eg_matrix(&e, &alpha, n)?;
            let mut text = format!("f_EG on the coset of {alpha}: rows {}\n", m.rows.join(", "));
            for (col, row) in m.cols.iter().zip(transpose(&m.entries)) {
                text.push_str(&format!("  {col}: {row:?}\n"));
            }
            Ok(Out::ok(text, serde_json::to_value(&m)?))
        }
        _ => {
            let basis = admissible_basis(&alpha, n)?;
            let mut text = String::new();
            let mut js = vec![];
            for b in &basis {
                let w = b.word();
                if ring == RingArg::Bg {
                    let eta = e.eta_word(w)?;
                    text.push_str(&format!("{:>4}  {b}  ->  {eta}\n", b.int_dim()));
                    js.push(json!({ "dim": b.int_dim(), "monomial": b.to_string(), "eta": eta }));
                } else {
                    text.push_str(&format!("{:>4}  {b}\n", b.int_dim()));
                    js.push(
                        json!({ "dim": b.int_dim(), "monomial": b.to_string(), "grading": b.grading().to_string() }),
                    );
                }
            }
            Ok(Out::ok(text, json!({ "coset": alpha.to_string(), "basis": js })))
        }
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

fn cmd_mul(c: &Ctx, x: &str, y: &str) -> anyhow::Result<Out> {
    if let Some(ring) = c.point_ring(RingArg::B)? {
        let a = spanned(x, parse_point(c.pc, ring, x))?;
        let b = spanned(y, parse_point(c.pc, ring, y))?;
        let z = a.mul(&b).context("multiplying")?;
        return Ok(Out::ok(format!("{z}\n"), point_json(&z)));
    }
    let e = c.engine()?;
    let a = spanned(x, parse_b(&e, x))?;
    let b = spanned(y, parse_b(&e, y))?;
    let z = e.bmul(&a, &b)?;
    Ok(Out::ok(format!("{z}\n"), b_json(&z)))
}

fn cmd_normalize(c: &Ctx, x: &str) -> anyhow::Result<Out> {
    if let Some(ring) = c.point_ring(RingArg::B)? {
        let a = spanned(x, parse_point(c.pc, ring, x))?;
        return Ok(Out::ok(format!("{a}\n"), point_json(&a)));
    }
    let e = c.engine()?;
    let a = spanned(x, parse_b(&e, x))?;
    Ok(Out::ok(format!("{a}\n"), b_json(&a)))
}

fn cmd_eta(c: &Ctx, x: &str) -> anyhow::Result<Out> {
    if c.point_ring(RingArg::B)?.is_some() {
        bail!(usage("eta applies to B_GU(1) classes"));
    }
    let e = c.engine()?;
    let a = spanned(x, parse_b(&e, x))?;
    let h = e.eta(&a)?;
    Ok(Out::ok(format!("{h}\n"), serde_json::to_value(&h)?))
}

fn cmd_grid(c: &Ctx) -> anyhow::Result<Out> {
    let ring = c.point_ring(RingArg::S0)?.ok_or_else(|| usage("grid needs a point ring: S0, EG or TEG"))?;
    let w = c.o.window.unwrap_or(8);
    if !(1..=32).contains(&w) {
        bail!(usage("--window must lie in 1..=32"));
    }
    let grid = match &c.o.grading {
        Some(g) => spanned(g, emit_window(ring, spanned(g, parse_rog(c.pc, g))?, w))?,
        None => emit_default(ring, c.pc, w)?,
    };
    Ok(Out { text: grid.to_text(), json: serde_json::to_value(&grid)?, svg: Some(grid.to_svg()), ok: true })
}

fn cmd_les(c: &Ctx) -> anyhow::Result<Out> {
    if let Some(g) = &c.o.grading {
        let x = spanned(g, parse_rog(c.pc, g))?;
        let r = les_exact(x)?;
        let text =
            if r.ok() { format!("exact at {x}\n") } else { format!("not exact at {x}\n{}\n", r.failures.join("\n")) };
        return Ok(Out {
            text,
            json: json!({ "grading": x.to_string(), "failures": r.failures }),
            svg: None,
            ok: r.ok(),
        });
    }
    let rep = les_exactness(c.pc.p(), c.o.window.unwrap_or(8), 2)?;
    Ok(report_out(rep, c.o.seed))
}

fn cmd_ext(c: &Ctx, q: &str, k: &str) -> anyhow::Result<Out> {
    let qc = spanned(q, Catalog::parse(q))?;
    let kc = spanned(k, Catalog::parse(k))?;
    let p = c.pc.p();
    let classes = ext::ext1_classify(qc, kc, p)?;
    let mut text = format!("Ext^1({}, {}) for p = {p}: {} classes\n", qc.name(p), kc.name(p), classes.len());
    for (i, cl) in classes.iter().enumerate() {
        let eq = if cl.equivalent_to.is_empty() { "-".to_string() } else { cl.equivalent_to.join(", ") };
        let mid = if cl.middle_isomorphic_to.is_empty() { "-".to_string() } else { cl.middle_isomorphic_to.join(", ") };
        text.push_str(&format!("  [{i}] standard extension of: {eq}; middle: {mid}; candidates: {}\n", cl.members));
    }
    Ok(Out::ok(text, json!({ "p": p, "quotient": qc.name(p), "kernel": kc.name(p), "classes": classes })))
}

fn cmd_verify(c: &Ctx) -> anyhow::Result<Out> {
    let p = c.pc.p();
    let mut rep = point_relations(p, c.o.window.unwrap_or(3))?;
    rep.name = "relations".into();
    if c.point_ring(RingArg::B)?.is_none() {
        rep.merge(bgu1::verify_relations(&c.engine()?)?);
    }
    Ok(report_out(rep, c.o.seed))
}

fn run_one(s: Suite, p: i64, seed: u64, trials: Option<usize>) -> eqcohom::Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let mut rep = match s {
        Suite::LesExactness => les_exactness(p, 8, 2)?,
        Suite::Relations => {
            let mut r = point_relations(p, 4)?;
            r.name = "relations".into();
            r.merge(bgu1::verify_relations(&Engine::new(pc, CoeffSystem::A)?)?);
            r.merge(bgu1::verify_relations(&Engine::new(pc, CoeffSystem::RZ)?)?);
            r
        }
        Suite::Ext => {
            let mut r = ext::ext_suite(p)?;
            let n = ext::ext1_classify(Catalog::RZ, Catalog::ConcZ, p)?.len();
            r.name = format!("ext ({n} classes)");
            r
        }
        Suite::EtaOracle => bgu1::oracle::eta_oracle_suite(p, trials.unwrap_or(200), seed)?,
        Suite::Admissible => bgu1::oracle::admissible_count_suite(p, trials.unwrap_or(50), seed)?,
        Suite::Triangularity => bgu1::oracle::triangularity_suite(p, trials.unwrap_or(10), 8, seed)?,
        Suite::Lewis => bgu1::check_lewis(&Engine::new(pc, CoeffSystem::A)?)?,
        Suite::Conc => bgu1::oracle::conc_suite(p, trials.unwrap_or(20), seed)?,
        Suite::Rz => bgu1::oracle::rz_quotient_suite(p, trials.unwrap_or(50), seed)?,
        Suite::All => unreachable!("expanded by the caller"),
    };
    rep.seed = Some(seed);
    Ok(rep)
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = format!(
        "{} p={} seed={}: {} ({} checked, {} skipped, {} failed)\n",
        r.name,
        r.p,
        r.seed.map_or("-".into(), |x| x.to_string()),
        if r.ok() { "PASS" } else { "FAIL" },
        r.checked,
        r.skipped,
        r.failures.len()
    );
    for f in &r.failures {
        s.push_str(&format!("  FAIL {f}\n"));
    }
    s
}

fn report_out(mut r: SuiteReport, seed: u64) -> Out {
    r.seed.get_or_insert(seed);
    Out { text: suite_text(&r), json: serde_json::to_value(&r).unwrap_or(Value::Null), svg: None, ok: r.ok() }
}

fn cmd_suite(c: &Ctx, name: Suite, trials: Option<usize>) -> anyhow::Result<Out> {
    let p = c.pc.p();
    let seed = c.o.seed;
    if name != Suite::All {
        return Ok(report_out(run_one(name, p, seed, trials)?, seed));
    }
    let all = [
        Suite::LesExactness,
        Suite::Relations,
        Suite::Ext,
        Suite::EtaOracle,
        Suite::Admissible,
        Suite::Triangularity,
        Suite::Lewis,
        Suite::Conc,
        Suite::Rz,
    ];
    let mut reps: Vec<(Suite, SuiteReport)> = all
        .par_iter()
        .filter(|&&s| p != 2 || s != Suite::Admissible)
        .map(|&s| {
            let r = run_one(s, p, seed, trials).unwrap_or_else(|e| {
                let name = s.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string());
                let mut r = SuiteReport::new(name, p);
                r.fail(e.to_string());
                r
            });
            (s, r)
        })
        .collect();
    reps.sort_by_key(|(s, _)| *s);
    let ok = reps.iter().all(|(_, r)| r.ok());
    let text = reps.iter().map(|(_, r)| suite_text(r)).collect();
    let json = json!({ "p": p, "seed": seed, "ok": ok, "suites": reps.iter().map(|(_, r)| r).collect::<Vec<_>>() });
    Ok(Out { text, json, svg: None, ok })
}

fn run(cli: &Cli) -> anyhow::Result<Out> {
    let pc = PrimeConfig::new(cli.opts.p).map_err(|e| usage(e.to_string()))?;
    let c = Ctx { o: &cli.opts, pc };
    match &cli.cmd {
        Cmd::Group => cmd_group(&c),
        Cmd::Mul { x, y } => cmd_mul(&c, x, y),
        Cmd::Normalize { x } => cmd_normalize(&c, x),
        Cmd::Eta { x } => cmd_eta(&c, x),
        Cmd::Grid => cmd_grid(&c),
        Cmd::LesCheck => cmd_les(&c),
        Cmd::ExtClassify { quotient, kernel } => cmd_ext(&c, quotient, kernel),
        Cmd::VerifyRelations => cmd_verify(&c),
        Cmd::Basis => cmd_basis(&c),
        Cmd::RunSuite { name, trials } => cmd_suite(&c, *name, *trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.opts.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap_or_default()),
                Format::Svg => match &out.svg {
                    Some(s) => print!("{s}"),
                    None => {
                        eprintln!("error: --format svg is only available for grid");
                        return ExitCode::from(2);
                    }
                },
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
