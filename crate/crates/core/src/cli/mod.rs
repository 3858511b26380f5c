//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out`, diagnostics to `err`, and returns the process exit code.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use crate::blocks::{Registry, PARAMETRIC_FAMILIES};
use crate::calculus::{evaluate, to_dot, CalcError, EvalResult, Recipe};
use crate::fpgroup::{
    abelianization, count_homs_to_sym, tietze_simplify, FpError, Presentation, DEFAULT_TIETZE_BUDGET,
};
use crate::planner::{enumerate_region_4d, realize, PlanError, Target6, Window};

use report::{fmt_opt, table};

/// Environment variable naming a registry file.
pub const REGISTRY_ENV: &str = "SYMPGEO_REGISTRY";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;
pub const EXIT_INADMISSIBLE: i32 = 4;
pub const EXIT_EXHAUSTED: i32 = 5;
pub const EXIT_MISMATCH: i32 = 6;
pub const EXIT_UNVERIFIABLE: i32 = 7;

#[derive(Debug, Parser)]
#[command(name = "sympgeo", version, about = "Geography of symplectic 4- and 6-manifolds")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Registry file; overrides SYMPGEO_REGISTRY and the bundled registry.
    #[arg(long, global = true, value_name = "FILE")]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List registry blocks and parametric families.
    Blocks {
        /// Substring of the block id.
        filter: Option<String>,
    },
    /// Evaluate a recipe file.
    Eval {
        file: PathBuf,
        /// Also write a Graphviz rendering.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Find a recipe for target Chern numbers and fundamental group.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        c13: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        c3: i64,
        /// Presentation such as "a,b | a b a' b'"; empty for the trivial group.
        #[arg(long, default_value = "")]
        group: String,
        /// Write the recipe as JSON.
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
        /// Write the recipe as Graphviz DOT.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Enumerate realized (c1^2, chi_h) points of 4-manifolds.
    #[command(group(ArgGroup::new("parity").args(["spin", "nonspin"])))]
    Geography {
        #[arg(long, default_value_t = 4)]
        dim: u32,
        /// Inclusive range `a..b` of chi_h.
        #[arg(long, value_name = "A..B", allow_hyphen_values = true)]
        chi_window: String,
        #[arg(long)]
        spin: bool,
        #[arg(long)]
        nonspin: bool,
        /// Number of generators of the group.
        #[arg(long, default_value_t = 0)]
        g: usize,
        /// Number of relators of the group.
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Also write the points as CSV.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Compare the fundamental group of a recipe with an expected presentation.
    #[command(name = "check-pi1")]
    CheckPi1 {
        file: PathBuf,
        #[arg(long)]
        expect: String,
    },
}

/// A failed command: exit code plus message.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }
}

type CmdResult = Result<i32, Failure>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    registry: Registry,
}

impl Ctx<'_> {
    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(EXIT_EVAL, format!("cannot write output: {e}")))
    }

    fn print_json(&mut self, v: &serde_json::Value) -> Result<(), Failure> {
        let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
        s.push('\n');
        self.print(&s)
    }
}

/// Runs the command line `args` (including the program name). `env_registry`
/// is the value of [`REGISTRY_ENV`], if set.
pub fn run<I, T>(args: I, env_registry: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_PARSE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let registry = match load_registry(cli.registry.as_deref(), env_registry) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            return f.code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out,
        registry,
    };
    let res = match cli.command {
        Command::Blocks { filter } => cmd_blocks(&mut ctx, filter.as_deref()),
        Command::Eval { file, dot } => cmd_eval(&mut ctx, &file, dot.as_deref()),
        Command::Realize {
            c13,
            c1c2,
            c3,
            group,
            emit,
            dot,
        } => cmd_realize(&mut ctx, (c13, c1c2, c3), &group, emit.as_deref(), dot.as_deref()),
        Command::Geography {
            dim,
            chi_window,
            spin,
            nonspin: _,
            g,
            r,
            csv,
        } => cmd_geography(&mut ctx, dim, &chi_window, spin, g, r, csv.as_deref()),
        Command::CheckPi1 { file, expect } => cmd_check_pi1(&mut ctx, &file, &expect),
    };
    match res {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn load_registry(flag: Option<&Path>, env: Option<String>) -> Result<Registry, Failure> {
    let path = match (flag, env) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(e)) if !e.is_empty() => PathBuf::from(e),
        _ => return Ok(Registry::bundled()),
    };
    Registry::load(&path).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::new(EXIT_EVAL, format!("cannot write {}: {e}", path.display())))
}

fn read_recipe(path: &Path) -> Result<Recipe, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    Recipe::from_json(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn parse_group(text: &str) -> Result<Presentation, Failure> {
    text.parse()
        .map_err(|e: FpError| Failure::new(EXIT_PARSE, format!("group {text:?}: {e}")))
}

fn eval_recipe(ctx: &Ctx, recipe: &Recipe) -> Result<EvalResult, Failure> {
    evaluate(recipe, &ctx.registry).map_err(|e| Failure::new(EXIT_EVAL, e.to_string()))
}

fn group_text(p: &Presentation) -> String {
    if p.generator_count() == 0 && p.relator_count() == 0 {
        "trivial".to_string()
    } else {
        p.to_string()
    }
}

fn cmd_blocks(ctx: &mut Ctx, filter: Option<&str>) -> CmdResult {
    let keep = |id: &str| filter.map_or(true, |f| id.contains(f));
    let blocks: Vec<_> = ctx.registry.iter().filter(|b| keep(&b.id)).cloned().collect();
    let families: Vec<_> = PARAMETRIC_FAMILIES.iter().filter(|(id, _)| keep(id)).collect();
    if ctx.json {
        let rows: Vec<_> = blocks
            .iter()
            .map(|b| {
                json!({
                    "id": b.id,
                    "e": b.char4.e,
                    "sigma": b.char4.sigma,
                    "c1sq": b.char4.c1_squared().ok(),
                    "chi_h": b.char4.chi_h().ok(),
                    "spin": b.char4.spin,
                    "claims": b.claims.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
                    "provenance": b.provenance,
                    "pi1_verified": b.fully_verified(),
                })
            })
            .collect();
        let fams: Vec<_> = families
            .iter()
            .map(|(id, d)| json!({ "id": id, "description": d }))
            .collect();
        ctx.print_json(&json!({ "blocks": rows, "families": fams }))?;
        return Ok(EXIT_OK);
    }
    let rows: Vec<Vec<String>> = blocks
        .iter()
        .map(|b| {
            let claims: Vec<_> = b.claims.iter().map(|c| c.as_str()).collect();
            vec![
                b.id.clone(),
                b.char4.e.to_string(),
                b.char4.sigma.to_string(),
                fmt_opt(b.char4.c1_squared().ok()),
                fmt_opt(b.char4.chi_h().ok()),
                if claims.is_empty() { "-".into() } else { claims.join(",") },
                b.provenance.clone(),
            ]
        })
        .collect();
    let mut text = table(&["id", "e", "sigma", "c1sq", "chi_h", "claims", "provenance"], &rows);
    if !families.is_empty() {
        text.push('\n');
        let rows: Vec<Vec<String>> = families.iter().map(|(id, d)| vec![id.to_string(), d.to_string()]).collect();
        text.push_str(&table(&["family", "description"], &rows));
    }
    ctx.print(&text)?;
    Ok(EXIT_OK)
}

fn invariants_json(v: &EvalResult) -> serde_json::Value {
    json!({
        "dim": v.dim,
        "char4": v.char4.map(|c| json!({
            "e": c.e,
            "sigma": c.sigma,
            "spin": c.spin,
            "c1sq": c.c1_squared().ok(),
            "chi_h": c.chi_h().ok(),
        })),
        "chern": v.chern.map(|t| json!({ "c13": t.c13, "c1c2": t.c1c2, "c3": t.c3 })),
        "pi1": v.pi1.to_string(),
        "pi1_verified": v.pi1_verified,
        "abelianization": abelianization(&v.pi1).to_string(),
    })
}

fn invariants_text(v: &EvalResult) -> String {
    let mut s = format!("dim: {}\n", v.dim);
    if let Some(c) = v.char4 {
        s += &format!(
            "e: {}\nsigma: {}\nc1sq: {}\nchi_h: {}\nspin claim: {}\n",
            c.e,
            c.sigma,
            fmt_opt(c.c1_squared().ok()),
            fmt_opt(c.chi_h().ok()),
            if c.spin { "yes" } else { "no" }
        );
    }
    if let Some(t) = v.chern {
        s += &format!("chern (c1^3, c1c2, c3): {t}\n");
    }
    s += &format!(
        "pi1: {}\nabelianization: {}\npi1 status: {}\n",
        group_text(&v.pi1),
        abelianization(&v.pi1),
        if v.pi1_verified { "verified gluing data" } else { "unverified (uses claimed gluing data)" }
    );
    s
}

fn cmd_eval(ctx: &mut Ctx, file: &Path, dot: Option<&Path>) -> CmdResult {
    let recipe = read_recipe(file)?;
    let v = eval_recipe(ctx, &recipe)?;
    if let Some(d) = dot {
        write_file(d, &to_dot(&recipe, &ctx.registry))?;
    }
    if ctx.json {
        let mut j = invariants_json(&v);
        j["nodes"] = json!(recipe.len());
        ctx.print_json(&j)?;
    } else {
        let text = format!("nodes: {}\n{}", recipe.len(), invariants_text(&v));
        ctx.print(&text)?;
    }
    Ok(EXIT_OK)
}

fn cmd_realize(
    ctx: &mut Ctx,
    (c13, c1c2, c3): (i64, i64, i64),
    group: &str,
    emit: Option<&Path>,
    dot: Option<&Path>,
) -> CmdResult {
    let group = parse_group(group)?;
    let target = Target6::new(c13, c1c2, c3, group);
    let real = realize(&target, &ctx.registry).map_err(|e| {
        let code = match e {
            PlanError::Inadmissible(_) => EXIT_INADMISSIBLE,
            PlanError::SearchExhausted(_) | PlanError::NotRealizable(_) => EXIT_EXHAUSTED,
            PlanError::Calc(CalcError::Parse { .. }) => EXIT_PARSE,
            _ => EXIT_EVAL,
        };
        Failure::new(code, e.to_string())
    })?;
    let v = eval_recipe(ctx, &real.recipe)?;
    let recipe_json = real.recipe.to_json();
    if let Some(p) = emit {
        write_file(p, &recipe_json)?;
    }
    if let Some(p) = dot {
        write_file(p, &to_dot(&real.recipe, &ctx.registry))?;
    }
    let exact = v.chern == Some(target.chern);
    let ab_got = abelianization(&v.pi1);
    let ab_want = abelianization(&target.group);
    let verification = if exact { "exact match" } else { "MISMATCH" };
    if ctx.json {
        ctx.print_json(&json!({
            "target": { "c13": c13, "c1c2": c1c2, "c3": c3, "group": target.group.to_string() },
            "family": real.family,
            "blocks": real.blocks,
            "base": { "c13": real.base.c13, "c1c2": real.base.c1c2, "c3": real.base.c3 },
            "prep_blow_up": real.prep_blow_up,
            "budget": real.budget,
            "recipe": serde_json::from_str::<serde_json::Value>(&recipe_json).expect("recipe json"),
            "result": invariants_json(&v),
            "verification": verification,
            "abelianization_matches": ab_got == ab_want,
        }))?;
    } else {
        let family = serde_json::to_value(real.family).expect("family serializes");
        let mut s = format!(
            "target: {} with pi1 {}\nbase: {} {}\nbase chern: {}\n",
            target.chern,
            group_text(&target.group),
            family.as_str().unwrap_or_default(),
            real.blocks.join(" "),
            real.base
        );
        s += &format!(
            "blow-ups: preparatory point {}, points {}, exceptional lines {}, genus-2 surfaces {}\n",
            real.prep_blow_up as u8, real.budget.p, real.budget.r_e, real.budget.z
        );
        s += &format!("nodes: {}\n", real.recipe.len());
        s += &format!("verification: {verification} {}\n", fmt_opt(v.chern));
        s += &format!(
            "pi1: {}\nabelianization: {} (target {}, {})\n",
            group_text(&v.pi1),
            ab_got,
            ab_want,
            if ab_got == ab_want { "consistent" } else { "inconsistent" }
        );
        s += "recipe:\n";
        s += &recipe_json;
        ctx.print(&s)?;
    }
    Ok(if exact { EXIT_OK } else { EXIT_MISMATCH })
}

fn parse_window(text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::new(EXIT_PARSE, format!("chi window {text:?} is not of the form A..B"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn cmd_geography(ctx: &mut Ctx, dim: u32, window: &str, spin: bool, g: usize, r: usize, csv_out: Option<&Path>) -> CmdResult {
    if dim != 4 {
        return Err(Failure::new(EXIT_PARSE, format!("--dim {dim} is not supported; only 4")));
    }
    let (lo, hi) = parse_window(window)?;
    let pts = enumerate_region_4d(&Window::chi(lo, hi), g, r, spin);
    if let Some(path) = csv_out {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Failure::new(EXIT_EVAL, e.to_string());
        w.write_record(["c1sq", "chi_h", "e", "sigma", "family"]).map_err(io)?;
        for p in &pts {
            w.write_record([p.c1sq.to_string(), p.chi_h.to_string(), p.e.to_string(), p.sigma.to_string(), p.witness.clone()])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::new(EXIT_EVAL, e.to_string()))?;
        write_file(path, &String::from_utf8(bytes).expect("csv is utf-8"))?;
    }
    if ctx.json {
        ctx.print_json(&json!({
            "spin": spin,
            "g": g,
            "r": r,
            "chi_window": [lo, hi],
            "points": pts,
        }))?;
    } else {
        let rows: Vec<Vec<String>> = pts
            .iter()
            .map(|p| {
                vec![
                    p.c1sq.to_string(),
                    p.chi_h.to_string(),
                    p.e.to_string(),
                    p.sigma.to_string(),
                    p.witness.clone(),
                    p.c1sq_as_stated.to_string(),
                ]
            })
            .collect();
        let text = table(&["c1sq", "chi_h", "e", "sigma", "family", "c1sq_4gr"], &rows);
        ctx.print(&text)?;
    }
    Ok(EXIT_OK)
}

/// Outcome of comparing a computed group with an expected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi1Status {
    /// The simplified presentations agree syntactically.
    Verified,
    /// Abelianizations and hom counts to `S_2..S_5` agree.
    ConsistentWith,
    /// The named oracle disagrees.
    Mismatch(String),
    Unverifiable(String),
}

impl Pi1Status {
    pub fn label(&self) -> &'static str {
        match self {
            Pi1Status::Verified => "verified",
            Pi1Status::ConsistentWith => "consistent-with",
            Pi1Status::Mismatch(_) => "mismatch",
            Pi1Status::Unverifiable(_) => "unverifiable",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Pi1Status::Verified | Pi1Status::ConsistentWith => EXIT_OK,
            Pi1Status::Mismatch(_) => EXIT_MISMATCH,
            Pi1Status::Unverifiable(_) => EXIT_UNVERIFIABLE,
        }
    }
}

/// Runs the oracle pair on a computed group. `trusted` is false when the
/// presentation relies on claimed data.
pub fn compare_pi1(got: &Presentation, expect: &Presentation, trusted: bool) -> (Pi1Status, Vec<String>) {
    let mut log = Vec::new();
    if !trusted {
        return (
            Pi1Status::Unverifiable("the presentation relies on claimed gluing data".into()),
            log,
        );
    }
    let got = tietze_simplify(got, DEFAULT_TIETZE_BUDGET);
    let expect = tietze_simplify(expect, DEFAULT_TIETZE_BUDGET);
    if got.syntactically_equal(&expect) {
        log.push("presentations agree after simplification".into());
        return (Pi1Status::Verified, log);
    }
    let (a, b) = (abelianization(&got), abelianization(&expect));
    log.push(format!("abelianization: {a} vs {b}"));
    if a != b {
        return (Pi1Status::Mismatch("abelianization".into()), log);
    }
    for n in 2..=5 {
        match (count_homs_to_sym(&got, n), count_homs_to_sym(&expect, n)) {
            (Ok(x), Ok(y)) => {
                log.push(format!("homs to S{n}: {x} vs {y}"));
                if x != y {
                    return (Pi1Status::Mismatch(format!("homs to S{n}")), log);
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                return (Pi1Status::Unverifiable(format!("homs to S{n}: {e}")), log);
            }
        }
    }
    (Pi1Status::ConsistentWith, log)
}

fn cmd_check_pi1(ctx: &mut Ctx, file: &Path, expect: &str) -> CmdResult {
    let recipe = read_recipe(file)?;
    let expect = parse_group(expect)?;
    let v = eval_recipe(ctx, &recipe)?;
    let (status, log) = compare_pi1(&v.pi1, &expect, v.pi1_verified);
    let detail = match &status {
        Pi1Status::Mismatch(d) | Pi1Status::Unverifiable(d) => Some(d.clone()),
        _ => None,
    };
    if ctx.json {
        ctx.print_json(&json!({
            "pi1": v.pi1.to_string(),
            "expect": expect.to_string(),
            "status": status.label(),
            "detail": detail,
            "oracles": log,
        }))?;
    } else {
        let mut s = format!("pi1: {}\nexpect: {}\n", group_text(&v.pi1), group_text(&expect));
        for l in &log {
            s += &format!("  {l}\n");
        }
        s += &format!("status: {}", status.label());
        if let Some(d) = &detail {
            s += &format!(" ({d})");
        }
        s.push('\n');
        ctx.print(&s)?;
    }
    Ok(status.exit_code())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["sympgeo"];
        full.extend_from_slice(args);
        let code = run(full, None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["blocks", "zzz"]).0, EXIT_OK);
        assert_eq!(run_args(&["nonsense"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["realize", "--c13", "0", "--c1c2", "0", "--c3", "0"]).0, EXIT_OK);
        let (code, _, err) = run_args(&["realize", "--c13", "1", "--c1c2", "0", "--c3", "0"]);
        assert_eq!(code, EXIT_INADMISSIBLE);
        assert!(err.contains("c13 must be even"));
        let (code, _, err) = run_args(&["realize", "--c13", "2", "--c1c2", "24", "--c3", "2", "--group", "a | a a"]);
        assert_eq!(code, EXIT_EXHAUSTED);
        assert!(err.contains("searched e <="));
        assert_eq!(run_args(&["realize", "--c13", "0", "--c1c2", "0", "--c3", "0", "--group", "a |; |"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["geography", "--dim", "6", "--chi-window", "2..2"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["geography", "--chi-window", "2-2"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["geography", "--chi-window", "2..2", "--spin", "--nonspin"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["eval", "/nonexistent/recipe.json"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["--registry", "/nonexistent/blocks.reg", "blocks"]).0, EXIT_PARSE);
    }

    #[test]
    fn geography_text_lists_sixteen_rows() {
        let (code, out, _) = run_args(&["geography", "--chi-window", "2..2", "--nonspin"]);
        assert_eq!(code, 0);
        let c: Vec<i64> = out.lines().skip(1).map(|l| l.split_whitespace().next().unwrap().parse().unwrap()).collect();
        assert_eq!(c, (0..16).collect::<Vec<_>>());
        let (_, out, _) = run_args(&["geography", "--chi-window", "5..1"]);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn registry_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tiny.reg");
        std::fs::write(&path, "[ONLY]\ne = 12\nsigma = -8\n").unwrap();
        let mut out = Vec::new();
        let code = run(["sympgeo", "blocks"], Some(path.display().to_string()), &mut out, &mut Vec::new());
        assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("ONLY") && !text.contains("E1"));
        let mut out = Vec::new();
        let flag = ["sympgeo", "--registry", "/nonexistent.reg", "blocks"];
        assert_eq!(run(flag, Some(path.display().to_string()), &mut out, &mut Vec::new()), EXIT_PARSE);
    }

    #[test]
    fn bad_registry_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.reg");
        std::fs::write(&path, "[A]\ne = 1\nsigma = x\n").unwrap();
        let (code, _, err) = run_args(&["--registry", path.to_str().unwrap(), "blocks"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("line 3"), "{err}");
    }

    #[test]
    fn compare_pi1_statuses() {
        let z: Presentation = "a |".parse().unwrap();
        let z2: Presentation = "a | a a".parse().unwrap();
        let t = Presentation::trivial();
        assert_eq!(compare_pi1(&z, &z, true).0, Pi1Status::Verified);
        assert_eq!(compare_pi1(&t, &z, true).0, Pi1Status::Mismatch("abelianization".into()));
        assert!(matches!(compare_pi1(&z, &z, false).0, Pi1Status::Unverifiable(_)));
        // same abelianization Z^2, different hom counts to S3
        let f2: Presentation = "a, b |".parse().unwrap();
        let zz: Presentation = "a, b | a b a' b'".parse().unwrap();
        assert_eq!(compare_pi1(&f2, &zz, true).0, Pi1Status::Mismatch("homs to S3".into()));
        // a presentation of Z/2 not syntactically equal to the standard one
        let alt: Presentation = "a, b | a a; b".parse().unwrap();
        assert!(matches!(compare_pi1(&alt, &z2, true).0, Pi1Status::Verified | Pi1Status::ConsistentWith));
        let big: Presentation = "a,b,c,d,e,f,g |".parse().unwrap();
        let bigger: Presentation = "a,b,c,d,e,f,g | a a".parse().unwrap();
        assert!(matches!(compare_pi1(&bigger, &big, true).0, Pi1Status::Mismatch(_)));
    }
}
