//! Command-line front end for `kahler-core`.
//!
//! Exit codes: `0` success or certificate, `2` inconclusive, `3` the
//! hypotheses fail or an obstruction was found, `1` usage or I/O errors.

pub mod format;
pub mod input;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kahler_core::construct::{assemble_counterexample, graph_subgroup, FiniteGroup, ReportVerdict};
use kahler_core::exact::{snf, FgAbelianGroup};
use kahler_core::hom::{check_even_rank, realize_free_hom, split_torsion, AbelianHom, Parity};
use kahler_core::torus::{
    build_torus, distinct_candidates, ns_integral_search, voisin_check, NsVerdict, TorusWithEndomorphism,
    VoisinOutcome,
};
use kahler_core::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_FAILS: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "kahler", version, about = "Certify non-projective complex tori and realize Kähler group homomorphisms")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand. Flags override environment
/// variables, which override the defaults.
#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Working precision for floating-point stages.
    #[arg(long, global = true, env = "TORUS_PRECISION_BITS", default_value_t = 256)]
    pub precision_bits: u32,
    /// Number of primes scanned per certificate search.
    #[arg(long, global = true, env = "TORUS_PRIME_BUDGET", default_value_t = 1000)]
    pub prime_budget: usize,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Smith normal form `U A V = D` of an integer matrix.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Certify the torus of a monic polynomial as not an abelian variety.
    CertifyTorus {
        #[arg(long)]
        poly: String,
        /// Root indices for the holomorphic directions, one per conjugate pair.
        #[arg(long, value_delimiter = ',')]
        selection: Option<Vec<usize>>,
    },
    /// Randomized search for certifiable polynomials of degree 2n.
    SearchTorus {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        bound: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_tries: u64,
    },
    /// Realize a homomorphism of finitely generated abelian groups by tori.
    ///
    /// Row `i` of the matrix is the image of the `i`-th source generator in
    /// target coordinates (free generators first, then torsion generators).
    RealizeHom {
        #[arg(long)]
        matrix: String,
        /// Torsion invariants of the source, e.g. "2,6".
        #[arg(long, default_value = "")]
        source_torsion: String,
        /// Torsion invariants of the target.
        #[arg(long, default_value = "")]
        target_torsion: String,
    },
    /// Assemble the Kähler, non-projective homomorphism for a polynomial.
    BuildCounterexample {
        #[arg(long)]
        poly: String,
        /// Height bound for the integral (1,1)-form search.
        #[arg(long, default_value_t = 10_000)]
        height: u64,
        /// Accepted for reproducible invocations; the pipeline is deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Search for integral (1,1)-forms on a torus.
    NsSearch {
        /// Polynomial defining the torus; omit with --gaussian-square.
        #[arg(long, required_unless_present = "gaussian_square")]
        poly: Option<String>,
        /// Use E x E with E = C / Z[i] instead of a polynomial torus.
        #[arg(long, conflicts_with = "poly")]
        gaussian_square: bool,
        #[arg(long, default_value_t = 10_000)]
        height: u64,
    },
    /// Index of the graph of `h: A -> C` in `A x C`.
    GraphIndex {
        /// Free rank of `A`.
        #[arg(long, default_value_t = 0)]
        free_rank: usize,
        /// Torsion invariants of `A`.
        #[arg(long, default_value = "")]
        torsion: String,
        /// `s3`, `cyclic:N`, or a JSON multiplication table (inline or file).
        #[arg(long)]
        group: String,
        /// Images of the generators of `A` as element indices of `C`.
        #[arg(long, default_value = "")]
        images: String,
    },
}

/// Fully resolved settings of one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub prime_budget: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
}

impl From<&GlobalArgs> for RunConfig {
    fn from(g: &GlobalArgs) -> Self {
        Self {
            precision_bits: g.precision_bits,
            prime_budget: g.prime_budget,
            out: g.out.clone(),
            format: g.format,
            jobs: g.jobs,
        }
    }
}

/// Result of a subcommand: the JSON document, a text rendering and the exit
/// code.
struct Output {
    json: Value,
    text: String,
    code: i32,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<input::ParseError> for CliError {
    fn from(e: input::ParseError) -> Self {
        CliError::Usage(e.0)
    }
}

type CmdResult = Result<Output, CliError>;

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cfg = RunConfig::from(&cli.global);
    let result = match cfg.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &cfg)),
            Err(e) => Err(CliError::Usage(format!("cannot start worker pool: {e}"))),
        },
        None => dispatch(&cli.command, &cfg),
    };
    match result {
        Ok(out) => match emit(&cfg, &out) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(cfg: &RunConfig, out: &Output) -> std::io::Result<()> {
    let body = match cfg.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("values serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => out.text.clone(),
    };
    match &cfg.out {
        Some(path) => fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> CmdResult {
    match cmd {
        Command::Snf { matrix } => cmd_snf(matrix),
        Command::CertifyTorus { poly, selection } => cmd_certify(poly, selection.as_deref(), cfg),
        Command::SearchTorus { n, bound, seed, max_tries } => cmd_search(*n, *bound, *seed, *max_tries, cfg),
        Command::RealizeHom { matrix, source_torsion, target_torsion } => {
            cmd_realize(matrix, source_torsion, target_torsion)
        }
        Command::BuildCounterexample { poly, height, .. } => cmd_counterexample(poly, *height, cfg),
        Command::NsSearch { poly, gaussian_square, height } => {
            cmd_ns(poly.as_deref(), *gaussian_square, *height, cfg)
        }
        Command::GraphIndex { free_rank, torsion, group, images } => {
            cmd_graph_index(*free_rank, torsion, group, images)
        }
    }
}

fn cmd_snf(arg: &str) -> CmdResult {
    let m = input::parse_matrix_arg(arg)?;
    let s = snf(&m);
    if !s.verify(&m) {
        return Err(Error::InvariantViolated("Smith decomposition does not reproduce the input".into()).into());
    }
    let diag: Vec<String> = s.diag.iter().map(|d| d.to_string()).collect();
    Ok(Output {
        json: format::snf(&m, &s),
        text: format!("diag ({})\nrank {}\n", diag.join(", "), s.rank()),
        code: EXIT_OK,
    })
}

fn outcome_code(o: &VoisinOutcome) -> i32 {
    match o {
        VoisinOutcome::Certified(_) => EXIT_OK,
        VoisinOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        VoisinOutcome::Fails(_) => EXIT_FAILS,
    }
}

fn cmd_certify(arg: &str, selection: Option<&[usize]>, cfg: &RunConfig) -> CmdResult {
    let p = input::parse_poly_arg(arg)?;
    let outcome = voisin_check(&p, cfg.prime_budget)?;
    let mut json = format::voisin_outcome(&outcome);
    let mut text = format!("{}\n", format::voisin_reason_text(&outcome));
    if let VoisinOutcome::Certified(c) = &outcome {
        if !c.verify() {
            return Err(Error::InvariantViolated("certificate failed re-verification".into()).into());
        }
        let t = build_torus(&p, cfg.precision_bits, selection)?;
        text.push_str(&format!(
            "torus of dimension {} at {} bits, max residual {}\n",
            t.dimension(),
            cfg.precision_bits,
            t.residuals.max().to_decimal_string(6)
        ));
        json["torus"] = format::torus(&t);
    }
    Ok(Output { code: outcome_code(&outcome), json, text })
}

fn cmd_search(n: usize, bound: u64, seed: u64, max_tries: u64, cfg: &RunConfig) -> CmdResult {
    if n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let candidates = distinct_candidates(n, bound, seed, max_tries);
    let budget = cfg.prime_budget;
    // Indexed parallel iteration keeps the try-index order.
    let results: Vec<(u64, VoisinOutcome)> = candidates
        .par_iter()
        .map(|(i, p)| voisin_check(p, budget).map(|o| (*i, o)))
        .collect::<Result<_, _>>()?;
    let mut certificates = Vec::new();
    let (mut fails, mut inconclusive) = (0usize, 0usize);
    for (i, o) in &results {
        match o {
            VoisinOutcome::Certified(c) => certificates.push((*i, c)),
            VoisinOutcome::Inconclusive { .. } => inconclusive += 1,
            VoisinOutcome::Fails(_) => fails += 1,
        }
    }
    let mut text = format!(
        "{} distinct candidates: {} certified, {} inconclusive, {} fail\n",
        results.len(),
        certificates.len(),
        inconclusive,
        fails
    );
    for (i, c) in &certificates {
        text.push_str(&format!("try {i}: {}\n", poly_text(&c.poly)));
    }
    let json = json!({
        "n": n,
        "bound": bound,
        "seed": seed,
        "max_tries": max_tries,
        "distinct_candidates": results.len(),
        "inconclusive": inconclusive,
        "fails": fails,
        "certificates": certificates
            .iter()
            .map(|(i, c)| json!({ "try_index": i, "certificate": format::voisin_certificate(c) }))
            .collect::<Vec<_>>(),
    });
    let code = if certificates.is_empty() { EXIT_INCONCLUSIVE } else { EXIT_OK };
    Ok(Output { json, text, code })
}

fn poly_text(p: &kahler_core::IntPolynomial) -> String {
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c == &0.into() {
            continue;
        }
        let mag = if c < &0.into() { -c.clone() } else { c.clone() };
        let sign = if c < &0.into() { "-" } else { "+" };
        let body = match (k, mag == 1.into()) {
            (0, _) => mag.to_string(),
            (1, true) => "x".into(),
            (1, false) => format!("{mag}*x"),
            (_, true) => format!("x^{k}"),
            (_, false) => format!("{mag}*x^{k}"),
        };
        terms.push((sign, body));
    }
    let mut s = String::new();
    for (i, (sign, body)) in terms.iter().enumerate() {
        match (i, *sign) {
            (0, "-") => s.push('-'),
            (0, _) => {}
            _ => s.push_str(&format!(" {sign} ")),
        }
        s.push_str(body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn cmd_realize(arg: &str, source_torsion: &str, target_torsion: &str) -> CmdResult {
    let rows = input::parse_matrix_arg(arg)?;
    let src_t = input::parse_int_list(source_torsion)?;
    let tgt_t = input::parse_int_list(target_torsion)?;
    let source_gens = rows.rows();
    let target_gens = rows.cols();
    if source_gens < src_t.len() || target_gens < tgt_t.len() {
        return Err(CliError::Usage("more torsion invariants than generators".into()));
    }
    let source = FgAbelianGroup::new(source_gens - src_t.len(), src_t)?;
    let target = FgAbelianGroup::new(target_gens - tgt_t.len(), tgt_t)?;
    let f = AbelianHom::new(source, target, rows.to_rows())?;
    let ranks = match check_even_rank(&f) {
        Ok(r) => r,
        Err(Error::OddFreeRank(k)) => {
            let msg = format!("free rank {k} is odd: not the abelianization of a Kähler group");
            eprintln!("{msg}");
            return Ok(Output {
                json: json!({ "status": "obstruction", "reason": "odd_free_rank", "free_rank": k }),
                text: format!("{msg}\n"),
                code: EXIT_FAILS,
            });
        }
        Err(e) => return Err(e.into()),
    };
    if ranks.parity == Parity::Odd {
        let msg = format!(
            "odd rank obstruction: kernel {}, image {}, cokernel {}",
            ranks.kernel, ranks.image, ranks.cokernel
        );
        eprintln!("{msg}");
        return Ok(Output {
            json: json!({ "status": "obstruction", "reason": "odd_rank", "ranks": format::ranks(&ranks) }),
            text: format!("{msg}\n"),
            code: EXIT_FAILS,
        });
    }
    let split = split_torsion(&f);
    let plan = match &split.free_part {
        Some(free) => Some(realize_free_hom(free)?),
        None => None,
    };
    let mut text = format!("ranks: kernel {}, image {}, cokernel {}\n", ranks.kernel, ranks.image, ranks.cokernel);
    if let Some(p) = &plan {
        for s in &p.steps {
            text.push_str(&format!("{s:?}\n"));
        }
    }
    let json = json!({
        "status": "realized",
        "ranks": format::ranks(&ranks),
        "plan": plan.as_ref().map(format::plan),
        "torsion": format::torsion(&split.torsion_part),
    });
    Ok(Output { json, text, code: EXIT_OK })
}

fn cmd_counterexample(arg: &str, height: u64, cfg: &RunConfig) -> CmdResult {
    let p = input::parse_poly_arg(arg)?;
    let r = assemble_counterexample(&p, cfg.prime_budget, cfg.precision_bits, height)?;
    let code = match r.verdict {
        ReportVerdict::Complete => EXIT_OK,
        ReportVerdict::Inconclusive(_) => EXIT_INCONCLUSIVE,
        ReportVerdict::Fails(_) => EXIT_FAILS,
    };
    let mut text = format!("voisin: {}\n", format::voisin_reason_text(&r.voisin));
    if let Some(b) = r.projection_trivial {
        text.push_str(&format!("projection to S3 trivial: {b}\n"));
    }
    if r.albanese.is_some() {
        text.push_str("albanese transport: recovered\n");
    }
    if let Some(ns) = &r.ns_search {
        text.push_str(&format!(
            "integral (1,1)-forms up to height {}: {}\n",
            ns.height_bound,
            ns.forms_found.len()
        ));
    }
    if let Some(s) = r.statement {
        text.push_str(s);
        text.push('\n');
    }
    Ok(Output { json: format::report(&r), text, code })
}

fn cmd_ns(arg: Option<&str>, gaussian: bool, height: u64, cfg: &RunConfig) -> CmdResult {
    let t = if gaussian {
        TorusWithEndomorphism::gaussian_square(cfg.precision_bits)?
    } else {
        let p = input::parse_poly_arg(arg.expect("clap requires --poly"))?;
        build_torus(&p, cfg.precision_bits, None)?
    };
    let r = ns_integral_search(&t, height, cfg.precision_bits)?;
    let verdict = match r.verdict {
        NsVerdict::NoFormFound => "no integral (1,1)-form found",
        NsVerdict::FormsFound => "integral (1,1)-forms found",
    };
    let text = format!(
        "{verdict} up to height {}: {} forms, rank {}{}\n",
        height,
        r.forms_found.len(),
        r.independent_rank,
        if r.exhaustive { "" } else { " (enumeration truncated)" }
    );
    Ok(Output { json: format::ns_report(&r), text, code: EXIT_OK })
}

fn parse_group(arg: &str) -> Result<FiniteGroup, CliError> {
    let a = arg.trim();
    if a.eq_ignore_ascii_case("s3") {
        return Ok(FiniteGroup::s3());
    }
    if let Some(n) = a.strip_prefix("cyclic:") {
        let n: usize = n.trim().parse().map_err(|_| CliError::Usage(format!("bad cyclic order {n:?}")))?;
        return Ok(FiniteGroup::cyclic(n)?);
    }
    Ok(FiniteGroup::from_table(input::parse_table_arg(a)?)?)
}

fn cmd_graph_index(free_rank: usize, torsion: &str, group: &str, images: &str) -> CmdResult {
    let a = FgAbelianGroup::new(free_rank, input::parse_int_list(torsion)?)?;
    let c = parse_group(group)?;
    let h2 = input::parse_int_list(images)?
        .iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::Usage(format!("bad element index {x}"))))
        .collect::<Result<Vec<_>, _>>()?;
    match graph_subgroup(&a, &c, &h2) {
        Ok(g) => Ok(Output {
            json: json!({ "order": c.order(), "images": g.h2, "index": g.index }),
            text: format!("index {}\n", g.index),
            code: EXIT_OK,
        }),
        Err(Error::NotAHomomorphism(msg)) => {
            eprintln!("not a homomorphism: {msg}");
            Ok(Output {
                json: json!({ "status": "not_a_homomorphism", "reason": msg }),
                text: format!("not a homomorphism: {msg}\n"),
                code: EXIT_FAILS,
            })
        }
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_rendering() {
        let p = input::parse_poly("x^4 - 2x^3 + x - 1").unwrap();
        assert_eq!(poly_text(&p), "x^4 - 2*x^3 + x - 1");
        assert_eq!(poly_text(&input::parse_poly("-x").unwrap()), "-x");
    }
}
