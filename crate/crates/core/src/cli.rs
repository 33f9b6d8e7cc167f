//! The `z2z4` command-line tool.
//!
//! Matrix arguments are file paths in the text matrix format, or
//! `name:<registry-name>` for one of the built-in reference matrices. Every
//! input matrix is read as a parity-check matrix, so it describes the code
//! it annihilates.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::MixedMatrix;
use crate::code::{apply_monomial, AdditiveCode};
use crate::config::Config;
use crate::constructions::{
    double_additive, double_quaternary, extended_hamming_parity, extended_perfect_z2z4_dual,
    extended_perfect_z4_dual, hamming_parity, paper_matrix, perfect_z2z4_dual, quadruple_additive,
    quadruple_quaternary, REGISTRY,
};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::format::{format_matrix, format_witness, parse_code_type, parse_matrix, parse_monomial};
use crate::lattice::{eta, intersect, span};
use crate::reproduce::{reproduce, ReproduceOptions, Target as ReproduceTarget, DEFAULT_SEED};
use crate::search::{enumerate_types, search, Mode, Outcome, SearchOptions, SearchTask, Target};
use crate::verify::{verify, Theorem, VerifyConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "z2z4", version, about = "Additive codes over Z2^a x Z4^b")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// key=value settings file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for search (0 = all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Refuse to enumerate codes with more than 2^N words.
    #[arg(long = "guard-log2", global = true)]
    pub guard_log2: Option<usize>,
    /// Refuse exhaustive orbits with more than 2^N elements.
    #[arg(long = "ceiling-log2", global = true)]
    pub ceiling_log2: Option<u32>,
}

#[derive(Debug, Args)]
pub struct One {
    /// Parity-check matrix file, or name:<registry-name>.
    #[arg(long)]
    pub parity: String,
}

#[derive(Debug, Args)]
pub struct Two {
    #[arg(long)]
    pub h1: String,
    /// Defaults to the first matrix.
    #[arg(long)]
    pub h2: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SearchMode {
    Exhaustive,
    Random,
    Bounded,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the type of the code and of its dual.
    Type(One),
    /// Print a parity-check matrix of the dual code.
    Dual(One),
    /// Print the Gray image, one binary word per line.
    Gray(One),
    /// Print a parity-check matrix of the span of two codes.
    Span(Two),
    /// Print a parity-check matrix of the intersection of two codes.
    Intersect(Two),
    /// Print the size of the intersection of two codes.
    Eta(Two),
    /// Build a parity-check matrix: hamming <t>, extended-hamming <t>,
    /// z4-extended <t> <delta>, z2z4 <t> <r>, z2z4-extended <t> <r>,
    /// double <file>, quadruple <file>, named <registry-name>, list.
    Construct {
        family: String,
        params: Vec<String>,
    },
    /// Apply a monomial in cycle notation to a parity-check matrix.
    Transform {
        perm: String,
        #[command(flatten)]
        input: One,
    },
    /// Search monomials m for C1 ∩ m(C2). Without a target, list every
    /// dual type reached.
    Search {
        mode: SearchMode,
        #[command(flatten)]
        input: Two,
        /// Dual type of the intersection to look for, e.g. (8,4;6,1;6).
        #[arg(long = "target-type")]
        target_type: Option<String>,
        /// Intersection size to look for, as log2.
        #[arg(long = "target-log2-eta")]
        target_eta: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long = "max-support", default_value_t = 4)]
        max_support: usize,
        /// Allow sign changes on quaternary coordinates.
        #[arg(long)]
        signs: bool,
    },
    /// Check a theorem on the constructed families.
    Verify {
        theorem: String,
        #[arg(long)]
        t: Option<usize>,
        /// Required by the randomized theorems.
        #[arg(long)]
        seed: Option<u64>,
        /// Samples per code pair.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        signs: bool,
    },
    /// Rerun a named result; `all` runs every target.
    Reproduce {
        target: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn load(source: &str) -> Result<MixedMatrix> {
    if let Some(name) = source.strip_prefix("name:") {
        return paper_matrix(name);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?;
    parse_matrix(&text)
}

fn code(source: &str) -> Result<AdditiveCode> {
    Ok(AdditiveCode::from_parity_check(&load(source)?))
}

fn pair(two: &Two) -> Result<(AdditiveCode, AdditiveCode)> {
    let c1 = code(&two.h1)?;
    let c2 = match &two.h2 {
        Some(h) => code(h)?,
        None => c1.clone(),
    };
    Ok((c1, c2))
}

/// Generators of the dual, which annihilate `c`.
fn parity_of(c: &AdditiveCode) -> MixedMatrix {
    dual(c).gens()
}

fn number(params: &[String], i: usize) -> Result<usize> {
    params
        .get(i)
        .ok_or_else(|| Error::Precondition(format!("missing parameter {}", i + 1)))?
        .parse()
        .map_err(|_| Error::Precondition(format!("`{}` is not a number", params[i])))
}

fn construct(family: &str, params: &[String]) -> Result<String> {
    let m = match family {
        "hamming" => hamming_parity(number(params, 0)?)?,
        "extended-hamming" => extended_hamming_parity(number(params, 0)?)?,
        "z4-extended" => extended_perfect_z4_dual(number(params, 0)?, number(params, 1)?)?,
        "z2z4" => perfect_z2z4_dual(number(params, 0)?, number(params, 1)?)?,
        "z2z4-extended" => extended_perfect_z2z4_dual(number(params, 0)?, number(params, 1)?)?,
        "double" | "quadruple" => {
            let src = params
                .first()
                .ok_or_else(|| Error::Precondition("missing matrix".into()))?;
            let h = load(src)?;
            match (family, h.shape().alpha == 0) {
                ("double", true) => double_quaternary(&h)?,
                ("double", false) => double_additive(&h)?,
                (_, true) => quadruple_quaternary(&h)?,
                (_, false) => quadruple_additive(&h)?,
            }
        }
        "named" => paper_matrix(params.first().map(String::as_str).unwrap_or(""))?,
        "list" => return Ok(REGISTRY.iter().map(|n| format!("{n}\n")).collect()),
        other => return Err(Error::Precondition(format!("unknown family `{other}`"))),
    };
    Ok(format!("# dual type {}\n{}", crate::algebra::compute_type(&m), format_matrix(&m)))
}

struct Ctx {
    config: Config,
}

impl Ctx {
    fn options(&self) -> SearchOptions {
        self.config.search_options()
    }
}

/// Runs one command, writing its report to `out`. Returns the exit code.
fn execute(cmd: Command, ctx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let guard = ctx.config.guard_log2;
    let mut text = String::new();
    let mut code_ok = EXIT_PASS;
    match cmd {
        Command::Type(one) => {
            let c = code(&one.parity)?;
            text = format!("type {}\ndual {}\n", c.code_type(), dual(&c).code_type());
        }
        Command::Dual(one) => text = format_matrix(&code(&one.parity)?.gens()),
        Command::Gray(one) => {
            for w in code(&one.parity)?.gray_image(guard)? {
                text.extend(w.iter().map(|b| char::from(b'0' + b)));
                text.push('\n');
            }
        }
        Command::Span(two) => {
            let (c1, c2) = pair(&two)?;
            let s = span(&c1, &c2)?;
            text = format!("# type {}\n{}", s.code_type(), format_matrix(&parity_of(&s)));
        }
        Command::Intersect(two) => {
            let (c1, c2) = pair(&two)?;
            let s = intersect(&c1, &c2)?;
            text = format!("# type {}\n{}", s.code_type(), format_matrix(&parity_of(&s)));
        }
        Command::Eta(two) => {
            let (c1, c2) = pair(&two)?;
            text = format!("{}\n", eta(&c1, &c2)?);
        }
        Command::Construct { family, params } => text = construct(&family, &params)?,
        Command::Transform { perm, input } => {
            let c = code(&input.parity)?;
            let m = parse_monomial(&perm, c.shape())?;
            text = format_matrix(&parity_of(&apply_monomial(&c, &m)?));
        }
        Command::Search {
            mode,
            input,
            target_type,
            target_eta,
            seed,
            budget,
            max_support,
            signs,
        } => {
            let (c1, c2) = pair(&input)?;
            let mode = match mode {
                SearchMode::Exhaustive => Mode::Exhaustive,
                SearchMode::Random => Mode::Randomized {
                    seed: seed.unwrap_or(DEFAULT_SEED),
                    budget,
                },
                SearchMode::Bounded => Mode::BoundedSupport { max_support },
            };
            let target = match (target_type, target_eta) {
                (Some(_), Some(_)) => {
                    return Err(Error::Precondition("give one of --target-type and --target-log2-eta".into()))
                }
                (Some(t), None) => Some(Target::DualType(parse_code_type(&t)?)),
                (None, Some(k)) => Some(Target::Log2Eta(k)),
                (None, None) => None,
            };
            match target {
                None => {
                    let atlas = enumerate_types(&c1, &c2, mode, signs, &ctx.options())?;
                    for w in atlas.types.values() {
                        text.push_str(&format_witness(w));
                        text.push('\n');
                    }
                    text.push_str(&format!("# {} types, {} evaluated\n", atlas.types.len(), atlas.evaluated));
                }
                Some(target) => {
                    let task = SearchTask {
                        base1: c1,
                        base2: c2,
                        target,
                        mode,
                        use_signs: signs,
                        options: ctx.options(),
                    };
                    match search(&task)? {
                        Outcome::Witness(w) => text = format!("{}\n", format_witness(&w)),
                        Outcome::NotFound { evaluated } => {
                            text = format!("not found ({evaluated} evaluated)\n");
                            code_ok = EXIT_FAIL;
                        }
                        Outcome::RefutedByExhaustion { orbit_size, evaluated } => {
                            text = format!("refuted by exhaustion (orbit {orbit_size}, {evaluated} evaluated)\n");
                            code_ok = EXIT_FAIL;
                        }
                    }
                }
            }
        }
        Command::Verify {
            theorem,
            t,
            seed,
            budget,
            signs,
        } => {
            let theorem: Theorem = theorem.parse()?;
            if theorem.is_randomized() && seed.is_none() {
                return Err(Error::Precondition(format!("`{theorem}` is randomized and needs --seed")));
            }
            let cfg = VerifyConfig {
                t,
                budget,
                seed,
                use_signs: signs,
                options: ctx.options(),
            };
            let v = verify(theorem, &cfg)?;
            text = format!("{v}\n");
            if !v.pass {
                code_ok = EXIT_FAIL;
            }
        }
        Command::Reproduce { target, seed } => {
            let targets = if target == "all" {
                ReproduceTarget::ALL.to_vec()
            } else {
                vec![target.parse()?]
            };
            let opts = ReproduceOptions {
                seed,
                search: ctx.options(),
                guard_log2: guard,
            };
            for t in targets {
                let r = reproduce(t, &opts)?;
                text.push_str(&format!("{r}\n"));
                if !r.pass {
                    code_ok = EXIT_FAIL;
                }
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))?;
    Ok(code_ok)
}

fn config(global: &Global) -> Result<Config> {
    let mut cfg = match &global.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(w) = global.workers {
        cfg.workers = w;
    }
    if let Some(g) = global.guard_log2 {
        cfg.guard_log2 = g;
    }
    if let Some(c) = global.ceiling_log2 {
        cfg.orbit_ceiling_log2 = c;
    }
    Ok(cfg)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_PASS;
        }
    };
    let result = config(&cli.global).and_then(|cfg| execute(cli.command, &Ctx { config: cfg }, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
