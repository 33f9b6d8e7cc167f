//! Runs every acceptance criterion and prints one line per criterion.
//! Set `Z2Z4_BLESS=1` to rewrite the atlas golden file.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use z2z4::constructions::paper_matrix;
use z2z4::reproduce::{atlas_t5_text, reproduce, ReproduceOptions, Target};
use z2z4::search::{enumerate_types, Mode};
use z2z4::{AdditiveCode, CodeType};

struct Criterion {
    number: usize,
    target: Target,
    budget: Option<Duration>,
}

const fn c(number: usize, target: Target, secs: u64) -> Criterion {
    Criterion {
        number,
        target,
        budget: if secs == 0 { None } else { Some(Duration::from_secs(secs)) },
    }
}

const CRITERIA: [Criterion; 14] = [
    c(1, Target::ExBeta4, 1),
    c(2, Target::T3Eta, 0),
    c(3, Target::BoundsT4, 30),
    c(4, Target::AchieveT4, 60),
    c(5, Target::LemmaMoves, 0),
    c(6, Target::ExBeta4Z2Z4, 0),
    c(7, Target::Lemma17Table, 10),
    c(8, Target::Exceptional84, 300),
    c(9, Target::Nonextended74, 300),
    c(10, Target::DualityOracle, 0),
    c(11, Target::IntersectionOracle, 0),
    c(12, Target::PerfectCertificates, 120),
    c(13, Target::HammingT4, 0),
    c(14, Target::AtlasT5, 1800),
];

fn code(name: &str) -> AdditiveCode {
    AdditiveCode::from_parity_check(&paper_matrix(name).unwrap())
}

fn q(gamma: usize, delta: usize) -> CodeType {
    CodeType::new(0, 4, gamma, delta, 0).unwrap()
}

/// The β = 4 classification must also hold over monomials with signs.
fn signed_exbeta4(opts: &ReproduceOptions) -> Vec<String> {
    let (c1, c2) = (code("qlpc-t3-H1"), code("qlpc-t3-H2"));
    let cases = [
        ("C1 x pi(C1)", &c1, &c1, vec![q(2, 1)]),
        ("C2 x pi(C2)", &c2, &c2, vec![q(0, 2), q(0, 3)]),
        ("C1 x pi(C2)", &c1, &c2, vec![q(1, 2)]),
    ];
    let mut problems = Vec::new();
    for (label, a, b, want) in cases {
        let atlas = enumerate_types(a, b, Mode::Exhaustive, true, &opts.search).unwrap();
        let got: BTreeSet<CodeType> = atlas.types.keys().copied().collect();
        let want: BTreeSet<CodeType> = want.into_iter().collect();
        for extra in got.difference(&want) {
            let w = &atlas.types[extra];
            problems.push(format!("{label} with signs also reaches {extra} via {}", w.monomial));
        }
        for missing in want.difference(&got) {
            problems.push(format!("{label} with signs misses {missing}"));
        }
    }
    problems
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/atlas_t5.txt")
}

fn atlas_golden(opts: &ReproduceOptions) -> Vec<String> {
    let text = atlas_t5_text(opts.seed, &opts.search).unwrap();
    let path = golden_path();
    if std::env::var_os("Z2Z4_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &text).unwrap();
        return Vec::new();
    }
    match std::fs::read_to_string(&path) {
        Ok(golden) if golden == text => Vec::new(),
        Ok(_) => vec![format!("atlas differs from {}", path.display())],
        Err(e) => vec![format!("cannot read {}: {e}", path.display())],
    }
}

fn main() -> ExitCode {
    let opts = ReproduceOptions::default();
    let mut failures = 0;
    for crit in &CRITERIA {
        let start = Instant::now();
        let (mut pass, mut details) = match reproduce(crit.target, &opts) {
            Ok(r) => (
                r.pass,
                r.lines.into_iter().filter(|l| l.starts_with("FAIL")).collect::<Vec<_>>(),
            ),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        let extra = match crit.target {
            Target::ExBeta4 => signed_exbeta4(&opts),
            Target::AtlasT5 => atlas_golden(&opts),
            _ => Vec::new(),
        };
        pass &= extra.is_empty();
        details.extend(extra);
        let elapsed = start.elapsed();
        if let Some(limit) = crit.budget {
            if elapsed > limit {
                pass = false;
                details.push(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        println!(
            "criterion {:>2} {} {} ({:.2?})",
            crit.number,
            if pass { "PASS" } else { "FAIL" },
            crit.target,
            elapsed
        );
        for d in &details {
            println!("    {d}");
        }
        if !pass {
            failures += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
