//! Named end-to-end reproductions. Each target prints deterministic text
//! and reports whether the expected classification or bound was met.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CodeType, MixedMatrix, MixedVector, Shape};
use crate::code::{apply_monomial, certify_perfect, AdditiveCode};
use crate::constructions::{
    double_additive, double_additive_moves, double_quaternary, double_quaternary_moves, extended_perfect_z2z4_dual,
    extended_perfect_z4_dual, hamming_parity, paper_matrix, perfect_z2z4_dual, quadruple_additive,
    quadruple_additive_moves, quadruple_quaternary, quadruple_quaternary_moves, LemmaMove, REGISTRY,
};
use crate::duality::{dual, inner_product};
use crate::error::{Error, Result};
use crate::format::{format_witness, parse_monomial};
use crate::lattice::{eta, intersect, intersection_dual_type};
use crate::search::{enumerate_types, replay, search, Mode, Outcome, SearchOptions, SearchTask, Target as SearchTarget};
use crate::verify::{quaternary_atlas, random_code, verify, Theorem, VerifyConfig, ATLAS_ROUNDS};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    ExBeta4,
    T3Eta,
    BoundsT4,
    AchieveT4,
    LemmaMoves,
    ExBeta4Z2Z4,
    Lemma17Table,
    Exceptional84,
    Nonextended74,
    DualityOracle,
    IntersectionOracle,
    PerfectCertificates,
    HammingT4,
    AtlasT5,
}

impl Target {
    pub const ALL: [Target; 14] = [
        Target::ExBeta4,
        Target::T3Eta,
        Target::BoundsT4,
        Target::AchieveT4,
        Target::LemmaMoves,
        Target::ExBeta4Z2Z4,
        Target::Lemma17Table,
        Target::Exceptional84,
        Target::Nonextended74,
        Target::DualityOracle,
        Target::IntersectionOracle,
        Target::PerfectCertificates,
        Target::HammingT4,
        Target::AtlasT5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Target::ExBeta4 => "exbeta4",
            Target::T3Eta => "t3-eta",
            Target::BoundsT4 => "bounds-t4",
            Target::AchieveT4 => "achieve-t4",
            Target::LemmaMoves => "lemma-moves",
            Target::ExBeta4Z2Z4 => "exbeta4-z2z4",
            Target::Lemma17Table => "lemma17-table",
            Target::Exceptional84 => "exceptional-8-4",
            Target::Nonextended74 => "nonextended-7-4",
            Target::DualityOracle => "duality-oracle",
            Target::IntersectionOracle => "intersection-oracle",
            Target::PerfectCertificates => "perfect-certificates",
            Target::HammingT4 => "hamming-t4",
            Target::AtlasT5 => "atlas-t5",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown reproduce target `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReproduceOptions {
    pub seed: u64,
    pub search: SearchOptions,
    pub guard_log2: usize,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            seed: DEFAULT_SEED,
            search: SearchOptions::default(),
            guard_log2: crate::code::DEFAULT_GUARD_LOG2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub target: Target,
    pub pass: bool,
    pub lines: Vec<String>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(f, "{} {}", self.target, if self.pass { "PASS" } else { "FAIL" })
    }
}

struct Out {
    pass: bool,
    lines: Vec<String>,
}

impl Out {
    fn new() -> Self {
        Out {
            pass: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.pass &= ok;
        self.lines.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, line: String) {
        self.lines.push(format!("     {line}"));
    }
}

fn named(name: &str) -> Result<AdditiveCode> {
    Ok(AdditiveCode::from_parity_check(&paper_matrix(name)?))
}

fn qtype(beta: usize, gamma: usize, delta: usize) -> CodeType {
    CodeType {
        alpha: 0,
        beta,
        gamma,
        delta,
        kappa: 0,
    }
}

fn type_list(types: &BTreeSet<CodeType>) -> String {
    types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn reproduce(target: Target, opts: &ReproduceOptions) -> Result<Report> {
    let mut out = Out::new();
    match target {
        Target::ExBeta4 => exbeta4(&mut out, opts)?,
        Target::T3Eta => t3_eta(&mut out)?,
        Target::BoundsT4 => {
            let cfg = VerifyConfig {
                t: Some(4),
                budget: 2_500,
                seed: Some(opts.seed),
                use_signs: false,
                options: opts.search,
            };
            let v = verify(Theorem::BoundsQuaternary, &cfg)?;
            for l in &v.lines {
                out.note(l.clone());
            }
            out.check(v.pass, format!("{} monomials, every log2 eta in [8,11]", v.evaluated));
        }
        Target::AchieveT4 => achieve_t4(&mut out, opts)?,
        Target::LemmaMoves => lemma_moves(&mut out)?,
        Target::ExBeta4Z2Z4 => exbeta4_z2z4(&mut out, opts)?,
        Target::Lemma17Table => lemma17(&mut out, opts)?,
        Target::Exceptional84 | Target::Nonextended74 => {
            let th = if target == Target::Exceptional84 {
                Theorem::Exceptional84
            } else {
                Theorem::Nonextended74
            };
            let v = verify(
                th,
                &VerifyConfig {
                    options: opts.search,
                    ..VerifyConfig::default()
                },
            )?;
            for l in &v.lines {
                out.note(l.clone());
            }
            out.check(v.pass, format!("{th}: permutation classification matches"));
            if target == Target::Exceptional84 {
                t5_witness(&mut out)?;
            }
        }
        Target::DualityOracle => duality_oracle(&mut out, opts.seed)?,
        Target::IntersectionOracle => intersection_oracle(&mut out, opts.seed)?,
        Target::PerfectCertificates => certificates(&mut out, opts.guard_log2.max(CERTIFICATE_GUARD_LOG2))?,
        Target::HammingT4 => hamming_t4(&mut out, opts)?,
        Target::AtlasT5 => {
            let atlases = quaternary_atlas(5, opts.seed, ATLAS_BUDGET, ATLAS_ROUNDS, &opts.search)?;
            for a in &atlases {
                out.check(a.complete(), a.summary());
            }
            for a in &atlases {
                for l in a.report().lines() {
                    out.note(l.to_string());
                }
            }
        }
    }
    Ok(Report {
        target,
        pass: out.pass,
        lines: out.lines,
    })
}

/// Samples per randomized round of the t = 5 atlas.
pub const ATLAS_BUDGET: u64 = 1_000_000;

/// The t = 5 atlas as golden-file text.
pub fn atlas_t5_text(seed: u64, options: &SearchOptions) -> Result<String> {
    let atlases = quaternary_atlas(5, seed, ATLAS_BUDGET, ATLAS_ROUNDS, options)?;
    Ok(atlases.iter().map(|a| a.report()).collect())
}

fn classify_pair(
    out: &mut Out,
    label: &str,
    c1: &AdditiveCode,
    c2: &AdditiveCode,
    expected: &[CodeType],
    opts: &ReproduceOptions,
) -> Result<()> {
    for signs in [false, true] {
        let atlas = enumerate_types(c1, c2, Mode::Exhaustive, signs, &opts.search)?;
        let got: BTreeSet<CodeType> = atlas.types.keys().copied().collect();
        let want: BTreeSet<CodeType> = expected.iter().copied().collect();
        let what = if signs { "monomials with signs" } else { "permutations" };
        let line = format!("{label} over {} {what}: {}", atlas.orbit_size.unwrap_or(0), type_list(&got));
        if signs {
            out.note(line);
            for w in atlas.types.values().filter(|w| !want.contains(&w.dual_type)) {
                out.note(format!("  beyond the permutation classes: {}", format_witness(w)));
            }
        } else {
            out.check(got == want, line);
        }
    }
    Ok(())
}

pub const T5_WITNESS: &str = "(1,13,10,5)(2,14,9,6)(3,16,12,8)(4,15,11,7)(17,22,18,20,24,21)(19,23)";

fn t5_witness(out: &mut Out) -> Result<()> {
    let once = double_additive(&paper_matrix("sec4-ex-H2")?)?;
    let c = AdditiveCode::from_parity_check(&double_additive(&once)?);
    let m = parse_monomial(T5_WITNESS, c.shape())?;
    let (t, _) = replay(&c, &c, &m)?;
    let want = CodeType::new(16, 8, 8, 1, 4)?;
    out.check(t == want, format!("t=5 doubled code {}: {T5_WITNESS} gives {t}", dual(&c).code_type()));
    Ok(())
}

fn exbeta4(out: &mut Out, opts: &ReproduceOptions) -> Result<()> {
    let c1 = named("qlpc-t3-H1")?;
    let c2 = named("qlpc-t3-H2")?;
    classify_pair(out, "C1 x pi(C1)", &c1, &c1, &[qtype(4, 2, 1)], opts)?;
    classify_pair(out, "C2 x pi(C2)", &c2, &c2, &[qtype(4, 0, 2), qtype(4, 0, 3)], opts)?;
    classify_pair(out, "C1 x pi(C2)", &c1, &c2, &[qtype(4, 1, 2)], opts)?;
    let pi = parse_monomial("(1,2)", c2.shape())?;
    let expect = AdditiveCode::from_parity_check(&paper_matrix("exbeta4-pi12")?);
    out.check(
        intersect(&c2, &apply_monomial(&c2, &pi)?)? == expect,
        "C2 x (1,2)C2 has the three-row parity-check matrix 1111/0123/1023".into(),
    );
    Ok(())
}

fn t3_eta(out: &mut Out) -> Result<()> {
    let c1 = named("qlpc-t3-H2")?;
    let c2 = named("qlpc-t3-H1")?;
    let pi = parse_monomial("(1,2)", c1.shape())?;
    for (label, got, want) in [
        ("eta(C1,C1)", eta(&c1, &c1)?, 16),
        ("eta(C1,C2)", eta(&c1, &c2)?, 8),
        ("eta(C1,(1,2)C1)", eta(&c1, &apply_monomial(&c1, &pi)?)?, 4),
    ] {
        out.check(got == want, format!("{label} = {got}"));
    }
    Ok(())
}

fn achieve_t4(out: &mut Out, opts: &ReproduceOptions) -> Result<()> {
    let c = AdditiveCode::from_parity_check(&extended_perfect_z4_dual(4, 1)?);
    for l in 5..=8 {
        let mut task = SearchTask {
            base1: c.clone(),
            base2: c.clone(),
            target: SearchTarget::Log2Eta(16 - l),
            mode: Mode::Randomized {
                seed: opts.seed,
                budget: 20_000,
            },
            use_signs: false,
            options: opts.search,
        };
        let mut outcome = search(&task)?;
        if matches!(outcome, Outcome::NotFound { .. }) {
            task.mode = Mode::Exhaustive;
            outcome = search(&task)?;
        }
        match outcome {
            Outcome::Witness(w) => {
                let ok = replay(&c, &c, &w.monomial)?.1 == 16 - l;
                out.check(ok, format!("l={l}: {}", format_witness(&w)));
            }
            other => out.check(false, format!("l={l}: {other:?}")),
        }
    }
    Ok(())
}

fn check_moves(out: &mut Out, seed: &str, label: &str, h: &MixedMatrix, claimed: CodeType, moves: &[LemmaMove], base: CodeType) -> Result<()> {
    let built = crate::algebra::compute_type(h);
    out.check(built == claimed, format!("{seed} {label}: dual type {built}"));
    for mv in moves {
        let t = intersection_dual_type(h, &mv.monomial.apply_matrix(h)?)?;
        let want = (base.gamma + mv.gamma_step, base.delta + mv.delta_step, base.kappa + mv.kappa_step);
        out.check(
            (t.gamma, t.delta, t.kappa) == want,
            format!(
                "{seed} {label} {}: {t} (+{},+{},+{})",
                mv.monomial, mv.gamma_step, mv.delta_step, mv.kappa_step
            ),
        );
    }
    Ok(())
}

fn lemma_moves(out: &mut Out) -> Result<()> {
    for name in REGISTRY {
        let h = paper_matrix(name)?;
        let b = crate::algebra::compute_type(&h);
        let (a, be) = (b.alpha, b.beta);
        if a == 0 {
            let claimed = qtype(2 * be, b.gamma + 1, b.delta);
            check_moves(out, name, "double", &double_quaternary(&h)?, claimed, &double_quaternary_moves(be), b)?;
            let claimed = qtype(4 * be, b.gamma, b.delta + 1);
            check_moves(out, name, "quadruple", &quadruple_quaternary(&h)?, claimed, &quadruple_quaternary_moves(be), b)?;
        } else {
            let claimed = CodeType::new(2 * a, 2 * be, b.gamma + 1, b.delta, b.kappa + 1)?;
            check_moves(out, name, "double", &double_additive(&h)?, claimed, &double_additive_moves(a, be), b)?;
            if b.gamma == 1 && h.rows().first() == Some(&MixedVector::ones_twos(h.shape())) {
                let claimed = CodeType::new(2 * a, a + 4 * be, 1, b.delta + 1, b.kappa)?;
                check_moves(
                    out,
                    name,
                    "quadruple",
                    &quadruple_additive(&h)?,
                    claimed,
                    &quadruple_additive_moves(a, be),
                    b,
                )?;
            }
        }
    }
    Ok(())
}

fn replay_table(out: &mut Out, c: &AdditiveCode, rows: &[(usize, usize, usize, &str)]) -> Result<BTreeSet<CodeType>> {
    let s = c.shape();
    let mut listed = BTreeSet::new();
    for &(g, d, k, cycles) in rows {
        let m = parse_monomial(if cycles == "Id" { "" } else { cycles }, s)?;
        let (t, _) = replay(c, c, &m)?;
        let want = CodeType::new(s.alpha, s.beta, g, d, k)?;
        listed.insert(want);
        out.check(t == want, format!("{cycles}: {t}"));
    }
    Ok(listed)
}

fn exhaustive_matches(out: &mut Out, c: &AdditiveCode, listed: &BTreeSet<CodeType>, opts: &ReproduceOptions) -> Result<()> {
    for signs in [false, true] {
        let atlas = enumerate_types(c, c, Mode::Exhaustive, signs, &opts.search)?;
        let got: BTreeSet<CodeType> = atlas.types.keys().copied().collect();
        out.check(
            &got == listed,
            format!(
                "exhaustive over {} {}: {}",
                atlas.orbit_size.unwrap_or(0),
                if signs { "monomials with signs" } else { "permutations" },
                type_list(&got)
            ),
        );
    }
    Ok(())
}

pub const EXBETA4_Z2Z4_TABLE: [(usize, usize, usize, &str); 4] =
    [(2, 1, 2, "Id"), (3, 1, 2, "(1,2)"), (3, 1, 3, "(1,3)"), (4, 1, 3, "(1,2,3)")];

pub const LEMMA17_TABLE: [(usize, usize, usize, &str); 10] = [
    (1, 2, 1, "Id"),
    (2, 2, 1, "(5,7)"),
    (2, 2, 2, "(1,2)"),
    (3, 2, 1, "(1,3)(6,9)(8,10)"),
    (3, 2, 2, "(1,3)(5,7)"),
    (3, 2, 3, "(1,2,3)"),
    (1, 3, 1, "(5,6)"),
    (2, 3, 1, "(5,6)(9,10)"),
    (2, 3, 2, "(1,2)(6,9)"),
    (1, 4, 1, "(5,6)(7,9)"),
];

fn exbeta4_z2z4(out: &mut Out, opts: &ReproduceOptions) -> Result<()> {
    let c = named("sec4-ex-H2")?;
    let listed = replay_table(out, &c, &EXBETA4_Z2Z4_TABLE)?;
    exhaustive_matches(out, &c, &listed, opts)
}

fn lemma17(out: &mut Out, opts: &ReproduceOptions) -> Result<()> {
    let c = named("sec4-lemma17-H1")?;
    let listed = replay_table(out, &c, &LEMMA17_TABLE)?;
    exhaustive_matches(out, &c, &listed, opts)
}

/// Every vector of the ambient space, for α + 2β ≤ 16.
fn ambient(shape: Shape) -> Vec<MixedVector> {
    let n = shape.len();
    let total = 1usize << shape.binary_length();
    (0..total)
        .map(|mut i| {
            let mut bin = Vec::with_capacity(shape.alpha);
            let mut quat = Vec::with_capacity(shape.beta);
            for k in 0..n {
                if k < shape.alpha {
                    bin.push((i & 1) as u8);
                    i >>= 1;
                } else {
                    quat.push((i & 3) as u8);
                    i >>= 2;
                }
            }
            MixedVector::new(bin, quat).expect("in range")
        })
        .collect()
}

fn random_shape(rng: &mut ChaCha8Rng) -> Shape {
    Shape::new(rng.gen_range(0..=4), rng.gen_range(0..=6))
}

fn duality_oracle(out: &mut Out, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for i in 0..200 {
        let shape = random_shape(&mut rng);
        let c = random_code(&mut rng, shape);
        let d = dual(&c);
        let gens = c.gens();
        let annihilator: BTreeSet<MixedVector> = ambient(shape)
            .into_iter()
            .filter(|v| gens.rows().iter().all(|g| inner_product(v, g).expect("shape") == 0))
            .collect();
        let computed: BTreeSet<MixedVector> = d.enumerate()?.collect();
        let size_ok = c.log2_size() + d.log2_size() == shape.binary_length();
        if annihilator != computed || dual(&d) != c || !size_ok {
            bad += 1;
            out.check(false, format!("code {i} of type {}", c.code_type()));
        }
    }
    out.check(bad == 0, "200 random codes: dual is the annihilator, an involution, and |C||C^perp| = 2^(a+2b)".into());
    Ok(())
}

fn intersection_oracle(out: &mut Out, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut bad = 0;
    for i in 0..200 {
        let shape = random_shape(&mut rng);
        let c1 = random_code(&mut rng, shape);
        let c2 = random_code(&mut rng, shape);
        let a: BTreeSet<MixedVector> = c1.enumerate()?.collect();
        let b: BTreeSet<MixedVector> = c2.enumerate()?.collect();
        let brute: BTreeSet<MixedVector> = a.intersection(&b).cloned().collect();
        let computed: BTreeSet<MixedVector> = intersect(&c1, &c2)?.enumerate()?.collect();
        if brute != computed {
            bad += 1;
            out.check(false, format!("pair {i}: {} x {}", c1.code_type(), c2.code_type()));
        }
    }
    out.check(bad == 0, "200 random pairs: intersection equals the set intersection".into());
    Ok(())
}

/// The t = 5 extended codes have 2^26 words.
pub const CERTIFICATE_GUARD_LOG2: usize = 26;

fn certificates(out: &mut Out, guard: usize) -> Result<()> {
    let mut cases: Vec<(String, MixedMatrix, bool)> = Vec::new();
    for t in 3..=5usize {
        for d in 1..=t.div_ceil(2) {
            cases.push((format!("extended Z4 t={t} delta={d}"), extended_perfect_z4_dual(t, d)?, true));
        }
    }
    for t in 3..=4usize {
        for r in t.div_ceil(2).max(2)..=t {
            cases.push((format!("Z2Z4 t={t} r={r}"), perfect_z2z4_dual(t, r)?, false));
            cases.push((format!("extended Z2Z4 t={t} r={r}"), extended_perfect_z2z4_dual(t, r)?, true));
        }
    }
    for (label, h, extended) in cases {
        let c = AdditiveCode::from_parity_check(&h);
        let cert = certify_perfect(&c, guard)?;
        let n = cert.binary_length;
        let t = n.next_power_of_two().trailing_zeros() as usize;
        let ok = if extended {
            cert.is_extended_perfect() && cert.log2_size == n - t - 1
        } else {
            cert.is_perfect() && cert.log2_size == n - t
        };
        out.check(
            ok,
            format!(
                "{label}: n={n} |C|=2^{} d={} covering={:?} punctured={:?}",
                cert.log2_size, cert.min_distance, cert.covering, cert.punctured_covering
            ),
        );
    }
    Ok(())
}

fn hamming_t4(out: &mut Out, opts: &ReproduceOptions) -> Result<()> {
    let c = AdditiveCode::from_parity_check(&hamming_parity(4)?);
    let mut etas = BTreeSet::new();
    for mode in [
        Mode::Randomized {
            seed: opts.seed,
            budget: 20_000,
        },
        Mode::BoundedSupport { max_support: 4 },
    ] {
        let atlas = enumerate_types(&c, &c, mode, false, &opts.search)?;
        for (k, w) in atlas.etas() {
            if etas.insert(k) {
                out.note(format_witness(&w));
            }
        }
    }
    let want: BTreeSet<usize> = (4..=8).map(|r| 15 - r).collect();
    let list: Vec<String> = etas.iter().map(|k| format!("2^{k}")).collect();
    out.check(etas == want, format!("eta values {}", list.join(" ")));
    Ok(())
}
