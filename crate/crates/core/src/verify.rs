//! Checkers for the bound and structure theorems on intersections of
//! perfect codes, and the achievability atlas.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::CodeType;
use crate::code::AdditiveCode;
use crate::constructions::{extended_perfect_z2z4_dual, extended_perfect_z4_dual, perfect_z2z4_dual};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::format::{format_witness, parse_monomial};
use crate::lattice::{check_dual_size_bounds, check_eta_bounds, check_span_bounds, eta_range, Family};
use crate::search::{enumerate_types, replay, Atlas, Mode, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theorem {
    /// Span, dual-size and generic η bounds on seeded random code pairs.
    SpanBounds,
    /// η range for quaternary extended perfect codes.
    BoundsQuaternary,
    /// Type range of intersections of quaternary extended perfect codes.
    StructureQuaternary,
    /// Every type in the quaternary range is reached.
    GapsQuaternary,
    /// η range for additive extended perfect codes.
    BoundsAdditive,
    /// Type range of intersections of additive extended perfect codes.
    StructureAdditive,
    /// Type range of intersections of additive perfect codes.
    Nonextended,
    /// Full classification for dual type (7,4;2,1).
    Nonextended74,
    /// Full classification for dual type (8,4;3,1).
    Exceptional84,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::SpanBounds,
        Theorem::BoundsQuaternary,
        Theorem::StructureQuaternary,
        Theorem::GapsQuaternary,
        Theorem::BoundsAdditive,
        Theorem::StructureAdditive,
        Theorem::Nonextended,
        Theorem::Nonextended74,
        Theorem::Exceptional84,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::SpanBounds => "span-bounds",
            Theorem::BoundsQuaternary => "bounds-quaternary",
            Theorem::StructureQuaternary => "structure-quaternary",
            Theorem::GapsQuaternary => "gaps-quaternary",
            Theorem::BoundsAdditive => "bounds-additive",
            Theorem::StructureAdditive => "structure-additive",
            Theorem::Nonextended => "nonextended",
            Theorem::Nonextended74 => "nonextended-7-4",
            Theorem::Exceptional84 => "exceptional-8-4",
        }
    }

    /// Whether the check samples at random and so needs a seed.
    pub fn is_randomized(self) -> bool {
        !matches!(self, Theorem::Nonextended74 | Theorem::Exceptional84)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub t: Option<usize>,
    /// Samples per code pair.
    pub budget: u64,
    pub seed: Option<u64>,
    /// Let the sampled monomials negate coordinates.
    pub use_signs: bool,
    pub options: SearchOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            t: None,
            budget: 10_000,
            seed: None,
            use_signs: false,
            options: SearchOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: Theorem,
    pub pass: bool,
    /// Monomials (or code pairs) evaluated.
    pub evaluated: u64,
    pub lines: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(
            f,
            "{} {} ({} evaluated)",
            self.theorem,
            if self.pass { "PASS" } else { "FAIL" },
            self.evaluated
        )
    }
}

/// (γ, δ) cells allowed for the dual type of C1 ∩ C2 when C1, C2 are
/// quaternary extended perfect codes of length 2^t, t ≥ 4, with dual types
/// `d1`, `d2`.
pub fn quaternary_cells(d1: &CodeType, d2: &CodeType) -> Vec<(usize, usize)> {
    let (g1, e1, g2, e2) = (d1.gamma, d1.delta, d2.gamma, d2.delta);
    let mut cells = Vec::new();
    if e1 == 0 || e2 == 0 {
        return cells;
    }
    for delta in e1.max(e2)..=e1 + e2 - 1 {
        let lo = delta.max((g1 + e1).max(g2 + e2));
        for sum in lo..=g1 + g2 + e1 + e2 - 1 {
            cells.push((sum - delta, delta));
        }
    }
    cells
}

/// Dual types allowed for C1 ∩ C2 when both codes are additive (extended)
/// perfect codes of dual type `dbar` with α ≠ 0.
pub fn additive_cells(dbar: &CodeType, extended: bool) -> Vec<CodeType> {
    let (gb, db) = (dbar.gamma, dbar.delta);
    let mut out = Vec::new();
    let mut push = |gamma: usize, delta: usize, kappa: usize| {
        if let Ok(t) = CodeType::new(dbar.alpha, dbar.beta, gamma, delta, kappa) {
            out.push(t);
        }
    };
    let deltas = if db == 1 { 1..=1 } else { db..=2 * db };
    for delta in deltas {
        let top = match (extended, db) {
            (true, 0) => 2 * gb - 1,
            (true, 1) => 2 * gb,
            (true, _) => (2 * gb + 2 * db).saturating_sub(delta + 1),
            (false, 1) => 2 * gb + 1,
            (false, _) => (2 * gb + 2 * db).saturating_sub(delta),
        };
        for gamma in gb..=top {
            for kappa in gb..=gamma {
                if extended && db == 0 && kappa != gamma {
                    continue;
                }
                push(gamma, delta, kappa);
            }
        }
    }
    out
}

fn code(h: crate::algebra::MixedMatrix) -> AdditiveCode {
    AdditiveCode::from_parity_check(&h)
}

fn quaternary_family(t: usize) -> Result<Vec<AdditiveCode>> {
    (1..=(t + 1) / 2).map(|d| extended_perfect_z4_dual(t, d).map(code)).collect()
}

fn additive_family(t: usize, extended: bool) -> Result<Vec<AdditiveCode>> {
    let build = if extended {
        extended_perfect_z2z4_dual
    } else {
        perfect_z2z4_dual
    };
    (t.div_ceil(2).max(2)..=t).map(|r| build(t, r).map(code)).collect()
}

fn require_t(cfg: &VerifyConfig, min: usize, max: usize) -> Result<usize> {
    let t = cfg
        .t
        .ok_or_else(|| Error::Precondition("this theorem needs a value for t".into()))?;
    if !(min..=max).contains(&t) {
        return Err(Error::OutOfRange(format!("t must lie in {min}..={max}, got {t}")));
    }
    Ok(t)
}

fn require_seed(cfg: &VerifyConfig) -> Result<u64> {
    cfg.seed
        .ok_or_else(|| Error::Precondition("randomized verification needs a seed".into()))
}

/// Samples `budget` monomials on each pair and checks every reached type
/// with `ok`, which returns the allowed range as text when it fails.
fn sample_pairs(
    pairs: &[(AdditiveCode, AdditiveCode)],
    cfg: &VerifyConfig,
    seed: u64,
    ok: impl Fn(&AdditiveCode, &AdditiveCode, &CodeType, usize) -> Result<std::result::Result<(), String>>,
) -> Result<(bool, u64, Vec<String>)> {
    let mut pass = true;
    let mut evaluated = 0;
    let mut lines = Vec::new();
    for (c1, c2) in pairs {
        let mode = Mode::Randomized {
            seed,
            budget: cfg.budget,
        };
        let atlas = enumerate_types(c1, c2, mode, cfg.use_signs, &cfg.options)?;
        evaluated += atlas.evaluated;
        let mut bad = Vec::new();
        let mut range = String::new();
        for w in atlas.types.values() {
            if let Err(r) = ok(c1, c2, &w.dual_type, w.log2_eta)? {
                range = r;
                bad.push(format!("  violation: {}", format_witness(w)));
            }
        }
        lines.push(format!(
            "{} x {}: {} samples, {} types{}",
            dual(c1).code_type(),
            dual(c2).code_type(),
            atlas.evaluated,
            atlas.types.len(),
            if bad.is_empty() { String::new() } else { format!(", outside {range}") }
        ));
        pass &= bad.is_empty();
        lines.extend(bad);
    }
    Ok((pass, evaluated, lines))
}

fn all_pairs(codes: &[AdditiveCode]) -> Vec<(AdditiveCode, AdditiveCode)> {
    codes
        .iter()
        .flat_map(|a| codes.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn self_pairs(codes: &[AdditiveCode]) -> Vec<(AdditiveCode, AdditiveCode)> {
    codes.iter().map(|c| (c.clone(), c.clone())).collect()
}

fn eta_check(family: Family) -> impl Fn(&AdditiveCode, &AdditiveCode, &CodeType, usize) -> Result<std::result::Result<(), String>> {
    move |c1, c2, _t, log2_eta| {
        let (lo, hi) = eta_range(&dual(c1).code_type(), &dual(c2).code_type(), family)?;
        let e = log2_eta as i64;
        Ok(if lo <= e && e <= hi {
            Ok(())
        } else {
            Err(format!("log2 eta in [{lo},{hi}]"))
        })
    }
}

pub fn verify(theorem: Theorem, cfg: &VerifyConfig) -> Result<Verdict> {
    let (pass, evaluated, lines) = match theorem {
        Theorem::SpanBounds => span_bounds(cfg)?,
        Theorem::BoundsQuaternary => {
            let t = require_t(cfg, 3, 6)?;
            let pairs = all_pairs(&quaternary_family(t)?);
            sample_pairs(&pairs, cfg, require_seed(cfg)?, eta_check(Family::QuaternaryPerfect))?
        }
        Theorem::StructureQuaternary => {
            let t = require_t(cfg, 4, 6)?;
            let pairs = all_pairs(&quaternary_family(t)?);
            sample_pairs(&pairs, cfg, require_seed(cfg)?, |c1, c2, ty, _| {
                let cells = quaternary_cells(&dual(c1).code_type(), &dual(c2).code_type());
                Ok(if cells.contains(&(ty.gamma, ty.delta)) {
                    Ok(())
                } else {
                    Err("the (gamma, delta) range".into())
                })
            })?
        }
        Theorem::GapsQuaternary => {
            let t = require_t(cfg, 4, 6)?;
            let atlases = quaternary_atlas(t, require_seed(cfg)?, cfg.budget, ATLAS_ROUNDS, &cfg.options)?;
            let mut pass = true;
            let mut evaluated = 0;
            let mut lines = Vec::new();
            for a in &atlases {
                evaluated += a.evaluated;
                pass &= a.complete();
                lines.push(a.summary());
            }
            (pass, evaluated, lines)
        }
        Theorem::BoundsAdditive => {
            let t = require_t(cfg, 3, 6)?;
            let pairs = self_pairs(&additive_family(t, true)?);
            sample_pairs(&pairs, cfg, require_seed(cfg)?, eta_check(Family::AdditiveExtendedPerfect))?
        }
        Theorem::StructureAdditive | Theorem::Nonextended => {
            let extended = theorem == Theorem::StructureAdditive;
            let t = require_t(cfg, 3, 6)?;
            let pairs = self_pairs(&additive_family(t, extended)?);
            sample_pairs(&pairs, cfg, require_seed(cfg)?, |c1, _, ty, _| {
                let cells = additive_cells(&dual(c1).code_type(), extended);
                Ok(if cells.contains(ty) {
                    Ok(())
                } else {
                    Err("the (gamma, delta, kappa) range".into())
                })
            })?
        }
        Theorem::Nonextended74 => classify(
            code(perfect_z2z4_dual(4, 3)?),
            false,
            CodeType::new(7, 4, 5, 1, 2)?,
            None,
            &cfg.options,
        )?,
        Theorem::Exceptional84 => classify(
            code(extended_perfect_z2z4_dual(4, 3)?),
            true,
            CodeType::new(8, 4, 6, 1, 3)?,
            Some(("(1,8,7,6,5,4,3)", CodeType::new(8, 4, 6, 1, 6)?)),
            &cfg.options,
        )?,
    };
    Ok(Verdict {
        theorem,
        pass,
        evaluated,
        lines,
    })
}

/// Exhaustive classification of C ∩ m(C): permutations must reach every
/// allowed type except `exception`. The signed orbit is reported as well.
fn classify(
    c: AdditiveCode,
    extended: bool,
    exception: CodeType,
    witness: Option<(&str, CodeType)>,
    options: &SearchOptions,
) -> Result<(bool, u64, Vec<String>)> {
    let dbar = dual(&c).code_type();
    let expected: Vec<CodeType> = additive_cells(&dbar, extended)
        .into_iter()
        .filter(|t| *t != exception)
        .collect();
    let mut lines = Vec::new();
    let mut pass = true;
    let mut evaluated = 0;
    for signs in [false, true] {
        let atlas = enumerate_types(&c, &c, Mode::Exhaustive, signs, options)?;
        evaluated += atlas.evaluated;
        let label = if signs { "permutations and signs" } else { "permutations" };
        lines.push(format!(
            "{dbar} {label}: {} monomials, {} evaluated, {} types",
            atlas.orbit_size.unwrap_or(0),
            atlas.evaluated,
            atlas.types.len()
        ));
        for w in atlas.types.values() {
            lines.push(format!("  {}", format_witness(w)));
        }
        let reached: Vec<CodeType> = atlas.types.keys().copied().collect();
        match atlas.types.get(&exception) {
            None => lines.push(format!("  {exception} refuted by exhaustion")),
            Some(w) => lines.push(format!("  {exception} reached: {}", format_witness(w))),
        }
        if !signs {
            let missing: Vec<String> = expected.iter().filter(|t| !reached.contains(t)).map(|t| t.to_string()).collect();
            let outside: Vec<String> = reached.iter().filter(|t| !expected.contains(t)).map(|t| t.to_string()).collect();
            if !missing.is_empty() {
                lines.push(format!("  missing: {}", missing.join(" ")));
            }
            if !outside.is_empty() {
                lines.push(format!("  unexpected: {}", outside.join(" ")));
            }
            pass &= missing.is_empty() && outside.is_empty();
        }
    }
    if let Some((cycles, target)) = witness {
        let m = parse_monomial(cycles, c.shape())?;
        let (got, _) = replay(&c, &c, &m)?;
        let ok = got == target;
        lines.push(format!("replay {cycles}: {got} {}", if ok { "ok" } else { "MISMATCH" }));
        pass &= ok;
    }
    Ok((pass, evaluated, lines))
}

fn span_bounds(cfg: &VerifyConfig) -> Result<(bool, u64, Vec<String>)> {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    let seed = require_seed(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut pass = true;
    for i in 0..cfg.budget {
        let shape = crate::algebra::Shape::new(rng.gen_range(0..=4), rng.gen_range(0..=6));
        let c1 = random_code(&mut rng, shape);
        let c2 = random_code(&mut rng, shape);
        let mut reports = check_span_bounds(&c1, &c2)?;
        reports.push(check_dual_size_bounds(&c1, &c2)?);
        reports.push(check_eta_bounds(&c1, &c2, Family::Generic)?);
        for r in reports.iter().filter(|r| !r.pass) {
            pass = false;
            lines.push(format!("pair {i}: {} x {}: {r}", c1.code_type(), c2.code_type()));
        }
    }
    lines.push(format!("{} random pairs at shapes up to (4,6)", cfg.budget));
    Ok((pass, cfg.budget, lines))
}

/// A code generated by a few random rows.
pub fn random_code<R: rand::Rng>(rng: &mut R, shape: crate::algebra::Shape) -> AdditiveCode {
    use crate::algebra::{MixedMatrix, MixedVector};
    let rows = rng.gen_range(0..=shape.len().max(1));
    let rows = (0..rows)
        .map(|_| {
            let bin = (0..shape.alpha).map(|_| rng.gen_range(0..2)).collect();
            let quat = (0..shape.beta).map(|_| rng.gen_range(0..4)).collect();
            MixedVector::new(bin, quat).expect("in range")
        })
        .collect();
    AdditiveCode::new(&MixedMatrix::new(shape, rows).expect("shape"))
}

/// Randomized rounds tried per pair before a cell is declared missing.
pub const ATLAS_ROUNDS: u64 = 8;

/// Largest support swept exhaustively between the first and second
/// randomized rounds.
const ATLAS_SUPPORT: usize = 5;

/// Reached intersection types for one pair of quaternary extended perfect
/// codes against the allowed cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAtlas {
    pub dual1: CodeType,
    pub dual2: CodeType,
    pub cells: Vec<(usize, usize)>,
    pub atlas: Atlas,
    pub evaluated: u64,
}

impl PairAtlas {
    pub fn missing(&self) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .copied()
            .filter(|&(g, d)| !self.atlas.types.keys().any(|t| (t.gamma, t.delta) == (g, d)))
            .collect()
    }

    pub fn outside(&self) -> Vec<CodeType> {
        self.atlas
            .types
            .keys()
            .copied()
            .filter(|t| !self.cells.contains(&(t.gamma, t.delta)))
            .collect()
    }

    pub fn complete(&self) -> bool {
        self.missing().is_empty() && self.outside().is_empty()
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} x {}: {}/{} cells",
            self.dual1,
            self.dual2,
            self.cells.len() - self.missing().len(),
            self.cells.len()
        );
        for (g, d) in self.missing() {
            s.push_str(&format!(" missing({g},{d})"));
        }
        for t in self.outside() {
            s.push_str(&format!(" outside{t}"));
        }
        s
    }

    /// Golden-file block: a header line and one report line per type.
    pub fn report(&self) -> String {
        let mut s = format!("# {} x {}\n", self.dual1, self.dual2);
        for w in self.atlas.types.values() {
            s.push_str(&format_witness(w));
            s.push('\n');
        }
        s
    }
}

/// All intersection types of C1 ∩ π(C2) for every unordered pair of
/// quaternary extended perfect codes of length 2^t. Each pair gets a
/// randomized round, then an exhaustive sweep over small supports, then
/// further randomized rounds with successive seeds while cells are missing.
pub fn quaternary_atlas(
    t: usize,
    seed: u64,
    budget: u64,
    rounds: u64,
    options: &SearchOptions,
) -> Result<Vec<PairAtlas>> {
    let family = quaternary_family(t)?;
    let mut out = Vec::new();
    for (i, c1) in family.iter().enumerate() {
        for c2 in &family[i..] {
            let (dual1, dual2) = (dual(c1).code_type(), dual(c2).code_type());
            let cells = quaternary_cells(&dual1, &dual2);
            let mut types = BTreeMap::new();
            let mut evaluated = 0;
            let mut pa = |mode: Mode, types: &mut BTreeMap<CodeType, _>| -> Result<()> {
                let a = enumerate_types(c1, c2, mode, false, options)?;
                evaluated += a.evaluated;
                for (k, w) in a.types {
                    types.entry(k).or_insert(w);
                }
                Ok(())
            };
            let covered = |types: &BTreeMap<CodeType, _>| {
                cells.iter().all(|&(g, d)| types.keys().any(|t: &CodeType| (t.gamma, t.delta) == (g, d)))
            };
            for round in 0..rounds.max(1) {
                pa(
                    Mode::Randomized {
                        seed: seed.wrapping_add(round),
                        budget,
                    },
                    &mut types,
                )?;
                if covered(&types) {
                    break;
                }
                if round == 0 {
                    pa(
                        Mode::BoundedSupport {
                            max_support: ATLAS_SUPPORT,
                        },
                        &mut types,
                    )?;
                    if covered(&types) {
                        break;
                    }
                }
            }
            out.push(PairAtlas {
                dual1,
                dual2,
                cells,
                atlas: Atlas {
                    types,
                    evaluated,
                    orbit_size: None,
                },
                evaluated,
            });
        }
    }
    Ok(out)
}
