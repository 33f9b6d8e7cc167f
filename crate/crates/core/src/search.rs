//! Orbit search: the first code of a pair is fixed and monomials act on the
//! second. Every evaluated monomial m yields the dual type of
//! C1 ∩ m(C2), i.e. the type of the row space of H1 ∥ m(H2).
//!
//! Exhaustive runs index the orbit S_α × S_β (× sign masks) and merge
//! results by lowest index, so output does not depend on the number of
//! workers. Randomized runs derive one generator per sample from the seed
//! and the sample index.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{CodeType, Shape};
use crate::code::{apply_monomial, AdditiveCode, Monomial};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::lattice::intersect;
use crate::packed::{self, fast_type, PackedWord};

pub const DEFAULT_CEILING_LOG2: u32 = 25;

/// Parts of the orbit with at most this many elements get their stabilizer
/// computed for pruning.
const STABILIZER_LIMIT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 0 uses every available core.
    pub workers: usize,
    /// Exhaustive runs refuse orbits larger than 2^ceiling_log2.
    pub ceiling_log2: u32,
    /// Quotient the exhaustive orbit by the stabilizer of the second code.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 0,
            ceiling_log2: DEFAULT_CEILING_LOG2,
            prune: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every split-preserving permutation (with every sign mask if signs
    /// are enabled).
    Exhaustive,
    /// `budget` seeded samples.
    Randomized { seed: u64, budget: u64 },
    /// Every permutation moving between 2 and `max_support` coordinates.
    /// Signs are not used in this mode.
    BoundedSupport { max_support: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Dual type of the intersection.
    DualType(CodeType),
    /// log2 of the intersection number.
    Log2Eta(usize),
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub base1: AdditiveCode,
    pub base2: AdditiveCode,
    pub target: Target,
    pub mode: Mode,
    pub use_signs: bool,
    pub options: SearchOptions,
}

/// A monomial m with the dual type and log2 size of C1 ∩ m(C2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Monomial,
    pub dual_type: CodeType,
    pub log2_eta: usize,
    /// Seed of the randomized run that found it.
    pub seed: Option<u64>,
    /// Position in the run's enumeration order.
    pub index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Witness(Witness),
    NotFound { evaluated: u64 },
    RefutedByExhaustion { orbit_size: u128, evaluated: u64 },
}

/// Achieved dual types with one witness each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    pub types: BTreeMap<CodeType, Witness>,
    pub evaluated: u64,
    /// Full orbit size when the run was exhaustive.
    pub orbit_size: Option<u128>,
}

impl Atlas {
    /// One witness per intersection number, the earliest found.
    pub fn etas(&self) -> BTreeMap<usize, Witness> {
        let mut out: BTreeMap<usize, Witness> = BTreeMap::new();
        for w in self.types.values() {
            let keep = out.get(&w.log2_eta).map_or(true, |old| w.index < old.index);
            if keep {
                out.insert(w.log2_eta, w.clone());
            }
        }
        out
    }
}

/// Dual type and log2 η of C1 ∩ m(C2), computed without the packed path.
pub fn replay(base1: &AdditiveCode, base2: &AdditiveCode, m: &Monomial) -> Result<(CodeType, usize)> {
    let inter = intersect(base1, &apply_monomial(base2, m)?)?;
    Ok((dual(&inter).code_type(), inter.log2_size()))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// Size of the split-preserving monomial group on `shape`.
pub fn orbit_size(shape: Shape, use_signs: bool) -> u128 {
    let signs = if use_signs {
        1u128.checked_shl(shape.beta as u32).unwrap_or(u128::MAX)
    } else {
        1
    };
    factorial(shape.alpha)
        .saturating_mul(factorial(shape.beta))
        .saturating_mul(signs)
}

struct Engine {
    shape: Shape,
    h1: Vec<PackedWord>,
    h2: Vec<PackedWord>,
    /// log2 |C2⊥|.
    h2_size: usize,
}

impl Engine {
    fn new(base1: &AdditiveCode, base2: &AdditiveCode) -> Result<Self> {
        let shape = base1.shape();
        shape.check(base2.shape())?;
        if !packed::fits(shape) {
            return Err(Error::OutOfRange(format!(
                "search supports at most {} coordinates per part, got {shape}",
                packed::MAX_PACKED
            )));
        }
        let pack = |c: &AdditiveCode| -> Vec<PackedWord> {
            dual(c)
                .gens()
                .rows()
                .iter()
                .map(|r| PackedWord::from_vector(r).expect("fits"))
                .collect()
        };
        let h2_code = dual(base2);
        Ok(Engine {
            shape,
            h1: pack(base1),
            h2: pack(base2),
            h2_size: h2_code.log2_size(),
        })
    }

    #[inline]
    fn eval(&self, bp: &[u8], qp: &[u8], mask: u128, rows: &mut Vec<PackedWord>) -> (usize, usize, usize) {
        rows.clear();
        rows.extend_from_slice(&self.h1);
        rows.extend(self.h2.iter().map(|w| packed::permute(w, bp, qp, mask)));
        fast_type(rows, self.shape)
    }

    /// Whether the monomial maps C2⊥ (hence C2) onto itself.
    fn stabilizes(&self, bp: &[u8], qp: &[u8], mask: u128) -> bool {
        let mut rows: Vec<PackedWord> = self.h2.clone();
        rows.extend(self.h2.iter().map(|w| packed::permute(w, bp, qp, mask)));
        let (g, d, _) = fast_type(&mut rows, self.shape);
        g + 2 * d == self.h2_size
    }

    fn dual_type(&self, (gamma, delta, kappa): (usize, usize, usize)) -> CodeType {
        CodeType {
            alpha: self.shape.alpha,
            beta: self.shape.beta,
            gamma,
            delta,
            kappa,
        }
    }

    fn witness(&self, key: (usize, usize, usize), bp: &[u8], qp: &[u8], mask: u128, seed: Option<u64>, index: u64) -> Witness {
        let dual_type = self.dual_type(key);
        Witness {
            monomial: monomial_from_parts(self.shape, bp, qp, mask),
            log2_eta: self.shape.binary_length() - dual_type.log2_size(),
            dual_type,
            seed,
            index,
        }
    }
}

fn monomial_from_parts(shape: Shape, bp: &[u8], qp: &[u8], mask: u128) -> Monomial {
    let alpha = shape.alpha;
    let perm: Vec<usize> = bp
        .iter()
        .map(|&p| p as usize)
        .chain(qp.iter().map(|&p| alpha + p as usize))
        .collect();
    let signs: Vec<usize> = (0..shape.beta).filter(|&j| (mask >> j) & 1 == 1).map(|j| alpha + j).collect();
    Monomial::new(shape, perm, &signs).expect("valid parts")
}

/// All permutations of 0..n in lexicographic order, stored flat.
struct PermTable {
    n: usize,
    data: Vec<u8>,
}

impl PermTable {
    fn new(n: usize) -> Self {
        let mut p: Vec<u8> = (0..n as u8).collect();
        let mut data = p.clone();
        while next_permutation(&mut p) {
            data.extend_from_slice(&p);
        }
        PermTable { n, data }
    }

    fn len(&self) -> usize {
        if self.n == 0 {
            1
        } else {
            self.data.len() / self.n
        }
    }

    fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographic rank of a permutation of 0..n.
fn perm_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn compose(p: &[u8], a: &[u8], out: &mut [u8]) {
    for (o, &x) in out.iter_mut().zip(a) {
        *o = p[x as usize];
    }
}

fn permute_mask(p: &[u8], mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let j = m.trailing_zeros() as usize;
        out |= 1 << p[j];
        m &= m - 1;
    }
    out
}

/// The exhaustive orbit, optionally restricted to coset representatives
/// of a product subgroup of the stabilizer of C2.
struct Orbit {
    beta: usize,
    signs: bool,
    bin: PermTable,
    quat: PermTable,
    bin_reps: Option<Vec<u32>>,
    /// Encoded as perm_index << β | mask when signs are on.
    quat_reps: Option<Vec<u64>>,
}

impl Orbit {
    fn new(engine: &Engine, signs: bool, prune: bool) -> Self {
        let Shape { alpha, beta } = engine.shape;
        let bin = PermTable::new(alpha);
        let quat = PermTable::new(beta);
        let mut orbit = Orbit {
            beta,
            signs,
            bin,
            quat,
            bin_reps: None,
            quat_reps: None,
        };
        if prune {
            orbit.bin_reps = orbit.binary_coset_reps(engine);
            orbit.quat_reps = orbit.quaternary_coset_reps(engine);
        }
        orbit
    }

    fn identity_quat(&self) -> Vec<u8> {
        (0..self.beta as u8).collect()
    }

    fn binary_coset_reps(&self, engine: &Engine) -> Option<Vec<u32>> {
        let total = self.bin.len();
        if total > STABILIZER_LIMIT || total == 1 {
            return None;
        }
        let id_q = self.identity_quat();
        let stab: Vec<&[u8]> = (0..total)
            .map(|i| self.bin.get(i))
            .filter(|p| engine.stabilizes(p, &id_q, 0))
            .collect();
        if stab.len() == 1 {
            return None;
        }
        let mut seen = vec![false; total];
        let mut reps = Vec::new();
        let mut buf = vec![0u8; self.bin.n];
        for i in 0..total {
            if seen[i] {
                continue;
            }
            reps.push(i as u32);
            let p = self.bin.get(i);
            for a in &stab {
                compose(p, a, &mut buf);
                seen[perm_rank(&buf)] = true;
            }
        }
        Some(reps)
    }

    fn quat_code(&self, perm_index: usize, mask: u64) -> usize {
        if self.signs {
            (perm_index << self.beta) | mask as usize
        } else {
            perm_index
        }
    }

    fn quat_total(&self) -> usize {
        self.quat.len() << if self.signs { self.beta } else { 0 }
    }

    fn quaternary_coset_reps(&self, engine: &Engine) -> Option<Vec<u64>> {
        let total = self.quat_total();
        if total > STABILIZER_LIMIT || total == 1 {
            return None;
        }
        let id_b: Vec<u8> = (0..engine.shape.alpha as u8).collect();
        let masks = if self.signs { 1u64 << self.beta } else { 1 };
        let mut stab: Vec<(&[u8], u64)> = Vec::new();
        for i in 0..self.quat.len() {
            for m in 0..masks {
                let q = self.quat.get(i);
                if engine.stabilizes(&id_b, q, m as u128) {
                    stab.push((q, m));
                }
            }
        }
        if stab.len() == 1 {
            return None;
        }
        let mut seen = vec![false; total];
        let mut reps = Vec::new();
        let mut buf = vec![0u8; self.beta];
        for i in 0..self.quat.len() {
            let q = self.quat.get(i);
            for m in 0..masks {
                let code = self.quat_code(i, m);
                if seen[code] {
                    continue;
                }
                reps.push(code as u64);
                for &(a, am) in &stab {
                    compose(q, a, &mut buf);
                    let mask = m ^ permute_mask(q, am);
                    seen[self.quat_code(perm_rank(&buf), mask)] = true;
                }
            }
        }
        Some(reps)
    }

    fn bin_count(&self) -> u64 {
        self.bin_reps.as_ref().map_or(self.bin.len(), |r| r.len()) as u64
    }

    fn quat_count(&self) -> u64 {
        self.quat_reps.as_ref().map_or(self.quat_total(), |r| r.len()) as u64
    }

    fn len(&self) -> u64 {
        self.bin_count() * self.quat_count()
    }

    fn fill(&self, i: u64, bp: &mut Vec<u8>, qp: &mut Vec<u8>) -> u128 {
        let qc = self.quat_count();
        let (ib, iq) = ((i / qc) as usize, (i % qc) as usize);
        let b = self.bin_reps.as_ref().map_or(ib, |r| r[ib] as usize);
        let code = self.quat_reps.as_ref().map_or(iq, |r| r[iq] as usize);
        let (pi, mask) = if self.signs {
            (code >> self.beta, (code & ((1 << self.beta) - 1)) as u128)
        } else {
            (code, 0)
        };
        bp.clear();
        bp.extend_from_slice(self.bin.get(b));
        qp.clear();
        qp.extend_from_slice(self.quat.get(pi));
        mask
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(c.iter().map(|&x| x as u8).collect());
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn derangements(k: usize) -> Vec<Vec<u8>> {
    let table = PermTable::new(k);
    (0..table.len())
        .map(|i| table.get(i).to_vec())
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x as usize))
        .collect()
}

/// Permutations whose support has a given size per part.
struct SupportBlock {
    bin_sets: Vec<Vec<u8>>,
    bin_moves: Vec<Vec<u8>>,
    quat_sets: Vec<Vec<u8>>,
    quat_moves: Vec<Vec<u8>>,
}

impl SupportBlock {
    fn len(&self) -> u64 {
        (self.bin_sets.len() * self.bin_moves.len() * self.quat_sets.len() * self.quat_moves.len()) as u64
    }
}

struct Bounded {
    shape: Shape,
    blocks: Vec<SupportBlock>,
}

impl Bounded {
    fn new(shape: Shape, max_support: usize) -> Self {
        let mut blocks = Vec::new();
        let part = |n: usize, k: usize| -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
            if k == 0 {
                (vec![Vec::new()], vec![Vec::new()])
            } else {
                (combinations(n, k), derangements(k))
            }
        };
        for s in 2..=max_support {
            for sb in 0..=s.min(shape.alpha) {
                let sq = s - sb;
                if sb == 1 || sq == 1 || sq > shape.beta {
                    continue;
                }
                let (bin_sets, bin_moves) = part(shape.alpha, sb);
                let (quat_sets, quat_moves) = part(shape.beta, sq);
                blocks.push(SupportBlock {
                    bin_sets,
                    bin_moves,
                    quat_sets,
                    quat_moves,
                });
            }
        }
        Bounded { shape, blocks }
    }

    fn len(&self) -> u64 {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    fn fill(&self, mut i: u64, bp: &mut Vec<u8>, qp: &mut Vec<u8>) -> u128 {
        let mut block = &self.blocks[0];
        for b in &self.blocks {
            if i < b.len() {
                block = b;
                break;
            }
            i -= b.len();
        }
        let mut take = |n: usize| -> usize {
            let r = (i % n as u64) as usize;
            i /= n as u64;
            r
        };
        let qm = &block.quat_moves[take(block.quat_moves.len())];
        let qs = &block.quat_sets[take(block.quat_sets.len())];
        let bm = &block.bin_moves[take(block.bin_moves.len())];
        let bs = &block.bin_sets[take(block.bin_sets.len())];
        bp.clear();
        bp.extend(0..self.shape.alpha as u8);
        for (k, &d) in bm.iter().enumerate() {
            bp[bs[k] as usize] = bs[d as usize];
        }
        qp.clear();
        qp.extend(0..self.shape.beta as u8);
        for (k, &d) in qm.iter().enumerate() {
            qp[qs[k] as usize] = qs[d as usize];
        }
        0
    }
}

fn random_part(rng: &mut ChaCha8Rng, n: usize, out: &mut Vec<u8>) {
    out.clear();
    out.extend(0..n as u8);
    if n < 2 {
        return;
    }
    match rng.gen_range(0..8) {
        0 => {}
        1..=3 => out.shuffle(rng),
        _ => {
            let k = rng.gen_range(1..=n);
            for _ in 0..k {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                out.swap(a, b);
            }
        }
    }
}

struct Sampler {
    shape: Shape,
    seed: u64,
    budget: u64,
    signs: bool,
}

impl Sampler {
    fn fill(&self, i: u64, bp: &mut Vec<u8>, qp: &mut Vec<u8>) -> u128 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(i);
        random_part(&mut rng, self.shape.alpha, bp);
        random_part(&mut rng, self.shape.beta, qp);
        if !self.signs || self.shape.beta == 0 {
            return 0;
        }
        let full = if self.shape.beta >= 128 {
            u128::MAX
        } else {
            (1u128 << self.shape.beta) - 1
        };
        match rng.gen_range(0..3) {
            0 => 0,
            1 => rng.gen::<u128>() & full,
            _ => 1u128 << rng.gen_range(0..self.shape.beta),
        }
    }
}

enum Space {
    Orbit(Orbit),
    Random(Sampler),
    Bounded(Bounded),
}

impl Space {
    fn build(engine: &Engine, mode: Mode, use_signs: bool, options: &SearchOptions) -> Result<Space> {
        let shape = engine.shape;
        Ok(match mode {
            Mode::Exhaustive => {
                let size = orbit_size(shape, use_signs);
                let ceiling = 1u128 << options.ceiling_log2.min(100);
                if size > ceiling {
                    return Err(Error::OrbitTooLarge { size, ceiling });
                }
                Space::Orbit(Orbit::new(engine, use_signs, options.prune))
            }
            Mode::Randomized { seed, budget } => Space::Random(Sampler {
                shape,
                seed,
                budget,
                signs: use_signs,
            }),
            Mode::BoundedSupport { max_support } => {
                if max_support > 12 {
                    return Err(Error::OutOfRange(format!("support {max_support} is too large")));
                }
                Space::Bounded(Bounded::new(shape, max_support))
            }
        })
    }

    fn len(&self) -> u64 {
        match self {
            Space::Orbit(o) => o.len(),
            Space::Random(s) => s.budget,
            Space::Bounded(b) => b.len(),
        }
    }

    fn fill(&self, i: u64, bp: &mut Vec<u8>, qp: &mut Vec<u8>) -> u128 {
        match self {
            Space::Orbit(o) => o.fill(i, bp, qp),
            Space::Random(s) => s.fill(i, bp, qp),
            Space::Bounded(b) => b.fill(i, bp, qp),
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Space::Random(s) => Some(s.seed),
            _ => None,
        }
    }
}

#[derive(Default)]
struct Scratch {
    bp: Vec<u8>,
    qp: Vec<u8>,
    rows: Vec<PackedWord>,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))
}

type Key = (usize, usize, usize);

fn merge(mut a: BTreeMap<Key, u64>, b: BTreeMap<Key, u64>) -> BTreeMap<Key, u64> {
    for (k, i) in b {
        a.entry(k).and_modify(|v| *v = (*v).min(i)).or_insert(i);
    }
    a
}

fn sweep(engine: &Engine, space: &Space) -> BTreeMap<Key, u64> {
    (0..space.len())
        .into_par_iter()
        .fold(
            || (BTreeMap::new(), Scratch::default()),
            |(mut found, mut s): (BTreeMap<Key, u64>, Scratch), i| {
                let mask = space.fill(i, &mut s.bp, &mut s.qp);
                let key = engine.eval(&s.bp, &s.qp, mask, &mut s.rows);
                found.entry(key).or_insert(i);
                (found, s)
            },
        )
        .map(|(found, _)| found)
        .reduce(BTreeMap::new, merge)
}

fn witness_at(engine: &Engine, space: &Space, key: Key, i: u64) -> Witness {
    let mut s = Scratch::default();
    let mask = space.fill(i, &mut s.bp, &mut s.qp);
    engine.witness(key, &s.bp, &s.qp, mask, space.seed(), i)
}

/// Every dual type of C1 ∩ m(C2) reached by the monomials of `mode`.
pub fn enumerate_types(
    base1: &AdditiveCode,
    base2: &AdditiveCode,
    mode: Mode,
    use_signs: bool,
    options: &SearchOptions,
) -> Result<Atlas> {
    let engine = Engine::new(base1, base2)?;
    let pool = pool(options.workers)?;
    pool.install(|| {
        let space = Space::build(&engine, mode, use_signs, options)?;
        let found = sweep(&engine, &space);
        let types = found
            .into_iter()
            .map(|(key, i)| {
                let w = witness_at(&engine, &space, key, i);
                (w.dual_type, w)
            })
            .collect();
        Ok(Atlas {
            types,
            evaluated: space.len(),
            orbit_size: matches!(mode, Mode::Exhaustive).then(|| orbit_size(engine.shape, use_signs)),
        })
    })
}

/// Every log2 η(C1, m(C2)) reached by the monomials of `mode`.
pub fn enumerate_eta(
    base1: &AdditiveCode,
    base2: &AdditiveCode,
    mode: Mode,
    use_signs: bool,
    options: &SearchOptions,
) -> Result<BTreeMap<usize, Witness>> {
    Ok(enumerate_types(base1, base2, mode, use_signs, options)?.etas())
}

/// Looks for a monomial reaching `task.target`; stops at the first hit in
/// enumeration order.
pub fn search(task: &SearchTask) -> Result<Outcome> {
    let engine = Engine::new(&task.base1, &task.base2)?;
    if let Target::DualType(t) = task.target {
        task.base1.shape().check(t.shape())?;
    }
    let n = engine.shape.binary_length();
    let hit = |key: Key| match task.target {
        Target::DualType(t) => (t.gamma, t.delta, t.kappa) == key,
        Target::Log2Eta(e) => n - key.0 - 2 * key.1 == e,
    };
    let pool = pool(task.options.workers)?;
    pool.install(|| {
        let space = Space::build(&engine, task.mode, task.use_signs, &task.options)?;
        let found = (0..space.len())
            .into_par_iter()
            .map_init(Scratch::default, |s, i| {
                let mask = space.fill(i, &mut s.bp, &mut s.qp);
                (i, engine.eval(&s.bp, &s.qp, mask, &mut s.rows))
            })
            .find_first(|&(_, key)| hit(key));
        Ok(match (found, task.mode) {
            (Some((i, key)), _) => Outcome::Witness(witness_at(&engine, &space, key, i)),
            (None, Mode::Exhaustive) => Outcome::RefutedByExhaustion {
                orbit_size: orbit_size(engine.shape, task.use_signs),
                evaluated: space.len(),
            },
            (None, _) => Outcome::NotFound {
                evaluated: space.len(),
            },
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MixedMatrix;
    use crate::constructions::paper_matrix;

    fn code(name: &str) -> AdditiveCode {
        AdditiveCode::from_parity_check(&paper_matrix(name).unwrap())
    }

    fn opts(prune: bool) -> SearchOptions {
        SearchOptions {
            prune,
            ..SearchOptions::default()
        }
    }

    fn gdk(a: &Atlas) -> Vec<(usize, usize, usize)> {
        a.types.keys().map(|t| (t.gamma, t.delta, t.kappa)).collect()
    }

    #[test]
    fn permutation_tables() {
        let t = PermTable::new(4);
        assert_eq!(t.len(), 24);
        for i in 0..24 {
            assert_eq!(perm_rank(t.get(i)), i);
        }
        assert_eq!(PermTable::new(0).len(), 1);
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(derangements(4).len(), 9);
    }

    #[test]
    fn small_quaternary_classification() {
        let c1 = code("qlpc-t3-H1");
        let c2 = code("qlpc-t3-H2");
        let run = |a: &AdditiveCode, b: &AdditiveCode, signs: bool| {
            let pruned = gdk(&enumerate_types(a, b, Mode::Exhaustive, signs, &opts(true)).unwrap());
            let full = gdk(&enumerate_types(a, b, Mode::Exhaustive, signs, &opts(false)).unwrap());
            assert_eq!(pruned, full);
            full
        };
        assert_eq!(run(&c1, &c1, false), vec![(2, 1, 0)]);
        assert_eq!(run(&c1, &c1, true), vec![(2, 1, 0), (3, 1, 0)]);
        assert_eq!(run(&c2, &c2, false), vec![(0, 2, 0), (0, 3, 0)]);
        run(&c2, &c2, true);
        run(&c1, &c2, false);
        run(&c1, &c2, true);
        let e = code("sec4-ex-H2");
        assert_eq!(run(&e, &e, true), run(&e, &e, false));
    }

    #[test]
    fn witnesses_replay() {
        let c = code("sec4-ex-H2");
        let atlas = enumerate_types(&c, &c, Mode::Exhaustive, true, &opts(true)).unwrap();
        for w in atlas.types.values() {
            assert_eq!(replay(&c, &c, &w.monomial).unwrap(), (w.dual_type, w.log2_eta));
        }
    }

    #[test]
    fn identity_target_is_found_first() {
        let c = code("qlpc-t3-H2");
        let task = SearchTask {
            base1: c.clone(),
            base2: c.clone(),
            target: Target::DualType(dual(&c).code_type()),
            mode: Mode::Exhaustive,
            use_signs: false,
            options: opts(false),
        };
        match search(&task).unwrap() {
            Outcome::Witness(w) => assert!(w.monomial.is_identity()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        let c = AdditiveCode::zero(Shape::new(0, 12));
        let r = enumerate_types(&c, &c, Mode::Exhaustive, false, &SearchOptions::default());
        assert!(matches!(r, Err(Error::OrbitTooLarge { .. })));
    }

    #[test]
    fn randomized_runs_are_reproducible() {
        let h = MixedMatrix::quaternary(&[&[0, 0, 0, 0, 2, 2, 2, 2], &[1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 2, 3, 0, 1, 2, 3]]).unwrap();
        let c = AdditiveCode::from_parity_check(&h);
        let mode = Mode::Randomized { seed: 7, budget: 500 };
        let one = SearchOptions { workers: 1, ..opts(true) };
        let a = enumerate_types(&c, &c, mode, true, &one).unwrap();
        let b = enumerate_types(&c, &c, mode, true, &SearchOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.types.values().all(|w| w.seed == Some(7)));
    }

    #[test]
    fn bounded_support_counts() {
        let b = Bounded::new(Shape::new(3, 4), 3);
        // support 2: 3 + 6 transpositions; support 3: two 3-cycles on each triple.
        assert_eq!(b.len(), 3 + 6 + 2 + 4 * 2);
    }
}
