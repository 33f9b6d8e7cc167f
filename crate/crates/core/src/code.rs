//! Additive codes: membership, enumeration, Gray map, distances, monomial
//! transforms and parity extension.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{standard_reduce, CodeType, MixedMatrix, MixedVector, Shape, StandardForm};
use crate::error::{Error, Result};
use crate::packed::{self, PackedWord};

/// Codeword enumeration refuses codes with more than 2^24 words unless a
/// larger guard is passed explicitly.
pub const DEFAULT_GUARD_LOG2: usize = 24;

/// A subgroup of Z2^α × Z4^β held as canonical generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    form: StandardForm,
    ctype: CodeType,
}

impl AdditiveCode {
    /// The code generated by the rows of `gens`.
    pub fn new(gens: &MixedMatrix) -> Self {
        AdditiveCode::from_form(standard_reduce(gens))
    }

    pub(crate) fn from_form(form: StandardForm) -> Self {
        let ctype = form.code_type();
        AdditiveCode { form, ctype }
    }

    /// The code whose parity-check matrix is `h`, i.e. the annihilator of
    /// the row space of `h`.
    pub fn from_parity_check(h: &MixedMatrix) -> Self {
        crate::duality::dual(&AdditiveCode::new(h))
    }

    pub fn zero(shape: Shape) -> Self {
        AdditiveCode::new(&MixedMatrix::empty(shape))
    }

    /// The whole ambient group Z2^α × Z4^β.
    pub fn ambient(shape: Shape) -> Self {
        let mut rows = Vec::with_capacity(shape.len());
        for i in 0..shape.len() {
            let mut v = MixedVector::zero(shape);
            v.set(i, 1);
            rows.push(v);
        }
        AdditiveCode::new(&MixedMatrix::new(shape, rows).expect("shape"))
    }

    pub fn shape(&self) -> Shape {
        self.form.shape
    }

    pub fn code_type(&self) -> CodeType {
        self.ctype
    }

    pub fn form(&self) -> &StandardForm {
        &self.form
    }

    /// Canonical generators: order-four rows, then order-two rows.
    pub fn gens(&self) -> MixedMatrix {
        self.form.matrix()
    }

    pub fn log2_size(&self) -> usize {
        self.ctype.log2_size()
    }

    /// |C| = 2^γ·4^δ, if it fits in a u128.
    pub fn size(&self) -> Option<u128> {
        let k = self.log2_size();
        (k < 128).then(|| 1u128 << k)
    }

    pub fn contains(&self, v: &MixedVector) -> Result<bool> {
        self.shape().check(v.shape())?;
        Ok(self.form.contains(v))
    }

    /// Every codeword exactly once, with the default guard.
    pub fn enumerate(&self) -> Result<Codewords> {
        self.enumerate_guarded(DEFAULT_GUARD_LOG2)
    }

    pub fn enumerate_guarded(&self, guard_log2: usize) -> Result<Codewords> {
        check_guard(self.log2_size(), guard_log2)?;
        Ok(Codewords::new(&self.form))
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        self.shape() == other.shape() && self.gens().rows().iter().all(|g| other.form.contains(g))
    }

    /// Minimum Lee distance with the default guard.
    pub fn min_distance(&self) -> Result<u32> {
        self.min_distance_guarded(DEFAULT_GUARD_LOG2)
    }

    /// Minimum distance of the Gray image, taken as the least Lee weight of a
    /// nonzero codeword (Gray distance is the Lee weight of the difference).
    pub fn min_distance_guarded(&self, guard_log2: usize) -> Result<u32> {
        if self.log2_size() == 0 {
            return Err(Error::ZeroCode);
        }
        check_guard(self.log2_size(), guard_log2)?;
        if let Some(mut words) = PackedCodewords::new(&self.form) {
            let mut best = u32::MAX;
            words.next();
            for w in words {
                best = best.min(w.lee_weight());
            }
            return Ok(best);
        }
        Ok(Codewords::new(&self.form)
            .filter(|c| !c.is_zero())
            .map(|c| lee_weight(&c))
            .min()
            .expect("nonzero code"))
    }

    /// The set of Gray images, each as a bit vector.
    pub fn gray_image(&self, guard_log2: usize) -> Result<BTreeSet<Vec<u8>>> {
        Ok(self.enumerate_guarded(guard_log2)?.map(|c| gray_map(&c)).collect())
    }
}

fn check_guard(needed: usize, guard: usize) -> Result<()> {
    if needed > guard {
        Err(Error::GuardExceeded { needed, guard })
    } else {
        Ok(())
    }
}

/// Odometer over all Z4-combinations of order-four generators and
/// Z2-combinations of order-two generators. Each step adds one generator per
/// digit that changes; a wrapping digit returns to zero because 4g = 0 and
/// 2g = 0 respectively.
pub struct Codewords {
    gens: Vec<MixedVector>,
    radix: Vec<u8>,
    digits: Vec<u8>,
    current: MixedVector,
    done: bool,
}

impl Codewords {
    fn new(form: &StandardForm) -> Self {
        let mut gens = form.rows4.clone();
        gens.extend(form.rows2.iter().cloned());
        let radix = std::iter::repeat(4u8)
            .take(form.rows4.len())
            .chain(std::iter::repeat(2u8).take(form.rows2.len()))
            .collect();
        Codewords {
            digits: vec![0; gens.len()],
            gens,
            radix,
            current: MixedVector::zero(form.shape),
            done: false,
        }
    }
}

impl Iterator for Codewords {
    type Item = MixedVector;

    fn next(&mut self) -> Option<MixedVector> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut k = 0;
        loop {
            if k == self.gens.len() {
                self.done = true;
                break;
            }
            self.current = self.current.add(&self.gens[k]);
            self.digits[k] += 1;
            if self.digits[k] < self.radix[k] {
                break;
            }
            self.digits[k] = 0;
            k += 1;
        }
        Some(out)
    }
}

/// The same odometer on packed words.
pub(crate) struct PackedCodewords {
    gens: Vec<PackedWord>,
    radix: Vec<u8>,
    digits: Vec<u8>,
    current: PackedWord,
    done: bool,
}

impl PackedCodewords {
    pub(crate) fn new(form: &StandardForm) -> Option<Self> {
        if !packed::fits(form.shape) {
            return None;
        }
        let gens: Vec<PackedWord> = form
            .rows4
            .iter()
            .chain(form.rows2.iter())
            .map(|r| PackedWord::from_vector(r).expect("fits"))
            .collect();
        let radix = std::iter::repeat(4u8)
            .take(form.rows4.len())
            .chain(std::iter::repeat(2u8).take(form.rows2.len()))
            .collect();
        Some(PackedCodewords {
            digits: vec![0; gens.len()],
            gens,
            radix,
            current: PackedWord::ZERO,
            done: false,
        })
    }
}

impl Iterator for PackedCodewords {
    type Item = PackedWord;

    #[inline]
    fn next(&mut self) -> Option<PackedWord> {
        if self.done {
            return None;
        }
        let out = self.current;
        let mut k = 0;
        loop {
            if k == self.gens.len() {
                self.done = true;
                break;
            }
            self.current = self.current.add(self.gens[k]);
            self.digits[k] += 1;
            if self.digits[k] < self.radix[k] {
                break;
            }
            self.digits[k] = 0;
            k += 1;
        }
        Some(out)
    }
}

const GRAY: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

/// Φ(x, y) = (x, φ(y)) with φ(0)=00, φ(1)=01, φ(2)=11, φ(3)=10.
pub fn gray_map(v: &MixedVector) -> Vec<u8> {
    let mut out = Vec::with_capacity(v.shape().binary_length());
    out.extend_from_slice(v.bin());
    for &q in v.quat() {
        out.extend_from_slice(&GRAY[q as usize]);
    }
    out
}

pub fn lee_weight(v: &MixedVector) -> u32 {
    let q: u32 = v
        .quat()
        .iter()
        .map(|&x| match x {
            0 => 0,
            2 => 2,
            _ => 1,
        })
        .sum();
    v.bin().iter().map(|&b| b as u32).sum::<u32>() + q
}

/// Outcome of the perfect / extended-perfect certification of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectCertificate {
    pub binary_length: usize,
    pub log2_size: usize,
    pub min_distance: u32,
    /// Whether the radius-1 Gray balls tile F^n. `None` when the length is
    /// too large for the covering table.
    pub covering: Option<bool>,
    /// For extended codes: covering check after deleting the first Gray
    /// coordinate.
    pub punctured_covering: Option<bool>,
}

impl PerfectCertificate {
    /// Perfect 1-error-correcting: length 2^t − 1, |C| = 2^(n−t), d = 3.
    pub fn is_perfect(&self) -> bool {
        let n = self.binary_length;
        (n + 1).is_power_of_two()
            && self.log2_size + (n + 1).trailing_zeros() as usize == n
            && self.min_distance == 3
            && self.covering != Some(false)
    }

    /// Extended perfect: length 2^t, |C| = 2^(n−t−1), d = 4.
    pub fn is_extended_perfect(&self) -> bool {
        let n = self.binary_length;
        n.is_power_of_two()
            && self.log2_size + n.trailing_zeros() as usize + 1 == n
            && self.min_distance == 4
            && self.punctured_covering != Some(false)
    }
}

/// Largest Gray length for which covering is checked with a table.
pub const MAX_COVERING_LENGTH: usize = 24;

/// Computes the data needed to certify `code` as perfect or extended perfect.
pub fn certify_perfect(code: &AdditiveCode, guard_log2: usize) -> Result<PerfectCertificate> {
    let shape = code.shape();
    let n = shape.binary_length();
    let min_distance = code.min_distance_guarded(guard_log2)?;
    let (covering, punctured_covering) = if n <= MAX_COVERING_LENGTH && packed::fits(shape) {
        let words: Vec<u64> = PackedCodewords::new(code.form())
            .expect("fits")
            .map(|w| w.gray_bits(shape))
            .collect();
        (
            Some(tiles_radius_one(words.iter().copied(), n)),
            (n >= 1).then(|| tiles_radius_one(words.iter().map(|w| w >> 1), n - 1)),
        )
    } else {
        (None, None)
    };
    Ok(PerfectCertificate {
        binary_length: n,
        log2_size: code.log2_size(),
        min_distance,
        covering,
        punctured_covering,
    })
}

/// True when every vector of F^n is within distance one of exactly one word.
fn tiles_radius_one(words: impl Iterator<Item = u64>, n: usize) -> bool {
    let mut hits = vec![0u8; 1usize << n];
    for w in words {
        for cell in std::iter::once(w).chain((0..n).map(|k| w ^ (1 << k))) {
            let h = &mut hits[cell as usize];
            if *h > 0 {
                return false;
            }
            *h = 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// A coordinate permutation preserving the binary/quaternary split, followed
/// by negation of some quaternary coordinates.
///
/// Coordinates are global and 0-based here (binary `0..α`, quaternary
/// `α..α+β`); the text notation is 1-based. Applying the monomial to `v`
/// moves entry `i` to position `perm[i]` and then negates the flagged
/// quaternary positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    shape: Shape,
    perm: Vec<usize>,
    /// Indexed by local quaternary position.
    signs: Vec<bool>,
}

impl Monomial {
    pub fn identity(shape: Shape) -> Self {
        Monomial {
            shape,
            perm: (0..shape.len()).collect(),
            signs: vec![false; shape.beta],
        }
    }

    /// `perm` is the image of each global 0-based coordinate; `signs` lists
    /// global 0-based quaternary coordinates to negate.
    pub fn new(shape: Shape, perm: Vec<usize>, signs: &[usize]) -> Result<Self> {
        let n = shape.len();
        if perm.len() != n {
            return Err(Error::InvalidMonomial(format!(
                "permutation has {} points, shape needs {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || seen[p] {
                return Err(Error::InvalidMonomial("not a bijection".into()));
            }
            seen[p] = true;
            if (i < shape.alpha) != (p < shape.alpha) {
                return Err(Error::InvalidMonomial(format!(
                    "coordinate {} is sent across the binary/quaternary split",
                    i + 1
                )));
            }
        }
        let mut flags = vec![false; shape.beta];
        for &s in signs {
            if s < shape.alpha || s >= n {
                return Err(Error::InvalidMonomial(format!(
                    "sign flip on non-quaternary coordinate {}",
                    s + 1
                )));
            }
            flags[s - shape.alpha] = true;
        }
        Ok(Monomial {
            shape,
            perm,
            signs: flags,
        })
    }

    /// Builds a monomial from disjoint cycles of 1-based global coordinates.
    /// A cycle (a, b, c) sends a → b → c → a.
    pub fn from_cycles(shape: Shape, cycles: &[Vec<usize>], signs: &[usize]) -> Result<Self> {
        let n = shape.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for &c in cycle {
                if c == 0 || c > n {
                    return Err(Error::InvalidMonomial(format!(
                        "coordinate {c} outside 1..={n}"
                    )));
                }
                if touched[c - 1] {
                    return Err(Error::InvalidMonomial(format!(
                        "coordinate {c} appears in more than one cycle"
                    )));
                }
                touched[c - 1] = true;
            }
            let binary = cycle.iter().map(|&c| c <= shape.alpha);
            if binary.clone().any(|b| b) && binary.clone().any(|b| !b) {
                return Err(Error::InvalidMonomial(format!(
                    "cycle {cycle:?} mixes binary and quaternary coordinates"
                )));
            }
            for (k, &c) in cycle.iter().enumerate() {
                perm[c - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        for &s in signs {
            if s == 0 {
                return Err(Error::InvalidMonomial("coordinate 0".into()));
            }
        }
        let signs0: Vec<usize> = signs.iter().map(|&s| s - 1).collect();
        Monomial::new(shape, perm, &signs0)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Image of each global 0-based coordinate.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Global 0-based coordinates that are negated.
    pub fn sign_coords(&self) -> Vec<usize> {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(j, _)| self.shape.alpha + j)
            .collect()
    }

    pub fn has_signs(&self) -> bool {
        self.signs.iter().any(|&s| s)
    }

    pub fn is_identity(&self) -> bool {
        !self.has_signs() && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, v: &MixedVector) -> Result<MixedVector> {
        self.shape.check(v.shape())?;
        let mut out = MixedVector::zero(self.shape);
        for (i, &p) in self.perm.iter().enumerate() {
            out.set(p, v.get(i));
        }
        for (j, &s) in self.signs.iter().enumerate() {
            if s {
                let c = self.shape.alpha + j;
                let x = out.get(c);
                out.set(c, (4 - x) & 3);
            }
        }
        Ok(out)
    }

    pub fn apply_matrix(&self, m: &MixedMatrix) -> Result<MixedMatrix> {
        let rows = m.rows().iter().map(|r| self.apply(r)).collect::<Result<Vec<_>>>()?;
        MixedMatrix::new(m.shape(), rows)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Monomial) -> Result<Monomial> {
        self.shape.check(other.shape)?;
        let alpha = self.shape.alpha;
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let mut signs = self.signs.clone();
        for (j, &s) in other.signs.iter().enumerate() {
            if s {
                let target = self.perm[alpha + j] - alpha;
                signs[target] ^= true;
            }
        }
        Ok(Monomial {
            shape: self.shape,
            perm,
            signs,
        })
    }

    pub fn inverse(&self) -> Monomial {
        let alpha = self.shape.alpha;
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let mut signs = vec![false; self.shape.beta];
        for (j, &s) in self.signs.iter().enumerate() {
            if s {
                signs[perm[alpha + j] - alpha] = true;
            }
        }
        Monomial {
            shape: self.shape,
            perm,
            signs,
        }
    }

    /// Disjoint cycles (1-based, each starting at its least point, length ≥ 2).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for start in 0..self.perm.len() {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cycle.push(c + 1);
                c = self.perm[c];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Monomial {
    /// Cycle notation with `!k` suffixes for sign flips; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        for s in self.sign_coords() {
            write!(f, "!{}", s + 1)?;
        }
        Ok(())
    }
}

/// {m(c) : c ∈ C}, re-canonicalized.
pub fn apply_monomial(code: &AdditiveCode, m: &Monomial) -> Result<AdditiveCode> {
    Ok(AdditiveCode::new(&m.apply_matrix(&code.gens())?))
}

/// Adds a zero binary column in front and prepends the row (1…1 | 2…2).
/// If `h` is a parity-check matrix of dual type (α,β;γ,δ), the result has
/// dual type (α+1,β;γ+1,δ). The parity coordinate is binary coordinate 1.
pub fn extend_parity(h: &MixedMatrix) -> MixedMatrix {
    let shape = h.shape();
    let ext = Shape::new(shape.alpha + 1, shape.beta);
    let mut rows = vec![MixedVector::ones_twos(ext)];
    for r in h.rows() {
        let mut bin = Vec::with_capacity(ext.alpha);
        bin.push(0);
        bin.extend_from_slice(r.bin());
        rows.push(MixedVector::from_raw(bin, r.quat().to_vec()));
    }
    MixedMatrix::new(ext, rows).expect("shape")
}

/// Inverse of [`extend_parity`] up to row space: removes (1…1 | 2…2) from
/// the row space and deletes binary coordinate 1.
pub fn puncture_parity(h: &MixedMatrix) -> Result<MixedMatrix> {
    let shape = h.shape();
    if shape.alpha == 0 {
        return Err(Error::Precondition("puncturing needs a binary coordinate".into()));
    }
    let form = standard_reduce(h);
    let j = MixedVector::ones_twos(shape);
    if !form.contains(&j) {
        return Err(Error::NoParityRow);
    }
    let punct = Shape::new(shape.alpha - 1, shape.beta);
    let rows = form
        .matrix()
        .rows()
        .iter()
        .map(|g| {
            let g = if g.bin()[0] == 1 { g.add(&j) } else { g.clone() };
            MixedVector::from_raw(g.bin()[1..].to_vec(), g.quat().to_vec())
        })
        .collect();
    let m = MixedMatrix::new(punct, rows)?;
    Ok(standard_reduce(&m).matrix())
}
