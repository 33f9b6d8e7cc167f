//! Bit-plane representation of mixed vectors with at most 128 binary and 128
//! quaternary coordinates. Used by hot loops (orbit search, codeword
//! enumeration); every routine here has a slower counterpart on
//! [`MixedVector`] and the two are cross-checked in tests.

use crate::algebra::{MixedVector, Shape};

pub const MAX_PACKED: usize = 128;

/// A quaternary entry `x` is stored as bit `lo = x & 1` and `hi = x >> 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedWord {
    pub bin: u128,
    pub lo: u128,
    pub hi: u128,
}

pub fn fits(shape: Shape) -> bool {
    shape.alpha <= MAX_PACKED && shape.beta <= MAX_PACKED
}

impl PackedWord {
    pub const ZERO: PackedWord = PackedWord {
        bin: 0,
        lo: 0,
        hi: 0,
    };

    pub fn from_vector(v: &MixedVector) -> Option<PackedWord> {
        if !fits(v.shape()) {
            return None;
        }
        let mut w = PackedWord::ZERO;
        for (i, &b) in v.bin().iter().enumerate() {
            w.bin |= (b as u128 & 1) << i;
        }
        for (j, &q) in v.quat().iter().enumerate() {
            w.lo |= (q as u128 & 1) << j;
            w.hi |= ((q as u128 >> 1) & 1) << j;
        }
        Some(w)
    }

    pub fn to_vector(&self, shape: Shape) -> MixedVector {
        let bin = (0..shape.alpha).map(|i| ((self.bin >> i) & 1) as u8).collect();
        let quat = (0..shape.beta).map(|j| self.quat(j)).collect();
        MixedVector::from_raw(bin, quat)
    }

    #[inline]
    pub fn quat(&self, j: usize) -> u8 {
        ((((self.hi >> j) & 1) << 1) | ((self.lo >> j) & 1)) as u8
    }

    #[inline]
    pub fn bin_bit(&self, i: usize) -> u8 {
        ((self.bin >> i) & 1) as u8
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        (self.bin | self.lo | self.hi) == 0
    }

    #[inline]
    pub fn add(self, o: PackedWord) -> PackedWord {
        PackedWord {
            bin: self.bin ^ o.bin,
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi ^ (self.lo & o.lo),
        }
    }

    #[inline]
    pub fn neg(self) -> PackedWord {
        PackedWord {
            bin: self.bin,
            lo: self.lo,
            hi: self.hi ^ self.lo,
        }
    }

    #[inline]
    pub fn double(self) -> PackedWord {
        PackedWord {
            bin: 0,
            lo: 0,
            hi: self.lo,
        }
    }

    #[inline]
    pub fn scale(self, k: u8) -> PackedWord {
        match k & 3 {
            0 => PackedWord::ZERO,
            1 => self,
            2 => self.double(),
            _ => self.neg(),
        }
    }

    /// Hamming weight of the Gray image: φ(x) = (hi, hi ⊕ lo).
    #[inline]
    pub fn lee_weight(&self) -> u32 {
        self.bin.count_ones() + self.hi.count_ones() + (self.hi ^ self.lo).count_ones()
    }

    /// Gray image as an integer whose bit `k` is Gray coordinate `k`
    /// (binary coordinates first, then two bits per quaternary coordinate).
    /// Requires α + 2β ≤ 64.
    pub fn gray_bits(&self, shape: Shape) -> u64 {
        debug_assert!(shape.binary_length() <= 64);
        let mut out = self.bin as u64;
        let hl = self.hi ^ self.lo;
        for j in 0..shape.beta {
            let a = ((self.hi >> j) & 1) as u64;
            let b = ((hl >> j) & 1) as u64;
            out |= a << (shape.alpha + 2 * j);
            out |= b << (shape.alpha + 2 * j + 1);
        }
        out
    }
}

/// (γ, δ, κ) of the subgroup generated by `rows`. The slice is used as
/// scratch space.
pub fn fast_type(rows: &mut [PackedWord], shape: Shape) -> (usize, usize, usize) {
    let mut n = rows.len();
    let mut delta = 0;
    // Unit pivots: rows[..delta] become pivots, rows[delta..n] stay free.
    for c in 0..shape.beta {
        let bit = 1u128 << c;
        let Some(idx) = (delta..n).find(|&i| rows[i].lo & bit != 0) else {
            continue;
        };
        rows.swap(delta, idx);
        let mut p = rows[delta];
        if p.hi & bit != 0 {
            p = p.neg();
        }
        for r in rows[delta + 1..n].iter_mut() {
            let e = r.quat(c);
            if e != 0 {
                *r = r.add(p.scale(4 - e));
            }
        }
        delta += 1;
    }
    // Remaining rows: quaternary entries are even, so each row is the Z2
    // vector (hi bits, bin bits).
    let mut gamma = 0;
    let mut q_free: Vec<(u128, u128)> = rows[delta..n].iter().map(|r| (r.hi, r.bin)).collect();
    n = q_free.len();
    let mut bin_basis: Vec<u128> = Vec::with_capacity(n);
    for &(_, b) in &q_free {
        insert_xor_basis(&mut bin_basis, b);
    }
    let kappa = if shape.alpha == 0 { 0 } else { bin_basis.len() };
    // rank of the pairs: eliminate on hi first, then bin.
    let mut i = 0;
    while i < q_free.len() {
        let (h, b) = q_free[i];
        if h == 0 && b == 0 {
            q_free.swap_remove(i);
            continue;
        }
        gamma += 1;
        let (ph, pb) = (h, b);
        let (mask_h, mask_b) = if ph != 0 {
            (ph & ph.wrapping_neg(), 0)
        } else {
            (0, pb & pb.wrapping_neg())
        };
        for r in q_free[i + 1..].iter_mut() {
            if (r.0 & mask_h) != 0 || (r.1 & mask_b) != 0 {
                r.0 ^= ph;
                r.1 ^= pb;
            }
        }
        i += 1;
    }
    (gamma, delta, kappa)
}

fn insert_xor_basis(basis: &mut Vec<u128>, mut v: u128) {
    // basis is kept sorted by leading bit, descending
    for &b in basis.iter() {
        if v ^ b < v {
            v ^= b;
        }
    }
    if v != 0 {
        basis.push(v);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
}

/// Applies a coordinate map to a packed word: binary coordinate `i` moves to
/// `bin_perm[i]`, quaternary coordinate `j` moves to `quat_perm[j]`, then the
/// quaternary coordinates in `sign_mask` are negated.
#[inline]
pub fn permute<P: Copy + Into<usize>>(w: &PackedWord, bin_perm: &[P], quat_perm: &[P], sign_mask: u128) -> PackedWord {
    let mut out = PackedWord::ZERO;
    let mut b = w.bin;
    while b != 0 {
        let i = b.trailing_zeros() as usize;
        out.bin |= 1u128 << bin_perm[i].into();
        b &= b - 1;
    }
    let mut l = w.lo;
    while l != 0 {
        let j = l.trailing_zeros() as usize;
        out.lo |= 1u128 << quat_perm[j].into();
        l &= l - 1;
    }
    let mut h = w.hi;
    while h != 0 {
        let j = h.trailing_zeros() as usize;
        out.hi |= 1u128 << quat_perm[j].into();
        h &= h - 1;
    }
    // negation on odd entries flips hi
    out.hi ^= out.lo & sign_mask;
    out
}
